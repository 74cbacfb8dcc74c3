//! The case analysis for `x² + 11^{2k+1} = yⁿ`.
//!
//! Case I (`11 ∤ x`) factors the left side in the ring of integers of
//! Q(√−11) and compares √−11 coordinates. Case II (`11 | x`) strips powers
//! of 11 and lands either back in Case I, in the `m = 1` base equation, or
//! in `11X² + 1 = Yⁿ`. Every branch leaves an [`EliminationTrace`] that
//! [`replay`] can rebuild from the recorded inputs alone.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{
    as_perfect_nth_power, as_perfect_square, int_mod, is_prime_u32, mul_mod, nat_mod, pow11,
    smallest_odd_prime_factor, val11, Int, Nat,
};
use crate::bounds::{BoundsError, SearchBounds};
use crate::oracle::{cohn_scan_exponent, nagell_scan_exponent};
use crate::ring::{imag_of_odd_power, QuadInt};
use crate::sieve::{mod8_parity, n4_excluded, SieveError};
use crate::solution::{sort_solutions, Solution};
use crate::trace::{join, EliminationTrace, Outcome, Rule, TraceInputError};

pub use crate::trace::EliminationTrace as Trace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("m = {0} is even; only odd m is handled")]
    EvenM(u32),
    #[error("m must exceed 1")]
    MTooSmall,
    #[error("n = {0} is below 3")]
    NTooSmall(u32),
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("lambda = {lambda} outside 0 < lambda <= k = {k}")]
    LambdaRange { k: u32, lambda: u32 },
    #[error("11 does not divide x; the coprime case applies")]
    CoprimeToEleven,
    #[error("x must be positive")]
    ZeroX,
    #[error("unknown descent subcase {0:?}")]
    Subcase(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Sieve(#[from] SieveError),
    #[error(transparent)]
    TraceInput(#[from] TraceInputError),
}

/// Solutions and traces produced by [`solve`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub solutions: Vec<Solution>,
    pub traces: Vec<EliminationTrace>,
}

/// A reduced pair `(X, Y)` with `X² + 11^{m'} = Y^e` for the reduced
/// exponent of the branch that produced it.
type Pair = (Nat, Nat);

fn check_k(k: u32) -> Result<(), CaseError> {
    if k == 0 {
        Err(CaseError::KTooSmall)
    } else {
        Ok(())
    }
}

fn check_odd_prime(p: u32) -> Result<(), CaseError> {
    if p < 3 || !is_prime_u32(p) {
        Err(CaseError::NotOddPrime(p))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Integral form: ±x + 11^k √−11 = (a + b√−11)^p with b = ±11^k.

/// All `a` with `|a| ≤ a_max` and
/// `Σ C(p, 2r+1) a^{p−2r−1} (−11^{2k+1})^r = ±1`, sorted.
pub fn eq5_search(p: u32, k: u32, a_max: u64) -> Result<Vec<Int>, CaseError> {
    check_odd_prime(p)?;
    check_k(k)?;
    let b = Int::from(pow11(k));
    let mut hits: Vec<Int> = (0..=a_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let a = Int::from(a);
            let imag = imag_of_odd_power(&a, &b, p).expect("p is odd");
            let (sum, rem) = imag.div_rem(&b);
            debug_assert!(rem.is_zero());
            let hit = sum.abs().is_one();
            let neg = (hit && !a.is_zero()).then(|| -&a);
            hit.then_some(a).into_iter().chain(neg)
        })
        .collect();
    hits.sort();
    Ok(hits)
}

/// The `p = 3` instance `±1 = 3a² − 11^{2k+1}` decided exactly for all `a`.
pub fn eq5_p3_closed_form(k: u32) -> Vec<Int> {
    let c = Int::from(pow11(2 * k + 1));
    let mut hits = Vec::new();
    for s in [-1, 1] {
        let t: Int = &c + s;
        let (q, r) = t.div_rem(&Int::from(3));
        if !r.is_zero() || q.is_negative() {
            continue;
        }
        if let Some(a) = as_perfect_square(&q.to_biguint().expect("nonnegative")) {
            let a = Int::from(a);
            hits.push(-&a);
            hits.push(a);
        }
    }
    hits.sort();
    hits.dedup();
    hits
}

fn eq5_branch(p: u32, k: u32, a_max: u64) -> Result<(EliminationTrace, Vec<Pair>), CaseError> {
    let hits = eq5_search(p, k, a_max)?;
    let mut t = EliminationTrace::new(Rule::Eq5NoSolution, Outcome::ExcludedBounded)
        .input("p", p)
        .input("k", k)
        .input("a_max", a_max)
        .witness("b", format!("±11^{k}"))
        .witness("scan_hits", join(&hits))
        .note("bounded scan; both signs are cited as impossible in general");
    if p == 3 {
        let exact = eq5_p3_closed_form(k);
        t = t.witness("closed_form_hits", join(&exact)).note(
            "p = 3 reads 3a^2 = 11^(2k+1) ± 1, decided exactly by divisibility and square test",
        );
        if exact.is_empty() {
            t.outcome = Outcome::Excluded;
        }
    }
    let mut pairs = Vec::new();
    let b = Int::from(pow11(k));
    for a in hits.iter().filter(|a| !a.is_negative()) {
        let alpha = QuadInt::integral(a.clone(), b.clone());
        let (re, _) = alpha.pow(u64::from(p)).integral_parts().expect("integral base");
        let x = re.abs().to_biguint().expect("abs");
        let y = alpha.norm();
        if !x.is_zero() {
            pairs.push((x, y));
        }
    }
    if !pairs.is_empty() {
        t.outcome = Outcome::Survives;
        t = t.witness("pairs", join(pairs.iter().map(|(x, y)| format!("{x}:{y}"))));
    }
    Ok((t, pairs))
}

/// Trace of the integral-form branch for exponent `p`.
pub fn eq5_trace(p: u32, k: u32, a_max: u64) -> Result<EliminationTrace, CaseError> {
    Ok(eq5_branch(p, k, a_max)?.0)
}

// ---------------------------------------------------------------------------
// Half-integral form: x + 11^k √−11 = ((a + b√−11)/2)^p, a ≡ b ≡ 1 (mod 2).

/// For `p > 3` the half-integral form cannot occur: the p-th power of an
/// element with odd doubled coordinates keeps odd coordinates unless
/// `3 | p`, so it never equals `x + 11^k√−11`.
pub fn half_integral_power(p: u32) -> Result<EliminationTrace, CaseError> {
    check_odd_prime(p)?;
    // (1, 1) and (1, 3) represent both half-integral classes modulo 2
    let parities: Vec<String> = [(1, 1), (1, 3)]
        .iter()
        .map(|&(a, b)| {
            let w = QuadInt::make(a, b).expect("odd coordinates").pow(u64::from(p));
            let parity = if w.is_integral() { "even" } else { "odd" };
            format!("({a},{b}):{parity}")
        })
        .collect();
    let outcome = if parities.iter().all(|s| s.ends_with("odd")) {
        Outcome::Excluded
    } else {
        Outcome::Reduced
    };
    Ok(EliminationTrace::new(Rule::HalfIntegralPower, outcome)
        .input("p", p)
        .witness("power_coordinate_parity", parities.join(","))
        .witness("p_mod_3", p % 3))
}

/// `b = ±1`: `3a² − 11 = ±8·11^k`.
///
/// Both signs are decided exactly (`3a² ∈ {11 + 8·11^k, 11 − 8·11^k}`),
/// backed by a bounded scan and, for `k ≥ 2`, the residue witness
/// `3a² ≡ 11 (mod 121)` having no solution.
pub fn b_pm1_branch(k: u32, a_max: u64) -> Result<EliminationTrace, CaseError> {
    check_k(k)?;
    let rhs = Int::from(pow11(k)) * 8;
    let candidates: Vec<Int> = [Int::from(11) + &rhs, Int::from(11) - &rhs].into();
    let mut exact = Vec::new();
    for t in &candidates {
        let (q, r) = t.div_rem(&Int::from(3));
        if t.is_negative() || !r.is_zero() {
            continue;
        }
        if let Some(a) = as_perfect_square(&q.to_biguint().expect("nonnegative")) {
            exact.push(a);
        }
    }
    let scan_hits: Vec<u64> = (0..a_max.div_ceil(2))
        .into_par_iter()
        .map(|i| 2 * i + 1)
        .filter(|&a| {
            let lhs: Int = Int::from(a) * Int::from(a) * 3 - 11;
            lhs.abs() == rhs
        })
        .collect();
    let mut t = EliminationTrace::new(
        Rule::BPm1,
        if exact.is_empty() {
            Outcome::Excluded
        } else {
            Outcome::Survives
        },
    )
    .input("k", k)
    .input("a_max", a_max)
    .witness("three_a2_candidates", join(&candidates))
    .witness("exact_a", join(&exact))
    .witness("scan_hits", join(&scan_hits))
    .note("closed by exact determination; the parity argument does not apply since a odd makes 3a^2 - 11 even");
    if k >= 2 {
        let targets: Vec<u64> = candidates.iter().map(|c| int_mod(c, 121)).collect();
        let residues: Vec<u64> = {
            let mut r: Vec<u64> = (0..121).map(|a| mul_mod(3, mul_mod(a, a, 121), 121)).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let reachable = targets.iter().any(|t| residues.binary_search(t).is_ok());
        t = t
            .witness("target_mod_121", join(targets.iter().collect::<std::collections::BTreeSet<_>>()))
            .witness("target_is_3a2_mod_121", reachable);
    }
    Ok(t)
}

/// `b = ±11^λ`: `±8·11^{k−λ} = 3a² − 11^{2λ+1}`.
///
/// For `λ < k` the trace is excluded modulo 11: the right side forces
/// `11 | a`, hence `11 | y`, which contradicts `11 ∤ x`. For `λ = k` the
/// outcome is [`Outcome::Reduced`] to `±8 = 3a² − 11^{2k+1}`.
pub fn b_pm11lambda_branch(k: u32, lambda: u32) -> Result<EliminationTrace, CaseError> {
    if lambda == 0 || lambda > k {
        return Err(CaseError::LambdaRange { k, lambda });
    }
    let t = EliminationTrace::new(Rule::BPm11Lambda, Outcome::Reduced)
        .input("k", k)
        .input("lambda", lambda);
    if lambda == k {
        return Ok(t.witness("reduced", format!("±8 = 3a^2 - 11^{}", 2 * k + 1)));
    }
    let q = 11;
    let tail = pow11(2 * lambda + 1);
    let side = Nat::from(8u32) * pow11(k - lambda);
    let targets: std::collections::BTreeSet<u64> = [
        nat_mod(&(&tail + &side), q),
        (q + nat_mod(&tail, q) - nat_mod(&side, q)) % q,
    ]
    .into();
    let a_residues: Vec<u64> = (0..q)
        .filter(|&a| targets.contains(&mul_mod(3, mul_mod(a, a, q), q)))
        .collect();
    // y = (a² + 11b²)/4 with 4 invertible mod 11
    let y_residues: std::collections::BTreeSet<u64> =
        a_residues.iter().map(|&a| mul_mod(mul_mod(a, a, q), 3, q)).collect();
    let excluded = y_residues.iter().all(|&r| r == 0);
    let mut t = t
        .witness("three_a2_mod_11", join(&targets))
        .witness("a_mod_11", join(&a_residues))
        .witness("y_mod_11", join(&y_residues));
    if excluded {
        t.outcome = Outcome::Excluded;
        t = t.witness("contradiction", "11 | y forces 11 | x");
    }
    Ok(t)
}

fn aux3a2_branch(k: u32) -> Result<(EliminationTrace, Vec<Pair>), CaseError> {
    check_k(k)?;
    let a = aux3a2_minus(k);
    let plus_mod_3 = nat_mod(&(pow11(2 * k + 1) + 8u32), 3);
    let mut t = EliminationTrace::new(Rule::Bugeaud3a2plus8, Outcome::Excluded)
        .input("k", k)
        .witness("minus_sign_a", a.as_ref().map(Nat::to_string).unwrap_or_default())
        .witness("plus_sign_mod_3", plus_mod_3);
    let mut pairs = Vec::new();
    if let Some(a) = a {
        // b = 11^k; the cube of (a + b√−11)/2 has rational part ∓x
        let alpha = QuadInt::make(Int::from(a), Int::from(pow11(k))).expect("a and 11^k are odd");
        let (re, _) = alpha.pow(3).integral_parts().expect("cube lands in Z[√−11]");
        let x = re.abs().to_biguint().expect("abs");
        let y = alpha.norm();
        t.outcome = Outcome::Survives;
        t = t.witness("x", &x).witness("y", &y);
        pairs.push((x, y));
    }
    Ok((t, pairs))
}

/// `3a² + 8 = 11^{2k+1}` decided exactly for one `k`, with the
/// mod-3 witness against `3a² − 8 = 11^{2k+1}`.
pub fn aux3a2_trace(k: u32) -> Result<EliminationTrace, CaseError> {
    Ok(aux3a2_branch(k)?.0)
}

fn aux3a2_minus(k: u32) -> Option<Nat> {
    let t = pow11(2 * k + 1) - 8u32;
    let (q, r) = t.div_rem(&Nat::from(3u32));
    if r.is_zero() {
        as_perfect_square(&q)
    } else {
        None
    }
}

fn aux3a2_plus(k: u32) -> Option<Nat> {
    let t = pow11(2 * k + 1) + 8u32;
    let (q, r) = t.div_rem(&Nat::from(3u32));
    if r.is_zero() {
        as_perfect_square(&q)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxSolution {
    #[serde(with = "crate::decimal")]
    pub a: Nat,
    #[serde(with = "crate::decimal")]
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aux3a2Report {
    #[serde(with = "crate::decimal")]
    pub k_max: u32,
    /// `3a² + 8 = 11^{2k+1}`, sorted by `(k, a)`.
    pub solutions: Vec<AuxSolution>,
    /// `3a² − 8 = 11^{2k+1}`.
    pub plus_sign_solutions: Vec<AuxSolution>,
    /// Distinct values of `(11^{2k+1} + 8) mod 3` over the scanned range.
    #[serde(with = "crate::decimal::vec")]
    pub plus_sign_mod_3: Vec<u64>,
    pub note: String,
}

/// All `(a, k)` with `3a² + 8 = 11^{2k+1}`, `1 ≤ k ≤ k_max`, `a > 0`.
pub fn search_3a2_plus_8(k_max: u32) -> Result<Aux3a2Report, CaseError> {
    check_k(k_max)?;
    let rows: Vec<(u32, Option<Nat>, Option<Nat>, u64)> = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let residue = nat_mod(&(pow11(2 * k + 1) + 8u32), 3);
            (k, aux3a2_minus(k), aux3a2_plus(k), residue)
        })
        .collect();
    let mut solutions = Vec::new();
    let mut plus = Vec::new();
    let mut residues = Vec::new();
    for (k, minus_a, plus_a, residue) in rows {
        solutions.extend(minus_a.map(|a| AuxSolution { a, k }));
        plus.extend(plus_a.map(|a| AuxSolution { a, k }));
        residues.push(residue);
    }
    residues.sort_unstable();
    residues.dedup();
    Ok(Aux3a2Report {
        k_max,
        solutions,
        plus_sign_solutions: plus,
        plus_sign_mod_3: residues,
        note: "bounded scan; the unconditional statement is a published result".into(),
    })
}

// ---------------------------------------------------------------------------
// Case II: 11 | x.

/// Which exponent attains `min(2u, 2k+1, nv)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subcase {
    /// `2u` is minimal.
    I,
    /// `2k + 1` is minimal.
    II,
    /// `nv` is strictly minimal.
    III,
}

impl Subcase {
    fn label(self) -> &'static str {
        match self {
            Subcase::I => "i",
            Subcase::II => "ii",
            Subcase::III => "iii",
        }
    }

    fn parse(s: &str) -> Result<Self, CaseError> {
        match s {
            "i" => Ok(Subcase::I),
            "ii" => Ok(Subcase::II),
            "iii" => Ok(Subcase::III),
            other => Err(CaseError::Subcase(other.to_owned())),
        }
    }
}

/// Classifies explicit valuations `u = v₁₁(x)`, `v = v₁₁(y)` for
/// `m = 2k + 1`. Ties with `nv` go to the other term.
pub fn classify_valuations(u: u32, k: u32, n: u32, v: u32) -> Subcase {
    let (two_u, m, nv) = (2 * u64::from(u), 2 * u64::from(k) + 1, u64::from(n) * u64::from(v));
    if nv < two_u.min(m) {
        Subcase::III
    } else if two_u < m {
        Subcase::I
    } else {
        Subcase::II
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducedInstance {
    /// `X² + 11^{m'} = Yⁿ` with `11 ∤ X`.
    Coprime {
        #[serde(with = "crate::decimal")]
        x: Nat,
        #[serde(with = "crate::decimal")]
        m: u32,
    },
    /// `11·X'² + 1 = Yⁿ` with `X' = 11^{u−k−1}·X`.
    Nagell {
        #[serde(with = "crate::decimal")]
        x: Nat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descent {
    pub u: u32,
    pub k: u32,
    pub n: u32,
    /// `v₁₁(y)` when `n` divides `v₁₁(x² + 11^m)`; otherwise no `y` exists.
    pub v: Option<u32>,
    pub subcase: Subcase,
    pub reduced: ReducedInstance,
}

/// 11-adic descent of `x` with `11 | x` for `m = 2k + 1`.
pub fn descend_11(x: &Nat, m: u32, n: u32) -> Result<Descent, CaseError> {
    if m.is_multiple_of(2) {
        return Err(CaseError::EvenM(m));
    }
    if n < 3 {
        return Err(CaseError::NTooSmall(n));
    }
    if x.is_zero() {
        return Err(CaseError::ZeroX);
    }
    let k = (m - 1) / 2;
    let (u, unit) = val11(x).expect("x > 0");
    if u == 0 {
        return Err(CaseError::CoprimeToEleven);
    }
    // the two terms have valuations of different parity, so no cancellation
    let total = (2 * u).min(m);
    let v = (total % n == 0).then(|| total / n);
    let subcase = classify_valuations(u, k, n, v.unwrap_or(u32::MAX));
    let reduced = if u <= k {
        ReducedInstance::Coprime {
            x: unit,
            m: 2 * (k - u) + 1,
        }
    } else {
        ReducedInstance::Nagell {
            x: unit * pow11(u - k - 1),
        }
    };
    Ok(Descent {
        u,
        k,
        n,
        v,
        subcase,
        reduced,
    })
}

/// Trace for one descent subcase of `(m, n)`. Subcase I needs `u ≤ k`.
pub fn descent_trace(
    m: u32,
    n: u32,
    subcase: Subcase,
    u: Option<u32>,
) -> Result<EliminationTrace, CaseError> {
    check_m_n(m, n)?;
    let k = (m - 1) / 2;
    let t = EliminationTrace::new(Rule::ValuationDescent, Outcome::Excluded)
        .input("m", m)
        .input("n", n)
        .input("subcase", subcase.label());
    Ok(match subcase {
        Subcase::I => {
            let u = u.ok_or_else(|| CaseError::Subcase("i without u".into()))?;
            if u == 0 || u > k {
                return Err(CaseError::Subcase(format!("i with u = {u}, k = {k}")));
            }
            let t = t
                .input("u", u)
                .witness("mod_11", "X^2 + 11^(2(k-u)+1) is prime to 11, so nv = 2u");
            if (2 * u) % n != 0 {
                t.witness("nv_equals_2u", "no integer v")
            } else {
                let mut t = t
                    .witness("v", 2 * u / n)
                    .witness("reduced_m", 2 * (k - u) + 1);
                t.outcome = Outcome::Reduced;
                t
            }
        }
        Subcase::II => {
            let t = t
                .input("u", format!(">={}", k + 1))
                .witness("mod_11", "11^(2u-2k-1) X^2 + 1 is prime to 11, so nv = 2k+1");
            if !m.is_multiple_of(n) {
                t.witness("nv_equals_2k_plus_1", "no integer v")
            } else {
                let mut t = t
                    .witness("v", m / n)
                    .witness("reduced", "11(11^(u-k-1) X)^2 + 1 = Y^n");
                t.outcome = Outcome::Reduced;
                t
            }
        }
        Subcase::III => t
            .witness("mod_11", "with nv strictly minimal both left terms are divisible by 11 but Y is not")
            .witness("ties", "nv = 2u is subcase i, nv = 2k+1 is subcase ii"),
    })
}

/// Bounded confirmation that `11X² + 1 = Yⁿ` has no solution.
pub fn nagell_trace(n: u32, x_max: u64) -> EliminationTrace {
    let hits = nagell_scan_exponent(x_max, n);
    let outcome = if hits.is_empty() {
        Outcome::ExcludedBounded
    } else {
        Outcome::Survives
    };
    EliminationTrace::new(Rule::NagellLemma, outcome)
        .input("n", n)
        .input("x_max", x_max)
        .witness("hits", join(hits.iter().map(|h| format!("{}:{}", h.x, h.y))))
        .note("cited result for odd n >= 3; bounded confirmation")
}

fn cohn_branch(n: u32, x_max: u64) -> (EliminationTrace, Vec<Pair>) {
    let hits = cohn_scan_exponent(x_max, n);
    let outcome = if hits.is_empty() {
        Outcome::ExcludedBounded
    } else {
        Outcome::Survives
    };
    let t = EliminationTrace::new(Rule::CohnBase, outcome)
        .input("n", n)
        .input("x_max", x_max)
        .witness("hits", join(hits.iter().map(|h| format!("{}:{}", h.x, h.y))))
        .note("complete list (4,3), (58,15) for n = 3 is cited to Cohn; bounded confirmation");
    (t, hits.into_iter().map(|h| (h.x, h.y)).collect())
}

/// Bounded scan of `X² + 11 = Yⁿ`, the `m = 1` base reached by descent.
pub fn cohn_trace(n: u32, x_max: u64) -> EliminationTrace {
    cohn_branch(n, x_max).0
}

/// A reduced solution for exponent `reduced` lifts to exponent `n` only if
/// `Y` is a perfect `(n / reduced)`-th power.
pub fn exponent_reduction(n: u32, reduced: u32, y: &Nat) -> EliminationTrace {
    let t_exp = n / reduced;
    let root = as_perfect_nth_power(y, t_exp);
    let outcome = if root.is_some() {
        Outcome::Survives
    } else {
        Outcome::Excluded
    };
    EliminationTrace::new(Rule::ExponentReduction, outcome)
        .input("n", n)
        .input("reduced_n", reduced)
        .input("y_reduced", y)
        .witness("t", t_exp)
        .witness("root", root.map(|r| r.to_string()).unwrap_or_default())
}

// ---------------------------------------------------------------------------

fn check_m_n(m: u32, n: u32) -> Result<(), CaseError> {
    if m.is_multiple_of(2) {
        return Err(CaseError::EvenM(m));
    }
    if m < 3 {
        return Err(CaseError::MTooSmall);
    }
    if n < 3 {
        return Err(CaseError::NTooSmall(n));
    }
    Ok(())
}

/// The exponent the analysis runs on: the smallest odd prime factor of
/// `n`, or 4 when `n` is a power of two.
pub fn reduced_exponent(n: u32) -> u32 {
    smallest_odd_prime_factor(n).unwrap_or(4)
}

/// Case I for `X² + 11^{2k+1} = Yⁿ` with `11 ∤ X`.
fn coprime_case(
    k: u32,
    n: u32,
    bounds: &SearchBounds,
    context: &str,
    traces: &mut Vec<EliminationTrace>,
) -> Result<Vec<Pair>, CaseError> {
    let e = reduced_exponent(n);
    let mut push = |t: EliminationTrace, form: &str| {
        let ctx = if form.is_empty() {
            context.to_owned()
        } else {
            format!("{context}, {form}")
        };
        traces.push(t.in_context(ctx));
    };
    let mut pairs = Vec::new();
    if e == 4 {
        push(n4_excluded(k), "n = 4");
    } else {
        let form3 = "integral form";
        let form4 = "half-integral form";
        let (t, found) = eq5_branch(e, k, bounds.a_max)?;
        push(t, form3);
        pairs.extend(found);
        if e == 3 {
            push(b_pm1_branch(k, bounds.a_max)?, form4);
            for lambda in 1..=k {
                push(b_pm11lambda_branch(k, lambda)?, form4);
            }
            let (t, found) = aux3a2_branch(k)?;
            push(t, form4);
            pairs.extend(found);
        } else {
            push(half_integral_power(e)?, form4);
        }
    }
    if e == n {
        return Ok(pairs);
    }
    let mut lifted = Vec::new();
    for (x, y) in pairs {
        let t = exponent_reduction(n, e, &y);
        if let Some(root) = t.witness.get("root").filter(|r| !r.is_empty()) {
            lifted.push((x, root.parse().expect("decimal root")));
        }
        push(t, "lift");
    }
    Ok(lifted)
}

/// Runs the full case analysis for `(m, n)`.
///
/// Returns every solution the analysis produces (each verified exactly)
/// together with the traces of all branches.
pub fn solve(m: u32, n: u32, bounds: &SearchBounds) -> Result<Resolution, CaseError> {
    check_m_n(m, n)?;
    let k = (m - 1) / 2;
    let mut traces = vec![mod8_parity(m, n)?.in_context("parity: x even, y odd")];
    let mut solutions = Vec::new();

    let ctx = format!("case I (11 ∤ x), m = {m}, n = {n}");
    for (x, y) in coprime_case(k, n, bounds, &ctx, &mut traces)? {
        solutions.push(Solution { x, y, m, n });
    }

    let ctx = format!("case II (11 | x), m = {m}, n = {n}");
    for u in 1..=k {
        let t = descent_trace(m, n, Subcase::I, Some(u))?;
        let reduced = t.outcome == Outcome::Reduced;
        traces.push(t.in_context(format!("{ctx}, subcase i, u = {u}")));
        if !reduced {
            continue;
        }
        let v = 2 * u / n;
        let m_red = 2 * (k - u) + 1;
        let lift_ctx = format!("{ctx}, subcase i, u = {u}, reduced m = {m_red}");
        let pairs = if m_red == 1 {
            let (t, pairs) = cohn_branch(n, bounds.x_max);
            traces.push(t.in_context(lift_ctx));
            pairs
        } else {
            coprime_case(k - u, n, bounds, &lift_ctx, &mut traces)?
        };
        for (x, y) in pairs {
            solutions.push(Solution {
                x: x * pow11(u),
                y: y * pow11(v),
                m,
                n,
            });
        }
    }

    let t = descent_trace(m, n, Subcase::II, None)?;
    let reduced = t.outcome == Outcome::Reduced;
    traces.push(t.in_context(format!("{ctx}, subcase ii")));
    if reduced {
        let t = nagell_trace(n, bounds.x_max);
        for hit in nagell_scan_exponent(bounds.x_max, n) {
            // Y^n = 11 X'^2 + 1 with x = 11^{k+1} X', y = 11^{m/n} Y
            solutions.push(Solution {
                x: hit.x * pow11(k + 1),
                y: hit.y * pow11(m / n),
                m,
                n,
            });
        }
        traces.push(t.in_context(format!("{ctx}, subcase ii")));
    }
    traces.push(descent_trace(m, n, Subcase::III, None)?.in_context(format!("{ctx}, subcase iii")));

    solutions.retain(Solution::holds);
    sort_solutions(&mut solutions);
    Ok(Resolution { solutions, traces })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("{0} trace could not be rebuilt: {1}")]
    Rebuild(Rule, CaseError),
    #[error("{rule} trace differs from its replay")]
    Mismatch {
        rule: Rule,
        recorded: Box<EliminationTrace>,
        replayed: Box<EliminationTrace>,
    },
}

/// Re-runs the rule named by a trace on its recorded inputs.
pub fn rebuild(trace: &EliminationTrace) -> Result<EliminationTrace, CaseError> {
    let t = trace;
    Ok(match t.rule {
        Rule::Mod8Parity => mod8_parity(t.get("m")?, t.get("n")?)?,
        Rule::N4Factorization => n4_excluded(t.get("k")?),
        Rule::Eq5NoSolution => eq5_trace(t.get("p")?, t.get("k")?, t.get("a_max")?)?,
        Rule::BPm1 => b_pm1_branch(t.get("k")?, t.get("a_max")?)?,
        Rule::BPm11Lambda => b_pm11lambda_branch(t.get("k")?, t.get("lambda")?)?,
        Rule::Bugeaud3a2plus8 => aux3a2_trace(t.get("k")?)?,
        Rule::NagellLemma => nagell_trace(t.get("n")?, t.get("x_max")?),
        Rule::ValuationDescent => {
            let subcase = Subcase::parse(&t.get::<String>("subcase")?)?;
            let u = match subcase {
                Subcase::I => Some(t.get("u")?),
                _ => None,
            };
            descent_trace(t.get("m")?, t.get("n")?, subcase, u)?
        }
        Rule::CohnBase => cohn_trace(t.get("n")?, t.get("x_max")?),
        Rule::HalfIntegralPower => half_integral_power(t.get("p")?)?,
        Rule::ExponentReduction => {
            exponent_reduction(t.get("n")?, t.get("reduced_n")?, &t.get("y_reduced")?)
        }
    })
}

/// Checks that a trace reproduces exactly under replay.
pub fn replay(trace: &EliminationTrace) -> Result<(), ReplayError> {
    let replayed = rebuild(trace).map_err(|e| ReplayError::Rebuild(trace.rule, e))?;
    if replayed.same_finding(trace) {
        Ok(())
    } else {
        Err(ReplayError::Mismatch {
            rule: trace.rule,
            recorded: Box::new(trace.clone()),
            replayed: Box::new(replayed),
        })
    }
}
