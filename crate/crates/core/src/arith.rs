//! Exact integer primitives: roots, perfect powers, 11-adic valuation,
//! quadratic residues and binomial coefficients.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision natural number.
pub type Nat = BigUint;
/// Arbitrary-precision signed integer.
pub type Int = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("root index must be at least 1")]
    ZeroRootIndex,
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("modulus must be at least 2, got {0}")]
    SmallModulus(u64),
    #[error("binomial C({p}, {r}) requested with r > p")]
    BinomialRange { p: u64, r: u64 },
    #[error("parity side condition needs an even modulus, got {0}")]
    ParityOnOddModulus(u64),
}

/// Returns `floor(v^(1/n))`.
///
/// The root is seeded from the bit length and refined with Newton steps; the
/// final answer is checked exactly so `r^n <= v < (r+1)^n` always holds.
pub fn int_nth_root(v: &Nat, n: u32) -> Result<Nat, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroRootIndex);
    }
    let mut r = v.nth_root(n);
    // exact correction; never expected to iterate more than once
    while pow(&r, n) > *v {
        r -= 1u32;
    }
    loop {
        let next = &r + 1u32;
        if pow(&next, n) <= *v {
            r = next;
        } else {
            break;
        }
    }
    Ok(r)
}

/// Returns `r` with `r^n == v`, if such an `r` exists.
pub fn as_perfect_nth_power(v: &Nat, n: u32) -> Option<Nat> {
    let r = int_nth_root(v, n).ok()?;
    (pow(&r, n) == *v).then_some(r)
}

/// Exact square root of a natural number, if it is a square.
pub fn as_perfect_square(v: &Nat) -> Option<Nat> {
    // cheap filter: squares are 0, 1, 4 or 9 mod 16
    let low = v.iter_u32_digits().next().unwrap_or(0) & 15;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

/// 11-adic valuation: `v = 11^e * unit` with `11 ∤ unit`.
pub fn val11(v: &Nat) -> Result<(u32, Nat), ArithError> {
    valuation(v, 11)
}

/// `p`-adic valuation of a positive integer for a small base `p >= 2`.
pub fn valuation(v: &Nat, p: u32) -> Result<(u32, Nat), ArithError> {
    if v.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    let base = Nat::from(p);
    let mut unit = v.clone();
    let mut e = 0;
    loop {
        let (q, r) = unit.div_rem(&base);
        if !r.is_zero() {
            return Ok((e, unit));
        }
        unit = q;
        e += 1;
    }
}

/// Residue class restriction on the root when enumerating squares or powers
/// modulo an even modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResidueClass {
    #[default]
    Any,
    Odd,
    Even,
}

impl ResidueClass {
    pub fn admits(self, r: u64) -> bool {
        match self {
            ResidueClass::Any => true,
            ResidueClass::Odd => r % 2 == 1,
            ResidueClass::Even => r.is_multiple_of(2),
        }
    }

    /// Residues `0..q` admitted by this class. Parity classes are only
    /// well-defined for even `q`.
    pub fn residues(self, q: u64) -> Result<Vec<u64>, ArithError> {
        if q < 2 {
            return Err(ArithError::SmallModulus(q));
        }
        if self != ResidueClass::Any && q % 2 == 1 {
            return Err(ArithError::ParityOnOddModulus(q));
        }
        Ok((0..q).filter(|&r| self.admits(r)).collect())
    }
}

/// The set `{ r^2 mod q : 0 <= r < q }`, sorted and duplicate-free.
pub fn squares_mod(q: u64) -> Result<Vec<u64>, ArithError> {
    squares_mod_in(q, ResidueClass::Any)
}

/// Squares modulo `q` of the roots admitted by `class`.
pub fn squares_mod_in(q: u64, class: ResidueClass) -> Result<Vec<u64>, ArithError> {
    let mut out: Vec<u64> = class
        .residues(q)?
        .into_iter()
        .map(|r| mul_mod(r, r, q))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Exact binomial coefficient `C(p, r)`.
pub fn binomial(p: u64, r: u64) -> Result<Nat, ArithError> {
    if r > p {
        return Err(ArithError::BinomialRange { p, r });
    }
    let r = r.min(p - r);
    let mut acc = Nat::one();
    for i in 0..r {
        // acc * (p - i) is divisible by (i + 1) at every step
        acc *= p - i;
        acc /= i + 1;
    }
    Ok(acc)
}

pub fn pow(base: &Nat, e: u32) -> Nat {
    num_traits::pow::Pow::pow(base, e)
}

pub fn pow_int(base: &Int, e: u32) -> Int {
    num_traits::pow::Pow::pow(base, e)
}

/// `11^e` as a natural number.
pub fn pow11(e: u32) -> Nat {
    pow(&Nat::from(11u32), e)
}

/// `base^e mod q` for machine-sized operands.
pub fn pow_mod_u64(base: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    let mut b = base % q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, q);
        }
        b = mul_mod(b, b, q);
        e >>= 1;
    }
    acc
}

pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

/// Residue of a natural number modulo a machine-sized modulus.
pub fn nat_mod(v: &Nat, q: u64) -> u64 {
    (v % q).to_u64().expect("residue below u64 modulus")
}

/// Residue of a signed integer in `0..q`.
pub fn int_mod(v: &Int, q: u64) -> u64 {
    v.mod_floor(&Int::from(q))
        .to_u64()
        .expect("residue below u64 modulus")
}

/// Smallest odd prime factor of `n`, if any.
pub fn smallest_odd_prime_factor(mut n: u32) -> Option<u32> {
    while n.is_multiple_of(2) && n > 0 {
        n /= 2;
    }
    if n <= 1 {
        return None;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    Some(n)
}

pub fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    smallest_odd_prime_factor(n) == Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(int_nth_root(&n(27), 3).unwrap(), n(3));
        assert_eq!(int_nth_root(&n(0), 5).unwrap(), n(0));
        // 443 * 443 * 443
        assert_eq!(443u64 * 443 * 443, 86_938_307);
        assert_eq!(int_nth_root(&n(86_938_307), 3).unwrap(), n(443));
        assert_eq!(int_nth_root(&n(86_938_306), 3).unwrap(), n(442));
        assert_eq!(int_nth_root(&n(4), 0), Err(ArithError::ZeroRootIndex));
    }

    #[test]
    fn perfect_power_examples() {
        assert_eq!(as_perfect_nth_power(&n(3375), 3), Some(n(15)));
        assert_eq!(as_perfect_nth_power(&n(10), 2), None);
        assert_eq!(as_perfect_nth_power(&n(1), 7), Some(n(1)));
        assert_eq!(as_perfect_nth_power(&n(4), 0), None);
        assert_eq!(as_perfect_square(&n(86_938_307 - 1331)), Some(n(9324)));
        assert_eq!(as_perfect_square(&n(2)), None);
    }

    #[test]
    fn val11_examples() {
        assert_eq!(val11(&n(1331)).unwrap(), (3, n(1)));
        assert_eq!(9324 % 11, 7);
        assert_eq!(val11(&n(9324)).unwrap(), (0, n(9324)));
        assert_eq!(9324u64 * 1331, 12_410_244);
        assert_eq!(val11(&n(12_410_244)).unwrap(), (3, n(9324)));
        assert_eq!(val11(&n(0)), Err(ArithError::ZeroValuation));
    }

    #[test]
    fn squares_mod_examples() {
        let brute: Vec<u64> = {
            let mut s: Vec<u64> = (0..11u64).map(|r| r * r % 11).collect();
            s.sort();
            s.dedup();
            s
        };
        assert_eq!(brute, vec![0, 1, 3, 4, 5, 9]);
        assert_eq!(squares_mod(11).unwrap(), brute);
        assert_eq!(squares_mod(2).unwrap(), vec![0, 1]);
        assert_eq!(squares_mod_in(8, ResidueClass::Odd).unwrap(), vec![1]);
        assert_eq!(squares_mod(1), Err(ArithError::SmallModulus(1)));
        assert_eq!(
            squares_mod_in(9, ResidueClass::Odd),
            Err(ArithError::ParityOnOddModulus(9))
        );
    }

    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut t: Vec<Vec<u128>> = vec![vec![1]];
        for p in 1..=rows {
            let prev = &t[p - 1];
            let mut row = vec![1u128; p + 1];
            for r in 1..p {
                row[r] = prev[r - 1] + prev[r];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_examples() {
        let t = pascal(13);
        assert_eq!(t[13][7], 1716);
        assert_eq!(binomial(3, 1).unwrap(), n(3));
        assert_eq!(binomial(5, 3).unwrap(), n(10));
        assert_eq!(binomial(13, 7).unwrap(), n(1716));
        assert_eq!(binomial(2, 3), Err(ArithError::BinomialRange { p: 2, r: 3 }));
    }

    #[test]
    fn binomial_matches_pascal_up_to_40() {
        let t = pascal(40);
        for p in 0..=40u64 {
            for r in 0..=p {
                assert_eq!(binomial(p, r).unwrap(), Nat::from(t[p as usize][r as usize]));
                if p > 0 && r > 0 && r < p {
                    assert_eq!(
                        binomial(p, r).unwrap(),
                        binomial(p - 1, r - 1).unwrap() + binomial(p - 1, r).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn odd_prime_factors() {
        assert_eq!(smallest_odd_prime_factor(16), None);
        assert_eq!(smallest_odd_prime_factor(12), Some(3));
        assert_eq!(smallest_odd_prime_factor(20), Some(5));
        assert_eq!(smallest_odd_prime_factor(49), Some(7));
        assert!(is_prime_u32(13) && !is_prime_u32(15) && !is_prime_u32(1));
    }

    proptest! {
        #[test]
        fn nth_root_brackets(v in 0u64..=1_000_000_000_000_000_000, e in 1u32..=30) {
            let v = n(v);
            let r = int_nth_root(&v, e).unwrap();
            prop_assert!(pow(&r, e) <= v);
            prop_assert!(pow(&(&r + 1u32), e) > v);
        }

        #[test]
        fn perfect_power_roundtrip(v in 0u64..=1_000_000, e in 1u32..=10) {
            let v = n(v);
            prop_assert_eq!(as_perfect_nth_power(&pow(&v, e), e), Some(v));
        }

        #[test]
        fn val11_roundtrip(v in 1u64..=u64::MAX) {
            let (e, unit) = val11(&n(v)).unwrap();
            prop_assert_eq!(pow11(e) * &unit, n(v));
            prop_assert_ne!(nat_mod(&unit, 11), 0);
        }

        #[test]
        fn perfect_square_matches_root(v in 0u64..=1_000_000_000_000) {
            let r = int_nth_root(&n(v), 2).unwrap();
            let expect = (&r * &r == n(v)).then_some(r);
            prop_assert_eq!(as_perfect_square(&n(v)), expect);
        }
    }
}
