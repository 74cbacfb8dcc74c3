//! Residue filters behind the "impossible modulo q" steps.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::{mul_mod, pow_mod_u64, squares_mod, ArithError, ResidueClass};
use crate::trace::{join, EliminationTrace, Outcome, Rule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("m = {0} is even; only odd m is handled")]
    EvenM(u32),
    #[error("exponent n must be positive")]
    ZeroN,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Parity restrictions on the residues of `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Sides {
    pub x: ResidueClass,
    pub y: ResidueClass,
}

impl Sides {
    pub const NONE: Sides = Sides {
        x: ResidueClass::Any,
        y: ResidueClass::Any,
    };
    /// x odd and y even, the configuration ruled out modulo 8.
    pub const X_ODD_Y_EVEN: Sides = Sides {
        x: ResidueClass::Odd,
        y: ResidueClass::Even,
    };
}

/// `{ x² + 11^m mod q }` and `{ yⁿ mod q }` over the admitted residues.
pub fn residue_sides(
    q: u64,
    m: u32,
    n: u32,
    sides: Sides,
) -> Result<(BTreeSet<u64>, BTreeSet<u64>), SieveError> {
    let c = pow_mod_u64(11, u64::from(m), q);
    let lhs = sides
        .x
        .residues(q)?
        .into_iter()
        .map(|x| (mul_mod(x, x, q) + c) % q)
        .collect();
    let rhs = sides
        .y
        .residues(q)?
        .into_iter()
        .map(|y| pow_mod_u64(y, u64::from(n), q))
        .collect();
    Ok((lhs, rhs))
}

/// True iff some admitted residues satisfy `x² + 11^m ≡ yⁿ (mod q)`.
pub fn feasible_mod(q: u64, m: u32, n: u32, sides: Sides) -> Result<bool, SieveError> {
    let (lhs, rhs) = residue_sides(q, m, n, sides)?;
    Ok(!lhs.is_disjoint(&rhs))
}

/// True iff odd `x` with even `y` is impossible modulo 8.
pub fn odd_x_excluded(m: u32, n: u32) -> Result<bool, SieveError> {
    check_m_n(m, n)?;
    Ok(!feasible_mod(8, m, n, Sides::X_ODD_Y_EVEN)?)
}

/// Trace of the modulo-8 parity argument forcing `x` even and `y` odd.
pub fn mod8_parity(m: u32, n: u32) -> Result<EliminationTrace, SieveError> {
    check_m_n(m, n)?;
    let (lhs, rhs) = residue_sides(8, m, n, Sides::X_ODD_Y_EVEN)?;
    let outcome = if lhs.is_disjoint(&rhs) {
        Outcome::Excluded
    } else {
        Outcome::Survives
    };
    Ok(EliminationTrace::new(Rule::Mod8Parity, outcome)
        .input("m", m)
        .input("n", n)
        .witness("case", "x odd, y even")
        .witness("lhs_mod_8", join(&lhs))
        .witness("rhs_mod_8", join(&rhs)))
}

/// The `n = 4` argument in the coprime case, for `m = 2k + 1`.
///
/// Coprime cofactors force `y² − x = 1` and `y² + x = 11^{2k+1}`, so
/// `2y² ≡ 1 (mod 11)`; the required square residue is not a square.
pub fn n4_excluded(k: u32) -> EliminationTrace {
    let q = 11;
    let m = 2 * u64::from(k) + 1;
    let two_y2 = (pow_mod_u64(11, m, q) + 1) % q;
    let inv2 = (1..q).find(|&i| mul_mod(2, i, q) == 1).expect("2 is invertible mod 11");
    let required = mul_mod(two_y2, inv2, q);
    let squares = squares_mod(q).expect("11 >= 2");
    let outcome = if squares.contains(&required) {
        Outcome::Survives
    } else {
        Outcome::Excluded
    };
    let mut t = EliminationTrace::new(Rule::N4Factorization, outcome)
        .input("k", k)
        .witness("cofactors", format!("y^2-x=1,y^2+x=11^{m}"))
        .witness("two_y2_mod_11", two_y2)
        .witness("required_y2_mod_11", required)
        .witness("squares_mod_11", join(&squares));
    if k == 0 {
        t = t.note("m = 1 lies outside m > 1");
    }
    t
}

fn check_m_n(m: u32, n: u32) -> Result<(), SieveError> {
    if m.is_multiple_of(2) {
        return Err(SieveError::EvenM(m));
    }
    if n == 0 {
        return Err(SieveError::ZeroN);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(q: u64, m: u32, n: u32, sides: Sides) -> bool {
        let c = (0..m).fold(1u64, |acc, _| acc * 11 % q);
        for x in 0..q {
            if !sides.x.admits(x) {
                continue;
            }
            for y in 0..q {
                if !sides.y.admits(y) {
                    continue;
                }
                let yn = (0..n).fold(1u64, |acc, _| acc * y % q);
                if (x * x + c) % q == yn {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn odd_x_examples() {
        assert!(odd_x_excluded(3, 3).unwrap());
        assert!(odd_x_excluded(5, 4).unwrap());
        assert!(!odd_x_excluded(3, 1).unwrap());
        assert_eq!(odd_x_excluded(4, 3), Err(SieveError::EvenM(4)));
    }

    #[test]
    fn odd_x_excluded_everywhere() {
        for m in (3..=99).step_by(2) {
            for n in 3..=24 {
                assert!(odd_x_excluded(m, n).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn mod8_witness() {
        let t = mod8_parity(3, 3).unwrap();
        assert_eq!(t.outcome, Outcome::Excluded);
        assert_eq!(t.witness["lhs_mod_8"], "4");
        assert_eq!(t.witness["rhs_mod_8"], "0");
    }

    #[test]
    fn n4_examples() {
        for k in [0, 1, 7, 40] {
            let t = n4_excluded(k);
            assert_eq!(t.outcome, Outcome::Excluded);
            assert_eq!(t.witness["required_y2_mod_11"], "6");
            assert_eq!(t.witness["squares_mod_11"], "0,1,3,4,5,9");
            assert_eq!(t.note.is_some(), k == 0);
        }
    }

    #[test]
    fn feasible_examples() {
        assert!(!feasible_mod(8, 3, 3, Sides::X_ODD_Y_EVEN).unwrap());
        assert!(feasible_mod(11, 3, 3, Sides::NONE).unwrap());
        for m in [1, 3, 5] {
            for n in [1, 3, 4] {
                assert!(feasible_mod(2, m, n, Sides::NONE).unwrap());
            }
        }
        assert!(matches!(
            feasible_mod(9, 3, 3, Sides::X_ODD_Y_EVEN),
            Err(SieveError::Arith(ArithError::ParityOnOddModulus(9)))
        ));
    }

    #[test]
    fn feasible_matches_all_pairs_oracle() {
        for q in 2..=50u64 {
            for m in [1, 3, 5, 7] {
                for n in 3..=8 {
                    let mut sides = vec![Sides::NONE];
                    if q % 2 == 0 {
                        sides.push(Sides::X_ODD_Y_EVEN);
                    }
                    for s in sides {
                        assert_eq!(
                            feasible_mod(q, m, n, s).unwrap(),
                            all_pairs(q, m, n, s),
                            "q={q} m={m} n={n} {s:?}"
                        );
                    }
                }
            }
        }
    }
}
