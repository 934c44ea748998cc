//! Integer decomposition of Ξ over characters induced from the trivial
//! characters of cyclic subgroups.
//!
//! For every class of cyclic subgroups C ≤ G, (1_C)^G is the permutation
//! character counting conjugators into C, scaled by 1/|C|. Ξ is expressed
//! as Σ coeff_C·(1_C)^G with integer coefficients by solving the class-value
//! system with Hermite-style integer row reduction; solvability is
//! guaranteed, so a failure is a hard error. The solution is verified by
//! exact re-evaluation before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

type Z = BigInt;

/// (1_C)^G as nonnegative integer class values.
#[derive(Debug, Clone)]
pub struct InducedCharacter {
    pub subgroup: Subgroup,
    pub values: Vec<u64>,
}

/// Ξ = Σ coefficients[k]·(1_{C_k})^G, with the residual of the verifying
/// re-evaluation (always the zero vector).
#[derive(Debug, Clone)]
pub struct ArtinDecomposition {
    pub subgroups: Vec<Subgroup>,
    pub induced: Vec<InducedCharacter>,
    pub coefficients: Vec<Z>,
    pub residual: Vec<Z>,
}

/// Induce the trivial character of C up to G by direct counting:
/// value at class c is |{x ∈ G : x·rep_c·x⁻¹ ∈ C}| / |C|.
pub fn induce_trivial(group: &FiniteGroup, subgroup: &Subgroup) -> Result<InducedCharacter> {
    let classes = group.classes();
    let n = group.order() as usize;
    let mut values = Vec::with_capacity(classes.num_classes());
    for &rep in &classes.class_reps {
        let mut count = 0u64;
        for x in 0..n {
            let conj = group.mul_idx(group.mul_idx(x, rep), group.inv_idx(x));
            if subgroup.contains(conj) {
                count += 1;
            }
        }
        if count % subgroup.order() != 0 {
            return Err(Error::NonIntegralInducedValue);
        }
        values.push(count / subgroup.order());
    }
    Ok(InducedCharacter { subgroup: subgroup.clone(), values })
}

/// Solve A·x = b over ℤ with integer Gaussian (gcd) row reduction.
///
/// Columns without a pivot get coefficient 0, which fixes one particular
/// solution deterministically when the system is underdetermined.
fn hnf_solve(a: &[Vec<Z>], b: &[Z]) -> Result<Vec<Z>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Z>> = (0..rows)
        .map(|r| {
            let mut row = a[r].clone();
            row.push(b[r].clone());
            row
        })
        .collect();
    let width = cols + 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        // euclidean elimination: repeatedly reduce the column by its
        // absolutely smallest nonzero entry until one entry remains
        loop {
            let pivot = (rank..rows)
                .filter(|&r| !aug[r][col].is_zero())
                .min_by_key(|&r| aug[r][col].abs());
            let Some(pivot) = pivot else {
                break;
            };
            aug.swap(rank, pivot);
            let mut finished = true;
            for r in rank + 1..rows {
                if aug[r][col].is_zero() {
                    continue;
                }
                let q = aug[r][col].div_floor(&aug[rank][col]);
                for c in 0..width {
                    let delta = &q * &aug[rank][c];
                    aug[r][c] -= delta;
                }
                if !aug[r][col].is_zero() {
                    finished = false;
                }
            }
            if finished {
                break;
            }
        }
        if rank < rows && !aug[rank][col].is_zero() {
            if aug[rank][col].is_negative() {
                for c in 0..width {
                    aug[rank][c] = -std::mem::take(&mut aug[rank][c]);
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
    }
    // rows below the rank must be consistent
    for r in rank..rows {
        if !aug[r][cols].is_zero() {
            return Err(Error::NoIntegerSolution);
        }
    }
    // integral back substitution over the pivot rows
    let mut x = vec![Z::zero(); cols];
    for &(row, col) in pivots.iter().rev() {
        let mut num = aug[row][cols].clone();
        for c in col + 1..cols {
            num -= &aug[row][c] * &x[c];
        }
        let (quot, rem) = num.div_rem(&aug[row][col]);
        if !rem.is_zero() {
            return Err(Error::NoIntegerSolution);
        }
        x[col] = quot;
    }
    Ok(x)
}

/// Decompose Ξ (given by its class values) as an integer combination of the
/// induced trivial characters of the cyclic subgroup classes.
pub fn artin_decompose(group: &FiniteGroup, xi_values: &[i64]) -> Result<ArtinDecomposition> {
    let classes = group.classes();
    let r = classes.num_classes();
    assert_eq!(xi_values.len(), r);
    let subgroups = group.cyclic_subgroups_up_to_conjugacy();
    let induced: Vec<InducedCharacter> =
        subgroups.iter().map(|c| induce_trivial(group, c)).collect::<Result<_>>()?;

    let a: Vec<Vec<Z>> =
        (0..r).map(|c| induced.iter().map(|ind| Z::from(ind.values[c])).collect()).collect();
    let b: Vec<Z> = xi_values.iter().map(|&v| Z::from(v)).collect();
    let coefficients = hnf_solve(&a, &b)?;

    // verify by exact re-evaluation
    let residual: Vec<Z> = (0..r)
        .map(|c| {
            let total: Z = coefficients
                .iter()
                .zip(&induced)
                .map(|(coef, ind)| coef * Z::from(ind.values[c]))
                .sum();
            total - &b[c]
        })
        .collect();
    if residual.iter().any(|v| !v.is_zero()) {
        return Err(Error::NoIntegerSolution);
    }
    Ok(ArtinDecomposition { subgroups, induced, coefficients, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{close_group, DEFAULT_CAP};
    use crate::perm::Permutation;
    use crate::xi::xi_values;

    fn cyclic(n: usize) -> FiniteGroup {
        let cycle: Vec<u32> = (1..n as u32).chain(std::iter::once(0)).collect();
        close_group(n, vec![Permutation::from_images(cycle).unwrap()], DEFAULT_CAP).unwrap()
    }

    fn s3() -> FiniteGroup {
        close_group(
            3,
            vec![
                Permutation::from_cycle_string(3, "(0 1 2)").unwrap(),
                Permutation::from_cycle_string(3, "(0 1)").unwrap(),
            ],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn induced_values_for_s3() {
        let g = s3();
        let subs = g.cyclic_subgroups_up_to_conjugacy();
        let values: Vec<Vec<u64>> =
            subs.iter().map(|c| induce_trivial(&g, c).unwrap().values).collect();
        // trivial subgroup induces the regular character
        assert_eq!(values[0], vec![6, 0, 0]);
        assert_eq!(values[1], vec![3, 1, 0]);
        assert_eq!(values[2], vec![2, 0, 2]);
    }

    #[test]
    fn inducing_from_the_whole_cyclic_group_gives_ones() {
        let g = cyclic(4);
        let subs = g.cyclic_subgroups_up_to_conjugacy();
        let full = subs.last().unwrap();
        assert_eq!(full.order(), 4);
        assert_eq!(induce_trivial(&g, full).unwrap().values, vec![1, 1, 1, 1]);
    }

    #[test]
    fn golden_artin_coefficients() {
        // S₃: Ξ = (6, 12, 18) = −8·(6,0,0) + 12·(3,1,0) + 9·(2,0,2)
        let g = s3();
        let dec = artin_decompose(&g, &xi_values(&g)).unwrap();
        let coeffs: Vec<i64> = dec.coefficients.iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(coeffs, vec![-8, 12, 9]);
        assert!(dec.residual.iter().all(Zero::is_zero));

        // C₂: Ξ = (2, 4) = −1·regular + 4·all-ones
        let g = cyclic(2);
        let dec = artin_decompose(&g, &xi_values(&g)).unwrap();
        let coeffs: Vec<i64> = dec.coefficients.iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(coeffs, vec![-1, 4]);

        // C₁: Ξ = (1) = 1·(1)
        let g = cyclic(1);
        let dec = artin_decompose(&g, &xi_values(&g)).unwrap();
        assert_eq!(dec.coefficients, vec![Z::from(1)]);
    }

    #[test]
    fn reevaluation_holds_for_various_groups() {
        let s4 = close_group(
            4,
            vec![
                Permutation::from_cycle_string(4, "(0 1 2 3)").unwrap(),
                Permutation::from_cycle_string(4, "(0 1)").unwrap(),
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        for g in [cyclic(12), cyclic(9), s4] {
            let dec = artin_decompose(&g, &xi_values(&g)).unwrap();
            assert!(dec.residual.iter().all(Zero::is_zero));
            assert_eq!(dec.subgroups.len(), dec.coefficients.len());
        }
    }

    #[test]
    fn induced_characters_are_genuine() {
        use num_rational::BigRational;
        let g = s3();
        let t = crate::chartable::character_table(&g).unwrap();
        for sub in g.cyclic_subgroups_up_to_conjugacy() {
            let ind = induce_trivial(&g, &sub).unwrap();
            let vals: Vec<BigRational> =
                ind.values.iter().map(|&v| BigRational::from(Z::from(v))).collect();
            for m in t.multiplicities_of_rational_values(&g, &vals) {
                let z = m.as_integer().unwrap();
                assert!(!z.is_negative(), "induced character had negative multiplicity");
            }
        }
    }

    #[test]
    fn hnf_solve_detects_failures() {
        // 2x = 1 has no integer solution
        let a = vec![vec![Z::from(2)]];
        assert!(matches!(hnf_solve(&a, &[Z::from(1)]), Err(Error::NoIntegerSolution)));
        // inconsistent system
        let a = vec![vec![Z::from(1)], vec![Z::from(0)]];
        assert!(matches!(
            hnf_solve(&a, &[Z::from(0), Z::from(1)]),
            Err(Error::NoIntegerSolution)
        ));
        // solvable 2×2
        let a = vec![vec![Z::from(2), Z::from(1)], vec![Z::from(0), Z::from(3)]];
        let x = hnf_solve(&a, &[Z::from(7), Z::from(9)]).unwrap();
        assert_eq!(x, vec![Z::from(2), Z::from(3)]);
    }
}
