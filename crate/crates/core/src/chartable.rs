//! Exact irreducible character tables of small finite groups.
//!
//! The computation runs in two phases. Over 𝔽ₚ (p ≡ 1 mod exponent(G) and
//! p > 2√|G|) the class-algebra structure constant matrices are split into
//! a common eigenbasis; each one-dimensional common eigenspace carries the
//! central character ωᵪ of one irreducible. The modular values are then
//! lifted to exact cyclotomic integers: the multiplicity of each eigenvalue
//! ζₑᵏ of a representation matrix is recovered by an inverse discrete
//! Fourier sum over power maps, and those multiplicities are small
//! nonnegative integers read off from their residues.
//!
//! Row and column orthogonality are verified exactly before a table is
//! returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::is_prime;
use crate::cyclotomic::{reduce_root_sum, Cyclotomic};
use crate::error::{Error, Result};
use crate::fp;
use crate::group::FiniteGroup;

type Z = BigInt;
type Q = BigRational;

/// A class function: one cyclotomic value per conjugacy class, all sharing
/// the ambient root order (the group exponent for table rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn from_values(values: Vec<Cyclotomic>) -> Self {
        assert!(!values.is_empty());
        ClassFunction { values }
    }

    pub fn from_rationals(order: u64, values: &[Q]) -> Self {
        ClassFunction {
            values: values.iter().map(|q| Cyclotomic::from_rational(order, q.clone())).collect(),
        }
    }

    pub fn from_integers(order: u64, values: &[i64]) -> Self {
        ClassFunction {
            values: values.iter().map(|&v| Cyclotomic::from_integer(order, v)).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.values[0].order()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The exact character table of a group: one row per irreducible, columns
/// indexed by conjugacy class in class order. Rows are canonically sorted
/// by degree, then descending on value vectors, so the trivial character
/// leads its degree block and reports are byte-stable.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    order_of_unity: u64,
    prime: u64,
    degrees: Vec<u64>,
    irreducibles: Vec<ClassFunction>,
    /// `root_multisets[row][class][k]` = multiplicity of ζₑᵏ among the
    /// eigenvalues of the representing matrix; Σₖ = degree.
    root_multisets: Vec<Vec<Vec<u32>>>,
}

impl CharacterTable {
    pub fn order_of_unity(&self) -> u64 {
        self.order_of_unity
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn num_rows(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.irreducibles[row].values[class]
    }

    /// Index of the trivial character (degree 1, all values 1).
    pub fn trivial_row(&self) -> usize {
        let one = Cyclotomic::one(self.order_of_unity);
        self.irreducibles
            .iter()
            .position(|row| row.values.iter().all(|v| *v == one))
            .expect("every table contains the trivial character")
    }

    /// Re-run the exact row and column orthogonality verification.
    pub fn verify_orthogonality(&self, group: &FiniteGroup) -> Result<()> {
        validate_orthogonality(group, self, self.prime)
    }

    /// Multiplicities [f, χᵢ] of a rational-valued class function against
    /// every row, computed as (1/|G|)·Σ_c |K_c|·f(c)·χᵢ(c⁻¹-class). Using the
    /// inverse-class value for the conjugate is valid because table rows are
    /// characters: conj(χ(g)) = χ(g⁻¹).
    pub fn multiplicities_of_rational_values(
        &self,
        group: &FiniteGroup,
        f: &[Q],
    ) -> Vec<Cyclotomic> {
        let classes = group.classes();
        let r = classes.num_classes();
        assert_eq!(f.len(), r);
        let inv_map = group.power_map(-1);
        let order_q = Q::from(Z::from(group.order()));
        (0..self.irreducibles.len())
            .map(|row| {
                let mut acc = Cyclotomic::zero(self.order_of_unity);
                for c in 0..r {
                    if f[c].is_zero() {
                        continue;
                    }
                    let weight = Q::from(Z::from(classes.class_sizes[c])) * &f[c] / &order_q;
                    let term = self.irreducibles[row].values[inv_map[c]].scale(&weight);
                    acc = acc.add(&term).expect("shared ambient order");
                }
                acc
            })
            .collect()
    }
}

/// Class-algebra structure constants: `a[i][j][k]` counts pairs
/// (x, y) ∈ Kᵢ×Kⱼ with x·y = z for one fixed z ∈ K_k; independent of the
/// chosen z.
pub fn class_mult_coefficients(group: &FiniteGroup) -> Vec<Vec<Vec<u32>>> {
    let classes = group.classes();
    let r = classes.num_classes();
    let n = group.order() as usize;
    let mut a = vec![vec![vec![0u32; r]; r]; r];
    for (k, &z) in classes.class_reps.iter().enumerate() {
        for x in 0..n {
            let y = group.mul_idx(group.inv_idx(x), z);
            a[classes.class_of[x]][classes.class_of[y]][k] += 1;
        }
    }
    a
}

fn admissible_prime(group: &FiniteGroup, p: u64) -> bool {
    // p ≡ 1 (mod e) so 𝔽ₚ contains the e-th roots of unity, and
    // p > 2√|G| so lifted integers are determined by their residues.
    is_prime(p) && (p - 1) % group.exponent() == 0 && p * p > 4 * group.order()
}

/// Smallest admissible prime for the modular phase; p = 2 by convention for
/// the trivial group.
pub fn dixon_prime(group: &FiniteGroup) -> u64 {
    if group.order() == 1 {
        return 2;
    }
    next_admissible_prime(group, 1)
}

/// Smallest admissible prime strictly greater than `after`.
pub fn next_admissible_prime(group: &FiniteGroup, after: u64) -> u64 {
    if group.order() == 1 && after < 2 {
        return 2;
    }
    // steps of e keep p ≡ 1 (mod e); search always terminates by Dirichlet
    let e = group.exponent();
    let mut p = after / e * e + 1;
    loop {
        if p > after && admissible_prime(group, p) {
            return p;
        }
        p += e;
    }
}

/// The common eigenbasis of all class matrices over 𝔽ₚ, one row per
/// irreducible, normalized so the identity-class coordinate is 1. Each row
/// is the central character ωᵪ mod p.
pub fn modular_character_basis(group: &FiniteGroup, p: u64) -> Result<Vec<Vec<u64>>> {
    let classes = group.classes();
    let r = classes.num_classes();
    if r == 1 {
        return Ok(vec![vec![1 % p]]);
    }
    let tensor = class_mult_coefficients(group);
    // start with the full space and intersect eigenspaces matrix by matrix
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![full];
    for i in 0..r {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let class_matrix: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| tensor[i][j][k] as u64 % p).collect())
            .collect();
        let mut next = Vec::with_capacity(subspaces.len());
        for sub in subspaces {
            if sub.len() == 1 {
                next.push(sub);
            } else {
                next.extend(split_subspace(&class_matrix, &sub, p)?);
            }
        }
        subspaces = next;
    }
    if subspaces.len() != r || subspaces.iter().any(|s| s.len() != 1) {
        return Err(Error::SplitFailure { p });
    }
    let mut basis = Vec::with_capacity(r);
    for sub in subspaces {
        let w = &sub[0];
        // the identity-class coordinate of a central character is 1
        if w[0] == 0 {
            return Err(Error::SplitFailure { p });
        }
        let scale = fp::inv(p, w[0]);
        basis.push(w.iter().map(|&x| fp::mul(p, x, scale)).collect());
    }
    Ok(basis)
}

/// Split an invariant subspace into the eigenspaces of one class matrix.
fn split_subspace(
    matrix: &[Vec<u64>],
    basis: &[Vec<u64>],
    p: u64,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = matrix.len();
    let d = basis.len();
    // images M·bⱼ ...
    let targets: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..r)
                .map(|j| {
                    (0..r).fold(0u64, |acc, k| fp::add(p, acc, fp::mul(p, matrix[j][k], b[k])))
                })
                .collect()
        })
        .collect();
    // ... expressed in subspace coordinates (consistent by invariance)
    let b_mat: Vec<Vec<u64>> = (0..r).map(|row| (0..d).map(|col| basis[col][row]).collect()).collect();
    let coords = fp::solve_full_rank(&b_mat, &targets, p).ok_or(Error::SplitFailure { p })?;
    let restricted: Vec<Vec<u64>> =
        (0..d).map(|row| (0..d).map(|col| coords[col][row]).collect()).collect();

    let cp = fp::charpoly(&restricted, p);
    let mut pieces = Vec::new();
    let mut covered = 0usize;
    for lambda in fp::poly_roots(&cp, p) {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|row| {
                (0..d)
                    .map(|col| {
                        if row == col {
                            fp::sub(p, restricted[row][col], lambda)
                        } else {
                            restricted[row][col]
                        }
                    })
                    .collect()
            })
            .collect();
        let kernel = fp::nullspace(&shifted, p);
        covered += kernel.len();
        let lifted: Vec<Vec<u64>> = kernel
            .iter()
            .map(|z| {
                (0..r)
                    .map(|row| {
                        (0..d).fold(0u64, |acc, t| {
                            fp::add(p, acc, fp::mul(p, z[t], basis[t][row]))
                        })
                    })
                    .collect()
            })
            .collect();
        pieces.push(lifted);
    }
    // the class algebra acts semisimply with eigenvalues in 𝔽ₚ, so the
    // eigenspaces must exhaust the subspace; anything else is a bad prime
    if covered != d {
        return Err(Error::SplitFailure { p });
    }
    Ok(pieces)
}

/// Lift a modular eigenbasis to the exact character table.
pub fn lift_table(
    group: &FiniteGroup,
    basis: &[Vec<u64>],
    p: u64,
) -> Result<CharacterTable> {
    let classes = group.classes();
    let r = classes.num_classes();
    let e = group.exponent();
    let n = group.order();
    if basis.len() != r {
        return Err(Error::LiftInconsistency {
            p,
            detail: format!("expected {r} eigenvectors, got {}", basis.len()),
        });
    }
    let inv_map = group.power_map(-1);
    let z = fp::pow(p, fp::primitive_root(p), (p - 1) / e);
    let n_mod = n % p;

    let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<Vec<u32>>)> = Vec::with_capacity(r);
    for omega in basis {
        // |G|/χ(1)² = Σ_c ω_c·ω_{c*}/|K_c|
        let mut s = 0u64;
        for c in 0..r {
            let term = fp::mul(p, omega[c], omega[inv_map[c]]);
            s = fp::add(p, s, fp::mul(p, term, fp::inv(p, classes.class_sizes[c] % p)));
        }
        if s == 0 {
            return Err(Error::LiftInconsistency { p, detail: "degree sum vanished".into() });
        }
        let deg_sq = fp::mul(p, n_mod, fp::inv(p, s));
        let degree = (1..=(p - 1) / 2)
            .find(|&t| fp::mul(p, t, t) == deg_sq)
            .ok_or_else(|| Error::LiftInconsistency { p, detail: "no degree square root".into() })?;
        if degree * degree > n {
            return Err(Error::LiftInconsistency {
                p,
                detail: format!("degree {degree} exceeds √|G|"),
            });
        }
        // χ̄(g_c) = χ(1)·ω_c/|K_c|
        let chi_mod: Vec<u64> = (0..r)
            .map(|c| {
                fp::mul(p, degree, fp::mul(p, omega[c], fp::inv(p, classes.class_sizes[c] % p)))
            })
            .collect();

        let mut values = Vec::with_capacity(r);
        let mut multisets = Vec::with_capacity(r);
        for c in 0..r {
            let o = classes.rep_orders[c];
            // eigenvalues of the matrix at g_c are o-th roots of unity;
            // recover multiplicities by the inverse Fourier sum over ⟨g_c⟩
            let z_o = fp::pow(p, z, e / o);
            let z_o_inv = fp::inv(p, z_o);
            let o_inv = fp::inv(p, o % p);
            let chi_pows: Vec<u64> =
                (0..o).map(|t| chi_mod[group.power_map(t as i64)[c]]).collect();
            let mut multiset = vec![0u32; e as usize];
            let mut total = 0u64;
            for j in 0..o {
                let mut acc = 0u64;
                let step = fp::pow(p, z_o_inv, j);
                let mut w = 1u64;
                for &cp in &chi_pows {
                    acc = fp::add(p, acc, fp::mul(p, cp, w));
                    w = fp::mul(p, w, step);
                }
                let m = fp::mul(p, acc, o_inv);
                if m > degree {
                    return Err(Error::LiftInconsistency {
                        p,
                        detail: format!("eigenvalue multiplicity {m} exceeds degree {degree}"),
                    });
                }
                total += m;
                multiset[(j * (e / o)) as usize] = m as u32;
            }
            if total != degree {
                return Err(Error::LiftInconsistency {
                    p,
                    detail: format!("multiplicities sum to {total}, degree is {degree}"),
                });
            }
            values.push(Cyclotomic::from_root_multiset(e, &multiset));
            multisets.push(multiset);
        }
        rows.push((degree, values, multisets));
    }

    // canonical order: degree ascending, then value vectors descending so
    // the trivial character leads its degree block
    rows.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            for (va, vb) in a.1.iter().zip(&b.1) {
                match va.cmp_coeff_lex(vb) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let degrees: Vec<u64> = rows.iter().map(|r| r.0).collect();
    if degrees.iter().map(|&d| d * d).sum::<u64>() != n {
        return Err(Error::LiftInconsistency { p, detail: "Σ degree² ≠ |G|".into() });
    }
    let table = CharacterTable {
        order_of_unity: e,
        prime: p,
        degrees,
        irreducibles: rows.iter().map(|r| ClassFunction::from_values(r.1.clone())).collect(),
        root_multisets: rows.into_iter().map(|r| r.2).collect(),
    };
    validate_orthogonality(group, &table, p)?;
    Ok(table)
}

/// Exact row and column orthogonality, computed on the root multisets so
/// products of values are integer convolutions.
fn validate_orthogonality(group: &FiniteGroup, table: &CharacterTable, p: u64) -> Result<()> {
    let classes = group.classes();
    let r = classes.num_classes();
    let e = table.order_of_unity;
    let inv_map = group.power_map(-1);
    let n = group.order();

    let nonzeros: Vec<Vec<Vec<(usize, u64)>>> = table
        .root_multisets
        .iter()
        .map(|row| {
            row.iter()
                .map(|ms| {
                    ms.iter()
                        .enumerate()
                        .filter(|(_, &m)| m != 0)
                        .map(|(k, &m)| (k, m as u64))
                        .collect()
                })
                .collect()
        })
        .collect();

    let check_reduces_to = |acc: &[i64], expected: i64| -> bool {
        let acc_z: Vec<Z> = acc.iter().map(|&x| Z::from(x)).collect();
        let reduced = reduce_root_sum(e, &acc_z);
        reduced[0] == Z::from(expected) && reduced[1..].iter().all(Zero::is_zero)
    };

    // row orthogonality: Σ_c |K_c|·χᵢ(c)·χⱼ(c*) = δᵢⱼ·|G|
    for i in 0..r {
        for j in i..r {
            let mut acc = vec![0i64; e as usize];
            for c in 0..r {
                let size = classes.class_sizes[c] as i64;
                for &(ka, ma) in &nonzeros[i][c] {
                    for &(kb, mb) in &nonzeros[j][inv_map[c]] {
                        acc[(ka + kb) % e as usize] += size * (ma * mb) as i64;
                    }
                }
            }
            let expected = if i == j { n as i64 } else { 0 };
            if !check_reduces_to(&acc, expected) {
                return Err(Error::LiftInconsistency {
                    p,
                    detail: format!("row orthogonality failed at ({i}, {j})"),
                });
            }
        }
    }

    // column orthogonality: Σ_χ χ(g_c)·χ(g_d⁻¹) = δ_{cd}·|C_G(g_c)|
    for c in 0..r {
        for d in c..r {
            let mut acc = vec![0i64; e as usize];
            for i in 0..r {
                for &(ka, ma) in &nonzeros[i][c] {
                    for &(kb, mb) in &nonzeros[i][inv_map[d]] {
                        acc[(ka + kb) % e as usize] += (ma * mb) as i64;
                    }
                }
            }
            let expected = if c == d { (n / classes.class_sizes[c]) as i64 } else { 0 };
            if !check_reduces_to(&acc, expected) {
                return Err(Error::LiftInconsistency {
                    p,
                    detail: format!("column orthogonality failed at ({c}, {d})"),
                });
            }
        }
    }
    Ok(())
}

fn trivial_group_table() -> CharacterTable {
    CharacterTable {
        order_of_unity: 1,
        prime: 2,
        degrees: vec![1],
        irreducibles: vec![ClassFunction::from_values(vec![Cyclotomic::one(1)])],
        root_multisets: vec![vec![vec![1]]],
    }
}

/// Character table with an explicitly chosen admissible prime.
pub fn character_table_with_prime(group: &FiniteGroup, p: u64) -> Result<CharacterTable> {
    if group.order() == 1 {
        return Ok(trivial_group_table());
    }
    assert!(admissible_prime(group, p), "prime {p} is not admissible for this group");
    let basis = modular_character_basis(group, p)?;
    lift_table(group, &basis, p)
}

/// Character table with the default prime; on a split or lift failure the
/// next admissible prime is tried, up to three retries.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    if group.order() == 1 {
        return Ok(trivial_group_table());
    }
    let mut p = dixon_prime(group);
    let mut last = None;
    for _ in 0..4 {
        match character_table_with_prime(group, p) {
            Ok(t) => return Ok(t),
            Err(err @ (Error::SplitFailure { .. } | Error::LiftInconsistency { .. })) => {
                last = Some(err);
                p = next_admissible_prime(group, p);
            }
            Err(other) => return Err(other),
        }
    }
    Err(last.expect("retry loop ran at least once"))
}

/// Inner product of class functions:
/// [f, h] = (1/|G|)·Σ_c |K_c|·f(c)·conj(h(c)), conjugation via the Galois
/// action k = −1.
pub fn inner_product(
    group: &FiniteGroup,
    f: &ClassFunction,
    h: &ClassFunction,
) -> Result<Cyclotomic> {
    let classes = group.classes();
    let r = classes.num_classes();
    assert_eq!(f.len(), r);
    assert_eq!(h.len(), r);
    let order_q = Q::from(Z::from(group.order()));
    let mut acc = Cyclotomic::zero(f.order());
    for c in 0..r {
        let term = f.values[c].mul(&h.values[c].conjugate())?;
        let weight = Q::from(Z::from(classes.class_sizes[c])) / &order_q;
        acc = acc.add(&term.scale(&weight))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::coprime_residues;
    use crate::group::{close_group, DEFAULT_CAP};
    use crate::perm::Permutation;

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

    fn s4() -> FiniteGroup {
        close_group(
            4,
            vec![
                Permutation::from_cycle_string(4, "(0 1 2 3)").unwrap(),
                Permutation::from_cycle_string(4, "(0 1)").unwrap(),
            ],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn structure_constants_of_identity_class() {
        let g = s3();
        let a = class_mult_coefficients(&g);
        let r = g.classes().num_classes();
        for j in 0..r {
            for k in 0..r {
                assert_eq!(a[0][j][k], u32::from(j == k));
            }
        }
        // transposition class squared covers the identity 3 ways
        assert_eq!(a[1][1][0], 3);
    }

    #[test]
    fn structure_constants_of_c2() {
        let g = cyclic(2);
        let a = class_mult_coefficients(&g);
        assert_eq!(a[1][1][0], 1);
    }

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(&cyclic(1)), 2);
        // e = 2, 2√2 ≈ 2.83: smallest odd prime above is 3
        assert_eq!(dixon_prime(&cyclic(2)), 3);
        // e = 6, 2√6 ≈ 4.9: smallest p ≡ 1 (mod 6) above is 7
        assert_eq!(dixon_prime(&s3()), 7);
        assert_eq!(next_admissible_prime(&s3(), 7), 13);
    }

    #[test]
    fn trivial_group_table_shape() {
        let t = character_table(&cyclic(1)).unwrap();
        assert_eq!(t.degrees(), &[1]);
        assert_eq!(t.value(0, 0), &Cyclotomic::one(1));
        assert_eq!(t.trivial_row(), 0);
    }

    #[test]
    fn c2_table() {
        let t = character_table(&cyclic(2)).unwrap();
        assert_eq!(t.degrees(), &[1, 1]);
        let one = Cyclotomic::from_integer(2, 1);
        let minus = Cyclotomic::from_integer(2, -1);
        assert_eq!(t.row(0).values, vec![one.clone(), one.clone()]);
        assert_eq!(t.row(1).values, vec![one, minus]);
    }

    #[test]
    fn s3_table_rows_in_canonical_order() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(t.degrees(), &[1, 1, 2]);
        let v = |x: i64| Cyclotomic::from_integer(6, x);
        assert_eq!(t.row(0).values, vec![v(1), v(1), v(1)]);
        assert_eq!(t.row(1).values, vec![v(1), v(-1), v(1)]);
        assert_eq!(t.row(2).values, vec![v(2), v(0), v(-1)]);
        assert_eq!(t.trivial_row(), 0);
    }

    #[test]
    fn c3_table_is_the_dual_group() {
        let t = character_table(&cyclic(3)).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        let z = |k: i64| Cyclotomic::root_of_unity(3, k);
        assert_eq!(t.row(0).values, vec![z(0), z(0), z(0)]);
        assert_eq!(t.row(1).values, vec![z(0), z(1), z(2)]);
        assert_eq!(t.row(2).values, vec![z(0), z(2), z(1)]);
    }

    #[test]
    fn s4_table_degrees() {
        let t = character_table(&s4()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
    }

    #[test]
    fn recomputation_with_next_prime_is_stable() {
        for g in [cyclic(6), s3(), s4()] {
            let t1 = character_table(&g).unwrap();
            let p2 = next_admissible_prime(&g, t1.prime());
            let t2 = character_table_with_prime(&g, p2).unwrap();
            assert_eq!(t1.degrees(), t2.degrees());
            for (r1, r2) in t1.rows().iter().zip(t2.rows()) {
                assert_eq!(r1.values, r2.values);
            }
        }
    }

    #[test]
    fn galois_twist_equals_power_map_composition() {
        // σₖ(χ(g)) = χ(gᵏ) for every row and every k coprime to e,
        // and the twisted row is again a row of the table.
        for g in [s3(), cyclic(5), s4()] {
            let t = character_table(&g).unwrap();
            let e = t.order_of_unity();
            let r = t.num_rows();
            for k in coprime_residues(e) {
                let pm = g.power_map(k as i64);
                for i in 0..r {
                    let twisted: Vec<Cyclotomic> = (0..r)
                        .map(|c| t.value(i, c).galois_apply(k as i64).unwrap())
                        .collect();
                    let powered: Vec<Cyclotomic> =
                        (0..r).map(|c| t.value(i, pm[c]).clone()).collect();
                    assert_eq!(twisted, powered);
                    assert!((0..r).any(|j| t.row(j).values == twisted));
                }
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let g = s3();
        let t = character_table(&g).unwrap();
        // [1_G, 1_G] = 1
        let ip = inner_product(&g, t.row(0), t.row(0)).unwrap();
        assert_eq!(ip, Cyclotomic::one(6));
        // [χ₂, χ₂] = (4 + 0 + 2)/6 = 1 for the degree-2 character
        let ip = inner_product(&g, t.row(2), t.row(2)).unwrap();
        assert_eq!(ip, Cyclotomic::one(6));
        // [Ξ, 1_G] = ψ(S₃) = 13 with Ξ = |G|·o(·) = (6, 12, 18)
        let xi = ClassFunction::from_integers(6, &[6, 12, 18]);
        let ip = inner_product(&g, &xi, t.row(0)).unwrap();
        assert_eq!(ip, Cyclotomic::from_integer(6, 13));
    }

    #[test]
    fn rational_multiplicity_shortcut_agrees_with_inner_product() {
        for g in [s3(), s4(), cyclic(12)] {
            let t = character_table(&g).unwrap();
            let e = t.order_of_unity();
            let classes = g.classes();
            let xi_vals: Vec<Q> = (0..classes.num_classes())
                .map(|c| Q::from(Z::from(g.order() * classes.rep_orders[c])))
                .collect();
            let fast = t.multiplicities_of_rational_values(&g, &xi_vals);
            let xi = ClassFunction::from_rationals(e, &xi_vals);
            for (i, fast_val) in fast.iter().enumerate() {
                let slow = inner_product(&g, &xi, t.row(i)).unwrap();
                assert_eq!(fast_val, &slow);
            }
        }
    }

    #[test]
    fn modular_basis_rows_are_central_characters() {
        // ω(K̄ᵢ)·ω(K̄ⱼ) = Σ_k a_ijk·ω(K̄_k) for every basis row
        let g = s4();
        let p = dixon_prime(&g);
        let basis = modular_character_basis(&g, p).unwrap();
        let a = class_mult_coefficients(&g);
        let r = g.classes().num_classes();
        assert_eq!(basis.len(), r);
        for w in &basis {
            assert_eq!(w[0], 1);
            for i in 0..r {
                for j in 0..r {
                    let lhs = fp::mul(p, w[i], w[j]);
                    let rhs = (0..r).fold(0u64, |acc, k| {
                        fp::add(p, acc, fp::mul(p, a[i][j][k] as u64 % p, w[k]))
                    });
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
