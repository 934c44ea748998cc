//! Dense linear algebra over 𝔽ₚ for the modular phase of the character
//! table computation: Gaussian elimination, nullspaces, characteristic
//! polynomials of Hessenberg reductions, and brute-force root scans.
//!
//! Matrices are row-major `Vec<Vec<u64>>`; p is small (a few hundred at
//! catalog scale), so everything here is plain O(d³) elimination.

use crate::arith::factorize;

pub fn mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add(p: u64, a: u64, b: u64) -> u64 {
    (a + b) % p
}

pub fn sub(p: u64, a: u64, b: u64) -> u64 {
    (a + p - b % p) % p
}

pub fn pow(p: u64, mut base: u64, mut exp: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(p, acc, base);
        }
        base = mul(p, base, base);
        exp >>= 1;
    }
    acc
}

pub fn inv(p: u64, a: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    pow(p, a, p - 2)
}

/// A generator of 𝔽ₚ× (brute-force order test; p is small).
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = factorize(p - 1);
    'outer: for g in 2..p {
        for &(q, _) in &factors {
            if pow(p, g, (p - 1) / q) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime field has a primitive root")
}

/// Basis of the kernel of a square matrix over 𝔽ₚ, via reduced row echelon
/// form. Deterministic: basis vectors are indexed by free columns ascending,
/// each with a 1 in its free coordinate.
pub fn nullspace(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { return Vec::new() } else { mat[0].len() };
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut pivot_row_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let scale = inv(p, m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = mul(p, *x, scale);
        }
        for r in 0..rows {
            if r != rank && m[r][col] % p != 0 {
                let f = m[r][col];
                for c in 0..cols {
                    let delta = mul(p, f, m[rank][c]);
                    m[r][c] = sub(p, m[r][c], delta);
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_row_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_row_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = sub(p, 0, m[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solve B·y = target for every target column, where B (rows×cols) has full
/// column rank and each system is consistent; returns None otherwise.
pub fn solve_full_rank(
    b: &[Vec<u64>],
    targets: &[Vec<u64>],
    p: u64,
) -> Option<Vec<Vec<u64>>> {
    let rows = b.len();
    let cols = if rows == 0 { 0 } else { b[0].len() };
    let t = targets.len();
    let mut aug: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut row = b[r].clone();
            row.extend(targets.iter().map(|col| col[r]));
            row
        })
        .collect();
    let width = cols + t;
    let mut rank = 0;
    for col in 0..cols {
        let piv = (rank..rows).find(|&r| aug[r][col] % p != 0)?;
        aug.swap(rank, piv);
        let scale = inv(p, aug[rank][col]);
        for x in aug[rank].iter_mut() {
            *x = mul(p, *x, scale);
        }
        for r in 0..rows {
            if r != rank && aug[r][col] % p != 0 {
                let f = aug[r][col];
                for c in 0..width {
                    let delta = mul(p, f, aug[rank][c]);
                    aug[r][c] = sub(p, aug[r][c], delta);
                }
            }
        }
        rank += 1;
    }
    // consistency: rows beyond the rank must be entirely zero
    for r in rank..rows {
        if aug[r].iter().any(|&x| x % p != 0) {
            return None;
        }
    }
    Some(
        (0..t)
            .map(|k| (0..cols).map(|c| aug[c][cols + k]).collect())
            .collect(),
    )
}

/// Coefficients of det(λI − M), low degree first, monic of degree d.
///
/// Reduces M to upper Hessenberg form by similarity transforms, then runs
/// the leading-principal-minor recurrence.
pub fn charpoly(mat: &[Vec<u64>], p: u64) -> Vec<u64> {
    let d = mat.len();
    if d == 0 {
        return vec![1];
    }
    let mut h: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();

    // Hessenberg reduction
    for col in 0..d.saturating_sub(2) {
        let Some(piv) = (col + 1..d).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let pivot_inv = inv(p, h[col + 1][col]);
        for r in col + 2..d {
            if h[r][col] == 0 {
                continue;
            }
            let f = mul(p, h[r][col], pivot_inv);
            for c in 0..d {
                let delta = mul(p, f, h[col + 1][c]);
                h[r][c] = sub(p, h[r][c], delta);
            }
            // inverse column operation keeps the matrix similar
            for row in 0..d {
                let delta = mul(p, f, h[row][r]);
                h[row][col + 1] = add(p, h[row][col + 1], delta);
            }
        }
    }

    // p_k(λ) = (λ − h[k-1][k-1])·p_{k-1}
    //          − Σ_{i=1}^{k-1} h[i-1][k-1]·(Π_{j=i+1}^{k} h[j-1][j-2])·p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=d {
        let prev = &polys[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = add(p, pk[i + 1], c);
            let delta = mul(p, h[k - 1][k - 1], c);
            pk[i] = sub(p, pk[i], delta);
        }
        let mut beta_prod = 1u64;
        for i in (1..k).rev() {
            beta_prod = mul(p, beta_prod, h[i][i - 1]);
            if beta_prod == 0 {
                break;
            }
            let coef = mul(p, h[i - 1][k - 1], beta_prod);
            if coef == 0 {
                continue;
            }
            for (idx, &c) in polys[i - 1].iter().enumerate() {
                let delta = mul(p, coef, c);
                pk[idx] = sub(p, pk[idx], delta);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

pub fn poly_eval(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0u64, |acc, &c| add(p, mul(p, acc, x), c))
}

/// All roots of a polynomial in 𝔽ₚ by scanning every residue.
pub fn poly_roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| poly_eval(coeffs, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// det by Gaussian elimination, for cross-checking charpoly.
    fn det(mat: &[Vec<u64>], p: u64) -> u64 {
        let d = mat.len();
        let mut m: Vec<Vec<u64>> = mat.to_vec();
        let mut result = 1u64;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| m[r][col] % p != 0) else {
                return 0;
            };
            if piv != col {
                m.swap(piv, col);
                result = sub(p, 0, result);
            }
            result = mul(p, result, m[col][col]);
            let pivot_inv = inv(p, m[col][col]);
            for r in col + 1..d {
                let f = mul(p, m[r][col], pivot_inv);
                for c in col..d {
                    let delta = mul(p, f, m[col][c]);
                    m[r][c] = sub(p, m[r][c], delta);
                }
            }
        }
        result
    }

    fn lcg(state: &mut u64) -> u64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *state >> 33
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(2), 1);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        for p in [3u64, 13, 61, 193] {
            let g = primitive_root(p);
            assert_eq!(pow(p, g, p - 1), 1);
            for (q, _) in factorize(p - 1) {
                assert_ne!(pow(p, g, (p - 1) / q), 1);
            }
        }
    }

    #[test]
    fn charpoly_matches_det_evaluation() {
        let p = 61u64;
        let mut state = 0xfeedu64;
        for d in 1..=6usize {
            for _ in 0..8 {
                let m: Vec<Vec<u64>> =
                    (0..d).map(|_| (0..d).map(|_| lcg(&mut state) % p).collect()).collect();
                let cp = charpoly(&m, p);
                assert_eq!(cp.len(), d + 1);
                assert_eq!(cp[d], 1);
                for x in [0u64, 1, 2, 17, 60] {
                    // det(xI − M)
                    let shifted: Vec<Vec<u64>> = (0..d)
                        .map(|r| {
                            (0..d)
                                .map(|c| {
                                    if r == c {
                                        sub(p, x, m[r][c])
                                    } else {
                                        sub(p, 0, m[r][c])
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    assert_eq!(poly_eval(&cp, x, p), det(&shifted, p));
                }
            }
        }
    }

    #[test]
    fn nullspace_vectors_are_in_kernel() {
        let p = 13u64;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let basis = nullspace(&m, p);
        assert_eq!(basis.len(), 1);
        for v in &basis {
            for row in &m {
                let s = row.iter().zip(v).fold(0, |acc, (&a, &b)| add(p, acc, mul(p, a, b)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn solve_full_rank_roundtrip() {
        let p = 17u64;
        let b = vec![vec![1, 0], vec![3, 1], vec![2, 5]];
        // target = B·(4, 9)
        let y = [4u64, 9];
        let target: Vec<u64> =
            b.iter().map(|row| add(p, mul(p, row[0], y[0]), mul(p, row[1], y[1]))).collect();
        let sol = solve_full_rank(&b, &[target], p).unwrap();
        assert_eq!(sol[0], vec![4, 9]);
        // inconsistent target
        assert!(solve_full_rank(&b, &[vec![1, 0, 0]], p).is_none() || {
            // (1,0,0) happens to be inconsistent for this B
            let s = solve_full_rank(&b, &[vec![1, 0, 0]], p);
            s.is_none()
        });
    }

    #[test]
    fn poly_roots_of_quadratic() {
        // x² − 1 over F₇ has roots {1, 6}
        let roots = poly_roots(&[6, 0, 1], 7);
        assert_eq!(roots, vec![1, 6]);
    }
}
