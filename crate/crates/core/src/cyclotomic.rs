//! Exact arithmetic in cyclotomic fields ℚ(ζₙ).
//!
//! Elements are stored on the power basis {ζₙ⁰, …, ζₙ^(φ(n)−1)} with
//! rational coefficients, fully reduced modulo the n-th cyclotomic
//! polynomial Φₙ. Reduced form is canonical, so equality and hashing are
//! coefficient-wise. Operands must share the ambient order n; callers embed
//! into a common order first.
//!
//! Also provides the Galois action ζₙ ↦ ζₙᵏ for gcd(k,n)=1, the field
//! trace Tr_{ℚ(α)/ℚ}(α) as the sum of the distinct Galois conjugates, the
//! partition of a value set into Galois orbits, and the Möbius function.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{divisors, euler_phi, factorize};
use crate::error::{Error, Result};

type Z = BigInt;
type Q = BigRational;

/// Coefficients of Φₙ, low degree first, monic. Memoized.
fn cyclotomic_polynomial(n: u64) -> Arc<Vec<Z>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<Z>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Φₙ(x) = (xⁿ − 1) / Π_{d|n, d<n} Φ_d(x), exact monic division over ℤ.
    let mut poly = vec![Z::zero(); n as usize + 1];
    poly[0] = -Z::one();
    poly[n as usize] = Z::one();
    for d in divisors(n) {
        if d < n {
            poly = poly_div_exact_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    debug_assert_eq!(poly.len() as u64 - 1, euler_phi(n));
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// remainder must vanish.
fn poly_div_exact_monic(dividend: &[Z], divisor: &[Z]) -> Vec<Z> {
    let dd = dividend.len() - 1;
    let dv = divisor.len() - 1;
    assert!(divisor[dv].is_one(), "divisor must be monic");
    assert!(dd >= dv);
    let mut rem = dividend.to_vec();
    let mut quot = vec![Z::zero(); dd - dv + 1];
    for k in (0..=dd - dv).rev() {
        let c = std::mem::take(&mut rem[k + dv]);
        if !c.is_zero() {
            for i in 0..dv {
                rem[k + i] -= &c * &divisor[i];
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "nonzero remainder in exact division");
    quot
}

/// The canonical power-basis coefficients of ζₙ^j for j = 0, …, n−1,
/// each a vector of φ(n) integers. Memoized; shared across threads.
fn zeta_powers(n: u64) -> Arc<Vec<Vec<Z>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<Vec<Z>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let phi = euler_phi(n) as usize;
    let min_poly = cyclotomic_polynomial(n);
    let mut table = Vec::with_capacity(n as usize);
    let mut cur = vec![Z::zero(); phi];
    cur[0] = Z::one();
    for _ in 0..n {
        table.push(cur.clone());
        // multiply by ζ: shift, then fold the overflow term via Φₙ
        let top = std::mem::take(&mut cur[phi - 1]);
        for i in (1..phi).rev() {
            cur[i] = std::mem::take(&mut cur[i - 1]);
        }
        cur[0] = Z::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &min_poly[i];
            }
        }
    }
    let arc = Arc::new(table);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Reduce an integer combination Σ acc[j]·ζₙ^j (0 ≤ j < n) to canonical
/// power-basis coefficients.
pub(crate) fn reduce_root_sum(n: u64, acc: &[Z]) -> Vec<Z> {
    let phi = euler_phi(n) as usize;
    let table = zeta_powers(n);
    let mut out: Vec<Z> = acc[..phi.min(acc.len())].to_vec();
    out.resize(phi, Z::zero());
    for (j, c) in acc.iter().enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        for (i, p) in table[j].iter().enumerate() {
            if !p.is_zero() {
                out[i] += c * p;
            }
        }
    }
    out
}

/// The units of ℤ/nℤ as residues in 1..=n (so [1] when n = 1).
pub fn coprime_residues(n: u64) -> Vec<u64> {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).collect()
}

/// Möbius function μ(n) ∈ {−1, 0, 1}.
pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, a)| a > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of ℚ(ζₙ) in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1);
        Cyclotomic { order: n, coeffs: vec![Q::zero(); euler_phi(n) as usize] }
    }

    pub fn one(n: u64) -> Self {
        Cyclotomic::from_rational(n, Q::one())
    }

    pub fn from_rational(n: u64, q: Q) -> Self {
        let mut x = Cyclotomic::zero(n);
        x.coeffs[0] = q;
        x
    }

    pub fn from_integer(n: u64, v: i64) -> Self {
        Cyclotomic::from_rational(n, Q::from(Z::from(v)))
    }

    /// ζₙᵏ (k taken mod n), reduced mod Φₙ.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let j = k.rem_euclid(n as i64) as usize;
        let table = zeta_powers(n);
        let coeffs = table[j].iter().map(|c| Q::from(c.clone())).collect();
        Cyclotomic { order: n, coeffs }
    }

    /// Σ cᵢ·ζₙ^(eᵢ) from (exponent, coefficient) terms; exponents mod n.
    pub fn from_terms(n: u64, terms: &[(u64, Q)]) -> Self {
        let mut acc = vec![Q::zero(); n as usize];
        for (e, c) in terms {
            acc[(*e % n) as usize] += c;
        }
        Cyclotomic::combine(n, &acc)
    }

    /// Σ mⱼ·ζₙ^j from an integer multiplicity vector indexed by exponent.
    pub fn from_root_multiset(n: u64, mults: &[u32]) -> Self {
        let acc: Vec<Z> = mults.iter().map(|&m| Z::from(m)).collect();
        let reduced = reduce_root_sum(n, &acc);
        Cyclotomic { order: n, coeffs: reduced.into_iter().map(Q::from).collect() }
    }

    /// Reduce a dense exponent-indexed coefficient vector (length ≤ n).
    fn combine(n: u64, acc: &[Q]) -> Self {
        let phi = euler_phi(n) as usize;
        let table = zeta_powers(n);
        let mut coeffs: Vec<Q> = acc[..phi.min(acc.len())].to_vec();
        coeffs.resize(phi, Q::zero());
        for (j, c) in acc.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in table[j].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += c * Q::from(p.clone());
                }
            }
        }
        Cyclotomic { order: n, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Q> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, or `NotRationalInteger` if the element is not a
    /// rational integer.
    pub fn as_integer(&self) -> Result<Z> {
        match self.as_rational() {
            Some(q) if q.is_integer() => Ok(q.to_integer()),
            _ => Err(Error::NotRationalInteger(self.to_string())),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, q: &Q) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        // rational operands reduce to a coefficient scaling
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(&q));
        }
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(&q));
        }
        let n = self.order as usize;
        let mut acc = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[(i + j) % n] += a * b;
            }
        }
        Ok(Cyclotomic::combine(self.order, &acc))
    }

    /// Rewrite in ℚ(ζ_N) for n | N, via ζₙ = ζ_N^(N/n).
    pub fn embed(&self, new_order: u64) -> Result<Self> {
        if new_order % self.order != 0 {
            return Err(Error::OrderMismatch { left: self.order, right: new_order });
        }
        if new_order == self.order {
            return Ok(self.clone());
        }
        let step = new_order / self.order;
        let terms: Vec<(u64, Q)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 * step, c.clone()))
            .collect();
        Ok(Cyclotomic::from_terms(new_order, &terms))
    }

    /// The automorphism ζₙ ↦ ζₙᵏ for gcd(k, n) = 1; k = −1 is complex
    /// conjugation.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let n = self.order;
        let km = k.rem_euclid(n as i64) as u64;
        if num_integer::gcd(km, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        let terms: Vec<(u64, Q)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 * km % n, c.clone()))
            .collect();
        Ok(Cyclotomic::from_terms(n, &terms))
    }

    pub fn conjugate(&self) -> Self {
        self.galois_apply(-1).expect("-1 is always coprime to the order")
    }

    /// Tr_{ℚ(α)/ℚ}(α): the sum of the distinct Galois conjugates of α. Each
    /// distinct conjugate appears [ℚ(ζₙ):ℚ(α)] times in the full orbit with
    /// multiplicity, so the distinct sum is the trace from ℚ(α), not ℚ(ζₙ).
    pub fn trace_over_q(&self) -> Q {
        let mut seen = HashSet::new();
        let mut sum = Cyclotomic::zero(self.order);
        for k in coprime_residues(self.order) {
            let conj = self.galois_apply(k as i64).expect("residue is coprime");
            if seen.insert(conj.clone()) {
                sum = sum.add(&conj).expect("same order");
            }
        }
        sum.as_rational().expect("sum over a Galois-stable set is rational")
    }

    /// Total order used to canonicalize report rows: lexicographic on the
    /// coefficient vector.
    pub fn cmp_coeff_lex(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

/// Partition `values` into Galois orbits. Returns one representative per
/// orbit (the first member in input order) and, for each input index, the
/// index of its orbit representative. All values must share one order.
pub fn galois_orbit_representatives(
    values: &[Cyclotomic],
) -> Result<(Vec<Cyclotomic>, Vec<usize>)> {
    let Some(first) = values.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    let n = first.order;
    let ks = coprime_residues(n);
    let mut reps: Vec<Cyclotomic> = Vec::new();
    let mut rep_of: HashMap<Cyclotomic, usize> = HashMap::new();
    let mut orbit_of = Vec::with_capacity(values.len());
    for v in values {
        if v.order != n {
            return Err(Error::OrderMismatch { left: n, right: v.order });
        }
        if let Some(&r) = rep_of.get(v) {
            orbit_of.push(r);
            continue;
        }
        let r = reps.len();
        reps.push(v.clone());
        for &k in &ks {
            let conj = v.galois_apply(k as i64)?;
            rep_of.entry(conj).or_insert(r);
        }
        orbit_of.push(r);
    }
    Ok((reps, orbit_of))
}

impl fmt::Display for Cyclotomic {
    /// Exact form `c0 + c1*z + c2*z^2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
