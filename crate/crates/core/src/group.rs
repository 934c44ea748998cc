//! Small finite permutation groups with full element enumeration.
//!
//! Groups are built by closing a generator set (cap-bounded), after which
//! the element list is sorted lexicographically by image arrays so every
//! derived quantity is deterministic. All derived data (conjugacy classes,
//! exponent, power maps, the Cayley table for small groups) is cached on
//! first use behind interior mutability; a constructed group is immutable
//! and freely shareable across threads.
//!
//! Houses the order function o(g), ψ(S) = Σ_{x∈S} o(x), conjugacy data and
//! power maps, cyclic subgroups up to conjugacy, Sylow subgroups, and the
//! kernel/coset data of a linear character.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{divisors, euler_phi, is_prime, p_adic_valuation};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the closure size.
pub const DEFAULT_CAP: usize = 200_000;

/// Build a Cayley table only for groups up to this order.
const CAYLEY_LIMIT: usize = 1024;

/// Conjugacy classes of a group: representatives (least element index per
/// class), sizes, the class of every element, and representative orders.
/// Class 0 is the identity class; classes are ordered by least member index.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<u64>,
    pub class_of: Vec<usize>,
    pub rep_orders: Vec<u64>,
}

impl ConjugacyData {
    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }
}

/// A subgroup as a sorted set of element indices into the parent group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }
}

/// A coset rep·K as a representative plus its sorted member set.
#[derive(Debug, Clone)]
pub struct Coset {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// A finite permutation group with its complete, lexicographically sorted
/// element list. Index 0 is always the identity.
#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    cayley: OnceLock<Option<Vec<u32>>>,
    classes: OnceLock<ConjugacyData>,
    exponent: OnceLock<u64>,
    power_maps: Mutex<HashMap<u64, Arc<Vec<usize>>>>,
}

/// Close a generator set into a full element enumeration.
///
/// The element ordering of the result is lexicographic on image arrays,
/// independent of generator order. Fails with `ClosureCapExceeded` once the
/// closure grows past `cap`.
pub fn close_group(
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
) -> Result<FiniteGroup> {
    assert!(cap >= 1, "cap must be at least 1");
    for g in &generators {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator degree {} does not match group degree {degree}",
                g.degree()
            )));
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut seen: HashSet<Permutation> = elements.iter().cloned().collect();
    let mut cursor = 0;
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        cursor += 1;
        for g in &generators {
            let next = current.compose(g);
            if seen.insert(next.clone()) {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                elements.push(next);
            }
        }
    }
    drop(seen);
    elements.sort_unstable();
    debug_assert!(elements[0].is_identity());

    let index_of = |p: &Permutation| elements.binary_search(p).expect("closure is closed");
    let inverses = elements.iter().map(|p| index_of(&p.inverse())).collect();
    let orders = elements.iter().map(Permutation::order).collect();
    let gen_indices = generators.iter().map(&index_of).collect();
    Ok(FiniteGroup {
        degree,
        generators,
        gen_indices,
        elements,
        inverses,
        orders,
        cayley: OnceLock::new(),
        classes: OnceLock::new(),
        exponent: OnceLock::new(),
        power_maps: Mutex::new(HashMap::new()),
    })
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    fn cayley_table(&self) -> Option<&Vec<u32>> {
        self.cayley
            .get_or_init(|| {
                let n = self.elements.len();
                if n > CAYLEY_LIMIT {
                    return None;
                }
                let mut table = vec![0u32; n * n];
                for a in 0..n {
                    for b in 0..n {
                        let p = self.elements[a].compose(&self.elements[b]);
                        table[a * n + b] =
                            self.elements.binary_search(&p).expect("closed") as u32;
                    }
                }
                Some(table)
            })
            .as_ref()
    }

    /// Index of elements[a] ∘ elements[b].
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        if let Some(t) = self.cayley_table() {
            return t[a * self.elements.len() + b] as usize;
        }
        let p = self.elements[a].compose(&self.elements[b]);
        self.elements.binary_search(&p).expect("closed")
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of elements[x]^k for k ≥ 0, by binary powering.
    pub fn pow_idx(&self, x: usize, mut k: u64) -> usize {
        let mut acc = 0usize; // identity
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_idx(base, base);
            }
        }
        acc
    }

    /// o(x): the least k ≥ 1 with xᵏ = 1.
    pub fn order_of(&self, idx: usize) -> u64 {
        self.orders[idx]
    }

    /// ψ(G) = Σ_{g∈G} o(g).
    pub fn psi(&self) -> u64 {
        self.orders.iter().sum()
    }

    /// ψ(S) = Σ_{x∈S} o(x) over a subset of element indices.
    pub fn psi_over(&self, indices: &[usize]) -> u64 {
        indices.iter().map(|&i| self.orders[i]).sum()
    }

    /// exponent(G): lcm of all element orders; divides |G|.
    pub fn exponent(&self) -> u64 {
        *self
            .exponent
            .get_or_init(|| self.orders.iter().fold(1u64, |acc, &o| num_integer::lcm(acc, o)))
    }

    /// Conjugacy classes as orbits of the conjugation action, cached.
    pub fn classes(&self) -> &ConjugacyData {
        self.classes.get_or_init(|| {
            let n = self.elements.len();
            let conjugators: Vec<(usize, usize)> = self
                .gen_indices
                .iter()
                .map(|&g| (g, self.inverses[g]))
                .collect();
            let mut class_of = vec![usize::MAX; n];
            let mut class_reps = Vec::new();
            let mut class_sizes = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let class_idx = class_reps.len();
                class_reps.push(start);
                class_of[start] = class_idx;
                let mut queue = vec![start];
                let mut size = 0u64;
                while let Some(x) = queue.pop() {
                    size += 1;
                    for &(g, ginv) in &conjugators {
                        let y = self.mul_idx(self.mul_idx(g, x), ginv);
                        if class_of[y] == usize::MAX {
                            class_of[y] = class_idx;
                            queue.push(y);
                        }
                    }
                }
                class_sizes.push(size);
            }
            let rep_orders = class_reps.iter().map(|&r| self.orders[r]).collect();
            ConjugacyData { class_reps, class_sizes, class_of, rep_orders }
        })
    }

    /// The map class ↦ class of (rep)ᵏ; well-defined on classes. Cached per
    /// residue of k mod exponent(G).
    pub fn power_map(&self, k: i64) -> Arc<Vec<usize>> {
        let e = self.exponent();
        let km = k.rem_euclid(e as i64) as u64;
        if let Some(hit) = self.power_maps.lock().unwrap().get(&km) {
            return hit.clone();
        }
        let classes = self.classes();
        let map: Vec<usize> = classes
            .class_reps
            .iter()
            .map(|&rep| classes.class_of[self.pow_idx(rep, km)])
            .collect();
        let arc = Arc::new(map);
        self.power_maps.lock().unwrap().insert(km, arc.clone());
        arc
    }

    /// Closure of a set of element indices as a subgroup.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut members = vec![0usize];
        let mut seen: HashSet<usize> = members.iter().copied().collect();
        let mut cursor = 0;
        while cursor < members.len() {
            let x = members[cursor];
            cursor += 1;
            for &g in gens {
                let y = self.mul_idx(x, g);
                if seen.insert(y) {
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup::from_sorted(members)
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Subgroup {
        let mut members = vec![0usize];
        let mut cur = x;
        while cur != 0 {
            members.push(cur);
            cur = self.mul_idx(cur, x);
        }
        members.sort_unstable();
        Subgroup::from_sorted(members)
    }

    /// Image of a subgroup under conjugation by elements[g].
    fn conjugate_subgroup(&self, sub: &Subgroup, g: usize) -> Vec<usize> {
        let ginv = self.inverses[g];
        let mut image: Vec<usize> =
            sub.members.iter().map(|&x| self.mul_idx(self.mul_idx(g, x), ginv)).collect();
        image.sort_unstable();
        image
    }

    /// One representative ⟨x⟩ per conjugacy class of cyclic subgroups,
    /// sorted by (order, member set). Always includes the trivial subgroup.
    pub fn cyclic_subgroups_up_to_conjugacy(&self) -> Vec<Subgroup> {
        let classes = self.classes();
        let mut candidates: Vec<Subgroup> =
            classes.class_reps.iter().map(|&rep| self.cyclic_subgroup(rep)).collect();
        candidates.sort_unstable_by(|a, b| {
            (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members))
        });
        candidates.dedup();

        let mut kept: Vec<Subgroup> = Vec::new();
        let mut kept_sets: HashSet<Vec<usize>> = HashSet::new();
        'cand: for cand in candidates {
            for g in 0..self.elements.len() {
                if kept_sets.contains(&self.conjugate_subgroup(&cand, g)) {
                    continue 'cand;
                }
            }
            kept_sets.insert(cand.members.clone());
            kept.push(cand);
        }
        kept
    }

    /// A Sylow p-subgroup, grown greedily: start from a maximal-order
    /// p-element and repeatedly adjoin the first p-element that normalizes
    /// the current subgroup, until the full p-part |G|_p is reached.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        assert!(is_prime(p), "sylow_subgroup requires a prime");
        let a = p_adic_valuation(self.order(), p);
        if a == 0 {
            return Ok(Subgroup::trivial());
        }
        let target = p.pow(a);
        let is_p_element = |idx: usize| {
            let o = self.orders[idx];
            o > 1 && factor_is_power_of(o, p)
        };
        let start = (0..self.elements.len())
            .filter(|&i| is_p_element(i))
            .max_by_key(|&i| (self.orders[i], std::cmp::Reverse(i)))
            .expect("Cauchy: a p-element exists when p divides |G|");
        let mut gens = vec![start];
        let mut sub = self.cyclic_subgroup(start);
        while sub.order() < target {
            let next = (0..self.elements.len()).find(|&y| {
                is_p_element(y) && !sub.contains(y) && self.normalizes(y, &sub)
            });
            let Some(y) = next else {
                return Err(Error::SylowSearchFailed { p });
            };
            gens.push(y);
            sub = self.subgroup_generated_by(&gens);
            debug_assert!(factor_is_power_of(sub.order(), p));
        }
        Ok(sub)
    }

    fn normalizes(&self, y: usize, sub: &Subgroup) -> bool {
        let yinv = self.inverses[y];
        sub.members.iter().all(|&h| sub.contains(self.mul_idx(self.mul_idx(y, h), yinv)))
    }
}

fn factor_is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Kernel, index, and generator cosets of a linear character given by its
/// class values.
///
/// Returns (K = Ker λ, m = |G:K|, [gᵈK for d = 1..=m]) where gK generates
/// G/K; g is the first element (in index order) whose value is a primitive
/// m-th root of unity. `NotLinear` if λ(1) ≠ 1, some value is not a root of
/// unity, or a multiplicativity spot-check fails.
pub fn kernel_and_cosets(
    group: &FiniteGroup,
    lambda: &[Cyclotomic],
) -> Result<(Subgroup, u64, Vec<Coset>)> {
    let classes = group.classes();
    if lambda.len() != classes.num_classes() {
        return Err(Error::NotLinear(format!(
            "expected {} class values, got {}",
            classes.num_classes(),
            lambda.len()
        )));
    }
    let n_root = lambda[0].order();
    // identify each value as a power of ζ
    let exp_lookup: HashMap<Cyclotomic, u64> =
        (0..n_root).map(|k| (Cyclotomic::root_of_unity(n_root, k as i64), k)).collect();
    let mut class_exp = Vec::with_capacity(lambda.len());
    for v in lambda {
        match exp_lookup.get(v) {
            Some(&k) => class_exp.push(k),
            None => return Err(Error::NotLinear(format!("value {v} is not a root of unity"))),
        }
    }
    if class_exp[0] != 0 {
        return Err(Error::NotLinear("λ(1) ≠ 1".into()));
    }

    let n = group.order() as usize;
    let exp_of = |x: usize| class_exp[classes.class_of[x]];
    let check_pair = |x: usize, y: usize| -> Result<()> {
        if (exp_of(x) + exp_of(y)) % n_root != exp_of(group.mul_idx(x, y)) {
            return Err(Error::NotLinear("multiplicativity spot-check failed".into()));
        }
        Ok(())
    };
    let small = n.min(16);
    for x in 0..small {
        for y in 0..small {
            check_pair(x, y)?;
        }
    }
    for x in 0..n.min(64) {
        check_pair(x, (7 * x + 3) % n)?;
    }

    let members: Vec<usize> = (0..n).filter(|&x| exp_of(x) == 0).collect();
    let kernel = Subgroup::from_sorted(members);
    // the kernel of a homomorphism is closed; verify to catch non-characters
    for &x in kernel.members() {
        for &y in kernel.members() {
            if !kernel.contains(group.mul_idx(x, y)) {
                return Err(Error::NotLinear("value-1 fiber is not a subgroup".into()));
            }
        }
    }
    if group.order() % kernel.order() != 0 {
        return Err(Error::NotLinear("kernel order does not divide |G|".into()));
    }
    let m = group.order() / kernel.order();

    let generator = (0..n)
        .find(|&x| {
            let k = exp_of(x);
            n_root / num_integer::gcd(k, n_root) == m
        })
        .ok_or_else(|| Error::NotLinear("no value of multiplicative order m".into()))?;

    let mut cosets = Vec::with_capacity(m as usize);
    for d in 1..=m {
        let rep = group.pow_idx(generator, d);
        let mut members: Vec<usize> =
            kernel.members().iter().map(|&z| group.mul_idx(rep, z)).collect();
        members.sort_unstable();
        cosets.push(Coset { representative: rep, members });
    }
    Ok((kernel, m, cosets))
}

/// ψ(C_n) = Σ_{d|n} d·φ(d), the maximal ψ among groups of order n.
pub fn psi_cyclic(n: u64) -> u64 {
    divisors(n).iter().map(|&d| d * euler_phi(d)).sum()
}
