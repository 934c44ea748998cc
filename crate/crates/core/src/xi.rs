//! Analysis of the class function Ξ(g) = |G|·o(g).
//!
//! Ξ is a generalized character; this module computes its multiplicities
//! [Ξ, χ] three independent ways (direct inner product, the Galois-orbit
//! fiber formula, and a Möbius coset sum for linear characters), the
//! minimal integer m(G) with m·o(·) a generalized character together with
//! the Sylow witnesses showing no smaller m works, and an element-by-element
//! brute-force oracle for cross-checking.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{divisors, factorize, p_adic_valuation};
use crate::chartable::CharacterTable;
use crate::cyclotomic::{coprime_residues, mobius, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{kernel_and_cosets, FiniteGroup};

type Z = BigInt;
type Q = BigRational;

/// Multiplicity data of Ξ against the irreducible characters.
#[derive(Debug, Clone)]
pub struct XiReport {
    pub group: String,
    pub order: u64,
    pub psi: i64,
    /// [Ξ, χ] aligned with table rows.
    pub multiplicities: Vec<i64>,
    pub min_multiplicity: i64,
    pub zero_rows: Vec<usize>,
    pub trivial_row: usize,
}

/// One Galois-orbit fiber decomposition of [Ξ, χ]:
/// [Ξ, χ] = Σᵢ ψ(G_{χ,αᵢ})·Tr_{ℚ(αᵢ)/ℚ}(αᵢ) over orbit representatives αᵢ.
#[derive(Debug, Clone)]
pub struct FiberDecomposition {
    pub row: usize,
    pub reps: Vec<Cyclotomic>,
    pub fiber_psi: Vec<i64>,
    pub traces: Vec<i64>,
}

/// One term ψ(gᵈK)·μ(m/d) of the linear-character coset formula.
#[derive(Debug, Clone)]
pub struct MoebiusTerm {
    pub d: u64,
    pub coset_psi: i64,
    pub moebius: i64,
}

#[derive(Debug, Clone)]
pub struct SylowWitnessRecord {
    pub p: u64,
    pub b: u32,
    pub a: u32,
    /// The non-integer value of [μ_P, 1_P] for the candidate m = pᵇ·|G|_{p′}.
    pub value: Q,
}

#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub group: String,
    pub m_of_g: u64,
    pub equals_order: bool,
    pub witnesses: Vec<SylowWitnessRecord>,
}

/// Ξ values per conjugacy class: |G|·o(rep).
pub fn xi_values(group: &FiniteGroup) -> Vec<i64> {
    let classes = group.classes();
    classes.rep_orders.iter().map(|&o| (group.order() * o) as i64).collect()
}

/// Ξ as a class function over the ambient order exponent(G).
pub fn xi_class_function(group: &FiniteGroup) -> crate::chartable::ClassFunction {
    crate::chartable::ClassFunction::from_integers(group.exponent(), &xi_values(group))
}

/// Direct multiplicities [Ξ, χ] for every row of the table, with the
/// integrality of each value enforced.
pub fn xi_multiplicities(
    group: &FiniteGroup,
    table: &CharacterTable,
    name: &str,
) -> Result<XiReport> {
    let values: Vec<Q> = xi_values(group).iter().map(|&v| Q::from(Z::from(v))).collect();
    let mut multiplicities = Vec::with_capacity(table.num_rows());
    for m in table.multiplicities_of_rational_values(group, &values) {
        let z = m.as_integer()?;
        multiplicities.push(z.to_i64().expect("multiplicity fits i64 at desk scale"));
    }
    let psi = group.psi() as i64;
    let trivial_row = table.trivial_row();
    assert_eq!(multiplicities[trivial_row], psi, "[Ξ, 1_G] must equal ψ(G)");
    let degree_sum: i64 = multiplicities
        .iter()
        .zip(table.degrees())
        .map(|(&m, &d)| m * d as i64)
        .sum();
    assert_eq!(degree_sum, group.order() as i64, "Σ [Ξ,χ]·χ(1) must equal |G| = Ξ(1)");
    let min_multiplicity = *multiplicities.iter().min().expect("at least one row");
    if group.order() > 1 {
        assert!(min_multiplicity < 0, "Ξ is never a character beyond the trivial group");
    }
    let zero_rows =
        multiplicities.iter().enumerate().filter(|(_, &m)| m == 0).map(|(i, _)| i).collect();
    Ok(XiReport {
        group: name.to_string(),
        order: group.order(),
        psi,
        multiplicities,
        min_multiplicity,
        zero_rows,
        trivial_row,
    })
}

/// [Ξ, χ] by the Galois-orbit fiber formula.
///
/// Elements are grouped into fibers G_{χ,α} = {g : χ(g) = α} by class; the
/// Galois orbits of the value set are walked through power maps, using
/// σₖ(χ(g)) = χ(gᵏ), and each orbit contributes ψ(fiber of the
/// representative) times the trace of the representative (the sum of the
/// distinct values in its orbit).
pub fn theorem_b_multiplicity(
    group: &FiniteGroup,
    table: &CharacterTable,
    row: usize,
) -> Result<(i64, FiberDecomposition)> {
    let classes = group.classes();
    let r = classes.num_classes();
    let e = table.order_of_unity();
    let values = &table.row(row).values;

    struct Fiber {
        first_class: usize,
        psi: u64,
        size: u64,
    }
    let mut fiber_of: HashMap<&Cyclotomic, usize> = HashMap::new();
    let mut fibers: Vec<Fiber> = Vec::new();
    for c in 0..r {
        let idx = *fiber_of.entry(&values[c]).or_insert_with(|| {
            fibers.push(Fiber { first_class: c, psi: 0, size: 0 });
            fibers.len() - 1
        });
        fibers[idx].psi += classes.class_sizes[c] * classes.rep_orders[c];
        fibers[idx].size += classes.class_sizes[c];
    }
    // the fibers partition G
    assert_eq!(fibers.iter().map(|f| f.size).sum::<u64>(), group.order());

    let ks = coprime_residues(e);
    let mut assigned = vec![false; fibers.len()];
    let mut reps = Vec::new();
    let mut fiber_psi = Vec::new();
    let mut traces = Vec::new();
    let mut total = Z::zero();
    for start in 0..fibers.len() {
        if assigned[start] {
            continue;
        }
        let c0 = fibers[start].first_class;
        // the orbit of the value, as distinct fiber indices
        let mut orbit: Vec<usize> = Vec::new();
        for &k in &ks {
            let conj_class = group.power_map(k as i64)[c0];
            let fi = fiber_of[&values[conj_class]];
            if !orbit.contains(&fi) {
                orbit.push(fi);
            }
        }
        let mut trace_sum = Cyclotomic::zero(e);
        for &fi in &orbit {
            assert!(!assigned[fi], "orbits of distinct values are disjoint");
            assigned[fi] = true;
            // Galois conjugation preserves element orders, so conjugate
            // fibers carry equal ψ
            assert_eq!(
                fibers[fi].psi, fibers[start].psi,
                "fibers within one Galois orbit must have equal ψ"
            );
            trace_sum = trace_sum.add(&values[fibers[fi].first_class])?;
        }
        let trace = trace_sum.as_integer()?;
        let psi = Z::from(fibers[start].psi);
        total += &psi * &trace;
        reps.push(values[c0].clone());
        fiber_psi.push(fibers[start].psi as i64);
        traces.push(trace.to_i64().expect("trace fits i64"));
    }
    let value = total.to_i64().expect("multiplicity fits i64 at desk scale");
    Ok((value, FiberDecomposition { row, reps, fiber_psi, traces }))
}

/// [Ξ, λ] for a linear character λ via the Möbius coset formula
/// Σ_{d|m} ψ(gᵈK)·μ(m/d), K = Ker λ, m = |G:K|, gK generating G/K.
pub fn linear_moebius_multiplicity(
    group: &FiniteGroup,
    table: &CharacterTable,
    row: usize,
) -> Result<(i64, Vec<MoebiusTerm>)> {
    if table.degrees()[row] != 1 {
        return Err(Error::NotLinear(format!(
            "row {row} has degree {}",
            table.degrees()[row]
        )));
    }
    let (_kernel, m, cosets) = kernel_and_cosets(group, &table.row(row).values)?;
    let mut total = 0i64;
    let mut terms = Vec::new();
    for d in divisors(m) {
        let coset_psi = group.psi_over(&cosets[(d - 1) as usize].members) as i64;
        let mu = mobius(m / d);
        total += coset_psi * mu;
        terms.push(MoebiusTerm { d, coset_psi, moebius: mu });
    }
    Ok((total, terms))
}

/// The proof witness that m = pᵇ·|G|_{p′} < |G| fails: restricted to a
/// Sylow p-subgroup P, [μ_P, 1_P] = (n/p^(a−b))·ψ(P) with n = |G|_{p′},
/// which cannot be an integer because ψ(P) ≡ 1 (mod p).
pub fn sylow_witness(group: &FiniteGroup, p: u64, b: u32) -> Result<Q> {
    let a = p_adic_valuation(group.order(), p);
    assert!(a > 0, "p must divide |G|");
    assert!(b < a, "b must be smaller than the full p-exponent");
    let sylow = group.sylow_subgroup(p)?;
    debug_assert_eq!(sylow.order(), p.pow(a));
    let psi_p = group.psi_over(sylow.members());
    let p_prime_part = group.order() / p.pow(a);
    let value = Q::new(Z::from(p_prime_part) * Z::from(psi_p), Z::from(p.pow(a - b)));
    if value.is_integer() {
        return Err(Error::WitnessUnexpectedlyIntegral { p, b, value: value.to_string() });
    }
    Ok(value)
}

/// lcm of the denominators of [o(·), χ] = [Ξ, χ]/|G| in lowest terms: the
/// least m making m·o(·) a generalized character.
pub fn m_from_multiplicities(order: u64, multiplicities: &[i64]) -> u64 {
    let n = Z::from(order);
    let mut m = Z::one();
    for &mult in multiplicities {
        let q = Q::new(Z::from(mult), n.clone());
        m = m.lcm(q.denom());
    }
    m.to_u64().expect("m(G) divides |G|")
}

/// m(G): the least positive integer m such that m·o(·) is a generalized
/// character, computed as the lcm of the denominators of [o(·), χ] =
/// [Ξ, χ]/|G| in lowest terms. Includes the per-(p, b) Sylow witnesses.
pub fn minimal_m(
    group: &FiniteGroup,
    table: &CharacterTable,
    name: &str,
) -> Result<MinimalityReport> {
    let report = xi_multiplicities(group, table, name)?;
    let m_of_g = m_from_multiplicities(group.order(), &report.multiplicities);
    let mut witnesses = Vec::new();
    for (p, a) in factorize(group.order()) {
        for b in 0..a {
            witnesses.push(SylowWitnessRecord { p, b, a, value: sylow_witness(group, p, b)? });
        }
    }
    Ok(MinimalityReport {
        group: name.to_string(),
        m_of_g,
        equals_order: m_of_g == group.order(),
        witnesses,
    })
}

/// One group's entry in a zero-constituent scan.
#[derive(Debug, Clone)]
pub struct ZeroScanRecord {
    pub group: String,
    pub order: u64,
    pub num_irreducibles: usize,
    pub zero_rows: Vec<usize>,
    pub min_multiplicity: i64,
}

/// Scan built groups for vanishing constituents of Ξ. Every reported zero
/// row is independently re-derived through the fiber formula before it is
/// emitted; per-group failures are recorded and the scan continues.
pub fn zero_constituent_scan<'a, I>(
    groups: I,
) -> Vec<std::result::Result<ZeroScanRecord, (String, Error)>>
where
    I: IntoIterator<Item = (String, &'a FiniteGroup)>,
{
    groups
        .into_iter()
        .map(|(name, group)| {
            let run = || -> Result<ZeroScanRecord> {
                let table = crate::chartable::character_table(group)?;
                let report = xi_multiplicities(group, &table, &name)?;
                for &row in &report.zero_rows {
                    let (rederived, _) = theorem_b_multiplicity(group, &table, row)?;
                    assert_eq!(rederived, 0, "zero constituent failed re-derivation");
                }
                Ok(ZeroScanRecord {
                    group: name.clone(),
                    order: report.order,
                    num_irreducibles: report.multiplicities.len(),
                    zero_rows: report.zero_rows,
                    min_multiplicity: report.min_multiplicity,
                })
            };
            run().map_err(|e| (name.clone(), e))
        })
        .collect()
}

/// Brute-force oracle: [Ξ, χ] = Σ_{x∈G} o(x)·conj(χ(x)) summed over the
/// |G| elements individually, with the conjugate taken by the generic
/// Galois action rather than power maps.
pub fn xi_multiplicity_elementwise(
    group: &FiniteGroup,
    table: &CharacterTable,
    row: usize,
) -> Result<i64> {
    let classes = group.classes();
    let e = table.order_of_unity();
    let conj_values: Vec<Cyclotomic> =
        table.row(row).values.iter().map(Cyclotomic::conjugate).collect();
    let mut acc = Cyclotomic::zero(e);
    for x in 0..group.order() as usize {
        let weight = Q::from(Z::from(group.order_of(x)));
        acc = acc.add(&conj_values[classes.class_of[x]].scale(&weight))?;
    }
    Ok(acc.as_integer()?.to_i64().expect("multiplicity fits i64"))
}

/// [Ξ, χ] without conjugation: (1/|G|)·Σ_c |K_c|·Ξ(c)·χ(c). Agrees with the
/// conjugated inner product because Ξ is rational-valued and its
/// multiplicities are Galois-stable integers.
pub fn xi_multiplicity_unconjugated(
    group: &FiniteGroup,
    table: &CharacterTable,
    row: usize,
) -> Result<i64> {
    let classes = group.classes();
    let e = table.order_of_unity();
    let mut acc = Cyclotomic::zero(e);
    for c in 0..classes.num_classes() {
        let weight = Q::new(
            Z::from(classes.class_sizes[c] * classes.rep_orders[c] * group.order()),
            Z::from(group.order()),
        );
        acc = acc.add(&table.row(row).values[c].scale(&weight))?;
    }
    Ok(acc.as_integer()?.to_i64().expect("multiplicity fits i64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::cyclotomic::galois_orbit_representatives;
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
    fn xi_values_examples() {
        assert_eq!(xi_values(&cyclic(1)), vec![1]);
        assert_eq!(xi_values(&cyclic(2)), vec![2, 4]);
        assert_eq!(xi_values(&s3()), vec![6, 12, 18]);
    }

    #[test]
    fn golden_multiplicities() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let report = xi_multiplicities(&g, &t, "S:3").unwrap();
        assert_eq!(report.multiplicities, vec![13, 1, -4]);
        assert_eq!(report.psi, 13);
        assert_eq!(report.min_multiplicity, -4);
        assert!(report.zero_rows.is_empty());

        let g = cyclic(2);
        let t = character_table(&g).unwrap();
        let report = xi_multiplicities(&g, &t, "C:2").unwrap();
        assert_eq!(report.multiplicities, vec![3, -1]);
    }

    #[test]
    fn theorem_b_on_s3() {
        let g = s3();
        let t = character_table(&g).unwrap();
        // trivial character: single fiber G with trace 1
        let (v, dec) = theorem_b_multiplicity(&g, &t, 0).unwrap();
        assert_eq!(v, 13);
        assert_eq!(dec.reps.len(), 1);
        assert_eq!(dec.fiber_psi, vec![13]);
        // degree-2 character: fibers by values {2, 0, −1}, ψ-masses {1, 6, 6}
        let (v, dec) = theorem_b_multiplicity(&g, &t, 2).unwrap();
        assert_eq!(v, -4);
        assert_eq!(dec.fiber_psi, vec![1, 6, 6]);
        assert_eq!(dec.traces, vec![2, 0, -1]);
    }

    #[test]
    fn theorem_b_on_c3_faithful_row() {
        let g = cyclic(3);
        let t = character_table(&g).unwrap();
        let (v, dec) = theorem_b_multiplicity(&g, &t, 1).unwrap();
        // rep 1 with fiber ψ = 1, rep ζ₃ with fiber ψ = 3 and trace −1
        assert_eq!(v, -2);
        assert_eq!(dec.fiber_psi, vec![1, 3]);
        assert_eq!(dec.traces, vec![1, -1]);
    }

    #[test]
    fn theorem_b_agrees_with_direct_everywhere_small() {
        for g in [cyclic(1), cyclic(2), cyclic(6), cyclic(12), s3(), s4()] {
            let t = character_table(&g).unwrap();
            let report = xi_multiplicities(&g, &t, "g").unwrap();
            for row in 0..t.num_rows() {
                let (v, _) = theorem_b_multiplicity(&g, &t, row).unwrap();
                assert_eq!(v, report.multiplicities[row]);
            }
        }
    }

    #[test]
    fn power_map_orbits_match_generic_galois_orbits() {
        // the fiber walk uses σₖ(χ(g)) = χ(gᵏ); check the resulting orbit
        // partition of the distinct value set against the generic one
        for g in [s3(), s4(), cyclic(12)] {
            let t = character_table(&g).unwrap();
            let classes = g.classes();
            let r = classes.num_classes();
            let e = t.order_of_unity();
            for row in 0..t.num_rows() {
                let values = &t.row(row).values;
                let mut distinct: Vec<Cyclotomic> = Vec::new();
                for c in 0..r {
                    if !distinct.contains(&values[c]) {
                        distinct.push(values[c].clone());
                    }
                }
                let (_, generic_orbit) = galois_orbit_representatives(&distinct).unwrap();
                // power-map partition: value index → orbit id by first class
                let find = |v: &Cyclotomic| distinct.iter().position(|w| w == v).unwrap();
                for (i, v) in distinct.iter().enumerate() {
                    let c0 = (0..r).find(|&c| &values[c] == v).unwrap();
                    for k in coprime_residues(e) {
                        let conj = &values[g.power_map(k as i64)[c0]];
                        assert_eq!(
                            generic_orbit[find(conj)], generic_orbit[i],
                            "power-map orbit escaped the generic Galois orbit"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn moebius_formula_examples() {
        let g = s3();
        let t = character_table(&g).unwrap();
        // trivial λ: single term ψ(G)·μ(1)
        let (v, terms) = linear_moebius_multiplicity(&g, &t, 0).unwrap();
        assert_eq!(v, 13);
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].d, terms[0].coset_psi, terms[0].moebius), (1, 13, 1));
        // sign: ψ(transposition coset)·μ(2) + ψ(A₃)·μ(1) = −6 + 7 = 1
        let (v, terms) = linear_moebius_multiplicity(&g, &t, 1).unwrap();
        assert_eq!(v, 1);
        assert_eq!(terms.len(), 2);
        assert_eq!((terms[0].coset_psi, terms[0].moebius), (6, -1));
        assert_eq!((terms[1].coset_psi, terms[1].moebius), (7, 1));
        // C₂ nontrivial: −ψ({g}) + ψ({1}) = −1
        let g = cyclic(2);
        let t = character_table(&g).unwrap();
        let (v, _) = linear_moebius_multiplicity(&g, &t, 1).unwrap();
        assert_eq!(v, -1);
        // non-linear rows are rejected
        let g = s3();
        let t = character_table(&g).unwrap();
        assert!(matches!(
            linear_moebius_multiplicity(&g, &t, 2),
            Err(Error::NotLinear(_))
        ));
    }

    #[test]
    fn moebius_formula_matches_direct_on_all_linear_rows() {
        for g in [cyclic(8), cyclic(12), s3(), s4()] {
            let t = character_table(&g).unwrap();
            let report = xi_multiplicities(&g, &t, "g").unwrap();
            for row in 0..t.num_rows() {
                if t.degrees()[row] != 1 {
                    continue;
                }
                let (v, _) = linear_moebius_multiplicity(&g, &t, row).unwrap();
                assert_eq!(v, report.multiplicities[row]);
            }
        }
    }

    #[test]
    fn minimality_reports() {
        let g = cyclic(1);
        let t = character_table(&g).unwrap();
        let rep = minimal_m(&g, &t, "C:1").unwrap();
        assert_eq!(rep.m_of_g, 1);
        assert!(rep.equals_order);
        assert!(rep.witnesses.is_empty());

        // S₃: denominators of {13/6, 1/6, −2/3} have lcm 6
        let g = s3();
        let t = character_table(&g).unwrap();
        let rep = minimal_m(&g, &t, "S:3").unwrap();
        assert_eq!(rep.m_of_g, 6);
        assert!(rep.equals_order);
        assert_eq!(rep.witnesses.len(), 2); // (p, b) = (2, 0) and (3, 0)

        let g = cyclic(2);
        let t = character_table(&g).unwrap();
        assert_eq!(minimal_m(&g, &t, "C:2").unwrap().m_of_g, 2);
    }

    #[test]
    fn sylow_witness_values() {
        // S₃, p = 3, b = 0: value 2·ψ(A₃)/3 = 14/3
        let v = sylow_witness(&s3(), 3, 0).unwrap();
        assert_eq!(v, Q::new(Z::from(14), Z::from(3)));
        // C₄, p = 2, b = 1: ψ(C₄)/2 = 11/2
        let v = sylow_witness(&cyclic(4), 2, 1).unwrap();
        assert_eq!(v, Q::new(Z::from(11), Z::from(2)));
        // C₂, p = 2, b = 0: 3/2
        let v = sylow_witness(&cyclic(2), 2, 0).unwrap();
        assert_eq!(v, Q::new(Z::from(3), Z::from(2)));
    }

    #[test]
    fn zero_scan_records_and_continues_past_failures() {
        let groups = [("C:4".to_string(), cyclic(4)), ("S:3".to_string(), s3())];
        let records =
            zero_constituent_scan(groups.iter().map(|(n, g)| (n.clone(), g)));
        assert_eq!(records.len(), 2);
        let c4 = records[0].as_ref().unwrap();
        assert_eq!((c4.order, c4.num_irreducibles), (4, 4));
        assert!(c4.zero_rows.is_empty());
        assert!(c4.min_multiplicity < 0);
        let s3_rec = records[1].as_ref().unwrap();
        assert_eq!(s3_rec.min_multiplicity, -4);
    }

    #[test]
    fn elementwise_oracle_agrees() {
        for g in [cyclic(6), s3(), s4()] {
            let t = character_table(&g).unwrap();
            let report = xi_multiplicities(&g, &t, "g").unwrap();
            for row in 0..t.num_rows() {
                assert_eq!(
                    xi_multiplicity_elementwise(&g, &t, row).unwrap(),
                    report.multiplicities[row]
                );
                assert_eq!(
                    xi_multiplicity_unconjugated(&g, &t, row).unwrap(),
                    report.multiplicities[row]
                );
            }
        }
    }
}
