use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{
    enumerate_phi, family, parity_closed_form, parity_difference, phi_counts,
    phi_counts_enumerated, singles_and_degree, upsilon, upsilon_inverse, SymbolClass,
};
use crate::error::Result;
use crate::partition::{degenerate_count, enumerate_bipartitions, p2_theorem};
use crate::report::{Fault, Location, Report, Verifier};

fn flag(ok: bool) -> BigInt {
    BigInt::from(ok as u8)
}

/// Everything the family decomposition of `Phi_n` needs, for one rank.
struct RankData {
    n: u64,
    by_defect: BTreeMap<i64, BTreeSet<SymbolClass>>,
    specials: Vec<SymbolClass>,
}

impl RankData {
    fn new(n: u64) -> Result<Self> {
        let mut by_defect = BTreeMap::new();
        let mut k = 0i64;
        while (k * k) as u64 <= n {
            let defects = if k == 0 { vec![0] } else { vec![2 * k, -2 * k] };
            for d in defects {
                let classes: BTreeSet<SymbolClass> = enumerate_phi(n as i64, d)?.into_iter().collect();
                by_defect.insert(d, classes);
            }
            k += 1;
        }
        let specials = by_defect[&0].iter().filter(|c| c.is_special()).cloned().collect();
        Ok(RankData {
            n,
            by_defect,
            specials,
        })
    }
}

/// Checks that the families of the special symbols of rank `n` partition
/// `Phi_n`, slice by defect as `def(Lambda_M) = -2 def(M)`, and have total
/// size `sum 4^deg(Z) = |Phi_n|`.
pub fn verify_family_partition(n: u64, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("families", n, fault);
    family_checks(&mut v, &[RankData::new(n)?]);
    Ok(v.finish())
}

fn family_checks(v: &mut Verifier<'_>, ranks: &[RankData]) {
    let bound = ranks.last().map_or(0, |r| r.n);
    let mut disjoint = Vec::new();
    let mut cover = Vec::new();
    let mut sizes = Vec::new();
    let mut rule = Vec::new();
    let mut slices = Vec::new();
    for r in ranks {
        let all: BTreeSet<&SymbolClass> = r.by_defect.values().flatten().collect();
        let mut seen: BTreeSet<SymbolClass> = BTreeSet::new();
        let mut members = 0u64;
        let mut expected_size = BigInt::from(0);
        for z in &r.specials {
            let data = singles_and_degree(z.canonical()).expect("filtered on is_special");
            expected_size += BigInt::from(1u64) << (2 * data.degree);
            for m in family(&data) {
                members += 1;
                let class = m.lambda.reduce();
                let here = format!("n={} Z={} M={}", r.n, z, m.m_subset);
                rule.push((
                    Location::Item(here.clone()),
                    BigInt::from(m.lambda.defect()),
                    BigInt::from(-2 * m.m_subset.defect()),
                ));
                let slice = r.by_defect.get(&(-2 * m.m_subset.defect()));
                slices.push((
                    Location::Item(here),
                    flag(slice.is_some_and(|s| s.contains(&class))),
                    flag(true),
                ));
                seen.insert(class);
            }
        }
        disjoint.push((Location::Index(r.n as usize), BigInt::from(members), BigInt::from(seen.len())));
        let stray = seen.iter().filter(|c| !all.contains(c)).count() + all.iter().filter(|c| !seen.contains(c)).count();
        cover.push((Location::Index(r.n as usize), BigInt::from(stray), BigInt::from(0)));
        sizes.push((Location::Index(r.n as usize), expected_size, phi_counts(r.n).total()));
    }
    v.entries("families/disjoint", bound, disjoint);
    v.entries("families/cover", bound, cover);
    v.entries("families/size-sum", bound, sizes);
    v.entries("families/defect-rule", bound, rule);
    v.entries("families/defect-slices", bound, slices);
}

/// Bijection law, family decomposition and the parity lemma for all ranks
/// `0..=max`, by full enumeration.
pub fn verify_families(max: u64, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("families", max, fault);
    let ranks = (0..=max).map(RankData::new).collect::<Result<Vec<_>>>()?;

    // Bijection, including odd defects through the floor.
    let mut counts = Vec::new();
    let mut round_trips = Vec::new();
    let mut shape = Vec::new();
    for n in 0..=max as i64 {
        let defects = (0i64..)
            .take_while(|m| m * m / 4 <= n)
            .flat_map(|m| if m == 0 { vec![0] } else { vec![m, -m] });
        for d in defects {
            {
                let weight = n - d * d / 4;
                let phi = enumerate_phi(n, d)?;
                let distinct: BTreeSet<_> = phi.iter().collect();
                counts.push((
                    Location::Item(format!("n={n} d={d}")),
                    BigInt::from(distinct.len()),
                    p2_theorem(weight),
                ));
                for b in enumerate_bipartitions(weight)? {
                    let c = upsilon_inverse(&b, d);
                    let ok = upsilon(&c) == b && upsilon_inverse(&upsilon(&c), d) == c;
                    round_trips.push((Location::Item(format!("n={n} d={d} {b}")), flag(ok), flag(true)));
                }
                for c in &phi {
                    let ok = c.rank() == n as u64 && c.defect() == d;
                    shape.push((Location::Item(format!("n={n} d={d} {c}")), flag(ok), flag(true)));
                }
            }
        }
    }
    v.entries("bijection/counts", max, counts);
    v.entries("bijection/round-trip", max, round_trips);
    v.entries("bijection/rank-defect", max, shape);

    family_checks(&mut v, &ranks);

    let mut lemma = Vec::new();
    let mut closed = Vec::new();
    let mut by_defect = Vec::new();
    for r in &ranks {
        for z in &r.specials {
            let data = singles_and_degree(z.canonical()).expect("filtered on is_special");
            let here = Location::Item(format!("n={} Z={}", r.n, z));
            let diff = BigInt::from(parity_difference(&data));
            let expected = BigInt::from(u8::from(data.degree == 0));
            lemma.push((here.clone(), diff.clone(), expected));
            closed.push((here.clone(), diff.clone(), parity_closed_form(data.degree)));
            let signed: i64 = family(&data)
                .iter()
                .map(|m| if m.lambda.defect().rem_euclid(4) == 0 { 1 } else { -1 })
                .sum();
            by_defect.push((here, BigInt::from(signed), diff));
        }
    }
    v.entries("lemma31/enumeration", max, lemma);
    v.entries("lemma31/closed-form", max, closed);
    v.entries("lemma31/member-defects", max, by_defect);
    Ok(v.finish())
}

/// `|Phi_n^+| - |Phi_n^-| = p(n/2)` from counts for `n <= max` and by full
/// class enumeration for `n <= enum_max`; also checks that the degree-0
/// special symbols number `p(n/2)`.
pub fn verify_corollary(max: u64, enum_max: u64, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("corollary", max, fault);
    let counted: Vec<BigInt> = (0..=max).map(|n| phi_counts(n).difference()).collect();
    let expected: Vec<BigInt> = (0..=max as i64).map(degenerate_count).collect();
    v.sequences("corollary/counts", max, &counted, &expected);

    let mut enumerated = Vec::new();
    let mut degree_zero = Vec::new();
    for n in 0..=enum_max {
        enumerated.push(phi_counts_enumerated(n)?.difference());
        let specials = enumerate_phi(n as i64, 0)?
            .into_iter()
            .filter(|c| c.is_special())
            .filter(|c| singles_and_degree(c.canonical()).is_ok_and(|d| d.degree == 0))
            .count();
        degree_zero.push(BigInt::from(specials));
    }
    let expected: Vec<BigInt> = (0..=enum_max as i64).map(degenerate_count).collect();
    v.sequences("corollary/enumeration", enum_max, &enumerated, &expected);
    v.sequences("corollary/degree-zero-specials", enum_max, &degree_zero, &expected);
    Ok(v.finish())
}
