//! Special symbols, their singles, and the families `Phi_Z`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Symbol;
use crate::error::{Error, Result};

/// A special symbol `Z` with its singles `Z_I` (entries not shared by both
/// rows) and degree `|Z_I top row|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialSymbolData {
    pub z: Symbol,
    pub singles: Symbol,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub m_subset: Symbol,
    pub lambda: Symbol,
}

pub fn singles_and_degree(z: &Symbol) -> Result<SpecialSymbolData> {
    if !z.is_special() {
        return Err(Error::NotSpecial(z.to_string()));
    }
    let top = z.top_set();
    let bottom = z.bottom_set();
    let singles = Symbol::from_sets(
        top.difference(&bottom).copied().collect(),
        bottom.difference(&top).copied().collect(),
    )
    .expect("set differences are duplicate-free");
    debug_assert_eq!(singles.defect(), 0);
    Ok(SpecialSymbolData {
        z: z.clone(),
        degree: singles.top().len(),
        singles,
    })
}

/// `Lambda_M = (Z \ M) u M^t`: move every entry of `M` to the other row.
pub fn lambda_of(data: &SpecialSymbolData, m: &Symbol) -> Result<FamilyMember> {
    if !m.is_subsymbol_of(&data.singles) {
        return Err(Error::NotSubsymbol {
            sub: m.to_string(),
            of: data.singles.to_string(),
        });
    }
    let mut top = data.z.top_set();
    let mut bottom = data.z.bottom_set();
    for x in m.top() {
        top.remove(x);
        bottom.insert(*x);
    }
    for x in m.bottom() {
        bottom.remove(x);
        top.insert(*x);
    }
    let lambda = Symbol::from_sets(top.into_iter().collect(), bottom.into_iter().collect())
        .expect("singles never collide with the other row");
    debug_assert_eq!(lambda.defect(), -2 * m.defect());
    Ok(FamilyMember {
        m_subset: m.clone(),
        lambda,
    })
}

/// The subsymbols `M` of the singles, one per value of a `2 * degree` bit
/// counter. Singles are listed top row (decreasing) then bottom row
/// (decreasing); the first listed single is the most significant bit.
fn subsets(singles: &Symbol) -> impl Iterator<Item = Symbol> + '_ {
    let listed: Vec<(bool, u32)> = singles
        .top()
        .iter()
        .map(|&x| (true, x))
        .chain(singles.bottom().iter().map(|&x| (false, x)))
        .collect();
    let width = listed.len();
    (0u64..1 << width).map(move |counter| {
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        for (j, &(in_top, x)) in listed.iter().enumerate() {
            if counter >> (width - 1 - j) & 1 == 1 {
                if in_top {
                    top.push(x);
                } else {
                    bottom.push(x);
                }
            }
        }
        Symbol::new(top, bottom).expect("subsequences of decreasing rows are decreasing")
    })
}

/// All `2^(2 deg Z)` members of `Phi_Z`, in bit-counter order of `M`.
pub fn family(data: &SpecialSymbolData) -> Vec<FamilyMember> {
    subsets(&data.singles)
        .map(|m| lambda_of(data, &m).expect("generated M is a subsymbol of the singles"))
        .collect()
}

/// `#{M : |M| even} - #{M : |M| odd}` over all subsymbols of the singles,
/// by enumeration.
pub fn parity_difference(data: &SpecialSymbolData) -> i64 {
    subsets(&data.singles)
        .map(|m| if m.entry_count() % 2 == 0 { 1 } else { -1 })
        .sum()
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_{k even} C(2 deg, k) - sum_{k odd} C(2 deg, k)` from binomial coefficients.
pub fn parity_closed_form(degree: usize) -> BigInt {
    let l = 2 * degree as u64;
    let (even, odd): (Vec<u64>, Vec<u64>) = (0..=l).partition(|k| k % 2 == 0);
    let even: BigInt = even.into_iter().map(|k| binomial(l, k)).sum();
    let odd: BigInt = odd.into_iter().map(|k| binomial(l, k)).sum();
    even - odd
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn data(s: &str) -> SpecialSymbolData {
        singles_and_degree(&sym(s)).unwrap()
    }

    #[test]
    fn singles_examples() {
        let d = data("4,1;1,0");
        assert_eq!((d.singles.clone(), d.degree), (sym("4;0"), 1));
        let d = data("3,1;2,0");
        assert_eq!((d.singles.clone(), d.degree), (sym("3,1;2,0"), 2));
        let d = data("2,1;2,1");
        assert_eq!((d.singles.clone(), d.degree), (Symbol::empty(), 0));
        assert!(matches!(singles_and_degree(&sym("3,0;2,1")), Err(Error::NotSpecial(_))));
    }

    #[test]
    fn lambda_examples() {
        let z = data("3,1;2,0");
        assert_eq!(lambda_of(&z, &sym("3;-")).unwrap().lambda, sym("1;3,2,0"));
        assert_eq!(lambda_of(&z, &Symbol::empty()).unwrap().lambda, z.z);
        assert_eq!(lambda_of(&z, &sym("3,1;2,0")).unwrap().lambda, sym("2,0;3,1"));
        assert!(matches!(
            lambda_of(&z, &sym("2;-")),
            Err(Error::NotSubsymbol { .. })
        ));
        let w = data("4,1;1,0");
        assert!(lambda_of(&w, &sym("1;-")).is_err());
    }

    /// The 16-entry table for Z = (3,1 ; 2,0), as (M, Lambda_M) pairs.
    const TABLE: [(&str, &str); 16] = [
        ("-;-", "3,1;2,0"),
        ("3;-", "1;3,2,0"),
        ("1;-", "3;2,1,0"),
        ("-;2", "3,2,1;0"),
        ("-;0", "3,1,0;2"),
        ("3,1;-", "-;3,2,1,0"),
        ("-;2,0", "3,2,1,0;-"),
        ("3;2", "2,1;3,0"),
        ("1;0", "3,0;2,1"),
        ("3;0", "1,0;3,2"),
        ("1;2", "3,2;1,0"),
        ("3,1;2", "2;3,1,0"),
        ("3,1;0", "0;3,2,1"),
        ("3;2,0", "2,1,0;3"),
        ("1;2,0", "3,2,0;1"),
        ("3,1;2,0", "2,0;3,1"),
    ];

    #[test]
    fn family_table_entry_for_entry() {
        let z = data("3,1;2,0");
        for (m, lambda) in TABLE {
            assert_eq!(lambda_of(&z, &sym(m)).unwrap().lambda, sym(lambda), "M = {m}");
        }
        let generated: BTreeSet<_> = family(&z).into_iter().map(|f| (f.m_subset, f.lambda)).collect();
        let expected: BTreeSet<_> = TABLE.iter().map(|(m, l)| (sym(m), sym(l))).collect();
        assert_eq!(generated, expected);
    }

    #[test]
    fn family_sizes_and_order() {
        assert_eq!(family(&data("2;2")).len(), 1);
        assert_eq!(family(&data("2;2"))[0].lambda, sym("2;2"));
        let f = family(&data("4,1;1,0"));
        let ms: Vec<String> = f.iter().map(|m| m.m_subset.to_string()).collect();
        assert_eq!(ms, ["-;-", "-;0", "4;-", "4;0"]);
        let lambdas: BTreeSet<_> = f.iter().map(|m| m.lambda.clone()).collect();
        assert_eq!(lambdas.len(), 4);
    }

    #[test]
    fn members_keep_entries_and_defect_rule() {
        let z = data("4,3,2,1;3,2,1,0");
        for m in family(&z) {
            assert_eq!(m.lambda.entries(), z.z.entries());
            assert_eq!(m.lambda.defect(), -2 * m.m_subset.defect());
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_difference(&data("2,1;2,1")), 1);
        assert_eq!(parity_difference(&data("4,1;1,0")), 0);
        assert_eq!(parity_difference(&data("3,1;2,0")), 0);
        for deg in 0..=6 {
            let expected = if deg == 0 { 1 } else { 0 };
            assert_eq!(parity_closed_form(deg), BigInt::from(expected));
        }
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn parity_enumeration_agrees_with_closed_form_up_to_degree_six() {
        // Z = (2δ-1, ..., 3, 1 ; 2δ-2, ..., 2, 0) is special of degree δ.
        for deg in 0..=6u32 {
            let top: Vec<u32> = (0..deg).rev().map(|i| 2 * i + 1).collect();
            let bottom: Vec<u32> = (0..deg).rev().map(|i| 2 * i).collect();
            let z = data(&Symbol::new(top, bottom).unwrap().to_string());
            assert_eq!(z.degree, deg as usize);
            assert_eq!(BigInt::from(parity_difference(&z)), parity_closed_form(z.degree));
            assert_eq!(family(&z).len(), 1 << (2 * deg));
        }
    }
}
