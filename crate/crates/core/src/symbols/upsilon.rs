use super::{Symbol, SymbolClass};
use crate::error::Result;
use crate::partition::{enumerate_bipartitions_capped, Bipartition, Partition, DEFAULT_ENUMERATION_CAP};

fn unstaircase(row: &[u32]) -> Partition {
    let m = row.len() as u32;
    Partition::from_unsorted(
        row.iter()
            .enumerate()
            .map(|(i, &a)| a - (m - 1 - i as u32))
            .collect(),
    )
}

fn staircase(part: &Partition, len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| part.parts().get(i).copied().unwrap_or(0) + (len - 1 - i) as u32)
        .collect()
}

/// Subtract the staircase `(m-1, ..., 1, 0)` from each row and drop zeros.
///
/// The image is the same for every member of a similarity class and is a
/// bipartition of `rank - floor(defect^2 / 4)`.
pub fn upsilon(class: &SymbolClass) -> Bipartition {
    let s = class.canonical();
    Bipartition::new(unstaircase(s.top()), unstaircase(s.bottom()))
}

/// The class of defect `defect` whose image under [`upsilon`] is `b`.
///
/// Pads the rows to the smallest lengths `m1 >= len(top)`, `m2 >= len(bottom)`
/// with `m1 - m2 = defect`, adds staircases and reduces.
pub fn upsilon_inverse(b: &Bipartition, defect: i64) -> SymbolClass {
    let top_len = b.top.len() as i64;
    let bottom_len = b.bottom.len() as i64;
    let m2 = bottom_len.max(top_len - defect).max(-defect).max(0);
    let m1 = m2 + defect;
    Symbol::new(staircase(&b.top, m1 as usize), staircase(&b.bottom, m2 as usize))
        .expect("staircase rows are strictly decreasing")
        .reduce()
}

/// Classes of rank `n` and defect `d`, as the image of the bipartitions of
/// `n - floor(d^2/4)` under [`upsilon_inverse`], in bipartition order.
pub fn enumerate_phi(n: i64, d: i64) -> Result<Vec<SymbolClass>> {
    enumerate_phi_capped(n, d, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_phi_capped(n: i64, d: i64, cap: u64) -> Result<Vec<SymbolClass>> {
    let weight = n - d * d / 4;
    Ok(enumerate_bipartitions_capped(weight, cap)?
        .iter()
        .map(|b| upsilon_inverse(b, d))
        .collect())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::partition::{enumerate_bipartitions, p2_theorem};

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn class(s: &str) -> SymbolClass {
        sym(s).reduce()
    }

    fn bip(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    /// Independent oracle: all reduced symbols of the given rank and defect by
    /// exhaustive search over row lengths and entry sums.
    fn brute_phi(n: u64, d: i64) -> BTreeSet<SymbolClass> {
        // strictly decreasing rows of `len` entries below `below` summing to `sum`
        fn rows(len: usize, below: u64, sum: u64) -> Vec<Vec<u32>> {
            if len == 0 {
                return if sum == 0 { vec![vec![]] } else { vec![] };
            }
            let mut out = Vec::new();
            for first in (len as u64 - 1)..below.min(sum + 1) {
                for rest in rows(len - 1, first, sum - first) {
                    let mut row = vec![first as u32];
                    row.extend(rest);
                    out.push(row);
                }
            }
            out
        }
        let mut out = BTreeSet::new();
        for m2 in 0..=(n as i64 + d.abs()) {
            let m1 = m2 + d;
            if m1 < 0 {
                continue;
            }
            let len = m1 + m2 - 1;
            let total = n + (len * len / 4) as u64;
            for top_sum in 0..=total {
                for a in rows(m1 as usize, u64::MAX, top_sum) {
                    for b in rows(m2 as usize, u64::MAX, total - top_sum) {
                        let s = Symbol::new(a.clone(), b).unwrap();
                        assert_eq!(s.rank(), n);
                        if s.reduce().canonical() == &s {
                            out.insert(SymbolClass(s));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&class("4;0")), bip("4|-"));
        assert_eq!(upsilon(&class("3,1;2,0")), bip("2,1|1"));
        assert_eq!(upsilon(&class("-;-")), bip("-|-"));
    }

    #[test]
    fn upsilon_inverse_examples() {
        assert_eq!(upsilon_inverse(&bip("4|-"), 0), class("4;0"));
        assert_eq!(upsilon_inverse(&bip("-|-"), 4), class("3,2,1,0;-"));
        assert_eq!(upsilon_inverse(&bip("-|-"), -4), class("-;3,2,1,0"));
        assert_eq!(upsilon_inverse(&bip("-|-"), 0), class("-;-"));
    }

    #[test]
    fn round_trips() {
        for n in 0..=8 {
            for d in (-4..=4).step_by(2) {
                for b in enumerate_bipartitions(n).unwrap() {
                    let c = upsilon_inverse(&b, d);
                    assert_eq!(upsilon(&c), b);
                    assert_eq!(c.defect(), d);
                    assert_eq!(c.rank(), b.weight() + (d * d / 4) as u64);
                    assert_eq!(upsilon_inverse(&upsilon(&c), d), c);
                }
            }
        }
    }

    #[test]
    fn phi_matches_brute_force() {
        for n in 0..=5u64 {
            for d in -4i64..=4 {
                let listed: BTreeSet<_> = enumerate_phi(n as i64, d).unwrap().into_iter().collect();
                assert_eq!(listed, brute_phi(n, d), "n={n} d={d}");
                assert_eq!(listed.len() as i64, i64::try_from(p2_theorem(n as i64 - d * d / 4)).unwrap());
            }
        }
    }

    #[test]
    fn rank_four_tables() {
        let set = |v: &[&str]| v.iter().map(|s| class(s)).collect::<BTreeSet<_>>();
        let listed = |d| enumerate_phi(4, d).unwrap().into_iter().collect::<BTreeSet<_>>();
        let half = [
            "4;0", "3;1", "4,1;1,0", "3,2;1,0", "3,1;2,0", "3,0;2,1", "4,2,1;2,1,0", "3,2,1;3,1,0",
            "4,3,2,1;3,2,1,0",
        ];
        let mut phi0 = set(&half);
        phi0.extend(half.iter().map(|s| class(s).transpose()));
        phi0.extend(set(&["2;2", "2,1;2,1"]));
        assert_eq!(phi0.len(), 20);
        assert_eq!(listed(0), phi0);
        let phi2 = set(&[
            "4,0;-", "3,1;-", "3,2,1;0", "4,1,0;1", "3,2,0;1", "3,1,0;2", "2,1,0;3", "4,2,1,0;2,1",
            "3,2,1,0;3,1", "4,3,2,1,0;3,2,1",
        ]);
        assert_eq!(listed(2), phi2);
        assert_eq!(listed(4), set(&["3,2,1,0;-"]));
        for d in [2, 4] {
            let transposed: BTreeSet<_> = listed(d).iter().map(SymbolClass::transpose).collect();
            assert_eq!(listed(-d), transposed);
        }
        assert!(listed(6).is_empty());
    }

    #[test]
    fn degenerate_symbols_map_to_degenerate_bipartitions() {
        for n in 0..=10 {
            for c in enumerate_phi(n, 0).unwrap() {
                let s = c.canonical();
                if s.is_degenerate() {
                    assert!(s.is_special());
                    assert!(upsilon(&c).is_degenerate());
                }
            }
        }
    }
}
