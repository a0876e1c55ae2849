use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::enumerate_phi;
use crate::error::Result;
use crate::partition::p2_theorem;

/// `|Phi_{n,d}|` for every even `d`, and the sums `|Phi_n^+|` (d = 0 mod 4)
/// and `|Phi_n^-|` (d = 2 mod 4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiCounts {
    pub plus: BigInt,
    pub minus: BigInt,
    pub by_defect: BTreeMap<i64, BigInt>,
}

impl PhiCounts {
    fn from_by_defect(by_defect: BTreeMap<i64, BigInt>) -> Self {
        let mut plus = BigInt::zero();
        let mut minus = BigInt::zero();
        for (d, count) in &by_defect {
            if d.rem_euclid(4) == 0 {
                plus += count;
            } else {
                minus += count;
            }
        }
        PhiCounts {
            plus,
            minus,
            by_defect,
        }
    }

    pub fn difference(&self) -> BigInt {
        &self.plus - &self.minus
    }

    pub fn total(&self) -> BigInt {
        &self.plus + &self.minus
    }

    /// Defects in the order 0, 2, -2, 4, -4, ...
    pub fn defects_by_magnitude(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.by_defect.keys().copied().collect();
        ds.sort_by_key(|&d| (d.abs(), d < 0));
        ds
    }
}

fn even_defects(n: u64) -> impl Iterator<Item = i64> {
    let n = n as i64;
    (0i64..)
        .take_while(move |k| k * k <= n)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![2 * k, -2 * k] })
}

/// Counts via `|Phi_{n,d}| = p2(n - (d/2)^2)`.
pub fn phi_counts(n: u64) -> PhiCounts {
    let by_defect = even_defects(n)
        .map(|d| (d, p2_theorem(n as i64 - d * d / 4)))
        .collect();
    PhiCounts::from_by_defect(by_defect)
}

/// The same numbers by listing every class.
pub fn phi_counts_enumerated(n: u64) -> Result<PhiCounts> {
    let by_defect = even_defects(n)
        .map(|d| enumerate_phi(n as i64, d).map(|v| (d, BigInt::from(v.len()))))
        .collect::<Result<_>>()?;
    Ok(PhiCounts::from_by_defect(by_defect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p_euler;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rank_four() {
        let c = phi_counts(4);
        let expected: BTreeMap<i64, BigInt> =
            [(0, 20), (2, 10), (-2, 10), (4, 1), (-4, 1)].into_iter().map(|(d, v)| (d, big(v))).collect();
        assert_eq!(c.by_defect, expected);
        assert_eq!((c.plus.clone(), c.minus.clone()), (big(22), big(20)));
        assert_eq!(c.difference(), p_euler(2));
        assert_eq!(c.defects_by_magnitude(), [0, 2, -2, 4, -4]);
        assert_eq!(phi_counts_enumerated(4).unwrap(), c);
    }

    #[test]
    fn small_cases() {
        assert_eq!(phi_counts(1).difference(), big(0));
        let zero = phi_counts(0);
        assert_eq!((zero.plus, zero.minus), (big(1), big(0)));
        for n in 0..=10 {
            assert_eq!(phi_counts_enumerated(n).unwrap(), phi_counts(n));
        }
    }
}
