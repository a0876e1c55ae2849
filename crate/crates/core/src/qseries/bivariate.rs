use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::report::{Location, Mismatch};

/// Series in `q` truncated at `q^order` whose coefficients are Laurent
/// polynomials in a second variable `z`, stored sparsely.
///
/// Zero coefficients are never stored, so structural equality is
/// coefficient-wise equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<BTreeMap<i64, BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            rows: vec![BTreeMap::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.add_term(0, 0, &BigInt::from(1));
        s
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `q^q z^z`.
    pub fn coeff(&self, q: usize, z: i64) -> BigInt {
        self.rows
            .get(q)
            .and_then(|r| r.get(&z))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero `z`-terms of the `q^q` row.
    pub fn row(&self, q: usize) -> &BTreeMap<i64, BigInt> {
        &self.rows[q]
    }

    /// Adds `value * q^q z^z`; terms past the order are dropped.
    pub fn add_term(&mut self, q: usize, z: i64, value: &BigInt) {
        if q > self.order() || value.is_zero() {
            return;
        }
        let row = &mut self.rows[q];
        let entry = row.entry(z).or_default();
        *entry += value;
        if entry.is_zero() {
            row.remove(&z);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(q, row)| row.iter().map(move |(&z, c)| (q, z, c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (qa, za, ca) in self.terms() {
            if qa > order {
                break;
            }
            for (qb, zb, cb) in other.terms() {
                if qa + qb > order {
                    break;
                }
                out.add_term(qa + qb, za + zb, &(ca * cb));
            }
        }
        out
    }

    /// In-place multiplication by `1 + sign * z^z q^q`.
    pub fn mul_binomial(&mut self, q: usize, z: i64, sign: i64) {
        let sign = BigInt::from(sign);
        let order = self.order();
        if q > order {
            return;
        }
        // Rows are rewritten from the top so every read sees the old value.
        for row in (q..=order).rev() {
            let source: Vec<(i64, BigInt)> = self.rows[row - q]
                .iter()
                .map(|(&k, v)| (k + z, v * &sign))
                .collect();
            for (k, v) in source {
                self.add_term(row, k, &v);
            }
        }
    }

    /// First differing term in `(q, z)` order, with both coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let order = self.order().max(other.order());
        let empty = BTreeMap::new();
        for q in 0..=order {
            let a = self.rows.get(q).unwrap_or(&empty);
            let b = other.rows.get(q).unwrap_or(&empty);
            if a == b {
                continue;
            }
            let z = a
                .keys()
                .chain(b.keys())
                .copied()
                .filter(|z| a.get(z) != b.get(z))
                .min()
                .expect("rows differ");
            return Some(Mismatch {
                location: Location::Term { q, z },
                left: self.coeff(q, z).to_string(),
                right: other.coeff(q, z).to_string(),
            });
        }
        None
    }
}
