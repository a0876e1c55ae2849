//! Lusztig symbols: pairs of strictly decreasing rows of nonnegative
//! integers, considered up to the shift
//!
//! ```text
//! (a_1, ..., a_m1 ; b_1, ..., b_m2) ~ (a_1+1, ..., a_m1+1, 0 ; b_1+1, ..., b_m2+1, 0)
//! ```
//!
//! Text format: `a1,a2,...;b1,b2,...` with `-` for an empty row.

mod counts;
mod family;
mod upsilon;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{parse_row, write_row};

pub use counts::{phi_counts, phi_counts_enumerated, PhiCounts};
pub use family::{
    family, lambda_of, parity_closed_form, parity_difference, singles_and_degree, FamilyMember,
    SpecialSymbolData,
};
pub use upsilon::{enumerate_phi, enumerate_phi_capped, upsilon, upsilon_inverse};
pub use verify::{verify_corollary, verify_families, verify_family_partition};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

fn strictly_decreasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] > w[1])
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if !strictly_decreasing(&top) || !strictly_decreasing(&bottom) {
            return Err(Error::InvalidArgument(format!(
                "symbol rows must be strictly decreasing: {top:?} ; {bottom:?}"
            )));
        }
        Ok(Symbol { top, bottom })
    }

    /// Rows given as sets in any order; duplicates within a row are an error.
    pub fn from_sets(mut top: Vec<u32>, mut bottom: Vec<u32>) -> Result<Self> {
        top.sort_unstable_by(|a, b| b.cmp(a));
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(top, bottom)
    }

    pub fn empty() -> Self {
        Symbol::default()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn entry_count(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// Entry sum minus `floor(((|A|+|B|-1)/2)^2)`, the floor taken as
    /// `floor((|A|+|B|-1)^2 / 4)` in integers.
    pub fn rank(&self) -> u64 {
        let sum: u64 = self.top.iter().chain(&self.bottom).map(|&x| u64::from(x)).sum();
        let len = self.entry_count() as i64 - 1;
        let correction = (len * len / 4) as u64;
        debug_assert!(sum >= correction, "rank of {self} would be negative");
        sum - correction
    }

    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    pub fn transpose(&self) -> Self {
        Symbol {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// Add 1 to every entry and append 0 to both rows.
    pub fn shift(&self) -> Self {
        let bump = |row: &[u32]| row.iter().map(|x| x + 1).chain([0]).collect();
        Symbol {
            top: bump(&self.top),
            bottom: bump(&self.bottom),
        }
    }

    fn both_rows_end_in_zero(&self) -> bool {
        self.top.last() == Some(&0) && self.bottom.last() == Some(&0)
    }

    /// Undo shifts while both rows contain 0.
    pub fn reduce(&self) -> SymbolClass {
        let mut s = self.clone();
        while s.both_rows_end_in_zero() {
            s.top.pop();
            s.bottom.pop();
            s.top.iter_mut().chain(s.bottom.iter_mut()).for_each(|x| *x -= 1);
        }
        SymbolClass(s)
    }

    pub fn is_subsymbol_of(&self, other: &Symbol) -> bool {
        let contains = |big: &[u32], small: &[u32]| small.iter().all(|x| big.contains(x));
        contains(&other.top, &self.top) && contains(&other.bottom, &self.bottom)
    }

    /// Entries of both rows as a sorted multiset.
    pub fn entries(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }

    pub(crate) fn top_set(&self) -> BTreeSet<u32> {
        self.top.iter().copied().collect()
    }

    pub(crate) fn bottom_set(&self) -> BTreeSet<u32> {
        self.bottom.iter().copied().collect()
    }

    /// Defect 0 and `a1 >= b1 >= a2 >= b2 >= ... >= am >= bm`.
    ///
    /// The shift preserves both conditions, so this is a class property.
    pub fn is_special(&self) -> bool {
        self.defect() == 0
            && self
                .top
                .iter()
                .zip(&self.bottom)
                .flat_map(|(a, b)| [*a, *b])
                .collect::<Vec<_>>()
                .windows(2)
                .all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.top)?;
        f.write_str(";")?;
        write_row(f, &self.bottom)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("symbol `{s}` lacks `;`")))?;
        if bottom.contains(';') {
            return Err(Error::Parse(format!("symbol `{s}` has more than two rows")));
        }
        Symbol::new(parse_row(top)?, parse_row(bottom)?)
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A similarity class, represented by its reduced symbol (no 0 in both rows).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymbolClass(Symbol);

impl SymbolClass {
    pub fn canonical(&self) -> &Symbol {
        &self.0
    }

    pub fn into_symbol(self) -> Symbol {
        self.0
    }

    pub fn rank(&self) -> u64 {
        self.0.rank()
    }

    pub fn defect(&self) -> i64 {
        self.0.defect()
    }

    pub fn transpose(&self) -> SymbolClass {
        SymbolClass(self.0.transpose())
    }

    pub fn is_special(&self) -> bool {
        self.0.is_special()
    }
}

impl From<Symbol> for SymbolClass {
    fn from(s: Symbol) -> Self {
        s.reduce()
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    #[test]
    fn rank_and_defect_examples() {
        let s = sym("3,1;2,0");
        assert_eq!((s.rank(), s.defect()), (4, 0));
        let s = sym("3,2,1,0;-");
        assert_eq!((s.rank(), s.defect()), (4, 4));
        let e = Symbol::empty();
        assert_eq!((e.rank(), e.defect()), (0, 0));
        assert_eq!(e.transpose().transpose(), e);
        assert_eq!(e.to_string(), "-;-");
    }

    #[test]
    fn parse_errors() {
        assert!("3,1".parse::<Symbol>().is_err());
        assert!("1,3;0".parse::<Symbol>().is_err());
        assert!("2,2;0".parse::<Symbol>().is_err());
        assert!("x;0".parse::<Symbol>().is_err());
        assert!("1;0;2".parse::<Symbol>().is_err());
        assert_eq!(sym("-;-"), Symbol::empty());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(sym("4,1;1,0").reduce().canonical(), &sym("4,1;1,0"));
        assert_eq!(sym("4,2,1;2,1,0").reduce().canonical(), &sym("4,2,1;2,1,0"));
        let s = sym("3,1;2,0");
        assert_eq!(s.shift(), sym("4,2,0;3,1,0"));
        assert_eq!(s.shift().reduce().canonical(), &s);
        assert_eq!(sym("2,1,0;1,0").reduce().canonical(), &sym("0;-"));
    }

    #[test]
    fn special_examples() {
        assert!(sym("3,1;2,0").is_special());
        assert!(!sym("3,0;2,1").is_special());
        assert!(sym("2,1;2,1").is_special());
        assert!(!sym("3,1;-").is_special());
        assert!(sym("3,1;2,0").shift().is_special());
        assert!(!sym("3,0;2,1").shift().is_special());
    }

    fn row() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::btree_set(0u32..14, 0..6).prop_map(|s| s.into_iter().rev().collect())
    }

    fn symbol() -> impl Strategy<Value = Symbol> {
        (row(), row()).prop_map(|(a, b)| Symbol::new(a, b).unwrap())
    }

    proptest! {
        #[test]
        fn shift_invariants(s in symbol()) {
            let class = s.reduce();
            prop_assert_eq!(s.shift().rank(), s.rank());
            prop_assert_eq!(s.shift().defect(), s.defect());
            prop_assert_eq!(class.rank(), s.rank());
            prop_assert_eq!(class.defect(), s.defect());
            prop_assert_eq!(s.shift().shift().reduce(), class.clone());
            prop_assert_eq!(class.canonical().shift().reduce(), class.clone());
            let c = class.canonical();
            prop_assert!(!(c.top().contains(&0) && c.bottom().contains(&0)));
            prop_assert_eq!(s.is_special(), s.shift().is_special());
        }

        #[test]
        fn rank_bound(s in symbol()) {
            let d = s.defect();
            prop_assert!(s.rank() >= (d * d / 4) as u64);
        }

        #[test]
        fn text_round_trip(s in symbol()) {
            prop_assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s);
        }
    }
}
