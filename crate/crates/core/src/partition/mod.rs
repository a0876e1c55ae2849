//! Partitions, bipartitions and their exact counts.
//!
//! Text formats: a partition is its parts joined by commas (`3,1`), the empty
//! partition is `-`; a bipartition is `top|bottom` (`2,1|-`).

mod counts;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use counts::{
    count_distinct_parts, count_odd_parts, degenerate_count, distinct_parts_table,
    odd_parts_table, p2_convolution, p2_theorem, p_euler, CountCache,
};
pub use verify::{verify_euler_recursion, verify_theorem_recursion};

/// Default cap on the number of items an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds from arbitrary nonnegative parts: sorts decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_row(s)?)
    }
}

/// An ordered pair of partitions `[top; bottom]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub top: Partition,
    pub bottom: Partition,
}

impl Bipartition {
    pub fn new(top: Partition, bottom: Partition) -> Self {
        Bipartition { top, bottom }
    }

    pub fn weight(&self) -> u64 {
        self.top.weight() + self.bottom.weight()
    }

    pub fn transpose(&self) -> Self {
        Bipartition {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` lacks `|`")))?;
        Ok(Bipartition::new(top.parse()?, bottom.parse()?))
    }
}

pub(crate) fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    if row.is_empty() {
        return f.write_str("-");
    }
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn parse_row(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad entry `{t}` in `{s}`: {e}")))
        })
        .collect()
}

fn check_cap(predicted: &BigInt, cap: u64) -> Result<()> {
    match predicted.to_u64() {
        Some(c) if c <= cap => Ok(()),
        _ => Err(Error::CapExceeded {
            predicted: predicted.to_string(),
            cap,
        }),
    }
}

/// All partitions of `n`, lexicographically decreasing
/// (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]` for `n = 4`).
///
/// Empty for negative `n`; the single empty partition for `n = 0`.
pub fn enumerate_partitions(n: i64) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_partitions_capped(n: i64, cap: u64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Ok(Vec::new());
    }
    check_cap(&p_euler(n), cap)?;
    let n = u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} too large")))?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// All bipartitions of `n`, ordered by top weight descending, then by the
/// canonical order of the top partition, then of the bottom one.
pub fn enumerate_bipartitions(n: i64) -> Result<Vec<Bipartition>> {
    enumerate_bipartitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_bipartitions_capped(n: i64, cap: u64) -> Result<Vec<Bipartition>> {
    if n < 0 {
        return Ok(Vec::new());
    }
    check_cap(&p2_theorem(n), cap)?;
    let tables: Vec<Vec<Partition>> = (0..=n)
        .map(|k| enumerate_partitions_capped(k, cap))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for top_weight in (0..=n).rev() {
        let tops = &tables[top_weight as usize];
        let bottoms = &tables[(n - top_weight) as usize];
        for top in tops {
            for bottom in bottoms {
                out.push(Bipartition::new(top.clone(), bottom.clone()));
            }
        }
    }
    Ok(out)
}
