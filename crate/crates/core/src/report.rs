//! Verification reports.
//!
//! A [`Report`] groups named [`Check`]s. A check passes iff it has no
//! [`Mismatch`]; a report passes iff all of its checks pass.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    /// Coefficient index, or the argument `n` of a counted sequence.
    Index(usize),
    /// Bivariate term `q^q z^z`.
    Term { q: usize, z: i64 },
    /// A named object, e.g. a symbol.
    Item(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Index(i) => write!(f, "index {i}"),
            Location::Term { q, z } => write!(f, "q^{q} z^{z}"),
            Location::Item(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: Location,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub bound: u64,
    pub mismatch: Option<Mismatch>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub bound: u64,
    pub checks: Vec<Check>,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// First failing check together with its mismatch.
    pub fn first_failure(&self) -> Option<(&Check, &Mismatch)> {
        self.checks
            .iter()
            .find_map(|c| c.mismatch.as_ref().map(|m| (c, m)))
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} (bound {}, {:.3}s)",
            self.identity,
            self.bound,
            self.elapsed.as_secs_f64()
        )?;
        for c in &self.checks {
            match &c.mismatch {
                None => writeln!(f, "  ok   {} [bound {}]", c.name, c.bound)?,
                Some(m) => writeln!(
                    f,
                    "  FAIL {} [bound {}]: first mismatch at {}: left {} != right {}",
                    c.name, c.bound, m.location, m.left, m.right
                )?,
            }
        }
        Ok(())
    }
}

/// A single-coefficient corruption applied to the left-hand side of the
/// named check just before comparison. Used to prove that the harness
/// actually detects and locates errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fault {
    pub check: String,
    pub index: usize,
    pub delta: BigInt,
}

impl Fault {
    pub fn new(check: impl Into<String>, index: usize, delta: impl Into<BigInt>) -> Self {
        Fault {
            check: check.into(),
            index,
            delta: delta.into(),
        }
    }

    fn targets(&self, name: &str) -> bool {
        self.check == name
    }
}

/// Collects checks for one report.
pub(crate) struct Verifier<'a> {
    identity: String,
    bound: u64,
    fault: Option<&'a Fault>,
    checks: Vec<Check>,
    start: Instant,
}

impl<'a> Verifier<'a> {
    pub(crate) fn new(identity: &str, bound: u64, fault: Option<&'a Fault>) -> Self {
        Verifier {
            identity: identity.to_string(),
            bound,
            fault,
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    fn fault_for(&self, name: &str) -> Option<&'a Fault> {
        self.fault.filter(|f| f.targets(name))
    }

    /// Compare two coefficient sequences index by index.
    pub(crate) fn sequences(&mut self, name: &str, bound: u64, left: &[BigInt], right: &[BigInt]) {
        let mut corrupted;
        let left = match self.fault_for(name) {
            Some(f) if f.index < left.len() => {
                corrupted = left.to_vec();
                corrupted[f.index] += &f.delta;
                &corrupted[..]
            }
            _ => left,
        };
        let mismatch = first_sequence_mismatch(left, right);
        self.push(name, bound, mismatch);
    }

    /// Compare keyed entries in the given order. A fault perturbs the entry
    /// whose `Location::Index` equals its index, or for other locations the
    /// entry at that position.
    pub(crate) fn entries<I>(&mut self, name: &str, bound: u64, entries: I)
    where
        I: IntoIterator<Item = (Location, BigInt, BigInt)>,
    {
        let fault = self.fault_for(name);
        let mismatch = entries
            .into_iter()
            .enumerate()
            .find_map(|(pos, (loc, mut left, right))| {
                let key = match loc {
                    Location::Index(i) => i,
                    _ => pos,
                };
                if let Some(f) = fault.filter(|f| f.index == key) {
                    left += &f.delta;
                }
                (left != right).then(|| Mismatch {
                    location: loc,
                    left: left.to_string(),
                    right: right.to_string(),
                })
            });
        self.push(name, bound, mismatch);
    }

    /// Compare two bivariate series; a fault perturbs the `z^0` term of
    /// q-row `index`.
    pub(crate) fn bivariate(
        &mut self,
        name: &str,
        bound: u64,
        left: &crate::qseries::BivariateSeries,
        right: &crate::qseries::BivariateSeries,
    ) {
        let mismatch = match self.fault_for(name) {
            Some(f) if f.index <= left.order() => {
                let mut l = left.clone();
                l.add_term(f.index, 0, &f.delta);
                l.first_mismatch(right)
            }
            _ => left.first_mismatch(right),
        };
        self.push(name, bound, mismatch);
    }

    fn push(&mut self, name: &str, bound: u64, mismatch: Option<Mismatch>) {
        self.checks.push(Check {
            name: name.to_string(),
            bound,
            mismatch,
        });
    }

    pub(crate) fn finish(self) -> Report {
        Report {
            identity: self.identity,
            bound: self.bound,
            checks: self.checks,
            elapsed: self.start.elapsed(),
        }
    }
}

pub(crate) fn first_sequence_mismatch(left: &[BigInt], right: &[BigInt]) -> Option<Mismatch> {
    let common = left.len().min(right.len());
    if let Some(i) = (0..common).find(|&i| left[i] != right[i]) {
        return Some(Mismatch {
            location: Location::Index(i),
            left: left[i].to_string(),
            right: right[i].to_string(),
        });
    }
    if left.len() != right.len() {
        let show = |s: &[BigInt]| s.get(common).map_or("<absent>".to_string(), |v| v.to_string());
        return Some(Mismatch {
            location: Location::Index(common),
            left: show(left),
            right: show(right),
        });
    }
    None
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        f64::deserialize(d).map(Duration::from_secs_f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sequence_mismatch_reports_first_index_and_values() {
        let m = first_sequence_mismatch(&big(&[1, 2, 3, 4]), &big(&[1, 2, 5, 0])).unwrap();
        assert_eq!(m.location, Location::Index(2));
        assert_eq!((m.left.as_str(), m.right.as_str()), ("3", "5"));
        assert!(first_sequence_mismatch(&big(&[1]), &big(&[1])).is_none());
        let m = first_sequence_mismatch(&big(&[1]), &big(&[1, 7])).unwrap();
        assert_eq!(m.location, Location::Index(1));
    }

    #[test]
    fn fault_is_detected_at_its_index() {
        let fault = Fault::new("x", 3, 1);
        let mut v = Verifier::new("id", 5, Some(&fault));
        let s = big(&[1, 1, 2, 3, 5]);
        v.sequences("x", 4, &s, &s);
        v.sequences("y", 4, &s, &s);
        let r = v.finish();
        assert!(!r.passed());
        let (c, m) = r.first_failure().unwrap();
        assert_eq!(c.name, "x");
        assert_eq!(m.location, Location::Index(3));
        assert!(r.check("y").unwrap().passed());
    }
}
