use num_traits::Zero;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// `prod_{k>=0} (1 - q^(offset + k*step))^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub offset: u64,
    pub step: u64,
    pub exponent: i64,
}

impl Factor {
    pub fn new(offset: u64, step: u64, exponent: i64) -> Self {
        Factor {
            offset,
            step,
            exponent,
        }
    }

    /// `(q^offset; q^step)^exponent` in Pochhammer notation.
    pub fn pochhammer(offset: u64, step: u64, exponent: i64) -> Self {
        Self::new(offset, step, exponent)
    }

    fn validate(&self) -> Result<()> {
        let reject = |reason| {
            Err(Error::InvalidFactor {
                offset: self.offset,
                step: self.step,
                exponent: self.exponent,
                reason,
            })
        };
        if self.step == 0 {
            return reject("step must be at least 1");
        }
        if self.offset == 0 && self.exponent < 0 {
            return reject("offset 0 with negative exponent divides by zero");
        }
        Ok(())
    }

    /// Exponents `offset + k*step` that survive truncation at `order`.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        let order = order as u64;
        let (offset, step) = (self.offset, self.step);
        (0u64..)
            .map(move |k| offset + k * step)
            .take_while(move |&e| e <= order)
            .map(|e| e as usize)
    }
}

/// A finite product of [`Factor`]s.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        factors.iter().try_for_each(Factor::validate)?;
        Ok(ProductSpec { factors })
    }

    /// `(q;q)^exponent = prod_{k>=1} (1-q^k)^exponent`.
    pub fn euler_power(exponent: i64) -> Self {
        ProductSpec {
            factors: vec![Factor::new(1, 1, exponent)],
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn with(mut self, factor: Factor) -> Result<Self> {
        factor.validate()?;
        self.factors.push(factor);
        Ok(self)
    }
}

/// In-place multiplication by `(1 - q^e)`.
fn mul_one_minus(coeffs: &mut [num_bigint::BigInt], e: usize) {
    if e == 0 {
        coeffs.iter_mut().for_each(|c| c.set_zero());
        return;
    }
    for i in (e..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] -= &lo[i - e];
    }
}

/// Expand `spec` modulo `q^(order+1)`.
///
/// Factors `(1 - q^t)` with `t > order` are congruent to 1 and skipped.
/// Positive powers are multiplied in directly; the negative-power factors are
/// collected into one positive product which is inverted once.
pub fn product_series(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    spec.factors.iter().try_for_each(Factor::validate)?;
    let mut numerator = TruncatedSeries::one(order).into_coeffs();
    let mut denominator = TruncatedSeries::one(order).into_coeffs();
    for f in &spec.factors {
        let target = if f.exponent >= 0 { &mut numerator } else { &mut denominator };
        for e in f.exponents(order) {
            for _ in 0..f.exponent.unsigned_abs() {
                mul_one_minus(target, e);
            }
        }
    }
    let numerator = TruncatedSeries::from_coeffs(numerator)?;
    let denominator = TruncatedSeries::from_coeffs(denominator)?;
    if denominator == TruncatedSeries::one(order) {
        return Ok(numerator);
    }
    numerator.mul(&denominator.invert()?)
}

/// `prod_{k>=1} (1 + q^(k*step))`, which does not fit the `(1 - q^t)` form.
pub fn plus_product_series(step: usize, order: usize) -> Result<TruncatedSeries> {
    if step == 0 {
        return Err(Error::InvalidArgument("step must be at least 1".into()));
    }
    let mut coeffs = TruncatedSeries::one(order).into_coeffs();
    for e in (step..=order).step_by(step) {
        for i in (e..=order).rev() {
            let (lo, hi) = coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}
