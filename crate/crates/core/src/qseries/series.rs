use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Power series `c_0 + c_1 q + ... + c_N q^N` modulo `q^(N+1)`.
///
/// Holds exactly `order + 1` coefficients. Binary operations require equal
/// orders; nothing is ever silently re-truncated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `coeff * q^exponent`, or zero if the exponent exceeds the order.
    pub fn monomial(order: usize, exponent: usize, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Takes the coefficients as given; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Coefficients `values[0..=order]`, padded with zeros.
    pub fn from_slice<T: Into<BigInt> + Clone>(order: usize, values: &[T]) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(values) {
            *c = v.clone().into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; zero past the order.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeff_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let n = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
        inv.push(c0.clone());
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &inv[m - k];
                }
            }
            // c0 is its own inverse
            inv.push(-(acc * c0));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Integer power; negative exponents go through [`Self::invert`].
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 { self.invert()? } else { self.clone() };
        let mut result = Self::one(self.order());
        let mut square = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(result)
    }

    /// Multiply by `q^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Substitute `q -> q^factor` and re-truncate at `target` order.
    ///
    /// Fails unless this series carries every coefficient the target needs,
    /// i.e. `order >= target / factor`.
    pub fn dilate(&self, factor: usize, target: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidArgument("dilation factor must be positive".into()));
        }
        let needed = target / factor;
        if self.order() < needed {
            return Err(Error::DilationOutOfRange {
                factor,
                target,
                needed,
                have: self.order(),
            });
        }
        let mut out = Self::zero(target);
        for i in 0..=needed {
            out.coeffs[i * factor] = self.coeffs[i].clone();
        }
        Ok(out)
    }

    /// Keep the coefficients whose index is `residue` mod `modulus`, in place.
    pub fn dissect(&self, modulus: usize, residue: usize) -> Result<Self> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::InvalidArgument(format!(
                "dissection needs 0 <= residue < modulus, got {residue} mod {modulus}"
            )));
        }
        let mut out = Self::zero(self.order());
        for i in (residue..=self.order()).step_by(modulus) {
            out.coeffs[i] = self.coeffs[i].clone();
        }
        Ok(out)
    }

    /// One `i<TAB>coeff` line per coefficient.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(s, "{i}\t{c}");
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (idx, value) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `i<TAB>coeff`", line_no + 1)))?;
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", line_no + 1)))?;
            if idx != coeffs.len() {
                return Err(Error::Parse(format!(
                    "line {}: expected index {}, found {idx}",
                    line_no + 1,
                    coeffs.len()
                )));
            }
            coeffs.push(
                value
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", line_no + 1)))?,
            );
        }
        Self::from_coeffs(coeffs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Panics on order mismatch; use [`TruncatedSeries::try_add`] to handle it.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("series orders differ")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.try_sub(rhs).expect("series orders differ")
    }
}

/// `sum_{n in Z} (-1)^n q^(n^2)` to order `order`.
pub fn theta_alternating(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for n in (1usize..).take_while(|n| n * n <= order) {
        s.coeffs[n * n] = if n % 2 == 0 { BigInt::from(2) } else { BigInt::from(-2) };
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_slice(v.len() - 1, v)
    }

    #[test]
    fn difference_of_squares() {
        let a = s(&[1, 1, 0]);
        let b = s(&[1, -1, 0]);
        assert_eq!(a.mul(&b).unwrap(), s(&[1, 0, -1]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = s(&[1, 1]);
        let b = s(&[1, 1, 1]);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 1, right: 2 }));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[-1, 1, 0]).invert().unwrap(), s(&[-1, -1, -1]));
        assert!(matches!(s(&[0, 1, 2]).invert(), Err(Error::NonUnitConstant(_))));
        assert!(matches!(s(&[2, 1]).invert(), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn theta_coefficients() {
        let t = theta_alternating(30);
        assert_eq!(t.coeff(0), BigInt::from(1));
        assert_eq!(t.coeff(1), BigInt::from(-2));
        assert_eq!(t.coeff(3), BigInt::from(0));
        assert_eq!(t.coeff(4), BigInt::from(2));
        assert_eq!(t.coeff(25), BigInt::from(-2));
        let abs_sum: BigInt = t.coeffs().iter().map(|c| c.abs()).sum();
        assert_eq!(abs_sum, BigInt::from(1 + 2 * 5));
    }

    #[test]
    fn dissect_cases() {
        let a = s(&[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(a.dissect(1, 0).unwrap(), a);
        assert_eq!(a.dissect(3, 1).unwrap(), s(&[0, 2, 0, 0, 5, 0, 0]));
        assert!(TruncatedSeries::one(12).dissect(5, 2).unwrap().is_zero());
        assert!(a.dissect(0, 0).is_err());
        assert!(a.dissect(3, 3).is_err());
    }

    #[test]
    fn dilation_bounds() {
        let a = s(&[1, -1, 2]);
        assert_eq!(a.dilate(5, 10).unwrap().coeffs()[5], BigInt::from(-1));
        assert_eq!(a.dilate(5, 14).unwrap().coeff(10), BigInt::from(2));
        assert!(matches!(a.dilate(5, 15), Err(Error::DilationOutOfRange { needed: 3, .. })));
    }

    #[test]
    fn shift_and_pow() {
        let a = s(&[1, 1, 0, 0]);
        assert_eq!(a.shift(2), s(&[0, 0, 1, 1]));
        assert_eq!(a.pow(3).unwrap(), s(&[1, 3, 3, 1]));
        assert_eq!(a.pow(-1).unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(a.pow(0).unwrap(), TruncatedSeries::one(3));
    }

    #[test]
    fn text_format() {
        let a = s(&[1, -2, 0]);
        assert_eq!(a.to_text(), "0\t1\n1\t-2\n2\t0\n");
        assert_eq!(TruncatedSeries::parse_text(&a.to_text()).unwrap(), a);
        assert!(TruncatedSeries::parse_text("0\t1\n2\t3\n").is_err());
        assert!(TruncatedSeries::parse_text("0 1\n").is_err());
        assert!(TruncatedSeries::parse_text("").is_err());
    }

    fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(-50i64..50, order + 1).prop_map(move |v| s(&v))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (prop::bool::ANY, series(order)).prop_map(|(neg, mut a)| {
            *a.coeff_mut(0) = if neg { BigInt::from(-1) } else { BigInt::from(1) };
            a
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(12), b in series(12), c in series(12)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&TruncatedSeries::one(12)).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&(&b + &c)).unwrap(), &a.mul(&b).unwrap() + &a.mul(&c).unwrap());
        }

        #[test]
        fn inverse_is_two_sided_involution(a in unit_series(15)) {
            let inv = a.invert().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(15));
            prop_assert_eq!(inv.mul(&a).unwrap(), TruncatedSeries::one(15));
            prop_assert_eq!(inv.invert().unwrap(), a);
        }

        #[test]
        fn dissections_sum_to_whole(a in series(20), m in 1usize..7) {
            let mut total = TruncatedSeries::zero(20);
            for r in 0..m {
                total = &total + &a.dissect(m, r).unwrap();
            }
            prop_assert_eq!(total, a);
        }

        #[test]
        fn text_round_trip(a in series(8)) {
            prop_assert_eq!(TruncatedSeries::parse_text(&a.to_text()).unwrap(), a);
        }
    }
}
