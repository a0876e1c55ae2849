//! Hirschhorn's 5-dissection of the partition generating function and the
//! squared version that yields the mod-5 congruences for p2.
//!
//! With `R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))` and `c = R(q^5)`:
//!
//! ```text
//! sum p(n) q^n  = (q^25;q^25)^5  / (q^5;q^5)^6  * f(q)
//! sum p2(n) q^n = (q^25;q^25)^10 / (q^5;q^5)^12 * f(q)^2
//! ```
//!
//! where `f` is a Laurent polynomial in `c` with polynomial coefficients in `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{product_series, BivariateSeries, Factor, ProductSpec, TruncatedSeries};
use crate::error::Result;
use crate::partition::CountCache;
use crate::report::{Fault, Location, Report, Verifier};

/// `coeff * c^c_exp * q^q_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CTerm {
    pub coeff: i64,
    pub c_exp: i64,
    pub q_exp: usize,
}

const fn t(coeff: i64, c_exp: i64, q_exp: usize) -> CTerm {
    CTerm { coeff, c_exp, q_exp }
}

const F_TERMS: [CTerm; 9] = [
    t(1, 4, 0),
    t(1, 3, 1),
    t(2, 2, 2),
    t(3, 1, 3),
    t(5, 0, 4),
    t(-3, -1, 5),
    t(2, -2, 6),
    t(-1, -3, 7),
    t(1, -4, 8),
];

const F_SQUARED_COEFFS: [i64; 17] = [
    1, 2, 5, 10, 20, 16, 27, 20, 15, -20, 27, -16, 20, -10, 5, -2, 1,
];

/// The nine terms of `f`.
pub fn f_terms() -> &'static [CTerm] {
    &F_TERMS
}

/// The published 17-term expansion of `f^2`: `coeff_j c^(8-j) q^j`.
pub fn f_squared_expected() -> Vec<CTerm> {
    F_SQUARED_COEFFS
        .iter()
        .enumerate()
        .map(|(j, &coeff)| t(coeff, 8 - j as i64, j))
        .collect()
}

/// The c-polynomial `P_r` with `sum p2(5n+r) q^(5n+r) = 5 * prefactor * P_r`,
/// for `r` in 2..=4.
pub fn dissection_polynomial(residue: usize) -> Option<[CTerm; 3]> {
    match residue {
        2 => Some([t(1, 6, 2), t(4, 1, 7), t(4, -4, 12)]),
        3 => Some([t(2, 5, 3), t(3, 0, 8), t(-2, -5, 13)]),
        4 => Some([t(4, 4, 4), t(-4, -1, 9), t(1, -6, 14)]),
        _ => None,
    }
}

fn pochhammer_spec(factors: &[(u64, u64, i64)]) -> ProductSpec {
    ProductSpec::new(factors.iter().map(|&(s, m, e)| Factor::pochhammer(s, m, e)).collect())
        .expect("constant factor specs are valid")
}

/// `c = R(q^5)`, computed as `R` to order `order / 5` and then dilated.
pub fn rogers_ramanujan_c(order: usize) -> Result<TruncatedSeries> {
    let r = product_series(
        &pochhammer_spec(&[(2, 5, 1), (3, 5, 1), (1, 5, -1), (4, 5, -1)]),
        order / 5,
    )?;
    r.dilate(5, order)
}

/// Powers `c^-k ..= c^k` of a unit series, indexed by `exp + k`.
struct Powers {
    max: i64,
    table: Vec<TruncatedSeries>,
}

impl Powers {
    fn new(c: &TruncatedSeries, max: i64) -> Result<Self> {
        let inv = c.invert()?;
        let mut up = vec![TruncatedSeries::one(c.order())];
        let mut down = vec![TruncatedSeries::one(c.order())];
        for _ in 0..max {
            up.push(up.last().unwrap().mul(c)?);
            down.push(down.last().unwrap().mul(&inv)?);
        }
        let mut table: Vec<_> = down.into_iter().skip(1).rev().collect();
        table.extend(up);
        Ok(Powers { max, table })
    }

    fn get(&self, exp: i64) -> &TruncatedSeries {
        &self.table[(exp + self.max) as usize]
    }
}

fn eval_terms(terms: &[CTerm], powers: &Powers, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for term in terms {
        let piece = powers.get(term.c_exp).shift(term.q_exp).scale(term.coeff);
        acc = &acc + &piece;
    }
    acc
}

/// `f(q)` with `c = R(q^5)` substituted.
pub fn f_series(order: usize) -> Result<TruncatedSeries> {
    let c = rogers_ramanujan_c(order)?;
    Ok(eval_terms(&F_TERMS, &Powers::new(&c, 4)?, order))
}

fn as_bivariate(terms: &[CTerm], order: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(order);
    for term in terms {
        s.add_term(term.q_exp, term.c_exp, &BigInt::from(term.coeff));
    }
    s
}

/// Squares `f` with `c` kept formal and compares with the 17-term display.
pub fn verify_f_squared(fault: Option<&Fault>) -> Report {
    let mut v = Verifier::new("appendix/f-squared", 16, fault);
    let f = as_bivariate(&F_TERMS, 16);
    v.bivariate(
        "appendix/f-squared",
        16,
        &f.mul(&f),
        &as_bivariate(&f_squared_expected(), 16),
    );
    v.finish()
}

/// The two generating-function factorizations, the three 5-dissections of
/// the p2 series and the `p(5n+4)` dissection, all to `order`.
pub fn verify_appendix_identities(order: usize, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("appendix", order as u64, fault);
    let bound = order as u64;
    let cache = CountCache::global();
    let p = TruncatedSeries::from_coeffs(cache.p_values(order))?;
    let p2 = TruncatedSeries::from_coeffs(cache.p2_values(order))?;

    let c = rogers_ramanujan_c(order)?;
    let off_support = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 5 != 0)
        .map(|(i, x)| (Location::Index(i), x.clone(), BigInt::zero()));
    v.entries("appendix/c-support", bound, off_support);

    let powers = Powers::new(&c, 8)?;
    let f = eval_terms(&F_TERMS, &powers, order);
    let f2 = eval_terms(&f_squared_expected(), &powers, order);
    v.sequences("appendix/f-squared-series", bound, f.mul(&f)?.coeffs(), f2.coeffs());

    let pre5 = product_series(&pochhammer_spec(&[(25, 25, 5), (5, 5, -6)]), order)?;
    let pre10 = product_series(&pochhammer_spec(&[(25, 25, 10), (5, 5, -12)]), order)?;

    v.sequences("appendix/partition-modulo", bound, pre5.mul(&f)?.coeffs(), p.coeffs());
    v.sequences("appendix/p-squared-is-p2", bound, p.mul(&p)?.coeffs(), p2.coeffs());
    v.sequences("appendix/bipartition-modulo", bound, pre10.mul(&f2)?.coeffs(), p2.coeffs());

    for residue in 2..=4 {
        let poly = dissection_polynomial(residue).expect("residue in 2..=4");
        let right = pre10.mul(&eval_terms(&poly, &powers, order))?.scale(5);
        v.sequences(
            &format!("appendix/p2-dissection-{residue}"),
            bound,
            p2.dissect(5, residue)?.coeffs(),
            right.coeffs(),
        );
    }

    let right = pre5.shift(4).scale(5);
    v.sequences("appendix/p-dissection-4", bound, p.dissect(5, 4)?.coeffs(), right.coeffs());
    Ok(v.finish())
}

/// `p2(m) = 0 mod 5` for `m = 2, 3, 4 mod 5` and `p(m) = 0 mod 5` for
/// `m = 4 mod 5`, for all `m <= order`.
pub fn verify_congruence(order: usize, fault: Option<&Fault>) -> Report {
    let mut v = Verifier::new("congruence", order as u64, fault);
    let cache = CountCache::global();
    let five = BigInt::from(5);
    let residues = |values: Vec<BigInt>, classes: &'static [usize]| {
        let five = five.clone();
        values
            .into_iter()
            .enumerate()
            .filter(move |(m, _)| classes.contains(&(m % 5)))
            .map(move |(m, x)| (Location::Index(m), x.mod_floor(&five), BigInt::zero()))
    };
    v.entries("congruence/p2", order as u64, residues(cache.p2_values(order), &[2, 3, 4]));
    v.entries("congruence/p", order as u64, residues(cache.p_values(order), &[4]));
    v.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_shape() {
        let c = rogers_ramanujan_c(10).unwrap();
        assert_eq!(c.coeff(0), BigInt::from(1));
        for i in [1, 2, 3, 4, 6, 7, 8, 9] {
            assert!(c.coeff(i).is_zero(), "index {i}");
        }
        // Brute force to order 2: (1-q^2) / (1-q) = 1 + q + 0 q^2, so
        // c = 1 + q^5 + 0 q^10.
        assert_eq!(c.coeff(5), BigInt::from(1));
        assert_eq!(c.coeff(10), BigInt::from(0));
    }

    #[test]
    fn f_low_coefficients() {
        let f = f_series(30).unwrap();
        assert_eq!(f.coeff(0), BigInt::from(1));
        assert_eq!(f.coeff(3), BigInt::from(3));
        assert_eq!(f.coeff(4), BigInt::from(5));
    }

    #[test]
    fn f_squared_display() {
        assert!(verify_f_squared(None).passed());
        let f = as_bivariate(&F_TERMS, 16);
        let sq = f.mul(&f);
        assert_eq!(sq.coeff(0, 8), BigInt::from(1));
        assert_eq!(sq.coeff(6, 2), BigInt::from(27));
        assert_eq!(sq.coeff(9, -1), BigInt::from(-20));
        assert_eq!(sq.terms().count(), 17);
    }

    #[test]
    fn appendix_small_order() {
        let r = verify_appendix_identities(100, None).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn dissection_leading_coefficient() {
        let order = 20;
        let c = rogers_ramanujan_c(order).unwrap();
        let powers = Powers::new(&c, 8).unwrap();
        let pre10 = product_series(&pochhammer_spec(&[(25, 25, 10), (5, 5, -12)]), order).unwrap();
        let right = pre10
            .mul(&eval_terms(&dissection_polynomial(2).unwrap(), &powers, order))
            .unwrap()
            .scale(5);
        assert_eq!(right.coeff(2), BigInt::from(5));
        let pre5 = product_series(&pochhammer_spec(&[(25, 25, 5), (5, 5, -6)]), order).unwrap();
        assert_eq!(pre5.shift(4).scale(5).coeff(4), BigInt::from(5));
    }

    #[test]
    fn congruence_small() {
        let r = verify_congruence(500, None);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn unknown_residue() {
        assert!(dissection_polynomial(0).is_none());
        assert!(dissection_polynomial(5).is_none());
    }
}
