use num_bigint::BigInt;

use super::{plus_product_series, product_series, theta_alternating, BivariateSeries, Factor, ProductSpec, TruncatedSeries};
use crate::error::Result;
use crate::partition::{distinct_parts_table, odd_parts_table, CountCache};
use crate::report::{Fault, Report, Verifier};

/// `sum_{n in Z} q^(n(n+1)/2) z^n` to q-order `order`.
pub fn jacobi_sum_side(order: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(order);
    let one = BigInt::from(1);
    // n and -n-1 share the exponent n(n+1)/2.
    for n in (0i64..).take_while(|n| (n * (n + 1) / 2) as usize <= order) {
        let q = (n * (n + 1) / 2) as usize;
        s.add_term(q, n, &one);
        s.add_term(q, -n - 1, &one);
    }
    s
}

/// `prod_{k>=1} (1 + z q^k)(1 + z^-1 q^(k-1))(1 - q^k)` to q-order `order`,
/// optionally without the `(1 - q^k)` factors.
///
/// Only factors with a q-exponent at most `order` are multiplied in; the
/// z-range of each row follows from the factors actually used.
pub fn jacobi_product_side(order: usize, with_euler_factor: bool) -> BivariateSeries {
    let mut s = BivariateSeries::one(order);
    for k in 1..=order + 1 {
        s.mul_binomial(k, 1, 1);
        s.mul_binomial(k - 1, -1, 1);
        if with_euler_factor {
            s.mul_binomial(k, 0, -1);
        }
    }
    s
}

pub fn verify_jacobi_triple_product(order: usize, fault: Option<&Fault>) -> Report {
    let mut v = Verifier::new("jacobi", order as u64, fault);
    v.bivariate(
        "jacobi/triple-product",
        order as u64,
        &jacobi_sum_side(order),
        &jacobi_product_side(order, true),
    );
    v.finish()
}

fn spec(factors: &[(u64, u64, i64)]) -> ProductSpec {
    ProductSpec::new(factors.iter().map(|&(s, m, e)| Factor::new(s, m, e)).collect())
        .expect("constant factor specs are valid")
}

/// The alternating theta series against the three product forms met on the
/// way from the triple product, plus Euler's distinct = odd identity as
/// series and as independently counted sequences.
pub fn verify_lemma_theta_product(order: usize, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("lemma22", order as u64, fault);
    let bound = order as u64;
    let theta = theta_alternating(order);

    // prod (1-q^k)^2 / (1-q^{2k})
    let quotient = product_series(&spec(&[(1, 1, 2), (2, 2, -1)]), order)?;
    // prod (1-q^{2k-1})^2 (1-q^{2k})
    let odd_squared = product_series(&spec(&[(1, 2, 2), (2, 2, 1)]), order)?;
    // prod (1-q^{2k-1}) (1-q^k)
    let odd_euler = product_series(&spec(&[(1, 2, 1), (1, 1, 1)]), order)?;
    v.sequences("lemma22/theta-vs-quotient", bound, theta.coeffs(), quotient.coeffs());
    v.sequences("lemma22/theta-vs-odd-squared", bound, theta.coeffs(), odd_squared.coeffs());
    v.sequences("lemma22/theta-vs-odd-euler", bound, theta.coeffs(), odd_euler.coeffs());

    let distinct = plus_product_series(1, order)?;
    let odd = product_series(&spec(&[(1, 2, -1)]), order)?;
    v.sequences("lemma22/distinct-vs-odd-series", bound, distinct.coeffs(), odd.coeffs());
    v.sequences("lemma22/distinct-series-vs-counts", bound, distinct.coeffs(), &distinct_parts_table(order));
    v.sequences("lemma22/odd-series-vs-counts", bound, odd.coeffs(), &odd_parts_table(order));
    Ok(v.finish())
}

/// `(sum p2(n) q^n)(sum (-1)^k q^(k^2)) = sum p(n) q^(2n)`.
pub fn verify_first_proof(order: usize, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("firstproof", order as u64, fault);
    let p2 = product_series(&ProductSpec::euler_power(-2), order)?;
    let left = p2.mul(&theta_alternating(order))?;
    let p = CountCache::global().p_values(order / 2);
    let mut right = TruncatedSeries::zero(order);
    for (m, value) in p.into_iter().enumerate() {
        *right.coeff_mut(2 * m) = value;
    }
    v.sequences("firstproof/convolution", order as u64, left.coeffs(), right.coeffs());
    Ok(v.finish())
}
