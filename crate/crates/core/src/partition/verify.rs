use num_bigint::BigInt;
use num_integer::Integer;

use super::{degenerate_count, enumerate_bipartitions, enumerate_partitions, CountCache};
use crate::error::Result;
use crate::qseries::{product_series, ProductSpec};
use crate::report::{Fault, Location, Report, Verifier};

/// Euler's recursion against exhaustive enumeration (`n <= enum_max`) and
/// against the expansion of `prod 1/(1-q^k)` (`n <= max`).
pub fn verify_euler_recursion(max: usize, enum_max: usize, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("euler", max as u64, fault);
    let cache = CountCache::global();

    let p = cache.p_values(enum_max);
    let counted = (0..=enum_max)
        .map(|n| enumerate_partitions(n as i64).map(|ps| BigInt::from(ps.len())))
        .collect::<Result<Vec<_>>>()?;
    v.sequences("euler/enumeration", enum_max as u64, &p, &counted);

    let series = product_series(&ProductSpec::euler_power(-1), max)?;
    v.sequences(
        "euler/product-series",
        max as u64,
        &cache.p_values(max),
        series.coeffs(),
    );
    Ok(v.finish())
}

/// The k^2 recursion for p2 against the convolution `sum p(j) p(n-j)`,
/// the product `prod 1/(1-q^k)^2`, and enumeration for `n <= enum_max`.
pub fn verify_theorem_recursion(max: usize, enum_max: usize, fault: Option<&Fault>) -> Result<Report> {
    let mut v = Verifier::new("thm1", max as u64, fault);
    let cache = CountCache::global();
    let recursion = cache.p2_values(max);

    let convolution: Vec<BigInt> = (0..=max as i64).map(|n| cache.p2_convolution(n)).collect();
    v.sequences("thm1/recursion-vs-convolution", max as u64, &recursion, &convolution);

    let series = product_series(&ProductSpec::euler_power(-2), max)?;
    v.sequences("thm1/product-series", max as u64, &recursion, series.coeffs());

    let bis = (0..=enum_max)
        .map(|n| enumerate_bipartitions(n as i64))
        .collect::<Result<Vec<_>>>()?;
    let counted: Vec<BigInt> = bis.iter().map(|b| BigInt::from(b.len())).collect();
    v.sequences("thm1/enumeration", enum_max as u64, &recursion[..=enum_max.min(max)], &counted[..=enum_max.min(max)]);

    let fixed: Vec<BigInt> = bis
        .iter()
        .map(|b| BigInt::from(b.iter().filter(|x| x.transpose() == **x).count()))
        .collect();
    let degenerate: Vec<BigInt> = (0..=enum_max as i64).map(degenerate_count).collect();
    v.sequences("thm1/degenerate-enumeration", enum_max as u64, &degenerate, &fixed);

    let two = BigInt::from(2);
    v.entries(
        "thm1/nondegenerate-even",
        max as u64,
        recursion.iter().enumerate().map(|(n, p2)| {
            let rest = p2 - degenerate_count(n as i64);
            (Location::Index(n), rest.mod_floor(&two), BigInt::from(0))
        }),
    );
    Ok(v.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        assert!(verify_euler_recursion(60, 15, None).unwrap().passed());
        assert!(verify_theorem_recursion(80, 8, None).unwrap().passed());
    }

    #[test]
    fn injected_fault_is_located() {
        let fault = Fault::new("thm1/recursion-vs-convolution", 17, 1);
        let r = verify_theorem_recursion(40, 5, Some(&fault)).unwrap();
        let (c, m) = r.first_failure().unwrap();
        assert_eq!(c.name, fault.check);
        assert_eq!(m.location, Location::Index(17));
    }
}
