//! Golden coefficient files in the `i<TAB>coeff` text format, produced by
//! naive factor-by-factor polynomial multiplication outside this crate.

use bipart_core::qseries::{product_series, ProductSpec};
use bipart_core::TruncatedSeries;

const EULER_PRODUCT: &str = include_str!("golden/euler_product_60.txt");
const BIPARTITION_GF: &str = include_str!("golden/bipartition_gf_60.txt");

#[test]
fn euler_product_matches_golden_text() {
    let series = product_series(&ProductSpec::euler_power(1), 60).unwrap();
    assert_eq!(series.to_text(), EULER_PRODUCT);
}

#[test]
fn bipartition_generating_function_matches_golden_text() {
    let series = product_series(&ProductSpec::euler_power(-2), 60).unwrap();
    assert_eq!(series.to_text(), BIPARTITION_GF);
    let parsed = TruncatedSeries::parse_text(BIPARTITION_GF).unwrap();
    assert_eq!(parsed, series);
}

#[test]
fn golden_files_are_mutual_inverses_squared() {
    let euler = TruncatedSeries::parse_text(EULER_PRODUCT).unwrap();
    let p2 = TruncatedSeries::parse_text(BIPARTITION_GF).unwrap();
    let one = euler.mul(&euler).unwrap().mul(&p2).unwrap();
    assert_eq!(one, TruncatedSeries::one(60));
}
