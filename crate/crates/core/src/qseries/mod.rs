//! Truncated formal power series over exact integers and the q-series
//! identities behind the p2 recursion and its mod-5 congruences.

mod appendix;
mod bivariate;
mod identities;
mod product;
mod series;

pub use appendix::{
    dissection_polynomial, f_series, f_squared_expected, f_terms, rogers_ramanujan_c,
    verify_appendix_identities, verify_congruence, verify_f_squared, CTerm,
};
pub use bivariate::BivariateSeries;
pub use identities::{
    jacobi_product_side, jacobi_sum_side, verify_first_proof, verify_jacobi_triple_product,
    verify_lemma_theta_product,
};
pub use product::{plus_product_series, product_series, Factor, ProductSpec};
pub use series::{theta_alternating, TruncatedSeries};
