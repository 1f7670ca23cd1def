mod common;

use common::props;

#[test]
fn resultant_matches_sylvester_determinant() {
    props::resultant_vs_sylvester(200).unwrap();
}

#[test]
fn isolation_matches_sturm_counts() {
    props::isolate_vs_sturm(500).unwrap();
}

#[test]
fn hp_divides_every_order_chain() {
    props::hp_divides_chains(100).unwrap();
}

#[test]
fn open_sample_covers_grid_signs() {
    props::sign_coverage(100).unwrap();
}

#[test]
fn psd_recursion_agrees_with_sample_check() {
    props::psd_recursion_vs_sample(50).unwrap();
}

#[test]
fn psd_ignores_square_factors() {
    props::psd_square_factor(50).unwrap();
}
