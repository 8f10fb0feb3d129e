//! Twin variance from the Wick expansion against direct sums over
//! photon-number distributions.

mod common;

use common::{
    normal_ordered_twin, product, squeezed_distribution, thermal_distribution, tms_distribution,
};
use twinbath::{tms_state, twin_variance, CovarianceState};

#[test]
fn two_mode_squeezed_vacuum() {
    for (r, cutoff) in [(0.3, 30), (0.8, 30), (1.2, 80)] {
        let fock = normal_ordered_twin(&tms_distribution(r, cutoff));
        let wick = twin_variance(&tms_state(r).unwrap());
        assert!((fock - wick).abs() < 1e-6, "r = {r}: {fock} vs {wick}");
    }
}

#[test]
fn thermal_product() {
    for (n1, n2) in [(1.0, 1.0), (0.3, 1.7), (2.0, 0.0)] {
        let p = product(
            &thermal_distribution(n1, 200),
            &thermal_distribution(n2, 200),
        );
        let fock = normal_ordered_twin(&p);
        let wick = twin_variance(&CovarianceState::thermal(n1, n2).unwrap());
        assert!((fock - wick).abs() < 1e-9, "({n1}, {n2}): {fock} vs {wick}");
        assert!((fock - (n1 * n1 + n2 * n2)).abs() < 1e-9);
    }
}

#[test]
fn squeezed_product() {
    for (r1, r2) in [(0.4, 0.4), (0.2, 0.7), (0.0, 0.5)] {
        let p = product(
            &squeezed_distribution(r1, 200),
            &squeezed_distribution(r2, 200),
        );
        let total: f64 = p.iter().flatten().sum();
        assert!((total - 1.0).abs() < 1e-12);
        let fock = normal_ordered_twin(&p);
        let wick = twin_variance(&CovarianceState::squeezed_product(r1, r2).unwrap());
        assert!((fock - wick).abs() < 1e-8, "({r1}, {r2}): {fock} vs {wick}");
    }
}

#[test]
fn thermal_with_squeezed() {
    let p = product(
        &thermal_distribution(0.6, 200),
        &squeezed_distribution(0.5, 200),
    );
    let thermal = CovarianceState::thermal(0.6, 0.0)
        .unwrap()
        .matrix()
        .fixed_view::<2, 2>(0, 0)
        .into_owned();
    let squeezed = CovarianceState::squeezed_product(0.0, 0.5)
        .unwrap()
        .matrix()
        .fixed_view::<2, 2>(2, 2)
        .into_owned();
    let mut sigma = nalgebra::Matrix4::zeros();
    sigma.fixed_view_mut::<2, 2>(0, 0).copy_from(&thermal);
    sigma.fixed_view_mut::<2, 2>(2, 2).copy_from(&squeezed);
    let wick = twin_variance(&CovarianceState::new(sigma).unwrap());
    let fock = normal_ordered_twin(&p);
    assert!((fock - wick).abs() < 1e-8, "{fock} vs {wick}");
}
