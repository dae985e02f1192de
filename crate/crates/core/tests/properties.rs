use std::f64::consts::FRAC_PI_4;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unruh_coding::coding::{
    average_coded_state, capacity, decoded_information_closed_form, holevo_information, negativity,
    pauli_encode, EncodingEnsemble,
};
use unruh_coding::hilbert::{
    hermitian_eigenvalues, kron, partial_trace, von_neumann_entropy, ComplexMatrix, DensityMatrix,
    QubitLabel, C64,
};
use unruh_coding::unruh::{
    accelerate_pair, channel_closed_form, reduce_to_region, RegionPair, RindlerAngle,
};
use unruh_coding::xstate::{x_state_eigenvalues, x_state_from_c, XCoefficients, XStateParams};

fn q(i: usize) -> QubitLabel {
    QubitLabel::new(i).unwrap()
}

/// Normalised G G^dagger for a dense complex G.
fn density_from_entries(dim: usize, entries: &[(f64, f64)]) -> DensityMatrix {
    let mut g = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let (re, im) = entries[i * dim + j];
            g[(i, j)] = C64::new(re, im);
        }
    }
    let m = g.matmul(&g.dagger());
    let tr = m.trace().re;
    let mut m = m.scale(1.0 / tr);
    // remove the rounding asymmetry of the product
    for i in 0..dim {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
    }
    DensityMatrix::new(m).unwrap()
}

fn arb_density(dim: usize) -> impl Strategy<Value = DensityMatrix> {
    prop::collection::vec((-1.0..1.0_f64, -1.0..1.0_f64), dim * dim)
        .prop_filter("non-degenerate", |v| {
            v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3)
        })
        .prop_map(move |v| density_from_entries(dim, &v))
}

fn arb_params() -> impl Strategy<Value = XStateParams> {
    (-1.0..=1.0_f64, -1.0..=1.0_f64, -1.0..=1.0_f64)
        .prop_filter_map("physical", |(x, y, z)| XStateParams::new(x, y, z).ok())
}

fn arb_angle() -> impl Strategy<Value = RindlerAngle> {
    (0.0..=FRAC_PI_4).prop_map(|r| RindlerAngle::new(r).unwrap())
}

/// Random single-qubit unitary from Euler angles.
fn unitary(alpha: f64, beta: f64, gamma: f64) -> ComplexMatrix {
    let (s, c) = (beta / 2.0).sin_cos();
    let e = |phi: f64| C64::from_polar(1.0, phi);
    ComplexMatrix::from_rows(&[
        vec![
            e(-(alpha + gamma) / 2.0) * c,
            -e(-(alpha - gamma) / 2.0) * s,
        ],
        vec![e((alpha - gamma) / 2.0) * s, e((alpha + gamma) / 2.0) * c],
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partial_trace_keeps_trace_and_hermiticity(rho in arb_density(16), keep in 0usize..4) {
        let red = partial_trace(&rho, &[q(keep), q((keep + 2) % 4)]).unwrap();
        prop_assert!((red.matrix().trace().re - 1.0).abs() <= 1e-12);
        prop_assert!(red.matrix().hermitian_deviation() <= 1e-12);
    }

    #[test]
    fn partial_trace_inverts_kron(rho in arb_density(2), sigma in arb_density(2)) {
        let joint = DensityMatrix::new(kron(rho.matrix(), sigma.matrix())).unwrap();
        let back = partial_trace(&joint, &[q(0)]).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) <= 1e-12);
    }

    #[test]
    fn eigenvalues_sum_to_trace(rho in arb_density(16)) {
        let eig = hermitian_eigenvalues(rho.matrix()).unwrap();
        let sum: f64 = eig.iter().sum();
        prop_assert!((sum - rho.matrix().trace().re).abs() <= 1e-10);
        prop_assert!(eig.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(*eig.last().unwrap() >= -1e-10);
    }

    #[test]
    fn two_qubit_entropy_is_bounded(rho in arb_density(4)) {
        let s = von_neumann_entropy(&rho);
        prop_assert!((0.0..=2.0 + 1e-12).contains(&s));
    }

    #[test]
    fn x_state_is_valid_density(p in arb_params()) {
        let m = XCoefficients::from_params(&p).to_matrix();
        prop_assert!(DensityMatrix::new(m).is_ok());
    }

    #[test]
    fn capacity_ignores_alice_local_unitary(
        p in arb_params(), ra in arb_angle(), rb in arb_angle(),
        a in 0.0..6.3_f64, b in 0.0..3.2_f64, g in 0.0..6.3_f64,
    ) {
        for pair in RegionPair::ALL {
            let rho = channel_closed_form(&XCoefficients::from_params(&p), ra, rb, pair)
                .to_density().unwrap();
            let u = kron(&unitary(a, b, g), &ComplexMatrix::identity(2));
            let rotated = DensityMatrix::new(rho.matrix().conjugate_by(&u)).unwrap();
            let c0 = capacity(&rho).unwrap();
            let c1 = capacity(&rotated).unwrap();
            prop_assert!((c0 - c1).abs() <= 1e-10, "{pair}: {c0} vs {c1}");
        }
    }

    #[test]
    fn holevo_bounded_for_any_ensemble(
        rho in arb_density(4),
        w in prop::array::uniform4(0.0..1.0_f64),
    ) {
        let total: f64 = w.iter().sum();
        prop_assume!(total > 1e-6);
        let mut probs = w.map(|x| x / total);
        probs[3] = 1.0 - probs[0] - probs[1] - probs[2];
        prop_assume!(probs[3] >= 0.0);
        let ens = EncodingEnsemble::new(probs).unwrap();
        let encoded = pauli_encode(&rho, &ens).unwrap();
        let chi = holevo_information(&encoded).unwrap();
        let s_cod = von_neumann_entropy(&average_coded_state(&encoded).unwrap());
        prop_assert!(chi >= 0.0);
        prop_assert!(chi <= s_cod + 1e-12);
        prop_assert!(chi <= 2.0 + 1e-12);
    }

    #[test]
    fn reduced_channels_are_x_form_and_valid(p in arb_params(), ra in arb_angle(), rb in arb_angle()) {
        let full = accelerate_pair(&x_state_from_c(&p), ra, rb).unwrap();
        prop_assert!((full.matrix().trace().re - 1.0).abs() <= 1e-12);
        for pair in RegionPair::ALL {
            let red = reduce_to_region(&full, pair).unwrap();
            prop_assert!(red.matrix().x_form_violation().0 <= 1e-15);
            prop_assert!(DensityMatrix::new(red.matrix().clone()).is_ok());
            prop_assert!(XCoefficients::from_matrix(red.matrix()).is_ok());
        }
    }
}

#[test]
fn closed_form_spectrum_matches_jacobi_on_1000_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1000 {
        let p = XStateParams::random(&mut rng);
        let coeffs = XCoefficients::from_params(&p);
        let mut closed = x_state_eigenvalues(&coeffs).to_vec();
        closed.sort_by(|a, b| b.total_cmp(a));
        let jacobi = hermitian_eigenvalues(&coeffs.to_matrix()).unwrap();
        for (c, j) in closed.iter().zip(&jacobi) {
            assert!((c - j).abs() <= 1e-10, "{p:?}: {closed:?} vs {jacobi:?}");
        }
    }
}

#[test]
fn closed_form_equals_oracle_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut states = vec![XStateParams::MES, XStateParams::PES];
    states.extend((0..20).map(|_| XStateParams::random(&mut rng)));
    let angles: Vec<RindlerAngle> = (0..9)
        .map(|i| {
            RindlerAngle::new(if i == 8 {
                FRAC_PI_4
            } else {
                FRAC_PI_4 * i as f64 / 8.0
            })
            .unwrap()
        })
        .collect();

    for p in &states {
        let rho = x_state_from_c(p);
        let coeffs = XCoefficients::from_params(p);
        for &ra in &angles {
            for &rb in &angles {
                let full = accelerate_pair(&rho, ra, rb).unwrap();
                for pair in RegionPair::ALL {
                    let oracle = reduce_to_region(&full, pair).unwrap();
                    let closed = channel_closed_form(&coeffs, ra, rb, pair).to_matrix();
                    let d = closed.max_abs_diff(oracle.matrix());
                    assert!(d <= 1e-12, "{p:?} {pair} {ra:?} {rb:?}: {d:e}");
                    assert!((oracle.matrix().trace().re - 1.0).abs() <= 1e-12);
                }
            }
        }
    }
}

#[test]
fn twirl_identity_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut states = vec![XStateParams::MES, XStateParams::PES];
    states.extend((0..5).map(|_| XStateParams::random(&mut rng)));
    for p in &states {
        let coeffs = XCoefficients::from_params(p);
        for i in 0..=8 {
            for j in 0..=8 {
                let ra = RindlerAngle::new(FRAC_PI_4 * i as f64 / 8.0).unwrap();
                let rb = RindlerAngle::new(FRAC_PI_4 * j as f64 / 8.0).unwrap();
                for pair in RegionPair::ALL {
                    let ch = channel_closed_form(&coeffs, ra, rb, pair);
                    let rho = ch.to_density().unwrap();
                    let cap = capacity(&rho).unwrap();
                    let dec = decoded_information_closed_form(&ch);
                    let chi = holevo_information(
                        &pauli_encode(&rho, &EncodingEnsemble::uniform()).unwrap(),
                    )
                    .unwrap();
                    assert!((cap - dec).abs() <= 1e-10, "{pair}: {cap} {dec}");
                    assert!((cap - chi).abs() <= 1e-10, "{pair}: {cap} {chi}");
                }
            }
        }
    }
}

#[test]
fn region_one_negativity_does_not_grow_with_acceleration() {
    let coeffs = XCoefficients::from_params(&XStateParams::MES);
    let values: Vec<f64> = (0..=32)
        .map(|i| {
            let r = RindlerAngle::new(FRAC_PI_4 * i as f64 / 32.0).unwrap();
            negativity(
                &channel_closed_form(&coeffs, r, r, RegionPair::IxI)
                    .to_density()
                    .unwrap(),
            )
            .unwrap()
        })
        .collect();
    assert!((values[0] - 0.5).abs() <= 1e-12);
    assert!(
        values.windows(2).all(|w| w[1] <= w[0] + 1e-12),
        "{values:?}"
    );
}

#[test]
fn region_two_relabeling_leaves_information_invariant() {
    // flip |0> <-> |1> on both antiparticle modes
    let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let id = ComplexMatrix::identity(2);
    let flip = kron(&kron(&id, &x), &kron(&id, &x));
    for p in [XStateParams::MES, XStateParams::PES] {
        for (ra, rb) in [(0.2, 0.6), (FRAC_PI_4, 0.1), (0.5, 0.5)] {
            let full = accelerate_pair(
                &x_state_from_c(&p),
                RindlerAngle::new(ra).unwrap(),
                RindlerAngle::new(rb).unwrap(),
            )
            .unwrap();
            let relabeled = DensityMatrix::new(full.matrix().conjugate_by(&flip)).unwrap();
            for pair in RegionPair::ALL {
                let a = reduce_to_region(&full, pair).unwrap();
                let b = reduce_to_region(&relabeled, pair).unwrap();
                let (ea, eb) = (a.eigenvalues(), b.eigenvalues());
                for (x, y) in ea.iter().zip(&eb) {
                    assert!((x - y).abs() <= 1e-12);
                }
                assert!((capacity(&a).unwrap() - capacity(&b).unwrap()).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn alice_modes_are_consistent_across_regions() {
    let coeffs = XCoefficients::from_params(&XStateParams::PES);
    let ra = RindlerAngle::new(0.4).unwrap();
    let rb = RindlerAngle::new(0.7).unwrap();
    let marginal = |pair, keep| {
        let ch = channel_closed_form(&coeffs, ra, rb, pair)
            .to_density()
            .unwrap();
        partial_trace(&ch, &[q(keep)]).unwrap()
    };
    // A_I seen from I-I and I-II, A_II from II-II and II-I, B_I from I-I and II-I
    let pairs = [
        (marginal(RegionPair::IxI, 0), marginal(RegionPair::IxII, 0)),
        (
            marginal(RegionPair::IIxII, 0),
            marginal(RegionPair::IIxI, 0),
        ),
        (marginal(RegionPair::IxI, 1), marginal(RegionPair::IIxI, 1)),
    ];
    for (a, b) in &pairs {
        assert!(a.matrix().max_abs_diff(b.matrix()) <= 1e-12);
    }
    // particle number in region I minus antiparticle number in region II
    // reproduces each party's Minkowski occupation
    let excited = |pair, keep| marginal(pair, keep).matrix()[(1, 1)].re;
    let alice = excited(RegionPair::IxI, 0) - excited(RegionPair::IIxII, 0);
    let bob = excited(RegionPair::IxI, 1) - excited(RegionPair::IIxII, 1);
    assert!((alice - (coeffs.a33 + coeffs.a44)).abs() <= 1e-12);
    assert!((bob - (coeffs.a22 + coeffs.a44)).abs() <= 1e-12);
}

#[test]
fn unaccelerated_reductions() {
    for p in [XStateParams::MES, XStateParams::PES] {
        let rho = x_state_from_c(&p);
        let full = accelerate_pair(&rho, RindlerAngle::ZERO, RindlerAngle::ZERO).unwrap();
        assert_eq!(reduce_to_region(&full, RegionPair::IxI).unwrap(), rho);
        for pair in [RegionPair::IxII, RegionPair::IIxI] {
            let red = reduce_to_region(&full, pair).unwrap();
            assert_eq!(negativity(&red).unwrap(), 0.0);
            let prod = kron(
                partial_trace(&red, &[q(0)]).unwrap().matrix(),
                partial_trace(&red, &[q(1)]).unwrap().matrix(),
            );
            assert!(red.matrix().max_abs_diff(&prod) <= 1e-15);
        }
    }
}
