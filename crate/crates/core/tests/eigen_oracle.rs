//! Hermitian eigenvalues, partial transposes and negativities checked against
//! an independent nalgebra-based oracle.

mod common;

use common::*;
use proptest::prelude::*;
use trinoise_core::channels::{Correlation, Normalization};
use trinoise_core::negativity::{bipartite_negativity, tripartite_negativity, StateLabel};
use trinoise_core::states::{DensityMatrix, TraceContract};
use trinoise_core::{ComplexMatrix, Qubit};

const SQRT2_OVER_3: f64 = std::f64::consts::SQRT_2 / 3.0;

#[test]
fn ghz_partial_transpose_minimum_is_minus_half() {
    let rho = StateLabel::Ghz.initial_density();
    for q in Qubit::ALL {
        let pt = rho.matrix().partial_transpose(q).unwrap();
        let oracle = oracle_eigenvalues(&pt);
        assert!((oracle[0] + 0.5).abs() < 1e-12);
        let ours = pt.hermitian_eigenvalues().unwrap();
        assert!((ours.min() + 0.5).abs() < 1e-12);
        for (a, b) in ours.eigenvalues.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn w_partial_transpose_has_one_negative_eigenvalue() {
    let rho = StateLabel::W.initial_density();
    for q in Qubit::ALL {
        let pt = rho.matrix().partial_transpose(q).unwrap();
        let oracle = oracle_eigenvalues(&pt);
        let negatives: Vec<_> = oracle.iter().filter(|&&x| x < -1e-9).collect();
        assert_eq!(negatives.len(), 1);
        assert!((negatives[0] + SQRT2_OVER_3).abs() < 1e-12);
        // Schmidt amplitudes √(1/3), √(2/3) across the one-vs-rest cut
        let schmidt = 2.0 * (1.0f64 / 3.0).sqrt() * (2.0f64 / 3.0).sqrt();
        assert!((2.0 * negatives[0].abs() - schmidt).abs() < 1e-12);
        let ours = pt.hermitian_eigenvalues().unwrap();
        assert_eq!(ours.eigenvalues.iter().filter(|&&x| x < -1e-9).count(), 1);
        assert!((ours.min() + SQRT2_OVER_3).abs() < 1e-12);
    }
}

#[test]
fn initial_state_negativities() {
    let ghz = tripartite_negativity(&StateLabel::Ghz.initial_density()).unwrap();
    for v in [ghz.n_a_bc, ghz.n_b_ac, ghz.n_c_ab, ghz.tripartite] {
        assert!((v - 1.0).abs() < 1e-12);
    }
    let w = tripartite_negativity(&StateLabel::W.initial_density()).unwrap();
    let expected = 2.0 * SQRT2_OVER_3;
    for v in [w.n_a_bc, w.n_b_ac, w.n_c_ab, w.tripartite] {
        assert!((v - expected).abs() < 1e-12);
    }
    assert!((oracle_tripartite(StateLabel::W.initial_density().matrix()) - expected).abs() < 1e-12);
}

#[test]
fn eigen_residuals_on_channel_outputs() {
    for state in [StateLabel::Ghz, StateLabel::W] {
        for p in [0.1, 0.5, 0.9] {
            let t = template("abc", Correlation::NonCorrelated, Normalization::Literal);
            let out = trinoise_core::channels::evolve(&state.initial_density(), &t.at(p).unwrap())
                .unwrap();
            let pt = out.matrix().partial_transpose(Qubit::B).unwrap();
            let eig = pt.hermitian_eigen().unwrap();
            let norm = pt.frobenius_norm();
            for k in 0..8 {
                let v = eig.vector(k);
                let mut residual = 0.0;
                for r in 0..8 {
                    let mv: trinoise_core::Complex64 = (0..8).map(|j| pt[(r, j)] * v[j]).sum();
                    residual += (mv - v[r] * eig.values[k]).norm_sqr();
                }
                assert!(residual.sqrt() <= 1e-8 * norm);
            }
        }
    }
}

#[test]
fn single_site_ghz_a_cut_closed_form() {
    // a-bc cut of GHZ with qubit a depolarized: max(0, |1-4p/3| - 2p/3)
    let t = template("a", Correlation::Correlated, Normalization::Renormalize);
    for i in 0..=20 {
        let p = i as f64 / 20.0;
        let out =
            trinoise_core::channels::evolve(&StateLabel::Ghz.initial_density(), &t.at(p).unwrap())
                .unwrap();
        let expected = ((1.0 - 4.0 * p / 3.0).abs() - 2.0 * p / 3.0).max(0.0);
        let ours = bipartite_negativity(&out, Qubit::A).unwrap();
        assert!(
            (ours - expected).abs() < 1e-9,
            "p = {p}: {ours} vs {expected}"
        );
        assert!((oracle_negativity(out.matrix(), 2) - expected).abs() < 1e-9);
    }
}

/// `U = Π (cos θ I - i sin θ P)` over three-qubit Pauli strings.
fn pauli_rotation_unitary(picks: &[(usize, f64)]) -> ComplexMatrix {
    let paulis = [
        ComplexMatrix::identity(2),
        ComplexMatrix::pauli_x(),
        ComplexMatrix::pauli_y(),
        ComplexMatrix::pauli_z(),
    ];
    let mut u = ComplexMatrix::identity(8);
    for &(code, theta) in picks {
        let p = paulis[code % 4]
            .kron(&paulis[(code / 4) % 4])
            .kron(&paulis[(code / 16) % 4]);
        let mut rot = ComplexMatrix::identity(8).scale(theta.cos());
        for r in 0..8 {
            for col in 0..8 {
                rot[(r, col)] += p[(r, col)] * c(0.0, -theta.sin());
            }
        }
        u = u.matmul(&rot).unwrap();
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugated_diagonal_is_recovered(
        diag in prop::collection::vec(-2.0f64..2.0, 8),
        picks in prop::collection::vec((1usize..64, -3.0f64..3.0), 1..6),
    ) {
        let u = pauli_rotation_unitary(&picks);
        let m = u.matmul(&ComplexMatrix::from_real_diagonal(&diag)).unwrap().matmul(&u.dagger()).unwrap();
        let m = m.hermitian_part();
        let mut sorted = diag.clone();
        sorted.sort_by(f64::total_cmp);
        let ours = m.hermitian_eigenvalues().unwrap();
        for (a, b) in ours.eigenvalues.iter().zip(&sorted) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn random_hermitian_matches_oracle(seed in prop::collection::vec(-1.0f64..1.0, 128)) {
        let m = random_matrix(8, &seed).hermitian_part();
        let ours = m.hermitian_eigen().unwrap();
        let oracle = oracle_eigenvalues(&m);
        for (a, b) in ours.values.iter().zip(&oracle) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        prop_assert!((ours.values.iter().sum::<f64>() - m.trace().re).abs() < 1e-10);
        let norm = m.frobenius_norm();
        for k in 0..8 {
            let v = ours.vector(k);
            let mut residual = 0.0;
            for r in 0..8 {
                let mv: trinoise_core::Complex64 = (0..8).map(|j| m[(r, j)] * v[j]).sum();
                residual += (mv - v[r] * ours.values[k]).norm_sqr();
            }
            prop_assert!(residual.sqrt() <= 1e-8 * norm);
        }
    }

    #[test]
    fn negativity_bounds_and_trace_norm_identity(seed in prop::collection::vec(-1.0f64..1.0, 128)) {
        let rho = DensityMatrix::new(random_density(&seed), TraceContract::Unit);
        for q in Qubit::ALL {
            let n = bipartite_negativity(&rho, q).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&n));
            let pt = rho.matrix().partial_transpose(q).unwrap();
            let trace_norm = pt.hermitian_eigenvalues().unwrap().trace_norm();
            prop_assert!((n - (trace_norm - 1.0)).abs() < 1e-9);
            prop_assert!((n - oracle_negativity(rho.matrix(), q.shift())).abs() < 1e-9);
        }
    }
}
