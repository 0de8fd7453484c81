#![allow(dead_code)]

use nalgebra::DMatrix;
use trinoise_core::channels::{Correlation, Normalization, ScenarioTemplate, SiteSet};
use trinoise_core::{Complex64, ComplexMatrix};

/// Eigenvalues of a Hermitian matrix via nalgebra's symmetric solver on the
/// real embedding `[[Re, -Im], [Im, Re]]`; every eigenvalue appears twice there.
pub fn oracle_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim();
    let embed = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = m[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let mut values: Vec<f64> = embed.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values.into_iter().step_by(2).collect()
}

/// `-2 × Σ negative eigenvalues` of the partial transpose, via the oracle.
pub fn oracle_negativity(rho: &ComplexMatrix, shift: u32) -> f64 {
    // partial transpose written out independently of the library routine
    let mask = 1usize << shift;
    let pt = {
        let mut out = ComplexMatrix::zeros(8);
        for r in 0..8 {
            for c in 0..8 {
                let swapped_r = (r & !mask) | (c & mask);
                let swapped_c = (c & !mask) | (r & mask);
                out[(swapped_r, swapped_c)] = rho[(r, c)];
            }
        }
        out
    };
    -2.0 * oracle_eigenvalues(&pt)
        .into_iter()
        .filter(|&x| x < -1e-9)
        .sum::<f64>()
}

pub fn oracle_tripartite(rho: &ComplexMatrix) -> f64 {
    (oracle_negativity(rho, 2) * oracle_negativity(rho, 1) * oracle_negativity(rho, 0)).cbrt()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `G G† / tr(G G†)` for a 8×8 `G` filled from 128 reals.
pub fn random_density(seed: &[f64]) -> ComplexMatrix {
    assert_eq!(seed.len(), 128);
    let g = ComplexMatrix::from_row_major(
        8,
        (0..64).map(|i| c(seed[2 * i], seed[2 * i + 1])).collect(),
    )
    .unwrap();
    let m = g.matmul(&g.dagger()).unwrap();
    let t = m.trace().re;
    m.scale(1.0 / t)
}

pub fn random_matrix(dim: usize, seed: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_row_major(
        dim,
        (0..dim * dim)
            .map(|i| c(seed[2 * i], seed[2 * i + 1]))
            .collect(),
    )
    .unwrap()
}

pub fn template(
    sites: &str,
    correlation: Correlation,
    normalization: Normalization,
) -> ScenarioTemplate {
    ScenarioTemplate::new(SiteSet::parse(sites).unwrap(), correlation, normalization)
}
