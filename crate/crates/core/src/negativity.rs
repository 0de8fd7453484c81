//! Bipartite and tripartite negativity, sweeps over the channel strength, and
//! sudden-death / revival detection.

use alloc::vec::Vec;
use core::fmt;

use crate::channels::{apply_channel, assemble_scenario, ScenarioTemplate};
use crate::matrix::Qubit;
use crate::states::{density_from_pure, ghz_state, w_state, DensityMatrix};
use crate::{Error, Result};

/// Tripartite negativity at or below this value counts as dead.
pub const DEATH_THRESHOLD: f64 = 1e-9;

/// A dead series must climb above this to count as revived.
pub const REVIVAL_THRESHOLD: f64 = 1e-6;

/// Coarse scan step of [`find_death_point`].
pub const DEATH_SCAN_STEP: f64 = 0.01;

const UNIT_TRACE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateLabel {
    Ghz,
    W,
}

impl StateLabel {
    pub fn initial_density(self) -> DensityMatrix {
        let psi = match self {
            StateLabel::Ghz => ghz_state(),
            StateLabel::W => w_state(),
        };
        density_from_pure(&psi).expect("initial states are normalized")
    }

    pub fn name(self) -> &'static str {
        match self {
            StateLabel::Ghz => "GHZ",
            StateLabel::W => "W",
        }
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three one-vs-rest negativities and their geometric mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityTriple {
    pub n_a_bc: f64,
    pub n_b_ac: f64,
    pub n_c_ab: f64,
    pub tripartite: f64,
}

impl NegativityTriple {
    pub fn from_cuts(n_a_bc: f64, n_b_ac: f64, n_c_ab: f64) -> Self {
        let tripartite = libm::cbrt(n_a_bc * n_b_ac * n_c_ab);
        NegativityTriple {
            n_a_bc,
            n_b_ac,
            n_c_ab,
            tripartite,
        }
    }

    pub fn cut(&self, q: Qubit) -> f64 {
        match q {
            Qubit::A => self.n_a_bc,
            Qubit::B => self.n_b_ac,
            Qubit::C => self.n_c_ab,
        }
    }

    pub fn is_dead(&self) -> bool {
        self.tripartite <= DEATH_THRESHOLD
    }
}

fn require_unit_trace(rho: &DensityMatrix) -> Result<()> {
    let t = rho.trace();
    if (t - 1.0).abs() > UNIT_TRACE_TOLERANCE {
        return Err(Error::NonUnitTrace(t));
    }
    Ok(())
}

/// `-2 ×` the sum of the eigenvalues of `ρ^{T_q}` below -1e-9, clamped at 0.
pub fn bipartite_negativity(rho: &DensityMatrix, qubit: Qubit) -> Result<f64> {
    require_unit_trace(rho)?;
    let spectrum = rho
        .matrix()
        .partial_transpose(qubit)?
        .hermitian_eigenvalues()?;
    Ok((-2.0 * spectrum.negative_sum()).max(0.0))
}

pub fn tripartite_negativity(rho: &DensityMatrix) -> Result<NegativityTriple> {
    Ok(NegativityTriple::from_cuts(
        bipartite_negativity(rho, Qubit::A)?,
        bipartite_negativity(rho, Qubit::B)?,
        bipartite_negativity(rho, Qubit::C)?,
    ))
}

/// Negativities of one sweep, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub state: StateLabel,
    pub scenario: ScenarioTemplate,
    pub p_values: Vec<f64>,
    pub triples: Vec<NegativityTriple>,
    /// Trace of the raw Kraus sum at each p, before any renormalization.
    pub raw_traces: Vec<f64>,
}

impl SweepResult {
    pub fn len(&self) -> usize {
        self.p_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_values.is_empty()
    }

    pub fn tripartite(&self) -> impl Iterator<Item = f64> + '_ {
        self.triples.iter().map(|t| t.tripartite)
    }

    /// First grid point where the tripartite negativity is dead.
    pub fn first_death(&self) -> Option<f64> {
        self.triples
            .iter()
            .position(NegativityTriple::is_dead)
            .map(|i| self.p_values[i])
    }
}

/// `count` evenly spaced points from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let steps = (count - 1) as f64;
            (0..count)
                .map(|i| {
                    if i == count - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * (i as f64) / steps
                    }
                })
                .collect()
        }
    }
}

/// Raw trace and negativities of `state` after the scenario at strength `p`.
///
/// Negativity is always measured on the unit-trace version of the output.
pub fn evaluate(
    state: StateLabel,
    template: &ScenarioTemplate,
    p: f64,
) -> Result<(f64, NegativityTriple)> {
    let scenario = template.at(p)?;
    let kraus = assemble_scenario(&scenario)?;
    let raw = apply_channel(
        &state.initial_density(),
        &kraus,
        crate::channels::Normalization::Literal,
    )?;
    let raw_trace = raw.trace();
    let triple = tripartite_negativity(&raw.renormalized()?)?;
    Ok((raw_trace, triple))
}

pub fn sweep(
    state: StateLabel,
    template: &ScenarioTemplate,
    p_grid: &[f64],
) -> Result<SweepResult> {
    if p_grid.is_empty() {
        return Err(Error::InvalidGrid("empty grid"));
    }
    if p_grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(Error::InvalidGrid("grid leaves [0, 1]"));
    }
    if p_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("grid is not strictly increasing"));
    }
    let mut triples = Vec::with_capacity(p_grid.len());
    let mut raw_traces = Vec::with_capacity(p_grid.len());
    for &p in p_grid {
        let (trace, triple) = evaluate(state, template, p)?;
        raw_traces.push(trace);
        triples.push(triple);
    }
    Ok(SweepResult {
        state,
        scenario: *template,
        p_values: p_grid.to_vec(),
        triples,
        raw_traces,
    })
}

/// Smallest p in `[lo, hi]` where the tripartite negativity first reaches
/// zero, or `None` if it stays positive.
///
/// Scans with step [`DEATH_SCAN_STEP`], then bisects the first bracketing
/// interval down to `tol`. The scan only sees isolated zeros that land on a
/// grid point.
pub fn find_death_point(
    state: StateLabel,
    template: &ScenarioTemplate,
    (lo, hi): (f64, f64),
    tol: f64,
) -> Result<Option<f64>> {
    if !(0.0 <= lo && lo < hi && hi <= 1.0) || !(tol > 0.0) {
        return Err(Error::InvalidBracket { lo, hi });
    }
    let dead_at = |p: f64| -> Result<bool> { Ok(evaluate(state, template, p)?.1.is_dead()) };
    if dead_at(lo)? {
        return Err(Error::NotEntangledAtStart { p: lo });
    }
    let intervals = libm::ceil((hi - lo) / DEATH_SCAN_STEP - 1e-9).max(1.0) as usize;
    let grid = linear_grid(lo, hi, intervals + 1);

    let mut alive = lo;
    for &p in &grid[1..] {
        if dead_at(p)? {
            let (mut a, mut b) = (alive, p);
            while b - a > tol {
                let mid = 0.5 * (a + b);
                if dead_at(mid)? {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            return Ok(Some(b));
        }
        alive = p;
    }
    Ok(None)
}

/// First `(death_p, revival_p)` grid pair where the series is dead and then
/// later climbs above [`REVIVAL_THRESHOLD`].
pub fn detect_revival(sweep: &SweepResult) -> Option<(f64, f64)> {
    let death = sweep.triples.iter().position(NegativityTriple::is_dead)?;
    let revival = sweep.triples[death..]
        .iter()
        .position(|t| t.tripartite > REVIVAL_THRESHOLD)?;
    Some((sweep.p_values[death], sweep.p_values[death + revival]))
}
