//! Depolarizing Kraus operators and the one-, two- and three-site noise
//! scenarios built from them.
//!
//! A correlated multi-site scenario uses one shared branch index `k` on every
//! affected qubit, `K_k = D_k ⊗ D_k (⊗ D_k)`. Products of the single-qubit
//! weights do not sum to one, so these maps are completely positive but not
//! trace preserving: `Σ K†K = ((1-p)^r + 3·(p/3)^r)·I` for `r` affected
//! qubits. [`completeness_defect`] reports this and [`Normalization`] selects
//! whether outputs are renormalized.
//!
//! Non-correlated scenarios use independent indices per qubit and are CPTP.

use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{ComplexMatrix, Qubit};
use crate::states::{DensityMatrix, TraceContract};
use crate::{Error, Result};

/// Set of affected qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SiteSet(u8);

impl SiteSet {
    pub const ALL: SiteSet = SiteSet(0b111);

    pub fn new(qubits: &[Qubit]) -> Result<Self> {
        let mut bits = 0u8;
        for q in qubits {
            let bit = 1 << q.position();
            if bits & bit != 0 {
                return Err(Error::InvalidScenario("qubit listed twice"));
            }
            bits |= bit;
        }
        if bits == 0 {
            return Err(Error::InvalidScenario("no affected qubits"));
        }
        Ok(SiteSet(bits))
    }

    pub fn single(q: Qubit) -> Self {
        SiteSet(1 << q.position())
    }

    /// Parses labels such as `"a"`, `"bc"`, `"abc"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut qubits = Vec::new();
        for ch in s.chars() {
            match Qubit::from_label(ch) {
                Some(q) => qubits.push(q),
                None => return Err(Error::InvalidScenario("unknown qubit label")),
            }
        }
        Self::new(&qubits)
    }

    pub fn contains(self, q: Qubit) -> bool {
        self.0 & (1 << q.position()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn qubits(self) -> impl Iterator<Item = Qubit> {
        Qubit::ALL.into_iter().filter(move |&q| self.contains(q))
    }
}

impl fmt::Display for SiteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in self.qubits() {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Correlation {
    /// Same Kraus branch on every affected qubit.
    Correlated,
    /// Independent Kraus branch per affected qubit.
    NonCorrelated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Keep the raw Kraus sum.
    Literal,
    /// Divide the Kraus sum by its trace.
    Renormalize,
}

/// A noise scenario without its channel strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScenarioTemplate {
    pub sites: SiteSet,
    /// Ignored when exactly one qubit is affected.
    pub correlation: Correlation,
    pub normalization: Normalization,
}

impl ScenarioTemplate {
    pub fn new(sites: SiteSet, correlation: Correlation, normalization: Normalization) -> Self {
        ScenarioTemplate {
            sites,
            correlation,
            normalization,
        }
    }

    pub fn at(&self, p: f64) -> Result<NoiseScenario> {
        NoiseScenario::new(*self, p)
    }

    /// Whether the assembled Kraus list satisfies `Σ K†K = I` for every p.
    pub fn is_trace_preserving(&self) -> bool {
        self.sites.len() == 1 || self.correlation == Correlation::NonCorrelated
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseScenario {
    template: ScenarioTemplate,
    p: f64,
}

impl NoiseScenario {
    pub fn new(template: ScenarioTemplate, p: f64) -> Result<Self> {
        check_probability(p)?;
        if template.sites.is_empty() || template.sites.len() > 3 {
            return Err(Error::InvalidScenario(
                "between one and three qubits must be affected",
            ));
        }
        Ok(NoiseScenario { template, p })
    }

    pub fn template(&self) -> &ScenarioTemplate {
        &self.template
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::ProbabilityOutOfRange(p))
    }
}

/// Ordered Kraus operators of one channel.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausOperators {
    operators: Vec<ComplexMatrix>,
    p: f64,
}

impl KrausOperators {
    pub fn new(operators: Vec<ComplexMatrix>, p: f64) -> Result<Self> {
        let Some(first) = operators.first() else {
            return Err(Error::InvalidScenario("empty Kraus list"));
        };
        let dim = first.dim();
        if let Some(bad) = operators.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(KrausOperators { operators, p })
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.operators[0].dim()
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Single-qubit depolarizing channel, ordered `(I, σx, σy, σz)`:
/// `[√(1-p)·I, √(p/3)·σx, √(p/3)·σy, √(p/3)·σz]`.
pub fn depolarizing_kraus(p: f64) -> Result<KrausOperators> {
    check_probability(p)?;
    let pauli_weight = libm::sqrt(p / 3.0);
    let operators = alloc::vec![
        ComplexMatrix::identity(2).scale(libm::sqrt(1.0 - p)),
        ComplexMatrix::pauli_x().scale(pauli_weight),
        ComplexMatrix::pauli_y().scale(pauli_weight),
        ComplexMatrix::pauli_z().scale(pauli_weight),
    ];
    KrausOperators::new(operators, p)
}

/// Lifts single-qubit factors to an 8×8 operator, `I₂` on unlisted qubits.
fn lift(factors: [Option<&ComplexMatrix>; 3]) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::identity(1);
    for f in factors {
        out = out.kron(f.unwrap_or(&id));
    }
    out
}

/// 8×8 Kraus operators of a scenario.
///
/// * single site: 4 operators `D_k` lifted with identities;
/// * correlated, r sites: 4 operators with the same `D_k` on every affected site;
/// * non-correlated, r sites: `4^r` operators, one per index tuple, the first
///   affected qubit's index varying slowest.
pub fn assemble_scenario(scenario: &NoiseScenario) -> Result<KrausOperators> {
    let single = depolarizing_kraus(scenario.p)?;
    let d = single.operators();
    let sites: Vec<Qubit> = scenario.template.sites.qubits().collect();

    let correlated = sites.len() == 1 || scenario.template.correlation == Correlation::Correlated;
    let operators = if correlated {
        (0..4)
            .map(|k| {
                let mut factors = [None; 3];
                for q in &sites {
                    factors[q.position()] = Some(&d[k]);
                }
                lift(factors)
            })
            .collect()
    } else {
        let count = 4usize.pow(sites.len() as u32);
        (0..count)
            .map(|mut tuple| {
                let mut factors = [None; 3];
                for q in sites.iter().rev() {
                    factors[q.position()] = Some(&d[tuple % 4]);
                    tuple /= 4;
                }
                lift(factors)
            })
            .collect()
    };
    KrausOperators::new(operators, scenario.p)
}

/// `ρ' = Σ K ρ K†`, renormalized or kept raw according to `normalization`.
pub fn apply_channel(
    rho: &DensityMatrix,
    kraus: &KrausOperators,
    normalization: Normalization,
) -> Result<DensityMatrix> {
    if rho.dim() != kraus.dim() {
        return Err(Error::DimensionMismatch {
            expected: kraus.dim(),
            found: rho.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(rho.dim());
    for k in kraus.operators() {
        let term = k.matmul(rho.matrix())?.matmul(&k.dagger())?;
        out.add_assign(&term)?;
    }
    let raw = DensityMatrix::new(out, TraceContract::Literal);
    match normalization {
        Normalization::Literal => Ok(raw),
        Normalization::Renormalize => raw.renormalized(),
    }
}

/// Assembles and applies a scenario in one step.
pub fn evolve(rho: &DensityMatrix, scenario: &NoiseScenario) -> Result<DensityMatrix> {
    let kraus = assemble_scenario(scenario)?;
    apply_channel(rho, &kraus, scenario.template.normalization)
}

/// Frobenius norm of `Σ K†K - I`.
pub fn completeness_defect(kraus: &KrausOperators) -> f64 {
    let dim = kraus.dim();
    let mut sum = ComplexMatrix::zeros(dim);
    for k in kraus.operators() {
        // dims already checked at construction
        let term = k.dagger().matmul(k).expect("uniform Kraus dims");
        sum.add_assign(&term).expect("uniform Kraus dims");
    }
    sum.sub(&ComplexMatrix::identity(dim))
        .expect("uniform Kraus dims")
        .frobenius_norm()
}
