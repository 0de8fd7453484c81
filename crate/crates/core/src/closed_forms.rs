//! Published closed-form output states, transcribed term by term, and an
//! audit that compares them against the numerically applied channels.
//!
//! Transcriptions keep suspected typos. The only edits are the readings
//! listed in [`ANNOTATIONS`]; everything else a printed expression gets wrong
//! shows up in the [`DiscrepancyReport`] instead of being fixed here.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_complex::Complex64;

use crate::channels::{
    apply_channel, assemble_scenario, Correlation, Normalization, ScenarioTemplate, SiteSet,
};
use crate::matrix::ComplexMatrix;
use crate::negativity::StateLabel;
use crate::{Error, Result};

/// Deviation at or below which a transcription matches the numeric output.
pub const MATCH_TOLERANCE: f64 = 1e-10;

/// Entries whose modulus stays below this count as structurally zero.
const SUPPORT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    /// Qubit `a` only.
    Single,
    /// Qubits `a, b`, shared branch.
    Corr2,
    /// Qubits `a, b, c`, shared branch.
    Corr3,
    /// Qubits `a, b`, independent branches.
    Nc2,
    /// Qubits `a, b, c`, independent branches.
    Nc3,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 5] = [
        ScenarioKind::Single,
        ScenarioKind::Corr2,
        ScenarioKind::Corr3,
        ScenarioKind::Nc2,
        ScenarioKind::Nc3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Single => "single",
            ScenarioKind::Corr2 => "corr2",
            ScenarioKind::Corr3 => "corr3",
            ScenarioKind::Nc2 => "nc2",
            ScenarioKind::Nc3 => "nc3",
        }
    }

    /// The noise scenario this closed form claims to describe, in literal mode.
    pub fn template(self) -> ScenarioTemplate {
        let (sites, correlation) = match self {
            ScenarioKind::Single => ("a", Correlation::Correlated),
            ScenarioKind::Corr2 => ("ab", Correlation::Correlated),
            ScenarioKind::Corr3 => ("abc", Correlation::Correlated),
            ScenarioKind::Nc2 => ("ab", Correlation::NonCorrelated),
            ScenarioKind::Nc3 => ("abc", Correlation::NonCorrelated),
        };
        ScenarioTemplate::new(
            SiteSet::parse(sites).expect("static site labels"),
            correlation,
            Normalization::Literal,
        )
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which printed coefficient list a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableLabel {
    /// GHZ, two independent sites.
    A,
    /// GHZ, three independent sites.
    B,
    /// W, two correlated sites.
    ATilde,
    /// W, three sites (printed with the correlated label).
    BTilde,
    /// W, two independent sites.
    ATildeNc,
    /// W, three independent sites.
    BTildeNc,
}

impl TableLabel {
    pub const ALL: [TableLabel; 6] = [
        TableLabel::A,
        TableLabel::B,
        TableLabel::ATilde,
        TableLabel::BTilde,
        TableLabel::ATildeNc,
        TableLabel::BTildeNc,
    ];
}

type Evaluator = fn(f64) -> f64;

fn sq(x: f64) -> f64 {
    x * x
}

fn cube(x: f64) -> f64 {
    x * x * x
}

/// Named polynomial-in-p coefficients of one printed state.
#[derive(Clone, Copy)]
pub struct CoefficientTable {
    pub label: TableLabel,
    entries: &'static [(&'static str, Evaluator)],
}

impl fmt::Debug for CoefficientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientTable")
            .field("label", &self.label)
            .field("names", &self.names().collect::<Vec<_>>())
            .finish()
    }
}

impl CoefficientTable {
    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|(n, _)| *n)
    }

    pub fn value(&self, name: &str, p: f64) -> Option<f64> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| f(p))
    }

    /// Value by 1-based position, `get(1, p)` is the first coefficient.
    fn get(&self, index: usize, p: f64) -> f64 {
        (self.entries[index - 1].1)(p)
    }
}

const A_TABLE: &[(&str, Evaluator)] = &[
    ("A1", |p| {
        sq(1.0 - p) / 2.0 + p / 3.0 * (1.0 - p) + p * p / 18.0
    }),
    ("A2", |p| {
        sq(1.0 - p) / 2.0 - p / 3.0 * (1.0 - p) + p * p / 18.0
    }),
    ("A3", |p| p / 3.0 * (1.0 - p) + p * p / 9.0),
    ("A4", |p| p * p / 9.0 - p / 3.0 * (1.0 - p)),
    ("A5", |p| p * p / 18.0),
    ("A6", |p| p * p / 9.0 + p / 6.0 * (1.0 - p)),
    ("A7", |p| p * p / 9.0 - p / 6.0 * (1.0 - p)),
    ("A8", |p| p / 6.0 * (1.0 - p)),
    ("A9", |p| p * p / 18.0),
];

const B_TABLE: &[(&str, Evaluator)] = &[
    ("B1", |p| {
        let q = 1.0 - p;
        0.5 * (cube(q) + p * q + 5.0 / 9.0 * p * p * q + cube(p) / 3.0)
    }),
    ("B2", |p| {
        let q = 1.0 - p;
        0.5 * (cube(q) - p * q + 5.0 / 9.0 * p * p * q - cube(p) / 27.0)
    }),
    ("B3", |p| {
        let q = 1.0 - p;
        (p * q * q + 7.0 * p * p / 3.0 * q + cube(p) / 3.0) / 3.0
    }),
    ("B4", |p| p * p / 9.0 * (1.0 - p)),
    ("B5", |p| p / 2.0 * sq(1.0 - p) + p * p / 9.0 * (1.0 - p)),
    ("B6", |p| {
        let q = 1.0 - p;
        (p * q * q + 5.0 * p * p / 3.0 * q + cube(p) / 3.0) / 3.0
    }),
];

const A_TILDE_TABLE: &[(&str, Evaluator)] = &[
    ("Ã1", |p| sq(1.0 - p) / 3.0 + p * p / 9.0),
    ("Ã2", |p| sq(1.0 - p) / 3.0 - p * p / 27.0),
    ("Ã3", |p| sq(1.0 - p) / 3.0 + p * p / 27.0),
    ("Ã4", |p| p * p / 27.0),
    ("Ã5", |p| 2.0 * p * p / 27.0),
];

const B_TILDE_TABLE: &[(&str, Evaluator)] = &[
    ("B̃1", |p| sq(1.0 - p) / 3.0 + 2.0 * p * p / 27.0),
    ("B̃2", |p| sq(1.0 - p) / 3.0 - p * p / 27.0),
    ("B̃3", |p| sq(1.0 - p) / 3.0 + p * p / 27.0),
    ("B̃4", |p| sq(1.0 - p) / 3.0 + 2.0 * p * p / 9.0),
    ("B̃5", |p| p * p / 27.0),
];

const A_TILDE_NC_TABLE: &[(&str, Evaluator)] = &[
    ("Ã1nc", |p| 2.0 * p / 27.0),
    ("Ã2nc", |p| {
        2.0 / 27.0 * p * (1.0 - p) + p * p / 27.0 + 1.0 / 3.0
    }),
    ("Ã3nc", |p| {
        -2.0 / 27.0 * p * (1.0 - p) - 5.0 * p * p / 27.0 + 1.0 / 3.0
    }),
    ("Ã4nc", |p| 4.0 * p / 27.0),
    ("Ã5nc", |p| p * p / 27.0 + 1.0 / 3.0),
    ("Ã6nc", |p| 2.0 / 27.0 * (3.0 * p * p - p) + 1.0 / 3.0),
];

const B_TILDE_NC_TABLE: &[(&str, Evaluator)] = &[
    ("B̃1nc", |p| {
        let q = 1.0 - p;
        4.0 / 9.0 * p * q * q + p * p * q / 9.0 - 4.0 / 81.0 * cube(p)
    }),
    ("B̃2nc", |p| {
        let q = 1.0 - p;
        4.0 / 9.0 * p * q * q - 4.0 / 81.0 * cube(p)
    }),
    ("B̃3nc", |p| p * p * (1.0 - p) / 9.0 + cube(p) / 81.0),
    ("B̃4nc", |p| 2.0 / 81.0 * cube(p)),
    ("B̃5nc", |p| {
        -p * p * (1.0 - p) / 27.0 - 2.0 / 81.0 * cube(p)
    }),
    ("B̃6nc", |p| {
        let q = 1.0 - p;
        4.0 / 9.0 * p * q * q - 2.0 / 81.0 * cube(p)
    }),
    ("B̃7nc", |p| {
        let q = 1.0 - p;
        cube(q) + 4.0 / 9.0 * p * q * q + p * p * q / 9.0 + cube(p) / 81.0
    }),
    ("B̃8nc", |p| p * p * (1.0 - p) / 27.0),
    ("B̃9nc", |p| {
        let q = 1.0 - p;
        cube(q) / 3.0 - 2.0 / 9.0 * p * q * q + p * p * q / 9.0 + 5.0 / 81.0 * cube(p)
    }),
    ("B̃10nc", |p| {
        let q = 1.0 - p;
        cube(q) / 3.0 + p * p / 9.0 * q + 5.0 * cube(p) / 81.0
    }),
    ("B̃11nc", |p| {
        let q = 1.0 - p;
        cube(q) / 3.0 + 2.0 * p / 9.0 * q * q + p * p / 9.0 * q + cube(p) / 81.0
    }),
    ("B̃12nc", |p| -p * p / 27.0 * (1.0 - p)),
];

pub fn coefficient_table(label: TableLabel) -> CoefficientTable {
    let entries = match label {
        TableLabel::A => A_TABLE,
        TableLabel::B => B_TABLE,
        TableLabel::ATilde => A_TILDE_TABLE,
        TableLabel::BTilde => B_TILDE_TABLE,
        TableLabel::ATildeNc => A_TILDE_NC_TABLE,
        TableLabel::BTildeNc => B_TILDE_NC_TABLE,
    };
    CoefficientTable { label, entries }
}

/// Accumulates `coefficient · |row⟩⟨col|` terms written as bit strings.
struct KetBra(ComplexMatrix);

impl KetBra {
    fn new() -> Self {
        KetBra(ComplexMatrix::zeros(8))
    }

    fn term(&mut self, coefficient: f64, ket: &str, bra: &str) -> &mut Self {
        self.0[(index(ket), index(bra))] += Complex64::new(coefficient, 0.0);
        self
    }

    fn terms(&mut self, coefficient: f64, pairs: &[(&str, &str)]) -> &mut Self {
        for (ket, bra) in pairs {
            self.term(coefficient, ket, bra);
        }
        self
    }

    fn finish(&mut self) -> ComplexMatrix {
        core::mem::replace(&mut self.0, ComplexMatrix::zeros(8))
    }
}

fn index(bits: &str) -> usize {
    debug_assert_eq!(bits.len(), 3);
    bits.bytes()
        .fold(0, |acc, b| (acc << 1) | usize::from(b == b'1'))
}

/// The four ket-bra terms of `(|000⟩+|111⟩)(⟨000|+⟨111|)`.
const GHZ_SUPPORT: &[(&str, &str)] = &[
    ("000", "000"),
    ("000", "111"),
    ("111", "000"),
    ("111", "111"),
];

/// Printed GHZ output state for one scenario kind.
pub fn ghz_literal_state(kind: ScenarioKind, p: f64) -> ComplexMatrix {
    let q = 1.0 - p;
    let mut m = KetBra::new();
    match kind {
        ScenarioKind::Single => {
            m.terms(q / 2.0, GHZ_SUPPORT)
                .term(p / 3.0, "111", "100")
                .term(-p / 3.0, "111", "011")
                .terms(
                    p / 6.0,
                    &[
                        ("011", "100"),
                        ("100", "011"),
                        ("100", "100"),
                        ("011", "011"),
                    ],
                );
        }
        ScenarioKind::Corr2 => {
            // the ρ_g here is the unnormalized ket-bra sum, see ANNOTATIONS
            m.terms(0.5 * q * q + p * p / 18.0, GHZ_SUPPORT).terms(
                p * p / 9.0,
                &[
                    ("001", "110"),
                    ("110", "001"),
                    ("001", "001"),
                    ("110", "110"),
                ],
            );
        }
        ScenarioKind::Corr3 => {
            let q3 = cube(q) / 2.0;
            m.term(q3 + p * p / 18.0, "000", "000")
                .term(q3 - cube(p) / 54.0, "000", "111")
                .term(q3, "111", "000")
                .term(q3 + p * p / 27.0, "111", "111");
        }
        ScenarioKind::Nc2 => {
            let a = coefficient_table(TableLabel::A);
            let c = |i| a.get(i, p);
            m.terms(c(1), &[("000", "000"), ("111", "111")])
                .terms(c(2), &[("000", "111"), ("111", "000")])
                .terms(
                    c(3),
                    &[
                        ("010", "010"),
                        ("101", "101"),
                        ("011", "011"),
                        ("100", "100"),
                    ],
                )
                .term(c(4), "001", "110")
                .term(c(5), "001", "001")
                .term(c(6), "110", "110")
                .term(c(7), "110", "001")
                .term(c(8), "001", "111")
                .terms(c(9), &[("001", "011"), ("110", "100")])
                .term(-c(9), "110", "011");
        }
        ScenarioKind::Nc3 => {
            let b = coefficient_table(TableLabel::B);
            let c = |i| b.get(i, p);
            m.terms(c(1), &[("000", "000"), ("111", "111")])
                .terms(c(2), &[("000", "111"), ("111", "000")])
                .terms(
                    c(3),
                    &[
                        ("110", "110"),
                        ("001", "001"),
                        ("100", "100"),
                        ("011", "011"),
                    ],
                )
                .terms(
                    c(4),
                    &[
                        ("110", "001"),
                        ("010", "101"),
                        ("101", "010"),
                        ("100", "011"),
                        ("011", "100"),
                    ],
                )
                .term(c(5), "001", "110")
                .terms(c(6), &[("010", "010"), ("101", "101")]);
        }
    }
    m.finish()
}

/// Printed W output state for one scenario kind.
///
/// The three-site correlated kind is the state printed with the correlated
/// label (its introductory sentence calls the noise non-correlated).
pub fn w_literal_state(kind: ScenarioKind, p: f64) -> ComplexMatrix {
    let mut m = KetBra::new();
    match kind {
        ScenarioKind::Single => {
            m.terms(
                (3.0 - 2.0 * p) / 9.0,
                &[
                    ("100", "100"),
                    ("010", "010"),
                    ("001", "010"),
                    ("001", "001"),
                    ("010", "001"),
                ],
            )
            .terms(
                (3.0 - 4.0 * p) / 9.0,
                &[
                    ("100", "010"),
                    ("100", "001"),
                    ("010", "100"),
                    ("001", "100"),
                ],
            );
        }
        ScenarioKind::Corr2 => {
            let a = coefficient_table(TableLabel::ATilde);
            let c = |i| a.get(i, p);
            m.terms(
                c(1),
                &[
                    ("010", "010"),
                    ("010", "100"),
                    ("100", "010"),
                    ("100", "100"),
                ],
            )
            .terms(c(2), &[("010", "001"), ("001", "100"), ("001", "010")])
            .terms(c(3), &[("100", "011"), ("001", "001")])
            .term(c(4), "010", "101")
            .term(c(5), "111", "111");
        }
        ScenarioKind::Corr3 => {
            let b = coefficient_table(TableLabel::BTilde);
            let c = |i| b.get(i, p);
            m.terms(c(1), &[("001", "001"), ("001", "010"), ("001", "100")])
                .term(c(2), "010", "001")
                .term(c(3), "100", "011")
                .terms(
                    c(4),
                    &[
                        ("100", "100"),
                        ("100", "010"),
                        ("010", "010"),
                        ("010", "100"),
                    ],
                )
                .terms(c(5), &[("010", "101"), ("010", "111"), ("010", "011")])
                .terms(
                    -c(5),
                    &[
                        ("100", "111"),
                        ("111", "010"),
                        ("111", "100"),
                        ("111", "111"),
                    ],
                );
        }
        ScenarioKind::Nc2 => {
            let a = coefficient_table(TableLabel::ATildeNc);
            let c = |i| a.get(i, p);
            m.terms(
                c(1),
                &[
                    ("000", "011"),
                    ("000", "101"),
                    ("011", "000"),
                    ("101", "000"),
                ],
            )
            .terms(c(2), &[("010", "010"), ("100", "100"), ("001", "001")])
            .term(c(3), "010", "100")
            .terms(
                c(3),
                &[
                    ("001", "010"),
                    ("001", "100"),
                    ("100", "001"),
                    ("010", "001"),
                ],
            )
            .terms(c(4), &[("110", "000"), ("000", "110")])
            .term(c(5), "100", "010");
        }
        ScenarioKind::Nc3 => {
            let b = coefficient_table(TableLabel::BTildeNc);
            let c = |i| b.get(i, p);
            m.terms(c(1), &[("110", "000"), ("000", "110"), ("101", "000")])
                .terms(c(2), &[("011", "000"), ("000", "101")])
                .term(c(3), "111", "100")
                .term(c(4), "011", "011")
                .term(c(5), "101", "011")
                .term(c(6), "000", "011")
                .term(c(7), "010", "010")
                .terms(
                    c(8),
                    &[
                        ("111", "111"),
                        ("110", "011"),
                        ("011", "100"),
                        ("011", "111"),
                        ("101", "101"),
                    ],
                )
                .terms(
                    c(9),
                    &[
                        ("001", "010"),
                        ("100", "010"),
                        ("010", "001"),
                        ("010", "100"),
                    ],
                )
                .terms(c(10), &[("100", "001"), ("001", "100")])
                .terms(c(11), &[("001", "001"), ("100", "100")])
                .terms(c(12), &[("011", "010"), ("111", "010"), ("110", "101")]);
        }
    }
    m.finish()
}

/// Printed output state of either initial state.
pub fn literal_state(state: StateLabel, kind: ScenarioKind, p: f64) -> ComplexMatrix {
    match state {
        StateLabel::Ghz => ghz_literal_state(kind, p),
        StateLabel::W => w_literal_state(kind, p),
    }
}

/// One reading adopted where a printed expression is not directly usable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annotation {
    pub equation_label: &'static str,
    pub printed_token: &'static str,
    pub adopted_reading: &'static str,
    pub justification: &'static str,
}

pub const ANNOTATIONS: &[Annotation] = &[
    Annotation {
        equation_label: "ghz-single",
        printed_token: "|100⟩⟨011| |100⟩⟨100|",
        adopted_reading: "|100⟩⟨011| + |100⟩⟨100|",
        justification: "adjacent ket-bra terms inside the p/6 group have no operator between them",
    },
    Annotation {
        equation_label: "ghz-corr2",
        printed_token: "ρ_g",
        adopted_reading: "|000⟩⟨000| + |000⟩⟨111| + |111⟩⟨000| + |111⟩⟨111|",
        justification: "the coefficient ½(1-p)² + p²/18 already carries the ½ of the normalized state; reading ρ_g as normalized halves the state at p = 0",
    },
    Annotation {
        equation_label: "ghz-nc3",
        printed_token: "B5(|001⟩⟨110| + B6(|010⟩⟨010| + |101⟩⟨101|)",
        adopted_reading: "B5|001⟩⟨110| + B6(|010⟩⟨010| + |101⟩⟨101|)",
        justification: "unbalanced parenthesis; B6 is a separate coefficient, not a factor of B5",
    },
    Annotation {
        equation_label: "ghz-nc3-coefficients",
        printed_token: "B1 (second definition)",
        adopted_reading: "B2",
        justification: "B1 is defined twice and B2 never; the second line has the coherence sign pattern",
    },
    Annotation {
        equation_label: "w-corr2-coefficients",
        printed_token: "P^2",
        adopted_reading: "p^2",
        justification: "upper-case P is the channel strength p",
    },
    Annotation {
        equation_label: "w-nc2",
        printed_token: "|011⟩⟨00|",
        adopted_reading: "|011⟩⟨000|",
        justification: "bra is missing a digit; ⟨000| mirrors the |000⟩⟨011| term of the same group",
    },
    Annotation {
        equation_label: "w-nc2",
        printed_token: "ker{001}",
        adopted_reading: "|001⟩",
        justification: "misspelled ket macro",
    },
];

/// Annotations in the plain-text file format, one line per reading:
/// `equation_label | printed_token | adopted_reading | justification`.
pub fn render_annotations() -> String {
    let mut out = String::new();
    for a in ANNOTATIONS {
        let _ = writeln!(
            out,
            "{} | {} | {} | {}",
            a.equation_label, a.printed_token, a.adopted_reading, a.justification
        );
    }
    out
}

/// Annotations that apply to the printed state of `state` under `kind`.
pub fn annotations_for(
    state: StateLabel,
    kind: ScenarioKind,
) -> impl Iterator<Item = &'static Annotation> {
    let prefix = match state {
        StateLabel::Ghz => "ghz-",
        StateLabel::W => "w-",
    };
    ANNOTATIONS.iter().filter(move |a| {
        a.equation_label
            .strip_prefix(prefix)
            .map(|rest| rest.split('-').next() == Some(kind.name()))
            .unwrap_or(false)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        })
    }
}

/// Comparison of one printed state against the numeric output at one p.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleDeviation {
    pub p: f64,
    pub max_abs_deviation: f64,
    pub worst_entry: (usize, usize),
    /// Deviation of `(T + T†)/2` from the numeric output.
    pub hermitian_part_deviation: f64,
    /// Hermiticity defect of the raw transcription.
    pub transcription_hermiticity_defect: f64,
    pub trace_analytic: f64,
    pub trace_numeric: f64,
    /// Nonzero in the transcription but zero in the numeric output.
    pub unsupported_entries: Vec<(usize, usize)>,
    /// Zero in the transcription but nonzero in the numeric output.
    pub missing_entries: Vec<(usize, usize)>,
}

impl SampleDeviation {
    pub fn verdict(&self) -> Verdict {
        if self.max_abs_deviation <= MATCH_TOLERANCE {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    /// e.g. `ghz-single` or, for a cross check, `w-corr3 vs nc3`.
    pub equation_label: String,
    pub state: StateLabel,
    pub printed_kind: ScenarioKind,
    pub numeric_kind: ScenarioKind,
    pub p_samples: Vec<f64>,
    pub samples: Vec<SampleDeviation>,
    pub max_abs_deviation: f64,
    pub worst_entry: (usize, usize),
    /// Traces at the sample with the largest deviation.
    pub trace_analytic: f64,
    pub trace_numeric: f64,
    pub verdict: Verdict,
}

impl DiscrepancyReport {
    /// Union of unsupported entries over all samples, in first-seen order.
    pub fn unsupported_entries(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for e in self
            .samples
            .iter()
            .flat_map(|s| s.unsupported_entries.iter())
        {
            if !out.contains(e) {
                out.push(*e);
            }
        }
        out
    }
}

/// Default audit samples `p ∈ {0, 0.1, …, 1}`.
pub fn default_samples() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// Basis label such as `|101⟩`.
pub fn ket_label(index: usize) -> String {
    let mut s = String::from("|");
    for shift in (0..3).rev() {
        s.push(if (index >> shift) & 1 == 1 { '1' } else { '0' });
    }
    s.push('⟩');
    s
}

/// Compares the printed state for `kind` against the literal Kraus sum of
/// the same scenario.
pub fn compare_analytic_numeric(
    kind: ScenarioKind,
    state: StateLabel,
    p_samples: &[f64],
) -> Result<DiscrepancyReport> {
    compare_forms(state, kind, kind, p_samples)
}

/// Compares the printed state for `printed` against the literal Kraus sum of
/// the `numeric` scenario.
pub fn compare_forms(
    state: StateLabel,
    printed: ScenarioKind,
    numeric: ScenarioKind,
    p_samples: &[f64],
) -> Result<DiscrepancyReport> {
    if p_samples.is_empty() {
        return Err(Error::InvalidGrid("no comparison samples"));
    }
    let rho = state.initial_density();
    let template = numeric.template();
    let mut samples = Vec::with_capacity(p_samples.len());
    for &p in p_samples {
        let kraus = assemble_scenario(&template.at(p)?)?;
        let numeric_state = apply_channel(&rho, &kraus, Normalization::Literal)?.into_matrix();
        let analytic = literal_state(state, printed, p);
        samples.push(sample_deviation(p, &analytic, &numeric_state)?);
    }

    let worst = samples.iter().enumerate().fold(0, |best, (i, s)| {
        if s.max_abs_deviation > samples[best].max_abs_deviation {
            i
        } else {
            best
        }
    });
    let max_abs_deviation = samples[worst].max_abs_deviation;
    let prefix = match state {
        StateLabel::Ghz => "ghz",
        StateLabel::W => "w",
    };
    let equation_label = if printed == numeric {
        alloc::format!("{prefix}-{printed}")
    } else {
        alloc::format!("{prefix}-{printed} vs {numeric}")
    };
    Ok(DiscrepancyReport {
        equation_label,
        state,
        printed_kind: printed,
        numeric_kind: numeric,
        p_samples: p_samples.to_vec(),
        worst_entry: samples[worst].worst_entry,
        trace_analytic: samples[worst].trace_analytic,
        trace_numeric: samples[worst].trace_numeric,
        verdict: if max_abs_deviation <= MATCH_TOLERANCE {
            Verdict::Match
        } else {
            Verdict::Mismatch
        },
        max_abs_deviation,
        samples,
    })
}

fn sample_deviation(
    p: f64,
    analytic: &ComplexMatrix,
    numeric: &ComplexMatrix,
) -> Result<SampleDeviation> {
    let (worst_entry, max_abs_deviation) = analytic.worst_entry(numeric)?;
    let mut unsupported_entries = Vec::new();
    let mut missing_entries = Vec::new();
    for r in 0..8 {
        for c in 0..8 {
            let a = analytic[(r, c)].norm() > SUPPORT_TOLERANCE;
            let n = numeric[(r, c)].norm() > SUPPORT_TOLERANCE;
            if a && !n {
                unsupported_entries.push((r, c));
            } else if n && !a {
                missing_entries.push((r, c));
            }
        }
    }
    Ok(SampleDeviation {
        p,
        max_abs_deviation,
        worst_entry,
        hermitian_part_deviation: analytic.hermitian_part().distance_max_abs(numeric)?,
        transcription_hermiticity_defect: analytic.hermiticity_defect(),
        trace_analytic: analytic.trace().re,
        trace_numeric: numeric.trace().re,
        unsupported_entries,
        missing_entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(label: TableLabel) -> Vec<&'static str> {
        coefficient_table(label).names().collect()
    }

    #[test]
    fn table_names_follow_the_printed_lists() {
        assert_eq!(
            names(TableLabel::A),
            ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9"]
        );
        assert_eq!(names(TableLabel::B), ["B1", "B2", "B3", "B4", "B5", "B6"]);
        assert_eq!(names(TableLabel::ATilde).len(), 5);
        assert_eq!(names(TableLabel::BTilde).len(), 5);
        assert_eq!(names(TableLabel::ATildeNc).len(), 6);
        assert_eq!(names(TableLabel::BTildeNc).len(), 12);
        assert_eq!(names(TableLabel::BTildeNc)[11], "B̃12nc");
    }

    #[test]
    fn tables_at_zero() {
        let a = coefficient_table(TableLabel::A);
        assert_eq!(a.value("A1", 0.0), Some(0.5));
        assert_eq!(a.value("A2", 0.0), Some(0.5));
        for i in 3..=9 {
            assert_eq!(a.get(i, 0.0), 0.0);
        }
        let at = coefficient_table(TableLabel::ATilde);
        for i in 1..=3 {
            assert!((at.get(i, 0.0) - 1.0 / 3.0).abs() < 1e-16);
        }
        assert_eq!(at.get(4, 0.0), 0.0);
        assert_eq!(at.get(5, 0.0), 0.0);
        let anc = coefficient_table(TableLabel::ATildeNc);
        let third = [2, 3, 5, 6];
        for i in 1..=6 {
            let expected = if third.contains(&i) { 1.0 / 3.0 } else { 0.0 };
            assert!((anc.get(i, 0.0) - expected).abs() < 1e-16, "Ã{i}nc");
        }
        assert_eq!(anc.value("missing", 0.0), None);
    }

    #[test]
    fn ghz_corr3_at_zero_is_initial_state() {
        let rho = StateLabel::Ghz.initial_density();
        let t = ghz_literal_state(ScenarioKind::Corr3, 0.0);
        assert!(t.distance_max_abs(rho.matrix()).unwrap() <= 1e-15);
    }

    #[test]
    fn ghz_corr2_at_one() {
        let t = ghz_literal_state(ScenarioKind::Corr2, 1.0);
        assert!((t[(0, 7)].re - 1.0 / 18.0).abs() < 1e-16);
        assert!((t[(1, 6)].re - 1.0 / 9.0).abs() < 1e-16);
        assert!((t[(6, 6)].re - 1.0 / 9.0).abs() < 1e-16);
    }

    #[test]
    fn w_single_at_zero_is_initial_state() {
        let rho = StateLabel::W.initial_density();
        let t = w_literal_state(ScenarioKind::Single, 0.0);
        assert!(t.distance_max_abs(rho.matrix()).unwrap() <= 1e-15);
    }

    #[test]
    fn printed_corr2_w_keeps_its_cross_term() {
        // |100⟩⟨011| stays as printed; the audit reports it
        let t = w_literal_state(ScenarioKind::Corr2, 0.0);
        assert!((t[(4, 3)].re - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(t[(4, 1)].re, 0.0);
    }

    #[test]
    fn corr3_ghz_audit_at_zero_matches() {
        let r = compare_analytic_numeric(ScenarioKind::Corr3, StateLabel::Ghz, &[0.0]).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert!(r.max_abs_deviation <= 1e-15);
        assert_eq!(r.equation_label, "ghz-corr3");
    }

    #[test]
    fn single_ghz_audit_flags_one_sided_cross_terms() {
        let r = compare_analytic_numeric(ScenarioKind::Single, StateLabel::Ghz, &[0.5]).unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        let unsupported = r.unsupported_entries();
        assert!(unsupported.contains(&(0b111, 0b100)));
        assert!(unsupported.contains(&(0b111, 0b011)));
        assert!(r.samples[0].transcription_hermiticity_defect > 0.1);
    }

    #[test]
    fn cross_label_report() {
        let r = compare_forms(
            StateLabel::W,
            ScenarioKind::Corr3,
            ScenarioKind::Nc3,
            &[0.0, 0.5],
        )
        .unwrap();
        assert_eq!(r.equation_label, "w-corr3 vs nc3");
        assert_eq!(r.samples.len(), 2);
    }

    #[test]
    fn empty_samples_rejected() {
        assert!(compare_analytic_numeric(ScenarioKind::Nc2, StateLabel::W, &[]).is_err());
    }

    #[test]
    fn annotation_lookup_and_rendering() {
        let nc2: Vec<_> = annotations_for(StateLabel::W, ScenarioKind::Nc2).collect();
        assert_eq!(nc2.len(), 2);
        assert_eq!(
            annotations_for(StateLabel::Ghz, ScenarioKind::Nc3).count(),
            2
        );
        assert_eq!(annotations_for(StateLabel::W, ScenarioKind::Nc3).count(), 0);
        let text = render_annotations();
        assert_eq!(text.lines().count(), ANNOTATIONS.len());
        assert!(text.lines().all(|l| l.split(" | ").count() == 4));
    }

    #[test]
    fn ket_labels() {
        assert_eq!(ket_label(0), "|000⟩");
        assert_eq!(ket_label(6), "|110⟩");
    }
}
