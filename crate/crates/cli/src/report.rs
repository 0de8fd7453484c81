//! Plain-text rendering of closed-form audit reports.

use std::fmt::Write;

use trinoise_core::closed_forms::{annotations_for, ket_label, DiscrepancyReport};

use crate::format::sig12;

fn entry(e: (usize, usize)) -> String {
    let bra = ket_label(e.1).replace('|', "⟨").replace('⟩', "|");
    format!("{}{} ({},{})", ket_label(e.0), bra, e.0, e.1)
}

fn entry_list(entries: &[(usize, usize)]) -> String {
    if entries.is_empty() {
        "none".to_string()
    } else {
        entries
            .iter()
            .map(|&e| entry(e))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// One report block, ending with a blank line.
pub fn render_block(report: &DiscrepancyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "== {} ==", report.equation_label);
    let _ = writeln!(s, "state: {}", report.state);
    let _ = writeln!(s, "printed_kind: {}", report.printed_kind);
    let _ = writeln!(s, "numeric_kind: {}", report.numeric_kind);
    let _ = writeln!(s, "verdict: {}", report.verdict);
    let _ = writeln!(s, "max_abs_deviation: {}", sig12(report.max_abs_deviation));
    let _ = writeln!(s, "worst_entry: {}", entry(report.worst_entry));
    let _ = writeln!(s, "trace_analytic: {}", sig12(report.trace_analytic));
    let _ = writeln!(s, "trace_numeric: {}", sig12(report.trace_numeric));
    let _ = writeln!(
        s,
        "unsupported_entries: {}",
        entry_list(&report.unsupported_entries())
    );
    let notes: Vec<_> = annotations_for(report.state, report.printed_kind).collect();
    if notes.is_empty() {
        let _ = writeln!(s, "annotations: none");
    } else {
        let _ = writeln!(s, "annotations:");
        for a in notes {
            let _ = writeln!(
                s,
                "  {} | {} | {} | {}",
                a.equation_label, a.printed_token, a.adopted_reading, a.justification
            );
        }
    }
    let _ = writeln!(s, "samples:");
    for d in &report.samples {
        let _ = writeln!(
            s,
            "  p={} verdict={} max_abs_deviation={} worst_entry={} hermitian_part_deviation={} \
             transcription_hermiticity_defect={} trace_analytic={} trace_numeric={}",
            sig12(d.p),
            d.verdict(),
            sig12(d.max_abs_deviation),
            entry(d.worst_entry),
            sig12(d.hermitian_part_deviation),
            sig12(d.transcription_hermiticity_defect),
            sig12(d.trace_analytic),
            sig12(d.trace_numeric),
        );
        if !d.unsupported_entries.is_empty() {
            let _ = writeln!(s, "    unsupported: {}", entry_list(&d.unsupported_entries));
        }
        if !d.missing_entries.is_empty() {
            let _ = writeln!(s, "    missing: {}", entry_list(&d.missing_entries));
        }
    }
    s.push('\n');
    s
}
