//! Human-readable rendering of reports.

use std::fmt::Write;

use assrkit_core::classify::{Classification, MinorWitness, Signature, Witness};
use assrkit_core::exact::{format_rational, RMatrix};
use assrkit_core::theorems::{CheckReport, Evidence};

use crate::report::{CombinedReport, InputReport, Report};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sig(s: &Option<Signature>) -> String {
    s.as_ref().map_or_else(|| "-".to_string(), |s| s.to_string())
}

fn minor(m: &MinorWitness) -> String {
    format!("det A[{}|{}] = {}", m.rows, m.cols, format_rational(&m.value))
}

pub fn witness(w: &Witness) -> String {
    match w {
        Witness::SignConflict { first, conflicting } => {
            format!("order {}: {} vs {}", first.order, minor(first), minor(conflicting))
        }
        Witness::VanishingMinor { minor: m } => format!("order {}: {}", m.order, minor(m)),
        Witness::NotStaircase => "not staircase".into(),
        Witness::NoNontrivialMinor { order } => format!("no nontrivial minor of order {order}"),
        Witness::Reducible { rows, cols } => format!("A[{rows}|{cols}] = 0"),
    }
}

fn with_witness(flag: bool, w: &Option<Witness>) -> String {
    match (flag, w) {
        (false, Some(w)) => format!("no ({})", witness(w)),
        _ => yes(flag).to_string(),
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn exact(a: &RMatrix) -> String {
    let cells: Vec<Vec<String>> = a.rows().map(|r| r.iter().map(format_rational).collect()).collect();
    table(&cells)
}

fn table(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  ") + "\n")
        .collect()
}

pub fn classification(out: &mut String, c: &Classification) {
    let _ = writeln!(out, "order: {}", c.order);
    let _ = writeln!(out, "det: {}", format_rational(&c.det));
    let _ = writeln!(out, "SR: {}", with_witness(c.is_sr, &c.witnesses.sr));
    let _ = writeln!(out, "  signature: {}", sig(&c.signature));
    let _ = writeln!(out, "SSR: {}", with_witness(c.is_ssr, &c.witnesses.ssr));
    let _ = writeln!(out, "staircase: {}", c.staircase);
    let _ = writeln!(out, "ASSR: {}", with_witness(c.is_assr, &c.witnesses.assr));
    let _ = writeln!(out, "  signature: {}", sig(&c.assr_signature));
    let _ = writeln!(out, "irreducible: {}", with_witness(c.irreducible, &c.witnesses.reducible));
}

pub fn combined(out: &mut String, c: &CombinedReport) {
    let _ = writeln!(out, "det: {}", c.det);
    let _ = writeln!(out, "C(A):");
    out.push_str(&indent(&exact(&c.exact)));
    let _ = writeln!(out, "C(A) decimal:");
    out.push_str(&indent(&table(&c.decimal)));
    if c.scaled.exponent.abs() >= 3 {
        let _ = writeln!(out, "C(A) = {} *", c.scaled.label);
        out.push_str(&indent(&table(&c.scaled.rows)));
    }
    let _ = writeln!(out, "row sums: {}", c.row_sums.join(" "));
    let _ = writeln!(out, "column sums: {}", c.col_sums.join(" "));
}

fn evidence(e: &Evidence) -> String {
    match e {
        Evidence::PatternMismatch { row, col, a, c } => {
            format!("a{row}{col} = {}, c{row}{col} = {}", format_rational(a), format_rational(c))
        }
        Evidence::Staircase { matrix, combined } => format!("A {matrix}, C(A) {combined}"),
        Evidence::Conditions { combined_sr, combined_nonnegative, signed_monomial, identity_or_flip } => format!(
            "C(A) SR {}, C(A) >= 0 {}, signed monomial {}, C(A) in {{I, P}} {}",
            yes(*combined_sr),
            yes(*combined_nonnegative),
            yes(*signed_monomial),
            yes(*identity_or_flip)
        ),
        Evidence::Transform { trial, identity } => match trial {
            Some(t) => format!("{identity} (trial {t})"),
            None => identity.clone(),
        },
        Evidence::Signature { law, predicted, found } => {
            format!("{law}: predicted {}, found {}", sig(predicted), sig(found))
        }
        Evidence::Checkerboard { class } => format!("{class:?}").to_lowercase(),
        Evidence::Sums { rows, cols } => format!(
            "rows {}, cols {}",
            rows.iter().map(format_rational).collect::<Vec<_>>().join(" "),
            cols.iter().map(format_rational).collect::<Vec<_>>().join(" ")
        ),
        Evidence::AbsCombined { is_sr, is_assr, staircase, signature, witness: w, equals_checkerboard_conjugate, .. } => {
            let mut s = format!("|C(A)| SR {} {}, ASSR {}, {staircase}", yes(*is_sr), sig(signature), yes(*is_assr));
            if let Some(w) = w {
                let _ = write!(s, ", {}", witness(w));
            }
            let _ = write!(s, ", |C(A)| = S C(A) S {}", yes(*equals_checkerboard_conjugate));
            s
        }
    }
}

pub fn check(out: &mut String, r: &CheckReport) {
    let _ = write!(out, "  {:<26} {}", r.check_id.as_str(), r.verdict.status);
    if let Some(note) = &r.verdict.note {
        let _ = write!(out, ": {note}");
    }
    if let Some(e) = &r.verdict.evidence {
        let _ = write!(out, " [{}]", evidence(e));
    }
    out.push('\n');
}

pub fn input(out: &mut String, i: &InputReport) {
    let _ = writeln!(out, "== {} ({})", i.label, i.digest);
    if i.checks.is_none() {
        out.push_str(&indent(&exact(&i.matrix)));
    }
    if let Some(c) = &i.classification {
        classification(out, c);
    }
    if let Some(c) = &i.combined {
        combined(out, c);
    }
    if let Some(checks) = &i.checks {
        for c in checks {
            check(out, c);
        }
    }
}

pub fn report(r: &Report) -> String {
    let mut out = String::new();
    for i in &r.inputs {
        input(&mut out, i);
    }
    if r.command == "verify" {
        let s = &r.summary;
        let _ = writeln!(
            out,
            "summary: {} inputs, {} holds, {} fails, {} precondition not met",
            s.inputs, s.holds, s.fails, s.precondition_not_met
        );
    }
    if let Some(g) = &r.summary.generation {
        let _ = writeln!(out, "generated: {} {} of order {} from {} attempts", g.accepted, g.kind, g.order, g.attempts);
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(out, "elapsed: {ms} ms");
    }
    out
}
