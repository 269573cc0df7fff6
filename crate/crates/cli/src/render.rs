//! Text, JSON and CSV rendering of command results.

use std::collections::BTreeSet;
use std::fmt::Write;

use axial_core::eigen::{EigenDecomposition, FusionReport, PrimitivityReport, Violation};
use axial_core::format::{print_element, print_signed};
use axial_core::verify::IdentityReport;
use axial_core::{mul, BasisSymbol, Element, Quotient, Scalar};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Renderer {
    format: Format,
    signed: bool,
}

fn json_text<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

impl Renderer {
    pub fn new(format: Format, signed: bool) -> Self {
        Renderer { format, signed }
    }

    fn el(&self, x: &Element) -> String {
        if self.signed {
            print_signed(x)
        } else {
            print_element(x)
        }
    }

    fn scalar(&self, c: Scalar) -> i64 {
        if self.signed {
            c.signed().into()
        } else {
            c.value().into()
        }
    }

    pub fn element(&self, x: &Element) -> String {
        match self.format {
            Format::Text => format!("{}\n", self.el(x)),
            Format::Json => json_text(&json!({ "result": self.el(x) })),
            Format::Csv => csv_text(
                &["symbol", "coefficient"],
                x.terms()
                    .map(|(b, c)| vec![b.to_string(), self.scalar(c).to_string()]),
            ),
        }
    }

    pub fn decomposition(&self, d: &EigenDecomposition) -> String {
        let parts = [("0", &d.comp0), ("2", &d.comp2), ("-2", &d.comp_beta)];
        match self.format {
            Format::Text => {
                let mut s = format!("lambda: {}\n", self.scalar(d.lambda));
                for (label, x) in parts {
                    let _ = writeln!(s, "{label}: {}", self.el(x));
                }
                s
            }
            Format::Json => json_text(&json!({
                "lambda": self.scalar(d.lambda),
                "comp0": self.el(&d.comp0),
                "comp2": self.el(&d.comp2),
                "compBeta": self.el(&d.comp_beta),
            })),
            Format::Csv => {
                let mut rows = vec![vec!["1".to_string(), self.scalar(d.lambda).to_string()]];
                rows.extend(parts.iter().map(|(l, x)| vec![l.to_string(), self.el(x)]));
                csv_text(&["eigenvalue", "component"], rows)
            }
        }
    }

    fn violations_text(s: &mut String, violations: &[Violation]) {
        for v in violations {
            let _ = writeln!(
                s,
                "  {} * {}: component {}",
                v.left, v.right, v.offending_component
            );
        }
    }

    fn violations_csv(violations: &[Violation]) -> String {
        csv_text(
            &["left", "right", "offendingComponent"],
            violations.iter().map(|v| {
                vec![
                    v.left.clone(),
                    v.right.clone(),
                    v.offending_component.clone(),
                ]
            }),
        )
    }

    pub fn fusion(&self, r: &FusionReport) -> String {
        match self.format {
            Format::Json => json_text(r),
            Format::Csv => Self::violations_csv(&r.violations),
            Format::Text => {
                let mut s = format!(
                    "fusion law, window {}: {} ({} pairs, {} violations)\n",
                    r.window,
                    verdict(r.pass),
                    r.pairs_checked,
                    r.violations.len()
                );
                Self::violations_text(&mut s, &r.violations);
                s
            }
        }
    }

    pub fn primitivity(&self, r: &PrimitivityReport) -> String {
        match self.format {
            Format::Json => json_text(r),
            Format::Csv => Self::violations_csv(&r.violations),
            Format::Text => {
                let mut s = format!(
                    "primitivity, window {}: {} (1-eigenspace dimension {})\n",
                    r.window,
                    verdict(r.pass),
                    r.one_eigenspace_dim
                );
                Self::violations_text(&mut s, &r.violations);
                s
            }
        }
    }

    pub fn identities(&self, reports: &[IdentityReport]) -> String {
        match self.format {
            Format::Json => json_text(reports),
            Format::Csv => csv_text(
                &["identity", "clause", "pass", "checked", "failures"],
                reports.iter().flat_map(|r| {
                    r.clauses.iter().map(move |c| {
                        vec![
                            r.identity_name.clone(),
                            c.name.clone(),
                            c.pass.to_string(),
                            c.checked.to_string(),
                            c.failures.to_string(),
                        ]
                    })
                }),
            ),
            Format::Text => {
                let mut s = String::new();
                for r in reports {
                    let range: Vec<String> =
                        r.range.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(
                        s,
                        "{} ({}): {}",
                        r.identity_name,
                        range.join(", "),
                        verdict(r.pass)
                    );
                    for c in &r.clauses {
                        let _ = writeln!(
                            s,
                            "  {} {}: {}/{} failed",
                            verdict(c.pass),
                            c.name,
                            c.failures,
                            c.checked
                        );
                    }
                    if let Some(f) = &r.first_failure {
                        let params: Vec<String> = f
                            .parameters
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        let _ =
                            writeln!(s, "  first failure: {} at {}", f.clause, params.join(", "));
                        let _ = writeln!(s, "    lhs: {}", f.lhs);
                        let _ = writeln!(s, "    rhs: {}", f.rhs);
                    }
                }
                s
            }
        }
    }

    pub fn quotient(&self, preset: &str, q: &Quotient) -> String {
        let export = q.export();
        match self.format {
            Format::Text => format!(
                "preset: {preset}\nwindow: {}\nrank: {}\nquotientDim: {}\ntruncationLoss: {}\n",
                export.window, export.rank, export.quotient_dim, export.truncation_loss
            ),
            Format::Json => json_text(&json!({
                "preset": preset,
                "window": export.window,
                "rank": export.rank,
                "quotientDim": export.quotient_dim,
                "truncationLoss": export.truncation_loss,
                "generatorRank": q.generator_rank,
                "sweeps": q.sweeps,
                "basis": export.basis,
                "rows": export.rows,
            })),
            Format::Csv => {
                let header: Vec<String> = export.basis.iter().map(|b| b.to_string()).collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                csv_text(
                    &header,
                    q.span
                        .dense_rows()
                        .iter()
                        .map(|row| row.iter().map(|&c| self.scalar(c).to_string()).collect()),
                )
            }
        }
    }

    pub fn table(&self, from: i64, to: i64) -> String {
        let mut symbols: BTreeSet<BasisSymbol> = (from..=to).map(BasisSymbol::Axis).collect();
        for i in from..=to {
            for j in i..=to {
                let p = mul(&Element::axis(i), &Element::axis(j));
                symbols.extend(p.support().filter(|b| !b.is_axis()).copied());
            }
        }
        let symbols: Vec<BasisSymbol> = symbols.into_iter().collect();
        let mut entries = Vec::new();
        for (k, x) in symbols.iter().enumerate() {
            for y in &symbols[k..] {
                let p = mul(&Element::basis(*x), &Element::basis(*y));
                entries.push((x.to_string(), y.to_string(), self.el(&p)));
            }
        }
        match self.format {
            Format::Text => {
                let width = entries
                    .iter()
                    .map(|e| e.0.len() + e.1.len())
                    .max()
                    .unwrap_or(0)
                    + 3;
                let mut s = String::new();
                for (x, y, p) in &entries {
                    let lhs = format!("{x} * {y}");
                    let _ = writeln!(s, "{lhs:<width$} = {p}");
                }
                s
            }
            Format::Json => json_text(&json!({
                "symbols": symbols,
                "entries": entries
                    .iter()
                    .map(|(x, y, p)| json!({ "left": x, "right": y, "product": p }))
                    .collect::<Vec<_>>(),
            })),
            Format::Csv => csv_text(
                &["left", "right", "product"],
                entries.into_iter().map(|(x, y, p)| vec![x, y, p]),
            ),
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
