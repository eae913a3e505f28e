use std::fmt::Write as _;

use super::checks::run_checks;
use super::format::format_combination;
use crate::calculus::{center, series, SeriesKind};
use crate::construct::catalog_notes;
use crate::error::Result;
use crate::lie::{adjoint_representation, LieAlgebra};
use crate::linalg::Subspace;
use crate::structure::{
    class_flags, essential, fingerprint, find_line_ideals, minimal_abelian_d2_ideal, nilradical, radical,
    triangularity,
};

/// Trials per randomized suite inside a report.
pub const REPORT_TRIALS: usize = 20;

/// A node of the report tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Text(String),
    List(Vec<String>),
    Map(Vec<(String, Value)>),
}

impl Value {
    fn text(s: impl ToString) -> Value {
        Value::Text(s.to_string())
    }
}

/// Ordered key-value tree; keys keep insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportDocument {
    pub entries: Vec<(String, Value)>,
}

struct MapBuilder(Vec<(String, Value)>);

impl MapBuilder {
    fn new() -> Self {
        MapBuilder(Vec::new())
    }

    fn text(mut self, key: &str, v: impl ToString) -> Self {
        self.0.push((key.to_string(), Value::text(v)));
        self
    }

    fn list(mut self, key: &str, v: Vec<String>) -> Self {
        self.0.push((key.to_string(), Value::List(v)));
        self
    }

    fn map(mut self, key: &str, m: MapBuilder) -> Self {
        self.0.push((key.to_string(), Value::Map(m.0)));
        self
    }

    fn value(self) -> Value {
        Value::Map(self.0)
    }
}

fn dims(ds: &[usize]) -> String {
    ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn basis(l: &LieAlgebra, s: &Subspace) -> Vec<String> {
    s.basis_vectors()
        .iter()
        .map(|v| format_combination(l.labels(), v))
        .collect()
}

impl ReportDocument {
    /// Looks up a `/`-separated path, e.g. `fingerprint/rank_eps`.
    pub fn get(&self, path: &str) -> Option<&Value> {
        let mut entries = &self.entries;
        let mut parts = path.split('/').peekable();
        while let Some(key) = parts.next() {
            let (_, v) = entries.iter().find(|(k, _)| k == key)?;
            if parts.peek().is_none() {
                return Some(v);
            }
            match v {
                Value::Map(m) => entries = m,
                _ => return None,
            }
        }
        None
    }

    pub fn get_text(&self, path: &str) -> Option<&str> {
        match self.get(path)? {
            Value::Text(s) => Some(s),
            _ => None,
        }
    }

    /// Indented key-value tree: `key: value`, nested maps indented by two
    /// spaces, list items as `- item` lines, empty lists as `[]`.
    pub fn render_tree(&self) -> String {
        fn walk(out: &mut String, entries: &[(String, Value)], depth: usize) {
            let pad = "  ".repeat(depth);
            for (k, v) in entries {
                match v {
                    Value::Text(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    Value::List(items) if items.is_empty() => {
                        let _ = writeln!(out, "{pad}{k}: []");
                    }
                    Value::List(items) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            let _ = writeln!(out, "{pad}  - {item}");
                        }
                    }
                    Value::Map(m) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        walk(out, m, depth + 1);
                    }
                }
            }
        }
        let mut out = String::new();
        walk(&mut out, &self.entries, 0);
        out
    }

    /// Sections per top-level key, nested keys joined with dots, lists
    /// joined with `; `.
    pub fn render_text(&self) -> String {
        fn flat(out: &mut String, prefix: &str, entries: &[(String, Value)]) {
            for (k, v) in entries {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                match v {
                    Value::Text(s) => {
                        let _ = writeln!(out, "  {key:<22} {s}");
                    }
                    Value::List(items) if items.is_empty() => {
                        let _ = writeln!(out, "  {key:<22} (none)");
                    }
                    Value::List(items) => {
                        let _ = writeln!(out, "  {key:<22} {}", items.join("; "));
                    }
                    Value::Map(m) => flat(out, &key, m),
                }
            }
        }
        let mut out = String::new();
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            match v {
                Value::Map(m) => {
                    let _ = writeln!(out, "{k}");
                    flat(&mut out, "", m);
                }
                Value::Text(s) => {
                    let _ = writeln!(out, "{k}: {s}");
                }
                Value::List(items) => {
                    let _ = writeln!(out, "{k}");
                    for item in items {
                        let _ = writeln!(out, "  - {item}");
                    }
                }
            }
        }
        out
    }
}

/// Full invariant report. Structure sections are omitted for algebras that
/// fail validation. `seed` drives the embedded randomized checks.
pub fn build_report(l: &LieAlgebra, seed: u64) -> Result<ReportDocument> {
    let mut doc = Vec::new();
    doc.push((
        "algebra".to_string(),
        MapBuilder::new()
            .text("name", l.name())
            .text("dim", l.dim())
            .text("basis", l.labels().join(" "))
            .text("nilpotency_index", l.nilpotency_index())
            .value(),
    ));
    let validation = l.validate();
    if !validation.is_valid() {
        doc.push(("validation".to_string(), Value::List(validation.lines())));
        return Ok(ReportDocument { entries: doc });
    }
    doc.push(("validation".to_string(), Value::text("valid")));

    let fp = fingerprint(l)?;
    let (sp, sn, sz) = fp.killing_signature;
    doc.push((
        "fingerprint".to_string(),
        MapBuilder::new()
            .text("dim", fp.dim)
            .text("rank_eps", fp.rank_eps)
            .text("essential_dim", fp.essential_dim)
            .text("derived_dims", dims(&fp.derived_dims))
            .text("lower_central_dims", dims(&fp.lcs_dims))
            .text("center_dim", fp.center_dim)
            .text("radical_dim", fp.radical_dim)
            .text("nilradical_dim", fp.nilradical_dim)
            .text("killing_signature", format!("{sp} {sn} {sz}"))
            .text("solvable", fp.solvable)
            .text("nilpotent", fp.nilpotent)
            .text("semisimple", fp.semisimple)
            .text("triangular", fp.triangular)
            .text("free_d2_module", fp.free_d2_module)
            .value(),
    ));

    let series_dims = |k| dims(&series(l, k).iter().map(Subspace::dim).collect::<Vec<_>>());
    doc.push((
        "series".to_string(),
        MapBuilder::new()
            .text("derived", series_dims(SeriesKind::Derived))
            .text("lower_central", series_dims(SeriesKind::LowerCentral))
            .text("upper_central", series_dims(SeriesKind::UpperCentral))
            .value(),
    ));

    let (_, ess) = essential(l);
    doc.push((
        "subspaces".to_string(),
        MapBuilder::new()
            .list("center", basis(l, &center(l)))
            .list("radical", basis(l, &radical(l)?))
            .list("nilradical", basis(l, &nilradical(l)?))
            .list(
                "essential_basis",
                ess.iter().map(|v| format_combination(l.labels(), v)).collect(),
            )
            .value(),
    ));

    let tri = triangularity(l);
    let mut t = MapBuilder::new().text("triangular", tri.triangular).text("solvable", tri.solvable);
    if let Some(w) = &tri.witness {
        t = t.map(
            "witness",
            MapBuilder::new()
                .text("element", &w.label)
                .text("char_poly", &w.char_poly)
                .text("real_roots", format!("{} of {}", w.real_roots, l.dim())),
        );
    }
    doc.push(("triangularity".to_string(), t.value()));

    let adj = adjoint_representation(l);
    doc.push((
        "adjoint".to_string(),
        MapBuilder::new()
            .text("faithful", adj.faithful)
            .text("d2_matrix_form", adj.dual_form.is_some())
            .value(),
    ));

    let mut notes: Vec<String> = catalog_notes(l.name()).iter().map(|s| s.to_string()).collect();
    let flags = class_flags(l);
    if flags.solvable && l.dim() > 0 {
        let lines = find_line_ideals(l)?;
        let fams: Vec<String> = lines
            .families
            .iter()
            .map(|f| {
                let b = basis(l, &f.space);
                if f.space.dim() == 1 {
                    b[0].clone()
                } else {
                    format!("every line in span({})", b.join(", "))
                }
            })
            .collect();
        doc.push((
            "line_ideals".to_string(),
            MapBuilder::new()
                .list("families", fams)
                .text("conclusive", lines.conclusive)
                .value(),
        ));
        if l.nilpotency_index() == 2 {
            let m = minimal_abelian_d2_ideal(l)?;
            if let Some(n) = &m.note {
                notes.push(n.clone());
            }
            doc.push((
                "minimal_abelian_ideal".to_string(),
                MapBuilder::new()
                    .text("dim", m.dim())
                    .list("basis", basis(l, &m.space))
                    .text("searched_dim", m.searched.dim())
                    .value(),
            ));
        }
    }

    let checks = run_checks(l, REPORT_TRIALS, seed)?;
    let mut c = MapBuilder::new().text("seed", seed).text("trials", REPORT_TRIALS);
    for s in &checks.suites {
        let mut m = MapBuilder::new()
            .text("tested", s.tested)
            .text("skipped", s.skipped)
            .text("violations", s.violations);
        if let Some(w) = &s.witness {
            m = m.text("witness", w);
        }
        c = c.map(s.name, m);
    }
    doc.push(("checks".to_string(), c.value()));

    doc.push(("notes".to_string(), Value::List(notes)));
    Ok(ReportDocument { entries: doc })
}
