//! Parallel cospectral classing and table output.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Mutex;

use mixwalk_core::enumerate::{
    children, enumerate_filtered, reference_row, ClassMap, CospectralTable, Functor, TableKind,
};
use mixwalk_core::scalar::Regime;
use mixwalk_core::{Angle, Digraph};
use rayon::prelude::*;
use serde_json::json;

use crate::checkpoint::{Checkpoint, PartitionResult};
use crate::error::{CliError, Result};

/// A table to compute: a functor plus names for output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub name: String,
    /// Matrix symbol used in row labels.
    pub symbol: String,
    pub functor: Functor,
}

impl TableSpec {
    pub fn published(kind: TableKind) -> TableSpec {
        let f = kind.functor();
        let symbol = match kind {
            TableKind::Adjacency => "A".to_string(),
            TableKind::Hermitian => "H".to_string(),
            _ => symbol(f),
        };
        TableSpec { name: kind.title().to_string(), symbol, functor: f }
    }

    pub fn custom(functor: Functor) -> TableSpec {
        TableSpec { name: functor.label(), symbol: symbol(functor), functor }
    }

    /// The published table with the same values, if any.
    pub fn reference_kind(&self) -> Option<TableKind> {
        match self.functor {
            Functor::SquarePositive(a) if a.regime() == Regime::AboveRight => Some(TableKind::SquareObtuse),
            f => TableKind::ALL.into_iter().find(|k| k.functor() == f),
        }
    }
}

fn symbol(f: Functor) -> String {
    match f {
        Functor::Adjacency => "A".into(),
        Functor::Hermitian(a) => format!("H_{}", a),
        Functor::SquarePositive(a) => format!("U^(2,+)_{}", a),
    }
}

/// Computes one column per spec for `order`, splitting the work by the
/// canonical digraph on the first `order - 1` vertices.
pub fn compute(order: usize, specs: &[TableSpec], jobs: usize, checkpoint: Option<&Path>) -> Result<Vec<CospectralTable>> {
    if !(2..=6).contains(&order) {
        return Err(CliError::Precondition(format!("order {} outside 2..=6", order)));
    }
    let parents = enumerate_filtered(order - 1, |_, _| true)?;
    let labels: Vec<String> = specs.iter().map(|s| s.functor.label()).collect();
    let (ck, mut done) = match checkpoint {
        Some(p) => {
            let (c, d) = Checkpoint::open(p, order, &labels)?;
            (Some(Mutex::new(c)), d)
        }
        None => (None, BTreeMap::new()),
    };
    if let Some(&bad) = done.keys().find(|&&id| id as usize >= parents.len()) {
        return Err(CliError::Checkpoint {
            path: checkpoint.map(|p| p.display().to_string()).unwrap_or_default(),
            partition: bad.to_string(),
            reason: "partition id out of range".into(),
        });
    }
    let todo: Vec<usize> = (0..parents.len()).filter(|i| !done.contains_key(&(*i as u32))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| CliError::Precondition(e.to_string()))?;
    let fresh: Vec<(u32, PartitionResult)> = pool.install(|| {
        todo.par_iter()
            .map(|&i| -> Result<(u32, PartitionResult)> {
                let r = partition(&parents[i], specs)?;
                if let Some(ck) = &ck {
                    ck.lock().expect("checkpoint lock").append(i as u32, &r)?;
                }
                Ok((i as u32, r))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    done.extend(fresh);
    let mut total = 0u64;
    let mut merged: Vec<ClassMap> = vec![ClassMap::new(); specs.len()];
    for r in done.into_values() {
        total += r.digraphs;
        for (m, c) in merged.iter_mut().zip(r.classes) {
            m.merge(c);
        }
    }
    Ok(specs.iter().zip(&merged).map(|(s, m)| CospectralTable::from_classes(order, s.functor.label(), total, m)).collect())
}

fn partition(parent: &Digraph, specs: &[TableSpec]) -> Result<PartitionResult> {
    let kids = children(parent, |_| true);
    let mut classes = vec![ClassMap::new(); specs.len()];
    for g in &kids {
        let graph = g.is_graph();
        for (m, s) in classes.iter_mut().zip(specs) {
            if let Some(k) = s.functor.key(g)? {
                m.insert(k, graph);
            }
        }
    }
    Ok(PartitionResult { digraphs: kids.len() as u64, classes })
}

/// Output format for tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

/// One computed table: its spec and one column per order.
pub struct TableOutput<'a> {
    pub spec: &'a TableSpec,
    pub columns: Vec<CospectralTable>,
}

const FIELDS: [&str; 7] = ["digraphs", "distinct", "max_class", "determined", "no_graphs", "only_graphs", "mixed"];

pub fn emit(tables: &[TableOutput<'_>], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = format!("table,functor,order,{}\n", FIELDS.join(","));
            for t in tables {
                for c in &t.columns {
                    let row: Vec<String> = c.row().iter().map(u64::to_string).collect();
                    s.push_str(&format!("{},{},{},{}\n", csv_field(&t.spec.name), c.functor, c.order, row.join(",")));
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = tables
                .iter()
                .flat_map(|t| {
                    t.columns.iter().map(move |c| {
                        let mut o = json!({"table": t.spec.name, "functor": c.functor, "order": c.order});
                        for (f, v) in FIELDS.iter().zip(c.row()) {
                            o[*f] = json!(v);
                        }
                        o
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("json");
            s.push('\n');
            s
        }
        Format::Md => tables.iter().map(markdown).collect::<Vec<_>>().join("\n"),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn markdown(t: &TableOutput<'_>) -> String {
    let m = &t.spec.symbol;
    let mut s = format!("### {}\n\n| Order |", t.spec.name);
    for c in &t.columns {
        s.push_str(&format!(" {} |", c.order));
    }
    s.push_str("\n|---|");
    s.push_str(&"--:|".repeat(t.columns.len()));
    s.push('\n');
    let labels = [
        "Number of digraphs".to_string(),
        "Number of distinct characteristic polynomials".to_string(),
        format!("Maximum size of a {}-cospectral class", m),
        format!("Number of digraphs determined by {}-spectrum", m),
        format!("{}-cospectral classes containing: a) no graphs", m),
        "b) only graphs".to_string(),
        "c) at least one graph and a digraph".to_string(),
    ];
    if t.columns.is_empty() {
        return s;
    }
    for (i, label) in labels.iter().enumerate() {
        s.push_str(&format!("| {} |", label));
        for c in &t.columns {
            s.push_str(&format!(" {} |", c.row()[i]));
        }
        s.push('\n');
    }
    s
}

/// Cells that differ from the published values, as readable lines.
pub fn compare_with_reference(spec: &TableSpec, column: &CospectralTable) -> Result<Vec<String>> {
    let kind = spec
        .reference_kind()
        .ok_or_else(|| CliError::Precondition(format!("no published values for {}", spec.functor.label())))?;
    let want = reference_row(kind, column.order)
        .ok_or_else(|| CliError::Precondition(format!("no published values for order {}", column.order)))?;
    Ok(FIELDS
        .iter()
        .zip(column.row().iter().zip(want))
        .filter(|(_, (got, want))| *got != want)
        .map(|(f, (got, want))| format!("{} order {} {}: computed {}, published {}", spec.name, column.order, f, got, want))
        .collect())
}

/// The six published tables.
pub fn published_specs() -> Vec<TableSpec> {
    TableKind::ALL.into_iter().map(TableSpec::published).collect()
}

/// Spec for a CLI functor name.
pub fn spec_for(name: &str, eta: Option<Angle>) -> Result<TableSpec> {
    let f = match name {
        "A" => Functor::Adjacency,
        "H" => Functor::Hermitian(Angle::RIGHT),
        "Heta" => Functor::Hermitian(eta.ok_or_else(|| CliError::Precondition("Heta needs --eta".into()))?),
        "U2plus" => Functor::SquarePositive(eta.ok_or_else(|| CliError::Precondition("U2plus needs --eta".into()))?),
        _ => return Err(CliError::Precondition(format!("unsupported functor {:?}", name))),
    };
    Ok(match TableKind::ALL.into_iter().find(|k| k.functor() == f) {
        Some(k) => TableSpec::published(k),
        None => TableSpec::custom(f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_published_values() {
        let specs = published_specs();
        for order in 2..=4 {
            for (s, c) in specs.iter().zip(compute(order, &specs, 2, None).unwrap()) {
                assert!(compare_with_reference(s, &c).unwrap().is_empty(), "{} {}", s.name, order);
            }
        }
    }

    #[test]
    fn parallelism_does_not_change_output() {
        let specs = published_specs();
        let a = compute(4, &specs, 1, None).unwrap();
        let b = compute(4, &specs, 3, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn checkpoint_resume_gives_same_tables() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.ck");
        let specs = vec![spec_for("H", None).unwrap()];
        let first = compute(4, &specs, 2, Some(&path)).unwrap();
        let again = compute(4, &specs, 2, Some(&path)).unwrap();
        assert_eq!(first, again);
        assert_eq!(first[0].row(), [218, 27, 21, 3, 16, 1, 10]);
    }

    #[test]
    fn empty_table_prints_header_only() {
        let spec = spec_for("A", None).unwrap();
        let t = [TableOutput { spec: &spec, columns: vec![] }];
        assert_eq!(emit(&t, Format::Csv), format!("table,functor,order,{}\n", FIELDS.join(",")));
        assert_eq!(emit(&[], Format::Json).trim(), "[]");
        assert_eq!(emit(&t, Format::Md).lines().count(), 4);
    }

    #[test]
    fn obtuse_angles_share_the_published_table() {
        let s = spec_for("U2plus", Some(Angle::new(3, 4).unwrap())).unwrap();
        assert_eq!(s.reference_kind(), Some(TableKind::SquareObtuse));
        let s = spec_for("U2plus", Some(Angle::new(1, 4).unwrap())).unwrap();
        assert!(compare_with_reference(&s, &compute(2, &[s.clone()], 1, None).unwrap()[0]).is_err());
        assert!(spec_for("Heta", None).is_err());
    }
}
