//! Serialization helpers shared by the CLI and report writers.

use std::io::Write;

use serde::{Serialize, Serializer};

use crate::catalog::{witness, CatalogEntry, EntryKind, Param};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::rational::Rational;

pub(crate) fn ser_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&emit_graph6(g))
}

/// One catalog entry flattened for export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub beta: Rational,
    pub kind: &'static str,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub m: Option<usize>,
    pub witness: String,
    pub parametrizations: Vec<[usize; 4]>,
}

impl CatalogRow {
    pub fn from_entry(entry: &CatalogEntry) -> Result<CatalogRow> {
        let (k, n, t, m) = match entry.kind {
            EntryKind::SubOne { t } => (None, None, Some(t), None),
            EntryKind::IntervalEndpoint { k } => (Some(k), None, None, None),
            EntryKind::Interior { k, n, t, m } => (Some(k), Some(n), Some(t), Some(m)),
            EntryKind::Two => (None, None, None, None),
        };
        Ok(CatalogRow {
            beta: entry.beta,
            kind: entry.kind.name(),
            k,
            n,
            t,
            m,
            witness: emit_graph6(&witness(entry)?),
            parametrizations: entry.parametrizations.iter().map(|p: &Param| [p.k, p.n, p.t, p.m]).collect(),
        })
    }
}

/// One JSON object per line.
pub fn write_jsonl<W: Write, T: Serialize>(items: &[T], mut w: W) -> Result<()> {
    for item in items {
        serde_json::to_writer(&mut w, item)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_catalog_jsonl<W: Write>(entries: &[CatalogEntry], w: W) -> Result<()> {
    let rows = entries.iter().map(CatalogRow::from_entry).collect::<Result<Vec<_>>>()?;
    write_jsonl(&rows, w)
}

/// CSV with the same columns as the JSON form. Optional fields are empty;
/// parametrizations are `k:n:t:m` joined by `;`.
pub fn write_catalog_csv<W: Write>(entries: &[CatalogEntry], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["beta", "kind", "k", "n", "t", "m", "witness", "parametrizations"])?;
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for entry in entries {
        let row = CatalogRow::from_entry(entry)?;
        let params = row
            .parametrizations
            .iter()
            .map(|p| format!("{}:{}:{}:{}", p[0], p[1], p[2], p[3]))
            .collect::<Vec<_>>()
            .join(";");
        out.write_record([
            row.beta.to_string(),
            row.kind.to_string(),
            opt(row.k),
            opt(row.n),
            opt(row.t),
            opt(row.m),
            row.witness,
            params,
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_b;
    use crate::rational::q;

    #[test]
    fn catalog_exports_are_stable() {
        let entries = enumerate_b(q(1, 1), q(4, 3), Some(12)).unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_catalog_jsonl(&entries, &mut a).unwrap();
        write_catalog_jsonl(&entries, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(
            first,
            r#"{"beta":"1","kind":"interval_endpoint","k":2,"n":null,"t":null,"m":null,"witness":"Bw","parametrizations":[]}"#
        );
        assert!(text.lines().any(|l| l.starts_with(r#"{"beta":"5/4","kind":"interior","k":2,"n":4,"t":1,"m":1"#)));

        let mut c = Vec::new();
        write_catalog_csv(&entries, &mut c).unwrap();
        let csv_text = String::from_utf8(c).unwrap();
        let mut lines = csv_text.lines();
        assert_eq!(lines.next().unwrap(), "beta,kind,k,n,t,m,witness,parametrizations");
        assert_eq!(lines.next().unwrap(), "1,interval_endpoint,2,,,,Bw,");
        assert_eq!(csv_text.lines().count(), entries.len() + 1);
    }
}
