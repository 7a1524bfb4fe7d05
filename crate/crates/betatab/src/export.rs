//! The `catalog.json` documentation artifact.

use betatab_core::catalog::{self, IdentityRecord, ParamKind, ParamSpec};
use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
struct ParamJson {
    name: &'static str,
    kind: &'static str,
    lo: Value,
    hi: Value,
}

#[derive(Serialize)]
struct EntryJson {
    id: &'static str,
    group: String,
    citation: &'static str,
    params: Vec<ParamJson>,
    relations: Vec<&'static str>,
    tolerance_class: &'static str,
}

fn bound(p: &ParamSpec, x: f64) -> Value {
    match p.kind {
        ParamKind::Integer => Value::from(x as i64),
        ParamKind::Real => Value::from(x),
    }
}

fn entry_json(rec: &IdentityRecord) -> EntryJson {
    EntryJson {
        id: rec.id,
        group: rec.group.to_string(),
        citation: rec.citation,
        params: rec
            .domain
            .params
            .iter()
            .map(|p| ParamJson {
                name: p.name,
                kind: match p.kind {
                    ParamKind::Real => "real",
                    ParamKind::Integer => "integer",
                },
                lo: bound(p, p.lo),
                hi: bound(p, p.hi),
            })
            .collect(),
        relations: rec.domain.relations.iter().map(|r| r.text).collect(),
        tolerance_class: rec.tolerance.as_str(),
    }
}

/// The whole roster as pretty-printed JSON, in roster order.
pub fn catalog_json() -> String {
    let entries: Vec<EntryJson> = catalog::all_entries().map(entry_json).collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("catalog serializes");
    s.push('\n');
    s
}
