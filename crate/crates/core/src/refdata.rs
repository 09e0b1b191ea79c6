//! Reference tables of nilpotent orbits in the exceptional types.
//!
//! One JSON document per type plus one for the exceptions table; the format is
//! described in `docs/refdata-format.md`. The documents are compiled into the
//! library and can be replaced at run time by pointing [`REFDATA_ENV`] at a
//! directory holding files of the same names.

use crate::error::{Error, Result};
use crate::orbits::{NilpotentOrbit, WeightedDynkinDiagram};
use crate::reach::OrbitAnalysis;
use crate::rootsys::TypeRank;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Environment variable naming a directory that overrides the built-in tables.
pub const REFDATA_ENV: &str = "LIEORB_REFDATA_DIR";

pub const FORMAT_VERSION: u32 = 1;

const EMBEDDED: [(&str, &str); 5] = [
    ("g2.json", include_str!("../data/g2.json")),
    ("f4.json", include_str!("../data/f4.json")),
    ("e6.json", include_str!("../data/e6.json")),
    ("e7.json", include_str!("../data/e7.json")),
    ("e8.json", include_str!("../data/e8.json")),
];
const EMBEDDED_EXCEPTIONS: &str = include_str!("../data/exceptions.json");

/// Where the rigid flag of a record comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RigidSource {
    /// Rigid column of the reachable-orbit tables.
    ReachableTable,
    /// List of rigid orbits that are not strongly reachable.
    NonStrongList,
    /// Not in either list, hence not rigid.
    Complement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub label: String,
    #[serde(default)]
    pub alt_labels: Vec<String>,
    pub diagram: Vec<u8>,
    pub reachable: bool,
    pub strongly_reachable: bool,
    pub rigid: bool,
    pub rigid_source: RigidSource,
    pub dim_ce: usize,
    pub ce_weights: Vec<i64>,
}

impl OrbitRecord {
    pub fn has_label(&self, label: &str) -> bool {
        self.label == label || self.alt_labels.iter().any(|l| l == label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    #[serde(rename = "type")]
    pub type_name: String,
    pub label: String,
    pub diagram: Vec<u8>,
    pub sheet_rank: usize,
    pub dim_ce: usize,
}

/// One field where live computation and the tables disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    #[serde(rename = "type")]
    pub type_name: String,
    pub diagram: String,
    pub label: Option<String>,
    pub field: String,
    pub computed: String,
    pub expected: String,
}

#[derive(Deserialize)]
struct TypeDoc {
    format_version: u32,
    #[serde(rename = "type")]
    type_name: String,
    node_order: String,
    orbits: Vec<OrbitRecord>,
}

#[derive(Deserialize)]
struct ExceptionsDoc {
    format_version: u32,
    exceptions: Vec<ExceptionRecord>,
}

#[derive(Clone, Debug)]
pub struct RefData {
    tables: BTreeMap<TypeRank, Vec<OrbitRecord>>,
    exceptions: Vec<ExceptionRecord>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::RefData(msg.into())
}

impl RefData {
    /// The tables compiled into the library.
    pub fn embedded() -> Result<RefData> {
        Self::from_sources(EMBEDDED.iter().map(|(n, s)| (n.to_string(), s.to_string())).collect(), EMBEDDED_EXCEPTIONS)
    }

    /// Reads `g2.json`, `f4.json`, `e6.json`, `e7.json`, `e8.json` and `exceptions.json` from `dir`.
    pub fn from_dir(dir: &Path) -> Result<RefData> {
        let read = |name: &str| {
            std::fs::read_to_string(dir.join(name)).map_err(|e| bad(format!("{}: {e}", dir.join(name).display())))
        };
        let mut docs = Vec::new();
        for (name, _) in EMBEDDED {
            docs.push((name.to_string(), read(name)?));
        }
        Self::from_sources(docs, &read("exceptions.json")?)
    }

    /// The override directory when [`REFDATA_ENV`] is set, the built-in tables otherwise.
    pub fn load() -> Result<RefData> {
        match std::env::var_os(REFDATA_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir)),
            _ => Self::embedded(),
        }
    }

    fn from_sources(docs: Vec<(String, String)>, exceptions: &str) -> Result<RefData> {
        let mut tables = BTreeMap::new();
        for (name, text) in docs {
            let doc: TypeDoc = serde_json::from_str(&text).map_err(|e| bad(format!("{name}: {e}")))?;
            if doc.format_version != FORMAT_VERSION {
                return Err(bad(format!("{name}: unsupported format_version {}", doc.format_version)));
            }
            if doc.node_order != "bourbaki" {
                return Err(bad(format!("{name}: node_order must be \"bourbaki\"")));
            }
            let t: TypeRank = doc.type_name.parse()?;
            for r in &doc.orbits {
                WeightedDynkinDiagram::new(t.rank(), &r.diagram.iter().map(|&v| v as i64).collect::<Vec<_>>())
                    .map_err(|e| bad(format!("{name}: {}: {e}", r.label)))?;
            }
            tables.insert(t, doc.orbits);
        }
        let ex: ExceptionsDoc = serde_json::from_str(exceptions).map_err(|e| bad(format!("exceptions.json: {e}")))?;
        if ex.format_version != FORMAT_VERSION {
            return Err(bad(format!("exceptions.json: unsupported format_version {}", ex.format_version)));
        }
        Ok(RefData { tables, exceptions: ex.exceptions })
    }

    pub fn types(&self) -> impl Iterator<Item = TypeRank> + '_ {
        self.tables.keys().copied()
    }

    pub fn records(&self, t: TypeRank) -> Result<&[OrbitRecord]> {
        self.tables.get(&t).map(|v| v.as_slice()).ok_or_else(|| bad(format!("no table for type {t}")))
    }

    pub fn lookup(&self, t: TypeRank, diagram: &[u8]) -> Result<&OrbitRecord> {
        self.records(t)?
            .iter()
            .find(|r| r.diagram == diagram)
            .ok_or_else(|| Error::UnknownDiagram { type_name: t.to_string(), diagram: diagram.to_vec() })
    }

    /// Finds a record by its label or one of its alternative labels; the
    /// primary label wins when both match.
    pub fn lookup_label(&self, t: TypeRank, label: &str) -> Result<&OrbitRecord> {
        let records = self.records(t)?;
        records
            .iter()
            .find(|r| r.label == label)
            .or_else(|| records.iter().find(|r| r.has_label(label)))
            .ok_or_else(|| Error::UnknownLabel { type_name: t.to_string(), label: label.to_string() })
    }

    /// Attaches the table label to each orbit by its diagram.
    pub fn label_orbits(&self, t: TypeRank, orbits: &mut [NilpotentOrbit]) -> Result<()> {
        for o in orbits {
            o.label = Some(self.lookup(t, o.diagram.labels())?.label.clone());
        }
        Ok(())
    }

    pub fn exceptions(&self) -> &[ExceptionRecord] {
        &self.exceptions
    }

    pub fn rigid_flags(&self, t: TypeRank) -> Result<BTreeMap<Vec<u8>, bool>> {
        Ok(self.records(t)?.iter().map(|r| (r.diagram.clone(), r.rigid)).collect())
    }

    /// Compares analyses of every orbit of `t` with the table.
    ///
    /// Beyond the tabulated fields this checks the structural facts the tables
    /// rest on: reachable iff generated by `g(1)_e`, strongly reachable iff
    /// reachable and rigid, `e` spanning `c_e` for rigid orbits that are not
    /// strongly reachable, and the `dim c_e` column of the exceptions table.
    pub fn diff(&self, t: TypeRank, analyses: &[OrbitAnalysis]) -> Result<Vec<Discrepancy>> {
        let records = self.records(t)?;
        let mut out = Vec::new();
        let mut push = |d: &WeightedDynkinDiagram, label: Option<&str>, field: &str, computed: String, expected: String| {
            out.push(Discrepancy {
                type_name: t.to_string(),
                diagram: d.to_string(),
                label: label.map(str::to_string),
                field: field.to_string(),
                computed,
                expected,
            })
        };
        let diagram_of = |r: &OrbitRecord| {
            WeightedDynkinDiagram::new(t.rank(), &r.diagram.iter().map(|&v| v as i64).collect::<Vec<_>>())
        };
        for r in records {
            if !analyses.iter().any(|a| a.orbit.diagram.labels() == r.diagram.as_slice()) {
                push(&diagram_of(r)?, Some(&r.label), "orbit", "absent".into(), "present".into());
            }
        }
        let weights = |w: &[i64]| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        for a in analyses {
            let d = &a.orbit.diagram;
            let Some(r) = records.iter().find(|r| r.diagram.as_slice() == d.labels()) else {
                push(d, None, "orbit", "present".into(), "absent".into());
                continue;
            };
            let lab = Some(r.label.as_str());
            if a.reachable != r.reachable {
                push(d, lab, "reachable", a.reachable.to_string(), r.reachable.to_string());
            }
            if a.strongly_reachable != r.strongly_reachable {
                push(d, lab, "strongly_reachable", a.strongly_reachable.to_string(), r.strongly_reachable.to_string());
            }
            if a.dim_ce != r.dim_ce {
                push(d, lab, "dim_ce", a.dim_ce.to_string(), r.dim_ce.to_string());
            }
            let mut expected = r.ce_weights.clone();
            expected.sort_unstable();
            if a.ce_weights != expected {
                push(d, lab, "ce_weights", weights(&a.ce_weights), weights(&expected));
            }
            if a.panyushev_generated != a.reachable {
                push(d, lab, "panyushev_generated", a.panyushev_generated.to_string(), a.reachable.to_string());
            }
            if a.strongly_reachable != (a.reachable && r.rigid) {
                push(d, lab, "strongly_reachable_iff_reachable_and_rigid", a.strongly_reachable.to_string(), (a.reachable && r.rigid).to_string());
            }
            if r.rigid && !a.strongly_reachable && !a.e_spans_quotient() {
                push(d, lab, "e_spans_ce", "false".into(), "true".into());
            }
        }
        for x in self.exceptions.iter().filter(|x| x.type_name == t.to_string()) {
            let d = WeightedDynkinDiagram::new(t.rank(), &x.diagram.iter().map(|&v| v as i64).collect::<Vec<_>>())?;
            match analyses.iter().find(|a| a.orbit.diagram == d) {
                Some(a) if a.dim_ce != x.dim_ce => {
                    push(&d, Some(&x.label), "exception_dim_ce", a.dim_ce.to_string(), x.dim_ce.to_string())
                }
                Some(_) if x.sheet_rank == x.dim_ce => {
                    push(&d, Some(&x.label), "exception_sheet_rank", x.sheet_rank.to_string(), format!("not {}", x.dim_ce))
                }
                Some(_) => {}
                None => push(&d, Some(&x.label), "exception_orbit", "absent".into(), "present".into()),
            }
        }
        Ok(out)
    }

    /// Internal consistency problems, empty when the tables are sound.
    pub fn consistency_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (t, records) in &self.tables {
            let mut seen = std::collections::BTreeSet::new();
            for r in records {
                let who = format!("{t} {}", r.label);
                if !seen.insert(r.diagram.clone()) {
                    out.push(format!("{who}: duplicate diagram"));
                }
                if r.strongly_reachable && !r.reachable {
                    out.push(format!("{who}: strongly reachable but not reachable"));
                }
                if r.strongly_reachable != (r.dim_ce == 0) {
                    out.push(format!("{who}: strongly reachable must agree with dim_ce = 0"));
                }
                if r.strongly_reachable != (r.reachable && r.rigid) {
                    out.push(format!("{who}: strongly reachable must agree with reachable and rigid"));
                }
                if r.ce_weights.len() != r.dim_ce {
                    out.push(format!("{who}: {} weights for dim_ce {}", r.ce_weights.len(), r.dim_ce));
                }
                if r.ce_weights.windows(2).any(|w| w[0] > w[1]) {
                    out.push(format!("{who}: weights not sorted"));
                }
            }
        }
        for x in &self.exceptions {
            let Ok(t) = x.type_name.parse::<TypeRank>() else {
                out.push(format!("exception {}: bad type {}", x.label, x.type_name));
                continue;
            };
            match self.lookup(t, &x.diagram) {
                Ok(r) if r.has_label(&x.label) && r.dim_ce == x.dim_ce => {}
                Ok(r) => out.push(format!("exception {t} {}: table row is {} with dim_ce {}", x.label, r.label, r.dim_ce)),
                Err(e) => out.push(format!("exception {t} {}: {e}", x.label)),
            }
        }
        out
    }
}

/// Record of `diagram` in the built-in tables.
pub fn lookup(t: TypeRank, diagram: &[u8]) -> Result<OrbitRecord> {
    RefData::embedded()?.lookup(t, diagram).cloned()
}

/// The built-in exceptions table.
pub fn exceptions() -> Result<Vec<ExceptionRecord>> {
    Ok(RefData::embedded()?.exceptions().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TypeRank {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let r = RefData::embedded().unwrap();
        for (ty, n, reach, rigid) in [("G2", 4, 1, 2), ("F4", 15, 4, 5), ("E6", 20, 6, 3), ("E7", 44, 8, 7), ("E8", 69, 16, 17)] {
            let recs = r.records(t(ty)).unwrap();
            assert_eq!(recs.len(), n, "{ty}");
            assert_eq!(recs.iter().filter(|x| x.reachable).count(), reach, "{ty}");
            assert_eq!(recs.iter().filter(|x| x.rigid).count(), rigid, "{ty}");
        }
        assert_eq!(r.exceptions().len(), 6);
    }

    #[test]
    fn consistent() {
        assert_eq!(RefData::embedded().unwrap().consistency_problems(), Vec::<String>::new());
    }

    #[test]
    fn lookups() {
        let r = RefData::embedded().unwrap();
        let f4a3 = r.lookup_label(t("F4"), "F4(a3)").unwrap();
        assert_eq!(r.lookup(t("F4"), &f4a3.diagram).unwrap().ce_weights, vec![2; 6]);
        let e8a7 = r.lookup_label(t("E8"), "E8(a7)").unwrap();
        assert_eq!((e8a7.dim_ce, e8a7.ce_weights.clone()), (10, vec![2; 10]));
        assert!(matches!(r.lookup(t("E6"), &[2, 2, 2, 2, 2, 1]), Err(Error::UnknownDiagram { .. })));
        assert!(matches!(r.lookup_label(t("E6"), "nonsense"), Err(Error::UnknownLabel { .. })));
        // both names of the two small G2 orbits resolve, primary label first
        assert_eq!(r.lookup_label(t("G2"), "A1").unwrap().diagram, vec![0, 1]);
        assert_eq!(r.lookup_label(t("G2"), "Ã1").unwrap().diagram, vec![1, 0]);
    }

    #[test]
    fn exception_rows() {
        let ex = exceptions().unwrap();
        let find = |ty: &str, label: &str| ex.iter().find(|x| x.type_name == ty && x.label == label).unwrap().clone();
        assert_eq!((find("F4", "C3(a1)").sheet_rank, find("F4", "C3(a1)").dim_ce), (1, 3));
        assert_eq!((find("E6", "A3+A1").sheet_rank, find("E6", "A3+A1").dim_ce), (1, 2));
        assert_eq!((find("E8", "E7(a2)").sheet_rank, find("E8", "E7(a2)").dim_ce), (3, 4));
    }

    #[test]
    fn override_directory_round_trip() {
        let dir = std::env::temp_dir().join(format!("lieorb-refdata-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        for (name, text) in EMBEDDED {
            std::fs::write(dir.join(name), text).unwrap();
        }
        std::fs::write(dir.join("exceptions.json"), EMBEDDED_EXCEPTIONS).unwrap();
        let r = RefData::from_dir(&dir).unwrap();
        assert_eq!(r.records(t("E7")).unwrap(), RefData::embedded().unwrap().records(t("E7")).unwrap());
        std::fs::write(dir.join("g2.json"), "{").unwrap();
        assert!(matches!(RefData::from_dir(&dir), Err(Error::RefData(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
