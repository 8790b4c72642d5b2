//! The `socx-v1` JSON document.
//!
//! ```json
//! { "format": "socx-v1", "name": "Y_1",
//!   "generators": [{"id": "α", "gr": 1, "iota": "1/120"}, ...],
//!   "d":  [{"from": id, "to": id, "terms": [{"pow": 0, "coeff": "4"}]}],
//!   "u":  [...],
//!   "d1": [{"from": id, "terms": [...]}],
//!   "d2": [{"to": id, "terms": [...]}] }
//! ```
//!
//! Generators are written in construction order and entries in generator
//! order of `(from, to)`, so output is byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::{LaurentPoly, Rational};
use crate::grmod::{BigradedModule, Generator, LambdaMap};

use super::{SOComplex, SocxError};

pub const FORMAT: &str = "socx-v1";

#[derive(Debug, Serialize, Deserialize)]
pub struct SocxDocument {
    pub format: String,
    pub name: String,
    pub generators: Vec<GeneratorRepr>,
    #[serde(default)]
    pub d: Vec<EntryRepr>,
    #[serde(default)]
    pub u: Vec<EntryRepr>,
    #[serde(default)]
    pub d1: Vec<D1Repr>,
    #[serde(default)]
    pub d2: Vec<D2Repr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorRepr {
    pub id: String,
    pub gr: i64,
    pub iota: Rational,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EntryRepr {
    pub from: String,
    pub to: String,
    pub terms: LaurentPoly,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct D1Repr {
    pub from: String,
    pub terms: LaurentPoly,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct D2Repr {
    pub to: String,
    pub terms: LaurentPoly,
}

fn entries(map: &LambdaMap) -> Vec<EntryRepr> {
    map.entries()
        .map(|(g, h, p)| EntryRepr {
            from: map.source().generator(g).id.clone(),
            to: map.target().generator(h).id.clone(),
            terms: p.clone(),
        })
        .collect()
}

impl SocxDocument {
    pub fn from_complex(s: &SOComplex) -> Self {
        let m = s.module();
        Self {
            format: FORMAT.into(),
            name: s.name().into(),
            generators: m
                .generators()
                .iter()
                .map(|g| GeneratorRepr { id: g.id.clone(), gr: g.gr, iota: g.iota.clone() })
                .collect(),
            d: entries(s.d()),
            u: entries(s.u()),
            d1: s
                .d1()
                .entries()
                .map(|(g, _, p)| D1Repr { from: m.generator(g).id.clone(), terms: p.clone() })
                .collect(),
            d2: s
                .d2()
                .entries()
                .map(|(_, h, p)| D2Repr { to: m.generator(h).id.clone(), terms: p.clone() })
                .collect(),
        }
    }

    /// Builds the complex without checking its axioms; see
    /// [`SOComplex::validation`].
    pub fn into_complex(self) -> Result<SOComplex, SocxError> {
        if self.format != FORMAT {
            return Err(SocxError::Format(format!("expected format {FORMAT:?}, found {:?}", self.format)));
        }
        let module = BigradedModule::new_unchecked(
            self.generators.into_iter().map(|g| Generator::new(g.id, g.gr, g.iota)).collect(),
        );
        let lookup = |id: &str| {
            module
                .index_of(id)
                .ok_or_else(|| SocxError::Format(format!("entry refers to unknown generator {id:?}")))
        };
        let table = |list: Vec<EntryRepr>| -> Result<BTreeMap<(usize, usize), LaurentPoly>, SocxError> {
            let mut t: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
            for e in list {
                t.entry((lookup(&e.from)?, lookup(&e.to)?)).or_default().add_assign_ref(&e.terms);
            }
            Ok(t)
        };
        let d = table(self.d)?;
        let u = table(self.u)?;
        let mut d1: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for e in self.d1 {
            d1.entry(lookup(&e.from)?).or_default().add_assign_ref(&e.terms);
        }
        let mut d2: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for e in self.d2 {
            d2.entry(lookup(&e.to)?).or_default().add_assign_ref(&e.terms);
        }
        Ok(SOComplex::from_entries(self.name, module, d, u, d1, d2))
    }
}

pub fn to_json(s: &SOComplex) -> String {
    let mut out = serde_json::to_string_pretty(&SocxDocument::from_complex(s)).expect("serializable");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<SOComplex, SocxError> {
    let doc: SocxDocument = serde_json::from_str(text).map_err(|e| SocxError::Format(e.to_string()))?;
    doc.into_complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::socx::{build_y1, build_yn};

    #[test]
    fn y1_document_shape() {
        let doc = SocxDocument::from_complex(&build_y1());
        assert_eq!(doc.generators.len(), 2);
        assert_eq!(doc.d.len() + doc.u.len() + doc.d1.len() + doc.d2.len(), 3);
        assert_eq!(doc.u.len(), 2);
        assert_eq!(doc.d1.len(), 1);
        let js = to_json(&build_y1());
        assert!(js.contains("\"iota\": \"49/120\""));
        assert!(js.contains("\"pow\": -1"));
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let y2 = build_yn(2).unwrap();
        let js = to_json(&y2);
        let back = from_json(&js).unwrap();
        assert!(back.validation().ok);
        assert_eq!(to_json(&back), js);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_json("{"), Err(SocxError::Format(_))));
        let wrong = r#"{"format":"socx-v0","name":"x","generators":[]}"#;
        assert!(matches!(from_json(wrong), Err(SocxError::Format(_))));
        let unknown = r#"{"format":"socx-v1","name":"x","generators":[],"d1":[{"from":"q","terms":[]}]}"#;
        assert!(matches!(from_json(unknown), Err(SocxError::Format(_))));
    }

    #[test]
    fn invalid_complex_loads_with_report() {
        let text = r#"{"format":"socx-v1","name":"bad",
            "generators":[{"id":"a","gr":1,"iota":"1/120"},{"id":"a","gr":5,"iota":"0"}],
            "d1":[{"from":"a","terms":[{"pow":1,"coeff":"1"}]}]}"#;
        let s = from_json(text).unwrap();
        let report = s.validation();
        assert!(!report.ok);
        let axioms = report.failed_axioms();
        assert!(axioms.contains(&"unique-ids"));
        assert!(axioms.contains(&"gr-homogeneity"));
    }
}
