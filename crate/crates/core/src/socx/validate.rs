use std::fmt;

use serde::Serialize;

use crate::grmod::{compose, LambdaMap};

use super::SOComplex;

pub const AXIOM_UNIQUE_IDS: &str = "unique-ids";
pub const AXIOM_HOMOGENEITY: &str = "gr-homogeneity";
pub const AXIOM_I_DECREASE: &str = "strict-I-decrease";
pub const AXIOM_D_SQUARED: &str = "d²=0";
pub const AXIOM_D1_D: &str = "D1∘d=0";
pub const AXIOM_D_D2: &str = "d∘D2=0";
pub const AXIOM_DU_UD: &str = "d∘U−U∘d=D2∘D1";

/// Entries listed per failed identity before the rest are summarized.
const MAX_LISTED: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.axiom, self.location, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// Axiom ids that failed, in check order, without repeats.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

fn entry_location(map: &LambdaMap, name: &str, from: usize, to: usize) -> String {
    format!("{name}: {} → {}", map.source().generator(from).id, map.target().generator(to).id)
}

fn check_map(map: &LambdaMap, name: &str, homog: &mut Vec<Violation>, levels: &mut Vec<Violation>) {
    for v in map.homogeneity_violations() {
        let g = map.source().generator(v.from);
        let h = map.target().generator(v.to);
        homog.push(Violation {
            axiom: AXIOM_HOMOGENEITY.into(),
            location: entry_location(map, name, v.from, v.to),
            detail: format!(
                "term x^{}: gr(target)+8p = {} but gr(source){:+} = {}",
                v.pow,
                h.gr + 8 * v.pow,
                map.degree(),
                g.gr + map.degree()
            ),
        });
    }
    for v in map.level_violations() {
        levels.push(Violation {
            axiom: AXIOM_I_DECREASE.into(),
            location: entry_location(map, name, v.from, v.to),
            detail: format!(
                "term x^{} lands at I-level {} which is not below {}",
                v.pow, v.target_level, v.source_level
            ),
        });
    }
}

fn check_zero(map: &LambdaMap, axiom: &str, out: &mut Vec<Violation>) {
    let total = map.num_entries();
    for (listed, (g, h, p)) in map.entries().enumerate() {
        if listed == MAX_LISTED {
            out.push(Violation {
                axiom: axiom.into(),
                location: "…".into(),
                detail: format!("{} further nonzero composite entries", total - MAX_LISTED),
            });
            break;
        }
        out.push(Violation {
            axiom: axiom.into(),
            location: format!("{} → {}", map.source().generator(g).id, map.target().generator(h).id),
            detail: format!("composite entry is {p}, expected 0"),
        });
    }
}

/// Checks, in order: generator-id uniqueness, gr-homogeneity of the four
/// maps, strict I-decrease of every entry, and the identities
/// `d² = 0`, `D1 d = 0`, `d D2 = 0`, `dU − Ud = D2 D1` as exact `Λ`-matrix
/// equations.
pub fn validate(s: &SOComplex) -> ValidationReport {
    let mut violations = Vec::new();
    for id in s.module().duplicate_ids() {
        violations.push(Violation {
            axiom: AXIOM_UNIQUE_IDS.into(),
            location: id.clone(),
            detail: "generator id occurs more than once".into(),
        });
    }

    let mut homog = Vec::new();
    let mut levels = Vec::new();
    for (map, name) in [(s.d(), "d"), (s.u(), "U"), (s.d1(), "D1"), (s.d2(), "D2")] {
        check_map(map, name, &mut homog, &mut levels);
    }
    violations.extend(homog);
    violations.extend(levels);

    let composites = || -> Result<[(LambdaMap, &'static str); 4], crate::grmod::GrModError> {
        let dd = compose(s.d(), s.d())?;
        let d1d = compose(s.d1(), s.d())?;
        let dd2 = compose(s.d(), s.d2())?;
        let du = compose(s.d(), s.u())?;
        let ud = compose(s.u(), s.d())?;
        let d2d1 = compose(s.d2(), s.d1())?;
        let comm = du.sub(&ud)?.sub(&d2d1)?;
        Ok([(dd, AXIOM_D_SQUARED), (d1d, AXIOM_D1_D), (dd2, AXIOM_D_D2), (comm, AXIOM_DU_UD)])
    };
    match composites() {
        Ok(list) => {
            for (map, axiom) in list {
                check_zero(&map, axiom, &mut violations);
            }
        }
        Err(e) => violations.push(Violation {
            axiom: "shape".into(),
            location: s.name().into(),
            detail: e.to_string(),
        }),
    }

    ValidationReport { ok: violations.is_empty(), violations }
}
