//! The invariant `Γ(i)` of an I-graded SO-complex.
//!
//! For `i >= 1`, `Γ(i)` is the least I-degree of a cycle `α` in homological
//! degree `4i − 3` with `D1 U^j α = 0` for `j <= i − 2` and
//! `D1 U^{i−1} α ≠ 0`. For `i <= 0` it is the least `max(deg_I α, 0)` over
//! `α` in degree `4i − 3` with `dα = Σ_{j=0}^{−i} U^j D2(a_j)`, `a_{−i} = 1`.
//! An empty feasible set gives `∞`.

mod oracle;
mod solver;
mod witness;

pub use oracle::{gamma_oracle, ORACLE_MAX_SLICE};
pub use solver::{gamma, gamma_table};
pub use witness::verify_witness;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactalg::{LaurentPoly, Rational};
use crate::grmod::{BigradedModule, GrModError, QVector};
use crate::socx::SocxError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error(transparent)]
    Complex(#[from] SocxError),
    #[error(transparent)]
    Module(#[from] GrModError),
    #[error("empty range {0}..{1}")]
    EmptyRange(i64, i64),
    #[error("the scan oracle is defined for i >= 1, got {0}")]
    OracleIndex(i64),
    #[error("slice of dimension {dim} exceeds the oracle limit {limit}")]
    OracleTooLarge { dim: usize, limit: usize },
}

/// A value in `Q_{>=0} ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaValue {
    Finite(Rational),
    Infinite,
}

impl GammaValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            GammaValue::Finite(r) => Some(r),
            GammaValue::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, GammaValue::Infinite)
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaValue::Finite(r) => write!(f, "{r}"),
            GammaValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for GammaValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Certificate for a finite `Γ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaWitness {
    /// Element of the slice `4i − 3`.
    pub alpha: QVector,
    /// For `i <= 0`: the coefficients `a_j`, including `a_{−i} = 1`.
    pub a_coeffs: Vec<(i64, LaurentPoly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult {
    pub i: i64,
    pub value: GammaValue,
    pub witness: Option<GammaWitness>,
}

impl GammaResult {
    pub fn infinite(i: i64) -> Self {
        Self { i, value: GammaValue::Infinite, witness: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    pub complex: String,
    pub rows: Vec<GammaResult>,
}

impl GammaTable {
    pub fn values(&self) -> Vec<GammaValue> {
        self.rows.iter().map(|r| r.value.clone()).collect()
    }
}

/// Serializable view of a witness, with generator ids resolved.
#[derive(Serialize)]
struct AlphaTermRepr<'a> {
    gen: &'a str,
    pow: i64,
    coeff: &'a Rational,
    level: &'a Rational,
}

#[derive(Serialize)]
struct ATermRepr<'a> {
    j: i64,
    terms: &'a LaurentPoly,
}

/// JSON shape of a table; witnesses are included unless `with_witness` is
/// false.
pub struct TableJson<'a> {
    pub table: &'a GammaTable,
    pub module: &'a BigradedModule,
    pub with_witness: bool,
}

struct RowJson<'a> {
    row: &'a GammaResult,
    module: &'a BigradedModule,
    with_witness: bool,
}

struct WitnessJson<'a> {
    w: &'a GammaWitness,
    module: &'a BigradedModule,
}

impl Serialize for WitnessJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let slice = &self.w.alpha.slice;
        let alpha: Vec<AlphaTermRepr> = self
            .w
            .alpha
            .coords
            .iter()
            .map(|(k, c)| {
                let e = slice.elem(k);
                AlphaTermRepr {
                    gen: &self.module.generator(e.gen).id,
                    pow: e.power,
                    coeff: c,
                    level: &e.level,
                }
            })
            .collect();
        let a: Vec<ATermRepr> = self.w.a_coeffs.iter().map(|(j, p)| ATermRepr { j: *j, terms: p }).collect();
        let mut st = serializer.serialize_struct("Witness", 3)?;
        st.serialize_field("degree", &slice.degree())?;
        st.serialize_field("alpha", &alpha)?;
        if !a.is_empty() {
            st.serialize_field("a", &a)?;
        }
        st.end()
    }
}

impl Serialize for RowJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let witness = self
            .row
            .witness
            .as_ref()
            .filter(|_| self.with_witness)
            .map(|w| WitnessJson { w, module: self.module });
        let mut st = serializer.serialize_struct("Row", 3)?;
        st.serialize_field("i", &self.row.i)?;
        st.serialize_field("value", &self.row.value)?;
        if let Some(w) = witness {
            st.serialize_field("witness", &w)?;
        }
        st.end()
    }
}

impl Serialize for TableJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<RowJson> = self
            .table
            .rows
            .iter()
            .map(|row| RowJson { row, module: self.module, with_witness: self.with_witness })
            .collect();
        let mut st = serializer.serialize_struct("GammaTable", 2)?;
        st.serialize_field("complex", &self.table.complex)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// Aligned two-column text table.
pub fn render_table(table: &GammaTable) -> String {
    let width = table.rows.iter().map(|r| r.i.to_string().len()).max().unwrap_or(1).max(1);
    let mut out = format!("Γ for {}\n", table.complex);
    out.push_str(&format!("{:>width$}  Γ(i)\n", "i"));
    for r in &table.rows {
        out.push_str(&format!("{:>width$}  {}\n", r.i, r.value));
    }
    out
}

/// Human-readable witness: `coeff·x^pow·gen` terms.
pub fn render_witness(w: &GammaWitness, module: &BigradedModule) -> String {
    let terms: Vec<String> = w
        .alpha
        .coords
        .iter()
        .map(|(k, c)| {
            let e = w.alpha.slice.elem(k);
            let g = &module.generator(e.gen).id;
            match e.power {
                0 => format!("{c}·{g}"),
                p => format!("{c}·x^{p}·{g}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// The closed form for connected sums of `n` Poincaré spheres: `0` for
/// `i <= 0`, `i/120` for `0 < i <= n`, `n/120 + (i − n)·2/5` for
/// `n < i <= 2n`, `∞` beyond.
pub fn closed_form_yn(n: i64, i: i64) -> GammaValue {
    let q = |a: i64, b: i64| Rational::new(a, b).expect("nonzero denominator");
    if i <= 0 {
        GammaValue::Finite(Rational::zero())
    } else if i <= n {
        GammaValue::Finite(q(i, 120))
    } else if i <= 2 * n {
        GammaValue::Finite(q(n, 120) + q(2 * (i - n), 5))
    } else {
        GammaValue::Infinite
    }
}
