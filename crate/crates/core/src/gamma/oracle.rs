use std::sync::Arc;

use crate::exactalg::Rational;
use crate::grmod::dense::{dense_kernel, dense_mul_vec, dense_rank};
use crate::grmod::{compose, restrict_to_slice, slice_basis, LambdaMap, QVector, SparseVec};
use crate::socx::SOComplex;

use super::{GammaError, GammaResult, GammaValue, GammaWitness};

/// Largest slice the scan oracle will attempt.
pub const ORACLE_MAX_SLICE: usize = 200;

/// Brute-force `Γ(i)` for `i >= 1`: for each I-level `r` in ascending
/// order, restrict to the basis elements of level `<= r` and decide by two
/// dense rank computations whether some cycle there satisfies the
/// conditions. The first such `r` is the answer.
///
/// The maps `D1 U^j` are formed by composing `Λ`-maps before restricting,
/// and the elimination is the dense reference in [`crate::grmod::dense`].
pub fn gamma_oracle(s: &SOComplex, i: i64) -> Result<GammaResult, GammaError> {
    if i < 1 {
        return Err(GammaError::OracleIndex(i));
    }
    s.ensure_valid()?;
    let k = 4 * i - 3;
    let basis = Arc::new(slice_basis(s.module(), k));
    let n = basis.len();
    if n > ORACLE_MAX_SLICE {
        return Err(GammaError::OracleTooLarge { dim: n, limit: ORACLE_MAX_SLICE });
    }

    let d = restrict_to_slice(s.d(), k)?.to_dense();
    let mut conditions: Vec<Vec<Rational>> = Vec::new();
    let mut d1_u: LambdaMap = s.d1().clone();
    for j in 0..i {
        if j > 0 {
            d1_u = compose(&d1_u, s.u())?;
        }
        let rows = restrict_to_slice(&d1_u, k)?.to_dense();
        if j < i - 1 {
            conditions.extend(rows);
        } else {
            let last = rows.into_iter().next().unwrap_or_else(|| vec![Rational::zero(); n]);
            let mut system = d.clone();
            system.extend(conditions.iter().cloned());
            return Ok(scan(&basis, &system, &last, i));
        }
    }
    unreachable!("loop returns at j = i - 1")
}

fn scan(
    basis: &Arc<crate::grmod::SliceBasis>,
    system: &[Vec<Rational>],
    last: &[Rational],
    i: i64,
) -> GammaResult {
    for r in basis.distinct_levels() {
        let cols = basis.prefix_len(&r);
        let sub: Vec<Vec<Rational>> = system.iter().map(|row| row[..cols].to_vec()).collect();
        let mut with_last = sub.clone();
        with_last.push(last[..cols].to_vec());
        if dense_rank(&with_last, cols) == dense_rank(&sub, cols) {
            continue;
        }
        let v = dense_kernel(&sub, cols)
            .into_iter()
            .find(|v| !dense_mul_vec(&[last[..cols].to_vec()], v)[0].is_zero())
            .expect("rank jump gives a kernel vector off the last condition");
        let coords = SparseVec::from_dense(&v);
        return GammaResult {
            i,
            value: GammaValue::Finite(r),
            witness: Some(GammaWitness { alpha: QVector::new(basis.clone(), coords), a_coeffs: Vec::new() }),
        };
    }
    GammaResult::infinite(i)
}
