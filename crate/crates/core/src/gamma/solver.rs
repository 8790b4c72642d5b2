use std::collections::HashMap;
use std::sync::Arc;

use crate::exactalg::{LaurentPoly, Rational};
use crate::grmod::{
    kernel, restrict_between, slice_basis, solve, BigradedModule, QMatrix, QVector, SliceBasis, SparseVec,
};
use crate::socx::SOComplex;

use super::{GammaError, GammaResult, GammaTable, GammaValue, GammaWitness};

/// Slices of `C` and `Λ`, built on demand.
struct Slices<'a> {
    s: &'a SOComplex,
    c: HashMap<i64, Arc<SliceBasis>>,
    line: HashMap<i64, Arc<SliceBasis>>,
}

impl<'a> Slices<'a> {
    fn new(s: &'a SOComplex) -> Self {
        Self { s, c: HashMap::new(), line: HashMap::new() }
    }

    fn c(&mut self, k: i64) -> Arc<SliceBasis> {
        let m: &BigradedModule = self.s.module();
        self.c.entry(k).or_insert_with(|| Arc::new(slice_basis(m, k))).clone()
    }

    fn line(&mut self, k: i64) -> Arc<SliceBasis> {
        let m: &BigradedModule = self.s.line();
        self.line.entry(k).or_insert_with(|| Arc::new(slice_basis(m, k))).clone()
    }

    /// `U` from slice `k` to slice `k − 4`.
    fn u(&mut self, k: i64) -> Result<QMatrix, GammaError> {
        let (src, tgt) = (self.c(k), self.c(k - 4));
        Ok(restrict_between(self.s.u(), &src, &tgt)?)
    }

    /// `D1 U^j` on slice `k` as a row vector.
    fn d1_u_power(&mut self, k: i64, j: i64) -> Result<SparseVec, GammaError> {
        let at = k - 4 * j;
        let (src, tgt) = (self.c(at), self.line(at - 1));
        let d1 = restrict_between(self.s.d1(), &src, &tgt)?;
        let Some(row) = d1.rows().first().cloned() else {
            return Ok(SparseVec::new());
        };
        // Pull the row back through U one slice at a time.
        let mut row = row;
        for step in (1..=j).rev() {
            if row.is_zero() {
                break;
            }
            let u = self.u(k - 4 * (step - 1))?;
            row = u.transpose().mul_vec(&row);
        }
        Ok(row)
    }

    /// Image of `x^s ∈ Λ` under `U^j D2`, in slice `−4 + 8s − 4j`.
    fn u_power_d2(&mut self, s: i64, j: i64) -> Result<SparseVec, GammaError> {
        let (src, tgt) = (self.line(8 * s), self.c(8 * s - 4));
        let d2 = restrict_between(self.s.d2(), &src, &tgt)?;
        let mut v = d2.mul_vec(&SparseVec::unit(0));
        for step in 0..j {
            if v.is_zero() {
                break;
            }
            let u = self.u(8 * s - 4 - 4 * step)?;
            v = u.mul_vec(&v);
        }
        Ok(v)
    }
}

/// `Γ(i)` with a witness.
///
/// For `i >= 1` this performs a single elimination: the kernel of
/// `[d; D1; D1 U; …; D1 U^{i−2}]` on slice `4i − 3` is computed in echelon
/// form with respect to the canonical slice order, so that every kernel
/// vector ends at a distinct position. The feasible cycles supported on
/// levels `<= r` are then spanned by the basis vectors ending at level
/// `<= r`, and `Γ(i)` is the least ending level among basis vectors not
/// killed by `D1 U^{i−1}`.
pub fn gamma(s: &SOComplex, i: i64) -> Result<GammaResult, GammaError> {
    s.ensure_valid()?;
    let mut slices = Slices::new(s);
    if i >= 1 {
        positive(&mut slices, i)
    } else {
        nonpositive(&mut slices, i)
    }
}

fn positive(slices: &mut Slices, i: i64) -> Result<GammaResult, GammaError> {
    let k = 4 * i - 3;
    let basis = slices.c(k);
    if basis.is_empty() {
        return Ok(GammaResult::infinite(i));
    }
    let last = slices.d1_u_power(k, i - 1)?;
    if last.is_zero() {
        return Ok(GammaResult::infinite(i));
    }
    let below = slices.c(k - 1);
    let mut system = restrict_between(slices.s.d(), &basis, &below)?;
    for j in 0..i - 1 {
        let row = slices.d1_u_power(k, j)?;
        if !row.is_zero() {
            system.push_row(row);
        }
    }
    let best = kernel(&system).into_iter().filter(|v| !v.dot(&last).is_zero()).min_by(|a, b| {
        let la = basis.level(a.leading().expect("nonzero"));
        let lb = basis.level(b.leading().expect("nonzero"));
        la.cmp(lb)
    });
    Ok(match best {
        None => GammaResult::infinite(i),
        Some(v) => {
            let level = basis.level(v.leading().expect("nonzero")).clone();
            GammaResult {
                i,
                value: GammaValue::Finite(level),
                witness: Some(GammaWitness { alpha: QVector::new(basis, v), a_coeffs: Vec::new() }),
            }
        }
    })
}

fn nonpositive(slices: &mut Slices, i: i64) -> Result<GammaResult, GammaError> {
    let k = 4 * i - 3;
    let basis = slices.c(k);
    let below = slices.c(k - 1);
    let d = restrict_between(slices.s.d(), &basis, &below)?;
    let top = -i;
    let rhs = slices.u_power_d2(0, top)?;

    // Free coefficients a_j = c_j x^{s_j}, s_j = (i + j)/2.
    let mut free: Vec<(i64, i64, SparseVec)> = Vec::new();
    for j in 0..top {
        if (i + j).rem_euclid(2) != 0 {
            continue;
        }
        let sj = (i + j) / 2;
        let w = slices.u_power_d2(sj, j)?;
        if !w.is_zero() {
            free.push((j, sj, w));
        }
    }
    let nfree = free.len();

    // Columns: the c_j first, then α in canonical order.
    let system_upto = |prefix: usize| -> QMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); below.len()];
        for (c, (_, _, w)) in free.iter().enumerate() {
            for (r, v) in w.iter() {
                cols[r].push((c, -v));
            }
        }
        for (r, row) in d.rows().iter().enumerate() {
            for (c, v) in row.iter() {
                if c < prefix {
                    cols[r].push((nfree + c, v.clone()));
                }
            }
        }
        QMatrix::from_rows(nfree + prefix, cols.into_iter().map(SparseVec::from_pairs).collect())
    };

    let mut thresholds = vec![Rational::zero()];
    thresholds.extend(basis.distinct_levels().into_iter().filter(|l| !l.is_negative() && !l.is_zero()));
    let prefix = |t: usize| basis.prefix_len(&thresholds[t]);

    let last = thresholds.len() - 1;
    if solve(&system_upto(basis.len()), &rhs).is_none() {
        return Ok(GammaResult::infinite(i));
    }
    // Feasibility is monotone in the threshold.
    let (mut lo, mut hi) = (0usize, last);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if solve(&system_upto(prefix(mid)), &rhs).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let sol = solve(&system_upto(prefix(lo)), &rhs).expect("feasible at threshold");
    let alpha = sol.select(|c| c.checked_sub(nfree));
    let mut a_coeffs: Vec<(i64, LaurentPoly)> = free
        .iter()
        .enumerate()
        .filter_map(|(c, (j, sj, _))| {
            let coeff = sol.get(c);
            (!coeff.is_zero()).then(|| (*j, LaurentPoly::monomial(coeff, *sj)))
        })
        .collect();
    a_coeffs.push((top, LaurentPoly::one()));
    Ok(GammaResult {
        i,
        value: GammaValue::Finite(thresholds[lo].clone()),
        witness: Some(GammaWitness { alpha: QVector::new(basis, alpha), a_coeffs }),
    })
}

/// One independent `Γ` evaluation per `i` in `imin..=imax`.
pub fn gamma_table(s: &SOComplex, imin: i64, imax: i64) -> Result<GammaTable, GammaError> {
    if imin > imax {
        return Err(GammaError::EmptyRange(imin, imax));
    }
    s.ensure_valid()?;
    let rows = (imin..=imax).map(|i| gamma(s, i)).collect::<Result<Vec<_>, _>>()?;
    Ok(GammaTable { complex: s.name().to_string(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::gamma::verify_witness;
    use crate::grmod::BigradedModule;
    use crate::socx::{build_y1, build_yn, ALPHA, UNDERLINE};
    use std::collections::BTreeMap;

    fn fin(a: i64, b: i64) -> GammaValue {
        GammaValue::Finite(rat(a, b).unwrap())
    }

    #[test]
    fn y1_values() {
        let y1 = build_y1();
        let t = gamma_table(&y1, -1, 3).unwrap();
        assert_eq!(t.values(), [fin(0, 1), fin(0, 1), fin(1, 120), fin(49, 120), GammaValue::Infinite]);
        for r in &t.rows {
            verify_witness(&y1, r).unwrap();
        }
    }

    #[test]
    fn y2_values_and_witness() {
        let y2 = build_yn(2).unwrap();
        let t = gamma_table(&y2, 1, 5).unwrap();
        assert_eq!(t.values(), [fin(1, 120), fin(1, 60), fin(5, 12), fin(49, 60), GammaValue::Infinite]);
        let w = t.rows[1].witness.as_ref().unwrap();
        let special = y2.module().index_of(&format!("{ALPHA}{UNDERLINE}⊗{ALPHA}")).unwrap();
        let lead = w.alpha.coords.leading().unwrap();
        assert_eq!(w.alpha.slice.elem(lead).gen, special);
        for r in &t.rows {
            verify_witness(&y2, r).unwrap();
        }
    }

    #[test]
    fn trivial_complex() {
        let empty = SOComplex::from_entries(
            "0",
            BigradedModule::new(vec![]).unwrap(),
            BTreeMap::new(),
            BTreeMap::new(),
            BTreeMap::new(),
            BTreeMap::new(),
        );
        let t = gamma_table(&empty, 0, 1).unwrap();
        assert_eq!(t.values(), [fin(0, 1), GammaValue::Infinite]);
    }

    #[test]
    fn empty_range_rejected() {
        assert_eq!(gamma_table(&build_y1(), 2, 1).unwrap_err(), GammaError::EmptyRange(2, 1));
    }
}
