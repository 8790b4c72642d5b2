use std::collections::BTreeMap;

use crate::exactalg::Rational;
use crate::grmod::{restrict_to_slice, slice_basis, SparseVec};
use crate::socx::SOComplex;

use super::{GammaResult, GammaValue};

/// Re-checks a finite result's witness against the defining conditions,
/// using only fresh slice restrictions of `d`, `U`, `D1`, `D2`.
pub fn verify_witness(s: &SOComplex, r: &GammaResult) -> Result<(), String> {
    let value = match &r.value {
        GammaValue::Infinite => {
            return match r.witness {
                None => Ok(()),
                Some(_) => Err("infinite value carries a witness".into()),
            }
        }
        GammaValue::Finite(v) => v,
    };
    let w = r.witness.as_ref().ok_or("finite value without witness")?;
    let k = 4 * r.i - 3;
    let alpha = &w.alpha;
    if alpha.slice.degree() != k || *alpha.slice != slice_basis(s.module(), k) {
        return Err(format!("witness does not live in slice {k}"));
    }
    let err = |e: crate::grmod::GrModError| e.to_string();
    let dalpha = restrict_to_slice(s.d(), k).map_err(err)?.mul_vec(&alpha.coords);

    if r.i >= 1 {
        if !dalpha.is_zero() {
            return Err("witness is not a cycle".into());
        }
        let mut v = alpha.coords.clone();
        for j in 0..r.i {
            if j > 0 {
                v = restrict_to_slice(s.u(), k - 4 * (j - 1)).map_err(err)?.mul_vec(&v);
            }
            let d1 = restrict_to_slice(s.d1(), k - 4 * j).map_err(err)?.mul_vec(&v);
            let want_nonzero = j == r.i - 1;
            if d1.is_zero() == want_nonzero {
                return Err(format!("D1 U^{j} α has the wrong vanishing behaviour"));
            }
        }
        if alpha.deg_i().as_ref() != Some(value) {
            return Err(format!("deg_I of witness is {:?}, not {value}", alpha.deg_i()));
        }
        return Ok(());
    }

    let top = -r.i;
    if !w.a_coeffs.iter().any(|(j, p)| *j == top && p.is_one()) {
        return Err(format!("a_{top} must be 1"));
    }
    let mut images: BTreeMap<i64, SparseVec> = BTreeMap::new();
    for (j, a) in &w.a_coeffs {
        if *j < 0 || *j > top {
            return Err(format!("coefficient index {j} outside 0..={top}"));
        }
        for (sp, c) in a.terms() {
            let mut deg = 8 * sp - 4;
            let mut v = restrict_to_slice(s.d2(), 8 * sp).map_err(err)?.mul_vec(&SparseVec::unit(0)).scale(c);
            for _ in 0..*j {
                v = restrict_to_slice(s.u(), deg).map_err(err)?.mul_vec(&v);
                deg -= 4;
            }
            let acc = images.entry(deg).or_default();
            *acc = acc.axpy(&Rational::one(), &v);
        }
    }
    for (deg, v) in &images {
        let target = if *deg == k - 1 { dalpha.clone() } else { SparseVec::new() };
        if *v != target {
            return Err(format!("Σ U^j D2(a_j) disagrees with dα in degree {deg}"));
        }
    }
    if !images.contains_key(&(k - 1)) && !dalpha.is_zero() {
        return Err("dα is nonzero but the right-hand side vanishes".into());
    }
    let objective = match alpha.deg_i() {
        Some(l) if !l.is_negative() => l,
        _ => Rational::zero(),
    };
    if &objective != value {
        return Err(format!("max(deg_I α, 0) = {objective}, not {value}"));
    }
    Ok(())
}
