use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactalg::{LaurentPoly, Rational};
use crate::grmod::{compose, BigradedModule, Generator, LambdaMap};

use super::{SOComplex, SocxError};

/// `(C̃, d̃, χ)` with `C̃ = C ⊕ C_(3,0) ⊕ Λ_(0,0)`.
#[derive(Clone, Debug)]
pub struct TildeComplex {
    pub module: Arc<BigradedModule>,
    pub dtilde: LambdaMap,
    pub chi: LambdaMap,
}

/// Prefix for ids of the shifted copy `C_(3,0)`.
pub const CHI_PREFIX: &str = "χ:";

impl TildeComplex {
    /// Re-verifies `d̃² = 0`, `χ² = 0`, `d̃χ + χd̃ = 0` and the strict
    /// I-decrease of `d̃`. Returns one line per failure.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut zero = |m: Result<LambdaMap, _>, what: &str| match m {
            Ok(m) if m.is_zero() => {}
            Ok(m) => out.push(format!("{what}: {} nonzero entries", m.num_entries())),
            Err(e) => out.push(format!("{what}: {e}")),
        };
        zero(compose(&self.dtilde, &self.dtilde), "d̃²=0");
        zero(compose(&self.chi, &self.chi), "χ²=0");
        zero(
            compose(&self.dtilde, &self.chi)
                .and_then(|a| compose(&self.chi, &self.dtilde).and_then(|b| a.add(&b))),
            "d̃χ+χd̃=0",
        );
        let bad = self.dtilde.level_violations().len();
        if bad > 0 {
            out.push(format!("d̃ does not lower the I-level on {bad} term(s)"));
        }
        let bad = self.dtilde.homogeneity_violations().len() + self.chi.homogeneity_violations().len();
        if bad > 0 {
            out.push(format!("{bad} inhomogeneous term(s)"));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }
}

/// Assembles `d̃ = [[d,0,0],[U,−d,D2],[D1,0,0]]` and `χ(a,b,r) = (0,a,0)`.
pub fn assemble_tilde(s: &SOComplex) -> Result<TildeComplex, SocxError> {
    s.ensure_valid()?;
    let r = s.rank();
    let mut gens: Vec<Generator> = s.module().generators().to_vec();
    gens.extend(
        s.module()
            .generators()
            .iter()
            .map(|g| Generator::new(format!("{CHI_PREFIX}{}", g.id), g.gr + 3, g.iota.clone())),
    );
    gens.push(Generator::new("1", 0, Rational::zero()));
    let module = Arc::new(BigradedModule::new_unchecked(gens));
    let unit = 2 * r;

    let mut dt: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    for (g, h, p) in s.d().entries() {
        dt.insert((g, h), p.clone());
        dt.insert((r + g, r + h), -p);
    }
    for (g, h, p) in s.u().entries() {
        dt.insert((g, r + h), p.clone());
    }
    for (g, _, p) in s.d1().entries() {
        dt.insert((g, unit), p.clone());
    }
    for (_, h, p) in s.d2().entries() {
        dt.insert((unit, r + h), p.clone());
    }
    let chi: BTreeMap<(usize, usize), LaurentPoly> =
        (0..r).map(|g| ((g, r + g), LaurentPoly::one())).collect();

    Ok(TildeComplex {
        dtilde: LambdaMap::new(module.clone(), module.clone(), -1, dt)?,
        chi: LambdaMap::new(module.clone(), module.clone(), 3, chi)?,
        module,
    })
}

/// The tensor product at tilde level: `d̃⊗ = d̃⊗1 + ε⊗d̃′`,
/// `χ⊗ = χ⊗1 + ε⊗χ′`, with `ε = (−1)^gr` on the left factor.
pub fn tilde_tensor(a: &TildeComplex, b: &TildeComplex) -> Result<TildeComplex, SocxError> {
    let (ra, rb) = (a.rank(), b.rank());
    let idx = |i: usize, j: usize| i * rb + j;
    let mut gens = Vec::with_capacity(ra * rb);
    for x in a.module.generators() {
        for y in b.module.generators() {
            gens.push(Generator::new(format!("[{}]⊗[{}]", x.id, y.id), x.gr + y.gr, &x.iota + &y.iota));
        }
    }
    let module = Arc::new(BigradedModule::new_unchecked(gens));

    let product = |fa: &LambdaMap, fb: &LambdaMap| {
        let mut t: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (i, i2, p) in fa.entries() {
            for j in 0..rb {
                t.entry((idx(i, j), idx(i2, j))).or_default().add_assign_ref(p);
            }
        }
        for i in 0..ra {
            let odd = a.module.generator(i).gr.rem_euclid(2) == 1;
            for (j, j2, p) in fb.entries() {
                let q = if odd { -p } else { p.clone() };
                t.entry((idx(i, j), idx(i, j2))).or_default().add_assign_ref(&q);
            }
        }
        t
    };

    let dt = product(&a.dtilde, &b.dtilde);
    let chi = product(&a.chi, &b.chi);
    Ok(TildeComplex {
        dtilde: LambdaMap::new(module.clone(), module.clone(), -1, dt)?,
        chi: LambdaMap::new(module.clone(), module.clone(), 3, chi)?,
        module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grmod::BigradedModule;
    use crate::socx::{build_y1, build_yn};

    #[test]
    fn y1_tilde_entries() {
        let y1 = build_y1();
        let t = assemble_tilde(&y1).unwrap();
        assert_eq!(t.rank(), 5);
        let m = &t.module;
        let at = |id: &str| m.index_of(id).unwrap();
        let entries: Vec<_> = t.dtilde.entries().map(|(g, h, p)| (g, h, p.clone())).collect();
        assert_eq!(entries.len(), 3);
        assert_eq!(t.dtilde.entry(at("β"), at("χ:α")), LaurentPoly::constant(Rational::from(4)));
        assert_eq!(t.dtilde.entry(at("α"), at("χ:β")), LaurentPoly::monomial(Rational::from(6), -1));
        assert_eq!(t.dtilde.entry(at("α"), at("1")), LaurentPoly::one());
        assert!(t.check().is_empty());
    }

    #[test]
    fn trivial_complex_tilde() {
        let empty = SOComplex::from_entries(
            "0",
            BigradedModule::new(vec![]).unwrap(),
            Default::default(),
            Default::default(),
            Default::default(),
            Default::default(),
        );
        let t = assemble_tilde(&empty).unwrap();
        assert_eq!(t.rank(), 1);
        assert!(t.dtilde.is_zero() && t.chi.is_zero());
        assert!(t.check().is_empty());
    }

    #[test]
    fn tilde_ranks_multiply() {
        let a = assemble_tilde(&build_y1()).unwrap();
        let b = assemble_tilde(&build_yn(2).unwrap()).unwrap();
        let t = tilde_tensor(&a, &b).unwrap();
        assert_eq!(t.rank(), 5 * 25);
        assert_eq!(t.rank(), 2 * build_yn(3).unwrap().rank() + 1);
        assert!(t.check().is_empty(), "{:?}", t.check());
    }
}
