use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::exactalg::LaurentPoly;
use crate::grmod::{BigradedModule, LambdaMap};

use super::validate::{validate, ValidationReport};
use super::SocxError;

/// An element of a free `Λ`-module: generator index to coefficient.
pub type Element = BTreeMap<usize, LaurentPoly>;

/// An I-graded SO-complex `(C, d, U, D1, D2)`.
///
/// `d: C → C` has degree −1, `U: C → C` degree −4, `D1: C → Λ` degree −1
/// (a generator in grading `8i+1` maps into `x^i`), and `D2: Λ → C` has
/// degree −4. `Λ` is the rank-one module from [`BigradedModule::line`].
#[derive(Clone, Debug)]
pub struct SOComplex {
    name: String,
    module: Arc<BigradedModule>,
    line: Arc<BigradedModule>,
    d: LambdaMap,
    u: LambdaMap,
    d1: LambdaMap,
    d2: LambdaMap,
    report: OnceLock<ValidationReport>,
}

fn check_shape(
    map: &LambdaMap,
    name: &'static str,
    source: &BigradedModule,
    target: &BigradedModule,
    degree: i64,
) -> Result<(), SocxError> {
    if **map.source() != *source || **map.target() != *target {
        return Err(SocxError::Shape { map: name, detail: "source or target module differs".into() });
    }
    if map.degree() != degree {
        return Err(SocxError::Shape {
            map: name,
            detail: format!("declared degree {} instead of {degree}", map.degree()),
        });
    }
    Ok(())
}

impl SOComplex {
    /// Assembles a complex from its four maps. Only the shapes are checked
    /// here; the axioms are checked by [`SOComplex::validation`].
    pub fn from_maps(
        name: impl Into<String>,
        module: Arc<BigradedModule>,
        d: LambdaMap,
        u: LambdaMap,
        d1: LambdaMap,
        d2: LambdaMap,
    ) -> Result<Self, SocxError> {
        let line = Arc::new(BigradedModule::line());
        check_shape(&d, "d", &module, &module, -1)?;
        check_shape(&u, "U", &module, &module, -4)?;
        check_shape(&d1, "D1", &module, &line, -1)?;
        check_shape(&d2, "D2", &line, &module, -4)?;
        Ok(Self {
            name: name.into(),
            d: d.rebind(module.clone(), module.clone()),
            u: u.rebind(module.clone(), module.clone()),
            d1: d1.rebind(module.clone(), line.clone()),
            d2: d2.rebind(line.clone(), module.clone()),
            module,
            line,
            report: OnceLock::new(),
        })
    }

    /// Builds from raw entry tables. `d1` is keyed by source index and `d2`
    /// by target index. Homogeneity is not enforced here so that malformed
    /// input can still be reported on.
    pub fn from_entries(
        name: impl Into<String>,
        module: BigradedModule,
        d: BTreeMap<(usize, usize), LaurentPoly>,
        u: BTreeMap<(usize, usize), LaurentPoly>,
        d1: BTreeMap<usize, LaurentPoly>,
        d2: BTreeMap<usize, LaurentPoly>,
    ) -> Self {
        let module = Arc::new(module);
        let line = Arc::new(BigradedModule::line());
        let d = LambdaMap::new_unchecked(module.clone(), module.clone(), -1, d);
        let u = LambdaMap::new_unchecked(module.clone(), module.clone(), -4, u);
        let d1 = LambdaMap::new_unchecked(
            module.clone(),
            line.clone(),
            -1,
            d1.into_iter().map(|(g, p)| ((g, 0), p)).collect(),
        );
        let d2 = LambdaMap::new_unchecked(
            line.clone(),
            module.clone(),
            -4,
            d2.into_iter().map(|(h, p)| ((0, h), p)).collect(),
        );
        Self { name: name.into(), module, line, d, u, d1, d2, report: OnceLock::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn module(&self) -> &Arc<BigradedModule> {
        &self.module
    }

    pub fn line(&self) -> &Arc<BigradedModule> {
        &self.line
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn d(&self) -> &LambdaMap {
        &self.d
    }

    pub fn u(&self) -> &LambdaMap {
        &self.u
    }

    pub fn d1(&self) -> &LambdaMap {
        &self.d1
    }

    pub fn d2(&self) -> &LambdaMap {
        &self.d2
    }

    /// Cached result of [`validate`].
    pub fn validation(&self) -> &ValidationReport {
        self.report.get_or_init(|| validate(self))
    }

    pub fn ensure_valid(&self) -> Result<(), SocxError> {
        let report = self.validation();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(SocxError::Invalid {
                name: self.name.clone(),
                count: report.violations.len(),
                first: v.to_string(),
            }),
        }
    }

    /// Number of `⊗`-separated factors in generator ids, 1 when there are no
    /// generators.
    pub fn width(&self) -> usize {
        self.module.generators().first().map_or(1, |g| g.id.split('⊗').count())
    }

    /// Applies a self-map of `C` (or `D1`) to an element.
    pub fn apply(map: &LambdaMap, v: &Element) -> Element {
        let mut out = Element::new();
        for (&g, c) in v {
            for (h, p) in map.apply_generator(g) {
                let e = out.entry(h).or_default();
                e.add_assign_ref(&(&p * c));
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn generator_element(&self, id: &str) -> Option<Element> {
        self.module.index_of(id).map(|i| Element::from([(i, LaurentPoly::one())]))
    }
}
