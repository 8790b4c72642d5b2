use std::collections::BTreeMap;

use crate::exactalg::{rat, LaurentPoly, Rational};
use crate::grmod::{BigradedModule, Generator};

use super::{tensor, Element, SOComplex, SocxError};

pub const ALPHA: &str = "α";
pub const BETA: &str = "β";
pub const THETA: &str = "Θ";
/// Combining low line, appended to a generator id to mark the `gr + 3` copy.
pub const UNDERLINE: char = '\u{332}';

/// The two irreducible generators of the `Σ(2,3,5)` complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Y1Gen {
    Alpha,
    Beta,
}

impl Y1Gen {
    pub fn id(self) -> &'static str {
        match self {
            Y1Gen::Alpha => ALPHA,
            Y1Gen::Beta => BETA,
        }
    }
}

/// The complex of `Σ(2,3,5)`: generators `α` at `(1, 1/120)` and `β` at
/// `(5, 49/120)`, `d = D2 = 0`, `D1(α) = 1`, `U(β) = 4α`, `U(α) = 6x⁻¹β`.
pub fn build_y1() -> SOComplex {
    let module = BigradedModule::new(vec![
        Generator::new(ALPHA, 1, rat(1, 120).expect("nonzero")),
        Generator::new(BETA, 5, rat(49, 120).expect("nonzero")),
    ])
    .expect("distinct ids");
    let c = |n: i64| Rational::from(n);
    let u =
        BTreeMap::from([((0, 1), LaurentPoly::monomial(c(6), -1)), ((1, 0), LaurentPoly::constant(c(4)))]);
    let d1 = BTreeMap::from([(0, LaurentPoly::one())]);
    SOComplex::from_entries("Y_1", module, BTreeMap::new(), u, d1, BTreeMap::new())
}

/// Rank of the complex of `Y_n`: `r(1) = 2`, `r(n) = 5 r(n-1) + 2`.
pub fn rank_yn(n: u32) -> usize {
    (1..n).fold(2, |r, _| 5 * r + 2)
}

/// The complex of the `n`-fold connected sum `Y_n`, as
/// `C(1) ⊗ C(n-1) ⊕ C̲(1) ⊗ C(n-1) ⊕ C(1) ⊕ C(n-1)`.
pub fn build_yn(n: u32) -> Result<SOComplex, SocxError> {
    if n == 0 {
        return Err(SocxError::Argument("n must be at least 1".into()));
    }
    let y1 = build_y1();
    let mut acc = build_y1();
    for k in 2..=n {
        acc = tensor(&y1, &acc)?.with_name(format!("Y_{k}"));
    }
    Ok(acc)
}

/// `F_0(σ) = 1` and `F_k(σ) = D1 U^{k-1}(σ)` on the `Σ(2,3,5)` complex.
pub fn fk(k: u32, sigma: Y1Gen) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::one();
    }
    let y1 = build_y1();
    let mut v: Element = y1.generator_element(sigma.id()).expect("generator of Y_1");
    for _ in 1..k {
        v = SOComplex::apply(y1.u(), &v);
    }
    SOComplex::apply(y1.d1(), &v).remove(&0).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::socx::assemble_tilde;

    #[test]
    fn y1_data() {
        let y1 = build_y1();
        assert_eq!(y1.rank(), 2);
        assert!(y1.validation().ok, "{}", y1.validation());
        let beta = y1.generator_element(BETA).unwrap();
        let d1u = SOComplex::apply(y1.d1(), &SOComplex::apply(y1.u(), &beta));
        assert_eq!(d1u[&0], LaurentPoly::constant(Rational::from(4)));
    }

    #[test]
    fn rank_recursion() {
        let ranks: Vec<_> = (1..=5).map(rank_yn).collect();
        assert_eq!(ranks, [2, 12, 62, 312, 1562]);
        assert_eq!(build_yn(2).unwrap().rank(), 12);
        assert_eq!(build_yn(3).unwrap().rank(), 62);
    }

    #[test]
    fn build_yn_rejects_zero() {
        assert!(matches!(build_yn(0), Err(SocxError::Argument(_))));
    }

    #[test]
    fn fk_values() {
        let c = |n: i64| Rational::from(n);
        assert_eq!(fk(0, Y1Gen::Alpha), LaurentPoly::one());
        assert_eq!(fk(1, Y1Gen::Alpha), LaurentPoly::one());
        assert_eq!(fk(2, Y1Gen::Beta), LaurentPoly::constant(c(4)));
        assert!(fk(2, Y1Gen::Alpha).is_zero());
        assert_eq!(fk(3, Y1Gen::Alpha), LaurentPoly::monomial(c(24), -1));
        assert!(fk(1, Y1Gen::Beta).is_zero());
    }

    #[test]
    fn y3_special_generator_bidegree() {
        let y3 = build_yn(3).unwrap();
        let id = format!("{THETA}⊗{ALPHA}{UNDERLINE}⊗{ALPHA}");
        let g = &y3.module().generators()[y3.module().index_of(&id).unwrap()];
        assert_eq!(g.gr, 5);
        assert_eq!(g.iota, rat(2, 120).unwrap());
    }

    #[test]
    fn yn_validates_and_tilde_closes() {
        for n in 1..=3 {
            let y = build_yn(n).unwrap();
            assert!(y.validation().ok, "Y_{n}: {}", y.validation());
            let t = assemble_tilde(&y).unwrap();
            assert!(t.check().is_empty());
        }
    }
}
