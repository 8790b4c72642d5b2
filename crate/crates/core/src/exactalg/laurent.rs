use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// A Laurent polynomial in `x` over `Q`.
///
/// Terms are kept sorted by exponent and zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·x^pow`.
    pub fn monomial(c: Rational, pow: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(pow, c);
        }
        Self { terms }
    }

    /// `x^pow`.
    pub fn x_pow(pow: i64) -> Self {
        Self::monomial(Rational::one(), pow)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (pow, c) in terms {
            p.add_term(pow, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rational::is_one)
    }

    /// Iterates `(pow, coeff)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, pow: i64) -> Rational {
        self.terms.get(&pow).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_pow(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_pow(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, pow: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(pow).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&pow);
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (p, c) in other.terms() {
            self.add_term(p, c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&p, a)| (p, a * c)).collect() }
    }

    /// Multiplies by `x^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&p, a)| (p + s, a.clone())).collect() }
    }
}

pub fn laurent_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

pub fn laurent_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (p, a) in self.terms() {
            for (q, b) in rhs.terms() {
                out.add_term(p + q, &(a * b));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match p {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if p == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{p}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    pow: i64,
    coeff: Rational,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(pow, c)| TermRepr { pow, coeff: c.clone() }))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(LaurentPoly::from_terms(terms.into_iter().map(|t| (t.pow, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn c(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn addition_examples() {
        let a = LaurentPoly::monomial(c(6), -1);
        let b = LaurentPoly::monomial(c(-6), -1);
        assert!(laurent_add(&a, &b).is_zero());

        let sum = laurent_add(&LaurentPoly::constant(c(1)), &LaurentPoly::constant(c(4)));
        assert_eq!(sum, LaurentPoly::constant(c(5)));

        let p = LaurentPoly::from_terms([(1, c(1)), (-1, c(1))]);
        let q = LaurentPoly::x_pow(1);
        assert_eq!(laurent_add(&p, &q), LaurentPoly::from_terms([(1, c(2)), (-1, c(1))]));
    }

    #[test]
    fn multiplication_examples() {
        let p = LaurentPoly::monomial(c(6), -1);
        let q = LaurentPoly::constant(c(4));
        assert_eq!(laurent_mul(&p, &q), LaurentPoly::monomial(c(24), -1));
        assert!(laurent_mul(&p, &LaurentPoly::zero()).is_zero());
        assert!(laurent_mul(&LaurentPoly::x_pow(1), &LaurentPoly::x_pow(-1)).is_one());
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = LaurentPoly::from_terms([(2, c(3)), (2, c(-3)), (0, c(0))]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn json_shape() {
        let p = LaurentPoly::from_terms([(1, rat(1, 2).unwrap()), (-1, c(6))]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[{"pow":-1,"coeff":"6"},{"pow":1,"coeff":"1/2"}]"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(1, c(2)), (-1, c(-6)), (0, c(1))]);
        assert_eq!(p.to_string(), "2·x + 1 - 6·x^-1");
    }
}
