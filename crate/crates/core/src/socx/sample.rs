//! Random valid SO-complexes and grading-preserving transformations, used to
//! exercise the Γ solver beyond the connected sums of `Σ(2,3,5)`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactalg::{LaurentPoly, Rational};
use crate::grmod::{compose, BigradedModule, Generator, LambdaMap};

use super::{tensor, SOComplex, SocxError};

/// A level for a generator of grading `gr`. Writing `λ = iota − gr/8`, a
/// `U`-entry `g → h` is admissible iff `λ_h < λ_g + 1/2` and a `D1`-entry
/// iff `λ_g > −1/8`; drawing `λ` from a window narrower than `1/2` makes
/// long `U`-chains (and hence finite `Γ(i)` for larger `i`) common.
fn random_level<R: Rng>(rng: &mut R, gr: i64) -> Rational {
    Rational::new(15 * gr + rng.gen_range(-30..=45), 120).expect("nonzero denominator")
}

fn random_coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-6..=6);
    }
    Rational::from(c)
}

/// A complex with `d = 0`, `D2 = 0` and random `U`, `D1`, all
/// homogeneous and strictly I-decreasing. Such data satisfies every
/// identity automatically. Gradings are drawn from `1 mod 4` so that `U`
/// and `D1` have room to be nonzero.
pub fn random_base<R: Rng>(rng: &mut R, rank: usize, prefix: &str) -> SOComplex {
    let gens: Vec<Generator> = (0..rank)
        .map(|i| {
            let gr = 1 + 4 * rng.gen_range(-3..=3);
            Generator::new(format!("{prefix}{i}"), gr, random_level(rng, gr))
        })
        .collect();
    let mut u = BTreeMap::new();
    let mut d1 = BTreeMap::new();
    for (g, a) in gens.iter().enumerate() {
        for (h, b) in gens.iter().enumerate() {
            let diff = a.gr - 4 - b.gr;
            if diff.rem_euclid(8) != 0 || !rng.gen_bool(0.6) {
                continue;
            }
            let p = diff / 8;
            if &b.iota + Rational::from(p) < a.iota {
                u.insert((g, h), LaurentPoly::monomial(random_coeff(rng), p));
            }
        }
        if (a.gr - 1).rem_euclid(8) == 0 && rng.gen_bool(0.8) {
            let p = (a.gr - 1) / 8;
            if Rational::from(p) < a.iota {
                d1.insert(g, LaurentPoly::monomial(random_coeff(rng), p));
            }
        }
    }
    let module = BigradedModule::new(gens).expect("distinct ids");
    SOComplex::from_entries(format!("base-{prefix}"), module, BTreeMap::new(), u, d1, BTreeMap::new())
}

fn identity(module: &std::sync::Arc<BigradedModule>) -> LambdaMap {
    let entries = (0..module.rank()).map(|g| ((g, g), LaurentPoly::one())).collect();
    LambdaMap::new_unchecked(module.clone(), module.clone(), 0, entries)
}

/// Conjugates by a random filtered automorphism `P = 1 + N`, where `N` is
/// homogeneous of degree 0 and strictly lowers the I-level:
/// `d' = P d P⁻¹`, `U' = P U P⁻¹`, `D1' = D1 P⁻¹`, `D2' = P D2`.
pub fn conjugate<R: Rng>(rng: &mut R, s: &SOComplex) -> Result<SOComplex, SocxError> {
    let m = s.module().clone();
    let mut nil = BTreeMap::new();
    for (g, a) in m.generators().iter().enumerate() {
        for (h, b) in m.generators().iter().enumerate() {
            let diff = a.gr - b.gr;
            if diff.rem_euclid(8) != 0 || !rng.gen_bool(0.5) {
                continue;
            }
            let p = diff / 8;
            if &b.iota + Rational::from(p) < a.iota {
                nil.insert((g, h), LaurentPoly::monomial(random_coeff(rng), p));
            }
        }
    }
    let n = LambdaMap::new(m.clone(), m.clone(), 0, nil)?;
    let id = identity(&m);
    let p = id.add(&n)?;
    // N is nilpotent of index at most rank on every slice.
    let mut pinv = id.clone();
    let mut term = id.clone();
    let neg_n = n.neg();
    for _ in 0..m.rank() {
        term = compose(&neg_n, &term)?;
        if term.is_zero() {
            break;
        }
        pinv = pinv.add(&term)?;
    }
    let d = compose(&p, &compose(s.d(), &pinv)?)?;
    let u = compose(&p, &compose(s.u(), &pinv)?)?;
    let d1 = compose(s.d1(), &pinv)?;
    let d2 = compose(&p, s.d2())?;
    SOComplex::from_maps(format!("{}^P", s.name()), m, d, u, d1, d2)
}

/// Replaces every generator `g` by `x^{s_g}·g`: `gr += 8 s_g`,
/// `iota += s_g`, and each entry `g → h` is multiplied by `x^{s_g − s_h}`.
pub fn regrade(s: &SOComplex, shifts: &[i64]) -> SOComplex {
    assert_eq!(shifts.len(), s.rank(), "one shift per generator");
    let gens = s
        .module()
        .generators()
        .iter()
        .zip(shifts)
        .map(|(g, &k)| Generator::new(g.id.clone(), g.gr + 8 * k, &g.iota + Rational::from(k)))
        .collect();
    let module = BigradedModule::new_unchecked(gens);
    let table = |map: &LambdaMap| {
        map.entries().map(|(g, h, p)| ((g, h), p.shift(shifts[g] - shifts[h]))).collect::<BTreeMap<_, _>>()
    };
    let d1 = s.d1().entries().map(|(g, _, p)| (g, p.shift(shifts[g]))).collect();
    let d2 = s.d2().entries().map(|(_, h, p)| (h, p.shift(-shifts[h]))).collect();
    SOComplex::from_entries(format!("{}~", s.name()), module, table(s.d()), table(s.u()), d1, d2)
}

pub fn random_regrade<R: Rng>(rng: &mut R, s: &SOComplex, spread: i64) -> SOComplex {
    let shifts: Vec<i64> = (0..s.rank()).map(|_| rng.gen_range(-spread..=spread)).collect();
    regrade(s, &shifts)
}

/// A random valid complex of rank at most `max_rank` (which must be at
/// least 1): either a base complex, or a product of two base complexes,
/// scrambled by a filtered change of basis and a regrading.
pub fn random_complex<R: Rng>(rng: &mut R, max_rank: usize) -> Result<SOComplex, SocxError> {
    assert!(max_rank >= 1);
    let shapes: Vec<(usize, usize)> = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)]
        .into_iter()
        .filter(|&(a, b)| 2 * a * b + a + b <= max_rank)
        .collect();
    let base = if shapes.is_empty() || rng.gen_bool(0.2) {
        let r = rng.gen_range(1..=max_rank.min(6));
        random_base(rng, r, "g")
    } else {
        let &(ra, rb) = shapes.choose(rng).expect("nonempty");
        let a = random_base(rng, ra, "a");
        let b = random_base(rng, rb, "b");
        tensor(&a, &b)?
    };
    let scrambled = conjugate(rng, &base)?;
    Ok(random_regrade(rng, &scrambled, 2).with_name("random"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_complexes_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let s = random_complex(&mut rng, 12).unwrap();
            assert!(s.rank() <= 12);
            assert!(s.validation().ok, "{}", s.validation());
        }
    }

    #[test]
    fn regrade_round_trip() {
        let y2 = crate::socx::build_yn(2).unwrap();
        let shifts: Vec<i64> = (0..12).map(|i| (i % 5) - 2).collect();
        let back: Vec<i64> = shifts.iter().map(|s| -s).collect();
        let r = regrade(&y2, &shifts);
        assert!(r.validation().ok);
        let rr = regrade(&r, &back);
        assert_eq!(super::super::json::to_json(&rr.with_name("Y_2")), super::super::json::to_json(&y2));
    }
}
