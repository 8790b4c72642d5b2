//! Property-based checks: algebraic axioms, the sparse elimination engine
//! against the dense reference, restriction functoriality, and invariance
//! of Γ under changes of basis and regradings.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use socx::charvar::{component_data, ComponentSignature, Irrep, LiftedComponent};
use socx::exactalg::{rat, LaurentPoly, Rational};
use socx::gamma::{gamma, gamma_oracle, gamma_table, verify_witness};
use socx::grmod::dense::{dense_kernel, dense_rank};
use socx::grmod::{compose, kernel, rank, restrict_to_slice, solve, QMatrix, SparseVec};
use socx::socx::json::{from_json, to_json};
use socx::socx::sample::{conjugate, random_base, random_complex, random_regrade};
use socx::socx::{build_yn, tensor};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(a, b)| rat(a, b).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..=40, 1usize..=40).prop_flat_map(|(r, c)| {
        // Sparse-ish entries in [−9, 9] so that ranks vary.
        let entry = prop_oneof![3 => Just(0i64), 2 => -9i64..=9];
        prop::collection::vec(prop::collection::vec(entry, c), r)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(Rational::from).collect()).collect())
    })
}

fn irrep() -> impl Strategy<Value = Irrep> {
    prop_oneof![Just(Irrep::Theta), Just(Irrep::Alpha), Just(Irrep::Beta)]
}

fn signature() -> impl Strategy<Value = ComponentSignature> {
    prop::collection::vec(irrep(), 1..8).prop_map(ComponentSignature::new)
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Rational::one());
        }
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        // Shifting is multiplication by a monomial.
        prop_assert_eq!(p.shift(3), &p * &LaurentPoly::x_pow(3));
    }

    #[test]
    fn component_data_is_additive(s in signature(), t in signature()) {
        let (ds, dt, dst) = (component_data(&s), component_data(&t), component_data(&s.concat(&t)));
        prop_assert_eq!(dst.cs_mod1, (&ds.cs_mod1 + &dt.cs_mod1).fract_pos());
        prop_assert_eq!(dst.gr_mod8, (ds.gr_mod8 + dt.gr_mod8) % 8);
        prop_assert_eq!(dst.dim_r, ds.dim_r + dt.dim_r);
    }

    #[test]
    fn lift_invariant_does_not_depend_on_l(s in signature(), l1 in -20i64..20, l2 in -20i64..20) {
        let a = LiftedComponent { signature: s.clone(), l: l1 };
        let b = LiftedComponent { signature: s, l: l2 };
        prop_assert_eq!(a.lift_invariant(), b.lift_invariant());
        prop_assert_eq!(b.cs_lift() - a.cs_lift(), Rational::from(l2 - l1));
    }
}

proptest! {
    // Random dense rational elimination is the slowest property here.
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sparse_engine_matches_dense_reference(m in small_matrix()) {
        let ncols = m[0].len();
        let a = QMatrix::from_dense(&m);
        let r = rank(&a);
        prop_assert_eq!(r, dense_rank(&m, ncols));
        let ker = kernel(&a);
        prop_assert_eq!(ker.len(), ncols - r);
        prop_assert_eq!(dense_kernel(&m, ncols).len(), ncols - r);
        for v in &ker {
            prop_assert!(a.mul_vec(v).is_zero());
        }
        // Kernel vectors end at distinct positions.
        let mut leads: Vec<usize> = ker.iter().map(|v| v.leading().unwrap()).collect();
        leads.sort_unstable();
        leads.dedup();
        prop_assert_eq!(leads.len(), ker.len());
        // A consistent right-hand side is solvable, and the solution checks.
        let x = SparseVec::from_dense(&(0..ncols).map(|i| Rational::from((i % 3) as i64 - 1)).collect::<Vec<_>>());
        let b = a.mul_vec(&x);
        let y = solve(&a, &b).expect("consistent system");
        prop_assert_eq!(a.mul_vec(&y), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn restriction_respects_composition(seed in any::<u64>(), k in -12i64..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_complex(&mut rng, 12).unwrap();
        for (g, f) in [(s.u(), s.u()), (s.d1(), s.u()), (s.d(), s.u()), (s.u(), s.d2())] {
            let gf = compose(g, f).unwrap();
            let whole = restrict_to_slice(&gf, k).unwrap();
            let parts = restrict_to_slice(g, k + f.degree()).unwrap().mul(&restrict_to_slice(f, k).unwrap());
            prop_assert_eq!(whole.to_dense(), parts.to_dense());
        }
    }

    #[test]
    fn solver_agrees_with_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_complex(&mut rng, 12).unwrap();
        let i = rng.gen_range(1..=6);
        let fast = gamma(&s, i).unwrap();
        prop_assert_eq!(&fast.value, &gamma_oracle(&s, i).unwrap().value);
        prop_assert!(verify_witness(&s, &fast).is_ok());
    }

    #[test]
    fn gamma_invariant_under_basis_change_and_regrading(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_complex(&mut rng, 12).unwrap();
        let before = gamma_table(&s, -2, 5).unwrap().values();
        let conj = conjugate(&mut rng, &s).unwrap();
        let moved = random_regrade(&mut rng, &conj, 3);
        prop_assert!(moved.validation().ok);
        let after = gamma_table(&moved, -2, 5).unwrap();
        prop_assert_eq!(after.values(), before);
        for row in &after.rows {
            prop_assert!(verify_witness(&moved, row).is_ok());
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_complex(&mut rng, 12).unwrap();
        let text = to_json(&s);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(to_json(&back), text);
        prop_assert!(back.validation().ok);
    }

    #[test]
    fn tensor_with_base_is_valid(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ra = rng.gen_range(1..=2);
        let a = random_base(&mut rng, ra, "a");
        let b = random_complex(&mut rng, 12).unwrap();
        let p = tensor(&a, &b).unwrap();
        prop_assert_eq!(2 * p.rank() + 1, (2 * a.rank() + 1) * (2 * b.rank() + 1));
        prop_assert!(p.validation().ok);
    }
}

#[test]
fn y2_regradings_preserve_gamma() {
    let y2 = build_yn(2).unwrap();
    let reference = gamma_table(&y2, -3, 6).unwrap().values();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let r = random_regrade(&mut rng, &y2, 4);
        assert_eq!(gamma_table(&r, -3, 6).unwrap().values(), reference);
    }
}
