use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use braidrep::irreducibility::burnside_span;
use braidrep::kernel::pure_commutator_word;
use braidrep::presentation::{Letter, Mode};
use braidrep::solver::{involution_classify, LinearExpr, VarId};
use braidrep::{
    ExtensionParams, Gen, InvolutionFamily, LaurentPoly, Matrix, Presentation, RationalFunction,
    Representation, Ring, Word, Q,
};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6), 0..5)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |q| !Ring::is_zero(q))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn laurent_matrix(n: usize) -> impl Strategy<Value = Matrix<LaurentPoly>> {
    prop::collection::vec(laurent(), n * n).prop_map(move |v| Matrix::from_vec(n, n, v))
}

fn rational_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(rational(), rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v))
}

fn sigma_word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..n, prop::bool::ANY), 0..12).prop_map(|ls| {
        Word(
            ls.into_iter()
                .map(|(i, pos)| Letter::new(Gen::sigma(i), if pos { 1 } else { -1 }))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn laurent_ring_axioms(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn laurent_render_parse_round_trip(f in laurent()) {
        let back: LaurentPoly = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in laurent(), g in laurent(), t0 in nonzero_rational()) {
        let (fv, gv) = (f.eval(&t0).unwrap(), g.eval(&t0).unwrap());
        prop_assert_eq!(f.add(&g).eval(&t0).unwrap(), &fv + &gv);
        prop_assert_eq!(f.mul(&g).eval(&t0).unwrap(), &fv * &gv);
        prop_assert_eq!(LaurentPoly::one().eval(&t0).unwrap(), Q::from_i64(1));
    }

    #[test]
    fn units_are_exactly_the_invertible(f in laurent(), c in prop::sample::select(vec![1i64, -1]), k in -4i64..=4) {
        let inv = f.unit_inverse();
        prop_assert_eq!(f.is_unit(), inv.is_some());
        if let Some(g) = inv {
            prop_assert!(f.mul(&g).is_one());
        }
        let u = LaurentPoly::monomial(c, k);
        prop_assert!(u.is_unit());
        prop_assert!(u.mul(&u.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn ratfunc_normalization_idempotent(x in ratfunc()) {
        prop_assert_eq!(x.normalize(), x.clone());
        prop_assert_eq!(x.normalize().normalize(), x.normalize());
        let back: RationalFunction = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc()) {
        use braidrep::Field;
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x);
        }
    }

    #[test]
    fn matrix_product_associative(a in laurent_matrix(3), b in laurent_matrix(3), c in laurent_matrix(3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn determinant_multiplicative(a in laurent_matrix(3), b in laurent_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap().mul(&b.det().unwrap()));
    }

    #[test]
    fn rank_nullity(a in rational_matrix(3, 5)) {
        prop_assert_eq!(a.rank() + a.nullspace().dim(), 5);
        for v in &a.nullspace().basis {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Ring::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(a in rational_matrix(3, 3)) {
        if let Ok(inv) = a.inverse() {
            prop_assert!(inv.mul(&a).unwrap().is_identity());
            prop_assert!(a.mul(&inv).unwrap().is_identity());
        } else {
            prop_assert!(Ring::is_zero(&a.det().unwrap()));
        }
    }

    #[test]
    fn far_blocks_commute(b in laurent_matrix(2), c in laurent_matrix(2), n in 4usize..=7, i in 1usize..=6, j in 1usize..=6) {
        prop_assume!(i < n && j < n && i.abs_diff(j) >= 2);
        let x = Matrix::block_embed(&b, i, n).unwrap();
        let y = Matrix::block_embed(&c, j, n).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
    }

    #[test]
    fn free_reduction_idempotent_and_sound(w in sigma_word(4)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        let rep = Representation::standard(4, &LaurentPoly::t()).unwrap();
        prop_assert_eq!(rep.evaluate_word(&r).unwrap(), rep.evaluate_word(&w).unwrap());
        let back: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn singular_extension_satisfies_relations(a in laurent(), c in laurent(), n in 2usize..=5) {
        let t = LaurentPoly::t();
        let rep = Representation::singular_extension(n, &t, &ExtensionParams::new(a.clone(), c.clone()), false).unwrap();
        let pres = Presentation::build(n, Mode::Singular, false).unwrap();
        prop_assert!(rep.verify_relations(&pres).unwrap().is_empty());
        // tau block = a I + c sigma block
        let sigma = Matrix::from_rows(vec![vec![LaurentPoly::zero(), t.clone()], vec![LaurentPoly::one(), LaurentPoly::zero()]]);
        let combo = Matrix::<LaurentPoly>::scalar(2, &a).add(&sigma.scale(&c)).unwrap();
        prop_assert_eq!(ExtensionParams::new(a, c).tau_block(&t), combo);
    }

    #[test]
    fn involution_families_classify_to_themselves(id in 1u8..=5, p in rational(), q in nonzero_rational(), r in rational()) {
        let fam = InvolutionFamily::from_id(id, p, q, r).unwrap();
        let m = fam.matrix().unwrap();
        prop_assert!(m.mul(&m).unwrap().is_identity());
        let back = involution_classify(&m).unwrap();
        // family 2/3 with r = 0 and family 1 are distinct shapes, so ids agree
        prop_assert_eq!(back.id(), id);
        prop_assert_eq!(back, fam);
    }

    #[test]
    fn vsb2_families_satisfy_relations(id in 1u8..=5, p in -3i64..=3, r in laurent(), a in laurent(), c in laurent()) {
        // q = 1 always divides 1 - p^2
        let fam = InvolutionFamily::from_id(id, LaurentPoly::constant(p), LaurentPoly::one(), r).unwrap();
        let t = LaurentPoly::t();
        let rep = Representation::vsb2_extension(&t, &fam, &ExtensionParams::new(a, c), false).unwrap();
        let pres = Presentation::build(2, Mode::VirtualSingular, false).unwrap();
        prop_assert!(rep.verify_relations(&pres).unwrap().is_empty());
    }

    #[test]
    fn span_bounded_and_monotone(ms in prop::collection::vec(rational_matrix(3, 3), 1..4), extra in rational_matrix(3, 3)) {
        let s = burnside_span(&ms, 3);
        prop_assert!(s <= 9);
        let mut more = ms.clone();
        more.push(extra);
        prop_assert!(burnside_span(&more, 3) >= s);
    }

    #[test]
    fn kernel_word_stable_under_parameters(a in nonzero_rational(), c in rational(), n in 3usize..=5) {
        let t0 = Q::from_i64(2);
        prop_assume!(!Ring::is_zero(&(&a * &a - &t0 * &c * &c)));
        let rep = Representation::singular_extension(n, &t0, &ExtensionParams::new(a, c), true).unwrap();
        let w = pure_commutator_word((1, 2), (1, 3), n).unwrap();
        prop_assert!(rep.evaluate_word(&w).unwrap().is_identity());
    }

    #[test]
    fn linear_expr_stays_canonical(cs in prop::collection::vec((0usize..4, -3i64..=3), 0..8), s in -2i64..=2) {
        let mut e = LinearExpr::zero();
        for (v, c) in &cs {
            e = e.add(&LinearExpr::var(*v as VarId).scale(&RationalFunction::from_i64(*c)));
        }
        let scaled = e.scale(&RationalFunction::from_i64(s));
        for x in [&e, &scaled, &e.sub(&e)] {
            prop_assert!(x.coeffs.values().all(|c| !c.is_zero()));
        }
        let values: BTreeMap<VarId, RationalFunction> = (0..4).map(|v| (v, RationalFunction::from_i64(v as i64 + 1))).collect();
        prop_assert_eq!(
            scaled.eval(&values).unwrap(),
            e.eval(&values).unwrap().mul(&RationalFunction::from_i64(s))
        );
    }
}

mod solved {
    use super::*;
    use braidrep::irreducibility::{invariant_closure, is_irreducible, verdict_for, SpecializedRep, Status};
    use braidrep::presentation::Kind;
    use braidrep::solver::{assemble_extension, solve_linear_part, ConstraintSystem, SolutionFamily};
    use std::sync::OnceLock;

    type Solved = (SolutionFamily, ConstraintSystem);

    fn solved(n: usize) -> &'static Solved {
        static CACHE: OnceLock<Vec<Solved>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            (2..=4)
                .map(|n| {
                    let pres = Presentation::build(n, Mode::Singular, false).unwrap();
                    let known = Representation::standard(n, &LaurentPoly::t()).unwrap();
                    let taus: Vec<Gen> = (1..n).map(Gen::tau).collect();
                    let sys = assemble_extension(&pres, &known, &taus).unwrap();
                    let fam = solve_linear_part(&sys).unwrap();
                    assert!(fam.residue.is_empty());
                    (fam, sys)
                })
                .collect()
        });
        &all[n - 2]
    }

    fn free_values(fam: &SolutionFamily, vals: &[i64]) -> BTreeMap<VarId, RationalFunction> {
        let mut values = BTreeMap::new();
        for (k, &v) in fam.free.iter().enumerate() {
            values.insert(v, RationalFunction::from_i64(vals[k % vals.len()]));
        }
        values
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(25))]

        #[test]
        fn solved_bindings_satisfy_every_equation(n in 2usize..=4, vals in prop::collection::vec(-20i64..=20, 1..4), t0 in prop::sample::select(vec![-3i64, -1, 2, 5])) {
            let (fam, sys) = solved(n);
            let mut values = free_values(&fam, &vals);
            for (&v, e) in &fam.bindings {
                values.insert(v, e.eval(&values).unwrap());
            }
            for eq in &sys.equations {
                let val = eq.eval(&values).unwrap();
                prop_assert!(Ring::is_zero(&val));
                prop_assert!(Ring::is_zero(&val.eval(&Q::from_i64(t0)).unwrap()));
            }
        }

        #[test]
        fn solved_family_gives_a_representation(n in 2usize..=4, vals in prop::collection::vec(-20i64..=20, 1..4)) {
            let (fam, _) = solved(n);
            let values = free_values(&fam, &vals);
            let t = RationalFunction::t();
            let mut images: BTreeMap<Gen, Matrix<RationalFunction>> =
                Representation::standard(n, &t).unwrap().images().map(|(g, m)| (*g, m.clone())).collect();
            for i in 1..n {
                let rows = fam.image(Gen::tau(i)).unwrap();
                let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|e| e.eval(&values).unwrap()).collect()).collect());
                images.insert(Gen::tau(i), m);
            }
            let rep = Representation::from_images(n, Mode::Singular, false, "solved", t, images).unwrap();
            let pres = Presentation::build(n, Mode::Singular, false).unwrap();
            prop_assert!(rep.verify_relations(&pres).unwrap().is_empty());
        }

        #[test]
        fn involution_classification_recovers_family(id in 1u8..=5, p in rational(), q in nonzero_rational(), r in rational()) {
            let fam = InvolutionFamily::from_id(id, p, q, r).unwrap();
            prop_assert_eq!(involution_classify(&fam.matrix().unwrap()).unwrap().id(), id);
        }
    }

    fn ac_at(t0: &Q) -> impl Strategy<Value = (Q, Q)> {
        let t0 = t0.clone();
        (rational(), rational()).prop_filter("invertible tau", move |(a, c)| !Ring::is_zero(&(a * a - &t0 * c * c)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn verdict_at_t_one_follows_a_plus_c(n in 3usize..=5, (a, c) in ac_at(&Q::from_i64(1))) {
            let spec = SpecializedRep::singular_extension(n, &Q::from_i64(1), &a, &c).unwrap();
            let v = is_irreducible(&spec);
            let on_line = &a + &c == Q::from_i64(1);
            prop_assert_eq!(v.status == Status::Irreducible, !on_line);
            prop_assert_eq!(v.status == Status::Irreducible, v.span_dim == n * n);
        }

        #[test]
        fn witnesses_are_invariant(n in 2usize..=4, t0 in nonzero_rational(), (a, c) in ac_at(&Q::from_i64(1))) {
            prop_assume!(!Ring::is_zero(&(&a * &a - &t0 * &c * &c)));
            let spec = SpecializedRep::singular_extension(n, &t0, &a, &c).unwrap();
            let v = is_irreducible(&spec);
            if let Some(w) = &v.witness {
                prop_assert!(w.dim() > 0 && w.dim() < n);
                for m in spec.images() {
                    for b in &w.basis {
                        prop_assert!(w.contains(&m.mul_vec(b).unwrap()));
                    }
                }
            }
        }

        #[test]
        fn basis_vectors_generate_everything_off_the_line(n in 3usize..=5, (a, c) in ac_at(&Q::from_i64(1)), i in 0usize..5) {
            prop_assume!(i < n && &a + &c != Q::from_i64(1));
            let spec = SpecializedRep::singular_extension(n, &Q::from_i64(1), &a, &c).unwrap();
            let mut e = vec![Q::from_i64(0); n];
            e[i] = Q::from_i64(1);
            prop_assert_eq!(invariant_closure(&spec.images(), &e).dim(), n);
        }

        #[test]
        fn irreducible_braid_part_forces_irreducible_extension(n in 3usize..=4, t0 in nonzero_rational(), (a, c) in ac_at(&Q::from_i64(2))) {
            prop_assume!(!Ring::is_zero(&(&a * &a - &t0 * &c * &c)));
            let spec = SpecializedRep::singular_extension(n, &t0, &a, &c).unwrap();
            let sigmas = spec.rep.images_of(&[Kind::Sigma]);
            let braid = verdict_for(&sigmas, n);
            let full = is_irreducible(&spec);
            prop_assert!(full.span_dim >= braid.span_dim);
            if braid.status == Status::Irreducible {
                prop_assert_eq!(full.status, Status::Irreducible);
            }
        }

        #[test]
        fn specialization_is_a_homomorphism(n in 2usize..=4, a in laurent(), c in laurent(), t0 in nonzero_rational()) {
            let rep = Representation::singular_extension(n, &LaurentPoly::t(), &ExtensionParams::new(a.clone(), c.clone()), false).unwrap();
            let spec = rep.specialize(&t0).unwrap();
            let pres = Presentation::build(n, Mode::Singular, false).unwrap();
            prop_assert!(spec.verify_relations(&pres).unwrap().is_empty());
            let direct = Representation::singular_extension(n, &t0, &ExtensionParams::new(a.eval(&t0).unwrap(), c.eval(&t0).unwrap()), false).unwrap();
            for (g, m) in direct.images() {
                prop_assert_eq!(spec.image(*g).unwrap(), m);
            }
        }
    }

    #[test]
    fn classical_reps_satisfy_braid_relations() {
        let t = LaurentPoly::t();
        for n in 2..=6 {
            let pres = Presentation::build(n, Mode::Braid, true).unwrap();
            for rep in [
                Representation::standard(n, &t).unwrap(),
                Representation::burau(n, &t).unwrap(),
                Representation::f_rep(n, &t).unwrap(),
            ] {
                assert!(rep.verify_relations(&pres).unwrap().is_empty(), "{} n={n}", rep.name);
            }
        }
    }
}
