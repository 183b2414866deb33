use ellsurf::exactalg::{factor_disc, q, qi, valuation, Field, Place, Polynomial, Rational, RationalFunction, Ring};
use ellsurf::hurwitz::{braid_move, enumerate_classes, HurwitzTuple, Perm};
use ellsurf::kodaira::{full_config, KodairaType};
use ellsurf::nslattice::mw_pairing;
use ellsurf::qseries::{eval_upper_half, laurent_quotient, theta_qf, BinaryQF, IntSeries};
use ellsurf::trisection::substitution_sides;
use ellsurf::weierstrass::{c_invariants, hesse_model, quotient_identity_sides, urst};
use num_complex::Complex64;
use proptest::prelude::*;

type P = Polynomial<Rational>;

fn poly(cs: &[i64]) -> P {
    Polynomial::from_ints(cs, 't')
}

fn small_poly() -> impl Strategy<Value = P> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|v| poly(&v))
}

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.plus(&b).times(&c), a.times(&c).plus(&b.times(&c)));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn division_with_remainder(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (qq, r) = a.div_rem(&b);
        prop_assert_eq!(qq.times(&b).plus(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn factorization_reconstructs(roots in prop::collection::vec(-5i64..=5, 0..4), e in prop::collection::vec(1u32..=3, 4), lc in 1i64..=4, quad in 1i64..=3) {
        let mut f = poly(&[lc]);
        for (r, m) in roots.iter().zip(&e) {
            f = f.times(&poly(&[-r, 1]).pow(*m));
        }
        // t² + quad is irreducible over ℚ
        f = f.times(&poly(&[quad, 0, 1]));
        let fac = factor_disc(&f);
        prop_assert_eq!(fac.reconstruct('t'), f);
        prop_assert!(fac.factors.iter().all(|(p, _)| p.is_monic()));
    }

    #[test]
    fn valuation_is_additive(a in small_poly(), b in small_poly(), c in -3i64..=3) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (fa, fb) = (RationalFunction::from_poly(a.clone()), RationalFunction::from_poly(b.clone()));
        for place in [Place::point(qi(c), 't'), Place::Infinity] {
            prop_assert_eq!(valuation(&fa.times(&fb), &place), valuation(&fa, &place) + valuation(&fb, &place));
            prop_assert_eq!(valuation(&fa.divide(&fb).unwrap(), &place), valuation(&fa, &place) - valuation(&fb, &place));
        }
    }

    #[test]
    fn c_invariant_relation(a in prop::array::uniform5(rat())) {
        let [c4, c6, d] = c_invariants(&a);
        prop_assert_eq!(c4.pow(3).minus(&c6.pow(2)), qi(1728).times(&d));
    }

    #[test]
    fn j_is_invariant(a in prop::array::uniform5(rat()), u in nonzero_rat(), r in rat(), s in rat(), t in rat()) {
        let [c4, _, d] = c_invariants(&a);
        prop_assume!(!d.is_zero());
        let b = urst(&a, &u, &r, &s, &t);
        let [c4b, _, db] = c_invariants(&b);
        prop_assert_eq!(&db * u.pow(12), d.clone());
        prop_assert_eq!(c4b.pow(3) / db, c4.pow(3) / d);
    }

    #[test]
    fn trisection_substitution(a in nonzero_rat(), t in rat(), x in rat()) {
        let (lhs, rhs) = substitution_sides(&a, &t, &x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_identity(x in rat(), y in rat(), t in rat()) {
        let (lhs, rhs) = quotient_identity_sides(&x, &y, &t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn height_pairing_is_symmetric(po in 0i64..3, qo in 0i64..3, pq in 0i64..3, i in 0u32..3, j in 0u32..3, n in 1u32..9) {
        let c = [(KodairaType::I(n.max(3)), i, j), (KodairaType::IVStar, i % 3, j % 3)];
        let swapped: Vec<_> = c.iter().map(|(k, a, b)| (*k, *b, *a)).collect();
        prop_assert_eq!(mw_pairing(1, po, qo, pq, &c), mw_pairing(1, qo, po, pq, &swapped));
    }

    #[test]
    fn theta_matches_naive_count(a in 1i64..4, b in -3i64..4, c in 1i64..5) {
        prop_assume!(4 * a * c - b * b > 0);
        let form = BinaryQF::new(a, b, c).unwrap();
        let n = 20;
        let th = theta_qf(&form, n);
        // generous box: Q(x, y) ≥ λ(x² + y²) with λ ≥ D/(4(a+c))
        let bound = (((4 * (a + c) * n) as f64) / ((4 * a * c - b * b) as f64)).sqrt() as i64 + 2;
        let mut naive = vec![0i64; n as usize + 1];
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = a * x * x + b * x * y + c * y * y;
                if v <= n {
                    naive[v as usize] += 1;
                }
            }
        }
        let got: Vec<Rational> = (0..=n).map(|k| th.coeff(k)).collect();
        prop_assert_eq!(got, naive.iter().map(|c| qi(*c)).collect::<Vec<_>>());
    }

    #[test]
    fn laurent_quotient_inverts(num in prop::collection::vec(-5i64..=5, 1..8), den in prop::collection::vec(-5i64..=5, 1..8), vn in -1i64..3, vd in 0i64..3) {
        prop_assume!(den[0] != 0);
        let (n, d) = (IntSeries::from_ints(vn, &num, 12), IntSeries::from_ints(vd, &den, 12));
        let quo = laurent_quotient(&n, &d).unwrap();
        let back = quo.mul(&d);
        for k in n.val.min(back.val)..back.prec.min(n.prec) {
            prop_assert_eq!(back.coeff(k), n.coeff(k));
        }
    }

    #[test]
    fn evaluation_is_multiplicative(x in -0.5f64..0.5, y in 0.3f64..1.5, a in prop::collection::vec(-3i64..=3, 1..6), b in prop::collection::vec(-3i64..=3, 1..6)) {
        let (sa, sb) = (IntSeries::from_ints(0, &a, 40), IntSeries::from_ints(1, &b, 41));
        let tau = Complex64::new(x, y);
        let lhs = eval_upper_half(&sa.mul(&sb), tau).unwrap().value();
        let rhs = eval_upper_half(&sa, tau).unwrap().value() * eval_upper_half(&sb, tau).unwrap().value();
        prop_assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn braid_moves_preserve_invariants(k in 0usize..12, word in prop::collection::vec((1usize..=3, any::<bool>()), 0..10)) {
        let e = enumerate_classes();
        let mut t: Vec<Perm> = e.raw[k].0.to_vec();
        for (i, inv) in word {
            t = braid_move(&t, i, inv).unwrap();
            let prod = t.iter().fold(Perm::identity(3), |acc, g| acc.compose(g));
            prop_assert!(prod.is_identity());
            let mut types: Vec<_> = t.iter().map(|p| p.cycle_type()).collect();
            types.sort();
            prop_assert_eq!(types, vec![vec![2, 1], vec![2, 1], vec![3], vec![3]]);
        }
    }

    #[test]
    fn collision_is_conjugation_invariant(k in 0usize..12, g in 0usize..6) {
        let e = enumerate_classes();
        let t: &HurwitzTuple = &e.raw[k];
        let h = &Perm::all(3)[g];
        prop_assert_eq!(t.conjugate_by(h).collide_transpositions(), t.collide_transpositions());
        prop_assert_eq!(t.conjugate_by(h).canonical(), t.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    /// Tate's algorithm sees the same fibers after a polynomial change of
    /// coordinates that keeps the model integral.
    #[test]
    fn tate_is_coordinate_invariant(r in prop::collection::vec(-2i64..=2, 0..2), s in -2i64..=2, t in -2i64..=2) {
        let m = hesse_model();
        let f = |p: P| RationalFunction::from_poly(p);
        let moved = m.transform(&f(poly(&[1])), &f(poly(&r)), &f(poly(&[s])), &f(poly(&[t])));
        let a = full_config(&m).unwrap();
        let b = full_config(&moved).unwrap();
        prop_assert_eq!(a.type_counts(), b.type_counts());
    }
}
