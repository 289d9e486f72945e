use eigenlab::ambient::{sphere_ops, to_sphere, AmbientField, SphereCoordinate};
use eigenlab::catalog::default_functions;
use eigenlab::lie::{algebra_basis, cartan_split, Group, Space};
use eigenlab::matrix::{mat_exp, CMatrix, JMatrix, Jet2};
use eigenlab::ops::{conformality, tension, Entry, ScalarField};
use eigenlab::sampling::{membership_residual, random_k_point, random_point, SampleConfig};
use eigenlab::stats::ResidualStats;
use eigenlab::verify::ClaimResult;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn jet() -> impl Strategy<Value = Jet2> {
    prop::array::uniform6(-3.0..3.0f64).prop_map(|a| Jet2::new(c(a[0], a[1]), c(a[2], a[3]), c(a[4], a[5])))
}

fn groups() -> impl Strategy<Value = Group> {
    prop_oneof![
        (2..5usize).prop_map(Group::so),
        (2..4usize).prop_map(Group::su),
        (1..4usize).prop_map(Group::u),
        (1..3usize).prop_map(Group::sp),
    ]
}

fn spaces() -> impl Strategy<Value = Space> {
    prop_oneof![
        Just(Space::SuSo { n: 3 }),
        Just(Space::SpU { n: 2 }),
        Just(Space::SoU { n: 3 }),
        Just(Space::SuSp { n: 2 }),
        Just(Space::RealGrassmannian { m: 2, n: 2 }),
        Just(Space::ComplexGrassmannian { m: 1, n: 2 }),
        Just(Space::QuaternionicGrassmannian { m: 1, n: 1 }),
    ]
}

/// `q -> q[a] q[b]`.
struct Product(Entry, Entry);

impl ScalarField for Product {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        self.0.eval_jet(q) * self.1.eval_jet(q)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jet_product_follows_taylor_rules(a in jet(), b in jet()) {
        let p = a * b;
        prop_assert!((p.v - a.v * b.v).norm() < 1e-12);
        prop_assert!((p.d1 - (a.d1 * b.v + a.v * b.d1)).norm() < 1e-12);
        prop_assert!((p.d2 - (a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2)).norm() < 1e-12);
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn exponential_inverts(entries in prop::collection::vec(-1.0..1.0f64, 18)) {
        let a = CMatrix::from_fn(3, 3, |i, j| c(entries[3 * i + j], entries[9 + 3 * i + j]));
        let a = a.scale(c(2.0 / a.norm().max(1e-12), 0.0));
        let e = mat_exp(&a)?;
        let back = mat_exp(&a.scale(c(-1.0, 0.0)))?;
        prop_assert!((&e * &back).distance(&CMatrix::identity(3)) < 1e-12);
    }

    #[test]
    fn random_points_lie_in_the_group(group in groups(), seed in any::<u64>()) {
        let p = random_point(group, &SampleConfig::new(seed, 1), 0)?;
        prop_assert!(membership_residual(group, &p) < 1e-10);
    }

    #[test]
    fn leibniz_rule_and_symmetry(seed in any::<u64>(), a in 0..9usize, b in 0..9usize) {
        let group = Group::u(3);
        let basis = algebra_basis(group)?.elements;
        let p = random_point(group, &SampleConfig::new(seed, 1), 0)?;
        let f = Entry { row: a / 3, col: a % 3 };
        let g = Entry { row: b / 3, col: b % 3 };
        let fg = Product(f, g);
        let lhs = tension(&fg, &p, &basis)?;
        let rhs = tension(&f, &p, &basis)? * g.eval(&p)
            + 2.0 * conformality(&f, &g, &p, &basis)?
            + f.eval(&p) * tension(&g, &p, &basis)?;
        prop_assert!((lhs - rhs).norm() < 1e-9);
        let swap = conformality(&f, &g, &p, &basis)? - conformality(&g, &f, &p, &basis)?;
        prop_assert!(swap.norm() < 1e-12);
    }

    #[test]
    fn jets_match_finite_differences(seed in any::<u64>(), a in 0..4usize, b in 0..4usize, k in 0..6usize) {
        let group = Group::so(4);
        let basis = algebra_basis(group)?.elements;
        let p = random_point(group, &SampleConfig::new(seed, 1), 0)?;
        let f = Product(Entry { row: a, col: b }, Entry { row: b, col: a });
        let z = &basis[k];
        let jet = f.eval_jet(&eigenlab::matrix::curve_jet(&p, z)?);
        let h = 1e-4;
        let at = |s: f64| -> Result<Complex64, eigenlab::Error> {
            Ok(f.eval(&(&p * &mat_exp(&z.scale(c(s, 0.0)))?)))
        };
        let (plus, zero, minus) = (at(h)?, at(0.0)?, at(-h)?);
        prop_assert!((jet.d1 - (plus - minus) / (2.0 * h)).norm() < 1e-5);
        prop_assert!((jet.d2 - (plus - 2.0 * zero + minus) / (h * h)).norm() < 1e-5);
    }

    #[test]
    fn catalog_functions_are_k_invariant(space in spaces(), seed in any::<u64>()) {
        let pair = cartan_split(space)?;
        let cfg = SampleConfig::new(seed, 1);
        let p = random_point(pair.group(), &cfg, 0)?;
        let k = random_k_point(&pair, &cfg, 1)?;
        for f in default_functions(space, &cfg)?.iter().take(4) {
            let v = f.eval(&p);
            prop_assert!((f.eval(&(&p * &k)) - v).norm() <= 1e-10 * v.norm().max(1.0));
        }
    }

    #[test]
    fn sphere_coordinates_are_eigen_everywhere(parts in prop::collection::vec(-5.0..5.0f64, 6), j in 1..=3usize) {
        let x: Vec<Complex64> = parts.chunks(2).map(|p| c(p[0], p[1])).collect();
        let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        let (x, _) = to_sphere(&x.iter().map(|z| z / norm).collect::<Vec<_>>())?;
        let f = SphereCoordinate { j };
        let v = f.eval(&x);
        let (tau, kappa) = sphere_ops(&f, &x)?;
        prop_assert!((tau + 5.0 * v).norm() < 1e-10);
        prop_assert!((kappa + v * v).norm() < 1e-10);
    }

    #[test]
    fn stats_pass_exactly_when_max_is_within_tolerance(
        residuals in prop::collection::vec(prop_oneof![0.0..1.0f64, Just(f64::NAN)], 1..20),
        tol in 0.0..1.0f64,
    ) {
        let mut stats = ResidualStats::default();
        for &r in &residuals {
            stats.push(r);
        }
        let expected = residuals.iter().all(|&r| r <= tol);
        prop_assert_eq!(stats.passes(tol), expected);
    }

    #[test]
    fn report_lines_round_trip(max in any::<f64>(), mean in any::<f64>(), measured in prop::option::of(any::<f64>())) {
        let claim = ClaimResult {
            id: "q.lambda".into(),
            space: "S".into(),
            params: "n=1".into(),
            samples: 1,
            max_residual: max,
            mean_residual: mean,
            expected: Some(-4.0),
            measured,
            tol: 1e-8,
            pass: max <= 1e-8,
            note: None,
        };
        let back: ClaimResult = serde_json::from_str(&serde_json::to_string(&claim).unwrap()).unwrap();
        let same = |a: f64, b: f64| a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan());
        prop_assert!(same(back.max_residual, max) && same(back.mean_residual, mean));
        prop_assert_eq!(back.measured.is_some(), measured.is_some());
        if let (Some(a), Some(b)) = (back.measured, measured) {
            prop_assert!(same(a, b));
        }
    }
}
