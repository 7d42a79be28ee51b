//! The acceptance criteria as plain functions, shared by the golden test
//! suite and the `acceptance` harness.

use std::collections::BTreeSet;

use coxforge::blowup::{blow_up_weighted_bundle, discrepancy, solve_exceptional_weight, BlowupSpec, CIData, EquationData};
use coxforge::coxpres::{verify_certificate, well_form, well_form_matrix};
use coxforge::galefan::{
    fan_from_presentation, gale_dual, irrelevant_ideal_from_fan, lattice_basis_change, star_subdivision,
    weighted_bundle_fan,
};
use coxforge::intlattice::{minor_gcd, standardize, unimodular_row_equivalent};
use coxforge::singular::{is_terminal_cyclic, weighted_bundle_charts};
use coxforge::vgit::{
    chambers_rank2, end_behavior, model_at_chamber, two_ray_game, wall_crossing, Classification,
};
use coxforge::{CoxPresentation, EndBehavior, MonomialIdeal, QuotientSingularity, Ray2, WeightedBundleSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use super::*;

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn f2_wellformed_presentation() -> CoxPresentation {
    pres(
        &[&[1, 1, 1, 0, -2], &[0, 0, 0, 1, 1]],
        &["x", "y", "z", "t", "u"],
        &[&["x", "y", "z"], &["t", "u"]],
        false,
    )
}

fn f3_blowup_spec() -> BlowupSpec {
    // centre v != 0, z != 0; b on (x, y, z, t, s) with b_z = a_z = 3 landing on u
    BlowupSpec::new((1, 2), 2, vec![1, 2, 3, 1, 1], vec![4, 2, 3, 1, 1], "w").unwrap()
}

pub fn ac1_f2_pipeline() -> Check {
    let a = f2().weights().clone();
    let d = ok(minor_gcd(&a, 2))?;
    ensure(d == BigInt::from(2), || format!("minor gcd {d}, want 2"))?;
    ensure(minor_gcd_exhaustive(&a, 2) == BigInt::from(2), || "exhaustive minor gcd is not 2".into())?;
    let (g, n) = ok(standardize(&a))?;
    ensure(&g * &n == a, || "standardize does not reconstruct".into())?;
    let (h, cert) = ok(well_form_matrix(&n))?;
    ensure(unimodular_row_equivalent(&h, &f2_wellformed()), || format!("well-formed model\n{h}"))?;
    ensure(verify_certificate(&n, &cert, &h), || "certificate on the standardized matrix fails".into())?;
    let (h2, cert2) = ok(well_form_matrix(&a))?;
    ensure(h2 == h, || "direct and two-stage well-forming differ".into())?;
    ensure(verify_certificate(&a, &cert2, &h2), || "certificate on the input fails".into())
}

pub fn ac2_f2_gale_fan() -> Check {
    let p = f2_wellformed_presentation();
    let a = p.weights();
    let b = ok(gale_dual(a))?;
    ensure(b.len() == 5 && b.iter().all(|r| r.len() == 3), || "gale dual has the wrong shape".into())?;
    for i in 0..2 {
        for k in 0..3 {
            let s: BigInt = (0..5).map(|j| a.get(i, j) * &b[j][k]).sum();
            ensure(s == BigInt::from(0), || format!("relation row {i} fails"))?;
        }
    }
    let fan = ok(fan_from_presentation(&p))?;
    ensure(fan.rays().len() == 5, || format!("{} rays", fan.rays().len()))?;
    ensure(fan.max_cones().len() == 6, || format!("{} maximal cones", fan.max_cones().len()))?;
    let ideal = irrelevant_ideal_from_fan(&fan);
    let want = names(&p, &[&["x", "y", "z"], &["t", "u"]]);
    ensure(ideal == want, || format!("ideal {:?}", ideal.components()))
}

pub fn ac3_scroll_bundle() -> Check {
    let spec = ok(WeightedBundleSpec::new(1, 4, vec![0, 1, 2, 3, 3], vec![1, 1, 1, 1]))?;
    let (fan, p) = ok(weighted_bundle_fan(&spec))?;
    let f = scroll_f();
    ensure(unimodular_row_equivalent(p.weights(), f.weights()), || format!("weights\n{}", p.weights()))?;
    let want = MonomialIdeal::new(vec![vec![0, 1], vec![2, 3, 4, 5, 6]], 7).unwrap();
    ensure(p.irrelevant() == &want, || format!("ideal {:?}", p.irrelevant().components()))?;
    ensure(fan.max_cones().len() == 10, || format!("{} maximal cones", fan.max_cones().len()))
}

pub fn ac4_scroll_game() -> Check {
    let f = scroll_f();
    let (walls, chambers) = ok(chambers_rank2(&f))?;
    let want_walls: BTreeSet<Ray2> = [(1, 0), (0, 1), (-1, 1), (-2, 1), (-3, 1)]
        .iter()
        .map(|&(x, y)| Ray2::new(x, y))
        .collect();
    let got_walls: BTreeSet<Ray2> = walls.iter().cloned().collect();
    ensure(got_walls == want_walls && walls.len() == 5, || format!("walls {walls:?}"))?;
    let ideals: [&[&[&str]]; 4] = [
        &[&["y0", "y1"], &["x0", "x1", "x2", "x3", "x4"]],
        &[&["y0", "y1", "x0"], &["x1", "x2", "x3", "x4"]],
        &[&["y0", "y1", "x0", "x1"], &["x2", "x3", "x4"]],
        &[&["y0", "y1", "x0", "x1", "x2"], &["x3", "x4"]],
    ];
    ensure(chambers.len() == 4, || format!("{} chambers", chambers.len()))?;
    for (c, want) in chambers.iter().zip(ideals) {
        let model = ok(model_at_chamber(&f, c))?;
        ensure(model.irrelevant() == &names(&f, want), || {
            format!("chamber {} ideal {:?}", c.index, model.irrelevant().components())
        })?;
    }
    let crossings: [((i64, i64), &[i64], Classification); 3] = [
        ((0, 1), &[1, 1, -1, -2, -3, -3], Classification::AntiFlip),
        ((-1, 1), &[1, 1, 1, -1, -2, -2], Classification::AntiFlip),
        ((-2, 1), &[1, 1, 2, 1, -1, -1], Classification::Flip),
    ];
    for ((x, y), ty, class) in crossings {
        let c = ok(wall_crossing(&f, &Ray2::new(x, y)))?;
        ensure(c.type_vector == big(ty) && c.classification == class, || {
            format!("wall ({x},{y}): {:?} {:?}", c.type_vector, c.classification)
        })?;
    }
    let game = ok(two_ray_game(&f, None))?;
    ensure(game.models.len() == 4 && game.crossings.len() == 3, || "game shape".into())?;
    for e in [&game.ends.0, &game.ends.1] {
        let EndBehavior::Fibration { target_generators, .. } = e else {
            return fail(format!("end at {} is {}", e.ray(), e.kind()));
        };
        // P^1: two generators in degree one
        ensure(target_generators.len() == 2, || format!("end at {} has {target_generators:?}", e.ray()))?;
    }
    Ok(())
}

pub fn ac5_f2_ends() -> Check {
    let p = f2_wellformed_presentation();
    let vars = p.variables().to_vec();
    let render = |e: &EndBehavior| -> BTreeSet<String> {
        e.target_generators()
            .iter()
            .map(|m| coxforge::vgit::format_monomial(m, &vars))
            .collect()
    };
    let first = ok(end_behavior(&p, &Ray2::new(1, 0), None))?;
    let want: BTreeSet<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    ensure(matches!(first, EndBehavior::Fibration { .. }) && render(&first) == want, || {
        format!("(1,0): {} {:?}", first.kind(), render(&first))
    })?;
    let second = ok(end_behavior(&p, &Ray2::new(0, 1), None))?;
    let want: BTreeSet<String> = ["t", "x^2*u", "x*y*u", "y^2*u", "x*z*u", "y*z*u", "z^2*u"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    ensure(
        matches!(second, EndBehavior::DivisorialContraction { variable: 4, .. }) && render(&second) == want,
        || format!("(0,1): {} {:?}", second.kind(), render(&second)),
    )
}

pub fn ac6_f3_blowup() -> Check {
    let f3 = f3();
    let t = ok(blow_up_weighted_bundle(&f3, &f3_blowup_spec()))?;
    let a = m(&[
        &[1, 1, 0, -1, -2, -1, -1, 0],
        &[0, 0, 1, 2, 3, 1, 1, 0],
        &[3, 0, 4, 2, 0, 1, 1, -3],
    ]);
    ensure(t.weights() == &a, || format!("weights\n{}", t.weights()))?;
    let want = names(
        &t,
        &[
            &["u", "v"],
            &["x", "y", "z", "t", "s"],
            &["u", "x", "y", "t", "s"],
            &["w", "v"],
            &["w", "z"],
        ],
    );
    ensure(t.irrelevant() == &want, || format!("ideal {:?}", t.irrelevant().components()))?;

    let (wf, _) = ok(well_form(&t))?;
    let wf_model = m(&[
        &[1, 1, 0, -1, -2, -1, -1, 0],
        &[0, 0, 1, 2, 3, 1, 1, 0],
        &[1, 0, 1, 0, -1, 0, 0, -1],
    ]);
    ensure(unimodular_row_equivalent(wf.weights(), &wf_model), || format!("well-formed\n{}", wf.weights()))?;

    // star subdivision of the F3 fan at (3 r_u + 4 r_x + 2 r_y + r_t + r_s) / 3
    let fan = ok(fan_from_presentation(&f3))?;
    let coeffs = [3i64, 0, 4, 2, 0, 1, 1];
    let mut w = vec![BigInt::from(0); fan.lattice_dim()];
    for (r, &c) in fan.rays().iter().zip(&coeffs) {
        for (x, y) in w.iter_mut().zip(r) {
            *x += y * c;
        }
    }
    ensure(w.iter().all(|x| x % 3 == BigInt::from(0)), || format!("3w = {w:?} not divisible"))?;
    let w: Vec<BigInt> = w.into_iter().map(|x| x / 3).collect();
    let sub = ok(star_subdivision(&fan, &w))?;
    let t_fan = ok(fan_from_presentation(&wf))?;
    ensure(sub.cone_set() == t_fan.cone_set(), || "subdivided cones differ from the blow-up fan".into())?;
    ensure(lattice_basis_change(sub.rays(), t_fan.rays()).is_some(), || "ray sets not lattice-equivalent".into())?;
    ensure(irrelevant_ideal_from_fan(&sub) == want, || "subdivision ideal differs".into())?;

    // the same point in the coordinates where the F3 rays are the standard listing
    let listed: Vec<Vec<BigInt>> = [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [-1, -1, -1, -1, 0],
        [0, 0, 0, 0, 1],
        [3, 3, 2, 1, -1],
    ]
    .iter()
    .map(|r| big(r))
    .collect();
    let g = lattice_basis_change(fan.rays(), &listed).ok_or("no basis change to the listed rays")?;
    let image: Vec<BigInt> = (0..g.rows())
        .map(|i| (0..g.cols()).map(|j| g.get(i, j) * &w[j]).sum())
        .collect();
    ensure(image == big(&[2, 1, 2, 1, 0]), || format!("new ray {image:?}"))
}

fn orders(c1: i64, c2: i64) -> CIData {
    CIData {
        equations: vec![
            EquationData { order: Some(c1), ..Default::default() },
            EquationData { order: Some(c2), ..Default::default() },
        ],
    }
}

pub fn ac7_discrepancy() -> Check {
    let spec = f3_blowup_spec();
    // variables u v x y z t s
    let ci = CIData {
        equations: vec![
            EquationData {
                support: Some(vec![vec![1, 0, 0, 0, 1, 0, 0], vec![0, 0, 2, 0, 0, 1, 0]]),
                ..Default::default()
            },
            EquationData {
                support: Some(vec![vec![0, 0, 0, 2, 0, 0, 0], vec![0, 0, 1, 0, 1, 0, 0]]),
                ..Default::default()
            },
        ],
    };
    let third = BigRational::new(1.into(), 3.into());
    let d = ok(discrepancy(&spec, &ci))?;
    ensure(d == third, || format!("discrepancy {d}"))?;
    // the equations keep their orders 3 and 4 along the exceptional divisor
    let mut pattern = spec.clone();
    pattern.b[0] = 1;
    let a = ok(solve_exceptional_weight(&pattern, 0, &orders(3, 4), &third, 1000))?;
    ensure(a == 4, || format!("solved weight {a}"))
}

pub fn ac8_flop() -> Check {
    let p = calt_v();
    let c = ok(wall_crossing(&p, &Ray2::new(1, 0)))?;
    ensure(
        c.type_vector == big(&[1, 1, -1, -1]) && c.classification == Classification::Flop,
        || format!("type {:?} {:?}", c.type_vector, c.classification),
    )?;
    ensure(c.base_weights == big(&[1, 1, 2]), || format!("base weights {:?}", c.base_weights))?;
    let game = ok(two_ray_game(&p, None))?;
    let u = p.var_index("u").unwrap();
    ensure(
        game.ends.0 == ok(end_behavior(&p, game.ends.0.ray(), None))?
            && matches!(game.ends.0, EndBehavior::DivisorialContraction { variable, .. } if variable == u),
        || format!("far end {}", game.ends.0.kind()),
    )
}

pub fn ac9_elliptic() -> Check {
    let a = m(&[&[3, 0, -2, -6, -1, -1], &[0, 9, 8, 6, 1, 1]]);
    let (h, cert) = ok(well_form_matrix(&a))?;
    ensure(verify_certificate(&a, &cert, &h), || "certificate fails".into())?;
    let want = m(&[&[1, 3, 2, 0, 0, 0], &[0, 9, 8, 6, 1, 1]]);
    ensure(unimodular_row_equivalent(&h, &want), || format!("well-formed\n{h}"))
}

pub fn ac10_charts() -> Check {
    let f = ok(WeightedBundleSpec::new(1, 4, vec![0, 1, 2, 3, 3], vec![1, 1, 1, 1]))?;
    let charts = ok(weighted_bundle_charts(&f))?;
    ensure(charts.len() == 10 && charts.iter().all(|c| c.singularity.is_smooth()), || {
        "scroll has a singular chart".into()
    })?;
    let f3 = ok(WeightedBundleSpec::new(1, 4, vec![0, 1, 2, 1, 1], vec![2, 3, 1, 1]))?;
    let types: Vec<QuotientSingularity> = ok(weighted_bundle_charts(&f3))?
        .into_iter()
        .map(|c| c.singularity)
        .collect();
    let residues = |q: &QuotientSingularity| -> Vec<u64> { q.weights.iter().copied().filter(|&x| x != 0).collect() };
    ensure(types.iter().any(|q| q.index == 2 && residues(q) == [1, 1, 1, 1]), || {
        "no 1/2(1,1,1,1) chart".into()
    })?;
    ensure(types.iter().any(|q| q.index == 3 && residues(q) == [1, 1, 1, 2]), || {
        "no 1/3(1,1,1,2) chart".into()
    })?;
    let half = QuotientSingularity::new(2, vec![1, 1, 1]).unwrap();
    let third = QuotientSingularity::new(3, vec![1, 1, 2]).unwrap();
    ensure(ok(is_terminal_cyclic(&half))? && ok(is_terminal_cyclic(&third))?, || {
        "terminality verdicts".into()
    })
}

fn run_property<S: Strategy>(name: &str, strategy: S, check: impl Fn(&S::Value) -> Check) -> Check
where
    S::Value: std::fmt::Debug,
{
    let config = Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner
        .run(&strategy, |v| check(&v).map_err(proptest::test_runner::TestCaseError::fail))
        .map_err(|e| format!("{name}: {e}"))
}

pub fn ac11_properties() -> Check {
    run_property("standardize", full_rank_matrix(3, 6, 6), check_standardize)?;
    run_property("standard vs Smith", matrix_strategy(3, 6, 3), check_standard_vs_smith)?;
    run_property("one-row well-forming", wps_weights(), |w| check_wps(w))?;
    run_property("chamber models", rank2_presentation(), check_chambers)?;
    let standard = full_rank_matrix(3, 6, 4)
        .prop_filter("standard, n > r", |a| a.cols() > a.rows() && coxforge::intlattice::is_standard(a));
    run_property("gale round trip", standard, check_gale)?;
    run_property("fan round trip", bundle_spec(), check_fan_round_trip)?;
    run_property("minor gcd", matrix_strategy(3, 6, 9), check_minor_gcd)
}

pub type Criterion = (&'static str, fn() -> Check);

pub const CRITERIA: [Criterion; 11] = [
    ("F2 standardize and well-form", ac1_f2_pipeline),
    ("F2 Gale dual and fan round trip", ac2_f2_gale_fan),
    ("weighted bundle fan of the scroll", ac3_scroll_bundle),
    ("2-ray game of the scroll", ac4_scroll_game),
    ("F2 end behaviour and generators", ac5_f2_ends),
    ("rank-3 blow-up of F3", ac6_f3_blowup),
    ("discrepancy and exceptional weight", ac7_discrepancy),
    ("flop on the v-chart", ac8_flop),
    ("elliptic well-formed model", ac9_elliptic),
    ("chart singularities", ac10_charts),
    ("property suites", ac11_properties),
];
