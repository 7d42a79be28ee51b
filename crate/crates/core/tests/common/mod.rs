//! Brute-force oracles and shared property checks.
//!
//! Everything here is deliberately naive: Leibniz determinants, exhaustive
//! minors, subset enumeration for semistability and transversals. The
//! library's fast paths are compared against these.

#![allow(dead_code)]

pub mod criteria;

use std::collections::BTreeSet;

use coxforge::coxpres::{well_form_matrix, wps_well_form, verify_certificate};
use coxforge::galefan::{
    fan_from_presentation, gale_dual, irrelevant_ideal_from_fan, weighted_bundle_fan, weights_from_rays,
};
use coxforge::intlattice::{
    is_standard, minor_gcd, rank, smith_invariants, standardize, unimodular_row_equivalent,
};
use coxforge::vgit::{chambers_rank2, model_at_chamber};
use coxforge::{CoxPresentation, IntMatrix, MonomialIdeal, Ray2, WeightedBundleSpec};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn pres(rows: &[&[i64]], vars: &[&str], comps: &[&[&str]], stacky: bool) -> CoxPresentation {
    let idx = |s: &str| vars.iter().position(|v| *v == s).unwrap();
    let comps: Vec<Vec<usize>> = comps.iter().map(|c| c.iter().map(|s| idx(s)).collect()).collect();
    CoxPresentation::new(
        vars.iter().map(|s| s.to_string()).collect(),
        m(rows),
        MonomialIdeal::new(comps, vars.len()).unwrap(),
        stacky,
    )
    .unwrap()
}

pub fn f2() -> CoxPresentation {
    pres(
        &[&[1, 1, 1, 2, 0], &[0, 0, 0, 6, 2]],
        &["x", "y", "z", "t", "u"],
        &[&["x", "y", "z"], &["t", "u"]],
        true,
    )
}

pub fn f2_wellformed() -> IntMatrix {
    m(&[&[1, 1, 1, 0, -2], &[0, 0, 0, 1, 1]])
}

pub fn scroll_f() -> CoxPresentation {
    pres(
        &[&[1, 1, 0, -1, -2, -3, -3], &[0, 0, 1, 1, 1, 1, 1]],
        &["y0", "y1", "x0", "x1", "x2", "x3", "x4"],
        &[&["y0", "y1"], &["x0", "x1", "x2", "x3", "x4"]],
        false,
    )
}

pub fn f3() -> CoxPresentation {
    pres(
        &[&[1, 1, 0, -1, -2, -1, -1], &[0, 0, 1, 2, 3, 1, 1]],
        &["u", "v", "x", "y", "z", "t", "s"],
        &[&["u", "v"], &["x", "y", "z", "t", "s"]],
        false,
    )
}

pub fn calt_v() -> CoxPresentation {
    pres(
        &[&[0, 1, 1, 1, 2, 3, 0], &[1, 1, 0, 0, 0, -1, -1]],
        &["u", "x", "t", "s", "y", "z", "w"],
        &[&["u", "x", "t", "s", "y"], &["z", "w"]],
        false,
    )
}

pub fn names(p: &CoxPresentation, comps: &[&[&str]]) -> MonomialIdeal {
    let c: Vec<Vec<usize>> = comps
        .iter()
        .map(|c| c.iter().map(|s| p.var_index(s).unwrap()).collect())
        .collect();
    MonomialIdeal::new(c, p.num_vars()).unwrap()
}

/// Leibniz expansion.
pub fn det_leibniz(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut total = BigInt::zero();
    for perm in (0..n).permutations(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::one();
        for (i, &j) in perm.iter().enumerate() {
            term *= &rows[i][j];
        }
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// gcd of all `r x r` minors, by listing every column subset.
pub fn minor_gcd_exhaustive(a: &IntMatrix, r: usize) -> BigInt {
    let rows: Vec<usize> = (0..a.rows()).collect();
    let mut g = BigInt::zero();
    for rs in rows.iter().copied().combinations(r) {
        for cs in (0..a.cols()).combinations(r) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                .collect();
            g = g.gcd(&det_leibniz(&sub));
        }
    }
    g
}

fn det2(a: &Ray2, b: &Ray2) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Whether `v` lies in the closed cone spanned by `gens`, by trying every
/// single generator and every pair (Carathéodory in the plane).
pub fn in_cone2(gens: &[Ray2], v: &Ray2) -> bool {
    for g in gens {
        if det2(g, v).is_zero() && (&g.0 * &v.0 + &g.1 * &v.1).is_positive() {
            return true;
        }
    }
    for (a, b) in gens.iter().tuple_combinations() {
        let d = det2(a, b);
        if d.is_zero() {
            continue;
        }
        let lam = BigRational::new(det2(v, b), d.clone());
        let mu = BigRational::new(det2(a, v), d);
        if !lam.is_negative() && !mu.is_negative() {
            return true;
        }
    }
    false
}

/// Components of the irrelevant ideal for the character `chi`, from the
/// definition: a point is unstable iff `chi` is not in the cone of the
/// columns where it is nonzero.
pub fn semistable_components(cols: &[Ray2], chi: &Ray2) -> BTreeSet<Vec<usize>> {
    let n = cols.len();
    let unstable = |mask: u32| -> bool {
        let gens: Vec<Ray2> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| cols[i].clone()).collect();
        !in_cone2(&gens, chi)
    };
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if !unstable(mask) {
            continue;
        }
        let maximal = (0..n).all(|i| mask >> i & 1 == 1 || !unstable(mask | 1 << i));
        if maximal {
            out.insert((0..n).filter(|i| mask >> i & 1 == 0).collect());
        }
    }
    out
}

/// Minimal sets meeting every member of `sets`, by subset enumeration.
pub fn transversals_exhaustive(sets: &[Vec<usize>], n: usize) -> BTreeSet<Vec<usize>> {
    let hits = |mask: u32| sets.iter().all(|s| s.iter().any(|&i| mask >> i & 1 == 1));
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        if !hits(mask) {
            continue;
        }
        let minimal = (0..n).all(|i| mask >> i & 1 == 0 || !hits(mask & !(1 << i)));
        if minimal {
            out.insert((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn components_set(i: &MonomialIdeal) -> BTreeSet<Vec<usize>> {
    i.components().iter().cloned().collect()
}

// ---------------------------------------------------------------------------
// strategies

pub fn matrix_strategy(max_r: usize, max_n: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_r)
        .prop_flat_map(move |r| (Just(r), r..=max_n))
        .prop_flat_map(move |(r, n)| {
            prop::collection::vec(-entry..=entry, r * n).prop_map(move |v| {
                IntMatrix::new(r, n, v.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
}

pub fn full_rank_matrix(max_r: usize, max_n: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    matrix_strategy(max_r, max_n, entry).prop_filter("full row rank", |a| rank(a) == a.rows())
}

pub fn wps_weights() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=40, 2..=5)
}

/// Rank-2 presentations with columns in the closed upper half-plane minus
/// the negative x-axis, at least two directions, full rank.
pub fn rank2_presentation() -> impl Strategy<Value = CoxPresentation> {
    prop::collection::vec((-5i64..=5, 0i64..=5), 3..=8)
        .prop_filter("admissible columns", |cols| {
            cols.iter().all(|&(x, y)| y > 0 || x > 0)
        })
        .prop_filter_map("full rank", |cols| {
            let n = cols.len();
            let top: Vec<i64> = cols.iter().map(|c| c.0).collect();
            let bottom: Vec<i64> = cols.iter().map(|c| c.1).collect();
            let w = IntMatrix::from_rows(&[top, bottom]).ok()?;
            if rank(&w) != 2 {
                return None;
            }
            let ideal = MonomialIdeal::new(vec![(0..n).collect()], n).ok()?;
            CoxPresentation::unnamed(w, ideal.components().to_vec(), true).ok()
        })
}

pub fn bundle_spec() -> impl Strategy<Value = WeightedBundleSpec> {
    (1usize..=2, 1usize..=3)
        .prop_flat_map(|(n, m)| {
            (
                Just(n),
                Just(m),
                prop::collection::vec(0i64..=4, m + 1),
                prop::collection::vec(1i64..=4, m),
            )
        })
        .prop_filter_map("well-formed fibre", |(n, m, omega, a)| {
            WeightedBundleSpec::new(n, m, omega, a).ok()
        })
}

// ---------------------------------------------------------------------------
// property checks, shared by the proptest suite and the acceptance harness

pub type Check = std::result::Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `M = g * N` with `N` standard and `|det g| = d_M`.
pub fn check_standardize(a: &IntMatrix) -> Check {
    let (g, n) = standardize(a).map_err(|e| e.to_string())?;
    ensure(&(&g * &n) == a, || format!("g*N != M for\n{a}"))?;
    ensure(is_standard(&n), || format!("N not standard for\n{a}"))?;
    let rows = g.to_rows();
    let d = det_leibniz(&rows).abs();
    ensure(d == minor_gcd_exhaustive(a, a.rows()), || format!("|det g| != d_M for\n{a}"))
}

/// `is_standard` agrees with Smith invariants and with exhaustive minors.
pub fn check_standard_vs_smith(a: &IntMatrix) -> Check {
    let s = smith_invariants(a);
    let surjective = s.len() == a.rows() && s.iter().all(One::is_one);
    let by_minors = a.rows() <= a.cols() && minor_gcd_exhaustive(a, a.rows()).is_one();
    ensure(is_standard(a) == surjective && surjective == by_minors, || {
        format!("standardness disagreement for\n{a}")
    })
}

/// On one row, the well-forming process matches the classical procedure.
pub fn check_wps(w: &[u64]) -> Check {
    let classical = wps_well_form(w).map_err(|e| e.to_string())?;
    let row: Vec<i64> = w.iter().map(|&x| x as i64).collect();
    let a = IntMatrix::from_rows(&[row]).unwrap();
    let (h, cert) = well_form_matrix(&a).map_err(|e| format!("{w:?}: {e}"))?;
    ensure(verify_certificate(&a, &cert, &h), || format!("certificate fails for {w:?}"))?;
    let got: Vec<BigInt> = h.row(0).to_vec();
    let want: Vec<BigInt> = classical.iter().map(|&x| BigInt::from(x)).collect();
    ensure(got == want, || format!("{w:?}: got {got:?}, classical {want:?}"))
}

/// Each chamber model equals the brute-force semistability ideal.
pub fn check_chambers(p: &CoxPresentation) -> Check {
    let w = p.weights();
    let cols: Vec<Ray2> = (0..w.cols())
        .map(|j| Ray2(w.get(0, j).clone(), w.get(1, j).clone()))
        .collect();
    let (_, chambers) = chambers_rank2(p).map_err(|e| e.to_string())?;
    for c in &chambers {
        let model = model_at_chamber(p, c).map_err(|e| e.to_string())?;
        let chi = Ray2(&c.start.0 + &c.end.0, &c.start.1 + &c.end.1);
        let want = semistable_components(&cols, &chi);
        let got = components_set(model.irrelevant());
        ensure(got == want, || {
            format!("chamber {}..{} of\n{w}: got {got:?}, brute force {want:?}", c.start, c.end)
        })?;
    }
    Ok(())
}

/// Gale rays satisfy every relation row and recover the weights.
pub fn check_gale(a: &IntMatrix) -> Check {
    let b = gale_dual(a).map_err(|e| e.to_string())?;
    let d = a.cols() - a.rows();
    for i in 0..a.rows() {
        for k in 0..d {
            let s: BigInt = (0..a.cols()).map(|j| a.get(i, j) * &b[j][k]).sum();
            ensure(s.is_zero(), || format!("relation {i} fails on\n{a}"))?;
        }
    }
    let back = weights_from_rays(&b).map_err(|e| e.to_string())?;
    ensure(unimodular_row_equivalent(&back, a), || format!("weights not recovered for\n{a}"))
}

/// Fan -> ideal -> fan is the identity on weighted bundles, and the ideal
/// matches exhaustive transversals of the cone complements.
pub fn check_fan_round_trip(spec: &WeightedBundleSpec) -> Check {
    let (fan, p) = weighted_bundle_fan(spec).map_err(|e| e.to_string())?;
    let ideal = irrelevant_ideal_from_fan(&fan);
    ensure(&ideal == p.irrelevant(), || format!("ideal mismatch for {spec:?}"))?;
    let n = fan.rays().len();
    let complements: Vec<Vec<usize>> = fan
        .max_cones()
        .iter()
        .map(|c| (0..n).filter(|i| !c.contains(i)).collect())
        .collect();
    ensure(components_set(&ideal) == transversals_exhaustive(&complements, n), || {
        format!("transversals disagree for {spec:?}")
    })?;
    let back = fan_from_presentation(&p).map_err(|e| e.to_string())?;
    ensure(back.cone_set() == fan.cone_set(), || format!("cones differ for {spec:?}"))?;
    let w = weights_from_rays(fan.rays()).map_err(|e| e.to_string())?;
    ensure(unimodular_row_equivalent(&w, p.weights()), || {
        format!("fan weights differ for {spec:?}")
    })
}

/// Elimination-based minor gcd equals the exhaustive one.
pub fn check_minor_gcd(a: &IntMatrix) -> Check {
    let r = a.rows();
    let fast = minor_gcd(a, r).map_err(|e| e.to_string())?;
    let slow = minor_gcd_exhaustive(a, r);
    ensure(fast == slow, || format!("minor gcd {fast} vs {slow} for\n{a}"))
}
