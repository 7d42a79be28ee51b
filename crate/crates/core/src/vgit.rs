//! Rank-2 variation of GIT: chamber sweeps, wall crossings and 2-ray games.
//!
//! A sweep walks the distinct column directions of a rank-2 weight matrix
//! around the effective cone, from one extreme ray to the other.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coxpres::{CoxPresentation, MonomialIdeal};
use crate::error::{CoxError, Result};
use crate::format::format_ideal;

/// A vector in `Z^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray2(pub BigInt, pub BigInt);

impl Ray2 {
    pub fn new(x: i64, y: i64) -> Self {
        Ray2(BigInt::from(x), BigInt::from(y))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    pub fn primitive(&self) -> Ray2 {
        let g = self.0.gcd(&self.1);
        if g.is_zero() {
            return self.clone();
        }
        Ray2(&self.0 / &g, &self.1 / &g)
    }

    fn half(&self) -> u8 {
        if self.1.is_positive() || (self.1.is_zero() && self.0.is_positive()) {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Ray2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

fn det(a: &Ray2, b: &Ray2) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &Ray2, b: &Ray2) -> BigInt {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn angle_cmp(a: &Ray2, b: &Ray2) -> Ordering {
    a.half().cmp(&b.half()).then_with(|| det(b, a).cmp(&BigInt::zero()))
}

/// The cone strictly between two consecutive walls, in sweep order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub start: Ray2,
    pub end: Ray2,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Flip,
    AntiFlip,
    Flop,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Flip => "Flip",
            Classification::AntiFlip => "AntiFlip",
            Classification::Flop => "Flop",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCrossing {
    pub wall: Ray2,
    /// One entry per off-wall variable, in variable order.
    pub type_vector: Vec<BigInt>,
    pub off_wall_vars: Vec<usize>,
    pub classification: Classification,
    pub base_vars: Vec<usize>,
    pub base_weights: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndBehavior {
    Fibration {
        ray: Ray2,
        target_generators: Vec<Vec<u64>>,
    },
    DivisorialContraction {
        ray: Ray2,
        variable: usize,
        target_generators: Vec<Vec<u64>>,
    },
    Unclassified {
        ray: Ray2,
        beyond: usize,
    },
}

impl EndBehavior {
    pub fn ray(&self) -> &Ray2 {
        match self {
            EndBehavior::Fibration { ray, .. }
            | EndBehavior::DivisorialContraction { ray, .. }
            | EndBehavior::Unclassified { ray, .. } => ray,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            EndBehavior::Fibration { .. } => "Fibration",
            EndBehavior::DivisorialContraction { .. } => "DivisorialContraction",
            EndBehavior::Unclassified { .. } => "Unclassified",
        }
    }

    pub fn target_generators(&self) -> &[Vec<u64>] {
        match self {
            EndBehavior::Fibration { target_generators, .. }
            | EndBehavior::DivisorialContraction { target_generators, .. } => target_generators,
            EndBehavior::Unclassified { .. } => &[],
        }
    }
}

/// Column directions in sweep order, with each variable's position and multiple.
#[derive(Clone, Debug)]
struct Sweep {
    dirs: Vec<Ray2>,
    pos: Vec<usize>,
    mult: Vec<BigInt>,
    clockwise: bool,
}

impl Sweep {
    fn position(&self, r: &Ray2) -> Option<usize> {
        let p = r.primitive();
        self.dirs.iter().position(|d| *d == p)
    }

    fn vars_at(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.pos.len()).filter(move |&v| self.pos[v] == i)
    }

    /// Sweep positions bounding the moving cone.
    fn moving(&self) -> Result<(usize, usize)> {
        let last = self.dirs.len() - 1;
        let lo = if self.vars_at(0).count() >= 2 { 0 } else { 1 };
        let hi = if self.vars_at(last).count() >= 2 {
            last
        } else {
            last.wrapping_sub(1)
        };
        if last == 0 {
            return if lo == 0 {
                Ok((0, 0))
            } else {
                Err(CoxError::Unsupported("moving cone is trivial".into()))
            };
        }
        if lo > hi || hi > last {
            return Err(CoxError::Unsupported("moving cone is trivial".into()));
        }
        Ok((lo, hi))
    }
}

fn columns(p: &CoxPresentation) -> Result<Vec<Ray2>> {
    let w = p.weights();
    if w.rows() != 2 {
        return Err(CoxError::invalid(format!("expected rank 2, got rank {}", w.rows())));
    }
    let cols: Vec<Ray2> = (0..w.cols())
        .map(|j| Ray2(w.get(0, j).clone(), w.get(1, j).clone()))
        .collect();
    if cols.iter().any(Ray2::is_zero) {
        return Err(CoxError::invalid("zero column"));
    }
    Ok(cols)
}

fn sweep(p: &CoxPresentation) -> Result<Sweep> {
    let cols = columns(p)?;
    let mut dirs: Vec<Ray2> = cols.iter().map(Ray2::primitive).collect();
    dirs.sort_by(angle_cmp);
    dirs.dedup();
    let k = dirs.len();
    let arc: Vec<Ray2> = if k == 1 {
        dirs
    } else {
        let gaps: Vec<usize> = (0..k)
            .filter(|&i| {
                let (a, b) = (&dirs[i], &dirs[(i + 1) % k]);
                let d = det(a, b);
                d.is_negative() || (d.is_zero() && dot(a, b).is_negative())
            })
            .collect();
        let [g] = gaps[..] else {
            return Err(CoxError::NotQuasiProjective);
        };
        (1..=k).map(|s| dirs[(g + s) % k].clone()).collect()
    };
    let mut s = Sweep {
        pos: cols
            .iter()
            .map(|c| arc.iter().position(|d| *d == c.primitive()).expect("direction present"))
            .collect(),
        mult: cols
            .iter()
            .map(|c| c.0.gcd(&c.1))
            .collect(),
        dirs: arc,
        clockwise: false,
    };
    let last = s.dirs.len() - 1;
    if let Some(first) = p.irrelevant().components().first() {
        let at_end = first.iter().any(|&v| s.pos[v] == last);
        let at_start = first.iter().any(|&v| s.pos[v] == 0);
        if last > 0 && at_end && !at_start {
            s.dirs.reverse();
            for q in s.pos.iter_mut() {
                *q = last - *q;
            }
            s.clockwise = true;
        }
    }
    Ok(s)
}

/// Walls (distinct column directions, in sweep order) and the chambers between them.
pub fn chambers_rank2(p: &CoxPresentation) -> Result<(Vec<Ray2>, Vec<Chamber>)> {
    let s = sweep(p)?;
    let chambers = s
        .dirs
        .windows(2)
        .enumerate()
        .map(|(i, w)| Chamber {
            start: w[0].clone(),
            end: w[1].clone(),
            index: i,
        })
        .collect();
    Ok((s.dirs, chambers))
}

/// Whether the sweep runs clockwise.
pub fn sweep_is_clockwise(p: &CoxPresentation) -> Result<bool> {
    Ok(sweep(p)?.clockwise)
}

/// The model for characters inside `chamber`: variables up to the chamber
/// start, intersected with variables from the chamber end on.
pub fn model_at_chamber(p: &CoxPresentation, chamber: &Chamber) -> Result<CoxPresentation> {
    let s = sweep(p)?;
    let (Some(a), Some(b)) = (s.position(&chamber.start), s.position(&chamber.end)) else {
        return Err(CoxError::invalid("chamber walls are not column directions"));
    };
    if b != a + 1 {
        return Err(CoxError::invalid("chamber walls are not consecutive"));
    }
    let n = p.num_vars();
    let before: Vec<usize> = (0..n).filter(|&v| s.pos[v] <= a).collect();
    let after: Vec<usize> = (0..n).filter(|&v| s.pos[v] >= b).collect();
    let ideal = MonomialIdeal::new(vec![before, after], n)?;
    CoxPresentation::new(p.variables().to_vec(), p.weights().clone(), ideal, p.is_stacky())
}

/// Crossing data at an interior wall, signed so that variables on the side
/// swept first are positive.
pub fn wall_crossing(p: &CoxPresentation, wall: &Ray2) -> Result<WallCrossing> {
    let s = sweep(p)?;
    let cols = columns(p)?;
    let i = s
        .position(wall)
        .ok_or_else(|| CoxError::invalid(format!("{wall} is not a wall")))?;
    if i == 0 || i + 1 >= s.dirs.len() {
        return Err(CoxError::invalid(format!(
            "{wall} is an extreme wall; use end_behavior"
        )));
    }
    let w = &s.dirs[i];
    let sign = if s.clockwise { -BigInt::one() } else { BigInt::one() };
    let mut type_vector = Vec::new();
    let mut off_wall_vars = Vec::new();
    let mut base_vars = Vec::new();
    let mut base_weights = Vec::new();
    for (v, c) in cols.iter().enumerate() {
        if s.pos[v] == i {
            base_vars.push(v);
            base_weights.push(s.mult[v].clone());
        } else {
            off_wall_vars.push(v);
            type_vector.push(&sign * det(c, w));
        }
    }
    let sum: BigInt = type_vector.iter().sum();
    let classification = match sum.sign() {
        num_bigint::Sign::Plus => Classification::Flip,
        num_bigint::Sign::Minus => Classification::AntiFlip,
        num_bigint::Sign::NoSign => Classification::Flop,
    };
    Ok(WallCrossing {
        wall: w.clone(),
        type_vector,
        off_wall_vars,
        classification,
        base_vars,
        base_weights,
    })
}

/// `(effective, moving)` cones, each as its two boundary rays in sweep order.
pub fn cones_rank2(p: &CoxPresentation) -> Result<((Ray2, Ray2), (Ray2, Ray2))> {
    let s = sweep(p)?;
    let (lo, hi) = s.moving()?;
    let last = s.dirs.len() - 1;
    Ok((
        (s.dirs[0].clone(), s.dirs[last].clone()),
        (s.dirs[lo].clone(), s.dirs[hi].clone()),
    ))
}

/// Degree bound used for target generators at an end: one more than the
/// largest multiple of the ray among the columns.
pub fn default_degree_bound(p: &CoxPresentation, ray: &Ray2) -> Result<u32> {
    let s = sweep(p)?;
    let i = s
        .position(ray)
        .ok_or_else(|| CoxError::invalid(format!("{ray} is not a column direction")))?;
    let max = s
        .vars_at(i)
        .map(|v| s.mult[v].clone())
        .max()
        .unwrap_or_else(BigInt::one);
    let max = max.to_u32().unwrap_or(u32::MAX - 1).max(1);
    Ok(max + 1)
}

/// Behaviour at a boundary ray of the moving cone. When the moving cone is a
/// single ray the end facing the start of the sweep is reported.
pub fn end_behavior(p: &CoxPresentation, ray: &Ray2, degree_bound: Option<u32>) -> Result<EndBehavior> {
    let s = sweep(p)?;
    let (lo, hi) = s.moving()?;
    let i = s
        .position(ray)
        .ok_or_else(|| CoxError::invalid(format!("{ray} is not a column direction")))?;
    if i != lo && i != hi {
        return Err(CoxError::invalid(format!(
            "{ray} does not bound the moving cone"
        )));
    }
    end_on_side(p, &s, i == lo, degree_bound)
}

fn end_on_side(p: &CoxPresentation, s: &Sweep, lower: bool, degree_bound: Option<u32>) -> Result<EndBehavior> {
    let (lo, hi) = s.moving()?;
    let (i, beyond): (usize, Vec<usize>) = if lower {
        (lo, (0..p.num_vars()).filter(|&v| s.pos[v] < lo).collect())
    } else {
        (hi, (0..p.num_vars()).filter(|&v| s.pos[v] > hi).collect())
    };
    let ray = s.dirs[i].clone();
    let bound = match degree_bound {
        Some(b) => b,
        None => default_degree_bound(p, &ray)?,
    };
    Ok(match beyond[..] {
        [] => EndBehavior::Fibration {
            target_generators: graded_ring_generators(p, &ray, bound)?,
            ray,
        },
        [variable] => EndBehavior::DivisorialContraction {
            target_generators: graded_ring_generators(p, &ray, bound)?,
            ray,
            variable,
        },
        _ => EndBehavior::Unclassified {
            ray,
            beyond: beyond.len(),
        },
    })
}

/// Minimal monomial generators of `sum_{1<=k<=bound} R_{k*chi}`.
///
/// When the effective cone is a half-plane the boundary line carries
/// degree-0 monomials; monomials divisible by one are skipped so that the
/// enumeration stays finite. Output is sorted by degree multiple, then by
/// exponent vector in descending lexicographic order.
pub fn graded_ring_generators(p: &CoxPresentation, chi: &Ray2, bound: u32) -> Result<Vec<Vec<u64>>> {
    if chi.is_zero() {
        return Err(CoxError::invalid("character must be nonzero"));
    }
    let cols = columns(p)?;
    let s = sweep(p)?;
    let first = &s.dirs[0];
    let last = &s.dirs[s.dirs.len() - 1];
    // nonnegative functional on all columns
    let (ell, line) = if s.dirs.len() == 1 {
        (first.clone(), None)
    } else {
        let (a, b) = if s.clockwise { (last, first) } else { (first, last) };
        let na = Ray2(-&a.1, a.0.clone());
        let nb = Ray2(b.1.clone(), -&b.0);
        if det(a, b).is_zero() {
            (na, Some(a.clone()))
        } else {
            (Ray2(&na.0 + &nb.0, &na.1 + &nb.1), None)
        }
    };
    let ell_of = |c: &Ray2| dot(&ell, c);
    let n = cols.len();
    let on_line: Vec<bool> = cols.iter().map(|c| ell_of(c).is_zero()).collect();

    let mut gens: Vec<(u32, Vec<u64>)> = Vec::new();
    for k in 1..=bound {
        let target = Ray2(&chi.0 * k, &chi.1 * k);
        let budget = ell_of(&target);
        if budget.is_negative() {
            continue;
        }
        let mut found = Vec::new();
        let mut exps = vec![0u64; n];
        enumerate_offline(&cols, &on_line, &ell_of, 0, &budget, &mut exps, &mut |e| {
            let used = e
                .iter()
                .zip(&cols)
                .fold(Ray2::new(0, 0), |acc, (&x, c)| Ray2(acc.0 + &c.0 * x, acc.1 + &c.1 * x));
            let rest = Ray2(&target.0 - &used.0, &target.1 - &used.1);
            match &line {
                None => {
                    if rest.is_zero() {
                        found.push(e.to_vec());
                    }
                }
                Some(l) => {
                    if !det(&rest, l).is_zero() {
                        return;
                    }
                    for m in line_completions(&cols, &on_line, l, &rest, e) {
                        found.push(m);
                    }
                }
            }
        });
        found.sort_by(|a, b| b.cmp(a));
        found.dedup();
        for m in found {
            if has_degree_zero_factor(&cols, &on_line, &m) {
                continue;
            }
            let reducible = gens
                .iter()
                .any(|(kg, g)| *kg < k && g.iter().zip(&m).all(|(x, y)| x <= y));
            if !reducible {
                gens.push((k, m));
            }
        }
    }
    Ok(gens.into_iter().map(|(_, m)| m).collect())
}

fn enumerate_offline(
    cols: &[Ray2],
    on_line: &[bool],
    ell_of: &dyn Fn(&Ray2) -> BigInt,
    v: usize,
    budget: &BigInt,
    exps: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if v == cols.len() {
        emit(exps);
        return;
    }
    if on_line[v] {
        enumerate_offline(cols, on_line, ell_of, v + 1, budget, exps, emit);
        return;
    }
    let cost = ell_of(&cols[v]);
    let mut e = 0u64;
    let mut left = budget.clone();
    loop {
        exps[v] = e;
        enumerate_offline(cols, on_line, ell_of, v + 1, &left, exps, emit);
        left -= &cost;
        if left.is_negative() {
            break;
        }
        e += 1;
    }
    exps[v] = 0;
}

/// Signed multiple `t` with `r = t * l` for `r` on the line through `l`.
fn coefficient_on(r: &Ray2, l: &Ray2) -> BigInt {
    if !l.0.is_zero() {
        &r.0 / &l.0
    } else {
        &r.1 / &l.1
    }
}

/// All ways to complete the off-line exponents `base` with line variables
/// reaching the residual `rest`, skipping those divisible by a pair
/// monomial of degree zero (which keeps the search finite).
fn line_completions(cols: &[Ray2], on_line: &[bool], l: &Ray2, rest: &Ray2, base: &[u64]) -> Vec<Vec<u64>> {
    let t = coefficient_on(rest, l);
    let pos: Vec<(usize, BigInt)> = (0..cols.len())
        .filter(|&v| on_line[v])
        .map(|v| (v, coefficient_on(&cols[v], l)))
        .collect();
    let plus: Vec<(usize, BigInt)> = pos.iter().filter(|(_, a)| a.is_positive()).cloned().collect();
    let minus: Vec<(usize, BigInt)> = pos
        .iter()
        .filter(|(_, a)| a.is_negative())
        .map(|(v, a)| (*v, -a))
        .collect();
    let sum_a: BigInt = plus.iter().map(|(_, a)| a).sum();
    let sum_b: BigInt = minus.iter().map(|(_, b)| b).sum();
    let amax = plus.iter().map(|(_, a)| a.clone()).max().unwrap_or_else(BigInt::zero);
    let bmax = minus.iter().map(|(_, b)| b.clone()).max().unwrap_or_else(BigInt::zero);
    // either the minus side stays below amax * sum_b, or the plus side below bmax * sum_a
    let n_cap = std::cmp::max(&amax * &sum_b, &bmax * &sum_a - &t);
    let mut out = Vec::new();
    let mut n_total = BigInt::zero();
    while n_total <= n_cap {
        let p_total = &n_total + &t;
        if !p_total.is_negative() {
            for pe in compositions(&plus, &p_total) {
                for ne in compositions(&minus, &n_total) {
                    let mut m = base.to_vec();
                    for ((v, _), e) in plus.iter().zip(&pe) {
                        m[*v] = *e;
                    }
                    for ((v, _), e) in minus.iter().zip(&ne) {
                        m[*v] = *e;
                    }
                    out.push(m);
                }
            }
        }
        n_total += 1;
    }
    out
}

/// Exponent vectors `e` with `sum e_i * w_i = total`.
fn compositions(items: &[(usize, BigInt)], total: &BigInt) -> Vec<Vec<u64>> {
    fn go(items: &[(usize, BigInt)], i: usize, left: &BigInt, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == items.len() {
            if left.is_zero() {
                out.push(cur.clone());
            }
            return;
        }
        let w = &items[i].1;
        let mut e = 0u64;
        let mut rem = left.clone();
        while !rem.is_negative() {
            cur.push(e);
            go(items, i + 1, &rem, cur, out);
            cur.pop();
            rem -= w;
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(items, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Whether some nonconstant monomial of degree zero divides `m`.
fn has_degree_zero_factor(cols: &[Ray2], on_line: &[bool], m: &[u64]) -> bool {
    // only line variables can take part; look for equal positive sums on both sides
    let line: Vec<usize> = (0..cols.len()).filter(|&v| on_line[v] && m[v] > 0).collect();
    if line.is_empty() {
        return false;
    }
    let l = cols[line[0]].primitive();
    let sums = |sign_positive: bool| -> Vec<BigInt> {
        let mut reach = vec![BigInt::zero()];
        for &v in &line {
            let a = coefficient_on(&cols[v], &l);
            if a.is_positive() != sign_positive {
                continue;
            }
            let a = a.abs();
            let mut next = reach.clone();
            for base in &reach {
                for e in 1..=m[v] {
                    next.push(base + &a * e);
                }
            }
            next.sort();
            next.dedup();
            reach = next;
        }
        reach.into_iter().filter(|x| x.is_positive()).collect()
    };
    let plus = sums(true);
    let minus = sums(false);
    plus.iter().any(|x| minus.binary_search(x).is_ok())
}

/// `-K` = (sum of columns) - (sum of equation degrees), tested for strict
/// interior membership in the moving cone. Rank 1 is supported as well.
pub fn anticanonical_in_moving_interior(p: &CoxPresentation, equation_degrees: &[Vec<BigInt>]) -> Result<bool> {
    let w = p.weights();
    let r = w.rows();
    if equation_degrees.iter().any(|d| d.len() != r) {
        return Err(CoxError::invalid("equation degree has the wrong length"));
    }
    let mut k: Vec<BigInt> = (0..r)
        .map(|i| w.row(i).iter().sum::<BigInt>())
        .collect();
    for d in equation_degrees {
        for (x, y) in k.iter_mut().zip(d) {
            *x -= y;
        }
    }
    match r {
        1 => {
            let row = w.row(0);
            if row.iter().all(|x| x.is_positive()) {
                Ok(k[0].is_positive())
            } else if row.iter().all(|x| x.is_negative()) {
                Ok(k[0].is_negative())
            } else {
                Ok(false)
            }
        }
        2 => {
            let v = Ray2(k[0].clone(), k[1].clone());
            let (_, (lo, hi)) = cones_rank2(p)?;
            if lo == hi || v.is_zero() {
                return Ok(false);
            }
            let clockwise = sweep(p)?.clockwise;
            let (a, b) = if clockwise { (hi, lo) } else { (lo, hi) };
            if det(&a, &b).is_zero() {
                Ok(det(&a, &v).is_positive())
            } else {
                Ok(det(&a, &v).is_positive() && det(&v, &b).is_positive())
            }
        }
        _ => Err(CoxError::Unsupported("only ranks 1 and 2 are supported".into())),
    }
}

/// The full 2-ray game: one model per chamber, one crossing per interior
/// wall and the behaviour at both ends of the moving cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameDiagram {
    pub walls: Vec<Ray2>,
    pub chambers: Vec<Chamber>,
    pub models: Vec<CoxPresentation>,
    pub crossings: Vec<WallCrossing>,
    pub ends: (EndBehavior, EndBehavior),
    pub clockwise: bool,
}

pub fn two_ray_game(p: &CoxPresentation, degree_bound: Option<u32>) -> Result<GameDiagram> {
    let s = sweep(p)?;
    let (walls, chambers) = chambers_rank2(p)?;
    let models = chambers
        .iter()
        .map(|c| model_at_chamber(p, c))
        .collect::<Result<Vec<_>>>()?;
    let crossings = walls[1..walls.len().saturating_sub(1).max(1)]
        .iter()
        .map(|w| wall_crossing(p, w))
        .collect::<Result<Vec<_>>>()?;
    s.moving()?;
    let ends = (
        end_on_side(p, &s, true, degree_bound)?,
        end_on_side(p, &s, false, degree_bound)?,
    );
    for c in &crossings {
        let sum: BigInt = c.type_vector.iter().sum();
        let expected = match sum.sign() {
            num_bigint::Sign::Plus => Classification::Flip,
            num_bigint::Sign::Minus => Classification::AntiFlip,
            num_bigint::Sign::NoSign => Classification::Flop,
        };
        if expected != c.classification {
            return Err(CoxError::Invariant("classification disagrees with type sum".into()));
        }
    }
    Ok(GameDiagram {
        walls,
        chambers,
        models,
        crossings,
        ends,
        clockwise: s.clockwise,
    })
}

/// `x^2*u`-style rendering, variables in index order; `1` for the empty monomial.
pub fn format_monomial(exps: &[u64], vars: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn format_type(t: &[BigInt]) -> String {
    let s: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", s.join(","))
}

fn format_gens(gens: &[Vec<u64>], vars: &[String]) -> String {
    let g: Vec<String> = gens.iter().map(|m| format_monomial(m, vars)).collect();
    format!("{{{}}}", g.join(", "))
}

fn describe_end(e: &EndBehavior, vars: &[String]) -> String {
    match e {
        EndBehavior::Fibration { ray, target_generators } => {
            format!("Fibration at {ray}, target generators {}", format_gens(target_generators, vars))
        }
        EndBehavior::DivisorialContraction {
            ray,
            variable,
            target_generators,
        } => format!(
            "DivisorialContraction of {} at {ray}, target generators {}",
            vars[*variable],
            format_gens(target_generators, vars)
        ),
        EndBehavior::Unclassified { ray, beyond } => {
            format!("Unclassified at {ray} ({beyond} columns beyond)")
        }
    }
}

impl GameDiagram {
    /// Human-readable report.
    pub fn render(&self, vars: &[String]) -> String {
        let mut s = String::new();
        let walls: Vec<String> = self.walls.iter().map(ToString::to_string).collect();
        s.push_str(&format!(
            "sweep {}: walls {}\n",
            if self.clockwise { "clockwise" } else { "counterclockwise" },
            walls.join(" ")
        ));
        s.push_str(&format!("start: {}\n", describe_end(&self.ends.0, vars)));
        for (i, (c, m)) in self.chambers.iter().zip(&self.models).enumerate() {
            s.push_str(&format!(
                "model {i} on chamber {}..{}: irrelevant {}\n",
                c.start,
                c.end,
                format_ideal(m.irrelevant(), vars)
            ));
            if let Some(x) = self.crossings.get(i) {
                let base: Vec<&str> = x.base_vars.iter().map(|&v| vars[v].as_str()).collect();
                s.push_str(&format!(
                    "  crossing {}: {} of type {}, base {} with weights {}\n",
                    x.wall,
                    x.classification,
                    format_type(&x.type_vector),
                    base.join(","),
                    format_type(&x.base_weights)
                ));
            }
        }
        s.push_str(&format!("end: {}\n", describe_end(&self.ends.1, vars)));
        s
    }

    /// DOT digraph: models as nodes, dashed crossing edges, end edges.
    pub fn to_dot(&self, vars: &[String]) -> String {
        let mut s = String::from("digraph game {\n  rankdir=LR;\n");
        for (i, m) in self.models.iter().enumerate() {
            s.push_str(&format!(
                "  m{i} [shape=box, label=\"{}\"];\n",
                format_ideal(m.irrelevant(), vars)
            ));
        }
        for (i, x) in self.crossings.iter().enumerate() {
            s.push_str(&format!(
                "  m{i} -> m{} [style=dashed, label=\"{} {}\"];\n",
                i + 1,
                x.classification,
                format_type(&x.type_vector)
            ));
        }
        let attach = |e: &EndBehavior, at_start: bool| -> Option<usize> {
            let p = self.walls.iter().position(|w| w == e.ray())?;
            if self.models.is_empty() {
                None
            } else if at_start {
                Some(p.min(self.models.len() - 1))
            } else {
                Some(p.saturating_sub(1))
            }
        };
        for (j, (e, at_start)) in [(&self.ends.0, true), (&self.ends.1, false)].into_iter().enumerate() {
            s.push_str(&format!(
                "  end{j} [shape=plaintext, label=\"{}\"];\n",
                format_gens(e.target_generators(), vars)
            ));
            if let Some(m) = attach(e, at_start) {
                let label = match e {
                    EndBehavior::DivisorialContraction { variable, .. } => {
                        format!("DivContraction {}", vars[*variable])
                    }
                    other => other.kind().to_string(),
                };
                s.push_str(&format!("  m{m} -> end{j} [label=\"{label}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}
