//! Gale duality between weights and rays, simplicial fans and Cox's recipe.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coxpres::{minimal_transversals, wps_well_form, CoxPresentation, MonomialIdeal};
use crate::error::{CoxError, Result};
use crate::intlattice::{
    content, determinant, is_standard, kernel_basis, minor_gcd, primitive, rank, solve_rational,
    IntMatrix,
};

/// A simplicial fan in `Z^d` given by primitive rays and maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice_dim: usize,
    rays: Vec<Vec<BigInt>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(lattice_dim: usize, rays: Vec<Vec<BigInt>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if lattice_dim == 0 {
            return Err(CoxError::invalid("fan needs a positive lattice dimension"));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != lattice_dim {
                return Err(CoxError::invalid(format!("ray {i} has wrong length")));
            }
            if !content(r).is_one() {
                return Err(CoxError::invalid(format!("ray {i} is zero or not primitive")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            if set.is_empty() || set.len() != c.len() || set.iter().any(|&i| i >= rays.len()) {
                return Err(CoxError::invalid(format!("bad cone {c:?}")));
            }
            let cone: Vec<usize> = set.into_iter().collect();
            if !independent(&rays, &cone) {
                return Err(CoxError::Unsupported(format!(
                    "cone {cone:?} is not simplicial"
                )));
            }
            cones.push(cone);
        }
        for (i, a) in cones.iter().enumerate() {
            for (j, b) in cones.iter().enumerate() {
                if i != j && a.iter().all(|x| b.contains(x)) {
                    return Err(CoxError::invalid(format!(
                        "cone {a:?} is contained in cone {b:?}"
                    )));
                }
            }
        }
        if rays.is_empty() || rank_of(&rays) != lattice_dim {
            return Err(CoxError::invalid("rays do not span the lattice"));
        }
        Ok(Fan {
            lattice_dim,
            rays,
            max_cones: cones,
        })
    }

    /// Convenience constructor from machine integers and 0-based cones.
    pub fn from_i64(lattice_dim: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Self> {
        Self::new(
            lattice_dim,
            rays.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    pub fn lattice_dim(&self) -> usize {
        self.lattice_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Cones as sets, independent of listing order.
    pub fn cone_set(&self) -> BTreeSet<Vec<usize>> {
        self.max_cones.iter().cloned().collect()
    }
}

fn rank_of(vectors: &[Vec<BigInt>]) -> usize {
    if vectors.is_empty() || vectors[0].is_empty() {
        return 0;
    }
    IntMatrix::from_big_rows(vectors.to_vec()).map_or(0, |m| rank(&m))
}

fn independent(rays: &[Vec<BigInt>], cone: &[usize]) -> bool {
    let vs: Vec<Vec<BigInt>> = cone.iter().map(|&i| rays[i].clone()).collect();
    rank_of(&vs) == cone.len()
}

/// Rays (one row per variable) generating the relations dual to `a`.
///
/// The rows of the result span `ker(a)` as a lattice; the basis is the Hermite
/// form of the kernel. For a square `a` every row is empty.
pub fn gale_dual(a: &IntMatrix) -> Result<Vec<Vec<BigInt>>> {
    if !is_standard(a) {
        let d = if rank(a) == a.rows() && a.rows() <= a.cols() {
            minor_gcd(a, a.rows())?
        } else {
            BigInt::zero()
        };
        return Err(CoxError::MustStandardizeFirst(d.to_string()));
    }
    let k = kernel_basis(a);
    Ok((0..a.cols())
        .map(|i| k.iter().map(|v| v[i].clone()).collect())
        .collect())
}

/// All integer relations among the rays, as a standard weight matrix in Hermite form.
pub fn weights_from_rays(rays: &[Vec<BigInt>]) -> Result<IntMatrix> {
    let d = rays.first().map_or(0, Vec::len);
    if d == 0 || rays.iter().any(|r| r.len() != d) {
        return Err(CoxError::invalid("rays must be nonempty vectors of one length"));
    }
    if rank_of(rays) != d {
        return Err(CoxError::invalid("rays do not span"));
    }
    let b_t = IntMatrix::from_big_rows(rays.to_vec())?.transpose();
    let rel = kernel_basis(&b_t);
    if rel.is_empty() {
        return Err(CoxError::invalid("rays admit no relations"));
    }
    IntMatrix::from_big_rows(rel)
}

/// A unimodular `G` with `to[i] = G * from[i]` for all `i`, if one exists.
pub fn lattice_basis_change(from: &[Vec<BigInt>], to: &[Vec<BigInt>]) -> Option<IntMatrix> {
    if from.len() != to.len() || from.is_empty() {
        return None;
    }
    let d = from[0].len();
    if d == 0 || to.iter().chain(from).any(|v| v.len() != d) {
        return None;
    }
    // pick d independent source vectors
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..from.len() {
        let mut trial: Vec<Vec<BigInt>> = basis.iter().map(|&j| from[j].clone()).collect();
        trial.push(from[i].clone());
        if rank_of(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == d {
            break;
        }
    }
    if basis.len() != d {
        return None;
    }
    let cols: Vec<Vec<BigInt>> = basis.iter().map(|&j| from[j].clone()).collect();
    let mut g = Vec::with_capacity(d);
    for k in 0..d {
        // row k of G dotted with from[j] must equal to[j][k]
        let f_t: Vec<Vec<BigInt>> = (0..d)
            .map(|c| cols.iter().map(|v| v[c].clone()).collect())
            .collect();
        let rhs: Vec<BigInt> = basis.iter().map(|&j| to[j][k].clone()).collect();
        let sol = solve_rational(&f_t, &rhs)?;
        if !sol.iter().all(BigRational::is_integer) {
            return None;
        }
        g.push(sol.into_iter().map(|x| x.to_integer()).collect::<Vec<_>>());
    }
    let g = IntMatrix::from_big_rows(g).ok()?;
    if !determinant(&g).ok()?.abs().is_one() {
        return None;
    }
    for (f, t) in from.iter().zip(to) {
        let image: Vec<BigInt> = (0..d)
            .map(|k| (0..d).map(|c| g.get(k, c) * &f[c]).sum())
            .collect();
        if &image != t {
            return None;
        }
    }
    Some(g)
}

/// A weighted bundle over `P^n` with fibre weights `(1, a_1, ..., a_m)` and twists `omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBundleSpec {
    pub n: usize,
    pub m: usize,
    pub omega: Vec<i64>,
    /// `(a_1, ..., a_m)`; a leading `a_0 = 1` is also accepted.
    pub a: Vec<i64>,
}

impl WeightedBundleSpec {
    pub fn new(n: usize, m: usize, omega: Vec<i64>, a: Vec<i64>) -> Result<Self> {
        let spec = WeightedBundleSpec { n, m, omega, a };
        spec.fiber_weights()?;
        Ok(spec)
    }

    /// Validated fibre weights `(a_0 = 1, a_1, ..., a_m)`.
    pub fn fiber_weights(&self) -> Result<Vec<i64>> {
        let full = if self.a.len() == self.m {
            std::iter::once(1).chain(self.a.iter().copied()).collect::<Vec<_>>()
        } else if self.a.len() == self.m + 1 && self.a.first() == Some(&1) {
            self.a.clone()
        } else {
            return Err(CoxError::invalid(format!(
                "expected {} fibre weights, got {}",
                self.m,
                self.a.len()
            )));
        };
        if self.omega.len() != self.m + 1 {
            return Err(CoxError::invalid(format!(
                "expected {} twists, got {}",
                self.m + 1,
                self.omega.len()
            )));
        }
        if self.omega.iter().any(|&w| w < 0) {
            return Err(CoxError::invalid("twists must be nonnegative"));
        }
        if full.iter().any(|&x| x < 1) {
            return Err(CoxError::invalid("fibre weights must be positive"));
        }
        let as_u: Vec<u64> = full.iter().map(|&x| x as u64).collect();
        if wps_well_form(&as_u)? != as_u {
            return Err(CoxError::invalid(format!(
                "fibre weights {full:?} are not well-formed"
            )));
        }
        Ok(full)
    }

    /// The rank-2 weight matrix `[[1..1, -omega], [0..0, 1, a_1..a_m]]`.
    pub fn weight_matrix(&self) -> Result<IntMatrix> {
        let a = self.fiber_weights()?;
        let top = std::iter::repeat_n(1, self.n + 1).chain(self.omega.iter().map(|w| -w));
        let bottom = std::iter::repeat_n(0, self.n + 1).chain(a.iter().copied());
        IntMatrix::from_rows(&[top.collect::<Vec<_>>(), bottom.collect::<Vec<_>>()])
    }

    pub fn variable_names(&self) -> Vec<String> {
        (0..=self.n)
            .map(|i| format!("x{i}"))
            .chain((0..=self.m).map(|j| format!("y{j}")))
            .collect()
    }
}

/// Fan and Cox presentation of a weighted bundle.
///
/// Lattice basis `(beta_1..beta_m, alpha_1..alpha_n)`; variables `x_0..x_n`
/// (rays `alpha`) then `y_0..y_m` (rays `beta`); cone `(r, s)` omits
/// `alpha_r` and `beta_s`.
pub fn weighted_bundle_fan(spec: &WeightedBundleSpec) -> Result<(Fan, CoxPresentation)> {
    let (n, m) = (spec.n, spec.m);
    if n == 0 || m == 0 {
        return Err(CoxError::invalid("weighted bundle fan needs n >= 1 and m >= 1"));
    }
    let a = spec.fiber_weights()?;
    let d = n + m;
    let unit = |k: usize| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); d];
        v[k] = BigInt::one();
        v
    };
    let beta: Vec<Vec<BigInt>> = (1..=m).map(|i| unit(i - 1)).collect();
    let alpha: Vec<Vec<BigInt>> = (1..=n).map(|j| unit(m + j - 1)).collect();

    let mut beta0 = vec![BigInt::zero(); d];
    for i in 1..=m {
        for (c, b) in beta0.iter_mut().zip(&beta[i - 1]) {
            *c -= b * a[i];
        }
    }
    let mut alpha0 = vec![BigInt::zero(); d];
    for al in &alpha {
        for (c, x) in alpha0.iter_mut().zip(al) {
            *c -= x;
        }
    }
    for i in 1..=m {
        let coeff = BigInt::from(spec.omega[i] - spec.omega[0] * a[i]);
        for (c, b) in alpha0.iter_mut().zip(&beta[i - 1]) {
            *c += &coeff * b;
        }
    }

    let rays: Vec<Vec<BigInt>> = std::iter::once(alpha0)
        .chain(alpha)
        .chain(std::iter::once(beta0))
        .chain(beta)
        .collect();
    let mut cones = Vec::with_capacity((n + 1) * (m + 1));
    for r in 0..=n {
        for s in 0..=m {
            cones.push(
                (0..rays.len())
                    .filter(|&i| i != r && i != n + 1 + s)
                    .collect(),
            );
        }
    }
    let fan = Fan::new(d, rays, cones)?;
    let xs: Vec<usize> = (0..=n).collect();
    let ys: Vec<usize> = (n + 1..=n + 1 + m).collect();
    let ideal = MonomialIdeal::new(vec![xs, ys], n + m + 2)?;
    let pres = CoxPresentation::new(spec.variable_names(), spec.weight_matrix()?, ideal, false)?;
    Ok((fan, pres))
}

/// Cox's recipe: the ideal generated by the products of variables off each maximal cone.
pub fn irrelevant_ideal_from_fan(fan: &Fan) -> MonomialIdeal {
    let n = fan.rays().len();
    let complements: Vec<Vec<usize>> = fan
        .max_cones()
        .iter()
        .map(|c| (0..n).filter(|i| !c.contains(i)).collect())
        .collect();
    if complements.iter().any(Vec::is_empty) {
        // a cone using every ray: the ideal is the unit ideal, recorded as all variables
        return MonomialIdeal::new(vec![(0..n).collect()], n).expect("in range");
    }
    MonomialIdeal::new(minimal_transversals(&complements), n).expect("in range")
}

/// Inverse of the Cox recipe: rays from Gale duality, cones from the
/// complements of the minimal generators of the irrelevant ideal.
pub fn fan_from_presentation(p: &CoxPresentation) -> Result<Fan> {
    let rays = gale_dual(p.weights())?;
    let n = p.num_vars();
    let d = n - p.rank();
    if d == 0 {
        return Err(CoxError::Unsupported("zero-dimensional quotient has no fan".into()));
    }
    if rays.iter().any(|r| !content(r).is_one()) {
        return Err(CoxError::NotWellFormed);
    }
    let cones: Vec<Vec<usize>> = p
        .irrelevant()
        .generators()
        .iter()
        .map(|g| (0..n).filter(|i| !g.contains(i)).collect())
        .collect();
    for c in &cones {
        if !independent(&rays, c) {
            return Err(CoxError::Unsupported(format!(
                "cone on variables {c:?} is not simplicial"
            )));
        }
    }
    Fan::new(d, rays, cones)
}

/// Star subdivision of `fan` at the primitive vector through `w`. The new ray
/// is appended last; cones not containing `w` are kept in place.
pub fn star_subdivision(fan: &Fan, w: &[BigInt]) -> Result<Fan> {
    if w.len() != fan.lattice_dim() {
        return Err(CoxError::invalid("vector has the wrong dimension"));
    }
    if w.iter().all(Zero::is_zero) {
        return Err(CoxError::invalid("cannot subdivide at the zero vector"));
    }
    let w = primitive(w);
    if fan.rays().contains(&w) {
        return Ok(fan.clone());
    }
    let new_index = fan.rays().len();
    let mut cones = Vec::new();
    let mut hit = false;
    for cone in fan.max_cones() {
        let cols: Vec<Vec<BigInt>> = cone.iter().map(|&i| fan.rays()[i].clone()).collect();
        let support = solve_rational(&cols, &w)
            .filter(|l| l.iter().all(|x| !x.is_negative()))
            .map(|l| {
                cone.iter()
                    .zip(&l)
                    .filter(|(_, x)| x.is_positive())
                    .map(|(&i, _)| i)
                    .collect::<Vec<_>>()
            });
        match support {
            Some(tau) => {
                hit = true;
                for i in tau {
                    let mut c: Vec<usize> = cone.iter().copied().filter(|&j| j != i).collect();
                    c.push(new_index);
                    if !cones.contains(&c) {
                        cones.push(c);
                    }
                }
            }
            None => cones.push(cone.clone()),
        }
    }
    if !hit {
        let s: Vec<String> = w.iter().map(ToString::to_string).collect();
        return Err(CoxError::OutsideSupport(format!("({})", s.join(","))));
    }
    let mut rays = fan.rays().to_vec();
    rays.push(w);
    Fan::new(fan.lattice_dim(), rays, cones)
}
