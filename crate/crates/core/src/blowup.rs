//! Weighted blow-ups: rank-3 blow-ups of weighted bundles over `P^1`,
//! rank-2 blow-ups of weighted projective spaces, and discrepancy bookkeeping.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coxpres::{CoxPresentation, MonomialIdeal};
use crate::error::{CoxError, Result};
use crate::galefan::{irrelevant_ideal_from_fan, star_subdivision, weighted_bundle_fan, WeightedBundleSpec};
use crate::intlattice::IntMatrix;

/// Blow-up of a torus-fixed point of a weighted bundle over `P^1`.
///
/// The centre is `x_{center.0} != 0, y_k != 0` with all other coordinates
/// zero. `a` and `b` are indexed by fibre coordinates `y_0..y_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub center: (usize, usize),
    pub k: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub new_var: String,
}

impl BlowupSpec {
    pub fn new(center: (usize, usize), k: usize, a: Vec<i64>, b: Vec<i64>, new_var: &str) -> Result<Self> {
        let spec = BlowupSpec {
            center,
            k,
            a,
            b,
            new_var: new_var.to_string(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let m1 = self.a.len();
        if m1 == 0 || self.b.len() != m1 {
            return Err(CoxError::invalid("need one fibre weight and one b per fibre coordinate"));
        }
        if self.center.0 > 1 {
            return Err(CoxError::invalid("base coordinate of the centre must be 0 or 1"));
        }
        if self.center.1 != self.k || self.k >= m1 {
            return Err(CoxError::invalid(format!(
                "centre fibre coordinate {} must equal k = {} and be below {m1}",
                self.center.1, self.k
            )));
        }
        if self.a.iter().chain(&self.b).any(|&x| x <= 0) {
            return Err(CoxError::invalid("weights and b must be positive"));
        }
        if self.new_var.is_empty() {
            return Err(CoxError::invalid("new variable needs a name"));
        }
        let ak = self.a_k();
        if self.b[self.k] % ak != 0 {
            return Err(CoxError::invalid(format!(
                "b_k = {} is not a multiple of a_k = {ak}",
                self.b[self.k]
            )));
        }
        for i in (0..m1).filter(|&i| i != self.k) {
            if (self.b[i] - self.a[i]).rem_euclid(ak) != 0 {
                return Err(CoxError::invalid(format!(
                    "b_{i} = {} is not congruent to a_{i} = {} mod {ak}",
                    self.b[i], self.a[i]
                )));
            }
        }
        Ok(())
    }

    pub fn a_k(&self) -> i64 {
        self.a[self.k]
    }

    /// Order of vanishing along the exceptional divisor of each coordinate
    /// `x_0, x_1, y_0..y_m`, in units of `1/a_k`.
    pub fn variable_weights(&self) -> Vec<i64> {
        let mut w = vec![0; 2];
        w[1 - self.center.0] = self.b[self.k];
        w.extend(
            self.b
                .iter()
                .enumerate()
                .map(|(i, &x)| if i == self.k { 0 } else { x }),
        );
        w
    }
}

/// Recovers `(omega, a)` from a presentation laid out as `[[1,1,-omega],[0,0,1,a]]`.
pub fn bundle_spec_from_presentation(p: &CoxPresentation) -> Result<WeightedBundleSpec> {
    let w = p.weights();
    let bad = || CoxError::invalid("presentation is not a weighted bundle over P^1 in standard layout");
    if w.rows() != 2 || w.cols() < 4 {
        return Err(bad());
    }
    let small = |i: usize, j: usize| w.get(i, j).to_i64().ok_or_else(bad);
    if small(0, 0)? != 1 || small(0, 1)? != 1 || small(1, 0)? != 0 || small(1, 1)? != 0 || small(1, 2)? != 1 {
        return Err(bad());
    }
    let m = w.cols() - 3;
    let omega = (2..w.cols()).map(|j| small(0, j).map(|x| -x)).collect::<Result<Vec<_>>>()?;
    let a = (3..w.cols()).map(|j| small(1, j)).collect::<Result<Vec<_>>>()?;
    let spec = WeightedBundleSpec::new(1, m, omega, a)?;
    let expected = MonomialIdeal::new(vec![vec![0, 1], (2..w.cols()).collect()], w.cols())?;
    if p.irrelevant() != &expected {
        return Err(CoxError::invalid("bundle irrelevant ideal must be (x_0,x_1)(y_0..y_m)"));
    }
    Ok(spec)
}

/// Rank-3 Cox presentation of the blow-up; the exceptional variable is appended last.
///
/// The new ray is checked to be integral, and the emitted irrelevant ideal
/// is checked against the star subdivision of the bundle fan.
pub fn blow_up_weighted_bundle(p: &CoxPresentation, spec: &BlowupSpec) -> Result<CoxPresentation> {
    spec.validate()?;
    let bundle = bundle_spec_from_presentation(p)?;
    let full_a = bundle.fiber_weights()?;
    if full_a != spec.a {
        return Err(CoxError::invalid(format!(
            "blow-up fibre weights {:?} differ from the bundle's {:?}",
            spec.a, full_a
        )));
    }
    let m = bundle.m;
    let n_vars = m + 3;
    let xr = spec.center.0;
    let xo = 1 - xr;
    let k = spec.k;
    let y = |i: usize| 2 + i;
    let xi = n_vars;

    let (fan, _) = weighted_bundle_fan(&bundle)?;
    let ak = BigInt::from(spec.a_k());
    let weights = spec.variable_weights();
    let d = fan.lattice_dim();
    let mut ray = vec![BigInt::zero(); d];
    for (v, &wt) in weights.iter().enumerate() {
        for (c, x) in ray.iter_mut().zip(&fan.rays()[v]) {
            *c += x * wt;
        }
    }
    if ray.iter().any(|c| !(c % &ak).is_zero()) {
        return Err(CoxError::invalid("exceptional ray is not integral"));
    }
    let ray: Vec<BigInt> = ray.into_iter().map(|c| c / &ak).collect();

    let mut rows = p.weights().to_rows();
    for r in rows.iter_mut() {
        r.push(BigInt::zero());
    }
    let mut third: Vec<BigInt> = weights.iter().map(|&x| BigInt::from(x)).collect();
    third.push(-ak.clone());
    rows.push(third);
    let matrix = IntMatrix::from_big_rows(rows)?;

    let others: Vec<usize> = (0..=m).filter(|&i| i != k).map(y).collect();
    let components = vec![
        vec![0, 1],
        (0..=m).map(y).collect(),
        vec![xi, xr],
        vec![xi, y(k)],
        std::iter::once(xo).chain(others).collect(),
    ];
    let ideal = MonomialIdeal::new(components, n_vars + 1)?;

    let subdivided = star_subdivision(&fan, &ray)?;
    if subdivided.rays().len() != n_vars + 1 || irrelevant_ideal_from_fan(&subdivided) != ideal {
        return Err(CoxError::Invariant(
            "blow-up ideal disagrees with the star subdivision".into(),
        ));
    }

    let mut vars = p.variables().to_vec();
    if vars.contains(&spec.new_var) {
        return Err(CoxError::invalid(format!("variable {} already exists", spec.new_var)));
    }
    vars.push(spec.new_var.clone());
    CoxPresentation::new(vars, matrix, ideal, true)
}

/// Blow-up of `P(a_0..a_n)` along `x_{k+1} = .. = x_n = 0` with weights
/// `b_{k+1}..b_n` and exceptional weight `alpha`. Variables are `y, x0..xn`.
pub fn blow_up_wps(a: &[i64], k: usize, alpha: i64, b: &[i64]) -> Result<CoxPresentation> {
    let n1 = a.len();
    if n1 < 3 || k + 3 > n1 {
        return Err(CoxError::invalid(format!(
            "split {k} out of range for {n1} coordinates"
        )));
    }
    if b.len() != n1 - k - 1 {
        return Err(CoxError::invalid(format!(
            "expected {} weights b, got {}",
            n1 - k - 1,
            b.len()
        )));
    }
    if alpha <= 0 || a.iter().chain(b).any(|&x| x <= 0) {
        return Err(CoxError::invalid("inputs must be positive"));
    }
    let top: Vec<i64> = std::iter::once(alpha)
        .chain(std::iter::repeat_n(0, k + 1))
        .chain(b.iter().map(|x| -x))
        .collect();
    let bottom: Vec<i64> = std::iter::once(0).chain(a.iter().copied()).collect();
    let matrix = IntMatrix::from_rows(&[top, bottom])?;
    let vars: Vec<String> = std::iter::once("y".to_string())
        .chain((0..n1).map(|i| format!("x{i}")))
        .collect();
    let ideal = MonomialIdeal::new(vec![(0..=k + 1).collect(), (k + 2..=n1).collect()], n1 + 1)?;
    CoxPresentation::new(vars, matrix, ideal, true)
}

/// `variable -> variable * new_var^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub variable: String,
    pub exponent: BigRational,
}

/// Blow-up map as monomial substitutions, read off the unique weight row in
/// which `new_var` has a nonzero entry.
pub fn blowup_map_description(p: &CoxPresentation, new_var: &str) -> Result<Vec<Substitution>> {
    let j = p
        .var_index(new_var)
        .ok_or_else(|| CoxError::invalid(format!("unknown variable {new_var}")))?;
    let w = p.weights();
    let rows: Vec<usize> = (0..w.rows()).filter(|&i| !w.get(i, j).is_zero()).collect();
    let [row] = rows[..] else {
        return Err(CoxError::invalid(format!(
            "{new_var} must have exactly one nonzero weight"
        )));
    };
    let denom = -w.get(row, j).clone();
    Ok((0..w.cols())
        .filter(|&c| c != j)
        .map(|c| Substitution {
            variable: p.variables()[c].clone(),
            exponent: BigRational::new(w.get(row, c).clone(), denom.clone()),
        })
        .collect())
}

/// Renders substitutions as `x |-> x*w^(p/q)`, one per line.
pub fn format_substitutions(subs: &[Substitution], new_var: &str) -> String {
    subs.iter()
        .map(|s| {
            let e = &s.exponent;
            if e.is_zero() {
                format!("{0} |-> {0}", s.variable)
            } else if e.is_integer() && e.to_integer() == BigInt::from(1) {
                format!("{0} |-> {0}*{new_var}", s.variable)
            } else if e.is_integer() {
                format!("{0} |-> {0}*{new_var}^{e}", s.variable)
            } else {
                format!("{0} |-> {0}*{new_var}^({e})", s.variable)
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Data for one defining equation: an explicit order along the exceptional
/// divisor, or a monomial support from which the order is computed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquationData {
    pub degree: Vec<i64>,
    pub support: Option<Vec<Vec<u64>>>,
    pub order: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CIData {
    pub equations: Vec<EquationData>,
}

/// Minimum over the monomials of the weighted exponent sum, in units of `1/a_k`.
/// Exponent vectors run over `x_0, x_1, y_0..y_m`, optionally followed by the
/// exceptional variable (which does not contribute).
pub fn pullback_order(spec: &BlowupSpec, support: &[Vec<u64>]) -> Result<i64> {
    let w = spec.variable_weights();
    if support.is_empty() {
        return Err(CoxError::invalid("empty support"));
    }
    support
        .iter()
        .map(|mono| {
            if mono.len() != w.len() && mono.len() != w.len() + 1 {
                return Err(CoxError::invalid(format!(
                    "monomial has {} exponents, expected {}",
                    mono.len(),
                    w.len()
                )));
            }
            Ok(mono.iter().zip(&w).map(|(&e, &b)| e as i64 * b).sum())
        })
        .collect::<Result<Vec<i64>>>()
        .map(|v| v.into_iter().min().expect("nonempty"))
}

/// `sum(b)/a_k - 1 - sum(c_e)/a_k`; an explicit order takes precedence over a support.
pub fn discrepancy(spec: &BlowupSpec, ci: &CIData) -> Result<BigRational> {
    let ak = spec.a_k();
    let total: i64 = spec.variable_weights().iter().sum();
    let mut orders = 0i64;
    for (i, e) in ci.equations.iter().enumerate() {
        orders += match (e.order, &e.support) {
            (Some(c), _) => c,
            (None, Some(s)) => pullback_order(spec, s)?,
            (None, None) => {
                return Err(CoxError::invalid(format!(
                    "equation {i} has neither an order nor a support"
                )))
            }
        };
    }
    Ok(BigRational::new(BigInt::from(total - orders), BigInt::from(ak)) - BigRational::from_integer(1.into()))
}

pub const DEFAULT_SEARCH_BOUND: i64 = 1000;

/// Least `b_unknown` in the residue class of `a_unknown` mod `a_k` (or a
/// positive multiple of `a_k` when `unknown == k`) giving the target discrepancy.
pub fn solve_exceptional_weight(
    pattern: &BlowupSpec,
    unknown: usize,
    ci: &CIData,
    target: &BigRational,
    bound: i64,
) -> Result<i64> {
    if unknown >= pattern.b.len() {
        return Err(CoxError::invalid(format!("unknown index {unknown} out of range")));
    }
    let ak = pattern.a_k();
    let start = if unknown == pattern.k {
        ak
    } else {
        let r = pattern.a[unknown].rem_euclid(ak);
        if r == 0 {
            ak
        } else {
            r
        }
    };
    let mut candidate = start;
    while candidate <= bound {
        let mut spec = pattern.clone();
        spec.b[unknown] = candidate;
        if &discrepancy(&spec, ci)? == target {
            return Ok(candidate);
        }
        candidate += ak;
    }
    Err(CoxError::NotFound(format!(
        "no b_{unknown} <= {bound} gives discrepancy {target}"
    )))
}
