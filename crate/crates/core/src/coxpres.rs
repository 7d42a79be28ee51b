//! Cox presentations `(I, A)` and the well-forming process.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CoxError, Result};
use crate::intlattice::{
    determinant, hermite_with_transform, is_prime, is_standard, minor_gcd, rank,
    sl_echelon_mod_p, sl_lift_mod_p, smallest_prime_factor, standardize_steps, IntMatrix,
    RationalScalar, UnimodularWitness,
};

/// Intersection of coordinate primes `(x_i : i in S)`, one set `S` per component.
///
/// Components are kept sorted, deduplicated and minimal (a component that
/// contains another is redundant in the intersection and is dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    components: Vec<Vec<usize>>,
}

impl MonomialIdeal {
    pub fn new(components: Vec<Vec<usize>>, num_vars: usize) -> Result<Self> {
        if components.is_empty() {
            return Err(CoxError::invalid("irrelevant ideal needs at least one component"));
        }
        for c in &components {
            if c.is_empty() {
                return Err(CoxError::invalid("empty component in irrelevant ideal"));
            }
            if let Some(&bad) = c.iter().find(|&&i| i >= num_vars) {
                return Err(CoxError::invalid(format!(
                    "variable index {bad} out of range for {num_vars} variables"
                )));
            }
        }
        Ok(Self::from_sets(components))
    }

    fn from_sets(sets: Vec<Vec<usize>>) -> Self {
        let sets: Vec<BTreeSet<usize>> = sets.into_iter().map(|c| c.into_iter().collect()).collect();
        MonomialIdeal {
            components: minimize(sets),
        }
    }

    /// The ideal generated by squarefree monomials with the given supports.
    pub fn from_generators(generators: &[Vec<usize>], num_vars: usize) -> Result<Self> {
        if generators.is_empty() || generators.iter().any(Vec::is_empty) {
            return Err(CoxError::invalid("generators must be nonempty monomials"));
        }
        if generators.iter().flatten().any(|&i| i >= num_vars) {
            return Err(CoxError::invalid("generator index out of range"));
        }
        Self::new(minimal_transversals(generators), num_vars)
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Supports of the minimal squarefree monomial generators.
    pub fn generators(&self) -> Vec<Vec<usize>> {
        minimal_transversals(&self.components)
    }

    /// Whether the squarefree monomial with this support lies in the ideal.
    pub fn contains_monomial(&self, support: &[usize]) -> bool {
        self.components
            .iter()
            .all(|c| c.iter().any(|i| support.contains(i)))
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MonomialIdeal {
        Self::from_sets(
            self.components
                .iter()
                .map(|c| c.iter().map(|&i| perm[i]).collect())
                .collect(),
        )
    }

    pub fn max_index(&self) -> usize {
        self.components.iter().flatten().copied().max().unwrap_or(0)
    }
}

fn minimize(sets: Vec<BTreeSet<usize>>) -> Vec<Vec<usize>> {
    let mut sets: Vec<BTreeSet<usize>> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    sets.sort_by_key(BTreeSet::len);
    let mut kept: Vec<BTreeSet<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    let mut out: Vec<Vec<usize>> = kept.into_iter().map(|s| s.into_iter().collect()).collect();
    out.sort();
    out
}

/// Minimal sets meeting every given set (Berge's incremental algorithm).
pub fn minimal_transversals(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut current: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for s in sets {
        let mut next = Vec::new();
        for t in &current {
            if s.iter().any(|i| t.contains(i)) {
                next.push(t.clone());
            } else {
                for &v in s {
                    let mut u = t.clone();
                    u.insert(v);
                    next.push(u);
                }
            }
        }
        current = minimize(next).into_iter().map(|v| v.into_iter().collect()).collect();
    }
    minimize(current)
}

/// Cox data: named variables, a full-rank weight matrix and an irrelevant ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxPresentation {
    variables: Vec<String>,
    weights: IntMatrix,
    irrelevant: MonomialIdeal,
    stacky: bool,
}

impl CoxPresentation {
    pub fn new(
        variables: Vec<String>,
        weights: IntMatrix,
        irrelevant: MonomialIdeal,
        stacky: bool,
    ) -> Result<Self> {
        let n = weights.cols();
        if variables.len() != n {
            return Err(CoxError::invalid(format!(
                "{} variable names for {n} columns",
                variables.len()
            )));
        }
        if variables.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(CoxError::invalid("variable names must be distinct"));
        }
        let rk = rank(&weights);
        if rk != weights.rows() {
            return Err(CoxError::RankDeficient {
                rank: rk,
                rows: weights.rows(),
            });
        }
        if let Some(j) = (0..n).find(|&j| weights.column(j).iter().all(Zero::is_zero)) {
            return Err(CoxError::invalid(format!("column {j} is zero")));
        }
        if irrelevant.max_index() >= n {
            return Err(CoxError::invalid("irrelevant ideal index out of range"));
        }
        if !stacky && !(is_standard(&weights) && is_well_formed(&weights)?) {
            return Err(CoxError::NotWellFormed);
        }
        Ok(CoxPresentation {
            variables,
            weights,
            irrelevant,
            stacky,
        })
    }

    /// Presentation with default variable names `x0, x1, ...`.
    pub fn unnamed(weights: IntMatrix, components: Vec<Vec<usize>>, stacky: bool) -> Result<Self> {
        let n = weights.cols();
        let vars = (0..n).map(|i| format!("x{i}")).collect();
        let ideal = MonomialIdeal::new(components, n)?;
        Self::new(vars, weights, ideal, stacky)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &IntMatrix {
        &self.weights
    }

    pub fn irrelevant(&self) -> &MonomialIdeal {
        &self.irrelevant
    }

    pub fn is_stacky(&self) -> bool {
        self.stacky
    }

    pub fn rank(&self) -> usize {
        self.weights.rows()
    }

    pub fn num_vars(&self) -> usize {
        self.weights.cols()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

impl fmt::Display for CoxPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_presentation(self))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellFormingStep {
    /// Left multiplication by a unimodular matrix.
    RowTransform(UnimodularWitness),
    /// Multiply `column` by the prime `factor`; legal when `factor` divides
    /// every entry of `row` outside `column`.
    ColumnScale {
        column: usize,
        factor: BigInt,
        row: usize,
    },
    /// Divide every entry of `row` by `factor`.
    RowDivide { row: usize, factor: BigInt },
    /// Multiply row `i` by `factors[i]`; the result must stay integral.
    RowRescaleRational(Vec<RationalScalar>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WellFormingCertificate {
    pub steps: Vec<WellFormingStep>,
}

impl WellFormingCertificate {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Applies the steps to `input`, checking each step's hypotheses.
    pub fn replay(&self, input: &IntMatrix) -> Option<IntMatrix> {
        let mut cur = input.clone();
        for step in &self.steps {
            cur = apply_step(&cur, step)?;
        }
        Some(cur)
    }
}

fn apply_step(m: &IntMatrix, step: &WellFormingStep) -> Option<IntMatrix> {
    match step {
        WellFormingStep::RowTransform(w) => {
            if !w.is_valid() || w.matrix().cols() != m.rows() {
                return None;
            }
            Some(w.matrix() * m)
        }
        WellFormingStep::ColumnScale { column, factor, row } => {
            if *column >= m.cols() || *row >= m.rows() || !is_prime(factor) {
                return None;
            }
            let legal = (0..m.cols())
                .filter(|&j| j != *column)
                .all(|j| m.get(*row, j).is_multiple_of(factor));
            if !legal {
                return None;
            }
            let mut out = m.clone();
            for i in 0..m.rows() {
                out.set(i, *column, m.get(i, *column) * factor);
            }
            Some(out)
        }
        WellFormingStep::RowDivide { row, factor } => {
            if *row >= m.rows() || factor.is_zero() {
                return None;
            }
            if !m.row(*row).iter().all(|x| x.is_multiple_of(factor)) {
                return None;
            }
            let mut out = m.clone();
            for j in 0..m.cols() {
                out.set(*row, j, m.get(*row, j) / factor);
            }
            Some(out)
        }
        WellFormingStep::RowRescaleRational(factors) => {
            if factors.len() != m.rows() || factors.iter().any(Zero::is_zero) {
                return None;
            }
            let mut out = m.clone();
            for (i, f) in factors.iter().enumerate() {
                for j in 0..m.cols() {
                    let v = BigRational::from_integer(m.get(i, j).clone()) * f;
                    if !v.is_integer() {
                        return None;
                    }
                    out.set(i, j, v.to_integer());
                }
            }
            Some(out)
        }
    }
}

/// Replays `cert` on `input`; true iff every step is legal and the result is `output`.
pub fn verify_certificate(
    input: &IntMatrix,
    cert: &WellFormingCertificate,
    output: &IntMatrix,
) -> bool {
    cert.replay(input).is_some_and(|m| &m == output)
}

/// Whether every column-deleted submatrix of the standard matrix `a` is standard.
pub fn is_well_formed(a: &IntMatrix) -> Result<bool> {
    let r = a.rows();
    if !is_standard(a) {
        let d = if rank(a) == r && r <= a.cols() {
            minor_gcd(a, r)?
        } else {
            BigInt::zero()
        };
        return Err(CoxError::MustStandardizeFirst(d.to_string()));
    }
    if a.cols() == r {
        return Ok(false);
    }
    for k in 0..a.cols() {
        if !is_standard(&a.delete_column(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standardizes and well-forms `m`, returning the canonical (Hermite form)
/// result together with a certificate that replays `m` onto it.
pub fn well_form_matrix(m: &IntMatrix) -> Result<(IntMatrix, WellFormingCertificate)> {
    let mut steps = Vec::new();
    let (reductions, mut cur) = standardize_steps(m)?;
    for red in reductions {
        if !red.lift.matrix().is_identity() {
            steps.push(WellFormingStep::RowTransform(red.lift));
        }
        steps.push(WellFormingStep::RowDivide {
            row: red.row,
            factor: red.prime,
        });
    }

    let r = cur.rows();
    let n = cur.cols();
    loop {
        if n == r {
            return Err(CoxError::Unsupported(
                "square weight matrix has no well-formed model".into(),
            ));
        }
        let mut target = None;
        for k in 0..n {
            let d = minor_gcd(&cur.delete_column(k)?, r)?;
            if !d.is_one() {
                target = Some((k, d));
                break;
            }
        }
        let Some((k, d)) = target else { break };
        if d.is_zero() {
            return Err(CoxError::Unsupported(format!(
                "deleting column {k} drops the rank; the class group would have torsion"
            )));
        }
        let q = smallest_prime_factor(&d).expect("d > 1");
        let ak = cur.delete_column(k)?;
        let g = sl_lift_mod_p(&sl_echelon_mod_p(&ak, &q), &q)?;
        let ga = &g * &cur;
        let last = r - 1;
        let ok = (0..n)
            .filter(|&j| j != k)
            .all(|j| ga.get(last, j).is_multiple_of(&q))
            && !ga.get(last, k).is_multiple_of(&q);
        if !ok {
            return Err(CoxError::Invariant(format!(
                "row {last} does not isolate column {k} modulo {q}"
            )));
        }
        let mut local = Vec::new();
        if !g.is_identity() {
            local.push(WellFormingStep::RowTransform(UnimodularWitness::new(g)?));
        }
        local.push(WellFormingStep::ColumnScale {
            column: k,
            factor: q.clone(),
            row: last,
        });
        local.push(WellFormingStep::RowDivide {
            row: last,
            factor: q,
        });
        for s in &local {
            cur = apply_step(&cur, s)
                .ok_or_else(|| CoxError::Invariant("well-forming step rejected".into()))?;
        }
        let nd = minor_gcd(&cur.delete_column(k)?, r)?;
        if nd >= d {
            return Err(CoxError::Invariant(format!(
                "d_A_{k} did not decrease ({d} -> {nd})"
            )));
        }
        steps.extend(local);
    }

    let (u, h) = hermite_with_transform(&cur);
    if !u.is_identity() {
        steps.push(WellFormingStep::RowTransform(UnimodularWitness::new(u)?));
    }
    Ok((h, WellFormingCertificate { steps }))
}

/// Well-forms a presentation. The irrelevant ideal and variables are kept.
pub fn well_form(p: &CoxPresentation) -> Result<(CoxPresentation, WellFormingCertificate)> {
    let (w, cert) = well_form_matrix(p.weights())?;
    let out = CoxPresentation {
        variables: p.variables.clone(),
        weights: w,
        irrelevant: p.irrelevant.clone(),
        stacky: false,
    };
    debug_assert!(is_well_formed(&out.weights).unwrap_or(false));
    Ok((out, cert))
}

/// Coarse moduli space of the stack `[I, A]`: the well-formed model.
pub fn coarse_moduli(p: &CoxPresentation) -> Result<CoxPresentation> {
    well_form(p).map(|(q, _)| q)
}

/// Classical well-forming of weighted projective space weights.
pub fn wps_well_form(weights: &[u64]) -> Result<Vec<u64>> {
    if weights.is_empty() {
        return Err(CoxError::invalid("empty weight list"));
    }
    if weights.contains(&0) {
        return Err(CoxError::invalid("weights must be positive"));
    }
    let mut w = weights.to_vec();
    loop {
        let mut changed = false;
        let g = w.iter().fold(0, |acc, &x| acc.gcd(&x));
        if g > 1 {
            w.iter_mut().for_each(|x| *x /= g);
            changed = true;
        }
        for i in 0..w.len() {
            let h = w
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0u64, |acc, (_, &x)| acc.gcd(&x));
            if h > 1 {
                for (j, x) in w.iter_mut().enumerate() {
                    if j != i {
                        *x /= h;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if w.len() == 1 {
        w[0] = 1;
    }
    Ok(w)
}

/// Above this many variables the permutation search only pairs identical columns.
const EXHAUSTIVE_LIMIT: usize = 12;

/// Whether two presentations define the same quotient up to renaming variables.
///
/// Both sides are well-formed first. For standard matrices, unimodular row
/// equivalence is the same as having maximal minors that agree up to one
/// global sign, which is what the backtracking search prunes on.
pub fn presentations_equivalent(p: &CoxPresentation, q: &CoxPresentation) -> bool {
    if p.num_vars() != q.num_vars() || p.rank() != q.rank() {
        return false;
    }
    let (Ok((p2, _)), Ok((q2, _))) = (well_form(p), well_form(q)) else {
        return false;
    };
    let a = p2.weights();
    let b = q2.weights();
    let n = a.cols();
    let r = a.rows();

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| n <= EXHAUSTIVE_LIMIT || a.column(i) == b.column(j))
                .collect()
        })
        .collect();

    let minors = |m: &IntMatrix| -> HashMap<Vec<usize>, BigInt> {
        (0..n)
            .combinations(r)
            .map(|s| {
                let d = determinant(&m.select_columns(&s)).expect("square");
                (s, d)
            })
            .collect()
    };
    let ma = minors(a);
    let mb = minors(b);
    // subsets whose largest element is i, checked when i gets assigned
    let mut closing: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for s in ma.keys() {
        closing[*s.last().unwrap()].push(s.clone());
    }

    let target_ideal = q2.irrelevant().clone();
    let mut search = Search {
        ma: &ma,
        mb: &mb,
        closing: &closing,
        candidates: &candidates,
        perm: vec![usize::MAX; n],
        used: vec![false; n],
        sign: None,
        check: &|perm: &[usize]| {
            let permuted = b.select_columns(perm);
            crate::intlattice::hnf_canonical(&permuted) == *a
                && p2.irrelevant().permute(perm) == target_ideal
        },
    };
    search.run(0)
}

struct Search<'a> {
    ma: &'a HashMap<Vec<usize>, BigInt>,
    mb: &'a HashMap<Vec<usize>, BigInt>,
    closing: &'a [Vec<Vec<usize>>],
    candidates: &'a [Vec<usize>],
    perm: Vec<usize>,
    used: Vec<bool>,
    sign: Option<bool>,
    check: &'a dyn Fn(&[usize]) -> bool,
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> bool {
        let n = self.perm.len();
        if i == n {
            return (self.check)(&self.perm);
        }
        for ci in 0..self.candidates[i].len() {
            let j = self.candidates[i][ci];
            if self.used[j] {
                continue;
            }
            self.perm[i] = j;
            let saved = self.sign;
            if self.consistent(i) {
                self.used[j] = true;
                if self.run(i + 1) {
                    return true;
                }
                self.used[j] = false;
            }
            self.sign = saved;
        }
        self.perm[i] = usize::MAX;
        false
    }

    fn consistent(&mut self, i: usize) -> bool {
        for s in &self.closing[i] {
            let image: Vec<usize> = s.iter().map(|&k| self.perm[k]).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            let parity = permutation_parity(&image);
            let mut vb = self.mb[&sorted].clone();
            if parity {
                vb = -vb;
            }
            let va = &self.ma[s];
            if va.abs() != vb.abs() {
                return false;
            }
            if va.is_zero() {
                continue;
            }
            let same = va.is_positive() == vb.is_positive();
            match self.sign {
                None => self.sign = Some(same),
                Some(sg) if sg != same => return false,
                _ => {}
            }
        }
        true
    }
}

/// True when sorting `v` takes an odd number of transpositions.
fn permutation_parity(v: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                odd = !odd;
            }
        }
    }
    odd
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn f2_a() -> IntMatrix {
        m(&[&[3, 3, 3, 0, -2], &[1, 1, 1, 2, 0]])
    }

    fn f2_ideal() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2], vec![3, 4]]
    }

    #[test]
    fn transversals_of_two_blocks() {
        let t = minimal_transversals(&[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(t.len(), 6);
        assert!(t.contains(&vec![0, 3]));
    }

    #[test]
    fn ideal_normalizes_redundant_components() {
        let i = MonomialIdeal::new(vec![vec![3, 4], vec![0, 1, 2], vec![0, 1, 2, 3]], 5).unwrap();
        assert_eq!(i.components(), &[vec![0, 1, 2], vec![3, 4]]);
        let j = MonomialIdeal::from_generators(&i.generators(), 5).unwrap();
        assert_eq!(i, j);
        assert!(MonomialIdeal::new(vec![vec![5]], 5).is_err());
        assert!(MonomialIdeal::new(vec![vec![]], 5).is_err());
    }

    #[test]
    fn well_formed_examples() {
        assert!(is_well_formed(&m(&[&[1, 1, 1, 0, -2], &[0, 0, 0, 1, 1]])).unwrap());
        let a_s = m(&[&[3, 3, 3, 0, -2], &[-1, -1, -1, 1, 1]]);
        assert!(!is_well_formed(&a_s).unwrap());
        assert!(is_well_formed(&m(&[&[1, 1, 1, 1]])).unwrap());
        assert!(matches!(
            is_well_formed(&f2_a()),
            Err(CoxError::MustStandardizeFirst(_))
        ));
    }

    #[test]
    fn well_form_example_f2() {
        let p = CoxPresentation::unnamed(f2_a(), f2_ideal(), true).unwrap();
        let (q, cert) = well_form(&p).unwrap();
        let expected = m(&[&[1, 1, 1, 0, -2], &[0, 0, 0, 1, 1]]);
        assert!(crate::intlattice::unimodular_row_equivalent(q.weights(), &expected));
        assert!(verify_certificate(p.weights(), &cert, q.weights()));
        assert_eq!(q.irrelevant(), p.irrelevant());
        assert!(!q.is_stacky());
    }

    #[test]
    fn well_form_is_idempotent() {
        let p = CoxPresentation::unnamed(f2_a(), f2_ideal(), true).unwrap();
        let (q, _) = well_form(&p).unwrap();
        let (q2, cert) = well_form(&q).unwrap();
        assert!(cert.is_empty());
        assert_eq!(q2, q);
    }

    #[test]
    fn certificate_negative_cases() {
        let a = f2_a();
        let (out, cert) = well_form_matrix(&a).unwrap();
        assert!(!verify_certificate(&a, &cert, &a));
        let bad = WellFormingCertificate {
            steps: vec![WellFormingStep::ColumnScale {
                column: 0,
                factor: BigInt::from(2),
                row: 0,
            }],
        };
        assert!(bad.replay(&a).is_none());
        assert!(verify_certificate(&a, &cert, &out));
    }

    #[test]
    fn rational_rescale_replays() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let cert = WellFormingCertificate {
            steps: vec![WellFormingStep::RowRescaleRational(vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(1.into()),
            ])],
        };
        assert!(verify_certificate(&a, &cert, &m(&[&[1, 2], &[1, 3]])));
        let cert = WellFormingCertificate {
            steps: vec![WellFormingStep::RowRescaleRational(vec![
                BigRational::new(1.into(), 3.into()),
                BigRational::from_integer(1.into()),
            ])],
        };
        assert!(cert.replay(&a).is_none());
    }

    #[test]
    fn wps_examples() {
        assert_eq!(wps_well_form(&[2, 2, 2]).unwrap(), vec![1, 1, 1]);
        assert_eq!(wps_well_form(&[1, 2, 2]).unwrap(), vec![1, 1, 1]);
        assert_eq!(wps_well_form(&[3, 3, 5]).unwrap(), vec![1, 1, 5]);
        assert_eq!(wps_well_form(&[7]).unwrap(), vec![1]);
        assert!(wps_well_form(&[]).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let p = CoxPresentation::unnamed(f2_a(), f2_ideal(), true).unwrap();
        let a_prime = m(&[&[1, 1, 1, 0, -2], &[0, 0, 0, 1, 1]]);
        let q = CoxPresentation::unnamed(a_prime, f2_ideal(), false).unwrap();
        assert!(presentations_equivalent(&p, &q));

        let p112 = CoxPresentation::unnamed(m(&[&[1, 1, 2]]), vec![vec![0, 1, 2]], false).unwrap();
        let p111 = CoxPresentation::unnamed(m(&[&[1, 1, 1]]), vec![vec![0, 1, 2]], false).unwrap();
        assert!(!presentations_equivalent(&p112, &p111));
        let p211 = CoxPresentation::unnamed(m(&[&[2, 1, 1]]), vec![vec![0, 1, 2]], false).unwrap();
        assert!(presentations_equivalent(&p112, &p211));
    }

    #[test]
    fn equivalence_respects_ideal() {
        let w = m(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let p = CoxPresentation::unnamed(w.clone(), vec![vec![0, 1], vec![2, 3]], false).unwrap();
        let q = CoxPresentation::unnamed(w, vec![vec![0, 1, 2, 3]], true).unwrap();
        assert!(!presentations_equivalent(&p, &q));
    }

    #[test]
    fn parity() {
        assert!(!permutation_parity(&[0, 1, 2]));
        assert!(permutation_parity(&[1, 0, 2]));
        assert!(!permutation_parity(&[1, 2, 0]));
    }
}
