//! Exact integer linear algebra on arbitrary-precision matrices.
//!
//! Everything here works over `BigInt`; no fixed-width arithmetic is used, so
//! minors and transforms may grow without bound.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CoxError, Result};

/// Reduced rational number; used for discrepancies and rational row rescalings.
pub type RationalScalar = BigRational;

/// Dense row-major integer matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(CoxError::invalid("matrix must have at least one row and one column"));
        }
        if data.len() != rows * cols {
            return Err(CoxError::invalid(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of machine integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_big_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(CoxError::invalid("ragged rows"));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// The matrix `A_k` obtained by removing column `k` (0-based).
    pub fn delete_column(&self, k: usize) -> Result<IntMatrix> {
        if k >= self.cols {
            return Err(CoxError::invalid(format!(
                "column {k} out of range for {} columns",
                self.cols
            )));
        }
        if self.cols == 1 {
            return Err(CoxError::invalid("cannot delete the only column"));
        }
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != k).collect();
        Ok(self.select_columns(&keep))
    }

    /// Submatrix on the given columns, in the given order. `cols` must be nonempty.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        assert!(!cols.is_empty());
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        assert!(!rows.is_empty());
        let mut data = Vec::with_capacity(self.cols * rows.len());
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        IntMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Entrywise reduction into `[0, p)`.
    pub fn reduce_mod(&self, p: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mod_floor(p)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub(crate) fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    pub(crate) fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(CoxError::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }
}

impl Mul<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A square integer matrix together with its integer inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularWitness {
    matrix: IntMatrix,
    inverse: IntMatrix,
}

impl UnimodularWitness {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let inverse = unimodular_inverse(&matrix)?;
        Ok(UnimodularWitness { matrix, inverse })
    }

    /// Accepts a claimed inverse only if the product really is the identity.
    pub fn with_inverse(matrix: IntMatrix, inverse: IntMatrix) -> Result<Self> {
        let ok = matrix.rows() == matrix.cols()
            && matrix
                .checked_mul(&inverse)
                .map(|p| p.is_identity())
                .unwrap_or(false);
        if !ok {
            return Err(CoxError::invalid("matrix and inverse do not multiply to the identity"));
        }
        Ok(UnimodularWitness { matrix, inverse })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &IntMatrix {
        &self.inverse
    }

    pub fn is_valid(&self) -> bool {
        self.matrix
            .checked_mul(&self.inverse)
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.rows() != m.cols() {
        return Err(CoxError::invalid("determinant of a non-square matrix"));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Rank over Q, by fraction-free elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Row-style Hermite normal form with its transform: returns `(U, H)` with
/// `U * m = H`, `U` unimodular, pivots positive and the entries above each
/// pivot reduced into `[0, pivot)`. Zero rows sit at the bottom.
pub fn hermite_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut prow = 0;
    for col in 0..m.cols() {
        if prow == rows {
            break;
        }
        loop {
            // smallest nonzero entry (lowest row on ties) becomes the pivot
            let best = (prow..rows)
                .filter(|&i| !h.get(i, col).is_zero())
                .min_by(|&a, &b| h.get(a, col).abs().cmp(&h.get(b, col).abs()));
            let Some(best) = best else { break };
            h.swap_rows(prow, best);
            u.swap_rows(prow, best);
            let mut clean = true;
            for i in prow + 1..rows {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = -h.get(i, col).div_floor(h.get(prow, col));
                h.add_row_multiple(i, prow, &q);
                u.add_row_multiple(i, prow, &q);
                if !h.get(i, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(prow, col).is_zero() {
            continue;
        }
        if h.get(prow, col).is_negative() {
            h.negate_row(prow);
            u.negate_row(prow);
        }
        for i in 0..prow {
            let q = -h.get(i, col).div_floor(h.get(prow, col));
            h.add_row_multiple(i, prow, &q);
            u.add_row_multiple(i, prow, &q);
        }
        prow += 1;
    }
    (u, h)
}

/// Canonical representative of the left `GL(r, Z)` orbit of `m`.
pub fn hnf_canonical(m: &IntMatrix) -> IntMatrix {
    hermite_with_transform(m).1
}

pub fn unimodular_row_equivalent(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols() && hnf_canonical(a) == hnf_canonical(b)
}

/// Nonzero Smith invariants `d_1 | d_2 | ...` (as many as the rank).
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remaining entry of row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                } else if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

/// `d_M`: gcd of the absolute values of all `r x r` minors, or 0 when they all vanish.
///
/// Computed as the product of the first `r` Smith invariants (the `r`-th
/// determinantal divisor), which is invariant under unimodular row and column
/// operations.
pub fn minor_gcd(m: &IntMatrix, r: usize) -> Result<BigInt> {
    if r == 0 || r > m.rows().min(m.cols()) {
        return Err(CoxError::invalid(format!(
            "minor size {r} invalid for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let inv = smith_invariants(m);
    if inv.len() < r {
        return Ok(BigInt::zero());
    }
    Ok(inv.iter().take(r).product())
}

/// Full row rank and `d_M = 1`.
pub fn is_standard(m: &IntMatrix) -> bool {
    m.rows() <= m.cols() && minor_gcd(m, m.rows()).map(|d| d.is_one()).unwrap_or(false)
}

/// Whether `m : Z^n -> Z^r` is onto, decided through the Hermite form of the
/// transpose (the image lattice is spanned by the columns).
pub fn is_surjective(m: &IntMatrix) -> bool {
    let r = m.rows();
    let h = hnf_canonical(&m.transpose());
    if h.rows() < r {
        return false;
    }
    (0..h.rows()).all(|i| {
        (0..r).all(|j| {
            let e = h.get(i, j);
            if i == j {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    })
}

/// Basis of the integer right kernel `{x in Z^n : m x = 0}`, one vector per
/// entry, canonicalized by Hermite form. Empty when the kernel is trivial.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (u, h) = hermite_with_transform(&m.transpose());
    let r = (0..h.rows()).take_while(|&i| !h.row_is_zero(i)).count();
    if r == h.rows() {
        return Vec::new();
    }
    let idx: Vec<usize> = (r..h.rows()).collect();
    let k = hnf_canonical(&u.select_rows(&idx));
    k.to_rows()
}

/// Inverse of a unimodular matrix; errors if the matrix is not invertible over Z.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if m.rows() != m.cols() {
        return Err(CoxError::invalid("inverse of a non-square matrix"));
    }
    let (u, h) = hermite_with_transform(m);
    if !h.is_identity() {
        return Err(CoxError::invalid("matrix is not unimodular"));
    }
    Ok(u)
}

pub fn is_prime(n: &BigInt) -> bool {
    smallest_prime_factor(n).is_some_and(|p| &p == n)
}

/// Smallest prime dividing `n` (trial division); `None` for `|n| <= 1`.
pub fn smallest_prime_factor(n: &BigInt) -> Option<BigInt> {
    let n = n.abs();
    if n <= BigInt::one() {
        return None;
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return Some(two);
    }
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            return Some(d);
        }
        d += &two;
    }
    Some(n)
}

fn inverse_mod(x: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = x.mod_floor(p).extended_gcd(p);
    e.gcd.is_one().then(|| e.x.mod_floor(p))
}

/// Row operation `row[target] += coeff * row[source]` over Z/p.
#[derive(Clone, Debug)]
struct Transvection {
    target: usize,
    source: usize,
    coeff: BigInt,
}

fn apply_mod(m: &mut IntMatrix, t: &Transvection, p: &BigInt) {
    for j in 0..m.cols() {
        let v = (m.get(t.target, j) + &t.coeff * m.get(t.source, j)).mod_floor(p);
        m.set(t.target, j, v);
    }
}

/// Lifts `g_bar` in `SL_r(Z/p)` to an integer matrix of determinant exactly 1
/// reducing to `g_bar` modulo `p`.
///
/// `g_bar` is reduced to the identity by transvections; the inverse
/// transvections, lifted to Z, multiply out to the lift.
pub fn sl_lift_mod_p(g_bar: &IntMatrix, p: &BigInt) -> Result<IntMatrix> {
    if g_bar.rows() != g_bar.cols() {
        return Err(CoxError::invalid("lift requires a square matrix"));
    }
    if !is_prime(p) {
        return Err(CoxError::invalid(format!("{p} is not prime")));
    }
    let r = g_bar.rows();
    let mut work = g_bar.reduce_mod(p);
    if !determinant(&work)?.mod_floor(p).is_one() {
        return Err(CoxError::invalid("determinant is not 1 modulo p"));
    }
    let mut ops = Vec::new();
    let mut push = |work: &mut IntMatrix, target: usize, source: usize, coeff: BigInt| {
        let t = Transvection {
            target,
            source,
            coeff: coeff.mod_floor(p),
        };
        if t.coeff.is_zero() {
            return;
        }
        apply_mod(work, &t, p);
        ops.push(t);
    };

    // diagonalize
    for j in 0..r {
        if work.get(j, j).is_zero() {
            let i = (j + 1..r)
                .find(|&i| !work.get(i, j).is_zero())
                .ok_or_else(|| CoxError::Invariant("singular matrix mod p".into()))?;
            push(&mut work, j, i, BigInt::one());
        }
        let inv = inverse_mod(work.get(j, j), p).expect("nonzero mod prime");
        for i in 0..r {
            if i != j && !work.get(i, j).is_zero() {
                let c = -(work.get(i, j) * &inv);
                push(&mut work, i, j, c);
            }
        }
    }
    // push the diagonal into the last entry: diag(a, b) -> diag(1, ab)
    for i in 0..r.saturating_sub(1) {
        if work.get(i, i).is_one() {
            continue;
        }
        push(&mut work, i + 1, i, BigInt::one());
        let c = (BigInt::one() - work.get(i, i)) * inverse_mod(work.get(i + 1, i), p).unwrap();
        push(&mut work, i, i + 1, c);
        let c = -work.get(i + 1, i).clone();
        push(&mut work, i + 1, i, c);
        let c = -(work.get(i, i + 1) * inverse_mod(work.get(i + 1, i + 1), p).unwrap());
        push(&mut work, i, i + 1, c);
    }
    debug_assert!(work.is_identity());

    // g_bar = E_1^{-1} ... E_K^{-1}; right-multiplying by (I - c e_t e_s^T)
    // subtracts c * column t from column s.
    let mut g = IntMatrix::identity(r);
    for t in &ops {
        for i in 0..r {
            let v = g.get(i, t.source) - &t.coeff * g.get(i, t.target);
            g.set(i, t.source, v);
        }
    }
    Ok(g)
}

/// `g_bar` in `SL_r(Z/p)`, built from transvections only, such that
/// `g_bar * m` is in row echelon form modulo `p`. Columns are scanned left to
/// right and the lowest eligible row index is used as pivot.
pub(crate) fn sl_echelon_mod_p(m: &IntMatrix, p: &BigInt) -> IntMatrix {
    let r = m.rows();
    let mut w = m.reduce_mod(p);
    let mut g = IntMatrix::identity(r);
    let mut prow = 0;
    for col in 0..m.cols() {
        if prow == r {
            break;
        }
        let Some(i) = (prow..r).find(|&i| !w.get(i, col).is_zero()) else {
            continue;
        };
        if i != prow {
            let t = Transvection {
                target: prow,
                source: i,
                coeff: BigInt::one(),
            };
            apply_mod(&mut w, &t, p);
            apply_mod(&mut g, &t, p);
        }
        let inv = inverse_mod(w.get(prow, col), p).expect("nonzero mod prime");
        for i in prow + 1..r {
            if w.get(i, col).is_zero() {
                continue;
            }
            let t = Transvection {
                target: i,
                source: prow,
                coeff: (-(w.get(i, col) * &inv)).mod_floor(p),
            };
            apply_mod(&mut w, &t, p);
            apply_mod(&mut g, &t, p);
        }
        prow += 1;
    }
    g
}

/// One pass of the standardization induction: `next = diag(1,..,1,1/prime) * lift * previous`.
#[derive(Clone, Debug)]
pub(crate) struct PrimeReduction {
    pub lift: UnimodularWitness,
    pub row: usize,
    pub prime: BigInt,
}

pub(crate) fn standardize_steps(m: &IntMatrix) -> Result<(Vec<PrimeReduction>, IntMatrix)> {
    let r = m.rows();
    let rk = rank(m);
    if rk != r {
        return Err(CoxError::RankDeficient { rank: rk, rows: r });
    }
    let mut steps = Vec::new();
    let mut cur = m.clone();
    let mut d = minor_gcd(&cur, r)?;
    while !d.is_one() {
        let p = smallest_prime_factor(&d).expect("d > 1");
        let g_bar = sl_echelon_mod_p(&cur, &p);
        let g = sl_lift_mod_p(&g_bar, &p)?;
        let mut next = &g * &cur;
        let last = r - 1;
        if !next.row(last).iter().all(|x| x.is_multiple_of(&p)) {
            return Err(CoxError::Invariant(format!(
                "last row of the lifted echelon form is not divisible by {p}"
            )));
        }
        for j in 0..next.cols() {
            let v = next.get(last, j) / &p;
            next.set(last, j, v);
        }
        let nd = minor_gcd(&next, r)?;
        if nd * &p != d {
            return Err(CoxError::Invariant("d_M did not drop by the chosen prime".into()));
        }
        steps.push(PrimeReduction {
            lift: UnimodularWitness::new(g)?,
            row: last,
            prime: p.clone(),
        });
        d /= &p;
        cur = next;
    }
    Ok((steps, cur))
}

/// Writes a full-rank `m` as `transform * n` with `n` standard.
///
/// Prime factors of `d_M` are removed in increasing order; `transform` is an
/// integer matrix with nonzero determinant (a product of `SL_r(Z)` factors and
/// diagonal prime scalings), not necessarily unimodular.
pub fn standardize(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let (steps, n) = standardize_steps(m)?;
    let r = m.rows();
    let mut transform = IntMatrix::identity(r);
    for s in &steps {
        let mut scaled = s.lift.inverse().clone();
        for i in 0..r {
            let v = scaled.get(i, s.row) * &s.prime;
            scaled.set(i, s.row, v);
        }
        transform = &transform * &scaled;
    }
    Ok((transform, n))
}

/// Solves `sum_k x_k * columns[k] = rhs` over Q. Returns `None` if `rhs` is
/// not in the span; free coordinates (dependent columns) are set to zero.
pub fn solve_rational(columns: &[Vec<BigInt>], rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    let k = columns.len();
    let d = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from_integer(c[i].clone()))
                .collect();
            row.push(BigRational::from_integer(rhs[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..k {
        let Some(p) = (prow..d).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(prow, p);
        let inv = a[prow][col].recip();
        for v in a[prow].iter_mut() {
            *v *= &inv;
        }
        for i in 0..d {
            if i != prow && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..=k {
                    let t = &f * &a[prow][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    if a.iter().skip(prow).any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][k].clone();
    }
    Some(x)
}

/// gcd of the entries (0 for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `v` divided by the gcd of its entries; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}
