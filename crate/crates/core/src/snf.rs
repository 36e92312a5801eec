//! Smith normal form over the integers.
//!
//! Elimination first runs on `i64` with checked arithmetic and restarts on
//! `BigInt` when any intermediate entry overflows, so results are always
//! exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer entry type usable by the elimination routine.
trait Entry: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn is_neg(&self) -> bool;
    fn sub_mul(&self, q: &Self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn div_trunc(&self, o: &Self) -> Self;
    fn divides(&self, o: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_cmp(&self, o: &Self) -> Ordering {
        self.unsigned_abs().cmp(&o.unsigned_abs())
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn sub_mul(&self, q: &Self, o: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*o)?)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_trunc(&self, o: &Self) -> Self {
        self / o
    }
    fn divides(&self, o: &Self) -> bool {
        o % self == 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_cmp(&self, o: &Self) -> Ordering {
        self.magnitude().cmp(o.magnitude())
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn sub_mul(&self, q: &Self, o: &Self) -> Option<Self> {
        Some(self - q * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_trunc(&self, o: &Self) -> Self {
        self / o
    }
    fn divides(&self, o: &Self) -> bool {
        o.is_multiple_of(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Result of a Smith decomposition `P * A * Q = D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    /// Nonzero diagonal entries of `D`, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
    /// Present when requested: `P` (rows x rows).
    pub p: Option<Vec<Vec<BigInt>>>,
    /// Present when requested: `Q^-1` (cols x cols).
    pub q_inv: Option<Vec<Vec<BigInt>>>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct Work<T> {
    a: Vec<Vec<T>>,
    p: Option<Vec<Vec<T>>>,
    q_inv: Option<Vec<Vec<T>>>,
}

fn identity<T: Entry>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

impl<T: Entry> Work<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(p) = &mut self.p {
            p.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        // A <- A E with E a swap; Q^-1 <- E^-1 Q^-1 swaps rows.
        if let Some(qi) = &mut self.q_inv {
            qi.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &T) -> Option<()> {
        for k in 0..self.a[0].len() {
            self.a[i][k] = self.a[i][k].sub_mul(q, &self.a[j][k])?;
        }
        if let Some(p) = &mut self.p {
            for k in 0..p[0].len() {
                p[i][k] = p[i][k].sub_mul(q, &p[j][k])?;
            }
        }
        Some(())
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &T) -> Option<()> {
        for row in &mut self.a {
            row[i] = row[i].sub_mul(q, &row[j])?;
        }
        // A <- A E with E = I - q e_j e_i^T; Q^-1 <- E^-1 Q^-1 = (I + q e_j e_i^T) Q^-1,
        // i.e. row_j(Q^-1) += q * row_i(Q^-1).
        if let Some(qi) = &mut self.q_inv {
            for k in 0..qi[0].len() {
                let neg = q.neg()?;
                qi[j][k] = qi[j][k].sub_mul(&neg, &qi[i][k])?;
            }
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for k in 0..self.a[0].len() {
            self.a[i][k] = self.a[i][k].neg()?;
        }
        if let Some(p) = &mut self.p {
            for k in 0..p[0].len() {
                p[i][k] = p[i][k].neg()?;
            }
        }
        Some(())
    }

    fn row_add(&mut self, i: usize, j: usize) -> Option<()> {
        let minus_one = T::one().neg()?;
        self.row_sub(i, j, &minus_one)
    }
}

fn eliminate<T: Entry>(a: Vec<Vec<T>>, cols: usize, track: bool) -> Option<(Vec<T>, Work<T>)> {
    let rows = a.len();
    let mut w = Work {
        p: track.then(|| identity(rows)),
        q_inv: track.then(|| identity(cols)),
        a,
    };
    let mut diag = Vec::new();
    if rows == 0 || cols == 0 {
        return Some((diag, w));
    }
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| w.a[i][j].abs_cmp(&w.a[bi][bj]) == Ordering::Less)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_trunc(&w.a[t][t]);
                w.row_sub(i, t, &q)?;
                if !w.a[i][t].is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_trunc(&w.a[t][t]);
                w.col_sub(j, t, &q)?;
                if !w.a[t][j].is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !w.a[t][t].divides(&w.a[i][j])));
            match bad {
                Some(i) => w.row_add(t, i)?,
                None => break,
            }
        }
        if w.a[t][t].is_neg() {
            w.negate_row(t)?;
        }
        diag.push(w.a[t][t].clone());
    }
    Some((diag, w))
}

fn to_big_matrix<T: Entry>(m: Option<Vec<Vec<T>>>) -> Option<Vec<Vec<BigInt>>> {
    m.map(|m| m.iter().map(|r| r.iter().map(Entry::to_big).collect()).collect())
}

/// Smith normal form of `a` (given row-major, `cols` columns). With `track`,
/// also returns `P` and `Q^-1`.
pub fn smith_normal_form(a: &[Vec<i64>], cols: usize, track: bool) -> Smith {
    let rows = a.len();
    if let Some((diag, w)) = eliminate(a.to_vec(), cols, track) {
        return Smith {
            diagonal: diag.iter().map(Entry::to_big).collect(),
            rows,
            cols,
            p: to_big_matrix(w.p),
            q_inv: to_big_matrix(w.q_inv),
        };
    }
    let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (diag, w) = eliminate(big, cols, track).expect("BigInt arithmetic cannot overflow");
    Smith {
        diagonal: diag,
        rows,
        cols,
        p: w.p,
        q_inv: w.q_inv,
    }
}

/// Same as [`smith_normal_form`] on a `BigInt` matrix.
pub fn smith_normal_form_big(a: &[Vec<BigInt>], cols: usize, track: bool) -> Smith {
    let (diag, w) = eliminate(a.to_vec(), cols, track).expect("BigInt arithmetic cannot overflow");
    Smith {
        diagonal: diag,
        rows: a.len(),
        cols,
        p: w.p,
        q_inv: w.q_inv,
    }
}

/// Exact rank of an integer matrix.
pub fn rank(a: &[Vec<i64>], cols: usize) -> usize {
    smith_normal_form(a, cols, false).rank()
}

/// Matrix-vector product over `BigInt`.
pub fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Converts to `u64` when it fits (for display).
pub fn small(x: &BigInt) -> Option<u64> {
    x.to_u64()
}
