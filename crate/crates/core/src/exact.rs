//! Exact integer layer: binomial coefficients with a zero convention and
//! fraction-free determinants over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// Largest order accepted by [`determinant_cofactor`].
pub const COFACTOR_MAX_ORDER: usize = 10;

/// `n choose k` for arbitrary integer arguments.
///
/// Returns `n! / (k! (n-k)!)` when `0 <= k <= n` and **zero otherwise**,
/// including for negative `n`. The determinant formulas in [`crate::schubert`]
/// depend on this convention: `binomial(0, 0) == 1` while
/// `binomial(-s, -s) == 0` for `s > 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // acc * (n - m) / (m + 1) is exact at every step.
    for m in 0..k {
        acc *= n - m;
        acc /= m + 1;
    }
    acc
}

/// A square matrix of big integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    /// Builds the matrix whose `(p, q)` entry is `f(p, q)`, zero-based.
    pub fn from_fn<F>(order: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut entries = Vec::with_capacity(order * order);
        for p in 0..order {
            for q in 0..order {
                entries.push(f(p, q));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, Error> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::NotSquare);
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.order + col] = value;
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.order).map(|r| self.get(r, col).clone()).collect()
    }

    /// The leading principal `k x k` submatrix.
    pub fn leading_minor(&self, k: usize) -> IntMatrix {
        assert!(k <= self.order);
        IntMatrix::from_fn(k, |p, q| self.get(p, q).clone())
    }

    /// The submatrix with `row` and `col` deleted.
    pub fn without(&self, row: usize, col: usize) -> IntMatrix {
        let n = self.order;
        assert!(n > 0);
        IntMatrix::from_fn(n - 1, |p, q| {
            let p = if p >= row { p + 1 } else { p };
            let q = if q >= col { q + 1 } else { q };
            self.get(p, q).clone()
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.order).map(|r| self.row(r).to_vec()).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.order).map(|r| {
                self.row(r)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Pivots are taken as the first nonzero entry at or below the diagonal in
/// the current column; every row swap flips the sign. The empty matrix has
/// determinant one.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion along the first row.
///
/// Factorial cost; used as an independent oracle for [`determinant`].
pub fn determinant_cofactor(m: &IntMatrix) -> Result<BigInt, Error> {
    if m.order() > COFACTOR_MAX_ORDER {
        return Err(Error::SizeGuard {
            order: m.order(),
            max: COFACTOR_MAX_ORDER,
        });
    }
    Ok(laplace(m))
}

fn laplace(m: &IntMatrix) -> BigInt {
    match m.order() {
        0 => BigInt::one(),
        1 => m.get(0, 0).clone(),
        n => {
            let mut acc = BigInt::zero();
            for col in 0..n {
                let entry = m.get(0, col);
                if entry.is_zero() {
                    continue;
                }
                let minor = laplace(&m.without(0, col));
                if col % 2 == 0 {
                    acc += entry * minor;
                } else {
                    acc -= entry * minor;
                }
            }
            acc
        }
    }
}

/// Sign of a permutation given as images `perm[k]` of `0..n`.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}
