//! Schubert data and the closed-form determinant formulas for the
//! multiplicity `M_j(i)` of a point of the cell `X_j°` on the Schubert
//! variety `X_i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, ValidationError};
use crate::exact::{binomial, determinant, IntMatrix};

/// A validated problem instance `(n, d, i, j)`.
///
/// Both `i` and `j` are strictly increasing in `[1, n]`, have length
/// `d >= 1`, and satisfy `j_k <= i_k` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertDatum {
    n: i64,
    i: Vec<i64>,
    j: Vec<i64>,
}

impl SchubertDatum {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.i.len()
    }

    pub fn i(&self) -> &[i64] {
        &self.i
    }

    pub fn j(&self) -> &[i64] {
        &self.j
    }

    /// `i_k` with one-based `k`.
    pub fn i_at(&self, k: usize) -> i64 {
        self.i[k - 1]
    }

    /// True when `j = (1, 2, ..., d)`.
    pub fn is_special(&self) -> bool {
        self.j.iter().zip(1..).all(|(&jk, k)| jk == k)
    }
}

impl fmt::Display for SchubertDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} d={} i={} j={}",
            self.n,
            self.d(),
            join(&self.i),
            join(&self.j)
        )
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks the instance and builds a [`SchubertDatum`].
pub fn validate(n: i64, d: i64, i: &[i64], j: &[i64]) -> Result<SchubertDatum, ValidationError> {
    if n < 1 {
        return Err(ValidationError::BadDimensions(format!(
            "n = {n} must be positive"
        )));
    }
    if d < 1 || d > n {
        return Err(ValidationError::BadDimensions(format!(
            "d = {d} must satisfy 1 <= d <= n = {n}"
        )));
    }
    for (name, v) in [('i', i), ('j', j)] {
        if v.len() as i64 != d {
            return Err(ValidationError::BadDimensions(format!(
                "{name} has {} entries, expected d = {d}",
                v.len()
            )));
        }
        if let Some(k) = (1..v.len()).find(|&k| v[k] <= v[k - 1]) {
            return Err(ValidationError::NotStrictlyIncreasing {
                name,
                position: k + 1,
            });
        }
        if let Some(k) = v.iter().position(|&x| x < 1 || x > n) {
            return Err(ValidationError::OutOfRange {
                name,
                position: k + 1,
                value: v[k],
                n,
            });
        }
    }
    if let Some(k) = (0..i.len()).find(|&k| j[k] > i[k]) {
        return Err(ValidationError::NotDominated {
            position: k + 1,
            i: i[k],
            j: j[k],
        });
    }
    Ok(SchubertDatum {
        n,
        i: i.to_vec(),
        j: j.to_vec(),
    })
}

/// `s_q = |{l : i_q < j_l}|`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SVector(pub Vec<i64>);

impl SVector {
    /// `s_q` with one-based `q`.
    pub fn at(&self, q: usize) -> i64 {
        self.0[q - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

pub fn s_vector(datum: &SchubertDatum) -> SVector {
    SVector(
        datum
            .i
            .iter()
            .map(|&iq| datum.j.iter().filter(|&&jl| iq < jl).count() as i64)
            .collect(),
    )
}

fn sign_of_sum(s: &SVector) -> BigInt {
    if s.sum() % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The `d x d` matrix `binom(i_q, p - 1 - s_q)`.
pub fn rz_matrix(datum: &SchubertDatum) -> IntMatrix {
    let s = s_vector(datum);
    IntMatrix::from_fn(datum.d(), |p, q| binomial(datum.i[q], p as i64 - s.0[q]))
}

/// Rosenthal–Zelevinsky: `(-1)^{s_1+...+s_d} det binom(i_q, p - 1 - s_q)`.
pub fn multiplicity_rz(datum: &SchubertDatum) -> BigInt {
    sign_of_sum(&s_vector(datum)) * determinant(&rz_matrix(datum))
}

/// A partition with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Sorts nothing: the input must already be weakly decreasing and
    /// nonnegative. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<i64>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_k` with one-based `k`; zero past the end.
    pub fn part(&self, k: usize) -> i64 {
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `λ = (i_d - d, ..., i_2 - 2, i_1 - 1)`.
pub fn partition_from_i(datum: &SchubertDatum) -> Partition {
    let parts = (1..=datum.d())
        .rev()
        .map(|k| datum.i_at(k) - k as i64)
        .collect();
    Partition::new(parts).expect("i strictly increasing gives a partition")
}

pub fn conjugate(p: &Partition) -> Partition {
    let largest = p.0.first().copied().unwrap_or(0);
    let parts = (1..=largest)
        .map(|k| p.0.iter().filter(|&&part| part >= k).count() as i64)
        .collect();
    Partition(parts)
}

/// Frobenius coordinates `(α_1, ..., α_r | β_1, ..., β_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FrobeniusCoords {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Rebuilds the partition from its arms and legs.
    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        // column lengths of the diagram: λ'_k = β_k + k for k <= r
        let conj_head: Vec<i64> = self.beta.iter().zip(1..).map(|(&b, k)| b + k).collect();
        let rows = conj_head.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(rows as usize);
        for k in 1..=rows {
            if (k as usize) <= r {
                parts.push(self.alpha[k as usize - 1] + k);
            } else {
                // row k lies strictly below the Durfee square: its length is the
                // number of the first r columns reaching down to row k
                parts.push(conj_head.iter().filter(|&&c| c >= k).count() as i64);
            }
        }
        Partition(parts)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(&self.alpha), join(&self.beta))
    }
}

pub fn frobenius(p: &Partition) -> FrobeniusCoords {
    let conj = conjugate(p);
    let r = (1..=p.0.len())
        .take_while(|&k| p.part(k) >= k as i64)
        .count();
    FrobeniusCoords {
        alpha: (1..=r).map(|k| p.part(k) - k as i64).collect(),
        beta: (1..=r).map(|k| conj.part(k) - k as i64).collect(),
    }
}

/// Lakshmibai–Weyman: `det binom(α_p + β_q, α_p)` for `j = (1, ..., d)`.
pub fn multiplicity_lw(datum: &SchubertDatum) -> Result<BigInt, Error> {
    if !datum.is_special() {
        return Err(Error::NotSpecialCase);
    }
    let fc = frobenius(&partition_from_i(datum));
    let m = IntMatrix::from_fn(fc.rank(), |p, q| {
        binomial(fc.alpha[p] + fc.beta[q], fc.alpha[p])
    });
    Ok(determinant(&m))
}

/// The dual-path determinant with entries `binom(i_d - i_q - s_q, d - p - s_q)`.
///
/// Entry `(p, q)` counts east/south paths from `(-d + p, i_d + p)` to
/// `(-s_q, i_q + d)`. Its last column is the unit vector `e_d`.
pub fn thm5_matrix(datum: &SchubertDatum) -> IntMatrix {
    let s = s_vector(datum);
    let d = datum.d() as i64;
    let top = datum.i_at(datum.d());
    IntMatrix::from_fn(datum.d(), |p, q| {
        let p = p as i64 + 1;
        binomial(top - datum.i[q] - s.0[q], d - p - s.0[q])
    })
}

pub fn multiplicity_thm5(datum: &SchubertDatum) -> BigInt {
    determinant(&thm5_matrix(datum))
}

/// The same determinant with the row index in the upper argument,
/// `binom(i_d - i_p - s_q, d - p - s_q)`. Does not compute the multiplicity
/// in general; kept so the discrepancy stays visible.
pub fn thm5_printed_matrix(datum: &SchubertDatum) -> IntMatrix {
    let s = s_vector(datum);
    let d = datum.d() as i64;
    let top = datum.i_at(datum.d());
    IntMatrix::from_fn(datum.d(), |p, q| {
        binomial(top - datum.i[p] - s.0[q], d - (p as i64 + 1) - s.0[q])
    })
}

pub fn thm5_printed_variant(datum: &SchubertDatum) -> BigInt {
    determinant(&thm5_printed_matrix(datum))
}
