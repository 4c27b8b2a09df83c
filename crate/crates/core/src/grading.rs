//! Multigradings: degree matrices, multidegrees, shifts, and the ring
//! context shared by all vectors of a computation.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rug::Rational;

use crate::error::AlgebraError;
use crate::term::{ModuleTerm, Term};

/// An element of `Z^m`. The derived `Ord` is lexicographic, which is the
/// order used on degrees throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(m: usize) -> Self {
        MultiDegree(vec![0; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &MultiDegree) -> Result<MultiDegree, AlgebraError> {
        if self.len() != other.len() {
            return Err(AlgebraError::DimensionMismatch {
                what: "multidegree length",
                expected: self.len(),
                got: other.len(),
            });
        }
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(AlgebraError::DegreeOverflow)?);
        }
        Ok(MultiDegree(out))
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// Lexicographic comparison of two multidegrees; the first index decides.
pub fn lex_compare(a: &MultiDegree, b: &MultiDegree) -> Result<Ordering, AlgebraError> {
    if a.len() != b.len() {
        return Err(AlgebraError::DimensionMismatch {
            what: "multidegree length",
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.0.cmp(&b.0))
}

/// The `m x n` integer matrix `W` defining a `Z^m`-grading, together with a
/// cached rank and positivity flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeMatrix {
    rows: Vec<Vec<i64>>,
    rank: usize,
    positive: bool,
}

impl DegreeMatrix {
    /// Builds a degree matrix from its rows. All rows must have the same
    /// (non-zero) length.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, AlgebraError> {
        let m = rows.len();
        if m == 0 {
            return Err(AlgebraError::DimensionMismatch {
                what: "degree matrix rows",
                expected: 1,
                got: 0,
            });
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(AlgebraError::DimensionMismatch {
                what: "degree matrix columns",
                expected: 1,
                got: 0,
            });
        }
        for row in &rows {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    what: "degree matrix row length",
                    expected: n,
                    got: row.len(),
                });
            }
        }
        let rank = rank_of(&rows, m, n);
        let positive = rank == m
            && (0..n).all(|j| {
                let first_nonzero = rows.iter().map(|r| r[j]).find(|&e| e != 0);
                matches!(first_nonzero, Some(e) if e > 0)
            });
        Ok(DegreeMatrix {
            rows,
            rank,
            positive,
        })
    }

    /// The standard grading `W = (1, ..., 1)` on `n` indeterminates.
    pub fn standard(n: usize) -> Self {
        DegreeMatrix::new(vec![vec![1; n]]).expect("standard grading is well-formed")
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True iff `rk(W) = m`, no column is zero, and the first non-zero entry
    /// of every column is positive.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// True iff this is the standard grading (one row, all entries 1).
    pub fn is_standard(&self) -> bool {
        self.nrows() == 1 && self.rows[0].iter().all(|&e| e == 1)
    }

    /// `W * alpha` for an exponent vector.
    pub fn apply(&self, term: &Term) -> Result<MultiDegree, AlgebraError> {
        if term.nvars() != self.ncols() {
            return Err(AlgebraError::DimensionMismatch {
                what: "term length vs degree matrix columns",
                expected: self.ncols(),
                got: term.nvars(),
            });
        }
        let mut out = Vec::with_capacity(self.nrows());
        for row in &self.rows {
            let mut acc: i64 = 0;
            for (w, &e) in row.iter().zip(term.exponents()) {
                let prod = w
                    .checked_mul(e as i64)
                    .ok_or(AlgebraError::DegreeOverflow)?;
                acc = acc.checked_add(prod).ok_or(AlgebraError::DegreeOverflow)?;
            }
            out.push(acc);
        }
        Ok(MultiDegree(out))
    }
}

/// Row rank of an integer matrix, by Gaussian elimination over the rationals.
fn rank_of(rows: &[Vec<i64>], m: usize, n: usize) -> usize {
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&e| Rational::from(e)).collect())
        .collect();
    let mut rank = 0;
    let mut col = 0;
    while rank < m && col < n {
        let pivot = (rank..m).find(|&i| mat[i][col] != 0);
        match pivot {
            None => col += 1,
            Some(p) => {
                mat.swap(rank, p);
                for i in rank + 1..m {
                    if mat[i][col] != 0 {
                        let factor = Rational::from(&mat[i][col] / &mat[rank][col]);
                        for j in col..n {
                            let sub = Rational::from(&factor * &mat[rank][j]);
                            mat[i][j] -= sub;
                        }
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// True iff the grading given by `W` is positive.
pub fn is_positive_grading(w: &DegreeMatrix) -> bool {
    w.is_positive()
}

/// The grading shifts `delta_1, ..., delta_r` of a free module
/// `F = P(-delta_1) + ... + P(-delta_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftVector(pub Vec<MultiDegree>);

impl ShiftVector {
    pub fn zeros(rank: usize, m: usize) -> Self {
        ShiftVector(vec![MultiDegree::zero(m); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, component: usize) -> &MultiDegree {
        &self.0[component]
    }
}

/// The ambient data of a computation: number of indeterminates, grading
/// matrix, module rank, and shifts. Immutable and shared via `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    nvars: usize,
    grading: DegreeMatrix,
    rank: usize,
    shifts: ShiftVector,
}

impl RingContext {
    pub fn new(
        nvars: usize,
        grading: DegreeMatrix,
        rank: usize,
        shifts: ShiftVector,
    ) -> Result<Arc<Self>, AlgebraError> {
        if grading.ncols() != nvars {
            return Err(AlgebraError::DimensionMismatch {
                what: "grading columns vs indeterminates",
                expected: nvars,
                got: grading.ncols(),
            });
        }
        if shifts.rank() != rank {
            return Err(AlgebraError::DimensionMismatch {
                what: "shift count vs module rank",
                expected: rank,
                got: shifts.rank(),
            });
        }
        for s in &shifts.0 {
            if s.len() != grading.nrows() {
                return Err(AlgebraError::DimensionMismatch {
                    what: "shift length vs grading rows",
                    expected: grading.nrows(),
                    got: s.len(),
                });
            }
        }
        Ok(Arc::new(RingContext {
            nvars,
            grading,
            rank,
            shifts,
        }))
    }

    /// Standard-graded polynomial ring in `n` variables (rank-1 module).
    pub fn standard(n: usize) -> Arc<Self> {
        RingContext::new(
            n,
            DegreeMatrix::standard(n),
            1,
            ShiftVector::zeros(1, 1),
        )
        .expect("standard context is well-formed")
    }

    /// Standard-graded ring in `n` variables with a rank-`r` free module and
    /// the given shifts.
    pub fn standard_module(n: usize, shifts: Vec<MultiDegree>) -> Arc<Self> {
        let rank = shifts.len();
        RingContext::new(n, DegreeMatrix::standard(n), rank, ShiftVector(shifts))
            .expect("well-formed shifts")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn grading(&self) -> &DegreeMatrix {
        &self.grading
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &ShiftVector {
        &self.shifts
    }

    pub fn degree_len(&self) -> usize {
        self.grading.nrows()
    }

    /// `deg_W` of a bare term, without shift.
    pub fn term_degree(&self, t: &Term) -> Result<MultiDegree, AlgebraError> {
        self.grading.apply(t)
    }

    /// `deg_W(t e_gamma) = W*alpha + delta_gamma`.
    pub fn module_term_degree(&self, mt: &ModuleTerm) -> Result<MultiDegree, AlgebraError> {
        if mt.component >= self.rank {
            return Err(AlgebraError::ComponentOutOfRange {
                component: mt.component,
                rank: self.rank,
            });
        }
        self.grading
            .apply(&mt.term)?
            .add(self.shifts.get(mt.component))
    }
}

/// `deg_W(t e_gamma) = W*alpha + delta_gamma` as a free function.
pub fn deg_w(
    t: &ModuleTerm,
    w: &DegreeMatrix,
    shifts: &ShiftVector,
) -> Result<MultiDegree, AlgebraError> {
    if t.component >= shifts.rank() {
        return Err(AlgebraError::ComponentOutOfRange {
            component: t.component,
            rank: shifts.rank(),
        });
    }
    w.apply(&t.term)?.add(shifts.get(t.component))
}

/// Homogeneity of a vector: the zero vector is homogeneous of every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    /// Zero vector: homogeneous of every degree.
    AnyDegree,
    /// All support terms share this degree.
    Homogeneous(MultiDegree),
    /// Support terms of at least two distinct degrees.
    NotHomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::NotHomogeneous)
    }

    pub fn degree(&self) -> Option<&MultiDegree> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}
