use std::collections::{BTreeMap, HashSet};
use std::hash::Hash;

use num_rational::BigRational;

use super::matrix::Matrix;
use super::scalar::{FieldKind, Scalar};
use super::Error;

/// Matrices with both sides at most this size are stored densely.
pub const DENSE_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Scalar>),
    /// Nonzero entries keyed by `(row, col)`.
    Sparse(BTreeMap<(usize, usize), Scalar>),
}

/// Exact matrix with named row and column bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix<R, C> {
    row_labels: Vec<R>,
    col_labels: Vec<C>,
    storage: Storage,
}

impl<R, C> LabeledMatrix<R, C>
where
    R: Clone + Eq + Hash,
    C: Clone + Eq + Hash,
{
    pub fn new(
        row_labels: Vec<R>,
        col_labels: Vec<C>,
        entries: Vec<Vec<Scalar>>,
    ) -> Result<Self, Error> {
        check_distinct(&row_labels, "row")?;
        check_distinct(&col_labels, "column")?;
        if entries.len() != row_labels.len() || entries.iter().any(|r| r.len() != col_labels.len())
        {
            return Err(Error::InvalidInput(format!(
                "entry array does not match {} x {} labels",
                row_labels.len(),
                col_labels.len()
            )));
        }
        let storage = if row_labels.len() <= DENSE_LIMIT && col_labels.len() <= DENSE_LIMIT {
            Storage::Dense(entries.into_iter().flatten().collect())
        } else {
            let mut map = BTreeMap::new();
            for (i, row) in entries.into_iter().enumerate() {
                for (j, x) in row.into_iter().enumerate() {
                    if !x.is_zero() {
                        map.insert((i, j), x);
                    }
                }
            }
            Storage::Sparse(map)
        };
        Ok(LabeledMatrix {
            row_labels,
            col_labels,
            storage,
        })
    }

    /// Wraps a rational matrix; panics if the label counts do not match.
    pub fn from_matrix(row_labels: Vec<R>, col_labels: Vec<C>, m: &Matrix) -> Result<Self, Error> {
        assert_eq!((row_labels.len(), col_labels.len()), (m.rows(), m.cols()));
        let entries = m
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::Rational).collect())
            .collect();
        Self::new(row_labels, col_labels, entries)
    }

    pub fn row_labels(&self) -> &[R] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[C] {
        &self.col_labels
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows() && j < self.cols(), "index out of range");
        match &self.storage {
            Storage::Dense(v) => v[i * self.cols() + j].clone(),
            Storage::Sparse(map) => map.get(&(i, j)).cloned().unwrap_or_else(|| self.zero()),
        }
    }

    pub fn get_labeled(&self, row: &R, col: &C) -> Option<Scalar> {
        let i = self.row_labels.iter().position(|r| r == row)?;
        let j = self.col_labels.iter().position(|c| c == col)?;
        Some(self.get(i, j))
    }

    fn zero(&self) -> Scalar {
        match self.field() {
            Ok(FieldKind::Prime(p)) => Scalar::Modular(super::Fp::from_reduced(0, p)),
            _ => Scalar::zero(),
        }
    }

    fn stored(&self) -> Box<dyn Iterator<Item = &Scalar> + '_> {
        match &self.storage {
            Storage::Dense(v) => Box::new(v.iter()),
            Storage::Sparse(map) => Box::new(map.values()),
        }
    }

    /// The common field of all explicitly stored entries; an all-implicit
    /// matrix counts as rational.
    pub fn field(&self) -> Result<FieldKind, Error> {
        let mut kind = None;
        for x in self.stored() {
            let k = x.field();
            match kind {
                None => kind = Some(k),
                Some(prev) if prev != k => {
                    return Err(Error::InvalidInput(format!(
                        "mixed fields in one matrix: {prev:?} and {k:?}"
                    )))
                }
                _ => {}
            }
        }
        Ok(kind.unwrap_or(FieldKind::Rational))
    }

    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        let zero = self.zero();
        let mut out = vec![vec![zero; self.cols()]; self.rows()];
        match &self.storage {
            Storage::Dense(v) => {
                for (k, x) in v.iter().enumerate() {
                    out[k / self.cols()][k % self.cols()] = x.clone();
                }
            }
            Storage::Sparse(map) => {
                for (&(i, j), x) in map {
                    out[i][j] = x.clone();
                }
            }
        }
        out
    }

    /// The rational matrix behind the labels; fails for prime-field entries.
    pub fn to_rational(&self) -> Result<Matrix, Error> {
        if self.field()? != FieldKind::Rational {
            return Err(Error::InvalidInput(
                "matrix is not over the rationals".into(),
            ));
        }
        let rows: Vec<Vec<BigRational>> = self
            .dense_rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| match x {
                        Scalar::Rational(q) => q,
                        Scalar::Modular(_) => unreachable!("field checked above"),
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix::from_rows_with_cols(rows, self.cols()))
    }

    pub fn transpose(&self) -> LabeledMatrix<C, R> {
        let rows = self.dense_rows();
        let t = (0..self.cols())
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        LabeledMatrix::new(self.col_labels.clone(), self.row_labels.clone(), t)
            .expect("transpose of a well-formed matrix is well-formed")
    }

    /// Sub-matrix on the given column positions.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let rows = self.dense_rows();
        let entries = rows
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let labels = idx.iter().map(|&j| self.col_labels[j].clone()).collect();
        LabeledMatrix::new(self.row_labels.clone(), labels, entries)
            .expect("column subset of a well-formed matrix is well-formed")
    }
}

fn check_distinct<L: Eq + Hash>(labels: &[L], axis: &str) -> Result<(), Error> {
    let mut seen = HashSet::with_capacity(labels.len());
    if labels.iter().all(|l| seen.insert(l)) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("duplicate {axis} label")))
    }
}
