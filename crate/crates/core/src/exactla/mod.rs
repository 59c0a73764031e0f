//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything here is exact; there is no floating point anywhere. Rational
//! matrices are reduced by fraction-free Gauss-Jordan elimination over the
//! integers (rows carrying denominators are rescaled first), with plain
//! rational Gauss-Jordan available as an independent route. Prime-field
//! matrices use ordinary Gauss-Jordan mod `p`.

mod elim;
mod labeled;
mod matrix;
mod modular;
mod scalar;

use std::hash::Hash;

use num_rational::BigRational;

pub use elim::{Method, RowReduced};
pub use labeled::{LabeledMatrix, DENSE_LIMIT};
pub use matrix::Matrix;
pub use scalar::{
    format_rational, is_odd_prime, parse_rational, FieldKind, Fp, Scalar, MAX_MODULUS,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("prime {prime} divides a denominator")]
    BadPrime { prime: u64 },
}

/// Rank, pivot columns and a reduced kernel basis of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonResult {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Column vectors `v` with `M v = 0`; vector `k` has a one at the `k`-th
    /// non-pivot column and zeros at the other non-pivot columns.
    pub kernel_basis: Vec<Vec<Scalar>>,
}

/// Echelonizes `m` without mutating it. All entries must share one field.
pub fn echelonize<R, C>(m: &LabeledMatrix<R, C>) -> Result<EchelonResult, Error>
where
    R: Clone + Eq + Hash,
    C: Clone + Eq + Hash,
{
    match m.field()? {
        FieldKind::Rational => {
            let red = m.to_rational()?.row_reduce();
            Ok(EchelonResult {
                rank: red.rank(),
                pivot_cols: red.pivot_cols().to_vec(),
                kernel_basis: red
                    .kernel_basis()
                    .into_iter()
                    .map(|v| v.into_iter().map(Scalar::Rational).collect())
                    .collect(),
            })
        }
        FieldKind::Prime(p) => {
            let rows: Vec<Vec<Fp>> = m
                .dense_rows()
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| match x {
                            Scalar::Modular(v) => v,
                            Scalar::Rational(_) => unreachable!("field checked"),
                        })
                        .collect()
                })
                .collect();
            let cols = m.cols();
            let (pivots, reduced) = elim::gauss_jordan_mod(rows, cols);
            let mut is_pivot = vec![false; cols];
            for &c in &pivots {
                is_pivot[c] = true;
            }
            let zero = Fp::from_reduced(0, p);
            let one = Fp::from_reduced(1, p);
            let kernel_basis = (0..cols)
                .filter(|&f| !is_pivot[f])
                .map(|f| {
                    let mut v = vec![zero; cols];
                    v[f] = one;
                    for (r, &pc) in pivots.iter().enumerate() {
                        v[pc] = reduced[r][f].neg();
                    }
                    v.into_iter().map(Scalar::Modular).collect()
                })
                .collect();
            Ok(EchelonResult {
                rank: pivots.len(),
                pivot_cols: pivots,
                kernel_basis,
            })
        }
    }
}

/// Rank of the reduction mod `p` of a rational matrix. Never exceeds the rank over Q.
pub fn rank_mod_p<R, C>(m: &LabeledMatrix<R, C>, p: u64) -> Result<usize, Error>
where
    R: Clone + Eq + Hash,
    C: Clone + Eq + Hash,
{
    matrix_rank_mod_p(&m.to_rational()?, p)
}

pub fn matrix_rank_mod_p(m: &Matrix, p: u64) -> Result<usize, Error> {
    scalar::check_modulus(p)?;
    let rows = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|q| Fp::from_rational(q, p))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(elim::gauss_jordan_mod(rows, m.cols()).0.len())
}

/// True iff the square matrix `m` has full rank.
pub fn is_nondegenerate<R, C>(m: &LabeledMatrix<R, C>) -> Result<bool, Error>
where
    R: Clone + Eq + Hash,
    C: Clone + Eq + Hash,
{
    if m.rows() != m.cols() {
        return Err(Error::InvalidInput(format!(
            "nondegeneracy needs a square matrix, got {} x {}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(echelonize(m)?.rank == m.rows())
}

/// Exact product `M v` for a rational labeled matrix and rational vector.
pub fn apply(m: &Matrix, v: &[BigRational]) -> Vec<BigRational> {
    m.mul_vec(v)
}
