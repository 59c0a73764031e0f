//! Row reduction kernels.
//!
//! Pivoting is deterministic: for each column from left to right the topmost
//! remaining row with a nonzero entry becomes the pivot row. No magnitude
//! pivoting is done; every route is exact, so the reduced row echelon form is
//! unique and all routes agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{rational_is_integer, Fp};

/// Elimination route for rational matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Fraction-free elimination; rows with denominators are scaled to
    /// integers first.
    Auto,
    /// Fraction-free Gauss-Jordan over the integers. Non-integral input is
    /// row-scaled the same way as `Auto`.
    FractionFree,
    /// Plain Gauss-Jordan over the rationals.
    Rational,
    /// Reduction modulo many primes, lifted by CRT and rational
    /// reconstruction, then certified exactly over Q. Falls back to
    /// `FractionFree` if no certificate is found.
    Multimodular,
}

/// Reduced row echelon form: only the `rank` nonzero rows are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduced {
    cols: usize,
    pivot_cols: Vec<usize>,
    rows: Vec<Vec<BigRational>>,
}

impl RowReduced {
    pub(crate) fn from_parts(
        cols: usize,
        pivot_cols: Vec<usize>,
        rows: Vec<Vec<BigRational>>,
    ) -> Self {
        RowReduced {
            cols,
            pivot_cols,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&j| !is_pivot[j]).collect()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        self.free_cols()
            .into_iter()
            .map(|f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (r, &pc) in self.pivot_cols.iter().enumerate() {
                    v[pc] = -self.rows[r][f].clone();
                }
                v
            })
            .collect()
    }
}

pub(crate) fn row_reduce_rational(m: &Matrix, method: Method) -> RowReduced {
    match method {
        Method::Rational => gauss_jordan_rational(m),
        Method::Multimodular => super::modular::row_reduce_multimodular(m)
            .unwrap_or_else(|| row_reduce_rational(m, Method::FractionFree)),
        Method::Auto | Method::FractionFree => {
            let rows = integral_rows(m);
            fraction_free_gauss_jordan(rows, m.cols())
        }
    }
}

/// Scales every row by the lcm of its denominators; rank, pivots and
/// kernel are unchanged.
pub(crate) fn integral_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            if row.iter().all(rational_is_integer) {
                return row.iter().map(|q| q.numer().clone()).collect();
            }
            // Rows often share one denominator; a divisibility test is cheaper than a gcd.
            let lcm = row.iter().fold(BigInt::one(), |acc, q| {
                if (&acc % q.denom()).is_zero() {
                    acc
                } else {
                    acc.lcm(q.denom())
                }
            });
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect()
}

/// Fraction-free Gauss-Jordan: after each pivot step every other row is
/// updated by `(p * a_ij - a_ic * a_rj) / prev`, which divides exactly.
/// At the end every pivot row carries the same pivot value, and dividing
/// by it yields the reduced row echelon form.
fn fraction_free_gauss_jordan(mut a: Vec<Vec<BigInt>>, cols: usize) -> RowReduced {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let (pivot_row, others) = split_row(&mut a, r);
        for (i, row) in others {
            let factor = row[c].clone();
            // Columns left of `c` that are zero in the pivot row only scale.
            let start = if i > r { c } else { 0 };
            for j in start..cols {
                let v = if factor.is_zero() || pivot_row[j].is_zero() {
                    &piv * &row[j]
                } else {
                    &piv * &row[j] - &factor * &pivot_row[j]
                };
                row[j] = exact_div(v, &prev);
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    let rows = a
        .into_iter()
        .take(pivots.len())
        .zip(&pivots)
        .map(|(row, &pc)| {
            let d = row[pc].clone();
            row.into_iter()
                .map(|x| BigRational::new(x, d.clone()))
                .collect()
        })
        .collect();
    RowReduced {
        cols,
        pivot_cols: pivots,
        rows,
    }
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return v;
    }
    let (q, rem) = v.div_rem(d);
    debug_assert!(
        rem.is_zero(),
        "inexact division in fraction-free elimination"
    );
    q
}

/// Splits out row `r` so the remaining rows can be mutated alongside it.
fn split_row<T>(
    a: &mut [Vec<T>],
    r: usize,
) -> (&Vec<T>, impl Iterator<Item = (usize, &mut Vec<T>)>) {
    let (head, tail) = a.split_at_mut(r);
    let (pivot, tail) = tail.split_first_mut().expect("pivot row exists");
    let others = head.iter_mut().enumerate().chain(
        tail.iter_mut()
            .enumerate()
            .map(move |(k, row)| (r + 1 + k, row)),
    );
    (&*pivot, others)
}

fn gauss_jordan_rational(m: &Matrix) -> RowReduced {
    let mut a = m.to_rows();
    let rows = a.len();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let (pivot_row, others) = split_row(&mut a, r);
        for (_, row) in others {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &factor * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    RowReduced {
        cols,
        pivot_cols: pivots,
        rows: a,
    }
}

/// Gauss-Jordan over `F_p`. Returns pivot columns and the reduced nonzero rows.
pub(crate) fn gauss_jordan_mod(mut a: Vec<Vec<Fp>>, cols: usize) -> (Vec<usize>, Vec<Vec<Fp>>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in a[r].iter_mut() {
            *x = x.mul(inv);
        }
        let (pivot_row, others) = split_row(&mut a, r);
        for (_, row) in others {
            let factor = row[c];
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                row[j] = row[j].sub(factor.mul(pivot_row[j]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    (pivots, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fraction_free_matches_rational_on_rank_deficient_input() {
        let m = Matrix::from_i64(&[
            vec![0, 2, 4, 1, 3],
            vec![0, 1, 2, 0, 5],
            vec![0, 3, 6, 1, 8],
            vec![1, 0, 0, 0, 0],
        ]);
        let a = m.row_reduce_with(Method::FractionFree);
        let b = m.row_reduce_with(Method::Rational);
        assert_eq!(a, b);
        assert_eq!(a.pivot_cols(), &[0, 1, 3]);
    }

    #[test]
    fn rational_rows_are_cleared() {
        let m = Matrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 4), q(1, 2)]]);
        let red = m.row_reduce();
        assert_eq!(red.rank(), 1);
        assert_eq!(red.rows()[0], vec![q(1, 1), q(2, 3)]);
        assert_eq!(red, m.row_reduce_with(Method::Rational));
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zeros(0, 3);
        let red = m.row_reduce();
        assert_eq!(red.rank(), 0);
        assert_eq!(red.kernel_basis().len(), 3);
        assert_eq!(Matrix::zeros(3, 0).row_reduce().rank(), 0);
    }
}
