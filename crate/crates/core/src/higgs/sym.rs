//! Symmetric powers: multiset bases and induced maps.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactla::Matrix;

/// A basis monomial of `Sym^n V`: a sorted multiset of basis indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset(pub Vec<usize>);

impl Multiset {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        Multiset(idx)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Union of multisets, i.e. the product in the symmetric algebra.
    pub fn join(&self, other: &Multiset) -> Multiset {
        Multiset::new(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl std::fmt::Display for Multiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("d{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Lex-ordered multisets of size `n` drawn from `0..dim`.
pub fn multisets(dim: usize, n: usize) -> Vec<Multiset> {
    fn go(start: usize, dim: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Multiset>) {
        if left == 0 {
            out.push(Multiset(cur.clone()));
            return;
        }
        for i in start..dim {
            cur.push(i);
            go(i, dim, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, dim, n, &mut Vec::new(), &mut out);
    out
}

/// `C(dim + n - 1, n)`.
pub fn sym_dim(dim: usize, n: usize) -> usize {
    if dim == 0 {
        return usize::from(n == 0);
    }
    (0..n).fold(1usize, |acc, i| acc * (dim + i) / (i + 1))
}

/// Matrix of `Sym^n A` for `A : V -> W` (columns indexed by `multisets(dim V, n)`,
/// rows by `multisets(dim W, n)`), sending `v_1 ... v_n` to the expanded product
/// `A(v_1) ... A(v_n)`.
pub fn sym_power(a: &Matrix, n: usize) -> Matrix {
    let rows = multisets(a.rows(), n);
    let index: BTreeMap<&Multiset, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let cols = multisets(a.cols(), n);
    let columns: Vec<Vec<BigRational>> = cols
        .iter()
        .map(|m| {
            let mut poly: BTreeMap<Multiset, BigRational> =
                BTreeMap::from([(Multiset(vec![]), BigRational::one())]);
            for &j in m.indices() {
                let mut next: BTreeMap<Multiset, BigRational> = BTreeMap::new();
                for (mono, c) in &poly {
                    for i in 0..a.rows() {
                        let x = &a[(i, j)];
                        if x.is_zero() {
                            continue;
                        }
                        *next
                            .entry(mono.join(&Multiset(vec![i])))
                            .or_insert_with(BigRational::zero) += c * x;
                    }
                }
                poly = next;
            }
            let mut col = vec![BigRational::zero(); rows.len()];
            for (mono, c) in poly {
                col[index[&mono]] = c;
            }
            col
        })
        .collect();
    Matrix::from_columns(rows.len(), &columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let m = multisets(3, 2);
        assert_eq!(m.len(), sym_dim(3, 2));
        assert_eq!(m[0], Multiset(vec![0, 0]));
        assert_eq!(m[1], Multiset(vec![0, 1]));
        assert_eq!(m[5], Multiset(vec![2, 2]));
        assert_eq!(multisets(4, 0), vec![Multiset(vec![])]);
        assert_eq!(sym_dim(10, 2), 55);
        assert_eq!(sym_dim(0, 0), 1);
    }

    #[test]
    fn sym_square_of_a_two_by_two() {
        // A = [[1, 1], [0, 1]]: e0 -> e0, e1 -> e0 + e1.
        let a = Matrix::from_i64(&[vec![1, 1], vec![0, 1]]);
        let s = sym_power(&a, 2);
        // e1^2 -> e0^2 + 2 e0 e1 + e1^2
        let expected = Matrix::from_i64(&[vec![1, 1, 1], vec![0, 1, 2], vec![0, 0, 1]]);
        assert_eq!(s, expected);
    }

    #[test]
    fn sym_power_is_functorial() {
        let a = Matrix::from_i64(&[vec![1, 2, 0], vec![-1, 0, 3]]);
        let b = Matrix::from_i64(&[vec![2, 1], vec![0, 1], vec![1, -1], vec![4, 0]]);
        for n in 0..4 {
            assert_eq!(
                sym_power(&b.mul(&a), n),
                sym_power(&b, n).mul(&sym_power(&a, n))
            );
        }
    }
}
