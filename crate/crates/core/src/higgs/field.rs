//! Infinitesimal graded Higgs bundles with `theta(delta) : H^p -> H^{p-1}`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::sym::{multisets, Multiset};
use super::Error;
use crate::exactla::{LabeledMatrix, Matrix};

/// One entry of a block `Hom(H^p, H^{p-n})`: row `row` of `H^{p-n}`, column `col` of `H^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomEntry {
    pub source_grade: i64,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfGradedHiggs {
    t_dim: usize,
    /// Only nonzero dimensions are stored.
    grades: BTreeMap<i64, usize>,
    /// `theta[delta][p]` has shape `dim H^{p-1} x dim H^p`; present exactly
    /// when both grades are nonzero.
    theta: Vec<BTreeMap<i64, Matrix>>,
}

impl InfGradedHiggs {
    /// Blocks absent from `theta` are taken to be zero.
    pub fn new(
        t_dim: usize,
        grades: BTreeMap<i64, usize>,
        theta: Vec<BTreeMap<i64, Matrix>>,
    ) -> Result<Self, Error> {
        if theta.len() != t_dim {
            return Err(Error::InvalidInput(format!(
                "expected {t_dim} Higgs operators, got {}",
                theta.len()
            )));
        }
        let grades: BTreeMap<i64, usize> = grades.into_iter().filter(|&(_, d)| d > 0).collect();
        let dim = |p: i64| grades.get(&p).copied().unwrap_or(0);
        let mut full = Vec::with_capacity(t_dim);
        for (delta, blocks) in theta.into_iter().enumerate() {
            for (&p, m) in &blocks {
                let expected = (dim(p - 1), dim(p));
                let degenerate = expected.0 == 0 || expected.1 == 0;
                let ok = if degenerate {
                    m.is_zero()
                } else {
                    (m.rows(), m.cols()) == expected
                };
                if !ok {
                    return Err(Error::InvalidInput(format!(
                        "theta({delta}) on H^{p} is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        dim(p - 1),
                        dim(p)
                    )));
                }
            }
            let mut out = BTreeMap::new();
            for (&p, &n) in &grades {
                let below = dim(p - 1);
                if below == 0 {
                    continue;
                }
                let block = blocks
                    .get(&p)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(below, n));
                out.insert(p, block);
            }
            full.push(out);
        }
        Ok(InfGradedHiggs {
            t_dim,
            grades,
            theta: full,
        })
    }

    pub fn zero(t_dim: usize, grades: BTreeMap<i64, usize>) -> Self {
        Self::new(t_dim, grades, vec![BTreeMap::new(); t_dim]).expect("zero field is well formed")
    }

    pub fn t_dim(&self) -> usize {
        self.t_dim
    }

    pub fn grades(&self) -> &BTreeMap<i64, usize> {
        &self.grades
    }

    pub fn dim(&self, p: i64) -> usize {
        self.grades.get(&p).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.grades.values().sum()
    }

    /// `theta(delta)` on `H^p`, or `None` if the block is trivially zero.
    pub fn block(&self, delta: usize, p: i64) -> Option<&Matrix> {
        self.theta[delta].get(&p)
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().all(|b| b.values().all(Matrix::is_zero))
    }

    /// `theta(d_1) o ... o theta(d_n)` on `H^p`, as a `dim H^{p-n} x dim H^p`
    /// matrix. The rightmost factor is applied first.
    pub fn compose(&self, word: &[usize], p: i64) -> Matrix {
        let n = word.len() as i64;
        let mut acc = Matrix::identity(self.dim(p));
        let mut q = p;
        for &delta in word.iter().rev() {
            acc = match self.block(delta, q) {
                Some(b) => b.mul(&acc),
                None => Matrix::zeros(self.dim(q - 1), self.dim(p)),
            };
            q -= 1;
        }
        debug_assert_eq!(acc.rows(), self.dim(p - n));
        acc
    }

    /// Exact check of `theta(a) o theta(b) = theta(b) o theta(a)` on every grade.
    pub fn check_commuting(&self) -> bool {
        for a in 0..self.t_dim {
            for b in a + 1..self.t_dim {
                for &p in self.grades.keys() {
                    if self.dim(p - 2) > 0 && self.compose(&[a, b], p) != self.compose(&[b, a], p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Grades `p` whose block `Hom(H^p, H^{p-n})` is nonzero-dimensional.
    fn hom_grades(&self, n: usize) -> Vec<i64> {
        self.grades
            .keys()
            .copied()
            .filter(|&p| self.dim(p - n as i64) > 0)
            .collect()
    }

    /// Row labels of the target `⊕_p Hom(H^p, H^{p-n})`, blocks in increasing `p`,
    /// each block row-major.
    pub fn hom_labels(&self, n: usize) -> Vec<HomEntry> {
        let mut out = Vec::new();
        for p in self.hom_grades(n) {
            for row in 0..self.dim(p - n as i64) {
                for col in 0..self.dim(p) {
                    out.push(HomEntry {
                        source_grade: p,
                        row,
                        col,
                    });
                }
            }
        }
        out
    }

    /// `theta^{o n}` evaluated on one monomial, flattened along `hom_labels(n)`.
    pub fn iterate_on(&self, word: &Multiset) -> Vec<BigRational> {
        let n = word.degree();
        let mut out = Vec::new();
        for p in self.hom_grades(n) {
            let m = self.compose(word.indices(), p);
            out.extend(m.entries().cloned());
        }
        out
    }

    /// Dense form of [`iterate_theta`](Self::iterate_theta) without the commuting check.
    pub(crate) fn iterate_matrix(&self, n: usize) -> Matrix {
        let words = multisets(self.t_dim, n);
        let rows = self.hom_labels(n).len();
        let cols: Vec<Vec<BigRational>> = words.iter().map(|w| self.iterate_on(w)).collect();
        Matrix::from_columns(rows, &cols)
    }

    /// The `n`-th iterate `Sym^n T -> ⊕_p Hom(H^p, H^{p-n})`.
    pub fn iterate_theta(&self, n: usize) -> Result<LabeledMatrix<HomEntry, Multiset>, Error> {
        if !self.check_commuting() {
            return Err(Error::NotAHiggsField);
        }
        let m = self.iterate_matrix(n);
        Ok(LabeledMatrix::from_matrix(
            self.hom_labels(n),
            multisets(self.t_dim, n),
            &m,
        )?)
    }

    /// `(H^v)^q = (H^{d-q})^v` with `theta^v(delta)` the transpose of `theta(delta)`.
    pub fn dual(&self, d: i64) -> InfGradedHiggs {
        let grades: BTreeMap<i64, usize> = self.grades.iter().map(|(&p, &n)| (d - p, n)).collect();
        let theta = self
            .theta
            .iter()
            .map(|blocks| {
                // theta(delta) : H^p -> H^{p-1} becomes (H^v)^{d-p+1} -> (H^v)^{d-p}.
                blocks
                    .iter()
                    .map(|(&p, m)| (d - p + 1, m.transpose()))
                    .collect()
            })
            .collect();
        InfGradedHiggs::new(self.t_dim, grades, theta)
            .expect("dual of a well-formed field is well formed")
    }

    /// Direct sum over the same tangent space, blocks placed diagonally.
    pub fn direct_sum(&self, other: &InfGradedHiggs) -> Result<InfGradedHiggs, Error> {
        if self.t_dim != other.t_dim {
            return Err(Error::InvalidInput(
                "direct sum needs a common tangent space".into(),
            ));
        }
        let mut grades = self.grades.clone();
        for (&p, &n) in &other.grades {
            *grades.entry(p).or_insert(0) += n;
        }
        let theta = (0..self.t_dim)
            .map(|delta| {
                let mut blocks = BTreeMap::new();
                for &p in grades.keys() {
                    let (a_src, b_src) = (self.dim(p), other.dim(p));
                    let (a_tgt, b_tgt) = (self.dim(p - 1), other.dim(p - 1));
                    if a_tgt + b_tgt == 0 {
                        continue;
                    }
                    let mut m = Matrix::zeros(a_tgt + b_tgt, a_src + b_src);
                    if let Some(x) = self.block(delta, p) {
                        place(&mut m, x, 0, 0);
                    }
                    if let Some(y) = other.block(delta, p) {
                        place(&mut m, y, a_tgt, a_src);
                    }
                    blocks.insert(p, m);
                }
                blocks
            })
            .collect();
        InfGradedHiggs::new(self.t_dim, grades, theta)
    }
}

fn place(target: &mut Matrix, block: &Matrix, r0: usize, c0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            if !block[(i, j)].is_zero() {
                target[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grades(list: &[(i64, usize)]) -> BTreeMap<i64, usize> {
        list.iter().copied().collect()
    }

    #[test]
    fn zero_field_commutes() {
        let h = InfGradedHiggs::zero(3, grades(&[(0, 2), (1, 3), (2, 2)]));
        assert!(h.check_commuting());
        assert!(h.iterate_theta(2).unwrap().to_rational().unwrap().is_zero());
    }

    #[test]
    fn single_operator_always_commutes() {
        let theta = vec![BTreeMap::from([
            (1, Matrix::from_i64(&[vec![1, 2]])),
            (2, Matrix::from_i64(&[vec![3], vec![-1]])),
        ])];
        let h = InfGradedHiggs::new(1, grades(&[(0, 1), (1, 2), (2, 1)]), theta).unwrap();
        assert!(h.check_commuting());
    }

    #[test]
    fn noncommuting_pair() {
        // H^0, H^1, H^2 all one-dimensional except H^1 of dim 2.
        // theta(0): H^2 -> e0, H^1 -> (1, 0); theta(1): H^2 -> e1, H^1 -> (1, 0).
        let theta = vec![
            BTreeMap::from([
                (2, Matrix::from_i64(&[vec![1], vec![0]])),
                (1, Matrix::from_i64(&[vec![1, 0]])),
            ]),
            BTreeMap::from([
                (2, Matrix::from_i64(&[vec![0], vec![1]])),
                (1, Matrix::from_i64(&[vec![1, 0]])),
            ]),
        ];
        let h = InfGradedHiggs::new(2, grades(&[(0, 1), (1, 2), (2, 1)]), theta).unwrap();
        assert!(!h.check_commuting());
        assert_eq!(h.iterate_theta(2), Err(Error::NotAHiggsField));
    }

    #[test]
    fn bad_shapes_rejected() {
        let theta = vec![BTreeMap::from([(1, Matrix::from_i64(&[vec![1, 2]]))])];
        assert!(InfGradedHiggs::new(1, grades(&[(0, 1), (1, 1)]), theta).is_err());
        assert!(InfGradedHiggs::new(2, grades(&[(0, 1)]), vec![BTreeMap::new()]).is_err());
    }

    #[test]
    fn iterate_zero_and_one() {
        let theta = vec![
            BTreeMap::from([(1, Matrix::from_i64(&[vec![2, 0]]))]),
            BTreeMap::from([(1, Matrix::from_i64(&[vec![0, 5]]))]),
        ];
        let h = InfGradedHiggs::new(2, grades(&[(0, 1), (1, 2)]), theta).unwrap();
        let id = h.iterate_theta(0).unwrap();
        // identity on H^0 (1 entry) and H^1 (4 entries)
        assert_eq!(id.rows(), 5);
        assert_eq!(
            id.to_rational()
                .unwrap()
                .column(0)
                .iter()
                .filter(|x| !x.is_zero())
                .count(),
            3
        );
        let one = h.iterate_theta(1).unwrap().to_rational().unwrap();
        assert_eq!(one, Matrix::from_i64(&[vec![2, 0], vec![0, 5]]));
    }

    #[test]
    fn dual_reflects_grades() {
        let h = InfGradedHiggs::zero(2, grades(&[(0, 1), (1, 3), (3, 2)]));
        let dual = h.dual(3);
        assert_eq!(dual.grades(), &grades(&[(0, 2), (2, 3), (3, 1)]));
        assert!(dual.is_zero());
        assert_eq!(dual.dual(3), h);
    }

    #[test]
    fn direct_sum_dimensions() {
        let a = InfGradedHiggs::zero(1, grades(&[(0, 1), (1, 1)]));
        let b = InfGradedHiggs::zero(1, grades(&[(1, 2), (2, 1)]));
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.grades(), &grades(&[(0, 1), (1, 3), (2, 1)]));
        assert!(a
            .direct_sum(&InfGradedHiggs::zero(2, BTreeMap::new()))
            .is_err());
    }
}
