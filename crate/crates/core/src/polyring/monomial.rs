use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

/// Number of variables `x0..x4`.
pub const NVARS: usize = 5;

/// Exponent vector of a monomial in `x0..x4`.
///
/// Ordering is graded lexicographic with `x0 > x1 > ... > x4`: higher degree
/// is greater, and within a degree the larger exponent of the earliest
/// variable wins. Canonical listings run from greatest to least.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u8; NVARS]);

/// Polynomial as a map from monomial to nonzero coefficient.
pub type Poly = BTreeMap<Monomial, BigRational>;

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    /// Square-free monomial `x_I` for an index set `I`.
    pub fn square_free(indices: &[usize]) -> Monomial {
        let mut e = [0; NVARS];
        for &i in indices {
            assert_eq!(e[i], 0, "repeated index in square-free monomial");
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn exps(&self) -> [u8; NVARS] {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.0[i] > 0).then(|| {
            let mut e = self.0;
            e[i] -= 1;
            Monomial(e)
        })
    }

    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Support as a sorted index set.
    pub fn support(&self) -> Vec<usize> {
        (0..NVARS).filter(|&i| self.0[i] > 0).collect()
    }

    /// Relabels variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize; NVARS]) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[perm[i]] = self.0[i];
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x0^2*x3`, or `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..NVARS)
            .filter(|&i| self.0[i] > 0)
            .map(|i| match self.0[i] {
                1 => format!("x{i}"),
                e => format!("x{i}^{e}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of degree `d`, greatest first.
pub fn monomials_of_degree(d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = [0u8; NVARS];
    fill(0, d, &mut cur, &mut out);
    out
}

fn fill(var: usize, left: usize, cur: &mut [u8; NVARS], out: &mut Vec<Monomial>) {
    if var == NVARS - 1 {
        cur[var] = left as u8;
        out.push(Monomial(*cur));
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e as u8;
        fill(var + 1, left - e, cur, out);
    }
    cur[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_match_binomials() {
        assert_eq!(monomials_of_degree(0), vec![Monomial::ONE]);
        assert_eq!(monomials_of_degree(1).len(), 5);
        assert_eq!(monomials_of_degree(3).len(), 35);
        for d in 0..=6 {
            assert_eq!(monomials_of_degree(d).len(), binom(d + 4, 4));
        }
    }

    #[test]
    fn listing_is_strictly_decreasing() {
        for d in 0..=6 {
            let ms = monomials_of_degree(d);
            assert!(ms.windows(2).all(|w| w[0] > w[1]));
            assert!(ms.iter().all(|m| m.degree() == d));
        }
        assert_eq!(monomials_of_degree(2)[0], Monomial([2, 0, 0, 0, 0]));
        assert_eq!(monomials_of_degree(2)[1], Monomial([1, 1, 0, 0, 0]));
        assert_eq!(
            *monomials_of_degree(2).last().unwrap(),
            Monomial([0, 0, 0, 0, 2])
        );
    }

    #[test]
    fn display() {
        assert_eq!(Monomial([2, 0, 0, 1, 0]).to_string(), "x0^2*x3");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
