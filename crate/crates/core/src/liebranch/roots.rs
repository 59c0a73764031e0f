//! Root systems from a symmetrized Cartan matrix, positive roots by closure.

use std::collections::HashSet;

use super::types::{Family, SimpleType};

/// Symmetrized form `B_ij = (alpha_i, alpha_j)` with short roots of norm 2,
/// simple roots numbered as in Bourbaki.
pub fn symmetrized_form(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut b = vec![vec![0i64; n]; n];
    let mut edge = |i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    let chain = |edge: &mut dyn FnMut(usize, usize, i64), upto: usize| {
        for i in 1..upto {
            edge(i, i + 1, -1);
        }
    };
    let diag: Vec<i64> = match t.family() {
        Family::A => {
            chain(&mut edge, n);
            vec![2; n]
        }
        Family::C => {
            chain(&mut edge, n - 1);
            edge(n - 1, n, -2);
            let mut d = vec![2; n];
            d[n - 1] = 4;
            d
        }
        Family::D => {
            chain(&mut edge, n - 1);
            edge(n - 2, n, -1);
            vec![2; n]
        }
        Family::E => {
            for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
                edge(i, j, -1);
            }
            vec![2; n]
        }
        Family::F => {
            edge(1, 2, -2);
            edge(2, 3, -2);
            edge(3, 4, -1);
            vec![4, 4, 2, 2]
        }
        Family::G => {
            edge(1, 2, -3);
            vec![2, 6]
        }
    };
    for (i, d) in diag.into_iter().enumerate() {
        b[i][i] = d;
    }
    b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    /// `cartan[i][j] = <alpha_i, alpha_j^v> = 2 B_ij / B_jj`.
    pub cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`.
    pub half_norms: Vec<i64>,
    /// Positive roots in the simple-root basis, sorted by height then lex.
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Half the sum of the positive roots, in the simple-root basis, doubled
    /// to stay integral.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for r in &self.positive_roots {
            for (o, c) in out.iter_mut().zip(r) {
                *o += c;
            }
        }
        out
    }
}

fn pairing(cartan: &[Vec<i64>], beta: &[i64], i: usize) -> i64 {
    // <beta, alpha_i^v> = sum_j beta_j A_ji
    beta.iter()
        .enumerate()
        .map(|(j, &c)| c * cartan[j][i])
        .sum()
}

pub fn root_system(t: SimpleType) -> RootSystem {
    let b = symmetrized_form(t);
    let n = t.rank();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * b[i][j] / b[j][j]).collect())
        .collect();
    let half_norms = (0..n).map(|i| b[i][i] / 2).collect();

    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: p = how far down it extends.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(&cartan, beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    RootSystem {
        simple_type: t,
        cartan,
        half_norms,
        positive_roots: all,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A5", 15),
            ("C4", 16),
            ("D5", 20),
            ("F4", 24),
            ("G2", 6),
            ("E6", 36),
        ] {
            assert_eq!(root_system(ty(name)).positive_roots.len(), count, "{name}");
        }
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(root_system(ty("G2")).cartan, vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(
            root_system(ty("C4")).cartan,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -2, 2]
            ]
        );
        assert_eq!(
            root_system(ty("F4")).cartan,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn highest_roots() {
        // Highest roots in Bourbaki coordinates.
        for (name, top) in [
            ("A2", vec![1, 1]),
            ("G2", vec![3, 2]),
            ("F4", vec![2, 3, 4, 2]),
            ("E6", vec![1, 2, 2, 3, 2, 1]),
            ("C4", vec![2, 2, 2, 1]),
            ("D5", vec![1, 2, 2, 1, 1]),
        ] {
            assert_eq!(
                root_system(ty(name)).positive_roots.last(),
                Some(&top),
                "{name}"
            );
        }
    }
}
