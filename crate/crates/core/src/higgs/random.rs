//! Seeded generators of commuting Higgs fields and compatible contexts, and
//! the randomized property suite built on them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::compat::{induced_c, induced_c_from, is_compatible, CompatibilityContext};
use super::field::InfGradedHiggs;
use super::sym::{multisets, sym_dim, sym_power};
use super::Error;
use crate::exactla::Matrix;

/// Shape of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    /// Dimension of the tangent space `T`.
    pub t_dim: usize,
    /// Number of auxiliary variables `m`; `H^p = Sym^{d-p}(Q^m)`.
    pub vars: usize,
    /// Top grade, also the `d` of the compatibility context.
    pub d: usize,
    /// Entries are drawn from `-bound..=bound`.
    pub bound: i64,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            t_dim: 3,
            vars: 2,
            d: 2,
            bound: 3,
        }
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = int(rng.gen_range(-bound..=bound));
        }
    }
    m
}

/// A random invertible matrix (lower times upper unitriangular) and its inverse.
pub fn random_invertible(rng: &mut impl Rng, n: usize, bound: i64) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = int(rng.gen_range(-bound..=bound));
            upper[(j, i)] = int(rng.gen_range(-bound..=bound));
        }
    }
    let g = lower.mul(&upper);
    let inv = g.inverse().expect("unitriangular product is invertible");
    (g, inv)
}

/// Multiplication by `sum_i coeffs[i] y_i` from `Sym^k(Q^m)` to `Sym^{k+1}(Q^m)`.
fn multiplication(coeffs: &[BigRational], k: usize) -> Matrix {
    let m = coeffs.len();
    let src = multisets(m, k);
    let tgt = multisets(m, k + 1);
    let mut out = Matrix::zeros(tgt.len(), src.len());
    for (j, u) in src.iter().enumerate() {
        for (i, c) in coeffs.iter().enumerate() {
            let w = u.join(&super::sym::Multiset(vec![i]));
            let r = tgt.binary_search(&w).expect("product is a basis multiset");
            out[(r, j)] += c;
        }
    }
    out
}

/// `H^p = Sym^{d-p}(Q^m)` for `0 <= p <= d`, each `theta(delta)` multiplication
/// by a random linear form, then conjugated grade by grade with random
/// invertible matrices. Commutes by construction.
pub fn random_field(rng: &mut impl Rng, shape: Shape) -> InfGradedHiggs {
    let d = shape.d as i64;
    let grades: BTreeMap<i64, usize> = (0..=d)
        .map(|p| (p, sym_dim(shape.vars, (d - p) as usize)))
        .collect();
    let changes: BTreeMap<i64, (Matrix, Matrix)> = grades
        .iter()
        .map(|(&p, &n)| (p, random_invertible(rng, n, shape.bound)))
        .collect();
    let theta = (0..shape.t_dim)
        .map(|_| {
            let coeffs: Vec<BigRational> = (0..shape.vars)
                .map(|_| int(rng.gen_range(-shape.bound..=shape.bound)))
                .collect();
            (1..=d)
                .map(|p| {
                    let mult = multiplication(&coeffs, (d - p) as usize);
                    let block = changes[&(p - 1)].0.mul(&mult).mul(&changes[&p].1);
                    (p, block)
                })
                .collect()
        })
        .collect();
    InfGradedHiggs::new(shape.t_dim, grades, theta).expect("generated field is well formed")
}

/// A random versal context for which `h` is compatible:
/// `mu = A o theta^{o d} o Sym^d(kappa^{-1})` with `kappa` invertible and `A` injective.
pub fn compatible_context(
    rng: &mut impl Rng,
    h: &InfGradedHiggs,
    d: usize,
    bound: i64,
) -> CompatibilityContext {
    let (kappa, kappa_inv) = random_invertible(rng, h.t_dim(), bound);
    let theta_d = h.iterate_matrix(d);
    let hom = theta_d.rows();
    let (top, _) = random_invertible(rng, hom, bound);
    let a = top.vstack(&random_matrix(rng, 2, hom, bound));
    let mu = a.mul(&theta_d).mul(&sym_power(&kappa_inv, d));
    CompatibilityContext::new(d, kappa, mu).expect("generated context is well formed")
}

/// A context with random `kappa` (square) and random `mu`; usually not compatible.
pub fn random_context(
    rng: &mut impl Rng,
    t_dim: usize,
    d: usize,
    c_dim: usize,
    bound: i64,
) -> CompatibilityContext {
    let kappa = random_matrix(rng, t_dim, t_dim, bound);
    let mu = random_matrix(rng, c_dim, sym_dim(t_dim, d), bound);
    CompatibilityContext::new(d, kappa, mu).expect("generated context is well formed")
}

/// Outcome of one property over all trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
    /// First failing trial, if any.
    pub first_failure: Option<usize>,
}

impl PropertyOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

pub const PROPERTIES: [&str; 4] = [
    "commuting",
    "duality_involution",
    "duality_preserves_compatibility",
    "induced_c_roundtrip",
];

fn trial(seed: u64, index: usize) -> Result<[bool; 4], Error> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let shape = Shape {
        t_dim: rng.gen_range(1..=3),
        vars: rng.gen_range(1..=2),
        d: rng.gen_range(1..=3),
        bound: 3,
    };
    let h = random_field(&mut rng, shape);
    let d = shape.d as i64;
    let dual = h.dual(d);

    let commuting = h.check_commuting() && dual.check_commuting();
    let involution = dual.dual(d) == h;

    let ctx = compatible_context(&mut rng, &h, shape.d, shape.bound);
    let preserved = is_compatible(&h, &ctx)? && is_compatible(&dual, &ctx)?;

    let c = induced_c(&h, &ctx)?;
    let composite = ctx.composite();
    let theta_d = h.iterate_matrix(shape.d);
    let roundtrip =
        (0..composite.cols()).all(|j| c.apply(&composite.column(j)) == Some(theta_d.column(j)));
    // A second spanning set must give the same map on im(mu).
    let (g, _) = random_invertible(&mut rng, composite.cols(), shape.bound);
    let c2 = induced_c_from(&h, &ctx, &g.transpose().to_rows())?;
    let probe = random_matrix(&mut rng, composite.cols(), 1, shape.bound).column(0);
    let w = composite.mul_vec(&probe);
    let independent = c.apply(&w).is_some() && c.apply(&w) == c2.apply(&w);

    Ok([commuting, involution, preserved, roundtrip && independent])
}

/// Runs every property on `trials` independent seeded instances.
pub fn selftest(seed: u64, trials: usize) -> Result<Vec<PropertyOutcome>, Error> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    let mut out: Vec<PropertyOutcome> = PROPERTIES
        .iter()
        .map(|&name| PropertyOutcome {
            name,
            trials,
            passed: 0,
            first_failure: None,
        })
        .collect();
    for i in 0..trials {
        let results = trial(seed, i)?;
        for (o, ok) in out.iter_mut().zip(results) {
            if ok {
                o.passed += 1;
            } else if o.first_failure.is_none() {
                o.first_failure = Some(i);
            }
        }
    }
    Ok(out)
}
