//! Compatibility of a Higgs field with a cup-product map, and the induced map `c`.

use num_rational::BigRational;
use num_traits::Zero;

use super::field::InfGradedHiggs;
use super::sym::{multisets, sym_dim, sym_power};
use super::Error;
use crate::exactla::Matrix;

/// `kappa : T -> K` and `mu : Sym^d K -> C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityContext {
    d: usize,
    kappa: Matrix,
    mu: Matrix,
}

impl CompatibilityContext {
    /// `kappa` is `dim K x dim T`; `mu` has one column per multiset of size `d`
    /// in `0..dim K`, in lex order.
    pub fn new(d: usize, kappa: Matrix, mu: Matrix) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::InvalidInput("d must be at least 1".into()));
        }
        let expected = sym_dim(kappa.rows(), d);
        if mu.cols() != expected {
            return Err(Error::InvalidInput(format!(
                "mu has {} columns, Sym^{d} of a {}-dimensional space has {expected}",
                mu.cols(),
                kappa.rows()
            )));
        }
        Ok(CompatibilityContext { d, kappa, mu })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn kappa(&self) -> &Matrix {
        &self.kappa
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn t_dim(&self) -> usize {
        self.kappa.cols()
    }

    pub fn is_versal(&self) -> bool {
        self.kappa.rank() == self.kappa.rows()
    }

    /// `mu o Sym^d kappa : Sym^d T -> C`.
    pub fn composite(&self) -> Matrix {
        self.mu.mul(&sym_power(&self.kappa, self.d))
    }
}

fn check_dims(h: &InfGradedHiggs, ctx: &CompatibilityContext) -> Result<(), Error> {
    if h.t_dim() != ctx.t_dim() {
        return Err(Error::InvalidInput(format!(
            "Higgs field has {} directions, kappa has {}",
            h.t_dim(),
            ctx.t_dim()
        )));
    }
    Ok(())
}

/// `ker(mu o Sym^d kappa) ⊂ ker(theta^{o d})`.
pub fn is_compatible(h: &InfGradedHiggs, ctx: &CompatibilityContext) -> Result<bool, Error> {
    check_dims(h, ctx)?;
    if !h.check_commuting() {
        return Err(Error::NotAHiggsField);
    }
    let theta_d = h.iterate_matrix(ctx.d);
    Ok(ctx
        .composite()
        .kernel()
        .iter()
        .all(|v| theta_d.mul_vec(v).iter().all(Zero::is_zero)))
}

/// The map `c : im(mu) -> ⊕_p Hom(H^p, H^{p-d})` with `c o mu o Sym^d kappa = theta^{o d}`,
/// stored on a basis of `im(mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    /// Columns form a basis of `im(mu)` inside `C`.
    image_basis: Matrix,
    /// Column `j` is `c` of the `j`-th basis vector.
    values: Matrix,
}

impl InducedMap {
    pub fn image_basis(&self) -> &Matrix {
        &self.image_basis
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn image_dim(&self) -> usize {
        self.image_basis.cols()
    }

    /// `c(w)`, or `None` if `w` is not in `im(mu)`.
    pub fn apply(&self, w: &[BigRational]) -> Option<Vec<BigRational>> {
        let coords = self.image_basis.solve(w)?;
        Some(self.values.mul_vec(&coords))
    }
}

/// Solves for `c` using the standard basis of `Sym^d T` as spanning set.
pub fn induced_c(h: &InfGradedHiggs, ctx: &CompatibilityContext) -> Result<InducedMap, Error> {
    let n = multisets(ctx.t_dim(), ctx.d).len();
    let spanning: Vec<Vec<BigRational>> = Matrix::identity(n).to_rows();
    induced_c_from(h, ctx, &spanning)
}

/// Solves for `c` from the images of `spanning` (vectors in `Sym^d T`).
/// Their images under `mu o Sym^d kappa` must span `im(mu)`.
pub fn induced_c_from(
    h: &InfGradedHiggs,
    ctx: &CompatibilityContext,
    spanning: &[Vec<BigRational>],
) -> Result<InducedMap, Error> {
    check_dims(h, ctx)?;
    if !ctx.is_versal() {
        return Err(Error::NotVersal);
    }
    if !is_compatible(h, ctx)? {
        return Err(Error::NotCompatible);
    }
    let n = sym_dim(ctx.t_dim(), ctx.d);
    if spanning.iter().any(|v| v.len() != n) {
        return Err(Error::InvalidInput(format!(
            "spanning vectors must have length {n}"
        )));
    }
    let s = Matrix::from_columns(n, spanning);
    let images = ctx.composite().mul(&s);
    let red = images.row_reduce();
    if red.rank() != ctx.mu.rank() {
        return Err(Error::InvalidInput(
            "spanning set does not cover im(mu)".into(),
        ));
    }
    // Independent images form the basis; c on them is theta^{o d} of the preimages.
    let pivots = red.pivot_cols().to_vec();
    let image_basis = images.select_columns(&pivots);
    let values = h.iterate_matrix(ctx.d).mul(&s).select_columns(&pivots);
    Ok(InducedMap {
        image_basis,
        values,
    })
}
