//! Graded pieces of the Jacobian ring `Q[x0..x4] / (dF/dx_i)`.
//!
//! Degree `k` is described by its standard monomials (the non-leading
//! monomials of the degree-`k` slice of the ideal under the graded-lex
//! order, i.e. the non-pivot columns of its leftmost-pivot echelon form)
//! together with the normal form of every degree-`k` monomial.
//!
//! Two routes compute the same basis and normal forms:
//!
//! * direct: echelonize `{ m * dF/dx_i }` inside the degree-`k` monomials;
//! * lifted: for `k >= 3` the ideal slice is `sum_i x_i * I_{k-1}`, so
//!   `R_k = (R_{k-1})^5 / {Koszul relations}` and only that quotient is
//!   eliminated.
//!
//! [`JacobianRing`] uses the direct route throughout. Up to degree 3 it runs
//! fraction-free elimination; from degree 4 on, where the slices are large
//! and nearly full rank, it uses certified multimodular elimination.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cubic::CubicForm;
use super::monomial::{monomials_of_degree, Monomial, Poly, NVARS};
use super::Error;
use crate::exactla::{self, LabeledMatrix, Matrix, Method};

/// Highest degree handled; the smoothness probe looks at `R_6`.
pub const MAX_DEGREE: usize = 6;

/// Hilbert function of the Jacobian ring of a smooth cubic threefold.
pub const SMOOTH_HILBERT: [usize; MAX_DEGREE + 1] = [1, 5, 10, 10, 5, 1, 0];

/// Basis of one graded piece `R_k` and the normal-form map onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    standard: Vec<Monomial>,
    /// Normal form of `monomials[j]` in the `standard` basis.
    normal_forms: Vec<Vec<BigRational>>,
}

impl QuotientBasis {
    fn from_normal_forms(
        degree: usize,
        standard: Vec<Monomial>,
        normal_forms: Vec<Vec<BigRational>>,
    ) -> Self {
        let monomials = monomials_of_degree(degree);
        let index = monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        QuotientBasis {
            degree,
            monomials,
            index,
            standard,
            normal_forms,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn all_monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn standard_index(&self, m: &Monomial) -> Option<usize> {
        self.standard.iter().position(|s| s == m)
    }

    /// Normal form of a monomial of this degree.
    pub fn normal_form(&self, m: &Monomial) -> &[BigRational] {
        let j = *self
            .index
            .get(m)
            .unwrap_or_else(|| panic!("{m} is not of degree {}", self.degree));
        &self.normal_forms[j]
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn reduce_poly(&self, p: &Poly) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (m, c) in p {
            for (o, x) in out.iter_mut().zip(self.normal_form(m)) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// The reduction map as a `dim R_k x #monomials` matrix.
    pub fn reduce_matrix(&self) -> LabeledMatrix<Monomial, Monomial> {
        let columns: Vec<Vec<BigRational>> = self.normal_forms.clone();
        let m = Matrix::from_columns(self.dim(), &columns);
        LabeledMatrix::from_matrix(self.standard.clone(), self.monomials.clone(), &m)
            .expect("monomial labels are distinct")
    }
}

/// Element of `R_k` in the standard basis of that degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub degree: usize,
    pub coords: Vec<BigRational>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// The graded pieces `R_0..R_6` of the Jacobian ring of a cubic form.
#[derive(Clone, Debug)]
pub struct JacobianRing {
    form: CubicForm,
    bases: Vec<QuotientBasis>,
}

impl JacobianRing {
    pub fn new(form: &CubicForm) -> Self {
        Self::up_to(form, MAX_DEGREE)
    }

    fn up_to(form: &CubicForm, top: usize) -> Self {
        let mut bases: Vec<QuotientBasis> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let b = if k <= 3 {
                direct_basis(form, k)
            } else {
                direct_basis_with(form, k, Method::Multimodular)
            };
            bases.push(b);
        }
        JacobianRing {
            form: form.clone(),
            bases,
        }
    }

    pub fn form(&self) -> &CubicForm {
        &self.form
    }

    pub fn basis(&self, k: usize) -> &QuotientBasis {
        &self.bases[k]
    }

    pub fn hilbert_function(&self) -> [usize; MAX_DEGREE + 1] {
        std::array::from_fn(|k| self.bases[k].dim())
    }

    pub fn is_smooth(&self) -> bool {
        self.hilbert_function() == SMOOTH_HILBERT
    }

    pub fn element_from_monomial(&self, m: &Monomial) -> Result<RingElement, Error> {
        let k = m.degree();
        self.check_degree(k)?;
        Ok(RingElement {
            degree: k,
            coords: self.bases[k].normal_form(m).to_vec(),
        })
    }

    /// Reduces a homogeneous polynomial of degree `k`.
    pub fn element_from_poly(&self, k: usize, p: &Poly) -> Result<RingElement, Error> {
        self.check_degree(k)?;
        if p.keys().any(|m| m.degree() != k) {
            return Err(Error::InvalidInput(format!(
                "polynomial is not homogeneous of degree {k}"
            )));
        }
        Ok(RingElement {
            degree: k,
            coords: self.bases[k].reduce_poly(p),
        })
    }

    /// The polynomial `sum c_s * s` over standard monomials.
    pub fn lift(&self, a: &RingElement) -> Poly {
        self.bases[a.degree]
            .standard
            .iter()
            .zip(&a.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c.clone()))
            .collect()
    }

    fn check_degree(&self, k: usize) -> Result<(), Error> {
        if k > MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "degree {k} exceeds {MAX_DEGREE}"
            )));
        }
        Ok(())
    }

    fn check_element(&self, a: &RingElement) -> Result<(), Error> {
        self.check_degree(a.degree)?;
        if a.coords.len() != self.bases[a.degree].dim() {
            return Err(Error::InvalidInput(format!(
                "element of degree {} has {} coordinates, expected {}",
                a.degree,
                a.coords.len(),
                self.bases[a.degree].dim()
            )));
        }
        Ok(())
    }

    /// Product in `R`, reduced by the normal form of degree `j + k`.
    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check_element(a)?;
        self.check_element(b)?;
        let k = a.degree + b.degree;
        self.check_degree(k)?;
        let target = &self.bases[k];
        let mut out = vec![BigRational::zero(); target.dim()];
        let sa = &self.bases[a.degree].standard;
        let sb = &self.bases[b.degree].standard;
        for (ma, ca) in sa.iter().zip(&a.coords) {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in sb.iter().zip(&b.coords) {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                for (o, x) in out.iter_mut().zip(target.normal_form(&ma.mul(mb))) {
                    if !x.is_zero() {
                        *o += &c * x;
                    }
                }
            }
        }
        Ok(RingElement {
            degree: k,
            coords: out,
        })
    }

    /// Matrix of the multiplication `R_1 x R_4 -> R_5`, rows `x0..x4`,
    /// columns the standard basis of `R_4`.
    pub fn pairing_r1_r4(&self) -> Result<LabeledMatrix<Monomial, Monomial>, Error> {
        if !self.is_smooth() {
            return Err(Error::NotSmooth);
        }
        let r4 = &self.bases[4];
        let r5 = &self.bases[5];
        let rows: Vec<Vec<BigRational>> = (0..NVARS)
            .map(|i| {
                r4.standard
                    .iter()
                    .map(|s| r5.normal_form(&Monomial::var(i).mul(s))[0].clone())
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(rows);
        let row_labels = (0..NVARS).map(Monomial::var).collect();
        Ok(LabeledMatrix::from_matrix(
            row_labels,
            r4.standard.clone(),
            &m,
        )?)
    }
}

/// Echelonizes `{ m * dF/dx_i : deg m = k - 2 }` inside the degree-`k` monomials.
fn generator_matrix(form: &CubicForm, k: usize) -> Matrix {
    let monomials = monomials_of_degree(k);
    let index: HashMap<Monomial, usize> =
        monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    if k < 2 {
        return Matrix::zeros(0, monomials.len());
    }
    let gens = form.jacobian_generators();
    let mut rows = Vec::new();
    for m in monomials_of_degree(k - 2) {
        for g in &gens {
            if g.is_empty() {
                continue;
            }
            let mut row = vec![BigRational::zero(); monomials.len()];
            for (t, c) in g {
                row[index[&t.mul(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    Matrix::from_rows_with_cols(rows, monomials.len())
}

fn direct_basis(form: &CubicForm, k: usize) -> QuotientBasis {
    direct_basis_with(form, k, Method::Auto)
}

fn direct_basis_with(form: &CubicForm, k: usize, method: Method) -> QuotientBasis {
    let monomials = monomials_of_degree(k);
    let red = generator_matrix(form, k).row_reduce_with(method);
    let free = red.free_cols();
    let standard: Vec<Monomial> = free.iter().map(|&j| monomials[j]).collect();
    let mut normal_forms = vec![Vec::new(); monomials.len()];
    for (t, &j) in free.iter().enumerate() {
        let mut v = vec![BigRational::zero(); free.len()];
        v[t] = BigRational::one();
        normal_forms[j] = v;
    }
    for (r, &pc) in red.pivot_cols().iter().enumerate() {
        normal_forms[pc] = free.iter().map(|&f| -red.rows()[r][f].clone()).collect();
    }
    QuotientBasis::from_normal_forms(k, standard, normal_forms)
}

/// Builds `R_k` from `R_{k-1}` and `R_{k-2}` (valid for `k >= 3`, where the
/// ideal is generated in lower degree).
fn lifted_basis(prev: &QuotientBasis, prev2: &QuotientBasis, k: usize) -> QuotientBasis {
    let q = prev.dim();
    let width = NVARS * q;

    // Koszul relations m * (x_j e_i - x_i e_j), reduced into (R_{k-1})^5.
    let mut rel_rows = Vec::new();
    for m in &prev2.monomials {
        for i in 0..NVARS {
            for j in i + 1..NVARS {
                let mut row = vec![BigRational::zero(); width];
                for (s, c) in prev
                    .normal_form(&Monomial::var(j).mul(m))
                    .iter()
                    .enumerate()
                {
                    row[i * q + s] += c;
                }
                for (s, c) in prev
                    .normal_form(&Monomial::var(i).mul(m))
                    .iter()
                    .enumerate()
                {
                    row[j * q + s] -= c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rel_rows.push(row);
                }
            }
        }
    }
    let rel = Matrix::from_rows_with_cols(rel_rows, width).row_reduce();
    let free = rel.free_cols();
    let mut position = vec![usize::MAX; width];
    for (t, &f) in free.iter().enumerate() {
        position[f] = t;
    }
    let mut pivot_row = vec![usize::MAX; width];
    for (r, &pc) in rel.pivot_cols().iter().enumerate() {
        pivot_row[pc] = r;
    }
    // Image of the basis vector `c` of (R_{k-1})^5 in the quotient.
    let project = |c: usize, scale: &BigRational, out: &mut [BigRational]| {
        if position[c] != usize::MAX {
            out[position[c]] += scale;
        } else {
            let row = &rel.rows()[pivot_row[c]];
            for (t, &f) in free.iter().enumerate() {
                if !row[f].is_zero() {
                    out[t] -= scale * &row[f];
                }
            }
        }
    };

    let monomials = monomials_of_degree(k);
    let dim = free.len();
    let images: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|u| {
            let i = u.first_var().expect("positive degree");
            let m = u.div_var(i).expect("x_i divides u");
            let mut img = vec![BigRational::zero(); dim];
            for (s, c) in prev.normal_form(&m).iter().enumerate() {
                if !c.is_zero() {
                    project(i * q + s, c, &mut img);
                }
            }
            img
        })
        .collect();

    // Standard monomials: greedily independent images scanning from the
    // least monomial upward, i.e. leftmost pivots of the reversed columns.
    let n = monomials.len();
    let reversed: Vec<Vec<BigRational>> = images.iter().rev().cloned().collect();
    let red = Matrix::from_columns(dim, &reversed).row_reduce();
    debug_assert_eq!(red.rank(), dim);
    // Reversed pivot order is ascending in the monomial order; flip to canonical.
    let std_cols: Vec<usize> = red
        .pivot_cols()
        .iter()
        .rev()
        .map(|&pc| n - 1 - pc)
        .collect();
    let standard: Vec<Monomial> = std_cols.iter().map(|&j| monomials[j]).collect();
    let normal_forms = (0..n)
        .map(|j| {
            let rc = n - 1 - j;
            // Row r of `red` belongs to the r-th reversed pivot, i.e. standard index dim-1-r.
            let mut v = vec![BigRational::zero(); dim];
            for r in 0..dim {
                v[dim - 1 - r] = red.rows()[r][rc].clone();
            }
            v
        })
        .collect();
    QuotientBasis::from_normal_forms(k, standard, normal_forms)
}

/// Degree-`k` quotient basis, `k <= 6`.
pub fn quotient_basis(form: &CubicForm, k: usize) -> Result<QuotientBasis, Error> {
    if k > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "degree {k} exceeds {MAX_DEGREE}"
        )));
    }
    Ok(JacobianRing::up_to(form, k).bases.swap_remove(k))
}

/// Lifted route for every degree from 3 on.
pub fn quotient_basis_lifted(form: &CubicForm, k: usize) -> Result<QuotientBasis, Error> {
    if k > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "degree {k} exceeds {MAX_DEGREE}"
        )));
    }
    let mut bases: Vec<QuotientBasis> = Vec::with_capacity(k + 1);
    for d in 0..=k {
        let b = if d <= 2 {
            direct_basis(form, d)
        } else {
            lifted_basis(&bases[d - 1], &bases[d - 2], d)
        };
        bases.push(b);
    }
    Ok(bases.swap_remove(k))
}

/// Direct route: echelonizes the full degree-`k` slice of the ideal.
pub fn quotient_basis_direct(form: &CubicForm, k: usize) -> Result<QuotientBasis, Error> {
    if k > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "degree {k} exceeds {MAX_DEGREE}"
        )));
    }
    Ok(direct_basis(form, k))
}

pub fn hilbert_function(form: &CubicForm) -> [usize; MAX_DEGREE + 1] {
    JacobianRing::new(form).hilbert_function()
}

pub fn is_smooth(form: &CubicForm) -> bool {
    JacobianRing::new(form).is_smooth()
}

/// Dimensions of the graded pieces over `F_p`, from ranks of the generator
/// matrices mod `p`. Each entry is at least the rational dimension.
pub fn hilbert_function_mod_p(form: &CubicForm, p: u64) -> Result<[usize; MAX_DEGREE + 1], Error> {
    let mut out = [0; MAX_DEGREE + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        let g = generator_matrix(form, k);
        *slot = g.cols() - exactla::matrix_rank_mod_p(&g, p)?;
    }
    Ok(out)
}
