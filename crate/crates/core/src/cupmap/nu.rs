use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Error;
use crate::exactla::{LabeledMatrix, Matrix, Method, RowReduced};
use crate::polyring::{CubicForm, JacobianRing, Monomial, RingElement, NVARS};

/// Unordered pair `{a, b}` of basis indices of `R_3`, stored with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym2Label {
    a: usize,
    b: usize,
}

impl Sym2Label {
    pub fn new(a: usize, b: usize) -> Self {
        Sym2Label {
            a: a.min(b),
            b: a.max(b),
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// All pairs of a basis of size `n`, lexicographic.
    pub fn enumerate(n: usize) -> Vec<Sym2Label> {
        (0..n)
            .flat_map(|a| (a..n).map(move |b| Sym2Label { a, b }))
            .collect()
    }
}

impl fmt::Display for Sym2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.a, self.b)
    }
}

/// Basis vector `e_a ^ e_b` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wedge2Label {
    a: usize,
    b: usize,
}

impl Wedge2Label {
    pub fn new(a: usize, b: usize) -> Option<Self> {
        (a < b).then_some(Wedge2Label { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn enumerate(n: usize) -> Vec<Wedge2Label> {
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| Wedge2Label { a, b }))
            .collect()
    }

    /// Position of `(a, b)` in [`Wedge2Label::enumerate`] for a basis of size `n`.
    pub fn position(&self, n: usize) -> usize {
        self.a * n - self.a * (self.a + 1) / 2 + (self.b - self.a - 1)
    }
}

impl fmt::Display for Wedge2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.a, self.b)
    }
}

/// Row of the matrix of `nu`: the entry of `nu(f.g)(source)` at `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NuRow {
    pub source: Wedge2Label,
    pub target: Wedge2Label,
}

impl fmt::Display for NuRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source, self.target)
    }
}

/// `nu : Sym^2 R_3 -> Hom(wedge^2 R_1, wedge^2 R_4)` in the standard bases.
#[derive(Clone, Debug)]
pub struct NuMatrix {
    pub matrix: LabeledMatrix<NuRow, Sym2Label>,
    pub r1: Vec<Monomial>,
    pub r3: Vec<Monomial>,
    pub r4: Vec<Monomial>,
    dense: Matrix,
}

impl NuMatrix {
    pub fn rational(&self) -> &Matrix {
        &self.dense
    }

    /// Exact rank over Q (certified multimodular elimination).
    pub fn rank(&self) -> usize {
        self.row_reduce().rank()
    }

    pub fn row_reduce(&self) -> RowReduced {
        self.dense.row_reduce_with(Method::Multimodular)
    }

    /// Kernel basis over Q, one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        self.row_reduce().kernel_basis()
    }

    pub fn column_index(&self, label: &Sym2Label) -> usize {
        self.matrix
            .col_labels()
            .iter()
            .position(|l| l == label)
            .expect("label in range")
    }

    /// `nu(v)` flattened over the rows, for `v` in `Sym^2 R_3` coordinates.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.dense.mul_vec(v)
    }
}

/// `u ^ v` in the basis `e_a ^ e_b`, `a < b`.
pub fn wedge(u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
    let n = u.len();
    Wedge2Label::enumerate(n)
        .into_iter()
        .map(|w| &u[w.a] * &v[w.b] - &u[w.b] * &v[w.a])
        .collect()
}

/// `f phi ^ g psi + g phi ^ f psi` for `f, g` in `R_3` and `phi, psi` in `R_1`.
pub fn nu_value(
    ring: &JacobianRing,
    f: &RingElement,
    g: &RingElement,
    phi: &RingElement,
    psi: &RingElement,
) -> Result<Vec<BigRational>, Error> {
    if f.degree != 3 || g.degree != 3 || phi.degree != 1 || psi.degree != 1 {
        return Err(Error::InvalidInput(
            "nu takes degree-3 and degree-1 arguments".into(),
        ));
    }
    let fphi = ring.multiply(f, phi)?;
    let gpsi = ring.multiply(g, psi)?;
    let gphi = ring.multiply(g, phi)?;
    let fpsi = ring.multiply(f, psi)?;
    let a = wedge(&fphi.coords, &gpsi.coords);
    let b = wedge(&gphi.coords, &fpsi.coords);
    Ok(a.into_iter().zip(b).map(|(x, y)| x + y).collect())
}

pub fn build_nu(form: &CubicForm) -> Result<NuMatrix, Error> {
    build_nu_from_ring(&JacobianRing::new(form))
}

pub fn build_nu_from_ring(ring: &JacobianRing) -> Result<NuMatrix, Error> {
    if !ring.is_smooth() {
        return Err(Error::NotSmooth);
    }
    let r1: Vec<Monomial> = ring.basis(1).standard_monomials().to_vec();
    let r3: Vec<Monomial> = ring.basis(3).standard_monomials().to_vec();
    let r4: Vec<Monomial> = ring.basis(4).standard_monomials().to_vec();
    let b4 = ring.basis(4);

    // products[a][p] = D * NF(x_p * r3[a]) with D the common denominator,
    // so the wedges below run in integer arithmetic.
    let raw: Vec<Vec<&[BigRational]>> = r3
        .iter()
        .map(|s| {
            (0..NVARS)
                .map(|p| b4.normal_form(&Monomial::var(p).mul(s)))
                .collect()
        })
        .collect();
    let denom = raw
        .iter()
        .flatten()
        .flat_map(|v| v.iter())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let products: Vec<Vec<Vec<BigInt>>> = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
                .collect()
        })
        .collect();
    let denom2 = &denom * &denom;

    let sources = Wedge2Label::enumerate(r1.len());
    let targets = Wedge2Label::enumerate(r4.len());
    let cols = Sym2Label::enumerate(r3.len());
    let rows: Vec<NuRow> = sources
        .iter()
        .flat_map(|&source| targets.iter().map(move |&target| NuRow { source, target }))
        .collect();

    let int_wedge =
        |u: &[BigInt], v: &[BigInt], w: &Wedge2Label| &u[w.a] * &v[w.b] - &u[w.b] * &v[w.a];
    let mut dense = Matrix::zeros(rows.len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        let (f, g) = (&products[col.a], &products[col.b]);
        for (si, src) in sources.iter().enumerate() {
            let (p, q) = (src.a, src.b);
            for (ti, t) in targets.iter().enumerate() {
                let v = int_wedge(&f[p], &g[q], t) + int_wedge(&g[p], &f[q], t);
                if !v.is_zero() {
                    dense[(si * targets.len() + ti, j)] = BigRational::new(v, denom2.clone());
                }
            }
        }
    }
    let matrix = LabeledMatrix::from_matrix(rows, cols, &dense)?;
    Ok(NuMatrix {
        matrix,
        r1,
        r3,
        r4,
        dense,
    })
}

/// Exact rank of `nu` over Q.
pub fn nu_rank(form: &CubicForm) -> Result<usize, Error> {
    Ok(build_nu(form)?.rank())
}
