//! The Fermat cubic: explicit kernel of `nu` and its torus-character blocks.
//!
//! For `F = x0^3 + ... + x4^3` the Jacobian ideal is `(x0^2, ..., x4^2)` and
//! every `R_k` has the square-free monomials `x_I`, `|I| = k`, as basis. The
//! diagonal torus `mu_3^5` acts on `x_I . x_J` through the character
//! `delta_I + delta_J mod 3`, and `nu` respects the grading.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::nu::{build_nu, NuMatrix, NuRow, Sym2Label};
use super::Error;
use crate::polyring::{CubicForm, Monomial, NVARS};

/// Character of `mu_3^5`, as exponents mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterVec(pub [u8; NVARS]);

impl CharacterVec {
    fn of_monomials(plus: &[Monomial], minus: &[Monomial]) -> Self {
        let mut c = [0i32; NVARS];
        for m in plus {
            for (ci, e) in c.iter_mut().zip(m.exps()) {
                *ci += i32::from(e);
            }
        }
        for m in minus {
            for (ci, e) in c.iter_mut().zip(m.exps()) {
                *ci -= i32::from(e);
            }
        }
        CharacterVec(c.map(|x| x.rem_euclid(3) as u8))
    }
}

impl std::fmt::Display for CharacterVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Character of the column `x_I . x_J`.
pub fn column_character(nu: &NuMatrix, label: &Sym2Label) -> CharacterVec {
    CharacterVec::of_monomials(&[nu.r3[label.a()], nu.r3[label.b()]], &[])
}

/// Character of `Hom(x_t ^ x_u, x_K ^ x_L)`: target weight minus source weight.
pub fn row_character(nu: &NuMatrix, row: &NuRow) -> CharacterVec {
    CharacterVec::of_monomials(
        &[nu.r4[row.target.a()], nu.r4[row.target.b()]],
        &[nu.r1[row.source.a()], nu.r1[row.source.b()]],
    )
}

/// One of the five kernel vectors `f + g + h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatKernelVector {
    /// The common index `i` with `I ∩ J = {i}`.
    pub index: usize,
    pub pairs: Vec<Sym2Label>,
    pub coords: Vec<BigRational>,
}

fn r3_position(nu: &NuMatrix, set: &[usize]) -> usize {
    let m = Monomial::square_free(set);
    nu.r3
        .iter()
        .position(|s| *s == m)
        .expect("square-free cubic is standard for Fermat")
}

fn subsets3() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..NVARS {
        for b in a + 1..NVARS {
            for c in b + 1..NVARS {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// For each `i`, the sum of the three `x_I . x_J` with `I ∩ J = {i}`.
pub fn fermat_kernel_vectors(nu: &NuMatrix) -> Vec<FermatKernelVector> {
    let subsets = subsets3();
    (0..NVARS)
        .map(|i| {
            let mut pairs = Vec::new();
            for (x, s) in subsets.iter().enumerate() {
                for t in &subsets[x + 1..] {
                    let common: Vec<usize> = s.iter().copied().filter(|e| t.contains(e)).collect();
                    if common == [i] {
                        pairs.push(Sym2Label::new(r3_position(nu, s), r3_position(nu, t)));
                    }
                }
            }
            pairs.sort();
            let mut coords = vec![BigRational::zero(); nu.matrix.cols()];
            for p in &pairs {
                coords[nu.column_index(p)] = BigRational::one();
            }
            FermatKernelVector {
                index: i,
                pairs,
                coords,
            }
        })
        .collect()
}

/// The five kernel vectors, each checked to be annihilated exactly, and
/// checked together to span the whole kernel.
pub fn fermat_kernel() -> Result<Vec<FermatKernelVector>, Error> {
    verify_fermat_kernel(&build_nu(&CubicForm::fermat())?)
}

/// [`fermat_kernel`] for an already built Fermat `nu`.
pub fn verify_fermat_kernel(nu: &NuMatrix) -> Result<Vec<FermatKernelVector>, Error> {
    let vectors = fermat_kernel_vectors(nu);
    for v in &vectors {
        if nu.apply(&v.coords).iter().any(|x| !x.is_zero()) {
            return Err(Error::Inconsistent(format!(
                "vector for i={} is not in the kernel",
                v.index
            )));
        }
    }
    let span = crate::exactla::Matrix::from_columns(
        nu.matrix.cols(),
        &vectors.iter().map(|v| v.coords.clone()).collect::<Vec<_>>(),
    );
    let kernel_dim = nu.matrix.cols() - nu.rank();
    if span.rank() != vectors.len() || kernel_dim != vectors.len() {
        return Err(Error::Inconsistent(format!(
            "kernel has dimension {kernel_dim}, explicit vectors span {}",
            span.rank()
        )));
    }
    Ok(vectors)
}

/// Columns of `nu` grouped by torus character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterBlock {
    pub character: CharacterVec,
    pub labels: Vec<Sym2Label>,
    pub rank: usize,
}

/// Blocks in order of first column; fails unless the block ranks add up
/// to the total rank.
pub fn fermat_character_blocks() -> Result<Vec<CharacterBlock>, Error> {
    let nu = build_nu(&CubicForm::fermat())?;
    character_blocks(&nu)
}

pub fn character_blocks(nu: &NuMatrix) -> Result<Vec<CharacterBlock>, Error> {
    let mut order: Vec<CharacterVec> = Vec::new();
    let mut groups: BTreeMap<CharacterVec, Vec<(usize, Sym2Label)>> = BTreeMap::new();
    for (j, label) in nu.matrix.col_labels().iter().enumerate() {
        let c = column_character(nu, label);
        if !groups.contains_key(&c) {
            order.push(c);
        }
        groups.entry(c).or_default().push((j, *label));
    }
    let blocks: Vec<CharacterBlock> = order
        .into_iter()
        .map(|c| {
            let cols = &groups[&c];
            let idx: Vec<usize> = cols.iter().map(|(j, _)| *j).collect();
            CharacterBlock {
                character: c,
                labels: cols.iter().map(|(_, l)| *l).collect(),
                rank: nu.rational().select_columns(&idx).rank(),
            }
        })
        .collect();
    let total = nu.rank();
    let sum: usize = blocks.iter().map(|b| b.rank).sum();
    if sum != total {
        return Err(Error::Inconsistent(format!(
            "block ranks sum to {sum} but the total rank is {total}"
        )));
    }
    Ok(blocks)
}

/// Image of a column label under `x_i -> x_{perm[i]}` (Fermat bases only).
pub fn permute_label(nu: &NuMatrix, perm: &[usize; NVARS], label: &Sym2Label) -> Sym2Label {
    let map = |a: usize| {
        let m = nu.r3[a].permute(perm);
        nu.r3
            .iter()
            .position(|s| *s == m)
            .expect("permutation preserves square-free cubics")
    };
    Sym2Label::new(map(label.a()), map(label.b()))
}
