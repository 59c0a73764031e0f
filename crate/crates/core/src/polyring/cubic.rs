use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::monomial::{monomials_of_degree, Monomial, Poly, NVARS};
use super::Error;
use crate::exactla::{format_rational, parse_rational};

/// Nonzero homogeneous cubic in `x0..x4` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicForm {
    terms: BTreeMap<Monomial, BigRational>,
}

impl CubicForm {
    /// Zero coefficients are dropped. Fails if a monomial is not of degree 3
    /// or if nothing nonzero remains.
    pub fn new<I>(terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != 3 {
                return Err(Error::InvalidInput(format!("term {m} is not of degree 3")));
            }
            if map.insert(m, c).is_some() {
                return Err(Error::InvalidInput(format!("duplicate term {m}")));
            }
        }
        map.retain(|_, c: &mut BigRational| !c.is_zero());
        if map.is_empty() {
            return Err(Error::InvalidInput("cubic form is zero".into()));
        }
        Ok(CubicForm { terms: map })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[([u8; NVARS], i64)]) -> Result<Self, Error> {
        Self::new(
            terms
                .iter()
                .map(|&(e, c)| (Monomial(e), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    /// `x0^3 + x1^3 + x2^3 + x3^3 + x4^3`.
    pub fn fermat() -> Self {
        let terms = (0..NVARS).map(|i| {
            let mut e = [0; NVARS];
            e[i] = 3;
            (Monomial(e), BigRational::one())
        });
        Self::new(terms).expect("Fermat cubic is a valid form")
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `self + other`, failing only if the sum is zero.
    pub fn add(&self, other: &CubicForm) -> Result<CubicForm, Error> {
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            *map.entry(*m).or_insert_with(BigRational::zero) += c;
        }
        CubicForm::new(map)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if let Some(q) = m.div_var(i) {
                out.insert(q, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// The five partial derivatives.
    pub fn jacobian_generators(&self) -> [Poly; NVARS] {
        std::array::from_fn(|i| self.partial(i))
    }

    /// Applies the variable relabeling `x_i -> x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize; NVARS]) -> CubicForm {
        CubicForm::new(self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())))
            .expect("permutation keeps a valid form")
    }

    pub fn to_file(&self) -> CubicFile {
        CubicFile {
            degree: 3,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| FileTerm {
                    coeff: format_rational(c),
                    exps: m.0.map(u32::from),
                })
                .collect(),
            vars: NVARS as u32,
        }
    }

    /// Canonical JSON: keys sorted, terms greatest monomial first.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("cubic file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: CubicFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &CubicFile) -> Result<Self, Error> {
        if file.vars != NVARS as u32 {
            return Err(Error::Parse(format!(
                "vars must be {NVARS}, got {}",
                file.vars
            )));
        }
        if file.degree != 3 {
            return Err(Error::Parse(format!(
                "degree must be 3, got {}",
                file.degree
            )));
        }
        let mut terms = BTreeMap::new();
        for t in &file.terms {
            if t.exps.iter().sum::<u32>() != 3 {
                return Err(Error::Parse(format!(
                    "exponents {:?} do not sum to 3",
                    t.exps
                )));
            }
            let m = Monomial(t.exps.map(|e| e as u8));
            let c = parse_rational(&t.coeff)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if terms.insert(m, c).is_some() {
                return Err(Error::Parse(format!("duplicate exps {:?}", t.exps)));
            }
        }
        CubicForm::new(terms).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// On-disk cubic: `{"degree":3,"terms":[{"coeff":"1/2","exps":[3,0,0,0,0]}],"vars":5}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicFile {
    pub degree: u32,
    pub terms: Vec<FileTerm>,
    pub vars: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileTerm {
    pub coeff: String,
    pub exps: [u32; NVARS],
}

/// Cubic whose 35 coefficients are drawn uniformly from `[-bound, bound]`,
/// in canonical monomial order, from a ChaCha8 stream seeded by `seed`.
pub fn random_cubic(seed: u64, coeff_bound: u32) -> Result<CubicForm, Error> {
    if coeff_bound < 1 {
        return Err(Error::InvalidInput(
            "coefficient bound must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(coeff_bound);
    let monomials = monomials_of_degree(3);
    loop {
        let terms: Vec<(Monomial, BigRational)> = monomials
            .iter()
            .map(|&m| {
                (
                    m,
                    BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))),
                )
            })
            .collect();
        // An all-zero draw is astronomically unlikely; keep drawing from the same stream.
        if let Ok(f) = CubicForm::new(terms) {
            return Ok(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_partials() {
        let gens = CubicForm::fermat().jacobian_generators();
        for (i, g) in gens.iter().enumerate() {
            let mut e = [0; NVARS];
            e[i] = 2;
            assert_eq!(g.len(), 1);
            assert_eq!(g[&Monomial(e)], BigRational::from_integer(3.into()));
        }
    }

    #[test]
    fn single_term_partials() {
        let f = CubicForm::from_int_terms(&[([3, 0, 0, 0, 0], 1)]).unwrap();
        let gens = f.jacobian_generators();
        assert_eq!(
            gens[0][&Monomial([2, 0, 0, 0, 0])],
            BigRational::from_integer(3.into())
        );
        assert!(gens[1..].iter().all(|g| g.is_empty()));

        let f = CubicForm::from_int_terms(&[([2, 1, 0, 0, 0], 1)]).unwrap();
        let gens = f.jacobian_generators();
        assert_eq!(
            gens[0][&Monomial([1, 1, 0, 0, 0])],
            BigRational::from_integer(2.into())
        );
        assert_eq!(gens[1][&Monomial([2, 0, 0, 0, 0])], BigRational::one());
        assert!(gens[2..].iter().all(|g| g.is_empty()));
    }

    #[test]
    fn rejects_bad_forms() {
        assert!(CubicForm::from_int_terms(&[([2, 0, 0, 0, 0], 1)]).is_err());
        assert!(CubicForm::from_int_terms(&[([3, 0, 0, 0, 0], 0)]).is_err());
        assert!(CubicForm::from_int_terms(&[([3, 0, 0, 0, 0], 1), ([3, 0, 0, 0, 0], 2)]).is_err());
    }

    #[test]
    fn random_cubic_is_reproducible() {
        let a = random_cubic(7, 5).unwrap();
        let b = random_cubic(7, 5).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_ne!(a, random_cubic(8, 5).unwrap());
        assert!(a
            .terms()
            .values()
            .all(|c| c.numer().magnitude() <= &5u32.into()));
        assert!(random_cubic(7, 0).is_err());
    }

    #[test]
    fn file_format() {
        let f = CubicForm::from_int_terms(&[([0, 0, 0, 0, 3], 2), ([1, 1, 1, 0, 0], -1)]).unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"degree":3,"terms":[{"coeff":"-1","exps":[1,1,1,0,0]},{"coeff":"2","exps":[0,0,0,0,3]}],"vars":5}"#
        );
        assert_eq!(CubicForm::from_json(&f.to_json()).unwrap(), f);

        let half = r#"{"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"1/2"}]}"#;
        let g = CubicForm::from_json(half).unwrap();
        assert_eq!(
            g.coefficient(&Monomial([3, 0, 0, 0, 0])),
            BigRational::new(1.into(), 2.into())
        );

        for bad in [
            r#"{"vars":4,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"1"}]}"#,
            r#"{"vars":5,"degree":2,"terms":[{"exps":[2,0,0,0,0],"coeff":"1"}]}"#,
            r#"{"vars":5,"degree":3,"terms":[{"exps":[2,0,0,0,0],"coeff":"1"}]}"#,
            r#"{"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"1"},{"exps":[3,0,0,0,0],"coeff":"2"}]}"#,
            r#"{"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"x"}]}"#,
            r#"{"vars":5,"degree":3,"terms":[]}"#,
            "not json",
        ] {
            assert!(
                matches!(CubicForm::from_json(bad), Err(Error::Parse(_))),
                "{bad}"
            );
        }
    }
}
