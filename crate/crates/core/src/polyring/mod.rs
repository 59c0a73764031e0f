//! Jacobian rings of cubic forms in five variables.

mod cubic;
mod jacobian;
mod monomial;

pub use cubic::{random_cubic, CubicFile, CubicForm, FileTerm};
pub use jacobian::{
    hilbert_function, hilbert_function_mod_p, is_smooth, quotient_basis, quotient_basis_direct,
    quotient_basis_lifted, JacobianRing, QuotientBasis, RingElement, MAX_DEGREE, SMOOTH_HILBERT,
};
pub use monomial::{monomials_of_degree, Monomial, Poly, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cubic form is singular")]
    NotSmooth,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse cubic: {0}")]
    Parse(String),
    #[error(transparent)]
    LinAlg(#[from] crate::exactla::Error),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{echelonize, is_nondegenerate};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn cone() -> CubicForm {
        CubicForm::from_int_terms(&[
            ([3, 0, 0, 0, 0], 1),
            ([0, 3, 0, 0, 0], 1),
            ([0, 0, 3, 0, 0], 1),
        ])
        .unwrap()
    }

    fn elem(ring: &JacobianRing, idx: &[usize]) -> RingElement {
        ring.element_from_monomial(&Monomial::square_free(idx))
            .unwrap()
    }

    #[test]
    fn fermat_bases_are_square_free() {
        let f = CubicForm::fermat();
        let r3 = quotient_basis(&f, 3).unwrap();
        assert_eq!(r3.dim(), 10);
        assert!(r3.standard_monomials().iter().all(Monomial::is_square_free));
        let r5 = quotient_basis(&f, 5).unwrap();
        assert_eq!(r5.standard_monomials(), &[Monomial([1, 1, 1, 1, 1])]);
        assert_eq!(quotient_basis(&f, 6).unwrap().dim(), 0);
        assert!(quotient_basis(&f, 7).is_err());
    }

    #[test]
    fn fermat_hilbert_function() {
        assert_eq!(
            hilbert_function(&CubicForm::fermat()),
            [1, 5, 10, 10, 5, 1, 0]
        );
        assert!(is_smooth(&CubicForm::fermat()));
    }

    #[test]
    fn singular_examples() {
        let f = CubicForm::from_int_terms(&[([3, 0, 0, 0, 0], 1)]).unwrap();
        let h = hilbert_function(&f);
        // Ideal (x0^2): 84 x0-free sextics plus 56 of the form x0 * (x0-free quintic).
        assert_eq!(h[6], 84 + 56);
        assert!(!is_smooth(&f));
        assert!(!is_smooth(&cone()));
        assert!(matches!(
            JacobianRing::new(&f).pairing_r1_r4(),
            Err(Error::NotSmooth)
        ));
    }

    #[test]
    fn lifted_and_direct_routes_agree() {
        let forms = [
            CubicForm::fermat(),
            cone(),
            CubicForm::from_int_terms(&[
                ([2, 1, 0, 0, 0], 1),
                ([0, 0, 1, 1, 1], 1),
                ([0, 3, 0, 0, 0], -2),
            ])
            .unwrap(),
            random_cubic(3, 2).unwrap(),
        ];
        for f in &forms {
            for k in 0..=MAX_DEGREE {
                assert_eq!(
                    quotient_basis_lifted(f, k).unwrap(),
                    quotient_basis_direct(f, k).unwrap(),
                    "degree {k} of {}",
                    f.to_json()
                );
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_on_standard_monomials() {
        let ring = JacobianRing::new(&random_cubic(11, 3).unwrap());
        for k in 0..=MAX_DEGREE {
            let b = ring.basis(k);
            for (t, s) in b.standard_monomials().iter().enumerate() {
                let nf = b.normal_form(s);
                for (u, x) in nf.iter().enumerate() {
                    assert_eq!(x.is_one(), u == t);
                    assert!(x.is_zero() || u == t);
                }
            }
        }
    }

    #[test]
    fn reduce_kills_the_ideal_slice() {
        let f = random_cubic(5, 4).unwrap();
        let ring = JacobianRing::new(&f);
        for k in 2..=4 {
            let b = ring.basis(k);
            for m in monomials_of_degree(k - 2) {
                for g in f.jacobian_generators() {
                    let shifted: Poly = g.iter().map(|(t, c)| (t.mul(&m), c.clone())).collect();
                    assert!(b.reduce_poly(&shifted).iter().all(Zero::is_zero));
                }
            }
            // Kernel of the reduction map has exactly the ideal's dimension.
            let e = echelonize(&b.reduce_matrix()).unwrap();
            assert_eq!(e.rank, b.dim());
        }
    }

    #[test]
    fn fermat_multiplication_rule() {
        let ring = JacobianRing::new(&CubicForm::fermat());
        let p = ring
            .multiply(&elem(&ring, &[0, 1, 2]), &elem(&ring, &[3]))
            .unwrap();
        assert_eq!(p, elem(&ring, &[0, 1, 2, 3]));
        let z = ring
            .multiply(&elem(&ring, &[0, 1, 2]), &elem(&ring, &[0]))
            .unwrap();
        assert!(z.is_zero());
        let top = ring
            .multiply(&elem(&ring, &[0, 1, 2]), &elem(&ring, &[3, 4]))
            .unwrap();
        assert_eq!(top.degree, 5);
        assert_eq!(top.coords, vec![BigRational::one()]);
        assert!(ring.multiply(&top, &elem(&ring, &[0, 1])).is_err());
    }

    #[test]
    fn fermat_pairing_is_a_monomial_matrix() {
        let ring = JacobianRing::new(&CubicForm::fermat());
        let m = ring.pairing_r1_r4().unwrap();
        for i in 0..5 {
            let nonzero: Vec<usize> = (0..5).filter(|&j| !m.get(i, j).is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            let partner = m.col_labels()[nonzero[0]];
            assert_eq!(partner.0[i], 0, "x{i} pairs with its complement");
        }
        assert!(is_nondegenerate(&m).unwrap());
    }

    #[test]
    fn perturbed_fermat_with_cross_term() {
        let mut terms: Vec<([u8; 5], i64)> = (0..5)
            .map(|i| {
                let mut e = [0; 5];
                e[i] = 3;
                (e, 1)
            })
            .collect();
        terms.push(([1, 1, 1, 0, 0], 1));
        let f = CubicForm::from_int_terms(&terms).unwrap();
        // Frozen from the direct oracle: the Hilbert function stays generic.
        let direct: Vec<usize> = (0..=6)
            .map(|k| quotient_basis_direct(&f, k).unwrap().dim())
            .collect();
        assert_eq!(direct, vec![1, 5, 10, 10, 5, 1, 0]);
        assert!(is_smooth(&f));
    }

    #[test]
    fn rational_coefficients_give_same_ring_as_scaled_integers() {
        let f = random_cubic(9, 3).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let g = CubicForm::new(f.terms().iter().map(|(m, c)| (*m, c * &half))).unwrap();
        for k in 0..=MAX_DEGREE {
            assert_eq!(
                quotient_basis(&f, k).unwrap(),
                quotient_basis(&g, k).unwrap()
            );
        }
    }

    #[test]
    fn modular_hilbert_bounds_rational() {
        let f = random_cubic(21, 5).unwrap();
        let hq = hilbert_function(&f);
        let hp = hilbert_function_mod_p(&f, 10007).unwrap();
        for k in 0..=MAX_DEGREE {
            assert!(hp[k] >= hq[k]);
        }
    }
}
