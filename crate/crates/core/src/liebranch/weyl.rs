use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::roots::root_system;
use super::types::{SimpleType, Weight};
use super::Error;

fn check(t: SimpleType, w: &Weight) -> Result<(), Error> {
    if w.coords().len() != t.rank() {
        return Err(Error::InvalidWeight(format!(
            "{w} has the wrong length for {t}"
        )));
    }
    if !w.is_dominant() {
        return Err(Error::InvalidWeight(format!("{w} is not dominant")));
    }
    Ok(())
}

/// `prod_{beta > 0} (lambda + rho, beta) / (rho, beta)`.
///
/// With `lambda = sum l_j w_j` and `beta = sum c_j alpha_j`,
/// `(lambda + rho, beta) = sum c_j (l_j + 1) (alpha_j, alpha_j) / 2`.
pub fn weyl_dim(t: SimpleType, lambda: &Weight) -> Result<u64, Error> {
    weyl_dim_big(t, lambda)?
        .to_u64()
        .ok_or_else(|| Error::InvalidWeight(format!("dimension of {lambda} overflows")))
}

/// [`weyl_dim`] without the `u64` limit.
pub fn weyl_dim_big(t: SimpleType, lambda: &Weight) -> Result<BigInt, Error> {
    check(t, lambda)?;
    let rs = root_system(t);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for beta in &rs.positive_roots {
        let mut a = 0i64;
        let mut b = 0i64;
        for j in 0..rs.rank() {
            a += beta[j] * (lambda.coords()[j] + 1) * rs.half_norms[j];
            b += beta[j] * rs.half_norms[j];
        }
        num *= a;
        den *= b;
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension formula must divide exactly");
    Ok(q)
}

/// Dominant representative of `-lambda`: the highest weight of the dual.
pub fn dual_weight(t: SimpleType, lambda: &Weight) -> Result<Weight, Error> {
    check(t, lambda)?;
    let a = root_system(t).cartan;
    let mut mu: Vec<i64> = lambda.coords().iter().map(|c| -c).collect();
    // s_i(mu) = mu - mu_i alpha_i, and alpha_i has fundamental coordinates a[i].
    while let Some(i) = mu.iter().position(|&c| c < 0) {
        let m = mu[i];
        for (x, aij) in mu.iter_mut().zip(&a[i]) {
            *x -= m * aij;
        }
    }
    Ok(Weight(mu))
}

pub fn is_self_dual(t: SimpleType, lambda: &Weight) -> Result<bool, Error> {
    Ok(dual_weight(t, lambda)? == *lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn trivial_rep() {
        for t in SimpleType::all() {
            assert_eq!(weyl_dim(t, &Weight::zero(t.rank())).unwrap(), 1);
        }
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(weyl_dim(ty("C4"), &w(&[0, 1, 0, 0])).unwrap(), 27);
        assert_eq!(weyl_dim(ty("F4"), &w(&[0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(weyl_dim(ty("F4"), &w(&[1, 0, 0, 0])).unwrap(), 52);
        assert_eq!(weyl_dim(ty("A2"), &w(&[2, 2])).unwrap(), 27);
        assert_eq!(weyl_dim(ty("G2"), &w(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim(ty("G2"), &w(&[0, 1])).unwrap(), 14);
        assert_eq!(weyl_dim(ty("G2"), &w(&[2, 0])).unwrap(), 27);
        assert_eq!(weyl_dim(ty("E6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap(), 27);
        assert_eq!(weyl_dim(ty("E6"), &w(&[0, 1, 0, 0, 0, 0])).unwrap(), 78);
        assert_eq!(weyl_dim(ty("D5"), &w(&[1, 0, 0, 0, 0])).unwrap(), 10);
        assert_eq!(weyl_dim(ty("D5"), &w(&[0, 0, 0, 1, 0])).unwrap(), 16);
        assert_eq!(weyl_dim(ty("A5"), &w(&[0, 1, 0, 0, 0])).unwrap(), 15);
        assert_eq!(weyl_dim(ty("A1"), &w(&[3])).unwrap(), 4);
    }

    #[test]
    fn duals() {
        assert_eq!(
            dual_weight(ty("A5"), &w(&[0, 0, 0, 0, 1])).unwrap(),
            w(&[1, 0, 0, 0, 0])
        );
        assert_eq!(
            dual_weight(ty("D5"), &w(&[0, 0, 0, 1, 0])).unwrap(),
            w(&[0, 0, 0, 0, 1])
        );
        assert_eq!(
            dual_weight(ty("E6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap(),
            w(&[0, 0, 0, 0, 0, 1])
        );
        assert_eq!(
            dual_weight(ty("E6"), &w(&[0, 1, 0, 0, 0, 0])).unwrap(),
            w(&[0, 1, 0, 0, 0, 0])
        );
        assert_eq!(dual_weight(ty("A2"), &w(&[2, 1])).unwrap(), w(&[1, 2]));
        for l in [[1, 0, 0, 0], [0, 1, 0, 0], [2, 0, 1, 3]] {
            assert_eq!(dual_weight(ty("C4"), &w(&l)).unwrap(), w(&l));
        }
    }

    #[test]
    fn invalid_weights() {
        assert!(matches!(
            weyl_dim(ty("A2"), &w(&[-1, 0])),
            Err(Error::InvalidWeight(_))
        ));
        assert!(matches!(
            dual_weight(ty("A2"), &w(&[1])),
            Err(Error::InvalidWeight(_))
        ));
    }
}
