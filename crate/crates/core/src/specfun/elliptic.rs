//! Complete elliptic integral K in the modulus convention,
//! K(k) = int_0^(pi/2) (1 - k^2 sin^2 u)^(-1/2) du, via the AGM.

use crate::error::{Error, Result};
use crate::numerics::Real;

fn agm(a0: Real, g0: Real, wbits: u32) -> Real {
    let mut a = a0;
    let mut g = g0;
    let half = Real::from_ratio(1, 2, wbits);
    let tol = Real::exp2i(-(wbits as i64) + 4, wbits);
    for _ in 0..96 {
        if (&a - &g).abs() <= &tol * &a {
            break;
        }
        let an = &(&a + &g) * &half;
        let gn = (&a * &g).sqrt();
        a = an;
        g = gn;
    }
    &(&a + &g) * &half
}

/// K as a function of the modulus k in [0, 1).
pub fn elliptic_k(modulus: &Real) -> Result<Real> {
    let bits = modulus.precision_bits();
    if modulus.is_negative() || modulus >= &Real::one(bits) {
        return Err(Error::Domain(format!(
            "elliptic_k needs modulus in [0,1), got {modulus:?}"
        )));
    }
    let wbits = bits + 32;
    let k = modulus.with_precision(wbits);
    let comp = (&Real::one(wbits) - &(&k * &k)).sqrt();
    let m = agm(Real::one(wbits), comp, wbits);
    let two = Real::from_u64(2, wbits);
    Ok((&Real::pi(wbits) / &(&two * &m)).with_precision(bits))
}

/// Complementary integral K'(lambda) = K(sqrt(1 - lambda^2)) for
/// lambda in (0, 1]; diverges logarithmically as lambda -> 0.
pub fn elliptic_k_prime(lambda: &Real) -> Result<Real> {
    let bits = lambda.precision_bits();
    if !lambda.is_positive() || lambda > &Real::one(bits) {
        return Err(Error::Domain(format!(
            "elliptic_k_prime needs lambda in (0,1], got {lambda:?}"
        )));
    }
    let wbits = bits + 32;
    let m = agm(Real::one(wbits), lambda.with_precision(wbits), wbits);
    let two = Real::from_u64(2, wbits);
    Ok((&Real::pi(wbits) / &(&two * &m)).with_precision(bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_modulus_is_half_pi() {
        let bits = 192;
        let got = elliptic_k(&Real::zero(bits)).unwrap();
        let want = &Real::pi(bits) * &Real::from_ratio(1, 2, bits);
        assert!((&got - &want).abs() < Real::exp2i(-180, bits));
    }

    #[test]
    fn k_prime_at_one_is_half_pi() {
        let bits = 192;
        let got = elliptic_k_prime(&Real::one(bits)).unwrap();
        let want = &Real::pi(bits) * &Real::from_ratio(1, 2, bits);
        assert!((&got - &want).abs() < Real::exp2i(-180, bits));
    }

    #[test]
    fn reference_values() {
        let bits = 192;
        // k = 1/sqrt(2)
        let k = Real::from_u64(2, bits).sqrt().recip();
        let got = elliptic_k(&k).unwrap();
        let want = Real::parse("1.85407467730137191843385034719526004621759882352", bits).unwrap();
        assert!((&got - &want).abs() < Real::exp2i(-150, bits), "{got:?}");
        let got = elliptic_k(&Real::parse("0.3", bits).unwrap()).unwrap();
        let want = Real::parse("1.6080486199305128012672072222386871571121767288", bits).unwrap();
        assert!((&got - &want).abs() < Real::exp2i(-150, bits));
    }

    #[test]
    fn domain_errors() {
        assert!(elliptic_k(&Real::one(64)).is_err());
        assert!(elliptic_k(&Real::from_f64(-0.25, 64)).is_err());
        assert!(elliptic_k_prime(&Real::zero(64)).is_err());
    }
}
