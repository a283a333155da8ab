//! Large-Q limits of the finite A-factor products: the even factor tends to
//! 2 gamma Gamma^2(1-w)/Gamma^2(1/2-w) and the odd one to
//! (1/2 gamma) Gamma^2(w)/Gamma^2(1/2+w), with w = ks/2P and relative error
//! O(1/Q^2).

use crate::error::{Error, Result};
use crate::exactdisc::FluxRatio;
use crate::numerics::Real;
use crate::specfun::gamma_ratio_sq;

/// Gamma^2(1-w)/Gamma^2(1/2-w) for rational w = num/den >= 0, continued by
/// reflection when the arguments go negative. Poles (w integer >= 1 or
/// half-integer) are reported as domain errors.
fn ratio_even(num: u64, den: u64, bits: u32) -> Result<Real> {
    if num == 0 {
        // Gamma(1)^2/Gamma(1/2)^2 = 1/pi
        return Ok(Real::pi(bits).recip());
    }
    if num % den == 0 {
        return Err(Error::Domain(format!(
            "gamma argument 1 - {num}/{den} is a nonpositive integer"
        )));
    }
    if (2 * num).checked_sub(den).map(|v| v % (2 * den) == 0) == Some(true) {
        return Err(Error::Domain(format!(
            "gamma argument 1/2 - {num}/{den} is a nonpositive integer"
        )));
    }
    let w = Real::from_ratio(num as i64, den as i64, bits);
    let half = Real::from_ratio(1, 2, bits);
    let one = Real::one(bits);
    if w < half {
        return gamma_ratio_sq(&(&one - &w), &(&half - &w));
    }
    // reflection: Gamma(1-w)/Gamma(1/2-w) = cot(pi w) Gamma(1/2+w)/Gamma(w)
    let cot = (&Real::pi(bits) * &w).tan().recip();
    let base = gamma_ratio_sq(&(&half + &w), &w)?;
    Ok(&(&cot * &cot) * &base)
}

/// Asymptotic even A factor: 2 gamma Gamma^2(1-ks/2P)/Gamma^2(1/2-ks/2P).
pub fn approx_a_even(flux: &FluxRatio, k: u64) -> Result<Real> {
    let (s, _) = flux.decomposition()?;
    let bits = flux.gamma().precision_bits();
    let two_gamma = &Real::from_u64(2, bits) * flux.gamma();
    let r = ratio_even(k * s, 2 * flux.p(), bits)?;
    Ok(&two_gamma * &r)
}

/// Asymptotic odd A factor: (1/2 gamma) Gamma^2(ks/2P)/Gamma^2(1/2+ks/2P).
pub fn approx_a_odd(flux: &FluxRatio, k: u64) -> Result<Real> {
    let (s, _) = flux.decomposition()?;
    if k == 0 {
        return Err(Error::Domain("odd A factor needs k >= 1".into()));
    }
    let bits = flux.gamma().precision_bits();
    let w = Real::from_ratio((k * s) as i64, (2 * flux.p()) as i64, bits);
    let half = Real::from_ratio(1, 2, bits);
    let base = gamma_ratio_sq(&w, &(&half + &w))?;
    let two_gamma = &Real::from_u64(2, bits) * flux.gamma();
    Ok(&base / &two_gamma)
}
