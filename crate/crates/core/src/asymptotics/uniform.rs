//! Uniform asymptotics of Sigma(x) for P = 1: the cosh-cosine form near zero
//! energy and the exponential-cosine form away from it, with the phase and
//! growth exponents mu, nu given by arccos/arccosh integrals.

use crate::error::{Error, Result};
use crate::numerics::{integrate, EndpointRule, QuadratureSpec, Real};
use crate::specfun::arg_gamma_half_plus_iy;

/// Growth and phase integrals at one energy (lambda = x/4).
#[derive(Clone, Debug)]
pub struct MuNu {
    pub lambda: Real,
    pub mu: Real,
    pub nu: Real,
}

/// Near-center form: Sigma(x) ~ 4 cosh(lambda Q) cos(phase(lambda)).
pub fn uniform_center(q: u64, x: &Real) -> Real {
    let bits = x.precision_bits().max(128);
    let xw = x.with_precision(bits);
    let pi = Real::pi(bits);
    let four = Real::from_u64(4, bits);
    let lam_q = &(&xw / &four) * &Real::from_u64(q, bits);
    let y = &lam_q / &pi;
    let log_term = (&(&four * &Real::from_u64(q, bits)) / &pi).ln();
    let phase = &(&(&(&Real::from_u64(2, bits) * &y) * &log_term)
        - &(&Real::from_u64(2, bits) * &arg_gamma_half_plus_iy(&y)))
        - &(&(&pi * &Real::from_u64(q, bits)) / &Real::from_u64(2, bits));
    &(&four * &lam_q.cosh()) * &phase.cos()
}

/// mu and nu integrals at lambda in (0, 1).
///
/// The integrands vanish like a square root at the shared break point
/// t* = arccos(2 lambda - 1)/(2 pi), so both integrals use the square-root
/// endpoint substitution there.
pub fn mu_nu(lambda: &Real) -> Result<MuNu> {
    let bits = lambda.precision_bits().max(128);
    let one = Real::one(bits);
    if !lambda.is_positive() || lambda >= &one {
        return Err(Error::Domain(format!(
            "mu_nu needs lambda strictly inside (0,1), got {lambda:?}"
        )));
    }
    mu_nu_with_order(lambda, 24)
}

/// Same integrals at an explicit Gauss-Legendre panel order (the default
/// 24 is cross-checked against doubled order in the tests).
pub fn mu_nu_with_order(lambda: &Real, panel_order: u32) -> Result<MuNu> {
    let bits = lambda.precision_bits().max(128);
    let lam = lambda.with_precision(bits);
    let one = Real::one(bits);
    let two = Real::from_u64(2, bits);
    let pi = Real::pi(bits);
    let two_pi = &pi * &two;
    let two_lam = &two * &lam;
    // break point where 2 lambda - cos(2 pi t) crosses 1
    let t_star = &(&two_lam - &one).acos() / &two_pi;
    let half = Real::from_ratio(1, 2, bits);
    let tol = Real::exp2i(-((bits as i64) / 2).max(60), bits);
    let spec = QuadratureSpec::new(tol)
        .with_endpoint_rule(EndpointRule::SqrtSingularity)
        .with_panel_order(panel_order);

    let mu = integrate(
        |t| {
            let arg = &two_lam - &(&two_pi * t).cos();
            arg.acosh()
        },
        &t_star,
        &half,
        &spec,
    )?;
    let nu = integrate(
        |t| {
            let arg = Real::min_of(&(&two_lam - &(&two_pi * t).cos()), &one);
            arg.acos()
        },
        &Real::zero(bits),
        &t_star,
        &spec,
    )?;
    Ok(MuNu {
        lambda: lam,
        mu,
        nu,
    })
}

/// Away-from-center form: Sigma(x) ~ 2 e^(2Q mu) cos(2Q nu), extended to
/// negative x by Sigma(x) = (-1)^Q Sigma(-x).
pub fn uniform_away(q: u64, x: &Real) -> Result<Real> {
    let bits = x.precision_bits().max(128);
    let four = Real::from_u64(4, bits);
    if x.abs() >= four {
        return Err(Error::Domain(format!(
            "uniform_away needs |x| < 4, got {x:?}"
        )));
    }
    if x.is_zero() {
        return Err(Error::Domain(
            "uniform_away needs x != 0 (use uniform_center near zero)".into(),
        ));
    }
    let lam = &x.abs() / &four;
    let mn = mu_nu(&lam)?;
    let two_q = Real::from_u64(2 * q, bits);
    let val = &(&Real::from_u64(2, bits) * &(&two_q * &mn.mu).exp())
        * &(&two_q * &mn.nu).cos();
    if x.is_negative() && q % 2 == 1 {
        Ok(-&val)
    } else {
        Ok(val)
    }
}
