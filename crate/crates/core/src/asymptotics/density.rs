//! Density of states, band-width laws and the bandwidth sums: the limiting
//! density rho(x) = K'(x/4)/(2 pi^2), the central band width, the Thouless
//! total bandwidth and the fractional-power sum W(d).

use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureSpec, Real};
use crate::specfun::{catalan, elliptic_k_prime};

/// Limiting density of states rho(x) = K'(x/4)/(2 pi^2) on (-4, 0) u (0, 4).
///
/// K' diverges logarithmically at x = 0; that point is rejected rather than
/// extrapolated.
pub fn dos(x: &Real) -> Result<Real> {
    let bits = x.precision_bits().max(128);
    let four = Real::from_u64(4, bits);
    if x.abs() >= four {
        return Err(Error::Domain(format!("dos needs |x| < 4, got {x:?}")));
    }
    if x.is_zero() {
        return Err(Error::Singularity(
            "density of states has a logarithmic singularity at x = 0".into(),
        ));
    }
    let lam = &x.abs() / &four;
    let kp = elliptic_k_prime(&lam)?;
    let pi = Real::pi(bits);
    Ok(&kp / &(&(&pi * &pi) * &Real::from_u64(2, bits)))
}

/// Leading central band width: delta(t) = (4 pi / (Q ln Q)) arcsin(1/cosh t),
/// with t = lambda Q; negative t uses delta(|t|).
pub fn central_band_width_asym(q: u64, t: &Real) -> Real {
    assert!(q >= 3, "central_band_width_asym needs Q >= 3");
    let bits = t.precision_bits().max(128);
    let pi = Real::pi(bits);
    let q_r = Real::from_u64(q, bits);
    let pref = &(&Real::from_u64(4, bits) * &pi) / &(&q_r * &q_r.ln());
    let arc = t.abs().cosh().recip().asin();
    &pref * &arc
}

/// Thouless total bandwidth: W = 32 beta(2) / (pi Q).
pub fn thouless_w(q: u64, bits: u32) -> Real {
    assert!(q >= 3);
    let bits = bits.max(128);
    let g = catalan(bits);
    &(&Real::from_u64(32, bits) * &g) / &(&Real::pi(bits) * &Real::from_u64(q, bits))
}

/// Truncated arcsin^d(1/cosh t) integral over [0, oo) with a certified
/// exponential tail bound below `tol`.
pub(crate) fn arcsin_pow_integral(d: &Real, tol: &Real, bits: u32) -> Result<Real> {
    let d_f = d.to_f64();
    let tol_f = tol.to_f64().max(1e-300);
    // integrand <= (2 e^-t)^d for t >= 1, so the tail beyond T is below
    // 2^d e^{-dT}/d; choose T to push it under tol/2
    let t_cut = ((d_f + 1.0) * std::f64::consts::LN_2 + (2.0 / (d_f * tol_f)).ln()) / d_f;
    let upper = Real::from_f64(t_cut.max(8.0), bits);
    let spec = QuadratureSpec::new(&tol.with_precision(bits) * &Real::from_ratio(1, 2, bits));
    integrate(
        |t| {
            let a = t.cosh().recip().asin();
            a.pow(d)
        },
        &Real::zero(bits),
        &upper,
        &spec,
    )
}

/// Asymptotic W(d) = Q^-d (ln Q)^(1-d) 4^(1+d) pi^(d-2) * integral, the
/// fractional-power bandwidth sum whose decay in Q for every d > 0 is the
/// zero-Hausdorff-dimension diagnostic.
pub fn w_d_asym(q: u64, d: &Real, bits: u32) -> Result<Real> {
    let bits = bits.max(128);
    let one = Real::one(bits);
    if !d.is_positive() || d > &one {
        return Err(Error::Domain(format!("w_d_asym needs d in (0,1], got {d:?}")));
    }
    assert!(q >= 3);
    let dw = d.with_precision(bits);
    let tol = Real::exp2i(-((bits as i64) / 3).max(48), bits);
    let integral = arcsin_pow_integral(&dw, &tol, bits)?;
    let q_r = Real::from_u64(q, bits);
    let ln_q = q_r.ln();
    // 1/(Q^d ln^{d-1} Q) = Q^-d ln^{1-d} Q
    let q_pow = (&dw * &q_r.ln()).exp().recip();
    let ln_pow = (&(&one - &dw) * &ln_q.ln()).exp();
    let four_pow = (&(&one + &dw) * &Real::from_u64(4, bits).ln()).exp();
    let pi = Real::pi(bits);
    let pi_pow = (&(&Real::from_u64(2, bits) - &dw) * &pi.ln()).exp().recip();
    Ok(&(&(&(&q_pow * &ln_pow) * &four_pow) * &pi_pow) * &integral)
}
