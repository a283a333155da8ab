//! Large-Q asymptotics of Sigma'(0) for arbitrary fixed P, and the P = 1
//! specialization.
//!
//! The general expansion sums over the cluster index t = 0..P-1 with
//! cotangent-squared prefactors; each term carries two Euler-type constants
//! eta(b) and a squared gamma ratio. The eta arguments can drop below -3/2
//! for larger P (already at P = 2, s = 7, t = 1), where the continued
//! domain of [`eta_const`] takes over.

use crate::error::Result;
use crate::exactdisc::{FluxRatio, SinTable};
use crate::numerics::Real;
use crate::specfun::{eta_const, euler_constant, gamma_ratio_sq};

/// Paired exact/asymptotic values with their errors.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub flux: FluxRatio,
    pub exact: Real,
    pub asymptotic: Real,
    pub abs_error: Real,
    pub rel_error: Real,
}

impl AsymptoticReport {
    pub fn new(flux: FluxRatio, exact: Real, asymptotic: Real) -> Self {
        let abs_error = (&exact - &asymptotic).abs();
        let bits = abs_error.precision_bits();
        let rel_error = &abs_error / &Real::max_of(&Real::one(bits), &exact.abs());
        AsymptoticReport {
            flux,
            exact,
            asymptotic,
            abs_error,
            rel_error,
        }
    }
}

fn eta_value(num: i64, den: i64, bits: u32) -> Result<Real> {
    let b = Real::from_ratio(num, den, bits);
    let target = Real::exp2i(-((bits / 2) as i64).min(112) - 16, bits);
    Ok(eta_const(&b, &target)?.value)
}

/// Full fixed-P asymptotics of Sigma'(0) as Q grows (error o(1)).
///
/// Evaluated at a fixed 192-bit working precision: the formula's intrinsic
/// o(1) error dwarfs rounding at any feasible Q, so requesting tighter eta
/// constants would only burn time.
pub fn sigma_prime_zero_asym(flux: &FluxRatio) -> Result<Real> {
    let (s, _r) = flux.decomposition()?;
    let p = flux.p();
    let q = flux.q();
    let bits = 192;
    let pi = Real::pi(bits);

    // cot^2(pi s i / 2P) through the integer-angle table over 2P
    let mut table = SinTable::new(2 * p, bits);
    let mut total = Real::zero(bits);
    let mut cot2_prefix = Real::one(bits);
    for t in 0..p {
        if t > 0 {
            let n = (s * t) as i64;
            let cos_sq = table.sin_sq(n + p as i64);
            let sin_sq = table.sin_sq(n);
            cot2_prefix = &cot2_prefix * &(&cos_sq / &sin_sq);
        }
        let log_term = &Real::from_u64(2, bits)
            * &(&Real::from_u64(q, bits) / &(&pi * &Real::from_u64(p, bits))).ln();
        let e1 = eta_value(-((s * t) as i64), (2 * p) as i64, bits)?;
        let e2 = eta_value(
            (s as i64 - 1) * p as i64 - (s * t) as i64,
            (2 * p) as i64,
            bits,
        )?;
        let g = gamma_ratio_sq(
            &Real::from_ratio((s * (p - t)) as i64, (2 * p) as i64, bits),
            &Real::from_ratio((s * (p - t) + p) as i64, (2 * p) as i64, bits),
        )?;
        let brace = &(&(&log_term + &e1) + &e2) + &g;
        total = &total + &(&cot2_prefix * &brace);
    }
    total = &total / &pi;
    total = &total + &Real::one(bits);

    let mut msum = Real::zero(bits);
    for m in 1..=(s - 1) / 2 {
        let a = Real::from_ratio(2 * m as i64 - 1, 2, bits);
        let b = Real::from_u64(m, bits);
        msum = &msum + &gamma_ratio_sq(&a, &b)?;
    }
    total = &total + &(&msum / &pi);

    let v = &Real::from_u64(q, bits) * &total;
    Ok(if flux.center_sign()? < 0 { -&v } else { v })
}

/// P = 1 specialization: (2/pi)(-1)^((Q-1)/2) Q (ln(Q/pi) + eta(0) + pi).
pub fn sigma_prime_zero_asym_p1(q: u64, bits: u32) -> Result<Real> {
    assert!(q % 2 == 1, "odd Q required");
    let bits = bits.max(128);
    let pi = Real::pi(bits);
    let eta0 = eta_value(0, 1, bits)?;
    let ln_term = (&Real::from_u64(q, bits) / &pi).ln();
    let sum = &(&ln_term + &eta0) + &pi;
    let v = &(&(&Real::from_u64(2, bits) / &pi) * &Real::from_u64(q, bits)) * &sum;
    Ok(if ((q - 1) / 2) % 2 == 1 { -&v } else { v })
}

/// eta(0) expressed through Euler's constant: ln 16 + C - pi.
pub fn eta_zero_closed_form(bits: u32) -> Real {
    &(&Real::from_u64(16, bits).ln() + &euler_constant(bits)) - &Real::pi(bits)
}
