//! Euler-type constants
//! eta(b) = lim_{M->oo} ( sum_{k=1}^M Gamma^2(k+b+1/2)/Gamma^2(k+b+1) - ln M ).
//!
//! The summand decays like 1/k, so the limit converges only with the ln M
//! subtraction. We take a partial sum to a cutoff M and add an
//! Euler-Maclaurin tail whose coefficients are exact polynomials in b; the
//! remainder is O((1+|b|)^10 / M^10), and the returned value is always
//! validated by recomputing at cutoff 2M.
//!
//! The natural parameter domain is everything between the poles of the k = 1
//! summand, i.e. all b with b + 3/2 and b + 2 avoiding nonpositive integers.
//! This includes values below -3/2 (the summand's gamma ratio is continued
//! through the recurrence, and stays positive since it is squared), which
//! arise for larger P in the zero-energy derivative expansion.

use super::gamma::log_gamma;
use crate::error::{Error, Result};
use crate::numerics::Real;

/// Euler-Maclaurin tail T(M,b) = sum_j t_j(b) / M^j. Coefficients of t_j as
/// polynomials in b, highest power first, each entry (numerator, denominator).
const ETA_TAIL: &[&[(i64, i64)]] = &[
    &[(-1, 1), (-3, 4)],
    &[(1, 2), (3, 4), (43, 192)],
    &[(-1, 3), (-3, 4), (-43, 96), (-7, 128)],
    &[(1, 4), (3, 4), (43, 64), (21, 128), (-619, 122880)],
    &[(-1, 5), (-3, 4), (-43, 48), (-21, 64), (619, 30720), (95, 8192)],
    &[
        (1, 6),
        (3, 4),
        (215, 192),
        (35, 64),
        (-619, 12288),
        (-475, 8192),
        (15569, 8257536),
    ],
    &[
        (-1, 7),
        (-3, 4),
        (-43, 32),
        (-105, 128),
        (619, 6144),
        (1425, 8192),
        (-15569, 1376256),
        (-2291, 262144),
    ],
    &[
        (1, 8),
        (3, 4),
        (301, 192),
        (147, 128),
        (-4333, 24576),
        (-3325, 8192),
        (15569, 393216),
        (16037, 262144),
        (-1597219, 1006632960),
    ],
    &[
        (-1, 9),
        (-3, 4),
        (-43, 24),
        (-49, 32),
        (4333, 15360),
        (3325, 4096),
        (-15569, 147456),
        (-16037, 65536),
        (1597219, 125829120),
        (430535, 33554432),
    ],
];

/// eta(b) together with the cutoff it was computed at and a bound on the
/// truncation error. The value is independent of the cutoff within
/// `tail_error_bound` (Cauchy property of the defining limit).
#[derive(Clone, Debug)]
pub struct EtaConstant {
    pub b: Real,
    pub value: Real,
    pub tail_error_bound: Real,
    pub cutoff_m: u64,
}

fn em_tail(m: u64, b: &Real, wbits: u32) -> Real {
    let inv_m = Real::from_u64(m, wbits).recip();
    let mut tail = Real::zero(wbits);
    let mut pow = inv_m.clone();
    for coeffs in ETA_TAIL {
        let mut tj = Real::zero(wbits);
        for (num, den) in coeffs.iter() {
            tj = &(&tj * b) + &Real::from_ratio(*num, *den, wbits);
        }
        tail = &tail + &(&tj * &pow);
        pow = &pow * &inv_m;
    }
    tail
}

/// First summand u_1 = Gamma^2(b+3/2)/Gamma^2(b+2), continued through the
/// recurrence when b + 3/2 <= 0. Always positive (the ratio is squared).
fn first_summand(b: &Real, wbits: u32) -> Result<Real> {
    let bw = b.with_precision(wbits);
    let a1 = &bw + &Real::from_ratio(3, 2, wbits);
    let a2 = &bw + &Real::from_u64(2, wbits);
    let shift = if a1.is_positive() {
        0u64
    } else {
        // smallest n with a1 + n > 0 (a1 is never a nonpositive integer here)
        (-a1.to_f64()).floor() as u64 + 1
    };
    let n = Real::from_u64(shift, wbits);
    let lg1 = log_gamma(&(&a1 + &n))?;
    let lg2 = log_gamma(&(&a2 + &n))?;
    let mut u = (&Real::from_u64(2, wbits) * &(&lg1 - &lg2)).exp();
    for i in 0..shift {
        let i_r = Real::from_u64(i, wbits);
        let f = &(&a2 + &i_r) / &(&a1 + &i_r);
        u = &u * &(&f * &f);
    }
    Ok(u)
}

/// Partial sum to M, minus ln M, plus the Euler-Maclaurin tail.
fn eta_at_cutoff(b: &Real, m: u64, wbits: u32) -> Result<Real> {
    let bw = b.with_precision(wbits);
    let half = Real::from_ratio(1, 2, wbits);
    let mut u = first_summand(&bw, wbits)?;
    let mut sum = u.clone();
    for k in 1..m {
        let k_r = Real::from_u64(k, wbits);
        let num = &(&k_r + &bw) + &half;
        let den = &(&k_r + &bw) + &Real::one(wbits);
        let f = &num / &den;
        u = &u * &(&f * &f);
        sum = &sum + &u;
    }
    let ln_m = Real::from_u64(m, wbits).ln();
    Ok(&(&sum - &ln_m) + &em_tail(m, &bw, wbits))
}

fn is_nonpositive_integer(x: &Real) -> bool {
    !x.is_positive() && (x - &x.floor()).is_zero()
}

/// eta(b) to absolute accuracy `target_err`.
pub fn eta_const(b: &Real, target_err: &Real) -> Result<EtaConstant> {
    if !target_err.is_positive() {
        return Err(Error::Domain("target_err must be positive".into()));
    }
    let bits = b.precision_bits();
    let pole1 = b + &Real::from_ratio(3, 2, bits);
    let pole2 = b + &Real::from_u64(2, bits);
    if is_nonpositive_integer(&pole1) || is_nonpositive_integer(&pole2) {
        return Err(Error::Domain(format!(
            "eta(b) has a pole at b={b:?} (summand gamma argument is a nonpositive integer)"
        )));
    }
    let err_bits = (-target_err.exponent().unwrap_or(0)).max(0) as u32;
    let wbits = bits.max(err_bits + 96);

    // remainder ~ ((2+|b|)/M)^10; solve for M, then confirm by doubling
    let babs = b.abs().to_f64();
    let target_f = target_err.to_f64().max(1e-300);
    let mut m = ((babs + 2.0) * target_f.powf(-0.1)).ceil() as u64;
    m = m.max(64).max((8.0 * (babs + 1.0)) as u64);

    let half_target = target_err * &Real::from_ratio(1, 2, bits.max(64));
    for _ in 0..20 {
        let v1 = eta_at_cutoff(b, m, wbits)?;
        let v2 = eta_at_cutoff(b, 2 * m, wbits)?;
        let diff = (&v1 - &v2).abs();
        if diff <= half_target {
            return Ok(EtaConstant {
                b: b.clone(),
                value: v2,
                tail_error_bound: Real::max_of(&diff, &Real::exp2i(-(wbits as i64) + 8, bits)),
                cutoff_m: 2 * m,
            });
        }
        m *= 2;
        if m > (1 << 26) {
            break;
        }
    }
    Err(Error::NonConvergence(format!(
        "eta({b:?}) did not stabilize at target {target_err:?}"
    )))
}
