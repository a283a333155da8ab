//! Closed forms at zero energy: the product-sum expression for Sigma'(0),
//! its exact regrouping over the decomposition Q = 4Pr + s, and the finite
//! A-factor products the regrouping is built from.
//!
//! Conventions throughout: empty products are 1, empty sums are 0. Every
//! sine argument is an integer multiple of pi/Q, evaluated through
//! [`SinTable`] so exact zeros are structural. Denominators never vanish for
//! admissible (P, Q): a vanishing one would need an odd integer to be a
//! multiple of 4 (see the unit tests for the grid sweep backing this up).

use super::flux::{FluxRatio, SinTable};
use crate::error::{Error, Result};
use crate::numerics::{default_precision, Real};

fn working_bits(flux: &FluxRatio) -> u32 {
    default_precision(flux.q()).max(flux.gamma().precision_bits())
}

/// The sum S = sum_{k=1}^{(Q-1)/2} prod_{j=1}^k sin^2((2j-1)gamma)/sin^2(2j gamma),
/// accumulated with running products.
pub fn s_direct(flux: &FluxRatio) -> Result<Real> {
    if !flux.is_odd_q() {
        return Err(Error::Parity { q: flux.q() });
    }
    let q = flux.q();
    let p = flux.p() as i64;
    let bits = working_bits(flux);
    let mut table = SinTable::new(q, bits);
    let mut sum = Real::zero(bits);
    let mut prod = Real::one(bits);
    for k in 1..=((q - 1) / 2) as i64 {
        let num = table.sin_sq((2 * k - 1) * p);
        let den = table.sin_sq(2 * k * p);
        prod = &prod * &(&num / &den);
        sum = &sum + &prod;
    }
    Ok(sum)
}

/// Sigma'(0) = (-1)^((Q-1)/2) Q (1 + S) for odd Q.
pub fn sigma_prime_zero_exact(flux: &FluxRatio) -> Result<Real> {
    let bits = working_bits(flux);
    let s = s_direct(flux)?;
    let sign = flux.center_sign()?;
    let q = Real::from_u64(flux.q(), bits);
    let v = &q * &(&Real::one(bits) + &s);
    Ok(if sign < 0 { -&v } else { v })
}

/// Finite product A_{2k} over (Q-s)/4P factors (even-index A factor).
pub fn a_even_exact(flux: &FluxRatio, k: u64) -> Result<Real> {
    let (s, _r) = flux.decomposition()?;
    let q = flux.q();
    let p = flux.p();
    let bits = working_bits(flux);
    let mut table = SinTable::new(q, bits);
    let n = ((q - s) / (4 * p)) as i64;
    let (p, s, k) = (p as i64, s as i64, k as i64);
    let mut prod = Real::one(bits);
    for j in 1..=n {
        let num = table.sin_sq((2 * j - 1) * p - k * s);
        let den = table.sin_sq(2 * j * p - k * s);
        prod = &prod * &(&num / &den);
    }
    Ok(prod)
}

/// Finite product A_{2k-1} (odd-index A factor).
pub fn a_odd_exact(flux: &FluxRatio, k: u64) -> Result<Real> {
    let (s, _r) = flux.decomposition()?;
    let q = flux.q();
    let p = flux.p();
    let bits = working_bits(flux);
    let mut table = SinTable::new(q, bits);
    let n = ((q - s) / (4 * p)) as i64;
    let (p, s, k) = (p as i64, s as i64, k as i64);
    let mut prod = Real::one(bits);
    for j in 1..=n {
        let num = table.sin_sq((2 * j - 1) * p + k * s);
        let den = table.sin_sq((2 * j - 2) * p + k * s);
        prod = &prod * &(&num / &den);
    }
    Ok(prod)
}

fn a_index(flux: &FluxRatio, i: u64) -> Result<Real> {
    if i % 2 == 0 {
        a_even_exact(flux, i / 2)
    } else {
        a_odd_exact(flux, (i + 1) / 2)
    }
}

/// S evaluated through the exact regrouping over the decomposition
/// Q = 4Pr + s: a double sum over t = 0..P-1 with A-factor prefixes, the
/// m-sums of length (Q-s)/4P, the A_{2t}(A_{2t+1}-1) terms, and the trailing
/// (s-1)/2 sum. Equals [`s_direct`] identically; the regrouping is the
/// starting point of the large-Q analysis and serves as a cross-route check.
pub fn s_regrouped(flux: &FluxRatio) -> Result<Real> {
    let (s, r) = flux.decomposition()?;
    let q = flux.q();
    let p = flux.p();
    if r == 0 {
        return Err(Error::Decomposition { q, s });
    }
    let bits = working_bits(flux);
    let mut table = SinTable::new(q, bits);
    let n = ((q - s) / (4 * p)) as i64;
    let (pi64, si64) = (p as i64, s as i64);

    let a: Vec<Real> = (0..2 * p).map(|i| a_index(flux, i)).collect::<Result<_>>()?;

    let mut total = Real::zero(bits);
    let mut a_prefix = Real::one(bits); // prod_{i=0}^{2t-1} A_i
    for t in 0..p {
        let t_i = t as i64;
        let a2t = &a[(2 * t) as usize];
        let a2t1 = &a[(2 * t + 1) as usize];
        let mut inner = Real::zero(bits);
        let mut p1 = Real::one(bits);
        let mut p2 = Real::one(bits);
        let cross = a2t * a2t1;
        for m in 1..=n {
            p1 = &p1 * &(&table.sin_sq((2 * m - 1) * pi64 - t_i * si64)
                / &table.sin_sq(2 * m * pi64 - t_i * si64));
            p2 = &p2 * &(&table.sin_sq((2 * m - 2) * pi64 + (t_i + 1) * si64)
                / &table.sin_sq((2 * m - 1) * pi64 + (t_i + 1) * si64));
            inner = &inner + &(&p1 + &(&cross * &p2));
        }
        inner = &inner + &(a2t * &(a2t1 - &Real::one(bits)));
        total = &total + &(&a_prefix * &inner);
        a_prefix = &(&a_prefix * a2t) * a2t1;
    }

    // trailing sum: prod_{i=0}^{2P-1} A_i * sum_{m=1}^{(s-1)/2} prod ...
    let mut tail = Real::zero(bits);
    let mut pr = Real::one(bits);
    for m in 1..=((s - 1) / 2) as i64 {
        pr = &pr * &(&table.sin_sq((2 * m - 1 - si64) * pi64)
            / &table.sin_sq((2 * m - si64) * pi64));
        tail = &tail + &pr;
    }
    Ok(&total + &(&a_prefix * &tail))
}
