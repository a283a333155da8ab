//! Zeros of the discriminant and the derivative-sum identity over them.
//!
//! For odd Q the zeros are the eigenvalues of the symmetric tridiagonal L,
//! isolated by bisection on the Sturm (LDL^T) sign count. Isolation runs in
//! scaled double precision; each isolated zero is then refined at full
//! working precision by Newton steps on the determinant recurrence, and the
//! final enclosure is certified by a sign change across [x - tol, x + tol],
//! with bracketed bisection as the fallback. Oddness of Sigma lets us refine
//! only the positive half and mirror.

use super::model::{
    sigma_det, sigma_det_value, sigma_sign_f64, DiscriminantModel,
};
use crate::error::{Error, Result};
use crate::numerics::{find_root, Real};

/// Number of eigenvalues of L strictly below x, by the tridiagonal LDL^T
/// sign count. Infinities are benign (the next pivot recovers).
fn sturm_count_f64(b_sq: &[f64], x: f64) -> usize {
    const PIVMIN: f64 = 1e-290;
    let mut count = 0usize;
    let mut d = -x;
    if d < 0.0 {
        count += 1;
    }
    for b2 in b_sq {
        if d == 0.0 {
            d = -PIVMIN;
        }
        d = -x - b2 / d;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Sturm sign count at full precision, for eigenvalues too close to
/// separate in double precision (cluster splittings shrink like e^{-cQ/P}).
fn sturm_count_real(model: &DiscriminantModel, x: &Real) -> usize {
    let bits = model.precision_bits();
    let xw = x.with_precision(bits);
    let pivmin = Real::exp2i(-2 * bits as i64, bits);
    let mut count = 0usize;
    let mut d = -&xw;
    if d.is_negative() {
        count += 1;
    }
    for b2 in model.offdiag_sq() {
        if d.is_zero() {
            d = -&pivmin;
        }
        d = -&(&xw + &(b2 / &d));
        if d.is_negative() {
            count += 1;
        }
    }
    count
}

/// Full-precision Sturm bisection of [lo, hi] known (at full precision) to
/// hold `n_hi - n_lo` eigenvalues; appends one enclosure per eigenvalue.
fn separate_real(
    model: &DiscriminantModel,
    lo: Real,
    hi: Real,
    n_lo: usize,
    n_hi: usize,
    out: &mut Vec<(Real, Real)>,
) {
    let bits = model.precision_bits();
    let half = Real::from_ratio(1, 2, bits);
    let min_width = Real::exp2i(-(bits as i64) + 8, bits);
    let mut stack = vec![(lo, hi, n_lo, n_hi)];
    while let Some((lo, hi, n_lo, n_hi)) = stack.pop() {
        let k = n_hi - n_lo;
        if k == 0 {
            continue;
        }
        let width = &hi - &lo;
        if k == 1 && width < Real::from_ratio(1, 1 << 30, bits) {
            out.push((lo, hi));
            continue;
        }
        if width < min_width {
            // coincident at working precision: cannot happen for unreduced
            // tridiagonals, but keep the enclosures rather than spin
            for _ in 0..k {
                out.push((lo.clone(), hi.clone()));
            }
            continue;
        }
        let mid = &(&lo + &hi) * &half;
        let n_mid = sturm_count_real(model, &mid).clamp(n_lo, n_hi);
        stack.push((lo, mid.clone(), n_lo, n_mid));
        stack.push((mid, hi, n_mid, n_hi));
    }
}

/// Disjoint intervals each containing exactly one eigenvalue (Gershgorin
/// bound |lambda| <= 4).
///
/// Bisection runs on the double-precision Sturm count; where eigenvalues
/// collide at f64 scale (cluster splittings shrink like e^{-cQ/P}) whole
/// zones around the collisions are re-isolated at full precision, because
/// f64 counts near a collision can also misplace eigenvalues across the
/// boundaries of neighbouring resolved intervals.
fn isolate_zeros(model: &DiscriminantModel) -> Vec<(Real, Real)> {
    let b_sq = model.offdiag_sq_f64();
    let bits = model.precision_bits();
    let q = model.q() as usize;
    // (lo, hi, eigenvalue count); count >= 2 marks an f64-unresolvable knot
    let mut items: Vec<(f64, f64, usize)> = Vec::with_capacity(q);
    let mut stack = vec![(-4.000001f64, 4.000001f64, 0usize, q)];
    while let Some((lo, hi, n_lo, n_hi)) = stack.pop() {
        let k = n_hi - n_lo;
        if k == 0 {
            continue;
        }
        let width = hi - lo;
        if k == 1 && width < 1e-10 * lo.abs().max(1.0) {
            items.push((lo, hi, 1));
            continue;
        }
        if width < 64.0 * f64::EPSILON * lo.abs().max(1.0) {
            items.push((lo, hi, k));
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let n_mid = sturm_count_f64(b_sq, mid).clamp(n_lo, n_hi);
        stack.push((lo, mid, n_lo, n_mid));
        stack.push((mid, hi, n_mid, n_hi));
    }
    items.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    if items.iter().all(|i| i.2 == 1) {
        return items
            .into_iter()
            .map(|(lo, hi, _)| (Real::from_f64(lo, bits), Real::from_f64(hi, bits)))
            .collect();
    }

    // Zones: every knot plus anything within reach of the f64 localization
    // error. Each zone is then grown until the full-precision endpoint
    // counts account for exactly the items it covers, merging zones that
    // collide; only then is anything emitted.
    let n = items.len();
    let center = |k: usize| 0.5 * (items[k].0 + items[k].1);
    let knot_centers: Vec<f64> = items
        .iter()
        .filter(|it| it.2 >= 2)
        .map(|it| 0.5 * (it.0 + it.1))
        .collect();
    let in_zone: Vec<bool> = (0..n)
        .map(|k| {
            items[k].2 >= 2 || knot_centers.iter().any(|c| (center(k) - c).abs() < 1e-8)
        })
        .collect();
    let mut raw_zones: Vec<(usize, usize)> = Vec::new();
    let mut k = 0usize;
    while k < n {
        if in_zone[k] {
            let start = k;
            while k + 1 < n && in_zone[k + 1] {
                k += 1;
            }
            raw_zones.push((start, k));
        }
        k += 1;
    }

    // verified zones: (a, b, n_a, n_b) with real counts matching content
    let mut zones: Vec<(usize, usize, usize, usize)> = Vec::new();
    'zone: for (za, zb) in raw_zones {
        let (mut a, mut b) = (za, zb);
        loop {
            // merge with the previous verified zone on overlap
            while let Some(&(pa, pb, _, _)) = zones.last() {
                if a <= pb {
                    zones.pop();
                    a = pa.min(a);
                } else {
                    break;
                }
            }
            let ra = Real::from_f64(items[a].0, bits);
            let rb = Real::from_f64(items[b].1, bits);
            let n_a = sturm_count_real(model, &ra);
            let n_b = sturm_count_real(model, &rb);
            let expected: usize = items[a..=b].iter().map(|it| it.2).sum();
            if n_b - n_a == expected {
                zones.push((a, b, n_a, n_b));
                continue 'zone;
            }
            if a == 0 && b == n - 1 {
                // whole spectrum as one zone
                zones.clear();
                zones.push((0, n - 1, 0, q));
                break 'zone;
            }
            a = a.saturating_sub(1);
            b = (b + 1).min(n - 1);
        }
    }

    let mut out = Vec::with_capacity(q);
    let mut zi = 0usize;
    let mut k = 0usize;
    while k < n {
        if zi < zones.len() && zones[zi].0 == k {
            let (a, b, n_a, n_b) = zones[zi];
            let ra = if a == 0 && n_a == 0 {
                Real::from_f64(-4.000001, bits)
            } else {
                Real::from_f64(items[a].0, bits)
            };
            let rb = if b == n - 1 && n_b == q {
                Real::from_f64(4.000001, bits)
            } else {
                Real::from_f64(items[b].1, bits)
            };
            separate_real(model, ra, rb, n_a, n_b, &mut out);
            k = b + 1;
            zi += 1;
        } else {
            out.push((
                Real::from_f64(items[k].0, bits),
                Real::from_f64(items[k].1, bits),
            ));
            k += 1;
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Newton refinement inside an isolating interval, with certified enclosure
/// and bisection fallback. The accepted root must stay inside the interval:
/// Newton can otherwise slide to a neighbouring zero when cluster splittings
/// are tiny.
fn refine_zero(model: &DiscriminantModel, lo: &Real, hi: &Real, tol: &Real) -> Result<Real> {
    let bits = model.precision_bits();
    let half = Real::from_ratio(1, 2, bits);
    let mut x = &(lo + hi) * &half;
    let quarter_tol = tol * &Real::from_ratio(1, 4, bits);
    let mut ok = false;
    for _ in 0..90 {
        let v = sigma_det(model, &x)?;
        if v.sigma_prime.is_zero() {
            break;
        }
        let step = &v.sigma / &v.sigma_prime;
        x = &x - &step;
        if &x < lo || &x > hi {
            break;
        }
        if step.abs() <= quarter_tol {
            ok = true;
            break;
        }
    }
    if ok && &x >= lo && &x <= hi {
        let half_tol = tol * &half;
        let s_lo = sigma_det_value(model, &(&x - &half_tol));
        let s_hi = sigma_det_value(model, &(&x + &half_tol));
        if s_lo.signum_i() * s_hi.signum_i() < 0 {
            return Ok(x);
        }
    }
    // fallback: bracketed refinement on the isolating interval
    find_root(|t| sigma_det_value(model, t), lo, hi, tol)
}

/// The Q real zeros of Sigma in increasing order, each enclosed to
/// 2^(-precision_bits/2). Odd Q.
pub fn zeros_of_sigma(model: &DiscriminantModel) -> Result<Vec<Real>> {
    if model.q() % 2 == 0 {
        return Err(Error::Parity { q: model.q() });
    }
    let bits = model.precision_bits();
    let q = model.q() as usize;
    let tol = Real::exp2i(-((bits / 2) as i64), bits);
    let intervals = isolate_zeros(model);
    if intervals.len() != q {
        return Err(Error::NonConvergence(format!(
            "zero isolation found {} intervals, expected {}",
            intervals.len(),
            q
        )));
    }
    // Sigma is odd: refine positive zeros, mirror, and pin the middle at 0.
    let mut positives = Vec::with_capacity(q / 2);
    for (lo, hi) in intervals.iter() {
        if (lo + hi) > Real::exp2i(-30, bits) {
            positives.push(refine_zero(model, lo, hi, &tol)?);
        }
    }
    if positives.len() != q / 2 {
        return Err(Error::NonConvergence(format!(
            "expected {} positive zeros, found {}",
            q / 2,
            positives.len()
        )));
    }
    positives.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut zeros = Vec::with_capacity(q);
    for z in positives.iter().rev() {
        zeros.push(-z);
    }
    zeros.push(Real::zero(bits));
    zeros.extend(positives);
    Ok(zeros)
}

/// Zeros of Sigma for even Q by sign scanning the transfer-route values on a
/// grid, then refining each bracket at full precision. Even Sigma: the Q/2
/// positive zeros are refined and mirrored (no zero at 0 since |Sigma(0)|=4).
pub(crate) fn zeros_even_q(model: &DiscriminantModel) -> Result<Vec<Real>> {
    let q = model.q();
    assert!(q % 2 == 0);
    let bits = model.precision_bits();
    let tol = Real::exp2i(-((bits / 2) as i64), bits);
    let mut n = 4096usize.max(64 * q as usize);
    for _ in 0..4 {
        let mut brackets = Vec::new();
        let lo_edge = 0.0f64;
        let hi_edge = 4.000001f64;
        let mut prev_x = lo_edge;
        let mut prev_s = sigma_sign_f64(model, prev_x);
        for i in 1..=n {
            let x = lo_edge + (hi_edge - lo_edge) * i as f64 / n as f64;
            let s = sigma_sign_f64(model, x);
            if s * prev_s < 0 {
                brackets.push((prev_x, x));
            }
            prev_x = x;
            prev_s = s;
        }
        if brackets.len() == q as usize / 2 {
            let mut positives = Vec::with_capacity(brackets.len());
            for (lo, hi) in brackets {
                let z = find_root(
                    |t| super::transfer::sigma_transfer_default(model, t).sigma,
                    &Real::from_f64(lo, bits),
                    &Real::from_f64(hi, bits),
                    &tol,
                )?;
                positives.push(z);
            }
            positives.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut zeros: Vec<Real> = positives.iter().rev().map(|z| -z).collect();
            zeros.extend(positives);
            return Ok(zeros);
        }
        n *= 4;
    }
    Err(Error::NonConvergence(format!(
        "could not isolate the {} zeros of Sigma for even Q={q}",
        q
    )))
}

/// sum_k 1/|Sigma'(x_k)| over the zeros of Sigma (expected: 1/Q).
///
/// Sigma' is even for odd Q, so mirrored zeros contribute equal terms.
pub fn last_wilkinson_sum(model: &DiscriminantModel) -> Result<Real> {
    if model.q() % 2 == 0 {
        return Err(Error::Parity { q: model.q() });
    }
    let bits = model.precision_bits();
    let zeros = zeros_of_sigma(model)?;
    let two = Real::from_u64(2, bits);
    let mut sum = Real::zero(bits);
    for z in zeros.iter().filter(|z| z.is_positive()) {
        let v = sigma_det(model, z)?;
        sum = &sum + &(&two / &v.sigma_prime.abs());
    }
    let center = sigma_det(model, &Real::zero(bits))?;
    sum = &sum + &center.sigma_prime.abs().recip();
    Ok(sum)
}
