//! Bracketed root refinement.
//!
//! Anderson-Bjorck modified regula falsi with a bisection safeguard: the
//! bracket always contains a sign change, convergence is superlinear near
//! simple roots, and a periodic forced bisection bounds the worst case.

use super::real::Real;
use crate::error::{Error, Result};

/// Finds a root of `f` inside the sign-changing bracket [lo, hi].
///
/// Refines the bracket until its width is at most `tol`, then returns the
/// midpoint; the caller therefore holds an enclosure of half-width tol/2.
pub fn find_root(
    f: impl Fn(&Real) -> Real,
    lo: &Real,
    hi: &Real,
    tol: &Real,
) -> Result<Real> {
    assert!(tol.is_positive(), "tolerance must be positive");
    let bits = lo.precision_bits().max(hi.precision_bits());
    let half = Real::from_ratio(1, 2, bits);
    let mut a = lo.clone();
    let mut b = hi.clone();
    let mut fa = f(&a);
    let mut fb = f(&b);
    if fa.is_zero() {
        return Ok(a);
    }
    if fb.is_zero() {
        return Ok(b);
    }
    if fa.signum_i() * fb.signum_i() > 0 {
        return Err(Error::NoBracket);
    }

    let max_iter = 64 + 4 * bits as usize;
    let mut since_bisect = 0u32;
    for _ in 0..max_iter {
        if (&b - &a).abs() <= *tol {
            return Ok(&(&a + &b) * &half);
        }
        // secant point, clipped away from the bracket ends
        let denom = &fb - &fa;
        let mut x = if denom.is_zero() {
            &(&a + &b) * &half
        } else {
            &b - &(&fb * &(&(&b - &a) / &denom))
        };
        since_bisect += 1;
        let width = &b - &a;
        let margin = &width * &Real::exp2i(-(bits as i64) + 8, bits);
        if since_bisect >= 8 || &x - &a <= margin || &b - &x <= margin {
            x = &(&a + &b) * &half;
            since_bisect = 0;
        }
        let fx = f(&x);
        if fx.is_zero() {
            return Ok(x);
        }
        if fx.signum_i() * fb.signum_i() < 0 {
            // root in [x, b]: previous b becomes the opposite end
            a = std::mem::replace(&mut b, x);
            fa = std::mem::replace(&mut fb, fx);
        } else {
            // root in [a, x]: Anderson-Bjorck scaling of the retained end
            let m = &Real::one(bits) - &(&fx / &fb);
            let scale = if m.is_positive() { m } else { half.clone() };
            fa = &fa * &scale;
            b = x;
            fb = fx;
        }
    }
    Err(Error::NonConvergence(format!(
        "root refinement stalled; bracket width {:?} > tol {:?}",
        (&b - &a).abs(),
        tol
    )))
}
