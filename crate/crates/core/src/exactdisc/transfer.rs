//! Transfer-matrix evaluation of the discriminant, valid for either parity
//! of Q.
//!
//! One period of the difference equation gives M(x, theta) as a product of
//! Q matrices [[x - 2cos(2 pi P n/Q + theta), -1], [1, 0]]. The periodic
//! discriminant is tr M, and Sigma(x) = tr M(x, theta) + 2 cos(Q theta) is
//! theta-independent (Chambers-type relation). The overall sign of tr M is
//! calibrated once per model against the determinant route at odd Q; with
//! this matrix normalization the calibration factor comes out +1, and even-Q
//! models reuse it.

use super::model::{sigma_det_value, DiscriminantModel, DiscriminantValue, Route};
use crate::numerics::Real;

struct Mat2 {
    a: Real,
    b: Real,
    c: Real,
    d: Real,
}

/// Default evaluation angle theta* = pi/(2Q): cos(Q theta*) = 0, so Sigma is
/// the trace alone.
pub fn default_theta(q: u64, bits: u32) -> Real {
    &Real::pi(bits) / &Real::from_u64(2 * q, bits)
}

/// Sigma(x) and Sigma'(x) through the transfer-matrix product at angle
/// `theta`. The result is independent of theta up to working precision.
pub fn sigma_transfer(model: &DiscriminantModel, x: &Real, theta: &Real) -> DiscriminantValue {
    let q = model.q();
    let p = model.p();
    let bits = model
        .precision_bits()
        .max(x.precision_bits())
        .max(theta.precision_bits());
    let xw = x.with_precision(bits);
    let one = Real::one(bits);
    let zero = Real::zero(bits);
    let two = Real::from_u64(2, bits);
    let two_pi = &Real::pi(bits) * &two;

    // M and dM/dx accumulated by left multiplication
    let mut m = Mat2 {
        a: one.clone(),
        b: zero.clone(),
        c: zero.clone(),
        d: one.clone(),
    };
    let mut dm = Mat2 {
        a: zero.clone(),
        b: zero.clone(),
        c: zero.clone(),
        d: zero.clone(),
    };
    for n in 1..=q {
        // angle reduced by the rational part: 2 pi (P n mod Q)/Q + theta
        let frac = Real::from_ratio(((p * n) % q) as i64, q as i64, bits);
        let ang = &(&two_pi * &frac) + theta;
        let diag = &xw - &(&two * &ang.cos());
        // T = [[diag, -1], [1, 0]]; M <- T M; dM <- T' M + T dM, T' = [[1,0],[0,0]]
        let na = &(&diag * &m.a) - &m.c;
        let nb = &(&diag * &m.b) - &m.d;
        let (nc, nd) = (m.a.clone(), m.b.clone());
        let nda = &(&m.a + &(&diag * &dm.a)) - &dm.c;
        let ndb = &(&m.b + &(&diag * &dm.b)) - &dm.d;
        let (ndc, ndd) = (dm.a.clone(), dm.b.clone());
        m = Mat2 { a: na, b: nb, c: nc, d: nd };
        dm = Mat2 { a: nda, b: ndb, c: ndc, d: ndd };
    }

    let sign = Real::from_i64(model.transfer_sign() as i64, bits);
    let qtheta = &Real::from_u64(q, bits) * theta;
    let sigma = &(&sign * &(&m.a + &m.d)) + &(&two * &qtheta.cos());
    let sigma_prime = &sign * &(&dm.a + &dm.d);
    DiscriminantValue {
        x: xw,
        sigma,
        sigma_prime,
        route: Route::TransferMatrix,
    }
}

/// Sigma(x) at the default angle.
pub fn sigma_transfer_default(model: &DiscriminantModel, x: &Real) -> DiscriminantValue {
    let theta = default_theta(model.q(), model.precision_bits());
    sigma_transfer(model, x, &theta)
}

/// One-time sign calibration of the trace against the determinant route.
///
/// The matrix normalization above makes the factor +1; calibrating rather
/// than assuming guards the convention. Even Q (where no determinant route
/// exists) inherits +1.
pub(crate) fn calibrate_sign(model: &DiscriminantModel) -> i8 {
    if model.q() % 2 == 0 {
        return 1;
    }
    let bits = 128;
    let probe = Real::from_ratio(1, 3, bits);
    let want = sigma_det_value(model, &probe.with_precision(model.precision_bits()));
    let theta = Real::from_ratio(37, 100, bits);
    // trace with provisional sign +1, cos term removed
    let q = model.q();
    let p = model.p();
    let one = Real::one(bits);
    let zero = Real::zero(bits);
    let two = Real::from_u64(2, bits);
    let two_pi = &Real::pi(bits) * &two;
    let (mut a, mut b, mut c, mut d) = (one.clone(), zero.clone(), zero.clone(), one.clone());
    for n in 1..=q {
        let frac = Real::from_ratio(((p * n) % q) as i64, q as i64, bits);
        let ang = &(&two_pi * &frac) + &theta;
        let diag = &probe - &(&two * &ang.cos());
        let na = &(&diag * &a) - &c;
        let nb = &(&diag * &b) - &d;
        c = a;
        d = b;
        a = na;
        b = nb;
    }
    let qtheta = &Real::from_u64(q, bits) * &theta;
    let tr = &a + &d;
    let plus = &tr + &(&two * &qtheta.cos());
    let minus = &(-&tr) + &(&two * &qtheta.cos());
    if (&plus - &want).abs() <= (&minus - &want).abs() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactdisc::model::{build_model, sigma_det};

    #[test]
    fn calibration_factor_is_plus_one() {
        for (p, q) in [(1u64, 3u64), (1, 5), (2, 7), (3, 11), (1, 4), (1, 2)] {
            let m = build_model(p, q, 160).unwrap();
            assert_eq!(m.transfer_sign(), 1, "sign for {p}/{q}");
        }
    }

    #[test]
    fn theta_independence() {
        let m = build_model(1, 3, 192).unwrap();
        let x = Real::from_ratio(1, 2, 192);
        let t1 = Real::parse("0.3", 192).unwrap();
        let t2 = Real::parse("1.1", 192).unwrap();
        let v1 = sigma_transfer(&m, &x, &t1);
        let v2 = sigma_transfer(&m, &x, &t2);
        assert!(
            (&v1.sigma - &v2.sigma).abs() < Real::exp2i(-96, 192),
            "{:?} vs {:?}",
            v1.sigma,
            v2.sigma
        );
    }

    #[test]
    fn matches_determinant_at_q3() {
        let m = build_model(1, 3, 192).unwrap();
        let x = Real::one(192);
        let v = sigma_transfer_default(&m, &x);
        assert!(
            (&v.sigma + &Real::from_u64(5, 192)).abs() < Real::exp2i(-150, 192),
            "{:?}",
            v.sigma
        );
        let det = sigma_det(&m, &x).unwrap();
        assert!((&v.sigma_prime - &det.sigma_prime).abs() < Real::exp2i(-150, 192));
    }

    #[test]
    fn even_q_center_value_is_four() {
        for q in [2u64, 4, 8] {
            let m = build_model(1, q, 160).unwrap();
            let v = sigma_transfer_default(&m, &Real::zero(160));
            assert!(
                (&v.sigma.abs() - &Real::from_u64(4, 160)).abs() < Real::exp2i(-120, 160),
                "|Sigma(0)| for Q={q}: {:?}",
                v.sigma
            );
        }
    }

    #[test]
    fn parity_symmetry_via_transfer() {
        // Sigma(-x) = (-1)^Q Sigma(x)
        for (p, q) in [(1u64, 4u64), (1, 5), (3, 8), (2, 7)] {
            let m = build_model(p, q, 160).unwrap();
            let x = Real::parse("0.8125", 160).unwrap();
            let a = sigma_transfer_default(&m, &x).sigma;
            let b = sigma_transfer_default(&m, &-&x).sigma;
            let expect = if q % 2 == 0 { a.clone() } else { -&a };
            assert!(
                (&b - &expect).abs() < Real::exp2i(-110, 160),
                "{p}/{q}: {a:?} vs {b:?}"
            );
        }
    }
}
