//! The zero-diagonal tridiagonal representation of the discriminant.
//!
//! For odd Q the spectrum data reduces to a Q x Q tridiagonal matrix L with
//! zero main diagonal and off-diagonal entries 2 sin(pi P k / Q); then
//! Sigma(x) = -det(L - xI). The characteristic-polynomial recurrence
//! evaluates Sigma and, by algorithmic differentiation, Sigma' in one pass.

use super::flux::{FluxRatio, SinTable};
use crate::error::{Error, Result};
use crate::numerics::Real;

/// Which evaluation route produced a [`DiscriminantValue`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Determinant,
    TransferMatrix,
}

/// Sigma and Sigma' at one energy.
#[derive(Clone, Debug)]
pub struct DiscriminantValue {
    pub x: Real,
    pub sigma: Real,
    pub sigma_prime: Real,
    pub route: Route,
}

/// Off-diagonal data of L plus evaluator state.
#[derive(Clone, Debug)]
pub struct DiscriminantModel {
    flux: FluxRatio,
    offdiag: Vec<Real>,
    offdiag_sq: Vec<Real>,
    offdiag_sq_f64: Vec<f64>,
    precision_bits: u32,
    sine_product_residual: f64,
    transfer_sign: i8,
}

/// Builds the evaluator for P/Q at the given working precision.
///
/// For odd Q the sine-product identity
/// prod_{k=1}^{(Q-1)/2} (2 sin(pi P 2k/Q))^2 = Q
/// is verified and its residual recorded; failure indicates the requested
/// precision cannot represent the model.
pub fn build_model(p: u64, q: u64, precision_bits: u32) -> Result<DiscriminantModel> {
    let flux = FluxRatio::with_precision(p, q, precision_bits)?;
    let bits = precision_bits.max(crate::numerics::MIN_PRECISION_BITS);
    let mut table = SinTable::new(q, bits + 32);
    let two = Real::from_u64(2, bits + 32);
    let mut offdiag = Vec::with_capacity((q - 1) as usize);
    let mut offdiag_sq = Vec::with_capacity((q - 1) as usize);
    let mut offdiag_sq_f64 = Vec::with_capacity((q - 1) as usize);
    for k in 1..q {
        let b = &two * &table.sin((p * k) as i64);
        let b2 = (&b * &b).with_precision(bits);
        offdiag_sq_f64.push(b2.to_f64());
        offdiag.push(b.with_precision(bits));
        offdiag_sq.push(b2);
    }

    let mut residual = 0.0;
    if q % 2 == 1 {
        let mut prod = Real::one(bits + 32);
        for k in 1..=(q - 1) / 2 {
            prod = &prod * &offdiag_sq[(2 * k - 1) as usize - 1];
        }
        let rel = (&(&prod / &Real::from_u64(q, bits + 32)) - &Real::one(bits + 32)).abs();
        residual = rel.to_f64();
        let threshold = 2f64.powi(-((bits / 2) as i32));
        if residual > threshold {
            return Err(Error::PrecisionTooLow {
                residual,
                threshold,
            });
        }
    }

    let mut model = DiscriminantModel {
        flux,
        offdiag,
        offdiag_sq,
        offdiag_sq_f64,
        precision_bits: bits,
        sine_product_residual: residual,
        transfer_sign: 0,
    };
    model.transfer_sign = super::transfer::calibrate_sign(&model);
    Ok(model)
}

impl DiscriminantModel {
    pub fn flux(&self) -> &FluxRatio {
        &self.flux
    }

    pub fn p(&self) -> u64 {
        self.flux.p()
    }

    pub fn q(&self) -> u64 {
        self.flux.q()
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Off-diagonal entries 2 sin(pi P k/Q), k = 1..Q-1.
    pub fn offdiag(&self) -> &[Real] {
        &self.offdiag
    }

    pub(crate) fn offdiag_sq(&self) -> &[Real] {
        &self.offdiag_sq
    }

    pub(crate) fn offdiag_sq_f64(&self) -> &[f64] {
        &self.offdiag_sq_f64
    }

    /// Residual of the sine-product identity recorded at build time.
    pub fn sine_product_residual(&self) -> f64 {
        self.sine_product_residual
    }

    pub(crate) fn transfer_sign(&self) -> i8 {
        self.transfer_sign
    }
}

/// Sigma(x) = -det(L - xI) and Sigma'(x) by the three-term recurrence with
/// derivative propagation. Odd Q only.
pub fn sigma_det(model: &DiscriminantModel, x: &Real) -> Result<DiscriminantValue> {
    if model.q() % 2 == 0 {
        return Err(Error::Parity { q: model.q() });
    }
    let bits = model.precision_bits.max(x.precision_bits());
    let xw = x.with_precision(bits);
    // p_0 = 1, p_1 = -x, p_k = -x p_{k-1} - b_{k-1}^2 p_{k-2}
    let mut pm = Real::one(bits);
    let mut p = -&xw;
    let mut dm = Real::zero(bits);
    let mut d = -&Real::one(bits);
    for b2 in model.offdiag_sq.iter() {
        let pn = -&(&(&xw * &p) + &(b2 * &pm));
        let dn = -&(&(&p + &(&xw * &d)) + &(b2 * &dm));
        pm = std::mem::replace(&mut p, pn);
        dm = std::mem::replace(&mut d, dn);
    }
    Ok(DiscriminantValue {
        x: xw,
        sigma: -&p,
        sigma_prime: -&d,
        route: Route::Determinant,
    })
}

/// Sigma(x) only; same recurrence without the derivative line.
pub(crate) fn sigma_det_value(model: &DiscriminantModel, x: &Real) -> Real {
    let bits = model.precision_bits.max(x.precision_bits());
    let xw = x.with_precision(bits);
    let mut pm = Real::one(bits);
    let mut p = -&xw;
    for b2 in model.offdiag_sq.iter() {
        let pn = -&(&(&xw * &p) + &(b2 * &pm));
        pm = std::mem::replace(&mut p, pn);
    }
    -&p
}

/// Value of Sigma in scaled double precision: (mantissa, binary exponent).
///
/// The recurrence keeps both running polynomial values co-scaled with a
/// shared exponent accumulator so that determinant growth like e^{O(Q)}
/// neither overflows nor denormalizes. Used for cheap isolation scans; the
/// certified evaluations always rerun at full precision.
pub(crate) fn sigma_scaled_f64(model: &DiscriminantModel, x: f64) -> (f64, i64) {
    const UP: f64 = 1.3407807929942597e154; // 2^512
    const DOWN: f64 = 7.458340731200207e-155; // 2^-512
    let mut pm = 1.0f64;
    let mut p = -x;
    let mut e = 0i64;
    for b2 in model.offdiag_sq_f64.iter() {
        let pn = -x * p - b2 * pm;
        pm = p;
        p = pn;
        let m = p.abs().max(pm.abs());
        if m > UP {
            p *= DOWN;
            pm *= DOWN;
            e += 512;
        } else if m != 0.0 && m < DOWN {
            p *= UP;
            pm *= UP;
            e -= 512;
        }
    }
    (-p, e)
}

/// Compares |Sigma(x)| against `level` using the scaled representation.
pub(crate) fn sigma_abs_exceeds_f64(model: &DiscriminantModel, x: f64, level: f64) -> bool {
    let (m, e) = sigma_scaled_f64(model, x);
    if m == 0.0 {
        return false;
    }
    m.abs().log2() + e as f64 > level.log2()
}

/// Sign of Sigma(x) from the scaled evaluation.
pub(crate) fn sigma_sign_f64(model: &DiscriminantModel, x: f64) -> i32 {
    let (m, _) = sigma_scaled_f64(model, x);
    if m == 0.0 {
        0
    } else if m < 0.0 {
        -1
    } else {
        1
    }
}
