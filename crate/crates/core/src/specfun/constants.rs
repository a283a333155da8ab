//! Catalan's constant beta(2) and Euler's constant, each computed to the
//! requested precision (never hard-coded, so precision tracking is uniform).

use std::collections::HashMap;
use std::sync::Mutex;

use crate::numerics::Real;

static CATALAN_CACHE: Mutex<Option<HashMap<u32, Real>>> = Mutex::new(None);
static EULER_CACHE: Mutex<Option<HashMap<u32, Real>>> = Mutex::new(None);

fn cached(cache: &Mutex<Option<HashMap<u32, Real>>>, bits: u32, f: impl FnOnce() -> Real) -> Real {
    {
        let guard = cache.lock().unwrap();
        if let Some(v) = guard.as_ref().and_then(|m| m.get(&bits)) {
            return v.clone();
        }
    }
    let v = f();
    cache
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(bits, v.clone());
    v
}

/// Catalan's constant beta(2) = sum (-1)^k / (2k+1)^2.
///
/// Evaluated through the geometrically convergent central-binomial form
/// beta(2) = (3/8) sum_k (k!)^2 / ((2k)! (2k+1)^2) + (pi/8) ln(2 + sqrt 3);
/// the defining alternating series is kept as a test oracle.
pub fn catalan(bits: u32) -> Real {
    cached(&CATALAN_CACHE, bits, || {
        let wbits = bits + 32;
        let tiny = Real::exp2i(-(wbits as i64) - 8, wbits);
        let mut a = Real::one(wbits); // (k!)^2/(2k)!
        let mut sum = Real::one(wbits); // k = 0 term
        let mut k = 0u64;
        loop {
            k += 1;
            a = &a * &Real::from_ratio(k as i64, 2 * (2 * k as i64 - 1), wbits);
            let term = &a / &Real::from_u64((2 * k + 1) * (2 * k + 1), wbits);
            sum = &sum + &term;
            if term < tiny {
                break;
            }
        }
        let three_eighth = Real::from_ratio(3, 8, wbits);
        let sqrt3 = Real::from_u64(3, wbits).sqrt();
        let log_term = (&Real::from_u64(2, wbits) + &sqrt3).ln();
        let pi_eighth = &Real::pi(wbits) * &Real::from_ratio(1, 8, wbits);
        (&(&three_eighth * &sum) + &(&pi_eighth * &log_term)).with_precision(bits)
    })
}

/// Euler's constant by the Brent-McMillan Bessel-ratio scheme:
/// C = A(n)/B(n) - ln n + O(e^(-4n)) with A, B the I_0-type sums.
pub fn euler_constant(bits: u32) -> Real {
    cached(&EULER_CACHE, bits, || {
        let wbits = bits + 32;
        let n = (((wbits + 16) as f64) * std::f64::consts::LN_2 / 4.0).ceil() as u64;
        let n_real = Real::from_u64(n, wbits);
        let tiny = Real::exp2i(-(wbits as i64) - 16, wbits);
        let mut term = Real::one(wbits); // (n^k / k!)^2
        let mut harmonic = Real::zero(wbits);
        let mut a_sum = Real::zero(wbits); // sum term * H_k
        let mut b_sum = Real::one(wbits);
        let mut k = 0u64;
        loop {
            k += 1;
            let ratio = &n_real / &Real::from_u64(k, wbits);
            term = &(&term * &ratio) * &ratio;
            harmonic = &harmonic + &Real::from_u64(k, wbits).recip();
            a_sum = &a_sum + &(&term * &harmonic);
            b_sum = &b_sum + &term;
            if k > 2 * n && &term * &harmonic < &tiny * &b_sum {
                break;
            }
        }
        (&(&a_sum / &b_sum) - &n_real.ln()).with_precision(bits)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_reference() {
        let got = catalan(192);
        let want =
            Real::parse("0.9159655941772190150546035149323841107741", 192).unwrap();
        assert!((&got - &want).abs() < Real::exp2i(-128, 192), "{got:?}");
    }

    #[test]
    fn catalan_precision_consistency() {
        let lo = catalan(128);
        let hi = catalan(256);
        assert!((&lo - &hi.with_precision(128)).abs() < Real::exp2i(-120, 128));
    }

    #[test]
    fn catalan_between_alternating_partial_sums() {
        // truncating the defining alternating series brackets the limit
        let bits = 128;
        let g = catalan(bits);
        for n in [10u64, 100] {
            let mut even = Real::zero(bits);
            for k in 0..2 * n {
                let d = (2 * k + 1) * (2 * k + 1);
                let t = Real::from_u64(d, bits).recip();
                even = if k % 2 == 0 { &even + &t } else { &even - &t };
                if k == 2 * n - 2 {
                    // S_{2n-1} (odd count of terms) upper bound comes next
                }
            }
            // after the loop: even = S_{2n} (2n terms, last subtracted)
            let next = Real::from_u64((4 * n + 1) * (4 * n + 1), bits).recip();
            let upper = &even + &next;
            assert!(even < g && g < upper, "bracketing at n={n}");
        }
    }

    #[test]
    fn euler_reference() {
        let got = euler_constant(192);
        let want =
            Real::parse("0.5772156649015328606065120900824024310422", 192).unwrap();
        assert!((&got - &want).abs() < Real::exp2i(-128, 192), "{got:?}");
    }
}
