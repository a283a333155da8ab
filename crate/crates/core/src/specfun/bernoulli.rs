//! Bernoulli numbers B_{2n} through integer tangent numbers.
//!
//! The Seidel/Knuth-Buckholtz triangle produces tangent numbers T_n exactly
//! in integer arithmetic; B_{2n} = (-1)^(n-1) * 2n * T_n / (4^n (4^n - 1)).
//! Exactness matters because these feed Stirling series whose coefficients
//! must be correct to full working precision.

use num_bigint::BigUint;
use std::sync::Mutex;

use crate::numerics::Real;

static TANGENT: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// Tangent number T_n (1-indexed: T_1 = 1, T_2 = 2, T_3 = 16, ...).
fn tangent(n: usize) -> BigUint {
    let mut cache = TANGENT.lock().unwrap();
    if cache.len() < n {
        let m = (n + 16).max(2 * cache.len());
        let mut t: Vec<BigUint> = Vec::with_capacity(m);
        t.push(BigUint::from(1u32));
        for k in 1..m {
            let prev = t[k - 1].clone();
            t.push(prev * BigUint::from(k as u64));
        }
        for k in 1..m {
            for j in k..m {
                let a = t[j - 1].clone() * BigUint::from((j - k) as u64);
                let b = t[j].clone() * BigUint::from((j - k + 2) as u64);
                t[j] = a + b;
            }
        }
        *cache = t;
    }
    cache[n - 1].clone()
}

/// B_{2n} as an extended-precision value at the given precision.
pub fn bernoulli_2n(n: usize, bits: u32) -> Real {
    assert!(n >= 1);
    let t = Real::from_biguint(&tangent(n), bits + 64);
    let four_n = Real::from_u64(4, bits + 64).powi(n);
    let denom = &four_n * &(&four_n - &Real::one(bits + 64));
    let num = &t * &Real::from_u64(2 * n as u64, bits + 64);
    let v = (&num / &denom).with_precision(bits);
    if n % 2 == 0 {
        -&v
    } else {
        v
    }
}
