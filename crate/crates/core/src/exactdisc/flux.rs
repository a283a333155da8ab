//! The commensurability parameter P/Q and its derived quantities.

use crate::error::{Error, Result};
use crate::numerics::{default_precision, Real};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduced flux P/Q with gamma = pi P / Q and, for odd Q, the decomposition
/// Q = 4Pr + s with s odd, 1 <= s <= 4P-1, gcd(s, P) = 1.
#[derive(Clone, Debug)]
pub struct FluxRatio {
    p: u64,
    q: u64,
    gamma: Real,
    s: Option<u64>,
    r: Option<u64>,
}

impl FluxRatio {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Self::with_precision(p, q, default_precision(q))
    }

    pub fn with_precision(p: u64, q: u64, bits: u32) -> Result<Self> {
        if p == 0 || q == 0 || gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let gamma = &(&Real::pi(bits + 32) * &Real::from_u64(p, bits + 32))
            / &Real::from_u64(q, bits + 32);
        let (s, r) = if q % 2 == 1 {
            // q odd and 4p even, so s = q mod 4p is odd automatically;
            // gcd(s, p) = gcd(q, p) = 1
            let s = q % (4 * p);
            (Some(s), Some(q / (4 * p)))
        } else {
            (None, None)
        };
        Ok(FluxRatio {
            p,
            q,
            gamma: gamma.with_precision(bits),
            s,
            r,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// pi P / Q at the ratio's construction precision.
    pub fn gamma(&self) -> &Real {
        &self.gamma
    }

    pub fn is_odd_q(&self) -> bool {
        self.q % 2 == 1
    }

    /// (s, r) of the odd-Q decomposition Q = 4Pr + s.
    pub fn decomposition(&self) -> Result<(u64, u64)> {
        match (self.s, self.r) {
            (Some(s), Some(r)) => Ok((s, r)),
            _ => Err(Error::Parity { q: self.q }),
        }
    }

    /// (-1)^((Q-1)/2) for odd Q.
    pub fn center_sign(&self) -> Result<i32> {
        if !self.is_odd_q() {
            return Err(Error::Parity { q: self.q });
        }
        Ok(if ((self.q - 1) / 2) % 2 == 0 { 1 } else { -1 })
    }
}

/// Memoized values of sin(pi n / Q) for integer n.
///
/// Every sine in the closed forms has an argument that is an integer
/// multiple of pi/Q, so reducing modulo 2Q before evaluating keeps arguments
/// small and catches exact zeros structurally rather than numerically.
pub struct SinTable {
    q: u64,
    bits: u32,
    cache: Vec<Option<Real>>,
}

impl SinTable {
    pub fn new(q: u64, bits: u32) -> Self {
        SinTable {
            q,
            bits,
            cache: vec![None; (2 * q) as usize],
        }
    }

    /// sin(pi n / Q); exact zero when Q divides n.
    pub fn sin(&mut self, n: i64) -> Real {
        let m = n.rem_euclid(2 * self.q as i64) as u64;
        if let Some(v) = &self.cache[m as usize] {
            return v.clone();
        }
        let v = self.compute(m);
        self.cache[m as usize] = Some(v.clone());
        v
    }

    /// sin^2(pi n / Q).
    pub fn sin_sq(&mut self, n: i64) -> Real {
        let s = self.sin(n);
        &s * &s
    }

    fn compute(&self, m: u64) -> Real {
        let q = self.q;
        let (neg, m) = if m >= q { (true, m - q) } else { (false, m) };
        // reduce to [0, q/2] where sine is evaluated directly
        let m = m.min(q - m);
        if m == 0 {
            return Real::zero(self.bits);
        }
        let w = self.bits + 32;
        let angle = &(&Real::pi(w) * &Real::from_u64(m, w)) / &Real::from_u64(q, w);
        let v = angle.sin().with_precision(self.bits);
        if neg {
            -&v
        } else {
            v
        }
    }
}
