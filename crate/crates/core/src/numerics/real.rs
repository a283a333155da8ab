//! Extended-precision real scalar.
//!
//! `Real` wraps a binary floating-point number with an explicit mantissa
//! precision in bits. Precision is at least [`MIN_PRECISION_BITS`] and every
//! arithmetic result carries the maximum precision of its operands, so mixed
//! expressions never silently truncate. Rounding is to nearest (ties to
//! even); comparisons are exact on the stored representation.
//!
//! The exponent range is wide enough that quantities like e^{±2Q} for Q in
//! the thousands neither overflow nor lose normalization, which the
//! discriminant recurrences rely on.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest supported working precision. Word-aligned, so it satisfies the
/// "at least 53 bits" contract with room to spare.
pub const MIN_PRECISION_BITS: u32 = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

fn clamp_bits(bits: u32) -> u32 {
    bits.max(MIN_PRECISION_BITS)
}

/// Arbitrary-precision real number with explicit precision in bits.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    bits: u32,
}

impl Real {
    fn wrap(v: BigFloat, bits: u32) -> Self {
        debug_assert!(!v.is_nan(), "NaN produced in Real arithmetic");
        debug_assert!(!v.is_inf(), "Inf produced in Real arithmetic");
        Real { v, bits }
    }

    pub fn zero(bits: u32) -> Self {
        let bits = clamp_bits(bits);
        Real::wrap(BigFloat::new(bits as usize), bits)
    }

    pub fn one(bits: u32) -> Self {
        Real::from_u64(1, bits)
    }

    pub fn from_f64(x: f64, bits: u32) -> Self {
        assert!(x.is_finite(), "Real::from_f64 needs a finite value");
        let bits = clamp_bits(bits);
        Real::wrap(BigFloat::from_f64(x, bits as usize), bits)
    }

    pub fn from_u64(x: u64, bits: u32) -> Self {
        let bits = clamp_bits(bits);
        Real::wrap(BigFloat::from_u64(x, bits as usize), bits)
    }

    pub fn from_i64(x: i64, bits: u32) -> Self {
        let bits = clamp_bits(bits);
        Real::wrap(BigFloat::from_i64(x, bits as usize), bits)
    }

    /// Exact rational n/d rounded once at the target precision.
    pub fn from_ratio(n: i64, d: i64, bits: u32) -> Self {
        assert!(d != 0);
        &Real::from_i64(n, bits) / &Real::from_i64(d, bits)
    }

    /// Exact conversion from an arbitrary-size unsigned integer, rounded to
    /// the target precision.
    pub fn from_biguint(n: &num_bigint::BigUint, bits: u32) -> Self {
        let bits = clamp_bits(bits);
        let bitlen = n.bits();
        if bitlen == 0 {
            return Real::zero(bits);
        }
        let words_len = bitlen.div_ceil(64) as usize;
        let shift = (64 * words_len as u64 - bitlen) as usize;
        let shifted = n << shift;
        let mut words = shifted.iter_u64_digits().collect::<Vec<u64>>();
        while words.len() < words_len {
            words.push(0);
        }
        let v = BigFloat::from_words(&words, Sign::Pos, i32::try_from(bitlen).unwrap());
        let mut r = Real::wrap(v, (64 * words_len) as u32);
        if r.bits > bits {
            r = r.with_precision(bits);
        }
        r
    }

    /// Parses a decimal string (scientific notation accepted).
    pub fn parse(s: &str, bits: u32) -> Result<Self> {
        let bits = clamp_bits(bits);
        let v = with_cc(|cc| BigFloat::parse(s, Radix::Dec, bits as usize, RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(Error::Domain(format!("cannot parse {s:?} as a decimal number")));
        }
        Ok(Real::wrap(v, bits))
    }

    pub fn pi(bits: u32) -> Self {
        let bits = clamp_bits(bits);
        Real::wrap(with_cc(|cc| cc.pi(bits as usize, RM)), bits)
    }

    pub fn ln2(bits: u32) -> Self {
        let bits = clamp_bits(bits);
        Real::wrap(with_cc(|cc| cc.ln_2(bits as usize, RM)), bits)
    }

    /// Machine epsilon at this value's precision: 2^(1-bits).
    pub fn eps_at(bits: u32) -> Self {
        Real::exp2i(1 - clamp_bits(bits) as i64, bits)
    }

    /// Exact power of two 2^e.
    pub fn exp2i(e: i64, bits: u32) -> Self {
        let bits = clamp_bits(bits);
        let mut v = BigFloat::from_u64(1, bits as usize);
        v.set_exponent(
            i32::try_from(e + 1).expect("binary exponent out of range"),
        );
        Real::wrap(v, bits)
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits
    }

    /// Same value, re-rounded to `bits` of precision.
    pub fn with_precision(&self, bits: u32) -> Self {
        let bits = clamp_bits(bits);
        let mut v = self.v.clone();
        v.set_precision(bits as usize, RM)
            .expect("set_precision on finite value");
        Real::wrap(v, bits)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.v.is_positive() && !self.v.is_zero()
    }

    pub fn signum_i(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Binary exponent e with |x| in [2^(e-1), 2^e); None for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            self.v.exponent()
        }
    }

    /// Nearest-double approximation; saturates to 0 or +-inf out of range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (m, _p, s, e, _) = self.v.as_raw_parts().expect("finite value");
        let sign = if s == Sign::Neg { -1.0 } else { 1.0 };
        let hi = m[m.len() - 1] as f64;
        let lo = if m.len() > 1 { m[m.len() - 2] as f64 } else { 0.0 };
        let frac = hi / 2f64.powi(64) + lo / 2f64.powi(128);
        if e > 1030 {
            return sign * f64::INFINITY;
        }
        if e < -1060 {
            return 0.0;
        }
        sign * frac * 2f64.powi(e)
    }

    fn bin(&self, rhs: &Real, f: impl FnOnce(&BigFloat, &BigFloat, usize) -> BigFloat) -> Real {
        let bits = self.bits.max(rhs.bits);
        Real::wrap(f(&self.v, &rhs.v, bits as usize), bits)
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.v.abs(), self.bits)
    }

    pub fn floor(&self) -> Real {
        Real::wrap(self.v.floor(), self.bits)
    }

    pub fn ceil(&self) -> Real {
        Real::wrap(self.v.ceil(), self.bits)
    }

    pub fn recip(&self) -> Real {
        Real::wrap(self.v.reciprocal(self.bits as usize, RM), self.bits)
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "sqrt of negative value");
        Real::wrap(self.v.sqrt(self.bits as usize, RM), self.bits)
    }

    pub fn exp(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.exp(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn ln(&self) -> Real {
        assert!(self.is_positive(), "ln of non-positive value");
        Real::wrap(with_cc(|cc| self.v.ln(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn sin(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.sin(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn cos(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.cos(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn tan(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.tan(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn asin(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.asin(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn acos(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.acos(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn atan(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.atan(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn sinh(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.sinh(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn cosh(&self) -> Real {
        Real::wrap(with_cc(|cc| self.v.cosh(self.bits as usize, RM, cc)), self.bits)
    }

    /// Inverse hyperbolic cosine; argument must be >= 1 (clamped from below
    /// by at most one ulp to absorb rounding at the branch point).
    pub fn acosh(&self) -> Real {
        let one = Real::one(self.bits);
        if self <= &one {
            return Real::zero(self.bits);
        }
        Real::wrap(with_cc(|cc| self.v.acosh(self.bits as usize, RM, cc)), self.bits)
    }

    pub fn powi(&self, n: usize) -> Real {
        Real::wrap(self.v.powi(n, self.bits as usize, RM), self.bits)
    }

    /// x^y for positive x via exp(y ln x).
    pub fn pow(&self, y: &Real) -> Real {
        let bits = self.bits.max(y.bits);
        Real::wrap(
            with_cc(|cc| self.v.pow(&y.v, bits as usize, RM, cc)),
            bits,
        )
    }

    /// Quadrant-aware arctangent of y/x for x > 0 or general (x, y) != (0, 0).
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let bits = y.bits.max(x.bits);
        if x.is_positive() {
            return (y / x).atan();
        }
        let pi = Real::pi(bits);
        if x.is_zero() {
            assert!(!y.is_zero(), "atan2(0, 0)");
            let half = &pi / &Real::from_u64(2, bits);
            return if y.is_positive() { half } else { -&half };
        }
        // x < 0
        let base = (y / x).atan();
        if y.is_negative() {
            &base - &pi
        } else {
            &base + &pi
        }
    }

    pub fn min_of(a: &Real, b: &Real) -> Real {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max_of(a: &Real, b: &Real) -> Real {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Decimal scientific representation with `digits` significant digits,
    /// e.g. `-1.234567e-12`. Digits are correctly rounded from the binary
    /// representation.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            if digits == 1 {
                return "0e0".to_string();
            }
            return format!("0.{}e0", "0".repeat(digits - 1));
        }
        let (sign, mut ds, mut e10) = with_cc(|cc| self.v.convert_to_radix(Radix::Dec, RM, cc))
            .expect("radix conversion of finite value");
        // digits are 0.d0 d1 d2 ... x 10^e10
        while ds.len() <= digits {
            ds.push(0);
        }
        // round at position `digits`
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    e10 += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        let mut out = String::new();
        if sign == Sign::Neg {
            out.push('-');
        }
        out.push(char::from(b'0' + ds[0]));
        if digits > 1 {
            out.push('.');
            for &d in &ds[1..] {
                out.push(char::from(b'0' + d));
            }
        }
        out.push('e');
        out.push_str(&(e10 as i64 - 1).to_string());
        out
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|s| s.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:e} @{}b)", self.to_f64(), self.bits)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_sci_string(digits))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.bin(rhs, |a, b, p| a.$raw(b, p, RM))
            }
        }
        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);
impl_binop!(Div, div, div);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.bits)
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}
