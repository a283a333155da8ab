//! Extended-precision scalar, adaptive quadrature and root bracketing.

pub mod quad;
pub mod real;
pub mod root;

pub use quad::{integrate, EndpointRule, QuadratureSpec};
pub use real::{Real, MIN_PRECISION_BITS};
pub use root::find_root;

/// Default working precision for computations parameterized by Q: band
/// widths decay like e^{-cQ}, so the mantissa must grow linearly with Q to
/// keep them resolvable.
pub fn default_precision(q: u64) -> u32 {
    (4 * q).max(128) as u32
}
