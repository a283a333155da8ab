//! Discriminant of Harper's equation at rational flux P/Q: exact evaluation,
//! closed forms at zero energy, large-Q asymptotics, band structure of the
//! spectrum and derived quantities (density of states, total bandwidth,
//! Hausdorff-dimension diagnostic).
//!
//! The crate is organized as:
//!
//! - [`numerics`]: extended-precision scalar ([`Real`]), adaptive quadrature,
//!   root bracketing;
//! - [`specfun`]: log-gamma, gamma ratios, arg Gamma(1/2+iy), complete
//!   elliptic integral, Catalan's and Euler's constants, the Euler-type
//!   constants eta(b);
//! - [`exactdisc`]: the discriminant Sigma(x) via the zero-diagonal
//!   tridiagonal representation and via transfer matrices, its derivative,
//!   the closed form for Sigma'(0) and exact regroupings;
//! - [`asymptotics`]: every large-Q formula (Sigma'(0) expansions, uniform
//!   asymptotics of Sigma, density of states, band-width laws);
//! - [`bands`]: the exact band structure (preimage of [-4,4] under Sigma),
//!   cluster statistics, total bandwidth and W(d) diagnostics.

pub mod asymptotics;
pub mod bands;
pub mod error;
pub mod exactdisc;
pub mod numerics;
pub mod specfun;

pub use error::{Error, Result};
pub use numerics::{default_precision, Real};
