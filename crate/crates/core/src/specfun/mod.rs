//! Special functions for the asymptotic formulas: log-gamma, squared gamma
//! ratios, the continuous phase of Gamma(1/2+iy), the complete elliptic
//! integral (modulus convention), Catalan's constant and the Euler-type
//! constants eta(b).

mod bernoulli;
mod constants;
mod elliptic;
mod eta;
mod gamma;

pub use bernoulli::bernoulli_2n;
pub use constants::{catalan, euler_constant};
pub use elliptic::{elliptic_k, elliptic_k_prime};
pub use eta::{eta_const, EtaConstant};
pub use gamma::{arg_gamma_half_plus_iy, gamma_ratio_sq, log_gamma};
