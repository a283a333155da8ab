//! Every large-Q asymptotic formula: the A-factor limits, the Sigma'(0)
//! expansion for arbitrary fixed P and its P = 1 form, the two uniform
//! regimes of Sigma(x), the density of states, and the band-width laws.

mod a_factors;
mod density;
mod dprime;
mod uniform;

pub use a_factors::{approx_a_even, approx_a_odd};
pub use density::{central_band_width_asym, dos, thouless_w, w_d_asym};
pub use dprime::{
    eta_zero_closed_form, sigma_prime_zero_asym, sigma_prime_zero_asym_p1, AsymptoticReport,
};
pub use uniform::{mu_nu, mu_nu_with_order, uniform_away, uniform_center, MuNu};

pub(crate) use density::arcsin_pow_integral;
