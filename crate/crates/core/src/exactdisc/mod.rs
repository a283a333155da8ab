//! Exact (to working precision) evaluation of the discriminant Sigma(x),
//! its derivative, the closed form for Sigma'(0), the exact regrouping of
//! the zero-energy sum, and the derivative-sum identity over the zeros.

mod closed_form;
mod flux;
mod model;
mod transfer;
mod zeros;

pub use closed_form::{
    a_even_exact, a_odd_exact, s_direct, s_regrouped, sigma_prime_zero_exact,
};
pub use flux::{FluxRatio, SinTable};
pub use model::{build_model, sigma_det, DiscriminantModel, DiscriminantValue, Route};
pub use transfer::{default_theta, sigma_transfer, sigma_transfer_default};
pub use zeros::{last_wilkinson_sum, zeros_of_sigma};

pub(crate) use model::{sigma_abs_exceeds_f64, sigma_det_value, sigma_scaled_f64};
pub(crate) use zeros::zeros_even_q;
