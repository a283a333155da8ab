//! Adaptive Gauss-Legendre quadrature.
//!
//! Fixed-order panels with adaptive bisection; a panel is accepted when the
//! two-half refinement agrees with the parent within the locally allotted
//! tolerance. An optional square-root substitution at the endpoints handles
//! integrands with inverse-square-root (or square-root-type derivative)
//! behaviour there.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::real::Real;
use crate::error::{Error, Result};

/// How the integrand behaves at the interval endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointRule {
    /// Smooth up to the boundary.
    Plain,
    /// Integrable inverse-square-root singularity (in the function or its
    /// derivative) allowed at either endpoint.
    SqrtSingularity,
}

/// Tolerance and budget for [`integrate`].
#[derive(Clone, Debug)]
pub struct QuadratureSpec {
    pub abs_tol: Real,
    pub max_subdivisions: u32,
    pub endpoint_rule: EndpointRule,
    /// Gauss-Legendre panel order (implementation knob, default 24).
    pub panel_order: u32,
}

impl QuadratureSpec {
    pub fn new(abs_tol: Real) -> Self {
        assert!(abs_tol.is_positive(), "abs_tol must be positive");
        QuadratureSpec {
            abs_tol,
            max_subdivisions: 4000,
            endpoint_rule: EndpointRule::Plain,
            panel_order: 24,
        }
    }

    pub fn with_endpoint_rule(mut self, rule: EndpointRule) -> Self {
        self.endpoint_rule = rule;
        self
    }

    pub fn with_panel_order(mut self, order: u32) -> Self {
        assert!(order >= 2);
        self.panel_order = order;
        self
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], cached per (order, bits).
fn gl_rule(order: u32, bits: u32) -> Arc<Vec<(Real, Real)>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Vec<(Real, Real)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&(order, bits)) {
        return rule.clone();
    }
    let rule = Arc::new(compute_gl_rule(order, bits));
    cache.lock().unwrap().insert((order, bits), rule.clone());
    rule
}

/// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_pair(n: u32, x: &Real, bits: u32) -> (Real, Real) {
    let one = Real::one(bits);
    let mut pm = one.clone(); // P_0
    let mut p = x.clone(); // P_1
    for k in 1..n {
        let k_r = Real::from_u64(k as u64, bits);
        let two_k1 = Real::from_u64(2 * k as u64 + 1, bits);
        let k1 = Real::from_u64(k as u64 + 1, bits);
        let next = (&(&two_k1 * x) * &p - &k_r * &pm) / k1;
        pm = p;
        p = next;
    }
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    let n_r = Real::from_u64(n as u64, bits);
    let dp = &(&n_r * &(&(x * &p) - &pm)) / &(&(x * x) - &one);
    (p, dp)
}

fn compute_gl_rule(order: u32, bits: u32) -> Vec<(Real, Real)> {
    let work = bits + 32;
    let two = Real::from_u64(2, work);
    let one = Real::one(work);
    let mut out = Vec::with_capacity(order as usize);
    let newton_steps = 3 + (bits as f64 / 50.0).log2().max(0.0).ceil() as u32;
    for i in 0..order {
        // Chebyshev-angle initial guess, then Newton at full precision.
        let guess =
            (std::f64::consts::PI * (4.0 * i as f64 + 3.0) / (4.0 * order as f64 + 2.0)).cos();
        let mut x = Real::from_f64(guess, work);
        // double-precision pre-refinement makes the high-precision Newton safe
        for _ in 0..newton_steps + 2 {
            let (p, dp) = legendre_pair(order, &x, work);
            x = &x - &(&p / &dp);
        }
        let (_, dp) = legendre_pair(order, &x, work);
        let w = &two / &(&(&(&one - &(&x * &x)) * &dp) * &dp);
        out.push((x.with_precision(bits), w.with_precision(bits)));
    }
    out
}

struct Panel {
    a: Real,
    b: Real,
    value: Real,
    tol: Real,
}

fn panel_value(f: &dyn Fn(&Real) -> Real, a: &Real, b: &Real, rule: &[(Real, Real)], bits: u32) -> Real {
    let half = Real::from_ratio(1, 2, bits);
    let c = &(a + b) * &half;
    let h = &(b - a) * &half;
    let mut acc = Real::zero(bits);
    for (x, w) in rule {
        let t = &c + &(&h * x);
        acc = &acc + &(w * &f(&t));
    }
    &acc * &h
}

fn integrate_plain(
    f: &dyn Fn(&Real) -> Real,
    a: &Real,
    b: &Real,
    spec: &QuadratureSpec,
    bits: u32,
) -> Result<Real> {
    let rule = gl_rule(spec.panel_order, bits);
    let half = Real::from_ratio(1, 2, bits);
    let mut total = Real::zero(bits);
    let mut splits = 0u32;
    let mut stack = vec![Panel {
        a: a.clone(),
        b: b.clone(),
        value: panel_value(f, a, b, &rule, bits),
        tol: spec.abs_tol.clone(),
    }];
    while let Some(p) = stack.pop() {
        let m = &(&p.a + &p.b) * &half;
        let left = panel_value(f, &p.a, &m, &rule, bits);
        let right = panel_value(f, &m, &p.b, &rule, bits);
        let refined = &left + &right;
        let err = (&refined - &p.value).abs();
        if err <= p.tol || (&p.b - &p.a).abs() <= Real::exp2i(-(bits as i64), bits) {
            total = &total + &refined;
            continue;
        }
        splits += 1;
        if splits > spec.max_subdivisions {
            return Err(Error::NonConvergence(format!(
                "quadrature needs more than {} subdivisions",
                spec.max_subdivisions
            )));
        }
        let child_tol = &p.tol * &half;
        stack.push(Panel { a: p.a, b: m.clone(), value: left, tol: child_tol.clone() });
        stack.push(Panel { a: m, b: p.b, value: right, tol: child_tol });
    }
    Ok(total)
}

/// Integrates `f` over [a, b] to absolute tolerance `spec.abs_tol`.
///
/// With [`EndpointRule::SqrtSingularity`] the interval is split at its
/// midpoint and each half is transformed by u = sqrt(distance to endpoint),
/// which regularizes inverse-square-root endpoint behaviour.
pub fn integrate(
    f: impl Fn(&Real) -> Real,
    a: &Real,
    b: &Real,
    spec: &QuadratureSpec,
) -> Result<Real> {
    if a >= b {
        return Err(Error::Domain(format!(
            "integration bounds must satisfy a < b, got a={a:?}, b={b:?}"
        )));
    }
    assert!(spec.abs_tol.is_positive());
    let bits = a
        .precision_bits()
        .max(b.precision_bits())
        .max(spec.abs_tol.precision_bits());
    match spec.endpoint_rule {
        EndpointRule::Plain => integrate_plain(&f, a, b, spec, bits),
        EndpointRule::SqrtSingularity => {
            let half = Real::from_ratio(1, 2, bits);
            let two = Real::from_u64(2, bits);
            let m = &(a + b) * &half;
            let half_tol = &spec.abs_tol * &half;
            let sub_spec = QuadratureSpec {
                abs_tol: half_tol,
                ..spec.clone()
            };
            // left: x = a + u^2, dx = 2u du, u in [0, sqrt(m-a)]
            let ua = (&m - a).sqrt();
            let left = integrate_plain(
                &|u: &Real| &(&two * u) * &f(&(a + &(u * u))),
                &Real::zero(bits),
                &ua,
                &sub_spec,
                bits,
            )?;
            // right: x = b - u^2
            let ub = (b - &m).sqrt();
            let right = integrate_plain(
                &|u: &Real| &(&two * u) * &f(&(b - &(u * u))),
                &Real::zero(bits),
                &ub,
                &sub_spec,
                bits,
            )?;
            Ok(&left + &right)
        }
    }
}
