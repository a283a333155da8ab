//! Derived reports over a computed band structure: the centermost-band
//! lower bound, cluster statistics, the W(d) sums and the density window
//! check.

use super::{eval_sigma_prime, SpectrumSummary};
use crate::asymptotics::dos;
use crate::error::{Error, Result};
use crate::exactdisc::{sigma_prime_zero_exact, DiscriminantModel};
use crate::numerics::{integrate, QuadratureSpec, Real};

/// Exact centermost width against the mean-value bound 8/|Sigma'(0)|.
#[derive(Clone, Debug)]
pub struct CentermostReport {
    pub width: Real,
    /// width / (8 / |Sigma'(0)|); at least 1 would mean the bound is tight
    /// at the center, in practice the maximum of |Sigma'| sits elsewhere.
    pub bound_ratio: Real,
    /// max |Sigma'| over the band (sampled plus local refinement).
    pub max_abs_derivative: Real,
}

/// One cluster of bands.
#[derive(Clone, Debug)]
pub struct ClusterStat {
    pub cluster_id: u64,
    pub band_count: u64,
    pub span: Real,
    pub gap_to_next: Option<Real>,
}

/// Band count against the integrated density of states over a window.
#[derive(Clone, Debug)]
pub struct DensityCheck {
    pub counted: u64,
    pub predicted: Real,
}

/// Maximum of |Sigma'| over [lo, hi]: dense sampling plus golden-section
/// refinement around the best sample.
fn max_abs_derivative(model: &DiscriminantModel, lo: &Real, hi: &Real) -> Result<Real> {
    let bits = lo.precision_bits();
    let n = 128u64;
    let h = &(hi - lo) / &Real::from_u64(n, bits);
    let mut best = Real::zero(bits);
    let mut best_i = 0u64;
    for i in 0..=n {
        let x = lo + &(&h * &Real::from_u64(i, bits));
        let (_, d) = eval_sigma_prime(model, &x)?;
        if d.abs() > best {
            best = d.abs();
            best_i = i;
        }
    }
    // golden-section refine on the bracketing samples
    let mut a = lo + &(&h * &Real::from_u64(best_i.saturating_sub(1), bits));
    let mut b = lo + &(&h * &Real::from_u64((best_i + 1).min(n), bits));
    let phi = Real::parse("0.381966011250105151795413165634361882", bits).unwrap();
    for _ in 0..64 {
        let w = &b - &a;
        let m1 = &a + &(&w * &phi);
        let m2 = &b - &(&w * &phi);
        let (_, d1) = eval_sigma_prime(model, &m1)?;
        let (_, d2) = eval_sigma_prime(model, &m2)?;
        if d1.abs() < d2.abs() {
            a = m1;
        } else {
            b = m2;
        }
        let d = Real::max_of(&d1.abs(), &d2.abs());
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// The centermost band width together with its mean-value lower bound
/// 8/|Sigma'(0)| from the closed form. Odd Q.
pub fn centermost_lower_bound_report(
    summary: &SpectrumSummary,
    model: &DiscriminantModel,
) -> Result<CentermostReport> {
    if model.q() % 2 == 0 {
        return Err(Error::Parity { q: model.q() });
    }
    let bits = summary.precision_bits;
    let central = &summary.bands[(model.q() as usize - 1) / 2];
    let dprime0 = sigma_prime_zero_exact(model.flux())?.abs();
    let bound = &Real::from_u64(8, bits) / &dprime0;
    let ratio = &summary.centermost_width / &bound;
    let max_d = max_abs_derivative(model, &central.lo, &central.hi)?;
    Ok(CentermostReport {
        width: summary.centermost_width.clone(),
        bound_ratio: ratio,
        max_abs_derivative: max_d,
    })
}

/// Groups bands into clusters and reports counts, spans and gaps.
///
/// Errors with [`Error::ClusteringAmbiguous`] when the gap sizes show no
/// clear two-scale separation (typically small Q at P > 1); the per-band
/// cluster ids in the summary remain usable as a best effort.
pub fn cluster_stats(summary: &SpectrumSummary) -> Result<Vec<ClusterStat>> {
    if summary.cluster_ambiguous {
        return Err(Error::ClusteringAmbiguous);
    }
    let mut runs: Vec<(u64, u64)> = Vec::new(); // (cluster_id, band_count)
    for band in &summary.bands {
        match runs.last_mut() {
            Some((id, n)) if *id == band.cluster_id => *n += 1,
            _ => runs.push((band.cluster_id, 1)),
        }
    }
    let mut out = Vec::with_capacity(runs.len());
    let mut idx = 0usize;
    for (cluster_id, band_count) in runs {
        let s = ClusterStat {
            cluster_id,
            band_count,
            span: Real::zero(summary.precision_bits),
            gap_to_next: None,
        };
        let first = &summary.bands[idx];
        let last = &summary.bands[idx + s.band_count as usize - 1];
        let gap = summary
            .bands
            .get(idx + s.band_count as usize)
            .map(|next| &next.lo - &last.hi);
        idx += s.band_count as usize;
        out.push(ClusterStat {
            span: &last.hi - &first.lo,
            gap_to_next: gap,
            ..s
        });
    }
    Ok(out)
}

/// W(d) = sum of band widths raised to d, for d in (0, 1].
pub fn hausdorff_wd(summary: &SpectrumSummary, d: &Real) -> Result<Real> {
    let bits = summary.precision_bits;
    let one = Real::one(bits);
    if !d.is_positive() || d > &one {
        return Err(Error::Domain(format!(
            "hausdorff_wd needs d in (0,1], got {d:?}"
        )));
    }
    let mut sum = Real::zero(bits);
    for b in &summary.bands {
        sum = &sum + &b.width.pow(d);
    }
    Ok(sum)
}

/// Counts band centers in [window_lo, window_hi] and compares with
/// Q * integral of the density of states over the window.
///
/// The density integrates to exactly 1 over (-4, 4) (verified numerically
/// in the tests), so Q * rho is the band density per unit energy with no
/// extra normalization.
pub fn band_density_check(
    summary: &SpectrumSummary,
    window_lo: &Real,
    window_hi: &Real,
) -> Result<DensityCheck> {
    let bits = summary.precision_bits.min(256);
    if window_lo >= window_hi {
        return Err(Error::Domain("empty density window".into()));
    }
    let half = Real::from_ratio(1, 2, bits);
    let mut counted = 0u64;
    for b in &summary.bands {
        let center = &(&b.lo + &b.hi) * &half;
        if &center >= window_lo && &center <= window_hi {
            counted += 1;
        }
    }
    let spec = QuadratureSpec::new(Real::parse("1e-12", bits).unwrap());
    let rho_int = integrate(
        |x| dos(x).expect("window inside the open spectrum interval"),
        &window_lo.with_precision(bits),
        &window_hi.with_precision(bits),
        &spec,
    )?;
    Ok(DensityCheck {
        counted,
        predicted: &Real::from_u64(summary.flux.q(), bits) * &rho_int,
    })
}
