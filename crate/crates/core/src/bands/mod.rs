//! Exact band structure: the spectrum at flux P/Q is the preimage of
//! [-4, 4] under Sigma, a union of Q closed intervals. Between consecutive
//! zeros of Sigma the function is monotone up to a single extremum whose
//! magnitude exceeds 4, so each gap hosts exactly two band edges; edges are
//! bracketed from the zeros, refined at full working precision, and the
//! spectrum's mirror symmetry halves the work.

mod analysis;

pub use analysis::{
    band_density_check, centermost_lower_bound_report, cluster_stats, hausdorff_wd,
    CentermostReport, ClusterStat, DensityCheck,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactdisc::{
    build_model, sigma_abs_exceeds_f64, sigma_det, sigma_det_value, sigma_scaled_f64,
    sigma_transfer_default, zeros_even_q, zeros_of_sigma, DiscriminantModel, FluxRatio,
};
use crate::numerics::{find_root, Real};

/// One closed spectral interval.
#[derive(Clone, Debug)]
pub struct Band {
    pub lo: Real,
    pub hi: Real,
    /// 1-based position, increasing with energy.
    pub index: u64,
    pub cluster_id: u64,
    pub width: Real,
}

/// The full band structure with derived totals.
#[derive(Clone, Debug)]
pub struct SpectrumSummary {
    pub flux: FluxRatio,
    pub bands: Vec<Band>,
    pub total_width: Real,
    pub centermost_width: Real,
    /// W(d) = sum width^d on a standard grid of d values.
    pub w_d: Vec<(Real, Real)>,
    pub(crate) precision_bits: u32,
    pub(crate) cluster_ambiguous: bool,
}

fn eval_sigma(model: &DiscriminantModel, x: &Real) -> Real {
    if model.q() % 2 == 1 {
        sigma_det_value(model, x)
    } else {
        sigma_transfer_default(model, x).sigma
    }
}

pub(crate) fn eval_sigma_prime(model: &DiscriminantModel, x: &Real) -> Result<(Real, Real)> {
    if model.q() % 2 == 1 {
        let v = sigma_det(model, x)?;
        Ok((v.sigma, v.sigma_prime))
    } else {
        let v = sigma_transfer_default(model, x);
        Ok((v.sigma, v.sigma_prime))
    }
}

/// A point strictly between two consecutive zeros where |Sigma| > 4.
///
/// |Sigma| is unimodal on the gap. A scaled-double ternary search almost
/// always finds the hump; exponentially shallow humps (intra-cluster gaps at
/// large Q) fall back to the same search in full precision.
fn find_hump(model: &DiscriminantModel, z_lo: &Real, z_hi: &Real) -> Result<Real> {
    let odd = model.q() % 2 == 1;
    if odd {
        let mut a = z_lo.to_f64();
        let mut b = z_hi.to_f64();
        let mid = 0.5 * (a + b);
        if sigma_abs_exceeds_f64(model, mid, 4.0) {
            return Ok(Real::from_f64(mid, model.precision_bits()));
        }
        for _ in 0..80 {
            let m1 = a + (b - a) / 3.0;
            let m2 = b - (b - a) / 3.0;
            for m in [m1, m2] {
                if sigma_abs_exceeds_f64(model, m, 4.0) {
                    return Ok(Real::from_f64(m, model.precision_bits()));
                }
            }
            let (v1, e1) = sigma_scaled_f64(model, m1);
            let (v2, e2) = sigma_scaled_f64(model, m2);
            let log1 = v1.abs().log2() + e1 as f64;
            let log2 = v2.abs().log2() + e2 as f64;
            if log1 < log2 {
                a = m1;
            } else {
                b = m2;
            }
            if b - a < 1e-14 * b.abs().max(1.0) {
                break;
            }
        }
    }
    // full-precision ternary search
    let bits = model.precision_bits();
    let four = Real::from_u64(4, bits);
    let third = Real::from_ratio(1, 3, bits);
    let mut a = z_lo.clone();
    let mut b = z_hi.clone();
    let tol = Real::exp2i(-(bits as i64) + 16, bits);
    loop {
        let w = &b - &a;
        let m1 = &a + &(&w * &third);
        let m2 = &b - &(&w * &third);
        for m in [&m1, &m2] {
            if eval_sigma(model, m).abs() > four {
                return Ok(m.clone());
            }
        }
        if w < tol {
            return Err(Error::EdgeNotFound {
                near: z_lo.to_f64(),
                bits,
            });
        }
        if eval_sigma(model, &m1).abs() < eval_sigma(model, &m2).abs() {
            a = m1;
        } else {
            b = m2;
        }
    }
}

/// Both edges inside the gap (z_lo, z_hi): the upper edge of the band at
/// z_lo and the lower edge of the band at z_hi.
fn gap_edges(model: &DiscriminantModel, z_lo: &Real, z_hi: &Real, edge_tol: &Real) -> Result<(Real, Real)> {
    let bits = model.precision_bits();
    let four = Real::from_u64(4, bits);
    let hump = find_hump(model, z_lo, z_hi)?;
    let level = if eval_sigma(model, &hump).is_positive() {
        four
    } else {
        -&four
    };
    let f = |t: &Real| &eval_sigma(model, t) - &level;
    let hi_edge = find_root(f, z_lo, &hump, edge_tol)?;
    let lo_edge = find_root(f, &hump, z_hi, edge_tol)?;
    Ok((hi_edge, lo_edge))
}

/// Outermost edge beyond the extreme zero `z`, searching in direction
/// `dir` (+1 right, -1 left).
fn outer_edge(model: &DiscriminantModel, z: &Real, dir: i32, edge_tol: &Real) -> Result<Real> {
    let bits = model.precision_bits();
    let four = Real::from_u64(4, bits);
    let mut h = 0.125f64;
    let zf = z.to_f64();
    let odd = model.q() % 2 == 1;
    let mut probe_f = zf;
    for _ in 0..64 {
        probe_f = zf + dir as f64 * h;
        let exceeded = if odd {
            sigma_abs_exceeds_f64(model, probe_f, 4.0)
        } else {
            eval_sigma(model, &Real::from_f64(probe_f, bits)).abs() > four
        };
        if exceeded {
            break;
        }
        h *= 2.0;
    }
    let probe = Real::from_f64(probe_f, bits);
    let level = if eval_sigma(model, &probe).is_positive() {
        four
    } else {
        -&four
    };
    let f = |t: &Real| &eval_sigma(model, t) - &level;
    if dir > 0 {
        find_root(f, z, &probe, edge_tol)
    } else {
        find_root(f, &probe, z, edge_tol)
    }
}

/// Cluster classification of the interior gaps: which gaps are
/// intra-cluster (returned per gap), plus an ambiguity flag.
///
/// For odd Q the decomposition Q = 4Pr + s fixes the candidate structure
/// exactly: 2r clusters of P bands per half-spectrum around a central
/// cluster of s bands. The candidate is accepted only if every boundary gap
/// dominates the intra gaps of the two clusters it separates; P = 1 has no
/// clustering at all. Without a valid candidate (even Q, r = 0, or failed
/// validation) a two-scale split of the sorted gaps is used, and the result
/// is flagged ambiguous when no clear separation exists.
fn classify_gaps(gaps: &[Real], flux: &FluxRatio, touch_tol: &Real) -> (Vec<bool>, bool) {
    let n = gaps.len();
    if n == 0 {
        return (Vec::new(), false);
    }
    if flux.is_odd_q() && flux.p() == 1 {
        return (vec![false; n], false);
    }
    if let Ok((s, r)) = flux.decomposition() {
        if flux.p() >= 2 && r >= 1 {
            let p = flux.p() as usize;
            let mut sizes = vec![p; (2 * r) as usize];
            sizes.push(s as usize);
            sizes.extend(vec![p; (2 * r) as usize]);
            let mut intra = vec![true; n];
            let mut boundaries = Vec::new();
            let mut pos = 0usize;
            for sz in &sizes[..sizes.len() - 1] {
                pos += sz;
                boundaries.push(pos - 1); // gap index after the block
                intra[pos - 1] = false;
            }
            // each boundary gap must dominate its neighbours' internal gaps
            let mut valid = true;
            'outer: for (bi, &b) in boundaries.iter().enumerate() {
                let lo = if bi == 0 { 0 } else { boundaries[bi - 1] + 1 };
                let hi = boundaries.get(bi + 1).map_or(n, |&x| x);
                for k in lo..hi {
                    if k == b {
                        continue;
                    }
                    let margin = &gaps[k] * &Real::from_ratio(3, 2, gaps[k].precision_bits());
                    if gaps[b] <= margin {
                        valid = false;
                        break 'outer;
                    }
                }
            }
            if valid {
                return (intra, false);
            }
        }
    }
    // fallback: two-scale split of the sorted gap sizes
    let mut sorted: Vec<&Real> = gaps.iter().collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut best_ratio = 1.0f64;
    let mut best_i = 0usize;
    for i in 0..n - 1 {
        if sorted[i] <= touch_tol {
            continue;
        }
        let r = (sorted[i + 1] / sorted[i]).to_f64();
        if r > best_ratio {
            best_ratio = r;
            best_i = i;
        }
    }
    if best_ratio >= 1e3 {
        let threshold = (sorted[best_i] * sorted[best_i + 1]).sqrt();
        let intra: Vec<bool> = gaps.iter().map(|g| g < &threshold).collect();
        (intra, false)
    } else {
        // touching bands (zero-width gaps) always share a cluster
        let intra: Vec<bool> = gaps.iter().map(|g| g <= touch_tol).collect();
        (intra, best_ratio >= 20.0)
    }
}

/// Computes the exact band structure of the model.
///
/// Odd Q uses the determinant route, even Q the transfer route (where the
/// two central bands share the endpoint 0). `edge_tol` is the absolute
/// enclosure tolerance for every edge.
pub fn compute_bands(model: &DiscriminantModel, edge_tol: &Real) -> Result<SpectrumSummary> {
    if !edge_tol.is_positive() {
        return Err(Error::Domain("edge_tol must be positive".into()));
    }
    let q = model.q();
    let bits = model.precision_bits();

    if q == 1 {
        // Sigma(x) = x: single band [-4, 4]
        let four = Real::from_u64(4, bits);
        let eight = Real::from_u64(8, bits);
        let flux = model.flux().clone();
        let band = Band {
            lo: -&four,
            hi: four,
            index: 1,
            cluster_id: 1,
            width: eight.clone(),
        };
        let w_d = standard_wd(&[eight.clone()], bits);
        return Ok(SpectrumSummary {
            flux,
            bands: vec![band],
            total_width: eight.clone(),
            centermost_width: eight,
            w_d,
            precision_bits: bits,
            cluster_ambiguous: false,
        });
    }

    let odd = q % 2 == 1;
    let zeros = if odd {
        zeros_of_sigma(model)?
    } else {
        zeros_even_q(model)?
    };

    // mirror symmetry: resolve the right half and reflect.
    // right-half gap list: (z_k, z_{k+1}) for k >= mid
    let mid = (q as usize).div_ceil(2) - 1; // index of smallest nonnegative zero
    let right_gaps: Vec<usize> = (mid..q as usize - 1).collect();
    let touching_center = !odd;

    let gap_results: Vec<Result<(Real, Real)>> = right_gaps
        .par_iter()
        .map(|&k| {
            if touching_center && k == mid {
                // even Q: the two central bands merge at 0 where |Sigma| = 4
                let zero = Real::zero(bits);
                let v = eval_sigma(model, &zero);
                let resid = (&v.abs() - &Real::from_u64(4, bits)).abs().to_f64();
                if resid > 2f64.powi(-((bits / 2) as i32)) {
                    return Err(Error::EdgeNotFound { near: 0.0, bits });
                }
                return Ok((zero.clone(), zero));
            }
            gap_edges(model, &zeros[k], &zeros[k + 1], edge_tol)
        })
        .collect();
    let mut hi_of = vec![None; q as usize]; // upper edge of band k (0-based)
    let mut lo_of = vec![None; q as usize];
    for (i, r) in gap_results.into_iter().enumerate() {
        let (hi, lo_next) = r?;
        let k = right_gaps[i];
        hi_of[k] = Some(hi);
        lo_of[k + 1] = Some(lo_next);
    }
    let rightmost = outer_edge(model, &zeros[q as usize - 1], 1, edge_tol)?;
    hi_of[q as usize - 1] = Some(rightmost);

    // reflect: band k mirrors band Q+1-k (0-based: j = q-1-k)
    for k in 0..q as usize {
        if hi_of[k].is_none() {
            let j = q as usize - 1 - k;
            hi_of[k] = Some(-lo_of[j].as_ref().expect("mirror lower edge resolved").clone());
        }
        if lo_of[k].is_none() {
            let j = q as usize - 1 - k;
            lo_of[k] = Some(-hi_of[j].as_ref().expect("mirror upper edge resolved").clone());
        }
    }

    let mut widths = Vec::with_capacity(q as usize);
    let mut bands = Vec::with_capacity(q as usize);
    for k in 0..q as usize {
        let lo = lo_of[k].take().unwrap();
        let hi = hi_of[k].take().unwrap();
        if hi < lo {
            return Err(Error::EdgeNotFound {
                near: lo.to_f64(),
                bits,
            });
        }
        let width = &hi - &lo;
        widths.push(width.clone());
        bands.push(Band {
            lo,
            hi,
            index: k as u64 + 1,
            cluster_id: 0,
            width,
        });
    }

    // edge enclosures must resolve every width, except the deliberate
    // shared endpoint of even Q (the two central widths stay positive there)
    let min_width = widths
        .iter()
        .min_by(|a, b| a.partial_cmp(b).unwrap())
        .unwrap();
    if min_width <= &(edge_tol * &Real::from_u64(10, bits)) {
        return Err(Error::EdgeNotFound {
            near: 0.0,
            bits,
        });
    }

    let gaps: Vec<Real> = (0..q as usize - 1)
        .map(|k| (&bands[k + 1].lo - &bands[k].hi).abs())
        .collect();
    let touch_tol = edge_tol * &Real::from_u64(16, bits);
    let (intra, ambiguous) = classify_gaps(&gaps, model.flux(), &touch_tol);
    let mut cid = 1u64;
    for k in 0..q as usize {
        if k > 0 && !intra[k - 1] {
            cid += 1;
        }
        bands[k].cluster_id = cid;
    }
    // normalize: first cluster id is 1
    let base = bands[0].cluster_id - 1;
    for b in bands.iter_mut() {
        b.cluster_id -= base;
    }

    let mut total = Real::zero(bits);
    for w in &widths {
        total = &total + w;
    }
    let centermost = if odd {
        bands[(q as usize - 1) / 2].width.clone()
    } else {
        bands[q as usize / 2].width.clone()
    };
    let w_d = standard_wd(&widths, bits);
    Ok(SpectrumSummary {
        flux: model.flux().clone(),
        bands,
        total_width: total,
        centermost_width: centermost,
        w_d,
        precision_bits: bits,
        cluster_ambiguous: ambiguous,
    })
}

fn standard_wd(widths: &[Real], bits: u32) -> Vec<(Real, Real)> {
    [1, 2, 3, 4]
        .iter()
        .map(|&n| {
            let d = Real::from_ratio(n, 4, bits);
            let mut sum = Real::zero(bits);
            for w in widths {
                sum = &sum + &w.pow(&d);
            }
            (d, sum)
        })
        .collect()
}

/// Default absolute edge tolerance at a given working precision: most of
/// the mantissa, with 64 bits of headroom for the root refinement itself.
pub fn default_edge_tol(bits: u32) -> Real {
    Real::exp2i(-(bits.saturating_sub(64) as i64).max(64), bits)
}

/// Band computation with automatic precision escalation: starts at the
/// model default max(128, 4Q) bits and doubles on failure up to `max_bits`
/// (the narrowest bands shrink like e^{-cQ}, so under-provisioned precision
/// shows up as unresolvable edges).
pub fn compute_bands_escalating(
    p: u64,
    q: u64,
    start_bits: u32,
    max_bits: u32,
) -> Result<SpectrumSummary> {
    let mut bits = start_bits.max(crate::numerics::default_precision(q));
    loop {
        let model = build_model(p, q, bits)?;
        let tol = default_edge_tol(bits);
        match compute_bands(&model, &tol) {
            Ok(s) => return Ok(s),
            Err(Error::EdgeNotFound { .. }) | Err(Error::NonConvergence(_)) if bits < max_bits => {
                bits = (bits * 2).min(max_bits.max(bits + 1));
            }
            Err(e) => return Err(e),
        }
    }
}
