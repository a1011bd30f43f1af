//! Structure of the shifted spectra `S_n`: the sedenion gap Δ, elements built
//! from alternative entries, degeneracy profiles, the cos-sum pattern fit,
//! inclusion `S_{n−1} ⊂ S_n`, and the multiplet dimension count.
//!
//! One numerical fact shapes this module: `N_x − ‖x‖²` is quadratic in `x`, and
//! for `x ∈ 𝔸₄` its nonzero eigenvalues are `±Δ` (not `±Δ²`). Callers that want
//! a pattern amplitude on the eigenvalue scale pass `√Δ` to
//! [`fit_theta_pattern`], whose model values are `amplitude²·cos²(·)`.

use std::f64::consts::FRAC_PI_2;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{dot, is_alternative, CdElement, DEFAULT_TOL, MAX_LEVEL};
use crate::error::{Error, Result};
use crate::sampling::{rng_from_seed, sub_seed, uniform_coords};
use crate::spectral::{multiset_subset, shifted_spectrum, SpectrumMultiset, DEFAULT_CLUSTER_TOL};

/// Rounding slack allowed on the Δ radicand before it counts as an error.
const RADICAND_SLACK: f64 = 1e-12;

/// Attempts before alternative-entry generation gives up.
pub const MAX_GENERATION_ATTEMPTS: usize = 1000;

/// Draws rejected as non-generic before [`generic_alternative_element`] gives up.
pub const MAX_GENERIC_RESAMPLES: usize = 200;

/// A distinct-value gap must exceed this multiple of the linkage threshold for
/// a spectrum to count as generic.
pub const GENERIC_GAP_FACTOR: f64 = 10.0;

/// `Δ = 2|𝐱₁ × 𝐱₂| = 2√(‖𝐱₁‖²‖𝐱₂‖² − ⟨𝐱₁, 𝐱₂⟩²)` from the imaginary parts of
/// the two doubling entries.
pub fn delta(x: &CdElement) -> Result<f64> {
    let (x1, x2) = x.split()?;
    let (a, b) = (x1.imaginary_part(), x2.imaginary_part());
    let (aa, bb, ab) = (dot(a.coords(), a.coords()), dot(b.coords(), b.coords()), dot(a.coords(), b.coords()));
    let radicand = aa * bb - ab * ab;
    if radicand < 0.0 {
        let scale = 1.0 + aa * bb;
        if -radicand > RADICAND_SLACK * scale {
            return Err(Error::Consistency(format!("negative Δ radicand {radicand:e}")));
        }
        return Ok(0.0);
    }
    Ok(2.0 * radicand.sqrt())
}

// ---------------------------------------------------------------------------
// Alternative entries

/// Candidate families for alternative elements of 𝔸ₘ. Every candidate is
/// checked with [`is_alternative`] before use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryFamily {
    /// A random octonion placed on 8 consecutive coordinates `8b..8b+8`.
    OctonionBlock,
    /// A random real part plus a random octonion block with its real slot cleared.
    RealPlusBlock,
    /// Recursive doubling `(a, s + c·Im a)` (or the swapped pair) with `a`
    /// alternative one level down: the two entries have parallel imaginary
    /// parts. Produces spectra without accidental degeneracies.
    ParallelDoubling,
}

impl EntryFamily {
    pub fn candidate<R: Rng + ?Sized>(self, level: u32, rng: &mut R) -> Result<CdElement> {
        let dim = 1usize << level;
        if level <= 3 {
            return CdElement::random(level, rng);
        }
        match self {
            EntryFamily::OctonionBlock | EntryFamily::RealPlusBlock => {
                let block = rng.gen_range(0..dim / 8);
                let mut coords = vec![0.0; dim];
                coords[8 * block..8 * block + 8].copy_from_slice(&uniform_coords(rng, 8));
                if self == EntryFamily::RealPlusBlock {
                    coords[8 * block] = 0.0;
                    coords[0] = rng.gen_range(-1.0..=1.0);
                }
                CdElement::new(level, coords)
            }
            EntryFamily::ParallelDoubling => {
                let a = self.candidate(level - 1, rng)?;
                let c: f64 = rng.gen_range(-1.0..=1.0);
                let mut b = a.imaginary_part().scale(c).into_coords();
                b[0] = rng.gen_range(-1.0..=1.0);
                let b = CdElement::new(level - 1, b)?;
                if rng.gen_bool(0.5) {
                    CdElement::from_pair(&b, &a)
                } else {
                    CdElement::from_pair(&a, &b)
                }
            }
        }
    }
}

/// Draws one alternative element of 𝔸_level from `family`, verified by the predicate.
pub fn sample_alternative<R: Rng + ?Sized>(level: u32, family: EntryFamily, rng: &mut R) -> Option<CdElement> {
    for _ in 0..MAX_GENERATION_ATTEMPTS {
        let candidate = family.candidate(level, rng).ok()?;
        if is_alternative(&candidate, DEFAULT_TOL) {
            return Some(candidate);
        }
    }
    None
}

/// `x = (x₁, x₂) ∈ 𝔸_level` with both entries alternative in 𝔸_{level−1},
/// drawn from [`EntryFamily::ParallelDoubling`].
pub fn make_alternative_entry_element(level: u32, seed: u64) -> Result<CdElement> {
    make_alternative_entry_element_with(level, seed, EntryFamily::ParallelDoubling)
}

pub fn make_alternative_entry_element_with(level: u32, seed: u64, family: EntryFamily) -> Result<CdElement> {
    if !(4..=MAX_LEVEL).contains(&level) {
        return Err(Error::input(format!("alternative-entry elements need 4 ≤ level ≤ {MAX_LEVEL}, got {level}")));
    }
    let mut rng = rng_from_seed(seed);
    let fail = || Error::Generation { level, seed, attempts: MAX_GENERATION_ATTEMPTS };
    let x1 = sample_alternative(level - 1, family, &mut rng).ok_or_else(fail)?;
    let x2 = sample_alternative(level - 1, family, &mut rng).ok_or_else(fail)?;
    CdElement::from_pair(&x1, &x2)
}

/// Whether all gaps between distinct cluster values exceed
/// `GENERIC_GAP_FACTOR × threshold`.
pub fn is_generic(spectrum: &SpectrumMultiset) -> bool {
    let floor = GENERIC_GAP_FACTOR * spectrum.threshold;
    spectrum.clusters.windows(2).all(|w| w[1].value - w[0].value > floor)
}

/// An alternative-entry element whose spectrum is generic; degenerate draws
/// are resampled from sub-seeds of `seed`.
#[derive(Clone, Debug, Serialize)]
pub struct GenericDraw {
    pub element: CdElement,
    pub spectrum: SpectrumMultiset,
    /// Seed that produced `element`.
    pub seed: u64,
    pub resampled: usize,
}

pub fn generic_alternative_element(level: u32, seed: u64) -> Result<GenericDraw> {
    for attempt in 0..=MAX_GENERIC_RESAMPLES {
        let draw_seed = if attempt == 0 { seed } else { sub_seed(seed, attempt as u64) };
        let element = make_alternative_entry_element(level, draw_seed)?;
        let spectrum = shifted_spectrum(&element, DEFAULT_CLUSTER_TOL)?;
        if is_generic(&spectrum) {
            return Ok(GenericDraw { element, spectrum, seed: draw_seed, resampled: attempt });
        }
    }
    Err(Error::Generation { level, seed, attempts: MAX_GENERIC_RESAMPLES + 1 })
}

// ---------------------------------------------------------------------------
// Degeneracy

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneracyProfile {
    pub level: u32,
    /// Clusters are symmetric under negation.
    pub is_even_spectrum: bool,
    /// Clusters with multiplicity exactly 4.
    pub quadruple_count: usize,
    /// Nonzero clusters whose multiplicity is a multiple of 4.
    pub nonzero_multiple_of_four: bool,
    /// Distinct non-negative cluster values, zero included.
    pub distinct_nonneg: usize,
    pub max_pairing_residual: f64,
}

pub fn profile_of(level: u32, spectrum: &SpectrumMultiset) -> DegeneracyProfile {
    let (is_even_spectrum, max_pairing_residual) = spectrum.negation_symmetry(spectrum.threshold);
    let nonzero = spectrum.clusters.iter().filter(|c| c.value.abs() > spectrum.threshold);
    DegeneracyProfile {
        level,
        is_even_spectrum,
        quadruple_count: spectrum.clusters.iter().filter(|c| c.multiplicity == 4).count(),
        nonzero_multiple_of_four: nonzero.clone().all(|c| c.multiplicity % 4 == 0),
        distinct_nonneg: spectrum.nonnegative().len(),
        max_pairing_residual,
    }
}

pub fn degeneracy_profile(x: &CdElement) -> Result<DegeneracyProfile> {
    Ok(profile_of(x.level(), &shifted_spectrum(x, DEFAULT_CLUSTER_TOL)?))
}

/// Distinct non-negative values of `S_n` for generic alternative-entry elements.
pub fn expected_distinct_nonneg(level: u32) -> usize {
    if level <= 3 {
        1
    } else {
        1 << (level - 3)
    }
}

// ---------------------------------------------------------------------------
// Cos-sum pattern

/// Points per angle for the full grid when `k ≤ 2`.
pub const THETA_GRID_POINTS: usize = 512;
/// Step halvings in the local refinement.
pub const THETA_REFINE_ITERATIONS: usize = 30;
/// Residual, relative to `amplitude²`, below which a fit is a structural match.
pub const THETA_MATCH_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaFit {
    pub k: usize,
    /// The amplitude Δ of the pattern; model values are `Δ²·cos²(·)`.
    pub delta: f64,
    pub thetas: Vec<f64>,
    /// Distinct predicted values, ascending.
    pub fitted_values: Vec<f64>,
    /// Two-sided max distance between predicted and observed values.
    pub residual: f64,
    pub structural_match: bool,
}

/// Distinct values of the nested pattern
/// `{0} ∪ {Δ²} ∪ ⋃_{j≤k} {Δ²cos²(±θ_j ± … ± θ₁)}`, ascending. Sign patterns
/// related by a global flip give equal values and appear once.
pub fn cos_sum_values(delta: f64, thetas: &[f64]) -> Vec<f64> {
    let d2 = delta * delta;
    let mut out = vec![0.0, d2];
    for j in 1..=thetas.len() {
        // σ_j = +1; the remaining j−1 signs range over all patterns
        for mask in 0..(1usize << (j - 1)) {
            let mut angle = thetas[j - 1];
            for (i, t) in thetas[..j - 1].iter().enumerate() {
                angle += if mask >> i & 1 == 1 { -t } else { *t };
            }
            out.push(d2 * angle.cos().powi(2));
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * (1.0 + d2));
    out
}

/// Largest distance from any point of one sorted set to the nearest point of the other.
fn hausdorff(a: &[f64], b: &[f64]) -> f64 {
    fn directed(from: &[f64], to: &[f64]) -> f64 {
        from.iter()
            .map(|v| {
                let i = to.partition_point(|w| w < v);
                let mut best = f64::INFINITY;
                if i < to.len() {
                    best = best.min(to[i] - v);
                }
                if i > 0 {
                    best = best.min(v - to[i - 1]);
                }
                best
            })
            .fold(0.0, f64::max)
    }
    directed(a, b).max(directed(b, a))
}

/// Fits `k` angles so the cos-sum pattern with amplitude `delta` reproduces
/// the non-negative cluster values of `observed`.
///
/// Search: a full grid over `[0, π/2]^k` (512 points per angle for `k ≤ 2`,
/// coarser above so the grid stays near 2¹⁸ points), then compass refinement
/// in all `3^k − 1` directions with 30 step halvings from the best grid cells.
/// A residual above `1e−6·Δ²` is reported as no structural match.
pub fn fit_theta_pattern(observed: &SpectrumMultiset, delta: f64, k: usize) -> Result<ThetaFit> {
    if k > 4 {
        return Err(Error::input(format!("at most 4 angles are supported, got {k}")));
    }
    if delta < 0.0 || !delta.is_finite() {
        return Err(Error::input("pattern amplitude must be finite and non-negative"));
    }
    let mut targets: Vec<f64> = observed.nonnegative().iter().map(|c| c.value.max(0.0)).collect();
    targets.sort_by(f64::total_cmp);
    if targets.is_empty() {
        return Err(Error::input("observed spectrum has no non-negative values"));
    }
    let objective = |thetas: &[f64]| hausdorff(&cos_sum_values(delta, thetas), &targets);

    let (thetas, residual) = if k == 0 {
        (Vec::new(), objective(&[]))
    } else {
        let per_axis = if k <= 2 { THETA_GRID_POINTS } else { (2f64.powf(18.0 / k as f64)).floor() as usize };
        let spacing = FRAC_PI_2 / (per_axis - 1) as f64;
        let total = per_axis.pow(k as u32);
        let mut scored: Vec<(f64, usize)> =
            (0..total).into_par_iter().map(|cell| (objective(&grid_point(cell, per_axis, spacing, k)), cell)).collect();
        scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        scored
            .iter()
            .take(8)
            .map(|&(_, cell)| refine(&objective, grid_point(cell, per_axis, spacing, k), spacing))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("grid is non-empty")
    };

    Ok(ThetaFit {
        k,
        delta,
        fitted_values: cos_sum_values(delta, &thetas),
        structural_match: residual <= THETA_MATCH_TOL * delta * delta,
        thetas,
        residual,
    })
}

fn grid_point(mut cell: usize, per_axis: usize, spacing: f64, k: usize) -> Vec<f64> {
    (0..k)
        .map(|_| {
            let i = cell % per_axis;
            cell /= per_axis;
            i as f64 * spacing
        })
        .collect()
}

fn refine(objective: &impl Fn(&[f64]) -> f64, start: Vec<f64>, spacing: f64) -> (Vec<f64>, f64) {
    let k = start.len();
    let directions: Vec<Vec<f64>> = (0..3usize.pow(k as u32))
        .map(|code| {
            let mut c = code;
            (0..k)
                .map(|_| {
                    let d = (c % 3) as f64 - 1.0;
                    c /= 3;
                    d
                })
                .collect::<Vec<f64>>()
        })
        .filter(|d| d.iter().any(|&v| v != 0.0))
        .collect();
    let mut best = start;
    let mut best_val = objective(&best);
    let mut step = spacing;
    for _ in 0..THETA_REFINE_ITERATIONS {
        // move at this step size while it keeps improving (bounded), then halve
        for _ in 0..64 {
            let mut improved = false;
            for d in &directions {
                let trial: Vec<f64> = best.iter().zip(d).map(|(t, di)| (t + di * step).clamp(0.0, FRAC_PI_2)).collect();
                let val = objective(&trial);
                if val < best_val {
                    best = trial;
                    best_val = val;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        step *= 0.5;
    }
    (best, best_val)
}

// ---------------------------------------------------------------------------
// Inclusion

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InclusionMode {
    /// Both entries alternative (see [`make_alternative_entry_element`]).
    Alternative,
    /// Coordinates uniform in [-1, 1].
    Generic,
}

impl std::str::FromStr for InclusionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternative" => Ok(InclusionMode::Alternative),
            "generic" => Ok(InclusionMode::Generic),
            other => Err(Error::input(format!("unknown mode {other:?} (expected alternative or generic)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InclusionTrial {
    pub trial: usize,
    pub seed: u64,
    pub first_entry_included: bool,
    pub second_entry_included: bool,
    /// Distinct clusters of `S_n(x)`.
    pub clusters: usize,
}

impl InclusionTrial {
    pub fn holds(&self) -> bool {
        self.first_entry_included && self.second_entry_included
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InclusionReport {
    pub level: u32,
    pub mode: InclusionMode,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub holds: usize,
    /// Seeds of the trials where inclusion failed.
    pub violation_seeds: Vec<u64>,
    pub per_trial: Vec<InclusionTrial>,
}

impl InclusionReport {
    /// Alternative entries, or any entries below level 5, must always include;
    /// generic elements from level 5 on must violate at least once.
    pub fn meets_expectation(&self) -> bool {
        match (self.mode, self.level) {
            (InclusionMode::Generic, l) if l >= 5 => !self.violation_seeds.is_empty(),
            _ => self.holds == self.trials,
        }
    }
}

/// For each trial builds `x = (x₁, x₂)` and tests `S_{n−1}(x₁) ⊂ S_n(x)` and
/// `S_{n−1}(x₂) ⊂ S_n(x)` by value. Trial `i` uses `sub_seed(seed, i)`, so the
/// report does not depend on execution order.
pub fn inclusion_check(level: u32, mode: InclusionMode, trials: usize, seed: u64, tol: f64) -> Result<InclusionReport> {
    if trials == 0 {
        return Err(Error::input("trials must be at least 1"));
    }
    if level == 0 || level > MAX_LEVEL {
        return Err(Error::input(format!("inclusion needs 1 ≤ level ≤ {MAX_LEVEL}, got {level}")));
    }
    if mode == InclusionMode::Alternative && level < 4 {
        return Err(Error::input("alternative mode needs level ≥ 4"));
    }
    let per_trial: Vec<InclusionTrial> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = sub_seed(seed, trial as u64);
            let x = match mode {
                InclusionMode::Alternative => make_alternative_entry_element(level, trial_seed)?,
                InclusionMode::Generic => CdElement::random_seeded(level, trial_seed)?,
            };
            let (x1, x2) = x.split()?;
            let whole = shifted_spectrum(&x, DEFAULT_CLUSTER_TOL)?;
            let s1 = shifted_spectrum(&x1, DEFAULT_CLUSTER_TOL)?;
            let s2 = shifted_spectrum(&x2, DEFAULT_CLUSTER_TOL)?;
            Ok(InclusionTrial {
                trial,
                seed: trial_seed,
                first_entry_included: multiset_subset(&s1, &whole, tol),
                second_entry_included: multiset_subset(&s2, &whole, tol),
                clusters: whole.clusters.len(),
            })
        })
        .collect::<Result<_>>()?;
    let holds = per_trial.iter().filter(|t| t.holds()).count();
    let violation_seeds = per_trial.iter().filter(|t| !t.holds()).map(|t| t.seed).collect();
    Ok(InclusionReport { level, mode, trials, seed, tol, holds, violation_seeds, per_trial })
}

// ---------------------------------------------------------------------------
// Dimension count

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionReport {
    pub plet_size: usize,
    pub level: u32,
    /// `dim 𝔸_level = 2^level`.
    pub algebra_dim: usize,
    /// `dim(𝔸_level / ℝ⁸) = 2^{level−3}`, the number of distinct values of `S̃_level`.
    pub quotient_dim: usize,
    pub matches: bool,
    pub summary: String,
}

pub fn dimension_obstruction(plet_size: usize, level: u32) -> Result<DimensionReport> {
    if !(3..=MAX_LEVEL).contains(&level) {
        return Err(Error::input(format!("dimension count needs 3 ≤ level ≤ {MAX_LEVEL}, got {level}")));
    }
    let algebra_dim = 1usize << level;
    let quotient_dim = algebra_dim / 8;
    let matches = quotient_dim == plet_size;
    let summary = if matches {
        format!("match: dim(A{level}/R^8) = {quotient_dim} = {plet_size}")
    } else {
        let rel = if quotient_dim > plet_size { '>' } else { '<' };
        format!("mismatch: dim(A{level}/R^8) = {quotient_dim} {rel} {plet_size}")
    };
    Ok(DimensionReport { plet_size, level, algebra_dim, quotient_dim, matches, summary })
}
