//! Significance of a measured chirality under Gaussian side errors.
//!
//! Equilateral triangles are perturbed with independent Gaussian noise on
//! each side and the distribution of `|χ|` is collected. Its mean serves as
//! the 75% confidence threshold: about three quarters of noise-only samples
//! fall below it, so a measured `|χ|` at or above the mean is called chiral
//! with 75% confidence.
//!
//! All randomness comes from ChaCha20 seeded with a `u64`. Each call draws
//! from its own ChaCha stream (the stream number is the row index in
//! [`confidence_table`], 0 for [`simulate`]), so results are bit-identical
//! for a fixed seed.

use alloc::vec::Vec;

use rand_chacha::ChaCha20Rng;
use rand_core::SeedableRng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::extremal::chi_max;
use crate::measure::{chirality, chirality_of};
use crate::triple::{is_strict_triangle, SideTriple};

/// Samples per simulation unless told otherwise.
pub const DEFAULT_SAMPLES: usize = 100_000;

/// Side length of the unperturbed equilateral triangle.
pub const DEFAULT_BASE_SIDE: f64 = 5.0;

/// Bins in the exported `|χ|` histogram.
pub const HISTOGRAM_BINS: usize = 100;

/// Confidence attached to the mean-based threshold.
pub const CONFIDENCE: f64 = 0.75;

/// Relative side errors of the reference significance table.
pub const REFERENCE_ERROR_LEVELS: [f64; 11] = [
    0.01, 0.025, 0.05, 0.075, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40,
];

/// What to do with a draw in which some side came out non-positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NegativeSidePolicy {
    /// Keep the raw Gaussian draw and evaluate the measure on it as is.
    /// Only a draw whose sides sum to exactly zero is redrawn.
    #[default]
    Keep,
    /// Discard the whole triple and draw again.
    Redraw,
}

/// Noise model for one simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub base_side: f64,
    /// Standard deviation of each side divided by `base_side`.
    pub rel_sigma: f64,
    pub n_samples: usize,
    pub seed: u64,
    pub negative_sides: NegativeSidePolicy,
}

impl NoiseSpec {
    pub fn new(base_side: f64, rel_sigma: f64, n_samples: usize, seed: u64) -> Result<Self> {
        let spec = Self {
            base_side,
            rel_sigma,
            n_samples,
            seed,
            negative_sides: NegativeSidePolicy::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    #[must_use]
    pub fn with_policy(mut self, policy: NegativeSidePolicy) -> Self {
        self.negative_sides = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.base_side.is_finite() && self.base_side > 0.0) {
            return Err(Error::InvalidNoise("base side must be finite and positive"));
        }
        if !(self.rel_sigma.is_finite() && self.rel_sigma >= 0.0) {
            return Err(Error::InvalidNoise("relative sigma must be finite and non-negative"));
        }
        if self.n_samples == 0 {
            return Err(Error::InvalidNoise("at least one sample is required"));
        }
        if self.negative_sides == NegativeSidePolicy::Redraw && self.rel_sigma > 1.0 {
            // acceptance of a triple falls off like Φ(1/σ)³; refuse the pathological end
            return Err(Error::InvalidNoise("redraw policy needs relative sigma <= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lower: f64,
    pub upper: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub spec: NoiseSpec,
    pub mean_abs_chi: f64,
    /// Share of samples with `|χ|` at or below the mean.
    pub fraction_below_mean: f64,
    /// Share of samples failing the strict triangle inequality.
    pub violation_rate: f64,
    /// Share of samples with `|χ|` above [`chi_max`].
    pub exceed_chimax_rate: f64,
    /// Equal-width bins from 0 to the largest sample.
    pub histogram: Vec<HistogramBin>,
    /// Draws thrown away and repeated.
    pub redraws: usize,
    samples: Vec<NoisySample>,
}

/// One accepted draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisySample {
    pub sides: [f64; 3],
    pub abs_chi: f64,
}

impl NoisySample {
    pub fn is_strict_triangle(&self) -> bool {
        is_strict_triangle(self.sides)
    }
}

impl SimulationResult {
    /// Accepted draws in the order they were generated.
    pub fn samples(&self) -> &[NoisySample] {
        &self.samples
    }

    /// Sample standard error of the mean of `|χ|`.
    pub fn standard_error(&self) -> f64 {
        let n = self.samples.len() as f64;
        if n < 2.0 {
            return 0.0;
        }
        let m = self.mean_abs_chi;
        let ss: f64 = self
            .samples
            .iter()
            .map(|s| (s.abs_chi - m) * (s.abs_chi - m))
            .sum();
        libm::sqrt(ss / (n - 1.0) / n)
    }
}

/// Runs the noise simulation described by `spec`.
pub fn simulate(spec: &NoiseSpec) -> Result<SimulationResult> {
    simulate_on_stream(spec, 0)
}

fn simulate_on_stream(spec: &NoiseSpec, stream: u64) -> Result<SimulationResult> {
    spec.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    rng.set_stream(stream);
    let sigma = spec.rel_sigma * spec.base_side;

    let mut samples = Vec::with_capacity(spec.n_samples);
    let mut redraws = 0usize;
    while samples.len() < spec.n_samples {
        let sides: [f64; 3] = core::array::from_fn(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            spec.base_side + sigma * z
        });
        if spec.negative_sides == NegativeSidePolicy::Redraw && sides.iter().any(|s| *s <= 0.0) {
            redraws += 1;
            continue;
        }
        let chi = chirality_of(sides);
        if !chi.is_finite() {
            redraws += 1;
            continue;
        }
        samples.push(NoisySample {
            sides,
            abs_chi: libm::fabs(chi),
        });
    }

    let n = samples.len() as f64;
    let mean = samples.iter().map(|s| s.abs_chi).sum::<f64>() / n;
    let below = samples.iter().filter(|s| s.abs_chi <= mean).count();
    let violations = samples.iter().filter(|s| !s.is_strict_triangle()).count();
    let bound = chi_max();
    let exceeding = samples.iter().filter(|s| s.abs_chi > bound).count();

    Ok(SimulationResult {
        spec: *spec,
        mean_abs_chi: mean,
        fraction_below_mean: below as f64 / n,
        violation_rate: violations as f64 / n,
        exceed_chimax_rate: exceeding as f64 / n,
        histogram: histogram(&samples, HISTOGRAM_BINS),
        redraws,
        samples,
    })
}

fn histogram(samples: &[NoisySample], bins: usize) -> Vec<HistogramBin> {
    let max = samples.iter().fold(0.0_f64, |m, s| m.max(s.abs_chi));
    let width = max / bins as f64;
    let mut counts = alloc::vec![0usize; bins];
    for s in samples {
        let idx = if width > 0.0 {
            ((s.abs_chi / width) as usize).min(bins - 1)
        } else {
            0
        };
        counts[idx] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| HistogramBin {
            lower: width * i as f64,
            upper: if i + 1 == bins { max } else { width * (i + 1) as f64 },
            count,
        })
        .collect()
}

/// Fraction of raw samples with `|χ|` not exceeding the sample mean.
pub fn percentile_of_mean(result: &SimulationResult) -> f64 {
    let m = result.mean_abs_chi;
    let below = result.samples.iter().filter(|s| s.abs_chi <= m).count();
    below as f64 / result.samples.len() as f64
}

/// One line of the significance table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceRow {
    pub rel_error: f64,
    pub chi_threshold: f64,
}

/// Thresholds for each relative error, in input order, using the default
/// base side and negative-side policy.
pub fn confidence_table(rel_errors: &[f64], n_samples: usize, seed: u64) -> Result<Vec<ConfidenceRow>> {
    let template = NoiseSpec::new(DEFAULT_BASE_SIDE, 0.0, n_samples, seed)?;
    confidence_table_for(&template, rel_errors)
}

/// Like [`confidence_table`] but taking base side, sample count, seed and
/// policy from `template`. Row `r` draws from ChaCha stream `r`.
pub fn confidence_table_for(template: &NoiseSpec, rel_errors: &[f64]) -> Result<Vec<ConfidenceRow>> {
    rel_errors
        .iter()
        .enumerate()
        .map(|(row, &rel_error)| {
            let spec = NoiseSpec {
                rel_sigma: rel_error,
                ..*template
            };
            let result = simulate_on_stream(&spec, row as u64)?;
            Ok(ConfidenceRow {
                rel_error,
                chi_threshold: result.mean_abs_chi,
            })
        })
        .collect()
}

/// Verdict on whether a measured triple is chiral beyond its error level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Significance {
    pub chi: f64,
    pub threshold: f64,
    pub significant: bool,
    pub confidence: f64,
}

impl Significance {
    /// Compares `|χ(t)|` against a known threshold.
    pub fn against(t: &SideTriple, threshold: f64) -> Self {
        let chi = chirality(t);
        Self {
            chi,
            threshold,
            significant: libm::fabs(chi) >= threshold,
            confidence: CONFIDENCE,
        }
    }

    /// Uses the row of `table` whose error level equals `rel_error`.
    pub fn from_table(t: &SideTriple, rel_error: f64, table: &[ConfidenceRow]) -> Option<Self> {
        table
            .iter()
            .find(|row| row.rel_error == rel_error)
            .map(|row| Self::against(t, row.chi_threshold))
    }
}

/// Simulates the threshold for `rel_error` and tests `t` against it.
pub fn is_significant(t: &SideTriple, rel_error: f64, n_samples: usize, seed: u64) -> Result<Significance> {
    let spec = NoiseSpec::new(DEFAULT_BASE_SIDE, rel_error, n_samples, seed)?;
    let result = simulate(&spec)?;
    Ok(Significance::against(t, result.mean_abs_chi))
}
