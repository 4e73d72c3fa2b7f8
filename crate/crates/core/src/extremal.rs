//! The largest attainable chirality of a triangle.
//!
//! Over the closed triangle region the measure peaks on the degenerate
//! boundary where one normalized side equals 1/2. Fixing `ā = 1/2` and
//! `c̄ = 1/2 - b̄` leaves `b̄ (1/2 - b̄)(1/2 - 2b̄)`, stationary where
//! `6b̄² - 3b̄ + 1/4 = 0`, i.e. `b̄ = (3 - √3)/12`, with value `√3/144`.

use crate::error::{Error, Result};
use crate::measure::chirality_of;
use crate::phase::NormalizedTriple;

/// Bracket width at which the boundary refinement stops.
pub const REFINE_TOLERANCE: f64 = 1e-10;

/// Smallest resolution accepted by [`chi_max_search`].
pub const MIN_SEARCH_RESOLUTION: usize = 100;

/// `√3 / 144 ≈ 0.0120281`, the supremum of `|χ|` over triangles.
pub fn chi_max() -> f64 {
    libm::sqrt(3.0) / 144.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalResult {
    pub chi_max: f64,
    /// Maximizer, rotated so the longest normalized side comes first.
    pub argmax: NormalizedTriple,
    /// Whether the maximizer lies on the degenerate boundary `ā = b̄ + c̄`.
    pub boundary: bool,
}

/// Closed-form maximum on the degenerate boundary.
pub fn chi_max_analytic() -> ExtremalResult {
    let root3 = libm::sqrt(3.0);
    ExtremalResult {
        chi_max: root3 / 144.0,
        argmax: NormalizedTriple::from_parts(0.5, (3.0 - root3) / 12.0, (3.0 + root3) / 12.0),
        boundary: true,
    }
}

/// Best point of the triangle-region lattice with `resolution` steps per
/// edge, as `(χ, [i, j, k])` with `i + j + k = resolution`.
///
/// Ties between cyclic images are broken towards the lexicographically
/// smallest lattice index.
pub fn grid_maximum(resolution: usize) -> (f64, [u32; 3]) {
    let n = resolution as u32;
    let mut best = (f64::NEG_INFINITY, [0, 0, n]);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            if 2 * i.max(j).max(k) > n {
                continue;
            }
            let chi = chirality_of([i as f64, j as f64, k as f64]);
            if chi > best.0 {
                best = (chi, [i, j, k]);
            }
        }
    }
    best
}

/// Numerical maximum: exhaustive lattice search over the closed triangle
/// region, then golden-section refinement of `b̄` along the boundary
/// `ā = 1/2` when the lattice optimum lies within one step of it.
///
/// Independent of [`chi_max_analytic`]; the two are cross-checked in tests.
pub fn chi_max_search(resolution: usize) -> Result<ExtremalResult> {
    if resolution < MIN_SEARCH_RESOLUTION {
        return Err(Error::ResolutionTooSmall {
            got: resolution,
            min: MIN_SEARCH_RESOLUTION,
        });
    }
    let (grid_chi, [i, j, k]) = grid_maximum(resolution);
    let n = resolution as f64;
    let h = 1.0 / n;
    // rotate the largest component into the first slot; cyclic, so χ is kept
    let [p, q, r] = if i >= j && i >= k {
        [i, j, k]
    } else if j >= k {
        [j, k, i]
    } else {
        [k, i, j]
    };
    let (a, b, c) = (p as f64 / n, q as f64 / n, r as f64 / n);

    if (0.5 - a).abs() > h + f64::EPSILON {
        return Ok(ExtremalResult {
            chi_max: grid_chi,
            argmax: NormalizedTriple::from_parts(a, b, c),
            boundary: (a - (b + c)).abs() <= 1e-12,
        });
    }

    let along = |x: f64| chirality_of([0.5, x, 0.5 - x]);
    let lo = (b - h).max(0.0);
    let hi = (b + h).min(0.5);
    let x = golden_section_max(along, lo, hi, REFINE_TOLERANCE);
    let refined = along(x);
    let (chi_max, argmax) = if refined >= grid_chi {
        (refined, NormalizedTriple::from_parts(0.5, x, 0.5 - x))
    } else {
        (grid_chi, NormalizedTriple::from_parts(a, b, c))
    };
    let [a, b, c] = argmax.to_array();
    Ok(ExtremalResult {
        chi_max,
        argmax,
        boundary: (a - (b + c)).abs() <= 1e-12,
    })
}

/// Maximizes a unimodal `f` on `[lo, hi]` until the bracket is narrower
/// than `tol`.
fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}
