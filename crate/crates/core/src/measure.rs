//! The chirality measure `(a-b)(b-c)(c-a) / (a+b+c)^3` and the symmetry
//! classification built on it.

use core::fmt;

use crate::error::{Error, Result};
use crate::triple::{sorted_ascending, SideTriple};

/// Signed, dimensionless chirality of a side triple.
///
/// Zero exactly when at least two sides are equal. Cyclic relabelings give
/// the bit-identical value and exchanging any two sides flips the sign
/// exactly. For triangles (degenerate ones included) the magnitude never
/// exceeds [`crate::extremal::chi_max`].
///
/// ```
/// use chiral_core::{chirality, SideTriple};
/// let t = SideTriple::new(9.0, 10.0, 11.0).unwrap();
/// assert_eq!(chirality(&t), 2.0 / 27000.0);
/// ```
pub fn chirality(t: &SideTriple) -> f64 {
    chirality_of(t.to_array())
}

/// The measure evaluated on arbitrary finite reals.
///
/// No positivity check is made, so this also serves noisy samples in which a
/// side may have been drawn negative. Returns NaN when the sides sum to zero.
///
/// The sides are first rescaled by a power of two (exact) so nothing
/// underflows. Differences, their product, the perimeter and its cube are
/// carried in double-double arithmetic and rounded once in the final
/// division, so the result is faithfully rounded. The differences are
/// multiplied in order of increasing magnitude; since every relabeling
/// produces the same multiset of differences up to a common sign, the result
/// is invariant under permutation bit-for-bit.
pub fn chirality_of(sides: [f64; 3]) -> f64 {
    let max = sides
        .iter()
        .fold(0.0_f64, |m, &x| if libm::fabs(x) > m { libm::fabs(x) } else { m });
    if max == 0.0 {
        return f64::NAN;
    }
    let (_, exp) = libm::frexp(max);
    let [a, b, c] = sides.map(|x| libm::scalbn(x, -exp));

    let mut diffs = [dd::two_sum(a, -b), dd::two_sum(b, -c), dd::two_sum(c, -a)];
    if diffs.iter().any(|d| d.hi == 0.0) {
        return 0.0;
    }
    let negatives = diffs.iter().filter(|d| d.hi < 0.0).count();
    for d in &mut diffs {
        *d = d.abs();
    }
    diffs.sort_unstable_by(|x, y| x.cmp_magnitude(y));
    let magnitude = diffs[0].mul(diffs[1]).mul(diffs[2]);

    let [lo, mid, hi] = sorted_ascending([a, b, c]);
    let perimeter = dd::two_sum(lo, mid).add_f64(hi);
    if perimeter.hi == 0.0 {
        return f64::NAN;
    }
    let cube = perimeter.mul(perimeter).mul(perimeter);

    let ratio = magnitude.div_to_f64(cube);
    if negatives % 2 == 1 {
        -ratio
    } else {
        ratio
    }
}

/// Unevaluated sums `hi + lo` with `|lo| <= ulp(hi) / 2`.
mod dd {
    use core::cmp::Ordering;

    #[derive(Debug, Clone, Copy)]
    pub(super) struct Dd {
        pub hi: f64,
        pub lo: f64,
    }

    pub(super) fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let lo = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo }
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn split(a: f64) -> (f64, f64) {
        const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
        let t = SPLITTER * a;
        let hi = t - (t - a);
        (hi, a - hi)
    }

    // Dekker's product, exact barring overflow
    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        let (ah, al) = split(a);
        let (bh, bl) = split(b);
        let lo = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
        Dd { hi: p, lo }
    }

    impl Dd {
        pub fn abs(self) -> Self {
            if self.hi < 0.0 {
                Dd { hi: -self.hi, lo: -self.lo }
            } else {
                self
            }
        }

        /// Orders non-negative values by size.
        pub fn cmp_magnitude(&self, other: &Self) -> Ordering {
            self.hi.total_cmp(&other.hi).then(self.lo.total_cmp(&other.lo))
        }

        pub fn add_f64(self, b: f64) -> Self {
            let s = two_sum(self.hi, b);
            quick_two_sum(s.hi, s.lo + self.lo)
        }

        pub fn mul(self, other: Self) -> Self {
            let p = two_prod(self.hi, other.hi);
            let cross = self.hi * other.lo + self.lo * other.hi;
            quick_two_sum(p.hi, p.lo + cross)
        }

        pub fn div_to_f64(self, den: Self) -> f64 {
            let q = self.hi / den.hi;
            let p = two_prod(q, den.hi);
            let rem = (((self.hi - p.hi) - p.lo) + self.lo) - q * den.lo;
            q + rem / den.hi
        }
    }
}

/// Handedness, read off the sign of the measure.
///
/// Positive values are called left-handed and negative values right-handed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    Left,
    Right,
    Achiral,
}

impl Handedness {
    pub fn of(chi: f64) -> Self {
        if chi > 0.0 {
            Handedness::Left
        } else if chi < 0.0 {
            Handedness::Right
        } else {
            Handedness::Achiral
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Handedness::Left => "left",
            Handedness::Right => "right",
            Handedness::Achiral => "achiral",
        }
    }
}

/// Mirror symmetry of the side triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    /// Three equal sides, three mirror axes.
    Equilateral,
    /// Exactly two equal sides, one mirror axis.
    Isosceles,
    /// No equal sides, no mirror axis: chiral.
    Scalene,
}

impl SymmetryClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymmetryClass::Equilateral => "equilateral",
            SymmetryClass::Isosceles => "isosceles",
            SymmetryClass::Scalene => "scalene",
        }
    }
}

/// Where a triple sits relative to the triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleStatus {
    /// Every side shorter than the sum of the other two.
    Strict,
    /// The longest side equals the sum of the other two (collapsed triangle).
    Degenerate,
    /// The longest side exceeds the sum of the other two.
    NonTriangle,
}

impl TriangleStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            TriangleStatus::Strict => "strict",
            TriangleStatus::Degenerate => "degenerate",
            TriangleStatus::NonTriangle => "non_triangle",
        }
    }
}

macro_rules! impl_display_via_as_str {
    ($($ty:ty),*) => {
        $(impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        })*
    };
}

impl_display_via_as_str!(Handedness, SymmetryClass, TriangleStatus);

/// Full classification of a side triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralityResult {
    pub chi: f64,
    pub handedness: Handedness,
    pub symmetry_class: SymmetryClass,
    pub triangle_status: TriangleStatus,
}

/// Evaluates the measure and classifies the triple.
///
/// Two sides count as equal when `|x - y| <= rel_tol * max(x, y)`; the same
/// relative tolerance decides whether the longest side equals the sum of the
/// other two. With `rel_tol = 0` the symmetry class is achiral exactly when
/// `chi == 0`. With a positive tolerance the class may report a mirror axis
/// while `chi` (and the handedness derived from its sign) stays the exact
/// value.
pub fn classify(t: &SideTriple, rel_tol: f64) -> Result<ChiralityResult> {
    if !(rel_tol.is_finite() && rel_tol >= 0.0) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    let [a, b, c] = t.to_array();
    let equal = |x: f64, y: f64| libm::fabs(x - y) <= rel_tol * x.max(y);
    let pairs = [equal(a, b), equal(b, c), equal(c, a)];
    let symmetry_class = match pairs.iter().filter(|p| **p).count() {
        0 => SymmetryClass::Scalene,
        // with a tolerance, a ~ b and b ~ c need not imply a ~ c
        1 | 2 => SymmetryClass::Isosceles,
        _ => SymmetryClass::Equilateral,
    };

    let [lo, mid, hi] = sorted_ascending([a, b, c]);
    let rest = lo + mid;
    let triangle_status = if libm::fabs(hi - rest) <= rel_tol * hi {
        TriangleStatus::Degenerate
    } else if hi < rest {
        TriangleStatus::Strict
    } else {
        TriangleStatus::NonTriangle
    };

    let chi = chirality(t);
    Ok(ChiralityResult {
        chi,
        handedness: Handedness::of(chi),
        symmetry_class,
        triangle_status,
    })
}
