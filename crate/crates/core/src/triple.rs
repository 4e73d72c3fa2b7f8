//! Ordered side-length triples and their relabelings.

use crate::error::{Error, Result};

/// Three strictly positive side lengths `(a, b, c)`.
///
/// The order carries meaning: the sides are listed counter-clockwise around
/// the triangle, with side `a` opposite vertex `A`, `b` opposite `B` and `c`
/// opposite `C`, and the vertices labelled counter-clockwise when viewed from
/// above. Reordering the sides yields a different (possibly mirrored) object.
///
/// The triangle inequality is not enforced; any positive triple is accepted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideTriple {
    a: f64,
    b: f64,
    c: f64,
}

/// Which two positions [`SideTriple::swap_pair`] exchanges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairIndex {
    /// `(a, b, c) -> (b, a, c)`
    AB,
    /// `(a, b, c) -> (a, c, b)`
    BC,
    /// `(a, b, c) -> (c, b, a)`
    CA,
}

impl PairIndex {
    pub const ALL: [PairIndex; 3] = [PairIndex::AB, PairIndex::BC, PairIndex::CA];
}

impl SideTriple {
    /// Builds a triple, rejecting non-finite or non-positive sides and
    /// triples whose perimeter is not representable.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let valid = |x: f64| x.is_finite() && x > 0.0;
        if !(valid(a) && valid(b) && valid(c)) {
            return Err(Error::InvalidSides(a, b, c));
        }
        if !(a + b + c).is_finite() {
            return Err(Error::PerimeterOverflow(a, b, c));
        }
        Ok(Self { a, b, c })
    }

    /// Builds a triple from an array `[a, b, c]`.
    pub fn from_array(sides: [f64; 3]) -> Result<Self> {
        Self::new(sides[0], sides[1], sides[2])
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    #[inline]
    pub fn to_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Circumference `a + b + c`, summed in ascending order so that every
    /// relabeling of the same sides gives the bit-identical value.
    pub fn perimeter(&self) -> f64 {
        let [lo, mid, hi] = sorted_ascending(self.to_array());
        (lo + mid) + hi
    }

    /// Cyclic relabeling `(a, b, c) -> (c, a, b)`. The measure is invariant
    /// under it.
    #[must_use]
    pub fn cyclic_rotate(&self) -> Self {
        Self {
            a: self.c,
            b: self.a,
            c: self.b,
        }
    }

    /// Exchanges two positions, producing the mirror image. The measure
    /// changes sign.
    #[must_use]
    pub fn swap_pair(&self, which: PairIndex) -> Self {
        let Self { a, b, c } = *self;
        match which {
            PairIndex::AB => Self { a: b, b: a, c },
            PairIndex::BC => Self { a, b: c, c: b },
            PairIndex::CA => Self { a: c, b, c: a },
        }
    }

    /// The cyclic rotation that puts the largest side in position `a`.
    ///
    /// When the maximum is shared, the earliest position in `(a, b, c)` order
    /// wins. The measure is preserved exactly.
    #[must_use]
    pub fn canonicalize_cyclic(&self) -> Self {
        let [a, b, c] = self.to_array();
        if a >= b && a >= c {
            *self
        } else if b >= c {
            // b is the strict maximum over a, and not beaten by c
            Self { a: b, b: c, c: a }
        } else {
            Self { a: c, b: a, c: b }
        }
    }

    /// Sides sorted in descending order. Only the magnitude of the measure
    /// survives; the result always lies in the non-positive segment.
    #[must_use]
    pub fn canonicalize_sorted(&self) -> Self {
        let [lo, mid, hi] = sorted_ascending(self.to_array());
        Self {
            a: hi,
            b: mid,
            c: lo,
        }
    }

    /// Strict triangle inequality: every side shorter than the sum of the
    /// other two.
    pub fn is_strict_triangle(&self) -> bool {
        is_strict_triangle(self.to_array())
    }
}

impl TryFrom<[f64; 3]> for SideTriple {
    type Error = Error;

    fn try_from(sides: [f64; 3]) -> Result<Self> {
        Self::from_array(sides)
    }
}

impl From<SideTriple> for [f64; 3] {
    fn from(t: SideTriple) -> Self {
        t.to_array()
    }
}

pub(crate) fn sorted_ascending(mut v: [f64; 3]) -> [f64; 3] {
    if v[0] > v[1] {
        v.swap(0, 1);
    }
    if v[1] > v[2] {
        v.swap(1, 2);
    }
    if v[0] > v[1] {
        v.swap(0, 1);
    }
    v
}

/// Strict triangle inequality on raw values. Triples containing a
/// non-positive entry never qualify.
pub fn is_strict_triangle(sides: [f64; 3]) -> bool {
    let [lo, mid, hi] = sorted_ascending(sides);
    lo > 0.0 && hi < lo + mid
}
