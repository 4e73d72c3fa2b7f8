//! The measure over the simplex of normalized side triples.
//!
//! A triple divided by its circumference becomes a point `(ā, b̄, c̄)` with
//! `ā + b̄ + c̄ = 1`. The three isosceles lines `ā = b̄`, `b̄ = c̄`, `c̄ = ā`
//! meet at the equilateral point `(1/3, 1/3, 1/3)` and cut the simplex into
//! six segments, one per strict ordering of the components. The measure has
//! a fixed sign on each segment and vanishes on the lines.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::measure::chirality_of;
use crate::triple::SideTriple;

/// A side triple scaled to unit circumference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedTriple {
    a_bar: f64,
    b_bar: f64,
    c_bar: f64,
}

impl NormalizedTriple {
    pub(crate) fn from_parts(a_bar: f64, b_bar: f64, c_bar: f64) -> Self {
        Self { a_bar, b_bar, c_bar }
    }

    #[inline]
    pub fn a_bar(&self) -> f64 {
        self.a_bar
    }

    #[inline]
    pub fn b_bar(&self) -> f64 {
        self.b_bar
    }

    #[inline]
    pub fn c_bar(&self) -> f64 {
        self.c_bar
    }

    #[inline]
    pub fn to_array(&self) -> [f64; 3] {
        [self.a_bar, self.b_bar, self.c_bar]
    }

    /// The measure at this point; identical to that of any triple it was
    /// normalized from, up to rounding of the division.
    pub fn chirality(&self) -> f64 {
        chirality_of(self.to_array())
    }

    /// Scales back to a side triple with the given circumference.
    pub fn to_sides(&self, perimeter: f64) -> Result<SideTriple> {
        SideTriple::new(
            self.a_bar * perimeter,
            self.b_bar * perimeter,
            self.c_bar * perimeter,
        )
    }
}

/// Divides each side by the circumference.
pub fn normalize(t: &SideTriple) -> NormalizedTriple {
    let s = t.perimeter();
    NormalizedTriple::from_parts(t.a() / s, t.b() / s, t.c() / s)
}

/// One of the six regions between the isosceles lines, or the lines
/// themselves.
///
/// Ordered variants are named by the descending order of the components:
/// `Acb` is the region `ā > c̄ > b̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Abc,
    Acb,
    Bac,
    Bca,
    Cab,
    Cba,
    Nodal,
}

impl Segment {
    pub const ORDERED: [Segment; 6] = [
        Segment::Abc,
        Segment::Acb,
        Segment::Bac,
        Segment::Bca,
        Segment::Cab,
        Segment::Cba,
    ];

    /// Classifies a point by the ordering of its components. Any tie lands
    /// on [`Segment::Nodal`].
    pub fn of<T: PartialOrd>(a: T, b: T, c: T) -> Self {
        if a == b || b == c || c == a {
            return Segment::Nodal;
        }
        match (a > b, b > c, a > c) {
            (true, true, _) => Segment::Abc,
            (true, false, true) => Segment::Acb,
            (true, false, false) => Segment::Cab,
            (false, true, true) => Segment::Bac,
            (false, true, false) => Segment::Bca,
            (false, false, _) => Segment::Cba,
        }
    }

    /// Label 1..=6 for ordered segments, `None` on the lines.
    pub fn id(&self) -> Option<u8> {
        match self {
            Segment::Abc => Some(1),
            Segment::Acb => Some(2),
            Segment::Bac => Some(3),
            Segment::Bca => Some(4),
            Segment::Cab => Some(5),
            Segment::Cba => Some(6),
            Segment::Nodal => None,
        }
    }

    /// Sign of the measure on the segment: positive when the descending
    /// order is an odd permutation of `(a, b, c)`.
    pub fn sign(&self) -> i8 {
        match self {
            Segment::Acb | Segment::Bac | Segment::Cba => 1,
            Segment::Abc | Segment::Bca | Segment::Cab => -1,
            Segment::Nodal => 0,
        }
    }
}

/// Which part of the simplex a grid covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Every point with non-negative components, triangles or not.
    FullSimplex,
    /// Only points satisfying the (closed) triangle inequality, i.e. every
    /// normalized side at most 1/2.
    TriangleRegion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseCell {
    pub a_bar: f64,
    pub b_bar: f64,
    /// `1 - ā - b̄`, computed from the lattice index so that equality with
    /// `ā` or `b̄` on the isosceles lines is exact.
    pub c_bar: f64,
    pub chi: f64,
    pub segment: Segment,
    pub in_triangle: bool,
    /// Integer lattice coordinates `(i, j, k)` with `i + j + k` equal to the
    /// number of divisions.
    pub lattice: [u32; 3],
}

/// Sampled measure over a uniform triangular lattice of the simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    pub resolution: usize,
    pub domain: Domain,
    /// Row-major: ascending `ā`, then ascending `b̄` within a row.
    pub cells: Vec<PhaseCell>,
}

impl PhaseGrid {
    /// Lattice step `1 / (resolution - 1)`.
    pub fn spacing(&self) -> f64 {
        1.0 / (self.resolution - 1) as f64
    }

    /// Number of lattice steps along each edge.
    pub fn divisions(&self) -> u32 {
        (self.resolution - 1) as u32
    }

    pub fn find(&self, i: u32, j: u32) -> Option<&PhaseCell> {
        self.cells
            .iter()
            .find(|c| c.lattice[0] == i && c.lattice[1] == j)
    }
}

/// Samples the simplex on a lattice with `resolution` points per edge.
///
/// Points are `ā = i/n`, `b̄ = j/n`, `c̄ = k/n` with `i + j + k = n` and
/// `n = resolution - 1`, vertices and edges included, giving
/// `resolution * (resolution + 1) / 2` cells on the full simplex.
pub fn grid(resolution: usize, domain: Domain) -> Result<PhaseGrid> {
    if resolution < 2 {
        return Err(Error::ResolutionTooSmall {
            got: resolution,
            min: 2,
        });
    }
    let n = (resolution - 1) as u32;
    let nf = n as f64;
    let mut cells = Vec::with_capacity(resolution * (resolution + 1) / 2);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            let in_triangle = 2 * i.max(j).max(k) <= n;
            if domain == Domain::TriangleRegion && !in_triangle {
                continue;
            }
            cells.push(PhaseCell {
                a_bar: i as f64 / nf,
                b_bar: j as f64 / nf,
                c_bar: k as f64 / nf,
                // integer sides give the correctly rounded value at this point
                chi: chirality_of([i as f64, j as f64, k as f64]),
                segment: Segment::of(i, j, k),
                in_triangle,
                lattice: [i, j, k],
            });
        }
    }
    Ok(PhaseGrid {
        resolution,
        domain,
        cells,
    })
}

/// Cells on the isosceles lines, as `(ā, b̄)` pairs in grid order.
///
/// A cell is on a line when the two normalized sides it compares differ by
/// less than half the lattice spacing; on this lattice that means equal
/// integer coordinates.
pub fn nodal_lines(g: &PhaseGrid) -> Vec<(f64, f64)> {
    g.cells
        .iter()
        .filter(|c| c.segment == Segment::Nodal)
        .map(|c| (c.a_bar, c.b_bar))
        .collect()
}
