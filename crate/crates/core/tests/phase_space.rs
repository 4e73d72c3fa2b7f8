use std::collections::BTreeSet;

use chiral_core::{grid, chirality_of, Domain, Segment, SideTriple};

#[test]
fn canonical_forms_collapse_the_segments() {
    let g = grid(121, Domain::FullSimplex).unwrap();
    let mut cyclic = BTreeSet::new();
    let mut sorted = BTreeSet::new();
    for cell in g.cells.iter().filter(|c| c.segment != Segment::Nodal) {
        let [i, j, k] = cell.lattice.map(f64::from);
        let Ok(t) = SideTriple::new(i, j, k) else {
            continue; // edge points have a zero side
        };
        let c = t.canonicalize_cyclic();
        cyclic.insert(Segment::of(c.a(), c.b(), c.c()));
        let s = t.canonicalize_sorted();
        sorted.insert(Segment::of(s.a(), s.b(), s.c()));
    }
    assert_eq!(cyclic, BTreeSet::from([Segment::Abc, Segment::Acb]));
    assert_eq!(sorted, BTreeSet::from([Segment::Abc]));
}

#[test]
fn sign_is_constant_on_each_segment() {
    let g = grid(201, Domain::FullSimplex).unwrap();
    let mut seen = BTreeSet::new();
    for cell in &g.cells {
        match cell.segment {
            Segment::Nodal => assert_eq!(cell.chi, 0.0),
            s => {
                assert_eq!(cell.chi.signum() as i8, s.sign(), "{cell:?}");
                seen.insert(s);
            }
        }
    }
    assert_eq!(seen.len(), 6);
}

#[test]
fn triangle_region_peaks_on_its_boundary() {
    let g = grid(201, Domain::TriangleRegion).unwrap();
    let peak = g
        .cells
        .iter()
        .max_by(|x, y| x.chi.abs().total_cmp(&y.chi.abs()))
        .unwrap();
    assert!([peak.a_bar, peak.b_bar, peak.c_bar].contains(&0.5), "{peak:?}");
}

#[test]
fn lattice_values_match_direct_evaluation() {
    let g = grid(51, Domain::FullSimplex).unwrap();
    for cell in &g.cells {
        let direct = chirality_of([cell.a_bar, cell.b_bar, cell.c_bar]);
        assert!((direct - cell.chi).abs() <= 1e-15, "{cell:?}");
        assert!((cell.a_bar + cell.b_bar + cell.c_bar - 1.0).abs() < 1e-12);
    }
}
