use chiral_core::extremal::chi_max;
use chiral_core::{chirality, chirality_of, classify, normalize, PairIndex, SideTriple, SymmetryClass};
use proptest::prelude::*;

fn ulps(x: f64, y: f64) -> u64 {
    if x == y {
        0
    } else {
        (x.to_bits() as i64 - y.to_bits() as i64).unsigned_abs()
    }
}

fn side() -> impl Strategy<Value = f64> {
    prop_oneof![1e-3..1e3f64, 0.5..2.0f64, (1u32..1000).prop_map(f64::from)]
}

fn triple() -> impl Strategy<Value = SideTriple> {
    (side(), side(), side()).prop_map(|(a, b, c)| SideTriple::new(a, b, c).unwrap())
}

fn strict_triangle() -> impl Strategy<Value = SideTriple> {
    // Ravi substitution: a = y + z etc. with positive x, y, z always gives a triangle
    (1e-3..1.0f64, 1e-3..1.0f64, 1e-3..1.0f64)
        .prop_map(|(x, y, z)| SideTriple::new(y + z, z + x, x + y).unwrap())
        .prop_filter("strict", |t| t.is_strict_triangle())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn cyclic_rotation_is_exact(t in triple()) {
        prop_assert_eq!(chirality(&t).to_bits(), chirality(&t.cyclic_rotate()).to_bits());
        prop_assert_eq!(t.cyclic_rotate().cyclic_rotate().cyclic_rotate(), t);
    }

    #[test]
    fn pair_swap_negates_exactly(t in triple()) {
        let chi = chirality(&t);
        for p in PairIndex::ALL {
            prop_assert_eq!(chirality(&t.swap_pair(p)), -chi);
        }
    }

    #[test]
    fn power_of_two_scaling_is_bit_exact(t in triple(), e in -20i32..=20) {
        let scaled = t.to_array().map(|x| x * 2f64.powi(e));
        prop_assert_eq!(chirality(&t).to_bits(), chirality_of(scaled).to_bits());
    }

    #[test]
    fn decimal_scaling_within_four_ulps(
        m in prop::array::uniform3(1u32..=1 << 20),
        k in 0i32..=6,
    ) {
        // integer sides times 10^k, or 10^6 m divided by 10^k: every scaled side is exact
        let base = m.map(|x| f64::from(x) * 1e6);
        let reference = chirality_of(base);
        let p = 10f64.powi(k);
        let up = m.map(|x| f64::from(x) * p);
        let down = base.map(|x| x / p);
        prop_assert!(ulps(reference, chirality_of(up)) <= 4);
        prop_assert!(ulps(reference, chirality_of(down)) <= 4);
    }

    #[test]
    fn isosceles_is_exactly_achiral(x in side(), y in side()) {
        for sides in [[x, x, y], [x, y, x], [y, x, x]] {
            let t = SideTriple::from_array(sides).unwrap();
            prop_assert_eq!(chirality(&t), 0.0);
            let r = classify(&t, 0.0).unwrap();
            prop_assert!(r.symmetry_class != SymmetryClass::Scalene);
        }
    }

    #[test]
    fn zero_only_with_a_mirror_axis(t in triple()) {
        let r = classify(&t, 0.0).unwrap();
        prop_assert_eq!(r.chi == 0.0, r.symmetry_class != SymmetryClass::Scalene);
    }

    #[test]
    fn a_ge_c_ge_b_is_non_negative(t in triple()) {
        let [x, y, z] = t.canonicalize_sorted().to_array();
        // x >= y >= z, so (a, b, c) = (x, z, y) has a >= c >= b
        prop_assert!(chirality_of([x, z, y]) >= 0.0);
    }

    #[test]
    fn cyclic_canonical_form_keeps_chi(t in triple()) {
        let canon = t.canonicalize_cyclic();
        prop_assert_eq!(chirality(&canon).to_bits(), chirality(&t).to_bits());
        prop_assert!(canon.a() >= canon.b() && canon.a() >= canon.c());
    }

    #[test]
    fn sorted_canonical_form_keeps_magnitude(t in triple()) {
        let sorted = t.canonicalize_sorted();
        prop_assert_eq!(chirality(&sorted).abs(), chirality(&t).abs());
        prop_assert!(chirality(&sorted) <= 0.0);
    }

    #[test]
    fn bounded_on_triangles(t in strict_triangle()) {
        prop_assert!(chirality(&t).abs() < chi_max());
    }

    #[test]
    fn normalization_keeps_chi(t in triple()) {
        let n = normalize(&t);
        prop_assert!((n.a_bar() + n.b_bar() + n.c_bar() - 1.0).abs() < 1e-12);
        let chi = chirality(&t);
        if chi == 0.0 {
            prop_assert_eq!(n.chirality(), 0.0);
            return Ok(());
        }
        // division rounds each component; differences amplify that by max/|d|
        let [a, b, c] = t.to_array();
        let max = a.max(b).max(c);
        let amplification: f64 = [a - b, b - c, c - a].iter().map(|d| max / d.abs()).sum();
        let tol = 4.0 * f64::EPSILON * chi.abs() * (1.0 + amplification);
        prop_assert!((n.chirality() - chi).abs() <= tol);
    }

    #[test]
    fn permutation_orbit_sums_to_zero(t in triple()) {
        let orbit = [
            t,
            t.cyclic_rotate(),
            t.cyclic_rotate().cyclic_rotate(),
            t.swap_pair(PairIndex::AB),
            t.swap_pair(PairIndex::BC),
            t.swap_pair(PairIndex::CA),
        ];
        let sum: f64 = orbit.iter().map(chirality).sum();
        prop_assert!(sum.abs() < 1e-15);
    }
}

#[test]
fn non_triangles_can_exceed_the_bound() {
    let t = SideTriple::new(1.0, 2.0, 8.0).unwrap();
    assert!(chirality(&t) > chi_max());
    assert!(!t.is_strict_triangle());
}
