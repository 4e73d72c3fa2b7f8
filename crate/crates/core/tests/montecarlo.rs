use chiral_core::extremal::chi_max;
use chiral_core::montecarlo::{confidence_table_for, REFERENCE_ERROR_LEVELS};
use chiral_core::{
    confidence_table, is_significant, percentile_of_mean, simulate, NegativeSidePolicy, NoiseSpec, SideTriple,
};

fn spec(rel_sigma: f64, n: usize, seed: u64) -> NoiseSpec {
    NoiseSpec::new(5.0, rel_sigma, n, seed).unwrap()
}

#[test]
fn identical_specs_give_identical_results() {
    let s = spec(0.2, 20_000, 77);
    assert_eq!(simulate(&s).unwrap(), simulate(&s).unwrap());
    let table = |seed| confidence_table(&[0.05, 0.3], 5_000, seed).unwrap();
    assert_eq!(table(3), table(3));
}

#[test]
fn seeds_agree_within_five_standard_errors() {
    let a = simulate(&spec(0.1, 100_000, 1)).unwrap();
    let b = simulate(&spec(0.1, 100_000, 2)).unwrap();
    let se = (a.standard_error().powi(2) + b.standard_error().powi(2)).sqrt();
    assert!((a.mean_abs_chi - b.mean_abs_chi).abs() < 5.0 * se);
    assert_ne!(a.mean_abs_chi, b.mean_abs_chi);
}

#[test]
fn small_errors_scale_with_the_cube_of_sigma() {
    let rows = confidence_table(&[0.01, 0.05], 100_000, 11).unwrap();
    let ratio = rows[1].chi_threshold / rows[0].chi_threshold;
    let reference = 7.83e-6 / 6.27e-8;
    assert!((ratio / reference - 1.0).abs() < 0.15, "ratio {ratio}");
    // (0.05 / 0.01)^3
    assert!((ratio / 125.0 - 1.0).abs() < 0.05, "ratio {ratio}");
}

#[test]
fn thresholds_increase_with_error() {
    let rows = confidence_table(&REFERENCE_ERROR_LEVELS[..9], 20_000, 5).unwrap();
    assert!(rows.windows(2).all(|w| w[0].chi_threshold < w[1].chi_threshold));
}

#[test]
fn samples_beyond_the_bound_are_not_triangles() {
    let r = simulate(&spec(0.2, 100_000, 8)).unwrap();
    let bound = chi_max();
    let beyond: Vec<_> = r.samples().iter().filter(|s| s.abs_chi > bound).collect();
    assert!(!beyond.is_empty());
    assert!(beyond.iter().all(|s| !s.is_strict_triangle()));
    assert_eq!(r.exceed_chimax_rate, beyond.len() as f64 / 100_000.0);
    // sorted descending as (x, y, z): x - y - z >= 0 for every violation
    for s in r.samples().iter().filter(|s| !s.is_strict_triangle()) {
        let mut v = s.sides;
        v.sort_by(|p, q| q.total_cmp(p));
        assert!(v[0] - v[1] - v[2] >= 0.0 || v[2] <= 0.0);
    }
}

#[test]
fn mean_sits_near_the_75th_percentile() {
    for (sigma, seed) in [(0.05, 21), (0.2, 22)] {
        let r = simulate(&spec(sigma, 100_000, seed)).unwrap();
        let p = percentile_of_mean(&r);
        assert_eq!(p, r.fraction_below_mean);
        assert!((p - 0.75).abs() < 0.03, "sigma {sigma}: {p}");
    }
}

#[test]
fn statistic_does_not_depend_on_base_side() {
    let small = simulate(&NoiseSpec::new(1.0, 0.1, 50_000, 4).unwrap()).unwrap();
    let large = simulate(&NoiseSpec::new(1000.0, 0.1, 50_000, 4).unwrap()).unwrap();
    // same normal draws, scaled: identical up to rounding of the sides
    assert!((small.mean_abs_chi / large.mean_abs_chi - 1.0).abs() < 1e-6);
}

#[test]
fn redraw_policy_only_matters_for_large_errors() {
    let keep = simulate(&spec(0.1, 50_000, 6)).unwrap();
    let redraw = simulate(&spec(0.1, 50_000, 6).with_policy(NegativeSidePolicy::Redraw)).unwrap();
    assert_eq!(keep.mean_abs_chi, redraw.mean_abs_chi);
    assert_eq!(redraw.redraws, 0);

    let template = spec(0.0, 50_000, 6);
    let keep = confidence_table_for(&template, &[0.35]).unwrap();
    let redraw = confidence_table_for(&template.with_policy(NegativeSidePolicy::Redraw), &[0.35]).unwrap();
    assert!(redraw[0].chi_threshold < keep[0].chi_threshold);
}

#[test]
fn significance_examples() {
    let t = |a, b, c| SideTriple::new(a, b, c).unwrap();
    let s = is_significant(&t(9.0, 10.0, 11.0), 0.10, 100_000, 1).unwrap();
    assert!(s.significant, "{s:?}");
    assert!((s.threshold / 6.40e-5 - 1.0).abs() < 0.1);
    assert_eq!(s.confidence, 0.75);

    for err in [0.01, 0.1, 0.4] {
        assert!(!is_significant(&t(5.0, 5.0, 5.0), err, 10_000, 1).unwrap().significant);
    }
    assert!(is_significant(&t(10.0, 2.0, 8.0), 0.20, 100_000, 1).unwrap().significant);
}
