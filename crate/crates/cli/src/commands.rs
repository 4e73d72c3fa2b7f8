//! One function per subcommand, each producing the rendered output.

use chiral_core::montecarlo::{self, confidence_table_for, REFERENCE_ERROR_LEVELS};
use chiral_core::{
    chi_max_analytic, chi_max_search, classify as classify_triple, grid, NoiseSpec, SideTriple, Significance,
};
use serde_json::json;

use crate::error::{CliError, Result};
use crate::output::{render_json, sig12, Cell, Format, Table};
use crate::{ChiArgs, ChiMaxArgs, ClassifyArgs, PhaseGridArgs, SimulateArgs, Table1Args};

/// Rendered table plus an optional human-readable summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    pub summary: Option<String>,
}

impl Report {
    fn table(table: &Table, format: Format) -> Self {
        Self {
            body: table.render(format),
            summary: None,
        }
    }
}

pub fn chi(args: &ChiArgs, format: Format) -> Result<Report> {
    let t = SideTriple::new(args.a, args.b, args.c)?;
    let r = classify_triple(&t, args.rel_tol)?;
    let mut table = Table::new(vec!["a", "b", "c", "chi", "handedness", "symmetry_class", "triangle_status"]);
    table.push(vec![
        args.a.into(),
        args.b.into(),
        args.c.into(),
        r.chi.into(),
        r.handedness.as_str().into(),
        r.symmetry_class.as_str().into(),
        r.triangle_status.as_str().into(),
    ]);
    Ok(Report::table(&table, format))
}

pub fn phase_grid(args: &PhaseGridArgs, format: Format) -> Result<Report> {
    let g = grid(args.resolution, args.domain.into())?;
    let mut table = Table::new(vec!["a_bar", "b_bar", "c_bar", "chi", "segment", "in_triangle"]);
    table.rows.reserve(g.cells.len());
    for cell in &g.cells {
        let segment = match cell.segment.id() {
            Some(id) => Cell::Int(id.into()),
            None => Cell::from("nodal"),
        };
        table.push(vec![
            cell.a_bar.into(),
            cell.b_bar.into(),
            cell.c_bar.into(),
            cell.chi.into(),
            segment,
            cell.in_triangle.into(),
        ]);
    }
    Ok(Report::table(&table, format))
}

pub fn simulate(args: &SimulateArgs, seed: u64, format: Format) -> Result<Report> {
    let spec = NoiseSpec::new(args.base, args.rel_sigma, args.n, seed)?.with_policy(args.negative_sides.into());
    let result = montecarlo::simulate(&spec)?;

    let mut histogram = Table::new(vec!["bin_lower", "bin_upper", "count"]);
    for bin in &result.histogram {
        histogram.push(vec![bin.lower.into(), bin.upper.into(), bin.count.into()]);
    }

    let mut summary = Table::new(vec![
        "base_side",
        "rel_sigma",
        "n_samples",
        "seed",
        "mean_abs_chi",
        "fraction_below_mean",
        "violation_rate",
        "exceed_chimax_rate",
        "redraws",
    ]);
    summary.push(vec![
        spec.base_side.into(),
        spec.rel_sigma.into(),
        spec.n_samples.into(),
        seed.into(),
        result.mean_abs_chi.into(),
        result.fraction_below_mean.into(),
        result.violation_rate.into(),
        result.exceed_chimax_rate.into(),
        result.redraws.into(),
    ]);

    let body = match format {
        Format::Csv => histogram.to_csv(),
        Format::Json => render_json(&json!({
            "summary": summary.to_json_value()[0],
            "histogram": histogram.to_json_value(),
        })),
    };
    let summary_text = format!(
        "mean_abs_chi: {}\nfraction_below_mean: {}\nviolation_rate: {}\nexceed_chimax_rate: {}\n",
        sig12(result.mean_abs_chi),
        sig12(result.fraction_below_mean),
        sig12(result.violation_rate),
        sig12(result.exceed_chimax_rate),
    );
    Ok(Report {
        body,
        summary: Some(summary_text),
    })
}

pub fn table1(args: &Table1Args, seed: u64, format: Format) -> Result<Report> {
    let errors = args.errors.clone().unwrap_or_else(|| REFERENCE_ERROR_LEVELS.to_vec());
    if errors.is_empty() {
        return Err(CliError::Usage("--errors needs at least one value".into()));
    }
    let template = NoiseSpec::new(montecarlo::DEFAULT_BASE_SIDE, 0.0, args.n, seed)?
        .with_policy(args.negative_sides.into());
    let rows = confidence_table_for(&template, &errors)?;
    let mut table = Table::new(vec!["rel_error", "chi_threshold"]);
    for row in rows {
        table.push(vec![row.rel_error.into(), row.chi_threshold.into()]);
    }
    Ok(Report::table(&table, format))
}

pub fn classify(args: &ClassifyArgs, seed: u64, format: Format) -> Result<Report> {
    let t = SideTriple::new(args.a, args.b, args.c)?;
    let spec = NoiseSpec::new(montecarlo::DEFAULT_BASE_SIDE, args.rel_error, args.n, seed)?;
    let threshold = montecarlo::simulate(&spec)?.mean_abs_chi;
    let verdict = Significance::against(&t, threshold);
    let mut table = Table::new(vec!["a", "b", "c", "rel_error", "chi", "threshold", "significant", "confidence"]);
    table.push(vec![
        args.a.into(),
        args.b.into(),
        args.c.into(),
        args.rel_error.into(),
        verdict.chi.into(),
        verdict.threshold.into(),
        verdict.significant.into(),
        verdict.confidence.into(),
    ]);
    Ok(Report::table(&table, format))
}

pub fn chi_max(args: &ChiMaxArgs, format: Format) -> Result<Report> {
    let analytic = chi_max_analytic();
    let search = chi_max_search(args.resolution)?;
    let [a, b, c] = search.argmax.to_array();
    let mut table = Table::new(vec![
        "chi_max_analytic",
        "chi_max_search",
        "difference",
        "argmax_a_bar",
        "argmax_b_bar",
        "argmax_c_bar",
        "boundary",
        "difference_to_1_over_83",
    ]);
    table.push(vec![
        analytic.chi_max.into(),
        search.chi_max.into(),
        (search.chi_max - analytic.chi_max).into(),
        a.into(),
        b.into(),
        c.into(),
        search.boundary.into(),
        (analytic.chi_max - 1.0 / 83.0).into(),
    ]);
    Ok(Report::table(&table, format))
}
