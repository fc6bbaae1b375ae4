use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;
use tannaka::cycles::{convolve, degree, schur_cycle};
use tannaka::lambda::eval_construction;
use tannaka::liere::{
    classify_wmf, decompose, freudenthal_character, is_wmf, quasi_minuscule_dim_search, DynkinType, RootSystem,
    TableRow, Weight, WmfEntry,
};
use tannaka::num::format_rational;
use tannaka::schottky::{self, PpavInput, ThetaGroupVerdict};
use tannaka::{Basis, CleanCycleModel, Partition, SymExpr};

use crate::input::{self, ConstructionInput, InverseGaloisInput};
use crate::report::{int, Report, Table};
use crate::{PpavArgs, UsageError};

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Parse errors from the library become usage errors.
fn parsed<T>(r: tannaka::Result<T>) -> Result<T> {
    r.map_err(|e| usage(e.to_string()))
}

fn root_system(ty: &str) -> Result<RootSystem> {
    Ok(RootSystem::new(parsed(ty.parse::<DynkinType>())?))
}

fn highest_weight(rs: &RootSystem, w: &str) -> Result<Weight> {
    let w: Weight = parsed(w.parse())?;
    if w.rank() != rs.rank() {
        return Err(usage(format!("{} needs {} coordinates, got {}", rs.ty(), rs.rank(), w.rank())));
    }
    if !w.is_dominant() {
        return Err(usage(format!("weight {w} is not dominant")));
    }
    Ok(w)
}

fn ppav(args: &PpavArgs) -> Result<PpavInput> {
    if let Some(path) = &args.input {
        return input::load_ppav(path);
    }
    let g = args.g.ok_or_else(|| usage("either --g or --input is required"))?;
    let mut p = PpavInput::new(g, args.k)
        .with_sum_zero(!args.sum_nonzero)
        .with_torsion_independent(!args.torsion_dependent)
        .with_stabilizer_trivial(!args.nontrivial_stabilizer)
        .with_gauss_finite(args.gauss_finite);
    p.symmetric = !args.asymmetric;
    Ok(p)
}

pub fn symfun(basis: &str, partition: &str) -> Result<Report> {
    let basis: Basis = parsed(basis.parse())?;
    let alpha: Partition = parsed(partition.parse())?;
    let expr = SymExpr::monomial(basis, alpha.clone(), BigRational::one()).to_powersum();
    let terms: Vec<_> = expr.terms().map(|(b, c)| (b.clone(), format_rational(c))).collect();
    let symbol = match basis {
        Basis::PowerSum => 'p',
        Basis::Elementary => 'e',
        Basis::Schur => 's',
    };
    let mut text = format!("{symbol}{alpha} =");
    for (i, (b, c)) in terms.iter().enumerate() {
        let (sep, c) = match (i, c.strip_prefix('-')) {
            (0, Some(abs)) => (" -", abs),
            (0, None) => ("", c.as_str()),
            (_, Some(abs)) => (" -", abs),
            (_, None) => (" +", c.as_str()),
        };
        let _ = write!(text, "{sep} {c}·p{b}");
    }
    let table = Table {
        header: vec!["partition", "coefficient"],
        rows: terms.iter().map(|(b, c)| vec![b.to_string(), c.clone()]).collect(),
    };
    let value = json!({
        "basis": basis,
        "partition": alpha,
        "powersum": terms.iter().map(|(b, c)| json!({ "partition": b, "coefficient": c })).collect::<Vec<_>>(),
    });
    Ok(Report::new(value, text)?.with_table(table))
}

pub fn lambda_eval(path: &Path) -> Result<Report> {
    let ConstructionInput { construction, elements } = input::load(path)?;
    let result = eval_construction(&construction, &elements)?;
    let value = json!({
        "result": result,
        "augmentation": int(&result.augmentation()),
        "effective": result.is_effective(),
        "reduced": result.is_reduced(),
    });
    let mut text = String::new();
    for (e, c) in result.terms() {
        let _ = writeln!(text, "{c} [{}]", e.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    }
    let _ = write!(text, "augmentation {}", result.augmentation());
    Report::new(value, text)
}

fn cycle_report(c: &CleanCycleModel) -> Result<Report> {
    let deg = degree(c);
    let totals = c.total_cm();
    let text = format!(
        "degree {deg}; total Chern–Mather [{}] valid through {}",
        totals.coords().iter().map(format_rational).collect::<Vec<_>>().join(", "),
        c.valid_through()
    );
    let value = json!({ "cycle": c, "degree": int(&deg), "total_cm": totals, "valid_through": c.valid_through() });
    Report::new(value, text)
}

pub fn cycle_convolve(a: &Path, b: &Path, d_trunc: usize) -> Result<Report> {
    let (x, y) = (input::load_cycle(a)?, input::load_cycle(b)?);
    cycle_report(&convolve(&x, &y, d_trunc)?)
}

pub fn cycle_schur(partition: &str, path: &Path, d_trunc: usize) -> Result<Report> {
    let alpha: Partition = parsed(partition.parse())?;
    let c = input::load_cycle(path)?;
    cycle_report(&schur_cycle(&alpha, &c, d_trunc)?)
}

pub fn rep_dim(ty: &str, weight: &str) -> Result<Report> {
    let rs = root_system(ty)?;
    let w = highest_weight(&rs, weight)?;
    let dim = rs.weyl_dim(&w)?;
    let value = json!({ "type": rs.ty(), "highest_weight": w, "dimension": int(&dim) });
    Report::new(value, dim.to_string())
}

fn multiplicity_rows(weights: impl IntoIterator<Item = (Weight, u64)>) -> (Vec<serde_json::Value>, Vec<Vec<String>>) {
    weights
        .into_iter()
        .map(|(w, m)| (json!({ "weight": w, "multiplicity": m }), vec![w.to_string(), m.to_string()]))
        .unzip()
}

pub fn rep_char(ty: &str, weight: &str) -> Result<Report> {
    let rs = root_system(ty)?;
    let w = highest_weight(&rs, weight)?;
    let ch = freudenthal_character(&rs, &w)?;
    let (dominant, rows) = multiplicity_rows(ch.dominant_part());
    let text = rows.iter().map(|r| format!("{} {}", r[0], r[1])).collect::<Vec<_>>().join("\n");
    let value = json!({
        "type": rs.ty(),
        "highest_weight": w,
        "dimension": ch.dim(),
        "dominant": dominant,
        "character": ch,
    });
    Ok(Report::new(value, text)?.with_table(Table { header: vec!["weight", "multiplicity"], rows }))
}

pub fn rep_decompose(path: &Path) -> Result<Report> {
    let ch = input::load_character(path)?;
    let rs = RootSystem::new(ch.ty());
    let parts = decompose(&rs, &ch)?;
    let (constituents, rows) = multiplicity_rows(parts);
    let text = rows.iter().map(|r| format!("{} × V{}", r[1], r[0])).collect::<Vec<_>>().join("\n");
    let value = json!({ "type": ch.ty(), "dimension": ch.dim(), "constituents": constituents });
    Ok(Report::new(value, text)?.with_table(Table { header: vec!["highest_weight", "multiplicity"], rows }))
}

pub fn rep_classify(ty: &str, weight: &str) -> Result<Report> {
    let rs = root_system(ty)?;
    let w = highest_weight(&rs, weight)?;
    let entry = WmfEntry::describe(&rs, &w)?;
    let wmf = is_wmf(&rs, &w)?;
    let row = TableRow::of(rs.ty(), &w);
    let text = format!(
        "{} {}: dim {}, minuscule {}, quasi-minuscule {}, weight multiplicity free {wmf}, form {:?}, group {}",
        entry.ty, entry.label, entry.dim, entry.minuscule, entry.quasi_minuscule, entry.fs_type, entry.group
    );
    let mut value = serde_json::to_value(&entry)?;
    value["weight_multiplicity_free"] = json!(wmf);
    value["table_row"] = serde_json::to_value(row)?;
    Report::new(value, text)
}

pub fn wmf_tables(max_rank: usize, max_dim: u64) -> Result<Report> {
    let entries = classify_wmf(max_rank, max_dim)?;
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.ty.to_string(),
                e.label.clone(),
                e.dim.to_string(),
                e.minuscule.to_string(),
                e.quasi_minuscule.to_string(),
                serde_json::to_value(e.fs_type).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                e.group.clone(),
            ]
        })
        .collect();
    let text = rows.iter().map(|r| r.join("\t")).collect::<Vec<_>>().join("\n");
    let table =
        Table { header: vec!["type", "highest_weight", "dim", "minuscule", "quasi_minuscule", "form", "group"], rows };
    let value = json!({ "max_rank": max_rank, "max_dim": max_dim, "entries": entries });
    Ok(Report::new(value, text)?.with_table(table))
}

pub fn theta_group(args: &PpavArgs) -> Result<Report> {
    let p = ppav(args)?;
    let verdict = schottky::theta_group(&p)?;
    let text = match &verdict {
        ThetaGroupVerdict::Determined { label, dimension, reason, .. } => {
            format!("{label} (dimension {dimension}): {reason}")
        }
        ThetaGroupVerdict::Undetermined { dimension, reason, candidates } => {
            format!("undetermined (dimension {dimension}): {reason}; candidates: {}", candidates.join(", "))
        }
    };
    Report::new(json!({ "input": p, "verdict": verdict }), text)
}

pub fn cc_odp(args: &PpavArgs) -> Result<Report> {
    let p = ppav(args)?;
    let c = schottky::cc_odp(&p)?;
    let mut r = cycle_report(&c)?;
    r.json["input"] = serde_json::to_value(&p)?;
    Ok(r)
}

pub fn genus5(k: u64, path: Option<&Path>) -> Result<Report> {
    let p = match path {
        Some(path) => input::load_ppav(path)?,
        None => PpavInput::new(5, k),
    };
    let r = schottky::genus5_obstruction(&p)?;
    let text = format!(
        "c1 = {}·μ1 = {}·[Θ]⁴; integral: {}; {}",
        format_rational(r.c1.coord(1)),
        format_rational(&r.c1_over_theta4),
        r.integral,
        r.verdict
    );
    let mut report = Report::new(&r, text)?.negative_if(!r.integral);
    report.json["c1_coefficient"] = json!(format_rational(r.c1.coord(1)));
    Ok(report)
}

pub fn fake_jacobian(path: Option<&Path>, g: Option<usize>, k: Option<u64>, hyper: bool) -> Result<Report> {
    let target = match path {
        Some(path) => input::load_cycle(path)?,
        None => {
            let g = g.ok_or_else(|| usage("either --g or --input is required"))?;
            schottky::cc_odp(&PpavInput::new(g, k.unwrap_or(0)))?
        }
    };
    if let Some(g) = g.filter(|&g| g != target.g()) {
        return Err(usage(format!("--g {g} but the target cycle has g = {}", target.g())));
    }
    let s = schottky::fake_jacobian_solve(target.g(), &target, hyper)?;
    let c1 = s.c1.as_ref().map(|c| format_rational(c.coord(1))).unwrap_or_else(|| "unconstrained".into());
    let text = format!(
        "c0 = {}; c1 = {c1}·μ1; integral: {}; effective: {}",
        s.c0,
        s.c1_integral.map_or("n/a".into(), |b| b.to_string()),
        s.c1_effective.map_or("n/a".into(), |b| b.to_string())
    );
    let no = s.c1_integral == Some(false) || s.c1_effective == Some(false);
    Ok(Report::new(&s, text)?.negative_if(no))
}

pub fn summand_bound(g: Option<usize>, m: Option<u64>, d_z: Option<usize>, support: &[usize]) -> Result<Report> {
    let fmt_bound = |b: &schottky::SummandBound| {
        format!(
            "δ = {}, d_Z = {}: {}",
            b.delta.as_ref().map_or("none".into(), format_rational),
            b.d_z,
            if b.no_positive_dimensional_decomposition {
                "no decomposition into positive-dimensional summands"
            } else {
                "bound inconclusive"
            }
        )
    };
    match (g, d_z) {
        (Some(g), _) => {
            let bound = schottky::theta_not_a_sum(g)?;
            let mut text = fmt_bound(&bound);
            let adjoint = match m {
                Some(m) => {
                    let a = schottky::adjoint_obstruction(g, m as usize)?;
                    let _ = write!(
                        text,
                        "\nSp_{}: Sym² irreducible {}, root multiple {}",
                        2 * m,
                        a.sym2_irreducible,
                        a.root_multiple
                    );
                    Some(a)
                }
                None => None,
            };
            Report::new(json!({ "g": g, "bound": bound, "adjoint": adjoint }), text)
        }
        (None, Some(d_z)) => {
            let comps: Vec<(usize, bool)> = support.iter().map(|&d| (d, true)).collect();
            let bound = schottky::summand_bound(&comps, d_z);
            let text = fmt_bound(&bound);
            Report::new(json!({ "bound": bound }), text)
        }
        (None, None) => Err(usage("either --g or --d-z with --support is required")),
    }
}

pub fn simplicity(args: &PpavArgs, cycle: Option<&Path>, divisor: &str, m_bound: u32) -> Result<Report> {
    let c = match cycle {
        Some(path) => input::load_cycle(path)?,
        None => schottky::cc_odp(&ppav(args)?)?,
    };
    let r = schottky::simplicity_criteria(&c, divisor, m_bound)?;
    let text = format!(
        "large divisor {}; only point companions {}; convolution {:?}; essentially multiplicity free {}; \
         simple modulo center {}",
        r.large_divisor,
        r.only_point_companions,
        r.convolution,
        r.essentially_multiplicity_free,
        r.simple_modulo_center
    );
    Report::new(&r, text)
}

pub fn fourfold_table(expanded: bool) -> Result<Report> {
    let rows = if expanded { schottky::fourfold_table_expanded()? } else { schottky::fourfold_table()? };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.locus.clone(),
                r.gauss_degree.clone(),
                r.cc_degree.clone(),
                r.representation.clone(),
                r.group.clone(),
                r.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let text = cells.iter().map(|r| r[..5].join("\t")).collect::<Vec<_>>().join("\n");
    let table =
        Table { header: vec!["locus", "gauss_degree", "cc_degree", "representation", "group", "note"], rows: cells };
    Ok(Report::new(json!({ "rows": rows }), text)?.with_table(table))
}

pub fn qm_search(dim: u64, max_rank: usize) -> Result<Report> {
    let found = quasi_minuscule_dim_search(dim, max_rank)?;
    let rows: Vec<Vec<String>> = found.iter().map(|(t, w)| vec![t.to_string(), w.to_string()]).collect();
    let text = if rows.is_empty() {
        format!("no quasi-minuscule irreducible of dimension {dim} up to rank {max_rank}")
    } else {
        rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n")
    };
    let value = json!({
        "dim": dim,
        "max_rank": max_rank,
        "found": found.iter().map(|(t, w)| json!({ "type": t, "highest_weight": w })).collect::<Vec<_>>(),
    });
    Ok(Report::new(value, text)?.with_table(Table { header: vec!["type", "highest_weight"], rows }))
}

pub fn verify_ig(path: &Path) -> Result<Report> {
    let InverseGaloisInput { target, construction, e, candidates } = input::load(path)?;
    let holds = schottky::verify_inverse_galois(&target, &construction, e, &candidates)
        .with_context(|| "checking the identity")?;
    let lhs = tannaka::lambda::gr_adams(e, &target);
    let rhs = eval_construction(&construction, &candidates)?;
    let text =
        if holds { format!("[{e}]₊ target = S(candidates)") } else { format!("[{e}]₊ target ≠ S(candidates)") };
    Ok(Report::new(json!({ "holds": holds, "e": e, "lhs": lhs, "rhs": rhs }), text)?.negative_if(!holds))
}
