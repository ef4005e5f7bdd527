//! The six CLI verbs. Each one reads a config, produces deterministic CSV
//! (and for `ball` a binary table file) under the output directory, and maps
//! failures to the documented exit codes.

use std::path::{Path, PathBuf};

use solgeo::group::ModuleAction;
use solgeo::metric::{enumerate_ball, BallError, BallTable};
use solgeo::probes::{
    ac_probe, deep_pocket_probe, depth_trend, fit_lemma_d, good_gen_set_z16, quarter_bound_fit,
    random_admissible_word, triangle_lemma_check, witness::WitnessConfig, DetourOutcome,
};
use solgeo::valuations::{check_axioms, dyadic_triadic_pair, laurent_pair, sol_eigen_pair};
use solgeo::Depth;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::config::{Config, FamilyKind, GenSetKind};
use crate::csvio::{num, opt_u32, CsvDoc};

/// Command outcome → process exit code.
pub enum Outcome {
    /// Exit 0.
    Ok,
    /// Exit 3: budget exhausted, partial results were written.
    Partial(String),
    /// Exit 4: a probe reported a failure.
    ProbeFailure(String),
}

#[derive(Debug)]
pub enum CmdError {
    /// Exit 2.
    Usage(String),
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CmdError {}

fn usage<T>(msg: impl Into<String>) -> Result<T, CmdError> {
    Err(CmdError::Usage(msg.into()))
}

fn io_usage(e: std::io::Error, what: &str) -> CmdError {
    CmdError::Usage(format!("{what}: {e}"))
}

pub const BALL_FILE: &str = "ball.sgb";

fn ball_path(out: &Path) -> PathBuf {
    out.join(BALL_FILE)
}

fn ensure_out(out: &Path) -> Result<(), CmdError> {
    std::fs::create_dir_all(out).map_err(|e| io_usage(e, "cannot create output directory"))
}

/// Loads the persisted ball and cross-checks it against the config.
fn load_ball(cfg: &Config, out: &Path) -> Result<BallTable, CmdError> {
    let path = ball_path(out);
    if !path.exists() {
        return usage(format!(
            "no ball table at {}; run `solgeo ball --config …` first",
            path.display()
        ));
    }
    let table = BallTable::load(&path)
        .map_err(|e| CmdError::Usage(format!("cannot load {}: {e}", path.display())))?;
    let action = cfg.action().map_err(|e| CmdError::Usage(e.to_string()))?;
    if table.action() != &action {
        return usage("ball file was built for a different family or action");
    }
    let genset = cfg.genset(&action).map_err(|e| CmdError::Usage(e.to_string()))?;
    let mut want: Vec<Vec<u8>> = genset.letters().iter().map(|l| l.encode()).collect();
    let mut have: Vec<Vec<u8>> = table.genset().letters().iter().map(|l| l.encode()).collect();
    want.sort();
    have.sort();
    if want != have {
        return usage("ball file was built with a different generating set");
    }
    Ok(table)
}

fn primary_pair(cfg: &Config, action: &ModuleAction) -> Result<solgeo::ValuationPair, CmdError> {
    match (cfg.family, action) {
        (FamilyKind::Lamplighter, _) => Ok(laurent_pair()),
        (FamilyKind::Z16, _) => Ok(dyadic_triadic_pair()),
        (FamilyKind::Sol, ModuleAction::Lattice { m }) => {
            sol_eigen_pair(m).map_err(|e| CmdError::Usage(e.to_string()))
        }
        _ => unreachable!(),
    }
}

pub fn cmd_ball(cfg: &Config, out: &Path, mem_override: Option<f64>) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let action = cfg.action().map_err(|e| CmdError::Usage(e.to_string()))?;
    let genset = cfg.genset(&action).map_err(|e| CmdError::Usage(e.to_string()))?;
    let Some(radius) = cfg.radius else {
        return usage("[ball] radius is required");
    };
    let mem_gib = mem_override.unwrap_or(cfg.mem_gib);
    let budget = (mem_gib * (1u64 << 30) as f64) as u64;

    let (table, partial) = match enumerate_ball(&action, &genset, radius, budget) {
        Ok(t) => (t, None),
        Err(BallError::BudgetExceeded { achieved, partial }) => {
            let msg = format!("memory budget exhausted; completed radius {achieved} of {radius}");
            (*partial, Some(msg))
        }
    };
    if let Some(r) = table.sphere_monotone_violation() {
        eprintln!("warning: sphere sizes shrink at radius {r} (expected only for finite quotients)");
    }
    table
        .save(&ball_path(out))
        .map_err(|e| CmdError::Usage(format!("cannot write ball file: {e}")))?;

    let mut doc = CsvDoc::new(cfg, Some(table.radius()));
    if let Some(msg) = &partial {
        doc.comment(&format!("partial = {msg}"));
    }
    doc.row("r,sphere_size");
    for (r, size) in table.sphere_sizes().iter().enumerate() {
        doc.row(&format!("{r},{size}"));
    }
    doc.write(&out.join("spheres.csv"))
        .map_err(|e| io_usage(e, "cannot write spheres.csv"))?;
    Ok(match partial {
        Some(msg) => Outcome::Partial(msg),
        None => Outcome::Ok,
    })
}

pub fn cmd_ac_probe(cfg: &Config, out: &Path) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let table = load_ball(cfg, out)?;
    let action = table.action().clone();
    let genset = table.genset().clone();
    let vp = primary_pair(cfg, &action)?;
    let j = match cfg.j {
        Some(j) => j,
        None => derived_j(cfg, &table, &vp)?,
    };
    let wcfg = WitnessConfig::standard(&action, &genset, j);
    let rows = ac_probe(&action, &wcfg, &table, cfg.n_min..=cfg.n_max);

    let mut doc = CsvDoc::new(cfg, Some(table.radius()));
    doc.comment(&format!("j = {j}"));
    doc.row("n,h_plus_len,h_minus_len,s2j_len,detour");
    for row in &rows {
        let detour = match row.detour {
            DetourOutcome::Distance(d) => d.to_string(),
            DetourOutcome::Unreachable => "unreachable".to_string(),
            DetourOutcome::Absent => "absent".to_string(),
        };
        doc.row(&format!(
            "{},{},{},{},{detour}",
            row.n,
            opt_u32(row.h_plus_len),
            opt_u32(row.h_minus_len),
            opt_u32(row.s2j_len),
        ));
    }
    doc.write(&out.join("ac_probe.csv"))
        .map_err(|e| io_usage(e, "cannot write ac_probe.csv"))?;
    Ok(Outcome::Ok)
}

/// The derived witness offset: smallest `J` exceeding
/// `(4/z)(F + |a|_S z/2 − I₁(a) + 3C)` with `F` the quarter-fit constant.
fn derived_j(cfg: &Config, table: &BallTable, vp: &solgeo::ValuationPair) -> Result<u32, CmdError> {
    let action = table.action();
    let fit = quarter_bound_fit(vp, table);
    let a = solgeo::probes::default_seed(action);
    let a_len = table
        .word_length(&action.embed(a.clone()))
        .ok_or_else(|| CmdError::Usage("seed element outside the ball; set [probe] j".into()))?;
    let i1a = vp.eval1(&a).expect_finite();
    let j = WitnessConfig::suggested_j(fit.z, fit.empirical_f, a_len, i1a, vp.c);
    let _ = cfg;
    Ok(j)
}

pub fn cmd_depth_probe(cfg: &Config, out: &Path) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let table = load_ball(cfg, out)?;
    let action = table.action().clone();

    let rows = if cfg.family == FamilyKind::Z16 && cfg.genset_kind == GenSetKind::GoodGenSet {
        let (ggs, _) = good_gen_set_z16();
        deep_pocket_probe(&ggs, &table, cfg.i_min..=cfg.i_max)
            .map_err(|e| CmdError::Usage(e.to_string()))?
    } else {
        let a = solgeo::probes::default_seed(&action);
        depth_trend(&action, &table, &a, cfg.i_min..=cfg.i_max)
    };

    let mut doc = CsvDoc::new(cfg, Some(table.radius()));
    doc.row("i,k_len,depth,diag");
    for row in &rows {
        let depth = match row.depth {
            None => "absent".to_string(),
            Some(Depth::Exact(d)) => d.to_string(),
            Some(Depth::LowerBound(d)) => format!(">={d}"),
        };
        let diag = row.diag.map_or_else(|| "-".to_string(), num);
        doc.row(&format!("{},{},{depth},{diag}", row.i, opt_u32(row.k_len)));
    }
    doc.write(&out.join("depth_probe.csv"))
        .map_err(|e| io_usage(e, "cannot write depth_probe.csv"))?;
    Ok(Outcome::Ok)
}

pub fn cmd_valuation_check(cfg: &Config, out: &Path) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let action = cfg.action().map_err(|e| CmdError::Usage(e.to_string()))?;
    let vp = primary_pair(cfg, &action)?;
    let tol = cfg.tol.unwrap_or(if vp.exact { 0.0 } else { 1e-9 });

    let mut doc = CsvDoc::new(cfg, None);
    doc.comment(&format!("tol = {tol:e}"));
    doc.row("axiom,samples,max_violation,pass");
    let mut all_pass = true;
    if cfg.samples > 0 {
        let report = check_axioms(&vp, &action, cfg.samples, tol, cfg.seed);
        all_pass = report.pass();
        for row in &report.rows {
            doc.row(&format!(
                "{},{},{},{}",
                row.axiom,
                row.samples,
                if row.max_violation == 0.0 {
                    "0".to_string()
                } else {
                    format!("{:e}", row.max_violation)
                },
                if row.pass { "pass" } else { "fail" }
            ));
        }
    }
    doc.write(&out.join("valuation_check.csv"))
        .map_err(|e| io_usage(e, "cannot write valuation_check.csv"))?;
    if all_pass {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::ProbeFailure("a valuation axiom failed".into()))
    }
}

pub fn cmd_lemma_check(cfg: &Config, out: &Path) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let action = cfg.action().map_err(|e| CmdError::Usage(e.to_string()))?;
    let genset = cfg.genset(&action).map_err(|e| CmdError::Usage(e.to_string()))?;
    let vp = primary_pair(cfg, &action)?;

    let mut doc = CsvDoc::new(cfg, None);
    doc.row("phase,trial,word_len,i1,p,pass");
    let mut failures = 0usize;
    if cfg.samples > 0 {
        let fit = fit_lemma_d(&action, &vp, &genset, cfg.samples, cfg.max_word_len, cfg.seed);
        let mut header = CsvDoc::new(cfg, None);
        header.comment(&format!("fitted-d = {}", num(fit.d)));
        header.row("phase,trial,word_len,i1,p,pass");
        doc = header;
        let mut rng = StdRng::seed_from_u64(cfg.seed.wrapping_add(1));
        for trial in 0..cfg.samples {
            let target = rng.gen_range(4..=cfg.max_word_len.saturating_sub(8).max(4));
            let word = random_admissible_word(&genset, target, &mut rng);
            let outcome = triangle_lemma_check(&action, &vp, &genset, &word, fit.d);
            if !outcome.pass {
                failures += 1;
            }
            doc.row(&format!(
                "fresh,{trial},{},{},{},{}",
                word.len(),
                outcome.i1.finite().map_or_else(|| "bottom".into(), num),
                outcome.p.map_or_else(|| "-".to_string(), |p| p.to_string()),
                outcome.pass
            ));
        }
    }
    doc.write(&out.join("lemma_check.csv"))
        .map_err(|e| io_usage(e, "cannot write lemma_check.csv"))?;
    if failures > 0 {
        Ok(Outcome::ProbeFailure(format!(
            "{failures} fresh words failed at the fitted constant"
        )))
    } else {
        Ok(Outcome::Ok)
    }
}

pub fn cmd_quarter_fit(cfg: &Config, out: &Path) -> Result<Outcome, CmdError> {
    ensure_out(out)?;
    let table = load_ball(cfg, out)?;
    let vp = primary_pair(cfg, table.action())?;
    let fit = quarter_bound_fit(&vp, &table);

    let mut doc = CsvDoc::new(cfg, Some(table.radius()));
    doc.comment(&format!("z = {}", num(fit.z)));
    doc.comment(&format!("empirical-f = {}", num(fit.empirical_f)));
    doc.row("r,slab_count,max_excess");
    for row in &fit.rows {
        doc.row(&format!(
            "{},{},{}",
            row.r,
            row.slab_count,
            row.max_excess.map_or_else(|| "-".to_string(), num)
        ));
    }
    doc.write(&out.join("quarter_fit.csv"))
        .map_err(|e| io_usage(e, "cannot write quarter_fit.csv"))?;
    Ok(Outcome::Ok)
}
