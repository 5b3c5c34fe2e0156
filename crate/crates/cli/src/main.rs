use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plurican::curve::HyperellipticCurve;
use plurican::expr::{eval_grassmann, odd_generators, parse};
use plurican::graded::check_superconformal;
use plurican::io::{
    curve_from_json, divisor_from_json, model_from_json, model_to_json, supercurve_from_json, supercurve_to_json,
    theta_subset_from_json,
};
use plurican::pluricanonical::{
    build_model, generic_even_theta, pluri_canonical_rank, pool_size, pushforward_over_superpoint, sample_points,
    seeded_rng, some_odd_theta, threshold_table, very_ample_check, verify_embedding, SuperPointFamily,
};
use plurican::riemann_roch::{theta_characteristics, DivisorClass};
use plurican::supercurve::{
    dual_supercurve, is_autodual, make_split_supercurve, moduli_dimension, theta_split_supercurve, SplitSupercurve,
};

#[derive(Parser)]
#[command(name = "plurican", version, about = "Pluricanonical embeddings of split supercurves, computed exactly")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the JSON result (the model, for embed) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Clone, Default)]
struct Source {
    /// Genus of the model y^2 = x(x-1)...(x-2g).
    #[arg(long)]
    genus: Option<usize>,
    /// Curve or supercurve JSON file.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// even, odd, {"subset": [...]}, a divisor list, or a file holding one of these.
    #[arg(long)]
    theta: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank of the pushforward of Ber^nu.
    Rank {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        nu: u32,
    },
    /// Pass/fail grid of relative very ampleness over all theta characteristics.
    Thresholds {
        /// Largest genus.
        #[arg(long, default_value_t = 6)]
        genus: usize,
        /// Largest nu.
        #[arg(long, default_value_t = 6)]
        nu: u32,
    },
    /// All theta characteristics of a curve with their parities.
    ThetaCensus {
        #[command(flatten)]
        src: Source,
    },
    /// Build the pluricanonical model.
    Embed {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        nu: u32,
    },
    /// Exact separation checks on a model file.
    Verify {
        model: PathBuf,
        /// Number of point pairs.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The dual supercurve C_{K-L} and the auto-duality test.
    Dual {
        #[command(flatten)]
        src: Source,
    },
    /// Dimension of the moduli of susy curves at a generic point.
    ModuliDim {
        #[arg(long)]
        genus: usize,
    },
    /// Sections of Ber^nu over a first-order odd deformation.
    SuperpointRank {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        nu: u32,
        /// Number of random deformation cochains.
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run even when h1(L^nu) or h1(L^(nu+1)) is nonzero.
        #[arg(long)]
        force: bool,
    },
    /// Test D z' = theta' D theta' for a coordinate change.
    CheckSuperconformal {
        /// z' in z, θ (or theta) and odd constants.
        #[arg(allow_hyphen_values = true)]
        z: String,
        /// θ' in the same variables.
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn read_json(path: &Path) -> Res<Value> {
    let s = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&s).map_err(|e| format!("{}: {e}", path.display()))
}

impl Source {
    fn file(&self) -> Res<Option<Value>> {
        self.curve.as_deref().map(read_json).transpose()
    }

    fn curve(&self) -> Res<HyperellipticCurve> {
        match self.file()? {
            Some(v) => curve_from_json(v.get("curve").unwrap_or(&v)).map_err(err),
            None => HyperellipticCurve::model(self.genus.unwrap_or(2)).map_err(err),
        }
    }

    fn supercurve(&self) -> Res<SplitSupercurve> {
        if self.theta.is_none() {
            if let Some(v) = self.file()? {
                if v.get("L").is_some() {
                    return supercurve_from_json(&v).map_err(err);
                }
            }
        }
        let c = self.curve()?;
        let spec = self.theta.clone().unwrap_or_else(|| r#"{"subset": [0]}"#.to_string());
        let subset = match spec.trim() {
            "even" => generic_even_theta(&c).map_err(err)?,
            "odd" => some_odd_theta(&c).map_err(err)?,
            s => {
                let v: Value = match serde_json::from_str(s) {
                    Ok(v) => v,
                    Err(_) => read_json(Path::new(s))?,
                };
                if v.is_array() {
                    let d = divisor_from_json(&c, &v).map_err(err)?;
                    return make_split_supercurve(&c, &DivisorClass::new(d)).map_err(err);
                }
                theta_subset_from_json(&v).map_err(err)?
            }
        };
        theta_split_supercurve(&c, &subset).map_err(err)
    }
}

fn cmd_rank(src: &Source, nu: u32) -> Res<Outcome> {
    let x = src.supercurve()?;
    let r = pluri_canonical_rank(&x, nu).map_err(err)?;
    let json = json!({
        "genus": r.genus,
        "nu": nu,
        "ranks": r.ranks,
        "summands": r.summands,
        "h1": [r.h1_e, r.h1_el],
        "hypotheses": r.hypotheses,
        "printed_formula": r.printed_formula_ordered(),
        "printed_formula_flagged": r.printed_formula_flagged(),
    });
    Ok(Outcome { text: r.to_string(), json, ok: true })
}

fn cell_text(c: &plurican::pluricanonical::ThresholdCell) -> String {
    match (c.passes, c.even_theta_passes) {
        (true, _) => "PASS".into(),
        (false, even) => {
            let w = c.witness.as_ref().map(|w| w.to_string()).unwrap_or_else(|| "hypotheses".into());
            let hyp = if c.hypotheses { "" } else { "; h1 != 0" };
            if even {
                format!("FAIL(all-thetas: {w}{hyp})/PASS(even-theta)")
            } else {
                format!("FAIL({w}{hyp})")
            }
        }
    }
}

fn cmd_thresholds(g_max: usize, nu_max: u32) -> Res<Outcome> {
    let cells = threshold_table(g_max, nu_max).map_err(err)?;
    let mut text = String::new();
    for g in 2..=g_max {
        for c in cells.iter().filter(|c| c.genus == g) {
            text.push_str(&format!("g={g} nu={}: {}\n", c.nu, cell_text(c)));
        }
    }
    let json = json!({ "cells": cells });
    Ok(Outcome { text: text.trim_end().to_string(), json, ok: true })
}

fn cmd_census(src: &Source) -> Res<Outcome> {
    let c = src.curve()?;
    let thetas = theta_characteristics(&c).map_err(err)?;
    let odd = thetas.iter().filter(|t| t.h0 % 2 == 1).count();
    let mut text = format!("{} classes: {} odd, {} even\n", thetas.len(), odd, thetas.len() - odd);
    for t in &thetas {
        text.push_str(&format!("  {:?}  {}  h0={}  {:?}\n", t.subset, t.class.rep(), t.h0, t.parity));
    }
    let json = json!({ "classes": thetas.len(), "odd": odd, "even": thetas.len() - odd, "thetas": thetas });
    Ok(Outcome { text: text.trim_end().to_string(), json, ok: true })
}

fn cmd_embed(src: &Source, nu: u32) -> Res<Outcome> {
    let x = src.supercurve()?;
    let va = very_ample_check(&x, nu).map_err(err)?;
    if !va.passes() {
        let w = va.witness().map(|w| w.to_string()).unwrap_or_default();
        return Ok(Outcome {
            text: format!("not relatively very ample at nu={nu}: witness {w}"),
            json: json!({ "very_ample": va }),
            ok: false,
        });
    }
    let m = build_model(&x, nu).map_err(err)?;
    let list = |v: &[plurican::curve::FunctionFieldElement]| v.iter().map(|f| f.render()).collect::<Vec<_>>().join(", ");
    let text = format!(
        "P^{{{}}}\n  even on {}: {}\n  odd on {}: {}",
        m.ambient,
        m.even_cleared,
        list(&m.even_sections),
        m.odd_cleared,
        list(&m.odd_sections)
    );
    Ok(Outcome { text, json: model_to_json(&m), ok: true })
}

fn cmd_verify(path: &Path, samples: usize, seed: u64) -> Res<Outcome> {
    let m = model_from_json(&read_json(path)?).map_err(err)?;
    let pts = sample_points(&m.curve, pool_size(samples), seed);
    let r = verify_embedding(&m, &pts, samples).map_err(err)?;
    let text = if r.all_pass() {
        format!("all checks pass ({} pairs, {} points)", r.pairs_checked, r.points)
    } else {
        let mut t = format!("checks failed ({} pairs, {} points)", r.pairs_checked, r.points);
        if let Some((p, q)) = r.separation_failures.first() {
            t.push_str(&format!("\n  point separation: {} pairs, first {p}, {q}", r.separation_failures.len()));
        }
        if let Some(p) = r.tangent_failures.first() {
            t.push_str(&format!("\n  tangent separation: {} points, first {p}", r.tangent_failures.len()));
        }
        if let Some(p) = r.odd_failures.first() {
            t.push_str(&format!("\n  odd nondegeneracy: {} points, first {p}", r.odd_failures.len()));
        }
        t
    };
    Ok(Outcome { text, json: json!({ "seed": seed, "report": r, "all_pass": r.all_pass() }), ok: r.all_pass() })
}

fn cmd_dual(src: &Source) -> Res<Outcome> {
    let x = src.supercurve()?;
    let d = dual_supercurve(&x).map_err(err)?;
    let auto = is_autodual(&x).map_err(err)?;
    let text = format!("L = {}\nK - L = {}\nautodual: {auto}\nsusy: {}", x.l(), d.l(), x.susy());
    let json = json!({ "supercurve": supercurve_to_json(&x), "dual": supercurve_to_json(&d), "autodual": auto, "susy": x.susy() });
    Ok(Outcome { text, json, ok: true })
}

fn cmd_moduli(g: usize) -> Res<Outcome> {
    let m = moduli_dimension(g).map_err(err)?;
    Ok(Outcome { text: m.dims.to_string(), json: serde_json::to_value(&m).map_err(err)?, ok: true })
}

fn cmd_superpoint(src: &Source, nu: u32, samples: usize, seed: u64, force: bool) -> Res<Outcome> {
    let x = src.supercurve()?;
    let split = pluri_canonical_rank(&x, nu).map_err(err)?;
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..samples.max(1) {
        let fam = SuperPointFamily::random(x.clone(), &mut rng).map_err(err)?;
        reports.push((fam.cochain().render(), pushforward_over_superpoint(&fam, nu, force).map_err(err)?));
    }
    let all_free = reports.iter().all(|(_, r)| r.free);
    let mut text = String::new();
    for (c, r) in &reports {
        text.push_str(&format!("{} {} (h = {c})\n", if r.free { "free" } else { "not free" }, r.ranks));
    }
    text.push_str(&format!("split rank {}", split.ranks));
    let json = json!({
        "split_ranks": split.ranks,
        "families": reports.iter().map(|(c, r)| json!({ "cochain": c, "report": r })).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: all_free })
}

fn cmd_check_sc(z: &str, theta: &str) -> Res<Outcome> {
    let (ez, et) = (parse(z).map_err(err)?, parse(theta).map_err(err)?);
    let names = odd_generators(&[&ez, &et]);
    let zp = eval_grassmann(&names, &ez).map_err(err)?;
    let tp = eval_grassmann(&names, &et).map_err(err)?;
    let r = check_superconformal(&zp, &tp).map_err(err)?;
    let text = if r.holds { "superconformal".to_string() } else { format!("not superconformal; residual {}", r.residual) };
    Ok(Outcome { text, json: json!({ "holds": r.holds, "residual": r.residual.to_string() }), ok: r.holds })
}

fn run(cli: &Cli) -> Res<Outcome> {
    match &cli.cmd {
        Cmd::Rank { src, nu } => cmd_rank(src, *nu),
        Cmd::Thresholds { genus, nu } => cmd_thresholds(*genus, *nu),
        Cmd::ThetaCensus { src } => cmd_census(src),
        Cmd::Embed { src, nu } => cmd_embed(src, *nu),
        Cmd::Verify { model, samples, seed } => cmd_verify(model, *samples, *seed),
        Cmd::Dual { src } => cmd_dual(src),
        Cmd::ModuliDim { genus } => cmd_moduli(*genus),
        Cmd::SuperpointRank { src, nu, samples, seed, force } => cmd_superpoint(src, *nu, *samples, *seed, *force),
        Cmd::CheckSuperconformal { z, theta } => cmd_check_sc(z, theta),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let pretty = serde_json::to_string_pretty(&out.json).expect("json");
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, format!("{pretty}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let shown = match cli.format {
        Format::Table => &out.text,
        Format::Json => &pretty,
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout(), "{shown}");
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
