//! Argument parsing and subcommand dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixwalk_core::charpoly::charpoly_exact;
use mixwalk_core::eigen::multiset_distance;
use mixwalk_core::operators::{h_eta, h_eta_float, h_tilde_float, u_theta_float};
use mixwalk_core::spectrum::{spectrum_u_direct, spectrum_u_via_mapping};
use mixwalk_core::supports::{
    digon_count_via_trace, power_support, verify_square_formula, verify_square_negative_identity, Polarity,
};
use mixwalk_core::{Angle, ArcIndex, Digraph, Walk};
use serde_json::json;

use crate::error::{CliError, Result};
use crate::input::{parse_angle, resolve};
use crate::render::{charpoly_json, dump_operator, render_complex, spectrum_json, support_text, Operator};
use crate::tables::{compare_with_reference, compute, emit, published_specs, spec_for, Format, TableOutput};
use crate::verify;

/// Tolerance between the mapping and eigensolver routes.
pub const ROUTE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "mixwalk", version, about = "Quantum walks defined by digraphs: operators, spectra, supports, cospectral tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print operators of a digraph.
    Build(BuildArgs),
    /// Eigenvalues of U_theta as JSON.
    Spectrum(SpectrumArgs),
    /// Positive/negative supports of U_theta powers with a trace report.
    Supports(SupportsArgs),
    /// Cospectral classification tables.
    Tables(TablesArgs),
    /// Run the invariant sweeps.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Arc list such as "n=4; 0->1; 1<->2".
    #[arg(long)]
    pub arcs: Option<String>,
    /// File holding an arc list.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Compact code (base-4 digit per vertex pair).
    #[arg(long)]
    pub code: Option<String>,
    /// Family: "Y a n", "K n", "C n" or "DC n".
    #[arg(long)]
    pub family: Option<String>,
}

impl InputArgs {
    pub fn graph(&self) -> Result<Digraph> {
        resolve(self.arcs.as_deref(), self.file.as_deref(), self.code.as_deref(), self.family.as_deref())
    }
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    /// eta as a fraction p/q of pi.
    #[arg(long, default_value = "1/2")]
    pub eta: String,
    /// eta in radians; floating output only.
    #[arg(long, conflicts_with = "eta")]
    pub float_eta: Option<f64>,
}

impl EtaArgs {
    fn exact(&self) -> Result<Angle> {
        Ok(parse_angle(&self.eta)?)
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub eta: EtaArgs,
    /// Operators to print.
    #[arg(long = "op", value_enum, default_values_t = [Operator::U])]
    pub ops: Vec<Operator>,
    /// Print floating entries instead of exact ones.
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Mapping,
    Direct,
    Both,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub eta: EtaArgs,
    #[arg(long, value_enum, default_value_t = Route::Mapping)]
    pub route: Route,
    /// Add the exact characteristic polynomial of H_eta.
    #[arg(long)]
    pub charpoly: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl SignArg {
    fn polarity(self) -> Polarity {
        match self {
            SignArg::Plus => Polarity::Positive,
            SignArg::Minus => Polarity::Negative,
        }
    }
}

#[derive(Debug, Args)]
pub struct SupportsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub eta: EtaArgs,
    /// Power n of U_theta.
    #[arg(long, default_value_t = 2)]
    pub power: u32,
    #[arg(long, value_enum, default_value_t = SignArg::Plus, allow_hyphen_values = true)]
    pub sign: SignArg,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Largest order; columns run from 2 up to it.
    #[arg(long, default_value_t = 5)]
    pub order: usize,
    /// Tables to compute; all published tables when omitted.
    #[arg(long = "functor", value_parser = ["A", "H", "Heta", "U2plus"])]
    pub functors: Vec<String>,
    /// eta for Heta and U2plus.
    #[arg(long)]
    pub eta: Option<String>,
    /// Present only to be refused: classing is exact.
    #[arg(long, hide = true)]
    pub float_eta: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    #[arg(long, default_value_t = default_jobs())]
    pub jobs: usize,
    /// Allow order 6.
    #[arg(long)]
    pub long_run: bool,
    /// Resume file for the largest order.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Compare against the embedded published values.
    #[arg(long)]
    pub verify_paper: bool,
    /// Write the tables here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Smaller sweeps for a fast smoke run.
    #[arg(long)]
    pub quick: bool,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

/// Runs one command and returns what it prints on standard output.
pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Build(a) => build(&a),
        Command::Spectrum(a) => spectrum(&a),
        Command::Supports(a) => supports(&a),
        Command::Tables(a) => tables(&a),
        Command::Verify(a) => verify_cmd(&a),
    }
}

fn build(a: &BuildArgs) -> Result<String> {
    let g = a.input.graph()?;
    let mut out = String::new();
    match a.eta.float_eta {
        None => {
            let eta = a.eta.exact()?;
            for &op in &a.ops {
                out.push_str(&dump_operator(&g, eta, op, a.float)?);
            }
        }
        Some(x) => {
            for &op in &a.ops {
                out.push_str(&float_dump(&g, x, op)?);
            }
        }
    }
    Ok(out)
}

fn float_dump(g: &Digraph, eta: f64, op: Operator) -> Result<String> {
    let header = format!("# {} eta={} rad\n", op.label(), eta);
    let body = match op {
        Operator::H => render_complex(g.n(), g.n(), &h_eta_float(g, eta)),
        Operator::HTilde => {
            let k = g.non_isolated().len();
            render_complex(k, k, &h_tilde_float(g, eta))
        }
        Operator::U => {
            if g.has_no_arcs() {
                return Err(CliError::Precondition("U_theta needs at least one arc".into()));
            }
            let idx = ArcIndex::new(g);
            render_complex(idx.len(), idx.len(), &u_theta_float(g, &idx, eta))
        }
        Operator::STheta | Operator::DTheta => {
            return Err(CliError::Precondition(format!("{} has no floating route; use --eta", op.label())))
        }
        // The rest do not depend on eta.
        _ => return dump_operator(g, Angle::ZERO, op, true),
    };
    Ok(header + &body)
}

fn spectrum(a: &SpectrumArgs) -> Result<String> {
    let g = a.input.graph()?;
    if g.has_no_arcs() {
        return Err(CliError::Precondition("U_theta needs at least one arc".into()));
    }
    let (exact, x) = match a.eta.float_eta {
        Some(x) => {
            if a.route != Route::Direct || a.charpoly {
                return Err(CliError::Precondition("--float-eta supports only --route direct".into()));
            }
            (None, x)
        }
        None => {
            let e = a.eta.exact()?;
            (Some(e), e.to_f64())
        }
    };
    let mapped = || -> Result<_> {
        if !g.weakly_connected() {
            return Err(CliError::Precondition("the mapping route needs a weakly connected digraph".into()));
        }
        Ok(spectrum_u_via_mapping(&g, exact.expect("exact eta"))?)
    };
    let mut v = match a.route {
        Route::Mapping => spectrum_json(&mapped()?),
        Route::Direct => spectrum_json(&spectrum_u_direct(&g, x)?),
        Route::Both => {
            let m = mapped()?;
            let d = spectrum_u_direct(&g, x)?;
            let dist = multiset_distance(&m.expanded(), &d.expanded());
            let v = json!({"mapping": spectrum_json(&m), "direct": spectrum_json(&d), "distance": dist});
            if !dist.is_some_and(|d| d <= ROUTE_TOLERANCE) {
                return Err(CliError::Mismatch(format!(
                    "routes disagree (distance {:?}, tolerance {})\n{}",
                    dist,
                    ROUTE_TOLERANCE,
                    serde_json::to_string_pretty(&v).expect("json")
                )));
            }
            v
        }
    };
    if a.charpoly {
        let p = charpoly_exact(&h_eta(&g, exact.expect("exact eta")))?;
        v["charpoly"] = charpoly_json(&p);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    Ok(s)
}

fn supports(a: &SupportsArgs) -> Result<String> {
    if a.eta.float_eta.is_some() {
        return Err(CliError::Precondition("supports are exact; --float-eta is refused".into()));
    }
    if a.power == 0 {
        return Err(CliError::Precondition("power must be at least 1".into()));
    }
    let g = a.input.graph()?;
    if g.has_no_arcs() {
        return Err(CliError::Precondition("supports need at least one arc".into()));
    }
    let eta = a.eta.exact()?;
    let w = Walk::new(&g, eta)?;
    let p = a.sign.polarity();
    let s = power_support(&w, a.power, p)?;
    let mut out = format!("# U_theta^({},{}) eta={}\n", a.power, p.symbol(), eta);
    out.push_str(&support_text(&s, w.index()));
    out.push_str(&format!("trace: {}\n", s.trace()));
    if a.power == 2 {
        if p == Polarity::Positive {
            out.push_str(&format!("trace/2: {}\n", digon_count_via_trace(&g, eta)?));
            out.push_str(&format!("edges: {}\ndigons: {}\n", g.edge_count(), g.digon_count()));
        }
        let rep = verify_square_formula(&w, p)?;
        let status = if rep.holds() { "holds" } else { "fails" };
        let scope = if rep.hypothesis { "regular k>=3" } else { "outside the regular k>=3 hypothesis" };
        out.push_str(&format!("square formula ({:?}): {} ({})\n", rep.regime, status, scope));
        if g.is_graph() && rep.hypothesis {
            let neg = verify_square_negative_identity(&g)?;
            out.push_str(&format!("negative identity: {}\n", if neg.holds() { "holds" } else { "fails" }));
            if !neg.holds() {
                return Err(CliError::Mismatch(format!("negative identity fails\n{}", out)));
            }
        }
        if rep.hypothesis && !rep.holds() {
            return Err(CliError::Mismatch(format!("square formula fails at {:?}\n{}", rep.violations, out)));
        }
    }
    Ok(out)
}

fn tables(a: &TablesArgs) -> Result<String> {
    if a.float_eta.is_some() {
        return Err(CliError::Precondition("tables are exact; --float-eta is refused".into()));
    }
    let max = if a.long_run { 6 } else { 5 };
    if a.order < 2 || a.order > max {
        let hint = if a.order == 6 { "; pass --long-run" } else { "" };
        return Err(CliError::Precondition(format!("order {} outside 2..={}{}", a.order, max, hint)));
    }
    if a.jobs == 0 {
        return Err(CliError::Precondition("--jobs must be positive".into()));
    }
    let eta = a.eta.as_deref().map(parse_angle).transpose()?;
    let specs = if a.functors.is_empty() {
        published_specs()
    } else {
        a.functors.iter().map(|f| spec_for(f, eta)).collect::<Result<Vec<_>>>()?
    };
    let mut columns: Vec<Vec<_>> = vec![Vec::new(); specs.len()];
    for order in 2..=a.order {
        let ck = if order == a.order { a.checkpoint.as_deref() } else { None };
        for (col, t) in columns.iter_mut().zip(compute(order, &specs, a.jobs, ck)?) {
            col.push(t);
        }
    }
    let mut mismatches = Vec::new();
    if a.verify_paper {
        for (s, col) in specs.iter().zip(&columns) {
            for c in col {
                mismatches.extend(compare_with_reference(s, c)?);
            }
        }
    }
    let outputs: Vec<TableOutput<'_>> =
        specs.iter().zip(columns).map(|(spec, columns)| TableOutput { spec, columns }).collect();
    let text = emit(&outputs, a.format);
    let text = match &a.output {
        Some(p) => {
            std::fs::write(p, &text)?;
            String::new()
        }
        None => text,
    };
    if !mismatches.is_empty() {
        return Err(CliError::Mismatch(format!("{}{}", text, mismatches.join("\n"))));
    }
    Ok(text)
}

fn verify_cmd(a: &VerifyArgs) -> Result<String> {
    let reports = if a.quick {
        let angles = verify::standard_angles();
        let right = [Angle::RIGHT];
        vec![
            verify::operator_identities(3, &angles)?,
            verify::mapping_vs_direct(3, &right, ROUTE_TOLERANCE)?,
            verify::y_family(3..=5, &right, ROUTE_TOLERANCE)?,
            verify::transpose_invariance(3, &right)?,
        ]
    } else {
        verify::all()?
    };
    let mut out = String::new();
    let mut failed = Vec::new();
    for r in &reports {
        let status = if r.passed() { "ok" } else { "FAIL" };
        out.push_str(&format!("{:<28} {:>7} checked  {}\n", r.name, r.checked, status));
        for v in r.violations.iter().take(5) {
            out.push_str(&format!("    {}\n", v));
        }
        if !r.passed() {
            failed.push(r.name);
        }
    }
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Mismatch(format!("{}failed: {}", out, failed.join(", "))))
    }
}
