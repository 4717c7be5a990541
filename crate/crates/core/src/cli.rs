//! Command-line front end: `build`, `verify`, `transform`, `encode`, `graph`,
//! `simulate {init,cat,dd}` and `demo`.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage/input error, 3 resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::codes::{self, build_6k2k2, build_gottesman, Distance, StabilizerCode};
use crate::error::{Error, Result};
use crate::graphs::{self, BipartitionResult, InteractionGraph};
use crate::hamiltonians::{self, CatBasis, PauliHamiltonian};
use crate::sim::{self, states};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub const DEFAULT_TAUS: [f64; 4] = [0.00125, 0.0025, 0.005, 0.01];
pub const DEFAULT_NDS: [usize; 4] = [4, 8, 16, 32];

#[derive(Parser, Debug)]
#[command(name = "aqc-codes", version, about = "Weight-two error-detecting codes for adiabatic quantum computation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    #[value(name = "6k2k2")]
    SixK,
    Gottesman,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a code as JSON.
    Build {
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check commutation, independence, logicals, weight-one detection and distance.
    Verify {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
        /// Operator budget for the distance search (defaults to the environment override or 5·10⁷).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 2)]
        expect_distance: usize,
    },
    /// Hadamard-conjugate one side of the two-colouring of the code's weight-two operator graph.
    Transform {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a logical Hamiltonian into the [[6k,2k,2]] code.
    Encode {
        /// Logical Hamiltonian JSON.
        #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
        input: Option<PathBuf>,
        /// Random grid problem, e.g. `4x4`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Encoded Hamiltonian JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the code used for encoding.
        #[arg(long)]
        code_out: Option<PathBuf>,
    },
    /// Degree, planarity and bipartiteness of an interaction graph.
    Graph {
        /// Hamiltonian JSON; without it the graph of the code's weight-two operators is used.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Code whose weight-two generators are added as penalty edges.
        #[arg(long)]
        code: Option<PathBuf>,
        #[arg(long)]
        no_penalty_edges: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(subcommand)]
    Simulate(Simulate),
    /// The k=1 pipeline end to end.
    Demo {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Simulate {
    /// Check the initial state against the code and the initial Hamiltonian.
    Init {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        penalty: f64,
    },
    /// Adiabatic cat-state preparation.
    Cat {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value = "Z")]
        basis: String,
        /// Anneal time; doubled from 1 until converged when omitted.
        #[arg(long = "T")]
        total_time: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Decoupling-pulse infidelity sweep with log-log fits.
    Dd {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        taus: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        nd: Option<Vec<usize>>,
        /// Problem instance on the 2k logical qubits (random chain problem).
        #[arg(long, default_value_t = 3)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        Error::CodeInconsistency(_) | Error::Numerical(_) => EXIT_CHECK_FAILED,
        Error::Dimension { .. }
        | Error::Parse(_)
        | Error::Parameter(_)
        | Error::NotALogical(_)
        | Error::UnsupportedInteraction(_)
        | Error::UnsupportedTerm(_)
        | Error::InvalidPulse(_)
        | Error::Io(_)
        | Error::Json(_) => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => {
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn read_code(p: &Path) -> Result<StabilizerCode> {
    StabilizerCode::from_json_str(&fs::read_to_string(p)?)
}

fn read_hamiltonian(p: &Path) -> Result<PauliHamiltonian> {
    PauliHamiltonian::from_json_str(&fs::read_to_string(p)?)
}

fn parse_grid(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("grid must look like RxC, got '{text}'"));
    let (r, c) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Build { family, k, out } => {
            let c = match family {
                Family::SixK => build_6k2k2(k)?,
                Family::Gottesman => build_gottesman(k)?,
            };
            emit(&(c.to_json_string()? + "\n"), out.as_deref(), stdout)?;
            Ok(true)
        }
        Command::Verify {
            code,
            max_weight,
            budget,
            expect_distance,
        } => {
            let c = read_code(&code)?;
            let budget = match budget {
                Some(b) => b,
                None => codes::enumeration_budget_from_env()?,
            };
            let (report, passed) = verify_report(&c, max_weight, budget, expect_distance)?;
            emit(&pretty(&report)?, None, stdout)?;
            Ok(passed)
        }
        Command::Transform { code, out } => {
            let c = read_code(&code)?;
            let t = transform(&c)?;
            emit(&(t.to_json_string()? + "\n"), out.as_deref(), stdout)?;
            Ok(true)
        }
        Command::Encode {
            input,
            grid,
            seed,
            out,
            code_out,
        } => {
            let h = match (input, grid) {
                (Some(p), _) => read_hamiltonian(&p)?,
                (None, Some(g)) => {
                    let (r, c) = parse_grid(&g)?;
                    hamiltonians::grid_problem(r, c, seed)?
                }
                (None, None) => return Err(Error::Parameter("encode needs --input or --grid".into())),
            };
            let logical = h.num_qubits();
            if logical % 2 != 0 {
                return Err(Error::Parameter(format!(
                    "the [[6k,2k,2]] code encodes an even number of logical qubits, got {logical}"
                )));
            }
            let code = build_6k2k2(logical / 2)?;
            let encoded = hamiltonians::encode_hamiltonian(&h, &code)?;
            let audit = hamiltonians::commutation_audit(&encoded, &code)?;
            if let Some(p) = out {
                fs::write(p, encoded.to_json_string()? + "\n")?;
            }
            if let Some(p) = code_out {
                fs::write(p, code.to_json_string()? + "\n")?;
            }
            let g = graphs::interaction_graph(&encoded)?;
            let summary = json!({
                "logical_qubits": logical,
                "physical_qubits": code.n,
                "terms": encoded.len(),
                "max_degree_unencoded": graphs::interaction_graph(&h)?.max_degree(),
                "max_degree_encoded": g.max_degree(),
                "audit": audit,
            });
            emit(&pretty(&summary)?, None, stdout)?;
            Ok(audit.passed)
        }
        Command::Graph {
            input,
            code,
            no_penalty_edges,
            format,
            out,
        } => {
            let code = code.as_deref().map(read_code).transpose()?;
            let g = match (input, &code) {
                (Some(p), Some(c)) => graphs::encoded_interaction_graph(&read_hamiltonian(&p)?, c, !no_penalty_edges)?,
                (Some(p), None) => graphs::interaction_graph(&read_hamiltonian(&p)?)?,
                (None, Some(c)) => graphs::code_operator_graph(c, !no_penalty_edges),
                (None, None) => return Err(Error::Parameter("graph needs --input or --code".into())),
            };
            let text = match format {
                Format::Json => pretty(&graphs::graph_report(&g))?,
                Format::Dot => g.to_dot(),
                Format::Csv => return Err(Error::Parameter("graph supports json or dot output".into())),
            };
            emit(&text, out.as_deref(), stdout)?;
            Ok(true)
        }
        Command::Simulate(s) => simulate(s, stdout),
        Command::Demo { seed } => demo(seed, stdout),
    }
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    k: usize,
    css: bool,
    checks: codes::VerificationReport,
    all_weight_one_detected: bool,
    distance: codes::DistanceReport,
    expected_distance: usize,
    passed: bool,
}

fn verify_report(c: &StabilizerCode, max_weight: usize, budget: u64, expected: usize) -> Result<(VerifyReport, bool)> {
    let checks = codes::verify_code(c);
    let weight_one = codes::detects_all_weight_one(c);
    let distance = codes::distance(c, max_weight, budget)?;
    let passed = checks.all_passed && weight_one && distance.distance == Distance::Exact(expected);
    Ok((
        VerifyReport {
            n: c.n,
            k: c.k,
            css: c.css,
            checks,
            all_weight_one_detected: weight_one,
            distance,
            expected_distance: expected,
            passed,
        },
        passed,
    ))
}

/// Two-colours the weight-two operator graph of `c` (isolated qubits go to side A)
/// and conjugates side B.
pub fn transform(c: &StabilizerCode) -> Result<StabilizerCode> {
    let g = graphs::code_operator_graph(c, true);
    let mut b = match g.bipartition() {
        BipartitionResult::Bipartite(b) => b,
        BipartitionResult::OddCycle { cycle } => {
            return Err(Error::Parameter(format!(
                "weight-two operator graph has an odd cycle {cycle:?}"
            )))
        }
    };
    b.side_a.extend((0..c.n).filter(|q| !g.vertices.contains(q)));
    graphs::hadamard_transform(c, &b)
}

fn simulate(s: Simulate, stdout: &mut dyn Write) -> Result<bool> {
    match s {
        Simulate::Init { k, penalty } => {
            let report = init_report(k, penalty)?;
            let passed = report["passed"].as_bool().unwrap_or(false);
            emit(&pretty(&report)?, None, stdout)?;
            Ok(passed)
        }
        Simulate::Cat {
            m,
            basis,
            total_time,
            steps,
        } => {
            let basis: CatBasis = basis.parse()?;
            let runs = match total_time {
                Some(t) => vec![sim::prepare_cat(m, basis, t, steps.unwrap_or(((t * 20.0).ceil() as usize).max(16)))?],
                None => sim::prepare_cat_converged(m, basis, 1.0, 20.0, 0.99, 12)?,
            };
            let attempts: Vec<_> = runs
                .iter()
                .map(|r| json!({"T": r.total_time, "steps": r.steps, "overlap": r.target_overlap, "max_drift": r.max_drift}))
                .collect();
            let last = runs.last().expect("at least one run");
            let report = json!({
                "m": m,
                "basis": format!("{basis:?}"),
                "attempts": attempts,
                "T": last.total_time,
                "overlap": last.target_overlap,
                "max_drift": last.max_drift,
                "final_ground_overlap": last.trace.slices.last().and_then(|s| s.ground_overlap),
            });
            emit(&pretty(&report)?, None, stdout)?;
            Ok(last.target_overlap > 0.99)
        }
        Simulate::Dd {
            k,
            taus,
            nd,
            seed,
            format,
            out,
        } => {
            let taus = taus.unwrap_or_else(|| DEFAULT_TAUS.to_vec());
            let nds = nd.unwrap_or_else(|| DEFAULT_NDS.to_vec());
            let ex = dd_experiment(k, &taus, &nds, seed)?;
            let text = match format {
                Format::Json => dd_json_lines(&ex)?,
                Format::Csv => dd_csv(&ex),
                Format::Dot => return Err(Error::Parameter("dd supports json or csv output".into())),
            };
            emit(&text, out.as_deref(), stdout)?;
            Ok(ex.max_bound_ratio <= 10.0)
        }
    }
}

/// Encoded random chain problem on `2k` logical qubits, swept over `taus × nds`.
pub fn dd_experiment(k: usize, taus: &[f64], nds: &[usize], seed: u64) -> Result<sim::DdExperiment> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    if taus.is_empty() || nds.is_empty() {
        return Err(Error::Parameter("need at least one tau and one N_D".into()));
    }
    let code = build_6k2k2(k)?;
    let problem = hamiltonians::grid_problem(1, 2 * k, seed)?;
    let h = hamiltonians::encode_hamiltonian(&problem, &code)?;
    sim::dd_scaling_experiment(&h, taus, nds)
}

fn dd_json_lines(ex: &sim::DdExperiment) -> Result<String> {
    let mut s = String::new();
    for r in &ex.records {
        s += &serde_json::to_string(r)?;
        s.push('\n');
    }
    let fits = json!({
        "summary": {
            "norm": ex.norm,
            "max_bound_ratio": ex.max_bound_ratio,
            "tau_fits": ex.tau_fits.iter().map(|(d, f)| json!({"n_d": d, "slope": f.slope, "intercept": f.intercept, "r2": f.r2})).collect::<Vec<_>>(),
            "nd_fits": ex.nd_fits.iter().map(|(t, f)| json!({"tau": t, "slope": f.slope, "intercept": f.intercept, "r2": f.r2})).collect::<Vec<_>>(),
        }
    });
    s += &serde_json::to_string(&fits)?;
    s.push('\n');
    Ok(s)
}

fn dd_csv(ex: &sim::DdExperiment) -> String {
    let mut s = String::from("tau,n_d,infidelity,bound\n");
    for r in &ex.records {
        s += &format!("{},{},{},{}\n", r.tau, r.n_d, r.infidelity, r.bound);
    }
    s
}

fn init_report(k: usize, penalty: f64) -> Result<serde_json::Value> {
    let code = build_6k2k2(k)?;
    let psi = sim::build_initial_state(k)?;
    let ops = states::initial_state_stabilizers(k)?;
    let mut checks = Vec::new();
    let mut all_plus = true;
    for p in &ops {
        let ev = psi.expectation_pauli(p)?.re;
        let dev = states::stabilizer_deviation(&psi, p)?;
        all_plus &= dev < 1e-10;
        checks.push(json!({"operator": p.to_string(), "expectation": ev, "deviation": dev}));
    }
    let joint = states::joint_eigenspace(code.n, &ops)?;
    let h0 = hamiltonians::initial_hamiltonian(k)?;
    let spectrum = sim::codespace_spectrum(&h0, &code)?;
    let ground_overlap = spectrum.ground_state.overlap(&psi)?;
    let with_penalty = h0.sum(&hamiltonians::penalty_hamiltonian(&code, penalty)?)?;
    let passed = all_plus
        && joint.len() == 1
        && spectrum.ground_multiplicity == 1
        && spectrum.gap.is_some_and(|g| g > 0.0)
        && (ground_overlap - 1.0).abs() < 1e-10;
    Ok(json!({
        "k": k,
        "n": code.n,
        "checks": checks,
        "joint_eigenspace_dimension": joint.len(),
        "codespace_energies": spectrum.energies,
        "codespace_ground_multiplicity": spectrum.ground_multiplicity,
        "codespace_gap": spectrum.gap,
        "ground_overlap_with_initial_state": ground_overlap,
        "penalty": penalty,
        "energy_with_penalty": psi.energy(&with_penalty)?,
        "passed": passed,
    }))
}

fn demo(seed: u64, stdout: &mut dyn Write) -> Result<bool> {
    let code = build_6k2k2(1)?;
    let (verify, verified) = verify_report(&code, 3, codes::DEFAULT_ENUMERATION_BUDGET, 2)?;
    let problem = hamiltonians::grid_problem(1, 2, seed)?;
    let encoded = hamiltonians::encode_hamiltonian(&problem, &code)?;
    let audit = hamiltonians::commutation_audit(&encoded, &code)?;
    let g: InteractionGraph = graphs::encoded_interaction_graph(&encoded, &code, true)?;
    let report = graphs::graph_report(&g);
    let init = init_report(1, 1.0)?;
    let cat = sim::prepare_cat_converged(2, CatBasis::Z, 1.0, 20.0, 0.99, 12)?;
    let cat = cat.last().expect("at least one run");
    let dd = dd_experiment(1, &DEFAULT_TAUS, &DEFAULT_NDS, seed)?;
    let group = sim::universal_decoupling_group(&code)?;
    let transformed = transform(&code)?;
    let (tverify, tverified) = verify_report(&transformed, 3, codes::DEFAULT_ENUMERATION_BUDGET, 2)?;
    let passed = verified
        && audit.passed
        && init["passed"].as_bool().unwrap_or(false)
        && cat.target_overlap > 0.99
        && dd.max_bound_ratio <= 10.0
        && tverified;
    let out = json!({
        "code": {"n": code.n, "k": code.k, "generators": code.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>()},
        "verify": verify,
        "encoded_terms": encoded.len(),
        "audit_passed": audit.passed,
        "graph": {"max_degree": report.max_degree, "planar": report.planar, "bipartite": report.bipartite},
        "initial_state": init,
        "bell_pair": {"T": cat.total_time, "overlap": cat.target_overlap},
        "decoupling_group": group.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "dd": {
            "max_bound_ratio": dd.max_bound_ratio,
            "tau_slopes": dd.tau_fits.iter().map(|(d, f)| json!({"n_d": d, "slope": f.slope})).collect::<Vec<_>>(),
            "nd_slopes": dd.nd_fits.iter().map(|(t, f)| json!({"tau": t, "slope": f.slope})).collect::<Vec<_>>(),
        },
        "transformed": {"css": transformed.css, "distance": tverify.distance.distance, "passed": tverify.passed},
        "passed": passed,
    });
    emit(&pretty(&out)?, None, stdout)?;
    Ok(passed)
}
