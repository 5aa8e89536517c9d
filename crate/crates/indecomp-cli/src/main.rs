//! `indecomp`: construct the indecomposable-module families, certify their
//! properties, and reproduce the topological realizations.
//!
//! Exit codes: 0 = all certifications pass, 1 = a certification failed,
//! 2 = usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use indecomp_cli::io;
use indecomp_cli::report::Report;
use indecomp_core::complexes::diagram_homology;
use indecomp_core::exactalg::rational_from_decimal;
use indecomp_core::families::{
    build_grid33, build_kronecker, build_m_cl5, theta, Grid33Variant,
};
use indecomp_core::intervals::{decompose_forward, find_k22, hom_table};
use indecomp_core::quiver::{
    are_isomorphic, end_basis, fitting_check, is_local_exhaustive, ladder_split, Fitting,
    IsoResult, Locality, Orientation, Representation,
};
use indecomp_core::vrtiles::{
    assemble, build_cl5_vr_diagram, default_schedule,
    interval_constancy_check, perturbation_trials, sandal_diagram, stability_harness, vertex_map,
    vr_complex, Row,
};

#[derive(Parser)]
#[command(name = "indecomp", version, about = "Indecomposable persistence modules over commutative grids: construction, certification, and topological realization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family member and emit its representation JSON.
    Construct(ConstructArgs),
    /// Certify representations: indecomposability or isomorphism.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Interval decomposition of a forward A_n representation.
    Decompose(DecomposeArgs),
    /// The ⊵ table of interval Hom dimensions.
    HomTable(HomTableArgs),
    /// Search K_{2,2} configurations in the ⊵ relation.
    FindK22(FindK22Args),
    /// Vietoris-Rips pipeline over the tile geometry.
    #[command(subcommand)]
    Vr(VrCommand),
    /// Simplicial sandal models.
    #[command(subcommand)]
    Sandal(SandalCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Cl5,
    Kronecker,
    #[value(name = "cube_theta_R", alias = "cube-theta-r")]
    CubeThetaR,
    Grid33,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    family: Family,
    /// Size parameter for cl5/grid33.
    #[arg(long)]
    d: Option<usize>,
    /// Size parameter for kronecker/cube_theta_R.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    lambda: u64,
    #[arg(long, default_value_t = 101)]
    p: u64,
    /// Grid variant: 4in, 4out, 3in1out, 1in3out, 2in2out_a, 2in2out_b.
    #[arg(long)]
    variant: Option<String>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Validate + End + indecomposability certification.
    Indecomp(CheckIndecompArgs),
    /// Isomorphism test between two representations.
    Iso(CheckIsoArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Enumerate the span of End(V); definitive within budget.
    Exhaustive,
    /// Random Fitting-idempotent search.
    Fitting,
    /// Exhaustive when it fits the budget, otherwise Fitting.
    Auto,
}

#[derive(Args)]
struct CheckIndecompArgs {
    /// Representation JSON file.
    #[arg(long)]
    rep: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Enumeration budget for the exhaustive method.
    #[arg(long, default_value_t = 1 << 20)]
    budget: u64,
    /// Trials for the Fitting search.
    #[arg(long, default_value_t = 64)]
    trials: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct CheckIsoArgs {
    /// First representation JSON file.
    #[arg(long)]
    rep: PathBuf,
    /// Second representation JSON file.
    #[arg(long)]
    other: PathBuf,
    #[arg(long, default_value_t = 1 << 20)]
    budget: u64,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Representation JSON file (forward A_n, or a ladder with --row).
    #[arg(long)]
    rep: PathBuf,
    /// For ladder input: decompose this row.
    #[arg(long, value_parser = ["bottom", "top"])]
    row: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct HomTableArgs {
    #[arg(long)]
    n: usize,
    /// Orientation word over {f, b}, length n-1.
    #[arg(long)]
    tau: String,
    #[arg(long, default_value_t = 101)]
    p: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct FindK22Args {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    tau: String,
    #[arg(long, default_value_t = 101)]
    p: u64,
}

#[derive(Subcommand)]
enum VrCommand {
    /// Assemble clouds and emit complexes at the scheduled radii.
    Build(VrBuildArgs),
    /// Full pipeline check: dims and isomorphism type of the H1 diagram.
    Verify(VrVerifyArgs),
    /// Spectrum-gap certification plus seeded perturbation trials.
    Stability(VrStabilityArgs),
}

#[derive(Args)]
struct VrBuildArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
    /// Output directory for cloud and complex files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct VrVerifyArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 101)]
    p: u64,
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
    #[arg(long, default_value_t = 1 << 16)]
    budget: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Also check interval constancy with this many samples per interval.
    #[arg(long, default_value_t = 0)]
    constancy_samples: usize,
}

#[derive(Args)]
struct VrStabilityArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
}

#[derive(Subcommand)]
enum SandalCommand {
    /// Build S(d) and certify H1(S(d)) ≅ M(d,0).
    Verify(SandalVerifyArgs),
}

#[derive(Args)]
struct SandalVerifyArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 101)]
    p: u64,
    #[arg(long, default_value_t = 1 << 16)]
    budget: u64,
    #[arg(long)]
    seed: Option<u64>,
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("INDECOMP_SEED").ok().and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

/// Input or usage problem: exit code 2.
struct InputError(String);

fn read_representation(path: &Path) -> Result<(Representation, Vec<u8>), InputError> {
    let bytes = fs::read(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let json: io::RepresentationJson = serde_json::from_slice(&bytes)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let rep = io::representation_from_json(&json)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((rep, bytes))
}

fn write_or_print(out: &Option<PathBuf>, contents: &str) -> Result<(), InputError> {
    match out {
        Some(path) => fs::write(path, contents)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn emit_report(report: &Report) -> u8 {
    println!("{}", report.to_json_pretty());
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, InputError> {
    let p = args.p;
    let rep = match args.family {
        Family::Cl5 => {
            let d = args.d.ok_or_else(|| InputError("cl5 needs --d".into()))?;
            build_m_cl5(d, args.lambda, p)
        }
        Family::Kronecker => {
            let n = args.n.ok_or_else(|| InputError("kronecker needs --n".into()))?;
            build_kronecker(n, args.lambda, p)
        }
        Family::CubeThetaR => {
            let n = args.n.ok_or_else(|| InputError("cube_theta_R needs --n".into()))?;
            theta(&build_kronecker(n, args.lambda, p))
        }
        Family::Grid33 => {
            let d = args.d.ok_or_else(|| InputError("grid33 needs --d".into()))?;
            let variant = args
                .variant
                .as_deref()
                .ok_or_else(|| InputError("grid33 needs --variant".into()))?;
            let variant = Grid33Variant::from_str(variant)
                .map_err(|e| InputError(e.to_string()))?;
            build_grid33(variant, d, args.lambda, p)
        }
    };
    if let Err(v) = rep.validate() {
        return Err(InputError(format!("constructed representation failed validation: {v}")));
    }
    let json = serde_json::to_string_pretty(&io::representation_to_json(&rep))
        .expect("serializes");
    write_or_print(&args.out, &json)?;
    Ok(0)
}

fn locality_verdict(report: &mut Report, rep: &Representation, method: Method, budget: u64, trials: usize, seed: u64) {
    let end = end_basis(rep);
    report.pass("end_basis", format!("dim End = {}", end.dim()));
    let exhaustive = |report: &mut Report| -> bool {
        match is_local_exhaustive(&end, budget) {
            Locality::Local => {
                report.pass(
                    "indecomposable",
                    format!("End(V) local by exhaustive enumeration over F_{}", rep.modulus()),
                );
                true
            }
            Locality::NotLocal(witness) => {
                let mats: Vec<io::MatrixJson> =
                    witness.matrices.iter().map(io::matrix_to_json).collect();
                report.fail(
                    "indecomposable",
                    "End(V) is not local: witness with both a and id-a singular",
                    Some(serde_json::to_value(mats).unwrap()),
                );
                true
            }
            Locality::BudgetExceeded => false,
        }
    };
    let fitting = |report: &mut Report| match fitting_check(rep, trials, seed) {
        Fitting::Decomposable(e) => {
            let mats: Vec<io::MatrixJson> = e.matrices.iter().map(io::matrix_to_json).collect();
            report.fail(
                "indecomposable",
                "nontrivial idempotent found",
                Some(serde_json::to_value(mats).unwrap()),
            );
        }
        Fitting::ProbablyIndecomposable => {
            report.probabilistic(
                "indecomposable",
                format!("no idempotent in {trials} Fitting trials"),
            );
        }
    };
    match method {
        Method::Exhaustive => {
            if !exhaustive(report) {
                report.fail(
                    "indecomposable",
                    format!("enumeration exceeds budget {budget}"),
                    None,
                );
            }
        }
        Method::Fitting => fitting(report),
        Method::Auto => {
            if !exhaustive(report) {
                fitting(report);
            }
        }
    }
}

fn cmd_check_indecomp(args: &CheckIndecompArgs) -> Result<u8, InputError> {
    let seed = resolve_seed(args.seed);
    let (rep, bytes) = read_representation(&args.rep)?;
    let mut report = Report::new("check indecomp", rep.modulus(), seed);
    report.input("rep", &bytes);
    report.parameter("budget", args.budget);
    report.parameter("trials", args.trials);
    let start = Instant::now();
    match rep.validate() {
        Ok(()) => report.pass("validate", "all commutativity relations hold"),
        Err(v) => {
            report.fail(
                "validate",
                format!("{v}"),
                Some(serde_json::to_value(io::matrix_to_json(&v.difference)).unwrap()),
            );
            report.timing("total", start.elapsed().as_millis() as u64);
            return Ok(emit_report(&report));
        }
    }
    locality_verdict(&mut report, &rep, args.method, args.budget, args.trials, seed);
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn cmd_check_iso(args: &CheckIsoArgs) -> Result<u8, InputError> {
    let seed = resolve_seed(args.seed);
    let (a, bytes_a) = read_representation(&args.rep)?;
    let (b, bytes_b) = read_representation(&args.other)?;
    let mut report = Report::new("check iso", a.modulus(), seed);
    report.input("rep", &bytes_a);
    report.input("other", &bytes_b);
    report.parameter("budget", args.budget);
    let start = Instant::now();
    match are_isomorphic(&a, &b, args.budget, seed) {
        Ok(IsoResult::Iso(w)) => {
            let mats: Vec<io::MatrixJson> = w.matrices.iter().map(io::matrix_to_json).collect();
            report.verdicts.push(indecomp_cli::report::Verdict {
                check: "isomorphic".into(),
                status: indecomp_cli::report::Status::Pass,
                detail: "vertexwise invertible morphism found".into(),
                witness: Some(serde_json::to_value(mats).unwrap()),
            });
        }
        Ok(IsoResult::NotIso) => {
            report.fail("isomorphic", "NotIso (definitive)", None);
        }
        Ok(IsoResult::ProbablyNotIso) => {
            report.fail("isomorphic", "ProbablyNotIso (sampling found no isomorphism)", None);
        }
        Err(e) => return Err(InputError(format!("cannot compare: {e}"))),
    }
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<u8, InputError> {
    let (rep, _) = read_representation(&args.rep)?;
    let target = match args.row.as_deref() {
        Some(row) => {
            let (bottom, top, _) =
                ladder_split(&rep).map_err(|e| InputError(format!("{e}")))?;
            if row == "bottom" {
                bottom
            } else {
                top
            }
        }
        None => rep,
    };
    let decomposition =
        decompose_forward(&target).map_err(|e| InputError(format!("{e}")))?;
    match args.format {
        OutputFormat::Json => {
            let json = serde_json::to_string_pretty(&io::decomposition_to_json(&decomposition))
                .expect("serializes");
            println!("{json}");
        }
        OutputFormat::Text => println!("{decomposition}"),
    }
    Ok(0)
}

fn parse_tau(n: usize, tau: &str) -> Result<Orientation, InputError> {
    let tau = Orientation::parse(tau)
        .ok_or_else(|| InputError("orientation must be a word over {f, b}".into()))?;
    if tau.len() != n - 1 {
        return Err(InputError(format!("orientation must have length {}", n - 1)));
    }
    Ok(tau)
}

fn cmd_hom_table(args: &HomTableArgs) -> Result<u8, InputError> {
    let tau = parse_tau(args.n, &args.tau)?;
    let table = hom_table(args.n, &tau, args.p);
    match args.format {
        OutputFormat::Json => {
            let json = serde_json::to_string_pretty(&io::hom_table_to_json(&table))
                .expect("serializes");
            println!("{json}");
        }
        OutputFormat::Text => print!("{}", io::hom_table_to_text(&table)),
    }
    Ok(0)
}

fn cmd_find_k22(args: &FindK22Args) -> Result<u8, InputError> {
    let tau = parse_tau(args.n, &args.tau)?;
    let configs = find_k22(args.n, &tau, args.p);
    let json: Vec<serde_json::Value> = configs
        .iter()
        .map(|c| {
            serde_json::json!({
                "d1": c.d1, "d2": c.d2, "r1": c.r1, "r2": c.r2,
            })
        })
        .collect();
    println!("{}", serde_json::to_string_pretty(&json).expect("serializes"));
    Ok(0)
}

fn cmd_vr_build(args: &VrBuildArgs) -> Result<u8, InputError> {
    fs::create_dir_all(&args.out)
        .map_err(|e| InputError(format!("cannot create {}: {e}", args.out.display())))?;
    let schedule = default_schedule();
    let mut report = Report::new("vr build", 0, 0);
    report.parameter("d", args.d);
    report.parameter("maxdim", args.maxdim);
    let start = Instant::now();
    for (row, tag) in [(Row::Lower, "lower"), (Row::Upper, "upper")] {
        let cloud = assemble(row, args.d);
        let cloud_json = serde_json::to_string_pretty(&io::point_cloud_to_json(&cloud))
            .expect("serializes");
        let base = args.out.join(format!("{tag}_d{}", args.d));
        fs::write(base.with_extension("json"), cloud_json)
            .map_err(|e| InputError(format!("write failed: {e}")))?;
        fs::write(base.with_extension("csv"), io::point_cloud_to_csv(&cloud))
            .map_err(|e| InputError(format!("write failed: {e}")))?;
        for (i, r) in schedule.chosen.iter().enumerate() {
            let complex = vr_complex(&cloud, r, args.maxdim);
            let path = args.out.join(format!("{tag}_d{}_r{}.json", args.d, i + 1));
            let json = serde_json::to_string_pretty(&io::complex_to_json(&complex))
                .expect("serializes");
            fs::write(path, json).map_err(|e| InputError(format!("write failed: {e}")))?;
            report.pass(
                format!("{tag} r{}", i + 1),
                format!(
                    "{} vertices, {} edges, {} triangles",
                    complex.count(0),
                    complex.count(1),
                    complex.count(2)
                ),
            );
        }
    }
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn cmd_vr_verify(args: &VrVerifyArgs) -> Result<u8, InputError> {
    let seed = resolve_seed(args.seed);
    let schedule = default_schedule();
    let mut report = Report::new("vr verify", args.p, seed);
    report.parameter("d", args.d);
    report.parameter("maxdim", args.maxdim);
    report.parameter(
        "radii",
        schedule.chosen.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","),
    );
    let start = Instant::now();
    let lower = assemble(Row::Lower, args.d);
    let upper = assemble(Row::Upper, args.d);
    match vertex_map(&lower, &upper) {
        Ok(_) => report.pass("vertex_map", "well-defined on all shared boundary points"),
        Err(e) => {
            report.fail("vertex_map", format!("{e}"), None);
            return Ok(emit_report(&report));
        }
    }
    let diagram = match build_cl5_vr_diagram(args.d, &schedule, args.maxdim) {
        Ok(dia) => {
            report.pass(
                "vertical_maps",
                "simplicial subcomplex inclusions at all five radii",
            );
            dia
        }
        Err(e) => {
            report.fail("vertical_maps", format!("{e}"), None);
            return Ok(emit_report(&report));
        }
    };
    let rep = diagram_homology(&diagram, 1, args.p);
    let d = args.d;
    let expected: Vec<usize> = vec![
        0, d, 2 * d, 2 * d, d, // bottom
        d, 2 * d, 2 * d, d, 0, // top
    ];
    if rep.dims() == expected.as_slice() {
        report.pass("h1_dims", format!("{:?}", rep.dims()));
    } else {
        report.fail(
            "h1_dims",
            format!("got {:?}, expected {:?}", rep.dims(), expected),
            None,
        );
    }
    let model = build_m_cl5(args.d, 0, args.p);
    match are_isomorphic(&rep, &model, args.budget, seed) {
        Ok(IsoResult::Iso(_)) => report.pass("h1_iso", "H1 diagram isomorphic to M(d,0)"),
        Ok(other) => report.fail("h1_iso", format!("{other:?}"), None),
        Err(e) => report.fail("h1_iso", format!("{e}"), None),
    }
    if args.constancy_samples > 1 {
        for (cloud, tag) in [(&lower, "lower"), (&upper, "upper")] {
            let flags =
                interval_constancy_check(cloud, &schedule, args.constancy_samples, args.maxdim);
            for (i, ok) in flags.iter().enumerate() {
                if *ok {
                    report.pass(
                        format!("constancy {tag} I{}", i + 1),
                        format!("{} samples identical", args.constancy_samples),
                    );
                } else {
                    report.fail(
                        format!("constancy {tag} I{}", i + 1),
                        "sampled complexes differ inside the interval",
                        None,
                    );
                }
            }
        }
    }
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn cmd_vr_stability(args: &VrStabilityArgs) -> Result<u8, InputError> {
    let seed = resolve_seed(args.seed);
    let schedule = default_schedule();
    let mut report = Report::new("vr stability", 0, seed);
    report.parameter("d", args.d);
    report.parameter("trials", args.trials);
    let start = Instant::now();
    match stability_harness(args.d, &schedule, args.trials, seed, args.maxdim) {
        Ok(stab) => {
            report.pass(
                "spectrum_gap",
                format!("certified rho = {} >= 0.005", stab.rho),
            );
            let unchanged = stab.trials.iter().filter(|(_, _, u)| *u).count();
            if unchanged == stab.trials.len() {
                report.pass(
                    "perturbations",
                    format!("{unchanged}/{} trials left all ten complexes unchanged", stab.trials.len()),
                );
            } else {
                report.fail(
                    "perturbations",
                    format!("{}/{} trials changed a complex", stab.trials.len() - unchanged, stab.trials.len()),
                    None,
                );
            }
        }
        Err(gap) => {
            report.fail(
                "spectrum_gap",
                format!(
                    "certified rho = {} < 0.005 (tightest at r{}; the coordinate table leaves near-threshold pairs)",
                    gap.rho,
                    gap.witness.0 + 1
                ),
                Some(serde_json::json!({
                    "margins": gap.margins.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "closest_squared_distance": gap.witness.1.to_string(),
                })),
            );
            // Still exercise the perturbation machinery at the honestly
            // certified rho.
            let magnitude = &gap.rho * rational_from_decimal("0.49");
            let trials =
                perturbation_trials(args.d, &schedule, &magnitude, args.trials, seed, args.maxdim);
            let unchanged = trials.iter().filter(|(_, _, u)| *u).count();
            if unchanged == trials.len() {
                report.pass(
                    "perturbations_at_certified_rho",
                    format!("{unchanged}/{} trials unchanged at magnitude 0.49*rho_actual", trials.len()),
                );
            } else {
                report.fail(
                    "perturbations_at_certified_rho",
                    format!("{}/{} trials changed a complex", trials.len() - unchanged, trials.len()),
                    None,
                );
            }
        }
    }
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn cmd_sandal_verify(args: &SandalVerifyArgs) -> Result<u8, InputError> {
    let seed = resolve_seed(args.seed);
    let mut report = Report::new("sandal verify", args.p, seed);
    report.parameter("d", args.d);
    let start = Instant::now();
    let diagram = sandal_diagram(args.d);
    match diagram.validate() {
        Ok(()) => report.pass("diagram", "all maps simplicial, all squares commute"),
        Err(e) => {
            report.fail("diagram", format!("{e}"), None);
            return Ok(emit_report(&report));
        }
    }
    let rep = diagram_homology(&diagram, 1, args.p);
    let model = build_m_cl5(args.d, 0, args.p);
    if rep.dims() == model.dims() {
        report.pass("h1_dims", format!("{:?}", rep.dims()));
    } else {
        report.fail(
            "h1_dims",
            format!("got {:?}, expected {:?}", rep.dims(), model.dims()),
            None,
        );
    }
    match are_isomorphic(&rep, &model, args.budget, seed) {
        Ok(IsoResult::Iso(w)) => {
            let mats: Vec<io::MatrixJson> = w.matrices.iter().map(io::matrix_to_json).collect();
            report.verdicts.push(indecomp_cli::report::Verdict {
                check: "h1_iso".into(),
                status: indecomp_cli::report::Status::Pass,
                detail: "H1(S(d)) isomorphic to M(d,0)".into(),
                witness: Some(serde_json::to_value(mats).unwrap()),
            });
        }
        Ok(other) => report.fail("h1_iso", format!("{other:?}"), None),
        Err(e) => report.fail("h1_iso", format!("{e}"), None),
    }
    report.timing("total", start.elapsed().as_millis() as u64);
    Ok(emit_report(&report))
}

fn run(cli: &Cli) -> Result<u8, InputError> {
    match &cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Check(CheckCommand::Indecomp(args)) => cmd_check_indecomp(args),
        Command::Check(CheckCommand::Iso(args)) => cmd_check_iso(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::HomTable(args) => cmd_hom_table(args),
        Command::FindK22(args) => cmd_find_k22(args),
        Command::Vr(VrCommand::Build(args)) => cmd_vr_build(args),
        Command::Vr(VrCommand::Verify(args)) => cmd_vr_verify(args),
        Command::Vr(VrCommand::Stability(args)) => cmd_vr_stability(args),
        Command::Sandal(SandalCommand::Verify(args)) => cmd_sandal_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
