//! Command-line front end: parse group/ring/element specs, build codes,
//! print matrices and parameters, export alist files, and run the built-in
//! verification table.
//!
//! Exit codes: 0 success, 1 parse errors, 2 algebraic precondition failures
//! (printed with their certificate), 3 resource caps, 4 verification table
//! failures.

mod verify;

use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use grcodes::codes::{
    self, best_basis, min_distance, write_bundle, CodeKind, DistanceOptions, LinearCode, Side,
};
use grcodes::constructions::{alist::write_alist, cyclic_code, qc_ldpc, LdpcPlan};
use grcodes::error::Error;
use grcodes::rgmatrix::{rg_matrix, AnyMatrix};
use grcodes::{
    classify, greedy_basis, parse_element, Classification, Group, GroupRingElement, GroupSpec,
    RingSpec, SubmoduleBasis,
};

#[derive(Parser)]
#[command(name = "grcodes", version, about = "codes from group ring encodings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ElemArgs {
    /// Group spec: C<n>, D<2n>, E2^<m>, products with x (e.g. C4xC2)
    #[arg(long)]
    group: String,
    /// Coefficient ring: gf<p> or z
    #[arg(long, default_value = "gf2")]
    ring: String,
    /// Element text, e.g. "1 + g^2 + g^5"
    #[arg(long)]
    elem: String,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    elem: ElemArgs,
    /// Basis: auto | first:<r> | indices:<k1,k2,...> | best:<r>[:budget]
    #[arg(long, default_value = "auto")]
    basis: String,
    /// zd | unit | auto (classify and pick)
    #[arg(long, default_value = "auto")]
    kind: String,
    /// right | left encoding
    #[arg(long, default_value = "right")]
    side: String,
    /// Seed for randomized searches (best-basis restarts)
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify an element as unit / zero-divisor / neither, with certificate
    Classify {
        #[command(flatten)]
        elem: ElemArgs,
    },
    /// Print the RG-matrix sigma(u)
    Matrix {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Build a zero-divisor or unit-derived code and emit its bundle
    Code {
        #[command(flatten)]
        code: CodeArgs,
        /// Also compute the exact minimum distance
        #[arg(long)]
        distance: bool,
        /// text | json-summary
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Exact minimum distance (or a labeled sampled upper bound)
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Sample count for the upper-bound estimator instead of exact search
        #[arg(long)]
        estimate: Option<u64>,
    },
    /// Dual code bundle
    Dual {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Self-duality report: u*u^T = 0, u^2 = 0, rank = n/2
    Selfdual {
        #[command(flatten)]
        elem: ElemArgs,
    },
    /// Is the code Wu an ideal?
    Ideal {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Cyclic code of an element: gcd generator, check polynomial, code
    Cyclic {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        distance: bool,
    },
    /// Regular (j,k) QC-LDPC code over GF(2)(G x H)
    Ldpc {
        /// Base group G (block size m)
        #[arg(long)]
        base: String,
        /// Label group H (k blocks per side)
        #[arg(long)]
        labels: String,
        /// Number of block rows j (plan drawn from --seed)
        #[arg(long)]
        j: Option<usize>,
        /// Explicit assignment f as comma-separated element texts in G
        #[arg(long)]
        assign: Option<String>,
        /// Explicit block rows as comma-separated H listing indices
        #[arg(long)]
        rows: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// alist | text | json-summary
        #[arg(long, default_value = "alist")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the built-in verification table of example-code claims
    VerifyPaper {
        /// Include the long-running entries
        #[arg(long)]
        extended: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version exit cleanly; real parse errors exit 1
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidGroupSpec(_)
        | Error::InvalidRingSpec(_)
        | Error::ElementSyntax { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidPlan(_)
        | Error::InvalidBasis(_) => 1,
        Error::GroupMismatch
        | Error::RingMismatch
        | Error::UnsupportedOverIntegers(_)
        | Error::ZeroElement
        | Error::NotAUnit { .. }
        | Error::NotAZeroDivisor
        | Error::EmptyCheckCode
        | Error::DependentBasis { .. }
        | Error::NoRightInverse { .. } => 2,
        Error::DenseLimitExceeded { .. } | Error::DistanceCapExceeded { .. } => 3,
    }
}

fn parse_elem_args(args: &ElemArgs) -> grcodes::Result<(Arc<Group>, RingSpec, GroupRingElement)> {
    let spec = GroupSpec::parse(&args.group)?;
    let group = grcodes::make_group(spec)?;
    let ring = RingSpec::parse(&args.ring)?;
    let elem = parse_element(&args.elem, &group, ring)?;
    Ok((group, ring, elem))
}

fn distance_options(threads: usize) -> DistanceOptions {
    let mut opts = DistanceOptions { threads, ..DistanceOptions::default() };
    if let Ok(cap) = std::env::var("GRCODES_DISTANCE_CAP") {
        if let Ok(bits) = cap.trim().parse::<u32>() {
            opts.cap_bits = bits;
        }
    }
    opts
}

enum BasisSpec {
    Auto,
    First(usize),
    Indices(Vec<usize>),
    Best { r: usize, budget: u64 },
}

fn parse_basis_spec(text: &str) -> grcodes::Result<BasisSpec> {
    let bad = |msg: &str| Error::InvalidArgument(format!("bad --basis {text:?}: {msg}"));
    if text == "auto" {
        return Ok(BasisSpec::Auto);
    }
    if let Some(rest) = text.strip_prefix("first:") {
        return rest.parse().map(BasisSpec::First).map_err(|_| bad("expected first:<r>"));
    }
    if let Some(rest) = text.strip_prefix("indices:") {
        let mut indices = Vec::new();
        for part in rest.split(',') {
            indices.push(part.trim().parse::<usize>().map_err(|_| bad("bad index"))?);
        }
        return Ok(BasisSpec::Indices(indices));
    }
    if let Some(rest) = text.strip_prefix("best:") {
        let mut parts = rest.split(':');
        let r = parts
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| bad("expected best:<r>[:budget]"))?;
        let budget = match parts.next() {
            Some(t) => t.parse::<u64>().map_err(|_| bad("bad budget"))?,
            None => 100_000,
        };
        return Ok(BasisSpec::Best { r, budget });
    }
    Err(bad("expected auto | first:<r> | indices:<...> | best:<r>[:budget]"))
}

fn parse_side(text: &str) -> grcodes::Result<Side> {
    match text {
        "right" => Ok(Side::Right),
        "left" => Ok(Side::Left),
        other => Err(Error::InvalidArgument(format!("bad --side {other:?}"))),
    }
}

/// Resolves the basis and builds the requested code.
fn build_code(args: &CodeArgs) -> grcodes::Result<LinearCode> {
    let (_, _, elem) = parse_elem_args(&args.elem)?;
    let side = parse_side(&args.side)?;
    let n = elem.order();
    let kind = match args.kind.as_str() {
        "zd" | "unit" | "auto" => args.kind.as_str(),
        other => return Err(Error::InvalidArgument(format!("bad --kind {other:?}"))),
    };
    let is_unit = match kind {
        "zd" => false,
        "unit" => true,
        _ => classify(&elem)?.is_unit(),
    };
    let basis = match parse_basis_spec(&args.basis)? {
        BasisSpec::Auto => {
            if is_unit {
                return Err(Error::InvalidArgument(
                    "--basis auto is only valid for zero-divisors; pass first:<r>, \
                     indices:<...> or best:<r>"
                        .into(),
                ));
            }
            greedy_basis(&elem)?
        }
        BasisSpec::First(r) => SubmoduleBasis::first(r, n)?,
        BasisSpec::Indices(idx) => SubmoduleBasis::new(idx, n)?,
        BasisSpec::Best { r, budget } => best_basis(&elem, r, budget, args.seed)?.basis,
    };
    if is_unit {
        codes::unit_code(&elem, &basis, side)
    } else {
        codes::zero_divisor_code(&elem, &basis, side)
    }
}

fn emit(out: &Option<String>, content: &str) -> grcodes::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}"))),
        None => {
            std::io::stdout().write_all(content.as_bytes()).expect("stdout");
            Ok(())
        }
    }
}

fn matrix_text(m: &AnyMatrix, ring: RingSpec) -> String {
    let mut out = String::new();
    match m {
        AnyMatrix::Field(f) => {
            out.push_str(&format!("{} {} {}\n", f.rows(), f.cols(), ring));
            for i in 0..f.rows() {
                let row: Vec<String> = (0..f.cols()).map(|j| f.get(i, j).to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        AnyMatrix::Int(z) => {
            out.push_str(&format!("{} {} {}\n", z.rows(), z.cols(), ring));
            for i in 0..z.rows() {
                let row: Vec<String> = (0..z.cols()).map(|j| z.get(i, j).to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

fn json_summary(code: &LinearCode, distance: Option<usize>) -> String {
    let prov = code.provenance();
    let value = serde_json::json!({
        "schema": 1,
        "n": code.n(),
        "k": code.k(),
        "d": distance,
        "group": prov.element.group().spec().to_string(),
        "ring": prov.element.ring().to_string(),
        "element": prov.element.to_compact_text(),
        "basis": prov.basis.as_ref().map(|b| b.indices().to_vec()),
        "side": match prov.side { Side::Right => "right", Side::Left => "left" },
        "kind": match prov.kind {
            CodeKind::ZeroDivisor => "zero-divisor",
            CodeKind::UnitDerived => "unit-derived",
            CodeKind::CheckDerived => "check-derived",
            CodeKind::GenericDual => "generic-dual",
        },
        "note": prov.note,
    });
    format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
}

fn run(cli: Cli) -> grcodes::Result<ExitCode> {
    match cli.cmd {
        Cmd::Classify { elem } => {
            let (_, _, u) = parse_elem_args(&elem)?;
            match classify(&u)? {
                Classification::Unit { inverse } => {
                    if inverse == u {
                        println!("unit; inverse = self");
                    } else {
                        println!("unit; inverse = {inverse}");
                    }
                }
                Classification::ZeroDivisor { witness } => {
                    println!("zero-divisor; witness = {witness}");
                }
                Classification::Neither { det } => {
                    println!("neither; det = {det}");
                }
            }
        }
        Cmd::Matrix { elem, out } => {
            let (_, ring, u) = parse_elem_args(&elem)?;
            let m = rg_matrix(&u);
            let dense = match ring {
                RingSpec::Gf(_) => AnyMatrix::Field(m.field()?.clone()),
                RingSpec::Integers => AnyMatrix::Int(m.int()?.clone()),
            };
            emit(&out, &matrix_text(&dense, ring))?;
        }
        Cmd::Code { code, distance, format, out, threads } => {
            let mut c = build_code(&code)?;
            let d = if distance {
                Some(min_distance(&mut c, &distance_options(threads))?)
            } else {
                None
            };
            let content = match format.as_str() {
                "text" => {
                    let mut text = write_bundle(&c);
                    if let Some(d) = d {
                        text.push_str(&format!("\ndistance {d}\n"));
                    }
                    text
                }
                "json-summary" => json_summary(&c, d),
                other => {
                    return Err(Error::InvalidArgument(format!("bad --format {other:?}")));
                }
            };
            emit(&out, &content)?;
        }
        Cmd::Distance { code, threads, estimate } => {
            let mut c = build_code(&code)?;
            match estimate {
                Some(samples) => {
                    let bound = codes::distance_upper_bound(&c, samples, code.seed);
                    println!(
                        "upper-bound {bound} (sampled, {samples} samples, seed {}; not exact)",
                        code.seed
                    );
                }
                None => {
                    let d = min_distance(&mut c, &distance_options(threads))?;
                    println!("distance {d}");
                }
            }
        }
        Cmd::Dual { code, out } => {
            let c = build_code(&code)?;
            let d = codes::dual(&c)?;
            emit(&out, &write_bundle(&d))?;
        }
        Cmd::Selfdual { elem } => {
            let (_, _, u) = parse_elem_args(&elem)?;
            let report = codes::is_self_dual(&u)?;
            println!("u*u^T = 0: {}", report.transpose_annihilates);
            println!("u^2 = 0:   {}", report.self_check);
            println!("rank = n/2: {} (rank {})", report.half_rank, report.rank);
            println!("self-dual: {}", report.self_dual);
        }
        Cmd::Ideal { code } => {
            let (_, _, u) = parse_elem_args(&code.elem)?;
            let n = u.order();
            let basis = match parse_basis_spec(&code.basis)? {
                BasisSpec::Auto => greedy_basis(&u)?,
                BasisSpec::First(r) => SubmoduleBasis::first(r, n)?,
                BasisSpec::Indices(idx) => SubmoduleBasis::new(idx, n)?,
                BasisSpec::Best { .. } => {
                    return Err(Error::InvalidArgument(
                        "--basis best makes no sense for the ideal test".into(),
                    ));
                }
            };
            println!("ideal: {}", codes::is_ideal(&u, &basis)?);
        }
        Cmd::Cyclic { elem, distance } => {
            let (_, _, h) = parse_elem_args(&elem)?;
            let mut cc = cyclic_code(&h)?;
            println!("generator d(g): {}", poly_line(&cc.pair.generator));
            println!("check p(g):     {}", poly_line(&cc.pair.check));
            if distance {
                let d = min_distance(&mut cc.code, &distance_options(1))?;
                println!("code: ({},{},{d})", cc.code.n(), cc.code.k());
            } else {
                println!("code: ({},{})", cc.code.n(), cc.code.k());
            }
            print!("{}", write_bundle(&cc.code));
        }
        Cmd::Ldpc { base, labels, j, assign, rows, seed, format, out } => {
            let base = GroupSpec::parse(&base)?;
            let labels = GroupSpec::parse(&labels)?;
            let plan = build_plan(base, labels, j, assign, rows, seed)?;
            let result = qc_ldpc(&plan)?;
            let content = match format.as_str() {
                "alist" => {
                    let mut text = format!(
                        "# qc-ldpc base={} labels={} j={} seed={}\n",
                        plan.base,
                        plan.labels,
                        plan.block_rows.len(),
                        plan.seed.map(|s| s.to_string()).unwrap_or_else(|| "-".into()),
                    );
                    text.push_str(&write_alist(&result.check)?);
                    text
                }
                "text" => {
                    let mut text = format!(
                        "# qc-ldpc base={} labels={} j={} seed={} target-rate={:.4} exact-rate={:.4}\n",
                        plan.base,
                        plan.labels,
                        plan.block_rows.len(),
                        plan.seed.map(|s| s.to_string()).unwrap_or_else(|| "-".into()),
                        result.target_rate,
                        result.exact_rate,
                    );
                    text.push_str(&matrix_text(
                        &AnyMatrix::Field(result.check.clone()),
                        RingSpec::gf(2).unwrap(),
                    ));
                    text
                }
                "json-summary" => {
                    let value = serde_json::json!({
                        "schema": 1,
                        "n": result.code.n(),
                        "k": result.code.k(),
                        "base": plan.base.to_string(),
                        "labels": plan.labels.to_string(),
                        "j": plan.block_rows.len(),
                        "seed": plan.seed,
                        "target_rate": result.target_rate,
                        "exact_rate": result.exact_rate,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
                }
                other => {
                    return Err(Error::InvalidArgument(format!("bad --format {other:?}")));
                }
            };
            emit(&out, &content)?;
        }
        Cmd::VerifyPaper { extended } => {
            let (pass, fail) = verify::run_table(extended);
            println!("{pass} passed, {fail} failed");
            if fail > 0 {
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn poly_line(p: &grcodes::poly::Poly) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "g".into(),
            (1, c) => format!("{c}*g"),
            (i, 1) => format!("g^{i}"),
            (i, c) => format!("{c}*g^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn build_plan(
    base: GroupSpec,
    labels: GroupSpec,
    j: Option<usize>,
    assign: Option<String>,
    rows: Option<String>,
    seed: u64,
) -> grcodes::Result<LdpcPlan> {
    match (assign, rows) {
        (None, None) => {
            let j = j.ok_or_else(|| {
                Error::InvalidArgument("pass --j for a seeded plan, or --assign/--rows".into())
            })?;
            LdpcPlan::seeded(base, labels, j, seed)
        }
        (assign, rows) => {
            let bg = grcodes::make_group(base.clone())?;
            let assignment = match assign {
                Some(text) => {
                    let ring = RingSpec::gf(2).unwrap();
                    let mut f = Vec::new();
                    for part in text.split(',') {
                        let e = parse_element(part.trim(), &bg, ring)?;
                        let support = e.support();
                        if support.len() != 1 || e.coeff(support[0]) != 1 {
                            return Err(Error::InvalidArgument(format!(
                                "assignment entry {part:?} is not a single group element"
                            )));
                        }
                        f.push(support[0]);
                    }
                    f
                }
                None => {
                    return Err(Error::InvalidArgument(
                        "--rows without --assign; pass both or use --j".into(),
                    ));
                }
            };
            let block_rows = match rows {
                Some(text) => {
                    let mut out = Vec::new();
                    for part in text.split(',') {
                        out.push(part.trim().parse::<usize>().map_err(|_| {
                            Error::InvalidArgument(format!("bad block row {part:?}"))
                        })?);
                    }
                    out
                }
                None => {
                    let j = j.ok_or_else(|| {
                        Error::InvalidArgument("pass --rows or --j with --assign".into())
                    })?;
                    (0..j).collect()
                }
            };
            let plan = LdpcPlan { base, labels, assignment, block_rows, seed: None };
            plan.validate()?;
            Ok(plan)
        }
    }
}
