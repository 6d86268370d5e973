//! `zcp`: Zernike circular polynomials on the command line.
//!
//! Exit codes: 0 on success (and on a passing check), 1 for domain or
//! validation failures (and a failing check), 2 for I/O failures.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zcp_core::coefficients::{zernike_spec, AngularKind, ZernikeSpec};
use zcp_core::evaluation::{eval_zernike, inner_product, EvalPoint, QuadratureConfig};
use zcp_core::indexing::{
    ansi_to_nm, j_to_nm, nm_to_ansi, nm_to_j, nm_to_k, seq_position, validate_nm, AnsiIndex,
    BwIndex, NollIndex,
};
use zcp_core::symbolic::{
    emit_normalization, emit_radial, emit_unnormalized_zernike, SyntaxProfile,
};
use zcp_core::tablegen::{gen_long_table, gen_standalone, TableSpec};
use zcp_core::Error;

#[derive(Parser)]
#[command(name = "zcp", version, about = "Zernike circular polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between index schemes and print the full index record
    Convert(ConvertArgs),
    /// Print the symbolic expression of one polynomial
    Expr(ExprArgs),
    /// Write a LaTeX longtable for an index range
    Table(TableArgs),
    /// Evaluate one polynomial at a point of the unit disk
    Eval(EvalArgs),
    /// Verify orthonormality of a leading block by quadrature
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Noll,
    Ansi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Latex,
    Plain,
    Json,
}

#[derive(Args)]
struct ConvertArgs {
    /// Single index to convert, interpreted by --scheme
    #[arg(long, conflicts_with = "nm", required_unless_present = "nm")]
    j: Option<u64>,
    /// Double index as n,m (for example --nm 4,-2)
    #[arg(long, value_parser = parse_nm, allow_hyphen_values = true)]
    nm: Option<(i64, i64)>,
    /// Scheme of the --j argument
    #[arg(long, value_enum, default_value_t = Scheme::Noll)]
    scheme: Scheme,
}

#[derive(Args)]
struct ExprArgs {
    /// Noll index of the polynomial
    #[arg(long)]
    j: u64,
    #[arg(long, value_enum, default_value_t = Format::Latex)]
    format: Format,
    /// Drop the normalization coefficient
    #[arg(long)]
    unnormalized: bool,
}

#[derive(Args)]
struct TableArgs {
    /// First Noll index of the table
    #[arg(long)]
    jmin: u64,
    /// Last Noll index of the table (inclusive)
    #[arg(long)]
    jmax: u64,
    /// Output path of the .tex file
    #[arg(long, default_value = "zernike_table.tex")]
    out: PathBuf,
    /// Wrap the table in a complete compilable document
    #[arg(long)]
    standalone: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Noll index of the polynomial
    #[arg(long)]
    j: u64,
    /// Radial coordinate in [0, 1]
    #[arg(long, allow_hyphen_values = true)]
    rho: f64,
    /// Angular coordinate in radians
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Drop the normalization coefficient
    #[arg(long)]
    unnormalized: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Check every pair with indices up to this bound
    #[arg(long)]
    jmax: u64,
    /// Largest allowed deviation from pi times the identity
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 64)]
    radial_nodes: usize,
    #[arg(long, default_value_t = 256)]
    angular_nodes: usize,
}

fn parse_nm(text: &str) -> Result<(i64, i64), String> {
    let (n, m) = text
        .split_once(',')
        .ok_or_else(|| format!("expected n,m but got {text:?}"))?;
    let n = n.trim().parse::<i64>().map_err(|e| format!("n: {e}"))?;
    let m = m.trim().parse::<i64>().map_err(|e| format!("m: {e}"))?;
    Ok((n, m))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Convert(args) => cmd_convert(args),
        Command::Expr(args) => cmd_expr(args),
        Command::Table(args) => cmd_table(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn cmd_convert(args: ConvertArgs) -> Result<ExitCode, Error> {
    let idx: BwIndex = match (args.j, args.nm) {
        (Some(j), None) => match args.scheme {
            Scheme::Noll => j_to_nm(NollIndex::new(j)?),
            Scheme::Ansi => ansi_to_nm(AnsiIndex::new(j)),
        },
        (None, Some((n, m))) => validate_nm(n, m)?,
        _ => unreachable!("clap enforces exactly one of --j and --nm"),
    };
    println!(
        "j={} n={} m={} k={} ansi={} r={}",
        nm_to_j(idx),
        idx.n(),
        idx.m(),
        nm_to_k(idx),
        nm_to_ansi(idx),
        seq_position(idx)
    );
    Ok(ExitCode::SUCCESS)
}

fn latex_expr(spec: &ZernikeSpec, normalized: bool) -> Result<String, Error> {
    let idx = spec.idx();
    let mut buf = Vec::new();
    if normalized && spec.norm().radicand() != 1 {
        emit_normalization(&mut buf, idx)?;
        // a bare multi-term radial needs parens behind the coefficient
        if idx.m() == 0 && spec.radial().k() > 0 {
            write!(buf, "(")?;
            emit_unnormalized_zernike(&mut buf, idx)?;
            write!(buf, ")")?;
        } else {
            emit_unnormalized_zernike(&mut buf, idx)?;
        }
    } else {
        emit_unnormalized_zernike(&mut buf, idx)?;
    }
    let text = String::from_utf8(buf).expect("emitters write UTF-8");
    Ok(text.trim_end().to_string())
}

fn plain_expr(spec: &ZernikeSpec, normalized: bool) -> Result<String, Error> {
    let idx = spec.idx();
    let mut buf = Vec::new();
    emit_radial(&mut buf, idx, &SyntaxProfile::plain())?;
    let radial = String::from_utf8(buf).expect("emitters write UTF-8");
    let radial = radial.trim_end();

    let mut factors: Vec<String> = Vec::new();
    if normalized && spec.norm().radicand() != 1 {
        factors.push(format!("sqrt({})", spec.norm().radicand()));
    }
    let angular = match spec.angular().kind() {
        AngularKind::Unity => None,
        AngularKind::Cosine | AngularKind::Sine => {
            let name = if spec.angular().kind() == AngularKind::Cosine {
                "cos"
            } else {
                "sin"
            };
            Some(if spec.angular().frequency() == 1 {
                format!("{name}(theta)")
            } else {
                format!("{name}({}*theta)", spec.angular().frequency())
            })
        }
    };
    let wrap = spec.radial().k() > 0 && (!factors.is_empty() || angular.is_some());
    factors.push(if wrap {
        format!("({radial})")
    } else {
        radial.to_string()
    });
    if let Some(angular) = angular {
        factors.push(angular);
    }
    Ok(factors.join("*"))
}

fn cmd_expr(args: ExprArgs) -> Result<ExitCode, Error> {
    let spec = zernike_spec(NollIndex::new(args.j)?)?;
    let normalized = !args.unnormalized;
    let text = match args.format {
        Format::Latex => latex_expr(&spec, normalized)?,
        Format::Plain => plain_expr(&spec, normalized)?,
        Format::Json => {
            serde_json::to_string(&spec.record()).expect("record serialization cannot fail")
        }
    };
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, Error> {
    let spec = TableSpec::for_range(NollIndex::new(args.jmin)?, NollIndex::new(args.jmax)?)?;
    let file = File::create(&args.out)?;
    let mut sink = BufWriter::new(file);
    if args.standalone {
        gen_standalone(&mut sink, &spec)?;
    } else {
        gen_long_table(&mut sink, &spec)?;
    }
    sink.flush()?;
    let rows = args.jmax - args.jmin + 1;
    println!("wrote {rows} rows to {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, Error> {
    let spec = zernike_spec(NollIndex::new(args.j)?)?;
    let pt = EvalPoint::new(args.rho, args.theta)?;
    let value = eval_zernike(&spec, pt, !args.unnormalized);
    println!("{value:?}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Error> {
    let config = QuadratureConfig::new(args.radial_nodes, args.angular_nodes)?;
    let jmax = NollIndex::new(args.jmax)?.get();
    let mut worst = 0.0f64;
    let mut worst_pair = (1u64, 1u64);
    for j1 in 1..=jmax {
        for j2 in j1..=jmax {
            let value = inner_product(
                NollIndex::new(j1).expect("loop starts at 1"),
                NollIndex::new(j2).expect("loop starts at 1"),
                &config,
            )?;
            let target = if j1 == j2 { std::f64::consts::PI } else { 0.0 };
            let deviation = (value - target).abs();
            if deviation > worst {
                worst = deviation;
                worst_pair = (j1, j2);
            }
        }
    }
    println!(
        "orthonormality check: jmax={} radial_nodes={} angular_nodes={}",
        jmax, args.radial_nodes, args.angular_nodes
    );
    println!(
        "max |<Z_j,Z_j'> - pi*delta| = {:?} at (j,j') = ({},{})",
        worst, worst_pair.0, worst_pair.1
    );
    if worst <= args.tol {
        println!("tolerance {:?}: PASS", args.tol);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("tolerance {:?}: FAIL", args.tol);
        Ok(ExitCode::from(1))
    }
}
