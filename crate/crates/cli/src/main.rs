use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deltoid::characters::{partitions, verify_su3_eigen, CharacterTable};
use deltoid::io::{table_from_json, table_to_json, PolyJson};
use deltoid::operator::{apply_l, gamma};
use deltoid::quadrature::{gram_matrix, integrability_probe, TriangleGrid};
use deltoid::recurrence::{check_eigen, check_gamma_recurrence};
use deltoid::series::{
    check_delta_identity, check_generating, check_hat_l_product, check_l_action_on_p, f_compatible,
    generating_series, geometric_genfun_flat, geometric_genfun_su3,
};
use deltoid::traces::TraceSeq;
use deltoid::{parse_rational, rat, AlphaParam, CheckReport, PolyTableQ, Rational, Scalar};

/// Environment variable naming the directory for artifacts when `--out` is absent.
const OUT_DIR_VAR: &str = "DELTOID_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "deltoid",
    version,
    about = "Orthogonal polynomials on the deltoid: build, check, export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the table of P(p,q) and print it
    Build(TableArgs),
    /// Check L P = -lambda_{p,q} P for every entry
    CheckEigen(CheckArgs),
    /// Check the three-term expansion of Gamma(Z, P)
    CheckGamma(CheckArgs),
    /// Print trace polynomials and check their L and Gamma formulas
    Traces(TracesArgs),
    /// Character table of S_n and the associated eigenvectors at lambda = 4
    Characters(CharactersArgs),
    /// Generating-function coefficients and identities
    Genfun(GenfunArgs),
    /// Weighted Gram correlation matrix as CSV
    Gram(GramArgs),
    /// Total weighted mass over refinement levels as CSV
    Probe(ProbeArgs),
    /// Write the exact table as JSON or LaTeX
    Export(TableArgs),
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// lambda as "p/q", integer or decimal
    #[arg(long, conflicts_with = "alpha", allow_hyphen_values = true)]
    lambda: Option<String>,
    /// alpha as "p/q", integer or decimal; lambda = (6 alpha + 5) / 2
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<AlphaParam> {
        let p = match (&self.lambda, &self.alpha) {
            (Some(l), None) => AlphaParam::from_lambda(parse_rational(l)?)?,
            (None, Some(a)) => AlphaParam::from_alpha(parse_rational(a)?)?,
            _ => bail!("exactly one of --lambda or --alpha is required"),
        };
        Ok(p)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    param: ParamArgs,
    #[arg(long, default_value_t = 4)]
    degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    param: ParamArgs,
    #[arg(long, default_value_t = 8)]
    degree: u32,
    /// Check a table read from JSON instead of building one
    #[arg(long, conflicts_with_all = ["lambda", "alpha"])]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct TracesArgs {
    #[command(flatten)]
    param: ParamArgs,
    #[arg(long, default_value_t = 6)]
    max: u32,
}

#[derive(Args)]
struct CharactersArgs {
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct GenfunArgs {
    #[command(flatten)]
    param: ParamArgs,
    #[arg(long, default_value_t = 8)]
    order: u32,
    /// Bivariate checks up to index 5 instead of the one-variable coefficients
    #[arg(long)]
    bivariate: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GramArgs {
    #[command(flatten)]
    param: ParamArgs,
    #[arg(long, default_value_t = 4)]
    degree: u32,
    #[arg(long, default_value_t = 6)]
    level: u32,
    /// Largest accepted off-diagonal correlation
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProbeArgs {
    /// alpha as a decimal or "p/q"
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// Levels as "a:b" or a comma list
    #[arg(long, default_value = "4:10")]
    levels: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!("usage: deltoid <build|check-eigen|check-gamma|traces|characters|genfun|gram|probe|export> [options]");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Build(a) => build(&a),
        Command::Export(a) => export(&a),
        Command::CheckEigen(a) => {
            let t = load_table(&a)?;
            Ok(print_report(&check_eigen(&t)))
        }
        Command::CheckGamma(a) => {
            let t = load_table(&a)?;
            Ok(print_report(&check_gamma_recurrence(&t)))
        }
        Command::Traces(a) => traces(&a),
        Command::Characters(a) => characters(&a),
        Command::Genfun(a) => genfun(&a),
        Command::Gram(a) => gram(&a),
        Command::Probe(a) => probe(&a),
    }
}

fn print_report(r: &CheckReport) -> bool {
    println!("{}", r.to_string().trim_end());
    for f in &r.failures {
        println!("  fail: {f}");
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
    r.passed()
}

/// Writes to `--out`, else into the directory named by the environment, else to stdout.
fn emit(out: Option<&Path>, default_name: &str, content: &str) -> Result<()> {
    let path = match out {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(OUT_DIR_VAR).map(|d| PathBuf::from(d).join(default_name)),
    };
    match path {
        Some(p) => {
            std::fs::write(&p, content).with_context(|| format!("writing {}", p.display()))?;
            println!("wrote {}", p.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn slug(r: &Rational) -> String {
    r.to_string().replace('/', "_")
}

fn table_latex(t: &PolyTableQ) -> String {
    let mut s = String::new();
    for (p, q, poly) in t.iter() {
        s.push_str(&format!("P_{{{p},{q}}} &= {} \\\\\n", poly.to_latex()));
    }
    s
}

fn render_table(t: &PolyTableQ, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(table_to_json(t)? + "\n"),
        Format::Latex => Ok(table_latex(t)),
        Format::Csv => bail!("tables are available as json or latex"),
    }
}

fn build(a: &TableArgs) -> Result<bool> {
    let param = a.param.resolve()?;
    let t = PolyTableQ::build(param.lambda(), a.degree)?;
    println!(
        "lambda = {}, alpha = {}, degree <= {}",
        param.lambda(),
        param.alpha(),
        a.degree
    );
    for (p, q, poly) in t.iter() {
        println!("P({p},{q}) = {poly}");
    }
    if a.out.is_some() {
        emit(a.out.as_deref(), "", &render_table(&t, a.format)?)?;
    }
    Ok(true)
}

fn export(a: &TableArgs) -> Result<bool> {
    let param = a.param.resolve()?;
    let t = PolyTableQ::build(param.lambda(), a.degree)?;
    let ext = if a.format == Format::Latex {
        "tex"
    } else {
        "json"
    };
    let name = format!("table_{}_{}.{ext}", slug(param.lambda()), a.degree);
    emit(a.out.as_deref(), &name, &render_table(&t, a.format)?)?;
    Ok(true)
}

fn load_table(a: &CheckArgs) -> Result<PolyTableQ> {
    match &a.table {
        Some(path) => {
            let s = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(table_from_json(&s)?)
        }
        None => {
            let param = a.param.resolve()?;
            Ok(PolyTableQ::build(param.lambda(), a.degree)?)
        }
    }
}

fn traces(a: &TracesArgs) -> Result<bool> {
    let param = if a.param.lambda.is_none() && a.param.alpha.is_none() {
        AlphaParam::from_alpha(rat(1, 2))?
    } else {
        a.param.resolve()?
    };
    let mut s = TraceSeq::<Rational>::new();
    for p in 0..=a.max {
        println!("T_{p} = {}", s.trace(i64::from(p)));
    }
    let mut r = CheckReport::new(format!("trace identities alpha={}", param.alpha()));
    for p in 1..=a.max {
        let direct = apply_l(param.lambda(), &s.trace(i64::from(p)));
        let formula = s.l_on_trace(&param, p);
        r.record(direct == formula, || format!("L T_{p}"));
        for q in 1..=p {
            let g = gamma(&s.trace(i64::from(p)), &s.trace(i64::from(q)));
            r.record(g == s.gamma_traces(p, q), || format!("Gamma(T_{p}, T_{q})"));
        }
    }
    Ok(print_report(&r))
}

fn characters(a: &CharactersArgs) -> Result<bool> {
    if a.n == 0 {
        bail!("--n must be positive");
    }
    let t = CharacterTable::new(a.n);
    print!("{t}");
    let table = PolyTableQ::build(&rat(4, 1), a.n)?;
    let mut ok = true;
    for shape in partitions(a.n) {
        let e = verify_su3_eigen(&shape, &table);
        let mu = e.mu.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
        let exp: Vec<String> = e
            .expansion
            .iter()
            .map(|(p, q, c)| format!("{c}*P({p},{q})"))
            .collect();
        println!(
            "{shape}: Q = {}  mu = {mu}  Q = {}",
            e.poly,
            if exp.is_empty() {
                "0".into()
            } else {
                exp.join(" + ")
            }
        );
        ok &= print_report(&e.report);
    }
    Ok(ok)
}

fn genfun(a: &GenfunArgs) -> Result<bool> {
    let param = a.param.resolve()?;
    let lam = param.lambda().clone();
    let mut ok = true;
    if a.bivariate {
        let mut lines = Vec::new();
        if lam == rat(1, 1) {
            ok &= print_report(&geometric_genfun_flat(5));
        } else if lam == rat(4, 1) {
            let (r, scalars) = geometric_genfun_su3(5, &PolyTableQ::build(&lam, 10)?);
            ok &= print_report(&r);
            lines.push("m,n,scalar".to_string());
            for (m, row) in scalars.iter().enumerate() {
                for (n, s) in row.iter().enumerate() {
                    let v = s.as_ref().map(|v| v.to_string()).unwrap_or_default();
                    lines.push(format!("{m},{n},{v}"));
                }
            }
        }
        if lam != rat(1, 1) {
            ok &= print_report(&check_hat_l_product(&lam, 5, 5));
            ok &= print_report(&check_delta_identity(&lam, 5));
        }
        println!("F compatibility at lambda={lam}: {}", f_compatible(&lam));
        if !lines.is_empty() {
            let name = format!("genfun2_{}.csv", slug(&lam));
            emit(a.out.as_deref(), &name, &(lines.join("\n") + "\n"))?;
        }
        return Ok(ok);
    }
    let q = generating_series(&lam, a.order as usize)?;
    let content = match a.format {
        Format::Json => {
            let coeffs: Vec<serde_json::Value> = (0..=a.order as usize)
                .map(|n| serde_json::json!({ "n": n, "poly": PolyJson::from(q.coeff(n)) }))
                .collect();
            let v = serde_json::json!({ "lambda": lam.to_string(), "order": a.order, "coefficients": coeffs });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Latex => (0..=a.order as usize)
            .map(|n| format!("A_{{{n}}} &= {} \\\\\n", q.coeff(n).to_latex()))
            .collect(),
        Format::Csv => bail!("genfun output is json or latex"),
    };
    let ext = if a.format == Format::Latex {
        "tex"
    } else {
        "json"
    };
    emit(
        a.out.as_deref(),
        &format!("genfun_{}_{}.{ext}", slug(&lam), a.order),
        &content,
    )?;
    ok &= print_report(&check_generating(
        &PolyTableQ::build(&lam, a.order)?,
        a.order,
    ));
    ok &= print_report(&check_l_action_on_p(&lam));
    Ok(ok)
}

fn gram(a: &GramArgs) -> Result<bool> {
    let param = a.param.resolve()?;
    let t = PolyTableQ::build(param.lambda(), a.degree)?;
    let g = gram_matrix(&t, &TriangleGrid::uniform(a.level));
    let name = format!("gram_{}_{}_{}.csv", slug(param.lambda()), a.degree, a.level);
    emit(a.out.as_deref(), &name, &g.to_csv())?;
    let off = g.max_off_diagonal();
    let ok = off < a.tol && g.max_imag < 1e-10;
    println!(
        "{} gram alpha={} degree<={} level={}: max off-diagonal {off:.3e}, max imaginary {:.3e}",
        if ok { "PASS" } else { "FAIL" },
        param.alpha(),
        a.degree,
        a.level,
        g.max_imag
    );
    Ok(ok)
}

fn parse_levels(s: &str) -> Result<Vec<u32>> {
    let levels: Vec<u32> = match s.split_once(':') {
        Some((a, b)) => (a.trim().parse()?..=b.trim().parse()?).collect(),
        None => s
            .split(',')
            .map(|v| v.trim().parse())
            .collect::<std::result::Result<_, _>>()?,
    };
    if levels.is_empty() || levels.windows(2).any(|w| w[0] >= w[1]) {
        bail!("levels must be nonempty and increasing");
    }
    Ok(levels)
}

fn probe(a: &ProbeArgs) -> Result<bool> {
    let alpha = Scalar::to_f64(&parse_rational(&a.alpha)?);
    let levels = parse_levels(&a.levels)?;
    let mut csv = String::from("level,mass\n");
    for (l, m) in integrability_probe(alpha, &levels) {
        csv.push_str(&format!("{l},{m:.12e}\n"));
    }
    emit(
        a.out.as_deref(),
        &format!("probe_{}.csv", a.alpha.replace('/', "_")),
        &csv,
    )?;
    Ok(true)
}
