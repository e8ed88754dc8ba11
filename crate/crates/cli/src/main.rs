use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfusion_core::diamond::{parse_presentation, Monomial, NCPoly, RewriteSystem, Strategy};
use hfusion_core::freeprod::{alt_dim, psi};
use hfusion_core::fusion::{dim, dual, fuse, fusion_table, Word};
use hfusion_core::predicates::{hopf_isomorphic, IsoVerdict};
use hfusion_core::presentations::{
    build_aaut, build_freeprod, build_hef, build_hplusq, build_hq, build_slq2, check_morphism, pi_images,
};
use hfusion_core::{Error, ExactMatrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hfusion",
    version,
    about = "Fusion rules and rewriting checks for universal cosovereign Hopf algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Length bound for tables, bases and freeness checks.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Seed for randomized spot-checks; recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Skip the hypothesis checks of the H(E,F) builder.
    #[arg(long, global = true)]
    unchecked: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose U_x ⊗ U_y into simple labels.
    Fuse {
        x: String,
        y: String,
        /// Also print dimensions for an n×n parameter matrix.
        #[arg(short = 'n')]
        n: Option<u64>,
    },
    /// Label of the dual comodule.
    Dual { x: String },
    /// Dimension of U_x for an n×n parameter matrix.
    Dim {
        x: String,
        #[arg(short = 'n', default_value_t = 2)]
        n: u64,
    },
    /// Image of a label in the free-product representation ring.
    Psi { x: String },
    /// All products of labels up to --max-len (default 2).
    Table,
    /// Ambiguity and confluence report; exit 1 if not confluent.
    Check(PresentationArgs),
    /// Reduced monomials up to --max-len (default 3).
    Basis(PresentationArgs),
    /// Whether the given generators span a free subalgebra up to --max-len (default 4).
    FreeCheck {
        #[command(flatten)]
        presentation: PresentationArgs,
        /// Comma-separated generator names; defaults to all u_ij for hef.
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
    },
    /// Print a presentation in the rewrite-system file format.
    Export(PresentationArgs),
    /// Whether H(E) and H(F) are isomorphic; exit 1 if not.
    Iso {
        /// Matrix file for E (generic)
        #[arg(long = "E")]
        e: PathBuf,
        /// Matrix file for F (generic)
        #[arg(long = "F")]
        f: PathBuf,
    },
    /// Check the morphism from H(q) into the free product; exit 1 on failure.
    VerifyPi {
        #[arg(long, default_value = "sym")]
        q: String,
        /// Replace the image of beta by z.c (negative control).
        #[arg(long)]
        corrupt: bool,
    },
    /// Relations of the quantum automorphism algebra of (M_n, tr_F).
    AautRelations {
        /// Matrix file for F; defaults to diag(q^-1, q).
        #[arg(long = "F")]
        f: Option<PathBuf>,
        #[arg(long, default_value = "sym")]
        q: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Hef,
    Hq,
    Hplus,
    Slq2,
    Freeprod,
    File,
}

#[derive(Args)]
struct PresentationArgs {
    kind: Kind,
    /// Matrix file for E (hef).
    #[arg(long = "E")]
    e: Option<PathBuf>,
    /// Matrix file for F (hef).
    #[arg(long = "F")]
    f: Option<PathBuf>,
    /// Parameter: `sym` for a formal variable, or a rational such as 3/2.
    #[arg(long, default_value = "sym")]
    q: String,
    /// Presentation file (file).
    #[arg(long)]
    file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotConfluent(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Outcome {
    text: String,
    json: Value,
    positive: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, positive: true }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("word '{s}': {e}")))
}

fn scalar_q(s: &str) -> Result<Scalar, Failure> {
    if s == "sym" {
        return Ok(Scalar::q());
    }
    Scalar::parse(s).map_err(|e| Failure::Usage(format!("--q '{s}': {e}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn matrix(path: &Path) -> Result<ExactMatrix, Failure> {
    ExactMatrix::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str, kind: &str) -> Result<&'a Path, Failure> {
    p.as_deref().ok_or_else(|| Failure::Usage(format!("{kind} requires {flag}")))
}

fn load(args: &PresentationArgs, unchecked: bool) -> Result<(String, RewriteSystem), Failure> {
    let q = || scalar_q(&args.q);
    Ok(match args.kind {
        Kind::Hef => {
            let e = matrix(required(&args.e, "--E", "hef")?)?;
            let f = matrix(required(&args.f, "--F", "hef")?)?;
            ("HEF".into(), build_hef(&e, &f, !unchecked)?.system)
        }
        Kind::Hq => ("HQ".into(), build_hq(&q()?)?.system),
        Kind::Hplus => ("HPLUSQ".into(), build_hplusq(&q()?)?.system),
        Kind::Slq2 => ("SLQ2".into(), build_slq2(&q()?)?.system),
        Kind::Freeprod => ("FREEPROD".into(), build_freeprod(&q()?)?.system),
        Kind::File => {
            let path = required(&args.file, "--file", "file")?;
            let p = parse_presentation(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (p.name.unwrap_or_else(|| path.display().to_string()), p.system)
        }
    })
}

fn cmd_fuse(x: &str, y: &str, n: Option<u64>) -> CmdResult {
    let (x, y) = (word(x)?, word(y)?);
    let p = fuse(&x, &y);
    let mut text = p.to_string();
    let mut j = json!({ "x": x, "y": y, "product": p });
    if let Some(n) = n {
        let dims: Vec<_> = p.terms().rev().map(|(w, _)| dim(w, n)).collect::<Result<_, _>>()?;
        let (dx, dy) = (dim(&x, n)?, dim(&y, n)?);
        let total: num_bigint::BigInt = dims.iter().sum();
        if total != &dx * &dy {
            return Err(Failure::Negative(format!("dimension identity fails: {total} != {dx}·{dy}")));
        }
        let parts: Vec<String> = dims.iter().map(ToString::to_string).collect();
        write!(text, "\ndims (n = {n}): {} = {total} = {dx}·{dy}", parts.join(" + ")).unwrap();
        j["n"] = json!(n);
        j["dims"] = json!(parts);
        j["total"] = json!(total.to_string());
    }
    Ok(Outcome::ok(text, j))
}

fn cmd_psi(x: &str) -> CmdResult {
    let x = word(x)?;
    let p = psi(&x);
    let w = p.as_simple().expect("psi of a label is simple").clone();
    let d = alt_dim(&w);
    Ok(Outcome::ok(
        format!("{w} (dim {d})"),
        json!({ "x": x, "psi": w, "rendered": w.to_string(), "dim": d.to_string() }),
    ))
}

fn cmd_table(max_len: usize, format: Format) -> CmdResult {
    let table = fusion_table(max_len)?;
    let mut text = String::new();
    for e in &table {
        writeln!(text, "{} ⊙ {} = {}", e.x, e.y, e.product).unwrap();
    }
    write!(text, "{} entries", table.len()).unwrap();
    let j = if format == Format::Json { serde_json::to_value(&table).expect("serializable") } else { Value::Null };
    Ok(Outcome::ok(text, j))
}

fn random_poly(r: &mut impl Rng, gens: u32) -> NCPoly {
    let terms = r.gen_range(1..=4);
    NCPoly::from_terms((0..terms).map(|_| {
        let len = r.gen_range(0..=4);
        let c = loop {
            let c = r.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        (Scalar::int(c), Monomial::new((0..len).map(|_| r.gen_range(0..gens)).collect()))
    }))
}

/// Reduces random polynomials both ways; returns the first disagreement.
fn strategy_spot_check(sys: &RewriteSystem, seed: u64, count: usize) -> Option<String> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let gens = sys.alphabet().len() as u32;
    if gens == 0 {
        return None;
    }
    (0..count).find_map(|_| {
        let p = random_poly(&mut r, gens);
        (sys.reduce_with(&p, Strategy::Leftmost) != sys.reduce_with(&p, Strategy::Rightmost))
            .then(|| p.display(sys.alphabet()).to_string())
    })
}

const SPOT_CHECKS: usize = 100;

fn cmd_check(args: &PresentationArgs, cli: &Cli) -> CmdResult {
    let (name, sys) = load(args, cli.unchecked)?;
    let report = sys.confluence_report();
    let mut text = format!("presentation: {name}\n{}", report.to_text());
    let mut positive = report.confluent;
    let spot = if report.confluent {
        let bad = strategy_spot_check(&sys, cli.seed, SPOT_CHECKS);
        match &bad {
            None => write!(text, "\nstrategy spot-check: {SPOT_CHECKS} random polynomials agree").unwrap(),
            Some(p) => {
                positive = false;
                write!(text, "\nstrategy spot-check: strategies disagree on {p}").unwrap()
            }
        }
        json!({ "count": SPOT_CHECKS, "disagreement": bad })
    } else {
        Value::Null
    };
    write!(text, "\nseed: {}", cli.seed).unwrap();
    let j = json!({ "presentation": name, "seed": cli.seed, "report": report, "strategy_spot_check": spot });
    Ok(Outcome { text, json: j, positive })
}

fn cmd_basis(args: &PresentationArgs, cli: &Cli) -> CmdResult {
    let (name, sys) = load(args, cli.unchecked)?;
    let max_len = cli.max_len.unwrap_or(3);
    let words = sys.reduced_monomials(max_len)?;
    let mut by_len = vec![0usize; max_len + 1];
    for w in &words {
        by_len[w.len()] += 1;
    }
    let rendered: Vec<String> = words.iter().map(|w| w.display(sys.alphabet()).to_string()).collect();
    let counts: Vec<String> = by_len.iter().map(ToString::to_string).collect();
    let mut text = rendered.join("\n");
    write!(
        text,
        "\n{} reduced monomials of length <= {max_len} in {name} (by length: {})\nseed: {}",
        words.len(),
        counts.join(" "),
        cli.seed
    )
    .unwrap();
    let j = json!({ "presentation": name, "max_len": max_len, "seed": cli.seed, "counts_by_length": by_len, "monomials": rendered });
    Ok(Outcome::ok(text, j))
}

fn cmd_free_check(args: &PresentationArgs, gens: &[String], cli: &Cli) -> CmdResult {
    let (name, sys) = load(args, cli.unchecked)?;
    let max_len = cli.max_len.unwrap_or(4);
    let names: Vec<&str> = if gens.is_empty() {
        if args.kind != Kind::Hef {
            return Err(Failure::Usage("--gens is required unless the presentation is hef".into()));
        }
        sys.alphabet().names().iter().map(String::as_str).filter(|n| n.starts_with('u')).collect()
    } else {
        gens.iter().map(String::as_str).collect()
    };
    let ids = sys.alphabet().ids(&names)?;
    let rep = sys.is_free_family(&ids, max_len)?;
    let text = match &rep.counterexample {
        None => format!(
            "free: all {} monomials of length <= {max_len} in {{{}}} are reduced in {name}\nseed: {}",
            rep.checked,
            names.join(", "),
            cli.seed
        ),
        Some(m) => format!("not free: {m} contains a rule left side\nseed: {}", cli.seed),
    };
    let j = json!({ "presentation": name, "generators": names, "max_len": max_len, "seed": cli.seed, "report": rep });
    Ok(Outcome { text, json: j, positive: rep.is_free() })
}

fn cmd_export(args: &PresentationArgs, cli: &Cli) -> CmdResult {
    let (name, sys) = load(args, cli.unchecked)?;
    let text = hfusion_core::diamond::write_presentation(Some(&name), &sys);
    let j = json!({ "presentation": name, "text": text });
    Ok(Outcome::ok(text.trim_end().to_string(), j))
}

fn cmd_iso(e: &Path, f: &Path) -> CmdResult {
    let (em, fm) = (matrix(e)?, matrix(f)?);
    let verdict = hopf_isomorphic(&em, &fm)?;
    let text = match &verdict {
        IsoVerdict::Isomorphic { condition } => format!("isomorphic ({})", condition.describe()),
        IsoVerdict::NotIsomorphic { reason } => format!("not isomorphic: {reason}"),
    };
    let positive = verdict.is_isomorphic();
    Ok(Outcome { text, json: serde_json::to_value(&verdict).expect("serializable"), positive })
}

fn cmd_verify_pi(q: &str, corrupt: bool, seed: u64) -> CmdResult {
    let q = scalar_q(q)?;
    let hq = build_hq(&q)?;
    let fp = build_freeprod(&q)?;
    let mut images = pi_images(&hq, &fp, &q)?;
    if corrupt {
        let beta = hq.alphabet().id("beta").expect("beta exists") as usize;
        images[beta] = NCPoly::monomial(fp.alphabet().parse_monomial("z.c")?);
    }
    let rep = check_morphism(&hq.system, &fp.system, &images)?;
    let mut text = String::new();
    for c in &rep.checks {
        let status = if c.holds { "ok  " } else { "FAIL" };
        writeln!(text, "{status} {}  residual {}", c.relation, c.residual).unwrap();
    }
    let failures = rep.checks.iter().filter(|c| !c.holds).count();
    write!(
        text,
        "{}\nseed: {seed}",
        if rep.well_defined {
            format!("all {} relations hold (q = {q})", rep.checks.len())
        } else {
            format!("{failures} of {} relations fail (q = {q})", rep.checks.len())
        }
    )
    .unwrap();
    let positive = rep.well_defined;
    Ok(Outcome { text, json: json!({ "q": q.to_string(), "corrupt": corrupt, "seed": seed, "report": rep }), positive })
}

fn cmd_aaut(f: Option<&Path>, q: &str) -> CmdResult {
    let fm = match f {
        Some(p) => matrix(p)?,
        None => ExactMatrix::f_q(&scalar_q(q)?)?,
    };
    let rel = build_aaut(&fm)?;
    let counts = rel.counts();
    let text = format!(
        "{}{} generators; relation counts {} + {} + {} + {}",
        rel.render(),
        rel.alphabet.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    );
    let families: Vec<Vec<String>> =
        rel.families.iter().map(|fam| fam.iter().map(|p| p.display(&rel.alphabet).to_string()).collect()).collect();
    let j = json!({ "n": rel.n, "generators": rel.alphabet.names(), "counts": counts, "families": families });
    Ok(Outcome::ok(text, j))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Fuse { x, y, n } => cmd_fuse(x, y, *n),
        Command::Dual { x } => {
            let x = word(x)?;
            let d = dual(&x);
            Ok(Outcome::ok(d.to_string(), json!({ "x": x, "dual": d })))
        }
        Command::Dim { x, n } => {
            let x = word(x)?;
            let d = dim(&x, *n)?;
            Ok(Outcome::ok(d.to_string(), json!({ "x": x, "n": n, "dim": d.to_string() })))
        }
        Command::Psi { x } => cmd_psi(x),
        Command::Table => cmd_table(cli.max_len.unwrap_or(2), cli.format),
        Command::Check(a) => cmd_check(a, cli),
        Command::Basis(a) => cmd_basis(a, cli),
        Command::FreeCheck { presentation, gens } => cmd_free_check(presentation, gens, cli),
        Command::Export(a) => cmd_export(a, cli),
        Command::Iso { e, f } => cmd_iso(e, f),
        Command::VerifyPi { q, corrupt } => cmd_verify_pi(q, *corrupt, cli.seed),
        Command::AautRelations { f, q } => cmd_aaut(f.as_deref(), q),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
