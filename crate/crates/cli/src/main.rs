//! `alcovia`: command-line access to walk enumeration, path construction,
//! spherical functions, weight multiplicities, Hecke checks and building counts.

mod tikz;

/// `println!` that ignores write errors such as a closed pipe.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use alcovia_core::{
    build_root_system, Coweight, Error, GroupAlgebraElem, Limits, RootSystem, StringData, Thickness, Walk,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "alcovia", version, about = "Positively folded alcove walks and their applications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Freudenthal,
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. A2, C3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    type_label: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Maximum number of letters in a walk type.
    #[arg(long)]
    max_letters: Option<usize>,
    /// Maximum order of the finite Weyl group for exhaustive computations.
    #[arg(long, env = "ALCOVIA_MAX_WEYL_ORDER")]
    max_weyl_order: Option<u64>,
}

#[derive(Args)]
struct LambdaArg {
    /// Dominant coweight in fundamental-coweight coordinates, e.g. 1,1.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the positively folded walks of all types u.m_lambda, grouped by weight.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        /// Only list walks ending at this weight.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Write a TikZ picture of the first listed walk (rank 2 only).
        #[arg(long, value_name = "FILE")]
        emit_tikz: Option<PathBuf>,
    },
    /// Construct a walk of maximal dimension ending at mu.
    Build {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Reduced word for the longest element of W_0, e.g. 1,2,1.
        #[arg(long)]
        word: Option<String>,
        /// Write a TikZ picture of the constructed walk (rank 2 only).
        #[arg(long, value_name = "FILE")]
        emit_tikz: Option<PathBuf>,
    },
    /// Macdonald spherical function via positively folded walks.
    Spherical {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        /// Evaluate every coefficient at this integer q.
        #[arg(long)]
        q: Option<i64>,
        /// Cross-check against the symmetrised definition at random points.
        #[arg(long)]
        compare_direct: bool,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Weight multiplicities from walks of maximal dimension.
    Mult {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
    },
    /// Check the alcove-walk expansion of Bernstein elements and the 1_0 laws.
    HeckeVerify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        max_length: u32,
    },
    /// Count vertices of a regular affine building by retraction fibers.
    BuildingCount {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Thickness: one value for all panels, or rank+1 values q_0,...,q_n.
        #[arg(long, default_value = "2")]
        q: String,
    },
    /// List the saturated set Pi_lambda.
    Saturated {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lambda: LambdaArg,
        /// Report whether this weight lies in the set.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

/// Why a command stopped: a library error or a failed cross-check.
enum Failure {
    Lib(Error),
    Usage(String),
    Check,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownType(_) => "UnknownType",
        Error::RankOutOfRange { .. } => "RankOutOfRange",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NotDominant(_) => "NotDominant",
        Error::GroupTooLarge { .. } => "GroupTooLarge",
        Error::TypeTooLong { .. } => "TypeTooLong",
        Error::InvalidWalk(_) => "InvalidWalk",
        Error::NotInSaturatedSet { .. } => "NotInSaturatedSet",
        Error::NotReducedWord(_) => "NotReducedWord",
        Error::InternalOperatorDeath(_) => "InternalOperatorDeath",
        Error::CaseConflict(_) => "CaseConflict",
        Error::SingularPoint(_) => "SingularPoint",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotInSaturatedSet { .. } => 3,
        Error::GroupTooLarge { .. } | Error::TypeTooLong { .. } => 4,
        Error::InternalOperatorDeath(_) | Error::CaseConflict(_) => 1,
        _ => 2,
    }
}

fn parse_ints(flag: &str, s: &str) -> std::result::Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("--{flag}: `{t}` is not an integer")))
        })
        .collect()
}

fn parse_coweight(rs: &RootSystem, flag: &str, s: &str) -> std::result::Result<Coweight, Failure> {
    let v = parse_ints(flag, s)?;
    if v.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: v.len() }.into());
    }
    Ok(Coweight(v))
}

fn parse_word(rs: &RootSystem, s: &str) -> std::result::Result<Vec<usize>, Failure> {
    parse_ints("word", s)?
        .into_iter()
        .map(|i| {
            if i < 1 || i as usize > rs.rank() {
                Err(Error::IndexOutOfRange { index: i.max(0) as usize, lo: 1, hi: rs.rank() }.into())
            } else {
                Ok(i as usize)
            }
        })
        .collect()
}

fn setup(c: &Common) -> std::result::Result<RootSystem, Failure> {
    let rs = build_root_system(&c.type_label)?;
    let mut limits: Limits = rs.limits();
    if let Some(m) = c.max_letters {
        limits.max_letters = m;
    }
    if let Some(m) = c.max_weyl_order {
        limits.max_weyl_order = m;
    }
    Ok(rs.with_limits(limits))
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("JSON values always serialise"));
}

fn walk_json(rs: &RootSystem, p: &Walk) -> Value {
    let s = p.stats();
    json!({
        "type": {"letters": p.wtype().letters, "omega": rs.omega_label(&p.wtype().omega)},
        "folds": p.folds(),
        "steps": p.step_string(),
        "end": {"mu": s.weight.0, "w_word": rs.canonical_word(&s.final_dir)},
        "stats": {
            "pos": s.pos_cross, "neg": s.neg_cross, "folds": s.folds,
            "len": s.length, "eps": s.signed, "dim": s.dim,
        },
    })
}

fn walk_line(rs: &RootSystem, p: &Walk) -> String {
    let s = p.stats();
    let letters: Vec<String> = p.wtype().letters.iter().map(|l| l.to_string()).collect();
    format!(
        "{}  type {} folds {:?}  pos={} neg={} folds={} len={} eps={} dim={}",
        p.to_text(rs),
        letters.join(""),
        p.folds(),
        s.pos_cross,
        s.neg_cross,
        s.folds,
        s.length,
        s.signed,
        s.dim
    )
}

fn write_tikz(rs: &RootSystem, p: &Walk, path: &PathBuf) -> Outcome {
    let pic = tikz::walk_picture(rs, p).map_err(Failure::Usage)?;
    std::fs::write(path, pic).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn cmd_enumerate(common: &Common, lambda: &str, mu: Option<&str>, tikz_out: Option<&PathBuf>) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let mu = mu.map(|m| parse_coweight(&rs, "mu", m)).transpose()?;
    let mut groups = rs.enumerate_p_lambda(&lambda)?;
    if let Some(m) = &mu {
        groups.retain(|k, _| k == m);
    }
    let total: usize = groups.values().map(Vec::len).sum();
    if common.format == Format::Json {
        let gs: Vec<Value> = groups
            .iter()
            .map(|(m, ws)| json!({"mu": m.0, "walks": ws.iter().map(|p| walk_json(&rs, p)).collect::<Vec<_>>()}))
            .collect();
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": lambda.0,
            "total": total,
            "groups": gs,
        }));
    } else {
        outln!(
            "type {} lambda {}: {total} walks in {} groups",
            rs.cartan_type(),
            lambda,
            groups.len()
        );
        for (m, ws) in &groups {
            let max_dim = ws.iter().map(Walk::dim).max().unwrap_or(0);
            let at_max = ws.iter().filter(|p| p.dim() == max_dim).count();
            outln!("mu {m}: {} walks, max dim {max_dim} ({at_max} walks)", ws.len());
            for p in ws {
                outln!("  {}", walk_line(&rs, p));
            }
        }
    }
    if let Some(path) = tikz_out {
        let first = groups
            .values()
            .flatten()
            .next()
            .ok_or_else(|| Failure::Usage("no walk to draw".into()))?;
        write_tikz(&rs, first, path)?;
    }
    Ok(())
}

fn cmd_build(common: &Common, lambda: &str, mu: &str, word: Option<&str>, tikz_out: Option<&PathBuf>) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let mu = parse_coweight(&rs, "mu", mu)?;
    let word = match word {
        Some(w) => parse_word(&rs, w)?,
        None => rs.default_w0_word(),
    };
    let (p, data): (Walk, StringData) = rs.build_path_with_data(&lambda, &mu, &word)?;
    let target = rs.rho_pairing(&lambda, &mu);
    if common.format == Format::Json {
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": lambda.0,
            "mu": mu.0,
            "word": data.word,
            "mus": data.mus.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
            "ms": data.ms,
            "rho_pairing": target,
            "walk": walk_json(&rs, &p),
        }));
    } else {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let word_s: Vec<String> = data.word.iter().map(usize::to_string).collect();
        let mus: Vec<String> = data.mus.iter().map(Coweight::to_string).collect();
        outln!("walk {}", walk_line(&rs, &p));
        outln!("dim {}", p.dim());
        outln!("<lambda+mu,rho> {target}");
        outln!("word {}", word_s.join(","));
        outln!("mus {}", mus.join(" "));
        outln!("ms {}", join(&data.ms));
    }
    if let Some(path) = tikz_out {
        write_tikz(&rs, &p, path)?;
    }
    Ok(())
}

fn cmd_spherical(common: &Common, lambda: &str, q: Option<i64>, compare: bool, trials: usize, seed: u64) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let poly: GroupAlgebraElem = rs.spherical_via_paths(&lambda)?;
    let checks = if compare { rs.compare_direct(&lambda, trials, seed)? } else { Vec::new() };
    let failed = checks.iter().filter(|c| !c.agrees()).count();
    if common.format == Format::Json {
        let terms: Vec<Value> = poly
            .terms()
            .map(|(m, c)| {
                let mut t = json!({"mu": m.0, "coeff": c.to_string()});
                if let Some(q) = q {
                    t["value"] = json!(rs.eval_coefficient(c, q).to_string());
                }
                t
            })
            .collect();
        let mut out = json!({"type": rs.cartan_type().to_string(), "lambda": lambda.0, "terms": terms});
        if compare {
            out["compare_direct"] = json!({
                "seed": seed,
                "checks": checks.iter().map(|c| json!({
                    "x": c.point.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "q": c.q.to_string(),
                    "direct": c.direct.to_string(),
                    "paths": c.from_paths.to_string(),
                    "agrees": c.agrees(),
                })).collect::<Vec<_>>(),
                "passed": failed == 0,
            });
        }
        print_json(&out);
    } else {
        outln!("P_{} for type {}:", lambda, rs.cartan_type());
        for (m, c) in poly.terms() {
            match q {
                Some(q) => outln!("  x^{m}: {c}  [q={q}: {}]", rs.eval_coefficient(c, q)),
                None => outln!("  x^{m}: {c}"),
            }
        }
        for c in &checks {
            let x: Vec<String> = c.point.iter().map(ToString::to_string).collect();
            outln!(
                "{} x=({}) q={}: direct {} paths {}",
                if c.agrees() { "PASS" } else { "FAIL" },
                x.join(","),
                c.q,
                c.direct,
                c.from_paths
            );
        }
        if compare {
            outln!("{} compare-direct seed={seed}: {}/{} agree", verdict(failed == 0), checks.len() - failed, checks.len());
        }
    }
    if failed > 0 {
        return Err(Failure::Check);
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_mult(common: &Common, lambda: &str, oracle: Option<Oracle>) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let mult: BTreeMap<Coweight, u64> = rs.weight_multiplicities(&lambda)?;
    let agree = match oracle {
        Some(Oracle::Freudenthal) => Some(rs.freudenthal(&lambda)? == mult),
        None => None,
    };
    if common.format == Format::Json {
        let entries: Vec<Value> = mult.iter().rev().map(|(m, k)| json!({"mu": m.0, "mult": k})).collect();
        let mut out = json!({"type": rs.cartan_type().to_string(), "lambda": lambda.0, "multiplicities": entries});
        if let Some(a) = agree {
            out["oracle"] = json!({"name": "freudenthal", "passed": a});
        }
        print_json(&out);
    } else {
        let entries: Vec<String> = mult
            .iter()
            .rev()
            .map(|(m, k)| {
                let key = if m.0.len() == 1 { m.0[0].to_string() } else { m.to_string() };
                format!("{key}:{k}")
            })
            .collect();
        outln!("{{{}}}", entries.join(", "));
        if let Some(a) = agree {
            outln!("{} freudenthal oracle", verdict(a));
        }
    }
    if agree == Some(false) {
        return Err(Failure::Check);
    }
    Ok(())
}

fn cmd_hecke_verify(common: &Common, max_length: u32) -> Outcome {
    let rs = setup(common)?;
    let report = rs.verify_walk_expansion_upto(max_length)?;
    let idem = rs.check_idempotent_laws()?;
    let mut translation = Vec::new();
    for i in 1..=rs.rank() {
        let mut lambda = Coweight::zero(rs.rank());
        lambda.0[i - 1] = 1;
        translation.push((lambda.clone(), rs.check_translation_law(&lambda)?));
    }
    let all = report.passed() && idem && translation.iter().all(|(_, ok)| *ok);
    if common.format == Format::Json {
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "max_length": max_length,
            "walk_expansion": {"checked": report.checked, "failures": report.failures.iter().map(|w| rs.reduced_word(w).letters).collect::<Vec<_>>()},
            "idempotent_laws": idem,
            "translation_law": translation.iter().map(|(l, ok)| json!({"lambda": l.0, "passed": ok})).collect::<Vec<_>>(),
            "passed": all,
        }));
    } else {
        outln!(
            "{} walk expansion: {} elements of length <= {max_length}, {} failures",
            verdict(report.passed()),
            report.checked,
            report.failures.len()
        );
        outln!("{} idempotent laws", verdict(idem));
        for (l, ok) in &translation {
            outln!("{} x^{l} 1_0 law", verdict(*ok));
        }
        outln!("{}", verdict(all));
    }
    if !all {
        return Err(Failure::Check);
    }
    Ok(())
}

fn cmd_building_count(common: &Common, lambda: &str, mu: Option<&str>, q: &str) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let qs = parse_ints("q", q)?;
    if qs.iter().any(|&x| x < 1) {
        return Err(Failure::Usage("--q: thickness values must be at least 1".into()));
    }
    let qs: Vec<u64> = qs.into_iter().map(|x| x as u64).collect();
    let th = match qs.as_slice() {
        [single] => Thickness::uniform(rs.rank(), *single),
        _ => Thickness::new(qs.clone())?,
    };
    let pi = rs.saturated_set(&lambda)?;
    let targets: Vec<Coweight> = match mu {
        Some(m) => vec![parse_coweight(&rs, "mu", m)?],
        None => pi.iter().cloned().collect(),
    };
    let mut rows = Vec::new();
    for m in &targets {
        let count = rs.retraction_fiber_count(&lambda, m, &th)?;
        let floor = if pi.contains(m) {
            let base = u128::from(th.q.iter().copied().min().unwrap_or(1) - 1);
            Some(base.pow(rs.rho_pairing(&lambda, m) as u32))
        } else {
            None
        };
        let ok = match floor {
            Some(f) => count >= f,
            None => count == 0,
        };
        rows.push((m.clone(), count, floor, ok));
    }
    let all = rows.iter().all(|r| r.3);
    let total: u128 = rows.iter().map(|r| r.1).sum();
    if common.format == Format::Json {
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "lambda": lambda.0,
            "q": th.q,
            "fibers": rows.iter().map(|(m, c, f, ok)| json!({
                "mu": m.0, "count": c.to_string(), "lower_bound": f.map(|f| f.to_string()), "passed": ok,
            })).collect::<Vec<_>>(),
            "total": total.to_string(),
            "passed": all,
        }));
    } else {
        for (m, c, f, ok) in &rows {
            match f {
                Some(f) => outln!("{} mu {m}: {c} (lower bound {f})", verdict(*ok)),
                None => outln!("{} mu {m}: {c} (outside the saturated set)", verdict(*ok)),
            }
        }
        outln!("total {total}");
    }
    if !all {
        return Err(Failure::Check);
    }
    Ok(())
}

fn cmd_saturated(common: &Common, lambda: &str, mu: Option<&str>) -> Outcome {
    let rs = setup(common)?;
    let lambda = parse_coweight(&rs, "lambda", lambda)?;
    let pi = rs.saturated_set(&lambda)?;
    let dominant: Vec<&Coweight> = pi.iter().filter(|m| m.is_dominant()).collect();
    let member = mu.map(|m| parse_coweight(&rs, "mu", m)).transpose()?.map(|m| {
        let c = pi.contains(&m);
        (m, c)
    });
    if common.format == Format::Json {
        let mut out = json!({
            "type": rs.cartan_type().to_string(),
            "lambda": lambda.0,
            "size": pi.len(),
            "dominant": dominant.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
            "weights": pi.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
        });
        if let Some((m, c)) = &member {
            out["contains"] = json!({"mu": m.0, "member": c});
        }
        print_json(&out);
    } else {
        let d: Vec<String> = dominant.iter().map(|m| m.to_string()).collect();
        outln!("Pi_{lambda}: {} weights, dominant {}", pi.len(), d.join(" "));
        for m in &pi {
            outln!("  {m}");
        }
        if let Some((m, c)) = &member {
            outln!("{m} {} Pi_{lambda}", if *c { "is in" } else { "is not in" });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = match &cli.command {
        Command::Enumerate { common, lambda, mu, emit_tikz } => {
            (common.format, cmd_enumerate(common, &lambda.lambda, mu.as_deref(), emit_tikz.as_ref()))
        }
        Command::Build { common, lambda, mu, word, emit_tikz } => (
            common.format,
            cmd_build(common, &lambda.lambda, mu, word.as_deref(), emit_tikz.as_ref()),
        ),
        Command::Spherical { common, lambda, q, compare_direct, trials, seed } => (
            common.format,
            cmd_spherical(common, &lambda.lambda, *q, *compare_direct, *trials, *seed),
        ),
        Command::Mult { common, lambda, oracle } => (common.format, cmd_mult(common, &lambda.lambda, *oracle)),
        Command::HeckeVerify { common, max_length } => (common.format, cmd_hecke_verify(common, *max_length)),
        Command::BuildingCount { common, lambda, mu, q } => {
            (common.format, cmd_building_count(common, &lambda.lambda, mu.as_deref(), q))
        }
        Command::Saturated { common, lambda, mu } => (common.format, cmd_saturated(common, &lambda.lambda, mu.as_deref())),
    };
    let (code, kind, message) = match result {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Check) => return ExitCode::from(1),
        Err(Failure::Lib(e)) => (exit_code(&e), error_kind(&e), e.to_string()),
        Err(Failure::Usage(m)) => (2, "Validation", m),
        Err(Failure::Io(m)) => (2, "Io", m),
    };
    if format == Format::Json {
        let obj = json!({"error": {"kind": kind, "message": message, "exit_code": code}});
        eprintln!("{obj}");
    } else {
        eprintln!("error: {message}");
    }
    ExitCode::from(code)
}
