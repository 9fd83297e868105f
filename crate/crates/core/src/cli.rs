//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::{CACHE_DIR_ENV, CACHE_FILE_NAME};
use crate::charring::{CharRing, DominantCharacter, GradedCharacter};
use crate::error::{Error, Result};
use crate::gammaposet::{psi_from_xi, psi_node, GammaNode, PsiSet};
use crate::jacobitrudi::{JacobiTrudi, Mode};
use crate::liealgebra::{c_coefficient, PowerKind};
use crate::projchar::{Engine, Report};
use crate::rootdata::{LieType, RootSystem, RootVec, Weight};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "minaff",
    version,
    about = "Projective covers, KR characters and Jacobi-Trudi checks for B, C, D"
)]
pub struct Cli {
    /// Lie type, e.g. B4, C3, D5
    #[arg(long = "type", global = true)]
    pub lie_type: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Cache file (default: $MINAFF_CACHE_DIR/characters.ndjson when set)
    #[arg(long, global = true, conflicts_with = "no_cache")]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Concrete,
    Symbolic,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PsiArgs {
    /// Ψ_i = {α : ε_i(α) = 2}
    #[arg(long, conflicts_with_all = ["psi_xi", "psi_roots"])]
    pub psi_node: Option<usize>,
    /// Argmax set of a dominant weight ξ
    #[arg(long, conflicts_with = "psi_roots")]
    pub psi_xi: Option<String>,
    /// Positive roots in simple-root coordinates, separated by ';'
    #[arg(long)]
    pub psi_roots: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dominant weights of V(λ) with multiplicities
    Char {
        #[arg(long)]
        weight: String,
    },
    /// Graded character of P(λ,0)^Γ(λ,Ψ)
    Proj {
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        psi: PsiArgs,
    },
    /// Graded Kirillov-Reshetikhin character for (i, m)
    Kr {
        #[arg(long)]
        node: usize,
        #[arg(long)]
        level: u32,
    },
    /// Nodes and covers of Γ(λ,Ψ)
    Gamma {
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        psi: PsiArgs,
        /// Graphviz output
        #[arg(long)]
        dot: bool,
    },
    /// c^λ_{ν,s} on every weight of ⋀ n⁻_Ψ
    Coeffs {
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        psi: PsiArgs,
    },
    /// Run a verification
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Subcommand, Debug)]
pub enum Check {
    /// Σ (−t)^s c ch_t P(ν,0) = ch V(λ)
    Thm2 {
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        psi: PsiArgs,
    },
    /// A(t)E(−t) = Id
    Matrix {
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        psi: PsiArgs,
    },
    /// Σ (−1)^s c h_ν = ch V(λ)
    Conjecture {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Concrete)]
        mode: ModeArg,
    },
    /// Σ_S (−1)^|S| h_{λ−ΣS} = ch V(λ) for large λ
    Stable {
        #[arg(long)]
        weight: String,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `out`, diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return if code == 0 { EXIT_PASS } else { EXIT_USAGE };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_type(cli: &Cli) -> Result<LieType> {
    let t = cli
        .lie_type
        .as_deref()
        .ok_or_else(|| Error::InvalidType(String::new(), "--type is required"))?;
    t.parse()
}

fn parse_weight(s: &str, rs: &RootSystem) -> Result<Weight> {
    let w: Weight = s.parse()?;
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: w.rank(),
        });
    }
    Ok(w)
}

fn dominant_weight(s: &str, rs: &RootSystem) -> Result<Weight> {
    let w = parse_weight(s, rs)?;
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.to_string()));
    }
    Ok(w)
}

/// Ψ from the selector flags; defaults to the argmax set of `ω_{i_λ}`.
fn select_psi(args: &PsiArgs, lambda: &Weight, rs: &RootSystem) -> Result<PsiSet> {
    if let Some(i) = args.psi_node {
        return psi_node(i, rs);
    }
    if let Some(x) = &args.psi_xi {
        return psi_from_xi(&parse_weight(x, rs)?, rs);
    }
    if let Some(list) = &args.psi_roots {
        let roots = list
            .split(';')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                let r: RootVec = p.parse()?;
                if r.rank() != rs.rank() {
                    return Err(Error::DimensionMismatch {
                        expected: rs.rank(),
                        got: r.rank(),
                    });
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        return PsiSet::explicit(roots, rs);
    }
    match lambda.top_node() {
        Some(i) => psi_from_xi(&Weight::fundamental(rs.rank(), i), rs),
        None => Ok(PsiSet::empty()),
    }
}

fn ring(cli: &Cli, rs: Arc<RootSystem>) -> Result<CharRing> {
    if cli.no_cache {
        return Ok(CharRing::new(rs));
    }
    let path = match (&cli.cache, std::env::var_os(CACHE_DIR_ENV)) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => Some(PathBuf::from(dir).join(CACHE_FILE_NAME)),
        (None, None) => None,
    };
    match path {
        Some(p) => CharRing::with_cache(rs, &p)
            .map_err(|e| Error::Invariant(format!("cache {}: {e}", p.display()))),
        None => Ok(CharRing::new(rs)),
    }
}

/// `λ + 2ω1 - ω3` style rendering of `ν − λ`.
pub fn render_offset(off: &[i32]) -> String {
    let mut s = String::from("λ");
    for (k, &c) in off.iter().enumerate() {
        if c == 0 {
            continue;
        }
        s.push_str(if c < 0 { " - " } else { " + " });
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("ω{}", k + 1));
    }
    s
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{x}{}", " ".repeat(widths[c] - x.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn char_json(c: &DominantCharacter) -> serde_json::Value {
    json!(c.iter().map(|(w, m)| json!([w, m])).collect::<Vec<_>>())
}

fn graded_json(g: &GradedCharacter) -> serde_json::Value {
    let layers: serde_json::Map<String, serde_json::Value> = g
        .layers()
        .map(|(d, c)| (d.to_string(), char_json(c)))
        .collect();
    serde_json::Value::Object(layers)
}

fn graded_table(g: &GradedCharacter) -> String {
    let mut rows = vec![vec![
        "degree".to_string(),
        "weight".to_string(),
        "mult".to_string(),
    ]];
    for (d, c) in g.layers() {
        for (w, m) in c.iter().collect::<Vec<_>>().into_iter().rev() {
            let deg = match d {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            rows.push(vec![deg, format!("V({w})"), m.to_string()]);
        }
    }
    table(&rows)
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes())
        .map_err(|e| Error::Invariant(format!("write failed: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let t = parse_type(cli)?;
    let rs = Arc::new(RootSystem::new(t));
    let engine = Engine::with_ring(ring(cli, rs.clone())?);
    let code = dispatch(cli, &engine, &rs, out);
    engine
        .ring()
        .flush_cache()
        .map_err(|e| Error::Invariant(format!("cache flush: {e}")))?;
    code
}

fn dispatch(cli: &Cli, engine: &Engine, rs: &RootSystem, out: &mut dyn Write) -> Result<i32> {
    let json = cli.format == Format::Json;
    let lt = rs.lie_type().to_string();
    match &cli.command {
        Command::Char { weight } => {
            let l = dominant_weight(weight, rs)?;
            let ch = engine.ring().simple_character(&l)?;
            let dim = engine.ring().weyl_dim(&l);
            if json {
                let dom: Vec<_> = ch
                    .dominant()
                    .iter()
                    .rev()
                    .map(|(w, m)| json!([w, m]))
                    .collect();
                emit(
                    out,
                    &format!(
                        "{}\n",
                        json!({"lie_type": lt, "lambda": l, "dominant": dom, "dim": dim})
                    ),
                )?;
            } else {
                let mut rows = vec![vec!["weight".to_string(), "mult".to_string()]];
                for (w, m) in ch.dominant().iter().rev() {
                    rows.push(vec![format!("({w})"), m.to_string()]);
                }
                emit(out, &table(&rows))?;
                emit(out, &format!("total dimension {dim}\n"))?;
            }
            Ok(EXIT_PASS)
        }
        Command::Proj { weight, psi } => {
            let l = dominant_weight(weight, rs)?;
            let psi = select_psi(psi, &l, rs)?;
            let p = engine.projective_character(&l, &psi)?;
            let dim = p.dim_at_one(engine.ring());
            if json {
                let v = json!({"lie_type": lt, "lambda": l, "psi_origin": psi.origin_label(), "layers": graded_json(&p.graded), "dim_at_1": dim});
                emit(out, &format!("{v}\n"))?;
            } else {
                emit(out, &graded_table(&p.graded))?;
                emit(out, &format!("dimension at t=1 {dim}\n"))?;
            }
            Ok(EXIT_PASS)
        }
        Command::Kr { node, level } => {
            let p = engine.kr_character(*node, *level)?;
            let dim = p.dim_at_one(engine.ring());
            if json {
                let v = json!({"lie_type": lt, "node": node, "level": level, "layers": graded_json(&p.graded), "dim_at_1": dim});
                emit(out, &format!("{v}\n"))?;
            } else {
                emit(out, &graded_table(&p.graded))?;
                emit(out, &format!("dimension at t=1 {dim}\n"))?;
            }
            Ok(EXIT_PASS)
        }
        Command::Gamma { weight, psi, dot } => {
            let l = dominant_weight(weight, rs)?;
            let psi = select_psi(psi, &l, rs)?;
            let g = engine.gamma(&l, &psi)?;
            if *dot {
                emit(out, &g.to_dot())?;
            } else if json {
                emit(out, &format!("{}\n", g.to_json(rs)))?;
            } else {
                let mut rows = vec![vec![
                    "#".to_string(),
                    "node".to_string(),
                    "grade".to_string(),
                ]];
                for (k, n) in g.nodes().iter().enumerate() {
                    rows.push(vec![
                        k.to_string(),
                        format!("({})", n.mu),
                        n.grade.to_string(),
                    ]);
                }
                emit(out, &table(&rows))?;
                emit(
                    out,
                    &format!("{} nodes, {} covers\n", g.len(), g.covers().len()),
                )?;
                for (a, b) in g.covers() {
                    emit(out, &format!("{a} -> {b}\n"))?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Coeffs { weight, psi } => {
            let l = dominant_weight(weight, rs)?;
            let psi = match (psi.psi_node, &psi.psi_xi, &psi.psi_roots, l.top_node()) {
                (None, None, None, Some(i)) => psi_node(i, rs)?,
                _ => select_psi(psi, &l, rs)?,
            };
            let module = engine.module(&psi)?;
            // every (weight, degree) of ⋀ n⁻_Ψ
            let mut cells: std::collections::BTreeMap<(u32, RootVec), ()> = Default::default();
            for mask in 0u64..(1u64 << psi.len()) {
                let mut sum = RootVec::zero(rs.rank());
                for (k, b) in psi.roots().iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        sum = &sum + b;
                    }
                }
                cells.insert((mask.count_ones(), sum), ());
            }
            let mut rows = vec![vec![
                "(μ, s)".to_string(),
                "dim".to_string(),
                "c".to_string(),
            ]];
            let mut entries = Vec::new();
            let mut nonzero = 0;
            for (s, sum) in cells.keys() {
                let nu = &l - &rs.root_to_weight(sum);
                let dim = module.weight_space_dim(PowerKind::Exterior, *s as usize, sum);
                let c = c_coefficient(&l, &nu, *s as usize, &module, rs)?;
                if c != 0 {
                    nonzero += 1;
                }
                let off: Vec<i32> = nu
                    .coords()
                    .iter()
                    .zip(l.coords())
                    .map(|(a, b)| a - b)
                    .collect();
                rows.push(vec![
                    format!("({}, {s})", render_offset(&off)),
                    dim.to_string(),
                    c.to_string(),
                ]);
                entries.push(json!({"mu": nu, "mu_offset": off, "s": s, "dim": dim, "c": c}));
            }
            if json {
                let v = json!({"lie_type": lt, "lambda": l, "psi_origin": psi.origin_label(), "entries": entries, "nonzero": nonzero});
                emit(out, &format!("{v}\n"))?;
            } else {
                emit(out, &table(&rows))?;
                emit(
                    out,
                    &format!("{} rows, {nonzero} nonzero\n", rows.len() - 1),
                )?;
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { check } => verify(check, engine, rs, json, out),
    }
}

fn verify(
    check: &Check,
    engine: &Engine,
    rs: &RootSystem,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let lt = rs.lie_type().to_string();
    let (name, ok, report) = match check {
        Check::Thm2 { weight, psi } => {
            let l = dominant_weight(weight, rs)?;
            let psi = select_psi(psi, &l, rs)?;
            let r = Report::thm2(engine, &l, &psi)?;
            (
                "thm2",
                r.residual_is_zero,
                serde_json::to_value(&r).unwrap(),
            )
        }
        Check::Matrix { weight, psi } => {
            let l = dominant_weight(weight, rs)?;
            let psi = select_psi(psi, &l, rs)?;
            let r = Report::matrices(engine, &l, &psi)?;
            (
                "matrix",
                r.residual_is_zero,
                serde_json::to_value(&r).unwrap(),
            )
        }
        Check::Conjecture { weight, mode } => {
            let l = dominant_weight(weight, rs)?;
            let mode = match mode {
                ModeArg::Concrete => Mode::Concrete,
                ModeArg::Symbolic => Mode::Symbolic,
            };
            let r = JacobiTrudi::new(engine).verify_conjecture(&l, mode)?;
            let v = json!({"lie_type": lt, "lambda": l, "psi_origin": format!("node={}", l.top_node().unwrap_or(0)),
                "mode": format!("{mode:?}").to_lowercase(), "residual_is_zero": r.is_zero(), "residual": r.to_string()});
            ("conjecture", r.is_zero(), v)
        }
        Check::Stable { weight } => {
            let l = dominant_weight(weight, rs)?;
            let r = JacobiTrudi::new(engine).stable_formula_check(&l)?;
            let v = json!({"lie_type": lt, "lambda": l, "psi_origin": format!("node={}", l.top_node().unwrap_or(0)),
                "residual_is_zero": r.is_zero(), "residual": r.to_string()});
            ("stable", r.is_zero(), v)
        }
    };
    if json {
        emit(out, &format!("{report}\n"))?;
    } else {
        let status = if ok { "PASS" } else { "FAIL" };
        emit(
            out,
            &format!(
                "{status} {name} {lt} λ=({})\n",
                report["lambda"]
                    .as_array()
                    .map(|a| a
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(","))
                    .unwrap_or_default()
            ),
        )?;
        if !ok {
            emit(
                out,
                &format!("residual: {}\n", report["residual"].as_str().unwrap_or("")),
            )?;
        }
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

/// Shared with the examples: nodes of `Γ` rendered as `(μ; r)`.
pub fn render_node(g: &GammaNode) -> String {
    format!("(V({}); {})", g.mu, g.grade)
}
