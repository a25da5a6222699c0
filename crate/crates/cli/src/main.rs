//! `liecalc`: command-line front end for the `liecalc` library.
//!
//! Every verb prints exact output (integers and `p/q` strings) in a stable
//! order. Exit status is 0 on success, 1 on a domain error and 2 on a usage
//! error; errors are reported on stderr as `{"error": code, "message": ...}`.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};

use liecalc::affine::{AffineRootSystem, AffineWeight};
use liecalc::garland::{format_monomial, garland_series, newton_check, zform_check};
use liecalc::gradedcat::{GammaOrder, GammaSet, GradedCategory, GradedSimple, PsiOrder};
use liecalc::json::{parse_rational, parse_weight};
use liecalc::loopcat::{loop_splitting_order, LoopCategory, LoopIrrep, LoopPart};
use liecalc::{CartanType, CharRing, DominantDecomposition, Error, Limits, RootSystem, Weight};

#[derive(Parser)]
#[command(name = "liecalc", version, about = "Exact computations for simple Lie algebras and their loop, current and affine relatives")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Global {
    /// Output format; `dot` is accepted by `quiver` only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest module dimension expanded into a full character.
    #[arg(long, env = "LIECALC_MAX_DIM", global = true)]
    max_dim: Option<u64>,
    /// Largest Weyl orbit enumerated.
    #[arg(long, env = "LIECALC_MAX_ORBIT", global = true)]
    max_orbit: Option<usize>,
    /// Truncation depth for affine series.
    #[arg(long, env = "LIECALC_DEPTH", default_value_t = 6, global = true)]
    depth: usize,
    /// Largest accepted truncation depth.
    #[arg(long, env = "LIECALC_MAX_DEPTH", global = true)]
    max_depth: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Cartan matrix, positive roots, highest root and ρ.
    Roots { ty: String },
    /// Formal character of V(λ).
    Char { ty: String, weight: String },
    /// Dimension of V(λ).
    Dim { ty: String, weight: String },
    /// V(λ) ⊗ V(μ) as a sum of irreducibles.
    Tensor { ty: String, lam: String, mu: String },
    /// dim Ext¹ between two irreducible loop modules (JSON or file path).
    #[command(name = "ext1-loop")]
    Ext1Loop { ty: String, v: String, w: String },
    /// Spectral character of an irreducible loop module.
    Spectral { ty: String, v: String },
    /// Group a JSON list of loop modules into blocks.
    Blocks { ty: String, modules: String },
    /// Splitting order of a list of (point, weight) pairs.
    #[command(name = "split-order")]
    SplitOrder { parts: String },
    /// U(g[t]₊) in degree k as a g-module.
    Uplus { ty: String, k: usize },
    /// Ext-quiver of an interval-closed set of graded simples.
    Quiver {
        ty: String,
        /// JSON `[{"weight": [...], "grade": r}]` or a path to such a file.
        #[arg(long)]
        gamma: String,
        /// Use the order ≤_ψ instead of the full order.
        #[arg(long)]
        psi: Option<String>,
    },
    /// Positive roots maximising the pairing with ψ.
    #[command(name = "phi-psi", allow_negative_numbers = true)]
    PhiPsi { ty: String, psi: String },
    /// Everything ≤_ψ (λ, r).
    #[command(name = "lower-set", allow_negative_numbers = true)]
    LowerSet { ty: String, psi: String, weight: String, grade: u32 },
    /// Truncated character of an integrable highest weight module.
    #[command(name = "affine-char")]
    AffineChar {
        ty: String,
        /// Level k (the Λ₀ coefficient).
        #[arg(long)]
        level: i64,
        /// Finite part in fundamental coordinates; zero when omitted.
        #[arg(long)]
        finite: Option<String>,
        /// δ-coefficient as `p/q`.
        #[arg(long, default_value = "0")]
        delta: String,
    },
    /// Coefficient P_s of the imaginary root vector series.
    Garland {
        #[arg(long)]
        order: usize,
    },
    /// Check the divided-power identity on V(N).
    Zform {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long = "N", short = 'N')]
        n: usize,
    },
}

enum Failure {
    Usage(String, String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownType(_) | Error::InadmissibleType { .. } | Error::Parse(_) => {
                Failure::Usage(e.code().to_string(), e.to_string())
            }
            other => Failure::Domain(other),
        }
    }
}

type Out = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(code, message)) => {
            eprintln!("{}", json!({ "error": code, "message": message }));
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.code(), "message": e.to_string() }));
            ExitCode::from(1)
        }
    }
}

fn limits(g: &Global) -> Limits {
    let mut l = Limits::default();
    if let Some(d) = g.max_dim {
        l.max_dim = d;
    }
    if let Some(o) = g.max_orbit {
        l.max_orbit = o;
    }
    if let Some(d) = g.max_depth {
        l.max_depth = d;
    }
    l
}

fn root_system(ty: &str) -> Result<RootSystem, Failure> {
    let t: CartanType = ty.parse()?;
    Ok(RootSystem::build(t))
}

fn weight(rs: &RootSystem, s: &str) -> Result<Weight, Failure> {
    let w = parse_weight(s)?;
    rs.check_weight(&w)?;
    Ok(w)
}

/// Inline JSON, or the contents of the named file.
fn json_arg(s: &str) -> Result<String, Failure> {
    let t = s.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(s.to_string());
    }
    fs::read_to_string(s).map_err(|e| Failure::Usage("malformed_input".into(), format!("cannot read {s:?}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T, Failure> {
    let text = json_arg(s)?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage("malformed_input".into(), format!("{what}: {e}")))
}

fn loop_irrep(rs: &RootSystem, s: &str) -> Result<LoopIrrep, Failure> {
    let parts: Vec<LoopPart> = parse_json(s, "loop module")?;
    for p in &parts {
        rs.check_weight(&p.weight)?;
    }
    Ok(LoopIrrep::from_parts(rs, parts)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn decomposition_text(d: &DominantDecomposition) -> String {
    d.iter().map(|(w, m)| format!("{w} {m}\n")).collect()
}

fn run(cli: &Cli) -> Out {
    let g = &cli.global;
    let format = g.format;
    if format == Format::Dot && !matches!(cli.verb, Verb::Quiver { .. }) {
        return Err(Failure::Usage("unsupported_format".into(), "--format dot is only available for quiver".into()));
    }
    let lim = limits(g);
    let json_mode = format == Format::Json;
    match &cli.verb {
        Verb::Roots { ty } => {
            let rs = root_system(ty)?;
            let roots: Vec<Value> = rs
                .positive_roots()
                .iter()
                .zip(rs.positive_root_weights())
                .map(|(r, w)| json!({ "root": r, "weight": w }))
                .collect();
            if json_mode {
                return Ok(pretty(&json!({
                    "type": rs.cartan_type().to_string(),
                    "rank": rs.rank(),
                    "cartan": rs.cartan_matrix(),
                    "positive_roots": roots,
                    "highest_root": rs.highest_root(),
                    "rho": rs.rho(),
                })));
            }
            let mut out = format!("type {}\nrank {}\ncartan\n", rs.cartan_type(), rs.rank());
            for row in rs.cartan_matrix() {
                out += &format!("  {row:?}\n");
            }
            out += &format!("highest root {:?}\nrho {}\npositive roots {}\n", rs.highest_root(), rs.rho(), rs.positive_roots().len());
            for (r, w) in rs.positive_roots().iter().zip(rs.positive_root_weights()) {
                out += &format!("  {r:?} {w}\n");
            }
            Ok(out)
        }
        Verb::Char { ty, weight: w } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let ch = ring.char_irreducible(&weight(&rs, w)?)?;
            if json_mode {
                return Ok(pretty(&serde_json::to_value(&ch).expect("character serializes")));
            }
            Ok(ch.sorted().into_iter().map(|(w, c)| format!("{w} {c}\n")).collect())
        }
        Verb::Dim { ty, weight: w } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let d = ring.dim_irreducible(&weight(&rs, w)?)?;
            // a bare integer is already valid JSON
            Ok(d.to_string())
        }
        Verb::Tensor { ty, lam, mu } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let d = ring.tensor_decompose(&weight(&rs, lam)?, &weight(&rs, mu)?)?;
            if json_mode {
                return Ok(pretty(&serde_json::to_value(&d).expect("decomposition serializes")));
            }
            Ok(decomposition_text(&d))
        }
        Verb::Ext1Loop { ty, v, w } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = LoopCategory::new(&ring);
            let n = cat.ext1_dim(&loop_irrep(&rs, v)?, &loop_irrep(&rs, w)?)?;
            Ok(n.to_string())
        }
        Verb::Spectral { ty, v } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = LoopCategory::new(&ring);
            let chi = cat.spectral_character(&loop_irrep(&rs, v)?);
            if json_mode {
                let entries: Vec<Value> = chi.iter().map(|(a, c)| json!({ "point": a, "class": c.0 })).collect();
                return Ok(pretty(&json!({ "moduli": cat.fundamental_group().moduli(), "values": entries })));
            }
            if chi.is_empty() {
                return Ok("trivial\n".into());
            }
            Ok(chi.iter().map(|(a, c)| format!("{a} {:?}\n", c.0)).collect())
        }
        Verb::Blocks { ty, modules } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = LoopCategory::new(&ring);
            let raw: Vec<Vec<LoopPart>> = parse_json(modules, "module list")?;
            let mods = raw
                .into_iter()
                .map(|parts| {
                    for p in &parts {
                        rs.check_weight(&p.weight)?;
                    }
                    LoopIrrep::from_parts(&rs, parts)
                })
                .collect::<liecalc::Result<Vec<_>>>()?;
            let blocks = cat.blocks(&mods);
            if json_mode {
                let v: Vec<Value> = blocks
                    .iter()
                    .map(|(chi, idx)| {
                        let values: Vec<Value> = chi.iter().map(|(a, c)| json!({ "point": a, "class": c.0 })).collect();
                        json!({ "spectral_character": values, "members": idx })
                    })
                    .collect();
                return Ok(pretty(&json!(v)));
            }
            Ok(blocks
                .iter()
                .map(|(_, idx)| idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ") + "\n")
                .collect())
        }
        Verb::SplitOrder { parts } => {
            let raw: Vec<LoopPart> = parse_json(parts, "parts")?;
            let pairs: Vec<_> = raw.into_iter().map(|p| (p.weight, p.point)).collect();
            Ok(loop_splitting_order(&pairs)?.to_string())
        }
        Verb::Uplus { ty, k } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = GradedCategory::new(&ring);
            let d = cat.u_plus_graded_char(*k)?;
            if json_mode {
                return Ok(pretty(&serde_json::to_value(&d).expect("decomposition serializes")));
            }
            Ok(decomposition_text(&d))
        }
        Verb::Quiver { ty, gamma, psi } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = GradedCategory::new(&ring);
            let elements: Vec<GradedSimple> = parse_json(gamma, "gamma set")?;
            for e in &elements {
                rs.check_weight(&e.weight)?;
            }
            let order = match psi {
                Some(p) => GammaOrder::Psi(weight(&rs, p)?),
                None => GammaOrder::Full,
            };
            let q = cat.build_quiver(&GammaSet::new(elements, order))?;
            Ok(match format {
                Format::Dot => q.to_dot(),
                Format::Json => pretty(&serde_json::to_value(&q).expect("quiver serializes")),
                Format::Text => {
                    let mut out = format!("vertices {}\n", q.vertices.len());
                    for v in &q.vertices {
                        out += &format!("  {v}\n");
                    }
                    out += &format!("arrows {}\n", q.arrows.len());
                    for a in &q.arrows {
                        out += &format!("  {} -> {} x{}\n", a.source, a.target, a.multiplicity);
                    }
                    out
                }
            })
        }
        Verb::PhiPsi { ty, psi } => {
            let rs = root_system(ty)?;
            let order = PsiOrder::new(&rs, &weight(&rs, psi)?)?;
            if json_mode {
                let v: Vec<Value> = order
                    .roots()
                    .iter()
                    .zip(order.root_weights())
                    .map(|(r, w)| json!({ "root": r, "weight": w }))
                    .collect();
                return Ok(pretty(&json!(v)));
            }
            Ok(order.roots().iter().map(|r| format!("{r:?}\n")).collect())
        }
        Verb::LowerSet { ty, psi, weight: w, grade } => {
            let rs = root_system(ty)?;
            let ring = CharRing::new(&rs, lim);
            let cat = GradedCategory::new(&ring);
            let top = GradedSimple::new(weight(&rs, w)?, *grade);
            let set = cat.lower_set_psi(&weight(&rs, psi)?, &top)?;
            if json_mode {
                let v: Vec<&GradedSimple> = set.elements.iter().collect();
                return Ok(pretty(&serde_json::to_value(v).expect("graded simples serialize")));
            }
            Ok(set.elements.iter().map(|x| format!("{x}\n")).collect())
        }
        Verb::AffineChar { ty, level, finite, delta } => {
            let rs = root_system(ty)?;
            let fin = match finite {
                Some(f) => weight(&rs, f)?,
                None => Weight::zero(rs.rank()),
            };
            let delta: Rational64 = parse_rational(delta)?;
            let lam = AffineWeight::new(&fin, *level, delta);
            let aff = AffineRootSystem::new(&rs, lim);
            let ch = aff.truncated_character(&lam, g.depth)?;
            if json_mode {
                return Ok(pretty(&aff.series_json(&ch)));
            }
            Ok(aff
                .terms(&ch)
                .into_iter()
                .map(|(w, c)| format!("{w} {c}\n"))
                .collect())
        }
        Verb::Garland { order } => {
            let p = garland_series(*order, &lim)?;
            let ok = *order == 0 || newton_check(*order, &lim)?;
            if json_mode {
                let terms: Vec<Value> = p
                    .terms()
                    .iter()
                    .map(|(k, c)| json!({ "monomial": k, "coefficient": c.to_string() }))
                    .collect();
                return Ok(pretty(&json!({ "order": order, "terms": terms, "newton_check": ok })));
            }
            Ok(p.terms().iter().map(|(k, c)| format_monomial(k, c) + "\n").collect())
        }
        Verb::Zform { r, s, n } => {
            let ok = zform_check(*r, *s, *n, &lim)?;
            Ok(if json_mode { json!({ "r": r, "s": s, "N": n, "holds": ok }).to_string() } else { ok.to_string() })
        }
    }
}
