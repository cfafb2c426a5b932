//! `hall`: command-line front end for Hall products, decompositions and
//! closure audits of quiver representations over small prime fields.
//!
//! Exit codes: 0 success or audit pass, 1 audit failure, 2 input error,
//! 3 capacity exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hall_core::audit::{
    audit, certify_construction, survey_conditions, tachikawa_check, AuditConfig, Construction,
    Mode, SurveyReport, TachikawaReport,
};
use hall_core::hall::{hall_product, twisted_product, Context, IsoRegistry};
use hall_core::limits::CAP_ENV;
use hall_core::quiver::predict;
use hall_core::rep::{
    decompose, dimension_vectors, end_algebra, enumerate_reps, invariants, loewy_data,
    loewy_layers, RepJson, Representation,
};
use hall_core::{parse_quiver, HallError, Limits, PrimeField, Quiver};

#[derive(Parser, Debug)]
#[command(
    name = "hall",
    version,
    about = "Hall algebras of quivers over small prime fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for audits.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the randomized phase of decomposition.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Enumeration cap; overrides the environment variable.
    #[arg(long, global = true, env = CAP_ENV)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shape of each component and the predicted ideal/subring verdicts.
    Classify { quiver: PathBuf },
    /// Hall product of two modules given as JSON files.
    Product {
        quiver: PathBuf,
        a: PathBuf,
        b: PathBuf,
        /// Multiply by v^<A,B>.
        #[arg(long)]
        twisted: bool,
        /// Field size (a prime).
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Work in the category of nilpotent representations.
        #[arg(long)]
        nilpotent: bool,
    },
    /// Bounded audit of whether D_r is a subring or ideal.
    Check {
        quiver: PathBuf,
        #[arg(long, default_value = "subring")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        nilpotent: bool,
        /// Replay a failure certificate, twisted and over the opposite quiver.
        #[arg(long)]
        replay: bool,
    },
    /// Krull-Schmidt decomposition of a module.
    Decompose { quiver: PathBuf, module: PathBuf },
    /// Isomorphism invariants and Loewy data of a module.
    Invariants { quiver: PathBuf, module: PathBuf },
    /// Isomorphism classes with a given dimension vector (`1,2`) or total dimension (`3`).
    Enumerate {
        quiver: PathBuf,
        #[arg(long)]
        dim: String,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        nilpotent: bool,
        /// Keep only indecomposable classes.
        #[arg(long)]
        indecomposable: bool,
    },
    /// Rebuild one of the built-in explicit constructions, or `all` of them.
    Certify {
        construction: String,
        /// Also replay the product, twisted and over the opposite quiver.
        #[arg(long)]
        replay: bool,
    },
    /// Simple socle / simple top survey, plus the projective-injective criterion on acyclic quivers.
    Survey {
        quiver: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        nilpotent: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<HallError> for Failure {
    fn from(e: HallError) -> Self {
        let code = if e.is_capacity() { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Rendered output plus the exit code it implies.
struct Output {
    text: String,
    json: serde_json::Value,
    code: u8,
}

impl Output {
    fn new(text: String, json: impl Serialize) -> Result<Output, Failure> {
        let json = serde_json::to_value(json).map_err(|e| input_error(e.to_string()))?;
        Ok(Output {
            text,
            json,
            code: 0,
        })
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_quiver(path: &Path) -> Result<Arc<Quiver>, Failure> {
    let text = read(path)?;
    parse_quiver(&text)
        .map(Arc::new)
        .map_err(|e| input_error(format!("{}:{e}", path.display())))
}

fn load_module(
    q: &Arc<Quiver>,
    path: &Path,
    field: Option<PrimeField>,
) -> Result<Representation, Failure> {
    let text = read(path)?;
    let m = Representation::from_json(q, &text)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    if let Some(f) = field {
        if m.field() != f {
            return Err(input_error(format!(
                "{}: module is over {}, expected {}",
                path.display(),
                m.field(),
                f
            )));
        }
    }
    Ok(m)
}

fn field(q: u32) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(q)?)
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut l = Limits::default();
    if let Some(cap) = cli.cap {
        if cap == 0 {
            return Err(input_error("the cap must be positive"));
        }
        l.cap = cap;
    }
    if let Some(seed) = cli.seed {
        l.seed = seed;
    }
    Ok(l)
}

fn parse_dims(spec: &str, vertices: usize) -> Result<Vec<Vec<usize>>, Failure> {
    let parts: Vec<usize> = spec
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| input_error(format!("--dim {spec:?}: expected comma-separated integers")))?;
    if parts.len() == vertices {
        Ok(vec![parts])
    } else if parts.len() == 1 {
        Ok(dimension_vectors(parts[0], vertices))
    } else {
        Err(input_error(format!(
            "--dim {spec:?}: expected {vertices} entries or a single total"
        )))
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    quiver: String,
    #[serde(flatten)]
    verdict: hall_core::quiver::ShapeVerdict,
}

#[derive(Serialize)]
struct InvariantsOut {
    dims: Vec<usize>,
    end_dim: usize,
    nilpotent: bool,
    word_ranks: Vec<usize>,
    digest: String,
    loewy: Option<LoewyOut>,
}

#[derive(Serialize)]
struct LoewyOut {
    radical: Vec<usize>,
    socle: Vec<usize>,
    top: Vec<usize>,
    layers: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct EnumerateOut {
    quiver: String,
    p: u32,
    nilpotent: bool,
    indecomposable: bool,
    count: usize,
    classes: Vec<RepJson>,
}

#[derive(Serialize)]
struct SurveyOut {
    survey: SurveyReport,
    tachikawa: Option<TachikawaReport>,
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let lim = limits(cli)?;
    match &cli.command {
        Command::Classify { quiver } => {
            let q = load_quiver(quiver)?;
            let v = predict(&q);
            let shapes: Vec<String> = v.components.iter().map(|c| c.shape.to_string()).collect();
            let text = format!(
                "{}; ideal_all_r={}; subring_r1={}; subring_all_r={}",
                shapes.join(" ⊔ "),
                v.ideal_all_r,
                v.subring_r1,
                v.subring_all_r
            );
            Output::new(
                text,
                ClassifyOut {
                    quiver: q.name().to_string(),
                    verdict: v,
                },
            )
        }
        Command::Product {
            quiver,
            a,
            b,
            twisted,
            q: p,
            nilpotent,
        } => {
            let f = field(*p)?;
            let q = load_quiver(quiver)?;
            let ma = load_module(&q, a, Some(f))?;
            let mb = load_module(&q, b, Some(f))?;
            let ctx = Context::new(q.clone(), f, *nilpotent);
            let mut reg = IsoRegistry::new(ctx.clone(), lim);
            let prod = if *twisted {
                twisted_product(&ma, &mb, &mut reg)?
            } else {
                hall_product(&ma, &mb, &mut reg)?
            };
            Output::new(prod.to_text(), prod.to_json_value(&ctx))
        }
        Command::Check {
            quiver,
            mode,
            r,
            max_dim,
            q: p,
            nilpotent,
            replay,
        } => {
            let mode: Mode = mode.parse()?;
            let q = load_quiver(quiver)?;
            let cfg = AuditConfig::new(*r, mode, *max_dim)
                .field(field(*p)?)
                .nilpotent(*nilpotent)
                .limits(lim)
                .threads(cli.threads);
            let report = audit(&q, &cfg)?;
            let mut text = report.to_text();
            if let (true, Some(c)) = (*replay, &report.certificate) {
                c.replay(&lim)?;
                c.replay_twisted(&lim)?;
                c.opposite(&lim)?.replay(&lim)?;
                text.push_str("\nreplay: product, twisted product and opposite quiver agree");
            }
            let mut out = Output::new(text, &report)?;
            out.code = if report.passed() { 0 } else { 1 };
            Ok(out)
        }
        Command::Decompose { quiver, module } => {
            let q = load_quiver(quiver)?;
            let m = load_module(&q, module, None)?;
            let d = decompose(&m, &lim)?;
            let mut text = format!("s = {}", d.s);
            for x in &d.summands {
                text.push_str(&format!(
                    "\n  {} x {} {}",
                    x.multiplicity,
                    x.module.dim_label(),
                    x.module.to_json()
                ));
            }
            Output::new(text, d.to_json_value())
        }
        Command::Invariants { quiver, module } => {
            let q = load_quiver(quiver)?;
            let m = load_module(&q, module, None)?;
            let inv = invariants(&m)?;
            let loewy = if m.is_nilpotent() {
                let d = loewy_data(&m)?;
                Some(LoewyOut {
                    radical: d.radical.module.dims().to_vec(),
                    socle: d.socle.module.dims().to_vec(),
                    top: d.top.dims().to_vec(),
                    layers: loewy_layers(&m)?,
                })
            } else {
                None
            };
            let end_dim = end_algebra(&m)?.dim();
            let mut text = format!(
                "dims {:?}\nEnd dim = {}\nnilpotent: {}\nword ranks {:?}\ndigest {}",
                inv.dims,
                end_dim,
                inv.nilpotent,
                inv.word_ranks,
                inv.digest()
            );
            if let Some(l) = &loewy {
                text.push_str(&format!(
                    "\nradical {:?}\nsocle {:?}\ntop {:?}\nlayers {:?}",
                    l.radical, l.socle, l.top, l.layers
                ));
            }
            let digest = inv.digest();
            Output::new(
                text,
                InvariantsOut {
                    dims: inv.dims,
                    end_dim,
                    nilpotent: inv.nilpotent,
                    word_ranks: inv.word_ranks,
                    digest,
                    loewy,
                },
            )
        }
        Command::Enumerate {
            quiver,
            dim,
            q: p,
            nilpotent,
            indecomposable,
        } => {
            let f = field(*p)?;
            let q = load_quiver(quiver)?;
            let mut classes = Vec::new();
            for d in parse_dims(dim, q.vertex_count())? {
                let reps = enumerate_reps(&q, &d, f, *nilpotent, &lim)?;
                for m in reps {
                    if !*indecomposable || decompose(&m, &lim)?.is_indecomposable() {
                        classes.push(m);
                    }
                }
            }
            let mut text = format!("{} classes", classes.len());
            for m in &classes {
                text.push_str(&format!("\n  {} {}", m.dim_label(), m.to_json()));
            }
            let out = EnumerateOut {
                quiver: q.name().to_string(),
                p: f.p() as u32,
                nilpotent: *nilpotent,
                indecomposable: *indecomposable,
                count: classes.len(),
                classes: classes.iter().map(|m| m.to_json_value()).collect(),
            };
            Output::new(text, out)
        }
        Command::Certify {
            construction,
            replay,
        } => {
            let list: Vec<Construction> = if construction == "all" {
                Construction::ALL.to_vec()
            } else {
                vec![construction.parse()?]
            };
            let mut texts = Vec::new();
            let mut reports = Vec::new();
            for c in list {
                let rep = certify_construction(c, &lim).map_err(|e| Failure {
                    code: 1,
                    message: e.to_string(),
                })?;
                let mut text = rep.to_text();
                if *replay {
                    let cert = &rep.certificate;
                    let checked = cert
                        .replay(&lim)
                        .and_then(|_| cert.replay_twisted(&lim))
                        .and_then(|_| cert.opposite(&lim).and_then(|o| o.replay(&lim)));
                    checked.map_err(|e| Failure {
                        code: 1,
                        message: format!("{c}: {e}"),
                    })?;
                    text.push_str("\nreplay: product, twisted product and opposite quiver agree");
                }
                texts.push(text);
                reports.push(rep);
            }
            if reports.len() == 1 {
                Output::new(texts.remove(0), &reports[0])
            } else {
                Output::new(texts.join("\n\n"), &reports)
            }
        }
        Command::Survey {
            quiver,
            max_dim,
            q: p,
            nilpotent,
        } => {
            let f = field(*p)?;
            let q = load_quiver(quiver)?;
            let survey = survey_conditions(&q, f, *max_dim, *nilpotent, &lim)?;
            let tachikawa = if q.is_acyclic() {
                Some(tachikawa_check(&q, f, &lim)?)
            } else {
                None
            };
            let mut text = survey.to_text();
            if let Some(t) = &tachikawa {
                text.push('\n');
                text.push_str(&t.to_text());
            }
            Output::new(text, SurveyOut { survey, tachikawa })
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    let mut body = match cli.format {
        Format::Text => out.text.clone(),
        Format::Json => {
            serde_json::to_string_pretty(&out.json).map_err(|e| input_error(e.to_string()))?
        }
    };
    body.push('\n');
    match &cli.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| input_error(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli, &out).map(|_| out.code));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
