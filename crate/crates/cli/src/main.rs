use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domino_core::cycles::{all_cycles, mmt, move_through, Cycle};
use domino_core::equivalence::{sim_partition, sim_tableaux, verify_theorem, witness_chain, VerifyOptions, DEFAULT_BOUND};
use domino_core::insertion::{rs, rs_inverse, TableauPair};
use domino_core::structure::{cycle_structure_set, forest, gamma_of};
use domino_core::{DominoTableau, Error, SignedPermutation};

#[derive(Parser)]
#[command(name = "domino", version, about = "Domino tableaux and rank-r Robinson-Schensted maps for signed permutations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
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
    /// Insert a signed word, printing the left and right tableaux.
    Rs {
        #[arg(short, default_value_t = 0)]
        r: usize,
        /// Signed word such as "3 -1 2".
        word: String,
    },
    /// Recover the signed word from a pair file.
    InverseRs {
        #[arg(short)]
        r: Option<usize>,
        pair: PathBuf,
    },
    /// List the cycles, forest and cycle structure set of a tableau.
    Cycles { tableau: PathBuf },
    /// Move through the cycles containing the given labels.
    Move {
        tableau: PathBuf,
        #[arg(required = true)]
        labels: Vec<u32>,
    },
    /// Apply the minimal moving-through map to a pair file.
    Mmt { pair: PathBuf },
    /// Build the hook-shaped tableau with the same shape and cycle structure.
    Gamma { tableau: PathBuf },
    /// Print the classes of H_n under cycle moves of right tableaux.
    Classes {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
    },
    /// Check that the two equivalences agree on H_n.
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
        /// Also build and check witness chains inside every class.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Show a certified chain between the right tableaux of two words.
    Explain {
        #[arg(short, default_value_t = 0)]
        r: usize,
        w: String,
        y: String,
    },
    /// Re-render a tableau file as text or JSON.
    Render { tableau: PathBuf },
}

enum Failure {
    Usage(String),
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailure(_) | Error::Internal { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Tableau files may be JSON or the text grid.
fn load_tableau(path: &Path) -> Result<DominoTableau, Failure> {
    let text = read(path)?;
    let t = if text.trim_start().starts_with('{') {
        DominoTableau::from_json(&text)?
    } else {
        DominoTableau::parse(&text)?
    };
    Ok(t)
}

fn load_pair(path: &Path) -> Result<TableauPair, Failure> {
    let text = read(path)?;
    let pair: TableauPair = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid pair file: {e}")))?;
    Ok(TableauPair::new(pair.left, pair.right)?)
}

fn word(text: &str) -> Result<SignedPermutation, Failure> {
    Ok(text.parse::<SignedPermutation>()?)
}

fn show_pair(p: &TableauPair, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(p).expect("pair serializes"),
        Format::Text => format!("left:\n{}right:\n{}", p.left, p.right),
    }
}

fn show_tableau(t: &DominoTableau, format: Format) -> String {
    match format {
        Format::Json => t.to_json(),
        Format::Text => t.render(),
    }
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Rs { r, word: w } => Ok(show_pair(&rs(&word(w)?, *r), format)),
        Command::InverseRs { r, pair } => {
            let p = load_pair(pair)?;
            let w = rs_inverse(&p, r.unwrap_or(p.rank()))?;
            Ok(match format {
                Format::Json => json!(w).to_string(),
                Format::Text => w.to_string(),
            })
        }
        Command::Cycles { tableau } => {
            let t = load_tableau(tableau)?;
            let cycles = all_cycles(&t);
            let f = forest(&t)?;
            let cs = cycle_structure_set(&t);
            Ok(match format {
                Format::Json => json!({ "cycles": cycles, "forest": f.labeled(), "cs": cs }).to_string(),
                Format::Text => {
                    let mut out = String::new();
                    for c in &cycles {
                        let kind = serde_json::to_value(c.kind).expect("kind serializes");
                        let ends = c.endpoints().map(|(b, f)| format!("  S_b {b}  S_f {f}")).unwrap_or_default();
                        out.push_str(&format!("{} {}{ends}\n", kind.as_str().unwrap_or_default(), c.cycle));
                    }
                    out.push_str(&format!("forest: {}\n", f.to_json()));
                    out.push_str(&format!("cs: {}\n", serde_json::to_string(&cs).expect("cs serializes")));
                    out
                }
            })
        }
        Command::Move { tableau, labels } => {
            let t = load_tableau(tableau)?;
            let infos = all_cycles(&t);
            let mut chosen: Vec<Cycle> = Vec::new();
            for &l in labels {
                let c = infos.iter().find(|c| c.cycle.contains(l)).ok_or(Error::LabelNotFound(l))?;
                if !chosen.contains(&c.cycle) {
                    chosen.push(c.cycle.clone());
                }
            }
            Ok(show_tableau(&move_through(&t, &chosen)?, format))
        }
        Command::Mmt { pair } => Ok(show_pair(&mmt(&load_pair(pair)?)?, format)),
        Command::Gamma { tableau } => Ok(show_tableau(&gamma_of(&load_tableau(tableau)?)?, format)),
        Command::Classes { n, r } => {
            if *n > DEFAULT_BOUND {
                return Err(Error::ResourceBound { n: *n, bound: DEFAULT_BOUND }.into());
            }
            let classes = sim_partition(*n, *r)?;
            Ok(match format {
                Format::Json => json!(classes).to_string(),
                Format::Text => {
                    let lines: Vec<String> = classes
                        .iter()
                        .map(|c| c.iter().map(|w| format!("[{w}]")).collect::<Vec<_>>().join(" "))
                        .collect();
                    lines.join("\n") + "\n"
                }
            })
        }
        Command::Verify { n, r, witnesses, bound } => {
            let rep = verify_theorem(*n, *r, VerifyOptions { bound: *bound, witnesses: *witnesses })?;
            let body = match format {
                Format::Json => rep.to_json(),
                Format::Text => {
                    let chains = rep.witness_chains.map(|c| format!(", {c} witness chains verified")).unwrap_or_default();
                    format!(
                        "n = {}, r = {}: {} classes by cycle moves, {} by right tableaux at r and r+1; equal = {}{chains}\n",
                        rep.n,
                        rep.r,
                        rep.classes_sim.len(),
                        rep.classes_squig.len(),
                        rep.equal
                    )
                }
            };
            if rep.equal {
                Ok(body)
            } else {
                Err(Failure::Verification(body))
            }
        }
        Command::Explain { r, w, y } => {
            let (w, y) = (word(w)?, word(y)?);
            if w.len() != y.len() {
                return Err(Failure::Input("words have different lengths".into()));
            }
            let (a, b) = (rs(&w, *r).right, rs(&y, *r).right);
            if sim_tableaux(&b, &a).is_none() {
                let reason = if a.same_shape(&b) {
                    "right tableaux differ outside the non-core open cycles".to_string()
                } else {
                    format!("no cycle moves relate shapes {} and {}", a.shape(), b.shape())
                };
                return Ok(match format {
                    Format::Json => json!({ "equivalent": false, "reason": reason }).to_string(),
                    Format::Text => format!("not equivalent: {reason}\n"),
                });
            }
            let chain = witness_chain(&a, &b)?;
            Ok(match format {
                Format::Json => json!({ "equivalent": true, "chain": chain }).to_string(),
                Format::Text => {
                    let mut out = format!("equivalent; chain of {} tableaux\n", chain.tableaux.len());
                    for (i, t) in chain.tableaux.iter().enumerate() {
                        out.push_str(&format!("T{}:\n{t}", i + 1));
                        if let Some(s) = chain.steps.get(i) {
                            out.push_str(&format!(
                                "S{}:\n{}S'{}:\n{}merged right tableau:\n{}",
                                i + 1,
                                s.left,
                                i + 1,
                                s.left_next,
                                s.merged
                            ));
                        }
                    }
                    out
                }
            })
        }
        Command::Render { tableau } => Ok(show_tableau(&load_tableau(tableau)?, format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(m)) => (m, 3),
    };
    let mut text = text;
    if !text.ends_with('\n') && !text.is_empty() {
        text.push('\n');
    }
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
