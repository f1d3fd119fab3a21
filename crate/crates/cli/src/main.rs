use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dicrit::colouring::{dichromatic_number, is_k_dicritical, DicriticalVerdict};
use dicrit::families::{self, FamilySpec};
use dicrit::graph::{digirth, longest_directed_path, parse_dg, write_dg};
use dicrit::lab::{self, EnumerationSpec, Outcome, Suite, SuiteParams};
use dicrit::subdivision::{
    contains_subdivision, find_out_star, find_spindle, find_tree_subdivision, ArcCounts,
    FinderError, SubdivisionWitness, TreeFinderError, TreeMode,
};
use dicrit::{Budget, Digraph};

#[derive(Parser)]
#[command(name = "dicrit", version, about = "Dicritical digraphs and subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of an explicit family as a .dg file.
    Gen {
        family: String,
        params: Vec<String>,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dichromatic number.
    Chi {
        file: PathBuf,
        /// Also print an optimal dicolouring.
        #[arg(long)]
        colouring: bool,
    },
    /// Test k-dicriticality.
    Dicritical {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Length of a shortest directed cycle.
    Digirth { file: PathBuf },
    /// A longest directed path.
    LongestPath { file: PathBuf },
    /// Search for a subdivision of a pattern (file or `tag:p1,p2`).
    Find {
        pattern: String,
        host: PathBuf,
        /// Least number of subdividing vertices per pattern arc: one integer
        /// for every arc, or a list `u-v=c,...`.
        #[arg(long)]
        min_counts: Option<String>,
    },
    /// Search for a subdivision of C(k,k).
    FindSpindle {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Search for k out-paths of length l from a vertex.
    FindOutstar {
        file: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Constructive tree-subdivision finder.
    FindTree {
        tree: PathBuf,
        host: PathBuf,
        /// One integer for every tree arc, or a list `u-v=c,...`.
        #[arg(long, default_value = "0")]
        counts: String,
        #[arg(long, default_value = "oriented")]
        mode: TreeMode,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the counterexample here instead of stdout.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// List or count small digraphs.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    oriented: bool,
    #[arg(long, default_value_t = 0)]
    min_out: usize,
    #[arg(long, default_value_t = 0)]
    min_in: usize,
    #[arg(long)]
    min_digirth: Option<usize>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    strong: bool,
    /// Every labelling instead of one digraph per isomorphism class.
    #[arg(long)]
    labelled: bool,
    /// Print only the number of digraphs.
    #[arg(long)]
    count: bool,
}

/// Anything that ends the run with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<ExitCode, Usage>;

const FOUND: u8 = 0;
const NOT_FOUND: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Run {
    let budget = Budget::from_env();
    match command {
        Command::Gen {
            family,
            params,
            output,
        } => gen(&family, &params, output.as_deref()),
        Command::Chi { file, colouring } => {
            let d = read(&file)?;
            let (chi, c) = dichromatic_number(&d, &budget)?;
            println!("{chi}");
            if colouring {
                let colours: Vec<String> = c.colours().iter().map(|c| c.to_string()).collect();
                println!("{}", colours.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dicritical { file, k } => {
            let d = read(&file)?;
            let verdict = is_k_dicritical(&d, k, &budget)?;
            match &verdict {
                DicriticalVerdict::Dicritical => println!("{k}-dicritical"),
                DicriticalVerdict::Colourable(c) => {
                    println!("not {k}-dicritical: {}-dicolourable", c.k())
                }
                DicriticalVerdict::TooChromatic { chi } => {
                    println!("not {k}-dicritical: dichromatic number {chi}")
                }
                DicriticalVerdict::RedundantArc { arc: (u, v) } => {
                    println!("not {k}-dicritical: deleting {u} {v} keeps {k} colours")
                }
                DicriticalVerdict::RedundantVertex { vertex } => {
                    println!("not {k}-dicritical: isolated vertex {vertex}")
                }
            }
            Ok(verdict_code(verdict.is_dicritical()))
        }
        Command::Digirth { file } => {
            println!("{}", digirth(&read(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::LongestPath { file } => {
            let p = longest_directed_path(&read(&file)?, &budget)?;
            let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
            println!("{} {}", p.order(), vs.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Find {
            pattern,
            host,
            min_counts,
        } => {
            let (pattern, name) = read_pattern(&pattern)?;
            let host = read(&host)?;
            let counts = min_counts
                .map(|s| parse_counts(&s, &pattern))
                .transpose()?;
            let found = contains_subdivision(&host, &pattern, counts.as_ref(), &budget)?;
            report(found, &format!("no subdivision of {name}"))
        }
        Command::FindSpindle { file, k } => {
            let d = read(&file)?;
            let found = find_spindle(&d, k, &budget).map_err(finder)?;
            report(found, &format!("no subdivision of C({k},{k})"))
        }
        Command::FindOutstar { file, u, k, l } => {
            let d = read(&file)?;
            let found = find_out_star(&d, u, k, l, &budget).map_err(finder)?;
            report(found, &format!("no copy of S_{k}^{{+({l})}} at {u}"))
        }
        Command::FindTree {
            tree,
            host,
            counts,
            mode,
        } => {
            let t = read(&tree)?;
            let d = read(&host)?;
            let counts = parse_counts(&counts, &t)?;
            match find_tree_subdivision(&d, &t, &counts, mode, &budget) {
                Ok(w) => report(Some(w), ""),
                Err(TreeFinderError::NoWitness) => report(None, "no subdivision of the tree"),
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify {
            suite,
            max_n,
            k,
            l,
            jobs,
            dump,
        } => {
            let suite: Suite = suite.parse()?;
            let mut params = SuiteParams {
                max_n,
                k,
                l,
                search_budget: budget,
                ..SuiteParams::default()
            };
            if std::env::var(dicrit::budget::BUDGET_ENV).is_ok() {
                params.enumeration_budget = budget;
            }
            let verdict = with_jobs(jobs, || lab::verify(suite, &params))?;
            println!("{}", verdict.summary_line());
            for note in &verdict.notes {
                eprintln!("note: {note}");
            }
            match &verdict.outcome {
                Outcome::Pass => Ok(ExitCode::SUCCESS),
                Outcome::Fail(c) => {
                    eprintln!("counterexample {}: {}", c.instance.label, c.predicate);
                    let text = write_dg(&c.instance.digraph);
                    match dump {
                        Some(path) => fs::write(&path, text)
                            .map_err(|e| Usage(format!("{}: {e}", path.display())))?,
                        None => print!("{text}"),
                    }
                    Ok(ExitCode::from(NOT_FOUND))
                }
                Outcome::Refused(why) => Err(Usage(why.clone())),
            }
        }
        Command::Enumerate(args) => enumerate(args),
    }
}

fn verdict_code(ok: bool) -> ExitCode {
    ExitCode::from(if ok { FOUND } else { NOT_FOUND })
}

fn finder(e: FinderError) -> Usage {
    Usage(e.to_string())
}

fn read(path: &Path) -> Result<Digraph, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_dg(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

/// A pattern given as a `.dg` file or a family tag.
fn read_pattern(arg: &str) -> Result<(Digraph, String), Usage> {
    if Path::new(arg).is_file() {
        return Ok((read(Path::new(arg))?, arg.to_string()));
    }
    let spec: FamilySpec = arg.parse()?;
    let name = match spec {
        FamilySpec::Spindle { k, l } => format!("C({k},{l})"),
        ref other => other.to_string(),
    };
    Ok((spec.build()?, name))
}

/// `N` applies to every arc of `pattern`; otherwise `u-v=c` pairs.
fn parse_counts(s: &str, pattern: &Digraph) -> Result<ArcCounts, Usage> {
    if let Ok(c) = s.trim().parse::<usize>() {
        return Ok(pattern.arcs().map(|arc| (arc, c)).collect());
    }
    let mut counts = ArcCounts::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let bad = || Usage(format!("bad count `{item}`, expected u-v=c"));
        let (arc, c) = item.split_once('=').ok_or_else(bad)?;
        let (u, v) = arc.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        let c: usize = c.trim().parse().map_err(|_| bad())?;
        if !pattern.has_arc(u, v) {
            return Err(Usage(format!("{u}-{v} is not an arc of the pattern")));
        }
        counts.insert((u, v), c);
    }
    Ok(counts)
}

fn report(found: Option<SubdivisionWitness>, absent: &str) -> Run {
    match found {
        Some(w) => {
            w.validate()
                .map_err(|e| Usage(format!("internal error, invalid witness: {e}")))?;
            println!("{}", w.to_json());
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("{absent}");
            Ok(ExitCode::from(NOT_FOUND))
        }
    }
}

fn gen(family: &str, params: &[String], output: Option<&Path>) -> Run {
    let d = if family == "join" {
        let base = params
            .first()
            .ok_or_else(|| Usage("join takes a base .dg file".into()))?;
        families::universal_join(&read(Path::new(base))?)
    } else {
        let params: Vec<&str> = params.iter().map(String::as_str).collect();
        FamilySpec::parse(family, &params)?.build()?
    };
    let text = write_dg(&d);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(args: EnumerateArgs) -> Run {
    let spec = EnumerationSpec {
        n: args.n,
        oriented_only: args.oriented,
        min_out_degree: args.min_out,
        min_in_degree: args.min_in,
        min_digirth: args.min_digirth,
        connected: args.connected,
        strongly_connected: args.strong,
        up_to_iso: !args.labelled,
    };
    let budget = match std::env::var(dicrit::budget::BUDGET_ENV) {
        Ok(_) => Budget::from_env(),
        Err(_) => lab::enumeration_budget(),
    };
    if args.count {
        let count = lab::enumerate(&spec, &budget, |_| {})?;
        println!("{count}");
    } else {
        let all = lab::enumerate_all(&spec, &budget)?;
        for (i, d) in all.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", write_dg(d));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, Usage> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(_jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, Usage> {
    Ok(f())
}
