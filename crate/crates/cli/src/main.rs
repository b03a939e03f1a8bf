use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use onefaced::atlas::{count_rooted, enumerate_classes, enumerate_rooted};
use onefaced::canonical::canonicalize_with;
use onefaced::families::necklace;
use onefaced::graph::{build_hat_graph, build_surgery_graph};
use onefaced::moves::{
    connected_sum, curve_decomposition, find_torus_blocks, simplify_cascade, split_torus_summand, surgery,
    total_trisections, type_counts, vertex_census,
};
use onefaced::reduction::reduce_to_torus;
use onefaced::verify::verify_genus;
use onefaced::{Equivalence, Error, GluingPattern};

/// Gluing patterns of one-faced curve collections. Positions are 0-based.
#[derive(Parser)]
#[command(name = "onefaced", version)]
struct Cli {
    /// Worker threads for enumeration and graph building.
    #[arg(long, global = true, env = "ONEFACED_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GenusArg {
    #[arg(long, short)]
    genus: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Checks a word and prints its genus.
    Validate {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Canonical representative of a word.
    Canon {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Also identify a word with its reversal.
        #[arg(long)]
        reflect: bool,
        #[arg(long)]
        json: bool,
    },
    /// Genus, 1-simple curves, curves and vertex census at root 0.
    Info {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Surgery between two intertwined positions.
    Surgery {
        #[arg(allow_hyphen_values = true)]
        word: String,
        i: usize,
        j: usize,
    },
    /// Simplifies until no simplification applies.
    Simplify {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Print the moves as JSON lines instead of the result.
        #[arg(long)]
        trace: bool,
    },
    /// Full reduction down to the torus, as JSON lines.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Connected sum of two marked words.
    Sum {
        #[arg(allow_hyphen_values = true)]
        left: String,
        i: usize,
        #[arg(allow_hyphen_values = true)]
        right: String,
        j: usize,
    },
    /// Splits off a torus summand.
    Split {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Block start; defaults to the first block found.
        #[arg(long)]
        block: Option<usize>,
    },
    /// Lists classes, or rooted patterns with --rooted.
    Enumerate {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        rooted: bool,
        #[arg(long, conflicts_with = "words")]
        json: bool,
        #[arg(long)]
        words: bool,
    },
    /// Builds the surgery graph of a genus.
    Graph {
        #[command(flatten)]
        genus: GenusArg,
        /// Include all lower genera joined by torus sums.
        #[arg(long)]
        hat: bool,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact diameter of the surgery graph of a genus.
    Diameter {
        #[command(flatten)]
        genus: GenusArg,
    },
    /// The necklace of a genus.
    Necklace {
        #[command(flatten)]
        genus: GenusArg,
    },
    /// Runs the acceptance criteria at one genus.
    Verify {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        json: bool,
    },
}

fn parse(word: &str) -> Result<GluingPattern, Error> {
    GluingPattern::parse(word)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn run(cmd: Command) -> Result<bool, Error> {
    match cmd {
        Command::Validate { word } => {
            let p = parse(&word)?;
            println!("ok genus {}", p.genus());
        }
        Command::Canon { word, reflect, json } => {
            let eq = if reflect {
                Equivalence::RotationReflection
            } else {
                Equivalence::Rotation
            };
            let c = canonicalize_with(&parse(&word)?, eq);
            if json {
                println!("{}", to_json(&c));
            } else {
                println!("{}", c.word_string());
            }
        }
        Command::Info { word, json } => {
            let p = parse(&word)?;
            let curves = curve_decomposition(&p);
            let census = vertex_census(&p, 0);
            let counts = type_counts(&census);
            let info = serde_json::json!({
                "genus": p.genus(),
                "S": curves.one_simple_count(),
                "curves": curves.curves.len(),
                "census": counts,
                "trisections": total_trisections(&census),
            });
            if json {
                println!("{info}");
            } else {
                println!("genus {}", p.genus());
                println!("S {}", curves.one_simple_count());
                println!("curves {}", curves.curves.len());
                println!("type1 {} type2 {} type3 {}", counts.type1, counts.type2, counts.type3);
                println!("trisections {}", total_trisections(&census));
            }
        }
        Command::Surgery { word, i, j } => println!("{}", surgery(&parse(&word)?, i, j)?),
        Command::Simplify { word, trace } => {
            let (q, t) = simplify_cascade(&parse(&word)?);
            if trace {
                print!("{}", t.to_json_lines());
            } else {
                println!("{q}");
            }
        }
        Command::Reduce { word } => {
            let (_, t) = reduce_to_torus(&parse(&word)?)?;
            print!("{}", t.to_json_lines());
        }
        Command::Sum { left, i, right, j } => println!("{}", connected_sum(&parse(&left)?, i, &parse(&right)?, j)?),
        Command::Split { word, block } => {
            let p = parse(&word)?;
            let q = match block {
                Some(q) => q,
                None => *find_torus_blocks(&p).first().ok_or(Error::NotABlock(0))?,
            };
            let s = split_torus_summand(&p, q)?;
            println!("{}", s.pattern);
            println!("marked {}", s.marked);
        }
        Command::Enumerate {
            genus: GenusArg { genus },
            rooted,
            json,
            words,
        } => {
            if rooted {
                if words || json {
                    let all = enumerate_rooted(genus)?;
                    if json {
                        let ws: Vec<&[i32]> = all.iter().map(|p| p.word()).collect();
                        println!("{}", to_json(&ws));
                    } else {
                        all.iter().for_each(|p| println!("{p}"));
                    }
                } else {
                    println!("{}", count_rooted(genus)?);
                }
            } else {
                let recs = enumerate_classes(genus)?;
                if json {
                    println!("{}", to_json(&recs));
                } else if words {
                    recs.iter().for_each(|r| println!("{}", r.class.word_string()));
                } else {
                    println!("classes {}", recs.len());
                    for r in &recs {
                        println!(
                            "{}\torbit {}\tS {}\tcurves {}\t{}",
                            r.class.word_string(),
                            r.class.orbit_size,
                            r.s,
                            r.curve_count,
                            if r.non_simplifiable { "non-simplifiable" } else { "simplifiable" }
                        );
                    }
                }
            }
        }
        Command::Graph {
            genus: GenusArg { genus },
            hat,
            dot,
            json,
        } => {
            let g = if hat {
                build_hat_graph(genus)?
            } else {
                build_surgery_graph(genus)?
            };
            if dot {
                print!("{}", g.to_dot());
            } else if json {
                println!("{}", g.to_json());
            } else {
                println!("nodes {} edges {} connected {}", g.node_count(), g.edge_count(), g.is_connected());
            }
        }
        Command::Diameter {
            genus: GenusArg { genus },
        } => println!("{}", build_surgery_graph(genus)?.diameter(genus)?),
        Command::Necklace {
            genus: GenusArg { genus },
        } => println!("{}", necklace(genus)?),
        Command::Verify {
            genus: GenusArg { genus },
            json,
        } => {
            let reports = verify_genus(genus);
            if reports.is_empty() {
                return Err(Error::UnsupportedGenus(genus));
            }
            if json {
                println!("{}", to_json(&reports));
            } else {
                reports.iter().for_each(|r| println!("{}", r.line()));
            }
            return Ok(reports.iter().all(|r| r.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: thread pool already initialised: {e}");
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
