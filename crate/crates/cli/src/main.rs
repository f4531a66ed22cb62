use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recon_core::enumerate::{find_preimages_with, verify_reconstruction_with, Limits};
use recon_core::invariant::{
    all_orbit_sums, count_subgraphs, hamiltonian_cycle_count, isolated_vertex_orbit_sums, simple_graph_orbit_sums,
    span_rank, IsolatedFamily,
};
use recon_core::io;
use recon_core::known::stockmeyer_pair;
use recon_core::recognize::{reconstruct_eulerian, reconstruct_regular, report};
use recon_core::{
    are_isomorphic, deck, decks_equal, reconstruct_from_three_cards, Error, Genericity, InvariantLimits, Permutation,
    Rational, Relabel, Result, WeightedGraph,
};

#[derive(Parser)]
#[command(name = "recon", version, about = "Graph decks, reconstruction and orbit-sum invariants")]
struct Cli {
    /// Seed for every randomized path.
    #[arg(long, global = true, default_value_t = 20240917)]
    seed: u64,
    /// Worker threads for parallel enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Raise the size guards (enumeration up to n = 9; no invariant guards).
    #[arg(long, global = true)]
    max_n_override: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Eulerian,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simple,
    Isolated,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the deck of a graph given as graph6 or an edge-list file.
    Deck {
        graph6: Option<String>,
        #[arg(long, conflicts_with = "graph6")]
        edges: Option<PathBuf>,
    },
    /// Print everything recognizable from a deck file.
    Recognize { deck: PathBuf },
    /// Rebuild an Eulerian or regular graph from its deck.
    Reconstruct {
        #[arg(long, value_enum)]
        class: Class,
        deck: PathBuf,
    },
    /// Check that all classes on n vertices have distinct decks.
    VerifyRc {
        #[arg(long)]
        n: usize,
    },
    /// List every graph whose deck is the given one.
    Preimages { deck: PathBuf },
    /// Count copies of a pattern in a host, or Hamiltonian cycles.
    Count {
        #[arg(long, required_unless_present = "hamiltonian")]
        pattern: Option<String>,
        #[arg(long)]
        host: String,
        #[arg(long)]
        hamiltonian: bool,
    },
    /// Rank of the degree-d products of an orbit-sum family.
    SpanCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Find the first isolated-vertex orbit sum separating two weighted graphs.
    Separate {
        #[arg(long)]
        w1: PathBuf,
        #[arg(long)]
        w2: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Rebuild a distinct-weight graph from three of its cards.
    Reconstruct3 {
        #[arg(long)]
        cards: PathBuf,
        /// Require distinct weights on present edges only.
        #[arg(long)]
        relaxed: bool,
    },
    /// Sample a distinct-weight graph and print three of its cards, shuffled.
    RandomCards {
        #[arg(long)]
        n: usize,
        /// Also write the sampled graph here.
        #[arg(long)]
        source: Option<PathBuf>,
    },
    /// Two digraphs with equal decks that are not isomorphic.
    StockmeyerDemo,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Argument(format!("{}: {e}", path.display())))
}

fn json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn run(cli: &Cli) -> Result<String> {
    let limits = if cli.max_n_override { Limits::with_override() } else { Limits::default() };
    let inv_limits = if cli.max_n_override { InvariantLimits::unbounded() } else { InvariantLimits::default() };
    match &cli.command {
        Command::Deck { graph6, edges } => {
            let g = match (graph6, edges) {
                (Some(s), None) => io::parse_graph6(s)?,
                (None, Some(p)) => io::parse_edge_list(&read(p)?)?,
                _ => return Err(Error::Argument("give a graph6 string or --edges FILE".into())),
            };
            io::deck_to_json(&deck(&g)?)
        }
        Command::Recognize { deck } => {
            let r = report(&io::deck_from_json(&read(deck)?)?)?;
            Ok(json(&serde_json::to_value(r).expect("plain data serializes")))
        }
        Command::Reconstruct { class, deck } => {
            let d = io::deck_from_json(&read(deck)?)?;
            let g = match class {
                Class::Eulerian => reconstruct_eulerian(&d)?,
                Class::Regular => reconstruct_regular(&d)?,
            };
            io::emit_graph6(&g)
        }
        Command::VerifyRc { n } => io::verification_to_json(&verify_reconstruction_with(*n, limits)?),
        Command::Preimages { deck } => {
            let found = find_preimages_with(&io::deck_from_json(&read(deck)?)?, limits)?;
            let lines = found.iter().map(io::code_to_graph6).collect::<Result<Vec<_>>>()?;
            Ok(lines.join("\n"))
        }
        Command::Count { pattern, host, hamiltonian } => {
            let h = io::parse_graph6(host)?;
            let count = if *hamiltonian {
                hamiltonian_cycle_count(&h)?
            } else {
                let p = io::parse_graph6(pattern.as_deref().expect("clap enforces --pattern"))?;
                count_subgraphs(&p, &h)?
            };
            Ok(count.to_string())
        }
        Command::SpanCheck { n, degree, family } => {
            let (name, members) = match family {
                Family::Simple => ("simple", simple_graph_orbit_sums(*n, *degree)?),
                Family::Isolated => ("isolated", isolated_vertex_orbit_sums(*n, *degree)),
                Family::All => ("all", all_orbit_sums(*n, *degree)),
            };
            let s = span_rank(&members, *n, *degree, &inv_limits)?;
            Ok(json(&serde_json::json!({
                "n": n,
                "degree": degree,
                "family": name,
                "family_size": members.len(),
                "rank": s.rank,
                "dimension": s.dimension,
                "deficiency": s.deficiency(),
            })))
        }
        Command::Separate { w1, w2, max_degree } => {
            let a = io::weighted_from_json(&read(w1)?)?;
            let b = io::weighted_from_json(&read(w2)?)?;
            if a.order() != b.order() {
                return Err(Error::SizeMismatch { expected: a.order(), actual: b.order() });
            }
            let family = IsolatedFamily::new(a.order(), *max_degree, &inv_limits)?;
            Ok(match family.separate(&a, &b)? {
                Some(s) => io::separation_to_json(&s),
                None => "none".into(),
            })
        }
        Command::Reconstruct3 { cards, relaxed } => {
            let cards = io::three_cards_from_json(&read(cards)?)?;
            let mode = if *relaxed { Genericity::Relaxed } else { Genericity::Strict };
            Ok(io::weighted_to_json(&reconstruct_from_three_cards(&cards, mode)?))
        }
        Command::RandomCards { n, source } => {
            let (w, cards) = random_cards(*n, cli.seed)?;
            if let Some(path) = source {
                fs::write(path, io::weighted_to_json(&w) + "\n")
                    .map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?;
            }
            Ok(io::three_cards_to_json(&cards))
        }
        Command::StockmeyerDemo => {
            let (a, b) = stockmeyer_pair();
            let equal = decks_equal(&deck(&a)?, &deck(&b)?);
            Ok(json(&serde_json::json!({
                "d1_arcs": a.arcs(),
                "d2_arcs": b.arcs(),
                "decks_equal": equal,
                "isomorphic": are_isomorphic(&a, &b),
            })))
        }
    }
}

/// Weights `1..=C(n,2)` shuffled over the pairs of `K_n`, vertices shuffled,
/// then the cards of three distinct random vertices.
fn random_cards(n: usize, seed: u64) -> Result<(WeightedGraph, [WeightedGraph; 3])> {
    if !(3..=62).contains(&n) {
        return Err(Error::Argument(format!("need 3 <= n <= 62, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<i64> = (1..=(n * (n - 1) / 2) as i64).collect();
    weights.shuffle(&mut rng);
    let mut w = WeightedGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            w.set_weight(i, j, Rational::from_integer(weights[k].into()))?;
            k += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let cards = [order[0], order[1], order[2]].map(|v| w.delete_vertex(v));
    let cards = cards.into_iter().collect::<Result<Vec<_>>>()?;
    let mut perm: Vec<usize> = (0..n - 1).collect();
    let shuffled = cards
        .iter()
        .map(|c| {
            perm.shuffle(&mut rng);
            c.relabel(&Permutation::new(perm.clone())?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((w, shuffled.try_into().expect("three cards")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_domain() { 1 } else { 2 })
        }
    }
}
