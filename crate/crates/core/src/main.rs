use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sepwords::constructions::{verify_witness, witness_pair, Assembly};
use sepwords::harness::atlas::{atlas_csv, atlas_json};
use sepwords::harness::{compute_atlas, exit_code, run_lemma_suite, Cache, Ctx, DEFAULT_ATLAS_CAP, LEMMA_IDS};
use sepwords::lang::{build_g_k, build_h_k, build_l_k, LangHandle};
use sepwords::{exact_sep, SearchBudget, Word};

#[derive(Parser)]
#[command(name = "sepwords", version, about = "Separating words, reversal and certified witnesses")]
struct Cli {
    /// JSON-lines cache of solver results.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LangName {
    #[value(name = "L_k")]
    L,
    #[value(name = "G_k")]
    G,
    #[value(name = "H_k")]
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum AssemblyArg {
    ReversalReady,
    Mirror,
}

#[derive(Subcommand)]
enum Command {
    /// Exact sep(w, x) with a certificate.
    Sep {
        w: String,
        x: String,
        #[arg(long, default_value_t = 16)]
        max_states: usize,
        #[arg(long, default_value_t = 200_000_000)]
        budget_nodes: u64,
        #[arg(long)]
        json: bool,
    },
    /// State complexity of L_k, G_k or H_k.
    Stc {
        #[arg(long, value_enum)]
        lang: LangName,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        reversed: bool,
    },
    /// Build the (k, n) witness pair.
    Witness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = AssemblyArg::ReversalReady)]
        assembly: AssemblyArg,
    },
    /// Run lemma checks by id, or `all`.
    Lemma {
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// S(n) for n up to --max-len over the binary alphabet.
    Atlas {
        #[arg(long, default_value_t = DEFAULT_ATLAS_CAP)]
        max_len: usize,
        /// Allow --max-len beyond the default cap.
        #[arg(long)]
        force: bool,
    },
    /// Membership of a word in a language stored in the DFA text format.
    Member {
        #[arg(long)]
        lang: PathBuf,
        word: String,
    },
}

fn parse_word(text: &str) -> Result<Word> {
    let k = if text.contains('2') { 3 } else { 2 };
    Word::parse(text, k).with_context(|| format!("bad word {text:?}"))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let mut cache = match &cli.cache {
        Some(path) => Cache::open(path)?,
        None => Cache::in_memory(),
    };
    if cache.skipped() > 0 {
        eprintln!("warning: skipped {} unusable cache lines", cache.skipped());
    }
    let budget = SearchBudget::default();
    match cli.command {
        Command::Sep {
            w,
            x,
            max_states,
            budget_nodes,
            json,
        } => {
            let (w, x) = (parse_word(&w)?, parse_word(&x)?);
            let budget = SearchBudget::new(max_states, budget_nodes, Duration::from_secs(600))?;
            let cert = match cache.get_certificate(&w, &x) {
                Some(c) if c.w == w => c,
                _ => {
                    let c = exact_sep(&w, &x, &budget)?;
                    cache.store_certificate(&c)?;
                    c
                }
            };
            if json || cli.format == Format::Json {
                println!("{}", cert.to_json());
            } else if cert.exact() {
                println!("sep({}, {}) = {} [{}]", cert.w, cert.x, cert.lower, cert.lower_method.as_str());
            } else {
                println!("{} <= sep({}, {}) <= {}", cert.lower, cert.w, cert.x, cert.upper);
            }
            Ok(0)
        }
        Command::Stc { lang, k, reversed } => {
            let handle = match lang {
                LangName::L => build_l_k(k)?.1,
                LangName::G => build_g_k(k)?,
                LangName::H => build_h_k(k)?,
            };
            let handle = if reversed { handle.reversed() } else { handle };
            let stc = handle.state_complexity();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"lang": handle.provenance(), "k": k, "reversed": reversed, "stc": stc})
                ),
                Format::Csv => println!("lang,k,reversed,stc\n{},{k},{reversed},{stc}", handle.provenance()),
                Format::Text => println!("stc({}) = {stc}", handle.provenance()),
            }
            Ok(0)
        }
        Command::Witness { k, n, verify, assembly } => {
            let assembly = match assembly {
                AssemblyArg::ReversalReady => Assembly::ReversalReady,
                AssemblyArg::Mirror => Assembly::Mirror,
            };
            let mut report = witness_pair(k, n, &budget, assembly)?;
            if verify {
                report = verify_witness(&report, &budget)?;
            }
            if cli.format == Format::Json {
                println!("{}", report.to_json());
            } else {
                println!("k={k} n={n} assembly={}", assembly.as_str());
                println!("w' = {}", report.w_prime);
                println!("x' = {}", report.x_prime);
                println!(
                    "lower: claim {} verified to {} ({})",
                    report.lower_claim, report.lower_verified_to, report.lower_status
                );
                println!(
                    "2n+2:  claim {} verified to {} ({})",
                    report.blueberry_claim, report.blueberry_verified_to, report.blueberry_status
                );
                let states = report.upper_states().map_or("-".to_string(), |s| s.to_string());
                println!("upper: claim {} witness states {states} ({})", report.upper_claim, report.upper_status);
            }
            Ok(if !verify || report.all_certified() { 0 } else { 1 })
        }
        Command::Lemma { ids, seed } => {
            let ids: Vec<String> = if ids.iter().any(|i| i == "all") {
                LEMMA_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                ids
            };
            let outcomes = run_lemma_suite(&ids, &Ctx { seed, budget })?;
            match cli.format {
                Format::Json => {
                    let all: Vec<_> = outcomes.iter().map(|o| o.to_json_value()).collect();
                    println!("{}", serde_json::to_string_pretty(&all)?);
                }
                Format::Csv => {
                    println!("id,status,samples,control");
                    for o in &outcomes {
                        println!("{},{},{},{}", o.id, o.status.as_str(), o.samples, o.control.as_str());
                    }
                }
                Format::Text => {
                    for o in &outcomes {
                        println!("{}", o.to_text());
                    }
                }
            }
            Ok(exit_code(&outcomes) as u8)
        }
        Command::Atlas { max_len, force } => {
            if max_len > DEFAULT_ATLAS_CAP && !force {
                bail!("--max-len {max_len} exceeds the cap {DEFAULT_ATLAS_CAP}; pass --force to go beyond it");
            }
            let (rows, stats) = compute_atlas(max_len, &budget, &mut cache)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&atlas_json(&rows))?),
                Format::Csv => print!("{}", atlas_csv(&rows)),
                Format::Text => {
                    for r in &rows {
                        println!("S({}) = {}  via ({}, {})", r.n, r.display_value(), r.w, r.x);
                    }
                }
            }
            eprintln!(
                "pairs={} filtered={} cache_hits={} searches={}",
                stats.pairs, stats.filtered, stats.cache_hits, stats.searches
            );
            Ok(if rows.iter().all(|r| r.exact()) { 0 } else { 2 })
        }
        Command::Member { lang, word } => {
            let text = std::fs::read_to_string(&lang).with_context(|| format!("reading {}", lang.display()))?;
            let handle = LangHandle::parse_text(&text)?;
            let w = Word::parse(&word, 3)?;
            let member = handle.contains(&w)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::json!({"word": word, "member": member})),
                _ => println!("{member}"),
            }
            Ok(if member { 0 } else { 1 })
        }
    }
}
