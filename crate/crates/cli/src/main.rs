//! strataforge: enumerate and classify real-group orbits on compact duals
//! of Mumford-Tate domains, with enhanced Hasse diagrams and mixed Hodge
//! diagrams.

mod config;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use config::RunConfig;
use std::path::PathBuf;
use std::process::ExitCode;
use strataforge_core::chevalley::LieAlgebra;
use strataforge_core::cyclo::{rat, Cyclo8};
use strataforge_core::hodge::{
    deligne_bigrading, dimension_report, naive_limit, record_mixed_data, weight_filtration,
    FlagChain,
};
use strataforge_core::report::{build_report, emit_ascii, emit_dot, emit_mhd};
use strataforge_core::{Error, GradingDatum, OrbitSet, RootSystem, Session};

#[derive(Parser)]
#[command(name = "strataforge", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartan Hasse diagram of conjugacy classes of real Cartans.
    Cartans {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Enumerate the real-group orbits and print the orbit table.
    Orbits {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit the enhanced Hasse diagram of orbits with classification.
    Hasse {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Print the mixed Hodge diagram grid of one orbit.
    Mhd {
        label: String,
        #[arg(long)]
        config: PathBuf,
    },
    /// Annotate the orbit table with polarizability and cuspidality.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Naive-limit analysis for a flag point and a nilpotent element:
    /// prints the antidiagonal flip and the dimension report.
    Limit {
        #[arg(long)]
        config: PathBuf,
        /// Cartan frame index.
        #[arg(long)]
        j: usize,
        /// Weyl word in simple reflections ("e" for the identity).
        #[arg(long, default_value = "e")]
        w: String,
        /// Nilpotent as a sum of root vectors: terms "c@a1,a2,..." separated
        /// by ';' with rational c (default 1) and simple-root coordinates.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<config::ConfigError>().is_some() {
                2
            } else {
                match e.downcast_ref::<Error>() {
                    Some(Error::InternalConsistency(_)) => 3,
                    Some(_) => 2,
                    None => 2,
                }
            };
            ExitCode::from(code)
        }
    }
}

fn build_session(cfg: &RunConfig) -> anyhow::Result<Session> {
    let rs = RootSystem::of_type(&cfg.group_type)?;
    let la = LieAlgebra::build(rs)?;
    let g = GradingDatum::new(cfg.grading.clone())?;
    Ok(Session::new(la, g, &cfg.enumeration_options())?)
}

fn enumerate(cfg: &RunConfig) -> anyhow::Result<(Session, OrbitSet)> {
    let session = build_session(cfg)?;
    let set = session.enumerate_orbits()?;
    Ok((session, set))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Cartans { config, format } => {
            let cfg = RunConfig::load(&config)?;
            let session = build_session(&cfg)?;
            match format {
                Format::Ascii => {
                    println!("Cartan classes for {} grading {:?}:", cfg.group_type, cfg.grading);
                    for f in &session.graph.frames {
                        let kinds: Vec<String> = f
                            .path
                            .iter()
                            .map(|&a| format!("{:?}", session.la.rs.roots[a]))
                            .collect();
                        println!(
                            "  H{}: real rank {}, Cayley path [{}]",
                            f.id,
                            f.real_rank,
                            kinds.join(" -> ")
                        );
                    }
                    println!("edges:");
                    for &(s, d, a) in &session.graph.edges {
                        println!("  H{s} -> H{d} via {:?}", session.la.rs.roots[a]);
                    }
                }
                Format::Dot => {
                    println!("digraph cartan_hasse {{");
                    for f in &session.graph.frames {
                        println!("  H{} [label=\"H{} (rank {})\"];", f.id, f.id, f.real_rank);
                    }
                    for &(s, d, a) in &session.graph.edges {
                        println!(
                            "  H{s} -> H{d} [label=\"{:?}\"];",
                            session.la.rs.roots[a]
                        );
                    }
                    println!("}}");
                }
                Format::Json => {
                    let (session2, set) = enumerate(&cfg)?;
                    let _ = session2;
                    let report = build_report(&session, &set, false, cfg.search_height)?;
                    println!("{}", serde_json::to_string_pretty(&report.cartans)?);
                }
            }
        }
        Command::Orbits { config, format } => {
            let cfg = RunConfig::load(&config)?;
            let (session, set) = enumerate(&cfg)?;
            let report = build_report(&session, &set, false, cfg.search_height)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Ascii => {
                    for o in &report.orbits {
                        println!(
                            "{}  codim {}  dim_R {}  open {}  closed {}  HT {}",
                            o.label, o.codim, o.dim_real, o.open, o.closed, o.hodge_tate
                        );
                    }
                }
                Format::Dot => return Err(anyhow!("orbits has no dot format; use hasse")),
            }
        }
        Command::Hasse { config, format } => {
            let cfg = RunConfig::load(&config)?;
            let (session, set) = enumerate(&cfg)?;
            let report = build_report(&session, &set, true, cfg.search_height)?;
            match format {
                Format::Dot => print!("{}", emit_dot(&report, &cfg.dotted_edges)),
                Format::Ascii => print!("{}", emit_ascii(&report, &cfg.dotted_edges)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
        }
        Command::Mhd { label, config } => {
            let cfg = RunConfig::load(&config)?;
            let (session, set) = enumerate(&cfg)?;
            let report = build_report(&session, &set, false, cfg.search_height)?;
            let orbit = report
                .orbits
                .iter()
                .find(|o| o.label == label)
                .ok_or_else(|| anyhow!("no orbit labeled '{label}'"))?;
            print!("{}", emit_mhd(&orbit.label, &orbit.hpq));
        }
        Command::Classify { config, format } => {
            let cfg = RunConfig::load(&config)?;
            let (session, set) = enumerate(&cfg)?;
            let report = build_report(&session, &set, true, cfg.search_height)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Ascii => {
                    for o in &report.orbits {
                        let c = o.classification.as_ref().unwrap();
                        println!(
                            "{}  codim {}  polarizable {:?}  cuspidal {}  HT {}",
                            o.label, o.codim, c.polarizable, c.cuspidal, o.hodge_tate
                        );
                    }
                }
                Format::Dot => return Err(anyhow!("classify has no dot format; use hasse")),
            }
        }
        Command::Limit { config, j, w, n } => {
            let cfg = RunConfig::load(&config)?;
            let session = build_session(&cfg)?;
            if j >= session.graph.frames.len() {
                return Err(anyhow!(
                    "frame {j} out of range ({} frames)",
                    session.graph.frames.len()
                ));
            }
            let w_idx = session.weyl.parse_word(&session.la.rs, &w)?;
            let nilp = parse_nilpotent(&session, j, &n)?;
            // LMHS data: the flag point (j, w) with the weight filtration of N.
            let chain = session.flag_chain(j, w_idx);
            let f = FlagChain::from_descending(chain);
            let wf = weight_filtration(&session.la, Some(&session.sigma), &nilp)?;
            let mfd = deligne_bigrading(&session.la, &session.sigma, &f, &wf)
                .context("the pair (flag point, W(N)) is not a mixed Hodge structure")?;
            println!("is_split: {}", mfd.is_split);
            let dims: Vec<(i64, i64, usize)> =
                mfd.dims().into_iter().map(|((p, q), d)| (p, q, d)).collect();
            print!("{}", emit_mhd("limit mixed Hodge structure", &dims));
            let flipped: Vec<(i64, i64, usize)> = strataforge_core::hodge::flip_dims(&mfd.dims())
                .into_iter()
                .map(|((p, q), d)| (p, q, d))
                .collect();
            print!("{}", emit_mhd("naive limit (antidiagonal flip)", &flipped));
            if mfd.is_split {
                let hat = naive_limit(&session.la, &session.sigma, &mfd, &nilp)?;
                println!(
                    "naive limit flag dims: {:?}",
                    hat.levels.iter().map(|(l, s)| (*l, s.dim())).collect::<Vec<_>>()
                );
            }
            let rep = dimension_report(&session.la, &mfd, &nilp, session.dim_compact_dual())?;
            println!("{}", serde_json::to_string_pretty(&rep)?);
            // Consistency note versus the ambient orbit inventory.
            let set = session.enumerate_orbits()?;
            let _ = record_mixed_data(&session, &set, set.base)?;
        }
    }
    Ok(())
}

/// Parse "c@a1,a2,..." terms separated by ';'. Each term names a root; the
/// element is the sum of realified transported root vectors of the chosen
/// frame (real root vectors of the frame's Cartan, as the real form sees
/// them).
fn parse_nilpotent(session: &Session, frame: usize, spec: &str) -> anyhow::Result<Vec<Cyclo8>> {
    let la = &session.la;
    let fr = &session.graph.frames[frame];
    let mut out = vec![Cyclo8::zero(); la.dim];
    for term in spec.split(';') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let (coeff, coords) = match term.split_once('@') {
            Some((c, rest)) => {
                let c = c.trim();
                let r = if let Some((num, den)) = c.split_once('/') {
                    rat(num.trim().parse()?, den.trim().parse()?)
                } else {
                    rat(c.parse()?, 1)
                };
                (Cyclo8::from_rat(r), rest)
            }
            None => (Cyclo8::one(), term),
        };
        let v: Vec<i64> = coords
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .context("bad root coordinates")?;
        let idx = la
            .rs
            .root_index(&v)
            .ok_or_else(|| anyhow!("{v:?} is not a root of {}", la.rs.name))?;
        let col = fr.transporter.col(la.basis_index_root(idx));
        let mut realified = None;
        for k in 0..4 {
            let tw: Vec<Cyclo8> = col.iter().map(|x| x * &Cyclo8::zeta_pow(k)).collect();
            let s = session.sigma.apply(&tw);
            let r: Vec<Cyclo8> = (0..la.dim).map(|i| &tw[i] + &s[i]).collect();
            if r.iter().any(|x| !x.is_zero()) {
                realified = Some(r);
                break;
            }
        }
        let r = realified.ok_or_else(|| anyhow!("root {v:?} has no real representative"))?;
        for i in 0..la.dim {
            out[i] = &out[i] + &(&coeff * &r[i]);
        }
    }
    if !la.is_nilpotent(&out) {
        return Err(anyhow!(
            "the specified element is not nilpotent (its root lines may not be real at frame {frame})"
        ));
    }
    Ok(out)
}
