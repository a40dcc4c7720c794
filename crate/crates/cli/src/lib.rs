//! Subcommands of the `picketlab` binary. Each `cmd_*` writes its report to
//! `out` and returns whether every check it ran passed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use picketlab::embedding::{construct_a, construct_c, make_g, make_h, MorphismKind, PicketMorphism};
use picketlab::hom::{pairing_left, pairing_right, sweep, Direction, HomError, PairingReport};
use picketlab::io::{canonical_json, chain_json, parse_embedding, render_tableau, tsv_row, FileError, TSV_HEADER};
use picketlab::random::{random_embedding, search_tableau};
use picketlab::tableau::{enumerate, LRTableau};
use picketlab::{Embedding, Partition, Picket};

#[derive(Parser, Debug)]
#[command(name = "picketlab", version, about = "LR-tableaux and Hom quotients of submodule embeddings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Draw the LR-tableau of an embedding and print its chain.
    Tableau {
        file: PathBuf,
        /// One row per part instead of one column per part.
        #[arg(long)]
        transpose: bool,
    },
    /// Compare tableau, subfactor and Hom counts on every cell.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// 1: maps into pickets; 3: maps out of pickets, read on the dual.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        /// Largest m swept (default: largest part + 1).
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Count (and optionally list) LR-tableaux of type (alpha, beta, gamma).
    LrCoeff {
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        #[arg(long)]
        list: bool,
    },
    /// Write one of the standard embeddings or picket maps.
    Construct {
        kind: Kind,
        /// c: n l m; a: n q m; picket: l m; g: l m; h: q m.
        #[arg(required = true)]
        indices: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Seeded pseudo-random embedding.
    Random {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check non-degeneracy of the composition pairing.
    Pairing {
        #[arg(long, value_enum)]
        side: Side,
        n: u32,
        /// l for the left side, q for the right side.
        index: u32,
        m: u32,
        file: PathBuf,
    },
    /// Write the dual embedding.
    Dual {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Scan seeds for a random embedding with a given tableau.
    Search {
        /// Tableau chain as JSON, e.g. '[[3,1],[3,2,1],[4,3,1],[5,3,1]]'.
        #[arg(long)]
        tableau: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        tries: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    #[arg(long)]
    pub beta: Partition,
    #[arg(long, default_value_t = 1)]
    pub gens: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    C,
    A,
    Picket,
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    File { path: String, source: FileError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    /// 1 for a failed mathematical check, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

pub fn load(path: &Path) -> Result<Embedding, CliError> {
    let text = fs::read_to_string(path)?;
    parse_embedding(&text).map_err(|source| CliError::File { path: path.display().to_string(), source })
}

fn emit(text: &str, o: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match o {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Tableau { file, transpose } => cmd_tableau(&load(&file)?, transpose, out),
        Command::Verify { files, theorem, max_m } => cmd_verify(&files, theorem, max_m, out),
        Command::LrCoeff { alpha, beta, gamma, list } => cmd_lr_coeff(&alpha, &beta, &gamma, list, out),
        Command::Construct { kind, indices, p, o } => cmd_construct(kind, &indices, p, o.as_deref(), out),
        Command::Random { gen, seed, o } => cmd_random(&gen, seed, o.as_deref(), out),
        Command::Pairing { side, n, index, m, file } => cmd_pairing(side, n, index, m, &load(&file)?, out),
        Command::Dual { file, o } => {
            emit(&canonical_json(&load(&file)?.dual()), o.as_deref(), out)?;
            Ok(true)
        }
        Command::Search { tableau, p, gens, seed, tries, o } => {
            let target: LRTableau = serde_json::from_str(&tableau).map_err(usage)?;
            match search_tableau(p, gens, &target, seed, tries).map_err(usage)? {
                Some((s, e)) => {
                    eprintln!("seed {s}");
                    emit(&canonical_json(&e), o.as_deref(), out)?;
                    Ok(true)
                }
                None => {
                    eprintln!("no seed in {seed}..{} gives that tableau", seed.saturating_add(tries));
                    Ok(false)
                }
            }
        }
    }
}

pub fn cmd_tableau(e: &Embedding, transpose: bool, out: &mut dyn Write) -> Result<bool, CliError> {
    let t = e.lr_tableau();
    write!(out, "{}", render_tableau(&t, transpose))?;
    writeln!(out, "{}", chain_json(&t))?;
    Ok(true)
}

fn file_id(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// `theorem` 1 sweeps maps into pickets, 3 maps out of them.
pub fn cmd_verify(
    files: &[PathBuf],
    theorem: u8,
    max_m: Option<u32>,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let which = match theorem {
        1 => Direction::IntoPickets,
        3 => Direction::FromPickets,
        t => return Err(CliError::Usage(format!("no sweep for theorem {t}; use 1 or 3"))),
    };
    let embeddings = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<Result<Vec<(String, bool)>, HomError>> = embeddings
        .par_iter()
        .zip(files)
        .map(|(e, f)| {
            let id = file_id(f);
            let max_m = max_m.unwrap_or(e.beta().first() + 1);
            let rows = sweep(e, which, max_m)?;
            Ok(rows.iter().map(|r| (tsv_row(&id, r), r.agree())).collect())
        })
        .collect();
    writeln!(out, "{TSV_HEADER}")?;
    let mut ok = true;
    for (r, f) in reports.into_iter().zip(files) {
        match r {
            Ok(lines) => {
                for (line, agree) in lines {
                    ok &= agree;
                    writeln!(out, "{line}")?;
                }
            }
            Err(e) => {
                eprintln!("{}: {e}", f.display());
                ok = false;
            }
        }
    }
    Ok(ok)
}

pub fn cmd_lr_coeff(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    list: bool,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let all = enumerate(alpha, beta, gamma);
    writeln!(out, "{}", all.len())?;
    if list {
        for t in &all {
            writeln!(out, "{}", chain_json(t))?;
        }
    }
    Ok(true)
}

fn morphism_json(f: &PicketMorphism, p: u64) -> String {
    let names = |ps: &[Picket]| ps.iter().map(|q| q.to_string()).collect::<Vec<_>>();
    let v = serde_json::json!({
        "kind": match f.kind {
            MorphismKind::G => "g",
            MorphismKind::H => "h",
        },
        "index": f.index,
        "m": f.m,
        "p": p,
        "source": names(&f.source),
        "target": names(&f.target),
        "components": f.matrix.row_vecs(),
    });
    serde_json::to_string(&v).expect("plain values") + "\n"
}

pub fn cmd_construct(
    kind: Kind,
    indices: &[u32],
    p: u64,
    o: Option<&Path>,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let want = if matches!(kind, Kind::C | Kind::A) { 3 } else { 2 };
    if indices.len() != want {
        return Err(CliError::Usage(format!("{} takes {want} indices, got {}", format!("{kind:?}").to_lowercase(), indices.len())));
    }
    let text = match kind {
        Kind::C => canonical_json(&construct_c(p, indices[0], indices[1], indices[2]).map_err(usage)?),
        Kind::A => canonical_json(&construct_a(p, indices[0], indices[1], indices[2]).map_err(usage)?),
        Kind::Picket => {
            let pk = Picket::new(indices[0], indices[1]).map_err(usage)?;
            canonical_json(&pk.to_embedding(p).map_err(usage)?)
        }
        Kind::G => morphism_json(&make_g(p, indices[0], indices[1]).map_err(usage)?, p),
        Kind::H => morphism_json(&make_h(indices[0], indices[1]).map_err(usage)?, p),
    };
    emit(&text, o, out)?;
    Ok(true)
}

pub fn cmd_random(gen: &GenArgs, seed: u64, o: Option<&Path>, out: &mut dyn Write) -> Result<bool, CliError> {
    let e = random_embedding(gen.p, &gen.beta, gen.gens, seed).map_err(usage)?;
    emit(&canonical_json(&e), o, out)?;
    Ok(true)
}

fn pairing_text(r: &PairingReport) -> String {
    let (name, idx) = match r.side {
        picketlab::hom::Side::Left => ("left", "l"),
        picketlab::hom::Side::Right => ("right", "q"),
    };
    let mut s = format!(
        "side={name} n={} {idx}={} m={} target_dim={} quotient_dim={} cosets={} exhaustive={} failures={}",
        r.n, r.index, r.m, r.target_dim, r.quotient_dim, r.cosets_checked, r.exhaustive, r.failures
    );
    if r.vacuous() {
        s.push_str(" vacuous");
    }
    s.push_str(if r.non_degenerate() { " ok\n" } else { " FAILED\n" });
    s
}

pub fn cmd_pairing(
    side: Side,
    n: u32,
    index: u32,
    m: u32,
    e: &Embedding,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let r = match side {
        Side::Left => pairing_left(n, index, m, e),
        Side::Right => pairing_right(n, index, m, e),
    };
    let r = match r {
        Ok(r) => r,
        Err(e @ (HomError::NotInSn { .. } | HomError::IndexOutOfRange(_))) => return Err(usage(e)),
        Err(e) => return Err(CliError::Math(e.to_string())),
    };
    write!(out, "{}", pairing_text(&r))?;
    Ok(r.non_degenerate())
}
