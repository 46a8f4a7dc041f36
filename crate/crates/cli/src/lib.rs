//! Command-line front end for the termcode codecs.
//!
//! Every subcommand produces its full output as a string so it can be tested
//! in-process; `main` only prints it. Naturals cross the boundary as decimal
//! text.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use termcode_core::sigcodec::random_nat;
use termcode_core::{
    atom2nat, code2term, from_bbase, from_tuple, inj_code2term, nat2atom, nat2nats, nat2pars,
    nat2term, nats2nat, pars2nat, parse_leaves, parse_term, print_leaves, term2bitpars, term2code,
    term2inj_code, term2nat, to_bbase, to_tuple, Nat, ParenSeq, Signature,
};

#[derive(Debug, Parser)]
#[command(
    name = "termcode",
    version,
    about = "Bijective codes for terms, tuples, lists and strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Code of a term over the signature in FILE
    EncodeTerm {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        term: String,
    },
    /// Term with the given code over the signature in FILE
    DecodeTerm {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        nat: String,
    },
    /// Catalan skeleton code of a term, then its atom list
    SkeletonEncode { term: String },
    /// Rebuild a term from a skeleton code and an atom list
    SkeletonDecode {
        nat: String,
        #[arg(long, allow_hyphen_values = true)]
        atoms: String,
    },
    /// Injective structure code of a term, then its atom list
    InjEncode { term: String },
    /// Rebuild a term from an injective structure code and an atom list
    InjDecode {
        nat: String,
        #[arg(long, allow_hyphen_values = true)]
        atoms: String,
    },
    /// Balanced parentheses for a natural
    Pars { nat: String },
    /// Natural for a balanced parenthesis string
    Unpars { pars: String },
    /// Natural for a comma-separated list of naturals
    Listnat { list: String },
    /// Comma-separated list for a natural
    Natlist { nat: String },
    /// Split a natural into a K-tuple
    Tuple {
        #[arg(short = 'k')]
        k: usize,
        nat: String,
    },
    /// Merge a comma-separated tuple into a natural
    Untuple { tuple: String },
    /// Bijective base-B digits of a natural, least significant first
    Bbase {
        #[arg(short = 'b')]
        base: u32,
        nat: String,
    },
    /// Natural for comma-separated bijective base-B digits
    Unbbase {
        #[arg(short = 'b')]
        base: u32,
        digits: String,
    },
    /// Code of a lowercase word
    AtomEncode { word: String },
    /// Lowercase word for a code
    AtomDecode { nat: String },
    /// Terms decoded from uniform random codes of B bits
    RandomTerm {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        #[arg(long)]
        bits: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Check decode/encode identity for every code in 0..=MAX
    Roundtrip {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        #[arg(long)]
        max: u64,
    },
    /// Size statistics for random terms
    Stats {
        #[arg(long, value_name = "FILE")]
        sig: PathBuf,
        #[arg(long)]
        bits: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::EncodeTerm { .. } => "encode-term",
            Command::DecodeTerm { .. } => "decode-term",
            Command::SkeletonEncode { .. } => "skeleton-encode",
            Command::SkeletonDecode { .. } => "skeleton-decode",
            Command::InjEncode { .. } => "inj-encode",
            Command::InjDecode { .. } => "inj-decode",
            Command::Pars { .. } => "pars",
            Command::Unpars { .. } => "unpars",
            Command::Listnat { .. } => "listnat",
            Command::Natlist { .. } => "natlist",
            Command::Tuple { .. } => "tuple",
            Command::Untuple { .. } => "untuple",
            Command::Bbase { .. } => "bbase",
            Command::Unbbase { .. } => "unbbase",
            Command::AtomEncode { .. } => "atom-encode",
            Command::AtomDecode { .. } => "atom-decode",
            Command::RandomTerm { .. } => "random-term",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Stats { .. } => "stats",
        }
    }
}

pub fn parse_nat(text: &str) -> Result<Nat> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        bail!("not a decimal natural number: {text:?}");
    }
    Ok(text.parse()?)
}

/// Comma-separated decimals; empty text is the empty list.
pub fn parse_nat_list(text: &str) -> Result<Vec<Nat>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_nat).collect()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn load_signature(path: &Path) -> Result<Signature> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read signature file {}", path.display()))?;
    text.parse()
        .with_context(|| format!("invalid signature file {}", path.display()))
}

/// Execute one subcommand and return its stdout text (without a trailing
/// newline).
pub fn run(command: &Command) -> Result<String> {
    execute(command).context(command.name())
}

fn execute(command: &Command) -> Result<String> {
    Ok(match command {
        Command::EncodeTerm { sig, term } => {
            let sig = load_signature(sig)?;
            term2nat(&sig, &parse_term(term)?)?.to_string()
        }
        Command::DecodeTerm { sig, nat } => {
            let sig = load_signature(sig)?;
            nat2term(&sig, &parse_nat(nat)?)?.to_string()
        }
        Command::SkeletonEncode { term } => {
            let (n, atoms) = term2code(&parse_term(term)?);
            format!("{n}\n{}", print_leaves(&atoms))
        }
        Command::SkeletonDecode { nat, atoms } => {
            code2term(&parse_nat(nat)?, &parse_leaves(atoms)?)?.to_string()
        }
        Command::InjEncode { term } => {
            let (n, atoms) = term2inj_code(&parse_term(term)?);
            format!("{n}\n{}", print_leaves(&atoms))
        }
        Command::InjDecode { nat, atoms } => {
            inj_code2term(&parse_nat(nat)?, &parse_leaves(atoms)?)?.to_string()
        }
        Command::Pars { nat } => nat2pars(&parse_nat(nat)?).to_string(),
        Command::Unpars { pars } => {
            let ps: ParenSeq = pars.trim().parse()?;
            pars2nat(&ps)?.to_string()
        }
        Command::Listnat { list } => nats2nat(&parse_nat_list(list)?).to_string(),
        Command::Natlist { nat } => join(&nat2nats(&parse_nat(nat)?)),
        Command::Tuple { k, nat } => join(&to_tuple(*k, &parse_nat(nat)?)?),
        Command::Untuple { tuple } => from_tuple(&parse_nat_list(tuple)?)?.to_string(),
        Command::Bbase { base, nat } => join(&to_bbase(*base, &parse_nat(nat)?)?),
        Command::Unbbase { base, digits } => {
            let digits = if digits.trim().is_empty() {
                Vec::new()
            } else {
                digits
                    .split(',')
                    .map(|d| {
                        d.trim()
                            .parse::<u32>()
                            .map_err(|_| anyhow!("not a digit: {:?}", d.trim()))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            from_bbase(*base, &digits)?.to_string()
        }
        Command::AtomEncode { word } => atom2nat(word)?.to_string(),
        Command::AtomDecode { nat } => nat2atom(&parse_nat(nat)?),
        Command::RandomTerm {
            sig,
            bits,
            seed,
            count,
        } => {
            let sig = load_signature(sig)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let terms = (0..*count)
                .map(|_| termcode_core::ranterm(&sig, *bits, &mut rng).map(|t| t.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            terms.join("\n")
        }
        Command::Roundtrip { sig, max } => {
            let sig = load_signature(sig)?;
            for code in 0..=*max {
                let n = Nat::from(code);
                let t = nat2term(&sig, &n)?;
                let back = term2nat(&sig, &t)?;
                if back != n {
                    bail!("counterexample: {n} decodes to {t}, which encodes to {back}");
                }
            }
            format!("ok {} checked", u128::from(*max) + 1)
        }
        Command::Stats {
            sig,
            bits,
            seed,
            count,
        } => stats(&load_signature(sig)?, *bits, *seed, *count)?,
    })
}

/// One row per random code: its bit length, the printed term length, the
/// skeleton length and bits per printed character; then a summary line.
fn stats(sig: &Signature, bits: u64, seed: u64, count: usize) -> Result<String> {
    if bits == 0 {
        return Err(termcode_core::Error::ZeroBits.into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = vec!["code_bits\tterm_len\tskeleton_len\tratio".to_owned()];
    let mut ratios = Vec::with_capacity(count);
    for _ in 0..count {
        let n = random_nat(bits, &mut rng);
        let t = nat2term(sig, &n)?;
        let term_len = t.to_string().len();
        let skeleton_len = term2bitpars(&t).0.len();
        let ratio = n.bits() as f64 / term_len as f64;
        ratios.push(ratio);
        lines.push(format!(
            "{}\t{term_len}\t{skeleton_len}\t{ratio:.4}",
            n.bits()
        ));
    }
    if !ratios.is_empty() {
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        lines.push(format!(
            "summary\tcount={count}\tmin_ratio={min:.4}\tmax_ratio={max:.4}\tmean_ratio={mean:.4}"
        ));
    }
    Ok(lines.join("\n"))
}
