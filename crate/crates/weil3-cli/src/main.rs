//! Command-line front end: single-triple checks, full enumeration, census
//! tables, and oracle verification runs, all with machine-readable output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use weil3::classify::{classify, p_rank, Classification};
use weil3::irreducibility::is_irreducible;
use weil3::oracle::{numeric_factor_search, numeric_weil_check, sturm_weil_check};
use weil3::padic::{newton_polygon, polygon_type, valuation};
use weil3::weilcheck::{
    a1_range, a2_range, a3_interval, condition_report, enumerate_box, prime_power,
    theorem1_check, WeilCandidate,
};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "weil3", version, about = "Weil polynomials and abelian threefolds over F_q")]
struct Cli {
    /// Worker threads for enumeration-scale commands (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single coefficient triple
    Check {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a1: i64,
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        a3: i64,
    },
    /// Write every Weil triple for q with its full classification
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Verdict counts per q, one CSV row each
    Census {
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the oracle-equivalence suites over the widened boxes
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Sampled,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("thread pool")?;
    }
    match cli.command {
        Command::Check { q, a1, a2, a3 } => cmd_check(q, a1.into(), a2.into(), a3.into()),
        Command::Enumerate { q, out, format } => cmd_enumerate(q, &out, format),
        Command::Census { q, out } => cmd_census(&q, &out),
        Command::Verify { q, mode, seed } => cmd_verify(&q, mode, seed),
    }
}

fn candidate(q: u64, a1: i128, a2: i128, a3: i128) -> Result<WeilCandidate> {
    if prime_power(q).is_none() {
        bail!("{q} is not a prime power");
    }
    Ok(WeilCandidate::new(q, a1, a2, a3).expect("prime power validated"))
}

fn cmd_check(q: u64, a1: i128, a2: i128, a3: i128) -> Result<()> {
    let w = candidate(q, a1, a2, a3)?;
    let c = classify(&w);
    println!("{}", serde_json::to_string(&record(&w, &c))?);
    Ok(())
}

/// One JSONL record: input echo, verdict, p-rank, polygon, flags, reasons.
fn record(w: &WeilCandidate, c: &Classification) -> serde_json::Value {
    let polygon = newton_polygon(&w.polynomial(), w.p());
    let vertices: Vec<[u64; 2]> = polygon
        .vertices()
        .iter()
        .map(|&(i, v)| [i as u64, v])
        .collect();
    let slopes: Vec<String> = polygon
        .root_valuations()
        .iter()
        .map(|r| r.to_string())
        .collect();
    let ptype = polygon_type(&polygon, w.n()).expect("degree-6 candidate");
    let (verdict, irreducible, supersingular, reasons): (&str, Option<bool>, bool, Vec<String>) =
        match c {
            Classification::NotWeil => {
                let failed: Vec<String> = condition_report(w)
                    .iter()
                    .enumerate()
                    .filter(|(_, ok)| !**ok)
                    .map(|(i, _)| format!("condition {} failed", i + 1))
                    .collect();
                ("NotWeil", None, false, failed)
            }
            Classification::ReducibleWeil { .. } => ("ReducibleWeil", Some(false), false, vec![]),
            Classification::CubeOfQuadratic { .. } => {
                ("CubeOfQuadratic", Some(false), false, vec![])
            }
            Classification::IrreducibleChar { supersingular, .. } => {
                ("IrreducibleChar", Some(true), *supersingular, vec![])
            }
            Classification::IrreducibleNotChar { reason } => {
                ("IrreducibleNotChar", Some(true), false, vec![reason.clone()])
            }
        };
    let mut value = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "q": w.q(),
        "p": w.p(),
        "n": w.n(),
        "a1": w.a1 as i64,
        "a2": w.a2 as i64,
        "a3": w.a3 as i64,
        "verdict": verdict,
        "p_rank": p_rank(c),
        "polygon": { "vertices": vertices, "slopes": slopes },
        "polygon_type": ptype,
        "irreducible": irreducible,
        "supersingular": supersingular,
        "reasons": reasons,
    });
    match c {
        Classification::ReducibleWeil { factors } => {
            value["factors"] = serde_json::json!(factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>());
        }
        Classification::CubeOfQuadratic { beta, is_char } => {
            value["beta"] = serde_json::json!(*beta as i64);
            value["is_char"] = serde_json::json!(is_char);
        }
        _ => {}
    }
    value
}

const CSV_HEADER: &str = "schema_version,q,p,n,a1,a2,a3,verdict,p_rank,irreducible,supersingular,polygon_type,slopes,reasons";

fn csv_row(rec: &serde_json::Value) -> String {
    let opt = |v: &serde_json::Value| {
        if v.is_null() {
            String::new()
        } else {
            v.to_string().trim_matches('"').to_string()
        }
    };
    let joined = |v: &serde_json::Value| {
        v.as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect::<Vec<_>>()
            .join("|")
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        rec["schema_version"],
        rec["q"],
        rec["p"],
        rec["n"],
        rec["a1"],
        rec["a2"],
        rec["a3"],
        opt(&rec["verdict"]),
        opt(&rec["p_rank"]),
        opt(&rec["irreducible"]),
        rec["supersingular"],
        opt(&rec["polygon_type"]),
        joined(&rec["polygon"]["slopes"]),
        joined(&rec["reasons"]),
    )
}

fn cmd_enumerate(q: u64, out: &PathBuf, format: Format) -> Result<()> {
    if prime_power(q).is_none() {
        bail!("{q} is not a prime power");
    }
    let candidates = enumerate_box(q).expect("prime power validated");
    // classification is pure, so parallel order-preserving map keeps the
    // output byte-identical to a serial run
    let lines: Vec<String> = candidates
        .par_iter()
        .map(|w| {
            let rec = record(w, &classify(w));
            match format {
                Format::Jsonl => serde_json::to_string(&rec).expect("serializable"),
                Format::Csv => csv_row(&rec),
            }
        })
        .collect();
    let file = File::create(out).with_context(|| format!("creating {}", out.display()))?;
    let mut writer = BufWriter::new(file);
    if matches!(format, Format::Csv) {
        writeln!(writer, "{CSV_HEADER}")?;
    }
    for line in lines {
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

struct CensusRow {
    q: u64,
    p: u64,
    n: u32,
    counts: [u64; 9],
    wall_time_ms: u128,
}

const CENSUS_HEADER: &str = "q,p,n,weil_total,reducible,cube_e3_char,cube_e3_not_char,char_prank0_ss,char_prank0_13,char_prank1,char_prank2,char_prank3,irreducible_not_char,wall_time_ms";

fn census_row(q: u64) -> Result<CensusRow> {
    let Some((p, n)) = prime_power(q) else {
        bail!("{q} is not a prime power");
    };
    let started = Instant::now();
    let candidates = enumerate_box(q).expect("prime power validated");
    let counts = candidates
        .par_iter()
        .fold(
            || [0u64; 9],
            |mut acc, w| {
                let i = match classify(w) {
                    Classification::ReducibleWeil { .. } => 0,
                    Classification::CubeOfQuadratic { is_char: true, .. } => 1,
                    Classification::CubeOfQuadratic { is_char: false, .. } => 2,
                    Classification::IrreducibleChar { supersingular: true, .. } => 3,
                    Classification::IrreducibleChar { p_rank: 0, .. } => 4,
                    Classification::IrreducibleChar { p_rank: 1, .. } => 5,
                    Classification::IrreducibleChar { p_rank: 2, .. } => 6,
                    Classification::IrreducibleChar { .. } => 7,
                    Classification::IrreducibleNotChar { .. } => 8,
                    Classification::NotWeil => unreachable!("enumeration yields Weil triples"),
                };
                acc[i] += 1;
                acc
            },
        )
        .reduce(
            || [0u64; 9],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(CensusRow {
        q,
        p,
        n,
        counts,
        wall_time_ms: started.elapsed().as_millis(),
    })
}

fn cmd_census(qs: &[u64], out: &PathBuf) -> Result<()> {
    let mut rows = Vec::new();
    for &q in qs {
        rows.push(census_row(q)?);
    }
    let file = File::create(out).with_context(|| format!("creating {}", out.display()))?;
    let mut writer = BufWriter::new(file);
    writeln!(writer, "{CENSUS_HEADER}")?;
    for r in rows {
        let total: u64 = r.counts.iter().sum();
        let c = r.counts;
        writeln!(
            writer,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.q, r.p, r.n, total, c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8], r.wall_time_ms
        )?;
    }
    Ok(())
}

/// One oracle disagreement, with enough context to reproduce it.
struct Disagreement {
    q: u64,
    triple: (i128, i128, i128),
    what: String,
}

/// All oracle-equivalence checks for one triple.
fn check_triple(w: &WeilCandidate, out: &mut Vec<Disagreement>) {
    let mut report = |what: &str| {
        out.push(Disagreement {
            q: w.q(),
            triple: (w.a1, w.a2, w.a3),
            what: what.to_string(),
        });
    };
    let t = theorem1_check(w);
    if sturm_weil_check(w) != t {
        report("theorem1_check vs sturm_weil_check");
    }
    match numeric_weil_check(w, 1e-9) {
        Ok(v) if v == t => {}
        Ok(_) => report("theorem1_check vs numeric_weil_check"),
        Err(_) => report("numeric root finder diverged"),
    }
    if !t {
        return;
    }
    match numeric_factor_search(&w.polynomial(), 1e-9) {
        Ok(found) => {
            if found.is_some() == is_irreducible(w) {
                report("is_irreducible vs numeric_factor_search");
            }
        }
        Err(_) => report("factor-search root finder diverged"),
    }
    let p = w.p();
    let n = w.n();
    let g = newton_polygon(&w.polynomial(), p);
    let vals = g.root_valuations();
    let nn = num_rational::Rational64::from_integer(n as i64);
    if vals.len() != 6 || (0..3).any(|j| vals[j] + vals[5 - j] != nn) {
        report("polygon symmetry about n/2");
    }
    let ptype = polygon_type(&g, n).expect("degree 6");
    use num_bigint::BigInt;
    let ordinary = valuation(&BigInt::from(w.a3), p) == Some(0);
    if (ptype == weil3::PolygonType::Ordinary) != ordinary {
        report("Ordinary polygon iff v_p(a3) = 0");
    }
    if let Classification::IrreducibleChar { ptype: tagged, .. } = classify(w) {
        if tagged != ptype {
            report("classify ptype vs recomputed polygon");
        }
    }
}

fn cmd_verify(qs: &[u64], mode: Mode, seed: u64) -> Result<()> {
    let mut total_disagreements = 0usize;
    for &q in qs {
        if prime_power(q).is_none() {
            bail!("{q} is not a prime power");
        }
        let (checked, disagreements) = match mode {
            Mode::Full => verify_full(q),
            Mode::Sampled => verify_sampled(q, seed),
        };
        println!(
            "q={q}: {checked} triples checked, {} disagreements",
            disagreements.len()
        );
        for d in disagreements.iter().take(20) {
            println!(
                "  disagreement at q={} ({}, {}, {}): {}",
                d.q, d.triple.0, d.triple.1, d.triple.2, d.what
            );
        }
        total_disagreements += disagreements.len();
    }
    if total_disagreements > 0 {
        println!("FAIL: {total_disagreements} disagreements");
        std::process::exit(1);
    }
    println!("PASS");
    Ok(())
}

fn verify_full(q: u64) -> (u64, Vec<Disagreement>) {
    let a1s: Vec<i128> = a1_range(q, 1).collect();
    let per_a1: Vec<(u64, Vec<Disagreement>)> = a1s
        .par_iter()
        .map(|&a1| {
            let mut bad = Vec::new();
            let mut count = 0u64;
            for a2 in a2_range(q, a1, 1) {
                let Some((lo, hi)) = a3_interval(q, a1, a2, 1) else {
                    continue;
                };
                for a3 in lo..=hi {
                    count += 1;
                    let w = WeilCandidate::new(q, a1, a2, a3).expect("valid q");
                    check_triple(&w, &mut bad);
                }
            }
            (count, bad)
        })
        .collect();
    let mut total = 0;
    let mut bad = Vec::new();
    for (count, mut b) in per_a1 {
        total += count;
        bad.append(&mut b);
    }
    (total, bad)
}

const SAMPLES_PER_Q: usize = 10_000;

fn verify_sampled(q: u64, seed: u64) -> (u64, Vec<Disagreement>) {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ q);
    let a1s: Vec<i128> = a1_range(q, 1).collect();
    let mut bad = Vec::new();
    let mut checked = 0u64;
    while (checked as usize) < SAMPLES_PER_Q {
        let a1 = a1s[rng.gen_range(0..a1s.len())];
        let a2r = a2_range(q, a1, 1);
        let a2 = rng.gen_range(*a2r.start()..=*a2r.end());
        let Some((lo, hi)) = a3_interval(q, a1, a2, 1) else {
            continue;
        };
        let a3 = rng.gen_range(lo..=hi);
        let w = WeilCandidate::new(q, a1, a2, a3).expect("valid q");
        check_triple(&w, &mut bad);
        checked += 1;
    }
    (checked, bad)
}
