use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use tangle3::certificate;
use tangle3::classifier::{self, parse_word, ClassificationReport, Verdict};
use tangle3::curve::catalog::{disk_boundary, run_curve};
use tangle3::curve::{Generator, TwistLetter, TwistWord};
use tangle3::dehn;
use tangle3::oracle::{self, bounds_disk_oracle};

const ISOTOPIC: u8 = 0;
const NOT_ISOTOPIC: u8 = 1;
const ERROR: u8 = 2;

/// Isotopy classifier for 3-tangles built from the trivial tangle by the
/// half twists s1 (punctures 2,3), s2 (4,5) and s3 (1,2).
///
/// Words are written like `s1 s2^-1 s3^2` (or with `*` / `σ`); the
/// leftmost letter acts first. `id` is the empty word.
#[derive(Parser)]
#[command(name = "tangle3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether F(trivial) and G(trivial) are isotopic.
    /// Exit 0 = isotopic, 1 = not isotopic, 2 = error.
    Classify {
        word_f: String,
        word_g: String,
        #[arg(long)]
        json: bool,
        /// Cross-check against the meridian oracle; disagreement is an error.
        #[arg(long)]
        with_oracle: bool,
    },
    /// Images of the three disk boundaries and the 2-subtangle invariant.
    Invariants {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Image of a disk boundary and whether it bounds a disk.
    Disk {
        word: String,
        #[arg(long, value_enum, default_value = "e1")]
        curve: DiskName,
        /// Run the certificate engine.
        #[arg(long)]
        certify: bool,
        /// Ask the meridian oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Startup checks: braid relations, tau-invariance, meridian mapping.
    Selftest,
    /// Classify `wordF<TAB>wordG` lines from standard input, in parallel,
    /// printing results in input order.
    Batch {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        with_oracle: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DiskName {
    #[value(name = "E1", alias = "e1")]
    E1,
    #[value(name = "E2", alias = "e2")]
    E2,
    #[value(name = "E3", alias = "e3")]
    E3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Classify { word_f, word_g, json, with_oracle } => {
            let report = classify_pair(&word_f, &word_g, with_oracle)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(exit_code(report.verdict))
        }
        Command::Invariants { word, json } => {
            let w = parse(&word)?;
            let report = classifier::invariants_report(&w)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(0)
        }
        Command::Disk { word, curve, certify, oracle, json } => disk(&word, curve, certify, oracle, json),
        Command::Selftest => selftest(),
        Command::Batch { json, with_oracle } => batch(json, with_oracle),
    }
}

fn parse(text: &str) -> Result<TwistWord> {
    parse_word(text).with_context(|| format!("cannot parse `{text}`"))
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::Isotopic => ISOTOPIC,
        Verdict::NotIsotopic => NOT_ISOTOPIC,
    }
}

fn classify_pair(f: &str, g: &str, with_oracle: bool) -> Result<ClassificationReport> {
    let (wf, wg) = (parse(f)?, parse(g)?);
    let report = if with_oracle { classifier::classify_with_oracle(&wf, &wg)? } else { classifier::classify(&wf, &wg)? };
    Ok(report)
}

fn disk(word: &str, name: DiskName, certify: bool, use_oracle: bool, json: bool) -> Result<u8> {
    let w = parse(word)?;
    let i = match name {
        DiskName::E1 => 1,
        DiskName::E2 => 2,
        DiskName::E3 => 3,
    };
    let c = disk_boundary(i).apply_word(&w);
    let coord = dehn::extract(&c)?;
    let cert = if certify { Some(certificate::certify(&c)?) } else { None };
    let verdict = use_oracle.then(|| bounds_disk_oracle(&c));
    if json {
        let mut v = json!({
            "curve": c.to_string(),
            "crossings": c.crossings(),
            "pair": c.enclosed_punctures().0,
            "dehn": coord.to_json(),
        });
        if let Some(cert) = &cert {
            v["certificate"] = cert.to_json();
        }
        if let Some(b) = verdict {
            v["oracle"] = json!(b);
        }
        println!("{v}");
    } else {
        let phi = coord.phi();
        println!("curve  {c}");
        println!("pair   {:?}", c.enclosed_punctures().0);
        println!("phi    {:?}", phi.tuple());
        if let Some(cert) = &cert {
            print!("{}", certificate::to_text(cert));
        }
        if let Some(b) = verdict {
            println!("oracle {}", if b { "bounds" } else { "does not bound" });
        }
    }
    Ok(0)
}

fn word(letters: &[(Generator, bool)]) -> TwistWord {
    TwistWord::new(letters.iter().map(|&(g, s)| TwistLetter::new(g, s)).collect())
}

fn selftest() -> Result<u8> {
    use Generator::*;
    let mut failures = 0;
    let mut check = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "ok  " } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };
    let probes: Vec<_> = (1..=3).map(disk_boundary).chain([run_curve(2, 3), run_curve(2, 5)]).collect();
    let same = |a: &TwistWord, b: &TwistWord| probes.iter().all(|c| c.apply_word(a) == c.apply_word(b));
    check(
        "s1 s3 s1 = s3 s1 s3",
        same(&word(&[(Sigma1, true), (Sigma3, true), (Sigma1, true)]), &word(&[(Sigma3, true), (Sigma1, true), (Sigma3, true)])),
    );
    check("s2 s3 = s3 s2", same(&word(&[(Sigma2, true), (Sigma3, true)]), &word(&[(Sigma3, true), (Sigma2, true)])));
    check("s1 s2 = s2 s1", same(&word(&[(Sigma1, true), (Sigma2, true)]), &word(&[(Sigma2, true), (Sigma1, true)])));
    for g in [Sigma1, Sigma2, Sigma3] {
        check(&format!("{g} {g}^-1 = id"), same(&word(&[(g, true), (g, false)]), &TwistWord::identity()));
    }
    for g in [Tau1, Tau2, Tau3] {
        check(&format!("{g} extends over the trivial tangle"), oracle::tangles_isotopic_oracle(&word(&[(g, true)]), &TwistWord::identity()));
    }
    let d12 = word(&[(Delta1, true), (Delta2, false)]);
    check("d1 d2^-1 extends", (1..=3).all(|i| bounds_disk_oracle(&disk_boundary(i).apply_word(&d12))));
    check("d3 extends", (1..=3).all(|i| bounds_disk_oracle(&disk_boundary(i).apply(Delta3, true))));
    check("disk boundaries are meridian-trivial", (1..=3).all(|i| bounds_disk_oracle(&disk_boundary(i))));
    check("curve around {2,3} is not", !bounds_disk_oracle(&run_curve(2, 3)));
    check("s1 moves the first strand", !oracle::tangles_isotopic_oracle(&word(&[(Sigma1, true)]), &TwistWord::identity()));
    Ok(if failures == 0 { 0 } else { 1 })
}

enum Line {
    Skip,
    Done(String),
    Failed(String),
}

fn batch_line(line: &str, json: bool, with_oracle: bool) -> Line {
    if line.trim().is_empty() {
        return Line::Skip;
    }
    let result = (|| -> Result<ClassificationReport> {
        let (f, g) = line.split_once('\t').ok_or_else(|| anyhow!("expected wordF<TAB>wordG"))?;
        classify_pair(f, g, with_oracle)
    })();
    match result {
        Ok(r) if json => Line::Done(r.to_json().to_string()),
        Ok(r) => Line::Done(format!("{:?}", r.verdict)),
        Err(e) if json => Line::Failed(json!({ "error": format!("{e:#}") }).to_string()),
        Err(e) => Line::Failed(format!("error: {e:#}")),
    }
}

fn batch(json: bool, with_oracle: bool) -> Result<u8> {
    let lines: Vec<String> = io::stdin().lock().lines().collect::<Result<_, _>>()?;
    // `collect` on an indexed parallel iterator keeps input order.
    let results: Vec<Line> = lines.par_iter().map(|l| batch_line(l, json, with_oracle)).collect();
    let mut out = io::stdout().lock();
    let mut errors = false;
    for r in results {
        match r {
            Line::Skip => {}
            Line::Done(text) => writeln!(out, "{text}")?,
            Line::Failed(text) => {
                errors = true;
                writeln!(out, "{text}")?;
            }
        }
    }
    if errors {
        bail!("some lines could not be classified");
    }
    Ok(0)
}
