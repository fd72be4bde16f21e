//! Command dispatch for the `kepler` binary.
//!
//! Intervals are entered as frequency ratios in either orientation: classes
//! are octave-reduced, so `3/2` and `3/4` denote the same interval. Every
//! subcommand speaks two formats, aligned text columns (`table`) and one JSON
//! record per line (`jsonl`). Exit codes: 0 success, 1 domain error, 2 usage
//! or parse error.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kepler_core::{
    classify_interval, classify_polygon, enumerate_intervals, fermat_consonance,
    verify_seven_theorem, Error, Interval, KeplerSequences,
};

#[derive(Parser)]
#[command(
    name = "kepler",
    version,
    about = "Octave-reduced rational intervals, Kepler sequences, and consonance by constructibility"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned text columns.
    Table,
    /// One JSON record per line.
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Canonicalize an interval and report cents, height, Kepler
    /// denominators, and consonance class.
    Classify { interval: String },
    /// Print the Kepler orbit of an interval, one step per line.
    Seq { interval: String },
    /// List every canonical interval with denominator at most N.
    Enumerate {
        #[arg(long = "max-n")]
        max_n: u64,
        /// Keep only consonant intervals.
        #[arg(long, value_enum)]
        only: Option<Only>,
    },
    /// Classify the regular n-gon by ruler-and-compass constructibility.
    Polygon { n: u64 },
    /// Check that exactly seven Euclidean consonants exist.
    VerifyTheorem,
    /// Print the Kepler orbit of [(F-1)/F] for a Fermat prime F.
    Fermat { f: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Only {
    Consonant,
}

/// Failures surfaced to the user, split by exit code.
#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input text; exit code 2.
    Parse(String),
    /// Well-formed but impossible request; exit code 1.
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Parses `P/Q`, `P:Q`, or a bare positive integer `P` (meaning P/1) and
/// canonicalizes the result.
pub fn parse_interval(text: &str) -> Result<Interval, CliError> {
    let (p_str, q_str) = match text.split_once(['/', ':']) {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let p = parse_component(text, p_str)?;
    let q = parse_component(text, q_str)?;
    Ok(Interval::new(p, q)?)
}

fn parse_component(whole: &str, token: &str) -> Result<u64, CliError> {
    let value: u64 = token.parse().map_err(|_| {
        CliError::Parse(format!(
            "invalid interval '{whole}': component '{token}' is not a positive 64-bit integer"
        ))
    })?;
    if value == 0 {
        return Err(CliError::Parse(format!(
            "invalid interval '{whole}': component '{token}' must be positive"
        )));
    }
    Ok(value)
}

#[derive(Serialize)]
struct OutputRecord {
    input: String,
    canonical: String,
    cents: f64,
    height: u32,
    second_sequence: Vec<u64>,
    class: String,
}

impl OutputRecord {
    fn build(input: &str, sigma: Interval) -> OutputRecord {
        let seq = sigma.kepler_sequences();
        OutputRecord {
            input: input.to_string(),
            canonical: sigma.to_string(),
            cents: (sigma.cents() * 1000.0).round() / 1000.0,
            height: seq.height(),
            second_sequence: seq.second,
            class: classify_interval(sigma).as_str().to_string(),
        }
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.input.clone(),
            self.canonical.clone(),
            format!("{:.3}", self.cents),
            self.height.to_string(),
            join(&self.second_sequence, ","),
            self.class.clone(),
        ]
    }
}

const RECORD_HEADER: [&str; 6] = [
    "input",
    "canonical",
    "cents",
    "height",
    "second_sequence",
    "class",
];

#[derive(Serialize)]
struct SeqRecord {
    step: usize,
    interval: String,
    n: u64,
}

#[derive(Serialize)]
struct PolygonRecord {
    n: u64,
    class: String,
}

#[derive(Serialize)]
struct CandidateRecord {
    #[serde(rename = "type")]
    kind: &'static str,
    interval: String,
    class: String,
}

#[derive(Serialize)]
struct TheoremRecord {
    #[serde(rename = "type")]
    kind: &'static str,
    ok: bool,
    euclidean_consonants: Vec<String>,
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut write_row = |cells: Vec<&str>| {
        let line = cells
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "{}", line.trim_end());
    };
    write_row(header.to_vec());
    for row in rows {
        write_row(row.iter().map(String::as_str).collect());
    }
}

fn write_jsonl<T: Serialize>(out: &mut dyn Write, record: &T) {
    let line = serde_json::to_string(record).expect("records serialize infallibly");
    let _ = writeln!(out, "{line}");
}

fn write_records(out: &mut dyn Write, format: Format, records: &[OutputRecord]) {
    match format {
        Format::Table => {
            let rows: Vec<Vec<String>> = records.iter().map(OutputRecord::row).collect();
            write_table(out, &RECORD_HEADER, &rows);
        }
        Format::Jsonl => {
            for record in records {
                write_jsonl(out, record);
            }
        }
    }
}

fn write_orbit(out: &mut dyn Write, format: Format, seq: &KeplerSequences) {
    match format {
        Format::Table => {
            let rows: Vec<Vec<String>> = seq
                .first
                .iter()
                .zip(&seq.second)
                .enumerate()
                .map(|(step, (iv, n))| vec![step.to_string(), iv.to_string(), n.to_string()])
                .collect();
            write_table(out, &["step", "interval", "n"], &rows);
        }
        Format::Jsonl => {
            for (step, (iv, &n)) in seq.first.iter().zip(&seq.second).enumerate() {
                write_jsonl(
                    out,
                    &SeqRecord {
                        step,
                        interval: iv.to_string(),
                        n,
                    },
                );
            }
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Classify { interval } => {
            let sigma = parse_interval(&interval)?;
            write_records(out, format, &[OutputRecord::build(&interval, sigma)]);
        }
        Command::Seq { interval } => {
            let sigma = parse_interval(&interval)?;
            write_orbit(out, format, &sigma.kepler_sequences());
        }
        Command::Enumerate { max_n, only } => {
            if max_n < 2 {
                return Err(CliError::Domain(format!(
                    "--max-n must be at least 2, got {max_n}"
                )));
            }
            let mut intervals = enumerate_intervals(max_n);
            intervals.sort();
            let records: Vec<OutputRecord> = intervals
                .into_iter()
                .map(|sigma| OutputRecord::build(&sigma.to_string(), sigma))
                .filter(|r| only.is_none() || r.class != "dissonant")
                .collect();
            write_records(out, format, &records);
        }
        Command::Polygon { n } => {
            let class = classify_polygon(n)?;
            match format {
                Format::Table => {
                    let _ = writeln!(out, "{class}");
                }
                Format::Jsonl => write_jsonl(
                    out,
                    &PolygonRecord {
                        n,
                        class: class.to_string(),
                    },
                ),
            }
        }
        Command::VerifyTheorem => {
            let report = verify_seven_theorem();
            let consonants: Vec<String> = report
                .euclidean_consonants
                .iter()
                .map(Interval::to_string)
                .collect();
            match format {
                Format::Table => {
                    let rows: Vec<Vec<String>> = report
                        .verdicts
                        .iter()
                        .map(|(sigma, class)| vec![sigma.to_string(), class.to_string()])
                        .collect();
                    write_table(out, &["candidate", "class"], &rows);
                    let _ = writeln!(out);
                    let _ = writeln!(out, "euclidean consonants: {}", consonants.join(" "));
                    let _ = writeln!(out, "ok: {}", report.ok);
                }
                Format::Jsonl => {
                    for (sigma, class) in &report.verdicts {
                        write_jsonl(
                            out,
                            &CandidateRecord {
                                kind: "candidate",
                                interval: sigma.to_string(),
                                class: class.to_string(),
                            },
                        );
                    }
                    write_jsonl(
                        out,
                        &TheoremRecord {
                            kind: "result",
                            ok: report.ok,
                            euclidean_consonants: consonants,
                        },
                    );
                }
            }
            if !report.ok {
                return Err(CliError::Domain(
                    "the Euclidean consonant set is not the expected seven".into(),
                ));
            }
        }
        Command::Fermat { f } => {
            let seq = fermat_consonance(f)?;
            write_orbit(out, format, &seq);
        }
    }
    Ok(())
}

/// Runs the CLI on the given argument list, writing to the supplied streams,
/// and returns the process exit code.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{rendered}");
                return 0;
            }
            let _ = write!(stderr, "{rendered}");
            return 2;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(CliError::Parse(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from(
            std::iter::once("kepler").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_interval_examples() {
        assert_eq!(parse_interval("5/8").unwrap(), Interval::new(5, 8).unwrap());
        assert_eq!(parse_interval("3:2").unwrap(), Interval::new(3, 4).unwrap());
        assert_eq!(parse_interval("17").unwrap(), Interval::new(17, 32).unwrap());
        assert!(matches!(parse_interval("0/5"), Err(CliError::Parse(_))));
        assert!(matches!(parse_interval("5/0"), Err(CliError::Parse(_))));
        assert!(matches!(parse_interval("x/8"), Err(CliError::Parse(_))));
        assert!(matches!(parse_interval("5/8/3"), Err(CliError::Parse(_))));
        assert!(matches!(parse_interval(""), Err(CliError::Parse(_))));
        // Parses as integers but cannot be octave-reduced within 64 bits.
        assert!(matches!(
            parse_interval("18446744073709551615"),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn classify_table_row() {
        let (code, out, _) = run(&["classify", "5/8"]);
        assert_eq!(code, 0);
        assert!(out.contains("5/8"));
        assert!(out.contains("813.686"));
        assert!(out.contains("8,5,3,2"));
        assert!(out.contains("euclidean"));
    }

    #[test]
    fn classify_jsonl_is_valid_json() {
        let (code, out, _) = run(&["classify", "3/2", "--format", "jsonl"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["input"], "3/2");
        assert_eq!(v["canonical"], "3/4");
        assert_eq!(v["height"], 2);
        assert_eq!(v["class"], "euclidean");
        assert_eq!(v["cents"], 498.045);
    }

    #[test]
    fn seq_lists_orbit() {
        let (code, out, _) = run(&["seq", "5/8"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5); // header + 4 steps
        assert!(lines[1].starts_with("0"));
        assert!(lines[4].contains("1/2"));
    }

    #[test]
    fn enumerate_sorted_by_value() {
        let (code, out, _) = run(&["enumerate", "--max-n", "5", "--format", "jsonl"]);
        assert_eq!(code, 0);
        let canon: Vec<String> = out
            .lines()
            .map(|l| {
                serde_json::from_str::<serde_json::Value>(l).unwrap()["canonical"]
                    .as_str()
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(canon, vec!["1/2", "3/5", "2/3", "3/4", "4/5"]);
    }

    #[test]
    fn enumerate_only_consonant() {
        let (code, out, _) = run(&["enumerate", "--max-n", "8", "--only", "consonant"]);
        assert_eq!(code, 0);
        // Header plus the seven consonants; 7-denominator intervals dropped.
        assert_eq!(out.lines().count(), 8);
        assert!(!out.contains("dissonant"));
    }

    #[test]
    fn enumerate_rejects_tiny_bound() {
        let (code, _, err) = run(&["enumerate", "--max-n", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("at least 2"));
    }

    #[test]
    fn polygon_classes() {
        assert_eq!(run(&["polygon", "7"]).1, "non-constructible\n");
        assert_eq!(run(&["polygon", "15"]).1, "euclidean\n");
        assert_eq!(run(&["polygon", "17"]).1, "gauss-wantzel\n");
        let (code, _, err) = run(&["polygon", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("at least 2"));
    }

    #[test]
    fn verify_theorem_succeeds() {
        let (code, out, _) = run(&["verify-theorem"]);
        assert_eq!(code, 0);
        assert!(out.contains("ok: true"));
        assert!(out.contains("euclidean consonants: 1/2 3/5 5/8 2/3 3/4 4/5 5/6"));
    }

    #[test]
    fn fermat_requires_fermat_prime() {
        let (code, out, _) = run(&["fermat", "17", "--format", "jsonl"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.contains("\"n\":17"));
        let (code, _, err) = run(&["fermat", "6"]);
        assert_eq!(code, 1);
        assert!(err.contains("not a Fermat prime"));
    }

    #[test]
    fn parse_errors_exit_two() {
        let (code, _, err) = run(&["classify", "0/5"]);
        assert_eq!(code, 2);
        assert!(err.contains("'0' must be positive"));
        assert_eq!(run(&["classify", "abc"]).0, 2);
        assert_eq!(run(&["no-such-command"]).0, 2);
        assert_eq!(run(&["classify", "5/8", "--format", "bogus"]).0, 2);
        assert_eq!(run(&[]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn round_trip_rendered_intervals() {
        for sigma in enumerate_intervals(100) {
            assert_eq!(parse_interval(&sigma.to_string()).unwrap(), sigma);
        }
    }
}
