//! Command-line front end. Reports go to the supplied writer (stdout in the
//! binary); the only files written are the `--out` artifacts.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{invalid, Result};
use crate::gf::FieldSpec;
use crate::graph::{build, export, stats, ExportFormat};
use crate::lines4::{self, GreedyOrder};
use crate::verify::{self, SearchMode};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    FieldInfo,
    Generate,
    Stats,
    Verify,
    Theta,
    Export,
    ConjectureCheck,
    ConjectureGreedy,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    V1,
    Bare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub p: u32,
    pub m: u32,
    pub k: Option<usize>,
    pub seed: u64,
    pub fast: bool,
    pub timing: bool,
    pub out: Option<PathBuf>,
    pub format: Format,
}

#[derive(Parser, Debug)]
#[command(name = "girthforge", version, about = "Moment-curve incidence graphs and their cycle structure")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Print the field order and reduction polynomial.
    FieldInfo(Flags),
    /// Build D_k(q), print its statistics, optionally write the edge list.
    Generate(Flags),
    /// Print statistics and girth of D_k(q).
    Stats(Flags),
    /// Check vertex/edge counts, regularity and forbidden even cycles.
    Verify(Flags),
    /// Maximum number of length-4 paths between two points.
    Theta(Flags),
    /// Write the edge list of D_k(q) to --out.
    Export(Flags),
    /// Look for a C4 of lines in the moment-curve family of F_q^4.
    ConjectureCheck(Flags),
    /// Greedily grow a C4-of-lines-free family in F_q^4.
    ConjectureGreedy(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stop cycle searches at the first witness.
    #[arg(long)]
    fast: bool,
    /// Report elapsed milliseconds per claim (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::V1)]
    format: Format,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> RunConfig {
        let (command, f) = match cli.command {
            Sub::FieldInfo(f) => (Command::FieldInfo, f),
            Sub::Generate(f) => (Command::Generate, f),
            Sub::Stats(f) => (Command::Stats, f),
            Sub::Verify(f) => (Command::Verify, f),
            Sub::Theta(f) => (Command::Theta, f),
            Sub::Export(f) => (Command::Export, f),
            Sub::ConjectureCheck(f) => (Command::ConjectureCheck, f),
            Sub::ConjectureGreedy(f) => (Command::ConjectureGreedy, f),
        };
        RunConfig {
            command,
            p: f.p,
            m: f.m,
            k: f.k,
            seed: f.seed,
            fast: f.fast,
            timing: f.timing,
            out: f.out,
            format: f.format,
        }
    }

    fn graph_dim(&self) -> Result<usize> {
        self.k.ok_or_else(|| invalid("--k is required for this command"))
    }

    fn lines_dim(&self) -> Result<()> {
        match self.k {
            None | Some(lines4::DIM) => Ok(()),
            Some(k) => Err(invalid(format!("line families live in dimension 4, got --k {k}"))),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            };
        }
    };
    match run(&RunConfig::from_cli(cli), out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_artifact(path: &PathBuf, f: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    f(&mut w)
}

fn export_format(f: Format) -> ExportFormat {
    match f {
        Format::V1 => ExportFormat::V1,
        Format::Bare => ExportFormat::Bare,
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs one command, writing its report to `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<u8> {
    let field = FieldSpec::new(cfg.p, cfg.m)?;
    let q = field.order();
    match cfg.command {
        Command::FieldInfo => {
            let coeffs: Vec<String> = field.modulus().iter().map(u32::to_string).collect();
            writeln!(
                out,
                "field p={} m={} q={q} modulus={} ({})",
                cfg.p,
                cfg.m,
                coeffs.join(","),
                field.modulus_string()
            )?;
            Ok(EXIT_OK)
        }
        Command::Generate | Command::Stats | Command::Export => {
            let k = cfg.graph_dim()?;
            if cfg.command == Command::Export && cfg.out.is_none() {
                return Err(invalid("export needs --out"));
            }
            let g = build(&field, k)?;
            writeln!(out, "graph p={} m={} k={k} q={q}", cfg.p, cfg.m)?;
            if cfg.command != Command::Export {
                writeln!(out, "{}", stats(&g))?;
            }
            if cfg.command == Command::Stats {
                match verify::girth(&g) {
                    Some(girth) => writeln!(out, "girth={girth}")?,
                    None => writeln!(out, "girth=inf")?,
                }
            }
            if let Some(path) = &cfg.out {
                write_artifact(path, |w| export(&g, export_format(cfg.format), w))?;
                writeln!(out, "wrote {} edges to {}", g.edge_count(), path.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify => {
            let k = cfg.graph_dim()?;
            let mode = if cfg.fast { SearchMode::FailFast } else { SearchMode::Count };
            let report = verify::assert_theorem1(&field, k, mode)?;
            writeln!(out, "verify p={} m={} k={k} q={q}", cfg.p, cfg.m)?;
            report.write_text(&mut *out, cfg.timing)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_CLAIM_FAILED })
        }
        Command::Theta => {
            let k = cfg.graph_dim()?;
            let g = build(&field, k)?;
            let r = verify::max_l4_paths(&g);
            writeln!(out, "theta p={} m={} k={k} q={q}", cfg.p, cfg.m)?;
            match r.pair {
                Some((a, b)) => writeln!(out, "max-l4-paths {} pair={a},{b}", r.max_count)?,
                None => writeln!(out, "max-l4-paths 0 pair=none")?,
            }
            for path in &r.witnesses {
                let ids: Vec<String> = path.iter().map(u32::to_string).collect();
                writeln!(out, "path {}", ids.join(","))?;
            }
            // The at-most-two bound holds from k = 4 on.
            if k >= 4 {
                let ok = r.max_count <= 2;
                writeln!(out, "theta-4-3-free {} -", status(ok))?;
                return Ok(if ok { EXIT_OK } else { EXIT_CLAIM_FAILED });
            }
            Ok(EXIT_OK)
        }
        Command::ConjectureCheck => {
            cfg.lines_dim()?;
            let family = lines4::wenger_seed(&field)?;
            let total = lines4::total_line_count(q as u64);
            writeln!(
                out,
                "family moment-curve p={} m={} n={} total={total} density={:.6}",
                cfg.p,
                cfg.m,
                family.len(),
                family.len() as f64 / total as f64
            )?;
            match lines4::has_line_c4(&field, &family)? {
                None => writeln!(out, "line-c4 none")?,
                Some(w) => {
                    writeln!(out, "line-c4 found")?;
                    for (l, pt) in w.lines.iter().zip(&w.points) {
                        writeln!(out, "  {l} meets-next-at={pt}")?;
                    }
                }
            }
            if let Some(path) = &cfg.out {
                write_artifact(path, |w| lines4::write_family(&field, &family, w))?;
                writeln!(out, "wrote {} lines to {}", family.len(), path.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::ConjectureGreedy => {
            cfg.lines_dim()?;
            let outcome = lines4::greedy_c4free(&field, GreedyOrder::Seeded(cfg.seed))?;
            writeln!(
                out,
                "greedy p={} m={} seed={} size={} total={} density={:.6}",
                cfg.p,
                cfg.m,
                cfg.seed,
                outcome.size(),
                outcome.total_lines,
                outcome.density()
            )?;
            let free = lines4::has_line_c4(&field, &outcome.family)?.is_none();
            let maximal = lines4::is_maximal(&field, &outcome)?;
            writeln!(out, "line-c4-free {} -", status(free))?;
            writeln!(out, "maximal {} -", status(maximal))?;
            if let Some(path) = &cfg.out {
                write_artifact(path, |w| lines4::write_family(&field, &outcome.family, w))?;
                writeln!(out, "wrote {} lines to {}", outcome.size(), path.display())?;
            }
            Ok(if free && maximal { EXIT_OK } else { EXIT_CLAIM_FAILED })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(std::iter::once("girthforge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_reports_c6_count() {
        let (code, out, _) = run_args(&["verify", "--p", "3", "--m", "1", "--k", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("c6-free PASS -\n"));
        assert!(out.contains("# c6-count 0\n"));
    }

    #[test]
    fn theta_bound() {
        let (code, out, _) = run_args(&["theta", "--p", "2", "--m", "1", "--k", "4"]);
        assert_eq!(code, 0);
        let line = out.lines().find(|l| l.starts_with("max-l4-paths")).unwrap();
        let n: u64 = line.split(' ').nth(1).unwrap().parse().unwrap();
        assert!(n <= 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify", "--p", "4", "--m", "1", "--k", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--p", "3", "--m", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--p", "x", "--m", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["export", "--p", "2", "--m", "1", "--k", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["conjecture-check", "--p", "2", "--m", "1", "--k", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn field_info() {
        let (code, out, _) = run_args(&["field-info", "--p", "3", "--m", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "field p=3 m=2 q=9 modulus=1,0,1 (x^2+1)\n");
    }
}
