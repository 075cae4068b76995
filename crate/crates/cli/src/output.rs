use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use degdev_core::bounds::{BlowupRow, BoundReport};
use degdev_core::verify::{CorpusSummary, StarRow};
use serde::Serialize;

use crate::args::OutputFormat;
use crate::{CliResult, UsageError};

pub struct Sink {
    out: Box<dyn Write>,
    format: OutputFormat,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    corpus_id: &'a str,
    graphs_checked: u64,
    violations: usize,
    inconclusive: u64,
    max_gap_ratio: f64,
    max_gap_ratio_witness: Option<&'a str>,
    runtime_secs: f64,
}

impl Sink {
    pub fn open(path: Option<&Path>, format: OutputFormat) -> CliResult<Sink> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).map_err(|e| UsageError(format!("cannot write `{}`: {e}", p.display())))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Sink { out, format })
    }

    pub fn reports(&mut self, reports: &[BoundReport]) -> CliResult<()> {
        match self.format {
            OutputFormat::Json => self.json_lines(reports),
            OutputFormat::Csv => self.csv(reports),
            OutputFormat::Human => {
                for (i, r) in reports.iter().enumerate() {
                    if i > 0 {
                        writeln!(self.out)?;
                    }
                    human_report(&mut self.out, r)?;
                }
                self.finish()
            }
        }
    }

    pub fn summary(&mut self, s: &CorpusSummary) -> CliResult<()> {
        match self.format {
            OutputFormat::Json => self.json_lines(std::slice::from_ref(s)),
            OutputFormat::Csv => self.csv(&[SummaryLine {
                corpus_id: &s.corpus_id,
                graphs_checked: s.graphs_checked,
                violations: s.violations.len(),
                inconclusive: s.inconclusive,
                max_gap_ratio: s.max_gap_ratio,
                max_gap_ratio_witness: s.max_gap_ratio_witness.as_deref(),
                runtime_secs: s.runtime_secs,
            }]),
            OutputFormat::Human => {
                let w = &mut self.out;
                writeln!(w, "corpus       {}", s.corpus_id)?;
                writeln!(w, "graphs       {}", s.graphs_checked)?;
                writeln!(w, "violations   {}", s.violations.len())?;
                writeln!(w, "inconclusive {}", s.inconclusive)?;
                let witness = s.max_gap_ratio_witness.as_deref().unwrap_or("-");
                writeln!(w, "max ratio    {:.6} ({witness})", s.max_gap_ratio)?;
                writeln!(w, "runtime      {:.2} s", s.runtime_secs)?;
                for v in &s.violations {
                    writeln!(w, "  {} {}: {}", v.failing_check, v.graph6, v.details)?;
                }
                self.finish()
            }
        }
    }

    pub fn blowup(&mut self, rows: &[BlowupRow]) -> CliResult<()> {
        match self.format {
            OutputFormat::Json => self.json_lines(rows),
            OutputFormat::Csv => self.csv(rows),
            OutputFormat::Human => {
                let w = &mut self.out;
                writeln!(w, "{:>4} {:>7} {:>9} {:>14} {:>14} {:>12} {:>12}", "t", "n", "m", "rho_lo", "rho_hi", "slack/t", "ratio")?;
                for r in rows {
                    writeln!(
                        w,
                        "{:>4} {:>7} {:>9} {:>14.9} {:>14.9} {:>12.6} {:>12.6}{}",
                        r.t,
                        r.n,
                        r.m,
                        r.rho_lo,
                        r.rho_hi,
                        r.slack_per_t,
                        r.gap_ratio,
                        if r.rho_scaled_check { "" } else { "  SCALING MISMATCH" }
                    )?;
                }
                self.finish()
            }
        }
    }

    pub fn stars(&mut self, rows: &[StarRow]) -> CliResult<()> {
        match self.format {
            OutputFormat::Json => self.json_lines(rows),
            OutputFormat::Csv => self.csv(rows),
            OutputFormat::Human => {
                let w = &mut self.out;
                writeln!(w, "{:>9} {:>12} {:>12} {:>14} {:>9}", "n", "rho", "gap", "s", "ratio")?;
                for r in rows {
                    let check = match r.cross_check {
                        Some(false) => "  INTERVAL MISMATCH",
                        _ => "",
                    };
                    writeln!(w, "{:>9} {:>12.6} {:>12.6} {:>14.6} {:>9.6}{check}", r.n, r.rho, r.gap, degdev_core::exact::to_f64(&r.s), r.ratio)?;
                }
                self.finish()
            }
        }
    }

    fn json_lines<T: Serialize>(&mut self, items: &[T]) -> CliResult<()> {
        for item in items {
            serde_json::to_writer(&mut self.out, item)?;
            writeln!(self.out)?;
        }
        self.finish()
    }

    fn csv<T: Serialize>(&mut self, items: &[T]) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(&mut self.out);
        for item in items {
            w.serialize(item)?;
        }
        w.flush()?;
        drop(w);
        self.finish()
    }

    fn finish(&mut self) -> CliResult<()> {
        self.out.flush()?;
        Ok(())
    }
}

fn human_report(w: &mut dyn Write, r: &BoundReport) -> io::Result<()> {
    writeln!(w, "n = {}, m = {}, 2m/n = {}, d = {}, s = {}", r.n, r.m, r.avg_degree, r.d_ceil, r.s)?;
    let state = if r.rho_converged { "converged" } else { "not converged" };
    writeln!(w, "rho in [{:.12}, {:.12}] ({state})", r.rho_lo, r.rho_hi)?;
    writeln!(w, "rho - 2m/n >= {:.9}, ratio to sqrt(s) {:.6}", r.gap, r.gap_ratio)?;
    let rows = [
        ("sqrt(s)", r.bound_nikiforov06, r.verdict_nikiforov06),
        ("sqrt(9s/10)", r.bound_zhang, r.verdict_zhang),
        ("sqrt(2s/3)", r.bound_rw, r.verdict_rw),
        ("sqrt(s/2)", r.bound_theorem1, r.verdict_theorem1),
        ("1 + sqrt(s/2)", r.bound_pre_blowup, r.verdict_pre_blowup),
    ];
    for (name, value, verdict) in rows {
        let verdict = serde_json::to_value(verdict).map_err(io::Error::other)?;
        writeln!(w, "  {name:<14} {value:>14.9}  {}", verdict.as_str().unwrap_or("?"))?;
    }
    Ok(())
}
