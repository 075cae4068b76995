use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{check_graph, Check, CorpusSummary, GraphOutcome, Partial};
use crate::error::{Error, Result};
use crate::graph::{gnp, rng_for};
use crate::graph::{generate, Family, Graph};
use crate::par::{map_ordered, Execution};

/// A family with its size left open. Parameters other than the size that the
/// family needs (bipartition, regularity) are drawn from the graph's stream.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilyTemplate {
    Star,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CirculantRegular,
    Gnp { p: f64 },
}

impl FamilyTemplate {
    fn min_size(self) -> usize {
        match self {
            FamilyTemplate::Cycle => 3,
            FamilyTemplate::CompleteBipartite => 2,
            _ => 1,
        }
    }

    fn validate(self, n: usize) -> Result<()> {
        if n < self.min_size() {
            return Err(Error::param(format!("family {self} needs at least {} vertices, got {n}", self.min_size())));
        }
        if let FamilyTemplate::Gnp { p } = self {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    fn instantiate(self, n: usize, rng: &mut impl Rng) -> Result<(Graph, String)> {
        let family = match self {
            FamilyTemplate::Star => Family::Star { n },
            FamilyTemplate::Path => Family::Path { n },
            FamilyTemplate::Cycle => Family::Cycle { n },
            FamilyTemplate::Complete => Family::Complete { n },
            FamilyTemplate::CompleteBipartite => {
                let a = rng.gen_range(1..n);
                Family::CompleteBipartite { a, b: n - a }
            }
            FamilyTemplate::CirculantRegular => {
                // odd k needs an even n
                let ks: Vec<usize> = (0..n).filter(|k| k.is_multiple_of(2) || n.is_multiple_of(2)).collect();
                Family::CirculantRegular { n, k: ks[rng.gen_range(0..ks.len())] }
            }
            FamilyTemplate::Gnp { p } => return Ok((gnp(n, p, rng), format!("gnp:{n}:{p}"))),
        };
        Ok((generate(&family, None)?, family.to_string()))
    }
}

impl fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTemplate::Star => f.write_str("star"),
            FamilyTemplate::Path => f.write_str("path"),
            FamilyTemplate::Cycle => f.write_str("cycle"),
            FamilyTemplate::Complete => f.write_str("complete"),
            FamilyTemplate::CompleteBipartite => f.write_str("complete_bipartite"),
            FamilyTemplate::CirculantRegular => f.write_str("circulant"),
            FamilyTemplate::Gnp { p } => write!(f, "gnp:{p}"),
        }
    }
}

impl FromStr for FamilyTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.split_once(':') {
            None => match s {
                "star" => FamilyTemplate::Star,
                "path" => FamilyTemplate::Path,
                "cycle" => FamilyTemplate::Cycle,
                "complete" => FamilyTemplate::Complete,
                "complete_bipartite" | "bipartite" => FamilyTemplate::CompleteBipartite,
                "circulant" | "circulant_regular" => FamilyTemplate::CirculantRegular,
                _ => return Err(Error::param(format!("unknown family `{s}`"))),
            },
            Some(("gnp", p)) => FamilyTemplate::Gnp {
                p: p.parse().map_err(|_| Error::param(format!("bad edge probability `{p}`")))?,
            },
            Some(_) => return Err(Error::param(format!("unknown family `{s}`"))),
        })
    }
}

/// Graph `i` uses family `i mod F` at size `sizes[(i / F) mod S]` and draws
/// everything random from stream `i` under `seed`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub families: Vec<FamilyTemplate>,
    pub sizes: Vec<usize>,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::param("corpus count must be at least 1"));
        }
        if self.families.is_empty() || self.sizes.is_empty() {
            return Err(Error::param("corpus needs at least one family and one size"));
        }
        for fam in &self.families {
            for &n in &self.sizes {
                fam.validate(n)?;
            }
        }
        Ok(())
    }

    fn slot(&self, i: usize) -> (FamilyTemplate, usize) {
        let f = self.families.len();
        (self.families[i % f], self.sizes[(i / f) % self.sizes.len()])
    }

    fn id(&self) -> String {
        let fams: Vec<String> = self.families.iter().map(ToString::to_string).collect();
        format!("random:{}:count={}:seed={}", fams.join(","), self.count, self.seed)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusOptions {
    pub checks: Vec<Check>,
    pub tol: f64,
    pub execution: Execution,
    pub collect_rows: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { checks: Check::ALL.to_vec(), tol: 1e-9, execution: Execution::default(), collect_rows: false }
    }
}

/// One line of the optional per-graph table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub index: usize,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub s: f64,
    pub rho_lo: f64,
    pub rho_hi: f64,
    pub gap_ratio: f64,
    pub violations: usize,
}

impl CorpusRow {
    pub fn to_csv(rows: &[CorpusRow]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in rows {
            w.serialize(row).expect("row serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is UTF-8")
    }
}

/// Seeded random corpus. Rows are returned only when requested.
pub fn random_corpus_check(spec: &CorpusSpec, opts: &CorpusOptions) -> Result<(CorpusSummary, Vec<CorpusRow>)> {
    spec.validate()?;
    let started = Instant::now();
    let indices: Vec<usize> = (0..spec.count).collect();
    let results = map_ordered(opts.execution, &indices, |&i| {
        let (template, n) = spec.slot(i);
        let mut rng = rng_for(spec.seed, i as u64);
        let (g, family) = template.instantiate(n, &mut rng)?;
        check_one(g, i, family, opts)
    });
    merge_results(results, spec.id(), opts, started)
}

/// Runs the checks on a given list of graphs, labeled `input` in the rows.
pub fn check_graphs(graphs: &[Graph], corpus_id: &str, opts: &CorpusOptions) -> Result<(CorpusSummary, Vec<CorpusRow>)> {
    let started = Instant::now();
    let indexed: Vec<(usize, &Graph)> = graphs.iter().enumerate().collect();
    let results = map_ordered(opts.execution, &indexed, |&(i, g)| check_one(g.clone(), i, "input".into(), opts));
    merge_results(results, corpus_id.to_string(), opts, started)
}

type Checked = (Graph, GraphOutcome, Option<CorpusRow>);

fn check_one(g: Graph, index: usize, family: String, opts: &CorpusOptions) -> Result<Checked> {
    let outcome = check_graph(&g, &opts.checks, opts.tol)?;
    let row = opts.collect_rows.then(|| {
        let r = outcome.report.as_ref();
        CorpusRow {
            index,
            family,
            n: g.n(),
            m: g.m(),
            avg_degree: 2.0 * g.m() as f64 / g.n() as f64,
            s: r.map_or(f64::NAN, |r| crate::exact::to_f64(&r.s)),
            rho_lo: r.map_or(f64::NAN, |r| r.rho_lo),
            rho_hi: r.map_or(f64::NAN, |r| r.rho_hi),
            gap_ratio: outcome.gap_ratio(),
            violations: outcome.failures.len(),
        }
    });
    Ok((g, outcome, row))
}

fn merge_results(
    results: Vec<Result<Checked>>,
    corpus_id: String,
    opts: &CorpusOptions,
    started: Instant,
) -> Result<(CorpusSummary, Vec<CorpusRow>)> {
    let mut merged = Partial::default();
    let mut rows = Vec::new();
    for result in results {
        let (g, outcome, row) = result?;
        merged.record(&g, outcome);
        rows.extend(row);
    }
    Ok((merged.finish(corpus_id, &opts.checks, started.elapsed().as_secs_f64()), rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(families: Vec<FamilyTemplate>, sizes: Vec<usize>, count: usize) -> CorpusSpec {
        CorpusSpec { families, sizes, count, seed: 42 }
    }

    #[test]
    fn rejects_bad_specs() {
        let opts = CorpusOptions::default();
        assert!(random_corpus_check(&spec(vec![FamilyTemplate::Star], vec![5], 0), &opts).is_err());
        assert!(random_corpus_check(&spec(vec![], vec![5], 1), &opts).is_err());
        assert!(random_corpus_check(&spec(vec![FamilyTemplate::Cycle], vec![2], 1), &opts).is_err());
        assert!(random_corpus_check(&spec(vec![FamilyTemplate::Gnp { p: 1.5 }], vec![5], 1), &opts).is_err());
    }

    #[test]
    fn deterministic_and_clean() {
        let s = spec(
            vec![FamilyTemplate::Gnp { p: 0.3 }, FamilyTemplate::CompleteBipartite, FamilyTemplate::CirculantRegular],
            vec![6, 9, 12],
            30,
        );
        let opts = CorpusOptions { collect_rows: true, ..Default::default() };
        let (a, rows) = random_corpus_check(&s, &opts).unwrap();
        let (b, _) = random_corpus_check(&s, &CorpusOptions { execution: Execution::Sequential, ..opts }).unwrap();
        assert!(a.same_result(&b));
        assert!(a.is_clean(), "{:?}", a.violations);
        assert_eq!(a.graphs_checked, 30);
        assert_eq!(rows.len(), 30);
        assert_eq!(rows[0].family, "gnp:6:0.3");
        assert!(CorpusRow::to_csv(&rows).starts_with("index,family,n,m,"));
    }

    #[test]
    fn given_graphs() {
        let graphs: Vec<Graph> = (2..6).map(|n| generate(&Family::Star { n }, None).unwrap()).collect();
        let opts = CorpusOptions { collect_rows: true, ..Default::default() };
        let (summary, rows) = check_graphs(&graphs, "stars", &opts).unwrap();
        assert_eq!(summary.graphs_checked, 4);
        assert!(summary.is_clean());
        // ratio grows with n, so the last star is the witness
        assert_eq!(summary.max_gap_ratio_witness.as_deref(), Some(graphs[3].to_graph6().as_str()));
        assert_eq!(rows[2].family, "input");
    }

    #[test]
    fn template_parsing() {
        assert_eq!("gnp:0.25".parse::<FamilyTemplate>().unwrap(), FamilyTemplate::Gnp { p: 0.25 });
        assert_eq!("circulant".parse::<FamilyTemplate>().unwrap(), FamilyTemplate::CirculantRegular);
        assert!("gnp:x".parse::<FamilyTemplate>().is_err());
        assert!("wheel".parse::<FamilyTemplate>().is_err());
    }
}
