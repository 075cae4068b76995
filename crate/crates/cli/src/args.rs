use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degdev_core::verify::{Check, FamilyTemplate};
use degdev_core::Family;

#[derive(Debug, Parser)]
#[command(name = "degdev", version, about = "Certified spectral radius versus degree deviation checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Target width of the certified spectral radius interval [default: 1e-9,
    /// or 1e-8 for enumerate].
    #[arg(long, global = true, value_parser = parse_tol)]
    pub tol: Option<f64>,

    /// Seed for generated random graphs and random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Write results here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Treat a gap ratio `(rho - 2m/n) / sqrt(s)` above this as a violation.
    /// Ratios are computed from the certified lower end of the interval.
    #[arg(long, global = true, value_name = "R")]
    pub max_ratio: Option<f64>,

    /// Run corpora on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    /// More log output (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound report for each input graph.
    Analyze(GraphSource),
    /// Check a corpus: graphs from an input source or a seeded random corpus.
    Verify(VerifyArgs),
    /// Check every labeled graph on a given number of vertices.
    Enumerate(EnumerateArgs),
    /// Blow-up table for one graph.
    Blowup(BlowupArgs),
    /// Closed-form star ratios.
    StarSweep(StarSweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Input file, or `-` for stdin.
    #[arg(value_name = "INPUT")]
    pub input: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,

    /// Inline graph6 string.
    #[arg(long, value_name = "GRAPH6", conflicts_with_all = ["input", "gen"])]
    pub graph6: Option<String>,

    /// Generated graph, e.g. `star:5`, `complete_bipartite:2:3`, `gnp:50:0.1`.
    #[arg(long, value_name = "FAMILY", conflicts_with = "input")]
    pub gen: Option<Family>,
}

impl GraphSource {
    pub fn is_given(&self) -> bool {
        self.input.is_some() || self.graph6.is_some() || self.gen.is_some()
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Random corpus families, e.g. `gnp:0.1,star,circulant`.
    #[arg(long, value_delimiter = ',', value_name = "FAMILY")]
    pub families: Vec<FamilyTemplate>,

    /// Vertex counts for the random corpus: a list `10,20` or a range `3..=100`.
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: Option<Sizes>,

    /// Number of random graphs.
    #[arg(long, default_value_t = 100)]
    pub count: usize,

    /// Checks to run, e.g. `theorem,row_sum` [default: all].
    #[arg(long, value_delimiter = ',', value_name = "CHECK")]
    pub checks: Vec<Check>,

    /// Also write one CSV row per graph to this path.
    #[arg(long, value_name = "PATH")]
    pub rows: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n_max: usize,

    /// Also enumerate every vertex count from here up to `--n-max`.
    #[arg(long)]
    pub n_min: Option<usize>,

    /// Permit `--n-max 8` (268 million graphs).
    #[arg(long)]
    pub allow_large: bool,

    /// Checks to run, e.g. `theorem,row_sum` [default: all].
    #[arg(long, value_delimiter = ',', value_name = "CHECK")]
    pub checks: Vec<Check>,
}

#[derive(Debug, Args)]
pub struct BlowupArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Blow-up factors.
    #[arg(short = 't', long = "t", value_delimiter = ',', default_values_t = [1, 2, 3, 5])]
    pub factors: Vec<usize>,

    /// Refuse blow-ups with more vertices than this.
    #[arg(long, default_value_t = degdev_core::bounds::DEFAULT_MAX_BLOWUP_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct StarSweepArgs {
    /// Star sizes.
    #[arg(long = "n", value_delimiter = ',')]
    pub ns: Vec<usize>,

    /// Geometric grid `FROM:TO:POINTS`.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

fn parse_tol(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(tol) if tol > 0.0 && tol.is_finite() => Ok(tol),
        _ => Err(format!("`{text}` is not a positive tolerance")),
    }
}

fn parse_sizes(text: &str) -> Result<Sizes, String> {
    let bad = || format!("`{text}` is not a size list like `10,20` or a range like `3..=100`");
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let sizes: Vec<usize> = if let Some((a, b)) = text.split_once("..=") {
        (num(a)?..=num(b)?).collect()
    } else if let Some((a, b)) = text.split_once("..") {
        (num(a)?..num(b)?).collect()
    } else {
        text.split(',').map(num).collect::<Result<_, _>>()?
    };
    if sizes.is_empty() {
        return Err(bad());
    }
    Ok(Sizes(sizes))
}

fn parse_grid(text: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = text.split(':').collect();
    let nums: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
    match nums.as_deref() {
        Some(&[from, to, points]) if from <= to && points >= 1 => Ok((from, to, points)),
        _ => Err(format!("`{text}` is not a grid `FROM:TO:POINTS`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn size_syntax() {
        assert_eq!(parse_sizes("3..=5").unwrap(), Sizes(vec![3, 4, 5]));
        assert_eq!(parse_sizes("3..5").unwrap(), Sizes(vec![3, 4]));
        assert_eq!(parse_sizes("7,9").unwrap(), Sizes(vec![7, 9]));
        assert!(parse_sizes("5..5").is_err());
        assert!(parse_sizes("x").is_err());
        assert!(parse_tol("0").is_err());
        assert_eq!(parse_grid("5:100:3").unwrap(), (5, 100, 3));
        assert!(parse_grid("5:100").is_err());
    }
}
