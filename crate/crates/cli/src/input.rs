use std::io::Read;
use std::path::Path;

use degdev_core::graph::{graph6, parse_edge_list};
use degdev_core::{generate, Graph};

use crate::args::{GraphSource, InputFormat};
use crate::{CliResult, UsageError};

pub fn load(source: &GraphSource, seed: u64) -> CliResult<Vec<Graph>> {
    if let Some(family) = &source.gen {
        return Ok(vec![generate(family, Some(seed))?]);
    }
    if let Some(text) = &source.graph6 {
        let g = Graph::from_graph6(text.as_bytes()).map_err(|e| UsageError(format!("`{text}`: {e}")))?;
        return Ok(vec![g]);
    }
    let Some(path) = &source.input else {
        return Err(UsageError("no input graph: give a file, `-` for stdin, `--graph6` or `--gen`".into()));
    };
    let text = read_text(path)?;
    let name = if path == Path::new("-") { "stdin".to_string() } else { path.display().to_string() };
    let graphs = match source.format {
        InputFormat::Graph6 => graph6::decode_lines(text.as_bytes()).map_err(|e| UsageError(format!("{name}: {e}")))?,
        InputFormat::Edgelist => vec![parse_edge_list(&text).map_err(|e| UsageError(format!("{name}: {e}")))?],
    };
    if graphs.is_empty() {
        return Err(UsageError(format!("{name}: no graphs in input")));
    }
    Ok(graphs)
}

fn read_text(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(drop)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text)).map(drop)
    };
    result.map_err(|e| UsageError(format!("cannot read `{}`: {e}", path.display())))?;
    Ok(text)
}

/// Corpus identifier for a graph source.
pub fn describe(source: &GraphSource) -> String {
    match (&source.gen, &source.graph6, &source.input) {
        (Some(family), _, _) => format!("gen:{family}"),
        (_, Some(text), _) => format!("graph6:{text}"),
        (_, _, Some(path)) if path == Path::new("-") => "stdin".into(),
        (_, _, Some(path)) => format!("file:{}", path.display()),
        _ => "none".into(),
    }
}
