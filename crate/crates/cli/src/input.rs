use std::io::{BufRead, BufReader};

use condgraph::{from_graph6_with_loops, Graph};

use crate::CliError;

/// One input line: its 1-based line number and the parse result.
pub struct Item {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, condgraph::Error>,
}

/// Positional graphs if any, otherwise the lines of `--in` (default stdin).
pub fn read_graphs(positional: &[String], input: Option<&str>) -> Result<Vec<Item>, CliError> {
    let lines: Vec<String> = if !positional.is_empty() {
        positional.to_vec()
    } else {
        let reader: Box<dyn BufRead> = match input.unwrap_or("-") {
            "-" => Box::new(BufReader::new(std::io::stdin())),
            path => Box::new(BufReader::new(
                std::fs::File::open(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?,
            )),
        };
        reader
            .lines()
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Input(e.to_string()))?
    };
    Ok(lines
        .into_iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let text = l.trim().to_string();
            Item { line: i + 1, graph: from_graph6_with_loops(&text), text }
        })
        .collect())
}
