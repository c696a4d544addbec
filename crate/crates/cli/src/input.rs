use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use compsub::graph::io::{parse_edge_list, parse_graph6_line, to_edge_list, to_graph6};
use compsub::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edgelist,
}

/// One parsed graph and the label used for it in reports.
pub struct Instance {
    pub id: String,
    pub graph: Graph,
}

/// Reads graphs from `path` (`-` or `None` for stdin). graph6 input holds one
/// graph per non-empty line; an edge list holds a single graph.
///
/// Without an explicit format, stdin and files ending in `.g6` are graph6,
/// files ending in `.el`, `.edges` or `.txt` are edge lists, and anything
/// else is sniffed: a first data line with whitespace means edge list.
pub fn read_instances(path: Option<&Path>, format: Option<Format>) -> Result<Vec<Instance>> {
    let (name, text) = match path {
        None => ("stdin".to_string(), read_stdin()?),
        Some(p) if p == Path::new("-") => ("stdin".to_string(), read_stdin()?),
        Some(p) => (
            p.display().to_string(),
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        ),
    };
    let format = format.unwrap_or_else(|| match path {
        None => Format::G6,
        Some(p) if p == Path::new("-") => Format::G6,
        Some(p) => guess_format(p, &text),
    });
    match format {
        Format::Edgelist => {
            let graph = parse_edge_list(&text).with_context(|| format!("parsing {name}"))?;
            Ok(vec![Instance { id: name, graph }])
        }
        Format::G6 => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let graph = parse_graph6_line(line.trim(), i + 1)
                    .with_context(|| format!("parsing {name}"))?;
                out.push(Instance {
                    id: format!("{name}:{}", i + 1),
                    graph,
                });
            }
            if out.is_empty() {
                bail!("{name}: no graphs in input");
            }
            Ok(out)
        }
    }
}

/// Reads exactly one graph.
pub fn read_single(path: &Path, format: Option<Format>) -> Result<Graph> {
    let mut all = read_instances(Some(path), format)?;
    if all.len() != 1 {
        bail!(
            "{}: expected one graph, found {}",
            path.display(),
            all.len()
        );
    }
    Ok(all.remove(0).graph)
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .context("reading stdin")?;
    Ok(s)
}

fn guess_format(path: &Path, text: &str) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => Format::G6,
        Some("el") | Some("edges") | Some("txt") => Format::Edgelist,
        _ => {
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            if first.contains(char::is_whitespace) {
                Format::Edgelist
            } else {
                Format::G6
            }
        }
    }
}

pub fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{}\n", to_graph6(g)),
        Format::Edgelist => to_edge_list(g),
    }
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
