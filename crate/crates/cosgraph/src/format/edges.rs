//! Edge lists: `vertices N`, then one 1-based `u v` pair per line.

use std::fmt::Write;

use cosgraph_core::SimpleGraph;

use crate::error::{CliError, Result};

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some(count) = n else {
            match words[..] {
                ["vertices", k] => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| CliError::format(line, format!("bad vertex count {k:?}")))?;
                    if k == 0 {
                        return Err(CliError::format(line, "vertex count must be positive"));
                    }
                    n = Some(k);
                    continue;
                }
                _ => return Err(CliError::format(line, "expected `vertices N` first")),
            }
        };
        let [u, v] = words[..] else {
            return Err(CliError::format(line, "expected `u v`"));
        };
        let parse = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(x) if (1..=count).contains(&x) => Ok(x - 1),
                _ => Err(CliError::format(line, format!("vertex {s:?} not in 1..={count}"))),
            }
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(CliError::format(line, format!("loop at vertex {}", u + 1)));
        }
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| CliError::format(1, "missing `vertices N` line"))?;
    Ok(SimpleGraph::from_edges(n, &edges)?)
}

pub fn write_edge_list(graph: &SimpleGraph) -> String {
    let mut out = format!("vertices {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}
