//! Generator files.
//!
//! ```text
//! # comment
//! degree 5
//! perm a = (1, 2, 3, 4, 5)
//! perm b = (1, 2, 3)
//! product c = (1, 2)(2, 3)
//! group G = <a, b>
//! group S = symmetric(5)
//! graph P = petersen.edges
//! coset G H g
//! cayley R S = {s, t}
//! quotient P X N
//! search G H valency 3
//! ```
//!
//! `perm` lines must be disjoint cycle products; `product` lines multiply
//! overlapping cycles left to right. Built-in groups are `alternating(n)`,
//! `symmetric(n)`, `cyclic(n)` and `dihedral(n)`, each on its natural `n`
//! points, which must equal the file degree. Graph paths are relative to the
//! file that names them.

use std::collections::BTreeMap;

use cosgraph_core::group::{alternating, cyclic, dihedral, symmetric};
use cosgraph_core::perm::{parse_cycle_product, parse_cycles};
use cosgraph_core::{GeneratedGroup, Permutation};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Coset {
        g: String,
        h: String,
        element: String,
    },
    Cayley {
        r: String,
        s: Vec<String>,
    },
    Quotient {
        graph: String,
        x: String,
        n: String,
    },
    Search {
        g: String,
        h: String,
        valency: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct GeneratorFile {
    pub degree: usize,
    pub perms: BTreeMap<String, Permutation>,
    pub groups: BTreeMap<String, GeneratedGroup>,
    pub graphs: BTreeMap<String, String>,
    /// With 1-based line numbers.
    pub directives: Vec<(usize, Directive)>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn name(line: usize, s: &str) -> Result<String> {
    if valid_name(s) {
        Ok(s.to_string())
    } else {
        Err(CliError::format(line, format!("invalid name {s:?}")))
    }
}

/// `NAME = rest`
fn assignment(line: usize, rest: &str) -> Result<(String, String)> {
    let (lhs, rhs) = rest
        .split_once('=')
        .ok_or_else(|| CliError::format(line, "expected `NAME = ...`"))?;
    Ok((name(line, lhs.trim())?, rhs.trim().to_string()))
}

fn builtin(line: usize, text: &str, degree: usize) -> Result<Option<GeneratedGroup>> {
    let Some((family, arg)) = text.strip_suffix(')').and_then(|t| t.split_once('(')) else {
        return Ok(None);
    };
    let n: usize = arg
        .trim()
        .parse()
        .map_err(|_| CliError::format(line, format!("bad argument {arg:?}")))?;
    if n != degree {
        return Err(CliError::format(
            line,
            format!("{family}({n}) does not act on degree {degree}"),
        ));
    }
    let group = match family.trim() {
        "alternating" => alternating(n)?,
        "symmetric" => symmetric(n)?,
        "cyclic" => cyclic(n)?,
        "dihedral" => dihedral(n)?,
        other => return Err(CliError::format(line, format!("unknown group constructor {other:?}"))),
    };
    Ok(Some(group))
}

fn name_list(line: usize, text: &str, open: char, close: char) -> Result<Vec<String>> {
    let inner = text
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| CliError::format(line, format!("expected {open}...{close}")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| name(line, s))
        .collect()
}

impl GeneratorFile {
    pub fn parse(text: &str) -> Result<GeneratorFile> {
        let mut degree = None;
        let mut file = GeneratorFile {
            degree: 0,
            perms: BTreeMap::new(),
            groups: BTreeMap::new(),
            graphs: BTreeMap::new(),
            directives: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            if keyword == "degree" {
                if degree.is_some() {
                    return Err(CliError::format(line, "repeated degree line"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| CliError::format(line, format!("bad degree {rest:?}")))?;
                if n == 0 {
                    return Err(CliError::format(line, "degree must be positive"));
                }
                degree = Some(n);
                file.degree = n;
                continue;
            }
            let n = degree.ok_or_else(|| CliError::format(line, "`degree N` must come first"))?;
            let words: Vec<&str> = rest.split_whitespace().collect();
            match keyword {
                "perm" | "product" => {
                    let (id, body) = assignment(line, rest)?;
                    let parsed = if keyword == "perm" {
                        parse_cycles(&body, n)
                    } else {
                        parse_cycle_product(&body, n)
                    };
                    let p = parsed.map_err(|e| CliError::format(line, format!("{id}: {e}")))?;
                    if file.perms.insert(id.clone(), p).is_some() {
                        return Err(CliError::format(line, format!("{id} defined twice")));
                    }
                }
                "group" => {
                    let (id, body) = assignment(line, rest)?;
                    let group = match builtin(line, &body, n)? {
                        Some(g) => g,
                        None => {
                            let gens = name_list(line, &body, '<', '>')?
                                .iter()
                                .map(|g| file.perm(line, g).cloned())
                                .collect::<Result<Vec<_>>>()?;
                            GeneratedGroup::new(n, gens)?
                        }
                    };
                    if file.groups.insert(id.clone(), group).is_some() {
                        return Err(CliError::format(line, format!("group {id} defined twice")));
                    }
                }
                "graph" => {
                    let (id, path) = assignment(line, rest)?;
                    if path.is_empty() {
                        return Err(CliError::format(line, "graph needs a path"));
                    }
                    file.graphs.insert(id, path);
                }
                "coset" => {
                    let [g, h, e] = words[..] else {
                        return Err(CliError::format(line, "expected `coset G H g`"));
                    };
                    file.group(line, g)?;
                    file.group(line, h)?;
                    file.perm(line, e)?;
                    file.directives.push((
                        line,
                        Directive::Coset {
                            g: g.into(),
                            h: h.into(),
                            element: e.into(),
                        },
                    ));
                }
                "cayley" => {
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| CliError::format(line, "expected `cayley R S = {...}`"))?;
                    let lhs: Vec<&str> = lhs.split_whitespace().collect();
                    let [r, _s] = lhs[..] else {
                        return Err(CliError::format(line, "expected `cayley R S = {...}`"));
                    };
                    file.group(line, r)?;
                    let s = name_list(line, rhs.trim(), '{', '}')?;
                    for x in &s {
                        file.perm(line, x)?;
                    }
                    file.directives.push((line, Directive::Cayley { r: r.into(), s }));
                }
                "quotient" => {
                    let [graph, x, nn] = words[..] else {
                        return Err(CliError::format(line, "expected `quotient GRAPH X N`"));
                    };
                    if !file.graphs.contains_key(graph) {
                        return Err(CliError::format(line, format!("unknown graph {graph}")));
                    }
                    file.group(line, x)?;
                    file.group(line, nn)?;
                    file.directives.push((
                        line,
                        Directive::Quotient {
                            graph: graph.into(),
                            x: x.into(),
                            n: nn.into(),
                        },
                    ));
                }
                "search" => {
                    let (g, h, valency) = match words[..] {
                        [g, h] => (g, h, None),
                        [g, h, "valency", k] => (
                            g,
                            h,
                            Some(
                                k.parse()
                                    .map_err(|_| CliError::format(line, format!("bad valency {k:?}")))?,
                            ),
                        ),
                        _ => return Err(CliError::format(line, "expected `search G H [valency K]`")),
                    };
                    file.group(line, g)?;
                    file.group(line, h)?;
                    file.directives.push((
                        line,
                        Directive::Search {
                            g: g.into(),
                            h: h.into(),
                            valency,
                        },
                    ));
                }
                other => return Err(CliError::format(line, format!("unknown keyword {other:?}"))),
            }
        }
        if degree.is_none() {
            return Err(CliError::format(1, "missing `degree N` line"));
        }
        Ok(file)
    }

    fn perm(&self, line: usize, id: &str) -> Result<&Permutation> {
        self.perms
            .get(id)
            .ok_or_else(|| CliError::format(line, format!("unknown permutation {id}")))
    }

    fn group(&self, line: usize, id: &str) -> Result<&GeneratedGroup> {
        self.groups
            .get(id)
            .ok_or_else(|| CliError::format(line, format!("unknown group {id}")))
    }

    pub fn permutation(&self, id: &str) -> Result<&Permutation> {
        self.perm(0, id)
    }

    pub fn generated(&self, id: &str) -> Result<&GeneratedGroup> {
        self.group(0, id)
    }

    /// The first directive of a kind, as selected by `pick`.
    pub fn find<T>(&self, pick: impl Fn(&Directive) -> Option<T>) -> Option<T> {
        self.directives.iter().find_map(|(_, d)| pick(d))
    }
}
