//! Text formats.
//!
//! ```text
//! # path on three vertices
//! graph n=3
//! 0 1
//! 1 2
//! ```
//!
//! ```text
//! poset n=3
//! 0 < 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Poset files list
//! relations (normally covers); the loader takes the transitive closure and
//! rejects cycles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{Graph, Poset};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<usize> {
    let (line, text) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: format!("missing \"{keyword} n=<N>\" header"),
    })?;
    let bad = || Error::Parse {
        line,
        message: format!("expected \"{keyword} n=<N>\", found {text:?}"),
    };
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(bad());
    }
    let n = words
        .next()
        .and_then(|w| w.strip_prefix("n="))
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(bad)?;
    if words.next().is_some() {
        return Err(bad());
    }
    if n > 32 {
        return Err(Error::Parse {
            line,
            message: format!("n = {n} exceeds the limit of 32"),
        });
    }
    Ok(n)
}

fn parse_vertex(token: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let token = token.ok_or(Error::Parse {
        line,
        message: "missing vertex".into(),
    })?;
    let v = token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("bad vertex {token:?}"),
    })?;
    if v >= n {
        return Err(Error::Parse {
            line,
            message: format!("vertex {v} out of range for n = {n}"),
        });
    }
    Ok(v)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        let n = parse_header(&mut lines, "graph")?;
        let mut g = Graph::empty(n);
        for (line, l) in lines {
            let mut words = l.split_whitespace();
            let u = parse_vertex(words.next(), n, line)?;
            let v = parse_vertex(words.next(), n, line)?;
            if words.next().is_some() {
                return Err(Error::Parse {
                    line,
                    message: "expected exactly two vertices".into(),
                });
            }
            if u == v || g.has_edge(u, v) {
                return Err(Error::Parse {
                    line,
                    message: format!("edge {u} {v} is a loop or repeated"),
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph n={}", self.len())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Poset> {
        let mut lines = content_lines(text);
        let n = parse_header(&mut lines, "poset")?;
        let mut pairs = Vec::new();
        let mut last_line = 1;
        for (line, l) in lines {
            last_line = line;
            let (a, b) = l.split_once('<').ok_or(Error::Parse {
                line,
                message: format!("expected \"u < v\", found {l:?}"),
            })?;
            let u = parse_vertex(Some(a.trim()), n, line)?;
            let v = parse_vertex(Some(b.trim()), n, line)?;
            pairs.push((u, v));
        }
        Poset::from_relations(n, &pairs).map_err(|e| Error::Parse {
            line: last_line,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poset n={}", self.len())?;
        for (u, v) in self.cover_relations() {
            writeln!(f, "{u} < {v}")?;
        }
        Ok(())
    }
}
