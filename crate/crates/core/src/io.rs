//! Text formats.
//!
//! * Edge list: a first line `n m`, then `m` lines `u v` (0-indexed).
//!   Blank lines and lines starting with `#` are skipped.
//! * Distance matrix CSV: `n` rows of `n` comma-separated values, `inf` for
//!   no path.
//! * Labels: one `name vertex` pair per line.
//! * Sequences: one string per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex, INF};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(format!("line {line}: '{tok}' is not a number")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| Error::parse("empty edge list"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = h[..] else {
        return Err(Error::parse(format!("line {ln}: expected 'n m'")));
    };
    let (n, m): (usize, usize) = (parse_num(n, ln)?, parse_num(m, ln)?);
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let t: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = t[..] else {
            return Err(Error::parse(format!("line {ln}: expected 'u v'")));
        };
        edges.push((parse_num::<Vertex>(u, ln)?, parse_num::<Vertex>(v, ln)?));
    }
    if edges.len() != m {
        return Err(Error::parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_distance_csv(text: &str) -> Result<DistanceMatrix> {
    let rows = content_lines(text)
        .map(|(ln, line)| {
            line.split(',')
                .map(|tok| match tok.trim() {
                    "inf" | "INF" => Ok(INF),
                    t => parse_num(t, ln),
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DistanceMatrix::from_rows(rows)
}

pub fn write_distance_csv(d: &DistanceMatrix) -> String {
    let mut s = String::new();
    for u in 0..d.n() {
        let row: Vec<String> =
            d.row(u).iter().map(|&x| if x == INF { "inf".to_string() } else { x.to_string() }).collect();
        s += &row.join(",");
        s.push('\n');
    }
    s
}

pub fn write_labels(labels: &[(String, Vertex)]) -> String {
    labels.iter().map(|(name, v)| format!("{name} {v}\n")).collect()
}

pub fn parse_labels(text: &str) -> Result<Vec<(String, Vertex)>> {
    content_lines(text)
        .map(|(ln, line)| match line.split_whitespace().collect::<Vec<_>>()[..] {
            [name, v] => Ok((name.to_string(), parse_num(v, ln)?)),
            _ => Err(Error::parse(format!("line {ln}: expected 'name vertex'"))),
        })
        .collect()
}

pub fn parse_sequences(text: &str) -> Vec<String> {
    content_lines(text).map(|(_, l)| l.to_string()).collect()
}
