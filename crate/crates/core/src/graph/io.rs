//! Edge-list text, graph6 and DOT.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

/// Parses `n` on the first line followed by one `u v` pair per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("vertex count `{first}` is not a number")))?;
    let mut g = Graph::new(n)?;
    for (k, line) in lines.enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("edge line {} `{line}` needs two vertices", k + 1)));
        }
        let u: usize = parts[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{}`", parts[0])))?;
        let v: usize = parts[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{}`", parts[1])))?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let t = text.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    let bytes = t.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} is not valid graph6")));
    }
    let (n, rest) = if bytes[0] < 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("graph6 vertex count too large".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12) | ((bytes[2] as usize - 63) << 6) | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    };
    let mut g = Graph::new(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if rest.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed} for {n} vertices",
            rest.len()
        )));
    }
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads newline-separated graph6 strings, ignoring blank lines.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Auto-detects an edge list (first token is a number on its own line) or
/// graph6.
pub fn parse_any(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => parse_edge_list(text),
        Some(_) => parse_graph6(text),
        None => Err(Error::Parse("empty input".into())),
    }
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph \"{name}\" {{\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v} [label=\"{}\"];", g.label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&path(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::new(0).unwrap()), "?");
        assert_eq!(parse_graph6("C~").unwrap(), complete(4).unwrap());
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert!(pet.is_cubic());
    }

    #[test]
    fn graph6_round_trip_large() {
        let g = cycle(64).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        let g = cycle(63).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_any(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3\n0 5\n").is_err());
        assert!(parse_edge_list("x\n").is_err());
        assert!(parse_graph6("C").is_err());
    }

    #[test]
    fn dot_mentions_edges() {
        let d = to_dot(&path(3).unwrap(), "p3");
        assert!(d.contains("0 -- 1;"));
        assert!(d.contains("1 -- 2;"));
    }
}
