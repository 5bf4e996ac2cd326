//! Text formats: a line-oriented edge list and graph6.
//!
//! Edge list: line 1 holds `n`, every further non-blank line holds `u v`
//! with `0 <= u, v < n`. Lines starting with `#` are ignored.
//!
//! graph6 follows the nauty conventions: `N(n)` followed by the upper
//! triangle in column order, six bits per printable byte (offset 63).

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((first_no, first)) = lines.next() else {
        return parse_err(1, "missing vertex count");
    };
    let n: usize = match first.parse() {
        Ok(n) => n,
        Err(_) => return parse_err(first_no, format!("expected vertex count, found {first:?}")),
    };
    let mut g = Graph::empty(n);
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return parse_err(no, format!("expected `u v`, found {line:?}"));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = match f.parse() {
                Ok(x) => x,
                Err(_) => return parse_err(no, format!("not a vertex index: {f:?}")),
            };
        }
        let [u, v] = ends;
        if u >= n || v >= n {
            return parse_err(no, format!("vertex out of range in ({u}, {v}); n = {n}"));
        }
        if u == v {
            return parse_err(no, format!("self-loop at vertex {u}"));
        }
        if g.has_edge(u, v) {
            return parse_err(no, format!("repeated edge ({u}, {v})"));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; `line` is used for diagnostics.
pub fn parse_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.trim_end_matches(['\r', '\n']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return parse_err(line, format!("byte {b} outside the graph6 range 63..=126"));
    }
    let digits = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return parse_err(line, "truncated vertex count");
        }
        Ok(bytes[from..from + count].iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, body) = match bytes {
        [] => return parse_err(line, "empty graph6 string"),
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let need_bits = n * n.saturating_sub(1) / 2;
    let need = need_bits.div_ceil(6);
    let data = &bytes[body..];
    if data.len() != need {
        return parse_err(
            line,
            format!("graph6 body has {} bytes, expected {need} for n = {n}", data.len()),
        );
    }
    let mut rows = vec![VertexSet::new(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    if need_bits % 6 != 0 {
        let pad = 6 - need_bits % 6;
        if (data[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return parse_err(line, "nonzero padding bits");
        }
    }
    Graph::from_rows(rows).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

/// Reads a graph6 corpus, one graph per non-blank line.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

/// Accepts either format: an edge list starts with a bare integer line.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => parse_edge_list(text),
        Some(_) => {
            let (no, line) = text
                .lines()
                .enumerate()
                .find(|(_, l)| !l.trim().is_empty())
                .expect("a non-blank line exists");
            parse_graph6_line(line.trim(), no + 1)
        }
        None => parse_err(1, "empty input"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the nauty format description.
        assert_eq!(to_graph6(&named::petersen()), "IheA@GUAo");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6_line("C~", 1).unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_large_n_header() {
        let g = named::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6_line(&s, 1).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_bodies() {
        assert!(matches!(parse_graph6_line("C~~", 3), Err(Error::Parse { line: 3, .. })));
        assert!(parse_graph6_line("C\x20", 1).is_err());
        // n = 2 has one data bit; padding bits must be zero.
        assert!(parse_graph6_line("A_", 1).is_ok());
        assert!(parse_graph6_line("A`", 1).is_err());
    }

    #[test]
    fn edge_list_diagnostics_name_the_line() {
        let err = parse_edge_list("3\n0 1\n1 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("3\n0 1\n\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_edge_list("3\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn corpus_reports_line() {
        let err = parse_graph6_corpus("C~\n\nC!\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert_eq!(parse_graph6_corpus(">>graph6<<C~\nA_\n").unwrap().len(), 2);
    }

    #[test]
    fn auto_detects_format() {
        let g = named::cycle(5);
        assert_eq!(parse_graph_auto(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph_auto(&to_graph6(&g)).unwrap(), g);
    }

    proptest! {
        #[test]
        fn formats_roundtrip(n in 0usize..40, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut x = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { g.add_edge(u, v); }
                }
            }
            prop_assert_eq!(parse_graph6_line(&to_graph6(&g), 1).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
