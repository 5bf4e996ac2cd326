//! Edge colourings of complete graphs and their file formats.

use crate::constructions::balanced_parts;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A colouring of the pairs of `{0, ..., n-1}` with colours `0..q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringFile", into = "ColoringFile")]
pub struct EdgeColoring {
    n: usize,
    q: usize,
    /// Upper-triangle pairs in row-major order.
    colors: Vec<u8>,
}

/// The JSON shape `{n, q, edges: [[u, v, color], ...]}`.
#[derive(Serialize, Deserialize)]
struct ColoringFile {
    n: usize,
    q: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl From<EdgeColoring> for ColoringFile {
    fn from(c: EdgeColoring) -> Self {
        let edges = c.pairs().map(|(u, v)| (u, v, c.get(u, v) as usize)).collect();
        ColoringFile { n: c.n, q: c.q, edges }
    }
}

impl TryFrom<ColoringFile> for EdgeColoring {
    type Error = Error;

    fn try_from(f: ColoringFile) -> Result<Self> {
        let mut c = EdgeColoring::uniform(f.n, f.q, 0)?;
        let mut seen = vec![false; c.colors.len()];
        for &(u, v, color) in &f.edges {
            if u == v || u >= f.n || v >= f.n {
                return domain(format!("invalid pair ({u}, {v}) for n = {}", f.n));
            }
            if color >= f.q {
                return domain(format!("colour {color} on ({u}, {v}) is not below q = {}", f.q));
            }
            let i = pair_index(f.n, u.min(v), u.max(v));
            if std::mem::replace(&mut seen[i], true) {
                return domain(format!("pair ({u}, {v}) coloured twice"));
            }
            c.colors[i] = color as u8;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let (u, v) = c.pairs().nth(i).expect("index in range");
            return domain(format!("pair ({u}, {v}) has no colour"));
        }
        Ok(c)
    }
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl EdgeColoring {
    pub fn uniform(n: usize, q: usize, color: usize) -> Result<Self> {
        if q == 0 || q > u8::MAX as usize + 1 {
            return domain(format!("number of colours must be in 1..=256, got {q}"));
        }
        if color >= q {
            return domain(format!("colour {color} is not below q = {q}"));
        }
        Ok(EdgeColoring { n, q, colors: vec![color as u8; n * n.saturating_sub(1) / 2] })
    }

    /// Colours every pair `u < v` with `f(u, v)`.
    pub fn from_fn(n: usize, q: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut c = Self::uniform(n, q, 0)?;
        for u in 0..n {
            for v in u + 1..n {
                c.set(u, v, f(u, v))?;
            }
        }
        Ok(c)
    }

    /// Colour 1 on the edges of `g`, colour 0 elsewhere.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_fn(g.n(), 2, |u, v| usize::from(g.has_edge(u, v))).expect("two colours")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn get(&self, u: usize, v: usize) -> u8 {
        assert!(u != v, "no colour on a loop");
        self.colors[pair_index(self.n, u.min(v), u.max(v))]
    }

    pub fn set(&mut self, u: usize, v: usize, color: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return domain(format!("invalid pair ({u}, {v}) for n = {}", self.n));
        }
        if color >= self.q {
            return domain(format!("colour {color} is not below q = {}", self.q));
        }
        self.colors[pair_index(self.n, u.min(v), u.max(v))] = color as u8;
        Ok(())
    }

    /// Pairs `u < v` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }

    /// The graph of edges with colour `color`.
    pub fn color_class(&self, color: usize) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, (u, v)) in self.pairs().enumerate() {
            if self.colors[i] as usize == color {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Applies `map` to every colour; `map` must send `0..q` into `0..q`.
    pub fn recolored(&self, map: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for c in out.colors.iter_mut() {
            let to = *map.get(*c as usize).ok_or_else(|| Error::Domain("colour map too short".into()))?;
            if to >= self.q {
                return domain(format!("colour map sends to {to}, not below q = {}", self.q));
            }
            *c = to as u8;
        }
        Ok(out)
    }

    /// The colouring with vertex `v` renamed `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        for (u, v) in self.pairs() {
            let (a, b) = (perm[u], perm[v]);
            out.colors[pair_index(self.n, a.min(b), a.max(b))] = self.get(u, v);
        }
        out
    }

    /// Header `n q`, then one line per vertex `u < n - 1` listing the
    /// colours of `(u, u+1), ..., (u, n-1)`: as a digit string when
    /// `q <= 10`, space-separated otherwise.
    pub fn to_rows(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.q);
        for u in 0..self.n.saturating_sub(1) {
            let row: Vec<String> = (u + 1..self.n).map(|v| self.get(u, v).to_string()).collect();
            let sep = if self.q <= 10 { "" } else { " " };
            writeln!(out, "{}", row.join(sep)).expect("write to string");
        }
        out
    }

    pub fn parse_rows(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line, msg: String| Error::Parse { line, msg };
        let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n q` header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(hl, format!("bad number `{t}`"))))
            .collect::<Result<_>>()?;
        let [n, q] = nums[..] else {
            return Err(parse_err(hl, "header must be `n q`".into()));
        };
        let mut c = Self::uniform(n, q, 0).map_err(|e| parse_err(hl, e.to_string()))?;
        for u in 0..n.saturating_sub(1) {
            let (line, row) = lines
                .next()
                .ok_or_else(|| parse_err(hl + u + 1, format!("missing row for vertex {u}")))?;
            let cells: Vec<&str> = if row.contains(char::is_whitespace) {
                row.split_whitespace().collect()
            } else {
                row.split("").filter(|s| !s.is_empty()).collect()
            };
            if cells.len() != n - u - 1 {
                return Err(parse_err(line, format!("expected {} colours, found {}", n - u - 1, cells.len())));
            }
            for (v, cell) in (u + 1..n).zip(cells) {
                let color: usize = cell.parse().map_err(|_| parse_err(line, format!("bad colour `{cell}`")))?;
                c.set(u, v, color).map_err(|e| parse_err(line, e.to_string()))?;
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "unexpected extra row".into()));
        }
        Ok(c)
    }

    /// JSON or row text, by first non-blank character.
    pub fn parse_auto(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            Self::parse_rows(text)
        }
    }
}

/// Balanced parts as consecutive label ranges, larger parts first.
pub fn partition_classes(n: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut at = 0;
    balanced_parts(n, parts)
        .into_iter()
        .map(|s| {
            let class = (at..at + s).collect();
            at += s;
            class
        })
        .collect()
}

/// Red (0) inside each of `parts` balanced classes, blue (1) across.
pub fn partition_coloring(n: usize, parts: usize) -> Result<EdgeColoring> {
    if parts == 0 || parts > n {
        return domain(format!("need 1 <= parts <= n, got parts = {parts}, n = {n}"));
    }
    let mut class_of = vec![0; n];
    for (i, class) in partition_classes(n, parts).iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    EdgeColoring::from_fn(n, 2, |u, v| usize::from(class_of[u] != class_of[v]))
}

/// Replaces vertex `i` of `base` by a block coloured `inner_color`; pairs
/// across blocks `i != j` take `base(i, j)`. Blocks are balanced with the
/// larger ones on lower base labels. `inner_color` must be a colour not
/// used by `base`, i.e. at least `base.q()`.
pub fn blowup_coloring(base: &EdgeColoring, n: usize, inner_color: usize) -> Result<EdgeColoring> {
    let r = base.n();
    if r == 0 {
        return domain("base colouring has no vertices");
    }
    if inner_color < base.q() {
        return domain(format!("inner colour {inner_color} is already a base colour (q = {})", base.q()));
    }
    let mut block = vec![0; n];
    for (i, class) in partition_classes(n, r).iter().enumerate() {
        for &v in class {
            block[v] = i;
        }
    }
    EdgeColoring::from_fn(n, inner_color + 1, |u, v| {
        if block[u] == block[v] {
            inner_color
        } else {
            base.get(block[u], block[v]) as usize
        }
    })
}
