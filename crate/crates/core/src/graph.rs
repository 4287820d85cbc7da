//! Multigraphs, their orientations, outdegree sequences and cuts.
//!
//! Edges are identified by their position in the edge list, never by their
//! endpoints, so parallel edges stay distinguishable and the edge order is a
//! fixed linear order that every enumerator follows.
//!
//! The text format is line based: a header `n m` followed by `m` lines `u v`
//! with 0-indexed endpoints. An orientation is written as `m` characters, `+`
//! when edge `i` points from its first listed endpoint to its second and `-`
//! otherwise.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths;

/// A loopless undirected multigraph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // incident[v] lists the edges at v in increasing index order.
    incident: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop { edge: i, vertex: u });
            }
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(Self { n, edges, incident })
    }

    /// Parses the `n m` / `u v` edge-list format. Blank lines are ignored;
    /// errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines.by_ref() {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("endpoint out of range for {n} vertices"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Self::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The endpoints of edge `e` in listed order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Edges incident to `v`, in increasing index order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &e in &self.incident[x] {
                let y = self.other(e, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Minimum number of edges crossing a nonempty proper vertex subset.
    ///
    /// Computed as the minimum over `v != 0` of the maximum flow from vertex
    /// 0 to `v`, every edge carrying unit capacity in both directions.
    pub fn edge_connectivity(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { min: 2, n: self.n });
        }
        let mut flow = MixedFlow::new(self);
        let mut best = usize::MAX;
        for v in 1..self.n {
            best = best.min(flow.max_flow(0, v, best));
        }
        Ok(best)
    }

    pub(crate) fn other(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.edges[e];
        if u == x {
            v
        } else {
            u
        }
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{field}` is not a natural number"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

/// Unit-capacity max flow on a partially oriented multigraph.
///
/// An undecided edge carries one unit in either direction, a decided edge
/// one unit from its tail to its head.
pub(crate) struct MixedFlow<'g> {
    graph: &'g Multigraph,
    // Residual capacity of edge e along (first -> second) and (second -> first).
    cap: Vec<[u8; 2]>,
    base: Vec<[u8; 2]>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'g> MixedFlow<'g> {
    pub(crate) fn new(graph: &'g Multigraph) -> Self {
        let base = vec![[1, 1]; graph.edge_count()];
        Self {
            graph,
            cap: base.clone(),
            base,
            parent: vec![usize::MAX; graph.vertex_count()],
            queue: VecDeque::new(),
        }
    }

    /// Restricts edge `e` to one direction (`Some(true)` = first -> second)
    /// or reopens it in both (`None`).
    pub(crate) fn set_edge(&mut self, e: usize, dir: Option<bool>) {
        self.base[e] = match dir {
            None => [1, 1],
            Some(true) => [1, 0],
            Some(false) => [0, 1],
        };
    }

    /// Max flow from `s` to `t`, stopping once `cap` units are routed.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, cap: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let mut flow = 0;
        while flow < cap && self.augment(s, t) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let g = self.graph;
        self.parent.fill(usize::MAX);
        self.queue.clear();
        self.queue.push_back(s);
        // Root marker; any value other than usize::MAX.
        self.parent[s] = usize::MAX - 1;
        while let Some(x) = self.queue.pop_front() {
            for &e in g.incident(x) {
                let side = usize::from(g.edges[e].0 != x);
                let y = g.other(e, x);
                if self.cap[e][side] == 0 || self.parent[y] != usize::MAX {
                    continue;
                }
                self.parent[y] = e;
                if y == t {
                    let mut cur = t;
                    while cur != s {
                        let e = self.parent[cur];
                        let prev = g.other(e, cur);
                        let side = usize::from(g.edges[e].0 != prev);
                        self.cap[e][side] -= 1;
                        self.cap[e][1 - side] += 1;
                        cur = prev;
                    }
                    return true;
                }
                self.queue.push_back(y);
            }
        }
        false
    }
}

/// An orientation of a multigraph: one direction per edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation<'g> {
    graph: &'g Multigraph,
    forward: Vec<bool>,
}

impl<'g> Orientation<'g> {
    /// Every edge points from its first listed endpoint to its second.
    pub fn all_forward(graph: &'g Multigraph) -> Self {
        Self {
            graph,
            forward: vec![true; graph.edge_count()],
        }
    }

    pub fn from_directions(graph: &'g Multigraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "orientation",
                expected: graph.edge_count(),
                found: forward.len(),
            });
        }
        Ok(Self { graph, forward })
    }

    /// Reads the `+`/`-` serialization.
    pub fn parse(graph: &'g Multigraph, text: &str) -> Result<Self> {
        let text = text.trim();
        let forward = text
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                other => Err(Error::OrientationFormat(format!(
                    "unexpected character `{other}`"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_directions(graph, forward)
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn directions(&self) -> &[bool] {
        &self.forward
    }

    pub fn is_forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        let (u, v) = self.graph.edges[e];
        if self.forward[e] {
            u
        } else {
            v
        }
    }

    pub fn head(&self, e: usize) -> usize {
        let (u, v) = self.graph.edges[e];
        if self.forward[e] {
            v
        } else {
            u
        }
    }

    pub fn flip(&mut self, e: usize) {
        self.forward[e] = !self.forward[e];
    }

    /// Reverses every edge of `edges` in place. Reversing the same set twice
    /// restores the orientation.
    pub fn reverse_edges<I: IntoIterator<Item = usize>>(&mut self, edges: I) {
        for e in edges {
            self.flip(e);
        }
    }

    /// The orientation with the arcs in `edges` reversed.
    pub fn reversed<I: IntoIterator<Item = usize>>(&self, edges: I) -> Self {
        let mut out = self.clone();
        out.reverse_edges(edges);
        out
    }

    /// The orientation with every arc reversed.
    pub fn reverse_all(&self) -> Self {
        Self {
            graph: self.graph,
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.graph.incident[v]
            .iter()
            .filter(|&&e| self.tail(e) == v)
            .count()
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.graph.degree(v) - self.outdegree(v)
    }

    pub fn outdegrees(&self) -> DegreeSequence {
        let mut out = vec![0; self.graph.n];
        for e in 0..self.forward.len() {
            out[self.tail(e)] += 1;
        }
        DegreeSequence(out)
    }

    /// Number of arcs leaving the cut.
    pub fn cut_outdegree(&self, cut: &CutSet) -> Result<usize> {
        if cut.members.len() != self.graph.n {
            return Err(Error::LengthMismatch {
                what: "cut",
                expected: self.graph.n,
                found: cut.members.len(),
            });
        }
        Ok((0..self.forward.len())
            .filter(|&e| cut.contains(self.tail(e)) && !cut.contains(self.head(e)))
            .count())
    }

    /// True iff every nonempty proper vertex subset has at least `k`
    /// leaving arcs, tested as `λ(0, v) >= k` and `λ(v, 0) >= k` for all
    /// `v != 0`. A one-vertex graph is k-connected for every k.
    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let mut search = paths::PathSearch::new(self.graph.n);
        let mut meter = crate::meter::DelayMeter::new();
        Ok(search.is_k_connected(self, k, &mut meter))
    }
}

impl fmt::Display for Orientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .forward
            .iter()
            .map(|&fw| if fw { '+' } else { '-' })
            .collect();
        f.write_str(&s)
    }
}

/// Vertex-indexed outdegree vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn new(out: Vec<usize>) -> Self {
        Self(out)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::ops::Index<usize> for DegreeSequence {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Accepts entries separated by commas and/or whitespace.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::SequenceFormat(format!("`{t}` is not a natural number")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DegreeSequence)
    }
}

/// A nonempty proper subset of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutSet {
    members: Vec<bool>,
}

impl CutSet {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mask[v] = true;
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(members: Vec<bool>) -> Result<Self> {
        if !members.iter().any(|&b| b) {
            return Err(Error::InvalidCut("empty vertex set"));
        }
        if members.iter().all(|&b| b) {
            return Err(Error::InvalidCut("the whole vertex set"));
        }
        Ok(Self { members })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }
}
