//! Directed path search and arc-disjoint path counting.
//!
//! Everything here is built on one primitive: a breadth-first search for a
//! directed path, optionally avoiding a set of frozen edges. Reversing a
//! `u -> v` path lowers the number of arc-disjoint `u -> v` paths by exactly
//! one, so "can we find and reverse a path `t` times in a row" decides
//! `λ(u, v) >= t` with `t` searches.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Orientation;
use crate::meter::DelayMeter;

/// An arc of an orientation: edge `edge` traversed from `tail` to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub edge: usize,
    pub tail: usize,
    pub head: usize,
}

/// A nonempty arc-simple directed path, stored head-to-tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPath {
    arcs: Vec<Arc>,
}

impl DirectedPath {
    /// Builds the path following `edges` in their current directions in `d`.
    /// Fails unless they form a nonempty arc-simple directed path.
    pub fn from_edges(d: &Orientation<'_>, edges: &[usize]) -> Result<Self> {
        let m = d.graph().edge_count();
        if edges.is_empty() || edges.iter().any(|&e| e >= m) {
            return Err(Error::NotAPath);
        }
        let path = Self {
            arcs: edges
                .iter()
                .map(|&e| Arc {
                    edge: e,
                    tail: d.tail(e),
                    head: d.head(e),
                })
                .collect(),
        };
        path.validate(d)?;
        Ok(path)
    }

    fn validate(&self, d: &Orientation<'_>) -> Result<()> {
        let m = d.graph().edge_count();
        let mut used = vec![false; m];
        for (i, a) in self.arcs.iter().enumerate() {
            if a.edge >= m || used[a.edge] || d.tail(a.edge) != a.tail || d.head(a.edge) != a.head {
                return Err(Error::NotAPath);
            }
            if i > 0 && self.arcs[i - 1].head != a.tail {
                return Err(Error::NotAPath);
            }
            used[a.edge] = true;
        }
        Ok(())
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.arcs[0].tail
    }

    pub fn target(&self) -> usize {
        self.arcs[self.arcs.len() - 1].head
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().map(|a| a.edge)
    }
}

/// Reusable BFS buffers.
pub(crate) struct PathSearch {
    parent: Vec<usize>,
    mark: Vec<u32>,
    epoch: u32,
    queue: VecDeque<usize>,
}

impl PathSearch {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: vec![usize::MAX; n],
            mark: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    /// Shortest directed path from `source` to the first discovered vertex
    /// satisfying `is_target`, skipping edges marked in `forbidden`. Out-arcs
    /// are explored in increasing edge index, so ties go to lower indices.
    pub(crate) fn search_to(
        &mut self,
        d: &Orientation<'_>,
        source: usize,
        forbidden: Option<&[bool]>,
        is_target: impl Fn(usize) -> bool,
        meter: &mut DelayMeter,
    ) -> Option<DirectedPath> {
        meter.path_search();
        let g = d.graph();
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push_back(source);
        self.mark[source] = epoch;

        let mut touched = 0;
        let mut found = None;
        'bfs: while let Some(x) = self.queue.pop_front() {
            for &e in g.incident(x) {
                touched += 1;
                if d.tail(e) != x || forbidden.is_some_and(|f| f[e]) {
                    continue;
                }
                let y = d.head(e);
                if self.mark[y] == epoch {
                    continue;
                }
                self.mark[y] = epoch;
                self.parent[y] = e;
                if is_target(y) {
                    found = Some(y);
                    break 'bfs;
                }
                self.queue.push_back(y);
            }
        }
        meter.touch(touched);

        let target = found?;
        let mut arcs = Vec::new();
        let mut cur = target;
        while cur != source {
            let e = self.parent[cur];
            let tail = d.tail(e);
            arcs.push(Arc {
                edge: e,
                tail,
                head: cur,
            });
            cur = tail;
        }
        arcs.reverse();
        Some(DirectedPath { arcs })
    }

    pub(crate) fn search(
        &mut self,
        d: &Orientation<'_>,
        source: usize,
        target: usize,
        forbidden: Option<&[bool]>,
        meter: &mut DelayMeter,
    ) -> Option<DirectedPath> {
        self.search_to(d, source, forbidden, |y| y == target, meter)
    }

    /// `λ(u, v) >= threshold`, decided on a scratch copy of `d`.
    pub(crate) fn lambda_at_least(
        &mut self,
        d: &Orientation<'_>,
        u: usize,
        v: usize,
        threshold: usize,
        meter: &mut DelayMeter,
    ) -> bool {
        if threshold == 0 {
            return true;
        }
        let mut scratch = d.clone();
        meter.touch(d.graph().edge_count());
        for _ in 0..threshold {
            match self.search(&scratch, u, v, None, meter) {
                Some(p) => {
                    meter.touch(p.len());
                    scratch.reverse_edges(p.edges());
                }
                None => return false,
            }
        }
        true
    }

    pub(crate) fn is_flippable(
        &mut self,
        d: &Orientation<'_>,
        u: usize,
        v: usize,
        k: usize,
        meter: &mut DelayMeter,
    ) -> bool {
        meter.flip_test();
        self.lambda_at_least(d, u, v, k + 1, meter)
    }

    pub(crate) fn is_k_connected(&mut self, d: &Orientation<'_>, k: usize, meter: &mut DelayMeter) -> bool {
        (1..d.graph().vertex_count())
            .all(|v| self.lambda_at_least(d, 0, v, k, meter) && self.lambda_at_least(d, v, 0, k, meter))
    }
}

fn check_pair(d: &Orientation<'_>, u: usize, v: usize) -> Result<()> {
    let n = d.graph().vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

/// Shortest directed `source -> target` path in `d` avoiding the edges marked
/// in `forbidden` (indexed by edge), or `None` when there is none.
pub fn find_directed_path(
    d: &Orientation<'_>,
    source: usize,
    target: usize,
    forbidden: Option<&[bool]>,
) -> Result<Option<DirectedPath>> {
    check_pair(d, source, target)?;
    if let Some(f) = forbidden {
        if f.len() != d.graph().edge_count() {
            return Err(Error::LengthMismatch {
                what: "forbidden edge set",
                expected: d.graph().edge_count(),
                found: f.len(),
            });
        }
    }
    let mut search = PathSearch::new(d.graph().vertex_count());
    Ok(search.search(d, source, target, forbidden, &mut DelayMeter::new()))
}

/// The orientation with exactly the edges of `path` reversed.
///
/// Fails unless `path` is an arc-simple directed path of `d`.
pub fn reverse_path<'g>(d: &Orientation<'g>, path: &DirectedPath) -> Result<Orientation<'g>> {
    path.validate(d)?;
    Ok(d.reversed(path.edges()))
}

/// Whether `d` has at least `threshold` arc-disjoint `u -> v` paths. `d` is
/// not modified.
pub fn lambda_at_least(d: &Orientation<'_>, u: usize, v: usize, threshold: usize) -> Result<bool> {
    check_pair(d, u, v)?;
    let mut search = PathSearch::new(d.graph().vertex_count());
    Ok(search.lambda_at_least(d, u, v, threshold, &mut DelayMeter::new()))
}

/// The exact number of arc-disjoint `u -> v` paths, found by reversing
/// shortest paths until none is left.
pub fn local_arc_connectivity(d: &Orientation<'_>, u: usize, v: usize) -> Result<usize> {
    check_pair(d, u, v)?;
    let mut search = PathSearch::new(d.graph().vertex_count());
    let mut meter = DelayMeter::new();
    let mut scratch = d.clone();
    let mut count = 0;
    while let Some(p) = search.search(&scratch, u, v, None, &mut meter) {
        scratch.reverse_edges(p.edges());
        count += 1;
    }
    Ok(count)
}

/// `(u, v)` is flippable in a k-connected `d` when `λ(u, v) > k`: then every
/// directed `u -> v` path can be reversed without losing k-connectivity.
/// On orientations that are not k-connected this is still the plain
/// `λ(u, v) >= k + 1` test.
pub fn is_flippable_pair(d: &Orientation<'_>, u: usize, v: usize, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    lambda_at_least(d, u, v, k + 1)
}
