//! Orientations with a prescribed outdegree sequence (α-orientations).
//!
//! Two orientations with equal outdegrees differ by a set of arc-disjoint
//! directed cycles. The enumerator walks the edges in index order and, for
//! each edge `a = (u, v)`, first keeps `a` as it is and then tries to flip it
//! by closing a directed `v -> u` path through unfrozen edges into a cycle.
//! Frozen edges are never touched again below the branch that froze them,
//! so each α-orientation is reached at exactly one leaf.

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Multigraph, Orientation};
use crate::meter::DelayMeter;
use crate::paths::{Arc, PathSearch};

fn check_length(g: &Multigraph, alpha: &DegreeSequence) -> Result<()> {
    if alpha.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            what: "outdegree sequence",
            expected: g.vertex_count(),
            found: alpha.len(),
        });
    }
    Ok(())
}

/// Finds one orientation with `outdegree(v) == alpha[v]` for every `v`.
///
/// Starts from the all-forward orientation and repeatedly reverses a
/// shortest path from a vertex with surplus outdegree to one with a deficit.
/// When some surplus vertex reaches no deficit vertex, the vertices it
/// reaches span more edges than their α-values allow and no α-orientation
/// exists.
pub fn find_alpha_orientation<'g>(
    g: &'g Multigraph,
    alpha: &DegreeSequence,
) -> Result<Option<Orientation<'g>>> {
    check_length(g, alpha)?;
    Ok(find_metered(g, alpha, &mut DelayMeter::new()))
}

fn find_metered<'g>(
    g: &'g Multigraph,
    alpha: &DegreeSequence,
    meter: &mut DelayMeter,
) -> Option<Orientation<'g>> {
    if alpha.total() != g.edge_count() {
        return None;
    }
    let mut d = Orientation::all_forward(g);
    let mut excess: Vec<i64> = d
        .outdegrees()
        .as_slice()
        .iter()
        .zip(alpha.as_slice())
        .map(|(&have, &want)| have as i64 - want as i64)
        .collect();
    meter.touch(g.edge_count());
    let mut search = PathSearch::new(g.vertex_count());
    for v in 0..g.vertex_count() {
        while excess[v] > 0 {
            let path = search.search_to(&d, v, None, |w| excess[w] < 0, meter)?;
            meter.touch(path.len());
            excess[v] -= 1;
            excess[path.target()] += 1;
            d.reverse_edges(path.edges());
        }
    }
    Some(d)
}

/// Backtracking over the α-class of an orientation.
pub(crate) struct ClassExpander {
    fixed: Vec<bool>,
    search: PathSearch,
}

impl ClassExpander {
    pub(crate) fn new(g: &Multigraph) -> Self {
        Self {
            fixed: vec![false; g.edge_count()],
            search: PathSearch::new(g.vertex_count()),
        }
    }

    /// Emits every orientation with the outdegrees of `d`, starting with `d`
    /// itself. `d` is restored before returning.
    pub(crate) fn expand<'g>(
        &mut self,
        d: &mut Orientation<'g>,
        meter: &mut DelayMeter,
        sink: &mut dyn FnMut(&Orientation<'g>),
    ) -> u64 {
        self.fixed.fill(false);
        self.branch(d, 0, meter, sink)
    }

    fn branch<'g>(
        &mut self,
        d: &mut Orientation<'g>,
        next: usize,
        meter: &mut DelayMeter,
        sink: &mut dyn FnMut(&Orientation<'g>),
    ) -> u64 {
        if next == self.fixed.len() {
            meter.emit();
            sink(d);
            return 1;
        }
        let a = next;
        let (u, v) = (d.tail(a), d.head(a));
        self.fixed[a] = true;
        let mut count = self.branch(d, next + 1, meter, sink);
        // `a` is frozen during the search as well; a v -> u path never
        // needs it.
        if let Some(path) = self.search.search(d, v, u, Some(&self.fixed), meter) {
            meter.touch(path.len() + 1);
            d.reverse_edges(path.edges());
            d.flip(a);
            count += self.branch(d, next + 1, meter, sink);
            meter.touch(path.len() + 1);
            d.reverse_edges(path.edges());
            d.flip(a);
        }
        self.fixed[a] = false;
        count
    }
}

/// Streams every α-orientation of `g` to `sink` exactly once and returns
/// how many there were.
///
/// The order is fixed: edges are decided in index order, and at each edge
/// the branch keeping its current direction comes first.
pub fn enumerate_alpha<'g, F>(g: &'g Multigraph, alpha: &DegreeSequence, sink: F) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    enumerate_alpha_metered(g, alpha, &mut DelayMeter::new(), sink)
}

/// [`enumerate_alpha`] with operation counting. The search for the first
/// α-orientation is counted in the first gap.
pub fn enumerate_alpha_metered<'g, F>(
    g: &'g Multigraph,
    alpha: &DegreeSequence,
    meter: &mut DelayMeter,
    mut sink: F,
) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    check_length(g, alpha)?;
    let count = match find_metered(g, alpha, meter) {
        Some(mut d) => ClassExpander::new(g).expand(&mut d, meter, &mut sink),
        None => 0,
    };
    meter.finish();
    Ok(count)
}

/// Streams every orientation with the same outdegrees as `seed`, starting
/// with `seed` itself. Does not close the meter's trailing gap.
pub fn enumerate_class_of<'g, F>(seed: &Orientation<'g>, meter: &mut DelayMeter, mut sink: F) -> u64
where
    F: FnMut(&Orientation<'g>),
{
    let mut d = seed.clone();
    ClassExpander::new(seed.graph()).expand(&mut d, meter, &mut sink)
}

/// A closed directed walk without repeated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedCycle {
    arcs: Vec<Arc>,
}

impl DirectedCycle {
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
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

/// Splits the arcs where `d` and `d2` disagree into arc-disjoint directed
/// cycles of `d`. Reversing all of them turns `d` into `d2`.
///
/// Returns `None` when the outdegrees differ, since then no such cycles
/// exist.
pub fn same_alpha_cycle_decomposition(
    d: &Orientation<'_>,
    d2: &Orientation<'_>,
) -> Result<Option<Vec<DirectedCycle>>> {
    let g = d.graph();
    if !std::ptr::eq(g, d2.graph()) && g != d2.graph() {
        return Err(Error::GraphMismatch);
    }
    if d.outdegrees() != d2.outdegrees() {
        return Ok(None);
    }
    let n = g.vertex_count();
    // Out-arcs of d restricted to differing edges, popped from the back so
    // stored in decreasing index order.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in (0..g.edge_count()).rev() {
        if d.is_forward(e) != d2.is_forward(e) {
            out[d.tail(e)].push(e);
        }
    }

    let mut cycles = Vec::new();
    let mut on_walk = vec![usize::MAX; n];
    for start in 0..n {
        while !out[start].is_empty() {
            // Arcs of the open walk; on_walk[x] is the walk position where
            // x was entered.
            let mut walk: Vec<Arc> = Vec::new();
            let mut cur = start;
            on_walk[start] = 0;
            loop {
                let e = out[cur]
                    .pop()
                    .expect("differing arcs have balanced in- and outdegree");
                let head = d.head(e);
                walk.push(Arc {
                    edge: e,
                    tail: cur,
                    head,
                });
                if on_walk[head] != usize::MAX {
                    let cut = on_walk[head];
                    let arcs = walk.split_off(cut);
                    for a in &arcs {
                        on_walk[a.tail] = usize::MAX;
                    }
                    cycles.push(DirectedCycle { arcs });
                    if walk.is_empty() {
                        break;
                    }
                    on_walk[head] = cut;
                    cur = head;
                } else {
                    on_walk[head] = walk.len();
                    cur = head;
                }
            }
        }
    }
    Ok(Some(cycles))
}
