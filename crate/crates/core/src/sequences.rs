//! Outdegree sequences of k-arc-connected orientations.
//!
//! Starting from one k-connected orientation, the vertices are frozen one at
//! a time in index order. Before freezing `v`, every achievable lower value
//! of its outdegree is reached by reversing paths out of `v` towards some
//! unfrozen `u` with `λ(v, u) > k`, and every higher value by reversing
//! paths from such a `u` into `v`. Reversing a path only moves outdegree
//! between its endpoints, so frozen vertices keep their values, and the
//! λ condition keeps every intermediate orientation k-connected.

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Multigraph, Orientation};
use crate::meter::DelayMeter;
use crate::paths::PathSearch;

/// What happens once every vertex is frozen.
pub(crate) trait Leaf<'g> {
    /// Handles the current orientation, restoring it before returning, and
    /// reports how many solutions were emitted.
    fn visit(&mut self, d: &mut Orientation<'g>, meter: &mut DelayMeter) -> u64;
}

/// Emits the outdegree sequence together with its witness.
struct EmitSequence<F>(F);

impl<'g, F> Leaf<'g> for EmitSequence<F>
where
    F: FnMut(&DegreeSequence, &Orientation<'g>),
{
    fn visit(&mut self, d: &mut Orientation<'g>, meter: &mut DelayMeter) -> u64 {
        meter.touch(d.graph().edge_count());
        let seq = d.outdegrees();
        meter.emit();
        (self.0)(&seq, d);
        1
    }
}

/// The recursion over vertices. `d` is mutated in place and restored on the
/// way back up.
pub(crate) struct SequenceWalk<'m, 'g, L> {
    d: Orientation<'g>,
    k: usize,
    search: PathSearch,
    meter: &'m mut DelayMeter,
    leaf: L,
}

impl<'m, 'g, L: Leaf<'g>> SequenceWalk<'m, 'g, L> {
    pub(crate) fn new(seed: Orientation<'g>, k: usize, meter: &'m mut DelayMeter, leaf: L) -> Self {
        let n = seed.graph().vertex_count();
        Self {
            d: seed,
            k,
            search: PathSearch::new(n),
            meter,
            leaf,
        }
    }

    pub(crate) fn run(&mut self) -> u64 {
        self.enumerate(0)
    }

    /// Vertices `0..v` are frozen; `v` is the next one.
    fn enumerate(&mut self, v: usize) -> u64 {
        if v == self.d.graph().vertex_count() {
            return self.leaf.visit(&mut self.d, self.meter);
        }
        self.reverse_minus(v, 0) + self.reverse_plus(v, 0) + self.enumerate(v + 1)
    }

    /// Sequences agreeing on `0..v` with a smaller outdegree at `v`.
    fn reverse_minus(&mut self, v: usize, depth: usize) -> u64 {
        let Some(u) = self.partner(v, true) else {
            return 0;
        };
        self.with_path_reversed(v, u, v, depth, |walk| {
            walk.reverse_minus(v, depth + 1) + walk.enumerate(v + 1)
        })
    }

    /// Sequences agreeing on `0..v` with a larger outdegree at `v`.
    fn reverse_plus(&mut self, v: usize, depth: usize) -> u64 {
        let Some(u) = self.partner(v, false) else {
            return 0;
        };
        self.with_path_reversed(u, v, v, depth, |walk| {
            walk.reverse_plus(v, depth + 1) + walk.enumerate(v + 1)
        })
    }

    /// Smallest unfrozen `u != v` such that `(v, u)` (when `outward`) or
    /// `(u, v)` is flippable.
    fn partner(&mut self, v: usize, outward: bool) -> Option<usize> {
        let n = self.d.graph().vertex_count();
        (v + 1..n).find(|&u| {
            let (s, t) = if outward { (v, u) } else { (u, v) };
            self.search.is_flippable(&self.d, s, t, self.k, self.meter)
        })
    }

    fn with_path_reversed(
        &mut self,
        from: usize,
        to: usize,
        pivot: usize,
        depth: usize,
        body: impl FnOnce(&mut Self) -> u64,
    ) -> u64 {
        let path = self
            .search
            .search(&self.d, from, to, None, self.meter)
            .expect("a flippable pair is joined by a directed path");
        self.meter.touch(path.len());
        self.d.reverse_edges(path.edges());
        debug_assert!(self.d.is_k_connected(self.k).unwrap_or(false));
        // Each nesting level moves the pivot's outdegree one step further.
        debug_assert!(depth < self.d.graph().degree(pivot));
        let count = body(self);
        self.meter.touch(path.len());
        self.d.reverse_edges(path.edges());
        count
    }
}

pub(crate) fn check_seed(g: &Multigraph, seed: &Orientation<'_>, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !std::ptr::eq(g, seed.graph()) && g != seed.graph() {
        return Err(Error::GraphMismatch);
    }
    if !seed.is_k_connected(k)? {
        return Err(Error::NotKConnected {
            what: "seed orientation",
            k,
        });
    }
    Ok(())
}

/// Streams each outdegree sequence attained by a k-connected orientation of
/// `g` exactly once, with one witnessing orientation, starting from the
/// k-connected `seed`. Returns the number of sequences.
pub fn enumerate_outdegree_sequences<'g, F>(
    g: &'g Multigraph,
    k: usize,
    seed: &Orientation<'g>,
    sink: F,
) -> Result<u64>
where
    F: FnMut(&DegreeSequence, &Orientation<'g>),
{
    enumerate_outdegree_sequences_metered(g, k, seed, &mut DelayMeter::new(), sink)
}

/// [`enumerate_outdegree_sequences`] with operation counting.
pub fn enumerate_outdegree_sequences_metered<'g, F>(
    g: &'g Multigraph,
    k: usize,
    seed: &Orientation<'g>,
    meter: &mut DelayMeter,
    sink: F,
) -> Result<u64>
where
    F: FnMut(&DegreeSequence, &Orientation<'g>),
{
    check_seed(g, seed, k)?;
    let count = SequenceWalk::new(seed.clone(), k, meter, EmitSequence(sink)).run();
    meter.finish();
    Ok(count)
}
