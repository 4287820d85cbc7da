//! k-arc-connected orientations.
//!
//! The enumeration runs the outdegree-sequence walk and, at each leaf,
//! expands the leaf's α-class instead of emitting the sequence. All members
//! of an α-class are k-connected as soon as one is, so the classes partition
//! the solutions and each class appears as one contiguous block of output.

use crate::alpha::{enumerate_alpha, ClassExpander};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, MixedFlow, Multigraph, Orientation};
use crate::meter::DelayMeter;
use crate::sequences::{check_seed, Leaf, SequenceWalk};

/// Backtracking search for a first k-connected orientation.
struct SeedSearch<'g> {
    graph: &'g Multigraph,
    k: usize,
    forward: Vec<bool>,
    out: Vec<usize>,
    inn: Vec<usize>,
    open: Vec<usize>,
    flow: MixedFlow<'g>,
}

impl<'g> SeedSearch<'g> {
    fn new(graph: &'g Multigraph, k: usize) -> Self {
        let n = graph.vertex_count();
        Self {
            graph,
            k,
            forward: vec![true; graph.edge_count()],
            out: vec![0; n],
            inn: vec![0; n],
            open: (0..n).map(|v| graph.degree(v)).collect(),
            flow: MixedFlow::new(graph),
        }
    }

    fn singleton_ok(&self, v: usize) -> bool {
        self.out[v] + self.open[v] >= self.k && self.inn[v] + self.open[v] >= self.k
    }

    /// Whether the partial orientation could still be k-connected if every
    /// undecided edge were usable in both directions. With no undecided
    /// edges left this is exactly k-connectivity.
    fn optimistic_ok(&mut self) -> bool {
        let (k, n) = (self.k, self.graph.vertex_count());
        (1..n).all(|v| self.flow.max_flow(0, v, k) >= k && self.flow.max_flow(v, 0, k) >= k)
    }

    fn set(&mut self, e: usize, forward: bool) {
        let (u, v) = self.graph.endpoints(e);
        let (t, h) = if forward { (u, v) } else { (v, u) };
        self.forward[e] = forward;
        self.out[t] += 1;
        self.inn[h] += 1;
        self.open[u] -= 1;
        self.open[v] -= 1;
        self.flow.set_edge(e, Some(forward));
    }

    fn unset(&mut self, e: usize) {
        let (u, v) = self.graph.endpoints(e);
        let (t, h) = if self.forward[e] { (u, v) } else { (v, u) };
        self.out[t] -= 1;
        self.inn[h] -= 1;
        self.open[u] += 1;
        self.open[v] += 1;
        self.flow.set_edge(e, None);
    }

    fn extend(&mut self, e: usize) -> bool {
        if !self.optimistic_ok() {
            return false;
        }
        if e == self.graph.edge_count() {
            return true;
        }
        let (u, v) = self.graph.endpoints(e);
        for forward in [true, false] {
            self.set(e, forward);
            if self.singleton_ok(u) && self.singleton_ok(v) && self.extend(e + 1) {
                return true;
            }
            self.unset(e);
        }
        false
    }
}

/// Finds a k-connected orientation of `g`, or `None` when there is none.
///
/// Graphs with edge connectivity below `2k` are rejected immediately (they
/// have no k-connected orientation). Otherwise edges are oriented in index
/// order by backtracking; a branch is cut as soon as a vertex cannot reach
/// `k` out-arcs or `k` in-arcs, or as soon as the orientation could not be
/// k-connected even with all undecided edges usable both ways. The search is
/// exponential in the worst case.
pub fn find_k_connected_orientation(g: &Multigraph, k: usize) -> Result<Option<Orientation<'_>>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if g.vertex_count() < 2 {
        return Ok(Some(Orientation::all_forward(g)));
    }
    if g.edge_connectivity()? < 2 * k {
        return Ok(None);
    }
    let mut search = SeedSearch::new(g, k);
    if !(0..g.vertex_count()).all(|v| search.singleton_ok(v)) {
        return Ok(None);
    }
    Ok(search
        .extend(0)
        .then(|| Orientation::from_directions(g, search.forward).expect("one direction per edge")))
}

/// Leaf action that expands the α-class of the leaf orientation.
struct ExpandClass<F> {
    expander: ClassExpander,
    sink: F,
}

impl<'g, F> Leaf<'g> for ExpandClass<F>
where
    F: FnMut(&Orientation<'g>),
{
    fn visit(&mut self, d: &mut Orientation<'g>, meter: &mut DelayMeter) -> u64 {
        self.expander.expand(d, meter, &mut self.sink)
    }
}

/// Streams every k-connected orientation of `g` exactly once. Returns the
/// number of orientations; infeasible inputs give an empty stream.
pub fn enumerate_k_connected<'g, F>(g: &'g Multigraph, k: usize, sink: F) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    enumerate_k_connected_metered(g, k, &mut DelayMeter::new(), sink)
}

/// [`enumerate_k_connected`] with operation counting. Finding the first
/// k-connected orientation is booked as preprocessing, not as delay.
pub fn enumerate_k_connected_metered<'g, F>(
    g: &'g Multigraph,
    k: usize,
    meter: &mut DelayMeter,
    sink: F,
) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    let seed = find_k_connected_orientation(g, k)?;
    meter.end_preprocessing();
    let count = match seed {
        Some(seed) => run_expansion(seed, k, meter, sink),
        None => 0,
    };
    meter.finish();
    Ok(count)
}

/// Like [`enumerate_k_connected_metered`] but starts from a caller-provided
/// k-connected orientation.
pub fn enumerate_k_connected_from<'g, F>(
    g: &'g Multigraph,
    k: usize,
    seed: &Orientation<'g>,
    meter: &mut DelayMeter,
    sink: F,
) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    check_seed(g, seed, k)?;
    meter.end_preprocessing();
    let count = run_expansion(seed.clone(), k, meter, sink);
    meter.finish();
    Ok(count)
}

fn run_expansion<'g, F>(seed: Orientation<'g>, k: usize, meter: &mut DelayMeter, sink: F) -> u64
where
    F: FnMut(&Orientation<'g>),
{
    let leaf = ExpandClass {
        expander: ClassExpander::new(seed.graph()),
        sink,
    };
    SequenceWalk::new(seed, k, meter, leaf).run()
}

/// Finds a k-connected seed and streams the k-connected outdegree sequences
/// of `g`. Infeasible inputs give an empty stream.
pub fn enumerate_connected_sequences<'g, F>(
    g: &'g Multigraph,
    k: usize,
    meter: &mut DelayMeter,
    sink: F,
) -> Result<u64>
where
    F: FnMut(&DegreeSequence, &Orientation<'g>),
{
    let seed = find_k_connected_orientation(g, k)?;
    meter.end_preprocessing();
    match seed {
        Some(seed) => crate::sequences::enumerate_outdegree_sequences_metered(g, k, &seed, meter, sink),
        None => {
            meter.finish();
            Ok(0)
        }
    }
}

/// The least possible size `(k - 1) n + 2` of the α-class of a k-connected
/// outdegree sequence on `n >= 2` vertices.
pub fn class_size_lower_bound(n: usize, k: usize) -> usize {
    (k.saturating_sub(1)) * n + 2
}

/// Counts the α-orientations of `g` and compares with
/// [`class_size_lower_bound`]. Fails unless `alpha` is attained by a
/// k-connected orientation.
pub fn class_size_lower_bound_check(g: &Multigraph, alpha: &DegreeSequence, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let witness = crate::alpha::find_alpha_orientation(g, alpha)?;
    let connected = match &witness {
        Some(d) => d.is_k_connected(k)?,
        None => false,
    };
    if !connected {
        return Err(Error::NotKConnected {
            what: "outdegree sequence",
            k,
        });
    }
    let size = enumerate_alpha(g, alpha, |_| {})?;
    Ok(size as usize >= class_size_lower_bound(g.vertex_count(), k))
}
