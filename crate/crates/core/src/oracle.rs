//! Brute-force reference implementations.
//!
//! Everything here works by exhaustive enumeration of orientations or
//! vertex subsets and shares no code with the path-based routines, so the
//! two can be checked against each other. Inputs are capped with explicit
//! errors.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Multigraph, Orientation};

pub const MAX_ORIENTED_EDGES: usize = 25;
pub const MAX_CUT_VERTICES: usize = 20;
pub const MAX_LAMBDA_VERTICES: usize = 12;
pub const MAX_UNFIXED_EDGES: usize = 20;

fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::TooLarge { what, value, limit });
    }
    Ok(())
}

/// All `2^m` orientations, in lexicographic order of their `+`/`-` strings
/// (edge 0 varies slowest).
pub fn all_orientations(g: &Multigraph) -> Result<impl Iterator<Item = Orientation<'_>>> {
    let m = g.edge_count();
    guard("edge count", m, MAX_ORIENTED_EDGES)?;
    Ok((0u64..1 << m).map(move |bits| {
        let forward = (0..m).map(|i| bits >> (m - 1 - i) & 1 == 0).collect();
        Orientation::from_directions(g, forward).expect("m directions")
    }))
}

/// Arcs leaving the vertex set encoded by the bit mask `set`.
fn mask_outdegree(d: &Orientation<'_>, set: u64) -> usize {
    (0..d.graph().edge_count())
        .filter(|&e| set >> d.tail(e) & 1 == 1 && set >> d.head(e) & 1 == 0)
        .count()
}

/// k-connectivity by checking every nonempty proper vertex subset.
pub fn oracle_is_k_connected(d: &Orientation<'_>, k: usize) -> Result<bool> {
    let n = d.graph().vertex_count();
    guard("vertex count", n, MAX_CUT_VERTICES)?;
    if n < 2 {
        return Ok(true);
    }
    let full = (1u64 << n) - 1;
    Ok((1..full).all(|set| mask_outdegree(d, set) >= k))
}

/// Minimum number of undirected edges crossing a nonempty proper subset.
pub fn oracle_edge_connectivity(g: &Multigraph) -> Result<usize> {
    let n = g.vertex_count();
    guard("vertex count", n, MAX_CUT_VERTICES)?;
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, n });
    }
    let full = (1u64 << n) - 1;
    Ok((1..full)
        .map(|set| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| (set >> u & 1) != (set >> v & 1))
                .count()
        })
        .min()
        .expect("n >= 2 gives at least one cut"))
}

/// `λ(u, v)` as the minimum outdegree over subsets containing `u` but not
/// `v`.
pub fn oracle_lambda(d: &Orientation<'_>, u: usize, v: usize) -> Result<usize> {
    let n = d.graph().vertex_count();
    guard("vertex count", n, MAX_LAMBDA_VERTICES)?;
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok((0u64..1 << n)
        .filter(|set| set >> u & 1 == 1 && set >> v & 1 == 0)
        .map(|set| mask_outdegree(d, set))
        .min()
        .expect("{u} itself separates u from v"))
}

/// Serializations of every α-orientation.
pub fn oracle_alpha(g: &Multigraph, alpha: &DegreeSequence) -> Result<BTreeSet<String>> {
    Ok(all_orientations(g)?
        .filter(|d| &d.outdegrees() == alpha)
        .map(|d| d.to_string())
        .collect())
}

/// Serializations of every k-connected orientation.
pub fn oracle_k_connected(g: &Multigraph, k: usize) -> Result<BTreeSet<String>> {
    guard("vertex count", g.vertex_count(), MAX_CUT_VERTICES)?;
    let mut out = BTreeSet::new();
    for d in all_orientations(g)? {
        if oracle_is_k_connected(&d, k)? {
            out.insert(d.to_string());
        }
    }
    Ok(out)
}

/// Distinct outdegree sequences of the k-connected orientations.
pub fn oracle_sequences(g: &Multigraph, k: usize) -> Result<BTreeSet<DegreeSequence>> {
    guard("vertex count", g.vertex_count(), MAX_CUT_VERTICES)?;
    let mut out = BTreeSet::new();
    for d in all_orientations(g)? {
        if oracle_is_k_connected(&d, k)? {
            out.insert(d.outdegrees());
        }
    }
    Ok(out)
}

/// Whether the partial orientation `fixed` (`Some(true)` = first -> second
/// endpoint, `None` = undecided) extends to a k-connected orientation.
pub fn oracle_mixed_extension(g: &Multigraph, fixed: &[Option<bool>], k: usize) -> Result<bool> {
    if fixed.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            what: "partial orientation",
            expected: g.edge_count(),
            found: fixed.len(),
        });
    }
    guard("vertex count", g.vertex_count(), MAX_CUT_VERTICES)?;
    let open: Vec<usize> = (0..fixed.len()).filter(|&e| fixed[e].is_none()).collect();
    guard("unfixed edge count", open.len(), MAX_UNFIXED_EDGES)?;
    let base: Vec<bool> = fixed.iter().map(|f| f.unwrap_or(true)).collect();
    let mut d = Orientation::from_directions(g, base)?;
    for bits in 0u64..1 << open.len() {
        for (i, &e) in open.iter().enumerate() {
            if d.is_forward(e) != (bits >> i & 1 == 0) {
                d.flip(e);
            }
        }
        if oracle_is_k_connected(&d, k)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Edge-by-edge backtracking that keeps a branch only when the brute-force
/// extension test says it can still be completed to a k-connected
/// orientation. Used to cross-check [`crate::enumerate_k_connected`].
pub fn enumerate_via_extension_oracle<'g, F>(g: &'g Multigraph, k: usize, mut sink: F) -> Result<u64>
where
    F: FnMut(&Orientation<'g>),
{
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut fixed = vec![None; g.edge_count()];
    if !oracle_mixed_extension(g, &fixed, k)? {
        return Ok(0);
    }
    fn go<'g>(
        g: &'g Multigraph,
        k: usize,
        fixed: &mut Vec<Option<bool>>,
        e: usize,
        sink: &mut dyn FnMut(&Orientation<'g>),
    ) -> Result<u64> {
        if e == fixed.len() {
            let d = Orientation::from_directions(g, fixed.iter().map(|f| f.expect("all fixed")).collect())?;
            sink(&d);
            return Ok(1);
        }
        let mut count = 0;
        for dir in [true, false] {
            fixed[e] = Some(dir);
            if oracle_mixed_extension(g, fixed, k)? {
                count += go(g, k, fixed, e + 1, sink)?;
            }
        }
        fixed[e] = None;
        Ok(count)
    }
    go(g, k, &mut fixed, 0, &mut sink)
}
