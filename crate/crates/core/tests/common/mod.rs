//! Graph families shared by the integration tests.
#![allow(dead_code)]

use std::sync::OnceLock;

use korient::Multigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_N: usize = 5;
pub const MAX_M: usize = 9;
pub const RANDOM_GRAPHS: usize = 200;
pub const RANDOM_SEED: u64 = 0x6b_6f_72_69_65_6e_74;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn graph_from_multiplicities(n: usize, pairs: &[(usize, usize)], mult: &[usize]) -> Multigraph {
    let mut edges = Vec::new();
    for (&(u, v), &c) in pairs.iter().zip(mult) {
        edges.extend(std::iter::repeat_n((u, v), c));
    }
    Multigraph::new(n, edges).unwrap()
}

/// Every connected loopless multigraph with `2 <= n <= MAX_N` vertices and
/// `m <= MAX_M` edges, one representative per isomorphism class.
pub fn exhaustive_family() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 2..=MAX_N {
        let pairs = pairs(n);
        let index = |u: usize, v: usize| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let perms: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
            .collect();
        let mut mult = vec![0usize; pairs.len()];
        loop {
            let total: usize = mult.iter().sum();
            if total >= n - 1 {
                // Canonical iff no relabelling gives a lexicographically
                // larger multiplicity vector.
                let canonical = perms.iter().all(|p| {
                    let mut image = vec![0; mult.len()];
                    for (i, &j) in p.iter().enumerate() {
                        image[j] = mult[i];
                    }
                    image <= mult
                });
                if canonical {
                    let g = graph_from_multiplicities(n, &pairs, &mult);
                    if g.is_connected() {
                        out.push(g);
                    }
                }
            }
            // Next vector with total <= MAX_M, odometer style.
            let mut i = 0;
            loop {
                if i == mult.len() {
                    break;
                }
                mult[i] += 1;
                if mult.iter().sum::<usize>() <= MAX_M {
                    break;
                }
                mult[i] = 0;
                i += 1;
            }
            if i == mult.len() {
                break;
            }
        }
    }
    out
}

/// Random connected multigraphs with `2 <= n <= MAX_N`, `m <= MAX_M`, and
/// shuffled edge order, from a fixed seed.
pub fn random_family() -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut out = Vec::new();
    while out.len() < RANDOM_GRAPHS {
        let n = rng.gen_range(2..=MAX_N);
        let m = rng.gen_range(n - 1..=MAX_M);
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                (u, v)
            })
            .collect();
        let g = Multigraph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// The exhaustive family followed by the random one.
pub fn small_family() -> &'static [Multigraph] {
    static FAMILY: OnceLock<Vec<Multigraph>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let mut all = exhaustive_family();
        all.extend(random_family());
        all
    })
}

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    Multigraph::new(n, pairs(n)).unwrap()
}

/// Every edge of `g` listed `times` times in a row.
pub fn multiplied(g: &Multigraph, times: usize) -> Multigraph {
    let edges = g
        .edges()
        .iter()
        .flat_map(|&e| std::iter::repeat_n(e, times))
        .collect();
    Multigraph::new(g.vertex_count(), edges).unwrap()
}

pub fn doubled_triangle() -> Multigraph {
    Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap()
}

/// Wheel: hub 0 joined to a rim cycle 1..=rim.
pub fn wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
    Multigraph::new(rim + 1, edges).unwrap()
}
