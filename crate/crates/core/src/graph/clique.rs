//! Exact maximum clique by colour-ordered branch and bound.
//!
//! Top-level branches follow the degeneracy order, each restricted to the
//! later neighbours of its root. Inside a branch the candidates are greedily
//! coloured and expanded from the highest colour down, stopping as soon as
//! `|R|` plus the colour number cannot beat the incumbent. The clique number is found with the top-level branches spread
//! over threads; the witness is then recovered by a sequential search for the
//! first clique of that size, so it does not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::{BitSet, Graph};

/// A maximum clique: its size and a sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && g.has_edge(a, b)))
}

/// Degeneracy ordering: repeatedly remove a vertex of minimum remaining
/// degree, lowest index first.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = BitSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive.iter().min_by_key(|&v| (deg[v], v)).expect("vertices remain");
        alive.remove(v);
        for u in g.neighbors(v).intersect(&alive).iter() {
            deg[u] -= 1;
        }
        order.push(v);
    }
    order
}

/// Greedy sequential colouring of `p` in index order. Returns the vertices
/// grouped by colour class together with each one's colour number (1-based).
fn colour_order(g: &Graph, p: &BitSet) -> Vec<(usize, usize)> {
    let mut uncoloured = p.clone();
    let mut out = Vec::with_capacity(p.len());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            uncoloured.remove(v);
            avail = avail.difference(g.neighbors(v));
            out.push((v, colour));
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: &'a AtomicUsize,
    // when set, stop at the first clique of exactly this size
    target: Option<usize>,
    found: Option<Vec<usize>>,
}

impl Search<'_> {
    fn needed(&self) -> usize {
        match self.target {
            Some(t) => t,
            None => self.best.load(Ordering::Relaxed) + 1,
        }
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet) {
        if self.target == Some(r.len()) {
            self.found = Some(r.clone());
            return;
        }
        if p.is_empty() {
            if self.target.is_none() {
                self.best.fetch_max(r.len(), Ordering::Relaxed);
            }
            return;
        }
        let coloured = colour_order(self.g, &p);
        for &(v, colour) in coloured.iter().rev() {
            if r.len() + colour < self.needed() {
                return;
            }
            r.push(v);
            self.expand(r, p.intersect(self.g.neighbors(v)));
            r.pop();
            if self.found.is_some() {
                return;
            }
            p.remove(v);
        }
    }
}

fn later_neighbours(g: &Graph, order: &[usize], i: usize) -> BitSet {
    let mut later = BitSet::new(g.order());
    for &u in &order[i + 1..] {
        if g.has_edge(order[i], u) {
            later.insert(u);
        }
    }
    later
}

/// Clique number, with the top-level branches run in parallel.
pub fn clique_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let order = degeneracy_order(g);
    let best = AtomicUsize::new(1);
    (0..order.len()).into_par_iter().for_each(|i| {
        let p = later_neighbours(g, &order, i);
        let mut s = Search { g, best: &best, target: None, found: None };
        s.expand(&mut vec![order[i]], p);
    });
    best.load(Ordering::Relaxed)
}

/// First clique of size `size` in the deterministic search order.
pub fn find_clique_of_size(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let order = degeneracy_order(g);
    let best = AtomicUsize::new(0);
    for i in 0..order.len() {
        let p = later_neighbours(g, &order, i);
        let mut s = Search { g, best: &best, target: Some(size), found: None };
        s.expand(&mut vec![order[i]], p);
        if let Some(mut c) = s.found {
            c.sort_unstable();
            return Some(c);
        }
    }
    None
}

/// First clique of size `size` that contains `r` and otherwise lies in `p`,
/// assuming `p` is contained in the common neighbourhood of `r`.
pub fn extend_clique(g: &Graph, r: &[usize], p: BitSet, size: usize) -> Option<Vec<usize>> {
    let best = AtomicUsize::new(0);
    let mut s = Search { g, best: &best, target: Some(size), found: None };
    s.expand(&mut r.to_vec(), p);
    s.found.map(|mut c| {
        c.sort_unstable();
        c
    })
}

/// Maximum clique with a verified witness.
pub fn max_clique(g: &Graph) -> Clique {
    let size = clique_number(g);
    let vertices = find_clique_of_size(g, size).expect("a clique of the computed size exists");
    assert!(is_clique(g, &vertices) && vertices.len() == size, "witness failed verification");
    Clique { size, vertices }
}

/// A permutation group acting on the vertices of a graph by automorphisms,
/// given as an explicit list of elements.
pub trait VertexGroup: Sync {
    /// Number of listed elements.
    fn len(&self) -> usize;
    /// Image of vertex `v` under element `e`.
    fn image(&self, e: usize, v: usize) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Elements stored as vertex permutations.
#[derive(Clone, Debug)]
pub struct PermutationList(pub Vec<Vec<usize>>);

impl VertexGroup for PermutationList {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn image(&self, e: usize, v: usize) -> usize {
        self.0[e][v]
    }
}

fn orbit_of<G: VertexGroup>(group: &G, elems: &[usize], v: usize) -> Vec<usize> {
    let mut o: Vec<usize> = elems.iter().map(|&e| group.image(e, v)).collect();
    o.sort_unstable();
    o.dedup();
    o
}

/// Clique number using orbital branching on the first two levels.
///
/// Roots are taken one per orbit of `group`; after a root's branch the whole
/// orbit is discarded. Within a root the second vertex is likewise taken one
/// per orbit of the root's stabiliser. The remaining search is the plain
/// colour-bounded one, with branches run in parallel.
pub fn clique_number_with_symmetry<G: VertexGroup>(g: &Graph, group: &G) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let all: Vec<usize> = (0..group.len()).collect();
    let mut removed = BitSet::new(n);
    let mut branches: Vec<([usize; 2], BitSet)> = Vec::new();
    for r in 0..n {
        if removed.contains(r) {
            continue;
        }
        let stab: Vec<usize> = all.iter().copied().filter(|&e| group.image(e, r) == r).collect();
        let mut p1 = g.neighbors(r).difference(&removed);
        let mut done = BitSet::new(n);
        for s in p1.iter().collect::<Vec<_>>() {
            if done.contains(s) {
                continue;
            }
            branches.push(([r, s], p1.intersect(g.neighbors(s))));
            for x in orbit_of(group, &stab, s) {
                done.insert(x);
                p1.remove(x);
            }
        }
        for x in orbit_of(group, &all, r) {
            removed.insert(x);
        }
    }
    let best = AtomicUsize::new(if branches.is_empty() { 1 } else { 2 });
    branches.par_iter().for_each(|(r, p)| {
        let mut s = Search { g, best: &best, target: None, found: None };
        s.expand(&mut r.to_vec(), p.clone());
    });
    best.load(Ordering::Relaxed)
}

/// Maximum clique with a verified witness, pruning by symmetry.
pub fn max_clique_with_symmetry<G: VertexGroup>(g: &Graph, group: &G) -> Clique {
    let size = clique_number_with_symmetry(g, group);
    let vertices = find_clique_of_size(g, size).expect("a clique of the computed size exists");
    assert!(is_clique(g, &vertices) && vertices.len() == size, "witness failed verification");
    Clique { size, vertices }
}

/// Exhaustive clique number for small graphs, used as an oracle.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24, "brute force is for small graphs");
    (0u32..1 << n)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            is_clique(g, &vs)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_families() {
        assert_eq!(max_clique(&families::complete(5)).size, 5);
        assert_eq!(max_clique(&families::petersen()).size, 2);
        assert_eq!(max_clique(&families::rook(4)).size, 4);
        assert_eq!(max_clique(&Graph::empty(3)), Clique { size: 1, vertices: vec![0] });
        assert_eq!(max_clique(&Graph::empty(0)).size, 0);
    }

    #[test]
    fn agrees_with_brute_force() {
        // exhaustive over all graphs on 6 vertices
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(6, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
            assert_eq!(max_clique(&g).size, brute_clique_number(&g));
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let dens: f64 = rng.gen();
            let g = Graph::from_fn(n, |_, _| rng.gen::<f64>() < dens);
            let c = max_clique(&g);
            assert_eq!(c.size, brute_clique_number(&g));
            assert!(is_clique(&g, &c.vertices));
        }
    }
    fn dihedral(n: usize) -> PermutationList {
        let mut out = Vec::new();
        for r in 0..n {
            out.push((0..n).map(|i| (i + r) % n).collect());
            out.push((0..n).map(|i| (n + r - i) % n).collect());
        }
        PermutationList(out)
    }

    #[test]
    fn symmetric_search_matches_plain() {
        let identity = PermutationList(vec![(0..9).collect()]);
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let g = Graph::from_fn(9, |_, _| rng.gen_bool(0.5));
            assert_eq!(clique_number_with_symmetry(&g, &identity), brute_clique_number(&g));
        }
        for n in 3..12 {
            let c = families::cycle(n);
            assert_eq!(max_clique_with_symmetry(&c, &dihedral(n)).size, if n == 3 { 3 } else { 2 });
            // circulant with distances 1 and 2
            let g = Graph::from_fn(n, |i, j| matches!((j + n - i) % n, 1 | 2) || matches!((i + n - j) % n, 1 | 2));
            assert_eq!(max_clique_with_symmetry(&g, &dihedral(n)).size, brute_clique_number(&g));
        }
    }
}
