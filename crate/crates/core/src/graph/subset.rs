//! The graph on 8-subsets of `{1..16}` whose cliques model 16-coclique
//! neighbourhoods.

use super::clique::VertexGroup;
use super::Graph;

/// An 8-element subset of `{1,…,16}`; element `e` is bit `e - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetVertex(u16);

impl SubsetVertex {
    pub fn from_mask(mask: u16) -> Option<Self> {
        (mask.count_ones() == 8).then_some(SubsetVertex(mask))
    }

    pub fn from_elements(elems: &[u8]) -> Option<Self> {
        let mut mask = 0u16;
        for &e in elems {
            if !(1..=16).contains(&e) || mask >> (e - 1) & 1 == 1 {
                return None;
            }
            mask |= 1 << (e - 1);
        }
        SubsetVertex::from_mask(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn elements(self) -> Vec<u8> {
        (1..=16).filter(|&e| self.0 >> (e - 1) & 1 == 1).collect()
    }

    pub fn meet(self, other: SubsetVertex) -> u32 {
        (self.0 & other.0).count_ones()
    }

    /// Adjacency of the subset graph: intersections of size 2 or 4.
    pub fn adjacent(self, other: SubsetVertex) -> bool {
        matches!(self.meet(other), 2 | 4)
    }
}

/// The four sets representing a 4-cycle.
pub fn fixed_cycle() -> [SubsetVertex; 4] {
    let s = |e: &[u8]| SubsetVertex::from_elements(e).expect("fixed sets have 8 elements");
    [
        s(&[1, 2, 3, 4, 5, 6, 7, 8]),
        s(&[1, 2, 9, 10, 11, 12, 13, 14]),
        s(&[5, 6, 7, 8, 13, 14, 15, 16]),
        s(&[3, 4, 9, 10, 11, 12, 15, 16]),
    ]
}

/// All 8-subsets adjacent to every member of `m0`, in ascending mask order,
/// with the induced subset-graph adjacency.
pub fn build_subset_graph(m0: &[SubsetVertex]) -> (Vec<SubsetVertex>, Graph) {
    let verts: Vec<SubsetVertex> = (0..=u16::MAX)
        .filter_map(SubsetVertex::from_mask)
        .filter(|a| m0.iter().all(|&b| a.adjacent(b)))
        .collect();
    let g = Graph::from_fn(verts.len(), |i, j| verts[i].adjacent(verts[j]));
    (verts, g)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Permutations of `{1..16}` that map the fixed 4-cycle of sets onto itself,
/// acting on a vertex list of the subset graph.
pub struct CycleSymmetry {
    // point images, 0-based
    perms: Vec<[u8; 16]>,
    masks: Vec<u16>,
    index: Vec<u32>,
}

impl CycleSymmetry {
    /// The full stabiliser, of order `8 · 2^4 · 24^2 = 73728`: a dihedral
    /// motion of the cycle combined with arbitrary permutations inside each
    /// of the six cells `A_i ∩ A_j`.
    pub fn new(verts: &[SubsetVertex]) -> Self {
        let fc = fixed_cycle();
        let mut cells: Vec<((usize, usize), Vec<usize>)> = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                let m = fc[a].mask() & fc[b].mask();
                cells.push(((a, b), (0..16).filter(|&e| m >> e & 1 == 1).collect()));
            }
        }
        let mut perms: Vec<[u8; 16]> = Vec::new();
        for rot in 0..4 {
            for flip in [false, true] {
                let s = |i: usize| if flip { (4 + rot - i) % 4 } else { (i + rot) % 4 };
                let mut partial = vec![[0u8; 16]];
                for ((a, b), from) in &cells {
                    let key = (s(*a).min(s(*b)), s(*a).max(s(*b)));
                    let to = &cells.iter().find(|(k, _)| *k == key).expect("cell exists").1;
                    let inner = permutations(from.len());
                    partial = partial
                        .iter()
                        .flat_map(|p| {
                            inner.iter().map(move |q| {
                                let mut r = *p;
                                for (i, &e) in from.iter().enumerate() {
                                    r[e] = to[q[i]] as u8;
                                }
                                r
                            })
                        })
                        .collect();
                }
                perms.extend(partial);
            }
        }
        let mut index = vec![u32::MAX; 1 << 16];
        for (i, v) in verts.iter().enumerate() {
            index[v.mask() as usize] = i as u32;
        }
        CycleSymmetry { perms, masks: verts.iter().map(|v| v.mask()).collect(), index }
    }
}

impl VertexGroup for CycleSymmetry {
    fn len(&self) -> usize {
        self.perms.len()
    }

    fn image(&self, e: usize, v: usize) -> usize {
        let p = &self.perms[e];
        let m = self.masks[v];
        let img = (0..16).filter(|&x| m >> x & 1 == 1).fold(0u16, |acc, x| acc | 1 << p[x]);
        let i = self.index[img as usize];
        assert!(i != u32::MAX, "group element leaves the vertex set");
        i as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_cycle_is_a_four_cycle() {
        let c = fixed_cycle();
        for i in 0..4 {
            assert_eq!(c[i].meet(c[(i + 1) % 4]), 2);
            assert_eq!(c[i].meet(c[(i + 2) % 4]), 4);
            assert!(!c[i].adjacent(c[i]));
        }
        assert_eq!(c[1].elements(), vec![1, 2, 9, 10, 11, 12, 13, 14]);
        assert!(SubsetVertex::from_elements(&[1, 1, 2, 3, 4, 5, 6, 7]).is_none());
    }

    #[test]
    fn symmetry_acts_by_automorphisms() {
        let (verts, g) = build_subset_graph(&fixed_cycle());
        let sym = CycleSymmetry::new(&verts);
        assert_eq!(sym.len(), 73728);
        for e in (0..sym.len()).step_by(997) {
            let img: Vec<usize> = (0..verts.len()).map(|v| sym.image(e, v)).collect();
            let mut sorted = img.clone();
            sorted.sort_unstable();
            assert!(sorted.iter().enumerate().all(|(i, &x)| i == x));
            for (a, b) in g.edges().into_iter().step_by(101) {
                assert!(g.has_edge(img[a], img[b]));
            }
        }
    }
}
