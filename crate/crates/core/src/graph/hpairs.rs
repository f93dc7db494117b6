//! Candidate subgraphs `H1 ∪ H2` (two halves of 10 vertices) and their
//! one-vertex extensions.
//!
//! A candidate satisfies `|N(t) ∩ H2| = 8 + |N(t) ∩ H1|` for `t ∈ H1` and
//! symmetrically for `H2`. Complementing the edges between the halves turns
//! such a graph into a 2-regular graph, ie a disjoint union of cycles whose
//! vertices are coloured by half. Candidates are therefore generated as
//! multisets of 2-coloured cycles up to rotation and reflection, which
//! gives each isomorphism class (with halves preserved) exactly once.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, Certificate};
use super::Graph;
use crate::exact::{EigenSign, Matrix, ModP};
use crate::params::RepDots;
use crate::Rational;

/// Size of each half.
pub const HALF: usize = 10;

/// A candidate on vertices `0..10` (`H1`) and `10..20` (`H2`).
#[derive(Clone, Debug)]
pub struct HPairGraph {
    pub graph: Graph,
    /// Edges inside `H1`.
    pub w1: usize,
    /// Edges inside `H2`.
    pub w2: usize,
    /// Cycle lengths of the inverted graph, non-increasing.
    pub cycle_type: Vec<usize>,
    pub certificate: Certificate,
}

impl HPairGraph {
    pub fn inverted(&self) -> Graph {
        invert_between_halves(&self.graph)
    }

    /// The defining degree relation between the halves.
    pub fn satisfies_degree_relation(&self) -> bool {
        let g = &self.graph;
        (0..2 * HALF).all(|t| {
            let own = if t < HALF { 0..HALF } else { HALF..2 * HALF };
            let other = if t < HALF { HALF..2 * HALF } else { 0..HALF };
            let a = own.filter(|&u| g.has_edge(t, u)).count();
            let b = other.filter(|&u| g.has_edge(t, u)).count();
            b == 8 + a
        })
    }
}

/// Complement the edges between `0..10` and `10..20`.
pub fn invert_between_halves(g: &Graph) -> Graph {
    Graph::from_fn(g.order(), |i, j| {
        let cross = (i < HALF) != (j < HALF);
        g.has_edge(i, j) != cross
    })
}

fn half_colours(n: usize) -> Vec<u32> {
    (0..n).map(|v| (v >= HALF) as u32).collect()
}

/// Partitions of `n` into parts `≥ min_part`, parts non-increasing.
pub fn partitions(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (min..=max.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// A binary colouring of an `l`-cycle, bit `i` = colour of position `i`
/// (1 = `H1`), canonical under the dihedral group.
#[derive(Clone, Copy, Debug)]
struct Bracelet {
    bits: u32,
    ones: usize,
    // cycle edges with both ends in H1, and with both ends in H2
    mono1: usize,
    mono2: usize,
}

fn bracelets(l: usize) -> Vec<Bracelet> {
    let mask = (1u32 << l) - 1;
    let rot = |b: u32| ((b >> 1) | (b << (l - 1))) & mask;
    let rev = |b: u32| (0..l).fold(0u32, |acc, i| acc | ((b >> i & 1) << (l - 1 - i)));
    (0..=mask)
        .filter(|&b| {
            let mut x = b;
            let mut y = rev(b);
            for _ in 0..l {
                if x < b || y < b {
                    return false;
                }
                x = rot(x);
                y = rot(y);
            }
            true
        })
        .map(|b| {
            let bit = |i: usize| b >> (i % l) & 1;
            let mono1 = (0..l).filter(|&i| bit(i) == 1 && bit(i + 1) == 1).count();
            let mono2 = (0..l).filter(|&i| bit(i) == 0 && bit(i + 1) == 0).count();
            Bracelet { bits: b, ones: b.count_ones() as usize, mono1, mono2 }
        })
        .collect()
}

fn assemble(cycles: &[(usize, u32)]) -> Graph {
    let mut next = [0usize, HALF];
    let mut inv = Graph::empty(2 * HALF);
    for &(l, bits) in cycles {
        let verts: Vec<usize> = (0..l)
            .map(|i| {
                let side = (bits >> i & 1 == 0) as usize;
                let v = next[side];
                next[side] += 1;
                v
            })
            .collect();
        for i in 0..l {
            inv.add_edge(verts[i], verts[(i + 1) % l]);
        }
    }
    debug_assert_eq!(next, [HALF, 2 * HALF]);
    invert_between_halves(&inv)
}

/// Every candidate with at most `max_w` edges inside each half, one per
/// isomorphism class, sorted by certificate.
pub fn enumerate_h_pairs_up_to(max_w: usize) -> Vec<HPairGraph> {
    let mut found = Vec::new();
    let table: Vec<Vec<Bracelet>> = (0..=2 * HALF).map(|l| if l >= 3 { bracelets(l) } else { Vec::new() }).collect();
    for ptn in partitions(2 * HALF, 3) {
        let mut chosen = Vec::new();
        choose(&ptn, 0, 0, 0, 0, max_w, &table, &mut chosen, &mut found);
    }
    let mut out: Vec<HPairGraph> = found
        .into_par_iter()
        .map(|cycles: Vec<(usize, u32, usize)>| {
            let graph = assemble(&cycles.iter().map(|&(l, b, _)| (l, b)).collect::<Vec<_>>());
            let w1 = cycles.iter().map(|&(_, _, m)| m).sum();
            let certificate = canonical_form(&invert_between_halves(&graph), &half_colours(2 * HALF)).certificate;
            HPairGraph { graph, w1, w2: w1, cycle_type: cycles.iter().map(|c| c.0).collect(), certificate }
        })
        .collect();
    out.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    out
}

#[allow(clippy::too_many_arguments)]
fn choose(
    ptn: &[usize],
    idx: usize,
    min_b: usize,
    ones: usize,
    mono: usize,
    max_w: usize,
    table: &[Vec<Bracelet>],
    chosen: &mut Vec<(usize, u32, usize)>,
    out: &mut Vec<Vec<(usize, u32, usize)>>,
) {
    if idx == ptn.len() {
        if ones == HALF {
            out.push(chosen.clone());
        }
        return;
    }
    let l = ptn[idx];
    for (bi, b) in table[l].iter().enumerate().skip(min_b) {
        let (o, m) = (ones + b.ones, mono + b.mono1);
        if o > HALF || m > max_w {
            continue;
        }
        debug_assert!(b.mono2 + 2 * b.ones >= b.mono1 + l || b.ones <= l);
        chosen.push((l, b.bits, b.mono1));
        let next_min = if ptn.get(idx + 1) == Some(&l) { bi } else { 0 };
        choose(ptn, idx + 1, next_min, o, m, max_w, table, chosen, out);
        chosen.pop();
    }
}

/// All candidates with `w1 = w2 ≤ 3`.
pub fn enumerate_h_pairs() -> Vec<HPairGraph> {
    enumerate_h_pairs_up_to(3)
}

/// Gram matrix `pA + I + q(J - I - A)`, scaled to integers by a common
/// denominator, reduced modulo the field prime.
pub fn gram_mod_p(g: &Graph, dots: &RepDots) -> Matrix<ModP> {
    let to_mod = |r: &Rational| {
        let num = i64::try_from(r.numer().clone()).expect("small numerator");
        let den = i64::try_from(r.denom().clone()).expect("small denominator");
        ModP::from_fraction(num, den).expect("denominator invertible")
    };
    let (p, q) = (to_mod(&dots.p), to_mod(&dots.q));
    Matrix::from_fn(g.order(), g.order(), |i, j| {
        if i == j {
            ModP::new(1)
        } else if g.has_edge(i, j) {
            p
        } else {
            q
        }
    })
}

pub fn gram_rational(g: &Graph, dots: &RepDots) -> Matrix<Rational> {
    Matrix::from_fn(g.order(), g.order(), |i, j| dots.dot(i == j, g.has_edge(i, j)))
}

/// Outcome of the rank / positivity test on a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GramVerdict {
    /// Exact rank when `rank_mod_p ≤ max_rank`, otherwise the modular rank,
    /// which is a lower bound for the rational rank.
    pub rank: usize,
    pub sign: Option<EigenSign>,
    pub survives: bool,
}

/// Keep a candidate iff its Gram matrix has rank `≤ max_rank` and is PSD.
pub fn gram_filter(g: &Graph, dots: &RepDots, max_rank: usize) -> GramVerdict {
    let rp = gram_mod_p(g, dots).rank();
    if rp > max_rank {
        return GramVerdict { rank: rp, sign: None, survives: false };
    }
    let m = gram_rational(g, dots);
    let rank = m.rank();
    let sign = m.min_eigen_sign().expect("Gram matrices are symmetric");
    GramVerdict { rank, sign: Some(sign), survives: rank <= max_rank && sign == EigenSign::ZeroOrPositive }
}

/// Choices of `c` vertices out of `0..n` in lexicographic order.
pub fn combinations(n: usize, c: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, c, &mut Vec::new(), &mut out);
    out
}

/// Neighbour sets `(S1, S2)` of the added vertex: `|S1| = |S2| = c` for
/// `c = 0..=max_c`, `S1 ⊂ H1`, `S2 ⊂ H2`.
pub fn extension_choices(max_c: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for c in 0..=max_c {
        let subsets = combinations(HALF, c);
        for a in &subsets {
            for b in &subsets {
                out.push((a.clone(), b.iter().map(|&x| x + HALF).collect()));
            }
        }
    }
    out
}

/// The 21-vertex graph obtained by adding a vertex joined to `s1 ∪ s2`.
pub fn extend(h: &Graph, s1: &[usize], s2: &[usize]) -> Graph {
    let n = h.order();
    let mut g = Graph::from_edges(n + 1, h.edges());
    for &v in s1.iter().chain(s2) {
        g.add_edge(n, v);
    }
    g
}

/// All labelled extensions of a survivor with `c ≤ 3`.
pub fn enumerate_extensions(h: &HPairGraph) -> Vec<Graph> {
    extension_choices(3).iter().map(|(a, b)| extend(&h.graph, a, b)).collect()
}

/// Minimum Gram rank over all extensions of `h`, and the number of
/// extensions examined. Each rank is certified from below modulo a prime
/// and recomputed exactly whenever the modular rank is below `threshold`.
pub fn min_extension_rank(h: &HPairGraph, dots: &RepDots, threshold: usize) -> (usize, usize) {
    let choices = extension_choices(3);
    let min = choices
        .par_iter()
        .map(|(a, b)| {
            let g = extend(&h.graph, a, b);
            let rp = gram_mod_p(&g, dots).rank();
            if rp >= threshold {
                rp
            } else {
                gram_rational(&g, dots).rank()
            }
        })
        .min()
        .unwrap_or(0);
    (min, choices.len())
}

/// Independent generator for the case `w1 = w2 = 0`: every 10×10 0/1
/// matrix with all row and column sums 2 is turned into a bipartite
/// inverted graph and canonised. Rows form a non-decreasing sequence of
/// column pairs and columns are labelled in order of first use; every
/// matrix is equivalent under row and column permutations to one of this
/// shape. Returns the set of certificates found.
pub fn naive_bipartite_certificates() -> BTreeSet<Certificate> {
    fn rec(prev: (usize, usize), used: usize, cols: &mut [u8; HALF], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == HALF {
            if cols.iter().all(|&c| c == 2) {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=used.min(HALF - 1) {
            for b in a + 1..=(used + 1).min(HALF - 1) {
                let fresh_ok = match (a < used, b < used) {
                    (true, true) => true,
                    (true, false) => b == used,
                    (false, _) => a == used && b == used + 1,
                };
                if !fresh_ok || (a, b) < prev || cols[a] == 2 || cols[b] == 2 {
                    continue;
                }
                cols[a] += 1;
                cols[b] += 1;
                cur.push((a, b));
                rec((a, b), used.max(b + 1), cols, cur, out);
                cur.pop();
                cols[a] -= 1;
                cols[b] -= 1;
            }
        }
    }
    let mut rows_list = Vec::new();
    rec((0, 0), 0, &mut [0; HALF], &mut Vec::new(), &mut rows_list);
    let colours = half_colours(2 * HALF);
    rows_list
        .par_iter()
        .map(|rows| {
            let mut inv = Graph::empty(2 * HALF);
            for (r, &(a, b)) in rows.iter().enumerate() {
                inv.add_edge(r, HALF + a);
                inv.add_edge(r, HALF + b);
            }
            canonical_form(&inv, &colours).certificate
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(partitions(6, 3), vec![vec![6], vec![3, 3]]);
        // binary bracelets of length 4: 0000 0001 0011 0101 0111 1111
        assert_eq!(bracelets(4).len(), 6);
        assert_eq!(bracelets(6).len(), 13);
        assert_eq!(combinations(10, 3).len(), 120);
        assert_eq!(extension_choices(3).len(), 16526);
    }

    #[test]
    fn assembled_candidates_satisfy_relation() {
        let hs = enumerate_h_pairs_up_to(1);
        assert!(!hs.is_empty());
        for h in &hs {
            assert!(h.satisfies_degree_relation());
            assert!(h.w1 <= 1);
            let inv = h.inverted();
            assert!((0..20).all(|v| inv.degree(v) == 2));
            let e1 = h.graph.induced(&(0..10).collect::<Vec<_>>()).edge_count();
            let e2 = h.graph.induced(&(10..20).collect::<Vec<_>>()).edge_count();
            assert_eq!((e1, e2), (h.w1, h.w2));
        }
        let certs: BTreeSet<_> = hs.iter().map(|h| h.certificate.clone()).collect();
        assert_eq!(certs.len(), hs.len());
    }
}
