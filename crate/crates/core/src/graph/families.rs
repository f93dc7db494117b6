//! Small explicit graphs used as fixtures and oracles.

use super::graph6;
use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// Edgeless graph.
pub fn coclique(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_fn(m + n, |i, j| (i < m) != (j < m))
}

/// Petersen graph in the usual outer-cycle / inner-pentagram labelling.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
}

/// Triangular graph `T(n)`: 2-subsets of `0..n`, adjacent when they meet.
pub fn triangular(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::from_fn(pairs.len(), |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a == c || a == d || b == c || b == d
    })
}

/// `n × n` rook's graph: cells adjacent when they share a row or column.
pub fn rook(n: usize) -> Graph {
    Graph::from_fn(n * n, |i, j| i / n == j / n || i % n == j % n)
}

/// Paley graph on the prime field of order `p ≡ 1 (mod 4)`.
pub fn paley(p: usize) -> Graph {
    assert!(p % 4 == 1, "Paley graphs need p = 1 mod 4");
    let mut square = vec![false; p];
    for x in 1..p {
        square[x * x % p] = true;
    }
    Graph::from_fn(p, |i, j| square[(j + p - i) % p])
}

/// Collinearity graph of the symplectic generalized quadrangle `W(3)`:
/// points of `PG(3,3)`, adjacent when orthogonal under
/// `x1·y2 - x2·y1 + x3·y4 - x4·y3`. Strongly regular with parameters
/// `(40,12,2,4)`.
pub fn symplectic_w3() -> Graph {
    let pts = projective_points_f3();
    Graph::from_fn(pts.len(), |i, j| symplectic_form(&pts[i], &pts[j]) == 0)
}

/// Points of `PG(3,3)` as vectors whose first nonzero coordinate is 1, in
/// lexicographic order.
pub fn projective_points_f3() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for code in 1..81u32 {
        let mut v = [0u8; 4];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

pub fn symplectic_form(x: &[u8; 4], y: &[u8; 4]) -> u8 {
    let t = |a: u8, b: u8| (a as i32) * (b as i32);
    let s = t(x[0], y[1]) - t(x[1], y[0]) + t(x[2], y[3]) - t(x[3], y[2]);
    s.rem_euclid(3) as u8
}

const SRG40_G6: &str = include_str!("../../data/srg40.g6");

/// The shipped `SRG(40,12,2,4)` fixture.
pub fn srg40_fixture() -> Graph {
    graph6::decode(SRG40_G6.trim()).expect("bundled fixture is valid graph6")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_of_families() {
        assert_eq!(petersen().srg_parameters(), Some((10, 3, 0, 1)));
        assert_eq!(triangular(5).srg_parameters(), Some((10, 6, 3, 4)));
        assert_eq!(rook(4).srg_parameters(), Some((16, 6, 2, 2)));
        assert_eq!(paley(13).srg_parameters(), Some((13, 6, 2, 3)));
        assert_eq!(symplectic_w3().srg_parameters(), Some((40, 12, 2, 4)));
        assert_eq!(srg40_fixture().srg_parameters(), Some((40, 12, 2, 4)));
        assert_eq!(complete_bipartite(6, 10).edge_count(), 60);
    }
}
