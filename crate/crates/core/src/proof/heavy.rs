//! The expensive searches, computed once per process.

use std::sync::OnceLock;

use crate::graph::clique::{is_clique, max_clique_with_symmetry, Clique};
use crate::graph::hpairs::{enumerate_h_pairs, gram_filter, min_extension_rank, GramVerdict, HPairGraph};
use crate::graph::subset::{build_subset_graph, fixed_cycle, CycleSymmetry, SubsetVertex};
use crate::params::{representation_dots, RepDots, Side, SrgParams};

pub(super) fn dots76() -> RepDots {
    let params = SrgParams::new(76, 30, 8, 14).expect("valid parameters");
    representation_dots(&params, Side::PrimalInG).expect("rational dots")
}

/// The 8-subset graph around the fixed 4-cycle and its clique number.
#[derive(Clone, Debug)]
pub struct SubsetSearch {
    pub vertices: Vec<SubsetVertex>,
    pub edge_count: usize,
    pub clique: Clique,
    /// The witness is a clique whose sets all meet each fixed set in 2 or 4.
    pub witness_valid: bool,
}

pub fn subset_search() -> &'static SubsetSearch {
    static CELL: OnceLock<SubsetSearch> = OnceLock::new();
    CELL.get_or_init(|| {
        let m0 = fixed_cycle();
        let (vertices, g) = build_subset_graph(&m0);
        let clique = max_clique_with_symmetry(&g, &CycleSymmetry::new(&vertices));
        let witness_valid = is_clique(&g, &clique.vertices)
            && clique.vertices.iter().all(|&i| m0.iter().all(|&a| vertices[i].adjacent(a)) && !m0.contains(&vertices[i]));
        SubsetSearch { edge_count: g.edge_count(), vertices, clique, witness_valid }
    })
}

/// Every candidate `H1 ∪ H2` with its Gram verdict.
#[derive(Clone, Debug)]
pub struct PairFilterSummary {
    pub candidates: Vec<HPairGraph>,
    pub verdicts: Vec<GramVerdict>,
}

impl PairFilterSummary {
    pub fn survivors(&self) -> impl Iterator<Item = &HPairGraph> {
        self.candidates.iter().zip(&self.verdicts).filter(|(_, v)| v.survives).map(|(h, _)| h)
    }

    /// Candidates passing the rank test alone whose inverted graph is five
    /// 4-cycles.
    pub fn rank_only_five_squares(&self) -> impl Iterator<Item = &HPairGraph> {
        self.candidates
            .iter()
            .zip(&self.verdicts)
            .filter(|(h, v)| v.rank <= 16 && h.cycle_type == [4; 5])
            .map(|(h, _)| h)
    }
}

pub fn pair_filter() -> &'static PairFilterSummary {
    static CELL: OnceLock<PairFilterSummary> = OnceLock::new();
    CELL.get_or_init(|| {
        let dots = dots76();
        let candidates = enumerate_h_pairs();
        let verdicts = candidates.iter().map(|h| gram_filter(&h.graph, &dots, 16)).collect();
        PairFilterSummary { candidates, verdicts }
    })
}

/// Minimum Gram rank over one-vertex extensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndgameSummary {
    /// Over the graphs passing both the rank and the positivity test.
    pub survivor_min_rank: usize,
    pub survivor_extensions: usize,
    /// Over the five-4-cycle graphs passing the rank test alone.
    pub rank_only_min_rank: usize,
    pub rank_only_extensions: usize,
}

pub fn endgame() -> &'static EndgameSummary {
    static CELL: OnceLock<EndgameSummary> = OnceLock::new();
    CELL.get_or_init(|| {
        let dots = dots76();
        let pf = pair_filter();
        let wanted: Vec<usize> = (0..pf.candidates.len())
            .filter(|&i| pf.verdicts[i].survives || (pf.verdicts[i].rank <= 16 && pf.candidates[i].cycle_type == [4; 5]))
            .collect();
        let ranks: Vec<(usize, (usize, usize))> = wanted.iter().map(|&i| (i, min_extension_rank(&pf.candidates[i], &dots, 17))).collect();
        let fold = |keep: &dyn Fn(usize) -> bool| {
            ranks.iter().filter(|(i, _)| keep(*i)).fold((usize::MAX, 0), |(m, n), (_, (r, c))| (m.min(*r), n + c))
        };
        let (survivor_min_rank, survivor_extensions) = fold(&|i| pf.verdicts[i].survives);
        let (rank_only_min_rank, rank_only_extensions) = fold(&|i| pf.verdicts[i].rank <= 16 && pf.candidates[i].cycle_type == [4; 5]);
        EndgameSummary { survivor_min_rank, survivor_extensions, rank_only_min_rank, rank_only_extensions }
    })
}
