//! Exact counters for cliques, cycles, independent sets and arbitrary
//! subgraph copies. "Copy" always means a not necessarily induced subgraph.

mod cliques;
mod cycles;
mod embed;

use alloc::vec::Vec;
use core::fmt;

pub use cliques::{
    binomial, clique_cover_mask, cliques, count_cliques, count_independent_sets, find_clique_in,
    for_each_clique_in, has_clique_in,
};
pub use cycles::{contains_cycle, count_cycles, has_path};
pub use embed::{count_embeddings, embeds, EmbeddingPlan};

use crate::canon::automorphism_count;
use crate::error::{Error, Result};
use crate::graph::{EdgePair, Graph};
use crate::Count;

/// A counting or containment target.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Pattern {
    Clique(usize),
    Cycle(usize),
    General(Graph),
}

impl Pattern {
    pub fn clique(r: usize) -> Result<Self> {
        if r == 0 || r > crate::graph::MAX_ORDER {
            return Err(Error::InvalidParameter("clique size must be in 1..=64"));
        }
        Ok(Pattern::Clique(r))
    }

    pub fn cycle(r: usize) -> Result<Self> {
        if !(3..=crate::graph::MAX_ORDER).contains(&r) {
            return Err(Error::InvalidParameter("cycle length must be in 3..=64"));
        }
        Ok(Pattern::Cycle(r))
    }

    pub fn general(g: Graph) -> Result<Self> {
        if g.order() == 0 {
            return Err(Error::InvalidParameter("pattern must have a vertex"));
        }
        Ok(Pattern::General(g))
    }

    pub fn order(&self) -> usize {
        match self {
            Pattern::Clique(r) | Pattern::Cycle(r) => *r,
            Pattern::General(g) => g.order(),
        }
    }

    /// The pattern as a concrete graph.
    pub fn to_graph(&self) -> Graph {
        match self {
            Pattern::Clique(r) => Graph::complete(*r).expect("validated size"),
            Pattern::Cycle(r) => Graph::cycle(*r).expect("validated length"),
            Pattern::General(g) => g.clone(),
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Clique(r) => write!(f, "K{r}"),
            Pattern::Cycle(r) => write!(f, "C{r}"),
            Pattern::General(g) => write!(f, "{g:?}"),
        }
    }
}

/// Number of subgraphs of `g` isomorphic to `f`.
///
/// For general patterns this is the number of injective edge-preserving maps
/// divided by `|Aut(f)|`. Panics if an intermediate value exceeds 128 bits.
pub fn count_subgraph_copies(g: &Graph, f: &Pattern) -> Count {
    match f {
        Pattern::Clique(r) => count_cliques(g, *r),
        Pattern::Cycle(r) => count_cycles(g, *r),
        Pattern::General(p) => {
            let maps = count_embeddings(g, p);
            if maps == 0 {
                return 0;
            }
            let aut = automorphism_count(p).expect("pattern automorphism group fits in 128 bits");
            debug_assert_eq!(maps % aut, 0);
            maps / aut
        }
    }
}

/// True iff `g` contains a copy of `f`. Stops at the first embedding.
pub fn contains_copy(g: &Graph, f: &Pattern) -> bool {
    match f {
        Pattern::Clique(r) => has_clique_in(g, g.vertex_mask(), *r),
        Pattern::Cycle(r) => contains_cycle(g, *r),
        Pattern::General(p) => embeds(g, p),
    }
}

/// True iff `g + e` has a copy of `f` that uses the new edge `e`.
pub fn creates_new_copy_through_edge(g: &Graph, e: EdgePair, f: &Pattern) -> Result<bool> {
    g.check_pair(e)?;
    if g.has_edge(e.u, e.v) {
        return Err(Error::EdgePresent(e.u, e.v));
    }
    Ok(new_copy_through(g, e, f))
}

/// Unchecked form of [`creates_new_copy_through_edge`]; `e` must be a
/// non-edge of `g`.
pub(crate) fn new_copy_through(g: &Graph, e: EdgePair, f: &Pattern) -> bool {
    match f {
        Pattern::Clique(r) => {
            *r == 2 || (*r > 2 && has_clique_in(g, g.neighbors(e.u) & g.neighbors(e.v), *r - 2))
        }
        Pattern::Cycle(r) => has_path(g, e.u, e.v, *r - 1, g.vertex_mask()),
        Pattern::General(p) => {
            let h = g.plus_edge(e);
            p.edges().iter().any(|pe| {
                let plan = EmbeddingPlan::new(p, &[pe.u, pe.v]);
                plan.exists(&h, &[e.u, e.v]) || plan.exists(&h, &[e.v, e.u])
            })
        }
    }
}

/// Edges split by whether they lie in some `K_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    /// Edges contained in at least one `K_r`.
    pub e1: Vec<EdgePair>,
    pub e2: Vec<EdgePair>,
}

pub fn classify_edges_by_clique(g: &Graph, r: usize) -> EdgePartition {
    assert!(r >= 2, "edge classification needs r >= 2");
    let (e1, e2) = g
        .edges()
        .into_iter()
        .partition(|e| has_clique_in(g, g.neighbors(e.u) & g.neighbors(e.v), r - 2));
    EdgePartition { e1, e2 }
}

/// A `K_r` containing `e`, if any.
pub fn clique_through_edge(g: &Graph, e: EdgePair, r: usize) -> Option<u64> {
    find_clique_in(g, g.neighbors(e.u) & g.neighbors(e.v), r.checked_sub(2)?).map(|c| c | e.mask())
}
