//! Isomorph-free generation of graphs and exact minimization of pattern
//! counts over saturated graphs.
//!
//! Graphs are generated by canonical augmentation: a graph on `k + 1`
//! vertices is produced from its canonical parent, obtained by deleting a
//! distinguished vertex of maximum degree, and children of one parent are
//! deduplicated by canonical code. Every isomorphism class appears exactly
//! once and no global table of seen graphs is kept.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::canon::{canonical_form, CanonicalCode};
use crate::counting::{count_subgraph_copies, Pattern};
use crate::error::{Error, Result};
use crate::graph::{low_bits, Bits, Graph, MAX_ORDER};
use crate::saturation::{is_free, is_saturated, is_strongly_saturated, Family};
use crate::Count;

/// Default largest order accepted for exhaustive runs.
pub const DEFAULT_CAP: usize = 11;

/// Visits the tree of canonical graphs up to order `n`.
///
/// `keep` decides whether a node (at any level) is kept; rejected nodes are
/// not expanded. Nodes at level `shard.0` are numbered in generation order
/// and only the subtree under number `shard.1` is explored. `leaf` receives
/// each kept graph of order `n` and returns false to stop the walk.
struct Walker<'a, K, L> {
    n: usize,
    keep: &'a mut K,
    leaf: &'a mut L,
    shard: Option<(usize, usize)>,
    seen_at_depth: usize,
    stopped: bool,
}

impl<K, L> Walker<'_, K, L>
where
    K: FnMut(&Graph) -> bool,
    L: FnMut(&Graph) -> bool,
{
    fn run(&mut self) {
        let root = Graph::empty(0).expect("empty graph");
        if self.keep(&root) {
            self.visit(&root);
        }
    }

    fn keep(&mut self, g: &Graph) -> bool {
        (self.keep)(g)
    }

    /// `g` is canonical and kept.
    fn visit(&mut self, g: &Graph) {
        let k = g.order();
        if let Some((depth, index)) = self.shard {
            if k == depth {
                let mine = self.seen_at_depth == index;
                self.seen_at_depth += 1;
                if !mine {
                    return;
                }
            }
        }
        if k == self.n {
            if !(self.leaf)(g) {
                self.stopped = true;
            }
            return;
        }
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        for s in 0..1u64 << k {
            if let Some(child) = self.child(g, s, &mut seen) {
                self.visit(&child);
                if self.stopped {
                    return;
                }
            }
        }
    }

    /// Canonical form of `parent + v` with `N(v) = s`, if that child is
    /// accepted and not a repeat.
    fn child(&mut self, parent: &Graph, s: u64, seen: &mut BTreeSet<CanonicalCode>) -> Option<Graph> {
        let k = parent.order();
        let mut rows = [0u64; MAX_ORDER];
        rows[..k].copy_from_slice(parent.rows());
        for u in Bits(s) {
            rows[u] |= 1u64 << k;
        }
        rows[k] = s;
        let g = Graph::from_rows_unchecked(k + 1, rows);
        let dv = s.count_ones() as usize;
        let top = (0..k).filter(|&u| g.degree(u) > dv).count();
        if top > 0 {
            return None;
        }
        if !self.keep(&g) {
            return None;
        }
        let ties: u64 = Bits(low_bits(k)).filter(|&u| g.degree(u) == dv).fold(0, |m, u| m | 1u64 << u);
        let canon = canonical_form(&g);
        if ties != 0 {
            // distinguished vertex: maximum degree, latest canonical position
            let w = Bits(ties | 1u64 << k)
                .max_by_key(|&u| canon.position(u))
                .expect("non-empty");
            if w != k && canon.orbits[w] != canon.orbits[k] {
                let rest = g.induced(g.vertex_mask() & !(1u64 << w));
                if canonical_form(&rest).graph != *parent {
                    return None;
                }
            }
        }
        if seen.insert(canon.code()) {
            Some(canon.graph)
        } else {
            None
        }
    }
}

fn walk(
    n: usize,
    shard: Option<(usize, usize)>,
    keep: &mut impl FnMut(&Graph) -> bool,
    leaf: &mut impl FnMut(&Graph) -> bool,
) -> usize {
    let mut w = Walker {
        n,
        keep,
        leaf,
        shard,
        seen_at_depth: 0,
        stopped: false,
    };
    w.run();
    w.seen_at_depth
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > crate::graph::MAX_ORDER {
        return Err(Error::SearchTooLarge { order: n, cap });
    }
    Ok(())
}

/// Calls `f` once per isomorphism class of graphs on `n` vertices, each
/// given in canonical form, in a fixed order. `f` returns false to stop.
pub fn for_each_graph(n: usize, cap: usize, mut f: impl FnMut(&Graph) -> bool) -> Result<()> {
    check_cap(n, cap)?;
    walk(n, None, &mut |_| true, &mut f);
    Ok(())
}

/// One canonical representative of every graph on `n <= 11` vertices.
pub fn generate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph(n, DEFAULT_CAP, |g| {
        out.push(g.clone());
        true
    })?;
    Ok(out)
}

/// Which graphs are admitted by a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Graphs saturated for the family.
    Saturated(Family),
    /// Strongly saturated graphs for the pattern (need not be free).
    StronglySaturated(Pattern),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    pub mode: Mode,
    /// Pattern whose copies are minimized; `Clique(2)` counts edges.
    pub target: Pattern,
    /// `(depth, index)`: explore only the subtree under the `index`-th kept
    /// graph on `depth` vertices.
    pub shard: Option<(usize, usize)>,
    /// Drop branches whose edge count already exceeds the best found. Only
    /// allowed for the edge target. The result then holds the exact minimum
    /// and extremal set, but the examined and spectrum tallies depend on the
    /// order of exploration.
    pub prune_edges: bool,
    pub cap: usize,
}

impl SearchConfig {
    pub fn saturated(order: usize, family: Family, target: Pattern) -> Self {
        SearchConfig {
            order,
            mode: Mode::Saturated(family),
            target,
            shard: None,
            prune_edges: false,
            cap: DEFAULT_CAP,
        }
    }

    pub fn strongly_saturated(order: usize, pattern: Pattern, target: Pattern) -> Self {
        SearchConfig {
            order,
            mode: Mode::StronglySaturated(pattern),
            target,
            shard: None,
            prune_edges: false,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_shard(mut self, depth: usize, index: usize) -> Self {
        self.shard = Some((depth, index));
        self
    }

    fn validate(&self) -> Result<()> {
        check_cap(self.order, self.cap)?;
        if self.prune_edges && self.target != Pattern::Clique(2) {
            return Err(Error::InvalidParameter("edge pruning needs the edge target"));
        }
        if let Some((depth, _)) = self.shard {
            if depth > self.order {
                return Err(Error::InvalidParameter("shard depth exceeds the order"));
            }
        }
        Ok(())
    }

    fn admits_prefix(&self, g: &Graph) -> bool {
        match &self.mode {
            Mode::Saturated(fam) => is_free(g, fam),
            Mode::StronglySaturated(_) => true,
        }
    }

    fn admits(&self, g: &Graph) -> bool {
        match &self.mode {
            Mode::Saturated(fam) => is_saturated(g, fam),
            Mode::StronglySaturated(p) => is_strongly_saturated(g, p),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    /// Smallest target count, `None` when no graph qualifies.
    pub minimum: Option<Count>,
    /// Canonical codes achieving the minimum, in increasing order.
    pub extremal: Vec<CanonicalCode>,
    /// Graphs of the requested order that were generated.
    pub examined: u64,
    pub saturated_count: u64,
    /// Number of qualifying graphs for each target count.
    pub counts: BTreeMap<Count, u64>,
}

impl SearchResult {
    fn record(&mut self, count: Count, code: CanonicalCode) {
        self.saturated_count += 1;
        *self.counts.entry(count).or_insert(0) += 1;
        match self.minimum {
            Some(m) if count > m => {}
            Some(m) if count == m => self.extremal.push(code),
            _ => {
                self.minimum = Some(count);
                self.extremal.clear();
                self.extremal.push(code);
            }
        }
    }

    /// Combines results of disjoint shards.
    pub fn merge(mut self, other: SearchResult) -> SearchResult {
        self.examined += other.examined;
        self.saturated_count += other.saturated_count;
        for (c, k) in other.counts {
            *self.counts.entry(c).or_insert(0) += k;
        }
        match (self.minimum, other.minimum) {
            (_, None) => {}
            (None, Some(_)) => {
                self.minimum = other.minimum;
                self.extremal = other.extremal;
            }
            (Some(a), Some(b)) if b < a => {
                self.minimum = other.minimum;
                self.extremal = other.extremal;
            }
            (Some(a), Some(b)) if a == b => {
                self.extremal.extend(other.extremal);
                self.extremal.sort();
                self.extremal.dedup();
            }
            _ => {}
        }
        self
    }

    /// Sorted set of achieved target counts.
    pub fn spectrum(&self) -> Vec<Count> {
        self.counts.keys().copied().collect()
    }
}

/// Exhaustive minimization described by `cfg`.
pub fn min_count_over_saturated(cfg: &SearchConfig) -> Result<SearchResult> {
    run_search(cfg, &mut |_| true)
}

/// As [`min_count_over_saturated`], calling `progress` with the running
/// number of examined graphs; returning false aborts with a partial result.
pub fn run_search(cfg: &SearchConfig, progress: &mut dyn FnMut(u64) -> bool) -> Result<SearchResult> {
    cfg.validate()?;
    let n = cfg.order;
    let mut res = SearchResult::default();
    let best_edges = core::cell::Cell::new(usize::MAX);
    let prune = cfg.prune_edges;
    let seen = walk(
        n,
        cfg.shard,
        &mut |g: &Graph| (!prune || g.edge_count() <= best_edges.get()) && cfg.admits_prefix(g),
        &mut |g: &Graph| {
            res.examined += 1;
            if cfg.admits(g) {
                let c = count_subgraph_copies(g, &cfg.target);
                if prune {
                    best_edges.set(best_edges.get().min(g.edge_count()));
                }
                res.record(c, CanonicalCode::from_rows(n, g.rows()));
            }
            progress(res.examined)
        },
    );
    if let Some((depth, index)) = cfg.shard {
        if index >= seen {
            return Err(Error::NoSuchShard {
                depth,
                index,
                available: seen,
            });
        }
    }
    res.extremal.sort();
    Ok(res)
}

/// Minimum edge count over `fam`-saturated graphs on `n` vertices.
pub fn saturation_number(n: usize, fam: &Family) -> Result<SearchResult> {
    min_count_over_saturated(&SearchConfig::saturated(n, fam.clone(), Pattern::Clique(2)))
}

/// Achievable target counts over `fam`-saturated graphs on `n` vertices.
pub fn spectrum(n: usize, fam: &Family, target: &Pattern) -> Result<Vec<Count>> {
    Ok(min_count_over_saturated(&SearchConfig::saturated(n, fam.clone(), target.clone()))?.spectrum())
}

/// Number of shards at `depth` for `cfg` (ignoring its own shard field).
/// Edge pruning never changes shard numbering, so the count is taken on the
/// unpruned tree.
pub fn shard_count(cfg: &SearchConfig, depth: usize) -> Result<usize> {
    let mut c = cfg.clone();
    c.shard = None;
    c.prune_edges = false;
    c.validate()?;
    if depth > c.order {
        return Err(Error::InvalidParameter("shard depth exceeds the order"));
    }
    Ok(count_level(&c, depth))
}

fn count_level(cfg: &SearchConfig, depth: usize) -> usize {
    let mut total = 0;
    walk(depth, None, &mut |g| cfg.admits_prefix(g), &mut |_| {
        total += 1;
        true
    });
    total
}

/// Shard descriptors `(depth, index)` partitioning the unpruned generation
/// tree of order `n`.
pub fn shard_prefixes(n: usize, depth: usize) -> Result<Vec<(usize, usize)>> {
    check_cap(n, DEFAULT_CAP.max(n.min(crate::graph::MAX_ORDER)))?;
    if depth > n {
        return Err(Error::InvalidParameter("shard depth exceeds the order"));
    }
    let mut total = 0;
    walk(depth, None, &mut |_| true, &mut |_| {
        total += 1;
        true
    });
    Ok((0..total).map(|i| (depth, i)).collect())
}

/// Canonical graphs of order `n` in the shard `(depth, index)` of the
/// unpruned tree.
pub fn graphs_in_shard(n: usize, depth: usize, index: usize) -> Result<Vec<Graph>> {
    check_cap(n, DEFAULT_CAP)?;
    if depth > n {
        return Err(Error::InvalidParameter("shard depth exceeds the order"));
    }
    let mut out = Vec::new();
    let seen = walk(n, Some((depth, index)), &mut |_| true, &mut |g| {
        out.push(g.clone());
        true
    });
    if index >= seen {
        return Err(Error::NoSuchShard {
            depth,
            index,
            available: seen,
        });
    }
    Ok(out)
}
