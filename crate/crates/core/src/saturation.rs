//! Saturation predicates for patterns and families, and instance checkers
//! for the structural facts about saturated graphs.

use alloc::string::String;
use alloc::vec::Vec;

use crate::counting::{
    cliques, contains_cycle, count_subgraph_copies, embeds, find_clique_in, for_each_clique_in,
    has_clique_in, new_copy_through, EmbeddingPlan, Pattern,
};
use crate::error::{Error, Result};
use crate::graph::{Bits, EdgePair, Graph};

/// How containment of a family member is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Detector {
    /// Backtracking embedding of the member graph.
    Generic,
    Clique(usize),
    Cycle(usize),
    /// Two vertex-disjoint `K_m` joined by an edge.
    Dumbbell(usize),
    /// A `K_m` with one vertex having two further neighbors outside it.
    Pendants(usize),
    /// A `K_m` and a `K_{m-r+1}` meeting in exactly one vertex.
    SharedVertex { m: usize, r: usize },
    /// A `K_m` and an outside vertex with at least `r` neighbors in it.
    Lambda { m: usize, r: usize },
}

impl Detector {
    /// True iff `g` contains the shape this detector recognizes. `fallback`
    /// is the member graph, used by [`Detector::Generic`].
    pub fn detect(&self, g: &Graph, fallback: &Graph) -> bool {
        match *self {
            Detector::Generic => embeds(g, fallback),
            Detector::Clique(r) => has_clique_in(g, g.vertex_mask(), r),
            Detector::Cycle(r) => contains_cycle(g, r),
            Detector::Dumbbell(m) => find_dumbbell(g, m).is_some(),
            Detector::Pendants(m) => any_clique(g, m, |c| {
                Bits(c).any(|w| (g.neighbors(w) & !c).count_ones() >= 2)
            }),
            Detector::SharedVertex { m, r } => any_clique(g, m, |c| {
                Bits(c).any(|w| has_clique_in(g, g.neighbors(w) & !c, m - r))
            }),
            Detector::Lambda { m, r } => any_clique(g, m, |c| {
                Bits(g.vertex_mask() & !c).any(|x| (g.neighbors(x) & c).count_ones() as usize >= r)
            }),
        }
    }
}

fn any_clique(g: &Graph, m: usize, mut pred: impl FnMut(u64) -> bool) -> bool {
    !for_each_clique_in(g, g.vertex_mask(), m, &mut |c| !pred(c))
}

/// Two disjoint `K_m` with an edge between them, as vertex masks.
pub fn find_dumbbell(g: &Graph, m: usize) -> Option<(u64, u64)> {
    let cs = cliques(g, m);
    for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            if a & b == 0 && Bits(a).any(|u| g.neighbors(u) & b != 0) {
                return Some((a, b));
            }
        }
    }
    None
}

/// One forbidden graph of a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Member {
    graph: Graph,
    detector: Detector,
}

impl Member {
    pub fn new(graph: Graph, detector: Detector) -> Self {
        Member { graph, detector }
    }

    pub fn generic(graph: Graph) -> Self {
        Member::new(graph, Detector::Generic)
    }

    pub fn from_pattern(p: &Pattern) -> Self {
        let detector = match p {
            Pattern::Clique(r) => Detector::Clique(*r),
            Pattern::Cycle(r) => Detector::Cycle(*r),
            Pattern::General(_) => Detector::Generic,
        };
        Member::new(p.to_graph(), detector)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn detector(&self) -> Detector {
        self.detector
    }

    pub fn found_in(&self, g: &Graph) -> bool {
        g.order() >= self.graph.order() && self.detector.detect(g, &self.graph)
    }

    /// True iff `g + e` has a copy of this member using `e`. `e` must be a
    /// non-edge of `g`.
    fn created_by(&self, g: &Graph, e: EdgePair) -> bool {
        match self.detector {
            Detector::Clique(r) => new_copy_through(g, e, &Pattern::Clique(r)),
            Detector::Cycle(r) => new_copy_through(g, e, &Pattern::Cycle(r)),
            Detector::Generic => new_copy_through(g, e, &Pattern::General(self.graph.clone())),
            _ => self.found_in(&g.plus_edge(e)),
        }
    }
}

/// An ordered list of forbidden graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    name: String,
    members: Vec<Member>,
    /// Member indices by increasing (order, size).
    check_order: Vec<usize>,
}

impl Family {
    /// Panics if `members` is empty or a member has fewer than two vertices.
    pub fn with_members(name: String, members: Vec<Member>) -> Self {
        assert!(!members.is_empty(), "a family needs at least one member");
        assert!(
            members.iter().all(|m| m.graph.order() >= 2),
            "family members need at least two vertices"
        );
        let mut check_order: Vec<usize> = (0..members.len()).collect();
        check_order.sort_by_key(|&i| (members[i].graph.order(), members[i].graph.edge_count()));
        Family {
            name,
            members,
            check_order,
        }
    }

    /// A family of graphs with generic detectors.
    pub fn from_graphs(name: &str, graphs: Vec<Graph>) -> Result<Self> {
        if graphs.is_empty() || graphs.iter().any(|g| g.order() < 2) {
            return Err(Error::InvalidParameter(
                "family members must be non-empty with order >= 2",
            ));
        }
        Ok(Family::with_members(name.into(), graphs.into_iter().map(Member::generic).collect()))
    }

    pub fn single(p: &Pattern) -> Result<Self> {
        if p.order() < 2 {
            return Err(Error::InvalidParameter("family members need order >= 2"));
        }
        Ok(Family::with_members(alloc::format!("{p:?}"), alloc::vec![Member::from_pattern(p)]))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    /// The same family with every detector replaced by generic embedding.
    pub fn generic(&self) -> Self {
        let members = self.members.iter().map(|m| Member::generic(m.graph.clone())).collect();
        Family::with_members(self.name.clone(), members)
    }

    /// Index of the first member (smallest first) contained in `g`.
    pub fn member_in(&self, g: &Graph) -> Option<usize> {
        self.check_order.iter().copied().find(|&i| self.members[i].found_in(g))
    }

    fn member_created(&self, g: &Graph, e: EdgePair) -> Option<usize> {
        self.check_order.iter().copied().find(|&i| self.members[i].created_by(g, e))
    }

    pub fn max_member_order(&self) -> usize {
        self.members.iter().map(|m| m.graph.order()).max().unwrap_or(0)
    }
}

/// True iff no member of `fam` embeds in `g`.
pub fn is_free(g: &Graph, fam: &Family) -> bool {
    fam.member_in(g).is_none()
}

/// True iff `g` is free and adding any non-edge creates a member copy.
pub fn is_saturated(g: &Graph, fam: &Family) -> bool {
    is_free(g, fam) && g.non_edges().iter().all(|&e| fam.member_created(g, e).is_some())
}

/// First non-edge whose addition creates no member copy, assuming `g` free.
pub fn unsaturated_pair(g: &Graph, fam: &Family) -> Option<EdgePair> {
    g.non_edges().into_iter().find(|&e| fam.member_created(g, e).is_none())
}

/// True iff adding any non-edge creates a new copy of `f` through it. `g`
/// need not be `f`-free.
pub fn is_strongly_saturated(g: &Graph, f: &Pattern) -> bool {
    g.non_edges().iter().all(|&e| new_copy_through(g, e, f))
}

// ---------------------------------------------------------------------------
// Edge-class check for clique saturation
// ---------------------------------------------------------------------------

/// Outcome of [`check_lemma2`]. On failure the witness is the edge outside
/// every `K_r`, the added pair, and the `K_s` containing both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassVerdict {
    pub passed: bool,
    pub witness: Option<(EdgePair, EdgePair, u64)>,
}

/// For a `K_s`-saturated `g` and `2 <= r <= s - 1`: no edge lying in no
/// `K_r` ends up in a `K_s` after any single non-edge is added.
pub fn check_lemma2(g: &Graph, r: usize, s: usize) -> Result<EdgeClassVerdict> {
    if r < 2 || r + 1 > s {
        return Err(Error::InvalidParameter("need 2 <= r <= s - 1"));
    }
    if !is_saturated(g, &Family::single(&Pattern::Clique(s))?) {
        return Err(Error::NotSaturated);
    }
    let parts = crate::counting::classify_edges_by_clique(g, r);
    let non_edges = g.non_edges();
    for &e in &parts.e2 {
        for &ab in &non_edges {
            let h = g.plus_edge(ab);
            let common = h.neighbors(e.u) & h.neighbors(e.v);
            if let Some(rest) = find_clique_in(&h, common, s - 2) {
                return Ok(EdgeClassVerdict {
                    passed: false,
                    witness: Some((e, ab, rest | e.mask())),
                });
            }
        }
    }
    Ok(EdgeClassVerdict {
        passed: true,
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// Structure of family-saturated graphs
// ---------------------------------------------------------------------------

/// Identifier of one structural check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureCheck {
    /// The vertices in some `K_m` induce a disjoint union of `K_m`'s.
    CliquePartIsDisjointCliques,
    /// The remaining part has at most `m` vertices or is `K_m`-saturated
    /// (strongly `K_{m-r}`-saturated for `r > 2`).
    RestSmallOrSaturated,
    /// If the rest is non-empty, every `K_m` of the clique part reaches it by
    /// an edge (by a `K_r` meeting both, for `r > 2`).
    CliquesReachRest,
}

impl StructureCheck {
    pub fn id(&self) -> &'static str {
        match self {
            StructureCheck::CliquePartIsDisjointCliques => "clique-part-is-disjoint-cliques",
            StructureCheck::RestSmallOrSaturated => "rest-small-or-saturated",
            StructureCheck::CliquesReachRest => "cliques-reach-rest",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: StructureCheck,
    pub passed: bool,
    pub witness_vertices: u64,
    pub witness_edges: Vec<EdgePair>,
}

impl CheckOutcome {
    fn pass(check: StructureCheck) -> Self {
        CheckOutcome {
            check,
            passed: true,
            witness_vertices: 0,
            witness_edges: Vec::new(),
        }
    }

    fn fail(check: StructureCheck, vertices: u64, edges: Vec<EdgePair>) -> Self {
        CheckOutcome {
            check,
            passed: false,
            witness_vertices: vertices,
            witness_edges: edges,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub checks: Vec<CheckOutcome>,
    /// Vertices contained in some `K_m`.
    pub b_set: u64,
    pub a_set: u64,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Structure report for a graph saturated for `family_f(m)` (`r = 2`) or
/// `family_f_r(m, r)` (`r > 2`, permissive range).
pub fn family_structure_report(g: &Graph, m: usize, r: usize) -> Result<StructureReport> {
    use crate::constructions::{family_f, family_f_r, RangeMode};
    let fam = if r == 2 {
        family_f(m)?
    } else {
        family_f_r(m, r, RangeMode::Permissive)?
    };
    if !is_saturated(g, &fam) {
        return Err(Error::NotSaturated);
    }
    Ok(structure_report_unchecked(g, m, r))
}

fn structure_report_unchecked(g: &Graph, m: usize, r: usize) -> StructureReport {
    let b_set = crate::counting::clique_cover_mask(g, m);
    let a_set = g.vertex_mask() & !b_set;
    let components = g.components(b_set);
    let mut checks = Vec::new();

    let bad = components
        .iter()
        .copied()
        .find(|&c| c.count_ones() as usize != m || !g.is_clique(c));
    checks.push(match bad {
        None => CheckOutcome::pass(StructureCheck::CliquePartIsDisjointCliques),
        Some(c) => CheckOutcome::fail(
            StructureCheck::CliquePartIsDisjointCliques,
            c,
            g.induced_edges(c),
        ),
    });

    checks.push(rest_check(g, a_set, m, r));

    let mut reach = CheckOutcome::pass(StructureCheck::CliquesReachRest);
    if a_set != 0 {
        for &u in &components {
            let ok = if r == 2 {
                Bits(u).any(|v| g.neighbors(v) & a_set != 0)
            } else {
                Bits(u).any(|v| {
                    Bits(g.neighbors(v) & a_set).any(|a| {
                        let common = g.neighbors(v) & g.neighbors(a) & (u | a_set);
                        has_clique_in(g, common, r - 2)
                    })
                })
            };
            if !ok {
                reach = CheckOutcome::fail(StructureCheck::CliquesReachRest, u, Vec::new());
                break;
            }
        }
    }
    checks.push(reach);
    StructureReport {
        checks,
        b_set,
        a_set,
    }
}

fn rest_check(g: &Graph, a_set: u64, m: usize, r: usize) -> CheckOutcome {
    let check = StructureCheck::RestSmallOrSaturated;
    if a_set.count_ones() as usize <= m {
        return CheckOutcome::pass(check);
    }
    let verts: Vec<usize> = Bits(a_set).collect();
    let h = g.induced(a_set);
    let lift = |e: EdgePair| EdgePair {
        u: verts[e.u],
        v: verts[e.v],
    };
    if r == 2 {
        let km = Pattern::Clique(m);
        if let Some(c) = crate::counting::find_clique_in(&h, h.vertex_mask(), m) {
            let lifted = Bits(c).fold(0u64, |acc, i| acc | 1u64 << verts[i]);
            return CheckOutcome::fail(check, lifted, Vec::new());
        }
        match h.non_edges().into_iter().find(|&e| !new_copy_through(&h, e, &km)) {
            None => CheckOutcome::pass(check),
            Some(e) => CheckOutcome::fail(check, 0, alloc::vec![lift(e)]),
        }
    } else {
        let k = Pattern::Clique(m - r);
        match h.non_edges().into_iter().find(|&e| !new_copy_through(&h, e, &k)) {
            None => CheckOutcome::pass(check),
            Some(e) => CheckOutcome::fail(check, 0, alloc::vec![lift(e)]),
        }
    }
}

impl Graph {
    /// Edges with both ends in `mask`.
    pub fn induced_edges(&self, mask: u64) -> Vec<EdgePair> {
        self.edges()
            .into_iter()
            .filter(|e| e.mask() & mask == e.mask())
            .collect()
    }
}

/// Number of copies of `target` in `g`, short hand used by reports.
pub fn target_count(g: &Graph, target: &Pattern) -> crate::Count {
    count_subgraph_copies(g, target)
}

/// Checks that a detector agrees with generic embedding on `g`.
pub fn detector_agrees(member: &Member, g: &Graph) -> bool {
    member.found_in(g) == EmbeddingPlan::new(member.graph(), &[]).exists(g, &[])
}
