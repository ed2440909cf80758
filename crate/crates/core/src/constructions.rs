//! Deterministic builders for the named graphs and families.
//!
//! Labeling conventions (stable, so graph6 output is reproducible):
//!
//! * `ehm_extremal(n, s)`: clique `0..s-2`, independent set after it.
//! * `remark_near_extremal(n, s)`: `K_{s-1}` on `0..s-1` minus the edge
//!   `{0, 1}`, independent set after it.
//! * `dumbbell(m)`: cliques on `0..m` and `m..2m`, bridge `{0, m}`.
//! * `v_graph(m)`: clique `0..m`, pendant vertices `m` and `m + 1` on `0`.
//! * `lambda_graph_r(m, r)`: clique `0..m`, vertex `m` joined to `0..r`.
//! * `v_graph_r(m, r)`: clique `0..m` and clique `{0} ∪ m..2m-r`.
//! * `overlap_cliques(r, j)`: cliques `0..r` and `r-j..2r-j`.
//! * `clique_union(n, m)`: cliques on consecutive blocks of `m`.
//! * `triangles_with_apex(t)`: triangle `j` on `3j..3j+3`, apex `3t` joined
//!   to each `3j`.
//! * `triangles_two_apexes(t)`: `a = 0`, `b = 1`, and for `j = 1..=t`
//!   `x_j = 3j - 1`, `y_j = 3j`, `z_j = 3j + 1`.
//! * `path_union(n)`: path `0-1-2` and edges `{3,4}, {5,6}, ...`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::saturation::{Detector, Family, Member};

/// Whether the `m >= 2r^2 + 2r` range of the generalized family is enforced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeMode {
    Strict,
    Permissive,
}

fn add_clique(edges: &mut Vec<(usize, usize)>, verts: &[usize]) {
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            edges.push((a, b));
        }
    }
}

pub fn ehm_extremal(n: usize, s: usize) -> Result<Graph> {
    if s < 2 || n < s {
        return Err(Error::InvalidParameter("ehm_extremal needs n >= s >= 2"));
    }
    Graph::complete(s - 2)?.join(&Graph::empty(n - s + 2)?)
}

pub fn remark_near_extremal(n: usize, s: usize) -> Result<Graph> {
    if s < 3 || n < s {
        return Err(Error::InvalidParameter("remark_near_extremal needs n >= s >= 3"));
    }
    let mut core = Vec::new();
    add_clique(&mut core, &(0..s - 1).collect::<Vec<_>>());
    core.retain(|&e| e != (0, 1));
    Graph::from_edges(s - 1, &core)?.join(&Graph::empty(n - s + 1)?)
}

/// Two disjoint `K_m` joined by one edge. Defined for `m >= 2` (`B_{2,2}` is
/// the path with three edges).
pub fn dumbbell(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter("dumbbell needs m >= 2"));
    }
    if 2 * m > crate::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge(2 * m));
    }
    let mut edges = Vec::new();
    add_clique(&mut edges, &(0..m).collect::<Vec<_>>());
    add_clique(&mut edges, &(m..2 * m).collect::<Vec<_>>());
    edges.push((0, m));
    Graph::from_edges(2 * m, &edges)
}

fn check_family_m(m: usize) -> Result<()> {
    if m < 4 {
        Err(Error::InvalidParameter("family graphs need m >= 4"))
    } else {
        Ok(())
    }
}

/// `K_m` plus two pendant edges from vertex 0 to two new vertices.
pub fn v_graph(m: usize) -> Result<Graph> {
    check_family_m(m)?;
    let mut edges = Vec::new();
    add_clique(&mut edges, &(0..m).collect::<Vec<_>>());
    edges.push((0, m));
    edges.push((0, m + 1));
    Graph::from_edges(m + 2, &edges)
}

/// `K_m` plus one vertex with exactly two neighbors in it.
pub fn lambda_graph(m: usize) -> Result<Graph> {
    check_family_m(m)?;
    lambda_unchecked(m, 2)
}

fn lambda_unchecked(m: usize, r: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    add_clique(&mut edges, &(0..m).collect::<Vec<_>>());
    edges.extend((0..r).map(|i| (i, m)));
    Graph::from_edges(m + 1, &edges)
}

/// `{B_{m,m}, V_m, Λ_m}` with clique-based detectors.
pub fn family_f(m: usize) -> Result<Family> {
    check_family_m(m)?;
    Ok(Family::with_members(
        alloc::format!("F({m})"),
        alloc::vec![
            Member::new(dumbbell(m)?, Detector::Dumbbell(m)),
            Member::new(v_graph(m)?, Detector::Pendants(m)),
            Member::new(lambda_graph(m)?, Detector::Lambda { m, r: 2 }),
        ],
    ))
}

fn check_generalized(m: usize, r: usize, mode: RangeMode) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter("generalized family needs r >= 2"));
    }
    match mode {
        RangeMode::Strict if m < 2 * r * r + 2 * r => {
            Err(Error::InvalidParameter("generalized family needs m >= 2r^2 + 2r"))
        }
        RangeMode::Permissive if m <= r => Err(Error::InvalidParameter("need m > r")),
        _ => Ok(()),
    }
}

/// `K_m` and `K_{m-r+1}` sharing exactly one vertex.
pub fn v_graph_r(m: usize, r: usize, mode: RangeMode) -> Result<Graph> {
    check_generalized(m, r, mode)?;
    let n = 2 * m - r;
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = Vec::new();
    add_clique(&mut edges, &(0..m).collect::<Vec<_>>());
    let second: Vec<usize> = core::iter::once(0).chain(m..n).collect();
    add_clique(&mut edges, &second);
    Graph::from_edges(n, &edges)
}

/// `K_m` plus one vertex with exactly `r` neighbors in it.
pub fn lambda_graph_r(m: usize, r: usize, mode: RangeMode) -> Result<Graph> {
    check_generalized(m, r, mode)?;
    lambda_unchecked(m, r)
}

/// `{B_{m,m}, V_{m,r}, Λ_{m,r}}` with clique-based detectors.
pub fn family_f_r(m: usize, r: usize, mode: RangeMode) -> Result<Family> {
    check_generalized(m, r, mode)?;
    Ok(Family::with_members(
        alloc::format!("F({m},{r})"),
        alloc::vec![
            Member::new(dumbbell(m)?, Detector::Dumbbell(m)),
            Member::new(v_graph_r(m, r, mode)?, Detector::SharedVertex { m, r }),
            Member::new(lambda_graph_r(m, r, mode)?, Detector::Lambda { m, r }),
        ],
    ))
}

/// Two `K_r` sharing exactly `j` vertices.
pub fn overlap_cliques(r: usize, j: usize) -> Result<Graph> {
    if j == 0 || j >= r {
        return Err(Error::InvalidParameter("overlap needs 1 <= j <= r - 1"));
    }
    let n = 2 * r - j;
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = Vec::new();
    add_clique(&mut edges, &(0..r).collect::<Vec<_>>());
    add_clique(&mut edges, &(r - j..n).collect::<Vec<_>>());
    Graph::from_edges(n, &edges)
}

/// `n / m` disjoint copies of `K_m`.
pub fn clique_union(n: usize, m: usize) -> Result<Graph> {
    if m < 2 || n % m != 0 {
        return Err(Error::InvalidParameter("clique_union needs m >= 2 dividing n"));
    }
    let mut edges = Vec::new();
    for b in 0..n / m {
        add_clique(&mut edges, &(b * m..(b + 1) * m).collect::<Vec<_>>());
    }
    Graph::from_edges(n, &edges)
}

/// `t` disjoint triangles and an apex adjacent to one vertex of each.
pub fn triangles_with_apex(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidParameter("triangles_with_apex needs t >= 2"));
    }
    let mut edges = Vec::new();
    for j in 0..t {
        add_clique(&mut edges, &[3 * j, 3 * j + 1, 3 * j + 2]);
        edges.push((3 * j, 3 * t));
    }
    Graph::from_edges(3 * t + 1, &edges)
}

/// `t` disjoint triangles `x_j y_j z_j` with apex `a` on every `x_j` and apex
/// `b` on `x_1` and on `y_j` for `j >= 2`.
pub fn triangles_two_apexes(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidParameter("triangles_two_apexes needs t >= 2"));
    }
    let (a, b) = (0, 1);
    let x = |j: usize| 3 * j - 1;
    let y = |j: usize| 3 * j;
    let z = |j: usize| 3 * j + 1;
    let mut edges = Vec::new();
    for j in 1..=t {
        add_clique(&mut edges, &[x(j), y(j), z(j)]);
        edges.push((a, x(j)));
        if j >= 2 {
            edges.push((b, y(j)));
        }
    }
    edges.push((b, x(1)));
    Graph::from_edges(3 * t + 2, &edges)
}

/// A path with two edges plus `(n - 3) / 2` disjoint edges.
pub fn path_union(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 0 {
        return Err(Error::InvalidParameter("path_union needs odd n >= 4"));
    }
    let mut edges = alloc::vec![(0, 1), (1, 2)];
    edges.extend((3..n).step_by(2).map(|i| (i, i + 1)));
    Graph::from_edges(n, &edges)
}

/// A named construction with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub name: String,
    pub params: Vec<usize>,
}

/// Names accepted by [`ConstructionSpec::build`], with parameter names.
pub const CONSTRUCTIONS: &[(&str, &[&str])] = &[
    ("ehm", &["n", "s"]),
    ("remark", &["n", "s"]),
    ("dumbbell", &["m"]),
    ("v", &["m"]),
    ("lambda", &["m"]),
    ("v-r", &["m", "r"]),
    ("lambda-r", &["m", "r"]),
    ("overlap", &["r", "j"]),
    ("clique-union", &["n", "m"]),
    ("triangles-apex", &["t"]),
    ("triangles-two-apexes", &["t"]),
    ("path-union", &["n"]),
    ("complete", &["n"]),
    ("empty", &["n"]),
    ("cycle", &["n"]),
    ("path", &["n"]),
];

impl ConstructionSpec {
    pub fn new(name: &str, params: &[usize]) -> Self {
        ConstructionSpec {
            name: name.into(),
            params: params.to_vec(),
        }
    }

    /// Builds the graph. `v-r` and `lambda-r` use strict parameter ranges.
    pub fn build(&self) -> Result<Graph> {
        let arity = CONSTRUCTIONS
            .iter()
            .find(|(n, _)| *n == self.name)
            .map(|(_, p)| p.len())
            .ok_or(Error::InvalidParameter("unknown construction"))?;
        if self.params.len() != arity {
            return Err(Error::InvalidParameter("wrong number of construction parameters"));
        }
        let p = &self.params;
        match self.name.as_str() {
            "ehm" => ehm_extremal(p[0], p[1]),
            "remark" => remark_near_extremal(p[0], p[1]),
            "dumbbell" => dumbbell(p[0]),
            "v" => v_graph(p[0]),
            "lambda" => lambda_graph(p[0]),
            "v-r" => v_graph_r(p[0], p[1], RangeMode::Strict),
            "lambda-r" => lambda_graph_r(p[0], p[1], RangeMode::Strict),
            "overlap" => overlap_cliques(p[0], p[1]),
            "clique-union" => clique_union(p[0], p[1]),
            "triangles-apex" => triangles_with_apex(p[0]),
            "triangles-two-apexes" => triangles_two_apexes(p[0]),
            "path-union" => path_union(p[0]),
            "complete" => Graph::complete(p[0]),
            "empty" => Graph::empty(p[0]),
            "cycle" => Graph::cycle(p[0]),
            "path" => Graph::path(p[0]),
            _ => unreachable!("name checked above"),
        }
    }
}
