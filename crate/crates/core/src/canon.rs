//! Canonical labeling and automorphism groups.
//!
//! Individualization-refinement in the style of McKay's practical graph
//! isomorphism algorithm: ordered partitions are refined to equitable ones,
//! the search tree individualizes vertices of the first non-singleton cell,
//! and leaves are compared by (refinement trace, relabeled adjacency). The
//! canonical form is the maximum leaf. Automorphisms discovered at equal
//! leaves prune the tree through pointwise-stabilizer orbits and yield the
//! group order via the orbit-stabilizer chain along the first path.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{low_bits, Bits, Graph, MAX_ORDER};

/// Byte string identifying an isomorphism class: the order followed by the
/// upper triangle of the canonical adjacency matrix, row by row, packed
/// most-significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self> {
        let code = CanonicalCode(bytes);
        code.to_graph()?;
        Ok(code)
    }

    /// The canonical representative this code was built from.
    pub fn to_graph(&self) -> Result<Graph> {
        let (&n, body) = self.0.split_first().ok_or(Error::MalformedCode)?;
        let n = n as usize;
        if n > MAX_ORDER || body.len() != (n * n.saturating_sub(1) / 2).div_ceil(8) {
            return Err(Error::MalformedCode);
        }
        let mut rows = [0u64; MAX_ORDER];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if body[k / 8] >> (7 - k % 8) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Ok(Graph::from_rows_unchecked(n, rows))
    }

    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = vec![0u8; 1 + bits.div_ceil(8)];
        out[0] = n as u8;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if rows[i] >> j & 1 == 1 {
                    out[1 + k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalCode(out)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// The canonical representative: original vertex `labeling[i]` becomes `i`.
    pub graph: Graph,
    pub labeling: Vec<usize>,
    /// `|Aut(g)|`, or `None` if it does not fit in 128 bits.
    pub group_order: Option<u128>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Canonical {
    pub fn code(&self) -> CanonicalCode {
        CanonicalCode::from_rows(self.graph.order(), self.graph.rows())
    }

    /// Position of original vertex `v` in the canonical order.
    pub fn position(&self, v: usize) -> usize {
        self.labeling.iter().position(|&x| x == v).expect("vertex in labeling")
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    Search::new(g).run()
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).code()
}

/// `|Aut(g)|`; `None` only when the group order exceeds `u128::MAX`.
pub fn automorphism_count(g: &Graph) -> Option<u128> {
    canonical_form(g).group_order
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_code(a) == canonical_code(b)
}

// ---------------------------------------------------------------------------
// Partitions and refinement
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; MAX_ORDER],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_ORDER];
        let len = if n == 0 {
            0
        } else {
            cells[0] = low_bits(n);
            1
        };
        Partition { cells, len }
    }

    #[inline]
    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    fn target_cell(&self) -> Option<usize> {
        self.cells[..self.len].iter().position(|c| c.count_ones() > 1)
    }

    fn insert(&mut self, at: usize, cell: u64) {
        self.cells.copy_within(at..self.len, at + 1);
        self.cells[at] = cell;
        self.len += 1;
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(17) ^ 0x9e37_79b9_7f4a_7c15
}

/// Refines `p` to the coarsest equitable partition finer than it, starting
/// from the given splitters. Fragments of a split cell are ordered by their
/// neighbor count into the splitter, so the result commutes with relabeling.
/// Returns a hash of the refinement trace.
fn refine(g: &Graph, p: &mut Partition, initial: &[u64]) -> u64 {
    let mut queue = [0u64; 4 * MAX_ORDER];
    let (mut head, mut tail) = (0, 0);
    for &w in initial {
        queue[tail] = w;
        tail += 1;
    }
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    let mut groups = [(0u32, 0u64); MAX_ORDER];
    while head < tail {
        let w = queue[head];
        head += 1;
        let mut i = 0;
        while i < p.len {
            let c = p.cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let mut ng = 0;
            for v in Bits(c) {
                let k = (g.neighbors(v) & w).count_ones();
                match groups[..ng].iter_mut().find(|(cnt, _)| *cnt == k) {
                    Some(slot) => slot.1 |= 1u64 << v,
                    None => {
                        groups[ng] = (k, 1u64 << v);
                        ng += 1;
                    }
                }
            }
            if ng == 1 {
                h = mix(h, (i as u64) << 32 | groups[0].0 as u64);
                i += 1;
                continue;
            }
            groups[..ng].sort_unstable_by_key(|&(k, _)| k);
            p.cells[i] = groups[0].1;
            for (j, &(_, m)) in groups[1..ng].iter().enumerate() {
                p.insert(i + 1 + j, m);
            }
            h = mix(h, (i as u64) << 40 | (ng as u64) << 32);
            for &(k, m) in &groups[..ng] {
                h = mix(h, (k as u64) << 8 | m.count_ones() as u64);
                if tail < queue.len() {
                    queue[tail] = m;
                    tail += 1;
                }
            }
            i += ng;
        }
    }
    mix(h, p.len as u64)
}

// ---------------------------------------------------------------------------
// Search tree
// ---------------------------------------------------------------------------

struct Leaf {
    perm: [u8; MAX_ORDER],
    cert: [u64; MAX_ORDER],
    path: Vec<usize>,
    traces: Vec<u64>,
}

enum Flow {
    Continue,
    JumpTo(usize),
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<[u8; MAX_ORDER]>,
    group_order: Option<u128>,
    traces: Vec<u64>,
    path: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            first: None,
            best: None,
            gens: Vec::new(),
            group_order: Some(1),
            traces: Vec::with_capacity(g.order() + 1),
            path: Vec::with_capacity(g.order()),
        }
    }

    fn run(mut self) -> Canonical {
        let n = self.n;
        let mut p = Partition::unit(n);
        let h = refine(self.g, &mut p, &[low_bits(n)]);
        self.node(p, h, true);
        let best = self.best.take().expect("search reaches a leaf");
        let labeling: Vec<usize> = best.perm[..n].iter().map(|&v| v as usize).collect();
        let mut rows = [0u64; MAX_ORDER];
        rows[..n].copy_from_slice(&best.cert[..n]);
        let orbits = orbit_table(n, &self.gens, 0);
        Canonical {
            graph: Graph::from_rows_unchecked(n, rows),
            labeling,
            group_order: self.group_order,
            orbits,
        }
    }

    fn node(&mut self, p: Partition, h: u64, on_first: bool) -> Flow {
        let level = self.path.len();
        self.traces.push(h);
        let flow = self.visit(p, level, on_first);
        self.traces.pop();
        flow
    }

    fn visit(&mut self, p: Partition, level: usize, on_first: bool) -> Flow {
        let eq_first = match &self.first {
            None => true,
            Some(f) => f.traces.get(..=level) == Some(&self.traces[..]),
        };
        let vs_best = match &self.best {
            None => Ordering::Equal,
            Some(b) => cmp_prefix(&self.traces, &b.traces),
        };
        if !eq_first && vs_best == Ordering::Less {
            return Flow::Continue;
        }
        if p.is_discrete(self.n) {
            return self.leaf(&p, eq_first, vs_best);
        }
        let t = p.target_cell().expect("non-discrete partition has a target");
        let cell = p.cells[t];
        let mut explored = 0u64;
        let mut first_child = None;
        for v in Bits(cell) {
            if explored != 0 {
                let orbits = orbit_table(self.n, &self.gens, fixed_mask(&self.path));
                if Bits(explored).any(|w| orbits[w] == orbits[v]) {
                    continue;
                }
            }
            let mut child = p;
            child.cells[t] = cell & !(1u64 << v);
            child.insert(t, 1u64 << v);
            let ch = refine(self.g, &mut child, &[1u64 << v]);
            self.path.push(v);
            let child_first = on_first && first_child.is_none();
            let flow = self.node(child, mix(ch, t as u64), child_first);
            self.path.pop();
            explored |= 1u64 << v;
            first_child.get_or_insert(v);
            if let Flow::JumpTo(to) = flow {
                if to < level {
                    return flow;
                }
            }
        }
        if on_first {
            let v0 = first_child.expect("target cell is non-empty");
            let orbits = orbit_table(self.n, &self.gens, fixed_mask(&self.path));
            let size = Bits(cell).filter(|&w| orbits[w] == orbits[v0]).count() as u128;
            self.group_order = self.group_order.and_then(|o| o.checked_mul(size));
        }
        Flow::Continue
    }

    fn leaf(&mut self, p: &Partition, eq_first: bool, vs_best: Ordering) -> Flow {
        let n = self.n;
        let mut perm = [0u8; MAX_ORDER];
        let mut pos = [0u8; MAX_ORDER];
        for i in 0..n {
            let v = p.cells[i].trailing_zeros() as usize;
            perm[i] = v as u8;
            pos[v] = i as u8;
        }
        let mut cert = [0u64; MAX_ORDER];
        for i in 0..n {
            let mut row = 0;
            for w in Bits(self.g.neighbors(perm[i] as usize)) {
                row |= 1u64 << pos[w];
            }
            cert[i] = row;
        }
        let leaf = Leaf {
            perm,
            cert,
            path: self.path.clone(),
            traces: self.traces.clone(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                perm,
                cert,
                path: leaf.path.clone(),
                traces: leaf.traces.clone(),
            });
            self.best = Some(leaf);
            return Flow::Continue;
        };
        if eq_first && first.cert[..n] == cert[..n] {
            let gamma = map_between(n, &first.perm, &perm);
            let to = common_prefix(&first.path, &self.path);
            self.gens.push(gamma);
            return Flow::JumpTo(to);
        }
        let best = self.best.as_ref().expect("best set with first");
        let by_cert = cert[..n].cmp(&best.cert[..n]);
        match (vs_best, by_cert) {
            (Ordering::Equal, Ordering::Equal) => {
                let gamma = map_between(n, &best.perm, &perm);
                let to = common_prefix(&best.path, &self.path);
                self.gens.push(gamma);
                Flow::JumpTo(to)
            }
            (Ordering::Greater, _) | (Ordering::Equal, Ordering::Greater) => {
                self.best = Some(leaf);
                Flow::Continue
            }
            _ => Flow::Continue,
        }
    }
}

fn cmp_prefix(cur: &[u64], best: &[u64]) -> Ordering {
    let k = cur.len().min(best.len());
    cur[..k].cmp(&best[..k])
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn fixed_mask(path: &[usize]) -> u64 {
    path.iter().fold(0, |m, &v| m | 1u64 << v)
}

/// The automorphism sending leaf `from` to leaf `to` position-wise.
fn map_between(n: usize, from: &[u8; MAX_ORDER], to: &[u8; MAX_ORDER]) -> [u8; MAX_ORDER] {
    let mut gamma = [0u8; MAX_ORDER];
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}

/// Orbit representatives (smallest element) of the group generated by the
/// generators that fix every vertex of `fixed`.
fn orbit_table(n: usize, gens: &[[u8; MAX_ORDER]], fixed: u64) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for gamma in gens {
        if Bits(fixed).any(|v| gamma[v] as usize != v) {
            continue;
        }
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v] as usize));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabeled_c4_has_same_code() {
        let a = Graph::cycle(4).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::path(4).unwrap();
        let k13 = Graph::star(3).unwrap();
        assert_ne!(canonical_code(&p4), canonical_code(&k13));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Graph::complete(4).unwrap()), Some(24));
        assert_eq!(automorphism_count(&Graph::cycle(4).unwrap()), Some(8));
        assert_eq!(automorphism_count(&Graph::path(4).unwrap()), Some(2));
        assert_eq!(automorphism_count(&Graph::empty(0).unwrap()), Some(1));
        assert_eq!(automorphism_count(&Graph::empty(10).unwrap()), Some(3_628_800));
        // Petersen graph
        let pet = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(automorphism_count(&pet), Some(120));
        let k8 = Graph::complete(8).unwrap();
        let two = k8.disjoint_union(&k8).unwrap();
        assert_eq!(automorphism_count(&two), Some(2 * 40320u128 * 40320));
        assert_eq!(automorphism_count(&Graph::complete(34).unwrap()), Some((1..=34u128).product()));
        assert_eq!(automorphism_count(&Graph::complete(64).unwrap()), None);
    }

    #[test]
    fn code_round_trips_to_canonical_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(0..12);
            let g = random_graph(&mut rng, n, 0.4);
            let c = canonical_form(&g);
            let back = c.code().to_graph().unwrap();
            assert_eq!(back, c.graph);
            assert!(is_isomorphic(&back, &g));
            let relabeled = g.permute(&{
                let mut inv = vec![0; n];
                for (i, &v) in c.labeling.iter().enumerate() {
                    inv[v] = i;
                }
                inv
            });
            assert_eq!(relabeled.unwrap(), c.graph);
        }
    }

    #[test]
    fn codes_invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for round in 0..200 {
            let n = rng.gen_range(1..20);
            let p = [0.1, 0.3, 0.5, 0.8][round % 4];
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm).unwrap();
            let (cg, ch) = (canonical_form(&g), canonical_form(&h));
            assert_eq!(cg.code(), ch.code());
            assert_eq!(cg.group_order, ch.group_order);
        }
    }

    #[test]
    fn brute_force_automorphisms_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(1..7);
            let g = random_graph(&mut rng, n, 0.5);
            let mut count = 0u128;
            let mut perm: Vec<usize> = (0..n).collect();
            permutations(&mut perm, 0, &mut |p| {
                if g.permute(p).unwrap() == g {
                    count += 1;
                }
            });
            assert_eq!(automorphism_count(&g), Some(count), "{g:?}");
            let orbits = canonical_form(&g).orbits;
            // vertices in one orbit must have equal degree
            for v in 0..n {
                assert_eq!(g.degree(v), g.degree(orbits[v]));
            }
        }
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn malformed_codes_rejected() {
        assert_eq!(CanonicalCode::from_bytes(vec![]), Err(Error::MalformedCode));
        assert_eq!(CanonicalCode::from_bytes(vec![4]), Err(Error::MalformedCode));
        assert!(CanonicalCode::from_bytes(vec![1]).is_ok());
    }
}
