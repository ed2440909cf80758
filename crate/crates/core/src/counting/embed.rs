//! Backtracking subgraph embedding with bitset candidate sets.

use alloc::vec::Vec;

use crate::graph::{Bits, Graph, MAX_ORDER};
use crate::Count;

/// A fixed search order for a pattern graph.
#[derive(Clone, Debug)]
pub struct EmbeddingPlan {
    pattern_order: usize,
    /// Pattern vertex placed at each step.
    order: Vec<usize>,
    /// For each step, the steps already placed that must be adjacent.
    back: Vec<u64>,
    degree: Vec<usize>,
}

impl EmbeddingPlan {
    /// Plan that places the pattern vertices in `seed` first, then grows
    /// greedily by connectivity to the placed set (ties by degree).
    pub fn new(pattern: &Graph, seed: &[usize]) -> Self {
        let p = pattern.order();
        let mut order: Vec<usize> = seed.to_vec();
        let mut placed: u64 = seed.iter().fold(0, |m, &v| m | 1u64 << v);
        while order.len() < p {
            let next = Bits(pattern.vertex_mask() & !placed)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        pattern.degree(v),
                        core::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= 1u64 << next;
        }
        let mut step_of = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            step_of[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                Bits(pattern.neighbors(v))
                    .filter(|&w| step_of[w] < i)
                    .fold(0u64, |m, w| m | 1u64 << step_of[w])
            })
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        EmbeddingPlan {
            pattern_order: p,
            order,
            back,
            degree,
        }
    }

    /// Number of injective edge-preserving maps into `host` that send the
    /// first `fixed.len()` planned vertices to `fixed`.
    pub fn count(&self, host: &Graph, fixed: &[usize]) -> Count {
        let mut st = State::new(self, host, fixed);
        match st {
            Some(ref mut s) => s.run(fixed.len(), &mut |_| true).0,
            None => 0,
        }
    }

    /// True iff at least one such map exists.
    pub fn exists(&self, host: &Graph, fixed: &[usize]) -> bool {
        self.find(host, fixed).is_some()
    }

    /// One such map, as `image[pattern_vertex]`.
    pub fn find(&self, host: &Graph, fixed: &[usize]) -> Option<Vec<usize>> {
        let mut st = State::new(self, host, fixed)?;
        let mut found = None;
        let order = &self.order;
        st.run(fixed.len(), &mut |map| {
            let mut image = alloc::vec![0; order.len()];
            for (i, &pv) in order.iter().enumerate() {
                image[pv] = map[i];
            }
            found = Some(image);
            false
        });
        found
    }
}

struct State<'a> {
    plan: &'a EmbeddingPlan,
    host: &'a Graph,
    map: [usize; MAX_ORDER],
    used: u64,
    /// Host vertices of degree at least `d`, indexed by `d`.
    deg_ok: [u64; MAX_ORDER + 1],
}

impl<'a> State<'a> {
    fn new(plan: &'a EmbeddingPlan, host: &'a Graph, fixed: &[usize]) -> Option<Self> {
        if plan.pattern_order > host.order() {
            return None;
        }
        let mut deg_ok = [0u64; MAX_ORDER + 1];
        for v in 0..host.order() {
            let d = host.degree(v);
            for slot in deg_ok.iter_mut().take(d + 1) {
                *slot |= 1u64 << v;
            }
        }
        let mut st = State {
            plan,
            host,
            map: [0; MAX_ORDER],
            used: 0,
            deg_ok,
        };
        for (i, &h) in fixed.iter().enumerate() {
            if h >= host.order() || st.used >> h & 1 == 1 || st.candidates(i) >> h & 1 == 0 {
                return None;
            }
            st.map[i] = h;
            st.used |= 1u64 << h;
        }
        Some(st)
    }

    #[inline]
    fn candidates(&self, step: usize) -> u64 {
        let mut c = self.deg_ok[self.plan.degree[step]] & !self.used;
        for j in Bits(self.plan.back[step]) {
            c &= self.host.neighbors(self.map[j]);
        }
        c
    }

    /// Returns (count, completed). `visit` returning false aborts.
    fn run(&mut self, step: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> (Count, bool) {
        let p = self.plan.pattern_order;
        if step == p {
            return (1, visit(&self.map[..p]));
        }
        let cands = self.candidates(step);
        if step + 1 == p {
            if cands == 0 {
                return (0, true);
            }
            let mut total = 0;
            for h in Bits(cands) {
                self.map[step] = h;
                total += 1;
                if !visit(&self.map[..p]) {
                    return (total, false);
                }
            }
            return (total, true);
        }
        let mut total = 0;
        for h in Bits(cands) {
            self.map[step] = h;
            self.used |= 1u64 << h;
            let (c, go_on) = self.run(step + 1, visit);
            self.used &= !(1u64 << h);
            total += c;
            if !go_on {
                return (total, false);
            }
        }
        (total, true)
    }
}

/// Number of injective edge-preserving maps from `pattern` into `host`.
pub fn count_embeddings(host: &Graph, pattern: &Graph) -> Count {
    EmbeddingPlan::new(pattern, &[]).count(host, &[])
}

/// True iff `host` has a (not necessarily induced) subgraph isomorphic to
/// `pattern`.
pub fn embeds(host: &Graph, pattern: &Graph) -> bool {
    EmbeddingPlan::new(pattern, &[]).exists(host, &[])
}
