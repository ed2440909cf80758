use crate::graph::{low_bits, Bits, Graph};
use crate::Count;

/// Number of distinct `r`-cycles, each counted once as an edge set.
///
/// Every cycle is enumerated from its smallest vertex `root`, walking only
/// through larger vertices, and is accepted in the orientation whose first
/// neighbor of `root` is smaller than its last.
pub fn count_cycles(g: &Graph, r: usize) -> Count {
    assert!(r >= 3, "cycles have length at least 3");
    let mut total = 0;
    for root in 0..g.order() {
        let allowed = g.vertex_mask() & !low_bits(root + 1);
        for a in Bits(g.neighbors(root) & allowed) {
            let walk = Walk {
                g,
                root,
                first: a,
                allowed,
                len: r,
            };
            total += walk.count(a, 1u64 << root | 1u64 << a, 2);
        }
    }
    total
}

struct Walk<'a> {
    g: &'a Graph,
    root: usize,
    first: usize,
    allowed: u64,
    len: usize,
}

impl Walk<'_> {
    fn count(&self, cur: usize, visited: u64, depth: usize) -> Count {
        let mut next = self.g.neighbors(cur) & self.allowed & !visited;
        if depth + 1 == self.len {
            next &= self.g.neighbors(self.root) & !low_bits(self.first + 1);
            return next.count_ones() as Count;
        }
        Bits(next)
            .map(|w| self.count(w, visited | 1u64 << w, depth + 1))
            .sum()
    }
}

/// True iff `g` has a cycle of length `r`.
pub fn contains_cycle(g: &Graph, r: usize) -> bool {
    assert!(r >= 3, "cycles have length at least 3");
    (0..g.order()).any(|root| {
        let allowed = g.vertex_mask() & !low_bits(root);
        Bits(g.neighbors(root) & allowed)
            .any(|a| has_path(g, a, root, r - 1, allowed & !(1u64 << root) & !(1u64 << a)) )
    })
}

/// True iff there is a simple path with exactly `edges` edges from `from` to
/// `to` whose interior vertices all lie in `interior`.
pub fn has_path(g: &Graph, from: usize, to: usize, edges: usize, interior: u64) -> bool {
    if edges == 1 {
        return g.has_edge(from, to);
    }
    let interior = interior & !(1u64 << from) & !(1u64 << to);
    if (interior.count_ones() as usize) < edges - 1 {
        return false;
    }
    Bits(g.neighbors(from) & interior)
        .any(|w| has_path(g, w, to, edges - 1, interior & !(1u64 << w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ehm_extremal;
    use alloc::vec::Vec;

    /// Independent oracle: count vertex-distinct closed directed walks of
    /// length r by brute force over ordered vertex sequences.
    fn closed_walks(g: &Graph, r: usize) -> Count {
        fn go(g: &Graph, seq: &mut Vec<usize>, r: usize) -> Count {
            if seq.len() == r {
                return g.has_edge(seq[r - 1], seq[0]) as Count;
            }
            let mut t = 0;
            for v in 0..g.order() {
                if !seq.contains(&v) && (seq.is_empty() || g.has_edge(*seq.last().unwrap(), v)) {
                    seq.push(v);
                    t += go(g, seq, r);
                    seq.pop();
                }
            }
            t
        }
        go(g, &mut Vec::new(), r)
    }

    #[test]
    fn examples() {
        assert_eq!(count_cycles(&Graph::complete(4).unwrap(), 3), 4);
        let k2 = Graph::complete(2).unwrap();
        let g = k2.join(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(count_cycles(&g, 4), 6);
        let g = ehm_extremal(7, 5).unwrap();
        assert_eq!(closed_walks(&g, 4) / 8, 30);
        assert_eq!(count_cycles(&g, 4), 30);
        assert_eq!(count_cycles(&g, 5), 36);
        assert_eq!(closed_walks(&g, 5) / 10, 36);
    }

    #[test]
    fn directed_walk_consistency() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3), (1, 5)],
        )
        .unwrap();
        for r in 3..=7 {
            assert_eq!(count_cycles(&g, r) * 2 * r as Count, closed_walks(&g, r), "r={r}");
            assert_eq!(contains_cycle(&g, r), count_cycles(&g, r) > 0);
        }
    }

    #[test]
    fn k5_has_no_c6() {
        let k5 = Graph::complete(5).unwrap();
        assert!(!contains_cycle(&Graph::complete(4).unwrap(), 5));
        assert!(contains_cycle(&k5, 5));
        assert_eq!(count_cycles(&k5, 5), 12);
    }

    #[test]
    fn paths() {
        let p = Graph::path(5).unwrap();
        assert!(has_path(&p, 0, 4, 4, p.vertex_mask()));
        assert!(!has_path(&p, 0, 4, 3, p.vertex_mask()));
        assert!(!has_path(&p, 0, 4, 4, p.vertex_mask() & !(1 << 2)));
    }
}
