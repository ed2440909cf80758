use alloc::vec::Vec;

use crate::graph::{Bits, Graph};
use crate::Count;

/// Binomial coefficient as a wide integer. Panics if the value does not fit.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: Count = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact; cancel first to stay in range.
        let d = (i + 1) as Count;
        let g = gcd(acc, d);
        acc = (acc / g)
            .checked_mul((n - i) as Count / (d / g))
            .expect("binomial coefficient overflows 128 bits");
    }
    acc
}

fn gcd(mut a: Count, mut b: Count) -> Count {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of `r`-vertex subsets of `g` that span a complete subgraph.
pub fn count_cliques(g: &Graph, r: usize) -> Count {
    if r == 0 {
        return 1;
    }
    count_in(g, g.vertex_mask(), r)
}

/// Cliques of size `r` inside the candidate set `p`.
pub(crate) fn count_in(g: &Graph, p: u64, r: usize) -> Count {
    let size = p.count_ones() as usize;
    if size < r {
        return 0;
    }
    if r == 1 {
        return size as Count;
    }
    if g.is_clique(p) {
        return binomial(size as u64, r as u64);
    }
    let mut total = 0;
    let mut rest = p;
    while rest.count_ones() as usize >= r {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += count_in(g, rest & g.neighbors(v), r - 1);
    }
    total
}

/// Number of `l`-subsets spanning no edge.
pub fn count_independent_sets(g: &Graph, l: usize) -> Count {
    count_cliques(&g.complement(), l)
}

/// True iff the candidate set `p` contains a clique of size `r`.
pub fn has_clique_in(g: &Graph, p: u64, r: usize) -> bool {
    find_clique_in(g, p, r).is_some()
}

/// Some `r`-clique inside `p`, as a vertex mask.
pub fn find_clique_in(g: &Graph, p: u64, r: usize) -> Option<u64> {
    if r == 0 {
        return Some(0);
    }
    let mut rest = p;
    while rest.count_ones() as usize >= r {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let bit = 1u64 << v;
        if r == 1 {
            return Some(bit);
        }
        if let Some(c) = find_clique_in(g, rest & g.neighbors(v), r - 1) {
            return Some(c | bit);
        }
    }
    None
}

/// Calls `f` with the vertex mask of every `r`-clique inside `p`.
/// Stops early when `f` returns `false`; the return value reports whether
/// enumeration ran to completion.
pub fn for_each_clique_in(g: &Graph, p: u64, r: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn go(g: &Graph, p: u64, r: usize, acc: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if r == 0 {
            return f(acc);
        }
        let mut rest = p;
        while rest.count_ones() as usize >= r {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !go(g, rest & g.neighbors(v), r - 1, acc | 1u64 << v, f) {
                return false;
            }
        }
        true
    }
    go(g, p, r, 0, f)
}

/// All `r`-cliques of `g` as vertex masks, in lexicographic order.
pub fn cliques(g: &Graph, r: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_clique_in(g, g.vertex_mask(), r, &mut |c| {
        out.push(c);
        true
    });
    out
}

/// Union of all `r`-cliques of `g`.
pub fn clique_cover_mask(g: &Graph, r: usize) -> u64 {
    let mut covered = 0u64;
    for v in Bits(g.vertex_mask()) {
        if covered >> v & 1 == 1 {
            continue;
        }
        if let Some(c) = find_clique_in(g, g.neighbors(v), r.saturating_sub(1)) {
            covered |= c | 1u64 << v;
        }
    }
    covered
}
