//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satlab_core::constructions::*;
use satlab_core::counting::*;
use satlab_core::formulas::*;
use satlab_core::saturation::*;
use satlab_core::search::*;
use satlab_core::*;

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut c = 1u128;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// `K_{a} * \bar K_{b}` from an explicit edge list.
fn join_clique_empty(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in u + 1..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

fn subsets_of_size(g: &Graph, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    go(g.order(), k, 0, &mut Vec::new(), f);
}

fn brute_cliques(g: &Graph, r: usize) -> u128 {
    let mut c = 0;
    subsets_of_size(g, r, &mut |s| {
        if s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))) {
            c += 1;
        }
    });
    c
}

fn brute_independent(g: &Graph, r: usize) -> u128 {
    let mut c = 0;
    subsets_of_size(g, r, &mut |s| {
        if s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v))) {
            c += 1;
        }
    });
    c
}

/// Cycles of length `r`, each found once from its smallest vertex in both
/// directions.
fn brute_cycles(g: &Graph, r: usize) -> u128 {
    fn go(g: &Graph, start: usize, v: usize, left: usize, used: u64, c: &mut u128) {
        if left == 0 {
            if g.has_edge(v, start) {
                *c += 1;
            }
            return;
        }
        for w in start + 1..g.order() {
            if used >> w & 1 == 0 && g.has_edge(v, w) {
                go(g, start, w, left - 1, used | 1 << w, c);
            }
        }
    }
    let mut c = 0;
    for s in 0..g.order() {
        go(g, s, s, r - 1, 1 << s, &mut c);
    }
    c / 2
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, out);
            p.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Copies of `f` in `g`: injective edge-preserving maps over automorphisms.
fn brute_copies(g: &Graph, f: &Graph) -> u128 {
    let p = f.order();
    if p > g.order() {
        return 0;
    }
    let perms = permutations(p);
    let fe = f.edges();
    let aut = perms.iter().filter(|s| fe.iter().all(|e| f.has_edge(s[e.u], s[e.v]))).count() as u128;
    let mut maps = 0u128;
    subsets_of_size(g, p, &mut |verts| {
        for s in &perms {
            if fe.iter().all(|e| g.has_edge(verts[s[e.u]], verts[s[e.v]])) {
                maps += 1;
            }
        }
    });
    maps / aut
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn ceil_div(a: i128, b: i128) -> i128 {
    (a + b - 1).div_euclid(b)
}

fn clique_family(s: usize) -> Family {
    Family::single(&Pattern::Clique(s)).unwrap()
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

/// Exhaustive `sat(n, K_s)` with a unique extremal class.
fn edge_saturation_exact() -> Verdict {
    let mut cases = 0;
    for s in 3..=5 {
        for n in s..=8 {
            let res = saturation_number(n, &clique_family(s)).unwrap();
            let want = ((s - 2) * (n - s + 2) + (s - 2) * (s - 3) / 2) as u128;
            let code = canonical_code(&join_clique_empty(s - 2, n - s + 2));
            if res.minimum != Some(want) || res.extremal != [code] {
                return verdict(
                    false,
                    format!(
                        "n={n} s={s}: minimum {:?} (want {want}), {} extremal classes",
                        res.minimum,
                        res.extremal.len()
                    ),
                );
            }
            cases += 1;
        }
    }
    verdict(true, format!("{cases} (n, s) cases, unique extremal class each"))
}

/// Clique counts of the extremal construction against the closed form.
fn construction_clique_counts() -> Verdict {
    let mut cases = 0;
    for s in 3..=8 {
        for r in 2..s {
            for n in s..=20 {
                let g = ehm_extremal(n, s).unwrap();
                let (n_, s_, r_) = (n as u128, s as u128, r as u128);
                let want = (n_ - s_ + 2) * choose(s_ - 2, r_ - 1) + choose(s_ - 2, r_);
                let got = count_cliques(&g, r);
                // The brute oracle is cheap for the smaller orders.
                let brute_ok = n > 14 || brute_cliques(&g, r) == want;
                if got != want || !brute_ok {
                    return verdict(false, format!("n={n} r={r} s={s}: {got} vs {want}"));
                }
                cases += 1;
            }
        }
    }
    verdict(true, format!("{cases} (n, r, s) cases"))
}

/// Minimum triangle count over `K_4`-saturated graphs at small orders.
fn triangle_search() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 6..=8 {
        let cfg = SearchConfig::saturated(n, clique_family(4), Pattern::Clique(3));
        let res = min_count_over_saturated(&cfg).unwrap();
        let min = res.minimum.unwrap();
        let formula = sat_cliques(n, 3, 4).unwrap();
        ok &= min <= formula && formula == (n - 2) as u128;
        let ehm = canonical_code(&join_clique_empty(2, n - 2));
        let finding = if min == formula && res.extremal == [ehm.clone()] {
            "matches n-2, unique".to_string()
        } else {
            format!(
                "threshold finding: {} extremal classes, construction among them: {}",
                res.extremal.len(),
                res.extremal.contains(&ehm)
            )
        };
        notes.push(format!("n={n}: min {min} <= {formula} ({finding})"));
    }
    verdict(ok, notes.join("; "))
}

/// Triangle count of `(K_{s-1} - e) * \bar K_{n-s+1}`.
fn near_extremal_triangles() -> Verdict {
    let mut cases = 0;
    let mut sample = String::new();
    for s in 4..=5 {
        for n in s..=14 {
            let g = remark_near_extremal(n, s).unwrap();
            let (n_, s_) = (n as u128, s as u128);
            let want = (2 * choose(s_ - 3, 1) + choose(s_ - 3, 2)) * (n_ - s_ + 1)
                + 2 * choose(s_ - 3, 2)
                + choose(s_ - 3, 3);
            let got = count_cliques(&g, 3);
            if got != want || brute_cliques(&g, 3) != want {
                return verdict(false, format!("n={n} s={s}: {got} vs {want}"));
            }
            if (n, s) == (10, 5) {
                sample = format!("{got} at (10,5)");
            }
            cases += 1;
        }
    }
    let ok = sample == "32 at (10,5)";
    verdict(ok, format!("{cases} cases, {sample}"))
}

/// Cycle counts of the extremal construction against the leading term.
fn construction_cycle_counts() -> Verdict {
    let mut cases = 0;
    for (r, s) in [(4, 4), (5, 5), (7, 6)] {
        for n in s..=12 {
            let g = ehm_extremal(n, s).unwrap();
            let exact = brute_cycles(&g, r);
            let lead = join_cycle_leading(n, r, s).unwrap();
            if count_cycles(&g, r) != exact || lead != Q::from_integer(exact as i128) {
                return verdict(false, format!("C{r} in ehm({n},{s}): {exact} vs {lead}"));
            }
            cases += 1;
        }
    }
    // (r, s) = (4, 5): the surplus grows linearly, so surplus / n stays bounded.
    let mut worst = Q::from_integer(0);
    let mut at7 = String::new();
    for n in 5..=12 {
        let g = ehm_extremal(n, 5).unwrap();
        let exact = brute_cycles(&g, 4) as i128;
        let lead = join_cycle_leading(n, 4, 5).unwrap();
        let surplus = Q::from_integer(exact) - lead;
        if count_cycles(&g, 4) as i128 != exact || surplus <= Q::from_integer(0) {
            return verdict(false, format!("C4 in ehm({n},5): {exact} vs {lead}"));
        }
        if n == 7 {
            at7 = format!("{exact} vs {lead} at n=7");
        }
        worst = worst.max(surplus / Q::from_integer(n as i128));
        cases += 1;
    }
    let ok = at7 == "30 vs 18 at n=7" && worst <= Q::from_integer(3);
    verdict(ok, format!("{cases} cases; (4,5): {at7}, max surplus/n {worst}"))
}

/// The origin is the unique grid minimizer of the essential count.
fn grid_minimizer() -> Verdict {
    let mut failures = Vec::new();
    let mut cases = 0;
    for s in 4..=10usize {
        for k in 1..=(s - 2).min(8) {
            if k * k < 4 * (s - 2) {
                continue;
            }
            cases += 1;
            let g = minimize_f_grid(s, k).unwrap();
            // Independent look at the direction the grid search flags: moving
            // only the last coordinate.
            let origin = essential_count_f(&FVector::new(s, vec![0; s - 2]).unwrap());
            let mut last = vec![0; s - 2];
            last[s - 3] = k;
            let moved = essential_count_f(&FVector::new(s, last).unwrap());
            let positive_gap = g.gap.is_some_and(|e| e > Q::from_integer(0));
            if !(g.unique_origin() && positive_gap) {
                failures.push(format!(
                    "(s={s},k={k}): {} minimizers, f(0..0)={origin}, f(0..0,{k})={moved}",
                    g.argmin.len()
                ));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{cases} (s, k) cases")
    } else {
        format!("{}/{cases} cases not unique; first {}", failures.len(), failures[0])
    };
    verdict(failures.is_empty(), detail)
}

/// Exhaustive saturation numbers of the three-member family for `m = 4`.
fn family_oscillation() -> Verdict {
    let fam = family_f(4).unwrap();
    let mut values = Vec::new();
    let mut ok = true;
    for n in 4..=10usize {
        let res = saturation_number(n, &fam).unwrap();
        let Some(v) = res.minimum else {
            return verdict(false, format!("no saturated graph at n={n}"));
        };
        let v = v as i128;
        ok &= match n {
            4 => v == 6,
            8 => v <= 12,
            _ if n % 4 != 0 => v >= ceil_div(7 * (n as i128 - 4), 4),
            _ => true,
        };
        values.push(format!("{n}:{v}"));
    }
    for m in 4..=12usize {
        let (a, b) = family_clique_bound_coeffs(m, 2, RangeMode::Permissive).unwrap();
        let c2 = choose(m as u128, 2) as i128;
        ok &= a == Q::new(c2, m as i128) && b == Q::new(c2 + 1, m as i128) && a < b;
    }
    verdict(ok, format!("sat(n, F4) = {}; coefficient gap m=4..12", values.join(" ")))
}

/// `m C(m-r-2, r-1) > C(m, r)` over the stated window.
fn binomial_claim() -> Verdict {
    let mut cases = 0;
    for r in 2..=6usize {
        let lo = 2 * r * r + 2 * r;
        for m in lo..=lo + 40 {
            let (m_, r_) = (m as u128, r as u128);
            let oracle = m_ * choose(m_ - r_ - 2, r_ - 1) > choose(m_, r_);
            if !oracle || binomial_inequality_check(m, r) != oracle {
                return verdict(false, format!("m={m} r={r}"));
            }
            cases += 1;
        }
    }
    verdict(true, format!("{cases} (m, r) cases"))
}

fn dumbbell_family(m: usize) -> Family {
    Family::with_members(
        format!("B{m}{m}"),
        vec![Member::new(dumbbell(m).unwrap(), Detector::Dumbbell(m))],
    )
}

/// Dumbbell-saturated constructions, the order-9 sweep and the path union.
fn closing_constructions() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut claim = |name: String, passed: bool| {
        ok &= passed;
        notes.push(format!("{name} {}", if passed { "ok" } else { "FAILS" }));
    };

    let b44 = dumbbell_family(4);
    let g = clique_union(8, 4).unwrap();
    claim("clique_union(8,4)".into(), is_saturated(&g, &b44) && brute_cycles(&g, 5) == 0);

    let res = min_count_over_saturated(&SearchConfig::saturated(9, b44, Pattern::Cycle(5))).unwrap();
    claim(
        format!("n=9 sweep ({} saturated, min C5 {:?})", res.saturated_count, res.minimum),
        res.saturated_count > 0 && res.minimum.is_some_and(|m| m >= 1),
    );

    let b33 = dumbbell_family(3);
    for t in 2..=3 {
        let a = triangles_with_apex(t).unwrap();
        claim(format!("triangles_with_apex({t})"), is_saturated(&a, &b33) && brute_cycles(&a, 4) == 0);
        let b = triangles_two_apexes(t).unwrap();
        claim(format!("triangles_two_apexes({t})"), is_saturated(&b, &b33) && brute_cycles(&b, 4) == 0);
    }

    let p3 = dumbbell_family(2);
    let g = path_union(7).unwrap();
    let sat = is_saturated(&g, &p3);
    let mut name = "path_union(7)".to_string();
    if !sat {
        let e = unsaturated_pair(&g, &p3).unwrap();
        name += &format!(" [adding {}-{} creates no 3-edge path]", e.u, e.v);
    }
    claim(name, sat && brute_cycles(&g, 3) == 0);
    verdict(ok, notes.join("; "))
}

/// Edge-class and structure checks over every saturated graph.
fn structural_suites() -> Verdict {
    let mut clique_graphs = 0;
    for s in 4..=5 {
        let fam = clique_family(s);
        for n in s..=8 {
            let mut bad = None;
            for_each_graph(n, DEFAULT_CAP, |g| {
                if is_saturated(g, &fam) {
                    clique_graphs += 1;
                    for r in 2..s {
                        if !check_lemma2(g, r, s).unwrap().passed {
                            bad = Some(format!("n={n} s={s} r={r}"));
                            return false;
                        }
                    }
                }
                true
            })
            .unwrap();
            if let Some(b) = bad {
                return verdict(false, format!("edge-class check fails at {b}"));
            }
        }
    }
    let fam = family_f(4).unwrap();
    let mut family_graphs = 0;
    for n in 1..=9 {
        let mut bad = None;
        for_each_graph(n, DEFAULT_CAP, |g| {
            if is_saturated(g, &fam) {
                family_graphs += 1;
                let rep = family_structure_report(g, 4, 2).unwrap();
                if let Some(c) = rep.checks.iter().find(|c| !c.passed) {
                    bad = Some(format!("n={n}: {}", c.check.id()));
                    return false;
                }
            }
            true
        })
        .unwrap();
        if let Some(b) = bad {
            return verdict(false, format!("structure check fails at {b}"));
        }
    }
    verdict(
        true,
        format!("{clique_graphs} clique-saturated graphs, {family_graphs} F4-saturated graphs"),
    )
}

/// Pattern counts and complement duality against brute force.
fn counting_oracles() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7_1ab);
    for i in 0..500 {
        let g = random_graph(&mut rng, 8);
        let f = random_graph(&mut rng, 5);
        let want = brute_copies(&g, &f);
        let got = count_subgraph_copies(&g, &Pattern::General(f.clone()));
        if got != want {
            return verdict(false, format!("pair {i}: {got} vs {want}"));
        }
    }
    for i in 0..200 {
        let g = random_graph(&mut rng, 10);
        let l = rng.gen_range(1..=g.order());
        let c = count_cliques(&g, l);
        let ind = count_independent_sets(&g.complement(), l);
        if c != ind || c != brute_cliques(&g, l) || ind != brute_independent(&g.complement(), l) {
            return verdict(false, format!("graph {i}, l={l}: {c} vs {ind}"));
        }
    }
    verdict(true, "500 pattern pairs, 200 duality checks")
}

/// Strong saturation never needs more cliques than saturation.
fn strong_vs_plain() -> Verdict {
    let mut cases = 0;
    for s in 4..=5 {
        for n in s..=8 {
            for r in 2..s {
                let plain = SearchConfig::saturated(n, clique_family(s), Pattern::Clique(r));
                let strong = SearchConfig::strongly_saturated(n, Pattern::Clique(s), Pattern::Clique(r));
                let sat = min_count_over_saturated(&plain).unwrap().minimum;
                let ssat = min_count_over_saturated(&strong).unwrap().minimum;
                match (ssat, sat) {
                    (Some(a), Some(b)) if a <= b => cases += 1,
                    _ => return verdict(false, format!("n={n} s={s} r={r}: ssat {ssat:?}, sat {sat:?}")),
                }
            }
        }
    }
    verdict(true, format!("{cases} (n, r, s) cases"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("edge saturation exact", edge_saturation_exact),
        ("construction clique counts", construction_clique_counts),
        ("triangle search", triangle_search),
        ("near-extremal triangles", near_extremal_triangles),
        ("construction cycle counts", construction_cycle_counts),
        ("grid minimizer", grid_minimizer),
        ("family oscillation", family_oscillation),
        ("binomial claim", binomial_claim),
        ("closing constructions", closing_constructions),
        ("structural suites", structural_suites),
        ("counting oracles", counting_oracles),
        ("strong vs plain", strong_vs_plain),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        failed += usize::from(!v.passed);
        println!(
            "criterion {:>2} {name}: {} ({:.1}s) {}",
            i + 1,
            if v.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            v.detail
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
