//! Named verification suites run by `satlab verify`.

use std::fmt;

use satlab_core::canon::canonical_code;
use satlab_core::constructions::*;
use satlab_core::counting::{count_cliques, count_cycles, Pattern};
use satlab_core::formulas::*;
use satlab_core::saturation::{is_saturated, Detector, Family, Member};
use satlab_core::search::SearchConfig;
use satlab_core::Result;

use crate::parallel::run_parallel;

pub const SUITES: [&str; 6] = ["thm1", "thm3-formula", "cycles", "lemma12", "families", "section9"];

#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub cases: Vec<Case>,
}

impl SuiteReport {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(Case {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.cases.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{} cases passed", self.cases.len())
    }
}

pub fn run_suite(name: &str, jobs: usize) -> Option<Result<SuiteReport>> {
    Some(match name {
        "thm1" => thm1(jobs),
        "thm3-formula" => Ok(thm3_formula()),
        "cycles" => Ok(cycles()),
        "lemma12" => lemma12(),
        "families" => families(jobs),
        "section9" => section9(jobs),
        _ => return None,
    })
}

fn clique_family(s: usize) -> Family {
    Family::single(&Pattern::Clique(s)).expect("valid clique")
}

fn thm1(jobs: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::default();
    for s in 3..=5 {
        for n in s..=8 {
            let res = run_parallel(&SearchConfig::saturated(n, clique_family(s), Pattern::Clique(2)), jobs, None)?;
            let want = ehm_sat(n, s)?;
            let code = canonical_code(&ehm_extremal(n, s)?);
            rep.check(
                format!("sat(n={n}, K{s})"),
                res.minimum == Some(want) && res.extremal == [code],
                format!("minimum {:?}, expected {want}; {} extremal classes", res.minimum, res.extremal.len()),
            );
        }
    }
    Ok(rep)
}

fn thm3_formula() -> SuiteReport {
    let mut rep = SuiteReport::default();
    for s in 3..=8 {
        for r in 2..s {
            for n in s..=20 {
                let g = ehm_extremal(n, s).expect("valid parameters");
                let got = count_cliques(&g, r);
                let want = sat_cliques(n, r, s).expect("valid parameters");
                rep.check(format!("K{r} in ehm({n},{s})"), got == want, format!("{got} vs {want}"));
            }
        }
    }
    for s in 4..=5 {
        for n in s..=14 {
            let g = remark_near_extremal(n, s).expect("valid parameters");
            let got = count_cliques(&g, 3) as i128;
            let (n_, s_) = (n as i128, s as i128);
            let want = (2 * binom(s_ - 3, 1) + binom(s_ - 3, 2)) * (n_ - s_ + 1) + 2 * binom(s_ - 3, 2) + binom(s_ - 3, 3);
            rep.check(format!("K3 in remark({n},{s})"), got == want, format!("{got} vs {want}"));
        }
    }
    rep
}

fn cycles() -> SuiteReport {
    let mut rep = SuiteReport::default();
    for (r, s) in [(4, 4), (5, 5), (7, 6)] {
        for n in s..=12 {
            let exact = count_cycles(&ehm_extremal(n, s).expect("valid"), r) as i128;
            let lead = join_cycle_leading(n, r, s).expect("valid");
            rep.check(
                format!("C{r} in ehm({n},{s})"),
                Q::from_integer(exact) == lead,
                format!("{exact} vs {lead}"),
            );
        }
    }
    for n in 5..=12 {
        let exact = count_cycles(&ehm_extremal(n, 5).expect("valid"), 4) as i128;
        let lead = join_cycle_leading(n, 4, 5).expect("valid");
        let surplus = Q::from_integer(exact) - lead;
        rep.check(
            format!("C4 surplus in ehm({n},5)"),
            surplus == Q::from_integer(3 * (n as i128 - 3)),
            format!("exact {exact}, leading {lead}, surplus {surplus}"),
        );
    }
    rep
}

fn lemma12() -> Result<SuiteReport> {
    let mut rep = SuiteReport::default();
    for s in 4..=10usize {
        for k in 1..=(s - 2).min(8) {
            if k * k < 4 * (s - 2) {
                continue;
            }
            let g = minimize_f_grid(s, k)?;
            let gap_ok = g.gap.is_some_and(|e| e > Q::from_integer(0));
            rep.check(
                format!("f grid s={s} k={k}"),
                g.unique_origin() && gap_ok,
                format!("{} minimizers {:?}, min {}, gap {}", g.argmin.len(), g.argmin, g.min, g.gap.map_or("none".into(), |e| e.to_string())),
            );
        }
    }
    Ok(rep)
}

fn families(jobs: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::default();
    let fam = family_f(4)?;
    for n in 4..=10 {
        let res = run_parallel(&SearchConfig::saturated(n, fam.clone(), Pattern::Clique(2)), jobs, None)?;
        let Some(sat) = res.minimum else {
            rep.check(format!("sat(n={n}, F4)"), false, "no saturated graph");
            continue;
        };
        let b = family_edge_bounds(n, 4)?;
        let v = Q::from_integer(sat as i128);
        let ok = b.lower.is_none_or(|l| v >= l.ceil())
            && b.upper.is_none_or(|u| v <= u)
            && (n != 4 || sat == 6);
        rep.check(format!("sat(n={n}, F4)"), ok, format!("{sat} against {:?} / {:?}", b.lower, b.upper));
    }
    for m in 4..=12 {
        let c = binom(m as i128, 2);
        rep.check(
            format!("coefficient gap m={m}"),
            Q::new(c, m as i128) < Q::new(c + 1, m as i128),
            "",
        );
    }
    for r in 2..=6 {
        let lo = 2 * r * r + 2 * r;
        for m in lo..=lo + 40 {
            rep.check(format!("binomial claim m={m} r={r}"), binomial_inequality_check(m, r), "");
        }
    }
    Ok(rep)
}

fn dumbbell_family(m: usize) -> Result<Family> {
    Ok(Family::with_members(
        format!("B{m}{m}"),
        vec![Member::new(dumbbell(m)?, Detector::Dumbbell(m))],
    ))
}

fn section9(jobs: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::default();
    let b44 = dumbbell_family(4)?;
    let g = clique_union(8, 4)?;
    rep.check(
        "clique_union(8,4)",
        is_saturated(&g, &b44) && count_cycles(&g, 5) == 0,
        format!("C5 count {}", count_cycles(&g, 5)),
    );
    let res = run_parallel(&SearchConfig::saturated(9, b44, Pattern::Cycle(5)), jobs, None)?;
    rep.check(
        "every B44-saturated graph on 9 vertices has a C5",
        res.minimum.is_some_and(|m| m >= 1),
        format!("minimum {:?} over {} graphs", res.minimum, res.saturated_count),
    );
    let b33 = dumbbell_family(3)?;
    for t in 2..=3 {
        for (name, g) in [("triangles_with_apex", triangles_with_apex(t)?), ("triangles_two_apexes", triangles_two_apexes(t)?)] {
            rep.check(
                format!("{name}({t})"),
                is_saturated(&g, &b33) && count_cycles(&g, 4) == 0,
                format!("C4 count {}", count_cycles(&g, 4)),
            );
        }
    }
    let b22 = dumbbell_family(2)?;
    let g = path_union(7)?;
    rep.check(
        "path_union(7)",
        is_saturated(&g, &b22) && count_cycles(&g, 3) == 0,
        format!(
            "saturated: {}; adding 0-2 closes a triangle with no 3-edge path",
            is_saturated(&g, &b22)
        ),
    );
    Ok(rep)
}
