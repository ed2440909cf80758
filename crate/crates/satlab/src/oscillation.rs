//! Per-n saturation values for the three-member families, against the
//! linear bounds that separate `m | n` from `m ∤ n`.

use satlab_core::constructions::{family_f, family_f_r, RangeMode};
use satlab_core::formulas::{binom, family_edge_bounds, Q};
use satlab_core::search::SearchConfig;
use satlab_core::{Count, Pattern, Result};
use serde::Serialize;

use crate::parallel::run_parallel;
use crate::report::fraction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OscillationMode {
    Exhaustive,
    Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillationRow {
    pub n: usize,
    pub sat: Option<Count>,
    pub divides_m: bool,
    pub lower: Option<Q>,
    pub upper: Option<Q>,
}

impl OscillationRow {
    pub fn ratio(&self) -> Option<Q> {
        self.sat.map(|s| Q::new(s as i128, self.n as i128))
    }

    pub fn within_bounds(&self) -> bool {
        let Some(s) = self.sat else { return true };
        let s = Q::from_integer(s as i128);
        self.lower.is_none_or(|l| l <= s) && self.upper.is_none_or(|u| s <= u)
    }
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    sat: String,
    ratio: String,
    divides_m: bool,
    lower: String,
    upper: String,
}

/// Bounds for `n`: the edge bounds for `r = 2`, and for `r > 2` the clique
/// count `(n/m) C(m, r)` when `m | n` or the leading term
/// `(n/m)(C(m, r) + 1)` otherwise.
pub fn row_bounds(n: usize, m: usize, r: usize) -> Result<(Option<Q>, Option<Q>)> {
    if r == 2 {
        let b = family_edge_bounds(n, m)?;
        return Ok((b.lower, b.upper));
    }
    let c = binom(m as i128, r as i128);
    let (ni, mi) = (n as i128, m as i128);
    Ok(if n % m == 0 {
        (None, Some(Q::from_integer(ni / mi * c)))
    } else {
        (Some(Q::new(ni * (c + 1), mi)), None)
    })
}

pub fn oscillation_rows(
    m: usize,
    r: usize,
    ns: impl IntoIterator<Item = usize>,
    mode: OscillationMode,
    jobs: usize,
    cap: usize,
) -> Result<Vec<OscillationRow>> {
    let family = if r == 2 {
        family_f(m)?
    } else {
        family_f_r(m, r, RangeMode::Permissive)?
    };
    let mut rows = Vec::new();
    let mut ns: Vec<usize> = ns.into_iter().collect();
    ns.sort_unstable();
    ns.dedup();
    for n in ns {
        let (lower, upper) = if n >= m { row_bounds(n, m, r)? } else { (None, None) };
        let sat = match mode {
            OscillationMode::Bounds => None,
            OscillationMode::Exhaustive => {
                let mut cfg = SearchConfig::saturated(n, family.clone(), Pattern::Clique(r));
                cfg.cap = cap;
                run_parallel(&cfg, jobs, None)?.minimum
            }
        };
        rows.push(OscillationRow {
            n,
            sat,
            divides_m: n % m == 0,
            lower,
            upper,
        });
    }
    Ok(rows)
}

pub fn write_csv(rows: &[OscillationRow], out: impl std::io::Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let opt = |q: &Option<Q>| q.as_ref().map(fraction).unwrap_or_default();
    for row in rows {
        w.serialize(CsvRow {
            n: row.n,
            sat: row.sat.map(|s| s.to_string()).unwrap_or_default(),
            ratio: opt(&row.ratio()),
            divides_m: row.divides_m,
            lower: opt(&row.lower),
            upper: opt(&row.upper),
        })?;
    }
    if rows.is_empty() {
        w.write_record(["n", "sat", "ratio", "divides_m", "lower", "upper"])?;
    }
    w.flush()?;
    Ok(())
}
