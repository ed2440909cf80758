//! Closed-form saturation values and bounds, evaluated exactly.
//!
//! Asymptotic bounds are returned as their displayed kernels with the
//! `1 ± o(1)` and `o(n)` terms dropped.

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Count;

/// Exact rational used by every evaluator.
pub type Q = Ratio<i128>;

/// A lower/upper bound pair. Either side may be absent when only one
/// direction is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsPair {
    pub lower: Option<Q>,
    pub upper: Option<Q>,
    pub exact: Option<i128>,
}

impl BoundsPair {
    pub fn is_consistent(&self) -> bool {
        let le = |a: &Option<Q>, b: &Option<Q>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        let exact = self.exact.map(Q::from_integer);
        le(&self.lower, &self.upper) && le(&self.lower, &exact) && le(&exact, &self.upper)
    }
}

/// `C(a, b)` with `C(a, b) = 0` for `b < 0` or `0 <= a < b`.
pub fn binom(a: i128, b: i128) -> i128 {
    if b < 0 || (a >= 0 && a < b) {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// `(m)_k = m (m - 1) ... (m - k + 1)`.
pub fn falling_factorial(m: i128, k: u32) -> i128 {
    (0..k as i128).map(|i| m - i).product()
}

fn q(v: i128) -> Q {
    Q::from_integer(v)
}

pub fn ehm_sat(n: usize, s: usize) -> Result<Count> {
    if s < 2 || n < s {
        return Err(Error::InvalidParameter("need n >= s >= 2"));
    }
    let (n, s) = (n as i128, s as i128);
    Ok(((s - 2) * (n - s + 2) + binom(s - 2, 2)) as Count)
}

/// Number of `K_r` in `K_{s-2} * complement(K_{n-s+2})`.
pub fn sat_cliques(n: usize, r: usize, s: usize) -> Result<Count> {
    if r < 2 || r >= s {
        return Err(Error::InvalidParameter("need s > r >= 2"));
    }
    if n < s {
        return Err(Error::InvalidParameter("need n >= s"));
    }
    let (n, r, s) = (n as i128, r as i128, s as i128);
    Ok(((n - s + 2) * binom(s - 2, r - 1) + binom(s - 2, r)) as Count)
}

/// The two-sided clique bound for `s > r >= 3`: the lower side is the larger
/// of the two linear bounds, the upper side the construction count.
pub fn kmtt_clique_bounds(n: usize, r: usize, s: usize) -> Result<BoundsPair> {
    if r < 3 {
        return Err(Error::InvalidParameter("need r >= 3"));
    }
    let upper = sat_cliques(n, r, s)? as i128;
    let (nn, r, s) = (n as i128, r as i128, s as i128);
    let c = binom(s - 2, r - 1);
    let first = Q::new(c, r - 1) * q(nn) - q(2 * c);
    let second = Q::new(c + binom(s - 3, r - 2), r) * q(nn);
    Ok(BoundsPair {
        lower: Some(first.max(second)),
        upper: Some(q(upper)),
        exact: None,
    })
}

/// Number of `C_r` in `K_{s-2} * complement(K_{n-s+2})` that use exactly
/// `floor(r/2)` independent-part vertices.
pub fn join_cycle_leading(n: usize, r: usize, s: usize) -> Result<Q> {
    if s < 4 || r < 4 || n < s {
        return Err(Error::InvalidParameter("need s >= 4, r >= 4, n >= s"));
    }
    let k = (r / 2) as u32;
    let choose = binom((n + 2 - s) as i128, k as i128);
    let per_set = if r % 2 == 0 {
        Q::new(falling_factorial(s as i128 - 2, k) * falling_factorial(k as i128 - 1, k - 1), 2)
    } else {
        Q::new(falling_factorial(s as i128 - 2, k + 1) * falling_factorial(k as i128, k), 2)
    };
    Ok(per_set * q(choose))
}

/// Leading kernels of the cycle-count bounds for `K_s`-saturated graphs,
/// `s >= 5`, `4 <= r <= 2s - 4`.
pub fn kmtt_cycle_bounds(n: usize, r: usize, s: usize) -> Result<BoundsPair> {
    if s < 5 || r < 4 {
        return Err(Error::InvalidParameter("need s >= 5 and r >= 4"));
    }
    if r > 2 * s - 4 {
        return Err(Error::InvalidParameter("need r <= 2s - 4"));
    }
    let (lo, hi) = kmtt_cycle_coefficients(r, s);
    let nk = q((n as i128).pow((r / 2) as u32));
    Ok(BoundsPair {
        lower: Some(lo * nk),
        upper: Some(hi * nk),
        exact: None,
    })
}

/// Coefficients of `n^floor(r/2)` in [`kmtt_cycle_bounds`].
pub fn kmtt_cycle_coefficients(r: usize, s: usize) -> (Q, Q) {
    let k = (r / 2) as u32;
    let (ri, si, ki) = (r as i128, s as i128, k as i128);
    if r % 2 == 0 {
        let ff = falling_factorial(si - 2, k);
        (Q::new(ff, 4 * ki), Q::new(ff, 2 * ki))
    } else {
        let ff = falling_factorial(si - 2, k + 1);
        let fact = falling_factorial(ki - 2, k.saturating_sub(2));
        let den = ri * (ri - 3) * falling_factorial(ri, k) * (si - 1);
        (Q::new(ff * fact, den), Q::new(ff, 2))
    }
}

/// `C(s-2, 2) C(n, 2)`.
pub fn c4_leading(n: usize, s: usize) -> Result<Q> {
    if s < 4 {
        return Err(Error::InvalidParameter("need s >= 4"));
    }
    Ok(q(binom(s as i128 - 2, 2) * binom(n as i128, 2)))
}

/// Arguments of the essential cycle count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    s: usize,
    entries: Vec<usize>,
}

impl FVector {
    pub fn new(s: usize, entries: Vec<usize>) -> Result<Self> {
        if s < 2 || entries.is_empty() || entries.iter().any(|&x| x > s - 2) {
            return Err(Error::InvalidParameter("need k >= 1 and 0 <= s_j <= s - 2"));
        }
        Ok(FVector { s, entries })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

/// `f(s_1..s_k) = 1/2 prod s_j + sum over nonempty J of
/// prod_{j not in J} s_j prod_{j in J} (s - 2 - s_j - iota(J, j))`, where
/// `iota(J, j)` counts elements of `J` below `j`.
pub fn essential_count_f(fv: &FVector) -> Q {
    let mut row = Row::start(fv.entries.len());
    for &x in &fv.entries {
        row = row.extend(fv.s as i64 - 2, x as i64);
    }
    Q::new(row.twice_f() as i128, 2)
}

/// Sums over `J` restricted to a prefix, indexed by `|J|`. The product of the
/// entries themselves (the `J = {}` term) sits at index 0.
#[derive(Clone, Copy)]
struct Row {
    len: usize,
    acc: [i64; 17],
}

impl Row {
    fn start(k: usize) -> Self {
        debug_assert!(k < 17);
        let mut acc = [0; 17];
        acc[0] = 1;
        Row { len: 0, acc }
    }

    #[inline]
    fn extend(&self, s2: i64, x: i64) -> Self {
        let mut next = [0i64; 17];
        for (i, &a) in self.acc[..=self.len].iter().enumerate() {
            next[i] += a * x;
            next[i + 1] += a * (s2 - x - i as i64);
        }
        Row {
            len: self.len + 1,
            acc: next,
        }
    }

    /// `2 f`: twice the full sum minus the `J = {}` term.
    #[inline]
    fn twice_f(&self) -> i64 {
        2 * self.acc[..=self.len].iter().sum::<i64>() - self.acc[0]
    }
}

/// Outcome of an exhaustive scan of `f` over `{0..s-2}^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridMinimum {
    pub argmin: Vec<Vec<usize>>,
    pub min: Q,
    /// Second smallest value minus the minimum; `None` for a one-point grid.
    pub gap: Option<Q>,
}

impl GridMinimum {
    pub fn unique_origin(&self) -> bool {
        self.argmin.len() == 1 && self.argmin[0].iter().all(|&x| x == 0)
    }
}

pub const GRID_LIMIT: u128 = 100_000_000;

pub fn minimize_f_grid(s: usize, k: usize) -> Result<GridMinimum> {
    if s < 4 || k == 0 || k > s - 2 || k > 16 {
        return Err(Error::InvalidParameter("need s >= 4 and 1 <= k <= s - 2"));
    }
    let side = (s - 1) as u128;
    let points = side.checked_pow(k as u32).unwrap_or(u128::MAX);
    if points > GRID_LIMIT {
        return Err(Error::GridTooLarge(points));
    }
    let s2 = s as i64 - 2;
    let top = s - 2;
    let mut digits = alloc::vec![0usize; k];
    let mut rows: Vec<Row> = alloc::vec![Row::start(k); k + 1];
    for j in 0..k {
        rows[j + 1] = rows[j].extend(s2, 0);
    }
    let mut best = i64::MAX;
    let mut second = i64::MAX;
    let mut argmin: Vec<Vec<usize>> = Vec::new();
    loop {
        let v = rows[k].twice_f();
        if v < best {
            second = best;
            best = v;
            argmin.clear();
            argmin.push(digits.clone());
        } else if v == best {
            argmin.push(digits.clone());
        } else if v < second {
            second = v;
        }
        // odometer step, last digit fastest
        let mut j = k;
        loop {
            if j == 0 {
                let gap = (second != i64::MAX).then(|| Q::new((second - best) as i128, 2));
                return Ok(GridMinimum {
                    argmin,
                    min: Q::new(best as i128, 2),
                    gap,
                });
            }
            j -= 1;
            if digits[j] < top {
                digits[j] += 1;
                break;
            }
            digits[j] = 0;
        }
        for t in j..k {
            rows[t + 1] = rows[t].extend(s2, digits[t] as i64);
        }
    }
}

/// Whether `1/2 (s-2)^k > (s-2)_k`, the comparison of the all-`(s-2)` corner
/// against the origin.
pub fn corner_exceeds_origin(s: usize, k: usize) -> bool {
    let base = s as i128 - 2;
    base.pow(k as u32) > 2 * falling_factorial(base, k as u32)
}

/// Edge-count bounds for the three-member family with clique size `m`:
/// an upper bound `(n/m) C(m, 2)` when `m | n`, otherwise the lower bound
/// `(n - m)/m (C(m, 2) + 1)`.
pub fn family_edge_bounds(n: usize, m: usize) -> Result<BoundsPair> {
    if m < 4 {
        return Err(Error::InvalidParameter("need m >= 4"));
    }
    if n < m {
        return Err(Error::InvalidParameter("need n >= m"));
    }
    let (ni, mi) = (n as i128, m as i128);
    let cm = binom(mi, 2);
    Ok(if n % m == 0 {
        BoundsPair {
            lower: None,
            upper: Some(q(ni / mi * cm)),
            exact: None,
        }
    } else {
        BoundsPair {
            lower: Some(Q::new((ni - mi) * (cm + 1), mi)),
            upper: None,
            exact: None,
        }
    })
}

/// Per-vertex coefficients `(C(m, r)/m, (C(m, r) + 1)/m)` of the clique-count
/// bounds for `m | n` and `m ∤ n`. The second carries a `-o(n)` slack.
pub fn family_clique_bound_coeffs(
    m: usize,
    r: usize,
    mode: crate::constructions::RangeMode,
) -> Result<(Q, Q)> {
    if r < 2 || m <= r {
        return Err(Error::InvalidParameter("need m > r >= 2"));
    }
    if mode == crate::constructions::RangeMode::Strict && m < 2 * r * r + 2 * r {
        return Err(Error::InvalidParameter("need m >= 2r^2 + 2r"));
    }
    let c = binom(m as i128, r as i128);
    Ok((Q::new(c, m as i128), Q::new(c + 1, m as i128)))
}

/// `m C(m - r - 2, r - 1) > C(m, r)`.
pub fn binomial_inequality_check(m: usize, r: usize) -> bool {
    let (m, r) = (m as i128, r as i128);
    m * binom(m - r - 2, r - 1) > binom(m, r)
}

/// How the edge density parameter `tau` of the independent-set bound is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauConvention {
    /// `e = C(n, 2) / tau`.
    Paper,
    /// `e = (1 - 1/tau) n^2 / 2`, the Moon-Moser form on the complement.
    HalfSquare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndepBound {
    pub value: Q,
    pub tau: Option<Q>,
    /// Set when `tau` is undefined for the input and the bound defaults to 0.
    pub degenerate: bool,
}

/// `C(tau, l) (n / tau)^l` with the real-argument binomial, clamped at 0.
pub fn indep_set_lower_bound(
    n: usize,
    edges: usize,
    l: usize,
    convention: TauConvention,
) -> Result<IndepBound> {
    if l == 0 {
        return Err(Error::InvalidParameter("need l >= 1"));
    }
    let (ni, e) = (n as i128, edges as i128);
    let tau = match convention {
        TauConvention::Paper if e > 0 => Some(Q::new(binom(ni, 2), e)),
        TauConvention::HalfSquare if ni * ni > 2 * e && e > 0 => {
            Some(Q::new(ni * ni, ni * ni - 2 * e))
        }
        _ => None,
    };
    let Some(tau) = tau else {
        return Ok(IndepBound {
            value: Q::zero(),
            tau: None,
            degenerate: true,
        });
    };
    let mut c = Q::one();
    for i in 0..l as i128 {
        c = c * (tau - q(i)) / q(i + 1);
    }
    let value = if c <= Q::zero() {
        Q::zero()
    } else {
        let base = q(ni) / tau;
        (0..l).fold(c, |acc, _| acc * base)
    };
    Ok(IndepBound {
        value,
        tau: Some(tau),
        degenerate: false,
    })
}
