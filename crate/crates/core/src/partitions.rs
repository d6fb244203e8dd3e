//! Integer partitions, the constrained families `P(r,s,n)` and `P(t,m)`,
//! their exhaustive enumerators, and the series they generate.
//!
//! `P(r,s,n)` indexes torus-fixed points of the relative Quot scheme of the
//! plane curve `x^r = w^s`: partitions with exactly `s` parts, every value
//! used at most `n` times, spread `mu_1 - mu_s <= r`, and `m_1 + m_s <= n`
//! on the boundary `mu_1 - mu_s = r`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Meter, Result};
use crate::qseries::LaurentPoly;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `l(mu)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes, `|mu|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// How many parts equal `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` runs from the largest value down.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match runs.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => runs.push((p, 1)),
            }
        }
        runs
    }

    /// `mu_1 - mu_l`, zero for the empty partition.
    pub fn spread(&self) -> u32 {
        match (self.largest(), self.smallest()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The triple `(r, s, n)`: plane curve `x^r = w^s`, quotient length `s`,
/// support thickening `w^n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RsnParams {
    pub r: u32,
    pub s: u32,
    pub n: u32,
}

impl RsnParams {
    pub fn new(r: u32, s: u32, n: u32) -> Result<Self> {
        if r == 0 || s == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "(r,s,n) = ({r},{s},{n}) must be positive"
            )));
        }
        Ok(RsnParams { r, s, n })
    }

    /// `r > s > n >= 2` and `gcd(r, s) = 1`.
    pub fn satisfies_hypotheses(&self) -> bool {
        self.hypothesis_violation().is_none()
    }

    pub fn hypothesis_violation(&self) -> Option<String> {
        let RsnParams { r, s, n } = *self;
        if !(r > s && s > n && n >= 2) {
            Some(format!(
                "(r,s,n) = ({r},{s},{n}) does not satisfy r > s > n >= 2"
            ))
        } else if r.gcd(&s) != 1 {
            Some(format!("gcd(r,s) = gcd({r},{s}) = {} != 1", r.gcd(&s)))
        } else {
            None
        }
    }
}

impl fmt::Display for RsnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.n)
    }
}

/// Membership in `P(r,s,n)`.
pub fn is_member_rsn(mu: &Partition, p: &RsnParams) -> bool {
    if mu.len() != p.s as usize {
        return false;
    }
    let runs = mu.runs();
    if runs.iter().any(|&(_, c)| c > p.n as usize) {
        return false;
    }
    let spread = mu.spread();
    if spread > p.r {
        return false;
    }
    if spread == p.r {
        let top = runs.first().map_or(0, |r| r.1);
        let bottom = runs.last().map_or(0, |r| r.1);
        if top + bottom > p.n as usize {
            return false;
        }
    }
    true
}

/// Membership in `P(t,m)`: parts at most `t`, each value at most `m` times.
pub fn is_member_tm(nu: &Partition, t: u32, m: u32) -> bool {
    nu.largest().is_none_or(|a| a <= t) && nu.runs().iter().all(|&(_, c)| c <= m as usize)
}

/// All `mu` in `P(r,s,n)` with `|mu| - s <= budget`, sorted
/// lexicographically on parts.
pub fn enumerate_rsn(p: &RsnParams, budget: u64) -> Vec<Partition> {
    enumerate_rsn_with(p, budget, Budget::unlimited()).expect("unlimited budget")
}

pub fn enumerate_rsn_with(p: &RsnParams, budget: u64, limit: Budget) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    visit_rsn(p, budget, limit, |rows| {
        let mut parts = rows.to_vec();
        parts.reverse();
        out.push(Partition { parts });
    })?;
    out.sort();
    Ok(out)
}

/// DFS over multisets of values, smallest row first. `rows` holds the
/// partition in increasing order when `emit` is called.
fn visit_rsn(
    p: &RsnParams,
    budget: u64,
    limit: Budget,
    mut emit: impl FnMut(&[u32]),
) -> Result<()> {
    let s = p.s as usize;
    let max_size = u64::from(p.s) + budget;
    let mut meter = Meter::new(limit, "P(r,s,n) enumeration");
    let mut rows: Vec<u32> = Vec::with_capacity(s);

    // `next_min` is the smallest value the next run may take.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        p: &RsnParams,
        s: usize,
        max_size: u64,
        rows: &mut Vec<u32>,
        sum: u64,
        next_min: u32,
        meter: &mut Meter,
        emit: &mut dyn FnMut(&[u32]),
    ) -> Result<()> {
        meter.tick()?;
        if rows.len() == s {
            let bottom = rows[0];
            let top = rows[s - 1];
            if top - bottom == p.r {
                let m_bottom = rows.iter().take_while(|&&v| v == bottom).count();
                let m_top = rows.iter().rev().take_while(|&&v| v == top).count();
                if m_bottom + m_top > p.n as usize {
                    return Ok(());
                }
            }
            emit(rows);
            return Ok(());
        }
        let remaining = (s - rows.len()) as u64;
        let cap = rows.first().map_or(u32::MAX, |&b| b + p.r);
        let mut value = next_min;
        while value <= cap {
            // cheapest completion uses `value` for every remaining row
            if sum + remaining * u64::from(value) > max_size {
                break;
            }
            let most = (p.n as usize).min(s - rows.len());
            for count in 1..=most {
                let added = u64::from(value) * count as u64;
                if sum + added > max_size {
                    break;
                }
                // the bound below shrinks as `count` grows, so keep looking
                let rest = remaining - count as u64;
                if sum + added + rest * u64::from(value + 1) > max_size {
                    continue;
                }
                for _ in 0..count {
                    rows.push(value);
                }
                rec(p, s, max_size, rows, sum + added, value + 1, meter, emit)?;
                rows.truncate(rows.len() - count);
            }
            value += 1;
        }
        Ok(())
    }

    rec(p, s, max_size, &mut rows, 0, 1, &mut meter, &mut emit)
}

/// `sum over mu in P(r,s,n) of q^(|mu| - s)`, known through `q^order`.
pub fn series_from_enumeration(p: &RsnParams, order: u32) -> LaurentPoly {
    series_from_filtered(p, order, |_| true)
}

/// Enumeration series restricted to members with `mu_1 - mu_s <= r - 1`.
pub fn series_le_from_enumeration(p: &RsnParams, order: u32) -> LaurentPoly {
    series_from_filtered(p, order, |mu| mu.spread() < p.r)
}

/// Enumeration series restricted to members with `mu_1 - mu_s = r`.
pub fn series_r_from_enumeration(p: &RsnParams, order: u32) -> LaurentPoly {
    series_from_filtered(p, order, |mu| mu.spread() == p.r)
}

fn series_from_filtered(
    p: &RsnParams,
    order: u32,
    keep: impl Fn(&Partition) -> bool,
) -> LaurentPoly {
    let mut counts = vec![0u64; order as usize + 1];
    for mu in enumerate_rsn(p, u64::from(order)) {
        if keep(&mu) {
            counts[(mu.size() - u64::from(p.s)) as usize] += 1;
        }
    }
    LaurentPoly::from_counts(&counts)
}

/// `d(r,s,n) = min |mu|` over `P(r,s,n)`, found by enumeration.
///
/// A member exists iff `s <= n * r`: within spread `r` at most `r + 1`
/// values are available, and on the boundary the two extreme values share
/// `n` rows. Any minimal member has smallest part 1, hence size at most
/// `s * (r + 1)`.
pub fn minimal_size(p: &RsnParams) -> Result<u64> {
    let s = u64::from(p.s);
    if s > u64::from(p.n) * u64::from(p.r) {
        return Err(Error::Empty(format!("P{p} is empty: s > n*r")));
    }
    let ceiling = s * u64::from(p.r);
    let mut budget = 0u64;
    loop {
        let mut best: Option<u64> = None;
        visit_rsn(p, budget, Budget::unlimited(), |rows| {
            let size: u64 = rows.iter().map(|&v| u64::from(v)).sum();
            best = Some(best.map_or(size, |b| b.min(size)));
        })?;
        if let Some(b) = best {
            return Ok(b);
        }
        if budget >= ceiling {
            return Err(Error::Empty(format!(
                "no member of P{p} with size <= {}",
                s + ceiling
            )));
        }
        budget = (budget * 2 + 1).min(ceiling);
    }
}

/// All of `P(t,m)`, sorted lexicographically on parts. There are
/// `(m+1)^t` of them.
pub fn enumerate_tm(t: u32, m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut mult = vec![0u32; t as usize];
    loop {
        let mut parts = Vec::new();
        for value in (1..=t).rev() {
            for _ in 0..mult[value as usize - 1] {
                parts.push(value);
            }
        }
        out.push(Partition { parts });
        // odometer over multiplicities in 0..=m
        let mut i = 0;
        loop {
            if i == mult.len() {
                out.sort();
                return out;
            }
            if mult[i] < m {
                mult[i] += 1;
                break;
            }
            mult[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DecompositionKind {
    /// `mu_1 - mu_s <= r - 1`: rectangle plus residual.
    LeRMinus1,
    /// `mu_1 - mu_s = r`: rectangle, `m` full rows of length `r`, residual.
    EqR,
}

/// Unique splitting of a member of `P(r,s,n)` into an `s x mu_s`
/// rectangle, `full_rows` rows of length `r` and a residual diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub rect_height: u32,
    pub rect_width: u32,
    pub full_rows: u32,
    pub full_row_len: u32,
    pub residual: Partition,
}

impl Decomposition {
    pub fn reassemble(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.rect_height as usize);
        for _ in 0..self.full_rows {
            parts.push(self.rect_width + self.full_row_len);
        }
        parts.extend(self.residual.parts().iter().map(|&p| p + self.rect_width));
        while parts.len() < self.rect_height as usize {
            parts.push(self.rect_width);
        }
        Partition { parts }
    }
}

pub fn classify_decomposition(mu: &Partition, p: &RsnParams) -> Result<Decomposition> {
    if !is_member_rsn(mu, p) {
        return Err(Error::Partition(format!("{mu} is not a member of P{p}")));
    }
    let width = mu.smallest().expect("members have s >= 1 parts");
    let shifted: Vec<u32> = mu.parts().iter().map(|&v| v - width).collect();
    let (kind, full_rows) = if mu.spread() == p.r {
        let m = shifted.iter().take_while(|&&v| v == p.r).count() as u32;
        (DecompositionKind::EqR, m)
    } else {
        (DecompositionKind::LeRMinus1, 0)
    };
    let residual = shifted
        .into_iter()
        .skip(full_rows as usize)
        .filter(|&v| v > 0)
        .collect();
    Ok(Decomposition {
        kind,
        rect_height: p.s,
        rect_width: width,
        full_rows,
        full_row_len: if full_rows > 0 { p.r } else { 0 },
        residual: Partition { parts: residual },
    })
}
