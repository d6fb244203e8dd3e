//! Numerical semigroups as local models of monomial curve singularities,
//! and brute-force counts of their torus-fixed ideals.
//!
//! A monomial ideal of `C[[t^a : a in S]]` is a cofinite S-module
//! `Gamma ⊆ S` (`Gamma + S ⊆ Gamma`). We store its finite complement
//! `Delta = S \ Gamma`; the module condition becomes downward closure:
//! `d in Delta`, `d - g in S` implies `d - g in Delta`.
//!
//! Search bound: if `|Delta| = l` then `max Delta <= c + l * g0`, with `c`
//! the conductor and `g0` the smallest generator. From any `d >= c + g0` in
//! `Delta`, `d - g0` is in `S` and hence in `Delta`, so the chain
//! `d, d - g0, d - 2 g0, ...` stays in `Delta` until it drops below `c + g0`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Meter, Result};
use crate::formulas::LciParams;
use crate::partitions::RsnParams;
use crate::qseries::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    member: Vec<bool>,
    conductor: u32,
    gaps: Vec<u32>,
}

/// JSON summary of a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<u32>,
    pub conductor: u32,
    pub genus: u32,
    pub gaps: Vec<u32>,
}

impl NumericalSemigroup {
    /// Builds `<generators>` with a membership table reaching at least
    /// `conductor + bound_hint`.
    pub fn new(generators: &[u32], bound_hint: u32) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "generators {generators:?} must be nonempty and positive"
            )));
        }
        let g = generators.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidArgument(format!(
                "generators {generators:?} have gcd {g}; the curve is not unibranch"
            )));
        }
        let smallest = *generators.iter().min().expect("nonempty");
        // extend until `smallest` consecutive members: everything after is in S
        let mut member = vec![true];
        let mut run = 1u32;
        while run < smallest {
            let x = member.len();
            let inside = generators
                .iter()
                .any(|&g| x >= g as usize && member[x - g as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
        }
        let conductor = member.iter().rposition(|&m| !m).map_or(0, |i| i as u32 + 1);
        let gaps: Vec<u32> = (0..conductor).filter(|&x| !member[x as usize]).collect();
        member.resize(
            (conductor + bound_hint).max(member.len() as u32) as usize,
            true,
        );
        Ok(NumericalSemigroup {
            generators: generators.to_vec(),
            member,
            conductor,
            gaps,
        })
    }

    /// A semigroup whose table is large enough to enumerate staircases of
    /// colength up to `max_colength`.
    pub fn for_colength(generators: &[u32], max_colength: u32) -> Result<Self> {
        let smallest = generators.iter().copied().min().unwrap_or(1);
        Self::new(generators, max_colength.saturating_mul(smallest) + 1)
    }

    /// Same semigroup with the table extent multiplied by `factor`.
    pub fn with_scaled_bound(&self, factor: u32) -> Self {
        let mut out = self.clone();
        out.member
            .resize(self.member.len() * factor.max(1) as usize, true);
        out
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Table extent: membership is tabulated on `[0, bound)`.
    pub fn bound(&self) -> u32 {
        self.member.len() as u32
    }

    pub fn smallest_generator(&self) -> u32 {
        *self.generators.iter().min().expect("nonempty")
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member.get(x as usize).copied().unwrap_or(true)
    }

    /// Largest element a staircase of colength `l` can contain.
    pub fn search_bound(&self, colength: u32) -> u64 {
        u64::from(self.conductor) + u64::from(colength) * u64::from(self.smallest_generator())
    }

    pub fn summary(&self) -> SemigroupSummary {
        SemigroupSummary {
            generators: self.generators.clone(),
            conductor: self.conductor,
            genus: self.genus(),
            gaps: self.gaps.clone(),
        }
    }

    fn check_table(&self, colength: u32) -> Result<()> {
        let need = self.search_bound(colength);
        if u64::from(self.bound()) <= need {
            return Err(Error::Resource(format!(
                "semigroup table bound {} too small for colength {colength} (need > {need})",
                self.bound()
            )));
        }
        Ok(())
    }
}

/// `<r, s>` for the plane curve `x^r = w^s`, with `x -> t^s`, `w -> t^r`.
pub fn plane_curve_semigroup(p: &RsnParams, bound_hint: u32) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(&[p.r, p.s], bound_hint)
}

/// `<t n, (r-t) n, r>`: `x -> t^(tn)`, `v -> t^((r-t)n)`, `w -> t^r` solves
/// `xv = w^n` and `x^(r-t) = v^t`.
pub fn space_curve_semigroup(p: &LciParams, bound_hint: u32) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(&[p.t * p.n, (p.r - p.t) * p.n, p.r], bound_hint)
}

/// t-valuations of the coordinates on the plane curve `x^r = w^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneWeights {
    pub x: u32,
    pub w: u32,
}

impl PlaneWeights {
    pub fn of(p: &RsnParams) -> Self {
        PlaneWeights { x: p.s, w: p.r }
    }
}

/// Complement `Delta` of a cofinite semigroup module, sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Staircase {
    delta: Vec<u32>,
}

impl Staircase {
    pub fn new(mut delta: Vec<u32>) -> Self {
        delta.sort_unstable();
        delta.dedup();
        Staircase { delta }
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn colength(&self) -> usize {
        self.delta.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.delta.binary_search(&x).is_ok()
    }

    /// Elements lie in `S` and `Gamma + S ⊆ Gamma`.
    pub fn is_valid_in(&self, sg: &NumericalSemigroup) -> bool {
        self.delta.iter().all(|&d| {
            sg.contains(d)
                && sg
                    .generators()
                    .iter()
                    .all(|&g| d < g || !sg.contains(d - g) || self.contains(d - g))
        })
    }
}

/// Nested monomial ideals `Gamma_1 ⊆ Gamma_2`, stored as complements
/// `Delta_2 ⊆ Delta_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagPair {
    pub delta1: Staircase,
    pub delta2: Staircase,
}

impl FlagPair {
    /// The quotient boxes `Gamma_2 \ Gamma_1 = Delta_1 \ Delta_2`.
    pub fn quotient(&self) -> Vec<u32> {
        self.delta1
            .delta()
            .iter()
            .copied()
            .filter(|&d| !self.delta2.contains(d))
            .collect()
    }

    /// Both module conditions, nesting, and annihilation of the quotient by
    /// `x` and `w^n`.
    pub fn is_valid(&self, sg: &NumericalSemigroup, p: &RsnParams) -> bool {
        let wt = PlaneWeights::of(p);
        self.delta1.is_valid_in(sg)
            && self.delta2.is_valid_in(sg)
            && self.delta2.delta().iter().all(|&d| self.delta1.contains(d))
            && self
                .quotient()
                .iter()
                .all(|&b| !self.delta1.contains(b + wt.x) && !self.delta1.contains(b + p.n * wt.w))
    }
}

/// Whether the scan may stop early using the search-bound chain argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchMode {
    #[default]
    Pruned,
    /// Scans the whole membership table; only the size cap prunes.
    Exhaustive,
}

/// Calls `emit` once for every staircase with `|Delta| <= max_colength`,
/// each time with `Delta` ascending.
pub fn visit_staircases(
    sg: &NumericalSemigroup,
    max_colength: u32,
    mode: SearchMode,
    budget: Budget,
    mut emit: impl FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    sg.check_table(max_colength)?;
    let elems: Vec<u32> = (0..sg.bound()).filter(|&x| sg.contains(x)).collect();
    let mut walker = Walker {
        sg,
        elems: &elems,
        in_delta: vec![false; sg.bound() as usize],
        delta: Vec::with_capacity(max_colength as usize),
        max: max_colength as usize,
        chain_floor: sg.conductor + sg.smallest_generator(),
        mode,
        meter: Meter::new(budget, "staircase enumeration"),
    };
    emit(&[])?;
    walker.rec(0, &mut emit)
}

struct Walker<'a> {
    sg: &'a NumericalSemigroup,
    elems: &'a [u32],
    in_delta: Vec<bool>,
    delta: Vec<u32>,
    max: usize,
    chain_floor: u32,
    mode: SearchMode,
    meter: Meter,
}

impl Walker<'_> {
    fn closed_with(&self, e: u32) -> bool {
        self.sg
            .generators()
            .iter()
            .all(|&g| e < g || !self.sg.contains(e - g) || self.in_delta[(e - g) as usize])
    }

    fn rec(&mut self, idx: usize, emit: &mut impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
        self.meter.tick()?;
        if self.delta.len() == self.max || idx == self.elems.len() {
            return Ok(());
        }
        let e = self.elems[idx];
        if self.mode == SearchMode::Pruned {
            // nothing can join an empty Delta once 0 is skipped
            if self.delta.is_empty() && e > 0 {
                return Ok(());
            }
            let top = *self.delta.last().unwrap_or(&0);
            if e >= self.chain_floor && e > top + self.sg.smallest_generator() {
                return Ok(());
            }
        }
        if self.closed_with(e) {
            self.in_delta[e as usize] = true;
            self.delta.push(e);
            emit(&self.delta)?;
            self.rec(idx + 1, emit)?;
            self.delta.pop();
            self.in_delta[e as usize] = false;
        }
        self.rec(idx + 1, emit)
    }
}

fn checked_inc(slot: &mut u64) -> Result<()> {
    *slot = slot
        .checked_add(1)
        .ok_or_else(|| Error::Resource("count overflowed u64".into()))?;
    Ok(())
}

/// Number of staircases of colength `l` for every `l <= max_colength`.
pub fn staircase_counts(
    sg: &NumericalSemigroup,
    max_colength: u32,
    mode: SearchMode,
    budget: Budget,
) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_colength as usize + 1];
    visit_staircases(sg, max_colength, mode, budget, |d| {
        checked_inc(&mut counts[d.len()])
    })?;
    Ok(counts)
}

/// Number of torus-fixed ideals of colength `l`.
pub fn count_staircases(sg: &NumericalSemigroup, colength: u32) -> Result<u64> {
    Ok(staircase_counts(sg, colength, SearchMode::Pruned, Budget::default())?[colength as usize])
}

pub fn enumerate_staircases(sg: &NumericalSemigroup, colength: u32) -> Result<Vec<Staircase>> {
    let mut out = Vec::new();
    visit_staircases(sg, colength, SearchMode::Pruned, Budget::default(), |d| {
        if d.len() == colength as usize {
            out.push(Staircase { delta: d.to_vec() });
        }
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// `sum_{l=0}^{order} #staircases(l) q^l`.
pub fn hilb_series_oracle(sg: &NumericalSemigroup, order: u32) -> Result<LaurentPoly> {
    hilb_series_oracle_with(sg, order, SearchMode::Pruned, Budget::default())
}

pub fn hilb_series_oracle_with(
    sg: &NumericalSemigroup,
    order: u32,
    mode: SearchMode,
    budget: Budget,
) -> Result<LaurentPoly> {
    Ok(LaurentPoly::from_counts(&staircase_counts(
        sg, order, mode, budget,
    )?))
}

/// Subsets `B` of `Delta_1` of size `s` with `Delta_1 \ B` a staircase and
/// `B + x`, `B + n w` disjoint from `Delta_1`.
struct QuotientCounter<'a> {
    sg: &'a NumericalSemigroup,
    candidates: Vec<u32>,
    in_b: Vec<bool>,
    in_delta1: &'a [bool],
    size: usize,
    meter: &'a mut Meter,
}

impl QuotientCounter<'_> {
    fn up_closed_with(&self, b: u32) -> bool {
        self.sg.generators().iter().all(|&g| {
            let up = (b + g) as usize;
            up >= self.in_delta1.len() || !self.in_delta1[up] || self.in_b[up]
        })
    }

    // candidates are scanned from the top so `b + g` is decided before `b`
    fn rec(
        &mut self,
        idx: usize,
        chosen: usize,
        visit: &mut dyn FnMut(&[bool]) -> Result<()>,
    ) -> Result<()> {
        self.meter.tick()?;
        if chosen == self.size {
            return visit(&self.in_b);
        }
        if self.candidates.len() - idx < self.size - chosen {
            return Ok(());
        }
        let b = self.candidates[idx];
        if self.up_closed_with(b) {
            self.in_b[b as usize] = true;
            self.rec(idx + 1, chosen + 1, visit)?;
            self.in_b[b as usize] = false;
        }
        self.rec(idx + 1, chosen, visit)
    }
}

fn visit_flag_pairs(
    p: &RsnParams,
    max_k: u32,
    budget: Budget,
    mut visit: impl FnMut(&[u32], &[bool]) -> Result<()>,
) -> Result<()> {
    if p.r.gcd(&p.s) != 1 {
        return Err(Error::Hypothesis(format!("gcd(r,s) != 1 for {p}")));
    }
    let max_colength = max_k + p.s;
    let sg = plane_curve_semigroup(
        p,
        max_colength.saturating_mul(p.r.min(p.s)) + p.n * p.r + p.s + 1,
    )?;
    let wt = PlaneWeights::of(p);
    let mut meter = Meter::new(budget, "flag pair enumeration");
    let mut in_delta1 = vec![false; sg.bound() as usize];
    visit_staircases(&sg, max_colength, SearchMode::Pruned, budget, |delta1| {
        if delta1.len() < p.s as usize {
            return Ok(());
        }
        for &d in delta1 {
            in_delta1[d as usize] = true;
        }
        let member = |x: u32| in_delta1.get(x as usize).copied().unwrap_or(false);
        let candidates: Vec<u32> = delta1
            .iter()
            .rev()
            .copied()
            .filter(|&d| !member(d + wt.x) && !member(d + p.n * wt.w))
            .collect();
        let mut counter = QuotientCounter {
            sg: &sg,
            candidates,
            in_b: vec![false; in_delta1.len()],
            in_delta1: &in_delta1,
            size: p.s as usize,
            meter: &mut meter,
        };
        let outcome = counter.rec(0, 0, &mut |in_b| visit(delta1, in_b));
        for &d in delta1 {
            in_delta1[d as usize] = false;
        }
        outcome
    })
}

/// Number of flag pairs with `|S \ Gamma_2| = k` and `|Gamma_2 \ Gamma_1| = s`
/// inside `S = <r, s>`.
pub fn count_flag_pairs(p: &RsnParams, k: u32) -> Result<u64> {
    Ok(flag_counts(p, k, Budget::default())?[k as usize])
}

fn flag_counts(p: &RsnParams, max_k: u32, budget: Budget) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_k as usize + 1];
    let s = p.s as usize;
    visit_flag_pairs(p, max_k, budget, |delta1, _| {
        checked_inc(&mut counts[delta1.len() - s])
    })?;
    Ok(counts)
}

/// All flag pairs with `|S \ Gamma_2| = k`, sorted.
pub fn enumerate_flag_pairs(p: &RsnParams, k: u32) -> Result<Vec<FlagPair>> {
    let mut out = Vec::new();
    let s = p.s as usize;
    visit_flag_pairs(p, k, Budget::default(), |delta1, in_b| {
        if delta1.len() - s == k as usize {
            let delta2: Vec<u32> = delta1
                .iter()
                .copied()
                .filter(|&d| !in_b[d as usize])
                .collect();
            out.push(FlagPair {
                delta1: Staircase {
                    delta: delta1.to_vec(),
                },
                delta2: Staircase { delta: delta2 },
            });
        }
        Ok(())
    })?;
    out.sort_by(|a, b| (&a.delta2, &a.delta1).cmp(&(&b.delta2, &b.delta1)));
    Ok(out)
}

/// `sum_{k=0}^{order} #flag_pairs(k) q^k`.
pub fn flag_series_oracle(p: &RsnParams, order: u32) -> Result<LaurentPoly> {
    flag_series_oracle_with(p, order, Budget::default())
}

pub fn flag_series_oracle_with(p: &RsnParams, order: u32, budget: Budget) -> Result<LaurentPoly> {
    Ok(LaurentPoly::from_counts(&flag_counts(p, order, budget)?))
}

/// Distinct elements of a staircase as a set, for tests and display.
pub fn delta_set(st: &Staircase) -> BTreeSet<u32> {
    st.delta().iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::for_colength(gens, 12).unwrap()
    }

    #[test]
    fn cusp() {
        let s = sg(&[2, 3]);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.genus(), 1);
    }

    #[test]
    fn two_generator_genus() {
        let s = sg(&[4, 5]);
        assert_eq!(s.gaps(), &[1, 2, 3, 6, 7, 11]);
        assert_eq!(s.conductor(), 12);
        assert_eq!(s.genus(), 6);
        for (a, b) in [(3, 7), (5, 8), (9, 4), (2, 11)] {
            assert_eq!(sg(&[a, b]).genus(), (a - 1) * (b - 1) / 2);
        }
    }

    #[test]
    fn three_generators() {
        let s = sg(&[4, 5, 6]);
        assert_eq!(s.gaps(), &[1, 2, 3, 7]);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.genus(), 4);
    }

    #[test]
    fn smooth_point() {
        let s = sg(&[1]);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.genus(), 0);
        assert!(s.contains(0) && s.contains(5));
    }

    #[test]
    fn gcd_rejected() {
        assert!(NumericalSemigroup::new(&[2, 4], 0).is_err());
        assert!(NumericalSemigroup::new(&[], 0).is_err());
        assert!(NumericalSemigroup::new(&[0, 1], 0).is_err());
    }

    #[test]
    fn closure_spot_check() {
        let s = sg(&[6, 7, 15]);
        for a in 0..60 {
            for b in 0..60 {
                if s.contains(a) && s.contains(b) {
                    assert!(s.contains(a + b));
                }
            }
        }
    }

    #[test]
    fn space_curve_semigroups() {
        let a = space_curve_semigroup(&LciParams::new(5, 2, 2).unwrap(), 0).unwrap();
        assert_eq!(a.generators(), &[4, 6, 5]);
        let b = space_curve_semigroup(&LciParams::new(5, 3, 2).unwrap(), 0).unwrap();
        assert_eq!(b.generators(), &[6, 4, 5]);
        assert_eq!(a.gaps(), b.gaps());
        let plane = NumericalSemigroup::new(&[5, 4], 0).unwrap();
        assert_eq!(plane.genus() - a.genus(), 2);
    }

    #[test]
    fn staircase_counts_small() {
        let counts = |g: &[u32], l| {
            staircase_counts(&sg(g), l, SearchMode::Pruned, Budget::default()).unwrap()
        };
        assert_eq!(counts(&[1], 5), vec![1; 6]);
        assert_eq!(counts(&[2, 3], 4), vec![1, 1, 2, 2, 2]);
        assert_eq!(counts(&[4, 5, 6], 2), vec![1, 1, 3]);
        assert_eq!(count_staircases(&sg(&[4, 5, 6]), 2).unwrap(), 3);
    }

    #[test]
    fn enumerated_staircases_are_modules() {
        let s = sg(&[4, 5, 6]);
        let all = enumerate_staircases(&s, 2).unwrap();
        let deltas: Vec<Vec<u32>> = all.iter().map(|st| st.delta().to_vec()).collect();
        assert_eq!(deltas, vec![vec![0, 4], vec![0, 5], vec![0, 6]]);
        for l in 0..8 {
            for st in enumerate_staircases(&s, l).unwrap() {
                assert!(st.is_valid_in(&s));
                assert!(u64::from(*st.delta().last().unwrap_or(&0)) <= s.search_bound(l));
            }
        }
    }

    #[test]
    fn small_table_is_a_resource_error() {
        let s = NumericalSemigroup::new(&[2, 3], 1).unwrap();
        assert!(matches!(count_staircases(&s, 5), Err(Error::Resource(_))));
    }

    #[test]
    fn node_budget_is_a_resource_error() {
        let s = sg(&[4, 5]);
        let err = staircase_counts(&s, 10, SearchMode::Pruned, Budget::nodes(50)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn hilb_oracle_series() {
        let h = hilb_series_oracle(&sg(&[2, 3]), 4).unwrap();
        assert_eq!(h, LaurentPoly::from_counts(&[1, 1, 2, 2, 2]));
        assert_eq!(h.precision(), Some(5));
        let h = hilb_series_oracle(&sg(&[4, 5, 6]), 2).unwrap();
        assert_eq!(h, LaurentPoly::from_counts(&[1, 1, 3]));
    }

    #[test]
    fn flag_counts_542() {
        let p = RsnParams::new(5, 4, 2).unwrap();
        assert_eq!(count_flag_pairs(&p, 0).unwrap(), 0);
        assert_eq!(count_flag_pairs(&p, 1).unwrap(), 0);
        assert_eq!(count_flag_pairs(&p, 2).unwrap(), 1);
        assert_eq!(count_flag_pairs(&p, 4).unwrap(), 3);
        assert_eq!(
            flag_series_oracle(&p, 4).unwrap(),
            LaurentPoly::from_counts(&[0, 0, 1, 1, 3])
        );
    }

    #[test]
    fn flag_pairs_are_valid() {
        let p = RsnParams::new(5, 4, 2).unwrap();
        let s = plane_curve_semigroup(&p, 200).unwrap();
        for k in 0..6 {
            let pairs = enumerate_flag_pairs(&p, k).unwrap();
            assert_eq!(pairs.len() as u64, count_flag_pairs(&p, k).unwrap());
            for fp in pairs {
                assert!(fp.is_valid(&s, &p));
                assert_eq!(fp.delta2.colength(), k as usize);
                assert_eq!(fp.quotient().len(), 4);
            }
        }
    }

    #[test]
    fn flag_oracle_752_starts_at_k4() {
        let p = RsnParams::new(7, 5, 2).unwrap();
        assert!(flag_series_oracle(&p, 3).unwrap().is_zero());
        assert_eq!(count_flag_pairs(&p, 4).unwrap(), 1);
    }

    #[test]
    fn flag_oracle_rejects_non_coprime() {
        let p = RsnParams::new(6, 4, 2).unwrap();
        assert!(matches!(
            flag_series_oracle(&p, 3),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn summary_json() {
        let v = serde_json::to_value(sg(&[4, 5, 6]).summary()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"generators": [4, 5, 6], "conductor": 8, "genus": 4, "gaps": [1, 2, 3, 7]})
        );
        let st = Staircase::new(vec![4, 0]);
        assert_eq!(serde_json::to_string(&st).unwrap(), "[0,4]");
    }
}
