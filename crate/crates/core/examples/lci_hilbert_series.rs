//! Hilbert series of the space curves xv = w^n, x^(r-t) = v^t: closed form
//! against the staircase count in <tn, (r-t)n, r>.

use hilbcurve::formulas::{hilb_series_lci, LciParams};
use hilbcurve::semigroup::{hilb_series_oracle, NumericalSemigroup};

fn main() -> hilbcurve::Result<()> {
    for (r, t, n) in [(5, 2, 2), (5, 3, 2), (7, 2, 3), (7, 3, 2), (9, 2, 2)] {
        let p = LciParams::new(r, t, n)?;
        let formula = hilb_series_lci(&p, 8)?;
        let sg = NumericalSemigroup::for_colength(&[t * n, (r - t) * n, r], 8)?;
        let oracle = hilb_series_oracle(&sg, 8)?;
        let mark = if formula == oracle { "ok" } else { "MISMATCH" };
        println!(
            "{p}  <{},{},{}>  {formula}  [{mark}]",
            t * n,
            (r - t) * n,
            r
        );
    }
    Ok(())
}
