//! Numerical semigroups and the staircase count of their monomial ideals.

use hilbcurve::semigroup::{enumerate_staircases, hilb_series_oracle, NumericalSemigroup};

fn main() -> hilbcurve::Result<()> {
    for gens in [&[2, 3][..], &[4, 5], &[4, 5, 6]] {
        let sg = NumericalSemigroup::for_colength(gens, 10)?;
        println!("{}", serde_json::to_string(&sg.summary()).unwrap());
        let h = hilb_series_oracle(&sg, 10)?;
        println!("  {h}");
        println!("  stable from 2g = {}", 2 * sg.genus());
    }

    let sg = NumericalSemigroup::for_colength(&[4, 5, 6], 3)?;
    for st in enumerate_staircases(&sg, 3)? {
        println!("colength 3: complement {:?}", st.delta());
    }
    Ok(())
}
