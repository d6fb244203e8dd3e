//! Counting nested monomial ideals in <r,s> reproduces Z_{r,s,n}.

use hilbcurve::formulas::z_rsn_closed;
use hilbcurve::partitions::RsnParams;
use hilbcurve::semigroup::{enumerate_flag_pairs, flag_series_oracle};

fn main() -> hilbcurve::Result<()> {
    let p = RsnParams::new(5, 4, 2)?;
    for pair in enumerate_flag_pairs(&p, 2)? {
        println!(
            "delta1 {:?}  delta2 {:?}  quotient {:?}",
            pair.delta1,
            pair.delta2,
            pair.quotient()
        );
    }
    println!("oracle  {}", flag_series_oracle(&p, 10)?);
    println!("closed  {}", z_rsn_closed(&p, 10)?);
    Ok(())
}
