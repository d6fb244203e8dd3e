//! Z_{r,s,n}(q) from the product formula, next to direct enumeration.
//!
//!     cargo run --example closed_form -- 7 5 2 12

use hilbcurve::formulas::{z_le_part, z_r_part, z_rsn_closed, z_tm};
use hilbcurve::partitions::{series_from_enumeration, RsnParams};

fn main() -> hilbcurve::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (r, s, n, order) = match args[..] {
        [r, s, n, order] => (r, s, n, order),
        [] => (5, 4, 2, 10),
        _ => panic!("usage: closed_form R S N ORDER"),
    };
    let p = RsnParams::new(r, s, n)?;
    if let Some(v) = p.hypothesis_violation() {
        eprintln!("warning: {v}");
    }
    let closed = z_rsn_closed(&p, order)?;
    println!("closed      {closed}");
    println!("enumerated  {}", series_from_enumeration(&p, order));
    println!("  spread <= r-1  {}", z_le_part(&p, order)?);
    println!("  spread  = r    {}", z_r_part(&p, order)?);
    println!("Z_(2,2)(q,x) = {}", z_tm(2, 2, 6));
    Ok(())
}
