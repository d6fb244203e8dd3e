//! Membership in P(r,s,n) and P(t,m), enumeration and the two-way split.

use hilbcurve::partitions::{self, classify_decomposition, Partition, RsnParams};

fn main() -> hilbcurve::Result<()> {
    let p = RsnParams::new(7, 5, 2)?;
    for parts in [
        vec![5, 5, 3, 3, 1],
        vec![8, 5, 3, 3, 1],
        vec![5, 3, 3, 3, 1],
        vec![8, 8, 3, 3, 1],
    ] {
        let mu = Partition::new(parts)?;
        println!("{mu:<14} in P{p}: {}", partitions::is_member_rsn(&mu, &p));
    }

    println!("minimal size in P{p}: {}", partitions::minimal_size(&p)?);
    for mu in partitions::enumerate_rsn(&p, 16) {
        let d = classify_decomposition(&mu, &p)?;
        println!("{:>3}  {mu:<16} {:?}", mu.size(), d.kind);
    }

    let tm = partitions::enumerate_tm(2, 1);
    println!(
        "P(2,1) = {}",
        tm.iter()
            .map(|nu| nu.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(())
}
