//! Truncated Laurent series: products, geometric expansions, precision.

use hilbcurve::qseries::{geom_expand, BivariatePoly, LaurentPoly};

fn main() -> hilbcurve::Result<()> {
    let a = LaurentPoly::from_i64s(-1, &[1, 2, 0, -1]);
    let b = LaurentPoly::from_i64s(0, &[1, 1]).truncate(4);
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", &a + &b);
    println!("a * b   = {}", &a * &b);

    let g = geom_expand(3, 10)?;
    println!("1/(1-q^3) = {g}");
    let one = &g * &LaurentPoly::from_i64s(0, &[1, 0, 0, -1]);
    println!("check     = {one}");

    let x = BivariatePoly::new(vec![LaurentPoly::one(), LaurentPoly::monomial(1, 1)])?;
    println!("(1 + x q)^2 = {}", &x * &x);
    println!("{}", serde_json::to_string(&g).unwrap());
    Ok(())
}
