//! Runs the built-in suite and prints the table, or a single custom check.

use hilbcurve::verify::{self, CheckParams, CheckSpec, Route, RunOptions};
use hilbcurve::RsnParams;

fn main() -> hilbcurve::Result<()> {
    let reports = verify::run_suite(&verify::default_suite(), &RunOptions::default())?;
    print!("{}", verify::render_table(&reports));

    let mut spec = CheckSpec::new(
        "demo/fault",
        CheckParams::Rsn(RsnParams::new(5, 4, 2)?),
        8,
        [Route::ClosedForm, Route::PartitionEnum],
    );
    spec.inject_fault = Some(5);
    let report = verify::run_check(&spec, &RunOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
