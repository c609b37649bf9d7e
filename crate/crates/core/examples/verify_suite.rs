//! Running a verification suite and printing its report.
//!
//! `cargo run --example verify_suite -- simplex5 antipodal`

use pdetlab::families::Family;
use pdetlab::report::RunReport;
use pdetlab::suite::{run_suite, Suite, SuiteOptions};

fn main() -> pdetlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "polygon5".into());
    let suite: Suite = args.next().as_deref().unwrap_or("all").parse()?;

    let s = name.parse::<Family>()?.build()?;
    let mut report = RunReport::new(vec!["verify".into(), name]);
    run_suite(&s, suite, &SuiteOptions::default(), &mut report)?;
    print!("{}", report.render_table());
    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
