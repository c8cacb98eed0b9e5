//! Runs the quick verification suites and prints one line per check.

use kunzlab::cli::verify::{run_suite, Suite};
use kunzlab::refdata::ReferenceData;
use kunzlab::Engine;

fn main() -> kunzlab::Result<()> {
    let engine = Engine::new();
    let data = ReferenceData::embedded();
    for suite in [Suite::Closed, Suite::Med, Suite::Family] {
        for c in run_suite(suite, &engine, &data)? {
            println!(
                "{} {}: {}",
                if c.pass { "ok  " } else { "FAIL" },
                c.name,
                c.detail
            );
        }
    }
    Ok(())
}
