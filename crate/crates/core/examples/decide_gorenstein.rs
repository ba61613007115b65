//! The full decision procedure with consequences and the oracle, on every
//! corpus instance.
//!
//! Run with `cargo run --release --example decide_gorenstein`.

use rees_gorenstein::corpus::{self, EXAMPLE_NAMES};
use rees_gorenstein::decide::decide;
use rees_gorenstein::kernel::PrimeField;
use rees_gorenstein::report::{decision_report, Report};

fn main() -> rees_gorenstein::Result<()> {
    for name in EXAMPLE_NAMES {
        let inst = corpus::by_name(name, PrimeField::default())?;
        let rep = decide(&inst.ring, &inst.params, true)?;
        println!("{name}: {:?}", rep.outcome());
        if name == "hochster_roberts" {
            let mut flat = Report::new();
            decision_report(&mut flat, &rep);
            print!("{flat}");
        }
    }
    Ok(())
}
