//! Depth, type, multiplicities and reduction numbers of the corpus rings.
//!
//! Run with `cargo run --example ring_invariants`.

use rees_gorenstein::corpus::{self, EXAMPLE_NAMES};
use rees_gorenstein::invariants::{artinian_length, depth_and_type, is_reduction, multiplicity, DEFAULT_RMAX};
use rees_gorenstein::kernel::PrimeField;

fn main() -> rees_gorenstein::Result<()> {
    println!("{:<18} {:>3} {:>5} {:>4} {:>4} {:>4} {:>4} {:>6}", "ring", "dim", "depth", "CM", "type", "e_m", "e_q", "r_q(m)");
    for name in EXAMPLE_NAMES {
        let inst = corpus::by_name(name, PrimeField::default())?;
        let inv = depth_and_type(&inst.ring)?;
        let m = inst.ring.maximal_ideal();
        let q = inst.q();
        let red = is_reduction(&q, &m, DEFAULT_RMAX)?.map_or("none".to_string(), |r| r.to_string());
        println!(
            "{:<18} {:>3} {:>5} {:>4} {:>4} {:>4} {:>4} {:>6}",
            name,
            inv.dim,
            inv.depth,
            inv.cm,
            inv.type_,
            multiplicity(&m)?,
            multiplicity(&q)?,
            red
        );
        println!("{:<18} l(A/q) = {}", "", artinian_length(&q)?);
    }
    Ok(())
}
