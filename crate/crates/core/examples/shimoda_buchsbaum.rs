//! Two shortcuts in dimension two: Shimoda's test on a pair of parameters,
//! and the multiplicity-two criterion for Buchsbaum rings of depth one.
//!
//! Run with `cargo run --example shimoda_buchsbaum`.

use rees_gorenstein::corpus::{self, EXAMPLE_NAMES};
use rees_gorenstein::decide::{buchsbaum_criterion, shimoda_check};
use rees_gorenstein::invariants::DEFAULT_RMAX;
use rees_gorenstein::kernel::PrimeField;

fn main() -> rees_gorenstein::Result<()> {
    for name in EXAMPLE_NAMES {
        let inst = corpus::by_name(name, PrimeField::default())?;
        let s = shimoda_check(&inst.ring, &inst.params[0], &inst.params[1])?;
        println!("{name}: regular {}/{}, colon intersection {}, socle {}, verdict {}", s.a_regular, s.b_regular, s.colon_intersection, s.socle, s.verdict);
    }

    // two planes meeting in a point are Buchsbaum of depth one
    let tp = corpus::two_planes(PrimeField::default())?;
    let b = buchsbaum_criterion(&tp.ring, &tp.params, true, DEFAULT_RMAX)?;
    println!("two_planes: e_m = {}, reduction number {:?}, e_q = {:?} = l(A/b) = {}, verdict {}", b.e_m, b.reduction_number, b.e_q, b.len_b, b.verdict);

    let plane = corpus::regular_base(PrimeField::default())?;
    match buchsbaum_criterion(&plane.ring, &plane.params, false, DEFAULT_RMAX) {
        Err(e) => println!("regular_base: {e}"),
        Ok(_) => unreachable!("k[x,y] has depth 2"),
    }
    Ok(())
}
