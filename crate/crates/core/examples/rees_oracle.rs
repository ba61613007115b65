//! Presenting `R(q^n)` by elimination and testing it directly: Gorenstein
//! exactly at `n = d` for a depth-one base.
//!
//! Run with `cargo run --example rees_oracle`.

use rees_gorenstein::corpus;
use rees_gorenstein::kernel::PrimeField;
use rees_gorenstein::rees::{graded_gorenstein_oracle, n_neq_d_suite, rees_presentation};

fn main() -> rees_gorenstein::Result<()> {
    let hr = corpus::hochster_roberts(PrimeField::default())?;
    let rp = rees_presentation(&hr.ring, &hr.params, 2)?;
    let r = rp.ring.ambient();
    println!("R(q^2) over {}: {} variables, weights {:?}", hr.name(), r.nvars(), r.weights());
    for g in rp.ring.relations() {
        println!("  {}", r.format(g));
    }
    let v = graded_gorenstein_oracle(&rp)?;
    println!("betti {:?}, codim {}, CM {}, Gorenstein {}", v.betti, v.codim, v.cm, v.gorenstein);

    for (n, g) in n_neq_d_suite(&hr.ring, &hr.params, &[1, 2, 3], Some(true))? {
        println!("n = {n}: Gorenstein {g}");
    }

    let plane = corpus::regular_base(PrimeField::default())?;
    let v = graded_gorenstein_oracle(&rees_presentation(&plane.ring, &plane.params, 2)?)?;
    println!("over k[x,y], R((x,y)^2): CM {}, type {}, Gorenstein {}", v.cm, v.last_betti, v.gorenstein);
    Ok(())
}
