//! The local cohomology profile, the conductor by two routes and the
//! `(S₂)`-ification `Ã = (1/a)(aA : b)`.
//!
//! Run with `cargo run --example s2_ification`.

use rees_gorenstein::corpus;
use rees_gorenstein::kernel::PrimeField;
use rees_gorenstein::s2::{analyze, pair_independence, s2_presentation};
use rees_gorenstein::Error;

fn main() -> rees_gorenstein::Result<()> {
    for name in ["hochster_roberts", "two_planes", "idealization_x2y3"] {
        let inst = corpus::by_name(name, PrimeField::default())?;
        let r = inst.ring.ambient();
        let an = analyze(&inst.ring, &inst.params, 0)?;
        println!("{name}");
        for e in &an.profile.entries {
            println!("  H^{} vanishes: {} (length {:?})", e.i, e.vanishes, e.length);
        }
        let d = &an.data;
        println!("  pair a = {}, b = {}", r.format(&d.a), r.format(&d.b));
        println!("  aA : b = {}", d.colon.format_canonical());
        println!("  l(H^1) = {}, socle {}", d.h1_length, d.h1_socle_direct);
        println!("  conductor (pair route) = {}", d.conductor.format_canonical());
        println!("  conductor (Ext route)  = {}", an.conductor_dual.format_canonical());
        println!("  independent of the pair: {}", pair_independence(&inst.ring, &inst.params, 0, &an)?);
        match s2_presentation(&inst.ring, d) {
            Ok(p) => {
                println!("  Ã presented in {} variables, l(Ã/A) = {}", p.ring.nvars(), p.cokernel_length);
                for g in p.ring.relations() {
                    println!("    {}", p.ring.ambient().format(g));
                }
            }
            Err(Error::NonConnected(k)) => println!("  Ã is a product: its degree-0 part has dimension {k}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
