//! Minimal graded free resolutions, Betti tables and `Ext` into the
//! canonical module of the ambient polynomial ring.
//!
//! Run with `cargo run --example free_resolution`.

use rees_gorenstein::corpus;
use rees_gorenstein::kernel::PrimeField;
use rees_gorenstein::module::{ext_from_resolution, minimal_free_resolution, ModulePresentation};

fn main() -> rees_gorenstein::Result<()> {
    for name in ["two_planes", "hochster_roberts"] {
        let inst = corpus::by_name(name, PrimeField::default())?;
        let ring = &inst.ring;
        let res = minimal_free_resolution(&ModulePresentation::ring(ring), ring.nvars() + 1)?;
        println!("{name}: ranks {:?}, pd {:?}", res.ranks(), res.pd());
        println!("{}", res.betti_table());
        println!("d∘d = 0: {}, minimal: {}", res.composition_is_zero(), res.is_minimal());
        for i in 0..=ring.nvars() {
            let ext = ext_from_resolution(&res, i)?;
            if !ext.is_zero() {
                println!("  Ext^{i}(A, ω): dim {}, length {:?}, generators {}", ext.dim(), ext.length(), ext.min_generators()?);
            }
        }
        println!();
    }
    Ok(())
}
