//! Reduced Gröbner bases, normal forms and Hilbert series over `Z/32003`.
//!
//! Run with `cargo run --example groebner_basis`.

use rees_gorenstein::kernel::hilbert::{dimension_from_numerator, hilbert_denominator};
use rees_gorenstein::kernel::{groebner_basis, hilbert_numerator, PolyRing, PrimeField};

fn main() -> rees_gorenstein::Result<()> {
    let r = PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1), ("z", 1), ("w", 1)])?;
    let (x, y, z, w) = (r.var(0), r.var(1), r.var(2), r.var(3));
    let minor = |a, b, c, d| r.sub(&r.mul(a, b), &r.mul(c, d));

    // the twisted cubic: 2x2 minors of [[x, y, z], [y, z, w]]
    let gens = vec![minor(&x, &z, &y, &y), minor(&x, &w, &y, &z), minor(&y, &w, &z, &z)];
    let gb = groebner_basis(&r, &gens)?;
    println!("reduced Gröbner basis (degrevlex):");
    for g in gb.elements() {
        println!("  {}", r.format(g));
    }

    let f = r.mul(&r.pow(&y, 3), &w);
    println!("normal form of {} = {}", r.format(&f), r.format(&gb.normal_form(&f)));
    let g = r.sub(&r.mul(&x, &r.mul(&z, &z)), &r.mul(&r.mul(&y, &y), &z));
    println!("{} lies in the ideal: {}", r.format(&g), gb.contains(&g));

    let num = hilbert_numerator(&gb.leading_monomials(), r.weights());
    let den = hilbert_denominator(r.weights());
    println!("Hilbert series numerator {:?} over denominator {:?}", num.0, den.0);
    println!("Krull dimension {}", dimension_from_numerator(&num, r.weights()));
    Ok(())
}
