//! Sums, intersections, colons, saturation, elimination and ring-map
//! kernels, both in a polynomial ring and in a quotient ring.
//!
//! Run with `cargo run --example ideal_operations`.

use rees_gorenstein::ideal::{colon_element, eliminate, intersect, ring_map_kernel, saturate, PresentedRing};
use rees_gorenstein::kernel::{PolyRing, PrimeField};

fn main() -> rees_gorenstein::Result<()> {
    let r = PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1), ("u", 1), ("v", 1)])?;
    let v: Vec<_> = (0..4).map(|i| r.var(i)).collect();
    let p = PresentedRing::polynomial("P", r.clone());

    let plane1 = p.ideal(vec![v[2].clone(), v[3].clone()]);
    let plane2 = p.ideal(vec![v[0].clone(), v[1].clone()]);
    let both = intersect(&plane1, &plane2)?;
    println!("(u, v) ∩ (x, y) = {}", both.format_canonical());

    // two planes meeting in a point
    let a = p.quotient(&both, "two_planes")?;
    let q1 = r.add(&v[0], &v[2]);
    let q2 = r.add(&v[1], &v[3]);
    let colon = colon_element(&a.ideal(vec![q1.clone()]), &q2)?;
    println!("in A: (x+u) : (y+v) = {}", colon.format_canonical());
    println!("x+u is a nonzerodivisor of A: {}", a.is_nonzerodivisor(&q1)?);
    println!("x is a nonzerodivisor of A: {}", a.is_nonzerodivisor(&v[0])?);

    let j = p.ideal(vec![r.mul(&r.mul(&v[0], &v[0]), &v[1]), r.mul(&v[0], &v[2])]);
    let (sat, k) = saturate(&j, &p.ideal(vec![v[0].clone()]))?;
    println!("(x^2 y, x u) : x^∞ = {} (stable after {k} steps)", sat.format_canonical());

    // eliminate t from (x - t^2, y - t^3) with t of weight 1, x of weight 2, y of weight 3
    let s = PolyRing::with_vars(PrimeField::default(), &[("t", 1), ("x", 2), ("y", 3)])?;
    let (t, x, y) = (s.var(0), s.var(1), s.var(2));
    let kept = eliminate(&s, &[s.sub(&x, &s.pow(&t, 2)), s.sub(&y, &s.pow(&t, 3))], &[0])?;
    for g in kept {
        println!("eliminant: {}", s.format(&g));
    }

    // kernel of k[a,b,c,d] -> k[x,y], (a,b,c,d) -> (x^2, y, x^3, xy)
    let plane = PresentedRing::polynomial("k[x,y]", PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1)])?);
    let pr = plane.ambient();
    let (x, y) = (pr.var(0), pr.var(1));
    let (source, kernel) = ring_map_kernel(&plane, &[pr.pow(&x, 2), y.clone(), pr.pow(&x, 3), pr.mul(&x, &y)], &["a", "b", "c", "d"])?;
    println!("source weights {:?}", source.weights());
    for g in kernel {
        println!("kernel: {}", source.format(&g));
    }
    Ok(())
}
