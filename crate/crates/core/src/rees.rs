//! Presentations of Rees algebras `R(q^n) = A[q^n t]` and the direct
//! Gorenstein test: Cohen–Macaulay with last Betti number 1.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{eliminate, PresentedRing};
use crate::invariants::{depth_and_type, resolve_ring};
use crate::kernel::{Field, Poly, PolyRing, Variable};

/// `R(q^n)` as `P[T_0..T_s]/K` with `T_j ↦ g_j t`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    pub ring: Arc<PresentedRing<F>>,
    /// Generators `g_j` of `q^n`, in the base ring's ambient `P`.
    pub generators: Vec<Poly<F>>,
    pub power: u32,
    /// Number of variables of the base ring; `T_j` is variable `base_vars + j`.
    pub base_vars: usize,
}

/// Exponent vectors of all monomials of total degree `n` in `d` letters,
/// in lexicographically decreasing order.
fn exponent_vectors(d: usize, n: u32) -> Vec<Vec<u32>> {
    if d == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in exponent_vectors(d - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All degree-`n` monomials in the parameters (no minimalization).
pub fn power_generators<F: Field>(r: &PolyRing<F>, params: &[Poly<F>], n: u32) -> Vec<Poly<F>> {
    exponent_vectors(params.len(), n)
        .into_iter()
        .map(|e| e.iter().zip(params).fold(r.one(), |acc, (&k, p)| r.mul(&acc, &r.pow(p, k))))
        .collect()
}

pub fn rees_presentation<F: Field>(a: &PresentedRing<F>, params: &[Poly<F>], n: u32) -> Result<ReesPresentation<F>> {
    if n == 0 {
        return Err(Error::InvalidInput("the power must be positive".into()));
    }
    let r = a.ambient();
    let gens = power_generators(r, params, n);
    let nb = r.nvars();
    let mut vars: Vec<Variable> = r.vars().to_vec();
    for (j, g) in gens.iter().enumerate() {
        vars.push(Variable { name: format!("T{j}"), weight: r.degree(g).unwrap() as u32 + 1 });
    }
    let rees = PolyRing::new(r.field().clone(), vars.clone())?;
    vars.push(Variable { name: "_t".into(), weight: 1 });
    let big = PolyRing::new(r.field().clone(), vars)?;
    let t = big.var(big.nvars() - 1);
    let mut ideal: Vec<Poly<F>> = a.relations().iter().map(|f| big.embed_prefix(r, f)).collect();
    for (j, g) in gens.iter().enumerate() {
        ideal.push(big.sub(&big.var(nb + j), &big.mul(&big.embed_prefix(r, g), &t)));
    }
    let kept = eliminate(&big, &ideal, &[big.nvars() - 1])?;
    let positions: Vec<usize> = (0..rees.nvars()).collect();
    let kernel: Vec<Poly<F>> =
        kept.iter().map(|g| rees.from_terms(g.terms().iter().map(|(m, c)| (m.remap(&positions, rees.weights()), c.clone())).collect())).collect();
    let pres = ReesPresentation { ring: PresentedRing::new(format!("R({}^{n})", a.name()), rees, kernel)?, generators: gens, power: n, base_vars: nb };
    if !substitution_vanishes(a, &pres) {
        return Err(Error::InternalInconsistency("Rees relation does not vanish under T_j -> g_j t".into()));
    }
    Ok(pres)
}

/// Every defining relation maps to zero in `A[t]` under `T_j ↦ g_j t`.
pub fn substitution_vanishes<F: Field>(a: &PresentedRing<F>, rp: &ReesPresentation<F>) -> bool {
    let r = a.ambient();
    let mut vars = r.vars().to_vec();
    vars.push(Variable { name: "_t".into(), weight: 1 });
    let at = PolyRing::new(r.field().clone(), vars).expect("one more variable");
    let t = at.var(r.nvars());
    let mut images: Vec<Poly<F>> = (0..r.nvars()).map(|i| at.var(i)).collect();
    images.extend(rp.generators.iter().map(|g| at.mul(&at.embed_prefix(r, g), &t)));
    let rels: Vec<Poly<F>> = a.relations().iter().map(|f| at.embed_prefix(r, f)).collect();
    let a_t = PresentedRing::new("A[t]", at.clone(), rels).expect("homogeneous");
    rp.ring.relations().iter().all(|f| a_t.is_zero(&rp.ring.ambient().substitute(f, &at, &images)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub nvars: usize,
    pub dim: i64,
    pub codim: i64,
    pub pd: usize,
    pub cm: bool,
    /// Last Betti number (the Cohen–Macaulay type when `cm`).
    pub last_betti: usize,
    pub gorenstein: bool,
    pub betti: Vec<usize>,
}

/// CM iff `pd = codim`; Gorenstein iff CM with last Betti number 1. Valid
/// because all weights are positive, so the degree-0 part is `k`.
pub fn graded_gorenstein_oracle<F: Field>(rp: &ReesPresentation<F>) -> Result<OracleVerdict> {
    let ring = &rp.ring;
    let res = resolve_ring(ring)?;
    let nvars = ring.nvars();
    let dim = ring.krull_dim();
    let codim = nvars as i64 - dim;
    let pd = res.pd().expect("complete");
    let cm = pd as i64 == codim;
    let betti = res.ranks();
    let last_betti = *betti.last().unwrap();
    Ok(OracleVerdict { nvars, dim, codim, pd, cm, last_betti, gorenstein: cm && last_betti == 1, betti })
}

/// Oracle on `R(q^n)`.
pub fn oracle<F: Field>(a: &PresentedRing<F>, params: &[Poly<F>], n: u32) -> Result<OracleVerdict> {
    graded_gorenstein_oracle(&rees_presentation(a, params, n)?)
}

/// Runs the oracle for each `n`: no `n ≠ d` may give a Gorenstein Rees
/// algebra, and `n = d` must when `expected_at_d` is true.
pub fn n_neq_d_suite<F: Field>(a: &PresentedRing<F>, params: &[Poly<F>], trials: &[u32], expected_at_d: Option<bool>) -> Result<Vec<(u32, bool)>> {
    let depth = depth_and_type(a)?.depth;
    if depth != 1 {
        return Err(Error::DepthNotOne(depth));
    }
    let d = a.krull_dim() as u32;
    let mut out = Vec::new();
    for &n in trials {
        let g = oracle(a, params, n)?.gorenstein;
        if n != d && g {
            return Err(Error::EquivalenceViolation(format!("R(q^{n}) is Gorenstein although n ≠ d = {d}")));
        }
        if n == d && expected_at_d.is_some_and(|e| e != g) {
            return Err(Error::EquivalenceViolation(format!("oracle at n = d gives {g}, criteria give {}", !g)));
        }
        out.push((n, g));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::kernel::PrimeField;

    #[test]
    fn plane_first_power() {
        let inst = corpus::regular_base(PrimeField::default()).unwrap();
        let rp = rees_presentation(&inst.ring, &inst.params, 1).unwrap();
        assert_eq!(rp.ring.nvars(), 4);
        assert_eq!(rp.ring.relations().len(), 1);
        let r = rp.ring.ambient();
        let rel = r.sub(&r.mul(&r.var(0), &r.var(3)), &r.mul(&r.var(1), &r.var(2)));
        let got = &rp.ring.relations()[0];
        assert!(*got == rel || *got == r.neg(&rel), "{}", r.format(got));
        let v = oracle(&inst.ring, &inst.params, 1).unwrap();
        assert!(v.gorenstein);
        assert_eq!(v.dim, 3);
    }

    #[test]
    fn plane_second_power_is_determinantal() {
        let inst = corpus::regular_base(PrimeField::default()).unwrap();
        let rp = rees_presentation(&inst.ring, &inst.params, 2).unwrap();
        let r = rp.ring.ambient().clone();
        assert_eq!(r.nvars(), 5);
        let (x, y, t0, t1, t2) = (r.var(0), r.var(1), r.var(2), r.var(3), r.var(4));
        for f in [r.sub(&r.mul(&t0, &t2), &r.mul(&t1, &t1)), r.sub(&r.mul(&x, &t1), &r.mul(&y, &t0)), r.sub(&r.mul(&x, &t2), &r.mul(&y, &t1))] {
            assert!(rp.ring.is_zero(&f));
        }
        let v = graded_gorenstein_oracle(&rp).unwrap();
        assert_eq!((v.cm, v.last_betti, v.gorenstein), (true, 2, false));
        assert_eq!(v.betti, vec![1, 3, 2]);
    }

    #[test]
    fn precondition() {
        let inst = corpus::regular_base(PrimeField::default()).unwrap();
        assert_eq!(n_neq_d_suite(&inst.ring, &inst.params, &[1], None), Err(Error::DepthNotOne(2)));
    }

    #[test]
    fn power_generators_are_all_monomials() {
        let r = PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1)]).unwrap();
        assert_eq!(power_generators(&r, &[r.var(0), r.var(1)], 3).len(), 4);
        assert_eq!(exponent_vectors(3, 2).len(), 6);
    }
}
