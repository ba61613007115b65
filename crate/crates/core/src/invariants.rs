//! Numerical invariants of `A = P/I` at the irrelevant ideal: depth and
//! type from a minimal resolution, lengths of Artinian quotients,
//! Hilbert–Samuel multiplicities and reduction numbers.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{colon, ideals_equal, Ideal, PresentedRing};
use crate::kernel::Field;
use crate::module::{ext_from_resolution, minimal_free_resolution, GradedResolution, ModulePresentation};

/// Default bound on the power `n` used by [`multiplicity`].
pub const MULTIPLICITY_CAP: usize = 30;
/// Default bound on the reduction number searched by [`is_reduction`].
pub const DEFAULT_RMAX: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub nvars: usize,
    pub dim: i64,
    pub depth: i64,
    pub pd: usize,
    pub cm: bool,
    /// `r_A(A)`, the dimension of the socle of the first nonvanishing local
    /// cohomology module.
    pub type_: usize,
    pub betti: Vec<usize>,
}

pub fn krull_dim<F: Field>(a: &PresentedRing<F>) -> i64 {
    a.krull_dim()
}

/// Minimal free resolution of `A` over its ambient polynomial ring.
pub fn resolve_ring<F: Field>(a: &PresentedRing<F>) -> Result<GradedResolution<F>> {
    let res = minimal_free_resolution(&ModulePresentation::ring(a), a.nvars() + 1)?;
    if !res.is_complete() {
        return Err(Error::InternalInconsistency("resolution longer than the number of variables".into()));
    }
    Ok(res)
}

/// Depth by Auslander–Buchsbaum and the type `r_A(A) = μ(Ext^{pd}_P(A, ω_P))`:
/// by graded duality `Ext^{pd}` is the Matlis dual of `H^{depth}_m(A)`, and
/// the socle of a module corresponds to the minimal generators of its dual.
pub fn depth_and_type<F: Field>(a: &PresentedRing<F>) -> Result<InvariantReport> {
    let res = resolve_ring(a)?;
    report_from_resolution(a, &res)
}

pub fn report_from_resolution<F: Field>(a: &PresentedRing<F>, res: &GradedResolution<F>) -> Result<InvariantReport> {
    let n = a.nvars();
    let pd = res.pd().expect("complete");
    let dim = a.krull_dim();
    let depth = n as i64 - pd as i64;
    let cm = depth == dim;
    let type_ = if cm { *res.ranks().last().unwrap() } else { ext_from_resolution(res, pd)?.min_generators()? };
    Ok(InvariantReport { nvars: n, dim, depth, pd, cm, type_, betti: res.ranks() })
}

/// Depth as the smallest `i` with `Ext^{n-i}_P(A, ω_P) ≠ 0`.
pub fn depth_from_ext<F: Field>(a: &PresentedRing<F>, res: &GradedResolution<F>) -> Result<i64> {
    let n = a.nvars();
    for i in 0..=n {
        if !ext_from_resolution(res, n - i)?.is_zero() {
            return Ok(i as i64);
        }
    }
    Err(Error::InternalInconsistency("all Ext modules vanish".into()))
}

/// `ℓ(A/J)` for `J` primary to the irrelevant ideal.
pub fn artinian_length<F: Field>(j: &Ideal<F>) -> Result<i64> {
    j.colength().ok_or(Error::NotArtinian)
}

/// `e_J(A)`: the `d`-th differences of `n ↦ ℓ(A/J^n)`, once they agree for
/// three consecutive `n`.
pub fn multiplicity<F: Field>(j: &Ideal<F>) -> Result<i64> {
    multiplicity_capped(j, MULTIPLICITY_CAP)
}

pub fn multiplicity_capped<F: Field>(j: &Ideal<F>, cap: usize) -> Result<i64> {
    if j.colength().is_none() {
        return Err(Error::NotArtinian);
    }
    let d = j.owner().krull_dim().max(0) as usize;
    let binom: Vec<i64> = (0..=d).map(|k| binomial(d, k)).collect();
    let mut lengths = vec![0i64];
    let mut power = j.owner().ideal(j.canonical_gens());
    let mut last: Option<i64> = None;
    let mut streak = 0;
    for n in 1..=cap {
        if n > 1 {
            let next = power.product(j)?;
            power = j.owner().ideal(next.canonical_gens());
        }
        lengths.push(power.colength().ok_or(Error::NotArtinian)?);
        if n < d {
            continue;
        }
        let diff: i64 = (0..=d).map(|k| if k % 2 == 0 { binom[k] } else { -binom[k] } * lengths[n - k]).sum();
        if last == Some(diff) {
            streak += 1;
        } else {
            streak = 1;
            last = Some(diff);
        }
        if streak == 3 {
            return Ok(diff);
        }
    }
    Err(Error::NoStabilization(cap))
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Smallest `r ≤ r_max` with `c^{r+1} = q c^r`, or `None`.
pub fn is_reduction<F: Field>(q: &Ideal<F>, c: &Ideal<F>, r_max: usize) -> Result<Option<usize>> {
    if !c.contains_ideal(q)? {
        return Err(Error::NotContained);
    }
    let mut cr = c.owner().unit_ideal();
    for r in 0..=r_max {
        let lhs = cr.product(c)?;
        let rhs = q.product(&cr)?;
        if ideals_equal(&lhs, &rhs)? {
            return Ok(Some(r));
        }
        cr = c.owner().ideal(lhs.canonical_gens());
    }
    Ok(None)
}

/// `A/J` is Gorenstein: `ℓ((J : m)/J) = 1`.
pub fn artinian_gorenstein<F: Field>(j: &Ideal<F>) -> Result<bool> {
    Ok(socle_of_quotient(j)? == 1)
}

/// `ℓ((J : m)/J)`, the socle dimension of the Artinian ring `A/J`.
pub fn socle_of_quotient<F: Field>(j: &Ideal<F>) -> Result<i64> {
    if j.colength().is_none() {
        return Err(Error::NotArtinian);
    }
    let owner: &Arc<PresentedRing<F>> = j.owner();
    let top = colon(j, &owner.maximal_ideal())?;
    ModulePresentation::ideal_quotient(&top, j)?.length().ok_or(Error::NotFiniteLength)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::kernel::{PolyRing, PrimeField};

    fn plane() -> Arc<PresentedRing<PrimeField>> {
        PresentedRing::polynomial("k[x,y]", PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1)]).unwrap())
    }

    #[test]
    fn dimensions() {
        let f = PrimeField::default();
        assert_eq!(krull_dim(&plane()), 2);
        assert_eq!(krull_dim(&corpus::hochster_roberts(f).unwrap().ring), 2);
        assert_eq!(krull_dim(&corpus::two_planes(f).unwrap().ring), 2);
    }

    #[test]
    fn hypersurface_is_gorenstein() {
        let r = PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1)]).unwrap();
        let a = PresentedRing::new("A", r.clone(), vec![r.pow(&r.var(0), 2)]).unwrap();
        let rep = depth_and_type(&a).unwrap();
        assert_eq!((rep.depth, rep.cm, rep.type_), (1, true, 1));
    }

    #[test]
    fn depth_one_corpus_rings() {
        let f = PrimeField::default();
        for inst in [corpus::hochster_roberts(f).unwrap(), corpus::two_planes(f).unwrap()] {
            let rep = depth_and_type(&inst.ring).unwrap();
            assert_eq!((rep.depth, rep.cm, rep.type_, rep.pd), (1, false, 1, 3));
            let res = resolve_ring(&inst.ring).unwrap();
            assert_eq!(depth_from_ext(&inst.ring, &res).unwrap(), 1);
        }
    }

    #[test]
    fn lengths() {
        let a = plane();
        let r = a.ambient().clone();
        assert_eq!(artinian_length(&a.maximal_ideal()).unwrap(), 1);
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(artinian_length(&a.ideal(vec![r.pow(&x, 2), r.pow(&y, 3)])).unwrap(), 6);
        assert_eq!(artinian_length(&a.ideal(vec![x.clone()])), Err(Error::NotArtinian));
        let hr = corpus::hochster_roberts(PrimeField::default()).unwrap();
        assert_eq!(artinian_length(&hr.ring.maximal_ideal()).unwrap(), 1);
    }

    #[test]
    fn multiplicities() {
        let a = plane();
        assert_eq!(multiplicity(&a.maximal_ideal()).unwrap(), 1);
        let r = a.ambient().clone();
        assert_eq!(multiplicity(&a.ideal(vec![r.pow(&r.var(0), 2), r.pow(&r.var(1), 3)])).unwrap(), 6);
        let tp = corpus::two_planes(PrimeField::default()).unwrap();
        assert_eq!(multiplicity(&tp.ring.maximal_ideal()).unwrap(), 2);
        let hr = corpus::hochster_roberts(PrimeField::default()).unwrap();
        assert_eq!(multiplicity(&hr.q()).unwrap(), 2);
        assert_eq!(multiplicity(&hr.ring.maximal_ideal()).unwrap(), 2);
    }

    #[test]
    fn reductions() {
        let a = plane();
        let r = a.ambient().clone();
        let m = a.maximal_ideal();
        assert_eq!(is_reduction(&m, &m, 10).unwrap(), Some(0));
        let q = a.ideal(vec![r.pow(&r.var(0), 2), r.pow(&r.var(1), 2)]);
        // q is generated in degree 2, so q·m^r never reaches m^{r+1}
        assert_eq!(is_reduction(&q, &m, 4).unwrap(), None);
        assert_eq!(is_reduction(&q, &m.power(2), 4).unwrap(), Some(1));
        assert_eq!(is_reduction(&m, &q, 4), Err(Error::NotContained));
        let hr = corpus::hochster_roberts(PrimeField::default()).unwrap();
        assert_eq!(is_reduction(&hr.q(), &hr.ring.maximal_ideal(), 10).unwrap(), Some(1));
    }

    #[test]
    fn artinian_gorenstein_quotients() {
        let a = plane();
        let r = a.ambient().clone();
        let (x, y) = (r.var(0), r.var(1));
        assert!(artinian_gorenstein(&a.ideal(vec![r.pow(&x, 2), r.pow(&y, 2)])).unwrap());
        assert!(!artinian_gorenstein(&a.maximal_ideal().power(2)).unwrap());
        assert_eq!(artinian_gorenstein(&a.ideal(vec![x])), Err(Error::NotArtinian));
    }
}
