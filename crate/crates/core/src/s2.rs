//! The (S₂)-ification `Ã = (1/a)(aA :_A b)` of `A` for a filter-regular pair
//! `a, b` inside the conductor, the conductor `c = (0) :_A H¹_m(A)` by two
//! independent routes, and the cohomological hypothesis profile
//! `H^i_m(A) = 0` for `i ≠ 1, d` with `ℓ(H¹_m(A)) < ∞`.
//!
//! Local cohomology is accessed through its graded Matlis dual
//! `Ext^{n-i}_P(A, ω_P)`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{colon_element, ideals_equal, ring_division, saturate, Ideal, PresentedRing};
use crate::invariants::{report_from_resolution, resolve_ring, InvariantReport};
use crate::kernel::hilbert::hilbert_denominator;
use crate::kernel::{Field, Poly, PolyRing, Variable};
use crate::module::{ext_from_resolution, minimal_free_resolution, GradedResolution, ModulePresentation};

/// Number of candidate pairs tried before giving up.
pub const PAIR_TRIALS: usize = 24;
/// Largest power used to push a candidate element into the conductor.
const MAX_POWER: u32 = 8;

/// One row of the profile: `Ext^{n-i}_P(A, ω_P)`, dual to `H^i_m(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub i: usize,
    pub ext_index: usize,
    pub vanishes: bool,
    pub dim: i64,
    pub length: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct HypothesisProfile<F: Field> {
    pub entries: Vec<ProfileEntry>,
    pub verdict: bool,
    pub invariants: InvariantReport,
    /// `Ext^{n-1}_P(A, ω_P)`, the Matlis dual of `H¹_m(A)`.
    pub h1_dual: ModulePresentation<F>,
}

impl<F: Field> HypothesisProfile<F> {
    /// `ℓ(H¹_m(A))` from the dual side, when finite.
    pub fn h1_length(&self) -> Option<i64> {
        self.h1_dual.length()
    }
}

/// Computes `Ext^{n-i}(A, ω_P)` for `0 ≤ i < d` from the minimal resolution.
pub fn hypothesis_profile<F: Field>(a: &PresentedRing<F>) -> Result<HypothesisProfile<F>> {
    let res = resolve_ring(a)?;
    profile_from_resolution(a, &res)
}

pub fn profile_from_resolution<F: Field>(a: &PresentedRing<F>, res: &GradedResolution<F>) -> Result<HypothesisProfile<F>> {
    let n = a.nvars();
    let d = a.krull_dim().max(0) as usize;
    let invariants = report_from_resolution(a, res)?;
    let mut entries = Vec::new();
    let mut h1_dual = None;
    for i in 0..d {
        let e = ext_from_resolution(res, n - i)?;
        let length = e.length();
        entries.push(ProfileEntry { i, ext_index: n - i, vanishes: e.is_zero(), dim: e.dim(), length });
        if i == 1 {
            h1_dual = Some(e);
        }
    }
    let h1_dual = match h1_dual {
        Some(e) => e,
        None => ext_from_resolution(res, n - 1)?,
    };
    let verdict = d >= 2 && entries.iter().all(|e| if e.i == 1 { e.length.is_some() } else { e.vanishes });
    Ok(HypothesisProfile { entries, verdict, invariants, h1_dual })
}

/// Route 2: `c = ann_A(Ext^{n-1}_P(A, ω_P))`; a module and its Matlis dual
/// have the same annihilator.
pub fn conductor_crosscheck<F: Field>(a: &Arc<PresentedRing<F>>, profile: &HypothesisProfile<F>) -> Result<Ideal<F>> {
    let ann = profile.h1_dual.annihilator()?;
    Ok(a.ideal(ann.gens().to_vec()).interreduced())
}

/// `(I : x) = I`.
pub fn is_regular<F: Field>(a: &Arc<PresentedRing<F>>, x: &Poly<F>) -> Result<bool> {
    if a.is_zero(x) {
        return Ok(false);
    }
    a.is_nonzerodivisor(x)
}

/// `b` is filter-regular on `A/xA`: `(I + xP : b) ⊆ sat(I + xP, m)`.
pub fn is_filter_regular<F: Field>(a: &Arc<PresentedRing<F>>, x: &Poly<F>, b: &Poly<F>) -> Result<bool> {
    let j = a.ideal(vec![x.clone()]);
    let (sat, _) = saturate(&j, &a.maximal_ideal())?;
    let col = colon_element(&j, b)?;
    sat.contains_ideal(&col)
}

/// Smallest power `x^k` (`k ≤ MAX_POWER`) lying in `c`.
fn power_into<F: Field>(c: &Ideal<F>, x: &Poly<F>) -> Option<Poly<F>> {
    let r = c.ring();
    let mut p = x.clone();
    for _ in 1..=MAX_POWER {
        if c.contains(&p) {
            return Some(p);
        }
        p = r.mul(&p, x);
    }
    None
}

/// Candidate pairs: the first two generators of `q` (both orders), then
/// seeded random homogeneous combinations of powers of the generators.
fn candidate_pair<F: Field>(a: &PresentedRing<F>, q: &[Poly<F>], trial: usize, rng: &mut ChaCha8Rng) -> (Poly<F>, Poly<F>) {
    let r = a.ambient();
    match trial {
        0 => (q[0].clone(), q[1].clone()),
        1 => (q[1].clone(), q[0].clone()),
        _ => {
            let degs: Vec<i64> = q.iter().map(|g| r.degree(g).unwrap() as i64).collect();
            let l = degs.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d));
            let powers: Vec<Poly<F>> = q.iter().zip(&degs).map(|(g, &d)| r.pow(g, (l / d) as u32)).collect();
            let mut combo = || {
                let mut acc = r.zero();
                for p in &powers {
                    let c = r.field().from_i64(rng.gen_range(1..=97));
                    acc = r.add(&acc, &r.scale(p, &c));
                }
                acc
            };
            let x = combo();
            let y = combo();
            (x, y)
        }
    }
}

/// A pair `a, b ∈ c` with `a` regular and `b` filter-regular modulo `a`.
/// Candidates outside `c` are replaced by their smallest power inside `c`.
pub fn filter_regular_pair<F: Field>(a: &Arc<PresentedRing<F>>, q: &[Poly<F>], c: &Ideal<F>, seed: u64) -> Result<(Poly<F>, Poly<F>)> {
    select_pair(a, q, c, seed, 0)
}

/// As [`filter_regular_pair`], skipping the first `skip` valid pairs.
pub fn select_pair<F: Field>(a: &Arc<PresentedRing<F>>, q: &[Poly<F>], c: &Ideal<F>, seed: u64, skip: usize) -> Result<(Poly<F>, Poly<F>)> {
    if a.krull_dim() < 2 || q.len() < 2 {
        return Err(Error::WrongDimension { expected: 2, got: a.krull_dim() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = 0;
    let mut seen: Vec<(Poly<F>, Poly<F>)> = Vec::new();
    for trial in 0..PAIR_TRIALS {
        let (x, y) = candidate_pair(a, q, trial, &mut rng);
        let (Some(x), Some(y)) = (power_into(c, &x), power_into(c, &y)) else { continue };
        if seen.contains(&(x.clone(), y.clone())) {
            continue;
        }
        seen.push((x.clone(), y.clone()));
        if is_regular(a, &x)? && is_filter_regular(a, &x, &y)? {
            if found == skip {
                return Ok((x, y));
            }
            found += 1;
        }
    }
    Err(Error::PairNotFound(PAIR_TRIALS))
}

/// `Ã` recorded module-theoretically inside `A`.
#[derive(Clone, Debug)]
pub struct S2Data<F: Field> {
    pub a: Poly<F>,
    pub b: Poly<F>,
    /// `aA :_A b = a·Ã`.
    pub colon: Ideal<F>,
    /// Numerators `g_j` of the fractions `g_j / a` that, with `1`, generate
    /// `Ã` as an `A`-module; a minimal set modulo `aA`.
    pub numerators: Vec<Poly<F>>,
    /// Route 1: `c = ann_A((aA : b)/aA)`.
    pub conductor: Ideal<F>,
    pub h1_length: i64,
    /// `ℓ((0 :_H m))` for `H = (aA : b)/aA`.
    pub h1_socle_direct: i64,
    /// Projective dimension of `aA : b` over `P`.
    pub colon_pd: usize,
}

pub fn s2_construct<F: Field>(ring: &Arc<PresentedRing<F>>, pair: (&Poly<F>, &Poly<F>)) -> Result<S2Data<F>> {
    let (a, b) = pair;
    let a_ideal = ring.ideal(vec![a.clone()]);
    let colon = colon_element(&a_ideal, b)?;
    let h = ModulePresentation::ideal_quotient(&colon, &a_ideal)?;
    let h1_length = h.length().ok_or_else(|| Error::DataError("(aA : b)/aA has infinite length; the pair is not filter-regular".into()))?;
    let conductor = ring.ideal(h.annihilator()?.gens().to_vec()).interreduced();
    let h1_socle_direct = if h1_length > 0 { h.socle_dim()? } else { 0 };

    let r = ring.ambient();
    let mut cands: Vec<Poly<F>> = colon.canonical_gens();
    cands.sort_by_key(|g| r.degree(g).unwrap());
    let mut numerators: Vec<Poly<F>> = Vec::new();
    for g in cands {
        let mut gens = vec![a.clone()];
        gens.extend(numerators.iter().cloned());
        if !ring.ideal(gens).contains(&g) {
            numerators.push(g);
        }
    }

    let colon_module = ModulePresentation::ideal(&colon)?;
    let res = minimal_free_resolution(&colon_module, ring.nvars() + 1)?;
    let colon_pd = res.pd().ok_or_else(|| Error::InternalInconsistency("incomplete resolution".into()))?;
    Ok(S2Data { a: a.clone(), b: b.clone(), colon, numerators, conductor, h1_length, h1_socle_direct, colon_pd })
}

/// `r_A(H¹_m(A)) = μ(Ext^{n-1}_P(A, ω_P))`, cross-checked against the socle of
/// `(aA : b)/aA`.
pub fn h1_socle<F: Field>(profile: &HypothesisProfile<F>, s2: &S2Data<F>) -> Result<usize> {
    if s2.h1_length == 0 {
        return Err(Error::NotApplicable("H¹_m(A) = 0".into()));
    }
    let mu = profile.h1_dual.min_generators()?;
    if mu as i64 != s2.h1_socle_direct {
        return Err(Error::InternalInconsistency(format!("socle of H¹: {mu} from Ext, {} from (aA:b)/aA", s2.h1_socle_direct)));
    }
    Ok(mu)
}

/// Standardness of `q` under the hypothesis profile: `q ⊆ c`.
pub fn is_standard_parameters<F: Field>(profile: &HypothesisProfile<F>, q: &Ideal<F>, c: &Ideal<F>) -> Result<bool> {
    if !profile.verdict {
        return Err(Error::HypothesisNotVerified("the cohomology hypothesis profile fails".into()));
    }
    c.contains_ideal(q)
}

/// `q·Ã ∩ A`, generated by `a_i` and `a_i g_j / a`.
pub fn q_atilde<F: Field>(ring: &Arc<PresentedRing<F>>, s2: &S2Data<F>, params: &[Poly<F>]) -> Result<Ideal<F>> {
    let r = ring.ambient();
    let mut gens = params.to_vec();
    for p in params {
        for g in &s2.numerators {
            gens.push(ring_division(ring, &r.mul(p, g), &s2.a)?);
        }
    }
    Ok(ring.ideal(gens).interreduced())
}

/// Checks both routes to the conductor and the independence of the data
/// from the pair.
pub fn conductors_agree<F: Field>(route1: &Ideal<F>, route2: &Ideal<F>) -> Result<()> {
    if ideals_equal(route1, route2)? {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(format!("conductor routes disagree: {} vs {}", route1.format(), route2.format())))
    }
}

/// `Ã` as a graded ring `P[w_1..w_s]/J` with `J = sat(I + (a w_j - g_j), a)`.
#[derive(Clone, Debug)]
pub struct S2Presentation<F: Field> {
    pub ring: Arc<PresentedRing<F>>,
    /// Image of `x_i` and of each `w_j` (variables of `ring`).
    pub new_vars: Vec<usize>,
    /// `ℓ(Ã/A)`, read off the Hilbert series.
    pub cokernel_length: i64,
}

pub fn s2_presentation<F: Field>(ring: &Arc<PresentedRing<F>>, s2: &S2Data<F>) -> Result<S2Presentation<F>> {
    let r = ring.ambient();
    let deg_a = r.degree(&s2.a).unwrap();
    let same_degree = s2.numerators.iter().filter(|g| r.degree(g).unwrap() == deg_a).count();
    if same_degree > 0 {
        return Err(Error::NonConnected(1 + same_degree));
    }
    if let Some(g) = s2.numerators.iter().find(|g| r.degree(g).unwrap() < deg_a) {
        return Err(Error::NonPositiveWeight(format!("fraction {}/{} has negative degree", r.format(g), r.format(&s2.a))));
    }
    let n = r.nvars();
    let mut vars: Vec<Variable> = r.vars().to_vec();
    for (j, g) in s2.numerators.iter().enumerate() {
        vars.push(Variable { name: format!("w{}", j + 1), weight: (r.degree(g).unwrap() - deg_a) as u32 });
    }
    let big = PolyRing::new(r.field().clone(), vars)?;
    let a_big = big.embed_prefix(r, &s2.a);
    let mut gens: Vec<Poly<F>> = ring.relations().iter().map(|f| big.embed_prefix(r, f)).collect();
    for (j, g) in s2.numerators.iter().enumerate() {
        gens.push(big.sub(&big.mul(&a_big, &big.var(n + j)), &big.embed_prefix(r, g)));
    }
    let p = PresentedRing::polynomial("P[w]", big.clone());
    let (sat, _) = saturate(&p.ideal(gens), &p.ideal(vec![a_big]))?;
    let tilde = PresentedRing::new(format!("{}~", ring.name()), big.clone(), sat.canonical_gens())?;

    // ℓ(Ã/A) = (H_Ã - H_A)(1), both series over their own denominators
    let (na, da) = (ring.hilbert_numerator(), hilbert_denominator(r.weights()));
    let (nt, dt) = (tilde.hilbert_numerator(), hilbert_denominator(big.weights()));
    let diff = nt.mul(&da).sub(&na.mul(&dt));
    let cokernel_length = diff
        .div_exact(&da.mul(&dt))
        .ok_or_else(|| Error::InternalInconsistency("Ã/A does not have finite length".into()))?
        .eval_at_one();
    if cokernel_length != s2.h1_length {
        return Err(Error::InternalInconsistency(format!("ℓ(Ã/A) = {cokernel_length} but ℓ(H¹) = {}", s2.h1_length)));
    }
    Ok(S2Presentation { ring: tilde, new_vars: (n..big.nvars()).collect(), cokernel_length })
}

/// Everything the decision procedure needs from this module.
#[derive(Clone, Debug)]
pub struct S2Analysis<F: Field> {
    pub profile: HypothesisProfile<F>,
    /// `ann(Ext^{n-1})`.
    pub conductor_dual: Ideal<F>,
    pub data: S2Data<F>,
}

/// Profile, conductor (route 2), pair selection and construction, with the
/// two conductor routes compared.
pub fn analyze<F: Field>(ring: &Arc<PresentedRing<F>>, params: &[Poly<F>], seed: u64) -> Result<S2Analysis<F>> {
    let profile = hypothesis_profile(ring)?;
    analyze_with_profile(ring, params, seed, profile)
}

pub fn analyze_with_profile<F: Field>(ring: &Arc<PresentedRing<F>>, params: &[Poly<F>], seed: u64, profile: HypothesisProfile<F>) -> Result<S2Analysis<F>> {
    let conductor_dual = conductor_crosscheck(ring, &profile)?;
    let (a, b) = filter_regular_pair(ring, params, &conductor_dual, seed)?;
    let data = s2_construct(ring, (&a, &b))?;
    conductors_agree(&data.conductor, &conductor_dual)?;
    Ok(S2Analysis { profile, conductor_dual, data })
}

/// Recomputes the construction with a second valid pair and compares the
/// conductor and `ℓ(H¹)` (independence of the pair).
pub fn pair_independence<F: Field>(ring: &Arc<PresentedRing<F>>, params: &[Poly<F>], seed: u64, analysis: &S2Analysis<F>) -> Result<bool> {
    let (a, b) = select_pair(ring, params, &analysis.conductor_dual, seed, 1)?;
    let other = s2_construct(ring, (&a, &b))?;
    Ok(other.h1_length == analysis.data.h1_length && ideals_equal(&other.conductor, &analysis.data.conductor)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::invariants::depth_and_type;
    use crate::kernel::PrimeField;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn regular_base_profile() {
        let inst = corpus::regular_base(f()).unwrap();
        let an = analyze(&inst.ring, &inst.params, 0).unwrap();
        assert!(an.profile.verdict);
        assert_eq!(an.profile.h1_length(), Some(0));
        assert_eq!(an.data.h1_length, 0);
        assert!(an.data.conductor.is_unit());
        assert!(an.conductor_dual.is_unit());
        assert!(matches!(h1_socle(&an.profile, &an.data), Err(Error::NotApplicable(_))));
        assert!(is_standard_parameters(&an.profile, &inst.q(), &an.data.conductor).unwrap());
        let pres = s2_presentation(&inst.ring, &an.data).unwrap();
        assert_eq!(pres.cokernel_length, 0);
        assert!(pres.new_vars.is_empty());
    }

    #[test]
    fn two_planes_data() {
        let inst = corpus::two_planes(f()).unwrap();
        let r = inst.ring.ambient().clone();
        let an = analyze(&inst.ring, &inst.params, 0).unwrap();
        assert!(an.profile.verdict);
        assert_eq!((an.data.a.clone(), an.data.b.clone()), (inst.params[0].clone(), inst.params[1].clone()));
        let v: Vec<_> = (0..4).map(|i| r.var(i)).collect();
        assert!(ideals_equal(&an.data.colon, &inst.ring.ideal(vec![v[0].clone(), v[2].clone()])).unwrap());
        assert_eq!(an.data.h1_length, 1);
        assert!(ideals_equal(&an.data.conductor, &inst.ring.maximal_ideal()).unwrap());
        assert_eq!(h1_socle(&an.profile, &an.data).unwrap(), 1);
        assert!(matches!(s2_presentation(&inst.ring, &an.data), Err(Error::NonConnected(2))));
        assert!(pair_independence(&inst.ring, &inst.params, 0, &an).unwrap());
        // x kills (u, v), which is not of finite length
        assert!(!is_regular(&inst.ring, &v[0]).unwrap());
        // Ã is CM: pd(aA : b) = n - d
        assert_eq!(an.data.colon_pd, 2);
    }

    #[test]
    fn hochster_roberts_data() {
        let inst = corpus::hochster_roberts(f()).unwrap();
        let an = analyze(&inst.ring, &inst.params, 0).unwrap();
        assert!(an.profile.verdict);
        assert_eq!(an.data.h1_length, 1);
        assert!(ideals_equal(&an.data.conductor, &inst.ring.maximal_ideal()).unwrap());
        assert_eq!(h1_socle(&an.profile, &an.data).unwrap(), 1);
        assert!(is_standard_parameters(&an.profile, &inst.q(), &an.data.conductor).unwrap());
        let pres = s2_presentation(&inst.ring, &an.data).unwrap();
        assert_eq!(pres.cokernel_length, 1);
        let rep = depth_and_type(&pres.ring).unwrap();
        assert_eq!((rep.dim, rep.depth), (2, 2));
        let qt = q_atilde(&inst.ring, &an.data, &inst.params).unwrap();
        assert!(ideals_equal(&qt, &an.data.conductor).unwrap());
    }
}
