use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rees_gorenstein::corpus::{self, EXAMPLE_NAMES};
use rees_gorenstein::ideal::{colon, colon_element, eliminate, ideals_equal, intersect, saturate, Ideal, PresentedRing};
use rees_gorenstein::invariants::{depth_and_type, depth_from_ext, resolve_ring};
use rees_gorenstein::kernel::hilbert::hilbert_denominator;
use rees_gorenstein::kernel::{groebner_basis, hilbert_numerator, Field, Monomial, Poly, PolyRing, PrimeField};
use rees_gorenstein::module::{minimal_free_resolution, ModulePresentation};

type Exps = Vec<u32>;

fn ring3() -> PolyRing<PrimeField> {
    PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1), ("z", 1)]).unwrap()
}

fn mono(r: &PolyRing<PrimeField>, e: &[u32]) -> Poly<PrimeField> {
    r.term(r.field().one(), r.monomial(e))
}

/// Homogeneous polynomial of degree `deg` in three variables from a list of
/// (coefficient, exponent of x, exponent of y) triples.
fn homogeneous(r: &PolyRing<PrimeField>, deg: u32, terms: &[(i64, u32, u32)]) -> Poly<PrimeField> {
    let f = r.field();
    let terms = terms
        .iter()
        .map(|&(c, i, j)| {
            let i = i % (deg + 1);
            let j = j % (deg + 1 - i);
            (r.monomial(&[i, j, deg - i - j]), f.from_i64(c))
        })
        .collect();
    r.from_terms(terms)
}

fn poly_terms() -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec((-5i64..=5, 0u32..4, 0u32..4), 1..4)
}

fn monomial_gens() -> impl Strategy<Value = Vec<Exps>> {
    prop::collection::vec(prop::collection::vec(0u32..=4, 3), 1..4).prop_map(|v| v.into_iter().filter(|e| e.iter().sum::<u32>() <= 4).collect())
}

fn monomial_ideal(p: &Arc<PresentedRing<PrimeField>>, gens: &[Exps]) -> Ideal<PrimeField> {
    p.ideal(gens.iter().map(|e| mono(p.ambient(), e)).collect())
}

/// Whether `x^e` lies in the monomial ideal generated by `gens`.
fn in_monomial_ideal(gens: &[Exps], e: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b))
}

fn corpus_rings() -> Vec<corpus::Instance<PrimeField>> {
    EXAMPLE_NAMES.iter().map(|n| corpus::by_name(n, PrimeField::default()).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_basis_ignores_generator_order(polys in prop::collection::vec((1u32..4, poly_terms()), 1..4), rot in 0usize..4) {
        let r = ring3();
        let mut gens: Vec<_> = polys.iter().map(|(d, t)| homogeneous(&r, *d, t)).filter(|p| !p.is_zero()).collect();
        let gb = groebner_basis(&r, &gens).unwrap();
        if !gens.is_empty() {
            let k = rot % gens.len();
            gens.rotate_left(k);
        }
        gens.reverse();
        let again = groebner_basis(&r, &gens).unwrap();
        prop_assert_eq!(gb.elements(), again.elements());
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn monomial_intersection_is_generated_by_lcms(a in monomial_gens(), b in monomial_gens()) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let p = PresentedRing::polynomial("P", ring3());
        let cap = intersect(&monomial_ideal(&p, &a), &monomial_ideal(&p, &b)).unwrap();
        let lcms: Vec<Exps> = a.iter().flat_map(|m| b.iter().map(move |n| m.iter().zip(n).map(|(x, y)| *x.max(y)).collect())).collect();
        prop_assert!(ideals_equal(&cap, &monomial_ideal(&p, &lcms)).unwrap());
    }

    #[test]
    fn monomial_colon_divides_out_gcds(a in monomial_gens(), n in prop::collection::vec(0u32..=3, 3)) {
        prop_assume!(!a.is_empty());
        let p = PresentedRing::polynomial("P", ring3());
        let c = colon_element(&monomial_ideal(&p, &a), &mono(p.ambient(), &n)).unwrap();
        let quotients: Vec<Exps> = a.iter().map(|m| m.iter().zip(&n).map(|(x, y)| x.saturating_sub(*y)).collect()).collect();
        prop_assert!(ideals_equal(&c, &monomial_ideal(&p, &quotients)).unwrap());
    }

    #[test]
    fn hilbert_series_counts_standard_monomials(a in monomial_gens()) {
        prop_assume!(!a.is_empty());
        let r = ring3();
        let lms: Vec<Monomial> = a.iter().map(|e| r.monomial(e)).collect();
        let series = hilbert_numerator(&lms, r.weights()).series_div(&hilbert_denominator(r.weights()), 13);
        for (deg, coeff) in series.iter().enumerate() {
            let deg = deg as u32;
            let mut count = 0;
            for i in 0..=deg {
                for j in 0..=deg - i {
                    if !in_monomial_ideal(&a, &[i, j, deg - i - j]) {
                        count += 1;
                    }
                }
            }
            prop_assert_eq!(*coeff, count, "degree {}", deg);
        }
    }

    #[test]
    fn colon_and_saturation_laws(a in prop::collection::vec((1u32..3, poly_terms()), 1..3), b in prop::collection::vec((1u32..3, poly_terms()), 1..3)) {
        let p = PresentedRing::polynomial("P", ring3());
        let r = p.ambient();
        let i = p.ideal(a.iter().map(|(d, t)| homogeneous(r, *d, t)).collect());
        let j = p.ideal(b.iter().map(|(d, t)| homogeneous(r, *d, t)).collect());
        let c = colon(&i, &j).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&c.product(&j).unwrap()).unwrap());
        let (sat, _) = saturate(&i, &j).unwrap();
        prop_assert!(sat.contains_ideal(&c).unwrap());
        prop_assert!(ideals_equal(&colon(&sat, &j).unwrap(), &sat).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_forms_are_sound_on_the_corpus(which in 0usize..5, coeffs in prop::collection::vec((-7i64..=7, prop::collection::vec(0u32..3, 4)), 1..6), shift in prop::collection::vec(0u32..3, 4)) {
        let inst = corpus::by_name(EXAMPLE_NAMES[which], PrimeField::default()).unwrap();
        let r = inst.ring.ambient();
        let f = r.field();
        let gens = inst.ring.relations();
        let gb = inst.ring.gb();
        let n = r.nvars();
        let mut combo = r.zero();
        for (k, (c, e)) in coeffs.iter().enumerate() {
            if gens.is_empty() {
                break;
            }
            let m = r.term(f.from_i64(*c), r.monomial(&e[..n.min(e.len())]));
            combo = r.add(&combo, &r.mul(&m, &gens[k % gens.len()]));
        }
        prop_assert!(gb.normal_form(&combo).is_zero());
        let g = mono(r, &shift[..n.min(shift.len())]);
        prop_assert_eq!(gb.normal_form(&r.add(&g, &combo)), gb.normal_form(&g));
    }
}

#[test]
fn resolutions_of_corpus_modules_are_minimal_complexes() {
    for inst in corpus_rings() {
        let ring = &inst.ring;
        let modules = [ModulePresentation::ring(ring), ModulePresentation::ideal(&ring.maximal_ideal()).unwrap(), ModulePresentation::ideal(&inst.q()).unwrap()];
        for m in modules {
            let res = minimal_free_resolution(&m, ring.nvars() + 1).unwrap();
            assert!(res.is_complete(), "{}", inst.name());
            assert!(res.composition_is_zero(), "{}", inst.name());
            assert!(res.is_minimal(), "{}", inst.name());
        }
    }
}

#[test]
fn auslander_buchsbaum_matches_ext_depth() {
    for inst in corpus_rings() {
        let res = resolve_ring(&inst.ring).unwrap();
        let by_ext = depth_from_ext(&inst.ring, &res).unwrap();
        let inv = depth_and_type(&inst.ring).unwrap();
        assert_eq!(by_ext + inv.pd as i64, inst.ring.nvars() as i64, "{}", inst.name());
        assert_eq!(by_ext, inv.depth, "{}", inst.name());
    }
}

#[test]
fn eliminants_lie_in_the_ideal_and_avoid_the_block() {
    let r = PolyRing::with_vars(PrimeField::default(), &[("s", 1), ("t", 1), ("x", 2), ("y", 2), ("z", 2)]).unwrap();
    let (s, t) = (r.var(0), r.var(1));
    let images = [r.mul(&s, &s), r.mul(&s, &t), r.mul(&t, &t)];
    let gens: Vec<_> = images.iter().enumerate().map(|(i, m)| r.sub(&r.var(i + 2), m)).collect();
    let kept = eliminate(&r, &gens, &[0, 1]).unwrap();
    assert!(!kept.is_empty());
    let gb = groebner_basis(&r, &gens).unwrap();
    for g in &kept {
        assert!(gb.contains(g));
        let used: BTreeSet<usize> = g.terms().iter().flat_map(|(m, _)| (0..5).filter(move |&i| m.exp(i) > 0)).collect();
        assert!(!used.contains(&0) && !used.contains(&1), "{}", r.format(g));
    }
}
