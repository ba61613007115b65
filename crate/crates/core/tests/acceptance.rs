//! End-to-end acceptance run: one PASS/FAIL line per criterion, with the
//! time each took. Exits nonzero when any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rees_gorenstein::corpus::{self, Instance, EXAMPLE_NAMES};
use rees_gorenstein::decide::{buchsbaum_criterion, decide, Outcome};
use rees_gorenstein::ideal::{colon, colon_element, ideals_equal, intersect, sigma_tilde, PresentedRing};
use rees_gorenstein::invariants::{depth_and_type, depth_from_ext, resolve_ring, DEFAULT_RMAX};
use rees_gorenstein::kernel::hilbert::hilbert_denominator;
use rees_gorenstein::kernel::{groebner_basis, hilbert_numerator, Field, Monomial, PolyRing, PrimeField};
use rees_gorenstein::module::{minimal_free_resolution, ModulePresentation};
use rees_gorenstein::rees::{graded_gorenstein_oracle, n_neq_d_suite, rees_presentation};
use rees_gorenstein::s2::{analyze, pair_independence, q_atilde};
use rees_gorenstein::Result;

type K = PrimeField;

fn k() -> K {
    PrimeField::default()
}

/// Outcome of one criterion: `Ok(detail)` passes, `Err(detail)` fails.
type Check = std::result::Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn hochster_roberts_end_to_end() -> Check {
    let hr = lift(corpus::hochster_roberts(k()))?;
    let rep = lift(decide(&hr.ring, &hr.params, false))?;
    let m = hr.ring.maximal_ideal();
    ensure(rep.outcome() == Outcome::Gorenstein, "verdict is not Gorenstein")?;
    ensure(rep.invariants.dim == 2, format!("dim {}", rep.invariants.dim))?;
    ensure(rep.invariants.depth == 1, format!("depth {}", rep.invariants.depth))?;
    ensure(rep.h1_length == 1, format!("l(H^1) = {}", rep.h1_length))?;
    ensure(rep.h1_socle == Some(1), format!("socle {:?}", rep.h1_socle))?;
    ensure(lift(ideals_equal(&rep.conductor, &m))?, format!("c = {}", rep.conductor.format_canonical()))?;
    ensure(lift(ideals_equal(&rep.sigma, &m))?, format!("sigma = {}", rep.sigma.format_canonical()))?;
    ensure(rep.cond3.e_c == 2 && rep.cond3.len_a_mod_c == 1, format!("e_c = {}, l(A/c) = {}", rep.cond3.e_c, rep.cond3.len_a_mod_c))?;
    ensure(rep.cond3.reduction_number == Some(1), format!("reduction number {:?}", rep.cond3.reduction_number))?;
    Ok("dim 2, depth 1, l(H^1) = 1, socle 1, c = sigma = m, e_c = 2 = 2 l(A/c), reduction number 1".into())
}

fn hochster_roberts_oracle() -> Check {
    let hr = lift(corpus::hochster_roberts(k()))?;
    let rp = lift(rees_presentation(&hr.ring, &hr.params, 2))?;
    let v = lift(graded_gorenstein_oracle(&rp))?;
    let criteria = lift(decide(&hr.ring, &hr.params, false))?.verdict;
    ensure(v.nvars == 7, format!("{} variables", v.nvars))?;
    ensure(v.cm && v.last_betti == 1 && v.gorenstein, format!("CM {}, type {}", v.cm, v.last_betti))?;
    ensure(v.gorenstein == criteria, "oracle disagrees with the criteria")?;
    Ok(format!("7 variables, betti {:?}, CM, type 1", v.betti))
}

fn powers_other_than_dimension() -> Check {
    let hr = lift(corpus::hochster_roberts(k()))?;
    let got = lift(n_neq_d_suite(&hr.ring, &hr.params, &[1, 2, 3], Some(true)))?;
    ensure(got == vec![(1, false), (2, true), (3, false)], format!("{got:?}"))?;
    Ok("n = 1, 2, 3 give false, true, false".into())
}

fn buchsbaum_three_way() -> Check {
    let tp = lift(corpus::two_planes(k()))?;
    let b = lift(buchsbaum_criterion(&tp.ring, &tp.params, true, DEFAULT_RMAX))?;
    ensure(b.e_m == 2 && b.reduction_number == Some(1) && b.verdict, format!("e_m {}, reduction {:?}, verdict {}", b.e_m, b.reduction_number, b.verdict))?;
    let rep = lift(decide(&tp.ring, &tp.params, true))?;
    let o = rep.oracle.as_ref().ok_or("oracle did not run")?;
    ensure(rep.verdict && o.gorenstein, format!("decide {}, oracle {}", rep.verdict, o.gorenstein))?;
    Ok("criterion, decide and oracle all true".into())
}

fn idealizations() -> Check {
    for inst in [lift(corpus::idealization_xy(k()))?, lift(corpus::idealization_x2y3(k()))?] {
        let rep = lift(decide(&inst.ring, &inst.params, false))?;
        ensure(rep.outcome() == Outcome::Gorenstein, format!("{} is {:?}", inst.name(), rep.outcome()))?;
    }
    Ok("(x, y) and (x^2, y^3) both Gorenstein".into())
}

fn negative_control() -> Check {
    let plane = lift(corpus::regular_base(k()))?;
    let rep = lift(decide(&plane.ring, &plane.params, false))?;
    ensure(rep.outcome() == Outcome::HypothesisUnmet && rep.h1_length == 0, format!("{:?}", rep.outcome()))?;
    let v = lift(graded_gorenstein_oracle(&lift(rees_presentation(&plane.ring, &plane.params, 2))?))?;
    ensure(v.cm && v.last_betti == 2 && !v.gorenstein, format!("CM {}, type {}, Gorenstein {}", v.cm, v.last_betti, v.gorenstein))?;
    Ok("hypothesis unmet; R(q^2) is CM of type 2".into())
}

fn equivalence_suite() -> Check {
    let mut evaluated = 0;
    for name in EXAMPLE_NAMES {
        let inst = lift(corpus::by_name(name, k()))?;
        let rep = lift(decide(&inst.ring, &inst.params, true))?;
        if rep.h1_length == 0 {
            continue;
        }
        evaluated += 1;
        ensure(rep.cond2.verdict == rep.cond3.verdict, format!("{name}: conditions disagree"))?;
        let o = rep.oracle.as_ref().ok_or(format!("{name}: oracle did not run"))?;
        ensure(o.gorenstein == rep.cond2.verdict, format!("{name}: oracle disagrees"))?;
    }
    Ok(format!("{evaluated} instances, all three verdicts agree"))
}

fn consequence_suite() -> Check {
    let mut checked = 0;
    for name in EXAMPLE_NAMES {
        let inst = lift(corpus::by_name(name, k()))?;
        let rep = lift(decide(&inst.ring, &inst.params, false))?;
        if !rep.verdict {
            continue;
        }
        checked += 1;
        let an = lift(analyze(&inst.ring, &inst.params, 0))?;
        let c = &an.data.conductor;
        ensure(lift(ideals_equal(c, &an.conductor_dual))?, format!("{name}: the two conductor routes differ"))?;
        ensure(lift(ideals_equal(&lift(sigma_tilde(&inst.ring, &inst.params))?, c))?, format!("{name}: sigma differs from c"))?;
        ensure(lift(ideals_equal(&lift(q_atilde(&inst.ring, &an.data, &inst.params))?, c))?, format!("{name}: qÃ differs from c"))?;
        let cons = rep.consequences.as_ref().ok_or(format!("{name}: no consequences"))?;
        ensure(cons.len_atilde_mod_c_equals_2len, format!("{name}: l(Ã/c) != 2 l(A/c)"))?;
        ensure(cons.artinian_quotient_gorenstein, format!("{name}: Artinian quotient not Gorenstein"))?;
        ensure(lift(pair_independence(&inst.ring, &inst.params, 0, &an))?, format!("{name}: c depends on the pair"))?;
    }
    Ok(format!("{checked} Gorenstein instances"))
}

fn kernel_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let instances: Vec<Instance<K>> = EXAMPLE_NAMES.iter().map(|n| corpus::by_name(n, k())).collect::<Result<_>>().map_err(|e| e.to_string())?;

    // permutation invariance and normal-form soundness on each corpus ideal
    for inst in &instances {
        let r = inst.ring.ambient();
        let gens = inst.ring.relations().to_vec();
        let gb = inst.ring.gb();
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let k = 1.min(shuffled.len());
        shuffled.rotate_left(k);
        ensure(lift(groebner_basis(r, &shuffled))?.elements() == gb.elements(), format!("{}: basis depends on order", inst.name()))?;
        for _ in 0..100 {
            let mut combo = r.zero();
            for g in &gens {
                let e: Vec<u32> = (0..r.nvars()).map(|_| rng.gen_range(0..3)).collect();
                let m = r.term(r.field().from_i64(rng.gen_range(-9..=9)), r.monomial(&e));
                combo = r.add(&combo, &r.mul(&m, g));
            }
            ensure(gb.normal_form(&combo).is_zero(), format!("{}: combination not reduced to zero", inst.name()))?;
        }
    }

    // every monomial ideal with at most two generators of degree <= 4 in
    // three variables, against lcm and gcd arithmetic
    let p = PresentedRing::polynomial("P", lift(PolyRing::with_vars(k(), &[("x", 1), ("y", 1), ("z", 1)]))?);
    let r = p.ambient().clone();
    let monos: Vec<Vec<u32>> = (0..=4u32).flat_map(|i| (0..=4 - i).flat_map(move |j| (0..=4 - i - j).map(move |l| vec![i, j, l]))).filter(|e| e.iter().sum::<u32>() > 0).collect();
    let mono = |e: &[u32]| r.term(r.field().one(), r.monomial(e));
    let mut pairs = 0;
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i..] {
            let lcm: Vec<u32> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
            let cap = lift(intersect(&p.ideal(vec![mono(a)]), &p.ideal(vec![mono(b)])))?;
            ensure(lift(ideals_equal(&cap, &p.ideal(vec![mono(&lcm)])))?, "monomial intersection")?;
            let quot: Vec<u32> = a.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect();
            let col = lift(colon_element(&p.ideal(vec![mono(a)]), &mono(b)))?;
            ensure(lift(ideals_equal(&col, &p.ideal(vec![mono(&quot)])))?, "monomial colon")?;
            let two = p.ideal(vec![mono(a), mono(b)]);
            let by_ideal = lift(colon(&two, &p.maximal_ideal()))?;
            ensure(lift(by_ideal.contains_ideal(&two))?, "colon containment")?;

            // Hilbert series of (a, b) against counting standard monomials
            let lms: Vec<Monomial> = vec![r.monomial(a), r.monomial(b)];
            let series = hilbert_numerator(&lms, r.weights()).series_div(&hilbert_denominator(r.weights()), 13);
            for (deg, coeff) in series.iter().enumerate() {
                let d = deg as u32;
                let count = (0..=d).flat_map(|x| (0..=d - x).map(move |y| [x, y, d - x - y])).filter(|e| ![a, b].iter().any(|g| g.iter().zip(e).all(|(u, v)| u <= v))).count();
                ensure(*coeff == count as i64, format!("Hilbert series of ({a:?}, {b:?}) in degree {deg}"))?;
            }
            pairs += 1;
        }
    }

    // resolutions and Auslander-Buchsbaum on the corpus
    for inst in &instances {
        let ring = &inst.ring;
        for m in [ModulePresentation::ring(ring), lift(ModulePresentation::ideal(&ring.maximal_ideal()))?, lift(ModulePresentation::ideal(&inst.q()))?] {
            let res = lift(minimal_free_resolution(&m, ring.nvars() + 1))?;
            ensure(res.is_complete() && res.composition_is_zero() && res.is_minimal(), format!("{}: resolution", inst.name()))?;
        }
        let res = lift(resolve_ring(ring))?;
        let depth = lift(depth_from_ext(ring, &res))?;
        let inv = lift(depth_and_type(ring))?;
        ensure(depth + inv.pd as i64 == ring.nvars() as i64, format!("{}: Auslander-Buchsbaum", inst.name()))?;
    }
    Ok(format!("5 corpus ideals x 100 combinations, {pairs} monomial pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 9] = [
        ("hochster-roberts end to end", hochster_roberts_end_to_end, 30),
        ("hochster-roberts oracle agreement", hochster_roberts_oracle, 120),
        ("powers other than the dimension", powers_other_than_dimension, 300),
        ("buchsbaum three-way agreement", buchsbaum_three_way, 60),
        ("idealization family", idealizations, 120),
        ("negative control", negative_control, 10),
        ("equivalence suite", equivalence_suite, 600),
        ("consequence suite", consequence_suite, 600),
        ("kernel property suite", kernel_suite, 600),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(budget) => Err(format!("took longer than {budget} s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} ({:.2?}): {detail}", took),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} ({:.2?}): {detail}", took);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
