//! Buchberger's algorithm over polynomial rings and free modules.
//!
//! Pairs are pruned with the Gebauer–Möller criteria (and the product
//! criterion for ideals) and selected by smallest sugar degree. The same
//! engine optionally tracks, for every basis element, its expression in
//! terms of the input generators; S-pairs that reduce to zero then yield
//! generators of the syzygy module.

use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

static PAIR_CAP: AtomicUsize = AtomicUsize::new(5_000_000);

/// Sets the process-wide cap on processed S-pairs per Gröbner computation.
pub fn set_pair_cap(cap: usize) {
    PAIR_CAP.store(cap, AtomicOrdering::Relaxed);
}

pub fn pair_cap() -> usize {
    PAIR_CAP.load(AtomicOrdering::Relaxed)
}

/// How input generators are treated when representations are tracked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrackMode {
    /// Every input gets its own basis vector in the representation module;
    /// inputs that reduce to zero contribute a syzygy.
    All,
    /// Inputs must be homogeneous. Only inputs that are not in the span of
    /// lower-degree data are kept; representations are expressed in terms
    /// of the kept inputs, numbered in the order they were accepted.
    Minimal,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i32,
}

struct Elem<F: Field> {
    poly: Poly<F>,
    rep: Option<Poly<F>>,
    sugar: i32,
}

pub(crate) struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    rep_ring: Option<&'a PolyRing<F>>,
    basis: Vec<Elem<F>>,
    lms: Vec<Monomial>,
    pairs: Vec<Pair>,
    product_criterion: bool,
    processed: usize,
    pub(crate) syzygies: Vec<Poly<F>>,
}

impl<'a, F: Field> Engine<'a, F> {
    pub(crate) fn new(ring: &'a PolyRing<F>, rep_ring: Option<&'a PolyRing<F>>) -> Self {
        // product criterion is only valid for ideals, and it would drop
        // Koszul syzygies when tracking
        let product_criterion = ring.shifts().len() <= 1 && rep_ring.is_none();
        Self { ring, rep_ring, basis: Vec::new(), lms: Vec::new(), pairs: Vec::new(), product_criterion, processed: 0, syzygies: Vec::new() }
    }

    fn sugar_of(&self, f: &Poly<F>) -> i32 {
        self.ring.degree(f).unwrap_or(0)
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        self.lms.iter().position(|l| l.divides(m))
    }

    /// Fully reduces `(f, rep)` against the current basis.
    fn reduce(&self, f: Poly<F>, mut rep: Option<Poly<F>>) -> (Poly<F>, Option<Poly<F>>) {
        let fld = self.ring.field();
        let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut cur = f.terms;
        let mut pos = 0;
        while pos < cur.len() {
            let (m, c) = (cur[pos].0, &cur[pos].1);
            match self.find_reducer(&m) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = self.lms[k].quotient_of(&m);
                    let coef = fld.neg(&fld.div(c, g.poly.lc().unwrap()));
                    cur = self.ring.add_mul_term_slice(&cur[pos..], &coef, &q, &g.poly).terms;
                    pos = 0;
                    if let (Some(r), Some(rr)) = (rep.as_mut(), self.rep_ring) {
                        *r = rr.add_mul_term(r, &coef, &q, g.rep.as_ref().unwrap());
                    }
                }
                None => {
                    done.push(cur[pos].clone());
                    pos += 1;
                }
            }
        }
        (Poly { terms: done }, rep)
    }

    fn normalize(&self, f: Poly<F>, rep: Option<Poly<F>>) -> (Poly<F>, Option<Poly<F>>) {
        let fld = self.ring.field();
        match f.lc() {
            Some(c) if !fld.is_one(c) => {
                let inv = fld.inv(c);
                let rep = match (rep, self.rep_ring) {
                    (Some(r), Some(rr)) => Some(rr.scale(&r, &inv)),
                    (r, _) => r,
                };
                (self.ring.scale(&f, &inv), rep)
            }
            _ => (f, rep),
        }
    }

    fn insert(&mut self, poly: Poly<F>, rep: Option<Poly<F>>, sugar: i32) {
        let (poly, rep) = self.normalize(poly, rep);
        let lm = *poly.lm().unwrap();
        self.basis.push(Elem { poly, rep, sugar });
        self.lms.push(lm);
        self.update(self.basis.len() - 1);
    }

    /// Gebauer–Möller update for the newly inserted element `t`.
    fn update(&mut self, t: usize) {
        let w = self.ring.weights();
        let h = self.lms[t];
        let ht = self.ring.term_degree(&h);
        let hs = self.basis[t].sugar;

        // old pairs killed by the chain criterion
        self.pairs.retain(|p| {
            if p.lcm.comp() != h.comp() || !h.divides(&p.lcm) {
                return true;
            }
            let li = self.lms[p.i].lcm(&h, w);
            let lj = self.lms[p.j].lcm(&h, w);
            li == p.lcm || lj == p.lcm
        });

        let mut cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| self.lms[i].comp() == h.comp())
            .map(|i| {
                let l = self.lms[i].lcm(&h, w);
                (i, l, self.lms[i].gcd_is_one(&h))
            })
            .collect();

        // criterion M: drop (i,t) when another lcm properly divides it
        let lcms: Vec<Monomial> = cands.iter().map(|c| c.1).collect();
        cands.retain(|(_, l, _)| !lcms.iter().any(|o| o != l && o.divides(l)));

        // criterion F: one pair per lcm, preferring a coprime one
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for c in cands {
            match kept.iter_mut().find(|k| k.1 == c.1) {
                Some(k) => {
                    if c.2 && !k.2 {
                        *k = c;
                    }
                }
                None => kept.push(c),
            }
        }

        for (i, lcm, coprime) in kept {
            if coprime && self.product_criterion {
                continue;
            }
            let si = self.basis[i].sugar - self.ring.term_degree(&self.lms[i]);
            let sugar = (si.max(hs - ht)) + self.ring.term_degree(&lcm);
            self.pairs.push(Pair { i, j: t, lcm, sugar });
        }
    }

    fn spoly(&self, p: &Pair) -> (Poly<F>, Option<Poly<F>>) {
        let fld = self.ring.field();
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let qi = self.lms[p.i].quotient_of(&p.lcm);
        let qj = self.lms[p.j].quotient_of(&p.lcm);
        let ci = fld.inv(gi.poly.lc().unwrap());
        let cj = fld.neg(&fld.inv(gj.poly.lc().unwrap()));
        let s = self.ring.add_mul_term(&self.ring.mul_term(&gi.poly, &ci, &qi), &cj, &qj, &gj.poly);
        let rep = self.rep_ring.map(|rr| {
            rr.add_mul_term(&rr.mul_term(gi.rep.as_ref().unwrap(), &ci, &qi), &cj, &qj, gj.rep.as_ref().unwrap())
        });
        (s, rep)
    }

    /// Runs Buchberger on `inputs`. Returns, for each input, whether it was
    /// accepted as a minimal generator (only meaningful in minimal mode).
    pub(crate) fn run(&mut self, inputs: Vec<Poly<F>>, mode: TrackMode) -> Result<Vec<bool>> {
        let n_in = inputs.len();
        let mut pending: Vec<(usize, i32)> = inputs.iter().enumerate().map(|(k, f)| (k, self.sugar_of(f))).collect();
        let mut inputs: Vec<Option<Poly<F>>> = inputs.into_iter().map(Some).collect();
        let mut accepted = vec![false; n_in];
        let mut n_accepted = 0usize;
        let cap = pair_cap();

        loop {
            let min_pair = self.pairs.iter().map(|p| p.sugar).min();
            let min_in = pending.iter().map(|p| p.1).min();
            let d = match (min_pair, min_in) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };

            if min_pair == Some(d) {
                let mut batch: Vec<Pair> = Vec::new();
                let mut rest = Vec::with_capacity(self.pairs.len());
                for p in self.pairs.drain(..) {
                    if p.sugar == d {
                        batch.push(p);
                    } else {
                        rest.push(p);
                    }
                }
                self.pairs = rest;
                batch.sort_by(|a, b| self.ring.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
                for p in batch {
                    self.processed += 1;
                    if self.processed > cap {
                        return Err(Error::ResourceExceeded(format!("more than {cap} S-pairs")));
                    }
                    let (s, rep) = self.spoly(&p);
                    let (r, rep) = self.reduce(s, rep);
                    if r.is_zero() {
                        if let Some(rep) = rep {
                            if !rep.is_zero() {
                                self.syzygies.push(rep);
                            }
                        }
                    } else {
                        let sugar = p.sugar.max(self.sugar_of(&r));
                        self.insert(r, rep, sugar);
                    }
                }
                continue;
            }

            // inputs of degree d, in input order
            let (now, later): (Vec<_>, Vec<_>) = pending.into_iter().partition(|p| p.1 == d);
            pending = later;
            for (k, sugar) in now {
                let f = inputs[k].take().unwrap();
                let rep = match (self.rep_ring, mode) {
                    (None, _) => None,
                    (Some(rr), TrackMode::All) => Some(rr.basis_vector(k)),
                    (Some(rr), TrackMode::Minimal) => Some(rr.basis_vector(n_accepted)),
                };
                let (r, rep) = self.reduce(f, rep);
                if r.is_zero() {
                    if mode == TrackMode::All {
                        if let Some(rep) = rep {
                            self.syzygies.push(rep);
                        }
                    }
                } else {
                    accepted[k] = true;
                    n_accepted += 1;
                    self.insert(r, rep, sugar);
                }
            }
        }
        Ok(accepted)
    }

    /// Removes redundant elements and tail-reduces, returning the reduced
    /// basis with representations when tracked.
    pub(crate) fn finish(mut self) -> (Vec<Poly<F>>, Option<Vec<Poly<F>>>, Vec<Poly<F>>) {
        let n = self.basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && keep[j] && self.lms[j].divides(&self.lms[i]) && (self.lms[j] != self.lms[i] || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let elems: Vec<Elem<F>> = std::mem::take(&mut self.basis).into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
        self.lms = elems.iter().map(|e| *e.poly.lm().unwrap()).collect();
        self.basis = elems;
        // tail reduction: reduce each element against the others
        for i in 0..self.basis.len() {
            let e = std::mem::replace(&mut self.basis[i], Elem { poly: Poly::zero(), rep: None, sugar: 0 });
            let lm = self.lms[i];
            // temporarily hide element i from the reducer search
            self.lms[i] = Monomial::one().with_comp(u32::MAX);
            let (head, tail) = (Poly { terms: vec![e.poly.terms[0].clone()] }, Poly { terms: e.poly.terms[1..].to_vec() });
            let (tail_red, rep) = self.reduce(tail, e.rep.clone().map(|_| self.rep_ring.unwrap().zero()));
            let poly = self.ring.add(&head, &tail_red);
            let rep = match (e.rep, rep, self.rep_ring) {
                (Some(r0), Some(dr), Some(rr)) => Some(rr.add(&r0, &dr)),
                _ => None,
            };
            self.lms[i] = lm;
            let (poly, rep) = self.normalize(poly, rep);
            self.basis[i] = Elem { poly, rep, sugar: e.sugar };
        }
        let mut order: Vec<usize> = (0..self.basis.len()).collect();
        order.sort_by(|&a, &b| self.ring.cmp(&self.lms[b], &self.lms[a]));
        let mut polys = Vec::with_capacity(order.len());
        let mut reps = self.rep_ring.map(|_| Vec::with_capacity(order.len()));
        let mut basis: Vec<Option<Elem<F>>> = std::mem::take(&mut self.basis).into_iter().map(Some).collect();
        for k in order {
            let e = basis[k].take().unwrap();
            polys.push(e.poly);
            if let Some(r) = reps.as_mut() {
                r.push(e.rep.unwrap());
            }
        }
        (polys, reps, std::mem::take(&mut self.syzygies))
    }
}

/// A reduced Gröbner basis together with the ring (and order) it was
/// computed in.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    elems: Vec<Poly<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| *g.lm().unwrap()).collect()
    }

    /// Whether the ideal (or submodule) is the whole ring / free module.
    pub fn is_unit(&self) -> bool {
        let rank = self.ring.rank() as u32;
        (0..rank).all(|c| self.elems.iter().any(|g| g.lm().unwrap().is_one() && g.lm().unwrap().comp() == c))
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        let fld = self.ring.field();
        let lms = self.leading_monomials();
        let mut done = Vec::new();
        let mut cur = f.terms.clone();
        let mut pos = 0;
        while pos < cur.len() {
            let m = cur[pos].0;
            match lms.iter().position(|l| l.divides(&m)) {
                Some(k) => {
                    let q = lms[k].quotient_of(&m);
                    let c = fld.neg(&cur[pos].1);
                    cur = self.ring.add_mul_term_slice(&cur[pos..], &c, &q, &self.elems[k]).terms;
                    pos = 0;
                }
                None => {
                    done.push(cur[pos].clone());
                    pos += 1;
                }
            }
        }
        Poly { terms: done }
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial of basis elements reduces
    /// to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let fld = self.ring.field();
        let w = self.ring.weights();
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                let (a, b) = (self.elems[i].lm().unwrap(), self.elems[j].lm().unwrap());
                if a.comp() != b.comp() {
                    continue;
                }
                let l = a.lcm(b, w);
                let s = self.ring.add_mul_term(
                    &self.ring.mul_term(&self.elems[i], &fld.inv(self.elems[i].lc().unwrap()), &a.quotient_of(&l)),
                    &fld.neg(&fld.inv(self.elems[j].lc().unwrap())),
                    &b.quotient_of(&l),
                    &self.elems[j],
                );
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of the ideal (or submodule) generated by `gens`
/// with respect to the order of `ring`.
pub fn groebner_basis<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>]) -> Result<GroebnerBasis<F>> {
    let inputs: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut engine = Engine::new(ring, None);
    engine.run(inputs, TrackMode::All)?;
    let (elems, _, _) = engine.finish();
    Ok(GroebnerBasis { ring: ring.clone(), elems })
}

/// Indices of a minimal generating subset of homogeneous `gens`: an input is
/// dropped when it lies in the span of lower-degree and earlier inputs.
pub fn minimal_generators<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>]) -> Result<Vec<usize>> {
    let mut engine = Engine::new(ring, None);
    let accepted = engine.run(gens.to_vec(), TrackMode::Minimal)?;
    Ok(accepted.iter().enumerate().filter(|(_, a)| **a).map(|(i, _)| i).collect())
}

/// Result of a tracked Gröbner computation.
#[derive(Clone, Debug)]
pub struct TrackedBasis<F: Field> {
    pub basis: GroebnerBasis<F>,
    /// `reps[k]` expresses `basis.elements()[k]` in the representation module.
    pub reps: Vec<Poly<F>>,
    /// Generators of the syzygy module of the (kept) inputs.
    pub syzygies: Vec<Poly<F>>,
    /// Which inputs were kept (always all nonzero ones in `TrackMode::All`).
    pub accepted: Vec<bool>,
}

impl<F: Field> TrackedBasis<F> {
    /// Writes `f = sum c_k g_k` over the inputs, or `None` when `f` is not in
    /// the submodule. `rep_ring` must be the representation module used.
    pub fn lift(&self, rep_ring: &PolyRing<F>, f: &Poly<F>) -> Option<Poly<F>> {
        let ring = self.basis.ring();
        let fld = ring.field();
        let lms = self.basis.leading_monomials();
        let mut cur = f.clone();
        let mut coeffs = rep_ring.zero();
        while let Some((m, c)) = cur.terms.first().cloned() {
            let k = lms.iter().position(|l| l.divides(&m))?;
            let q = lms[k].quotient_of(&m);
            let g = &self.basis.elements()[k];
            let coef = fld.div(&c, g.lc().unwrap());
            cur = ring.add_mul_term(&cur, &fld.neg(&coef), &q, g);
            coeffs = rep_ring.add_mul_term(&coeffs, &coef, &q, &self.reps[k]);
        }
        Some(coeffs)
    }
}

/// Gröbner basis of the submodule generated by `gens` (elements of `ring`),
/// tracking representations in `rep_ring`, a free module whose rank is the
/// number of inputs (`All`) or at least the number of minimal ones.
pub fn tracked_groebner<F: Field>(ring: &PolyRing<F>, rep_ring: &PolyRing<F>, gens: Vec<Poly<F>>, mode: TrackMode) -> Result<TrackedBasis<F>> {
    let mut engine = Engine::new(ring, Some(rep_ring));
    let accepted = engine.run(gens, mode)?;
    let (elems, reps, syzygies) = engine.finish();
    Ok(TrackedBasis { basis: GroebnerBasis { ring: ring.clone(), elems }, reps: reps.unwrap(), syzygies, accepted })
}

/// Writes `f` as a combination `sum c_i gens_i`, verified by re-expansion.
pub fn lift_combination<F: Field>(ring: &PolyRing<F>, f: &Poly<F>, gens: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    if gens.is_empty() {
        return if f.is_zero() { Ok(Vec::new()) } else { Err(Error::NotAMember) };
    }
    let shifts: Vec<i32> = gens.iter().map(|g| ring.degree(g).unwrap_or(0)).collect();
    let rep_ring = ring.free_module(shifts, super::order::ModuleOrder::PositionOverTerm);
    let tb = tracked_groebner(ring, &rep_ring, gens.to_vec(), TrackMode::All)?;
    let coeffs = tb.lift(&rep_ring, f).ok_or(Error::NotAMember)?;
    let out: Vec<Poly<F>> = (0..gens.len() as u32).map(|i| coeffs.component(i)).collect();
    let mut check = ring.neg(f);
    for (c, g) in out.iter().zip(gens) {
        check = ring.add(&check, &ring.mul(c, g));
    }
    if !check.is_zero() {
        return Err(Error::InternalInconsistency("lift does not re-expand to f".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic on polynomials tagged with their rings.
pub fn poly_arith<F: Field>(f: (&PolyRing<F>, &Poly<F>), g: (&PolyRing<F>, &Poly<F>), op: ArithOp) -> Result<Poly<F>> {
    if f.0 != g.0 {
        return Err(Error::MixedRings);
    }
    let r = f.0;
    Ok(match op {
        ArithOp::Add => r.add(f.1, g.1),
        ArithOp::Sub => r.sub(f.1, g.1),
        ArithOp::Mul => r.mul(f.1, g.1),
    })
}
