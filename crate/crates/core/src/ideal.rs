//! Presented graded rings `A = P/I` and ideal operations inside them.
//!
//! An ideal of `A` is stored by a list of generators in `P`; its preimage in
//! `P` is that list together with the generators of `I`. Every operation on
//! ideals of `A` is therefore an operation on ideals of `P`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{raise, Error, Result};
use crate::kernel::hilbert::{dimension_from_numerator, finite_length, hilbert_numerator, UniPoly};
use crate::kernel::{groebner_basis, lift_combination, Field, GroebnerBasis, MonomialOrder, Poly, PolyRing, Variable};

/// Name of the auxiliary variable used by the intersection trick.
const AUX_VAR: &str = "_t";

/// `A = P / I` for a weighted polynomial ring `P` and homogeneous `I`.
pub struct PresentedRing<F: Field> {
    name: String,
    ambient: PolyRing<F>,
    relations: Vec<Poly<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
    dim: OnceLock<i64>,
}

impl<F: Field> fmt::Debug for PresentedRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.ambient.format(r)).collect();
        f.debug_struct("PresentedRing").field("name", &self.name).field("vars", &self.ambient.vars()).field("relations", &rels).finish()
    }
}

impl<F: Field> PresentedRing<F> {
    /// Builds `P/I`; all relations must be homogeneous.
    pub fn new(name: impl Into<String>, ambient: PolyRing<F>, relations: Vec<Poly<F>>) -> Result<Arc<Self>> {
        let ambient = ambient.with_order(MonomialOrder::DegRevLex);
        let relations: Vec<Poly<F>> = relations.into_iter().filter(|r| !r.is_zero()).map(|r| ambient.resort(&r)).collect();
        if let Some(r) = relations.iter().find(|r| !ambient.is_homogeneous(r)) {
            return Err(Error::InvalidInput(format!("relation {} is not homogeneous", ambient.format(r))));
        }
        Ok(Arc::new(Self { name: name.into(), ambient, relations, gb: OnceLock::new(), dim: OnceLock::new() }))
    }

    /// The polynomial ring itself (`I = 0`).
    pub fn polynomial(name: impl Into<String>, ambient: PolyRing<F>) -> Arc<Self> {
        Self::new(name, ambient, Vec::new()).expect("no relations")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> &PolyRing<F> {
        &self.ambient
    }

    pub fn relations(&self) -> &[Poly<F>] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| groebner_basis(&self.ambient, &self.relations).unwrap_or_else(|e| raise(e)))
    }

    /// Normal form modulo `I`.
    pub fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        self.gb().normal_form(f)
    }

    pub fn is_zero(&self, f: &Poly<F>) -> bool {
        self.gb().contains(f)
    }

    /// Krull dimension of `A`, from the Hilbert numerator of the leading ideal.
    pub fn krull_dim(&self) -> i64 {
        *self.dim.get_or_init(|| {
            let num = hilbert_numerator(&self.gb().leading_monomials(), self.ambient.weights());
            dimension_from_numerator(&num, self.ambient.weights())
        })
    }

    pub fn hilbert_numerator(&self) -> UniPoly {
        hilbert_numerator(&self.gb().leading_monomials(), self.ambient.weights())
    }

    pub fn var(&self, name: &str) -> Option<Poly<F>> {
        self.ambient.var_index(name).map(|i| self.ambient.var(i))
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.relations == other.relations
    }

    pub fn ideal(self: &Arc<Self>, gens: Vec<Poly<F>>) -> Ideal<F> {
        Ideal::new(self.clone(), gens)
    }

    /// The irrelevant ideal `m = (x_1, ..., x_n)`.
    pub fn maximal_ideal(self: &Arc<Self>) -> Ideal<F> {
        let gens = (0..self.nvars()).map(|i| self.ambient.var(i)).collect();
        self.ideal(gens)
    }

    pub fn unit_ideal(self: &Arc<Self>) -> Ideal<F> {
        self.ideal(vec![self.ambient.one()])
    }

    pub fn zero_ideal(self: &Arc<Self>) -> Ideal<F> {
        self.ideal(Vec::new())
    }

    /// `A / J` as a new presented ring over the same ambient ring.
    pub fn quotient(&self, j: &Ideal<F>, name: impl Into<String>) -> Result<Arc<Self>> {
        Self::new(name, self.ambient.clone(), j.preimage_gens())
    }

    /// Regularity test `(I : a) = I`.
    pub fn is_nonzerodivisor(self: &Arc<Self>, a: &Poly<F>) -> Result<bool> {
        let zero = self.zero_ideal();
        let ann = colon_element(&zero, a)?;
        ideals_equal(&ann, &zero)
    }
}

/// A homogeneous ideal of a presented ring, stored by generators in `P`.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    owner: Arc<PresentedRing<F>>,
    gens: Vec<Poly<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.format())
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(owner: Arc<PresentedRing<F>>, gens: Vec<Poly<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| owner.ambient.resort(&g)).collect();
        Self { owner, gens, gb: OnceLock::new() }
    }

    pub fn owner(&self) -> &Arc<PresentedRing<F>> {
        &self.owner
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.owner.ambient
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    /// Generators of the preimage in `P` (own generators followed by `I`).
    pub fn preimage_gens(&self) -> Vec<Poly<F>> {
        let mut v = self.gens.clone();
        v.extend(self.owner.relations.iter().cloned());
        v
    }

    /// Reduced Gröbner basis of the preimage.
    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| groebner_basis(self.ring(), &self.preimage_gens()).unwrap_or_else(|e| raise(e)))
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        check_owner(self, other)?;
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    /// Whether the ideal is zero in `A` (i.e. its preimage is `I`).
    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| self.owner.is_zero(g))
    }

    /// Krull dimension of `A / J`.
    pub fn quotient_dim(&self) -> i64 {
        let w = self.ring().weights();
        dimension_from_numerator(&hilbert_numerator(&self.gb().leading_monomials(), w), w)
    }

    /// `dim_k A/J` when finite.
    pub fn colength(&self) -> Option<i64> {
        let w = self.ring().weights();
        finite_length(&hilbert_numerator(&self.gb().leading_monomials(), w), w)
    }

    fn with_gens(&self, gens: Vec<Poly<F>>) -> Ideal<F> {
        Ideal::new(self.owner.clone(), gens)
    }

    /// Canonical generators: normal forms modulo `I`, made monic, without
    /// zeros, duplicates, or monomial multiples of other generators.
    pub fn interreduced(&self) -> Ideal<F> {
        let r = self.ring();
        let mut gens: Vec<Poly<F>> = Vec::new();
        for g in &self.gens {
            let h = r.monic(&self.owner.reduce(g));
            if !h.is_zero() && !gens.contains(&h) {
                gens.push(h);
            }
        }
        let redundant: Vec<bool> = (0..gens.len())
            .map(|i| (0..gens.len()).any(|j| j != i && is_monomial_multiple(r, &gens[i], &gens[j]) && (gens[i].len() != gens[j].len() || j < i)))
            .collect();
        let gens = gens.into_iter().zip(redundant).filter(|(_, red)| !red).map(|(g, _)| g).collect();
        self.with_gens(gens)
    }

    /// Generators as a reduced Gröbner basis of the preimage, with elements of
    /// `I` dropped. Canonical for the ideal.
    pub fn canonical_gens(&self) -> Vec<Poly<F>> {
        self.gb().elements().iter().filter(|g| !self.owner.is_zero(g)).cloned().collect()
    }

    /// The canonical generators, largest leading term first.
    pub fn format_canonical(&self) -> String {
        let r = self.ring();
        let mut gens = self.canonical_gens();
        if gens.is_empty() {
            return "(0)".to_string();
        }
        gens.sort_by(|a, b| r.cmp(b.lm().unwrap(), a.lm().unwrap()));
        let parts: Vec<String> = gens.iter().map(|g| r.format(g)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring().format(g)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        ideal_combine(self, other, CombineOp::Sum)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        ideal_combine(self, other, CombineOp::Product)
    }

    pub fn power(&self, n: u32) -> Ideal<F> {
        ideal_combine(self, self, CombineOp::Power(n)).expect("same owner")
    }
}

/// Whether `f = m * g` for some monomial `m` (so `f` is redundant given `g`).
fn is_monomial_multiple<F: Field>(r: &PolyRing<F>, f: &Poly<F>, g: &Poly<F>) -> bool {
    if f.len() != g.len() || f.is_zero() {
        return false;
    }
    let (lf, lg) = (f.lm().unwrap(), g.lm().unwrap());
    if !lg.divides(lf) {
        return false;
    }
    let q = lg.quotient_of(lf);
    let c = r.field().div(f.lc().unwrap(), g.lc().unwrap());
    r.mul_term(g, &c, &q) == *f
}

fn check_owner<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<()> {
    if Arc::ptr_eq(&a.owner, &b.owner) || a.owner.same_ring(&b.owner) {
        Ok(())
    } else {
        Err(Error::OwnerMismatch)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
    /// `n`-th power of the first operand; the second is ignored.
    Power(u32),
}

/// Sum, product or power of ideals; products use all pairwise products and
/// powers are iterated products.
pub fn ideal_combine<F: Field>(a: &Ideal<F>, b: &Ideal<F>, op: CombineOp) -> Result<Ideal<F>> {
    check_owner(a, b)?;
    let r = a.ring();
    let out = match op {
        CombineOp::Sum => {
            let mut g = a.gens.clone();
            g.extend(b.gens.iter().cloned());
            a.with_gens(g)
        }
        CombineOp::Product => {
            let mut g = Vec::with_capacity(a.gens.len() * b.gens.len());
            for x in &a.gens {
                for y in &b.gens {
                    g.push(r.mul(x, y));
                }
            }
            a.with_gens(g)
        }
        CombineOp::Power(n) => {
            let mut acc = a.owner.unit_ideal();
            let base = a.interreduced();
            for _ in 0..n {
                acc = ideal_combine(&acc, &base, CombineOp::Product)?;
            }
            acc
        }
    };
    Ok(out.interreduced())
}

/// Ambient ring extended by the auxiliary variable, with `t` eliminated first.
fn with_aux_var<F: Field>(r: &PolyRing<F>) -> Result<PolyRing<F>> {
    let mut vars: Vec<Variable> = r.vars().to_vec();
    vars.push(Variable { name: AUX_VAR.to_string(), weight: 1 });
    let block = 1u32 << r.nvars();
    Ok(PolyRing::new(r.field().clone(), vars)?.with_order(MonomialOrder::Elimination { block }))
}

/// Generators of `J ∩ k[x_j : j ∉ block]` for `J = (gens)`, via a Gröbner
/// basis under an elimination order. Returned polynomials are sorted for the
/// order of `ring`.
pub fn eliminate<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>], block: &[usize]) -> Result<Vec<Poly<F>>> {
    let mask = block.iter().fold(0u32, |m, &i| m | (1 << i));
    let elim_ring = ring.with_order(MonomialOrder::Elimination { block: mask });
    let resorted: Vec<Poly<F>> = gens.iter().map(|g| elim_ring.resort(g)).collect();
    let gb = groebner_basis(&elim_ring, &resorted)?;
    Ok(gb.elements().iter().filter(|g| !elim_ring.involves(g, mask)).map(|g| ring.resort(g)).collect())
}

/// `J_a ∩ J_b` by eliminating `t` from `t J_a + (1 - t) J_b`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    check_owner(a, b)?;
    let r = a.ring();
    let big = with_aux_var(r)?;
    let n = r.nvars();
    let t = big.var(n);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::new();
    for f in a.preimage_gens() {
        gens.push(big.mul(&t, &big.embed_prefix(r, &f)));
    }
    for g in b.preimage_gens() {
        gens.push(big.mul(&one_minus_t, &big.embed_prefix(r, &g)));
    }
    let gb = groebner_basis(&big, &gens)?;
    let block = 1u32 << n;
    let positions: Vec<usize> = (0..n).collect();
    let kept: Vec<Poly<F>> = gb
        .elements()
        .iter()
        .filter(|g| !big.involves(g, block))
        .map(|g| {
            // project back: variables keep their positions
            let terms = g.terms().to_vec();
            r.from_terms(terms.into_iter().map(|(m, c)| (m.remap(&positions, r.weights()), c)).collect())
        })
        .collect();
    Ok(a.with_gens(kept).interreduced())
}

/// Exact division `f / g` in `P`, or `None` if `g` does not divide `f`.
pub fn divide_exact<F: Field>(r: &PolyRing<F>, f: &Poly<F>, g: &Poly<F>) -> Option<Poly<F>> {
    let fld = r.field();
    let lg = *g.lm()?;
    let lc = g.lc()?.clone();
    let mut rem = f.clone();
    let mut q = Vec::new();
    while let Some((m, c)) = rem.terms().first().cloned() {
        if !lg.divides(&m) {
            return None;
        }
        let qm = lg.quotient_of(&m);
        let qc = fld.div(&c, &lc);
        rem = r.add_mul_term(&rem, &fld.neg(&qc), &qm, g);
        q.push((qm, qc));
    }
    Some(r.from_terms(q))
}

/// `J : g = (J ∩ (g)) / g`.
pub fn colon_element<F: Field>(j: &Ideal<F>, g: &Poly<F>) -> Result<Ideal<F>> {
    let r = j.ring();
    if g.is_zero() {
        return Ok(j.owner.unit_ideal());
    }
    // colon in P of the preimage
    let principal = Ideal::new(PresentedRing::polynomial("P", r.clone()), vec![g.clone()]);
    let lifted = Ideal::new(principal.owner.clone(), j.preimage_gens());
    let inter = intersect(&lifted, &principal)?;
    let mut quots = Vec::with_capacity(inter.gens.len());
    for h in inter.gens() {
        let q = divide_exact(r, h, g).ok_or_else(|| Error::InternalInconsistency("intersection with (g) not divisible by g".into()))?;
        quots.push(q);
    }
    Ok(j.with_gens(quots).interreduced())
}

/// `J_a : J_b`, the intersection of the colons by the generators of `J_b`.
pub fn colon<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    check_owner(a, b)?;
    let mut acc: Option<Ideal<F>> = None;
    for g in b.gens() {
        if a.owner.is_zero(g) {
            continue;
        }
        let c = colon_element(a, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| a.owner.unit_ideal()))
}

/// Iterates `J := J : K` until it stabilizes. Returns the saturation and the
/// first index `k` with `J_k = J_{k+1}` (where `J_0` is the input).
pub fn saturate<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(Ideal<F>, usize)> {
    check_owner(a, b)?;
    let mut cur = a.clone();
    let mut k = 0usize;
    loop {
        let next = colon(&cur, b)?;
        if ideals_equal(&next, &cur)? {
            return Ok((cur, k));
        }
        cur = next;
        k += 1;
    }
}

pub fn ideals_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    check_owner(a, b)?;
    Ok(a.gens().iter().all(|g| b.contains(g)) && b.gens().iter().all(|g| a.contains(g)))
}

/// Kernel of `k[y_1..y_m] -> A_target`, `y_i -> targets[i]`. Source weights
/// are the degrees of the targets.
pub fn ring_map_kernel<F: Field>(target: &PresentedRing<F>, targets: &[Poly<F>], source_names: &[&str]) -> Result<(PolyRing<F>, Vec<Poly<F>>)> {
    let tr = target.ambient();
    assert_eq!(targets.len(), source_names.len());
    let mut weights = Vec::with_capacity(targets.len());
    for (t, name) in targets.iter().zip(source_names) {
        if t.is_zero() || !tr.is_homogeneous(t) {
            return Err(Error::NonPositiveWeight(format!("image of {name} is not a nonzero homogeneous element")));
        }
        let d = tr.degree(t).unwrap();
        if d <= 0 {
            return Err(Error::NonPositiveWeight(format!("image of {name} has degree {d}")));
        }
        weights.push(d as u32);
    }
    let source_vars: Vec<Variable> = source_names.iter().zip(&weights).map(|(n, w)| Variable { name: n.to_string(), weight: *w }).collect();
    let source = PolyRing::new(tr.field().clone(), source_vars.clone())?;
    let m = source_vars.len();
    let mut all = source_vars;
    all.extend(tr.vars().iter().map(|v| Variable { name: format!("_{}", v.name), weight: v.weight }));
    let big = PolyRing::new(tr.field().clone(), all)?;
    let shift: Vec<usize> = (0..tr.nvars()).map(|i| m + i).collect();
    let mut gens = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        gens.push(big.sub(&big.var(i), &big.embed(tr, t, &shift)));
    }
    for rel in target.relations() {
        gens.push(big.embed(tr, rel, &shift));
    }
    let block: Vec<usize> = (m..m + tr.nvars()).collect();
    let kept = eliminate(&big, &gens, &block)?;
    let positions: Vec<usize> = (0..m).collect();
    let kernel = kept
        .into_iter()
        .map(|g| source.from_terms(g.terms().iter().map(|(mo, c)| (mo.remap(&positions, source.weights()), c.clone())).collect()))
        .collect();
    Ok((source, kernel))
}

/// `Σ_i ((a_1..â_i..a_d) : a_i)` in `A`.
pub fn sigma_tilde<F: Field>(ring: &Arc<PresentedRing<F>>, params: &[Poly<F>]) -> Result<Ideal<F>> {
    check_parameters(ring, params)?;
    let mut acc = ring.zero_ideal();
    for i in 0..params.len() {
        let others: Vec<Poly<F>> = params.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let c = colon_element(&ring.ideal(others), &params[i])?;
        acc = acc.sum(&c)?;
    }
    Ok(acc)
}

/// `d = dim A` elements generating an ideal with `dim A/q = 0`.
pub fn check_parameters<F: Field>(ring: &Arc<PresentedRing<F>>, params: &[Poly<F>]) -> Result<()> {
    let q = ring.ideal(params.to_vec());
    let dim = q.quotient_dim();
    if dim > 0 || params.len() as i64 != ring.krull_dim() {
        return Err(Error::NotParameters { dim });
    }
    if let Some(p) = params.iter().find(|p| !ring.ambient().is_homogeneous(p) || p.is_zero()) {
        return Err(Error::InvalidInput(format!("parameter {} is not a nonzero homogeneous element", ring.ambient().format(p))));
    }
    Ok(())
}

/// `g` with `a g = f` in `A`, for `a` regular and `f ∈ aA`.
pub fn ring_division<F: Field>(ring: &PresentedRing<F>, f: &Poly<F>, a: &Poly<F>) -> Result<Poly<F>> {
    let r = ring.ambient();
    let mut gens = vec![a.clone()];
    gens.extend(ring.relations().iter().cloned());
    let coeffs = lift_combination(r, f, &gens).map_err(|e| match e {
        Error::NotAMember => Error::NotDivisible,
        other => other,
    })?;
    Ok(ring.reduce(&coeffs[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PrimeField;

    fn poly_ring(names: &[&str]) -> Arc<PresentedRing<PrimeField>> {
        let v: Vec<(&str, u32)> = names.iter().map(|n| (*n, 1)).collect();
        PresentedRing::polynomial("P", PolyRing::with_vars(PrimeField::default(), &v).unwrap())
    }

    fn two_planes() -> Arc<PresentedRing<PrimeField>> {
        let p = PolyRing::with_vars(PrimeField::default(), &[("x", 1), ("y", 1), ("u", 1), ("v", 1)]).unwrap();
        let v: Vec<_> = (0..4).map(|i| p.var(i)).collect();
        let rels = vec![p.mul(&v[0], &v[2]), p.mul(&v[0], &v[3]), p.mul(&v[1], &v[2]), p.mul(&v[1], &v[3])];
        PresentedRing::new("two_planes", p, rels).unwrap()
    }

    #[test]
    fn sums_and_powers() {
        let a = poly_ring(&["x", "y"]);
        let (x, y) = (a.var("x").unwrap(), a.var("y").unwrap());
        let s = a.ideal(vec![x.clone()]).sum(&a.ideal(vec![y.clone()])).unwrap();
        assert!(ideals_equal(&s, &a.maximal_ideal()).unwrap());
        let sq = a.maximal_ideal().power(2);
        assert_eq!(sq.gens().len(), 3);
        let r = a.ambient();
        let expected = a.ideal(vec![r.mul(&x, &x), r.mul(&x, &y), r.mul(&y, &y)]);
        assert!(ideals_equal(&sq, &expected).unwrap());
    }

    #[test]
    fn intersections() {
        let a = poly_ring(&["x", "y"]);
        let r = a.ambient();
        let (x, y) = (a.var("x").unwrap(), a.var("y").unwrap());
        let i = intersect(&a.ideal(vec![x.clone()]), &a.ideal(vec![y.clone()])).unwrap();
        assert!(ideals_equal(&i, &a.ideal(vec![r.mul(&x, &y)])).unwrap());
        let j = a.ideal(vec![r.mul(&x, &x), r.add(&x, &y)]);
        assert!(ideals_equal(&intersect(&j, &j).unwrap(), &j).unwrap());
    }

    #[test]
    fn planes_intersection() {
        let a = poly_ring(&["x", "y", "u", "v"]);
        let r = a.ambient();
        let v: Vec<_> = (0..4).map(|i| r.var(i)).collect();
        let i = intersect(&a.ideal(vec![v[0].clone(), v[1].clone()]), &a.ideal(vec![v[2].clone(), v[3].clone()])).unwrap();
        let expected = a.ideal(vec![r.mul(&v[0], &v[2]), r.mul(&v[0], &v[3]), r.mul(&v[1], &v[2]), r.mul(&v[1], &v[3])]);
        assert!(ideals_equal(&i, &expected).unwrap());
    }

    #[test]
    fn colons() {
        let a = poly_ring(&["x", "y"]);
        let r = a.ambient();
        let x = a.var("x").unwrap();
        let c = colon_element(&a.ideal(vec![r.mul(&x, &x)]), &x).unwrap();
        assert!(ideals_equal(&c, &a.ideal(vec![x.clone()])).unwrap());
        let j = a.ideal(vec![r.mul(&x, &x)]);
        assert!(ideals_equal(&colon(&j, &a.unit_ideal()).unwrap(), &j).unwrap());
    }

    #[test]
    fn colon_in_two_planes() {
        let a = two_planes();
        let r = a.ambient();
        let v: Vec<_> = (0..4).map(|i| r.var(i)).collect();
        let c = colon_element(&a.ideal(vec![r.add(&v[0], &v[2])]), &r.add(&v[1], &v[3])).unwrap();
        assert!(ideals_equal(&c, &a.ideal(vec![v[0].clone(), v[2].clone()])).unwrap());
    }

    #[test]
    fn saturation_index() {
        let a = poly_ring(&["x", "y"]);
        let r = a.ambient();
        let (x, y) = (a.var("x").unwrap(), a.var("y").unwrap());
        let (s, k) = saturate(&a.ideal(vec![r.mul(&r.mul(&x, &x), &y)]), &a.ideal(vec![x.clone()])).unwrap();
        assert!(ideals_equal(&s, &a.ideal(vec![y.clone()])).unwrap());
        assert_eq!(k, 2);
        let (s, k) = saturate(&a.ideal(vec![r.mul(&x, &x)]), &a.ideal(vec![x.clone()])).unwrap();
        assert!(s.is_unit());
        assert_eq!(k, 2);
    }

    #[test]
    fn eliminations() {
        let r = PolyRing::with_vars(PrimeField::default(), &[("t", 1), ("x", 2), ("y", 3)]).unwrap();
        let (t, x, y) = (r.var(0), r.var(1), r.var(2));
        let gens = vec![r.sub(&x, &r.pow(&t, 2)), r.sub(&y, &r.pow(&t, 3))];
        let k = eliminate(&r, &gens, &[0]).unwrap();
        assert_eq!(k.len(), 1);
        let cusp = r.sub(&r.pow(&y, 2), &r.pow(&x, 3));
        assert!(k[0] == cusp || k[0] == r.neg(&cusp));
    }

    #[test]
    fn cusp_kernel() {
        let t = PresentedRing::polynomial("k[x]", PolyRing::with_vars(PrimeField::default(), &[("x", 1)]).unwrap());
        let tr = t.ambient();
        let x = tr.var(0);
        let (src, ker) = ring_map_kernel(&t, &[tr.pow(&x, 2), tr.pow(&x, 3)], &["a", "b"]).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(src.weights(), &[2, 3]);
        let img = src.substitute(&ker[0], tr, &[tr.pow(&x, 2), tr.pow(&x, 3)]);
        assert!(img.is_zero());
    }

    #[test]
    fn identity_map_has_zero_kernel() {
        let p = poly_ring(&["x", "y", "z"]);
        let r = p.ambient();
        let (_, ker) = ring_map_kernel(&p, &[r.var(0), r.var(1), r.var(2)], &["a", "b", "c"]).unwrap();
        assert!(ker.is_empty());
    }

    #[test]
    fn monomial_curve_kernel_contains_the_binomial() {
        let p = poly_ring(&["x", "y"]);
        let r = p.ambient();
        let (x, y) = (r.var(0), r.var(1));
        let (src, ker) = ring_map_kernel(&p, &[r.pow(&x, 2), y.clone(), r.pow(&x, 3), r.mul(&x, &y)], &["a", "b", "c", "d"]).unwrap();
        assert_eq!(ker.len(), 4);
        let s = PresentedRing::polynomial("S", src.clone());
        let j = s.ideal(ker);
        let ad_bc = src.sub(&src.mul(&src.var(0), &src.var(3)), &src.mul(&src.var(1), &src.var(2)));
        assert!(j.contains(&ad_bc));
        assert!(!j.contains(&src.var(0)));
    }

    #[test]
    fn kernel_rejects_degree_zero_images() {
        let t = PresentedRing::polynomial("k[x]", PolyRing::with_vars(PrimeField::default(), &[("x", 1)]).unwrap());
        let one = t.ambient().one();
        assert!(matches!(ring_map_kernel(&t, &[one], &["a"]), Err(Error::NonPositiveWeight(_))));
    }

    #[test]
    fn sigma_tilde_of_regular_sequence() {
        let a = poly_ring(&["x", "y"]);
        let s = sigma_tilde(&a, &[a.var("x").unwrap(), a.var("y").unwrap()]).unwrap();
        assert!(ideals_equal(&s, &a.maximal_ideal()).unwrap());
        assert!(matches!(sigma_tilde(&a, &[a.var("x").unwrap()]), Err(Error::NotParameters { .. })));
    }

    #[test]
    fn division() {
        let a = two_planes();
        let r = a.ambient();
        let (x, u) = (r.var(0), r.var(2));
        let q = ring_division(&a, &r.mul(&x, &x), &r.add(&x, &u)).unwrap();
        assert_eq!(q, x);
        let p = poly_ring(&["x", "y"]);
        assert_eq!(ring_division(&p, &p.var("x").unwrap(), &p.var("y").unwrap()), Err(Error::NotDivisible));
    }
}
