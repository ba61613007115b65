//! Finitely presented graded modules over a weighted polynomial ring:
//! cokernel presentations, syzygies, minimal free resolutions, Ext into the
//! dualizing module, and finite-length invariants.
//!
//! A free module `F = ⊕ P(-a_i)` is a [`PolyRing`] carrying the generator
//! degrees `a_i` as shifts; vectors are polynomials whose monomials carry a
//! component index. Module orders are position over term.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{raise, Error, Result};
use crate::ideal::{intersect, Ideal, PresentedRing};
use crate::kernel::hilbert::{dimension_from_numerator, finite_length, hilbert_numerator};
use crate::kernel::{groebner_basis, minimal_generators, tracked_groebner, Field, GroebnerBasis, ModuleOrder, Monomial, Poly, PolyRing, TrackMode};

fn free_module<F: Field>(base: &PolyRing<F>, degrees: &[i32]) -> PolyRing<F> {
    base.free_module(degrees.to_vec(), ModuleOrder::PositionOverTerm)
}

/// Degree of a homogeneous vector (degree of its leading term).
pub fn vector_degree<F: Field>(free: &PolyRing<F>, v: &Poly<F>) -> Option<i32> {
    v.lm().map(|m| free.term_degree(m))
}

/// Moves every term of `v` to component `map(comp)`; terms mapped to `None`
/// are dropped.
fn remap_components<F: Field>(target: &PolyRing<F>, v: &Poly<F>, map: impl Fn(u32) -> Option<u32>) -> Poly<F> {
    let terms = v.terms().iter().filter_map(|(m, c)| map(m.comp()).map(|k| (m.plain().with_comp(k), c.clone()))).collect();
    target.from_terms(terms)
}

/// Applies the map sending basis vector `k` to `columns[k]`.
pub fn apply_map<F: Field>(target: &PolyRing<F>, columns: &[Poly<F>], v: &Poly<F>) -> Poly<F> {
    let mut acc = target.zero();
    for (m, c) in v.terms() {
        acc = target.add_mul_term(&acc, c, &m.plain(), &columns[m.comp() as usize]);
    }
    acc
}

/// Generators of `{c ∈ ⊕ P(-source_degrees_j) : Σ c_j images_j ∈ span(sub)}`,
/// where `images` and `sub` are homogeneous vectors of `target`. The result
/// is a minimal generating set.
pub fn pullback<F: Field>(target: &PolyRing<F>, images: &[Poly<F>], source_degrees: &[i32], sub: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    let g = images.len();
    let source = free_module(target, source_degrees);
    if g == 0 {
        return Ok(Vec::new());
    }
    let sub: Vec<Poly<F>> = sub.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut shifts = source_degrees.to_vec();
    shifts.extend(sub.iter().map(|v| vector_degree(target, v).unwrap()));
    let rep = free_module(target, &shifts);
    let mut inputs = images.to_vec();
    inputs.extend(sub);
    let tb = tracked_groebner(target, &rep, inputs, TrackMode::All)?;
    let gl = g as u32;
    let projected: Vec<Poly<F>> =
        tb.syzygies.iter().map(|s| remap_components(&source, s, |c| (c < gl).then_some(c))).filter(|v| !v.is_zero()).collect();
    let keep = minimal_generators(&source, &projected)?;
    Ok(keep.into_iter().map(|i| projected[i].clone()).collect())
}

/// First syzygies of homogeneous vectors `gens` of `free`: generators of the
/// kernel of `⊕ P(-deg g_j) → free`. Each returned vector expands to zero.
pub fn syzygy<F: Field>(free: &PolyRing<F>, gens: &[Poly<F>]) -> Result<(PolyRing<F>, Vec<Poly<F>>)> {
    let degrees: Vec<i32> = gens.iter().map(|g| vector_degree(free, g).unwrap_or(0)).collect();
    let syz = pullback(free, gens, &degrees, &[])?;
    Ok((free_module(free, &degrees), syz))
}

/// `coker(⊕ P(-b_k) → ⊕ P(-a_i))`, given by generator degrees `a_i` and
/// relation vectors.
pub struct ModulePresentation<F: Field> {
    free: PolyRing<F>,
    degrees: Vec<i32>,
    relations: Vec<Poly<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for ModulePresentation<F> {
    fn clone(&self) -> Self {
        Self { free: self.free.clone(), degrees: self.degrees.clone(), relations: self.relations.clone(), gb: self.gb.clone() }
    }
}

impl<F: Field> fmt::Debug for ModulePresentation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.free.format_vector(r)).collect();
        f.debug_struct("ModulePresentation").field("degrees", &self.degrees).field("relations", &rels).finish()
    }
}

impl<F: Field> ModulePresentation<F> {
    pub fn new(base: &PolyRing<F>, degrees: Vec<i32>, relations: Vec<Poly<F>>) -> Self {
        let free = free_module(base, &degrees);
        let relations = relations.into_iter().filter(|r| !r.is_zero()).map(|r| free.resort(&r)).collect();
        Self { free, degrees, relations, gb: OnceLock::new() }
    }

    /// The free module `⊕ P(-a_i)`.
    pub fn free(base: &PolyRing<F>, degrees: Vec<i32>) -> Self {
        Self::new(base, degrees, Vec::new())
    }

    /// `A = P/I` as a cyclic `P`-module.
    pub fn ring(a: &PresentedRing<F>) -> Self {
        Self::new(a.ambient(), vec![0], a.relations().to_vec())
    }

    /// `K / (K ∩ span(B))` for vectors `K`, `B` of one free module, presented
    /// as the cokernel of the pullback of `B` along `K`.
    pub fn subquotient(free: &PolyRing<F>, k: &[Poly<F>], b: &[Poly<F>]) -> Result<Self> {
        let k: Vec<Poly<F>> = k.iter().filter(|v| !v.is_zero()).cloned().collect();
        let degrees: Vec<i32> = k.iter().map(|v| vector_degree(free, v).unwrap()).collect();
        let rels = pullback(free, &k, &degrees, b)?;
        Ok(Self::new(free, degrees, rels))
    }

    /// The ideal `J/I` of `A = P/I` as a module.
    pub fn ideal(j: &Ideal<F>) -> Result<Self> {
        Self::ideal_quotient(j, &j.owner().zero_ideal())
    }

    /// `J₁ / J₂` for ideals `J₂ ⊆ J₁` of `A` (computed as `J₁/(J₁ ∩ J₂)`).
    pub fn ideal_quotient(j1: &Ideal<F>, j2: &Ideal<F>) -> Result<Self> {
        let free = free_module(j1.ring(), &[0]);
        let k: Vec<Poly<F>> = j1.preimage_gens();
        Self::subquotient(&free, &k, &j2.preimage_gens())
    }

    pub fn base(&self) -> PolyRing<F> {
        self.free.free_module(Vec::new(), ModuleOrder::PositionOverTerm)
    }

    pub fn free_ring(&self) -> &PolyRing<F> {
        &self.free
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[Poly<F>] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| groebner_basis(&self.free, &self.relations).unwrap_or_else(|e| raise(e)))
    }

    /// Leading monomials of the relation module, split by component.
    fn lead_ideals(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank()];
        if self.rank() == 0 {
            return out;
        }
        for m in self.gb().leading_monomials() {
            out[m.comp() as usize].push(m.plain());
        }
        out
    }

    /// Krull dimension of the module (-1 for the zero module).
    pub fn dim(&self) -> i64 {
        let w = self.free.weights();
        self.lead_ideals().iter().map(|l| dimension_from_numerator(&hilbert_numerator(l, w), w)).max().unwrap_or(-1)
    }

    /// `dim_k M`, or `None` when the module has positive dimension.
    pub fn length(&self) -> Option<i64> {
        let w = self.free.weights();
        let mut total = 0;
        for l in self.lead_ideals() {
            total += finite_length(&hilbert_numerator(&l, w), w)?;
        }
        Some(total)
    }

    pub fn is_zero(&self) -> bool {
        self.length() == Some(0)
    }

    /// Removes generators killed by relations with a unit entry and keeps a
    /// minimal set of relations. The result has `μ(M)` generators.
    pub fn pruned(&self) -> Result<Self> {
        let base = self.base();
        let fld = base.field().clone();
        let mut degrees = self.degrees.clone();
        let mut free = self.free.clone();
        let mut rels = self.relations.clone();
        loop {
            let pivot = rels.iter().enumerate().find_map(|(ri, r)| r.terms().iter().find(|(m, _)| m.is_one()).map(|(m, c)| (ri, m.comp(), c.clone())));
            let Some((ri, j, c)) = pivot else { break };
            let p = rels.remove(ri);
            let minus_inv = fld.neg(&fld.inv(&c));
            for s in rels.iter_mut() {
                let sj = s.component(j);
                for (m, coef) in sj.terms() {
                    *s = free.add_mul_term(s, &fld.mul(coef, &minus_inv), m, &p);
                }
            }
            degrees.remove(j as usize);
            free = free_module(&base, &degrees);
            rels = rels
                .iter()
                .map(|r| {
                    remap_components(&free, r, |k| {
                        debug_assert_ne!(k, j);
                        Some(if k > j { k - 1 } else { k })
                    })
                })
                .filter(|r| !r.is_zero())
                .collect();
        }
        let keep = minimal_generators(&free, &rels)?;
        let rels = keep.into_iter().map(|i| rels[i].clone()).collect();
        Ok(Self::new(&base, degrees, rels))
    }

    /// Minimal number of generators, `dim_k M ⊗ k`.
    pub fn min_generators(&self) -> Result<usize> {
        Ok(self.pruned()?.rank())
    }

    /// Generators of `ann_P(M) = ∩_j (N : e_j)`.
    pub fn annihilator(&self) -> Result<Ideal<F>> {
        let base = self.base();
        let p = PresentedRing::polynomial("P", base.clone());
        let mut acc: Option<Ideal<F>> = None;
        for j in 0..self.rank() {
            let ej = self.free.basis_vector(j);
            let col = pullback(&self.free, &[ej], &[self.degrees[j]], &self.relations)?;
            let ideal = p.ideal(col.iter().map(|v| v.component(0)).collect());
            acc = Some(match acc {
                None => ideal,
                Some(prev) => intersect(&prev, &ideal)?,
            });
        }
        Ok(acc.unwrap_or_else(|| p.unit_ideal()))
    }

    /// Generators of `(N :_F m)`, the preimage in `F` of the socle of `M`.
    fn socle_preimage(&self) -> Result<Vec<Poly<F>>> {
        let base = self.base();
        let n = base.nvars();
        let g = self.rank();
        let w = base.weights();
        let mut shifts = Vec::with_capacity(g * n);
        for &wi in w {
            for &d in &self.degrees {
                shifts.push(d - wi as i32);
            }
        }
        let big = free_module(&base, &shifts);
        let images: Vec<Poly<F>> = (0..g)
            .map(|j| {
                let terms = (0..n).map(|i| (Monomial::var(i, w[i]).with_comp((i * g + j) as u32), base.field().one())).collect();
                big.from_terms(terms)
            })
            .collect();
        let mut sub = Vec::with_capacity(self.relations.len() * n);
        for i in 0..n {
            for r in &self.relations {
                sub.push(remap_components(&big, r, |k| Some((i * g) as u32 + k)));
            }
        }
        let pre = pullback(&big, &images, &self.degrees, &sub)?;
        Ok(pre.iter().map(|v| self.free.resort(v)).collect())
    }

    /// `dim_k (0 :_M m)` for a finite-length module.
    pub fn socle_dim(&self) -> Result<i64> {
        if self.length().is_none() {
            return Err(Error::NotFiniteLength);
        }
        if self.rank() == 0 {
            return Ok(0);
        }
        let soc = Self::subquotient(&self.free, &self.socle_preimage()?, &self.relations)?;
        soc.length().ok_or_else(|| Error::InternalInconsistency("socle of a finite-length module is infinite".into()))
    }
}

/// A graded free resolution `0 ← F_0 ← F_1 ← … ← F_p`.
#[derive(Clone)]
pub struct GradedResolution<F: Field> {
    base: PolyRing<F>,
    shifts: Vec<Vec<i32>>,
    maps: Vec<Vec<Poly<F>>>,
    complete: bool,
}

impl<F: Field> fmt::Debug for GradedResolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedResolution").field("ranks", &self.ranks()).field("complete", &self.complete).finish()
    }
}

impl<F: Field> GradedResolution<F> {
    pub fn base(&self) -> &PolyRing<F> {
        &self.base
    }

    /// Generator degrees of `F_i`.
    pub fn shifts(&self, i: usize) -> &[i32] {
        self.shifts.get(i).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn module(&self, i: usize) -> PolyRing<F> {
        free_module(&self.base, self.shifts(i))
    }

    /// Columns of `d_i : F_i → F_{i-1}` for `i ≥ 1`.
    pub fn differential(&self, i: usize) -> &[Poly<F>] {
        if i == 0 {
            return &[];
        }
        self.maps.get(i - 1).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    /// Whether the resolution reached a zero syzygy module.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Projective dimension, when the resolution is complete.
    pub fn pd(&self) -> Option<usize> {
        self.complete.then(|| self.shifts.iter().rposition(|s| !s.is_empty()).unwrap_or(0))
    }

    /// Graded Betti numbers `β_{i,j}` keyed by `(i, j)`.
    pub fn betti(&self) -> BTreeMap<(usize, i32), usize> {
        let mut out = BTreeMap::new();
        for (i, s) in self.shifts.iter().enumerate() {
            for &d in s {
                *out.entry((i, d)).or_insert(0) += 1;
            }
        }
        out
    }

    /// `Σ (-1)^i rank F_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks().iter().enumerate().map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }

    /// `d_{i-1} ∘ d_i = 0` for all `i`.
    pub fn composition_is_zero(&self) -> bool {
        (2..=self.maps.len()).all(|i| {
            let target = self.module(i - 2);
            self.differential(i).iter().all(|col| apply_map(&target, self.differential(i - 1), col).is_zero())
        })
    }

    /// No differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().flatten().all(|col| col.terms().iter().all(|(m, _)| !m.is_one()))
    }

    /// Printable Betti table, one row per `j - i`.
    pub fn betti_table(&self) -> String {
        let b = self.betti();
        if b.is_empty() {
            return "0".to_string();
        }
        let rows: Vec<i32> = b.keys().map(|&(i, j)| j - i as i32).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let mut out = String::new();
        for r in lo..=hi {
            let cells: Vec<String> = (0..self.shifts.len()).map(|i| b.get(&(i, r + i as i32)).map_or("-".to_string(), |c| c.to_string())).collect();
            out.push_str(&format!("{r}: {}\n", cells.join(" ")));
        }
        out
    }
}

/// Minimal graded free resolution of `M`, stopping after `cap` steps.
pub fn minimal_free_resolution<F: Field>(m: &ModulePresentation<F>, cap: usize) -> Result<GradedResolution<F>> {
    let m = m.pruned()?;
    let base = m.base();
    let mut shifts = vec![m.degrees.clone()];
    let mut maps = Vec::new();
    let mut prev = m.free.clone();
    let mut candidates = m.relations.clone();
    let mut complete = true;
    while !candidates.is_empty() {
        if maps.len() >= cap {
            complete = false;
            break;
        }
        candidates.sort_by_key(|v| vector_degree(&prev, v).unwrap());
        let degs: Vec<i32> = candidates.iter().map(|v| vector_degree(&prev, v).unwrap()).collect();
        let rep = free_module(&base, &degs);
        let tb = tracked_groebner(&prev, &rep, candidates.clone(), TrackMode::Minimal)?;
        let mut cols = Vec::new();
        let mut acc_degs = Vec::new();
        for (k, v) in candidates.into_iter().enumerate() {
            if tb.accepted[k] {
                cols.push(v);
                acc_degs.push(degs[k]);
            }
        }
        let fi = free_module(&base, &acc_degs);
        candidates = tb.syzygies.iter().filter(|s| !s.is_zero()).map(|s| fi.resort(s)).collect();
        maps.push(cols);
        shifts.push(acc_degs);
        prev = fi;
    }
    Ok(GradedResolution { base, shifts, maps, complete })
}

/// Sum of the variable weights: `ω_P = P(-s)`.
pub fn dualizing_shift<F: Field>(base: &PolyRing<F>) -> i32 {
    base.weights().iter().map(|&w| w as i32).sum()
}

/// Rows of `d_i`, as vectors of the dual of `F_i`.
fn transposed_rows<F: Field>(res: &GradedResolution<F>, i: usize, dual: &PolyRing<F>) -> Vec<Poly<F>> {
    let rows = res.shifts(i - 1).len();
    let mut terms: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rows];
    for (j, col) in res.differential(i).iter().enumerate() {
        for (m, c) in col.terms() {
            terms[m.comp() as usize].push((m.plain().with_comp(j as u32), c.clone()));
        }
    }
    terms.into_iter().map(|t| dual.from_terms(t)).collect()
}

/// `Ext^i_P(M, ω_P)` from a complete resolution of `M`, as the homology of the
/// dual complex `Hom(F_•, P(-s))`.
pub fn ext_from_resolution<F: Field>(res: &GradedResolution<F>, i: usize) -> Result<ModulePresentation<F>> {
    let base = res.base().clone();
    let pd = res.pd().ok_or_else(|| Error::ResourceExceeded("resolution is incomplete".into()))?;
    if i > pd {
        return Ok(ModulePresentation::free(&base, Vec::new()));
    }
    let s = dualizing_shift(&base);
    let dual_shifts = |k: usize| -> Vec<i32> { res.shifts(k).iter().map(|b| s - b).collect() };
    let dual_i = free_module(&base, &dual_shifts(i));
    let kernel = if i < pd {
        let dual_next = free_module(&base, &dual_shifts(i + 1));
        let rows = transposed_rows(res, i + 1, &dual_next);
        pullback(&dual_next, &rows, &dual_shifts(i), &[])?.iter().map(|v| dual_i.resort(v)).collect()
    } else {
        (0..res.shifts(i).len()).map(|k| dual_i.basis_vector(k)).collect::<Vec<_>>()
    };
    let image = if i >= 1 { transposed_rows(res, i, &dual_i) } else { Vec::new() };
    ModulePresentation::subquotient(&dual_i, &kernel, &image)?.pruned()
}

/// `Ext^i_P(M, ω_P)`.
pub fn ext_dualizing<F: Field>(m: &ModulePresentation<F>, i: usize) -> Result<ModulePresentation<F>> {
    let res = minimal_free_resolution(m, m.base().nvars() + 1)?;
    ext_from_resolution(&res, i)
}
