//! Sparse polynomials (and free-module vectors) as sorted term lists.

use std::cmp::Ordering;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::order::{ModuleOrder, MonomialOrder};
use crate::error::{Error, Result};

/// Terms sorted strictly decreasing in the order of the owning ring; no zero
/// coefficients. The empty list is the zero polynomial.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    pub(crate) terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest component index appearing, if any.
    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.comp()).max()
    }

    /// The component-`c` entry of a module vector as a plain polynomial.
    /// Term order is preserved because all retained terms share a component.
    pub fn component(&self, c: u32) -> Poly<F> {
        Poly { terms: self.terms.iter().filter(|t| t.0.comp() == c).map(|(m, x)| (m.plain(), x.clone())).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

/// A weighted polynomial ring `k[x_1..x_n]` with a fixed term order, or a
/// free module over it when `shifts` is non-empty (component `i` generated
/// in degree `shifts[i]`).
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Arc<[Variable]>,
    weights: Arc<[u32]>,
    order: MonomialOrder,
    module_order: ModuleOrder,
    shifts: Arc<[i32]>,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<Variable>) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: vars.len() });
        }
        if let Some(v) = vars.iter().find(|v| v.weight == 0) {
            return Err(Error::NonPositiveWeight(format!("variable {}", v.name)));
        }
        let weights: Arc<[u32]> = vars.iter().map(|v| v.weight).collect();
        Ok(Self {
            field,
            vars: vars.into(),
            weights,
            order: MonomialOrder::DegRevLex,
            module_order: ModuleOrder::PositionOverTerm,
            shifts: Arc::from(Vec::new()),
        })
    }

    /// Convenience constructor from `(name, weight)` pairs.
    pub fn with_vars(field: F, vars: &[(&str, u32)]) -> Result<Self> {
        Self::new(field, vars.iter().map(|(n, w)| Variable { name: n.to_string(), weight: *w }).collect())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn module_order(&self) -> ModuleOrder {
        self.module_order
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self { order, ..self.clone() }
    }

    /// The same ring viewed as a free module of rank `shifts.len()`.
    pub fn free_module(&self, shifts: Vec<i32>, module_order: ModuleOrder) -> Self {
        Self { shifts: shifts.into(), module_order, ..self.clone() }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len().max(1)
    }

    #[inline]
    pub fn shift(&self, comp: u32) -> i32 {
        self.shifts.get(comp as usize).copied().unwrap_or(0)
    }

    /// Degree of a term including the component shift.
    #[inline]
    pub fn term_degree(&self, m: &Monomial) -> i32 {
        m.deg() + self.shift(m.comp())
    }

    /// The term order of this ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.vars.len();
        match self.module_order {
            ModuleOrder::PositionOverTerm => {
                b.comp().cmp(&a.comp()).then_with(|| self.order.cmp_plain(a, b, n, &self.weights))
            }
            ModuleOrder::TermOverPosition => self
                .term_degree(a)
                .cmp(&self.term_degree(b))
                .then_with(|| self.order.cmp_plain(a, b, n, &self.weights))
                .then_with(|| b.comp().cmp(&a.comp())),
        }
    }

    // ---- constructors ----

    pub fn zero(&self) -> Poly<F> {
        Poly::zero()
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        Poly { terms: vec![(Monomial::var(i, self.weights[i]), self.field.one())] }
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps, &self.weights)
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Basis vector `e_i` of the free module.
    pub fn basis_vector(&self, i: usize) -> Poly<F> {
        Poly { terms: vec![(Monomial::one().with_comp(i as u32), self.field.one())] }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => {
                    last.1 = self.field.add(&last.1, &c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.1));
        Poly { terms: out }
    }

    /// Re-sorts a polynomial produced under another order of the same
    /// variables.
    pub fn resort(&self, f: &Poly<F>) -> Poly<F> {
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Poly { terms }
    }

    // ---- arithmetic ----

    pub fn add(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        self.merge(&f.terms, &g.terms, None)
    }

    pub fn sub(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        let minus = self.field.neg(&self.field.one());
        self.merge(&f.terms, &g.terms, Some((&minus, &Monomial::one())))
    }

    pub fn neg(&self, f: &Poly<F>) -> Poly<F> {
        Poly { terms: f.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect() }
    }

    pub fn scale(&self, f: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|(m, x)| (*m, self.field.mul(x, c))).collect() }
    }

    /// `c * m * f` for a plain monomial `m`.
    pub fn mul_term(&self, f: &Poly<F>, c: &F::Elem, m: &Monomial) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect() }
    }

    /// `f + c * m * g`.
    pub fn add_mul_term(&self, f: &Poly<F>, c: &F::Elem, m: &Monomial, g: &Poly<F>) -> Poly<F> {
        self.merge(&f.terms, &g.terms, Some((c, m)))
    }

    /// `a + c * m * g` where `a` is a sorted tail of some term list.
    pub(crate) fn add_mul_term_slice(&self, a: &[(Monomial, F::Elem)], c: &F::Elem, m: &Monomial, g: &Poly<F>) -> Poly<F> {
        self.merge(a, &g.terms, Some((c, m)))
    }

    /// Product of a plain polynomial `f` with `g` (plain or a module vector).
    pub fn mul(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        if small.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add_mul_term(&acc, c, m, big);
        }
        acc
    }

    pub fn pow(&self, f: &Poly<F>, n: u32) -> Poly<F> {
        let mut r = self.one();
        for _ in 0..n {
            r = self.mul(&r, f);
        }
        r
    }

    /// Merge `a + c*m*b` where both inputs are sorted.
    fn merge(&self, a: &[(Monomial, F::Elem)], b: &[(Monomial, F::Elem)], cm: Option<(&F::Elem, &Monomial)>) -> Poly<F> {
        let fld = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let map_b = |t: &(Monomial, F::Elem)| -> (Monomial, F::Elem) {
            match cm {
                Some((c, m)) => (t.0.mul(m), fld.mul(&t.1, c)),
                None => t.clone(),
            }
        };
        let mut pending_b: Option<(Monomial, F::Elem)> = b.first().map(map_b);
        while i < a.len() || pending_b.is_some() {
            match (a.get(i), pending_b.as_ref()) {
                (Some(ta), Some(tb)) => match self.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => {
                        out.push(ta.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending_b.take().unwrap());
                        j += 1;
                        pending_b = b.get(j).map(map_b);
                    }
                    Ordering::Equal => {
                        let s = fld.add(&ta.1, &tb.1);
                        if !fld.is_zero(&s) {
                            out.push((ta.0, s));
                        }
                        i += 1;
                        j += 1;
                        pending_b = b.get(j).map(map_b);
                    }
                },
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending_b.take().unwrap());
                    j += 1;
                    pending_b = b.get(j).map(map_b);
                }
                (None, None) => break,
            }
        }
        // a zero multiplier never reaches here through public paths
        out.retain(|t| !fld.is_zero(&t.1));
        Poly { terms: out }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, f: &Poly<F>) -> Poly<F> {
        match f.lc() {
            None => Poly::zero(),
            Some(c) if self.field.is_one(c) => f.clone(),
            Some(c) => {
                let inv = self.field.inv(c);
                self.scale(f, &inv)
            }
        }
    }

    // ---- inspection ----

    pub fn is_constant(&self, f: &Poly<F>) -> bool {
        f.terms.iter().all(|t| t.0.is_one() && t.0.comp() == 0)
    }

    pub fn is_homogeneous(&self, f: &Poly<F>) -> bool {
        match f.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.term_degree(m0);
                f.terms.iter().all(|(m, _)| self.term_degree(m) == d)
            }
        }
    }

    /// Degree of a homogeneous element (max term degree in general).
    pub fn degree(&self, f: &Poly<F>) -> Option<i32> {
        f.terms.iter().map(|(m, _)| self.term_degree(m)).max()
    }

    /// Whether any variable in the bitmask `block` occurs in `f`.
    pub fn involves(&self, f: &Poly<F>, block: u32) -> bool {
        f.terms.iter().any(|(m, _)| m.support_mask() & block != 0)
    }

    // ---- maps between rings ----

    /// Embeds `f` from `src` into this ring, sending variable `i` of `src`
    /// to variable `positions[i]` here.
    pub fn embed(&self, src: &PolyRing<F>, f: &Poly<F>, positions: &[usize]) -> Poly<F> {
        debug_assert_eq!(positions.len(), src.nvars());
        let terms = f.terms.iter().map(|(m, c)| (m.remap(positions, &self.weights), c.clone())).collect();
        self.from_terms(terms)
    }

    /// Embeds a polynomial whose variables are a prefix of this ring's.
    pub fn embed_prefix(&self, src: &PolyRing<F>, f: &Poly<F>) -> Poly<F> {
        let positions: Vec<usize> = (0..src.nvars()).collect();
        self.embed(src, f, &positions)
    }

    /// Substitutes `images[i]` (elements of `target`) for variable `i`.
    pub fn substitute(&self, f: &Poly<F>, target: &PolyRing<F>, images: &[Poly<F>]) -> Poly<F> {
        debug_assert_eq!(images.len(), self.nvars());
        let mut acc = Poly::zero();
        // cache powers per variable
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|g| vec![target.one(), g.clone()]).collect();
        for (m, c) in &f.terms {
            let mut t = target.constant(c.clone());
            for i in 0..self.nvars() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = target.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                t = target.mul(&t, &powers[i][e]);
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    // ---- formatting ----

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(v.name.clone()),
                e => parts.push(format!("{}^{}", v.name, e)),
            }
        }
        parts.join("*")
    }

    /// Renders a plain polynomial, e.g. `-a^3+c^2`.
    pub fn format(&self, f: &Poly<F>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let neg = self.field.is_negative(c);
            let abs = if neg { self.field.neg(c) } else { c.clone() };
            if neg {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            let mono = self.format_monomial(m);
            let coef = self.field.format(&abs);
            let coef = if coef.contains('/') { format!("({coef})") } else { coef };
            if mono.is_empty() {
                s.push_str(&coef);
            } else if self.field.is_one(&abs) {
                s.push_str(&mono);
            } else {
                s.push_str(&coef);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    /// Renders a module vector as `[f_0, f_1, ...]`.
    pub fn format_vector(&self, v: &Poly<F>) -> String {
        let parts: Vec<String> = (0..self.rank() as u32).map(|c| self.format(&v.component(c))).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Assembles a module vector from plain entries.
    pub fn vector(&self, entries: &[Poly<F>]) -> Poly<F> {
        let mut terms = Vec::new();
        for (i, e) in entries.iter().enumerate() {
            for (m, c) in &e.terms {
                terms.push((m.with_comp(i as u32), c.clone()));
            }
        }
        self.from_terms(terms)
    }
}
