//! Hilbert series numerators of monomial ideals.
//!
//! For a monomial ideal `L` in `k[x_1..x_n]` with positive weights the
//! Hilbert series of `k[x]/L` is `N(t) / prod_i (1 - t^{w_i})`. `N` is computed
//! by the pivot recursion `N(L) = N(L + (p)) + t^{deg p} N(L : p)`.

use super::monomial::{Monomial, MAX_VARS};

/// Dense integer polynomial in `t`; index = degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(pub Vec<i64>);

impl UniPoly {
    pub fn one() -> Self {
        UniPoly(vec![1])
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        UniPoly((0..n).map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0)).collect()).trim()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        UniPoly((0..n).map(|i| self.0.get(i).unwrap_or(&0) - o.0.get(i).unwrap_or(&0)).collect()).trim()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut r = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        UniPoly(r).trim()
    }

    /// `t^k * self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut r = vec![0i64; k];
        r.extend_from_slice(&self.0);
        UniPoly(r)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut r = vec![0i64; k + 1];
        r[0] = 1;
        r[k] -= 1;
        UniPoly(r).trim()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exact division by a polynomial with constant term 1, returning the
    /// quotient and whether the remainder vanished.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(d.0.first(), Some(&1));
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let mut rem = self.0.clone();
        let dl = d.0.len();
        if rem.len() < dl {
            return None;
        }
        let ql = rem.len() - dl + 1;
        let mut q = vec![0i64; ql];
        for i in 0..ql {
            let c = rem[i];
            q[i] = c;
            if c != 0 {
                for (j, dj) in d.0.iter().enumerate() {
                    rem[i + j] -= c * dj;
                }
            }
        }
        if rem.iter().all(|&c| c == 0) {
            Some(UniPoly(q).trim())
        } else {
            None
        }
    }

    /// Power series expansion of `self / d` up to degree `n` inclusive, for
    /// `d` with constant term 1.
    pub fn series_div(&self, d: &Self, n: usize) -> Vec<i64> {
        assert_eq!(d.0.first(), Some(&1));
        let mut out = vec![0i64; n + 1];
        for k in 0..=n {
            let mut c = *self.0.get(k).unwrap_or(&0);
            for j in 1..d.0.len().min(k + 1) {
                c -= d.0[j] * out[k - j];
            }
            out[k] = c;
        }
        out
    }
}

/// `prod_i (1 - t^{w_i})`.
pub fn hilbert_denominator(weights: &[u32]) -> UniPoly {
    weights.iter().fold(UniPoly::one(), |acc, &w| acc.mul(&UniPoly::one_minus_t_pow(w as usize)))
}

type Exps = [u16; MAX_VARS];

fn exps_of(m: &Monomial) -> Exps {
    *m.exps()
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn wdeg(e: &Exps, weights: &[u32]) -> usize {
    e.iter().zip(weights.iter()).map(|(&a, &w)| a as usize * w as usize).sum()
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|e| e.iter().map(|&x| x as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| divides(o, &g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Exps>, weights: &[u32]) -> UniPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return UniPoly::one();
    }
    // base case: pairwise coprime generators
    let mut used = [false; MAX_VARS];
    let mut coprime = true;
    'outer: for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                if used[i] {
                    coprime = false;
                    break 'outer;
                }
                used[i] = true;
            }
        }
    }
    if coprime {
        return gens.iter().fold(UniPoly::one(), |acc, g| acc.mul(&UniPoly::one_minus_t_pow(wdeg(g, weights))));
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut counts = [0usize; MAX_VARS];
    for g in &gens {
        if g.iter().filter(|&&e| e > 0).count() > 1 {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    let v = (0..MAX_VARS).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    // pivot x_v^e with e the smallest positive exponent of x_v among mixed generators
    let e = gens.iter().filter(|g| g[v] > 0 && g.iter().filter(|&&x| x > 0).count() > 1).map(|g| g[v]).min().unwrap();
    let mut pivot = [0u16; MAX_VARS];
    pivot[v] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = *g;
            h[v] = h[v].saturating_sub(e);
            h
        })
        .collect();
    let a = numerator_rec(with_pivot, weights);
    let b = numerator_rec(colon, weights).shift(e as usize * weights[v] as usize);
    a.add(&b)
}

/// Hilbert series numerator of `k[x]/L` for the monomial ideal `L` generated
/// by `gens` (components ignored).
pub fn hilbert_numerator(gens: &[Monomial], weights: &[u32]) -> UniPoly {
    numerator_rec(gens.iter().map(exps_of).collect(), weights)
}

/// Krull dimension of `k[x]/L` read off the numerator: the order of the pole
/// of the Hilbert series at `t = 1`. Returns -1 for the zero ring.
pub fn dimension_from_numerator(num: &UniPoly, weights: &[u32]) -> i64 {
    if num.is_zero() {
        return -1;
    }
    let mut n = num.clone();
    let mut k = 0i64;
    let one_minus_t = UniPoly::one_minus_t_pow(1);
    while n.eval_at_one() == 0 {
        n = n.div_exact(&one_minus_t).expect("root at 1 divides");
        k += 1;
    }
    weights.len() as i64 - k
}

/// Number of standard monomials when the quotient is finite-dimensional.
pub fn finite_length(num: &UniPoly, weights: &[u32]) -> Option<i64> {
    if num.is_zero() {
        return Some(0);
    }
    let series = num.div_exact(&hilbert_denominator(weights))?;
    Some(series.eval_at_one())
}

/// Degree of `k[x]/L` under the standard grading (all weights 1).
pub fn degree_from_numerator(num: &UniPoly) -> i64 {
    let mut n = num.clone();
    let one_minus_t = UniPoly::one_minus_t_pow(1);
    while !n.is_zero() && n.eval_at_one() == 0 {
        n = n.div_exact(&one_minus_t).unwrap();
    }
    n.eval_at_one()
}
