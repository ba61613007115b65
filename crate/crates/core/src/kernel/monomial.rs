//! Exponent vectors with a cached weighted degree.
//!
//! A monomial optionally carries a component index so the same type serves
//! as a basis term `x^a e_i` of a free module. Plain polynomials use
//! component 0.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    comp: u32,
    deg: i32,
    mask: u32,
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.comp == other.comp && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
        self.comp.hash(state);
    }
}

#[inline]
fn mask_of(exps: &[u16; MAX_VARS]) -> u32 {
    let mut m = 0u32;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << i;
        }
    }
    m
}

impl Monomial {
    pub fn one() -> Self {
        Self { exps: [0; MAX_VARS], comp: 0, deg: 0, mask: 0 }
    }

    pub fn from_exponents(exps: &[u32], weights: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0i32;
        for (i, &x) in exps.iter().enumerate() {
            e[i] = u16::try_from(x).expect("exponent overflow");
            deg += x as i32 * weights[i] as i32;
        }
        Self { exps: e, comp: 0, deg, mask: mask_of(&e) }
    }

    pub fn var(i: usize, weight: u32) -> Self {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Self { exps: e, comp: 0, deg: weight as i32, mask: 1 << i }
    }

    pub fn with_comp(mut self, comp: u32) -> Self {
        self.comp = comp;
        self
    }

    #[inline]
    pub fn comp(&self) -> u32 {
        self.comp
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    /// Weighted degree of the exponent vector (component shift excluded).
    #[inline]
    pub fn deg(&self) -> i32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn support_mask(&self) -> u32 {
        self.mask
    }

    /// Product; the component of `self` is kept when `other` is a plain
    /// monomial and vice versa.
    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.exps;
        for i in 0..MAX_VARS {
            e[i] = e[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Self { exps: e, comp: self.comp.max(other.comp), deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    /// Whether `self` divides `other` (same component required).
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        if self.comp != other.comp || self.mask & !other.mask != 0 {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` as a plain monomial; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Self {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = other.exps[i] - self.exps[i];
        }
        Self { exps: e, comp: 0, deg: other.deg - self.deg, mask: mask_of(&e) }
    }

    /// Least common multiple; components must agree.
    pub fn lcm(&self, other: &Self, weights: &[u32]) -> Self {
        debug_assert_eq!(self.comp, other.comp);
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0i32;
        for i in 0..MAX_VARS {
            e[i] = self.exps[i].max(other.exps[i]);
            if e[i] > 0 {
                deg += e[i] as i32 * weights[i] as i32;
            }
        }
        Self { exps: e, comp: self.comp, deg, mask: self.mask | other.mask }
    }

    pub fn gcd_is_one(&self, other: &Self) -> bool {
        self.mask & other.mask == 0
    }

    /// Strips the component.
    pub fn plain(&self) -> Self {
        Self { comp: 0, ..*self }
    }

    /// Weighted degree restricted to the variables in `block`.
    #[inline]
    pub fn block_deg(&self, block: u32, weights: &[u32]) -> i64 {
        let mut d = 0i64;
        let mut m = self.mask & block;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            d += self.exps[i] as i64 * weights[i] as i64;
            m &= m - 1;
        }
        d
    }

    /// Reverse lexicographic tie-break: the monomial with the smaller
    /// exponent in the last differing variable is greater.
    #[inline]
    pub fn revlex_cmp(&self, other: &Self, nvars: usize) -> Ordering {
        for i in (0..nvars).rev() {
            let (a, b) = (self.exps[i], other.exps[i]);
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn lex_cmp(&self, other: &Self, nvars: usize) -> Ordering {
        for i in 0..nvars {
            let (a, b) = (self.exps[i], other.exps[i]);
            if a != b {
                return a.cmp(&b);
            }
        }
        Ordering::Equal
    }

    /// Embeds into a ring with more variables, mapping variable `i` to
    /// `positions[i]`.
    pub fn remap(&self, positions: &[usize], weights: &[u32]) -> Self {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0i32;
        for (i, &p) in positions.iter().enumerate() {
            e[p] = self.exps[i];
            deg += self.exps[i] as i32 * weights[p] as i32;
        }
        Self { exps: e, comp: self.comp, deg, mask: mask_of(&e) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let w = [1, 2, 3];
        let a = Monomial::from_exponents(&[1, 0, 2], &w);
        let b = Monomial::from_exponents(&[2, 1, 2], &w);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        let q = a.quotient_of(&b);
        assert_eq!(q, Monomial::from_exponents(&[1, 1, 0], &w));
        assert_eq!(q.deg(), 3);
        assert_eq!(a.mul(&q), b);
    }

    #[test]
    fn components_block_division() {
        let w = [1, 1];
        let a = Monomial::from_exponents(&[1, 0], &w).with_comp(1);
        let b = Monomial::from_exponents(&[1, 1], &w).with_comp(2);
        assert!(!a.divides(&b));
        assert_eq!(a.mul(&Monomial::var(1, 1)).comp(), 1);
    }
}
