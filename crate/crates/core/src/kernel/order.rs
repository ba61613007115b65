use std::cmp::Ordering;

use super::monomial::Monomial;

/// Order on monomials of the base polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken reverse-lexicographically.
    DegRevLex,
    Lex,
    /// Weighted degree in the variables of `block` (a bitmask) first, then
    /// weighted degrevlex. Any polynomial whose leading term is free of the
    /// block variables is free of them entirely.
    Elimination { block: u32 },
}

/// How basis components of a free module are merged into the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Component first (lower index is greater), then the monomial order.
    PositionOverTerm,
    /// Total degree (including the component shift), then the monomial
    /// order, then the component.
    TermOverPosition,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp_plain(&self, a: &Monomial, b: &Monomial, nvars: usize, weights: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.deg().cmp(&b.deg()).then_with(|| a.revlex_cmp(b, nvars)),
            MonomialOrder::Lex => a.lex_cmp(b, nvars),
            MonomialOrder::Elimination { block } => a
                .block_deg(*block, weights)
                .cmp(&b.block_deg(*block, weights))
                .then_with(|| a.deg().cmp(&b.deg()))
                .then_with(|| a.revlex_cmp(b, nvars)),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e, &[1, 1, 1])
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x > y > z, and xz < y^2 in degrevlex
        assert_eq!(o.cmp_plain(&m(&[1, 0, 0]), &m(&[0, 1, 0]), 3, &[1, 1, 1]), Ordering::Greater);
        assert_eq!(o.cmp_plain(&m(&[1, 0, 1]), &m(&[0, 2, 0]), 3, &[1, 1, 1]), Ordering::Less);
        assert_eq!(o.cmp_plain(&m(&[0, 0, 2]), &m(&[1, 0, 0]), 3, &[1, 1, 1]), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::Elimination { block: 0b100 };
        assert_eq!(o.cmp_plain(&m(&[0, 0, 1]), &m(&[5, 0, 0]), 3, &[1, 1, 1]), Ordering::Greater);
    }

    #[test]
    fn multiplicative() {
        let w = [1, 1, 1];
        for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Elimination { block: 1 }] {
            let (a, b, c) = (m(&[1, 0, 2]), m(&[0, 2, 1]), m(&[1, 1, 1]));
            assert_eq!(o.cmp_plain(&a, &b, 3, &w), o.cmp_plain(&a.mul(&c), &b.mul(&c), 3, &w));
        }
    }
}
