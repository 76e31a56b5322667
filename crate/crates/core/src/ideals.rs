//! Ideals, principal ideals, and Green's relations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relation::EquivalenceRelation;
use crate::semigroup::OrderedSemigroup;
use crate::set::ElementSet;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

    /// Left and right swap under passage to the dual semigroup.
    pub fn mirror(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::TwoSided => Side::TwoSided,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreenKind {
    L,
    R,
    J,
    H,
}

impl GreenKind {
    pub const ALL: [GreenKind; 4] = [GreenKind::L, GreenKind::R, GreenKind::J, GreenKind::H];
}

impl fmt::Display for GreenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GreenKind::L => "L",
            GreenKind::R => "R",
            GreenKind::J => "J",
            GreenKind::H => "H",
        })
    }
}

impl FromStr for GreenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "L" | "l" => Ok(GreenKind::L),
            "R" | "r" => Ok(GreenKind::R),
            "J" | "j" => Ok(GreenKind::J),
            "H" | "h" => Ok(GreenKind::H),
            _ => Err(format!(
                "unknown Green's relation `{s}` (expected L, R, J or H)"
            )),
        }
    }
}

/// Checks whether `ideal` is a left, right, or two-sided ideal.
///
/// A failing verdict carries either a product that escapes the set
/// (`left_absorption (s, i)` meaning `s·i ∉ I`, `right_absorption (i, s)`
/// meaning `i·s ∉ I`) or an order pair `downward_closure (t, h)` with
/// `t ≤ h ∈ I` and `t ∉ I`.
pub fn is_ideal(s: &OrderedSemigroup, ideal: ElementSet, side: Side) -> Result<Verdict> {
    if ideal.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = s.n();
    if matches!(side, Side::Left | Side::TwoSided) {
        for x in 0..n {
            if let Some(i) = ideal.iter().find(|&i| !ideal.contains(s.mul(x, i))) {
                return Ok(Verdict::Fails(Witness::new("left_absorption", [x, i])));
            }
        }
    }
    if matches!(side, Side::Right | Side::TwoSided) {
        for i in ideal.iter() {
            if let Some(x) = (0..n).find(|&x| !ideal.contains(s.mul(i, x))) {
                return Ok(Verdict::Fails(Witness::new("right_absorption", [i, x])));
            }
        }
    }
    for t in 0..n {
        if ideal.contains(t) {
            continue;
        }
        if let Some(h) = ideal.iter().find(|&h| s.leq(t, h)) {
            return Ok(Verdict::Fails(Witness::new("downward_closure", [t, h])));
        }
    }
    Ok(Verdict::Holds)
}

/// `L(a) = ({a} ∪ Sa]`, `R(a) = ({a} ∪ aS]`, `I(a) = ({a} ∪ Sa ∪ aS ∪ SaS]`.
pub fn principal_ideal(s: &OrderedSemigroup, a: usize, side: Side) -> ElementSet {
    let all = s.carrier();
    let one = ElementSet::singleton(a);
    let generated = match side {
        Side::Left => one.union(s.set_product(all, one)),
        Side::Right => one.union(s.set_product(one, all)),
        Side::TwoSided => {
            let sa = s.set_product(all, one);
            one.union(sa)
                .union(s.set_product(one, all))
                .union(s.set_product(sa, all))
        }
    };
    s.downward_closure(generated)
}

/// Intersection of every side-ideal containing `a`, found by scanning all
/// nonempty subsets. Exists to cross-check [`principal_ideal`].
pub fn minimal_ideal_oracle(
    s: &OrderedSemigroup,
    a: usize,
    side: Side,
    max_n: usize,
) -> Result<ElementSet> {
    let n = s.n();
    if n > max_n {
        return Err(Error::SizeBound {
            what: "the ideal oracle",
            n,
            max: max_n,
        });
    }
    let mut meet = s.carrier();
    for bits in 1u128..(1u128 << n) {
        let cand = ElementSet::from_bits(bits);
        if cand.contains(a) && is_ideal(s, cand, side)?.holds() {
            meet = meet.intersection(cand);
        }
    }
    Ok(meet)
}

/// All principal ideals of one side, indexed by generator.
pub fn principal_ideals(s: &OrderedSemigroup, side: Side) -> Vec<ElementSet> {
    (0..s.n()).map(|a| principal_ideal(s, a, side)).collect()
}

/// Green's relation: equality of principal ideals, with `H = L ∩ R`.
pub fn green_relation(s: &OrderedSemigroup, kind: GreenKind) -> EquivalenceRelation {
    match kind {
        GreenKind::L => EquivalenceRelation::from_labels(&principal_ideals(s, Side::Left)),
        GreenKind::R => EquivalenceRelation::from_labels(&principal_ideals(s, Side::Right)),
        GreenKind::J => EquivalenceRelation::from_labels(&principal_ideals(s, Side::TwoSided)),
        GreenKind::H => {
            green_relation(s, GreenKind::L).intersection(&green_relation(s, GreenKind::R))
        }
    }
}

/// The `kind`-class of `a`.
pub fn green_class(s: &OrderedSemigroup, a: usize, kind: GreenKind) -> ElementSet {
    green_relation(s, kind).class_of(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{bottomed_right_zero, leq_from_pairs};
    use crate::semigroup::validate;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn left_zero() -> OrderedSemigroup {
        validate(&[vec![0, 0], vec![1, 1]], &leq_from_pairs(2, &[])).unwrap()
    }

    fn trivial() -> OrderedSemigroup {
        validate(&[vec![0]], &leq_from_pairs(1, &[])).unwrap()
    }

    #[test]
    fn ideal_examples() {
        let s = bottomed_right_zero();
        assert!(is_ideal(&s, set(&[0]), Side::Left).unwrap().holds());
        let v = is_ideal(&s, set(&[0]), Side::Right).unwrap();
        // a·e = e escapes {a}
        assert_eq!(v, Verdict::Fails(Witness::new("right_absorption", [0, 1])));
        assert!(is_ideal(&s, s.carrier(), Side::TwoSided).unwrap().holds());
        assert!(matches!(
            is_ideal(&s, ElementSet::EMPTY, Side::Left),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn closure_failure_witness() {
        // {e} absorbs on the left (x·e = e) but a ≤ e is missing.
        let s = bottomed_right_zero();
        let v = is_ideal(&s, set(&[1]), Side::Left).unwrap();
        assert_eq!(v, Verdict::Fails(Witness::new("downward_closure", [0, 1])));
    }

    #[test]
    fn principal_ideal_examples() {
        let s = bottomed_right_zero();
        assert_eq!(principal_ideal(&s, 0, Side::Left), set(&[0]));
        assert_eq!(principal_ideal(&s, 1, Side::Left), set(&[0, 1]));
        assert_eq!(principal_ideal(&s, 0, Side::Right), set(&[0, 1, 2]));
    }

    #[test]
    fn oracle_examples() {
        let s = bottomed_right_zero();
        assert_eq!(
            minimal_ideal_oracle(&s, 1, Side::Left, 8).unwrap(),
            set(&[0, 1])
        );
        for side in Side::ALL {
            assert_eq!(
                minimal_ideal_oracle(&trivial(), 0, side, 8).unwrap(),
                set(&[0])
            );
        }
        assert_eq!(
            minimal_ideal_oracle(&left_zero(), 0, Side::Left, 8).unwrap(),
            set(&[0, 1])
        );
        assert!(minimal_ideal_oracle(&s, 0, Side::Left, 2).is_err());
    }

    #[test]
    fn green_examples() {
        let s = bottomed_right_zero();
        assert_eq!(
            green_relation(&s, GreenKind::R),
            EquivalenceRelation::universal(3)
        );
        assert_eq!(
            green_relation(&s, GreenKind::L),
            EquivalenceRelation::identity(3)
        );
        assert_eq!(
            green_relation(&s, GreenKind::H),
            EquivalenceRelation::identity(3)
        );
        assert_eq!(green_class(&s, 1, GreenKind::R), s.carrier());
        assert_eq!(green_class(&s, 1, GreenKind::L), set(&[1]));
    }

    #[test]
    fn left_ideals_are_right_ideals_of_dual() {
        let s = bottomed_right_zero();
        let d = s.dual();
        for a in 0..3 {
            assert_eq!(
                principal_ideal(&s, a, Side::Left),
                principal_ideal(&d, a, Side::Right)
            );
        }
        assert_eq!(
            green_relation(&s, GreenKind::L),
            green_relation(&d, GreenKind::R)
        );
    }
}
