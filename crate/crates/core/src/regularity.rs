use std::fmt;

use crate::config::IdempotentReading;
use crate::semigroup::OrderedSemigroup;
use crate::set::ElementSet;
use crate::verdict::{for_all, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularityVariant {
    /// `a ∈ (aSa]`
    Regular,
    /// `a ∈ (a²Sa²]`
    CompletelyRegular,
    /// `a ∈ (Sa²]`
    LeftRegular,
    /// `a ∈ (a²S]`
    RightRegular,
}

impl RegularityVariant {
    pub const ALL: [RegularityVariant; 4] = [
        RegularityVariant::Regular,
        RegularityVariant::CompletelyRegular,
        RegularityVariant::LeftRegular,
        RegularityVariant::RightRegular,
    ];

    pub fn mirror(self) -> Self {
        match self {
            RegularityVariant::LeftRegular => RegularityVariant::RightRegular,
            RegularityVariant::RightRegular => RegularityVariant::LeftRegular,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RegularityVariant::Regular => "regular",
            RegularityVariant::CompletelyRegular => "completely_regular",
            RegularityVariant::LeftRegular => "left_regular",
            RegularityVariant::RightRegular => "right_regular",
        }
    }
}

impl fmt::Display for RegularityVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether `a` satisfies the membership defining `variant`.
pub fn element_satisfies(s: &OrderedSemigroup, a: usize, variant: RegularityVariant) -> bool {
    let all = s.carrier();
    let one = ElementSet::singleton(a);
    let sq = ElementSet::singleton(s.mul(a, a));
    let factors: &[ElementSet] = match variant {
        RegularityVariant::Regular => &[one, all, one],
        RegularityVariant::CompletelyRegular => &[sq, all, sq],
        RegularityVariant::LeftRegular => &[all, sq],
        RegularityVariant::RightRegular => &[sq, all],
    };
    s.closed_chain(factors).contains(a)
}

/// Every `a` satisfies `a ∈ (aSa]`; the witness is the least `a` that does not.
pub fn is_regular(s: &OrderedSemigroup) -> Verdict {
    regularity_variant(s, RegularityVariant::Regular)
}

pub fn regularity_variant(s: &OrderedSemigroup, variant: RegularityVariant) -> Verdict {
    for_all(s.n(), variant.name(), |a| element_satisfies(s, a, variant))
}

/// Ordered idempotents `{e : e ≤ e²}`.
pub fn ordered_idempotents(s: &OrderedSemigroup) -> ElementSet {
    idempotents(s, IdempotentReading::Leq)
}

pub fn idempotents(s: &OrderedSemigroup, reading: IdempotentReading) -> ElementSet {
    (0..s.n())
        .filter(|&e| match reading {
            IdempotentReading::Leq => s.leq(e, s.mul(e, e)),
            IdempotentReading::Eq => s.mul(e, e) == e,
        })
        .collect()
}

/// Whether `b` is an inverse of `a`: `a ≤ aba` and `b ≤ bab`.
pub fn is_inverse_of(s: &OrderedSemigroup, b: usize, a: usize) -> bool {
    s.leq(a, s.mul3(a, b, a)) && s.leq(b, s.mul3(b, a, b))
}

/// The set `V(a)` of all inverses of `a`.
pub fn inverses(s: &OrderedSemigroup, a: usize) -> ElementSet {
    (0..s.n()).filter(|&b| is_inverse_of(s, b, a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{bottomed_right_zero, leq_from_pairs};
    use crate::semigroup::validate;
    use crate::verdict::Witness;

    /// `a·a = b`, every other product `b`; discrete order.
    fn nilpotent() -> OrderedSemigroup {
        validate(&[vec![1, 1], vec![1, 1]], &leq_from_pairs(2, &[])).unwrap()
    }

    #[test]
    fn regular_examples() {
        assert!(is_regular(&bottomed_right_zero()).holds());
        assert!(is_regular(&validate(&[vec![0]], &leq_from_pairs(1, &[])).unwrap()).holds());
        assert_eq!(
            is_regular(&nilpotent()),
            Verdict::Fails(Witness::new("regular", [0]))
        );
    }

    #[test]
    fn variant_examples() {
        let s = bottomed_right_zero();
        assert!(regularity_variant(&s, RegularityVariant::CompletelyRegular).holds());
        assert!(regularity_variant(&s, RegularityVariant::LeftRegular).holds());
        let t = nilpotent();
        assert!(!element_satisfies(&t, 0, RegularityVariant::RightRegular));
        assert!(element_satisfies(&t, 1, RegularityVariant::RightRegular));
        assert!(!regularity_variant(&t, RegularityVariant::RightRegular).holds());
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(
            ordered_idempotents(&bottomed_right_zero()),
            ElementSet::full(3)
        );
        let meet = validate(&[vec![0, 0], vec![0, 1]], &leq_from_pairs(2, &[])).unwrap();
        assert_eq!(ordered_idempotents(&meet), ElementSet::full(2));
        assert_eq!(ordered_idempotents(&nilpotent()), ElementSet::singleton(1));
    }

    #[test]
    fn strict_reading_is_smaller() {
        // Null semigroup {z, a} with a ≤ z: a ≤ a² = z but a ≠ a².
        let s = validate(&[vec![0, 0], vec![0, 0]], &leq_from_pairs(2, &[(1, 0)])).unwrap();
        assert!(ordered_idempotents(&s).contains(1));
        assert!(!idempotents(&s, IdempotentReading::Eq).contains(1));
    }

    #[test]
    fn inverse_examples() {
        let s = bottomed_right_zero();
        assert_eq!(inverses(&s, 0), ElementSet::full(3));
        let t = validate(&[vec![0]], &leq_from_pairs(1, &[])).unwrap();
        assert_eq!(inverses(&t, 0), ElementSet::singleton(0));
        let lz = validate(&[vec![0, 0], vec![1, 1]], &leq_from_pairs(2, &[])).unwrap();
        assert_eq!(inverses(&lz, 0), ElementSet::full(2));
    }
}
