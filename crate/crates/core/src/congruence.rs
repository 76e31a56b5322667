//! Congruences, semilattice congruences, and complete-semilattice decompositions.

use crate::classify::Classifier;
use crate::config::{Limits, Readings};
use crate::ideals::Side;
use crate::relation::{EquivalenceRelation, UnionFind};
use crate::semigroup::OrderedSemigroup;
use crate::verdict::{Verdict, Witness};

/// Generating pairs for closure operations.
pub type RelationPairs = Vec<(usize, usize)>;

/// Class type for [`is_complete_semilattice_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassType {
    RightGroupLike,
    LeftGroupLike,
    GroupLike,
}

impl ClassType {
    fn side(self) -> Side {
        match self {
            ClassType::RightGroupLike => Side::Right,
            ClassType::LeftGroupLike => Side::Left,
            ClassType::GroupLike => Side::TwoSided,
        }
    }
}

/// Left: `a ρ b ⟹ ca ρ cb`; right: `a ρ b ⟹ ac ρ bc`. Witness `(a, b, c)`.
pub fn is_congruence(s: &OrderedSemigroup, rho: &EquivalenceRelation, side: Side) -> Verdict {
    let n = s.n();
    for a in 0..n {
        for b in 0..n {
            if !rho.related(a, b) {
                continue;
            }
            for c in 0..n {
                if matches!(side, Side::Left | Side::TwoSided)
                    && !rho.related(s.mul(c, a), s.mul(c, b))
                {
                    return Verdict::Fails(Witness::new("left_translation", [a, b, c]));
                }
                if matches!(side, Side::Right | Side::TwoSided)
                    && !rho.related(s.mul(a, c), s.mul(b, c))
                {
                    return Verdict::Fails(Witness::new("right_translation", [a, b, c]));
                }
            }
        }
    }
    Verdict::Holds
}

/// A congruence with `a ρ a²` and `ab ρ ba` for all `a, b`.
pub fn is_semilattice_congruence(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> Verdict {
    let v = is_congruence(s, rho, Side::TwoSided);
    if !v.holds() {
        return v;
    }
    let n = s.n();
    if let Some(a) = (0..n).find(|&a| !rho.related(a, s.mul(a, a))) {
        return Verdict::Fails(Witness::new("a_not_related_to_a2", [a]));
    }
    for a in 0..n {
        if let Some(b) = (0..n).find(|&b| !rho.related(s.mul(a, b), s.mul(b, a))) {
            return Verdict::Fails(Witness::new("ab_not_related_to_ba", [a, b]));
        }
    }
    Verdict::Holds
}

/// A semilattice congruence with `a ≤ b ⟹ a σ ab`.
pub fn is_complete_semilattice_congruence(
    s: &OrderedSemigroup,
    sigma: &EquivalenceRelation,
) -> Verdict {
    let v = is_semilattice_congruence(s, sigma);
    if !v.holds() {
        return v;
    }
    let n = s.n();
    for a in 0..n {
        for b in 0..n {
            if s.leq(a, b) && !sigma.related(a, s.mul(a, b)) {
                return Verdict::Fails(Witness::new("a_le_b_but_a_not_related_to_ab", [a, b]));
            }
        }
    }
    Verdict::Holds
}

/// Least two-sided congruence containing `generators`.
pub fn congruence_closure(
    s: &OrderedSemigroup,
    generators: &[(usize, usize)],
) -> EquivalenceRelation {
    let n = s.n();
    let mut uf = UnionFind::new(n);
    for &(a, b) in generators {
        uf.union(a, b);
    }
    // Relating every element with its root generates the equivalence, so it is
    // enough to translate those pairs until nothing merges.
    loop {
        let mut changed = false;
        for a in 0..n {
            let r = uf.find(a);
            if r == a {
                continue;
            }
            for c in 0..n {
                changed |= uf.union(s.mul(c, a), s.mul(c, r));
                changed |= uf.union(s.mul(a, c), s.mul(r, c));
            }
        }
        if !changed {
            break;
        }
    }
    uf.into_relation()
}

/// The pairs `(a, a²)`, `(ab, ba)`, and `(a, ab)` for `a ≤ b`.
pub fn complete_semilattice_generators(s: &OrderedSemigroup) -> RelationPairs {
    let n = s.n();
    let mut out = Vec::new();
    for a in 0..n {
        out.push((a, s.mul(a, a)));
        for b in 0..n {
            out.push((s.mul(a, b), s.mul(b, a)));
            if s.leq(a, b) {
                out.push((a, s.mul(a, b)));
            }
        }
    }
    out
}

/// Least complete semilattice congruence, by closing the defining pairs.
pub fn least_complete_semilattice_congruence(s: &OrderedSemigroup) -> EquivalenceRelation {
    let mut rho = congruence_closure(s, &complete_semilattice_generators(s));
    // The generators do not depend on ρ, so one closure already satisfies every
    // condition; the loop only re-seeds if that ever stops being true.
    while let Verdict::Fails(w) = is_complete_semilattice_congruence(s, &rho) {
        let mut gens: RelationPairs = (0..s.n()).map(|a| (a, rho.class_id(a))).collect();
        gens.extend(repair_pair(s, &w));
        rho = congruence_closure(s, &gens);
    }
    rho
}

fn repair_pair(s: &OrderedSemigroup, w: &Witness) -> Option<(usize, usize)> {
    match (w.clause, &w.elements[..]) {
        ("a_not_related_to_a2", &[a]) => Some((a, s.mul(a, a))),
        ("ab_not_related_to_ba", &[a, b]) => Some((s.mul(a, b), s.mul(b, a))),
        ("a_le_b_but_a_not_related_to_ab", &[a, b]) => Some((a, s.mul(a, b))),
        ("left_translation", &[a, b, c]) => Some((s.mul(c, a), s.mul(c, b))),
        ("right_translation", &[a, b, c]) => Some((s.mul(a, c), s.mul(b, c))),
        _ => None,
    }
}

/// Whether the least complete semilattice congruence has classes that are
/// subsemigroups of type `class`, each judged as an ordered semigroup in its
/// own right (restricted multiplication and order, closures inside the class).
///
/// The class types are defined for regular semigroups only, so a class that is
/// not regular under the induced structure does not qualify.
pub fn is_complete_semilattice_of(s: &OrderedSemigroup, class: ClassType) -> Verdict {
    is_complete_semilattice_of_with(s, class, Readings::default(), Limits::default())
}

pub fn is_complete_semilattice_of_with(
    s: &OrderedSemigroup,
    class: ClassType,
    readings: Readings,
    limits: Limits,
) -> Verdict {
    let rho = least_complete_semilattice_congruence(s);
    for block in rho.classes() {
        let rep = block.first().expect("classes are nonempty");
        let Some(sub) = s.induced(block) else {
            return Verdict::Fails(Witness::new(
                "class_not_closed",
                block.iter().collect::<Vec<_>>(),
            ));
        };
        let verdict = Classifier::with(&sub, readings, limits).is_group_like(class.side());
        if !verdict.holds() {
            // Inner witness indices are positions inside the class; map them back.
            let members: Vec<usize> = block.iter().collect();
            let inner: Vec<usize> = verdict
                .witness()
                .map(|w| w.elements.iter().map(|&i| members[i]).collect())
                .unwrap_or_default();
            let clause = match verdict {
                Verdict::NotApplicable(_) => "class_not_regular",
                _ => "class_not_of_type",
            };
            let mut elements = vec![rep];
            elements.extend(inner);
            return Verdict::Fails(Witness::new(clause, elements));
        }
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{bottomed_right_zero, leq_from_pairs};
    use crate::semigroup::validate;

    fn meet(pairs: &[(usize, usize)]) -> OrderedSemigroup {
        validate(&[vec![0, 0], vec![0, 1]], &leq_from_pairs(2, pairs)).unwrap()
    }

    fn left_zero() -> OrderedSemigroup {
        validate(&[vec![0, 0], vec![1, 1]], &leq_from_pairs(2, &[])).unwrap()
    }

    #[test]
    fn trivial_relations_are_congruences() {
        let s = bottomed_right_zero();
        assert!(is_congruence(&s, &EquivalenceRelation::universal(3), Side::TwoSided).holds());
        assert!(is_congruence(&s, &EquivalenceRelation::identity(3), Side::TwoSided).holds());
    }

    #[test]
    fn failing_congruence_witness_rechecks() {
        // Z3 with the partition {{0,1},{2}}: adding 1 sends (0,1) to (1,2).
        let z3 = validate(
            &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            &leq_from_pairs(3, &[]),
        )
        .unwrap();
        let rho = EquivalenceRelation::from_labels(&[0, 0, 1]);
        let v = is_congruence(&z3, &rho, Side::Left);
        let w = v.witness().unwrap();
        let [a, b, c] = w.elements[..] else { panic!() };
        assert!(rho.related(a, b));
        assert!(!rho.related(z3.mul(c, a), z3.mul(c, b)));
    }

    #[test]
    fn semilattice_congruence_examples() {
        let s = bottomed_right_zero();
        assert!(is_semilattice_congruence(&s, &EquivalenceRelation::universal(3)).holds());
        assert_eq!(
            is_semilattice_congruence(&s, &EquivalenceRelation::identity(3)),
            Verdict::Fails(Witness::new("ab_not_related_to_ba", [0, 1]))
        );
        assert!(is_semilattice_congruence(&meet(&[]), &EquivalenceRelation::identity(2)).holds());
    }

    #[test]
    fn complete_semilattice_congruence_examples() {
        let s = bottomed_right_zero();
        assert!(is_complete_semilattice_congruence(&s, &EquivalenceRelation::universal(3)).holds());
        assert!(
            is_complete_semilattice_congruence(&meet(&[]), &EquivalenceRelation::identity(2))
                .holds()
        );
        assert!(is_complete_semilattice_congruence(
            &meet(&[(0, 1)]),
            &EquivalenceRelation::identity(2)
        )
        .holds());
    }

    #[test]
    fn closure_examples() {
        let s = bottomed_right_zero();
        assert_eq!(
            congruence_closure(&s, &[]),
            EquivalenceRelation::identity(3)
        );
        assert_eq!(
            congruence_closure(&left_zero(), &[(0, 1)]),
            EquivalenceRelation::universal(2)
        );
        assert_eq!(congruence_closure(&s, &[(1, 2)]).class_ids(), &[0, 1, 1]);
    }

    #[test]
    fn least_complete_semilattice_examples() {
        assert_eq!(
            least_complete_semilattice_congruence(&bottomed_right_zero()),
            EquivalenceRelation::universal(3)
        );
        assert_eq!(
            least_complete_semilattice_congruence(&meet(&[])),
            EquivalenceRelation::identity(2)
        );
        let t = validate(&[vec![0]], &leq_from_pairs(1, &[])).unwrap();
        assert_eq!(
            least_complete_semilattice_congruence(&t),
            EquivalenceRelation::identity(1)
        );
    }

    #[test]
    fn decomposition_examples() {
        assert!(
            is_complete_semilattice_of(&bottomed_right_zero(), ClassType::RightGroupLike).holds()
        );
        assert!(is_complete_semilattice_of(&meet(&[]), ClassType::RightGroupLike).holds());
        let v = is_complete_semilattice_of(&left_zero(), ClassType::RightGroupLike);
        assert_eq!(v.witness().unwrap().clause, "class_not_of_type");
    }
}
