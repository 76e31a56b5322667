//! Decision procedures for the semigroup classes: right inverse, Clifford,
//! group-like, simple, and the individual conditions that characterize them.
//!
//! Everything goes through [`Classifier`], which caches the principal ideals,
//! Green's relations, ordered idempotents and one-sided translates `(Sa]`,
//! `(aS]` of a single structure. Predicates whose definition presupposes
//! regularity return [`Verdict::NotApplicable`] on non-regular input.
//! Failing verdicts carry the lexicographically least violating tuple.

use serde_json::{Map, Value};

use crate::config::{HCommutation, Limits, Quantifier, Readings};
use crate::error::{Error, Result};
use crate::ideals::{principal_ideals, GreenKind, Side};
use crate::regularity::{self, RegularityVariant};
use crate::relation::EquivalenceRelation;
use crate::semigroup::OrderedSemigroup;
use crate::set::ElementSet;
use crate::verdict::{for_all, for_all_pairs, Verdict, Witness};

/// The conditions shown equivalent to being right inverse (on regular input).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightInverseCondition {
    /// Every principal left ideal has ordered-idempotent generators, all R-related.
    Definition,
    /// Any two inverses of an element are R-related.
    InversesRRelated,
    /// `ef ∈ (fSeSf]` for all ordered idempotents `e, f`.
    ProductInFSeSf,
    /// `(eS] ∩ (fS] = (efS]` for all ordered idempotents `e, f`.
    PrincipalRightMeet,
    /// For `e` ordered idempotent and `x ∈ (Se]`, every inverse of `x` lies in `(eS]`.
    InverseInES,
    /// `e L f` implies `e H f` for ordered idempotents.
    LImpliesH,
}

impl RightInverseCondition {
    pub const ALL: [RightInverseCondition; 6] = [
        RightInverseCondition::Definition,
        RightInverseCondition::InversesRRelated,
        RightInverseCondition::ProductInFSeSf,
        RightInverseCondition::PrincipalRightMeet,
        RightInverseCondition::InverseInES,
        RightInverseCondition::LImpliesH,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RightInverseCondition::Definition => "definition",
            RightInverseCondition::InversesRRelated => "inverses R-related",
            RightInverseCondition::ProductInFSeSf => "ef in (fSeSf]",
            RightInverseCondition::PrincipalRightMeet => "(eS]&(fS]=(efS]",
            RightInverseCondition::InverseInES => "x' in (eS]",
            RightInverseCondition::LImpliesH => "eLf => eHf",
        }
    }
}

/// The conditions equivalent to right Clifford, and two of its consequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightCliffordCondition {
    /// `(Se] ⊆ (eS]` for every ordered idempotent `e`.
    IdempotentSeInES,
    /// For all `a` and ordered idempotents `e` there is `x` with `ea ≤ ax`.
    IdempotentShift,
    /// For all `a, b` there is `x` with `ba ≤ ax`.
    Shift,
    /// `L ⊆ R`.
    LInR,
    /// `a ∈ (a²Sa]` for every `a`.
    SquareSandwich,
    /// `ef ∈ (feSef]` for all ordered idempotents `e, f`.
    IdempotentSandwich,
}

impl RightCliffordCondition {
    pub const ALL: [RightCliffordCondition; 6] = [
        RightCliffordCondition::IdempotentSeInES,
        RightCliffordCondition::IdempotentShift,
        RightCliffordCondition::Shift,
        RightCliffordCondition::LInR,
        RightCliffordCondition::SquareSandwich,
        RightCliffordCondition::IdempotentSandwich,
    ];

    /// The four conditions equivalent to the definition.
    pub const EQUIVALENT: [RightCliffordCondition; 4] = [
        RightCliffordCondition::IdempotentSeInES,
        RightCliffordCondition::IdempotentShift,
        RightCliffordCondition::Shift,
        RightCliffordCondition::LInR,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RightCliffordCondition::IdempotentSeInES => "(Se] in (eS]",
            RightCliffordCondition::IdempotentShift => "ea <= ax",
            RightCliffordCondition::Shift => "ba <= ax",
            RightCliffordCondition::LInR => "L in R",
            RightCliffordCondition::SquareSandwich => "a in (a2Sa]",
            RightCliffordCondition::IdempotentSandwich => "ef in (feSef]",
        }
    }
}

/// Two sides of a stated equivalence, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePair {
    /// Whether the structure meets the hypothesis under which the equivalence is claimed.
    pub hypothesis_met: bool,
    pub lhs: Verdict,
    pub rhs: Verdict,
}

impl SidePair {
    pub fn agree(&self) -> bool {
        self.lhs.holds() == self.rhs.holds()
    }
}

/// Report keys in output order.
pub const CLASS_NAMES: [&str; 15] = [
    "regular",
    "completely_regular",
    "left_regular",
    "right_regular",
    "right_inverse",
    "left_inverse_dual",
    "right_clifford",
    "left_clifford",
    "group_like",
    "left_group_like",
    "right_group_like",
    "simple",
    "left_simple",
    "right_simple",
    "has_zero",
];

/// Every class verdict for one structure, keyed as in [`CLASS_NAMES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    entries: Vec<(&'static str, Verdict)>,
}

impl ClassificationReport {
    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.entries
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
    }

    /// Shorthand for `get(name).holds()`; unknown names are false.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(Verdict::holds)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Verdict)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn to_json(&self, s: &OrderedSemigroup) -> Value {
        let mut m = Map::new();
        for (k, v) in self.iter() {
            m.insert(k.to_string(), v.to_json(s));
        }
        Value::Object(m)
    }
}

/// Cached analysis of one ordered semigroup.
pub struct Classifier<'a> {
    s: &'a OrderedSemigroup,
    readings: Readings,
    limits: Limits,
    regular: Verdict,
    idem: ElementSet,
    left: Vec<ElementSet>,
    right: Vec<ElementSet>,
    two: Vec<ElementSet>,
    l: EquivalenceRelation,
    r: EquivalenceRelation,
    h: EquivalenceRelation,
    /// `(Sa]` per `a`.
    s_a: Vec<ElementSet>,
    /// `(aS]` per `a`.
    a_s: Vec<ElementSet>,
    inverses: Vec<ElementSet>,
}

impl<'a> Classifier<'a> {
    pub fn new(s: &'a OrderedSemigroup) -> Self {
        Self::with(s, Readings::default(), Limits::default())
    }

    pub fn with(s: &'a OrderedSemigroup, readings: Readings, limits: Limits) -> Self {
        let n = s.n();
        let all = s.carrier();
        let left = principal_ideals(s, Side::Left);
        let right = principal_ideals(s, Side::Right);
        let two = principal_ideals(s, Side::TwoSided);
        let l = EquivalenceRelation::from_labels(&left);
        let r = EquivalenceRelation::from_labels(&right);
        let h = l.intersection(&r);
        let s_a = (0..n)
            .map(|a| s.closed_chain(&[all, ElementSet::singleton(a)]))
            .collect();
        let a_s = (0..n)
            .map(|a| s.closed_chain(&[ElementSet::singleton(a), all]))
            .collect();
        let inverses = (0..n).map(|a| regularity::inverses(s, a)).collect();
        Classifier {
            s,
            readings,
            limits,
            regular: regularity::is_regular(s),
            idem: regularity::idempotents(s, readings.idempotent),
            left,
            right,
            two,
            l,
            r,
            h,
            s_a,
            a_s,
            inverses,
        }
    }

    pub fn semigroup(&self) -> &'a OrderedSemigroup {
        self.s
    }

    pub fn readings(&self) -> Readings {
        self.readings
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn idempotents(&self) -> ElementSet {
        self.idem
    }

    pub fn green(&self, kind: GreenKind) -> EquivalenceRelation {
        match kind {
            GreenKind::L => self.l.clone(),
            GreenKind::R => self.r.clone(),
            GreenKind::H => self.h.clone(),
            GreenKind::J => EquivalenceRelation::from_labels(&self.two),
        }
    }

    pub fn principal(&self, a: usize, side: Side) -> ElementSet {
        match side {
            Side::Left => self.left[a],
            Side::Right => self.right[a],
            Side::TwoSided => self.two[a],
        }
    }

    /// `(Sa]`
    pub fn left_translate(&self, a: usize) -> ElementSet {
        self.s_a[a]
    }

    /// `(aS]`
    pub fn right_translate(&self, a: usize) -> ElementSet {
        self.a_s[a]
    }

    pub fn inverses_of(&self, a: usize) -> ElementSet {
        self.inverses[a]
    }

    pub fn is_regular(&self) -> &Verdict {
        &self.regular
    }

    fn n(&self) -> usize {
        self.s.n()
    }

    fn one(a: usize) -> ElementSet {
        ElementSet::singleton(a)
    }

    /// `Err(NotApplicable)` when the structure is not regular.
    fn require_regular(&self) -> std::result::Result<(), Verdict> {
        match &self.regular {
            Verdict::Holds => Ok(()),
            Verdict::Fails(w) | Verdict::NotApplicable(w) => Err(Verdict::NotApplicable(
                Witness::new("not_regular", w.elements.clone()),
            )),
        }
    }

    /// Least pair of ordered idempotents failing `pred`.
    fn for_idempotent_pairs(
        &self,
        clause: &'static str,
        pred: impl Fn(usize, usize) -> bool,
    ) -> Verdict {
        for e in self.idem {
            for f in self.idem {
                if !pred(e, f) {
                    return Verdict::Fails(Witness::new(clause, [e, f]));
                }
            }
        }
        Verdict::Holds
    }

    /// Regular, and for every `a` the ordered idempotents `e` with `L(e) = L(a)`
    /// exist and are pairwise R-related.
    pub fn is_right_inverse(&self) -> Verdict {
        self.right_inverse_condition(RightInverseCondition::Definition)
    }

    pub fn right_inverse_condition(&self, cond: RightInverseCondition) -> Verdict {
        if let Err(v) = self.require_regular() {
            return v;
        }
        let s = self.s;
        let all = s.carrier();
        match cond {
            RightInverseCondition::Definition => {
                for a in 0..self.n() {
                    let generators: ElementSet = self
                        .idem
                        .iter()
                        .filter(|&e| self.left[e] == self.left[a])
                        .collect();
                    if generators.is_empty() {
                        return Verdict::Fails(Witness::new("no_idempotent_generator", [a]));
                    }
                    for e in generators {
                        if let Some(f) = generators.iter().find(|&f| !self.r.related(e, f)) {
                            return Verdict::Fails(Witness::new(
                                "generators_not_r_related",
                                [e, f],
                            ));
                        }
                    }
                }
                Verdict::Holds
            }
            RightInverseCondition::InversesRRelated => {
                for a in 0..self.n() {
                    let inv = self.inverses[a];
                    for x in inv {
                        if let Some(y) = inv.iter().find(|&y| !self.r.related(x, y)) {
                            return Verdict::Fails(Witness::new(
                                "inverses_not_r_related",
                                [a, x, y],
                            ));
                        }
                    }
                }
                Verdict::Holds
            }
            RightInverseCondition::ProductInFSeSf => {
                self.for_idempotent_pairs("ef_not_in_fSeSf", |e, f| {
                    let (e1, f1) = (Self::one(e), Self::one(f));
                    s.closed_chain(&[f1, all, e1, all, f1])
                        .contains(s.mul(e, f))
                })
            }
            RightInverseCondition::PrincipalRightMeet => self
                .for_idempotent_pairs("eS_meet_fS_differs_from_efS", |e, f| {
                    self.a_s[e].intersection(self.a_s[f]) == self.a_s[s.mul(e, f)]
                }),
            RightInverseCondition::InverseInES => {
                for e in self.idem {
                    for x in self.s_a[e] {
                        if let Some(x1) = self.inverses[x]
                            .iter()
                            .find(|&x1| !self.a_s[e].contains(x1))
                        {
                            return Verdict::Fails(Witness::new("inverse_outside_eS", [e, x, x1]));
                        }
                    }
                }
                Verdict::Holds
            }
            RightInverseCondition::LImpliesH => self
                .for_idempotent_pairs("l_related_not_h_related", |e, f| {
                    !self.l.related(e, f) || self.h.related(e, f)
                }),
        }
    }

    /// Right: `(Sa] ⊆ (aS]` for all `a`; left: the reverse inclusion; two-sided: both.
    pub fn is_clifford(&self, side: Side) -> Verdict {
        if let Err(v) = self.require_regular() {
            return v;
        }
        for a in 0..self.n() {
            if matches!(side, Side::Right | Side::TwoSided) {
                if let Some(x) = self.s_a[a].difference(self.a_s[a]).first() {
                    return Verdict::Fails(Witness::new("Sa_not_in_aS", [a, x]));
                }
            }
            if matches!(side, Side::Left | Side::TwoSided) {
                if let Some(x) = self.a_s[a].difference(self.s_a[a]).first() {
                    return Verdict::Fails(Witness::new("aS_not_in_Sa", [a, x]));
                }
            }
        }
        Verdict::Holds
    }

    pub fn right_clifford_condition(&self, cond: RightCliffordCondition) -> Verdict {
        if let Err(v) = self.require_regular() {
            return v;
        }
        let s = self.s;
        let n = self.n();
        let all = s.carrier();
        match cond {
            RightCliffordCondition::IdempotentSeInES => {
                for e in self.idem {
                    if let Some(x) = self.s_a[e].difference(self.a_s[e]).first() {
                        return Verdict::Fails(Witness::new("Se_not_in_eS", [e, x]));
                    }
                }
                Verdict::Holds
            }
            // ∃x: ea ≤ ax  ⟺  ea ∈ (aS]
            RightCliffordCondition::IdempotentShift => {
                for a in 0..n {
                    if let Some(e) = self
                        .idem
                        .iter()
                        .find(|&e| !self.a_s[a].contains(s.mul(e, a)))
                    {
                        return Verdict::Fails(Witness::new("no_x_with_ea_le_ax", [a, e]));
                    }
                }
                Verdict::Holds
            }
            RightCliffordCondition::Shift => for_all_pairs(n, "no_x_with_ba_le_ax", |a, b| {
                self.a_s[a].contains(s.mul(b, a))
            }),
            RightCliffordCondition::LInR => match self.l.first_pair_outside(&self.r) {
                None => Verdict::Holds,
                Some((a, b)) => Verdict::Fails(Witness::new("l_related_not_r_related", [a, b])),
            },
            RightCliffordCondition::SquareSandwich => for_all(n, "a_not_in_a2Sa", |a| {
                s.closed_chain(&[Self::one(s.mul(a, a)), all, Self::one(a)])
                    .contains(a)
            }),
            RightCliffordCondition::IdempotentSandwich => {
                self.for_idempotent_pairs("ef_not_in_feSef", |e, f| {
                    let fe = Self::one(s.mul(f, e));
                    let ef = Self::one(s.mul(e, f));
                    s.closed_chain(&[fe, all, ef]).contains(s.mul(e, f))
                })
            }
        }
    }

    /// Left: `a ∈ (Sb]` for all `a, b`; right: `a ∈ (bS]`; two-sided: both.
    pub fn is_group_like(&self, side: Side) -> Verdict {
        if let Err(v) = self.require_regular() {
            return v;
        }
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if matches!(side, Side::Left | Side::TwoSided) && !self.s_a[b].contains(a) {
                    return Verdict::Fails(Witness::new("a_not_in_Sb", [a, b]));
                }
                if matches!(side, Side::Right | Side::TwoSided) && !self.a_s[b].contains(a) {
                    return Verdict::Fails(Witness::new("a_not_in_bS", [a, b]));
                }
            }
        }
        Verdict::Holds
    }

    /// No proper side-ideal, i.e. every principal side-ideal is the whole carrier.
    pub fn is_simple(&self, side: Side) -> Verdict {
        let all = self.s.carrier();
        for_all(self.n(), "proper_principal_ideal", |a| {
            self.principal(a, side) == all
        })
    }

    /// Any two ordered idempotents are `kind`-related.
    pub fn idempotents_related(&self, kind: GreenKind) -> Verdict {
        if let Err(v) = self.require_regular() {
            return v;
        }
        let rel = self.green(kind);
        self.for_idempotent_pairs("idempotents_not_related", |e, f| rel.related(e, f))
    }

    /// Left side: `e` and `f` H-commute; right side: `(Se] ∩ (Sf] = (Sef]`.
    pub fn h_commutative_corollary(&self, e: usize, f: usize) -> Result<SidePair> {
        for x in [e, f] {
            if !self.idem.contains(x) {
                return Err(Error::NotIdempotent(self.s.name(x).to_string()));
            }
        }
        let s = self.s;
        let (ef, fe) = (s.mul(e, f), s.mul(f, e));
        let commute = match self.readings.h_commutation {
            HCommutation::HRelated => self.h.related(ef, fe),
            HCommutation::Equal => ef == fe,
        };
        let lhs = if commute {
            Verdict::Holds
        } else {
            Verdict::Fails(Witness::new("not_h_commutative", [e, f]))
        };
        let meet = self.s_a[e].intersection(self.s_a[f]) == self.s_a[ef];
        let rhs = if meet {
            Verdict::Holds
        } else {
            Verdict::Fails(Witness::new("Se_meet_Sf_differs_from_Sef", [e, f]))
        };
        Ok(SidePair {
            hypothesis_met: self.is_right_inverse().holds(),
            lhs,
            rhs,
        })
    }

    /// Left side: any two inverses of an element are L-related; right side:
    /// `ef ∈ (eSfSe]` for all (or some) ordered idempotents `e, f`.
    pub fn left_related_inverses_condition(&self, quantifier: Quantifier) -> SidePair {
        if let Err(v) = self.require_regular() {
            return SidePair {
                hypothesis_met: false,
                lhs: v.clone(),
                rhs: v,
            };
        }
        let s = self.s;
        let all = s.carrier();
        let mut lhs = Verdict::Holds;
        'outer: for a in 0..self.n() {
            let inv = self.inverses[a];
            for x in inv {
                if let Some(y) = inv.iter().find(|&y| !self.l.related(x, y)) {
                    lhs = Verdict::Fails(Witness::new("inverses_not_l_related", [a, x, y]));
                    break 'outer;
                }
            }
        }
        let member = |e: usize, f: usize| {
            let (e1, f1) = (Self::one(e), Self::one(f));
            s.closed_chain(&[e1, all, f1, all, e1])
                .contains(s.mul(e, f))
        };
        let rhs = match quantifier {
            Quantifier::ForAll => self.for_idempotent_pairs("ef_not_in_eSfSe", member),
            Quantifier::Exists => {
                let found = self
                    .idem
                    .iter()
                    .any(|e| self.idem.iter().any(|f| member(e, f)));
                if found {
                    Verdict::Holds
                } else {
                    Verdict::Fails(Witness::new("no_pair_with_ef_in_eSfSe", []))
                }
            }
        };
        SidePair {
            hypothesis_met: true,
            lhs,
            rhs,
        }
    }

    /// Every element lies in some subsemigroup that is group-like under the
    /// induced multiplication and order.
    pub fn is_union_of_group_like(&self) -> Result<Verdict> {
        let n = self.n();
        if n > self.limits.union_n {
            return Err(Error::SizeBound {
                what: "the subsemigroup scan",
                n,
                max: self.limits.union_n,
            });
        }
        let s = self.s;
        let mut covered = ElementSet::EMPTY;
        for bits in 1u128..(1u128 << n) {
            let t = ElementSet::from_bits(bits);
            if t.is_subset(covered) || !s.is_closed(t) {
                continue;
            }
            if induced_group_like(s, t) {
                covered = covered.union(t);
            }
        }
        Ok(match s.carrier().difference(covered).first() {
            None => Verdict::Holds,
            Some(a) => Verdict::Fails(Witness::new("in_no_group_like_subsemigroup", [a])),
        })
    }

    pub fn classify(&self) -> ClassificationReport {
        let mut entries: Vec<(&'static str, Verdict)> = Vec::with_capacity(CLASS_NAMES.len());
        for v in RegularityVariant::ALL {
            entries.push((v.name(), regularity::regularity_variant(self.s, v)));
        }
        entries.push(("right_inverse", self.is_right_inverse()));
        let dual = self.s.dual();
        let mirrored = Classifier::with(&dual, self.readings, self.limits).is_right_inverse();
        entries.push(("left_inverse_dual", mirrored));
        entries.push(("right_clifford", self.is_clifford(Side::Right)));
        entries.push(("left_clifford", self.is_clifford(Side::Left)));
        entries.push(("group_like", self.is_group_like(Side::TwoSided)));
        entries.push(("left_group_like", self.is_group_like(Side::Left)));
        entries.push(("right_group_like", self.is_group_like(Side::Right)));
        entries.push(("simple", self.is_simple(Side::TwoSided)));
        entries.push(("left_simple", self.is_simple(Side::Left)));
        entries.push(("right_simple", self.is_simple(Side::Right)));
        let zero = match self.s.zero() {
            Some(_) => Verdict::Holds,
            None => Verdict::Fails(Witness::new("no_zero", [])),
        };
        entries.push(("has_zero", zero));
        debug_assert!(entries.iter().map(|e| e.0).eq(CLASS_NAMES));
        ClassificationReport { entries }
    }
}

/// Group-like test on the subsemigroup `t` with closures taken inside `t`.
pub(crate) fn induced_group_like(s: &OrderedSemigroup, t: ElementSet) -> bool {
    t.iter().all(|b| {
        let tb = s
            .downward_closure(s.set_product(t, ElementSet::singleton(b)))
            .intersection(t);
        let bt = s
            .downward_closure(s.set_product(ElementSet::singleton(b), t))
            .intersection(t);
        t.is_subset(tb) && t.is_subset(bt)
    })
}

/// Classification with default readings and limits.
pub fn classify(s: &OrderedSemigroup) -> ClassificationReport {
    Classifier::new(s).classify()
}

pub fn is_right_inverse(s: &OrderedSemigroup) -> Verdict {
    Classifier::new(s).is_right_inverse()
}
