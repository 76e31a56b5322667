//! Stated equivalences and implications, checked on individual structures and
//! over whole enumerated corpora.
//!
//! A theorem is evaluated as a list of clause groups under a hypothesis. An
//! equivalence group is consistent when its clauses agree; an all-hold group
//! when every clause holds. Disagreement is reported as a mismatch, never a
//! panic: a mismatch may just as well point at an interpretation choice (see
//! [`Readings`]) as at the claim itself.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::classify::{Classifier, RightCliffordCondition as Rc, RightInverseCondition as Ri};
use crate::config::{Limits, Readings};
use crate::congruence::{self, ClassType};
use crate::constructions;
use crate::enumerate::{labeled_form, Corpus, CorpusOptions};
use crate::error::{Error, Result};
use crate::format::write_osg;
use crate::ideals::{GreenKind, Side};
use crate::regularity::{self, RegularityVariant};
use crate::semigroup::OrderedSemigroup;
use crate::verdict::{Verdict, Witness};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal: $doc:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $(#[doc = $doc] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $doc,)*
                }
            }
        }
    };
}

theorem_ids! {
    RcEquiv => "T_RC_EQUIV": "regular: right Clifford <=> (Se] in (eS] <=> ea <= ax <=> ba <= ax <=> L in R",
    RcLemma => "L_RC_LEMMA": "right Clifford => a in (a2Sa] and ef in (feSef]",
    RcLeastCsc => "T_RC_LEAST_CSC": "regular: right Clifford <=> R is the least complete semilattice congruence",
    RcDecomp => "T_RC_DECOMP": "regular: right Clifford <=> complete semilattice of right group-like",
    RiIdemp => "T_RI_IDEMP": "regular: right inverse <=> (e L f => e H f for ordered idempotents)",
    GlIdemp => "T_GL_IDEMP": "regular: left (right) group-like <=> ordered idempotents pairwise L (R)-related",
    RiLgl => "C_RI_LGL": "right inverse and left group-like => group-like",
    LinvLrel => "T_LINV_LREL": "regular: inverses pairwise L-related <=> ef in (eSfSe] (quantifier configurable)",
    T5Equiv => "T5_EQUIV": "regular: right inverse <=> inverses R-related <=> ef in (fSeSf] <=> (eS]&(fS]=(efS] <=> x' in (eS]",
    HComm => "C_H_COMM": "right inverse: e, f H-commute <=> (Se]&(Sf]=(Sef]",
    PfPower => "T_PF_POWER": "plain F: power semigroup right inverse <=> F right inverse",
    RcIffRi => "T_RC_IFF_RI": "right Clifford <=> right inverse and a in (a2Sa] for all a",
    RiLcUnion => "T_RI_LC_UNION": "right inverse and left Clifford => union of group-like subsemigroups",
    RiCong => "T_RI_CONG": "right inverse: R congruence <=> L = H <=> complete semilattice of right group-like",
    CReg => "C_CREG": "right inverse and left regular: R congruence <=> L = H <=> complete semilattice of right group-like <=> completely regular",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremVerdict {
    Consistent,
    Mismatch,
    NotApplicable,
}

impl TheoremVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremVerdict::Consistent => "consistent",
            TheoremVerdict::Mismatch => "mismatch",
            TheoremVerdict::NotApplicable => "not_applicable",
        }
    }
}

/// One side of a theorem, with the verdict that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub label: &'static str,
    pub verdict: Verdict,
}

impl Clause {
    fn new(label: &'static str, verdict: Verdict) -> Self {
        Clause { label, verdict }
    }

    fn flag(label: &'static str, value: bool, witness: impl FnOnce() -> Witness) -> Self {
        let verdict = if value {
            Verdict::Holds
        } else {
            Verdict::Fails(witness())
        };
        Clause { label, verdict }
    }

    pub fn value(&self) -> bool {
        self.verdict.holds()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// All clauses have the same truth value.
    Equivalence,
    /// Every clause holds.
    AllHold,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseGroup {
    pub kind: GroupKind,
    pub clauses: Vec<Clause>,
}

impl ClauseGroup {
    fn equiv(clauses: Vec<Clause>) -> Self {
        ClauseGroup {
            kind: GroupKind::Equivalence,
            clauses,
        }
    }

    fn all(clauses: Vec<Clause>) -> Self {
        ClauseGroup {
            kind: GroupKind::AllHold,
            clauses,
        }
    }

    pub fn consistent(&self) -> bool {
        match self.kind {
            GroupKind::Equivalence => self
                .clauses
                .iter()
                .all(|c| c.value() == self.clauses[0].value()),
            GroupKind::AllHold => self.clauses.iter().all(Clause::value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremResult {
    pub id: TheoremId,
    pub hypothesis_met: bool,
    /// Why the hypothesis failed, or why the check was skipped.
    pub note: Option<String>,
    pub groups: Vec<ClauseGroup>,
    pub verdict: TheoremVerdict,
}

impl TheoremResult {
    fn skipped(id: TheoremId, note: impl Into<String>) -> Self {
        TheoremResult {
            id,
            hypothesis_met: false,
            note: Some(note.into()),
            groups: Vec::new(),
            verdict: TheoremVerdict::NotApplicable,
        }
    }

    fn evaluated(id: TheoremId, groups: Vec<ClauseGroup>) -> Self {
        let verdict = if groups.iter().all(ClauseGroup::consistent) {
            TheoremVerdict::Consistent
        } else {
            TheoremVerdict::Mismatch
        };
        TheoremResult {
            id,
            hypothesis_met: true,
            note: None,
            groups,
            verdict,
        }
    }

    /// First clause whose value breaks its group, if any.
    pub fn offending_clause(&self) -> Option<&Clause> {
        self.groups
            .iter()
            .filter(|g| !g.consistent())
            .find_map(|g| match g.kind {
                GroupKind::AllHold => g.clauses.iter().find(|c| !c.value()),
                GroupKind::Equivalence => g.clauses.iter().find(|c| !c.value()),
            })
    }

    pub fn to_json(&self, s: &OrderedSemigroup) -> Value {
        let groups: Vec<Value> = self
            .groups
            .iter()
            .map(|g| {
                let clauses: Vec<Value> = g
                    .clauses
                    .iter()
                    .map(|c| {
                        json!({
                            "label": c.label,
                            "value": c.value(),
                            "witness": c.verdict.witness().map_or(Value::Null, |w| w.to_json(s)),
                        })
                    })
                    .collect();
                json!({
                    "kind": match g.kind { GroupKind::Equivalence => "equivalence", GroupKind::AllHold => "all_hold" },
                    "clauses": clauses,
                })
            })
            .collect();
        json!({
            "verdict": self.verdict.as_str(),
            "hypothesis_met": self.hypothesis_met,
            "note": self.note,
            "groups": groups,
        })
    }
}

/// Per-theorem results for one structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub results: Vec<TheoremResult>,
}

impl TheoremReport {
    pub fn get(&self, id: TheoremId) -> Option<&TheoremResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn has_mismatch(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.verdict == TheoremVerdict::Mismatch)
    }

    pub fn to_json(&self, s: &OrderedSemigroup) -> Value {
        let mut m = Map::new();
        for r in &self.results {
            m.insert(r.id.as_str().to_string(), r.to_json(s));
        }
        Value::Object(m)
    }

    pub fn render(&self, s: &OrderedSemigroup) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!("{}: {}", r.id, r.verdict.as_str()));
            if let Some(note) = &r.note {
                out.push_str(&format!("  ({note})"));
            }
            out.push('\n');
            for g in &r.groups {
                for c in &g.clauses {
                    out.push_str(&format!("    {}: {}\n", c.label, c.verdict.render(s)));
                }
            }
        }
        out
    }
}

/// Evaluates every theorem in `ids` on one structure.
pub fn theorem_suite(
    s: &OrderedSemigroup,
    ids: &[TheoremId],
    readings: Readings,
    limits: Limits,
) -> TheoremReport {
    let c = Classifier::with(s, readings, limits);
    let mut ctx = Suite::new(&c);
    TheoremReport {
        results: ids.iter().map(|&id| ctx.evaluate(id)).collect(),
    }
}

/// All theorems, default readings and limits.
pub fn theorem_suite_default(s: &OrderedSemigroup) -> TheoremReport {
    theorem_suite(s, TheoremId::ALL, Readings::default(), Limits::default())
}

/// Lazily computed facts shared across theorems.
struct Suite<'c, 'a> {
    c: &'c Classifier<'a>,
    right_inverse: Option<Verdict>,
    right_clifford: Option<Verdict>,
    cong: Option<[Clause; 3]>,
}

impl<'c, 'a> Suite<'c, 'a> {
    fn new(c: &'c Classifier<'a>) -> Self {
        Suite {
            c,
            right_inverse: None,
            right_clifford: None,
            cong: None,
        }
    }

    fn s(&self) -> &'a OrderedSemigroup {
        self.c.semigroup()
    }

    fn regular(&self) -> bool {
        self.c.is_regular().holds()
    }

    fn right_inverse(&mut self) -> Verdict {
        let c = self.c;
        self.right_inverse
            .get_or_insert_with(|| c.is_right_inverse())
            .clone()
    }

    fn right_clifford(&mut self) -> Verdict {
        let c = self.c;
        self.right_clifford
            .get_or_insert_with(|| c.is_clifford(Side::Right))
            .clone()
    }

    /// R is a congruence, L = H, complete semilattice of right group-like.
    fn congruence_clauses(&mut self) -> [Clause; 3] {
        if let Some(cl) = &self.cong {
            return cl.clone();
        }
        let c = self.c;
        let s = self.s();
        let r = c.green(GreenKind::R);
        let (l, h) = (c.green(GreenKind::L), c.green(GreenKind::H));
        let cl = [
            Clause::new(
                "R is a congruence",
                congruence::is_congruence(s, &r, Side::TwoSided),
            ),
            Clause::flag("L = H", l == h, || {
                let (a, b) = l.first_pair_outside(&h).expect("H is contained in L");
                Witness::new("l_related_not_h_related", [a, b])
            }),
            Clause::new(
                "complete semilattice of right group-like",
                congruence::is_complete_semilattice_of_with(
                    s,
                    ClassType::RightGroupLike,
                    c.readings(),
                    c.limits(),
                ),
            ),
        ];
        self.cong = Some(cl.clone());
        cl
    }

    fn not_regular(&self, id: TheoremId) -> TheoremResult {
        TheoremResult::skipped(id, "not regular")
    }

    fn evaluate(&mut self, id: TheoremId) -> TheoremResult {
        let c = self.c;
        let s = self.s();
        match id {
            TheoremId::RcEquiv => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let mut clauses = vec![Clause::new("right Clifford", self.right_clifford())];
                clauses.extend(
                    Rc::EQUIVALENT
                        .iter()
                        .map(|&k| Clause::new(k.label(), c.right_clifford_condition(k))),
                );
                TheoremResult::evaluated(id, vec![ClauseGroup::equiv(clauses)])
            }
            TheoremId::RcLemma => {
                if !self.right_clifford().holds() {
                    return TheoremResult::skipped(id, "not right Clifford");
                }
                let clauses = [Rc::SquareSandwich, Rc::IdempotentSandwich]
                    .iter()
                    .map(|&k| Clause::new(k.label(), c.right_clifford_condition(k)))
                    .collect();
                TheoremResult::evaluated(id, vec![ClauseGroup::all(clauses)])
            }
            TheoremId::RcLeastCsc => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let r = c.green(GreenKind::R);
                let least = congruence::least_complete_semilattice_congruence(s);
                let eq = Clause::flag(
                    "R = least complete semilattice congruence",
                    r == least,
                    || {
                        let (a, b) = r
                            .first_pair_outside(&least)
                            .or_else(|| least.first_pair_outside(&r))
                            .expect("relations differ");
                        Witness::new("pair_in_exactly_one_relation", [a, b])
                    },
                );
                let group = ClauseGroup::equiv(vec![
                    Clause::new("right Clifford", self.right_clifford()),
                    eq,
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::RcDecomp => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let csl = self.congruence_clauses()[2].clone();
                let group = ClauseGroup::equiv(vec![
                    Clause::new("right Clifford", self.right_clifford()),
                    csl,
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::RiIdemp => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let group = ClauseGroup::equiv(vec![
                    Clause::new("right inverse", self.right_inverse()),
                    Clause::new(
                        Ri::LImpliesH.label(),
                        c.right_inverse_condition(Ri::LImpliesH),
                    ),
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::GlIdemp => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let left = ClauseGroup::equiv(vec![
                    Clause::new("left group-like", c.is_group_like(Side::Left)),
                    Clause::new(
                        "ordered idempotents L-related",
                        c.idempotents_related(GreenKind::L),
                    ),
                ]);
                let right = ClauseGroup::equiv(vec![
                    Clause::new("right group-like", c.is_group_like(Side::Right)),
                    Clause::new(
                        "ordered idempotents R-related",
                        c.idempotents_related(GreenKind::R),
                    ),
                ]);
                TheoremResult::evaluated(id, vec![left, right])
            }
            TheoremId::RiLgl => {
                if !(self.right_inverse().holds() && c.is_group_like(Side::Left).holds()) {
                    return TheoremResult::skipped(id, "not right inverse and left group-like");
                }
                let group = ClauseGroup::all(vec![Clause::new(
                    "group-like",
                    c.is_group_like(Side::TwoSided),
                )]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::LinvLrel => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let pair = c.left_related_inverses_condition(c.readings().linv_quantifier);
                let group = ClauseGroup::equiv(vec![
                    Clause::new("inverses pairwise L-related", pair.lhs),
                    Clause::new("ef in (eSfSe]", pair.rhs),
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::T5Equiv => {
                if !self.regular() {
                    return self.not_regular(id);
                }
                let clauses = Ri::ALL[..5]
                    .iter()
                    .map(|&k| Clause::new(k.label(), c.right_inverse_condition(k)))
                    .collect();
                TheoremResult::evaluated(id, vec![ClauseGroup::equiv(clauses)])
            }
            TheoremId::HComm => {
                if !self.right_inverse().holds() {
                    return TheoremResult::skipped(id, "not right inverse");
                }
                let mut forward = None;
                let mut backward = None;
                let idem = c.idempotents();
                for e in idem {
                    for f in idem {
                        let p = c
                            .h_commutative_corollary(e, f)
                            .expect("both are ordered idempotents");
                        if p.lhs.holds() && !p.rhs.holds() && forward.is_none() {
                            forward = Some([e, f]);
                        }
                        if p.rhs.holds() && !p.lhs.holds() && backward.is_none() {
                            backward = Some([e, f]);
                        }
                    }
                }
                let group = ClauseGroup::all(vec![
                    Clause::flag(
                        "H-commutative => (Se]&(Sf]=(Sef]",
                        forward.is_none(),
                        || {
                            Witness::new(
                                "h_commutative_but_meet_differs",
                                forward.unwrap_or_default(),
                            )
                        },
                    ),
                    Clause::flag(
                        "(Se]&(Sf]=(Sef] => H-commutative",
                        backward.is_none(),
                        || {
                            Witness::new(
                                "meet_equal_but_not_h_commutative",
                                backward.unwrap_or_default(),
                            )
                        },
                    ),
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::PfPower => {
                if !s.is_discrete() {
                    return TheoremResult::skipped(id, "order is not discrete");
                }
                let power = match constructions::power_semigroup(s, c.limits().max_n) {
                    Ok(p) => p,
                    Err(e) => return TheoremResult::skipped(id, e.to_string()),
                };
                let lifted = Classifier::with(&power, c.readings(), c.limits()).is_right_inverse();
                // Witness elements of the power semigroup do not index this structure.
                let lifted = match lifted {
                    Verdict::Holds => Verdict::Holds,
                    Verdict::Fails(w) | Verdict::NotApplicable(w) => {
                        Verdict::Fails(Witness::new(w.clause, []))
                    }
                };
                let group = ClauseGroup::equiv(vec![
                    Clause::new("power semigroup right inverse", lifted),
                    Clause::new("right inverse", self.right_inverse()),
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::RcIffRi => {
                let ri = self.right_inverse();
                let sandwich = c.right_clifford_condition(Rc::SquareSandwich);
                let rhs = match (&ri, &sandwich) {
                    (Verdict::Holds, Verdict::Holds) => Verdict::Holds,
                    (Verdict::Holds, other) | (other, _) => Verdict::Fails(
                        other
                            .witness()
                            .cloned()
                            .expect("non-holding verdicts carry witnesses"),
                    ),
                };
                let group = ClauseGroup::equiv(vec![
                    Clause::new("right Clifford", self.right_clifford()),
                    Clause::new("right inverse and a in (a2Sa]", rhs),
                ]);
                TheoremResult::evaluated(id, vec![group])
            }
            TheoremId::RiLcUnion => {
                if !(self.right_inverse().holds() && c.is_clifford(Side::Left).holds()) {
                    return TheoremResult::skipped(id, "not right inverse and left Clifford");
                }
                match c.is_union_of_group_like() {
                    Ok(v) => TheoremResult::evaluated(
                        id,
                        vec![ClauseGroup::all(vec![Clause::new(
                            "union of group-like",
                            v,
                        )])],
                    ),
                    Err(e) => TheoremResult::skipped(id, e.to_string()),
                }
            }
            TheoremId::RiCong => {
                if !self.right_inverse().holds() {
                    return TheoremResult::skipped(id, "not right inverse");
                }
                TheoremResult::evaluated(
                    id,
                    vec![ClauseGroup::equiv(self.congruence_clauses().to_vec())],
                )
            }
            TheoremId::CReg => {
                let left_regular =
                    regularity::regularity_variant(s, RegularityVariant::LeftRegular).holds();
                if !(self.right_inverse().holds() && left_regular) {
                    return TheoremResult::skipped(id, "not right inverse and left regular");
                }
                let mut clauses = self.congruence_clauses().to_vec();
                clauses.push(Clause::new(
                    "completely regular",
                    regularity::regularity_variant(s, RegularityVariant::CompletelyRegular),
                ));
                TheoremResult::evaluated(id, vec![ClauseGroup::equiv(clauses)])
            }
        }
    }
}

/// Inputs for [`corpus_verify`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub ids: Vec<TheoremId>,
    pub readings: Readings,
    pub limits: Limits,
    pub up_to_iso: bool,
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 3,
            ids: TheoremId::ALL.to_vec(),
            readings: Readings::default(),
            limits: Limits::default(),
            up_to_iso: false,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub consistent: usize,
    pub mismatch: usize,
    pub not_applicable: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: TheoremVerdict) {
        match v {
            TheoremVerdict::Consistent => self.consistent += 1,
            TheoremVerdict::Mismatch => self.mismatch += 1,
            TheoremVerdict::NotApplicable => self.not_applicable += 1,
        }
    }
}

/// A structure on which some theorem came out inconsistent.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub id: TheoremId,
    pub structure: OrderedSemigroup,
    pub result: TheoremResult,
}

/// Aggregate of [`corpus_verify`].
#[derive(Clone, Debug)]
pub struct CorpusSummary {
    pub n_max: usize,
    pub readings: Readings,
    pub structures: usize,
    pub counts: Vec<(TheoremId, VerdictCounts)>,
    /// In corpus order.
    pub mismatches: Vec<Mismatch>,
}

impl CorpusSummary {
    pub fn counts_for(&self, id: TheoremId) -> Option<&VerdictCounts> {
        self.counts.iter().find(|(t, _)| *t == id).map(|(_, c)| c)
    }

    pub fn mismatch_count(&self) -> usize {
        self.counts.iter().map(|(_, c)| c.mismatch).sum()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "structures: {} (orders 1..={}), readings: eidem={} linv-quant={} hcomm={}\n",
            self.structures,
            self.n_max,
            self.readings.idempotent,
            self.readings.linv_quantifier,
            self.readings.h_commutation
        );
        out.push_str(&format!(
            "{:<16} {:>10} {:>9} {:>15}\n",
            "theorem", "consistent", "mismatch", "not_applicable"
        ));
        for (id, c) in &self.counts {
            out.push_str(&format!(
                "{:<16} {:>10} {:>9} {:>15}\n",
                id.as_str(),
                c.consistent,
                c.mismatch,
                c.not_applicable
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut counts = Map::new();
        for (id, c) in &self.counts {
            counts.insert(
                id.as_str().to_string(),
                json!({ "consistent": c.consistent, "mismatch": c.mismatch, "not_applicable": c.not_applicable }),
            );
        }
        let mismatches: Vec<Value> = self
            .mismatches
            .iter()
            .map(|m| json!({ "theorem": m.id.as_str(), "file": mismatch_file_name(m), "result": m.result.to_json(&m.structure) }))
            .collect();
        json!({
            "n_max": self.n_max,
            "readings": {
                "eidem": self.readings.idempotent.to_string(),
                "linv_quant": self.readings.linv_quantifier.to_string(),
                "hcomm": self.readings.h_commutation.to_string(),
            },
            "structures": self.structures,
            "theorems": counts,
            "mismatches": mismatches,
        })
    }

    /// Writes every mismatching structure as an `osg v1` file into `dir`.
    pub fn write_mismatches(&self, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut paths = Vec::new();
        for m in &self.mismatches {
            let path = dir.join(mismatch_file_name(m));
            let text = format!("# {} mismatch\n{}", m.id, write_osg(&m.structure));
            std::fs::write(&path, text)?;
            paths.push(path);
        }
        Ok(paths)
    }
}

pub fn mismatch_file_name(m: &Mismatch) -> String {
    format!(
        "{}-{}.osg",
        m.id.as_str(),
        labeled_form(&m.structure).digest()
    )
}

/// Runs the suite over every ordered semigroup of order `1..=n_max`.
pub fn corpus_verify(opts: &VerifyOptions) -> Result<CorpusSummary> {
    let mut structures = Vec::new();
    for n in 1..=opts.n_max {
        let corpus = Corpus::build(&CorpusOptions {
            n,
            up_to_iso: opts.up_to_iso,
            allow_large: false,
            parallel: opts.parallel,
        })?;
        structures.extend(corpus.structures);
    }
    let run = |s: &OrderedSemigroup| theorem_suite(s, &opts.ids, opts.readings, opts.limits);
    let reports: Vec<TheoremReport> = if opts.parallel {
        structures.par_iter().map(run).collect()
    } else {
        structures.iter().map(run).collect()
    };
    let mut counts: Vec<(TheoremId, VerdictCounts)> = opts
        .ids
        .iter()
        .map(|&id| (id, VerdictCounts::default()))
        .collect();
    let mut mismatches = Vec::new();
    for (s, report) in structures.iter().zip(&reports) {
        for (slot, r) in counts.iter_mut().zip(&report.results) {
            slot.1.add(r.verdict);
            if r.verdict == TheoremVerdict::Mismatch {
                mismatches.push(Mismatch {
                    id: r.id,
                    structure: s.clone(),
                    result: r.clone(),
                });
            }
        }
    }
    Ok(CorpusSummary {
        n_max: opts.n_max,
        readings: opts.readings,
        structures: structures.len(),
        counts,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::tests::{bottomed_right_zero, leq_from_pairs};
    use crate::semigroup::validate;

    #[test]
    fn ids_round_trip() {
        for &id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(TheoremId::ALL.len(), 15);
        assert!("T_NOPE".parse::<TheoremId>().is_err());
    }

    #[test]
    fn example_is_consistent_except_h_commutation() {
        let report = theorem_suite_default(&bottomed_right_zero());
        for r in &report.results {
            if r.id != TheoremId::HComm {
                assert_ne!(r.verdict, TheoremVerdict::Mismatch, "{}", r.id);
            }
        }
        assert_eq!(
            report.get(TheoremId::T5Equiv).unwrap().verdict,
            TheoremVerdict::Consistent
        );
    }

    #[test]
    fn h_commutation_fails_on_example_under_both_readings() {
        // e·a = a and a·e = e: (Se]∩(Sa] = (Sa] = {a}, yet a and e are neither
        // equal nor H-related.
        for h in [
            crate::config::HCommutation::HRelated,
            crate::config::HCommutation::Equal,
        ] {
            let readings = Readings {
                h_commutation: h,
                ..Default::default()
            };
            let report = theorem_suite(
                &bottomed_right_zero(),
                &[TheoremId::HComm],
                readings,
                Limits::default(),
            );
            let r = &report.results[0];
            assert_eq!(r.verdict, TheoremVerdict::Mismatch);
            let w = r.offending_clause().unwrap().verdict.witness().unwrap();
            assert_eq!(
                (w.clause, &w.elements[..]),
                ("meet_equal_but_not_h_commutative", &[1, 0][..])
            );
        }
    }

    #[test]
    fn left_zero_all_false_together() {
        let lz = validate(&[vec![0, 0], vec![1, 1]], &leq_from_pairs(2, &[])).unwrap();
        let report = theorem_suite_default(&lz);
        for id in [TheoremId::T5Equiv, TheoremId::RiIdemp] {
            let r = report.get(id).unwrap();
            assert_eq!(r.verdict, TheoremVerdict::Consistent);
            assert!(r.groups[0].clauses.iter().all(|c| !c.value()));
        }
    }

    #[test]
    fn trivial_is_consistent() {
        let t = validate(&[vec![0]], &leq_from_pairs(1, &[])).unwrap();
        let report = theorem_suite_default(&t);
        assert!(
            report
                .results
                .iter()
                .all(|r| r.verdict == TheoremVerdict::Consistent),
            "{report:?}"
        );
    }

    #[test]
    fn exists_reading_mismatches_on_example() {
        let readings = Readings {
            linv_quantifier: crate::config::Quantifier::Exists,
            ..Default::default()
        };
        let report = theorem_suite(
            &bottomed_right_zero(),
            &[TheoremId::LinvLrel],
            readings,
            Limits::default(),
        );
        assert_eq!(report.results[0].verdict, TheoremVerdict::Mismatch);
    }
}
