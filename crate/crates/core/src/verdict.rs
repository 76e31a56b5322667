//! Boolean outcomes with element-tuple certificates.

use serde_json::{json, Value};

use crate::semigroup::OrderedSemigroup;

/// The elements that certify an outcome, tagged with the clause they refer to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub clause: &'static str,
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn new(clause: &'static str, elements: impl Into<Vec<usize>>) -> Self {
        Witness {
            clause,
            elements: elements.into(),
        }
    }

    pub fn element_names<'a>(&self, s: &'a OrderedSemigroup) -> Vec<&'a str> {
        self.elements.iter().map(|&a| s.name(a)).collect()
    }

    /// `clause (x, y, ...)` in element names; just `clause` without elements.
    pub fn render(&self, s: &OrderedSemigroup) -> String {
        if self.elements.is_empty() {
            return self.clause.to_string();
        }
        format!("{} ({})", self.clause, self.element_names(s).join(", "))
    }

    pub fn to_json(&self, s: &OrderedSemigroup) -> Value {
        json!({ "clause": self.clause, "elements": self.element_names(s) })
    }
}

/// Outcome of a predicate on one structure.
///
/// `NotApplicable` is used when the predicate presupposes a hypothesis (usually
/// regularity) that the structure does not meet; its witness names the failure
/// of that hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    NotApplicable(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Verdict::NotApplicable(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) | Verdict::NotApplicable(w) => Some(w),
        }
    }

    pub fn from_result(r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Verdict::Holds,
            Err(w) => Verdict::Fails(w),
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::NotApplicable(_) => "not_applicable",
        }
    }

    /// `true`, `false`, or `n/a`, followed by the witness when there is one.
    pub fn render(&self, s: &OrderedSemigroup) -> String {
        match self {
            Verdict::Holds => "true".to_string(),
            Verdict::Fails(w) => format!("false  [{}]", w.render(s)),
            Verdict::NotApplicable(w) => format!("n/a  [{}]", w.render(s)),
        }
    }

    pub fn to_json(&self, s: &OrderedSemigroup) -> Value {
        let holds = match self {
            Verdict::Holds => Value::Bool(true),
            Verdict::Fails(_) => Value::Bool(false),
            Verdict::NotApplicable(_) => Value::Null,
        };
        json!({
            "holds": holds,
            "status": self.status(),
            "witness": self.witness().map_or(Value::Null, |w| w.to_json(s)),
        })
    }
}

/// First element of `0..n` failing `pred`, as a failing verdict with `clause`.
pub(crate) fn for_all(n: usize, clause: &'static str, pred: impl Fn(usize) -> bool) -> Verdict {
    match (0..n).find(|&a| !pred(a)) {
        None => Verdict::Holds,
        Some(a) => Verdict::Fails(Witness::new(clause, [a])),
    }
}

/// Lexicographically least pair from `0..n × 0..n` failing `pred`.
pub(crate) fn for_all_pairs(
    n: usize,
    clause: &'static str,
    pred: impl Fn(usize, usize) -> bool,
) -> Verdict {
    for a in 0..n {
        for b in 0..n {
            if !pred(a, b) {
                return Verdict::Fails(Witness::new(clause, [a, b]));
            }
        }
    }
    Verdict::Holds
}
