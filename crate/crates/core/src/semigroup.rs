//! Finite ordered semigroups and their validation.
//!
//! Elements are dense indices `0..n` with a parallel list of printable names.
//! The multiplication is stored row-major (`table[i * n + j]` is `i·j`, the row
//! being the left operand) and the order is stored as one down-set per element.

use std::fmt;

use serde::Serialize;

use crate::set::{ElementSet, MAX_ELEMENTS};

/// Which axiom (or input rule) a [`Diagnostic`] reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    Associativity,
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Compatibility,
    Parse,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagnosticKind::Associativity => "associativity",
            DiagnosticKind::Reflexivity => "reflexivity",
            DiagnosticKind::Antisymmetry => "antisymmetry",
            DiagnosticKind::Transitivity => "transitivity",
            DiagnosticKind::Compatibility => "compatibility",
            DiagnosticKind::Parse => "parse",
        };
        f.write_str(s)
    }
}

/// A violated axiom together with the element tuple that exhibits it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    /// Element indices; empty for most parse errors.
    pub witness: Vec<usize>,
    pub message: String,
    /// 1-based source line, for diagnostics raised while reading a file.
    pub line: Option<usize>,
}

impl Diagnostic {
    pub fn parse(message: impl Into<String>, line: Option<usize>) -> Self {
        Diagnostic {
            kind: DiagnosticKind::Parse,
            witness: Vec::new(),
            message: message.into(),
            line,
        }
    }

    fn axiom(kind: DiagnosticKind, witness: Vec<usize>, message: String) -> Self {
        Diagnostic {
            kind,
            witness,
            message,
            line: None,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        write!(f, "{}: {}", self.kind, self.message)
    }
}

/// The full list of problems found while building a structure.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", render(.0))]
pub struct Diagnostics(pub Vec<Diagnostic>);

fn render(ds: &[Diagnostic]) -> String {
    ds.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Diagnostics {
    pub fn kinds(&self) -> Vec<DiagnosticKind> {
        self.0.iter().map(|d| d.kind).collect()
    }

    pub fn first_of(&self, kind: DiagnosticKind) -> Option<&Diagnostic> {
        self.0.iter().find(|d| d.kind == kind)
    }
}

/// A finite semigroup with a compatible partial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    names: Vec<String>,
    table: Vec<usize>,
    /// `below[j]` is the set of all `i` with `i ≤ j`.
    below: Vec<ElementSet>,
}

/// `a, b, c, ...` for small carriers, `x0, x1, ...` otherwise.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

/// Builds a structure from a table and an order matrix with default element names.
pub fn validate(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<OrderedSemigroup, Diagnostics> {
    validate_named(default_names(table.len()), table, leq)
}

/// Checks every ordered-semigroup axiom and returns the structure when all hold.
///
/// Each violated axiom is reported once, with the first witness met in
/// lexicographic scan order.
pub fn validate_named(
    names: Vec<String>,
    table: &[Vec<usize>],
    leq: &[Vec<bool>],
) -> Result<OrderedSemigroup, Diagnostics> {
    let n = table.len();
    check_shape(&names, table, leq)?;

    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    let mul = |a: usize, b: usize| flat[a * n + b];
    let mut out = Vec::new();

    'assoc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = mul(mul(i, j), k);
                let rhs = mul(i, mul(j, k));
                if lhs != rhs {
                    out.push(Diagnostic::axiom(
                        DiagnosticKind::Associativity,
                        vec![i, j, k],
                        format!(
                            "({0}{1}){2} = {3} but {0}({1}{2}) = {4}",
                            names[i], names[j], names[k], names[lhs], names[rhs]
                        ),
                    ));
                    break 'assoc;
                }
            }
        }
    }

    if let Some(i) = (0..n).find(|&i| !leq[i][i]) {
        out.push(Diagnostic::axiom(
            DiagnosticKind::Reflexivity,
            vec![i],
            format!("{0} <= {0} is missing", names[i]),
        ));
    }

    'anti: for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                out.push(Diagnostic::axiom(
                    DiagnosticKind::Antisymmetry,
                    vec![i, j],
                    format!(
                        "{0} <= {1} and {1} <= {0} with {0} != {1}",
                        names[i], names[j]
                    ),
                ));
                break 'anti;
            }
        }
    }

    'trans: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if leq[i][j] && leq[j][k] && !leq[i][k] {
                    out.push(Diagnostic::axiom(
                        DiagnosticKind::Transitivity,
                        vec![i, j, k],
                        format!(
                            "{0} <= {1} and {1} <= {2} but not {0} <= {2}",
                            names[i], names[j], names[k]
                        ),
                    ));
                    break 'trans;
                }
            }
        }
    }

    'compat: for i in 0..n {
        for j in 0..n {
            if !leq[i][j] {
                continue;
            }
            for x in 0..n {
                let (l, r) = (mul(x, i), mul(x, j));
                if !leq[l][r] {
                    out.push(Diagnostic::axiom(
                        DiagnosticKind::Compatibility,
                        vec![i, j, x],
                        format!(
                            "{0} <= {1} but {2}{0} = {3} is not <= {2}{1} = {4}",
                            names[i], names[j], names[x], names[l], names[r]
                        ),
                    ));
                    break 'compat;
                }
                let (l, r) = (mul(i, x), mul(j, x));
                if !leq[l][r] {
                    out.push(Diagnostic::axiom(
                        DiagnosticKind::Compatibility,
                        vec![i, j, x],
                        format!(
                            "{0} <= {1} but {0}{2} = {3} is not <= {1}{2} = {4}",
                            names[i], names[j], names[x], names[l], names[r]
                        ),
                    ));
                    break 'compat;
                }
            }
        }
    }

    if !out.is_empty() {
        return Err(Diagnostics(out));
    }
    let below = (0..n)
        .map(|j| (0..n).filter(|&i| leq[i][j]).collect())
        .collect();
    Ok(OrderedSemigroup {
        names,
        table: flat,
        below,
    })
}

fn check_shape(
    names: &[String],
    table: &[Vec<usize>],
    leq: &[Vec<bool>],
) -> Result<(), Diagnostics> {
    let n = table.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Diagnostic::parse(
            "a structure needs at least one element",
            None,
        ));
    }
    if n > MAX_ELEMENTS {
        out.push(Diagnostic::parse(
            format!("{n} elements exceeds the hard limit of {MAX_ELEMENTS}"),
            None,
        ));
    }
    if names.len() != n {
        out.push(Diagnostic::parse(
            format!("{} names for {n} elements", names.len()),
            None,
        ));
    }
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '#') || name == "<=" {
            out.push(Diagnostic::parse(
                format!("invalid element name {name:?}"),
                None,
            ));
        }
        if names[..i].contains(name) {
            out.push(Diagnostic::parse(
                format!("duplicate element name {name:?}"),
                None,
            ));
        }
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            out.push(Diagnostic::parse(
                format!("table row {r} has {} entries, expected {n}", row.len()),
                None,
            ));
        } else if let Some(&v) = row.iter().find(|&&v| v >= n) {
            out.push(Diagnostic::parse(
                format!("table row {r} contains out-of-range index {v}"),
                None,
            ));
        }
    }
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        out.push(Diagnostic::parse("order matrix is not n x n", None));
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(Diagnostics(out))
    }
}

impl OrderedSemigroup {
    /// Same table with the discrete order (`a ≤ b` iff `a = b`).
    pub fn discrete(names: Vec<String>, table: &[Vec<usize>]) -> Result<Self, Diagnostics> {
        let n = table.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        validate_named(names, table, &leq)
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n() + b]
    }

    /// Product of three elements, `(a·b)·c`.
    #[inline]
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// All elements below `a`, including `a`.
    pub fn below(&self, a: usize) -> ElementSet {
        self.below[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n()).map(<[usize]>::to_vec).collect()
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.leq(i, j)).collect())
            .collect()
    }

    /// `(H] = {t : t ≤ h for some h ∈ H}`.
    pub fn downward_closure(&self, h: ElementSet) -> ElementSet {
        h.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.below[x]))
    }

    /// `AB = {ab : a ∈ A, b ∈ B}` with no closure applied.
    pub fn set_product(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Product of a chain of sets, associated to the left.
    pub fn chain_product(&self, factors: &[ElementSet]) -> ElementSet {
        let mut it = factors.iter();
        let first = *it.next().expect("chain_product needs at least one factor");
        it.fold(first, |acc, &f| self.set_product(acc, f))
    }

    /// Downward closure of a chain product, e.g. `(aSa]`.
    pub fn closed_chain(&self, factors: &[ElementSet]) -> ElementSet {
        self.downward_closure(self.chain_product(factors))
    }

    /// The opposite semigroup: same carrier and order, `a ∘ b = b·a`.
    pub fn dual(&self) -> Self {
        let n = self.n();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.mul(j, i);
            }
        }
        OrderedSemigroup {
            names: self.names.clone(),
            table,
            below: self.below.clone(),
        }
    }

    /// Whether the order is equality.
    pub fn is_discrete(&self) -> bool {
        (0..self.n()).all(|a| self.below[a] == ElementSet::singleton(a))
    }

    /// A zero is an element `z` with `zx = xz = z` for every `x`.
    pub fn zero(&self) -> Option<usize> {
        (0..self.n()).find(|&z| (0..self.n()).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    pub fn has_zero(&self) -> bool {
        self.zero().is_some()
    }

    pub fn is_closed(&self, t: ElementSet) -> bool {
        self.set_product(t, t).is_subset(t)
    }

    /// The ordered subsemigroup on `t`, with multiplication and order restricted.
    ///
    /// Returns `None` when `t` is empty or not closed under multiplication.
    /// Elements keep their relative order and names.
    pub fn induced(&self, t: ElementSet) -> Option<Self> {
        if t.is_empty() || !self.is_closed(t) {
            return None;
        }
        let members: Vec<usize> = t.iter().collect();
        let pos = |x: usize| members.iter().position(|&m| m == x).expect("closed subset");
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                table.push(pos(self.mul(a, b)));
            }
        }
        let below = members
            .iter()
            .map(|&b| self.below[b].intersection(t).iter().map(pos).collect())
            .collect();
        let names = members.iter().map(|&a| self.names[a].clone()).collect();
        Some(OrderedSemigroup {
            names,
            table,
            below,
        })
    }

    /// Renames element `i` to `perm[i]`; `perm` must be a permutation of `0..n`.
    /// Names travel with their elements.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length");
        let mut table = vec![0; n * n];
        let mut below = vec![ElementSet::EMPTY; n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            below[perm[i]] = self.below[i].iter().map(|x| perm[x]).collect();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        OrderedSemigroup {
            names,
            table,
            below,
        }
    }

    /// Replaces the element names; they must be distinct and printable.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, Diagnostics> {
        validate_named(names, &self.table_rows(), &self.leq_matrix())
    }

    pub fn format_set(&self, set: ElementSet) -> String {
        let inner: Vec<&str> = set.iter().map(|a| self.name(a)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_osg(self))
    }
}
