//! The `osg v1` text format.
//!
//! ```text
//! osg v1
//! elements: a e f
//! table:
//! a e f
//! a e f
//! a e f
//! order:
//! a <= e
//! a <= f
//! ```
//!
//! `#` starts a comment. The order section lists generating pairs; the
//! reflexive-transitive closure is taken before the poset axioms are checked.
//! The `order:` section may be omitted, which gives the discrete order.

use std::fmt::Write as _;

use crate::semigroup::{validate_named, Diagnostic, DiagnosticKind, Diagnostics, OrderedSemigroup};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Preamble,
    Elements,
    Table,
    Order,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

/// Parses and validates an `osg v1` document.
pub fn parse(text: &str) -> Result<OrderedSemigroup, Diagnostics> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            Line {
                number: i + 1,
                tokens: content.split_whitespace().collect(),
            }
        })
        .filter(|l| !l.tokens.is_empty())
        .collect();

    let err = |msg: String, line: usize| Diagnostics(vec![Diagnostic::parse(msg, Some(line))]);

    let mut it = lines.iter();
    match it.next() {
        Some(l) if l.tokens == ["osg", "v1"] => {}
        Some(l) => {
            return Err(err(
                format!("expected header `osg v1`, found `{}`", l.tokens.join(" ")),
                l.number,
            ))
        }
        None => return Err(Diagnostics(vec![Diagnostic::parse("empty document", None)])),
    }

    let mut section = Section::Preamble;
    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<&Line> = Vec::new();
    let mut pairs: Vec<&Line> = Vec::new();
    let mut seen_table = false;
    let mut seen_order = false;

    for line in it {
        let first = line.tokens[0];
        if let Some(header) = section_header(first) {
            match header {
                "elements" => {
                    if names.is_some() {
                        return Err(err("duplicate `elements:` section".into(), line.number));
                    }
                    let list: Vec<String> =
                        line.tokens[1..].iter().map(|s| s.to_string()).collect();
                    if list.is_empty() {
                        return Err(err("`elements:` lists no elements".into(), line.number));
                    }
                    names = Some(list);
                    section = Section::Elements;
                }
                "table" => {
                    if names.is_none() {
                        return Err(err("`table:` before `elements:`".into(), line.number));
                    }
                    if seen_table {
                        return Err(err("duplicate `table:` section".into(), line.number));
                    }
                    if line.tokens.len() > 1 {
                        return Err(err(
                            "table rows go on the lines after `table:`".into(),
                            line.number,
                        ));
                    }
                    seen_table = true;
                    section = Section::Table;
                }
                "order" => {
                    if !seen_table {
                        return Err(err("`order:` before `table:`".into(), line.number));
                    }
                    if seen_order {
                        return Err(err("duplicate `order:` section".into(), line.number));
                    }
                    if line.tokens.len() > 1 {
                        return Err(err(
                            "order pairs go on the lines after `order:`".into(),
                            line.number,
                        ));
                    }
                    seen_order = true;
                    section = Section::Order;
                }
                other => return Err(err(format!("unknown section `{other}:`"), line.number)),
            }
            continue;
        }
        match section {
            Section::Table => rows.push(line),
            Section::Order => pairs.push(line),
            Section::Preamble | Section::Elements => {
                return Err(err(
                    format!("unexpected line `{}`", line.tokens.join(" ")),
                    line.number,
                ))
            }
        }
    }

    let names = names
        .ok_or_else(|| Diagnostics(vec![Diagnostic::parse("missing `elements:` section", None)]))?;
    if !seen_table {
        return Err(Diagnostics(vec![Diagnostic::parse(
            "missing `table:` section",
            None,
        )]));
    }
    let n = names.len();
    let index = |name: &str| names.iter().position(|x| x == name);

    let mut diags = Vec::new();
    for (i, name) in names.iter().enumerate() {
        if name.ends_with(':') || name == "<=" {
            diags.push(Diagnostic::parse(
                format!("invalid element name `{name}`"),
                None,
            ));
        }
        if names[..i].contains(name) {
            diags.push(Diagnostic::parse(
                format!("duplicate element name `{name}`"),
                None,
            ));
        }
    }
    if rows.len() != n {
        diags.push(Diagnostic::parse(
            format!("table has {} rows, expected {n}", rows.len()),
            rows.last().map(|l| l.number),
        ));
    }

    let mut table = vec![vec![0usize; n]; n];
    for (r, line) in rows.iter().enumerate().take(n) {
        if line.tokens.len() != n {
            diags.push(Diagnostic::parse(
                format!("table row has {} entries, expected {n}", line.tokens.len()),
                Some(line.number),
            ));
            continue;
        }
        for (c, tok) in line.tokens.iter().enumerate() {
            match index(tok) {
                Some(v) => table[r][c] = v,
                None => diags.push(Diagnostic::parse(
                    format!("unknown element `{tok}`"),
                    Some(line.number),
                )),
            }
        }
    }

    let mut leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    let mut pair_line = std::collections::HashMap::new();
    for line in &pairs {
        match line.tokens[..] {
            [a, "<=", b] => match (index(a), index(b)) {
                (Some(i), Some(j)) => {
                    leq[i][j] = true;
                    pair_line.entry((i, j)).or_insert(line.number);
                }
                (ia, _) => {
                    let bad = if ia.is_none() { a } else { b };
                    diags.push(Diagnostic::parse(
                        format!("unknown element `{bad}`"),
                        Some(line.number),
                    ));
                }
            },
            _ => diags.push(Diagnostic::parse(
                format!(
                    "expected `<name> <= <name>`, found `{}`",
                    line.tokens.join(" ")
                ),
                Some(line.number),
            )),
        }
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Warshall.
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                let through = leq[k].clone();
                for (x, y) in leq[i].iter_mut().zip(through) {
                    *x |= y;
                }
            }
        }
    }
    validate_named(names, &table, &leq).map_err(|mut d| {
        for x in &mut d.0 {
            x.line = match (x.kind, &x.witness[..]) {
                (DiagnosticKind::Associativity, &[i, ..]) => rows.get(i).map(|l| l.number),
                (DiagnosticKind::Antisymmetry, &[a, b]) => {
                    pair_line.get(&(b, a)).or(pair_line.get(&(a, b))).copied()
                }
                (DiagnosticKind::Compatibility, &[a, b, _]) => pair_line.get(&(a, b)).copied(),
                _ => None,
            };
        }
        d
    })
}

fn section_header(token: &str) -> Option<&str> {
    let word = token.strip_suffix(':')?;
    (!word.is_empty() && word.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'))
        .then_some(word)
}

/// Renders a structure as `osg v1`, listing only the covering pairs of the order.
pub fn write_osg(s: &OrderedSemigroup) -> String {
    let n = s.n();
    let width = s
        .names()
        .iter()
        .map(|x| x.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::from("osg v1\n");
    let _ = writeln!(out, "elements: {}", s.names().join(" "));
    out.push_str("table:\n");
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| format!("{:<width$}", s.name(s.mul(i, j))))
            .collect();
        let _ = writeln!(out, "{}", row.join(" ").trim_end());
    }
    let covers = covering_pairs(s);
    if !covers.is_empty() {
        out.push_str("order:\n");
        for (a, b) in covers {
            let _ = writeln!(out, "{} <= {}", s.name(a), s.name(b));
        }
    }
    out
}

/// Pairs `a < b` with nothing strictly between them.
pub fn covering_pairs(s: &OrderedSemigroup) -> Vec<(usize, usize)> {
    let n = s.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b
                && s.leq(a, b)
                && !(0..n).any(|c| c != a && c != b && s.leq(a, c) && s.leq(c, b))
            {
                out.push((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::DiagnosticKind;

    const BOTTOMED: &str = "osg v1\n# right-zero with a bottom\nelements: a e f\ntable:\na e f\na e f\na e f\norder:\na <= e\na <= f\n";

    #[test]
    fn parses_right_zero_example() {
        let s = parse(BOTTOMED).unwrap();
        assert_eq!(s.n(), 3);
        assert!(s.leq(0, 1) && s.leq(0, 2) && s.leq(1, 1) && !s.leq(1, 0));
        assert_eq!(s.mul(1, 0), 0);
    }

    #[test]
    fn single_element_without_order() {
        let s = parse("osg v1\nelements: x\ntable:\nx\n").unwrap();
        assert_eq!(s.n(), 1);
        assert!(s.leq(0, 0));
    }

    #[test]
    fn cyclic_order_is_antisymmetry_error() {
        let text = "osg v1\nelements: e f\ntable:\ne f\ne f\norder:\ne <= f\nf <= e\n";
        let err = parse(text).unwrap_err();
        let d = err.first_of(DiagnosticKind::Antisymmetry).unwrap();
        assert_eq!(d.witness, vec![0, 1]);
        assert_eq!(d.line, Some(8));
    }

    #[test]
    fn order_is_closed_transitively() {
        let text = "osg v1\nelements: z a b\ntable:\nz z z\nz z z\nz z z\norder:\nz <= a\na <= b\n";
        let s = parse(text).unwrap();
        assert!(s.leq(0, 2));
    }

    #[test]
    fn reports_line_numbers() {
        let text = "osg v1\nelements: a b\ntable:\na b\na\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.0[0].line, Some(5));
        let err = parse("osg v1\nelements: a\ntable:\nq\n").unwrap_err();
        assert!(err.0[0].message.contains("unknown element"));
        assert_eq!(err.0[0].line, Some(4));
    }

    #[test]
    fn rejects_unknown_sections_and_bad_header() {
        assert!(parse("osg v2\nelements: a\ntable:\na\n").is_err());
        let err = parse("osg v1\nelements: a\ntable:\na\nnotes:\n").unwrap_err();
        assert!(err.0[0].message.contains("unknown section"));
        assert!(parse("").is_err());
        assert!(parse("osg v1\nelements: a a\ntable:\na a\na a\n").is_err());
    }

    #[test]
    fn write_then_parse_is_identity() {
        let s = parse(BOTTOMED).unwrap();
        let text = write_osg(&s);
        assert!(text.contains("a <= e"));
        assert_eq!(parse(&text).unwrap(), s);
    }
}
