//! Boolean predicate expressions over classification names, e.g.
//! `regular and not (right_inverse or has_zero)`.

use std::collections::HashMap;

use crate::classify::{Classifier, CLASS_NAMES};
use crate::config::{Limits, Readings};
use crate::congruence::{self, ClassType};
use crate::error::{Error, Result};
use crate::ideals::{GreenKind, Side};
use crate::semigroup::OrderedSemigroup;

/// Predicates beyond the classification report.
pub const EXTRA_PREDICATES: [&str; 7] = [
    "r_congruence",
    "l_equals_h",
    "r_least_complete_semilattice_congruence",
    "complete_semilattice_of_right_group_like",
    "complete_semilattice_of_left_group_like",
    "complete_semilattice_of_group_like",
    "union_of_group_like",
];

pub fn is_known_predicate(name: &str) -> bool {
    CLASS_NAMES.contains(&name) || EXTRA_PREDICATES.contains(&name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    And,
    Or,
    Not,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            '!' => {
                chars.next();
                out.push(Token::Not);
            }
            '&' | '|' => {
                chars.next();
                if chars.peek() == Some(&c) {
                    chars.next();
                }
                out.push(if c == '&' { Token::And } else { Token::Or });
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(match word.as_str() {
                    "and" => Token::And,
                    "or" => Token::Or,
                    "not" => Token::Not,
                    _ => Token::Ident(word),
                });
            }
            other => return Err(Error::Expression(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Not) => Ok(Expr::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let e = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Expression("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                if !is_known_predicate(&name) {
                    return Err(Error::UnknownPredicate(name));
                }
                Ok(Expr::Atom(name))
            }
            Some(t) => Err(Error::Expression(format!("unexpected {t:?}"))),
            None => Err(Error::Expression("unexpected end of expression".into())),
        }
    }
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser {
            tokens: tokenize(text)?,
            pos: 0,
        };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Expression(format!(
                "trailing input after token {}",
                p.pos
            )));
        }
        Ok(e)
    }

    /// Evaluates against one structure; not-applicable verdicts count as false.
    pub fn eval(&self, s: &OrderedSemigroup, readings: Readings, limits: Limits) -> bool {
        let mut ctx = Context {
            c: Classifier::with(s, readings, limits),
            cache: HashMap::new(),
            report: None,
        };
        self.eval_in(&mut ctx)
    }

    fn eval_in(&self, ctx: &mut Context) -> bool {
        match self {
            Expr::Atom(name) => ctx.atom(name),
            Expr::Not(e) => !e.eval_in(ctx),
            Expr::And(a, b) => a.eval_in(ctx) && b.eval_in(ctx),
            Expr::Or(a, b) => a.eval_in(ctx) || b.eval_in(ctx),
        }
    }
}

struct Context<'a> {
    c: Classifier<'a>,
    cache: HashMap<String, bool>,
    report: Option<crate::classify::ClassificationReport>,
}

impl Context<'_> {
    fn atom(&mut self, name: &str) -> bool {
        if let Some(&v) = self.cache.get(name) {
            return v;
        }
        let s = self.c.semigroup();
        let v = match name {
            "r_congruence" => {
                congruence::is_congruence(s, &self.c.green(GreenKind::R), Side::TwoSided).holds()
            }
            "l_equals_h" => self.c.green(GreenKind::L) == self.c.green(GreenKind::H),
            "r_least_complete_semilattice_congruence" => {
                self.c.green(GreenKind::R) == congruence::least_complete_semilattice_congruence(s)
            }
            "complete_semilattice_of_right_group_like" => self.csl(ClassType::RightGroupLike),
            "complete_semilattice_of_left_group_like" => self.csl(ClassType::LeftGroupLike),
            "complete_semilattice_of_group_like" => self.csl(ClassType::GroupLike),
            "union_of_group_like" => self.c.is_union_of_group_like().is_ok_and(|v| v.holds()),
            _ => self
                .report
                .get_or_insert_with(|| self.c.classify())
                .holds(name),
        };
        self.cache.insert(name.to_string(), v);
        v
    }

    fn csl(&self, class: ClassType) -> bool {
        congruence::is_complete_semilattice_of_with(
            self.c.semigroup(),
            class,
            self.c.readings(),
            self.c.limits(),
        )
        .holds()
    }
}
