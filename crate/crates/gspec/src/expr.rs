//! Species-expression parser and evaluator.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := product (('+' | '-') product)*
//! product := postfix (('*' | 'box') postfix)*
//! postfix := atom ('(' expr ')')*              -- plethystic application
//! atom    := INT | NAME | '(' expr ')'
//!          | 'restrict' '(' expr ',' INT ',' (INT | 'inf') ')'
//!          | 'quotient' '(' expr ')'
//!          | 'let' NAME '=' expr 'in' expr     -- recursive definition
//! ```
//!
//! Named built-ins come from the species library ("E", "X", "L", "L_rev",
//! "graph", ...). Every value is a group cycle index series; plain species
//! ride along over the one-element group and are lifted automatically when
//! combined with an equivariant operand.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use gamma_species::algebra::rational;
use gamma_species::gamma::GroupCycleIndexSeries;
use gamma_species::library;
use gamma_species::perm::FiniteGroup;
use gamma_species::series::CycleIndexSeries;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(u32),
    Name(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Compose(Box<Expr>, Box<Expr>),
    Functorial(Box<Expr>, Box<Expr>),
    Restrict(Box<Expr>, u32, Option<u32>),
    Quotient(Box<Expr>),
    Let(String, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u32),
    Name(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    Eq,
    Let,
    In,
    Box_,
    Restrict,
    Quotient,
    Inf,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            '=' => {
                toks.push((i, Tok::Eq));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value: u32 = text.parse().map_err(|_| ParseError {
                    position: start,
                    message: format!("integer literal `{text}` out of range"),
                })?;
                toks.push((start, Tok::Int(value)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let b = bytes[i] as char;
                    if b.is_ascii_alphanumeric() || b == '_' || b == ':' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &input[start..i];
                let tok = match word {
                    "let" => Tok::Let,
                    "in" => Tok::In,
                    "box" => Tok::Box_,
                    "restrict" => Tok::Restrict,
                    "quotient" => Tok::Quotient,
                    "inf" => Tok::Inf,
                    _ => Tok::Name(word.to_string()),
                };
                toks.push((start, tok));
            }
            other => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.input_len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let position = self.here();
        match self.bump() {
            Some(t) if *t == tok => Ok(()),
            other => Err(ParseError {
                position,
                message: format!("expected {what}, found {}", describe(other)),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.parse_product()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.parse_product()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_postfix()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.parse_postfix()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Box_) => {
                    self.bump();
                    let rhs = self.parse_postfix()?;
                    lhs = Expr::Functorial(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_postfix(&mut self) -> Result<Expr, ParseError> {
        let mut value = self.parse_atom()?;
        while let Some(Tok::LParen) = self.peek() {
            self.bump();
            let arg = self.parse_expr()?;
            self.expect(Tok::RParen, "`)` closing the composition")?;
            value = Expr::Compose(Box::new(value), Box::new(arg));
        }
        Ok(value)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let position = self.here();
        match self.bump().cloned() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::Name(name)) => Ok(Expr::Name(name)),
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Restrict) => {
                self.expect(Tok::LParen, "`(` after `restrict`")?;
                let inner = self.parse_expr()?;
                self.expect(Tok::Comma, "`,` after the restricted series")?;
                let lo = self.parse_int()?;
                self.expect(Tok::Comma, "`,` before the upper bound")?;
                let hi = match self.peek() {
                    Some(Tok::Inf) => {
                        self.bump();
                        None
                    }
                    _ => Some(self.parse_int()?),
                };
                self.expect(Tok::RParen, "`)` closing `restrict`")?;
                if let Some(h) = hi {
                    if lo > h {
                        return Err(ParseError {
                            position,
                            message: format!("restrict window [{lo},{h}) is inverted"),
                        });
                    }
                }
                Ok(Expr::Restrict(Box::new(inner), lo, hi))
            }
            Some(Tok::Quotient) => {
                self.expect(Tok::LParen, "`(` after `quotient`")?;
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "`)` closing `quotient`")?;
                Ok(Expr::Quotient(Box::new(inner)))
            }
            Some(Tok::Let) => {
                let name_pos = self.here();
                let name = match self.bump().cloned() {
                    Some(Tok::Name(n)) => n,
                    other => {
                        return Err(ParseError {
                            position: name_pos,
                            message: format!(
                                "expected a name after `let`, found {}",
                                describe(other.as_ref())
                            ),
                        })
                    }
                };
                self.expect(Tok::Eq, "`=` after the let-bound name")?;
                let body = self.parse_expr()?;
                self.expect(Tok::In, "`in`")?;
                let result = self.parse_expr()?;
                Ok(Expr::Let(name, Box::new(body), Box::new(result)))
            }
            other => Err(ParseError {
                position,
                message: format!(
                    "expected a species expression, found {}",
                    describe(other.as_ref())
                ),
            }),
        }
    }

    fn parse_int(&mut self) -> Result<u32, ParseError> {
        let position = self.here();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(*v),
            other => Err(ParseError {
                position,
                message: format!("expected an integer, found {}", describe(other)),
            }),
        }
    }
}

fn describe(tok: Option<&Tok>) -> String {
    match tok {
        None => "end of input".to_string(),
        Some(Tok::Int(v)) => format!("integer `{v}`"),
        Some(Tok::Name(n)) => format!("name `{n}`"),
        Some(Tok::Plus) => "`+`".into(),
        Some(Tok::Minus) => "`-`".into(),
        Some(Tok::Star) => "`*`".into(),
        Some(Tok::LParen) => "`(`".into(),
        Some(Tok::RParen) => "`)`".into(),
        Some(Tok::Comma) => "`,`".into(),
        Some(Tok::Eq) => "`=`".into(),
        Some(Tok::Let) => "`let`".into(),
        Some(Tok::In) => "`in`".into(),
        Some(Tok::Box_) => "`box`".into(),
        Some(Tok::Restrict) => "`restrict`".into(),
        Some(Tok::Quotient) => "`quotient`".into(),
        Some(Tok::Inf) => "`inf`".into(),
    }
}

/// Parse a species expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        input_len: input.len(),
    };
    let expr = parser.parse_expr()?;
    if parser.pos != toks.len() {
        return Err(ParseError {
            position: parser.here(),
            message: format!("trailing input starting with {}", describe(parser.peek())),
        });
    }
    Ok(expr)
}

/// Determine the ambient group of an expression: the common group of every
/// equivariant built-in mentioned (the one-element group when there is
/// none). Mixing distinct nontrivial groups is an error.
fn infer_group(
    expr: &Expr,
    bound: &mut HashSet<String>,
    found: &mut Option<Arc<FiniteGroup>>,
) -> Result<(), String> {
    match expr {
        Expr::Int(_) => Ok(()),
        Expr::Name(name) => {
            if bound.contains(name) {
                return Ok(());
            }
            let value =
                library::by_name(name).ok_or_else(|| format!("unknown species `{name}`"))?;
            let group = value.group().clone();
            if group.order() > 1 {
                match found {
                    None => *found = Some(group),
                    Some(existing) => {
                        if !existing.same_group(&group) {
                            return Err(format!(
                                "species `{name}` acts under a different group (degree {}) than earlier operands (degree {})",
                                group.degree(),
                                existing.degree()
                            ));
                        }
                    }
                }
            }
            Ok(())
        }
        Expr::Add(a, b)
        | Expr::Sub(a, b)
        | Expr::Mul(a, b)
        | Expr::Compose(a, b)
        | Expr::Functorial(a, b) => {
            infer_group(a, bound, found)?;
            infer_group(b, bound, found)
        }
        Expr::Restrict(a, _, _) | Expr::Quotient(a) => infer_group(a, bound, found),
        Expr::Let(name, body, result) => {
            let fresh = bound.insert(name.clone());
            infer_group(body, bound, found)?;
            infer_group(result, bound, found)?;
            if fresh {
                bound.remove(name);
            }
            Ok(())
        }
    }
}

/// What went wrong while evaluating: a usage-level problem (unknown name,
/// incompatible groups) or a computation error from the library.
#[derive(Debug)]
pub enum EvalError {
    Usage(String),
    Computation(gamma_species::Error),
}

impl From<gamma_species::Error> for EvalError {
    fn from(e: gamma_species::Error) -> Self {
        EvalError::Computation(e)
    }
}

fn lift_to(
    value: &GroupCycleIndexSeries,
    group: &Arc<FiniteGroup>,
) -> Result<GroupCycleIndexSeries, EvalError> {
    if value.group().same_group(group) {
        Ok(value.clone())
    } else if value.group().order() == 1 {
        Ok(GroupCycleIndexSeries::trivial_lift(
            value.identity_component(),
            group.clone(),
        ))
    } else {
        Err(EvalError::Usage(format!(
            "cannot mix a series over a group of degree {} into a context of degree {}",
            value.group().degree(),
            group.degree()
        )))
    }
}

fn lift_series(series: CycleIndexSeries, group: &Arc<FiniteGroup>) -> GroupCycleIndexSeries {
    GroupCycleIndexSeries::trivial_lift(&series, group.clone())
}

fn eval(
    expr: &Expr,
    group: &Arc<FiniteGroup>,
    env: &mut HashMap<String, GroupCycleIndexSeries>,
) -> Result<GroupCycleIndexSeries, EvalError> {
    match expr {
        Expr::Int(v) => Ok(lift_series(
            CycleIndexSeries::constant(rational(*v as i64)),
            group,
        )),
        Expr::Name(name) => {
            if let Some(value) = env.get(name) {
                return Ok(value.clone());
            }
            let value = library::by_name(name)
                .ok_or_else(|| EvalError::Usage(format!("unknown species `{name}`")))?;
            lift_to(&value, group)
        }
        Expr::Add(a, b) => {
            let (x, y) = (eval(a, group, env)?, eval(b, group, env)?);
            Ok(x.add(&y)?)
        }
        Expr::Sub(a, b) => {
            let (x, y) = (eval(a, group, env)?, eval(b, group, env)?);
            Ok(x.subtract(&y)?)
        }
        Expr::Mul(a, b) => {
            let (x, y) = (eval(a, group, env)?, eval(b, group, env)?);
            Ok(x.multiply(&y)?)
        }
        Expr::Compose(f, g) => {
            let (x, y) = (eval(f, group, env)?, eval(g, group, env)?);
            Ok(x.plethysm(&y)?)
        }
        Expr::Functorial(f, g) => {
            let (x, y) = (eval(f, group, env)?, eval(g, group, env)?);
            Ok(x.functorial(&y)?)
        }
        Expr::Restrict(a, lo, hi) => Ok(eval(a, group, env)?.restrict(*lo, *hi)),
        Expr::Quotient(a) => {
            let inner = eval(a, group, env)?;
            Ok(lift_series(inner.quotient(), group))
        }
        Expr::Let(name, body, result) => {
            let placeholder = GroupCycleIndexSeries::placeholder(group.clone(), name);
            let shadowed = env.insert(name.clone(), placeholder.clone());
            let body_value = eval(body, group, env)?;
            placeholder.define(&body_value)?;
            let out = eval(result, group, env);
            match shadowed {
                Some(prev) => {
                    env.insert(name.clone(), prev);
                }
                None => {
                    env.remove(name);
                }
            }
            out
        }
    }
}

/// Parse-free entry point: evaluate an already-parsed expression.
pub fn evaluate(expr: &Expr) -> Result<GroupCycleIndexSeries, EvalError> {
    let mut bound = HashSet::new();
    let mut found = None;
    infer_group(expr, &mut bound, &mut found).map_err(EvalError::Usage)?;
    let group = found.unwrap_or_else(FiniteGroup::trivial);
    let mut env = HashMap::new();
    eval(expr, &group, &mut env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates_simple_expressions() {
        let expr = parse("E_2 * E").unwrap();
        let value = evaluate(&expr).unwrap();
        assert_eq!(value.group().order(), 1);
        // C(4,2) labeled 2-subsets, one shape up to relabeling
        assert_eq!(
            value.identity_component().labeled_count(4).unwrap(),
            rational(6)
        );
        assert_eq!(
            value.identity_component().isotype_count(4).unwrap(),
            rational(1)
        );
    }

    #[test]
    fn let_recursion_gives_linear_orders() {
        let expr = parse("let B = 1 + X * B in B").unwrap();
        let value = evaluate(&expr).unwrap();
        let counts: Vec<String> = (0..=5)
            .map(|n| {
                value
                    .identity_component()
                    .labeled_count(n)
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(counts, vec!["1", "1", "2", "6", "24", "120"]);
    }

    #[test]
    fn groups_are_inferred_and_lifted() {
        // quotient lives over the inferred ambient group with the trivial
        // action, so it can recombine with other S_2 operands
        let expr = parse("quotient(L_rev)").unwrap();
        let value = evaluate(&expr).unwrap();
        assert_eq!(value.group().order(), 2);
        assert_eq!(
            value.identity_component().labeled_count(4).unwrap(),
            rational(12)
        );
        let tau = gamma_species::perm::GroupElement::from_cycles(2, &[&[1, 2]]).unwrap();
        assert!(value
            .component(&tau)
            .unwrap()
            .agrees_to_degree(value.identity_component(), 6)
            .unwrap());

        // trivial operands lift into the S_2 context
        let expr = parse("L_rev * E").unwrap();
        let value = evaluate(&expr).unwrap();
        assert_eq!(value.group().order(), 2);

        // no equivariant names: everything stays over the one-element group
        let expr = parse("E_2 (X)").unwrap();
        let value = evaluate(&expr).unwrap();
        assert_eq!(value.group().order(), 1);
    }

    #[test]
    fn group_conflicts_are_rejected() {
        let expr = parse("L_rev + L_k_interchange:S3").unwrap();
        assert!(matches!(evaluate(&expr), Err(EvalError::Usage(_))));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse("E + + X").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse("E X").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse("restrict(E, 3, 1)").unwrap_err();
        assert!(err.message.contains("inverted"));
        let err = parse("quotient(").unwrap_err();
        assert!(err.message.contains("end of input"));
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        let expr = parse("Zebra").unwrap();
        assert!(matches!(evaluate(&expr), Err(EvalError::Usage(_))));
    }
}
