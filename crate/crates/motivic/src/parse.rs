//! Text formats for classes and series.
//!
//! Class grammar: integer literals, the symbol `L`, operators `+ - * / ^`,
//! parentheses; `^` binds tighter than `*`, unary minus is allowed, whitespace
//! is insignificant. Series additionally allow the symbol `T` and a trailing
//! `O(T^k)` marker, which declares truncation order `k - 1` on input and is
//! always printed on output. `parse` and the `Display` implementations are
//! mutually inverse on canonical forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::class::MotivicClass;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

pub fn parse_class(text: &str) -> Result<MotivicClass> {
    let value = parse_value(text, SymbolSet::ClassOnly)?;
    debug_assert!(value.order.is_none(), "markers rejected in class mode");
    let mut class = MotivicClass::zero();
    for (t_exp, c) in value.terms {
        debug_assert_eq!(t_exp, 0);
        class = class.add(&c);
    }
    Ok(class)
}

/// Parses a series expression. The truncation order comes from an `O(T^k)`
/// marker when present, from `default_order` otherwise, and finally from the
/// largest `T` power in the text.
pub fn parse_series(text: &str, default_order: Option<usize>) -> Result<TruncatedSeries> {
    let value = parse_value(text, SymbolSet::WithSeriesVariable)?;
    let top = value.terms.keys().next_back().copied().unwrap_or(0);
    let order = value.order.or(default_order).unwrap_or(top);
    let mut series = TruncatedSeries::zero(order);
    for (t_exp, c) in value.terms {
        if t_exp <= order {
            series.set_coeff(t_exp, c);
        }
    }
    Ok(series)
}

#[derive(Clone, Copy, PartialEq)]
enum SymbolSet {
    ClassOnly,
    WithSeriesVariable,
}

/// A partially evaluated expression: a polynomial in `T` with class
/// coefficients, plus the declared order if an `O(T^k)` marker was absorbed.
struct Value {
    terms: BTreeMap<usize, MotivicClass>,
    order: Option<usize>,
}

impl Value {
    fn constant(c: MotivicClass) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        Self { terms, order: None }
    }

    fn t_monomial() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(1, MotivicClass::one());
        Self { terms, order: None }
    }

    fn marker(order: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            order: Some(order),
        }
    }

    fn as_class(&self) -> Option<MotivicClass> {
        if self.order.is_some() || self.terms.keys().any(|&e| e > 0) {
            return None;
        }
        Some(
            self.terms
                .get(&0)
                .cloned()
                .unwrap_or_else(MotivicClass::zero),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Lefschetz,
    SeriesVar,
    OrderMarker,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        let start = pos;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                let mut end = pos;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let literal = &text[pos..end];
                pos = end;
                Tok::Int(literal.parse().expect("digits parse"))
            }
            b'L' => {
                pos += 1;
                Tok::Lefschetz
            }
            b'T' => {
                pos += 1;
                Tok::SeriesVar
            }
            b'O' => {
                pos += 1;
                Tok::OrderMarker
            }
            b'+' => {
                pos += 1;
                Tok::Plus
            }
            b'-' => {
                pos += 1;
                Tok::Minus
            }
            b'*' => {
                pos += 1;
                Tok::Star
            }
            b'/' => {
                pos += 1;
                Tok::Slash
            }
            b'^' => {
                pos += 1;
                Tok::Caret
            }
            b'(' => {
                pos += 1;
                Tok::LParen
            }
            b')' => {
                pos += 1;
                Tok::RParen
            }
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!(
                        "unexpected character {:?}",
                        text[pos..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push(Token { tok, pos: start });
    }
    out.push(Token {
        tok: Tok::End,
        pos: bytes.len(),
    });
    Ok(out)
}

fn parse_value(text: &str, symbols: SymbolSet) -> Result<Value> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        symbols,
    };
    let value = parser.expression(0)?;
    let end = parser.peek();
    if end.tok != Tok::End {
        return Err(Error::Syntax {
            pos: end.pos,
            msg: "trailing input after expression".into(),
        });
    }
    Ok(value)
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    symbols: SymbolSet,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.index]
    }

    fn advance(&mut self) -> &Token {
        let token = &self.tokens[self.index];
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        token
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let found = self.advance();
        if found.tok == tok {
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: found.pos,
                msg: format!("expected {what}"),
            })
        }
    }

    fn expression(&mut self, min_binding: u8) -> Result<Value> {
        let mut lhs = self.prefix()?;
        loop {
            let pos = self.peek().pos;
            let (left_binding, right_binding) = match self.peek().tok {
                Tok::Plus | Tok::Minus => (1, 2),
                Tok::Star | Tok::Slash => (3, 4),
                Tok::Caret => (6, 5), // right-associative
                _ => break,
            };
            if left_binding < min_binding {
                break;
            }
            let op = self.advance().tok.clone();
            let rhs = self.expression(right_binding)?;
            lhs = self.apply(op, lhs, rhs, pos)?;
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Value> {
        let pos = self.peek().pos;
        match self.advance().tok.clone() {
            Tok::Int(n) => Ok(Value::constant(MotivicClass::from_int(n))),
            Tok::Lefschetz => Ok(Value::constant(MotivicClass::lefschetz())),
            Tok::SeriesVar => {
                if self.symbols == SymbolSet::ClassOnly {
                    Err(Error::Syntax {
                        pos,
                        msg: "T is not allowed in a class expression".into(),
                    })
                } else {
                    Ok(Value::t_monomial())
                }
            }
            Tok::OrderMarker => self.order_marker(pos),
            Tok::Minus => {
                let operand = self.expression(5)?;
                if operand.order.is_some() {
                    return Err(Error::Syntax {
                        pos,
                        msg: "O(...) cannot be negated".into(),
                    });
                }
                Ok(Value {
                    terms: operand
                        .terms
                        .into_iter()
                        .map(|(e, c)| (e, c.neg()))
                        .collect(),
                    order: None,
                })
            }
            Tok::LParen => {
                let inner = self.expression(0)?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            other => Err(Error::Syntax {
                pos,
                msg: format!("expected a value, found {other:?}"),
            }),
        }
    }

    /// `O(T^k)` or `O(T)`; only meaningful as a top-level summand.
    fn order_marker(&mut self, pos: usize) -> Result<Value> {
        if self.symbols == SymbolSet::ClassOnly {
            return Err(Error::Syntax {
                pos,
                msg: "O(...) is not allowed in a class expression".into(),
            });
        }
        self.expect(Tok::LParen, "( after O")?;
        self.expect(Tok::SeriesVar, "T inside O(...)")?;
        let k = if self.peek().tok == Tok::Caret {
            self.advance();
            let at = self.peek().pos;
            match self.advance().tok.clone() {
                Tok::Int(n) => n.to_usize().ok_or(Error::Syntax {
                    pos: at,
                    msg: "order out of range".into(),
                })?,
                _ => {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "expected an integer order in O(T^k)".into(),
                    })
                }
            }
        } else {
            1
        };
        self.expect(Tok::RParen, "closing parenthesis")?;
        if k == 0 {
            return Err(Error::Syntax {
                pos,
                msg: "O(T^0) declares no series coefficients".into(),
            });
        }
        Ok(Value::marker(k - 1))
    }

    fn apply(&self, op: Tok, lhs: Value, rhs: Value, pos: usize) -> Result<Value> {
        let no_markers = |v: &Value| -> Result<()> {
            if v.order.is_some() {
                Err(Error::Syntax {
                    pos,
                    msg: "O(...) must be a top-level summand".into(),
                })
            } else {
                Ok(())
            }
        };
        match op {
            Tok::Plus | Tok::Minus => {
                let mut terms = lhs.terms;
                for (e, c) in rhs.terms {
                    let negated = if op == Tok::Minus { c.neg() } else { c };
                    let entry = terms.entry(e).or_insert_with(MotivicClass::zero);
                    *entry = entry.add(&negated);
                    if entry.is_zero() {
                        terms.remove(&e);
                    }
                }
                let order = match (lhs.order, rhs.order) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                if op == Tok::Minus && rhs.order.is_some() {
                    return Err(Error::Syntax {
                        pos,
                        msg: "O(...) cannot be subtracted".into(),
                    });
                }
                Ok(Value { terms, order })
            }
            Tok::Star => {
                no_markers(&lhs)?;
                no_markers(&rhs)?;
                let mut terms: BTreeMap<usize, MotivicClass> = BTreeMap::new();
                for (ea, ca) in &lhs.terms {
                    for (eb, cb) in &rhs.terms {
                        let product = ca.mul(cb);
                        if product.is_zero() {
                            continue;
                        }
                        let entry = terms.entry(ea + eb).or_insert_with(MotivicClass::zero);
                        *entry = entry.add(&product);
                        if entry.is_zero() {
                            terms.remove(&(ea + eb));
                        }
                    }
                }
                Ok(Value { terms, order: None })
            }
            Tok::Slash => {
                no_markers(&lhs)?;
                no_markers(&rhs)?;
                let divisor = rhs.as_class().ok_or(Error::Syntax {
                    pos,
                    msg: "divisor must be free of T".into(),
                })?;
                if divisor.is_zero() {
                    return Err(Error::Syntax {
                        pos,
                        msg: "division by zero".into(),
                    });
                }
                let terms = lhs
                    .terms
                    .into_iter()
                    .map(|(e, c)| Ok((e, c.div(&divisor)?)))
                    .collect::<Result<_>>()?;
                Ok(Value { terms, order: None })
            }
            Tok::Caret => {
                no_markers(&lhs)?;
                no_markers(&rhs)?;
                let exponent = rhs
                    .as_class()
                    .and_then(|c| {
                        let p = c.as_polynomial()?;
                        if p.max_exp().unwrap_or(0) != 0 {
                            return None;
                        }
                        p.constant_term().to_i64()
                    })
                    .ok_or(Error::Syntax {
                        pos,
                        msg: "exponent must be an integer constant".into(),
                    })?;
                // powers of a single monomial stay single monomials; anything
                // else expands, so keep the exponent at desk scale
                let monomial_base = lhs
                    .as_class()
                    .is_some_and(|c| c.as_polynomial().is_some_and(|p| p.num_terms() <= 1));
                if !monomial_base && exponent.unsigned_abs() > 4096 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    });
                }
                if let Some(base) = lhs.as_class() {
                    if base.is_zero() && exponent < 0 {
                        return Err(Error::Syntax {
                            pos,
                            msg: "zero cannot be raised to a negative power".into(),
                        });
                    }
                    let value = base.pow(exponent).expect("nonzero base checked");
                    return Ok(Value::constant(value));
                }
                if exponent < 0 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "series factors only take nonnegative integer powers".into(),
                    });
                }
                let mut out = Value::constant(MotivicClass::one());
                for _ in 0..exponent {
                    out = self.apply(Tok::Star, out, clone_value(&lhs), pos)?;
                }
                Ok(out)
            }
            _ => unreachable!("apply only sees binary operators"),
        }
    }
}

fn clone_value(v: &Value) -> Value {
    Value {
        terms: v.terms.clone(),
        order: v.order,
    }
}
