//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored, positions reported in bytes):
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nonneg-int)?
//! atom   := integer ('/' positive-int)? | identifier | '(' expr ')'
//! ```
//!
//! Identifiers match `[a-zA-Z][a-zA-Z0-9_]*` and must name ambient
//! variables. The optional leading sign and the `integer/integer` atom are
//! conservative extensions so that canonical printing always re-parses;
//! over rings without the needed inverse a fractional atom is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            b'/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(Lexer {
        toks,
        end: bytes.len(),
    })
}

struct Parser<'a, R: Ring> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    ring: &'a PolyRing<R>,
}

impl<'a, R: Ring> Parser<'a, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::Parse {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Poly<R>> {
        let mut negate = false;
        if let Some(tok) = self.peek() {
            if *tok == Tok::Minus {
                self.bump();
                negate = true;
            } else if *tok == Tok::Plus {
                self.bump();
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same ambient");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same ambient");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<R>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f).expect("same ambient");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<R>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(n).map_err(|_| Error::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse {
                    pos,
                    msg: "expected non-negative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<R>> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let coeff = self.ring.coeff_ring();
                let num = coeff.from_bigint(&n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            let den = coeff.from_bigint(&d);
                            let q = coeff.exact_div(&num, &den).ok_or(Error::Parse {
                                pos: dpos,
                                msg: format!(
                                    "coefficient {n}/{d} has no value in {}",
                                    coeff.notation()
                                ),
                            })?;
                            Ok(self.ring.constant(q))
                        }
                        _ => Err(Error::Parse {
                            pos: dpos,
                            msg: "expected integer denominator".into(),
                        }),
                    }
                } else {
                    Ok(self.ring.constant(num))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var_poly(i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                pos,
                msg: "expected integer, identifier or `(`".into(),
            }),
        }
    }
}

/// Parse a polynomial expression into canonical form.
pub fn parse_poly<R: Ring>(text: &str, ring: &PolyRing<R>) -> Result<Poly<R>> {
    let lexer = lex(text)?;
    let mut p = Parser {
        toks: &lexer.toks,
        pos: 0,
        end: lexer.end,
        ring,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(poly)
}
