//! Text form of operators: `t` stands for `θ`, products are explicit.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' '-'? digits)?
//! atom   := digits ('/' digits)? | 'z' | 't' | 'θ' | 'i' | '(' expr ')'
//! ```
//!
//! Products are evaluated left to right in the noncommutative ring, so
//! `t*z` and `z*t` parse to different operators. Negative exponents are
//! only accepted on a bare `z`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ore::{op_mul, ThetaOperator};
use crate::error::{Error, Result};
use crate::exact::poly::push_term;
use crate::exact::GaussianRational;

impl fmt::Display for ThetaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut out = String::new();
        for (j, k, c) in terms {
            let zpart = match j {
                0 => None,
                1 => Some("z".to_string()),
                _ => Some(format!("z^{j}")),
            };
            let tpart = match k {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{k}")),
            };
            let mono: Vec<String> = zpart.into_iter().chain(tpart).collect();
            push_term(&mut out, c, &mono.join("*"));
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Z,
    T,
    I,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |k: &mut usize| -> String {
        let mut d = String::new();
        while let Some(&(_, c)) = chars.get(*k) {
            if c.is_ascii_digit() {
                d.push(c);
                *k += 1;
            } else {
                break;
            }
        }
        d
    };
    while let Some(&(pos, c)) = chars.get(k) {
        let tok = match c {
            c if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '0'..='9' => {
                let n: BigInt = digits(&mut k).parse().expect("digits");
                let mut r = BigRational::from_integer(n);
                let has_den = matches!(chars.get(k), Some(&(_, '/')))
                    && chars.get(k + 1).is_some_and(|&(_, c)| c.is_ascii_digit());
                if has_den {
                    k += 1;
                    let d: BigInt = digits(&mut k).parse().expect("digits");
                    if d == BigInt::from(0) {
                        return Err(Error::Parse { offset: pos, message: "zero denominator".into() });
                    }
                    r /= BigRational::from_integer(d);
                }
                out.push((pos, Tok::Num(r)));
                continue;
            }
            'z' => Tok::Z,
            't' | 'θ' => Tok::T,
            'i' => Tok::I,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse { offset: pos, message: format!("unexpected {other:?}") })
            }
        };
        out.push((pos, tok));
        k += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ThetaOperator> {
        let mut acc = if self.eat(&Tok::Minus) {
            -&self.term()?
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ThetaOperator> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = op_mul(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ThetaOperator> {
        if self.eat(&Tok::Minus) {
            return Ok(-&self.factor()?);
        }
        let bare_z = self.peek() == Some(&Tok::Z);
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        let Some(Tok::Num(e)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        if !e.is_integer() {
            return self.err("exponent must be an integer");
        }
        self.pos += 1;
        let e: u32 = e
            .to_integer()
            .try_into()
            .map_err(|_| Error::Parse { offset: self.offset(), message: "exponent too large".into() })?;
        if negative {
            if !bare_z {
                return self.err("negative exponents are only allowed on z");
            }
            return Ok(ThetaOperator::z_pow(-(e as i32)));
        }
        Ok((0..e).fold(ThetaOperator::one(), |acc, _| op_mul(&acc, &base)))
    }

    fn atom(&mut self) -> Result<ThetaOperator> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        Ok(match tok {
            Tok::Num(r) => ThetaOperator::scalar(GaussianRational::real(r)),
            Tok::Z => ThetaOperator::z(),
            Tok::T => ThetaOperator::theta(),
            Tok::I => ThetaOperator::scalar(GaussianRational::i()),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                inner
            }
            _ => {
                self.pos -= 1;
                return self.err("expected an operand");
            }
        })
    }
}

pub fn parse_operator(s: &str) -> Result<ThetaOperator> {
    let mut p = Parser { toks: lex(s)?, pos: 0, end: s.len() };
    let op = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(op)
}

impl std::str::FromStr for ThetaOperator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_operator(s)
    }
}
