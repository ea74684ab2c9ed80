//! Parser for the canonical polynomial text form.
//!
//! The grammar is exactly what [`MultiPoly`]'s `Display` emits:
//!
//! ```text
//! poly   := sign? term (sign term)*          sign := '+' | '-'
//! term   := factor ('*' factor)*
//! factor := number | var ('^' uint)?
//! number := uint ('/' uint)?
//! ```
//!
//! Whitespace may appear between any two tokens. A Unicode minus (U+2212)
//! is accepted as an alias for '-'. Repeated variables within a term are
//! merged, so the parser accepts a superset of the canonical form; parsing
//! a serialized polynomial always reproduces it exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use super::rational::Rational;
use super::var::VarId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token at position {0}")]
    UnexpectedToken(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponent of `{var}` exceeds the supported maximum of 255")]
    ExponentTooLarge { var: String },
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Num(BigInt),
    Ident(String),
}

fn lex(input: &str) -> Result<Vec<Token>, PolyParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                tokens.push(Token::Plus);
                chars.next();
            }
            '-' | '\u{2212}' => {
                tokens.push(Token::Minus);
                chars.next();
            }
            '*' => {
                tokens.push(Token::Star);
                chars.next();
            }
            '^' => {
                tokens.push(Token::Caret);
                chars.next();
            }
            '/' => {
                tokens.push(Token::Slash);
                chars.next();
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = digits.parse::<BigInt>().expect("digits only");
                tokens.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(name));
            }
            _ => return Err(PolyParseError::UnexpectedChar { pos, ch }),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.at);
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect_uint(&mut self) -> Result<BigInt, PolyParseError> {
        match self.next() {
            Some(Token::Num(n)) => Ok(n.clone()),
            Some(_) => Err(PolyParseError::UnexpectedToken(self.at)),
            None => Err(PolyParseError::UnexpectedEnd),
        }
    }

    /// One term: a product of numeric and variable-power factors.
    fn term(&mut self) -> Result<(Monomial, Rational), PolyParseError> {
        let mut coeff = Rational::one();
        let mut exps: BTreeMap<VarId, u32> = BTreeMap::new();
        loop {
            match self.next() {
                Some(Token::Num(n)) => {
                    let numer = n.clone();
                    if matches!(self.peek(), Some(Token::Slash)) {
                        self.next();
                        let denom = self.expect_uint()?;
                        if denom.is_zero() {
                            return Err(PolyParseError::ZeroDenominator);
                        }
                        coeff *= Rational::new(numer, denom);
                    } else {
                        coeff *= Rational::from_integer(numer);
                    }
                }
                Some(Token::Ident(name)) => {
                    let name = name.clone();
                    let var = VarId::from_name(&name)
                        .ok_or_else(|| PolyParseError::UnknownVariable(name.clone()))?;
                    let exp: u32 = if matches!(self.peek(), Some(Token::Caret)) {
                        self.next();
                        let e = self.expect_uint()?;
                        u32::try_from(e)
                            .map_err(|_| PolyParseError::ExponentTooLarge { var: name.clone() })?
                    } else {
                        1
                    };
                    let total = exps.entry(var).or_insert(0);
                    *total += exp.min(256);
                    if *total > 255 {
                        return Err(PolyParseError::ExponentTooLarge { var: name });
                    }
                }
                Some(_) => return Err(PolyParseError::UnexpectedToken(self.at)),
                None => return Err(PolyParseError::UnexpectedEnd),
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.next();
            } else {
                break;
            }
        }
        let mono = Monomial::from_factors(exps.into_iter().map(|(v, e)| (v, e as u8)));
        Ok((mono, coeff))
    }
}

pub fn parse_poly(input: &str) -> Result<MultiPoly, PolyParseError> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(PolyParseError::Empty);
    }
    let mut p = Parser { tokens, at: 0 };
    let mut out = MultiPoly::zero();
    let mut sign = Rational::one();
    if matches!(p.peek(), Some(Token::Minus)) {
        p.next();
        sign = -sign;
    } else if matches!(p.peek(), Some(Token::Plus)) {
        p.next();
    }
    loop {
        let (mono, coeff) = p.term()?;
        out.add_term(mono, coeff * &sign);
        match p.next() {
            None => break,
            Some(Token::Plus) => sign = Rational::one(),
            Some(Token::Minus) => sign = -Rational::one(),
            Some(_) => return Err(PolyParseError::UnexpectedToken(p.at)),
        }
    }
    Ok(out)
}
