//! Text parser for symbolic expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | var | '(' expr ')'
//! var    := letter+ digits          e.g. z3, x12, y1
//! ```
//!
//! The variable letters are cosmetic: `x3`, `y3` and `z3` all denote
//! variable 3.

use super::{AlgebraError, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Var(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>, AlgebraError> {
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                out.push(Token::Num(text.parse()?));
            }
            _ if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = bytes[start..i].iter().collect();
                let idx: u32 = digits
                    .parse()
                    .map_err(|_| AlgebraError::Syntax(format!("variable without index in {s:?}")))?;
                if idx == 0 {
                    return Err(AlgebraError::Syntax("variables are 1-based".into()));
                }
                out.push(Token::Var(idx));
            }
            _ => return Err(AlgebraError::Syntax(format!("unexpected character {c:?} in {s:?}"))),
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

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, AlgebraError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Token::Num(n)) if n.is_integer() => {
                let e: i32 = n
                    .numer()
                    .try_into()
                    .map_err(|_| AlgebraError::Syntax("exponent too large".into()))?;
                base.pow(if neg { -e } else { e })
            }
            _ => Err(AlgebraError::Syntax("expected integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.next() {
            Some(Token::Num(n)) => Ok(RationalFunction::constant(n)),
            Some(Token::Var(v)) => Ok(RationalFunction::var(v)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(AlgebraError::Syntax("unbalanced parenthesis".into())),
                }
            }
            other => Err(AlgebraError::Syntax(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a symbolic expression into a rational function.
pub fn parse_expression(s: &str) -> Result<RationalFunction, AlgebraError> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Syntax("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(AlgebraError::Syntax(format!("trailing input in {s:?}")));
    }
    Ok(e)
}
