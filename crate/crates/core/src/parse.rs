//! Text grammar for polynomials and the canonical printer.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! A sign may only open an expression (at the start or right after `(`).
//! There is no implicit multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{format_coefficient, Coefficient, Monomial, Polynomial, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    Unexpected { found: String, expected: &'static str },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("exponent must be a non-negative integer literal")]
    BadExponent,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(transparent)]
    Ring(RingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(ParseError { line: l, column: col, kind: ParseErrorKind::UnexpectedChar(other) }),
            }
        };
        column += i - start;
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError { line: t.line, column: t.column, kind }
    }

    fn unexpected(&self, t: &Spanned, expected: &'static str) -> ParseError {
        self.error_at(t, ParseErrorKind::Unexpected { found: t.tok.describe(), expected })
    }

    fn ring_error(&self, t: &Spanned, e: RingError) -> ParseError {
        self.error_at(t, ParseErrorKind::Ring(e))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            let op = self.peek().clone();
            match op.tok {
                Tok::Plus | Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = if op.tok == Tok::Plus { acc.checked_add(&rhs) } else { acc.checked_sub(&rhs) }
                        .map_err(|e| self.ring_error(&op, e))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while self.peek().tok == Tok::Star {
            let op = self.bump();
            let rhs = self.power()?;
            acc = acc.checked_mul(&rhs).map_err(|e| self.ring_error(&op, e))?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let exp_tok = self.bump();
        let Tok::Int(ref e) = exp_tok.tok else {
            return Err(self.error_at(&exp_tok, ParseErrorKind::BadExponent));
        };
        let e: u32 = e.try_into().ok().filter(|&e: &u32| e <= self.ring.exponent_limit() as u32).ok_or_else(|| {
            self.ring_error(
                &exp_tok,
                RingError::ExponentOverflow { variable: "^".into(), limit: self.ring.exponent_limit() },
            )
        })?;
        base.pow(e).map_err(|err| self.ring_error(&caret, err))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(ref num) => {
                let mut value = BigRational::from_integer(num.clone());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let den_tok = self.bump();
                    let Tok::Int(ref den) = den_tok.tok else {
                        return Err(self.unexpected(&den_tok, "integer denominator"));
                    };
                    if den.is_zero() {
                        return Err(self.error_at(&den_tok, ParseErrorKind::ZeroDenominator));
                    }
                    value = BigRational::new(num.clone(), den.clone());
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Tok::Ident(ref name) => Polynomial::var(self.ring, name)
                .map_err(|_| self.error_at(&t, ParseErrorKind::UndeclaredVariable(name.clone()))),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(self.unexpected(&close, "`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected(&t, "number, variable or `(`")),
        }
    }
}

/// Parses `src` into a polynomial of `ring`.
pub fn parse(src: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, ring };
    let poly = p.expr()?;
    let end = p.bump();
    if end.tok != Tok::End {
        let expected = match end.tok {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen => "operator (implicit multiplication is not allowed)",
            _ => "operator or end of input",
        };
        return Err(p.unexpected(&end, expected));
    }
    Ok(poly)
}

/// Highest `k` such that an identifier `xk` appears in `src`.
pub fn infer_dimension(src: &str) -> Option<usize> {
    let toks = lex(src).ok()?;
    toks.iter()
        .filter_map(|t| match &t.tok {
            Tok::Ident(s) => s.strip_prefix('x')?.parse::<usize>().ok(),
            _ => None,
        })
        .max()
}

fn write_monomial(out: &mut String, ring: &Ring, m: &Monomial) {
    let mut first = true;
    for (var, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ring.name(var));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_term(out: &mut String, ring: &Ring, m: &Monomial, c: &Coefficient) {
    if m.is_one() {
        out.push_str(&format_coefficient(c));
    } else if c.is_one() {
        write_monomial(out, ring, m);
    } else {
        out.push_str(&format_coefficient(c));
        out.push('*');
        write_monomial(out, ring, m);
    }
}

/// Canonical text: terms in descending monomial order, `" + "` / `" - "`
/// between terms, a bare leading `-` on a negative first term.
pub fn print(f: &Polynomial) -> String {
    print_capped(f, usize::MAX)
}

/// Like [`print`] but stops after `max_terms` terms with a count of the rest.
pub fn print_capped(f: &Polynomial, max_terms: usize) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        if i == max_terms {
            out.push_str(&format!(" + ... ({} more terms)", f.len() - max_terms));
            break;
        }
        let abs = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        write_term(&mut out, ring, m, &abs);
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}
