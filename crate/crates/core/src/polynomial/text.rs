//! ASCII polynomial grammar.
//!
//! ```text
//! poly  := [sign] term (sign term)*
//! term  := coeff ['*'] mono | coeff | mono
//! coeff := int ['/' int]
//! mono  := 'x' ['^' int]
//! ```
//!
//! Whitespace may appear between tokens, `x` is case-insensitive, and both
//! `-` and U+2212 are accepted as minus. Printing emits descending powers
//! with explicit `*` and `^`, so printed output always re-parses.

use std::fmt;
use std::iter::Peekable;
use std::str::{CharIndices, FromStr};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::number::{Integer, Rational};

/// Exponents above this are rejected rather than allocating a huge dense vector.
pub const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(Integer),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    X,
}

struct Lexer<'a> {
    input: &'a str,
    chars: Peekable<CharIndices<'a>>,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input,
            chars: input.char_indices().peekable(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>> {
        let mut out = Vec::new();
        while let Some((pos, c)) = self.chars.next() {
            let tok = match c {
                c if c.is_whitespace() => continue,
                '+' => Token::Plus,
                '-' | '\u{2212}' => Token::Minus,
                '*' => Token::Star,
                '/' => Token::Slash,
                '^' => Token::Caret,
                'x' | 'X' => Token::X,
                '0'..='9' => {
                    let mut end = pos + 1;
                    while let Some(&(i, d)) = self.chars.peek() {
                        if !d.is_ascii_digit() {
                            break;
                        }
                        end = i + 1;
                        self.chars.next();
                    }
                    let digits = &self.input[pos..end];
                    Token::Int(digits.parse().expect("ascii digits"))
                }
                other => {
                    return Err(Error::parse(
                        self.input,
                        format!("unexpected character `{other}` at byte {pos}"),
                    ))
                }
            };
            out.push((pos, tok));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> Error {
        let at = match self.tokens.get(self.pos) {
            Some((byte, _)) => format!("byte {byte}"),
            None => "end of input".to_string(),
        };
        Error::parse(self.input, format!("{what} at {at}"))
    }

    fn int(&mut self, what: &str) -> Result<Integer> {
        match self.peek() {
            Some(Token::Int(_)) => match self.bump() {
                Some(Token::Int(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.error(what)),
        }
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let numer = self.int("expected coefficient")?;
        if !self.eat(&Token::Slash) {
            return Ok(Rational::from_integer(numer));
        }
        let denom = self.int("expected denominator")?;
        Rational::new(numer, denom).map_err(|_| Error::parse(self.input, "zero denominator"))
    }

    fn monomial(&mut self) -> Result<usize> {
        if !self.eat(&Token::X) {
            return Err(self.error("expected `x`"));
        }
        if !self.eat(&Token::Caret) {
            return Ok(1);
        }
        let e = self.int("expected exponent")?;
        usize::try_from(&e)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(self.input, format!("exponent {e} too large")))
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        match self.peek() {
            Some(Token::X) => Ok((Rational::one(), self.monomial()?)),
            Some(Token::Int(_)) => {
                let c = self.coefficient()?;
                let has_star = self.eat(&Token::Star);
                if has_star || self.peek() == Some(&Token::X) {
                    Ok((c, self.monomial()?))
                } else {
                    Ok((c, 0))
                }
            }
            _ => Err(self.error("expected term")),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        if self.tokens.is_empty() {
            return Err(Error::parse(self.input, "empty polynomial"));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut negate = self.eat(&Token::Minus);
        if !negate {
            self.eat(&Token::Plus);
        }
        loop {
            let (c, e) = self.term()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            if negate {
                coeffs[e] -= &c;
            } else {
                coeffs[e] += &c;
            }
            match self.bump() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected `+` or `-`"));
                }
            }
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = Lexer::new(s).tokens()?;
        Parser {
            input: s,
            tokens,
            pos: 0,
        }
        .polynomial()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            match power {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => f.write_str("x")?,
                _ => write!(f, "{mag}*x")?,
            }
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::strategies::poly;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(
            Polynomial::from_ints(&[3, -4, 0, 0, 1]).to_string(),
            "x^4 - 4*x + 3"
        );
        let mf = Polynomial::from_coeffs(vec![
            Rational::frac(3, 2),
            Rational::frac(1, 3),
            Rational::frac(1, 6),
        ]);
        assert_eq!(mf.to_string(), "1/6*x^2 + 1/3*x + 3/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::from_ints(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(Polynomial::from_ints(&[-7]).to_string(), "-7");
        assert_eq!(
            Polynomial::from_coeffs(vec![Rational::zero(), Rational::frac(-1, 2)]).to_string(),
            "-1/2*x"
        );
    }

    #[test]
    fn grammar_variants() {
        let f = Polynomial::from_ints(&[3, -4, 0, 0, 1]);
        assert_eq!(p("x^4 - 4*x + 3"), f);
        assert_eq!(p("X^4-4x+3"), f);
        assert_eq!(p("  3 + x ^ 4 - 4 * x "), f);
        assert_eq!(p("x^4 \u{2212} 4*x + 3"), f);
        assert_eq!(p("+x^4 - 4*x^1 + 3*x^0"), f);
        assert_eq!(p("-x"), Polynomial::from_ints(&[0, -1]));
        assert_eq!(p("x + x - 2*x"), Polynomial::zero());
        assert_eq!(p("0"), Polynomial::zero());
        assert_eq!(
            p("1/6x^2 + 1/3*x + 3/2"),
            Polynomial::from_coeffs(vec![
                Rational::frac(3, 2),
                Rational::frac(1, 3),
                Rational::frac(1, 6)
            ])
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "   ",
            "x +",
            "+ - x",
            "x y",
            "2 3",
            "1/0*x",
            "x^",
            "x^-2",
            "1.5*x",
            "x*3",
            "x^99999999999",
            "(x+1)",
            "2**x",
            "/2",
            "3/",
        ] {
            assert!(
                matches!(bad.parse::<Polynomial>(), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(a in poly(10)) {
            prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a);
        }
    }
}
