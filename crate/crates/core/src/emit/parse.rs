use std::iter::Peekable;
use std::str::CharIndices;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};

/// A weight polynomial as typed by the user, with its parsed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub parsed: Poly,
    pub variable: char,
}

impl PolyExpr {
    pub fn parse(source: &str, variable: char) -> Result<Self> {
        Ok(PolyExpr {
            source: source.to_string(),
            parsed: parse_poly_in(source, variable)?,
            variable,
        })
    }
}

/// Parses a polynomial in `k`, e.g. `"k^2 + 3k - 1/2"`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    parse_poly_in(text, 'k')
}

/// Parses a polynomial in the given variable.
///
/// ```text
/// expr  := sign? term (("+" | "-") term)*
/// term  := coeff? "*"? var ("^" uint)? | coeff
/// coeff := uint ("/" uint)?
/// ```
///
/// Whitespace is ignored and repeated powers accumulate.
pub fn parse_poly_in(text: &str, variable: char) -> Result<Poly> {
    let mut p = Parser {
        chars: text.char_indices().peekable(),
        end: text.len(),
        var: variable,
    };
    p.expr()
}

struct Parser<'a> {
    chars: Peekable<CharIndices<'a>>,
    end: usize,
    var: char,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn pos(&mut self) -> usize {
        self.peek().map_or(self.end, |(i, _)| i)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc: Vec<Rational> = Vec::new();
        let mut sign = match self.peek() {
            Some((_, '-')) => {
                self.chars.next();
                -1
            }
            Some((_, '+')) => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            let (coeff, power) = self.term()?;
            if acc.len() <= power {
                acc.resize(power + 1, Rational::zero());
            }
            let coeff = if sign < 0 { -coeff } else { coeff };
            acc[power] += coeff;
            match self.peek() {
                None => break,
                Some((_, '+')) => sign = 1,
                Some((_, '-')) => sign = -1,
                Some((i, c)) => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("expected '+' or '-', found {c:?}"),
                    })
                }
            }
            self.chars.next();
        }
        Ok(Poly::from_coeffs(acc))
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        let start = self.pos();
        let coeff = match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => Some(self.coeff()?),
            _ => None,
        };
        if coeff.is_some() && matches!(self.peek(), Some((_, '*'))) {
            self.chars.next();
            if !matches!(self.peek(), Some((_, c)) if c.is_alphabetic()) {
                return Err(Error::Parse {
                    pos: self.pos(),
                    msg: "expected variable after '*'".into(),
                });
            }
        }
        match self.peek() {
            Some((_, c)) if c == self.var => {
                self.chars.next();
                let power = self.exponent()?;
                Ok((coeff.unwrap_or_else(Rational::one), power))
            }
            Some((i, c)) if c.is_alphabetic() => Err(Error::Unsupported {
                pos: i,
                msg: format!("unknown variable {c:?}, expected {:?}", self.var),
            }),
            _ => match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(Error::Parse {
                    pos: start,
                    msg: "expected a coefficient or variable".into(),
                }),
            },
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.uint()?;
        if let Some((i, '.')) = self.peek() {
            return Err(Error::Unsupported {
                pos: i,
                msg: "decimal coefficients are not supported, use a fraction".into(),
            });
        }
        if let Some((_, '/')) = self.peek() {
            self.chars.next();
            let pos = self.pos();
            let den = self.uint()?;
            if den == BigInt::from(0) {
                return Err(Error::Parse {
                    pos,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> Result<usize> {
        if !matches!(self.peek(), Some((_, '^'))) {
            return Ok(1);
        }
        self.chars.next();
        let pos = self.pos();
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => {}
            Some((i, '-')) => {
                return Err(Error::Unsupported {
                    pos: i,
                    msg: "negative exponents are not supported".into(),
                })
            }
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: "expected exponent after '^'".into(),
                })
            }
        }
        let e = self.uint()?;
        if let Some((i, '/' | '.')) = self.peek() {
            return Err(Error::Unsupported {
                pos: i,
                msg: "exponents must be non-negative integers".into(),
            });
        }
        usize::try_from(e)
            .ok()
            .filter(|&e| e <= 4096)
            .ok_or(Error::Unsupported {
                pos,
                msg: "exponent too large".into(),
            })
    }

    fn uint(&mut self) -> Result<BigInt> {
        let pos = self.pos();
        let mut digits = String::new();
        // digits must be contiguous, so no whitespace skipping here
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        digits.parse().map_err(|_| Error::Parse {
            pos,
            msg: "expected an integer".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly("k").unwrap(), Poly::from_ints(&[0, 1]));
        let p = parse_poly("k^2 + 3k - 1/2").unwrap();
        assert_eq!(
            p,
            Poly::from_coeffs(vec![r(-1, 2), Rational::from(3), Rational::one()])
        );
        // hand values at k = 0, 1, 2
        assert_eq!(p.eval(&Rational::zero()), r(-1, 2));
        assert_eq!(p.eval(&Rational::one()), r(7, 2));
        assert_eq!(p.eval(&Rational::from(2)), r(19, 2));
        assert_eq!(parse_poly("2k^3").unwrap(), Poly::from_ints(&[0, 0, 0, 2]));
    }

    #[test]
    fn signs_whitespace_and_accumulation() {
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly("-k").unwrap(), Poly::from_ints(&[0, -1]));
        assert_eq!(parse_poly("  + k ^ 2 ").unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(parse_poly("k + k - 3k^0").unwrap(), Poly::from_ints(&[-3, 2]));
        assert_eq!(parse_poly("k - k").unwrap(), Poly::zero());
        assert_eq!(parse_poly("3*k^2").unwrap(), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(parse_poly("4/6k").unwrap(), Poly::from_coeffs(vec![Rational::zero(), r(2, 3)]));
        assert_eq!(parse_poly_in("x^2 - 1", 'x').unwrap(), Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn malformed_input() {
        for bad in ["", "k +", "3 4", "k^", "1/", "1/0", "++k", "k k", "(k)", "3*"] {
            assert!(
                matches!(parse_poly(bad), Err(Error::Parse { .. })),
                "{bad:?} -> {:?}",
                parse_poly(bad)
            );
        }
        assert_eq!(parse_poly("k +").unwrap_err(), Error::Parse { pos: 3, msg: "expected a coefficient or variable".into() });
    }

    #[test]
    fn unsupported_input() {
        for bad in ["x", "k^1/2", "k^1.5", "k^-1", "1.5k", "k + y"] {
            assert!(
                matches!(parse_poly(bad), Err(Error::Unsupported { .. })),
                "{bad:?} -> {:?}",
                parse_poly(bad)
            );
        }
        assert!(matches!(parse_poly("k + y"), Err(Error::Unsupported { pos: 4, .. })));
    }

    #[test]
    fn poly_expr_keeps_source() {
        let e = PolyExpr::parse("n^2", 'n').unwrap();
        assert_eq!(e.source, "n^2");
        assert_eq!(e.variable, 'n');
        assert_eq!(e.parsed, Poly::from_ints(&[0, 0, 1]));
    }
}
