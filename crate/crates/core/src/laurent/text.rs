//! Text form of polynomials.
//!
//! Printing emits a signed sum of terms `coef * s^e1 * s'^e2 * …` in descending
//! monomial order; the coefficient is dropped when it is ±1, negative exponents
//! print as `s^-1`, and irrational coefficients print in parentheses over the
//! roots `zM` (e.g. `(1/2 + z12^5)`). The parser accepts that form and general
//! expressions built with `+ - * / ^` and parentheses; division is allowed only
//! by single terms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exactfield::{format_rational, CycNum};

use super::{LaurentError, LaurentPoly, Monomial, VarAlphabet};

type Poly = LaurentPoly<CycNum>;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().rev().enumerate() {
            let (neg, mag) = match c.to_rational() {
                Some(q) if q.is_negative() => (true, CycNum::from_rational(&-q)),
                _ => (false, c.clone()),
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !(mag.is_one() && !m.is_one()) {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                let name = self.alphabet().name(i);
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join(" * "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, LaurentError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            while i < chars.len() && chars[i] == '\'' {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(LaurentError::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    alphabet: &'a VarAlphabet,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, msg: impl Into<String>) -> LaurentError {
        LaurentError::Parse { pos: self.here(), msg: msg.into() }
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, LaurentError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, LaurentError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let at = self.here();
                let d = self.factor()?;
                let inv = d.powi(-1).map_err(|_| LaurentError::Parse {
                    pos: at,
                    msg: "division is only allowed by a single nonzero term".into(),
                })?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, LaurentError> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.here();
            let e = self.exponent()?;
            return base.powi(e).map_err(|_| LaurentError::Parse {
                pos: at,
                msg: "negative powers are only allowed for single terms".into(),
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, LaurentError> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i32::try_from(n).map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected an integer exponent")),
        };
        if paren && !self.eat(')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<Poly, LaurentError> {
        let n = self.alphabet.len();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(self.alphabet, CycNum::from_integer(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.alphabet.index(&name) {
                    return Ok(Poly::term(self.alphabet, CycNum::one(), Monomial::var(n, i, 1)));
                }
                if let Some(m) = name.strip_prefix('z').and_then(|d| d.parse::<u64>().ok()) {
                    if m >= 1 {
                        return Ok(Poly::constant(self.alphabet, CycNum::zeta(m, 1)));
                    }
                }
                self.pos -= 1;
                Err(self.err(format!("unknown variable {name:?}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

impl Poly {
    /// Parses the text form over `alphabet`.
    pub fn parse(src: &str, alphabet: &VarAlphabet) -> Result<Self, LaurentError> {
        let toks = lex(src)?;
        let mut p = Parser { toks, pos: 0, alphabet, end: src.chars().count() };
        if p.peek().is_none() {
            return Err(p.err("empty polynomial"));
        }
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }

    /// Parses over the canonical alphabet.
    pub fn parse_canonical(src: &str) -> Result<Self, LaurentError> {
        Poly::parse(src, &VarAlphabet::canonical())
    }
}

/// Rational coefficient text used in reports.
pub fn coefficient_text(c: &CycNum) -> String {
    match c.to_rational() {
        Some(q) => format_rational(&q),
        None => c.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse_canonical(s).unwrap()
    }

    #[test]
    fn prints_canonical_form() {
        assert_eq!(p("a - a'").to_string(), "a - a'");
        assert_eq!(p("(s - s')*(s + s')").to_string(), "s^2 - s'^2");
        assert_eq!(p("x1 + s/x1").to_string(), "x1 + s * x1^-1");
        assert_eq!(p("3/2*a^2 - 1").to_string(), "3/2 * a^2 - 1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-a").to_string(), "-a");
    }

    #[test]
    fn parses_roots_and_exponents() {
        let q = p("z4^2 * s");
        assert_eq!(q.to_string(), "-s");
        assert_eq!(p("s^-2 * s^(2)").to_string(), "1");
        let r = p("(1/2 + z12^5) * a");
        assert_eq!(Poly::parse_canonical(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Poly::parse_canonical("a +"), Err(LaurentError::Parse { .. })));
        assert!(matches!(Poly::parse_canonical("q"), Err(LaurentError::Parse { .. })));
        assert!(matches!(Poly::parse_canonical("a / (a + 1)"), Err(LaurentError::Parse { .. })));
        assert!(matches!(Poly::parse_canonical("(a + 1)^-1"), Err(LaurentError::Parse { .. })));
        assert!(matches!(Poly::parse_canonical(""), Err(LaurentError::Parse { .. })));
        assert!(matches!(Poly::parse_canonical("a $ b"), Err(LaurentError::Parse { .. })));
    }

    #[test]
    fn custom_alphabet() {
        let xy = VarAlphabet::new(&["x", "y"]).unwrap();
        let q = Poly::parse("x - y", &xy).unwrap();
        assert_eq!(q.to_string(), "x - y");
        assert!(Poly::parse("a", &xy).is_err());
    }
}
