//! Text form of [`WPoly`]: integers, the variables `q z x y`, `+ - * ^` and
//! parentheses. Formatting is canonical so golden files stay byte-stable.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use super::wpoly::{Monomial, WPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn monomial_text(m: Monomial) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", m.x), ("y", m.y), ("z", m.z)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Renders one term without its sign; returns `(negative, text)`.
fn term_text(m: Monomial, c: &QPoly, factored: bool) -> (bool, String) {
    let mono = monomial_text(m);
    let (negative, coeff) = match c.as_constant() {
        Some(k) => {
            let abs = k.abs();
            let text = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                String::new()
            } else {
                abs.to_string()
            };
            (k.is_negative(), text)
        }
        None if factored => {
            let negative = c.content().is_negative();
            let body = if negative { (-c).format_factored() } else { c.format_factored() };
            (negative, body)
        }
        None => (false, format!("({c})")),
    };
    let text = match (coeff.is_empty(), mono.is_empty()) {
        (true, _) => mono,
        (false, true) => coeff,
        (false, false) => format!("{coeff}*{mono}"),
    };
    (negative, text)
}

fn write_terms(w: &WPoly, factored: bool) -> String {
    if w.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in w.terms().enumerate() {
        let (negative, text) = term_text(m, c, factored);
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    out
}

impl WPoly {
    /// Canonical expanded text, e.g. `(q^2-3*q+2)*y^3*z^2 + x^3`.
    pub fn format(&self) -> String {
        write_terms(self, false)
    }

    /// Same terms with `q` coefficients shown factored where small integer
    /// roots exist, e.g. `15*(q-1)*x^2*y^4`. Display only.
    pub fn format_factored(&self) -> String {
        write_terms(self, true)
    }

    pub fn parse(text: &str) -> Result<WPoly, ParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let w = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(w)
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl std::str::FromStr for WPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        WPoly::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<WPoly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<WPoly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<WPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| ParseError {
                position: start,
                message: "expected a small nonnegative exponent".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<WPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("digits parse as an integer");
                if n.is_zero() {
                    return Ok(WPoly::zero());
                }
                Ok(WPoly::constant(QPoly::constant(n)))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(WPoly::constant(QPoly::q()))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(WPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(WPoly::y())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(WPoly::z())
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(WPoly::parse("0").unwrap(), WPoly::zero());
        let w = WPoly::parse("x^3 + 3*(q-1)*x*y^2*z + (q-1)*(q-2)*y^3*z^2").unwrap();
        assert_eq!(w.coeff(Monomial::new(2, 0, 3)), QPoly::from_i64(&[2, -3, 1]));
        assert_eq!(w.format(), "(q^2-3*q+2)*y^3*z^2 + (3*q-3)*x*y^2*z + x^3");
        assert_eq!(
            w.format_factored(),
            "(q-1)*(q-2)*y^3*z^2 + 3*(q-1)*x*y^2*z + x^3"
        );
    }

    #[test]
    fn parse_errors_report_position() {
        let e = WPoly::parse("x + * y").unwrap_err();
        assert_eq!(e.position, 4);
        let e = WPoly::parse("(x + y").unwrap_err();
        assert_eq!(e.position, 6);
        assert!(WPoly::parse("x + w").is_err());
        assert!(WPoly::parse("x y").is_err());
    }

    #[test]
    fn negative_and_constant_terms() {
        let w = WPoly::parse("-x^2 + 5 - 3*y").unwrap();
        assert_eq!(w.format(), "-x^2 - 3*y + 5");
        assert_eq!(WPoly::parse(&w.format()).unwrap(), w);
        let w = WPoly::parse("-(q-1)*x").unwrap();
        assert_eq!(w.format(), "(-q+1)*x");
        assert_eq!(w.format_factored(), "-(q-1)*x");
        assert_eq!(WPoly::parse(&w.format_factored()).unwrap(), w);
    }

    fn arb_wpoly() -> impl Strategy<Value = WPoly> {
        let term = (0u32..4, 0u32..5, 0u32..5, prop::collection::vec(-50i64..50, 0..4));
        prop::collection::vec(term, 0..6).prop_map(|terms| {
            let mut w = WPoly::zero();
            for (z, x, y, c) in terms {
                w.add_term(Monomial::new(z, x, y), QPoly::from_i64(&c));
            }
            w
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn format_parse_round_trip(w in arb_wpoly()) {
            prop_assert_eq!(WPoly::parse(&w.format()).unwrap(), w.clone());
            prop_assert_eq!(WPoly::parse(&w.format_factored()).unwrap(), w);
        }

        #[test]
        fn ring_axioms(a in arb_wpoly(), b in arb_wpoly(), c in arb_wpoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(
            a in prop::collection::vec(-20i64..20, 0..5),
            b in prop::collection::vec(-20i64..20, 0..5),
            q0 in -7i64..9,
        ) {
            let (a, b) = (QPoly::from_i64(&a), QPoly::from_i64(&b));
            prop_assert_eq!((&a * &b).eval_i64(q0), a.eval_i64(q0) * b.eval_i64(q0));
            prop_assert_eq!((&a + &b).eval_i64(q0), a.eval_i64(q0) + b.eval_i64(q0));
        }
    }
}
