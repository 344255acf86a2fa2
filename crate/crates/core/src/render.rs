//! Human-readable output and a reader for the LaTeX notation.
//!
//! Both formats expand in the Schur basis and list terms with partitions in
//! decreasing lexicographic order, coefficient first:
//!
//! ```text
//! latex: (q^4+2q^3+4q^2+2q+1)s_{(7)}+ … +q^2s_{(4,2,1)}
//! text:  (q^4 + 2*q^3 + 4*q^2 + 2*q + 1)*s(7) + … + q^2*s(4,2,1)
//! ```
//!
//! A bigraded value with empty x-legs is written in one set of variables;
//! otherwise each term carries `s^x_{…}` and, unless empty, `s^y_{…}`.

use std::cmp::Reverse;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::bigraded::BiSymFunc;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::{format_rational, QPoly};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Style {
    Latex,
    Text,
}

fn parts_list(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn schur_factor(style: Style, leg: &str, p: &Partition) -> String {
    match style {
        Style::Latex => {
            let sup = if leg.is_empty() { String::new() } else { format!("^{leg}") };
            format!("s{sup}_{{({})}}", parts_list(p))
        }
        Style::Text => format!("s{leg}({})", parts_list(p)),
    }
}

fn poly(style: Style, c: &QPoly) -> String {
    match style {
        Style::Latex => c.to_latex(),
        Style::Text => c.to_string(),
    }
}

/// Writes `coeff · basis` with the sign pulled out front. Returns the sign
/// and the unsigned body.
fn term(style: Style, c: &QPoly, basis: &str) -> (bool, String) {
    let terms: Vec<(usize, &BigRational)> = c.terms().collect();
    let star = if style == Style::Text { "*" } else { "" };
    if let [(exp, value)] = terms[..] {
        let negative = value.is_negative();
        let abs = value.abs();
        let mut body = String::new();
        if !abs.is_one() {
            body.push_str(&format_rational(&abs));
            if exp > 0 && style == Style::Text {
                body.push('*');
            }
        }
        match exp {
            0 => {}
            1 => body.push('q'),
            _ => body.push_str(&format!("q^{exp}")),
        }
        if !body.is_empty() {
            body.push_str(star);
        }
        body.push_str(basis);
        return (negative, body);
    }
    (false, format!("({}){star}{basis}", poly(style, c)))
}

fn join(style: Style, pieces: Vec<(bool, String)>) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (negative, body) in pieces {
        let sep = match (style, out.is_empty(), negative) {
            (_, true, false) => "",
            (_, true, true) => "-",
            (Style::Latex, false, false) => "+",
            (Style::Latex, false, true) => "-",
            (Style::Text, false, false) => " + ",
            (Style::Text, false, true) => " - ",
        };
        out.push_str(sep);
        out.push_str(&body);
    }
    out
}

fn render_sym(style: Style, f: &SymFunc) -> String {
    let f = f.to_schur();
    let mut keys: Vec<_> = f.terms().iter().collect();
    keys.sort_by_key(|(p, _)| Reverse(*p));
    join(
        style,
        keys.into_iter()
            .map(|(p, c)| term(style, c, &schur_factor(style, "", p)))
            .collect(),
    )
}

fn render_bi(style: Style, f: &BiSymFunc) -> String {
    let f = f.to_schur();
    let single = f.terms().keys().all(|(x, _)| x.is_empty());
    let mut keys: Vec<_> = f.terms().iter().collect();
    keys.sort_by_key(|(k, _)| Reverse(*k));
    let sep = if style == Style::Text { "*" } else { "" };
    join(
        style,
        keys.into_iter()
            .map(|((x, y), c)| {
                let basis = if single {
                    schur_factor(style, "", y)
                } else if y.is_empty() {
                    schur_factor(style, "x", x)
                } else {
                    format!(
                        "{}{sep}{}",
                        schur_factor(style, "x", x),
                        schur_factor(style, "y", y)
                    )
                };
                term(style, c, &basis)
            })
            .collect(),
    )
}

pub fn symfunc_latex(f: &SymFunc) -> String {
    render_sym(Style::Latex, f)
}

pub fn symfunc_text(f: &SymFunc) -> String {
    render_sym(Style::Text, f)
}

pub fn latex(f: &BiSymFunc) -> String {
    render_bi(Style::Latex, f)
}

pub fn text(f: &BiSymFunc) -> String {
    render_bi(Style::Text, f)
}

/// Reads sums of products of `s_{(…)}`, `s^x_{(…)}`, `s^y_{(…)}`, powers of
/// `q`, integers and parenthesized subexpressions. Unmarked Schur functions
/// live in the y-variables. Whitespace, `~`, `\,` and `\\` are ignored.
pub fn parse_latex(input: &str) -> Result<BiSymFunc> {
    let cleaned: String = input
        .replace("\\\\", "")
        .replace("\\,", "")
        .replace("\\cdot", "")
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '~')
        .collect();
    let mut parser = Parser {
        s: cleaned.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    if parser.pos != parser.s.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(value.to_schur())
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::invalid(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<BiSymFunc> {
        let mut total = BiSymFunc::zero(Basis::Schur);
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            total = if negative { &total - &t } else { &total + &t };
            let mut signed = false;
            negative = false;
            loop {
                if self.eat(b'+') {
                    signed = true;
                } else if self.eat(b'-') {
                    signed = true;
                    negative = !negative;
                } else {
                    break;
                }
            }
            if !signed {
                return Ok(total);
            }
        }
    }

    fn term(&mut self) -> Result<BiSymFunc> {
        let mut value = self.factor()?;
        while matches!(self.peek(), Some(b'(' | b's' | b'q' | b'0'..=b'9')) {
            let next = self.factor()?;
            value = value.multiply(&next);
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<BiSymFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b's') => {
                self.pos += 1;
                let leg = if self.eat(b'^') {
                    match self.peek() {
                        Some(c @ (b'x' | b'y')) => {
                            self.pos += 1;
                            c
                        }
                        _ => return Err(self.error("expected leg x or y")),
                    }
                } else {
                    b'y'
                };
                self.expect(b'_')?;
                self.expect(b'{')?;
                self.expect(b'(')?;
                let mut parts = Vec::new();
                while !self.eat(b')') {
                    parts.push(self.integer()?);
                    self.eat(b',');
                }
                self.expect(b'}')?;
                let p = Partition::from_parts(&parts)?;
                Ok(if leg == b'x' {
                    BiSymFunc::schur(p, Partition::empty())
                } else {
                    BiSymFunc::schur(Partition::empty(), p)
                })
            }
            Some(b'q') => {
                self.pos += 1;
                let exp = if self.eat(b'^') {
                    if self.eat(b'{') {
                        let e = self.integer()?;
                        self.expect(b'}')?;
                        e
                    } else {
                        self.integer()?
                    }
                } else {
                    1
                };
                Ok(BiSymFunc::one().scale(&QPoly::q_pow(exp)))
            }
            Some(b'0'..=b'9') => {
                let c = self.integer()?;
                Ok(BiSymFunc::one().scale(&QPoly::from(c as i64)))
            }
            _ => Err(self.error("unexpected token")),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }
}

/// `QPoly` as a comma-separated list of integer coefficients from `q^0` up.
pub fn coefficient_list(c: &QPoly) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.coeffs()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}
