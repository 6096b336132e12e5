//! Text forms of polynomials, field elements and Gaussian elements.
//!
//! Polynomials are `+`-separated monomials such as `x^5+x^4+x^2+1` or
//! `2x^3+x+4`. Field elements of a prime field print as plain integers.
//! Gaussian elements print as `a`, `bj` or `a+bj`; in an extension field a
//! non-constant imaginary part is parenthesized, as in `x^2+1+(2x)j`.
//! Whitespace is ignored when parsing.

use crate::error::{Error, Result};
use crate::gaussian::{GaussianElement, GaussianField};
use crate::gf::{Field, FieldElement};

/// Renders a polynomial (low degree first) highest degree first.
pub fn render_poly(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match (d, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

pub fn render_element(x: &FieldElement) -> String {
    if x.field().degree() == 1 {
        x.coeffs()[0].to_string()
    } else {
        render_poly(x.coeffs())
    }
}

pub fn render_gaussian(x: &GaussianElement) -> String {
    if x.im().is_zero() {
        return render_element(x.re());
    }
    let im = x.im();
    let constant = im.coeffs()[1..].iter().all(|&c| c == 0);
    let im_text = match im.coeffs()[0] {
        1 if constant => "j".to_string(),
        c if constant => format!("{c}j"),
        _ => format!("({})j", render_poly(im.coeffs())),
    };
    if x.re().is_zero() {
        im_text
    } else {
        format!("{}+{}", render_element(x.re()), im_text)
    }
}

/// Comma-separated rendering of a vector of Gaussian elements.
pub fn render_vector(values: &[GaussianElement]) -> String {
    values
        .iter()
        .map(render_gaussian)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a polynomial over GF(p), returning coefficients low degree first
/// with trailing zeros trimmed.
pub fn parse_poly(text: &str, p: u64) -> Result<Vec<u64>> {
    let mut cur = Cursor::new(text);
    let poly = cur.poly(p)?;
    cur.finish()?;
    Ok(poly)
}

pub fn parse_element(text: &str, field: &Field) -> Result<FieldElement> {
    let coeffs = parse_poly(text, field.characteristic())?;
    fit(coeffs, field, 0)
}

pub fn parse_gaussian(text: &str, gi: &GaussianField) -> Result<GaussianElement> {
    let mut cur = Cursor::new(text);
    let p = gi.base().characteristic();
    let (mut re, mut im) = (Vec::new(), Vec::new());
    loop {
        let (poly, imaginary) = cur.gaussian_term(p)?;
        let target = if imaginary { &mut im } else { &mut re };
        add_into(target, &poly, p);
        if !cur.eat('+') {
            break;
        }
    }
    cur.finish()?;
    gi.element(fit(re, gi.base(), 0)?, fit(im, gi.base(), 0)?)
}

/// Parses `a+bj,c,dj,...`; an empty string is an empty vector.
pub fn parse_vector(text: &str, gi: &GaussianField) -> Result<Vec<GaussianElement>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let value = parse_gaussian(piece, gi).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            other => other,
        })?;
        out.push(value);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn add_into(acc: &mut Vec<u64>, poly: &[u64], p: u64) {
    if acc.len() < poly.len() {
        acc.resize(poly.len(), 0);
    }
    for (a, &b) in acc.iter_mut().zip(poly) {
        *a = (*a + b) % p;
    }
}

fn fit(mut coeffs: Vec<u64>, field: &Field, position: usize) -> Result<FieldElement> {
    crate::poly::trim(&mut coeffs);
    if coeffs.len() > field.degree() {
        return Err(Error::Parse {
            position,
            message: format!(
                "degree {} is too large for an element of {field}",
                coeffs.len() - 1
            ),
        });
    }
    field.from_coeffs(&coeffs)
}

struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        Cursor {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            at: 0,
            len: text.len(),
        }
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.position(),
            message: message.into(),
        })
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }

    fn number(&mut self) -> Result<Option<u64>> {
        let start = self.position();
        let mut value: Option<u64> = None;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            let next = value
                .unwrap_or(0)
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64));
            match next {
                Some(v) => value = Some(v),
                None => {
                    return Err(Error::Parse {
                        position: start,
                        message: "number too large".into(),
                    })
                }
            }
            self.at += 1;
        }
        Ok(value)
    }

    /// `[c][*]x[^d]` or `c`; returns (coefficient, degree).
    fn monomial(&mut self, p: u64) -> Result<(u64, usize)> {
        let start = self.at;
        let coeff = self.number()?;
        if let Some(c) = coeff {
            if c >= p {
                return Err(Error::OutOfRangeCoefficient { value: c, p });
            }
        }
        let starred = coeff.is_some() && self.eat('*');
        if self.eat('x') {
            let degree = if self.eat('^') {
                match self.number()? {
                    Some(d) => usize::try_from(d).or_else(|_| self.error("degree too large"))?,
                    None => return self.error("expected a degree after '^'"),
                }
            } else {
                1
            };
            Ok((coeff.unwrap_or(1), degree))
        } else if starred {
            self.error("expected 'x' after '*'")
        } else if let Some(c) = coeff {
            Ok((c, 0))
        } else {
            self.at = start;
            match self.peek() {
                Some(c) => self.error(format!("unexpected '{c}'")),
                None => self.error("unexpected end of input"),
            }
        }
    }

    fn poly(&mut self, p: u64) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        loop {
            let (c, d) = self.monomial(p)?;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] = (out[d] + c) % p;
            if !self.eat('+') {
                break;
            }
        }
        crate::poly::trim(&mut out);
        Ok(out)
    }

    /// One `+`-separated term of a Gaussian element: `(poly)`, `(poly)j`,
    /// `j`, a monomial, or a monomial followed by `j`.
    fn gaussian_term(&mut self, p: u64) -> Result<(Vec<u64>, bool)> {
        if self.eat('(') {
            let poly = self.poly(p)?;
            if !self.eat(')') {
                return self.error("expected ')'");
            }
            return Ok((poly, self.eat('j')));
        }
        if self.eat('j') {
            return Ok((vec![1], true));
        }
        let (c, d) = self.monomial(p)?;
        let mut poly = vec![0; d + 1];
        poly[d] = c;
        crate::poly::trim(&mut poly);
        Ok((poly, self.eat('j')))
    }
}
