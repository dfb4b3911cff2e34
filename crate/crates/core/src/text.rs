//! Text forms of elements, Laurent polynomials and automorphisms.
//!
//! ```text
//! element  := term (("+" | "-") term)*
//! term     := [rational] ["*"] [monomial] gen
//! monomial := "x^" (int | "(" int ("," int)* ")")
//! gen      := "H" [index] | "d" [index]
//! ```
//!
//! `d_j` is read as `∂_j = x^{-e_j} H_j`. A Virasoro element may also use
//! the generator `c`. Laurent polynomials accept `x^(a,b)` monomials as well
//! as products of powers of `x1, …, xn` (or plain `x` when `n = 1`).
//!
//! Printing is canonical: terms sorted by exponent then generator index, a
//! coefficient of 1 omitted, exponents written `x^k` for `n = 1` and
//! `x^(a,b)` otherwise, and `0` for the zero element.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::autgrp::{decompose_ring_map, Automorphism};
use crate::error::{Error, Result};
use crate::kernel::{IntMatrix, MIndex, RatMatrix, Scalar};
use crate::laurent::Laurent;
use crate::virasoro::VirElement;
use crate::witt::WittElement;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// The next character with no whitespace skipping.
    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        self.skip_ws();
        for c in s.chars() {
            if self.peek_raw() != Some(c) {
                return self.err(format!("expected '{s}'"));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().expect("digits"))
    }

    fn unsigned_rational(&mut self) -> Result<Option<Scalar>> {
        self.skip_ws();
        let Some(p) = self.digits() else { return Ok(None) };
        if self.peek_raw() == Some('/') {
            self.pos += 1;
            let Some(q) = self.digits() else { return self.err("expected denominator") };
            if q.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Some(Scalar::new(p, q)));
        }
        Ok(Some(Scalar::from_integer(p)))
    }

    fn rational(&mut self) -> Result<Scalar> {
        let neg = self.eat('-');
        match self.unsigned_rational()? {
            Some(r) if neg => Ok(-r),
            Some(r) => Ok(r),
            None => self.err("expected rational number"),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.peek_raw() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let Some(v) = self.digits() else { return self.err("expected integer") };
        let v = if neg { -v } else { v };
        i64::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    /// An optional 1-based index written directly after a letter.
    fn index(&mut self) -> Result<Option<usize>> {
        let start = self.pos;
        match self.digits() {
            None => Ok(None),
            Some(v) => usize::try_from(v).map(Some).or_else(|_| {
                self.pos = start;
                self.err("index out of range")
            }),
        }
    }

    fn int_tuple(&mut self) -> Result<Vec<i64>> {
        self.expect('(')?;
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    /// `"x^" (int | tuple)`, or bare `x` meaning exponent 1. The cursor must
    /// sit right after the `x`.
    fn exponent(&mut self) -> Result<Vec<i64>> {
        if self.peek_raw() != Some('^') {
            return Ok(vec![1]);
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek_raw() == Some('(') {
            self.int_tuple()
        } else {
            Ok(vec![self.int()?])
        }
    }

    /// Term sign handling shared by every additive grammar: returns the
    /// sign of the next term, or `None` at the end of the sum.
    fn term_sign(&mut self, first: bool) -> Result<Option<Scalar>> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Ok(Some(Scalar::one()))
            }
            Some('-') => {
                self.pos += 1;
                Ok(Some(-Scalar::one()))
            }
            Some(_) if first => Ok(Some(Scalar::one())),
            _ => Ok(None),
        }
    }

    fn coefficient(&mut self, sign: Scalar) -> Result<(Scalar, bool)> {
        let c = self.unsigned_rational()?;
        let explicit = c.is_some();
        let star = self.eat('*');
        if star && !explicit {
            return self.err("'*' without a coefficient");
        }
        Ok((sign * c.unwrap_or_else(Scalar::one), explicit))
    }
}

fn check_len(alpha: Vec<i64>, n: usize, at: usize) -> Result<MIndex> {
    if alpha.len() != n {
        return Err(Error::Parse {
            pos: at,
            msg: format!("monomial has {} exponents, expected {n}", alpha.len()),
        });
    }
    Ok(MIndex::new(alpha))
}

enum Gen {
    H(usize),
    D(usize),
    C,
}

fn parse_gen(cur: &mut Cursor, n: usize, allow_c: bool) -> Result<Gen> {
    let at = {
        cur.skip_ws();
        cur.pos
    };
    let kind = match cur.peek_raw() {
        Some('H') => 'H',
        Some('d') => 'd',
        Some('c') if allow_c => {
            cur.pos += 1;
            return Ok(Gen::C);
        }
        _ => return cur.err(if allow_c { "expected generator H, d or c" } else { "expected generator H or d" }),
    };
    cur.pos += 1;
    let j = match cur.index()? {
        Some(j) => j,
        None if n == 1 => 1,
        None => {
            return Err(Error::Parse { pos: at, msg: "generator index required when n > 1".into() });
        }
    };
    if j == 0 || j > n {
        return Err(Error::Parse { pos: at, msg: format!("generator index {j} out of range 1..={n}") });
    }
    Ok(if kind == 'H' { Gen::H(j - 1) } else { Gen::D(j - 1) })
}

/// Parses the sum into `(α, generator, coefficient)` triples; `None` for the
/// generator marks the central element.
fn parse_sum(text: &str, n: usize, allow_c: bool) -> Result<Vec<(MIndex, Option<usize>, Scalar)>> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    if cur.at_end() {
        return cur.err("empty expression");
    }
    let mut first = true;
    while let Some(sign) = cur.term_sign(first)? {
        if first && cur.peek() == Some('0') {
            // the zero element
            let save = cur.pos;
            cur.pos += 1;
            if cur.at_end() {
                return Ok(out);
            }
            cur.pos = save;
        }
        first = false;
        let (coeff, _) = cur.coefficient(sign)?;
        cur.skip_ws();
        let mono_at = cur.pos;
        let alpha = if cur.peek_raw() == Some('x') {
            cur.pos += 1;
            let e = cur.exponent()?;
            Some(e)
        } else {
            None
        };
        let gen = parse_gen(&mut cur, n, allow_c)?;
        let alpha = match alpha {
            Some(e) => check_len(e, n, mono_at)?,
            None => MIndex::zeros(n),
        };
        match gen {
            Gen::H(j) => out.push((alpha, Some(j), coeff)),
            Gen::D(j) => out.push((&alpha - &MIndex::unit(n, j), Some(j), coeff)),
            Gen::C if alpha.is_zero() => out.push((alpha, None, coeff)),
            Gen::C => return Err(Error::Parse { pos: mono_at, msg: "the central element takes no monomial".into() }),
        }
    }
    cur.finish()?;
    Ok(out)
}

pub fn parse_witt(text: &str, n: usize) -> Result<WittElement> {
    if n == 0 {
        return Err(Error::UnsupportedDimension { n });
    }
    let mut w = WittElement::zero(n);
    for (alpha, j, c) in parse_sum(text, n, false)? {
        w.add_term(alpha, j.expect("no central generator"), &c);
    }
    Ok(w)
}

pub fn parse_vir(text: &str) -> Result<VirElement> {
    let mut w = WittElement::zero(1);
    let mut z = Scalar::zero();
    for (alpha, j, c) in parse_sum(text, 1, true)? {
        match j {
            Some(j) => w.add_term(alpha, j, &c),
            None => z += c,
        }
    }
    VirElement::new(w, z)
}

/// Reads a monomial factor list, multiplying into `alpha`. Returns whether any
/// factor was read.
fn laurent_factors(cur: &mut Cursor, n: usize, alpha: &mut MIndex) -> Result<bool> {
    let mut any = false;
    loop {
        cur.skip_ws();
        if any && cur.peek_raw() == Some('*') {
            cur.pos += 1;
            cur.skip_ws();
            if cur.peek_raw() != Some('x') {
                return cur.err("expected variable after '*'");
            }
        }
        if cur.peek_raw() != Some('x') {
            return Ok(any);
        }
        let at = cur.pos;
        cur.pos += 1;
        let factor = match cur.index()? {
            Some(i) if i == 0 || i > n => {
                return Err(Error::Parse { pos: at, msg: format!("variable index {i} out of range 1..={n}") })
            }
            Some(i) => {
                let e = cur.exponent()?;
                if e.len() != 1 {
                    return Err(Error::Parse { pos: at, msg: "a single variable takes one exponent".into() });
                }
                MIndex::unit(n, i - 1).scale(e[0])
            }
            None => {
                let e = cur.exponent()?;
                if e.len() == 1 && n > 1 && cur.chars.get(at + 1) != Some(&'^') {
                    return Err(Error::Parse { pos: at, msg: "variable index required when n > 1".into() });
                }
                check_len(e, n, at)?
            }
        };
        *alpha = &*alpha + &factor;
        any = true;
    }
}

fn parse_laurent_at(cur: &mut Cursor, n: usize) -> Result<Laurent> {
    let mut p = Laurent::zero(n);
    let mut first = true;
    loop {
        if !first && !matches!(cur.peek(), Some('+') | Some('-')) {
            break;
        }
        let Some(sign) = cur.term_sign(first)? else { break };
        first = false;
        let (coeff, explicit) = cur.coefficient(sign)?;
        let mut alpha = MIndex::zeros(n);
        let any = laurent_factors(cur, n, &mut alpha)?;
        if !explicit && !any {
            return cur.err("expected coefficient or monomial");
        }
        p.add_term(alpha, &coeff);
    }
    Ok(p)
}

pub fn parse_laurent(text: &str, n: usize) -> Result<Laurent> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return cur.err("empty expression");
    }
    let p = parse_laurent_at(&mut cur, n)?;
    cur.finish()?;
    Ok(p)
}

/// `"x1 -> f1, x2 -> f2, …"`; returns the images ordered by variable.
pub fn parse_ring_map(text: &str, n: usize) -> Result<Vec<Laurent>> {
    let mut cur = Cursor::new(text);
    let mut images: Vec<Option<Laurent>> = vec![None; n];
    loop {
        cur.skip_ws();
        let at = cur.pos;
        if cur.peek_raw() != Some('x') {
            return cur.err("expected variable");
        }
        cur.pos += 1;
        let i = match cur.index()? {
            Some(i) => i,
            None if n == 1 => 1,
            None => return Err(Error::Parse { pos: at, msg: "variable index required when n > 1".into() }),
        };
        if i == 0 || i > n {
            return Err(Error::Parse { pos: at, msg: format!("variable index {i} out of range 1..={n}") });
        }
        cur.expect_str("->")?;
        let img = parse_laurent_at(&mut cur, n)?;
        if images[i - 1].replace(img).is_some() {
            return Err(Error::Parse { pos: at, msg: format!("variable x{i} assigned twice") });
        }
        if !cur.eat(',') {
            break;
        }
    }
    cur.finish()?;
    images
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::Parse { pos: text.len(), msg: format!("no image given for x{}", i + 1) }))
        .collect()
}

pub fn parse_int_matrix(text: &str) -> Result<IntMatrix> {
    let mut cur = Cursor::new(text);
    let m = int_matrix_at(&mut cur)?;
    cur.finish()?;
    Ok(m)
}

fn int_matrix_at(cur: &mut Cursor) -> Result<IntMatrix> {
    let at = cur.pos;
    cur.expect('[')?;
    let mut rows = Vec::new();
    loop {
        cur.expect('[')?;
        let mut row = vec![cur.int()?];
        while cur.eat(',') {
            row.push(cur.int()?);
        }
        cur.expect(']')?;
        rows.push(row);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    IntMatrix::from_rows(rows).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })
}

/// `"[[a,b],[c,d]]"` with rational entries; rows need not be square.
pub fn parse_rat_matrix(text: &str) -> Result<RatMatrix> {
    let mut cur = Cursor::new(text);
    cur.expect('[')?;
    let mut rows = Vec::new();
    loop {
        let at = cur.pos;
        cur.expect('[')?;
        let mut row = vec![cur.rational()?];
        while cur.eat(',') {
            row.push(cur.rational()?);
        }
        cur.expect(']')?;
        if rows.first().is_some_and(|r: &Vec<Scalar>| r.len() != row.len()) {
            return Err(Error::Parse { pos: at, msg: "rows have different lengths".into() });
        }
        rows.push(row);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    cur.finish()?;
    RatMatrix::from_rows(rows)
}

/// A comma-separated rational list, optionally parenthesised.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    let mut cur = Cursor::new(text);
    let paren = cur.eat('(');
    let mut out = vec![cur.rational()?];
    while cur.eat(',') {
        out.push(cur.rational()?);
    }
    if paren {
        cur.expect(')')?;
    }
    cur.finish()?;
    Ok(out)
}

/// `"A=[[…]] lambda=(…)"` or a ring map such as `"x1 -> 5 x2, x2 -> 7 x1"`.
pub fn parse_automorphism(text: &str, n: usize) -> Result<Automorphism> {
    if text.contains("->") {
        let images = parse_ring_map(text, n)?;
        return decompose_ring_map(&images);
    }
    let mut cur = Cursor::new(text);
    cur.expect_str("A")?;
    cur.expect('=')?;
    let a = int_matrix_at(&mut cur)?;
    cur.expect_str("lambda")?;
    cur.expect('=')?;
    cur.expect('(')?;
    let mut lambda = vec![cur.rational()?];
    while cur.eat(',') {
        lambda.push(cur.rational()?);
    }
    cur.expect(')')?;
    cur.finish()?;
    if a.dim() != n || lambda.len() != n {
        return Err(Error::DimensionError { expected: n, found: if a.dim() != n { a.dim() } else { lambda.len() } });
    }
    Automorphism::new(a, lambda)
}

fn write_monomial(out: &mut String, alpha: &MIndex) {
    if alpha.is_zero() {
        return;
    }
    if alpha.dim() == 1 {
        write!(out, "x^{}", alpha[0]).unwrap();
    } else {
        write!(out, "x^{alpha}").unwrap();
    }
}

/// Joins `(coefficient, body)` terms; an empty body stands for a constant.
fn write_sum(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (Scalar, String)>) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if body.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{mag} {body}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn witt_terms(w: &WittElement) -> Vec<(Scalar, String)> {
    let n = w.dim();
    let mut out = Vec::new();
    for (alpha, coeffs) in w.terms() {
        for (j, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mut body = String::new();
            write_monomial(&mut body, alpha);
            if !body.is_empty() {
                body.push(' ');
            }
            if n == 1 {
                body.push('H');
            } else {
                write!(body, "H{}", j + 1).unwrap();
            }
            out.push((c.clone(), body));
        }
    }
    out
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, witt_terms(self).into_iter())
    }
}

impl fmt::Display for VirElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = witt_terms(self.witt_part());
        if !self.central().is_zero() {
            terms.push((self.central().clone(), "c".into()));
        }
        write_sum(f, terms.into_iter())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms().map(|(alpha, c)| {
                let mut body = String::new();
                write_monomial(&mut body, alpha);
                (c.clone(), body)
            }),
        )
    }
}

/// `"x1 -> f1, x2 -> f2"`, or `"x -> f"` when `n = 1`.
pub fn format_ring_map(images: &[Laurent]) -> String {
    let n = images.len();
    images
        .iter()
        .enumerate()
        .map(|(i, p)| if n == 1 { format!("x -> {p}") } else { format!("x{} -> {p}", i + 1) })
        .collect::<Vec<_>>()
        .join(", ")
}
