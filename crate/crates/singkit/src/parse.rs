//! Parsing of polynomial expressions, ideal files and map files.
//!
//! Grammar: integers and rationals `a/b`, declared variables, `theta` when
//! an extension is active, `+ - * ^`, parentheses. Juxtaposition such as
//! `x^2y^3` multiplies implicitly.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{uni_deg, uni_trim, CoefficientField, Rational};
use crate::ideal::Ideal;
use crate::iso::AlgebraMap;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{FieldCtx, FieldPoly, PolyCtx, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::SyntaxError(i, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        len: text.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, label: &str) -> Result<()> {
        let at = self.here();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::SyntaxError(at, format!("expected {label}"))),
        }
    }
}

struct Parser<'a> {
    lx: Lexer,
    ctx: &'a FieldCtx,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<FieldPoly> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.lx.peek() {
            self.lx.next();
            negate = true;
        } else if let Some(Tok::Plus) = self.lx.peek() {
            self.lx.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.lx.peek() {
                Some(Tok::Plus) => {
                    self.lx.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.lx.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.lx.peek() {
                Some(Tok::Star) => {
                    self.lx.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                // juxtaposition: x^2y^3, 2x, 3(x+y)
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FieldPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.lx.peek() {
            self.lx.next();
            let at = self.lx.here();
            match self.lx.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::SyntaxError(at, "exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::SyntaxError(at, "expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldPoly> {
        let at = self.lx.here();
        match self.lx.next() {
            Some(Tok::Int(n)) => {
                // optional /d immediately after an integer literal
                if let Some(Tok::Slash) = self.lx.peek() {
                    self.lx.next();
                    let at2 = self.lx.here();
                    match self.lx.next() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::SyntaxError(at2, "zero denominator".into()));
                            }
                            let r = Rational::new(n, d);
                            Ok(Polynomial::constant(self.ctx, self.ctx.ring.from_rational(r)))
                        }
                        _ => Err(Error::SyntaxError(at2, "expected denominator".into())),
                    }
                } else {
                    let r = Rational::from(n);
                    Ok(Polynomial::constant(self.ctx, self.ctx.ring.from_rational(r)))
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ctx, i)),
                None if name == "theta" => {
                    let g = self
                        .ctx
                        .ring
                        .generator()
                        .map_err(|_| Error::UnknownVariable("theta".into()))?;
                    Ok(Polynomial::constant(self.ctx, g))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.lx.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Minus) => {
                let a = self.atom()?;
                Ok(a.neg())
            }
            _ => Err(Error::SyntaxError(at, "expected a factor".into())),
        }
    }
}

/// Parses a polynomial in the given context (variables, field, order).
pub fn parse_polynomial(text: &str, ctx: &FieldCtx) -> Result<FieldPoly> {
    let lx = lex(text)?;
    let mut p = Parser { lx, ctx };
    let poly = p.expr()?;
    if p.lx.peek().is_some() {
        return Err(Error::SyntaxError(p.lx.here(), "trailing input".into()));
    }
    Ok(poly)
}

/// Parses `theta^2 + 1386/6089`-style modulus text into little-endian
/// rational coefficients.
pub fn parse_minpoly(text: &str) -> Result<Vec<Rational>> {
    let q = CoefficientField::rationals();
    let ctx = PolyCtx::new(q, vec!["theta".to_string()], TermOrder::Degrevlex);
    let poly = parse_polynomial(text, &ctx)?;
    let deg = poly.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::from(BigInt::from(0)); deg + 1];
    for (m, c) in poly.terms() {
        coeffs[m.exp(0) as usize] = c.as_rational().expect("rational base").clone();
    }
    uni_trim(&mut coeffs);
    if uni_deg(&coeffs).is_none() || !coeffs[uni_deg(&coeffs).unwrap()].is_one() {
        return Err(Error::NotMonic);
    }
    Ok(coeffs)
}

fn parse_order_name(name: &str, line: usize) -> Result<TermOrder> {
    match name.trim() {
        "local" => Ok(TermOrder::LocalDegrevlex),
        "global" => Ok(TermOrder::Degrevlex),
        "lex" => Ok(TermOrder::Lex),
        other => Err(Error::SyntaxError(
            line,
            format!("unknown order `{other}` (expected local|global|lex)"),
        )),
    }
}

pub fn order_name(order: &TermOrder) -> &'static str {
    match order {
        TermOrder::LocalDegrevlex => "local",
        TermOrder::Degrevlex => "global",
        TermOrder::Lex => "lex",
        TermOrder::Block { .. } => "block",
    }
}

/// Ideal file: `vars:`, `order:`, optional `minpoly:`, then one generator
/// per line. `#` starts a comment.
pub fn parse_ideal_file(text: &str) -> Result<Ideal> {
    let mut vars: Option<Vec<String>> = None;
    let mut order = TermOrder::LocalDegrevlex;
    let mut field = CoefficientField::rationals();
    let mut gens_src: Vec<(usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            vars = Some(
                rest.split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect(),
            );
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = parse_order_name(rest, lineno)?;
        } else if let Some(rest) = line.strip_prefix("minpoly:") {
            field = CoefficientField::extension(parse_minpoly(rest)?)?;
        } else {
            gens_src.push((lineno, line.to_string()));
        }
    }
    let vars = vars.ok_or_else(|| Error::SyntaxError(0, "missing `vars:` header".into()))?;
    let ctx = PolyCtx::new(field, vars, order);
    let mut gens = Vec::new();
    for (lineno, src) in gens_src {
        let g = parse_polynomial(&src, &ctx)
            .map_err(|e| annotate_line(e, lineno))?;
        gens.push(g);
    }
    Ok(Ideal::new(&ctx, gens))
}

fn annotate_line(e: Error, lineno: usize) -> Error {
    match e {
        Error::SyntaxError(col, msg) => {
            Error::SyntaxError(col, format!("line {}: {msg}", lineno + 1))
        }
        other => other,
    }
}

/// Renders an ideal in the file format it is parsed from.
pub fn format_ideal_file(ideal: &Ideal) -> String {
    let ctx = ideal.ctx();
    let mut out = String::new();
    out.push_str(&format!("vars: {}\n", ctx.vars.join(",")));
    out.push_str(&format!("order: {}\n", order_name(&ctx.order)));
    if let Some(m) = ctx.ring.minpoly() {
        out.push_str(&format!("minpoly: {}\n", crate::field::uni_format(m, "theta")));
    }
    for g in ideal.gens() {
        out.push_str(&format!("{g}\n"));
    }
    out
}

/// Map file: `source_vars:`, `target_vars:`, optional `order:`/`minpoly:`,
/// then `s -> image` lines.
pub fn parse_map_file(text: &str) -> Result<AlgebraMap> {
    let mut source_vars: Option<Vec<String>> = None;
    let mut target_vars: Option<Vec<String>> = None;
    let mut order = TermOrder::LocalDegrevlex;
    let mut field = CoefficientField::rationals();
    let mut assignments: Vec<(usize, String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("source_vars:") {
            source_vars = Some(rest.split(',').map(|s| s.trim().to_string()).collect());
        } else if let Some(rest) = line.strip_prefix("target_vars:") {
            target_vars = Some(rest.split(',').map(|s| s.trim().to_string()).collect());
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = parse_order_name(rest, lineno)?;
        } else if let Some(rest) = line.strip_prefix("minpoly:") {
            field = CoefficientField::extension(parse_minpoly(rest)?)?;
        } else if let Some((lhs, rhs)) = line.split_once("->") {
            assignments.push((lineno, lhs.trim().to_string(), rhs.trim().to_string()));
        } else {
            return Err(Error::SyntaxError(lineno, format!("cannot parse `{line}`")));
        }
    }
    let source_vars =
        source_vars.ok_or_else(|| Error::SyntaxError(0, "missing `source_vars:`".into()))?;
    let target_vars =
        target_vars.ok_or_else(|| Error::SyntaxError(0, "missing `target_vars:`".into()))?;
    let target_ctx = PolyCtx::new(field.clone(), target_vars, order);
    let mut images: Vec<Option<FieldPoly>> = vec![None; source_vars.len()];
    for (lineno, lhs, rhs) in assignments {
        let idx = source_vars
            .iter()
            .position(|v| *v == lhs)
            .ok_or_else(|| Error::UnknownVariable(lhs.clone()))?;
        let img = parse_polynomial(&rhs, &target_ctx).map_err(|e| annotate_line(e, lineno))?;
        images[idx] = Some(img);
    }
    let images: Vec<FieldPoly> = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| img.ok_or_else(|| Error::UnknownVariable(source_vars[i].clone())))
        .collect::<Result<_>>()?;
    AlgebraMap::new(source_vars, &target_ctx, images)
}

/// A monomial written in the polynomial grammar, e.g. `x^2*y`.
pub fn parse_monomial(text: &str, ctx: &FieldCtx) -> Result<Monomial> {
    let p = parse_polynomial(text, ctx)?;
    if p.num_terms() != 1 || !p.lead_coeff().map_or(false, |c| c == &ctx.ring.one()) {
        return Err(Error::SyntaxError(0, format!("`{text}` is not a monomial")));
    }
    Ok(p.lead_monomial().unwrap().clone())
}
