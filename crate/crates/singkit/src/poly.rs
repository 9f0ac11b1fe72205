//! Sparse multivariate polynomials over an arbitrary coefficient ring,
//! with the term list sorted descending under an attached term order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{CoefficientField, FieldElement, Rational};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::Ring;

/// Ambient data shared by the polynomials of one computation.
#[derive(Clone, Debug)]
pub struct PolyCtx<R: Ring> {
    pub ring: R,
    pub vars: Arc<Vec<String>>,
    pub order: TermOrder,
}

impl<R: Ring> PartialEq for PolyCtx<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.vars == other.vars && self.order == other.order
    }
}

impl<R: Ring> PolyCtx<R> {
    pub fn new(ring: R, vars: Vec<String>, order: TermOrder) -> Self {
        PolyCtx {
            ring,
            vars: Arc::new(vars),
            order,
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Self {
        PolyCtx {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            order,
        }
    }
}

/// Context over a coefficient field, the common case.
pub type FieldCtx = PolyCtx<CoefficientField>;

pub fn field_ctx(field: &CoefficientField, vars: &[&str], order: TermOrder) -> FieldCtx {
    PolyCtx::new(
        field.clone(),
        vars.iter().map(|s| s.to_string()).collect(),
        order,
    )
}

#[derive(Clone, Debug)]
pub struct Polynomial<R: Ring> {
    ctx: PolyCtx<R>,
    /// Sorted strictly descending under `ctx.order`; no zero coefficients.
    terms: Vec<(Monomial, R::Elem)>,
}

pub type FieldPoly = Polynomial<CoefficientField>;

impl<R: Ring> PartialEq for Polynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: Ring> Polynomial<R> {
    pub fn zero(ctx: &PolyCtx<R>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &PolyCtx<R>) -> Self {
        Self::constant(ctx, ctx.ring.one())
    }

    pub fn constant(ctx: &PolyCtx<R>, c: R::Elem) -> Self {
        if ctx.ring.is_zero(&c) {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::one(ctx.nvars()), c)],
        }
    }

    pub fn var(ctx: &PolyCtx<R>, index: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(index, ctx.nvars()), ctx.ring.one())],
        }
    }

    pub fn monomial(ctx: &PolyCtx<R>, m: Monomial, c: R::Elem) -> Self {
        if ctx.ring.is_zero(&c) {
            return Self::zero(ctx);
        }
        debug_assert_eq!(m.nvars(), ctx.nvars());
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(ctx: &PolyCtx<R>, terms: Vec<(Monomial, R::Elem)>) -> Self {
        let mut map: HashMap<Monomial, R::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ctx.nvars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = ctx.ring.add(e.get(), &c);
                    if ctx.ring.is_zero(&s) {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !ctx.ring.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, R::Elem)> = map.into_iter().collect();
        terms.sort_unstable_by(|(a, _), (b, _)| ctx.order.cmp(b, a));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &PolyCtx<R> {
        &self.ctx
    }

    pub fn ring(&self) -> &R {
        &self.ctx.ring
    }

    pub fn terms(&self) -> &[(Monomial, R::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<&R::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree over the support.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Minimal total degree over the support (the vanishing order).
    pub fn order_of_vanishing(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn constant_term(&self) -> R::Elem {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ctx.ring.zero())
    }

    pub fn coefficient_of(&self, m: &Monomial) -> R::Elem {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ctx.ring.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.ctx == other.ctx);
        let ring = &self.ctx.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ctx.order.cmp(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ring.add(&self.terms[i].1, &other.terms[j].1);
                    if !ring.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let ring = &self.ctx.ring;
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = &self.ctx.ring;
        if ring.is_zero(c) {
            return Self::zero(&self.ctx);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, a)| {
                let p = ring.mul(a, c);
                if ring.is_zero(&p) {
                    None
                } else {
                    Some((m.clone(), p))
                }
            })
            .collect();
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Multiply by a single term c*m.
    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let ring = &self.ctx.ring;
        if ring.is_zero(c) {
            return Self::zero(&self.ctx);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, a)| {
                let p = ring.mul(a, c);
                if ring.is_zero(&p) {
                    None
                } else {
                    Some((mm.mul(m), p))
                }
            })
            .collect();
        // multiplying by a monomial preserves the relative order
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.ctx == other.ctx);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let ring = &self.ctx.ring;
        let mut map: HashMap<Monomial, R::Elem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ring.mul(ca, cb);
                if ring.is_zero(&p) {
                    continue;
                }
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = ring.add(e.get(), &p);
                        if ring.is_zero(&s) {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, R::Elem)> = map.into_iter().collect();
        terms.sort_unstable_by(|(a, _), (b, _)| self.ctx.order.cmp(b, a));
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let ring = &self.ctx.ring;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let factor = ring.integer(e as i64);
            let nc = ring.mul(c, &factor);
            if !ring.is_zero(&nc) {
                terms.push((Monomial::new(exps), nc));
            }
        }
        Self::from_terms(&self.ctx, terms)
    }

    /// Drops all terms of total degree >= `bound`.
    pub fn truncate_at_degree(&self, bound: u32) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .cloned()
                .collect(),
        }
    }

    /// Re-sorts the term list under a new order.
    pub fn with_order(&self, order: &TermOrder) -> Self {
        let ctx = self.ctx.with_order(order.clone());
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|(a, _), (b, _)| order.cmp(b, a));
        Polynomial { ctx, terms }
    }

    pub fn map_coefficients<R2: Ring, F>(
        &self,
        ctx2: &PolyCtx<R2>,
        mut f: F,
    ) -> Result<Polynomial<R2>>
    where
        F: FnMut(&R::Elem) -> Result<R2::Elem>,
    {
        debug_assert_eq!(self.ctx.nvars(), ctx2.nvars());
        debug_assert!(self.ctx.order == ctx2.order);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let nc = f(c)?;
            if !ctx2.ring.is_zero(&nc) {
                terms.push((m.clone(), nc));
            }
        }
        Ok(Polynomial {
            ctx: ctx2.clone(),
            terms,
        })
    }

    /// Evaluates the polynomial at polynomial images of its variables.
    /// `images[i]` replaces variable i; coefficients are carried over by
    /// `embed`. Variable powers are cached across terms.
    pub fn substitute<R2: Ring, F>(
        &self,
        ctx2: &PolyCtx<R2>,
        images: &[Polynomial<R2>],
        mut embed: F,
    ) -> Result<Polynomial<R2>>
    where
        F: FnMut(&R::Elem) -> Result<R2::Elem>,
    {
        assert_eq!(images.len(), self.ctx.nvars());
        let mut powers: Vec<Vec<Polynomial<R2>>> = images
            .iter()
            .map(|p| vec![Polynomial::one(ctx2), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(ctx2);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(ctx2, embed(c)?);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Substitution within the same context.
    pub fn substitute_same(&self, images: &[Polynomial<R>]) -> Polynomial<R> {
        self.substitute(&self.ctx, images, |c| Ok(c.clone()))
            .expect("same-ring substitution cannot fail")
    }
}

impl FieldPoly {
    pub fn field(&self) -> &CoefficientField {
        &self.ctx.ring
    }

    pub fn from_rational_terms(ctx: &FieldCtx, terms: Vec<(Monomial, Rational)>) -> Self {
        let lifted = terms
            .into_iter()
            .map(|(m, r)| (m, ctx.ring.from_rational(r)))
            .collect();
        Self::from_terms(ctx, lifted)
    }

    /// Divides by the lead coefficient.
    pub fn monic(&self) -> Result<FieldPoly> {
        match self.lead_coeff() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = self.ctx.ring.inv(lc)?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Rational content: gcd of the numerators over lcm of the denominators
    /// of every rational component, with the sign of the lead coefficient's
    /// first nonzero component.
    pub fn content(&self) -> Option<Rational> {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            for r in c.coeffs() {
                if r.is_zero() {
                    continue;
                }
                num = num.gcd(r.numer());
                den = den.lcm(r.denom());
            }
        }
        if num.is_zero() {
            return None;
        }
        let mut content = Rational::new(num, den);
        let lead_sign = self
            .lead_coeff()
            .and_then(|c| c.coeffs().iter().find(|r| !r.is_zero()).cloned())
            .map(|r| r.is_negative())
            .unwrap_or(false);
        if lead_sign {
            content = -content;
        }
        Some(content)
    }

    /// Divides out the rational content; lead coefficient component positive.
    pub fn primitive(&self) -> FieldPoly {
        match self.content() {
            None => self.clone(),
            Some(c) => {
                let inv = self.ctx.ring.from_rational(c.recip());
                self.scale(&inv)
            }
        }
    }

    /// Promotes coefficients into a larger field.
    pub fn promote(&self, field: &CoefficientField) -> Result<FieldPoly> {
        let ctx2 = PolyCtx {
            ring: field.clone(),
            vars: self.ctx.vars.clone(),
            order: self.ctx.order.clone(),
        };
        self.map_coefficients(&ctx2, |c| field.embed(&self.ctx.ring, c))
    }

    /// Evaluates at a field point (full specialization of all variables).
    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        let field = &self.ctx.ring;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &field.pow(&point[i], e));
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }
}

/// Degree spread deg(f) - deg(lead f); drives Mora reduction.
pub fn ecart<R: Ring>(f: &Polynomial<R>) -> Result<u32> {
    match (f.degree(), f.lead_monomial()) {
        (Some(d), Some(lm)) => Ok(d - lm.degree()),
        _ => Err(Error::ZeroPolynomial),
    }
}

// ---------------------------------------------------------------------------
// Polynomials in parameters as a coefficient ring: x-polynomials whose
// coefficients live in Q[alpha], for ansatz reductions.
// ---------------------------------------------------------------------------

/// A global-order polynomial ring used as a coefficient domain.
#[derive(Clone, Debug)]
pub struct PolyRing {
    pub ctx: FieldCtx,
}

impl PolyRing {
    pub fn new(field: &CoefficientField, vars: Vec<String>) -> Self {
        PolyRing {
            ctx: PolyCtx::new(field.clone(), vars, TermOrder::Degrevlex),
        }
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx
    }
}

impl Ring for PolyRing {
    type Elem = FieldPoly;

    fn zero(&self) -> FieldPoly {
        Polynomial::zero(&self.ctx)
    }
    fn one(&self) -> FieldPoly {
        Polynomial::one(&self.ctx)
    }
    fn is_zero(&self, a: &FieldPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a.add(b)
    }
    fn sub(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a.sub(b)
    }
    fn neg(&self, a: &FieldPoly) -> FieldPoly {
        a.neg()
    }
    fn mul(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a.mul(b)
    }
    fn inv(&self, a: &FieldPoly) -> Result<FieldPoly> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.num_terms() == 1 && a.lead_monomial().unwrap().is_one() {
            let c = self.ctx.ring.inv(a.lead_coeff().unwrap())?;
            return Ok(Polynomial::constant(&self.ctx, c));
        }
        Err(Error::NotInvertible)
    }
    fn integer(&self, n: i64) -> FieldPoly {
        Polynomial::constant(&self.ctx, self.ctx.ring.from_integer(n))
    }
    fn embed_field(&self, field: &CoefficientField, e: &FieldElement) -> Result<FieldPoly> {
        let c = self.ctx.ring.embed(field, e)?;
        Ok(Polynomial::constant(&self.ctx, c))
    }
    fn format_elem(&self, e: &FieldPoly) -> String {
        format!("{e}")
    }
}

/// Exact determinant of a small square matrix of polynomials by Laplace
/// expansion along the first column.
pub(crate) fn poly_matrix_det(rows: &[Vec<FieldPoly>], ctx: &FieldCtx) -> FieldPoly {
    let n = rows.len();
    if n == 0 {
        return Polynomial::one(ctx);
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = Polynomial::zero(ctx);
    for (i, row) in rows.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<FieldPoly>> = rows
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let cofactor = row[0].mul(&poly_matrix_det(&minor, ctx));
        if i % 2 == 0 {
            det = det.add(&cofactor);
        } else {
            det = det.sub(&cofactor);
        }
    }
    det
}


// ---------------------------------------------------------------------------
// Bit-exact printing: terms in descending order, coefficients in lowest
// terms, `*` between factors, exponents with `^`.
// ---------------------------------------------------------------------------

fn format_field_coeff(
    field: &CoefficientField,
    c: &FieldElement,
    mono: &str,
    first: bool,
    out: &mut String,
) {
    let (sign, body) = match c.as_rational() {
        Some(r) => {
            let mag = r.abs();
            let body = if mono == "1" {
                format!("{mag}")
            } else if mag.is_one() {
                mono.to_string()
            } else {
                format!("{mag}*{mono}")
            };
            (r.is_negative(), body)
        }
        None => {
            let inner = field.format_element(c);
            let body = if mono == "1" {
                format!("({inner})")
            } else {
                format!("({inner})*{mono}")
            };
            (false, body)
        }
    };
    if first {
        if sign {
            out.push('-');
        }
    } else if sign {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    out.push_str(&body);
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.format(&self.ctx.vars);
            format_field_coeff(&self.ctx.ring, c, &mono, i == 0, &mut out);
        }
        write!(f, "{out}")
    }
}

impl fmt::Display for Polynomial<PolyRing> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mono = m.format(&self.ctx.vars);
            if mono == "1" {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{mono}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}
