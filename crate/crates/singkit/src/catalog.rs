//! Singularity data: T-series constructors with their degeneracy gaps,
//! the catalog of exceptional unimodal normal forms with Tjurina bases and
//! modular-stratum equations, Hesse forms, miniversal deformations and the
//! one-parameter splitting families.

use crate::algebra::{milnor_number, tjurina_algebra, tjurina_number, Dim, LocalAlgebra};
use crate::error::{Error, Result};
use crate::field::{CoefficientField, FieldElement, Rational};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::modular::{subseries_profile, SubseriesProfile};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::stdbasis::standard_basis;
use crate::poly::{field_ctx, poly_matrix_det, FieldCtx, FieldPoly, PolyCtx, Polynomial};

const CATALOG_TEXT: &str = include_str!("data/catalog.txt");

// ---------------------------------------------------------------------------
// T-series.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum TSeriesClass {
    Parabolic,
    Hyperbolic(SubseriesProfile),
}

/// Classifies sorted indices p >= q >= r >= 2 with 1/p + 1/q + 1/r <= 1.
pub fn classify_tseries(p: u32, q: u32, r: u32) -> Result<TSeriesClass> {
    if !(p >= q && q >= r && r >= 2) {
        return Err(Error::IndexOutOfRange(p, q, r));
    }
    let lhs = (q * r + p * r + p * q) as u64;
    let rhs = (p * q * r) as u64;
    if lhs > rhs {
        return Err(Error::IndexOutOfRange(p, q, r));
    }
    if lhs == rhs {
        Ok(TSeriesClass::Parabolic)
    } else {
        Ok(TSeriesClass::Hyperbolic(subseries_profile(p, q, r)?))
    }
}

fn degenerate_parabolic(p: u32, q: u32, r: u32, lambda: &FieldElement, field: &CoefficientField) -> bool {
    // gaps: (3,3,3) lambda^3 = -27, (4,4,2) lambda^4 = 64, (6,3,2)
    // lambda^6 = 432
    let (power, value) = match (p, q, r) {
        (3, 3, 3) => (3, -27i64),
        (4, 4, 2) => (4, 64),
        (6, 3, 2) => (6, 432),
        _ => unreachable!("only three parabolic triples exist"),
    };
    field.pow(lambda, power) == field.from_integer(value)
}

/// x^p + y^q + z^r + lambda x y z over the given field, rejecting
/// out-of-range indices, the parabolic lambda-gaps, and lambda = 0 on
/// hyperbolic triples (where the germ leaves the T-class).
pub fn t_series_in(
    field: &CoefficientField,
    p: u32,
    q: u32,
    r: u32,
    lambda: &FieldElement,
) -> Result<FieldPoly> {
    let class = classify_tseries(p, q, r)?;
    match class {
        TSeriesClass::Parabolic => {
            if degenerate_parabolic(p, q, r, lambda, field) {
                return Err(Error::DegenerateLambda(p, q, r));
            }
        }
        TSeriesClass::Hyperbolic(_) => {
            if lambda.is_zero() {
                return Err(Error::DegenerateLambda(p, q, r));
            }
        }
    }
    let ctx = field_ctx(field, &["x", "y", "z"], TermOrder::LocalDegrevlex);
    let terms = vec![
        (Monomial::new(vec![p, 0, 0]), field.one()),
        (Monomial::new(vec![0, q, 0]), field.one()),
        (Monomial::new(vec![0, 0, r]), field.one()),
        (Monomial::new(vec![1, 1, 1]), lambda.clone()),
    ];
    Ok(Polynomial::from_terms(&ctx, terms))
}

pub fn t_series(p: u32, q: u32, r: u32, lambda: &Rational) -> Result<FieldPoly> {
    let field = CoefficientField::rationals();
    let l = field.from_rational(lambda.clone());
    t_series_in(&field, p, q, r, &l)
}

/// y^q + z^r + xyz, the non-isolated limit of a sub-series.
pub fn limit_singularity(q: u32, r: u32) -> FieldPoly {
    assert!(q >= 2 && r >= 2);
    let field = CoefficientField::rationals();
    let ctx = field_ctx(&field, &["x", "y", "z"], TermOrder::LocalDegrevlex);
    Polynomial::from_terms(
        &ctx,
        vec![
            (Monomial::new(vec![0, q, 0]), field.one()),
            (Monomial::new(vec![0, 0, r]), field.one()),
            (Monomial::new(vec![1, 1, 1]), field.one()),
        ],
    )
}

/// The six sub-series (q, r) -> leading index l of Prop-style splitting
/// families.
fn subseries_leading_index(q: u32, r: u32) -> Option<u32> {
    match (q, r) {
        (3, 3) => Some(4),
        (4, 2) => Some(5),
        (4, 4) => Some(3),
        (3, 2) => Some(7),
        (6, 2) => Some(4),
        (6, 3) => Some(3),
        _ => None,
    }
}

/// f_t = x^{l-1} (x+t)^{k-l+1} + y^q + z^r + xyz as a polynomial in
/// (x, y, z, t), exact binomial expansion.
pub fn splitting_family(k: u32, l: u32, q: u32, r: u32) -> Result<FieldPoly> {
    match subseries_leading_index(q, r) {
        Some(expected) if expected == l && k >= l => {}
        _ => return Err(Error::NotASubseries(k, l, q, r)),
    }
    let field = CoefficientField::rationals();
    let ctx = field_ctx(&field, &["x", "y", "z", "t"], TermOrder::LocalDegrevlex);
    let x = Polynomial::var(&ctx, 0);
    let t = Polynomial::var(&ctx, 3);
    let branch = x.pow(l - 1).mul(&x.add(&t).pow(k - l + 1));
    let rest = Polynomial::from_terms(
        &ctx,
        vec![
            (Monomial::new(vec![0, q, 0, 0]), field.one()),
            (Monomial::new(vec![0, 0, r, 0]), field.one()),
            (Monomial::new(vec![1, 1, 1, 0]), field.one()),
        ],
    );
    Ok(branch.add(&rest))
}

/// The fiber of the splitting family at an exact parameter value, in
/// (x, y, z).
pub fn splitting_fiber(k: u32, l: u32, q: u32, r: u32, t: &Rational) -> Result<FieldPoly> {
    let family = splitting_family(k, l, q, r)?;
    let field = CoefficientField::rationals();
    let ctx = field_ctx(&field, &["x", "y", "z"], TermOrder::LocalDegrevlex);
    let images = vec![
        Polynomial::var(&ctx, 0),
        Polynomial::var(&ctx, 1),
        Polynomial::var(&ctx, 2),
        Polynomial::constant(&ctx, field.from_rational(t.clone())),
    ];
    family.substitute(&ctx, &images, |c| Ok(c.clone()))
}

// ---------------------------------------------------------------------------
// Hesse forms and quasihomogeneity.
// ---------------------------------------------------------------------------

/// Determinant of the Hessian matrix, expanded exactly.
pub fn hesse_form(f: &FieldPoly) -> FieldPoly {
    let n = f.ctx().nvars();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let di = f.derivative(i);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(di.derivative(j));
        }
        rows.push(row);
    }
    poly_matrix_det(&rows, f.ctx())
}

/// f0 + lambda * hesse_form(f0).
pub fn hesse_family(f0: &FieldPoly, lambda: &Rational) -> FieldPoly {
    let scaled = hesse_form(f0).scale(&f0.ctx().ring.from_rational(lambda.clone()));
    f0.add(&scaled)
}

/// Euler/Saito criterion: f lies in its own Jacobian ideal.
pub fn is_quasihomogeneous(f: &FieldPoly) -> Result<bool> {
    let q = crate::algebra::milnor_algebra(f)?;
    if !q.is_artinian() {
        q.kbase()?;
    }
    Ok(q.nf(f)?.is_zero())
}

/// The classes of `hesse_form(qh)` and of the perturbation monomial in
/// Q(qh) must both be nonzero and proportional.
pub fn hesse_matches_perturbation(qh: &FieldPoly, perturbation: &FieldPoly) -> Result<bool> {
    let q = crate::algebra::milnor_algebra(qh)?;
    if !q.is_artinian() {
        return Ok(false);
    }
    let a = q.coordinates(&hesse_form(qh))?;
    let b = q.coordinates(perturbation)?;
    let field = q.field();
    let nonzero = |v: &[FieldElement]| v.iter().any(|c| !c.is_zero());
    if !nonzero(&a) || !nonzero(&b) {
        return Ok(false);
    }
    let mut m = Matrix::zero(field, 2, a.len());
    for (j, c) in a.iter().enumerate() {
        *m.at_mut(0, j) = c.clone();
    }
    for (j, c) in b.iter().enumerate() {
        *m.at_mut(1, j) = c.clone();
    }
    Ok(m.rank()? == 1)
}

// ---------------------------------------------------------------------------
// Stable suspension.
// ---------------------------------------------------------------------------

/// f + w^2 for a fresh variable w.
pub fn add_square_variable(f: &FieldPoly, name: &str) -> FieldPoly {
    let ctx = f.ctx();
    let mut vars: Vec<String> = ctx.vars.as_ref().clone();
    vars.push(name.to_string());
    let new_ctx = PolyCtx::new(ctx.ring.clone(), vars, ctx.order.clone());
    let map: Vec<usize> = (0..ctx.nvars()).collect();
    let lifted = crate::stdbasis::reindex_poly(f, &new_ctx, &map);
    let mut exps = vec![0u32; new_ctx.nvars()];
    exps[new_ctx.nvars() - 1] = 2;
    lifted.add(&Polynomial::monomial(
        &new_ctx,
        Monomial::new(exps),
        ctx.ring.one(),
    ))
}

/// Drops a variable that appears only as a pure square term; `None` when
/// the shape does not allow it.
pub fn remove_square_variable(f: &FieldPoly, var: usize) -> Option<FieldPoly> {
    let ctx = f.ctx();
    let square = Monomial::var(var, ctx.nvars()).pow(2);
    let mut found = false;
    for (m, _) in f.terms() {
        if *m == square {
            found = true;
        } else if m.involves(var) {
            return None;
        }
    }
    if !found {
        return None;
    }
    let keep: Vec<usize> = (0..ctx.nvars()).filter(|&i| i != var).collect();
    let new_ctx = PolyCtx::new(
        ctx.ring.clone(),
        keep.iter().map(|&i| ctx.vars[i].clone()).collect(),
        ctx.order.clone(),
    );
    let terms = f
        .terms()
        .iter()
        .filter(|(m, _)| *m != square)
        .map(|(m, c)| (m.project(&keep), c.clone()))
        .collect();
    Some(Polynomial::from_terms(&new_ctx, terms))
}

// ---------------------------------------------------------------------------
// Miniversal deformations.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Deformation {
    pub germ: FieldPoly,
    pub basis: Vec<Monomial>,
    /// f + sum s_i b_i in the joint (x.., s..) ambient.
    pub family: FieldPoly,
}

/// Builds F = f + sum s_i b_i over a Tjurina-algebra basis: the default
/// basis is the staircase of T(f); a caller basis is validated for size
/// and for linear independence of its classes.
pub fn miniversal_deformation(f: &FieldPoly, basis: Option<&[Monomial]>) -> Result<Deformation> {
    let t = tjurina_algebra(f)?;
    let tau = match t.dim() {
        Dim::Finite(n) => n,
        Dim::Infinite => {
            t.kbase()?;
            unreachable!()
        }
    };
    let basis: Vec<Monomial> = match basis {
        None => t.kbase()?.to_vec(),
        Some(b) => {
            if b.len() != tau {
                return Err(Error::BasisWrongSize {
                    want: tau,
                    got: b.len(),
                });
            }
            // classes must be linearly independent in T(f)
            let field = t.field();
            let mut m = Matrix::zero(field, tau, b.len());
            for (j, mono) in b.iter().enumerate() {
                let poly = Polynomial::monomial(f.ctx(), mono.clone(), field.one());
                let coords = t.coordinates(&poly)?;
                for i in 0..tau {
                    *m.at_mut(i, j) = coords[i].clone();
                }
            }
            if m.rank()? != b.len() {
                return Err(Error::BasisNotIndependent);
            }
            b.to_vec()
        }
    };
    let ctx = f.ctx();
    let n = ctx.nvars();
    let mut vars: Vec<String> = ctx.vars.as_ref().clone();
    for i in 1..=tau {
        vars.push(format!("s{i}"));
    }
    let big_ctx = PolyCtx::new(ctx.ring.clone(), vars, ctx.order.clone());
    let map: Vec<usize> = (0..n).collect();
    let mut family = crate::stdbasis::reindex_poly(f, &big_ctx, &map);
    for (i, b) in basis.iter().enumerate() {
        let mut exps = vec![0u32; n + tau];
        exps[..n].copy_from_slice(b.exps());
        exps[n + i] = 1;
        family = family.add(&Polynomial::monomial(
            &big_ctx,
            Monomial::new(exps),
            ctx.ring.one(),
        ));
    }
    Ok(Deformation {
        germ: f.clone(),
        basis,
        family,
    })
}

// ---------------------------------------------------------------------------
// The catalog file.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default)]
pub struct ClassFlags {
    pub quasihomogeneous: bool,
    pub parabolic: bool,
    pub hyperbolic: bool,
    pub subseries: bool,
    pub hesse_type: bool,
    pub bimodal: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub vars: Vec<String>,
    /// Quasihomogeneous part plus perturbation, as printed.
    pub equation: FieldPoly,
    pub qh_part: FieldPoly,
    pub perturbation: FieldPoly,
    /// Tjurina basis in deformation order: s_i pairs with basis[i-1].
    pub basis: Vec<Monomial>,
    /// 1-based indices of the bold (minimal-embedding) basis monomials.
    pub bold: Vec<usize>,
    /// Modular-stratum equations in the variables that actually occur.
    pub stratum_equations: Vec<FieldPoly>,
    pub stratum_vars: Vec<String>,
    pub flags: ClassFlags,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct RowValidation {
    pub tau: Dim,
    pub mu: Dim,
    pub basis_count_ok: bool,
    pub mu_tau_ok: bool,
    pub hesse_ok: Option<bool>,
    pub stratum_ok: bool,
    pub stratum_note: Option<String>,
}

impl RowValidation {
    /// Normal-form transcription validation: the three row checks.
    pub fn normal_form_ok(&self) -> bool {
        self.basis_count_ok && self.mu_tau_ok && self.hesse_ok.unwrap_or(true)
    }

    /// Fully verified rows feed the isomorphy acceptance.
    pub fn verified(&self) -> bool {
        self.normal_form_ok() && self.stratum_ok
    }
}

impl CatalogEntry {
    pub fn germ_ctx(&self) -> &FieldCtx {
        self.equation.ctx()
    }

    /// Ideal of the modular stratum in its occurring variables.
    pub fn stratum_ideal(&self) -> Option<Ideal> {
        if self.stratum_equations.is_empty() {
            return None;
        }
        let ctx = self.stratum_equations[0].ctx();
        Some(Ideal::new(ctx, self.stratum_equations.clone()))
    }

    pub fn stratum_algebra(&self) -> Result<LocalAlgebra> {
        match self.stratum_ideal() {
            Some(i) => LocalAlgebra::new(&i),
            None => Err(Error::UnknownEntry(format!(
                "{} has no stratum equations",
                self.name
            ))),
        }
    }

    /// The Hesse-type reconstruction qh + hesse_form(qh).
    pub fn reconstructed_form(&self) -> FieldPoly {
        self.qh_part.add(&hesse_form(&self.qh_part))
    }

    /// Drops the z^2 suspension when the printed form carries one.
    pub fn suspension_free_form(&self) -> FieldPoly {
        for var in (0..self.equation.ctx().nvars()).rev() {
            if let Some(f) = remove_square_variable(&self.equation, var) {
                return f;
            }
        }
        self.equation.clone()
    }

    pub fn validate(&self) -> Result<RowValidation> {
        let tau = tjurina_number(&self.equation)?;
        let mu = milnor_number(&self.equation)?;
        let basis_count_ok = tau == Dim::Finite(self.basis.len());
        let mu_tau_ok = match (mu, tau) {
            (Dim::Finite(m), Dim::Finite(t)) => {
                if self.flags.parabolic || self.flags.quasihomogeneous {
                    m == t
                } else {
                    m == t + 1
                }
            }
            _ => false,
        };
        let hesse_ok = if self.flags.hesse_type {
            Some(hesse_matches_perturbation(&self.qh_part, &self.perturbation)?)
        } else {
            None
        };
        // a fat-point stratum needs at least as many equations as variables,
        // and the printed system must actually define an Artinian quotient
        let (stratum_ok, stratum_note) = if self.stratum_equations.len() < self.stratum_vars.len()
        {
            (
                false,
                Some(format!(
                    "{} stratum variables but only {} equations: a variable's \
                     elimination equation was omitted in print",
                    self.stratum_vars.len(),
                    self.stratum_equations.len()
                )),
            )
        } else if self
            .stratum_ideal()
            .map(|i| standard_basis(&i).map(|sb| !sb.is_artinian()))
            .transpose()?
            .unwrap_or(false)
        {
            (
                false,
                Some(
                    "stratum system is not Artinian as printed: it cannot be a fat \
                     point of multiplicity mu"
                        .to_string(),
                ),
            )
        } else {
            let bold_names: Vec<String> =
                self.bold.iter().map(|i| format!("s{i}")).collect();
            let stray: Vec<&String> = self
                .stratum_vars
                .iter()
                .filter(|v| !bold_names.contains(v))
                .collect();
            if stray.is_empty() {
                (true, None)
            } else {
                (
                    true,
                    Some(format!(
                        "variables {stray:?} occur without a bold marker; \
                         bold typography incomplete in print"
                    )),
                )
            }
        };
        Ok(RowValidation {
            tau,
            mu,
            basis_count_ok,
            mu_tau_ok,
            hesse_ok,
            stratum_ok,
            stratum_note,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Result<Catalog> {
        Catalog::load(CATALOG_TEXT)
    }

    pub fn load(text: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        let mut block: Vec<String> = Vec::new();
        let mut name: Option<String> = None;
        for raw in text.lines().chain(std::iter::once("[end]")) {
            let line = raw.trim_end();
            let stripped = line.trim();
            if stripped.starts_with('#') {
                continue;
            }
            if stripped.starts_with('[') && stripped.ends_with(']') {
                if let Some(n) = name.take() {
                    entries.push(parse_entry(&n, &block)?);
                }
                block.clear();
                let inner = &stripped[1..stripped.len() - 1];
                if inner != "end" {
                    name = Some(inner.to_string());
                }
            } else if name.is_some() && !stripped.is_empty() {
                block.push(line.to_string());
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))
    }

    /// Exceptional rows only (the bimodal record is validated separately).
    pub fn exceptional(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.flags.hesse_type)
    }
}

fn parse_entry(name: &str, lines: &[String]) -> Result<CatalogEntry> {
    let mut vars: Option<Vec<String>> = None;
    let mut equation_src: Option<String> = None;
    let mut qh_src: Option<String> = None;
    let mut pert_src: Option<String> = None;
    let mut basis_src: Option<String> = None;
    let mut bold: Vec<usize> = Vec::new();
    let mut class = String::new();
    let mut notes = Vec::new();
    let mut modular_lines: Vec<String> = Vec::new();
    let mut in_modular = false;
    for line in lines {
        let l = line.trim();
        if in_modular {
            if l == "end" {
                in_modular = false;
            } else {
                modular_lines.push(l.to_string());
            }
            continue;
        }
        if let Some(rest) = l.strip_prefix("vars:") {
            vars = Some(rest.split(',').map(|s| s.trim().to_string()).collect());
        } else if let Some(rest) = l.strip_prefix("equation:") {
            equation_src = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("qh:") {
            qh_src = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("perturbation:") {
            pert_src = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("tjurina_basis:") {
            basis_src = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("bold:") {
            bold = rest
                .split(',')
                .map(|s| s.trim().parse().expect("bold index"))
                .collect();
        } else if let Some(rest) = l.strip_prefix("class:") {
            class = rest.trim().to_string();
        } else if let Some(rest) = l.strip_prefix("note:") {
            notes.push(rest.trim().to_string());
        } else if l == "modular_equations:" {
            in_modular = true;
        }
    }
    let vars = vars.ok_or_else(|| Error::SyntaxError(0, format!("{name}: missing vars")))?;
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ctx = field_ctx(
        &CoefficientField::rationals(),
        &var_refs,
        TermOrder::LocalDegrevlex,
    );
    let qh = crate::parse::parse_polynomial(
        &qh_src.ok_or_else(|| Error::SyntaxError(0, format!("{name}: missing qh")))?,
        &ctx,
    )?;
    let pert = crate::parse::parse_polynomial(
        &pert_src.ok_or_else(|| Error::SyntaxError(0, format!("{name}: missing perturbation")))?,
        &ctx,
    )?;
    let equation = qh.add(&pert);
    // the explicit equation field must agree with its displayed split
    if let Some(src) = equation_src {
        let parsed = crate::parse::parse_polynomial(&src, &ctx)?;
        if parsed != equation {
            return Err(Error::SyntaxError(
                0,
                format!("{name}: equation does not match qh + perturbation"),
            ));
        }
    }
    let basis_src =
        basis_src.ok_or_else(|| Error::SyntaxError(0, format!("{name}: missing basis")))?;
    let basis: Vec<Monomial> = basis_src
        .split(',')
        .map(|s| crate::parse::parse_monomial(s.trim(), &ctx))
        .collect::<Result<_>>()?;
    // stratum equations live among s1..s_tau; keep only occurring variables
    let tau = basis.len();
    let s_names: Vec<String> = (1..=tau).map(|i| format!("s{i}")).collect();
    let s_refs: Vec<&str> = s_names.iter().map(|s| s.as_str()).collect();
    let full_ctx = field_ctx(
        &CoefficientField::rationals(),
        &s_refs,
        TermOrder::LocalDegrevlex,
    );
    let parsed: Vec<FieldPoly> = modular_lines
        .iter()
        .map(|l| crate::parse::parse_polynomial(l, &full_ctx))
        .collect::<Result<_>>()?;
    let mut occurring: Vec<usize> = Vec::new();
    for g in &parsed {
        for (m, _) in g.terms() {
            for i in 0..tau {
                if m.involves(i) && !occurring.contains(&i) {
                    occurring.push(i);
                }
            }
        }
    }
    occurring.sort_unstable();
    let stratum_vars: Vec<String> = occurring.iter().map(|&i| s_names[i].clone()).collect();
    let sv_refs: Vec<&str> = stratum_vars.iter().map(|s| s.as_str()).collect();
    let stratum_ctx = field_ctx(
        &CoefficientField::rationals(),
        &sv_refs,
        TermOrder::LocalDegrevlex,
    );
    let stratum_equations: Vec<FieldPoly> = parsed
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (m.project(&occurring), c.clone()))
                .collect();
            Polynomial::from_terms(&stratum_ctx, terms)
        })
        .collect();
    let flags = ClassFlags {
        hesse_type: class.contains("exceptional"),
        bimodal: class.contains("bimodal"),
        ..Default::default()
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        vars,
        equation,
        qh_part: qh,
        perturbation: pert,
        basis,
        bold,
        stratum_equations,
        stratum_vars,
        flags,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_int};
    use crate::parse::parse_polynomial;

    #[test]
    fn t_series_classification_and_gaps() {
        let f = t_series(3, 3, 3, &rat_int(1)).unwrap();
        assert_eq!(milnor_number(&f).unwrap(), Dim::Finite(8));
        assert_eq!(tjurina_number(&f).unwrap(), Dim::Finite(8));
        assert!(matches!(
            t_series(3, 3, 3, &rat_int(-3)),
            Err(Error::DegenerateLambda(3, 3, 3))
        ));
        assert!(matches!(
            t_series(2, 2, 2, &rat_int(1)),
            Err(Error::IndexOutOfRange(2, 2, 2))
        ));
        assert!(matches!(
            t_series(4, 3, 3, &rat_int(0)),
            Err(Error::DegenerateLambda(4, 3, 3))
        ));
        // the degenerate germ itself is detected non-isolated
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["x", "y", "z"],
            TermOrder::LocalDegrevlex,
        );
        let bad = parse_polynomial("x^3+y^3+z^3-3*x*y*z", &ctx).unwrap();
        assert_eq!(milnor_number(&bad).unwrap(), Dim::Infinite);
    }

    #[test]
    fn degenerate_lambda_in_extension() {
        // T(4,4,2): lambda^4 = 64 at lambda = 2 theta with theta^2 = 2
        let k = CoefficientField::binomial_extension(2, &rat_int(2)).unwrap();
        let lambda = k.mul_rational(&k.generator().unwrap(), &rat_int(2));
        assert!(matches!(
            t_series_in(&k, 4, 4, 2, &lambda),
            Err(Error::DegenerateLambda(4, 4, 2))
        ));
    }

    #[test]
    fn hesse_forms() {
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["x", "y", "z"],
            TermOrder::LocalDegrevlex,
        );
        let f = parse_polynomial("x^3+y^7+z^2", &ctx).unwrap();
        let h = hesse_form(&f);
        assert_eq!(h, parse_polynomial("504*x*y^5", &ctx).unwrap());
        let ctx1 = field_ctx(
            &CoefficientField::rationals(),
            &["x"],
            TermOrder::LocalDegrevlex,
        );
        let g = parse_polynomial("x^2", &ctx1).unwrap();
        assert_eq!(hesse_form(&g), parse_polynomial("2", &ctx1).unwrap());
        let fam = hesse_family(&f, &rat(1, 504));
        assert_eq!(fam, parse_polynomial("x^3+y^7+z^2+x*y^5", &ctx).unwrap());
    }

    #[test]
    fn quasihomogeneity() {
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["x", "y", "z"],
            TermOrder::LocalDegrevlex,
        );
        let f = parse_polynomial("x^3+y^3+z^3+x*y*z", &ctx).unwrap();
        assert!(is_quasihomogeneous(&f).unwrap());
        let g = parse_polynomial("x^5+y^4+z^3+x*y*z", &ctx).unwrap();
        assert!(!is_quasihomogeneous(&g).unwrap());
        let ctx1 = field_ctx(
            &CoefficientField::rationals(),
            &["x"],
            TermOrder::LocalDegrevlex,
        );
        assert!(is_quasihomogeneous(&parse_polynomial("x^2", &ctx1).unwrap()).unwrap());
    }

    #[test]
    fn splitting_family_collapses_at_zero() {
        let family = splitting_fiber(5, 4, 3, 3, &rat_int(0)).unwrap();
        let expected = t_series(5, 3, 3, &rat_int(1)).unwrap();
        assert_eq!(family, expected);
        assert!(matches!(
            splitting_family(5, 3, 3, 3),
            Err(Error::NotASubseries(5, 3, 3, 3))
        ));
    }

    #[test]
    fn limit_singularity_is_non_isolated() {
        let f = limit_singularity(3, 3);
        assert_eq!(milnor_number(&f).unwrap(), Dim::Infinite);
        let g = limit_singularity(4, 2);
        assert_eq!(g.num_terms(), 3);
    }

    #[test]
    fn miniversal_default_and_custom_basis() {
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["x", "y"],
            TermOrder::LocalDegrevlex,
        );
        let f = parse_polynomial("x^2+y^2", &ctx).unwrap();
        let def = miniversal_deformation(&f, None).unwrap();
        assert_eq!(def.basis.len(), 1);
        assert!(def.basis[0].is_one());
        // wrong size and dependent bases are rejected
        let too_many = vec![Monomial::one(2), Monomial::var(0, 2)];
        assert!(matches!(
            miniversal_deformation(&f, Some(&too_many)),
            Err(Error::BasisWrongSize { want: 1, got: 2 })
        ));
        let dependent = vec![Monomial::var(0, 2)];
        assert!(matches!(
            miniversal_deformation(&f, Some(&dependent)),
            Err(Error::BasisNotIndependent)
        ));
    }

    #[test]
    fn catalog_loads_and_w12_row_is_sound() {
        let cat = Catalog::builtin().unwrap();
        assert_eq!(cat.entries().len(), 15);
        let w12 = cat.get("W12").unwrap();
        assert_eq!(w12.basis.len(), 11);
        assert_eq!(w12.stratum_vars, vec!["s1", "s2"]);
        let v = w12.validate().unwrap();
        assert!(v.basis_count_ok && v.mu_tau_ok);
        assert_eq!(v.hesse_ok, Some(true));
        assert!(v.stratum_ok);
        assert_eq!(v.mu, Dim::Finite(12));
    }

    #[test]
    fn suspension_invariance() {
        let cat = Catalog::builtin().unwrap();
        let w12 = cat.get("W12").unwrap();
        let two_var = w12.suspension_free_form();
        assert_eq!(two_var.ctx().nvars(), 2);
        assert_eq!(
            milnor_number(&two_var).unwrap(),
            milnor_number(&w12.equation).unwrap()
        );
        let resuspended = add_square_variable(&two_var, "w");
        assert_eq!(
            tjurina_number(&resuspended).unwrap(),
            tjurina_number(&w12.equation).unwrap()
        );
    }
}
