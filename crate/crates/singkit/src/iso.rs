//! Deciding and certifying isomorphy of local algebras: the parameter
//! ansatz, its coefficient ideal, the surjection search, verification of
//! explicit maps, ambient coordinate changes for non-Artinian quotients,
//! and the diagonal scalars matching modular ideals to Milnor algebras.

use num_traits::Zero;

use crate::algebra::{minimal_embedding, Dim, LocalAlgebra};
use crate::error::{Error, Result};
use crate::field::{rational_nth_root, CoefficientField, FieldElement, Rational};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{FieldCtx, FieldPoly, PolyCtx, PolyRing, Polynomial};
use crate::ring::Ring;
use crate::solve::{saturate_by, solve_parameter_system, Budget, SolveOutcome};
use crate::stdbasis::{mora_normal_form, radical_membership, reduced_normal_form, standard_basis};

// ---------------------------------------------------------------------------
// Algebra maps.
// ---------------------------------------------------------------------------

/// Assignment of a target-algebra element to each source variable, over a
/// coefficient field that may be a simple extension.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    source_vars: Vec<String>,
    target_ctx: FieldCtx,
    images: Vec<FieldPoly>,
}

impl AlgebraMap {
    pub fn new(
        source_vars: Vec<String>,
        target_ctx: &FieldCtx,
        images: Vec<FieldPoly>,
    ) -> Result<Self> {
        if images.len() != source_vars.len() {
            return Err(Error::BasisWrongSize {
                want: source_vars.len(),
                got: images.len(),
            });
        }
        for img in &images {
            if !img.constant_term().is_zero() {
                return Err(Error::NotAmbient(
                    "image has a nonzero constant term".to_string(),
                ));
            }
        }
        Ok(AlgebraMap {
            source_vars,
            target_ctx: target_ctx.clone(),
            images,
        })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.target_ctx.ring
    }

    pub fn source_vars(&self) -> &[String] {
        &self.source_vars
    }

    pub fn target_ctx(&self) -> &FieldCtx {
        &self.target_ctx
    }

    pub fn images(&self) -> &[FieldPoly] {
        &self.images
    }

    /// Applies the map to a polynomial in the source variables.
    pub fn apply(&self, f: &FieldPoly) -> Result<FieldPoly> {
        if f.ctx().vars.as_slice() != self.source_vars.as_slice() {
            return Err(Error::NotAmbient(
                "polynomial is not in the source variables".to_string(),
            ));
        }
        let source_field = f.ctx().ring.clone();
        let target = self.target_ctx.clone();
        f.substitute(&target, &self.images, |c| target.ring.embed(&source_field, c))
    }

    pub fn apply_to_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let gens = ideal
            .gens()
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.target_ctx, gens))
    }

    /// Matrix of the differentials at 0: one row per source variable, one
    /// column per target variable.
    pub fn linear_part(&self) -> Matrix {
        let field = self.field();
        let m = self.source_vars.len();
        let n = self.target_ctx.nvars();
        let mut mat = Matrix::zero(field, m, n);
        for (i, img) in self.images.iter().enumerate() {
            for (mono, c) in img.terms() {
                if mono.degree() == 1 {
                    let j = (0..n).find(|&k| mono.exp(k) == 1).unwrap();
                    *mat.at_mut(i, j) = c.clone();
                }
            }
        }
        mat
    }

    /// Renders in the map file format.
    pub fn format_map_file(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("source_vars: {}\n", self.source_vars.join(",")));
        out.push_str(&format!("target_vars: {}\n", self.target_ctx.vars.join(",")));
        out.push_str(&format!(
            "order: {}\n",
            crate::parse::order_name(&self.target_ctx.order)
        ));
        if let Some(m) = self.field().minpoly() {
            out.push_str(&format!(
                "minpoly: {}\n",
                crate::field::uni_format(m, "theta")
            ));
        }
        for (v, img) in self.source_vars.iter().zip(&self.images) {
            out.push_str(&format!("{v} -> {img}\n"));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Surjection,
    Isomorphism,
    Failure(String),
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// (generator, image contained in target ideal, witness normal form)
    pub containment: Vec<(String, bool, String)>,
    pub linear_rank: usize,
    pub required_rank: usize,
    pub dim_source: Dim,
    pub dim_target: Dim,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Surjection | Verdict::Isomorphism)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.verdict == Verdict::Isomorphism
    }
}

fn promoted_sb_gens(ideal: &Ideal, field: &CoefficientField) -> Result<Vec<FieldPoly>> {
    let sb = standard_basis(ideal)?;
    sb.gens().iter().map(|g| g.promote(field)).collect()
}

/// Checks phi(I_A) inside I_B, surjectivity of the linear part, and the
/// equal-dimension upgrade to an isomorphism verdict.
pub fn verify(map: &AlgebraMap, i_a: &Ideal, i_b: &Ideal) -> Result<VerificationReport> {
    if i_b.ctx().vars.as_slice() != map.target_ctx.vars.as_slice() {
        return Err(Error::NotAmbient(
            "target ideal is not in the map's target variables".to_string(),
        ));
    }
    if !map.field().is_rational_field()
        && !i_b.ctx().ring.is_rational_field()
        && map.field() != &i_b.ctx().ring
    {
        return Err(Error::FieldMismatch);
    }
    let field = map.field().clone();
    let sb_b = promoted_sb_gens(i_b, &field)?;
    let mut containment = Vec::new();
    let mut all_contained = true;
    for g in i_a.gens() {
        let img = map.apply(g)?;
        let nf = mora_normal_form(&img, &sb_b)?;
        let ok = nf.is_zero();
        all_contained &= ok;
        containment.push((g.to_string(), ok, nf.to_string()));
    }
    let rank = map.linear_part().rank()?;
    let required = map.target_ctx.nvars();
    let dim_source = LocalAlgebra::new(i_a)?.dim();
    let dim_target = LocalAlgebra::new(i_b)?.dim();
    let verdict = if !all_contained {
        let witness = containment
            .iter()
            .find(|(_, ok, _)| !ok)
            .map(|(g, _, nf)| format!("NF({g}) = {nf}"))
            .unwrap_or_default();
        Verdict::Failure(witness)
    } else if rank < required {
        Verdict::Failure(format!("linear part has rank {rank} < {required}"))
    } else if dim_source.is_finite() && dim_source == dim_target {
        Verdict::Isomorphism
    } else {
        Verdict::Surjection
    };
    Ok(VerificationReport {
        containment,
        linear_rank: rank,
        required_rank: required,
        dim_source,
        dim_target,
        verdict,
    })
}

/// Two-sided ideal equality under an invertible ambient coordinate change:
/// valid without any Artinian hypothesis.
pub fn check_ambient_isomorphism(
    map: &AlgebraMap,
    i_a: &Ideal,
    i_b: &Ideal,
) -> Result<VerificationReport> {
    let m = map.source_vars.len();
    let n = map.target_ctx.nvars();
    if m != n {
        return Err(Error::NotAmbient(format!(
            "{m} source variables against {n} target variables"
        )));
    }
    let det = map.linear_part().det()?;
    if det.is_zero() {
        return Err(Error::NotAmbient("linear part is singular at 0".to_string()));
    }
    let field = map.field().clone();
    let sb_b = promoted_sb_gens(i_b, &field)?;
    let mut containment = Vec::new();
    let mut ok_all = true;
    for g in i_a.gens() {
        let img = map.apply(g)?;
        let nf = mora_normal_form(&img, &sb_b)?;
        let ok = nf.is_zero();
        ok_all &= ok;
        containment.push((format!("phi({g})"), ok, nf.to_string()));
    }
    // reverse inclusion: each generator of I_B modulo SB(phi(I_A))
    let image_ideal = map.apply_to_ideal(i_a)?;
    let sb_img = standard_basis(&image_ideal)?;
    for g in i_b.gens() {
        let gp = g.promote(&field)?;
        let nf = mora_normal_form(&gp, sb_img.gens())?;
        let ok = nf.is_zero();
        ok_all &= ok;
        containment.push((format!("{g} in phi(I_A)"), ok, nf.to_string()));
    }
    let dim_source = LocalAlgebra::new(i_a)?.dim();
    let dim_target = LocalAlgebra::new(i_b)?.dim();
    let verdict = if ok_all {
        Verdict::Isomorphism
    } else {
        let witness = containment
            .iter()
            .find(|(_, ok, _)| !ok)
            .map(|(g, _, nf)| format!("{g} has NF {nf}"))
            .unwrap_or_default();
        Verdict::Failure(witness)
    };
    Ok(VerificationReport {
        containment,
        linear_rank: n,
        required_rank: n,
        dim_source,
        dim_target,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// Ansatz and coefficient ideal.
// ---------------------------------------------------------------------------

/// The parameterized map x_i -> sum_j alpha_ij f_j over fresh global
/// parameters, with an optional support mask.
#[derive(Clone, Debug)]
pub struct Ansatz {
    pub source_vars: Vec<String>,
    pub basis: Vec<Monomial>,
    pub active: Vec<Vec<bool>>,
    pub params: PolyRing,
    param_of: Vec<Vec<Option<usize>>>,
}

impl Ansatz {
    pub fn new(
        source_vars: Vec<String>,
        basis: Vec<Monomial>,
        active: Vec<Vec<bool>>,
        base_field: &CoefficientField,
    ) -> Ansatz {
        let mut names = Vec::new();
        let mut param_of = vec![vec![None; basis.len()]; source_vars.len()];
        for (i, row) in active.iter().enumerate() {
            for (j, &on) in row.iter().enumerate() {
                if on {
                    param_of[i][j] = Some(names.len());
                    names.push(format!("a{}_{}", i + 1, j + 1));
                }
            }
        }
        Ansatz {
            source_vars,
            basis,
            active,
            params: PolyRing::new(base_field, names),
            param_of,
        }
    }

    /// All basis monomials active except the constant 1 (local maps have no
    /// constant terms).
    pub fn masked_constant(
        source_vars: Vec<String>,
        basis: Vec<Monomial>,
        base_field: &CoefficientField,
    ) -> Ansatz {
        let active = vec![basis.iter().map(|b| !b.is_one()).collect::<Vec<_>>(); source_vars.len()];
        Ansatz::new(source_vars, basis, active, base_field)
    }

    /// Fully active ansatz, constant included.
    pub fn full(
        source_vars: Vec<String>,
        basis: Vec<Monomial>,
        base_field: &CoefficientField,
    ) -> Ansatz {
        let active = vec![vec![true; basis.len()]; source_vars.len()];
        Ansatz::new(source_vars, basis, active, base_field)
    }

    /// Support restricted to the given monomials per source variable.
    pub fn from_shape(
        source_vars: Vec<String>,
        basis: Vec<Monomial>,
        shape: &[Vec<Monomial>],
        base_field: &CoefficientField,
    ) -> Result<Ansatz> {
        let mut active = vec![vec![false; basis.len()]; source_vars.len()];
        for (i, monos) in shape.iter().enumerate() {
            for m in monos {
                match basis.iter().position(|b| b == m) {
                    Some(j) => active[i][j] = true,
                    None => {
                        return Err(Error::UnknownEntry(format!(
                            "shape monomial {m:?} is not a standard monomial of the target"
                        )))
                    }
                }
            }
        }
        Ok(Ansatz::new(source_vars, basis, active, base_field))
    }

    pub fn param_count(&self) -> usize {
        self.params.ctx.nvars()
    }

    pub fn param_ctx(&self) -> &FieldCtx {
        &self.params.ctx
    }

    /// Images as x-polynomials with parameter-polynomial coefficients.
    pub fn images(&self, target_ctx: &FieldCtx) -> Vec<Polynomial<PolyRing>> {
        let pctx: PolyCtx<PolyRing> = PolyCtx::new(
            self.params.clone(),
            target_ctx.vars.as_ref().clone(),
            target_ctx.order.clone(),
        );
        (0..self.source_vars.len())
            .map(|i| {
                let mut terms = Vec::new();
                for (j, b) in self.basis.iter().enumerate() {
                    if let Some(p) = self.param_of[i][j] {
                        let alpha = Polynomial::var(&self.params.ctx, p);
                        terms.push((b.clone(), alpha));
                    }
                }
                Polynomial::from_terms(&pctx, terms)
            })
            .collect()
    }

    /// The m x n matrix of linear-part entries at 0, as parameter
    /// polynomials.
    pub fn linear_part(&self, target_ctx: &FieldCtx) -> Vec<Vec<FieldPoly>> {
        let n = target_ctx.nvars();
        let mut rows = Vec::with_capacity(self.source_vars.len());
        for i in 0..self.source_vars.len() {
            let mut row = Vec::with_capacity(n);
            for k in 0..n {
                let var_mono = Monomial::var(k, n);
                let entry = match self
                    .basis
                    .iter()
                    .position(|b| *b == var_mono)
                    .and_then(|j| self.param_of[i][j])
                {
                    Some(p) => Polynomial::var(&self.params.ctx, p),
                    None => Polynomial::zero(&self.params.ctx),
                };
                row.push(entry);
            }
            rows.push(row);
        }
        rows
    }

    /// All n x n minors of the linear part, dropped if identically zero.
    pub fn minors(&self, target_ctx: &FieldCtx) -> Vec<FieldPoly> {
        let rows = self.linear_part(target_ctx);
        let m = rows.len();
        let n = target_ctx.nvars();
        if n > m {
            return Vec::new();
        }
        let mut out = Vec::new();
        for combo in combinations(m, n) {
            let sub: Vec<Vec<FieldPoly>> = combo.iter().map(|&r| rows[r].clone()).collect();
            let d = crate::poly::poly_matrix_det(&sub, &self.params.ctx);
            if !d.is_zero() {
                let d = d.primitive();
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Evaluates the parameters and builds the concrete map.
    pub fn instantiate(
        &self,
        field: &CoefficientField,
        values: &[FieldElement],
        target_ctx: &FieldCtx,
    ) -> Result<AlgebraMap> {
        assert_eq!(values.len(), self.param_count());
        let tctx = PolyCtx {
            ring: field.clone(),
            vars: target_ctx.vars.clone(),
            order: target_ctx.order.clone(),
        };
        let images = (0..self.source_vars.len())
            .map(|i| {
                let mut terms = Vec::new();
                for (j, b) in self.basis.iter().enumerate() {
                    if let Some(p) = self.param_of[i][j] {
                        terms.push((b.clone(), values[p].clone()));
                    }
                }
                Polynomial::from_terms(&tctx, terms)
            })
            .collect();
        AlgebraMap::new(self.source_vars.clone(), &tctx, images)
    }
}

fn combinations(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, n, cur, out);
            cur.pop();
        }
    }
    rec(0, m, n, &mut cur, &mut out);
    out
}

/// The ideal J of parameter constraints: all x-monomial coefficients of
/// the reduced normal forms of the ansatz images of I_A's generators.
pub fn coefficient_ideal(i_a: &Ideal, b: &LocalAlgebra, ansatz: &Ansatz) -> Result<Ideal> {
    if !b.is_artinian() {
        b.kbase()?;
    }
    let target_ctx = b.ctx();
    let images = ansatz.images(target_ctx);
    let pctx: PolyCtx<PolyRing> = images
        .first()
        .map(|p| p.ctx().clone())
        .unwrap_or_else(|| {
            PolyCtx::new(
                ansatz.params.clone(),
                target_ctx.vars.as_ref().clone(),
                target_ctx.order.clone(),
            )
        });
    let mut gens: Vec<FieldPoly> = Vec::new();
    for a in i_a.gens() {
        let src_field = a.ctx().ring.clone();
        let image = a.substitute(&pctx, &images, |c| pctx.ring.embed_field(&src_field, c))?;
        let reduced = reduced_normal_form(&image, b.sb())?;
        for (_, coeff) in reduced.terms() {
            if coeff.is_zero() {
                continue;
            }
            let p = coeff.primitive();
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    Ok(Ideal::new(ansatz.param_ctx(), gens))
}

// ---------------------------------------------------------------------------
// Surjection / isomorphism search.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct IsoSearchOptions {
    /// Allowed target monomials per source variable; `None` activates every
    /// non-constant standard monomial.
    pub shape: Option<Vec<Vec<Monomial>>>,
    pub require_isomorphism: bool,
    pub budget_steps: u64,
}

impl Default for IsoSearchOptions {
    fn default() -> Self {
        IsoSearchOptions {
            shape: None,
            require_isomorphism: true,
            budget_steps: 500_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchFailure {
    CertifiedImpossible(String),
    BudgetExhausted,
    UnsupportedRootDegree,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub map: Option<AlgebraMap>,
    pub failure: Option<SearchFailure>,
    /// Per minor: not a plain member of J (the printed test), and not a
    /// member of the radical of J (the sound test). Both are recorded.
    pub minor_outside_j: Vec<bool>,
    pub minor_outside_radical: Vec<bool>,
    pub verification: Option<VerificationReport>,
    /// The minimally embedded ideals the map actually relates.
    pub source: Ideal,
    pub target: Ideal,
}

impl SearchReport {
    pub fn succeeded(&self) -> bool {
        self.map.is_some()
    }
}

/// Searches for a surjection A -> B with phi(I_A) inside I_B,
/// upgraded to an isomorphism certificate when dimensions agree. Both
/// ideals are minimally embedded internally; the returned map relates the
/// embedded presentations.
pub fn find_surjection(i_a: &Ideal, i_b: &Ideal, opts: &IsoSearchOptions) -> Result<SearchReport> {
    let emb_a = minimal_embedding(i_a)?;
    let emb_b = minimal_embedding(i_b)?;
    let b = LocalAlgebra::new(&emb_b.ideal)?;
    let kbase = b.kbase()?.to_vec();
    let source_vars: Vec<String> = emb_a.ideal.ctx().vars.as_ref().clone();
    let target_ctx = b.ctx().clone();
    let fail = |reason: SearchFailure| SearchReport {
        map: None,
        failure: Some(reason),
        minor_outside_j: Vec::new(),
        minor_outside_radical: Vec::new(),
        verification: None,
        source: emb_a.ideal.clone(),
        target: emb_b.ideal.clone(),
    };
    if opts.require_isomorphism {
        let a = LocalAlgebra::new(&emb_a.ideal)?;
        if a.dim() != b.dim() {
            return Ok(fail(SearchFailure::CertifiedImpossible(format!(
                "dimension mismatch: {} against {}",
                a.dim(),
                b.dim()
            ))));
        }
        if a.embdim() != b.embdim() {
            return Ok(fail(SearchFailure::CertifiedImpossible(format!(
                "embedding dimension mismatch: {} against {}",
                a.embdim(),
                b.embdim()
            ))));
        }
    }
    if source_vars.len() < target_ctx.nvars() {
        return Ok(fail(SearchFailure::CertifiedImpossible(
            "fewer source variables than target variables".to_string(),
        )));
    }
    let base_field = target_ctx.ring.clone();
    let ansatz = match &opts.shape {
        Some(shape) => Ansatz::from_shape(source_vars, kbase.clone(), shape, &base_field)?,
        None => Ansatz::masked_constant(source_vars, kbase.clone(), &base_field),
    };
    let j = coefficient_ideal(&emb_a.ideal, &b, &ansatz)?;
    let minors = ansatz.minors(&target_ctx);
    if minors.is_empty() {
        return Ok(fail(SearchFailure::CertifiedImpossible(
            "every maximal minor of the linear part vanishes identically".to_string(),
        )));
    }
    // record both the printed plain-membership test and the radical test
    let sb_j = standard_basis(&j)?;
    let mut minor_outside_j = Vec::new();
    let mut minor_outside_radical = Vec::new();
    for minor in &minors {
        minor_outside_j.push(!sb_j.nf(minor)?.is_zero());
        minor_outside_radical.push(!radical_membership(minor, &j)?);
    }
    let chosen = match minor_outside_radical.iter().position(|&ok| ok) {
        Some(i) => i,
        None => {
            let mut rep = fail(SearchFailure::CertifiedImpossible(
                "every maximal minor lies in the radical of the coefficient ideal".to_string(),
            ));
            rep.minor_outside_j = minor_outside_j;
            rep.minor_outside_radical = minor_outside_radical;
            return Ok(rep);
        }
    };
    let j_sat = saturate_by(&j, &minors[chosen])?;
    let mut budget = Budget::from_env(opts.budget_steps);
    let outcome = match solve_parameter_system(&j_sat, &minors, &mut budget) {
        Ok(o) => o,
        Err(Error::BudgetExhausted) => {
            let mut rep = fail(SearchFailure::BudgetExhausted);
            rep.minor_outside_j = minor_outside_j;
            rep.minor_outside_radical = minor_outside_radical;
            return Ok(rep);
        }
        Err(e) => return Err(e),
    };
    match outcome {
        SolveOutcome::Point { field, values } => {
            let map = ansatz.instantiate(&field, &values, &target_ctx)?;
            let verification = verify(&map, &emb_a.ideal, &emb_b.ideal)?;
            if !verification.passed()
                || (opts.require_isomorphism && !verification.is_isomorphism())
            {
                return Err(Error::Io(format!(
                    "solver soundness violation: returned map fails verification: {:?}",
                    verification.verdict
                )));
            }
            Ok(SearchReport {
                map: Some(map),
                failure: None,
                minor_outside_j,
                minor_outside_radical,
                verification: Some(verification),
                source: emb_a.ideal,
                target: emb_b.ideal,
            })
        }
        SolveOutcome::Exhausted {
            hit_unsupported_root,
        } => {
            let mut rep = fail(if hit_unsupported_root {
                SearchFailure::UnsupportedRootDegree
            } else {
                SearchFailure::BudgetExhausted
            });
            rep.minor_outside_j = minor_outside_j;
            rep.minor_outside_radical = minor_outside_radical;
            Ok(rep)
        }
    }
}

// ---------------------------------------------------------------------------
// Diagonal scalars for the modular ideals.
// ---------------------------------------------------------------------------

/// Where the diagonal transformation lands.
#[derive(Clone, Debug, PartialEq)]
pub enum DiagonalTarget {
    /// Jacobian ideal of x^p + y^q + z^r + xyz.
    Milnor { p: u32, q: u32, r: u32 },
    /// Jacobian ideal of the limit y^q + z^r + xyz.
    Limit { q: u32, r: u32 },
}

#[derive(Clone, Debug)]
pub struct DiagonalSolution {
    pub field: CoefficientField,
    /// Scalars for t1, u1, v1 of the permuted modular ideal.
    pub scalars: [FieldElement; 3],
    /// Permutation sigma applied to the sorted indices: the solved system
    /// uses (p,q,r) = (sorted[sigma[0]], sorted[sigma[1]], sorted[sigma[2]]).
    pub perm: [usize; 3],
    pub indices: (u32, u32, u32),
    pub target: DiagonalTarget,
}

/// Smallest-degree value v with v^m = w: d runs over divisors of m and the
/// first exact (m/d)-th root s of w yields v = theta with theta^d = s.
fn solve_power(w: &Rational, m: u32) -> Result<(CoefficientField, FieldElement)> {
    assert!(m >= 1);
    if w.is_zero() {
        return Err(Error::DivisionByZero);
    }
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        if let Some(s) = rational_nth_root(w, m / d) {
            if d == 1 {
                let q = CoefficientField::rationals();
                let v = q.from_rational(s);
                return Ok((q, v));
            }
            let k = CoefficientField::binomial_extension(d, &s)?;
            let v = k.generator()?;
            return Ok((k, v));
        }
    }
    unreachable!("d = m always yields the exact root s = w")
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Extended gcd over i64: returns (g, x, y) with a x + b y = g.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

struct DiagonalEquations {
    p: u32,
    q: u32,
    r: u32,
    c: Rational,
    d: Rational,
    e: Rational,
}

impl DiagonalEquations {
    /// Residuals of the three proportionality equations; all must vanish.
    fn check(&self, field: &CoefficientField, a: &FieldElement, b: &FieldElement, g: &FieldElement) -> bool {
        let lift = |r: &Rational| field.from_rational(r.clone());
        let pr = |x: &FieldElement, n: u32| field.pow(x, n);
        let eq1 = field.add(
            &field.mul(&lift(&self.c), &pr(a, self.p - 1)),
            &field.mul(&lift(&crate::field::rat_int(self.p as i64)), &field.mul(b, g)),
        );
        let eq2 = field.add(
            &field.mul(&lift(&self.d), &pr(b, self.q - 1)),
            &field.mul(&lift(&crate::field::rat_int(self.q as i64)), &field.mul(a, g)),
        );
        let eq3 = field.add(
            &field.mul(&lift(&self.e), &pr(g, self.r - 1)),
            &field.mul(&lift(&crate::field::rat_int(self.r as i64)), &field.mul(a, b)),
        );
        eq1.is_zero() && eq2.is_zero() && eq3.is_zero()
    }
}

fn rat_pow(base: &Rational, n: i64) -> Rational {
    use num_traits::One;
    let mut acc = Rational::one();
    let magnitude = n.unsigned_abs() as u32;
    for _ in 0..magnitude {
        acc *= base;
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Solves c alpha^{p-1} = -p beta gamma, d beta^{q-1} = -q alpha gamma,
/// e gamma^{r-1} = -r alpha beta for the full Milnor target, adjoining at
/// most one radical. Requires gcd(q, r) = 1 or an equal pair of indices.
fn solve_full_system(eqs: &DiagonalEquations) -> Result<(CoefficientField, [FieldElement; 3])> {
    let (p, q, r) = (eqs.p, eqs.q, eqs.r);
    let (c, d, e) = (eqs.c.clone(), eqs.d.clone(), eqs.e.clone());
    let ip = crate::field::rat_int(p as i64);
    let iq = crate::field::rat_int(q as i64);
    let ir = crate::field::rat_int(r as i64);
    if q == r {
        // beta = gamma, alpha = -d beta^{q-2} / q;
        // beta^{(q-2)(p-1)-2} = -p (-q/d)^{p-1} / c
        let m = (q - 2) * (p - 1);
        assert!(m >= 3, "hyperbolic with q = r");
        let m = m - 2;
        let w = -&ip * rat_pow(&(-&iq / &d), (p - 1) as i64) / &c;
        let (field, beta) = solve_power(&w, m)?;
        let alpha = field.mul_rational(&field.pow(&beta, q - 2), &(-&d / &iq));
        let gamma = beta.clone();
        return Ok((field, [alpha, beta, gamma]));
    }
    if p == q {
        // alpha = beta, gamma = -c alpha^{p-2} / p;
        // alpha^{(p-2)(r-1)-2} = -r (-p/c)^{r-1} / e
        let m = (p - 2) * (r - 1);
        assert!(m >= 3, "hyperbolic with p = q");
        let m = m - 2;
        let w = -&ir * rat_pow(&(-&ip / &c), (r - 1) as i64) / &e;
        let (field, alpha) = solve_power(&w, m)?;
        let beta = alpha.clone();
        let gamma = field.mul_rational(&field.pow(&alpha, p - 2), &(-&c / &ip));
        return Ok((field, [alpha, beta, gamma]));
    }
    // distinct indices: alpha^a = C2^q / C1^N1 with
    // C1 = q c / (p d), beta^q = C1 alpha^p
    // N1 = (q-1)(r-1) - 1, C2 = (-1)^r r q^{r-1} / (e d^{r-1}),
    // beta^N1 = C2 alpha^r; needs gcd(q, N1) = gcd(q, r) = 1
    let n1 = (q - 1) * (r - 1) - 1;
    if gcd_u32(q, n1) != 1 {
        return Err(Error::UnsupportedRootDegree(gcd_u32(q, n1)));
    }
    let c1 = &iq * &c / (&ip * &d);
    let sign = if r % 2 == 0 { Rational::from(num_bigint::BigInt::from(1)) } else { -Rational::from(num_bigint::BigInt::from(1)) };
    let c2 = sign * &ir * rat_pow(&iq, (r - 1) as i64) / (&e * rat_pow(&d, (r - 1) as i64));
    let a_exp = p * n1 - q * r;
    debug_assert_eq!(a_exp, (p * q * r).wrapping_sub(p * q + p * r + q * r) as u32);
    let a_star = rat_pow(&c2, q as i64) / rat_pow(&c1, n1 as i64);
    let (field, alpha) = solve_power(&a_star, a_exp)?;
    // Bezout x q + y N1 = 1: beta = (C1 alpha^p)^x (C2 alpha^r)^y
    let (g, x, y) = ext_gcd(q as i64, n1 as i64);
    debug_assert_eq!(g, 1);
    let t1 = field.mul_rational(&field.pow(&alpha, p), &c1);
    let t2 = field.mul_rational(&field.pow(&alpha, r), &c2);
    let beta = field.mul(&field.pow_i(&t1, x)?, &field.pow_i(&t2, y)?);
    // gamma from d beta^{q-1} = -q alpha gamma
    let gamma = field.mul_rational(
        &field.div(&field.pow(&beta, q - 1), &alpha)?,
        &(-&d / &iq),
    );
    Ok((field, [alpha, beta, gamma]))
}

/// Limit-target system with c_p = 0: d beta^{q-1} = -q alpha gamma and
/// e gamma^{r-1} = -r alpha beta.
fn solve_limit_system(eqs: &DiagonalEquations) -> Result<(CoefficientField, [FieldElement; 3])> {
    let (q, r) = (eqs.q, eqs.r);
    let (d, e) = (eqs.d.clone(), eqs.e.clone());
    let iq = crate::field::rat_int(q as i64);
    let ir = crate::field::rat_int(r as i64);
    if q == r {
        // beta = gamma = 1, alpha = -d/q; consistency needs e = d
        let field = CoefficientField::rationals();
        let alpha = field.from_rational(-&d / &iq);
        let one = field.one();
        return Ok((field, [alpha, one.clone(), one]));
    }
    // beta = 1: gamma^r = r d / (q e), alpha = -e gamma^{r-1} / r
    let w = &ir * &d / (&iq * &e);
    let (field, gamma) = solve_power(&w, r)?;
    let alpha = field.mul_rational(&field.pow(&gamma, r - 1), &(-&e / &ir));
    let beta = field.one();
    Ok((field, [alpha, beta, gamma]))
}

/// Solves the proportionality system matching the reduced modular ideal of
/// (p, q, r) to the Jacobian generators of the T-series germ (no vanishing
/// coefficient) or of the limit germ (exactly one vanishing coefficient,
/// permuted into the first slot). More than one vanishing coefficient is a
/// symmetric exception and is routed elsewhere.
pub fn solve_diagonal(p: u32, q: u32, r: u32) -> Result<DiagonalSolution> {
    let profile = crate::modular::subseries_profile(p, q, r)?;
    let vanishing = [profile.c_vanishes, profile.d_vanishes, profile.e_vanishes];
    let count = vanishing.iter().filter(|&&v| v).count();
    if count >= 2 {
        return Err(Error::SymmetricException(p, q, r));
    }
    let sorted = [p, q, r];
    let perms_distinct: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    if count == 1 {
        // permute the vanishing coefficient into the first slot
        let v = vanishing.iter().position(|&x| x).unwrap();
        let perm = match v {
            0 => [0usize, 1, 2],
            1 => [1, 0, 2],
            _ => [2, 0, 1],
        };
        let (pp, qq, rr) = (sorted[perm[0]], sorted[perm[1]], sorted[perm[2]]);
        let eqs = DiagonalEquations {
            p: pp,
            q: qq,
            r: rr,
            c: Rational::zero(),
            d: crate::modular::coefficient_d(pp, qq, rr, qq)?,
            e: crate::modular::coefficient_e(pp, qq, rr, rr)?,
        };
        let (field, scalars) = solve_limit_system(&eqs)?;
        // sanity on the two live equations
        let full = DiagonalEquations { c: Rational::zero(), ..eqs };
        debug_assert!({
            let lift = |r: &Rational| field.from_rational(r.clone());
            let eq2 = field.add(
                &field.mul(&lift(&full.d), &field.pow(&scalars[1], full.q - 1)),
                &field.mul(
                    &lift(&crate::field::rat_int(full.q as i64)),
                    &field.mul(&scalars[0], &scalars[2]),
                ),
            );
            eq2.is_zero()
        });
        return Ok(DiagonalSolution {
            field,
            scalars,
            perm,
            indices: (pp, qq, rr),
            target: DiagonalTarget::Limit { q: qq, r: rr },
        });
    }
    // no vanishing coefficient: full system; pick a permutation admitting
    // the single-radical extraction
    let mut last_err = Error::UnsupportedRootDegree(0);
    for perm in perms_distinct {
        let (pp, qq, rr) = (sorted[perm[0]], sorted[perm[1]], sorted[perm[2]]);
        let eqs = DiagonalEquations {
            p: pp,
            q: qq,
            r: rr,
            c: crate::modular::coefficient_c(pp, qq, rr, pp)?,
            d: crate::modular::coefficient_d(pp, qq, rr, qq)?,
            e: crate::modular::coefficient_e(pp, qq, rr, rr)?,
        };
        match solve_full_system(&eqs) {
            Ok((field, scalars)) => {
                assert!(
                    eqs.check(&field, &scalars[0], &scalars[1], &scalars[2]),
                    "diagonal scalars must satisfy the proportionality system"
                );
                return Ok(DiagonalSolution {
                    field,
                    scalars,
                    perm,
                    indices: (pp, qq, rr),
                    target: DiagonalTarget::Milnor {
                        p: pp,
                        q: qq,
                        r: rr,
                    },
                });
            }
            Err(e @ Error::UnsupportedRootDegree(_)) => {
                last_err = e;
                continue;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat_int;
    use crate::order::TermOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::field_ctx;

    fn local_ctx(vars: &[&str]) -> FieldCtx {
        field_ctx(&CoefficientField::rationals(), vars, TermOrder::LocalDegrevlex)
    }

    #[test]
    fn coefficient_ideal_toy() {
        // A = B = C[[x]]/(x^2), full ansatz x -> a1*1 + a2*x:
        // reduced image a1^2 + 2 a1 a2 x gives J = (a1^2, a1 a2)
        let ctx = local_ctx(&["x"]);
        let x2 = parse_polynomial("x^2", &ctx).unwrap();
        let i = Ideal::new(&ctx, vec![x2]);
        let b = LocalAlgebra::new(&i).unwrap();
        let kbase = b.kbase().unwrap().to_vec();
        assert_eq!(kbase.len(), 2);
        let ansatz = Ansatz::full(vec!["x".into()], kbase, &CoefficientField::rationals());
        let j = coefficient_ideal(&i, &b, &ansatz).unwrap();
        let printed: Vec<String> = j.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed.len(), 2);
        assert!(printed.iter().any(|s| s.contains("^2")));
        // and the zero ideal stays zero
        let zero = Ideal::new(&ctx, vec![]);
        let j0 = coefficient_ideal(&zero, &b, &ansatz).unwrap();
        assert!(j0.is_zero());
    }

    #[test]
    fn find_surjection_identity_toy() {
        let ctx = local_ctx(&["x"]);
        let x2 = parse_polynomial("x^2", &ctx).unwrap();
        let i = Ideal::new(&ctx, vec![x2]);
        let report = find_surjection(&i, &i, &IsoSearchOptions::default()).unwrap();
        assert!(report.succeeded(), "{:?}", report.failure);
        let map = report.map.unwrap();
        // point (0, 1): x maps to x
        assert_eq!(map.images()[0].to_string(), "x");
        assert!(report.verification.unwrap().is_isomorphism());
    }

    #[test]
    fn truncation_surjection_but_not_isomorphism() {
        let ctx = local_ctx(&["x"]);
        let i3 = Ideal::new(&ctx, vec![parse_polynomial("x^3", &ctx).unwrap()]);
        let i2 = Ideal::new(&ctx, vec![parse_polynomial("x^2", &ctx).unwrap()]);
        // isomorphism mode refuses on dimensions
        let rep = find_surjection(&i3, &i2, &IsoSearchOptions::default()).unwrap();
        assert!(matches!(
            rep.failure,
            Some(SearchFailure::CertifiedImpossible(_))
        ));
        // surjection mode finds x -> x
        let rep = find_surjection(
            &i3,
            &i2,
            &IsoSearchOptions {
                require_isomorphism: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(rep.succeeded());
        let v = rep.verification.unwrap();
        assert_eq!(v.verdict, Verdict::Surjection);
    }

    #[test]
    fn verify_identity_map() {
        let ctx = local_ctx(&["x", "y"]);
        let i = Ideal::new(
            &ctx,
            vec![
                parse_polynomial("x^2", &ctx).unwrap(),
                parse_polynomial("y^3", &ctx).unwrap(),
            ],
        );
        let map = AlgebraMap::new(
            vec!["x".into(), "y".into()],
            &ctx,
            vec![
                parse_polynomial("x", &ctx).unwrap(),
                parse_polynomial("y", &ctx).unwrap(),
            ],
        )
        .unwrap();
        let rep = verify(&map, &i, &i).unwrap();
        assert_eq!(rep.verdict, Verdict::Isomorphism);
        let amb = check_ambient_isomorphism(&map, &i, &i).unwrap();
        assert_eq!(amb.verdict, Verdict::Isomorphism);
    }

    #[test]
    fn perturbed_map_fails_with_witness() {
        let ctx = local_ctx(&["x"]);
        let i = Ideal::new(&ctx, vec![parse_polynomial("x^2", &ctx).unwrap()]);
        let map = AlgebraMap::new(
            vec!["x".into()],
            &ctx,
            vec![parse_polynomial("x + x^2", &ctx).unwrap()],
        )
        .unwrap();
        // phi(x^2) = (x + x^2)^2 = x^2 (1 + x)^2 is still in (x^2): fine
        let rep = verify(&map, &i, &i).unwrap();
        assert_eq!(rep.verdict, Verdict::Isomorphism);
        // against a target where it genuinely fails
        let target = Ideal::new(&ctx, vec![parse_polynomial("x^3", &ctx).unwrap()]);
        let rep = verify(&map, &i, &target).unwrap();
        assert!(matches!(rep.verdict, Verdict::Failure(_)));
    }

    #[test]
    fn ambient_check_on_monomial_ideals() {
        // identity relabeling (t1,u1,v1) -> (x,y,z) carries
        // (u1 v1, t1 v1, t1 u1) onto the jacobian of xyz
        let src = local_ctx(&["t1", "u1", "v1"]);
        let dst = local_ctx(&["x", "y", "z"]);
        let i_a = Ideal::new(
            &src,
            vec![
                parse_polynomial("u1*v1", &src).unwrap(),
                parse_polynomial("t1*v1", &src).unwrap(),
                parse_polynomial("t1*u1", &src).unwrap(),
            ],
        );
        let f = parse_polynomial("x*y*z", &dst).unwrap();
        let i_b = crate::ideal::jacobian_ideal(&f).unwrap();
        let map = AlgebraMap::new(
            vec!["t1".into(), "u1".into(), "v1".into()],
            &dst,
            vec![
                parse_polynomial("x", &dst).unwrap(),
                parse_polynomial("y", &dst).unwrap(),
                parse_polynomial("z", &dst).unwrap(),
            ],
        )
        .unwrap();
        let rep = check_ambient_isomorphism(&map, &i_a, &i_b).unwrap();
        assert_eq!(rep.verdict, Verdict::Isomorphism);
        assert_eq!(rep.dim_source, Dim::Infinite);
    }

    #[test]
    fn diagonal_solution_shapes() {
        // (5,4,3): distinct indices, one radical of degree dividing 13
        let sol = solve_diagonal(5, 4, 3).unwrap();
        assert_eq!(sol.target, DiagonalTarget::Milnor { p: 5, q: 4, r: 3 });
        // (5,5,5): symmetric, degree-2 radical at most
        let sol = solve_diagonal(5, 5, 5).unwrap();
        assert!(sol.field.degree() <= 2);
        // (5,3,3): sub-series, limit target, rational scalars
        let sol = solve_diagonal(5, 3, 3).unwrap();
        assert_eq!(sol.target, DiagonalTarget::Limit { q: 3, r: 3 });
        assert!(sol.field.is_rational_field());
        // symmetric exceptions are routed away
        assert!(matches!(
            solve_diagonal(4, 4, 4),
            Err(Error::SymmetricException(4, 4, 4))
        ));
        // parabolic input propagates
        assert!(matches!(
            solve_diagonal(3, 3, 3),
            Err(Error::ParabolicBase(3, 3, 3))
        ));
        let _ = rat_int(0);
    }
}
