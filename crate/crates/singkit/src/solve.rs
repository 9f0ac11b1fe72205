//! Zero-dimensional solving over the parameter ring: saturation by a
//! minor, triangular back-substitution through per-variable eliminants,
//! rational roots where they exist, at most one adjoined radical of degree
//! at most four, and deterministic specialization of free parameters.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{rational_nth_root, uni_deg, uni_divrem, uni_gcd, CoefficientField, FieldElement, Rational};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::{FieldCtx, FieldPoly, PolyCtx, Polynomial};
use crate::stdbasis::{reduced_normal_form, standard_basis, StandardBasis};

/// Deterministic sequence of specialization values for free parameters.
pub fn specialization_sequence() -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for k in 1i64..=4 {
        out.push(crate::field::rat_int(k));
        out.push(crate::field::rat_int(-k));
        out.push(crate::field::rat(1, k + 1));
        out.push(crate::field::rat(-1, k + 1));
    }
    out
}

#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Point {
        field: CoefficientField,
        values: Vec<FieldElement>,
    },
    /// Every candidate direction was exhausted without a point.
    Exhausted {
        hit_unsupported_root: bool,
    },
}

pub struct Budget {
    pub steps: u64,
    pub deadline: Option<std::time::Instant>,
}

impl Budget {
    pub fn from_env(default_steps: u64) -> Budget {
        let deadline = std::env::var("SINGKIT_BUDGET_MS")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .map(|ms| std::time::Instant::now() + std::time::Duration::from_millis(ms));
        Budget {
            steps: default_steps,
            deadline,
        }
    }

    fn spend(&mut self, n: u64) -> Result<()> {
        if self.steps < n {
            return Err(Error::BudgetExhausted);
        }
        self.steps -= n;
        if let Some(d) = self.deadline {
            if std::time::Instant::now() > d {
                return Err(Error::BudgetExhausted);
            }
        }
        Ok(())
    }
}

/// Squarefree part of a monic univariate polynomial (little-endian).
fn squarefree_part(m: &[Rational]) -> Vec<Rational> {
    let deriv: Vec<Rational> = m
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from(num_bigint::BigInt::from(i)))
        .collect();
    let g = uni_gcd(m, &deriv);
    if uni_deg(&g).unwrap_or(0) == 0 {
        return m.to_vec();
    }
    let (q, _) = uni_divrem(m, &g);
    // make monic
    let d = uni_deg(&q).unwrap();
    let lead = q[d].clone();
    q.iter().map(|c| c / &lead).collect()
}

/// Rational roots of a squarefree monic rational polynomial, found without
/// integer factorization: linear case, binomials via exact n-th roots,
/// quadratics via a perfect-square discriminant test, plus small candidate
/// values for higher degrees.
fn rational_roots(s: &[Rational]) -> Vec<Rational> {
    let deg = match uni_deg(s) {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let mut roots = Vec::new();
    if deg == 1 {
        roots.push(-&s[0] / &s[1]);
        return roots;
    }
    // binomial T^d - c
    if s[1..deg].iter().all(|c| c.is_zero()) {
        let c = -s[0].clone();
        if let Some(r) = rational_nth_root(&c, deg as u32) {
            roots.push(r.clone());
            if deg % 2 == 0 && !r.is_zero() {
                roots.push(-r);
            }
        }
        roots.sort();
        roots.dedup();
        return roots;
    }
    if deg == 2 {
        // T^2 + bT + c with discriminant b^2 - 4c
        let b = &s[1] / &s[2];
        let c = &s[0] / &s[2];
        let disc = &b * &b - Rational::from(num_bigint::BigInt::from(4)) * &c;
        if let Some(sq) = rational_nth_root(&disc, 2) {
            let two = Rational::from(num_bigint::BigInt::from(2));
            roots.push((-&b + &sq) / &two);
            roots.push((-&b - &sq) / &two);
        }
        roots.sort();
        roots.dedup();
        return roots;
    }
    // higher degree: probe small candidates
    for cand in specialization_sequence() {
        let mut acc = Rational::zero();
        for c in s.iter().rev() {
            acc = acc * &cand + c;
        }
        if acc.is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Divides a root out of a squarefree polynomial.
fn deflate(s: &[Rational], root: &Rational) -> Vec<Rational> {
    let lin = vec![-root.clone(), Rational::one()];
    let (q, r) = uni_divrem(s, &lin);
    debug_assert!(r.is_empty());
    q
}

struct SolveState {
    hit_unsupported_root: bool,
}

/// Minimal polynomial of the class of variable `var` in the Artinian
/// quotient by a global-order basis; monic, coefficients in the ambient
/// field, little-endian.
fn minimal_polynomial(
    sb: &StandardBasis,
    kbase: &[Monomial],
    var: usize,
) -> Result<Vec<FieldElement>> {
    let ctx = sb.ctx();
    let field = &ctx.ring;
    let dim = kbase.len();
    let v = Polynomial::var(ctx, var);
    let mut power = Polynomial::one(ctx);
    let mut vectors: Vec<Vec<FieldElement>> = Vec::new();
    loop {
        let nf = reduced_normal_form(&power, sb)?;
        let mut coords = vec![field.zero(); dim];
        for (m, c) in nf.terms() {
            let idx = kbase.iter().position(|b| b == m).expect("staircase");
            coords[idx] = c.clone();
        }
        if !vectors.is_empty() {
            // try to express coords as a combination of the previous powers
            let mut m = Matrix::zero(field, dim, vectors.len());
            for (j, col) in vectors.iter().enumerate() {
                for i in 0..dim {
                    *m.at_mut(i, j) = col[i].clone();
                }
            }
            if let Some(sol) = m.solve(&coords)? {
                // v^k = sum sol_j v^j => minpoly = T^k - sum sol_j T^j
                let mut out: Vec<FieldElement> = sol.iter().map(|s| field.neg(s)).collect();
                out.push(field.one());
                return Ok(out);
            }
        }
        vectors.push(coords);
        if vectors.len() > dim + 1 {
            unreachable!("dependence must appear by dimension count");
        }
        power = power.mul(&v);
    }
}

/// Per-variable root-extraction plan.
enum Eliminant {
    /// value of the variable, directly in the ambient field
    Linear(FieldElement),
    /// squarefree rational eliminant of degree >= 2
    Rational(Vec<Rational>),
    /// degree >= 2 with coefficients outside Q
    Unsupported,
}

fn substitute_value(
    gens: &[FieldPoly],
    ctx: &FieldCtx,
    var: usize,
    value: &FieldElement,
) -> (FieldCtx, Vec<FieldPoly>) {
    let keep: Vec<usize> = (0..ctx.nvars()).filter(|&i| i != var).collect();
    let new_ctx = PolyCtx::new(
        ctx.ring.clone(),
        keep.iter().map(|&i| ctx.vars[i].clone()).collect(),
        ctx.order.clone(),
    );
    let field = &ctx.ring;
    let new_gens = gens
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = m.exp(var);
                    let coeff = if e == 0 {
                        c.clone()
                    } else {
                        field.mul(c, &field.pow(value, e))
                    };
                    (m.project(&keep), coeff)
                })
                .collect();
            Polynomial::from_terms(&new_ctx, terms)
        })
        .filter(|g: &FieldPoly| !g.is_zero())
        .collect();
    (new_ctx, new_gens)
}

fn promote_gens(
    gens: &[FieldPoly],
    ctx: &FieldCtx,
    field: &CoefficientField,
) -> Result<(FieldCtx, Vec<FieldPoly>)> {
    let new_ctx = PolyCtx {
        ring: field.clone(),
        vars: ctx.vars.clone(),
        order: ctx.order.clone(),
    };
    let gens = gens
        .iter()
        .map(|g| g.map_coefficients(&new_ctx, |c| field.embed(&ctx.ring, c)))
        .collect::<Result<Vec<_>>>()?;
    Ok((new_ctx, gens))
}

/// Depth-first triangular solve. `assignment` collects (original variable
/// index, value); variables are indexed by their name's position in the
/// original variable list.
#[allow(clippy::too_many_arguments)]
fn solve_rec(
    ctx: &FieldCtx,
    gens: &[FieldPoly],
    remaining: &[usize],
    assignment: &mut Vec<(usize, FieldElement)>,
    accept: &dyn Fn(&CoefficientField, &[(usize, FieldElement)]) -> bool,
    budget: &mut Budget,
    state: &mut SolveState,
) -> Result<Option<(CoefficientField, Vec<(usize, FieldElement)>)>> {
    budget.spend(1)?;
    if remaining.is_empty() {
        if accept(&ctx.ring, assignment) {
            return Ok(Some((ctx.ring.clone(), assignment.clone())));
        }
        return Ok(None);
    }
    let sb = standard_basis(&Ideal::new(ctx, gens.to_vec()))?;
    if sb.contains_unit() {
        return Ok(None);
    }
    // positive-dimensional: specialize the first variable lacking a pure
    // power in the lead ideal
    let free = (0..ctx.nvars()).find(|&i| {
        !sb.staircase().iter().any(|m| m.is_pure_power_of(i))
            && !sb.staircase().iter().any(|m| m.is_one())
    });
    if let Some(var) = free {
        for value in specialization_sequence() {
            budget.spend(1)?;
            let v = ctx.ring.from_rational(value);
            let (new_ctx, new_gens) = substitute_value(gens, ctx, var, &v);
            assignment.push((remaining[var], v));
            let rest: Vec<usize> = remaining
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, &o)| o)
                .collect();
            if let Some(found) =
                solve_rec(&new_ctx, &new_gens, &rest, assignment, accept, budget, state)?
            {
                return Ok(Some(found));
            }
            assignment.pop();
        }
        return Ok(None);
    }
    // zero-dimensional: per-variable eliminants, preferring linear ones
    let kbase = sb.kbase()?;
    let mut candidates: Vec<(usize, usize, usize, Eliminant)> = Vec::new();
    for var in 0..ctx.nvars() {
        let mp = minimal_polynomial(&sb, &kbase, var)?;
        let deg = mp.len() - 1;
        if deg == 1 {
            candidates.push((0, 1, var, Eliminant::Linear(ctx.ring.neg(&mp[0]))));
            continue;
        }
        let rats: Option<Vec<Rational>> = mp.iter().map(|c| c.as_rational().cloned()).collect();
        match rats {
            Some(v) => {
                let s = squarefree_part(&v);
                candidates.push((0, uni_deg(&s).unwrap(), var, Eliminant::Rational(s)));
            }
            None => candidates.push((1, deg, var, Eliminant::Unsupported)),
        }
    }
    candidates.sort_by_key(|(unsupported, deg, var, _)| (*unsupported, *deg, *var));
    let (_, _, var, elim) = candidates.remove(0);
    let rest: Vec<usize> = remaining
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != var)
        .map(|(_, &o)| o)
        .collect();
    match elim {
        Eliminant::Unsupported => {
            state.hit_unsupported_root = true;
            Ok(None)
        }
        Eliminant::Linear(value) => {
            budget.spend(1)?;
            let (new_ctx, new_gens) = substitute_value(gens, ctx, var, &value);
            assignment.push((remaining[var], value));
            if let Some(found) =
                solve_rec(&new_ctx, &new_gens, &rest, assignment, accept, budget, state)?
            {
                return Ok(Some(found));
            }
            assignment.pop();
            Ok(None)
        }
        Eliminant::Rational(elim) => {
            let deg = uni_deg(&elim).unwrap();
            // rational roots first
            let roots = rational_roots(&elim);
            let mut residual = elim.clone();
            for r in &roots {
                residual = deflate(&residual, r);
            }
            for r in &roots {
                budget.spend(1)?;
                let v = ctx.ring.from_rational(r.clone());
                let (new_ctx, new_gens) = substitute_value(gens, ctx, var, &v);
                assignment.push((remaining[var], v));
                if let Some(found) =
                    solve_rec(&new_ctx, &new_gens, &rest, assignment, accept, budget, state)?
                {
                    return Ok(Some(found));
                }
                assignment.pop();
            }
            // one radical, degree <= 4, only from the prime field
            let rdeg = uni_deg(&residual).unwrap_or(0);
            if rdeg >= 2 {
                if !ctx.ring.is_rational_field() || rdeg > 4 || deg > 4 {
                    state.hit_unsupported_root = true;
                    return Ok(None);
                }
                budget.spend(5)?;
                let ext = CoefficientField::extension(residual.clone())?;
                let theta = ext.generator()?;
                let (ectx, egens) = promote_gens(gens, ctx, &ext)?;
                // re-embed previously assigned rational values
                let mut lifted: Vec<(usize, FieldElement)> = Vec::with_capacity(assignment.len());
                for (i, v) in assignment.iter() {
                    lifted.push((*i, ext.embed(&ctx.ring, v)?));
                }
                let saved = assignment.clone();
                *assignment = lifted;
                let (new_ctx, new_gens) = substitute_value(&egens, &ectx, var, &theta);
                assignment.push((remaining[var], theta));
                if let Some(found) =
                    solve_rec(&new_ctx, &new_gens, &rest, assignment, accept, budget, state)?
                {
                    return Ok(Some(found));
                }
                *assignment = saved;
            }
            Ok(None)
        }
    }
}

/// Searches V(J) for a point at which at least one of `minors` does not
/// vanish, walking rational roots first and adjoining at most one radical
/// of degree <= 4. Free parameters are specialized from the deterministic
/// sequence with backtracking.
pub fn solve_parameter_system(
    j: &Ideal,
    minors: &[FieldPoly],
    budget: &mut Budget,
) -> Result<SolveOutcome> {
    let ctx = j.ctx();
    assert!(ctx.order.is_global(), "parameter solving is a global-ring task");
    let n = ctx.nvars();
    let minors = minors.to_vec();
    let accept = move |field: &CoefficientField, assignment: &[(usize, FieldElement)]| -> bool {
        if minors.is_empty() {
            return true;
        }
        let mut point = vec![field.zero(); n];
        for (i, v) in assignment {
            point[*i] = v.clone();
        }
        minors.iter().any(|m| {
            let promoted = match m.promote(field) {
                Ok(p) => p,
                Err(_) => return false,
            };
            !promoted.evaluate(&point).is_zero()
        })
    };
    let mut assignment = Vec::new();
    let remaining: Vec<usize> = (0..n).collect();
    let mut state = SolveState {
        hit_unsupported_root: false,
    };
    let found = match solve_rec(
        ctx,
        j.gens(),
        &remaining,
        &mut assignment,
        &accept,
        budget,
        &mut state,
    ) {
        Ok(f) => f,
        Err(Error::BudgetExhausted) => {
            return Err(Error::BudgetExhausted);
        }
        Err(e) => return Err(e),
    };
    match found {
        Some((field, assignment)) => {
            let mut values = vec![field.zero(); n];
            for (i, v) in assignment {
                values[i] = v;
            }
            // sanity: the point really lies on V(J)
            for g in j.gens() {
                let gg = g.promote(&field)?;
                assert!(
                    gg.evaluate(&values).is_zero(),
                    "solver returned a point off the variety"
                );
            }
            Ok(SolveOutcome::Point { field, values })
        }
        None => Ok(SolveOutcome::Exhausted {
            hit_unsupported_root: state.hit_unsupported_root,
        }),
    }
}

/// Saturation J : minor^inf via the auxiliary-variable trick.
pub fn saturate_by(j: &Ideal, minor: &FieldPoly) -> Result<Ideal> {
    let ctx = j.ctx();
    let mut vars: Vec<String> = vec!["zz_sat".to_string()];
    vars.extend(ctx.vars.iter().cloned());
    let ext = PolyCtx::new(ctx.ring.clone(), vars, crate::order::TermOrder::elimination(1));
    let map: Vec<usize> = (1..=ctx.nvars()).collect();
    let mut gens: Vec<FieldPoly> = j
        .gens()
        .iter()
        .map(|g| crate::stdbasis::reindex_poly(g, &ext, &map))
        .collect();
    let zm = crate::stdbasis::reindex_poly(minor, &ext, &map).mul(&Polynomial::var(&ext, 0));
    gens.push(Polynomial::one(&ext).sub(&zm));
    let extended = Ideal::new(&ext, gens);
    // eliminate the auxiliary variable
    let elim = crate::stdbasis::eliminate(
        &Ideal::new(
            &PolyCtx::new(ext.ring.clone(), ext.vars.as_ref().clone(), crate::order::TermOrder::Degrevlex),
            extended.gens().to_vec(),
        ),
        &[0],
    )?;
    Ok(elim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_int};
    use crate::order::TermOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::field_ctx;

    fn budget() -> Budget {
        Budget {
            steps: 10_000,
            deadline: None,
        }
    }

    #[test]
    fn toy_system_with_minor_filter() {
        // J = (a1^2, a1*a2), minor a2: expected point (0, 1)
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["a1", "a2"],
            TermOrder::Degrevlex,
        );
        let j = Ideal::new(
            &ctx,
            vec![
                parse_polynomial("a1^2", &ctx).unwrap(),
                parse_polynomial("a1*a2", &ctx).unwrap(),
            ],
        );
        let minor = parse_polynomial("a2", &ctx).unwrap();
        match solve_parameter_system(&j, &[minor], &mut budget()).unwrap() {
            SolveOutcome::Point { field, values } => {
                assert_eq!(values[0], field.zero());
                assert_eq!(values[1], field.one());
            }
            other => panic!("expected a point, got {other:?}"),
        }
    }

    #[test]
    fn quadratic_extension_root() {
        // J = (a^2 - 2), minor a: needs theta with theta^2 = 2
        let ctx = field_ctx(&CoefficientField::rationals(), &["a"], TermOrder::Degrevlex);
        let j = Ideal::new(&ctx, vec![parse_polynomial("a^2 - 2", &ctx).unwrap()]);
        let minor = parse_polynomial("a", &ctx).unwrap();
        match solve_parameter_system(&j, &[minor], &mut budget()).unwrap() {
            SolveOutcome::Point { field, values } => {
                assert_eq!(field.degree(), 2);
                let sq = field.mul(&values[0], &values[0]);
                assert_eq!(sq, field.from_integer(2));
            }
            other => panic!("expected extension point, got {other:?}"),
        }
    }

    #[test]
    fn rational_quadratic_prefers_rational_roots() {
        // (a - 2)(a - 3) = a^2 - 5a + 6: rational roots, no extension
        let ctx = field_ctx(&CoefficientField::rationals(), &["a"], TermOrder::Degrevlex);
        let j = Ideal::new(&ctx, vec![parse_polynomial("a^2 - 5a + 6", &ctx).unwrap()]);
        match solve_parameter_system(&j, &[], &mut budget()).unwrap() {
            SolveOutcome::Point { field, values } => {
                assert!(field.is_rational_field());
                let v = values[0].as_rational().unwrap().clone();
                assert!(v == rat_int(2) || v == rat_int(3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn saturation_matches_hand_computation() {
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["a1", "a2"],
            TermOrder::Degrevlex,
        );
        let j = Ideal::new(
            &ctx,
            vec![
                parse_polynomial("a1^2", &ctx).unwrap(),
                parse_polynomial("a1*a2", &ctx).unwrap(),
            ],
        );
        let minor = parse_polynomial("a2", &ctx).unwrap();
        let sat = saturate_by(&j, &minor).unwrap();
        assert_eq!(sat.gens().len(), 1);
        assert_eq!(sat.gens()[0].to_string(), "a1");
    }

    #[test]
    fn specialization_sequence_is_stable() {
        let seq = specialization_sequence();
        assert_eq!(seq[0], rat_int(0));
        assert_eq!(seq[1], rat_int(1));
        assert_eq!(seq[2], rat_int(-1));
        assert_eq!(seq[3], rat(1, 2));
    }
}
