//! Weak normal forms (Mora), standard and Groebner bases, reduced normal
//! forms on Artinian quotients, ideal and radical membership, elimination.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{ecart, FieldCtx, FieldPoly, PolyCtx, Polynomial};
use crate::ring::Ring;

/// A standard basis (local order) or Groebner basis (global order):
/// monic generators whose lead terms generate the lead ideal, plus the
/// minimal lead-term generators (the staircase corners).
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ctx: FieldCtx,
    gens: Vec<FieldPoly>,
    staircase: Vec<Monomial>,
}

impl StandardBasis {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn gens(&self) -> &[FieldPoly] {
        &self.gens
    }

    /// Minimal generators of the lead-term ideal, pairwise incomparable.
    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    pub fn contains_unit(&self) -> bool {
        self.staircase.iter().any(|m| m.is_one())
    }

    pub fn nf(&self, f: &FieldPoly) -> Result<FieldPoly> {
        mora_normal_form(f, &self.gens)
    }

    /// True when every variable has a pure power in the lead ideal.
    pub fn is_artinian(&self) -> bool {
        self.artinian_violation().is_none()
    }

    fn artinian_violation(&self) -> Option<usize> {
        if self.contains_unit() {
            return None;
        }
        (0..self.ctx.nvars()).find(|&i| {
            !self
                .staircase
                .iter()
                .any(|m| m.is_pure_power_of(i))
        })
    }

    fn require_artinian(&self) -> Result<()> {
        match self.artinian_violation() {
            None => Ok(()),
            Some(i) => Err(Error::NotArtinian(self.ctx.vars[i].clone())),
        }
    }

    /// All standard monomials (those outside the lead ideal), sorted
    /// descending under the attached order. Errors when infinite.
    pub fn kbase(&self) -> Result<Vec<Monomial>> {
        self.require_artinian()?;
        let n = self.ctx.nvars();
        if self.contains_unit() {
            return Ok(Vec::new());
        }
        let mut bounds = vec![0u32; n];
        for i in 0..n {
            let b = self
                .staircase
                .iter()
                .filter(|m| m.is_pure_power_of(i))
                .map(|m| m.exp(i))
                .min()
                .expect("artinian check");
            bounds[i] = b;
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !self.staircase.iter().any(|s| s.divides(&m)) {
                out.push(m);
            }
            // odometer over the exponent box
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_unstable_by(|a, b| self.ctx.order.cmp(b, a));
                    return Ok(out);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Quotient dimension when Artinian.
    pub fn dimension(&self) -> Option<usize> {
        self.kbase().ok().map(|k| k.len())
    }

    /// Least N with every degree-N monomial inside the lead ideal.
    pub fn nilpotency_bound(&self) -> Result<u32> {
        let kb = self.kbase()?;
        Ok(kb.iter().map(|m| m.degree()).max().map_or(0, |d| d + 1))
    }

    /// Standard monomials of total degree exactly `k` (finite for every k
    /// even when the quotient is not Artinian).
    pub fn standard_monomials_of_degree(&self, k: u32) -> Vec<Monomial> {
        let n = self.ctx.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(
            i: usize,
            left: u32,
            exps: &mut Vec<u32>,
            staircase: &[Monomial],
            out: &mut Vec<Monomial>,
        ) {
            if i + 1 == exps.len() {
                exps[i] = left;
                let m = Monomial::new(exps.clone());
                if !staircase.iter().any(|s| s.divides(&m)) {
                    out.push(m);
                }
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                rec(i + 1, left - e, exps, staircase, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            return out;
        }
        rec(0, k, &mut exps, &self.staircase, &mut out);
        out.sort_unstable_by(|a, b| self.ctx.order.cmp(b, a));
        out
    }
}

// ---------------------------------------------------------------------------
// Mora weak normal form.
// ---------------------------------------------------------------------------

fn ecart_of<R: Ring>(f: &Polynomial<R>) -> u32 {
    ecart(f).expect("nonzero")
}

/// Weak normal form by Mora's strategy: reducers of minimal ecart, the
/// intermediate result joining the reducer set whenever its ecart is
/// smaller. Valid for local, global and mixed orders.
pub fn mora_normal_form<R: Ring>(
    f: &Polynomial<R>,
    gens: &[Polynomial<R>],
) -> Result<Polynomial<R>> {
    let ring = f.ctx().ring.clone();
    let mut reducers: Vec<Polynomial<R>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut h = f.clone();
    loop {
        let (lm, lc) = match h.lead() {
            None => return Ok(h),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let mut best: Option<(u32, usize)> = None;
        for (i, t) in reducers.iter().enumerate() {
            if t.lead_monomial().unwrap().divides(&lm) {
                let e = ecart_of(t);
                if best.map_or(true, |(be, _)| e < be) {
                    best = Some((e, i));
                }
            }
        }
        let (e_t, idx) = match best {
            None => return Ok(h),
            Some(x) => x,
        };
        if e_t > ecart_of(&h) {
            reducers.push(h.clone());
        }
        let t = &reducers[idx];
        let m = t.lead_monomial().unwrap().div(&lm).expect("divides");
        let factor = ring.mul(&lc, &ring.inv(t.lead_coeff().unwrap())?);
        h = h.sub(&t.mul_term(&m, &factor));
    }
}

/// Result of a tracked Mora reduction: `unit * f = sum quotients_i * g_i
/// + normal_form` with `unit(0) != 0`.
#[derive(Clone, Debug)]
pub struct MoraWitness {
    pub normal_form: FieldPoly,
    pub unit: FieldPoly,
    pub quotients: Vec<FieldPoly>,
}

impl MoraWitness {
    /// The relation `unit*f - sum q_i g_i - h`, which must be zero.
    pub fn residual(&self, f: &FieldPoly, gens: &[FieldPoly]) -> FieldPoly {
        let mut acc = self.unit.mul(f).sub(&self.normal_form);
        for (q, g) in self.quotients.iter().zip(gens) {
            acc = acc.sub(&q.mul(g));
        }
        acc
    }
}

/// Mora reduction with an explicit unit and quotient certificate.
pub fn mora_normal_form_witness(f: &FieldPoly, gens: &[FieldPoly]) -> Result<MoraWitness> {
    let ctx = f.ctx().clone();
    let field = ctx.ring.clone();
    let k = gens.len();
    // each tracked polynomial p carries (a, b): p = a*f + sum b_i g_i
    struct Tracked {
        poly: FieldPoly,
        a: FieldPoly,
        b: Vec<FieldPoly>,
    }
    let zero_b = |ctx: &FieldCtx| vec![Polynomial::zero(ctx); k];
    let mut reducers: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut b = zero_b(&ctx);
        b[i] = Polynomial::one(&ctx);
        reducers.push(Tracked {
            poly: g.clone(),
            a: Polynomial::zero(&ctx),
            b,
        });
    }
    let mut h = Tracked {
        poly: f.clone(),
        a: Polynomial::one(&ctx),
        b: zero_b(&ctx),
    };
    loop {
        let (lm, lc) = match h.poly.lead() {
            None => break,
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let mut best: Option<(u32, usize)> = None;
        for (i, t) in reducers.iter().enumerate() {
            if t.poly.lead_monomial().unwrap().divides(&lm) {
                let e = ecart_of(&t.poly);
                if best.map_or(true, |(be, _)| e < be) {
                    best = Some((e, i));
                }
            }
        }
        let (e_t, idx) = match best {
            None => break,
            Some(x) => x,
        };
        if e_t > ecart_of(&h.poly) {
            reducers.push(Tracked {
                poly: h.poly.clone(),
                a: h.a.clone(),
                b: h.b.clone(),
            });
        }
        let t = &reducers[idx];
        let m = t.poly.lead_monomial().unwrap().div(&lm).expect("divides");
        let factor = field.mul(&lc, &field.inv(t.poly.lead_coeff().unwrap())?);
        h.poly = h.poly.sub(&t.poly.mul_term(&m, &factor));
        h.a = h.a.sub(&t.a.mul_term(&m, &factor));
        for i in 0..k {
            if !t.b[i].is_zero() {
                h.b[i] = h.b[i].sub(&t.b[i].mul_term(&m, &factor));
            }
        }
    }
    // h = a*f + sum b_i g_i, so unit = a and quotients = -b
    let unit = h.a;
    if unit.constant_term().is_zero() {
        // cannot happen: every correction to `a` carries a positive-degree
        // monomial factor
        return Err(Error::OrderMismatch);
    }
    Ok(MoraWitness {
        normal_form: h.poly,
        unit,
        quotients: h.b.into_iter().map(|b| b.neg()).collect(),
    })
}

// ---------------------------------------------------------------------------
// Standard basis computation (Buchberger with Mora normal form).
// ---------------------------------------------------------------------------

fn spoly(f: &FieldPoly, g: &FieldPoly) -> FieldPoly {
    // f, g monic
    let lf = f.lead_monomial().unwrap();
    let lg = g.lead_monomial().unwrap();
    let l = lf.lcm(lg);
    let mf = lf.div(&l).unwrap();
    let mg = lg.div(&l).unwrap();
    let one = f.ctx().ring.one();
    f.mul_term(&mf, &one).sub(&g.mul_term(&mg, &one))
}

/// Computes a minimal standard basis of the ideal under its attached order.
pub fn standard_basis(ideal: &Ideal) -> Result<StandardBasis> {
    let ctx = ideal.ctx().clone();
    let mut basis: Vec<FieldPoly> = Vec::new();
    for g in ideal.gens() {
        if !g.is_zero() {
            basis.push(g.monic()?);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let pair_key = |basis: &[FieldPoly], (i, j): (usize, usize)| {
        let l = basis[i]
            .lead_monomial()
            .unwrap()
            .lcm(basis[j].lead_monomial().unwrap());
        (l.degree(), l)
    };
    while !pairs.is_empty() {
        // degree strategy: smallest lcm degree first, deterministic ties
        let mut best = 0;
        let mut best_key = pair_key(&basis, pairs[0]);
        for (n, &p) in pairs.iter().enumerate().skip(1) {
            let key = pair_key(&basis, p);
            if key.0 < best_key.0
                || (key.0 == best_key.0
                    && (ctx.order.cmp(&key.1, &best_key.1) == std::cmp::Ordering::Less
                        || (key.1 == best_key.1 && p < pairs[best])))
            {
                best = n;
                best_key = key;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        treated.insert((i, j));
        let lti = basis[i].lead_monomial().unwrap();
        let ltj = basis[j].lead_monomial().unwrap();
        // product criterion
        if lti.coprime(ltj) {
            continue;
        }
        // chain criterion: some k with lt_k | lcm and both companion pairs
        // already treated
        let lcm = lti.lcm(ltj);
        let mut chained = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if basis[k].lead_monomial().unwrap().divides(&lcm) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if treated.contains(&p1) && treated.contains(&p2) {
                    chained = true;
                    break;
                }
            }
        }
        if chained {
            continue;
        }
        let s = spoly(&basis[i], &basis[j]);
        let h = mora_normal_form(&s, &basis)?;
        if !h.is_zero() {
            let h = h.monic()?;
            let new = basis.len();
            for t in 0..new {
                pairs.push((t, new));
            }
            basis.push(h);
        }
    }
    // minimize: drop generators whose lead is divisible by another lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].lead_monomial().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].lead_monomial().unwrap();
            if lmj.divides(&lmi) && (*lmj != lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut gens: Vec<FieldPoly> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| if k { Some(g) } else { None })
        .collect();
    gens.sort_by(|a, b| {
        ctx.order
            .cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap())
    });
    let staircase: Vec<Monomial> = gens
        .iter()
        .map(|g| g.lead_monomial().unwrap().clone())
        .collect();
    Ok(StandardBasis {
        ctx,
        gens,
        staircase,
    })
}

/// Fully tail-reduces a Groebner basis under a global order, yielding the
/// unique reduced basis. Must not be used with local orders.
pub fn interreduce_global(sb: &StandardBasis) -> Result<StandardBasis> {
    assert!(sb.ctx.order.is_global(), "tail reduction needs a global order");
    let mut gens = sb.gens.clone();
    for i in 0..gens.len() {
        let others: Vec<FieldPoly> = gens
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        // reduce every term, not only the lead
        let mut acc = Polynomial::zero(&sb.ctx);
        let mut rest = gens[i].clone();
        while let Some((m, c)) = rest.lead().map(|(m, c)| (m.clone(), c.clone())) {
            let mut reduced = false;
            for g in &others {
                let lg = g.lead_monomial().unwrap();
                if lg.divides(&m) {
                    let q = lg.div(&m).unwrap();
                    rest = rest.sub(&g.mul_term(&q, &c));
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                let t = Polynomial::monomial(&sb.ctx, m, c);
                acc = acc.add(&t);
                rest = rest.sub(&t);
            }
        }
        gens[i] = acc.monic()?;
    }
    let staircase = sb.staircase.clone();
    Ok(StandardBasis {
        ctx: sb.ctx.clone(),
        gens,
        staircase,
    })
}

// ---------------------------------------------------------------------------
// Reduced normal forms on Artinian quotients.
// ---------------------------------------------------------------------------

pub(crate) fn promote_to_ring<R: Ring>(
    g: &FieldPoly,
    ctx: &PolyCtx<R>,
    field: &CoefficientField,
) -> Result<Polynomial<R>> {
    g.map_coefficients(ctx, |c| ctx.ring.embed_field(field, c))
}

/// The unique representative of the residue class supported on the
/// staircase monomials. Under a local order the quotient must be Artinian
/// and reduction is truncated at the nilpotency bound (m^N lies in the
/// ideal of the complete local ring once every degree-N monomial is in the
/// lead ideal). Under a global order this is plain terminating division.
/// Works with coefficients in the base field, an extension, or a parameter
/// polynomial ring; the (monic) basis never forces a division.
pub fn reduced_normal_form<R: Ring>(
    f: &Polynomial<R>,
    sb: &StandardBasis,
) -> Result<Polynomial<R>> {
    let bound = if sb.ctx.order.is_global() {
        None
    } else {
        Some(sb.nilpotency_bound()?)
    };
    let ctx = f.ctx().clone();
    let gens: Vec<Polynomial<R>> = sb
        .gens
        .iter()
        .map(|g| promote_to_ring(g, &ctx, &sb.ctx.ring))
        .collect::<Result<_>>()?;
    let truncate = |p: Polynomial<R>| match bound {
        Some(b) => p.truncate_at_degree(b),
        None => p,
    };
    let mut h = truncate(f.clone());
    'outer: loop {
        for (m, c) in h.terms() {
            for g in &gens {
                let lg = g.lead_monomial().unwrap();
                if lg.divides(m) {
                    let q = lg.div(m).unwrap();
                    let c = c.clone();
                    // basis is monic: no division needed
                    h = truncate(h.sub(&g.mul_term(&q, &c)));
                    continue 'outer;
                }
            }
        }
        return Ok(h);
    }
}

/// Coordinates of the residue class of f over the kbase monomials.
pub fn reduce_to_coordinates(
    f: &FieldPoly,
    sb: &StandardBasis,
    kbase: &[Monomial],
) -> Result<Vec<crate::field::FieldElement>> {
    let nf = reduced_normal_form(f, sb)?;
    let field = &f.ctx().ring;
    let mut coords = vec![field.zero(); kbase.len()];
    for (m, c) in nf.terms() {
        let idx = kbase
            .iter()
            .position(|b| b == m)
            .expect("reduced NF supported on the staircase");
        coords[idx] = c.clone();
    }
    Ok(coords)
}

// ---------------------------------------------------------------------------
// Membership, radical membership, elimination.
// ---------------------------------------------------------------------------

pub fn ideal_membership(f: &FieldPoly, ideal: &Ideal) -> Result<bool> {
    let sb = standard_basis(ideal)?;
    Ok(sb.nf(f)?.is_zero())
}

/// Reindexes a polynomial into a context whose variable list contains the
/// old variables at positions `map[i]`.
pub(crate) fn reindex_poly(p: &FieldPoly, ctx: &FieldCtx, map: &[usize]) -> FieldPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u32; ctx.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] = e;
            }
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(ctx, terms)
}

/// Rabinowitsch test: f in sqrt(I) iff 1 in I + (1 - z f). Requires a
/// global order on the ambient.
pub fn radical_membership(f: &FieldPoly, ideal: &Ideal) -> Result<bool> {
    let ctx = ideal.ctx();
    assert!(
        ctx.order.is_global(),
        "radical membership runs in a global polynomial ring"
    );
    let mut vars: Vec<String> = vec!["zz_rab".to_string()];
    vars.extend(ctx.vars.iter().cloned());
    let ext = PolyCtx::new(ctx.ring.clone(), vars, TermOrder::Degrevlex);
    let map: Vec<usize> = (1..=ctx.nvars()).collect();
    let mut gens: Vec<FieldPoly> = ideal
        .gens()
        .iter()
        .map(|g| reindex_poly(g, &ext, &map))
        .collect();
    let zf = reindex_poly(f, &ext, &map).mul(&Polynomial::var(&ext, 0));
    gens.push(Polynomial::one(&ext).sub(&zf));
    let sb = standard_basis(&Ideal::new(&ext, gens))?;
    Ok(sb.contains_unit())
}

/// Generators of I intersected with the subring omitting `drop`, via a
/// block order ranking the dropped variables first.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    let ctx = ideal.ctx();
    let n = ctx.nvars();
    let dropped: HashSet<usize> = drop.iter().copied().collect();
    let mut old_to_new = vec![usize::MAX; n];
    let mut order_front = Vec::new();
    let mut kept_old = Vec::new();
    for i in 0..n {
        if dropped.contains(&i) {
            order_front.push(i);
        } else {
            kept_old.push(i);
        }
    }
    let mut new_vars = Vec::with_capacity(n);
    for (new_idx, &old) in order_front.iter().chain(kept_old.iter()).enumerate() {
        old_to_new[old] = new_idx;
        new_vars.push(ctx.vars[old].clone());
    }
    let block = TermOrder::elimination(order_front.len());
    let ext = PolyCtx::new(ctx.ring.clone(), new_vars, block);
    let gens: Vec<FieldPoly> = ideal
        .gens()
        .iter()
        .map(|g| reindex_poly(g, &ext, &old_to_new))
        .collect();
    let sb = standard_basis(&Ideal::new(&ext, gens))?;
    // a generator is dropped-variable-free iff its lead is
    let split = order_front.len();
    let kept_ctx = PolyCtx::new(
        ctx.ring.clone(),
        kept_old.iter().map(|&i| ctx.vars[i].clone()).collect(),
        TermOrder::Degrevlex,
    );
    let keep_slots: Vec<usize> = (split..n).collect();
    let mut out = Vec::new();
    for g in sb.gens() {
        let lm = g.lead_monomial().unwrap();
        if (0..split).all(|i| lm.exp(i) == 0) {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (m.project(&keep_slots), c.clone()))
                .collect();
            out.push(Polynomial::from_terms(&kept_ctx, terms));
        }
    }
    Ok(Ideal::new(&kept_ctx, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::parse::parse_polynomial;
    use crate::poly::field_ctx;

    fn local_ctx(vars: &[&str]) -> FieldCtx {
        field_ctx(&CoefficientField::rationals(), vars, TermOrder::LocalDegrevlex)
    }

    #[test]
    fn mora_reduces_x_by_x_minus_x2() {
        // x = (1-x)^{-1} (x - x^2) lies in the ideal; the witness relation
        // u*x - q*(x - x^2) - h must vanish identically with u a unit.
        let ctx = local_ctx(&["x"]);
        let f = parse_polynomial("x", &ctx).unwrap();
        let g = parse_polynomial("x - x^2", &ctx).unwrap();
        let w = mora_normal_form_witness(&f, &[g.clone()]).unwrap();
        assert!(w.normal_form.is_zero());
        assert!(!w.unit.constant_term().is_zero());
        assert!(w.residual(&f, &[g]).is_zero());
    }

    #[test]
    fn mora_leaves_foreign_variables() {
        let ctx = local_ctx(&["x", "y"]);
        let f = parse_polynomial("y", &ctx).unwrap();
        let g = parse_polynomial("x", &ctx).unwrap();
        let h = mora_normal_form(&f, &[g]).unwrap();
        assert_eq!(h, f);
    }

    #[test]
    fn standard_basis_of_x_minus_x2() {
        let ctx = local_ctx(&["x"]);
        let g = parse_polynomial("x - x^2", &ctx).unwrap();
        let sb = standard_basis(&Ideal::new(&ctx, vec![g])).unwrap();
        assert_eq!(sb.staircase(), &[Monomial::new(vec![1])]);
        // oracle: the weak normal form of x is 0
        let x = parse_polynomial("x", &ctx).unwrap();
        assert!(sb.nf(&x).unwrap().is_zero());
    }

    #[test]
    fn standard_basis_of_unit_ideal() {
        let ctx = local_ctx(&["x", "y"]);
        let one = Polynomial::one(&ctx);
        let sb = standard_basis(&Ideal::new(&ctx, vec![one])).unwrap();
        assert!(sb.contains_unit());
        assert_eq!(sb.gens().len(), 1);
        assert_eq!(sb.dimension(), Some(0));
    }

    #[test]
    fn parabolic_jacobian_has_eight_standard_monomials() {
        let ctx = local_ctx(&["x", "y", "z"]);
        let f = parse_polynomial("x^3+y^3+z^3+x*y*z", &ctx).unwrap();
        let j = crate::ideal::jacobian_ideal(&f).unwrap();
        let sb = standard_basis(&j).unwrap();
        assert_eq!(sb.kbase().unwrap().len(), 8);
        // every original generator reduces to zero
        for g in j.gens() {
            assert!(sb.nf(g).unwrap().is_zero());
        }
    }

    #[test]
    fn reduced_nf_matches_truncated_linear_algebra() {
        // I = (x^2 - x^3): x^2 is in the ideal of C{x} since
        // x^2 = (1-x)^{-1}(x^2 - x^3). Oracle: spans of truncations.
        let ctx = local_ctx(&["x"]);
        let g = parse_polynomial("x^2 - x^3", &ctx).unwrap();
        let sb = standard_basis(&Ideal::new(&ctx, vec![g.clone()])).unwrap();
        // oracle in C[x]/(x^4): row space of {x^2 - x^3, x^3}
        // contains x^2, so the class of x^2 is 0
        let x2 = parse_polynomial("x^2", &ctx).unwrap();
        let nf = reduced_normal_form(&x2, &sb).unwrap();
        assert!(nf.is_zero());
        // and a class that is genuinely nonzero stays on the staircase
        let x = parse_polynomial("x", &ctx).unwrap();
        let nfx = reduced_normal_form(&x, &sb).unwrap();
        assert_eq!(nfx, x);
    }

    #[test]
    fn membership_and_radical_membership() {
        let gctx = field_ctx(&CoefficientField::rationals(), &["x", "y"], TermOrder::Degrevlex);
        let x = parse_polynomial("x", &gctx).unwrap();
        let x2 = parse_polynomial("x^2", &gctx).unwrap();
        let xy = parse_polynomial("x*y", &gctx).unwrap();
        let i1 = Ideal::new(&gctx, vec![x2.clone()]);
        assert!(!ideal_membership(&x, &i1).unwrap());
        assert!(radical_membership(&x, &i1).unwrap());
        let i2 = Ideal::new(&gctx, vec![xy]);
        assert!(!radical_membership(&x, &i2).unwrap());
    }

    #[test]
    fn radical_membership_alpha_case() {
        // alpha2 not in sqrt(alpha1^2, alpha1*alpha2): V(J) is the alpha1=0
        // line where alpha2 is not identically zero
        let gctx = field_ctx(
            &CoefficientField::rationals(),
            &["a1", "a2"],
            TermOrder::Degrevlex,
        );
        let j = Ideal::new(
            &gctx,
            vec![
                parse_polynomial("a1^2", &gctx).unwrap(),
                parse_polynomial("a1*a2", &gctx).unwrap(),
            ],
        );
        let a1 = parse_polynomial("a1", &gctx).unwrap();
        let a2 = parse_polynomial("a2", &gctx).unwrap();
        assert!(radical_membership(&a1, &j).unwrap());
        assert!(!radical_membership(&a2, &j).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        // eliminate((s3 - s1^2, s1^3), {s3}) = (s1^3)
        let gctx = field_ctx(
            &CoefficientField::rationals(),
            &["s1", "s3"],
            TermOrder::Degrevlex,
        );
        let i = Ideal::new(
            &gctx,
            vec![
                parse_polynomial("s3 - s1^2", &gctx).unwrap(),
                parse_polynomial("s1^3", &gctx).unwrap(),
            ],
        );
        let e = eliminate(&i, &[1]).unwrap();
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "s1^3");
        assert_eq!(eliminate(&i, &[]).unwrap(), i);

        // Rabinowitsch-style saturation: eliminating z from
        // (a1^2, a1*a2, z*a2 - 1) yields (a1)
        let gctx = field_ctx(
            &CoefficientField::rationals(),
            &["z", "a1", "a2"],
            TermOrder::Degrevlex,
        );
        let i = Ideal::new(
            &gctx,
            vec![
                parse_polynomial("a1^2", &gctx).unwrap(),
                parse_polynomial("a1*a2", &gctx).unwrap(),
                parse_polynomial("z*a2 - 1", &gctx).unwrap(),
            ],
        );
        let e = eliminate(&i, &[0]).unwrap();
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "a1");
    }


    #[test]
    fn global_interreduction_gives_reduced_basis() {
        let gctx = field_ctx(&CoefficientField::rationals(), &["x", "y"], TermOrder::Degrevlex);
        let i = Ideal::new(
            &gctx,
            vec![
                parse_polynomial("x^2 + y^2 - 1", &gctx).unwrap(),
                parse_polynomial("x*y - 1", &gctx).unwrap(),
            ],
        );
        let sb = standard_basis(&i).unwrap();
        let red = interreduce_global(&sb).unwrap();
        assert_eq!(red.staircase(), sb.staircase());
        // no term of any generator is divisible by another lead
        for (i, g) in red.gens().iter().enumerate() {
            for (j, h) in red.gens().iter().enumerate() {
                if i == j {
                    continue;
                }
                let lh = h.lead_monomial().unwrap();
                for (m, _) in g.terms() {
                    assert!(!lh.divides(m), "{g} reducible by {h}");
                }
            }
        }
        // same ideal: original generators still reduce to zero
        for g in i.gens() {
            assert!(mora_normal_form(g, red.gens()).unwrap().is_zero());
        }
    }

    #[test]
    fn lead_ideal_stable_under_presentation() {
        let ctx = local_ctx(&["x", "y"]);
        let f = parse_polynomial("x^2 + y^3", &ctx).unwrap();
        let g = parse_polynomial("x*y + x^3", &ctx).unwrap();
        let i1 = Ideal::new(&ctx, vec![f.clone(), g.clone()]);
        // same ideal, messier presentation
        let h1 = f.add(&g.mul(&parse_polynomial("1 + x", &ctx).unwrap()));
        let h2 = g.sub(&f.mul(&parse_polynomial("y", &ctx).unwrap()));
        let i2 = Ideal::new(&ctx, vec![h1, h2, f]);
        let s1 = standard_basis(&i1).unwrap();
        let s2 = standard_basis(&i2).unwrap();
        assert_eq!(s1.staircase(), s2.staircase());
    }
}
