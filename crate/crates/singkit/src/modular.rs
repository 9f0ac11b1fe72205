//! The closed-form modular ideal I(p,q,r) of the hyperbolic T-series:
//! coefficient combinatorics, generator construction, and the sub-series
//! vanishing profile with its line-component count.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Rational};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{FieldCtx, FieldPoly, PolyCtx, Polynomial};

/// a(p,q,r) = pqr (1 - 1/p - 1/q - 1/r) = pqr - qr - pr - pq.
pub fn coefficient_a(p: u32, q: u32, r: u32) -> Rational {
    let (p, q, r) = (
        BigInt::from(p),
        BigInt::from(q),
        BigInt::from(r),
    );
    Rational::from(&p * &q * &r - &q * &r - &p * &r - &p * &q)
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

fn rat_pow(base: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= base;
    }
    acc
}

/// c_i = prod_{k=1}^{i} a(p-k+1, q, r) / (i! a^{i-2}); requires a nonzero
/// base coefficient and 2 <= i <= p.
pub fn coefficient_c(p: u32, q: u32, r: u32, i: u32) -> Result<Rational> {
    let a = coefficient_a(p, q, r);
    if a.is_zero() {
        return Err(Error::ParabolicBase(p, q, r));
    }
    assert!((2..=p).contains(&i), "c_i needs 2 <= i <= p");
    let mut num = Rational::one();
    for k in 1..=i {
        num *= coefficient_a(p - k + 1, q, r);
    }
    Ok(num / (Rational::from(factorial(i)) * rat_pow(&a, i - 2)))
}

/// d_i shifts the second index: by the symmetry of a this is c_i of the
/// permuted triple.
pub fn coefficient_d(p: u32, q: u32, r: u32, i: u32) -> Result<Rational> {
    let a = coefficient_a(p, q, r);
    if a.is_zero() {
        return Err(Error::ParabolicBase(p, q, r));
    }
    assert!((2..=q).contains(&i), "d_i needs 2 <= i <= q");
    let mut num = Rational::one();
    for k in 1..=i {
        num *= coefficient_a(p, q - k + 1, r);
    }
    Ok(num / (Rational::from(factorial(i)) * rat_pow(&a, i - 2)))
}

/// e_i shifts the third index.
pub fn coefficient_e(p: u32, q: u32, r: u32, i: u32) -> Result<Rational> {
    let a = coefficient_a(p, q, r);
    if a.is_zero() {
        return Err(Error::ParabolicBase(p, q, r));
    }
    assert!((2..=r).contains(&i), "e_i needs 2 <= i <= r");
    let mut num = Rational::one();
    for k in 1..=i {
        num *= coefficient_a(p, q, r - k + 1);
    }
    Ok(num / (Rational::from(factorial(i)) * rat_pow(&a, i - 2)))
}

/// Integer test: the first coefficient vanishes iff 1/k + 1/q + 1/r = 1 is
/// solvable with 1 <= k <= p, i.e. k = qr/(qr - q - r) is such an integer.
fn vanishes_by_criterion(p: u32, q: u32, r: u32) -> bool {
    let denom = (q as i64) * (r as i64) - (q as i64) - (r as i64);
    if denom <= 0 {
        return false;
    }
    let num = (q as i64) * (r as i64);
    num % denom == 0 && num / denom <= p as i64 && num / denom >= 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubseriesProfile {
    pub c_vanishes: bool,
    pub d_vanishes: bool,
    pub e_vanishes: bool,
    pub line_components: usize,
}

impl SubseriesProfile {
    pub fn is_subseries(&self) -> bool {
        self.line_components >= 1
    }

    pub fn is_symmetric_exception(&self) -> bool {
        self.line_components >= 2
    }
}

/// Decides the vanishing of c_p, d_q, e_r by the integer criterion; the
/// number of vanishing coefficients equals the number of line components
/// of the modular stratum.
pub fn subseries_profile(p: u32, q: u32, r: u32) -> Result<SubseriesProfile> {
    if coefficient_a(p, q, r).is_zero() {
        return Err(Error::ParabolicBase(p, q, r));
    }
    let c = vanishes_by_criterion(p, q, r);
    let d = vanishes_by_criterion(q, p, r);
    let e = vanishes_by_criterion(r, q, p);
    Ok(SubseriesProfile {
        c_vanishes: c,
        d_vanishes: d,
        e_vanishes: e,
        line_components: [c, d, e].iter().filter(|&&x| x).count(),
    })
}

/// The modular ideal of a hyperbolic T-series germ over its deformation
/// parameters t_1..t_p, u_1..u_{q-1}, v_1..v_{r-1}.
#[derive(Clone, Debug)]
pub struct ModularIdealData {
    pub indices: (u32, u32, u32),
    pub a: Rational,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    pub e: Vec<Rational>,
    pub ideal: Ideal,
}

fn param_ctx(p: u32, q: u32, r: u32) -> FieldCtx {
    let mut vars = Vec::new();
    for i in 1..=p {
        vars.push(format!("t{i}"));
    }
    for i in 1..=(q - 1) {
        vars.push(format!("u{i}"));
    }
    for i in 1..=(r - 1) {
        vars.push(format!("v{i}"));
    }
    PolyCtx::new(
        CoefficientField::rationals(),
        vars,
        TermOrder::LocalDegrevlex,
    )
}

pub fn modular_ideal(p: u32, q: u32, r: u32) -> Result<ModularIdealData> {
    assert!(p >= 2 && q >= 2 && r >= 2);
    let a = coefficient_a(p, q, r);
    if a.is_zero() {
        return Err(Error::ParabolicBase(p, q, r));
    }
    // c_2..c_p, d_2..d_q, e_2..e_r (the top ones enter the mixed relations)
    let c: Vec<Rational> = (2..=p)
        .map(|i| coefficient_c(p, q, r, i))
        .collect::<Result<_>>()?;
    let d: Vec<Rational> = (2..=q)
        .map(|i| coefficient_d(p, q, r, i))
        .collect::<Result<_>>()?;
    let e: Vec<Rational> = (2..=r)
        .map(|i| coefficient_e(p, q, r, i))
        .collect::<Result<_>>()?;
    let ctx = param_ctx(p, q, r);
    let field = &ctx.ring;
    let n = ctx.nvars();
    let t = |i: u32| -> usize { (i - 1) as usize };
    let u = |i: u32| -> usize { p as usize + (i - 1) as usize };
    let v = |i: u32| -> usize { p as usize + (q - 1) as usize + (i - 1) as usize };
    let a2 = field.from_rational(&a * &a);
    let mut gens: Vec<FieldPoly> = Vec::new();
    // f_i = a^2 t_i - c_i t_1^i, i = 2..p
    for i in 2..=p {
        let lhs = Polynomial::monomial(&ctx, Monomial::var(t(i), n), a2.clone());
        let rhs = Polynomial::monomial(
            &ctx,
            Monomial::var(t(1), n).pow(i),
            field.from_rational(c[(i - 2) as usize].clone()),
        );
        gens.push(lhs.sub(&rhs));
    }
    // g_i = a^2 u_i - d_i u_1^i, i = 2..q-1
    for i in 2..q {
        let lhs = Polynomial::monomial(&ctx, Monomial::var(u(i), n), a2.clone());
        let rhs = Polynomial::monomial(
            &ctx,
            Monomial::var(u(1), n).pow(i),
            field.from_rational(d[(i - 2) as usize].clone()),
        );
        gens.push(lhs.sub(&rhs));
    }
    // h_i = a^2 v_i - e_i v_1^i, i = 2..r-1
    for i in 2..r {
        let lhs = Polynomial::monomial(&ctx, Monomial::var(v(i), n), a2.clone());
        let rhs = Polynomial::monomial(
            &ctx,
            Monomial::var(v(1), n).pow(i),
            field.from_rational(e[(i - 2) as usize].clone()),
        );
        gens.push(lhs.sub(&rhs));
    }
    // u1 v1 - c_p t1^{p-1}, t1 v1 - d_q u1^{q-1}, t1 u1 - e_r v1^{r-1}
    let mono = |idx: usize, other: usize| -> FieldPoly {
        Polynomial::monomial(
            &ctx,
            Monomial::var(idx, n).mul(&Monomial::var(other, n)),
            field.one(),
        )
    };
    let c_p = c.last().unwrap().clone();
    let d_q = d.last().unwrap().clone();
    let e_r = e.last().unwrap().clone();
    gens.push(mono(u(1), v(1)).sub(&Polynomial::monomial(
        &ctx,
        Monomial::var(t(1), n).pow(p - 1),
        field.from_rational(c_p),
    )));
    gens.push(mono(t(1), v(1)).sub(&Polynomial::monomial(
        &ctx,
        Monomial::var(u(1), n).pow(q - 1),
        field.from_rational(d_q),
    )));
    gens.push(mono(t(1), u(1)).sub(&Polynomial::monomial(
        &ctx,
        Monomial::var(v(1), n).pow(r - 1),
        field.from_rational(e_r),
    )));
    Ok(ModularIdealData {
        indices: (p, q, r),
        a,
        c,
        d,
        e,
        ideal: Ideal::new(&ctx, gens),
    })
}

/// The three mixed generators in (t1, u1, v1) only: the image of the full
/// ideal under the exact elimination of the linearly-occurring parameters.
pub fn reduced_modular_ideal(p: u32, q: u32, r: u32) -> Result<Ideal> {
    let data = modular_ideal(p, q, r)?;
    let ctx = PolyCtx::new(
        CoefficientField::rationals(),
        vec!["t1".to_string(), "u1".to_string(), "v1".to_string()],
        TermOrder::LocalDegrevlex,
    );
    let field = &ctx.ring;
    let (t1, u1, v1) = (0usize, 1usize, 2usize);
    let pair = |a: usize, b: usize| {
        Polynomial::monomial(&ctx, Monomial::var(a, 3).mul(&Monomial::var(b, 3)), field.one())
    };
    let power = |a: usize, k: u32, coeff: &Rational| {
        Polynomial::monomial(&ctx, Monomial::var(a, 3).pow(k), field.from_rational(coeff.clone()))
    };
    let gens = vec![
        pair(u1, v1).sub(&power(t1, p - 1, data.c.last().unwrap())),
        pair(t1, v1).sub(&power(u1, q - 1, data.d.last().unwrap())),
        pair(t1, u1).sub(&power(v1, r - 1, data.e.last().unwrap())),
    ];
    Ok(Ideal::new(&ctx, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Dim, LocalAlgebra};
    use crate::field::{rat, rat_int};

    #[test]
    fn base_coefficient_values() {
        assert_eq!(coefficient_a(3, 3, 3), rat_int(0));
        assert_eq!(coefficient_a(4, 3, 3), rat_int(3));
        assert_eq!(coefficient_a(5, 4, 3), rat_int(13));
    }

    #[test]
    fn product_coefficients() {
        // c_2(5,4,3) = a(5,4,3) a(4,4,3) / 2 = 13*8/2 = 52
        assert_eq!(coefficient_c(5, 4, 3, 2).unwrap(), rat_int(52));
        // c_4(4,3,3) picks up the parabolic factor a(3,3,3) = 0
        assert_eq!(coefficient_c(4, 3, 3, 4).unwrap(), rat_int(0));
        // q = r symmetry
        assert_eq!(
            coefficient_d(4, 3, 3, 3).unwrap(),
            coefficient_e(4, 3, 3, 3).unwrap()
        );
        assert!(matches!(
            coefficient_c(3, 3, 3, 2),
            Err(Error::ParabolicBase(3, 3, 3))
        ));
        let _ = rat(1, 2);
    }

    #[test]
    fn profiles_match_known_cases() {
        let p543 = subseries_profile(5, 4, 3).unwrap();
        assert_eq!(p543.line_components, 0);
        let p642 = subseries_profile(6, 4, 2).unwrap();
        assert!(p642.c_vanishes && p642.d_vanishes && !p642.e_vanishes);
        assert_eq!(p642.line_components, 2);
        let p444 = subseries_profile(4, 4, 4).unwrap();
        assert_eq!(p444.line_components, 3);
        let p433 = subseries_profile(4, 3, 3).unwrap();
        assert_eq!(p433.line_components, 1);
        assert!(p433.c_vanishes);
    }

    #[test]
    fn vanishing_agreement_with_product_formula() {
        // integer criterion against the literal product, all hyperbolic
        // triples with p + q + r <= 20
        for p in 2..=16u32 {
            for q in 2..=p {
                for r in 2..=q {
                    if p + q + r > 20 || coefficient_a(p, q, r).is_zero() {
                        continue;
                    }
                    if (q as f64).recip() + (p as f64).recip() + (r as f64).recip() > 1.0 {
                        continue;
                    }
                    let prof = subseries_profile(p, q, r).unwrap();
                    assert_eq!(
                        coefficient_c(p, q, r, p).unwrap().is_zero(),
                        prof.c_vanishes,
                        "c at ({p},{q},{r})"
                    );
                    assert_eq!(
                        coefficient_d(p, q, r, q).unwrap().is_zero(),
                        prof.d_vanishes,
                        "d at ({p},{q},{r})"
                    );
                    assert_eq!(
                        coefficient_e(p, q, r, r).unwrap().is_zero(),
                        prof.e_vanishes,
                        "e at ({p},{q},{r})"
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_ideal_shapes() {
        // all three top coefficients vanish for (4,4,4)
        let red = reduced_modular_ideal(4, 4, 4).unwrap();
        let printed: Vec<String> = red.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["u1*v1", "t1*v1", "t1*u1"]);
        // (4,3,3) keeps two tails and is not Artinian (the t1 line survives)
        let red = reduced_modular_ideal(4, 3, 3).unwrap();
        let a = LocalAlgebra::new(&red).unwrap();
        assert_eq!(a.dim(), Dim::Infinite);
        // (5,4,3) is a fat point of dimension mu = 11
        let red = reduced_modular_ideal(5, 4, 3).unwrap();
        let a = LocalAlgebra::new(&red).unwrap();
        assert_eq!(a.dim(), Dim::Finite(11));
    }

    #[test]
    fn minimal_embedding_recovers_mixed_generators() {
        let data = modular_ideal(5, 4, 3).unwrap();
        let emb = crate::algebra::minimal_embedding(&data.ideal).unwrap();
        let names: Vec<&str> = emb.ideal.ctx().vars.iter().map(|s| s.as_str()).collect();
        assert_eq!(names, vec!["t1", "u1", "v1"]);
        let red = reduced_modular_ideal(5, 4, 3).unwrap();
        let got: Vec<String> = emb.ideal.gens().iter().map(|g| g.to_string()).collect();
        let want: Vec<String> = red.gens().iter().map(|g| g.to_string()).collect();
        for w in &want {
            assert!(got.contains(w), "missing generator {w}; got {got:?}");
        }
    }

    #[test]
    fn permutation_symmetry() {
        // I(5,4,3) and I(4,5,3) agree after swapping the t and u blocks
        let a = reduced_modular_ideal(5, 4, 3).unwrap();
        let b = reduced_modular_ideal(4, 5, 3).unwrap();
        let ctx = a.ctx().clone();
        // rename (t1,u1,v1) of b as (u1,t1,v1) and compare generator sets
        let swapped: Vec<FieldPoly> = b
            .gens()
            .iter()
            .map(|g| {
                let s = g
                    .to_string()
                    .replace("t1", "TT")
                    .replace("u1", "t1")
                    .replace("TT", "u1");
                crate::parse::parse_polynomial(&s, &ctx).unwrap()
            })
            .collect();
        for gen in a.gens() {
            assert!(
                swapped.iter().any(|s| s == gen),
                "generator {gen} not matched"
            );
        }
    }
}
