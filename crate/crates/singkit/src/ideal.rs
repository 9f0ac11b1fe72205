//! Ideals over a coefficient field, plus the Jacobian and Tjurina ideals
//! of a germ.

use crate::error::{Error, Result};
use crate::poly::{FieldCtx, FieldPoly, Polynomial};

#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ctx: FieldCtx,
    gens: Vec<FieldPoly>,
}

impl Ideal {
    pub fn new(ctx: &FieldCtx, gens: Vec<FieldPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ctx: ctx.clone(),
            gens,
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn gens(&self) -> &[FieldPoly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn with_order(&self, order: &crate::order::TermOrder) -> Ideal {
        let gens: Vec<FieldPoly> = self.gens.iter().map(|g| g.with_order(order)).collect();
        Ideal {
            ctx: self.ctx.with_order(order.clone()),
            gens,
        }
    }
}

fn require_germ(f: &FieldPoly) -> Result<()> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonGerm);
    }
    Ok(())
}

/// The ideal of partial derivatives (d f/d x_1, ..., d f/d x_n).
pub fn jacobian_ideal(f: &FieldPoly) -> Result<Ideal> {
    require_germ(f)?;
    let gens = (0..f.ctx().nvars()).map(|i| f.derivative(i)).collect();
    Ok(Ideal::new(f.ctx(), gens))
}

/// Jacobian ideal together with f itself.
pub fn tjurina_ideal(f: &FieldPoly) -> Result<Ideal> {
    require_germ(f)?;
    let mut gens: Vec<FieldPoly> = (0..f.ctx().nvars()).map(|i| f.derivative(i)).collect();
    gens.push(f.clone());
    Ok(Ideal::new(f.ctx(), gens))
}

/// Generators x_l * (d f/d x_j) of the product ideal m * J(f).
pub fn maximal_ideal_times_jacobian(f: &FieldPoly) -> Result<Ideal> {
    require_germ(f)?;
    let n = f.ctx().nvars();
    let mut gens = Vec::with_capacity(n * n);
    for j in 0..n {
        let d = f.derivative(j);
        for l in 0..n {
            gens.push(d.mul(&Polynomial::var(f.ctx(), l)));
        }
    }
    Ok(Ideal::new(f.ctx(), gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::order::TermOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::field_ctx;

    fn ctx3() -> FieldCtx {
        field_ctx(
            &CoefficientField::rationals(),
            &["x", "y", "z"],
            TermOrder::LocalDegrevlex,
        )
    }

    #[test]
    fn jacobian_of_parabolic_germ() {
        let ctx = ctx3();
        let f = parse_polynomial("x^3+y^3+z^3+x*y*z", &ctx).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        let expect = [
            parse_polynomial("3*x^2+y*z", &ctx).unwrap(),
            parse_polynomial("3*y^2+x*z", &ctx).unwrap(),
            parse_polynomial("3*z^2+x*y", &ctx).unwrap(),
        ];
        assert_eq!(j.gens(), &expect);
    }

    #[test]
    fn tjurina_of_a1() {
        let ctx = field_ctx(
            &CoefficientField::rationals(),
            &["x"],
            TermOrder::LocalDegrevlex,
        );
        let f = parse_polynomial("x^2", &ctx).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        assert_eq!(j.gens().len(), 1);
        assert_eq!(j.gens()[0], parse_polynomial("2*x", &ctx).unwrap());
        let t = tjurina_ideal(&f).unwrap();
        assert_eq!(t.gens().len(), 2);
    }

    #[test]
    fn non_germ_rejected() {
        let ctx = ctx3();
        let f = parse_polynomial("1+x", &ctx).unwrap();
        assert!(matches!(jacobian_ideal(&f), Err(Error::NonGerm)));
    }
}
