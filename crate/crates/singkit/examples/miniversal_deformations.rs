//! Miniversal deformations F = f + sum s_i b_i over a Tjurina-algebra
//! basis, with the default staircase basis or a caller-chosen one, plus
//! Hesse forms for the exceptional families.

use singkit::catalog::{hesse_family, hesse_form, miniversal_deformation};
use singkit::parse::parse_monomial;
use singkit::poly::field_ctx;
use singkit::{parse_polynomial, CoefficientField, TermOrder};

fn main() -> singkit::Result<()> {
    let field = CoefficientField::rationals();
    let ctx = field_ctx(&field, &["x", "y"], TermOrder::LocalDegrevlex);

    // A1 has a single deformation parameter
    let a1 = parse_polynomial("x^2+y^2", &ctx)?;
    let def = miniversal_deformation(&a1, None)?;
    println!("A1 family: {}", def.family);

    // W12 with the displayed basis ordering
    let w12 = parse_polynomial("x^4+y^5+x^2*y^3", &ctx)?;
    let basis: Vec<_> = [
        "y^4", "x*y^3", "y^3", "x*y^2", "y^2", "x^2*y", "x*y", "y", "x^2", "x", "1",
    ]
    .iter()
    .map(|s| parse_monomial(s, &ctx))
    .collect::<singkit::Result<_>>()?;
    let def = miniversal_deformation(&w12, Some(&basis))?;
    println!("W12 family over {} parameters:", def.basis.len());
    println!("  {}", def.family);

    // Hesse construction: the perturbation direction of the exceptional
    // families is the Hessian determinant of the quasihomogeneous part
    let ctx3 = field_ctx(&field, &["x", "y", "z"], TermOrder::LocalDegrevlex);
    let f0 = parse_polynomial("x^3+y^7+z^2", &ctx3)?;
    println!("hesse_form(x^3+y^7+z^2) = {}", hesse_form(&f0));
    println!(
        "hesse family at lambda = 1/504: {}",
        hesse_family(&f0, &singkit::field::rat(1, 504))
    );
    Ok(())
}
