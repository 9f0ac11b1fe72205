//! The reduction engine: Mora weak normal forms with their unit
//! certificates, staircases of local standard bases, ideal and radical
//! membership, and elimination.

use singkit::parse::parse_ideal_file;
use singkit::poly::field_ctx;
use singkit::stdbasis::{
    eliminate, ideal_membership, mora_normal_form_witness, radical_membership, standard_basis,
};
use singkit::{parse_polynomial, CoefficientField, Ideal, TermOrder};

fn main() -> singkit::Result<()> {
    let field = CoefficientField::rationals();

    // x lies in (x - x^2) inside the local ring: the witness exhibits the
    // unit u with u*x = q*(x - x^2)
    let ctx = field_ctx(&field, &["x"], TermOrder::LocalDegrevlex);
    let f = parse_polynomial("x", &ctx)?;
    let g = parse_polynomial("x - x^2", &ctx)?;
    let w = mora_normal_form_witness(&f, &[g.clone()])?;
    println!("NF(x, {{x - x^2}}) = {}", w.normal_form);
    println!("unit = {}", w.unit);
    println!("residual identically zero: {}", w.residual(&f, &[g]).is_zero());

    // staircase of the W12 Jacobian ideal
    let ideal = parse_ideal_file(
        "vars: x,y\norder: local\n4*x^3+2*x*y^3\n5*y^4+3*x^2*y^2\n",
    )?;
    let sb = standard_basis(&ideal)?;
    let corners: Vec<String> = sb
        .staircase()
        .iter()
        .map(|m| m.format(&ideal.ctx().vars))
        .collect();
    println!("lead-ideal corners: {}", corners.join(", "));
    println!("quotient dimension: {:?}", sb.dimension());

    // membership and radical membership in a global ring
    let gctx = field_ctx(&field, &["a1", "a2"], TermOrder::Degrevlex);
    let j = Ideal::new(
        &gctx,
        vec![
            parse_polynomial("a1^2", &gctx)?,
            parse_polynomial("a1*a2", &gctx)?,
        ],
    );
    let a1 = parse_polynomial("a1", &gctx)?;
    let a2 = parse_polynomial("a2", &gctx)?;
    println!("a1 in J: {}", ideal_membership(&a1, &j)?);
    println!("a1 in sqrt(J): {}", radical_membership(&a1, &j)?);
    println!("a2 in sqrt(J): {}", radical_membership(&a2, &j)?);

    // elimination
    let ectx = field_ctx(&field, &["z", "a1", "a2"], TermOrder::Degrevlex);
    let sat = Ideal::new(
        &ectx,
        vec![
            parse_polynomial("a1^2", &ectx)?,
            parse_polynomial("a1*a2", &ectx)?,
            parse_polynomial("z*a2 - 1", &ectx)?,
        ],
    );
    let out = eliminate(&sat, &[0])?;
    println!(
        "saturation by a2: ({})",
        out.gens()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}
