//! Milnor and Tjurina numbers of hypersurface germs with exact
//! arithmetic: isolated germs get finite dimensions, non-isolated ones
//! are detected and reported as infinite.

use singkit::algebra::{local_invariants_at, milnor_number, tjurina_number};
use singkit::poly::field_ctx;
use singkit::{parse_polynomial, CoefficientField, TermOrder};

fn main() -> singkit::Result<()> {
    let field = CoefficientField::rationals();
    let ctx = field_ctx(&field, &["x", "y", "z"], TermOrder::LocalDegrevlex);
    for src in [
        "x^2+y^2+z^2",          // A1
        "x^3+y^3+z^3+x*y*z",    // parabolic, mu = tau
        "x^4+y^3+z^3+x*y*z",    // hyperbolic, tau = mu - 1
        "x^4+y^5+z^2+x^2*y^3",  // W12
        "y^3+z^3+x*y*z",        // the limit germ: non-isolated
    ] {
        let f = parse_polynomial(src, &ctx)?;
        println!(
            "{src}: mu = {}, tau = {}",
            milnor_number(&f)?,
            tjurina_number(&f)?
        );
    }

    // invariants at a shifted origin: x (x+1)^2 has an A1 point at x = -1
    let ctx1 = field_ctx(&field, &["x"], TermOrder::LocalDegrevlex);
    let g = parse_polynomial("x^3 + 2x^2 + x", &ctx1)?;
    let (mu, tau) = local_invariants_at(&g, &[field.from_integer(-1)])?;
    println!("x(x+1)^2 at x = -1: mu = {mu}, tau = {tau}");
    Ok(())
}
