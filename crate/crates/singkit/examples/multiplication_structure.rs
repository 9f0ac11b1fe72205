//! The multiplication-by-f structure on the Milnor algebra: mult
//! matrices, the annihilator report, and the membership m f in m J(f)
//! that makes the Milnor algebra a contact invariant when tau = mu - 1.

use singkit::algebra::{annihilator_check, milnor_algebra};
use singkit::poly::field_ctx;
use singkit::{parse_polynomial, CoefficientField, TermOrder};

fn main() -> singkit::Result<()> {
    let field = CoefficientField::rationals();
    let ctx2 = field_ctx(&field, &["x", "y"], TermOrder::LocalDegrevlex);
    let ctx3 = field_ctx(&field, &["x", "y", "z"], TermOrder::LocalDegrevlex);

    // W12: tau = mu - 1, so Ann(f) is the maximal ideal
    let w12 = parse_polynomial("x^4+y^5+x^2*y^3", &ctx2)?;
    let rep = annihilator_check(&w12)?;
    println!(
        "W12: mu = {}, tau = {}, dim Ann = {}, Ann = m: {}, m f in m J(f): {}",
        rep.mu, rep.tau, rep.dim_ann, rep.equals_maximal_ideal, rep.mf_in_mj
    );

    // quasihomogeneous: f is in J(f), multiplication by f is zero
    let p8 = parse_polynomial("x^3+y^3+z^3+x*y*z", &ctx3)?;
    let rep = annihilator_check(&p8)?;
    println!(
        "P8: mu = {}, tau = {}, dim Ann = {} (multiplication by f vanishes)",
        rep.mu, rep.tau, rep.dim_ann
    );

    // the full matrix for a small example
    let a2 = parse_polynomial("x^3 + y^2", &ctx2)?;
    let q = milnor_algebra(&a2)?;
    let m = q.mult_matrix(&a2)?;
    println!("A2 mult-by-f matrix ({}x{}):", m.rows, m.cols);
    for i in 0..m.rows {
        let row: Vec<String> = (0..m.cols)
            .map(|j| field.format_element(m.at(i, j)))
            .collect();
        println!("  [{}]", row.join(", "));
    }
    println!("kernel dimension = {}", m.kernel()?.len());
    Ok(())
}
