//! The closed-form modular ideal of a hyperbolic T-series germ: the full
//! generator list, its minimal embedding onto the three mixed relations,
//! the vanishing profile with line components, and a certified diagonal
//! isomorphism with the Milnor algebra.

use singkit::algebra::{minimal_embedding, LocalAlgebra};
use singkit::cases::certify_modular_isomorphism;
use singkit::modular::{coefficient_a, modular_ideal, subseries_profile};
use singkit::parse::format_ideal_file;

fn main() -> singkit::Result<()> {
    let (p, q, r) = (5, 4, 3);
    println!("a({p},{q},{r}) = {}", coefficient_a(p, q, r));
    let data = modular_ideal(p, q, r)?;
    println!("full ideal in {} parameters:", data.ideal.ctx().nvars());
    print!("{}", format_ideal_file(&data.ideal));

    let emb = minimal_embedding(&data.ideal)?;
    println!("\nminimal embedding:");
    print!("{}", format_ideal_file(&emb.ideal));
    let algebra = LocalAlgebra::new(&emb.ideal)?;
    println!("dimension = {}", algebra.dim());

    let profile = subseries_profile(p, q, r)?;
    println!(
        "vanishing: c={} d={} e={} -> {} line components",
        profile.c_vanishes, profile.d_vanishes, profile.e_vanishes, profile.line_components
    );

    let (sol, ver) = certify_modular_isomorphism(p, q, r)?;
    println!(
        "diagonal scalars over a degree-{} extension; verdict {:?}",
        sol.field.degree(),
        ver.verdict
    );

    // a sub-series member streams to its limit algebra instead
    let (sol, ver) = certify_modular_isomorphism(8, 3, 3)?;
    println!(
        "T(8,3,3): target {:?}, field degree {}, verdict {:?}",
        sol.target,
        sol.field.degree(),
        ver.verdict
    );
    Ok(())
}
