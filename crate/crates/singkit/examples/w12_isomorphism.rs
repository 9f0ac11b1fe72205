//! Certifies the isomorphism between the W12 modular-stratum algebra and
//! the Milnor algebra of x^4 + y^5 + x^2 y^3, both by verifying the
//! explicit map over Q(theta), theta^2 = -1386/6089, and by running the
//! shape-guided surjection search from scratch.

use singkit::algebra::LocalAlgebra;
use singkit::iso::{find_surjection, IsoSearchOptions};
use singkit::parse::{parse_ideal_file, parse_map_file, parse_monomial};
use singkit::{jacobian_ideal, verify, CoefficientField, TermOrder};

fn main() -> singkit::Result<()> {
    let stratum = parse_ideal_file(
        "vars: s1,s2\norder: local\n\
         s1^4 - 30445/7392*s1^2*s2^2 + 4240139/1897280*s1^3*s2^2\n\
         s2^3 - 2696/48125*s1^3*s2\n",
    )?;
    let ctx = singkit::poly::field_ctx(
        &CoefficientField::rationals(),
        &["x", "y"],
        TermOrder::LocalDegrevlex,
    );
    let f = singkit::parse_polynomial("x^4+y^5+x^2*y^3", &ctx)?;
    let milnor = jacobian_ideal(&f)?;

    let o_m = LocalAlgebra::new(&stratum)?;
    let q_f = LocalAlgebra::new(&milnor)?;
    println!("dim O_M = {}, dim Q(f) = {}", o_m.dim(), q_f.dim());

    // the explicit map, over theta^2 = -1386/6089
    let map = parse_map_file(
        "source_vars: s1,s2\ntarget_vars: x,y\norder: local\n\
         minpoly: theta^2 + 1386/6089\n\
         s1 -> 2668050/2051993*y - 11759762521878525/25638801731506361*y^2\n\
         s2 -> 2134440/2051993*theta*x\n",
    )?;
    let report = verify(&map, &stratum, &milnor)?;
    println!("explicit map verdict: {:?}", report.verdict);

    // shape-guided search: s1 -> {y, y^2}, s2 -> {x}
    let shape = vec![
        vec![parse_monomial("y", &ctx)?, parse_monomial("y^2", &ctx)?],
        vec![parse_monomial("x", &ctx)?],
    ];
    let opts = IsoSearchOptions {
        shape: Some(shape),
        ..Default::default()
    };
    let search = find_surjection(&stratum, &milnor, &opts)?;
    match &search.map {
        Some(m) => {
            println!("search found a map over a degree-{} field:", m.field().degree());
            print!("{}", m.format_map_file());
            println!(
                "search verdict: {:?}",
                search.verification.as_ref().unwrap().verdict
            );
        }
        None => println!("search failed: {:?}", search.failure),
    }
    Ok(())
}
