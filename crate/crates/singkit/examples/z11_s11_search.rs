//! Shape-guided searches for the Z11 and S11 modular-stratum algebras
//! against the Milnor algebras of their normal forms. The shapes come
//! from the supports of the printed maps (the printed coefficients do not
//! parse uniquely).

use singkit::algebra::LocalAlgebra;
use singkit::iso::{find_surjection, IsoSearchOptions};
use singkit::parse::parse_monomial;
use singkit::{jacobian_ideal, Catalog};

fn main() -> singkit::Result<()> {
    let catalog = Catalog::builtin()?;

    // Z11: stratum in (s1, s2); target Q(f) for the two-variable form
    let z11 = catalog.get("Z11")?;
    let stratum = z11.stratum_ideal().unwrap();
    let f = z11.suspension_free_form();
    println!("Z11 two-variable form: {f}");
    let milnor = jacobian_ideal(&f)?;
    println!(
        "dim O_M = {}, dim Q(f) = {}",
        LocalAlgebra::new(&stratum)?.dim(),
        LocalAlgebra::new(&milnor)?.dim()
    );
    let ctx = f.ctx();
    let shape = vec![
        vec![parse_monomial("x", ctx)?, parse_monomial("y^2", ctx)?],
        vec![
            parse_monomial("x", ctx)?,
            parse_monomial("y", ctx)?,
            parse_monomial("x*y", ctx)?,
            parse_monomial("y^2", ctx)?,
        ],
    ];
    let opts = IsoSearchOptions {
        shape: Some(shape),
        ..Default::default()
    };
    let t0 = std::time::Instant::now();
    let search = find_surjection(&stratum, &milnor, &opts)?;
    println!("Z11 search took {:?}", t0.elapsed());
    match &search.map {
        Some(m) => {
            println!("Z11 map over degree-{} field:", m.field().degree());
            print!("{}", m.format_map_file());
            println!(
                "verdict: {:?}",
                search.verification.as_ref().unwrap().verdict
            );
        }
        None => println!("Z11 search failed: {:?}", search.failure),
    }

    // S11: the transcribed stratum is defective (non-Artinian as printed);
    // the search must detect and report that rather than certify
    let s11 = catalog.get("S11")?;
    let v = s11.validate()?;
    println!("\nS11 stratum_ok = {} ({:?})", v.stratum_ok, v.stratum_note);
    let stratum = s11.stratum_ideal().unwrap();
    let f = s11.suspension_free_form();
    let milnor = jacobian_ideal(&f)?;
    let ctx3 = f.ctx();
    let shape = vec![
        vec![parse_monomial("x", ctx3)?, parse_monomial("z", ctx3)?],
        vec![parse_monomial("y", ctx3)?],
        vec![
            parse_monomial("z", ctx3)?,
            parse_monomial("x^2", ctx3)?,
            parse_monomial("y^2", ctx3)?,
            parse_monomial("x*z", ctx3)?,
            parse_monomial("z^2", ctx3)?,
        ],
    ];
    let opts = IsoSearchOptions {
        shape: Some(shape),
        ..Default::default()
    };
    let search = find_surjection(&stratum, &milnor, &opts)?;
    match &search.map {
        Some(m) => {
            println!("S11 map found:");
            print!("{}", m.format_map_file());
        }
        None => println!("S11 search outcome: {:?}", search.failure),
    }
    Ok(())
}
