//! The bimodal record: the two-generator modular quotient in (s9, s17)
//! has dimension 18 = mu(x^10 + y^3 + x^4 y^2), and the explicit map over
//! the degree-4 extension theta^4 = 17943573032/1269497754275 certifies
//! the isomorphism with the Milnor algebra.

use singkit::algebra::LocalAlgebra;
use singkit::parse::{parse_ideal_file, parse_map_file};
use singkit::{jacobian_ideal, verify, CoefficientField, TermOrder};

fn main() -> singkit::Result<()> {
    let stratum = parse_ideal_file(
        "vars: s9,s17\norder: local\n\
         s9^2 - 9/256*s17^4*s9 - 29342801/335104000*s17^6*s9 - 9963/343146496*s17^8 - 831341932017399/3283872972800000*s17^10\n\
         s17^9 - 67372/106029*s17^7*s9\n",
    )?;
    let ctx = singkit::poly::field_ctx(
        &CoefficientField::rationals(),
        &["x", "y"],
        TermOrder::LocalDegrevlex,
    );
    let f = singkit::parse_polynomial("x^10+y^3+x^4*y^2", &ctx)?;
    let milnor = jacobian_ideal(&f)?;
    let o_m = LocalAlgebra::new(&stratum)?;
    let q_f = LocalAlgebra::new(&milnor)?;
    println!("dim O_M = {}, dim Q(f) = {}", o_m.dim(), q_f.dim());

    // a1 = 8 theta, a2 = 2261952/84215 theta^2, a3 = 753984/84215 theta^2 +
    // 1291937258304/1269497754275, ... with theta^4 = 17943573032/1269497754275
    let map = parse_map_file(
        "source_vars: s9,s17\ntarget_vars: x,y\norder: local\n\
         minpoly: theta^4 - 17943573032/1269497754275\n\
         s17 -> 8*theta*x\n\
         s9 -> 2261952/84215*theta^2*y \
               + (753984/84215*theta^2 + 1291937258304/1269497754275)*x^4 \
               + 9220238621242928785663198981632/1007265342568292675484765625*x^2*y \
               + (25742505984143872/158687219284375*theta^2 + 3073412873747642928554399660544/1007265342568292675484765625)*x^6 \
               + 547510092328050056695293440974819328/377724503463109753306787109375*theta^2*x^4*y \
               + 547510092328050056695293440974819328/1133173510389329259920361328125*theta^2*x^8\n",
    )?;
    let report = verify(&map, &stratum, &milnor)?;
    println!("explicit map verdict: {:?}", report.verdict);
    for (gen, ok, nf) in &report.containment {
        if !ok {
            println!("  witness: NF({gen}) = {nf}");
        }
    }
    Ok(())
}
