//! One-parameter splitting families over the tau-constant lines: at t = 1
//! the singular locus splits into the parabolic point at the origin and a
//! branch point, and the local Tjurina numbers add up to tau of the
//! special fibre.

use singkit::algebra::{local_invariants_at, Dim, LocalAlgebra};
use singkit::catalog::{splitting_family, splitting_fiber};
use singkit::field::rat_int;
use singkit::poly::field_ctx;
use singkit::stdbasis::standard_basis;
use singkit::{CoefficientField, Ideal, TermOrder};

fn main() -> singkit::Result<()> {
    for (k, l, q, r) in [(5u32, 4u32, 3u32, 3u32), (6, 4, 3, 3), (6, 5, 4, 2)] {
        let family = splitting_family(k, l, q, r)?;
        println!("family for T({k},{q},{r}) with l = {l}: {family}");
        let fiber = splitting_fiber(k, l, q, r, &rat_int(1))?;
        let field = CoefficientField::rationals();
        let origin = vec![field.zero(); 3];
        let branch = vec![field.from_integer(-1), field.zero(), field.zero()];
        let (_, tau0) = local_invariants_at(&fiber, &origin)?;
        let (_, tau1) = local_invariants_at(&fiber, &branch)?;
        // total affine Tjurina dimension over the whole fibre
        let gctx = field_ctx(&field, &["x", "y", "z"], TermOrder::Degrevlex);
        let fg = singkit::parse_polynomial(&fiber.to_string(), &gctx)?;
        let mut gens: Vec<_> = (0..3).map(|i| fg.derivative(i)).collect();
        gens.push(fg);
        let total = standard_basis(&Ideal::new(&gctx, gens))?
            .dimension()
            .expect("finitely many singular points");
        println!(
            "  t = 1: tau(origin) = {tau0}, tau(-1,0,0) = {tau1}, total = {total}, tau(T({k},{q},{r})) = {}",
            k + q + r - 2
        );
        // the t = 0 fibre is the series germ itself
        let special = splitting_fiber(k, l, q, r, &rat_int(0))?;
        let mu0 = LocalAlgebra::new(&singkit::jacobian_ideal(&special)?)?.dim();
        assert_eq!(mu0, Dim::Finite((k + q + r - 1) as usize));
    }
    Ok(())
}
