//! Exact arithmetic in simple extensions Q(theta): the quadratic and
//! quartic fields hosting the catalog isomorphism coefficients, with lazy
//! zero-divisor detection for reducible moduli.

use singkit::field::{rat, rat_int, CoefficientField};
use singkit::Error;

fn main() -> singkit::Result<()> {
    // theta^2 = -1386/6089
    let k = CoefficientField::binomial_extension(2, &rat(-1386, 6089))?;
    let theta = k.generator()?;
    let a = k.add(&k.from_rational(rat(2134440, 2051993)), &theta);
    let inv = k.inv(&a)?;
    println!("a = {}", k.format_element(&a));
    println!("a^-1 = {}", k.format_element(&inv));
    println!("a * a^-1 = {}", k.format_element(&k.mul(&a, &inv)));

    // theta^4 = 17943573032/1269497754275: theta^2 plays the square root
    let c = rat(17943573032, 1269497754275);
    let k4 = CoefficientField::binomial_extension(4, &c)?;
    let t = k4.generator()?;
    let t2 = k4.mul(&t, &t);
    println!(
        "(theta^2)^2 = {} (the radicand)",
        k4.format_element(&k4.mul(&t2, &t2))
    );

    // a reducible modulus is caught at inversion time with a factor
    let bad = CoefficientField::binomial_extension(2, &rat_int(1))?;
    let e = bad.sub(&bad.generator()?, &bad.one());
    match bad.inv(&e) {
        Err(Error::ZeroDivisor(factor)) => {
            println!("theta - 1 is a zero divisor mod theta^2 - 1; factor {factor}");
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
