//! Exact coefficient arithmetic over the rationals and over simple
//! extensions `Q[theta]/(m(theta))` with a monic squarefree modulus.
//!
//! Elements are canonical coefficient vectors of length `deg m` (length 1
//! over the plain rationals), so equality of stored representations decides
//! equality of field elements. Irreducibility of the modulus is not checked
//! up front; a reducible modulus surfaces lazily as a `ZeroDivisor` error
//! carrying a nontrivial factor.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Small-integer rational, handy in tests and constructors.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Exact n-th root of a rational, if one exists. Negative inputs admit
/// roots only for odd n.
pub fn rational_nth_root(c: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if c.is_zero() {
        return Some(Rational::zero());
    }
    let negative = c.is_negative();
    if negative && n % 2 == 0 {
        return None;
    }
    let num = c.numer().abs();
    let den = c.denom().clone();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if num != rn.clone().pow(n) || den != rd.clone().pow(n) {
        return None;
    }
    let root = Rational::new(if negative { -rn } else { rn }, rd);
    Some(root)
}

// ---------------------------------------------------------------------------
// Univariate helpers over Q, little-endian coefficient vectors.
// ---------------------------------------------------------------------------

pub(crate) fn uni_trim(v: &mut Vec<Rational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn uni_deg(v: &[Rational]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn uni_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    uni_trim(&mut out);
    out
}

pub(crate) fn uni_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    uni_trim(&mut out);
    out
}

/// Division with remainder by a nonzero divisor.
pub(crate) fn uni_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = uni_deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    uni_trim(&mut rem);
    let mut quot = vec![Rational::zero(); num.len().saturating_sub(dd)];
    while let Some(rd) = uni_deg(&rem) {
        if rd < dd {
            break;
        }
        let factor = &rem[rd] / &lead;
        let shift = rd - dd;
        quot[shift] = factor.clone();
        for (i, c) in den.iter().enumerate() {
            if !c.is_zero() {
                let delta = &factor * c;
                rem[i + shift] -= delta;
            }
        }
        uni_trim(&mut rem);
    }
    uni_trim(&mut quot);
    (quot, rem)
}

fn uni_make_monic(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(d) = uni_deg(&v) {
        let lead = v[d].clone();
        for c in v.iter_mut() {
            *c = &*c / &lead;
        }
    }
    v
}

/// Monic gcd.
pub(crate) fn uni_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x: Vec<Rational> = a.to_vec();
    let mut y: Vec<Rational> = b.to_vec();
    uni_trim(&mut x);
    uni_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = uni_divrem(&x, &y);
        x = y;
        y = r;
    }
    uni_make_monic(x)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
fn uni_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    uni_trim(&mut r0);
    uni_trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1 = Vec::new();
    let mut t0 = Vec::new();
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = uni_divrem(&r0, &r1);
        let ns = uni_sub(&s0, &uni_mul(&q, &s1));
        let nt = uni_sub(&t0, &uni_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, ns);
        t0 = std::mem::replace(&mut t1, nt);
    }
    if let Some(d) = uni_deg(&r0) {
        let lead = r0[d].clone();
        for c in r0.iter_mut() {
            *c = &*c / &lead;
        }
        for c in s0.iter_mut() {
            *c = &*c / &lead;
        }
        for c in t0.iter_mut() {
            *c = &*c / &lead;
        }
    }
    (r0, s0, t0)
}

fn uni_derivative(v: &[Rational]) -> Vec<Rational> {
    if v.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(v.len() - 1);
    for (i, c) in v.iter().enumerate().skip(1) {
        out.push(c * Rational::from(BigInt::from(i)));
    }
    uni_trim(&mut out);
    out
}

/// Renders a little-endian coefficient vector as a polynomial in `var`.
pub(crate) fn uni_format(v: &[Rational], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if i == 0 {
            format!("{mag}")
        } else {
            let pow = if i == 1 {
                var.to_string()
            } else {
                format!("{var}^{i}")
            };
            if mag.is_one() {
                pow
            } else {
                format!("{mag}*{pow}")
            }
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

// ---------------------------------------------------------------------------
// Field elements and field descriptors.
// ---------------------------------------------------------------------------

/// Element of the active coefficient field: a canonical coefficient vector
/// in powers of theta, of length equal to the field degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldElement {
    pub(crate) coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    /// Monic modulus, little-endian, length degree + 1. `None` for Q itself.
    minpoly: Option<Vec<Rational>>,
}

/// Either the rationals or a simple extension `Q[theta]/(m)`. Cloning is
/// cheap; all element operations are methods on the field descriptor.
#[derive(Clone, Debug)]
pub struct CoefficientField {
    repr: Arc<FieldRepr>,
}

impl PartialEq for CoefficientField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr == other.repr
    }
}

impl Eq for CoefficientField {}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField {
            repr: Arc::new(FieldRepr { minpoly: None }),
        }
    }

    /// Builds `Q[theta]/(m)` from a monic modulus of degree >= 2, checked to
    /// be squarefree via gcd with its derivative.
    pub fn extension(minpoly: Vec<Rational>) -> Result<Self> {
        let mut m = minpoly;
        uni_trim(&mut m);
        let deg = match uni_deg(&m) {
            Some(d) if d >= 2 => d,
            _ => return Err(Error::NotMonic),
        };
        if !m[deg].is_one() {
            return Err(Error::NotMonic);
        }
        let g = uni_gcd(&m, &uni_derivative(&m));
        if uni_deg(&g).unwrap_or(0) > 0 {
            return Err(Error::NotSquarefree(uni_format(&g, "theta")));
        }
        Ok(CoefficientField {
            repr: Arc::new(FieldRepr { minpoly: Some(m) }),
        })
    }

    /// Extension by `theta^k = c`, the shape every radical coefficient here needs.
    pub fn binomial_extension(k: u32, c: &Rational) -> Result<Self> {
        let mut m = vec![Rational::zero(); k as usize + 1];
        m[0] = -c.clone();
        m[k as usize] = Rational::one();
        Self::extension(m)
    }

    pub fn degree(&self) -> usize {
        match &self.repr.minpoly {
            None => 1,
            Some(m) => m.len() - 1,
        }
    }

    pub fn is_rational_field(&self) -> bool {
        self.repr.minpoly.is_none()
    }

    pub fn minpoly(&self) -> Option<&[Rational]> {
        self.repr.minpoly.as_deref()
    }

    fn canon(&self, mut v: Vec<Rational>) -> FieldElement {
        if let Some(m) = &self.repr.minpoly {
            if uni_deg(&v).map_or(false, |d| d >= m.len() - 1) {
                let (_, r) = uni_divrem(&v, m);
                v = r;
            }
        }
        v.resize(self.degree(), Rational::zero());
        FieldElement { coeffs: v }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = r;
        FieldElement { coeffs }
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_rational(rat_int(n))
    }

    /// The class of theta. Errors on the rationals.
    pub fn generator(&self) -> Result<FieldElement> {
        if self.degree() < 2 {
            return Err(Error::NotMonic);
        }
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[1] = Rational::one();
        Ok(FieldElement { coeffs })
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.degree() == 1 {
            return FieldElement {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        self.canon(uni_mul(&a.coeffs, &b.coeffs))
    }

    pub fn mul_rational(&self, a: &FieldElement, r: &Rational) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|x| x * r).collect(),
        }
    }

    /// Multiplicative inverse by extended gcd with the modulus. A nontrivial
    /// gcd exposes the modulus as reducible and is reported with the factor.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr.minpoly {
            None => Ok(FieldElement {
                coeffs: vec![a.coeffs[0].recip()],
            }),
            Some(m) => {
                let (g, s, _) = uni_ext_gcd(&a.coeffs, m);
                match uni_deg(&g) {
                    Some(0) => Ok(self.canon(s)),
                    _ => Err(Error::ZeroDivisor(uni_format(&g, "theta"))),
                }
            }
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut n: u32) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power with negative exponents via inversion.
    pub fn pow_i(&self, a: &FieldElement, n: i64) -> Result<FieldElement> {
        if n >= 0 {
            Ok(self.pow(a, n as u32))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow(&inv, (-n) as u32))
        }
    }

    /// Lifts an element of a subfield into this field. Rational elements
    /// embed everywhere; otherwise the fields must agree.
    pub fn embed(&self, from: &CoefficientField, e: &FieldElement) -> Result<FieldElement> {
        if self == from {
            return Ok(e.clone());
        }
        match e.as_rational() {
            Some(r) => Ok(self.from_rational(r.clone())),
            None => Err(Error::FieldMismatch),
        }
    }

    pub fn format_element(&self, e: &FieldElement) -> String {
        uni_format(&e.coeffs, "theta")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        assert_eq!(rational_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(rational_nth_root(&rat(-4, 9), 2), None);
        assert_eq!(rational_nth_root(&rat(2, 1), 2), None);
        assert_eq!(rational_nth_root(&rat_int(0), 5), Some(Rational::zero()));
    }

    #[test]
    fn extension_rejects_bad_moduli() {
        // theta^2 - 2*theta + 1 = (theta - 1)^2 is not squarefree
        let m = vec![rat_int(1), rat_int(-2), rat_int(1)];
        assert!(matches!(
            CoefficientField::extension(m),
            Err(Error::NotSquarefree(_))
        ));
        // degree 1 is not an extension
        assert!(CoefficientField::extension(vec![rat_int(1), rat_int(1)]).is_err());
        // non-monic
        let m = vec![rat_int(1), rat_int(0), rat_int(2)];
        assert!(matches!(CoefficientField::extension(m), Err(Error::NotMonic)));
    }

    #[test]
    fn sqrt_two_arithmetic() {
        // theta^2 = 2, so theta * theta/2 = 1
        let k = CoefficientField::binomial_extension(2, &rat_int(2)).unwrap();
        let theta = k.generator().unwrap();
        let sq = k.mul(&theta, &theta);
        assert_eq!(sq, k.from_integer(2));
        let inv = k.inv(&theta).unwrap();
        assert_eq!(inv, k.mul_rational(&theta, &rat(1, 2)));
        assert_eq!(k.mul(&theta, &inv), k.one());
    }

    #[test]
    fn invert_rational() {
        let q = CoefficientField::rationals();
        let e = q.from_rational(rat(2, 3));
        assert_eq!(q.inv(&e).unwrap(), q.from_rational(rat(3, 2)));
        assert!(matches!(q.inv(&q.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn zero_divisor_detection() {
        // theta^2 - 1 is squarefree but reducible; inverting theta - 1 must
        // expose a factor rather than return garbage.
        let k = CoefficientField::binomial_extension(2, &rat_int(1)).unwrap();
        let theta = k.generator().unwrap();
        let e = k.sub(&theta, &k.one());
        match k.inv(&e) {
            Err(Error::ZeroDivisor(f)) => assert!(f.contains("theta")),
            other => panic!("expected zero divisor, got {other:?}"),
        }
    }

    #[test]
    fn degree_four_extension() {
        // theta^4 = 17943573032/1269497754275; theta^2 plays the square root
        let c = Rational::new(
            BigInt::from(17943573032u64),
            BigInt::from(1269497754275u64),
        );
        let k = CoefficientField::binomial_extension(4, &c).unwrap();
        let theta = k.generator().unwrap();
        let t2 = k.mul(&theta, &theta);
        assert_eq!(k.mul(&t2, &t2), k.from_rational(c));
        let inv = k.inv(&t2).unwrap();
        assert_eq!(k.mul(&t2, &inv), k.one());
    }

    #[test]
    fn field_axioms_sampled() {
        let c = rat(-1386, 6089);
        let k = CoefficientField::binomial_extension(2, &c).unwrap();
        let theta = k.generator().unwrap();
        let mut samples = Vec::new();
        for i in -2i64..3 {
            for j in -2i64..3 {
                samples.push(k.add(
                    &k.from_rational(rat(i, 2)),
                    &k.mul_rational(&theta, &rat(j, 3)),
                ));
            }
        }
        for a in &samples {
            for b in &samples {
                assert_eq!(k.mul(a, b), k.mul(b, a));
                for c in &samples {
                    assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
                    assert_eq!(
                        k.mul(a, &k.add(b, c)),
                        k.add(&k.mul(a, b), &k.mul(a, c))
                    );
                }
            }
            if !a.is_zero() {
                assert_eq!(k.mul(a, &k.inv(a).unwrap()), k.one());
            }
        }
    }
}
