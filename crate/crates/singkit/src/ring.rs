//! Coefficient-domain abstraction. Polynomials are generic over a `Ring`
//! so the same reduction code runs over a field and over the parameter
//! ring Q[alpha] needed by the isomorphy search.

use std::fmt;

use crate::error::Result;
use crate::field::{CoefficientField, FieldElement};

pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a unit; an error for non-units.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn integer(&self, n: i64) -> Self::Elem;
    /// Lifts a coefficient-field element into this ring.
    fn embed_field(&self, field: &CoefficientField, e: &FieldElement) -> Result<Self::Elem>;
    fn format_elem(&self, e: &Self::Elem) -> String;
}

impl Ring for CoefficientField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        CoefficientField::zero(self)
    }
    fn one(&self) -> FieldElement {
        CoefficientField::one(self)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        CoefficientField::add(self, a, b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        CoefficientField::sub(self, a, b)
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        CoefficientField::neg(self, a)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        CoefficientField::mul(self, a, b)
    }
    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        CoefficientField::inv(self, a)
    }
    fn integer(&self, n: i64) -> FieldElement {
        self.from_integer(n)
    }
    fn embed_field(&self, field: &CoefficientField, e: &FieldElement) -> Result<FieldElement> {
        self.embed(field, e)
    }
    fn format_elem(&self, e: &FieldElement) -> String {
        self.format_element(e)
    }
}
