//! Exact scalars: rationals, real cyclotomic number fields, and the [`Field`]
//! abstraction the rest of the crate is generic over.

mod number_field;
pub mod poly;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub use number_field::{NumberField, Scalar};
pub use poly::{minimal_polynomial_of_2cos, IntPoly};
pub use rational::{ParseRationalError, Rational};

use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};

/// A field of characteristic zero with exactly decidable equality and sign.
///
/// Elements are plain values; all operations go through the field handle so
/// that number-field elements do not each carry their modulus.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// The element as a rational number, when it lies in the prime field.
    fn as_rational(&self, a: &Self::Elem) -> Option<Rational>;
    /// `2cos(pi/m)` if the field contains it.
    fn two_cos_pi_over(&self, m: u32) -> Option<Self::Elem>;
    /// Exact sign with respect to the distinguished real embedding.
    fn sign(&self, a: &Self::Elem) -> Ordering;
    /// Floating approximation, for display only.
    fn approx(&self, a: &Self::Elem) -> f64;
    fn render(&self, a: &Self::Elem) -> String;
    fn descriptor(&self) -> FieldDescriptor;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_int(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.recip()
    }
    fn as_rational(&self, a: &Rational) -> Option<Rational> {
        Some(a.clone())
    }
    fn two_cos_pi_over(&self, m: u32) -> Option<Rational> {
        match m {
            1 => Some(Rational::from_int(-2)),
            2 => Some(Rational::zero()),
            3 => Some(Rational::one()),
            _ => None,
        }
    }
    fn sign(&self, a: &Rational) -> Ordering {
        a.signum()
    }
    fn approx(&self, a: &Rational) -> f64 {
        a.to_f64()
    }
    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            kind: FieldKind::Rational,
            min_poly: Vec::new(),
            generator: "1".to_string(),
            embedding: None,
            rendered_min_poly: String::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKind {
    Rational,
    NumberField,
}

/// Serializable description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    /// Integer coefficients of the minimal polynomial of the generator, low
    /// degree first; empty for the rationals.
    pub min_poly: Vec<i64>,
    pub generator: String,
    /// Floating value of the generator; diagnostic only.
    pub embedding: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub rendered_min_poly: String,
}

/// A field chosen at runtime.
#[derive(Clone, Debug)]
pub enum AnyField {
    Rational,
    NumberField(NumberField),
}

impl AnyField {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyField::Rational => Rationals.descriptor(),
            AnyField::NumberField(k) => k.descriptor(),
        }
    }
}

/// Smallest field of the form `Q(2cos(pi/L))` used for the Gram matrix of `m`.
///
/// Orders 2 and 3 contribute rational cosines. Otherwise `L` is the lcm of
/// the remaining orders, which keeps e.g. H3 in `Q(sqrt 5)`.
pub fn field_for_coxeter_matrix(m: &CoxeterMatrix) -> Result<AnyField> {
    m.validate()?;
    let mut conductor: u32 = 1;
    for s in 0..m.rank() {
        for t in (s + 1)..m.rank() {
            let v = m.get(s, t);
            if v >= 4 {
                conductor = conductor.lcm(&v);
            }
        }
    }
    Ok(if conductor == 1 {
        AnyField::Rational
    } else {
        AnyField::NumberField(NumberField::real_cyclotomic(conductor))
    })
}

/// Split a nonzero rational vector as `multiplier * primitive` with an
/// integral primitive vector whose entries have gcd 1 and a positive multiplier.
pub fn primitive_part(v: &[Rational]) -> Result<(Vec<BigInt>, Rational)> {
    if v.iter().all(Rational::is_zero) {
        return Err(Error::ZeroVector);
    }
    let den = rational::lcm_denominators(v);
    let scaled: Vec<BigInt> = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    let g = rational::gcd_all(&scaled).abs();
    debug_assert!(!g.is_zero());
    let prim: Vec<BigInt> = scaled.iter().map(|x| x / &g).collect();
    let mult = Rational::from(g) / Rational::from(den);
    debug_assert_eq!(mult.signum(), Ordering::Greater);
    Ok((prim, mult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(
            primitive_part(&ints(&[2])).unwrap(),
            (big(&[1]), Rational::from_int(2))
        );
        assert_eq!(
            primitive_part(&ints(&[-2, 2])).unwrap(),
            (big(&[-1, 1]), Rational::from_int(2))
        );
        assert_eq!(
            primitive_part(&ints(&[1, 0])).unwrap(),
            (big(&[1, 0]), Rational::one())
        );
        assert_eq!(
            primitive_part(&[Rational::new(1, 2), Rational::new(-1, 3)]).unwrap(),
            (big(&[3, -2]), Rational::new(1, 6))
        );
        assert!(matches!(
            primitive_part(&ints(&[0, 0])),
            Err(Error::ZeroVector)
        ));
    }

    proptest! {
        #[test]
        fn primitive_part_is_idempotent(v in proptest::collection::vec((-50i64..50, 1i64..9), 1..5)) {
            let v: Vec<Rational> = v.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
            prop_assume!(v.iter().any(|q| !q.is_zero()));
            let (p, c) = primitive_part(&v).unwrap();
            for (x, y) in v.iter().zip(&p) {
                prop_assert_eq!(x.clone(), &c * &Rational::from(y.clone()));
            }
            let again: Vec<Rational> = p.iter().cloned().map(Rational::from).collect();
            let (p2, c2) = primitive_part(&again).unwrap();
            prop_assert_eq!(p2, p);
            prop_assert!(c2.is_one());
        }
    }
}
