use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Exact (or, for interop only, floating) coefficient ring of a spinor.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// Scalars that embed exactly into ℚ.
pub trait ToRational {
    fn to_rational(&self) -> BigRational;
}

impl ToRational for i64 {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }
}

impl ToRational for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl ToRational for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Coefficient encoding used by the spinor JSON: an integer, `[num, den]`,
/// or `[re, im]`.
pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
}

impl JsonCoeff for i64 {
    fn to_json(&self) -> Value {
        json!(self)
    }

    fn from_json(v: &Value) -> Option<Self> {
        v.as_i64()
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> Value {
        bigint_json(self)
    }

    fn from_json(v: &Value) -> Option<Self> {
        bigint_from_json(v)
    }
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> Value {
        json!([bigint_json(self.numer()), bigint_json(self.denom())])
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v.as_array()?.as_slice() {
            [num, den] => {
                let (num, den) = (bigint_from_json(num)?, bigint_from_json(den)?);
                (!den.is_zero()).then(|| BigRational::new(num, den))
            }
            _ => bigint_from_json(v).map(BigRational::from_integer),
        }
    }
}

impl JsonCoeff for Complex64 {
    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v.as_array()?.as_slice() {
            [re, im] => Some(Complex64::new(re.as_f64()?, im.as_f64()?)),
            _ => None,
        }
    }
}
