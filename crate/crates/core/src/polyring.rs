//! Exact univariate polynomial arithmetic over the integers.
//!
//! Coefficients are arbitrary-precision ([`BigInt`]) and stored in ascending
//! degree order with no trailing zeros; the zero polynomial is the empty
//! coefficient vector. All operations are exact — there is no floating point
//! anywhere in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by exact polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend over the integers.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// The operation is undefined on the zero polynomial.
    #[error("operation undefined on the zero polynomial")]
    ZeroInput,
}

/// A polynomial with integer coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// The monomial `c * t^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True iff the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in ℤ[t].
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = d.degree().expect("divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let dn = rem.len().checked_sub(dd + 1).ok_or(PolyError::NotDivisible)?;
        let lead = d.leading_coeff().expect("divisor is nonzero");
        let mut quot = vec![BigInt::zero(); dn + 1];
        for k in (0..=dn).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// True iff `±t^k · q · self = n` for some integer polynomial `q`, i.e.
    /// `self` divides `n` after both sides are normalized by units of ℤ[t,t⁻¹].
    pub fn divides_up_to_units(&self, n: &IntPoly) -> bool {
        if self.is_zero() {
            return n.is_zero();
        }
        if n.is_zero() {
            return true;
        }
        let d = self.unit_normalize().expect("nonzero");
        let n = n.unit_normalize().expect("nonzero");
        n.div_exact(&d).is_ok()
    }

    /// Divides out the largest power of `t` and makes the constant
    /// coefficient positive. Errors on zero input.
    pub fn unit_normalize(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let shift = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero");
        let mut coeffs: Vec<BigInt> = self.coeffs[shift..].to_vec();
        if coeffs[0].is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        Ok(IntPoly { coeffs })
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Content: the gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part `self / content`, with sign chosen so the leading
    /// coefficient is positive. Zero maps to zero.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading_coeff().expect("nonzero").is_negative() {
            content = -content;
        }
        let coeffs = self.coeffs.iter().map(|c| c / &content).collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Greatest common divisor in ℤ[t] via a primitive pseudo-remainder
    /// sequence. The result carries the gcd of the contents and a positive
    /// leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part() * IntPoly::constant(other.content());
        }
        if other.is_zero() {
            return self.primitive_part() * IntPoly::constant(self.content());
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a * IntPoly::constant(content_gcd)
    }

    /// Squarefree part `self / gcd(self, self′)`, unit-normalized.
    /// Errors on zero input.
    pub fn squarefree_part(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g).expect("gcd divides its argument");
        q.unit_normalize()
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Renders in ascending degree order with explicit signs, e.g.
    /// `2 - 5*t + 2*t^2`. Coefficient ±1 omits the `1*`; zero renders `0`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if !unit_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

/// Pseudo-remainder of `a` by `b`: the remainder after `a` is scaled by
/// `lc(b)^(deg a - deg b + 1)` so division stays in ℤ[t].
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    debug_assert!(da >= db);
    let lead = b.leading_coeff().expect("nonzero").clone();
    let mut rem = a.coeffs.clone();
    for k in (db..=da).rev() {
        let top = rem[k].clone();
        for c in rem.iter_mut().take(k) {
            *c = &*c * &lead;
        }
        rem[k] = BigInt::zero();
        for (i, bc) in b.coeffs.iter().enumerate().take(db) {
            rem[k - db + i] -= &top * bc;
        }
    }
    rem.truncate(db);
    IntPoly::from_coeffs(rem)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
