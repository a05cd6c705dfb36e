//! Knot families and their classical invariants.
//!
//! Two families are modeled: torus knots `(p1, p2)` with coprime parameters
//! at least 2 (stored with `p1 < p2`), and 2-bridge knots `(p, q)` with `p`
//! odd and at least 3, `q` odd, `-p < q < p`, `gcd(p, |q|) = 1`.
//!
//! Two parameter pairs `(p, q)` and `(p, q′)` present the same unoriented
//! 2-bridge knot type (knots are identified with their mirror images here)
//! exactly when `q′ ∈ {±q^{±1} mod 2p}`. The canonical representative is the
//! least positive odd member of that orbit mapped into the window `(-p, p)`;
//! this choice of representative is a convention of this crate, not a
//! mathematical invariant. An even `q` coprime to odd `p` denotes the same
//! knot as `q ± p` (the odd member of its class mod `p`) and is folded into
//! the odd convention on normalization, so familiar even-parameter names
//! such as `(9, 4)` are accepted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::IntPoly;

/// Errors from knot construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    /// Parameters violate the family's invariants.
    #[error("invalid knot parameters: {0}")]
    InvalidParameters(String),
    /// A knot literal could not be parsed.
    #[error("invalid knot literal: {0}")]
    ParseError(String),
}

/// A torus knot with coprime parameters `2 <= p1 < p2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusKnot {
    p1: u64,
    p2: u64,
}

impl TorusKnot {
    /// Builds a torus knot, sorting the parameters into `p1 < p2`.
    pub fn new(a: u64, b: u64) -> Result<Self, KnotError> {
        let (p1, p2) = if a <= b { (a, b) } else { (b, a) };
        if p1 < 2 {
            return Err(KnotError::InvalidParameters(format!(
                "torus parameters must be at least 2, got ({a}, {b})"
            )));
        }
        if p1.gcd(&p2) != 1 {
            return Err(KnotError::InvalidParameters(format!(
                "torus parameters must be coprime, got ({a}, {b})"
            )));
        }
        Ok(TorusKnot { p1, p2 })
    }

    /// Smaller parameter.
    pub fn p1(&self) -> u64 {
        self.p1
    }

    /// Larger parameter.
    pub fn p2(&self) -> u64 {
        self.p2
    }

    /// Alexander polynomial `(t^{p1 p2} - 1)(t - 1) / ((t^{p1} - 1)(t^{p2} - 1))`,
    /// computed by exact division and unit-normalized.
    pub fn alexander(&self) -> IntPoly {
        let pow_minus_one = |n: u64| {
            let mut c = vec![BigInt::from(0); n as usize + 1];
            c[0] = BigInt::from(-1);
            c[n as usize] = BigInt::from(1);
            IntPoly::from_coeffs(c)
        };
        let big = pow_minus_one(self.p1 * self.p2);
        let a = big
            .div_exact(&pow_minus_one(self.p1))
            .expect("t^{p1} - 1 divides t^{p1 p2} - 1");
        let num = &a * &pow_minus_one(1);
        let delta = num
            .div_exact(&pow_minus_one(self.p2))
            .expect("the torus Alexander quotient is a polynomial");
        delta.unit_normalize().expect("nonzero")
    }

    /// Determinant `|Δ(-1)|`.
    pub fn determinant(&self) -> u64 {
        let d = self.alexander().eval(&BigInt::from(-1)).abs();
        u64::try_from(d).expect("torus determinants stay in range")
    }

    /// Genus: half the degree of the Alexander polynomial.
    pub fn genus(&self) -> u64 {
        let deg = self.alexander().degree().expect("Δ is nonzero") as u64;
        debug_assert_eq!(deg % 2, 0);
        deg / 2
    }

    /// Crossing number `min{p1(p2-1), p2(p1-1)}`.
    pub fn crossing_number(&self) -> u64 {
        (self.p1 * (self.p2 - 1)).min(self.p2 * (self.p1 - 1))
    }

    /// The 2-bridge identity of this torus knot, if it has one: `(2, n)`
    /// torus knots are the 2-bridge knots `(n, 1)`.
    pub fn as_two_bridge(&self) -> Option<TwoBridgeKnot> {
        (self.p1 == 2).then(|| TwoBridgeKnot::new(self.p2 as i64, 1).expect("(n, 1) is valid"))
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "torus:{},{}", self.p1, self.p2)
    }
}

/// A 2-bridge knot `(p, q)`: `p` odd ≥ 3, `q` odd, `-p < q < p`, coprime.
///
/// Values are not forced to be canonical: `(7, 5)` and `(7, 3)` are distinct
/// values presenting the same knot. Use [`TwoBridgeKnot::canonical`] or
/// [`TwoBridgeKnot::normalized`] to collapse the orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoBridgeKnot {
    p: u64,
    q: i64,
}

impl TwoBridgeKnot {
    /// Builds a 2-bridge knot, validating the invariants exactly as given
    /// (no orbit canonicalization, no parity folding).
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        if p < 3 || p % 2 == 0 {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge p must be odd and at least 3, got ({p}, {q})"
            )));
        }
        if q.rem_euclid(2) == 0 {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge q must be odd, got ({p}, {q})"
            )));
        }
        if q <= -p || q >= p {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge q must lie in (-p, p), got ({p}, {q})"
            )));
        }
        if p.gcd(&q.abs()) != 1 {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge parameters must be coprime, got ({p}, {q})"
            )));
        }
        Ok(TwoBridgeKnot { p: p as u64, q })
    }

    /// Builds the canonical representative from arbitrary parameters:
    /// `q` is reduced mod `2p` into `(-p, p)`, an even `q` is folded to the
    /// odd member of its class mod `p`, and the orbit `{±q^{±1} mod 2p}` is
    /// collapsed to its least positive member.
    pub fn normalized(p: i64, q: i64) -> Result<Self, KnotError> {
        if p < 3 || p % 2 == 0 {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge p must be odd and at least 3, got ({p}, {q})"
            )));
        }
        if p.gcd(&q.rem_euclid(2 * p)) != 1 {
            return Err(KnotError::InvalidParameters(format!(
                "2-bridge parameters must be coprime, got ({p}, {q})"
            )));
        }
        let mut q = q.rem_euclid(2 * p);
        if q > p {
            q -= 2 * p;
        }
        if q.rem_euclid(2) == 0 {
            // fold to the odd member of the class mod p inside the window
            q = if q > 0 { q - p } else { q + p };
        }
        Ok(TwoBridgeKnot::new(p, q)?.canonical())
    }

    /// The canonical member of this knot's orbit `{±q^{±1} mod 2p}`:
    /// the least positive (necessarily odd) representative in `(-p, p)`.
    pub fn canonical(&self) -> Self {
        let m = 2 * self.p as i64;
        let q = self.q.rem_euclid(m);
        let qi = mod_inverse(q, m).expect("q is odd and coprime to p");
        let window = |r: i64| {
            let r = r.rem_euclid(m);
            if r > self.p as i64 {
                r - m
            } else {
                r
            }
        };
        let least = [q, -q, qi, -qi]
            .into_iter()
            .map(window)
            .filter(|&r| r > 0)
            .min()
            .expect("the orbit is closed under negation");
        TwoBridgeKnot {
            p: self.p,
            q: least,
        }
    }

    /// True iff this value is its orbit's canonical representative.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Determinant parameter `p`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Second parameter `q`.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// The sign sequence `ε_i = (-1)^{⌊i·q/p⌋}` for `i = 1, …, p-1`, with `q`
    /// first mapped to its positive residue mod `2p` so the floor is exact.
    pub fn epsilon_sequence(&self) -> Vec<i8> {
        let p = self.p as i64;
        let qp = self.q.rem_euclid(2 * p);
        (1..p)
            .map(|i| if (i * qp).div_euclid(p) % 2 == 0 { 1 } else { -1 })
            .collect()
    }

    /// Alexander polynomial via the alternating sum
    /// `Σ_k (-1)^k t^{ε_1 + ⋯ + ε_k}`, unit-normalized.
    pub fn alexander(&self) -> IntPoly {
        let eps = self.epsilon_sequence();
        // exponents range over [-(p-1), p-1]; shift to keep them non-negative
        let shift = eps.len();
        let mut coeffs = vec![BigInt::from(0); 2 * eps.len() + 1];
        coeffs[shift] += 1;
        let mut exp_sum: i64 = 0;
        for (k, &e) in eps.iter().enumerate() {
            exp_sum += e as i64;
            let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
            coeffs[(exp_sum + shift as i64) as usize] += sign;
        }
        IntPoly::from_coeffs(coeffs)
            .unit_normalize()
            .expect("Δ is nonzero")
    }

    /// Determinant: equals `p`, asserted against `|Δ(-1)|`.
    pub fn determinant(&self) -> u64 {
        let d = self.alexander().eval(&BigInt::from(-1)).abs();
        assert_eq!(
            d,
            BigInt::from(self.p),
            "determinant must agree with |Δ(-1)|"
        );
        self.p
    }

    /// Genus: half the degree of the Alexander polynomial.
    pub fn genus(&self) -> u64 {
        let deg = self.alexander().degree().expect("Δ is nonzero") as u64;
        debug_assert_eq!(deg % 2, 0);
        deg / 2
    }

    /// The torus identity of this 2-bridge knot, if it has one: canonical
    /// `(p, 1)` is the `(2, p)` torus knot.
    pub fn as_torus(&self) -> Option<TorusKnot> {
        let c = self.canonical();
        (c.q == 1).then(|| TorusKnot::new(2, c.p).expect("(2, p) is valid"))
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tb:{},{}", self.p, self.q)
    }
}

/// Modular inverse of `a` mod `m` via the extended Euclidean algorithm.
pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = extended_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub(crate) fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// A knot from either family. Parsing a literal (`tb:p,q` / `torus:p,q`)
/// canonicalizes the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnotId {
    /// A 2-bridge knot (canonical orbit representative).
    TwoBridge(TwoBridgeKnot),
    /// A torus knot (parameters sorted).
    Torus(TorusKnot),
}

impl KnotId {
    /// Alexander polynomial of either family.
    pub fn alexander(&self) -> IntPoly {
        match self {
            KnotId::TwoBridge(k) => k.alexander(),
            KnotId::Torus(k) => k.alexander(),
        }
    }

    /// Determinant `|Δ(-1)|` of either family.
    pub fn determinant(&self) -> u64 {
        match self {
            KnotId::TwoBridge(k) => k.determinant(),
            KnotId::Torus(k) => k.determinant(),
        }
    }

    /// Genus of either family.
    pub fn genus(&self) -> u64 {
        match self {
            KnotId::TwoBridge(k) => k.genus(),
            KnotId::Torus(k) => k.genus(),
        }
    }

    /// The torus identity of this knot, when it has one.
    pub fn as_torus(&self) -> Option<TorusKnot> {
        match self {
            KnotId::TwoBridge(k) => k.as_torus(),
            KnotId::Torus(k) => Some(*k),
        }
    }

    /// The 2-bridge identity of this knot, when it has one.
    pub fn as_two_bridge(&self) -> Option<TwoBridgeKnot> {
        match self {
            KnotId::TwoBridge(k) => Some(*k),
            KnotId::Torus(k) => k.as_two_bridge(),
        }
    }

    /// True iff both ids name the same knot (resolving the torus/2-bridge
    /// overlap through the `(2, n) = (n, 1)` identification).
    pub fn same_knot(&self, other: &KnotId) -> bool {
        match (self.as_two_bridge(), other.as_two_bridge()) {
            (Some(a), Some(b)) => a.canonical() == b.canonical(),
            _ => self.as_torus() == other.as_torus(),
        }
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::TwoBridge(k) => k.fmt(f),
            KnotId::Torus(k) => k.fmt(f),
        }
    }
}

impl FromStr for KnotId {
    type Err = KnotError;

    /// Parses `tb:p,q` or `torus:p,q`, canonicalizing on parse.
    fn from_str(s: &str) -> Result<Self, KnotError> {
        let (family, params) = s
            .split_once(':')
            .ok_or_else(|| KnotError::ParseError(format!("expected family:p,q, got {s:?}")))?;
        let (a, b) = params
            .split_once(',')
            .ok_or_else(|| KnotError::ParseError(format!("expected two parameters in {s:?}")))?;
        let parse_int = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| KnotError::ParseError(format!("bad integer {x:?} in {s:?}")))
        };
        let (a, b) = (parse_int(a)?, parse_int(b)?);
        match family {
            "tb" => Ok(KnotId::TwoBridge(TwoBridgeKnot::normalized(a, b)?)),
            "torus" => {
                let to_u = |x: i64| {
                    u64::try_from(x).map_err(|_| {
                        KnotError::InvalidParameters(format!("torus parameters must be positive, got {s:?}"))
                    })
                };
                Ok(KnotId::Torus(TorusKnot::new(to_u(a)?, to_u(b)?)?))
            }
            other => Err(KnotError::ParseError(format!("unknown family {other:?}"))),
        }
    }
}

impl Serialize for KnotId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KnotId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for TorusKnot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TorusKnot {
    /// Accepts the `torus:p1,p2` literal form.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.parse::<KnotId>().map_err(serde::de::Error::custom)? {
            KnotId::Torus(k) => Ok(k),
            KnotId::TwoBridge(_) => Err(serde::de::Error::custom(format!(
                "expected a torus literal, got {s:?}"
            ))),
        }
    }
}

impl Serialize for TwoBridgeKnot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TwoBridgeKnot {
    /// Accepts the `tb:p,q` literal form. Unlike [`KnotId`] parsing, the
    /// value is kept exactly as written (validated, not canonicalized), so
    /// serialization round-trips.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let params = s
            .strip_prefix("tb:")
            .ok_or_else(|| serde::de::Error::custom(format!("expected tb:p,q, got {s:?}")))?;
        let (p, q) = params
            .split_once(',')
            .ok_or_else(|| serde::de::Error::custom(format!("expected two parameters in {s:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| serde::de::Error::custom(format!("bad integer {x:?} in {s:?}")))
        };
        TwoBridgeKnot::new(parse(p)?, parse(q)?).map_err(serde::de::Error::custom)
    }
}
