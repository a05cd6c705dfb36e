//! Epimorphisms between torus knot groups: exact decision, explicit
//! construction, and independent verification.
//!
//! For torus knots `k = (p1, p2)` and `k' = (r1, r2)`, a surjection
//! `π k → π k'` preserving peripheral structure exists precisely when the
//! parameters match by divisibility — either `r1 | p1` and `r2 | p2`
//! (*straight*), or `r1 | p2` and `r2 | p1` (*crossed*). Because the
//! parameters of a torus knot are coprime, at most one matching can hold
//! for a given pair. When one does, the surjection is realized by sending
//! each generator to a power of the corresponding target generator, and the
//! construction is packaged as an [`EpiCertificate`] that an independent
//! verifier ([`verify_epimorphism`]) checks against the defining properties:
//! the relator, the meridian image, the longitude image, and surjectivity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groupcore::{apply_hom, peripheral_words, AmalgamWord, Gen, NormalForm, TorusGroup};
use crate::knots::TorusKnot;

/// How the target parameters divide the source parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Matching {
    /// `r1 | p1` and `r2 | p2`: multipliers `n1 = p1/r1`, `n2 = p2/r2`.
    Straight,
    /// `r1 | p2` and `r2 | p1`: multipliers `n1 = p1/r2`, `n2 = p2/r1`.
    Crossed,
}

/// The named checks run by [`verify_epimorphism`], in execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    /// Both generator images raised to the source parameters equal the
    /// central element `z^{n1·n2}`.
    Relator,
    /// The image of the source meridian is meridian-shaped in the target.
    MeridianImage,
    /// The image of the source longitude equals the conjugated power
    /// `a^{-e} · l₂^{n1·n2} · a^{e}` of the target longitude.
    LongitudeImage,
    /// The generator-image exponents are coprime to the target windows and
    /// the abelianized images generate ℤ.
    Surjectivity,
}

impl CheckName {
    /// Stable lowercase name used in transcripts and error messages.
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Relator => "relator",
            CheckName::MeridianImage => "meridian_image",
            CheckName::LongitudeImage => "longitude_image",
            CheckName::Surjectivity => "surjectivity",
        }
    }
}

/// Outcome of one named verification check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    /// Which check ran.
    pub check: CheckName,
    /// Whether it passed.
    pub pass: bool,
}

/// The ordered record of all verification checks.
pub type Transcript = Vec<CheckResult>;

/// Errors from certificate construction and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpiError {
    /// No divisor matching exists, so no such surjection exists.
    #[error("no epimorphism from {src} onto {dst}: no divisor matching")]
    NoEpimorphism {
        /// The attempted source knot.
        src: TorusKnot,
        /// The attempted target knot.
        dst: TorusKnot,
    },
    /// The certificate's declared data is internally inconsistent, so the
    /// semantic checks were not run.
    #[error("malformed certificate: {0}")]
    Malformed(String),
    /// A semantic check failed; the transcript records every check outcome.
    #[error("verification failed at check {}", .check.as_str())]
    VerificationFailed {
        /// The first check that failed.
        check: CheckName,
        /// Outcomes of all checks, in order.
        transcript: Transcript,
    },
}

/// A constructed surjection `π(source) → π(target)` together with the data
/// needed to verify it independently: the divisor matching, the multipliers
/// `n1, n2`, the conjugator parameters `(s, t)`, the generator images, the
/// Bézout pair behind the source meridian, and the verification transcript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpiCertificate {
    /// Source torus knot `(p1, p2)`.
    pub source: TorusKnot,
    /// Target torus knot `(r1, r2)`.
    pub target: TorusKnot,
    /// Multiplier paired with `p1` (`n1·r1 = p1` straight, `n1·r2 = p1` crossed).
    pub n1: u64,
    /// Multiplier paired with `p2` (`n2·r2 = p2` straight, `n2·r1 = p2` crossed).
    pub n2: u64,
    /// Which divisor matching the certificate uses.
    pub matching: Matching,
    /// Conjugator parameters `(s, t)` for `c = b^s a^t`; the builder always
    /// emits `(0, 0)`, and crossed certificates require `(0, 0)`.
    pub c_params: (i64, i64),
    /// Image of the source generator `u`.
    pub img_u: AmalgamWord,
    /// Image of the source generator `v`.
    pub img_v: AmalgamWord,
    /// Bézout pair `(i, j)` with `i·p1 + j·p2 = 1` and `0 < j ≤ p1`,
    /// defining the source meridian `u^j v^i`.
    pub bezout: (i64, i64),
    /// Check outcomes recorded when the certificate was built.
    pub transcript: Transcript,
}

/// Positive divisors of `n` that are at least 2, ascending.
fn divisors_geq2(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// All torus knots receiving a peripheral-structure-preserving surjection
/// from `k`, including `k` itself; sorted ascending.
pub fn torus_targets(k: &TorusKnot) -> Vec<TorusKnot> {
    let mut out = std::collections::BTreeSet::new();
    // Straight and crossed matchings enumerate the same unordered pairs
    // because TorusKnot sorts its parameters; run both for clarity.
    for (x, y) in [(k.p1(), k.p2()), (k.p2(), k.p1())] {
        for r1 in divisors_geq2(x) {
            for r2 in divisors_geq2(y) {
                // coprime automatically: r1 | x and r2 | y with gcd(x, y) = 1
                out.insert(TorusKnot::new(r1, r2).expect("divisor pairs of coprime parameters are valid"));
            }
        }
    }
    out.into_iter().collect()
}

/// Decides whether a surjection `π k → π k2` preserving peripheral
/// structure exists; this single test settles both order relations.
pub fn torus_ge(k: &TorusKnot, k2: &TorusKnot) -> bool {
    find_matching(k, k2).is_some()
}

/// The divisor matching of the pair, if any. Straight is tried first; for
/// valid (coprime-parameter) knots the two cases are mutually exclusive.
fn find_matching(k: &TorusKnot, k2: &TorusKnot) -> Option<Matching> {
    let (p1, p2) = (k.p1(), k.p2());
    let (r1, r2) = (k2.p1(), k2.p2());
    if p1 % r1 == 0 && p2 % r2 == 0 {
        Some(Matching::Straight)
    } else if p2 % r1 == 0 && p1 % r2 == 0 {
        Some(Matching::Crossed)
    } else {
        None
    }
}

/// True iff the knot admits no surjection onto another torus knot group:
/// equivalent to both parameters being prime.
pub fn torus_is_minimal(k: &TorusKnot) -> bool {
    fn is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }
    let minimal = is_prime(k.p1()) && is_prime(k.p2());
    debug_assert_eq!(minimal, torus_targets(k).len() == 1);
    minimal
}

/// Builds the canonical certificate for `k ≥ k2`: the straight matching
/// sends `u ↦ a^{n2}`, `v ↦ b^{n1}` (conjugator `c = 1`, i.e. `s = t = 0`);
/// the crossed matching swaps the roles of the target generators.
pub fn build_epimorphism(k: &TorusKnot, k2: &TorusKnot) -> Result<EpiCertificate, EpiError> {
    let matching = find_matching(k, k2).ok_or(EpiError::NoEpimorphism {
        src: *k,
        dst: *k2,
    })?;
    let (p1, p2) = (k.p1(), k.p2());
    let (r1, r2) = (k2.p1(), k2.p2());
    let (n1, n2, img_u, img_v) = match matching {
        Matching::Straight => {
            let (n1, n2) = (p1 / r1, p2 / r2);
            (
                n1,
                n2,
                AmalgamWord::generator(Gen::A, n2 as i64),
                AmalgamWord::generator(Gen::B, n1 as i64),
            )
        }
        Matching::Crossed => {
            let (n1, n2) = (p1 / r2, p2 / r1);
            (
                n1,
                n2,
                AmalgamWord::generator(Gen::B, n2 as i64),
                AmalgamWord::generator(Gen::A, n1 as i64),
            )
        }
    };
    let peripheral = peripheral_words(p1, p2);
    let mut cert = EpiCertificate {
        source: *k,
        target: *k2,
        n1,
        n2,
        matching,
        c_params: (0, 0),
        img_u,
        img_v,
        bezout: (peripheral.i, peripheral.j),
        transcript: Vec::new(),
    };
    cert.transcript = verify_epimorphism(&cert)
        .expect("constructed certificates verify by design; failure is a bug");
    Ok(cert)
}

/// Re-checks a certificate from scratch. Declared data is validated first
/// (divisor matching, multipliers, Bézout pair, crossed ⇒ `s = t = 0`);
/// inconsistencies are [`EpiError::Malformed`]. Then the four semantic
/// checks of [`CheckName`] run against the stored image words, and the
/// transcript is returned, wrapped in [`EpiError::VerificationFailed`]
/// naming the first failed check if any failed.
pub fn verify_epimorphism(cert: &EpiCertificate) -> Result<Transcript, EpiError> {
    let (p1, p2) = (cert.source.p1(), cert.source.p2());
    let (r1, r2) = (cert.target.p1(), cert.target.p2());
    let (s, t) = cert.c_params;

    // -- well-formedness of the declared data --
    let (d1, d2) = match cert.matching {
        Matching::Straight => (r1, r2),
        Matching::Crossed => (r2, r1),
    };
    if p1 % d1 != 0 || p2 % d2 != 0 {
        return Err(EpiError::Malformed(format!(
            "matching {:?} does not divide: ({d1}, {d2}) vs ({p1}, {p2})",
            cert.matching
        )));
    }
    if cert.n1 != p1 / d1 || cert.n2 != p2 / d2 {
        return Err(EpiError::Malformed(format!(
            "multipliers ({}, {}) disagree with ({}, {})",
            cert.n1,
            cert.n2,
            p1 / d1,
            p2 / d2
        )));
    }
    let (i, j) = cert.bezout;
    if i * p1 as i64 + j * p2 as i64 != 1 {
        return Err(EpiError::Malformed(format!(
            "bezout pair ({i}, {j}) does not satisfy i·{p1} + j·{p2} = 1"
        )));
    }
    if !(0 < j && j <= p1 as i64) {
        return Err(EpiError::Malformed(format!(
            "bezout j = {j} outside the window (0, {p1}]"
        )));
    }
    if cert.matching == Matching::Crossed && (s, t) != (0, 0) {
        return Err(EpiError::Malformed(format!(
            "crossed certificates require s = t = 0, got ({s}, {t})"
        )));
    }

    // -- semantic checks against the stored image words --
    let target = TorusGroup::new(r1, r2);
    let n1n2 = (cert.n1 * cert.n2) as i64;
    let central = |e: i64| NormalForm {
        central: e,
        word: AmalgamWord::identity(),
    };

    let relator_pass = {
        let u_side = target.normalize(&cert.img_u.pow(p1 as i64));
        let v_side = target.normalize(&cert.img_v.pow(p2 as i64));
        u_side == central(n1n2) && v_side == central(n1n2)
    };

    let source_peripheral = {
        let m = AmalgamWord::generator(Gen::A, j).concat(&AmalgamWord::generator(Gen::B, i));
        let l = AmalgamWord::generator(Gen::A, p1 as i64).concat(&m.pow(-((p1 * p2) as i64)));
        (m, l)
    };
    let meridian_image = apply_hom(&source_peripheral.0, &cert.img_u, &cert.img_v);
    let meridian_pass = target.is_meridional_form(&meridian_image);

    let longitude_pass = {
        let conj_exp = match cert.matching {
            Matching::Straight => t,
            Matching::Crossed => i * cert.n1 as i64,
        };
        let conj = AmalgamWord::generator(Gen::A, conj_exp);
        let l2 = peripheral_words(r1, r2).longitude;
        let expected = conj.inverse().concat(&l2.pow(n1n2)).concat(&conj);
        let image = apply_hom(&source_peripheral.1, &cert.img_u, &cert.img_v);
        target.words_equal(&image, &expected)
    };

    let surjectivity_pass = {
        // the window each image's exponent must be coprime to depends on
        // which target generator carries it
        let (w_u, w_v) = match cert.matching {
            Matching::Straight => (r1, r2),
            Matching::Crossed => (r2, r1),
        };
        let ab = num_integer::gcd(
            target.abelianization(&cert.img_u),
            target.abelianization(&cert.img_v),
        );
        num_integer::gcd(cert.n2, w_u) == 1 && num_integer::gcd(cert.n1, w_v) == 1 && ab == 1
    };

    let transcript: Transcript = vec![
        CheckResult {
            check: CheckName::Relator,
            pass: relator_pass,
        },
        CheckResult {
            check: CheckName::MeridianImage,
            pass: meridian_pass,
        },
        CheckResult {
            check: CheckName::LongitudeImage,
            pass: longitude_pass,
        },
        CheckResult {
            check: CheckName::Surjectivity,
            pass: surjectivity_pass,
        },
    ];
    match transcript.iter().find(|c| !c.pass) {
        None => Ok(transcript),
        Some(first) => Err(EpiError::VerificationFailed {
            check: first.check,
            transcript: transcript.clone(),
        }),
    }
}
