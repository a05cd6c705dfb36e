//! Words and normal forms in torus knot groups.
//!
//! The group of the `(r1, r2)` torus knot is `⟨a, b | a^{r1} = b^{r2}⟩`. The
//! element `z = a^{r1} = b^{r2}` generates the center, and every element has
//! a unique normal form `z^c · s_1 s_2 ⋯ s_k` where the `s_i` alternate
//! between `a`-syllables with exponent in `(0, r1)` and `b`-syllables with
//! exponent in `(0, r2)`. Normalization is a single left-to-right pass, so
//! the word problem is decided in linear time.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::knots::extended_gcd;

/// A generator of the two-generator torus knot group presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    /// The generator `a` (image of `u`).
    A,
    /// The generator `b` (image of `v`).
    B,
}

impl Gen {
    fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
        }
    }
}

/// One syllable `g^e` with `e ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    /// The generator.
    pub gen: Gen,
    /// The (nonzero) exponent.
    pub exp: i64,
}

/// Errors from word-literal parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// A word literal could not be parsed.
    #[error("invalid word literal: {0}")]
    ParseError(String),
}

/// A word in the free product of `⟨a⟩` and `⟨b⟩`, read relative to group
/// parameters `(r1, r2)` when normalized. Adjacent syllables on the same
/// generator are merged on construction; zero exponents are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AmalgamWord {
    syllables: Vec<Syllable>,
}

impl AmalgamWord {
    /// The empty word.
    pub fn identity() -> Self {
        AmalgamWord::default()
    }

    /// Builds a word, dropping zero exponents and merging adjacent
    /// same-generator syllables.
    pub fn new(syllables: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut out: Vec<Syllable> = Vec::new();
        for (gen, exp) in syllables {
            if exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.gen == gen => {
                    last.exp += exp;
                    if last.exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push(Syllable { gen, exp }),
            }
        }
        AmalgamWord { syllables: out }
    }

    /// A single-syllable word `g^e` (identity if `e = 0`).
    pub fn generator(gen: Gen, exp: i64) -> Self {
        AmalgamWord::new([(gen, exp)])
    }

    /// The syllables of the word.
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// True iff the word is empty.
    pub fn is_identity_word(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &AmalgamWord) -> AmalgamWord {
        AmalgamWord::new(
            self.syllables
                .iter()
                .chain(other.syllables.iter())
                .map(|s| (s.gen, s.exp)),
        )
    }

    /// The inverse word (reversed, negated exponents).
    pub fn inverse(&self) -> AmalgamWord {
        AmalgamWord::new(self.syllables.iter().rev().map(|s| (s.gen, -s.exp)))
    }

    /// The power `self^n` (`n` may be negative or zero).
    pub fn pow(&self, n: i64) -> AmalgamWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut syl = Vec::with_capacity(base.syllables.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            syl.extend(base.syllables.iter().map(|s| (s.gen, s.exp)));
        }
        AmalgamWord::new(syl)
    }

    /// The conjugate `x⁻¹ · self · x`.
    pub fn conjugated_by(&self, x: &AmalgamWord) -> AmalgamWord {
        x.inverse().concat(self).concat(x)
    }
}

impl fmt::Display for AmalgamWord {
    /// Renders as space-separated syllables with explicit exponents, e.g.
    /// `a^2 b^-3 a^1`; the identity renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for s in &self.syllables {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", s.gen.letter(), s.exp)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for AmalgamWord {
    type Err = WordError;

    /// Parses the [`fmt::Display`] format; bare `a`/`b` mean exponent 1 and
    /// `1` (or the empty string) is the identity.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut syllables = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (gen, exp) = match tok.split_once('^') {
                Some((g, e)) => {
                    let exp = e
                        .parse::<i64>()
                        .map_err(|_| WordError::ParseError(format!("bad exponent in {tok:?}")))?;
                    (g, exp)
                }
                None => (tok, 1),
            };
            let gen = match gen {
                "a" => Gen::A,
                "b" => Gen::B,
                other => {
                    return Err(WordError::ParseError(format!(
                        "unknown generator {other:?} in {s:?}"
                    )))
                }
            };
            syllables.push((gen, exp));
        }
        Ok(AmalgamWord::new(syllables))
    }
}

impl Serialize for AmalgamWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AmalgamWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The unique normal form `z^central · s_1 ⋯ s_k` of a group element:
/// `central` counts powers of the central element `z = a^{r1} = b^{r2}`,
/// and the syllables alternate with exponents in `(0, r1)` resp. `(0, r2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    /// Exponent of the central element `z`.
    pub central: i64,
    /// Alternating reduced word with in-window exponents.
    pub word: AmalgamWord,
}

impl NormalForm {
    /// True iff this is the identity element.
    pub fn is_identity(&self) -> bool {
        self.central == 0 && self.word.is_identity_word()
    }

    /// True iff this is `z^n` for some `n` (a central element).
    pub fn is_central(&self) -> bool {
        self.word.is_identity_word()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        if self.central != 0 {
            write!(f, "z^{}", self.central)?;
            if !self.word.is_identity_word() {
                write!(f, " {}", self.word)?;
            }
            Ok(())
        } else {
            self.word.fmt(f)
        }
    }
}

/// The group `⟨a, b | a^{r1} = b^{r2}⟩` of the `(r1, r2)` torus knot,
/// acting as a normal-form and word-problem context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusGroup {
    r1: u64,
    r2: u64,
}

impl TorusGroup {
    /// Builds the context for parameters `(r1, r2)`, both at least 2.
    pub fn new(r1: u64, r2: u64) -> Self {
        assert!(r1 >= 2 && r2 >= 2, "torus group parameters must be ≥ 2");
        TorusGroup { r1, r2 }
    }

    /// First parameter (order of `a` modulo the center).
    pub fn r1(&self) -> u64 {
        self.r1
    }

    /// Second parameter (order of `b` modulo the center).
    pub fn r2(&self) -> u64 {
        self.r2
    }

    fn modulus(&self, gen: Gen) -> i64 {
        match gen {
            Gen::A => self.r1 as i64,
            Gen::B => self.r2 as i64,
        }
    }

    /// Computes the unique normal form of a word. One left-to-right pass:
    /// each syllable's exponent is reduced into `[0, r)` with the quotient
    /// sent to the central `z`-power, and vanishing syllables let their
    /// neighbors merge.
    pub fn normalize(&self, w: &AmalgamWord) -> NormalForm {
        let mut central: i64 = 0;
        let mut stack: Vec<Syllable> = Vec::new();
        for s in w.syllables() {
            let mut exp = s.exp;
            if let Some(top) = stack.last() {
                if top.gen == s.gen {
                    exp += top.exp;
                    stack.pop();
                }
            }
            let m = self.modulus(s.gen);
            central += exp.div_euclid(m);
            let residue = exp.rem_euclid(m);
            if residue != 0 {
                stack.push(Syllable {
                    gen: s.gen,
                    exp: residue,
                });
            }
        }
        NormalForm {
            central,
            word: AmalgamWord {
                syllables: stack,
            },
        }
    }

    /// Decides equality of two words in the group.
    pub fn words_equal(&self, w1: &AmalgamWord, w2: &AmalgamWord) -> bool {
        self.normalize(w1) == self.normalize(w2)
    }

    /// Exponent sum under the abelianization `a ↦ r2, b ↦ r1` (the map onto
    /// ℤ sending every meridian to 1).
    pub fn abelianization(&self, w: &AmalgamWord) -> i64 {
        w.syllables()
            .iter()
            .map(|s| {
                s.exp
                    * match s.gen {
                        Gen::A => self.r2 as i64,
                        Gen::B => self.r1 as i64,
                    }
            })
            .sum()
    }

    /// Cyclically reduces a normal form: while the outer syllables share a
    /// generator, conjugates them together (absorbing any window overflow
    /// into the central exponent). Conjugation preserves meridian shape.
    pub fn cyclically_reduce(&self, nf: &NormalForm) -> NormalForm {
        let mut central = nf.central;
        let mut syl: Vec<Syllable> = nf.word.syllables().to_vec();
        while syl.len() >= 2 && syl[0].gen == syl.last().expect("len ≥ 2").gen {
            let last = syl.pop().expect("len ≥ 2");
            let exp = last.exp + syl[0].exp;
            let m = self.modulus(last.gen);
            central += exp.div_euclid(m);
            let residue = exp.rem_euclid(m);
            if residue != 0 {
                syl[0].exp = residue;
            } else {
                syl.remove(0);
            }
        }
        NormalForm {
            central,
            word: AmalgamWord { syllables: syl },
        }
    }

    /// True iff `w` is a meridian-shaped element: its cyclic reduction is a
    /// single `a`-syllable next to a single `b`-syllable (the conjugates of
    /// `a^J b^I`), with abelianized exponent sum ±1.
    pub fn is_meridional_form(&self, w: &AmalgamWord) -> bool {
        if self.abelianization(w).abs() != 1 {
            return false;
        }
        let reduced = self.cyclically_reduce(&self.normalize(w));
        let s = reduced.word.syllables();
        s.len() == 2 && s[0].gen != s[1].gen
    }
}

/// Substitutes `img_u` for every `a` and `img_v` for every `b` in `w`
/// (generator-wise application of a homomorphism given on generators).
pub fn apply_hom(w: &AmalgamWord, img_u: &AmalgamWord, img_v: &AmalgamWord) -> AmalgamWord {
    let mut out = AmalgamWord::identity();
    for s in w.syllables() {
        let img = match s.gen {
            Gen::A => img_u,
            Gen::B => img_v,
        };
        out = out.concat(&img.pow(s.exp));
    }
    out
}

/// The peripheral system of the `(p1, p2)` torus knot group on generators
/// `u = a`, `v = b`: a meridian `m = u^j v^i` with `i·p1 + j·p2 = 1`
/// (normalized to `0 < j ≤ p1`) and the longitude `l = u^{p1} · m^{-p1·p2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralPair {
    /// Meridian coefficient of `v` (Bézout `i`).
    pub i: i64,
    /// Meridian coefficient of `u` (Bézout `j`, tie-broken into `(0, p1]`).
    pub j: i64,
    /// The meridian word `u^j v^i`.
    pub meridian: AmalgamWord,
    /// The longitude word `u^{p1} · m^{-p1·p2}`.
    pub longitude: AmalgamWord,
}

/// Computes the peripheral pair for coprime `(p1, p2)`.
pub fn peripheral_words(p1: u64, p2: u64) -> PeripheralPair {
    let (g, _i0, j0) = extended_gcd(p1 as i64, p2 as i64);
    assert_eq!(g, 1, "torus parameters must be coprime");
    // shift the Bézout pair so 0 < j <= p1
    let j = (j0 - 1).rem_euclid(p1 as i64) + 1;
    let i = (1 - j * p2 as i64) / p1 as i64;
    debug_assert_eq!(i * p1 as i64 + j * p2 as i64, 1);
    let meridian = AmalgamWord::new([(Gen::A, j), (Gen::B, i)]);
    let longitude = AmalgamWord::generator(Gen::A, p1 as i64)
        .concat(&meridian.pow(-((p1 * p2) as i64)));
    PeripheralPair {
        i,
        j,
        meridian,
        longitude,
    }
}
