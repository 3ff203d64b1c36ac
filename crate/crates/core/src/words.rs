//! Cyclic binary words, forbidden-factor families and interleavings.
//!
//! A word of length `n` is packed into a `u64` with letter 0 in the most
//! significant of the `n` low bits, so numeric order on equal-length words is
//! lexicographic order with `0 < 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::{check_cap, DEFAULT_CAP};

pub const MAX_WORD_LEN: usize = 64;

#[inline]
fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `ρ^q` on a packed word: `ρ^q(w)_i = w_{i-q}`.
#[inline]
fn rotr(bits: u64, n: usize, q: usize) -> u64 {
    let q = q % n;
    if q == 0 {
        bits
    } else {
        ((bits >> q) | (bits << (n - q))) & mask(n)
    }
}

/// A binary word with cyclic indexing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    // Field order matters: the derived ordering compares length first.
    len: u8,
    bits: u64,
}

impl CyclicWord {
    /// Build a word from its packed form (letter 0 is the highest bit).
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::Invalid(format!("word length {len} outside 1..=64")));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::Invalid(format!("bits {bits:#x} exceed length {len}")));
        }
        Ok(CyclicWord { len: len as u8, bits })
    }

    pub(crate) fn from_raw(len: usize, bits: u64) -> Self {
        debug_assert!(len >= 1 && len <= MAX_WORD_LEN && bits & !mask(len) == 0);
        CyclicWord { len: len as u8, bits }
    }

    pub fn from_letters(letters: &[u8]) -> Result<Self> {
        if letters.iter().any(|&b| b > 1) {
            return Err(Error::Invalid("letters must be 0 or 1".into()));
        }
        let bits = letters.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        CyclicWord::new(letters.len(), bits)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Words are never empty; provided for API symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Letter at cyclic index `i`.
    pub fn letter(&self, i: i64) -> u8 {
        let n = self.len();
        let i = i.rem_euclid(n as i64) as usize;
        ((self.bits >> (n - 1 - i)) & 1) as u8
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..self.len() as i64).map(|i| self.letter(i)).collect()
    }

    /// `ρ^q(w)`, where `ρ(w)_k = w_{k-1}`. Negative `q` rotates the other way.
    pub fn rotate(&self, q: i64) -> Self {
        let n = self.len();
        let q = q.rem_euclid(n as i64) as usize;
        CyclicWord::from_raw(n, rotr(self.bits, n, q))
    }

    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&p| n % p == 0 && rotr(self.bits, n, p) == self.bits)
            .unwrap_or(n)
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive_period() == self.len()
    }

    pub fn canonical_rotation(&self) -> Necklace {
        Necklace::of(self)
    }

    /// Least `k ≥ 0` with `ρ^k(canonical) = self`.
    pub fn offset_from_canonical(&self) -> usize {
        let c = self.canonical_rotation().canonical;
        (0..self.len())
            .find(|&k| c.rotate(k as i64) == *self)
            .expect("a word is a rotation of its canonical form")
    }

    pub fn concat(&self, other: &CyclicWord) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(Error::Invalid(format!("concatenation length {len} exceeds 64")));
        }
        Ok(CyclicWord::from_raw(len, (self.bits << other.len()) | other.bits))
    }

    /// `w^t`.
    pub fn repeat(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::Zero);
        }
        let mut out = *self;
        for _ in 1..t {
            out = out.concat(self)?;
        }
        Ok(out)
    }

    /// The first `m` letters.
    pub fn prefix(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.len() {
            return Err(Error::Invalid(format!("prefix length {m} outside 1..={}", self.len())));
        }
        Ok(CyclicWord::from_raw(m, self.bits >> (self.len() - m)))
    }

    pub fn complement(&self) -> Self {
        CyclicWord::from_raw(self.len(), !self.bits & mask(self.len()))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.letters() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Invalid(format!("not a binary word: {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        CyclicWord::from_letters(&letters)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A rotation class, stored by its least rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Necklace {
    pub canonical: CyclicWord,
    pub size: usize,
}

impl Necklace {
    pub fn of(w: &CyclicWord) -> Self {
        let n = w.len();
        let size = w.primitive_period();
        let bits = (0..size).map(|q| rotr(w.bits, n, q)).min().expect("n >= 1");
        Necklace {
            canonical: CyclicWord::from_raw(n, bits),
            size,
        }
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_primitive(&self) -> bool {
        self.size == self.len()
    }
}

/// The four forbidden-factor families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    /// No forbidden factor.
    Positive,
    /// `b·w·b`: letters at distance `d` must differ.
    NegBac,
    /// `0·w·0`: no two zeros at distance `d`.
    MixedBad,
    /// `0·w·0` and `1·w·1·v·1`.
    NegBad,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Positive => "positive",
            FamilyKind::NegBac => "neg-bac",
            FamilyKind::MixedBad => "mixed-bad",
            FamilyKind::NegBad => "neg-bad",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(FamilyKind::Positive),
            "neg-bac" => Ok(FamilyKind::NegBac),
            "mixed-bad" => Ok(FamilyKind::MixedBad),
            "neg-bad" => Ok(FamilyKind::NegBad),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ForbiddenFamily {
    pub kind: FamilyKind,
    pub d: usize,
}

impl ForbiddenFamily {
    pub fn new(kind: FamilyKind, d: usize) -> Result<Self> {
        if d == 0 && kind != FamilyKind::Positive {
            return Err(Error::Zero);
        }
        Ok(ForbiddenFamily { kind, d })
    }

    /// Same kind at another distance.
    pub fn with_d(&self, d: usize) -> Self {
        ForbiddenFamily { kind: self.kind, d }
    }
}

/// Admissibility of a packed word of length `n`; only anchor letters are compared.
#[inline]
pub fn admissible_bits(bits: u64, n: usize, fam: ForbiddenFamily) -> bool {
    let m = mask(n);
    // shifted_k has letter i equal to w_{i + k d}.
    let d = fam.d % n;
    let s1 = rotr(bits, n, n - d);
    match fam.kind {
        FamilyKind::Positive => true,
        FamilyKind::NegBac => (bits ^ s1) == m,
        FamilyKind::MixedBad => (bits | s1) == m,
        FamilyKind::NegBad => {
            let s2 = rotr(s1, n, n - d);
            (bits | s1) == m && (bits & s1 & s2) == 0
        }
    }
}

pub fn is_admissible(w: &CyclicWord, fam: ForbiddenFamily) -> bool {
    admissible_bits(w.bits, w.len(), fam)
}

/// Exhaustive census of the admissible words of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordCensus {
    pub n: usize,
    pub family: ForbiddenFamily,
    /// `|W̃(p)|` for every divisor `p` of `n`: admissible words of primitive period `p`.
    pub primitive_by_period: BTreeMap<usize, u64>,
    /// Necklace classes of admissible words, ascending.
    pub necklaces: Vec<Necklace>,
}

impl WordCensus {
    /// `|W|`.
    pub fn total(&self) -> u64 {
        self.primitive_by_period.values().sum()
    }

    /// `|W(p)|`: admissible words whose period divides `p`.
    pub fn with_period(&self, p: usize) -> u64 {
        self.primitive_by_period
            .iter()
            .filter(|(&q, _)| p % q == 0)
            .map(|(_, &c)| c)
            .sum()
    }

    /// `|W̃(p)|`.
    pub fn primitive_with_period(&self, p: usize) -> u64 {
        self.primitive_by_period.get(&p).copied().unwrap_or(0)
    }

    /// `|C|`.
    pub fn necklace_count(&self) -> u64 {
        self.necklaces.len() as u64
    }

    /// `|C̃(p)|`: necklaces whose primitive period is `p`.
    pub fn necklaces_with_period(&self, p: usize) -> u64 {
        self.necklaces.iter().filter(|c| c.size == p).count() as u64
    }

    /// `|C̃|`: primitive necklaces of full length.
    pub fn primitive_necklace_count(&self) -> u64 {
        self.necklaces_with_period(self.n)
    }

    pub fn primitive_necklaces(&self) -> impl Iterator<Item = &Necklace> {
        self.necklaces.iter().filter(move |c| c.size == self.n)
    }
}

/// `W_d^n` and friends with the default cap.
pub fn enumerate_admissible(n: usize, fam: ForbiddenFamily) -> Result<WordCensus> {
    enumerate_admissible_with_cap(n, fam, DEFAULT_CAP)
}

pub fn enumerate_admissible_with_cap(n: usize, fam: ForbiddenFamily, cap: usize) -> Result<WordCensus> {
    if n == 0 {
        return Err(Error::Zero);
    }
    check_cap(n, cap)?;
    let divs: Vec<usize> = (1..=n).filter(|p| n % p == 0).collect();
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(6).min(16);

    let scan = |lo: u64, hi: u64| {
        let mut counts = vec![0u64; divs.len()];
        let mut necks = Vec::new();
        for bits in lo..hi {
            if !admissible_bits(bits, n, fam) {
                continue;
            }
            let k = divs
                .iter()
                .position(|&p| rotr(bits, n, p) == bits)
                .expect("n is a period");
            counts[k] += 1;
            let p = divs[k];
            if (1..p).all(|q| rotr(bits, n, q) >= bits) {
                necks.push(Necklace {
                    canonical: CyclicWord::from_raw(n, bits),
                    size: p,
                });
            }
        }
        (counts, necks)
    };

    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let parts: Vec<(Vec<u64>, Vec<Necklace>)> = starts
        .into_par_iter()
        .map(|lo| scan(lo, (lo + chunk).min(total)))
        .collect();

    let mut counts = vec![0u64; divs.len()];
    let mut necklaces = Vec::new();
    for (c, ns) in parts {
        for (acc, v) in counts.iter_mut().zip(c) {
            *acc += v;
        }
        necklaces.extend(ns);
    }
    Ok(WordCensus {
        n,
        family: fam,
        primitive_by_period: divs.into_iter().zip(counts).collect(),
        necklaces,
    })
}

/// An interleaving of `Δ` words of length `K`, read at stride `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InterleavingList {
    words: Vec<CyclicWord>,
    stride: usize,
}

impl InterleavingList {
    pub fn new(words: Vec<CyclicWord>, stride: usize) -> Result<Self> {
        let first = words.first().ok_or(Error::Invalid("empty interleaving list".into()))?;
        let k = first.len();
        if words.iter().any(|w| w.len() != k) {
            return Err(Error::Invalid("sub-words must share one length".into()));
        }
        let n = k * words.len();
        if stride == 0 || n > MAX_WORD_LEN || n.gcd(&stride) != words.len() {
            return Err(Error::Invalid(format!(
                "{} words of length {k} do not interleave at stride {stride}",
                words.len()
            )));
        }
        Ok(InterleavingList { words, stride })
    }

    pub fn words(&self) -> &[CyclicWord] {
        &self.words
    }

    pub fn word(&self, j: usize) -> CyclicWord {
        self.words[j]
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    /// `Δ`, the number of sub-words.
    pub fn delta(&self) -> usize {
        self.words.len()
    }

    /// `K`, the sub-word length.
    pub fn k(&self) -> usize {
        self.words[0].len()
    }

    /// Length of the interleaved word.
    pub fn n(&self) -> usize {
        self.delta() * self.k()
    }

    /// Whether `L(0)` is a least rotation and no sub-word is smaller.
    pub fn is_representative_shaped(&self) -> bool {
        let l0 = self.words[0];
        l0.canonical_rotation().canonical == l0 && self.words.iter().all(|w| l0 <= *w)
    }
}

impl fmt::Display for InterleavingList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// `L(j)_k = w_{j + k d}` for `j < gcd(n, d)`, `k < n / gcd(n, d)`.
pub fn decompose(w: &CyclicWord, d: usize) -> Result<InterleavingList> {
    if d == 0 {
        return Err(Error::Zero);
    }
    let n = w.len();
    let delta = n.gcd(&d);
    let k = n / delta;
    let words = (0..delta)
        .map(|j| {
            let bits = (0..k).fold(0u64, |acc, q| {
                (acc << 1) | w.letter(((j + q * d) % n) as i64) as u64
            });
            CyclicWord::from_raw(k, bits)
        })
        .collect();
    Ok(InterleavingList { words, stride: d })
}

/// Inverse of [`decompose`]: `w_{j + qΔ} = L(j)_{q b mod K}` where `b d ≡ Δ (mod n)`.
pub fn compose(list: &InterleavingList) -> CyclicWord {
    let (delta, k, n, d) = (list.delta(), list.k(), list.n(), list.stride);
    let b = (0..k)
        .find(|&b| (b * d) % n == delta % n)
        .expect("Bezout coefficient exists");
    let mut bits = 0u64;
    for i in 0..n {
        let (q, j) = (i / delta, i % delta);
        bits = (bits << 1) | list.words[j].letter(((q * b) % k) as i64) as u64;
    }
    CyclicWord::from_raw(n, bits)
}

/// Lexicographically least decomposition over all rotations of `w`.
pub fn representative_list(w: &CyclicWord, d: usize) -> Result<InterleavingList> {
    let mut best: Option<InterleavingList> = None;
    for q in 0..w.len() {
        let cand = decompose(&w.rotate(q as i64), d)?;
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(best.expect("at least one rotation"))
}

/// Checks over all of `B^n` that admissibility at stride `d` is equivalent
/// to admissibility of every sub-word at stride 1.
pub fn admissibility_transfer_check(n: usize, d: usize, kind: FamilyKind) -> Result<bool> {
    if n == 0 || d == 0 {
        return Err(Error::Zero);
    }
    check_cap(n, DEFAULT_CAP)?;
    let fam = ForbiddenFamily::new(kind, d)?;
    let unit = fam.with_d(1);
    Ok((0..1u64 << n).into_par_iter().all(|bits| {
        let w = CyclicWord::from_raw(n, bits);
        let list = decompose(&w, d).expect("d > 0");
        is_admissible(&w, fam) == list.words().iter().all(|u| is_admissible(u, unit))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn fam(kind: FamilyKind, d: usize) -> ForbiddenFamily {
        ForbiddenFamily::new(kind, d).unwrap()
    }

    /// Direct transcription of the pattern definitions, used as an oracle.
    fn admissible_slow(w: &CyclicWord, f: ForbiddenFamily) -> bool {
        let d = f.d as i64;
        (0..w.len() as i64).all(|i| {
            let (a, b, c) = (w.letter(i), w.letter(i + d), w.letter(i + 2 * d));
            match f.kind {
                FamilyKind::Positive => true,
                FamilyKind::NegBac => a != b,
                FamilyKind::MixedBad => !(a == 0 && b == 0),
                FamilyKind::NegBad => !(a == 0 && b == 0) && !(a == 1 && b == 1 && c == 1),
            }
        })
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&w("0101"), fam(FamilyKind::NegBad, 1)));
        assert!(!is_admissible(&w("0110"), fam(FamilyKind::NegBad, 1)));
        assert!(is_admissible(&w("1111"), fam(FamilyKind::MixedBad, 1)));
        assert!(!is_admissible(&w("0101"), fam(FamilyKind::NegBac, 2)));
        assert!(is_admissible(&w("0000"), fam(FamilyKind::Positive, 0)));
    }

    #[test]
    fn packed_admissibility_matches_pattern_oracle() {
        for n in 1..=9 {
            for bits in 0..1u64 << n {
                let word = CyclicWord::new(n, bits).unwrap();
                for d in 1..=2 * n {
                    for kind in [FamilyKind::NegBac, FamilyKind::MixedBad, FamilyKind::NegBad] {
                        let f = fam(kind, d);
                        assert_eq!(is_admissible(&word, f), admissible_slow(&word, f), "{word} {f:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn periods_and_canonical_forms() {
        assert_eq!(w("010101").primitive_period(), 2);
        assert_eq!(w("011").primitive_period(), 3);
        assert_eq!(w("0000").primitive_period(), 1);
        let c = w("1010").canonical_rotation();
        assert_eq!((c.canonical, c.size), (w("0101"), 2));
        let c = w("110").canonical_rotation();
        assert_eq!((c.canonical, c.size), (w("011"), 3));
        let c = w("0001").canonical_rotation();
        assert_eq!((c.canonical, c.size), (w("0001"), 4));
    }

    #[test]
    fn rotation_direction() {
        // ρ(w)_k = w_{k-1}
        assert_eq!(w("0011").rotate(1), w("1001"));
        assert_eq!(w("0011").rotate(-1), w("0110"));
        assert_eq!(w("011").offset_from_canonical(), 0);
        assert_eq!(w("101").offset_from_canonical(), 1);
        assert_eq!(w("110").offset_from_canonical(), 2);
    }

    #[test]
    fn word_building() {
        assert_eq!(w("01").repeat(3).unwrap(), w("010101"));
        assert_eq!(w("01").concat(&w("011")).unwrap(), w("01011"));
        assert_eq!(w("01011").prefix(2).unwrap(), w("01"));
        assert_eq!(w("0110").complement(), w("1001"));
        assert!("012".parse::<CyclicWord>().is_err());
        assert!("".parse::<CyclicWord>().is_err());
    }

    #[test]
    fn census_examples() {
        let c = enumerate_admissible(5, fam(FamilyKind::NegBad, 1)).unwrap();
        assert_eq!(c.total(), 5);
        assert_eq!(c.primitive_necklace_count(), 1);
        assert_eq!(c.primitive_with_period(5), 5);

        let c = enumerate_admissible(6, fam(FamilyKind::NegBad, 1)).unwrap();
        assert_eq!(c.total(), 5);
        assert_eq!(c.primitive_necklace_count(), 0);
        let canon: Vec<_> = c.necklaces.iter().map(|x| x.canonical).collect();
        assert_eq!(canon, vec![w("010101"), w("011011")]);

        let c = enumerate_admissible(4, fam(FamilyKind::MixedBad, 1)).unwrap();
        assert_eq!(c.total(), 7);

        let c = enumerate_admissible(4, fam(FamilyKind::NegBad, 4)).unwrap();
        assert_eq!(c.total(), 0);

        assert!(matches!(
            enumerate_admissible(25, fam(FamilyKind::NegBad, 1)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn census_cardinal_chain() {
        for n in 1..=12 {
            for d in 1..n {
                for kind in [FamilyKind::NegBac, FamilyKind::MixedBad, FamilyKind::NegBad] {
                    let c = enumerate_admissible(n, fam(kind, d)).unwrap();
                    let brute = (0..1u64 << n)
                        .filter(|&b| admissible_slow(&CyclicWord::new(n, b).unwrap(), fam(kind, d)))
                        .count() as u64;
                    assert_eq!(c.total(), brute);
                    for (&p, &count) in &c.primitive_by_period {
                        assert_eq!(count, p as u64 * c.necklaces_with_period(p));
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let l = decompose(&w("001011"), 2).unwrap();
        assert_eq!(l.words(), &[w("011"), w("001")]);
        assert_eq!(compose(&l), w("001011"));

        let long = CyclicWord::new(15, 0b101101011010111).unwrap();
        let l = decompose(&long, 6).unwrap();
        assert_eq!((l.delta(), l.k()), (3, 5));

        let l = decompose(&w("0110"), 4).unwrap();
        assert_eq!(l.words(), &[w("0"), w("1"), w("1"), w("0")]);
        assert_eq!(compose(&l), w("0110"));
    }

    #[test]
    fn compose_inverts_decompose_exhaustively() {
        let n = 12;
        for bits in 0..1u64 << n {
            let word = CyclicWord::new(n, bits).unwrap();
            for d in 1..=n {
                assert_eq!(compose(&decompose(&word, d).unwrap()), word);
            }
        }
    }

    #[test]
    fn representative_examples() {
        let r = representative_list(&w("0101"), 2).unwrap();
        assert_eq!(r.words(), &[w("00"), w("11")]);
        let r = representative_list(&w("1011"), 2).unwrap();
        assert_eq!(r.words(), &[w("01"), w("11")]);
        let r = representative_list(&w("11010"), 1).unwrap();
        assert_eq!(r.words(), &[w("01011")]);
        for bits in 0..1u64 << 8 {
            let word = CyclicWord::new(8, bits).unwrap();
            for d in 1..=8 {
                let r = representative_list(&word, d).unwrap();
                assert!(r.is_representative_shaped());
                assert_eq!(representative_list(&compose(&r), d).unwrap(), r);
            }
        }
    }

    #[test]
    fn transfer_examples() {
        assert!(admissibility_transfer_check(12, 3, FamilyKind::NegBad).unwrap());
        assert!(admissibility_transfer_check(10, 2, FamilyKind::MixedBad).unwrap());
        assert!(admissibility_transfer_check(6, 1, FamilyKind::NegBad).unwrap());
    }
}
