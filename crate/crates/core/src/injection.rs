//! An injective map from periodic to primitive necklaces for the negative
//! double-cycle family, together with a decoder that inverts it.
//!
//! Fix a target length `n` and stride `Δ | n`, `K = n/Δ`. A source is a
//! primitive necklace of length `p | n`, `p < n`, admissible at stride
//! `Δ_p = gcd(p, Δ)`, given by its representative list of `Δ_p` words of
//! length `K_p = p/Δ_p`. The map lengthens those words to length `K` and
//! marks the result so that it is primitive and the source can be read back.
//!
//! Canonical words are built from the macro-letters `01` and `011`:
//! `u(K)` uses as many `01` as possible with at most two `011`, `v(K)` as many
//! `011` as possible with at most three `01`, `x(K) = u(K-5)u(5)` and
//! `y(K) = v(K-7)v(7)`.

use std::collections::{BTreeMap, HashSet};

use num_integer::Integer;
use serde::Serialize;

use crate::counting::is_excluded_pair;
use crate::error::{Error, Result};
use crate::words::{
    compose, decompose, enumerate_admissible, is_admissible, representative_list, CyclicWord, FamilyKind,
    ForbiddenFamily, InterleavingList, Necklace,
};
use crate::{check_cap, DEFAULT_CAP};

fn unit_family() -> ForbiddenFamily {
    ForbiddenFamily {
        kind: FamilyKind::NegBad,
        d: 1,
    }
}

fn word(s: &str) -> CyclicWord {
    s.parse().expect("literal binary word")
}

fn macro_word(a: usize, b: usize) -> CyclicWord {
    let s = "01".repeat(a) + &"011".repeat(b);
    word(&s)
}

fn u_raw(k: usize) -> CyclicWord {
    match k {
        2 | 4 => macro_word(k / 2, 0),
        _ => {
            let b = if k % 2 == 1 { 1 } else { 2 };
            macro_word((k - 3 * b) / 2, b)
        }
    }
}

fn v_raw(k: usize) -> CyclicWord {
    match k {
        2 => word("01"),
        3 => word("011"),
        _ => {
            let a = [3, 2, 1][k % 3];
            macro_word(a, (k - 2 * a) / 3)
        }
    }
}

fn x_raw(k: usize) -> CyclicWord {
    u_raw(k - 5).concat(&u_raw(5)).expect("short word")
}

fn y_raw(k: usize) -> CyclicWord {
    v_raw(k - 7).concat(&v_raw(7)).expect("short word")
}

/// `010101`, the period-2 word of length 6.
pub fn u6() -> CyclicWord {
    word("010101")
}

/// `011011`, the period-3 word of length 6.
pub fn v6() -> CyclicWord {
    word("011011")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CanonicalKind {
    U,
    V,
    X,
    Y,
}

/// One of the four canonical primitive words of length `k`.
pub fn canonical_word(which: CanonicalKind, k: usize) -> Result<CyclicWord> {
    let w = match which {
        CanonicalKind::U | CanonicalKind::V if k < 2 || k > 64 => None,
        CanonicalKind::U => Some(u_raw(k)),
        CanonicalKind::V => Some(v_raw(k)),
        CanonicalKind::X if (12..=64).contains(&k) => Some(x_raw(k)),
        CanonicalKind::Y if (15..=64).contains(&k) => Some(y_raw(k)),
        _ => None,
    };
    match w {
        Some(w) if w.is_primitive() && is_admissible(&w, unit_family()) => Ok(w),
        _ => Err(Error::Invalid(format!("no primitive canonical word {which:?}({k})"))),
    }
}

/// Elongation of a canonical word `uc` of length `K_p` to length `K`.
fn alpha_canonical(k: usize, uc: CyclicWord) -> CyclicWord {
    let kp = uc.len();
    if matches!(kp, 2 | 3 | 6) {
        match uc.primitive_period() {
            2 => u_raw(k),
            _ if k < 12 => u_raw(k),
            // x(K) = u(K-5)u(5) is also the image of u(5) when 5 | K.
            _ if k % 5 == 0 => y_raw(k),
            _ => x_raw(k),
        }
    } else if k % 2 == 0 && k / 2 == kp && uc == u_raw(kp) {
        v_raw(k)
    } else {
        u_raw(k - kp).concat(&uc).expect("length at most K")
    }
}

/// `α(K, u)`: a primitive admissible word of length `K` extending `u`,
/// rotation-equivariant in `u`.
pub fn alpha(k: usize, u: &CyclicWord) -> Result<CyclicWord> {
    let kp = u.len();
    if matches!(k, 0 | 1 | 4 | 6) || kp < 2 || kp >= k || k % kp != 0 || k > 64 {
        return Err(Error::Invalid(format!("elongation from length {kp} to {k} is undefined")));
    }
    if !is_admissible(u, unit_family()) {
        return Err(Error::Invalid(format!("{u} is not admissible")));
    }
    let uc = u.canonical_rotation().canonical;
    let shift = u.offset_from_canonical();
    Ok(alpha_canonical(k, uc).rotate(shift as i64))
}

/// Canonical words that [`alpha`] may receive at target length `k`.
fn alpha_domain(k: usize) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    for kp in 2..k {
        if k % kp != 0 {
            continue;
        }
        let census = enumerate_admissible(kp, unit_family()).expect("short words");
        for neck in census.necklaces {
            let period = neck.size;
            let special = matches!(kp, 2 | 3 | 6);
            if special || !matches!(period, 2 | 3) {
                out.push(neck.canonical);
            }
        }
    }
    out
}

/// `β(K, w)`: every word `u` with `α(K, u) = w`.
pub fn beta(k: usize, w: &CyclicWord) -> Vec<CyclicWord> {
    if w.len() != k || matches!(k, 0 | 1 | 4 | 6) {
        return Vec::new();
    }
    let target = w.canonical_rotation().canonical;
    let mut out = Vec::new();
    for uc in alpha_domain(k) {
        let image = alpha_canonical(k, uc);
        if image.canonical_rotation().canonical != target {
            continue;
        }
        for q in 0..k {
            if image.rotate(q as i64) == *w {
                out.push(uc.rotate(q as i64));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `β′(K_p, w)`: the preimage of `w` of length `kp`, if any.
pub fn beta_prime(kp: usize, w: &CyclicWord) -> Option<CyclicWord> {
    beta(w.len(), w).into_iter().find(|u| u.len() == kp)
}

/// Target parameters: length `n`, stride `d`, `Δ = gcd(n, d)`, `K = n/Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionParams {
    pub n: usize,
    pub d: usize,
    pub delta: usize,
    pub k: usize,
}

impl InjectionParams {
    /// Rejects `d ∉ (0, n)` and the `(Δ, K)` pairs with no injection.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::Invalid(format!("stride {d} outside 1..{n}")));
        }
        check_cap(n, DEFAULT_CAP)?;
        let delta = n.gcd(&d);
        let k = n / delta;
        if is_excluded_pair(delta as u64, k as u64) {
            return Err(Error::Invalid(format!("(Δ, K) = ({delta}, {k}) is excluded")));
        }
        Ok(InjectionParams { n, d, delta, k })
    }
}

/// A source necklace: length `p` and representative list at stride `Δ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Source {
    pub p: usize,
    pub list: InterleavingList,
}

/// Precomputed sources and images for one `(n, Δ)`.
#[derive(Clone, Debug)]
pub struct Injection {
    params: InjectionParams,
    sources: Vec<Source>,
    /// Images of the sources with `Δ_p = Δ`, avoided by every other choice.
    reserved: HashSet<InterleavingList>,
}

impl Injection {
    pub fn new(params: InjectionParams) -> Result<Self> {
        let (n, delta) = (params.n, params.delta);
        let mut sources = Vec::new();
        for p in 1..n {
            if n % p != 0 {
                continue;
            }
            let dp = p.gcd(&delta);
            if p / dp == 1 {
                continue;
            }
            let fam = ForbiddenFamily::new(FamilyKind::NegBad, dp)?;
            let census = enumerate_admissible(p, fam)?;
            let mut lists = census
                .primitive_necklaces()
                .map(|c| representative_list(&c.canonical, dp))
                .collect::<Result<Vec<_>>>()?;
            lists.sort();
            sources.extend(lists.into_iter().map(|list| Source { p, list }));
        }
        let mut inj = Injection {
            params,
            sources,
            reserved: HashSet::new(),
        };
        let mut reserved = HashSet::new();
        for s in inj.sources.iter().filter(|s| s.list.delta() == delta) {
            reserved.insert(inj.gamma(&s.list)?);
        }
        inj.reserved = reserved;
        Ok(inj)
    }

    pub fn params(&self) -> &InjectionParams {
        &self.params
    }

    pub fn sources(&self) -> &[Source] {
        &self.sources
    }

    fn target_list(&self, words: Vec<CyclicWord>) -> InterleavingList {
        InterleavingList::new(words, self.params.delta).expect("Δ words of length K")
    }

    fn representative(&self, list: &InterleavingList) -> InterleavingList {
        representative_list(&compose(list), self.params.delta).expect("stride > 0")
    }

    fn primitive(&self, words: &[CyclicWord]) -> bool {
        compose(&self.target_list(words.to_vec())).is_primitive()
    }

    fn is_reserved(&self, words: &[CyclicWord]) -> bool {
        self.reserved.contains(&self.representative(&self.target_list(words.to_vec())))
    }

    /// `Γ′(L)`: `Δ` words of length `K` built from a source list.
    pub fn gamma_prime(&self, list: &InterleavingList) -> Result<InterleavingList> {
        let InjectionParams { n, delta, k, .. } = self.params;
        let (dp, kp) = (list.delta(), list.k());
        let p = dp * kp;
        if p >= n || n % p != 0 || p.gcd(&delta) != dp || kp < 2 || list.stride() != dp {
            return Err(Error::Invalid(format!("{list} is not a source list for n = {n}, Δ = {delta}")));
        }
        let r = k / kp;
        let repeated = list
            .words()
            .iter()
            .map(|w| w.repeat(r))
            .collect::<Result<Vec<_>>>()?;
        let words = if k == 6 {
            self.six_letter_case(list, &repeated)?
        } else if dp == delta {
            let jstar = if matches!(kp, 2 | 3 | 6) {
                0
            } else {
                (0..dp)
                    .find(|&j| !matches!(list.word(j).primitive_period(), 2 | 3))
                    .expect("some sub-word carries the full period")
            };
            let mut out = repeated;
            out[jstar] = alpha(k, &list.word(jstar))?;
            out
        } else {
            self.insert_run(&repeated)?
        };
        Ok(self.target_list(words))
    }

    /// Insert `Δ - Δ_p` copies of one primitive word among the repeated source words.
    fn insert_run(&self, repeated: &[CyclicWord]) -> Result<Vec<CyclicWord>> {
        let InjectionParams { delta, k, .. } = self.params;
        let dp = repeated.len();
        let run = delta - dp;
        let (positions, fillers): (Vec<usize>, Vec<CyclicWord>) = if k > 14 {
            let y = y_raw(k);
            (vec![1], (0..k).map(|q| y.rotate(q as i64)).collect())
        } else {
            let census = enumerate_admissible(k, unit_family())?;
            let mut ws: Vec<CyclicWord> = census
                .primitive_necklaces()
                .flat_map(|c| (0..k).map(move |q| c.canonical.rotate(q as i64)))
                .collect();
            ws.sort();
            ws.dedup();
            ((0..=dp).collect(), ws)
        };
        let build = |j: usize, z: CyclicWord| {
            let mut v = repeated[..j].to_vec();
            v.extend(std::iter::repeat_n(z, run));
            v.extend_from_slice(&repeated[j..]);
            v
        };
        // First pass: the run differs from both neighbours. Second pass: any primitive choice.
        for bounded_only in [true, false] {
            for &j in &positions {
                for &z in &fillers {
                    let v = build(j, z);
                    if bounded_only && !run_is_bounded(&v, j, run, z) {
                        continue;
                    }
                    if self.primitive(&v) && !self.is_reserved(&v) {
                        return Ok(v);
                    }
                }
            }
        }
        Err(Error::Invalid("no primitive run insertion exists".into()))
    }

    fn six_letter_case(&self, list: &InterleavingList, repeated: &[CyclicWord]) -> Result<Vec<CyclicWord>> {
        let delta = self.params.delta;
        let (dp, kp) = (list.delta(), list.k());
        let (u, v) = (u6(), v6());
        if dp == delta {
            let mut out = repeated.to_vec();
            out[0] = if kp == 2 { v } else { u };
            return Ok(out);
        }
        let run = delta - dp;
        if dp > 1 && run > 2 {
            let fillers = match kp {
                2 => vec![v],
                3 => vec![u],
                _ => sorted_unit_words(6),
            };
            for j in 0..=dp {
                for &z in &fillers {
                    let mut w = repeated[..j].to_vec();
                    w.extend(std::iter::repeat_n(z, run));
                    w.extend_from_slice(&repeated[j..]);
                    if run_is_bounded(&w, j, run, z) && self.primitive(&w) && !self.is_reserved(&w) {
                        return Ok(w);
                    }
                }
            }
            return Err(Error::Invalid(format!("no marked run for {list}")));
        }
        let printed = printed_six_letter_list(delta, dp, kp)?;
        self.first_unreserved(printed)
    }

    /// The printed list if usable, else the first usable list over `W_1^6`.
    fn first_unreserved(&self, printed: Vec<CyclicWord>) -> Result<Vec<CyclicWord>> {
        let usable = |w: &[CyclicWord]| self.primitive(w) && !self.is_reserved(w);
        if usable(&printed) {
            return Ok(printed);
        }
        let pool = sorted_unit_words(6);
        let delta = self.params.delta;
        let mut idx = vec![0usize; delta];
        loop {
            let cand: Vec<CyclicWord> = idx.iter().map(|&i| pool[i]).collect();
            if usable(&cand) {
                return Ok(cand);
            }
            let mut pos = delta;
            loop {
                if pos == 0 {
                    return Err(Error::Invalid("no usable list of length-6 words".into()));
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < pool.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// `Γ(L)`: the representative list of the image necklace.
    pub fn gamma(&self, list: &InterleavingList) -> Result<InterleavingList> {
        Ok(self.representative(&self.gamma_prime(list)?))
    }

    /// `γ(⟨u⟩)` for a primitive necklace of length `p` admissible at stride `Δ_p`.
    pub fn gamma_map(&self, src: &Necklace) -> Result<Necklace> {
        let p = src.len();
        let dp = p.gcd(&self.params.delta);
        let list = representative_list(&src.canonical, dp)?;
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, dp)?;
        if !src.is_primitive() || !is_admissible(&src.canonical, fam) {
            return Err(Error::Invalid(format!("{} is not a source necklace", src.canonical)));
        }
        Ok(compose(&self.gamma(&list)?).canonical_rotation())
    }

    /// Source lists to try for a target; each is checked by re-encoding.
    fn candidates(&self, target: &InterleavingList) -> Vec<Vec<CyclicWord>> {
        let InjectionParams { n, delta, k, .. } = self.params;
        let words = target.words();
        let mut out: Vec<Vec<CyclicWord>> = Vec::new();
        let prefixes = |ws: &[CyclicWord], kp: usize| -> Vec<CyclicWord> {
            ws.iter().map(|w| w.prefix(kp).expect("kp <= K")).collect()
        };

        if k == 6 {
            // A single replaced word: every position, every length-K_p word in its place.
            for j in 0..delta {
                for kp in [2usize, 3, 6] {
                    for b in sorted_unit_words(kp) {
                        let mut c = prefixes(words, kp);
                        c[j] = b;
                        out.push(c);
                    }
                }
            }
            // Fixed short lists: every source too short for a marked run.
            for s in &self.sources {
                let dp = s.list.delta();
                if dp < delta && (dp == 1 || delta - dp <= 2) {
                    out.push(s.list.words().to_vec());
                }
            }
        } else {
            let prim: Vec<usize> = (0..delta).filter(|&j| words[j].is_primitive()).collect();
            if prim.len() == 1 {
                let j = prim[0];
                for b in beta(k, &words[j]) {
                    let mut c = prefixes(words, b.len());
                    c[j] = b;
                    out.push(c);
                }
                if delta == 2 {
                    let other = words[1 - j];
                    out.push(vec![other.prefix(other.primitive_period()).expect("period <= K")]);
                }
            }
        }

        // A run of D equal words marks Δ_p = Δ - D; strip it in every rotation.
        if delta > 1 {
            let w = compose(target);
            let mut runs: Vec<usize> = (1..delta).filter(|&dp| delta % dp == 0).map(|dp| delta - dp).collect();
            runs.sort_unstable_by(|a, b| b.cmp(a));
            for run in runs {
                for q in 0..n {
                    let lq = decompose(&w.rotate(q as i64), delta).expect("stride > 0");
                    let ws = lq.words();
                    let z = ws[0];
                    if ws[..run].iter().any(|&x| x != z) || (k != 6 && !z.is_primitive()) {
                        continue;
                    }
                    let rest = &ws[run..];
                    let kp = rest.iter().fold(1, |acc, x| num_integer::lcm(acc, x.primitive_period()));
                    if kp > 1 && k % kp == 0 {
                        out.push(prefixes(rest, kp));
                    }
                }
            }
        }
        out
    }

    /// The representative source list of a candidate, if it is a source at all.
    fn as_source(&self, words: Vec<CyclicWord>) -> Option<Source> {
        let dp = words.len();
        let kp = words.first()?.len();
        let p = dp * kp;
        let InjectionParams { n, delta, .. } = self.params;
        if p >= n || n % p != 0 || p.gcd(&delta) != dp || kp < 2 {
            return None;
        }
        let u = compose(&InterleavingList::new(words, dp).ok()?);
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, dp).ok()?;
        if !u.is_primitive() || !is_admissible(&u, fam) {
            return None;
        }
        Some(Source {
            p,
            list: representative_list(&u, dp).ok()?,
        })
    }

    /// Recover the source whose image is `target`, or `None` if there is none.
    pub fn decode(&self, target: &InterleavingList) -> Result<Option<Source>> {
        let InjectionParams { n, delta, k, .. } = self.params;
        if target.delta() != delta || target.k() != k || target.stride() != delta {
            return Err(Error::Invalid(format!("{target} is not a list of {delta} words of length {k}")));
        }
        let w = compose(target);
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, delta)?;
        if !w.is_primitive() || !is_admissible(&w, fam) || w.len() != n {
            return Ok(None);
        }
        let rep = self.representative(target);
        let mut seen = HashSet::new();
        for cand in self.candidates(&rep) {
            let Some(src) = self.as_source(cand) else { continue };
            if !seen.insert(src.clone()) {
                continue;
            }
            if self.gamma(&src.list)? == rep {
                return Ok(Some(src));
            }
        }
        Ok(None)
    }

    /// Map every source, check membership of images, roundtrip and distinctness.
    pub fn verify(&self) -> Result<InjectionReport> {
        let InjectionParams { n, d, delta, k } = self.params;
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, delta)?;
        let mut outcomes = Vec::new();
        let mut seen: BTreeMap<InterleavingList, usize> = BTreeMap::new();
        let mut collisions = Vec::new();
        for (i, s) in self.sources.iter().enumerate() {
            let image = self.gamma(&s.list)?;
            let w = compose(&image);
            let period_lcm = image
                .words()
                .iter()
                .fold(1, |acc, x| num_integer::lcm(acc, x.primitive_period()));
            let decoded = self.decode(&image)?;
            if let Some(&j) = seen.get(&image) {
                collisions.push((j, i));
            } else {
                seen.insert(image.clone(), i);
            }
            outcomes.push(SourceOutcome {
                p: s.p,
                source: s.list.clone(),
                image_primitive: w.is_primitive(),
                image_admissible: is_admissible(&w, fam),
                sub_word_periods_ok: period_lcm == k,
                roundtrip_ok: decoded.as_ref() == Some(s),
                image,
            });
        }
        Ok(InjectionReport {
            n,
            d,
            delta,
            k,
            outcomes,
            collisions,
        })
    }
}

/// Every word of `W_1^k`, ascending.
fn sorted_unit_words(k: usize) -> Vec<CyclicWord> {
    let census = enumerate_admissible(k, unit_family()).expect("short words");
    let mut out: Vec<CyclicWord> = census
        .necklaces
        .iter()
        .flat_map(|c| (0..c.size).map(move |q| c.canonical.rotate(q as i64)))
        .collect();
    out.sort();
    out
}

/// The run `v[j..j+run]` of `z` differs from the words on either side,
/// reading cyclically (the wrap shifts words by one rotation).
fn run_is_bounded(v: &[CyclicWord], j: usize, run: usize, z: CyclicWord) -> bool {
    let len = v.len();
    let left = if j > 0 { v[j - 1] } else { v[len - 1].rotate(1) };
    let right = if j + run < len { v[j + run] } else { v[0].rotate(-1) };
    z != left && z != right
}

/// The fixed lists for length-6 targets whose source is too short for a marked run.
pub fn printed_six_letter_list(delta: usize, dp: usize, kp: usize) -> Result<Vec<CyclicWord>> {
    let (u, v) = (u6(), v6());
    let list = match (delta, dp, kp) {
        (4, 2, 3) => vec![u, u, u, v],
        (4, 2, 6) => vec![v, v, v, u],
        (3, 1, 2) => vec![u, u, v],
        (_, 1, 2) if delta % 2 == 1 => {
            let mut l = vec![u];
            for _ in 0..(delta - 1) / 2 {
                l.extend([u, v]);
            }
            l
        }
        (4, 1, 3) => vec![v, v, u, u],
        (_, 1, 3) => {
            let a = delta % 3;
            let mut l = vec![v; a];
            for _ in 0..(delta - a) / 3 {
                l.extend([v, u, v]);
            }
            l
        }
        _ => {
            return Err(Error::Invalid(format!(
                "no fixed list for Δ = {delta}, Δ_p = {dp}, K_p = {kp}"
            )))
        }
    };
    Ok(list)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceOutcome {
    pub p: usize,
    pub source: InterleavingList,
    pub image: InterleavingList,
    pub image_primitive: bool,
    pub image_admissible: bool,
    /// The least common multiple of the image sub-word periods is `K`.
    pub sub_word_periods_ok: bool,
    pub roundtrip_ok: bool,
}

impl SourceOutcome {
    pub fn ok(&self) -> bool {
        self.image_primitive && self.image_admissible && self.sub_word_periods_ok && self.roundtrip_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub n: usize,
    pub d: usize,
    pub delta: usize,
    pub k: usize,
    pub outcomes: Vec<SourceOutcome>,
    /// Pairs of source indices with equal images.
    pub collisions: Vec<(usize, usize)>,
}

impl InjectionReport {
    pub fn ok(&self) -> bool {
        self.collisions.is_empty() && self.outcomes.iter().all(SourceOutcome::ok)
    }

    /// Per source length: `(p, sources, distinct images, roundtrip failures)`.
    pub fn by_length(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut m: BTreeMap<usize, (usize, HashSet<&InterleavingList>, usize)> = BTreeMap::new();
        for o in &self.outcomes {
            let e = m.entry(o.p).or_default();
            e.0 += 1;
            e.1.insert(&o.image);
            e.2 += (!o.ok()) as usize;
        }
        m.into_iter().map(|(p, (c, imgs, f))| (p, c, imgs.len(), f)).collect()
    }
}

/// Stride-`d` necklace counts of one length, with the injection check when it applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecklaceBoundReport {
    pub n: usize,
    pub d: usize,
    pub family: FamilyKind,
    pub delta: usize,
    pub k: usize,
    /// `|C_d^n|`.
    pub necklaces: u64,
    /// `|C̃_d^n|`.
    pub primitive_necklaces: u64,
    pub inequality_holds: bool,
    /// `(Δ, K)` is outside the domain of the bound.
    pub excluded: bool,
    /// `(Δ, K) ∈ {(1, 10), (2, 6)}`, the listed counterexamples.
    pub exception_flag: bool,
    pub injection: Option<InjectionReport>,
}

impl NecklaceBoundReport {
    pub fn ok(&self) -> bool {
        self.excluded || (self.inequality_holds && self.injection.as_ref().is_none_or(InjectionReport::ok))
    }
}

/// `|C_d^n| ≤ 2·|C̃_d^n|` by enumeration, plus the injection roundtrip for
/// the negative double-cycle family outside the excluded pairs.
pub fn verify_necklace_bound(n: usize, kind: FamilyKind, d: usize) -> Result<NecklaceBoundReport> {
    if d == 0 || d >= n {
        return Err(Error::Invalid(format!("stride {d} outside 1..{n}")));
    }
    let census = enumerate_admissible(n, ForbiddenFamily::new(kind, d)?)?;
    let delta = n.gcd(&d);
    let k = n / delta;
    let excluded = is_excluded_pair(delta as u64, k as u64);
    let (c, ct) = (census.necklace_count(), census.primitive_necklace_count());
    let injection = if kind == FamilyKind::NegBad && !excluded {
        Some(Injection::new(InjectionParams::new(n, d)?)?.verify()?)
    } else {
        None
    };
    Ok(NecklaceBoundReport {
        n,
        d,
        family: kind,
        delta,
        k,
        necklaces: c,
        primitive_necklaces: ct,
        inequality_holds: c <= 2 * ct,
        excluded,
        exception_flag: matches!((delta, k), (1, 10) | (2, 6)),
        injection,
    })
}
