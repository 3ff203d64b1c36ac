//! Boolean automata networks under parallel update.
//!
//! Automaton `i` holds bit `i` of a configuration. Networks built by
//! [`make_bac`] and [`make_bad`] keep their local functions in structured form
//! so one step costs `O(n)`; generic networks use truth tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{DivisorFunction, PeriodTable};
use crate::words::{enumerate_admissible, is_admissible, CyclicWord, FamilyKind, ForbiddenFamily};
use crate::{check_cap, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn apply(self, bit: bool) -> bool {
        match self {
            Sign::Pos => bit,
            Sign::Neg => !bit,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "pos" => Ok(Sign::Pos),
            "-" | "neg" => Ok(Sign::Neg),
            _ => Err(Error::Invalid(format!("bad sign {s:?}"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_char(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Gate {
    Or,
    And,
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "or" => Ok(Gate::Or),
            "and" => Ok(Gate::And),
            _ => Err(Error::Invalid(format!("bad gate {s:?}"))),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gate::Or => "OR",
            Gate::And => "AND",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalFunction {
    /// `f_i(x) = s(x_pred)`.
    Copy { pred: usize, sign: Sign },
    /// `f_i(x) = s1(x_p1) ⋄ s2(x_p2)`.
    Gate {
        gate: Gate,
        inputs: [(usize, Sign); 2],
    },
    /// Entry `k` is `f_i` at the configuration whose integer value is `k`.
    Table(Vec<bool>),
}

impl LocalFunction {
    #[inline]
    fn eval(&self, x: u64) -> bool {
        let bit = |j: usize| (x >> j) & 1 == 1;
        match self {
            LocalFunction::Copy { pred, sign } => sign.apply(bit(*pred)),
            LocalFunction::Gate { gate, inputs } => {
                let a = inputs[0].1.apply(bit(inputs[0].0));
                let b = inputs[1].1.apply(bit(inputs[1].0));
                match gate {
                    Gate::Or => a || b,
                    Gate::And => a && b,
                }
            }
            LocalFunction::Table(t) => t[x as usize],
        }
    }

    /// Inputs the function reads; `None` means "possibly all".
    fn support(&self) -> Option<Vec<usize>> {
        match self {
            LocalFunction::Copy { pred, .. } => Some(vec![*pred]),
            LocalFunction::Gate { inputs, .. } => {
                let mut s = vec![inputs[0].0, inputs[1].0];
                s.dedup();
                Some(s)
            }
            LocalFunction::Table(_) => None,
        }
    }
}

/// What a network was built as.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NetworkTag {
    Bac { n: usize, sign: Sign },
    Bad { l: usize, r: usize, sl: Sign, sr: Sign, gate: Gate },
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkSpec {
    locals: Vec<LocalFunction>,
    tag: NetworkTag,
}

/// A configuration of an `width`-automaton network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    pub bits: u64,
    pub width: usize,
}

impl Configuration {
    pub fn new(bits: u64, width: usize) -> Result<Self> {
        if width == 0 || width > 64 || (width < 64 && bits >> width != 0) {
            return Err(Error::Invalid(format!("configuration {bits:#b} does not fit width {width}")));
        }
        Ok(Configuration { bits, width })
    }

    pub fn state(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }
}

impl fmt::Display for Configuration {
    /// Automaton 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            write!(f, "{}", self.state(i) as u8)?;
        }
        Ok(())
    }
}

impl NetworkSpec {
    pub fn new(locals: Vec<LocalFunction>, tag: NetworkTag) -> Result<Self> {
        let n = locals.len();
        if n == 0 || n > 64 {
            return Err(Error::Invalid(format!("network size {n} outside 1..=64")));
        }
        for (i, f) in locals.iter().enumerate() {
            let bad_pred = match f {
                LocalFunction::Copy { pred, .. } => *pred >= n,
                LocalFunction::Gate { inputs, .. } => inputs.iter().any(|&(p, _)| p >= n),
                LocalFunction::Table(t) => n >= 32 || t.len() != 1 << n,
            };
            if bad_pred {
                return Err(Error::Invalid(format!("local function {i} does not fit a network of size {n}")));
            }
        }
        Ok(NetworkSpec { locals, tag })
    }

    pub fn n(&self) -> usize {
        self.locals.len()
    }

    pub fn tag(&self) -> &NetworkTag {
        &self.tag
    }

    pub fn locals(&self) -> &[LocalFunction] {
        &self.locals
    }

    /// One parallel update on a packed configuration.
    #[inline]
    pub fn step_bits(&self, x: u64) -> u64 {
        self.locals
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, f)| acc | ((f.eval(x) as u64) << i))
    }

    pub fn step(&self, x: Configuration) -> Result<Configuration> {
        if x.width != self.n() {
            return Err(Error::Invalid(format!(
                "configuration width {} does not match network size {}",
                x.width,
                self.n()
            )));
        }
        Ok(Configuration {
            bits: self.step_bits(x.bits),
            width: x.width,
        })
    }

    /// Serialise to the line-per-automaton text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.locals {
            match f {
                LocalFunction::Copy { pred, sign } => {
                    out.push_str(&format!("copy {pred} {}\n", sign.symbol()));
                }
                LocalFunction::Gate { gate, inputs } => {
                    out.push_str(&format!(
                        "gate {gate} {} {} {} {}\n",
                        inputs[0].0,
                        inputs[0].1.symbol(),
                        inputs[1].0,
                        inputs[1].1.symbol()
                    ));
                }
                LocalFunction::Table(t) => {
                    let s: String = t.iter().map(|&b| if b { '1' } else { '0' }).collect();
                    out.push_str(&format!("table {s}\n"));
                }
            }
        }
        out
    }

    /// Parse the text format. Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut locals = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|e| err(format!("{s:?}: {e}")));
            let sign = |s: &str| s.parse::<Sign>().map_err(|e| err(e.to_string()));
            let f = match toks.as_slice() {
                ["copy", p, s] => LocalFunction::Copy {
                    pred: num(p)?,
                    sign: sign(s)?,
                },
                ["gate", g, p1, s1, p2, s2] => LocalFunction::Gate {
                    gate: g.parse().map_err(|e: Error| err(e.to_string()))?,
                    inputs: [(num(p1)?, sign(s1)?), (num(p2)?, sign(s2)?)],
                },
                ["table", bits] => LocalFunction::Table(
                    bits.chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(err(format!("bad table letter {c:?}"))),
                        })
                        .collect::<Result<Vec<bool>>>()?,
                ),
                _ => return Err(err(format!("unrecognised line {line:?}"))),
            };
            locals.push(f);
        }
        NetworkSpec::new(locals, NetworkTag::Generic).map_err(|e| match e {
            Error::Invalid(msg) => Error::Parse { line: 0, msg },
            other => other,
        })
    }
}

/// A simple cycle `0 → 1 → … → n-1 → 0`; the only negative arc, if any, enters automaton 0.
pub fn make_bac(n: usize, sign: Sign) -> Result<NetworkSpec> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut signs = vec![Sign::Pos; n];
    signs[0] = sign;
    make_bac_signed(&signs)
}

/// A cycle where `signs[i]` labels the arc entering automaton `i`.
pub fn make_bac_signed(signs: &[Sign]) -> Result<NetworkSpec> {
    let n = signs.len();
    if n == 0 {
        return Err(Error::Zero);
    }
    let locals = (0..n)
        .map(|i| LocalFunction::Copy {
            pred: (i + n - 1) % n,
            sign: signs[i],
        })
        .collect();
    let sign = signs.iter().fold(Sign::Pos, |a, &s| a.times(s));
    NetworkSpec::new(locals, NetworkTag::Bac { n, sign })
}

/// Two cycles sharing automaton 0: the left one visits `0, 1, …, ℓ-1`, the
/// right one `0, ℓ, …, n-1` with `n = ℓ + r - 1`. Each negative cycle has
/// its single negative arc entering automaton 0.
pub fn make_bad(l: usize, r: usize, sl: Sign, sr: Sign, gate: Gate) -> Result<NetworkSpec> {
    if l == 0 || r == 0 {
        return Err(Error::Zero);
    }
    let mut left = vec![Sign::Pos; l];
    let mut right = vec![Sign::Pos; r];
    left[0] = sl;
    right[0] = sr;
    make_bad_signed(&left, &right, gate)
}

/// `left[k]` labels the arc entering the `k`-th automaton of the left cycle
/// (automaton `k`), `right[k]` the arc entering the `k`-th automaton of the
/// right cycle (automaton 0 for `k = 0`, else `ℓ + k - 1`).
pub fn make_bad_signed(left: &[Sign], right: &[Sign], gate: Gate) -> Result<NetworkSpec> {
    let (l, r) = (left.len(), right.len());
    if l == 0 || r == 0 {
        return Err(Error::Zero);
    }
    let n = l + r - 1;
    let mut locals = Vec::with_capacity(n);
    let right_pred_of_0 = if r == 1 { 0 } else { n - 1 };
    locals.push(LocalFunction::Gate {
        gate,
        inputs: [(l - 1, left[0]), (right_pred_of_0, right[0])],
    });
    for (i, &sign) in left.iter().enumerate().skip(1) {
        locals.push(LocalFunction::Copy { pred: i - 1, sign });
    }
    for (k, &sign) in right.iter().enumerate().skip(1) {
        let i = l + k - 1;
        let pred = if k == 1 { 0 } else { i - 1 };
        locals.push(LocalFunction::Copy { pred, sign });
    }
    let product = |s: &[Sign]| s.iter().fold(Sign::Pos, |a, &b| a.times(b));
    NetworkSpec::new(
        locals,
        NetworkTag::Bad {
            l,
            r,
            sl: product(left),
            sr: product(right),
            gate,
        },
    )
}

/// Interaction digraph with arc signs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedDigraph {
    pub n: usize,
    /// `(j, i) ↦ sign` for every arc `j → i`.
    pub arcs: BTreeMap<(usize, usize), Sign>,
}

impl SignedDigraph {
    /// Product of arc signs along `cycle` (closed implicitly), `None` if an arc is missing.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Option<Sign> {
        let mut acc = Sign::Pos;
        for k in 0..cycle.len() {
            let (j, i) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            acc = acc.times(*self.arcs.get(&(j, i))?);
        }
        Some(acc)
    }
}

/// Recover arcs and signs by testing every input flip of every local function.
pub fn infer_structure(net: &NetworkSpec) -> Result<SignedDigraph> {
    let n = net.n();
    check_cap(n, DEFAULT_CAP)?;
    let mut arcs = BTreeMap::new();
    for (i, f) in net.locals.iter().enumerate() {
        let support = f.support();
        let candidates = support.clone().unwrap_or_else(|| (0..n).collect());
        for &j in &candidates {
            let (mut up, mut down) = (false, false);
            let mut visit = |x: u64| {
                let lo = f.eval(x & !(1 << j));
                let hi = f.eval(x | (1 << j));
                up |= !lo && hi;
                down |= lo && !hi;
            };
            match &support {
                // A structured function only reads its support, so enumerating
                // the support's assignments covers every case.
                Some(s) => {
                    for a in 0..1u64 << s.len() {
                        let x = s.iter().enumerate().fold(0u64, |x, (k, &p)| x | (((a >> k) & 1) << p));
                        visit(x);
                    }
                }
                None => {
                    for x in 0..1u64 << n {
                        if (x >> j) & 1 == 0 {
                            visit(x);
                        }
                    }
                }
            }
            match (up, down) {
                (true, true) => return Err(Error::NonMonotone { automaton: i, input: j }),
                (true, false) => {
                    arcs.insert((j, i), Sign::Pos);
                }
                (false, true) => {
                    arcs.insert((j, i), Sign::Neg);
                }
                (false, false) => {}
            }
        }
    }
    Ok(SignedDigraph { n, arcs })
}

/// One attractor: its states in update order, starting from the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attractor {
    pub period: usize,
    pub states: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttractorReport {
    pub n: usize,
    pub table: PeriodTable,
    /// Sorted by period, then by smallest state.
    pub attractors: Vec<Attractor>,
    pub recurrent_count: u64,
}

impl AttractorReport {
    pub fn omega(&self) -> u64 {
        self.table.omega
    }

    /// Configurations fixed by `F^p`, for any `p ≥ 1`.
    pub fn fixed_points(&self, p: u64) -> u64 {
        self.attractors
            .iter()
            .filter(|a| p % a.period as u64 == 0)
            .map(|a| a.period as u64)
            .sum()
    }

    /// Number of attractors of each primitive period.
    pub fn period_histogram(&self) -> BTreeMap<usize, u64> {
        let mut h = BTreeMap::new();
        for a in &self.attractors {
            *h.entry(a.period).or_insert(0) += 1;
        }
        h
    }
}

/// Exhaustive attractor enumeration with the default cap.
pub fn attractor_census(net: &NetworkSpec) -> Result<AttractorReport> {
    attractor_census_with_cap(net, DEFAULT_CAP)
}

pub fn attractor_census_with_cap(net: &NetworkSpec, cap: usize) -> Result<AttractorReport> {
    let n = net.n();
    check_cap(n, cap)?;
    const UNSEEN: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let size = 1usize << n;
    let mut mark = vec![UNSEEN; size];
    let mut path: Vec<u32> = Vec::new();
    let mut attractors = Vec::new();
    for start in 0..size {
        if mark[start] != UNSEEN {
            continue;
        }
        path.clear();
        let mut x = start;
        while mark[x] == UNSEEN {
            mark[x] = ON_PATH;
            path.push(x as u32);
            x = net.step_bits(x as u64) as usize;
        }
        if mark[x] == ON_PATH {
            let pos = path.iter().rposition(|&s| s as usize == x).expect("on current path");
            let cycle = &path[pos..];
            let (min_at, _) = cycle.iter().enumerate().min_by_key(|(_, &s)| s).expect("non-empty");
            let states = cycle[min_at..]
                .iter()
                .chain(&cycle[..min_at])
                .map(|&s| s as u64)
                .collect::<Vec<_>>();
            attractors.push(Attractor {
                period: states.len(),
                states,
            });
        }
        for &s in &path {
            mark[s as usize] = DONE;
        }
    }
    attractors.sort_by_key(|a| (a.period, a.states[0]));
    let omega = attractors
        .iter()
        .fold(1u64, |acc, a| num_integer::lcm(acc, a.period as u64));
    let x = DivisorFunction::from_fn(omega, |p| {
        attractors
            .iter()
            .filter(|a| p % a.period as u64 == 0)
            .map(|a| BigInt::from(a.period))
            .sum()
    })?;
    let table = PeriodTable::from_x(x)?;
    let recurrent_count = attractors.iter().map(|a| a.period as u64).sum();
    Ok(AttractorReport {
        n,
        table,
        attractors,
        recurrent_count,
    })
}

/// The trace `x_0(0) x_0(1) … x_0(horizon-1)` of automaton 0 from `x`.
pub fn orbit_word(net: &NetworkSpec, x: Configuration, horizon: usize) -> Result<CyclicWord> {
    if x.width != net.n() {
        return Err(Error::Invalid("configuration width does not match network".into()));
    }
    if horizon == 0 {
        return Err(Error::Zero);
    }
    let mut letters = Vec::with_capacity(horizon);
    let mut y = x.bits;
    for _ in 0..horizon {
        letters.push((y & 1) as u8);
        y = net.step_bits(y);
    }
    if y != x.bits {
        return Err(Error::NotRecurrent(x.bits));
    }
    CyclicWord::from_letters(&letters)
}

/// `|U(x)|`: automata whose state differs from their local function's output.
pub fn local_instabilities(net: &NetworkSpec, x: Configuration) -> Result<u32> {
    let y = net.step(x)?;
    Ok((x.bits ^ y.bits).count_ones())
}

/// Per-divisor outcome of the orbit-word correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitWordRow {
    pub p: u64,
    pub d: usize,
    pub family: FamilyKind,
    /// `X(p)` from the census.
    pub measured: u64,
    /// `|W_d^p|` by enumeration.
    pub words: u64,
    /// Every configuration fixed by `F^p` yields an admissible orbit word.
    pub orbit_words_admissible: bool,
}

impl OrbitWordRow {
    pub fn holds(&self) -> bool {
        self.orbit_words_admissible && self.measured == self.words
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitWordReport {
    pub rows: Vec<OrbitWordRow>,
    /// Divisors `p` of `ω` with `ℓ mod p = 0`, outside the correspondence.
    pub skipped: Vec<u64>,
}

impl OrbitWordReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(OrbitWordRow::holds)
    }
}

/// Checks, for a double-cycle with a negative left cycle, that the period-`p`
/// configurations correspond to the admissible words of length `p` at
/// distance `ℓ mod p`, in both directions.
pub fn orbit_word_check(net: &NetworkSpec) -> Result<OrbitWordReport> {
    let mut cache = HashMap::new();
    orbit_word_check_cached(net, &mut cache)
}

/// As [`orbit_word_check`], sharing word counts across calls.
pub fn orbit_word_check_cached(
    net: &NetworkSpec,
    cache: &mut HashMap<(usize, usize, FamilyKind), u64>,
) -> Result<OrbitWordReport> {
    let report = attractor_census(net)?;
    orbit_word_check_with_census(net, &report, cache)
}

/// As [`orbit_word_check_cached`], on a census already computed for `net`.
pub fn orbit_word_check_with_census(
    net: &NetworkSpec,
    report: &AttractorReport,
    cache: &mut HashMap<(usize, usize, FamilyKind), u64>,
) -> Result<OrbitWordReport> {
    let NetworkTag::Bad { l, sl, sr, gate, .. } = *net.tag() else {
        return Err(Error::Invalid("orbit-word correspondence needs a double-cycle".into()));
    };
    if sl != Sign::Neg {
        return Err(Error::Invalid("orbit-word correspondence needs a negative left cycle".into()));
    }
    let kind = if sr == Sign::Neg {
        FamilyKind::NegBad
    } else {
        FamilyKind::MixedBad
    };
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (p, x) in report.table.x.iter() {
        let d = l % p as usize;
        if d == 0 {
            skipped.push(p);
            continue;
        }
        let fam = ForbiddenFamily::new(kind, d)?;
        let words = match cache.get(&(p as usize, d, kind)) {
            Some(&w) => w,
            None => {
                let w = enumerate_admissible(p as usize, fam)?.total();
                cache.insert((p as usize, d, kind), w);
                w
            }
        };
        let orbit_words_admissible = report
            .attractors
            .iter()
            .filter(|a| p % a.period as u64 == 0)
            .flat_map(|a| a.states.iter())
            .all(|&s| {
                let c = Configuration { bits: s, width: net.n() };
                let word = orbit_word(net, c, p as usize).expect("recurrent state");
                let word = match gate {
                    Gate::Or => word,
                    Gate::And => word.complement(),
                };
                is_admissible(&word, fam)
            });
        rows.push(OrbitWordRow {
            p,
            d,
            family: kind,
            measured: u64::try_from(x).expect("fits u64"),
            words,
            orbit_words_admissible,
        });
    }
    Ok(OrbitWordReport { rows, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(bits: u64, width: usize) -> Configuration {
        Configuration::new(bits, width).unwrap()
    }

    /// Configurations written automaton 0 first.
    fn cfg_str(s: &str) -> Configuration {
        let bits = s.chars().enumerate().fold(0u64, |acc, (i, c)| acc | (((c == '1') as u64) << i));
        cfg(bits, s.len())
    }

    #[test]
    fn bac_dynamics() {
        let net = make_bac(2, Sign::Pos).unwrap();
        assert_eq!(net.step(cfg_str("01")).unwrap(), cfg_str("10"));
        let net = make_bac(3, Sign::Neg).unwrap();
        assert_eq!(net.step(cfg_str("000")).unwrap(), cfg_str("100"));
        assert_eq!(net.step(cfg_str("010")).unwrap(), cfg_str("101"));
        let net = make_bac(1, Sign::Neg).unwrap();
        assert_eq!(net.step(cfg_str("0")).unwrap(), cfg_str("1"));
        assert!(make_bac(0, Sign::Pos).is_err());
    }

    #[test]
    fn bad_dynamics() {
        let net = make_bad(2, 3, Sign::Neg, Sign::Neg, Gate::Or).unwrap();
        assert_eq!(net.n(), 4);
        assert_eq!(net.step(cfg_str("0000")).unwrap(), cfg_str("1000"));
        // F(x) = (¬x1 ∨ ¬x3, x0, x0, x2)
        for bits in 0..16u64 {
            let x = |i: usize| (bits >> i) & 1 == 1;
            let expect = [!x(1) || !x(3), x(0), x(0), x(2)];
            let y = net.step(cfg(bits, 4)).unwrap();
            for (i, e) in expect.iter().enumerate() {
                assert_eq!(y.state(i), *e);
            }
        }
        let net = make_bad(2, 3, Sign::Neg, Sign::Pos, Gate::Or).unwrap();
        for bits in 0..16u64 {
            let x = |i: usize| (bits >> i) & 1 == 1;
            assert_eq!(net.step(cfg(bits, 4)).unwrap().state(0), !x(1) || x(3));
        }
        let net = make_bad(1, 2, Sign::Pos, Sign::Pos, Gate::Or).unwrap();
        for bits in 0..4u64 {
            let y = net.step(cfg(bits, 2)).unwrap();
            assert_eq!(y.state(0), bits & 1 == 1 || bits & 2 == 2);
            assert_eq!(y.state(1), bits & 1 == 1);
        }
    }

    #[test]
    fn structure_inference() {
        let g = infer_structure(&make_bac(3, Sign::Neg).unwrap()).unwrap();
        let arcs: Vec<_> = g.arcs.iter().map(|(&k, &s)| (k, s)).collect();
        assert_eq!(arcs, vec![((0, 1), Sign::Pos), ((1, 2), Sign::Pos), ((2, 0), Sign::Neg)]);
        assert_eq!(g.cycle_sign(&[0, 1, 2]), Some(Sign::Neg));

        let g = infer_structure(&make_bad(2, 3, Sign::Neg, Sign::Pos, Gate::Or).unwrap()).unwrap();
        assert_eq!(g.arcs.len(), 5);
        assert_eq!(g.cycle_sign(&[0, 1]), Some(Sign::Neg));
        assert_eq!(g.cycle_sign(&[0, 2, 3]), Some(Sign::Pos));

        let xor = NetworkSpec::parse_text("table 0110\ncopy 0 +\n").unwrap();
        assert_eq!(
            infer_structure(&xor),
            Err(Error::NonMonotone { automaton: 0, input: 0 })
        );
    }

    #[test]
    fn census_examples() {
        let r = attractor_census(&make_bac(2, Sign::Pos).unwrap()).unwrap();
        assert_eq!(r.omega(), 2);
        assert_eq!(r.period_histogram(), BTreeMap::from([(1, 2), (2, 1)]));

        let r = attractor_census(&make_bac(3, Sign::Neg).unwrap()).unwrap();
        assert_eq!(r.omega(), 6);
        assert_eq!(r.table.a_prim_at(2), &BigInt::from(1));
        assert_eq!(r.table.a_prim_at(6), &BigInt::from(1));
        assert_eq!(r.table.a_at(6), &BigInt::from(2));

        let r = attractor_census(&make_bad(2, 3, Sign::Neg, Sign::Neg, Gate::Or).unwrap()).unwrap();
        assert_eq!(r.omega(), 5);
        assert_eq!(r.attractors.len(), 1);
        assert_eq!(r.table.x_at(5), &BigInt::from(5));
    }

    #[test]
    fn orbit_words() {
        let net = make_bac(1, Sign::Neg).unwrap();
        assert_eq!(orbit_word(&net, cfg(0, 1), 2).unwrap().to_string(), "01");
        assert_eq!(orbit_word(&net, cfg(0, 1), 3), Err(Error::NotRecurrent(0)));

        let net = make_bad(2, 3, Sign::Neg, Sign::Neg, Gate::Or).unwrap();
        let r = attractor_census(&net).unwrap();
        let words: Vec<_> = r.attractors[0]
            .states
            .iter()
            .map(|&s| orbit_word(&net, cfg(s, 4), 5).unwrap())
            .collect();
        let neck = words[0].canonical_rotation();
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, 2).unwrap();
        assert_eq!(enumerate_admissible(5, fam).unwrap().necklaces, vec![neck]);
        assert!(words.iter().all(|w| w.canonical_rotation() == neck));
    }

    #[test]
    fn instabilities() {
        let net = make_bac(1, Sign::Neg).unwrap();
        assert_eq!(local_instabilities(&net, cfg(0, 1)).unwrap(), 1);
        let net = make_bac(3, Sign::Neg).unwrap();
        assert_eq!(local_instabilities(&net, cfg_str("010")).unwrap(), 3);
        let net = make_bac(3, Sign::Pos).unwrap();
        assert_eq!(local_instabilities(&net, cfg_str("111")).unwrap(), 0);
    }

    #[test]
    fn orbit_word_check_examples() {
        let rep = orbit_word_check(&make_bad(2, 3, Sign::Neg, Sign::Neg, Gate::Or).unwrap()).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.rows.len(), 1);
        assert_eq!((rep.rows[0].p, rep.rows[0].measured, rep.rows[0].words), (5, 5, 5));

        let rep = orbit_word_check(&make_bad(3, 4, Sign::Neg, Sign::Pos, Gate::Or).unwrap()).unwrap();
        assert!(rep.holds());

        assert!(orbit_word_check(&make_bad(3, 4, Sign::Pos, Sign::Pos, Gate::Or).unwrap()).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let net = make_bad(2, 3, Sign::Neg, Sign::Pos, Gate::And).unwrap();
        let text = net.to_text();
        assert_eq!(text, "gate AND 1 - 3 +\ncopy 0 +\ncopy 0 +\ncopy 2 +\n");
        let back = NetworkSpec::parse_text(&text).unwrap();
        assert_eq!(back.locals(), net.locals());
        for bits in 0..16 {
            assert_eq!(back.step_bits(bits), net.step_bits(bits));
        }
        assert!(matches!(NetworkSpec::parse_text("copy 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(NetworkSpec::parse_text("table 01\ncopy 0 +\n").is_err());
    }
}
