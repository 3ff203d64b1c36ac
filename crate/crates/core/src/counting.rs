//! Closed-form period counts for the five network types and the bounds on
//! attractor numbers that follow from them.
//!
//! Bounds that involve irrational bases are decided by comparing exact
//! integers: either raising both sides to a clearing power, or bracketing
//! each `a^q` between integer roots at a growing binary scale.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::ban::{AttractorReport, NetworkTag, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, lucas, necklace_count, perrin, pow2, totient, DivisorFunction, PeriodTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NetworkType {
    PosBac,
    NegBac,
    PosBad,
    MixedBad,
    NegBad,
}

impl NetworkType {
    pub fn name(&self) -> &'static str {
        match self {
            NetworkType::PosBac => "pos-bac",
            NetworkType::NegBac => "neg-bac",
            NetworkType::PosBad => "pos-bad",
            NetworkType::MixedBad => "mixed-bad",
            NetworkType::NegBad => "neg-bad",
        }
    }

    pub fn is_bad(&self) -> bool {
        matches!(self, NetworkType::PosBad | NetworkType::MixedBad | NetworkType::NegBad)
    }
}

/// Network type with its size parameters. For mixed double-cycles `l` is
/// always the negative cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeParams {
    pub kind: NetworkType,
    /// Cycle length for BACs, `ℓ` for BADs.
    pub l: usize,
    /// Unused (0) for BACs.
    pub r: usize,
}

impl TypeParams {
    pub fn bac(sign: Sign, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero);
        }
        let kind = match sign {
            Sign::Pos => NetworkType::PosBac,
            Sign::Neg => NetworkType::NegBac,
        };
        Ok(TypeParams { kind, l: n, r: 0 })
    }

    pub fn bad(kind: NetworkType, l: usize, r: usize) -> Result<Self> {
        if !kind.is_bad() {
            return Err(Error::Invalid(format!("{} is not a double-cycle type", kind.name())));
        }
        if l == 0 || r == 0 {
            return Err(Error::Zero);
        }
        Ok(TypeParams { kind, l, r })
    }

    /// Type of a tagged network; a mixed double-cycle with a negative right
    /// cycle is described with its cycles swapped.
    pub fn from_tag(tag: &NetworkTag) -> Result<Self> {
        match *tag {
            NetworkTag::Bac { n, sign } => TypeParams::bac(sign, n),
            NetworkTag::Bad { l, r, sl, sr, .. } => match (sl, sr) {
                (Sign::Pos, Sign::Pos) => TypeParams::bad(NetworkType::PosBad, l, r),
                (Sign::Neg, Sign::Pos) => TypeParams::bad(NetworkType::MixedBad, l, r),
                (Sign::Pos, Sign::Neg) => TypeParams::bad(NetworkType::MixedBad, r, l),
                (Sign::Neg, Sign::Neg) => TypeParams::bad(NetworkType::NegBad, l, r),
            },
            NetworkTag::Generic => Err(Error::Invalid("generic networks have no closed form".into())),
        }
    }

    pub fn n(&self) -> usize {
        if self.kind.is_bad() {
            self.l + self.r - 1
        } else {
            self.l
        }
    }

    /// `Δ = gcd(ω, ℓ)` for double-cycles, 1 for cycles.
    pub fn delta(&self) -> u64 {
        if self.kind.is_bad() {
            closed_form_omega(self).gcd(&(self.l as u64))
        } else {
            1
        }
    }

    /// `K = ω / Δ`.
    pub fn k(&self) -> u64 {
        closed_form_omega(self) / self.delta()
    }

    /// `Δ_p = gcd(p, Δ)`.
    pub fn delta_p(&self, p: u64) -> u64 {
        p.gcd(&self.delta())
    }

    /// `K_p = p / Δ_p`.
    pub fn k_p(&self, p: u64) -> u64 {
        p / self.delta_p(p)
    }
}

impl fmt::Display for TypeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_bad() {
            write!(f, "{}({},{})", self.kind.name(), self.l, self.r)
        } else {
            write!(f, "{}({})", self.kind.name(), self.l)
        }
    }
}

/// The order `ω` predicted by the closed forms.
///
/// For negative double-cycles the candidate `ℓ + r` is halved when its own
/// `K = (ℓ+r)/gcd(ℓ+r, ℓ)` equals 4.
pub fn closed_form_omega(tp: &TypeParams) -> u64 {
    let (l, r) = (tp.l as u64, tp.r as u64);
    match tp.kind {
        NetworkType::PosBac => l,
        NetworkType::NegBac => 2 * l,
        NetworkType::PosBad => l.gcd(&r),
        NetworkType::MixedBad => r,
        NetworkType::NegBad => {
            let cand = l + r;
            if cand / cand.gcd(&l) == 4 {
                cand / 2
            } else {
                cand
            }
        }
    }
}

/// Closed-form `X(p)`, the number of configurations fixed by `F^p`.
pub fn closed_form_x(tp: &TypeParams, p: u64) -> Result<BigInt> {
    let omega = closed_form_omega(tp);
    if p == 0 || omega % p != 0 {
        return Err(Error::NotADivisor { p, n: omega });
    }
    let (dp, kp) = (tp.delta_p(p), tp.k_p(p));
    Ok(match tp.kind {
        NetworkType::PosBac | NetworkType::PosBad => pow2(p),
        NetworkType::NegBac => {
            if tp.l as u64 % p == 0 {
                BigInt::zero()
            } else {
                // p | 2n and p ∤ n force p even.
                pow2(p / 2)
            }
        }
        NetworkType::MixedBad => {
            if tp.delta() % p == 0 {
                BigInt::zero()
            } else {
                num_traits::pow(lucas(kp as usize), dp as usize)
            }
        }
        NetworkType::NegBad => num_traits::pow(perrin(kp as usize), dp as usize),
    })
}

/// `X`, `X̃`, `Ã`, `A` from the closed forms alone.
pub fn census_from_closed_form(tp: &TypeParams) -> Result<PeriodTable> {
    let omega = closed_form_omega(tp);
    let mut x = DivisorFunction::zero(omega)?;
    for p in divisors(omega)? {
        x.set(p, closed_form_x(tp, p)?)?;
    }
    PeriodTable::from_x(x)
}

/// `(Δ, K)` pairs where attractor counts escape the factor-two bound:
/// `K ∈ {1, 4}` and `(Δ, K) ∈ {(1,6), (1,10), (2,6)}`.
pub fn is_excluded_pair(delta: u64, k: u64) -> bool {
    k <= 1 || k == 4 || matches!((delta, k), (1, 6) | (1, 10) | (2, 6))
}

/// The three negative double-cycles, up to swapping cycles, known to break
/// the factor-two bound.
pub const NEG_BAD_EXCEPTIONS: [(usize, usize); 3] = [(1, 9), (3, 7), (2, 10)];

pub fn is_listed_exception(tp: &TypeParams) -> bool {
    tp.kind == NetworkType::NegBad
        && NEG_BAD_EXCEPTIONS
            .iter()
            .any(|&(a, b)| (tp.l, tp.r) == (a, b) || (tp.l, tp.r) == (b, a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub omega: u64,
    /// `X(ω) ≤ ω·A(ω)`.
    pub lower_ok: bool,
    /// `A(ω) ≤ 2·Ã(ω)`.
    pub upper_ok: bool,
    pub x_omega: BigInt,
    pub a_omega: BigInt,
    pub a_prim_omega: BigInt,
    pub exception_flag: bool,
}

impl BoundVerdict {
    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

/// Checks `X(ω)/ω ≤ A(ω) ≤ 2·Ã(ω)` on a census table.
pub fn attractor_bound_verdict(table: &PeriodTable, tp: &TypeParams) -> BoundVerdict {
    let omega = table.omega;
    let x = table.x_at(omega).clone();
    let a = table.a_at(omega).clone();
    let at = table.a_prim_at(omega).clone();
    BoundVerdict {
        omega,
        lower_ok: x <= &a * BigInt::from(omega),
        upper_ok: a <= &at * 2,
        x_omega: x,
        a_omega: a,
        a_prim_omega: at,
        exception_flag: is_listed_exception(tp),
    }
}

/// The base `a` with `X(p) ≤ a^p`, always of the form `radicand^(1/root)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthBase {
    Two,
    Sqrt2,
    Sqrt3,
    Cbrt3,
}

impl GrowthBase {
    /// `(root, radicand)`.
    pub fn parts(&self) -> (u32, u64) {
        match self {
            GrowthBase::Two => (1, 2),
            GrowthBase::Sqrt2 => (2, 2),
            GrowthBase::Sqrt3 => (2, 3),
            GrowthBase::Cbrt3 => (3, 3),
        }
    }

    pub fn value(&self) -> f64 {
        let (k, r) = self.parts();
        (r as f64).powf(1.0 / k as f64)
    }
}

/// Base used for the attractor-count bound of each type.
pub fn growth_base(tp: &TypeParams) -> GrowthBase {
    match tp.kind {
        NetworkType::PosBac | NetworkType::PosBad => GrowthBase::Two,
        NetworkType::MixedBad => GrowthBase::Sqrt3,
        NetworkType::NegBac => GrowthBase::Sqrt2,
        NetworkType::NegBad => {
            if tp.k() % 3 == 0 {
                GrowthBase::Cbrt3
            } else {
                GrowthBase::Sqrt2
            }
        }
    }
}

/// Outcome of `A(ω) ≤ (φ ⋆ Y)(ω)/ω` with `Y(q) = a^q`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthBoundCheck {
    pub base: GrowthBase,
    pub omega: u64,
    pub measured: BigInt,
    /// Float approximation of the bound, for display only.
    pub bound_approx: f64,
    pub holds: bool,
}

/// `floor` and `ceil` of `a^q · 2^s`.
fn bracket_power(base: GrowthBase, q: u64, s: u64) -> (BigUint, BigUint) {
    let (k, r) = base.parts();
    let radicand = num_traits::pow(BigUint::from(r), q as usize) << (s * k as u64);
    let lo = radicand.nth_root(k);
    let hi = if num_traits::pow(lo.clone(), k as usize) == radicand {
        lo.clone()
    } else {
        &lo + 1u32
    };
    (lo, hi)
}

/// Exact decision of `measured ≤ (φ ⋆ a^·)(ω) / ω`.
pub fn growth_bound_check(base: GrowthBase, omega: u64, measured: &BigInt) -> Result<GrowthBoundCheck> {
    let divs = divisors(omega)?;
    let bound_approx = divs
        .iter()
        .map(|&q| totient(omega / q).expect("positive") as f64 * base.value().powf(q as f64))
        .sum::<f64>()
        / omega as f64;
    let holds = if measured.sign() == num_bigint::Sign::Minus {
        true
    } else {
        let lhs0 = measured.magnitude() * BigUint::from(omega);
        let mut s = 8u64;
        loop {
            let (mut lo, mut hi) = (BigUint::zero(), BigUint::zero());
            for &q in &divs {
                let phi = BigUint::from(totient(omega / q)?);
                let (a, b) = bracket_power(base, q, s);
                lo += &phi * a;
                hi += &phi * b;
            }
            let lhs = &lhs0 << s;
            if lhs <= lo {
                break true;
            }
            if lhs > hi {
                break false;
            }
            if s > 1 << 14 {
                return Err(Error::Invalid(format!("bound at omega = {omega} is undecidable at scale 2^{s}")));
            }
            s *= 2;
        }
    };
    Ok(GrowthBoundCheck {
        base,
        omega,
        measured: measured.clone(),
        bound_approx,
        holds,
    })
}

/// Attractor-count bound for a census of a network of the given type.
pub fn growth_bound(tp: &TypeParams, table: &PeriodTable) -> Result<GrowthBoundCheck> {
    growth_bound_check(growth_base(tp), table.omega, table.a_at(table.omega))
}

/// `2·A⁻(ω) ≤ A⁺(ω)` for a negative cycle, `A⁺` being the positive-cycle count at `ω`.
pub fn negative_cycle_half_bound(a_negative: &BigInt, omega: u64) -> Result<bool> {
    Ok(a_negative * 2 <= necklace_count(omega)?)
}

pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;
pub const PLASTIC_NUMBER: f64 = 1.324_717_957_244_746;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodGrowthBound {
    pub p: u64,
    pub k_p: u64,
    pub delta_p: u64,
    pub x: BigInt,
    /// Growth rate of `X(p)^(1/p)` as `p` grows.
    pub asymptotic_base: f64,
    pub upper: GrowthBase,
    /// `X(p) ≤ upper^p`, decided exactly.
    pub holds: bool,
}

/// Bound on the period-`p` configuration count of a mixed or negative double-cycle.
pub fn period_growth_bound(tp: &TypeParams, p: u64) -> Result<PeriodGrowthBound> {
    let (kp, dp) = (tp.k_p(p), tp.delta_p(p));
    let x = closed_form_x(tp, p)?;
    let (asymptotic_base, upper) = match tp.kind {
        NetworkType::MixedBad => (GOLDEN_RATIO, GrowthBase::Sqrt3),
        NetworkType::NegBad if kp == 3 => (PLASTIC_NUMBER, GrowthBase::Cbrt3),
        NetworkType::NegBad => (PLASTIC_NUMBER, GrowthBase::Sqrt2),
        _ => return Err(Error::Invalid(format!("{} has no period bound of this kind", tp.kind.name()))),
    };
    let (k, r) = upper.parts();
    let holds = num_traits::pow(x.clone(), k as usize) <= num_traits::pow(BigInt::from(r), p as usize);
    Ok(PeriodGrowthBound {
        p,
        k_p: kp,
        delta_p: dp,
        x,
        asymptotic_base,
        upper,
        holds,
    })
}

/// One factorisation `p = K_p·Δ_p` in the exhaustive bound sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodBoundRow {
    pub p: u64,
    pub k_p: u64,
    pub delta_p: u64,
    /// `L(K_p)^(2Δ_p) ≤ 3^p`.
    pub lucas_ok: bool,
    /// `P(K_p)^(2Δ_p) ≤ 2^p` when `K_p ≠ 3`, `P(3)^(3Δ_p) = 3^p` otherwise.
    pub perrin_ok: bool,
}

pub fn period_bound_sweep(max_p: u64) -> Vec<PeriodBoundRow> {
    let mut rows = Vec::new();
    for p in 1..=max_p {
        for kp in divisors(p).expect("p >= 1") {
            let dp = p / kp;
            let three_p = num_traits::pow(BigInt::from(3), p as usize);
            let lucas_ok = num_traits::pow(lucas(kp as usize), 2 * dp as usize) <= three_p;
            let perrin_ok = if kp == 3 {
                num_traits::pow(perrin(3), 3 * dp as usize) == three_p
            } else {
                num_traits::pow(perrin(kp as usize), 2 * dp as usize) <= pow2(p)
            };
            rows.push(PeriodBoundRow {
                p,
                k_p: kp,
                delta_p: dp,
                lucas_ok,
                perrin_ok,
            });
        }
    }
    rows
}

/// One line of the closed-form versus census comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub instance: String,
    pub p: u64,
    pub closed_form: BigInt,
    pub measured: BigInt,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub params: TypeParams,
    pub omega_closed: u64,
    pub omega_measured: u64,
    pub rows: Vec<CrosscheckRow>,
}

impl Crosscheck {
    pub fn all_match(&self) -> bool {
        self.omega_closed == self.omega_measured && self.rows.iter().all(|r| r.matches)
    }
}

/// Compares closed-form `X(p)` with the census on every divisor of the closed-form order.
pub fn crosscheck(tp: &TypeParams, report: &AttractorReport) -> Result<Crosscheck> {
    let omega_closed = closed_form_omega(tp);
    let mut rows = Vec::new();
    for p in divisors(omega_closed)? {
        let closed = closed_form_x(tp, p)?;
        let measured = BigInt::from(report.fixed_points(p));
        rows.push(CrosscheckRow {
            instance: tp.to_string(),
            p,
            matches: closed == measured,
            closed_form: closed,
            measured,
        });
    }
    Ok(Crosscheck {
        params: *tp,
        omega_closed,
        omega_measured: report.omega(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bad(kind: NetworkType, l: usize, r: usize) -> TypeParams {
        TypeParams::bad(kind, l, r).unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(closed_form_omega(&TypeParams::bac(Sign::Neg, 3).unwrap()), 6);
        assert_eq!(closed_form_omega(&bad(NetworkType::NegBad, 2, 3)), 5);
        assert_eq!(closed_form_omega(&bad(NetworkType::NegBad, 2, 6)), 4);
        assert_eq!(closed_form_omega(&bad(NetworkType::PosBad, 4, 6)), 2);
        assert_eq!(closed_form_omega(&bad(NetworkType::MixedBad, 2, 3)), 3);
    }

    #[test]
    fn x_examples() {
        let t = TypeParams::bac(Sign::Neg, 3).unwrap();
        assert_eq!(closed_form_x(&t, 6).unwrap(), BigInt::from(8));
        assert_eq!(closed_form_x(&t, 3).unwrap(), BigInt::from(0));
        assert_eq!(closed_form_x(&bad(NetworkType::MixedBad, 2, 3), 3).unwrap(), BigInt::from(4));
        assert_eq!(closed_form_x(&bad(NetworkType::NegBad, 2, 3), 5).unwrap(), BigInt::from(5));
        assert!(closed_form_x(&bad(NetworkType::NegBad, 2, 3), 2).is_err());
    }

    #[test]
    fn closed_form_tables() {
        let t = census_from_closed_form(&TypeParams::bac(Sign::Pos, 4).unwrap()).unwrap();
        let a: Vec<i64> = [1, 2, 4].iter().map(|&p| t.a_prim_at(p).try_into().unwrap()).collect();
        assert_eq!(a, vec![2, 1, 3]);
        assert_eq!(t.a_at(4), &BigInt::from(6));

        let t = census_from_closed_form(&TypeParams::bac(Sign::Neg, 3).unwrap()).unwrap();
        assert_eq!(t.a_prim_at(2), &BigInt::from(1));
        assert_eq!(t.a_prim_at(6), &BigInt::from(1));
        assert_eq!(t.a_at(6), &BigInt::from(2));

        let t = census_from_closed_form(&bad(NetworkType::NegBad, 2, 3)).unwrap();
        assert_eq!(t.a_prim_at(5), &BigInt::from(1));
        assert_eq!(t.a_at(5), &BigInt::from(1));
    }

    #[test]
    fn attractor_bound_examples() {
        let tp = TypeParams::bac(Sign::Pos, 6).unwrap();
        let v = attractor_bound_verdict(&census_from_closed_form(&tp).unwrap(), &tp);
        assert!(v.holds());
        assert_eq!((v.a_omega.clone(), v.a_prim_omega.clone()), (BigInt::from(14), BigInt::from(9)));

        let tp = bad(NetworkType::NegBad, 1, 9);
        let v = attractor_bound_verdict(&census_from_closed_form(&tp).unwrap(), &tp);
        assert!(v.exception_flag);
        assert!(!v.upper_ok);

        let tp = TypeParams::bac(Sign::Neg, 3).unwrap();
        let v = attractor_bound_verdict(&census_from_closed_form(&tp).unwrap(), &tp);
        assert!(v.holds());
        assert_eq!(v.a_omega, &v.a_prim_omega * 2);
    }

    #[test]
    fn listed_exceptions_are_the_small_delta_pairs() {
        for l in 1..40 {
            for r in 1..40 {
                let tp = bad(NetworkType::NegBad, l, r);
                let (d, k) = (tp.delta(), tp.k());
                let by_pair = (k == 10 && d == 1) || (k == 6 && d == 2);
                assert_eq!(is_listed_exception(&tp), by_pair, "({l},{r})");
            }
        }
    }

    #[test]
    fn period_bounds() {
        let tp = bad(NetworkType::NegBad, 3, 6);
        let b = period_growth_bound(&tp, 9).unwrap();
        assert_eq!((b.k_p, b.delta_p), (3, 3));
        assert_eq!(b.x, BigInt::from(27));
        assert!(b.holds);
        assert!(period_growth_bound(&TypeParams::bac(Sign::Pos, 3).unwrap(), 3).is_err());
        assert!(period_bound_sweep(40).iter().all(|r| r.lucas_ok && r.perrin_ok));
    }

    #[test]
    fn growth_bound_examples() {
        let c = growth_bound_check(GrowthBase::Two, 6, &BigInt::from(14)).unwrap();
        assert!(c.holds);
        assert!(!growth_bound_check(GrowthBase::Two, 6, &BigInt::from(15)).unwrap().holds);
        // (φ ⋆ √2^·)(8)/8 = (4·√2 + 2·2 + 4 + 16)/8 ≈ 3.707
        assert!(growth_bound_check(GrowthBase::Sqrt2, 8, &BigInt::from(3)).unwrap().holds);
        assert!(!growth_bound_check(GrowthBase::Sqrt2, 8, &BigInt::from(4)).unwrap().holds);
        // (3^(1/3)·2 + 3)/3 ≈ 1.9615 at ω = 3
        assert!(growth_bound_check(GrowthBase::Cbrt3, 3, &BigInt::from(1)).unwrap().holds);
        assert!(!growth_bound_check(GrowthBase::Cbrt3, 3, &BigInt::from(2)).unwrap().holds);
    }

    #[test]
    fn bracket_is_tight() {
        for q in 1..20 {
            let (lo, hi) = bracket_power(GrowthBase::Sqrt3, q, 10);
            let v = 3f64.powf(q as f64 / 2.0) * 1024.0;
            assert!(lo.to_string().parse::<f64>().unwrap() <= v);
            assert!(hi.to_string().parse::<f64>().unwrap() >= v);
        }
    }
}
