//! Decides whether a coefficient triple gives a Weil polynomial and
//! enumerates the full candidate box for a given field size.
//!
//! The four coefficient conditions are decided as pure integer
//! comparisons after clearing radicals; the quadratic-surd cubic route
//! ([`associated_cubics`] + [`lemma_cubic_all_real_nonnegative`]) is kept as
//! an algebraically independent cross-check.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Signed;

use crate::exactmath::SurdValue;
use crate::poly::IntPolynomial;
use crate::Error;

/// One symmetric degree-6 candidate over `F_q`, `q = p^n`:
/// `p(t) = t^6 + a1 t^5 + a2 t^4 + a3 t^3 + q a2 t^2 + q^2 a1 t + q^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilCandidate {
    q: u64,
    p: u64,
    n: u32,
    pub a1: i128,
    pub a2: i128,
    pub a3: i128,
}

impl WeilCandidate {
    /// Validates that `q` is a prime power and derives `(p, n)`.
    pub fn new(q: u64, a1: i128, a2: i128, a3: i128) -> Result<Self, Error> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(WeilCandidate { q, p, n, a1, a2, a3 })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The candidate with `a1`, `a3` negated (the substitution `t -> -t`).
    pub fn mirror(&self) -> WeilCandidate {
        WeilCandidate { a1: -self.a1, a3: -self.a3, ..self.clone() }
    }

    /// The full degree-6 polynomial.
    pub fn polynomial(&self) -> IntPolynomial {
        let q = BigInt::from(self.q);
        IntPolynomial::new(vec![
            &q * &q * &q,
            &q * &q * BigInt::from(self.a1),
            &q * BigInt::from(self.a2),
            BigInt::from(self.a3),
            BigInt::from(self.a2),
            BigInt::from(self.a1),
            BigInt::from(1),
        ])
    }
}

/// Factors a prime power: `q = p^n` with `p` prime. Supports `q <= 10^12`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut rest = q;
    let mut n = 0u32;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    if rest == 1 {
        Some((p, n))
    } else {
        None
    }
}

/// Coefficients of a monic cubic, as exact surd values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCoefficients {
    pub r1: SurdValue,
    pub r2: SurdValue,
    pub r3: SurdValue,
}

fn surd(a: i128, b: i128, m: u64) -> SurdValue {
    SurdValue::new(
        BigRational::from(BigInt::from(a)),
        BigRational::from(BigInt::from(b)),
        BigInt::from(m),
    )
}

/// The pair of auxiliary cubics whose all-real-nonnegative-roots property
/// characterizes Weil-ness:
/// `r1 = -6*sqrt(q) - a1`, `r2 = 9q + 4*sqrt(q)*a1 + a2`,
/// `r3 = -2q*sqrt(q) - 2q*a1 - 2*sqrt(q)*a2 - a3`, and the mirrored triple.
pub fn associated_cubics(w: &WeilCandidate) -> (CubicCoefficients, CubicCoefficients) {
    let q = w.q as i128;
    let cubic = |a1: i128, a2: i128, a3: i128| CubicCoefficients {
        r1: surd(-a1, -6, w.q),
        r2: surd(9 * q + a2, 4 * a1, w.q),
        r3: surd(-2 * q * a1 - a3, -2 * q - 2 * a2, w.q),
    };
    (cubic(w.a1, w.a2, w.a3), cubic(-w.a1, w.a2, -w.a3))
}

/// Whether the monic cubic `t^3 + r1 t^2 + r2 t + r3` has all real,
/// non-negative roots. The fractional-power bound on `r3` is decided by
/// squaring: both `|r3 - center|` and the radical bound are non-negative,
/// so the comparison reduces to signs of elements of `Q(sqrt q)`.
pub fn lemma_cubic_all_real_nonnegative(c: &CubicCoefficients) -> bool {
    let r1 = &c.r1;
    let r2 = &c.r2;
    let r3 = &c.r3;
    if r1.sign() > 0 {
        return false;
    }
    if r2.sign() < 0 {
        return false;
    }
    // r2 <= r1^2 / 3  <=>  r1^2 - 3 r2 >= 0
    let three = SurdValue::from_integer(3);
    let e = r1.clone() * r1.clone() - three.clone() * r2.clone();
    if e.sign() < 0 {
        return false;
    }
    if r3.sign() > 0 {
        return false;
    }
    // |r3 - (r1 r2/3 - 2 r1^3/27)| <= (2/27) e^(3/2)
    //   <=>  (27 r3 - 9 r1 r2 + 2 r1^3)^2 <= 4 e^3
    let k27 = SurdValue::from_integer(27);
    let k9 = SurdValue::from_integer(9);
    let k2 = SurdValue::from_integer(2);
    let k4 = SurdValue::from_integer(4);
    let r1cubed = r1.clone() * r1.clone() * r1.clone();
    let lhs_root = k27 * r3.clone() - k9 * r1.clone() * r2.clone() + k2 * r1cubed;
    let lhs = lhs_root.clone() * lhs_root;
    let rhs = k4 * e.clone() * e.clone() * e;
    (lhs - rhs).sign() <= 0
}

/// Detects the special reducible form `(t^2 - q)^2 (t^2 + beta t + q)`:
/// expanding shows its coefficient pattern is exactly
/// `(a1, a2, a3) = (beta, -q, -2 q beta)` with `beta^2 < 4q`.
pub fn special_form_check(w: &WeilCandidate) -> Option<i128> {
    let q = w.q as i128;
    let beta = w.a1;
    if w.a2 != -q || w.a3 != -2 * q * beta {
        return None;
    }
    let sq = beta.checked_mul(beta)?;
    if sq < 4 * q {
        Some(beta)
    } else {
        None
    }
}

/// Whether `p(t)` is a Weil polynomial: the special form, or all four
/// coefficient conditions, decided exactly over the integers.
pub fn theorem1_check(w: &WeilCandidate) -> bool {
    if special_form_check(w).is_some() {
        return true;
    }
    coefficient_conditions(w)
}

/// Conditions 1-4 alone (without the special-form branch).
pub fn coefficient_conditions(w: &WeilCandidate) -> bool {
    match conditions_i128(w.q as i128, w.a1, w.a2, w.a3) {
        Some(v) => v,
        None => conditions_bigint(
            &BigInt::from(w.q),
            &BigInt::from(w.a1),
            &BigInt::from(w.a2),
            &BigInt::from(w.a3),
        ),
    }
}

/// Truth value of each of the four coefficient conditions separately, for
/// diagnostics. `theorem1_check` is the decision path; this exists so a
/// rejection can name the condition that failed.
pub fn condition_report(w: &WeilCandidate) -> [bool; 4] {
    let q = BigInt::from(w.q);
    let a1 = BigInt::from(w.a1);
    let a2 = BigInt::from(w.a2);
    let a3 = BigInt::from(w.a3);
    let a1sq = &a1 * &a1;
    let c1 = a1sq <= 36 * &q;
    let s: BigInt = &a2 + 9 * &q;
    let c2 = !s.is_negative()
        && &s * &s >= 16 * &q * &a1sq
        && 3 * &a2 <= &a1sq + 9 * &q;
    let d: BigInt = &a1sq - 3 * &a2 + 9 * &q;
    let l: BigInt = 27 * &a3 + 2 * &a1sq * &a1 - 9 * &a1 * &a2 - 27 * &q * &a1;
    let c3 = !d.is_negative() && &l * &l <= 4 * &d * &d * &d;
    let t = &a2 + &q;
    let u = &a3 + 2 * &q * &a1;
    let c4 = !t.is_negative() && &u * &u <= 4 * &q * &t * &t;
    [c1, c2, c3, c4]
}

// Radical-free forms of the four conditions:
//   (1) |a1| <= 6 sqrt(q)                 <=>  a1^2 <= 36 q
//   (2) 4 sqrt(q)|a1| - 9q <= a2          <=>  a2 + 9q >= 0  and
//                                              (a2 + 9q)^2 >= 16 q a1^2
//       a2 <= a1^2/3 + 3q                 <=>  3 a2 <= a1^2 + 9q
//   (3) |27 a3 + 2 a1^3 - 9 a1 a2 - 27 q a1| <= 2 (a1^2 - 3 a2 + 9q)^{3/2}
//                                         <=>  L^2 <= 4 D^3
//       (D >= 0 follows from the upper bound in (2))
//   (4) |a3 + 2 q a1| <= 2 sqrt(q)(a2 + q) <=> a2 + q >= 0  and
//                                              (a3 + 2 q a1)^2 <= 4 q (a2+q)^2
// All bounds are closed. p(t) is Weil exactly when the real cubic has
// three real roots in the closed interval [-2 sqrt(q), 2 sqrt(q)]; the
// strict variants would miss boundary cases at square q such as
// (t - sqrt(q))^6, where a root of the real cubic sits exactly at an
// endpoint. Equivalently, the auxiliary cubics must have all roots real
// and >= 0 (the positive orthant is closed). With closed bounds the
// special reducible form also satisfies conditions 1-4 (equality in 4),
// so the form branch is pure routing, not a correctness carve-out.
fn conditions_i128(q: i128, a1: i128, a2: i128, a3: i128) -> Option<bool> {
    let a1sq = a1.checked_mul(a1)?;
    if a1sq > q.checked_mul(36)? {
        return Some(false);
    }
    let s = a2.checked_add(9 * q)?;
    if s < 0 {
        return Some(false);
    }
    if s.checked_mul(s)? < q.checked_mul(16)?.checked_mul(a1sq)? {
        return Some(false);
    }
    if a2.checked_mul(3)? > a1sq.checked_add(9 * q)? {
        return Some(false);
    }
    let d = a1sq.checked_sub(a2.checked_mul(3)?)?.checked_add(9 * q)?;
    let l = a3
        .checked_mul(27)?
        .checked_add(a1sq.checked_mul(a1)?.checked_mul(2)?)?
        .checked_sub(a1.checked_mul(a2)?.checked_mul(9)?)?
        .checked_sub(q.checked_mul(a1)?.checked_mul(27)?)?;
    let d3 = d.checked_mul(d)?.checked_mul(d)?;
    if l.checked_mul(l)? > d3.checked_mul(4)? {
        return Some(false);
    }
    let t = a2.checked_add(q)?;
    if t < 0 {
        return Some(false);
    }
    let u = a3.checked_add(q.checked_mul(a1)?.checked_mul(2)?)?;
    let lhs = u.checked_mul(u)?;
    let rhs = q.checked_mul(4)?.checked_mul(t)?.checked_mul(t)?;
    Some(lhs <= rhs)
}

fn conditions_bigint(q: &BigInt, a1: &BigInt, a2: &BigInt, a3: &BigInt) -> bool {
    let a1sq = a1 * a1;
    if a1sq > 36 * q {
        return false;
    }
    let s: BigInt = a2 + 9 * q;
    if s.is_negative() || &s * &s < 16 * q * &a1sq {
        return false;
    }
    if 3 * a2 > &a1sq + 9 * q {
        return false;
    }
    let d = &a1sq - 3 * a2 + 9 * q;
    let l = 27 * a3 + 2 * &a1sq * a1 - 9 * a1 * a2 - 27 * q * a1;
    if &l * &l > 4 * &d * &d * &d {
        return false;
    }
    let t = a2 + q;
    if t.is_negative() {
        return false;
    }
    let u = a3 + 2 * q * a1;
    &u * &u <= 4 * q * &t * &t
}

/// Scans the tight coefficient box implied by conditions 1-3 (which also
/// contains every special-form triple) and yields, in lexicographic
/// `(a1, a2, a3)` order, exactly the triples passing [`theorem1_check`].
pub fn enumerate_box(q: u64) -> Result<Vec<WeilCandidate>, Error> {
    let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let mut out = Vec::new();
    scan_box(q, 0, |a1, a2, a3| {
        let w = WeilCandidate { q, p, n, a1, a2, a3 };
        if theorem1_check(&w) {
            out.push(w);
        }
    });
    Ok(out)
}

/// `a1` values of the coefficient box (condition 1), widened by `widen`.
pub fn a1_range(q: u64, widen: i128) -> impl Iterator<Item = i128> {
    let qi = q as i128;
    let bound = (36 * qi).sqrt() as i128 + widen;
    (-bound..=bound).filter(move |a1| widen > 0 || a1 * a1 <= 36 * qi)
}

/// `a2` values for a fixed `a1` (condition 2). With `widen > 0` the range
/// is the symmetric `|a2| <= a1^2/3 + 3q + widen` so that the scan
/// provably over-covers the tight box.
pub fn a2_range(q: u64, a1: i128, widen: i128) -> std::ops::RangeInclusive<i128> {
    let qi = q as i128;
    let hi = a1 * a1 / 3 + 3 * qi + widen;
    let lo = if widen == 0 {
        // smallest a2 with (a2 + 9q)^2 >= 16 q a1^2 and a2 + 9q >= 0
        let mut lo = (16 * qi * a1 * a1).sqrt() - 9 * qi - 1;
        while {
            let s = lo + 9 * qi;
            s < 0 || s * s < 16 * qi * a1 * a1
        } {
            lo += 1;
        }
        lo
    } else {
        -hi
    };
    lo..=hi
}

/// The `a3` interval allowed by condition 3 for fixed `(a1, a2)`, widened
/// by `widen`; `None` when the interval is empty.
pub fn a3_interval(q: u64, a1: i128, a2: i128, widen: i128) -> Option<(i128, i128)> {
    let qi = q as i128;
    let d = BigInt::from(a1 * a1 - 3 * a2 + 9 * qi);
    if d.is_negative() {
        return None;
    }
    let m = Roots::sqrt(&(4 * &d * &d * &d));
    let c = BigInt::from(2 * a1 * a1 * a1 - 9 * a1 * a2 - 27 * qi * a1);
    let lo = to_i128(&(div_ceil(&(-&m - &c), 27) - widen))?;
    let hi = to_i128(&(div_floor(&(&m - &c), 27) + widen))?;
    if lo > hi {
        return None;
    }
    Some((lo, hi))
}

/// Visits every integer triple of the coefficient box, widened by
/// `widen` on each bound, in lexicographic order.
pub fn scan_box<F: FnMut(i128, i128, i128)>(q: u64, widen: i128, mut visit: F) {
    for a1 in a1_range(q, widen) {
        for a2 in a2_range(q, a1, widen) {
            let Some((lo, hi)) = a3_interval(q, a1, a2, widen) else {
                continue;
            };
            for a3 in lo..=hi {
                visit(a1, a2, a3);
            }
        }
    }
}

fn to_i128(x: &BigInt) -> Option<i128> {
    num_traits::ToPrimitive::to_i128(x)
}

fn div_floor(a: &BigInt, b: i64) -> BigInt {
    num_integer::Integer::div_floor(a, &BigInt::from(b))
}

fn div_ceil(a: &BigInt, b: i64) -> BigInt {
    -num_integer::Integer::div_floor(&(-a), &BigInt::from(b))
}
