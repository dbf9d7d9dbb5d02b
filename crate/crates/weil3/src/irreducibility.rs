//! Irreducibility of the degree-6 candidate over the rationals, decided
//! through its real Weil cubic, plus the Cardan quantities of that cubic.
//!
//! For a monic cubic with integer coefficients, reducible over Q means an
//! integer root, so the whole decision reduces to a finite divisor trial.
//! The cube-in-a-quadratic-field criterion is equivalent and is exposed
//! here only through [`CardanData`] for cross-checking, never as a
//! decision path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::integer_kth_root;
use crate::poly::IntPolynomial;
use crate::weilcheck::{special_form_check, WeilCandidate};

/// Cardan data of the depressed real Weil cubic `h(t) = t^3 + r t + s`,
/// with `delta = s^2 + (4/27) r^3` and `u = (-s + sqrt(delta)) / 2`.
///
/// All real roots forces `delta <= 0`; `delta = 0` exactly when the cubic
/// has a repeated (hence rational) root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardanData {
    pub r: BigRational,
    pub s: BigRational,
    pub delta: BigRational,
}

impl CardanData {
    /// `u` as (rational part, radicand): `(-s/2, delta)`.
    pub fn u_description(&self) -> (BigRational, BigRational) {
        (-&self.s / BigRational::from(BigInt::from(2)), self.delta.clone())
    }

    /// `u * conj(u) = ((-s/2)^2 - delta/4)`, which equals `(-r/3)^3`.
    pub fn norm_identity_holds(&self) -> bool {
        let two = BigRational::from(BigInt::from(2));
        let three = BigRational::from(BigInt::from(3));
        let four = BigRational::from(BigInt::from(4));
        let half_s = &self.s / &two;
        let lhs = &half_s * &half_s - &self.delta / &four;
        let r3 = -&self.r / &three;
        let rhs = &r3 * &r3 * &r3;
        lhs == rhs
    }
}

/// The real Weil cubic `f(t) = t^3 + a1 t^2 + (a2 - 3q) t + (a3 - 2q a1)`,
/// whose roots are the `x_i` with `p(t) = prod (t^2 + x_i t + q)`.
pub fn real_weil_cubic(w: &WeilCandidate) -> IntPolynomial {
    let q = w.q() as i128;
    IntPolynomial::from_i128(&[w.a3 - 2 * q * w.a1, w.a2 - 3 * q, w.a1, 1])
}

/// Exact `r`, `s`, `delta` for the depressed cubic `h` with
/// `f(t) = h(t + a1/3)`.
pub fn cardan_quantities(w: &WeilCandidate) -> CardanData {
    let rat = |x: i128| BigRational::from(BigInt::from(x));
    let q = rat(w.q() as i128);
    let a1 = rat(w.a1);
    let a2 = rat(w.a2);
    let a3 = rat(w.a3);
    let three = rat(3);
    let r = -&a1 * &a1 / &three + &a2 - &three * &q;
    let s = rat(2) * &a1 * &a1 * &a1 / rat(27) - &a1 * &a2 / &three - &q * &a1 + &a3;
    let delta = &s * &s + rat(4) / rat(27) * &r * &r * &r;
    CardanData { r, s, delta }
}

/// All distinct integer roots of a monic integer polynomial, by trial
/// over the divisors of the constant term (and 0 when it vanishes).
/// Trial order: ascending absolute value, positive before negative.
pub fn integer_roots(f: &IntPolynomial) -> Vec<BigInt> {
    assert!(f.is_monic(), "integer root trial requires a monic polynomial");
    let mut roots = Vec::new();
    // strip t^k
    let coeffs = f.coefficients();
    let offset = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if offset > 0 {
        roots.push(BigInt::zero());
    }
    let reduced = IntPolynomial::new(coeffs[offset..].to_vec());
    let c0 = reduced.constant_term().abs();
    if reduced.degree() == 0 {
        return roots;
    }
    let mut d = BigInt::one();
    let mut small = Vec::new();
    let mut large = Vec::new();
    while &d * &d <= c0 {
        if (&c0 % &d).is_zero() {
            small.push(d.clone());
            let cof = &c0 / &d;
            if cof != d {
                large.push(cof);
            }
        }
        d += 1;
    }
    large.reverse();
    for d in small.into_iter().chain(large) {
        if reduced.eval(&d).is_zero() {
            roots.push(d.clone());
        }
        let neg = -d;
        if reduced.eval(&neg).is_zero() {
            roots.push(neg);
        }
    }
    roots
}

/// Whether `p(t)` is irreducible over Q.
///
/// The special form factors visibly; for square `q` the linear factors
/// `t -+ sqrt(q)` get an explicit divisibility pre-check; otherwise the
/// candidate is irreducible exactly when its real Weil cubic has no
/// integer root.
pub fn is_irreducible(w: &WeilCandidate) -> bool {
    if special_form_check(w).is_some() {
        return false;
    }
    if let Some(root) = integer_kth_root(&BigInt::from(w.q()), 2) {
        let p = w.polynomial();
        if p.eval(&root).is_zero() || p.eval(&(-root)).is_zero() {
            return false;
        }
    }
    integer_roots(&real_weil_cubic(w)).is_empty()
}
