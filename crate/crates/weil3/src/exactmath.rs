//! Exact arithmetic substrate: quadratic surds, rational polynomials,
//! Sturm chains and integer k-th roots.
//!
//! No classification decision in this crate depends on floating point;
//! every comparison involving a radical goes through [`surd_sign`], which
//! decides the sign of `a + b*sqrt(m)` by squaring with sign analysis.
//!
//! Sturm counting internally rescales everything to integers and runs a
//! fraction-free chain in `i128`, falling back to `BigInt` when any
//! intermediate value would overflow. Both paths are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Exact element `a + b*sqrt(m)` with rational `a`, `b` and positive
/// integer `m`. If `m` is a perfect square the radical is folded into the
/// rational part on construction, so `b != 0` implies `m` is non-square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdValue {
    a: BigRational,
    b: BigRational,
    m: BigInt,
}

impl SurdValue {
    /// `a + b*sqrt(m)`, normalized. Panics if `m <= 0`.
    pub fn new(a: BigRational, b: BigRational, m: BigInt) -> Self {
        assert!(m.is_positive(), "radicand must be positive");
        if b.is_zero() {
            return SurdValue { a, b, m: BigInt::one() };
        }
        if let Some(r) = integer_kth_root(&m, 2) {
            let folded = a + &b * BigRational::from(r);
            return SurdValue { a: folded, b: BigRational::zero(), m: BigInt::one() };
        }
        SurdValue { a, b, m }
    }

    pub fn from_rational(a: BigRational) -> Self {
        SurdValue { a, b: BigRational::zero(), m: BigInt::one() }
    }

    pub fn from_integer(a: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(a)))
    }

    /// `b*sqrt(m)` for integer `b`.
    pub fn sqrt_times(b: i64, m: u64) -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::from(BigInt::from(b)),
            BigInt::from(m),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_coefficient(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn sign(&self) -> i8 {
        surd_sign(self)
    }

    /// Exact ordering of two surds. Both values must be rational or share
    /// the same radicand; comparing unrelated radicals is out of scope.
    pub fn cmp_real(&self, other: &SurdValue) -> std::cmp::Ordering {
        let diff = self.clone() - other.clone();
        match diff.sign() {
            -1 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let m = self.m.to_f64().unwrap_or(f64::NAN);
        a + b * m.sqrt()
    }

    fn common_radicand(&self, other: &SurdValue) -> BigInt {
        if self.b.is_zero() {
            return other.m.clone();
        }
        if other.b.is_zero() {
            return self.m.clone();
        }
        assert_eq!(self.m, other.m, "incompatible radicands");
        self.m.clone()
    }
}

impl std::ops::Add for SurdValue {
    type Output = SurdValue;
    fn add(self, rhs: SurdValue) -> SurdValue {
        let m = self.common_radicand(&rhs);
        SurdValue::new(self.a + rhs.a, self.b + rhs.b, m)
    }
}

impl std::ops::Sub for SurdValue {
    type Output = SurdValue;
    fn sub(self, rhs: SurdValue) -> SurdValue {
        let m = self.common_radicand(&rhs);
        SurdValue::new(self.a - rhs.a, self.b - rhs.b, m)
    }
}

impl std::ops::Mul for SurdValue {
    type Output = SurdValue;
    fn mul(self, rhs: SurdValue) -> SurdValue {
        let m = self.common_radicand(&rhs);
        let mr = BigRational::from(m.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * mr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        SurdValue::new(a, b, m)
    }
}

impl std::ops::Neg for SurdValue {
    type Output = SurdValue;
    fn neg(self) -> SurdValue {
        SurdValue { a: -self.a, b: -self.b, m: self.m }
    }
}

/// Exact sign of `a + b*sqrt(m)`.
///
/// When `a` and `b` disagree in sign the radical is isolated and both
/// sides are squared, so the verdict never touches floating point.
pub fn surd_sign(v: &SurdValue) -> i8 {
    let sa = rational_sign(&v.a);
    let sb = rational_sign(&v.b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    // opposite signs: compare a^2 with b^2 m
    let lhs = &v.a * &v.a;
    let rhs = &v.b * &v.b * BigRational::from(v.m.clone());
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => sb,
    }
}

fn rational_sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Dense univariate polynomial with exact rational coefficients,
/// ascending degree order, leading coefficient nonzero unless zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> RationalPolynomial {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_surd(&self, x: &SurdValue) -> SurdValue {
        let mut acc = SurdValue::from_integer(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + SurdValue::from_rational(c.clone());
        }
        acc
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        let lead = divisor.coeffs.last().unwrap();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dlen - 1] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dlen - 1);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd with `other` (1 for coprime inputs, 0 only if both zero).
    pub fn gcd(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.leading().cloned() {
            a = Self::new(a.coeffs.into_iter().map(|c| c / &lead).collect());
        }
        a
    }

    /// `self / gcd(self, self')`, normalized monic; same distinct roots.
    pub fn squarefree_part(&self) -> RationalPolynomial {
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        let lead = q.leading().cloned().unwrap();
        Self::new(q.coeffs.into_iter().map(|c| c / &lead).collect())
    }

    /// Clears denominators: primitive integer coefficients with the same
    /// roots and the same leading sign.
    pub fn to_primitive_integers(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in &mut ints {
                *c = &*c / &content;
            }
        }
        ints
    }
}

/// Number of distinct real roots of squarefree `f` in the half-open
/// interval `(lo, hi]`, by exact Sturm-chain sign variations.
///
/// Rejects non-squarefree input (the chain's final element having positive
/// degree signals a caller bug) and reversed intervals.
pub fn sturm_count(
    f: &RationalPolynomial,
    lo: &SurdValue,
    hi: &SurdValue,
) -> Result<usize, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo.cmp_real(hi) != std::cmp::Ordering::Less {
        return Err(Error::EmptyInterval);
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    let ints = f.to_primitive_integers();
    let plo = surd_point_bigint(lo);
    let phi = surd_point_bigint(hi);

    // i128 fast path; overflow falls back to BigInt.
    if let (Some(fi), Some(lo_i), Some(hi_i)) = (
        ints.iter().map(|c| c.to_i128()).collect::<Option<Vec<_>>>(),
        surd_point_i128(&plo),
        surd_point_i128(&phi),
    ) {
        if let Some(res) = chain::count_in_interval::<i128>(&fi, &lo_i, &hi_i) {
            return res.map_err(|_| Error::NotSquarefree);
        }
    }
    chain::count_in_interval::<BigInt>(&ints, &plo, &phi)
        .expect("BigInt arithmetic cannot overflow")
        .map_err(|_| Error::NotSquarefree)
}

fn surd_point_bigint(v: &SurdValue) -> chain::SurdPoint<BigInt> {
    let da = v.a.denom().clone();
    let db = v.b.denom().clone();
    let den = da.lcm(&db);
    chain::SurdPoint {
        a: v.a.numer() * (&den / v.a.denom()),
        b: v.b.numer() * (&den / v.b.denom()),
        den,
        m: v.m.clone(),
    }
}

fn surd_point_i128(p: &chain::SurdPoint<BigInt>) -> Option<chain::SurdPoint<i128>> {
    Some(chain::SurdPoint {
        a: p.a.to_i128()?,
        b: p.b.to_i128()?,
        den: p.den.to_i128()?,
        m: p.m.to_i128()?,
    })
}

/// Exact integer k-th root: `r` with `r^k == x`, if one exists.
pub fn integer_kth_root(x: &BigInt, k: u32) -> Option<BigInt> {
    assert!(k > 0, "root order must be positive");
    if x.is_negative() {
        return None;
    }
    let r = num_integer::Roots::nth_root(x, k);
    if num_traits::Pow::pow(&r, k) == *x {
        Some(r)
    } else {
        None
    }
}

/// Fraction-free Sturm machinery, generic over the integer type so the
/// same algorithm runs in `i128` (hot path, checked arithmetic) and in
/// `BigInt` (fallback). `None` anywhere means overflow: retry wider.
pub(crate) mod chain {
    use num_integer::Integer;
    use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

    pub(crate) trait ChainInt:
        Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Clone
    {
    }
    impl<T: Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Clone> ChainInt for T {}

    /// Evaluation point `(a + b*sqrt(m)) / den`, `den > 0`.
    pub(crate) struct SurdPoint<T> {
        pub a: T,
        pub b: T,
        pub den: T,
        pub m: T,
    }

    fn trim<T: Zero>(v: &mut Vec<T>) {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    }

    fn derivative<T: ChainInt>(f: &[T]) -> Option<Vec<T>> {
        let mut out = Vec::with_capacity(f.len().saturating_sub(1));
        for (i, c) in f.iter().enumerate().skip(1) {
            let mut acc = T::zero();
            // c * i by repeated addition is fine: i <= 6 in practice,
            // but stay general with a checked doubling loop.
            let mut k = i;
            let mut base = c.clone();
            while k > 0 {
                if k & 1 == 1 {
                    acc = acc.checked_add(&base)?;
                }
                k >>= 1;
                if k > 0 {
                    base = base.checked_add(&base.clone())?;
                }
            }
            out.push(acc);
        }
        trim(&mut out);
        Some(out)
    }

    fn divide_out_content<T: ChainInt>(v: &mut [T]) {
        let mut content = T::zero();
        for c in v.iter() {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in v.iter_mut() {
                *c = c.clone() / content.clone();
            }
        }
    }

    /// Pseudo-remainder of `a` by `b`, plus whether the implied scale
    /// factor (a power of `lc(b)`) is negative.
    fn pseudo_rem<T: ChainInt>(a: &[T], b: &[T]) -> Option<(Vec<T>, bool)> {
        let lb = b.last().expect("divisor is nonzero").clone();
        let mut r = a.to_vec();
        let mut scale_negative = false;
        while r.len() >= b.len() {
            let rl = r.last().unwrap().clone();
            let shift = r.len() - b.len();
            // r = lb*r - rl*x^shift*b  (top coefficient cancels)
            for c in r.iter_mut() {
                *c = c.checked_mul(&lb)?;
            }
            for (j, d) in b.iter().enumerate() {
                let t = rl.checked_mul(d)?;
                r[shift + j] = r[shift + j].checked_sub(&t)?;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            trim(&mut r);
            if lb.is_negative() {
                scale_negative = !scale_negative;
            }
        }
        Some((r, scale_negative))
    }

    /// Sturm chain of `f` (ascending integer coefficients), each element
    /// scaled by a positive constant, content removed.
    pub(crate) fn sturm_chain<T: ChainInt>(f: &[T]) -> Option<Vec<Vec<T>>> {
        let mut chain: Vec<Vec<T>> = vec![f.to_vec(), derivative(f)?];
        loop {
            let n = chain.len();
            if chain[n - 1].is_empty() || chain[n - 1].len() == 1 {
                break;
            }
            let (mut r, neg) = pseudo_rem(&chain[n - 2], &chain[n - 1])?;
            if r.is_empty() {
                break;
            }
            if !neg {
                for c in r.iter_mut() {
                    *c = T::zero() - c.clone();
                }
            }
            divide_out_content(&mut r);
            chain.push(r);
        }
        Some(chain)
    }

    /// Sign of `poly` at a surd point, all-integer.
    fn sign_at<T: ChainInt>(poly: &[T], pt: &SurdPoint<T>) -> Option<i8> {
        if poly.is_empty() {
            return Some(0);
        }
        let deg = poly.len() - 1;
        // den^(deg - i) table
        let mut dpow = vec![T::one()];
        for i in 1..=deg {
            dpow.push(dpow[i - 1].checked_mul(&pt.den)?);
        }
        // Horner in Z[sqrt(m)]: value scaled by den^deg > 0.
        let mut x = poly[deg].clone();
        let mut y = T::zero();
        for i in (0..deg).rev() {
            let nx = x
                .checked_mul(&pt.a)?
                .checked_add(&y.checked_mul(&pt.b)?.checked_mul(&pt.m)?)?
                .checked_add(&poly[i].checked_mul(&dpow[deg - i])?)?;
            let ny = x.checked_mul(&pt.b)?.checked_add(&y.checked_mul(&pt.a)?)?;
            x = nx;
            y = ny;
        }
        int_surd_sign(&x, &y, &pt.m)
    }

    fn sgn<T: Signed>(x: &T) -> i8 {
        if x.is_zero() {
            0
        } else if x.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of `x + y*sqrt(m)` over integers.
    fn int_surd_sign<T: ChainInt>(x: &T, y: &T, m: &T) -> Option<i8> {
        let sx = sgn(x);
        let sy = sgn(y);
        if sy == 0 {
            return Some(sx);
        }
        if sx == 0 {
            return Some(sy);
        }
        if sx == sy {
            return Some(sx);
        }
        let lhs = x.checked_mul(x)?;
        let rhs = y.checked_mul(y)?.checked_mul(m)?;
        Some(match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sx,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => sy,
        })
    }

    fn variations(signs: &[i8]) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for &s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct roots of squarefree `f` in `(lo, hi]`.
    /// Outer `None`: overflow. Inner `Err`: `f` was not squarefree.
    pub(crate) fn count_in_interval<T: ChainInt>(
        f: &[T],
        lo: &SurdPoint<T>,
        hi: &SurdPoint<T>,
    ) -> Option<Result<usize, ()>> {
        let chain = sturm_chain(f)?;
        if chain.last().map_or(true, |g| g.len() > 1) {
            return Some(Err(()));
        }
        let mut s_lo = Vec::with_capacity(chain.len());
        let mut s_hi = Vec::with_capacity(chain.len());
        for p in &chain {
            s_lo.push(sign_at(p, lo)?);
            s_hi.push(sign_at(p, hi)?);
        }
        let v_lo = variations(&s_lo);
        let v_hi = variations(&s_hi);
        debug_assert!(v_lo >= v_hi, "sign variations must not increase");
        Some(Ok(v_lo - v_hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn surd(a: i64, b: i64, m: u64) -> SurdValue {
        SurdValue::new(rat(a, 1), rat(b, 1), BigInt::from(m))
    }

    #[test]
    fn surd_sign_examples() {
        assert_eq!(surd_sign(&surd(0, 0, 2)), 0);
        // 2*sqrt(2) < 3: 4*2 = 8 < 9
        assert_eq!(surd_sign(&surd(-3, 2, 2)), -1);
        // 2*sqrt(2) > 2: 8 > 4
        assert_eq!(surd_sign(&surd(-2, 2, 2)), 1);
    }

    #[test]
    fn surd_square_radicand_folds() {
        let v = SurdValue::new(rat(1, 1), rat(3, 1), BigInt::from(4));
        assert!(v.is_rational());
        assert_eq!(v.rational_part(), &rat(7, 1));
    }

    #[test]
    fn surd_arithmetic_and_order() {
        let x = surd(0, 2, 2); // 2 sqrt 2 ~ 2.828
        let y = surd(3, 0, 2);
        assert_eq!(x.cmp_real(&y), std::cmp::Ordering::Less);
        let prod = x.clone() * x.clone();
        assert!(prod.is_rational());
        assert_eq!(prod.rational_part(), &rat(8, 1));
    }

    #[test]
    fn sturm_count_examples() {
        // t^2 - 2 on (0, 2]: one root, sqrt(2)
        let f = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let lo = SurdValue::from_integer(0);
        let hi = SurdValue::from_integer(2);
        assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 1);

        // t^3 - 5t, roots 0, +-sqrt(5)
        let f = RationalPolynomial::from_integers(&[0, -5, 0, 1]);
        let lo = SurdValue::from_integer(-3);
        let hi = SurdValue::from_integer(3);
        assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 3);
        // (0, 3]: counts sqrt(5) ~ 2.24 only, excludes the root at the
        // open endpoint 0 and -sqrt(5)
        let lo = SurdValue::from_integer(0);
        assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 1);
    }

    #[test]
    fn sturm_count_surd_endpoints() {
        // roots of t^2 - 2 in (-sqrt(2), sqrt(2)]: exactly the boundary root
        let f = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let lo = SurdValue::sqrt_times(-1, 2);
        let hi = SurdValue::sqrt_times(1, 2);
        assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 1);
    }

    #[test]
    fn sturm_count_rejects_non_squarefree() {
        let f = RationalPolynomial::from_integers(&[1, 2, 1]); // (t+1)^2
        let lo = SurdValue::from_integer(-3);
        let hi = SurdValue::from_integer(3);
        assert_eq!(sturm_count(&f, &lo, &hi), Err(Error::NotSquarefree));
    }

    #[test]
    fn sturm_count_rejects_bad_interval() {
        let f = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let lo = SurdValue::from_integer(2);
        let hi = SurdValue::from_integer(2);
        assert_eq!(sturm_count(&f, &lo, &hi), Err(Error::EmptyInterval));
    }

    #[test]
    fn kth_root_examples() {
        assert_eq!(integer_kth_root(&BigInt::from(64), 3), Some(BigInt::from(4)));
        assert_eq!(integer_kth_root(&BigInt::from(64), 2), Some(BigInt::from(8)));
        assert_eq!(integer_kth_root(&BigInt::from(8), 2), None);
        assert_eq!(integer_kth_root(&BigInt::from(729), 6), Some(BigInt::from(3)));
    }

    #[test]
    fn kth_root_roundtrip() {
        for r in 0i64..=1000 {
            for k in 1u32..=6 {
                let x = BigInt::from(r).pow(k);
                assert_eq!(integer_kth_root(&x, k), Some(BigInt::from(r)));
            }
        }
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let f = RationalPolynomial::from_integers(&[2, -3, 0, 1]);
        let sf = f.squarefree_part();
        // (t-1)(t+2) = t^2 + t - 2
        assert_eq!(sf, RationalPolynomial::from_integers(&[-2, 1, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = RationalPolynomial::from_integers(&[-1, 0, 1]); // t^2-1
        let b = RationalPolynomial::from_integers(&[1, 1]); // t+1
        assert_eq!(a.gcd(&b), RationalPolynomial::from_integers(&[1, 1]));
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, RationalPolynomial::from_integers(&[-1, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // surd_sign agrees with floating point whenever the float value
            // is comfortably away from zero.
            #[test]
            fn surd_sign_matches_float(
                an in -1000i64..1000, ad in 1i64..100,
                bn in -1000i64..1000, bd in 1i64..100,
                m in 1u64..1_000_000,
            ) {
                let v = SurdValue::new(rat(an, ad), rat(bn, bd), BigInt::from(m));
                let x = v.to_f64();
                prop_assume!(x.abs() > 1e-6);
                prop_assert_eq!(surd_sign(&v) as f64, x.signum());
            }

            // Counting over a Cauchy-bound interval finds every distinct
            // real root of a cubic with known integer roots.
            #[test]
            fn sturm_full_interval_counts_integer_roots(
                r1 in -20i64..20, r2 in -20i64..20, r3 in -20i64..20,
            ) {
                let mut roots = vec![r1, r2, r3];
                roots.sort_unstable();
                roots.dedup();
                prop_assume!(roots.len() == 3); // squarefree
                // (t-r1)(t-r2)(t-r3)
                let c0 = -r1 * r2 * r3;
                let c1 = r1 * r2 + r1 * r3 + r2 * r3;
                let c2 = -(r1 + r2 + r3);
                let f = RationalPolynomial::from_integers(&[c0, c1, c2, 1]);
                let bound = 1 + [c0, c1, c2].iter().map(|c| c.abs()).max().unwrap();
                let lo = SurdValue::from_integer(-bound);
                let hi = SurdValue::from_integer(bound);
                prop_assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 3);
            }
        }
    }
}
