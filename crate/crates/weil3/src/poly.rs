//! Dense integer-coefficient univariate polynomials, exact and
//! arbitrary precision. Ascending degree order, no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactmath::RationalPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i128(coeffs: &[i128]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder. The divisor must have an invertible-over-Z leading
    /// coefficient step by step, which holds whenever it divides exactly.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + dlen - 1].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &c * d;
                }
            }
            quot[k] = c;
        }
        if rem.iter().take(dlen - 1).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// `f(a + b*t)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> IntPolynomial {
        // Horner over Z[t] with the substitution.
        let mut acc = IntPolynomial::zero();
        let shift = IntPolynomial::new(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift);
            if acc.is_zero() {
                acc = IntPolynomial::new(vec![c.clone()]);
            } else {
                acc.coeffs[0] = &acc.coeffs[0] + c;
                if acc.coeffs.len() == 1 && acc.coeffs[0].is_zero() {
                    acc = IntPolynomial::zero();
                }
            }
        }
        Self::new(acc.coeffs)
    }

    /// gcd of all coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial::from_bigints(&self.coeffs)
    }

    /// Squarefree part (same distinct roots, multiplicity one). For monic
    /// input the result is monic with integer coefficients.
    pub fn squarefree_part(&self) -> IntPolynomial {
        let sf = self.to_rational().squarefree_part();
        let ints = sf.to_primitive_integers();
        let mut p = IntPolynomial::new(ints);
        if p.leading().map_or(false, |c| c.is_negative()) {
            p = Self::new(p.coeffs.into_iter().map(|c| -c).collect());
        }
        p
    }

    /// Yun squarefree decomposition: returns `(g_i, i)` pairs with
    /// `self = lead * prod g_i^i`, each `g_i` squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        let f = self.to_rational();
        if f.degree() == 0 {
            return out;
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let (mut b, _) = f.div_rem(&a);
        let (mut c, _) = df.div_rem(&a);
        let mut i = 1usize;
        loop {
            let d = {
                let bd = b.derivative();
                RationalPolynomial::new(
                    c.coefficients()
                        .iter()
                        .enumerate()
                        .map(|(k, x)| match bd.coefficients().get(k) {
                            Some(y) => x - y,
                            None => x.clone(),
                        })
                        .collect(),
                )
            };
            let g = b.gcd(&d);
            if g.degree() > 0 {
                let mut gi = IntPolynomial::new(g.to_primitive_integers());
                if gi.leading().map_or(false, |x| x.is_negative()) {
                    gi = Self::new(gi.coeffs.into_iter().map(|x| -x).collect());
                }
                out.push((gi, i));
            }
            let (nb, _) = b.div_rem(&g);
            let (nc, _) = d.div_rem(&g);
            b = nb;
            c = nc;
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }

    pub fn to_i128_vec(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(|c| c.to_i128()).collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i128]) -> IntPolynomial {
        IntPolynomial::from_i128(c)
    }

    #[test]
    fn eval_and_derivative() {
        let f = poly(&[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        assert!(f.eval(&BigInt::from(2)).is_zero());
        assert_eq!(f.eval(&BigInt::from(4)), BigInt::from(6));
        assert_eq!(f.derivative(), poly(&[11, -12, 3]));
    }

    #[test]
    fn exact_division() {
        let f = poly(&[-6, 11, -6, 1]);
        let d = poly(&[-2, 1]);
        let q = f.div_exact(&d).unwrap();
        assert_eq!(q, poly(&[3, -4, 1]));
        assert!(f.div_exact(&poly(&[1, 1])).is_none());
    }

    #[test]
    fn compose_linear_shift() {
        // f(t) = t^2, f(1 + 2t) = 4t^2 + 4t + 1
        let f = poly(&[0, 0, 1]);
        let g = f.compose_linear(&BigInt::from(1), &BigInt::from(2));
        assert_eq!(g, poly(&[1, 4, 4]));
    }

    #[test]
    fn squarefree_part_monic() {
        // (t-1)^2 (t+3)
        let f = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[3, 1]));
        assert_eq!(f.squarefree_part(), poly(&[-1, 1]).mul(&poly(&[3, 1])));
    }

    #[test]
    fn yun_decomposition() {
        // (t-1)^2 (t+2)^3
        let sq = poly(&[-1, 1]).mul(&poly(&[-1, 1]));
        let cube = poly(&[2, 1]).mul(&poly(&[2, 1])).mul(&poly(&[2, 1]));
        let f = sq.mul(&cube);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(poly(&[-1, 1]), 2), (poly(&[2, 1]), 3)]);
    }

    #[test]
    fn display_reads_naturally() {
        let f = poly(&[9, -3, 1]);
        assert_eq!(f.to_string(), "t^2 - 3*t + 9");
    }
}
