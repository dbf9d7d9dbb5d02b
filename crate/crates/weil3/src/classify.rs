//! The full classification pipeline: from a coefficient triple to a final
//! verdict — Weil or not, reducible or not, and for irreducible Weil
//! polynomials whether an abelian threefold with that characteristic
//! polynomial exists, with its p-rank and polygon type.
//!
//! The supersingular case is decided by the explicit list of admissible
//! triples (built from the cyclotomic polynomials below), whose converse we
//! adopt as given; general degree-3 factor detection over Q_p is out of
//! scope.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::irreducibility::{integer_roots, is_irreducible, real_weil_cubic};
use crate::padic::{has_qp_root, newton_polygon, polygon_type, valuation, zp_root_exists, PolygonType};
use crate::poly::IntPolynomial;
use crate::weilcheck::{special_form_check, theorem1_check, WeilCandidate};

/// Final verdict for a coefficient triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Fails the Weil conditions outright.
    NotWeil,
    /// A Weil polynomial that factors over Q; never a char-poly verdict,
    /// since non-simple classification needs lower-dimensional theory.
    ReducibleWeil { factors: Vec<IntPolynomial> },
    /// `p(t) = (t^2 + beta t + q)^3`; `is_char` records whether an abelian
    /// threefold with this characteristic polynomial exists (the e = 3
    /// case).
    CubeOfQuadratic { beta: i128, is_char: bool },
    /// Irreducible and the characteristic polynomial of an abelian
    /// threefold (e = 1).
    IrreducibleChar {
        p_rank: u8,
        ptype: PolygonType,
        supersingular: bool,
    },
    /// Irreducible Weil polynomial that is not a characteristic polynomial
    /// of an abelian threefold.
    IrreducibleNotChar { reason: String },
}

/// Which cyclotomic family a supersingular triple comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SupersingularFamily {
    Zeta7,
    Zeta9,
    Zeta28,
    Zeta36,
}

/// β when `p(t) = (t^2 + beta t + q)^3` identically: requires `3 | a1`, and
/// the full cube expansion must match all seven coefficients.
pub fn detect_cube_of_quadratic(w: &WeilCandidate) -> Option<i128> {
    if w.a1 % 3 != 0 {
        return None;
    }
    let beta = w.a1 / 3;
    let h = IntPolynomial::from_i128(&[w.q() as i128, beta, 1]);
    let cube = h.mul(&h).mul(&h);
    if cube == w.polynomial() {
        Some(beta)
    } else {
        None
    }
}

/// Whether the cube `(t^2 + beta t + q)^3` is a characteristic polynomial:
/// `3 | n` and `beta = a * q^(1/3)` with `gcd(a, p) = 1`.
pub fn xing_e3_is_char(q: u64, p: u64, n: u32, beta: i128) -> bool {
    if n % 3 != 0 {
        return false;
    }
    let c = crate::exactmath::integer_kth_root(&BigInt::from(q), 3)
        .expect("q is a cube when 3 | n");
    let c: i128 = (&c).try_into().unwrap();
    if beta % c != 0 {
        return false;
    }
    let a = (beta / c).unsigned_abs();
    a.gcd(&u128::from(p)) == 1
}

/// The cyclotomic polynomials behind the supersingular families.
pub fn build_cyclotomic(m: u32) -> Result<IntPolynomial, Error> {
    let coeffs: &[i128] = match m {
        7 => &[1, 1, 1, 1, 1, 1, 1],
        9 => &[1, 0, 0, 1, 0, 0, 1],
        28 => &[1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1],
        36 => &[1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1],
        _ => return Err(Error::UnsupportedCyclotomic(m)),
    };
    Ok(IntPolynomial::from_i128(coeffs))
}

/// The supersingular family and sign matching the triple, if any:
///
/// * `(±q^(1/2), q, ±q^(3/2))`, q square, `7 ∤ p^3 − 1`  (Zeta7)
/// * `(0, 0, ±q^(3/2))`, q square, `3 ∤ p − 1`           (Zeta9)
/// * `(±√(pq), 3q, ±q√(pq))`, p = 7, q non-square        (Zeta28)
/// * `(0, 0, ±q√(pq))`, p = 3, q non-square              (Zeta36)
pub fn supersingular_family(w: &WeilCandidate) -> Option<(SupersingularFamily, i8)> {
    let q = w.q() as i128;
    let p = w.p() as i128;
    let root = |x: i128| {
        crate::exactmath::integer_kth_root(&BigInt::from(x), 2)
            .map(|r| i128::try_from(&r).unwrap())
    };
    if let Some(s) = root(q) {
        if (p * p * p - 1) % 7 != 0 {
            for sign in [1i128, -1] {
                if (w.a1, w.a2, w.a3) == (sign * s, q, sign * q * s) {
                    return Some((SupersingularFamily::Zeta7, sign as i8));
                }
            }
        }
        if (p - 1) % 3 != 0 {
            for sign in [1i128, -1] {
                if (w.a1, w.a2, w.a3) == (0, 0, sign * q * s) {
                    return Some((SupersingularFamily::Zeta9, sign as i8));
                }
            }
        }
    } else {
        // q non-square means n odd, so pq = p^(n+1) is a square
        let r = root(p * q).expect("pq is a square for non-square q");
        if p == 7 {
            for sign in [1i128, -1] {
                if (w.a1, w.a2, w.a3) == (sign * r, 3 * q, sign * q * r) {
                    return Some((SupersingularFamily::Zeta28, sign as i8));
                }
            }
        }
        if p == 3 {
            for sign in [1i128, -1] {
                if (w.a1, w.a2, w.a3) == (0, 0, sign * q * r) {
                    return Some((SupersingularFamily::Zeta36, sign as i8));
                }
            }
        }
    }
    None
}

/// Whether the triple is on the supersingular list. Accepted triples are
/// re-verified against the cyclotomic identities they come from.
pub fn supersingular_list_check(w: &WeilCandidate) -> bool {
    let Some((family, sign)) = supersingular_family(w) else {
        return false;
    };
    assert_cyclotomic_identity(w, family, sign);
    true
}

/// For the square-q families, `p(t) = q^3 Φ_m(±t / √q)` exactly; for the
/// others, `p(t) · p̄(t) = q^6 Φ_m(t / √q)` (an even polynomial, so the
/// scaling is integral).
fn assert_cyclotomic_identity(w: &WeilCandidate, family: SupersingularFamily, sign: i8) {
    let q = BigInt::from(w.q());
    match family {
        SupersingularFamily::Zeta7 | SupersingularFamily::Zeta9 => {
            let m = if family == SupersingularFamily::Zeta7 { 7 } else { 9 };
            let phi = build_cyclotomic(m).unwrap();
            let s = crate::exactmath::integer_kth_root(&q, 2).unwrap();
            let expected: Vec<BigInt> = phi
                .coefficients()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let v = c * s.pow((6 - i) as u32);
                    if sign < 0 && i % 2 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            assert_eq!(w.polynomial(), IntPolynomial::new(expected));
        }
        SupersingularFamily::Zeta28 | SupersingularFamily::Zeta36 => {
            let m = if family == SupersingularFamily::Zeta28 { 28 } else { 36 };
            let phi = build_cyclotomic(m).unwrap();
            let mut expected = vec![BigInt::zero(); 13];
            for j in 0..=6usize {
                expected[2 * j] = phi.coefficient(2 * j) * q.pow((6 - j) as u32);
            }
            let product = w.polynomial().mul(&w.mirror().polynomial());
            assert_eq!(product, IntPolynomial::new(expected));
        }
    }
}

/// The classification pipeline.
pub fn classify(w: &WeilCandidate) -> Classification {
    if !theorem1_check(w) {
        return Classification::NotWeil;
    }
    if let Some(beta) = detect_cube_of_quadratic(w) {
        let is_char = xing_e3_is_char(w.q(), w.p(), w.n(), beta);
        return Classification::CubeOfQuadratic { beta, is_char };
    }
    if let Some(beta) = special_form_check(w) {
        let q = w.q() as i128;
        return Classification::ReducibleWeil {
            factors: vec![
                IntPolynomial::from_i128(&[-q, 0, 1]),
                IntPolynomial::from_i128(&[-q, 0, 1]),
                IntPolynomial::from_i128(&[q, beta, 1]),
            ],
        };
    }
    if !is_irreducible(w) {
        let roots = integer_roots(&real_weil_cubic(w));
        let x = roots.first().expect("reducible candidate has a cubic root");
        let q = w.q() as i128;
        // a root x = ω + ω̄ of the real cubic pairs two Frobenius roots
        // into the rational quadratic (t − ω)(t − ω̄) = t² − x t + q
        let quad = IntPolynomial::new(vec![BigInt::from(q), -x, BigInt::from(1)]);
        let cofactor = w
            .polynomial()
            .div_exact(&quad)
            .expect("t^2 - x t + q divides p(t)");
        return Classification::ReducibleWeil {
            factors: vec![quad, cofactor],
        };
    }
    irreducible_verdict(w)
}

fn irreducible_verdict(w: &WeilCandidate) -> Classification {
    let p = w.p();
    let n = u64::from(w.n());
    let v1 = valuation(&BigInt::from(w.a1), p);
    let v2 = valuation(&BigInt::from(w.a2), p);
    let v3 = valuation(&BigInt::from(w.a3), p);
    // infinite valuations (vanishing coefficients) satisfy every lower
    // bound but no equality
    let ge = |v: Option<u64>, num: u64, scale: u64| v.map_or(true, |v| scale * v >= num);
    let patterns = [
        v3 == Some(0),
        v2 == Some(0) && ge(v3, n, 2),
        v1 == Some(0) && ge(v2, n, 2) && ge(v3, n, 1),
        ge(v1, n, 3) && ge(v2, 2 * n, 3) && v3 == Some(n),
        ge(v1, n, 2) && ge(v2, n, 1) && ge(v3, 3 * n, 2),
    ];
    assert!(
        patterns.iter().filter(|&&b| b).count() <= 1,
        "valuation patterns must be mutually exclusive"
    );
    let half_n = Rational64::new(n as i64, 2);
    let ptype_of = |w: &WeilCandidate| {
        polygon_type(&newton_polygon(&w.polynomial(), p), w.n()).unwrap()
    };
    let index = patterns.iter().position(|&b| b);
    match index {
        Some(0) => Classification::IrreducibleChar {
            p_rank: 3,
            ptype: ptype_of(w),
            supersingular: false,
        },
        Some(1) | Some(2) => {
            if zp_root_exists(&w.polynomial(), p, half_n) {
                Classification::IrreducibleNotChar {
                    reason: format!(
                        "p-rank {} valuation pattern, but p(t) has a root of valuation n/2 in Q_p",
                        if index == Some(1) { 2 } else { 1 }
                    ),
                }
            } else {
                Classification::IrreducibleChar {
                    p_rank: if index == Some(1) { 2 } else { 1 },
                    ptype: ptype_of(w),
                    supersingular: false,
                }
            }
        }
        Some(3) => {
            if has_qp_root(&w.polynomial(), p) {
                Classification::IrreducibleNotChar {
                    reason: "type-1/3 valuation pattern, but p(t) has a root in Q_p".into(),
                }
            } else {
                Classification::IrreducibleChar {
                    p_rank: 0,
                    ptype: ptype_of(w),
                    supersingular: false,
                }
            }
        }
        Some(4) => {
            if supersingular_list_check(w) {
                Classification::IrreducibleChar {
                    p_rank: 0,
                    ptype: ptype_of(w),
                    supersingular: true,
                }
            } else {
                Classification::IrreducibleNotChar {
                    reason: "supersingular valuation pattern, but the triple is not on the \
                             supersingular list"
                        .into(),
                }
            }
        }
        None => Classification::IrreducibleNotChar {
            reason: "no admissible valuation pattern".into(),
        },
        _ => unreachable!(),
    }
}

/// The p-rank of a characteristic-polynomial verdict; `None` for verdicts
/// where it is undefined.
pub fn p_rank(c: &Classification) -> Option<u8> {
    match c {
        Classification::IrreducibleChar { p_rank, .. } => Some(*p_rank),
        Classification::CubeOfQuadratic { is_char: true, .. } => Some(0),
        _ => None,
    }
}
