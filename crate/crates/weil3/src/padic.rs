//! p-adic valuations, Newton polygons, and detection of roots in Q_p with
//! prescribed valuation.
//!
//! Everything here is exact and finite: the polygon is a lattice hull, and
//! root existence is decided by residue reduction plus Hensel lifting, with
//! recursion depth bounded by the discriminant valuation of the squarefree
//! part. No general p-adic precision arithmetic is involved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::IntPolynomial;

/// `v_p(x)`: the largest `v` with `p^v | x`, or `None` for `x = 0` (infinity).
pub fn valuation(x: &BigInt, p: u64) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (div, rem) = x.div_rem(&p);
        if !rem.is_zero() {
            return Some(v);
        }
        x = div;
        v += 1;
    }
}

/// Lower convex hull of the valuation points `(i, v_p(c_i))` of a polynomial.
///
/// Segments are stored in the root-valuation convention: a segment of
/// (negated hull) slope `λ` and horizontal length `ℓ` means exactly `ℓ`
/// roots of valuation `λ` in an algebraic closure of Q_p. They are listed
/// in increasing valuation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    degree: usize,
    vertices: Vec<(usize, u64)>,
    segments: Vec<(Rational64, usize)>,
}

impl NewtonPolygon {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Hull vertices, left to right. Points with infinite valuation
    /// (vanishing coefficients) never appear.
    pub fn vertices(&self) -> &[(usize, u64)] {
        &self.vertices
    }

    /// `(root valuation, horizontal length)` pairs, valuation increasing.
    pub fn segments(&self) -> &[(Rational64, usize)] {
        &self.segments
    }

    /// The valuations expanded with multiplicity, ascending.
    pub fn root_valuations(&self) -> Vec<Rational64> {
        let mut out = Vec::new();
        for &(v, len) in &self.segments {
            for _ in 0..len {
                out.push(v);
            }
        }
        out
    }
}

pub fn newton_polygon(f: &IntPolynomial, p: u64) -> NewtonPolygon {
    assert!(!f.is_zero(), "Newton polygon of the zero polynomial");
    let points: Vec<(i64, i64)> = f
        .coefficients()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| valuation(c, p).map(|v| (i as i64, v as i64)))
        .collect();
    // monotone chain, lower hull only (points already sorted by i)
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = i128::from(b.0 - a.0) * i128::from(pt.1 - a.1)
                - i128::from(b.1 - a.1) * i128::from(pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut segments: Vec<(Rational64, usize)> = hull
        .windows(2)
        .map(|w| {
            let (i1, v1) = w[0];
            let (i2, v2) = w[1];
            (Rational64::new(v1 - v2, i2 - i1), (i2 - i1) as usize)
        })
        .collect();
    segments.reverse();
    NewtonPolygon {
        degree: f.degree(),
        vertices: hull.into_iter().map(|(i, v)| (i as usize, v as u64)).collect(),
        segments,
    }
}

/// The five admissible polygon shapes for a degree-6 Weil candidate over a
/// field of p^n elements, plus `Other` for anything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolygonType {
    Ordinary,
    PRank2,
    PRank1,
    OneThird,
    Supersingular,
    Other,
}

/// Matches the polygon's root-valuation multiset against the admissible
/// shapes, scaled by `n`.
pub fn polygon_type(g: &NewtonPolygon, n: u32) -> Result<PolygonType, Error> {
    if g.degree() != 6 {
        return Err(Error::PolygonDegree(g.degree()));
    }
    let vals = g.root_valuations();
    if vals.len() != 6 {
        return Ok(PolygonType::Other);
    }
    let n = i64::from(n);
    let r = Rational64::new;
    let shapes: [(PolygonType, [Rational64; 6]); 5] = [
        (
            PolygonType::Ordinary,
            [r(0, 1), r(0, 1), r(0, 1), r(n, 1), r(n, 1), r(n, 1)],
        ),
        (
            PolygonType::PRank2,
            [r(0, 1), r(0, 1), r(n, 2), r(n, 2), r(n, 1), r(n, 1)],
        ),
        (
            PolygonType::PRank1,
            [r(0, 1), r(n, 2), r(n, 2), r(n, 2), r(n, 2), r(n, 1)],
        ),
        (
            PolygonType::OneThird,
            [r(n, 3), r(n, 3), r(n, 3), r(2 * n, 3), r(2 * n, 3), r(2 * n, 3)],
        ),
        (PolygonType::Supersingular, [r(n, 2); 6]),
    ];
    for (tag, shape) in shapes {
        if vals == shape {
            return Ok(tag);
        }
    }
    Ok(PolygonType::Other)
}

/// Whether `f` has a root of exactly the given valuation in Z_p.
///
/// Non-integer and negative targets are impossible in Q_p and return false
/// at once. Otherwise substitute `t = p^v u`, strip the content power of p,
/// and search for unit roots of the result: simple residue roots lift by
/// Hensel; multiple residue roots recurse on `g(r + p u) / p^e`. The search
/// runs on the squarefree part, and its depth is bounded by the valuation
/// of that part's discriminant — exceeding the bound is an internal error.
pub fn zp_root_exists(f: &IntPolynomial, p: u64, target_valuation: Rational64) -> bool {
    assert!(f.is_monic(), "p-adic root search requires a monic polynomial");
    if target_valuation.is_negative() || !target_valuation.is_integer() {
        return false;
    }
    let v = target_valuation.to_integer() as u64;
    // strip t^k: the root 0 has infinite valuation, never the finite target
    let coeffs = f.coefficients();
    let offset = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let g0 = IntPolynomial::new(coeffs[offset..].to_vec());
    if g0.degree() == 0 {
        return false;
    }
    // every root valuation is bounded by v_p of the constant term
    match valuation(&g0.constant_term(), p) {
        Some(bound) if v > bound => return false,
        _ => {}
    }
    let gsf = g0.squarefree_part();
    let g = strip_p_content(&substitute_p_power(&gsf, p, v as u32), p);
    let budget = discriminant_budget(&g, p);
    root_search(&g, p, budget, true)
}

/// Whether `f` has any root in Q_p. The candidate valuations are exactly
/// the integer slopes of the Newton polygon.
pub fn has_qp_root(f: &IntPolynomial, p: u64) -> bool {
    assert!(f.is_monic(), "p-adic root search requires a monic polynomial");
    if f.constant_term().is_zero() {
        return true;
    }
    let polygon = newton_polygon(f, p);
    let mut tried = Vec::new();
    for v in polygon.root_valuations() {
        if v.is_integer() && !tried.contains(&v) {
            tried.push(v);
            if zp_root_exists(f, p, v) {
                return true;
            }
        }
    }
    false
}

/// `f(p^v t)` as an integer polynomial.
fn substitute_p_power(f: &IntPolynomial, p: u64, v: u32) -> IntPolynomial {
    let pb = BigInt::from(p);
    let coeffs = f
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| c * pb.pow(v * i as u32))
        .collect();
    IntPolynomial::new(coeffs)
}

fn strip_p_content(f: &IntPolynomial, p: u64) -> IntPolynomial {
    let m = f
        .coefficients()
        .iter()
        .filter_map(|c| valuation(c, p))
        .min()
        .expect("nonzero polynomial");
    if m == 0 {
        return f.clone();
    }
    let divisor = BigInt::from(p).pow(m as u32);
    IntPolynomial::new(f.coefficients().iter().map(|c| c / &divisor).collect())
}

/// `v_p(Res(g, g')) + 1`, the depth bound for the lifting recursion.
fn discriminant_budget(g: &IntPolynomial, p: u64) -> u64 {
    let res = resultant(g, &g.derivative());
    let v = valuation(&res, p)
        .expect("squarefree polynomial has nonzero discriminant");
    v + 1
}

/// The recursion: residues `r` with `g(r) ≡ 0 (mod p)`, Hensel for simple
/// ones, shift-and-divide for multiple ones. `unit_only` restricts the top
/// level to `r ≢ 0`, pinning the valuation of the root being built.
fn root_search(g: &IntPolynomial, p: u64, budget: u64, unit_only: bool) -> bool {
    if !unit_only && g.constant_term().is_zero() {
        return true;
    }
    let gp = g.derivative();
    let start = if unit_only { 1 } else { 0 };
    for r in start..p {
        let rb = BigInt::from(r);
        let value = g.eval(&rb);
        if value.is_zero() {
            return true;
        }
        if valuation(&value, p) == Some(0) {
            continue;
        }
        if valuation(&gp.eval(&rb), p) == Some(0) {
            return true;
        }
        if budget == 0 {
            panic!("p-adic root search exceeded its discriminant depth bound");
        }
        let shifted = strip_p_content(&g.compose_linear(&rb, &BigInt::from(p)), p);
        if root_search(&shifted, p, budget - 1, false) {
            return true;
        }
    }
    false
}

/// Resultant via the Sylvester matrix and Bareiss elimination.
fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    assert!(!f.is_zero() && !g.is_zero());
    let m = f.degree();
    let n = g.degree();
    if n == 0 {
        return g.constant_term().pow(m as u32);
    }
    if m == 0 {
        return f.constant_term().pow(n as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (j, c) in f.coefficients().iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.coefficients().iter().rev().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot_row = a[k].clone();
        for i in k + 1..n {
            let lead = a[i][k].clone();
            for j in k + 1..n {
                let num = &a[i][j] * &pivot_row[k] - &lead * &pivot_row[j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilcheck::{scan_box, theorem1_check, WeilCandidate};
    use num_bigint::BigInt;

    fn poly(c: &[i128]) -> IntPolynomial {
        IntPolynomial::from_i128(c)
    }

    fn rat(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    fn candidate_poly(q: u64, a1: i128, a2: i128, a3: i128) -> IntPolynomial {
        WeilCandidate::new(q, a1, a2, a3).unwrap().polynomial()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&BigInt::from(8), 2), Some(3));
        assert_eq!(valuation(&BigInt::from(0), 5), None);
        assert_eq!(valuation(&BigInt::from(12), 2), Some(2));
        assert_eq!(valuation(&BigInt::from(-12), 2), Some(2));
        assert_eq!(valuation(&BigInt::from(7), 3), Some(0));
    }

    #[test]
    fn polygon_examples() {
        let g = newton_polygon(&poly(&[2, 1, 1]), 2);
        assert_eq!(g.vertices(), &[(0, 1), (1, 0), (2, 0)]);
        assert_eq!(g.root_valuations(), vec![rat(0, 1), rat(1, 1)]);

        let g = newton_polygon(&candidate_poly(2, 1, 3, 0), 2);
        assert_eq!(g.vertices(), &[(0, 3), (2, 1), (4, 0), (6, 0)]);
        assert_eq!(
            g.root_valuations(),
            vec![rat(0, 1), rat(0, 1), rat(1, 2), rat(1, 2), rat(1, 1), rat(1, 1)]
        );

        // t^6 + q^3, q = 2
        let g = newton_polygon(&poly(&[8, 0, 0, 0, 0, 0, 1]), 2);
        assert_eq!(g.vertices(), &[(0, 3), (6, 0)]);
        assert_eq!(g.root_valuations(), vec![rat(1, 2); 6]);
    }

    #[test]
    fn polygon_type_examples() {
        let g = newton_polygon(&candidate_poly(2, 1, 1, 1), 2);
        assert_eq!(polygon_type(&g, 1).unwrap(), PolygonType::Ordinary);

        let g = newton_polygon(&candidate_poly(2, 1, 3, 0), 2);
        assert_eq!(polygon_type(&g, 1).unwrap(), PolygonType::PRank2);

        let g = newton_polygon(&candidate_poly(4, 2, 4, 8), 2);
        assert_eq!(polygon_type(&g, 2).unwrap(), PolygonType::Supersingular);
        assert_eq!(g.root_valuations(), vec![rat(1, 1); 6]);
    }

    #[test]
    fn polygon_type_rejects_wrong_degree() {
        let g = newton_polygon(&poly(&[2, 1, 1]), 2);
        assert!(matches!(polygon_type(&g, 1), Err(Error::PolygonDegree(2))));
    }

    #[test]
    fn zp_root_examples() {
        // Hensel lift of the simple residue root after t = 2u
        assert!(zp_root_exists(&poly(&[2, 1, 1]), 2, rat(1, 1)));
        // the other root: residue root 1 is simple, Hensel lifts it
        assert!(zp_root_exists(&poly(&[2, 1, 1]), 2, rat(0, 1)));
        // half-integer valuations never occur in Q_p
        assert!(!zp_root_exists(&poly(&[2, 1, 1]), 2, rat(1, 2)));
        // sqrt(2) has valuation 1/2, so no valuation-1 root
        assert!(!zp_root_exists(&poly(&[-2, 0, 1]), 2, rat(1, 1)));
        assert!(!zp_root_exists(&poly(&[-2, 0, 1]), 2, rat(0, 1)));
    }

    #[test]
    fn qp_root_examples() {
        assert!(has_qp_root(&poly(&[2, 1, 1]), 2));
        assert!(!has_qp_root(&poly(&[-2, 0, 1]), 2));
        // -1 is not a square in Q_2: the double residue root must die
        // in the recursion, not loop
        assert!(!has_qp_root(&poly(&[1, 0, 1]), 2));
        assert!(has_qp_root(&poly(&[0, 0, 1]), 2));
        // 2-adic square roots exist for 17 = 1 + 16
        assert!(has_qp_root(&poly(&[-17, 0, 1]), 2));
    }

    #[test]
    fn resultant_examples() {
        // Res(t^2 - 1, t - 2) = value of first at 2, times signs: 3
        assert_eq!(resultant(&poly(&[-1, 0, 1]), &poly(&[-2, 1])), BigInt::from(3));
        // disc(t^2 + 1) via Res(f, f') = 4
        assert_eq!(resultant(&poly(&[1, 0, 1]), &poly(&[0, 2])), BigInt::from(4));
        // shared root makes it vanish
        assert_eq!(
            resultant(&poly(&[-1, 0, 1]), &poly(&[-1, 1])),
            BigInt::zero()
        );
    }

    // t^6 p(q/t) = q^3 p(t), coefficient by coefficient, and then the
    // polygon's valuation multiset is symmetric about n/2.
    #[test]
    fn functional_equation_symmetry() {
        for q in [2u64, 3, 4, 9] {
            let (_, n) = crate::weilcheck::prime_power(q).unwrap();
            let p = WeilCandidate::new(q, 0, 0, 0).unwrap().p();
            scan_box(q, 0, |a1, a2, a3| {
                let w = WeilCandidate::new(q, a1, a2, a3).unwrap();
                let f = w.polynomial();
                let c = f.coefficients();
                let qb = BigInt::from(q);
                for j in 0..=6usize {
                    assert_eq!(&c[6 - j] * qb.pow((6 - j) as u32), &c[j] * qb.pow(3));
                }
                if theorem1_check(&w) {
                    let vals = newton_polygon(&f, p).root_valuations();
                    assert_eq!(vals.len(), 6);
                    let nn = rat(i64::from(n), 1);
                    for j in 0..3 {
                        assert_eq!(vals[j] + vals[5 - j], nn);
                    }
                }
            });
        }
    }

    #[test]
    fn ordinary_iff_a3_unit() {
        for q in [2u64, 4, 9] {
            let (p, n) = crate::weilcheck::prime_power(q).unwrap();
            scan_box(q, 0, |a1, a2, a3| {
                let w = WeilCandidate::new(q, a1, a2, a3).unwrap();
                if !theorem1_check(&w) {
                    return;
                }
                let g = newton_polygon(&w.polynomial(), p);
                let t = polygon_type(&g, n).unwrap();
                let a3_unit = valuation(&BigInt::from(a3), p) == Some(0);
                assert_eq!(t == PolygonType::Ordinary, a3_unit);
            });
        }
    }

    #[test]
    fn slopes_sum_to_constant_valuation() {
        for q in [2u64, 3, 8] {
            let (p, n) = crate::weilcheck::prime_power(q).unwrap();
            scan_box(q, 0, |a1, a2, a3| {
                let w = WeilCandidate::new(q, a1, a2, a3).unwrap();
                let g = newton_polygon(&w.polynomial(), p);
                let total: Rational64 = g
                    .segments()
                    .iter()
                    .map(|&(v, len)| v * rat(len as i64, 1))
                    .sum();
                assert_eq!(total, rat(3 * i64::from(n), 1));
            });
        }
    }

    // brute-force cross-check: coherent root towers mod p^16
    fn tower_has_root(f: &IntPolynomial, p: u64) -> bool {
        let mut modulus = BigInt::from(p);
        let mut level: Vec<BigInt> = (0..p)
            .map(BigInt::from)
            .filter(|r| (f.eval(r) % &modulus).is_zero())
            .collect();
        for _ in 1..16 {
            if level.is_empty() {
                return false;
            }
            let next_mod = &modulus * p;
            let mut next = Vec::new();
            for r in &level {
                for j in 0..p {
                    let cand = r + &modulus * j;
                    if (f.eval(&cand) % &next_mod).is_zero() {
                        next.push(cand);
                    }
                }
            }
            level = next;
            modulus = next_mod;
        }
        !level.is_empty()
    }

    #[test]
    fn qp_root_matches_tower_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for p in [2u64, 3, 5] {
            for _ in 0..200 {
                let deg = rng.gen_range(1..=6usize);
                let mut coeffs: Vec<i128> =
                    (0..deg).map(|_| rng.gen_range(-50..=50)).collect();
                coeffs.push(1);
                let f = poly(&coeffs);
                assert_eq!(
                    has_qp_root(&f, p),
                    tower_has_root(&f, p),
                    "disagreement for {f} at p = {p}"
                );
            }
        }
    }
}
