//! Independent verifiers. None of these share a decision path with the
//! main modules: the numeric check measures root moduli in floating point,
//! the Sturm check counts real cubic roots in exact surd arithmetic, and
//! the factor search proposes factors numerically but accepts them only by
//! exact division.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::exactmath::{sturm_count, SurdValue};
use crate::irreducibility::real_weil_cubic;
use crate::poly::IntPolynomial;
use crate::weilcheck::WeilCandidate;

/// Numeric roots of a polynomial together with their conjugate pairing;
/// real roots pair with themselves.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub pairing: Vec<(usize, usize)>,
}

/// Numeric Weil check: every complex root must satisfy
/// `| |z| − √q | < tol · √q`.
///
/// Roots come from Durand–Kerner iteration; if the iteration stalls (it
/// can, on repeated roots), the polynomial is split into its squarefree
/// parts and retried. Non-convergence after that is an explicit error,
/// never a verdict.
pub fn numeric_weil_check(w: &WeilCandidate, tol: f64) -> Result<bool, Error> {
    assert!(
        (1e-12..=1e-6).contains(&tol),
        "tolerance must lie in [1e-12, 1e-6]"
    );
    let f = w.polynomial();
    let s = (w.q() as f64).sqrt();
    let within = |roots: &[Complex64]| roots.iter().all(|z| (z.norm() - s).abs() < tol * s);
    if let Some(roots) = durand_kerner(&to_f64_coeffs(&f)) {
        if within(&roots) {
            return Ok(true);
        }
        // a root cluster means a repeated root, where the iteration
        // plateaus around sqrt(eps) accuracy; everything else is a real
        // modulus violation
        if !has_cluster(&roots) {
            return Ok(false);
        }
    }
    Ok(within(&squarefree_split_roots(&f)?))
}

fn has_cluster(roots: &[Complex64]) -> bool {
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if (a - b).norm() < 1e-5 * (1.0 + a.norm()) {
                return true;
            }
        }
    }
    false
}

/// Exact Weil check on the real Weil cubic: all three roots (with
/// multiplicity) must be real and lie in `[−2√q, 2√q]`.
///
/// Distinct roots in `(lo, hi]` are counted by Sturm chains on the
/// squarefree part; the left boundary is checked by surd evaluation
/// (boundary roots are exactly the delicate special-form cases); repeated
/// roots are counted through the cofactor recursively.
pub fn sturm_weil_check(w: &WeilCandidate) -> bool {
    let f = real_weil_cubic(w);
    let lo = SurdValue::sqrt_times(-2, w.q());
    let hi = SurdValue::sqrt_times(2, w.q());
    closed_count(&f, &lo, &hi) == 3
}

fn closed_count(f: &IntPolynomial, lo: &SurdValue, hi: &SurdValue) -> usize {
    if f.degree() == 0 {
        return 0;
    }
    let fsf = if cubic_disc_nonzero(f) == Some(true) {
        f.clone()
    } else {
        f.squarefree_part()
    };
    let fr = fsf.to_rational();
    let mut count = sturm_count(&fr, lo, hi).expect("squarefree over a real interval");
    if fr.eval_surd(lo).is_zero() {
        count += 1;
    }
    if fsf.degree() == f.degree() {
        return count;
    }
    let rest = f.div_exact(&fsf).expect("squarefree part divides");
    count + closed_count(&rest, lo, hi)
}

/// i128 fast path for the dominant case: a squarefree cubic, detected by a
/// nonzero discriminant. `None` means the answer must come from the gcd.
fn cubic_disc_nonzero(f: &IntPolynomial) -> Option<bool> {
    if f.degree() != 3 || !f.is_monic() {
        return None;
    }
    let c = f.to_i128_vec()?;
    let (d, cc, b, a) = (c[0], c[1], c[2], c[3]);
    debug_assert_eq!(a, 1);
    let disc = 18i128
        .checked_mul(b)?
        .checked_mul(cc)?
        .checked_mul(d)?
        .checked_sub(4i128.checked_mul(b.checked_mul(b)?.checked_mul(b)?)?.checked_mul(d)?)?
        .checked_add(b.checked_mul(b)?.checked_mul(cc.checked_mul(cc)?)?)?
        .checked_sub(4i128.checked_mul(cc.checked_mul(cc)?.checked_mul(cc)?)?)?
        .checked_sub(27i128.checked_mul(d)?.checked_mul(d)?)?;
    Some(disc != 0)
}

/// Numeric roots with multiplicity plus conjugate pairing. The roots of
/// each squarefree component are found separately, so repeated roots never
/// degrade the iteration.
pub fn root_set(f: &IntPolynomial) -> Result<RootSet, Error> {
    let mut roots = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        if g.degree() == 0 {
            continue;
        }
        let part = durand_kerner(&to_f64_coeffs(&g)).ok_or(Error::RootFinderDiverged)?;
        for z in part {
            for _ in 0..mult {
                roots.push(z);
            }
        }
    }
    let n = roots.len();
    let mut used = vec![false; n];
    let mut pairing = Vec::new();
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = roots[i].conj();
        let mut best = i;
        let mut dist = (roots[i] - target).norm();
        for (j, u) in used.iter().enumerate().skip(i + 1) {
            if !u {
                let d = (roots[j] - target).norm();
                if d < dist {
                    dist = d;
                    best = j;
                }
            }
        }
        if best != i {
            used[best] = true;
        }
        pairing.push((i, best));
    }
    Ok(RootSet { roots, pairing })
}

/// Searches for a rational factor of a monic degree-6 polynomial: every
/// conjugation-closed subset of 1..=5 roots proposes a candidate whose
/// coefficients must round cleanly to integers (within 0.25, per design);
/// exact division is the sole judge. Returns the first factorization in
/// subset order, or `None`.
pub fn numeric_factor_search(
    f: &IntPolynomial,
    tol: f64,
) -> Result<Option<(IntPolynomial, IntPolynomial)>, Error> {
    assert!(f.is_monic() && f.degree() == 6, "expects a monic sextic");
    assert!(tol > 0.0);
    let rs = root_set(f)?;
    // the pairing must genuinely close under conjugation at this tolerance
    for &(i, j) in &rs.pairing {
        if (rs.roots[i].conj() - rs.roots[j]).norm() > tol * (1.0 + rs.roots[i].norm()) {
            return Err(Error::RootFinderDiverged);
        }
    }
    let mut partner = [0usize; 6];
    for &(i, j) in &rs.pairing {
        partner[i] = j;
        partner[j] = i;
    }
    for mask in 1u32..(1 << 6) - 1 {
        if !(0..6).all(|i| mask & (1 << i) == 0 || mask & (1 << partner[i]) != 0) {
            continue;
        }
        // monic product over the chosen roots, ascending coefficients
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for (i, &z) in rs.roots.iter().enumerate() {
            if mask & (1 << i) != 0 {
                coeffs = mul_linear(&coeffs, z);
            }
        }
        let mut ints = Vec::with_capacity(coeffs.len());
        let mut clean = true;
        for c in &coeffs {
            let r = c.re.round();
            if c.im.abs() > 0.25 || (c.re - r).abs() > 0.25 {
                clean = false;
                break;
            }
            ints.push(r as i128);
        }
        if !clean {
            continue;
        }
        let candidate = IntPolynomial::from_i128(&ints);
        if let Some(cofactor) = f.div_exact(&candidate) {
            return Ok(Some((candidate, cofactor)));
        }
    }
    Ok(None)
}

/// Multiply an ascending coefficient vector by `(t − z)`.
fn mul_linear(coeffs: &[Complex64], z: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); coeffs.len() + 1];
    for (i, &c) in coeffs.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= z * c;
    }
    out
}

fn to_f64_coeffs(f: &IntPolynomial) -> Vec<f64> {
    f.coefficients()
        .iter()
        .map(|c| c.to_f64().expect("finite coefficient"))
        .collect()
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}

/// Durand–Kerner iteration on a monic polynomial (ascending f64
/// coefficients). Re-entrant; no global state. Converged when the update
/// norm falls below 1e-13 (relative); after the 500-sweep budget a final
/// step below 1e-10 still counts as converged — separated roots of large
/// polynomials can sit on a rounding-noise floor between the two, while a
/// repeated root plateaus around 1e-8 and stays `None`.
fn durand_kerner(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    debug_assert!((coeffs[n] - 1.0).abs() < 1e-9, "monic input expected");
    let scale = coeffs[0].abs().powf(1.0 / n as f64).max(1.0);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (1..=n).map(|k| seed.powu(k as u32) * scale).collect();
    let mut worst = f64::INFINITY;
    for _ in 0..500 {
        worst = 0.0;
        for i in 0..n {
            let value = horner(coeffs, z[i]);
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge apart and carry on
                denom = Complex64::new(1e-12, 1e-12);
            }
            let step = value / denom;
            z[i] -= step;
            worst = worst.max(step.norm() / (1.0 + z[i].norm()));
        }
        if worst < 1e-13 {
            return Some(z);
        }
    }
    if worst < 1e-10 {
        Some(z)
    } else {
        None
    }
}

fn squarefree_split_roots(f: &IntPolynomial) -> Result<Vec<Complex64>, Error> {
    let mut all = Vec::new();
    for (g, _) in f.squarefree_decomposition() {
        if g.degree() == 0 {
            continue;
        }
        all.extend(durand_kerner(&to_f64_coeffs(&g)).ok_or(Error::RootFinderDiverged)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::is_irreducible;
    use crate::weilcheck::{scan_box, theorem1_check};

    fn cand(q: u64, a1: i128, a2: i128, a3: i128) -> WeilCandidate {
        WeilCandidate::new(q, a1, a2, a3).unwrap()
    }

    #[test]
    fn numeric_examples() {
        // the six 6th roots of -8 all have modulus sqrt(2)
        assert!(numeric_weil_check(&cand(2, 0, 0, 0), 1e-9).unwrap());
        assert!(!numeric_weil_check(&cand(2, 9, 0, 0), 1e-9).unwrap());
        // special form: double roots at ±sqrt(5)
        assert!(numeric_weil_check(&cand(5, 1, -5, -10), 1e-9).unwrap());
    }

    #[test]
    fn sturm_examples() {
        assert!(sturm_weil_check(&cand(2, 1, 1, 1)));
        // boundary roots ±2*sqrt(5) exercise the surd evaluation path
        assert!(sturm_weil_check(&cand(5, 1, -5, -10)));
        assert!(!sturm_weil_check(&cand(2, 9, 0, 0)));
        // computed honestly: f = t^3 - t has all roots in range, and the
        // coefficient conditions agree
        let w = cand(2, 0, 5, 0);
        assert_eq!(sturm_weil_check(&w), theorem1_check(&w));
    }

    #[test]
    fn repeated_root_multiplicity_counts() {
        // (6, 18, 32) gives f = (t + 2)^3: one distinct root, multiplicity 3
        let w = cand(2, 6, 18, 32);
        assert!(sturm_weil_check(&w));
        assert!(theorem1_check(&w));
    }

    #[test]
    fn factor_search_examples() {
        let f = cand(2, 0, 1, 0).polynomial();
        let (a, b) = numeric_factor_search(&f, 1e-9).unwrap().expect("reducible");
        assert_eq!(a.mul(&b), f);

        let f = cand(2, 1, 1, 1).polynomial();
        assert!(numeric_factor_search(&f, 1e-9).unwrap().is_none());

        // q^3 Phi_7(t/sqrt(q)) at q = 4 is irreducible over Q
        let f = cand(4, 2, 4, 8).polynomial();
        assert!(numeric_factor_search(&f, 1e-9).unwrap().is_none());
    }

    #[test]
    fn factor_search_handles_special_form() {
        // (t^2 - 5)^2 (t^2 + t + 5): repeated roots via Yun splitting
        let f = cand(5, 1, -5, -10).polynomial();
        let (a, b) = numeric_factor_search(&f, 1e-9).unwrap().expect("reducible");
        assert_eq!(a.mul(&b), f);
    }

    #[test]
    fn oracles_agree_on_small_boxes() {
        for q in [2u64, 3] {
            scan_box(q, 0, |a1, a2, a3| {
                let w = cand(q, a1, a2, a3);
                let t = theorem1_check(&w);
                assert_eq!(sturm_weil_check(&w), t, "sturm vs thm at {q} {a1} {a2} {a3}");
                assert_eq!(
                    numeric_weil_check(&w, 1e-9).unwrap(),
                    t,
                    "numeric vs thm at {q} {a1} {a2} {a3}"
                );
            });
        }
    }

    #[test]
    fn factor_search_matches_irreducibility() {
        for q in [2u64, 3, 4, 5] {
            scan_box(q, 0, |a1, a2, a3| {
                let w = cand(q, a1, a2, a3);
                if theorem1_check(&w) {
                    let found = numeric_factor_search(&w.polynomial(), 1e-9)
                        .unwrap()
                        .is_some();
                    assert_eq!(found, !is_irreducible(&w), "at {q} {a1} {a2} {a3}");
                }
            });
        }
    }

    #[test]
    fn tolerance_stability() {
        for q in [2u64, 3] {
            scan_box(q, 0, |a1, a2, a3| {
                let w = cand(q, a1, a2, a3);
                let reference = numeric_weil_check(&w, 1e-9).unwrap();
                for tol in [1e-10, 1e-8, 1e-7] {
                    assert_eq!(numeric_weil_check(&w, tol).unwrap(), reference);
                }
            });
        }
    }

    #[test]
    fn root_set_is_conjugation_closed() {
        let f = cand(2, 1, 3, 0).polynomial();
        let rs = root_set(&f).unwrap();
        assert_eq!(rs.roots.len(), 6);
        for &(i, j) in &rs.pairing {
            assert!((rs.roots[i].conj() - rs.roots[j]).norm() < 1e-8);
        }
    }
}
