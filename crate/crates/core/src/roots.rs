//! Floating-point root finding for the dehomogenized forms and
//! classification of roots as on-circle or inversion-symmetric pairs.
//!
//! The finder runs simultaneous (Aberth-Ehrlich) iteration from perturbed
//! circle guesses. No eigenvalue machinery; at the degrees this crate
//! targets the iteration is accurate and self-contained.

use alloc::vec::Vec;

use num::Float;

use crate::numeric::ComplexDouble;
use crate::{Error, Result};

const MAX_SWEEPS: u32 = 200;
const UPDATE_TOLERANCE: f64 = 1e-13;

/// All roots of a polynomial together with residuals and the default
/// circle/pair classification counts.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<ComplexDouble>,
    /// `|p(root)|` per root, against the original coefficients.
    pub residuals: Vec<f64>,
    pub circle_count: usize,
    pub pair_count: usize,
}

/// Index partition of a root set: roots on the unit circle, inversion
/// -symmetric pairs `(t, 1/conj(t))`, and leftovers that fit neither.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub on_circle: Vec<usize>,
    pub symmetric_pairs: Vec<(usize, usize)>,
    pub unpaired: Vec<usize>,
    /// Roots counted as on-circle that would also pair with an off-circle
    /// root within tolerance; circle classification wins the tie.
    pub ambiguous: usize,
}

/// Evaluates `p` and `p'` at `z` by a fused Horner pass. Coefficients are
/// leading-first.
fn horner_with_derivative(
    coeffs: &[ComplexDouble],
    z: ComplexDouble,
) -> (ComplexDouble, ComplexDouble) {
    let mut p = ComplexDouble::new(0.0, 0.0);
    let mut dp = ComplexDouble::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Finds all roots of the polynomial with the given leading-first
/// coefficients using Aberth-Ehrlich iteration. Converged when the largest
/// update drops below 1e-13; gives up after 200 sweeps, which signals an
/// ill-conditioned input (typically a multiple root).
pub fn find_roots(coeffs: &[ComplexDouble]) -> Result<RootSet> {
    if coeffs.len() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    if coeffs[0].norm() == 0.0 {
        return Err(Error::LeadingCoefficientZero);
    }
    let degree = coeffs.len() - 1;
    let lead = coeffs[0];
    let monic: Vec<ComplexDouble> = coeffs.iter().map(|&c| c / lead).collect();

    // Cauchy bound on the root moduli.
    let radius = 1.0 + monic.iter().skip(1).map(|c| c.norm()).fold(0.0, f64::max);

    // Perturbed circle: irrational-ish angle offset and a mild radius
    // stagger so no guess starts on a symmetry axis of the polynomial.
    let mut z: Vec<ComplexDouble> = (0..degree)
        .map(|k| {
            let angle = core::f64::consts::TAU * (k as f64) / (degree as f64) + 0.435;
            let r = radius * (0.85 + 0.3 * ((k % 7) as f64) / 7.0);
            ComplexDouble::from_polar(r, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut max_update = 0.0f64;
        for k in 0..degree {
            let (p, dp) = horner_with_derivative(&monic, z[k]);
            let newton = if dp.norm() == 0.0 {
                // Flat spot: nudge off it instead of dividing by zero.
                ComplexDouble::new(UPDATE_TOLERANCE * 10.0, 0.0)
            } else {
                p / dp
            };
            let mut repulsion = ComplexDouble::new(0.0, 0.0);
            for j in 0..degree {
                if j != k {
                    let d = z[k] - z[j];
                    if d.norm() > 0.0 {
                        repulsion += 1.0 / d;
                    }
                }
            }
            let denom = ComplexDouble::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 {
                newton
            } else {
                newton / denom
            };
            z[k] -= step;
            max_update = f64::max(max_update, step.norm());
        }
        if max_update < UPDATE_TOLERANCE {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let residuals: Vec<f64> = z
        .iter()
        .map(|&root| {
            let mut p = ComplexDouble::new(0.0, 0.0);
            for &c in coeffs {
                p = p * root + c;
            }
            p.norm()
        })
        .collect();

    let classification = classify_roots(&z, 1e-8);
    Ok(RootSet {
        circle_count: classification.on_circle.len(),
        pair_count: classification.symmetric_pairs.len(),
        roots: z,
        residuals,
    })
}

/// Partitions roots by `| |t| - 1 | <= tol` (on the circle) and greedy
/// matching of the rest into `(t, 1/conj(t))` pairs under the relative
/// criterion `|t_j conj(t_k) - 1| <= tol (1 + |t_j|^2)`. Remaining indices
/// are reported unpaired, which signals a non-self-inversive input.
pub fn classify_roots(roots: &[ComplexDouble], tol: f64) -> Classification {
    let n = roots.len();
    let on_circle_flag: Vec<bool> = roots
        .iter()
        .map(|t| Float::abs(t.norm() - 1.0) <= tol)
        .collect();
    let pair_metric = |j: usize, k: usize| (roots[j] * roots[k].conj() - 1.0).norm();
    let pair_bound = |j: usize| tol * (1.0 + roots[j].norm_sqr());

    let mut used = on_circle_flag.clone();
    let mut symmetric_pairs = Vec::new();
    for j in 0..n {
        if used[j] {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for k in (j + 1)..n {
            if used[k] {
                continue;
            }
            let m = pair_metric(j, k);
            if m <= pair_bound(j) && best.map_or(true, |(_, b)| m < b) {
                best = Some((k, m));
            }
        }
        if let Some((k, _)) = best {
            used[j] = true;
            used[k] = true;
            symmetric_pairs.push((j, k));
        }
    }

    let on_circle: Vec<usize> = (0..n).filter(|&j| on_circle_flag[j]).collect();
    let unpaired: Vec<usize> = (0..n).filter(|&j| !used[j] && !on_circle_flag[j]).collect();

    // A circle root that also pairs with some off-circle root sits in both
    // classes; record how often the circle tie-break fired.
    let ambiguous = on_circle
        .iter()
        .filter(|&&j| {
            (0..n).any(|k| k != j && !on_circle_flag[k] && pair_metric(j, k) <= pair_bound(j))
        })
        .count();

    Classification {
        on_circle,
        symmetric_pairs,
        unpaired,
        ambiguous,
    }
}
