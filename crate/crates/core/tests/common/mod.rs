//! Shared generators and numerical helpers for the integration suites.

#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::Ratio;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use selfinv::forms::{SelfInversiveForm, Space};
use selfinv::numeric::{ComplexDouble, GaussianRational, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational with numerator in `[-max_num, max_num]` and denominator
/// in `[1, max_den]`.
pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    Ratio::new(
        BigInt::from(rng.gen_range(-max_num..=max_num)),
        BigInt::from(rng.gen_range(1..=max_den)),
    )
}

pub fn gaussian(rng: &mut impl Rng) -> GaussianRational {
    GaussianRational::new(rational(rng, 10, 10), rational(rng, 10, 10))
}

/// Random valid space-A form with degree parameter `n`; monic on request.
pub fn valid_a_form(rng: &mut impl Rng, n: usize, monic: bool) -> SelfInversiveForm {
    let len = n + 2;
    let mut zeta = vec![GaussianRational::zero(); len];
    for k in 0..=(len - 1) / 2 {
        let mirror = len - 1 - k;
        if mirror == k {
            zeta[k] = GaussianRational::from_rational(rational(rng, 10, 10));
        } else {
            let z = gaussian(rng);
            zeta[mirror] = z.conj();
            zeta[k] = z;
        }
    }
    if monic {
        zeta[0] = GaussianRational::one();
        zeta[len - 1] = GaussianRational::one();
    }
    let form = SelfInversiveForm::new(Space::A, zeta).unwrap();
    assert!(form.validate());
    form
}

/// Random valid space-B form. For odd `n` the mirror rule gains a sign and
/// the middle coefficient is purely imaginary; such forms cannot be monic,
/// so `monic` is only honored for even `n`.
pub fn valid_b_form(rng: &mut impl Rng, n: usize, monic: bool) -> SelfInversiveForm {
    let len = n + 2;
    let odd = n % 2 == 1;
    let mut zeta = vec![GaussianRational::zero(); len];
    for k in 0..=(len - 1) / 2 {
        let mirror = len - 1 - k;
        if mirror == k {
            zeta[k] = if odd {
                GaussianRational::new(
                    Rational::from_integer(BigInt::from(0)),
                    rational(rng, 10, 10),
                )
            } else {
                GaussianRational::from_rational(rational(rng, 10, 10))
            };
        } else {
            let z = gaussian(rng);
            zeta[mirror] = if odd { -&z.conj() } else { z.conj() };
            zeta[k] = z;
        }
    }
    if monic && !odd {
        zeta[0] = GaussianRational::one();
        zeta[len - 1] = GaussianRational::one();
    }
    let form = SelfInversiveForm::new(Space::B, zeta).unwrap();
    assert!(form.validate());
    form
}

/// Greedy multiset comparison with a magnitude-scaled tolerance.
pub fn multisets_close(a: &[ComplexDouble], b: &[ComplexDouble], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for &x in a {
        let mut best: Option<(usize, f64)> = None;
        for (j, &y) in b.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (x - y).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d <= tol * (1.0 + x.norm()) => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// Floating-point determinant of the power-sum matrix built straight from
/// a root multiset; an oracle that bypasses Newton's identities entirely.
pub fn float_power_sum_det(roots: &[ComplexDouble]) -> ComplexDouble {
    let n = roots.len() - 1;
    let h = |m: i64| -> ComplexDouble { roots.iter().map(|t| t.powi(m as i32)).sum() };
    let size = n + 1;
    let mut m: Vec<Vec<ComplexDouble>> = (0..size)
        .map(|r| (0..size).map(|c| h(r as i64 - c as i64)).collect())
        .collect();
    let mut det = ComplexDouble::new(1.0, 0.0);
    for k in 0..size {
        let pivot = (k..size)
            .max_by(|&i, &j| m[i][k].norm().partial_cmp(&m[j][k].norm()).unwrap())
            .unwrap();
        if m[pivot][k].norm() == 0.0 {
            return ComplexDouble::new(0.0, 0.0);
        }
        if pivot != k {
            m.swap(k, pivot);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..size {
            let factor = m[i][k] / m[k][k];
            for j in k..size {
                let sub = factor * m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}
