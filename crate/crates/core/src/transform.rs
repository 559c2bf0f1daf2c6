//! The linear isomorphisms between self-inversive and real binary forms,
//! together with monic normalization, deflation, and the Möbius root
//! correspondence.
//!
//! The forward maps substitute `T = i(X + iY), U = i(X - iY)` (space A) or
//! `T = X + iY, U = X - iY` (space B, even degree parameter). For odd `n`
//! the B substitution carries an extra factor `e^{i pi / (2(n+1))}` per
//! variable; its `(n+1)`-th power is exactly `i`, so the expansion stays in
//! Q(i) and the whole path remains exact. Ground truth for the A map is the
//! substitution expansion; the closed-form coefficient formulas are a second
//! implementation checked against it.

use alloc::vec;
use alloc::vec::Vec;

use num::bigint::BigInt;
use num::integer::binomial;
use num::rational::Ratio;
use num::{Float, Zero};

use crate::forms::{FloatForm, RealBinaryForm, SelfInversiveForm, Space};
use crate::numeric::{i_power, sign_pow, ComplexDouble, GaussianRational, Rational};
use crate::{Error, Result};

/// Degree parity selector for [`psi_inverse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A root of the complex form paired with its image on the real side under
/// `x = i (t + 1) / (t - 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootPair {
    /// Projective root `(t : 1)` of the self-inversive form.
    pub t: ComplexDouble,
    /// Projective root `(x : 1)` of the real form; meaningless when
    /// `at_infinity` is set.
    pub x: ComplexDouble,
    /// `t = 1` maps to the point at infinity `(1 : 0)`.
    pub at_infinity: bool,
    /// The image is real exactly when `|t| = 1` (and `t != 1`).
    pub real: bool,
}

fn gr_big(b: BigInt) -> GaussianRational {
    GaussianRational::from_rational(Ratio::from_integer(b))
}

fn binom(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// Coefficients of `(X + iY)^a (X - iY)^b`; entry `m` multiplies
/// `X^{a+b-m} Y^m`.
fn expand_conjugate_pair(a: usize, b: usize) -> Vec<GaussianRational> {
    let left: Vec<GaussianRational> = (0..=a)
        .map(|p| &gr_big(binom(a, p)) * &i_power(p))
        .collect();
    let right: Vec<GaussianRational> = (0..=b)
        .map(|q| &gr_big(binom(b, q)) * &i_power(q).conj())
        .collect();
    convolve(&left, &right)
}

/// Coefficients of `(T + U)^a (T - U)^b`; entry `m` multiplies
/// `T^{a+b-m} U^m`.
fn expand_sum_difference(a: usize, b: usize) -> Vec<GaussianRational> {
    let left: Vec<GaussianRational> = (0..=a).map(|p| gr_big(binom(a, p))).collect();
    let right: Vec<GaussianRational> = (0..=b)
        .map(|q| gr_big(binom(b, q)).scale(&sign_pow(q)))
        .collect();
    convolve(&left, &right)
}

fn convolve(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (p, ap) in a.iter().enumerate() {
        if ap.is_zero() {
            continue;
        }
        for (q, bq) in b.iter().enumerate() {
            out[p + q] = &out[p + q] + &(ap * bq);
        }
    }
    out
}

fn realify(acc: Vec<GaussianRational>) -> Result<RealBinaryForm> {
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.im.is_zero() {
            return Err(Error::InvalidForm(
                "substitution left a nonzero imaginary part; the coefficient symmetry is violated",
            ));
        }
        coeffs.push(c.re);
    }
    RealBinaryForm::new(coeffs)
}

/// Expands an A-space form under `T = i(X + iY), U = i(X - iY)`. The result
/// has exactly real coefficients; a nonzero imaginary residual means the
/// input violates the A symmetry.
pub fn phi(form: &SelfInversiveForm) -> Result<RealBinaryForm> {
    if form.space() != Space::A {
        return Err(Error::WrongSpace("phi expects a space-A form"));
    }
    let n = form.n();
    let lead = i_power(n + 1);
    let mut acc = vec![GaussianRational::zero(); n + 2];
    for (j, z) in form.zeta().iter().enumerate() {
        if z.is_zero() {
            continue;
        }
        let scale = (&lead * z).scale(&sign_pow(j));
        for (m, e) in expand_conjugate_pair(n + 1 - j, j).iter().enumerate() {
            if !e.is_zero() {
                acc[m] = &acc[m] + &(&scale * e);
            }
        }
    }
    realify(acc)
}

/// Inverse of [`phi`]: substitutes `X = -(i/2)(T + U), Y = -(1/2)(T - U)`
/// into a real form. Total on real forms; the image always satisfies the A
/// symmetry.
pub fn phi_inverse(g: &RealBinaryForm) -> SelfInversiveForm {
    let n = g.n();
    let half = Ratio::new(BigInt::from(1), BigInt::from(2));
    let minus_i_half = GaussianRational::i().scale(&-half.clone());
    let minus_half = GaussianRational::from_rational(-half);
    let mut acc = vec![GaussianRational::zero(); n + 2];
    for (j, a) in g.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let scale = (&minus_i_half.pow((n + 1 - j) as u32) * &minus_half.pow(j as u32)).scale(a);
        for (m, e) in expand_sum_difference(n + 1 - j, j).iter().enumerate() {
            if !e.is_zero() {
                acc[m] = &acc[m] + &(&scale * e);
            }
        }
    }
    let zeta = acc
        .into_iter()
        .enumerate()
        .map(|(m, c)| c.scale(&sign_pow(m)))
        .collect();
    SelfInversiveForm::new(Space::A, zeta).expect("length preserved")
}

/// Expands a B-space form under `T = X + iY, U = X - iY` (even `n`); for
/// odd `n` the substitution gains a unimodular factor whose `(n+1)`-th
/// power is exactly `i`, so the expansion stays exact.
pub fn psi(form: &SelfInversiveForm) -> Result<RealBinaryForm> {
    if form.space() != Space::B {
        return Err(Error::WrongSpace("psi expects a space-B form"));
    }
    let n = form.n();
    let mut acc = vec![GaussianRational::zero(); n + 2];
    for (j, z) in form.zeta().iter().enumerate() {
        if z.is_zero() {
            continue;
        }
        for (m, e) in expand_conjugate_pair(n + 1 - j, j).iter().enumerate() {
            if !e.is_zero() {
                acc[m] = &acc[m] + &(z * e);
            }
        }
    }
    if n % 2 == 1 {
        let i = GaussianRational::i();
        for c in &mut acc {
            *c = &*c * &i;
        }
    }
    realify(acc)
}

/// Inverse of [`psi`]. The parity argument must match `g`; it selects the
/// unimodular factor undone on the odd-degree path.
pub fn psi_inverse(g: &RealBinaryForm, parity: Parity) -> Result<SelfInversiveForm> {
    let n = g.n();
    let matches = match parity {
        Parity::Even => n % 2 == 0,
        Parity::Odd => n % 2 == 1,
    };
    if !matches {
        return Err(Error::ParityMismatch);
    }
    let half = Ratio::new(BigInt::from(1), BigInt::from(2));
    let half_gr = GaussianRational::from_rational(half.clone());
    let minus_i_half = GaussianRational::i().scale(&-half);
    let mut acc = vec![GaussianRational::zero(); n + 2];
    for (j, a) in g.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // X = (T + U)/2 and Y = -(i/2)(T - U).
        let scale = (&half_gr.pow((n + 1 - j) as u32) * &minus_i_half.pow(j as u32)).scale(a);
        for (m, e) in expand_sum_difference(n + 1 - j, j).iter().enumerate() {
            if !e.is_zero() {
                acc[m] = &acc[m] + &(&scale * e);
            }
        }
    }
    let zeta = if n % 2 == 1 {
        let minus_i = i_power(3);
        acc.into_iter().map(|c| &c * &minus_i).collect()
    } else {
        acc
    };
    SelfInversiveForm::new(Space::B, zeta)
}

/// Closed-form coefficients of [`phi`] as explicit binomial sums over the
/// zeta sequence; must agree with the substitution expansion exactly.
pub fn phi_closed_form(form: &SelfInversiveForm) -> Result<RealBinaryForm> {
    if form.space() != Space::A {
        return Err(Error::WrongSpace("phi_closed_form expects a space-A form"));
    }
    let n = form.n();
    let z = form.zeta();
    let i = GaussianRational::i();
    let mut acc = vec![GaussianRational::zero(); n + 2];

    // Inner alternating double-binomial weight shared by all four cases.
    let inner = |k: usize, h: usize, parity: usize| -> Rational {
        let mut s = Rational::from_integer(BigInt::from(0));
        for j in 0..=h {
            let w = &binom(k, h - j) * &binom(n + 1 - 2 * k, 2 * j + parity);
            s += Ratio::from_integer(w) * sign_pow(j);
        }
        s
    };

    if n % 2 == 0 {
        let half = n / 2;
        for h in 0..=half {
            let sum_out = &z[0] + &z[n + 1];
            let diff_out = &(&z[0] - &z[n + 1]) * &i;
            let mut odd = sum_out
                .scale(&(Ratio::from_integer(binom(n + 1, 2 * h + 1)) * sign_pow(half + h + 1)));
            let mut even =
                diff_out.scale(&(Ratio::from_integer(binom(n + 1, 2 * h)) * sign_pow(half + h)));
            for k in 1..=half {
                let sum_k = &z[k] + &z[n + 1 - k];
                let diff_k = &(&z[k] - &z[n + 1 - k]) * &i;
                odd = &odd + &sum_k.scale(&(inner(k, h, 1) * sign_pow(half + 1) * sign_pow(k)));
                even = &even + &diff_k.scale(&(inner(k, h, 0) * sign_pow(half) * sign_pow(k)));
            }
            acc[2 * h + 1] = odd;
            acc[2 * h] = even;
        }
    } else {
        let half = (n - 1) / 2;
        let mid = (n + 1) / 2;
        for h in 0..=half {
            let diff_out = &(&z[0] - &z[n + 1]) * &i;
            let mut odd =
                diff_out.scale(&(Ratio::from_integer(binom(n + 1, 2 * h + 1)) * sign_pow(mid + h)));
            for k in 1..=half {
                let diff_k = &(&z[k] - &z[n + 1 - k]) * &i;
                odd = &odd + &diff_k.scale(&(inner(k, h, 1) * sign_pow(mid) * sign_pow(k)));
            }
            acc[2 * h + 1] = odd;
        }
        for h in 0..=mid {
            let sum_out = &z[0] + &z[n + 1];
            let mut even =
                sum_out.scale(&(Ratio::from_integer(binom(n + 1, 2 * h)) * sign_pow(mid + h)));
            even = &even + &z[mid].scale(&Ratio::from_integer(binom(mid, h)));
            for k in 1..=half {
                let sum_k = &z[k] + &z[n + 1 - k];
                even = &even + &sum_k.scale(&(inner(k, h, 0) * sign_pow(mid) * sign_pow(k)));
            }
            acc[2 * h] = even;
        }
    }
    realify(acc)
}

/// Rescales and rotates a floating-point A-form so that
/// `zeta_0 = zeta_{n+1} = 1`, returning the form together with the
/// scale-rotation factor `w` (so `w^{n+1} = zeta_0`, principal branch).
/// The coefficient symmetry is preserved up to rounding.
pub fn normalize_monic(form: &FloatForm) -> Result<(FloatForm, ComplexDouble)> {
    if form.space() != Space::A {
        return Err(Error::WrongSpace("normalize_monic expects a space-A form"));
    }
    let z0 = form.zeta()[0];
    if z0.re == 0.0 && z0.im == 0.0 {
        return Err(Error::LeadingCoefficientZero);
    }
    let n = form.n();
    let np1 = (n + 1) as f64;
    let r = Float::powf(z0.norm(), 1.0 / np1);
    let theta = z0.arg() / np1;
    let scale = z0.norm(); // r^{n+1}
    let zeta = form
        .zeta()
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let twist = 2.0 * k as f64 - np1;
            z * ComplexDouble::from_polar(1.0, theta * twist) / scale
        })
        .collect();
    let normalized = FloatForm::new(Space::A, zeta)?;
    Ok((normalized, ComplexDouble::from_polar(r, theta)))
}

/// Exact synthetic division of a monic A-form by `(T - U)`. Requires the
/// form to vanish at `(1, 1)`; the quotient is again a monic A-form, one
/// degree lower.
pub fn deflate(form: &SelfInversiveForm) -> Result<SelfInversiveForm> {
    if form.space() != Space::A {
        return Err(Error::WrongSpace("deflate expects a space-A form"));
    }
    if !form.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = form.n();
    if n == 0 {
        // The only monic degree-1 form is T - U; its quotient is constant.
        return Err(Error::DegreeTooSmall);
    }
    let s = form.signed_coefficients();
    let mut q = Vec::with_capacity(n + 1);
    q.push(s[0].clone());
    for j in 1..=n {
        let next = &s[j] + &q[j - 1];
        q.push(next);
    }
    if &s[n + 1] + &q[n] != GaussianRational::zero() {
        return Err(Error::NotDivisible);
    }
    let zeta = q
        .into_iter()
        .enumerate()
        .map(|(j, c)| c.scale(&sign_pow(j)))
        .collect();
    SelfInversiveForm::new(Space::A, zeta)
}

/// Applies `x = i (t + 1) / (t - 1)` to each root. Values within `tol` of
/// `t = 1` are flagged as mapping to infinity; values with `|t| = 1` within
/// `tol` are classified as mapping to the real axis.
pub fn map_roots(roots_t: &[ComplexDouble], tol: f64) -> Vec<RootPair> {
    roots_t
        .iter()
        .map(|&t| {
            let at_infinity = (t - 1.0).norm() <= tol;
            let on_circle = Float::abs(t.norm() - 1.0) <= tol;
            let x = if at_infinity {
                ComplexDouble::new(f64::INFINITY, 0.0)
            } else {
                ComplexDouble::i() * (t + 1.0) / (t - 1.0)
            };
            RootPair {
                t,
                x,
                at_infinity,
                real: on_circle && !at_infinity,
            }
        })
        .collect()
}

/// Multiplies a form by `(T - U)`, the inverse of [`deflate`].
pub fn inflate(form: &SelfInversiveForm) -> Result<SelfInversiveForm> {
    let linear = SelfInversiveForm::new(
        Space::A,
        vec![GaussianRational::one(), GaussianRational::one()],
    )?;
    form.mul(&linear)
}
