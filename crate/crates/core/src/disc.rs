//! Exact determinants and the two discriminant routes: the power-sum
//! determinant identity and an independent Sylvester-resultant oracle,
//! plus circle-root classification and sampling of the all-roots-on-circle
//! region.
//!
//! For a monic form with degree parameter `n` the discriminant of the
//! corresponding real polynomial equals `2^{n(n+1)}` times the determinant
//! of the power-sum matrix. The resultant route computes the same value as
//! `(-1)^{N(N-1)/2} Res(g, g') / c_0` with `N = n + 1`; the two must agree
//! exactly, which the acceptance suite checks at zero tolerance. The two
//! routes share no matrix code on purpose.

use alloc::vec;
use alloc::vec::Vec;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{Float, One, Zero};

use crate::forms::{FloatForm, RealBinaryForm, SelfInversiveForm, Space};
use crate::numeric::{rational_sign, ComplexDouble, GaussianRational, Rational};
use crate::roots::{classify_roots, find_roots};
use crate::symfunc::{b_to_a_coefficients, build_hankel, power_sums, HankelMatrix};
use crate::transform::{deflate, phi, psi};
use crate::{Error, Result};

/// Everything the discriminant pipeline reports for one form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantReport {
    /// The discriminant of the corresponding real polynomial.
    pub dis: Rational,
    /// Determinant of the power-sum matrix.
    pub det_h: Rational,
    /// Whether `dis = 2^{n(n+1)} det_h` held against the resultant oracle
    /// (trivially true when the oracle was not run).
    pub scale_check: bool,
    /// Sign of `det_h` as -1, 0, or +1.
    pub sign: i32,
    /// Number of roots on the unit circle, when the roots are distinct and
    /// the numerical finder converged.
    pub circle_roots: Option<usize>,
}

/// Outcome of the circle-count sign test for one form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleClassification {
    /// Number of roots on the unit circle (within tolerance).
    pub circle_roots: usize,
    /// Whether `sgn det H = (-1)^{(n+1-k)/2}` held for the counted `k`.
    pub consistent: bool,
    /// Sign of the exact determinant.
    pub det_sign: i32,
    /// Multiplicity of the root at `(1 : 1)`, i.e. how many times `(T - U)`
    /// divides the form.
    pub deflations: usize,
}

/// Exact determinant of the power-sum matrix by fraction-free elimination.
pub fn det_exact(matrix: &HankelMatrix) -> GaussianRational {
    bareiss_gaussian(matrix.rows().to_vec())
}

/// Bareiss elimination over Q(i) with row pivoting and sign tracking.
/// Singular matrices yield zero.
pub fn bareiss_gaussian(mut m: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = m.len();
    if n == 0 {
        return GaussianRational::one();
    }
    let mut negate = false;
    let mut prev_pivot = GaussianRational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return GaussianRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                // Exact by the Bareiss identity; prev_pivot is nonzero.
                m[i][j] = num.checked_div(&prev_pivot).expect("nonzero pivot");
            }
            m[i][k] = GaussianRational::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Bareiss elimination over the rationals; kept separate from the Q(i)
/// kernel so the resultant oracle does not share code with the power-sum
/// route it validates.
fn bareiss_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut negate = false;
    let mut prev_pivot = Rational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev_pivot;
            }
            m[i][k] = Rational::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `2^{n(n+1)}` as a rational.
fn hankel_scale(n: usize) -> Rational {
    Ratio::from_integer(BigInt::one() << (n * (n + 1)))
}

/// Determinant of the power-sum matrix of a monic form, routed through the
/// space-A relabel for space-B inputs. The value must be exactly real;
/// a nonzero imaginary part means the input symmetry is violated.
fn hankel_determinant(form: &SelfInversiveForm) -> Result<Rational> {
    let a_form = match form.space() {
        Space::A => form.clone(),
        Space::B => b_to_a_coefficients(form)?,
    };
    let det = det_exact(&build_hankel(&power_sums(&a_form)?));
    if !det.im.is_zero() {
        return Err(Error::InvalidForm(
            "power-sum determinant has a nonzero imaginary part; the coefficient symmetry is violated",
        ));
    }
    Ok(det.re)
}

/// Discriminant of the real polynomial corresponding to a monic form, as
/// `2^{n(n+1)}` times the power-sum determinant. Space A for every `n`,
/// space B for even `n`.
pub fn dis_via_hankel(form: &SelfInversiveForm) -> Result<Rational> {
    Ok(hankel_determinant(form)? * hankel_scale(form.n()))
}

/// Independent discriminant oracle: `(-1)^{N(N-1)/2} Res(g, g') / c_0` via
/// the Sylvester matrix, `N` the degree of `g(X, 1)`. Requires a nonzero
/// leading coefficient.
pub fn dis_via_resultant(g: &RealBinaryForm) -> Result<Rational> {
    if g.coeff(0).is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    let f: Vec<Rational> = g.coeffs().to_vec();
    let degree = g.degree();
    let derivative: Vec<Rational> = (0..degree)
        .map(|j| &f[j] * Ratio::from_integer(BigInt::from((degree - j) as u64)))
        .collect();
    let res = resultant(&f, &derivative);
    let dis = res / g.coeff(0);
    if (degree * (degree - 1) / 2) % 2 == 1 {
        Ok(-dis)
    } else {
        Ok(dis)
    }
}

/// Resultant of two polynomials (leading-first coefficients) as the
/// determinant of their Sylvester matrix.
fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let p = f.len() - 1;
    let q = g.len() - 1;
    if p + q == 0 {
        return Rational::one();
    }
    let size = p + q;
    let mut m = vec![vec![Rational::zero(); size]; size];
    for row in 0..q {
        for (j, c) in f.iter().enumerate() {
            m[row][row + j] = c.clone();
        }
    }
    for row in 0..p {
        for (j, c) in g.iter().enumerate() {
            m[q + row][row + j] = c.clone();
        }
    }
    bareiss_rational(m)
}

/// Counts roots on the unit circle and checks the sign law
/// `sgn det H = (-1)^{(n+1-k)/2}`. Requires distinct roots, i.e. a nonzero
/// determinant.
pub fn classify_circle_roots(form: &SelfInversiveForm, tol: f64) -> Result<CircleClassification> {
    let det = hankel_determinant(form)?;
    if det.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let det_sign = rational_sign(&det);
    let rs = find_roots(&form.univariate_complex())?;
    let k = classify_roots(&rs.roots, tol).on_circle.len();
    let n = form.n();
    let consistent = (n + 1 - k) % 2 == 0 && {
        let expected = if ((n + 1 - k) / 2) % 2 == 0 { 1 } else { -1 };
        det_sign == expected
    };
    Ok(CircleClassification {
        circle_roots: k,
        consistent,
        det_sign,
        deflations: root_at_one_multiplicity(form),
    })
}

/// Multiplicity of `(T - U)` in a monic space-A form, computed exactly.
/// Zero for forms that do not vanish at `(1, 1)`.
pub fn root_at_one_multiplicity(form: &SelfInversiveForm) -> usize {
    if form.space() != Space::A {
        return 0;
    }
    let one = GaussianRational::one();
    let mut count = 0;
    let mut current = form.clone();
    loop {
        if !current.evaluate(&one, &one).is_zero() {
            return count;
        }
        count += 1;
        if current.n() == 0 {
            // The monic degree-1 form is exactly T - U; nothing remains.
            return count;
        }
        match deflate(&current) {
            Ok(next) => current = next,
            Err(_) => return count,
        }
    }
}

/// Strips every `(T - U)` factor from a monic space-A form. Returns the
/// deflated form (or `None` when the form was a pure power of `T - U`)
/// together with the number of factors removed.
pub fn deflate_fully(form: &SelfInversiveForm) -> Result<(Option<SelfInversiveForm>, usize)> {
    if form.space() != Space::A {
        return Err(Error::WrongSpace("deflation applies to space-A forms"));
    }
    if !form.is_monic() {
        return Err(Error::NotMonic);
    }
    let one = GaussianRational::one();
    let mut current = form.clone();
    let mut count = 0;
    while current.evaluate(&one, &one).is_zero() {
        if current.n() == 0 {
            return Ok((None, count + 1));
        }
        current = deflate(&current)?;
        count += 1;
    }
    Ok((Some(current), count))
}

/// Full report for one monic form: both discriminant values, the scale
/// identity check, the determinant sign, and the circle-root count.
pub fn report(form: &SelfInversiveForm, run_oracle: bool, tol: f64) -> Result<DiscriminantReport> {
    let det_h = hankel_determinant(form)?;
    let dis = &det_h * hankel_scale(form.n());
    let scale_check = if run_oracle {
        let g = match form.space() {
            Space::A => phi(form)?,
            Space::B => psi(form)?,
        };
        dis_via_resultant(&g)? == dis
    } else {
        true
    };
    let circle_roots = if det_h.is_zero() {
        None
    } else {
        find_roots(&form.univariate_complex())
            .ok()
            .map(|rs| classify_roots(&rs.roots, tol).on_circle.len())
    };
    Ok(DiscriminantReport {
        sign: rational_sign(&det_h),
        dis,
        det_h,
        scale_check,
        circle_roots,
    })
}

/// Builds the monic space-A form whose roots are `e^{i theta_j}` for the
/// given angles. The angles must sum to zero (so the product of the roots
/// is one) and be pairwise distinct modulo a full turn; a repeated angle
/// lies on the boundary where the determinant vanishes.
///
/// The mirror half of the coefficient sequence is produced by conjugation,
/// so the output satisfies the space-A symmetry exactly even in floating
/// point, and rationalizing it yields a valid monic form.
pub fn sample_w(angles: &[f64]) -> Result<FloatForm> {
    if angles.is_empty() {
        return Err(Error::DegreeTooSmall);
    }
    let sum: f64 = angles.iter().sum();
    if Float::abs(sum) > 1e-12 {
        return Err(Error::AngleSumNonzero);
    }
    for (j, &a) in angles.iter().enumerate() {
        for &b in &angles[j + 1..] {
            let d = (a - b) / core::f64::consts::TAU;
            if Float::abs(d - d.round()) * core::f64::consts::TAU < 1e-12 {
                return Err(Error::RepeatedAngles);
            }
        }
    }

    // Coefficients of prod_j (T - e^{i theta_j}), leading first.
    let mut poly = vec![ComplexDouble::new(1.0, 0.0)];
    for &theta in angles {
        let root = ComplexDouble::from_polar(1.0, theta);
        poly.push(ComplexDouble::new(0.0, 0.0));
        for j in (1..poly.len()).rev() {
            let shifted = poly[j - 1] * root;
            poly[j] -= shifted;
        }
    }

    // zeta_j = e_j = (-1)^j c_j; then enforce the symmetry structurally by
    // mirroring the first half, pinning zeta_0 = 1 and a real middle.
    let last = angles.len();
    let mut zeta: Vec<ComplexDouble> = poly
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 0 { *c } else { -*c })
        .collect();
    zeta[0] = ComplexDouble::new(1.0, 0.0);
    for j in 0..=(last / 2) {
        let mirror = last - j;
        if mirror == j {
            zeta[j] = ComplexDouble::new(zeta[j].re, 0.0);
        } else {
            zeta[mirror] = zeta[j].conj();
        }
    }
    FloatForm::new(Space::A, zeta)
}
