//! Typed coefficient spaces for self-inversive and real binary forms.
//!
//! A form is stored as its `zeta` coefficient sequence, not as signed
//! polynomial coefficients; the sign layout of the space is applied only
//! when a form is materialized as a polynomial. Space `A` carries the
//! alternating layout `sum_j (-1)^j zeta_j T^{n+1-j} U^j`, space `B` the
//! plain layout `sum_j zeta_j T^{n+1-j} U^j`.

use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::{sign_pow, ComplexDouble, GaussianRational, Rational};
use crate::{Error, Result};

/// Which coefficient space a self-inversive form lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// Alternating sign layout; symmetry `zeta_k = conj(zeta_{n+1-k})` for
    /// every parity of `n`.
    A,
    /// Plain layout; symmetry `zeta_k = conj(zeta_{n+1-k})` for even `n`
    /// and `zeta_k = -conj(zeta_{n+1-k})` for odd `n`.
    B,
}

/// A complex binary form of degree `n + 1` given by its `n + 2` zeta
/// coefficients and a space tag. Construction does not enforce the
/// symmetry; call [`SelfInversiveForm::validate`] for that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInversiveForm {
    n: usize,
    space: Space,
    zeta: Vec<GaussianRational>,
}

impl SelfInversiveForm {
    /// Wraps a zeta sequence of length `n + 2` (so at least two entries).
    pub fn new(space: Space, zeta: Vec<GaussianRational>) -> Result<Self> {
        if zeta.len() < 2 {
            return Err(Error::DegreeTooSmall);
        }
        Ok(Self {
            n: zeta.len() - 2,
            space,
            zeta,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of the form as a polynomial, `n + 1`.
    pub fn degree(&self) -> usize {
        self.n + 1
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn zeta(&self) -> &[GaussianRational] {
        &self.zeta
    }

    pub fn zeta_at(&self, j: usize) -> &GaussianRational {
        &self.zeta[j]
    }

    /// Exact symmetry check for the space and parity of this form. Returns
    /// `false` rather than failing.
    pub fn validate(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// `None` when the form is valid, otherwise a description of the
    /// violated constraint.
    pub fn symmetry_violation(&self) -> Option<&'static str> {
        let flip = self.space == Space::B && self.n % 2 == 1;
        for k in 0..self.zeta.len() {
            let mirrored = self.zeta[self.zeta.len() - 1 - k].conj();
            let expected = if flip { -&mirrored } else { mirrored };
            if self.zeta[k] != expected {
                return Some(if flip {
                    "space B with odd n requires zeta[k] = -conj(zeta[n+1-k])"
                } else if self.space == Space::B {
                    "space B with even n requires zeta[k] = conj(zeta[n+1-k])"
                } else {
                    "space A requires zeta[k] = conj(zeta[n+1-k])"
                });
            }
        }
        None
    }

    /// Whether `zeta_0 = zeta_{n+1} = 1`.
    pub fn is_monic(&self) -> bool {
        self.zeta[0].is_one() && self.zeta[self.zeta.len() - 1].is_one()
    }

    /// Polynomial coefficients with the space's sign layout applied;
    /// entry `j` multiplies `T^{n+1-j} U^j`.
    pub fn signed_coefficients(&self) -> Vec<GaussianRational> {
        self.zeta
            .iter()
            .enumerate()
            .map(|(j, z)| match self.space {
                Space::A => z.scale(&sign_pow(j)),
                Space::B => z.clone(),
            })
            .collect()
    }

    /// Exact value of the homogeneous form at `(t, u)`.
    pub fn evaluate(&self, t: &GaussianRational, u: &GaussianRational) -> GaussianRational {
        let coeffs = self.signed_coefficients();
        // Horner in t with the matching power of u attached per step.
        let mut acc = GaussianRational::zero();
        let mut u_pow = GaussianRational::one();
        for (j, c) in coeffs.iter().enumerate() {
            acc = &(&acc * t) + &(c * &u_pow);
            if j + 1 < coeffs.len() {
                u_pow = &u_pow * u;
            }
        }
        acc
    }

    /// Product of two forms in space `A`; degrees add.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.space != Space::A || rhs.space != Space::A {
            return Err(Error::WrongSpace("form products are supported in space A"));
        }
        let a = self.signed_coefficients();
        let b = rhs.signed_coefficients();
        let mut prod = vec![GaussianRational::zero(); a.len() + b.len() - 1];
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (k, bk) in b.iter().enumerate() {
                prod[j + k] = &prod[j + k] + &(aj * bk);
            }
        }
        let zeta = prod
            .into_iter()
            .enumerate()
            .map(|(j, c)| c.scale(&sign_pow(j)))
            .collect();
        Self::new(Space::A, zeta)
    }

    /// Dehomogenized coefficients `f(T, 1)` as doubles, leading first.
    pub fn univariate_complex(&self) -> Vec<ComplexDouble> {
        self.signed_coefficients()
            .iter()
            .map(GaussianRational::to_complex)
            .collect()
    }

    /// Per-component rounding to a floating-point form.
    pub fn to_float(&self) -> FloatForm {
        FloatForm {
            n: self.n,
            space: self.space,
            zeta: self.zeta.iter().map(GaussianRational::to_complex).collect(),
        }
    }
}

/// A real binary form of degree `n + 1` with `n + 2` rational coefficients,
/// entry `j` multiplying `X^{n+1-j} Y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBinaryForm {
    n: usize,
    coeffs: Vec<Rational>,
}

impl RealBinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DegreeTooSmall);
        }
        Ok(Self {
            n: coeffs.len() - 2,
            coeffs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.n + 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(num::Zero::is_zero)
    }

    /// Exact value at a Gaussian-rational point `(x, y)`.
    pub fn evaluate(&self, x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        let deg = self.coeffs.len() - 1;
        for (j, c) in self.coeffs.iter().enumerate() {
            let term = &x.pow((deg - j) as u32) * &y.pow(j as u32);
            acc = &acc + &term.scale(c);
        }
        acc
    }

    /// Dehomogenized coefficients `g(X, 1)` as doubles, leading first.
    pub fn univariate_complex(&self) -> Vec<ComplexDouble> {
        self.coeffs
            .iter()
            .map(|c| ComplexDouble::new(crate::numeric::rational_to_f64(c), 0.0))
            .collect()
    }
}

/// Floating-point counterpart of [`SelfInversiveForm`], used by the monic
/// normalization and the unit-circle sampler.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatForm {
    n: usize,
    space: Space,
    zeta: Vec<ComplexDouble>,
}

impl FloatForm {
    pub fn new(space: Space, zeta: Vec<ComplexDouble>) -> Result<Self> {
        if zeta.len() < 2 {
            return Err(Error::DegreeTooSmall);
        }
        Ok(Self {
            n: zeta.len() - 2,
            space,
            zeta,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn zeta(&self) -> &[ComplexDouble] {
        &self.zeta
    }

    /// Symmetry check up to an absolute tolerance per component.
    pub fn validate(&self, tol: f64) -> bool {
        let flip = if self.space == Space::B && self.n % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        self.zeta.iter().enumerate().all(|(k, z)| {
            let m = self.zeta[self.zeta.len() - 1 - k].conj() * flip;
            (z - m).norm() <= tol
        })
    }

    /// Exact dyadic rationalization of every component.
    pub fn rationalize(&self) -> Result<SelfInversiveForm> {
        let zeta = self
            .zeta
            .iter()
            .map(|z| GaussianRational::from_complex_exact(*z))
            .collect::<Result<Vec<_>>>()?;
        SelfInversiveForm::new(self.space, zeta)
    }
}
