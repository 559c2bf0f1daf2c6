//! Power sums of form roots via Newton's identities, including negative
//! indices, and assembly of the Toeplitz power-sum matrix.
//!
//! For a monic form the dehomogenization `f(T, 1)` is monic with a
//! unit constant term, so the elementary symmetric functions of the roots
//! are read straight off the signed coefficients and the inverse roots are
//! governed by the reversed polynomial. Negative power sums are computed
//! from that reversal rather than by conjugating the positive ones; the
//! conjugation identity `h_{-m} = conj(h_m)` holds only for valid forms and
//! is checked in tests, not assumed here.

use alloc::vec::Vec;

use crate::forms::{SelfInversiveForm, Space};
use crate::numeric::{rational_int, sign_pow, GaussianRational};
use crate::{Error, Result};

/// Power sums `h_m` of the roots for `m` in `[-n, n]`, exact over Q(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumTable {
    n: usize,
    values: Vec<GaussianRational>, // index m + n
}

impl PowerSumTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `h_m`; panics outside `[-n, n]`, the range the matrix needs.
    pub fn get(&self, m: i64) -> &GaussianRational {
        let idx = m + self.n as i64;
        &self.values[idx as usize]
    }

    /// Entries in order `h_{-n}, ..., h_0, ..., h_n`.
    pub fn values(&self) -> &[GaussianRational] {
        &self.values
    }
}

/// The `(n+1) x (n+1)` matrix with entry `(r, c) = h_{r-c}`; constant along
/// diagonals. For valid monic forms it is Hermitian, so its determinant is
/// real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    n: usize,
    entries: Vec<Vec<GaussianRational>>,
}

impl HankelMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn entry(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r][c]
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }
}

/// Newton's identities: `p_k = e_1 p_{k-1} - e_2 p_{k-2} + ...
/// + (-1)^{k-1} k e_k`, with `e_j = 0` beyond the degree. Returns
/// `p_1 ..= p_count`.
fn newton_power_sums(e: &[GaussianRational], count: usize) -> Vec<GaussianRational> {
    let mut p: Vec<GaussianRational> = Vec::with_capacity(count);
    for k in 1..=count {
        let mut acc = GaussianRational::zero();
        for i in 1..k {
            if i < e.len() {
                acc = &acc + &(&e[i] * &p[k - 1 - i]).scale(&sign_pow(i - 1));
            }
        }
        if k < e.len() {
            acc = &acc + &e[k].scale(&(rational_int(k as i64) * sign_pow(k - 1)));
        }
        p.push(acc);
    }
    p
}

/// Power sums of the roots of a monic form, for `m` in `[-n, n]`.
///
/// Space A is accepted for every `n`; space B only for even `n`. The
/// elementary symmetric functions come from the signed coefficients of
/// `f(T, 1)`, and the negative half from the reversed polynomial, whose
/// roots are the inverses. The input need not satisfy the coefficient
/// symmetry: monicity alone makes the constant term a unit, which is all
/// the reversal requires.
pub fn power_sums(form: &SelfInversiveForm) -> Result<PowerSumTable> {
    if form.space() == Space::B && form.n() % 2 == 1 {
        return Err(Error::WrongSpace("power sums for space B require even n"));
    }
    if !form.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = form.n();
    let c = form.signed_coefficients();

    // e_j = (-1)^j c_j for the monic polynomial sum c_j T^{n+1-j}.
    let e: Vec<GaussianRational> = c
        .iter()
        .enumerate()
        .map(|(j, cj)| cj.scale(&sign_pow(j)))
        .collect();
    let positive = newton_power_sums(&e, n);

    // Reversal: the polynomial with coefficients c_{n+1-j} / c_{n+1} has
    // roots 1/t_j. Monic forms have c_{n+1} = +-1, so this stays exact.
    let last = &c[n + 1];
    let reversed: Vec<GaussianRational> = (0..=n + 1)
        .map(|j| c[n + 1 - j].checked_div(last))
        .collect::<Result<Vec<_>>>()?;
    let e_rev: Vec<GaussianRational> = reversed
        .iter()
        .enumerate()
        .map(|(j, cj)| cj.scale(&sign_pow(j)))
        .collect();
    let negative = newton_power_sums(&e_rev, n);

    let mut values = Vec::with_capacity(2 * n + 1);
    for m in (1..=n).rev() {
        values.push(negative[m - 1].clone());
    }
    values.push(GaussianRational::from_int((n + 1) as i64, 0));
    for m in 1..=n {
        values.push(positive[m - 1].clone());
    }
    Ok(PowerSumTable { n, values })
}

/// Toeplitz assembly of the power-sum matrix, entry `(r, c) = h_{r-c}`.
pub fn build_hankel(table: &PowerSumTable) -> HankelMatrix {
    let n = table.n();
    let entries = (0..=n)
        .map(|r| {
            (0..=n)
                .map(|c| table.get(r as i64 - c as i64).clone())
                .collect()
        })
        .collect();
    HankelMatrix { n, entries }
}

/// Reinterprets a valid monic space-B form (even `n`) as the space-A form
/// with the same zeta sequence. The two forms' polynomials differ by
/// `T -> -T` up to sign, so their root sets are negatives of each other,
/// their power sums agree up to the sign `(-1)^m`, and the two power-sum
/// matrices have the same determinant. For even `n` the symmetry
/// constraints of the two spaces coincide, so the output is again valid.
pub fn b_to_a_coefficients(form: &SelfInversiveForm) -> Result<SelfInversiveForm> {
    if form.space() != Space::B {
        return Err(Error::WrongSpace(
            "b_to_a_coefficients expects a space-B form",
        ));
    }
    if form.n() % 2 == 1 {
        return Err(Error::WrongSpace(
            "the space-B discriminant route requires even n",
        ));
    }
    if !form.is_monic() {
        return Err(Error::NotMonic);
    }
    if let Some(msg) = form.symmetry_violation() {
        return Err(Error::InvalidForm(msg));
    }
    SelfInversiveForm::new(Space::A, form.zeta().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_int(re, im)
    }

    fn a_form(zeta: &[(i64, i64)]) -> SelfInversiveForm {
        SelfInversiveForm::new(Space::A, zeta.iter().map(|&(r, i)| gr(r, i)).collect()).unwrap()
    }

    fn b_form(zeta: &[(i64, i64)]) -> SelfInversiveForm {
        SelfInversiveForm::new(Space::B, zeta.iter().map(|&(r, i)| gr(r, i)).collect()).unwrap()
    }

    #[test]
    fn quadratic_with_zero_middle() {
        // Roots of T^2 + 1 are +-i: h_{+-1} = 0, h_0 = 2.
        let t = power_sums(&a_form(&[(1, 0), (0, 0), (1, 0)])).unwrap();
        assert_eq!(t.get(0), &gr(2, 0));
        assert_eq!(t.get(1), &gr(0, 0));
        assert_eq!(t.get(-1), &gr(0, 0));
    }

    #[test]
    fn double_root_at_one() {
        let t = power_sums(&a_form(&[(1, 0), (2, 0), (1, 0)])).unwrap();
        assert_eq!(t.get(1), &gr(2, 0));
        assert_eq!(t.get(-1), &gr(2, 0));
    }

    #[test]
    fn cubic_with_zero_middles() {
        // e_1 = e_2 = 0, e_3 = 1: all of h_{+-1}, h_{+-2} vanish, h_0 = 3.
        let t = power_sums(&a_form(&[(1, 0), (0, 0), (0, 0), (1, 0)])).unwrap();
        assert_eq!(t.get(0), &gr(3, 0));
        for m in [-2i64, -1, 1, 2] {
            assert_eq!(t.get(m), &gr(0, 0), "h_{m}");
        }
    }

    #[test]
    fn first_power_sum_is_zeta_one() {
        for zeta in [
            &[(1, 0), (5, 0), (1, 0)][..],
            &[(1, 0), (2, 3), (2, -3), (1, 0)][..],
        ] {
            let f = a_form(zeta);
            let t = power_sums(&f).unwrap();
            assert_eq!(t.get(1), f.zeta_at(1));
        }
    }

    #[test]
    fn non_monic_is_rejected() {
        let f = a_form(&[(2, 0), (0, 0), (2, 0)]);
        assert_eq!(power_sums(&f), Err(Error::NotMonic));
    }

    #[test]
    fn b_odd_is_rejected() {
        let f = b_form(&[(1, 1), (0, 2), (-1, 1)]);
        assert!(matches!(power_sums(&f), Err(Error::WrongSpace(_))));
    }

    #[test]
    fn hankel_layout_examples() {
        let m = build_hankel(&power_sums(&a_form(&[(1, 0), (0, 0), (1, 0)])).unwrap());
        assert_eq!(
            m.rows(),
            &[vec![gr(2, 0), gr(0, 0)], vec![gr(0, 0), gr(2, 0)]]
        );

        let m = build_hankel(&power_sums(&a_form(&[(1, 0), (2, 0), (1, 0)])).unwrap());
        assert_eq!(
            m.rows(),
            &[vec![gr(2, 0), gr(2, 0)], vec![gr(2, 0), gr(2, 0)]]
        );

        let m = build_hankel(&power_sums(&a_form(&[(1, 0), (0, 0), (0, 0), (1, 0)])).unwrap());
        for r in 0..3 {
            for c in 0..3 {
                let want = if r == c { gr(3, 0) } else { gr(0, 0) };
                assert_eq!(m.entry(r, c), &want);
            }
        }
    }

    #[test]
    fn hankel_is_hermitian_for_valid_monic_forms() {
        let f = a_form(&[(1, 0), (2, 3), (2, -3), (1, 0)]);
        assert!(f.validate());
        let m = build_hankel(&power_sums(&f).unwrap());
        for r in 0..m.size() {
            for c in 0..m.size() {
                assert_eq!(m.entry(r, c), &m.entry(c, r).conj());
            }
        }
    }

    #[test]
    fn negative_sums_conjugate_positive_for_valid_forms() {
        let f = a_form(&[(1, 0), (3, -2), (0, 0), (3, 2), (1, 0)]);
        assert!(f.validate());
        let t = power_sums(&f).unwrap();
        for m in 1..=f.n() as i64 {
            assert_eq!(t.get(-m), &t.get(m).conj());
        }
    }

    #[test]
    fn b_relabel_keeps_zeta_and_matches_power_sums_up_to_sign() {
        let p = b_form(&[(1, 0), (2, 1), (2, -1), (1, 0)]);
        assert!(p.validate());
        let f = b_to_a_coefficients(&p).unwrap();
        assert_eq!(f.space(), Space::A);
        assert_eq!(f.zeta(), p.zeta());
        assert!(f.validate());

        let k = power_sums(&p).unwrap();
        let h = power_sums(&f).unwrap();
        for m in -2i64..=2 {
            let expect = if m.rem_euclid(2) == 0 {
                h.get(m).clone()
            } else {
                -h.get(m)
            };
            assert_eq!(k.get(m), &expect, "m = {m}");
        }
    }

    #[test]
    fn b_relabel_rejects_odd_n_and_invalid_input() {
        let odd = b_form(&[(1, 1), (0, 2), (-1, 1)]);
        assert!(matches!(
            b_to_a_coefficients(&odd),
            Err(Error::WrongSpace(_))
        ));
        let invalid = b_form(&[(1, 0), (1, 1), (5, 0), (1, 0)]);
        assert!(matches!(
            b_to_a_coefficients(&invalid),
            Err(Error::InvalidForm(_))
        ));
    }
}
