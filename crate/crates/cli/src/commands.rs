//! The subcommand bodies: pure string-to-string transformations so the
//! binary shell stays thin and the behavior is testable directly.

use num::Zero;
use serde_json::{Map, Value};

use selfinv::disc::{self, deflate_fully, sample_w};
use selfinv::forms::{RealBinaryForm, SelfInversiveForm, Space};
use selfinv::numeric::rational_int;
use selfinv::roots::{classify_roots, find_roots};
use selfinv::transform::{phi, phi_inverse, psi, psi_inverse, Parity};

use crate::json::{
    emit, form_from_value, form_to_value, hankel_to_value, parse_value, power_sums_to_value,
    rational_to_value, real_form_from_value, real_form_to_value,
};
use crate::{CliError, CliResult};

/// Conversion directions between the coefficient spaces and real forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    AToReal,
    RealToA,
    BToReal,
    RealToB,
}

fn validated(form: SelfInversiveForm) -> CliResult<SelfInversiveForm> {
    match form.symmetry_violation() {
        None => Ok(form),
        Some(msg) => Err(CliError::Validate(msg.into())),
    }
}

fn expect_space(form: &SelfInversiveForm, space: Space) -> CliResult<()> {
    if form.space() != space {
        return Err(CliError::Validate(format!(
            "this direction expects a space-{} form",
            match space {
                Space::A => "A",
                Space::B => "B",
            }
        )));
    }
    Ok(())
}

pub fn cmd_convert(input: &str, direction: Direction) -> CliResult<String> {
    let value = parse_value(input)?;
    match direction {
        Direction::AToReal => {
            let form = validated(form_from_value(&value)?)?;
            expect_space(&form, Space::A)?;
            Ok(emit(&real_form_to_value(&phi(&form)?)))
        }
        Direction::BToReal => {
            let form = validated(form_from_value(&value)?)?;
            expect_space(&form, Space::B)?;
            Ok(emit(&real_form_to_value(&psi(&form)?)))
        }
        Direction::RealToA => {
            let g = real_form_from_value(&value)?;
            Ok(emit(&form_to_value(&phi_inverse(&g))))
        }
        Direction::RealToB => {
            let g = real_form_from_value(&value)?;
            let parity = if g.n() % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            };
            Ok(emit(&form_to_value(&psi_inverse(&g, parity)?)))
        }
    }
}

/// The discriminant report as ordered JSON. `deflated` is present only when
/// deflation was requested.
fn report_value(report: &disc::DiscriminantReport, deflated: Option<usize>) -> Value {
    let mut obj = Map::new();
    obj.insert("dis".into(), rational_to_value(&report.dis));
    obj.insert("det_h".into(), rational_to_value(&report.det_h));
    obj.insert("scale_check".into(), Value::Bool(report.scale_check));
    obj.insert("sign".into(), Value::from(report.sign));
    obj.insert(
        "k".into(),
        report
            .circle_roots
            .map_or(Value::Null, |k| Value::from(k as u64)),
    );
    if let Some(count) = deflated {
        obj.insert("deflated".into(), Value::from(count as u64));
    }
    Value::Object(obj)
}

pub fn cmd_disc(input: &str, oracle: bool, deflate: bool, tol: f64) -> CliResult<String> {
    let form = validated(form_from_value(&parse_value(input)?)?)?;
    if !form.is_monic() {
        return Err(CliError::Precondition(selfinv::Error::NotMonic.to_string()));
    }
    let image = match form.space() {
        Space::A => phi(&form)?,
        Space::B => psi(&form)?,
    };
    if !image.coeff(0).is_zero() {
        let report = disc::report(&form, oracle, tol)?;
        return Ok(emit(&report_value(&report, deflate.then_some(0))));
    }
    if !deflate {
        return Err(CliError::Precondition(
            "the real image has a zero leading coefficient; pass --deflate to strip the \
             (T - U) factors"
                .into(),
        ));
    }
    if form.space() != Space::A {
        return Err(CliError::Precondition(
            "deflation is defined on space-A forms".into(),
        ));
    }
    match deflate_fully(&form)? {
        (Some(rest), count) => {
            let report = disc::report(&rest, oracle, tol)?;
            Ok(emit(&report_value(&report, Some(count))))
        }
        (None, count) => {
            // The form was a pure power of (T - U): a degree-zero cofactor
            // with the empty-product discriminant.
            let one = rational_int(1);
            let report = disc::DiscriminantReport {
                dis: one.clone(),
                det_h: one,
                scale_check: true,
                sign: 1,
                circle_roots: None,
            };
            Ok(emit(&report_value(&report, Some(count))))
        }
    }
}

pub fn cmd_hankel(input: &str) -> CliResult<String> {
    let form = form_from_value(&parse_value(input)?)?;
    let table = selfinv::symfunc::power_sums(&form)?;
    Ok(emit(&hankel_to_value(&selfinv::symfunc::build_hankel(
        &table,
    ))))
}

pub fn cmd_powersums(input: &str) -> CliResult<String> {
    let form = form_from_value(&parse_value(input)?)?;
    let table = selfinv::symfunc::power_sums(&form)?;
    Ok(emit(&power_sums_to_value(&table)))
}

/// Accepts either a self-inversive form (object with `space`) or a real
/// form (object with `coeffs`) and reports roots of the dehomogenization.
pub fn cmd_roots(input: &str, tol: f64) -> CliResult<String> {
    let value = parse_value(input)?;
    let coeffs = match value.as_object() {
        Some(obj) if obj.contains_key("space") => form_from_value(&value)?.univariate_complex(),
        Some(obj) if obj.contains_key("coeffs") => {
            real_form_from_value(&value)?.univariate_complex()
        }
        _ => {
            return Err(CliError::Parse(
                "expected a form object with \"space\" or \"coeffs\"".into(),
            ))
        }
    };
    let rs = find_roots(&coeffs)?;
    let classes = classify_roots(&rs.roots, tol);
    let mut obj = Map::new();
    obj.insert(
        "roots".into(),
        Value::Array(
            rs.roots
                .iter()
                .map(|t| Value::Array(vec![Value::from(t.re), Value::from(t.im)]))
                .collect(),
        ),
    );
    obj.insert(
        "residuals".into(),
        Value::Array(rs.residuals.iter().map(|&r| Value::from(r)).collect()),
    );
    obj.insert(
        "circle_count".into(),
        Value::from(classes.on_circle.len() as u64),
    );
    obj.insert(
        "pair_count".into(),
        Value::from(classes.symmetric_pairs.len() as u64),
    );
    Ok(emit(&Value::Object(obj)))
}

pub fn cmd_classify(input: &str, tol: f64) -> CliResult<String> {
    let form = validated(form_from_value(&parse_value(input)?)?)?;
    if !form.is_monic() {
        return Err(CliError::Precondition(selfinv::Error::NotMonic.to_string()));
    }
    let c = disc::classify_circle_roots(&form, tol)?;
    let mut obj = Map::new();
    obj.insert("k".into(), Value::from(c.circle_roots as u64));
    obj.insert("consistent".into(), Value::Bool(c.consistent));
    obj.insert("sign".into(), Value::from(c.det_sign));
    obj.insert("deflations".into(), Value::from(c.deflations as u64));
    Ok(emit(&Value::Object(obj)))
}

/// Input: a JSON array of angles summing to zero. Output: the rationalized
/// monic form whose roots are on the unit circle at those angles.
pub fn cmd_sample_w(input: &str) -> CliResult<String> {
    let value = parse_value(input)?;
    let angles: Vec<f64> = value
        .as_array()
        .ok_or_else(|| CliError::Parse("expected a JSON array of angles".into()))?
        .iter()
        .map(|v| {
            v.as_f64()
                .ok_or_else(|| CliError::Parse(format!("angle: expected a number, got {v}")))
        })
        .collect::<CliResult<_>>()?;
    let float_form = sample_w(&angles)?;
    let exact = float_form.rationalize()?;
    Ok(emit(&form_to_value(&exact)))
}

/// Shared by tests: parse, validate and monic-check a form the way `disc`
/// does.
pub fn parse_monic_form(input: &str) -> CliResult<SelfInversiveForm> {
    let form = validated(form_from_value(&parse_value(input)?)?)?;
    if !form.is_monic() {
        return Err(CliError::Precondition(selfinv::Error::NotMonic.to_string()));
    }
    Ok(form)
}

pub fn real_image(form: &SelfInversiveForm) -> CliResult<RealBinaryForm> {
    Ok(match form.space() {
        Space::A => phi(form)?,
        Space::B => psi(form)?,
    })
}

pub use crate::sweep::cmd_sweep;
