//! JSON codecs for the exact types.
//!
//! Integers of any size ride through `serde_json`'s arbitrary-precision
//! numbers, so the four-integer Gaussian-rational encoding round-trips
//! bit-exactly. Emission order of object keys is fixed.

use std::str::FromStr;

use num::bigint::{BigInt, Sign};
use num::Zero;
use serde_json::{Map, Number, Value};

use selfinv::forms::{RealBinaryForm, SelfInversiveForm, Space};
use selfinv::numeric::{GaussianRational, Rational};
use selfinv::symfunc::{HankelMatrix, PowerSumTable};

use crate::{CliError, CliResult};

pub fn parse_value(input: &str) -> CliResult<Value> {
    serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))
}

fn integer_number(b: &BigInt) -> Value {
    // Any decimal integer literal is valid JSON; arbitrary precision keeps
    // the digits intact.
    Value::Number(Number::from_str(&b.to_string()).expect("integer literal"))
}

fn bigint_from_value(v: &Value, what: &str) -> CliResult<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| CliError::Parse(format!("{what}: expected an integer, got {n}"))),
        other => Err(CliError::Parse(format!(
            "{what}: expected an integer, got {other}"
        ))),
    }
}

/// `[re_num, re_den, im_num, im_den]` with positive denominators.
pub fn gaussian_to_value(z: &GaussianRational) -> Value {
    Value::Array(vec![
        integer_number(z.re.numer()),
        integer_number(z.re.denom()),
        integer_number(z.im.numer()),
        integer_number(z.im.denom()),
    ])
}

pub fn gaussian_from_value(v: &Value) -> CliResult<GaussianRational> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| CliError::Parse("zeta entry: expected a four-integer array".into()))?;
    let parts: Vec<BigInt> = arr
        .iter()
        .map(|x| bigint_from_value(x, "zeta entry"))
        .collect::<CliResult<_>>()?;
    for den in [&parts[1], &parts[3]] {
        if den.sign() != Sign::Plus {
            return Err(CliError::Validate(
                "zeta entry: denominators must be positive".into(),
            ));
        }
    }
    let [re_num, re_den, im_num, im_den] = <[BigInt; 4]>::try_from(parts).expect("length 4");
    GaussianRational::from_parts(re_num, re_den, im_num, im_den)
        .map_err(|e| CliError::Validate(e.to_string()))
}

/// `[num, den]` with a positive denominator.
pub fn rational_to_value(r: &Rational) -> Value {
    Value::Array(vec![integer_number(r.numer()), integer_number(r.denom())])
}

pub fn rational_from_value(v: &Value) -> CliResult<Rational> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| CliError::Parse("coefficient: expected a two-integer array".into()))?;
    let num = bigint_from_value(&arr[0], "coefficient")?;
    let den = bigint_from_value(&arr[1], "coefficient")?;
    if den.sign() != Sign::Plus {
        return Err(CliError::Validate(
            "coefficient: denominator must be positive".into(),
        ));
    }
    if den.is_zero() {
        return Err(CliError::Validate(
            "coefficient: denominator must be nonzero".into(),
        ));
    }
    Ok(Rational::new(num, den))
}

pub fn form_to_value(f: &SelfInversiveForm) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(f.n() as u64));
    obj.insert(
        "space".into(),
        Value::String(match f.space() {
            Space::A => "A".into(),
            Space::B => "B".into(),
        }),
    );
    obj.insert(
        "zeta".into(),
        Value::Array(f.zeta().iter().map(gaussian_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn form_from_value(v: &Value) -> CliResult<SelfInversiveForm> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Parse("expected a form object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Parse("form: missing integer field \"n\"".into()))?;
    let space = match obj.get("space").and_then(Value::as_str) {
        Some("A") => Space::A,
        Some("B") => Space::B,
        _ => {
            return Err(CliError::Parse(
                "form: field \"space\" must be \"A\" or \"B\"".into(),
            ))
        }
    };
    let zeta_values = obj
        .get("zeta")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("form: missing array field \"zeta\"".into()))?;
    let zeta: Vec<GaussianRational> = zeta_values
        .iter()
        .map(gaussian_from_value)
        .collect::<CliResult<_>>()?;
    if zeta.len() != (n as usize) + 2 {
        return Err(CliError::Parse(format!(
            "form: \"zeta\" must hold n + 2 = {} entries, got {}",
            n + 2,
            zeta.len()
        )));
    }
    SelfInversiveForm::new(space, zeta).map_err(CliError::from)
}

pub fn real_form_to_value(g: &RealBinaryForm) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(g.n() as u64));
    obj.insert(
        "coeffs".into(),
        Value::Array(g.coeffs().iter().map(rational_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn real_form_from_value(v: &Value) -> CliResult<RealBinaryForm> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Parse("expected a real form object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Parse("real form: missing integer field \"n\"".into()))?;
    let coeff_values = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("real form: missing array field \"coeffs\"".into()))?;
    let coeffs: Vec<Rational> = coeff_values
        .iter()
        .map(rational_from_value)
        .collect::<CliResult<_>>()?;
    if coeffs.len() != (n as usize) + 2 {
        return Err(CliError::Parse(format!(
            "real form: \"coeffs\" must hold n + 2 = {} entries, got {}",
            n + 2,
            coeffs.len()
        )));
    }
    RealBinaryForm::new(coeffs).map_err(CliError::from)
}

pub fn power_sums_to_value(t: &PowerSumTable) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(t.n() as u64));
    // Entries in order m = -n ..= n.
    obj.insert(
        "values".into(),
        Value::Array(t.values().iter().map(gaussian_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn hankel_to_value(m: &HankelMatrix) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(m.n() as u64));
    obj.insert(
        "entries".into(),
        Value::Array(
            m.rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(gaussian_to_value).collect()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// One line of JSON plus a trailing newline; key order is insertion order.
pub fn emit(v: &Value) -> String {
    let mut out = serde_json::to_string(v).expect("serializable value");
    out.push('\n');
    out
}
