//! Exact determinant sweeps over slices of the coefficient space.
//!
//! A sweep varies chosen real coordinates of `(zeta_1, ..., zeta_n)` over
//! rational grids while pinning the rest, evaluates the power-sum
//! determinant exactly at every grid point, and writes a CSV with one row
//! per point in row-major order (first axis slowest). Varying a coordinate
//! moves its mirror too, so every grid point is a valid monic form.
//!
//! Coordinate names: `re1 ... re{n/2}`, `im1 ... im{n/2}`, plus the middle
//! `re{(n+1)/2}` when `n` is odd.

use std::io::Write;
use std::path::Path;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::Zero;
use serde_json::Value;

use selfinv::disc::det_exact;
use selfinv::forms::{SelfInversiveForm, Space};
use selfinv::numeric::{
    rational_from_f64, rational_sign, rational_to_f64, GaussianRational, Rational,
};
use selfinv::symfunc::{build_hankel, power_sums};

use crate::json::parse_value;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Re,
    Im,
}

/// A validated coordinate of the symmetric slice of coefficient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Coordinate {
    part: Part,
    index: usize,
}

impl Coordinate {
    /// Parses `re3` / `im2` and checks it is free for this `n`: mirror
    /// pairs share their coordinates and the middle coefficient (odd `n`)
    /// is real.
    fn parse(name: &str, n: usize) -> CliResult<Self> {
        let (part, digits) = if let Some(rest) = name.strip_prefix("re") {
            (Part::Re, rest)
        } else if let Some(rest) = name.strip_prefix("im") {
            (Part::Im, rest)
        } else {
            return Err(CliError::Validate(format!(
                "coordinate {name:?} must look like \"re1\" or \"im1\""
            )));
        };
        let index: usize = digits
            .parse()
            .map_err(|_| CliError::Validate(format!("coordinate {name:?} has no valid index")))?;
        let is_middle = n % 2 == 1 && index == (n + 1) / 2;
        let in_lower_half = index >= 1 && index <= n / 2;
        match part {
            Part::Re if in_lower_half || is_middle => Ok(Self { part, index }),
            Part::Im if in_lower_half => Ok(Self { part, index }),
            Part::Im if is_middle => Err(CliError::Validate(format!(
                "coordinate {name:?}: the middle coefficient is real for n = {n}"
            ))),
            _ => Err(CliError::Validate(format!(
                "coordinate {name:?} is out of range for n = {n} (free coordinates live in \
                 the lower half of the sequence)"
            ))),
        }
    }
}

struct Axis {
    name: String,
    coordinate: Coordinate,
    lo: Rational,
    hi: Rational,
    steps: usize,
}

impl Axis {
    fn value_at(&self, step: usize) -> Rational {
        let span = &self.hi - &self.lo;
        let t = Ratio::new(BigInt::from(step), BigInt::from(self.steps - 1));
        &self.lo + span * t
    }
}

struct Spec {
    n: usize,
    axes: Vec<Axis>,
    fixed: Vec<(Coordinate, Rational)>,
}

fn number_as_rational(v: &Value, what: &str) -> CliResult<Rational> {
    let x = v
        .as_f64()
        .ok_or_else(|| CliError::Parse(format!("{what}: expected a number, got {v}")))?;
    rational_from_f64(x).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn parse_spec(input: &str) -> CliResult<Spec> {
    let value = parse_value(input)?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Parse("expected a sweep specification object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Parse("sweep: missing integer field \"n\"".into()))?
        as usize;

    let mut axes = Vec::new();
    if let Some(list) = obj.get("axes") {
        let list = list
            .as_array()
            .ok_or_else(|| CliError::Parse("sweep: \"axes\" must be an array".into()))?;
        for entry in list {
            let axis = entry
                .as_object()
                .ok_or_else(|| CliError::Parse("sweep: each axis must be an object".into()))?;
            let name = axis
                .get("coord")
                .and_then(Value::as_str)
                .ok_or_else(|| {
                    CliError::Parse("sweep axis: missing string field \"coord\"".into())
                })?
                .to_string();
            let coordinate = Coordinate::parse(&name, n)?;
            let lo = number_as_rational(
                axis.get("lo")
                    .ok_or_else(|| CliError::Parse("sweep axis: missing \"lo\"".into()))?,
                "sweep axis lo",
            )?;
            let hi = number_as_rational(
                axis.get("hi")
                    .ok_or_else(|| CliError::Parse("sweep axis: missing \"hi\"".into()))?,
                "sweep axis hi",
            )?;
            let steps =
                axis.get("steps").and_then(Value::as_u64).ok_or_else(|| {
                    CliError::Parse("sweep axis: missing integer \"steps\"".into())
                })? as usize;
            if steps < 2 {
                return Err(CliError::Validate(
                    "sweep axis: steps must be at least 2".into(),
                ));
            }
            if lo >= hi {
                return Err(CliError::Validate("sweep axis: lo must be below hi".into()));
            }
            axes.push(Axis {
                name,
                coordinate,
                lo,
                hi,
                steps,
            });
        }
    }

    let mut fixed = Vec::new();
    if let Some(map) = obj.get("fixed") {
        let map = map
            .as_object()
            .ok_or_else(|| CliError::Parse("sweep: \"fixed\" must be an object".into()))?;
        for (name, v) in map {
            let coordinate = Coordinate::parse(name, n)?;
            fixed.push((coordinate, number_as_rational(v, "sweep fixed value")?));
        }
    }

    Ok(Spec { n, axes, fixed })
}

/// Builds the monic form at one grid point: coordinate values land on their
/// zeta entry and its conjugate mirror.
fn form_at(n: usize, assignments: &[(Coordinate, Rational)]) -> SelfInversiveForm {
    let mut zeta = vec![GaussianRational::zero(); n + 2];
    zeta[0] = GaussianRational::one();
    zeta[n + 1] = GaussianRational::one();
    for (coord, value) in assignments {
        let j = coord.index;
        let mirror = n + 1 - j;
        match coord.part {
            Part::Re => {
                zeta[j].re = value.clone();
                zeta[mirror].re = value.clone();
            }
            Part::Im => {
                zeta[j].im = value.clone();
                zeta[mirror].im = -value.clone();
            }
        }
    }
    SelfInversiveForm::new(Space::A, zeta).expect("n + 2 >= 2")
}

/// Runs the sweep and writes the CSV grid. Row order is row-major over the
/// axes in specification order; columns are the axis coordinates followed
/// by `det_h` (as a double) and its exact sign.
pub fn cmd_sweep(input: &str, output: &Path) -> CliResult<()> {
    let spec = parse_spec(input)?;
    let mut csv = String::new();
    for axis in &spec.axes {
        csv.push_str(&axis.name);
        csv.push(',');
    }
    csv.push_str("det_h,sign\n");

    let total: usize = spec.axes.iter().map(|a| a.steps).product();
    let mut counters = vec![0usize; spec.axes.len()];
    for _ in 0..total.max(1) {
        let mut assignments = spec.fixed.clone();
        let mut row = String::new();
        for (axis, &step) in spec.axes.iter().zip(&counters) {
            let value = axis.value_at(step);
            row.push_str(&format!("{},", rational_to_f64(&value)));
            // A varied coordinate overrides any fixed value for the same
            // entry; later assignments win inside form_at.
            assignments.retain(|(c, _)| c != &axis.coordinate);
            assignments.push((axis.coordinate, value));
        }
        let form = form_at(spec.n, &assignments);
        debug_assert!(form.validate());
        let det = det_exact(&build_hankel(&power_sums(&form).map_err(CliError::from)?));
        debug_assert!(det.im.is_zero());
        row.push_str(&format!(
            "{},{}\n",
            rational_to_f64(&det.re),
            rational_sign(&det.re)
        ));
        csv.push_str(&row);

        // Odometer increment, last axis fastest.
        for i in (0..counters.len()).rev() {
            counters[i] += 1;
            if counters[i] < spec.axes[i].steps {
                break;
            }
            counters[i] = 0;
        }
    }

    let mut file = std::fs::File::create(output)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", output.display())))?;
    file.write_all(csv.as_bytes())
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", output.display())))?;
    Ok(())
}
