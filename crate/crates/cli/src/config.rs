use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use qframes::geom::{DirectionVector, RotationMatrix};
use qframes::{suq2, System};

use crate::parse::Shape;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Options shared by every command.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n_spin: usize,
    pub n_sg: usize,
    pub with_rotation: bool,
    pub eps_order: usize,
    /// `None` keeps q symbolic.
    pub q: Option<BigRational>,
    pub seed: u64,
    pub samples: u64,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n_spin: 2,
            n_sg: 2,
            with_rotation: false,
            eps_order: 2,
            q: None,
            seed: 7,
            samples: 1000,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn shape(&self) -> Shape {
        Shape { n_spin: self.n_spin, n_sg: self.n_sg, rotation: self.with_rotation }
    }

    pub fn system(&self) -> Result<System, CliError> {
        Ok(suq2::make_system(self.n_spin, self.n_sg, self.with_rotation)?)
    }

    pub fn apparatuses(&self) -> usize {
        self.n_spin.min(self.n_sg)
    }

    pub fn q_or_one(&self) -> BigRational {
        self.q.clone().unwrap_or_else(BigRational::one)
    }
}

/// Accepts `3/4`, `1` or a decimal such as `0.99`, read exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("cannot read {s:?} as a rational number"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{frac}", whole.trim_start_matches(['-', '+']));
        let n = BigInt::from_str(&digits).map_err(|_| bad())?;
        let n = if neg { -n } else { n };
        return Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)));
    }
    Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
}

/// Axis by name (`x`, `y`, `z`) or number (`0`, `1`, `2`).
pub fn parse_axis(s: &str) -> Result<usize, CliError> {
    match s.trim() {
        "x" | "0" => Ok(0),
        "y" | "1" => Ok(1),
        "z" | "2" => Ok(2),
        other => Err(CliError::Usage(format!("unknown axis {other:?}; expected x, y or z"))),
    }
}

fn floats(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("cannot read {t:?} as a number"))))
        .collect()
}

/// A direction as an axis name, `θ,ω` angles in radians, or `x,y,z`.
pub fn parse_direction(s: &str) -> Result<DirectionVector<f64>, CliError> {
    if let Ok(k) = parse_axis(s) {
        return Ok(DirectionVector::axis(k)?);
    }
    match floats(s)?.as_slice() {
        [theta, omega] => Ok(qframes::geom::angles_to_direction(*theta, *omega)?),
        [x, y, z] => {
            let d = DirectionVector::new(*x, *y, *z);
            d.check_unit()?;
            Ok(d)
        }
        _ => Err(CliError::Usage(format!("direction {s:?}: expected an axis, θ,ω or x,y,z"))),
    }
}

/// Nine comma-separated entries, row by row.
pub fn parse_matrix(s: &str) -> Result<RotationMatrix<f64>, CliError> {
    let v = floats(s)?;
    if v.len() != 9 {
        return Err(CliError::Usage(format!("matrix needs 9 entries, got {}", v.len())));
    }
    Ok(RotationMatrix::new([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]])?)
}
