use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::geometry::vec::dot;
use crate::linalg::{IVec3, Rational};

/// Point of `Q^3` as `num / den` with `den > 0` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameter {
    num: IVec3,
    den: i64,
}

impl Parameter {
    pub fn new(num: IVec3, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num[0].gcd(&num[1]).gcd(&num[2]).gcd(&den);
        let s = if den < 0 { -g } else { g };
        Parameter {
            num: [num[0] / s, num[1] / s, num[2] / s],
            den: den / s,
        }
    }

    pub fn integer(v: IVec3) -> Self {
        Parameter { num: v, den: 1 }
    }

    pub fn num(&self) -> IVec3 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<IVec3> {
        self.is_integral().then_some(self.num)
    }

    pub fn from_rationals(c: &[Rational; 3]) -> Option<Self> {
        let den = c.iter().fold(BigInt::from(1), |l, r| l.lcm(r.denom()));
        let den64 = den.to_i64()?;
        let mut num = [0i64; 3];
        for (n, r) in num.iter_mut().zip(c) {
            *n = (r.numer() * (&den / r.denom())).to_i64()?;
        }
        Some(Parameter::new(num, den64))
    }

    pub fn to_rationals(&self) -> [Rational; 3] {
        self.num
            .map(|n| Rational::new(BigInt::from(n), BigInt::from(self.den)))
    }

    /// Coordinate strings `p/q` (or `p` when integral).
    pub fn coordinate_strings(&self) -> [String; 3] {
        self.to_rationals().map(|r| r.to_string())
    }

    pub fn add_integer(&self, z: IVec3) -> Self {
        Parameter::new(
            [
                self.num[0] + self.den * z[0],
                self.num[1] + self.den * z[1],
                self.num[2] + self.den * z[2],
            ],
            self.den,
        )
    }

    /// `self + (t / d) v`.
    pub fn add_scaled(&self, t: i64, d: i64, v: IVec3) -> Self {
        Parameter::new(
            [
                self.num[0] * d + t * self.den * v[0],
                self.num[1] * d + t * self.den * v[1],
                self.num[2] * d + t * self.den * v[2],
            ],
            self.den * d,
        )
    }

    /// Image under the integer matrix with the given rows.
    pub fn transform(&self, rows: &[IVec3; 3]) -> Self {
        Parameter::new([dot(rows[0], self.num), dot(rows[1], self.num), dot(rows[2], self.num)], self.den)
    }

    /// `n . self` as an unreduced fraction `(p, den)`.
    pub fn dot_frac(&self, n: IVec3) -> (i64, i64) {
        (dot(n, self.num), self.den)
    }

    /// Largest absolute coordinate, as a fraction compared against `w`.
    pub fn within_box(&self, w: i64) -> bool {
        self.num.iter().all(|c| c.abs() <= w * self.den)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coordinate_strings();
        write!(f, "({a}, {b}, {c})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational coordinate {0:?}")]
pub struct ParseParameterError(pub String);

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseParameterError> {
    let err = || ParseParameterError(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| err())?;
    let q = BigInt::from_str(q).map_err(|_| err())?;
    if q == BigInt::from(0) {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

impl FromStr for Parameter {
    type Err = ParseParameterError;

    /// Three whitespace or comma separated coordinates.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if parts.len() != 3 {
            return Err(ParseParameterError(s.to_string()));
        }
        let c = [parse_rational(parts[0])?, parse_rational(parts[1])?, parse_rational(parts[2])?];
        Parameter::from_rationals(&c).ok_or_else(|| ParseParameterError(s.to_string()))
    }
}
