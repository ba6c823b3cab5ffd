//! Exact min-plus arithmetic: `a ⊕ b = min(a, b)`, `a ⊙ b = a + b` over the
//! rationals extended by a formal infinity, together with tropical vectors,
//! projective normalization, and the "minimum achieved at least twice"
//! predicate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::error::Error;

/// Exact rational number. `BigRational` keeps a unique reduced
/// representation, so structural equality is value equality.
pub type Rat = BigRational;

/// Build a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rint(num: i64) -> Rat {
    BigRational::from(BigInt::from(num))
}

/// An element of the min-plus semifield: a rational or the formal infinity.
///
/// Infinity is neutral for ⊕ and absorbing for ⊙. The paper's monomial
/// convention `0 ⊙ ∞ = 0` concerns *exponents* in tropical polynomials and
/// lives in the prevariety evaluator, not here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropRat {
    Finite(Rat),
    Infinity,
}

pub use TropRat::{Finite, Infinity};

impl TropRat {
    pub fn zero() -> Self {
        Finite(Rat::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Finite(rint(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            Finite(r) => Some(r),
            Infinity => None,
        }
    }

    /// Tropical addition: the minimum.
    pub fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (Infinity, _) => other.clone(),
            (_, Infinity) => self.clone(),
            (Finite(a), Finite(b)) => Finite(a.min(b).clone()),
        }
    }

    /// Tropical multiplication: the sum, with infinity absorbing.
    pub fn times(&self, other: &Self) -> Self {
        match (self, other) {
            (Infinity, _) | (_, Infinity) => Infinity,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// Total order with infinity largest.
    pub fn cmp_trop(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinity) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for TropRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_trop(other))
    }
}

impl Ord for TropRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_trop(other)
    }
}

impl Add for TropRat {
    type Output = TropRat;
    fn add(self, rhs: TropRat) -> TropRat {
        self.plus(&rhs)
    }
}

impl Mul for TropRat {
    type Output = TropRat;
    fn mul(self, rhs: TropRat) -> TropRat {
        self.times(&rhs)
    }
}

impl fmt::Display for TropRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infinity => write!(f, "inf"),
            Finite(r) => write!(f, "{}", rat_to_string(r)),
        }
    }
}

impl FromStr for TropRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Infinity);
        }
        parse_rat(s).map(Finite)
    }
}

/// Serialize a rational as `"p/q"` or `"p"` for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk = |t: &str| -> Result<BigInt, Error> {
        t.parse::<BigInt>()
            .map_err(|_| Error::input(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from(mk(s)?)),
        Some((p, q)) => {
            let den = mk(q)?;
            if den.is_zero() {
                return Err(Error::input(format!("zero denominator: {s:?}")));
            }
            Ok(BigRational::new(mk(p)?, den))
        }
    }
}

/// True iff the minimum of `terms` is achieved at least twice, counting an
/// all-infinite list as achieved twice (the prevariety convention).
pub fn min_achieved_twice(terms: &[TropRat]) -> Result<bool, Error> {
    if terms.is_empty() {
        return Err(Error::input("min_achieved_twice: empty term list"));
    }
    let mut min: Option<&Rat> = None;
    let mut count = 0usize;
    for t in terms {
        if let Finite(r) = t {
            match min {
                None => {
                    min = Some(r);
                    count = 1;
                }
                Some(m) => match r.cmp(m) {
                    Ordering::Less => {
                        min = Some(r);
                        count = 1;
                    }
                    Ordering::Equal => count += 1,
                    Ordering::Greater => {}
                },
            }
        }
    }
    Ok(min.is_none() || count >= 2)
}

/// A finite ordered list of tropical numbers indexed by a ground set or by
/// r-subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropVector {
    pub coords: Vec<TropRat>,
}

impl TropVector {
    pub fn new(coords: Vec<TropRat>) -> Self {
        TropVector { coords }
    }

    pub fn from_ints(vals: &[Option<i64>]) -> Self {
        TropVector {
            coords: vals
                .iter()
                .map(|v| match v {
                    Some(x) => TropRat::from_int(*x),
                    None => Infinity,
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Indices (0-based) with finite value.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_finite())
            .map(|(i, _)| i)
            .collect()
    }

    /// Add a rational constant to every finite coordinate.
    pub fn shift(&self, c: &Rat) -> Self {
        TropVector {
            coords: self
                .coords
                .iter()
                .map(|t| match t {
                    Finite(r) => Finite(r + c),
                    Infinity => Infinity,
                })
                .collect(),
        }
    }

    /// Coordinatewise tropical sum (min).
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        TropVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    /// Scale by `a` in the tropical sense (add `a` to all coordinates).
    pub fn scale(&self, a: &TropRat) -> Self {
        TropVector {
            coords: self.coords.iter().map(|t| t.times(a)).collect(),
        }
    }
}

/// A point of tropical projective space in canonical form: the minimum
/// finite coordinate is zero, so equality of points is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<TropRat>,
}

impl ProjPoint {
    /// Canonicalize a tropical vector with nonempty support.
    pub fn normalize(v: &TropVector) -> Result<Self, Error> {
        let min = v
            .coords
            .iter()
            .filter_map(|t| t.as_finite())
            .min()
            .ok_or_else(|| Error::input("projective point must have nonempty support"))?
            .clone();
        let mut coords = Vec::with_capacity(v.len());
        for t in &v.coords {
            coords.push(match t {
                Finite(r) => Finite(r - &min),
                Infinity => Infinity,
            });
        }
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[TropRat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        self.as_vector().support()
    }

    pub fn as_vector(&self) -> TropVector {
        TropVector {
            coords: self.coords.clone(),
        }
    }
}

fn fmt_coords(coords: &[TropRat], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.coords, f)
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.coords, f)
    }
}

/// Projective normalization as a free function, matching the operation
/// surface of the crate.
pub fn projective_normalize(v: &TropVector) -> Result<ProjPoint, Error> {
    ProjPoint::normalize(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(vals: &[Option<i64>]) -> TropVector {
        TropVector::from_ints(vals)
    }

    #[test]
    fn min_achieved_twice_examples() {
        let t = |v: &[Option<i64>]| min_achieved_twice(&tv(v).coords).unwrap();
        assert!(t(&[Some(1), Some(0), Some(0)]));
        assert!(t(&[None, None]));
        assert!(!t(&[Some(0), Some(1), Some(1)]));
        assert!(min_achieved_twice(&[]).is_err());
    }

    #[test]
    fn normalize_examples() {
        let p = projective_normalize(&tv(&[Some(3), Some(5), None])).unwrap();
        assert_eq!(p.as_vector(), tv(&[Some(0), Some(2), None]));
        let p = projective_normalize(&tv(&[Some(0), Some(0), Some(0)])).unwrap();
        assert_eq!(p.as_vector(), tv(&[Some(0), Some(0), Some(0)]));
        let p = projective_normalize(&tv(&[None, Some(7), None])).unwrap();
        assert_eq!(p.as_vector(), tv(&[None, Some(0), None]));
        assert!(projective_normalize(&tv(&[None, None])).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(tv(&[Some(0), None, Some(2)]).support(), vec![0, 2]);
        assert_eq!(tv(&[None, None]).support(), Vec::<usize>::new());
        assert_eq!(
            tv(&[Some(1), Some(2), Some(3), Some(4)]).support(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn infinity_is_absorbing_and_neutral() {
        let a = TropRat::from_int(3);
        assert_eq!(a.plus(&Infinity), a);
        assert_eq!(Infinity.plus(&a), a);
        assert_eq!(a.times(&Infinity), Infinity);
        assert_eq!(Infinity.times(&a), Infinity);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_to_string(&rat(1, 2)), "1/2");
        assert_eq!(rat_to_string(&rint(-4)), "-4");
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!("inf".parse::<TropRat>().unwrap(), Infinity);
        assert_eq!("5/3".parse::<TropRat>().unwrap(), Finite(rat(5, 3)));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
