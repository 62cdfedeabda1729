use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::torus::{classify, TorusClass, TorusParams};

/// Closed-form maximum forcing number, where one is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Value(usize),
    Unknown,
}

impl Prediction {
    pub fn value(self) -> Option<usize> {
        match self {
            Prediction::Value(v) => Some(v),
            Prediction::Unknown => None,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Value(v) => write!(f, "{v}"),
            Prediction::Unknown => f.write_str("Unknown"),
        }
    }
}

impl Serialize for Prediction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Prediction::Value(v) => s.serialize_u64(*v as u64),
            Prediction::Unknown => s.serialize_str("Unknown"),
        }
    }
}

/// `F(T(n,m,r))` from the closed forms, written in the normalised class
/// parameters `(n', m', r')`:
///
/// * `T(2n, 2m+1, r)`: `(m+1) n`
/// * `T(2n, 2m, 2r)`: `mn + 1` if `gcd(r, m) = 1`, else `mn`
/// * `T(2n, 2m, 2r-1)`: `mn`
/// * `T(2n+1, 2m, 2r)`: `(m(2n+1) + gcd(r, m)) / 2` if `m / gcd(r, m)` is
///   odd, else `m(2n+1) / 2`
/// * `T(2n+1, 2m, 2r-1)`: unknown
pub fn predicted_max_forcing(params: TorusParams) -> Result<Prediction> {
    let tag = classify(params)?;
    let (n, m, r) = (tag.n, tag.m, tag.r);
    let value = match tag.class {
        TorusClass::EoEven | TorusClass::EoOdd => (m + 1) * n,
        TorusClass::EeEven => {
            if r.gcd(&m) == 1 {
                m * n + 1
            } else {
                m * n
            }
        }
        TorusClass::EeOdd => m * n,
        TorusClass::OeEven => {
            let g = r.gcd(&m);
            if (m / g) % 2 == 1 {
                (m * (2 * n + 1) + g) / 2
            } else {
                m * (2 * n + 1) / 2
            }
        }
        TorusClass::OeOdd => return Ok(Prediction::Unknown),
    };
    Ok(Prediction::Value(value))
}

/// Whether `params` satisfies the side conditions under which its class's
/// closed form was established: `n', m' >= 2` for `T(2n, 2m, 2r)`, `m' >= 2`
/// for `T(2n, 2m, 2r-1)` and `T(2n+1, 2m, 2r)`, none for `T(2n, 2m+1, r)`.
/// The open class never qualifies.
pub fn within_proven_range(params: TorusParams) -> Result<bool> {
    let tag = classify(params)?;
    Ok(match tag.class {
        TorusClass::EoEven | TorusClass::EoOdd => true,
        TorusClass::EeEven => tag.n >= 2 && tag.m >= 2,
        TorusClass::EeOdd | TorusClass::OeEven => tag.m >= 2,
        TorusClass::OeOdd => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn pred(n: usize, m: usize, r: usize) -> Result<Prediction> {
        predicted_max_forcing(TorusParams::new(n, m, r).unwrap())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(pred(4, 8, 4).unwrap(), Prediction::Value(8));
        assert_eq!(pred(6, 10, 5).unwrap(), Prediction::Value(15));
        assert_eq!(pred(5, 6, 3).unwrap(), Prediction::Unknown);
        assert_eq!(pred(4, 7, 5).unwrap(), Prediction::Value(8));
        assert_eq!(pred(4, 10, 4).unwrap(), Prediction::Value(11));
        assert_eq!(pred(2, 4, 2).unwrap(), Prediction::Value(3));
        assert_eq!(pred(3, 4, 4).unwrap(), Prediction::Value(4));
        assert_eq!(pred(3, 4, 2).unwrap(), Prediction::Value(3));
        assert_eq!(pred(3, 6, 2).unwrap(), Prediction::Value(5));
        assert!(matches!(pred(3, 5, 1), Err(Error::OddOrder { .. })));
    }

    #[test]
    fn proven_range() {
        let within = |n, m, r| within_proven_range(TorusParams::new(n, m, r).unwrap()).unwrap();
        assert!(!within(2, 8, 4));
        assert!(within(4, 8, 4));
        assert!(within(2, 8, 3));
        assert!(within(2, 5, 1));
        assert!(!within(3, 6, 3));
    }
}
