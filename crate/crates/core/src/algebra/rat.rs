use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational scalar, always stored reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p` or `p/q`. `line` is only used for error reporting.
pub fn parse_rat(token: &str, line: usize) -> Result<Rat> {
    let bad = |message: String| Error::Parse { line, message };
    let int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| bad(format!("`{token}` is not an integer or fraction")))
    };
    match token.split_once('/') {
        None => Ok(Rat::from_integer(int(token)?)),
        Some((n, d)) => {
            let den = int(d)?;
            if den == BigInt::from(0) {
                return Err(bad(format!("`{token}` has a zero denominator")));
            }
            Ok(Rat::new(int(n)?, den))
        }
    }
}

/// Rationals travel as strings (`"3"`, `"-1/2"`); integers are also accepted on input.
pub(crate) mod serde_rat {
    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(i) => Ok(super::rat(i)),
            Repr::Str(s) => super::parse_rat(s.trim(), 0).map_err(de::Error::custom),
        }
    }

    pub mod vec {
        use super::Rat;
        use serde::ser::{SerializeSeq, Serializer};
        use serde::Deserializer;

        pub fn serialize<S: Serializer>(values: &[Rat], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
            #[derive(serde::Deserialize)]
            struct Wrap(#[serde(with = "super")] Rat);
            let v: Vec<Wrap> = serde::Deserialize::deserialize(d)?;
            Ok(v.into_iter().map(|w| w.0).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("-7", 1).unwrap(), rat(-7));
        assert_eq!(parse_rat("6/4", 1).unwrap(), rat_frac(3, 2));
        assert_eq!(parse_rat("3/-6", 1).unwrap().to_string(), "-1/2");
        assert!(parse_rat("1/0", 3).is_err());
        assert!(matches!(
            parse_rat("x", 9),
            Err(Error::Parse { line: 9, .. })
        ));
    }

    #[test]
    fn canonical_form() {
        let r = rat_frac(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat_frac(2, 4), rat_frac(1, 2));
    }
}
