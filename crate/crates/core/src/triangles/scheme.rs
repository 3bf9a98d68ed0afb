use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rat::serde_rat;
use crate::algebra::{parse_rat, rat, Rat};
use crate::error::{Error, Result};

/// Per-index coefficient sequence `c_k` used by the recurrences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffScheme {
    Constant(#[serde(with = "serde_rat")] Rat),
    /// `slope * k + intercept`
    Affine {
        #[serde(with = "serde_rat")]
        slope: Rat,
        #[serde(with = "serde_rat")]
        intercept: Rat,
    },
    /// `values[i]` is `c_{start + i}`; undefined elsewhere.
    Table {
        start: i64,
        #[serde(with = "serde_rat::vec")]
        values: Vec<Rat>,
    },
    /// `values[k]` for `k < values.len()`, then `rest`.
    Head {
        #[serde(with = "serde_rat::vec")]
        values: Vec<Rat>,
        rest: Box<CoeffScheme>,
    },
}

impl CoeffScheme {
    pub fn constant(c: i64) -> Self {
        CoeffScheme::Constant(rat(c))
    }

    pub fn affine(slope: i64, intercept: i64) -> Self {
        CoeffScheme::Affine {
            slope: rat(slope),
            intercept: rat(intercept),
        }
    }

    pub fn table(start: i64, values: &[i64]) -> Self {
        CoeffScheme::Table {
            start,
            values: values.iter().map(|&v| rat(v)).collect(),
        }
    }

    /// `head` values for `k = 0, 1, ...`, then the constant `tail`.
    pub fn head_then(head: &[i64], tail: i64) -> Self {
        CoeffScheme::Head {
            values: head.iter().map(|&v| rat(v)).collect(),
            rest: Box::new(CoeffScheme::constant(tail)),
        }
    }

    /// `None` where a table does not define the value.
    pub fn at(&self, k: i64) -> Option<Rat> {
        match self {
            CoeffScheme::Constant(c) => Some(c.clone()),
            CoeffScheme::Affine { slope, intercept } => Some(slope * rat(k) + intercept),
            CoeffScheme::Table { start, values } => {
                let i = k.checked_sub(*start)?;
                usize::try_from(i).ok().and_then(|i| values.get(i)).cloned()
            }
            CoeffScheme::Head { values, rest } => match usize::try_from(k) {
                Ok(i) if i < values.len() => Some(values[i].clone()),
                _ => rest.at(k),
            },
        }
    }

    /// Errors unless the scheme is defined on every `k` in `lo..=hi`.
    pub fn require(&self, name: &str, lo: i64, hi: i64) -> Result<()> {
        match (lo..=hi).find(|&k| self.at(k).is_none()) {
            None => Ok(()),
            Some(k) => Err(Error::Config(format!(
                "coefficient sequence `{name}` is undefined at k = {k} (needed on {lo}..={hi})"
            ))),
        }
    }
}

/// The five coefficient sequences of the pentadiagonal recurrence
/// `A(n,k) = gamma_k A(n-1,k-2) + e_k A(n-1,k-1) + f_k A(n-1,k) + g_k A(n-1,k+1) + h_k A(n-1,k+2)`.
///
/// `gamma` is only consulted for `k >= 2` and `e` for `k >= 1`; below those
/// indices the corresponding terms are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentaSchemes {
    pub gamma: CoeffScheme,
    pub e: CoeffScheme,
    pub f: CoeffScheme,
    pub g: CoeffScheme,
    pub h: CoeffScheme,
}

impl PentaSchemes {
    pub const GAMMA_START: i64 = 2;
    pub const E_START: i64 = 1;

    pub fn constants(gamma: i64, e: i64, f: i64, g: i64, h: i64) -> Self {
        PentaSchemes {
            gamma: CoeffScheme::constant(gamma),
            e: CoeffScheme::constant(e),
            f: CoeffScheme::constant(f),
            g: CoeffScheme::constant(g),
            h: CoeffScheme::constant(h),
        }
    }

    /// Domain starts, in the order gamma, e, f, g, h.
    pub fn named(&self) -> [(&'static str, &CoeffScheme, i64); 5] {
        [
            ("gamma", &self.gamma, Self::GAMMA_START),
            ("e", &self.e, Self::E_START),
            ("f", &self.f, 0),
            ("g", &self.g, 0),
            ("h", &self.h, 0),
        ]
    }

    pub fn require(&self, hi: i64) -> Result<()> {
        for (name, scheme, start) in self.named() {
            scheme.require(name, start, hi)?;
        }
        Ok(())
    }

    /// Value of a sequence at `k`, zero below its domain start.
    pub(crate) fn value(scheme: &CoeffScheme, start: i64, k: i64) -> Rat {
        if k < start {
            Rat::zero()
        } else {
            scheme.at(k).unwrap_or_else(Rat::zero)
        }
    }
}

/// Constants `alpha, beta, gamma, e, f, g, h` of the constant-coefficient
/// pentadiagonal array, whose first two rows of the recurrence are special:
///
/// ```text
/// A(n,0) = alpha A(n-1,0) + g A(n-1,1) + h A(n-1,2)
/// A(n,1) = beta A(n-1,0) + f A(n-1,1) + g A(n-1,2) + h A(n-1,3)
/// A(n,k) = gamma A(n-1,k-2) + e A(n-1,k-1) + f A(n-1,k) + g A(n-1,k+1) + h A(n-1,k+2)
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstParams {
    #[serde(with = "serde_rat")]
    pub alpha: Rat,
    #[serde(with = "serde_rat")]
    pub beta: Rat,
    #[serde(with = "serde_rat")]
    pub gamma: Rat,
    #[serde(with = "serde_rat")]
    pub e: Rat,
    #[serde(with = "serde_rat")]
    pub f: Rat,
    #[serde(with = "serde_rat")]
    pub g: Rat,
    #[serde(with = "serde_rat")]
    pub h: Rat,
}

impl ConstParams {
    /// Values in the order `alpha, beta, gamma, e, f, g, h`; all must be nonnegative.
    pub fn new(values: [Rat; 7]) -> Result<Self> {
        const NAMES: [&str; 7] = ["alpha", "beta", "gamma", "e", "f", "g", "h"];
        if let Some(i) = values.iter().position(Signed::is_negative) {
            return Err(Error::Config(format!(
                "parameter {} = {} is negative",
                NAMES[i], values[i]
            )));
        }
        let [alpha, beta, gamma, e, f, g, h] = values;
        Ok(ConstParams {
            alpha,
            beta,
            gamma,
            e,
            f,
            g,
            h,
        })
    }

    pub fn from_ints(v: [i64; 7]) -> Result<Self> {
        Self::new(v.map(rat))
    }

    /// Parses `alpha,beta,gamma,e,f,g,h`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 7 {
            return Err(Error::Config(format!(
                "expected 7 comma-separated parameters (alpha,beta,gamma,e,f,g,h), got {}",
                parts.len()
            )));
        }
        let mut values = Vec::with_capacity(7);
        for p in parts {
            values.push(parse_rat(p, 1)?);
        }
        Self::new(values.try_into().expect("seven values"))
    }

    pub fn as_array(&self) -> [&Rat; 7] {
        [
            &self.alpha,
            &self.beta,
            &self.gamma,
            &self.e,
            &self.f,
            &self.g,
            &self.h,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation() {
        assert_eq!(CoeffScheme::constant(3).at(100), Some(rat(3)));
        assert_eq!(CoeffScheme::affine(1, 1).at(4), Some(rat(5)));
        let t = CoeffScheme::table(2, &[7, 8]);
        assert_eq!(t.at(1), None);
        assert_eq!(t.at(3), Some(rat(8)));
        assert_eq!(t.at(4), None);
        let h = CoeffScheme::head_then(&[1], 2);
        assert_eq!(h.at(0), Some(rat(1)));
        assert_eq!(h.at(9), Some(rat(2)));
    }

    #[test]
    fn require_reports_first_gap() {
        let t = CoeffScheme::table(0, &[1, 1, 1]);
        assert!(t.require("f", 0, 2).is_ok());
        let err = t.require("f", 0, 5).unwrap_err().to_string();
        assert!(err.contains("k = 3"), "{err}");
    }

    #[test]
    fn params() {
        let p = ConstParams::parse("1, 1, 0, 1, 1, 1, 0").unwrap();
        assert_eq!(p.g, rat(1));
        assert!(ConstParams::parse("1,1,1").is_err());
        assert!(ConstParams::from_ints([1, -1, 0, 0, 0, 0, 0]).is_err());
        assert_eq!(
            ConstParams::parse("1/2,0,0,0,0,0,0").unwrap().alpha,
            crate::algebra::rat_frac(1, 2)
        );
    }

    #[test]
    fn scheme_json() {
        let s: CoeffScheme =
            serde_json::from_str(r#"{"head": {"values": [1], "rest": {"constant": "2"}}}"#)
                .unwrap();
        assert_eq!(s, CoeffScheme::head_then(&[1], 2));
        let a: CoeffScheme =
            serde_json::from_str(r#"{"affine": {"slope": 1, "intercept": "1/2"}}"#).unwrap();
        assert_eq!(a.at(1), Some(crate::algebra::rat_frac(3, 2)));
        let back: CoeffScheme = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
