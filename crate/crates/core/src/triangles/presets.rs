use num_bigint::BigInt;

use super::generate::{gen_bisnomial, gen_const, gen_recursive};
use super::oracles;
use super::scheme::{CoeffScheme, ConstParams};
use super::Triangle;
use crate::algebra::Rat;
use crate::error::{Error, Result};

pub const PRESET_NAMES: [&str; 8] = [
    "pascal",
    "s_pascal",
    "stirling2",
    "aigner_catalan",
    "shapiro_catalan",
    "motzkin",
    "bell",
    "schroder_large",
];

/// Rows checked against the closed-form oracle when a preset is built.
const VALIDATION_ROWS: usize = 12;

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Tridiagonal recursive matrix (arity 1).
    Recursive { f: CoeffScheme, g: CoeffScheme },
    /// s-Pascal triangle (arity s).
    Bisnomial { s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: String,
    pub generator: Generator,
}

/// Looks up a named triangle; `s` is only used by `s_pascal` (default 2).
/// The preset's coefficients are checked against an independent oracle
/// before it is returned.
pub fn preset(name: &str, s: Option<usize>) -> Result<Preset> {
    use CoeffScheme as C;
    let generator = match name {
        "pascal" => Generator::Recursive {
            f: C::constant(1),
            g: C::constant(0),
        },
        "s_pascal" => {
            let s = s.unwrap_or(2);
            if s == 0 {
                return Err(Error::Config("s must be positive".into()));
            }
            Generator::Bisnomial { s }
        }
        "stirling2" => Generator::Recursive {
            f: C::affine(1, 1),
            g: C::constant(0),
        },
        "aigner_catalan" => Generator::Recursive {
            f: C::head_then(&[1], 2),
            g: C::constant(1),
        },
        "shapiro_catalan" => Generator::Recursive {
            f: C::constant(2),
            g: C::constant(1),
        },
        "motzkin" => Generator::Recursive {
            f: C::constant(1),
            g: C::constant(1),
        },
        "bell" => Generator::Recursive {
            f: C::affine(1, 1),
            g: C::affine(1, 1),
        },
        "schroder_large" => Generator::Recursive {
            f: C::head_then(&[2], 3),
            g: C::constant(2),
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    let p = Preset {
        name: name.to_string(),
        generator,
    };
    p.validate(VALIDATION_ROWS)?;
    Ok(p)
}

impl Preset {
    pub fn generate(&self, n_max: usize) -> Result<Triangle> {
        match &self.generator {
            Generator::Recursive { f, g } => gen_recursive(f, g, n_max),
            Generator::Bisnomial { s } => gen_bisnomial(*s, n_max),
        }
    }

    /// Constant parameters reproducing this preset in the arity-2
    /// constant-coefficient form, when such parameters exist.
    pub fn const_params(&self) -> Option<ConstParams> {
        let v = match (self.name.as_str(), &self.generator) {
            ("pascal", _) => [1, 1, 0, 1, 1, 0, 0],
            ("s_pascal", Generator::Bisnomial { s: 1 }) => [1, 1, 0, 1, 1, 0, 0],
            ("s_pascal", Generator::Bisnomial { s: 2 }) => [1, 1, 1, 1, 1, 0, 0],
            ("aigner_catalan", _) => [1, 1, 0, 1, 2, 1, 0],
            ("shapiro_catalan", _) => [2, 1, 0, 1, 2, 1, 0],
            ("motzkin", _) => [1, 1, 0, 1, 1, 1, 0],
            ("schroder_large", _) => [2, 1, 0, 1, 3, 2, 0],
            _ => return None,
        };
        Some(ConstParams::from_ints(v).expect("nonnegative"))
    }

    /// Compares the first `rows` rows (or column 0) with the preset's oracle.
    pub fn validate(&self, rows: usize) -> Result<()> {
        let t = self.generate(rows.saturating_sub(1))?;
        let count = t.rows().len();
        let col0: Vec<BigInt> = t.column(0).iter().map(Rat::to_integer).collect();
        let expected_col0: Vec<BigInt> = match self.name.as_str() {
            "pascal" | "s_pascal" | "stirling2" => vec![BigInt::from(1); count],
            "aigner_catalan" => (0..count as u64).map(oracles::catalan).collect(),
            "shapiro_catalan" => (1..=count as u64).map(oracles::catalan).collect(),
            "motzkin" => oracles::motzkin_numbers(count),
            "bell" => oracles::bell_numbers(count),
            "schroder_large" => oracles::large_schroder_numbers(count),
            _ => unreachable!("preset names are closed"),
        };
        if col0 != expected_col0 {
            return Err(Error::Config(format!(
                "preset `{}` column 0 {:?} disagrees with its oracle {:?}",
                self.name, col0, expected_col0
            )));
        }
        let entry_oracle: Option<fn(u64, u64) -> BigInt> = match self.name.as_str() {
            "pascal" => Some(oracles::binomial),
            "stirling2" => Some(|n, k| oracles::stirling2(n + 1, k + 1)),
            "shapiro_catalan" => Some(oracles::shapiro_entry),
            _ => None,
        };
        if let Some(oracle) = entry_oracle {
            for (n, row) in t.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if v.to_integer() != oracle(n as u64, k as u64) {
                        return Err(Error::Config(format!(
                            "preset `{}` entry ({n}, {k}) = {v} disagrees with its oracle",
                            self.name
                        )));
                    }
                }
            }
        }
        if let Some(p) = self.const_params() {
            let c = gen_const(&p, t.n_max());
            for n in 0..count {
                let a = t.row(n)?;
                let b = c.row(n)?;
                let tail_zero = b[a.len().min(b.len())..]
                    .iter()
                    .all(|x| *x == Rat::from_integer(0.into()));
                if a.len() > b.len() || b[..a.len()] != *a || !tail_zero {
                    return Err(Error::Config(format!(
                        "preset `{}` row {n} differs from its constant-parameter form",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn every_preset_validates() {
        for name in PRESET_NAMES {
            let p = preset(name, None).unwrap();
            p.validate(21).unwrap();
        }
        for s in 1..=4 {
            preset("s_pascal", Some(s)).unwrap().validate(10).unwrap();
        }
    }

    #[test]
    fn preset_examples() {
        let shapiro = preset("shapiro_catalan", None)
            .unwrap()
            .generate(3)
            .unwrap();
        assert_eq!(
            shapiro.rows(),
            &[
                rats(&[1]),
                rats(&[2, 1]),
                rats(&[5, 4, 1]),
                rats(&[14, 14, 6, 1])
            ]
        );
        let bell = preset("bell", None).unwrap().generate(5).unwrap();
        assert_eq!(bell.column(0), rats(&[1, 1, 2, 5, 15, 52]));
        let pascal = preset("pascal", None).unwrap().generate(4).unwrap();
        assert_eq!(pascal.row(4).unwrap(), rats(&[1, 4, 6, 4, 1]).as_slice());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            preset("fibonacci", None),
            Err(Error::UnknownPreset(_))
        ));
    }

    #[test]
    fn const_params_only_for_constant_presets() {
        assert!(preset("bell", None).unwrap().const_params().is_none());
        assert!(preset("stirling2", None).unwrap().const_params().is_none());
        assert!(preset("s_pascal", Some(3))
            .unwrap()
            .const_params()
            .is_none());
        assert!(preset("motzkin", None).unwrap().const_params().is_some());
    }
}
