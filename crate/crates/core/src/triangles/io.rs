use super::Triangle;
use crate::algebra::parse_rat;
use crate::error::{Error, Result};

/// Header `# arity=<a> n_max=<n>`, then one row per line with entries
/// separated by single spaces.
pub(super) fn to_text(t: &Triangle) -> String {
    let mut out = format!("# arity={} n_max={}\n", t.arity(), t.n_max());
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let body = line
        .strip_prefix('#')
        .ok_or_else(|| bad("expected header `# arity=<a> n_max=<n>`".into()))?;
    let (mut arity, mut n_max) = (None, None);
    for field in body.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| bad(format!("malformed header field `{field}`")))?;
        let value: usize = value.parse().map_err(|_| {
            bad(format!(
                "header value `{value}` is not a nonnegative integer"
            ))
        })?;
        match key {
            "arity" => arity = Some(value),
            "n_max" => n_max = Some(value),
            _ => return Err(bad(format!("unknown header field `{key}`"))),
        }
    }
    match (arity, n_max) {
        (Some(a), Some(n)) => Ok((a, n)),
        _ => Err(bad("header must set both arity and n_max".into())),
    }
}

pub(super) fn from_text(text: &str) -> Result<Triangle> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty triangle file".into(),
    })?;
    let (arity, n_max) = parse_header(header, hline)?;
    if arity == 0 {
        return Err(Error::Parse {
            line: hline,
            message: "arity must be positive".into(),
        });
    }
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut last_line = hline;
    for (line_no, line) in lines.filter(|(_, l)| !l.starts_with('#')) {
        last_line = line_no;
        let n = rows.len();
        if n > n_max {
            return Err(Error::Parse {
                line: line_no,
                message: format!("more rows than n_max = {n_max} allows"),
            });
        }
        let row = line
            .split_whitespace()
            .map(|tok| parse_rat(tok, line_no))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != arity * n + 1 {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    arity * n + 1
                ),
            });
        }
        rows.push(row);
    }
    if rows.len() != n_max + 1 {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {} rows, found {}", n_max + 1, rows.len()),
        });
    }
    Triangle::new(arity, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_frac};
    use proptest::prelude::*;

    #[test]
    fn text_format() {
        let t =
            Triangle::new(2, vec![vec![rat(1)], vec![rat(1), rat_frac(1, 2), rat(-3)]]).unwrap();
        let text = to_text(&t);
        assert_eq!(text, "# arity=2 n_max=1\n1\n1 1/2 -3\n");
        assert_eq!(from_text(&text).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = from_text("# arity=1 n_max=1\n1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = from_text("# arity=1 n_max=1\n1\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = from_text("1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        assert!(from_text("# arity=1 n_max=2\n1\n1 1\n").is_err());
        assert!(from_text("# arity=1\n1\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(arity in 1usize..4, n_max in 0usize..5, seed in prop::collection::vec((-50i64..50, 1i64..6), 64)) {
            let mut it = seed.iter().cycle();
            let rows = (0..=n_max)
                .map(|n| (0..arity * n + 1).map(|_| { let (a, b) = it.next().unwrap(); rat_frac(*a, *b) }).collect())
                .collect();
            let t = Triangle::new(arity, rows).unwrap();
            prop_assert_eq!(from_text(&to_text(&t)).unwrap(), t);
        }
    }
}
