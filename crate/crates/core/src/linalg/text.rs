//! Plain-text matrix format.
//!
//! ```text
//! 2 3
//! 1 -1/2 0
//! 3/4 0 7
//! ```
//!
//! The first line is `<rows> <cols>`; each following non-blank line is one
//! row of whitespace-separated rationals written `p` or `p/q` with `q > 0`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Parses one rational token.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let int = |s: &str, what: &str| -> std::result::Result<BigInt, String> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed {what} in `{token}`"));
        }
        BigInt::from_str(s).map_err(|e| format!("`{token}`: {e}"))
    };
    match token.split_once('/') {
        None => Ok(Rational::from_integer(int(token, "integer")?)),
        Some((p, q)) => {
            let num = int(p, "numerator")?;
            if q.starts_with(['-', '+']) {
                return Err(format!(
                    "denominator must be a positive integer in `{token}`"
                ));
            }
            let den = int(q, "denominator")?;
            if den.is_zero() || den.is_negative() {
                return Err(format!("zero denominator in `{token}`"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn parse_matrix(input: &str) -> Result<RationalMatrix> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `<rows> <cols>` header".into(),
    })?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parse_dim = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line: header_line,
            msg: format!("bad dimension `{s}`"),
        })
    };
    let [r, c] = dims[..] else {
        return Err(Error::Parse {
            line: header_line,
            msg: "header must be `<rows> <cols>`".into(),
        });
    };
    let (rows, cols) = (parse_dim(r)?, parse_dim(c)?);

    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == rows {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("more than {rows} rows"),
            });
        }
        let before = data.len();
        for tok in line.split_whitespace() {
            data.push(parse_rational(tok).map_err(|msg| Error::Parse { line: line_no, msg })?);
        }
        if data.len() - before != cols {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {cols} entries, found {}", data.len() - before),
            });
        }
        seen += 1;
    }
    if seen != rows {
        return Err(Error::Parse {
            line: input.lines().count().max(1),
            msg: format!("expected {rows} rows, found {seen}"),
        });
    }
    RationalMatrix::from_vec(rows, cols, data)
}

pub fn format_matrix(m: &RationalMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

impl FromStr for RationalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, rat};
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_example() {
        let m = parse_matrix("2 3\n1 -1/2 0\n3/4 0 7\n").unwrap();
        assert_eq!(m.get(0, 1), &frac(-1, 2));
        assert_eq!(m.get(1, 0), &frac(3, 4));
        assert_eq!(m.get(1, 2), &rat(7));
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let m = parse_matrix("1 1\n6/4").unwrap();
        assert_eq!(m.get(0, 0), &frac(3, 2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "1 1\n1/0",
            "1 1\n1/",
            "1 1\n/2",
            "1 1\n1/-2",
            "1 1\nx",
            "1 1\n1/2/3",
            "1 2\n1",
            "2 1\n1",
            "1 1\n1\n2",
            "1\n1",
            "",
            "a b\n1",
        ] {
            assert!(parse_matrix(bad).is_err(), "accepted {bad:?}");
        }
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(
            rows in 1usize..4,
            cols in 1usize..4,
            seed in proptest::collection::vec((-50i64..50, 1i64..20), 16)
        ) {
            let m = RationalMatrix::from_fn(rows, cols, |i, j| {
                let (p, q) = seed[i * 4 + j];
                frac(p, q)
            });
            prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        }
    }
}
