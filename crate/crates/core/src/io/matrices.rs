use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::DualMatrix;
use crate::linalg::{parse_rational, Matrix, Rational};

/// A list of square `D₂` matrices of a common rank.
///
/// ```text
/// rank: 2
/// matrix
/// 0 1+2e
/// 0 0
/// matrix
/// e -1/2e
/// 0 -e
/// ```
///
/// Entries are written `a`, `be`, `a+be` or `a-be` with rational `a, b`
/// (`e` for `ε`). Without a `rank:` line the rank is the length of the
/// first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub rank: usize,
    pub matrices: Vec<DualMatrix>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses one dual-number entry.
pub fn parse_dual(s: &str) -> Option<(Rational, Rational)> {
    let Some(body) = s.strip_suffix('e') else {
        return parse_rational(s).map(|a| (a, Rational::zero()));
    };
    // split before the last sign that is not leading
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i);
    let (a, b) = match split {
        Some(i) => (parse_rational(&body[..i])?, &body[i..]),
        None => (Rational::zero(), body),
    };
    let b = match b {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        t => {
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.starts_with(['+', '-']) {
                return None;
            }
            parse_rational(t)?
        }
    };
    Some((a, b))
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<MatrixFile> {
        let mut rank: Option<usize> = None;
        let mut matrices = Vec::new();
        let mut rows: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
        let mut open: Option<usize> = None;
        let mut last_line = 0;

        let finish = |rows: &mut Vec<(Vec<Rational>, Vec<Rational>)>,
                      m: usize,
                      start: usize|
         -> Result<DualMatrix> {
            if rows.len() != m {
                return Err(parse_err(
                    start,
                    format!("matrix has {} rows, expected {m}", rows.len()),
                ));
            }
            let (a, b): (Vec<_>, Vec<_>) = rows.drain(..).unzip();
            let a: Vec<Rational> = a.into_iter().flatten().collect();
            let b: Vec<Rational> = b.into_iter().flatten().collect();
            DualMatrix::new(
                Matrix::from_fn(m, m, |i, j| a[i * m + j].clone()),
                Matrix::from_fn(m, m, |i, j| b[i * m + j].clone()),
            )
        };

        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("rank:") {
                if rank.is_some() || open.is_some() || !matrices.is_empty() {
                    return Err(parse_err(line, "rank must be given once, before any matrix"));
                }
                rank = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| parse_err(line, format!("malformed rank {:?}", rest.trim())))?,
                );
            } else if content == "matrix" {
                if let Some(start) = open {
                    let m = rank.unwrap_or(rows.len());
                    matrices.push(finish(&mut rows, m, start)?);
                    rank = Some(m);
                }
                open = Some(line);
            } else {
                if open.is_none() {
                    return Err(parse_err(line, "entries before the first `matrix` line"));
                }
                let mut a = Vec::new();
                let mut b = Vec::new();
                for tok in content.split_whitespace() {
                    let (x, y) = parse_dual(tok)
                        .ok_or_else(|| parse_err(line, format!("malformed dual number {tok:?}")))?;
                    a.push(x);
                    b.push(y);
                }
                let m = *rank.get_or_insert(a.len());
                if a.len() != m {
                    return Err(parse_err(line, format!("row has {} entries, expected {m}", a.len())));
                }
                if rows.len() == m {
                    return Err(parse_err(line, format!("matrix has more than {m} rows")));
                }
                rows.push((a, b));
            }
        }
        match open {
            Some(start) => {
                let m = rank.unwrap_or(0);
                matrices.push(finish(&mut rows, m, start)?);
            }
            None => return Err(parse_err(last_line.max(1), "no matrices")),
        }
        let rank = rank.unwrap_or(0);
        if rank == 0 {
            return Err(parse_err(1, "matrices must have positive rank"));
        }
        Ok(MatrixFile { rank, matrices })
    }
}

impl std::fmt::Display for MatrixFile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "rank: {}", self.rank)?;
        for m in &self.matrices {
            writeln!(f, "matrix")?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    #[test]
    fn dual_entries() {
        let cases = [
            ("3", (rat(3), rat(0))),
            ("e", (rat(0), rat(1))),
            ("-e", (rat(0), rat(-1))),
            ("1/2e", (rat(0), frac(1, 2))),
            ("-2+e", (rat(-2), rat(1))),
            ("5-3/4e", (rat(5), frac(-3, 4))),
            ("1/3+2e", (frac(1, 3), rat(2))),
        ];
        for (s, want) in cases {
            assert_eq!(parse_dual(s), Some(want.clone()), "{s}");
            assert_eq!(parse_dual(&crate::lie::format_dual(&want.0, &want.1)), Some(want));
        }
        for bad in ["", "x", "1+", "1+-2e", "ee", "1/0"] {
            assert_eq!(parse_dual(bad), None, "{bad}");
        }
    }

    #[test]
    fn round_trip() {
        let text = "rank: 2\nmatrix\n0 1+2e\n0 0\nmatrix\ne -1/2e\n0 -e\n";
        let f = MatrixFile::parse(text).unwrap();
        assert_eq!(f.matrices.len(), 2);
        assert_eq!(f.to_string(), text);
        let inferred = MatrixFile::parse("matrix\n0 e\n0 0\n").unwrap();
        assert_eq!(inferred.rank, 2);
    }

    #[test]
    fn errors() {
        let line = |t: &str| match MatrixFile::parse(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("0 1\n"), 1);
        assert_eq!(line("matrix\n0 1\n0\n"), 3);
        assert_eq!(line("matrix\n0 1\nmatrix\n0 0\n0 0\n"), 1);
        assert_eq!(line("matrix\n0 q\n"), 2);
        assert_eq!(line("# nothing\n"), 1);
    }
}
