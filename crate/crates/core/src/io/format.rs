use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieAlgebraBuilder, Violation};
use crate::linalg::{format_rational, is_zero_vector, parse_rational, sign, zero_vector, Matrix, Rational, Vector};

/// `bracket A B = ...`, with `left < right` in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketLine {
    pub left: usize,
    pub right: usize,
    pub value: Vector,
    /// Source line, 0 when the document was not parsed from text.
    pub line: usize,
}

/// `eps A = ...`: the column of `ε` at `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsLine {
    pub source: usize,
    pub value: Vector,
    pub line: usize,
}

/// The line-oriented algebra document.
///
/// ```text
/// # comments run to the end of the line
/// name: L4
/// basis: X Y eX eY
/// bracket X Y = eX
/// eps X = eX
/// eps Y = eY
/// ```
///
/// Right-hand sides are sums of terms `c*L` or `L` with `c` written `p` or
/// `p/q`, or the single token `0`. A `p = N` line sets the nilpotency index
/// of `ε` (default 2). Omitted brackets and `ε` columns are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketLine>,
    pub eps: Vec<EpsLine>,
    pub nilpotency: usize,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with(|c: char| c.is_ascii_digit())
        && !s.chars().any(|c| c.is_whitespace() || "+-*/=#:,()".contains(c))
}

/// Formats `v` as a combination of `labels`: `2*E - 1/2*F`, `-eX`, or `0`.
pub fn format_combination(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = sign(c) < 0;
        let abs = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_combination(labels: &[String], rhs: &str, line: usize) -> Result<Vector> {
    let compact: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    let mut v = zero_vector(labels.len());
    if compact == "0" {
        return Ok(v);
    }
    if compact.is_empty() {
        return Err(parse_err(line, "empty right-hand side"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for ch in compact.chars() {
        if ch == '+' || ch == '-' {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if !terms.is_empty() || negative {
                return Err(parse_err(line, format!("dangling sign in {rhs:?}")));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(parse_err(line, format!("dangling sign in {rhs:?}")));
    }
    terms.push((negative, current));
    for (negative, term) in terms {
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => {
                let c = parse_rational(c)
                    .filter(|_| !c.starts_with(['+', '-']))
                    .ok_or_else(|| parse_err(line, format!("malformed rational {c:?}")))?;
                (c, l)
            }
            None => (Rational::one(), term.as_str()),
        };
        let idx = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| parse_err(line, format!("unknown label {label:?}")))?;
        if negative {
            v[idx] -= coeff;
        } else {
            v[idx] += coeff;
        }
    }
    Ok(v)
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        let mut name: Option<String> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut brackets: Vec<BracketLine> = Vec::new();
        let mut eps: Vec<EpsLine> = Vec::new();
        let mut nilpotency: Option<usize> = None;

        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let require_basis = |labels: &Option<Vec<String>>| -> Result<Vec<String>> {
                labels
                    .clone()
                    .ok_or_else(|| parse_err(line, "basis must be declared before brackets and eps"))
            };
            let index = |labels: &[String], l: &str| -> Result<usize> {
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| parse_err(line, format!("unknown label {l:?}")))
            };
            if let Some(rest) = content.strip_prefix("name:") {
                if name.is_some() {
                    return Err(parse_err(line, "duplicate name line"));
                }
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = content.strip_prefix("basis:") {
                if labels.is_some() {
                    return Err(parse_err(line, "duplicate basis line"));
                }
                let ls: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for (i, l) in ls.iter().enumerate() {
                    if !valid_label(l) {
                        return Err(parse_err(line, format!("invalid label {l:?}")));
                    }
                    if ls[..i].contains(l) {
                        return Err(parse_err(line, format!("repeated label {l:?}")));
                    }
                }
                labels = Some(ls);
            } else if let Some(rest) = content.strip_prefix("bracket ") {
                let ls = require_basis(&labels)?;
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line, "expected `bracket A B = ...`"))?;
                let pair: Vec<&str> = lhs.split_whitespace().collect();
                let [a, b] = pair[..] else {
                    return Err(parse_err(line, "expected two labels before `=`"));
                };
                let (left, right) = (index(&ls, a)?, index(&ls, b)?);
                if left >= right {
                    return Err(parse_err(
                        line,
                        format!("bracket pair ({a}, {b}) must follow basis order"),
                    ));
                }
                if let Some(prev) = brackets.iter().find(|x| (x.left, x.right) == (left, right)) {
                    return Err(parse_err(
                        line,
                        format!("duplicate bracket ({a}, {b}), first given on line {}", prev.line),
                    ));
                }
                let value = parse_combination(&ls, rhs, line)?;
                brackets.push(BracketLine {
                    left,
                    right,
                    value,
                    line,
                });
            } else if let Some(rest) = content.strip_prefix("eps ") {
                let ls = require_basis(&labels)?;
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line, "expected `eps A = ...`"))?;
                let source = index(&ls, lhs.trim())?;
                if let Some(prev) = eps.iter().find(|x| x.source == source) {
                    return Err(parse_err(
                        line,
                        format!("duplicate eps line for {}, first given on line {}", lhs.trim(), prev.line),
                    ));
                }
                let value = parse_combination(&ls, rhs, line)?;
                eps.push(EpsLine { source, value, line });
            } else if let Some(rest) = content.strip_prefix('p') {
                let value = rest
                    .trim_start()
                    .strip_prefix('=')
                    .ok_or_else(|| parse_err(line, format!("unrecognized line {content:?}")))?;
                if nilpotency.is_some() {
                    return Err(parse_err(line, "duplicate p line"));
                }
                let p: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, format!("malformed nilpotency index {:?}", value.trim())))?;
                if p < 2 {
                    return Err(parse_err(line, format!("nilpotency index must be at least 2, got {p}")));
                }
                nilpotency = Some(p);
            } else {
                return Err(parse_err(line, format!("unrecognized line {content:?}")));
            }
        }
        let labels = labels.ok_or_else(|| parse_err(text.lines().count().max(1), "missing basis line"))?;
        Ok(AlgebraFile {
            name: name.unwrap_or_else(|| "L".to_string()),
            labels,
            brackets,
            eps,
            nilpotency: nilpotency.unwrap_or(2),
        })
    }

    /// Canonical document for `l`: nonzero brackets in basis order, nonzero
    /// `ε` columns, `p` only when it differs from 2.
    pub fn from_algebra(l: &LieAlgebra) -> AlgebraFile {
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let value = l.basis_bracket(i, j);
                if !is_zero_vector(&value) {
                    brackets.push(BracketLine {
                        left: i,
                        right: j,
                        value,
                        line: 0,
                    });
                }
            }
        }
        let eps = match l.eps_opt() {
            Some(e) => (0..n)
                .map(|j| (j, e.column(j)))
                .filter(|(_, v)| !is_zero_vector(v))
                .map(|(source, value)| EpsLine {
                    source,
                    value,
                    line: 0,
                })
                .collect(),
            None => Vec::new(),
        };
        AlgebraFile {
            name: l.name().to_string(),
            labels: l.labels().to_vec(),
            brackets,
            eps,
            nilpotency: l.nilpotency_index(),
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.labels.len();
        let mut b = LieAlgebraBuilder::new(self.name.clone(), self.labels.clone());
        for x in &self.brackets {
            b = b.bracket(x.left, x.right, x.value.clone());
        }
        if !self.eps.is_empty() {
            let mut e = Matrix::zeros(n, n);
            for x in &self.eps {
                e.set_column(x.source, &x.value);
            }
            b = b.eps(e);
        }
        b.nilpotency(self.nilpotency).build()
    }

    fn bracket_line(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.brackets
            .iter()
            .find(|x| (x.left, x.right) == (a, b))
            .map(|x| x.line)
    }

    fn eps_line(&self, i: usize) -> Option<usize> {
        self.eps.iter().find(|x| x.source == i).map(|x| x.line)
    }

    /// Lines behind `[ε x_e, x_o]` and `ε[x_e, x_o]`.
    fn eps_bracket_lines(&self, e: usize, o: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.eps_line(e).into_iter().chain(self.bracket_line(e, o)).collect();
        if let Some(col) = self.eps.iter().find(|x| x.source == e) {
            for (s, c) in col.value.iter().enumerate() {
                if !c.is_zero() && s != o {
                    out.extend(self.bracket_line(s, o));
                }
            }
        }
        out
    }

    /// Source lines involved in a violation: the bracket and `eps` lines
    /// whose data enter the failing identity.
    pub fn violation_lines(&self, v: &Violation) -> Vec<usize> {
        let mut out: Vec<usize> = match *v {
            Violation::Jacobi { i, j, k } => [(i, j), (i, k), (j, k)]
                .iter()
                .filter_map(|&(a, b)| self.bracket_line(a, b))
                .collect(),
            Violation::EpsNotNilpotent { j, .. } => self.eps_line(j).into_iter().collect(),
            Violation::EpsLeft { i, j } => self.eps_bracket_lines(i, j),
            Violation::EpsRight { i, j } => self.eps_bracket_lines(j, i),
        };
        out.retain(|&l| l > 0);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Validation of the built algebra, each violation annotated with its
    /// source lines.
    pub fn validate(&self) -> Result<(LieAlgebra, Vec<String>)> {
        let l = self.to_algebra()?;
        let report = l.validate();
        let lines = report
            .violations
            .iter()
            .map(|v| {
                let text = v.describe(&self.labels);
                let refs = self.violation_lines(v);
                if refs.is_empty() {
                    text
                } else {
                    let refs: Vec<String> = refs.iter().map(|r| r.to_string()).collect();
                    format!("{text} (line {})", refs.join(", "))
                }
            })
            .collect();
        Ok((l, lines))
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "basis: {}", self.labels.join(" "))?;
        let mut brackets: Vec<&BracketLine> = self.brackets.iter().collect();
        brackets.sort_by_key(|x| (x.left, x.right));
        for x in brackets.into_iter().filter(|x| !is_zero_vector(&x.value)) {
            writeln!(
                f,
                "bracket {} {} = {}",
                self.labels[x.left],
                self.labels[x.right],
                format_combination(&self.labels, &x.value)
            )?;
        }
        let mut eps: Vec<&EpsLine> = self.eps.iter().collect();
        eps.sort_by_key(|x| x.source);
        for x in eps.into_iter().filter(|x| !is_zero_vector(&x.value)) {
            writeln!(
                f,
                "eps {} = {}",
                self.labels[x.source],
                format_combination(&self.labels, &x.value)
            )?;
        }
        if self.nilpotency != 2 {
            writeln!(f, "p = {}", self.nilpotency)?;
        }
        Ok(())
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    AlgebraFile::parse(text)?.to_algebra()
}

/// Canonical text of `l`; [`parse_algebra`] inverts it.
pub fn serialize_algebra(l: &LieAlgebra) -> String {
    AlgebraFile::from_algebra(l).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    const L4: &str = "\
# four-dimensional example
name: L4
basis: X Y eX eY
bracket X Y = eX
eps X = eX
eps Y = eY
";

    #[test]
    fn l4_document_validates() {
        let doc = AlgebraFile::parse(L4).unwrap();
        assert_eq!(doc.brackets.len(), 1);
        assert_eq!(doc.eps.len(), 2);
        let (l, violations) = doc.validate().unwrap();
        assert!(violations.is_empty());
        assert_eq!(l.dim(), 4);
        assert_eq!(l.eps().rank(), 2);
        assert_eq!(serialize_algebra(&l), L4.lines().skip(1).map(|s| format!("{s}\n")).collect::<String>());
    }

    #[test]
    fn no_brackets_means_abelian() {
        let l = parse_algebra("basis: A B C\n").unwrap();
        assert_eq!(l.name(), "L");
        assert!(l.ad_matrices().iter().all(Matrix::is_zero));
        assert!(!l.has_eps());
    }

    #[test]
    fn combinations() {
        let labels: Vec<String> = ["E", "F", "H"].iter().map(|s| s.to_string()).collect();
        let v = parse_combination(&labels, "2*E - 1/2*F + H - H", 1).unwrap();
        assert_eq!(v, vec![rat(2), frac(-1, 2), rat(0)]);
        assert_eq!(format_combination(&labels, &v), "2*E - 1/2*F");
        assert_eq!(format_combination(&labels, &[rat(-1), rat(0), rat(3)]), "-E + 3*H");
        assert_eq!(format_combination(&labels, &zero_vector(3)), "0");
        for bad in ["", "E +", "2*-E", "1/0*E", "x*E", "G", "E F"] {
            assert!(parse_combination(&labels, bad, 1).is_err(), "{bad:?}");
        }
    }

    fn line_of(text: &str) -> usize {
        match AlgebraFile::parse(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn grammar_violations_carry_lines() {
        assert_eq!(line_of("basis: X Y\nbracket Y X = X\n"), 2);
        assert_eq!(line_of("basis: X Y\nbracket X Y = X\nbracket X Y = Y\n"), 3);
        assert_eq!(line_of("basis: X Y\n\nbracket X Z = X\n"), 3);
        assert_eq!(line_of("basis: X Y\nbracket X Y = 1/x*X\n"), 2);
        assert_eq!(line_of("bracket X Y = X\nbasis: X Y\n"), 1);
        assert_eq!(line_of("basis: X X\n"), 1);
        assert_eq!(line_of("basis: X\np = 1\n"), 2);
        assert_eq!(line_of("basis: X\nfoo\n"), 2);
    }

    #[test]
    fn axiom_violations_reference_lines() {
        let text = "basis: U V W\nbracket U V = W\neps W = U\n";
        let (_, violations) = AlgebraFile::parse(text).unwrap().validate().unwrap();
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.ends_with("(line 2, 3)")), "{violations:?}");
    }

    #[test]
    fn nilpotency_line() {
        let l = parse_algebra("basis: A eA e2A\neps A = eA\neps eA = e2A\np = 3\n").unwrap();
        assert_eq!(l.nilpotency_index(), 3);
        assert!(l.validate().is_valid());
        assert!(serialize_algebra(&l).ends_with("p = 3\n"));
    }
}
