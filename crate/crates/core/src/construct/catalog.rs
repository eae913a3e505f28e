use super::{d2_matrix_algebra, dualize, realify, semidirect, ComplexAlgebraDef, GaussianRational};
use crate::error::{Error, Result};
use crate::lie::{gl, LieAlgebra, LieAlgebraBuilder};
use crate::linalg::Matrix;
use crate::structure::Fingerprint;

/// Expected invariants of a catalog entry; `None` leaves a field unchecked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Golden {
    pub dim: usize,
    pub rank_eps: usize,
    pub essential_dim: usize,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub semisimple: Option<bool>,
    pub triangular: Option<bool>,
    pub killing_signature: Option<(usize, usize, usize)>,
}

impl Golden {
    /// Fields of `f` that disagree with this golden, as `field: expected, found`.
    pub fn mismatches(&self, f: &Fingerprint) -> Vec<String> {
        let mut out = Vec::new();
        let mut cmp = |field: &str, want: String, got: String| {
            if want != got {
                out.push(format!("{field}: expected {want}, found {got}"));
            }
        };
        cmp("dim", self.dim.to_string(), f.dim.to_string());
        cmp("rank_eps", self.rank_eps.to_string(), f.rank_eps.to_string());
        cmp("essential_dim", self.essential_dim.to_string(), f.essential_dim.to_string());
        let flags = [
            ("solvable", self.solvable, f.solvable),
            ("nilpotent", self.nilpotent, f.nilpotent),
            ("semisimple", self.semisimple, f.semisimple),
            ("triangular", self.triangular, f.triangular),
        ];
        for (field, want, got) in flags {
            if let Some(want) = want {
                cmp(field, want.to_string(), got.to_string());
            }
        }
        if let Some(sig) = self.killing_signature {
            cmp("killing_signature", format!("{sig:?}"), format!("{:?}", f.killing_signature));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub golden: Golden,
}

/// Largest parameter accepted for the parametrized families.
pub const MAX_PARAMETER: usize = 4;

fn golden(dim: usize, rank_eps: usize) -> Golden {
    Golden {
        dim,
        rank_eps,
        essential_dim: dim - rank_eps,
        ..Golden::default()
    }
}

/// The fixed instances used for goldens and acceptance runs.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let nil = |g: Golden| Golden {
        solvable: Some(true),
        nilpotent: Some(true),
        semisimple: Some(false),
        triangular: Some(true),
        ..g
    };
    let solv = |g: Golden, tri: bool| Golden {
        solvable: Some(true),
        nilpotent: Some(false),
        semisimple: Some(false),
        triangular: Some(tri),
        ..g
    };
    let simple = |g: Golden, sig| Golden {
        solvable: Some(false),
        nilpotent: Some(false),
        semisimple: Some(true),
        triangular: Some(false),
        killing_signature: Some(sig),
        ..g
    };
    let mixed = |g: Golden, sig| Golden {
        solvable: Some(false),
        nilpotent: Some(false),
        semisimple: Some(false),
        triangular: Some(false),
        killing_signature: sig,
        ..g
    };
    let entries = vec![
        ("abelian(1)", nil(golden(1, 0))),
        ("abelian(2)", nil(golden(2, 0))),
        ("dual_numbers", nil(golden(2, 1))),
        ("dual_numbers_plus_R", nil(golden(3, 1))),
        ("aff1", solv(golden(2, 0), true)),
        ("heis3", nil(golden(3, 0))),
        ("heis3_plus_R", nil(golden(4, 0))),
        ("sl2R", simple(golden(3, 0), (2, 1, 0))),
        ("su2", simple(golden(3, 0), (0, 3, 0))),
        ("e2", solv(golden(3, 0), false)),
        ("L4_paper", nil(golden(4, 2))),
        ("sl2R_dual", mixed(golden(6, 3), Some((2, 1, 3)))),
        ("su2_dual", mixed(golden(6, 3), Some((0, 3, 3)))),
        ("e2_dual", solv(golden(6, 3), false)),
        ("glnD2(2)", mixed(golden(8, 4), None)),
        ("NnD2(3)", nil(golden(6, 3))),
        ("TnD2(2)", solv(golden(6, 3), true)),
        ("TnD2(3)", solv(golden(12, 6), true)),
        ("borel_cx_realified", solv(golden(6, 0), false)),
    ];
    entries
        .into_iter()
        .map(|(name, golden)| CatalogEntry {
            name: name.to_string(),
            golden,
        })
        .collect()
}

/// Remarks attached to an entry's reports.
pub fn catalog_notes(name: &str) -> Vec<&'static str> {
    match name {
        "L4_paper" => vec![
            "rank of eps is 2 on this basis (eps X = eX, eps Y = eY); non-dualizability rests on fingerprint comparison",
        ],
        _ => Vec::new(),
    }
}

pub fn catalog_names() -> Vec<String> {
    catalog_entries().into_iter().map(|e| e.name).collect()
}

fn parse_param(name: &str, family: &str) -> Option<std::result::Result<usize, ()>> {
    let rest = name.strip_prefix(family)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(rest.trim().parse::<usize>().map_err(|_| ()))
}

fn abelian(n: usize) -> LieAlgebra {
    LieAlgebraBuilder::new(
        format!("abelian({n})"),
        (1..=n).map(|i| format!("X{i}")).collect(),
    )
    .build()
    .expect("abelian")
}

fn builder(name: &str, labels: &[&str]) -> LieAlgebraBuilder {
    LieAlgebra::builder(name, labels)
}

fn aff1() -> Result<LieAlgebra> {
    builder("aff1", &["X", "Y"]).bracket_labels("X", "Y", &[("Y", 1)]).build()
}

fn heis3() -> Result<LieAlgebra> {
    builder("heis3", &["U", "V", "W"]).bracket_labels("U", "V", &[("W", 1)]).build()
}

fn sl2r() -> Result<LieAlgebra> {
    builder("sl2R", &["H", "E", "F"])
        .bracket_labels("H", "E", &[("E", 2)])
        .bracket_labels("H", "F", &[("F", -2)])
        .bracket_labels("E", "F", &[("H", 1)])
        .build()
}

fn su2() -> Result<LieAlgebra> {
    builder("su2", &["A", "B", "C"])
        .bracket_labels("A", "B", &[("C", 1)])
        .bracket_labels("B", "C", &[("A", 1)])
        .bracket_labels("C", "A", &[("B", 1)])
        .build()
}

fn e2() -> Result<LieAlgebra> {
    let so2 = builder("so2", &["J"]).build()?;
    semidirect("e2", &so2, &[Matrix::from_i64(2, 2, &[0, -1, 1, 0])], &["P1", "P2"])
}

fn l4() -> Result<LieAlgebra> {
    builder("L4_paper", &["X", "Y", "eX", "eY"])
        .bracket_labels("X", "Y", &[("eX", 1)])
        .eps_map(&[("X", "eX"), ("Y", "eY")])
        .build()
}

fn borel() -> Result<LieAlgebra> {
    let g = GaussianRational::from_i64;
    let c = ComplexAlgebraDef::new("borel_cx", &["Z", "V1", "V2"])
        .bracket(0, 1, vec![g(0, 0), g(1, 0), g(0, 0)])
        .bracket(0, 2, vec![g(0, 0), g(0, 0), g(0, 1)]);
    Ok(realify(&c)?.with_name("borel_cx_realified"))
}

fn build(name: &str) -> Result<LieAlgebra> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let param = |family: &str| -> Option<Result<usize>> {
        parse_param(name, family).map(|r| match r {
            Ok(n) if (1..=MAX_PARAMETER).contains(&n) => Ok(n),
            _ => Err(unknown()),
        })
    };
    if let Some(n) = parse_param(name, "abelian") {
        return n.map(abelian).map_err(|_| unknown());
    }
    if let Some(n) = param("glnD2") {
        let n = n?;
        return Ok(dualize(&gl(n), 2)?.with_name(name));
    }
    if let Some(n) = param("NnD2") {
        let n = n?;
        let pos: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        return d2_matrix_algebra(name, n, &pos);
    }
    if let Some(n) = param("TnD2") {
        let n = n?;
        let pos: Vec<_> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        return d2_matrix_algebra(name, n, &pos);
    }
    let named = |l: LieAlgebra, n: &str| l.with_name(n);
    Ok(match name {
        "dual_numbers" => named(dualize(&abelian(1), 2)?, name),
        "dual_numbers_plus_R" => named(dualize(&abelian(1), 2)?.direct_sum(&abelian(1)), name),
        "aff1" => aff1()?,
        "heis3" => heis3()?,
        "heis3_plus_R" => named(heis3()?.direct_sum(&abelian(1)), name),
        "sl2R" => sl2r()?,
        "su2" => su2()?,
        "e2" => e2()?,
        "L4_paper" => l4()?,
        "sl2R_dual" => named(dualize(&sl2r()?, 2)?, name),
        "su2_dual" => named(dualize(&su2()?, 2)?, name),
        "e2_dual" => named(dualize(&e2()?, 2)?, name),
        "borel_cx_realified" => borel()?,
        _ => return Err(unknown()),
    })
}

/// A catalog algebra by name, validated. Parametrized families are written
/// `abelian(n)`, `glnD2(n)`, `NnD2(n)`, `TnD2(n)` with `1 ≤ n ≤ 4` (any
/// `n` for `abelian`).
pub fn catalog(name: &str) -> Result<LieAlgebra> {
    let l = build(name.trim())?;
    let report = l.validate();
    if !report.is_valid() {
        return Err(Error::Verification(format!(
            "catalog entry {name} fails validation: {}",
            report.lines().join("; ")
        )));
    }
    Ok(l)
}
