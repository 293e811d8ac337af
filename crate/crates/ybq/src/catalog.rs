//! Named biquandles and link diagrams, plus the summary tables over them.
//!
//! Biquandle entries are built from their defining constructions; a few
//! order-3 tables without a closed-form construction are pinned from the
//! exhaustive enumeration and shipped as external data files. Diagram
//! entries are frozen JSON payloads validated on load against recorded
//! content fingerprints.

use crate::biquandle::{BiquandleError, FiniteBiquandle};
use crate::diagram::{DiagramError, LinkDiagram};
use crate::invariant::{invariant, Mode};
use crate::presentation::{reduced_universal_group, suggest_s0, universal_group, Presentation};
use crate::snf::AbelianGroup;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug)]
pub enum CatalogError {
    UnknownName(String),
    ExternalDataRequired(String),
    Biquandle(BiquandleError),
    Diagram(DiagramError),
    Payload(String),
    ChecksumMismatch { name: String, expected: u64, actual: u64 },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownName(n) => write!(f, "unknown catalog name: {n}"),
            CatalogError::ExternalDataRequired(n) => {
                write!(f, "external data required for {n} (set YBQ_CATALOG or ship a data file)")
            }
            CatalogError::Biquandle(e) => write!(f, "catalog payload failed verification: {e}"),
            CatalogError::Diagram(e) => write!(f, "catalog payload failed validation: {e}"),
            CatalogError::Payload(e) => write!(f, "bad catalog payload: {e}"),
            CatalogError::ChecksumMismatch { name, expected, actual } => write!(
                f,
                "checksum mismatch for {name}: recorded {expected:016x}, found {actual:016x}"
            ),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<BiquandleError> for CatalogError {
    fn from(e: BiquandleError) -> Self {
        CatalogError::Biquandle(e)
    }
}

impl From<DiagramError> for CatalogError {
    fn from(e: DiagramError) -> Self {
        CatalogError::Diagram(e)
    }
}

/// FNV-1a content fingerprint used to pin the frozen payloads.
pub fn fingerprint(text: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Table pinned from the exhaustive order-3 enumeration: the unique class
/// that is involutive with all three diagonal pairs fixed and three
/// generator classes (the flip is the six-generator one).
fn bq3_5() -> FiniteBiquandle {
    let tables = crate::biquandle::SigmaTables {
        n: 3,
        sigma1: vec![vec![0, 1, 2], vec![0, 1, 2], vec![1, 0, 2]],
        sigma2: vec![vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]],
    };
    FiniteBiquandle::from_tables(tables, Some("BQ3_5".into())).unwrap()
}

/// The three-element quandle with `-◁0 = (1 2)` and `-◁1 = -◁2 = id`.
pub fn q3_quandle() -> Vec<Vec<usize>> {
    vec![vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]
}

mod embedded {
    pub const DIAGRAMS: &[(&str, &str)] = &[
        ("unknot", include_str!("../data/diagrams/unknot.json")),
        ("unlink2", include_str!("../data/diagrams/unlink2.json")),
        ("hopf", include_str!("../data/diagrams/hopf.json")),
        ("3_1", include_str!("../data/diagrams/3_1.json")),
        ("4_1", include_str!("../data/diagrams/4_1.json")),
        ("5_1", include_str!("../data/diagrams/5_1.json")),
        ("5_2", include_str!("../data/diagrams/5_2.json")),
        ("6_1", include_str!("../data/diagrams/6_1.json")),
        ("6_2", include_str!("../data/diagrams/6_2.json")),
        ("6_3", include_str!("../data/diagrams/6_3.json")),
        ("7_4", include_str!("../data/diagrams/7_4.json")),
        ("whitehead", include_str!("../data/diagrams/whitehead.json")),
        ("borromean", include_str!("../data/diagrams/borromean.json")),
        ("3_1_r2", include_str!("../data/diagrams/3_1_r2.json")),
        ("4_1_alt", include_str!("../data/diagrams/4_1_alt.json")),
    ];
    pub const DIAGRAM_SUMS: &str = include_str!("../data/diagrams/checksums.tsv");
}

/// Resolve a biquandle by catalog name. Parametric names: `wada(Zm)`,
/// `alex(m,s,t)`, `D_n` and `D_n*`. The entries `BQ3_3`, `BQ3_3*`, `BQ3_9`
/// and `BQ3_9*` have no table in the defining sources and resolve only when
/// an external data directory supplies them (`YBQ_CATALOG` or
/// [`biquandle_with_external`]).
pub fn biquandle(name: &str) -> Result<FiniteBiquandle, CatalogError> {
    biquandle_with_external(name, external_dir().as_deref())
}

fn external_dir() -> Option<std::path::PathBuf> {
    std::env::var_os("YBQ_CATALOG").map(std::path::PathBuf::from)
}

pub fn biquandle_with_external(
    name: &str,
    external: Option<&std::path::Path>,
) -> Result<FiniteBiquandle, CatalogError> {
    let fixed = match name {
        "flip2" => Some(FiniteBiquandle::flip(2)),
        "antiflip" => Some(FiniteBiquandle::antiflip()),
        "flip3" | "BQ3_1" => Some(FiniteBiquandle::flip(3).with_name("BQ3_1")),
        "BQ3_2" => {
            // the two-element antiflip together with a separate fixed
            // element: σ(x,y) = (y + x²y, x + y²x) on Z3
            let m = |v: i64| v.rem_euclid(3) as usize;
            let sigma1 =
                (0..3).map(|x: i64| (0..3).map(|y: i64| m(y + x * x * y)).collect()).collect();
            let sigma2 =
                (0..3).map(|x: i64| (0..3).map(|y: i64| m(x + y * y * x)).collect()).collect();
            Some(
                FiniteBiquandle::from_tables(
                    crate::biquandle::SigmaTables { n: 3, sigma1, sigma2 },
                    Some("BQ3_2".into()),
                )
                .unwrap(),
            )
        }
        "BQ3_4" => Some(FiniteBiquandle::wada_cyclic(3).with_name("BQ3_4")),
        "BQ3_4*" => Some(FiniteBiquandle::wada_cyclic(3).inverse_solution().with_name("BQ3_4*")),
        "BQ3_5" => Some(bq3_5()),
        "BQ3_6" => Some(FiniteBiquandle::from_quandle(&q3_quandle(), false)?.with_name("BQ3_6")),
        "BQ3_6*" => Some(FiniteBiquandle::from_quandle(&q3_quandle(), true)?.with_name("BQ3_6*")),
        "BQ3_7" => Some(FiniteBiquandle::from_bijection(&[0, 2, 1])?.with_name("BQ3_7")),
        "BQ3_8" => Some(
            FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), false)?
                .with_name("BQ3_8"),
        ),
        "BQ3_8*" => Some(
            FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(3), true)?
                .with_name("BQ3_8*"),
        ),
        "BQ3_10" => Some(FiniteBiquandle::from_bijection(&[1, 2, 0])?.with_name("BQ3_10")),
        "S4_4cycles" => Some(
            FiniteBiquandle::from_quandle(&FiniteBiquandle::four_cycles_quandle(), false)?
                .with_name("S4_4cycles"),
        ),
        _ => None,
    };
    if let Some(b) = fixed {
        return Ok(b);
    }
    if let Some(rest) = name.strip_prefix("wada(Z").and_then(|r| r.strip_suffix(')')) {
        let m: usize = rest.parse().map_err(|_| CatalogError::UnknownName(name.into()))?;
        return Ok(FiniteBiquandle::wada_cyclic(m));
    }
    if let Some(rest) = name.strip_prefix("alex(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() == 3 {
            let m: usize = parts[0].parse().map_err(|_| CatalogError::UnknownName(name.into()))?;
            let s: i64 = parts[1].parse().map_err(|_| CatalogError::UnknownName(name.into()))?;
            let t: i64 = parts[2].parse().map_err(|_| CatalogError::UnknownName(name.into()))?;
            return Ok(FiniteBiquandle::alexander(m, s, t)?);
        }
        return Err(CatalogError::UnknownName(name.into()));
    }
    if let Some(rest) = name.strip_prefix("D_").or_else(|| name.strip_prefix('D')) {
        let (num, inverse) = match rest.strip_suffix('*') {
            Some(r) => (r, true),
            None => (rest, false),
        };
        if let Ok(n) = num.parse::<usize>() {
            let q = FiniteBiquandle::dihedral_quandle(n);
            return Ok(FiniteBiquandle::from_quandle(&q, inverse)?
                .with_name(format!("D{n}{}", if inverse { "*" } else { "" })));
        }
    }
    if matches!(name, "BQ3_3" | "BQ3_3*" | "BQ3_9" | "BQ3_9*") {
        if let Some(dir) = external {
            let fname = format!("{}.json", name.replace('*', "s"));
            let path = dir.join(fname);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CatalogError::Payload(format!("{}: {e}", path.display())))?;
            let b = FiniteBiquandle::from_json(&text)
                .map_err(|e| CatalogError::Payload(e.to_string()))?;
            return Ok(b.with_name(name));
        }
        return Err(CatalogError::ExternalDataRequired(name.into()));
    }
    Err(CatalogError::UnknownName(name.into()))
}

/// Names of all biquandle entries with built-in tables, in display order.
pub fn biquandle_names() -> Vec<&'static str> {
    vec![
        "BQ3_1", "BQ3_2", "BQ3_3", "BQ3_3*", "BQ3_4", "BQ3_4*", "BQ3_5", "BQ3_6", "BQ3_6*",
        "BQ3_7", "BQ3_8", "BQ3_8*", "BQ3_9", "BQ3_9*", "BQ3_10",
    ]
}

/// Resolve a diagram by catalog name, re-validating the payload and its
/// recorded fingerprint.
pub fn diagram(name: &str) -> Result<LinkDiagram, CatalogError> {
    if let Some(dir) = external_dir() {
        let path = dir.join(format!("{name}.json"));
        if let Ok(text) = std::fs::read_to_string(&path) {
            return LinkDiagram::from_json(&text)
                .map_err(|e| CatalogError::Payload(e.to_string()));
        }
    }
    let Some((_, text)) = embedded::DIAGRAMS.iter().find(|(n, _)| *n == name) else {
        return Err(CatalogError::UnknownName(name.into()));
    };
    let sums = diagram_checksums();
    let expected = *sums
        .get(name)
        .ok_or_else(|| CatalogError::Payload(format!("no recorded checksum for {name}")))?;
    let actual = fingerprint(text);
    if expected != actual {
        return Err(CatalogError::ChecksumMismatch { name: name.into(), expected, actual });
    }
    let d = LinkDiagram::from_json(text).map_err(|e| CatalogError::Payload(e.to_string()))?;
    d.validate()?;
    Ok(d)
}

pub fn diagram_names() -> Vec<&'static str> {
    embedded::DIAGRAMS.iter().map(|(n, _)| *n).collect()
}

fn diagram_checksums() -> BTreeMap<String, u64> {
    embedded::DIAGRAM_SUMS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (name, sum) = l.split_once('\t').expect("name\\tsum");
            (name.to_string(), u64::from_str_radix(sum.trim(), 16).expect("hex sum"))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

/// One row of the universal-group table.
#[derive(Debug, Clone)]
pub struct GroupRow {
    pub name: String,
    pub generators: usize,
    pub relations: Vec<String>,
    pub sigma_order: usize,
    pub diagonal_fixed: usize,
    /// reduced variant only: the seed that was used
    pub seed: Option<Vec<(usize, usize)>>,
    pub abelianization: AbelianGroup,
}

fn available(names: &[&str]) -> Vec<(String, FiniteBiquandle)> {
    names
        .iter()
        .filter_map(|n| biquandle(n).ok().map(|b| (n.to_string(), b)))
        .collect()
}

/// Universal-group data for every order-3 catalog entry with an available
/// table.
pub fn table_universal() -> Vec<GroupRow> {
    available(&biquandle_names())
        .into_iter()
        .map(|(name, b)| {
            let p = universal_group(&b);
            GroupRow {
                name,
                generators: p.generators.len(),
                relations: p.relations.iter().map(|r| r.display(|g| p.label_of(g))).collect(),
                sigma_order: b.sigma_order(),
                diagonal_fixed: b.diagonal_fixed_points(),
                seed: None,
                abelianization: p.abelianization(),
            }
        })
        .collect()
}

/// Reduced-group data with the automatically chosen seed, after
/// simplification.
pub fn table_reduced() -> Vec<GroupRow> {
    available(&biquandle_names())
        .into_iter()
        .map(|(name, b)| {
            let s0 = suggest_s0(&b);
            let p = reduced_universal_group(&b, &s0);
            let t = p.tietze_simplified(p.tietze_budget());
            GroupRow {
                name,
                generators: t.generators.len(),
                relations: t.relations.iter().map(|r| r.display(|g| t.label_of(g))).collect(),
                sigma_order: b.sigma_order(),
                diagonal_fixed: b.diagonal_fixed_points(),
                seed: Some(s0),
                abelianization: t.abelianization(),
            }
        })
        .collect()
}

/// One cell of the knot table: coloring count and the non-trivial invariant
/// entries (cyclic mode over the simplified universal group).
#[derive(Debug, Clone)]
pub struct KnotCell {
    pub colorings: usize,
    pub nontrivial: Vec<(String, usize)>,
}

pub const KNOT_TABLE_KNOTS: [&str; 7] = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"];

/// Coloring counts and invariant entries for the seven knots of up to six
/// crossings against every available order-3 entry.
pub fn table_knots() -> Result<Vec<(String, Vec<KnotCell>)>, CatalogError> {
    let diagrams: Vec<LinkDiagram> =
        KNOT_TABLE_KNOTS.iter().map(|n| diagram(n)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for (name, b) in available(&biquandle_names()) {
        let p0 = universal_group(&b);
        let p = p0.tietze_simplified(p0.tietze_budget());
        let mut cells = Vec::new();
        for d in &diagrams {
            let m = invariant(d, &b, &p, Mode::Cyclic);
            let nontrivial: Vec<(String, usize)> = m
                .entries
                .iter()
                .filter(|(t, _)| !t.iter().all(|v| v.is_trivial()))
                .map(|(t, c)| {
                    let vals: Vec<String> =
                        t.iter().map(|v| v.display(|g| p.label_of(g))).collect();
                    (vals.join(","), *c)
                })
                .collect();
            cells.push(KnotCell { colorings: m.colorings, nontrivial });
        }
        rows.push((name, cells));
    }
    Ok(rows)
}

/// Fixed-width text rendering of [`table_universal`] / [`table_reduced`].
pub fn render_group_table(rows: &[GroupRow], reduced: bool) -> String {
    let mut out = String::new();
    let header = if reduced {
        format!("{:8} {:>4} {:>5} {:>4}  {:18} {}\n", "name", "gens", "order", "fix", "seed", "relations")
    } else {
        format!("{:8} {:>4} {:>5} {:>4}  {}\n", "name", "gens", "order", "fix", "relations")
    };
    out.push_str(&header);
    for r in rows {
        let rels = if r.relations.is_empty() { "-".to_string() } else { r.relations.join(", ") };
        if reduced {
            let seed = r
                .seed
                .as_ref()
                .map(|s| {
                    if s.is_empty() {
                        "-".to_string()
                    } else {
                        s.iter()
                            .map(|&(x, y)| format!("[{},{}]", x + 1, y + 1))
                            .collect::<Vec<_>>()
                            .join(",")
                    }
                })
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{:8} {:>4} {:>5} {:>4}  {:18} {}\n",
                r.name, r.generators, r.sigma_order, r.diagonal_fixed, seed, rels
            ));
        } else {
            out.push_str(&format!(
                "{:8} {:>4} {:>5} {:>4}  {}\n",
                r.name, r.generators, r.sigma_order, r.diagonal_fixed, rels
            ));
        }
    }
    out
}

pub fn render_knot_table(rows: &[(String, Vec<KnotCell>)]) -> String {
    let mut out = format!("{:8}", "name");
    for k in KNOT_TABLE_KNOTS {
        out.push_str(&format!(" {k:>14}"));
    }
    out.push('\n');
    for (name, cells) in rows {
        out.push_str(&format!("{name:8}"));
        for c in cells {
            let inv = if c.nontrivial.is_empty() {
                String::new()
            } else {
                let parts: Vec<String> =
                    c.nontrivial.iter().map(|(v, k)| format!("{v}x{k}")).collect();
                format!(" {}", parts.join(";"))
            };
            out.push_str(&format!(" {:>14}", format!("{}{inv}", c.colorings)));
        }
        out.push('\n');
    }
    out
}

/// Presentation for weight computations: simplified universal group, or
/// the simplified reduced group with the suggested seed.
pub fn weight_presentation(b: &FiniteBiquandle, reduced: bool, s0: Option<&[(usize, usize)]>) -> Presentation {
    let p = if reduced {
        let owned;
        let seed = match s0 {
            Some(s) => s,
            None => {
                owned = suggest_s0(b);
                &owned
            }
        };
        reduced_universal_group(b, seed)
    } else {
        universal_group(b)
    };
    p.tietze_simplified(p.tietze_budget())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_entries_resolve_and_verify() {
        for name in ["flip2", "antiflip", "BQ3_1", "BQ3_2", "BQ3_4", "BQ3_4*", "BQ3_5", "BQ3_6",
                     "BQ3_6*", "BQ3_7", "BQ3_8", "BQ3_8*", "BQ3_10", "S4_4cycles"] {
            let b = biquandle(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(crate::biquandle::verify(&b.tables()).passed(), "{name}");
        }
    }

    #[test]
    fn parametric_names_resolve() {
        assert_eq!(biquandle("wada(Z4)").unwrap().order(), 4);
        assert_eq!(biquandle("alex(8,-1,1)").unwrap().order(), 8);
        assert_eq!(biquandle("D_5").unwrap().order(), 5);
        assert_eq!(biquandle("D_5*").unwrap().order(), 5);
        assert!(biquandle("nonsense").is_err());
    }

    #[test]
    fn external_only_entries_error_without_a_directory() {
        for name in ["BQ3_3", "BQ3_3*", "BQ3_9", "BQ3_9*"] {
            match biquandle_with_external(name, None) {
                Err(CatalogError::ExternalDataRequired(_)) => {}
                other => panic!("{name}: expected external-data error, got {other:?}"),
            }
        }
    }

    #[test]
    fn shipped_external_tables_resolve() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/external");
        for name in ["BQ3_3", "BQ3_3*", "BQ3_9", "BQ3_9*"] {
            let b = biquandle_with_external(name, Some(&dir)).unwrap();
            assert_eq!(b.order(), 3);
        }
        // the starred entries are the inverses of the unstarred ones
        let b3 = biquandle_with_external("BQ3_3", Some(&dir)).unwrap();
        let b3s = biquandle_with_external("BQ3_3*", Some(&dir)).unwrap();
        assert!(b3.inverse_solution().is_isomorphic(&b3s).unwrap().is_some());
    }

    #[test]
    fn all_diagrams_validate_with_expected_component_counts() {
        let expected = [
            ("unknot", 1, 0),
            ("unlink2", 2, 0),
            ("hopf", 2, 2),
            ("3_1", 1, 3),
            ("4_1", 1, 4),
            ("5_1", 1, 5),
            ("5_2", 1, 5),
            ("6_1", 1, 6),
            ("6_2", 1, 6),
            ("6_3", 1, 6),
            ("7_4", 1, 7),
            ("whitehead", 2, 5),
            ("borromean", 3, 6),
            ("3_1_r2", 1, 5),
            ("4_1_alt", 1, 4),
        ];
        for (name, comps, crossings) in expected {
            let d = diagram(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(d.components().len(), comps, "{name}");
            assert_eq!(d.crossings().len(), crossings, "{name}");
        }
    }

    #[test]
    fn checksums_pin_the_payloads() {
        let sums = diagram_checksums();
        for (name, text) in embedded::DIAGRAMS {
            assert_eq!(sums[*name], fingerprint(text), "{name} drifted");
        }
    }

    #[test]
    fn knot_identities_via_fox_colorings() {
        // determinant of the double branched cover, knot by knot
        let dets: &[(&str, u64)] = &[
            ("3_1", 3),
            ("4_1", 5),
            ("5_1", 5),
            ("5_2", 7),
            ("6_1", 9),
            ("6_2", 11),
            ("6_3", 13),
            ("7_4", 15),
        ];
        for &(name, det) in dets {
            let d = diagram(name).unwrap();
            for p in [3usize, 5, 7, 11, 13] {
                let dp =
                    FiniteBiquandle::from_quandle(&FiniteBiquandle::dihedral_quandle(p), false)
                        .unwrap();
                let count = crate::coloring::enumerate_colorings(&d, &dp).len();
                let expect = if det % (p as u64) == 0 { p * p } else { p };
                assert_eq!(count, expect, "{name} mod {p}");
            }
        }
    }
}
