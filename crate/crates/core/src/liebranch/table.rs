//! The branching table of the 27-dimensional `E6` representation to the
//! maximal connected semisimple subgroups, and the elimination replay.
//!
//! Weights use Bourbaki numbering. Tables in McKay-Patera numbering differ
//! here only for `G2`, where their `w2` (the 7-dimensional representation)
//! is Bourbaki `w1`.
//! Each summand is pinned down by its dimension and duality behaviour, so
//! the numbering never changes a verdict.

use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::types::{Family, SimpleType, Weight};
use super::weyl::{dual_weight, weyl_dim};
use super::Error;

/// The checked-in table.
pub const ASSET: &str = include_str!("../../assets/branching_e6.json");

/// SHA-256 of [`ASSET`].
pub const ASSET_SHA256: &str = "a8572c5835b0df1a6146dab97a95d3fea1331d41a6b4b0a3592a294e17315925";

pub const TABLE_VERSION: u32 = 1;

/// Dimension of the representation being branched.
pub const E6_REP_DIM: u64 = 27;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
pub enum Elimination {
    SelfDual,
    NoBigSummand,
    AlmostFaithfulComplement,
    G2Containment,
}

impl Elimination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Elimination::SelfDual => "SelfDual",
            Elimination::NoBigSummand => "NoBigSummand",
            Elimination::AlmostFaithfulComplement => "AlmostFaithfulComplement",
            Elimination::G2Containment => "G2Containment",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    version: u32,
    rows: Vec<RowFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RowFile {
    subgroup: Vec<String>,
    summands: Vec<Vec<Vec<i64>>>,
    dims: Vec<u64>,
    self_dual: bool,
    elimination: Elimination,
}

/// One irreducible summand: a highest weight per simple factor.
pub type Summand = Vec<Weight>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchRow {
    pub subgroup: Vec<SimpleType>,
    pub summands: Vec<Summand>,
    pub expected_dims: Vec<u64>,
    pub expected_self_dual: bool,
    pub elimination: Elimination,
}

impl BranchRow {
    /// `"A2xG2"` style label.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.subgroup.iter().map(ToString::to_string).collect();
        parts.join("x")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingTable {
    pub version: u32,
    pub rows: Vec<BranchRow>,
    pub sha256: String,
}

impl BranchingTable {
    pub fn embedded() -> Self {
        Self::parse(ASSET).expect("embedded branching table is valid")
    }

    /// Parses and schema-checks a table. Arithmetic facts (dimensions, sums,
    /// duality) are not checked here; that is the job of verification.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::Table(e.to_string()))?;
        if file.version != TABLE_VERSION {
            return Err(Error::Table(format!(
                "unsupported table version {}",
                file.version
            )));
        }
        if file.rows.is_empty() {
            return Err(Error::Table("table has no rows".into()));
        }
        let rows = file
            .rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| row_from_file(r).map_err(|e| Error::Table(format!("row {i}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BranchingTable {
            version: file.version,
            rows,
            sha256: sha256_hex(text.as_bytes()),
        })
    }

    pub fn checksum_matches(&self) -> bool {
        self.sha256 == ASSET_SHA256
    }
}

fn row_from_file(r: RowFile) -> Result<BranchRow, Error> {
    let subgroup = r
        .subgroup
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<SimpleType>, _>>()?;
    if subgroup.is_empty() {
        return Err(Error::Table("empty subgroup".into()));
    }
    if r.summands.len() != r.dims.len() {
        return Err(Error::Table(format!(
            "{} summands but {} dimensions",
            r.summands.len(),
            r.dims.len()
        )));
    }
    let summands = r
        .summands
        .into_iter()
        .map(|s| {
            if s.len() != subgroup.len() {
                return Err(Error::Table(format!(
                    "summand has {} factors, expected {}",
                    s.len(),
                    subgroup.len()
                )));
            }
            s.into_iter()
                .zip(&subgroup)
                .map(|(w, t)| {
                    let w = Weight(w);
                    if w.coords().len() != t.rank() || !w.is_dominant() {
                        return Err(Error::InvalidWeight(format!(
                            "{w} is not a dominant weight of {t}"
                        )));
                    }
                    Ok(w)
                })
                .collect()
        })
        .collect::<Result<Vec<Summand>, _>>()?;
    Ok(BranchRow {
        subgroup,
        summands,
        expected_dims: r.dims,
        expected_self_dual: r.self_dual,
        elimination: r.elimination,
    })
}

pub fn summand_dim(subgroup: &[SimpleType], summand: &Summand) -> Result<u64, Error> {
    subgroup
        .iter()
        .zip(summand)
        .try_fold(1u64, |acc, (&t, w)| Ok(acc * weyl_dim(t, w)?))
}

pub fn dual_summand(subgroup: &[SimpleType], summand: &Summand) -> Result<Summand, Error> {
    subgroup
        .iter()
        .zip(summand)
        .map(|(&t, w)| dual_weight(t, w))
        .collect()
}

/// A direct sum is self-dual iff its multiset of summands is closed under duality.
pub fn is_self_dual_sum(subgroup: &[SimpleType], summands: &[Summand]) -> Result<bool, Error> {
    let mut original = summands.to_vec();
    let mut dual = summands
        .iter()
        .map(|s| dual_summand(subgroup, s))
        .collect::<Result<Vec<_>, _>>()?;
    original.sort();
    dual.sort();
    Ok(original == dual)
}

/// Recomputed facts for one row next to what the table claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub label: String,
    pub expected_dims: Vec<u64>,
    pub dims: Vec<u64>,
    pub sum: u64,
    pub expected_self_dual: bool,
    pub self_dual: bool,
}

impl RowCheck {
    pub fn dims_ok(&self) -> bool {
        self.dims == self.expected_dims
    }

    pub fn sum_ok(&self) -> bool {
        self.sum == E6_REP_DIM
    }

    pub fn duality_ok(&self) -> bool {
        self.self_dual == self.expected_self_dual
    }

    pub fn ok(&self) -> bool {
        self.dims_ok() && self.sum_ok() && self.duality_ok()
    }
}

/// Dimension and duality of the `E6` representation itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E6Check {
    pub weight: Weight,
    pub dim: u64,
    pub dual: Weight,
    pub self_dual: bool,
}

pub fn e6_check() -> E6Check {
    let e6: SimpleType = "E6".parse().expect("E6 is supported");
    // Either 27-dimensional representation works; they are dual to each other.
    let weight = Weight::fundamental(6, 1);
    let dim = weyl_dim(e6, &weight).expect("dominant");
    let dual = dual_weight(e6, &weight).expect("dominant");
    let self_dual = dual == weight;
    E6Check {
        weight,
        dim,
        dual,
        self_dual,
    }
}

pub fn verify_row(row: &BranchRow) -> Result<RowCheck, Error> {
    let dims = row
        .summands
        .iter()
        .map(|s| summand_dim(&row.subgroup, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RowCheck {
        label: row.label(),
        expected_dims: row.expected_dims.clone(),
        sum: dims.iter().sum(),
        dims,
        expected_self_dual: row.expected_self_dual,
        self_dual: is_self_dual_sum(&row.subgroup, &row.summands)?,
    })
}

pub fn verify_branching_table(table: &BranchingTable) -> Result<Vec<RowCheck>, Error> {
    table.rows.iter().map(verify_row).collect()
}

/// Lower bound for the rank of the nontrivial simple summand:
/// `h^0(L (x) omega) + h^d(L) + d - 1` on the Fano surface (`d = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigSummandBound {
    pub h0_term: u64,
    pub hd_term: u64,
    pub d_minus_one: u64,
}

impl BigSummandBound {
    pub fn total(&self) -> u64 {
        self.h0_term + self.hd_term + self.d_minus_one
    }
}

pub fn min_big_summand_rank() -> BigSummandBound {
    // h^2(F, L) = 6, and h^0(F, L (x) omega_F) = 6 by Serre duality applied
    // to the dual torsion bundle.
    BigSummandBound {
        h0_term: 6,
        hd_term: 6,
        d_minus_one: 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowElimination {
    pub label: String,
    pub recorded: Elimination,
    /// Every reason whose check passed, in enum order.
    pub reasons: Vec<Elimination>,
    /// Number of summands of dimension at least the threshold.
    pub big_summands: usize,
}

impl RowElimination {
    /// Eliminated, and for the recorded reason.
    pub fn ok(&self) -> bool {
        self.reasons.contains(&self.recorded)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationReport {
    pub threshold: u64,
    pub rows: Vec<RowElimination>,
    /// Every non-self-dual row has at most one summand of dimension >= threshold.
    pub at_most_one_big_summand: bool,
}

impl EliminationReport {
    pub fn ok(&self) -> bool {
        self.at_most_one_big_summand && self.rows.iter().all(RowElimination::ok)
    }
}

fn is_trivial_on(summand: &Summand, factor: usize) -> bool {
    summand[factor].is_zero()
}

/// The complement of the unique big summand contains a summand that is
/// nontrivial on every simple factor, which almost-faithfulness requires.
/// The almost-faithfulness itself is taken from the literature.
fn almost_faithful_complement(row: &BranchRow, dims: &[u64], threshold: u64) -> bool {
    let big: Vec<usize> = (0..dims.len()).filter(|&i| dims[i] >= threshold).collect();
    big.len() == 1
        && row
            .summands
            .iter()
            .enumerate()
            .any(|(i, s)| i != big[0] && (0..row.subgroup.len()).all(|f| !is_trivial_on(s, f)))
}

/// A `G2` factor such that the complement of the unique big summand is
/// `G2`-trivial and nontrivial elsewhere (forcing the monodromy into `G2`),
/// while the big summand restricted to `G2` splits into pieces of dimension
/// below the threshold.
fn g2_containment(row: &BranchRow, dims: &[u64], threshold: u64) -> Result<bool, Error> {
    let Some(g) = row.subgroup.iter().position(|t| t.family() == Family::G) else {
        return Ok(false);
    };
    let big: Vec<usize> = (0..dims.len()).filter(|&i| dims[i] >= threshold).collect();
    if big.len() != 1 {
        return Ok(false);
    }
    let b = &row.summands[big[0]];
    let g2_piece = weyl_dim(row.subgroup[g], &b[g])?;
    let others: u64 = row
        .subgroup
        .iter()
        .enumerate()
        .filter(|&(f, _)| f != g)
        .try_fold(1u64, |acc, (f, &t)| {
            Ok::<_, Error>(acc * weyl_dim(t, &b[f])?)
        })?;
    let splits = g2_piece * others == dims[big[0]] && g2_piece < threshold;
    let complement_ok = row
        .summands
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != big[0])
        .all(|(_, s)| {
            is_trivial_on(s, g) && (0..row.subgroup.len()).any(|f| f != g && !is_trivial_on(s, f))
        });
    Ok(splits && complement_ok)
}

pub fn rule_out_subgroups(
    table: &BranchingTable,
    threshold: u64,
) -> Result<EliminationReport, Error> {
    let mut rows = Vec::new();
    let mut at_most_one = true;
    for row in &table.rows {
        let check = verify_row(row)?;
        let big_summands = check.dims.iter().filter(|&&d| d >= threshold).count();
        if !check.self_dual && big_summands > 1 {
            at_most_one = false;
        }
        let mut reasons = Vec::new();
        if check.self_dual {
            reasons.push(Elimination::SelfDual);
        }
        if big_summands == 0 {
            reasons.push(Elimination::NoBigSummand);
        }
        if !check.self_dual && almost_faithful_complement(row, &check.dims, threshold) {
            reasons.push(Elimination::AlmostFaithfulComplement);
        }
        if !check.self_dual && g2_containment(row, &check.dims, threshold)? {
            reasons.push(Elimination::G2Containment);
        }
        rows.push(RowElimination {
            label: row.label(),
            recorded: row.elimination,
            reasons,
            big_summands,
        });
    }
    Ok(EliminationReport {
        threshold,
        rows,
        at_most_one_big_summand: at_most_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksum_is_pinned() {
        assert_eq!(sha256_hex(ASSET.as_bytes()), ASSET_SHA256);
        assert!(BranchingTable::embedded().checksum_matches());
    }

    #[test]
    fn every_row_verifies() {
        let table = BranchingTable::embedded();
        assert_eq!(table.rows.len(), 8);
        for check in verify_branching_table(&table).unwrap() {
            assert!(check.ok(), "{check:?}");
        }
    }

    #[test]
    fn named_rows() {
        let table = BranchingTable::embedded();
        let checks = verify_branching_table(&table).unwrap();
        let find = |l: &str| checks.iter().find(|c| c.label == l).unwrap();
        assert_eq!(find("D5").dims, vec![1, 10, 16]);
        assert!(!find("D5").self_dual);
        assert_eq!(find("A2xA2xA2").dims, vec![9, 9, 9]);
        assert!(!find("A2xA2xA2").self_dual);
        assert!(find("G2").self_dual);
    }

    #[test]
    fn e6_rep() {
        let e = e6_check();
        assert_eq!(e.dim, 27);
        assert!(!e.self_dual);
        assert_eq!(e.dual, Weight::fundamental(6, 6));
    }

    #[test]
    fn threshold_is_thirteen() {
        let b = min_big_summand_rank();
        assert_eq!((b.h0_term, b.hd_term, b.d_minus_one), (6, 6, 1));
        assert_eq!(b.total(), 13);
    }

    #[test]
    fn elimination_replay() {
        let report = rule_out_subgroups(&BranchingTable::embedded(), 13).unwrap();
        assert!(report.ok(), "{report:?}");
        let find = |l: &str| {
            report
                .rows
                .iter()
                .find(|r| r.label == l)
                .unwrap()
                .reasons
                .clone()
        };
        assert_eq!(find("A2xA2xA2"), vec![Elimination::NoBigSummand]);
        assert_eq!(find("D5"), vec![Elimination::AlmostFaithfulComplement]);
        assert_eq!(find("A1xA5"), vec![Elimination::AlmostFaithfulComplement]);
        assert_eq!(find("A2xG2"), vec![Elimination::G2Containment]);
        for l in ["C4", "F4", "A2", "G2"] {
            assert!(find(l).contains(&Elimination::SelfDual), "{l}");
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(BranchingTable::parse("{"), Err(Error::Table(_))));
        assert!(matches!(
            BranchingTable::parse(r#"{"version":1,"rows":[]}"#),
            Err(Error::Table(_))
        ));
        let bad_type = ASSET.replacen("\"D5\"", "\"B3\"", 1);
        assert!(BranchingTable::parse(&bad_type).is_err());
        let extra = ASSET.replacen("\"version\": 1", "\"version\": 1, \"x\": 0", 1);
        assert!(BranchingTable::parse(&extra).is_err());
    }

    #[test]
    fn wrong_dimension_fails_verification_not_parsing() {
        let text = ASSET.replacen("[1, 10, 16]", "[1, 10, 17]", 1);
        let table = BranchingTable::parse(&text).unwrap();
        assert!(!table.checksum_matches());
        let checks = verify_branching_table(&table).unwrap();
        assert!(!checks[0].dims_ok());
        assert!(checks[0].sum_ok());
    }
}
