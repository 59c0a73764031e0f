use std::path::Path;

use e6check::liebranch::{
    e6_check, min_big_summand_rank, rule_out_subgroups, verify_branching_table, BranchingTable,
    ASSET_SHA256, E6_REP_DIM,
};

use super::fermat::join;
use super::{cite, UsageError};
use crate::report::{timed, CheckResult};

/// The embedded table, or the file at `path`. A file that fails to parse or
/// whose checksum differs from the shipped asset is rejected.
pub fn load_table(path: Option<&Path>) -> Result<BranchingTable, UsageError> {
    let Some(path) = path else {
        return Ok(BranchingTable::embedded());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let table =
        BranchingTable::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    if !table.checksum_matches() {
        return Err(UsageError(format!(
            "{}: checksum {} does not match the shipped table {ASSET_SHA256}",
            path.display(),
            table.sha256
        )));
    }
    Ok(table)
}

fn duality(self_dual: bool) -> &'static str {
    if self_dual {
        "self-dual"
    } else {
        "not self-dual"
    }
}

pub fn branching(table: &BranchingTable) -> Result<Vec<CheckResult>, UsageError> {
    let mut out = Vec::new();
    out.push(CheckResult::compare(
        "branching.table_sha256",
        ASSET_SHA256,
        &table.sha256,
        cite::TABLE,
    ));

    let e6 = e6_check();
    out.push(
        CheckResult::compare("branching.e6.dim", E6_REP_DIM, e6.dim, cite::E6)
            .with_detail(format!("highest weight {}", e6.weight)),
    );
    out.push(
        CheckResult::compare(
            "branching.e6.self_dual",
            duality(false),
            duality(e6.self_dual),
            cite::E6,
        )
        .with_detail(format!("dual highest weight {}", e6.dual)),
    );

    let bound = min_big_summand_rank();
    out.push(
        CheckResult::compare("branching.threshold", 13, bound.total(), cite::THRESHOLD)
            .with_detail(format!(
                "{} + {} + {}",
                bound.h0_term, bound.hd_term, bound.d_minus_one
            )),
    );

    let (rows, ms) = timed(|| verify_branching_table(table));
    let rows = rows.map_err(|e| UsageError(e.to_string()))?;
    let (elim, elim_ms) = timed(|| rule_out_subgroups(table, bound.total()));
    let elim = elim.map_err(|e| UsageError(e.to_string()))?;

    for (i, (row, e)) in rows.iter().zip(&elim.rows).enumerate() {
        let id = |what: &str| format!("branching.{}.{what}", row.label);
        out.push(
            CheckResult::compare(
                id("dims"),
                join(&row.expected_dims),
                join(&row.dims),
                cite::TABLE,
            )
            .with_runtime(if i == 0 { ms } else { 0 }),
        );
        out.push(CheckResult::compare(
            id("sum"),
            E6_REP_DIM,
            row.sum,
            cite::TABLE,
        ));
        out.push(CheckResult::compare(
            id("duality"),
            duality(row.expected_self_dual),
            duality(row.self_dual),
            cite::TABLE,
        ));
        let actual = if e.ok() {
            e.recorded.as_str().to_string()
        } else if e.reasons.is_empty() {
            "no reason applies".to_string()
        } else {
            e.reasons
                .iter()
                .map(|r| r.as_str())
                .collect::<Vec<_>>()
                .join("|")
        };
        out.push(
            CheckResult::compare(
                id("elimination"),
                e.recorded.as_str(),
                actual,
                cite::ELIMINATION,
            )
            .with_runtime(if i == 0 { elim_ms } else { 0 })
            .with_detail(format!(
                "{} summand(s) of dimension >= {}",
                e.big_summands, elim.threshold
            )),
        );
    }
    out.push(CheckResult::compare(
        "branching.at_most_one_big_summand",
        true,
        elim.at_most_one_big_summand,
        cite::ELIMINATION,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn embedded_table_passes_with_one_check_per_row_property() {
        let checks = branching(&BranchingTable::embedded()).unwrap();
        assert!(
            checks.iter().all(|c| c.status == Status::Pass),
            "{checks:#?}"
        );
        assert_eq!(
            checks
                .iter()
                .filter(|c| c.check_id.ends_with(".elimination"))
                .count(),
            8
        );
    }

    #[test]
    fn tampered_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.json");
        std::fs::write(&path, format!("{} ", e6check::liebranch::ASSET)).unwrap();
        assert!(load_table(Some(&path)).unwrap_err().0.contains("checksum"));
        std::fs::write(&path, "{").unwrap();
        assert!(load_table(Some(&path)).is_err());
        std::fs::write(&path, e6check::liebranch::ASSET).unwrap();
        assert!(load_table(Some(&path)).is_ok());
    }
}
