//! One function per subcommand, each returning the checks it ran.

mod branching;
mod cubic;
mod fermat;
mod grassmannian;
mod higgs;

use std::fmt;

pub use branching::{branching, load_table};
pub use cubic::{cubic, parse_cubics, CubicOptions, CubicSource};
pub use fermat::fermat;
pub use grassmannian::grassmannian;
pub use higgs::higgs_selftest;

use crate::report::RunReport;
use e6check::liebranch::BranchingTable;

/// Default sample count for randomized runs.
pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_COEFF_BOUND: u32 = 5;

/// Bad flags, unreadable files, corrupted data: exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Statements each check reproduces.
pub mod cite {
    pub const HILBERT: &str =
        "Jacobian ring of a smooth cubic threefold: Hilbert function 1,5,10,10,5,1";
    pub const SMOOTH: &str = "smoothness: the Jacobian ring is Artinian with socle in degree 5";
    pub const PAIRING: &str = "the pairing R_1 x R_4 -> R_5 is perfect";
    pub const NU_SHAPE: &str = "nu: Sym^2 R_3 -> Hom(wedge^2 R_1, wedge^2 R_4)";
    pub const NU_RANK: &str = "Fermat cubic: the linear map nu has rank 50";
    pub const KERNEL: &str =
        "Fermat cubic: kernel of nu has dimension 55 - 50 = 5, spanned by f+g+h";
    pub const BLOCKS: &str = "Fermat cubic: nu respects the mu_3^5 character grading";
    pub const UPPER: &str = "rk mu <= 50, hence rk nu <= 50 for every smooth cubic";
    pub const GENERIC: &str = "rank 50 at the Fermat point spreads by semicontinuity";
    pub const MOD_P: &str = "reduction mod p cannot raise the rank";
    pub const GRASSMANNIAN: &str = "h^0(G, O_G(2)) = 50 for G = Gr(2,5)";
    pub const TABLE: &str = "branching rules for the restriction of V";
    pub const E6: &str = "the two 27-dimensional representations of E6 are not self-dual";
    pub const THRESHOLD: &str = "rank bound h^0 + h^d + (d - 1) = 13";
    pub const ELIMINATION: &str = "at most one irreducible direct summand of dimension > 12";
    pub const COMMUTING: &str = "Higgs field: theta(a) and theta(b) commute";
    pub const DUALITY: &str = "duality grading (H^v)^p = (H^(d-p))^v";
    pub const DUAL_COMPAT: &str = "the dual Higgs bundle is compatible with pi";
    pub const INDUCED_C: &str = "compatibility: c . mu . Sym^d kappa = theta^d";
}

/// `all`: every subcommand in a fixed order, one report.
pub fn all(
    command: String,
    seed: u64,
    cubic_opts: &CubicOptions,
    trials: usize,
    table: &BranchingTable,
) -> Result<RunReport, UsageError> {
    let mut report = RunReport::new(command, vec![seed]);
    report.extend(fermat());
    report.extend(cubic(cubic_opts)?);
    report.extend(grassmannian(false));
    report.extend(branching(table)?);
    report.extend(higgs_selftest(seed, trials)?);
    Ok(report)
}
