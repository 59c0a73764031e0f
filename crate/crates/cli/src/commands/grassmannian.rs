use e6check::cupmap::{compare_section_counts, count_ssyt, hook_content, plucker_count};

use super::cite;
use crate::report::{timed, CheckResult};

/// Sections of `O(d)` on `Gr(2,5)`: tableaux of shape `(d,d)` over 5 letters.
fn tableaux(d: usize) -> (usize, usize) {
    (count_ssyt(&[d, d], 5), hook_content(&[d, d], 5))
}

/// `inject_disagreement` perturbs the Plücker count to exercise the fail path.
pub fn grassmannian(inject_disagreement: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (d, expected) in [(1usize, 10usize), (2, 50)] {
        let ((enumerated, hook), ms) = timed(|| tableaux(d));
        out.push(
            CheckResult::compare(
                format!("grassmannian.d{d}.tableaux"),
                expected,
                enumerated,
                cite::GRASSMANNIAN,
            )
            .with_runtime(ms)
            .with_detail(format!("hook-content formula gives {hook}")),
        );
        let plucker = plucker_count(d).map(|p| if inject_disagreement { p + 1 } else { p });
        let plucker = match plucker {
            Ok(p) => p,
            Err(e) => {
                out.push(CheckResult::compare(
                    format!("grassmannian.d{d}.plucker"),
                    expected,
                    format!("error: {e}"),
                    cite::GRASSMANNIAN,
                ));
                continue;
            }
        };
        out.push(CheckResult::compare(
            format!("grassmannian.d{d}.plucker"),
            expected,
            plucker,
            cite::GRASSMANNIAN,
        ));
        let agreed = match compare_section_counts(enumerated, plucker) {
            Ok(n) => n.to_string(),
            Err(e) => e.to_string(),
        };
        out.push(CheckResult::compare(
            format!("grassmannian.d{d}.agree"),
            expected,
            agreed,
            cite::GRASSMANNIAN,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn both_methods_agree() {
        assert!(grassmannian(false).iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn injection_fails_the_comparison() {
        let checks = grassmannian(true);
        let agree = checks
            .iter()
            .find(|c| c.check_id == "grassmannian.d2.agree")
            .unwrap();
        assert_eq!(agree.status, Status::Fail);
    }
}
