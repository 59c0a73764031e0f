use e6check::cupmap::{build_nu_from_ring, character_blocks, verify_fermat_kernel, NU_RANK_BOUND};
use e6check::exactla::is_nondegenerate;
use e6check::polyring::{CubicForm, JacobianRing, SMOOTH_HILBERT};

use super::cite;
use crate::report::{timed, CheckResult};

pub(crate) fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// `40x1,5x2`: multiplicities of each value, in increasing value order.
fn profile(values: impl IntoIterator<Item = usize>) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    counts
        .iter()
        .map(|(v, n)| format!("{n}x{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn fermat() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (ring, ms) = timed(|| JacobianRing::new(&CubicForm::fermat()));
    out.push(
        CheckResult::compare(
            "fermat.hilbert_function",
            join(&SMOOTH_HILBERT),
            join(&ring.hilbert_function()),
            cite::HILBERT,
        )
        .with_runtime(ms),
    );
    out.push(CheckResult::compare(
        "fermat.smooth",
        "smooth",
        if ring.is_smooth() {
            "smooth"
        } else {
            "singular"
        },
        cite::SMOOTH,
    ));

    let (pairing, ms) = timed(|| {
        ring.pairing_r1_r4()
            .map_err(|e| e.to_string())
            .and_then(|m| is_nondegenerate(&m).map_err(|e| e.to_string()))
    });
    out.push(
        CheckResult::compare(
            "fermat.pairing_r1_r4",
            "nondegenerate",
            verdict(pairing),
            cite::PAIRING,
        )
        .with_runtime(ms),
    );

    let (nu, ms) = timed(|| build_nu_from_ring(&ring));
    let nu = match nu {
        Ok(nu) => nu,
        Err(e) => {
            out.push(CheckResult::compare(
                "fermat.nu_shape",
                "100x55",
                format!("error: {e}"),
                cite::NU_SHAPE,
            ));
            return out;
        }
    };
    let shape = format!("{}x{}", nu.matrix.rows(), nu.matrix.cols());
    out.push(
        CheckResult::compare("fermat.nu_shape", "100x55", shape, cite::NU_SHAPE).with_runtime(ms),
    );

    let (rank, ms) = timed(|| nu.rank());
    out.push(
        CheckResult::compare("fermat.nu_rank", NU_RANK_BOUND, rank, cite::NU_RANK).with_runtime(ms),
    );
    out.push(CheckResult::compare(
        "fermat.kernel_dim",
        5,
        nu.matrix.cols() - rank,
        cite::KERNEL,
    ));

    let (kernel, ms) = timed(|| verify_fermat_kernel(&nu));
    let actual = match &kernel {
        Ok(v) => v.len().to_string(),
        Err(e) => format!("error: {e}"),
    };
    out.push(
        CheckResult::compare("fermat.kernel_vectors", 5, actual, cite::KERNEL)
            .with_runtime(ms)
            .with_detail("f+g+h annihilated exactly; together they span the kernel"),
    );

    let (blocks, ms) = timed(|| character_blocks(&nu));
    match blocks {
        Ok(blocks) => {
            out.push(
                CheckResult::compare("fermat.block_count", 45, blocks.len(), cite::BLOCKS)
                    .with_runtime(ms),
            );
            out.push(CheckResult::compare(
                "fermat.block_sizes",
                "40x1,5x3",
                profile(blocks.iter().map(|b| b.labels.len())),
                cite::BLOCKS,
            ));
            out.push(CheckResult::compare(
                "fermat.block_ranks",
                "40x1,5x2",
                profile(blocks.iter().map(|b| b.rank)),
                cite::BLOCKS,
            ));
            out.push(CheckResult::compare(
                "fermat.block_rank_sum",
                NU_RANK_BOUND,
                blocks.iter().map(|b| b.rank).sum::<usize>(),
                cite::BLOCKS,
            ));
        }
        Err(e) => out.push(
            CheckResult::compare(
                "fermat.block_count",
                45,
                format!("error: {e}"),
                cite::BLOCKS,
            )
            .with_runtime(ms),
        ),
    }
    out
}

pub(crate) fn verdict(r: Result<bool, String>) -> String {
    match r {
        Ok(true) => "nondegenerate".into(),
        Ok(false) => "degenerate".into(),
        Err(e) => format!("error: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_counts_by_value() {
        assert_eq!(profile([1, 2, 1, 1]), "3x1,1x2");
        assert_eq!(profile([]), "");
    }
}
