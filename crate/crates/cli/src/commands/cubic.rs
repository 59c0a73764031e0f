use std::path::PathBuf;

use e6check::cupmap::{build_nu_from_ring, NU_RANK_BOUND};
use e6check::exactla::{is_nondegenerate, is_odd_prime, matrix_rank_mod_p, MAX_MODULUS};
use e6check::polyring::{random_cubic, CubicForm, JacobianRing, SMOOTH_HILBERT};

use super::fermat::{join, verdict};
use super::{cite, UsageError};
use crate::report::{timed, CheckResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicSource {
    File(PathBuf),
    Random {
        count: usize,
        seed: u64,
        coeff_bound: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicOptions {
    pub source: CubicSource,
    pub prime: Option<u64>,
    /// Where to write the sampled cubics, one JSON document per line.
    pub emit: Option<PathBuf>,
}

/// Seed of the `i`-th random sample.
pub fn sample_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A single cubic document, or one document per non-empty line.
pub fn parse_cubics(text: &str) -> Result<Vec<CubicForm>, UsageError> {
    let whole = CubicForm::from_json(text);
    if let Ok(f) = whole {
        return Ok(vec![f]);
    }
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    if lines.len() < 2 {
        return Err(UsageError(whole.unwrap_err().to_string()));
    }
    lines
        .into_iter()
        .map(|(n, l)| {
            CubicForm::from_json(l).map_err(|e| UsageError(format!("line {}: {e}", n + 1)))
        })
        .collect()
}

fn samples(opts: &CubicOptions) -> Result<Vec<(String, CubicForm, Option<u64>)>, UsageError> {
    match &opts.source {
        CubicSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let forms =
                parse_cubics(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(forms
                .into_iter()
                .enumerate()
                .map(|(i, f)| (format!("f{i:03}"), f, None))
                .collect())
        }
        CubicSource::Random {
            count,
            seed,
            coeff_bound,
        } => (0..*count)
            .map(|i| {
                let s = sample_seed(*seed, i);
                let f = random_cubic(s, *coeff_bound).map_err(|e| UsageError(e.to_string()))?;
                Ok((format!("s{i:03}"), f, Some(s)))
            })
            .collect(),
    }
}

/// Checks for one cubic; returns the rank of `nu` when the cubic is smooth.
fn check_one(
    label: &str,
    form: &CubicForm,
    sample_seed: Option<u64>,
    prime: Option<u64>,
    out: &mut Vec<CheckResult>,
) -> Option<usize> {
    let id = |what: &str| format!("cubic.{label}.{what}");
    let (ring, ms) = timed(|| JacobianRing::new(form));
    let hilbert = join(&ring.hilbert_function());
    let origin = match sample_seed {
        Some(s) => format!("sample seed {s}; "),
        None => String::new(),
    };
    if !ring.is_smooth() {
        out.push(
            CheckResult::skipped(
                id("smooth"),
                "smooth",
                "singular",
                cite::SMOOTH,
                format!("{origin}Hilbert function {hilbert}"),
            )
            .with_runtime(ms),
        );
        return None;
    }
    out.push(
        CheckResult::compare(id("smooth"), "smooth", "smooth", cite::SMOOTH)
            .with_runtime(ms)
            .with_detail(format!("{origin}{}", form.to_json())),
    );
    out.push(CheckResult::compare(
        id("hilbert_function"),
        join(&SMOOTH_HILBERT),
        hilbert,
        cite::HILBERT,
    ));

    let (pairing, ms) = timed(|| {
        ring.pairing_r1_r4()
            .map_err(|e| e.to_string())
            .and_then(|m| is_nondegenerate(&m).map_err(|e| e.to_string()))
    });
    out.push(
        CheckResult::compare(
            id("pairing_r1_r4"),
            "nondegenerate",
            verdict(pairing),
            cite::PAIRING,
        )
        .with_runtime(ms),
    );

    let (nu, ms) = timed(|| build_nu_from_ring(&ring).map(|nu| (nu.rank(), nu)));
    let (rank, nu) = match nu {
        Ok(v) => v,
        Err(e) => {
            out.push(
                CheckResult::compare(
                    id("nu_rank_bound"),
                    "<= 50",
                    format!("error: {e}"),
                    cite::UPPER,
                )
                .with_runtime(ms),
            );
            return None;
        }
    };
    let bounded = if rank <= NU_RANK_BOUND {
        "<= 50".to_string()
    } else {
        rank.to_string()
    };
    out.push(
        CheckResult::compare(id("nu_rank_bound"), "<= 50", bounded, cite::UPPER).with_runtime(ms),
    );
    out.push(
        CheckResult::compare(id("nu_rank"), NU_RANK_BOUND, rank, cite::GENERIC)
            .soft("rank drop: the sample lies on the closed locus where nu loses rank"),
    );

    if let Some(p) = prime {
        let (rp, ms) = timed(|| matrix_rank_mod_p(nu.rational(), p));
        let check = match rp {
            Ok(rp) => {
                let actual = if rp <= rank {
                    format!("<= {rank}")
                } else {
                    rp.to_string()
                };
                CheckResult::compare(
                    id("nu_rank_mod_p"),
                    format!("<= {rank}"),
                    actual,
                    cite::MOD_P,
                )
                .with_detail(format!("rank mod {p} = {rp}"))
            }
            Err(e) => CheckResult::skipped(
                id("nu_rank_mod_p"),
                format!("<= {rank}"),
                "not reduced",
                cite::MOD_P,
                e.to_string(),
            ),
        };
        out.push(check.with_runtime(ms));
    }
    Some(rank)
}

/// Smallest prime accepted for the mod-p cross-check.
pub const MIN_PRIME: u64 = 10007;

pub fn validate_prime(p: u64) -> Result<u64, UsageError> {
    if !(MIN_PRIME..=MAX_MODULUS).contains(&p) || !is_odd_prime(p) {
        return Err(UsageError(format!(
            "--prime {p} is not a prime between {MIN_PRIME} and 2^32"
        )));
    }
    Ok(p)
}

pub fn cubic(opts: &CubicOptions) -> Result<Vec<CheckResult>, UsageError> {
    if let Some(p) = opts.prime {
        validate_prime(p)?;
    }
    let samples = samples(opts)?;
    if let Some(path) = &opts.emit {
        let lines: String = samples.iter().map(|(_, f, _)| f.to_json() + "\n").collect();
        std::fs::write(path, lines).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }

    let mut out = Vec::new();
    let mut ranks = Vec::new();
    for (label, form, seed) in &samples {
        if let Some(r) = check_one(label, form, *seed, opts.prime, &mut out) {
            ranks.push((label.as_str(), r));
        }
    }

    let smooth = ranks.len();
    let full = ranks.iter().filter(|(_, r)| *r == NU_RANK_BOUND).count();
    let expected = format!("{smooth}/{smooth}");
    let summary = if smooth == 0 {
        CheckResult::skipped(
            "cubic.rank50_fraction",
            expected,
            "0/0",
            cite::GENERIC,
            "no smooth samples",
        )
    } else {
        let drops: Vec<String> = ranks
            .iter()
            .filter(|(_, r)| *r != NU_RANK_BOUND)
            .map(|(l, r)| format!("{l}:{r}"))
            .collect();
        CheckResult::compare(
            "cubic.rank50_fraction",
            expected,
            format!("{full}/{smooth}"),
            cite::GENERIC,
        )
        .soft(format!("rank below 50 at {}", drops.join(",")))
    };
    let counted = format!("{smooth} of {} samples smooth", samples.len());
    let detail = if summary.detail.is_empty() {
        counted
    } else {
        format!("{}; {counted}", summary.detail)
    };
    out.push(summary.with_detail(detail));
    Ok(out)
}
