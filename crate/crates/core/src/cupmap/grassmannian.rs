//! Degree-`d` Plücker coordinate ring of `Gr(2, 5)`, counted two ways.

use super::Error;

const AMBIENT: usize = 5;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Semistandard Young tableaux of the given shape with entries in `1..=n`,
/// counted by explicit enumeration.
pub fn count_ssyt(shape: &[usize], n: usize) -> usize {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn go(k: usize, cells: &[(usize, usize)], filling: &mut [Vec<usize>], n: usize) -> usize {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(filling[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(filling[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..=n {
            filling[r][c] = v;
            total += go(k + 1, cells, filling, n);
        }
        total
    }
    go(0, &cells, &mut filling, n)
}

/// Hook-content formula: `prod (n + content) / prod hook`.
pub fn hook_content(shape: &[usize], n: usize) -> usize {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            if n + c <= r {
                return 0;
            }
            num *= (n + c - r) as u128;
            den *= (arm + leg + 1) as u128;
        }
    }
    assert_eq!(num % den, 0, "hook-content quotient is an integer");
    (num / den) as usize
}

/// `dim Sym^d(wedge^2 C^5)` minus the Plücker quadrics (one per basis
/// vector of `wedge^4 C^5`); only degrees 1 and 2 are supported.
pub fn plucker_count(d: usize) -> Result<usize, Error> {
    let coords = binomial(AMBIENT, 2);
    match d {
        1 => Ok(coords),
        2 => Ok(binomial(coords + 1, 2) - binomial(AMBIENT, 4)),
        _ => Err(Error::InvalidInput(format!(
            "Plücker count implemented for d in {{1,2}}, got {d}"
        ))),
    }
}

/// Agreement check between the two methods.
pub fn compare_section_counts(tableaux: usize, plucker: usize) -> Result<usize, Error> {
    if tableaux == plucker {
        Ok(tableaux)
    } else {
        Err(Error::InconsistentMethods { tableaux, plucker })
    }
}

/// `h^0(Gr(2,5), O(d))` for `d` in `{1, 2}`.
pub fn grassmannian_sections(d: usize) -> Result<usize, Error> {
    if !(1..=2).contains(&d) {
        return Err(Error::InvalidInput(format!(
            "degree must be 1 or 2, got {d}"
        )));
    }
    compare_section_counts(count_ssyt(&[d, d], AMBIENT), plucker_count(d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_counts() {
        assert_eq!(grassmannian_sections(1).unwrap(), 10);
        assert_eq!(grassmannian_sections(2).unwrap(), 50);
        assert!(grassmannian_sections(3).is_err());
        assert!(grassmannian_sections(0).is_err());
    }

    #[test]
    fn hook_content_agrees_with_enumeration() {
        assert_eq!(hook_content(&[2, 2], 5), 50);
        for shape in [
            vec![1],
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![2, 2, 1],
            vec![3, 3],
        ] {
            for n in 1..=5 {
                assert_eq!(
                    count_ssyt(&shape, n),
                    hook_content(&shape, n),
                    "{shape:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn disagreement_is_reported() {
        assert_eq!(
            compare_section_counts(50, 49),
            Err(Error::InconsistentMethods {
                tableaux: 50,
                plucker: 49
            })
        );
    }
}
