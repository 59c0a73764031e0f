//! Multimodular reduced row echelon form with an exact certificate.
//!
//! The matrix is reduced modulo a sequence of word-sized primes, the entries
//! of the reduced form are combined by CRT and lifted back to rationals. A
//! candidate is accepted only after an exact check over Q:
//!
//! * the rank mod a prime never exceeds the rank over Q, so the pivot count
//!   is a lower bound;
//! * every candidate kernel vector (one per free column) is multiplied
//!   against the original matrix; if all vanish the kernel has at least
//!   `cols - rank` dimensions, which is the matching upper bound.
//!
//! Together these pin the rank, and since the reduced row echelon form is
//! determined by the pivot columns and the kernel, the candidate is the
//! exact one. If no candidate verifies within the prime budget the caller
//! falls back to fraction-free elimination.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

use super::elim::{integral_rows, RowReduced};
use super::matrix::Matrix;
use super::scalar::is_odd_prime;

/// Upper limit on the number of primes tried before giving up.
const MAX_PRIMES: usize = 256;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut p = (1u64 << 31) - 1;
        while out.len() < MAX_PRIMES {
            if is_odd_prime(p) {
                out.push(p);
            }
            p -= 2;
        }
        out
    })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn big_mod(x: &BigInt, p: u64) -> u64 {
    let r = fold_digits(x.magnitude().iter_u64_digits(), p);
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

/// Residue of the little-endian base-`2^64` number `digits`.
fn fold_digits(digits: impl DoubleEndedIterator<Item = u64>, p: u64) -> u64 {
    let b = Barrett::new(p);
    let radix = b.reduce(b.reduce(u64::MAX) + 1);
    digits
        .rev()
        .fold(0, |acc, d| b.reduce(b.reduce(acc * radix) + b.reduce(d)))
}

/// An integer entry kept as little-endian words for fast word-sized reduction.
struct Words {
    negative: bool,
    digits: Vec<u64>,
}

impl Words {
    fn new(x: &BigInt) -> Self {
        let (sign, digits) = x.to_u64_digits();
        Words {
            negative: sign == Sign::Minus,
            digits,
        }
    }

    fn residue(&self, p: u64) -> u64 {
        let r = match self.digits.as_slice() {
            [] => 0,
            [d] => d % p,
            _ => fold_digits(self.digits.iter().copied(), p),
        };
        if self.negative && r != 0 {
            p - r
        } else {
            r
        }
    }
}

fn reduce(entries: &[Words], cols: usize, rows: &[usize], p: u64) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|&i| {
            entries[i * cols..(i + 1) * cols]
                .iter()
                .map(|w| w.residue(p))
                .collect()
        })
        .collect()
}

/// Barrett reduction for moduli below `2^32`.
#[derive(Clone, Copy)]
struct Barrett {
    p: u64,
    m: u64,
}

impl Barrett {
    fn new(p: u64) -> Self {
        Barrett { p, m: u64::MAX / p }
    }

    #[inline]
    fn reduce(self, x: u64) -> u64 {
        let q = ((x as u128 * self.m as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }
}

/// Reduced row echelon form mod `p`, in place; returns the pivot columns and
/// the input rows that produced them.
///
/// Eliminates below the pivots only, then back-substitutes on the free
/// columns, which is all the reduced form has beyond the identity block.
fn rref_mod(a: &mut Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<usize>, Vec<usize>) {
    let rows = a.len();
    let mut ids: Vec<usize> = (0..rows).collect();
    let b = Barrett::new(p);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, i);
        ids.swap(r, i);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = b.reduce(*x * inv);
        }
        let (done, below) = a.split_at_mut(r + 1);
        let pivot = &done[r];
        for row in below.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = p - f;
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = b.reduce(*x + g * y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    ids.truncate(r);

    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
    for r in (0..pivots.len()).rev() {
        let (head, tail) = a.split_at_mut(r + 1);
        let row = &mut head[r];
        for (s, lower) in tail.iter().enumerate() {
            let f = row[pivots[r + 1 + s]];
            if f == 0 {
                continue;
            }
            let g = p - f;
            for &j in &free {
                row[j] = b.reduce(row[j] + g * lower[j]);
            }
            row[pivots[r + 1 + s]] = 0;
        }
    }
    (pivots, ids)
}

/// `n/d` with `|n|, d <= sqrt(m/2)` and `n/d = a mod m`, if one exists.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        r1 = -r1;
        t1 = -t1;
    }
    Some(BigRational::new(r1, t1))
}

/// Reconstructs every residue, reusing the denominators found so far: once
/// `x * den` is already small mod `m`, no extended Euclid is needed.
fn lift_all(residues: &[BigInt], m: &BigInt) -> Option<Vec<BigRational>> {
    let bound = (m >> 1u32).sqrt();
    let half = m >> 1u32;
    let mut den = BigInt::one();
    residues
        .iter()
        .map(|x| {
            if x.is_zero() {
                return Some(BigRational::zero());
            }
            let mut y = (x * &den).mod_floor(m);
            if y > half {
                y -= m;
            }
            if y.abs() <= bound {
                return Some(BigRational::new(y, den.clone()));
            }
            let q = rational_reconstruct(x, m)?;
            den = den.lcm(q.denom());
            Some(q)
        })
        .collect()
}

/// Lexicographic comparison of pivot patterns: more pivots first, then
/// earlier pivots first. The rational pattern is the least one reachable.
fn better(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}

struct Candidate {
    pivots: Vec<usize>,
    free: Vec<usize>,
    modulus: BigInt,
    /// Residues of the free-column entries, row-major over pivot rows.
    residues: Vec<BigInt>,
    probe: Option<BigRational>,
}

pub(crate) fn row_reduce_multimodular(m: &Matrix) -> Option<RowReduced> {
    let cols = m.cols();
    if m.rows() == 0 || cols == 0 || m.is_zero() {
        return Some(RowReduced::from_parts(cols, Vec::new(), Vec::new()));
    }
    // Row scaling leaves the reduced form unchanged, so work with integers.
    let ints = integral_rows(m);
    let entries: Vec<Words> = ints.iter().flatten().map(Words::new).collect();
    let all_rows: Vec<usize> = (0..ints.len()).collect();
    // Rows independent mod one prime are independent over Q; once they reach
    // the full rank, later primes only need those rows.
    let mut active: Option<Vec<usize>> = None;
    let mut cand: Option<Candidate> = None;
    for &p in primes() {
        let rows = active.as_deref().unwrap_or(&all_rows);
        let mut a = reduce(&entries, cols, rows, p);
        let (pivots, used) = rref_mod(&mut a, cols, p);
        let fresh = match &cand {
            None => true,
            Some(c) if better(&pivots, &c.pivots) => true,
            Some(c) if pivots != c.pivots => continue,
            Some(_) => false,
        };
        if fresh {
            active = Some(used.iter().map(|&i| rows[i]).collect());
            let mut is_pivot = vec![false; cols];
            for &c in &pivots {
                is_pivot[c] = true;
            }
            let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
            cand = Some(Candidate {
                residues: vec![BigInt::zero(); pivots.len() * free.len()],
                pivots,
                free,
                modulus: BigInt::one(),
                probe: None,
            });
        }
        let c = cand.as_mut().expect("candidate set above");
        // CRT: x <- x + M * ((a - x) * M^{-1} mod p)
        let m_inv = inv_mod(big_mod(&c.modulus, p), p);
        let nfree = c.free.len();
        for (r, row) in a.iter().enumerate() {
            for (t, &f) in c.free.iter().enumerate() {
                let x = &mut c.residues[r * nfree + t];
                let diff = (row[f] + p - big_mod(x, p)) % p;
                let k = diff * m_inv % p;
                if k != 0 {
                    *x += &c.modulus * BigInt::from(k);
                }
            }
        }
        c.modulus *= BigInt::from(p);

        // Reconstruction is costly; wait until a probe entry has settled
        // across two consecutive primes.
        if nfree > 0 {
            let probe = c.residues.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
            let value = rational_reconstruct(&c.residues[probe], &c.modulus);
            let settled = value.is_some() && value == c.probe;
            c.probe = value;
            if !settled {
                continue;
            }
        }
        let lifted = lift_all(&c.residues, &c.modulus);
        let Some(lifted) = lifted else {
            continue;
        };
        if let Some(rr) = certify(&ints, cols, &c.pivots, &c.free, &lifted) {
            return Some(rr);
        }
        // The rank found so far may be short; go back to every row.
        active = None;
    }
    None
}

fn certify(
    ints: &[Vec<BigInt>],
    cols: usize,
    pivots: &[usize],
    free: &[usize],
    lifted: &[BigRational],
) -> Option<RowReduced> {
    let nfree = free.len();
    let mut rows = vec![vec![BigRational::zero(); cols]; pivots.len()];
    for (r, &pc) in pivots.iter().enumerate() {
        rows[r][pc] = BigRational::one();
        for (t, &f) in free.iter().enumerate() {
            let v = &lifted[r * nfree + t];
            if f < pc && !v.is_zero() {
                return None;
            }
            rows[r][f] = v.clone();
        }
    }
    let rr = RowReduced::from_parts(cols, pivots.to_vec(), rows);
    // Check each kernel vector, cleared of denominators, in integer arithmetic.
    for v in rr.kernel_basis() {
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let w: Vec<(usize, BigInt)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.numer() * (&lcm / x.denom())))
            .collect();
        for row in ints {
            let dot: BigInt = w.iter().map(|(j, x)| &row[*j] * x).sum();
            if !dot.is_zero() {
                return None;
            }
        }
    }
    Some(rr)
}
