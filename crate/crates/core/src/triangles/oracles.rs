//! Closed forms and classical recurrences for the first columns (and some
//! full rows) of the preset triangles. These are computed without the
//! triangle recurrences and are used to validate preset coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `binomial(2n, n) / (n + 1)`
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `M(n) = M(n-1) + sum_{i=0}^{n-2} M(i) M(n-2-i)`
pub fn motzkin_numbers(count: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let v = if n == 0 {
            BigInt::one()
        } else {
            let conv =
                (0..n.saturating_sub(1)).fold(BigInt::zero(), |acc, i| acc + &m[i] * &m[n - 2 - i]);
            &m[n - 1] + conv
        };
        m.push(v);
    }
    m
}

/// Large Schröder numbers: `S(n) = S(n-1) + sum_{k=0}^{n-1} S(k) S(n-1-k)`.
pub fn large_schroder_numbers(count: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let v = if n == 0 {
            BigInt::one()
        } else {
            let conv = (0..n).fold(BigInt::zero(), |acc, k| acc + &s[k] * &s[n - 1 - k]);
            &s[n - 1] + conv
        };
        s.push(v);
    }
    s
}

/// Stirling number of the second kind by inclusion-exclusion:
/// `S(n,k) = (1/k!) sum_j (-1)^j binomial(k,j) (k-j)^n`.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * BigInt::from(k - j).pow(n as u32);
        if j.is_odd() {
            sum -= term;
        } else {
            sum += term;
        }
    }
    let fact = (1..=k).fold(BigInt::one(), |acc, i| acc * i);
    sum / fact
}

/// Bell numbers via the Bell (Aitken) triangle.
pub fn bell_numbers(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut row = vec![BigInt::one()];
    for _ in 0..count {
        out.push(row[0].clone());
        let mut next = vec![row.last().expect("nonempty").clone()];
        for v in &row {
            let last = next.last().expect("nonempty").clone();
            next.push(last + v);
        }
        row = next;
    }
    out
}

/// Shapiro's Catalan triangle: `B(n,k) = (k+1)/(n+1) binomial(2n+2, n-k)`.
pub fn shapiro_entry(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(2 * n + 2, n - k) * (k + 1) / (n + 1)
}
