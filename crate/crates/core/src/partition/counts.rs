use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Memo tables for `p(n)` and `p2(n)`.
///
/// Entries are write-once: a table only ever grows, and every filler computes
/// the same deterministic values, so concurrent readers and fillers agree.
#[derive(Debug, Default)]
pub struct CountCache {
    p: RwLock<Vec<BigInt>>,
    p2: RwLock<Vec<BigInt>>,
}

/// Generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ... with
/// their sign (-1)^(k-1), while they do not exceed `n`.
fn pentagonal_terms(n: usize) -> impl Iterator<Item = (usize, bool)> {
    (1usize..)
        .flat_map(|k| {
            let positive = k % 2 == 1;
            [(k * (3 * k - 1) / 2, positive), (k * (3 * k + 1) / 2, positive)]
        })
        .take_while(move |&(g, _)| g <= n)
}

impl CountCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache shared by the free functions of this module.
    pub fn global() -> &'static CountCache {
        static CACHE: OnceLock<CountCache> = OnceLock::new();
        CACHE.get_or_init(CountCache::new)
    }

    fn ensure_p(&self, n: usize) {
        if self.p.read().unwrap().len() > n {
            return;
        }
        let mut table = self.p.write().unwrap();
        if table.is_empty() {
            table.push(BigInt::one());
        }
        while table.len() <= n {
            let m = table.len();
            let mut plus = BigInt::zero();
            let mut minus = BigInt::zero();
            for (g, positive) in pentagonal_terms(m) {
                if positive {
                    plus += &table[m - g];
                } else {
                    minus += &table[m - g];
                }
            }
            table.push(plus - minus);
        }
    }

    fn ensure_p2(&self, n: usize) {
        if self.p2.read().unwrap().len() > n {
            return;
        }
        self.ensure_p(n / 2);
        let p = self.p.read().unwrap();
        let mut table = self.p2.write().unwrap();
        if table.is_empty() {
            table.push(BigInt::one());
        }
        while table.len() <= n {
            let m = table.len();
            // p(m/2) + sum_{k != 0} (-1)^(k-1) p2(m - k^2); k and -k give equal terms
            let mut odd_k = BigInt::zero();
            let mut even_k = BigInt::zero();
            for k in (1usize..).take_while(|k| k * k <= m) {
                if k % 2 == 1 {
                    odd_k += &table[m - k * k];
                } else {
                    even_k += &table[m - k * k];
                }
            }
            let mut value = (odd_k - even_k) * 2u32;
            if m.is_multiple_of(2) {
                value += &p[m / 2];
            }
            table.push(value);
        }
    }

    /// `p(n)` by Euler's pentagonal recursion; `0` for negative `n`.
    pub fn p(&self, n: i64) -> BigInt {
        match usize::try_from(n) {
            Ok(n) => {
                self.ensure_p(n);
                self.p.read().unwrap()[n].clone()
            }
            Err(_) => BigInt::zero(),
        }
    }

    /// `p2(n)` by the k^2 recursion; `0` for negative `n`.
    pub fn p2(&self, n: i64) -> BigInt {
        match usize::try_from(n) {
            Ok(n) => {
                self.ensure_p2(n);
                self.p2.read().unwrap()[n].clone()
            }
            Err(_) => BigInt::zero(),
        }
    }

    /// `p(0..=n)`.
    pub fn p_values(&self, n: usize) -> Vec<BigInt> {
        self.ensure_p(n);
        self.p.read().unwrap()[..=n].to_vec()
    }

    /// `p2(0..=n)` from the recursion.
    pub fn p2_values(&self, n: usize) -> Vec<BigInt> {
        self.ensure_p2(n);
        self.p2.read().unwrap()[..=n].to_vec()
    }

    /// `p2(n) = sum_j p(j) p(n-j)`, independent of the p2 recursion.
    pub fn p2_convolution(&self, n: i64) -> BigInt {
        let Ok(n) = usize::try_from(n) else {
            return BigInt::zero();
        };
        self.ensure_p(n);
        let p = self.p.read().unwrap();
        let mut half = BigInt::zero();
        for j in 0..n.div_ceil(2) {
            half += &p[j] * &p[n - j];
        }
        let mut total = half.clone() + half;
        if n % 2 == 0 {
            total += &p[n / 2] * &p[n / 2];
        }
        total
    }
}

pub fn p_euler(n: i64) -> BigInt {
    CountCache::global().p(n)
}

/// `p2(n) = p(n/2) + sum_{k != 0} (-1)^(k-1) p2(n - k^2)`.
pub fn p2_theorem(n: i64) -> BigInt {
    CountCache::global().p2(n)
}

pub fn p2_convolution(n: i64) -> BigInt {
    CountCache::global().p2_convolution(n)
}

/// Number of degenerate bipartitions `[λ; λ]` of `n`, i.e. `p(n/2)`.
pub fn degenerate_count(n: i64) -> BigInt {
    if n >= 0 && n % 2 == 0 {
        p_euler(n / 2)
    } else {
        BigInt::zero()
    }
}

/// Partitions of `0..=n` into pairwise distinct parts.
pub fn distinct_parts_table(n: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for part in 1..=n {
        for m in (part..=n).rev() {
            let (lo, hi) = table.split_at_mut(m);
            hi[0] += &lo[m - part];
        }
    }
    table
}

/// Partitions of `0..=n` into odd parts.
pub fn odd_parts_table(n: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for part in (1..=n).step_by(2) {
        for m in part..=n {
            let (lo, hi) = table.split_at_mut(m);
            hi[0] += &lo[m - part];
        }
    }
    table
}

pub fn count_distinct_parts(n: i64) -> BigInt {
    usize::try_from(n).map_or_else(|_| BigInt::zero(), |n| distinct_parts_table(n).swap_remove(n))
}

pub fn count_odd_parts(n: i64) -> BigInt {
    usize::try_from(n).map_or_else(|_| BigInt::zero(), |n| odd_parts_table(n).swap_remove(n))
}
