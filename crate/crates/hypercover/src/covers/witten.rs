//! Partitions, hook-length dimensions, and the Witten zeta function of S_n.

use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, ToPrimitive, Zero};

/// Irreducible dimensions of S_n indexed by partitions of n, with dimensions
/// from the hook length formula.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    pub n: usize,
    /// `(parts, dim)` pairs; parts weakly decreasing, summing to n.
    pub partitions: Vec<(Vec<u32>, u128)>,
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl PartitionTable {
    /// Enumerates all partitions of n and their hook-length dimensions.
    /// Exact in u128 up to n = 33 (factorial bound).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 33);
        let mut partitions = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        gen_partitions(n as u32, n as u32, &mut cur, &mut partitions);
        let partitions = partitions
            .into_iter()
            .map(|parts| {
                let dim = hook_dimension(&parts);
                (parts, dim)
            })
            .collect();
        PartitionTable { n, partitions }
    }

    /// `sum dim^2` — must equal n! exactly.
    pub fn sum_dim_squares(&self) -> u128 {
        self.partitions.iter().map(|(_, d)| d * d).sum()
    }

    pub fn burnside_identity_holds(&self) -> bool {
        self.sum_dim_squares() == factorial_u128(self.n)
    }
}

fn gen_partitions(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        cur.push(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop();
    }
}

/// Dimension of the irreducible indexed by `parts`: n! / prod(hooks).
fn hook_dimension(parts: &[u32]) -> u128 {
    let n: u32 = parts.iter().sum();
    let conj: Vec<u32> = (0..parts[0])
        .map(|j| parts.iter().filter(|&&p| p > j).count() as u32)
        .collect();
    let mut hooks: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj[j as usize] - i as u32) - 1;
            hooks *= hook as u128;
        }
    }
    factorial_u128(n as usize) / hooks
}

/// Witten zeta of S_n at integer s: `sum over irreducibles of dim^{-s}`.
/// Accumulated exactly as a rational, returned as f64.
pub fn witten_zeta(s: u32, n: usize) -> f64 {
    witten_zeta_rational(s, n).to_f64().expect("finite zeta value")
}

pub fn witten_zeta_rational(s: u32, n: usize) -> BigRational {
    let table = PartitionTable::new(n);
    let mut acc = BigRational::zero();
    for (_, dim) in &table.partitions {
        let d = BigInt::from(*dim);
        acc += BigRational::new(BigInt::one(), d.pow(s));
    }
    acc
}

/// `#Hom(Γ_g, S_n) = (n!)^{2g-1} * zeta(2g-2; S_n)`, exact.
pub fn hom_count_exact(g: u32, n: usize) -> BigUint {
    assert!(g >= 2 && n >= 1);
    let zeta = witten_zeta_rational(2 * g - 2, n);
    let fact = BigInt::from(factorial_u128(n));
    let count = zeta * fact.pow(2 * g - 1);
    assert!(count.is_integer(), "hom count must be an integer");
    count.to_integer().to_biguint().expect("non-negative count")
}

/// f64 view of the hom count; above the exact-representation threshold the
/// magnitude is reported through `hom_count_log10` instead.
pub fn hom_count_f64(g: u32, n: usize) -> f64 {
    if n <= 16 {
        let exact = hom_count_exact(g, n);
        let approx = exact.to_f64().unwrap_or(f64::INFINITY);
        if approx.is_finite() {
            return approx;
        }
    }
    10f64.powf(hom_count_log10(g, n))
}

/// `log10 #Hom(Γ_g, S_n)` via log-factorials; overflow-safe for any degree.
pub fn hom_count_log10(g: u32, n: usize) -> f64 {
    let log10_fact: f64 = (1..=n).map(|k| (k as f64).log10()).sum();
    // zeta(2g-2; S_n) is O(1); compute it in doubles via partial dims when
    // the table is in range, else use the asymptotic value 2.
    let zeta = if n <= 33 { witten_zeta(2 * g - 2, n) } else { 2.0 };
    (2 * g - 1) as f64 * log10_fact + zeta.log10()
}

/// Natural log of n!.
pub fn log_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}
