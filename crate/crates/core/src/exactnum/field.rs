//! Per-order tables for ℚ(ζ_N) = ℚ[x]/(Φ_N(x)).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Reduction data for one cyclotomic field.
#[derive(Debug)]
pub(crate) struct CycloField {
    pub order: u32,
    /// Degree φ(N) of the field over ℚ.
    pub degree: usize,
    /// Coefficients of Φ_N, lowest degree first (monic, length `degree + 1`).
    pub min_poly: Vec<i64>,
    /// `powers[k]` is ζ^k reduced modulo Φ_N, for `0 <= k < N`.
    pub powers: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division not exact");
    quot
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Φ_n by recursive division of xⁿ − 1 by Φ_d for the proper divisors d of n.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut den = vec![1i64];
    for d in 1..n {
        if n.is_multiple_of(d) {
            den = poly_mul(&den, &field(d).min_poly);
        }
    }
    poly_div_exact(&num, &den)
}

impl CycloField {
    fn build(order: u32) -> Self {
        let min_poly = if order == 1 { vec![-1, 1] } else { cyclotomic_poly(order) };
        let degree = min_poly.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce with x^deg = -Σ c_i x^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * min_poly[i];
                }
            }
        }
        CycloField { order, degree, min_poly, powers }
    }
}

fn registry() -> &'static RwLock<HashMap<u32, Arc<CycloField>>> {
    static REG: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn field(order: u32) -> Arc<CycloField> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(f) = registry().read().expect("field registry poisoned").get(&order) {
        return f.clone();
    }
    let built = Arc::new(CycloField::build(order));
    registry()
        .write()
        .expect("field registry poisoned")
        .entry(order)
        .or_insert(built)
        .clone()
}

/// Euler's totient, used to size coefficient vectors.
pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}
