//! Root-of-unity interaction sums S_{n,k} and the combinatorial
//! coefficients c_{n,k} entering every expansion of the configurational
//! operators.
//!
//! S_{n,k} = sum_{l=1}^{N-1} Q_l^k / (Q_l - 1)^n with Q_l the N-th roots of
//! unity. The sums are real; the table is built from closed forms of S_{n,0}
//! through n = 3, direct complex summation above, and the Pascal-type
//! recursion S_{n,k} = S_{n-1,k-1} + S_{n,k-1} along each row.

use crate::error::CoreError;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Direct evaluation of S_{n,k} in complex arithmetic. This is the oracle
/// path; the recursive table is the canonical real-valued source.
pub fn snk_bruteforce(n_vortices: usize, n: u32, k: u32) -> Complex64 {
    debug_assert!(n_vortices >= 2 && k <= n);
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 1..n_vortices {
        let th = 2.0 * PI * l as f64 / n_vortices as f64;
        let q = Complex64::from_polar(1.0, th);
        sum += q.powu(k) / (q - 1.0).powu(n);
    }
    sum
}

/// Closed form of S_{n,0} for n <= 3, from derivatives of p'(z)/p(z) at z=1
/// with p(z) = 1 + z + ... + z^{N-1}.
fn sn0_closed(n_vortices: usize, n: u32) -> Option<f64> {
    let nn = n_vortices as f64;
    match n {
        0 => Some(nn - 1.0),
        1 => Some(-(nn - 1.0) / 2.0),
        2 => Some(-(nn - 1.0) * (nn - 5.0) / 12.0),
        3 => Some((nn - 1.0) * (nn - 3.0) / 8.0),
        _ => None,
    }
}

#[derive(Debug, Clone)]
pub struct SnkTable {
    pub n_vortices: usize,
    pub max_order: u32,
    /// Row-major triangle: values[n][k] for 0 <= k <= n <= max_order.
    values: Vec<Vec<f64>>,
}

impl SnkTable {
    pub fn get(&self, n: u32, k: u32) -> f64 {
        self.values[n as usize][k as usize]
    }

    pub fn s11(&self) -> f64 {
        self.get(1, 1)
    }
    pub fn s22(&self) -> f64 {
        self.get(2, 2)
    }
    pub fn s31(&self) -> f64 {
        self.get(3, 1)
    }
    pub fn s33(&self) -> f64 {
        self.get(3, 3)
    }
}

/// Builds the full S triangle up to `max_order`.
pub fn snk_recursive(n_vortices: usize, max_order: u32) -> Result<SnkTable, CoreError> {
    if n_vortices < 2 {
        return Err(CoreError::InvalidConfig(format!("need N >= 2, got {n_vortices}")));
    }
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(max_order as usize + 1);
    for n in 0..=max_order {
        let s_n0 = match sn0_closed(n_vortices, n) {
            Some(v) => v,
            None => snk_bruteforce(n_vortices, n, 0).re,
        };
        let mut row = vec![s_n0];
        for k in 1..=n {
            // S_{n,k} = S_{n-1,k-1} + S_{n,k-1}
            let prev_row: &Vec<f64> = &values[n as usize - 1];
            let v = prev_row[k as usize - 1] + row[k as usize - 1];
            row.push(v);
        }
        values.push(row);
    }
    Ok(SnkTable { n_vortices, max_order, values })
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// c_{0,k} = (-1)^{k-1};  c_{n,k} = binom(n,k) (-1)^{n+k-1} d^n / (2 pi n).
pub fn cnk(d: f64, n: u32, k: u32) -> f64 {
    let sign = if (n + k) % 2 == 0 { -1.0 } else { 1.0 };
    if n == 0 {
        return -sign; // (-1)^{k-1}
    }
    binomial(n, k) * sign * d.powi(n as i32) / (2.0 * PI * n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn closed_forms_match_paper() {
        for n_v in 2..=12usize {
            let nn = n_v as f64;
            let t = snk_recursive(n_v, 3).unwrap();
            assert_relative_eq!(t.get(1, 1), (nn - 1.0) / 2.0, epsilon = 1e-12);
            assert_relative_eq!(t.get(2, 1), (1.0 - nn * nn) / 12.0, epsilon = 1e-12);
            assert_relative_eq!(t.get(2, 2), -(nn - 1.0) * (nn - 5.0) / 12.0, epsilon = 1e-12);
            // S_{2,2} = S_{2,0}
            assert_relative_eq!(t.get(2, 2), t.get(2, 0), epsilon = 1e-12);
        }
        let t = snk_recursive(3, 2).unwrap();
        assert_relative_eq!(t.get(2, 1), -2.0 / 3.0, epsilon = 1e-14);
        // gamma_5^* = 0 <=> S_{2,2}(5) = 0
        let t5 = snk_recursive(5, 2).unwrap();
        assert!(t5.get(2, 2).abs() < 1e-13);
    }

    #[test]
    fn bruteforce_examples() {
        assert_relative_eq!(snk_bruteforce(4, 0, 0).re, 3.0, epsilon = 1e-13);
        assert!(snk_bruteforce(5, 2, 2).norm() < 1e-12);
        assert_relative_eq!(snk_bruteforce(2, 1, 1).re, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn recursive_matches_bruteforce() {
        for n_v in 2..=20usize {
            let t = snk_recursive(n_v, 8).unwrap();
            for n in 0..=8u32 {
                for k in 0..=n {
                    let b = snk_bruteforce(n_v, n, k);
                    assert!(
                        (t.get(n, k) - b.re).abs() < 1e-10,
                        "S_{{{n},{k}}}(N={n_v}): table {} vs sum {}",
                        t.get(n, k),
                        b.re
                    );
                    assert!(b.im.abs() < 1e-12, "imaginary part {} at N={n_v} n={n} k={k}", b.im);
                }
            }
        }
    }

    #[test]
    fn s33_bruteforce_oracle_n6() {
        // frozen from the direct complex sum
        let t = snk_recursive(6, 3).unwrap();
        let oracle = snk_bruteforce(6, 3, 3).re;
        assert_relative_eq!(t.get(3, 3), oracle, epsilon = 1e-12);
    }

    #[test]
    fn binomial_identity_path() {
        // S_{n,k} = sum_j binom(k,j) S_{n-k+j,0}
        let n_v = 9;
        let t = snk_recursive(n_v, 6).unwrap();
        for n in 1..=6u32 {
            for k in 0..=n {
                let mut s = 0.0;
                for j in 0..=k {
                    s += binomial(k, j) * t.get(n - k + j, 0);
                }
                assert_relative_eq!(s, t.get(n, k), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn cnk_examples() {
        assert_relative_eq!(cnk(2.0, 1, 0), 2.0 / (2.0 * PI), epsilon = 1e-15);
        assert_relative_eq!(cnk(1.0, 0, 1), 1.0, epsilon = 1e-15);
        // sign (-1)^{n+k-1} with n=3, k=0 is +1
        assert_relative_eq!(cnk(1.0, 3, 0), 1.0 / (6.0 * PI), epsilon = 1e-15);
        assert_relative_eq!(cnk(1.0, 2, 0), -1.0 / (4.0 * PI), epsilon = 1e-15);
        assert_relative_eq!(cnk(1.0, 3, 2), 1.0 / (2.0 * PI), epsilon = 1e-15);
        // alternating sign along k
        for k in 0..4u32 {
            assert!(cnk(1.0, 4, k) * cnk(1.0, 4, k + 1) < 0.0);
        }
    }
}
