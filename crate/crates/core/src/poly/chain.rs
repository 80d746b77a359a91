//! Forcing and anti-forcing polynomials of the pyrene chain `H_n`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;

/// `P_n = multiplier · P_{n-1} − subtrahend · P_{n-2}` with two seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRecurrence {
    pub multiplier: IntPoly,
    pub subtrahend: IntPoly,
    pub seeds: [IntPoly; 2],
}

impl PolyRecurrence {
    /// `F(H_n) = (4x² + 2x) F(H_{n-1}) − x² F(H_{n-2})`, `F(H_0) = 1`,
    /// `F(H_1) = 4x² + 2x`.
    pub fn forcing() -> Self {
        let step = IntPoly::from_i64s(&[0, 2, 4]);
        PolyRecurrence {
            multiplier: step.clone(),
            subtrahend: IntPoly::from_i64s(&[0, 0, 1]),
            seeds: [IntPoly::one(), step],
        }
    }

    /// `Af(H_n) = (2x³ + 2x² + 2x) Af(H_{n-1}) − x² Af(H_{n-2})`, `Af(H_0) = 1`,
    /// `Af(H_1) = 2x³ + 2x² + 2x`.
    pub fn antiforcing() -> Self {
        let step = IntPoly::from_i64s(&[0, 2, 2, 2]);
        PolyRecurrence {
            multiplier: step.clone(),
            subtrahend: IntPoly::from_i64s(&[0, 0, 1]),
            seeds: [IntPoly::one(), step],
        }
    }

    pub fn with_seed(mut self, index: usize, seed: IntPoly) -> Self {
        self.seeds[index] = seed;
        self
    }

    /// `P_0 ..= P_max_n`.
    pub fn terms(&self, max_n: usize) -> Vec<IntPoly> {
        let mut out = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let next = match n {
                0 | 1 => self.seeds[n].clone(),
                _ => &(&self.multiplier * &out[n - 1]) - &(&self.subtrahend * &out[n - 2]),
            };
            out.push(next);
        }
        out
    }

    pub fn term(&self, n: usize) -> IntPoly {
        self.terms(n).pop().expect("terms is never empty")
    }
}

pub fn forcing_poly_recurrence(n: usize) -> IntPoly {
    PolyRecurrence::forcing().term(n)
}

pub fn antiforcing_poly_recurrence(n: usize) -> IntPoly {
    PolyRecurrence::antiforcing().term(n)
}

/// Pascal triangle, grown on demand. Out-of-range entries are zero.
#[derive(Debug, Clone, Default)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new() -> Self {
        Binomials {
            rows: vec![vec![BigInt::from(1)]],
        }
    }

    pub fn get(&mut self, a: i64, b: i64) -> BigInt {
        if a < 0 || b < 0 || b > a {
            return BigInt::zero();
        }
        let a = a as usize;
        while self.rows.len() <= a {
            let prev = self.rows.last().expect("row 0 exists");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::from(1));
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::from(1));
            self.rows.push(row);
        }
        self.rows[a][b as usize].clone()
    }
}

fn signed_power_of_two(negative: bool, exp: i64) -> BigInt {
    let p = BigInt::from(1) << exp as usize;
    if negative {
        -p
    } else {
        p
    }
}

/// `x^n · Σ_{j=0}^{n} Σ_{i=⌈(j+n)/2⌉}^{n} (−1)^{n−i} 2^{2i+j−n} C(i, n−i) C(2i−n, j) x^j`.
pub fn forcing_poly_closed(n: usize) -> IntPoly {
    let n = n as i64;
    let mut binom = Binomials::new();
    let mut coeffs = vec![BigInt::zero(); (2 * n + 1) as usize];
    for j in 0..=n {
        for i in (j + n + 1) / 2..=n {
            let term = signed_power_of_two((n - i) % 2 == 1, 2 * i + j - n)
                * binom.get(i, n - i)
                * binom.get(2 * i - n, j);
            coeffs[(n + j) as usize] += term;
        }
    }
    IntPoly::new(coeffs)
}

/// `x^n · Σ_{l=0}^{2n} Σ_{i=⌈(l+2n)/4⌉}^{n} Σ_{j=⌈l/2⌉}^{l}
/// (−1)^{n−i} 2^{2i−n} C(i, 2i−n) C(2i−n, j) C(j, l−j) x^l`.
///
/// `j` runs to `l` even where `j > 2i − n`; those terms vanish through
/// `C(2i−n, j) = 0`.
pub fn antiforcing_poly_closed(n: usize) -> IntPoly {
    antiforcing_closed_with_j_bound(n, |_i, l| l)
}

pub(crate) fn antiforcing_closed_with_j_bound(
    n: usize,
    j_max: impl Fn(i64, i64) -> i64,
) -> IntPoly {
    let n = n as i64;
    let mut binom = Binomials::new();
    let mut coeffs = vec![BigInt::zero(); (3 * n + 1) as usize];
    for l in 0..=2 * n {
        for i in (l + 2 * n + 3) / 4..=n {
            let outer = signed_power_of_two((n - i) % 2 == 1, 2 * i - n) * binom.get(i, 2 * i - n);
            for j in (l + 1) / 2..=j_max(i, l) {
                let term = &outer * binom.get(2 * i - n, j) * binom.get(j, l - j);
                coeffs[(n + l) as usize] += term;
            }
        }
    }
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn forcing_seeds_and_first_step() {
        assert_eq!(forcing_poly_recurrence(0), IntPoly::one());
        assert_eq!(forcing_poly_recurrence(1), p(&[0, 2, 4]));
        assert_eq!(forcing_poly_recurrence(2), p(&[0, 0, 3, 16, 16]));
    }

    #[test]
    fn antiforcing_seeds_and_first_step() {
        assert_eq!(antiforcing_poly_recurrence(1), p(&[0, 2, 2, 2]));
        let two = antiforcing_poly_recurrence(2);
        assert_eq!(two, p(&[0, 0, 3, 8, 12, 8, 4]));
        assert_eq!(two.eval_at_one(), BigInt::from(35));
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(forcing_poly_closed(0), IntPoly::one());
        assert_eq!(forcing_poly_closed(1), p(&[0, 2, 4]));
        assert_eq!(antiforcing_poly_closed(0), IntPoly::one());
        assert_eq!(antiforcing_poly_closed(1), p(&[0, 2, 2, 2]));
    }

    #[test]
    fn closed_forms_match_recurrences() {
        let f = PolyRecurrence::forcing().terms(20);
        let af = PolyRecurrence::antiforcing().terms(20);
        for n in 0..=20 {
            assert_eq!(forcing_poly_closed(n), f[n], "forcing n = {n}");
            assert_eq!(antiforcing_poly_closed(n), af[n], "anti-forcing n = {n}");
        }
    }

    #[test]
    fn inner_sum_beyond_binomial_support_contributes_nothing() {
        for n in 0..=12 {
            let truncated = antiforcing_closed_with_j_bound(n, |i, l| l.min(2 * i - n as i64));
            assert_eq!(truncated, antiforcing_poly_closed(n));
        }
    }

    #[test]
    fn binomials() {
        let mut b = Binomials::new();
        assert_eq!(b.get(5, 2), BigInt::from(10));
        assert_eq!(b.get(40, 20), "137846528820".parse::<BigInt>().unwrap());
        assert!(b.get(3, 4).is_zero());
        assert!(b.get(3, -1).is_zero());
        assert!(b.get(-1, 0).is_zero());
    }

    #[test]
    fn corrupted_seed_changes_the_sequence() {
        let bad = PolyRecurrence::forcing().with_seed(1, p(&[0, 2, 5]));
        assert_ne!(bad.term(3), forcing_poly_recurrence(3));
    }
}
