//! Kekulé counts `Φ_n`, degree of freedom `IDF_n` and anti-forcing sums `AF_n`
//! of `H_n`, each reachable along several independent routes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::chain::PolyRecurrence;
use super::QuadRat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceName {
    /// Number of perfect matchings.
    Phi,
    /// Sum of forcing numbers over all perfect matchings.
    Idf,
    /// Sum of anti-forcing numbers over all perfect matchings.
    AfSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Linear recurrence on the integers.
    Recurrence,
    /// Closed form evaluated exactly in `Q(√2)`.
    ClosedForm,
    /// Forcing polynomial evaluated at 1 (`Phi` only).
    PolyEval,
    /// Derivative at 1 of the forcing or anti-forcing polynomial.
    PolyDerivative,
}

impl SequenceName {
    pub const ALL: [SequenceName; 3] = [SequenceName::Phi, SequenceName::Idf, SequenceName::AfSum];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Phi => "phi",
            SequenceName::Idf => "idf",
            SequenceName::AfSum => "af_sum",
        }
    }

    pub fn routes(self) -> [Route; 3] {
        match self {
            SequenceName::Phi => [Route::Recurrence, Route::ClosedForm, Route::PolyEval],
            _ => [Route::PolyDerivative, Route::Recurrence, Route::ClosedForm],
        }
    }
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::ClosedForm => "closed_form",
            Route::PolyEval => "poly_eval",
            Route::PolyDerivative => "poly_derivative",
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown sequence `{s}`")))
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [
            Route::Recurrence,
            Route::ClosedForm,
            Route::PolyEval,
            Route::PolyDerivative,
        ]
        .into_iter()
        .find(|r| r.as_str() == s)
        .ok_or_else(|| Error::invalid(format!("unknown route `{s}`")))
    }
}

/// Values `v_0 ..= v_max` of one sequence along one route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: SequenceName,
    pub route: Route,
    pub values: Vec<BigInt>,
}

impl SequenceTable {
    pub fn compute(name: SequenceName, route: Route, max_n: usize) -> Result<Self> {
        let values = match (name, route) {
            (SequenceName::Phi, Route::Recurrence) => phi_recurrence(max_n),
            (SequenceName::Phi, Route::PolyEval) => PolyRecurrence::forcing()
                .terms(max_n)
                .iter()
                .map(|p| p.eval_at_one())
                .collect(),
            (SequenceName::Idf, Route::PolyDerivative) => {
                derivative_at_one(&PolyRecurrence::forcing(), max_n)
            }
            (SequenceName::AfSum, Route::PolyDerivative) => {
                derivative_at_one(&PolyRecurrence::antiforcing(), max_n)
            }
            (SequenceName::Idf, Route::Recurrence) => mixed_recurrence(10, max_n),
            (SequenceName::AfSum, Route::Recurrence) => mixed_recurrence(12, max_n),
            (_, Route::ClosedForm) => (0..=max_n)
                .map(|n| {
                    let exact = closed_form_value(name, n);
                    exact.to_integer().ok_or_else(|| {
                        Error::InternalConsistency(format!(
                            "closed form for {name} at n = {n} is not an integer: {exact}"
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            _ => {
                return Err(Error::invalid(format!(
                    "route {route} does not apply to {name}"
                )));
            }
        };
        Ok(SequenceTable {
            name,
            route,
            values,
        })
    }
}

/// `Φ_n = 6Φ_{n−1} − Φ_{n−2}`, `Φ_0 = 1`, `Φ_1 = 6`.
fn phi_recurrence(max_n: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let v = match n {
            0 => BigInt::from(1),
            1 => BigInt::from(6),
            _ => BigInt::from(6) * &out[n - 1] - &out[n - 2],
        };
        out.push(v);
    }
    out
}

/// `S_n = 6S_{n−1} − S_{n−2} + c·Φ_{n−1} − 2Φ_{n−2}`, seeded from the
/// derivatives of the polynomial seeds (`S_0 = 0`, `S_1 = c`). `c = 10` gives
/// the degree of freedom, `c = 12` the anti-forcing sum.
fn mixed_recurrence(c: i64, max_n: usize) -> Vec<BigInt> {
    let phi = phi_recurrence(max_n);
    let mut out: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let v = match n {
            0 => BigInt::zero(),
            1 => BigInt::from(c),
            _ => {
                BigInt::from(6) * &out[n - 1] - &out[n - 2] + BigInt::from(c) * &phi[n - 1]
                    - BigInt::from(2) * &phi[n - 2]
            }
        };
        out.push(v);
    }
    out
}

fn derivative_at_one(rec: &PolyRecurrence, max_n: usize) -> Vec<BigInt> {
    rec.terms(max_n)
        .iter()
        .map(|p| p.derivative().eval_at_one())
        .collect()
}

fn small() -> QuadRat {
    QuadRat::from_ints(3, -2)
}

fn large() -> QuadRat {
    QuadRat::from_ints(3, 2)
}

/// The closed form of `name` at `n`, evaluated exactly in `Q(√2)`.
///
/// ```text
/// Φ_n   = (17−12√2)/(16−12√2)·α^n + (17+12√2)/(16+12√2)·β^n
/// IDF_n = √2/32·α^n + (7−5√2)/8·n·α^n − √2/32·β^n + (7+5√2)/8·n·β^n
/// AF_n  = 3√2/64·α^n + (17−12√2)/16·n·α^n − 3√2/64·β^n + (17+12√2)/16·n·β^n
/// ```
///
/// with `α = 3 − 2√2`, `β = 3 + 2√2`.
pub fn closed_form_value(name: SequenceName, n: usize) -> QuadRat {
    let e = u32::try_from(n).expect("exponent fits in u32");
    let (a_n, b_n) = (small().pow(e), large().pow(e));
    let nn = QuadRat::from_integer(BigInt::from(n));
    match name {
        SequenceName::Phi => {
            let c1 = &QuadRat::from_ints(17, -12) / &QuadRat::from_ints(16, -12);
            let c2 = &QuadRat::from_ints(17, 12) / &QuadRat::from_ints(16, 12);
            &(&c1 * &a_n) + &(&c2 * &b_n)
        }
        SequenceName::Idf => derivative_closed_form(
            QuadRat::from_ratios(0, 1, 1, 32),
            QuadRat::from_ratios(7, 8, -5, 8),
            QuadRat::from_ratios(7, 8, 5, 8),
            &nn,
            &a_n,
            &b_n,
        ),
        SequenceName::AfSum => derivative_closed_form(
            QuadRat::from_ratios(0, 1, 3, 64),
            QuadRat::from_ratios(17, 16, -12, 16),
            QuadRat::from_ratios(17, 16, 12, 16),
            &nn,
            &a_n,
            &b_n,
        ),
    }
}

// λ·α^n + μ·n·α^n − λ·β^n + ν·n·β^n
fn derivative_closed_form(
    lambda: QuadRat,
    mu: QuadRat,
    nu: QuadRat,
    n: &QuadRat,
    a_n: &QuadRat,
    b_n: &QuadRat,
) -> QuadRat {
    let first = &(&lambda + &(&mu * n)) * a_n;
    let second = &(&(-&lambda) + &(&nu * n)) * b_n;
    &first + &second
}

fn single(name: SequenceName, route: Route, n: usize) -> Result<BigInt> {
    if route == Route::ClosedForm {
        let exact = closed_form_value(name, n);
        return exact.to_integer().ok_or_else(|| {
            Error::InternalConsistency(format!(
                "closed form for {name} at n = {n} is not an integer: {exact}"
            ))
        });
    }
    let mut table = SequenceTable::compute(name, route, n)?;
    Ok(table.values.pop().expect("table holds n + 1 values"))
}

/// `Φ(H_n)`.
pub fn phi(n: usize, route: Route) -> Result<BigInt> {
    single(SequenceName::Phi, route, n)
}

/// `IDF(H_n)`, the sum of forcing numbers.
pub fn idf(n: usize, route: Route) -> Result<BigInt> {
    single(SequenceName::Idf, route, n)
}

/// `AF_n`, the sum of anti-forcing numbers of `H_n`.
pub fn af_sum(n: usize, route: Route) -> Result<BigInt> {
    single(SequenceName::AfSum, route, n)
}

/// Residuals of `v_n − (12v_{n−1} − 38v_{n−2} + 12v_{n−3} − v_{n−4})` for
/// `n = 4 ..`; all zero for `IDF` and `AF`.
pub fn fourth_order_residuals(values: &[BigInt]) -> Vec<BigInt> {
    values
        .windows(5)
        .map(|w| {
            &w[4]
                - (BigInt::from(12) * &w[3] - BigInt::from(38) * &w[2] + BigInt::from(12) * &w[1]
                    - &w[0])
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    Idf,
    AfSum,
}

impl RatioKind {
    /// `1 + √2/2` and `1 + 3√2/4`.
    pub fn limit(self) -> QuadRat {
        match self {
            RatioKind::Idf => QuadRat::from_ratios(1, 1, 1, 2),
            RatioKind::AfSum => QuadRat::from_ratios(1, 1, 3, 4),
        }
    }

    /// `κ` in `ratio_n = limit − κ/n + O(n⁻¹(α/β)^n)`: the ratio approaches its
    /// limit only like `1/n`.
    pub fn first_order_correction(self) -> QuadRat {
        let c2 = &QuadRat::from_ints(17, 12) / &QuadRat::from_ints(16, 12);
        let lambda = match self {
            RatioKind::Idf => QuadRat::from_ratios(0, 1, 1, 32),
            RatioKind::AfSum => QuadRat::from_ratios(0, 1, 3, 64),
        };
        &lambda / &c2
    }

    fn sequence(self) -> SequenceName {
        match self {
            RatioKind::Idf => SequenceName::Idf,
            RatioKind::AfSum => SequenceName::AfSum,
        }
    }
}

/// `IDF_n / (n·Φ_n)` or `AF_n / (n·Φ_n)` as an exact rational.
pub fn asymptotic_ratio(kind: RatioKind, n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::invalid("the ratio needs n >= 1"));
    }
    let top = single(kind.sequence(), Route::Recurrence, n)?;
    let phi_n = phi(n, Route::Recurrence)?;
    Ok(BigRational::new(top, BigInt::from(n) * phi_n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn phi_values() {
        for route in SequenceName::Phi.routes() {
            assert_eq!(phi(0, route).unwrap(), BigInt::from(1));
            assert_eq!(phi(2, route).unwrap(), BigInt::from(35));
            assert_eq!(phi(6, route).unwrap(), BigInt::from(40391));
        }
    }

    #[test]
    fn idf_values() {
        for route in SequenceName::Idf.routes() {
            let t = SequenceTable::compute(SequenceName::Idf, route, 6).unwrap();
            assert_eq!(
                t.values,
                ints(&[0, 10, 118, 1036, 8068, 58854, 411978]),
                "{route}"
            );
        }
    }

    #[test]
    fn af_values() {
        for route in SequenceName::AfSum.routes() {
            let t = SequenceTable::compute(SequenceName::AfSum, route, 8).unwrap();
            assert_eq!(
                t.values,
                ints(&[0, 12, 142, 1248, 9724, 70956, 496794, 3380640, 22531256]),
                "{route}"
            );
        }
    }

    #[test]
    fn closed_forms_have_no_irrational_residue() {
        for name in SequenceName::ALL {
            for n in 0..=40 {
                assert!(closed_form_value(name, n).is_rational(), "{name} n = {n}");
            }
        }
    }

    #[test]
    fn fourth_order_recurrence_holds() {
        for name in [SequenceName::Idf, SequenceName::AfSum] {
            let t = SequenceTable::compute(name, Route::Recurrence, 30).unwrap();
            assert!(fourth_order_residuals(&t.values).iter().all(Zero::is_zero));
        }
        // the characteristic polynomial is the square of Φ's
        let phi = SequenceTable::compute(SequenceName::Phi, Route::Recurrence, 20).unwrap();
        assert!(fourth_order_residuals(&phi.values)
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn route_mismatch() {
        assert!(SequenceTable::compute(SequenceName::Phi, Route::PolyDerivative, 3).is_err());
        assert!(SequenceTable::compute(SequenceName::Idf, Route::PolyEval, 3).is_err());
    }

    #[test]
    fn ratio_error_is_first_order() {
        let tiny =
            QuadRat::from_rational(BigRational::new(BigInt::from(1), BigInt::from(10).pow(30)));
        for kind in [RatioKind::Idf, RatioKind::AfSum] {
            for n in [20usize, 40] {
                let ratio = QuadRat::from_rational(asymptotic_ratio(kind, n).unwrap());
                let nn = QuadRat::from_integer(BigInt::from(n));
                let model = &kind.limit() - &(&kind.first_order_correction() / &nn);
                assert!((&ratio - &model).abs() < tiny, "{kind:?} n = {n}");
            }
        }
    }

    #[test]
    fn ratio_at_one() {
        let r = asymptotic_ratio(RatioKind::Idf, 1).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(10), BigInt::from(6)));
        assert!(asymptotic_ratio(RatioKind::AfSum, 0).is_err());
    }

    #[test]
    fn parsing_names_and_routes() {
        assert_eq!(
            "af_sum".parse::<SequenceName>().unwrap(),
            SequenceName::AfSum
        );
        assert_eq!("closed_form".parse::<Route>().unwrap(), Route::ClosedForm);
        assert!("nope".parse::<Route>().is_err());
    }
}
