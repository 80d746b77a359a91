//! The cross-check matrix behind `pyrene validate`.
//!
//! Each check compares two independent routes to the same quantity and yields
//! one record per chain length. A check that cannot run within the brute-force
//! caps is recorded as skipped, never as passed.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use pyrene_core::antiforcing::anti_forcing_polynomial;
use pyrene_core::forcing::forcing_polynomial;
use pyrene_core::matching::count_perfect_matchings;
use pyrene_core::poly::{
    antiforcing_poly_closed, asymptotic_ratio, closed_form_value, forcing_poly_closed,
    fourth_order_residuals, PolyRecurrence, RatioKind, Route, SequenceName, SequenceTable,
};
use pyrene_core::{
    AntiForcingMethod, BruteCaps, Error, ForcingMethod, IntPoly, QuadRat, SpectrumReport,
    SystemSpec,
};

use crate::args::Caps;
use crate::CliError;

const IDF_REFERENCE: [i64; 7] = [0, 10, 118, 1036, 8068, 58854, 411978];
const AF_SUM_REFERENCE: [i64; 9] = [0, 12, 142, 1248, 9724, 70956, 496794, 3380640, 22531256];

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ValidateConfig {
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub brute_forcing_max_n: usize,
    pub brute_antiforcing_max_n: usize,
    /// Replacement for `F(H_1)`, ascending decimal coefficients.
    pub forcing_seed: Option<Vec<String>>,
    /// Replacement for `Af(H_1)`.
    pub antiforcing_seed: Option<Vec<String>>,
    pub caps: Option<Caps>,
}

impl Default for ValidateConfig {
    fn default() -> Self {
        ValidateConfig {
            max_n: 40,
            oracle_max_n: 6,
            brute_forcing_max_n: 3,
            brute_antiforcing_max_n: 2,
            forcing_seed: None,
            antiforcing_seed: None,
            caps: None,
        }
    }
}

impl ValidateConfig {
    pub fn parse(bytes: &[u8]) -> Result<Self, CliError> {
        serde_json::from_slice(bytes)
            .map_err(|e| CliError::input(format!("invalid validation config: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub n: Option<usize>,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckRecord>,
    /// Ids with at least one failing record, in first-failure order.
    pub failures: Vec<String>,
}

impl ValidationReport {
    fn push(&mut self, id: &str, n: Option<usize>, status: CheckStatus, detail: impl Into<String>) {
        if status == CheckStatus::Fail && !self.failures.iter().any(|f| f == id) {
            self.failures.push(id.to_owned());
        }
        self.checks.push(CheckRecord {
            id: id.to_owned(),
            n,
            status,
            detail: detail.into(),
        });
    }

    fn compare<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: &str,
        n: usize,
        left: &T,
        right: &T,
    ) {
        if left == right {
            self.push(id, Some(n), CheckStatus::Pass, left.to_string());
        } else {
            self.push(id, Some(n), CheckStatus::Fail, format!("{left} != {right}"));
        }
    }

    /// Fail if any record failed, pass if any passed, skipped otherwise.
    pub fn status_of(&self, id: &str) -> Option<CheckStatus> {
        let statuses: Vec<CheckStatus> = self
            .checks
            .iter()
            .filter(|c| c.id == id)
            .map(|c| c.status)
            .collect();
        [CheckStatus::Fail, CheckStatus::Pass, CheckStatus::Skipped]
            .into_iter()
            .find(|s| statuses.contains(s))
    }
}

fn seed(coeffs: &Option<Vec<String>>, default: IntPoly) -> Result<IntPoly, CliError> {
    match coeffs {
        Some(c) => Ok(IntPoly::from_decimal_strings(c)?),
        None => Ok(default),
    }
}

fn table(name: SequenceName, route: Route, max_n: usize) -> Result<Vec<BigInt>, CliError> {
    Ok(SequenceTable::compute(name, route, max_n)?.values)
}

pub fn run(cfg: &ValidateConfig) -> Result<ValidationReport, CliError> {
    if cfg.max_n == 0 {
        return Err(CliError::input("max_n must be at least 1"));
    }
    let max_n = cfg.max_n;
    let mut report = ValidationReport::default();

    let forcing_rec = PolyRecurrence::forcing();
    let forcing_rec = forcing_rec
        .clone()
        .with_seed(1, seed(&cfg.forcing_seed, forcing_rec.seeds[1].clone())?);
    let af_rec = PolyRecurrence::antiforcing();
    let af_rec = af_rec
        .clone()
        .with_seed(1, seed(&cfg.antiforcing_seed, af_rec.seeds[1].clone())?);
    let forcing_terms = forcing_rec.terms(max_n);
    let af_terms = af_rec.terms(max_n);

    let phi_rec = table(SequenceName::Phi, Route::Recurrence, max_n)?;
    let phi_closed = table(SequenceName::Phi, Route::ClosedForm, max_n)?;
    for n in 0..=max_n {
        report.compare("phi-recurrence-vs-closed", n, &phi_rec[n], &phi_closed[n]);
    }
    for n in 0..=max_n {
        report.compare(
            "phi-poly-eval",
            n,
            &forcing_terms[n].eval_at_one(),
            &phi_rec[n],
        );
        report.compare("phi-poly-eval", n, &af_terms[n].eval_at_one(), &phi_rec[n]);
    }
    for (n, want) in phi_rec
        .iter()
        .enumerate()
        .take(cfg.oracle_max_n + 1)
        .skip(1)
    {
        let g = SystemSpec::PyreneChain { n }.instance()?;
        let counted = BigInt::from(count_perfect_matchings(g.graph()));
        report.compare("phi-enumeration", n, &counted, want);
    }

    for n in 0..=max_n {
        report.compare(
            "forcing-recurrence-vs-closed",
            n,
            &forcing_terms[n],
            &forcing_poly_closed(n),
        );
        report.compare(
            "antiforcing-recurrence-vs-closed",
            n,
            &af_terms[n],
            &antiforcing_poly_closed(n),
        );
    }

    let h1 = SystemSpec::PyreneChain { n: 1 }.instance()?;
    let f1 = forcing_polynomial(&h1, ForcingMethod::DefinitionSearch, &BruteCaps::forcing())?;
    let af1 = anti_forcing_polynomial(
        &h1,
        AntiForcingMethod::DefinitionSearch,
        &BruteCaps::antiforcing(),
    )?;
    report.compare("seed-polynomials", 1, &forcing_rec.seeds[1], &f1);
    report.compare("seed-polynomials", 1, &af_rec.seeds[1], &af1);

    let user_caps = cfg.caps.map(|c| BruteCaps {
        max_matchings: c.max_matchings,
        max_search_width: c.max_width,
    });
    for n in 1..=max_n.min(cfg.oracle_max_n) {
        let inst = SystemSpec::PyreneChain { n }.instance()?;
        let f_oracle =
            forcing_polynomial(&inst, ForcingMethod::HexagonOracle, &BruteCaps::unlimited())?;
        report.compare(
            "forcing-oracle-vs-recurrence",
            n,
            &f_oracle,
            &forcing_terms[n],
        );
        let af_oracle = anti_forcing_polynomial(
            &inst,
            AntiForcingMethod::CompatibleOracle,
            &BruteCaps::unlimited(),
        )?;
        report.compare(
            "antiforcing-oracle-vs-recurrence",
            n,
            &af_oracle,
            &af_terms[n],
        );

        if n <= cfg.brute_forcing_max_n {
            let caps = user_caps.unwrap_or_else(BruteCaps::forcing);
            match forcing_polynomial(&inst, ForcingMethod::DefinitionSearch, &caps) {
                Ok(p) => report.compare("forcing-brute-vs-oracle", n, &p, &f_oracle),
                Err(Error::CapExceeded(m)) => {
                    report.push("forcing-brute-vs-oracle", Some(n), CheckStatus::Skipped, m)
                }
                Err(e) => return Err(e.into()),
            }
        }
        if n <= cfg.brute_antiforcing_max_n {
            let caps = user_caps.unwrap_or_else(BruteCaps::antiforcing);
            match anti_forcing_polynomial(&inst, AntiForcingMethod::DefinitionSearch, &caps) {
                Ok(p) => report.compare("antiforcing-brute-vs-oracle", n, &p, &af_oracle),
                Err(Error::CapExceeded(m)) => report.push(
                    "antiforcing-brute-vs-oracle",
                    Some(n),
                    CheckStatus::Skipped,
                    m,
                ),
                Err(e) => return Err(e.into()),
            }
        }
    }

    for (name, id, reference, prefix) in [
        (SequenceName::Idf, "idf", &IDF_REFERENCE[..], "idf"),
        (
            SequenceName::AfSum,
            "af-sum",
            &AF_SUM_REFERENCE[..],
            "af-sum",
        ),
    ] {
        let tables = name
            .routes()
            .iter()
            .map(|&r| Ok((r, table(name, r, max_n)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let base = &tables[0].1;
        for n in 0..=max_n {
            for (route, values) in &tables[1..] {
                if values[n] == base[n] {
                    report.push(
                        &format!("{id}-routes"),
                        Some(n),
                        CheckStatus::Pass,
                        format!("{} {}", route, values[n]),
                    );
                } else {
                    report.push(
                        &format!("{id}-routes"),
                        Some(n),
                        CheckStatus::Fail,
                        format!(
                            "{} gives {}, {} gives {}",
                            tables[0].0, base[n], route, values[n]
                        ),
                    );
                }
            }
        }
        for (n, &want) in reference.iter().enumerate().take(max_n + 1) {
            report.compare(
                &format!("{prefix}-reference-values"),
                n,
                &base[n],
                &BigInt::from(want),
            );
        }
        for (i, r) in fourth_order_residuals(base).iter().enumerate() {
            report.compare(&format!("{prefix}-fourth-order"), i + 4, r, &BigInt::zero());
        }
    }

    for name in SequenceName::ALL {
        for n in 0..=max_n {
            let v = closed_form_value(name, n);
            let status = if v.is_rational() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            report.push(
                "closed-form-sqrt2-residue",
                Some(n),
                status,
                format!("{name} {v}"),
            );
        }
    }

    for n in 1..=max_n {
        for (id, poly, top) in [
            ("forcing-spectrum-interval", &forcing_terms[n], 2 * n),
            ("antiforcing-spectrum-interval", &af_terms[n], 3 * n),
        ] {
            let s = SpectrumReport::from_poly(poly)?;
            let ok = s.is_contiguous() && s.min == n && s.max == top;
            let detail = format!("[{}, {}] contiguous={}", s.min, s.max, s.is_contiguous());
            report.push(
                id,
                Some(n),
                if ok {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                detail,
            );
        }
    }

    for (kind, id) in [
        (RatioKind::Idf, "idf-asymptotic"),
        (RatioKind::AfSum, "af-sum-asymptotic"),
    ] {
        asymptotic_check(&mut report, kind, id, max_n)?;
    }

    Ok(report)
}

// ratio_n against limit - kappa/n; the remainder decays geometrically, so it is
// only tested once n is large enough for the tolerance to be meaningful.
fn asymptotic_check(
    report: &mut ValidationReport,
    kind: RatioKind,
    id: &str,
    max_n: usize,
) -> Result<(), CliError> {
    const MIN_N: usize = 10;
    if max_n < MIN_N {
        report.push(
            id,
            Some(max_n),
            CheckStatus::Skipped,
            format!("needs max_n >= {MIN_N}"),
        );
        return Ok(());
    }
    let ratio = QuadRat::from_rational(asymptotic_ratio(kind, max_n)?);
    let n = QuadRat::from_ints(max_n as i64, 0);
    let model = &kind.limit() - &(&kind.first_order_correction() / &n);
    let residual = (&ratio - &model).abs();
    let tolerance = QuadRat::from_ratios(1, 1_000_000_000, 0, 1);
    let gap = (&kind.limit() - &ratio).abs();
    let detail = format!(
        "|ratio - model| = {:.3e}, |ratio - limit| = {:.6e}",
        residual.to_f64(),
        gap.to_f64()
    );
    let status = if residual < tolerance {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    report.push(id, Some(max_n), status, detail);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_unknown_fields() {
        let cfg = ValidateConfig::parse(br#"{"max_n": 5}"#).unwrap();
        assert_eq!(cfg.max_n, 5);
        assert_eq!(cfg.oracle_max_n, 6);
        assert!(ValidateConfig::parse(br#"{"maxn": 5}"#).is_err());
        let cfg = ValidateConfig::parse(br#"{"caps": "10,4"}"#).unwrap();
        assert_eq!(
            cfg.caps,
            Some(Caps {
                max_matchings: 10,
                max_width: 4
            })
        );
    }

    #[test]
    fn small_run_passes() {
        let cfg = ValidateConfig {
            max_n: 12,
            oracle_max_n: 3,
            brute_forcing_max_n: 2,
            ..Default::default()
        };
        let report = run(&cfg).unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert_eq!(
            report.status_of("forcing-brute-vs-oracle"),
            Some(CheckStatus::Pass)
        );
        assert_eq!(report.status_of("idf-asymptotic"), Some(CheckStatus::Pass));
    }

    #[test]
    fn corrupted_antiforcing_seed_is_caught() {
        let cfg = ValidateConfig {
            max_n: 4,
            oracle_max_n: 2,
            antiforcing_seed: Some(vec!["0".into(), "2".into(), "2".into(), "3".into()]),
            ..Default::default()
        };
        let report = run(&cfg).unwrap();
        assert!(report
            .failures
            .contains(&"antiforcing-recurrence-vs-closed".to_owned()));
        assert!(report.failures.contains(&"seed-polynomials".to_owned()));
        assert!(!report
            .failures
            .contains(&"forcing-recurrence-vs-closed".to_owned()));
    }
}
