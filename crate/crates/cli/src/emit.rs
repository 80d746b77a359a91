use serde::Serialize;

use crate::args::Format;
use crate::validate::ValidationReport;
use crate::CliError;

pub fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut out = serde_json::to_vec_pretty(value)
        .map_err(|e| CliError::input(format!("serialisation failed: {e}")))?;
    out.push(b'\n');
    Ok(out)
}

pub fn csv<I, R>(header: &[&str], rows: I) -> Result<Vec<u8>, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let fail = |e: csv::Error| CliError::input(format!("csv output failed: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(row).map_err(fail)?;
    }
    w.into_inner()
        .map_err(|e| CliError::input(format!("csv output failed: {e}")))
}

pub fn validation(report: &ValidationReport, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json(report),
        Format::Csv => csv(
            &["id", "n", "status", "detail"],
            report.checks.iter().map(|c| {
                vec![
                    c.id.clone(),
                    c.n.map(|n| n.to_string()).unwrap_or_default(),
                    c.status.as_str().to_owned(),
                    c.detail.clone(),
                ]
            }),
        ),
    }
}
