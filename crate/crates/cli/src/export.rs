//! `ptosc export contour`.

use ptosc_core::{export_contour, ContourTable, PtSystem, Result};

use crate::config::Format;

pub const DEFAULT_EXPORT_EPS: f64 = 0.25;
pub const DEFAULT_Q_RANGE: f64 = 50.0;
pub const DEFAULT_SAMPLES: usize = 1001;

pub fn contour_table(eps: f64, q_range: f64, samples: usize) -> Result<ContourTable> {
    export_contour(&PtSystem::new(eps)?, q_range, samples)
}

/// Body to write, plus a note for stderr when the format has no room for
/// the endpoint.
pub fn render_contour(table: &ContourTable, format: Format) -> (String, Option<String>) {
    match format {
        Format::Json => (table.to_json() + "\n", None),
        Format::Csv | Format::Text => {
            let note = match table.endpoint {
                Some(e) => format!("endpoint: {} + {}i", e.re, e.im),
                None => "endpoint: none (epsilon = 0)".to_string(),
            };
            (table.to_csv(), Some(note))
        }
    }
}
