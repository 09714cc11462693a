use conecenter::{CenterResult, ConeMetrics, Point2};
use serde::Serialize;
use serde_json::{json, Value};

/// Rounds to 12 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

fn format_number(v: f64) -> String {
    let r = round_sig(v);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e15) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn point(p: Point2) -> Value {
    json!([round_sig(p.x), round_sig(p.y)])
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("results serialize");
    text.push('\n');
    text
}

/// Numeric table rendered as RFC 4180 CSV (CRLF line ends) with a header row.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn single(columns: &[&str], values: &[f64]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![values.to_vec()],
        }
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(|&v| format_number(v)))
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush to memory")).expect("ascii output")
    }
}

pub const SWEEP_COLUMNS: [&str; 7] = [
    "h",
    "center_x",
    "center_y",
    "boundary_area",
    "volume",
    "ratio",
    "equal_angle_residual",
];

pub type SweepRow = (f64, CenterResult, ConeMetrics, f64);

pub fn sweep_table(rows: &[SweepRow]) -> Table {
    Table {
        columns: SWEEP_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows: rows
            .iter()
            .map(|(h, res, m, residual)| {
                vec![
                    *h,
                    res.center.x,
                    res.center.y,
                    m.boundary_area,
                    m.volume,
                    m.ratio,
                    *residual,
                ]
            })
            .collect(),
    }
}

pub fn sweep_json(rows: &[SweepRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(h, res, m, residual)| {
                json!({
                    "h": round_sig(*h),
                    "center": point(res.center),
                    "boundary_area": round_sig(m.boundary_area),
                    "volume": round_sig(m.volume),
                    "ratio": round_sig(m.ratio),
                    "equal_angle_residual": round_sig(*residual),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(round_sig(2.0 / 3.0), 0.666666666667);
        assert_eq!(round_sig(-123456.7890123456), -123456.789012);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(format_number(3.25), "3.25");
        assert_eq!(format_number(1.23e-17), "1.23e-17");
    }

    #[test]
    fn csv_has_header_and_rows() {
        let t = Table::single(&["a", "b"], &[1.0, 2.5]);
        assert_eq!(t.to_csv(), "a,b\r\n1,2.5\r\n");
    }
}
