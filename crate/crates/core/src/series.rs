use std::collections::BTreeMap;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::{CantorSpec, Error, Result};

/// A named value column; `None` marks a row with no value (a declared singularity).
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<Option<f64>>,
}

/// A sampled `(x, S(x), values...)` table.
///
/// `x` is strictly increasing and `s[i]` is always the staircase value of
/// `x[i]` under the `CantorSpec` the series was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSeries {
    x_label: String,
    x: Vec<f64>,
    s: Vec<f64>,
    columns: Vec<Column>,
    meta: BTreeMap<String, String>,
}

impl GridSeries {
    /// Builds the `x` and `s` columns for `xs` under `spec`.
    pub fn on_grid(spec: &CantorSpec, xs: Vec<f64>) -> Result<Self> {
        Self::on_grid_labeled(spec, "x", xs)
    }

    pub fn on_grid_labeled(spec: &CantorSpec, x_label: &str, xs: Vec<f64>) -> Result<Self> {
        if let Some(w) = xs.windows(2).find(|w| !(w[1] > w[0])) {
            return Err(Error::Shape(format!(
                "grid must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        let s = xs.iter().map(|&x| spec.eval(x)).collect::<Result<Vec<_>>>()?;
        let mut meta = BTreeMap::new();
        meta.insert("alpha".to_string(), format_float(spec.alpha()));
        Ok(GridSeries {
            x_label: x_label.to_string(),
            x: xs,
            s,
            columns: Vec::new(),
            meta,
        })
    }

    /// `n` evenly spaced points covering `[0, L]`.
    pub fn uniform(spec: &CantorSpec, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 points, got {n}"
            )));
        }
        let l = spec.length();
        let xs = (0..n).map(|i| l * i as f64 / (n - 1) as f64).collect();
        Self::on_grid(spec, xs)
    }

    /// The same grid and metadata with no value columns.
    pub fn axes(&self) -> GridSeries {
        GridSeries {
            columns: Vec::new(),
            ..self.clone()
        }
    }

    pub fn push_column(&mut self, name: impl Into<String>, values: Vec<Option<f64>>) -> Result<()> {
        let name = name.into();
        if values.len() != self.x.len() {
            return Err(Error::Shape(format!(
                "column {name} has {} rows, grid has {}",
                values.len(),
                self.x.len()
            )));
        }
        if name == self.x_label || name == "s" || self.column(&name).is_some() {
            return Err(Error::Shape(format!("duplicate column name {name}")));
        }
        self.columns.push(Column { name, values });
        Ok(())
    }

    pub fn set_meta(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.meta.insert(key.into(), value.into());
    }

    pub fn meta(&self) -> &BTreeMap<String, String> {
        &self.meta
    }

    pub fn x_label(&self) -> &str {
        &self.x_label
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// The values of `name`, or an error if the column is absent.
    pub fn values(&self, name: &str) -> Result<&[Option<f64>]> {
        self.column(name)
            .map(|c| c.values.as_slice())
            .ok_or_else(|| Error::Shape(format!("no column named {name}")))
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Writes the series as CSV: `# key=value` metadata lines, a header row,
    /// then one row per grid point with 17 significant digits and LF endings.
    /// Missing values are empty fields.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (k, v) in &self.meta {
            writeln!(w, "# {k}={v}")?;
        }
        let mut header = vec![self.x_label.as_str(), "s"];
        header.extend(self.columns.iter().map(|c| c.name.as_str()));
        writeln!(w, "{}", header.join(","))?;
        for i in 0..self.x.len() {
            let mut fields = vec![format_float(self.x[i]), format_float(self.s[i])];
            fields.extend(
                self.columns
                    .iter()
                    .map(|c| c.values[i].map(format_float).unwrap_or_default()),
            );
            writeln!(w, "{}", fields.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }

    /// Column arrays keyed by header name, plus a `meta` object.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert(self.x_label.clone(), json!(self.x));
        obj.insert("s".into(), json!(self.s));
        for c in &self.columns {
            obj.insert(c.name.clone(), json!(c.values));
        }
        let meta: Map<String, Value> = self.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        obj.insert("meta".into(), Value::Object(meta));
        Value::Object(obj)
    }
}

/// Formats `v` with 17 significant digits in the shortest of fixed or
/// exponent notation, dropping trailing zeros (C's `%.17g`).
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.16e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, v))
    } else {
        let mantissa = trim_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
