use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

/// Twelve significant digits; scientific notation below 1e-3 in magnitude.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    if x.abs() < 1e-3 || x.abs() >= 1e12 {
        return format!("{x:.11e}");
    }
    let decimals = (11 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Missing,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_number(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => "N/A".into(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // Parse the canonical text so JSON and CSV carry the same value.
            Cell::Num(x) if x.is_finite() => {
                let canonical: f64 = format_number(*x).parse().expect("formatted number parses");
                serde_json::Number::from_f64(canonical).map(Value::Number).unwrap_or(Value::Null)
            }
            Cell::Num(_) | Cell::Missing => Value::Null,
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.clone()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

#[derive(Debug)]
pub struct Report {
    pub config: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Map<String, Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(config: Value, columns: Vec<&'static str>) -> Self {
        Self { config, columns, rows: Vec::new(), metadata: Map::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Table => self.write_table(out),
            Format::Csv => self.write_csv(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json())?;
                writeln!(out)
            }
        }
    }

    fn write_table(&self, out: &mut impl Write) -> io::Result<()> {
        let rendered: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| rendered.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        for row in &rendered {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        for n in &self.notes {
            writeln!(out, "# {n}")?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            writeln!(out, "{}", row.iter().map(Cell::render).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }

    fn json(&self) -> Value {
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                Value::Object(obj)
            })
            .collect();
        let mut metadata = self.metadata.clone();
        if !self.notes.is_empty() {
            metadata.insert("notes".into(), Value::from(self.notes.clone()));
        }
        serde_json::json!({
            "config": self.config,
            "results": results,
            "engine_metadata": metadata,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_number(-0.5), "-0.500000000000");
        assert_eq!(format_number(-4.0), "-4.00000000000");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(123.456), "123.456000000");
        assert_eq!(format_number(2.5e-4), "2.50000000000e-4");
        assert_eq!(format_number(0.0), "0");
    }

    #[test]
    fn json_numbers_reformat_to_the_csv_text() {
        for x in [-0.5, 1.0 / 7.0, 2.0e-5 / 3.0, -12345.678901234] {
            let Value::Number(n) = Cell::Num(x).json() else { panic!() };
            assert_eq!(format_number(n.as_f64().unwrap()), format_number(x));
        }
    }
}
