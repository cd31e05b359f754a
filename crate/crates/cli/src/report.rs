use serde_json::Value;

use crate::args::Format;

/// One command's result in every output format.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub table: String,
    pub csv: Csv,
}

#[derive(Debug, Clone, Default)]
pub struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    fn render(&self) -> String {
        let line = |cells: &[String]| cells.iter().map(|c| quote(c)).collect::<Vec<_>>().join(",");
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

fn quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut t = self.table.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
            Format::Json => to_json(&self.json),
            Format::Csv => self.csv.render(),
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline. Parsing the output
/// and passing it back through here reproduces it byte for byte.
pub fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("Value always serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip_is_stable() {
        let v = json!({"z": 1, "a": [1.5, "x"], "m": {"h01": 2, "b": null}});
        let once = to_json(&v);
        let twice = to_json(&serde_json::from_str(&once).unwrap());
        assert_eq!(once, twice);
        assert!(once.find("\"a\"").unwrap() < once.find("\"z\"").unwrap());
    }

    #[test]
    fn csv_quotes_commas() {
        let mut c = Csv::new(["x", "y"]);
        c.push(["a,b", "c"]);
        assert_eq!(c.render(), "x,y\n\"a,b\",c\n");
    }
}
