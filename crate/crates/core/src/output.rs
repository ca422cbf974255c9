//! JSON lines, CSV and plain-text rendering for reports and records.
//!
//! Every real number is rounded to 12 significant digits before it is written,
//! so machine output is stable well above solver noise.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::bounds::{BoundReport, SpectralPair};
use crate::error::{Error, Result};
use crate::search::{ExtremalRecord, RatioRow};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::param(format!("unknown format `{other}`, expected json, csv or text"))),
        }
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits, ties to even on the
/// exact binary value. Negative zero becomes zero; non-finite values pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal form of the rounded value, in exponent form when its
/// magnitude is below 1e-5 or at least 1e15; `nan`, `inf`, `-inf` otherwise.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round_sig(x);
    if r == 0.0 || (1e-5..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            if let Some(x) = num.as_f64() {
                *v = serde_json::Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// One JSON object on a single line, reals rounded.
pub fn json_line<T: Serialize>(item: &T) -> Result<String> {
    let mut v = serde_json::to_value(item).map_err(|e| Error::Internal(e.to_string()))?;
    round_value(&mut v);
    Ok(v.to_string())
}

/// Something that renders as one CSV row and one text line.
pub trait Record: Serialize {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
    fn text(&self) -> String;
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

impl Record for BoundReport {
    fn csv_header() -> &'static str {
        "bound_id,n,s_or_k,applicable,strict,lhs,rhs,margin,satisfied,tol"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.bound_id,
            self.params.n,
            opt(self.params.s_or_k()),
            self.applicable,
            self.is_strict(),
            fmt_real(self.lhs),
            fmt_real(self.rhs),
            fmt_real(self.margin),
            self.satisfied,
            fmt_real(self.tol)
        )
    }

    fn text(&self) -> String {
        let mut params = format!("n={}", self.params.n);
        for (name, value) in [("s", self.params.s), ("k", self.params.k), ("i", self.params.i), ("t", self.params.t)] {
            if let Some(v) = value {
                let _ = write!(params, " {name}={v}");
            }
        }
        if let Some(x) = &self.params.x {
            let list: Vec<String> = x.iter().map(|v| v.to_string()).collect();
            let _ = write!(params, " X={{{}}}", list.join(","));
        }
        let status = match (self.applicable, self.satisfied) {
            (false, _) => "n/a",
            (true, true) => "ok",
            (true, false) => "VIOLATED",
        };
        let op = if self.is_strict() { "<" } else { "<=" };
        let mut line = format!(
            "{:<26} {:<20} {} {op} {}  margin {}  {status}",
            self.bound_id.as_str(),
            params,
            fmt_real(self.lhs),
            fmt_real(self.rhs),
            fmt_real(self.margin)
        );
        if let Some(note) = self.note {
            let _ = write!(line, "  ({note})");
        }
        line
    }
}

impl Record for ExtremalRecord {
    fn csv_header() -> &'static str {
        "n,s,family,value,witness,method,exact,evaluations,seed"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.s,
            self.family,
            fmt_real(self.value),
            self.witness,
            self.method.as_str(),
            self.exact,
            self.evaluations,
            self.seed.map_or_else(String::new, |s| s.to_string())
        )
    }

    fn text(&self) -> String {
        let seed = self.seed.map_or_else(String::new, |s| format!(" seed={s}"));
        format!(
            "n={} s={} family={} value={} witness={} method={} exact={} evaluations={}{seed}",
            self.n,
            self.s,
            self.family,
            fmt_real(self.value),
            self.witness,
            self.method.as_str(),
            self.exact,
            self.evaluations
        )
    }
}

impl Record for RatioRow {
    fn csv_header() -> &'static str {
        "n,value,value_over_n,target,gap,method"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            fmt_real(self.value),
            fmt_real(self.value_over_n),
            fmt_real(self.target),
            fmt_real(self.gap),
            self.method.as_str()
        )
    }

    fn text(&self) -> String {
        format!(
            "{:>5}  {:>16}  {:>16}  {:>16}  {:>16}  {}",
            self.n,
            fmt_real(self.value),
            fmt_real(self.value_over_n),
            fmt_real(self.target),
            fmt_real(self.gap),
            self.method.as_str()
        )
    }
}

/// Spectra of a graph and its complement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub edges: usize,
    pub graph: Vec<f64>,
    pub complement: Vec<f64>,
}

impl SpectrumReport {
    pub fn new(pair: &SpectralPair) -> Self {
        SpectrumReport {
            n: pair.order(),
            edges: pair.edge_count(),
            graph: pair.graph().values().to_vec(),
            complement: pair.complement().values().to_vec(),
        }
    }

    fn join(values: &[f64]) -> String {
        values.iter().map(|&x| fmt_real(x)).collect::<Vec<_>>().join(", ")
    }
}

impl Record for SpectrumReport {
    fn csv_header() -> &'static str {
        "n,e,index,mu,mu_complement"
    }

    /// One line per eigenvalue index.
    fn csv_row(&self) -> String {
        let mut out = String::new();
        for (i, (a, b)) in self.graph.iter().zip(&self.complement).enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = write!(out, "{},{},{},{},{}", self.n, self.edges, i + 1, fmt_real(*a), fmt_real(*b));
        }
        out
    }

    fn text(&self) -> String {
        format!(
            "n = {}, e = {}\nG:  {}\nG': {}",
            self.n,
            self.edges,
            Self::join(&self.graph),
            Self::join(&self.complement)
        )
    }
}

/// Renders `items` in `format`, one record per line, with a trailing newline.
/// CSV always carries its header, even when `items` is empty.
pub fn render<T: Record>(items: &[T], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            for item in items {
                out.push_str(&json_line(item)?);
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(T::csv_header());
            out.push('\n');
            for item in items {
                out.push_str(&item.csv_row());
                out.push('\n');
            }
        }
        Format::Text => {
            for item in items {
                out.push_str(&item.text());
                out.push('\n');
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{check_nosal, run_battery};
    use crate::graph::{generate, GraphKind};

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0), 1.0);
        assert_eq!(round_sig(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round_sig(1e-17), 1e-17);
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(2.0000000000004), 2.0);
        assert_eq!(round_sig(1.23456789012345e10), 12345678901.2);
        assert_eq!(fmt_real(-1.0), "-1");
        assert_eq!(fmt_real(-1.925543058334e-16), "-1.92554305833e-16");
        assert_eq!(fmt_real(1e-8), "1e-8");
        assert_eq!(fmt_real(1e-5), "0.00001");
        assert_eq!(fmt_real(f64::NAN), "nan");
        assert_eq!(fmt_real((5f64.sqrt() + 1.0) / 2.0), "1.61803398875");
    }

    #[test]
    fn exact_ties_round_to_even() {
        // Integers are exact in binary, so these are true ties at digit 13.
        assert_eq!(round_sig(1000000000005.0), 1000000000000.0);
        assert_eq!(round_sig(1000000000015.0), 1000000000020.0);
        assert_eq!(round_sig(1234567890125.0), 1234567890120.0);
        assert_eq!(round_sig(1234567890135.0), 1234567890140.0);
    }

    #[test]
    fn json_rounds_and_nulls() {
        #[derive(Serialize)]
        struct T {
            a: f64,
            b: f64,
            c: usize,
            d: Vec<f64>,
        }
        let line = json_line(&T { a: 0.1 + 0.2, b: f64::INFINITY, c: 7, d: vec![-0.0, 1.0 / 3.0] }).unwrap();
        assert_eq!(line, r#"{"a":0.3,"b":null,"c":7,"d":[0.0,0.333333333333]}"#);
    }

    #[test]
    fn csv_header_is_fixed() {
        let g = generate(&GraphKind::Cycle(5), 0).unwrap();
        let pair = SpectralPair::new(&g).unwrap();
        let out = render(&check_nosal(&pair), Format::Csv).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "bound_id,n,s_or_k,applicable,strict,lhs,rhs,margin,satisfied,tol");
        assert!(lines.next().unwrap().starts_with("nosal-lower,5,,true,false,4,4,"));
        assert_eq!(render::<BoundReport>(&[], Format::Csv).unwrap().lines().count(), 1);
    }

    #[test]
    fn spectrum_text() {
        let g = generate(&GraphKind::Complete(4), 0).unwrap();
        let report = SpectrumReport::new(&SpectralPair::new(&g).unwrap());
        let text = render(std::slice::from_ref(&report), Format::Text).unwrap();
        assert_eq!(text, "n = 4, e = 6\nG:  3, -1, -1, -1\nG': 0, 0, 0, 0\n");
        let csv = render(&[report], Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert_eq!(csv.lines().nth(1).unwrap(), "4,6,1,3,0");
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = generate(&GraphKind::ErdosRenyi { n: 12, p: 0.4 }, 9).unwrap();
        let a = render(&run_battery(&g, 3).unwrap(), Format::Json).unwrap();
        let b = render(&run_battery(&g, 3).unwrap(), Format::Json).unwrap();
        assert_eq!(a, b);
        assert!(a.lines().all(|l| l.starts_with("{\"bound_id\":")));
    }
}
