//! Text, CSV and JSON renderings.

use std::io::{self, Write};
use std::str::FromStr;

use combi_core::{ExactPoly, Var};
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

pub fn int_value(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

/// One JSON object per line: `{"object": ..., "stats": {...}}`.
pub fn emit_jsonl<W, I>(out: &mut W, items: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = (String, Option<Map<String, Value>>)>,
{
    for (object, stats) in items {
        let mut line = Map::new();
        line.insert("object".into(), Value::String(object));
        if let Some(stats) = stats {
            line.insert("stats".into(), Value::Object(stats));
        }
        writeln!(out, "{}", Value::Object(line))?;
    }
    Ok(())
}

/// Terms as `[{"x": 1, "q": 2, "coeff": 4}, ...]` in display order.
pub fn poly_json(p: &ExactPoly, vars: &[Var]) -> Value {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let mut t = Map::new();
            for &v in vars {
                t.insert(v.name().into(), Value::from(m.exp(v)));
            }
            t.insert("coeff".into(), int_value(c));
            Value::Object(t)
        })
        .collect();
    Value::Array(terms)
}

/// `n,c_0,c_1,...,c_d` for a polynomial in `x` alone.
pub fn univariate_csv_row(n: u32, p: &ExactPoly) -> String {
    let coeffs = p.univariate(Var::X).unwrap_or_default();
    let cells: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    if cells.is_empty() {
        format!("{n},0")
    } else {
        format!("{n},{}", cells.join(","))
    }
}

/// Header line for a multivariate table.
pub fn multivariate_csv_header(vars: &[Var]) -> String {
    let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
    format!("n,{},coeff", names.join(","))
}

/// One `n,e_1,...,e_k,coeff` line per term.
pub fn multivariate_csv_rows(n: u32, p: &ExactPoly, vars: &[Var]) -> Vec<String> {
    p.terms()
        .map(|(m, c)| {
            let exps: Vec<String> = vars.iter().map(|&v| m.exp(v).to_string()).collect();
            format!("{n},{},{c}", exps.join(","))
        })
        .collect()
}
