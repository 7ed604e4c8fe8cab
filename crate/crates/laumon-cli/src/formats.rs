//! JSON encodings of patterns, vectors, characters and reports.
//!
//! Every object is a `serde_json::Value` whose maps are ordered by key, and
//! every list is emitted in the canonical order of the underlying type, so
//! the printed output is byte-for-byte reproducible.

use anyhow::{anyhow, bail, Context, Result};
use laumon_core::exactalg::{parse_scalar, CharPoly, Scalar};
use laumon_core::patterns::{AffinePattern, FinitePattern, Partition};
use laumon_core::rep::{Report, Vector};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPattern {
    Finite(FinitePattern),
    Affine(AffinePattern),
}

pub fn affine_json(p: &AffinePattern) -> Value {
    let lambdas: Vec<Vec<u32>> = p.lambdas().iter().map(|l| l.parts().to_vec()).collect();
    json!({"kind": "affine", "n": p.n(), "lambdas": lambdas, "degree": p.degree()})
}

pub fn finite_json(p: &FinitePattern) -> Value {
    json!({"kind": "finite", "n": p.n(), "rows": p.rows(), "degree": p.degree()})
}

fn u32_list(v: &Value) -> Result<Vec<u32>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected a list of integers"))?
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| anyhow!("expected a nonnegative integer, got {}", x))
        })
        .collect()
}

fn nested(v: &Value) -> Result<Vec<Vec<u32>>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected a list of lists"))?
        .iter()
        .map(u32_list)
        .collect()
}

/// Reads a pattern object. The kind defaults to affine; a bare list of
/// partitions is also accepted as an affine pattern.
pub fn parse_pattern(v: &Value) -> Result<AnyPattern> {
    if v.is_array() {
        return parse_affine_parts(&nested(v)?);
    }
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("affine");
    match kind {
        "affine" => {
            let parts = nested(
                v.get("lambdas")
                    .ok_or_else(|| anyhow!("affine pattern needs \"lambdas\""))?,
            )?;
            if let Some(n) = v.get("n").and_then(Value::as_u64) {
                if n as usize != parts.len() {
                    bail!("\"n\" = {} but {} partitions were given", n, parts.len());
                }
            }
            parse_affine_parts(&parts)
        }
        "finite" => {
            let rows = nested(
                v.get("rows")
                    .ok_or_else(|| anyhow!("finite pattern needs \"rows\""))?,
            )?;
            let n = v
                .get("n")
                .and_then(Value::as_u64)
                .map(|n| n as usize)
                .unwrap_or(rows.len() + 1);
            FinitePattern::from_rows(n, rows)
                .map(AnyPattern::Finite)
                .ok_or_else(|| anyhow!("rows do not form a finite pattern"))
        }
        other => bail!("unknown pattern kind {:?}", other),
    }
}

fn parse_affine_parts(parts: &[Vec<u32>]) -> Result<AnyPattern> {
    if parts.len() < 2 {
        bail!("an affine pattern needs at least two partitions");
    }
    let lambdas = parts
        .iter()
        .map(|p| Partition::new(p.clone()).ok_or_else(|| anyhow!("{:?} is not a partition", p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnyPattern::Affine(AffinePattern::new(lambdas)))
}

/// A state: a linear combination of basis vectors of one kind.
#[derive(Clone, Debug)]
pub enum State {
    Finite(Vector<FinitePattern>),
    Affine(Vector<AffinePattern>),
}

/// Reads `{"terms": [{"pattern": …, "coeff": "…"}]}` or a single pattern
/// (coefficient one).
pub fn parse_state(v: &Value) -> Result<State> {
    let terms: Vec<(AnyPattern, Scalar)> = match v.get("terms") {
        Some(ts) => {
            ts.as_array()
                .ok_or_else(|| anyhow!("\"terms\" must be a list"))?
                .iter()
                .map(|t| {
                    let p = parse_pattern(
                        t.get("pattern")
                            .ok_or_else(|| anyhow!("term without \"pattern\""))?,
                    )?;
                    let c = match t.get("coeff") {
                        None => Scalar::one(),
                        Some(Value::String(s)) => parse_scalar(s)
                            .map_err(|e| anyhow!("bad coefficient {:?}: {}", s, e))?,
                        Some(Value::Number(k)) => Scalar::from_int(
                            k.as_i64()
                                .ok_or_else(|| anyhow!("coefficient {} is not an integer", k))?,
                        ),
                        Some(other) => bail!("bad coefficient {}", other),
                    };
                    Ok((p, c))
                })
                .collect::<Result<_>>()?
        }
        None => vec![(parse_pattern(v)?, Scalar::one())],
    };
    let kind_of = |p: &AnyPattern| matches!(p, AnyPattern::Finite(_));
    let finite = terms.first().map(|(p, _)| kind_of(p)).unwrap_or(false);
    if terms.iter().any(|(p, _)| kind_of(p) != finite) {
        bail!("a state mixes finite and affine patterns");
    }
    Ok(if finite {
        State::Finite(Vector::from_terms(terms.into_iter().map(
            |(p, c)| match p {
                AnyPattern::Finite(f) => (f, c),
                AnyPattern::Affine(_) => unreachable!(),
            },
        )))
    } else {
        State::Affine(Vector::from_terms(terms.into_iter().map(
            |(p, c)| match p {
                AnyPattern::Affine(a) => (a, c),
                AnyPattern::Finite(_) => unreachable!(),
            },
        )))
    })
}

pub fn read_json_file(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid JSON", path))
}

pub fn state_json(s: &State) -> Value {
    let terms: Vec<Value> = match s {
        State::Finite(v) => v
            .terms()
            .map(|(p, c)| json!({"pattern": finite_json(p), "coeff": c.to_string()}))
            .collect(),
        State::Affine(v) => v
            .terms()
            .map(|(p, c)| json!({"pattern": affine_json(p), "coeff": c.to_string()}))
            .collect(),
    };
    json!({"terms": terms})
}

pub fn charpoly_json(c: &CharPoly) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .map(|(m, k)| json!({"t_exp": m.t, "q_exp_doubled": m.q2, "qp_exp": m.qp, "coeff": k.to_string()}))
        .collect();
    Value::Array(terms)
}

/// Weights of a character as strings, repeated by multiplicity.
pub fn weights_json(c: &CharPoly) -> Value {
    match c.to_weights() {
        Ok(ws) => {
            let mut out = Vec::new();
            for (w, m) in ws {
                for _ in 0..m {
                    out.push(Value::String(Scalar::from_lin(&w).to_string()));
                }
            }
            Value::Array(out)
        }
        Err(e) => json!({"error": e.to_string()}),
    }
}

/// Report summary with at most `max_failures` failing instances spelled out.
pub fn report_json(name: &str, params: Value, r: &Report, max_failures: usize) -> Value {
    let summary: serde_json::Map<String, Value> = r
        .summary()
        .into_iter()
        .map(|(k, (p, f))| (k, json!({"passed": p, "failed": f})))
        .collect();
    let failures: Vec<Value> = r
        .failures()
        .take(max_failures)
        .map(|i| json!({"relation": i.relation, "indices": i.indices, "basis": i.basis, "residual": i.residual}))
        .collect();
    json!({
        "suite": name,
        "params": params,
        "passed": r.passed(),
        "failed": r.failed(),
        "ok": r.all_passed(),
        "summary": summary,
        "failures": failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_round_trip() {
        let p = AffinePattern::from_parts(&[&[2, 1], &[], &[1]]).unwrap();
        assert_eq!(
            parse_pattern(&affine_json(&p)).unwrap(),
            AnyPattern::Affine(p)
        );
        let f = FinitePattern::from_rows(3, vec![vec![1], vec![1, 0]]).unwrap();
        assert_eq!(
            parse_pattern(&finite_json(&f)).unwrap(),
            AnyPattern::Finite(f)
        );
        assert!(parse_pattern(&json!({"lambdas": [[1, 2], []]})).is_err());
        assert!(parse_pattern(&json!({"kind": "other"})).is_err());
    }

    #[test]
    fn states() {
        let s = parse_state(&json!({"lambdas": [[], [], []]})).unwrap();
        let State::Affine(v) = &s else { panic!() };
        assert_eq!(v.len(), 1);
        let s = parse_state(&json!({"terms": [{"pattern": [[1], [], []], "coeff": "x1/h"}, {"pattern": [[], [], []], "coeff": 2}]}))
            .unwrap();
        let State::Affine(v) = &s else { panic!() };
        assert_eq!(v.len(), 2);
        assert!(parse_state(&json!({"terms": [{"pattern": [[], []], "coeff": "1/"}]})).is_err());
    }
}
