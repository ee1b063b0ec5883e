//! JSON encodings of weights, characters, oracle reports, injective
//! descriptors and construction results.
//!
//! Integers are emitted as JSON numbers of arbitrary length; the only
//! exception is the end-algebra dimension, which is a decimal string.
//! Every `*_to_json` has a matching `*_from_json` that restores a
//! structurally equal value.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::character::Character;
use crate::error::{Error, Result};
use crate::injective::{AdmissibleIndex, EndAlgebra, InjectiveDescriptor, TruncatedPolyAlgebra};
use crate::oracle::{Failure, OracleReport};
use crate::planner::{ConstructionResult, LevelZero, Regime};
use crate::weight::{DominantWeight, Weight};

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal integer"))
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(&format!("missing field {key:?}")))
}

fn big_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad("integer expected")),
        Value::String(s) => s.parse().map_err(|_| bad("integer string expected")),
        _ => Err(bad("integer expected")),
    }
}

fn u64_from(v: &Value) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad("unsigned integer expected"))
}

fn str_from<'a>(v: &'a Value) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad("string expected"))
}

pub fn weight_to_json(w: &Weight) -> Value {
    Value::Array(w.entries().iter().map(num).collect())
}

pub fn weight_from_json(v: &Value) -> Result<Weight> {
    let arr = v.as_array().ok_or_else(|| bad("weight must be an array"))?;
    Weight::new(arr.iter().map(big_from).collect::<Result<_>>()?)
}

fn dominant_from_json(v: &Value) -> Result<DominantWeight> {
    DominantWeight::try_from(weight_from_json(v)?)
}

/// `{"rank": n, "terms": [{"weight": [...], "mult": m}, ...]}`, terms in canonical order.
pub fn character_to_json(x: &Character) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| json!({ "weight": weight_to_json(w), "mult": num(c) }))
        .collect();
    json!({ "rank": x.rank(), "terms": terms })
}

pub fn character_from_json(v: &Value) -> Result<Character> {
    let rank = u64_from(field(v, "rank")?)? as usize;
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| bad("terms must be an array"))?
        .iter()
        .map(|t| Ok((weight_from_json(field(t, "weight")?)?, big_from(field(t, "mult")?)?)))
        .collect::<Result<Vec<_>>>()?;
    Character::from_terms(rank, terms)
}

/// `{"identity": name, "checked": k, "failures": [{"inputs", "expected", "got"}, ...]}`
pub fn report_to_json(r: &OracleReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({ "inputs": f.inputs, "expected": f.expected, "got": f.got }))
        .collect();
    json!({ "identity": r.identity, "checked": r.checked, "failures": failures })
}

pub fn report_from_json(v: &Value) -> Result<OracleReport> {
    let failures = field(v, "failures")?
        .as_array()
        .ok_or_else(|| bad("failures must be an array"))?
        .iter()
        .map(|f| {
            Ok(Failure {
                inputs: str_from(field(f, "inputs")?)?.to_string(),
                expected: str_from(field(f, "expected")?)?.to_string(),
                got: str_from(field(f, "got")?)?.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleReport {
        identity: str_from(field(v, "identity")?)?.to_string(),
        checked: u64_from(field(v, "checked")?)?,
        failures,
    })
}

/// `{"generators": s, "cap": n, "dimension": "n^s"}`; opaque algebras carry
/// null generators and cap.
pub fn end_algebra_to_json(a: &EndAlgebra) -> Value {
    match a {
        EndAlgebra::Truncated(t) => json!({
            "generators": t.generators(),
            "cap": t.cap(),
            "dimension": t.dimension().to_string(),
        }),
        EndAlgebra::Opaque { dimension } => json!({
            "generators": Value::Null,
            "cap": Value::Null,
            "dimension": dimension.to_string(),
        }),
    }
}

pub fn end_algebra_from_json(v: &Value) -> Result<EndAlgebra> {
    match field(v, "generators")? {
        Value::Null => Ok(EndAlgebra::Opaque {
            dimension: big_from(field(v, "dimension")?)?,
        }),
        g => {
            let generators = u32::try_from(u64_from(g)?).map_err(|_| bad("generator count"))?;
            let cap = u64_from(field(v, "cap")?)? as usize;
            Ok(EndAlgebra::Truncated(TruncatedPolyAlgebra::new(generators, cap)?))
        }
    }
}

fn index_to_json(ix: Option<AdmissibleIndex>) -> Value {
    match ix {
        Some(ix) => json!({ "value": ix.value, "exact": ix.exact }),
        None => Value::Null,
    }
}

fn index_from_json(v: &Value) -> Result<Option<AdmissibleIndex>> {
    if v.is_null() {
        return Ok(None);
    }
    Ok(Some(AdmissibleIndex {
        value: u32::try_from(u64_from(field(v, "value")?)?).map_err(|_| bad("index value"))?,
        exact: field(v, "exact")?.as_bool().ok_or_else(|| bad("exact must be a boolean"))?,
    }))
}

/// `{"socle_weight", "character"?, "end_algebra", "index"}`
pub fn descriptor_to_json(d: &InjectiveDescriptor, include_character: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("socle_weight".into(), weight_to_json(d.socle_weight()));
    if include_character {
        if let Some(ch) = d.character() {
            obj.insert("character".into(), character_to_json(ch));
        }
    }
    obj.insert("end_algebra".into(), end_algebra_to_json(d.end_algebra()));
    obj.insert("index".into(), index_to_json(d.index()));
    Value::Object(obj)
}

pub fn descriptor_from_json(v: &Value) -> Result<InjectiveDescriptor> {
    let character = v.get("character").map(character_from_json).transpose()?;
    InjectiveDescriptor::new(
        dominant_from_json(field(v, "socle_weight")?)?,
        character,
        end_algebra_from_json(field(v, "end_algebra")?)?,
        index_from_json(field(v, "index")?)?,
    )
}

/// The construction record. The injective descriptor is flattened: its socle
/// is `mu`, and `end_algebra`, `index` and the optional `character` sit at
/// top level.
pub fn construction_to_json(res: &ConstructionResult, include_character: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("regime".into(), json!(res.regime.to_string()));
    obj.insert("n".into(), json!(res.n));
    obj.insert("p".into(), json!(res.p));
    obj.insert("m".into(), json!(res.m));
    obj.insert("P".into(), num(&res.modulus));
    if let Some(l) = res.l {
        obj.insert("l".into(), json!(l));
    }
    obj.insert("h".into(), json!(res.h));
    obj.insert("r".into(), num(&res.r));
    obj.insert("digits".into(), Value::Array(res.digits.iter().map(num).collect()));
    if let Some(lz) = &res.level_zero {
        obj.insert(
            "level_zero".into(),
            json!({
                "u_minus_1": num(&lz.digit),
                "lambda_minus_1": weight_to_json(&lz.factor),
                "s": num(&lz.s),
            }),
        );
    }
    obj.insert(
        "lambda_factors".into(),
        Value::Array(res.lambda_factors.iter().map(|w| weight_to_json(w)).collect()),
    );
    obj.insert("gamma".into(), weight_to_json(&res.gamma));
    obj.insert("mu".into(), weight_to_json(&res.mu));
    obj.insert("end_algebra".into(), end_algebra_to_json(res.descriptor.end_algebra()));
    obj.insert("index".into(), index_to_json(res.descriptor.index()));
    if include_character {
        if let Some(ch) = res.descriptor.character() {
            obj.insert("character".into(), character_to_json(ch));
        }
    }
    obj.insert("repdim_lower_bound".into(), json!(res.repdim_lower_bound));
    Value::Object(obj)
}

pub fn construction_from_json(v: &Value) -> Result<ConstructionResult> {
    let regime = match str_from(field(v, "regime")?)? {
        "classical" => Regime::Classical,
        "quantum" => Regime::Quantum,
        other => return Err(bad(&format!("unknown regime {other:?}"))),
    };
    let small = |key: &str| -> Result<u32> {
        u32::try_from(u64_from(field(v, key)?)?).map_err(|_| bad(key))
    };
    let level_zero = v
        .get("level_zero")
        .map(|lz| -> Result<LevelZero> {
            Ok(LevelZero {
                digit: big_from(field(lz, "u_minus_1")?)?,
                factor: dominant_from_json(field(lz, "lambda_minus_1")?)?,
                s: big_from(field(lz, "s")?)?,
            })
        })
        .transpose()?;
    let mu = dominant_from_json(field(v, "mu")?)?;
    let descriptor = InjectiveDescriptor::new(
        mu.clone(),
        v.get("character").map(character_from_json).transpose()?,
        end_algebra_from_json(field(v, "end_algebra")?)?,
        index_from_json(field(v, "index")?)?,
    )?;
    Ok(ConstructionResult {
        regime,
        n: u64_from(field(v, "n")?)? as usize,
        p: u64_from(field(v, "p")?)?,
        m: small("m")?,
        modulus: big_from(field(v, "P")?)?,
        l: v.get("l").map(u64_from).transpose()?,
        h: small("h")?,
        r: big_from(field(v, "r")?)?,
        digits: field(v, "digits")?
            .as_array()
            .ok_or_else(|| bad("digits must be an array"))?
            .iter()
            .map(big_from)
            .collect::<Result<_>>()?,
        level_zero,
        lambda_factors: field(v, "lambda_factors")?
            .as_array()
            .ok_or_else(|| bad("lambda_factors must be an array"))?
            .iter()
            .map(dominant_from_json)
            .collect::<Result<_>>()?,
        gamma: dominant_from_json(field(v, "gamma")?)?,
        mu,
        descriptor,
        repdim_lower_bound: small("repdim_lower_bound")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::weyl_character;
    use crate::planner::{construct_classical, construct_quantum, ClassicalParams, QuantumParams};

    #[test]
    fn weight_is_plain_array() {
        let w = Weight::from_ints([8, -4]);
        assert_eq!(weight_to_json(&w).to_string(), "[8,-4]");
        let huge: Weight = "(123456789012345678901234567890,0)".parse().unwrap();
        let v = weight_to_json(&huge);
        assert_eq!(v.to_string(), "[123456789012345678901234567890,0]");
        assert_eq!(weight_from_json(&v).unwrap(), huge);
    }

    #[test]
    fn character_schema() {
        let x = weyl_character(&Weight::from_ints([1, 0]));
        assert_eq!(
            character_to_json(&x).to_string(),
            r#"{"rank":2,"terms":[{"mult":1,"weight":[0,1]},{"mult":1,"weight":[1,0]}]}"#
        );
        assert_eq!(character_from_json(&character_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn construction_round_trip() {
        let res = construct_classical(&ClassicalParams::new(2, 3, 1, 2, 12), true).unwrap();
        let v = construction_to_json(&res, true);
        assert_eq!(v["mu"].to_string(), "[8,4]");
        assert_eq!(v["end_algebra"]["dimension"], "4");
        assert_eq!(v["repdim_lower_bound"], 3);
        assert_eq!(construction_from_json(&v).unwrap(), res);

        let q = construct_quantum(&QuantumParams::new(2, 3, 1, 2, 1, 29), false).unwrap();
        let v = construction_to_json(&q, false);
        assert_eq!(v["l"], 2);
        assert_eq!(construction_from_json(&v).unwrap(), q);
    }

    #[test]
    fn descriptor_round_trip_without_character() {
        let d = crate::injective::steinberg_tilting(3, 5, &DominantWeight::from_ints([2, 1, 0])).unwrap();
        let v = descriptor_to_json(&d, false);
        assert!(v.get("character").is_none());
        assert_eq!(v["end_algebra"]["generators"], Value::Null);
        assert_eq!(descriptor_from_json(&v).unwrap(), d.clone().without_character());
        assert_eq!(descriptor_from_json(&descriptor_to_json(&d, true)).unwrap(), d);
    }

    #[test]
    fn rejects_garbage() {
        assert!(weight_from_json(&json!([])).is_err());
        assert!(weight_from_json(&json!(["x"])).is_err());
        assert!(character_from_json(&json!({"rank": 2})).is_err());
        assert!(construction_from_json(&json!({"regime": "other"})).is_err());
    }
}
