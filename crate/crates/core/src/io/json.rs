use serde_json::{json, Map, Value};

use crate::error::{EtaError, Result};
use crate::polyring::{Monomial, Polynomial, Var};
use crate::quotient::BasisExpansion;
use crate::scalar::Scalar;

fn json_error(msg: impl Into<String>) -> EtaError {
    EtaError::Parse {
        pos: 0,
        msg: msg.into(),
    }
}

fn var_name(v: Var, k: u32) -> String {
    match v {
        Var::BTilde => format!("bt{k}"),
        Var::B(p) => format!("b{p}"),
        Var::T(i) => format!("t{i}"),
    }
}

fn parse_var(name: &str, k: u32) -> Result<Var> {
    let index = |s: &str| -> Result<u32> {
        s.parse::<u32>()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| json_error(format!("bad variable name {name:?}")))
    };
    if let Some(rest) = name.strip_prefix("bt") {
        if index(rest)? != k {
            return Err(json_error(format!("{name:?} does not match k={k}")));
        }
        Ok(Var::BTilde)
    } else if let Some(rest) = name.strip_prefix('b') {
        Ok(Var::B(index(rest)?))
    } else if let Some(rest) = name.strip_prefix('t') {
        Ok(Var::T(index(rest)?))
    } else {
        Err(json_error(format!("unknown variable {name:?}")))
    }
}

/// `{"terms":[{"coeff":"-2","vars":{"b3":1}}, …]}`, highest terms first.
pub fn to_json<C: Scalar>(f: &Polynomial<C>, k: u32) -> Value {
    let terms: Vec<Value> = f
        .sorted_terms(k)
        .into_iter()
        .map(|(m, c)| {
            let vars: Map<String, Value> = m.iter().map(|(v, e)| (var_name(v, k), json!(e))).collect();
            json!({ "coeff": c.to_string(), "vars": vars })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn from_json<C: Scalar>(value: &Value, k: u32) -> Result<Polynomial<C>> {
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| json_error("expected an object with a \"terms\" array"))?;
    let mut out = Polynomial::zero();
    for term in terms {
        let coeff = term
            .get("coeff")
            .and_then(Value::as_str)
            .and_then(C::parse_decimal)
            .ok_or_else(|| json_error(format!("bad coefficient in {term}")))?;
        let vars = term
            .get("vars")
            .and_then(Value::as_object)
            .ok_or_else(|| json_error(format!("missing \"vars\" in {term}")))?;
        let mut pairs = Vec::new();
        for (name, e) in vars {
            let e = e
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| json_error(format!("bad exponent for {name}")))?;
            pairs.push((parse_var(name, k)?, e));
        }
        out.add_term(Monomial::from_pairs(pairs), coeff);
    }
    Ok(out)
}

pub fn from_json_str<C: Scalar>(s: &str, k: u32) -> Result<Polynomial<C>> {
    let value: Value = serde_json::from_str(s).map_err(|e| EtaError::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    from_json(&value, k)
}

/// `[{"partition":"2,1:t1","coeff":{"terms":[…]}}, …]`.
pub fn expansion_to_json<C: Scalar>(e: &BasisExpansion<C>, k: u32) -> Value {
    Value::Array(
        e.iter()
            .map(|(lam, coeff)| json!({ "partition": lam.to_string(), "coeff": to_json(coeff, k) }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn round_trip() {
        let f = P::b(2) * P::btilde() - P::b(3).scale_i64(2) + P::t(1).pow(2) * P::t(3);
        let v = to_json(&f, 2);
        assert_eq!(from_json::<BigInt>(&v, 2).unwrap(), f);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(from_json_str::<BigInt>(&s, 2).unwrap(), f);
        assert!(from_json::<BigInt>(&v, 1).is_err());
        assert_eq!(to_json(&P::one(), 1), json!({"terms":[{"coeff":"1","vars":{}}]}));
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_json_str::<BigInt>("{\"terms\":[{\"coeff\":\"x\",\"vars\":{}}]}", 1).is_err());
        assert!(from_json_str::<BigInt>("{\"terms\":[{\"coeff\":\"1\",\"vars\":{\"q1\":1}}]}", 1).is_err());
        assert!(from_json_str::<BigInt>("[1,", 1).is_err());
    }
}
