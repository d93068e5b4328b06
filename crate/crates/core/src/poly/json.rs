//! JSON form: `[{"z": 0, "x": 6, "y": 0, "coeff_q": [1]}, ...]`, terms in
//! canonical order, `coeff_q` ascending. Integers are written at full
//! precision.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use super::qpoly::QPoly;
use super::wpoly::{Monomial, WPoly};
use crate::error::{Error, Result};

pub fn bigint_to_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::InvalidInput(format!("expected an integer, got {v}"))),
    };
    BigInt::from_str(&text).map_err(|_| Error::InvalidInput(format!("expected an integer, got {text}")))
}

impl QPoly {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(bigint_to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<QPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("coefficient list must be an array".into()))?;
        Ok(QPoly::from_coeffs(arr.iter().map(bigint_from_json).collect::<Result<_>>()?))
    }
}

impl WPoly {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| json!({"z": m.z, "x": m.x, "y": m.y, "coeff_q": c.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<WPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("polynomial JSON must be an array of terms".into()))?;
        let mut w = WPoly::zero();
        for t in arr {
            let exp = |name: &str| -> Result<u32> {
                match t.get(name) {
                    None => Ok(0),
                    Some(v) => v
                        .as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| Error::InvalidInput(format!("bad exponent for {name}"))),
                }
            };
            let coeff = t
                .get("coeff_q")
                .ok_or_else(|| Error::InvalidInput("term without coeff_q".into()))?;
            w.add_term(Monomial::new(exp("z")?, exp("x")?, exp("y")?), QPoly::from_json(coeff)?);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_big_integers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut w = WPoly::parse("x^2 + (q-1)*y^2*z").unwrap();
        w.add_term(Monomial::new(0, 1, 1), QPoly::constant(big.clone()));
        let text = serde_json::to_string(&w.to_json()).unwrap();
        assert!(text.contains("123456789012345678901234567890"));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(WPoly::from_json(&back).unwrap(), w);
    }

    #[test]
    fn json_layout() {
        let w = WPoly::parse("x^3 + (q-1)*y^3").unwrap();
        assert_eq!(
            serde_json::to_string(&w.to_json()).unwrap(),
            r#"[{"z":0,"x":3,"y":0,"coeff_q":[1]},{"z":0,"x":0,"y":3,"coeff_q":[-1,1]}]"#
        );
    }
}
