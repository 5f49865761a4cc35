//! JSON form of a [`CoeffRecord`]:
//!
//! ```text
//! {"k":2,"kappa":[1],"lambda":[3,2],"mu":[1],"nu":[3,2],
//!  "c":{"0":"2","1":"5",...},"C":{"-4":"2",...},"method":"tableau"}
//! ```
//!
//! Polynomials are objects from exponent to decimal coefficient string,
//! written in increasing exponent order.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use lrq_core::{CoeffKey, CoeffRecord, LaurentPoly, Method, Partition};

struct Poly<'a>(&'a LaurentPoly);

impl Serialize for Poly<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.num_terms()))?;
        for (e, c) in self.0.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

struct OwnedPoly(LaurentPoly);

impl<'de> Deserialize<'de> for OwnedPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = OwnedPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object from exponents to integer strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<OwnedPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((e, c)) = map.next_entry::<String, String>()? {
                    let exp: i64 = e.parse().map_err(|_| de::Error::custom(format!("bad exponent {e:?}")))?;
                    let coeff: BigInt = c.parse().map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
                    if coeff == BigInt::from(0) {
                        return Err(de::Error::custom(format!("zero coefficient at exponent {exp}")));
                    }
                    if p.coeff(exp) != BigInt::from(0) {
                        return Err(de::Error::custom(format!("repeated exponent {exp}")));
                    }
                    p.add_term(exp, coeff);
                }
                Ok(OwnedPoly(p))
            }
        }

        d.deserialize_map(PolyVisitor)
    }
}

#[derive(Serialize)]
struct RecordOut<'a> {
    k: usize,
    kappa: &'a [usize],
    lambda: &'a [usize],
    mu: &'a [usize],
    nu: &'a [usize],
    c: Poly<'a>,
    #[serde(rename = "C")]
    big_c: Poly<'a>,
    method: &'static str,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordIn {
    k: usize,
    kappa: Vec<usize>,
    lambda: Vec<usize>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    c: OwnedPoly,
    #[serde(rename = "C")]
    big_c: OwnedPoly,
    method: String,
}

/// One-line JSON for `record`.
pub fn render(record: &CoeffRecord) -> String {
    let key = &record.key;
    let out = RecordOut {
        k: key.k,
        kappa: key.kappa.parts(),
        lambda: key.lambda.parts(),
        mu: key.mu.parts(),
        nu: key.nu.parts(),
        c: Poly(&record.little_c),
        big_c: Poly(&record.big_c),
        method: record.method.as_str(),
    };
    serde_json::to_string(&out).expect("records always serialize")
}

/// Parses and validates a record, including the consistency of `C` with `c`.
pub fn parse(line: &str) -> Result<CoeffRecord, String> {
    let raw: RecordIn = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let part = |v: Vec<usize>| Partition::new(v).map_err(|e| e.to_string());
    let key = CoeffKey::new(raw.k, part(raw.kappa)?, part(raw.lambda)?, part(raw.mu)?, part(raw.nu)?)
        .map_err(|e| e.to_string())?;
    let method: Method = raw.method.parse().map_err(|_| format!("unknown method {:?}", raw.method))?;
    let record = CoeffRecord { key, little_c: raw.c.0, big_c: raw.big_c.0, method };
    if !record.is_consistent() {
        return Err(format!("C does not match c for {}", record.key));
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lrq_core::lr::{compute_record, CoeffKey};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn golden_record() {
        let key = CoeffKey::new(2, p("1"), p("3,2"), p("1"), p("3,2")).unwrap();
        let record = compute_record(&key, Method::Tableau).unwrap();
        let text = render(&record);
        assert_eq!(
            text,
            r#"{"k":2,"kappa":[1],"lambda":[3,2],"mu":[1],"nu":[3,2],"c":{"0":"2","1":"5","2":"7","3":"5","4":"2"},"C":{"-4":"2","-2":"5","0":"7","2":"5","4":"2"},"method":"tableau"}"#
        );
        assert_eq!(parse(&text).unwrap(), record);
    }

    #[test]
    fn rejects_inconsistent_or_malformed() {
        let bad_c = r#"{"k":1,"kappa":[],"lambda":[1],"mu":[],"nu":[1],"c":{"0":"1"},"C":{"0":"2"},"method":"tableau"}"#;
        assert!(parse(bad_c).is_err());
        let zero = r#"{"k":1,"kappa":[],"lambda":[1],"mu":[],"nu":[1],"c":{"0":"0"},"C":{},"method":"tableau"}"#;
        assert!(parse(zero).is_err());
        let not_partition = r#"{"k":1,"kappa":[],"lambda":[1,2],"mu":[],"nu":[1],"c":{},"C":{},"method":"tableau"}"#;
        assert!(parse(not_partition).is_err());
        let k_zero = r#"{"k":0,"kappa":[],"lambda":[],"mu":[],"nu":[],"c":{},"C":{},"method":"tableau"}"#;
        assert!(parse(k_zero).is_err());
        assert!(parse("{").is_err());
    }
}
