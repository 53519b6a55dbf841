//! Structural JSON for polynomials and rational functions:
//!
//! ```json
//! {"num": [{"coeff": "-1", "monomial": [[1,1],[3,1],[4,1]]}],
//!  "den": [{"coeff": "1", "monomial": [[1,1]]}, {"coeff": "1", "monomial": []}]}
//! ```
//!
//! Terms are listed in descending graded-lex order.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Polynomial, Rational, RationalFunction};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: Rational,
    monomial: Vec<(u32, u32)>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(m, c)| TermRepr {
                coeff: c.clone(),
                monomial: m.pairs().to_vec(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        if terms.iter().any(|t| t.monomial.iter().any(|&(v, _)| v == 0)) {
            return Err(D::Error::custom("variables are 1-based"));
        }
        Ok(Polynomial::from_terms(
            terms.into_iter().map(|t| (Monomial::from_pairs(t.monomial), t.coeff)),
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct FunctionRepr {
    num: Polynomial,
    den: Polynomial,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FunctionRepr {
            num: self.numer().clone(),
            den: self.denom().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = FunctionRepr::deserialize(deserializer)?;
        RationalFunction::new(r.num, r.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_expression;
    use super::*;

    #[test]
    fn shape_of_json() {
        let f = parse_expression("-z1*z3*z4/(1 + z1 + z4)").unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"{"num":[{"coeff":"-1","monomial":[[1,1],[3,1],[4,1]]}],"den":[{"coeff":"1","monomial":[[1,1]]},{"coeff":"1","monomial":[[4,1]]},{"coeff":"1","monomial":[]}]}"#
        );
        let back: RationalFunction = serde_json::from_str(&j).unwrap();
        assert!(back.same_representation(&f));
    }

    #[test]
    fn rejects_zero_denominator() {
        let j = r#"{"num":[{"coeff":"1","monomial":[]}],"den":[]}"#;
        assert!(serde_json::from_str::<RationalFunction>(j).is_err());
    }
}
