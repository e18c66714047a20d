use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyError, Polynomial, Rational};

/// Wire form: `{"coeffs": [["num","den"], ...]}`, ascending by degree, with
/// integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<[String; 2]>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson { coeffs: p.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect() }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = PolyError;

    fn try_from(j: PolynomialJson) -> Result<Self, PolyError> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for [n, d] in &j.coeffs {
            let num = BigInt::from_str(n).map_err(|_| PolyError::Json(format!("bad numerator {n:?}")))?;
            let den = BigInt::from_str(d).map_err(|_| PolyError::Json(format!("bad denominator {d:?}")))?;
            if den.is_zero() {
                return Err(PolyError::Json("zero denominator".into()));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(d)?;
        Polynomial::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn power(k: usize, braces: bool) -> String {
    match k {
        0 => String::new(),
        1 => "t".to_string(),
        k if braces && k >= 10 => format!("t^{{{k}}}"),
        k => format!("t^{k}"),
    }
}

fn terms(p: &Polynomial) -> impl Iterator<Item = (usize, &Rational)> {
    p.coeffs().iter().enumerate().rev().filter(|(_, c)| !c.is_zero())
}

/// Human-readable form, highest degree first: `61t^6 + 183t^5 - 1/30 t`.
pub(crate) fn plain(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms(p).enumerate() {
        let abs = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = power(k, false);
        if k == 0 {
            out.push_str(&rational_to_string(&abs));
        } else if abs.is_one() {
            out.push_str(&var);
        } else if abs.is_integer() {
            out.push_str(&format!("{}{var}", abs.numer()));
        } else {
            out.push_str(&format!("{} {var}", rational_to_string(&abs)));
        }
    }
    out
}

/// LaTeX form: `\tfrac{5}{24}t^4 + \tfrac{5}{12}t^3 + \cdots`.
pub(crate) fn latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms(p).enumerate() {
        let abs = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = power(k, true);
        let coeff = if abs.is_integer() {
            if abs.is_one() && k > 0 {
                String::new()
            } else {
                abs.numer().to_string()
            }
        } else {
            format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        out.push_str(&coeff);
        out.push_str(&var);
    }
    out
}

impl Polynomial {
    pub fn to_latex(&self) -> String {
        latex(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Self, PolyError> {
        let j: PolynomialJson = serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))?;
        Polynomial::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn quartic() -> Polynomial {
        Polynomial::new(vec![rat(0, 1), rat(1, 12), rat(7, 24), rat(5, 12), rat(5, 24)])
    }

    #[test]
    fn plain_and_latex() {
        assert_eq!(quartic().to_string(), "5/24 t^4 + 5/12 t^3 + 7/24 t^2 + 1/12 t");
        assert_eq!(quartic().to_latex(), "\\tfrac{5}{24}t^4 + \\tfrac{5}{12}t^3 + \\tfrac{7}{24}t^2 + \\tfrac{1}{12}t");
        let p = Polynomial::from_integers([0, -12, 0, 1]);
        assert_eq!(p.to_string(), "t^3 - 12t");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_integers([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2]).to_latex(), "2t^{10} + 1");
    }

    #[test]
    fn json_shape() {
        let p = Polynomial::new(vec![rat(0, 1), rat(-1, 30), rat(1, 5)]);
        assert_eq!(p.to_json(), r#"{"coeffs":[["0","1"],["-1","30"],["1","5"]]}"#);
        assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn json_rejects_garbage() {
        assert!(Polynomial::from_json(r#"{"coeffs":[["x","1"]]}"#).is_err());
        assert!(Polynomial::from_json(r#"{"coeffs":[["1","0"]]}"#).is_err());
        // Unreduced input is canonicalised.
        let p = Polynomial::from_json(r#"{"coeffs":[["2","4"]]}"#).unwrap();
        assert_eq!(p.coeff(0), rat(1, 2));
    }
}
