//! Serializable form of a computed symmetric function.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Partition,
    /// Always written as `p/q`.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComputationResult {
    pub input: String,
    pub method: String,
    pub basis: String,
    pub terms: Vec<Term>,
    pub millis: f64,
}

impl ComputationResult {
    pub fn new(input: &str, method: &str, f: &SymFunc, millis: f64) -> Self {
        let terms = f
            .sorted_terms()
            .into_iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                coeff: format!("{}/{}", c.numer(), c.denom()),
            })
            .collect();
        ComputationResult {
            input: input.to_string(),
            method: method.to_string(),
            basis: f.basis().letter().to_string(),
            terms,
            millis,
        }
    }

    /// Rebuilds the symmetric function from the stored terms.
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let basis: Basis = self.basis.parse()?;
        let mut f = SymFunc::zero(basis);
        for t in &self.terms {
            f.add_term(t.partition.clone(), parse_rational(&t.coeff)?);
        }
        Ok(f)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::parse(0, format!("bad coefficient `{s}`"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::ratio;

    #[test]
    fn json_round_trip() {
        let f = &SymFunc::s(partition![2, 1]) - &SymFunc::term(Basis::Schur, partition![], ratio(3, 4));
        let r = ComputationResult::new("s[2,1] - 3/4", "auto", &f, 0.5);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""coeff":"-3/4""#));
        assert!(text.contains(r#""partition":[2,1]"#));
        let back: ComputationResult = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_symfunc().unwrap(), f);
    }
}
