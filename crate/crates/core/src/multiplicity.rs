//! One entry point over every way of computing `M_j(i)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::guard::Guard;
use crate::paths::{enumerate_nonintersecting, p_spec, q_spec, r_spec};
use crate::schubert::{multiplicity_lw, multiplicity_rz, multiplicity_thm5, SchubertDatum};
use crate::tableaux::{count_arrays, shape_of};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Rosenthal–Zelevinsky determinant.
    Rz,
    /// Lakshmibai–Weyman determinant; `j = (1, ..., d)` only.
    Lw,
    /// Dual-path determinant.
    Thm5,
    EnumQ,
    /// `j = (1, ..., d)` only.
    EnumP,
    EnumR,
    EnumTableaux,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Rz,
        Method::Lw,
        Method::Thm5,
        Method::EnumQ,
        Method::EnumP,
        Method::EnumR,
        Method::EnumTableaux,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Rz => "rz",
            Method::Lw => "lw",
            Method::Thm5 => "thm5",
            Method::EnumQ => "enum_q",
            Method::EnumP => "enum_p",
            Method::EnumR => "enum_r",
            Method::EnumTableaux => "enum_tableaux",
        }
    }

    pub fn is_enumeration(self) -> bool {
        matches!(
            self,
            Method::EnumQ | Method::EnumP | Method::EnumR | Method::EnumTableaux
        )
    }

    pub fn needs_special_case(self) -> bool {
        matches!(self, Method::Lw | Method::EnumP)
    }

    pub fn applies_to(self, datum: &SchubertDatum) -> bool {
        !self.needs_special_case() || datum.is_special()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Computes the multiplicity with a single method.
pub fn evaluate(datum: &SchubertDatum, method: Method, guard: Guard) -> Result<BigInt, Error> {
    if !method.applies_to(datum) {
        return Err(Error::MethodInapplicable {
            method: method.name().to_string(),
            reason: "requires j = (1, ..., d)".to_string(),
        });
    }
    match method {
        Method::Rz => Ok(multiplicity_rz(datum)),
        Method::Lw => multiplicity_lw(datum),
        Method::Thm5 => Ok(multiplicity_thm5(datum)),
        Method::EnumQ => Ok(enumerate_nonintersecting(&q_spec(datum), guard)?.unsigned()),
        Method::EnumP => Ok(enumerate_nonintersecting(&p_spec(datum)?, guard)?.unsigned()),
        Method::EnumR => Ok(enumerate_nonintersecting(&r_spec(datum), guard)?.unsigned()),
        Method::EnumTableaux => {
            if datum.d() < 2 {
                return Ok(BigInt::one());
            }
            Ok(BigInt::from(count_arrays(&shape_of(datum)?, guard)?))
        }
    }
}

/// What happened to one method in a multi-method run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Value(BigInt),
    /// Enumeration refused by the guard.
    Skipped(String),
    NotApplicable,
}

impl Outcome {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

/// Runs each requested method. Guard trips on enumeration methods and
/// special-case-only methods on general data become non-fatal outcomes.
pub fn evaluate_methods(
    datum: &SchubertDatum,
    methods: &[Method],
    guard: Guard,
) -> Result<Vec<(Method, Outcome)>, Error> {
    methods
        .iter()
        .map(|&m| {
            let outcome = match evaluate(datum, m, guard) {
                Ok(v) => Outcome::Value(v),
                Err(Error::MethodInapplicable { .. }) => Outcome::NotApplicable,
                Err(e @ Error::GuardExceeded { .. }) if m.is_enumeration() => {
                    Outcome::Skipped(e.to_string())
                }
                Err(e) => return Err(e),
            };
            Ok((m, outcome))
        })
        .collect()
}

/// The common value of all computed outcomes, or `DisagreementDetected`
/// listing every value.
pub fn agreed_value(outcomes: &[(Method, Outcome)]) -> Result<Option<BigInt>, Error> {
    let values: Vec<(Method, &BigInt)> = outcomes
        .iter()
        .filter_map(|(m, o)| o.value().map(|v| (*m, v)))
        .collect();
    match values.split_first() {
        None => Ok(None),
        Some(((_, first), rest)) => {
            if rest.iter().all(|(_, v)| v == first) {
                Ok(Some((*first).clone()))
            } else {
                Err(Error::DisagreementDetected(
                    values
                        .iter()
                        .map(|(m, v)| (m.name().to_string(), v.to_string()))
                        .collect(),
                ))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Method),
    All,
}

/// The multiplicity by one method, or by every applicable method with a
/// pairwise agreement check.
pub fn multiplicity(
    datum: &SchubertDatum,
    selection: Selection,
    guard: Guard,
) -> Result<BigInt, Error> {
    match selection {
        Selection::One(m) => evaluate(datum, m, guard),
        Selection::All => {
            let outcomes = evaluate_methods(datum, &Method::ALL, guard)?;
            Ok(agreed_value(&outcomes)?.expect("closed-form methods always produce a value"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::validate;

    #[test]
    fn all_methods_on_the_cone() {
        let datum = validate(4, 2, &[2, 4], &[1, 2]).unwrap();
        assert_eq!(
            multiplicity(&datum, Selection::All, Guard::DEFAULT).unwrap(),
            BigInt::from(2)
        );
        for m in Method::ALL {
            assert_eq!(
                evaluate(&datum, m, Guard::DEFAULT).unwrap(),
                BigInt::from(2),
                "{m}"
            );
        }
    }

    #[test]
    fn one_dimensional_all() {
        let datum = validate(5, 1, &[4], &[2]).unwrap();
        assert_eq!(
            multiplicity(&datum, Selection::All, Guard::DEFAULT).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn inapplicable_and_skipped() {
        let datum = validate(4, 2, &[2, 4], &[2, 3]).unwrap();
        assert!(matches!(
            evaluate(&datum, Method::Lw, Guard::DEFAULT),
            Err(Error::MethodInapplicable { .. })
        ));
        let out = evaluate_methods(
            &datum,
            &[Method::Rz, Method::EnumP, Method::EnumQ],
            Guard(0),
        )
        .unwrap();
        assert_eq!(out[1].1, Outcome::NotApplicable);
        assert!(matches!(out[2].1, Outcome::Skipped(_)));
    }

    #[test]
    fn disagreement_lists_values() {
        let outcomes = vec![
            (Method::Rz, Outcome::Value(BigInt::from(2))),
            (Method::Thm5, Outcome::Value(BigInt::from(0))),
        ];
        match agreed_value(&outcomes) {
            Err(Error::DisagreementDetected(v)) => {
                assert_eq!(
                    v,
                    vec![("rz".into(), "2".into()), ("thm5".into(), "0".into())]
                )
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn method_names_parse() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("bogus".parse::<Method>().is_err());
    }
}
