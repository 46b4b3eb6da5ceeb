use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::Signature;
use crate::exact::rational::serde_exact;
use crate::exact::{backward_identity, int, parse_rational, ratio, RMatrix, Rational};
use crate::patterns::StaircaseType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixtureId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl FixtureId {
    pub const ALL: [FixtureId; 6] =
        [FixtureId::A1, FixtureId::A2, FixtureId::A3, FixtureId::A4, FixtureId::A5, FixtureId::A6];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureId::A1 => "A1",
            FixtureId::A2 => "A2",
            FixtureId::A3 => "A3",
            FixtureId::A4 => "A4",
            FixtureId::A5 => "A5",
            FixtureId::A6 => "A6",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification facts a fixture is known to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedFacts {
    pub is_sr: bool,
    pub is_assr: bool,
    pub staircase: StaircaseType,
    pub signature: Signature,
    pub irreducible: bool,
}

/// Known combined matrix: exact, or a printed table of rounded values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpectedCombined {
    Exact { matrix: RMatrix },
    /// Entries are `table * 10^scale_exponent`; each nonzero entry is
    /// expected within relative tolerance `rel_tol`, zeros exactly.
    Rounded {
        scale_exponent: i32,
        table: RMatrix,
        #[serde(with = "serde_exact")]
        rel_tol: Rational,
    },
}

impl ExpectedCombined {
    /// Printed table multiplied out by its scale factor.
    pub fn reference(&self) -> RMatrix {
        match self {
            ExpectedCombined::Exact { matrix } => matrix.clone(),
            ExpectedCombined::Rounded { scale_exponent, table, .. } => {
                let factor = if *scale_exponent >= 0 {
                    Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(10), *scale_exponent as usize))
                } else {
                    Rational::new(
                        1.into(),
                        num_traits::pow(num_bigint::BigInt::from(10), (-*scale_exponent) as usize),
                    )
                };
                table.map(|v| v * &factor)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub id: FixtureId,
    pub matrix: RMatrix,
    pub expected: ExpectedFacts,
    pub combined: ExpectedCombined,
}

fn parse_rows(rows: &[&[&str]]) -> RMatrix {
    RMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| parse_rational(s).expect("fixture literal")).collect())
            .collect(),
    )
    .expect("fixture is square")
}

fn ints<const N: usize>(rows: [[i64; N]; N]) -> RMatrix {
    RMatrix::from_integers(&rows).expect("fixture is square")
}

fn facts(is_assr: bool, staircase: StaircaseType, signs: &[i8], irreducible: bool) -> ExpectedFacts {
    ExpectedFacts { is_sr: true, is_assr, staircase, signature: Signature::from_signs(signs), irreducible }
}

pub fn a1() -> RMatrix {
    ints([[-1, -3, -5], [-1, -6, -10], [-1, -15, -29]])
}

/// Entry (4,6) is -60; with -36 there the matrix is not even sign regular.
pub fn a2() -> RMatrix {
    ints([
        [-1, -2, 0, 0, 0, 0],
        [-4, -10, -6, -8, 0, 0],
        [0, -10, -33, -46, -9, -6],
        [0, -16, -60, -92, -60, -60],
        [0, -2, -21, -70, -242, -443],
        [0, 0, 0, -36, -316, -2823],
    ])
}

pub fn a3() -> RMatrix {
    ints([[-1, -2, 0], [-1, -3, 0], [-1, -4, -5]])
}

pub fn a4() -> RMatrix {
    ints([[1, 2, 0], [2, 4, 3], [2, 5, 8]])
}

pub fn a5() -> RMatrix {
    parse_rows(&[&["-0.00001", "-1", "-1"], &["-2", "-5", "-2"], &["-3", "-1", "0"]])
}

pub fn a6() -> RMatrix {
    ints([[-260, -100, -71, 0], [-179, -70, -51, -10], [-10, -4, -3, -1], [0, -1, -1, -1]])
}

pub fn fixture_matrix(id: FixtureId) -> RMatrix {
    match id {
        FixtureId::A1 => a1(),
        FixtureId::A2 => a2(),
        FixtureId::A3 => a3(),
        FixtureId::A4 => a4(),
        FixtureId::A5 => a5(),
        FixtureId::A6 => a6(),
    }
}

pub fn fixture(id: FixtureId) -> Fixture {
    use StaircaseType::*;
    let (expected, combined) = match id {
        FixtureId::A1 => (
            facts(false, Both, &[-1, 1, -1], true),
            ExpectedCombined::Exact {
                matrix: parse_rows(&[&["2", "-19/4", "15/4"], &["-1", "12", "-10"], &["0", "-25/4", "29/4"]]),
            },
        ),
        FixtureId::A2 => (
            facts(true, TypeI, &[-1, 1, -1, 1, -1, -1], true),
            ExpectedCombined::Rounded {
                scale_exponent: 6,
                table: parse_rows(&[
                    &["-0.6709", "0.6709", "0", "0", "0", "0"],
                    &["0.6709", "-0.8386", "1.6695", "-1.5018", "0", "0"],
                    &["0", "0.3173", "-3.4744", "3.2674", "-0.1134", "0.0030"],
                    &["0", "-0.1521", "1.8926", "-1.9579", "0.2264", "-0.0091"],
                    &["0", "0.0025", "-0.0877", "0.1973", "-0.1210", "0.0089"],
                    &["0", "0", "0", "-0.0051", "0.0079", "-0.0028"],
                ]),
                rel_tol: ratio(5, 10_000),
            },
        ),
        FixtureId::A3 => (
            facts(true, TypeI, &[-1, 1, -1], false),
            ExpectedCombined::Exact { matrix: ints([[3, -2, 0], [-2, 3, 0], [0, 0, 1]]) },
        ),
        FixtureId::A4 => (
            facts(false, TypeI, &[1, 1, -1], true),
            ExpectedCombined::Rounded {
                scale_exponent: 0,
                table: parse_rows(&[
                    &["-5.6667", "6.6667", "0"],
                    &["10.667", "-10.667", "1.0000"],
                    &["-4.0000", "5.0000", "0"],
                ]),
                rel_tol: ratio(1, 1000),
            },
        ),
        FixtureId::A5 => (
            facts(true, TypeII, &[-1, -1, 1], true),
            ExpectedCombined::Rounded {
                scale_exponent: 0,
                table: parse_rows(&[
                    &["0.0000028", "-0.8571", "1.8571"],
                    &["-0.2857", "2.1429", "-0.8571"],
                    &["1.2857", "-0.2857", "0"],
                ]),
                rel_tol: ratio(1, 1000),
            },
        ),
        FixtureId::A6 => (
            facts(true, TypeI, &[-1, 1, 1, -1], true),
            ExpectedCombined::Rounded {
                scale_exponent: 0,
                table: parse_rows(&[
                    &["14.7170", "-98.1132", "84.3962", "0"],
                    &["-43.9057", "250.9434", "-211.6981", "5.6604"],
                    &["30.1887", "-154.6415", "130.1887", "-4.7358"],
                    &["0", "2.8113", "-1.8868", "0.0755"],
                ]),
                rel_tol: ratio(1, 1000),
            },
        ),
    };
    Fixture { id, matrix: fixture_matrix(id), expected, combined }
}

/// The six worked matrices with their known facts.
pub fn reference_fixtures() -> Vec<Fixture> {
    FixtureId::ALL.into_iter().map(fixture).collect()
}

/// Identity, backward identity and signed-diagonal members used alongside
/// the worked matrices.
pub fn auxiliary_matrices() -> Vec<(String, RMatrix)> {
    let d = RMatrix::diagonal(vec![int(2), int(3), int(5)]);
    let neg = RMatrix::diagonal(vec![int(-1), int(-2), int(-4)]);
    vec![
        ("I3".into(), RMatrix::identity(3)),
        ("I5".into(), RMatrix::identity(5)),
        ("P3".into(), backward_identity(3)),
        ("P4".into(), backward_identity(4)),
        ("D3".into(), d),
        ("P3D3".into(), &backward_identity(3) * &neg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_entries() {
        assert_eq!(a3().to_rows()[2], vec![int(-1), int(-4), int(-5)]);
        assert_eq!(a5().get(1, 1), &ratio(-1, 100000));
        assert_eq!(a6().get(1, 4), &int(0));
        assert_eq!(reference_fixtures().len(), 6);
        assert_eq!(FixtureId::parse("a5"), Some(FixtureId::A5));
    }

    #[test]
    fn rounded_reference_is_scaled() {
        let f = fixture(FixtureId::A2);
        assert_eq!(f.combined.reference().get(1, 1), &int(-670_900));
    }
}
