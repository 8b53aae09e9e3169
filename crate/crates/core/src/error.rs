use serde_json::{json, Value};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which line of a Cayley table repeats a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableLine {
    Row,
    Column,
}

impl std::fmt::Display for TableLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableLine::Row => f.write_str("row"),
            TableLine::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    EmptyTable,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: value {value} repeats in {line} {index}")]
    NotLatinSquare { line: TableLine, index: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("map is not a homomorphism at ({a}, {b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("image of {element} is not an automorphism")]
    NotAnAutomorphism { element: usize },
    #[error("not a permutation: {reason}")]
    NotAPermutation { reason: String },
    #[error("members do not form a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("not a group action at g1={g1}, g2={g2}, point={point}")]
    NotAnAction { g1: usize, g2: usize, point: usize },
    #[error("action is not transitive: orbit of the identity has {orbit_size} of {total} points")]
    NotTransitive { orbit_size: usize, total: usize },
    #[error("bracoid relation fails at g={g}, eta1={eta1}, eta2={eta2}")]
    BracoidRelationFails { g: usize, eta1: usize, eta2: usize },
    #[error("gamma({element}) is not an automorphism of the additive group")]
    GammaNotAutomorphism { element: usize },
    #[error("gamma is not a homomorphism at ({g1}, {g2})")]
    GammaNotHomomorphism { g1: usize, g2: usize },
    #[error("subgroup is not a complement to the stabilizer")]
    NotAComplement { members: Vec<usize> },
    #[error("bracoid is not almost a brace with respect to the given subgroup")]
    NotAlmostABrace { members: Vec<usize> },
    #[error("bracoid is not almost classical with respect to the given subgroup")]
    NotAlmostClassical { members: Vec<usize> },
    #[error("identification does not map onto the stabilizer: {reason}")]
    StabilizerMismatch { reason: String },
    #[error("{d} does not divide {n}")]
    NotADivisor { n: usize, d: usize },
    #[error("embedding is not regular: {reason}")]
    NotRegular { reason: String },
    #[error("stabilizer condition fails at element {element}")]
    StabConditionFails { element: usize },
    #[error("braid relation fails at ({x}, {y}, {z}): {left:?} != {right:?}")]
    BraidRelationFails { x: usize, y: usize, z: usize, left: [usize; 3], right: [usize; 3] },
    #[error("supplied {map} disagrees with the derived one at index {index}")]
    InconsistentMaps { map: String, index: usize },
    #[error("solutions have different sizes {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyTable => "EmptyTable",
            Error::NotSquare { .. } => "NotSquare",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotLatinSquare { .. } => "NotLatinSquare",
            Error::NoIdentity => "NoIdentity",
            Error::NoInverse { .. } => "NoInverse",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::OrderCapExceeded { .. } => "OrderCapExceeded",
            Error::NotAHomomorphism { .. } => "NotAHomomorphism",
            Error::NotAnAutomorphism { .. } => "NotAnAutomorphism",
            Error::NotAPermutation { .. } => "NotAPermutation",
            Error::NotASubgroup { .. } => "NotASubgroup",
            Error::Shape(_) => "Shape",
            Error::NotAnAction { .. } => "NotAnAction",
            Error::NotTransitive { .. } => "NotTransitive",
            Error::BracoidRelationFails { .. } => "BracoidRelationFails",
            Error::GammaNotAutomorphism { .. } => "GammaNotAutomorphism",
            Error::GammaNotHomomorphism { .. } => "GammaNotHomomorphism",
            Error::NotAComplement { .. } => "NotAComplement",
            Error::NotAlmostABrace { .. } => "NotAlmostABrace",
            Error::NotAlmostClassical { .. } => "NotAlmostClassical",
            Error::StabilizerMismatch { .. } => "StabilizerMismatch",
            Error::NotADivisor { .. } => "NotADivisor",
            Error::NotRegular { .. } => "NotRegular",
            Error::StabConditionFails { .. } => "StabConditionFails",
            Error::BraidRelationFails { .. } => "BraidRelationFails",
            Error::InconsistentMaps { .. } => "InconsistentMaps",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::Internal(_) => "Internal",
        }
    }

    /// The offending data, as JSON.
    pub fn witness(&self) -> Value {
        match self {
            Error::EmptyTable | Error::NoIdentity => Value::Null,
            Error::NotSquare { row, len, expected } => {
                json!({"row": row, "len": len, "expected": expected})
            }
            Error::EntryOutOfRange { row, col, value } => {
                json!({"row": row, "col": col, "value": value})
            }
            Error::NotLatinSquare { line, index, value } => {
                json!({"line": line.to_string(), "index": index, "value": value})
            }
            Error::NoInverse { element }
            | Error::NotAnAutomorphism { element }
            | Error::GammaNotAutomorphism { element }
            | Error::StabConditionFails { element } => json!({"element": element}),
            Error::NotAssociative { a, b, c } => json!([a, b, c]),
            Error::OrderCapExceeded { order, cap } => json!({"order": order, "cap": cap}),
            Error::NotAHomomorphism { a, b } => json!([a, b]),
            Error::NotAPermutation { reason }
            | Error::NotASubgroup { reason }
            | Error::StabilizerMismatch { reason }
            | Error::NotRegular { reason } => json!({"reason": reason}),
            Error::Shape(reason) | Error::Internal(reason) => json!({"reason": reason}),
            Error::NotAnAction { g1, g2, point } => json!([g1, g2, point]),
            Error::NotTransitive { orbit_size, total } => {
                json!({"orbit_size": orbit_size, "total": total})
            }
            Error::BracoidRelationFails { g, eta1, eta2 } => json!([g, eta1, eta2]),
            Error::GammaNotHomomorphism { g1, g2 } => json!([g1, g2]),
            Error::NotAComplement { members }
            | Error::NotAlmostABrace { members }
            | Error::NotAlmostClassical { members } => json!({"members": members}),
            Error::NotADivisor { n, d } => json!({"n": n, "d": d}),
            Error::BraidRelationFails { x, y, z, left, right } => {
                json!({"triple": [x, y, z], "left": left, "right": right})
            }
            Error::InconsistentMaps { map, index } => json!({"map": map, "index": index}),
            Error::SizeMismatch { left, right } => json!([left, right]),
        }
    }

    /// True when the error reports a failed algebraic property of otherwise
    /// well-formed input.
    pub fn is_verification_failure(&self) -> bool {
        !matches!(
            self,
            Error::EmptyTable
                | Error::NotSquare { .. }
                | Error::EntryOutOfRange { .. }
                | Error::Shape(_)
                | Error::OrderCapExceeded { .. }
                | Error::SizeMismatch { .. }
                | Error::NotADivisor { .. }
        )
    }

    pub fn to_json(&self) -> Value {
        json!({"code": self.code(), "message": self.to_string(), "witness": self.witness()})
    }
}
