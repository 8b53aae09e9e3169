//! JSON formats for groups, bracoids, solutions, reports and embeddings.
//!
//! Everything is index-based. [`to_canonical_string`] sorts object keys so
//! output is byte-identical across runs.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bracoid::{Classification, SkewBracoid};
use crate::bridge::EmbeddingPair;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Permutation, Subgroup};
use crate::ybe::{SolutionFlags, SolutionTable};

/// Pretty-printed JSON with object keys in sorted order.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&FiniteGroup> for GroupJson {
    fn from(g: &FiniteGroup) -> Self {
        Self { order: g.order(), table: g.rows(), labels: g.labels().map(|l| l.to_vec()) }
    }
}

impl GroupJson {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::Shape(format!("order is {} but the table has {} rows", self.order, self.table.len())));
        }
        let g = FiniteGroup::from_cayley_table(self.table.clone())?;
        match &self.labels {
            Some(labels) => g.with_labels(labels.clone()),
            None => Ok(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracoidJson {
    pub multiplicative: GroupJson,
    pub additive: GroupJson,
    pub action: Vec<Vec<usize>>,
    /// Free-form record of how the bracoid was built. Ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

impl From<&SkewBracoid> for BracoidJson {
    fn from(b: &SkewBracoid) -> Self {
        Self {
            multiplicative: b.multiplicative().into(),
            additive: b.additive().into(),
            action: b.action_table().to_vec(),
            provenance: None,
        }
    }
}

impl BracoidJson {
    pub fn with_provenance(mut self, provenance: Value) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn to_bracoid(&self) -> Result<SkewBracoid> {
        SkewBracoid::validate(self.multiplicative.to_group()?, self.additive.to_group()?, self.action.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsJson {
    pub braid_verified: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

impl From<SolutionFlags> for FlagsJson {
    fn from(f: SolutionFlags) -> Self {
        Self {
            braid_verified: f.braid_verified,
            left_nondegenerate: f.left_nondegenerate,
            right_nondegenerate: f.right_nondegenerate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `r[x][y] = [σ_x(y), τ_y(x)]`.
    pub r: Vec<Vec<[usize; 2]>>,
    /// Recomputed on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagsJson>,
}

impl From<&SolutionTable> for SolutionJson {
    fn from(s: &SolutionTable) -> Self {
        Self {
            size: s.size(),
            labels: s.labels().map(|l| l.to_vec()),
            r: s.rows().into_iter().map(|row| row.into_iter().map(|(p, q)| [p, q]).collect()).collect(),
            flags: Some(s.flags().into()),
        }
    }
}

impl SolutionJson {
    pub fn to_solution(&self) -> Result<SolutionTable> {
        if self.r.len() != self.size {
            return Err(Error::Shape(format!("size is {} but r has {} rows", self.size, self.r.len())));
        }
        let rows = self.r.iter().map(|row| row.iter().map(|&[p, q]| (p, q)).collect()).collect();
        SolutionTable::new(rows, self.labels.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementJson {
    pub members: Vec<usize>,
    pub is_normal: bool,
    pub trivial_as_brace: bool,
    pub in_gamma_kernel: bool,
    pub isomorphic_to_additive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub stabilizer: Vec<usize>,
    pub contains_brace: Vec<Vec<usize>>,
    pub almost_brace: Vec<Vec<usize>>,
    pub almost_classical: Vec<Vec<usize>>,
    pub essentially_brace: bool,
    pub essentially_trivial: bool,
    pub complements: Vec<ComplementJson>,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        let lists = |v: Vec<&Subgroup>| v.into_iter().map(|h| h.members().to_vec()).collect();
        Self {
            stabilizer: c.stabilizer.members().to_vec(),
            contains_brace: lists(c.contains_brace()),
            almost_brace: lists(c.almost_brace()),
            almost_classical: lists(c.almost_classical()),
            essentially_brace: c.essentially_brace,
            essentially_trivial: c.essentially_trivial,
            complements: c
                .complements
                .iter()
                .map(|r| ComplementJson {
                    members: r.subgroup.members().to_vec(),
                    is_normal: r.is_normal,
                    trivial_as_brace: r.trivial_as_brace,
                    in_gamma_kernel: r.in_gamma_kernel,
                    isomorphic_to_additive: r.isomorphic_to_additive,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapsJson {
    /// `alpha[η]` is a permutation of `X`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<usize>>>,
    /// `beta[g]` is a permutation of `N`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<usize>>,
}

/// An embedding of `N` into `Perm(X)` or of `G` into `Perm(N)`, where
/// `X = G/G′`. Input needs exactly one of `maps.alpha`, `maps.beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    #[serde(rename = "X_size")]
    pub x_size: usize,
    pub multiplicative: GroupJson,
    pub subgroup: Vec<usize>,
    pub additive: GroupJson,
    pub maps: MapsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub galois_closure: Option<bool>,
}

impl From<&EmbeddingPair> for EmbeddingJson {
    fn from(p: &EmbeddingPair) -> Self {
        let perms = |v: &[Permutation]| v.iter().map(|x| x.images().to_vec()).collect();
        Self {
            x_size: p.space.size(),
            multiplicative: p.space.group().into(),
            subgroup: p.space.subgroup().members().to_vec(),
            additive: (&p.additive).into(),
            maps: MapsJson {
                alpha: Some(perms(&p.alpha)),
                beta: Some(perms(&p.beta)),
                a: Some(p.a.clone()),
                b: Some(p.b.clone()),
            },
            galois_closure: Some(p.space.is_galois_closure()),
        }
    }
}

pub fn permutations(images: &[Vec<usize>]) -> Result<Vec<Permutation>> {
    images.iter().map(|p| Permutation::new(p.clone())).collect()
}
