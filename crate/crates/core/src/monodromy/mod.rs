//! Permutation groups generated by `σ0, σ1`: order, transitivity and blocks of imprimitivity.

mod blocks;
mod expected;
mod group;

pub use blocks::{block_systems, is_primitive, minimal_block_system, BlockSystem};
pub use expected::{expected_order, ExpectedOrder};
pub use group::{group_order, PermGroup};

use num_bigint::BigUint;
use serde::Serialize;

use crate::dessins::Dessin;
use crate::families::FamilyParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonodromyError {
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("generators act on {0} and {1} points")]
    DegreeMismatch(usize, usize),
    #[error("block systems are only defined for transitive groups")]
    Intransitive,
    #[error("tree index must be 1 or 2, got {0}")]
    TreeIndex(usize),
}

/// Computed facts about a monodromy group, optionally next to a claimed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub degree: usize,
    #[serde(with = "decimal")]
    pub order: BigUint,
    pub transitive: bool,
    pub primitive: bool,
    /// Seeded minimal block systems, as partitions of `{1..n}`.
    pub minimal_blocks: Vec<BlockSystem>,
    pub block_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedOrder>,
    /// `Some(true)` when the computed order equals the expected one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_matches: Option<bool>,
}

impl GroupReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub fn monodromy_group(d: &Dessin) -> PermGroup {
    PermGroup::new(vec![d.sigma0().clone(), d.sigma1().clone()])
        .expect("dessin rotations share a degree")
}

pub fn group_report(g: &PermGroup) -> GroupReport {
    let transitive = g.is_transitive();
    let minimal_blocks = if transitive {
        block_systems(g).expect("transitive")
    } else {
        Vec::new()
    };
    let mut block_sizes: Vec<usize> = minimal_blocks.iter().map(|s| s[0].len()).collect();
    block_sizes.sort_unstable();
    block_sizes.dedup();
    GroupReport {
        degree: g.degree(),
        order: g.order(),
        transitive,
        primitive: transitive && minimal_blocks.is_empty(),
        minimal_blocks,
        block_sizes,
        expected: None,
        order_matches: None,
    }
}

/// Computes the group of `d` and compares its order with the claim for `(params, tree)` when
/// one exists. A mismatch is recorded in the report, not raised.
pub fn structure_check(d: &Dessin, params: &FamilyParams, tree: usize) -> GroupReport {
    let mut report = group_report(&monodromy_group(d));
    if let Ok(e) = expected_order(params, tree) {
        report.order_matches = Some(e.order == report.order);
        report.expected = Some(e);
    }
    report
}

pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::lemma_generators;
    use crate::families::Family;

    #[test]
    fn f1_report() {
        let p = FamilyParams::new(Family::F1, &[1, 2, 3]).unwrap();
        let d = lemma_generators(&p, 1).unwrap();
        let r = structure_check(&d, &p, 1);
        assert_eq!(r.order, BigUint::from(720u32));
        assert_eq!(r.order_matches, Some(true));
        assert!(r.transitive && r.primitive);
        assert!(r.to_json().contains("\"order\": \"720\""));
    }
}
