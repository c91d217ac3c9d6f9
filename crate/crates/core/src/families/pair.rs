use serde::Serialize;

use super::FamilyParams;
use crate::algebra::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `p2` is the coefficient-wise conjugate of `p1` over `Q(√d)`.
    GaloisConjugate,
    /// Both polynomials have rational coefficients.
    BothRational,
}

/// The two Shabat polynomials of a family, one per tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShabatPair {
    pub params: FamilyParams,
    pub p1: Poly,
    pub p2: Poly,
    pub field_disc: i64,
    pub relation: Relation,
    /// Corrections applied to the printed formulas, one sentence each.
    pub repairs: Vec<String>,
}

impl ShabatPair {
    pub(crate) fn new(params: FamilyParams, p1: Poly, p2: Poly, repairs: Vec<String>) -> Self {
        let rational = p1.is_rational() && p2.is_rational();
        let (p1, p2) = if rational {
            (
                p1.retag(1).expect("rational"),
                p2.retag(1).expect("rational"),
            )
        } else {
            (p1, p2)
        };
        let relation = if rational {
            Relation::BothRational
        } else {
            Relation::GaloisConjugate
        };
        let field_disc = if rational { 1 } else { p1.d() };
        ShabatPair {
            params,
            p1,
            p2,
            field_disc,
            relation,
            repairs,
        }
    }

    pub fn polys(&self) -> [&Poly; 2] {
        [&self.p1, &self.p2]
    }

    /// Whether the stored relation actually holds coefficient by coefficient.
    pub fn relation_holds(&self) -> bool {
        match self.relation {
            Relation::BothRational => self.p1.is_rational() && self.p2.is_rational(),
            Relation::GaloisConjugate => {
                self.p1.galois_conjugate() == self.p2 && self.p1 != self.p2
            }
        }
    }
}
