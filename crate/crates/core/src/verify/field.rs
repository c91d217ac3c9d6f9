use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::squarefree_decompose;
use crate::families::{Family, FamilyParams, ShabatPair};

/// A row of the catalogued field-of-definition table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "d", rename_all = "snake_case")]
pub enum TableField {
    Rational,
    Quadratic(i64),
    /// Either `Q` or some real quadratic field depending on the parameters.
    RationalOrRealQuadratic,
}

impl TableField {
    fn admits(self, d: i64) -> bool {
        match self {
            TableField::Rational => d == 1,
            TableField::Quadratic(e) => d == e,
            TableField::RationalOrRealQuadratic => d >= 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldReport {
    pub family: Family,
    /// `1` for `Q`, otherwise the squarefree `d` of `Q(√d)` spanned by the coefficients.
    pub computed_disc: i64,
    pub table: TableField,
    pub matches_table: bool,
    /// Whether the catalogue claims distinct monodromy groups for the two trees (rational rows only).
    pub different_groups_claim: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
}

/// The catalogued table entry for a family, instantiated at the given parameters.
pub fn table_entry(params: &FamilyParams) -> (TableField, Option<bool>) {
    match params.family() {
        Family::F1 => {
            let (r, s, t) = (params.r() as i64, params.s() as i64, params.t() as i64);
            let (_, d) = squarefree_decompose(&BigInt::from(-r * s * t * (r + s + t)));
            (TableField::Quadratic(d), None)
        }
        Family::F2 | Family::F5 | Family::F10 | Family::F11 => (TableField::Rational, Some(true)),
        Family::F3 => (TableField::RationalOrRealQuadratic, None),
        Family::F4 | Family::F9 => (TableField::Quadratic(-3), None),
        Family::F6 => (TableField::Quadratic(6), None),
        Family::F7 => (TableField::Quadratic(-14), None),
        Family::F8 => (TableField::Quadratic(21), None),
        Family::F12 => (TableField::Quadratic(273), None),
    }
}

/// Field actually spanned by the pair's coefficients, next to the catalogued claim.
pub fn field_report(pair: &ShabatPair) -> FieldReport {
    let computed = if pair.p1.is_rational() && pair.p2.is_rational() {
        1
    } else {
        pair.p1.d()
    };
    let (table, different_groups_claim) = table_entry(&pair.params);
    let matches_table = table.admits(computed);
    let show = |d: i64| {
        if d == 1 {
            "Q".to_string()
        } else {
            format!("Q(√{d})")
        }
    };
    let discrepancy = (!matches_table).then(|| {
        let claimed = match table {
            TableField::Rational => "Q".to_string(),
            TableField::Quadratic(d) => show(d),
            TableField::RationalOrRealQuadratic => "Q or a real quadratic field".to_string(),
        };
        format!(
            "coefficients span {}, table lists {claimed}",
            show(computed)
        )
    });
    FieldReport {
        family: pair.params.family(),
        computed_disc: computed,
        table,
        matches_table,
        different_groups_claim,
        discrepancy,
    }
}
