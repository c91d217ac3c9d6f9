//! Exact checks on polynomials: the Shabat property, passports, affine equivalence and fields
//! of definition.

mod critical;
mod equivalence;
mod field;

pub use critical::{
    critical_value_polynomial, critical_values, fiber_profile, is_shabat, passport_from_poly,
    CriticalValues, ShabatReport,
};
pub use equivalence::{equivalent, normal_form, AffineMap, EquivalenceWitness, WitnessDocument};
pub use field::{field_report, table_entry, FieldReport, TableField};

use crate::algebra::AlgebraError;
use crate::dessins::DessinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("polynomial of degree {0} is too small")]
    DegreeTooSmall(usize),
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("passport extraction needs exactly two critical values, found {0}")]
    NeedTwoValues(usize),
    #[error("critical values lie outside the coefficient field")]
    ValuesOutsideField,
    #[error("not a Shabat polynomial: {0} distinct critical values")]
    NotShabat(usize),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Dessin(#[from] DessinError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bivariate_resultant_in_y, squarefree_part, FieldElement, Poly};
    use crate::dessins::Passport;

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c, 1)
    }

    #[test]
    fn cubic_values() {
        let cv = critical_values(&ints(&[0, -3, 0, 1])).unwrap();
        let v = cv.in_field().unwrap();
        assert_eq!(
            v,
            &[FieldElement::from_int(-2, 1), FieldElement::from_int(2, 1)]
        );
        let r = is_shabat(&ints(&[1, -3, 0, 1])).unwrap();
        assert!(r.is_shabat && !r.degenerate && r.value_count == 2);
    }

    #[test]
    fn pure_power_is_degenerate() {
        let r = is_shabat(&Poly::monomial(FieldElement::one(1), 5)).unwrap();
        assert!(r.is_shabat && r.degenerate);
        assert_eq!(r.black_profile, vec![5]);
        assert_eq!(r.white_profile, vec![1; 5]);
        assert!(matches!(
            passport_from_poly(&Poly::monomial(FieldElement::one(1), 5)),
            Err(VerifyError::NeedTwoValues(1))
        ));
    }

    #[test]
    fn generic_quartic_is_not_shabat() {
        let r = is_shabat(&ints(&[0, 1, 2, -1, 1])).unwrap();
        assert!(!r.is_shabat);
        assert_eq!(r.value_count, 3);
    }

    #[test]
    fn extension_values_are_marked() {
        // x³ + 3x has critical points ±i and values ±2i
        let cv = critical_values(&ints(&[0, 3, 0, 1])).unwrap();
        assert!(matches!(cv, CriticalValues::Extension { .. }));
        assert_eq!(
            passport_from_poly(&ints(&[0, 3, 0, 1])),
            Err(VerifyError::ValuesOutsideField)
        );
        let over_i = Poly::from_ints(&[0, 3, 0, 1], -1);
        assert_eq!(critical_values(&over_i).unwrap().count(), 2);
        assert!(critical_values(&over_i).unwrap().in_field().is_some());
    }

    #[test]
    fn passport_of_t21_example() {
        // (x² − 1/2)(x² + 1)²
        let p = &ints(&[-1, 0, 2]) * &ints(&[1, 0, 1]).pow(2);
        let pp = passport_from_poly(&p).unwrap();
        assert!(pp.matches(&"2,2,1,1;4,1,1;6".parse::<Passport>().unwrap()));
    }

    #[test]
    fn resultant_route_agrees_with_krylov_route() {
        for c in [
            &[0, -3, 0, 1][..],
            &[1, 0, -3, 0, 1],
            &[0, 1, 2, -1, 1],
            &[0, 0, 0, 0, 0, 1],
            &[3, -1, 4, 1, -5, 9, 2],
        ] {
            let p = ints(c);
            let via_resultant = squarefree_part(&bivariate_resultant_in_y(&p).unwrap())
                .unwrap()
                .monic();
            assert_eq!(
                via_resultant,
                critical_value_polynomial(&p).unwrap(),
                "{c:?}"
            );
        }
    }
}
