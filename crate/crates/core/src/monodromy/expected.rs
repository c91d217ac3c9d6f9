//! Orders implied by the claimed group structures of each family.
//!
//! Several claimed structures are internally inconsistent, so these values are advisory: reports
//! put them next to the computed order and never reconcile the two.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::MonodromyError;
use crate::families::{Family, FamilyParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedOrder {
    #[serde(with = "super::decimal")]
    pub order: BigUint,
    /// Claimed structure, written with `A_k`, `S_k`, `Z_k`, `⋊`.
    pub label: String,
    pub provenance: &'static str,
    /// Known caveats about the claim.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

fn factorial(k: u64) -> BigUint {
    (1..=k)
        .map(BigUint::from)
        .product::<BigUint>()
        .max(BigUint::one())
}

fn alt(k: u64) -> BigUint {
    if k < 2 {
        BigUint::one()
    } else {
        factorial(k) / 2u32
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn claim(order: BigUint, label: impl Into<String>) -> ExpectedOrder {
    ExpectedOrder {
        order,
        label: label.into(),
        provenance: "advisory",
        caveat: None,
    }
}

/// `(A_m)^d ⋊ Z_{2d}` for even `m = n/d`, `(A_m)^d ⋊ Z_d` for odd `m`.
fn alternating_power(n: u64, d: u64) -> ExpectedOrder {
    let m = n / d;
    let (top, label_top) = if m.is_multiple_of(2) {
        (2 * d, format!("Z_{}", 2 * d))
    } else {
        (d, format!("Z_{d}"))
    };
    claim(
        alt(m).pow(d as u32) * big(top),
        format!("(A_{m})^{d} ⋊ {label_top}"),
    )
}

pub fn expected_order(params: &FamilyParams, tree: usize) -> Result<ExpectedOrder, MonodromyError> {
    if tree != 1 && tree != 2 {
        return Err(MonodromyError::TreeIndex(tree));
    }
    let n = params.n() as u64;
    let out = match params.family() {
        Family::F1 | Family::F3 => alternating_power(n, params.d().expect("F1/F3 carry d")),
        Family::F2 if tree == 1 => {
            let d = params.d().expect("F2 carries d");
            let (r1, s1) = (params.r() / d, params.s() / d);
            let k = r1 + s1;
            let du = d as u32;
            match (r1, s1) {
                (1, 2) => claim(
                    big(24).pow(du) * big(2 * d),
                    format!("(S_4)^{d} ⋊ Z_{}", 2 * d),
                ),
                (1, 3) => ExpectedOrder {
                    caveat: Some(
                        "the argument derives Q_8 ⋊ S_4 (order 192), not Q_8 ⋊ S_5".into(),
                    ),
                    ..claim(
                        big(960).pow(du) * big(d),
                        format!("(Q_8 ⋊ S_5)^{d} ⋊ Z_{d}"),
                    )
                },
                _ if k % 2 == 0 => claim(
                    (big(2).pow((k - 1) as u32) * factorial(k)).pow(du) * big(d),
                    format!("((Z_2^{} ⋊ A_{k}) ⋊ Z_2)^{d} ⋊ Z_{d}", k - 1),
                ),
                _ => claim(
                    (big(2).pow((k - 1) as u32) * factorial(k)).pow(du) * big(4),
                    format!("(Z_2^{} ⋊ S_{k})^{d} × Z_4", k - 1),
                ),
            }
        }
        Family::F2 => {
            let d = params.d().expect("F2 carries d");
            let (r, s) = (params.r(), params.s());
            if (r, s) == (1, 2) {
                claim(big(120), "S_5")
            } else if d == 1 {
                claim(factorial(n), format!("S_{n}"))
            } else if s != 2 * r {
                claim(
                    factorial(n / d).pow(d as u32) * big(d),
                    format!("(S_{})^{d} ⋊ Z_{d}", n / d),
                )
            } else {
                claim(
                    factorial(n / d - 1).pow(d as u32) * big(d),
                    format!("(S_{})^{d} ⋊ Z_{d}", n / d - 1),
                )
            }
        }
        Family::F4 => {
            let p = params.p().expect("F4 carries p");
            let (r, s) = (params.r(), params.s());
            let (top, label) = match (r % 2, s % 2) {
                (0, 0) => (12, "A_4"),
                (1, 1) => (3, "Z_3"),
                _ => (24, "(A_4 × Z_2)"),
            };
            claim(alt(p).pow(3) * big(top), format!("(A_{p})^3 ⋊ {label}"))
        }
        Family::F5 => {
            let p = params.p().expect("F5 carries p");
            let r = params.r();
            match (tree, r % 2) {
                (1, 1) => claim(alt(p).pow(2) * big(4), format!("(A_{p})^2 ⋊ Z_4")),
                (1, _) => claim(factorial(p).pow(2) * big(4), format!("(S_{p})^2 ⋊ Z_4")),
                (_, 0) => claim(
                    alt(p).pow(4) * big(32),
                    format!("(A_{p})^4 ⋊ (Z_2^3 ⋊ Z_4)"),
                ),
                _ => claim(alt(p).pow(4) * big(4), format!("(A_{p})^4 ⋊ Z_4")),
            }
        }
        Family::F6 => {
            let p = params.p().expect("F6 carries p");
            if params.r() % 2 == 1 {
                claim(alt(p).pow(5) * big(5), format!("(A_{p})^5 ⋊ Z_5"))
            } else {
                claim(
                    alt(p).pow(5) * big(80),
                    format!("(A_{p})^5 ⋊ (Z_2^4 ⋊ Z_5)"),
                )
            }
        }
        Family::F7 => claim(big(168), "PSL(3,2)"),
        Family::F8 => claim(big(2520), "A_7"),
        Family::F9 => ExpectedOrder {
            caveat: Some(
                "PSL(2,8) ⋊ Z_8 has order 4032, while PΓL(2,8) of degree 9 has order 1512".into(),
            ),
            ..claim(big(4032), "PSL(2,8) ⋊ Z_8")
        },
        Family::F10 if tree == 1 => claim(big(60 * 60 * 4), "(A_5 × A_5) ⋊ (Z_2 × Z_2)"),
        Family::F10 => claim(big(60 * 60 * 2), "(A_5 × A_5) ⋊ Z_2"),
        Family::F11 if tree == 1 => claim(big(256 * 3600 * 8), "Z_2^8 ⋊ ((A_5 × A_5) ⋊ D_8)"),
        Family::F11 => claim(alt(10).pow(2) * big(8), "(A_10 × A_10) ⋊ D_8"),
        Family::F12 => claim(alt(13).pow(2) * big(2), "(A_13 × A_13) ⋊ Z_2"),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(f: Family, v: &[u64], tree: usize) -> BigUint {
        expected_order(&FamilyParams::new(f, v).unwrap(), tree)
            .unwrap()
            .order
    }

    #[test]
    fn instantiations() {
        assert_eq!(order(Family::F1, &[1, 2, 3], 1), big(720));
        assert_eq!(order(Family::F2, &[2, 4], 2), big(28800));
        assert_eq!(order(Family::F4, &[4, 5], 1), alt(8).pow(3) * big(24));
        assert_eq!(order(Family::F11, &[], 1), big(7_372_800));
        assert_eq!(order(Family::F11, &[], 2), big(26_336_378_880_000));
        assert_eq!(order(Family::F10, &[], 2), big(7200));
        assert!(expected_order(&FamilyParams::sporadic(Family::F7).unwrap(), 3).is_err());
    }
}
