use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::dessins::Passport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F4,
        Family::F5,
        Family::F6,
        Family::F7,
        Family::F8,
        Family::F9,
        Family::F10,
        Family::F11,
        Family::F12,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn is_sporadic(self) -> bool {
        self.index() >= 7
    }

    /// Names of the integer parameters the family takes.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::F1 => &["r", "s", "t"],
            Family::F2 | Family::F3 | Family::F4 => &["r", "s"],
            Family::F5 | Family::F6 => &["r"],
            _ => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.index())
    }
}

impl FromStr for Family {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.trim().trim_start_matches(['F', 'f']);
        let k: usize = digits
            .parse()
            .map_err(|_| ParamError::UnknownFamily(s.to_string()))?;
        Family::ALL
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or_else(|| ParamError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} expects parameters ({expected}), got {got}")]
    Arity {
        family: Family,
        expected: String,
        got: usize,
    },
    #[error("{family}: {reason}")]
    Invalid { family: Family, reason: String },
    #[error("tree index must be 1 or 2, got {0}")]
    TreeIndex(usize),
}

/// Validated parameters of one family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    family: Family,
    values: Vec<u64>,
}

impl FamilyParams {
    pub fn new(family: Family, values: &[u64]) -> Result<Self, ParamError> {
        let names = family.param_names();
        if values.len() != names.len() {
            return Err(ParamError::Arity {
                family,
                expected: names.join(","),
                got: values.len(),
            });
        }
        let bad = |reason: &str| {
            Err(ParamError::Invalid {
                family,
                reason: reason.to_string(),
            })
        };
        if values.contains(&0) {
            return bad("parameters must be positive");
        }
        if values.iter().any(|&v| v > 1000) {
            return bad("parameters above 1000 are not supported");
        }
        match family {
            Family::F1 => {
                let (r, s, t) = (values[0], values[1], values[2]);
                if r == s || s == t || r == t {
                    return bad("r, s, t must be pairwise distinct");
                }
            }
            Family::F2 => {
                if values[0] >= values[1] {
                    return bad("requires r < s");
                }
            }
            Family::F4 => {
                // r = 1 turns the degree-r vertex into one more leaf and leaves a single tree
                if values[0] < 2 || values[0] >= values[1] {
                    return bad("requires 2 <= r < s");
                }
            }
            Family::F3 => {
                if values[0] == values[1] {
                    return bad("requires r != s");
                }
            }
            Family::F5 | Family::F6 if values[0] < 2 => {
                return bad("requires r >= 2");
            }
            _ => {}
        }
        Ok(FamilyParams {
            family,
            values: values.to_vec(),
        })
    }

    pub fn sporadic(family: Family) -> Result<Self, ParamError> {
        Self::new(family, &[])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn r(&self) -> u64 {
        self.values[0]
    }

    pub fn s(&self) -> u64 {
        self.values[1]
    }

    pub fn t(&self) -> u64 {
        self.values[2]
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        let v = &self.values;
        (match self.family {
            Family::F1 => v[0] + v[1] + v[2],
            Family::F2 => 2 * (v[0] + v[1]),
            Family::F3 => 3 * v[0] + 2 * v[1],
            Family::F4 => 3 * (v[0] + v[1] - 1),
            Family::F5 => 4 * (2 * v[0] - 1),
            Family::F6 => 5 * (2 * v[0] - 1),
            Family::F7 | Family::F8 => 7,
            Family::F9 => 9,
            Family::F10 => 10,
            Family::F11 => 20,
            Family::F12 => 26,
        }) as usize
    }

    /// Number of white vertices of degree 3, 4 or 5 for F4, F5, F6.
    pub fn p(&self) -> Option<u64> {
        match self.family {
            Family::F4 => Some(self.values[0] + self.values[1] - 1),
            Family::F5 | Family::F6 => Some(2 * self.values[0] - 1),
            _ => None,
        }
    }

    /// gcd of the branch lengths for F1, F2, F3.
    pub fn d(&self) -> Option<u64> {
        match self.family {
            Family::F1 => Some(self.values[0].gcd(&self.values[1]).gcd(&self.values[2])),
            Family::F2 | Family::F3 => Some(self.values[0].gcd(&self.values[1])),
            _ => None,
        }
    }

    pub fn passport(&self) -> Passport {
        let n = self.n();
        let rep = |k: usize, m: usize| std::iter::repeat_n(k, m);
        let v: Vec<usize> = self.values.iter().map(|&x| x as usize).collect();
        let (alpha, beta): (Vec<usize>, Vec<usize>) = match self.family {
            Family::F1 => (v.clone(), rep(3, 1).chain(rep(1, n - 3)).collect()),
            Family::F2 => (
                vec![v[0], v[0], v[1], v[1]],
                rep(4, 1).chain(rep(1, n - 4)).collect(),
            ),
            Family::F3 => (
                vec![v[0], v[0], v[0], v[1], v[1]],
                rep(5, 1).chain(rep(1, n - 5)).collect(),
            ),
            Family::F4 => (
                [v[0], v[1]]
                    .into_iter()
                    .chain(rep(1, n - v[0] - v[1]))
                    .collect(),
                rep(3, n / 3).collect(),
            ),
            Family::F5 => (
                [v[0], v[0]]
                    .into_iter()
                    .chain(rep(1, n - 2 * v[0]))
                    .collect(),
                rep(4, n / 4).collect(),
            ),
            Family::F6 => (
                [v[0], v[0]]
                    .into_iter()
                    .chain(rep(1, n - 2 * v[0]))
                    .collect(),
                rep(5, n / 5).collect(),
            ),
            Family::F7 => (vec![3, 3, 1], vec![2, 2, 1, 1, 1]),
            Family::F8 => (vec![3, 2, 2], vec![2, 2, 1, 1, 1]),
            Family::F9 => (vec![3, 3, 1, 1, 1], vec![2, 2, 2, 2, 1]),
            Family::F10 => (vec![3, 2, 2, 1, 1, 1], rep(2, 5).collect()),
            Family::F11 => (rep(4, 3).chain(rep(1, 8)).collect(), rep(2, 10).collect()),
            Family::F12 => (rep(5, 3).chain(rep(1, 11)).collect(), rep(2, 13).collect()),
        };
        Passport::new(alpha, beta).expect("family passports are consistent")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.values.is_empty() {
            let parts: Vec<String> = self
                .family
                .param_names()
                .iter()
                .zip(&self.values)
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}
