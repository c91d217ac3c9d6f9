use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DessinError;

/// Black and white degree partitions of an `n`-edge dessin, parts stored descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Passport {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    n: usize,
}

impl Passport {
    pub fn new(mut alpha: Vec<usize>, mut beta: Vec<usize>) -> Result<Self, DessinError> {
        if alpha.is_empty() || beta.is_empty() || alpha.contains(&0) || beta.contains(&0) {
            return Err(DessinError::InvalidPassport(
                "parts must be positive and nonempty".into(),
            ));
        }
        let (sa, sb): (usize, usize) = (alpha.iter().sum(), beta.iter().sum());
        if sa != sb {
            return Err(DessinError::InvalidPassport(format!(
                "partitions sum to {sa} and {sb}"
            )));
        }
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        beta.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Passport { alpha, beta, n: sa })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exchange the roles of black and white.
    pub fn swapped(&self) -> Self {
        Passport {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            n: self.n,
        }
    }

    /// Equality up to exchanging the two colors.
    pub fn matches(&self, other: &Passport) -> bool {
        self == other || self.swapped() == *other
    }

    /// Vertex count is `n + 1` for plane trees.
    pub fn is_tree_shaped(&self) -> bool {
        self.alpha.len() + self.beta.len() == self.n + 1
    }
}

fn fmt_partition(p: &[usize]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < p.len() {
        let mut j = i;
        while j < p.len() && p[j] == p[i] {
            j += 1;
        }
        let m = j - i;
        if m > 2 {
            out.push(format!("{}^{}", p[i], m));
        } else {
            out.extend(std::iter::repeat_n(p[i].to_string(), m));
        }
        i = j;
    }
    out.join(",")
}

fn parse_partition(s: &str) -> Result<Vec<usize>, DessinError> {
    let bad = |msg: String| DessinError::InvalidPassport(msg);
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let (k, m) = match part.split_once('^') {
            Some((k, m)) => (k.trim(), m.trim()),
            None => (part, "1"),
        };
        let k: usize = k.parse().map_err(|_| bad(format!("bad part {part:?}")))?;
        let m: usize = m
            .parse()
            .map_err(|_| bad(format!("bad multiplicity in {part:?}")))?;
        out.extend(std::iter::repeat_n(k, m));
    }
    Ok(out)
}

impl FromStr for Passport {
    type Err = DessinError;

    /// `"3,5,6;3,1^11;14"`; the trailing `n` is optional but checked when present.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.trim().trim_matches(['[', ']']).split(';').collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(DessinError::InvalidPassport(format!(
                "expected \"alpha;beta;n\", got {s:?}"
            )));
        }
        let p = Passport::new(parse_partition(fields[0])?, parse_partition(fields[1])?)?;
        if let Some(n) = fields.get(2) {
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| DessinError::InvalidPassport(format!("bad n in {s:?}")))?;
            if n != p.n {
                return Err(DessinError::InvalidPassport(format!(
                    "partitions sum to {}, not {n}",
                    p.n
                )));
            }
        }
        Ok(p)
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{};{}",
            fmt_partition(&self.alpha),
            fmt_partition(&self.beta),
            self.n
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_shorthand() {
        let p: Passport = "3,5,6;3,1^11;14".parse().unwrap();
        assert_eq!(p.alpha(), &[6, 5, 3]);
        assert_eq!(p.beta().len(), 12);
        assert_eq!(p.to_string(), "6,5,3;3,1^11;14");
        let q: Passport = "3,3,1;2,2,1^3;7".parse().unwrap();
        assert_eq!(q.to_string(), "3,3,1;2,2,1^3;7");
        assert!(q.is_tree_shaped());
    }

    #[test]
    fn rejects_inconsistent() {
        assert!("3,2;4;5".parse::<Passport>().is_err());
        assert!("3,2;4,1;6".parse::<Passport>().is_err());
        assert!("3,x;4,1;5".parse::<Passport>().is_err());
        assert!("0,5;4,1".parse::<Passport>().is_err());
    }

    #[test]
    fn color_swap_matching() {
        let p: Passport = "2,1;3".parse().unwrap();
        assert!(p.matches(&p.swapped()));
        assert!(!p.matches(&"1,1,1;3".parse().unwrap()));
    }
}
