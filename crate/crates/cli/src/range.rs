use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// `a`, `a..b` or `a..=b`; both ends inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl NRange {
    pub fn single(&self) -> Option<usize> {
        (self.0.start() == self.0.end()).then_some(*self.0.start())
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange(lo..=hi))
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!("5..7".parse::<NRange>().unwrap().0, 5..=7);
        assert_eq!("5..=7".parse::<NRange>().unwrap().0, 5..=7);
        assert_eq!("9".parse::<NRange>().unwrap().single(), Some(9));
        assert!("7..5".parse::<NRange>().is_err());
        assert!("a..5".parse::<NRange>().is_err());
    }
}
