//! Text syntax: partitions `[3,2,1]`, weights `{1,1}`, orbit tuples
//! `(2,1,0)` and contents `[2,1]`.

use std::str::FromStr;

use crate::combinatorics::{Content, Partition, Weight};
use crate::error::{Error, Result};
use crate::orbit::{InfiniteOrbitRep, OrbitRep};

pub const PARTITION_GRAMMAR: &str = "a partition like [3,2,1] or []";
pub const WEIGHT_GRAMMAR: &str = "a weight like {1,0,2}";
pub const TUPLE_GRAMMAR: &str = "a residue tuple like (2,1,0)";
pub const CONTENT_GRAMMAR: &str = "a content like [2,1]";

/// Splits `open a,b,c close` into its integers.
fn delimited(text: &str, open: char, close: char, expected: &'static str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix(open)
        .and_then(|s| s.strip_suffix(close))
        .ok_or_else(|| Error::Parse {
            token: trimmed.to_string(),
            expected,
        })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>().map_err(|_| Error::Parse {
                token: tok.to_string(),
                expected: "a non-negative integer",
            })
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = delimited(s, '[', ']', PARTITION_GRAMMAR)?;
        Partition::new(parts).map_err(|_| Error::Parse {
            token: s.trim().to_string(),
            expected: "weakly decreasing parts",
        })
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        delimited(s, '{', '}', WEIGHT_GRAMMAR).map(Weight::new)
    }
}

impl FromStr for Content {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        delimited(s, '[', ']', CONTENT_GRAMMAR).map(Content::new)
    }
}

/// The entries of a tuple `(2,1,0)`.
pub fn parse_tuple(s: &str) -> Result<Vec<usize>> {
    delimited(s, '(', ')', TUPLE_GRAMMAR)
}

/// An orbit of `Z_N^k`; `k` is the tuple length.
pub fn parse_orbit(s: &str, modulus: usize) -> Result<OrbitRep> {
    let entries = parse_tuple(s)?;
    if entries.is_empty() {
        return Err(Error::Parse {
            token: s.trim().to_string(),
            expected: "a non-empty residue tuple",
        });
    }
    OrbitRep::new(modulus, entries)
}

/// An `S_∞`-orbit; trailing zeros and a final `...` are optional.
pub fn parse_infinite_orbit(s: &str, modulus: usize) -> Result<InfiniteOrbitRep> {
    let cleaned = s.replace("...", "").replace(",)", ")");
    InfiniteOrbitRep::new(modulus, parse_tuple(&cleaned)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn partitions() {
        assert_eq!("[3,2,1]".parse::<Partition>().unwrap(), part![3, 2, 1]);
        assert_eq!(" [ 3 , 2 ] ".parse::<Partition>().unwrap(), part![3, 2]);
        assert_eq!("[]".parse::<Partition>().unwrap(), part![]);
        assert_eq!("[0]".parse::<Partition>().unwrap(), part![]);
        assert_eq!(
            "[1,2]".parse::<Partition>(),
            Err(Error::Parse {
                token: "[1,2]".into(),
                expected: "weakly decreasing parts"
            })
        );
        assert_eq!(
            "(1,2)".parse::<Partition>(),
            Err(Error::Parse {
                token: "(1,2)".into(),
                expected: PARTITION_GRAMMAR
            })
        );
        assert_eq!(
            "[1,x]".parse::<Partition>(),
            Err(Error::Parse {
                token: "x".into(),
                expected: "a non-negative integer"
            })
        );
    }

    #[test]
    fn weights_contents_and_tuples() {
        assert_eq!("{1,1}".parse::<Weight>().unwrap(), Weight::new(vec![1, 1]));
        assert!("[1,1]".parse::<Weight>().is_err());
        assert_eq!("[1,2]".parse::<Content>().unwrap().counts(), &[1, 2]);
        assert_eq!(parse_orbit("(0,1,2)", 3).unwrap().entries(), &[2, 1, 0]);
        assert!(parse_orbit("(0,1,3)", 3).is_err());
        assert!(parse_orbit("()", 3).is_err());
        assert_eq!(
            parse_infinite_orbit("(2,1,0,...)", 3).unwrap(),
            InfiniteOrbitRep::new(3, vec![2, 1]).unwrap()
        );
    }

    #[test]
    fn display_round_trips() {
        for p in Partition::all_in_box(3, 3) {
            assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
        let w = Weight::new(vec![0, 3, 1]);
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        let o = OrbitRep::new(4, vec![3, 1, 1, 0]).unwrap();
        assert_eq!(parse_orbit(&o.to_string(), 4).unwrap(), o);
    }
}
