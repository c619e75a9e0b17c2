//! Young diagrams in column-height notation.
//!
//! A diagram is written `[h1, h2, ..., hL]` where `hi` is the height of the
//! i-th column from the left, so `[N]` is a single column of height `N` and
//! encodes the identity of rank `N`. For a unipotent class the column count
//! is the size of the largest Jordan block and `h1` is the number of blocks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    columns: Vec<usize>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// Builds a diagram from column heights, left to right.
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.contains(&0) {
            return Err(Error::MalformedDiagram(format!(
                "zero column height in {columns:?}"
            )));
        }
        if columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedDiagram(format!(
                "column heights {columns:?} are not weakly decreasing"
            )));
        }
        Ok(YoungDiagram { columns })
    }

    /// A single column of height `h` (empty when `h == 0`).
    pub fn column(h: usize) -> Self {
        if h == 0 {
            YoungDiagram::empty()
        } else {
            YoungDiagram { columns: vec![h] }
        }
    }

    /// `k` columns of height `h`.
    pub fn rectangle(h: usize, k: usize) -> Self {
        if h == 0 {
            YoungDiagram::empty()
        } else {
            YoungDiagram {
                columns: vec![h; k],
            }
        }
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn first_column_height(&self) -> usize {
        self.columns.first().copied().unwrap_or(0)
    }

    /// Deletes the first column; the empty diagram is its own truncation.
    pub fn truncate(&self) -> Self {
        YoungDiagram {
            columns: self.columns.iter().skip(1).copied().collect(),
        }
    }

    /// Adds a new first column of height `h`. A height of zero is a no-op.
    pub fn prepend_column(&self, h: usize) -> Result<Self> {
        if h == 0 {
            return Ok(self.clone());
        }
        if h < self.first_column_height() {
            return Err(Error::MalformedDiagram(format!(
                "cannot prepend a column of height {h} to {self}"
            )));
        }
        let mut columns = Vec::with_capacity(self.columns.len() + 1);
        columns.push(h);
        columns.extend_from_slice(&self.columns);
        Ok(YoungDiagram { columns })
    }

    /// Complement inside a box of height `box_height`: the columns become
    /// `box_height - hL >= ... >= box_height - h1`, zero columns dropped.
    pub fn complement(&self, box_height: usize) -> Result<Self> {
        let first = self.first_column_height();
        if box_height < first {
            return Err(Error::BoxTooSmall {
                box_height,
                first_column: first,
            });
        }
        let columns = self
            .columns
            .iter()
            .rev()
            .map(|&h| box_height - h)
            .filter(|&h| h > 0)
            .collect();
        Ok(YoungDiagram { columns })
    }

    /// Conjugate diagram: row lengths become column heights.
    pub fn conjugate(&self) -> Self {
        let first = self.first_column_height();
        let columns = (1..=first)
            .map(|row| self.columns.iter().take_while(|&&h| h >= row).count())
            .collect();
        YoungDiagram { columns }
    }

    /// Row lengths, top to bottom (the transposed reading).
    pub fn to_rows(&self) -> Vec<usize> {
        self.conjugate().columns
    }

    /// Builds a diagram from row lengths given in any order.
    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        let mut rows: Vec<usize> = rows.iter().copied().filter(|&l| l > 0).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Ok(YoungDiagram::new(rows)?.conjugate())
    }

    /// Compact bracket notation with exponents, e.g. `[5,3,2^2,1]`.
    pub fn to_shorthand(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.columns.len() {
            let h = self.columns[i];
            let run = self.columns[i..].iter().take_while(|&&x| x == h).count();
            if run > 1 {
                parts.push(format!("{h}^{run}"));
            } else {
                parts.push(h.to_string());
            }
            i += run;
        }
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_shorthand())
    }
}

/// Parses `"2,1^5"`, `"[2,1^5]"` or `"[]"`.
impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        let mut columns = Vec::new();
        if body.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        for item in body.split(',') {
            let item = item.trim();
            let (height, count) = match item.split_once('^') {
                Some((h, k)) => (h.trim(), k.trim()),
                None => (item, "1"),
            };
            let height: usize = height
                .parse()
                .map_err(|_| Error::Parse(format!("bad column height '{height}' in '{s}'")))?;
            let count: usize = count
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{count}' in '{s}'")))?;
            columns.extend(std::iter::repeat_n(height, count));
        }
        YoungDiagram::new(columns)
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.columns.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Columns(Vec<usize>),
            Shorthand(String),
        }
        let parsed = match Repr::deserialize(deserializer)? {
            Repr::Columns(c) => YoungDiagram::new(c),
            Repr::Shorthand(s) => s.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(c: &[usize]) -> YoungDiagram {
        YoungDiagram::new(c.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(YoungDiagram::empty().rank(), 0);
        assert_eq!(yd(&[5, 3, 2, 2, 1]).rank(), 13);
        assert_eq!(yd(&[2, 1, 1, 1, 1, 1]).rank(), 7);
    }

    #[test]
    fn first_column_examples() {
        assert_eq!(YoungDiagram::empty().first_column_height(), 0);
        assert_eq!(yd(&[2, 1, 1, 1, 1, 1]).first_column_height(), 2);
        assert_eq!(yd(&[5, 2]).first_column_height(), 5);
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(yd(&[2, 1, 1, 1, 1, 1]).truncate(), yd(&[1, 1, 1, 1, 1]));
        assert_eq!(YoungDiagram::empty().truncate(), YoungDiagram::empty());
        assert_eq!(yd(&[5, 2]).truncate(), yd(&[2]));
    }

    #[test]
    fn prepend_examples() {
        assert_eq!(yd(&[2]).prepend_column(5).unwrap(), yd(&[5, 2]));
        assert_eq!(
            YoungDiagram::empty().prepend_column(0).unwrap(),
            YoungDiagram::empty()
        );
        assert_eq!(yd(&[1, 1]).prepend_column(1).unwrap(), yd(&[1, 1, 1]));
    }

    #[test]
    fn prepend_too_short_is_malformed() {
        let err = yd(&[3, 1]).prepend_column(2).unwrap_err();
        assert!(matches!(err, Error::MalformedDiagram(_)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            yd(&[5, 3, 2, 2, 1]).complement(7).unwrap(),
            yd(&[6, 5, 5, 4, 2])
        );
        assert_eq!(yd(&[2]).complement(2).unwrap(), YoungDiagram::empty());
        assert_eq!(yd(&[2]).complement(5).unwrap(), yd(&[3]));
    }

    #[test]
    fn complement_box_too_small() {
        assert_eq!(
            yd(&[5, 1]).complement(4).unwrap_err(),
            Error::BoxTooSmall {
                box_height: 4,
                first_column: 5
            }
        );
    }

    #[test]
    fn rejects_increasing_and_zero_columns() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
    }

    #[test]
    fn shorthand_parse_and_print() {
        let y: YoungDiagram = "2,1^5".parse().unwrap();
        assert_eq!(y, yd(&[2, 1, 1, 1, 1, 1]));
        assert_eq!(y.to_string(), "[2,1^5]");
        assert_eq!("[5,3,2^2,1]".parse::<YoungDiagram>().unwrap(), yd(&[5, 3, 2, 2, 1]));
        assert_eq!("[]".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        assert!("3,x".parse::<YoungDiagram>().is_err());
    }

    #[test]
    fn rows_and_columns() {
        // [2,1^5]: one column of height 2 then five of height 1 -> rows (6, 1)
        assert_eq!(yd(&[2, 1, 1, 1, 1, 1]).to_rows(), vec![6, 1]);
        assert_eq!(YoungDiagram::from_rows(&[1, 6]).unwrap(), yd(&[2, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn json_accepts_array_or_shorthand() {
        let a: YoungDiagram = serde_json::from_str("[2,1,1]").unwrap();
        let b: YoungDiagram = serde_json::from_str("\"2,1^2\"").unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[2,1,1]");
        assert!(serde_json::from_str::<YoungDiagram>("[1,2]").is_err());
    }
}
