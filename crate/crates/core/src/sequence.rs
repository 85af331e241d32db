//! Binary sequences over {+1, -1} and ordered pairs of them.
//!
//! The text form writes `+` for +1 and `-` for -1, one sequence per line.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_LEN;

/// A single binary symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    /// Accepts `+1`, `1`, `+`, `-1` and `-`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        Sign::from_value(v)
            .ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}

/// A nonempty sequence over {+1, -1}.
///
/// Elements are stored as `i8` so that slices can be fed straight into the
/// correlation kernels. The constructors are the only way in, and all of them
/// check the alphabet and the length bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    elements: Vec<i8>,
}

impl BinarySequence {
    pub fn new(signs: &[Sign]) -> Result<Self> {
        Self::checked(signs.iter().map(|s| s.value()).collect())
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        let mut elements = Vec::with_capacity(values.len());
        for (index, &value) in values.iter().enumerate() {
            match Sign::from_value(value) {
                Some(s) => elements.push(s.value()),
                None => return Err(Error::InvalidElement { index, value }),
            }
        }
        Self::checked(elements)
    }

    fn checked(elements: Vec<i8>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySequence);
        }
        if elements.len() > MAX_LEN {
            return Err(Error::TooLong(elements.len()));
        }
        debug_assert!(elements.iter().all(|&e| e == 1 || e == -1));
        Ok(BinarySequence { elements })
    }

    /// Builds from already-validated ±1 values. Callers inside the crate
    /// guarantee the alphabet.
    pub(crate) fn from_raw(elements: Vec<i8>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.iter().all(|&e| e == 1 || e == -1));
        BinarySequence { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.elements
    }

    pub fn get(&self, index: usize) -> Option<i8> {
        self.elements.get(index).copied()
    }

    pub fn sign(&self, index: usize) -> Option<Sign> {
        self.get(index)
            .map(|v| if v > 0 { Sign::Plus } else { Sign::Minus })
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        self.elements
            .iter()
            .map(|&v| if v > 0 { Sign::Plus } else { Sign::Minus })
    }

    pub fn reverse(&self) -> Self {
        let mut elements = self.elements.clone();
        elements.reverse();
        Self::from_raw(elements)
    }

    pub fn negate(&self) -> Self {
        Self::from_raw(self.elements.iter().map(|&v| -v).collect())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut elements = Vec::with_capacity(self.len() + other.len());
        elements.extend_from_slice(&self.elements);
        elements.extend_from_slice(&other.elements);
        Self::checked(elements)
    }

    /// Kronecker product: element `i * other.len() + j` is `self[i] * other[j]`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        let len = self.len().saturating_mul(other.len());
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        let elements = self
            .elements
            .iter()
            .flat_map(|&a| other.elements.iter().map(move |&b| a * b))
            .collect();
        Ok(Self::from_raw(elements))
    }

    /// Places `x` at position `r` (0 ≤ r ≤ len), shifting the tail right.
    pub fn insert(&self, r: usize, x: Sign) -> Result<Self> {
        if r > self.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                len: self.len(),
            });
        }
        let mut elements = self.elements.clone();
        elements.insert(r, x.value());
        Self::checked(elements)
    }

    /// Removes position `r`; inverse of [`BinarySequence::insert`].
    pub fn remove(&self, r: usize) -> Result<Self> {
        if r >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                len: self.len(),
            });
        }
        let mut elements = self.elements.clone();
        elements.remove(r);
        Self::checked(elements)
    }

    /// Splits an even-length sequence into first and second halves.
    pub fn halves(&self) -> Option<(Self, Self)> {
        let n = self.len();
        if !n.is_multiple_of(2) || n < 2 {
            return None;
        }
        let (lo, hi) = self.elements.split_at(n / 2);
        Some((Self::from_raw(lo.to_vec()), Self::from_raw(hi.to_vec())))
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    /// Parses a `+`/`-` string. Any other character, whitespace included,
    /// is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let mut elements = Vec::with_capacity(s.len());
        for (column, ch) in s.chars().enumerate() {
            match ch {
                '+' => elements.push(1),
                '-' => elements.push(-1),
                _ => return Err(Error::InvalidCharacter { column, ch }),
            }
        }
        Self::checked(elements)
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().map(Sign::symbol).collect();
        f.write_str(&s)
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Two equal-length binary sequences, viewed as a 2×N matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[BinarySequence; 2]", into = "[BinarySequence; 2]")]
pub struct SequencePair {
    first: BinarySequence,
    second: BinarySequence,
}

impl SequencePair {
    pub fn new(first: BinarySequence, second: BinarySequence) -> Result<Self> {
        if first.len() != second.len() {
            return Err(Error::LengthMismatch(first.len(), second.len()));
        }
        Ok(SequencePair { first, second })
    }

    /// Convenience for literals: `SequencePair::parse("++", "+-")`.
    pub fn parse(first: &str, second: &str) -> Result<Self> {
        Self::new(first.parse()?, second.parse()?)
    }

    pub fn first(&self) -> &BinarySequence {
        &self.first
    }

    pub fn second(&self) -> &BinarySequence {
        &self.second
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn swap_rows(&self) -> Self {
        SequencePair {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Inserts `x` into the first row at `r_first` and `y` into the second at `r_second`.
    pub fn insert(&self, r_first: usize, x: Sign, r_second: usize, y: Sign) -> Result<Self> {
        Self::new(
            self.first.insert(r_first, x)?,
            self.second.insert(r_second, y)?,
        )
    }

    /// Reads the pair text format: two nonempty lines of `+`/`-`. Blank
    /// lines around the pair are ignored; anything else is an error.
    pub fn from_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .filter(|l| !l.is_empty())
            .collect();
        if lines.len() != 2 {
            return Err(Error::PairFormat(format!(
                "expected exactly two sequence lines, found {}",
                lines.len()
            )));
        }
        Self::new(lines[0].parse()?, lines[1].parse()?)
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.first, self.second)
    }
}

impl fmt::Display for SequencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.first, self.second)
    }
}

impl TryFrom<[BinarySequence; 2]> for SequencePair {
    type Error = Error;

    fn try_from([first, second]: [BinarySequence; 2]) -> Result<Self> {
        Self::new(first, second)
    }
}

impl From<SequencePair> for [BinarySequence; 2] {
    fn from(p: SequencePair) -> Self {
        [p.first, p.second]
    }
}
