use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition (of 0) is allowed; it shows up as a 2-core.
/// The derived ordering is lexicographic on the part vectors, so among
/// partitions of the same integer the largest element is the one-row
/// partition and the smallest is the all-ones column.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Failure to parse a partition from its textual form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePartitionError {
    #[error("invalid part {0:?}: parts must be positive integers")]
    BadPart(String),
    #[error("invalid multiplicity {0:?} in exponent notation")]
    BadExponent(String),
    #[error("parts must be weakly decreasing, got {0} after {1}")]
    NotSorted(usize, usize),
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// # Panics
    /// Panics if any part is zero or the parts are not weakly decreasing.
    #[must_use]
    pub fn new(parts: Vec<usize>) -> Self {
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing: {parts:?}");
        }
        assert!(!parts.contains(&0), "parts must be positive: {parts:?}");
        Partition { parts }
    }

    /// The integer being partitioned: the sum of the parts.
    #[must_use]
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the Young diagram).
    #[must_use]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    #[must_use]
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The transposed Young diagram: part `j` counts rows of length > `j`.
    #[must_use]
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Whether this partition dominates `other`: every prefix sum of `self`
    /// is at least the corresponding prefix sum of `other`.
    ///
    /// # Panics
    /// Panics if the two partitions are of different integers, where
    /// dominance is not defined.
    #[must_use]
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(
            self.n(),
            other.n(),
            "dominance compares partitions of the same integer: {self} vs {other}"
        );
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..rows {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether all parts are distinct.
    #[must_use]
    pub fn is_two_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Whether the conjugate partition has all parts distinct.
    #[must_use]
    pub fn is_column_two_regular(&self) -> bool {
        self.conjugate().is_two_regular()
    }

    /// Strips rim dominoes until none remains, returning the 2-core and the
    /// number of dominoes removed (the 2-weight).
    ///
    /// The core is independent of removal order; this routine always removes
    /// the highest removable domino first.
    #[must_use]
    pub fn two_core_and_weight(&self) -> (Partition, usize) {
        let mut shape = self.parts.clone();
        let mut weight = 0;
        while let Some(next) = remove_one_domino(&shape) {
            shape = next;
            weight += 1;
        }
        (Partition { parts: shape }, weight)
    }
}

/// Removes the highest removable rim domino, or returns `None` on a 2-core.
fn remove_one_domino(shape: &[usize]) -> Option<Vec<usize>> {
    let below = |shape: &[usize], i: usize| shape.get(i + 1).copied().unwrap_or(0);
    for i in 0..shape.len() {
        // Horizontal domino: the last two cells of row i.
        if shape[i] >= 2 && shape[i] - 2 >= below(shape, i) {
            let mut out = shape.to_vec();
            out[i] -= 2;
            while out.last() == Some(&0) {
                out.pop();
            }
            return Some(out);
        }
        // Vertical domino: the last cells of rows i and i + 1.
        if i + 1 < shape.len() && shape[i] == shape[i + 1] && shape[i + 1] - 1 >= below(shape, i + 1)
        {
            let mut out = shape.to_vec();
            out[i] -= 1;
            out[i + 1] -= 1;
            while out.last() == Some(&0) {
                out.pop();
            }
            return Some(out);
        }
    }
    None
}

/// All partitions of `n` in descending lexicographic order, from the one-row
/// partition down to the all-ones column. `partitions_desc(0)` is the empty
/// partition alone.
#[must_use]
pub fn partitions_desc(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gather(n, n, &mut prefix, &mut out);
    out
}

fn gather(remaining: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=bound.min(remaining)).rev() {
        prefix.push(part);
        gather(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    /// Renders as comma-separated parts, e.g. `4,1,1`; the empty partition
    /// renders as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let text = self
            .parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&text)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Parses `4,1,1`, the exponent shorthand `4,1^2`, or `-` for the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition { parts: Vec::new() });
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, count) = match token.split_once('^') {
                Some((b, e)) => {
                    let count: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| ParsePartitionError::BadExponent(e.to_string()))?;
                    if count == 0 {
                        return Err(ParsePartitionError::BadExponent(e.to_string()));
                    }
                    (b.trim(), count)
                }
                None => (token, 1),
            };
            let part: usize = base
                .parse()
                .map_err(|_| ParsePartitionError::BadPart(base.to_string()))?;
            if part == 0 {
                return Err(ParsePartitionError::BadPart(base.to_string()));
            }
            for _ in 0..count {
                if let Some(&prev) = parts.last() {
                    if part > prev {
                        return Err(ParsePartitionError::NotSorted(part, prev));
                    }
                }
                parts.push(part);
            }
        }
        Ok(Partition { parts })
    }
}
