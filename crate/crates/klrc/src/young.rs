//! Partitions in a box, frames, duality, and strip relations.
//!
//! Throughout the crate a Schubert class for the Grassmannian `Gr(k,n)` is
//! indexed by a partition (Young diagram) contained in the `k x (n-k)` box.
//! The equivalent *frame* encoding — the k-element subset
//! `{ lambda_{k+1-j} + j : j = 1..k }` of `{1..n}` — is what puzzle
//! boundaries and fixed-point localisation both consume.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("partition {0} does not fit in a {1}x{2} box")]
    DoesNotFitBox(Partition, usize, usize),
    #[error("a frame must be a strictly increasing k-subset of 1..=n")]
    BadFrame,
}

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self, YoungError> {
        let mut v: Vec<u32> = parts.to_vec();
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotAPartition(v));
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Row `i` (1-based); zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// First part (0 for the empty partition).
    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// `(size, width, height)`.
    pub fn stats(&self) -> (u64, u32, usize) {
        (self.size(), self.width(), self.height())
    }

    pub fn fits_in_box(&self, k: usize, cols: u32) -> bool {
        self.height() <= k && self.width() <= cols
    }

    /// Containment of diagrams: every row of `self` at least covers `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.0.len().max(self.0.len())).all(|i| self.part(i) >= other.part(i))
    }

    /// Conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        let w = self.width() as usize;
        let mut cols = vec![0u32; w];
        for (c, col) in cols.iter_mut().enumerate() {
            *col = self.0.iter().filter(|&&p| p as usize > c).count() as u32;
        }
        Partition(cols)
    }

    /// Add `s` to each of the first `k` rows (rows beyond the current height
    /// count as zero).  Used to translate a triple of diagrams inside a
    /// larger box.
    pub fn shift_rows(&self, s: u32, k: usize) -> Partition {
        if s == 0 {
            return self.clone();
        }
        let mut v: Vec<u32> = (1..=k).map(|i| self.part(i) + s).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    /// Parse a comma-separated list of parts; the empty string is the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self, YoungError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Self::new(&v),
            Err(_) => Err(YoungError::NotAPartition(Vec::new())),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The frame of `lambda` in `Gr(k,n)`: the strictly increasing k-subset
/// `{ lambda_{k+1-j} + j : j = 1..k }` of `{1..n}`.
pub fn frame_of(lambda: &Partition, k: usize, n: usize) -> Result<Vec<usize>, YoungError> {
    if !lambda.fits_in_box(k, (n - k) as u32) {
        return Err(YoungError::DoesNotFitBox(lambda.clone(), k, n - k));
    }
    Ok((1..=k).map(|j| lambda.part(k + 1 - j) as usize + j).collect())
}

/// Inverse of [`frame_of`].
pub fn diagram_of_frame(frame: &[usize], k: usize, n: usize) -> Result<Partition, YoungError> {
    if frame.len() != k
        || frame.windows(2).any(|w| w[0] >= w[1])
        || frame.iter().any(|&f| f < 1 || f > n)
    {
        return Err(YoungError::BadFrame);
    }
    let parts: Vec<u32> = (1..=k)
        .map(|i| (frame[k - i] - (k + 1 - i)) as u32)
        .collect();
    Partition::new(&parts)
}

/// The dual diagram `lambda*`: its frame is `{ n+1-f : f in frame(lambda) }`.
/// This is an involution on partitions in the `k x (n-k)` box (the rotated
/// complement), and `|lambda| + |lambda*| = k(n-k)`.
pub fn dual(lambda: &Partition, k: usize, n: usize) -> Result<Partition, YoungError> {
    let fr = frame_of(lambda, k, n)?;
    let mut dfr: Vec<usize> = fr.iter().map(|&f| n + 1 - f).collect();
    dfr.sort_unstable();
    diagram_of_frame(&dfr, k, n)
}

/// The strip relation `lambda |> mu`: `mu` is contained in `lambda` and
/// `lambda / mu` has at most one box in every row *and* every column (it is
/// simultaneously a horizontal and a vertical strip).
pub fn strip_rel(lambda: &Partition, mu: &Partition) -> bool {
    let rows = lambda.height().max(mu.height());
    for i in 1..=rows {
        let (l, m) = (lambda.part(i), mu.part(i));
        if m > l || l - m > 1 {
            return false;
        }
        if lambda.part(i + 1) > mu.part(i) {
            return false;
        }
    }
    true
}

/// All partitions fitting in a `k x cols` box, in a fixed deterministic
/// order (first row descending, then recursively).
pub fn partitions_in_box(k: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows_left: usize, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rows_left == 0 || max_part == 0 {
            let mut v = prefix.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(Partition(v));
            return;
        }
        let mut p = max_part;
        loop {
            prefix.push(p);
            rec(rows_left - 1, p, prefix, out);
            prefix.pop();
            if p == 0 {
                break;
            }
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(k, cols, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn frame_of_documented_example() {
        let lam = p(&[5, 3, 3, 1]);
        assert_eq!(frame_of(&lam, 5, 10).unwrap(), vec![1, 3, 6, 7, 10]);
        assert_eq!(
            diagram_of_frame(&[1, 3, 6, 7, 10], 5, 10).unwrap(),
            lam
        );
    }

    #[test]
    fn frame_bijection_small_boxes() {
        for k in 1..=4usize {
            for n in k..=8usize {
                for lam in partitions_in_box(k, (n - k) as u32) {
                    let fr = frame_of(&lam, k, n).unwrap();
                    assert_eq!(diagram_of_frame(&fr, k, n).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn dual_documented_example_and_involution() {
        assert_eq!(dual(&p(&[1]), 2, 4).unwrap(), p(&[2, 1]));
        for lam in partitions_in_box(2, 3) {
            let d = dual(&lam, 2, 5).unwrap();
            assert_eq!(dual(&d, 2, 5).unwrap(), lam);
            assert_eq!(lam.size() + d.size(), 6);
        }
    }

    #[test]
    fn stats_documented_example() {
        assert_eq!(p(&[5, 3, 3, 1]).stats(), (12, 5, 4));
    }

    #[test]
    fn strip_relation() {
        // removing corner boxes one per row/column
        assert!(strip_rel(&p(&[2, 1]), &p(&[1])));
        assert!(strip_rel(&p(&[2, 1]), &p(&[2, 1])));
        assert!(strip_rel(&p(&[2, 2]), &p(&[2, 1])));
        // two new boxes in one row
        assert!(!strip_rel(&p(&[2]), &Partition::empty()));
        // two new boxes in one column
        assert!(!strip_rel(&p(&[1, 1]), &Partition::empty()));
        // diagonal-adjacent additions are fine
        assert!(strip_rel(&p(&[2, 1]), &p(&[1, 1])));
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(2, 3).len(), 10);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("3,1").unwrap(), p(&[3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert!(Partition::parse("1,3").is_err());
    }
}
