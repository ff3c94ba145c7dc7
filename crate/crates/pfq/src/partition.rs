//! Strict partitions, shifted diagrams, and border-strip combinatorics.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be strictly decreasing positive integers")]
    NotStrict,
    #[error("outer shape does not contain inner shape")]
    NotContained,
}

/// A strict partition: strictly decreasing positive parts (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::NotStrict);
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: vec![] }
    }

    /// Panics on a non-strict list; for literals in code and tests.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("not a strict partition")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at 1-based index k, zero beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        if k >= 1 && k <= self.parts.len() {
            self.parts[k - 1]
        } else {
            0
        }
    }

    /// lambda^0: the parts with one trailing zero appended.
    pub fn pad_zero(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.push(0);
        v
    }

    /// Shifted diagram S(lambda) = {(i,j) : i <= j <= lambda_i + i - 1},
    /// rows and columns 1-based.
    pub fn shifted_cells(&self) -> BTreeSet<(u32, u32)> {
        let mut cells = BTreeSet::new();
        for (i0, &p) in self.parts.iter().enumerate() {
            let i = i0 as u32 + 1;
            for j in i..i + p {
                cells.insert((i, j));
            }
        }
        cells
    }

    /// Containment of shifted diagrams: mu_k <= lambda_k for all k.
    pub fn contains(&self, mu: &StrictPartition) -> bool {
        (1..=mu.len()).all(|k| mu.part(k) <= self.part(k))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All strict partitions with |lambda| <= max_weight and l(lambda) <=
/// max_length, ordered by weight, then lexicographically on parts
/// (largest first part first), e.g. (3) before (2,1).
pub fn enumerate_strict(max_weight: u32, max_length: usize) -> Vec<StrictPartition> {
    let mut out = vec![];
    for w in 0..=max_weight {
        let mut batch = vec![];
        gen_strict(w, w, max_length, &mut vec![], &mut batch);
        batch.sort_by(|a, b| b.parts.cmp(&a.parts));
        out.extend(batch);
    }
    out
}

fn gen_strict(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<StrictPartition>,
) {
    if remaining == 0 {
        out.push(StrictPartition { parts: cur.clone() });
        return;
    }
    if max_len == 0 {
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        cur.push(p);
        gen_strict(remaining - p, p.saturating_sub(1), max_len - 1, cur, out);
        cur.pop();
    }
}

/// Decomposition of a skew shifted diagram S(lambda/mu) into border strips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StripDecomposition {
    /// The skew diagram contains a 2x2 block (some lambda_{k+1} > mu_k).
    HasBlock,
    Strips {
        /// Maximal runs of nonempty rows [m(i), M(i)] (1-based, inclusive)
        /// chained by mu_i = lambda_{i+1}.
        strips: Vec<(usize, usize)>,
        /// Rows with lambda_k = mu_k > 0 (empty skew rows).
        fixed: Vec<usize>,
    },
}

/// Split S(lambda/mu) into border strips, or report a 2x2 block.
///
/// Within rows i, i+1 the skew columns overlap in lambda_{i+1} - mu_i + 1
/// cells, so a 2x2 block exists iff lambda_{i+1} > mu_i, and the rows are
/// edge-connected iff lambda_{i+1} >= mu_i; block-free connectivity is
/// exactly the chain condition mu_i = lambda_{i+1}.
pub fn strip_decompose(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Result<StripDecomposition, PartitionError> {
    if !lambda.contains(mu) {
        return Err(PartitionError::NotContained);
    }
    let l = lambda.len();
    for k in 1..l {
        if lambda.part(k + 1) > mu.part(k) {
            return Ok(StripDecomposition::HasBlock);
        }
    }
    let mut fixed = vec![];
    let mut strips: Vec<(usize, usize)> = vec![];
    for i in 1..=l {
        if lambda.part(i) == mu.part(i) {
            fixed.push(i);
            continue;
        }
        match strips.last_mut() {
            // Chain row i onto the previous strip when it ends at row i-1
            // and mu_{i-1} = lambda_i.
            Some((_, last)) if *last == i - 1 && mu.part(i - 1) == lambda.part(i) => {
                *last = i;
            }
            _ => strips.push((i, i)),
        }
    }
    Ok(StripDecomposition::Strips { strips, fixed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment() {
        let l = StrictPartition::of(&[3, 1]);
        assert!(l.contains(&StrictPartition::of(&[2])));
        assert!(l.contains(&l));
        assert!(!l.contains(&StrictPartition::of(&[3, 2])));
    }

    #[test]
    fn padding() {
        assert_eq!(StrictPartition::of(&[2, 1]).pad_zero(), vec![2, 1, 0]);
        assert_eq!(StrictPartition::empty().pad_zero(), vec![0]);
        assert_eq!(StrictPartition::of(&[5]).pad_zero(), vec![5, 0]);
    }

    #[test]
    fn enumeration() {
        let got = enumerate_strict(3, 2);
        let want: Vec<StrictPartition> = vec![
            StrictPartition::empty(),
            StrictPartition::of(&[1]),
            StrictPartition::of(&[2]),
            StrictPartition::of(&[3]),
            StrictPartition::of(&[2, 1]),
        ];
        assert_eq!(got, want);
        assert_eq!(enumerate_strict(4, 1).len(), 5); // {}, (1), (2), (3), (4)
    }

    #[test]
    fn strips_worked_example() {
        // (8,6,4,3,2)/(6,5,4,2,1): strips [1,2] and [4,5], row 3 fixed.
        let l = StrictPartition::of(&[8, 6, 4, 3, 2]);
        let m = StrictPartition::of(&[6, 5, 4, 2, 1]);
        assert_eq!(
            strip_decompose(&l, &m).unwrap(),
            StripDecomposition::Strips {
                strips: vec![(1, 2), (4, 5)],
                fixed: vec![3],
            }
        );
    }

    #[test]
    fn block_detection() {
        let l = StrictPartition::of(&[3, 2]);
        let m = StrictPartition::of(&[1]);
        assert_eq!(strip_decompose(&l, &m).unwrap(), StripDecomposition::HasBlock);
        // lambda = mu: no strips, all rows fixed.
        assert_eq!(
            strip_decompose(&l, &l).unwrap(),
            StripDecomposition::Strips {
                strips: vec![],
                fixed: vec![1, 2],
            }
        );
        assert_eq!(
            strip_decompose(&m, &l),
            Err(PartitionError::NotContained)
        );
    }
}
