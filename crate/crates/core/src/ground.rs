//! Ground sets and bit-word subsets.
//!
//! Elements of a matroid live in a [`GroundSet`]: an ordered list of distinct
//! printable labels. A [`Subset`] is a fixed-width word of bits indexed by
//! ground-set position, so set algebra is single word operations and iteration
//! order is always the label order.

use crate::error::{Error, Result};
use std::fmt;

/// Explicit basis families are capped here so that a subset fits a machine
/// word and full-subset sweeps stay cheap.
pub const MAX_EXPLICIT: usize = 16;
/// Lazy GF(2) representations may be wider.
pub const MAX_LAZY: usize = 32;

/// Ordered list of distinct element names.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) || l.starts_with('#') && l.len() == 1 {
                return Err(Error::BadLabel(l.clone()));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::LabelCollision(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// `a`, `b`, `c`, ... for small catalog matroids.
    pub fn letters(n: usize) -> Self {
        assert!(n <= 26);
        let labels = (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        GroundSet { labels }
    }

    /// `e1`, `e2`, ... used by the spike and projective constructions.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        GroundSet { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn position_ok(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::ElementNotInGroundSet(label.to_string()))
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_of_labels(&self, labels: &[&str]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            s = s.with(self.position_ok(l)?);
        }
        Ok(s)
    }

    /// Renders a subset as the concatenation of its labels in ground order.
    pub fn word(&self, s: Subset) -> String {
        if s.is_empty() {
            return "-".to_string();
        }
        s.iter().map(|p| self.labels[p].as_str()).collect()
    }

    /// Parses a concatenation of labels back into a subset. Segmentation is
    /// by dynamic programming over the label list; ambiguous words and words
    /// with unknown pieces are rejected.
    pub fn parse_word(&self, word: &str) -> Result<Subset> {
        if word == "-" {
            return Ok(Subset::EMPTY);
        }
        let n = word.len();
        // ways[i] = (#segmentations of word[..i] capped at 2, best subset)
        let mut ways: Vec<(u8, Subset)> = vec![(0, Subset::EMPTY); n + 1];
        ways[0] = (1, Subset::EMPTY);
        for i in 0..n {
            if ways[i].0 == 0 {
                continue;
            }
            for (pos, l) in self.labels.iter().enumerate() {
                if word[i..].starts_with(l.as_str()) {
                    let j = i + l.len();
                    let cnt = ways[j].0.saturating_add(ways[i].0).min(2);
                    if ways[j].0 == 0 {
                        ways[j] = (cnt, ways[i].1.with(pos));
                    } else {
                        ways[j].0 = cnt;
                    }
                }
            }
        }
        match ways[n].0 {
            0 => Err(Error::BadLabel(word.to_string())),
            1 => {
                let s = ways[n].1;
                if s.len() != segments_len(self, s, word) {
                    // repeated label inside one word
                    return Err(Error::BadLabel(word.to_string()));
                }
                Ok(s)
            }
            _ => Err(Error::SyntaxError {
                line: 0,
                msg: format!("ambiguous element word {word:?}"),
            }),
        }
    }
}

// Guards against words that use the same label twice (e.g. "aa"): the bit can
// only be set once, so the reassembled length must match.
fn segments_len(g: &GroundSet, s: Subset, word: &str) -> usize {
    let total: usize = s.iter().map(|p| g.label(p).len()).sum();
    if total == word.len() {
        s.len()
    } else {
        usize::MAX
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(" "))
    }
}

/// Subset of a ground set, encoded as bits by position.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(pos: usize) -> Subset {
        Subset(1 << pos)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        let mut s = 0u32;
        for p in it {
            s |= 1 << p;
        }
        Subset(s)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    pub fn with(self, pos: usize) -> Subset {
        Subset(self.0 | 1 << pos)
    }

    pub fn without(self, pos: usize) -> Subset {
        Subset(self.0 & !(1 << pos))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Removes position `pos` from the index space, shifting higher bits down.
    pub fn squeeze(self, pos: usize) -> Subset {
        let low = self.0 & ((1u32 << pos) - 1);
        let high = (self.0 >> (pos + 1)) << pos;
        Subset(low | high)
    }
}

pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let p = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(p)
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({:#b})", self.0)
    }
}

/// All `k`-subsets of `universe`, in lexicographic position order.
pub fn k_subsets(universe: Subset, k: usize) -> Vec<Subset> {
    let positions: Vec<usize> = universe.iter().collect();
    let n = positions.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Subset::EMPTY);
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Subset::from_positions(idx.iter().map(|&i| positions[i])));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let g = GroundSet::letters(4);
        let s = g.subset_of_labels(&["a", "c"]).unwrap();
        assert_eq!(g.word(s), "ac");
        assert_eq!(g.parse_word("ac").unwrap(), s);
        assert_eq!(g.parse_word("-").unwrap(), Subset::EMPTY);
        assert!(g.parse_word("ax").is_err());
    }

    #[test]
    fn multichar_labels_segment_unambiguously() {
        let g = GroundSet::numbered("e", 12);
        let s = g.subset_of_labels(&["e1", "e12"]).unwrap();
        let w = g.word(s);
        assert_eq!(w, "e1e12");
        assert_eq!(g.parse_word(&w).unwrap(), s);
    }

    #[test]
    fn ambiguous_word_rejected() {
        let g = GroundSet::new(vec!["a", "ab", "b"]).unwrap();
        assert!(matches!(
            g.parse_word("ab"),
            Err(Error::SyntaxError { .. })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            GroundSet::new(vec!["a", "a"]),
            Err(Error::LabelCollision(_))
        ));
    }

    #[test]
    fn k_subsets_count() {
        let u = Subset::full(6);
        assert_eq!(k_subsets(u, 3).len(), 20);
        assert_eq!(k_subsets(u, 0), vec![Subset::EMPTY]);
        let odd = Subset::from_positions([0, 2, 4]);
        assert_eq!(k_subsets(odd, 2).len(), 3);
    }

    #[test]
    fn squeeze_shifts_bits() {
        let s = Subset::from_positions([0, 2, 5]);
        assert_eq!(s.squeeze(1), Subset::from_positions([0, 1, 4]));
        assert_eq!(s.squeeze(2), Subset::from_positions([0, 4]));
    }
}
