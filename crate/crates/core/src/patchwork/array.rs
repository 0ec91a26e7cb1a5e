//! Distance arrays and the four array operations.

use std::fmt;
use std::str::FromStr;

use crate::error::PatchError;

/// Cyclic sequence of boundary gaps, stored in canonical form: the
/// lexicographically least sequence over all rotations and reversals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceArray(Vec<u8>);

impl DistanceArray {
    /// Canonicalizes a raw cyclic sequence.
    pub fn new(raw: &[u8]) -> Result<Self, PatchError> {
        if let Some(&bad) = raw.iter().find(|&&a| !(1..=6).contains(&a)) {
            return Err(PatchError::EntryOutOfRange(bad));
        }
        Ok(Self(canonical_alignment(raw).0))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All operations applicable to this array, in tag order, with their
    /// results.
    pub fn successors(&self) -> Vec<(OpTag, DistanceArray)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            if let Ok(next) = self.apply(OpTag::O1(i + 1)) {
                out.push((OpTag::O1(i + 1), next));
            }
        }
        for i in 0..k {
            if let Ok(next) = self.apply(OpTag::O2(i + 1)) {
                out.push((OpTag::O2(i + 1), next));
            }
        }
        if let Ok(next) = self.apply(OpTag::O3) {
            out.push((OpTag::O3, next));
        }
        if let Some(i) = o4_applicable(self) {
            out.push((OpTag::O4(i), DistanceArray::empty()));
        }
        out
    }

    pub fn apply(&self, tag: OpTag) -> Result<DistanceArray, PatchError> {
        let inapplicable = || PatchError::Inapplicable { tag: tag.to_string(), array: self.to_string() };
        let a = &self.0;
        let k = a.len();
        match tag {
            OpTag::O1(i) | OpTag::O2(i) if i == 0 || i > k => Err(inapplicable()),
            OpTag::O1(i) => {
                let (p, x, n) = neighbours(a, i - 1);
                if k < 4 || !(4..=5).contains(&x) || p > 4 || n > 4 {
                    return Err(inapplicable());
                }
                let mut raw = vec![p + 2, 1, n + 2];
                raw.extend((2..k - 1).map(|j| a[(i - 1 + j) % k]));
                DistanceArray::new(&raw)
            }
            OpTag::O2(i) => {
                let (p, x, n) = neighbours(a, i - 1);
                if k < 4 || !(5..=6).contains(&x) || p + n > 6 {
                    return Err(inapplicable());
                }
                let mut raw = vec![p + n];
                raw.extend((2..k - 1).map(|j| a[(i - 1 + j) % k]));
                DistanceArray::new(&raw)
            }
            OpTag::O3 => {
                if k == 2 && a.iter().all(|x| (5..=6).contains(x)) {
                    Ok(DistanceArray::empty())
                } else {
                    Err(inapplicable())
                }
            }
            OpTag::O4(i) => {
                if o4_applicable(self) == Some(i) {
                    Ok(DistanceArray::empty())
                } else {
                    Err(inapplicable())
                }
            }
        }
    }
}

fn neighbours(a: &[u8], i: usize) -> (u8, u8, u8) {
    let k = a.len();
    (a[(i + k - 1) % k], a[i], a[(i + 1) % k])
}

/// 1-based position `i <= 4` with `a_i, a_{i+4}` in {1, 2} and every other
/// entry in {3, 4}, when the array has eight entries.
pub fn o4_applicable(a: &DistanceArray) -> Option<usize> {
    let a = a.entries();
    if a.len() != 8 {
        return None;
    }
    (0..4)
        .find(|&i| {
            (0..8).all(|j| {
                let low = j == i || j == i + 4;
                if low {
                    (1..=2).contains(&a[j])
                } else {
                    (3..=4).contains(&a[j])
                }
            })
        })
        .map(|i| i + 1)
}

/// Canonical form of `raw` with the alignment reaching it: the rotation `r`
/// and whether the sequence was reversed. Canonical entry `t` is
/// `raw[(t + r) % k]`, or `raw[k - 1 - (t + r) % k]` when reversed.
pub fn canonical_alignment(raw: &[u8]) -> (Vec<u8>, usize, bool) {
    let k = raw.len();
    let mut best: Option<(Vec<u8>, usize, bool)> = None;
    for reversed in [false, true] {
        for r in 0..k.max(1) {
            let cand: Vec<u8> = (0..k).map(|t| raw[raw_index(k, t, r, reversed)]).collect();
            if best.as_ref().is_none_or(|b| cand < b.0) {
                best = Some((cand, r, reversed));
            }
        }
    }
    best.unwrap_or((Vec::new(), 0, false))
}

pub(crate) fn raw_index(k: usize, t: usize, r: usize, reversed: bool) -> usize {
    if reversed {
        k - 1 - (t + r) % k
    } else {
        (t + r) % k
    }
}

impl fmt::Display for DistanceArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for DistanceArray {
    type Err = PatchError;

    /// Accepts `[25122322]`, `25122322` and `[]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(t);
        let raw = body
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| PatchError::BadLiteral(s.to_string())))
            .collect::<Result<Vec<u8>, _>>()?;
        Self::new(&raw)
    }
}

/// An arc label: the operation and its 1-based position in the canonical
/// source array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpTag {
    O1(usize),
    O2(usize),
    O3,
    O4(usize),
}

impl OpTag {
    pub fn is_o1(&self) -> bool {
        matches!(self, OpTag::O1(_))
    }

    pub fn is_o4(&self) -> bool {
        matches!(self, OpTag::O4(_))
    }

    /// Vertices the geometric step adds to a seed graph.
    pub fn vertices_added(&self) -> usize {
        match self {
            OpTag::O1(_) => 2,
            OpTag::O4(_) => 10,
            _ => 0,
        }
    }
}

impl fmt::Display for OpTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpTag::O1(i) => write!(f, "O1@{i}"),
            OpTag::O2(i) => write!(f, "O2@{i}"),
            OpTag::O3 => f.write_str("O3"),
            OpTag::O4(i) => write!(f, "O4@{i}"),
        }
    }
}

impl FromStr for OpTag {
    type Err = PatchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PatchError::BadTag(s.to_string());
        let t = s.trim();
        if t == "O3" {
            return Ok(OpTag::O3);
        }
        let (op, pos) = t.split_once('@').ok_or_else(bad)?;
        let pos: usize = pos.parse().map_err(|_| bad())?;
        if pos == 0 {
            return Err(bad());
        }
        match op {
            "O1" => Ok(OpTag::O1(pos)),
            "O2" => Ok(OpTag::O2(pos)),
            "O4" => Ok(OpTag::O4(pos)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn da(s: &str) -> DistanceArray {
        s.parse().unwrap()
    }

    fn position_of(a: &DistanceArray, value: u8) -> usize {
        a.entries().iter().position(|&x| x == value).unwrap() + 1
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reversal() {
        assert_eq!(da("[22222161]"), da("[12222216]"));
        assert_ne!(da("[21222261]"), da("[12222216]"));
        assert_eq!(da("[61222221]"), da("[12222216]"));
        assert_eq!(da("12222216").to_string(), "[12222216]");
        let periodic = da("[13321332]");
        assert_eq!(periodic, da("[21332133]"));
    }

    #[test]
    fn literals() {
        assert_eq!(da("[]"), DistanceArray::empty());
        assert_eq!(DistanceArray::empty().to_string(), "[]");
        assert_eq!("[127]".parse::<DistanceArray>(), Err(PatchError::EntryOutOfRange(7)));
        assert!(matches!("[1a]".parse::<DistanceArray>(), Err(PatchError::BadLiteral(_))));
        for tag in ["O1@3", "O2@1", "O3", "O4@2"] {
            assert_eq!(tag.parse::<OpTag>().unwrap().to_string(), tag);
        }
        assert!("O5@1".parse::<OpTag>().is_err());
        assert!("O1@0".parse::<OpTag>().is_err());
    }

    #[test]
    fn o1_examples() {
        let a = da("[25122322]");
        assert_eq!(a.apply(OpTag::O1(position_of(&a, 5))).unwrap(), da("[41322322]"));
        let a = da("[33513333]");
        assert_eq!(a.apply(OpTag::O1(position_of(&a, 5))).unwrap(), a);
        let a = da("[3434]");
        assert_eq!(a.apply(OpTag::O1(position_of(&a, 4))).unwrap(), da("[5451]"));
    }

    #[test]
    fn o2_examples() {
        let a = da("[335134]");
        assert_eq!(a.apply(OpTag::O2(position_of(&a, 5))).unwrap(), da("[3434]"));
        let a = da("[5451]");
        let hits: Vec<_> = a.successors().into_iter().filter(|(t, _)| matches!(t, OpTag::O2(_))).collect();
        assert!(hits.iter().all(|(_, b)| *b == da("[55]")));
        assert!(!hits.is_empty());
        assert!(da("[55]").apply(OpTag::O2(1)).is_err());
    }

    #[test]
    fn o3_examples() {
        assert_eq!(da("[55]").apply(OpTag::O3).unwrap(), DistanceArray::empty());
        assert_eq!(da("[66]").apply(OpTag::O3).unwrap(), DistanceArray::empty());
        assert!(da("[54]").apply(OpTag::O3).is_err());
    }

    #[test]
    fn o4_examples() {
        assert!(o4_applicable(&da("[33133323]")).is_some());
        assert!(o4_applicable(&da("[33513333]")).is_none());
        assert!(o4_applicable(&da("[23332333]")).is_some());
    }

    #[test]
    fn alignment_reproduces_canonical() {
        let raw = [4, 1, 3, 2, 2, 3, 2, 2];
        let (c, r, rev) = canonical_alignment(&raw);
        let k = raw.len();
        for (t, &x) in c.iter().enumerate() {
            assert_eq!(x, raw[raw_index(k, t, r, rev)]);
        }
    }
}
