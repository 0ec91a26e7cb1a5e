//! Walks in the distance-array digraph: a seed and a list of tagged steps.

use std::fmt;

use super::array::{DistanceArray, OpTag};
use super::digraph::initial_array;
use crate::error::PatchError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    /// Index `i` of the starting seed `F_si`.
    pub seed: usize,
    pub steps: Vec<OpTag>,
}

impl Walk {
    pub fn new(seed: usize, steps: Vec<OpTag>) -> Self {
        Self { seed, steps }
    }

    /// Reads one tag per line; blank lines and `#` comments are skipped.
    pub fn parse(seed: usize, text: &str) -> Result<Self, PatchError> {
        let steps = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<OpTag>, _>>()?;
        Ok(Self { seed, steps })
    }

    pub fn to_text(&self) -> String {
        self.steps.iter().map(|t| format!("{t}\n")).collect()
    }

    /// Recovers tags from a sequence of arrays starting at `L_seed`; each
    /// step takes the first tag (in tag order) producing the next array.
    pub fn from_arrays(seed: usize, arrays: &[DistanceArray]) -> Result<Self, PatchError> {
        let start = initial_array(seed).ok_or(PatchError::UnknownSeed(seed))?;
        let first = arrays.first().ok_or_else(|| PatchError::WalkUnfinished(start.to_string()))?;
        if *first != start {
            return Err(PatchError::WalkStalled {
                step: 0,
                tag: "-".into(),
                reason: format!("{first} is not L{seed} = {start}"),
            });
        }
        let mut steps = Vec::new();
        for (i, pair) in arrays.windows(2).enumerate() {
            let tag = pair[0]
                .successors()
                .into_iter()
                .find(|(_, b)| *b == pair[1])
                .map(|(t, _)| t)
                .ok_or_else(|| PatchError::WalkStalled {
                    step: i + 1,
                    tag: "-".into(),
                    reason: format!("no operation takes {} to {}", pair[0], pair[1]),
                })?;
            steps.push(tag);
        }
        Ok(Self { seed, steps })
    }

    /// Parses a list of array literals, as in `[24213322]→[23314142]→…`.
    pub fn from_array_literals(seed: usize, arrays: &[&str]) -> Result<Self, PatchError> {
        let arrays = arrays.iter().map(|s| s.parse()).collect::<Result<Vec<DistanceArray>, _>>()?;
        Self::from_arrays(seed, &arrays)
    }

    /// The arrays visited, checking every step and that the walk ends at `[]`.
    pub fn replay(&self) -> Result<Vec<DistanceArray>, PatchError> {
        let mut at = initial_array(self.seed).ok_or(PatchError::UnknownSeed(self.seed))?;
        let mut seen = vec![at.clone()];
        for (i, &tag) in self.steps.iter().enumerate() {
            at = at.apply(tag).map_err(|e| PatchError::WalkStalled {
                step: i + 1,
                tag: tag.to_string(),
                reason: e.to_string(),
            })?;
            seen.push(at.clone());
        }
        if !at.is_empty() {
            return Err(PatchError::WalkUnfinished(at.to_string()));
        }
        Ok(seen)
    }

    pub fn o1_count(&self) -> usize {
        self.steps.iter().filter(|t| t.is_o1()).count()
    }

    pub fn o4_count(&self) -> usize {
        self.steps.iter().filter(|t| t.is_o4()).count()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fs{}", self.seed)?;
        for t in &self.steps {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let w = Walk::new(15, vec![OpTag::O1(2), OpTag::O2(7), OpTag::O3]);
        assert_eq!(Walk::parse(15, &w.to_text()).unwrap(), w);
        assert_eq!(Walk::parse(15, "# c\nO1@2\n\nO2@7\nO3\n").unwrap(), w);
        assert!(Walk::parse(15, "O9@1\n").is_err());
    }

    #[test]
    fn stalled_walk_names_the_step() {
        let w = Walk::new(15, vec![OpTag::O3]);
        assert!(matches!(w.replay(), Err(PatchError::WalkStalled { step: 1, .. })));
        let w = Walk::new(15, vec![]);
        assert!(matches!(w.replay(), Err(PatchError::WalkUnfinished(_))));
    }

    #[test]
    fn arrays_to_tags() {
        let w = Walk::from_array_literals(15, &["[24213322]", "[23314142]"]).unwrap();
        assert_eq!(w.steps.len(), 1);
        assert!(w.steps[0].is_o1());
        assert!(Walk::from_array_literals(15, &["[24213322]", "[55]"]).is_err());
        assert!(Walk::from_array_literals(14, &["[24213322]"]).is_err());
    }
}
