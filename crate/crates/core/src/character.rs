//! Characters, dimensions, and weight multiplicities of L(lambda).
//!
//! Computed by streaming over the supertableau enumeration, independently
//! of the matrix engine. Evaluating the character at all variables 1 gives
//! the dimension.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::tableau::for_each_supertableau;
use crate::weight::{CovariantWeight, WeightVector};

/// Map from weight vectors to multiplicities; the monomial expansion of the
/// supersymmetric Schur polynomial of Gamma_lambda.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterPoly {
    mult: BTreeMap<WeightVector, u64>,
}

impl CharacterPoly {
    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &u64)> {
        self.mult.iter()
    }

    pub fn support_len(&self) -> usize {
        self.mult.len()
    }

    /// Total mass: the dimension.
    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn insert_count(&mut self, w: WeightVector) {
        *self.mult.entry(w).or_insert(0) += 1;
    }

    pub fn from_counts(mult: BTreeMap<WeightVector, u64>) -> Self {
        CharacterPoly { mult }
    }
}

/// The full weight-multiplicity character of L(lambda).
pub fn character(lambda: &CovariantWeight, cap: usize) -> Result<CharacterPoly> {
    let mut ch = CharacterPoly::default();
    for_each_supertableau(lambda, cap, |t| ch.insert_count(t.weight()))?;
    Ok(ch)
}

/// dim L(lambda): the number of supertableaux of shape Gamma_lambda.
pub fn dimension(lambda: &CovariantWeight, cap: usize) -> Result<u64> {
    let count = for_each_supertableau(lambda, cap, |_| {})?;
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::DEFAULT_CAP;
    use crate::weight::SuperDims;

    fn weight(m: usize, n: usize, even: &[i64], odd: &[i64]) -> CovariantWeight {
        CovariantWeight::new(SuperDims::new(m, n).unwrap(), even.to_vec(), odd.to_vec()).unwrap()
    }

    #[test]
    fn natural_module_character() {
        let lam = weight(2, 1, &[1, 0], &[0]);
        let ch = character(&lam, DEFAULT_CAP).unwrap();
        assert_eq!(ch.total(), 3);
        for w in [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]] {
            assert_eq!(ch.multiplicity(&WeightVector(w)), 1);
        }
    }

    #[test]
    fn gl11_hook_character() {
        let lam = weight(1, 1, &[1], &[1]);
        let ch = character(&lam, DEFAULT_CAP).unwrap();
        assert_eq!(ch.total(), 2);
        assert_eq!(ch.multiplicity(&WeightVector(vec![1, 1])), 1);
        assert_eq!(ch.multiplicity(&WeightVector(vec![0, 2])), 1);
    }

    #[test]
    fn gl12_example_mass() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        assert_eq!(character(&lam, DEFAULT_CAP).unwrap().total(), 8);
        assert_eq!(dimension(&lam, DEFAULT_CAP).unwrap(), 8);
    }

    #[test]
    fn gl12_dimension_formula() {
        for l1 in 2..=5i64 {
            for l2 in 0..=3i64 {
                for l3 in 0..=l2 {
                    let lam = weight(1, 2, &[l1], &[l2, l3]);
                    assert_eq!(
                        dimension(&lam, DEFAULT_CAP).unwrap() as i64,
                        4 * (l2 - l3 + 1),
                        "lambda = {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn highest_weight_multiplicity_one_and_block_symmetry() {
        let lam = weight(2, 2, &[2, 1], &[1, 0]);
        let ch = character(&lam, DEFAULT_CAP).unwrap();
        let hw: Vec<i64> = lam.even().iter().chain(lam.odd().iter()).copied().collect();
        assert_eq!(ch.multiplicity(&WeightVector(hw)), 1);
        let m = lam.dims().m();
        // Symmetry in the first m and in the last n coordinates separately.
        for (w, &mult) in ch.iter() {
            let mut swapped_even = w.0.clone();
            swapped_even.swap(0, m - 1);
            assert_eq!(ch.multiplicity(&WeightVector(swapped_even)), mult);
            let mut swapped_odd = w.0.clone();
            let len = swapped_odd.len();
            swapped_odd.swap(m, len - 1);
            assert_eq!(ch.multiplicity(&WeightVector(swapped_odd)), mult);
        }
        // Support weights all carry the full box count.
        assert!(ch.iter().all(|(w, _)| w.total() == lam.size()));
    }
}
