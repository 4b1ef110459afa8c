//! Reduced words and endomorphisms of finitely generated free groups.
//!
//! Letter `i` is generator `i` (1-based), `-i` its inverse. Composition
//! `compose(e1, e2)` applies `e2` first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Reduces `letters`, checking each against `rank`.
    pub fn reduce(letters: &[i32], rank: usize) -> Result<Self> {
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::LetterOutOfRange { letter: i64::from(l), rank });
            }
        }
        Ok(Self::reduce_unchecked(letters.iter().copied()))
    }

    pub(crate) fn reduce_unchecked(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    pub fn generator(i: i32) -> Self {
        Self(vec![i])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::reduce_unchecked(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Exponent-sum vector of length `rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        v
    }
}

/// An endomorphism given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn new(rank: usize, images: Vec<Vec<i32>>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: images.len() });
        }
        let images = images.iter().map(|w| FreeWord::reduce(w, rank)).collect::<Result<_>>()?;
        Ok(Self { rank, images })
    }

    pub(crate) fn from_words(rank: usize, images: Vec<FreeWord>) -> Self {
        debug_assert_eq!(images.len(), rank);
        Self { rank, images }
    }

    pub fn identity(rank: usize) -> Self {
        Self { rank, images: (1..=rank as i32).map(FreeWord::generator).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.letters() == [i as i32 + 1])
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank != rank {
            return Err(Error::RankMismatch { expected: self.rank, found: rank });
        }
        Ok(())
    }

    /// Substitutes images for letters and reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.max_letter() > self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: w.max_letter() });
        }
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &FreeWord) -> FreeWord {
        let mut out: Vec<i32> = Vec::new();
        let mut push = |l: i32| {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        };
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1].0;
            if l > 0 {
                img.iter().for_each(|&x| push(x));
            } else {
                img.iter().rev().for_each(|&x| push(-x));
            }
        }
        FreeWord(out)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other.rank)?;
        Ok(Self {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply_unchecked(w)).collect(),
        })
    }

    /// Generator-wise equality of reduced images.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_rank(other.rank)?;
        Ok(self.images == other.images)
    }

    /// Column `j` is the exponent-sum vector of the image of generator `j`.
    pub fn abelianization(&self) -> IntMatrix {
        let n = self.rank;
        let mut m = IntMatrix::zeros(n, n);
        for (j, w) in self.images.iter().enumerate() {
            for (i, s) in w.exponent_sums(n).into_iter().enumerate() {
                m.set(i, j, s);
            }
        }
        m
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

/// An endomorphism paired with a two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedAuto {
    forward: FreeEndo,
    backward: FreeEndo,
}

impl CertifiedAuto {
    /// Accepts the pair only if both composites are the identity.
    pub fn new(forward: FreeEndo, backward: FreeEndo) -> Result<Self> {
        if !forward.compose(&backward)?.is_identity() || !backward.compose(&forward)?.is_identity() {
            return Err(Error::InvalidInput("endomorphisms are not mutually inverse".into()));
        }
        Ok(Self { forward, backward })
    }

    pub fn identity(rank: usize) -> Self {
        Self { forward: FreeEndo::identity(rank), backward: FreeEndo::identity(rank) }
    }

    pub fn forward(&self) -> &FreeEndo {
        &self.forward
    }

    pub fn backward(&self) -> &FreeEndo {
        &self.backward
    }

    pub fn inverse(&self) -> Self {
        Self { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// Re-runs the inverse check.
    pub fn check(&self) -> bool {
        matches!(self.forward.compose(&self.backward), Ok(e) if e.is_identity())
            && matches!(self.backward.compose(&self.forward), Ok(e) if e.is_identity())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn endo(images: Vec<Vec<i32>>) -> FreeEndo {
        FreeEndo::new(images.len(), images).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(FreeWord::reduce(&[1, -1, 2], 2).unwrap().letters(), &[2]);
        assert!(FreeWord::reduce(&[], 2).unwrap().is_empty());
        assert_eq!(FreeWord::reduce(&[1, 2, -2, -1, 3], 3).unwrap().letters(), &[3]);
        assert!(FreeWord::reduce(&[0], 2).is_err());
        assert!(FreeWord::reduce(&[3], 2).is_err());
    }

    #[test]
    fn apply_examples() {
        let e = endo(vec![vec![1, 2], vec![2]]);
        let w = FreeWord::reduce(&[-1], 2).unwrap();
        assert_eq!(e.apply(&w).unwrap().letters(), &[-2, -1]);
        let w = FreeWord::reduce(&[1, -2], 2).unwrap();
        assert_eq!(e.apply(&w).unwrap().letters(), &[1]);
        assert_eq!(FreeEndo::identity(2).apply(&w).unwrap(), w);
    }

    #[test]
    fn compose_examples() {
        let phi = endo(vec![vec![1, 2], vec![2]]);
        let psi = endo(vec![vec![1], vec![2, 1]]);
        let c = phi.compose(&psi).unwrap();
        assert_eq!(c.image(2).letters(), &[2, 1, 2]);
        assert_eq!(FreeEndo::identity(2).compose(&phi).unwrap(), phi);
        assert!(phi.compose(&FreeEndo::identity(3)).is_err());
    }

    #[test]
    fn equality_examples() {
        let e1 = FreeEndo::new(2, vec![vec![1, 2, -2, 2], vec![2]]).unwrap();
        let e2 = endo(vec![vec![1, 2], vec![2]]);
        assert!(e1.equal(&e2).unwrap());
        let e3 = endo(vec![vec![2, 1], vec![2]]);
        assert!(!e2.equal(&e3).unwrap());
    }

    #[test]
    fn abelianization_examples() {
        let m = endo(vec![vec![1, 2], vec![2]]).abelianization();
        assert_eq!(m.rows(), &[vec![1, 0], vec![1, 1]]);
        assert!(FreeEndo::identity(3).abelianization().is_identity());
        let m = endo(vec![vec![2], vec![1]]).abelianization();
        assert_eq!(m.rows(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn certified_auto() {
        let f = endo(vec![vec![1, 2], vec![2]]);
        let b = endo(vec![vec![1, -2], vec![2]]);
        let a = CertifiedAuto::new(f.clone(), b).unwrap();
        assert!(a.check());
        assert!(a.forward().compose(a.backward()).unwrap().is_identity());
        assert!(CertifiedAuto::new(f.clone(), f).is_err());
    }
}
