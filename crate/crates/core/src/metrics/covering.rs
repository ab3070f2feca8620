//! Coverings of [n] and the combinatorial weight: the exact minimum number
//! of blocks needed to cover the support of a vector.

use std::collections::HashMap;

use crate::error::Error;
use crate::hypercube::{BitVector, MAX_DIM};
use crate::metrics::WeightTable;

/// A family of non-empty subsets of [n] whose union is [n].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Covering {
    n: u8,
    /// Blocks as coordinate masks, sorted and deduplicated.
    blocks: Vec<u32>,
}

impl Covering {
    /// Build from 1-based blocks. Rejects empty or duplicate blocks and
    /// families that do not cover [n].
    pub fn from_blocks(n: u8, blocks: &[Vec<usize>]) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n as u32));
        }
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            let mut mask = 0u32;
            for &i in block {
                if i == 0 || i > n as usize {
                    return Err(Error::CoordinateOutOfRange(i, n));
                }
                mask |= 1 << (i - 1);
            }
            masks.push(mask);
        }
        Self::from_masks(n, masks)
    }

    pub fn from_masks(n: u8, mut masks: Vec<u32>) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n as u32));
        }
        if let Some(&bad) = masks.iter().find(|&&m| m >> n != 0) {
            return Err(Error::BitsOutOfRange { n, bits: bad });
        }
        masks.sort_unstable();
        for pair in masks.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateBlock);
            }
        }
        if masks.iter().any(|&m| m == 0) {
            return Err(Error::EmptyBlock);
        }
        let union = masks.iter().fold(0u32, |acc, &m| acc | m);
        let full = (1u32 << n) - 1;
        if union != full {
            let missing = (!union & full).trailing_zeros() as usize + 1;
            return Err(Error::NotACovering(missing));
        }
        Ok(Covering { n, blocks: masks })
    }

    /// All singleton blocks; its weight is the Hamming weight.
    pub fn singletons(n: u8) -> Result<Self, Error> {
        Self::from_masks(n, (0..n).map(|i| 1u32 << i).collect())
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn block_masks(&self) -> &[u32] {
        &self.blocks
    }

    /// Blocks as sorted 1-based coordinate lists.
    pub fn blocks_as_indices(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&m| (1..=self.n as usize).filter(|&i| m >> (i - 1) & 1 == 1).collect())
            .collect()
    }

    /// ω_F(v): exact minimum set cover of supp(v) by branch and bound,
    /// memoized on the uncovered mask.
    pub fn weight(&self, v: &BitVector) -> Result<u32, Error> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: v.dim() });
        }
        let mut memo = HashMap::new();
        Ok(self.min_cover(v.bits(), &mut memo))
    }

    fn min_cover(&self, uncovered: u32, memo: &mut HashMap<u32, u32>) -> u32 {
        if uncovered == 0 {
            return 0;
        }
        if let Some(&cached) = memo.get(&uncovered) {
            return cached;
        }
        // branch on the lowest uncovered coordinate; some block must take it
        let pivot = uncovered & uncovered.wrapping_neg();
        let mut best = u32::MAX;
        for &block in &self.blocks {
            if block & pivot != 0 {
                let sub = self.min_cover(uncovered & !block, memo);
                best = best.min(1 + sub);
            }
        }
        debug_assert!(best < u32::MAX, "blocks cover [n], so the pivot is coverable");
        memo.insert(uncovered, best);
        best
    }

    /// Materialize ω_F over all of F₂ⁿ via a sub-mask dynamic program.
    /// Valid and TS by construction; agrees with `weight` pointwise.
    pub fn weight_table(&self) -> Result<WeightTable, Error> {
        let size = 1usize << self.n;
        let mut w = vec![0u32; size];
        for v in 1..size as u32 {
            let pivot = v & v.wrapping_neg();
            let mut best = u32::MAX;
            for &block in &self.blocks {
                if block & pivot != 0 {
                    best = best.min(1 + w[(v & !block) as usize]);
                }
            }
            w[v as usize] = best;
        }
        WeightTable::from_raw(self.n, w)
    }

    /// Relabel coordinates; `perm[i]` is the 0-based image of 0-based i.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<Covering, Error> {
        if perm.len() != self.n as usize {
            return Err(Error::DimensionMismatch { left: self.n, right: perm.len() as u8 });
        }
        let masks = self
            .blocks
            .iter()
            .map(|&m| crate::hypercube::permute_mask(m, perm))
            .collect();
        Self::from_masks(self.n, masks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::{BitVector, VectorSet};

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn f1_examples() {
        // F1 = {{1,2},{1,3},{1,4}}
        let f1 = Covering::from_blocks(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert_eq!(f1.weight(&v("0110")).unwrap(), 2);
        assert_eq!(f1.weight(&v("0000")).unwrap(), 0);
        // its radius-1 ball is D1^4
        let t = f1.weight_table().unwrap();
        let ball = t.ball(&BitVector::zero(4).unwrap(), 1).unwrap();
        let d14 = VectorSet::from_vectors(
            4,
            ["0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001"]
                .iter()
                .map(|s| s.parse().unwrap()),
        )
        .unwrap();
        assert_eq!(ball, d14);
    }

    #[test]
    fn singletons_give_hamming() {
        for n in 1..=7u8 {
            let f = Covering::singletons(n).unwrap();
            assert_eq!(f.weight_table().unwrap(), WeightTable::hamming(n).unwrap());
        }
    }

    #[test]
    fn table_agrees_with_branch_and_bound() {
        let f = Covering::from_blocks(
            6,
            &[vec![1, 2, 3], vec![3, 4], vec![4, 5], vec![5, 6], vec![1, 6], vec![2, 5]],
        )
        .unwrap();
        let t = f.weight_table().unwrap();
        for mask in 0..1u32 << 6 {
            let vv = BitVector::new(6, mask).unwrap();
            assert_eq!(t.eval(&vv).unwrap(), f.weight(&vv).unwrap());
        }
        assert!(t.validate().is_ts());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Covering::from_blocks(3, &[vec![1], vec![2]]),
            Err(Error::NotACovering(3))
        ));
        assert!(matches!(
            Covering::from_blocks(2, &[vec![1, 2], vec![]]),
            Err(Error::EmptyBlock)
        ));
        assert!(matches!(
            Covering::from_blocks(2, &[vec![1, 2], vec![2, 1]]),
            Err(Error::DuplicateBlock)
        ));
        assert!(Covering::from_blocks(2, &[vec![1, 3]]).is_err());
    }
}
