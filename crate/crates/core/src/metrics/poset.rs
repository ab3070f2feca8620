//! Posets on [n] and the poset weight ω_P(x) = |⟨supp(x)⟩|.

use crate::error::Error;
use crate::hypercube::{BitVector, MAX_DIM};
use crate::metrics::WeightTable;

/// A partial order on [n], stored as the full (closed) relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    n: u8,
    /// up[i] = bitmask of 0-based j with (i+1) ⪯ (j+1); includes i itself.
    up: Vec<u32>,
    /// down[i] = bitmask of 0-based j with (j+1) ⪯ (i+1); includes i itself.
    down: Vec<u32>,
}

impl Poset {
    /// Build from 1-based cover pairs (a, b) meaning a ⪯ b. The transitive
    /// closure is computed by repeated squaring of the boolean matrix;
    /// cycles are rejected.
    pub fn from_covers(n: u8, covers: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n as u32));
        }
        let size = n as usize;
        let mut up: Vec<u32> = (0..size).map(|i| 1u32 << i).collect();
        for &(a, b) in covers {
            if a == 0 || a > size {
                return Err(Error::CoordinateOutOfRange(a, n));
            }
            if b == 0 || b > size {
                return Err(Error::CoordinateOutOfRange(b, n));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // repeated squaring: up = up ∘ up until fixpoint
        loop {
            let mut next = vec![0u32; size];
            for i in 0..size {
                let mut reach = up[i];
                let mut rem = up[i];
                while rem != 0 {
                    let j = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    reach |= up[j];
                }
                next[i] = reach;
            }
            if next == up {
                break;
            }
            up = next;
        }
        // antisymmetry
        for i in 0..size {
            for j in i + 1..size {
                if up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::PosetCycle(i + 1, j + 1));
                }
            }
        }
        let mut down = vec![0u32; size];
        for i in 0..size {
            let mut rem = up[i];
            while rem != 0 {
                let j = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                down[j] |= 1 << i;
            }
        }
        Ok(Poset { n, up, down })
    }

    /// The poset with only trivial relations.
    pub fn antichain(n: u8) -> Result<Self, Error> {
        Self::from_covers(n, &[])
    }

    /// The chain 1 ⪯ 2 ⪯ … ⪯ n.
    pub fn chain(n: u8) -> Result<Self, Error> {
        let covers: Vec<(usize, usize)> = (1..n as usize).map(|i| (i, i + 1)).collect();
        Self::from_covers(n, &covers)
    }

    pub(crate) fn from_closed_down_sets(n: u8, down: Vec<u32>) -> Self {
        let size = n as usize;
        let mut up = vec![0u32; size];
        for i in 0..size {
            let mut rem = down[i];
            while rem != 0 {
                let j = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                up[j] |= 1 << i;
            }
        }
        Poset { n, up, down }
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    /// a ⪯ b, 1-based.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a - 1] >> (b - 1) & 1 == 1
    }

    /// 1-based cover pairs (a, b), a ⪯ b, the minimal generating relations.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let size = self.n as usize;
        let mut covers = Vec::new();
        for a in 0..size {
            for b in 0..size {
                if a == b || self.up[a] >> b & 1 == 0 {
                    continue;
                }
                // b covers a iff nothing sits strictly between
                let between = self.up[a] & self.down[b] & !(1 << a) & !(1 << b);
                if between == 0 {
                    covers.push((a + 1, b + 1));
                }
            }
        }
        covers
    }

    /// Ideal generated by the 0-based coordinate mask, as a mask.
    fn ideal_mask(&self, supp: u32) -> u32 {
        let mut ideal = 0u32;
        let mut rem = supp;
        while rem != 0 {
            let i = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            ideal |= self.down[i];
        }
        ideal
    }

    /// ω_P(v) = |⟨supp(v)⟩|.
    pub fn weight(&self, v: &BitVector) -> Result<u32, Error> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: v.dim() });
        }
        Ok(self.ideal_mask(v.bits()).count_ones())
    }

    /// Materialize ω_P over all of F₂ⁿ. Valid and TS by construction.
    pub fn weight_table(&self) -> Result<WeightTable, Error> {
        let w = (0..1u32 << self.n).map(|v| self.ideal_mask(v).count_ones()).collect();
        WeightTable::from_raw(self.n, w)
    }

    /// Relabel the ground set; `perm[i]` is the 0-based image of 0-based i.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<Poset, Error> {
        if perm.len() != self.n as usize {
            return Err(Error::DimensionMismatch { left: self.n, right: perm.len() as u8 });
        }
        let size = self.n as usize;
        let mut down = vec![0u32; size];
        for i in 0..size {
            down[perm[i]] = crate::hypercube::permute_mask(self.down[i], perm);
        }
        Ok(Poset::from_closed_down_sets(self.n, down))
    }
}

/// Enumerate every poset on [n] (labeled), by closing the antichain under
/// one added relation at a time and deduplicating.
pub fn all_posets(n: u8, allow_seven: bool) -> Result<Vec<Poset>, Error> {
    let limit = if allow_seven { 7 } else { 6 };
    if n > limit {
        return Err(Error::RankTooLargeForPosetSearch(n));
    }
    let size = n as usize;
    let key = |up: &[u32]| -> u64 {
        let mut k = 0u64;
        for (i, &row) in up.iter().enumerate() {
            k |= (row as u64 & ((1 << size) - 1)) << (i * size);
        }
        k
    };
    let identity: Vec<u32> = (0..size).map(|i| 1u32 << i).collect();
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![identity.clone()];
    seen.insert(key(&identity));
    let mut out = Vec::new();
    while let Some(up) = queue.pop() {
        out.push(up.clone());
        for a in 0..size {
            for b in 0..size {
                if a == b || up[a] >> b & 1 == 1 || up[b] >> a & 1 == 1 {
                    continue;
                }
                // add a ⪯ b and re-close: everything below a reaches everything above b
                let mut next = up.clone();
                for i in 0..size {
                    if next[i] >> a & 1 == 1 {
                        next[i] |= up[b];
                    }
                }
                let k = key(&next);
                if seen.insert(k) {
                    queue.push(next);
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|up| {
            let mut down = vec![0u32; size];
            for i in 0..size {
                let mut rem = up[i];
                while rem != 0 {
                    let j = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    down[j] |= 1 << i;
                }
            }
            Poset { n, up, down }
        })
        .collect())
}
