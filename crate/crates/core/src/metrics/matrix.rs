//! Full distance matrices on F₂ⁿ and the C1/C2/C3 conditions that
//! characterize the matrices turning a tiling into a perfect code.

use crate::error::Error;
use crate::hypercube::{BitVector, VectorSet};
use crate::metrics::WeightTable;

/// A 2ⁿ × 2ⁿ distance matrix m[x][y]. Never serialized in full; exported as
/// its first row plus a C3 attestation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricMatrix {
    n: u8,
    m: Vec<Vec<u32>>,
}

/// First violated condition, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatrixVerdict {
    Ok,
    /// m[x][0] ≠ d(x, 0) for some x in the tile.
    C1 { x: BitVector, expected: u32, found: u32 },
    /// m[x][0] ≤ r for some x outside the tile.
    C2 { x: BitVector, found: u32 },
    /// m[x][y] ≠ m[x⊕y][0].
    C3 { x: BitVector, y: BitVector },
}

impl MetricMatrix {
    /// m[x][y] = ω(x ⊕ y); satisfies C3 by construction.
    pub fn from_weight(w: &WeightTable) -> Result<Self, Error> {
        let n = w.dim();
        if n > 12 {
            return Err(Error::MatrixDimensionTooLarge(n));
        }
        let size = 1usize << n;
        let m = (0..size)
            .map(|x| (0..size).map(|y| w.get((x ^ y) as u32)).collect())
            .collect();
        Ok(MetricMatrix { n, m })
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn get(&self, x: u32, y: u32) -> u32 {
        self.m[x as usize][y as usize]
    }

    /// Poke a single entry; used to study how violations surface.
    pub fn set(&mut self, x: u32, y: u32, value: u32) {
        self.m[x as usize][y as usize] = value;
    }

    /// First row as a weight-table-shaped export, with a flag saying whether
    /// C3 holds (the row then determines the whole matrix).
    pub fn export_first_row(&self) -> (WeightTable, bool) {
        let row = (0..1u32 << self.n).map(|x| self.get(x, 0)).collect();
        let table = WeightTable::from_raw(self.n, row).expect("row has 2^n entries");
        (table, self.holds_c3())
    }

    fn holds_c3(&self) -> bool {
        let size = 1u32 << self.n;
        for x in 0..size {
            for y in 0..size {
                if self.get(x, y) != self.get(x ^ y, 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Check C1 against a reference metric on the tile, C2 strictly at
    /// radius r, and C3 everywhere, in that order.
    pub fn validate(&self, tile: &VectorSet, r: u32, d_ref: &WeightTable) -> Result<MatrixVerdict, Error> {
        if tile.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: tile.dim() });
        }
        if d_ref.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: d_ref.dim() });
        }
        if !tile.contains_mask(0) {
            return Err(Error::ZeroNotMember);
        }
        let size = 1u32 << self.n;
        for x in 0..size {
            if tile.contains_mask(x) {
                let expected = d_ref.get(x);
                let found = self.get(x, 0);
                if found != expected {
                    return Ok(MatrixVerdict::C1 { x: self.vec(x), expected, found });
                }
            }
        }
        for x in 0..size {
            if !tile.contains_mask(x) {
                let found = self.get(x, 0);
                if found <= r {
                    return Ok(MatrixVerdict::C2 { x: self.vec(x), found });
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if self.get(x, y) != self.get(x ^ y, 0) {
                    return Ok(MatrixVerdict::C3 { x: self.vec(x), y: self.vec(y) });
                }
            }
        }
        Ok(MatrixVerdict::Ok)
    }

    fn vec(&self, bits: u32) -> BitVector {
        BitVector::new(self.n, bits).expect("mask in range")
    }
}
