//! Tilings of F₂ⁿ: verification, perfect-code checks, the large-rank
//! family Dₙ(x), and the extension/concatenation constructions.

mod exact_cover;

pub use exact_cover::complete_tiling;

use crate::error::Error;
use crate::hypercube::{BitVector, VectorSet, MAX_DIM};
use crate::metrics::{Covering, WeightTable};

/// A tiling (D, C): translates of the tile D by the code C partition F₂ⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tiling {
    n: u8,
    tile: VectorSet,
    code: VectorSet,
}

/// Outcome of `verify_tiling` / `verify_perfect`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TilingVerdict {
    Valid,
    /// |D| · |C| ≠ 2ⁿ.
    CardinalityMismatch { tile: usize, code: usize },
    /// A point no translate reaches.
    Uncovered { point: BitVector },
    /// A point reached from two codewords.
    DoublyCovered { point: BitVector, first: BitVector, second: BitVector },
}

impl TilingVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TilingVerdict::Valid)
    }
}

impl Tiling {
    /// Validating constructor.
    pub fn new(n: u8, tile: VectorSet, code: VectorSet) -> Result<Self, Error> {
        match verify_tiling(n, &tile, &code)? {
            TilingVerdict::Valid => Ok(Tiling { n, tile, code }),
            bad => Err(Error::InvalidTiling(format!("{:?}", bad))),
        }
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn tile(&self) -> &VectorSet {
        &self.tile
    }

    pub fn code(&self) -> &VectorSet {
        &self.code
    }
}

/// Check cardinality product, coverage and disjointness by marking all 2ⁿ
/// points; failures come with a witness.
pub fn verify_tiling(n: u8, tile: &VectorSet, code: &VectorSet) -> Result<TilingVerdict, Error> {
    if tile.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: tile.dim() });
    }
    if code.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: code.dim() });
    }
    let size = 1usize << n;
    // an oversized product always surfaces as a double cover with a witness;
    // only undersized pairs are rejected up front
    if tile.len().checked_mul(code.len()).map_or(false, |p| p < size) {
        return Ok(TilingVerdict::CardinalityMismatch { tile: tile.len(), code: code.len() });
    }
    // covered_by[p] = codeword that reached p, or sentinel
    let mut covered_by: Vec<u32> = vec![u32::MAX; size];
    for c in code.masks() {
        for d in tile.masks() {
            let p = c ^ d;
            if covered_by[p as usize] != u32::MAX {
                return Ok(TilingVerdict::DoublyCovered {
                    point: BitVector::new(n, p)?,
                    first: BitVector::new(n, covered_by[p as usize])?,
                    second: BitVector::new(n, c)?,
                });
            }
            covered_by[p as usize] = c;
        }
    }
    if let Some(p) = covered_by.iter().position(|&c| c == u32::MAX) {
        return Ok(TilingVerdict::Uncovered { point: BitVector::new(n, p as u32)? });
    }
    Ok(TilingVerdict::Valid)
}

/// C is a (d, r)-perfect code iff the radius-r balls around codewords tile
/// the space, i.e. iff (B(0,r), C) verifies as a tiling. r must be positive.
pub fn verify_perfect(code: &VectorSet, w: &WeightTable, r: u32) -> Result<TilingVerdict, Error> {
    if r == 0 {
        return Err(Error::ZeroRadius);
    }
    let ball = w.ball(&BitVector::zero(w.dim())?, r)?;
    verify_tiling(w.dim(), &ball, code)
}

/// Dₙ(x) = {eᵢ : i ∈ [n]} ∪ {0, x}, the large-rank family; requires
/// ω_H(x) ≥ 2 so the set has n+2 elements.
pub fn dn_tile(n: u8, x: &BitVector) -> Result<VectorSet, Error> {
    if x.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: x.dim() });
    }
    if x.weight() < 2 {
        return Err(Error::DnWeightTooSmall(x.weight()));
    }
    VectorSet::from_masks(n, (0..n).map(|i| 1u32 << i).chain([0, x.bits()]))
}

/// Closed form: Dₙ(x) is a tile iff ω_H(x) ∉ {n−1, n−2}.
pub fn dn_is_tile(n: u8, x: &BitVector) -> Result<bool, Error> {
    if x.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: x.dim() });
    }
    let w = x.weight();
    if w < 2 {
        return Err(Error::DnWeightTooSmall(w));
    }
    Ok(w != n as u32 - 1 && w != n as u32 - 2)
}

/// Outcome of `dn_ts_perfect`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DnVerdict {
    /// ω_H(x) = 2: the singleton-plus-pair covering realizes Dₙ(x) as its
    /// radius-1 ball.
    Perfect { covering: Covering },
    /// ω_H(x) > 2: a strict submask of x of weight 2 is missing from Dₙ(x).
    NotPerfect { missing: BitVector },
}

/// Dₙ(x) determines a TS-perfect code iff ω_H(x) = 2.
pub fn dn_ts_perfect(n: u8, x: &BitVector) -> Result<DnVerdict, Error> {
    if x.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: x.dim() });
    }
    let w = x.weight();
    if w < 2 {
        return Err(Error::DnWeightTooSmall(w));
    }
    if w == 2 {
        let mut blocks: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
        blocks.push(x.bits());
        return Ok(DnVerdict::Perfect { covering: Covering::from_masks(n, blocks)? });
    }
    // two lowest coordinates of supp(x): a weight-2 submask not in Dn(x)
    let lo = x.bits() & x.bits().wrapping_neg();
    let rest = x.bits() ^ lo;
    let lo2 = rest & rest.wrapping_neg();
    Ok(DnVerdict::NotPerfect { missing: BitVector::new(n, lo | lo2)? })
}

/// (D, C) over F₂ˢ to (D | 0, C | F₂ⁿ⁻ˢ) over F₂ⁿ.
pub fn extend_tiling(t: &Tiling, n: u8) -> Result<Tiling, Error> {
    let s = t.n;
    if n < s {
        return Err(Error::CannotShrink { from: s, to: n });
    }
    if n > MAX_DIM {
        return Err(Error::BadDimension(n as u32));
    }
    if n == s {
        return Ok(t.clone());
    }
    let tile = t.tile.concat(&VectorSet::from_masks(n - s, [0])?)?;
    let code = t.code.concat(&VectorSet::full_cube(n - s)?)?;
    Tiling::new(n, tile, code)
}

/// (D₁ | D₂, C₁ | C₂): concatenation of two tilings is a tiling.
pub fn concat_tiling(t1: &Tiling, t2: &Tiling) -> Result<Tiling, Error> {
    let n = t1.n + t2.n;
    if n > MAX_DIM {
        return Err(Error::BadDimension(n as u32));
    }
    Tiling::new(n, t1.tile.concat(&t2.tile)?, t1.code.concat(&t2.code)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn set(n: u8, members: &[&str]) -> VectorSet {
        VectorSet::from_vectors(n, members.iter().map(|s| s.parse().unwrap())).unwrap()
    }

    #[test]
    fn coordinate_split_tiling() {
        // D = {x : x3 = x4 = 0}, C = {x : x1 = x2 = 0} in n=4
        let tile = VectorSet::from_masks(4, (0..4u32).map(|m| m)).unwrap();
        let code = VectorSet::from_masks(4, (0..4u32).map(|m| m << 2)).unwrap();
        assert!(verify_tiling(4, &tile, &code).unwrap().is_valid());
    }

    #[test]
    fn small_verdicts() {
        assert!(verify_tiling(2, &set(2, &["00", "10"]), &set(2, &["00", "01"]))
            .unwrap()
            .is_valid());
        match verify_tiling(2, &set(2, &["00", "10"]), &set(2, &["00", "10"])).unwrap() {
            TilingVerdict::DoublyCovered { .. } => {}
            other => panic!("expected double cover, got {:?}", other),
        }
        // cardinality product alone does not make a tiling
        match verify_tiling(2, &set(2, &["00", "11"]), &set(2, &["00", "11"])).unwrap() {
            TilingVerdict::DoublyCovered { point, .. } => assert_eq!(point, v("11")),
            other => panic!("expected double cover, got {:?}", other),
        }
        match verify_tiling(2, &set(2, &["00", "10"]), &set(2, &["00"])).unwrap() {
            TilingVerdict::CardinalityMismatch { .. } => {}
            other => panic!("expected cardinality mismatch, got {:?}", other),
        }
    }

    #[test]
    fn repetition_code_is_perfect_at_radius_one() {
        let w = WeightTable::hamming(3).unwrap();
        let code = set(3, &["000", "111"]);
        assert!(verify_perfect(&code, &w, 1).unwrap().is_valid());
        assert!(!verify_perfect(&code, &w, 2).unwrap().is_valid());
        assert!(matches!(verify_perfect(&code, &w, 0), Err(Error::ZeroRadius)));
    }

    #[test]
    fn dn_family_basics() {
        let x = v("110000");
        let d = dn_tile(6, &x).unwrap();
        assert_eq!(d.len(), 8);
        assert!(d.contains(&v("110000")));
        assert!(d.contains(&v("000000")));

        let ones = v("111111");
        assert_eq!(dn_tile(6, &ones).unwrap().len(), 8);

        assert!(dn_is_tile(6, &ones).unwrap()); // weight 6 = n
        assert!(!dn_is_tile(6, &v("111110")).unwrap()); // n-1
        assert!(!dn_is_tile(6, &v("111100")).unwrap()); // n-2
        assert!(dn_is_tile(6, &v("111000")).unwrap());
        assert!(dn_tile(6, &v("100000")).is_err());
    }

    #[test]
    fn dn_ts_perfect_verdicts() {
        match dn_ts_perfect(6, &v("011000")).unwrap() {
            DnVerdict::Perfect { covering } => {
                let t = covering.weight_table().unwrap();
                let ball = t.ball(&BitVector::zero(6).unwrap(), 1).unwrap();
                assert_eq!(ball, dn_tile(6, &v("011000")).unwrap());
            }
            other => panic!("expected perfect, got {:?}", other),
        }
        match dn_ts_perfect(6, &v("111000")).unwrap() {
            DnVerdict::NotPerfect { missing } => {
                assert_eq!(missing, v("110000"));
                assert!(!dn_tile(6, &v("111000")).unwrap().contains(&missing));
            }
            other => panic!("expected not perfect, got {:?}", other),
        }
    }

    #[test]
    fn extend_and_concat() {
        let t = Tiling::new(3, set(3, &["000", "100", "010", "001"]), set(3, &["000", "111"])).unwrap();
        let ext = extend_tiling(&t, 5).unwrap();
        assert_eq!(ext.tile().len(), 4);
        assert_eq!(ext.code().len(), 8);
        assert_eq!(extend_tiling(&t, 3).unwrap(), t);
        assert!(extend_tiling(&t, 2).is_err());

        let cc = concat_tiling(&t, &t).unwrap();
        assert_eq!(cc.dim(), 6);
        assert_eq!(cc.tile().len(), 16);
        assert_eq!(cc.code().len(), 4);

        // concat with the whole-space tiling
        let whole = Tiling::new(2, VectorSet::full_cube(2).unwrap(), set(2, &["00"])).unwrap();
        let cw = concat_tiling(&t, &whole).unwrap();
        assert_eq!(cw.tile().len(), 16);
        assert_eq!(cw.code().len(), 2);
    }
}
