//! TS-weights and the metrics they induce: weight tables, axiom validation,
//! balls, the two-level ball witness, extension, max-combination, the literal
//! s-sum, decoding equivalence and rank metrization.

mod covering;
mod matrix;
mod poset;

pub use covering::Covering;
pub use matrix::{MatrixVerdict, MetricMatrix};
pub use poset::{all_posets, Poset};

use crate::error::Error;
use crate::hypercube::{BitVector, VectorSet, MAX_DIM};

/// Full triangle validation is O(4ⁿ); beyond this dimension `validate`
/// checks positivity and support-respect only and reports the triangle
/// check as skipped.
pub const FULL_VALIDATION_MAX_DIM: u8 = 13;

/// A weight function ω on F₂ⁿ materialized as 2ⁿ non-negative integers,
/// indexed by the integer value of the bit word.
///
/// The container itself is unvalidated; `validate` produces the verdict and
/// the validating constructors (`new`, poset/covering tables) enforce it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightTable {
    n: u8,
    w: Vec<u32>,
}

/// First violated weight axiom, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightViolation {
    /// ω(0) ≠ 0.
    NonzeroAtOrigin { value: u32 },
    /// ω(v) = 0 for v ≠ 0.
    ZeroOffOrigin { v: BitVector },
    /// ω(u+v) > ω(u) + ω(v).
    Triangle { u: BitVector, v: BitVector },
}

/// Support-respect failure: supp(smaller) ⊆ supp(larger) but ω(smaller) > ω(larger).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TsViolation {
    pub smaller: BitVector,
    pub larger: BitVector,
}

/// Weight status and TS status, reported separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVerdict {
    pub violation: Option<WeightViolation>,
    pub ts_violation: Option<TsViolation>,
    /// True when the O(4ⁿ) triangle scan was skipped for size.
    pub triangle_skipped: bool,
}

impl WeightVerdict {
    pub fn is_valid_weight(&self) -> bool {
        self.violation.is_none()
    }

    pub fn is_ts(&self) -> bool {
        self.violation.is_none() && self.ts_violation.is_none()
    }
}

impl WeightTable {
    /// Validating constructor: rejects any table that fails the weight axioms.
    pub fn new(n: u8, w: Vec<u32>) -> Result<Self, Error> {
        let t = Self::from_raw(n, w)?;
        match t.validate().violation {
            None => Ok(t),
            Some(v) => Err(Error::InvalidWeight(format!("{:?}", v))),
        }
    }

    /// Length-checked but otherwise unvalidated container.
    pub fn from_raw(n: u8, w: Vec<u32>) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n as u32));
        }
        let expected = 1usize << n;
        if w.len() != expected {
            return Err(Error::BadTableLength { expected, found: w.len() });
        }
        Ok(WeightTable { n, w })
    }

    /// The Hamming weight table.
    pub fn hamming(n: u8) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n as u32));
        }
        Ok(WeightTable { n, w: (0..1u32 << n).map(|v| v.count_ones()).collect() })
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn values(&self) -> &[u32] {
        &self.w
    }

    pub fn get(&self, mask: u32) -> u32 {
        self.w[mask as usize]
    }

    pub fn eval(&self, v: &BitVector) -> Result<u32, Error> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: v.dim() });
        }
        Ok(self.w[v.bits() as usize])
    }

    /// M(ω) = max over the table.
    pub fn max_value(&self) -> u32 {
        *self.w.iter().max().expect("non-empty table")
    }

    /// Check the weight axioms and the TS property, returning the first
    /// violation of each with witnesses.
    pub fn validate(&self) -> WeightVerdict {
        let mut violation = None;
        if self.w[0] != 0 {
            violation = Some(WeightViolation::NonzeroAtOrigin { value: self.w[0] });
        }
        let size = 1u32 << self.n;
        if violation.is_none() {
            for v in 1..size {
                if self.w[v as usize] == 0 {
                    violation = Some(WeightViolation::ZeroOffOrigin { v: self.vec(v) });
                    break;
                }
            }
        }
        let mut triangle_skipped = false;
        if violation.is_none() {
            if self.n <= FULL_VALIDATION_MAX_DIM {
                'outer: for u in 0..size {
                    for v in u..size {
                        if self.w[(u ^ v) as usize] > self.w[u as usize] + self.w[v as usize] {
                            violation = Some(WeightViolation::Triangle { u: self.vec(u), v: self.vec(v) });
                            break 'outer;
                        }
                    }
                }
            } else {
                triangle_skipped = true;
            }
        }
        // support-respect reduces to one-bit deletions by transitivity
        let mut ts_violation = None;
        'ts: for v in 1..size {
            let mut rem = v;
            while rem != 0 {
                let bit = rem & rem.wrapping_neg();
                rem ^= bit;
                if self.w[(v ^ bit) as usize] > self.w[v as usize] {
                    ts_violation = Some(TsViolation { smaller: self.vec(v ^ bit), larger: self.vec(v) });
                    break 'ts;
                }
            }
        }
        WeightVerdict { violation, ts_violation, triangle_skipped }
    }

    /// B(center, r) = {y : ω(y − center) ≤ r}.
    pub fn ball(&self, center: &BitVector, r: u32) -> Result<VectorSet, Error> {
        if center.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: center.dim() });
        }
        let c = center.bits();
        VectorSet::from_masks(
            self.n,
            (0..1u32 << self.n).filter(|&y| self.w[(y ^ c) as usize] <= r),
        )
    }

    fn vec(&self, bits: u32) -> BitVector {
        BitVector::new(self.n, bits).expect("mask in range")
    }
}

/// The two-level table of a downward-closed set containing 0: value 1 on
/// D∖{0}, value 2 outside D. Always a TS-weight, and B(0,1) = D.
pub fn two_level_weight(tile: &VectorSet) -> Result<WeightTable, Error> {
    if !tile.contains_mask(0) {
        return Err(Error::ZeroNotMember);
    }
    if let Some((member, missing)) = tile.downward_closure_witness() {
        return Err(Error::NotDownwardClosed {
            member: member.to_string(),
            missing: missing.to_string(),
        });
    }
    let n = tile.dim();
    let w = (0..1u32 << n)
        .map(|v| if v == 0 { 0 } else if tile.contains_mask(v) { 1 } else { 2 })
        .collect();
    Ok(WeightTable { n, w })
}

/// Outcome of `is_ts_ball`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TsBallVerdict {
    Yes { weight: WeightTable, radius: u32 },
    /// supp(missing) ⊂ supp(member) but missing ∉ D.
    No { member: BitVector, missing: BitVector },
}

/// Decide whether D is a ball of some TS-metric. D is normalized to contain
/// 0 first (translation invariance makes this harmless). Yes carries the
/// two-level witness at radius 1; No carries the downward-closure witness.
pub fn is_ts_ball(tile: &VectorSet) -> Result<TsBallVerdict, Error> {
    if tile.is_empty() {
        return Err(Error::EmptySet);
    }
    let normalized = if tile.contains_mask(0) {
        tile.clone()
    } else {
        let shift = tile.iter().next().expect("non-empty");
        tile.translate(&shift)?
    };
    match normalized.downward_closure_witness() {
        Some((member, missing)) => Ok(TsBallVerdict::No { member, missing }),
        None => Ok(TsBallVerdict::Yes { weight: two_level_weight(&normalized)?, radius: 1 }),
    }
}

/// ω_{n,s}: the weight ω over F₂ˢ extended to F₂ⁿ, keeping ω on vectors
/// supported in [s] and assigning M(ω)+1 elsewhere. Balls of radius
/// r ≤ M(ω) become B(0,r) | {0}.
pub fn extend_weight(w: &WeightTable, n: u8) -> Result<WeightTable, Error> {
    let s = w.dim();
    if n < s {
        return Err(Error::CannotShrink { from: s, to: n });
    }
    if n > MAX_DIM {
        return Err(Error::BadDimension(n as u32));
    }
    if n == s {
        return Ok(w.clone());
    }
    let cap = w.max_value() + 1;
    let low = 1u32 << s;
    let table = (0..1u32 << n)
        .map(|v| if v < low { w.get(v) } else { cap })
        .collect();
    Ok(WeightTable { n, w: table })
}

/// w(x₁|x₂) = max(scale₁·w₁(x₁), scale₂·w₂(x₂)). With scales (1,1) this is
/// the max-metric weight; unequal scales align balls of different radii
/// (the sub-level set at r·s is B₁(0,r) | B₂(0,s) under scales (s,r)).
pub fn max_weight(
    w1: &WeightTable,
    w2: &WeightTable,
    scale1: u32,
    scale2: u32,
) -> Result<WeightTable, Error> {
    if scale1 == 0 || scale2 == 0 {
        return Err(Error::ZeroScale);
    }
    let n = w1.dim();
    let m = w2.dim();
    if n + m > MAX_DIM {
        return Err(Error::BadDimension((n + m) as u32));
    }
    let mut w = Vec::with_capacity(1usize << (n + m));
    for hi in 0..1u32 << m {
        let right = scale2 * w2.get(hi);
        for lo in 0..1u32 << n {
            w.push((scale1 * w1.get(lo)).max(right));
        }
    }
    Ok(WeightTable { n: n + m, w })
}

/// The literal s-sum table: ω₁(x₁)+ω₂(x₂) on B₁(0,r) | B₂(0,s), and r+s+1
/// outside. The sub-level set at r+s equals B₁(0,r) | B₂(0,s) by
/// construction, but the table is not guaranteed to satisfy the triangle
/// axiom; the attached verdict says whether it does.
pub fn s_sum_literal(
    w1: &WeightTable,
    r: u32,
    w2: &WeightTable,
    s: u32,
) -> Result<(WeightTable, WeightVerdict), Error> {
    if r > s {
        return Err(Error::BadSSumRadii { r, s });
    }
    let n = w1.dim();
    let m = w2.dim();
    if n + m > MAX_DIM {
        return Err(Error::BadDimension((n + m) as u32));
    }
    let mut w = Vec::with_capacity(1usize << (n + m));
    for hi in 0..1u32 << m {
        let in2 = w2.get(hi) <= s;
        for lo in 0..1u32 << n {
            let v = if in2 && w1.get(lo) <= r {
                w1.get(lo) + w2.get(hi)
            } else {
                r + s + 1
            };
            w.push(v);
        }
    }
    let table = WeightTable { n: n + m, w };
    let verdict = table.validate();
    Ok((table, verdict))
}

/// Outcome of `decoding_equivalent`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equivalent,
    /// The strict orders disagree on this pair.
    Inequivalent { u: BitVector, v: BitVector },
}

/// Decoding equivalence of two translation-invariant metrics reduces to
/// agreement of the strict order of their weights.
pub fn decoding_equivalent(w1: &WeightTable, w2: &WeightTable) -> Result<Equivalence, Error> {
    if w1.dim() != w2.dim() {
        return Err(Error::DimensionMismatch { left: w1.dim(), right: w2.dim() });
    }
    let size = 1u32 << w1.dim();
    for u in 0..size {
        for v in 0..size {
            if (w1.get(u) < w1.get(v)) != (w2.get(u) < w2.get(v)) {
                return Ok(Equivalence::Inequivalent { u: w1.vec(u), v: w1.vec(v) });
            }
        }
    }
    Ok(Equivalence::Equivalent)
}

/// Replace the k distinct nonzero values, in increasing order, by
/// k, k+1, …, 2k−1. Any such table satisfies the triangle axiom outright,
/// preserves the strict order of values (so it is decoding-equivalent to
/// the input) and preserves TS status and sub-level sets.
pub fn metrize_by_rank(values: &WeightTable) -> Result<WeightTable, Error> {
    if values.get(0) != 0 {
        return Err(Error::InvalidWeight("value at 0 must be 0".into()));
    }
    let size = 1u32 << values.dim();
    for v in 1..size {
        if values.get(v) == 0 {
            return Err(Error::InvalidWeight(format!(
                "value at {} must be positive",
                values.vec(v)
            )));
        }
    }
    let mut distinct: Vec<u32> = values.w.iter().copied().filter(|&x| x != 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let k = distinct.len() as u32;
    let remap = |x: u32| -> u32 {
        if x == 0 {
            0
        } else {
            let i = distinct.binary_search(&x).expect("value present") as u32 + 1;
            k + i - 1
        }
    };
    Ok(WeightTable { n: values.dim(), w: values.w.iter().map(|&x| remap(x)).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn set(n: u8, members: &[&str]) -> VectorSet {
        VectorSet::from_vectors(n, members.iter().map(|s| v(s))).unwrap()
    }

    #[test]
    fn hamming_is_valid_ts() {
        let w = WeightTable::hamming(5).unwrap();
        let verdict = w.validate();
        assert!(verdict.is_valid_weight());
        assert!(verdict.is_ts());
        assert!(!verdict.triangle_skipped);
    }

    #[test]
    fn explicit_triangle_violation_has_witness() {
        // ω(11) = 5 > ω(01) + ω(10)
        let err = WeightTable::new(2, vec![0, 1, 1, 5]).unwrap_err();
        assert!(matches!(err, Error::InvalidWeight(_)));
        let t = WeightTable::from_raw(2, vec![0, 1, 1, 5]).unwrap();
        let verdict = t.validate();
        assert_eq!(
            verdict.violation,
            Some(WeightViolation::Triangle { u: v("10"), v: v("01") })
        );
    }

    #[test]
    fn ball_examples() {
        let w = WeightTable::hamming(7).unwrap();
        let b = w.ball(&BitVector::zero(7).unwrap(), 1).unwrap();
        assert_eq!(b.len(), 8);
        assert!(b.contains_mask(0));
        for i in 1..=7 {
            assert!(b.contains(&BitVector::unit(7, i).unwrap()));
        }

        let c = v("0110");
        let w4 = WeightTable::hamming(4).unwrap();
        assert_eq!(w4.ball(&c, 0).unwrap(), set(4, &["0110"]));
    }

    #[test]
    fn ball_translation_invariance_exhaustive() {
        let w = WeightTable::hamming(4).unwrap();
        let b0 = w.ball(&BitVector::zero(4).unwrap(), 1).unwrap();
        for c in VectorSet::full_cube(4).unwrap().iter() {
            assert_eq!(w.ball(&c, 1).unwrap(), b0.translate(&c).unwrap());
        }
    }

    #[test]
    fn two_level_examples() {
        let b1 = set(3, &["000", "100"]);
        let w = two_level_weight(&b1).unwrap();
        assert!(w.validate().is_ts());
        assert_eq!(w.ball(&BitVector::zero(3).unwrap(), 1).unwrap(), b1);

        let whole = VectorSet::full_cube(3).unwrap();
        let w = two_level_weight(&whole).unwrap();
        assert_eq!(w.max_value(), 1);
        assert_eq!(w.ball(&BitVector::zero(3).unwrap(), 1).unwrap(), whole);

        let bad = set(2, &["00", "11"]);
        assert!(matches!(two_level_weight(&bad), Err(Error::NotDownwardClosed { .. })));
    }

    #[test]
    fn is_ts_ball_examples() {
        let rejected = set(4, &["0000", "1000", "0100", "0010", "0001", "1010", "1001", "1011"]);
        match is_ts_ball(&rejected).unwrap() {
            TsBallVerdict::No { missing, .. } => assert_eq!(missing, v("0011")),
            _ => panic!("expected No"),
        }

        let b2 = set(3, &["000", "100", "010", "001"]);
        match is_ts_ball(&b2).unwrap() {
            TsBallVerdict::Yes { weight, radius } => {
                assert_eq!(radius, 1);
                assert_eq!(weight.ball(&BitVector::zero(3).unwrap(), 1).unwrap(), b2);
            }
            _ => panic!("expected Yes"),
        }
    }

    #[test]
    fn extend_weight_examples() {
        let w = WeightTable::hamming(3).unwrap();
        assert_eq!(extend_weight(&w, 3).unwrap(), w);
        let ext = extend_weight(&w, 6).unwrap();
        // supp ⊄ [3] costs M+1 = 4
        assert_eq!(ext.eval(&v("000100")).unwrap(), 4);
        assert_eq!(ext.eval(&v("110000")).unwrap(), 2);
        assert!(ext.validate().is_ts());
        // balls extend by | {0}
        let b = w.ball(&BitVector::zero(3).unwrap(), 1).unwrap();
        let bz = b.concat(&set(3, &["000"])).unwrap();
        assert_eq!(ext.ball(&BitVector::zero(6).unwrap(), 1).unwrap(), bz);
        assert!(extend_weight(&w, 2).is_err());
    }

    #[test]
    fn max_weight_examples() {
        let w = WeightTable::hamming(3).unwrap();
        let m = max_weight(&w, &w, 1, 1).unwrap();
        assert_eq!(m.get(0), 0);
        assert!(m.validate().is_ts());
        let b = w.ball(&BitVector::zero(3).unwrap(), 1).unwrap();
        let bb = b.concat(&b).unwrap();
        assert_eq!(m.ball(&BitVector::zero(6).unwrap(), 1).unwrap(), bb);

        // different radii via scales (s, r) = (2, 1)
        let scaled = max_weight(&w, &w, 2, 1).unwrap();
        let b1 = w.ball(&BitVector::zero(3).unwrap(), 1).unwrap();
        let b2 = w.ball(&BitVector::zero(3).unwrap(), 2).unwrap();
        assert_eq!(
            scaled.ball(&BitVector::zero(6).unwrap(), 2).unwrap(),
            b1.concat(&b2).unwrap()
        );
        assert!(max_weight(&w, &w, 0, 1).is_err());
    }

    #[test]
    fn s_sum_literal_fails_triangle_on_repetition_balls() {
        let w = WeightTable::hamming(3).unwrap();
        let (table, verdict) = s_sum_literal(&w, 1, &w, 1).unwrap();
        assert_eq!(table.get(0), 0);
        // inside D1|D2 the table is the sum
        assert_eq!(table.eval(&v("100100")).unwrap(), 2);
        assert_eq!(
            verdict.violation,
            Some(WeightViolation::Triangle { u: v("100000"), v: v("010000") })
        );
        // sub-level set at r+s is still D1|D2
        let b = w.ball(&BitVector::zero(3).unwrap(), 1).unwrap();
        let bb = b.concat(&b).unwrap();
        assert_eq!(table.ball(&BitVector::zero(6).unwrap(), 2).unwrap(), bb);
        assert!(s_sum_literal(&w, 2, &w, 1).is_err());
    }

    #[test]
    fn decoding_equivalence_examples() {
        let w = WeightTable::hamming(3).unwrap();
        let doubled = WeightTable::from_raw(3, w.values().iter().map(|&x| 2 * x).collect()).unwrap();
        assert_eq!(decoding_equivalent(&w, &doubled).unwrap(), Equivalence::Equivalent);

        let chain = Poset::from_covers(3, &[(1, 2), (2, 3)]).unwrap();
        let chain_w = chain.weight_table().unwrap();
        match decoding_equivalent(&w, &chain_w).unwrap() {
            Equivalence::Inequivalent { u, v: vv } => {
                // hamming orders them one way, the chain the other
                assert_ne!(
                    w.eval(&u).unwrap() < w.eval(&vv).unwrap(),
                    chain_w.eval(&u).unwrap() < chain_w.eval(&vv).unwrap()
                );
            }
            _ => panic!("expected inequivalent"),
        }

        let m = metrize_by_rank(&w).unwrap();
        assert_eq!(decoding_equivalent(&w, &m).unwrap(), Equivalence::Equivalent);
    }

    #[test]
    fn metrize_by_rank_examples() {
        let two = WeightTable::from_raw(2, vec![0, 1, 2, 1]).unwrap();
        let m = metrize_by_rank(&two).unwrap();
        assert_eq!(m.values(), &[0, 2, 3, 2]);

        let w = WeightTable::hamming(3).unwrap();
        let m = metrize_by_rank(&w).unwrap();
        let mut distinct: Vec<u32> = m.values().iter().copied().filter(|&x| x != 0).collect();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct, vec![3, 4, 5]);
        assert!(m.validate().is_ts());

        // fixes the failing s-sum table
        let (bad, _) = s_sum_literal(&w, 1, &w, 1).unwrap();
        let fixed = metrize_by_rank(&bad).unwrap();
        assert!(fixed.validate().is_ts());
        assert!(metrize_by_rank(&WeightTable::from_raw(1, vec![1, 1]).unwrap()).is_err());
    }
}
