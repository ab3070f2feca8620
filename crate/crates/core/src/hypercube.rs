//! Bit-level core of F₂ⁿ: vectors, supports, geodesic paths, polyhedromino
//! testing, rank and canonical forms under coordinate permutation.
//!
//! Coordinate i of [n] is 1-based in every user-facing surface and lives in
//! bit i−1 internally, so eᵢ = `1 << (i-1)`. The text form of a vector is a
//! '0'/'1' string of length n with coordinate 1 leftmost.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::Error;

/// Largest supported dimension; a full weight table has 2ⁿ entries.
pub const MAX_DIM: u8 = 24;

fn check_dim(n: u8) -> Result<(), Error> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::BadDimension(n as u32));
    }
    Ok(())
}

/// An element of F₂ⁿ stored as an n-bit word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVector {
    n: u8,
    bits: u32,
}

impl BitVector {
    pub fn new(n: u8, bits: u32) -> Result<Self, Error> {
        check_dim(n)?;
        if bits >> n != 0 {
            return Err(Error::BitsOutOfRange { n, bits });
        }
        Ok(BitVector { n, bits })
    }

    pub fn zero(n: u8) -> Result<Self, Error> {
        Self::new(n, 0)
    }

    /// eᵢ with 1-based coordinate i.
    pub fn unit(n: u8, i: usize) -> Result<Self, Error> {
        check_dim(n)?;
        if i == 0 || i > n as usize {
            return Err(Error::CoordinateOutOfRange(i, n));
        }
        Ok(BitVector { n, bits: 1 << (i - 1) })
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// supp(x) as 1-based coordinate indices.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n as usize)
            .filter(|&i| self.bits >> (i - 1) & 1 == 1)
            .collect()
    }

    /// ω_H(x).
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinatewise sum over F₂ (XOR). x + x = 0.
    pub fn add(&self, other: &BitVector) -> Result<BitVector, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(BitVector { n: self.n, bits: self.bits ^ other.bits })
    }

    /// x₁ | x₂: self occupies coordinates 1..n, other the following m.
    pub fn concat(&self, other: &BitVector) -> Result<BitVector, Error> {
        let n = self.n + other.n;
        check_dim(n)?;
        Ok(BitVector { n, bits: self.bits | other.bits << self.n })
    }

    /// Inverse of `concat`: (x over first s coordinates, x over the rest).
    pub fn split(&self, s: u8) -> Result<(BitVector, BitVector), Error> {
        if s == 0 || s >= self.n {
            return Err(Error::BadDimension(s as u32));
        }
        let lo = self.bits & ((1 << s) - 1);
        let hi = self.bits >> s;
        Ok((BitVector { n: s, bits: lo }, BitVector { n: self.n - s, bits: hi }))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.bits >> i & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self)
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let n = s.len();
        if n == 0 || n > MAX_DIM as usize {
            return Err(Error::BadVectorLiteral(s.to_string()));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::BadVectorLiteral(s.to_string())),
            }
        }
        Ok(BitVector { n: n as u8, bits })
    }
}

/// A subset of F₂ⁿ with exact membership.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorSet {
    n: u8,
    members: BTreeSet<u32>,
}

impl VectorSet {
    pub fn empty(n: u8) -> Result<Self, Error> {
        check_dim(n)?;
        Ok(VectorSet { n, members: BTreeSet::new() })
    }

    pub fn full_cube(n: u8) -> Result<Self, Error> {
        check_dim(n)?;
        Ok(VectorSet { n, members: (0..1u32 << n).collect() })
    }

    pub fn from_masks<I: IntoIterator<Item = u32>>(n: u8, masks: I) -> Result<Self, Error> {
        let mut set = Self::empty(n)?;
        for m in masks {
            if m >> n != 0 {
                return Err(Error::BitsOutOfRange { n, bits: m });
            }
            set.members.insert(m);
        }
        Ok(set)
    }

    pub fn from_vectors<I: IntoIterator<Item = BitVector>>(n: u8, vectors: I) -> Result<Self, Error> {
        let mut set = Self::empty(n)?;
        for v in vectors {
            set.insert(v)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, v: BitVector) -> Result<(), Error> {
        if v.n != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: v.n });
        }
        self.members.insert(v.bits);
        Ok(())
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.n == self.n && self.members.contains(&v.bits)
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        self.members.contains(&mask)
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        let n = self.n;
        self.members.iter().map(move |&bits| BitVector { n, bits })
    }

    /// c ⊕ S.
    pub fn translate(&self, c: &BitVector) -> Result<VectorSet, Error> {
        if c.n != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: c.n });
        }
        Ok(VectorSet {
            n: self.n,
            members: self.members.iter().map(|m| m ^ c.bits).collect(),
        })
    }

    /// A | B over F₂ⁿ⁺ᵐ.
    pub fn concat(&self, other: &VectorSet) -> Result<VectorSet, Error> {
        let n = self.n + other.n;
        check_dim(n)?;
        let mut members = BTreeSet::new();
        for a in &self.members {
            for b in &other.members {
                members.insert(a | b << self.n);
            }
        }
        Ok(VectorSet { n, members })
    }

    /// Reinterpret in F₂ᵐ; every member must fit in m bits.
    pub fn restrict_to(&self, m: u8) -> Result<VectorSet, Error> {
        check_dim(m)?;
        for &v in &self.members {
            if v >> m != 0 {
                return Err(Error::BitsOutOfRange { n: m, bits: v });
            }
        }
        Ok(VectorSet { n: m, members: self.members.clone() })
    }

    /// True iff every submask of every member is a member.
    pub fn is_downward_closed(&self) -> bool {
        self.downward_closure_witness().is_none()
    }

    /// First member whose strict submask is missing, with that submask.
    pub fn downward_closure_witness(&self) -> Option<(BitVector, BitVector)> {
        for &m in &self.members {
            // enumerate strict submasks of m
            let mut sub = m.wrapping_sub(1) & m;
            loop {
                if !self.members.contains(&sub) {
                    return Some((BitVector { n: self.n, bits: m }, BitVector { n: self.n, bits: sub }));
                }
                if sub == 0 {
                    break;
                }
                sub = sub.wrapping_sub(1) & m;
            }
        }
        None
    }

    /// True iff some geodesic from x to y stays inside the set. Only monotone
    /// flips (coordinates of x ⊕ y, each flipped once) need to be explored;
    /// these are exactly the geodesics.
    pub fn geodesic_within(&self, x: &BitVector, y: &BitVector) -> Result<bool, Error> {
        if !self.contains(x) {
            return Err(Error::NotAMember(x.to_string()));
        }
        if !self.contains(y) {
            return Err(Error::NotAMember(y.to_string()));
        }
        let mut dead = HashSet::new();
        Ok(self.geodesic_dfs(x.bits, y.bits, &mut dead))
    }

    fn geodesic_dfs(&self, cur: u32, target: u32, dead: &mut HashSet<u32>) -> bool {
        if cur == target {
            return true;
        }
        if dead.contains(&cur) {
            return false;
        }
        let mut remaining = cur ^ target;
        while remaining != 0 {
            let bit = remaining & remaining.wrapping_neg();
            remaining ^= bit;
            let next = cur ^ bit;
            if self.members.contains(&next) && self.geodesic_dfs(next, target, dead) {
                return true;
            }
        }
        dead.insert(cur);
        false
    }

    /// Polyhedromino test: every pair of members is joined by a geodesic
    /// inside the set.
    pub fn is_polyhedromino(&self) -> Result<bool, Error> {
        if self.members.is_empty() {
            return Err(Error::EmptySet);
        }
        let vs: Vec<u32> = self.members.iter().copied().collect();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                let mut dead = HashSet::new();
                if !self.geodesic_dfs(x, y, &mut dead) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// dim⟨S⟩ over F₂, by Gaussian elimination.
    pub fn rank(&self) -> u32 {
        let mut basis: Vec<u32> = Vec::new();
        for &v in &self.members {
            let mut v = v;
            for &b in &basis {
                let pivot = 1 << (31 - b.leading_zeros());
                if v & pivot != 0 {
                    v ^= b;
                }
            }
            if v != 0 {
                basis.push(v);
            }
        }
        basis.len() as u32
    }

    /// Image of the set under a coordinate permutation; `perm[i]` is the
    /// 0-based target position of source bit i.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<VectorSet, Error> {
        if perm.len() != self.n as usize {
            return Err(Error::DimensionMismatch { left: self.n, right: perm.len() as u8 });
        }
        let members = self
            .members
            .iter()
            .map(|&m| permute_mask(m, perm))
            .collect();
        Ok(VectorSet { n: self.n, members })
    }

    /// Lexicographically least image over all n! coordinate permutations,
    /// comparing sets as sorted integer sequences. Two sets are
    /// permutation-equivalent iff their canonical forms are equal.
    pub fn canonical_form(&self) -> Result<VectorSet, Error> {
        Ok(self.canonical_form_with_perm()?.0)
    }

    /// Canonical form plus one permutation achieving it.
    pub fn canonical_form_with_perm(&self) -> Result<(VectorSet, Vec<usize>), Error> {
        if self.n > 8 {
            return Err(Error::CanonicalDimensionTooLarge(self.n));
        }
        let n = self.n as usize;
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        for perm in (0..n).permutations(n) {
            let mut image: Vec<u32> = self.members.iter().map(|&m| permute_mask(m, &perm)).collect();
            image.sort_unstable();
            match &best {
                Some((b, _)) if *b <= image => {}
                _ => best = Some((image, perm)),
            }
        }
        let (members, perm) = best.expect("at least the identity permutation");
        Ok((
            VectorSet { n: self.n, members: members.into_iter().collect() },
            perm,
        ))
    }

    /// Members as sorted text forms, the order used in all file formats.
    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(|v| v.to_string()).collect()
    }
}

/// Visit every downward-closed subset of F₂ⁿ that contains 0. Masks are
/// considered in increasing numeric order, which puts every submask before
/// its supersets.
pub fn for_each_downset_containing_zero(n: u8, f: &mut dyn FnMut(&VectorSet)) {
    fn rec(n: u8, next: u32, current: &mut BTreeSet<u32>, f: &mut dyn FnMut(&VectorSet)) {
        if next == 1u32 << n {
            let s = VectorSet::from_masks(n, current.iter().copied()).expect("masks in range");
            f(&s);
            return;
        }
        rec(n, next + 1, current, f);
        let mut ok = true;
        let mut rem = next;
        while rem != 0 {
            let bit = rem & rem.wrapping_neg();
            rem ^= bit;
            if !current.contains(&(next ^ bit)) {
                ok = false;
                break;
            }
        }
        if ok {
            current.insert(next);
            rec(n, next + 1, current, f);
            current.remove(&next);
        }
    }
    let mut current = BTreeSet::from([0u32]);
    rec(n, 1, &mut current, f);
}

pub(crate) fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (i, &p) in perm.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << p;
        }
    }
    out
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
    fn support_and_weight() {
        assert_eq!(v("0000").support(), Vec::<usize>::new());
        assert_eq!(v("1010").support(), vec![1, 3]);
        assert_eq!(v("1111111").support(), (1..=7).collect::<Vec<_>>());
        assert_eq!(v("0000").weight(), 0);
        assert_eq!(v("1010").weight(), 2);
        assert_eq!(v("1111111").weight(), 7);
    }

    #[test]
    fn add_is_xor() {
        assert_eq!(v("1010").add(&v("0110")).unwrap(), v("1100"));
        let x = v("1011");
        assert!(x.add(&x).unwrap().is_zero());
        assert_eq!(x.add(&BitVector::zero(4).unwrap()).unwrap(), x);
        assert!(v("10").add(&v("100")).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["1010", "0000", "1", "111", "0101100"] {
            assert_eq!(v(s).to_string(), s);
        }
        assert!("10a1".parse::<BitVector>().is_err());
        assert!("".parse::<BitVector>().is_err());
    }

    #[test]
    fn downward_closed_examples() {
        // B3 of the small-ball classification
        assert!(set(4, &["0000", "1000", "0100", "1100"]).is_downward_closed());
        // eliminated size-8 tile: e3+e4 is absent
        let d = set(4, &["0000", "1000", "0100", "0010", "0001", "1010", "1001", "1011"]);
        assert!(!d.is_downward_closed());
        let (member, missing) = d.downward_closure_witness().unwrap();
        assert_eq!(missing, v("0011"));
        assert_eq!(member, v("1011"));
        assert!(set(3, &["000"]).is_downward_closed());
    }

    #[test]
    fn geodesics() {
        let full = VectorSet::full_cube(3).unwrap();
        for x in full.iter().collect::<Vec<_>>() {
            for y in full.iter().collect::<Vec<_>>() {
                assert!(full.geodesic_within(&x, &y).unwrap());
            }
        }
        let gap = set(2, &["00", "11"]);
        assert!(!gap.geodesic_within(&v("00"), &v("11")).unwrap());
        let path = set(3, &["000", "100", "010", "110"]);
        assert!(path.geodesic_within(&v("010"), &v("100")).unwrap());
        assert!(path.geodesic_within(&v("100"), &v("010")).unwrap());
        assert!(gap.geodesic_within(&v("01"), &v("11")).is_err());
    }

    #[test]
    fn polyhedromino_examples() {
        // D1^4 of the classification tables
        let d14 = set(4, &["0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001"]);
        assert!(d14.is_polyhedromino().unwrap());
        assert!(!set(2, &["00", "11"]).is_polyhedromino().unwrap());
        assert!(set(3, &["101"]).is_polyhedromino().unwrap());
        assert!(VectorSet::empty(2).unwrap().is_polyhedromino().is_err());
    }

    #[test]
    fn rank_examples() {
        let d14 = set(4, &["0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001"]);
        assert_eq!(d14.rank(), 4);
        assert_eq!(set(3, &["000"]).rank(), 0);
        let units = VectorSet::from_masks(7, (0..7).map(|i| 1 << i).chain([0])).unwrap();
        assert_eq!(units.rank(), 7);
    }

    #[test]
    fn canonical_form_examples() {
        let s = set(3, &["000", "001"]);
        assert_eq!(s.canonical_form().unwrap(), set(3, &["000", "100"]));

        // orbit invariance under a permutation
        let d24 = set(4, &["0000", "1000", "0100", "0010", "0001", "1100", "1010", "0110"]);
        let swapped = d24.apply_permutation(&[1, 0, 2, 3]).unwrap();
        assert_eq!(d24.canonical_form().unwrap(), swapped.canonical_form().unwrap());

        let (canon, perm) = d24.canonical_form_with_perm().unwrap();
        assert_eq!(d24.apply_permutation(&perm).unwrap(), canon);
        assert_eq!(canon.len(), d24.len());
        assert_eq!(canon.rank(), d24.rank());
    }

    #[test]
    fn downward_closed_with_zero_implies_polyhedromino_small() {
        // exhaustive over all downward-closed subsets of F2^4 containing 0
        let mut count = 0usize;
        for_each_downset_containing_zero(4, &mut |s: &VectorSet| {
            count += 1;
            assert!(s.is_polyhedromino().unwrap(), "failed for {:?}", s);
        });
        assert_eq!(count, 167); // Dedekind number M(4) minus the empty family
    }
}
