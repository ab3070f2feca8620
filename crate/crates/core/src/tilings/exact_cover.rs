//! Tiling completion by exact-cover search: columns are the points of the
//! cube, rows are candidate translate centers. The search decides
//! tilability in F₂^rank(D) after basis reduction, then lifts the code back
//! through the complement subspace.

use crate::error::Error;
use crate::hypercube::VectorSet;

/// Largest reduced dimension the search will take on.
const SEARCH_MAX_DIM: u8 = 16;

/// Find a code C with (D, C) a tiling of F₂ⁿ, or None if D is not a tile.
/// The code found in the reduced space is the lexicographically least one
/// (by sorted integer sequence); the overall output is deterministic.
pub fn complete_tiling(n: u8, tile: &VectorSet) -> Result<Option<VectorSet>, Error> {
    if tile.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: tile.dim() });
    }
    if tile.is_empty() {
        return Err(Error::EmptySet);
    }
    if !tile.contains_mask(0) {
        return Err(Error::ZeroNotMember);
    }
    // |D| · |C| = 2ⁿ forces |D| to be a power of two
    let d_len = tile.len();
    if !d_len.is_power_of_two() || d_len > 1usize << n {
        return Ok(None);
    }
    if d_len == 1 {
        return Ok(Some(VectorSet::full_cube(n)?));
    }

    // reduced row echelon basis of span(D), pivots = highest set bits
    let mut basis: Vec<u32> = Vec::new();
    for v in tile.masks() {
        let mut v = v;
        for &b in &basis {
            if v & pivot_of(b) != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            let p = pivot_of(v);
            for b in basis.iter_mut() {
                if *b & p != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
    }
    basis.sort_unstable_by_key(|&b| pivot_of(b));
    let s = basis.len() as u8;
    if s > SEARCH_MAX_DIM {
        return Err(Error::SearchDimensionTooLarge(s));
    }
    debug_assert!(d_len <= 1usize << s, "D is contained in its span");

    // express members in basis coordinates
    let reduced: Vec<u32> = tile
        .masks()
        .map(|m| {
            let mut m = m;
            let mut coords = 0u32;
            for (k, &b) in basis.iter().enumerate() {
                if m & pivot_of(b) != 0 {
                    coords |= 1 << k;
                    m ^= b;
                }
            }
            debug_assert_eq!(m, 0, "member lies in the span of the basis");
            coords
        })
        .collect();

    let code_reduced = match lex_least_code(s, &reduced) {
        Some(code) => code,
        None => return Ok(None),
    };

    // lift through the basis and multiply by the complement subspace
    let pivot_mask: u32 = basis.iter().map(|&b| pivot_of(b)).fold(0, |a, p| a | p);
    let free_bits: Vec<u8> = (0..n).filter(|&i| pivot_mask >> i & 1 == 0).collect();
    let mut code = Vec::with_capacity(code_reduced.len() << free_bits.len());
    for &c in &code_reduced {
        let lifted = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| c >> k & 1 == 1)
            .fold(0u32, |acc, (_, &b)| acc ^ b);
        for idx in 0..1u32 << free_bits.len() {
            let w = free_bits
                .iter()
                .enumerate()
                .filter(|(j, _)| idx >> j & 1 == 1)
                .fold(0u32, |acc, (_, &bit)| acc | 1 << bit);
            code.push(lifted ^ w);
        }
    }
    let code = VectorSet::from_masks(n, code)?;
    debug_assert!(matches!(
        super::verify_tiling(n, tile, &code),
        Ok(v) if v.is_valid()
    ));
    Ok(Some(code))
}

fn pivot_of(b: u32) -> u32 {
    1 << (31 - b.leading_zeros())
}

/// Lexicographically least exact cover of F₂ˢ by translates of the tile,
/// with center 0 forced. Builds the code in increasing order, committing to
/// the smallest next center whose remainder is still completable by larger
/// centers.
fn lex_least_code(s: u8, tile: &[u32]) -> Option<Vec<u32>> {
    let size = 1usize << s;
    let mut search = Searcher { tile, covered: vec![false; size], remaining: size };
    search.cover(0);
    let mut code = vec![0u32];
    while search.remaining > 0 {
        let last = *code.last().expect("code starts with 0");
        let mut committed = false;
        for c in last + 1..size as u32 {
            if !search.translate_free(c) {
                continue;
            }
            search.cover(c);
            if search.completable(c + 1) {
                code.push(c);
                committed = true;
                break;
            }
            search.uncover(c);
        }
        if !committed {
            return None;
        }
    }
    Some(code)
}

struct Searcher<'a> {
    tile: &'a [u32],
    covered: Vec<bool>,
    remaining: usize,
}

impl Searcher<'_> {
    fn translate_free(&self, c: u32) -> bool {
        self.tile.iter().all(|&d| !self.covered[(c ^ d) as usize])
    }

    fn cover(&mut self, c: u32) {
        for &d in self.tile {
            self.covered[(c ^ d) as usize] = true;
        }
        self.remaining -= self.tile.len();
    }

    fn uncover(&mut self, c: u32) {
        for &d in self.tile {
            self.covered[(c ^ d) as usize] = false;
        }
        self.remaining += self.tile.len();
    }

    /// Exact-cover decision: can the uncovered points be partitioned by
    /// translates with centers ≥ min_center? Branches on the smallest
    /// uncovered point.
    fn completable(&mut self, min_center: u32) -> bool {
        if self.remaining == 0 {
            return true;
        }
        let p = self.covered.iter().position(|&c| !c).expect("remaining > 0") as u32;
        for i in 0..self.tile.len() {
            let c = p ^ self.tile[i];
            if c >= min_center && self.translate_free(c) {
                self.cover(c);
                let ok = self.completable(min_center);
                self.uncover(c);
                if ok {
                    return true;
                }
            }
        }
        false
    }
}
