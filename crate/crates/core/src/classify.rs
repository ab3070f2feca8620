//! Classification of small tiles: enumerate downward-closed candidates up
//! to coordinate permutation, decide tilability by exact cover, attach the
//! table witnesses, and search for poset/combinatorial realizations.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypercube::{BitVector, VectorSet};
use crate::metrics::{all_posets, is_ts_ball, Covering, Poset, TsBallVerdict, WeightTable};
use crate::tilings::complete_tiling;

/// One row of the classification report.
#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    /// Canonical tile, living in F₂^rank.
    pub tile: VectorSet,
    pub size: usize,
    pub rank: u32,
    /// Exact-cover verdict, decided in F₂^rank.
    pub is_tile: bool,
    pub ts: TsBallVerdict,
    pub realizations: Vec<Realization>,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub witness: RealizationWitness,
    pub radius: u32,
}

#[derive(Clone, Debug)]
pub enum RealizationWitness {
    Poset(Poset),
    Combinatorial(Covering),
}

impl RealizationWitness {
    pub fn weight_table(&self) -> Result<WeightTable, Error> {
        match self {
            RealizationWitness::Poset(p) => p.weight_table(),
            RealizationWitness::Combinatorial(f) => f.weight_table(),
        }
    }
}

/// All downward-closed subsets of F₂^max_rank containing 0 with exactly
/// `size` elements, deduplicated by canonical form and sorted canonically.
/// Grown one mask at a time; a mask is addable once all its one-bit
/// deletions are present.
pub fn enumerate_downward_closed(size: usize, max_rank: u8) -> Result<Vec<VectorSet>, Error> {
    if !matches!(size, 2 | 4 | 8) {
        return Err(Error::UnsupportedSize(size));
    }
    if max_rank == 0 || max_rank > 7 {
        return Err(Error::BadDimension(max_rank as u32));
    }
    let n = max_rank;
    let start = VectorSet::from_masks(n, [0])?.canonical_form()?;
    let mut level: Vec<VectorSet> = vec![start];
    for _ in 1..size {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut next_level = Vec::new();
        for s in &level {
            for m in 1..1u32 << n {
                if s.contains_mask(m) || !deletions_present(s, m) {
                    continue;
                }
                let mut grown = s.clone();
                grown.insert(BitVector::new(n, m)?)?;
                let canon = grown.canonical_form()?;
                if seen.insert(canon.masks().collect()) {
                    next_level.push(canon);
                }
            }
        }
        level = next_level;
    }
    level.sort_by_key(|s| s.masks().collect::<Vec<_>>());
    Ok(level)
}

fn deletions_present(s: &VectorSet, m: u32) -> bool {
    let mut rem = m;
    while rem != 0 {
        let bit = rem & rem.wrapping_neg();
        rem ^= bit;
        if !s.contains_mask(m ^ bit) {
            return false;
        }
    }
    true
}

/// Classify all size-2, size-4 or size-8 candidates: canonical tile,
/// tilability (decided in F₂^rank), TS-ball status, and the verified table
/// witnesses where one is on file.
pub fn classify_small_tiles(size: usize) -> Result<Vec<ClassificationRecord>, Error> {
    let max_rank = (size as u8 - 1).min(7);
    let fixtures = table_fixtures()?;
    let mut records = Vec::new();
    for candidate in enumerate_downward_closed(size, max_rank)? {
        let rank = candidate.rank();
        // canonical downward-closed sets occupy their first `rank` coordinates
        let tile = candidate.restrict_to(rank as u8)?;
        let is_tile = complete_tiling(rank as u8, &tile)?.is_some();
        let ts = is_ts_ball(&tile)?;
        let realizations = fixtures
            .iter()
            .filter(|f| f.canonical == tile)
            .map(|f| f.realization_for(&tile))
            .collect::<Result<Vec<_>, _>>()?;
        records.push(ClassificationRecord { tile, size, rank, is_tile, ts, realizations });
    }
    Ok(records)
}

/// All posets on the ground set of D (labeled) and radii r with
/// B_P(0, r) = D. Radii range over 1 ≤ r ≤ M(ω_P).
pub fn realize_poset(tile: &VectorSet, allow_rank7: bool) -> Result<Vec<(Poset, u32)>, Error> {
    let s = tile.dim();
    let mut out = Vec::new();
    for poset in all_posets(s, allow_rank7)? {
        let table = poset.weight_table()?;
        for r in realizing_radii(&table, tile) {
            out.push((poset.clone(), r));
        }
    }
    Ok(out)
}

/// All coverings of the ground set of D within the stated bounds, with the
/// radii realizing D as the ball. Exhaustive within the bounds.
pub fn realize_combinatorial(
    tile: &VectorSet,
    max_blocks: usize,
    max_block_size: usize,
) -> Result<Vec<(Covering, u32)>, Error> {
    let s = tile.dim();
    let candidate_blocks: Vec<u32> = (1..1u32 << s)
        .filter(|m| m.count_ones() as usize <= max_block_size)
        .collect();
    let full = (1u32 << s) - 1;
    let mut out = Vec::new();
    for k in 1..=max_blocks {
        for blocks in candidate_blocks.iter().copied().combinations(k) {
            if blocks.iter().fold(0u32, |a, &b| a | b) != full {
                continue;
            }
            let covering = Covering::from_masks(s, blocks)?;
            let table = covering.weight_table()?;
            for r in realizing_radii(&table, tile) {
                out.push((covering.clone(), r));
            }
        }
    }
    Ok(out)
}

/// Radii r with {v : ω(v) ≤ r} = D, clamped to 1 ≤ r ≤ M(ω).
fn realizing_radii(table: &WeightTable, tile: &VectorSet) -> std::ops::RangeInclusive<u32> {
    let mut max_in = 0u32;
    let mut min_out = u32::MAX;
    for v in 0..1u32 << table.dim() {
        if tile.contains_mask(v) {
            max_in = max_in.max(table.get(v));
        } else {
            min_out = min_out.min(table.get(v));
        }
    }
    let hi = min_out.saturating_sub(1).min(table.max_value());
    let lo = max_in.max(1);
    lo..=hi
}

/// A table witness shipped with the crate: a named tile, a radius and a
/// poset or covering whose ball at that radius is the tile. Loaded from
/// data and re-verified on every use.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub n: u8,
    pub tile: Vec<String>,
    pub radius: u32,
    pub witness: FixtureWitness,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FixtureWitness {
    Poset { covers: Vec<(usize, usize)> },
    Combinatorial { blocks: Vec<Vec<usize>> },
}

/// A fixture whose witness has been checked against its tile.
#[derive(Clone, Debug)]
pub struct VerifiedFixture {
    pub name: String,
    /// Tile in the coordinates the fixture states.
    pub tile: VectorSet,
    /// Canonical form of the tile; classification records are keyed on it.
    pub canonical: VectorSet,
    pub radius: u32,
    pub witness: RealizationWitness,
}

const TABLE_FIXTURES: &str = include_str!("../data/table_fixtures.json");

/// Load and verify the shipped witnesses for the classification tables.
pub fn table_fixtures() -> Result<Vec<VerifiedFixture>, Error> {
    let fixtures: Vec<Fixture> = serde_json::from_str(TABLE_FIXTURES)
        .map_err(|e| Error::FixtureMismatch { name: "table_fixtures".into(), reason: e.to_string() })?;
    fixtures.into_iter().map(verify_fixture).collect()
}

fn verify_fixture(f: Fixture) -> Result<VerifiedFixture, Error> {
    let vectors: Result<Vec<BitVector>, Error> = f.tile.iter().map(|s| s.parse()).collect();
    let tile = VectorSet::from_vectors(f.n, vectors?)?;
    let witness = match &f.witness {
        FixtureWitness::Poset { covers } => RealizationWitness::Poset(Poset::from_covers(f.n, covers)?),
        FixtureWitness::Combinatorial { blocks } => {
            RealizationWitness::Combinatorial(Covering::from_blocks(f.n, blocks)?)
        }
    };
    let table = witness.weight_table()?;
    let ball = table.ball(&BitVector::zero(f.n)?, f.radius)?;
    if ball != tile {
        return Err(Error::FixtureMismatch {
            name: f.name,
            reason: format!("ball at radius {} does not equal the stated tile", f.radius),
        });
    }
    let canonical = tile.canonical_form()?;
    Ok(VerifiedFixture { name: f.name, tile, canonical, radius: f.radius, witness })
}

impl VerifiedFixture {
    /// Re-express the witness in the coordinates of a permutation-equivalent
    /// tile, verifying the ball round-trips there too.
    pub fn realization_for(&self, tile: &VectorSet) -> Result<Realization, Error> {
        if tile.canonical_form()? != self.canonical {
            return Err(Error::FixtureMismatch {
                name: self.name.clone(),
                reason: "tile is not permutation-equivalent to the fixture".into(),
            });
        }
        // π maps the fixture's coordinates onto the canonical ones; the
        // target tile needs the canonicalizing detour undone
        let (_, to_canon) = self.tile.canonical_form_with_perm()?;
        let (_, tile_to_canon) = tile.canonical_form_with_perm()?;
        let perm = compose(&to_canon, &invert(&tile_to_canon));
        let witness = match &self.witness {
            RealizationWitness::Poset(p) => RealizationWitness::Poset(p.apply_permutation(&perm)?),
            RealizationWitness::Combinatorial(f) => {
                RealizationWitness::Combinatorial(f.apply_permutation(&perm)?)
            }
        };
        let table = witness.weight_table()?;
        let ball = table.ball(&BitVector::zero(tile.dim())?, self.radius)?;
        if &ball != tile {
            return Err(Error::FixtureMismatch {
                name: self.name.clone(),
                reason: "permuted witness does not realize the tile".into(),
            });
        }
        Ok(Realization { witness, radius: self.radius })
    }
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// first `a`, then `b`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}
