//! JSON file formats: posets as cover pairs, coverings as block lists,
//! weight tables as flat arrays, vector sets and tilings in the '0'/'1'
//! text form (coordinate 1 leftmost).

use serde::{Deserialize, Serialize};

use crate::classify::{ClassificationRecord, Realization, RealizationWitness};
use crate::error::Error;
use crate::hypercube::{BitVector, VectorSet};
use crate::metrics::{Covering, Poset, TsBallVerdict, WeightTable};
use crate::tilings::Tiling;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PosetFile {
    pub n: u8,
    pub covers: Vec<(usize, usize)>,
}

impl PosetFile {
    pub fn to_poset(&self) -> Result<Poset, Error> {
        Poset::from_covers(self.n, &self.covers)
    }

    pub fn from_poset(p: &Poset) -> Self {
        PosetFile { n: p.dim(), covers: p.cover_pairs() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CoveringFile {
    pub n: u8,
    pub blocks: Vec<Vec<usize>>,
}

impl CoveringFile {
    pub fn to_covering(&self) -> Result<Covering, Error> {
        Covering::from_blocks(self.n, &self.blocks)
    }

    pub fn from_covering(f: &Covering) -> Self {
        CoveringFile { n: f.dim(), blocks: f.blocks_as_indices() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct WeightTableFile {
    pub n: u8,
    pub weights: Vec<u32>,
}

impl WeightTableFile {
    /// Unvalidated container; run `WeightTable::validate` (or use
    /// `to_valid_table`) as the context requires.
    pub fn to_raw_table(&self) -> Result<WeightTable, Error> {
        WeightTable::from_raw(self.n, self.weights.clone())
    }

    pub fn to_valid_table(&self) -> Result<WeightTable, Error> {
        WeightTable::new(self.n, self.weights.clone())
    }

    pub fn from_table(w: &WeightTable) -> Self {
        WeightTableFile { n: w.dim(), weights: w.values().to_vec() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct VectorSetFile {
    pub n: u8,
    pub members: Vec<String>,
}

impl VectorSetFile {
    pub fn to_set(&self) -> Result<VectorSet, Error> {
        let vectors: Result<Vec<BitVector>, Error> =
            self.members.iter().map(|s| s.parse()).collect();
        let vectors = vectors?;
        for v in &vectors {
            if v.dim() != self.n {
                return Err(Error::DimensionMismatch { left: self.n, right: v.dim() });
            }
        }
        VectorSet::from_vectors(self.n, vectors)
    }

    pub fn from_set(s: &VectorSet) -> Self {
        VectorSetFile { n: s.dim(), members: s.to_strings() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TilingFile {
    pub n: u8,
    pub tile: Vec<String>,
    pub code: Vec<String>,
}

impl TilingFile {
    pub fn to_tiling(&self) -> Result<Tiling, Error> {
        let tile = VectorSetFile { n: self.n, members: self.tile.clone() }.to_set()?;
        let code = VectorSetFile { n: self.n, members: self.code.clone() }.to_set()?;
        Tiling::new(self.n, tile, code)
    }

    /// Tile and code as given, without requiring them to verify.
    pub fn to_parts(&self) -> Result<(u8, VectorSet, VectorSet), Error> {
        let tile = VectorSetFile { n: self.n, members: self.tile.clone() }.to_set()?;
        let code = VectorSetFile { n: self.n, members: self.code.clone() }.to_set()?;
        Ok((self.n, tile, code))
    }

    pub fn from_tiling(t: &Tiling) -> Self {
        TilingFile {
            n: t.dim(),
            tile: t.tile().to_strings(),
            code: t.code().to_strings(),
        }
    }
}

/// One witness metric attached to a classification record.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RealizationDto {
    Poset { covers: Vec<(usize, usize)>, radius: u32 },
    Combinatorial { blocks: Vec<Vec<usize>>, radius: u32 },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TsStatusDto {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TsWitnessDto>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TsWitnessDto {
    pub member: String,
    pub missing: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ClassificationRecordDto {
    pub tile: Vec<String>,
    pub rank: u32,
    pub size: usize,
    pub is_tile: bool,
    pub ts: TsStatusDto,
    pub realizations: Vec<RealizationDto>,
}

impl ClassificationRecordDto {
    pub fn from_record(r: &ClassificationRecord) -> Self {
        let ts = match &r.ts {
            TsBallVerdict::Yes { .. } => TsStatusDto { status: "yes".into(), witness: None },
            TsBallVerdict::No { member, missing } => TsStatusDto {
                status: "no".into(),
                witness: Some(TsWitnessDto {
                    member: member.to_string(),
                    missing: missing.to_string(),
                }),
            },
        };
        let realizations = r
            .realizations
            .iter()
            .map(|re: &Realization| match &re.witness {
                RealizationWitness::Poset(p) => RealizationDto::Poset {
                    covers: p.cover_pairs(),
                    radius: re.radius,
                },
                RealizationWitness::Combinatorial(f) => RealizationDto::Combinatorial {
                    blocks: f.blocks_as_indices(),
                    radius: re.radius,
                },
            })
            .collect();
        ClassificationRecordDto {
            tile: r.tile.to_strings(),
            rank: r.rank,
            size: r.size,
            is_tile: r.is_tile,
            ts,
            realizations,
        }
    }
}
