//! Code constructions. Every code is exact: integer coordinates with a
//! common squared norm, integer bases for derived codes, or Gram data for
//! graph embeddings.

mod binary;
mod bw;
mod derived;
mod leech;
mod points;
mod srg;

use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use alloc::vec::Vec;

pub use binary::{dual_golay23, golay23, golay24, reed_muller_1_4, BinaryCode};
pub use bw::{bw16_minimal, bw16_shell_bruteforce, is_bw_vector};
pub use derived::{derive, derive_at, Cosine, DerivedCode};
pub use leech::{is_leech_vector, leech_minimal, leech_norm6_representative, leech_pole, leech_shapes, GolaySet};
pub use points::PointCode;
pub use srg::{srg_embedding, Adjacency, Eigenspace, GramCode, SrgEmbedding, SrgParams, PETERSEN_ADJ};

use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};

/// What the profiling code needs from a spherical code: pairs map to
/// integer keys in a small range, and equal keys mean equal inner products.
pub trait SphericalCode {
    fn dim(&self) -> usize;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// Inclusive range of every possible pair key.
    fn key_bounds(&self) -> (i64, i64);
    fn pair_key(&self, i: usize, j: usize) -> i64;
    fn key_value(&self, key: i64) -> Rational;

    /// Adds one to `hist[key - lo]` for every pair `(i, j)`, `j` in `js`.
    fn tally_row(&self, i: usize, js: Range<usize>, hist: &mut [u64]) {
        let lo = self.key_bounds().0;
        for j in js {
            hist[(self.pair_key(i, j) - lo) as usize] += 1;
        }
    }
}

impl SphericalCode for PointCode {
    fn dim(&self) -> usize {
        PointCode::dim(self)
    }
    fn len(&self) -> usize {
        PointCode::len(self)
    }
    fn key_bounds(&self) -> (i64, i64) {
        (-self.scale(), self.scale())
    }
    fn pair_key(&self, i: usize, j: usize) -> i64 {
        self.dot(i, j)
    }
    fn key_value(&self, key: i64) -> Rational {
        Rational::new(key.into(), self.scale().into())
    }
    fn tally_row(&self, i: usize, js: Range<usize>, hist: &mut [u64]) {
        self.tally_dots(i, js, hist);
    }
}

impl SphericalCode for DerivedCode {
    fn dim(&self) -> usize {
        DerivedCode::dim(self)
    }
    fn len(&self) -> usize {
        DerivedCode::len(self)
    }
    fn key_bounds(&self) -> (i64, i64) {
        SphericalCode::key_bounds(self.members())
    }
    fn pair_key(&self, i: usize, j: usize) -> i64 {
        self.members().dot(i, j)
    }
    fn key_value(&self, key: i64) -> Rational {
        self.value_of_dot(key)
    }
    fn tally_row(&self, i: usize, js: Range<usize>, hist: &mut [u64]) {
        self.members().tally_dots(i, js, hist);
    }
}

impl SphericalCode for GramCode {
    fn dim(&self) -> usize {
        GramCode::dim(self)
    }
    fn len(&self) -> usize {
        GramCode::len(self)
    }
    fn key_bounds(&self) -> (i64, i64) {
        (0, 1)
    }
    fn pair_key(&self, i: usize, j: usize) -> i64 {
        GramCode::pair_key(self, i, j)
    }
    fn key_value(&self, key: i64) -> Rational {
        GramCode::key_value(self, key)
    }
}

/// `b -> 1 - 2b` on every codeword; Hamming distance `d` becomes inner
/// product `1 - 2d/length`.
pub fn sphere_embed_binary(code: &BinaryCode) -> PointCode {
    let n = code.length();
    let mut flat = Vec::with_capacity(n << code.dimension());
    for w in code.codewords() {
        flat.extend((0..n).map(|i| if w >> i & 1 == 1 { -1 } else { 1 }));
    }
    PointCode::from_flat(n, flat).expect("codewords are distinct")
}

#[derive(Clone, Debug)]
pub enum Code {
    Points(PointCode),
    Derived(DerivedCode),
    Gram(GramCode),
}

macro_rules! delegate {
    ($self:ident, $c:ident => $e:expr) => {
        match $self {
            Code::Points($c) => $e,
            Code::Derived($c) => $e,
            Code::Gram($c) => $e,
        }
    };
}

impl SphericalCode for Code {
    fn dim(&self) -> usize {
        delegate!(self, c => SphericalCode::dim(c))
    }
    fn len(&self) -> usize {
        delegate!(self, c => SphericalCode::len(c))
    }
    fn key_bounds(&self) -> (i64, i64) {
        delegate!(self, c => c.key_bounds())
    }
    fn pair_key(&self, i: usize, j: usize) -> i64 {
        delegate!(self, c => SphericalCode::pair_key(c, i, j))
    }
    fn key_value(&self, key: i64) -> Rational {
        delegate!(self, c => SphericalCode::key_value(c, key))
    }
    fn tally_row(&self, i: usize, js: Range<usize>, hist: &mut [u64]) {
        delegate!(self, c => c.tally_row(i, js, hist))
    }
}

/// The named codes of the atlas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeId {
    Leech,
    C4600,
    C47104,
    C93150,
    C552,
    C11178,
    C48600,
    C2816,
    C2025,
    BarnesWall,
    DualGolay,
    PetersenFirst,
    PetersenSecond,
}

impl CodeId {
    pub const ALL: [CodeId; 13] = [
        CodeId::Leech,
        CodeId::C4600,
        CodeId::C47104,
        CodeId::C93150,
        CodeId::C552,
        CodeId::C11178,
        CodeId::C48600,
        CodeId::C2816,
        CodeId::C2025,
        CodeId::BarnesWall,
        CodeId::DualGolay,
        CodeId::PetersenFirst,
        CodeId::PetersenSecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CodeId::Leech => "leech",
            CodeId::C4600 => "c4600",
            CodeId::C47104 => "c47104",
            CodeId::C93150 => "c93150",
            CodeId::C552 => "c552",
            CodeId::C11178 => "c11178",
            CodeId::C48600 => "c48600",
            CodeId::C2816 => "c2816",
            CodeId::C2025 => "c2025",
            CodeId::BarnesWall => "bw16",
            CodeId::DualGolay => "dual-golay",
            CodeId::PetersenFirst => "petersen-first",
            CodeId::PetersenSecond => "petersen-second",
        }
    }

    /// Short description of how the code is obtained.
    pub fn recipe(self) -> &'static str {
        match self {
            CodeId::Leech => "minimal vectors of the Leech lattice",
            CodeId::C4600 => "Leech minimal vectors at cosine 1/2 to a minimal vector",
            CodeId::C47104 => "Leech minimal vectors at cosine 1/4 to a minimal vector",
            CodeId::C93150 => "Leech minimal vectors orthogonal to a minimal vector",
            CodeId::C552 => "Leech minimal vectors at cosine sqrt(6)/4 to a norm-6 vector",
            CodeId::C11178 => "Leech minimal vectors at cosine sqrt(6)/6 to a norm-6 vector",
            CodeId::C48600 => "Leech minimal vectors at cosine sqrt(6)/12 to a norm-6 vector",
            CodeId::C2816 => "c4600 points orthogonal to one of its points",
            CodeId::C2025 => "c4600 points at cosine sqrt(5)/15 to a projected minimal vector",
            CodeId::BarnesWall => "minimal vectors of the Barnes-Wall lattice",
            CodeId::DualGolay => "dual of the perfect Golay code mapped to the sphere",
            CodeId::PetersenFirst => "Petersen graph, eigenvalue 1 eigenspace",
            CodeId::PetersenSecond => "Petersen graph, eigenvalue -2 eigenspace",
        }
    }
}

impl fmt::Display for CodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CodeId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown(alloc::format!("code {s:?}")))
    }
}

/// Builds codes on demand, sharing the Leech minimal vectors between them.
#[derive(Default)]
pub struct Atlas {
    leech: Option<PointCode>,
    c4600: Option<DerivedCode>,
}

impl Atlas {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leech(&mut self) -> &PointCode {
        self.leech.get_or_insert_with(leech_minimal)
    }

    fn c4600(&mut self) -> Result<&DerivedCode> {
        if self.c4600.is_none() {
            let c = derive(self.leech(), &leech_pole(), &rat(1, 2))?;
            self.c4600 = Some(c);
        }
        Ok(self.c4600.as_ref().expect("just built"))
    }

    pub fn build(&mut self, id: CodeId) -> Result<Code> {
        let pole = leech_pole();
        let at_pole = |atlas: &mut Atlas, a: Rational| -> Result<Code> {
            Ok(Code::Derived(derive(atlas.leech(), &pole, &a)?))
        };
        let at_deep = |atlas: &mut Atlas, sq: Rational| -> Result<Code> {
            let w = leech_norm6_representative()?;
            Ok(Code::Derived(derive_at(atlas.leech(), &w, &Cosine::from_square(sq, true))?))
        };
        match id {
            CodeId::Leech => Ok(Code::Points(self.leech().clone())),
            CodeId::C4600 => Ok(Code::Derived(self.c4600()?.clone())),
            CodeId::C47104 => at_pole(self, rat(1, 4)),
            CodeId::C93150 => at_pole(self, rat(0, 1)),
            CodeId::C552 => at_deep(self, rat(3, 8)),
            CodeId::C11178 => at_deep(self, rat(1, 6)),
            CodeId::C48600 => at_deep(self, rat(1, 24)),
            CodeId::C2816 => {
                let c = self.c4600()?;
                let first = c.members().point(0).to_vec();
                Ok(Code::Derived(c.derive(&first, &rat(0, 1))?))
            }
            CodeId::C2025 => {
                let pivot = self.c2025_pivot()?;
                let c = self.c4600()?;
                Ok(Code::Derived(c.derive_at(&pivot, &Cosine::from_square(rat(1, 45), true))?))
            }
            CodeId::BarnesWall => Ok(Code::Points(bw16_minimal())),
            CodeId::DualGolay => Ok(Code::Points(sphere_embed_binary(&dual_golay23()))),
            CodeId::PetersenFirst | CodeId::PetersenSecond => {
                let params = SrgParams::new(10, 3, 0, 1)?;
                let adj = Adjacency::parse(PETERSEN_ADJ)?;
                let which = if id == CodeId::PetersenFirst { Eigenspace::First } else { Eigenspace::Second };
                Ok(Code::Gram(srg_embedding(&params, &adj, which)?))
            }
        }
    }

    /// A minimal vector at cosine 1/4 to the pole. Its projection away from
    /// the pole sees the c4600 points at cosines `±sqrt(5)/5`, `±sqrt(5)/15`.
    pub fn c2025_pivot(&mut self) -> Result<Vec<i32>> {
        let pole: Vec<i64> = leech_pole().into_iter().map(i64::from).collect();
        let leech = self.leech();
        (0..leech.len())
            .find(|&i| leech.dot_with(i, &pole) == 8)
            .map(|i| leech.point(i).to_vec())
            .ok_or_else(|| Error::SearchFailed("no minimal vector at cosine 1/4".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn embed_trivial_code() {
        let c = BinaryCode::new(2, vec![0b11]).unwrap();
        let p = sphere_embed_binary(&c);
        assert_eq!(p.len(), 2);
        assert_eq!(p.inner_product(0, 1), rat(-1, 1));
    }

    #[test]
    fn code_names_round_trip() {
        for id in CodeId::ALL {
            assert_eq!(id.name().parse::<CodeId>().unwrap(), id);
        }
        assert!("c1234".parse::<CodeId>().is_err());
    }
}
