//! Spectral embeddings of strongly regular graphs, kept as Gram data: two
//! vertices get inner product `q` or `p` depending on adjacency in the
//! chosen eigenspace.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Roots;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{psd_rank, Rational};

/// Adjacency matrix of the Petersen graph, one row per line.
pub const PETERSEN_ADJ: &str = include_str!("../../data/petersen.adj");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eigenspace {
    First,
    Second,
}

/// Inner products and dimension of one embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgEmbedding {
    pub dim: u64,
    pub adjacent: Rational,
    pub non_adjacent: Rational,
}

impl SrgEmbedding {
    /// `(p, q)` with `p < q`.
    pub fn p_q(&self) -> (Rational, Rational) {
        if self.adjacent < self.non_adjacent {
            (self.adjacent.clone(), self.non_adjacent.clone())
        } else {
            (self.non_adjacent.clone(), self.adjacent.clone())
        }
    }
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParams { v, k, lambda, mu };
        if k == 0 || k + 1 >= v {
            return Err(Error::Srg("need 0 < k < v - 1".into()));
        }
        if k * (k - lambda - 1) != (v - k - 1) * mu {
            return Err(Error::Srg(format!("k(k-lambda-1) != (v-k-1)mu for {p:?}")));
        }
        p.eigenvalues()?;
        Ok(p)
    }

    /// `(e1, e2)`, the integer roots of `x^2 - (lambda-mu) x - (k-mu)`.
    pub fn eigenvalues(&self) -> Result<(i64, i64)> {
        let b = self.lambda as i64 - self.mu as i64;
        let c = self.k as i64 - self.mu as i64;
        let disc = b * b + 4 * c;
        let root = if disc >= 0 { disc.sqrt() } else { -1 };
        if root < 0 || root * root != disc || (b + root) % 2 != 0 {
            return Err(Error::Srg("eigenvalues are not integers".into()));
        }
        Ok(((b + root) / 2, (b - root) / 2))
    }

    pub fn multiplicities(&self) -> Result<(u64, u64)> {
        let (e1, e2) = self.eigenvalues()?;
        let (v, k) = (self.v as i64, self.k as i64);
        let n1 = (-k - (v - 1) * e2) / (e1 - e2);
        let n2 = v - 1 - n1;
        if n1 * (e1 - e2) != -k - (v - 1) * e2 || n1 <= 0 || n2 <= 0 {
            return Err(Error::Srg("eigenvalue multiplicities are not positive integers".into()));
        }
        Ok((n1 as u64, n2 as u64))
    }

    pub fn embedding(&self, which: Eigenspace) -> Result<SrgEmbedding> {
        let (e1, e2) = self.eigenvalues()?;
        let (n1, n2) = self.multiplicities()?;
        let (k, rest) = (r(self.k as i64), r(self.v as i64 - self.k as i64 - 1));
        Ok(match which {
            Eigenspace::First => SrgEmbedding { dim: n1, adjacent: r(e1) / k, non_adjacent: -r(1 + e1) / rest },
            Eigenspace::Second => SrgEmbedding { dim: n2, adjacent: r(e2) / k, non_adjacent: -r(1 + e2) / rest },
        })
    }
}

/// Symmetric 0/1 matrix without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    rows: Vec<Vec<bool>>,
}

impl Adjacency {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let v = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != v {
                return Err(Error::Srg(format!("row {i} has {} entries, expected {v}", row.len())));
            }
            if row[i] {
                return Err(Error::Srg(format!("loop at vertex {i}")));
            }
            if (0..v).any(|j| row[j] != rows[j][i]) {
                return Err(Error::Srg("adjacency is not symmetric".into()));
            }
        }
        Ok(Adjacency { rows })
    }

    /// One row per line of `0`/`1` characters; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: core::result::Result<Vec<bool>, String> = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(format!("line {}: unexpected {other:?}", n + 1)),
                })
                .collect();
            rows.push(row.map_err(Error::Srg)?);
        }
        Adjacency::new(rows)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    /// Reads `(v, k, lambda, mu)` off the matrix and checks them.
    pub fn srg_params(&self) -> Result<SrgParams> {
        let v = self.order();
        let count = |i: usize, j: usize| (0..v).filter(|&w| self.rows[i][w] && self.rows[j][w]).count() as u64;
        let k = if v == 0 { 0 } else { self.rows[0].iter().filter(|&&a| a).count() as u64 };
        let pair = |want: bool| (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).find(|&(i, j)| self.rows[i][j] == want);
        let lambda = pair(true).map_or(0, |(i, j)| count(i, j));
        let mu = pair(false).map_or(0, |(i, j)| count(i, j));
        let p = SrgParams::new(v as u64, k, lambda, mu)?;
        if !self.matches(&p) {
            return Err(Error::Srg("graph is not strongly regular".into()));
        }
        Ok(p)
    }

    /// Checks regularity and the common-neighbour counts.
    pub fn matches(&self, p: &SrgParams) -> bool {
        let v = self.order();
        if v as u64 != p.v {
            return false;
        }
        for i in 0..v {
            if self.rows[i].iter().filter(|&&a| a).count() as u64 != p.k {
                return false;
            }
            for j in i + 1..v {
                let common = (0..v).filter(|&w| self.rows[i][w] && self.rows[j][w]).count() as u64;
                let want = if self.rows[i][j] { p.lambda } else { p.mu };
                if common != want {
                    return false;
                }
            }
        }
        true
    }
}

/// A code known only through its Gram matrix. Pair key 1 is adjacent.
#[derive(Clone, Debug)]
pub struct GramCode {
    pub params: SrgParams,
    pub which: Eigenspace,
    pub embedding: SrgEmbedding,
    adjacency: Adjacency,
}

pub fn srg_embedding(p: &SrgParams, adjacency: &Adjacency, which: Eigenspace) -> Result<GramCode> {
    if !adjacency.matches(p) {
        return Err(Error::Srg(format!("adjacency matrix does not have parameters {p:?}")));
    }
    let embedding = p.embedding(which)?;
    Ok(GramCode { params: *p, which, embedding, adjacency: adjacency.clone() })
}

impl GramCode {
    pub fn len(&self) -> usize {
        self.adjacency.order()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.embedding.dim as usize
    }

    pub fn pair_key(&self, i: usize, j: usize) -> i64 {
        i64::from(self.adjacency.adjacent(i, j))
    }

    pub fn key_value(&self, key: i64) -> Rational {
        if key == 1 {
            self.embedding.adjacent.clone()
        } else {
            self.embedding.non_adjacent.clone()
        }
    }

    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let v = self.len();
        (0..v)
            .map(|i| {
                (0..v)
                    .map(|j| if i == j { r(1) } else { self.key_value(self.pair_key(i, j)) })
                    .collect()
            })
            .collect()
    }

    /// Rank of the Gram matrix, `None` if it is not positive semidefinite.
    pub fn gram_rank(&self) -> Option<usize> {
        psd_rank(&self.gram())
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn p_plus_q_negative(&self) -> bool {
        let (p, q) = self.embedding.p_q();
        (p + q).is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn petersen() -> SrgParams {
        SrgParams::new(10, 3, 0, 1).unwrap()
    }

    #[test]
    fn petersen_embeddings() {
        let p = petersen();
        assert_eq!(p.eigenvalues().unwrap(), (1, -2));
        assert_eq!(p.multiplicities().unwrap(), (5, 4));
        let first = p.embedding(Eigenspace::First).unwrap();
        assert_eq!((first.dim, first.adjacent.clone(), first.non_adjacent.clone()), (5, rat(1, 3), rat(-1, 3)));
        let second = p.embedding(Eigenspace::Second).unwrap();
        assert_eq!(second.p_q(), (rat(-2, 3), rat(1, 6)));
        assert_eq!(second.dim, 4);
    }

    #[test]
    fn bundled_adjacency_is_petersen() {
        let adj = Adjacency::parse(PETERSEN_ADJ).unwrap();
        assert_eq!(adj.srg_params().unwrap(), petersen());
        for which in [Eigenspace::First, Eigenspace::Second] {
            let code = srg_embedding(&petersen(), &adj, which).unwrap();
            assert_eq!(code.gram_rank(), Some(code.dim()));
        }
    }

    #[test]
    fn infeasible_parameters() {
        assert!(SrgParams::new(10, 3, 1, 1).is_err());
        // Pentagon, a conference graph with irrational eigenvalues.
        assert!(SrgParams::new(5, 2, 0, 1).is_err());
        let adj = Adjacency::parse(PETERSEN_ADJ).unwrap();
        let wrong = SrgParams::new(27, 16, 10, 8).unwrap();
        assert!(srg_embedding(&wrong, &adj, Eigenspace::First).is_err());
    }

    #[test]
    fn schlafli_has_both_sums_negative() {
        let s = SrgParams::new(27, 16, 10, 8).unwrap();
        for which in [Eigenspace::First, Eigenspace::Second] {
            let (p, q) = s.embedding(which).unwrap().p_q();
            assert!((p + q).is_negative());
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Adjacency::parse("01\n10\n").is_ok());
        assert!(Adjacency::parse("01\n00\n").is_err());
        assert!(Adjacency::parse("0x\n10\n").is_err());
        assert!(Adjacency::parse("010\n10\n").is_err());
    }
}
