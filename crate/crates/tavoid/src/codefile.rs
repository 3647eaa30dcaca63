//! `codefile/v1`: a JSON description from which a code can be rebuilt
//! exactly.
//!
//! Derived codes keep their members in parent coordinates together with the
//! chain of integer base vectors and squared cosines, so nested sections
//! round-trip. Gram codes keep the adjacency matrix.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tavoid_core::atlas::{derive_at, srg_embedding, Adjacency, Code, Cosine, Eigenspace, PointCode, SrgParams};
use tavoid_core::{parse_rational, Rational};

use crate::error::CliError;

pub const FORMAT: &str = "codefile/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    LatticePoints,
    Derived,
    GramProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosineEntry {
    pub square: String,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: Kind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_scale: Option<i64>,
    /// Cosine to `base`, when rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bases: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cosines: Vec<CosineEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub srg: Option<[u64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenspace: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub adjacency: Vec<String>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = num_integer::Roots::sqrt(x.numer());
    let d = num_integer::Roots::sqrt(x.denom());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

impl CodeFile {
    fn blank(name: Option<&str>, kind: Kind, dim: usize) -> CodeFile {
        CodeFile {
            format: FORMAT.to_owned(),
            name: name.map(str::to_owned),
            kind,
            dim,
            scale: None,
            points: Vec::new(),
            base: None,
            base_scale: None,
            alpha: None,
            bases: Vec::new(),
            cosines: Vec::new(),
            srg: None,
            eigenspace: None,
            adjacency: Vec::new(),
        }
    }

    pub fn from_code(code: &Code, name: Option<&str>) -> CodeFile {
        match code {
            Code::Points(p) => {
                let mut f = CodeFile::blank(name, Kind::LatticePoints, p.dim());
                f.scale = Some(p.scale());
                f.points = p.points().map(<[i32]>::to_vec).collect();
                f
            }
            Code::Derived(d) => {
                let mut f = CodeFile::blank(name, Kind::Derived, d.dim());
                f.scale = Some(d.members().scale());
                f.points = d.members().points().map(<[i32]>::to_vec).collect();
                f.bases = d.bases().to_vec();
                f.cosines = d
                    .cosines()
                    .iter()
                    .map(|c| CosineEntry { square: c.sq.to_string(), positive: c.positive })
                    .collect();
                if let Some(b) = d.bases().first() {
                    f.base = b.iter().map(|&x| i32::try_from(x).ok()).collect();
                    f.base_scale = Some(b.iter().map(|x| x * x).sum());
                }
                if let ([c], [_]) = (d.cosines(), d.bases()) {
                    f.alpha = rational_sqrt(&c.sq).map(|r| if c.positive { r } else { -r }.to_string());
                }
                f
            }
            Code::Gram(g) => {
                let mut f = CodeFile::blank(name, Kind::GramProfile, g.dim());
                let p = g.params;
                f.srg = Some([p.v, p.k, p.lambda, p.mu]);
                f.eigenspace = Some(eigenspace_name(g.which).to_owned());
                let adj = g.adjacency();
                f.adjacency = (0..adj.order())
                    .map(|i| (0..adj.order()).map(|j| if adj.adjacent(i, j) { '1' } else { '0' }).collect())
                    .collect();
                f
            }
        }
    }

    pub fn to_code(&self) -> Result<Code, CliError> {
        if self.format != FORMAT {
            return Err(bad(format!("unsupported format {:?}", self.format)));
        }
        let code = match self.kind {
            Kind::LatticePoints => {
                let p = PointCode::new(self.dim, self.points.clone())?;
                Code::Points(p)
            }
            Kind::Derived => {
                let parent_dim = self.points.first().map_or(0, Vec::len);
                let parent = PointCode::new(parent_dim, self.points.clone())?;
                if self.bases.is_empty() || self.bases.len() != self.cosines.len() {
                    return Err(bad("derived code needs matching bases and cosines"));
                }
                let mut steps = self.bases.iter().zip(&self.cosines).map(|(b, c)| {
                    let base: Vec<i32> =
                        b.iter().map(|&x| i32::try_from(x).map_err(|_| bad("base coordinate too large"))).collect::<Result<_, _>>()?;
                    Ok::<_, CliError>((base, Cosine::from_square(parse_rational(&c.square)?, c.positive)))
                });
                let (b0, c0) = steps.next().expect("nonempty")?;
                let mut d = derive_at(&parent, &b0, &c0)?;
                for step in steps {
                    let (b, c) = step?;
                    d = d.derive_at(&b, &c)?;
                }
                if d.len() != self.points.len() {
                    return Err(bad(format!(
                        "only {} of {} points lie at the recorded cosines",
                        d.len(),
                        self.points.len()
                    )));
                }
                Code::Derived(d)
            }
            Kind::GramProfile => {
                let [v, k, l, m] = self.srg.ok_or_else(|| bad("gram-profile needs srg parameters"))?;
                let which = parse_eigenspace(self.eigenspace.as_deref().unwrap_or(""))?;
                let adj = Adjacency::parse(&self.adjacency.join("\n"))?;
                Code::Gram(srg_embedding(&SrgParams::new(v, k, l, m)?, &adj, which)?)
            }
        };
        let dim = tavoid_core::atlas::SphericalCode::dim(&code);
        if dim != self.dim {
            return Err(bad(format!("recorded dimension {} but the code has dimension {dim}", self.dim)));
        }
        Ok(code)
    }

    pub fn read(path: &Path) -> Result<CodeFile, CliError> {
        let text = fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string(self).expect("serializable");
        fs::write(path, text).map_err(|e| bad(format!("{}: {e}", path.display())))
    }
}

pub fn eigenspace_name(e: Eigenspace) -> &'static str {
    match e {
        Eigenspace::First => "first",
        Eigenspace::Second => "second",
    }
}

pub fn parse_eigenspace(s: &str) -> Result<Eigenspace, CliError> {
    match s {
        "first" => Ok(Eigenspace::First),
        "second" => Ok(Eigenspace::Second),
        other => Err(bad(format!("eigenspace must be first or second, not {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tavoid_core::atlas::{Atlas, CodeId, SphericalCode};

    fn round_trip(id: CodeId) {
        let code = Atlas::new().build(id).unwrap();
        let file = CodeFile::from_code(&code, Some(id.name()));
        let text = serde_json::to_string(&file).unwrap();
        let back: CodeFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.to_code().unwrap();
        assert_eq!((rebuilt.len(), rebuilt.dim()), (code.len(), code.dim()));
        for (i, j) in [(0, 1), (1, 0), (2, 7), (code.len() - 1, 3)] {
            assert_eq!(rebuilt.key_value(rebuilt.pair_key(i, j)), code.key_value(code.pair_key(i, j)), "{id}");
        }
    }

    #[test]
    fn codes_round_trip() {
        for id in [CodeId::C4600, CodeId::C2816, CodeId::C552, CodeId::BarnesWall, CodeId::PetersenFirst] {
            round_trip(id);
        }
    }

    #[test]
    fn rational_alpha_is_recorded() {
        let code = Atlas::new().build(CodeId::C4600).unwrap();
        let f = CodeFile::from_code(&code, None);
        assert_eq!(f.alpha.as_deref(), Some("1/2"));
        assert_eq!(f.base_scale, Some(32));
        let deep = CodeFile::from_code(&Atlas::new().build(CodeId::C11178).unwrap(), None);
        assert_eq!(deep.alpha, None);
    }

    #[test]
    fn rejects_bad_files() {
        let code = Atlas::new().build(CodeId::PetersenSecond).unwrap();
        let mut f = CodeFile::from_code(&code, None);
        f.dim = 7;
        assert!(f.to_code().is_err());
        f.dim = 4;
        f.format = "codefile/v0".into();
        assert!(f.to_code().is_err());
    }
}
