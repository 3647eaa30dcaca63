use std::fmt;
use std::str::FromStr;

use tavoid_core::exactnum::parse_factored;
use tavoid_core::{Factored, Poly};

use crate::error::CliError;

/// A factored polynomial together with the text it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub factored: Factored,
}

impl PolyExpr {
    pub fn parse(text: &str) -> Result<PolyExpr, CliError> {
        let factored = parse_factored(text).map_err(|e| CliError::Usage(format!("polynomial {text:?}: {e}")))?;
        Ok(PolyExpr { source: text.to_owned(), factored })
    }

    pub fn to_poly(&self) -> Poly {
        self.factored.to_poly()
    }
}

impl FromStr for PolyExpr {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyExpr::parse(s)
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored)
    }
}
