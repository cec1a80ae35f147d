use serde::{Deserialize, Serialize};

use super::SimplicialComplex;
use crate::error::{Error, Result};

/// On-disk JSON form: `{"m": 4, "facets": [[1,3],[2,4]], "void": false}`.
///
/// Facets are 1-based and ascending; `void` may be omitted when false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub void: bool,
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexFile {
            m: k.m(),
            facets: k.facets().iter().map(|f| f.to_vec()).collect(),
            void: k.is_void(),
        }
    }
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        for f in &self.facets {
            if f.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!("facet {f:?} is not strictly ascending")));
            }
        }
        SimplicialComplex::from_vertex_lists(self.m, &self.facets, self.void)
    }
}

impl SimplicialComplex {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        file.to_complex()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex file serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let k = SimplicialComplex::from_json_str(r#"{"m":4,"facets":[[2,4],[1,3]]}"#).unwrap();
        assert_eq!(k.to_json_string(), r#"{"m":4,"facets":[[1,3],[2,4]]}"#);
        let void = SimplicialComplex::from_json_str(r#"{"m":2,"facets":[],"void":true}"#).unwrap();
        assert!(void.is_void());
        assert_eq!(void.to_json_string(), r#"{"m":2,"facets":[],"void":true}"#);
        let irr = SimplicialComplex::from_json_str(r#"{"m":2,"facets":[[]]}"#).unwrap();
        assert!(irr.is_irrelevant());
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"m":4,"facets":[[3,1]]}"#,
            r#"{"m":4,"facets":[[0]]}"#,
            r#"{"m":4,"facets":[[5]]}"#,
            r#"{"m":0,"facets":[[]]}"#,
            r#"{"m":4,"facets":[]}"#,
            r#"{"m":4}"#,
            r#"{"m":4,"facets":[[1]],"extra":1}"#,
            r#"not json"#,
        ] {
            assert!(SimplicialComplex::from_json_str(bad).is_err(), "{bad}");
        }
    }
}
