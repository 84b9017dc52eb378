//! The `mls-v1` instance file: UTF-8 JSON with integer-only values.
//!
//! ```text
//! {
//!   "format": "mls-v1",
//!   "n": 2,
//!   "matroid": {
//!     "kind": "partition",
//!     "classes": [1, 2, 2, 1]
//!   },
//!   "grid": [
//!     [0, 1],
//!     [2, 3]
//!   ]
//! }
//! ```
//!
//! A linear matroid is written as `"kind": "linear"` with `"p"`, `"dim"`
//! and `"elements"` (one residue array per element). [`InstanceFile::to_text`]
//! emits exactly this layout, so parsing and rewriting a file it produced
//! reproduces it byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matroid::{ElementId, LinearMatroid, Matroid, PartitionMatroid};
use crate::mls::Mls;

pub const FORMAT_TAG: &str = "mls-v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidDescriptor {
    Linear {
        p: u64,
        dim: usize,
        elements: Vec<Vec<u32>>,
    },
    Partition {
        classes: Vec<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format: String,
    pub n: usize,
    pub matroid: MatroidDescriptor,
    pub grid: Vec<Vec<ElementId>>,
}

impl InstanceFile {
    pub fn from_mls(mls: &Mls) -> Self {
        let matroid = match mls.matroid() {
            Matroid::Linear(m) => MatroidDescriptor::Linear {
                p: m.field().modulus() as u64,
                dim: m.dim(),
                elements: m.elements().to_vec(),
            },
            Matroid::Partition(m) => MatroidDescriptor::Partition {
                classes: m.classes().to_vec(),
            },
        };
        InstanceFile {
            format: FORMAT_TAG.to_string(),
            n: mls.n(),
            matroid,
            grid: mls.rows(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        if file.format != FORMAT_TAG {
            return Err(Error::Format(format!(
                "unsupported format tag {:?}, expected {FORMAT_TAG:?}",
                file.format
            )));
        }
        if file.grid.len() != file.n {
            return Err(Error::Format(format!(
                "grid has {} rows but n = {}",
                file.grid.len(),
                file.n
            )));
        }
        Ok(file)
    }

    /// Builds the grid, checking shape and ids but not the base conditions.
    pub fn to_mls(&self) -> Result<Mls> {
        let matroid: Matroid = match &self.matroid {
            MatroidDescriptor::Linear { p, dim, elements } => {
                LinearMatroid::new(FieldSpec::new(*p)?, *dim, elements.clone())?.into()
            }
            MatroidDescriptor::Partition { classes } => {
                PartitionMatroid::new(classes.clone()).into()
            }
        };
        Mls::new(matroid, self.grid.clone())
    }

    pub fn to_text(&self) -> String {
        fn array<T: Serialize>(v: &[T]) -> String {
            let items: Vec<String> = v
                .iter()
                .map(|x| serde_json::to_string(x).expect("integers serialize"))
                .collect();
            format!("[{}]", items.join(", "))
        }
        fn rows<T: Serialize>(out: &mut String, indent: &str, rows: &[Vec<T>]) {
            if rows.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, row) in rows.iter().enumerate() {
                let sep = if i + 1 < rows.len() { "," } else { "" };
                let _ = writeln!(out, "{indent}  {}{sep}", array(row));
            }
            let _ = write!(out, "{indent}]");
        }

        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(
            out,
            "  \"format\": {},",
            serde_json::to_string(&self.format).expect("string serializes")
        );
        let _ = writeln!(out, "  \"n\": {},", self.n);
        out.push_str("  \"matroid\": {\n");
        match &self.matroid {
            MatroidDescriptor::Linear { p, dim, elements } => {
                out.push_str("    \"kind\": \"linear\",\n");
                let _ = writeln!(out, "    \"p\": {p},");
                let _ = writeln!(out, "    \"dim\": {dim},");
                out.push_str("    \"elements\": ");
                rows(&mut out, "    ", elements);
                out.push('\n');
            }
            MatroidDescriptor::Partition { classes } => {
                out.push_str("    \"kind\": \"partition\",\n");
                let _ = writeln!(out, "    \"classes\": {}", array(classes));
            }
        }
        out.push_str("  },\n");
        out.push_str("  \"grid\": ");
        rows(&mut out, "  ", &self.grid);
        out.push_str("\n}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::LatinSquare;

    #[test]
    fn partition_layout() {
        let mls = Mls::from_latin_rows(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let text = InstanceFile::from_mls(&mls).to_text();
        let expected = r#"{
  "format": "mls-v1",
  "n": 2,
  "matroid": {
    "kind": "partition",
    "classes": [1, 2, 2, 1]
  },
  "grid": [
    [0, 1],
    [2, 3]
  ]
}
"#;
        assert_eq!(text, expected);
    }

    #[test]
    fn linear_round_trip() {
        let mls = Mls::theorem2(3, FieldSpec::new(5).unwrap());
        let text = InstanceFile::from_mls(&mls).to_text();
        let parsed = InstanceFile::parse(&text).unwrap();
        assert_eq!(parsed.to_text(), text);
        assert_eq!(parsed.to_mls().unwrap(), mls);
        assert!(text.contains("\"elements\": [\n      [1, 0, 0],"));
    }

    #[test]
    fn accepts_other_whitespace() {
        let compact = r#"{"format":"mls-v1","n":1,"matroid":{"kind":"linear","p":2,"dim":1,"elements":[[1]]},"grid":[[0]]}"#;
        let f = InstanceFile::parse(compact).unwrap();
        let mls = f.to_mls().unwrap();
        assert!(mls.validate().is_empty());
        assert_eq!(InstanceFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn rejections() {
        let bad_tag = r#"{"format":"mls-v2","n":1,"matroid":{"kind":"partition","classes":[1]},"grid":[[0]]}"#;
        assert!(matches!(
            InstanceFile::parse(bad_tag),
            Err(Error::Format(_))
        ));
        let float = r#"{"format":"mls-v1","n":1,"matroid":{"kind":"linear","p":2,"dim":1,"elements":[[1.0]]},"grid":[[0]]}"#;
        assert!(matches!(InstanceFile::parse(float), Err(Error::Json(_))));
        let rows = r#"{"format":"mls-v1","n":2,"matroid":{"kind":"partition","classes":[1]},"grid":[[0]]}"#;
        assert!(matches!(InstanceFile::parse(rows), Err(Error::Format(_))));
        let extra = r#"{"format":"mls-v1","n":1,"extra":0,"matroid":{"kind":"partition","classes":[1]},"grid":[[0]]}"#;
        assert!(InstanceFile::parse(extra).is_err());
        let bad_id = r#"{"format":"mls-v1","n":1,"matroid":{"kind":"partition","classes":[1]},"grid":[[4]]}"#;
        let f = InstanceFile::parse(bad_id).unwrap();
        assert!(matches!(
            f.to_mls(),
            Err(Error::UnknownElement { id: 4, .. })
        ));
        let composite = r#"{"format":"mls-v1","n":1,"matroid":{"kind":"linear","p":4,"dim":1,"elements":[[1]]},"grid":[[0]]}"#;
        let f = InstanceFile::parse(composite).unwrap();
        assert!(matches!(f.to_mls(), Err(Error::NotPrime(4))));
    }

    #[test]
    fn random_latin_round_trip() {
        for seed in 0..5 {
            let mls = Mls::from_latin_square(&LatinSquare::random(4, seed));
            let text = InstanceFile::from_mls(&mls).to_text();
            assert_eq!(InstanceFile::parse(&text).unwrap().to_text(), text);
        }
    }
}
