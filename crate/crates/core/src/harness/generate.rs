//! Seeded instance generators. All randomness comes from ChaCha8 streams
//! seeded with `seed_from_u64`, so instances are fixed by `(kind, n, p, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::latin::LatinSquare;
use crate::mls::{random_invertible, Mls};

/// Name of the generator recorded in reports.
pub const PRNG_NAME: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    /// The grid with `v_1` on the diagonal and `v_i - v_j` elsewhere.
    Theorem2,
    /// A random Latin square in partition encoding.
    Latin,
    /// A random Latin square realized over GF(p) by a random invertible basis.
    Embed,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::Theorem2 => "theorem2",
            GenKind::Latin => "latin",
            GenKind::Embed => "embed",
        })
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorem2" => Ok(GenKind::Theorem2),
            "latin" => Ok(GenKind::Latin),
            "embed" => Ok(GenKind::Embed),
            other => Err(format!("unknown generator {other:?}")),
        }
    }
}

/// A random invertible basis over GF(p) for the embedding of `square`,
/// drawn from stream 1 of the ChaCha8 generator seeded with `seed` (the
/// square itself uses stream 0).
pub fn random_embedding(square: &LatinSquare, field: FieldSpec, seed: u64) -> Result<Mls> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let basis = random_invertible(square.n(), field, &mut rng);
    Mls::embed_latin(square, field, &basis)
}

/// Builds one instance. `p` is required for `theorem2` and `embed` and
/// ignored for `latin`; `seed` is ignored for `theorem2`.
pub fn generate(kind: GenKind, n: usize, p: Option<u64>, seed: u64) -> Result<Mls> {
    if n == 0 {
        return Err(Error::MalformedGrid("degree must be at least 1".into()));
    }
    let field = || -> Result<FieldSpec> {
        let p = p.ok_or_else(|| Error::Format(format!("generator {kind} needs a prime p")))?;
        FieldSpec::new(p)
    };
    let mls = match kind {
        GenKind::Theorem2 => Mls::theorem2(n, field()?),
        GenKind::Latin => Mls::from_latin_square(&LatinSquare::random(n, seed)),
        GenKind::Embed => random_embedding(&LatinSquare::random(n, seed), field()?, seed)?,
    };
    debug_assert!(mls.validate().is_empty());
    Ok(mls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::format::InstanceFile;

    #[test]
    fn every_kind_validates() {
        for n in 1..=6 {
            for kind in [GenKind::Theorem2, GenKind::Latin, GenKind::Embed] {
                for p in [2, 3, 5, 7] {
                    let mls = generate(kind, n, Some(p), 42).unwrap();
                    assert!(mls.validate().is_empty(), "{kind} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn deterministic_files() {
        let a = InstanceFile::from_mls(&generate(GenKind::Latin, 4, None, 42).unwrap()).to_text();
        let b = InstanceFile::from_mls(&generate(GenKind::Latin, 4, None, 42).unwrap()).to_text();
        assert_eq!(a, b);
        let c = InstanceFile::from_mls(&generate(GenKind::Embed, 4, Some(5), 9).unwrap()).to_text();
        let d = InstanceFile::from_mls(&generate(GenKind::Embed, 4, Some(5), 9).unwrap()).to_text();
        assert_eq!(c, d);
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(GenKind::Latin, 0, None, 0).is_err());
        assert!(generate(GenKind::Theorem2, 3, None, 0).is_err());
        assert!(matches!(
            generate(GenKind::Embed, 3, Some(6), 0),
            Err(Error::NotPrime(6))
        ));
        assert_eq!(generate(GenKind::Latin, 1, None, 0).unwrap().n(), 1);
    }
}
