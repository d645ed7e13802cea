use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^free ⊕ ⊕ Z/tᵢ`, torsion ascending
/// and without trivial factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbGroup {
    pub free: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

impl AbGroup {
    pub fn new(free: usize, factors: impl IntoIterator<Item = BigInt>) -> Self {
        let mut torsion: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
        torsion.sort();
        Self { free, torsion }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free: rank, torsion: vec![] }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [BigInt::from(order)])
    }

    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    /// Dimension of `G ⊗ Z/2`.
    pub fn tensor_f2_dim(&self) -> usize {
        self.free + self.torsion.iter().filter(|t| !t.bit(0)).count()
    }

    /// Dimension of `Tor(G, Z/2)`.
    pub fn tor_f2_dim(&self) -> usize {
        self.torsion.iter().filter(|t| !t.bit(0)).count()
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

pub(crate) mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        // small values print as numbers so that `{"torsion":[2]}` stays readable
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            match i64::try_from(x) {
                Ok(n) => seq.serialize_element(&n)?,
                Err(_) => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Num(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<Entry> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|e| match e {
                Entry::Num(n) => Ok(BigInt::from(n)),
                Entry::Str(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_normalisation() {
        let g = AbGroup::new(0, [8, 1, 2].map(BigInt::from));
        assert_eq!(g.to_string(), "Z/2 ⊕ Z/8");
        assert_eq!(AbGroup::zero().to_string(), "0");
        assert_eq!(AbGroup::new(2, [BigInt::from(4)]).to_string(), "Z^2 ⊕ Z/4");
    }

    #[test]
    fn json_shape() {
        let g = AbGroup::new(0, [BigInt::from(2)]);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"free":0,"torsion":[2]}"#);
    }
}
