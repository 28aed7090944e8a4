use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A torsion sheaf `⊕_x ⊕_i O_{X,x}/t_x^{m_i}`: for each closed point, the
/// lengths of its cyclic summands.
///
/// Points are opaque labels compared by string equality. Lengths at a point
/// are kept sorted so that equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TorsionSheaf {
    stalks: BTreeMap<String, Vec<u64>>,
}

impl TorsionSheaf {
    pub fn empty() -> Self {
        TorsionSheaf::default()
    }

    /// Builds a sheaf from `(point, lengths)` pairs; repeated points are merged.
    pub fn from_stalks<I, S>(stalks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Vec<u64>)>,
        S: Into<String>,
    {
        let mut map: BTreeMap<String, Vec<u64>> = BTreeMap::new();
        for (point, lengths) in stalks {
            let point = point.into();
            if lengths.contains(&0) {
                return Err(Error::ZeroLength { point });
            }
            if lengths.is_empty() {
                continue;
            }
            map.entry(point).or_default().extend(lengths);
        }
        map.values_mut().for_each(|v| v.sort_unstable());
        Ok(TorsionSheaf { stalks: map })
    }

    /// `O_{X,x}/t_x^length` for a single point.
    pub fn skyscraper(point: impl Into<String>, length: u64) -> Result<Self> {
        TorsionSheaf::from_stalks([(point.into(), vec![length])])
    }

    pub fn stalks(&self) -> impl Iterator<Item = (&str, &[u64])> {
        self.stalks.iter().map(|(p, l)| (p.as_str(), l.as_slice()))
    }

    pub fn lengths_at(&self, point: &str) -> &[u64] {
        self.stalks.get(point).map_or(&[], Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.stalks.is_empty()
    }

    /// Total length.
    pub fn degree(&self) -> i64 {
        self.stalks.values().flatten().map(|&m| m as i64).sum()
    }
}
