use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ClusterError;

/// Antisymmetric integer exchange matrix. Vertices are 1-based in the public
/// API.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn zero(n: usize) -> Self {
        ExchangeMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let n = rows.len();
        if n == 0 {
            return Err(ClusterError::Malformed("exchange matrix is empty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(ClusterError::Malformed("exchange matrix is not square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = ExchangeMatrix { n, entries };
        for i in 0..n {
            for j in 0..n {
                if m.entries[i * n + j] != -m.entries[j * n + i] {
                    return Err(ClusterError::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(m)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// `b_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Sets `b_ij = v` and `b_ji = -v`.
    pub fn set_pair(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j || v == 0, "diagonal must stay zero");
        self.entries[(i - 1) * self.n + (j - 1)] = v;
        self.entries[(j - 1) * self.n + (i - 1)] = -v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub(crate) fn check_vertex(&self, k: usize) -> Result<(), ClusterError> {
        if k == 0 || k > self.n {
            return Err(ClusterError::IndexOutOfRange { k, n: self.n });
        }
        Ok(())
    }

    /// Matrix mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        self.check_vertex(k)?;
        let n = self.n;
        let mut out = ExchangeMatrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let (bik, bkj) = (self.get(i, k), self.get(k, j));
                    self.get(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                out.entries[(i - 1) * n + (j - 1)] = v;
            }
        }
        Ok(out)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for ExchangeMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExchangeMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        ExchangeMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_antisymmetric() {
        assert!(matches!(
            ExchangeMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]),
            Err(ClusterError::NotAntisymmetric { .. })
        ));
        assert!(ExchangeMatrix::from_rows(vec![vec![1]]).is_err());
        assert!(ExchangeMatrix::from_rows(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn mutation_is_involutive_on_a_triangle() {
        let b = ExchangeMatrix::from_rows(vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap();
        for k in 1..=3 {
            let m = b.mutate(k).unwrap();
            assert!(m.is_antisymmetric());
            assert_eq!(m.mutate(k).unwrap(), b);
        }
        // mutating an oriented 3-cycle at a vertex kills the opposite edge
        let m = b.mutate(1).unwrap();
        assert_eq!(m.get(2, 3), 0);
        assert_eq!(b.mutate(0).unwrap_err(), ClusterError::IndexOutOfRange { k: 0, n: 3 });
    }
}
