use serde::{Deserialize, Serialize};

use super::{ClusterError, ExchangeMatrix};
use crate::algebra::{AlgebraError, FieldValue, Rational, RationalFunction, Scalar};

fn check_values<F: Scalar>(values: &[F], b: &ExchangeMatrix) -> Result<(), ClusterError> {
    if values.len() != b.n_vertices() {
        return Err(ClusterError::LengthMismatch {
            expected: b.n_vertices(),
            found: values.len(),
        });
    }
    if let Some(pos) = values.iter().position(Scalar::is_zero) {
        return Err(ClusterError::ZeroEntry(pos + 1));
    }
    Ok(())
}

/// A cluster seed `(x, B)`.
#[derive(Debug, Clone)]
pub struct Seed<F> {
    x: Vec<F>,
    b: ExchangeMatrix,
}

impl<F: Scalar> Seed<F> {
    pub fn new(x: Vec<F>, b: ExchangeMatrix) -> Result<Self, ClusterError> {
        check_values(&x, &b)?;
        Ok(Seed { x, b })
    }

    pub fn x(&self) -> &[F] {
        &self.x
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    /// Mutation in direction `k` (1-based):
    /// `x̃_k = (Π_{b_jk>0} x_j^{b_jk} + Π_{b_jk<0} x_j^{-b_jk}) / x_k`.
    pub fn mutate_x(&self, k: usize) -> Result<Self, ClusterError> {
        self.b.check_vertex(k)?;
        let (mut plus, mut minus) = (F::one(), F::one());
        for (j, xj) in self.x.iter().enumerate() {
            let e = self.b.get(j + 1, k);
            if e > 0 {
                plus = plus.mul(&xj.pow(e)?);
            } else if e < 0 {
                minus = minus.mul(&xj.pow(-e)?);
            }
        }
        let mut x = self.x.clone();
        x[k - 1] = plus.add(&minus).div(&self.x[k - 1])?;
        if x[k - 1].is_zero() {
            // the exchange binomial vanished; the next mutation at k would divide by it
            return Err(ClusterError::Algebra(AlgebraError::SingularPoint));
        }
        Ok(Seed {
            x,
            b: self.b.mutate(k)?,
        })
    }

    /// Applies a whole script left to right.
    pub fn mutate_sequence(&self, script: &[usize]) -> Result<Self, ClusterError> {
        script.iter().try_fold(self.clone(), |s, &k| s.mutate_x(k))
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.b == other.b && self.x.len() == other.x.len() && self.x.iter().zip(&other.x).all(|(a, b)| a.equals(b))
    }
}

/// `y_j = Π_k x_k^{b_kj}`.
pub fn y_from_x<F: Scalar>(seed: &Seed<F>) -> Result<Vec<F>, ClusterError> {
    let n = seed.b.n_vertices();
    (1..=n)
        .map(|j| {
            seed.x.iter().enumerate().try_fold(F::one(), |acc, (k, xk)| {
                let e = seed.b.get(k + 1, j);
                Ok(if e == 0 { acc } else { acc.mul(&xk.pow(e)?) })
            })
        })
        .collect()
}

/// A pair `(y, B)` of y-variables and exchange matrix.
#[derive(Debug, Clone)]
pub struct YSeed<F> {
    y: Vec<F>,
    b: ExchangeMatrix,
}

impl<F: Scalar> YSeed<F> {
    pub fn new(y: Vec<F>, b: ExchangeMatrix) -> Result<Self, ClusterError> {
        check_values(&y, &b)?;
        Ok(YSeed { y, b })
    }

    pub fn from_seed(seed: &Seed<F>) -> Result<Self, ClusterError> {
        YSeed::new(y_from_x(seed)?, seed.b.clone())
    }

    pub fn y(&self) -> &[F] {
        &self.y
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.b
    }

    /// `ỹ_k = y_k⁻¹`; for `i ≠ k`, `ỹ_i = y_i (1 + y_k⁻¹)^{-b_ki}` when
    /// `b_ki ≥ 0` and `y_i (1 + y_k)^{-b_ki}` otherwise.
    ///
    /// A vanishing `1 + y_k` that the rule actually needs is reported as
    /// [`AlgebraError::SingularPoint`] rather than producing a zero entry.
    pub fn mutate_y(&self, k: usize) -> Result<Self, ClusterError> {
        self.b.check_vertex(k)?;
        let yk = &self.y[k - 1];
        let yk_inv = yk.inv()?;
        let one = F::one();
        let (up, down) = (one.add(&yk_inv), one.add(yk));
        let singular = || ClusterError::Algebra(AlgebraError::SingularPoint);
        let mut y = Vec::with_capacity(self.y.len());
        for (i, yi) in self.y.iter().enumerate() {
            if i + 1 == k {
                y.push(yk_inv.clone());
                continue;
            }
            let e = self.b.get(k, i + 1);
            let v = match e {
                0 => yi.clone(),
                e if e > 0 => {
                    if up.is_zero() {
                        return Err(singular());
                    }
                    yi.mul(&up.pow(-e)?)
                }
                e => {
                    if down.is_zero() {
                        return Err(singular());
                    }
                    yi.mul(&down.pow(-e)?)
                }
            };
            y.push(v);
        }
        Ok(YSeed {
            y,
            b: self.b.mutate(k)?,
        })
    }

    pub fn mutate_sequence(&self, script: &[usize]) -> Result<Self, ClusterError> {
        script.iter().try_fold(self.clone(), |s, &k| s.mutate_y(k))
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.b == other.b && self.y.len() == other.y.len() && self.y.iter().zip(&other.y).all(|(a, b)| a.equals(b))
    }
}

/// Parses a mutation script such as `"7,4,2"`. Whitespace around entries is
/// ignored; an empty script is allowed.
pub fn parse_script(text: &str) -> Result<Vec<usize>, ClusterError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| ClusterError::Malformed(format!("bad vertex {:?} in script", t.trim())))
        })
        .collect()
}

/// On-disk seed: `{"n_vertices": N, "x": [...], "B": [[...]]}`, with `"y"`
/// in place of `"x"` for a y-seed. Values are `p/q` strings or symbolic
/// expressions.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    pub n_vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<FieldValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<FieldValue>>,
    #[serde(rename = "B")]
    pub b: ExchangeMatrix,
}

impl SeedFile {
    pub fn from_json(text: &str) -> Result<Self, ClusterError> {
        let file: SeedFile = serde_json::from_str(text).map_err(|e| ClusterError::Malformed(e.to_string()))?;
        if file.b.n_vertices() != file.n_vertices {
            return Err(ClusterError::LengthMismatch {
                expected: file.n_vertices,
                found: file.b.n_vertices(),
            });
        }
        match (&file.x, &file.y) {
            (Some(_), None) | (None, Some(_)) => Ok(file),
            _ => Err(ClusterError::Malformed(
                "exactly one of \"x\" and \"y\" is required".into(),
            )),
        }
    }

    pub fn is_y(&self) -> bool {
        self.y.is_some()
    }

    fn values(&self) -> &[FieldValue] {
        self.x.as_deref().or(self.y.as_deref()).unwrap_or(&[])
    }

    /// The values as exact numbers, if none of them is symbolic.
    pub fn rational_values(&self) -> Option<Vec<Rational>> {
        self.values().iter().map(|v| v.as_rational().cloned()).collect()
    }

    /// The values lifted to rational functions.
    pub fn symbolic_values(&self) -> Vec<RationalFunction> {
        self.values().iter().map(FieldValue::promote).collect()
    }

    pub fn from_values<F: Scalar>(values: &[F], b: &ExchangeMatrix, as_y: bool) -> Self {
        let vals: Vec<FieldValue> = values.iter().cloned().map(Scalar::into_field_value).collect();
        SeedFile {
            n_vertices: b.n_vertices(),
            x: (!as_y).then(|| vals.clone()),
            y: as_y.then_some(vals),
            b: b.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expression;
    use crate::cluster::build_quiver;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn vars(n: u32) -> Vec<RationalFunction> {
        (1..=n).map(RationalFunction::var).collect()
    }

    #[test]
    fn isolated_vertex_gives_two_over_x() {
        let b = ExchangeMatrix::zero(2);
        let s = Seed::new(vec![q("3"), q("5")], b).unwrap();
        assert_eq!(s.mutate_x(1).unwrap().x()[0], q("2/3"));
    }

    #[test]
    fn quiver_mutation_at_seven() {
        let b = build_quiver(2).unwrap();
        let m = b.mutate(7).unwrap();
        for i in 1..=7 {
            assert_eq!(m.get(i, 7), -b.get(i, 7));
        }
        assert_eq!(m.get(5, 6), 1);
        assert_eq!(m.get(6, 5), -1);
        for i in 1..=6 {
            for j in 1..=6 {
                if (i, j) != (5, 6) && (i, j) != (6, 5) {
                    assert_eq!(m.get(i, j), b.get(i, j), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn y_variables_of_the_quiver() {
        let s = Seed::new(vars(7), build_quiver(2).unwrap()).unwrap();
        let y = y_from_x(&s).unwrap();
        assert_eq!(y[0], parse_expression("x3/x2").unwrap());
        assert_eq!(y[6], parse_expression("x5/x6").unwrap());
        let empty = Seed::new(vars(2), ExchangeMatrix::zero(2)).unwrap();
        assert!(y_from_x(&empty).unwrap().iter().all(Scalar::is_one));
    }

    #[test]
    fn mutations_are_symbolic_involutions() {
        let b = build_quiver(2).unwrap();
        let s = Seed::new(vars(7), b.clone()).unwrap();
        let ys = YSeed::new(vars(7), b).unwrap();
        for k in 1..=7 {
            assert!(s.mutate_x(k).unwrap().mutate_x(k).unwrap().equals(&s), "x at {k}");
            assert!(ys.mutate_y(k).unwrap().mutate_y(k).unwrap().equals(&ys), "y at {k}");
        }
    }

    #[test]
    fn y_mutation_commutes_with_y_from_x() {
        let s = Seed::new(vars(7), build_quiver(2).unwrap()).unwrap();
        for k in 1..=7 {
            let a = YSeed::from_seed(&s.mutate_x(k).unwrap()).unwrap();
            let b = YSeed::from_seed(&s).unwrap().mutate_y(k).unwrap();
            assert!(a.equals(&b), "k = {k}");
        }
    }

    #[test]
    fn y_rule_numeric_cases() {
        let b = build_quiver(2).unwrap();
        let ys = YSeed::new(vec![q("2"); 7], b.clone()).unwrap();
        assert_eq!(ys.mutate_y(3).unwrap().y()[2], q("1/2"));
        let mut y = vec![q("2"); 7];
        y[2] = q("-1");
        let bad = YSeed::new(y, b).unwrap();
        assert_eq!(
            bad.mutate_y(3).unwrap_err(),
            ClusterError::Algebra(AlgebraError::SingularPoint)
        );
        // no neighbours: nothing else changes, and -1 is harmless
        let lone = YSeed::new(vec![q("-1"), q("7")], ExchangeMatrix::zero(2)).unwrap();
        assert_eq!(lone.mutate_y(1).unwrap().y(), &[q("-1"), q("7")]);
    }

    #[test]
    fn seed_validation() {
        let b = ExchangeMatrix::zero(2);
        assert!(matches!(
            Seed::new(vec![q("1")], b.clone()),
            Err(ClusterError::LengthMismatch { .. })
        ));
        assert_eq!(
            Seed::new(vec![q("1"), q("0")], b.clone()).unwrap_err(),
            ClusterError::ZeroEntry(2)
        );
        let s = Seed::new(vec![q("1"), q("1")], b).unwrap();
        assert!(matches!(
            s.mutate_x(3),
            Err(ClusterError::IndexOutOfRange { k: 3, n: 2 })
        ));
    }

    #[test]
    fn scripts() {
        assert_eq!(parse_script("7,4,2").unwrap(), [7, 4, 2]);
        assert_eq!(parse_script(" 1 , 2 ").unwrap(), [1, 2]);
        assert!(parse_script("").unwrap().is_empty());
        assert!(parse_script("1,,2").is_err());
        assert!(parse_script("a").is_err());
    }

    #[test]
    fn seed_file_round_trip() {
        let text = r#"{"n_vertices": 2, "x": ["1/2", "z1 + 1"], "B": [[0, 1], [-1, 0]]}"#;
        let f = SeedFile::from_json(text).unwrap();
        assert!(!f.is_y());
        assert!(f.rational_values().is_none());
        assert_eq!(f.symbolic_values()[1], parse_expression("z1+1").unwrap());
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(back, r#"{"n_vertices":2,"x":["1/2","z1 + 1"],"B":[[0,1],[-1,0]]}"#);
        assert!(SeedFile::from_json(r#"{"n_vertices": 3, "x": ["1"], "B": [[0, 1], [-1, 0]]}"#).is_err());
        assert!(SeedFile::from_json(r#"{"n_vertices": 2, "B": [[0, 1], [-1, 0]]}"#).is_err());
        assert!(SeedFile::from_json(r#"{"n_vertices": 2, "x": ["1","1"], "B": [[0, 1], [1, 0]]}"#).is_err());
    }
}
