use serde::Serialize;

use crate::algebra::{Rational, RationalFunction, Scalar};
use crate::braid::{BraidWord, GroupKind};
use crate::checker::{check_factorization, check_forbidden, verify_presentation, Limits, Variant};
use crate::cluster::{build_quiver, phi_n2, phi_y_n2, psi_n2, psi_y_n2};
use crate::representation::{apply_word_with, LocalOperators, Point, Standard};

/// One line of the regression table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Row {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Row {
        Row {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Words with known images at a fixed base point.
pub const REFERENCE_IMAGES: [(&str, GroupKind, usize, &str, &str); 5] = [
    ("s1 r1 s1", GroupKind::Virtual, 2, "1,2,2,1", "-6/5,-5/3,-5/3,-6/5"),
    (
        "s1 s1 r1 S1 r1 S1 r1 s1 s1 r1 S1 r1 S1 r1",
        GroupKind::Virtual,
        2,
        "1,2,2,1",
        "-44/19,-19/22,-19/22,-44/19",
    ),
    (
        "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1",
        GroupKind::Virtual,
        3,
        "1,2,2,1,1,2",
        "2488285076682521504/1290542656863845663,1290542656863845663/1244142538341260752,\
         1290542656863845663/563568067426145589,1127136134852291178/1290542656863845663,\
         574648281/1268603408,2537206816/574648281",
    ),
    ("s1 s2 s1 s2", GroupKind::FlatBraid, 3, "1,2,2", "-2/5,-10/7,7"),
    ("s2 r1 s1 r2", GroupKind::FlatVirtual, 3, "1,2,2", "-5,4/11,-11/5"),
];

/// The printed exchange matrix of the two-strand quiver.
pub const QUIVER_TWO: [[i64; 7]; 7] = [
    [0, 1, -1, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, -1, 0, 0, 0],
    [0, -1, 1, 0, 1, -1, 0],
    [0, 0, 0, -1, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, 0, -1, 1, 0],
];

fn image_row<O: LocalOperators>(ops: &O, text: &str, group: GroupKind, n: usize, base: &str, want: &str) -> Row {
    let name = format!("image of {text} ({group}{n}) at {base}");
    let word = BraidWord::parse(text, n, group).expect("reference word parses");
    let base: Point<Rational> = base.parse().expect("reference base parses");
    let want: Point<Rational> = want.parse().expect("reference image parses");
    match apply_word_with(ops, &word, &base) {
        Ok(got) if got == want => Row::new(name, true, got.to_string()),
        Ok(got) => Row::new(name, false, format!("got {got}, expected {want}")),
        Err(e) => Row::new(name, false, e.to_string()),
    }
}

fn same(a: &[RationalFunction], b: &[RationalFunction]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.equals(q))
}

fn vars(k: u32) -> Vec<RationalFunction> {
    (1..=k).map(RationalFunction::var).collect()
}

type Map = fn(&[RationalFunction]) -> Result<Vec<RationalFunction>, crate::cluster::ClusterError>;

fn inverse_row(name: &str, f: Map, g: Map) -> Row {
    let x = vars(7);
    let ok =
        f(&x).and_then(|y| g(&y)).is_ok_and(|z| same(&z, &x)) && g(&x).and_then(|y| f(&y)).is_ok_and(|z| same(&z, &x));
    Row::new(
        name,
        ok,
        if ok {
            "identity on 7 variables"
        } else {
            "composition is not the identity"
        },
    )
}

fn on_slice() -> Vec<RationalFunction> {
    let mut y = vars(7);
    for i in [0, 3, 6] {
        y[i] = RationalFunction::constant(Rational::from(-1));
    }
    y
}

fn slice_rows() -> Vec<Row> {
    let y = on_slice();
    let m1 = RationalFunction::from_i64(-1);
    let fixed = [phi_y_n2(&y), psi_y_n2(&y)]
        .iter()
        .all(|img| img.as_ref().is_ok_and(|v| [0, 3, 6].iter().all(|&i| v[i].equals(&m1))));
    let window: Vec<RationalFunction> = [1, 2, 4, 5].iter().map(|&i| y[i].clone()).collect();
    let restricts = |img: Result<Vec<RationalFunction>, _>, local: Result<Vec<RationalFunction>, _>| match (img, local)
    {
        (Ok(img), Ok(local)) => {
            let picked: Vec<RationalFunction> = [1, 2, 4, 5].iter().map(|&i| img[i].clone()).collect();
            same(&picked, &local)
        }
        _ => false,
    };
    let phi_s = restricts(phi_y_n2(&y), Standard.s(&window).map_err(|_| ()));
    let psi_s = restricts(psi_y_n2(&y), Standard.s_inv(&window).map_err(|_| ()));
    vec![
        Row::new(
            "y1=y4=y7=-1 is preserved by phi and psi",
            fixed,
            "coordinates 1, 4, 7 stay -1",
        ),
        Row::new(
            "phi on the slice is S, psi is S^-1",
            phi_s && psi_s,
            "compared on (y2, y3, y5, y6)",
        ),
    ]
}

fn bridge_row() -> Row {
    // S on (z1, 1/z1, z3, 1/z3) carries (z1, z3) by R and stays on the slice
    let (z1, z3) = (RationalFunction::var(1), RationalFunction::var(3));
    let p = [
        z1.clone(),
        z1.inv().expect("nonzero"),
        z3.clone(),
        z3.inv().expect("nonzero"),
    ];
    let ok = (|| -> Option<bool> {
        let s = Standard.s(&p).ok()?;
        let r = Standard.r(&[z1.clone(), z3.clone()]).ok()?;
        let back = Standard.s(&s).ok()?;
        Some(
            s[0].equals(&r[0])
                && s[2].equals(&r[1])
                && s[1].equals(&s[0].inv().ok()?)
                && s[3].equals(&s[2].inv().ok()?)
                && same(&back, &p),
        )
    })()
    .unwrap_or(false);
    Row::new("S on (z1,1/z1,z3,1/z3) is R and an involution", ok, "symbolic")
}

fn quiver_row() -> Row {
    let want: Vec<Vec<i64>> = QUIVER_TWO.iter().map(|r| r.to_vec()).collect();
    let ok = build_quiver(2).is_ok_and(|b| b.rows() == want);
    Row::new("two-strand quiver matrix", ok, "7x7, entrywise")
}

fn presentation_rows() -> Vec<Row> {
    let mut rows = Vec::new();
    for group in GroupKind::ALL {
        for n in 2..=3 {
            let name = format!("defining relations of {group}{n}");
            rows.push(match verify_presentation(group, n, Limits::default()) {
                Ok(v) => {
                    let failed: Vec<&str> = v.iter().filter(|r| !r.holds).map(|r| r.relation.as_str()).collect();
                    let detail = if failed.is_empty() {
                        format!("{} relations hold", v.len())
                    } else {
                        format!("fail: {}", failed.join("; "))
                    };
                    Row::new(name, failed.is_empty(), detail)
                }
                Err(e) => Row::new(name, false, e.to_string()),
            });
        }
    }
    rows
}

fn forbidden_rows() -> Vec<Row> {
    let mut rows = Vec::new();
    for group in [GroupKind::Virtual, GroupKind::FlatVirtual] {
        for v in Variant::BOTH {
            let name = format!("forbidden relation ({v}) in {group}3");
            rows.push(match check_forbidden(group, 3, 1, v) {
                Ok(r) if r.refuted_as_expected() => {
                    let detail = match &r.slices {
                        Some(s) => format!("refuted; equal on {} slices", s.len()),
                        None => "refuted".into(),
                    };
                    Row::new(name, true, detail)
                }
                Ok(r) => Row::new(name, false, format!("holds={} slices={:?}", r.holds, r.slices)),
                Err(e) => Row::new(name, false, e.to_string()),
            });
        }
    }
    for v in Variant::BOTH {
        rows.push(Row::new(
            format!("factorization identity ({v})"),
            check_factorization(v),
            "polynomial identity",
        ));
    }
    rows
}

/// The full regression table. `ops` is used for the reference images only,
/// so a broken kernel shows up there.
pub fn reproduce_with<O: LocalOperators>(ops: &O) -> Vec<Row> {
    let mut rows: Vec<Row> = REFERENCE_IMAGES
        .iter()
        .map(|&(w, g, n, base, want)| image_row(ops, w, g, n, base, want))
        .collect();
    rows.push(inverse_row("Psi o Phi = Phi o Psi = id", phi_n2, psi_n2));
    rows.push(inverse_row(
        "psi o phi = phi o psi = id (y-variables)",
        phi_y_n2,
        psi_y_n2,
    ));
    rows.extend(slice_rows());
    rows.push(bridge_row());
    rows.push(quiver_row());
    rows.extend(presentation_rows());
    rows.extend(forbidden_rows());
    rows
}

pub fn reproduce() -> Vec<Row> {
    reproduce_with(&Standard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraError;

    #[test]
    fn clean_run_passes() {
        let rows = reproduce();
        let failed: Vec<&Row> = rows.iter().filter(|r| !r.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(rows.len() > 20);
    }

    /// S with the sign of every component flipped.
    struct Flipped;

    impl LocalOperators for Flipped {
        fn s<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError> {
            Ok(Standard.s(z)?.into_iter().map(|c| c.neg()).collect())
        }
        fn s_inv<F: Scalar>(&self, z: &[F]) -> Result<Vec<F>, AlgebraError> {
            Standard.s_inv(z)
        }
        fn r<F: Scalar>(&self, t: &[F]) -> Result<Vec<F>, AlgebraError> {
            Standard.r(t)
        }
    }

    #[test]
    fn corrupted_kernel_fails_first_row() {
        let rows = reproduce_with(&Flipped);
        assert!(!rows[0].passed);
        assert!(rows[0].detail.starts_with("got"));
    }
}
