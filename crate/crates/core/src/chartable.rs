//! Character tables of finite groups with exact cyclotomic values, in a
//! fixed, user-visible enumeration of the irreducibles. Built-in tables
//! cover the cyclic, dihedral and symmetric (<= S4) families plus direct
//! products; arbitrary tables can be loaded from JSON and are validated
//! against row orthogonality and the degree sum.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};
use crate::linalg::CycMat;
use crate::num::{parse_rat, rat_i64, Rat};

#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: String,
    pub degree: usize,
    /// one value per conjugacy class, exact
    pub values: Vec<Cyc>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    irreps: Vec<Irrep>,
}

impl CharacterTable {
    pub fn new(group: FiniteGroup, irreps: Vec<Irrep>) -> Result<Self> {
        let t = CharacterTable { group, irreps };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        let ncls = g.classes().len();
        if self.irreps.len() != ncls {
            return Err(Error::Validation(format!(
                "{} irreducibles for {} classes",
                self.irreps.len(),
                ncls
            )));
        }
        let mut degree_sq = 0usize;
        for irr in &self.irreps {
            if irr.values.len() != ncls {
                return Err(Error::Structural(format!(
                    "character {} has {} values for {} classes",
                    irr.name,
                    irr.values.len(),
                    ncls
                )));
            }
            let deg = irr.values[0].try_rat().ok_or_else(|| {
                Error::Validation(format!("character {} is irrational at the identity", irr.name))
            })?;
            if deg != rat_i64(irr.degree as i64) {
                return Err(Error::Validation(format!(
                    "character {} declares degree {} but takes {} at the identity",
                    irr.name, irr.degree, deg
                )));
            }
            degree_sq += irr.degree * irr.degree;
        }
        if degree_sq != g.order() {
            return Err(Error::Validation(format!(
                "sum of squared degrees {} != |G| = {}",
                degree_sq,
                g.order()
            )));
        }
        // row orthogonality, exact
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate() {
                let mut acc = Cyc::zero();
                for (c, class) in g.classes().iter().enumerate() {
                    let size = Cyc::from_i64(class.len() as i64);
                    acc += size * a.values[c].clone() * b.values[c].conj();
                }
                let want = if i == j { g.order() as i64 } else { 0 };
                if acc != Cyc::from_i64(want) {
                    return Err(Error::Validation(format!(
                        "row orthogonality fails for ({}, {})",
                        a.name, b.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn num_irreducibles(&self) -> usize {
        self.irreps.len()
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.irreps[idx].name
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.irreps[idx].degree
    }

    /// chi_idx(g), exact.
    pub fn value(&self, idx: usize, g: usize) -> &Cyc {
        &self.irreps[idx].values[self.group.class_of(g)]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.irreps
            .iter()
            .position(|i| i.name == name)
            .ok_or_else(|| Error::Structural(format!("no irreducible named {name:?}")))
    }

    /// Index of the irreducible with the given character values per element.
    pub fn match_character(&self, per_element: &[Cyc]) -> Option<usize> {
        'outer: for (i, irr) in self.irreps.iter().enumerate() {
            for (g, v) in per_element.iter().enumerate() {
                if irr.values[self.group.class_of(g)] != *v {
                    continue 'outer;
                }
            }
            return Some(i);
        }
        None
    }

    /// The dual irreducible (conjugate character).
    pub fn dual(&self, idx: usize) -> usize {
        let per: Vec<Cyc> = (0..self.group.order())
            .map(|g| self.value(idx, g).conj())
            .collect();
        self.match_character(&per)
            .expect("conjugate of an irreducible character is in the table")
    }
}

/// Characters chi_j(a) = zeta_n^{ja} of Z_n, enumerated chi0..chi{n-1}.
pub fn cyclic_table(n: usize) -> CharacterTable {
    let g = group::cyclic(n);
    let irreps = (0..n)
        .map(|j| Irrep {
            name: format!("chi{j}"),
            degree: 1,
            values: g
                .classes()
                .iter()
                .map(|cl| Cyc::root_of_unity(n as u32, (j * cl[0]) as i64))
                .collect(),
        })
        .collect();
    CharacterTable::new(g, irreps).expect("cyclic character table")
}

/// Dihedral character table (order 2n), linear characters first, then the
/// two-dimensional ones chi_j(r^a) = zeta^{ja} + zeta^{-ja}.
pub fn dihedral_table(n: usize) -> CharacterTable {
    let g = group::dihedral(n);
    let per_element = |f: &dyn Fn(bool, usize) -> Cyc| -> Vec<Cyc> {
        g.classes()
            .iter()
            .map(|cl| {
                let e = cl[0];
                f(e >= n, e % n)
            })
            .collect()
    };
    let mut irreps = Vec::new();
    irreps.push(Irrep {
        name: "triv".into(),
        degree: 1,
        values: per_element(&|_, _| Cyc::one()),
    });
    irreps.push(Irrep {
        name: "det".into(),
        degree: 1,
        values: per_element(&|refl, _| Cyc::from_i64(if refl { -1 } else { 1 })),
    });
    if n % 2 == 0 {
        irreps.push(Irrep {
            name: "sgn_r".into(),
            degree: 1,
            values: per_element(&|_, i| Cyc::from_i64(if i % 2 == 0 { 1 } else { -1 })),
        });
        irreps.push(Irrep {
            name: "sgn_rs".into(),
            degree: 1,
            values: per_element(&|refl, i| {
                let s = if i % 2 == 0 { 1 } else { -1 };
                Cyc::from_i64(if refl { -s } else { s })
            }),
        });
    }
    let two_dim_count = if n % 2 == 0 { n / 2 - 1 } else { (n - 1) / 2 };
    for j in 1..=two_dim_count {
        irreps.push(Irrep {
            name: format!("rho{j}"),
            degree: 2,
            values: per_element(&|refl, i| {
                if refl {
                    Cyc::zero()
                } else {
                    Cyc::root_of_unity(n as u32, (j * i) as i64)
                        + Cyc::root_of_unity(n as u32, -((j * i) as i64))
                }
            }),
        });
    }
    CharacterTable::new(g, irreps).expect("dihedral character table")
}

/// S3 and S4 tables with integer characters, classes identified by cycle type.
pub fn symmetric_table(n: usize) -> CharacterTable {
    let g = group::symmetric(n);
    let perms = group::permutations(n);
    let cycle_type = |p: &[usize]| -> Vec<usize> {
        let mut seen = vec![false; p.len()];
        let mut lens = Vec::new();
        for s in 0..p.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    };
    let class_type: Vec<Vec<usize>> = g
        .classes()
        .iter()
        .map(|cl| cycle_type(&perms[cl[0]]))
        .collect();
    let rows: Vec<(&str, usize, Vec<(Vec<usize>, i64)>)> = match n {
        1 => vec![("triv", 1, vec![(vec![1], 1)])],
        2 => vec![
            ("triv", 1, vec![(vec![1, 1], 1), (vec![2], 1)]),
            ("sgn", 1, vec![(vec![1, 1], 1), (vec![2], -1)]),
        ],
        3 => vec![
            ("triv", 1, vec![(vec![1, 1, 1], 1), (vec![2, 1], 1), (vec![3], 1)]),
            ("sgn", 1, vec![(vec![1, 1, 1], 1), (vec![2, 1], -1), (vec![3], 1)]),
            ("std", 2, vec![(vec![1, 1, 1], 2), (vec![2, 1], 0), (vec![3], -1)]),
        ],
        4 => vec![
            (
                "triv",
                1,
                vec![
                    (vec![1, 1, 1, 1], 1),
                    (vec![2, 1, 1], 1),
                    (vec![2, 2], 1),
                    (vec![3, 1], 1),
                    (vec![4], 1),
                ],
            ),
            (
                "sgn",
                1,
                vec![
                    (vec![1, 1, 1, 1], 1),
                    (vec![2, 1, 1], -1),
                    (vec![2, 2], 1),
                    (vec![3, 1], 1),
                    (vec![4], -1),
                ],
            ),
            (
                "two",
                2,
                vec![
                    (vec![1, 1, 1, 1], 2),
                    (vec![2, 1, 1], 0),
                    (vec![2, 2], 2),
                    (vec![3, 1], -1),
                    (vec![4], 0),
                ],
            ),
            (
                "std",
                3,
                vec![
                    (vec![1, 1, 1, 1], 3),
                    (vec![2, 1, 1], 1),
                    (vec![2, 2], -1),
                    (vec![3, 1], 0),
                    (vec![4], -1),
                ],
            ),
            (
                "std_sgn",
                3,
                vec![
                    (vec![1, 1, 1, 1], 3),
                    (vec![2, 1, 1], -1),
                    (vec![2, 2], -1),
                    (vec![3, 1], 0),
                    (vec![4], 1),
                ],
            ),
        ],
        _ => panic!("symmetric tables supported up to S4"),
    };
    let irreps = rows
        .into_iter()
        .map(|(name, degree, vals)| {
            let lookup: std::collections::HashMap<Vec<usize>, i64> = vals.into_iter().collect();
            Irrep {
                name: name.to_string(),
                degree,
                values: class_type.iter().map(|t| Cyc::from_i64(lookup[t])).collect(),
            }
        })
        .collect();
    CharacterTable::new(g, irreps).expect("symmetric character table")
}

/// Table of A x B with characters chi_a x chi_b, enumeration row-major in
/// the factor enumerations.
pub fn product_table(a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let g = group::direct_product(a.group(), b.group());
    let nb = b.group().order();
    let mut irreps = Vec::new();
    for ia in a.irreps() {
        for ib in b.irreps() {
            let values = g
                .classes()
                .iter()
                .map(|cl| {
                    let e = cl[0];
                    let (x, y) = (e / nb, e % nb);
                    ia.values[a.group().class_of(x)].clone() * ib.values[b.group().class_of(y)].clone()
                })
                .collect();
            irreps.push(Irrep {
                name: format!("{}x{}", ia.name, ib.name),
                degree: ia.degree * ib.degree,
                values,
            });
        }
    }
    CharacterTable::new(g, irreps).expect("product character table")
}

/// Left regular representation: permutation matrices g |-> [e_h -> e_{gh}].
pub fn regular_representation(g: &FiniteGroup) -> Vec<CycMat> {
    (0..g.order())
        .map(|x| {
            let mut m = CycMat::zeros(g.order(), g.order());
            for h in 0..g.order() {
                m.set(g.mul(x, h), h, Cyc::one());
            }
            m
        })
        .collect()
}

/// Defining planar representation of Z_n (rotations) as exact cyclotomic
/// matrices: cos/sin entries live in Q(zeta_{lcm(4,n)}).
pub fn cyclic_rotation_rep(n: usize) -> Vec<CycMat> {
    (0..n).map(|a| rotation_matrix(n, a as i64)).collect()
}

/// 2x2 rotation by 2 pi a / n with exact cyclotomic entries.
pub fn rotation_matrix(n: usize, a: i64) -> CycMat {
    let z = Cyc::root_of_unity(n as u32, a);
    let zb = z.conj();
    let half = Rat::new(1.into(), 2.into());
    let cos = (z.clone() + zb.clone()).scale(&half);
    // sin = (z - conj z)/(2i)
    let sin = ((z - zb) * Cyc::i().inv()).scale(&half);
    CycMat::from_rows(vec![vec![cos.clone(), -sin.clone()], vec![sin, cos]])
}

/// Defining planar representation of the dihedral group (order 2n):
/// rotations and reflections.
pub fn dihedral_planar_rep(n: usize) -> Vec<CycMat> {
    let mut mats = cyclic_rotation_rep(n);
    let flip = CycMat::from_rows(vec![
        vec![Cyc::one(), Cyc::zero()],
        vec![Cyc::zero(), Cyc::from_i64(-1)],
    ]);
    for a in 0..n {
        mats.push(flip.mul(&rotation_matrix(n, a as i64)));
    }
    mats
}

/// Permutation representation of S_n on C^n.
pub fn symmetric_permutation_rep(n: usize) -> Vec<CycMat> {
    group::permutations(n)
        .into_iter()
        .map(|p| {
            let mut m = CycMat::zeros(n, n);
            for (src, &dst) in p.iter().enumerate() {
                m.set(dst, src, Cyc::one());
            }
            m
        })
        .collect()
}

// ---------------------------------------------------------------------------
// file format

#[derive(Serialize, Deserialize)]
pub struct CharTableFile {
    pub irreducibles: Vec<IrrepFile>,
    pub order_of_enumeration: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct IrrepFile {
    pub name: String,
    pub degree: usize,
    /// per conjugacy class; entries as {"re": "p/q", "im": "p/q"} or
    /// {"order": n, "coeffs": ["p/q", ...]} for cyclotomic values
    pub values: Vec<serde_json::Value>,
}

pub fn chartable_from_json(group: FiniteGroup, text: &str) -> Result<CharacterTable> {
    let file: CharTableFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("character table parse: {e}")))?;
    chartable_from_file(group, file)
}

pub fn chartable_from_file(group: FiniteGroup, file: CharTableFile) -> Result<CharacterTable> {
    let names: Vec<&str> = file.irreducibles.iter().map(|i| i.name.as_str()).collect();
    if file.order_of_enumeration != names {
        return Err(Error::Validation(
            "order_of_enumeration does not match the irreducibles list".into(),
        ));
    }
    let irreps = file
        .irreducibles
        .into_iter()
        .map(|i| {
            let values = i.values.iter().map(parse_value).collect::<Result<Vec<_>>>()?;
            Ok(Irrep { name: i.name, degree: i.degree, values })
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::new(group, irreps)
}

pub fn parse_value(v: &serde_json::Value) -> Result<Cyc> {
    match v {
        serde_json::Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Io("non-integer numeric table value".into()))?;
            Ok(Cyc::from_i64(i))
        }
        serde_json::Value::String(s) => Ok(Cyc::from_rat(parse_rat(s)?)),
        serde_json::Value::Object(map) => {
            if map.contains_key("order") {
                let order = map["order"]
                    .as_u64()
                    .ok_or_else(|| Error::Io("bad cyclotomic order".into()))? as u32;
                let coeffs = map["coeffs"]
                    .as_array()
                    .ok_or_else(|| Error::Io("bad cyclotomic coeffs".into()))?;
                let mut acc = Cyc::zero();
                for (j, c) in coeffs.iter().enumerate() {
                    let r = match c {
                        serde_json::Value::String(s) => parse_rat(s)?,
                        serde_json::Value::Number(n) => Rat::from_integer(
                            n.as_i64().ok_or_else(|| Error::Io("bad coeff".into()))?.into(),
                        ),
                        _ => return Err(Error::Io("bad cyclotomic coefficient".into())),
                    };
                    acc += Cyc::root_of_unity(order, j as i64).scale(&r);
                }
                Ok(acc)
            } else {
                let re = map.get("re").map(parse_value).transpose()?.unwrap_or_else(Cyc::zero);
                let im = map.get("im").map(parse_value).transpose()?.unwrap_or_else(Cyc::zero);
                Ok(re + Cyc::i() * im)
            }
        }
        _ => Err(Error::Io("bad character table value".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_orthogonal() {
        for n in 1..=8 {
            let t = cyclic_table(n);
            assert_eq!(t.num_irreducibles(), n);
        }
    }

    #[test]
    fn dihedral_tables() {
        for n in 3..=6 {
            let t = dihedral_table(n);
            assert_eq!(t.group().order(), 2 * n);
        }
        // D4: 4 linear + 1 two-dimensional
        let d4 = dihedral_table(4);
        let degrees: Vec<usize> = d4.irreps().iter().map(|i| i.degree).collect();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn symmetric_tables() {
        let s3 = symmetric_table(3);
        assert_eq!(s3.num_irreducibles(), 3);
        let s4 = symmetric_table(4);
        let degrees: Vec<usize> = s4.irreps().iter().map(|i| i.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn products() {
        let t = product_table(&cyclic_table(2), &cyclic_table(3));
        assert_eq!(t.num_irreducibles(), 6);
    }

    #[test]
    fn duals() {
        let t = cyclic_table(4);
        assert_eq!(t.dual(1), 3);
        assert_eq!(t.dual(2), 2);
    }

    #[test]
    fn rotation_rep_is_orthogonal() {
        for n in [2usize, 3, 4, 5] {
            for m in cyclic_rotation_rep(n) {
                assert_eq!(m.transpose().mul(&m), CycMat::identity(2));
            }
        }
    }

    #[test]
    fn json_round_trip_cyclic() {
        let g = group::cyclic(3);
        let text = r#"{
            "irreducibles": [
                {"name": "chi0", "degree": 1, "values": [1, 1, 1]},
                {"name": "chi1", "degree": 1, "values": [1,
                    {"order": 3, "coeffs": ["0", "1"]},
                    {"order": 3, "coeffs": ["-1", "-1"]}]},
                {"name": "chi2", "degree": 1, "values": [1,
                    {"order": 3, "coeffs": ["-1", "-1"]},
                    {"order": 3, "coeffs": ["0", "1"]}]}
            ],
            "order_of_enumeration": ["chi0", "chi1", "chi2"]
        }"#;
        let t = chartable_from_json(g, text).unwrap();
        assert_eq!(t.num_irreducibles(), 3);
        assert_eq!(t.value(1, 1), &Cyc::root_of_unity(3, 1));
    }
}
