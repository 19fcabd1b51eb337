//! Finite groups as explicit multiplication tables, with the builders the
//! fixtures need: cyclic, dihedral, symmetric up to S4, direct products.
//! Element 0 is always the identity. Conjugacy classes are computed and
//! ordered by their minimal element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table: identity at index 0, inverses,
    /// associativity (exhaustive for order <= 64, sampled above).
    pub fn new(mul: Vec<Vec<u16>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::Structural("empty multiplication table".into()));
        }
        for row in &mul {
            if row.len() != n || row.iter().any(|&x| x as usize >= n) {
                return Err(Error::Structural("multiplication table not square over 0..n".into()));
            }
        }
        for g in 0..n {
            if mul[0][g] as usize != g || mul[g][0] as usize != g {
                return Err(Error::Validation("element 0 is not an identity".into()));
            }
        }
        let mut inv = vec![u16::MAX; n];
        for g in 0..n {
            let mut found = None;
            for h in 0..n {
                if mul[g][h] == 0 && mul[h][g] == 0 {
                    found = Some(h as u16);
                    break;
                }
            }
            inv[g] = found.ok_or_else(|| {
                Error::Validation(format!("element {g} has no two-sided inverse"))
            })?;
        }
        let check = |a: usize, b: usize, c: usize| -> bool {
            mul[mul[a][b] as usize][c] == mul[a][mul[b][c] as usize]
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(Error::Validation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..200_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let a = (state >> 13) as usize % n;
                let b = (state >> 29) as usize % n;
                let c = (state >> 47) as usize % n;
                if !check(a, b, c) {
                    return Err(Error::Validation(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        let (classes, class_of) = conjugacy_classes(&mul, &inv);
        Ok(FiniteGroup { order: n, mul, inv, classes, class_of })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> usize {
        let mut l: usize = 1;
        for g in 0..self.order {
            let o = self.element_order(g);
            l = num_integer::lcm(l, o);
        }
        l
    }

    /// Elements g with g H g^{-1} = H for the given subset.
    pub fn normalizer(&self, subgroup: &[usize]) -> Vec<usize> {
        let set: std::collections::BTreeSet<usize> = subgroup.iter().copied().collect();
        (0..self.order)
            .filter(|&g| {
                subgroup
                    .iter()
                    .all(|&h| set.contains(&self.mul(self.mul(g, h), self.inv(g))))
            })
            .collect()
    }

    /// Check the map 0..|H| -> 0..|G| is an injective homomorphism.
    pub fn validate_embedding(&self, h: &FiniteGroup, emb: &[usize]) -> Result<()> {
        if emb.len() != h.order() {
            return Err(Error::Structural("embedding length != |H|".into()));
        }
        let mut seen = vec![false; self.order];
        for &g in emb {
            if g >= self.order || seen[g] {
                return Err(Error::Structural("embedding not injective into G".into()));
            }
            seen[g] = true;
        }
        if emb[0] != 0 {
            return Err(Error::Validation("embedding does not fix the identity".into()));
        }
        for a in 0..h.order() {
            for b in 0..h.order() {
                if self.mul(emb[a], emb[b]) != emb[h.mul(a, b)] {
                    return Err(Error::Validation(format!(
                        "embedding is not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn conjugacy_classes(mul: &[Vec<u16>], inv: &[u16]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = mul.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if class_of[g] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = std::collections::BTreeSet::new();
        for x in 0..n {
            let c = mul[mul[x][g] as usize][inv[x] as usize] as usize;
            members.insert(c);
        }
        for &m in &members {
            class_of[m] = id;
        }
        classes.push(members.into_iter().collect());
    }
    (classes, class_of)
}

/// Z_n with element i = generator^i.
pub fn cyclic(n: usize) -> FiniteGroup {
    let mul = (0..n)
        .map(|i| (0..n).map(|j| ((i + j) % n) as u16).collect())
        .collect();
    FiniteGroup::new(mul).expect("cyclic table is a group")
}

/// Dihedral group of order 2n: indices 0..n are rotations r^i, n..2n are
/// reflections s r^i, with s r s = r^{-1}.
pub fn dihedral(n: usize) -> FiniteGroup {
    let idx = |refl: bool, i: usize| if refl { n + i } else { i };
    let mut mul = vec![vec![0u16; 2 * n]; 2 * n];
    for a in 0..2 * n {
        for b in 0..2 * n {
            let (ra, ia) = (a >= n, a % n);
            let (rb, ib) = (b >= n, b % n);
            // (s^ra r^ia)(s^rb r^ib) = s^{ra+rb} r^{ib + ia*(-1)^rb}
            let refl = ra ^ rb;
            let i = if rb { (n + ib - ia % n) % n } else { (ia + ib) % n };
            mul[a][b] = idx(refl, i) as u16;
        }
    }
    FiniteGroup::new(mul).expect("dihedral table is a group")
}

/// Permutations of {0..n-1} in lexicographic one-line order; composition
/// (p * q)(x) = p(q(x)). Panics for n > 4 (beyond the supported fixtures).
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 1 && n <= 4, "symmetric groups supported up to S4");
    let perms = permutations(n);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut mul = vec![vec![0u16; perms.len()]; perms.len()];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            mul[a][b] = index[&comp] as u16;
        }
    }
    FiniteGroup::new(mul).expect("symmetric table is a group")
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let mut mul = vec![vec![0u16; na * nb]; na * nb];
    for i in 0..na {
        for j in 0..nb {
            for x in 0..na {
                for y in 0..nb {
                    mul[i * nb + j][x * nb + y] = (a.mul(i, x) * nb + b.mul(j, y)) as u16;
                }
            }
        }
    }
    FiniteGroup::new(mul).expect("product table is a group")
}

/// On-disk group format.
#[derive(Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub mul: Vec<Vec<u16>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<usize>>>,
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("group parse: {e}")))?;
    if file.mul.len() != file.order {
        return Err(Error::Structural("declared order != table size".into()));
    }
    let g = FiniteGroup::new(file.mul)?;
    if let Some(classes) = file.classes {
        let mut got: Vec<Vec<usize>> = g.classes().to_vec();
        let mut want = classes;
        for c in want.iter_mut() {
            c.sort();
        }
        got.sort();
        want.sort();
        if got != want {
            return Err(Error::Validation("supplied classes disagree with the table".into()));
        }
    }
    Ok(g)
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    let file = GroupFile {
        order: g.order(),
        mul: (0..g.order())
            .map(|i| (0..g.order()).map(|j| g.mul(i, j) as u16).collect())
            .collect(),
        classes: Some(g.classes().to_vec()),
    };
    serde_json::to_string_pretty(&file).expect("group serializes")
}
