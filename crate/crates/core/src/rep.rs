//! Isotypic projections, restriction and induction multiplicities,
//! normalizer conjugation of irreducibles, the fine partition of the dual,
//! and the canonical isotropy-bundle integers (lowest-index containing
//! irreducible, associated multiplicity, dimension, inequivalence number).

use num_traits::ToPrimitive;

use crate::chartable::CharacterTable;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::CycMat;
use crate::num::Rat;

/// Group-averaged isotypic projector P_rho = (dim V_rho / |G|) sum_g
/// conj(chi_rho(g)) M_g; validates that `rep` is a unitary representation.
pub fn isotypic_projector(table: &CharacterTable, rho: usize, rep: &[CycMat]) -> Result<CycMat> {
    let g = table.group();
    if rep.len() != g.order() {
        return Err(Error::Structural("representation must supply one matrix per element".into()));
    }
    let dim = rep[0].nrows();
    if !rep[0].sub(&CycMat::identity(dim)).is_zero() {
        return Err(Error::Validation("representation must send the identity to I".into()));
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if rep[a].mul(&rep[b]) != rep[g.mul(a, b)] {
                return Err(Error::Validation(format!(
                    "matrices are not a representation: fails at ({a},{b})"
                )));
            }
        }
    }
    Ok(isotypic_projector_unchecked(table, rho, rep))
}

/// Projector without re-validating `rep`; for representations built by the
/// crate itself.
pub fn isotypic_projector_unchecked(table: &CharacterTable, rho: usize, rep: &[CycMat]) -> CycMat {
    let g = table.group();
    let dim = rep[0].nrows();
    let mut acc = CycMat::zeros(dim, dim);
    for x in 0..g.order() {
        let chi = table.value(rho, x).conj();
        if chi.is_zero() {
            continue;
        }
        acc = acc.add(&rep[x].scale(&chi));
    }
    let factor = Rat::new((table.degree(rho) as i64).into(), (g.order() as i64).into());
    acc.scale(&Cyc::from_rat(factor))
}

/// Used by the polyspace oracle: projector onto the alpha-isotypic part of
/// the polynomial representation.
pub fn isotypic_projector_for(table: &CharacterTable, rho: usize, rep: &[CycMat]) -> Result<CycMat> {
    if rho >= table.num_irreducibles() {
        return Err(Error::Structural(format!("irreducible index {rho} out of range")));
    }
    Ok(isotypic_projector_unchecked(table, rho, rep))
}

/// Multiplicities n_sigma^rho of each H-irreducible in the restriction of
/// the G-irreducible `rho` along the embedding H -> G.
pub fn restriction_multiplicities(
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    embedding: &[usize],
    rho: usize,
) -> Result<Vec<usize>> {
    table_g.group().validate_embedding(table_h.group(), embedding)?;
    let h = table_h.group();
    let mut out = Vec::with_capacity(table_h.num_irreducibles());
    for sigma in 0..table_h.num_irreducibles() {
        let mut acc = Cyc::zero();
        for x in 0..h.order() {
            acc += table_g.value(rho, embedding[x]).clone() * table_h.value(sigma, x).conj();
        }
        let n = acc
            .try_rat()
            .and_then(|r| {
                let v = r / Rat::new((h.order() as i64).into(), 1.into());
                if v.is_integer() && v.numer().to_i64().map_or(false, |x| x >= 0) {
                    v.numer().to_usize()
                } else {
                    None
                }
            })
            .ok_or_else(|| {
                Error::Validation(format!(
                    "inconsistent tables: <Res {}, {}> is not a nonnegative integer",
                    table_g.name(rho),
                    table_h.name(sigma)
                ))
            })?;
        out.push(n);
    }
    let total: usize = out
        .iter()
        .enumerate()
        .map(|(s, n)| n * table_h.degree(s))
        .sum();
    if total != table_g.degree(rho) {
        return Err(Error::Validation(format!(
            "restriction of {} sums to dimension {total}, expected {}",
            table_g.name(rho),
            table_g.degree(rho)
        )));
    }
    Ok(out)
}

/// Character of Ind_H^G sigma as a per-class vector (Frobenius formula).
pub fn induced_character(
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    embedding: &[usize],
    sigma: usize,
) -> Vec<Cyc> {
    let g = table_g.group();
    let h = table_h.group();
    let image: std::collections::HashMap<usize, usize> =
        embedding.iter().enumerate().map(|(hh, &gg)| (gg, hh)).collect();
    let scale = Rat::new(1.into(), (h.order() as i64).into());
    g.classes()
        .iter()
        .map(|cl| {
            let e = cl[0];
            let mut acc = Cyc::zero();
            for x in 0..g.order() {
                let conj = g.mul(g.mul(g.inv(x), e), x);
                if let Some(&hh) = image.get(&conj) {
                    acc += table_h.value(sigma, hh).clone();
                }
            }
            acc.scale(&scale)
        })
        .collect()
}

/// An automorphism of H presented as the permutation h -> n^{-1} h n, pulled
/// back through an embedding into G. Errors when conjugation leaves H.
pub fn conjugation_automorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    embedding: &[usize],
    n: usize,
) -> Result<Vec<usize>> {
    g.validate_embedding(h, embedding)?;
    let image: std::collections::HashMap<usize, usize> =
        embedding.iter().enumerate().map(|(hh, &gg)| (gg, hh)).collect();
    (0..h.order())
        .map(|x| {
            let c = g.mul(g.mul(g.inv(n), embedding[x]), n);
            image
                .get(&c)
                .copied()
                .ok_or_else(|| Error::Structural(format!("conjugation by {n} maps H outside itself")))
        })
        .collect()
}

/// The label sigma^n with character chi_sigma(n^{-1} h n); always exists and
/// is unique.
pub fn sigma_conjugate(table_h: &CharacterTable, sigma: usize, aut: &[usize]) -> Result<usize> {
    let h = table_h.group();
    if aut.len() != h.order() {
        return Err(Error::Structural("automorphism must cover H".into()));
    }
    let per: Vec<Cyc> = (0..h.order())
        .map(|x| table_h.value(sigma, aut[x]).clone())
        .collect();
    table_h
        .match_character(&per)
        .ok_or_else(|| Error::Validation("conjugated character is not in the table".into()))
}

/// Orbits of the irreducible labels under a set of automorphisms (closed
/// under composition or not; orbits are computed to closure). Blocks are
/// reported sorted, smallest member first.
pub fn fine_partition(table_h: &CharacterTable, auts: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let n = table_h.num_irreducibles();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for aut in auts {
        for sigma in 0..n {
            let tau = sigma_conjugate(table_h, sigma, aut)?;
            let (a, b) = (find(&mut parent, sigma), find(&mut parent, tau));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for sigma in 0..n {
        let r = find(&mut parent, sigma);
        by_root.entry(r).or_default().push(sigma);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    // constant dimension within a block (normalizer conjugation preserves it)
    for b in &blocks {
        let d0 = table_h.degree(b[0]);
        if b.iter().any(|&s| table_h.degree(s) != d0) {
            return Err(Error::Oracle("fine block mixes dimensions".into()));
        }
    }
    Ok(blocks)
}

/// All conjugation automorphisms of H induced by the normalizer of its
/// image in G.
pub fn normalizer_automorphisms(
    g: &FiniteGroup,
    h: &FiniteGroup,
    embedding: &[usize],
) -> Result<Vec<Vec<usize>>> {
    g.validate_embedding(h, embedding)?;
    let image: Vec<usize> = embedding.to_vec();
    let norm = g.normalizer(&image);
    norm.into_iter()
        .map(|n| conjugation_automorphism(g, h, embedding, n))
        .collect()
}

/// The canonical isotropy-bundle integers attached to (enumeration of
/// G-irreducibles, H, sigma): j0 the lowest index whose restriction contains
/// sigma, m its multiplicity there, d = dim sigma, n the size of the fine
/// block of sigma under the supplied normalizer action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBundleData {
    pub j0: usize,
    pub multiplicity: usize,
    pub dim_sigma: usize,
    pub inequivalence: usize,
    pub rank: usize,
}

pub fn canonical_bundle_data(
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    embedding: &[usize],
    sigma: usize,
    auts: &[Vec<usize>],
) -> Result<CanonicalBundleData> {
    let mut j0 = None;
    for j in 0..table_g.num_irreducibles() {
        let n = restriction_multiplicities(table_g, table_h, embedding, j)?[sigma];
        if n > 0 {
            j0 = Some((j, n));
            break;
        }
    }
    let (j0, multiplicity) =
        j0.ok_or_else(|| Error::Oracle("no G-irreducible restricts onto sigma".into()))?;
    let blocks = fine_partition(table_h, auts)?;
    let block = blocks
        .iter()
        .find(|b| b.contains(&sigma))
        .expect("every label lies in a block");
    let dim_sigma = table_h.degree(sigma);
    let inequivalence = block.len();
    Ok(CanonicalBundleData {
        j0,
        multiplicity,
        dim_sigma,
        inequivalence,
        rank: multiplicity * dim_sigma * inequivalence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{
        cyclic_table, dihedral_table, regular_representation, symmetric_permutation_rep,
        symmetric_table,
    };
    use crate::group;

    #[test]
    fn projector_identities_regular_z4() {
        let t = cyclic_table(4);
        let rep = regular_representation(t.group());
        let mut sum = CycMat::zeros(4, 4);
        for rho in 0..4 {
            let p = isotypic_projector(&t, rho, &rep).unwrap();
            assert_eq!(p.mul(&p), p);
            assert_eq!(p.dagger(), p);
            assert_eq!(p.trace().try_rat().unwrap(), crate::num::rat_i64(1));
            sum = sum.add(&p);
        }
        assert_eq!(sum, CycMat::identity(4));
    }

    #[test]
    fn projectors_on_sign_line() {
        // Z_2 acting on C by sign: P_sign = I, P_triv = 0
        let t = cyclic_table(2);
        let rep = vec![CycMat::identity(1), CycMat::identity(1).scale(&Cyc::from_i64(-1))];
        let p_triv = isotypic_projector(&t, 0, &rep).unwrap();
        let p_sgn = isotypic_projector(&t, 1, &rep).unwrap();
        assert!(p_triv.is_zero());
        assert_eq!(p_sgn, CycMat::identity(1));
    }

    #[test]
    fn restriction_z4_to_z2() {
        let g = cyclic_table(4);
        let h = cyclic_table(2);
        let emb = vec![0usize, 2];
        // chi2 of Z4 restricts to the trivial character of Z2
        let n = restriction_multiplicities(&g, &h, &emb, 2).unwrap();
        assert_eq!(n, vec![1, 0]);
        // chi1 restricts to the sign character
        let n = restriction_multiplicities(&g, &h, &emb, 1).unwrap();
        assert_eq!(n, vec![0, 1]);
    }

    #[test]
    fn restriction_s3_to_z3() {
        let s3 = symmetric_table(3);
        let z3 = cyclic_table(3);
        // embed Z3 as the rotations of S3: identity and the two 3-cycles
        let emb = z3_in_s3();
        let n = restriction_multiplicities(&s3, &z3, &emb, 2).unwrap();
        assert_eq!(n, vec![0, 1, 1]);
    }

    fn z3_in_s3() -> Vec<usize> {
        let s3 = group::symmetric(3);
        let three_cycles: Vec<usize> =
            (0..6).filter(|&g| s3.element_order(g) == 3).collect();
        let c = three_cycles[0];
        vec![0, c, s3.mul(c, c)]
    }

    #[test]
    fn frobenius_reciprocity_on_fixtures() {
        let s3 = symmetric_table(3);
        let z3 = cyclic_table(3);
        let emb = z3_in_s3();
        for sigma in 0..3 {
            let ind = induced_character(&s3, &z3, &emb, sigma);
            for rho in 0..3 {
                // <Ind sigma, rho>_G
                let g = s3.group();
                let mut acc = Cyc::zero();
                for (c, cl) in g.classes().iter().enumerate() {
                    acc += Cyc::from_i64(cl.len() as i64)
                        * ind[c].clone()
                        * s3.irreps()[rho].values[c].conj();
                }
                let mult = (acc.try_rat().unwrap()
                    / crate::num::rat_i64(g.order() as i64))
                .numer()
                .to_usize()
                .unwrap();
                let res = restriction_multiplicities(&s3, &z3, &emb, rho).unwrap();
                assert_eq!(mult, res[sigma]);
            }
        }
    }

    #[test]
    fn sigma_conjugation_inverts_z3_characters() {
        let s3 = symmetric_table(3);
        let z3 = cyclic_table(3);
        let emb = z3_in_s3();
        // a transposition inverts the 3-cycles
        let transposition = (0..6)
            .find(|&g| s3.group().element_order(g) == 2)
            .unwrap();
        let aut = conjugation_automorphism(s3.group(), z3.group(), &emb, transposition).unwrap();
        assert_eq!(sigma_conjugate(&z3, 1, &aut).unwrap(), 2);
        assert_eq!(sigma_conjugate(&z3, 0, &aut).unwrap(), 0);
        // inner conjugation fixes every character
        let inner = conjugation_automorphism(s3.group(), z3.group(), &emb, emb[1]).unwrap();
        assert_eq!(sigma_conjugate(&z3, 1, &inner).unwrap(), 1);
    }

    #[test]
    fn fine_partition_examples() {
        let z3 = cyclic_table(3);
        let s3 = symmetric_table(3);
        let emb = z3_in_s3();
        let auts = normalizer_automorphisms(s3.group(), z3.group(), &emb).unwrap();
        let blocks = fine_partition(&z3, &auts).unwrap();
        assert_eq!(blocks, vec![vec![0], vec![1, 2]]);

        // trivial action: singleton blocks
        let id_aut: Vec<usize> = (0..3).collect();
        let blocks = fine_partition(&z3, &[id_aut]).unwrap();
        assert_eq!(blocks.len(), 3);

        // Z4 under inversion: {0}, {2}, {1,3}
        let z4 = cyclic_table(4);
        let inversion: Vec<usize> = (0..4).map(|x| (4 - x) % 4).collect();
        let blocks = fine_partition(&z4, &[inversion]).unwrap();
        assert_eq!(blocks, vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn canonical_bundle_z4_z2() {
        let g = cyclic_table(4);
        let h = cyclic_table(2);
        let emb = vec![0usize, 2];
        let auts = normalizer_automorphisms(g.group(), h.group(), &emb).unwrap();
        let data = canonical_bundle_data(&g, &h, &emb, 1, &auts).unwrap();
        assert_eq!(
            data,
            CanonicalBundleData {
                j0: 1,
                multiplicity: 1,
                dim_sigma: 1,
                inequivalence: 1,
                rank: 1
            }
        );
        // sigma = trivial: j0 is the trivial G-irreducible
        let data = canonical_bundle_data(&g, &h, &emb, 0, &auts).unwrap();
        assert_eq!(data.j0, 0);
        assert_eq!(data.multiplicity, 1);
    }

    #[test]
    fn canonical_bundle_s3_z3() {
        let s3 = symmetric_table(3);
        let z3 = cyclic_table(3);
        let emb = z3_in_s3();
        let auts = normalizer_automorphisms(s3.group(), z3.group(), &emb).unwrap();
        // omega: the 2-dim irrep of S3 (index 2) is the first containing it
        let data = canonical_bundle_data(&s3, &z3, &emb, 1, &auts).unwrap();
        assert_eq!(data.j0, 2);
        assert_eq!(data.inequivalence, 2);
        assert_eq!(data.rank, 2);
    }

    #[test]
    fn projector_algebra_on_dihedral_and_symmetric_reps() {
        use crate::chartable::dihedral_planar_rep;
        let d4 = dihedral_table(4);
        let rep = dihedral_planar_rep(4);
        let mut sum = CycMat::zeros(2, 2);
        for rho in 0..d4.num_irreducibles() {
            let p = isotypic_projector(&d4, rho, &rep).unwrap();
            assert_eq!(p.mul(&p), p);
            sum = sum.add(&p);
        }
        assert_eq!(sum, CycMat::identity(2));

        let s3 = symmetric_table(3);
        let rep = symmetric_permutation_rep(3);
        let p_triv = isotypic_projector(&s3, 0, &rep).unwrap();
        assert_eq!(p_triv.trace().try_rat().unwrap(), crate::num::rat_i64(1));
        let p_std = isotypic_projector(&s3, 2, &rep).unwrap();
        assert_eq!(p_std.trace().try_rat().unwrap(), crate::num::rat_i64(2));
    }
}
