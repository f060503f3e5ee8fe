use super::group::{ElemId, Extremal, Side, WeylGroup};
use crate::{Error, Result};

/// A subgroup of `W` together with its extremal left-coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    subgroup: Vec<ElemId>,
    member: Vec<bool>,
    /// Simple reflections contained in the subgroup.
    simple_generators: Vec<usize>,
    /// Shortest element of each left coset `w H`, sorted by id.
    pub min_reps: Vec<ElemId>,
    /// Longest element of each left coset, in the same coset order as `min_reps`.
    pub max_reps: Vec<ElemId>,
}

impl ParabolicData {
    pub fn from_subgroup(group: &WeylGroup, elements: &[ElemId]) -> Result<Self> {
        let mut member = vec![false; group.order()];
        for &w in elements {
            member[w] = true;
        }
        if !member[group.identity()] {
            return Err(Error::Usage("subgroup must contain the identity".into()));
        }
        for &a in elements {
            for &b in elements {
                if !member[group.mul(a, b)] {
                    return Err(Error::Usage("element list is not closed under multiplication".into()));
                }
            }
        }
        let mut subgroup: Vec<ElemId> = elements.to_vec();
        subgroup.sort_unstable();
        subgroup.dedup();
        let simple_generators = (0..group.rank()).filter(|&i| member[group.generator(i)]).collect();
        let mut p = ParabolicData { subgroup, member, simple_generators, min_reps: Vec::new(), max_reps: Vec::new() };
        p.min_reps = p.coset_reps(group, Side::Left, Extremal::Shortest);
        p.max_reps = p.min_reps.iter().map(|&u| p.extremal_in_coset(group, u, Side::Left, Extremal::Longest)).collect();
        Ok(p)
    }

    /// The standard parabolic subgroup generated by the given simple reflections.
    pub fn standard(group: &WeylGroup, gens: &[usize]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&i| i >= group.rank()) {
            return Err(Error::Usage(format!("generator index {bad} out of range")));
        }
        let mut elems = vec![group.identity()];
        let mut i = 0;
        while i < elems.len() {
            let w = elems[i];
            for &s in gens {
                let ws = group.mul_gen_right(w, s);
                if !elems.contains(&ws) {
                    elems.push(ws);
                }
            }
            i += 1;
        }
        Self::from_subgroup(group, &elems)
    }

    pub fn subgroup(&self) -> &[ElemId] {
        &self.subgroup
    }

    pub fn size(&self) -> usize {
        self.subgroup.len()
    }

    pub fn contains(&self, w: ElemId) -> bool {
        self.member[w]
    }

    pub fn simple_generators(&self) -> &[usize] {
        &self.simple_generators
    }

    pub fn index(&self) -> usize {
        self.member.len() / self.subgroup.len()
    }

    pub fn is_subgroup_of(&self, other: &ParabolicData) -> bool {
        self.subgroup.iter().all(|&w| other.contains(w))
    }

    /// The coset `w H` (left) or `H w` (right), sorted.
    pub fn coset(&self, group: &WeylGroup, w: ElemId, side: Side) -> Vec<ElemId> {
        let mut c: Vec<ElemId> = self
            .subgroup
            .iter()
            .map(|&h| match side {
                Side::Left => group.mul(w, h),
                Side::Right => group.mul(h, w),
            })
            .collect();
        c.sort_unstable();
        c
    }

    pub fn extremal_in_coset(&self, group: &WeylGroup, w: ElemId, side: Side, which: Extremal) -> ElemId {
        let coset = self.coset(group, w, side);
        let pick = match which {
            Extremal::Shortest => coset.iter().min_by_key(|&&x| (group.length(x), x)),
            Extremal::Longest => coset.iter().max_by_key(|&&x| (group.length(x), std::cmp::Reverse(x))),
        };
        *pick.expect("cosets are nonempty")
    }

    /// Extremal representatives of all cosets on the given side, sorted by id.
    pub fn coset_reps(&self, group: &WeylGroup, side: Side, which: Extremal) -> Vec<ElemId> {
        let mut reps: Vec<ElemId> = group.ids().map(|w| self.extremal_in_coset(group, w, side, which)).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}

/// `coset_reps` as a free function taking the group first.
pub fn coset_reps(group: &WeylGroup, parabolic: &ParabolicData, side: Side, which: Extremal) -> Result<Vec<ElemId>> {
    if parabolic.member.len() != group.order() {
        return Err(Error::Usage("parabolic subgroup belongs to a different group".into()));
    }
    Ok(parabolic.coset_reps(group, side, which))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{build_root_system, enumerate_weyl, TypeLetter};

    #[test]
    fn a2_parabolic() {
        let g = enumerate_weyl(&build_root_system(TypeLetter::A, 2).unwrap()).unwrap();
        let p = ParabolicData::standard(&g, &[0]).unwrap();
        assert_eq!(p.size(), 2);
        assert_eq!(p.min_reps.len(), 3);
        assert_eq!(p.max_reps.len(), 3);
        assert_eq!(coset_reps(&g, &p, Side::Left, Extremal::Shortest).unwrap().len(), 3);
        assert_eq!(p.simple_generators(), &[0]);
        // min reps have no right descent in the parabolic
        for &u in &p.min_reps {
            assert!(!g.right_descents(u).contains(&0));
        }
        for &u in &p.max_reps {
            assert!(g.right_descents(u).contains(&0));
        }
    }

    #[test]
    fn foreign_parabolic_rejected() {
        let a2 = enumerate_weyl(&build_root_system(TypeLetter::A, 2).unwrap()).unwrap();
        let a1 = enumerate_weyl(&build_root_system(TypeLetter::A, 1).unwrap()).unwrap();
        let p = ParabolicData::standard(&a1, &[0]).unwrap();
        assert!(matches!(coset_reps(&a2, &p, Side::Left, Extremal::Longest), Err(Error::Usage(_))));
    }
}
