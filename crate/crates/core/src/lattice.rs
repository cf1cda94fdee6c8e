//! The lattice 𝒩(G) of normal subgroups: enumeration, join/meet structure,
//! maximal elements, and the proper-point carve-out.
//!
//! All topology code downstream speaks in dense lattice point indices; raw
//! subgroups never leave this layer.

use std::collections::{HashMap, HashSet};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{
    conjugacy_classes, generated_subgroup, is_normal, Group, Subgroup, Subset,
};
use crate::Caps;

/// The complete family of normal subgroups of a finite group, ordered by
/// inclusion. Points are sorted by (size, lexicographic member set), so the
/// trivial subgroup is first and the whole group last.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    group: Group,
    points: Vec<Subgroup>,
    leq: Vec<BitSet>, // leq[i] = { j : points[i] ⊆ points[j] }
    index: HashMap<BitSet, usize>,
    bottom: usize,
    top: usize,
}

/// The point set 𝒩⁺(G): every lattice point except the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperPointSet {
    indices: BitSet,
}

impl ProperPointSet {
    pub fn indices(&self) -> &BitSet {
        &self.indices
    }
}

impl NormalLattice {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // bottom and top always exist
    }

    pub fn point(&self, i: usize) -> &Subgroup {
        &self.points[i]
    }

    pub fn points(&self) -> &[Subgroup] {
        &self.points
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i].contains(j)
    }

    /// Row of the inclusion order: all points above `i`. This is exactly the
    /// subbasic closed set 𝒱(points[i]) of the coarse lower topology.
    pub fn upper_set(&self, i: usize) -> &BitSet {
        &self.leq[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, members: &BitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Display label for a point: element list for small parent groups,
    /// subgroup order otherwise.
    pub fn point_label(&self, i: usize) -> String {
        if self.group.order() <= 24 {
            let names: Vec<&str> = self.points[i]
                .members()
                .iter()
                .map(|e| self.group.name(e))
                .collect();
            format!("{{{}}}", names.join(","))
        } else {
            format!("N{}|{}|", i, self.points[i].order())
        }
    }

    /// Least upper bound of a family of points: the normal closure of the
    /// union of their member sets. Empty family gives the bottom.
    pub fn join_family<I: IntoIterator<Item = usize>>(&self, family: I) -> usize {
        let family: Vec<usize> = family.into_iter().collect();
        let mut union = BitSet::new(self.group.order());
        for &i in &family {
            union.union_with(self.points[i].members());
        }
        union.insert(0);
        // A union of normal subgroups is conjugation-closed, so plain
        // subgroup generation already yields the normal closure.
        let sub = generated_subgroup(&self.group, &Subset { members: union });
        let idx = self.index[sub.members()];
        // Cross-check against the order-theoretic least upper bound.
        debug_assert!({
            let mut uppers = BitSet::full(self.len());
            for &i in &family {
                uppers.intersect_with(&self.leq[i]);
            }
            uppers.contains(idx) && uppers.is_subset(&self.leq[idx])
        });
        idx
    }

    /// Greatest lower bound: set intersection of members. Empty family gives
    /// the top.
    pub fn meet_family<I: IntoIterator<Item = usize>>(&self, family: I) -> usize {
        let mut inter = BitSet::full(self.group.order());
        for i in family {
            inter.intersect_with(self.points[i].members());
        }
        self.index[&inter]
    }

    /// All maximal proper normal subgroups: points strictly below the top
    /// with nothing strictly between.
    pub fn maximal_normal_subgroups(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| i != self.top)
            .filter(|&i| self.leq[i].iter().all(|j| j == i || j == self.top))
            .collect()
    }

    pub fn has_maximal_normal_subgroup(&self) -> bool {
        !self.maximal_normal_subgroups().is_empty()
    }

    pub fn proper_points(&self) -> ProperPointSet {
        let mut indices = BitSet::full(self.len());
        indices.remove(self.top);
        ProperPointSet { indices }
    }

    /// Covering pairs of the inclusion order, sorted by (lower, upper).
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let covered = (0..n)
                    .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges.sort();
        edges
    }
}

/// Brute-force enumeration of 𝒩(G) as unions of conjugacy classes that happen
/// to be subgroups. Exponential in the class count; used as a completeness
/// oracle for the fixpoint enumeration.
pub fn normal_subgroups_by_class_unions(g: &Group) -> Vec<BitSet> {
    let classes = conjugacy_classes(g);
    let n = g.order();
    // classes[0] is always {identity}.
    let rest = &classes[1..];
    let k = rest.len();
    assert!(k <= 24, "class-union oracle is exponential; {} classes", k);
    let mut out = Vec::new();
    'mask: for mask in 0u64..(1u64 << k) {
        let mut members = BitSet::singleton(n, 0);
        for (ci, class) in rest.iter().enumerate() {
            if mask & (1 << ci) != 0 {
                for &e in class {
                    members.insert(e);
                }
            }
        }
        let elems: Vec<usize> = members.iter().collect();
        for &a in &elems {
            if !members.contains(g.inv(a)) {
                continue 'mask;
            }
            for &b in &elems {
                if !members.contains(g.mul(a, b)) {
                    continue 'mask;
                }
            }
        }
        out.push(members);
    }
    out.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Enumerate all normal subgroups and assemble the inclusion lattice.
///
/// Candidates are built by closing the normal closures of the single
/// conjugacy classes under pairwise join and meet; when the class count is
/// small the exponential union-of-classes filter re-checks completeness.
pub fn enumerate_normal_subgroups(g: &Group, caps: &Caps) -> Result<NormalLattice> {
    if g.order() > caps.order_cap {
        return Err(Error::OrderCapExceeded(caps.order_cap));
    }
    let n = g.order();
    let classes = conjugacy_classes(g);

    let mut family: Vec<BitSet> = Vec::new();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let push = |family: &mut Vec<BitSet>, seen: &mut HashSet<BitSet>, s: BitSet| {
        if seen.insert(s.clone()) {
            family.push(s);
        }
    };

    push(&mut family, &mut seen, BitSet::singleton(n, 0));
    for class in &classes {
        let mut seed = BitSet::singleton(n, 0);
        for &e in class {
            seed.insert(e);
        }
        // A conjugation-closed seed generates a normal subgroup directly.
        let sub = generated_subgroup(g, &Subset { members: seed });
        push(&mut family, &mut seen, sub.members().clone());
    }

    // Fixpoint under pairwise join and meet.
    let mut i = 0;
    while i < family.len() {
        let mut j = 0;
        while j < i {
            let a = family[i].clone();
            let b = family[j].clone();
            let meet = a.intersection(&b);
            push(&mut family, &mut seen, meet);
            let join = if a.is_subset(&b) {
                b.clone()
            } else if b.is_subset(&a) {
                a.clone()
            } else {
                generated_subgroup(g, &Subset { members: a.union(&b) })
                    .members()
                    .clone()
            };
            push(&mut family, &mut seen, join);
            if family.len() > caps.lattice_cap {
                return Err(Error::LatticeTooLarge(caps.lattice_cap));
            }
            j += 1;
        }
        i += 1;
    }

    if classes.len() <= 20 {
        // Oracle mode: the exponential union-of-classes filter must agree.
        let oracle = normal_subgroups_by_class_unions(g);
        let ours: HashSet<&BitSet> = family.iter().collect();
        let theirs: HashSet<&BitSet> = oracle.iter().collect();
        assert_eq!(
            ours, theirs,
            "normal subgroup enumeration disagrees with class-union oracle \
             on a group of order {}",
            n
        );
    }

    let mut sets = family;
    sets.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
    let points: Vec<Subgroup> = sets
        .iter()
        .map(|s| {
            let sub = crate::group::subgroup_from_set(g, s.clone())
                .expect("enumerated set must be a subgroup");
            crate::group::certify_normal(g, &sub).expect("enumerated set must be normal")
        })
        .collect();
    debug_assert!(points.iter().all(|p| is_normal(g, p) == Ok(true)));

    let count = points.len();
    let leq: Vec<BitSet> = (0..count)
        .map(|i| {
            BitSet::from_indices(
                count,
                (0..count).filter(|&j| points[i].members().is_subset(points[j].members())),
            )
        })
        .collect();
    let index: HashMap<BitSet, usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.members().clone(), i))
        .collect();
    let bottom = index[&BitSet::singleton(n, 0)];
    let top = index[&BitSet::full(n)];

    Ok(NormalLattice {
        group: g.clone(),
        points,
        leq,
        index,
        bottom,
        top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{from_permutation_generators, validate_cayley_table};

    fn z(n: usize) -> Group {
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        validate_cayley_table(&table, None).unwrap()
    }

    fn s3() -> Group {
        from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn s3_three_points() {
        let lat = enumerate_normal_subgroups(&s3(), &caps()).unwrap();
        assert_eq!(lat.len(), 3);
        let sizes: Vec<usize> = lat.points().iter().map(|p| p.order()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert_eq!(lat.bottom(), 0);
        assert_eq!(lat.top(), 2);
    }

    #[test]
    fn z6_four_points() {
        let lat = enumerate_normal_subgroups(&z(6), &caps()).unwrap();
        assert_eq!(lat.len(), 4);
        let sizes: Vec<usize> = lat.points().iter().map(|p| p.order()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        // {0,3} and {0,2,4} as residue sets.
        assert!(lat
            .points()
            .iter()
            .any(|p| p.members().iter().collect::<Vec<_>>() == vec![0, 3]));
        assert!(lat
            .points()
            .iter()
            .any(|p| p.members().iter().collect::<Vec<_>>() == vec![0, 2, 4]));
    }

    #[test]
    fn q8_six_points() {
        let q8 = crate::catalog::catalog("Q8").unwrap();
        let lat = enumerate_normal_subgroups(&q8, &caps()).unwrap();
        assert_eq!(lat.len(), 6);
        let sizes: Vec<usize> = lat.points().iter().map(|p| p.order()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn trivial_one_point() {
        let lat = enumerate_normal_subgroups(&z(1), &caps()).unwrap();
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.bottom(), lat.top());
    }

    #[test]
    fn join_examples() {
        let lat = enumerate_normal_subgroups(&z(6), &caps()).unwrap();
        assert_eq!(lat.join_family([]), lat.bottom());
        assert_eq!(lat.join_family([1, 2]), lat.top()); // {0,3} ∨ {0,2,4} = Z6
        for i in 0..lat.len() {
            assert_eq!(lat.join_family([i]), i);
        }
    }

    #[test]
    fn meet_examples() {
        let lat = enumerate_normal_subgroups(&z(6), &caps()).unwrap();
        assert_eq!(lat.meet_family([]), lat.top());
        assert_eq!(lat.meet_family([1, 2]), lat.bottom());
        for i in 0..lat.len() {
            assert_eq!(lat.meet_family([i]), i);
        }
    }

    #[test]
    fn maximal_examples() {
        let lat = enumerate_normal_subgroups(&s3(), &caps()).unwrap();
        assert_eq!(lat.maximal_normal_subgroups(), vec![1]); // A3
        let lat = enumerate_normal_subgroups(&z(6), &caps()).unwrap();
        assert_eq!(lat.maximal_normal_subgroups(), vec![1, 2]);
        let lat = enumerate_normal_subgroups(&z(1), &caps()).unwrap();
        assert!(lat.maximal_normal_subgroups().is_empty());
        assert!(!lat.has_maximal_normal_subgroup());
    }

    #[test]
    fn proper_points_examples() {
        let lat = enumerate_normal_subgroups(&s3(), &caps()).unwrap();
        assert_eq!(lat.proper_points().indices().count(), 2);
        let lat = enumerate_normal_subgroups(&z(1), &caps()).unwrap();
        assert!(lat.proper_points().indices().is_empty());
    }

    #[test]
    fn hasse_examples() {
        let lat = enumerate_normal_subgroups(&s3(), &caps()).unwrap();
        assert_eq!(lat.hasse_edges(), vec![(0, 1), (1, 2)]);
        let lat = enumerate_normal_subgroups(&z(6), &caps()).unwrap();
        assert_eq!(lat.hasse_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let lat = enumerate_normal_subgroups(&z(1), &caps()).unwrap();
        assert!(lat.hasse_edges().is_empty());
    }

    #[test]
    fn order_cap() {
        let caps = Caps {
            order_cap: 4,
            ..Caps::default()
        };
        let err = enumerate_normal_subgroups(&s3(), &caps).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded(4));
    }
}
