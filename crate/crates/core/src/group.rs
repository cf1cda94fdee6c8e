//! Finite groups as validated Cayley tables, plus the subgroup machinery
//! (generation, conjugation, normal closure) the lattice layer builds on.
//!
//! Elements are dense indices `0..n`. The identity always sits at index 0;
//! `validate_cayley_table` reindexes if the input puts it elsewhere, so bit
//! position 0 of any element set means "contains the identity".

use std::collections::HashMap;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>, // row-major n*n, table[a*n+b] = a*b
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Whether the group is the normal closure of a finitely generated
    /// subgroup of itself. A finite group always is (take the whole group),
    /// so this standing hypothesis is recorded as a constant.
    pub fn finitely_normally_generated(&self) -> bool {
        true
    }
}

/// A subset of group elements, not assumed closed under anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subset {
    pub members: BitSet,
}

impl Subset {
    pub fn empty(g: &Group) -> Self {
        Subset {
            members: BitSet::new(g.order()),
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(g: &Group, iter: I) -> Self {
        Subset {
            members: BitSet::from_indices(g.order(), iter),
        }
    }

    pub fn full(g: &Group) -> Self {
        Subset {
            members: BitSet::full(g.order()),
        }
    }
}

/// A subset known to be a subgroup. Equality is member-set equality; the
/// normality certificate is metadata, not part of identity.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: BitSet,
    normal_certified: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Subgroup {
    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn is_normal_certified(&self) -> bool {
        self.normal_certified
    }

    pub fn trivial(g: &Group) -> Self {
        Subgroup {
            members: BitSet::singleton(g.order(), 0),
            normal_certified: true,
        }
    }

    pub fn whole(g: &Group) -> Self {
        Subgroup {
            members: BitSet::full(g.order()),
            normal_certified: true,
        }
    }
}

/// Check the four group axioms exhaustively and build a `Group`.
///
/// The check is O(n³); fine for the desk-scale orders (n ≤ 512) this crate
/// targets. Error witnesses refer to the indices of the input table, before
/// any identity reindexing.
pub fn validate_cayley_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Group> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n) {
        return Err(Error::MalformedTable);
    }
    if table.iter().any(|row| row.iter().any(|&x| x >= n)) {
        return Err(Error::MalformedTable);
    }
    if let Some(ns) = &names {
        if ns.len() != n {
            return Err(Error::MalformedTable);
        }
    }

    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(Error::NoIdentity)?;

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }

    for (a, row) in table.iter().enumerate() {
        if !(0..n).any(|b| row[b] == identity && table[b][a] == identity) {
            return Err(Error::NoInverse(a));
        }
    }

    // Swap identity to index 0; sigma is its own inverse.
    let sigma = |x: usize| {
        if x == identity {
            0
        } else if x == 0 {
            identity
        } else {
            x
        }
    };
    let mut flat = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[a * n + b] = sigma(table[sigma(a)][sigma(b)]);
        }
    }
    let names: Vec<String> = match names {
        Some(ns) => (0..n).map(|i| ns[sigma(i)].clone()).collect(),
        None => (0..n).map(|i| sigma(i).to_string()).collect(),
    };
    let mut inverse = vec![0usize; n];
    for a in 0..n {
        inverse[a] = (0..n).find(|&b| flat[a * n + b] == 0).unwrap();
    }
    Ok(Group {
        order: n,
        table: flat,
        inverse,
        names,
    })
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// Cycle notation for a permutation, fixed points omitted; identity is "e".
pub fn cycle_notation(perm: &[usize]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Breadth-first closure of the permutation group generated by `generators`,
/// elements indexed in discovery order with the identity at index 0.
pub fn from_permutation_generators(
    degree: usize,
    generators: &[Vec<usize>],
    order_cap: usize,
) -> Result<Group> {
    for (i, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree {
            return Err(Error::InvalidPermutation(i));
        }
        for &x in g {
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation(i));
            }
            seen[x] = true;
        }
    }

    let id: Vec<usize> = (0..degree).collect();
    let mut elems: Vec<Vec<usize>> = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(id, 0);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in generators {
            let p = compose(&cur, g);
            if !index.contains_key(&p) {
                if elems.len() + 1 > order_cap {
                    return Err(Error::OrderCapExceeded(order_cap));
                }
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
    }

    let n = elems.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = index[&compose(&elems[a], &elems[b])];
        }
    }
    let names = elems.iter().map(|p| cycle_notation(p)).collect();
    validate_cayley_table(&table, Some(names))
}

/// Componentwise product; element `(a, b)` gets index `a*|h| + b`.
pub fn direct_product(g: &Group, h: &Group, order_cap: usize) -> Result<Group> {
    let n = g.order() * h.order();
    if n > order_cap {
        return Err(Error::OrderCapExceeded(order_cap));
    }
    let hn = h.order();
    let idx = |a: usize, b: usize| a * hn + b;
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..g.order() {
        for b1 in 0..hn {
            for a2 in 0..g.order() {
                for b2 in 0..hn {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2));
                }
            }
        }
    }
    let names: Vec<String> = (0..g.order())
        .flat_map(|a| (0..hn).map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.name(a), h.name(b)))
        .collect();
    if n <= 512 {
        validate_cayley_table(&table, Some(names))
    } else {
        // Axioms hold componentwise; skip the cubic re-check at this size.
        let mut flat = vec![0usize; n * n];
        for a in 0..n {
            flat[a * n..(a + 1) * n].copy_from_slice(&table[a]);
        }
        let inverse = (0..n)
            .map(|x| idx(g.inv(x / hn), h.inv(x % hn)))
            .collect();
        Ok(Group {
            order: n,
            table: flat,
            inverse,
            names,
        })
    }
}

fn is_subgroup_set(g: &Group, members: &BitSet) -> bool {
    if members.len() != g.order() || !members.contains(0) {
        return false;
    }
    let elems: Vec<usize> = members.iter().collect();
    elems.iter().all(|&a| members.contains(g.inv(a)))
        && elems
            .iter()
            .all(|&a| elems.iter().all(|&b| members.contains(g.mul(a, b))))
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &Group, seed: &Subset) -> Subgroup {
    let mut cur = seed.members.clone();
    cur.insert(0);
    loop {
        let mut next = cur.clone();
        let elems: Vec<usize> = cur.iter().collect();
        for &a in &elems {
            next.insert(g.inv(a));
            for &b in &elems {
                next.insert(g.mul(a, b));
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }
    Subgroup {
        members: cur,
        normal_certified: false,
    }
}

/// Smallest normal subgroup containing `seed`: alternate conjugation closure
/// and subgroup generation to a fixpoint.
pub fn normal_closure(g: &Group, seed: &Subset) -> Subgroup {
    let mut cur = seed.members.clone();
    cur.insert(0);
    loop {
        let mut conj = cur.clone();
        for m in cur.iter() {
            for x in 0..g.order() {
                conj.insert(g.conjugate(x, m));
            }
        }
        let sub = generated_subgroup(
            g,
            &Subset {
                members: conj,
            },
        );
        if *sub.members() == cur {
            break;
        }
        cur = sub.members.clone();
    }
    let out = Subgroup {
        members: cur,
        normal_certified: true,
    };
    debug_assert_eq!(is_normal(g, &out), Ok(true));
    out
}

/// True iff `h` is invariant under conjugation by every group element.
pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool> {
    if !is_subgroup_set(g, h.members()) {
        return Err(Error::NotASubgroup);
    }
    for m in h.members().iter() {
        for x in 0..g.order() {
            if !h.members().contains(g.conjugate(x, m)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certified copy of `h`, if it is in fact normal.
pub fn certify_normal(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    if is_normal(g, h)? {
        Ok(Subgroup {
            members: h.members.clone(),
            normal_certified: true,
        })
    } else {
        Err(Error::NotASubgroup)
    }
}

/// Subgroup from an explicit member set; errors if not closed.
pub fn subgroup_from_set(g: &Group, members: BitSet) -> Result<Subgroup> {
    if is_subgroup_set(g, &members) {
        Ok(Subgroup {
            members,
            normal_certified: false,
        })
    } else {
        Err(Error::NotASubgroup)
    }
}

/// Conjugacy classes, each sorted ascending, listed by minimal representative.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = BitSet::new(n);
    let mut classes = Vec::new();
    for a in 0..n {
        if seen.contains(a) {
            continue;
        }
        let mut class = BitSet::new(n);
        for x in 0..n {
            class.insert(g.conjugate(x, a));
        }
        seen.union_with(&class);
        classes.push(class.iter().collect());
    }
    classes
}
