//! Named constructions for the groups used throughout tests and the CLI.
//!
//! Element orderings are pinned: cyclic groups list residues 0..n,
//! permutation groups index elements in breadth-first discovery order from
//! fixed generator lists, and products use row-major (a, b) indexing. Reports
//! and DOT output are therefore reproducible across runs and platforms.

use crate::error::{Error, Result};
use crate::group::{
    direct_product, from_permutation_generators, validate_cayley_table, Group,
};

const CATALOG_ORDER_CAP: usize = 10_000;

/// Cyclic group of order n, residues under addition.
pub fn cyclic(n: usize) -> Group {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    validate_cayley_table(&table, Some(names)).expect("cyclic table is a group")
}

/// Symmetric group on n letters; generators: n-cycle and the transposition (0 1).
pub fn symmetric(n: usize) -> Group {
    let degree = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(rot);
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(swap);
    }
    from_permutation_generators(degree, &gens, CATALOG_ORDER_CAP).expect("S_n closure")
}

/// Alternating group on n letters; generated by the 3-cycles (0 1 k).
pub fn alternating(n: usize) -> Group {
    let degree = n.max(1);
    let mut gens = Vec::new();
    for k in 2..n {
        let mut p: Vec<usize> = (0..n).collect();
        p[0] = 1;
        p[1] = k;
        p[k] = 0;
        gens.push(p);
    }
    from_permutation_generators(degree, &gens, CATALOG_ORDER_CAP).expect("A_n closure")
}

/// Dihedral group of order 2n acting on n vertices (n ≥ 3).
pub fn dihedral(n: usize) -> Group {
    assert!(n >= 3);
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    from_permutation_generators(n, &[rot, refl], CATALOG_ORDER_CAP).expect("D_n closure")
}

/// Quaternion group; elements ±1, ±i, ±j, ±k with index sign·4 + unit.
pub fn quaternion() -> Group {
    // unit_mul[u][v] = (sign, unit) of the product of basis units.
    const UNIT_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let idx = |s: usize, u: usize| s * 4 + u;
    let mut table = vec![vec![0usize; 8]; 8];
    for s1 in 0..2 {
        for u1 in 0..4 {
            for s2 in 0..2 {
                for u2 in 0..4 {
                    let (sp, up) = UNIT_MUL[u1][u2];
                    table[idx(s1, u1)][idx(s2, u2)] = idx((s1 + s2 + sp) % 2, up);
                }
            }
        }
    }
    let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    validate_cayley_table(&table, Some(names)).expect("Q8 table is a group")
}

/// Klein four-group as Z2 × Z2.
pub fn klein_four() -> Group {
    direct_product(&cyclic(2), &cyclic(2), CATALOG_ORDER_CAP).expect("V4")
}

fn parse_indexed(name: &str, prefix: char) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Look up a catalog group by name. Supported: `Zn` (n ≤ 64), `Sn` (n ≤ 5),
/// `An` (n ≤ 5), `Dn` (3 ≤ n ≤ 16), `Q8`, `V4`, and products `A x B`.
pub fn catalog(name: &str) -> Result<Group> {
    let name = name.trim();
    if let Some((left, right)) = name.split_once(" x ") {
        let g = catalog(left)?;
        let h = catalog(right)?;
        return direct_product(&g, &h, CATALOG_ORDER_CAP);
    }
    if name == "Q8" {
        return Ok(quaternion());
    }
    if name == "V4" {
        return Ok(klein_four());
    }
    if let Some(n) = parse_indexed(name, 'Z') {
        if (1..=64).contains(&n) {
            return Ok(cyclic(n));
        }
    }
    if let Some(n) = parse_indexed(name, 'S') {
        if (1..=5).contains(&n) {
            return Ok(symmetric(n));
        }
    }
    if let Some(n) = parse_indexed(name, 'A') {
        if (1..=5).contains(&n) {
            return Ok(alternating(n));
        }
    }
    if let Some(n) = parse_indexed(name, 'D') {
        if (3..=16).contains(&n) {
            return Ok(dihedral(n));
        }
    }
    Err(Error::UnknownCatalogName(name.to_string()))
}

/// Human-readable description of what `catalog` accepts.
pub fn catalog_descriptions() -> Vec<String> {
    vec![
        "Zn   cyclic group of order n (1 <= n <= 64)".to_string(),
        "Sn   symmetric group on n letters (1 <= n <= 5)".to_string(),
        "An   alternating group on n letters (1 <= n <= 5)".to_string(),
        "Dn   dihedral group of order 2n (3 <= n <= 16)".to_string(),
        "Q8   quaternion group of order 8".to_string(),
        "V4   Klein four-group".to_string(),
        "A x B   direct product of any two catalog names".to_string(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z6() {
        let g = catalog("Z6").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.mul(2, 5), 1);
    }

    #[test]
    fn q8_single_involution() {
        let g = catalog("Q8").unwrap();
        assert_eq!(g.order(), 8);
        let involutions: Vec<usize> =
            (0..8).filter(|&x| g.element_order(x) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert_eq!(g.name(involutions[0]), "-1");
    }

    #[test]
    fn s5_order_120() {
        assert_eq!(catalog("S5").unwrap().order(), 120);
    }

    #[test]
    fn small_families() {
        assert_eq!(catalog("S1").unwrap().order(), 1);
        assert_eq!(catalog("S3").unwrap().order(), 6);
        assert_eq!(catalog("A4").unwrap().order(), 12);
        assert_eq!(catalog("A5").unwrap().order(), 60);
        assert_eq!(catalog("D4").unwrap().order(), 8);
        assert_eq!(catalog("D8").unwrap().order(), 16);
        assert_eq!(catalog("V4").unwrap().order(), 4);
    }

    #[test]
    fn products() {
        assert_eq!(catalog("Z2 x Z4").unwrap().order(), 8);
        assert_eq!(catalog("S3 x Z2").unwrap().order(), 12);
        assert_eq!(catalog("Z2 x Z2 x Z2").unwrap().order(), 8);
    }

    #[test]
    fn unknown_names() {
        assert!(catalog("Z65").is_err());
        assert!(catalog("S6").is_err());
        assert!(catalog("frob").is_err());
        assert!(catalog("D2").is_err());
    }
}
