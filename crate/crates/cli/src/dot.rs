//! DOT export: Hasse diagram of a normal subgroup lattice and transitive
//! reduction of a space's specialization preorder. Output is
//! byte-deterministic: nodes before edges, both sorted by point index.

use normtop_core::{FiniteSpace, NormalLattice};

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the inclusion order on 𝒩(G).
pub fn export_dot_hasse(lat: &NormalLattice) -> String {
    let mut out = String::from("digraph hasse {\n");
    for i in 0..lat.len() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, escape(&lat.point_label(i))));
    }
    for (lo, hi) in lat.hasse_edges() {
        out.push_str(&format!("  n{} -> n{};\n", lo, hi));
    }
    out.push_str("}\n");
    out
}

/// Transitive reduction of the specialization preorder of a finite space.
pub fn export_dot_specialization(space: &FiniteSpace) -> String {
    let rows = space.specialization_preorder();
    let n = space.point_count();
    let mut out = String::from("digraph specialization {\n");
    for x in 0..n {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", x, escape(space.label(x))));
    }
    for x in 0..n {
        for y in 0..n {
            if x == y || !rows[x].contains(y) {
                continue;
            }
            let covered = (0..n).any(|z| {
                z != x && z != y && rows[x].contains(z) && rows[z].contains(y) && !rows[z].contains(x)
            });
            if !covered {
                out.push_str(&format!("  n{} -> n{};\n", x, y));
            }
        }
    }
    out.push_str("}\n");
    out
}
