//! Randomized invariants: lattice algebra, closure-operator laws, the
//! V-set/join duality, and the finite sober/T0 equivalence on arbitrary
//! subbasis-generated spaces.

use std::sync::OnceLock;

use proptest::prelude::*;

use normtop_core::bits::BitSet;
use normtop_core::catalog::catalog;
use normtop_core::group::{is_normal, normal_closure, subgroup_from_set, Subset};
use normtop_core::lattice::{enumerate_normal_subgroups, NormalLattice};
use normtop_core::topology::{coarse_lower_topology, v_set, FiniteSpace};
use normtop_core::Caps;

const GROUPS: &[&str] = &["Z6", "Z8", "Z12", "S3", "S4", "A4", "D4", "D6", "Q8", "V4", "Z2 x Z4"];

fn lattices() -> &'static Vec<NormalLattice> {
    static CACHE: OnceLock<Vec<NormalLattice>> = OnceLock::new();
    CACHE.get_or_init(|| {
        GROUPS
            .iter()
            .map(|n| enumerate_normal_subgroups(&catalog(n).unwrap(), &Caps::default()).unwrap())
            .collect()
    })
}

fn arb_lattice_points(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..GROUPS.len()).prop_flat_map(move |gi| {
        let n = lattices()[gi].len();
        (Just(gi), proptest::collection::vec(0..n, 1..=k))
    })
}

fn arb_space() -> impl Strategy<Value = FiniteSpace> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), 0..=5).prop_map(
            move |rows| {
                let labels = (0..n).map(|i| format!("p{}", i)).collect();
                let subbasis = rows
                    .into_iter()
                    .map(|row| {
                        BitSet::from_indices(n, row.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
                    })
                    .collect();
                FiniteSpace::from_subbasis(labels, subbasis, &Caps::default()).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn join_meet_laws((gi, pts) in arb_lattice_points(3)) {
        let lat = &lattices()[gi];
        let a = pts[0];
        let b = pts[pts.len() / 2];
        let c = pts[pts.len() - 1];
        // commutativity
        prop_assert_eq!(lat.join_family([a, b]), lat.join_family([b, a]));
        prop_assert_eq!(lat.meet_family([a, b]), lat.meet_family([b, a]));
        // associativity
        prop_assert_eq!(
            lat.join_family([lat.join_family([a, b]), c]),
            lat.join_family([a, lat.join_family([b, c])])
        );
        prop_assert_eq!(
            lat.meet_family([lat.meet_family([a, b]), c]),
            lat.meet_family([a, lat.meet_family([b, c])])
        );
        // idempotence and absorption
        prop_assert_eq!(lat.join_family([a, a]), a);
        prop_assert_eq!(lat.meet_family([a, a]), a);
        prop_assert_eq!(lat.join_family([a, lat.meet_family([a, b])]), a);
        prop_assert_eq!(lat.meet_family([a, lat.join_family([a, b])]), a);
        // order compatibility
        prop_assert!(lat.leq(a, lat.join_family([a, b])));
        prop_assert!(lat.leq(lat.meet_family([a, b]), a));
    }

    #[test]
    fn v_set_of_join_is_intersection((gi, pts) in arb_lattice_points(4)) {
        let lat = &lattices()[gi];
        let j = lat.join_family(pts.iter().copied());
        let mut inter = BitSet::full(lat.len());
        for &p in &pts {
            inter.intersect_with(&v_set(lat, p));
        }
        prop_assert_eq!(v_set(lat, j), inter);
    }

    #[test]
    fn closure_operator_laws(space in arb_space(), seed_bits in proptest::collection::vec(any::<bool>(), 6)) {
        let n = space.point_count();
        let seed = BitSet::from_indices(n, seed_bits.iter().take(n).enumerate().filter(|(_, &b)| b).map(|(i, _)| i));
        let c = space.closure(&seed);
        // extensive
        prop_assert!(seed.is_subset(&c));
        // closed and idempotent
        prop_assert!(space.is_closed(&c));
        prop_assert_eq!(space.closure(&c), c.clone());
        // monotone: closure of a subset sits inside
        let mut sub = seed.clone();
        if let Some(first) = seed.iter().next() {
            sub.remove(first);
        }
        prop_assert!(space.closure(&sub).is_subset(&c));
    }

    #[test]
    fn sober_iff_t0_on_random_spaces(space in arb_space()) {
        prop_assert_eq!(space.is_sober().holds, space.is_t0().holds);
    }

    #[test]
    fn irreducibles_are_point_closures_on_random_spaces(space in arb_space()) {
        let mut irr = space.irreducible_closed_sets();
        let mut closures: Vec<BitSet> = (0..space.point_count())
            .map(|x| space.closure_of_point(x))
            .collect();
        irr.sort();
        closures.sort();
        closures.dedup();
        prop_assert_eq!(irr, closures);
    }

    #[test]
    fn normal_closure_is_normal_and_idempotent((gi, pts) in arb_lattice_points(3)) {
        let lat = &lattices()[gi];
        let g = lat.group();
        let seed = Subset::from_indices(g, pts.iter().map(|&p| p % g.order()));
        let nc = normal_closure(g, &seed);
        prop_assert!(is_normal(g, &nc).unwrap());
        let again = normal_closure(g, &Subset { members: nc.members().clone() });
        prop_assert_eq!(again.members(), nc.members());
        // The closure is a lattice point.
        prop_assert!(lat.index_of(nc.members()).is_some());
    }

    #[test]
    fn lattice_points_are_normal_subgroups((gi, pts) in arb_lattice_points(2)) {
        let lat = &lattices()[gi];
        let g = lat.group();
        for &p in &pts {
            let sg = subgroup_from_set(g, lat.point(p).members().clone()).unwrap();
            prop_assert!(is_normal(g, &sg).unwrap());
        }
    }

    #[test]
    fn coarse_lower_closed_sets_are_up_sets(gi in 0..GROUPS.len(), which in any::<u64>()) {
        let lat = &lattices()[gi];
        let space = coarse_lower_topology(lat, &Caps::default()).unwrap();
        let n = lat.len();
        // A pseudo-random subset; closed iff it is an up-set of inclusion.
        let s = BitSet::from_indices(n, (0..n).filter(|i| (which >> (i % 64)) & 1 == 1));
        let is_up = s.iter().all(|i| lat.upper_set(i).iter().all(|j| s.contains(j)));
        prop_assert_eq!(space.is_closed(&s), is_up);
    }

    #[test]
    fn subspace_closure_agrees(space in arb_space(), bits in proptest::collection::vec(any::<bool>(), 6)) {
        let n = space.point_count();
        let subset = BitSet::from_indices(n, bits.iter().take(n).enumerate().filter(|(_, &b)| b).map(|(i, _)| i));
        let sub = space.subspace(&subset);
        let kept: Vec<usize> = subset.iter().collect();
        for (xi, &x) in kept.iter().enumerate() {
            // closure in the subspace = ambient closure restricted
            let inner = sub.closure_of_point(xi);
            let ambient = space.closure_of_point(x);
            let restricted = BitSet::from_indices(
                kept.len(),
                kept.iter().enumerate().filter(|(_, &y)| ambient.contains(y)).map(|(i, _)| i),
            );
            prop_assert_eq!(inner, restricted);
        }
    }
}
