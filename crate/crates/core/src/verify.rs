//! Composition of the topology predicates into the spectral-space checks:
//! per-space axiom reports, the open-subspace lemma, the closure and
//! intersection identities, join compactness, and the full per-group
//! pipeline.
//!
//! The top-level checks are assertions, not experiments: a false outcome on
//! a nontrivial finite group is an implementation bug and surfaces as
//! `Error::TheoremAssertionFailed` with a diagnostic, never as a verdict.

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{enumerate_normal_subgroups, NormalLattice};
use crate::topology::{
    coarse_lower_topology, empty_intersection_witness, v_set, FiniteSpace,
};
use crate::Caps;

fn to_indices(s: &BitSet) -> Vec<usize> {
    s.iter().collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct QcReport {
    pub holds: bool,
    /// Subbasis indices of a finite subfamily with empty intersection, when
    /// the whole subbasis has empty intersection at all.
    pub empty_intersection_witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct T0Report {
    pub holds: bool,
    pub counterexample: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GenericPointEntry {
    pub closed_set: Vec<usize>,
    pub generic_points: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SoberReport {
    pub holds: bool,
    pub generic_point_map: Vec<GenericPointEntry>,
}

/// Per-axiom verdicts for one space, with witnesses inline.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectralReport {
    pub space_id: String,
    pub point_count: usize,
    /// Empty spaces pass all axioms vacuously; flagged because the main
    /// theorem's hypothesis excludes them.
    pub empty: bool,
    pub quasi_compact: QcReport,
    pub sober: SoberReport,
    pub t0: T0Report,
    pub qc_open_basis: bool,
    pub verdict: bool,
}

/// Run all four axiom checks on a space.
pub fn check_spectral(space: &FiniteSpace, space_id: &str) -> SpectralReport {
    let qc = space.is_quasi_compact_alexander();
    let sober = space.is_sober();
    let t0 = space.is_t0();
    // Finite spaces are sober iff T0; disagreement is an implementation bug.
    assert_eq!(
        sober.holds, t0.holds,
        "sober/T0 disagreement on space {}",
        space_id
    );
    let qc_open_basis = space.qc_open_basis_check();
    let verdict = qc.holds && sober.holds && qc_open_basis;
    SpectralReport {
        space_id: space_id.to_string(),
        point_count: space.point_count(),
        empty: space.point_count() == 0,
        quasi_compact: QcReport {
            holds: qc.holds,
            empty_intersection_witness: qc.witness,
        },
        sober: SoberReport {
            holds: sober.holds,
            generic_point_map: sober
                .generic_points
                .iter()
                .map(|(c, g)| GenericPointEntry {
                    closed_set: to_indices(c),
                    generic_points: g.clone(),
                })
                .collect(),
        },
        t0: T0Report {
            holds: t0.holds,
            counterexample: t0.counterexample,
        },
        qc_open_basis,
        verdict,
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LemmaReport {
    pub subspace_quasi_compact: bool,
    pub subspace_sober: bool,
    pub subspace_spectral: bool,
    pub implication_holds: bool,
    pub open_transfer: bool,
}

/// Check the open-subspace lemma on one instance: if the subspace is
/// quasi-compact and sober (and the ambient space is spectral and the subset
/// open), the subspace must be spectral. Both sides are computed
/// independently. Also verifies the open-transfer fact used by the lemma's
/// proof.
pub fn verify_lemma_open_subspace(
    space: &FiniteSpace,
    open_subset: &BitSet,
) -> Result<LemmaReport> {
    let ambient = check_spectral(space, "ambient");
    if !ambient.verdict {
        return Err(Error::AmbientNotSpectral);
    }
    if !space.is_open(open_subset) {
        return Err(Error::NotOpen);
    }
    let sub = space.subspace(open_subset);
    let qc = sub.is_quasi_compact_alexander().holds;
    let sober = sub.is_sober().holds;
    let spectral = check_spectral(&sub, "subspace").verdict;
    let implication_holds = !(qc && sober) || spectral;
    let open_transfer = space.open_transfer_check(open_subset)?;
    Ok(LemmaReport {
        subspace_quasi_compact: qc,
        subspace_sober: sober,
        subspace_spectral: spectral,
        implication_holds,
        open_transfer,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PointIdentityCheck {
    pub point: usize,
    pub holds_in_full_space: bool,
    pub holds_in_proper_space: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClosureIdentityReport {
    pub holds: bool,
    pub per_point: Vec<PointIdentityCheck>,
}

/// The closure identity 𝒞({N}) = 𝒱(N), checked for every point in the full
/// space and (restricted) for every proper point in the proper-point space.
pub fn verify_closure_identity(
    lat: &NormalLattice,
    n_space: &FiniteSpace,
    n_plus_space: &FiniteSpace,
) -> ClosureIdentityReport {
    let proper = lat.proper_points();
    let proper_list: Vec<usize> = proper.indices().iter().collect();
    let mut per_point = Vec::new();
    let mut holds = true;
    for i in 0..lat.len() {
        let full_ok = n_space.closure_of_point(i) == v_set(lat, i);
        let proper_ok = match proper_list.iter().position(|&p| p == i) {
            None => true, // the top is not a point of the proper space
            Some(local) => {
                let mut expected = BitSet::new(proper_list.len());
                for (k, &p) in proper_list.iter().enumerate() {
                    if lat.leq(i, p) {
                        expected.insert(k);
                    }
                }
                n_plus_space.closure_of_point(local) == expected
            }
        };
        holds &= full_ok && proper_ok;
        per_point.push(PointIdentityCheck {
            point: i,
            holds_in_full_space: full_ok,
            holds_in_proper_space: proper_ok,
        });
    }
    ClosureIdentityReport { holds, per_point }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FamilyCheckReport {
    pub holds: bool,
    pub exhaustive: bool,
    pub families_checked: usize,
    pub empty_intersection_instances: usize,
    pub finite_witnesses_verified: usize,
}

fn families_of(
    universe: &[usize],
    trials: usize,
    seed: u64,
) -> (Vec<Vec<usize>>, bool) {
    use rand::Rng;
    use rand::SeedableRng;
    let k = universe.len();
    if k <= 12 {
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..(1 << k) {
            out.push(
                universe
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect(),
            );
        }
        (out, true)
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(trials);
        for _ in 0..trials {
            out.push(
                universe
                    .iter()
                    .filter(|_| rng.gen::<bool>())
                    .copied()
                    .collect(),
            );
        }
        (out, false)
    }
}

/// ⋂_F 𝒱(N) = 𝒱(⋁ F) over sampled or exhaustive families of lattice points.
pub fn verify_intersection_identity(
    lat: &NormalLattice,
    trials: usize,
    seed: u64,
) -> FamilyCheckReport {
    let universe: Vec<usize> = (0..lat.len()).collect();
    let (families, exhaustive) = families_of(&universe, trials, seed);
    let mut holds = true;
    for family in &families {
        let mut inter = BitSet::full(lat.len());
        for &i in family {
            inter.intersect_with(lat.upper_set(i));
        }
        let join = lat.join_family(family.iter().copied());
        holds &= inter == v_set(lat, join);
    }
    FamilyCheckReport {
        holds,
        exhaustive,
        families_checked: families.len(),
        empty_intersection_instances: 0,
        finite_witnesses_verified: 0,
    }
}

/// The compactness mechanism of the proper-point space: a family of
/// subbasic closed sets 𝒱(N) ∩ 𝒩⁺ has empty intersection iff the join of
/// the family is the whole group, and every empty intersection has a finite
/// subfamily witness whose join is already the top.
pub fn verify_join_compactness(
    lat: &NormalLattice,
    trials: usize,
    seed: u64,
) -> FamilyCheckReport {
    let proper = lat.proper_points();
    let proper_mask = {
        let mut m = BitSet::new(lat.len());
        for i in proper.indices().iter() {
            m.insert(i);
        }
        m
    };
    let universe: Vec<usize> = proper.indices().iter().collect();
    let (families, exhaustive) = families_of(&universe, trials, seed);
    let mut holds = true;
    let mut empty_instances = 0;
    let mut witnesses = 0;
    for family in &families {
        let mut inter = proper_mask.clone();
        let restricted: Vec<BitSet> = family
            .iter()
            .map(|&i| lat.upper_set(i).intersection(&proper_mask))
            .collect();
        for s in &restricted {
            inter.intersect_with(s);
        }
        let join = lat.join_family(family.iter().copied());
        holds &= inter.is_empty() == (join == lat.top());
        if inter.is_empty() && !family.is_empty() {
            empty_instances += 1;
            // Reindex into proper-space coordinates so the greedy witness
            // search runs inside the subspace.
            let local: Vec<BitSet> = restricted
                .iter()
                .map(|s| {
                    BitSet::from_indices(
                        universe.len(),
                        universe
                            .iter()
                            .enumerate()
                            .filter(|(_, &p)| s.contains(p))
                            .map(|(k, _)| k),
                    )
                })
                .collect();
            if let Some(w) = empty_intersection_witness(&local, universe.len()) {
                let sub_join = lat.join_family(w.iter().map(|&wi| family[wi]));
                if sub_join == lat.top() && w.len() <= lat.len() {
                    witnesses += 1;
                } else {
                    holds = false;
                }
            } else {
                holds = false;
            }
        }
    }
    FamilyCheckReport {
        holds,
        exhaustive,
        families_checked: families.len(),
        empty_intersection_instances: empty_instances,
        finite_witnesses_verified: witnesses,
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MaximalEntry {
    pub point: usize,
    pub order: usize,
    pub label: String,
}

/// Full verification record for one group.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub group_id: String,
    pub order: usize,
    pub normal_subgroup_count: usize,
    pub maximal_normal_subgroups: Vec<MaximalEntry>,
    /// The hypothesis of the main theorem: a maximal normal subgroup exists.
    /// False exactly for the trivial group among finite groups.
    pub hypothesis_holds: bool,
    pub n_space_report: SpectralReport,
    pub n_plus_open: bool,
    pub n_plus_report: SpectralReport,
    pub lemma_chain_valid: bool,
    pub closure_identity: ClosureIdentityReport,
    pub intersection_identity: FamilyCheckReport,
    pub join_compactness: FamilyCheckReport,
    pub seed: u64,
}

impl TheoremReport {
    pub fn closure_identity_holds(&self) -> bool {
        self.closure_identity.holds
    }
    pub fn join_compactness_holds(&self) -> bool {
        self.join_compactness.holds
    }
}

/// Run the whole pipeline on one group: enumerate 𝒩(G), build both spaces,
/// check every axiom, identity, and the lemma instance.
///
/// For a nontrivial finite group every check is an assertion; any failure
/// returns `TheoremAssertionFailed` with a diagnostic instead of a report.
/// The trivial group is reported, not rejected: `hypothesis_holds` is false
/// and the empty proper-point space is flagged spectral by convention.
pub fn verify_theorem_main(
    g: &crate::group::Group,
    group_id: &str,
    caps: &Caps,
    seed: u64,
    trials: usize,
) -> Result<TheoremReport> {
    let lat = enumerate_normal_subgroups(g, caps)?;
    let n_space = coarse_lower_topology(&lat, caps)?;
    let n_space_report = check_spectral(&n_space, &format!("N({})", group_id));
    let proper = lat.proper_points();
    let n_plus_open = n_space.is_open(proper.indices());
    let n_plus_space = n_space.subspace(proper.indices());
    let n_plus_report = check_spectral(&n_plus_space, &format!("N+({})", group_id));
    let lemma = verify_lemma_open_subspace(&n_space, proper.indices())?;
    let lemma_chain_valid = lemma.implication_holds && lemma.open_transfer;
    let closure_identity = verify_closure_identity(&lat, &n_space, &n_plus_space);
    let intersection_identity = verify_intersection_identity(&lat, trials, seed);
    let join_compactness = verify_join_compactness(&lat, trials, seed);
    let maximal = lat
        .maximal_normal_subgroups()
        .into_iter()
        .map(|i| MaximalEntry {
            point: i,
            order: lat.point(i).order(),
            label: lat.point_label(i),
        })
        .collect::<Vec<_>>();
    let hypothesis_holds = !maximal.is_empty();

    let fail = |detail: String| -> Error {
        Error::TheoremAssertionFailed {
            group: group_id.to_string(),
            detail: format!(
                "{} (order {}, {} normal subgroups)",
                detail,
                g.order(),
                lat.len()
            ),
        }
    };
    if !n_plus_open {
        return Err(fail("proper point set is not open in the full space".into()));
    }
    if !closure_identity.holds {
        return Err(fail("closure identity C({N}) = V(N) failed".into()));
    }
    if !intersection_identity.holds {
        return Err(fail("intersection identity over V-sets failed".into()));
    }
    if !join_compactness.holds {
        return Err(fail("join-compactness equivalence failed".into()));
    }
    if !lemma_chain_valid {
        return Err(fail("open-subspace lemma implication failed".into()));
    }
    if !g.is_trivial() && !n_space_report.verdict {
        return Err(fail("N(G) space is not spectral".into()));
    }
    if hypothesis_holds && !n_plus_report.verdict {
        return Err(fail("N+(G) space is not spectral".into()));
    }

    Ok(TheoremReport {
        group_id: group_id.to_string(),
        order: g.order(),
        normal_subgroup_count: lat.len(),
        maximal_normal_subgroups: maximal,
        hypothesis_holds,
        n_space_report,
        n_plus_open,
        n_plus_report,
        lemma_chain_valid,
        closure_identity,
        intersection_identity,
        join_compactness,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::topology::FiniteSpace;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn s3_full_pipeline() {
        let g = catalog("S3").unwrap();
        let r = verify_theorem_main(&g, "S3", &caps(), 7, 100).unwrap();
        assert!(r.hypothesis_holds);
        assert!(r.n_space_report.verdict);
        assert!(r.n_plus_report.verdict);
        assert!(r.n_plus_open);
        assert!(r.lemma_chain_valid);
        assert!(r.closure_identity_holds());
        assert!(r.intersection_identity.holds && r.intersection_identity.exhaustive);
        assert!(r.join_compactness_holds());
        assert_eq!(r.normal_subgroup_count, 3);
        assert_eq!(r.maximal_normal_subgroups.len(), 1);
        assert_eq!(r.maximal_normal_subgroups[0].order, 3);
    }

    #[test]
    fn trivial_group_hypothesis_fails() {
        let g = catalog("Z1").unwrap();
        let r = verify_theorem_main(&g, "Z1", &caps(), 7, 100).unwrap();
        assert!(!r.hypothesis_holds);
        assert!(r.n_plus_report.empty);
        assert!(r.n_plus_report.verdict); // spectral by convention, flagged
        assert_eq!(r.n_plus_report.point_count, 0);
    }

    #[test]
    fn a5_one_point_proper_space() {
        let g = catalog("A5").unwrap();
        let r = verify_theorem_main(&g, "A5", &caps(), 7, 100).unwrap();
        assert!(r.hypothesis_holds);
        assert_eq!(r.normal_subgroup_count, 2);
        assert_eq!(r.n_plus_report.point_count, 1);
        assert!(r.n_plus_report.verdict);
        // The maximal normal subgroup of a simple group is trivial.
        assert_eq!(r.maximal_normal_subgroups[0].order, 1);
    }

    #[test]
    fn indiscrete_space_is_not_spectral() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let space = FiniteSpace::from_subbasis(labels, vec![], &caps()).unwrap();
        let r = check_spectral(&space, "indiscrete2");
        assert!(!r.verdict);
        assert!(!r.sober.holds);
        assert!(r.quasi_compact.holds);
    }

    #[test]
    fn empty_space_flagged() {
        let space = FiniteSpace::from_subbasis(vec![], vec![], &caps()).unwrap();
        let r = check_spectral(&space, "empty");
        assert!(r.verdict);
        assert!(r.empty);
    }

    #[test]
    fn lemma_examples() {
        let g = catalog("Z6").unwrap();
        let lat = enumerate_normal_subgroups(&g, &caps()).unwrap();
        let space = coarse_lower_topology(&lat, &caps()).unwrap();
        // Open {bottom}: one-point subspace, implication holds.
        let open = BitSet::singleton(lat.len(), lat.bottom());
        let r = verify_lemma_open_subspace(&space, &open).unwrap();
        assert!(r.implication_holds && r.open_transfer && r.subspace_spectral);
        // Full subset: trivially fine.
        let r = verify_lemma_open_subspace(&space, &BitSet::full(lat.len())).unwrap();
        assert!(r.implication_holds);
        // A closed-not-open subset is rejected.
        let bad = BitSet::singleton(lat.len(), lat.top());
        assert_eq!(
            verify_lemma_open_subspace(&space, &bad),
            Err(Error::NotOpen)
        );
    }

    #[test]
    fn join_compactness_witnesses_on_z6() {
        let g = catalog("Z6").unwrap();
        let lat = enumerate_normal_subgroups(&g, &caps()).unwrap();
        let r = verify_join_compactness(&lat, 100, 42);
        assert!(r.holds && r.exhaustive);
        assert_eq!(r.families_checked, 8); // 2^3 subsets of proper points
        assert!(r.empty_intersection_instances >= 1); // {m1, m2} at least
        assert_eq!(r.empty_intersection_instances, r.finite_witnesses_verified);
    }

    #[test]
    fn intersection_identity_on_z6() {
        let g = catalog("Z6").unwrap();
        let lat = enumerate_normal_subgroups(&g, &caps()).unwrap();
        let r = verify_intersection_identity(&lat, 100, 42);
        assert!(r.holds && r.exhaustive);
        assert_eq!(r.families_checked, 16);
    }
}
