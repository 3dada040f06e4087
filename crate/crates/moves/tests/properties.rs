use gem_core::{
    all_cyclic_permutations, color_isomorphic, genus_wrt, to_gem_text, validate_gem, Color, Gem,
};
use moves::{
    add_dipole, dipole_site_of, eliminate_dipole, find_dipoles, find_rho_pairs, rho2_genus_delta,
    switch_rho2_factorized, switch_rho_pair, DipoleSite,
};
use proptest::prelude::*;

fn base() -> Gem {
    let mut g = Gem::with_order(5, 2).unwrap();
    for c in 0..5 {
        g.connect(0, 1, c).unwrap();
    }
    g
}

/// Grows a 5-colored gem by dipole insertions at pseudo-random sites. Each op
/// is a color mask (nonempty, not full) and a vertex pick per broken color.
fn grow(ops: &[(u8, [u16; 4])]) -> Gem {
    let mut g = base();
    for &(mask, picks) in ops {
        let mask = 1 + mask % 30;
        let colors: Vec<Color> = (0..5).filter(|c| mask & (1 << c) != 0).collect();
        let free: Vec<Color> = (0..5).filter(|c| mask & (1 << c) == 0).collect();
        let class0: Vec<u32> = g.vertices().filter(|&v| g.class(v) == 0).collect();
        let breaks = free
            .iter()
            .zip(picks)
            .map(|(&c, k)| (c, class0[k as usize % class0.len()]))
            .collect();
        g = add_dipole(&g, &DipoleSite { colors, breaks }).unwrap().0;
    }
    g.compacted().0
}

fn ops() -> impl Strategy<Value = Vec<(u8, [u16; 4])>> {
    prop::collection::vec((any::<u8>(), any::<[u16; 4]>()), 1..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn add_then_eliminate(ops in ops(), mask in any::<u8>(), picks in any::<[u16; 4]>()) {
        let g = grow(&ops);
        let site_mask = 1 + mask % 30;
        let colors: Vec<Color> = (0..5).filter(|c| site_mask & (1 << c) != 0).collect();
        let free: Vec<Color> = (0..5).filter(|c| site_mask & (1 << c) == 0).collect();
        let class0: Vec<u32> = g.vertices().filter(|&v| g.class(v) == 0).collect();
        let breaks = free.iter().zip(picks).map(|(&c, k)| (c, class0[k as usize % class0.len()])).collect();
        let (added, d) = add_dipole(&g, &DipoleSite { colors, breaks }).unwrap();
        prop_assert!(validate_gem(&added).is_valid());
        let back = eliminate_dipole(&added, &d).unwrap();
        prop_assert_eq!(to_gem_text(&back), to_gem_text(&g));
    }

    #[test]
    fn eliminate_then_add(ops in ops(), pick in any::<usize>()) {
        let g = grow(&ops);
        let ds: Vec<_> = (1..5).flat_map(|r| find_dipoles(&g, r)).collect();
        prop_assume!(!ds.is_empty());
        let d = &ds[pick % ds.len()];
        let site = dipole_site_of(&g, d);
        let h = eliminate_dipole(&g, d).unwrap();
        prop_assert!(validate_gem(&h).is_valid());
        let (back, _) = add_dipole(&h, &site).unwrap();
        prop_assert!(validate_gem(&back).is_valid());
        prop_assert!(color_isomorphic(&back.compacted().0, &g).is_some());
    }

    #[test]
    fn rho2_deltas(ops in ops(), pick in any::<usize>()) {
        let g = grow(&ops);
        let rs = find_rho_pairs(&g, 2);
        prop_assume!(!rs.is_empty());
        let rp = &rs[pick % rs.len()];
        let h = switch_rho_pair(&g, rp).unwrap();
        prop_assert!(validate_gem(&h).is_valid());
        prop_assume!(h.is_connected());
        for eps in all_cyclic_permutations(5) {
            let delta = genus_wrt(&h, &eps).unwrap() - genus_wrt(&g, &eps).unwrap();
            prop_assert_eq!(delta, rho2_genus_delta(&eps, rp), "{:?}", eps);
        }
    }

    #[test]
    fn rho2_factorization(ops in ops(), pick in any::<usize>()) {
        let g = grow(&ops);
        let rs = find_rho_pairs(&g, 2);
        prop_assume!(!rs.is_empty());
        let rp = &rs[pick % rs.len()];
        let direct = switch_rho_pair(&g, rp).unwrap();
        let (fact, _, _) = switch_rho2_factorized(&g, rp).unwrap();
        prop_assert!(validate_gem(&fact).is_valid());
        prop_assert!(color_isomorphic(&fact.compacted().0, &direct.compacted().0).is_some());
    }
}
