//! Property tests for the combinatorial layer.

use proptest::prelude::*;

use xnd_core::character::{dl_induction, hc_restrict, phi_d_blocks, VirtualChar};
use xnd_core::partition::{
    beta_set, dominates, partitions_of, removable_corners, saturated_beta_set, Partition,
};

/// A random partition of size at most `max`.
fn arb_partition(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let pool = partitions_of(n);
        (0..pool.len()).prop_map(move |i| pool[i].clone())
    })
}

proptest! {
    #[test]
    fn beta_set_round_trip(lam in arb_partition(12), extra in 0usize..=5) {
        let s = lam.num_parts() + extra;
        let x = beta_set(&lam, s).unwrap();
        prop_assert_eq!(x.partition(), lam);
    }

    #[test]
    fn hook_data_shift_invariant(mu in arb_partition(10), d in 1u32..=6) {
        let n = mu.size() + d;
        let x = saturated_beta_set(&mu, d);
        let y = x.shift();
        for &a in &x.addable_hooks(d) {
            prop_assert_eq!(x.add_hook(a, d).unwrap(), y.add_hook(a + 1, d).unwrap());
            prop_assert_eq!(
                x.hook_degree(a, n, d).unwrap(),
                y.hook_degree(a + 1, n, d).unwrap()
            );
            prop_assert_eq!(
                x.frobenius_exponent(a, n).unwrap(),
                y.frobenius_exponent(a + 1, n).unwrap()
            );
        }
    }

    #[test]
    fn add_then_remove_hook(mu in arb_partition(10), d in 1u32..=6) {
        let x = saturated_beta_set(&mu, d);
        for &a in &x.addable_hooks(d) {
            let grown = x.add_hook(a, d).unwrap();
            let y = beta_set(&grown, x.len()).unwrap();
            prop_assert_eq!(y.remove_hook(a + d, d).unwrap(), mu.clone());
        }
    }

    #[test]
    fn hook_degrees_strictly_increase(mu in arb_partition(10), d in 1u32..=6) {
        let n = mu.size() + d;
        let x = saturated_beta_set(&mu, d);
        let mut hooks = x.addable_hooks(d);
        hooks.sort_unstable();
        let degs: Vec<i64> = hooks
            .iter()
            .map(|&a| x.hook_degree(a, n, d).unwrap())
            .collect();
        prop_assert!(degs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn restriction_mass(lam in arb_partition(10)) {
        prop_assume!(!lam.is_empty());
        let mass = hc_restrict(&VirtualChar::unipotent(&lam)).unwrap().total_mass();
        prop_assert_eq!(mass as usize, removable_corners(&lam).unwrap().len());
    }

    #[test]
    fn induction_signs_are_units(mu in arb_partition(8), d in 1u32..=6) {
        let v = dl_induction(&mu, d);
        let x = saturated_beta_set(&mu, d);
        prop_assert_eq!(v.num_terms(), x.addable_hooks(d).len());
        prop_assert!(v.iter().all(|(_, c)| c == 1 || c == -1));
    }

    #[test]
    fn blocks_partition_everything(n in 1u32..=10, d in 1u32..=6) {
        let blocks = phi_d_blocks(n, d);
        let mut seen: Vec<Partition> = blocks.iter().flat_map(|b| b.labels.clone()).collect();
        seen.sort();
        let mut all = partitions_of(n);
        all.sort();
        prop_assert_eq!(seen, all);
    }

    #[test]
    fn dominance_is_reflexive_and_antisymmetric(n in 1u32..=9) {
        for a in partitions_of(n) {
            prop_assert!(dominates(&a, &a).unwrap());
            for b in partitions_of(n) {
                if dominates(&a, &b).unwrap() && dominates(&b, &a).unwrap() {
                    prop_assert_eq!(&a, &b);
                }
            }
        }
    }
}
