mod common;

use std::collections::BTreeSet;

use basisforest::indexing::MergeContext;
use basisforest::{
    is_valid_index_tree, make_basis, make_container, parse_descriptor, Continuity, Error, IndexTree,
    LocalFiniteElement, MergingStrategy, Mesh, MultiIndex,
};
use nalgebra::Point2;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{continuity_violations, gathered_indices, random_descriptor};

fn reference_point() -> impl Strategy<Value = Point2<f64>> {
    (0.0..1.0f64, 0.0..1.0f64).prop_map(|(s, t)| if s + t > 1.0 { Point2::new(1.0 - s, 1.0 - t) } else { Point2::new(s, t) })
}

fn index_tree() -> impl Strategy<Value = IndexTree> {
    let leaf = Just(IndexTree::Value);
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (1..5usize, inner.clone()).prop_map(|(n, c)| IndexTree::uniform(n, c)),
            prop::collection::vec(inner, 1..4).prop_map(IndexTree::non_uniform),
        ]
    })
}

fn strategy() -> impl Strategy<Value = MergingStrategy> {
    prop::sample::select(MergingStrategy::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shape_functions_sum_to_one(k in 0..=3usize, p in reference_point()) {
        let fe = LocalFiniteElement::lagrange(k, Continuity::Continuous).unwrap();
        let sum: f64 = fe.evaluate_values(&p).iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        let gradient = fe.evaluate_gradients(&p).iter().fold(nalgebra::Vector2::zeros(), |a, g| a + g);
        prop_assert!(gradient.norm() < 1e-10);
    }

    #[test]
    fn interpolating_a_shape_function_gives_a_unit_vector(k in 0..=3usize, j in 0..10usize) {
        let fe = LocalFiniteElement::lagrange(k, Continuity::Continuous).unwrap();
        let j = j % fe.size();
        let coefficients = fe.interpolate_local(|p| fe.evaluate_values(p)[j]);
        for (i, c) in coefficients.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            prop_assert!((c - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn merge_is_injective_onto_leaf_paths(children in prop::collection::vec(index_tree(), 1..4), strategy in strategy()) {
        let children = if strategy.requires_power_node() { vec![children[0].clone(); children.len()] } else { children };
        match MergeContext::new(strategy, children.clone()) {
            Ok(context) => {
                let leaves = context.tree().leaf_paths();
                prop_assert!(is_valid_index_tree(&leaves));
                let mut images = BTreeSet::new();
                for (i, child) in context.children().iter().enumerate() {
                    for leaf in child.leaf_paths() {
                        prop_assert!(images.insert(context.merge_index(i, &leaf).unwrap()));
                    }
                }
                prop_assert_eq!(images, leaves.into_iter().collect::<BTreeSet<_>>());
            }
            Err(Error::EmptyChildIndex(_)) => prop_assert!(children.iter().any(IndexTree::is_value)),
            Err(Error::IncompatibleChildren { .. }) => prop_assert!(strategy.is_flat() || strategy == MergingStrategy::BlockedByEntity),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn container_get_returns_what_set_stored(tree in index_tree(), seed in any::<u64>()) {
        let mut container = make_container(&tree, 0u64);
        let leaves = tree.leaf_paths();
        for (k, leaf) in leaves.iter().enumerate() {
            container.set(leaf, seed.wrapping_add(k as u64)).unwrap();
        }
        for (k, leaf) in leaves.iter().enumerate() {
            prop_assert_eq!(*container.get(leaf).unwrap(), seed.wrapping_add(k as u64));
        }
        prop_assert_eq!(container.len(), tree.leaf_count());
        prop_assert_eq!(container.shape(), tree.normalized());
    }

    #[test]
    fn multi_index_display_is_comma_separated(digits in prop::collection::vec(0..1000usize, 0..8)) {
        let index = MultiIndex::from_digits(&digits).unwrap();
        let text: Vec<String> = digits.iter().map(ToString::to_string).collect();
        prop_assert_eq!(index.to_string(), format!("({})", text.join(",")));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn descriptor_text_round_trips(seed in any::<u64>()) {
        let descriptor = random_descriptor(&mut StdRng::seed_from_u64(seed), 4);
        let text = descriptor.to_string();
        prop_assert_eq!(parse_descriptor(&text).unwrap(), descriptor);
    }

    #[test]
    fn random_bases_number_consistently(seed in any::<u64>(), nx in 1..3usize, ny in 1..3usize) {
        let descriptor = random_descriptor(&mut StdRng::seed_from_u64(seed), 3);
        let Ok(basis) = make_basis(Mesh::structured(nx, ny).unwrap(), descriptor) else {
            return Ok(());
        };
        let gathered = gathered_indices(&basis);
        prop_assert_eq!(gathered.len(), basis.dimension());
        prop_assert_eq!(gathered, basis.container_descriptor().leaf_paths().into_iter().collect::<BTreeSet<_>>());
        let problems = continuity_violations(&basis);
        prop_assert!(problems.is_empty(), "{}", problems.join("\n"));
    }
}
