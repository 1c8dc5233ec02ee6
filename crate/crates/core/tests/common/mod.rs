#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use basisforest::{BasisDescriptor, Continuity, GlobalBasis, MergingStrategy, MultiIndex, TreePath};
use rand::Rng;

pub fn random_leaf<R: Rng>(rng: &mut R) -> BasisDescriptor {
    let degree = rng.random_range(0..=3);
    if rng.random_bool(0.25) {
        BasisDescriptor::dg(degree)
    } else {
        BasisDescriptor::lagrange(degree)
    }
}

fn random_entity_child<R: Rng>(rng: &mut R, depth: usize) -> BasisDescriptor {
    if depth >= 2 && rng.random_bool(0.3) {
        let child = random_entity_child(rng, depth - 1);
        BasisDescriptor::power(child, rng.random_range(1..=3), MergingStrategy::BlockedByEntity)
    } else {
        random_leaf(rng)
    }
}

/// A descriptor of depth at most `depth` whose strategies are legal for the
/// node kind. Flat merges may still be rejected for mismatched children.
pub fn random_descriptor<R: Rng>(rng: &mut R, depth: usize) -> BasisDescriptor {
    if depth <= 1 || rng.random_bool(0.3) {
        return random_leaf(rng);
    }
    if rng.random_bool(0.5) {
        let strategy = MergingStrategy::ALL[rng.random_range(0..5)];
        let child = if strategy == MergingStrategy::BlockedByEntity {
            random_entity_child(rng, depth - 1)
        } else {
            random_descriptor(rng, depth - 1)
        };
        BasisDescriptor::power(child, rng.random_range(1..=3), strategy)
    } else {
        let composite = [MergingStrategy::FlatLexicographic, MergingStrategy::BlockedLexicographic];
        let n = rng.random_range(1..=3);
        let children = (0..n).map(|_| random_descriptor(rng, depth - 1)).collect();
        BasisDescriptor::composite(children, composite[rng.random_range(0..2)])
    }
}

pub fn inner_paths(descriptor: &BasisDescriptor) -> Vec<TreePath> {
    fn walk(d: &BasisDescriptor, path: Vec<usize>, out: &mut Vec<TreePath>) {
        if d.is_leaf() {
            return;
        }
        out.push(TreePath::from(path.clone()));
        for i in 0..d.child_count() {
            let mut p = path.clone();
            p.push(i);
            walk(d.child(i).unwrap(), p, out);
        }
    }
    let mut out = Vec::new();
    walk(descriptor, Vec::new(), &mut out);
    out
}

/// Problems found when comparing the indices of all local views against
/// physical node positions. Continuous leaves must share an index exactly
/// when they share a node position; discontinuous leaves never share.
pub fn continuity_violations(basis: &GlobalBasis) -> Vec<String> {
    let mut problems = Vec::new();
    let mut by_key: HashMap<(Vec<usize>, Option<usize>, i64, i64), MultiIndex> = HashMap::new();
    let mut owner: HashMap<MultiIndex, (Vec<usize>, Option<usize>, i64, i64)> = HashMap::new();
    let mut view = basis.local_view();
    for cell in 0..basis.mesh().num_cells() {
        view.bind(cell).unwrap();
        let geometry = view.geometry().unwrap();
        for leaf in view.tree().leaves() {
            let fe = leaf.finite_element().unwrap();
            for (k, node) in fe.nodes().iter().enumerate() {
                let x = geometry.global(node);
                let cell_key = match fe.continuity() {
                    Continuity::Continuous => None,
                    Continuity::Discontinuous => Some(cell),
                };
                let key = (
                    leaf.path().digits().to_vec(),
                    cell_key,
                    (x.x * 1e9).round() as i64,
                    (x.y * 1e9).round() as i64,
                );
                let index = view.index(leaf.local_index(k)).unwrap().clone();
                if let Some(previous) = by_key.insert(key.clone(), index.clone()) {
                    if previous != index {
                        problems.push(format!("{key:?} got {previous} and {index}"));
                    }
                }
                if let Some(other) = owner.insert(index.clone(), key.clone()) {
                    if other != key {
                        problems.push(format!("{index} used for {other:?} and {key:?}"));
                    }
                }
            }
        }
    }
    problems
}

pub fn gathered_indices(basis: &GlobalBasis) -> BTreeSet<MultiIndex> {
    let mut view = basis.local_view();
    let mut out = BTreeSet::new();
    for cell in 0..basis.mesh().num_cells() {
        view.bind(cell).unwrap();
        out.extend(view.indices().unwrap().iter().cloned());
    }
    out
}

pub const BASIS_MATRIX: [&str; 7] = [
    "lagrange(1)",
    "lagrange(2)",
    "lagrange(3)",
    "dg(1)",
    "power(lagrange(2), 2, blockedInterleaved)",
    "composite(power(lagrange(2), 2, blockedLexicographic), lagrange(1), blockedLexicographic)",
    "composite(power(lagrange(2), 2, blockedInterleaved), lagrange(1), blockedLexicographic)",
];

pub const MESHES: [(usize, usize); 3] = [(1, 1), (2, 2), (4, 4)];
