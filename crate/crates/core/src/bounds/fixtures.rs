//! Graph batteries shared by the verification suites.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random_tree;
use crate::bethe::GeneralizedBetheSpec;
use crate::graph::Graph;

pub const RANDOM_TREE_SEED: u64 = 0x5eed_2017;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
}

impl Fixture {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        Fixture { name: name.into(), graph }
    }
}

/// `C_8, Y_7, K_{1,4}, F_7, F_8, F_9`: one member of each Smith family.
pub fn smith_fixtures() -> Vec<Fixture> {
    vec![
        Fixture::new("C8", Graph::cycle(8).expect("n >= 3")),
        Fixture::new("Y7", Graph::smith_y(7).expect("n > 5")),
        Fixture::new("K14", Graph::smith_k14()),
        Fixture::new("F7", Graph::smith_f7()),
        Fixture::new("F8", Graph::smith_f8()),
        Fixture::new("F9", Graph::smith_f9()),
    ]
}

/// `count` random labeled trees with orders drawn from `5..=40`, seeded.
pub fn random_trees(count: usize, seed: u64) -> Vec<Fixture> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(5..=40);
            let t = random_tree(n, &mut rng).expect("n >= 2");
            Fixture::new(format!("random_tree_{i}_n{n}"), t)
        })
        .collect()
}

/// Connected fixtures of order at most 60: paths, stars, cycles, complete
/// graphs, Smith graphs, Bethe trees, a few unicyclic graphs and seeded
/// random trees.
pub fn standard_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(Fixture::new(format!("path:{n}"), Graph::path(n).expect("n >= 2")));
    }
    for n in 3..=10 {
        out.push(Fixture::new(format!("star:{n}"), Graph::star(n).expect("n >= 2")));
    }
    for n in 3..=10 {
        out.push(Fixture::new(format!("cycle:{n}"), Graph::cycle(n).expect("n >= 3")));
    }
    for n in 4..=6 {
        out.push(Fixture::new(format!("complete:{n}"), Graph::complete(n).expect("n >= 1")));
    }
    out.extend(smith_fixtures());
    out.push(Fixture::new("Y6", Graph::smith_y(6).expect("n > 5")));
    out.push(Fixture::new("Y10", Graph::smith_y(10).expect("n > 5")));
    for (d, k) in [(2, 3), (2, 4), (3, 3), (3, 4), (4, 3)] {
        let spec = GeneralizedBetheSpec::bethe(d, k).expect("valid Bethe parameters");
        out.push(Fixture::new(format!("bethe:{d}:{k}"), spec.build_tree()));
    }
    for degrees in [&[1, 2, 3, 2][..], &[1, 3, 2, 4]] {
        let spec = GeneralizedBetheSpec::from_degrees(degrees).expect("valid degree sequence");
        out.push(Fixture::new(format!("gbethe:{spec}"), spec.build_tree()));
    }
    let lollipop = Graph::cycle(5).expect("n >= 3").with_pendant(0).and_then(|g| g.with_pendant(5));
    out.push(Fixture::new("lollipop:5:2", lollipop.expect("valid vertex")));
    let kite = Graph::complete(4).expect("n >= 1").with_pendant(3);
    out.push(Fixture::new("kite", kite.expect("valid vertex")));
    out.extend(random_trees(16, RANDOM_TREE_SEED));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_connected_and_small() {
        let all = standard_fixtures();
        assert!(all.iter().all(|f| f.graph.is_connected() && f.graph.order() <= 60));
        let mut names: Vec<&str> = all.iter().map(|f| f.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a = random_trees(4, 11);
        let b = random_trees(4, 11);
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph));
        assert!(a.iter().all(|f| f.graph.is_tree()));
    }
}
