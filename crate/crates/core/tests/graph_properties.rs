use alpha_spectra::bounds::{complete_pairs, graph_from_mask, nonisomorphic_trees, random_tree};
use alpha_spectra::eigen::{dense_eigenvalues, perron, DEFAULT_PERRON_TOL};
use alpha_spectra::graph::{parse_edge_list, to_edge_list};
use alpha_spectra::{AlphaParam, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs = complete_pairs(n);
        let bits = pairs.len();
        (Just(n), 0u64..(1u64 << bits)).prop_map(move |(n, mask)| graph_from_mask(n, &pairs, mask as u32))
    })
}

fn arb_alpha() -> impl Strategy<Value = AlphaParam> {
    (0.0f64..=1.0).prop_map(|x| AlphaParam::new(x).unwrap())
}

fn top(m: &alpha_spectra::DenseSymMatrix) -> f64 {
    *dense_eigenvalues(m).last().unwrap()
}

proptest! {
    #[test]
    fn alpha_matrix_is_symmetric_and_nonnegative(g in arb_graph(), a in arb_alpha()) {
        let m = g.alpha_matrix(a);
        for i in 0..g.order() {
            for j in 0..g.order() {
                prop_assert_eq!(m.get(i, j), m.get(j, i));
                prop_assert!(m.get(i, j) >= 0.0);
            }
        }
    }

    #[test]
    fn complementary_alphas_sum_to_signless_laplacian(g in arb_graph(), a in arb_alpha()) {
        let sum = g.alpha_matrix(a).add(&g.alpha_matrix(a.complement()));
        let q = g.signless_laplacian();
        prop_assert!(sum.max_abs_diff(&q) <= 4.0 * f64::EPSILON * (g.max_degree() as f64).max(1.0));
    }

    #[test]
    fn doubled_half_is_signless_laplacian(g in arb_graph()) {
        prop_assert_eq!(g.alpha_matrix(AlphaParam::HALF).scaled(2.0), g.signless_laplacian());
    }

    #[test]
    fn quadratic_form_matches_matrix(g in arb_graph(), a in arb_alpha(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<f64> = (0..g.order()).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let direct = g.quadratic_form(a, &x).unwrap();
        let via_matrix = g.alpha_matrix(a).quadratic_form(&x);
        let scale: f64 = x.iter().map(|v| v * v).sum::<f64>() * (g.max_degree() as f64).max(1.0);
        prop_assert!((direct - via_matrix).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let text = to_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn laplacian_and_signless_agree_only_up_to_bipartiteness(g in arb_graph()) {
        let rq = top(&g.signless_laplacian());
        let rl = top(&g.laplacian());
        prop_assert!(rl <= rq + 1e-9);
    }
}

#[test]
fn trees_have_equal_signless_and_laplacian_radii() {
    for n in 2..=10 {
        for t in nonisomorphic_trees(n).unwrap() {
            let rq = top(&t.signless_laplacian());
            let rl = top(&t.laplacian());
            assert!((rq - rl).abs() <= 1e-9, "n={n}: {rq} vs {rl}");
        }
    }
}

/// Moving an edge `uv` to `uw` with `x_w` maximal cannot lower the quadratic
/// form of the Perron vector, and the radius must then grow strictly.
#[test]
fn rotating_towards_the_largest_perron_entry_raises_the_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut rotations = 0;
    for _ in 0..60 {
        let n = rng.gen_range(5..=30);
        let g = random_tree(n, &mut rng).unwrap();
        let a = AlphaParam::new(rng.gen_range(0.0..0.95)).unwrap();
        let Ok(p) = perron(&g.alpha_matrix(a), DEFAULT_PERRON_TOL) else { continue };
        let x = &p.vector;
        let w = (0..n).max_by(|&i, &j| x[i].total_cmp(&x[j])).unwrap();
        let rho_g = top(&g.alpha_matrix(a));
        for (u0, v0) in g.edges().collect::<Vec<_>>() {
            for (u, v) in [(u0, v0), (v0, u0)] {
                if u == w || v == w || g.has_edge(u, w) {
                    continue;
                }
                let h = g.rotate_edge(u, v, w).unwrap();
                if h.quadratic_form(a, x).unwrap() < g.quadratic_form(a, x).unwrap() {
                    continue;
                }
                let rho_h = top(&h.alpha_matrix(a));
                assert!(rho_h > rho_g + 1e-12, "n={n} alpha {a} rotate ({u},{v})->{w}: {rho_h} vs {rho_g}");
                rotations += 1;
            }
        }
    }
    assert!(rotations > 100);
}

#[test]
fn smith_graphs_have_radius_two() {
    let graphs = [
        Graph::cycle(8).unwrap(),
        Graph::smith_y(6).unwrap(),
        Graph::smith_y(7).unwrap(),
        Graph::smith_y(12).unwrap(),
        Graph::smith_k14(),
        Graph::smith_f7(),
        Graph::smith_f8(),
        Graph::smith_f9(),
    ];
    for g in graphs {
        assert!((top(&g.adjacency_matrix()) - 2.0).abs() <= 1e-9, "{}", to_edge_list(&g));
    }
}
