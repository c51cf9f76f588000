use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use edgemetric::catalog;
use edgemetric::graph::{Graph, SimpleGraph};
use edgemetric::products::{
    corona_product, edim_gu, edim_plus_gu, hierarchical_product, is_rooted_path,
    product_distance, RootedSubset,
};
use edgemetric::random::{connected_graph, connected_graph_with};
use edgemetric::resolve::brute_force_dim;
use edgemetric::verify::random_hierarchical;

/// Truncated cube rebuilt from coordinates: all permutations of
/// `(±(√2−1), ±1, ±1)`, joined at minimum Euclidean distance.
fn truncated_cube_from_coordinates() -> Graph {
    let xi = std::f64::consts::SQRT_2 - 1.0;
    let mut pts = Vec::new();
    for pos in 0..3 {
        for signs in 0..8 {
            let s = |b: usize| if signs >> b & 1 == 1 { -1.0 } else { 1.0 };
            let mut p = [0.0; 3];
            p[(pos + 1) % 3] = s(1);
            p[(pos + 2) % 3] = s(2);
            p[pos] = s(0) * xi;
            pts.push(p);
        }
    }
    let d2 = |a: &[f64; 3], b: &[f64; 3]| (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>();
    let min = (0..24)
        .flat_map(|i| (i + 1..24).map(move |j| (i, j)))
        .map(|(i, j)| d2(&pts[i], &pts[j]))
        .fold(f64::INFINITY, f64::min);
    let edges: Vec<_> = (0..24)
        .flat_map(|i| (i + 1..24).map(move |j| (i, j)))
        .filter(|&(i, j)| (d2(&pts[i], &pts[j]) - min).abs() < 1e-9)
        .collect();
    Graph::new(24, &edges).unwrap()
}

fn invariants(g: &Graph) -> (Vec<usize>, usize, Vec<u32>) {
    let mut degrees: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let triangles = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            g.neighbors(a)
                .iter()
                .filter(|c| g.neighbors(b).contains(c))
                .count()
        })
        .sum::<usize>()
        / 3;
    let mut dists: Vec<_> = (0..g.n())
        .flat_map(|a| (0..g.n()).map(move |b| (a, b)))
        .map(|(a, b)| g.dist(a, b))
        .collect();
    dists.sort_unstable();
    (degrees, triangles, dists)
}

#[test]
fn truncated_cube_matches_geometry() {
    let geo = truncated_cube_from_coordinates();
    assert_eq!((geo.n(), geo.m()), (24, 36));
    assert_eq!(invariants(&geo), invariants(&catalog::truncated_cube().unwrap()));
    assert_eq!(invariants(&geo).1, 8);
}

#[test]
fn rooted_path_has_no_equidistant_demand() {
    for n in 1..=8 {
        let g = catalog::path(n).unwrap();
        assert!(is_rooted_path(&g, 0).unwrap());
        let gu = RootedSubset::single(g, 0).unwrap();
        assert_eq!(edim_gu(&gu).unwrap().optimum, 0, "P{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_distance_matches_bfs(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (gu, h) = random_hierarchical(&mut rng, 30, 1, 4, 1);
        let x = hierarchical_product(&gu, &h).unwrap();
        for a in 0..x.graph.n() {
            for b in 0..x.graph.n() {
                prop_assert_eq!(
                    product_distance(&gu, &h, x.pair_of(a), x.pair_of(b)).unwrap(),
                    x.graph.dist(a, b)
                );
            }
        }
    }

    #[test]
    fn corona_counts(ng in 1usize..6, nh in 1usize..6, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = connected_graph(ng, p, seed);
        let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37);
        // H need not be connected: keep every other edge of a connected graph.
        let base = connected_graph_with(&mut rng, nh, p);
        let kept: Vec<_> = base.edges().iter().copied().step_by(2).collect();
        let h = SimpleGraph::new(nh, &kept).unwrap();
        let c = corona_product(&g, &h).unwrap();
        prop_assert_eq!(c.graph.n(), ng * (nh + 1));
        prop_assert_eq!(c.graph.m(), g.m() + ng * (h.m() + nh));
    }

    #[test]
    fn full_root_set_edge_count(ng in 1usize..7, nh in 1usize..7, seed in any::<u64>()) {
        let g = connected_graph(ng, 0.4, seed);
        let h = connected_graph(nh, 0.4, seed.wrapping_add(1));
        let gu = RootedSubset::new(g.clone(), (0..ng).collect()).unwrap();
        let x = hierarchical_product(&gu, &h).unwrap();
        prop_assert_eq!(x.graph.m(), g.m() * nh + ng * h.m());
    }

    #[test]
    fn plus_dimension_sandwich(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (gu, _) = random_hierarchical(&mut rng, 20, 1, 4, 2);
        let base = edim_gu(&gu).unwrap().optimum;
        let plus = edim_plus_gu(&gu).unwrap().optimum;
        let roots = brute_force_dim(gu.graph(), gu.roots()).unwrap().size;
        prop_assert!(base <= plus);
        prop_assert!(plus <= base + roots);
    }
}
