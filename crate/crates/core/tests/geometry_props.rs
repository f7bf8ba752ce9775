use num_rational::BigRational;
use proptest::prelude::*;
use toric_elim::geom::{convex_hull, euclidean_volume, minkowski_sum, mixed_volume};
use toric_elim::{IntegralPolytope, LatticePoint};

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain; counterclockwise, no collinear vertices.
fn chain_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut p = points.to_vec();
    p.sort_unstable();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        for &q in &p {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
        if pass == 0 {
            p.reverse();
        }
    }
    hull
}

/// Twice the area.
fn shoelace2(hull: &[(i64, i64)]) -> i64 {
    if hull.len() < 3 {
        return 0;
    }
    (0..hull.len())
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn inside(hull: &[(i64, i64)], q: (i64, i64)) -> bool {
    (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], q) >= 0)
}

fn sums(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    a.iter().flat_map(|p| b.iter().map(move |q| (p.0 + q.0, p.1 + q.1))).collect()
}

fn polytope(points: &[(i64, i64)]) -> IntegralPolytope {
    let pts: Vec<LatticePoint> = points.iter().map(|&(x, y)| LatticePoint::new(vec![x, y])).collect();
    convex_hull(&pts).unwrap()
}

fn as_pairs(points: &[LatticePoint]) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = points.iter().map(|p| (p.coords()[0], p.coords()[1])).collect();
    v.sort_unstable();
    v
}

/// Point sets whose hull is a genuine polygon.
fn polygon_points() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 3..8).prop_filter("full-dimensional", |p| shoelace2(&chain_hull(p)) > 0)
}

fn any_points() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-2i64..=2, -2i64..=2), 1..6)
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_vertices_match_chain(points in polygon_points()) {
        let hull = polytope(&points);
        let mut expected = chain_hull(&points);
        expected.sort_unstable();
        prop_assert_eq!(as_pairs(hull.vertices()), expected);
        prop_assert_eq!(hull.facets().len(), hull.vertices().len());
    }

    #[test]
    fn hull_contains_inputs_with_tight_vertices(points in polygon_points()) {
        let hull = polytope(&points);
        for &(x, y) in &points {
            let p = LatticePoint::new(vec![x, y]);
            prop_assert!(hull.facets().iter().all(|f| f.contains(&p)));
        }
        for v in hull.vertices() {
            prop_assert_eq!(hull.facets().iter().filter(|f| f.is_tight(v)).count(), 2);
        }
        for f in hull.facets() {
            prop_assert_eq!(gcd(f.normal[0], f.normal[1]), 1);
        }
    }

    #[test]
    fn lattice_points_match_oracle(points in polygon_points()) {
        let hull = polytope(&points);
        let chain = chain_hull(&points);
        let mut expected = Vec::new();
        for x in -3..=3 {
            for y in -3..=3 {
                if inside(&chain, (x, y)) {
                    expected.push((x, y));
                }
            }
        }
        let found = as_pairs(&hull.lattice_points());
        prop_assert_eq!(&found, &expected);
        // Pick: 2A = 2I + B - 2
        let boundary: i64 = (0..chain.len())
            .map(|i| {
                let (a, b) = (chain[i], chain[(i + 1) % chain.len()]);
                gcd(b.0 - a.0, b.1 - a.1)
            })
            .sum();
        let interior = found.len() as i64 - boundary;
        prop_assert_eq!(shoelace2(&chain), 2 * interior + boundary - 2);
    }

    #[test]
    fn volume_matches_shoelace(points in polygon_points()) {
        let hull = polytope(&points);
        prop_assert_eq!(euclidean_volume(&hull), BigRational::new(shoelace2(&chain_hull(&points)).into(), 2.into()));
    }

    #[test]
    fn minkowski_sum_matches_pairwise_hull(a in any_points(), b in any_points()) {
        let sum = minkowski_sum(&polytope(&a), &polytope(&b)).unwrap();
        let mut expected = chain_hull(&sums(&a, &b));
        expected.sort_unstable();
        prop_assert_eq!(as_pairs(sum.vertices()), expected);
        let swapped = minkowski_sum(&polytope(&b), &polytope(&a)).unwrap();
        prop_assert_eq!(as_pairs(sum.vertices()), as_pairs(swapped.vertices()));
    }

    #[test]
    fn minkowski_sum_is_associative(a in any_points(), b in any_points(), c in any_points()) {
        let (pa, pb, pc) = (polytope(&a), polytope(&b), polytope(&c));
        let left = minkowski_sum(&minkowski_sum(&pa, &pb).unwrap(), &pc).unwrap();
        let right = minkowski_sum(&pa, &minkowski_sum(&pb, &pc).unwrap()).unwrap();
        prop_assert_eq!(as_pairs(left.vertices()), as_pairs(right.vertices()));
    }

    #[test]
    fn mixed_volume_matches_area_oracle(a in any_points(), b in any_points()) {
        // MV(A, B) = area(A + B) - area(A) - area(B), areas doubled
        let expected = shoelace2(&chain_hull(&sums(&a, &b)))
            - shoelace2(&chain_hull(&a))
            - shoelace2(&chain_hull(&b));
        let mv = mixed_volume(&[polytope(&a), polytope(&b)]).unwrap();
        prop_assert_eq!(2 * mv as i64, expected);
        prop_assert_eq!(mv, mixed_volume(&[polytope(&b), polytope(&a)]).unwrap());
    }

    #[test]
    fn mixed_volume_is_additive(a in any_points(), b in any_points(), c in any_points()) {
        let (pa, pb, pc) = (polytope(&a), polytope(&b), polytope(&c));
        let ab = minkowski_sum(&pa, &pb).unwrap();
        let lhs = mixed_volume(&[ab, pc.clone()]).unwrap();
        let rhs = mixed_volume(&[pa, pc.clone()]).unwrap() + mixed_volume(&[pb, pc]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_volume_of_repeated_polytope(points in polygon_points()) {
        let p = polytope(&points);
        let mv = mixed_volume(&[p.clone(), p.clone()]).unwrap();
        prop_assert_eq!(int(mv as i64), euclidean_volume(&p) * int(2));
    }

    #[test]
    fn mixed_volume_is_translation_invariant(a in any_points(), b in any_points(), dx in -3i64..=3, dy in -3i64..=3) {
        let pa = polytope(&a);
        let moved = pa.translate(&LatticePoint::new(vec![dx, dy]));
        let pb = polytope(&b);
        prop_assert_eq!(mixed_volume(&[pa, pb.clone()]).unwrap(), mixed_volume(&[moved, pb]).unwrap());
    }
}

fn cube_points(side: i64) -> Vec<LatticePoint> {
    let mut pts = Vec::new();
    for x in [0, side] {
        for y in [0, side] {
            for z in [0, side] {
                pts.push(LatticePoint::new(vec![x, y, z]));
            }
        }
    }
    pts
}

#[test]
fn three_dimensional_volumes() {
    let cube = convex_hull(&cube_points(2)).unwrap();
    assert_eq!(euclidean_volume(&cube), int(8));
    assert_eq!(cube.lattice_points().len(), 27);
    // MV(P, P, P) = 3! vol(P)
    assert_eq!(mixed_volume(&[cube.clone(), cube.clone(), cube.clone()]).unwrap(), 48);
    let simplex = convex_hull(&[
        LatticePoint::new(vec![0, 0, 0]),
        LatticePoint::new(vec![1, 0, 0]),
        LatticePoint::new(vec![0, 1, 0]),
        LatticePoint::new(vec![0, 0, 1]),
    ])
    .unwrap();
    assert_eq!(euclidean_volume(&simplex), BigRational::new(1.into(), 6.into()));
    // three generic linear forms in three unknowns have one common root
    assert_eq!(mixed_volume(&[simplex.clone(), simplex.clone(), simplex]).unwrap(), 1);
}
