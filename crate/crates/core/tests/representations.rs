//! Seminormal and fused representations against the algebra structure.

use fused_hecke::fused::{dimension, FusedAlgebra};
use fused_hecke::hecke::HeckeElem;
use fused_hecke::permcomb::{Blocks, Perm};
use fused_hecke::qcoeff::{QRing, RatFunc};
use fused_hecke::seminormal::{branching_check, fused_irrep, fused_irrep_in, generator_matrix, generator_matrix_axial, rep_of_hecke};
use fused_hecke::shapes::{kostka, s_set, Partition, SkewShape};
use num_rational::BigRational;
use proptest::prelude::*;

fn shapes_up_to(max_size: usize, max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for o in 1..=max_outer {
        for outer in Partition::all(o) {
            for i in o.saturating_sub(max_size)..o {
                for inner in Partition::all(i).into_iter().filter(|p| outer.contains(p)) {
                    out.push(SkewShape::new(outer.clone(), inner).unwrap());
                }
            }
        }
    }
    out
}

fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    (1..=m)
        .flat_map(|first| {
            compositions(m - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn content_and_axial_forms_coincide() {
    for shape in shapes_up_to(6, 7) {
        for i in 1..shape.size() {
            assert_eq!(generator_matrix(&shape, i).unwrap().matrix, generator_matrix_axial(&shape, i).unwrap().matrix, "{shape}, σ_{i}");
        }
    }
}

fn element(m: usize) -> impl Strategy<Value = HeckeElem<RatFunc>> {
    let all = Perm::all(m);
    prop::collection::vec((0..all.len(), -2i64..=2), 1..4).prop_map(move |v| {
        let mut e = HeckeElem::zero(m);
        for (i, c) in v {
            e.add_term(all[i].clone(), RatFunc::from_int(c));
        }
        e
    })
}

fn shape_and_pair() -> impl Strategy<Value = (SkewShape, HeckeElem<RatFunc>, HeckeElem<RatFunc>)> {
    let shapes: Vec<SkewShape> = shapes_up_to(5, 6).into_iter().filter(|s| s.size() >= 3).collect();
    (0..shapes.len()).prop_flat_map(move |i| {
        let shape = shapes[i].clone();
        let m = shape.size();
        (Just(shape), element(m), element(m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn seminormal_action_is_multiplicative((shape, a, b) in shape_and_pair()) {
        let lhs = rep_of_hecke(&a.mul(&b).unwrap(), &shape).unwrap().matrix;
        let rhs = rep_of_hecke(&a, &shape).unwrap().matrix.mul(&rep_of_hecke(&b, &shape).unwrap().matrix).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn fused_irreps_are_morphisms_symbolically() {
    for m in 1..=4 {
        for k in compositions(m) {
            let blocks = Blocks::new(k.clone());
            let alg = FusedAlgebra::<RatFunc>::symbolic(&blocks);
            let d = alg.dim();
            let pairs: Vec<(usize, usize)> = (0..d).flat_map(|u| (0..d).map(move |v| (u, v))).collect();
            for lambda in s_set(&k, k.len()).unwrap() {
                let irr = fused_irrep(&lambda, &k, k.len()).unwrap();
                assert_eq!(irr.dim() as u64, kostka(&lambda, &k).unwrap());
                assert!(irr.check_morphism(&alg, &pairs).unwrap(), "{k:?}, {lambda}");
            }
        }
    }
}

#[test]
fn irreducibles_exhaust_the_dimension() {
    for m in 1..=7 {
        for k in compositions(m) {
            let total: u64 = s_set(&k, k.len()).unwrap().iter().map(|l| kostka(l, &k).unwrap().pow(2)).sum();
            assert_eq!(total as usize, dimension(&Blocks::new(k)));
        }
    }
}

#[test]
fn morphism_at_a_rational_point_for_a_larger_case() {
    let k = [2, 2, 1, 1];
    let q0 = BigRational::new(7.into(), 5.into());
    let blocks = Blocks::new(k.to_vec());
    let alg = FusedAlgebra::at(&blocks, &q0).unwrap();
    let d = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|u| (0..d).map(move |v| (u, v))).collect();
    for lambda in s_set(&k, 4).unwrap() {
        let irr = fused_irrep_in(&lambda, &k, 4, QRing::at(&q0)).unwrap();
        assert!(irr.check_morphism(&alg, &pairs).unwrap(), "{lambda}");
    }
}

#[test]
fn branching_follows_horizontal_strips() {
    for m in 2..=6 {
        for k in compositions(m).into_iter().filter(|k| k.len() >= 2) {
            for lambda in s_set(&k, k.len()).unwrap() {
                assert!(branching_check(&lambda, &k, k.len()).unwrap(), "{k:?}, {lambda}");
            }
        }
    }
}
