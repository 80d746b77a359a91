use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

use pyrene_core::antiforcing::{anti_forcing_number, is_anti_forcing_set};
use pyrene_core::forcing::{forcing_number, forcing_number_from, is_forcing_set, SearchStart};
use pyrene_core::hexsystem::{parse_system, serialize_system};
use pyrene_core::matching::{
    alternating_hexagons, count_perfect_matchings, enumerate_perfect_matchings,
    max_disjoint_alternating_hexagons,
};
use pyrene_core::{Cell, EdgeSet, HexSystem, IntPoly, QuadRat};

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..50, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
}

fn quad() -> impl Strategy<Value = QuadRat> {
    (-40i64..40, 1i64..12, -40i64..40, 1i64..12)
        .prop_map(|(a, b, c, d)| QuadRat::from_ratios(a, b, c, d))
}

// Grows a connected polyhex by attaching each new cell to a random existing one.
fn polyhex(max_cells: usize) -> impl Strategy<Value = HexSystem> {
    prop::collection::vec((0usize..64, 0usize..6), 0..max_cells).prop_map(|steps| {
        let mut cells = vec![Cell::new(0, 0)];
        let mut seen: BTreeSet<Cell> = cells.iter().copied().collect();
        for (pick, dir) in steps {
            let next = cells[pick % cells.len()].neighbor(dir);
            if seen.insert(next) {
                cells.push(next);
            }
        }
        HexSystem::from_cells(cells).unwrap()
    })
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), x in -5i64..5) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn quadratic_field_laws(a in quad(), b in quad(), c in quad()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), QuadRat::one());
        }
    }

    #[test]
    fn exact_order_agrees_with_floats_when_separated(a in quad(), b in quad()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a < b, x < y);
        }
        let d = (&a - &b).abs();
        prop_assert!(d >= QuadRat::from_rational(BigRational::from_integer(BigInt::from(0))));
    }

    #[test]
    fn polyhex_graph_invariants(sys in polyhex(6)) {
        let g = sys.to_graph();
        prop_assert_eq!(g.face_count(), sys.len());
        for &(a, b) in g.edges() {
            prop_assert_ne!(g.color(a), g.color(b));
        }
        for f in g.faces().unwrap() {
            prop_assert_eq!(g.cycle_edges(&f.cycle()).unwrap().len(), 6);
        }
        let back = parse_system(serialize_system(&sys).as_bytes()).unwrap();
        prop_assert_eq!(back, sys);
    }

    #[test]
    fn polyhex_matching_invariants(sys in polyhex(5)) {
        let g = sys.to_graph();
        let all = enumerate_perfect_matchings(&g);
        prop_assert_eq!(BigUint::from(all.len()), count_perfect_matchings(&g));
        for m in &all {
            for fi in alternating_hexagons(&g, m).unwrap() {
                let face = &g.faces().unwrap()[fi];
                let edges = EdgeSet::from_indices(g.edge_count(), g.cycle_edges(&face.cycle()).unwrap());
                prop_assert!(all.contains(&m.flip(&g, &edges).unwrap()));
            }
            let f = forcing_number(&g, m).unwrap();
            prop_assert_eq!(&f, &forcing_number_from(&g, m, SearchStart::Zero).unwrap());
            prop_assert!(is_forcing_set(&g, m, f.witness_set.as_ref().unwrap()).unwrap());
            prop_assert!(max_disjoint_alternating_hexagons(&g, m).unwrap().size <= f.value);
            let af = anti_forcing_number(&g, m).unwrap();
            prop_assert!(is_anti_forcing_set(&g, m, af.witness_set.as_ref().unwrap()).unwrap());
            prop_assert_eq!(af.value == 0, all.len() == 1);
            prop_assert_eq!(f.value == 0, all.len() == 1);
        }
    }
}
