use proptest::prelude::*;

use girthforge::graph::{build, export, parse_edge_list, ExportFormat};
use girthforge::lines4::{all_genlines, has_line_c4, intersect, Meet};
use girthforge::moment::{line_through, points_on, Point};
use girthforge::oracle::{naive_cycle_count, naive_has_line_c4, random_bipartite};
use girthforge::verify::count_cycles;
use girthforge::{Fe, FieldSpec};

const FIELDS: [(u32, u32); 8] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)];

fn field() -> impl Strategy<Value = FieldSpec> {
    (0..FIELDS.len()).prop_map(|i| FieldSpec::new(FIELDS[i].0, FIELDS[i].1).unwrap())
}

fn field_and_elems(n: usize) -> impl Strategy<Value = (FieldSpec, Vec<Fe>)> {
    field().prop_flat_map(move |f| {
        let q = f.order();
        (Just(f), proptest::collection::vec((0..q).prop_map(Fe), n))
    })
}

proptest! {
    #[test]
    fn field_laws((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            prop_assert_eq!(f.div(f.mul(a, b), a).unwrap(), b);
        }
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn line_through_is_canonical(
        (f, v) in field_and_elems(6),
        k in 2usize..=6,
    ) {
        let x = Point::new(&v[..k]);
        let z = v[5];
        let line = line_through(&f, &x, z);
        prop_assert!(line.base.coords()[0].is_zero());
        let pts = points_on(&f, &line);
        prop_assert_eq!(pts.len(), f.order() as usize);
        prop_assert!(pts.contains(&x));
        for p in &pts {
            prop_assert_eq!(&line_through(&f, p, z), &line);
        }
    }

    #[test]
    fn export_round_trip(i in 0usize..4, k in 2usize..=3) {
        let f = FieldSpec::new(FIELDS[i].0, FIELDS[i].1).unwrap();
        let g = build(&f, k).unwrap();
        let mut buf = Vec::new();
        export(&g, ExportFormat::V1, &mut buf).unwrap();
        let back = parse_edge_list(buf.as_slice()).unwrap();
        prop_assert_eq!(back.meta(), g.meta());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn cycle_counts_match_naive(seed in any::<u64>(), n_p in 2usize..=10, n_l in 2usize..=10, len in 2usize..=5) {
        let g = random_bipartite(seed, n_p, n_l, 0.4);
        let len = 2 * len;
        prop_assert_eq!(count_cycles(&g, len).unwrap().count, naive_cycle_count(&g, len).unwrap());
    }

    #[test]
    fn intersect_matches_point_sets(i in 0usize..1080, j in 0usize..1080) {
        let f = FieldSpec::new(3, 1).unwrap();
        let lines = all_genlines(&f).unwrap();
        let (a, b) = (&lines[i % lines.len()], &lines[j % lines.len()]);
        let pa = a.points(&f);
        let common: Vec<Point> = b.points(&f).into_iter().filter(|p| pa.contains(p)).collect();
        match intersect(&f, a, b) {
            Meet::Same => prop_assert_eq!(common.len(), 3),
            Meet::Disjoint => prop_assert!(common.is_empty()),
            Meet::At(p) => prop_assert_eq!(common, vec![p]),
        }
    }

    #[test]
    fn line_c4_detector_matches_naive_over_f3(idx in proptest::collection::vec(0usize..1080, 1..14)) {
        let f = FieldSpec::new(3, 1).unwrap();
        let lines = all_genlines(&f).unwrap();
        let fam: Vec<_> = idx.iter().map(|&i| lines[i % lines.len()].clone()).collect();
        let fast = has_line_c4(&f, &fam).unwrap();
        prop_assert_eq!(fast.is_some(), naive_has_line_c4(&f, &fam));
        if let Some(w) = fast {
            prop_assert!(w.is_valid(&f));
        }
    }
}
