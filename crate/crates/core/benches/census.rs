use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ybmagma::census::{enumerate_structures, CensusQuery, Constraint, Parallelism};
use ybmagma::laws::{MagmaLaw, RMapLaw};

fn queries() -> Vec<(&'static str, CensusQuery)> {
    let magma = |n, laws: &[MagmaLaw]| {
        CensusQuery::new(n, laws.iter().map(|&l| Constraint::Magma(l)).collect()).unwrap()
    };
    vec![
        (
            "involutory_n6",
            magma(6, &[MagmaLaw::RightPlonka, MagmaLaw::RightInvolutory]),
        ),
        ("right_plonka_n5", magma(5, &[MagmaLaw::RightPlonka])),
        ("associative_n4", magma(4, &[MagmaLaw::Associative])),
        (
            "bls_n3",
            CensusQuery::new(3, vec![Constraint::RMap(RMapLaw::Bls)]).unwrap(),
        ),
    ]
}

fn sequential_vs_workers(c: &mut Criterion) {
    let workers = std::thread::available_parallelism().map_or(2, |n| n.get().max(2));
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for (name, q) in queries() {
        for (mode, p) in [
            ("sequential", Parallelism::Sequential),
            ("workers", Parallelism::Workers(workers)),
        ] {
            let q = q.clone().with_parallelism(p);
            group.bench_with_input(BenchmarkId::new(mode, name), &q, |b, q| {
                b.iter(|| enumerate_structures(black_box(q)).unwrap().row.class_count)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sequential_vs_workers);
criterion_main!(benches);
