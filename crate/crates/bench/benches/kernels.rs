use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use linesym_bench::fixture;
use linesym_core::verify::{check_line_equivalence, Subject};
use linesym_core::walks::enumerate_arcs;
use linesym_core::{automorphisms, line_graph};

fn search(c: &mut Criterion) {
    let lt = line_graph(&fixture("tutte_8_cage")).unwrap().graph;
    c.bench_function("automorphisms/line(tutte_8_cage)", |b| b.iter(|| automorphisms(black_box(&lt))));
    let pet = fixture("petersen");
    c.bench_function("automorphisms/petersen", |b| b.iter(|| automorphisms(black_box(&pet))));
}

fn walks(c: &mut Criterion) {
    let tutte = fixture("tutte_8_cage");
    c.bench_function("enumerate_arcs/tutte_8_cage/5", |b| b.iter(|| enumerate_arcs(black_box(&tutte), 5).unwrap()));
}

fn checks(c: &mut Criterion) {
    let heawood = fixture("heawood");
    c.bench_function("line_equivalence/heawood/4", |b| {
        b.iter(|| check_line_equivalence(&Subject::new(black_box(&heawood)), 4))
    });
}

criterion_group!(benches, search, walks, checks);
criterion_main!(benches);
