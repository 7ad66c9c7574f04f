use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fepkit::classify::Class;
use fepkit::enumeration::enumerate_chains;
use fepkit::fep::{build_d, verify_lemmas, Mode, PartialSubalgebra};
use fepkit::logic::{decide_bounded, parse};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_chains");
    for size in [4, 5, 6] {
        group.bench_with_input(BenchmarkId::new("hpsul", size), &size, |b, &n| {
            b.iter(|| enumerate_chains(black_box(n), Class::HpsUL).len())
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let family = enumerate_chains(5, Class::ULOmega);
    let largest: Vec<_> = family.of_size(5).take(8).cloned().collect();
    c.bench_function("build_d/ul-5-full", |b| {
        b.iter(|| {
            for a in &largest {
                black_box(build_d(&PartialSubalgebra::full(a), Mode::Commutative).unwrap().len());
            }
        })
    });
    c.bench_function("verify_lemmas/ul-5-full", |b| {
        let built: Vec<_> = largest.iter().map(PartialSubalgebra::full).collect();
        b.iter(|| {
            for pb in &built {
                let d = build_d(pb, Mode::Commutative).unwrap();
                black_box(verify_lemmas(&d).all_passed());
            }
        })
    });
}

fn decision(c: &mut Criterion) {
    let phi = parse("((x1 \\ x2) | (x2 \\ x1)) & ((x1 * x2) \\ (x2 * x1))").unwrap();
    c.bench_function("decide_bounded/hpsul-star-omega-5", |b| {
        b.iter(|| decide_bounded(&[], black_box(&phi), Class::HpsULStarOmega, 5))
    });
}

criterion_group!(benches, enumeration, construction, decision);
criterion_main!(benches);
