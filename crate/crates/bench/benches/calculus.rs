use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::sync::Arc;

use obook_core::braid::{full_disk_patch, s_decomposition, stallings_open_book, BraidWord};
use obook_core::embedded::{
    alexander, chord_diagram_for_sum, embedded_sum, seifert_matrix_bennequin,
    seifert_matrix_primitive, SumOrder,
};
use obook_core::plumbgraph::{intersection_matrix, milnor_graph};
use obook_core::sample::Sampler;
use obook_core::surface::{boundary_walk, primitive_s_surface};

fn torus_braid(strands: usize, twists: usize) -> BraidWord {
    let mut letters = Vec::new();
    for _ in 0..twists {
        for g in 1..strands as i64 {
            letters.push(g);
        }
    }
    BraidWord::new(strands, letters).unwrap()
}

fn bench_braid_pipelines(c: &mut Criterion) {
    let mut group = c.benchmark_group("braid");
    for (n, k) in [(4usize, 4usize), (5, 6)] {
        let beta = torus_braid(n, k);
        group.bench_with_input(
            BenchmarkId::new("seifert_alexander", format!("T({n},{k})")),
            &beta,
            |b, beta| {
                b.iter(|| alexander(&seifert_matrix_bennequin(beta).unwrap()));
            },
        );
        group.bench_with_input(
            BenchmarkId::new("stallings_char_poly", format!("T({n},{k})")),
            &beta,
            |b, beta| {
                b.iter(|| stallings_open_book(beta).unwrap().char_poly());
            },
        );
    }
    group.finish();
}

fn bench_embedded_fold(c: &mut Criterion) {
    let beta = torus_braid(5, 5);
    let decomp = s_decomposition(&beta).unwrap();
    c.bench_function("embedded_fold/T(5,5)", |b| {
        b.iter(|| {
            let mut acc = seifert_matrix_primitive(decomp.pieces[0].0, decomp.pieces[0].1);
            let mut acc_disk = "D2".to_string();
            for (j, word) in decomp.interleavings.iter().enumerate() {
                let piece =
                    seifert_matrix_primitive(decomp.pieces[j + 1].0, decomp.pieces[j + 1].1);
                let spec = obook_core::patching::SumSpec {
                    left: full_disk_patch(acc.surface(), &acc_disk).unwrap(),
                    right: full_disk_patch(piece.surface(), "D1").unwrap(),
                    interleaving: word.clone(),
                };
                let chords = chord_diagram_for_sum(&spec, acc.basis(), piece.basis()).unwrap();
                acc = embedded_sum(&acc, &piece, &spec, &chords, SumOrder::LeftFirst).unwrap();
                acc_disk = "r.D2".to_string();
            }
            alexander(&acc)
        });
    });
}

fn bench_surfaces_and_lattices(c: &mut Criterion) {
    c.bench_function("boundary_walk/primitive(64)", |b| {
        let s = Arc::new(primitive_s_surface(64, 1));
        b.iter(|| boundary_walk(&s).len());
    });
    c.bench_function("smith_divisors/milnor", |b| {
        let m = intersection_matrix(&milnor_graph());
        b.iter(|| m.smith_divisors());
    });
    c.bench_function("sampler/homogeneous_braid", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed = seed.wrapping_add(1);
            Sampler::new(seed).homogeneous_braid()
        });
    });
}

criterion_group!(
    benches,
    bench_braid_pipelines,
    bench_embedded_fold,
    bench_surfaces_and_lattices
);
criterion_main!(benches);
