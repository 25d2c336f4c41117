//! Random generators shared by the integration targets.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ybmagma::families::{build_odometer, OdometerTriple};
use ybmagma::plonka::{BiPlonkaPartition, PlonkaPartition};
use ybmagma::{BiMagma, CayleyTable, FiniteFunction, Permutation, SetPartition};

pub fn random_map(rng: &mut ChaCha8Rng, s: usize) -> FiniteFunction {
    FiniteFunction::new((0..s).map(|_| rng.gen_range(0..s)).collect()).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, s: usize) -> FiniteFunction {
    let mut v: Vec<usize> = (0..s).collect();
    v.shuffle(rng);
    FiniteFunction::new(v).unwrap()
}

pub fn random_involution(rng: &mut ChaCha8Rng, s: usize) -> FiniteFunction {
    let mut order: Vec<usize> = (0..s).collect();
    order.shuffle(rng);
    let mut v: Vec<usize> = (0..s).collect();
    for pair in order.chunks(2) {
        if pair.len() == 2 && rng.gen_bool(0.7) {
            v[pair[0]] = pair[1];
            v[pair[1]] = pair[0];
        }
    }
    FiniteFunction::new(v).unwrap()
}

pub fn inverse(f: &FiniteFunction) -> FiniteFunction {
    Permutation::from_function(f.clone())
        .unwrap()
        .inverse()
        .into_function()
}

#[derive(Clone, Copy)]
pub enum BlockKind {
    Powers,
    Odometer,
    Involutions,
    Unitary,
}

/// Pairwise commuting maps on `s` points: words in one or two commuting generators.
pub fn commuting_maps(
    rng: &mut ChaCha8Rng,
    s: usize,
    kind: BlockKind,
    count: usize,
) -> Vec<FiniteFunction> {
    let (a, b) = match kind {
        BlockKind::Powers => (random_map(rng, s), FiniteFunction::identity(s)),
        BlockKind::Involutions => (random_involution(rng, s), FiniteFunction::identity(s)),
        BlockKind::Unitary => (random_permutation(rng, s), FiniteFunction::identity(s)),
        BlockKind::Odometer => {
            let triples = OdometerTriple::all_of_size(s);
            let (f, g) = build_odometer(*triples.choose(rng).unwrap());
            let sigma = Permutation::from_function(random_permutation(rng, s)).unwrap();
            (f.conjugate_by(&sigma), g.conjugate_by(&sigma))
        }
    };
    let fixed: Option<usize> = (0..s).find(|&x| a.apply(x) == x && b.apply(x) == x);
    (0..count)
        .map(|_| match fixed {
            Some(c) if matches!(kind, BlockKind::Powers) && rng.gen_bool(0.15) => {
                FiniteFunction::constant(s, c)
            }
            _ => a
                .power(rng.gen_range(0..=s + 1))
                .compose(&b.power(rng.gen_range(0..=s))),
        })
        .collect()
}

/// A random partition of `0..n`, a single block a quarter of the time.
pub fn random_blocks(rng: &mut ChaCha8Rng, n: usize) -> SetPartition {
    let k = if rng.gen_bool(0.25) {
        1
    } else {
        rng.gen_range(1..=n)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut labels = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        labels[x] = if i < k { i } else { rng.gen_range(0..k) };
    }
    SetPartition::from_labels(&labels)
}

/// Random valid bi-magma partition data on `n` points.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> BiPlonkaPartition {
    let blocks = random_blocks(rng, n);
    let global = match rng.gen_range(0..8) {
        0 | 1 => Some(BlockKind::Unitary),
        2 => Some(BlockKind::Involutions),
        _ => None,
    };
    let k = blocks.len();
    let mut f = Vec::with_capacity(k);
    let mut g = Vec::with_capacity(k);
    for block in blocks.blocks() {
        let s = block.len();
        let kind = global.unwrap_or_else(|| {
            *[
                BlockKind::Powers,
                BlockKind::Odometer,
                BlockKind::Involutions,
            ]
            .choose(rng)
            .unwrap()
        });
        let maps = commuting_maps(rng, s, kind, 2 * k);
        let (fr, gr) = maps.split_at(k);
        f.push(fr.to_vec());
        g.push(match kind {
            BlockKind::Unitary => fr.iter().map(inverse).collect(),
            _ => gr.to_vec(),
        });
    }
    BiPlonkaPartition { blocks, f, g }
}

/// Random valid magma partition data on `n` points.
pub fn random_plonka_partition(rng: &mut ChaCha8Rng, n: usize) -> PlonkaPartition {
    let blocks = random_blocks(rng, n);
    let k = blocks.len();
    let kinds = [
        BlockKind::Powers,
        BlockKind::Odometer,
        BlockKind::Involutions,
        BlockKind::Unitary,
    ];
    let maps = blocks
        .blocks()
        .iter()
        .map(|block| {
            let kind = *kinds.choose(rng).unwrap();
            commuting_maps(rng, block.len(), kind, k)
        })
        .collect();
    PlonkaPartition { blocks, maps }
}

pub fn random_right_plonka(rng: &mut ChaCha8Rng, n: usize) -> CayleyTable {
    random_plonka_partition(rng, n).rebuild().unwrap()
}

pub fn random_plonka_bimagma(rng: &mut ChaCha8Rng, n: usize) -> BiMagma {
    random_partition(rng, n).rebuild().unwrap()
}
