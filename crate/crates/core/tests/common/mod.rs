#![allow(dead_code)]

use iflag::{IGraph, Label, Scalar, Vertex};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn w(ls: &[Label]) -> Label {
    Label::Word(ls.to_vec())
}

/// Uniformly random level-`level` graph on `0..n`.
pub fn random_graph(rng: &mut impl Rng, level: usize, n: u32) -> IGraph {
    let cells = (0..n)
        .combinations(level)
        .filter(|_| rng.gen_bool(0.5))
        .collect_vec();
    IGraph::new(level, 0..n, cells).unwrap()
}

/// Random relabeling onto a random set of distinct labels below 100.
pub fn random_relabel(rng: &mut impl Rng, g: &IGraph) -> IGraph {
    let mut pool: Vec<u32> = (0..100).collect();
    pool.shuffle(rng);
    let vs = g.vertices().to_vec();
    g.relabel(|v| Vertex(pool[vs.binary_search(&v).unwrap()]))
        .unwrap()
}

/// Every relabeling of `g` by a permutation of its own vertex set.
pub fn all_relabelings(g: &IGraph) -> Vec<IGraph> {
    let vs = g.vertices().to_vec();
    vs.iter()
        .permutations(vs.len())
        .map(|image| {
            g.relabel(|v| *image[vs.binary_search(&v).unwrap()])
                .unwrap()
        })
        .collect()
}
