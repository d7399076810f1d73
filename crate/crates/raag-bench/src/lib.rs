//! Shared fixtures for the benchmark targets.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use raag::words::{Letter, Sign, Word};
use raag::SimplicialGraph;

/// Path on four vertices: the smallest graph with a full witness pair.
pub fn p4() -> Arc<SimplicialGraph> {
    Arc::new(
        SimplicialGraph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
            .unwrap(),
    )
}

/// A deterministic random word with exactly `len` letters.
pub fn seeded_word(graph: &Arc<SimplicialGraph>, seed: u64, len: usize) -> Word {
    let mut alphabet = Vec::new();
    for vertex in graph.vertices() {
        for sign in [Sign::Plus, Sign::Minus] {
            alphabet.push(Letter { vertex, sign });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = (0..len).map(|_| *alphabet.choose(&mut rng).unwrap()).collect();
    Word::from_letters(graph, letters).unwrap()
}
