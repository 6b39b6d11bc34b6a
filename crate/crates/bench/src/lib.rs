//! Benchmark fixtures. The benchmarks themselves live in `benches/`.

use legtwist_core::twist::{generate_front, TwistWord};
use legtwist_core::FrontDiagram;

/// Maximal front of `K_m` for `word`.
pub fn twist(m: i64, word: &str) -> FrontDiagram {
    generate_front(m, &TwistWord::parse(m, word).expect("valid word")).expect("valid front")
}

/// Front of `K_{-2n}` for the all-`Z` word.
pub fn even_front(n: usize) -> FrontDiagram {
    let m = -2 * n as i64;
    let word: Vec<&str> = (0..2 * (n - 1))
        .map(|k| if k % 2 == 0 { "Z+" } else { "Z-" })
        .collect();
    twist(m, &word.join(" "))
}
