//! Shared inputs for the benchmarks.

use iqw_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().expect("fixture partition")
}

/// `(mu, nu)` pairs for structure-constant products, smallest first.
pub fn product_pairs() -> Vec<(Partition, Partition)> {
    [
        ("1", "1"),
        ("1", "3,1"),
        ("2", "2,1"),
        ("2,1", "2,1"),
        ("3", "2,1"),
    ]
    .iter()
    .map(|(a, b)| (p(a), p(b)))
    .collect()
}

/// `(lambda, mu, n)` for skew expansions.
pub fn skew_shapes() -> Vec<(Partition, Partition, usize)> {
    vec![
        (p("2"), p(""), 2),
        (p("3,1"), p("1"), 3),
        (p("3,2,1"), p("1"), 3),
        (p("4,2"), p("2"), 4),
    ]
}
