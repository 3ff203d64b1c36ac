use proptest::test_runner::{Config, RngSeed};

/// Seed for every property test; override with `TANGENT_SEED`.
pub const DEFAULT_SEED: u64 = 0x7a6e_6765;

pub fn config(cases: u32) -> Config {
    let seed = std::env::var("TANGENT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}
