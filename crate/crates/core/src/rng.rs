//! A small, portable, seedable pseudo-random generator for simulations.
//!
//! The generator is SplitMix64: 64 bits of state advanced by a Weyl constant,
//! with a 3-round xor-shift/multiply output mix. It is deterministic across
//! platforms, so simulation traces are reproducible from the recorded seed.
//! It is not cryptographically secure and is only used to drive experiments.

/// SplitMix64 generator with 64 bits of state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Next 64 uniformly distributed bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` by rejection sampling (no modulo bias).
    ///
    /// Panics if `bound` is zero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        if bound.is_power_of_two() {
            return self.next_u64() & (bound - 1);
        }
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// A `len`-subset of `0..n` via partial Fisher-Yates, sorted ascending.
    ///
    /// Panics if `len > n`.
    pub fn sample_indices(&mut self, n: usize, len: usize) -> Vec<usize> {
        assert!(len <= n, "cannot sample {len} of {n}");
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..len {
            let j = i + self.next_below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut chosen: Vec<usize> = pool[..len].to_vec();
        chosen.sort_unstable();
        chosen
    }
}

/// Stateless mix of a base seed with stream labels, used to derive
/// independent per-task seeds that do not depend on scheduling order.
pub fn derive_seed(base: u64, stream: u64, index: u64) -> u64 {
    let mut g = SplitMix64::new(base ^ stream.wrapping_mul(0xA24B_AED4_963E_E407));
    g.next_u64().wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_sequence_is_stable() {
        // First outputs for seed 1234567, pinned so that recorded simulation
        // seeds stay meaningful across builds.
        let mut g = SplitMix64::new(1234567);
        let got: Vec<u64> = (0..4).map(|_| g.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                6457827717110365317,
                3203168211198807973,
                9817491932198370423,
                4593380528125082431,
            ]
        );
    }

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn bounded_draws_are_in_range_and_cover() {
        let mut g = SplitMix64::new(7);
        let mut seen = [false; 5];
        for _ in 0..500 {
            let v = g.next_below(5);
            assert!(v < 5);
            seen[v as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn samples_are_sorted_distinct_subsets() {
        let mut g = SplitMix64::new(99);
        for _ in 0..200 {
            let s = g.sample_indices(12, 5);
            assert_eq!(s.len(), 5);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&x| x < 12));
        }
    }

    #[test]
    fn derived_seeds_differ_across_streams() {
        let a = derive_seed(1, 0, 0);
        let b = derive_seed(1, 1, 0);
        let c = derive_seed(1, 0, 1);
        assert_ne!(a, b);
        assert_ne!(a, c);
    }
}
