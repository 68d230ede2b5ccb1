//! Random nodal arrangements with a prescribed parallel-pair count.
//!
//! The sampling strategy: draw `N - p` distinct primitive slope classes
//! (verticals allowed), assign the first `p` classes two lines each and the
//! rest one, then draw random rational intercepts, distinct within a class.
//! The candidate is validated exactly; on a concurrency the whole draw is
//! retried.  Output is deterministic for a fixed spec: the stream is a
//! ChaCha8 generator seeded with the 64-bit seed, and every decision is a
//! function of the stream.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{rat, validate, Arrangement, Line, Rat};

/// Parameters for [`random_arrangement`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenSpec {
    /// Number of lines, at least 3.
    pub lines: usize,
    /// Number of parallel pairs; `2 * parallel_pairs <= lines`.
    pub parallel_pairs: usize,
    pub seed: u64,
    /// Bound on the numerators and denominators drawn.
    pub coeff_bound: i64,
}

impl GenSpec {
    pub fn new(lines: usize, parallel_pairs: usize, seed: u64) -> Self {
        GenSpec {
            lines,
            parallel_pairs,
            seed,
            coeff_bound: 1000,
        }
    }

    pub fn with_coeff_bound(mut self, coeff_bound: i64) -> Self {
        self.coeff_bound = coeff_bound;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.lines >= 3 && 2 * self.parallel_pairs <= self.lines && self.coeff_bound >= 1 {
            Ok(())
        } else {
            Err(GenError::InvalidSpec(*self))
        }
    }
}

/// Error from the generator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenError {
    InvalidSpec(GenSpec),
    /// Every attempt produced a concurrency or ran out of distinct draws;
    /// only plausible with tiny coefficient bounds.
    RetriesExhausted {
        attempts: usize,
    },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidSpec(s) => write!(
                f,
                "invalid generator spec: lines={}, parallel_pairs={}, coeff_bound={} \
                 (need lines >= 3, 2*parallel_pairs <= lines, coeff_bound >= 1)",
                s.lines, s.parallel_pairs, s.coeff_bound
            ),
            GenError::RetriesExhausted { attempts } => write!(
                f,
                "no valid arrangement after {} attempts; raise the coefficient bound",
                attempts
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GenError {}

const MAX_ATTEMPTS: usize = 64;
const MAX_DRAWS_PER_ITEM: usize = 10_000;

/// Draws a nodal arrangement with exactly the requested parallel pairs.
///
/// Every returned arrangement has passed exact validation: nodal, exactly
/// `parallel_pairs` parallel pairs, and no three mutually parallel lines.
pub fn random_arrangement(spec: &GenSpec) -> Result<Arrangement, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let b = spec.coeff_bound;
    let classes = spec.lines - spec.parallel_pairs;

    for _ in 0..MAX_ATTEMPTS {
        // Primitive direction keys, (0, 1) for verticals, dx > 0 otherwise.
        let mut keys: Vec<(i64, i64)> = Vec::new();
        let mut draws = 0;
        while keys.len() < classes && draws < MAX_DRAWS_PER_ITEM {
            draws += 1;
            let dx = rng.gen_range(0..=b);
            let key = if dx == 0 {
                (0, 1)
            } else {
                let dy = rng.gen_range(-b..=b);
                let g = dx.gcd(&dy);
                (dx / g, dy / g)
            };
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
        if keys.len() < classes {
            continue;
        }

        let mut lines: Vec<Line> = Vec::with_capacity(spec.lines);
        let mut complete = true;
        'classes: for (ci, &(dx, dy)) in keys.iter().enumerate() {
            let copies = if ci < spec.parallel_pairs { 2 } else { 1 };
            let mut intercepts: Vec<Rat> = Vec::new();
            let mut draws = 0;
            while intercepts.len() < copies {
                draws += 1;
                if draws > MAX_DRAWS_PER_ITEM {
                    complete = false;
                    break 'classes;
                }
                let num = rng.gen_range(-b..=b);
                let den = rng.gen_range(1..=b);
                let c = rat(num, den);
                if !intercepts.contains(&c) {
                    intercepts.push(c);
                }
            }
            for c in intercepts {
                // Direction (dx, dy) corresponds to coefficients (dy, -dx).
                let line =
                    Line::new(rat(dy, 1), rat(-dx, 1), c).expect("direction keys are nonzero");
                lines.push(line);
            }
        }
        if !complete {
            continue;
        }

        let arr = Arrangement::new(lines)
            .expect("distinct slope classes and intercepts cannot produce duplicates");
        let report = validate(&arr);
        if report.nodal
            && report.parallel_pairs == spec.parallel_pairs
            && report.at_most_one_parallel
        {
            return Ok(arr);
        }
    }
    Err(GenError::RetriesExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn respects_spec_and_is_deterministic() {
        let spec = GenSpec::new(6, 3, 7);
        let a1 = random_arrangement(&spec).unwrap();
        let a2 = random_arrangement(&spec).unwrap();
        assert_eq!(a1, a2);
        assert_eq!(a1.len(), 6);
        let report = validate(&a1);
        assert!(report.nodal);
        assert_eq!(report.parallel_pairs, 3);
        assert!(report.at_most_one_parallel);
        assert_eq!(report.parallel_classes.len(), 3);

        let other = random_arrangement(&GenSpec::new(6, 3, 8)).unwrap();
        assert_ne!(a1, other);
    }

    #[test]
    fn no_parallels_when_p_is_zero() {
        for seed in 0..5 {
            let arr = random_arrangement(&GenSpec::new(7, 0, seed)).unwrap();
            let report = validate(&arr);
            assert!(report.nodal);
            assert_eq!(report.parallel_pairs, 0);
        }
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(matches!(
            random_arrangement(&GenSpec::new(2, 0, 0)),
            Err(GenError::InvalidSpec(_))
        ));
        assert!(matches!(
            random_arrangement(&GenSpec::new(6, 4, 0)),
            Err(GenError::InvalidSpec(_))
        ));
        assert!(matches!(
            random_arrangement(&GenSpec::new(6, 0, 0).with_coeff_bound(0)),
            Err(GenError::InvalidSpec(_))
        ));
    }

    #[test]
    fn tiny_bounds_exhaust_retries() {
        // 9 distinct slope classes cannot exist with dx in {0, 1} and
        // dy in {-1, 0, 1}.
        let spec = GenSpec::new(9, 0, 0).with_coeff_bound(1);
        assert!(matches!(
            random_arrangement(&spec),
            Err(GenError::RetriesExhausted { .. })
        ));
    }
}
