//! Continuous-time symmetric war of attrition.
//!
//! Two contestants persist over a prize `V`, each paying `k` per unit of
//! time until the loser quits. The evolutionarily stable strategy is to
//! draw a persistence time from the exponential density `(k/V)·exp(-kx/V)`;
//! against that population every persistence level earns expected payoff
//! zero. [`AttritionContest::payoff_vs_ess`] checks that indifference by
//! numeric integration instead of trusting the algebra, and the Monte
//! Carlo routines back it empirically with seeded, reproducible draws.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::scalar::{lit, Scalar};
use crate::Result;

/// Prize and persistence-cost rate of a symmetric attrition contest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttritionContest<T> {
    prize: T,
    cost_rate: T,
}

/// Monte Carlo summary for one pure persistence level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelOutcome<T> {
    pub level: T,
    pub mean: T,
    pub std_error: T,
}

impl<T: Scalar> AttritionContest<T> {
    pub fn new(prize: T, cost_rate: T) -> Result<Self> {
        if !(prize.is_finite() && prize > T::zero()) {
            return Err(Error::param("prize", format!("{prize} must be a positive real")));
        }
        if !(cost_rate.is_finite() && cost_rate > T::zero()) {
            return Err(Error::param(
                "cost_rate",
                format!("{cost_rate} must be a positive real"),
            ));
        }
        Ok(AttritionContest { prize, cost_rate })
    }

    pub fn prize(&self) -> T {
        self.prize
    }

    pub fn cost_rate(&self) -> T {
        self.cost_rate
    }

    /// ESS density over persistence times: `(k/V)·exp(-k·x/V)`.
    pub fn ess_density(&self, x: T) -> Result<T> {
        if x < T::zero() {
            return Err(Error::NegativePersistence(x.to_f64().unwrap_or(f64::NAN)));
        }
        let rate = self.cost_rate / self.prize;
        Ok(rate * (-rate * x).exp())
    }

    /// Probability that an ESS opponent persists beyond `x`.
    fn survival(&self, x: T) -> T {
        (-(self.cost_rate / self.prize) * x).exp()
    }

    /// Expected payoff of persisting exactly `x` against an ESS opponent.
    ///
    /// Evaluates `∫₀ˣ (V - k·y)·f(y) dy - k·x·(1 - F(x))` with adaptive
    /// quadrature over the density; at the ESS this is zero for every `x`,
    /// so nonzero results measure numeric error rather than model signal.
    ///
    /// Panics if `x` is negative.
    pub fn payoff_vs_ess(&self, x: T) -> T {
        assert!(x >= T::zero(), "persistence time must be nonnegative");
        if x == T::zero() {
            return T::zero();
        }
        let win_part = adaptive_simpson(
            |y| {
                let f = self.ess_density(y).expect("y in [0, x] is nonnegative");
                (self.prize - self.cost_rate * y) * f
            },
            T::zero(),
            x,
            lit::<T>(1e-12) * (T::one() + self.prize),
        );
        win_part - self.cost_rate * x * self.survival(x)
    }

    /// `count` persistence-time draws by inversion: `x = -(V/k)·ln(u)` with
    /// `u` uniform in (0, 1] from a ChaCha stream seeded by `seed`. The
    /// same seed always reproduces the same samples.
    pub fn sample_persistence(&self, seed: u64, count: usize) -> Vec<T> {
        assert!(count >= 1, "count must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let scale = self.prize / self.cost_rate;
        (0..count)
            .map(|_| -scale * unit_open_closed::<T>(&mut rng).ln())
            .collect()
    }

    /// Plays each pure persistence level against `rounds` independent ESS
    /// opponents and reports the mean payoff and its standard error.
    ///
    /// The level at position `i` consumes ChaCha stream `i + 1` of `seed`,
    /// so outcomes are a pure function of `(seed, position, rounds)` and
    /// extending `rounds` keeps earlier draws as a prefix.
    pub fn simulate_tournament(
        &self,
        pure_levels: &[T],
        seed: u64,
        rounds: usize,
    ) -> Vec<LevelOutcome<T>> {
        assert!(!pure_levels.is_empty(), "need at least one level");
        assert!(rounds >= 1, "rounds must be positive");
        assert!(
            pure_levels.iter().all(|&x| x >= T::zero()),
            "persistence levels must be nonnegative"
        );
        let scale = self.prize / self.cost_rate;
        let half_prize = self.prize / lit::<T>(2.0);
        pure_levels
            .iter()
            .enumerate()
            .map(|(idx, &level)| {
                // Stream 0 is sample_persistence's; levels start at 1.
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(idx as u64 + 1);
                let mut sum = T::zero();
                let mut sum_sq = T::zero();
                for _ in 0..rounds {
                    let opponent = -scale * unit_open_closed::<T>(&mut rng).ln();
                    let payoff = if opponent < level {
                        self.prize - self.cost_rate * opponent
                    } else if opponent > level {
                        -self.cost_rate * level
                    } else {
                        half_prize - self.cost_rate * level
                    };
                    sum = sum + payoff;
                    sum_sq = sum_sq + payoff * payoff;
                }
                let n = T::from_usize(rounds).unwrap();
                let mean = sum / n;
                let std_error = if rounds > 1 {
                    let var = (sum_sq - n * mean * mean) / (n - T::one());
                    (var.max(T::zero()) / n).sqrt()
                } else {
                    T::zero()
                };
                LevelOutcome {
                    level,
                    mean,
                    std_error,
                }
            })
            .collect()
    }
}

/// Uniform draw in (0, 1]: 53 random bits shifted into the unit interval,
/// offset so zero is excluded and one is reachable.
fn unit_open_closed<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    let bits = rng.next_u64() >> 11;
    lit::<T>((bits + 1) as f64 * (1.0 / 9007199254740992.0))
}

/// Adaptive Simpson quadrature with Richardson error control.
fn adaptive_simpson<T: Scalar>(f: impl Fn(T) -> T, a: T, b: T, tol: T) -> T {
    fn simpson<T: Scalar>(f: &impl Fn(T) -> T, a: T, fa: T, b: T, fb: T) -> (T, T, T) {
        let two = lit::<T>(2.0);
        let m = (a + b) / two;
        let fm = f(m);
        let six = lit::<T>(6.0);
        let four = lit::<T>(4.0);
        ((b - a) / six * (fa + four * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<T: Scalar>(
        f: &impl Fn(T) -> T,
        a: T,
        fa: T,
        b: T,
        fb: T,
        whole: T,
        m: T,
        fm: T,
        tol: T,
        depth: u32,
    ) -> T {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        let fifteen = lit::<T>(15.0);
        if depth == 0 || delta.abs() <= fifteen * tol {
            left + right + delta / fifteen
        } else {
            let half = tol / lit::<T>(2.0);
            recurse(f, a, fa, m, fm, left, lm, flm, half, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, half, depth - 1)
        }
    }
    if a == b {
        return T::zero();
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(&f, a, fa, b, fb);
    recurse(&f, a, fa, b, fb, whole, m, fm, tol, 48)
}
