//! Finite two-player normal-form games and their equilibrium analysis.
//!
//! Payoffs are plain floating scalars compared under [`Scalar::tolerance`];
//! weak equilibria are kept rather than dropped, and every tie-break is
//! deterministic so reports are reproducible.

use crate::error::Error;
use crate::scalar::{lit, Scalar};
use crate::Result;

/// One of the two players of a bimatrix game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Row,
    Col,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Row => Player::Col,
            Player::Col => Player::Row,
        }
    }
}

/// Whether a dominant action beats the alternatives strictly or only weakly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Strict,
    Weak,
}

/// A probability distribution over one player's actions.
///
/// Entries are nonnegative and sum to one within the scalar tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedStrategy<T>(Vec<T>);

impl<T: Scalar> MixedStrategy<T> {
    pub fn new(probabilities: Vec<T>) -> Result<Self> {
        if probabilities.is_empty() {
            return Err(Error::InvalidDistribution("empty vector".into()));
        }
        let mut sum = T::zero();
        for (i, &p) in probabilities.iter().enumerate() {
            if !p.is_finite() || p < T::zero() {
                return Err(Error::InvalidDistribution(format!(
                    "entry {i} is {p}, must be a finite nonnegative real"
                )));
            }
            sum = sum + p;
        }
        if (sum - T::one()).abs() > T::tolerance() {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {sum}, must be 1"
            )));
        }
        Ok(MixedStrategy(probabilities))
    }

    /// Degenerate distribution putting all mass on `action`.
    pub fn pure(action: usize, actions: usize) -> Self {
        let mut v = vec![T::zero(); actions];
        v[action] = T::one();
        MixedStrategy(v)
    }

    pub fn probabilities(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the action carrying all mass, if the strategy is pure
    /// within tolerance.
    pub fn as_pure(&self) -> Option<usize> {
        self.0
            .iter()
            .position(|&p| (p - T::one()).abs() <= T::tolerance())
    }
}

/// Interior mixed equilibrium of a 2×2 game, or the reason there is none.
#[derive(Debug, Clone, PartialEq)]
pub enum MixedEquilibrium<T> {
    /// Unique interior equilibrium: both players mix strictly between
    /// their two actions.
    Interior(MixedStrategy<T>, MixedStrategy<T>),
    /// At least one indifference equation is 0 = 0: a continuum of
    /// equilibria exists and no single point represents it.
    Continuum,
    /// No interior equilibrium (for example under strict dominance).
    Absent,
}

impl<T> MixedEquilibrium<T> {
    pub fn interior(&self) -> Option<(&MixedStrategy<T>, &MixedStrategy<T>)> {
        match self {
            MixedEquilibrium::Interior(r, c) => Some((r, c)),
            _ => None,
        }
    }
}

/// Verdict of the evolutionary stability check for one candidate strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EssVerdict {
    /// Candidate is evolutionarily stable.
    Ess,
    /// Candidate is a symmetric Nash equilibrium but some mutant matching
    /// its payoff is not beaten in the second-order condition.
    NashNotEss,
    /// Some mutant strictly outperforms the candidate against itself.
    NotNash,
}

/// One entry of the ESS section of an [`EquilibriumReport`].
#[derive(Debug, Clone, PartialEq)]
pub struct EssEntry<T> {
    pub strategy: MixedStrategy<T>,
    pub verdict: EssVerdict,
}

/// Everything the analysis pipeline derives from one game.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport<T> {
    /// Dominant action of the row player, if one exists.
    pub dominant_row: Option<(usize, Dominance)>,
    /// Dominant action of the column player, if one exists.
    pub dominant_col: Option<(usize, Dominance)>,
    /// All pure Nash profiles in row-major order, weak ones included.
    pub pure_nash: Vec<(usize, usize)>,
    /// Mixed-equilibrium finding; populated only for 2×2 games.
    pub mixed_2x2: Option<MixedEquilibrium<T>>,
    /// ESS verdicts for pure candidates (and the interior mix when one
    /// exists); populated only for symmetric games.
    pub ess: Vec<EssEntry<T>>,
}

/// Result of the exhaustive equilibrium search used as a test oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceOutcome<T> {
    /// Pure profiles where no player has any positive unilateral gain.
    pub pure: Vec<(usize, usize)>,
    /// Grid points `(row prob of action 0, col prob of action 0)` whose
    /// maximum unilateral gain is below 1e-6. 2×2 games only.
    pub mixed_grid: Vec<(T, T)>,
    /// The strictly interior grid point minimizing the players' total
    /// unilateral gain, with that total. Reported even when no point
    /// clears the 1e-6 threshold, since an interior equilibrium generally
    /// falls between grid points. The sum is the selection criterion
    /// because each player's gain depends only on the other's offset from
    /// indifference, so its argmin sits at the grid point nearest the
    /// equilibrium instead of drifting along the shallow valley of the
    /// max-gain landscape. Boundary points are excluded: they duplicate
    /// the pure enumeration. 2×2 games only.
    pub best_grid: Option<(T, T, T)>,
}

/// A two-player game in normal form: labeled actions and a matrix of
/// payoff pairs `(row player, column player)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFormGame<T> {
    row_actions: Vec<String>,
    col_actions: Vec<String>,
    payoffs: Vec<Vec<(T, T)>>,
}

impl<T: Scalar> NormalFormGame<T> {
    /// Builds a game, validating shape, finiteness, and label uniqueness.
    pub fn new(
        row_actions: Vec<String>,
        col_actions: Vec<String>,
        payoffs: Vec<Vec<(T, T)>>,
    ) -> Result<Self> {
        if row_actions.is_empty() || col_actions.is_empty() {
            return Err(Error::InvalidGame("each player needs at least one action".into()));
        }
        for (labels, side) in [(&row_actions, "row"), (&col_actions, "column")] {
            for (i, a) in labels.iter().enumerate() {
                if labels[..i].contains(a) {
                    return Err(Error::InvalidGame(format!(
                        "duplicate {side} action label {a:?}"
                    )));
                }
            }
        }
        if payoffs.len() != row_actions.len() {
            return Err(Error::InvalidGame(format!(
                "payoff matrix has {} rows for {} row actions",
                payoffs.len(),
                row_actions.len()
            )));
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != col_actions.len() {
                return Err(Error::InvalidGame(format!(
                    "payoff row {i} has {} entries for {} column actions",
                    row.len(),
                    col_actions.len()
                )));
            }
            for (j, &(u1, u2)) in row.iter().enumerate() {
                if !u1.is_finite() || !u2.is_finite() {
                    return Err(Error::InvalidGame(format!(
                        "payoff at ({i}, {j}) is ({u1}, {u2}); payoffs must be finite"
                    )));
                }
            }
        }
        Ok(NormalFormGame {
            row_actions,
            col_actions,
            payoffs,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_actions.len()
    }

    pub fn cols(&self) -> usize {
        self.col_actions.len()
    }

    pub fn row_actions(&self) -> &[String] {
        &self.row_actions
    }

    pub fn col_actions(&self) -> &[String] {
        &self.col_actions
    }

    /// Payoff pair `(row, col)` at a pure profile.
    pub fn payoff(&self, row: usize, col: usize) -> (T, T) {
        self.payoffs[row][col]
    }

    fn utility(&self, player: Player, row: usize, col: usize) -> T {
        match player {
            Player::Row => self.payoffs[row][col].0,
            Player::Col => self.payoffs[row][col].1,
        }
    }

    fn actions(&self, player: Player) -> usize {
        match player {
            Player::Row => self.rows(),
            Player::Col => self.cols(),
        }
    }

    /// Expected payoff of each of `player`'s actions against an opponent
    /// mixed strategy.
    pub fn expected_payoffs(&self, player: Player, opponent_mix: &MixedStrategy<T>) -> Result<Vec<T>> {
        let opp_actions = self.actions(player.opponent());
        if opponent_mix.len() != opp_actions {
            return Err(Error::DimensionMismatch {
                expected: opp_actions,
                got: opponent_mix.len(),
            });
        }
        let own = self.actions(player);
        let mut out = Vec::with_capacity(own);
        for a in 0..own {
            let mut e = T::zero();
            for (b, &p) in opponent_mix.probabilities().iter().enumerate() {
                let u = match player {
                    Player::Row => self.utility(Player::Row, a, b),
                    Player::Col => self.utility(Player::Col, b, a),
                };
                e = e + p * u;
            }
            out.push(e);
        }
        Ok(out)
    }

    /// All actions of `player` whose expected payoff against
    /// `opponent_mix` is within tolerance of the best; never empty.
    pub fn best_response(&self, player: Player, opponent_mix: &MixedStrategy<T>) -> Result<Vec<usize>> {
        let expected = self.expected_payoffs(player, opponent_mix)?;
        let best = expected
            .iter()
            .copied()
            .fold(T::neg_infinity(), T::max);
        Ok(expected
            .iter()
            .enumerate()
            .filter(|(_, &e)| e >= best - T::tolerance())
            .map(|(a, _)| a)
            .collect())
    }

    /// The action of `player` that dominates every alternative, if any.
    ///
    /// `Strict` means every pairwise comparison exceeds tolerance; ties
    /// among weak dominators resolve to the lowest index.
    pub fn dominant_action(&self, player: Player) -> Option<(usize, Dominance)> {
        let own = self.actions(player);
        let opp = self.actions(player.opponent());
        let u = |a: usize, b: usize| match player {
            Player::Row => self.utility(Player::Row, a, b),
            Player::Col => self.utility(Player::Col, b, a),
        };
        let weakly_dominates_all = |a: usize| {
            (0..own).all(|other| {
                other == a || (0..opp).all(|b| u(a, b) >= u(other, b) - T::tolerance())
            })
        };
        let candidate = (0..own).find(|&a| weakly_dominates_all(a))?;
        let strict = (0..own).all(|other| {
            other == candidate || (0..opp).all(|b| u(candidate, b) > u(other, b) + T::tolerance())
        });
        Some((
            candidate,
            if strict { Dominance::Strict } else { Dominance::Weak },
        ))
    }

    /// All pure Nash profiles (mutual best responses under tolerance, so
    /// weak equilibria are included), in row-major order.
    pub fn pure_nash(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let row_best = (0..self.rows())
                    .map(|a| self.utility(Player::Row, a, j))
                    .fold(T::neg_infinity(), T::max);
                let col_best = (0..self.cols())
                    .map(|b| self.utility(Player::Col, i, b))
                    .fold(T::neg_infinity(), T::max);
                if self.utility(Player::Row, i, j) >= row_best - T::tolerance()
                    && self.utility(Player::Col, i, j) >= col_best - T::tolerance()
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Solves the two indifference equations of a 2×2 game.
    ///
    /// Returns the interior equilibrium when both mixing probabilities lie
    /// strictly inside (0, 1); a degenerate equation (0 = 0) is reported
    /// as [`MixedEquilibrium::Continuum`] rather than an arbitrary point.
    pub fn mixed_nash_2x2(&self) -> Result<MixedEquilibrium<T>> {
        if self.rows() != 2 || self.cols() != 2 {
            return Err(Error::NotTwoByTwo {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let eps = T::tolerance();
        let a = |i: usize, j: usize| self.payoffs[i][j].0;
        let b = |i: usize, j: usize| self.payoffs[i][j].1;

        // Column mix q on its first action that equalizes the row player's
        // two actions: q * denom_row = rhs_row.
        let denom_row = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
        let rhs_row = a(1, 1) - a(0, 1);
        // Row mix p on its first action that equalizes the column player.
        let denom_col = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
        let rhs_col = b(1, 1) - b(1, 0);

        if (denom_row.abs() <= eps && rhs_row.abs() <= eps)
            || (denom_col.abs() <= eps && rhs_col.abs() <= eps)
        {
            return Ok(MixedEquilibrium::Continuum);
        }
        if denom_row.abs() <= eps || denom_col.abs() <= eps {
            return Ok(MixedEquilibrium::Absent);
        }
        let q = rhs_row / denom_row;
        let p = rhs_col / denom_col;
        let interior = |x: T| x > eps && x < T::one() - eps;
        if interior(p) && interior(q) {
            let row = MixedStrategy::new(vec![p, T::one() - p])?;
            let col = MixedStrategy::new(vec![q, T::one() - q])?;
            Ok(MixedEquilibrium::Interior(row, col))
        } else {
            Ok(MixedEquilibrium::Absent)
        }
    }

    /// Whether the column payoffs are the transpose of the row payoffs.
    pub fn is_symmetric(&self) -> bool {
        if self.rows() != self.cols() {
            return false;
        }
        let eps = T::tolerance();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                if (self.payoffs[i][j].1 - self.payoffs[j][i].0).abs() > eps {
                    return false;
                }
            }
        }
        true
    }

    /// Evolutionary stability of `candidate` in a symmetric game.
    ///
    /// Tests the two stability conditions against every pure mutant:
    /// E(s,s) ≥ E(m,s) for all mutants m, and E(s,m) > E(m,m) whenever
    /// E(m,s) ties E(s,s). Pure mutants suffice for this definition in
    /// finite games; mixed mutants are not enumerated.
    pub fn ess_check(&self, candidate: &MixedStrategy<T>) -> Result<EssVerdict> {
        if !self.is_symmetric() {
            return Err(Error::AsymmetricGame);
        }
        let n = self.rows();
        if candidate.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: candidate.len(),
            });
        }
        let eps = T::tolerance();
        // Fitness of a pure action against a mixed opponent, and of the
        // candidate against either; all through the row-player matrix.
        let e_pure_vs_mix = |a: usize, mix: &MixedStrategy<T>| -> T {
            mix.probabilities()
                .iter()
                .enumerate()
                .fold(T::zero(), |acc, (b, &p)| acc + p * self.payoffs[a][b].0)
        };
        let e_mix_vs_mix = |x: &MixedStrategy<T>, y: &MixedStrategy<T>| -> T {
            x.probabilities()
                .iter()
                .enumerate()
                .fold(T::zero(), |acc, (a, &p)| acc + p * e_pure_vs_mix(a, y))
        };

        let e_ss = e_mix_vs_mix(candidate, candidate);
        for m in 0..n {
            if e_pure_vs_mix(m, candidate) > e_ss + eps {
                return Ok(EssVerdict::NotNash);
            }
        }
        let own_pure = candidate.as_pure();
        for m in 0..n {
            if own_pure == Some(m) {
                continue; // the candidate itself is not a mutant
            }
            let e_ms = e_pure_vs_mix(m, candidate);
            if (e_ms - e_ss).abs() <= eps {
                let mutant = MixedStrategy::pure(m, n);
                let e_sm = e_mix_vs_mix(candidate, &mutant);
                let e_mm = self.payoffs[m][m].0;
                if e_sm <= e_mm + eps {
                    return Ok(EssVerdict::NashNotEss);
                }
            }
        }
        Ok(EssVerdict::Ess)
    }

    /// Exhaustive equilibrium search: every pure profile is tested exactly,
    /// and for 2×2 games all `(grid + 1)²` mixing-probability pairs are
    /// scanned. An independent cross-check for [`Self::pure_nash`] and
    /// [`Self::mixed_nash_2x2`]; not meant for production analysis.
    pub fn brute_force_nash(&self, grid: usize) -> BruteForceOutcome<T> {
        assert!(grid >= 1, "grid must be positive");
        let mut pure = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let row_best = (0..self.rows())
                    .map(|a| self.utility(Player::Row, a, j))
                    .fold(T::neg_infinity(), T::max);
                let col_best = (0..self.cols())
                    .map(|b| self.utility(Player::Col, i, b))
                    .fold(T::neg_infinity(), T::max);
                let gain_row = row_best - self.utility(Player::Row, i, j);
                let gain_col = col_best - self.utility(Player::Col, i, j);
                if gain_row <= T::zero() && gain_col <= T::zero() {
                    pure.push((i, j));
                }
            }
        }

        let mut mixed_grid = Vec::new();
        let mut best_grid = None;
        if self.rows() == 2 && self.cols() == 2 {
            let (a00, b00) = self.payoffs[0][0];
            let (a01, b01) = self.payoffs[0][1];
            let (a10, b10) = self.payoffs[1][0];
            let (a11, b11) = self.payoffs[1][1];
            let threshold = lit::<T>(1e-6);
            let step = T::one() / T::from_usize(grid).expect("grid fits scalar");
            let mut best_gain = T::infinity();
            for gi in 0..=grid {
                let p = T::from_usize(gi).unwrap() * step;
                for gj in 0..=grid {
                    let q = T::from_usize(gj).unwrap() * step;
                    let e0 = q * a00 + (T::one() - q) * a01;
                    let e1 = q * a10 + (T::one() - q) * a11;
                    let row_gain = e0.max(e1) - (p * e0 + (T::one() - p) * e1);
                    let f0 = p * b00 + (T::one() - p) * b10;
                    let f1 = p * b01 + (T::one() - p) * b11;
                    let col_gain = f0.max(f1) - (q * f0 + (T::one() - q) * f1);
                    if row_gain.max(col_gain) < threshold {
                        mixed_grid.push((p, q));
                    }
                    let total_gain = row_gain + col_gain;
                    let interior = gi > 0 && gi < grid && gj > 0 && gj < grid;
                    if interior && total_gain < best_gain {
                        best_gain = total_gain;
                        best_grid = Some((p, q, total_gain));
                    }
                }
            }
        }
        BruteForceOutcome {
            pure,
            mixed_grid,
            best_grid,
        }
    }

    /// Runs the full analysis pipeline over this game.
    pub fn report(&self) -> EquilibriumReport<T> {
        let mixed_2x2 = if self.rows() == 2 && self.cols() == 2 {
            Some(self.mixed_nash_2x2().expect("game is 2x2"))
        } else {
            None
        };
        let mut ess = Vec::new();
        if self.is_symmetric() {
            for a in 0..self.rows() {
                let strategy = MixedStrategy::pure(a, self.rows());
                let verdict = self.ess_check(&strategy).expect("game is symmetric");
                ess.push(EssEntry { strategy, verdict });
            }
            if let Some(MixedEquilibrium::Interior(row_mix, _)) = &mixed_2x2 {
                let verdict = self.ess_check(row_mix).expect("game is symmetric");
                ess.push(EssEntry {
                    strategy: row_mix.clone(),
                    verdict,
                });
            }
        }
        EquilibriumReport {
            dominant_row: self.dominant_action(Player::Row),
            dominant_col: self.dominant_action(Player::Col),
            pure_nash: self.pure_nash(),
            mixed_2x2,
            ess,
        }
    }
}
