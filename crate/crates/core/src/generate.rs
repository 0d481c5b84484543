//! Seeded random game generation in three classes: low out-degree games,
//! fully random games, and low-degree steady games with bounded in-degrees.
//!
//! All classes are self-loop free and deterministic in the seed. Priorities
//! are drawn uniformly from `[0, n)`, owners uniformly.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{ParityGame, Player, Priority, Vertex};

/// Generator class; degree bound defaults follow the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameClass {
    /// Out-degree 1..=2.
    LowDeg,
    /// Out-degree 1..=n-1 (distinct targets).
    FullRandom,
    /// Out-degree 1..=4 with per-vertex in-degree targets in 1..=4.
    Steady,
}

impl GameClass {
    pub fn name(self) -> &'static str {
        match self {
            GameClass::LowDeg => "lowdeg",
            GameClass::FullRandom => "fullrandom",
            GameClass::Steady => "steady",
        }
    }

    pub const ALL: [GameClass; 3] = [GameClass::LowDeg, GameClass::FullRandom, GameClass::Steady];

    fn default_degrees(self, n: usize) -> (usize, usize) {
        match self {
            GameClass::LowDeg => (1, 2),
            GameClass::FullRandom => (1, n.saturating_sub(1)),
            GameClass::Steady => (1, 4),
        }
    }
}

impl std::str::FromStr for GameClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lowdeg" => Ok(GameClass::LowDeg),
            "fullrandom" => Ok(GameClass::FullRandom),
            "steady" => Ok(GameClass::Steady),
            other => Err(format!("unknown game class '{other}'")),
        }
    }
}

/// Parameters of one generated game.
#[derive(Clone, Copy, Debug)]
pub struct GenSpec {
    pub class: GameClass,
    pub n: usize,
    /// Out-degree bounds; `None` uses the class defaults.
    pub degrees: Option<(usize, usize)>,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(class: GameClass, n: usize, seed: u64) -> GenSpec {
        GenSpec {
            class,
            n,
            degrees: None,
            seed,
        }
    }
}

#[derive(Debug, Error)]
pub enum GenError {
    #[error("need at least 2 vertices for self-loop-free games, got {0}")]
    TooSmall(usize),
    #[error("infeasible degree bounds ({lo}, {hi}) for {n} vertices")]
    BadDegrees { lo: usize, hi: usize, n: usize },
}

/// Generates a seeded random game per the spec's class. Identical specs
/// produce identical games.
pub fn gen_random_game(spec: &GenSpec) -> Result<ParityGame, GenError> {
    let n = spec.n;
    if n < 2 {
        return Err(GenError::TooSmall(n));
    }
    let (lo, hi) = spec.degrees.unwrap_or_else(|| spec.class.default_degrees(n));
    // Self-loop-free distinct targets cap the degree at n-1.
    if lo < 1 || lo > hi || lo > n - 1 {
        return Err(GenError::BadDegrees { lo, hi, n });
    }
    let hi = hi.min(n - 1);

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let priority: Vec<Priority> = (0..n).map(|_| rng.random_range(0..n) as Priority).collect();
    let owner: Vec<Player> = (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                Player::Even
            } else {
                Player::Odd
            }
        })
        .collect();

    let successors = match spec.class {
        GameClass::LowDeg | GameClass::FullRandom => {
            random_targets(&mut rng, n, lo, hi)
        }
        GameClass::Steady => steady_targets(&mut rng, n, lo, hi),
    };

    Ok(
        ParityGame::from_parts(priority, owner, successors, vec![None; n])
            .expect("generated games are total"),
    )
}

/// Distinct non-self targets with out-degree uniform in `[lo, hi]`.
fn random_targets(rng: &mut ChaCha8Rng, n: usize, lo: usize, hi: usize) -> Vec<Vec<Vertex>> {
    (0..n)
        .map(|v| {
            let deg = rng.random_range(lo..=hi);
            sample_distinct(rng, n, v, deg)
        })
        .collect()
}

/// Steady games additionally draw a per-vertex in-degree target in
/// `[lo, hi]` and respect the remaining in-capacity when picking edge
/// targets; when no capacity is left anywhere an arbitrary non-self target
/// keeps the game total.
fn steady_targets(rng: &mut ChaCha8Rng, n: usize, lo: usize, hi: usize) -> Vec<Vec<Vertex>> {
    let out_deg: Vec<usize> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
    let mut capacity: Vec<usize> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
    let mut open: Vec<Vertex> = (0..n).collect();

    let mut successors: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        for _ in 0..out_deg[v] {
            // Pick among vertices with spare in-capacity, excluding v and
            // duplicates; a few tries, then fall back to any fresh target.
            let mut picked = None;
            for _ in 0..8 {
                if open.is_empty() {
                    break;
                }
                let i = rng.random_range(0..open.len());
                let w = open[i];
                if capacity[w] == 0 {
                    open.swap_remove(i);
                    continue;
                }
                if w == v || successors[v].contains(&w) {
                    continue;
                }
                picked = Some(w);
                break;
            }
            let w = match picked {
                Some(w) => w,
                None => match (0..n).filter(|&w| w != v && !successors[v].contains(&w)).choose(rng)
                {
                    Some(w) => w,
                    None => continue,
                },
            };
            successors[v].push(w);
            capacity[w] = capacity[w].saturating_sub(1);
        }
        if successors[v].is_empty() {
            // Degenerate fallback keeps totality.
            successors[v].push(if v == 0 { 1 } else { 0 });
        }
    }
    successors
}

fn sample_distinct(rng: &mut ChaCha8Rng, n: usize, exclude: Vertex, deg: usize) -> Vec<Vertex> {
    debug_assert!(deg <= n - 1);
    if deg * 3 >= n {
        // Dense: shuffle the candidate pool.
        let mut pool: Vec<Vertex> = (0..n).filter(|&w| w != exclude).collect();
        pool.shuffle(rng);
        pool.truncate(deg);
        pool
    } else {
        let mut out = Vec::with_capacity(deg);
        while out.len() < deg {
            let w = rng.random_range(0..n);
            if w != exclude && !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }
}

/// Small random game for unit tests: arbitrary priorities below `max_prio`,
/// out-degrees 1..=3, self-loops allowed.
#[cfg(test)]
pub(crate) fn tiny_random_game(rng: &mut ChaCha8Rng, n: usize, max_prio: Priority) -> ParityGame {
    let priority = (0..n).map(|_| rng.random_range(0..max_prio.max(1))).collect();
    let owner = (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                Player::Even
            } else {
                Player::Odd
            }
        })
        .collect();
    let successors = (0..n)
        .map(|_| {
            let deg = rng.random_range(1..=3usize.min(n));
            let mut succ: Vec<Vertex> = Vec::new();
            for _ in 0..deg {
                let w = rng.random_range(0..n);
                if !succ.contains(&w) {
                    succ.push(w);
                }
            }
            succ
        })
        .collect();
    ParityGame::from_parts(priority, owner, successors, vec![None; n]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_seeds_give_identical_games() {
        for class in GameClass::ALL {
            let spec = GenSpec::new(class, 100, 7);
            let a = gen_random_game(&spec).unwrap();
            let b = gen_random_game(&spec).unwrap();
            assert_eq!(a, b);
            assert_eq!(crate::io::write_pgsolver(&a), crate::io::write_pgsolver(&b));
        }
    }

    #[test]
    fn lowdeg_out_degrees_stay_in_bounds() {
        let g = gen_random_game(&GenSpec::new(GameClass::LowDeg, 200, 3)).unwrap();
        for v in g.vertices() {
            assert!((1..=2).contains(&g.out_degree(v)));
            assert!(!g.successors(v).contains(&v), "self-loop at {v}");
        }
    }

    #[test]
    fn fullrandom_has_no_self_loops() {
        let g = gen_random_game(&GenSpec::new(GameClass::FullRandom, 60, 11)).unwrap();
        for v in g.vertices() {
            assert!(!g.successors(v).contains(&v));
            assert!((1..=59).contains(&g.out_degree(v)));
        }
    }

    #[test]
    fn steady_in_degrees_mostly_within_bounds() {
        let mut within = 0usize;
        let mut total = 0usize;
        for seed in 0..20 {
            let g = gen_random_game(&GenSpec::new(GameClass::Steady, 150, seed)).unwrap();
            for v in g.vertices() {
                assert!((1..=4).contains(&g.out_degree(v)));
                let in_deg = g.predecessors(v).len();
                total += 1;
                if (1..=4).contains(&in_deg) {
                    within += 1;
                }
            }
        }
        assert!(
            within as f64 >= 0.95 * total as f64,
            "only {within}/{total} vertices within in-degree bounds"
        );
    }

    #[test]
    fn rejects_infeasible_specs() {
        assert!(gen_random_game(&GenSpec::new(GameClass::LowDeg, 1, 0)).is_err());
        let mut spec = GenSpec::new(GameClass::LowDeg, 5, 0);
        spec.degrees = Some((0, 2));
        assert!(gen_random_game(&spec).is_err());
    }
}
