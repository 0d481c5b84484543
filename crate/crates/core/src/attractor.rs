//! Attractor computation: the least set containing `A` from which a player
//! can force the play into `A`, restricted to a subgame.
//!
//! Implemented backward over predecessor lists. Opponent vertices carry an
//! escape-edge counter (successors not yet inside the growing set); counters
//! are initialized lazily per invocation via a stamp, so no per-call O(n)
//! clearing is needed.

use crate::game::{ParityGame, Player, Vertex, VertexSet};

/// Reusable scratch state for attractor computations on one game.
pub struct AttractorEngine {
    escapes: Vec<u32>,
    stamp: Vec<u64>,
    clock: u64,
    queue: Vec<Vertex>,
}

impl AttractorEngine {
    pub fn new(n: usize) -> AttractorEngine {
        AttractorEngine {
            escapes: vec![0; n],
            stamp: vec![0; n],
            clock: 0,
            queue: Vec::new(),
        }
    }

    /// Grows `set` to the `player`-attractor of its current contents within
    /// `eligible`, recording a strategy edge for every `player`-owned vertex
    /// added and pushing each newly attracted vertex onto `order`.
    ///
    /// `eligible` decides subgame membership and must be stable during the
    /// call; vertices already in `set` need not be eligible.
    pub fn attract_into(
        &mut self,
        game: &ParityGame,
        player: Player,
        eligible: impl Fn(Vertex) -> bool,
        set: &mut VertexSet,
        strategy: &mut [Option<Vertex>],
        order: &mut Vec<Vertex>,
    ) {
        self.clock += 1;
        self.queue.clear();
        self.queue.extend(set.iter());

        while let Some(v) = self.queue.pop() {
            for &u in game.predecessors(v) {
                if set.contains(u) || !eligible(u) {
                    continue;
                }
                let attracted = if game.owner(u) == player {
                    strategy[u] = Some(v);
                    true
                } else {
                    // First touch this call: count the escape edges still
                    // open, i.e. successors inside the subgame. Every edge
                    // into the set is decremented exactly once, when its
                    // endpoint is popped.
                    if self.stamp[u] != self.clock {
                        self.stamp[u] = self.clock;
                        self.escapes[u] = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| eligible(w) || set.contains(w))
                            .count() as u32;
                    }
                    self.escapes[u] -= 1;
                    self.escapes[u] == 0
                };
                if attracted {
                    set.insert(u);
                    order.push(u);
                    self.queue.push(u);
                }
            }
        }
    }
}

/// Computes the `player`-attractor of `a` within `subgame`.
///
/// Returns the attractor set together with a strategy edge for every
/// `player`-owned vertex that was added (seeds keep `None`); each strategy
/// edge points at a vertex attracted earlier or at a seed.
pub fn attractor(
    game: &ParityGame,
    subgame: &VertexSet,
    player: Player,
    a: &VertexSet,
) -> (VertexSet, Vec<Option<Vertex>>) {
    let mut engine = AttractorEngine::new(game.num_vertices());
    let mut set = a.clone();
    let mut strategy = vec![None; game.num_vertices()];
    let mut order = Vec::new();
    engine.attract_into(
        game,
        player,
        |v| subgame.contains(v),
        &mut set,
        &mut strategy,
        &mut order,
    );
    (set, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::GameError;

    fn game(spec: &[(u32, Player, &[Vertex])]) -> Result<ParityGame, GameError> {
        ParityGame::from_parts(
            spec.iter().map(|s| s.0).collect(),
            spec.iter().map(|s| s.1).collect(),
            spec.iter().map(|s| s.2.to_vec()).collect(),
            vec![None; spec.len()],
        )
    }

    /// Reference fixpoint: re-evaluate the attractor formula until stable.
    fn naive_attractor(
        game: &ParityGame,
        subgame: &VertexSet,
        player: Player,
        a: &VertexSet,
    ) -> VertexSet {
        let mut z = a.clone();
        loop {
            let mut changed = false;
            for v in subgame.iter() {
                if z.contains(v) {
                    continue;
                }
                let attracted = if game.owner(v) == player {
                    game.successors(v).iter().any(|w| z.contains(*w))
                } else {
                    game.successors(v)
                        .iter()
                        .filter(|w| subgame.contains(**w) || z.contains(**w))
                        .all(|w| z.contains(*w))
                };
                if attracted {
                    z.insert(v);
                    changed = true;
                }
            }
            if !changed {
                return z;
            }
        }
    }

    #[test]
    fn fixpoint_already_reached() {
        let g = game(&[(0, Player::Even, &[1]), (1, Player::Odd, &[0])]).unwrap();
        let sub = VertexSet::full(2);
        let (result, _) = attractor(&g, &sub, Player::Even, &sub);
        assert_eq!(result, sub);
    }

    #[test]
    fn owner_with_successor_in_target_is_attracted() {
        let g = game(&[(0, Player::Even, &[1]), (1, Player::Odd, &[1])]).unwrap();
        let sub = VertexSet::full(2);
        let a = VertexSet::from_iter(2, [1]);
        let (result, strategy) = attractor(&g, &sub, Player::Even, &a);
        assert!(result.contains(0) && result.contains(1));
        assert_eq!(strategy[0], Some(1));
        assert_eq!(strategy[1], None);
    }

    #[test]
    fn opponent_needs_all_successors_inside() {
        // 0 is Odd-owned with an escape to 2; Even cannot attract it.
        let g = game(&[
            (0, Player::Odd, &[1, 2]),
            (1, Player::Even, &[1]),
            (2, Player::Even, &[2]),
        ])
        .unwrap();
        let sub = VertexSet::full(3);
        let a = VertexSet::from_iter(3, [1]);
        let (result, _) = attractor(&g, &sub, Player::Even, &a);
        assert!(!result.contains(0));
        assert!(!result.contains(2));
    }

    #[test]
    fn matches_naive_fixpoint_on_random_games() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..300 {
            let n = rng.random_range(2..=8);
            let spec: Vec<(u32, Player, Vec<Vertex>)> = (0..n)
                .map(|_| {
                    let pr = rng.random_range(0..6);
                    let owner = if rng.random_bool(0.5) {
                        Player::Even
                    } else {
                        Player::Odd
                    };
                    let deg = rng.random_range(1..=3.min(n));
                    let mut succ: Vec<Vertex> =
                        (0..deg).map(|_| rng.random_range(0..n)).collect();
                    succ.dedup();
                    (pr, owner, succ)
                })
                .collect();
            let g = ParityGame::from_parts(
                spec.iter().map(|s| s.0).collect(),
                spec.iter().map(|s| s.1).collect(),
                spec.iter().map(|s| s.2.clone()).collect(),
                vec![None; n],
            )
            .unwrap();

            // Random subgame that keeps totality is not required for the
            // attractor itself; use the full game and random seed sets.
            let sub = VertexSet::full(n);
            let mut a = VertexSet::empty(n);
            for v in 0..n {
                if rng.random_bool(0.3) {
                    a.insert(v);
                }
            }
            for player in [Player::Even, Player::Odd] {
                let (fast, strategy) = attractor(&g, &sub, player, &a);
                let slow = naive_attractor(&g, &sub, player, &a);
                assert_eq!(fast, slow);
                // Escape witness: opponent vertices outside keep an escape.
                for v in sub.iter() {
                    if !fast.contains(v) && game_owner_is(&g, v, player.opponent()) {
                        assert!(g.successors(v).iter().any(|w| !fast.contains(*w)));
                    }
                }
                // Added owner vertices point into the set.
                for v in fast.iter() {
                    if !a.contains(v) && g.owner(v) == player {
                        let w = strategy[v].expect("attracted owner vertex has strategy");
                        assert!(fast.contains(w));
                    }
                }
            }
        }
    }

    fn game_owner_is(g: &ParityGame, v: Vertex, p: Player) -> bool {
        g.owner(v) == p
    }
}
