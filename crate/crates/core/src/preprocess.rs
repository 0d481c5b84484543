//! Optional game reductions applied before solving. Each technique solves
//! some vertices outright, extends through the winner's attractor, and
//! shrinks the remaining mask; the pipeline loops them to a fixpoint.

use crate::attractor::AttractorEngine;
use crate::game::{ParityGame, Player, Solution, Vertex, VertexSet};
use crate::scc::strongly_connected_components;

/// Which techniques run; all on by default.
#[derive(Clone, Copy, Debug)]
pub struct PreprocessConfig {
    pub self_loops: bool,
    pub winner_controlled_cycles: bool,
    pub single_parity: bool,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            self_loops: true,
            winner_controlled_cycles: true,
            single_parity: true,
        }
    }
}

impl PreprocessConfig {
    pub fn none() -> Self {
        PreprocessConfig {
            self_loops: false,
            winner_controlled_cycles: false,
            single_parity: false,
        }
    }
}

/// Vertices solved per technique, attractor extensions included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PreprocessStats {
    pub self_loops: usize,
    pub winner_controlled_cycles: usize,
    pub single_parity: usize,
    pub rounds: usize,
}

impl PreprocessStats {
    pub fn solved(&self) -> usize {
        self.self_loops + self.winner_controlled_cycles + self.single_parity
    }
}

/// Partial result: solved vertices were removed from `remaining` and their
/// winner and strategy written into `solution`.
pub struct Preprocessor<'a> {
    game: &'a ParityGame,
    engine: AttractorEngine,
}

impl<'a> Preprocessor<'a> {
    pub fn new(game: &'a ParityGame) -> Preprocessor<'a> {
        Preprocessor {
            game,
            engine: AttractorEngine::new(game.num_vertices()),
        }
    }

    /// Runs the enabled techniques to a fixpoint: self-loops, then
    /// winner-controlled winning cycles, then single parity; attractor
    /// removals re-trigger the earlier techniques.
    pub fn run(
        &mut self,
        config: &PreprocessConfig,
        remaining: &mut VertexSet,
        solution: &mut Solution,
    ) -> PreprocessStats {
        let mut stats = PreprocessStats::default();
        loop {
            stats.rounds += 1;
            let mut changed = false;
            if config.self_loops {
                let got = self.solve_self_loops(remaining, solution);
                stats.self_loops += got;
                changed |= got > 0;
            }
            if config.winner_controlled_cycles {
                let got = self.solve_winner_controlled_cycles(remaining, solution);
                stats.winner_controlled_cycles += got;
                changed |= got > 0;
            }
            if config.single_parity {
                let got = self.solve_single_parity(remaining, solution);
                stats.single_parity += got;
                changed |= got > 0;
            }
            if !changed {
                return stats;
            }
        }
    }

    /// Self-loop solving: a loop whose parity matches its owner wins the
    /// vertex (strategy: stay); a losing loop on a vertex with no other
    /// edge hands it to the opponent. Other losing loops are simply never
    /// taken by a rational owner and need no action.
    pub fn solve_self_loops(
        &mut self,
        remaining: &mut VertexSet,
        solution: &mut Solution,
    ) -> usize {
        let game = self.game;
        let mut seeds: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
        for v in remaining.iter() {
            if !game.has_edge(v, v) {
                continue;
            }
            let owner = game.owner(v);
            let loop_winner = Player::from_priority(game.priority(v));
            if loop_winner == owner {
                seeds[owner.index()].push(v);
            } else {
                let only_edge = game
                    .successors(v)
                    .iter()
                    .all(|&w| w == v || !remaining.contains(w));
                if only_edge {
                    seeds[loop_winner.index()].push(v);
                }
            }
        }
        let mut solved = 0;
        for player in [Player::Even, Player::Odd] {
            let list = std::mem::take(&mut seeds[player.index()]);
            if list.is_empty() {
                continue;
            }
            // Re-check membership: the other player's sweep may have taken
            // a vertex already.
            let live: Vec<Vertex> = list
                .into_iter()
                .filter(|&v| remaining.contains(v))
                .collect();
            for &v in &live {
                solution.winner[v] = player;
                solution.strategy[v] = if game.owner(v) == player {
                    Some(v)
                } else {
                    None
                };
            }
            solved += self.remove_with_attractor(player, &live, remaining, solution);
        }
        solved
    }

    /// Winner-controlled winning cycle detection, restricted to cycles
    /// where one player owns every vertex and every priority has that
    /// player's parity; linear time via SCC decomposition of the induced
    /// subgraph.
    pub fn solve_winner_controlled_cycles(
        &mut self,
        remaining: &mut VertexSet,
        solution: &mut Solution,
    ) -> usize {
        let game = self.game;
        let mut solved = 0;
        for player in [Player::Even, Player::Odd] {
            let induced = VertexSet::from_iter(
                game.num_vertices(),
                remaining.iter().filter(|&v| {
                    game.owner(v) == player && player.wins_priority(game.priority(v))
                }),
            );
            if induced.is_empty() {
                continue;
            }
            let partition = strongly_connected_components(game, &induced);
            let mut on_cycle = Vec::new();
            for component in &partition.components {
                let nontrivial = component.len() > 1
                    || game
                        .successors(component[0])
                        .iter()
                        .any(|&w| w == component[0] && induced.contains(w));
                if !nontrivial {
                    continue;
                }
                let in_component =
                    VertexSet::from_iter(game.num_vertices(), component.iter().copied());
                for &v in component {
                    solution.winner[v] = player;
                    solution.strategy[v] = game
                        .successors(v)
                        .iter()
                        .copied()
                        .find(|&w| in_component.contains(w));
                    debug_assert!(solution.strategy[v].is_some());
                    on_cycle.push(v);
                }
            }
            if !on_cycle.is_empty() {
                solved += self.remove_with_attractor(player, &on_cycle, remaining, solution);
            }
        }
        solved
    }

    /// If every remaining priority has one parity, that player wins all of
    /// it with any strategy staying inside.
    pub fn solve_single_parity(
        &mut self,
        remaining: &mut VertexSet,
        solution: &mut Solution,
    ) -> usize {
        let game = self.game;
        if remaining.is_empty() {
            return 0;
        }
        let first = {
            let mut parities = remaining.iter().map(|v| game.priority(v) % 2);
            let first = parities.next().unwrap();
            if parities.any(|p| p != first) {
                return 0;
            }
            first
        };
        let player = Player::from_priority(first);
        let mut solved = 0;
        for v in remaining.iter() {
            solution.winner[v] = player;
            solution.strategy[v] = if game.owner(v) == player {
                game.successors(v)
                    .iter()
                    .copied()
                    .find(|&w| remaining.contains(w))
            } else {
                None
            };
            debug_assert!(game.owner(v) != player || solution.strategy[v].is_some());
            solved += 1;
        }
        *remaining = VertexSet::empty(game.num_vertices());
        solved
    }

    /// Extends `player`'s win at `seeds` through its attractor inside
    /// `remaining`, records winners and strategies, and removes everything
    /// from `remaining`. Returns the number of vertices removed.
    fn remove_with_attractor(
        &mut self,
        player: Player,
        seeds: &[Vertex],
        remaining: &mut VertexSet,
        solution: &mut Solution,
    ) -> usize {
        let game = self.game;
        let mut set = VertexSet::from_iter(game.num_vertices(), seeds.iter().copied());
        let mut order = Vec::new();
        let mut strategy = vec![None; game.num_vertices()];
        self.engine.attract_into(
            game,
            player,
            |v| remaining.contains(v),
            &mut set,
            &mut strategy,
            &mut order,
        );
        for v in order {
            solution.winner[v] = player;
            solution.strategy[v] = strategy[v];
        }
        let mut removed = 0;
        for v in set.iter() {
            if remaining.remove(v) {
                removed += 1;
            }
        }
        removed
    }
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

    fn run_all(g: &ParityGame) -> (VertexSet, Solution, PreprocessStats) {
        let mut remaining = VertexSet::full(g.num_vertices());
        let mut solution = Solution::new(g.num_vertices());
        let stats = Preprocessor::new(g).run(&PreprocessConfig::default(), &mut remaining, &mut solution);
        (remaining, solution, stats)
    }

    #[test]
    fn winning_self_loop_goes_to_owner() {
        let g = game(&[(2, Player::Even, &[0])]).unwrap();
        let (remaining, s, stats) = run_all(&g);
        assert!(remaining.is_empty());
        assert_eq!(s.winner[0], Player::Even);
        assert_eq!(s.strategy[0], Some(0));
        assert_eq!(stats.self_loops, 1);
    }

    #[test]
    fn forced_losing_self_loop_goes_to_opponent() {
        let g = game(&[(1, Player::Even, &[0])]).unwrap();
        let (remaining, s, _) = run_all(&g);
        assert!(remaining.is_empty());
        assert_eq!(s.winner[0], Player::Odd);
        assert_eq!(s.strategy[0], None);
    }

    #[test]
    fn avoidable_losing_self_loop_is_left_alone() {
        let g = game(&[(1, Player::Even, &[0, 1]), (1, Player::Odd, &[0])]).unwrap();
        let mut remaining = VertexSet::full(2);
        let mut solution = Solution::new(2);
        let got = Preprocessor::new(&g).solve_self_loops(&mut remaining, &mut solution);
        assert_eq!(got, 0);
        assert!(remaining.contains(0));
    }

    #[test]
    fn even_two_cycle_is_winner_controlled() {
        let g = game(&[(0, Player::Even, &[1]), (0, Player::Even, &[0])]).unwrap();
        let (remaining, s, stats) = run_all(&g);
        assert!(remaining.is_empty());
        assert_eq!(s.winner, vec![Player::Even, Player::Even]);
        assert_eq!(s.strategy[0], Some(1));
        assert_eq!(s.strategy[1], Some(0));
        assert!(stats.winner_controlled_cycles == 2 || stats.self_loops > 0);
    }

    #[test]
    fn mixed_owner_cycle_is_not_detected() {
        let g = game(&[(0, Player::Even, &[1]), (0, Player::Odd, &[0])]).unwrap();
        let mut remaining = VertexSet::full(2);
        let mut solution = Solution::new(2);
        let got = Preprocessor::new(&g)
            .solve_winner_controlled_cycles(&mut remaining, &mut solution);
        assert_eq!(got, 0);
    }

    #[test]
    fn single_parity_game_goes_whole() {
        let g = game(&[(2, Player::Odd, &[1]), (4, Player::Even, &[0])]).unwrap();
        let mut remaining = VertexSet::full(2);
        let mut solution = Solution::new(2);
        let got = Preprocessor::new(&g).solve_single_parity(&mut remaining, &mut solution);
        assert_eq!(got, 2);
        assert_eq!(solution.winner, vec![Player::Even, Player::Even]);
        assert_eq!(solution.strategy[1], Some(0));
        assert_eq!(solution.strategy[0], None);
    }

    #[test]
    fn mixed_parity_single_parity_is_noop() {
        let g = game(&[(1, Player::Even, &[1]), (2, Player::Even, &[0])]).unwrap();
        let mut remaining = VertexSet::full(2);
        let mut solution = Solution::new(2);
        let got = Preprocessor::new(&g).solve_single_parity(&mut remaining, &mut solution);
        assert_eq!(got, 0);
        assert_eq!(remaining.len(), 2);
    }
}
