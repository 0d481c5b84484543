//! Independent solution checker.
//!
//! A solution is accepted iff (a) every vertex owned by its winner has a
//! strategy edge staying in its winning region, (b) each region is closed
//! under all moves of the losing player, and (c) in the strategy-induced
//! subgraph of each region every cycle's top priority has the winner's
//! parity. The cycle condition is checked by recursive SCC peeling: the top
//! priority of every nontrivial SCC must match, then its top vertices are
//! removed and the fragments are re-examined.

use std::fmt;

use thiserror::Error;

use crate::game::{ParityGame, Player, Solution, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Winner-owned vertex without a strategy.
    MissingStrategy { vertex: Vertex },
    /// Strategy edge is not an edge of the game.
    StrategyNotAnEdge { vertex: Vertex, target: Vertex },
    /// Winner-owned vertex whose strategy leaves its region.
    StrategyLeavesRegion { vertex: Vertex, target: Vertex },
    /// Loser-owned vertex with an edge out of the winner's region.
    RegionNotClosed { vertex: Vertex, escape: Vertex },
    /// A cycle in the strategy subgraph whose top priority favors the loser.
    BadCycle { witness: Vec<Vertex>, top: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingStrategy { vertex } => {
                write!(f, "vertex {vertex} is winner-owned but has no strategy")
            }
            Violation::StrategyNotAnEdge { vertex, target } => {
                write!(f, "strategy {vertex} -> {target} is not a game edge")
            }
            Violation::StrategyLeavesRegion { vertex, target } => {
                write!(f, "strategy {vertex} -> {target} leaves the winning region")
            }
            Violation::RegionNotClosed { vertex, escape } => {
                write!(f, "loser vertex {vertex} escapes its region via {escape}")
            }
            Violation::BadCycle { witness, top } => {
                write!(f, "cycle {witness:?} has losing top priority {top}")
            }
        }
    }
}

#[derive(Debug, Error)]
#[error("solution rejected with {} violation(s)", .violations.len())]
pub struct VerificationError {
    pub violations: Vec<Violation>,
}

/// Checks a claimed solution against its game.
pub fn verify(game: &ParityGame, solution: &Solution) -> Result<(), VerificationError> {
    let n = game.num_vertices();
    assert_eq!(solution.winner.len(), n, "solution must be total");
    let mut violations = Vec::new();

    for player in [Player::Even, Player::Odd] {
        let region = VertexSet::from_iter(n, solution.winners_of(player));
        if region.is_empty() {
            continue;
        }
        // (a) + (b): strategies stay inside, losers cannot leave.
        for v in region.iter() {
            if game.owner(v) == player {
                match solution.strategy[v] {
                    None => violations.push(Violation::MissingStrategy { vertex: v }),
                    Some(w) => {
                        if !game.has_edge(v, w) {
                            violations.push(Violation::StrategyNotAnEdge { vertex: v, target: w });
                        } else if !region.contains(w) {
                            violations
                                .push(Violation::StrategyLeavesRegion { vertex: v, target: w });
                        }
                    }
                }
            } else {
                for &w in game.successors(v) {
                    if !region.contains(w) {
                        violations.push(Violation::RegionNotClosed { vertex: v, escape: w });
                        break;
                    }
                }
            }
        }
        // (c): cycle parity in the strategy-induced subgraph.
        check_cycles(game, solution, player, &region, &mut violations);
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(VerificationError { violations })
    }
}

/// Restriction of the game to `region` where the winner follows its
/// strategy and the loser keeps all region-internal edges.
struct StrategyGraph<'a> {
    game: &'a ParityGame,
    solution: &'a Solution,
    player: Player,
}

impl StrategyGraph<'_> {
    fn successors(&self, v: Vertex, region: &VertexSet) -> Vec<Vertex> {
        if self.game.owner(v) == self.player {
            match self.solution.strategy[v] {
                Some(w) if region.contains(w) => vec![w],
                _ => vec![],
            }
        } else {
            self.game
                .successors(v)
                .iter()
                .copied()
                .filter(|&w| region.contains(w))
                .collect()
        }
    }
}

fn check_cycles(
    game: &ParityGame,
    solution: &Solution,
    player: Player,
    region: &VertexSet,
    violations: &mut Vec<Violation>,
) {
    // Build the induced strategy subgraph once as a throwaway game-like
    // adjacency keyed by the original indices.
    let graph = StrategyGraph {
        game,
        solution,
        player,
    };

    let mut work: Vec<VertexSet> = vec![region.clone()];
    while let Some(part) = work.pop() {
        if part.is_empty() {
            continue;
        }
        let sccs = induced_sccs(&graph, &part);
        for component in sccs {
            let nontrivial = component.len() > 1
                || graph
                    .successors(component[0], &part)
                    .contains(&component[0]);
            if !nontrivial {
                continue;
            }
            let top = component
                .iter()
                .map(|&v| game.priority(v))
                .max()
                .expect("nonempty component");
            if !player.wins_priority(top) {
                violations.push(Violation::BadCycle {
                    witness: component.clone(),
                    top,
                });
                continue;
            }
            // Peel the top-priority vertices and re-examine the fragments.
            let mut fragment = VertexSet::from_iter(game.num_vertices(), component.iter().copied());
            for &v in &component {
                if game.priority(v) == top {
                    fragment.remove(v);
                }
            }
            if !fragment.is_empty() {
                work.push(fragment);
            }
        }
    }
}

/// SCCs of the strategy subgraph restricted to `part`.
fn induced_sccs(graph: &StrategyGraph<'_>, part: &VertexSet) -> Vec<Vec<Vertex>> {
    // Reuse the iterative Tarjan by materializing the restricted graph.
    let verts: Vec<Vertex> = part.iter().collect();
    let mut dense = std::collections::HashMap::with_capacity(verts.len());
    for (i, &v) in verts.iter().enumerate() {
        dense.insert(v, i);
    }
    let succ: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            graph
                .successors(v, part)
                .into_iter()
                .filter_map(|w| dense.get(&w).copied())
                .collect()
        })
        .collect();

    // A tiny local Tarjan over the dense graph; totality is not required
    // here so we cannot reuse ParityGame.
    let m = verts.len();
    let mut index = vec![usize::MAX; m];
    let mut lowlink = vec![0usize; m];
    let mut on_stack = vec![false; m];
    let mut stack = Vec::new();
    let mut next = 0usize;
    let mut components = Vec::new();
    let mut work: Vec<(usize, usize, bool)> = Vec::new(); // (v, edge, entering)

    for root in 0..m {
        if index[root] != usize::MAX {
            continue;
        }
        work.push((root, 0, true));
        while let Some((v, mut edge, entering)) = work.pop() {
            if entering {
                index[v] = next;
                lowlink[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
            } else {
                let w = succ[v][edge];
                lowlink[v] = lowlink[v].min(lowlink[w]);
                edge += 1;
            }
            let mut suspended = false;
            while edge < succ[v].len() {
                let w = succ[v][edge];
                if index[w] == usize::MAX {
                    work.push((v, edge, false));
                    work.push((w, 0, true));
                    suspended = true;
                    break;
                }
                if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                edge += 1;
            }
            if suspended {
                continue;
            }
            if lowlink[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    component.push(verts[w]);
                    if w == v {
                        break;
                    }
                }
                components.push(component);
            }
        }
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_loop_game(prio: u32, owner: Player) -> ParityGame {
        ParityGame::from_parts(vec![prio], vec![owner], vec![vec![0]], vec![None]).unwrap()
    }

    #[test]
    fn accepts_even_self_loop_won_by_even() {
        let g = self_loop_game(2, Player::Even);
        let s = Solution {
            winner: vec![Player::Even],
            strategy: vec![Some(0)],
        };
        assert!(verify(&g, &s).is_ok());
    }

    #[test]
    fn rejects_flipped_winner_with_witness() {
        let g = self_loop_game(2, Player::Even);
        let s = Solution {
            winner: vec![Player::Odd],
            strategy: vec![None],
        };
        let err = verify(&g, &s).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, Violation::BadCycle { top: 2, .. })));
    }

    #[test]
    fn rejects_strategy_that_is_not_an_edge() {
        let g = ParityGame::from_parts(
            vec![0, 0],
            vec![Player::Even, Player::Even],
            vec![vec![1], vec![0]],
            vec![None; 2],
        )
        .unwrap();
        let s = Solution {
            winner: vec![Player::Even, Player::Even],
            strategy: vec![Some(0), Some(0)],
        };
        let err = verify(&g, &s).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, Violation::StrategyNotAnEdge { vertex: 0, target: 0 })));
    }

    #[test]
    fn rejects_open_region() {
        // Odd-owned vertex 0 can escape the claimed Even region to 1.
        let g = ParityGame::from_parts(
            vec![0, 1],
            vec![Player::Odd, Player::Odd],
            vec![vec![0, 1], vec![1]],
            vec![None; 2],
        )
        .unwrap();
        let s = Solution {
            winner: vec![Player::Even, Player::Odd],
            strategy: vec![None, Some(1)],
        };
        let err = verify(&g, &s).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RegionNotClosed { vertex: 0, escape: 1 })));
    }
}
