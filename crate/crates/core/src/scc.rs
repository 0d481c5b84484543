//! Iterative Tarjan strongly connected components, restricted to a vertex
//! mask, plus the bottom-SCC driven solving loop.

use crate::game::{ParityGame, Solution, Vertex, VertexSet};

const UNVISITED: usize = usize::MAX;

/// Tarjan's algorithm with an explicit stack; survives deep graphs.
/// Components are emitted in reverse topological order of the condensation,
/// so the first component is always a bottom SCC.
pub struct SccPartition {
    pub components: Vec<Vec<Vertex>>,
}

enum Phase {
    Enter,
    Resume { edge: usize },
}

pub fn strongly_connected_components(game: &ParityGame, within: &VertexSet) -> SccPartition {
    let n = game.num_vertices();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut next_index = 0usize;
    let mut components = Vec::new();

    let mut work: Vec<(Vertex, Phase)> = Vec::new();
    for root in within.iter() {
        if index[root] != UNVISITED {
            continue;
        }
        work.push((root, Phase::Enter));
        while let Some((v, phase)) = work.pop() {
            let mut edge = match phase {
                Phase::Enter => {
                    index[v] = next_index;
                    lowlink[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    0
                }
                Phase::Resume { edge } => {
                    // The child we just returned from.
                    let w = game.successors(v)[edge];
                    lowlink[v] = lowlink[v].min(lowlink[w]);
                    edge + 1
                }
            };
            let succs = game.successors(v);
            let mut suspended = false;
            while edge < succs.len() {
                let w = succs[edge];
                if !within.contains(w) {
                    edge += 1;
                    continue;
                }
                if index[w] == UNVISITED {
                    work.push((v, Phase::Resume { edge }));
                    work.push((w, Phase::Enter));
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
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                components.push(component);
            }
        }
    }
    SccPartition { components }
}

/// Finds a bottom SCC of the remaining game: a component with no edges
/// leaving it. Such a component is itself a total subgame.
pub fn bottom_scc(game: &ParityGame, within: &VertexSet) -> Vec<Vertex> {
    let partition = strongly_connected_components(game, within);
    // Tarjan emits components in reverse topological order, so the first
    // emitted component has no edges out of it.
    partition.components.into_iter().next().unwrap_or_default()
}

/// Repeatedly solves a bottom SCC with `solve_sub`, extends the winners via
/// attractors into the remaining game, and removes the solved part.
pub fn scc_solve(
    game: &ParityGame,
    remaining: &VertexSet,
    solution: &mut Solution,
    mut solve_sub: impl FnMut(&ParityGame, &VertexSet) -> Solution,
) {
    use crate::attractor::AttractorEngine;
    use crate::game::Player;

    let mut remaining = remaining.clone();
    let mut engine = AttractorEngine::new(game.num_vertices());
    while !remaining.is_empty() {
        let scc = bottom_scc(game, &remaining);
        debug_assert!(!scc.is_empty());
        let sub = VertexSet::from_iter(game.num_vertices(), scc.iter().copied());
        let part = solve_sub(game, &sub);
        for &v in &scc {
            solution.winner[v] = part.winner[v];
            solution.strategy[v] = part.strategy[v];
        }

        // Extend both winners through the remaining game; the regions are
        // disjoint because a dominion's opponent part cannot be attracted.
        for player in [Player::Even, Player::Odd] {
            let mut set = VertexSet::from_iter(
                game.num_vertices(),
                scc.iter().copied().filter(|&v| part.winner[v] == player),
            );
            if set.is_empty() {
                continue;
            }
            let mut order = Vec::new();
            let mut strategy = vec![None; game.num_vertices()];
            engine.attract_into(
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
            for v in set.iter() {
                remaining.remove(v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Player;

    fn line_game(n: usize) -> ParityGame {
        // v -> v+1, last vertex loops; SCCs are singletons except the loop.
        ParityGame::from_parts(
            (0..n as u32).collect(),
            (0..n).map(|_| Player::Even).collect(),
            (0..n)
                .map(|v| if v + 1 < n { vec![v + 1] } else { vec![v] })
                .collect(),
            vec![None; n],
        )
        .unwrap()
    }

    #[test]
    fn bottom_scc_of_a_line_is_the_final_loop() {
        let g = line_game(5);
        let scc = bottom_scc(&g, &VertexSet::full(5));
        assert_eq!(scc, vec![4]);
    }

    #[test]
    fn strongly_connected_game_is_one_component() {
        let g = ParityGame::from_parts(
            vec![0, 1, 2],
            vec![Player::Even, Player::Odd, Player::Even],
            vec![vec![1], vec![2], vec![0]],
            vec![None; 3],
        )
        .unwrap();
        let p = strongly_connected_components(&g, &VertexSet::full(3));
        assert_eq!(p.components.len(), 1);
        assert_eq!(p.components[0].len(), 3);
    }

    #[test]
    fn handles_deep_graphs_without_recursion() {
        let g = line_game(200_000);
        let p = strongly_connected_components(&g, &VertexSet::full(200_000));
        assert_eq!(p.components.len(), 200_000);
    }
}
