//! Exact reference solver by positional strategy enumeration.
//!
//! Positional determinacy lets us enumerate one player's positional
//! strategies: a vertex is won by Even iff some Even strategy defeats every
//! Odd response. Only usable on small games; guarded by the product of
//! Even's out-degrees.

use thiserror::Error;

use crate::game::{ParityGame, Player, Solution, Vertex};

const ENUMERATION_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("strategy space too large: {0} exceeds {ENUMERATION_LIMIT}")]
    TooLarge(u128),
}

/// Solves a game exactly by enumerating positional strategies of player
/// Even. Returns winners only; strategies are left empty.
pub fn brute_force_solve(game: &ParityGame) -> Result<Solution, OracleError> {
    let won_by_even = winning_set(game, Player::Even)?;
    let n = game.num_vertices();
    let mut solution = Solution::new(n);
    for v in 0..n {
        solution.winner[v] = if won_by_even[v] {
            Player::Even
        } else {
            Player::Odd
        };
    }
    Ok(solution)
}

/// Vertices from which `player` has a positional strategy defeating every
/// opponent response.
pub(crate) fn winning_set(game: &ParityGame, player: Player) -> Result<Vec<bool>, OracleError> {
    let n = game.num_vertices();
    let controlled: Vec<Vertex> = game.vertices().filter(|&v| game.owner(v) == player).collect();

    let mut space: u128 = 1;
    for &v in &controlled {
        space = space.saturating_mul(game.out_degree(v) as u128);
        if space > ENUMERATION_LIMIT {
            return Err(OracleError::TooLarge(space));
        }
    }

    let mut won = vec![false; n];
    let mut choice = vec![0usize; controlled.len()];
    loop {
        let wins = wins_under_strategy(game, player, &controlled, &choice);
        for v in 0..n {
            won[v] |= wins[v];
        }
        // Next strategy in mixed-radix order.
        let mut i = 0;
        loop {
            if i == controlled.len() {
                return Ok(won);
            }
            choice[i] += 1;
            if choice[i] < game.out_degree(controlled[i]) {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// With `player`'s strategy fixed, the opponent controls every remaining
/// choice. The opponent wins from v iff it can reach a cycle whose top
/// priority has its parity; `player` wins the complement.
fn wins_under_strategy(
    game: &ParityGame,
    player: Player,
    controlled: &[Vertex],
    choice: &[usize],
) -> Vec<bool> {
    let n = game.num_vertices();
    let mut fixed: Vec<Option<Vertex>> = vec![None; n];
    for (i, &v) in controlled.iter().enumerate() {
        fixed[v] = Some(game.successors(v)[choice[i]]);
    }
    let succs = |v: Vertex| -> &[Vertex] {
        match &fixed[v] {
            Some(w) => std::slice::from_ref(w),
            None => game.successors(v),
        }
    };

    // Opponent-favorable cycle cores: vertices u with pr(u) = p (opponent
    // parity) lying on a cycle through priorities <= p.
    let opponent = player.opponent();
    let mut cores = vec![false; n];
    for u in 0..n {
        let p = game.priority(u);
        if Player::from_priority(p) != opponent {
            continue;
        }
        // Reachability from u back to u through priorities <= p.
        let mut seen = vec![false; n];
        let mut stack = vec![u];
        let mut closes = false;
        'search: while let Some(v) = stack.pop() {
            for &w in succs(v) {
                if w == u {
                    closes = true;
                    break 'search;
                }
                if game.priority(w) <= p && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if closes {
            cores[u] = true;
        }
    }

    // The opponent wins exactly the vertices that reach a core.
    let mut opponent_wins = cores.clone();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !opponent_wins[v] && succs(v).iter().any(|&w| opponent_wins[w]) {
                opponent_wins[v] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    opponent_wins.iter().map(|&o| !o).collect()
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

    #[test]
    fn single_even_self_loop_goes_to_even() {
        let g = game(&[(2, Player::Odd, &[0])]).unwrap();
        let s = brute_force_solve(&g).unwrap();
        assert_eq!(s.winner, vec![Player::Even]);
    }

    #[test]
    fn single_odd_self_loop_goes_to_odd() {
        let g = game(&[(1, Player::Even, &[0])]).unwrap();
        let s = brute_force_solve(&g).unwrap();
        assert_eq!(s.winner, vec![Player::Odd]);
    }

    #[test]
    fn owner_avoids_losing_loop() {
        // Even-owned, pr 1, can stay on the loop (losing) or go to an even
        // self-loop vertex; rationally it leaves.
        let g = game(&[(1, Player::Even, &[0, 1]), (2, Player::Even, &[1])]).unwrap();
        let s = brute_force_solve(&g).unwrap();
        assert_eq!(s.winner, vec![Player::Even, Player::Even]);
    }

    #[test]
    fn both_enumeration_directions_agree() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..150 {
            let n = rng.random_range(1..=6);
            let g = crate::generate::tiny_random_game(&mut rng, n, 5);
            let even = winning_set(&g, Player::Even).unwrap();
            let odd = winning_set(&g, Player::Odd).unwrap();
            for v in 0..n {
                assert_ne!(even[v], odd[v], "determinacy violated at {v}:\n{g:?}");
            }
        }
    }
}
