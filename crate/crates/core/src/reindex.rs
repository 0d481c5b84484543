//! Priority renumbering and vertex reordering.
//!
//! All three renumberings scan the distinct priorities in ascending order
//! and assign new values starting at the parity of the lowest one:
//!
//! * gap elimination ([`normalize`]): +1 on a parity change, +2 otherwise,
//!   so distinct priorities stay distinct and gaps disappear;
//! * compression ([`compress_priorities`]): +1 on a parity change only, so
//!   maximal same-parity blocks of adjacent distinct priorities collapse to
//!   a single value, minimizing the highest priority;
//! * inflation ([`inflate_priorities`]): +2 on every distinct step, +1 more
//!   on a parity change, spreading each distinct priority into its own
//!   block.
//!
//! Each mapping preserves parity and relative order of distinct priorities,
//! so the winner of every vertex is unchanged.

use std::collections::BTreeSet;

use crate::game::{ParityGame, Priority, Vertex};

fn distinct_priorities(game: &ParityGame) -> BTreeSet<Priority> {
    game.vertices().map(|v| game.priority(v)).collect()
}

fn renumber_map(
    game: &ParityGame,
    step: impl Fn(Priority, Priority, bool) -> Priority,
) -> Vec<(Priority, Priority)> {
    let mut map = Vec::new();
    let mut new_p = 0;
    let mut first = true;
    for p in distinct_priorities(game) {
        if first {
            new_p = p % 2;
            first = false;
        } else {
            let parity_change = (p % 2) != (new_p % 2);
            new_p = step(new_p, p, parity_change);
        }
        map.push((p, new_p));
    }
    map
}

fn apply_map(game: &ParityGame, map: &[(Priority, Priority)]) -> ParityGame {
    game.with_priorities(|p| {
        let i = map.binary_search_by_key(&p, |e| e.0).expect("priority present");
        map[i].1
    })
}

/// Sorts vertices by priority and renumbers priorities from the bottom to
/// eliminate gaps. Returns the new game together with the vertex renaming
/// (`renaming[old] = new`).
pub fn normalize(game: &ParityGame) -> (ParityGame, Vec<Vertex>) {
    let n = game.num_vertices();
    let gap_free = apply_map(
        game,
        &renumber_map(game, |prev, _p, parity_change| {
            if parity_change {
                prev + 1
            } else {
                prev + 2
            }
        }),
    );

    // Stable order: by priority, ties by original index.
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (gap_free.priority(v), v));
    let mut renaming = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        renaming[old] = new;
    }

    let priority = order.iter().map(|&v| gap_free.priority(v)).collect();
    let owner = order.iter().map(|&v| gap_free.owner(v)).collect();
    let successors = order
        .iter()
        .map(|&v| {
            gap_free
                .successors(v)
                .iter()
                .map(|&w| renaming[w])
                .collect()
        })
        .collect();
    let labels = order
        .iter()
        .map(|&v| gap_free.label(v).map(|s| s.to_string()))
        .collect();
    let sorted = ParityGame::from_parts(priority, owner, successors, labels)
        .expect("renaming preserves totality");
    (sorted, renaming)
}

/// Collapses maximal same-parity blocks of adjacent distinct priorities to
/// one value each, minimizing the highest priority. Vertex order unchanged.
pub fn compress_priorities(game: &ParityGame) -> ParityGame {
    apply_map(
        game,
        &renumber_map(game, |prev, _p, parity_change| {
            if parity_change {
                prev + 1
            } else {
                prev
            }
        }),
    )
}

/// Spreads distinct priorities apart so every one of them forms its own
/// block: consecutive distinct priorities end up more than one step apart.
/// Vertex order unchanged.
pub fn inflate_priorities(game: &ParityGame) -> ParityGame {
    apply_map(
        game,
        &renumber_map(game, |prev, _p, parity_change| {
            if parity_change {
                prev + 3
            } else {
                prev + 2
            }
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Player;

    fn game_with_priorities(prios: &[Priority]) -> ParityGame {
        let n = prios.len();
        ParityGame::from_parts(
            prios.to_vec(),
            (0..n)
                .map(|v| if v % 2 == 0 { Player::Even } else { Player::Odd })
                .collect(),
            (0..n).map(|v| vec![(v + 1) % n]).collect(),
            vec![None; n],
        )
        .unwrap()
    }

    fn priorities(game: &ParityGame) -> Vec<Priority> {
        game.vertices().map(|v| game.priority(v)).collect()
    }

    #[test]
    fn gap_elimination_keeps_distinct_priorities_distinct() {
        let g = game_with_priorities(&[1, 4, 6]);
        let (n, renaming) = normalize(&g);
        let mut out: Vec<Priority> = g
            .vertices()
            .map(|v| n.priority(renaming[v]))
            .collect();
        out.sort_unstable();
        assert_eq!(out, vec![1, 2, 4]);
        assert!(n.is_priority_sorted());
    }

    #[test]
    fn gap_free_game_only_gets_sorted() {
        let g = game_with_priorities(&[2, 1, 0]);
        let (n, renaming) = normalize(&g);
        for v in g.vertices() {
            assert_eq!(n.priority(renaming[v]), g.priority(v));
        }
        assert!(n.is_priority_sorted());
    }

    #[test]
    fn compression_merges_same_parity_blocks() {
        let g = game_with_priorities(&[2, 5, 7, 8]);
        let c = compress_priorities(&g);
        assert_eq!(priorities(&c), vec![0, 1, 1, 2]);
    }

    #[test]
    fn compression_of_single_parity_game_hits_the_bottom() {
        let even = compress_priorities(&game_with_priorities(&[2, 4, 8]));
        assert_eq!(priorities(&even), vec![0, 0, 0]);
        let odd = compress_priorities(&game_with_priorities(&[3, 5]));
        assert_eq!(priorities(&odd), vec![1, 1]);
    }

    #[test]
    fn inflation_separates_distinct_priorities() {
        let g = game_with_priorities(&[0, 1, 2]);
        let i = inflate_priorities(&g);
        assert_eq!(priorities(&i), vec![0, 3, 6]);
        // Parity preserved, and no two distinct priorities are adjacent.
        let c = compress_priorities(&i);
        assert_eq!(priorities(&c), vec![0, 1, 2]);
    }

    #[test]
    fn renumberings_preserve_parity_and_order() {
        let g = game_with_priorities(&[3, 9, 4, 4, 10, 7]);
        for out in [compress_priorities(&g), inflate_priorities(&g)] {
            for v in g.vertices() {
                assert_eq!(g.priority(v) % 2, out.priority(v) % 2);
            }
            for v in g.vertices() {
                for w in g.vertices() {
                    let before = g.priority(v).cmp(&g.priority(w));
                    let after = out.priority(v).cmp(&out.priority(w));
                    if out.priority(v) != out.priority(w) {
                        assert_eq!(before, after);
                    }
                }
            }
        }
    }
}
