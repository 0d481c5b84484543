//! Small progress measures.
//!
//! A measure records, per priority of the measured player's parity, how
//! often that priority heads a dominated stretch of the best play recorded
//! so far; `Top` marks a vertex as won by the measured player. Counters are
//! capped by the number of vertices carrying the priority: a saturated
//! counter carries into the next higher position and eventually into `Top`,
//! which encodes the opponent's lowest escape.
//!
//! Measures for both players are maintained simultaneously, so winning
//! strategies for both sides fall out of the two tables. Further
//! improvements: the cap of a priority drops whenever one of its vertices
//! reaches `Top`, and the lifting loop occasionally halts to run an
//! attractor to the still liftable vertices, immediately topping the
//! complement in the dual table.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::game::{ParityGame, Player, Priority, Solution, Vertex, VertexSet};
use crate::solvers::SolveError;

/// A measure: either the maximal element, or counters for the measured
/// player's priorities in ascending priority order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpmMeasure {
    Top,
    Tuple(Vec<u32>),
}

/// The measure lattice for one side: counter layout and caps.
#[derive(Clone, Debug)]
pub struct SpmSpace {
    side: Player,
    width: usize,
    caps: Vec<u32>,
}

impl SpmSpace {
    /// Space for `side` over the subgame: one counter per priority of the
    /// side's parity up to the top priority, capped by its vertex count.
    pub fn for_subgame(side: Player, game: &ParityGame, sub: &VertexSet) -> SpmSpace {
        let d = game.top_priority(sub).unwrap_or(0);
        let width = SpmSpace::width_for(side, d);
        let mut caps = vec![0u32; width];
        for v in sub.iter() {
            let p = game.priority(v);
            if side.wins_priority(p) {
                caps[SpmSpace::index_of(side, p)] += 1;
            }
        }
        SpmSpace { side, width, caps }
    }

    /// Space with explicit caps; `caps[i]` bounds the counter of the i-th
    /// priority of the side's parity (0,2,4,... or 1,3,5,...).
    pub fn with_caps(side: Player, caps: Vec<u32>) -> SpmSpace {
        SpmSpace {
            side,
            width: caps.len(),
            caps,
        }
    }

    fn width_for(side: Player, d: Priority) -> usize {
        match side {
            Player::Even => d as usize / 2 + 1,
            Player::Odd => (d as usize + 1) / 2,
        }
    }

    /// Counter index of a priority with the side's parity.
    fn index_of(side: Player, p: Priority) -> usize {
        match side {
            Player::Even => p as usize / 2,
            Player::Odd => (p as usize - 1) / 2,
        }
    }

    /// Lowest counter index whose priority is >= p.
    fn min_index(&self, p: Priority) -> usize {
        match self.side {
            Player::Even => (p as usize + 1) / 2,
            Player::Odd => p as usize / 2,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Minimal measure above (strictly when pr(v) has the side's parity)
    /// the source measure after zeroing every position below pr(v); carries
    /// through saturated counters and into `Top`.
    fn prog_slice(&self, src: &[u32], src_top: bool, p: Priority, dst: &mut [u32]) -> bool {
        if src_top {
            return true;
        }
        let mi = self.min_index(p);
        dst[..mi].fill(0);
        dst[mi..self.width].copy_from_slice(&src[mi..self.width]);
        if self.side.wins_priority(p) {
            let mut i = SpmSpace::index_of(self.side, p);
            loop {
                if i == self.width {
                    return true;
                }
                if dst[i] < self.caps[i] {
                    dst[i] += 1;
                    return false;
                }
                dst[i] = 0;
                i += 1;
            }
        }
        false
    }

    fn compare_slices(&self, a: &[u32], b: &[u32], from: usize) -> Ordering {
        for i in (from..self.width).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// The derived ordering restricted to positions >= p; `p = 0` is the
    /// full total order.
    pub fn compare(&self, a: &SpmMeasure, b: &SpmMeasure, p: Priority) -> Ordering {
        match (a, b) {
            (SpmMeasure::Top, SpmMeasure::Top) => Ordering::Equal,
            (SpmMeasure::Top, _) => Ordering::Greater,
            (_, SpmMeasure::Top) => Ordering::Less,
            (SpmMeasure::Tuple(a), SpmMeasure::Tuple(b)) => {
                self.compare_slices(a, b, self.min_index(p))
            }
        }
    }

    pub fn prog(&self, m: &SpmMeasure, p: Priority) -> SpmMeasure {
        match m {
            SpmMeasure::Top => SpmMeasure::Top,
            SpmMeasure::Tuple(src) => {
                let mut dst = vec![0u32; self.width];
                if self.prog_slice(src, false, p, &mut dst) {
                    SpmMeasure::Top
                } else {
                    SpmMeasure::Tuple(dst)
                }
            }
        }
    }
}

/// The even-side play summary of a priority sequence: for each even p, how
/// often p occurs in the maximal prefix it dominates.
pub fn measure_of_play(play: &[Priority], d: Priority) -> SpmMeasure {
    let width = SpmSpace::width_for(Player::Even, d);
    let mut counts = vec![0u32; width];
    for (i, &p) in play.iter().enumerate() {
        if p % 2 != 0 {
            continue;
        }
        // Dominated stretch of p: the prefix before the first priority > p.
        let stretch_end = play.iter().position(|&q| q > p).unwrap_or(play.len());
        if i < stretch_end {
            counts[p as usize / 2] += 1;
        }
    }
    SpmMeasure::Tuple(counts)
}

#[derive(Clone, Debug)]
pub struct SpmConfig {
    /// Improvement: lower a priority's cap when one of its vertices tops.
    pub lower_caps: bool,
    /// Improvement: maintain both players' measures for both strategies.
    pub dual: bool,
    /// Improvement: occasionally top the complement of the attractor to
    /// the liftable vertices in the dual table. Requires `dual`.
    pub attractor_halt: bool,
    /// Shuffle the initial lifting order (testing aid; the fixpoint is
    /// order independent).
    pub shuffle_seed: Option<u64>,
}

impl Default for SpmConfig {
    fn default() -> Self {
        SpmConfig {
            lower_caps: true,
            dual: true,
            attractor_halt: true,
            shuffle_seed: None,
        }
    }
}

struct SideTable {
    side: Player,
    space: SpmSpace,
    counts: Vec<u32>,
    top: Vec<bool>,
    queue: VecDeque<Vertex>,
    queued: Vec<bool>,
}

impl SideTable {
    fn new(side: Player, game: &ParityGame, sub: &VertexSet) -> SideTable {
        let space = SpmSpace::for_subgame(side, game, sub);
        let n = game.num_vertices();
        let width = space.width;
        SideTable {
            side,
            space,
            counts: vec![0; n * width.max(1)],
            top: vec![false; n],
            queue: VecDeque::new(),
            queued: vec![false; n],
        }
    }

    #[inline]
    fn slice(&self, v: Vertex) -> &[u32] {
        let w = self.space.width.max(1);
        &self.counts[v * w..v * w + self.space.width]
    }

    fn enqueue(&mut self, v: Vertex) {
        if !self.queued[v] && !self.top[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }

    /// Tops a vertex, lowers the cap of its priority when enabled, and
    /// reports measures that the lowered cap now saturates.
    fn raise_to_top(
        &mut self,
        game: &ParityGame,
        sub: &VertexSet,
        v: Vertex,
        lower_caps: bool,
        requeue: &mut Vec<Vertex>,
    ) {
        debug_assert!(!self.top[v]);
        self.top[v] = true;
        let p = game.priority(v);
        if lower_caps && self.side.wins_priority(p) {
            let idx = SpmSpace::index_of(self.side, p);
            if self.space.caps[idx] > 0 {
                self.space.caps[idx] -= 1;
                let cap = self.space.caps[idx];
                // Measures at or above the new cap can carry differently
                // now; their predecessors must be reconsidered.
                for w in sub.iter() {
                    if !self.top[w] && self.slice(w)[idx] >= cap {
                        requeue.push(w);
                    }
                }
            }
        }
    }
}

/// Solves a subgame by dual-table lifting to the simultaneous fixpoint.
/// Vertices topped in the even table are won by Even, the rest by Odd;
/// each player's strategy is read off the opposing table at the fixpoint.
pub fn spm_solve(
    game: &ParityGame,
    sub: &VertexSet,
    config: &SpmConfig,
    time_limit: Option<Duration>,
) -> Result<Solution, SolveError> {
    let n = game.num_vertices();
    let mut solution = Solution::new(n);
    if sub.is_empty() {
        return Ok(solution);
    }
    let deadline = time_limit.map(|d| Instant::now() + d);

    let mut even = SideTable::new(Player::Even, game, sub);
    let mut odd_table = if config.dual {
        Some(SideTable::new(Player::Odd, game, sub))
    } else {
        None
    };

    // Seed in priority order; optionally shuffled to exercise order
    // independence of the fixpoint.
    let mut order: Vec<Vertex> = sub.iter().collect();
    order.sort_by_key(|&v| (game.priority(v), v));
    if let Some(seed) = config.shuffle_seed {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    for &v in &order {
        even.enqueue(v);
        if let Some(odd) = odd_table.as_mut() {
            odd.enqueue(v);
        }
    }

    let mut lifts_since_halt = 0usize;
    let mut ticks = 0u32;
    let halt_cadence = sub.len().max(64);

    loop {
        let even_empty = even.queue.is_empty();
        let odd_empty = odd_table.as_ref().map_or(true, |t| t.queue.is_empty());
        if even_empty && odd_empty {
            break;
        }
        ticks += 1;
        if ticks % 4096 == 0 {
            if let Some(deadline) = deadline {
                if Instant::now() > deadline {
                    return Err(SolveError::TimedOut);
                }
            }
        }

        if let Some(v) = even.queue.pop_front() {
            even.queued[v] = false;
            if lift(game, sub, &mut even, v, config.lower_caps) {
                lifts_since_halt += 1;
            }
        }
        if let Some(odd) = odd_table.as_mut() {
            if let Some(v) = odd.queue.pop_front() {
                odd.queued[v] = false;
                if lift(game, sub, odd, v, config.lower_caps) {
                    lifts_since_halt += 1;
                }
            }
        }

        if config.attractor_halt && lifts_since_halt >= halt_cadence {
            lifts_since_halt = 0;
            if let Some(odd) = odd_table.as_mut() {
                halt_check(game, sub, &mut even, odd, config.lower_caps);
            }
        }
    }

    // Winners from the even fixpoint; the tables agree at the fixpoint.
    for v in sub.iter() {
        solution.winner[v] = if even.top[v] { Player::Even } else { Player::Odd };
        if let Some(odd) = odd_table.as_ref() {
            debug_assert!(
                !(even.top[v] && odd.top[v]),
                "vertex {v} topped in both tables"
            );
            debug_assert_eq!(
                odd.top[v],
                !even.top[v],
                "dual fixpoints disagree at vertex {v}"
            );
        }
    }

    // The losing player in each table minimizes; its fixpoint argmin is a
    // winning strategy on its own region.
    let mut scratch = vec![0u32; even.space.width.max(1)];
    for v in sub.iter() {
        let winner = solution.winner[v];
        if game.owner(v) != winner {
            continue;
        }
        let table = match winner {
            Player::Odd => &even,
            Player::Even => match odd_table.as_ref() {
                Some(odd) => odd,
                None => continue,
            },
        };
        solution.strategy[v] = argmin_prog(game, sub, table, v, &mut scratch);
    }
    Ok(solution)
}

/// One lift: the side's owner maximizes over successor progs, the opponent
/// minimizes; the result never decreases the current measure. Returns
/// whether the measure changed, enqueueing predecessors if so.
fn lift(
    game: &ParityGame,
    sub: &VertexSet,
    table: &mut SideTable,
    v: Vertex,
    lower_caps: bool,
) -> bool {
    if table.top[v] || !sub.contains(v) {
        return false;
    }
    let p = game.priority(v);
    let width = table.space.width;
    let maximize = game.owner(v) == table.side;

    let mut best: Vec<u32> = vec![0; width];
    let mut best_top = false;
    let mut have = false;
    let mut prog = vec![0u32; width];
    for &w in game.successors(v) {
        if !sub.contains(w) {
            continue;
        }
        let prog_top = table
            .space
            .prog_slice(table.slice(w), table.top[w], p, &mut prog);
        if !have {
            best_top = prog_top;
            best.copy_from_slice(&prog);
            have = true;
        } else {
            let better = match (prog_top, best_top) {
                (true, true) => false,
                (true, false) => maximize,
                (false, true) => !maximize,
                (false, false) => {
                    let ord = table.space.compare_slices(&prog, &best, 0);
                    if maximize {
                        ord == Ordering::Greater
                    } else {
                        ord == Ordering::Less
                    }
                }
            };
            if better {
                best_top = prog_top;
                best.copy_from_slice(&prog);
            }
        }
        if best_top && maximize {
            break;
        }
    }
    debug_assert!(have, "subgame is total");

    // Monotone update: only grow.
    let grows = if best_top {
        true
    } else {
        table.space.compare_slices(&best, table.slice(v), 0) == Ordering::Greater
    };
    if !grows {
        return false;
    }
    if best_top {
        let mut requeue = Vec::new();
        table.raise_to_top(game, sub, v, lower_caps, &mut requeue);
        for w in requeue {
            for &u in game.predecessors(w) {
                if sub.contains(u) {
                    table.enqueue(u);
                }
            }
        }
    } else {
        let w = table.space.width.max(1);
        table.counts[v * w..v * w + width].copy_from_slice(&best);
    }
    for &u in game.predecessors(v) {
        if sub.contains(u) {
            table.enqueue(u);
        }
    }
    true
}

/// Halting analysis: vertices that cannot rise any more are final, so the
/// non-topped ones among them are won by the other player and top
/// immediately in the dual table. Applied in both directions.
///
/// "Can rise" propagates backward from the liftable set like an attractor
/// for the measured player, with one tightening: a minimizing owner's value
/// moves only when all of its min-attaining successors move, so only those
/// edges transmit. With cap lowering enabled a measure can also rise when a
/// future top drops a cap below one of its counters, without any successor
/// rising first; such measures seed the propagation as well.
fn halt_check(
    game: &ParityGame,
    sub: &VertexSet,
    even: &mut SideTable,
    odd: &mut SideTable,
    lower_caps: bool,
) {
    let n = game.num_vertices();
    for flip in 0..2 {
        let (this, dual): (&mut SideTable, &mut SideTable) = if flip == 0 {
            (&mut *even, &mut *odd)
        } else {
            (&mut *odd, &mut *even)
        };
        let width = this.space.width;

        let mut in_z = vec![false; n];
        let mut bfs: Vec<Vertex> = Vec::new();
        for &v in this.queue.iter() {
            if !in_z[v] {
                in_z[v] = true;
                bfs.push(v);
            }
        }
        if lower_caps {
            for w in sub.iter() {
                if in_z[w] || this.top[w] {
                    continue;
                }
                let counts = this.slice(w);
                let sensitive = (0..width)
                    .any(|i| this.space.caps[i] > 0 && counts[i] < this.space.caps[i]);
                if sensitive {
                    in_z[w] = true;
                    bfs.push(w);
                }
            }
        }

        // Min-prog value and number of attaining successors per minimizer.
        let mut min_top = vec![false; n];
        let mut min_val = vec![0u32; n * width.max(1)];
        let mut pending = vec![0u32; n];
        let mut prog = vec![0u32; width];
        for u in sub.iter() {
            if this.top[u] || game.owner(u) == this.side {
                continue;
            }
            let p = game.priority(u);
            let mut have = false;
            for &w in game.successors(u) {
                if !sub.contains(w) {
                    continue;
                }
                let top = this
                    .space
                    .prog_slice(this.slice(w), this.top[w], p, &mut prog);
                let better = !have
                    || match (top, min_top[u]) {
                        (true, true) => false,
                        (true, false) => false,
                        (false, true) => true,
                        (false, false) => {
                            this.space.compare_slices(
                                &prog,
                                &min_val[u * width.max(1)..u * width.max(1) + width],
                                0,
                            ) == Ordering::Less
                        }
                    };
                if better {
                    min_top[u] = top;
                    min_val[u * width.max(1)..u * width.max(1) + width].copy_from_slice(&prog);
                    pending[u] = 1;
                    have = true;
                } else if top == min_top[u]
                    && (top
                        || this.space.compare_slices(
                            &prog,
                            &min_val[u * width.max(1)..u * width.max(1) + width],
                            0,
                        ) == Ordering::Equal)
                {
                    pending[u] += 1;
                }
            }
        }

        let mut head = 0;
        while head < bfs.len() {
            let w = bfs[head];
            head += 1;
            for &u in game.predecessors(w) {
                if !sub.contains(u) || in_z[u] || this.top[u] {
                    continue;
                }
                let transmits = if game.owner(u) == this.side {
                    true
                } else {
                    // Only a min-attaining edge can move the minimum.
                    let p = game.priority(u);
                    let top = this
                        .space
                        .prog_slice(this.slice(w), this.top[w], p, &mut prog);
                    let attaining = top == min_top[u]
                        && (top
                            || this.space.compare_slices(
                                &prog,
                                &min_val[u * width.max(1)..u * width.max(1) + width],
                                0,
                            ) == Ordering::Equal);
                    if attaining {
                        pending[u] -= 1;
                        pending[u] == 0
                    } else {
                        false
                    }
                };
                if transmits {
                    in_z[u] = true;
                    bfs.push(u);
                }
            }
        }

        let mut requeue = Vec::new();
        for v in sub.iter() {
            if !in_z[v] && !this.top[v] && !dual.top[v] {
                dual.raise_to_top(game, sub, v, lower_caps, &mut requeue);
                for &u in game.predecessors(v) {
                    if sub.contains(u) {
                        dual.enqueue(u);
                    }
                }
            }
        }
        for w in requeue {
            for &u in game.predecessors(w) {
                if sub.contains(u) {
                    dual.enqueue(u);
                }
            }
        }
    }
}

/// First successor attaining the minimal prog in the given table.
fn argmin_prog(
    game: &ParityGame,
    sub: &VertexSet,
    table: &SideTable,
    v: Vertex,
    scratch: &mut Vec<u32>,
) -> Option<Vertex> {
    let p = game.priority(v);
    let width = table.space.width;
    scratch.resize(width.max(1), 0);
    let mut best: Option<(bool, Vec<u32>, Vertex)> = None;
    let mut prog = vec![0u32; width];
    for &w in game.successors(v) {
        if !sub.contains(w) {
            continue;
        }
        let prog_top = table
            .space
            .prog_slice(table.slice(w), table.top[w], p, &mut prog);
        let better = match &best {
            None => true,
            Some((best_top, best_counts, _)) => match (prog_top, best_top) {
                (true, _) => false,
                (false, true) => true,
                (false, false) => {
                    table.space.compare_slices(&prog, best_counts, 0) == Ordering::Less
                }
            },
        };
        if better {
            best = Some((prog_top, prog.clone(), w));
        }
    }
    best.map(|(_, _, w)| w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even_space(caps: &[u32]) -> SpmSpace {
        SpmSpace::with_caps(Player::Even, caps.to_vec())
    }

    fn tuple(counts: &[u32]) -> SpmMeasure {
        SpmMeasure::Tuple(counts.to_vec())
    }

    #[test]
    fn ordering_examples() {
        // d = 4: counters for priorities 0, 2, 4.
        let space = even_space(&[9, 9, 9]);
        assert_eq!(
            space.compare(&tuple(&[1, 1, 1]), &tuple(&[0, 0, 2]), 0),
            Ordering::Less
        );
        assert_eq!(
            space.compare(&tuple(&[3, 2, 1]), &tuple(&[0, 3, 1]), 0),
            Ordering::Less
        );
        assert_eq!(
            space.compare(&tuple(&[1, 2, 1]), &tuple(&[0, 2, 1]), 1),
            Ordering::Equal
        );
        assert_eq!(
            space.compare(&tuple(&[3, 3, 1]), &tuple(&[0, 0, 1]), 4),
            Ordering::Equal
        );
        assert_eq!(space.compare(&tuple(&[3, 3, 3]), &SpmMeasure::Top, 0), Ordering::Less);
    }

    #[test]
    fn prog_carries_through_caps() {
        // Two vertices of priority 2 and two of priority 4.
        let space = even_space(&[0, 2, 2]);
        assert_eq!(space.prog(&tuple(&[0, 2, 0]), 2), tuple(&[0, 0, 1]));
        assert_eq!(space.prog(&SpmMeasure::Top, 2), SpmMeasure::Top);
        assert_eq!(space.prog(&tuple(&[0, 2, 2]), 2), SpmMeasure::Top);
    }

    #[test]
    fn prog_zeroes_below_an_odd_priority() {
        let space = even_space(&[9, 9]);
        // pr(v) = 1: positions below 1 reset, no increment.
        assert_eq!(space.prog(&tuple(&[1, 1]), 1), tuple(&[0, 1]));
    }

    #[test]
    fn saturation_walk_reaches_top_in_eight_steps() {
        let space = even_space(&[0, 2, 2]);
        let mut seq = vec![tuple(&[0, 2, 0])];
        for _ in 0..7 {
            let next = space.prog(seq.last().unwrap(), 2);
            seq.push(next.clone());
            if next == SpmMeasure::Top {
                break;
            }
        }
        assert_eq!(
            seq,
            vec![
                tuple(&[0, 2, 0]),
                tuple(&[0, 0, 1]),
                tuple(&[0, 1, 1]),
                tuple(&[0, 2, 1]),
                tuple(&[0, 0, 2]),
                tuple(&[0, 1, 2]),
                tuple(&[0, 2, 2]),
                SpmMeasure::Top,
            ]
        );
    }

    #[test]
    fn play_summary_counts_dominated_stretches() {
        let play: Vec<Priority> = vec![0, 0, 1, 0, 2, 1, 2, 0, 2, 3, 2, 1, 4, 2, 6, 5, 6, 2, 0, 1];
        assert_eq!(measure_of_play(&play, 6), tuple(&[2, 3, 1, 2]));
    }

    #[test]
    fn single_odd_self_loop_never_tops() {
        let g = ParityGame::from_parts(
            vec![1],
            vec![Player::Odd],
            vec![vec![0]],
            vec![None],
        )
        .unwrap();
        let s = spm_solve(&g, &VertexSet::full(1), &SpmConfig::default(), None).unwrap();
        assert_eq!(s.winner, vec![Player::Odd]);
        assert_eq!(s.strategy[0], Some(0));
    }

    #[test]
    fn agrees_with_oracle_on_small_games() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x11);
        for round in 0..300 {
            let n = rng.random_range(1..=8);
            let g = crate::generate::tiny_random_game(&mut rng, n, 8);
            let expected = crate::oracle::brute_force_solve(&g).unwrap();
            let s = spm_solve(&g, &VertexSet::full(n), &SpmConfig::default(), None).unwrap();
            assert_eq!(s.winner, expected.winner, "round {round}:\n{g:?}");
            crate::verify::verify(&g, &s)
                .unwrap_or_else(|e| panic!("round {round}: rejected: {e}\n{g:?}"));
        }
    }

    #[test]
    fn improvements_do_not_change_winners() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x22);
        for _ in 0..120 {
            let n = rng.random_range(2..=7);
            let g = crate::generate::tiny_random_game(&mut rng, n, 6);
            let full = VertexSet::full(n);
            let reference =
                spm_solve(&g, &full, &SpmConfig::default(), None).unwrap();
            for config in [
                SpmConfig { lower_caps: false, ..SpmConfig::default() },
                SpmConfig { attractor_halt: false, ..SpmConfig::default() },
                SpmConfig {
                    lower_caps: false,
                    attractor_halt: false,
                    ..SpmConfig::default()
                },
                SpmConfig {
                    dual: false,
                    attractor_halt: false,
                    ..SpmConfig::default()
                },
            ] {
                let s = spm_solve(&g, &full, &config, None).unwrap();
                assert_eq!(s.winner, reference.winner, "{config:?}\n{g:?}");
            }
        }
    }

    #[test]
    fn lifting_order_does_not_change_winners() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x33);
        for _ in 0..60 {
            let n = rng.random_range(2..=7);
            let g = crate::generate::tiny_random_game(&mut rng, n, 6);
            let full = VertexSet::full(n);
            let a = spm_solve(&g, &full, &SpmConfig::default(), None).unwrap();
            for seed in 0..3 {
                let config = SpmConfig {
                    shuffle_seed: Some(seed),
                    ..SpmConfig::default()
                };
                let b = spm_solve(&g, &full, &config, None).unwrap();
                assert_eq!(a.winner, b.winner);
            }
        }
    }
}
