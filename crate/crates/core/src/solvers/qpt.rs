//! Quasi-polynomial progress measures.
//!
//! A measure for the measured player ("even statistics" below; the odd side
//! mirrors every parity) is a k-tuple over priorities and the blank `⊥`,
//! plus the maximal `Top`. Position `i` stands for a play stretch holding
//! up to `2^i` vertices of even priority; its entry is the priority of the
//! stretch's first dominating vertex, which may be odd. `k` is the least
//! number with fewer than `2^k` even-priority vertices in the subgame.
//!
//! Position 0 holds the newest stretch (closest to the measured vertex) and
//! prepending the vertex priority `p` works like a binary counter:
//!
//! * `p` of the measured parity absorbs the run of entries it dominates and
//!   lands in the first free slot, so a filled run of positions `0..i`
//!   backs the claim of `2^i` chained even vertices exactly; carrying past
//!   position `k-1` certifies by pigeonhole that some even vertex repeats
//!   on a cycle whose top is even, and the measure lifts to `Top`.
//! * An entry above `p` blocks it: the player must pass a higher priority
//!   before continuing, so the prepend restarts as a fresh one-vertex
//!   stretch, which the monotone lift simply ignores unless it overtakes
//!   the stored measure. A placement is likewise refused under a pending
//!   adverse dominator, which keeps every recorded stretch chain honest.
//! * `p` of the opposite parity collapses the leading stretches it
//!   dominates into one stretch headed by `p`, and vanishes into the front
//!   stretch when it dominates nothing.
//!
//! Entries compare blank < adverse parity < measured parity, higher values
//! ranking lower within a parity: a high adverse head is a looming
//! dominator, while a low own head marks settled progress that is cheap to
//! extend. Tuples compare by the most significant differing position.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::game::{ParityGame, Player, Priority, Solution, Vertex, VertexSet};
use crate::solvers::SolveError;

/// Blank entry.
pub const BLANK: u32 = u32::MAX;

/// A measure: `Top`, or `k` entries with position 0 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QptMeasure {
    Top,
    Tuple(Vec<u32>),
}

impl QptMeasure {
    /// Sizes of the stretches a tuple denotes, in ascending position order:
    /// `2^i` for every non-blank position `i`.
    pub fn stretch_sizes(&self) -> Vec<u64> {
        match self {
            QptMeasure::Top => Vec::new(),
            QptMeasure::Tuple(entries) => entries
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != BLANK)
                .map(|(i, _)| 1u64 << i)
                .collect(),
        }
    }
}

/// Measure space for one side of a subgame.
#[derive(Clone, Debug)]
pub struct QptSpace {
    side: Player,
    k: usize,
}

impl QptSpace {
    pub fn for_subgame(side: Player, game: &ParityGame, sub: &VertexSet) -> QptSpace {
        let count = sub
            .iter()
            .filter(|&v| side.wins_priority(game.priority(v)))
            .count();
        QptSpace {
            side,
            k: k_for(count),
        }
    }

    pub fn with_k(side: Player, k: usize) -> QptSpace {
        QptSpace { side, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry order for the positionwise tie-break: blank, then adverse
    /// parity, then the measured parity; within a parity higher values rank
    /// lower. A high adverse head is a looming dominator, while a low own
    /// head marks settled progress that any continuation extends.
    fn entry_rank(&self, e: u32) -> u64 {
        if e == BLANK {
            return 0;
        }
        if self.side.wins_priority(e) {
            (1 << 34) - e as u64
        } else {
            (1 << 32) - e as u64
        }
    }

    /// Recorded progress: own vertices summed over the stretches headed by
    /// the measured parity. Adverse-headed stretches contribute nothing
    /// until the player passes their dominator.
    fn recorded_count(&self, m: &[u32]) -> u64 {
        let mut count = 0;
        for i in 0..self.k {
            let e = m[i];
            if e != BLANK && self.side.wins_priority(e) {
                count += 1 << i;
            }
        }
        count
    }

    /// Measures compare by recorded progress first, then positionwise from
    /// the most significant entry.
    fn compare_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.recorded_count(a).cmp(&self.recorded_count(b)) {
            Ordering::Equal => {}
            other => return other,
        }
        for i in (0..self.k).rev() {
            match self.entry_rank(a[i]).cmp(&self.entry_rank(b[i])) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &QptMeasure, b: &QptMeasure) -> Ordering {
        match (a, b) {
            (QptMeasure::Top, QptMeasure::Top) => Ordering::Equal,
            (QptMeasure::Top, _) => Ordering::Greater,
            (_, QptMeasure::Top) => Ordering::Less,
            (QptMeasure::Tuple(a), QptMeasure::Tuple(b)) => self.compare_slices(a, b),
        }
    }

    /// Prepends priority `p` to the measure in `src`, writing into `dst`.
    /// Returns true when the result is `Top`.
    fn prog_slice(&self, src: &[u32], src_top: bool, p: Priority, dst: &mut [u32]) -> bool {
        if src_top {
            return true;
        }
        dst[..self.k].copy_from_slice(&src[..self.k]);
        if self.side.wins_priority(p) {
            // The fresh one-vertex stretch absorbs the run of stretches it
            // dominates, so the merged stretch is headed by its first
            // counted vertex and a filled run of positions 0..i backs the
            // claim of 2^i chained own vertices exactly.
            let mut i = 0;
            while i < self.k && dst[i] != BLANK && dst[i] <= p {
                i += 1;
            }
            if i == self.k {
                return true;
            }
            let e = dst[i];
            if e == BLANK {
                dst[i] = p;
                dst[..i].fill(BLANK);
            } else if self.side.wins_priority(e) {
                // A bigger own stretch in the way: the vertex joins its
                // span behind the head, recording nothing new.
            } else {
                // Adverse dominator: the merged run evicts it. Everything
                // above stays, because an adverse entry is always below
                // the heads above it, which cover the dropped span.
                dst[i] = p;
                dst[..i].fill(BLANK);
            }
            false
        } else {
            // Collapse the leading stretches dominated by p into one
            // stretch headed by p. A dominator too small to collapse
            // anything still stands in front of the record; it is kept in
            // the free slot below the front stretch so later merges cannot
            // silently chain across it.
            let mut target: Option<usize> = None;
            let mut front: Option<usize> = None;
            for i in 0..self.k {
                let e = dst[i];
                if e == BLANK {
                    continue;
                }
                if e <= p {
                    target = Some(i);
                } else {
                    front = Some(i);
                    break;
                }
            }
            if let Some(i) = target {
                dst[i] = p;
                dst[..i].fill(BLANK);
            } else if let Some(f) = front {
                if let Some(slot) = (0..f).rev().find(|&j| dst[j] == BLANK) {
                    dst[slot] = p;
                    dst[..slot].fill(BLANK);
                }
            }
            false
        }
    }

    pub fn prog(&self, m: &QptMeasure, p: Priority) -> QptMeasure {
        match m {
            QptMeasure::Top => QptMeasure::Top,
            QptMeasure::Tuple(src) => {
                let mut dst = vec![BLANK; self.k];
                if self.prog_slice(src, false, p, &mut dst) {
                    QptMeasure::Top
                } else {
                    QptMeasure::Tuple(dst)
                }
            }
        }
    }
}

/// Least k with `count < 2^k`.
fn k_for(count: usize) -> usize {
    let mut k = 0;
    while (1usize << k) <= count {
        k += 1;
    }
    k
}

struct SideTable {
    side: Player,
    space: QptSpace,
    entries: Vec<u32>,
    top: Vec<bool>,
    queue: VecDeque<Vertex>,
    queued: Vec<bool>,
}

impl SideTable {
    fn new(side: Player, game: &ParityGame, sub: &VertexSet) -> SideTable {
        let space = QptSpace::for_subgame(side, game, sub);
        let n = game.num_vertices();
        let k = space.k;
        SideTable {
            side,
            space,
            entries: vec![BLANK; n * k.max(1)],
            top: vec![false; n],
            queue: VecDeque::new(),
            queued: vec![false; n],
        }
    }

    #[inline]
    fn slice(&self, v: Vertex) -> &[u32] {
        let w = self.space.k.max(1);
        &self.entries[v * w..v * w + self.space.k]
    }

    fn enqueue(&mut self, v: Vertex) {
        if !self.queued[v] && !self.top[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }
}

/// Dual-table lifting to the simultaneous fixpoint, with the same
/// attractor-based halting analysis as small progress measures.
pub fn qpt_solve(
    game: &ParityGame,
    sub: &VertexSet,
    time_limit: Option<Duration>,
) -> Result<Solution, SolveError> {
    qpt_solve_with(game, sub, true, time_limit)
}

/// As [`qpt_solve`], with the halting analysis togglable (testing aid; the
/// fixpoint winners do not depend on it).
pub fn qpt_solve_with(
    game: &ParityGame,
    sub: &VertexSet,
    attractor_halt: bool,
    time_limit: Option<Duration>,
) -> Result<Solution, SolveError> {
    let n = game.num_vertices();
    let mut solution = Solution::new(n);
    if sub.is_empty() {
        return Ok(solution);
    }
    let deadline = time_limit.map(|d| Instant::now() + d);

    let mut even = SideTable::new(Player::Even, game, sub);
    let mut odd = SideTable::new(Player::Odd, game, sub);

    let mut order: Vec<Vertex> = sub.iter().collect();
    order.sort_by_key(|&v| (game.priority(v), v));
    for &v in &order {
        even.enqueue(v);
        odd.enqueue(v);
    }

    let mut lifts_since_halt = 0usize;
    let mut ticks = 0u32;
    let halt_cadence = sub.len().max(64);

    while !even.queue.is_empty() || !odd.queue.is_empty() {
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
            if lift(game, sub, &mut even, v) {
                lifts_since_halt += 1;
            }
        }
        if let Some(v) = odd.queue.pop_front() {
            odd.queued[v] = false;
            if lift(game, sub, &mut odd, v) {
                lifts_since_halt += 1;
            }
        }
        if attractor_halt && lifts_since_halt >= halt_cadence {
            lifts_since_halt = 0;
            halt_check(game, sub, &mut even, &mut odd);
        }
    }

    for v in sub.iter() {
        solution.winner[v] = if even.top[v] { Player::Even } else { Player::Odd };
        #[cfg(debug_assertions)]
        if even.top[v] == odd.top[v] {
            for w in sub.iter() {
                eprintln!(
                    "  vertex {w}: even top={} {:?} | odd top={} {:?}",
                    even.top[w],
                    even.slice(w),
                    odd.top[w],
                    odd.slice(w)
                );
            }
            debug_assert!(!(even.top[v] && odd.top[v]), "vertex {v} topped twice");
            debug_assert_eq!(odd.top[v], !even.top[v], "dual fixpoints disagree at {v}");
        }
    }
    for v in sub.iter() {
        let winner = solution.winner[v];
        if game.owner(v) != winner {
            continue;
        }
        let table = match winner {
            Player::Odd => &even,
            Player::Even => &odd,
        };
        solution.strategy[v] = argmin_prog(game, sub, table, v);
    }
    Ok(solution)
}

fn lift(game: &ParityGame, sub: &VertexSet, table: &mut SideTable, v: Vertex) -> bool {
    if table.top[v] || !sub.contains(v) {
        return false;
    }
    let p = game.priority(v);
    let k = table.space.k;
    let maximize = game.owner(v) == table.side;

    let mut best = vec![BLANK; k];
    let mut best_top = false;
    let mut have = false;
    let mut prog = vec![BLANK; k];
    for &w in game.successors(v) {
        if !sub.contains(w) {
            continue;
        }
        let prog_top = table
            .space
            .prog_slice(table.slice(w), table.top[w], p, &mut prog);
        let better = if !have {
            true
        } else {
            match (prog_top, best_top) {
                (true, true) => false,
                (true, false) => maximize,
                (false, true) => !maximize,
                (false, false) => {
                    let ord = table.space.compare_slices(&prog, &best);
                    if maximize {
                        ord == Ordering::Greater
                    } else {
                        ord == Ordering::Less
                    }
                }
            }
        };
        if better {
            best_top = prog_top;
            best.copy_from_slice(&prog);
            have = true;
        }
        if best_top && maximize {
            break;
        }
    }
    debug_assert!(have, "subgame is total");

    let grows = if best_top {
        true
    } else if table.top[v] {
        false
    } else {
        table.space.compare_slices(&best, table.slice(v)) == Ordering::Greater
    };
    if !grows {
        return false;
    }
    if best_top {
        table.top[v] = true;
    } else {
        let w = table.space.k.max(1);
        table.entries[v * w..v * w + k].copy_from_slice(&best);
    }
    #[cfg(debug_assertions)]
    if std::env::var_os("QPT_TRACE").is_some() {
        eprintln!(
            "store side={:?} v={} top={} {:?}",
            table.side,
            v,
            best_top,
            if best_top { Vec::new() } else { best.clone() }
        );
    }
    for &u in game.predecessors(v) {
        if sub.contains(u) {
            table.enqueue(u);
        }
    }
    true
}

/// Vertices that cannot rise any more are final; the untopped ones among
/// them are won by the other player and top in the dual table. "Can rise"
/// propagates backward from the liftable set; a minimizing owner transmits
/// only through its min-attaining edges, since only those can move its
/// minimum.
fn halt_check(game: &ParityGame, sub: &VertexSet, even: &mut SideTable, odd: &mut SideTable) {
    let n = game.num_vertices();
    for flip in 0..2 {
        let (this, dual): (&mut SideTable, &mut SideTable) = if flip == 0 {
            (&mut *even, &mut *odd)
        } else {
            (&mut *odd, &mut *even)
        };
        let k = this.space.k;
        let kw = k.max(1);

        let mut in_z = vec![false; n];
        let mut bfs: Vec<Vertex> = Vec::new();
        for &v in this.queue.iter() {
            if !in_z[v] {
                in_z[v] = true;
                bfs.push(v);
            }
        }

        let mut min_top = vec![false; n];
        let mut min_val = vec![BLANK; n * kw];
        let mut pending = vec![0u32; n];
        let mut prog = vec![BLANK; k];
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
                        (true, _) => false,
                        (false, true) => true,
                        (false, false) => {
                            this.space
                                .compare_slices(&prog, &min_val[u * kw..u * kw + k])
                                == Ordering::Less
                        }
                    };
                if better {
                    min_top[u] = top;
                    min_val[u * kw..u * kw + k].copy_from_slice(&prog);
                    pending[u] = 1;
                    have = true;
                } else if top == min_top[u]
                    && (top
                        || this
                            .space
                            .compare_slices(&prog, &min_val[u * kw..u * kw + k])
                            == Ordering::Equal)
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
                    let p = game.priority(u);
                    let top = this
                        .space
                        .prog_slice(this.slice(w), this.top[w], p, &mut prog);
                    let attaining = top == min_top[u]
                        && (top
                            || this
                                .space
                                .compare_slices(&prog, &min_val[u * kw..u * kw + k])
                                == Ordering::Equal);
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

        for v in sub.iter() {
            if !in_z[v] && !this.top[v] && !dual.top[v] {
                dual.top[v] = true;
                for &u in game.predecessors(v) {
                    if sub.contains(u) {
                        dual.enqueue(u);
                    }
                }
            }
        }
    }
}

fn argmin_prog(game: &ParityGame, sub: &VertexSet, table: &SideTable, v: Vertex) -> Option<Vertex> {
    let p = game.priority(v);
    let k = table.space.k;
    let mut best: Option<(bool, Vec<u32>, Vertex)> = None;
    let mut prog = vec![BLANK; k];
    for &w in game.successors(v) {
        if !sub.contains(w) {
            continue;
        }
        let prog_top = table
            .space
            .prog_slice(table.slice(w), table.top[w], p, &mut prog);
        let better = match &best {
            None => true,
            Some((best_top, best_entries, _)) => match (prog_top, best_top) {
                (true, _) => false,
                (false, true) => true,
                (false, false) => table.space.compare_slices(&prog, best_entries) == Ordering::Less,
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

    #[test]
    fn stretch_decoding_of_the_eight_tuple() {
        let m = QptMeasure::Tuple(vec![2, 2, 4, BLANK, 5, BLANK, 6, BLANK]);
        assert_eq!(m.stretch_sizes(), vec![1, 2, 4, 16, 64]);
    }

    #[test]
    fn blank_tuple_is_minimal_and_top_is_maximal() {
        let space = QptSpace::with_k(Player::Even, 4);
        let bottom = QptMeasure::Tuple(vec![BLANK; 4]);
        for entries in [
            vec![0, BLANK, BLANK, BLANK],
            vec![1, BLANK, BLANK, BLANK],
            vec![BLANK, BLANK, BLANK, 7],
        ] {
            let m = QptMeasure::Tuple(entries);
            assert_eq!(space.compare(&bottom, &m), Ordering::Less);
            assert_eq!(space.compare(&m, &QptMeasure::Top), Ordering::Less);
        }
        assert_eq!(space.compare(&bottom, &bottom), Ordering::Equal);
    }

    #[test]
    fn k_is_the_least_power_bound() {
        assert_eq!(k_for(0), 0);
        assert_eq!(k_for(1), 1);
        assert_eq!(k_for(3), 2);
        assert_eq!(k_for(4), 3);
        assert_eq!(k_for(7), 3);
        assert_eq!(k_for(8), 4);
    }

    #[test]
    fn even_prepend_counts_like_binary() {
        let space = QptSpace::with_k(Player::Even, 3);
        let m0 = QptMeasure::Tuple(vec![BLANK, BLANK, BLANK]);
        let m1 = space.prog(&m0, 2);
        assert_eq!(m1, QptMeasure::Tuple(vec![2, BLANK, BLANK]));
        let m2 = space.prog(&m1, 2);
        assert_eq!(m2, QptMeasure::Tuple(vec![BLANK, 2, BLANK]));
        let m3 = space.prog(&m2, 2);
        assert_eq!(m3, QptMeasure::Tuple(vec![2, 2, BLANK]));
        let m4 = space.prog(&m3, 2);
        assert_eq!(m4, QptMeasure::Tuple(vec![BLANK, BLANK, 2]));
        // Overflow past the last position certifies a repeat.
        let m7 = space.prog(&space.prog(&space.prog(&m4, 2), 2), 2);
        assert_eq!(m7, QptMeasure::Tuple(vec![2, 2, 2]));
        assert_eq!(space.prog(&m7, 2), QptMeasure::Top);
    }

    #[test]
    fn top_when_successor_is_top() {
        let space = QptSpace::with_k(Player::Even, 2);
        assert_eq!(space.prog(&QptMeasure::Top, 1), QptMeasure::Top);
    }

    #[test]
    fn odd_prepend_collapses_dominated_stretches() {
        let space = QptSpace::with_k(Player::Even, 3);
        let m = QptMeasure::Tuple(vec![2, 2, 6]);
        // 3 dominates the leading stretches headed by 2 but not the 6.
        assert_eq!(space.prog(&m, 3), QptMeasure::Tuple(vec![BLANK, 3, 6]));
        // 1 dominates nothing and vanishes into the front stretch.
        assert_eq!(space.prog(&m, 1), QptMeasure::Tuple(vec![2, 2, 6]));
    }

    #[test]
    fn agrees_with_oracle_on_small_games() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x44);
        for round in 0..400 {
            let n = rng.random_range(1..=7);
            let g = crate::generate::tiny_random_game(&mut rng, n, 7);
            let expected = crate::oracle::brute_force_solve(&g).unwrap();
            let s = qpt_solve(&g, &VertexSet::full(n), None).unwrap();
            assert_eq!(s.winner, expected.winner, "round {round}:\n{g:?}");
            crate::verify::verify(&g, &s)
                .unwrap_or_else(|e| panic!("round {round}: rejected: {e}\n{g:?}"));
        }
    }
}
