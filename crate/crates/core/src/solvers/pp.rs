//! Priority promotion.
//!
//! The solver keeps one measure per vertex (initially its priority) and
//! decomposes the unsolved game top-down into regions by attracting, at
//! each present measure `p`, for the player of `p`'s parity within the
//! subgame of vertices at or below `p`. All plays staying inside a region
//! are won by its player.
//!
//! A region with no opponent escape downwards is closed: if the opponent
//! can still leave to a higher region of the region's player, the region is
//! promoted to the lowest such target and the decomposition below the
//! target is recomputed; with no escape at all the region is a dominion,
//! its attractor in the whole remaining game is solved and removed, and the
//! search restarts.
//!
//! Variant reset policies after a promotion to `q`:
//!
//! * `pp`: every vertex below `q` forgets its progress (measure back to its
//!   priority);
//! * `ppp`: only the opponent's lower regions reset;
//! * `rr`: only the opponent's lower regions with an edge into the promoted
//!   set reset (exact predicate of this implementation; the variants never
//!   differ in winners, only in work);
//! * `dp`: promotions are delayed and batched while consecutive closed
//!   regions share a target, on top of the `ppp` reset;
//! * `rrdp`: the `dp` delay with the `rr` reset.
//!
//! Retained (non-reset) regions can go stale in one narrow way: a vertex
//! reset below keeps edges into a retained higher region that would have
//! absorbed it. The decomposition then reaches the bottom with an open
//! region; the solver restarts with resets degraded to the full `pp`
//! policy, which cannot stall. Winners are unaffected; the event is counted
//! in the statistics.

use crate::game::{ParityGame, Player, Priority, Solution, Vertex, VertexSet};
use crate::solvers::SolveError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PpVariant {
    Pp,
    PpPlus,
    Rr,
    Dp,
    RrDp,
}

impl PpVariant {
    fn delays(self) -> bool {
        matches!(self, PpVariant::Dp | PpVariant::RrDp)
    }

    fn rr_reset(self) -> bool {
        matches!(self, PpVariant::Rr | PpVariant::RrDp)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PpStats {
    pub promotions: u64,
    pub dominions: u64,
    /// Full restarts forced by stale retained regions.
    pub degradations: u64,
}

enum Status {
    Open,
    Escapes(Priority),
    Dominion,
}

struct Pending {
    target: Priority,
    sources: Vec<Priority>,
}

struct PpSolver<'a> {
    game: &'a ParityGame,
    variant: PpVariant,
    degraded: bool,

    measure: Vec<Priority>,
    solved: Vec<bool>,
    winner: Vec<Player>,
    strategy: Vec<Option<Vertex>>,
    unsolved: usize,

    /// Region assignment of the current pass: `stamp[v] == epoch`.
    stamp: Vec<u64>,
    epoch: u64,
    /// Regions built in the current descent, outermost (highest) first.
    levels: Vec<(Priority, Vec<Vertex>)>,
    /// Vertices per measure, with lazily discarded stale entries.
    buckets: Vec<Vec<Vertex>>,

    escapes: Vec<u32>,
    escape_stamp: Vec<u64>,
    escape_clock: u64,

    pending: Option<Pending>,
    stats: PpStats,
}

impl<'a> PpSolver<'a> {
    fn new(game: &'a ParityGame, sub: &VertexSet, variant: PpVariant) -> PpSolver<'a> {
        let n = game.num_vertices();
        let d = game.max_priority().unwrap_or(0) as usize;
        let mut solver = PpSolver {
            game,
            variant,
            degraded: false,
            measure: vec![0; n],
            solved: (0..n).map(|v| !sub.contains(v)).collect(),
            winner: vec![Player::Even; n],
            strategy: vec![None; n],
            unsolved: sub.len(),
            stamp: vec![0; n],
            epoch: 0,
            levels: Vec::new(),
            buckets: vec![Vec::new(); d + 1],
            escapes: vec![0; n],
            escape_stamp: vec![0; n],
            escape_clock: 0,
            pending: None,
            stats: PpStats::default(),
        };
        solver.reset_measures();
        solver
    }

    #[inline]
    fn assigned(&self, v: Vertex) -> bool {
        self.stamp[v] == self.epoch
    }

    fn reset_measures(&mut self) {
        for bucket in &mut self.buckets {
            bucket.clear();
        }
        for v in 0..self.game.num_vertices() {
            if !self.solved[v] {
                let p = self.game.priority(v);
                self.measure[v] = p;
                self.buckets[p as usize].push(v);
            }
        }
    }

    fn begin_pass(&mut self) {
        self.epoch += 1;
        self.levels.clear();
        self.pending = None;
    }

    /// Highest measure with a live (unsolved, unassigned) vertex at or
    /// below `from`. Compacts stale bucket entries on the way.
    fn next_level(&mut self, from: Priority) -> Option<Priority> {
        let mut m = from as usize + 1;
        while m > 0 {
            m -= 1;
            let mut i = 0;
            let mut live = false;
            while i < self.buckets[m].len() {
                let v = self.buckets[m][i];
                if self.solved[v] || self.measure[v] as usize != m {
                    self.buckets[m].swap_remove(i);
                    continue;
                }
                if !self.assigned(v) {
                    live = true;
                    break;
                }
                i += 1;
            }
            if live {
                return Some(m as Priority);
            }
        }
        None
    }

    /// Builds the region at measure `p`: every live vertex at `p` seeds an
    /// attractor for the parity player of `p` over the live subgame.
    /// Attracted vertices take measure `p` and a strategy edge when owned
    /// by the player; seeds get their strategy cleared.
    fn build_region(&mut self, p: Priority) -> Vec<Vertex> {
        let game = self.game;
        let alpha = Player::from_priority(p);
        self.escape_clock += 1;
        let clock = self.escape_clock;

        let mut region = Vec::new();
        let mut i = 0;
        while i < self.buckets[p as usize].len() {
            let v = self.buckets[p as usize][i];
            if self.solved[v] || self.measure[v] != p {
                self.buckets[p as usize].swap_remove(i);
                continue;
            }
            i += 1;
            if !self.assigned(v) {
                self.stamp[v] = self.epoch;
                // Top-priority seeds pick a fresh move when a dominion is
                // extracted; promoted seeds keep the witness strategy of
                // the region they were promoted from.
                if game.priority(v) == p {
                    self.strategy[v] = None;
                }
                region.push(v);
            }
        }

        let mut head = 0;
        while head < region.len() {
            let v = region[head];
            head += 1;
            for &u in game.predecessors(v) {
                if self.solved[u] || self.assigned(u) {
                    continue;
                }
                debug_assert!(self.measure[u] <= p);
                let attracted = if game.owner(u) == alpha {
                    self.strategy[u] = Some(v);
                    true
                } else {
                    if self.escape_stamp[u] != clock {
                        self.escape_stamp[u] = clock;
                        // Open edges within the level subgame: unsolved and
                        // either unassigned or part of this region.
                        self.escapes[u] = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| {
                                !self.solved[w]
                                    && (!self.assigned(w) || self.measure[w] == p)
                            })
                            .count() as u32;
                    }
                    self.escapes[u] -= 1;
                    self.escapes[u] == 0
                };
                if attracted {
                    self.stamp[u] = self.epoch;
                    self.measure[u] = p;
                    self.buckets[p as usize].push(u);
                    region.push(u);
                }
            }
        }
        region
    }

    fn status(&self, p: Priority, region: &[Vertex]) -> Status {
        let game = self.game;
        let alpha = Player::from_priority(p);
        let mut target: Option<Priority> = None;
        let mut alpha_forced = false;
        for &u in region {
            if game.owner(u) != alpha {
                for &w in game.successors(u) {
                    if self.solved[w] {
                        continue;
                    }
                    if !self.assigned(w) {
                        // Escape into the live subgame below.
                        return Status::Open;
                    }
                    let m = self.measure[w];
                    if m > p {
                        if Player::from_priority(m) == alpha {
                            target = Some(target.map_or(m, |t: Priority| t.min(m)));
                        } else {
                            // Stale retained region of the opponent; treat
                            // as open and let lower activity resolve it.
                            return Status::Open;
                        }
                    }
                }
            } else if !alpha_forced {
                let stays = game.successors(u).iter().any(|&w| {
                    !self.solved[w] && self.assigned(w) && self.measure[w] == p
                });
                if !stays {
                    alpha_forced = true;
                }
            }
        }
        match target {
            Some(q) => Status::Escapes(q),
            None if alpha_forced => Status::Open,
            None => Status::Dominion,
        }
    }

    /// Applies the promotion of `sources` (current measures) to `target`:
    /// moved vertices take the target measure, lower regions reset per the
    /// variant policy, and the decomposition below the target is dropped.
    fn promote(&mut self, sources: &[Priority], current: (Priority, Vec<Vertex>), target: Priority) {
        self.stats.promotions += 1;
        let game = self.game;
        let alpha = Player::from_priority(target);
        let n = game.num_vertices();

        // Collect the moved set: the current region plus any delayed source
        // regions still recorded on the level stack.
        let mut moved: Vec<Vertex> = current.1;
        for &(m, ref verts) in &self.levels {
            if sources.contains(&m) && m != current.0 {
                moved.extend(verts.iter().copied());
            }
        }
        let mut is_moved = vec![false; 0];
        if self.variant.rr_reset() && !self.degraded {
            is_moved = vec![false; n];
            for &v in &moved {
                is_moved[v] = true;
            }
        }

        // Reset policy over everything strictly below the target.
        let full_reset = matches!(self.variant, PpVariant::Pp) || self.degraded;
        let abar = alpha.opponent();
        let mut rr_flagged: Vec<bool> = Vec::new();
        if self.variant.rr_reset() && !self.degraded {
            // A lower opponent region resets iff it has an edge into the
            // promoted set.
            rr_flagged = vec![false; self.buckets.len()];
            for v in 0..n {
                if self.solved[v] || self.measure[v] >= target {
                    continue;
                }
                if Player::from_priority(self.measure[v]) != abar {
                    continue;
                }
                if game.successors(v).iter().any(|&w| is_moved[w]) {
                    rr_flagged[self.measure[v] as usize] = true;
                }
            }
        }
        for v in 0..n {
            if self.solved[v] || self.measure[v] >= target {
                continue;
            }
            let m = self.measure[v];
            let reset = if full_reset {
                true
            } else if Player::from_priority(m) != abar {
                false
            } else if self.variant.rr_reset() {
                rr_flagged[m as usize]
            } else {
                true
            };
            if reset && m != game.priority(v) {
                let p = game.priority(v);
                self.measure[v] = p;
                self.buckets[p as usize].push(v);
            }
        }

        // The moved set takes the target measure.
        for &v in &moved {
            self.measure[v] = target;
            self.buckets[target as usize].push(v);
            self.stamp[v] = 0;
        }

        // Drop the decomposition at and below the target.
        while let Some(&(m, _)) = self.levels.last() {
            if m > target {
                break;
            }
            let (_, verts) = self.levels.pop().unwrap();
            for v in verts {
                self.stamp[v] = 0;
            }
        }
    }

    /// Removes the dominion seeded by `region` (player of parity `p`)
    /// together with its attractor in the whole remaining game.
    fn extract_dominion(&mut self, p: Priority, region: Vec<Vertex>) {
        self.stats.dominions += 1;
        let game = self.game;
        let alpha = Player::from_priority(p);
        self.escape_clock += 1;
        let clock = self.escape_clock;

        // Seeds keep their region strategies; players' seeds that lack one
        // take any successor inside the region.
        for &v in &region {
            if game.owner(v) == alpha && self.strategy[v].is_none() {
                self.strategy[v] = game
                    .successors(v)
                    .iter()
                    .copied()
                    .find(|&w| !self.solved[w] && self.assigned(w) && self.measure[w] == p);
                debug_assert!(self.strategy[v].is_some(), "dominion seed can stay");
            }
        }

        let mut dominion = region;
        let mut in_dominion = vec![false; game.num_vertices()];
        for &v in &dominion {
            in_dominion[v] = true;
        }
        let mut head = 0;
        while head < dominion.len() {
            let v = dominion[head];
            head += 1;
            for &u in game.predecessors(v) {
                if self.solved[u] || in_dominion[u] {
                    continue;
                }
                let attracted = if game.owner(u) == alpha {
                    self.strategy[u] = Some(v);
                    true
                } else {
                    if self.escape_stamp[u] != clock {
                        self.escape_stamp[u] = clock;
                        self.escapes[u] = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| !self.solved[w])
                            .count() as u32;
                    }
                    self.escapes[u] -= 1;
                    self.escapes[u] == 0
                };
                if attracted {
                    in_dominion[u] = true;
                    dominion.push(u);
                }
            }
        }
        for &v in &dominion {
            self.solved[v] = true;
            self.winner[v] = alpha;
            if game.owner(v) != alpha {
                self.strategy[v] = None;
            }
        }
        self.unsolved -= dominion.len();
    }

    fn run(&mut self) {
        'search: while self.unsolved > 0 {
            self.begin_pass();
            let d = self.buckets.len() as Priority - 1;
            let mut p = match self.next_level(d) {
                Some(p) => p,
                None => break,
            };
            loop {
                let region = self.build_region(p);
                match self.status(p, &region) {
                    Status::Open => {
                        self.levels.push((p, region));
                        match self.next_level(p.saturating_sub(1)) {
                            Some(next) if next < p => p = next,
                            _ => {
                                if let Some(pending) = self.pending.take() {
                                    // Bottom reached with a delayed
                                    // promotion: flush it now.
                                    p = self.flush(pending);
                                    continue;
                                }
                                // Stale retained regions blocked the
                                // search; degrade to full resets.
                                debug_assert!(
                                    self.variant != PpVariant::Pp && !self.degraded,
                                    "open bottom region without retention"
                                );
                                self.stats.degradations += 1;
                                self.degraded = true;
                                self.reset_measures();
                                continue 'search;
                            }
                        }
                    }
                    Status::Escapes(q) => {
                        if self.variant.delays() && !self.degraded {
                            match self.pending.take() {
                                None => {
                                    self.pending = Some(Pending {
                                        target: q,
                                        sources: vec![p],
                                    });
                                    self.levels.push((p, region));
                                    match self.next_level(p.saturating_sub(1)) {
                                        Some(next) if next < p => p = next,
                                        _ => {
                                            let pending = self.pending.take().unwrap();
                                            p = self.flush(pending);
                                        }
                                    }
                                }
                                Some(mut pending) if pending.target == q => {
                                    pending.sources.push(p);
                                    self.pending = Some(pending);
                                    self.levels.push((p, region));
                                    match self.next_level(p.saturating_sub(1)) {
                                        Some(next) if next < p => p = next,
                                        _ => {
                                            let pending = self.pending.take().unwrap();
                                            p = self.flush(pending);
                                        }
                                    }
                                }
                                Some(pending) => {
                                    // A different target: flush the delayed
                                    // promotion and rebuild from there; the
                                    // current region is rediscovered later.
                                    self.levels.push((p, region));
                                    p = self.flush(pending);
                                }
                            }
                        } else {
                            self.promote(&[p], (p, region), q);
                            p = q;
                        }
                    }
                    Status::Dominion => {
                        self.extract_dominion(p, region);
                        if self.unsolved == 0 {
                            break 'search;
                        }
                        self.reset_measures();
                        continue 'search;
                    }
                }
            }
        }
    }

    /// Applies a delayed promotion batch; returns the measure to rebuild
    /// from.
    fn flush(&mut self, pending: Pending) -> Priority {
        // The sources' region lists live on the level stack; hand the
        // topmost source as the "current" region and let promote() pick the
        // rest up by measure.
        let target = pending.target;
        let mut current: Option<(Priority, Vec<Vertex>)> = None;
        let mut kept = Vec::new();
        for entry in self.levels.drain(..) {
            if pending.sources.contains(&entry.0) && current.is_none() {
                current = Some(entry);
            } else {
                kept.push(entry);
            }
        }
        self.levels = kept;
        let current = current.expect("pending sources are on the stack");
        self.promote(&pending.sources, current, target);
        target
    }

    fn into_solution(self, sub: &VertexSet) -> Solution {
        let n = self.game.num_vertices();
        let mut solution = Solution::new(n);
        for v in sub.iter() {
            solution.winner[v] = self.winner[v];
            solution.strategy[v] = if self.game.owner(v) == self.winner[v] {
                self.strategy[v]
            } else {
                None
            };
        }
        solution
    }
}

/// Solves `sub` with the selected priority promotion variant.
pub fn pp_solve(
    game: &ParityGame,
    sub: &VertexSet,
    variant: PpVariant,
) -> Result<Solution, SolveError> {
    Ok(pp_solve_with_stats(game, sub, variant).0)
}

pub fn pp_solve_with_stats(
    game: &ParityGame,
    sub: &VertexSet,
    variant: PpVariant,
) -> (Solution, PpStats) {
    let mut solver = PpSolver::new(game, sub, variant);
    solver.run();
    let stats = solver.stats;
    (solver.into_solution(sub), stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    const VARIANTS: [PpVariant; 5] = [
        PpVariant::Pp,
        PpVariant::PpPlus,
        PpVariant::Rr,
        PpVariant::Dp,
        PpVariant::RrDp,
    ];

    #[test]
    fn empty_subgame_is_empty_solution() {
        let g = ParityGame::from_parts(vec![0], vec![Player::Even], vec![vec![0]], vec![None])
            .unwrap();
        for variant in VARIANTS {
            let s = pp_solve(&g, &VertexSet::empty(1), variant).unwrap();
            assert_eq!(s.strategy, vec![None]);
        }
    }

    #[test]
    fn self_loop_games_resolve_by_parity() {
        for variant in VARIANTS {
            for (pr, expected) in [(2, Player::Even), (1, Player::Odd)] {
                for owner in [Player::Even, Player::Odd] {
                    let g = ParityGame::from_parts(vec![pr], vec![owner], vec![vec![0]], vec![None])
                        .unwrap();
                    let s = pp_solve(&g, &VertexSet::full(1), variant).unwrap();
                    assert_eq!(s.winner, vec![expected], "{variant:?} pr={pr} {owner}");
                }
            }
        }
    }

    #[test]
    fn all_variants_agree_with_the_oracle() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x99);
        for round in 0..250 {
            let n = rng.random_range(1..=8);
            let g = crate::generate::tiny_random_game(&mut rng, n, 8);
            let expected = crate::oracle::brute_force_solve(&g).unwrap();
            let full = VertexSet::full(n);
            for variant in VARIANTS {
                let s = pp_solve(&g, &full, variant).unwrap();
                assert_eq!(s.winner, expected.winner, "round {round} {variant:?}:\n{g:?}");
                crate::verify::verify(&g, &s).unwrap_or_else(|e| {
                    panic!("round {round} {variant:?} rejected: {e}\n{g:?}")
                });
            }
        }
    }

    #[test]
    fn promotions_are_counted() {
        // A small game that needs at least one promotion: an odd top
        // priority guarding an even cycle.
        let g = ParityGame::from_parts(
            vec![0, 1, 2],
            vec![Player::Even, Player::Odd, Player::Even],
            vec![vec![1], vec![2], vec![0]],
            vec![None; 3],
        )
        .unwrap();
        let (s, stats) = pp_solve_with_stats(&g, &VertexSet::full(3), PpVariant::Pp);
        assert_eq!(s.winner, vec![Player::Even; 3]);
        assert!(stats.promotions > 0);
        assert!(stats.dominions > 0);
    }
}
