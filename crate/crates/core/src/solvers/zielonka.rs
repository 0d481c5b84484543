//! Attractor-based recursive solver, run as a flat loop over an explicit
//! stack of frames.
//!
//! A single region array stores for every vertex the index `r` of the
//! attractor call that claimed it (`BOT` when unclaimed, `DISABLED` when
//! outside the solve). A frame's subgame is exactly the set of vertices
//! with value `>= r_entry`, where `r_entry` is the frame's initial `r`;
//! unclaimed vertices qualify because `BOT` is the maximum value. The
//! second recursion runs in tail position, which keeps the stack depth
//! bounded by the number of distinct priorities plus one.
//!
//! The optimized configuration extends the top attractor with the
//! attractors of the next highest vertices while they keep the same parity,
//! and skips the second recursion when the opponent attractor adds no
//! vertices. The unoptimized configuration attracts a single layer and
//! recurses whenever the opponent won anything.
//!
//! With `workers > 1` attractor expansions run lock free on a work stealing
//! pool: a vertex is claimed by a compare-and-swap on its region entry and
//! escape counters are decremented atomically; the claiming task spawns the
//! expansion of its vertex.

use std::sync::atomic::{AtomicU32, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::game::{ParityGame, Player, Solution, Vertex, VertexSet};

const BOT: u64 = u64::MAX;
const DISABLED: u64 = 0;
const NO_STRATEGY: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq)]
enum Phase {
    Enter,
    AfterFirst,
}

struct Frame {
    /// Subgame vertices in ascending priority order.
    verts: Vec<Vertex>,
    /// Hand-back list for the parent when this frame replaced a sibling in
    /// tail position; `None` reports `verts` itself.
    report: Option<Vec<Vertex>>,
    r_entry: u64,
    alpha: Player,
    /// Vertices claimed by this frame's own attractor, in claim order.
    a_list: Vec<Vertex>,
    phase: Phase,
}

pub struct ZlkSolver<'a> {
    game: &'a ParityGame,
    optimized: bool,
    workers: usize,
    pool: Option<rayon::ThreadPool>,

    region: Vec<AtomicU64>,
    strategy: Vec<AtomicUsize>,
    winner: Vec<Option<Player>>,
    /// Open escape edges per opponent vertex; lazily stamped per frame in
    /// the sequential path, eagerly initialized per call in the parallel
    /// path.
    escapes: Vec<AtomicU32>,
    stamp: Vec<u64>,
    clock: u64,
    /// Membership marks for the opponent attractor (seeds plus additions).
    wmark: Vec<u64>,
    wclock: u64,
    r: u64,
    queue: Vec<Vertex>,
    /// Completed frame's vertex list, handed back to the parent.
    done_slot: Vec<Vertex>,
    free_lists: Vec<Vec<Vertex>>,
    pub attractor_calls: u64,
}

impl<'a> ZlkSolver<'a> {
    pub fn new(game: &'a ParityGame) -> ZlkSolver<'a> {
        let n = game.num_vertices();
        ZlkSolver {
            game,
            optimized: true,
            workers: 1,
            pool: None,
            region: (0..n).map(|_| AtomicU64::new(DISABLED)).collect(),
            strategy: (0..n).map(|_| AtomicUsize::new(NO_STRATEGY)).collect(),
            winner: vec![None; n],
            escapes: (0..n).map(|_| AtomicU32::new(0)).collect(),
            stamp: vec![0; n],
            clock: 0,
            wmark: vec![0; n],
            wclock: 0,
            r: 1,
            queue: Vec::new(),
            done_slot: Vec::new(),
            free_lists: Vec::new(),
            attractor_calls: 0,
        }
    }

    /// Disables the extended attractor and the skipped second recursion.
    pub fn unoptimized(mut self) -> Self {
        self.optimized = false;
        self
    }

    /// Runs attractor expansions on `workers` threads when > 1; one worker
    /// selects the plain sequential path.
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        if self.workers > 1 {
            self.pool = Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(self.workers)
                    .build()
                    .expect("thread pool"),
            );
        }
        self
    }

    #[inline]
    fn region_of(&self, v: Vertex) -> u64 {
        self.region[v].load(Ordering::Relaxed)
    }

    /// Claimed by the frame entered at `r_entry` or one of its descendants,
    /// or still unclaimed (`BOT` is the maximum).
    #[inline]
    fn in_subgame(&self, v: Vertex, r_entry: u64) -> bool {
        self.region_of(v) >= r_entry
    }

    #[inline]
    fn set_strategy(&self, v: Vertex, w: Vertex) {
        self.strategy[v].store(w, Ordering::Relaxed);
    }

    pub fn solve(&mut self, subgame: &VertexSet) -> Solution {
        let n = self.game.num_vertices();
        for v in 0..n {
            self.region[v].store(
                if subgame.contains(v) { BOT } else { DISABLED },
                Ordering::Relaxed,
            );
            self.strategy[v].store(NO_STRATEGY, Ordering::Relaxed);
            self.winner[v] = None;
        }
        self.r = 1;

        let mut root: Vec<Vertex> = subgame.iter().collect();
        if !self.game.is_priority_sorted() {
            root.sort_by_key(|&v| (self.game.priority(v), v));
        }

        let mut stack = vec![self.new_frame(root)];
        while !stack.is_empty() {
            let phase = stack.last().unwrap().phase;
            match phase {
                Phase::Enter => self.step_enter(&mut stack),
                Phase::AfterFirst => self.step_after_first(&mut stack),
            }
        }

        let mut solution = Solution::new(n);
        for v in subgame.iter() {
            let winner = self.winner[v].expect("solved vertex");
            solution.winner[v] = winner;
            if self.game.owner(v) == winner {
                let s = self.strategy[v].load(Ordering::Relaxed);
                debug_assert_ne!(s, NO_STRATEGY, "winner-owned vertex {v} lacks strategy");
                solution.strategy[v] = Some(s);
            }
        }
        solution
    }

    fn step_enter(&mut self, stack: &mut Vec<Frame>) {
        {
            let frame = stack.last_mut().unwrap();
            if frame.verts.is_empty() {
                let done = stack.pop().unwrap();
                self.finish(done);
                return;
            }
            let top = self.game.priority(*frame.verts.last().unwrap());
            frame.alpha = Player::from_priority(top);
            frame.r_entry = self.r;
            frame.phase = Phase::AfterFirst;
        }
        // Split the borrow: take the frame out, run its attractor, put the
        // pieces back.
        let mut frame = stack.pop().unwrap();
        self.frame_attract(&mut frame);
        let mut child_verts = self.take_list();
        child_verts.extend(
            frame
                .verts
                .iter()
                .copied()
                .filter(|&v| self.region_of(v) == BOT),
        );
        debug_assert!(
            child_verts.is_empty()
                || self.game.priority(*child_verts.last().unwrap())
                    < self.game.priority(*frame.verts.last().unwrap()),
            "first recursion must strictly lower the top priority"
        );
        stack.push(frame);
        debug_assert!(
            stack.len() < self.distinct_priorities_bound(),
            "stack depth exceeds the distinct priority bound"
        );
        stack.push(self.new_frame(child_verts));
    }

    fn step_after_first(&mut self, stack: &mut Vec<Frame>) {
        let (alpha, r_entry) = {
            let frame = stack.last().unwrap();
            (frame.alpha, frame.r_entry)
        };
        let abar = alpha.opponent();
        let child_verts = std::mem::take(&mut self.done_slot);

        // Attract for the opponent to its winning region of the first
        // recursion's subgame.
        self.wclock += 1;
        let wstamp = self.wclock;
        self.queue.clear();
        for &v in &child_verts {
            if self.winner[v] == Some(abar) {
                self.wmark[v] = wstamp;
                self.queue.push(v);
            }
        }
        let seeds = self.queue.len();
        let added = if seeds == 0 {
            Vec::new()
        } else {
            self.opponent_attract(abar, r_entry, wstamp)
        };
        self.recycle(child_verts);

        let skip = if self.optimized {
            added.is_empty()
        } else {
            seeds == 0
        };

        if skip {
            // No growth: alpha wins its attractor, the rest stands.
            let mut frame = stack.pop().unwrap();
            let a_list = std::mem::take(&mut frame.a_list);
            for &v in &a_list {
                self.winner[v] = Some(alpha);
            }
            for &v in &a_list {
                if self.game.owner(v) == alpha
                    && self.strategy[v].load(Ordering::Relaxed) == NO_STRATEGY
                {
                    let w = self
                        .game
                        .successors(v)
                        .iter()
                        .copied()
                        .find(|&w| self.in_subgame(w, r_entry) && self.winner[w] == Some(alpha))
                        .expect("winning top vertex keeps a winning move");
                    self.set_strategy(v, w);
                }
            }
            frame.a_list = a_list;
            self.finish(frame);
        } else {
            for &v in &added {
                self.winner[v] = Some(abar);
            }
            // Reset discipline: exactly the subgame minus the opponent
            // attractor returns to BOT; solve it in tail position.
            let mut frame = stack.pop().unwrap();
            let mut next_verts = self.take_list();
            for &v in &frame.verts {
                if self.wmark[v] != wstamp {
                    self.region[v].store(BOT, Ordering::Relaxed);
                    next_verts.push(v);
                }
            }
            let report = frame
                .report
                .take()
                .unwrap_or_else(|| std::mem::take(&mut frame.verts));
            self.recycle_frame(frame);
            let mut replacement = self.new_frame(next_verts);
            replacement.report = Some(report);
            stack.push(replacement);
        }
    }

    fn distinct_priorities_bound(&self) -> usize {
        // Loose static bound: priorities are within 0..=max, plus slack for
        // the root and an empty leaf.
        self.game.max_priority().map_or(3, |d| d as usize + 3)
    }

    fn new_frame(&mut self, verts: Vec<Vertex>) -> Frame {
        let a_list = self.take_list();
        Frame {
            verts,
            report: None,
            r_entry: 0,
            alpha: Player::Even,
            a_list,
            phase: Phase::Enter,
        }
    }

    fn take_list(&mut self) -> Vec<Vertex> {
        self.free_lists.pop().unwrap_or_default()
    }

    fn recycle(&mut self, mut list: Vec<Vertex>) {
        list.clear();
        self.free_lists.push(list);
    }

    fn recycle_frame(&mut self, frame: Frame) {
        self.recycle(frame.verts);
        self.recycle(frame.a_list);
        if let Some(report) = frame.report {
            self.recycle(report);
        }
    }

    /// Pops a completed frame: hand its subgame list back through the slot.
    fn finish(&mut self, frame: Frame) {
        let Frame {
            verts,
            report,
            a_list,
            ..
        } = frame;
        let hand_back = match report {
            Some(r) => {
                self.recycle(verts);
                r
            }
            None => verts,
        };
        let old = std::mem::replace(&mut self.done_slot, hand_back);
        self.recycle(old);
        self.recycle(a_list);
    }

    /// The frame's attractor: absorb the top priority set and, in the
    /// optimized configuration, keep absorbing the next highest sets while
    /// they have the frame's parity. Each layer is one attractor call with
    /// its own claim index.
    fn frame_attract(&mut self, frame: &mut Frame) {
        let game = self.game;
        let alpha = frame.alpha;
        let r_entry = frame.r_entry;
        // Escape counters are stamped once per frame: claims from earlier
        // layers have already consumed their decrements.
        self.clock += 1;
        let mut cursor = frame.verts.len();
        loop {
            while cursor > 0 && self.region_of(frame.verts[cursor - 1]) != BOT {
                cursor -= 1;
            }
            if cursor == 0 {
                break;
            }
            let p = game.priority(frame.verts[cursor - 1]);
            if !alpha.wins_priority(p) {
                break;
            }
            let r = self.r;
            self.r += 1;
            self.attractor_calls += 1;

            let qstart = frame.a_list.len();
            let mut i = cursor;
            while i > 0 && game.priority(frame.verts[i - 1]) == p {
                let v = frame.verts[i - 1];
                if self.region_of(v) == BOT {
                    self.region[v].store(r, Ordering::Relaxed);
                    self.strategy[v].store(NO_STRATEGY, Ordering::Relaxed);
                    frame.a_list.push(v);
                }
                i -= 1;
            }
            if self.workers > 1 {
                self.expand_parallel(alpha, r, r_entry, &mut frame.a_list, qstart);
            } else {
                self.expand(alpha, r, r_entry, &mut frame.a_list, qstart);
            }
            if !self.optimized {
                break;
            }
        }
    }

    /// Sequential backward expansion over `list[qstart..]`, claiming into
    /// the same list in BFS order.
    fn expand(
        &mut self,
        player: Player,
        r: u64,
        r_entry: u64,
        list: &mut Vec<Vertex>,
        qstart: usize,
    ) {
        let game = self.game;
        let mut head = qstart;
        while head < list.len() {
            let v = list[head];
            head += 1;
            for &u in game.predecessors(v) {
                if self.region_of(u) != BOT {
                    continue;
                }
                let attracted = if game.owner(u) == player {
                    self.set_strategy(u, v);
                    true
                } else {
                    if self.stamp[u] != self.clock {
                        self.stamp[u] = self.clock;
                        let open = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| self.in_subgame(w, r_entry))
                            .count() as u32;
                        self.escapes[u].store(open, Ordering::Relaxed);
                    }
                    let left = self.escapes[u].load(Ordering::Relaxed) - 1;
                    self.escapes[u].store(left, Ordering::Relaxed);
                    left == 0
                };
                if attracted {
                    self.region[u].store(r, Ordering::Relaxed);
                    list.push(u);
                }
            }
        }
    }

    /// Attractor for the opponent to its marked winning region. Members are
    /// recognized by `wmark == wstamp`; newly attracted vertices are claimed
    /// at the fresh index and returned.
    fn opponent_attract(&mut self, player: Player, r_entry: u64, wstamp: u64) -> Vec<Vertex> {
        let r = self.r;
        self.r += 1;
        self.attractor_calls += 1;
        if self.workers > 1 {
            return self.opponent_attract_parallel(player, r, r_entry, wstamp);
        }
        let game = self.game;
        self.clock += 1;
        let mut added = Vec::new();
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &u in game.predecessors(v) {
                if self.wmark[u] == wstamp || !self.in_subgame(u, r_entry) {
                    continue;
                }
                let attracted = if game.owner(u) == player {
                    self.set_strategy(u, v);
                    true
                } else {
                    if self.stamp[u] != self.clock {
                        self.stamp[u] = self.clock;
                        let open = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| self.in_subgame(w, r_entry))
                            .count() as u32;
                        self.escapes[u].store(open, Ordering::Relaxed);
                    }
                    let left = self.escapes[u].load(Ordering::Relaxed) - 1;
                    self.escapes[u].store(left, Ordering::Relaxed);
                    left == 0
                };
                if attracted {
                    self.wmark[u] = wstamp;
                    self.region[u].store(r, Ordering::Relaxed);
                    added.push(u);
                    self.queue.push(u);
                }
            }
        }
        added
    }

    // ----- lock-free parallel expansion ---------------------------------

    /// One attractor layer on the work stealing pool. Escape counters are
    /// initialized eagerly for the still-unclaimed subgame; a successor
    /// counts as open when it is unclaimed or belongs to this very layer,
    /// since exactly those are expanded by this call.
    fn expand_parallel(
        &mut self,
        player: Player,
        r: u64,
        r_entry: u64,
        list: &mut Vec<Vertex>,
        qstart: usize,
    ) {
        let game = self.game;
        let _ = r_entry;
        {
            let solver: &ZlkSolver = self;
            let pool = solver.pool.as_ref().expect("pool");
            pool.install(|| {
                use rayon::prelude::*;
                (0..game.num_vertices()).into_par_iter().for_each(|u| {
                    if solver.region_of(u) == BOT && game.owner(u) != player {
                        let open = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| {
                                let rw = solver.region_of(w);
                                rw == BOT || rw == r
                            })
                            .count() as u32;
                        solver.escapes[u].store(open, Ordering::Relaxed);
                    }
                });
            });
        }
        let seeds: Vec<Vertex> = list[qstart..].to_vec();
        let claims = self.par_expand(player, r, seeds);
        list.extend(claims);
    }

    fn opponent_attract_parallel(
        &mut self,
        player: Player,
        r: u64,
        r_entry: u64,
        wstamp: u64,
    ) -> Vec<Vertex> {
        let game = self.game;
        {
            let solver: &ZlkSolver = self;
            let pool = solver.pool.as_ref().expect("pool");
            pool.install(|| {
                use rayon::prelude::*;
                (0..game.num_vertices()).into_par_iter().for_each(|u| {
                    if solver.in_subgame(u, r_entry)
                        && solver.wmark[u] != wstamp
                        && game.owner(u) != player
                    {
                        let open = game
                            .successors(u)
                            .iter()
                            .filter(|&&w| solver.in_subgame(w, r_entry))
                            .count() as u32;
                        solver.escapes[u].store(open, Ordering::Relaxed);
                    }
                });
            });
        }
        let seeds = self.queue.clone();
        let added = self.par_expand_opponent(player, r, r_entry, wstamp, seeds);
        for &v in &added {
            self.wmark[v] = wstamp;
            self.queue.push(v);
        }
        added
    }

    fn par_expand(&self, player: Player, r: u64, seeds: Vec<Vertex>) -> Vec<Vertex> {
        let claims = Mutex::new(Vec::new());
        let pool = self.pool.as_ref().expect("pool");
        pool.install(|| {
            rayon::scope(|s| {
                for &v in &seeds {
                    let claims = &claims;
                    s.spawn(move |s| self.par_task(player, r, v, claims, s));
                }
            });
        });
        claims.into_inner().unwrap()
    }

    /// Expansion task: try to attract every predecessor of `v`, claiming by
    /// compare-and-swap from BOT; the claimer spawns the follow-up task.
    fn par_task<'s>(
        &'s self,
        player: Player,
        r: u64,
        v: Vertex,
        claims: &'s Mutex<Vec<Vertex>>,
        scope: &rayon::Scope<'s>,
    ) {
        let game = self.game;
        for &u in game.predecessors(v) {
            if self.region_of(u) != BOT {
                continue;
            }
            let attracted = if game.owner(u) == player {
                if self.region[u]
                    .compare_exchange(BOT, r, Ordering::AcqRel, Ordering::Acquire)
                    .is_ok()
                {
                    self.set_strategy(u, v);
                    true
                } else {
                    false
                }
            } else {
                self.escapes[u].fetch_sub(1, Ordering::AcqRel) == 1
                    && self.region[u]
                        .compare_exchange(BOT, r, Ordering::AcqRel, Ordering::Acquire)
                        .is_ok()
            };
            if attracted {
                claims.lock().unwrap().push(u);
                scope.spawn(move |s| self.par_task(player, r, u, claims, s));
            }
        }
    }

    fn par_expand_opponent(
        &self,
        player: Player,
        r: u64,
        r_entry: u64,
        wstamp: u64,
        seeds: Vec<Vertex>,
    ) -> Vec<Vertex> {
        let claims = Mutex::new(Vec::new());
        let pool = self.pool.as_ref().expect("pool");
        pool.install(|| {
            rayon::scope(|s| {
                for &v in &seeds {
                    let claims = &claims;
                    s.spawn(move |s| {
                        self.par_task_opponent(player, r, r_entry, wstamp, v, claims, s)
                    });
                }
            });
        });
        claims.into_inner().unwrap()
    }

    /// Opponent-attractor task. Set membership is `wmark == wstamp` for
    /// seeds (their claims stay put) or a claim at this call's index.
    fn par_task_opponent<'s>(
        &'s self,
        player: Player,
        r: u64,
        r_entry: u64,
        wstamp: u64,
        v: Vertex,
        claims: &'s Mutex<Vec<Vertex>>,
        scope: &rayon::Scope<'s>,
    ) {
        let game = self.game;
        for &u in game.predecessors(v) {
            if self.wmark[u] == wstamp || self.region_of(u) == r || !self.in_subgame(u, r_entry) {
                continue;
            }
            let attracted = if game.owner(u) == player {
                let current = self.region_of(u);
                if current != r
                    && self.region[u]
                        .compare_exchange(current, r, Ordering::AcqRel, Ordering::Acquire)
                        .is_ok()
                {
                    self.set_strategy(u, v);
                    true
                } else {
                    false
                }
            } else {
                self.escapes[u].fetch_sub(1, Ordering::AcqRel) == 1 && {
                    self.region[u].store(r, Ordering::Release);
                    true
                }
            };
            if attracted {
                claims.lock().unwrap().push(u);
                scope.spawn(move |s| {
                    self.par_task_opponent(player, r, r_entry, wstamp, u, claims, s)
                });
            }
        }
    }
}

/// Solves `subgame` with the optimized configuration.
pub fn zielonka_solve(game: &ParityGame, subgame: &VertexSet) -> Solution {
    ZlkSolver::new(game).solve(subgame)
}

/// Solves `subgame` with the unoptimized configuration.
pub fn zielonka_solve_unoptimized(game: &ParityGame, subgame: &VertexSet) -> Solution {
    ZlkSolver::new(game).unoptimized().solve(subgame)
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
    fn empty_subgame_solves_to_nothing() {
        let g = game(&[(0, Player::Even, &[0])]).unwrap();
        let s = ZlkSolver::new(&g).solve(&VertexSet::empty(1));
        assert_eq!(s.strategy, vec![None]);
    }

    #[test]
    fn self_loops_go_to_the_parity_winner() {
        for owner in [Player::Even, Player::Odd] {
            let g = game(&[(2, owner, &[0])]).unwrap();
            let s = zielonka_solve(&g, &VertexSet::full(1));
            assert_eq!(s.winner, vec![Player::Even]);
            let g = game(&[(1, owner, &[0])]).unwrap();
            let s = zielonka_solve(&g, &VertexSet::full(1));
            assert_eq!(s.winner, vec![Player::Odd]);
        }
    }

    #[test]
    fn extended_attractor_absorbs_same_parity_layers() {
        // Priorities 4, 2, 1; the pr-1 vertex cannot reach into the even
        // layers' attractors, so both even layers end up in A.
        let g = game(&[
            (4, Player::Even, &[0, 1]),
            (2, Player::Even, &[1, 0]),
            (1, Player::Odd, &[2]),
        ])
        .unwrap();
        let mut solver = ZlkSolver::new(&g);
        let s = solver.solve(&VertexSet::full(3));
        assert_eq!(s.winner, vec![Player::Even, Player::Even, Player::Odd]);
        // One layered frame handles both even priorities: two layer calls,
        // and no opponent attractor is needed for the odd leftover.
        assert!(solver.attractor_calls >= 2);
    }

    #[test]
    fn optimized_and_unoptimized_agree_with_the_oracle() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xbead);
        for round in 0..400 {
            let n = rng.random_range(1..=8);
            let g = crate::generate::tiny_random_game(&mut rng, n, 8);
            let expected = crate::oracle::brute_force_solve(&g).unwrap();
            let full = VertexSet::full(n);
            let zlk = zielonka_solve(&g, &full);
            let uzlk = zielonka_solve_unoptimized(&g, &full);
            assert_eq!(zlk.winner, expected.winner, "round {round}:\n{g:?}");
            assert_eq!(uzlk.winner, expected.winner, "round {round} (uzlk):\n{g:?}");
            crate::verify::verify(&g, &zlk).unwrap_or_else(|e| {
                panic!("round {round}: zlk rejected: {e}\n{g:?}");
            });
            crate::verify::verify(&g, &uzlk).unwrap_or_else(|e| {
                panic!("round {round}: uzlk rejected: {e}\n{g:?}");
            });
        }
    }

    #[test]
    fn repeated_runs_are_identical() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let g = crate::generate::tiny_random_game(&mut rng, 40, 12);
        let full = VertexSet::full(40);
        let a = ZlkSolver::new(&g).solve(&full);
        let b = ZlkSolver::new(&g).solve(&full);
        assert_eq!(a, b);
    }
}
