//! Solver dispatch and the full solving pipeline: normalization, optional
//! renumberings, preprocessing, SCC decomposition and back-mapping.

pub mod pp;
pub mod qpt;
pub mod spm;
pub mod zielonka;

use std::str::FromStr;
use std::time::Duration;

use thiserror::Error;

use crate::game::{ParityGame, Player, Solution, VertexSet};
use crate::preprocess::{PreprocessConfig, PreprocessStats, Preprocessor};
use crate::reindex::normalize;

pub use pp::PpVariant;
pub use zielonka::ZlkSolver;

/// Every selectable solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Zlk,
    Uzlk,
    Spm,
    Qpt,
    Pp,
    Ppp,
    Rr,
    Dp,
    Rrdp,
}

impl SolverKind {
    pub const ALL: [SolverKind; 9] = [
        SolverKind::Zlk,
        SolverKind::Uzlk,
        SolverKind::Spm,
        SolverKind::Qpt,
        SolverKind::Pp,
        SolverKind::Ppp,
        SolverKind::Rr,
        SolverKind::Dp,
        SolverKind::Rrdp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Zlk => "zlk",
            SolverKind::Uzlk => "uzlk",
            SolverKind::Spm => "spm",
            SolverKind::Qpt => "qpt",
            SolverKind::Pp => "pp",
            SolverKind::Ppp => "ppp",
            SolverKind::Rr => "rr",
            SolverKind::Dp => "dp",
            SolverKind::Rrdp => "rrdp",
        }
    }
}

impl FromStr for SolverKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown solver '{s}'"))
    }
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("time limit exceeded")]
    TimedOut,
}

/// Pipeline configuration.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub solver: SolverKind,
    pub preprocess: PreprocessConfig,
    /// Solve bottom SCCs one at a time.
    pub scc_decomposition: bool,
    /// Apply priority inflation before solving.
    pub inflate: bool,
    /// Apply priority compression before solving.
    pub compress: bool,
    /// Worker threads for the parallel attractor (> 1 enables it).
    pub workers: usize,
    /// In-process wall clock budget for the iterative solvers.
    pub time_limit: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            solver: SolverKind::Zlk,
            preprocess: PreprocessConfig::default(),
            scc_decomposition: false,
            inflate: false,
            compress: false,
            workers: 1,
            time_limit: None,
        }
    }
}

impl SolveOptions {
    pub fn new(solver: SolverKind) -> SolveOptions {
        SolveOptions {
            solver,
            ..Default::default()
        }
    }

    pub fn bare(solver: SolverKind) -> SolveOptions {
        SolveOptions {
            solver,
            preprocess: PreprocessConfig::none(),
            ..Default::default()
        }
    }
}

pub struct PipelineOutcome {
    pub solution: Solution,
    pub preprocess: PreprocessStats,
}

/// Runs one solver on a subgame of an already prepared (normalized) game.
pub fn solve_subgame(
    game: &ParityGame,
    subgame: &VertexSet,
    options: &SolveOptions,
) -> Result<Solution, SolveError> {
    if subgame.is_empty() {
        return Ok(Solution::new(game.num_vertices()));
    }
    match options.solver {
        SolverKind::Zlk => {
            let mut solver = ZlkSolver::new(game).with_workers(options.workers);
            Ok(solver.solve(subgame))
        }
        SolverKind::Uzlk => {
            let mut solver = ZlkSolver::new(game)
                .unoptimized()
                .with_workers(options.workers);
            Ok(solver.solve(subgame))
        }
        SolverKind::Spm => spm::spm_solve(game, subgame, &spm::SpmConfig::default(), options.time_limit),
        SolverKind::Qpt => qpt::qpt_solve(game, subgame, options.time_limit),
        SolverKind::Pp => pp::pp_solve(game, subgame, PpVariant::Pp),
        SolverKind::Ppp => pp::pp_solve(game, subgame, PpVariant::PpPlus),
        SolverKind::Rr => pp::pp_solve(game, subgame, PpVariant::Rr),
        SolverKind::Dp => pp::pp_solve(game, subgame, PpVariant::Dp),
        SolverKind::Rrdp => pp::pp_solve(game, subgame, PpVariant::RrDp),
    }
}

/// Full pipeline on an arbitrary game: normalize (sort by priority and
/// renumber from 0), optionally inflate or compress, preprocess, then solve
/// the rest, with optional bottom-SCC decomposition. The result is indexed
/// by the input game's vertices.
pub fn solve_pipeline(
    game: &ParityGame,
    options: &SolveOptions,
) -> Result<PipelineOutcome, SolveError> {
    let n = game.num_vertices();
    let (mut prepared, renaming) = normalize(game);
    if options.inflate {
        prepared = crate::reindex::inflate_priorities(&prepared);
    }
    if options.compress {
        prepared = crate::reindex::compress_priorities(&prepared);
    }

    let mut remaining = VertexSet::full(n);
    let mut solution = Solution::new(n);
    let stats = Preprocessor::new(&prepared).run(&options.preprocess, &mut remaining, &mut solution);

    if !remaining.is_empty() {
        if options.scc_decomposition {
            let mut failure = None;
            crate::scc::scc_solve(&prepared, &remaining, &mut solution, |g, sub| {
                match solve_subgame(g, sub, options) {
                    Ok(s) => s,
                    Err(e) => {
                        failure = Some(e);
                        Solution::new(g.num_vertices())
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        } else {
            let part = solve_subgame(&prepared, &remaining, options)?;
            for v in remaining.iter() {
                solution.winner[v] = part.winner[v];
                solution.strategy[v] = part.strategy[v];
            }
        }
    }

    // Map back through the normalization renaming.
    let mut inverse = vec![0; n];
    for (old, &new) in renaming.iter().enumerate() {
        inverse[new] = old;
    }
    let mut output = Solution::new(n);
    for old in 0..n {
        let new = renaming[old];
        output.winner[old] = solution.winner[new];
        output.strategy[old] = solution.strategy[new].map(|w| inverse[w]);
    }
    // Only winners keep strategies.
    for v in 0..n {
        if game.owner(v) != output.winner[v] {
            output.strategy[v] = None;
        }
    }
    Ok(PipelineOutcome {
        solution: output,
        preprocess: stats,
    })
}

/// Convenience wrapper: winner map equality between two solutions.
pub fn same_winners(a: &Solution, b: &Solution) -> bool {
    a.winner == b.winner
}

/// Quick check that a solution is total for a player on a region.
pub fn region_of(solution: &Solution, player: Player) -> Vec<usize> {
    solution.winners_of(player).collect()
}
