//! Parity game representation: vertices with priorities and owners over a
//! total edge relation, plus the dense vertex sets used by all solvers.

use std::fmt;

use bitvec::bitvec;
use bitvec::slice::BitSlice;
use bitvec::vec::BitVec;
use thiserror::Error;

/// Dense 0-based vertex index.
pub type Vertex = usize;

/// Priority label of a vertex. Bounded by the vertex count after renumbering.
pub type Priority = u32;

/// The two players. Player Even wins a play whose highest infinitely
/// recurring priority is even, player Odd the odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    /// The player that wins priority `p` if it dominates a play.
    #[inline]
    pub fn from_priority(p: Priority) -> Player {
        if p % 2 == 0 {
            Player::Even
        } else {
            Player::Odd
        }
    }

    #[inline]
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// 0 for Even, 1 for Odd; matches the on-disk owner encoding.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    /// True iff priority `p` has this player's parity.
    #[inline]
    pub fn wins_priority(self, p: Priority) -> bool {
        Player::from_priority(p) == self
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => write!(f, "even"),
            Player::Odd => write!(f, "odd"),
        }
    }
}

/// Error constructing a game from raw parts.
#[derive(Debug, Error)]
pub enum GameError {
    #[error("vertex {0} has no successors")]
    NoSuccessors(Vertex),
    #[error("vertex {0} has successor {1} out of range")]
    SuccessorOutOfRange(Vertex, Vertex),
    #[error("mismatched field lengths building game")]
    MismatchedLengths,
}

/// An immutable parity game over dense vertex indices `0..n`.
///
/// Successor and predecessor lists are stored in a flat adjacency layout.
/// The predecessor lists are derived from the successors at construction and
/// are exactly their edge reverse.
#[derive(Clone)]
pub struct ParityGame {
    priority: Vec<Priority>,
    owner: BitVec,
    succ_index: Vec<usize>,
    succ_edges: Vec<Vertex>,
    pred_index: Vec<usize>,
    pred_edges: Vec<Vertex>,
    labels: Vec<Option<String>>,
    /// Original input ids when the source file used sparse ids; identity
    /// mapping is represented as `None`.
    external_ids: Option<Vec<usize>>,
    /// Set once the vertices are known to be sorted by priority.
    sorted: bool,
}

impl ParityGame {
    /// Builds a game from per-vertex priorities, owners and successor lists.
    pub fn from_parts(
        priority: Vec<Priority>,
        owner: Vec<Player>,
        successors: Vec<Vec<Vertex>>,
        labels: Vec<Option<String>>,
    ) -> Result<ParityGame, GameError> {
        let n = priority.len();
        if owner.len() != n || successors.len() != n || labels.len() != n {
            return Err(GameError::MismatchedLengths);
        }
        let mut succ_index = Vec::with_capacity(n + 1);
        let mut succ_edges = Vec::new();
        succ_index.push(0);
        for (v, succs) in successors.iter().enumerate() {
            if succs.is_empty() {
                return Err(GameError::NoSuccessors(v));
            }
            for &w in succs {
                if w >= n {
                    return Err(GameError::SuccessorOutOfRange(v, w));
                }
                succ_edges.push(w);
            }
            succ_index.push(succ_edges.len());
        }

        // Reverse the edges with a counting pass; keeps predecessor lists in
        // source-vertex order.
        let mut pred_count = vec![0usize; n];
        for &w in &succ_edges {
            pred_count[w] += 1;
        }
        let mut pred_index = Vec::with_capacity(n + 1);
        pred_index.push(0);
        for v in 0..n {
            pred_index.push(pred_index[v] + pred_count[v]);
        }
        let mut cursor = pred_index.clone();
        let mut pred_edges = vec![0usize; succ_edges.len()];
        for v in 0..n {
            for i in succ_index[v]..succ_index[v + 1] {
                let w = succ_edges[i];
                pred_edges[cursor[w]] = v;
                cursor[w] += 1;
            }
        }

        let mut owner_bits = bitvec![0; n];
        for (v, &o) in owner.iter().enumerate() {
            owner_bits.set(v, o == Player::Odd);
        }
        let sorted = priority.windows(2).all(|w| w[0] <= w[1]);
        Ok(ParityGame {
            priority,
            owner: owner_bits,
            succ_index,
            succ_edges,
            pred_index,
            pred_edges,
            labels,
            external_ids: None,
            sorted,
        })
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.priority.len()
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.succ_edges.len()
    }

    #[inline]
    pub fn priority(&self, v: Vertex) -> Priority {
        self.priority[v]
    }

    #[inline]
    pub fn owner(&self, v: Vertex) -> Player {
        if self.owner[v] {
            Player::Odd
        } else {
            Player::Even
        }
    }

    #[inline]
    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ_edges[self.succ_index[v]..self.succ_index[v + 1]]
    }

    #[inline]
    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred_edges[self.pred_index[v]..self.pred_index[v + 1]]
    }

    #[inline]
    pub fn out_degree(&self, v: Vertex) -> usize {
        self.succ_index[v + 1] - self.succ_index[v]
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.num_vertices()
    }

    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        self.successors(v).contains(&w)
    }

    /// Highest priority in the game, or `None` when empty.
    pub fn max_priority(&self) -> Option<Priority> {
        if self.sorted {
            self.priority.last().copied()
        } else {
            self.priority.iter().copied().max()
        }
    }

    /// True when vertices appear in non-decreasing priority order.
    #[inline]
    pub fn is_priority_sorted(&self) -> bool {
        self.sorted
    }

    /// The id a vertex had in the source file. Identity unless the input
    /// used sparse ids.
    pub fn external_id(&self, v: Vertex) -> usize {
        match &self.external_ids {
            Some(ids) => ids[v],
            None => v,
        }
    }

    pub(crate) fn set_external_ids(&mut self, ids: Option<Vec<usize>>) {
        self.external_ids = ids;
    }

    /// Highest priority among the vertices of `sub`, or `None` when empty.
    ///
    /// On a priority-sorted game this scans from the high end of the vertex
    /// order, so repeated calls on shrinking subgames stay cheap.
    pub fn top_priority(&self, sub: &VertexSet) -> Option<Priority> {
        if self.sorted {
            sub.last().map(|v| self.priority[v])
        } else {
            sub.iter().map(|v| self.priority[v]).max()
        }
    }

    /// Replaces every priority through `f`, keeping everything else.
    pub(crate) fn with_priorities(&self, f: impl Fn(Priority) -> Priority) -> ParityGame {
        let mut g = self.clone();
        for p in g.priority.iter_mut() {
            *p = f(*p);
        }
        g.sorted = g.priority.windows(2).all(|w| w[0] <= w[1]);
        g
    }
}

impl PartialEq for ParityGame {
    /// Structural equality: priorities, owners, edge lists and labels.
    /// External ids are presentation only and not compared.
    fn eq(&self, other: &Self) -> bool {
        self.priority == other.priority
            && self.owner == other.owner
            && self.succ_index == other.succ_index
            && self.succ_edges == other.succ_edges
            && self.labels == other.labels
    }
}

impl Eq for ParityGame {}

impl fmt::Debug for ParityGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ParityGame({} vertices)", self.num_vertices())?;
        for v in self.vertices() {
            writeln!(
                f,
                "  {} pr={} {} -> {:?}",
                v,
                self.priority(v),
                self.owner(v),
                self.successors(v)
            )?;
        }
        Ok(())
    }
}

/// A solved game: winner per vertex plus a positional strategy for each
/// vertex owned by its winner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub winner: Vec<Player>,
    pub strategy: Vec<Option<Vertex>>,
}

impl Solution {
    pub fn new(n: usize) -> Solution {
        Solution {
            winner: vec![Player::Even; n],
            strategy: vec![None; n],
        }
    }

    pub fn winners_of(&self, player: Player) -> impl Iterator<Item = Vertex> + '_ {
        self.winner
            .iter()
            .enumerate()
            .filter(move |(_, &w)| w == player)
            .map(|(v, _)| v)
    }
}

/// Dense vertex set backed by a bit mask. Membership queries and iteration
/// agree by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: BitVec,
    count: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            bits: bitvec![0; n],
            count: 0,
        }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            bits: bitvec![1; n],
            count: n,
        }
    }

    pub fn from_iter(n: usize, verts: impl IntoIterator<Item = Vertex>) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for v in verts {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits[v]
    }

    /// Inserts `v`, returning true if it was not present.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        if self.bits[v] {
            false
        } else {
            self.bits.set(v, true);
            self.count += 1;
            true
        }
    }

    /// Removes `v`, returning true if it was present.
    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        if self.bits[v] {
            self.bits.set(v, false);
            self.count -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.iter_ones()
    }

    /// Highest member, or `None` when empty.
    pub fn last(&self) -> Option<Vertex> {
        self.bits.last_one()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn bits(&self) -> &BitSlice {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    /// Collects into a set sized by the largest element; prefer
    /// [`VertexSet::from_iter`] with an explicit capacity.
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let verts: Vec<Vertex> = iter.into_iter().collect();
        let n = verts.iter().max().map_or(0, |&m| m + 1);
        VertexSet::from_iter(n, verts)
    }
}
