//! Backtracking search for bad 2-colorings.
//!
//! The engine keeps a partial edge assignment with two incremental
//! structures. Per-triangle red/blue counters propagate "two red edges force
//! the third blue" and detect red triangles. A rollback union-find over blue
//! edges tracks component sizes: a blue edge whose endpoints' components
//! would reach `k` vertices is forbidden, and after every merge the unassigned
//! edges leaving the grown component are checked and forced red if needed.
//!
//! Branching takes the unassigned edge lying in the most triangles (ties by
//! edge index) and tries red before blue, so results are deterministic.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{BadColoringCertificate, Color, TwoColoring};
use crate::dsu::RollbackDsu;
use crate::error::{invalid, Result};
use crate::graph::{EdgeRef, Graph};

/// Node and wall-clock caps for a single search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchLimits {
    pub const UNLIMITED: SearchLimits = SearchLimits {
        max_nodes: None,
        max_time: None,
    };
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: Some(2_000_000_000),
            max_time: Some(Duration::from_secs(1800)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub limits: SearchLimits,
    /// Pre-assign blue to edges in at least `2k - 3` triangles (only when `n >= k + 2`).
    pub presolve: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limits: SearchLimits::default(),
            presolve: true,
        }
    }
}

impl SearchConfig {
    pub fn without_presolve(mut self) -> Self {
        self.presolve = false;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub backtracks: u64,
    pub propagations: u64,
    pub presolved_blue: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.backtracks += other.backtracks;
        self.propagations += other.propagations;
        self.presolved_blue += other.presolved_blue;
        self.elapsed += other.elapsed;
    }
}

/// Either a decided answer or an explicit "budget exhausted".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Done(T),
    Exhausted,
}

impl<T> Outcome<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Outcome::Done(t) => Some(t),
            Outcome::Exhausted => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Done(t) => Outcome::Done(f(t)),
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult<T> {
    pub outcome: Outcome<T>,
    pub stats: SearchStats,
}

/// Edges that every bad coloring must color blue: those lying in at least
/// `2k - 3` triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedBlue {
    pub edges: Vec<EdgeRef>,
    /// False when `n < k + 2`; `edges` is then empty.
    pub precondition_met: bool,
}

/// If a red edge `uv` had `2k - 3` common neighbours, each of those would send a
/// blue edge to `u` or `v`, giving one endpoint blue degree `k - 1`: a blue
/// star on `k` vertices. Reported only for `n >= k + 2`.
pub fn forced_blue_edges(g: &Graph, k: usize) -> ForcedBlue {
    if g.n() < k + 2 {
        return ForcedBlue {
            edges: Vec::new(),
            precondition_met: false,
        };
    }
    let threshold = 2 * k - 3;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| g.common_neighbor_count(u, v) >= threshold)
        .map(|(index, &(u, v))| EdgeRef { index, u, v })
        .collect();
    ForcedBlue {
        edges,
        precondition_met: true,
    }
}

const NONE: u8 = 0;
const RED: u8 = 1;
const BLUE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Control {
    Continue,
    Stop,
    Exhausted,
}

trait Visitor {
    fn leaf(&mut self, eng: &Engine) -> Control;
    fn prune(&self, _eng: &Engine) -> bool {
        false
    }
}

struct Engine<'g> {
    g: &'g Graph,
    k: usize,
    ends: Vec<(u32, u32)>,
    tris: Vec<[u32; 3]>,
    edge_tris: Vec<Vec<u32>>,
    incident: Vec<Vec<u32>>,
    order: Vec<u32>,
    color: Vec<u8>,
    tri_red: Vec<u8>,
    tri_blue: Vec<u8>,
    dsu: RollbackDsu,
    trail: Vec<u32>,
    queue: Vec<(u32, u8)>,
    red_count: usize,
    stats: SearchStats,
    limits: SearchLimits,
    start: Instant,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, k: usize, limits: SearchLimits) -> Self {
        let m = g.m();
        let ends: Vec<(u32, u32)> = g.edges().iter().map(|&(u, v)| (u as u32, v as u32)).collect();
        let mut incident = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push(i as u32);
            incident[v].push(i as u32);
        }
        let mut tris = Vec::new();
        let mut edge_tris = vec![Vec::new(); m];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            for w in g.neighbors(u) {
                if w > v && g.has_edge(v, w) {
                    let a = i as u32;
                    let b = g.edge_index(u, w).unwrap() as u32;
                    let c = g.edge_index(v, w).unwrap() as u32;
                    let t = tris.len() as u32;
                    tris.push([a, b, c]);
                    for e in [a, b, c] {
                        edge_tris[e as usize].push(t);
                    }
                }
            }
        }
        let mut order: Vec<u32> = (0..m as u32).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(edge_tris[e as usize].len()), e));
        let ntris = tris.len();
        Engine {
            g,
            k,
            ends,
            tris,
            edge_tris,
            incident,
            order,
            color: vec![NONE; m],
            tri_red: vec![0; ntris],
            tri_blue: vec![0; ntris],
            dsu: RollbackDsu::new(g.n()),
            trail: Vec::with_capacity(m),
            queue: Vec::new(),
            red_count: 0,
            stats: SearchStats::default(),
            limits,
            start: Instant::now(),
        }
    }

    fn unassigned(&self) -> usize {
        self.color.len() - self.trail.len()
    }

    fn mark(&self) -> (usize, usize) {
        (self.trail.len(), self.dsu.time())
    }

    fn undo(&mut self, (trail_len, dsu_time): (usize, usize)) {
        while self.trail.len() > trail_len {
            let e = self.trail.pop().unwrap() as usize;
            let c = std::mem::replace(&mut self.color[e], NONE);
            let counters = if c == RED {
                self.red_count -= 1;
                &mut self.tri_red
            } else {
                &mut self.tri_blue
            };
            for &t in &self.edge_tris[e] {
                counters[t as usize] -= 1;
            }
        }
        self.dsu.rollback(dsu_time);
    }

    /// Assigns `c` to edge `e` and runs propagation to a fixpoint. On `false`
    /// the state is inconsistent and the caller must `undo`.
    fn assign(&mut self, e: u32, c: u8) -> bool {
        self.queue.clear();
        self.queue.push((e, c));
        while let Some((e, c)) = self.queue.pop() {
            match self.color[e as usize] {
                NONE => {}
                cur if cur == c => continue,
                _ => return false,
            }
            self.stats.propagations += 1;
            let ok = if c == RED { self.apply_red(e) } else { self.apply_blue(e) };
            if !ok {
                return false;
            }
        }
        true
    }

    fn apply_red(&mut self, e: u32) -> bool {
        let ei = e as usize;
        self.color[ei] = RED;
        self.trail.push(e);
        self.red_count += 1;
        let mut ok = true;
        for &t in &self.edge_tris[ei] {
            let t = t as usize;
            self.tri_red[t] += 1;
            if self.tri_blue[t] > 0 {
                continue;
            }
            match self.tri_red[t] {
                3 => ok = false,
                2 => {
                    let third = self.tris[t]
                        .into_iter()
                        .find(|&f| self.color[f as usize] == NONE)
                        .expect("two red, no blue: third edge is open");
                    self.queue.push((third, BLUE));
                }
                _ => {}
            }
        }
        ok
    }

    fn apply_blue(&mut self, e: u32) -> bool {
        let ei = e as usize;
        let (u, v) = self.ends[ei];
        let (ru, rv) = (self.dsu.find(u as usize), self.dsu.find(v as usize));
        if ru != rv && self.dsu.size_of_root(ru) + self.dsu.size_of_root(rv) >= self.k {
            return false;
        }
        self.color[ei] = BLUE;
        self.trail.push(e);
        for &t in &self.edge_tris[ei] {
            self.tri_blue[t as usize] += 1;
        }
        if ru == rv {
            return true;
        }
        let root = self.dsu.union_roots(ru, rv);
        let size = self.dsu.size_of_root(root);
        for x in self.dsu.members(root) {
            for &f in &self.incident[x] {
                if self.color[f as usize] != NONE {
                    continue;
                }
                let (a, b) = self.ends[f as usize];
                let other = if a as usize == x { b } else { a } as usize;
                let ro = self.dsu.find(other);
                if ro != root && size + self.dsu.size_of_root(ro) >= self.k {
                    self.queue.push((f, RED));
                }
            }
        }
        true
    }

    fn over_budget(&mut self) -> bool {
        if let Some(max) = self.limits.max_nodes {
            if self.stats.nodes > max {
                return true;
            }
        }
        if let Some(max) = self.limits.max_time {
            if self.stats.nodes.is_multiple_of(1024) && self.start.elapsed() > max {
                return true;
            }
        }
        false
    }

    fn next_edge(&self) -> Option<u32> {
        self.order
            .iter()
            .copied()
            .find(|&e| self.color[e as usize] == NONE)
    }

    fn coloring(&self) -> TwoColoring {
        TwoColoring::new(
            self.color
                .iter()
                .map(|&c| if c == RED { Color::Red } else { Color::Blue })
                .collect(),
        )
    }

    fn dfs(&mut self, visitor: &mut dyn Visitor) -> Control {
        self.stats.nodes += 1;
        if self.over_budget() {
            return Control::Exhausted;
        }
        if visitor.prune(self) {
            return Control::Continue;
        }
        let Some(e) = self.next_edge() else {
            return visitor.leaf(self);
        };
        for c in [RED, BLUE] {
            let mark = self.mark();
            if self.assign(e, c) {
                let r = self.dfs(visitor);
                if r != Control::Continue {
                    self.undo(mark);
                    return r;
                }
            }
            self.stats.backtracks += 1;
            self.undo(mark);
        }
        Control::Continue
    }

    /// Applies presolve, then searches. Returns the final control value.
    fn run(&mut self, presolve: bool, visitor: &mut dyn Visitor) -> Control {
        self.start = Instant::now();
        let mut root_ok = true;
        if presolve {
            let forced = forced_blue_edges(self.g, self.k);
            for e in forced.edges {
                self.stats.presolved_blue += 1;
                if !self.assign(e.index as u32, BLUE) {
                    root_ok = false;
                    break;
                }
            }
        }
        let r = if root_ok { self.dfs(visitor) } else { Control::Continue };
        self.stats.elapsed = self.start.elapsed();
        r
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    Ok(())
}

struct FirstLeaf(Option<TwoColoring>);

impl Visitor for FirstLeaf {
    fn leaf(&mut self, eng: &Engine) -> Control {
        self.0 = Some(eng.coloring());
        Control::Stop
    }
}

/// Finds some bad coloring, or proves none exists.
pub fn find_bad_coloring(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<SearchResult<Option<BadColoringCertificate>>> {
    check_k(k)?;
    let mut eng = Engine::new(g, k, cfg.limits);
    let mut v = FirstLeaf(None);
    let ctl = eng.run(cfg.presolve, &mut v);
    let outcome = match (ctl, v.0) {
        (Control::Exhausted, _) => Outcome::Exhausted,
        (_, Some(c)) => Outcome::Done(Some(BadColoringCertificate::new(g, k, c)?)),
        (_, None) => Outcome::Done(None),
    };
    Ok(SearchResult {
        outcome,
        stats: eng.stats,
    })
}

struct Enumerate<'f> {
    count: u64,
    cap: u64,
    f: &'f mut dyn FnMut(&TwoColoring) -> bool,
}

impl Visitor for Enumerate<'_> {
    fn leaf(&mut self, eng: &Engine) -> Control {
        self.count += 1;
        let more = (self.f)(&eng.coloring());
        if !more || self.count >= self.cap {
            Control::Stop
        } else {
            Control::Continue
        }
    }
}

/// Calls `f` on every bad coloring (labelled, no symmetry reduction) until it
/// returns `false` or `cap` colorings have been visited. Returns the number visited.
pub fn for_each_bad_coloring(
    g: &Graph,
    k: usize,
    cap: u64,
    cfg: &SearchConfig,
    mut f: impl FnMut(&TwoColoring) -> bool,
) -> Result<SearchResult<u64>> {
    check_k(k)?;
    if cap == 0 {
        return Err(invalid("cap must be at least 1"));
    }
    let mut eng = Engine::new(g, k, cfg.limits);
    let mut v = Enumerate { count: 0, cap, f: &mut f };
    let ctl = eng.run(cfg.presolve, &mut v);
    let outcome = if ctl == Control::Exhausted {
        Outcome::Exhausted
    } else {
        Outcome::Done(v.count)
    };
    Ok(SearchResult {
        outcome,
        stats: eng.stats,
    })
}

/// Exact number of bad colorings if below `cap`, otherwise `cap`.
pub fn count_bad_colorings(
    g: &Graph,
    k: usize,
    cap: u64,
    cfg: &SearchConfig,
) -> Result<SearchResult<u64>> {
    for_each_bad_coloring(g, k, cap, cfg, |_| true)
}

struct MaxRed {
    best: Option<(usize, TwoColoring)>,
}

impl Visitor for MaxRed {
    fn leaf(&mut self, eng: &Engine) -> Control {
        if self.best.as_ref().is_none_or(|(b, _)| eng.red_count > *b) {
            self.best = Some((eng.red_count, eng.coloring()));
        }
        if eng.red_count == eng.color.len() {
            Control::Stop
        } else {
            Control::Continue
        }
    }

    fn prune(&self, eng: &Engine) -> bool {
        self.best
            .as_ref()
            .is_some_and(|(b, _)| eng.red_count + eng.unassigned() <= *b)
    }
}

/// A bad coloring with the largest possible number of red edges.
pub fn find_max_red_bad_coloring(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<SearchResult<Option<BadColoringCertificate>>> {
    check_k(k)?;
    let mut eng = Engine::new(g, k, cfg.limits);
    let mut v = MaxRed { best: None };
    let ctl = eng.run(cfg.presolve, &mut v);
    let outcome = match ctl {
        Control::Exhausted => Outcome::Exhausted,
        _ => Outcome::Done(match v.best {
            Some((_, c)) => Some(BadColoringCertificate::new(g, k, c)?),
            None => None,
        }),
    };
    Ok(SearchResult {
        outcome,
        stats: eng.stats,
    })
}

/// Convenience: whether `g` admits a bad coloring (`None` if the budget ran out).
pub fn admits_bad_coloring(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome<bool>> {
    Ok(find_bad_coloring(g, k, cfg)?.outcome.map(|c| c.is_some()))
}
