//! Depth-first search over slot assignments, parallel at the first slot.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{SearchError, SearchOptions, Stats};

/// A constraint problem: slot `i` takes a value from `candidates(i)`.
pub(crate) trait Problem: Sync {
    type Out: Send;

    fn slots(&self) -> usize;

    fn candidates(&self, slot: usize) -> &[usize];

    /// Called with `assign[..=slot]` filled; `false` prunes the subtree.
    fn consistent(&self, assign: &[usize], slot: usize) -> bool;

    /// Called on complete assignments; `Ok(None)` rejects.
    fn finish(&self, assign: &[usize]) -> Result<Option<Self::Out>, SearchError>;
}

pub(crate) struct Outcome<T> {
    pub results: Vec<T>,
    pub stats: Stats,
    pub complete: bool,
}

struct Local<T> {
    results: Vec<T>,
    nodes: u64,
    pruned: u64,
}

enum Stop {
    Budget,
    Error(SearchError),
}

struct Shared {
    nodes: AtomicU64,
    budget: u64,
}

fn dfs<P: Problem>(
    p: &P,
    assign: &mut Vec<usize>,
    shared: &Shared,
    local: &mut Local<P::Out>,
) -> Result<(), Stop> {
    let slot = assign.len();
    if slot == p.slots() {
        return match p.finish(assign) {
            Ok(Some(out)) => {
                local.results.push(out);
                Ok(())
            }
            Ok(None) => {
                local.pruned += 1;
                Ok(())
            }
            Err(e) => Err(Stop::Error(e)),
        };
    }
    for &v in p.candidates(slot) {
        if shared.nodes.fetch_add(1, Ordering::Relaxed) >= shared.budget {
            return Err(Stop::Budget);
        }
        local.nodes += 1;
        assign.push(v);
        if p.consistent(assign, slot) {
            dfs(p, assign, shared, local)?;
        } else {
            local.pruned += 1;
        }
        assign.pop();
    }
    Ok(())
}

fn search<P: Problem>(p: &P, budget: u64) -> Result<Outcome<P::Out>, SearchError> {
    let start = Instant::now();
    let shared = Shared { nodes: AtomicU64::new(0), budget };
    let first: Vec<usize> = if p.slots() == 0 { vec![] } else { p.candidates(0).to_vec() };
    let run_branch = |prefix: Option<usize>| {
        let mut local = Local { results: Vec::new(), nodes: 0, pruned: 0 };
        let mut assign = Vec::with_capacity(p.slots());
        let status = match prefix {
            None => dfs(p, &mut assign, &shared, &mut local),
            Some(v) => {
                if shared.nodes.fetch_add(1, Ordering::Relaxed) >= shared.budget {
                    Err(Stop::Budget)
                } else {
                    local.nodes += 1;
                    assign.push(v);
                    if p.consistent(&assign, 0) {
                        dfs(p, &mut assign, &shared, &mut local)
                    } else {
                        local.pruned += 1;
                        Ok(())
                    }
                }
            }
        };
        (local, status)
    };
    let branches: Vec<(Local<P::Out>, Result<(), Stop>)> = if p.slots() == 0 {
        vec![run_branch(None)]
    } else {
        first.into_par_iter().map(|v| run_branch(Some(v))).collect()
    };

    let mut stats = Stats::default();
    let mut results = Vec::new();
    let mut complete = true;
    for (local, status) in branches {
        stats.nodes += local.nodes;
        stats.pruned += local.pruned;
        results.extend(local.results);
        match status {
            Ok(()) => {}
            Err(Stop::Budget) => complete = false,
            Err(Stop::Error(e)) => return Err(e),
        }
    }
    stats.wall_time = start.elapsed();
    Ok(Outcome { results, stats, complete })
}

/// Runs the search on the configured pool.
pub(crate) fn run<P: Problem>(p: &P, opts: &SearchOptions) -> Result<Outcome<P::Out>, SearchError> {
    match opts.jobs {
        None => search(p, opts.budget),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| SearchError::Pool(e.to_string()))?
            .install(|| search(p, opts.budget)),
    }
}
