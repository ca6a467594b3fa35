//! Semi-decision of word equality in a one-relation monoid by bounded search.
//!
//! The search never answers "not equal": a failed search only means no
//! connecting chain of relation applications was found inside the budget.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::word::{find_from, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Equality {
    Equal,
    Unknown,
}

/// Limits for [`bounded_equality`].
///
/// `max_len` bounds every intermediate word; `max_steps` bounds the number of
/// relation applications in the connecting chain (after the initial
/// length-reducing pass); `max_nodes` caps memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_len: usize,
    pub max_steps: usize,
    pub max_nodes: usize,
}

impl SearchBudget {
    pub fn new(max_len: usize, max_steps: usize) -> Self {
        SearchBudget {
            max_len,
            max_steps,
            max_nodes: 2_000_000,
        }
    }
}

/// Words adjacent to `w` by one application of `u = v` in either direction.
pub fn neighbours(p: &Presentation, w: &Word, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for (from, to) in [(p.lhs(), p.rhs()), (p.rhs(), p.lhs())] {
        if from.is_empty() {
            // inserting the other side anywhere
            if w.len() + to.len() <= max_len {
                for pos in 0..=w.len() {
                    out.push(w.splice(pos, 0, to));
                }
            }
            continue;
        }
        if w.len() - from.len().min(w.len()) + to.len() > max_len {
            continue;
        }
        let mut start = 0;
        while let Some(pos) = find_from(w.letters(), from.letters(), start) {
            out.push(w.splice(pos, from.len(), to));
            start = pos + 1;
        }
    }
    out
}

/// Greedily replaces the longer relation side by the shorter one, leftmost
/// first, until it no longer occurs. Every step is a relation application.
pub fn reduce_length(p: &Presentation, w: &Word) -> Word {
    let (long, short) = match p.lhs().len().cmp(&p.rhs().len()) {
        std::cmp::Ordering::Greater => (p.lhs(), p.rhs()),
        std::cmp::Ordering::Less => (p.rhs(), p.lhs()),
        std::cmp::Ordering::Equal => return w.clone(),
    };
    let mut current = w.clone();
    while let Some(pos) = current.find(long) {
        current = current.splice(pos, long.len(), short);
    }
    current
}

/// `Equal` if a chain of relation applications connects `w1` and `w2` within
/// `budget`; `Unknown` otherwise.
pub fn bounded_equality(p: &Presentation, w1: &Word, w2: &Word, budget: SearchBudget) -> Equality {
    if w1 == w2 {
        return Equality::Equal;
    }
    if w1.len() > budget.max_len || w2.len() > budget.max_len {
        return Equality::Unknown;
    }
    let r1 = reduce_length(p, w1);
    let r2 = reduce_length(p, w2);
    if r1 == r2 {
        return Equality::Equal;
    }
    // canonical orientation keeps the answer symmetric under node capping
    let (start, goal) = if r1.shortlex_key() <= r2.shortlex_key() {
        (r1, r2)
    } else {
        (r2, r1)
    };
    bidirectional_search(p, start, goal, budget)
}

fn bidirectional_search(p: &Presentation, start: Word, goal: Word, budget: SearchBudget) -> Equality {
    let mut seen: [HashSet<Word>; 2] = [HashSet::new(), HashSet::new()];
    let mut frontiers: [Vec<Word>; 2] = [vec![start.clone()], vec![goal.clone()]];
    seen[0].insert(start);
    seen[1].insert(goal);
    let mut depth = 0;
    while depth < budget.max_steps {
        // expand the smaller frontier; ties go to the start side
        let side = usize::from(frontiers[1].len() < frontiers[0].len());
        if frontiers[side].is_empty() {
            return Equality::Unknown;
        }
        let mut next = Vec::new();
        for w in &frontiers[side] {
            for n in neighbours(p, w, budget.max_len) {
                if seen[1 - side].contains(&n) {
                    return Equality::Equal;
                }
                if seen[side].insert(n.clone()) {
                    next.push(n);
                }
            }
        }
        frontiers[side] = next;
        depth += 1;
        if seen[0].len() + seen[1].len() > budget.max_nodes {
            return Equality::Unknown;
        }
    }
    Equality::Unknown
}
