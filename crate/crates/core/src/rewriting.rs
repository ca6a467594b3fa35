//! Finite string rewriting systems with a fixed leftmost application order.

use crate::error::{Error, Result};
use crate::word::{find_from, Word};

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        assert!(!lhs.is_empty(), "rewrite rule with empty left-hand side");
        Rule { lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(rules: Vec<Rule>) -> Self {
        RewriteSystem { rules }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Leftmost redex; ties at the same position go to the earlier rule.
    fn leftmost_redex(&self, w: &[u8]) -> Option<(usize, &Rule)> {
        let mut best: Option<(usize, &Rule)> = None;
        for rule in &self.rules {
            if let Some(pos) = find_from(w, rule.lhs.letters(), 0) {
                if best.is_none_or(|(p, _)| pos < p) {
                    best = Some((pos, rule));
                }
            }
        }
        best
    }

    /// Rewrites until no left-hand side occurs, applying the leftmost redex
    /// each step.
    pub fn normal_form(&self, w: &Word, max_steps: usize) -> Result<Word> {
        let mut current = w.clone();
        for _ in 0..max_steps {
            match self.leftmost_redex(current.letters()) {
                None => return Ok(current),
                Some((pos, rule)) => current = current.splice(pos, rule.lhs.len(), &rule.rhs),
            }
        }
        if self.is_irreducible(&current) {
            Ok(current)
        } else {
            Err(Error::StepBudgetExceeded(max_steps))
        }
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.leftmost_redex(w.letters()).is_none()
    }

    /// Every word reachable from `w` by one rule application, at any position.
    pub fn one_step_rewrites(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        for rule in &self.rules {
            let mut start = 0;
            while let Some(pos) = find_from(w.letters(), rule.lhs.letters(), start) {
                out.push(w.splice(pos, rule.lhs.len(), &rule.rhs));
                start = pos + 1;
            }
        }
        out
    }

    /// All critical pairs from overlaps and inclusions of left-hand sides.
    pub fn critical_pairs(&self) -> Vec<(Word, Word, Word)> {
        let mut pairs = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let l1 = r1.lhs.letters();
                let l2 = r2.lhs.letters();
                // suffix of l1 equal to a proper prefix of l2: l1 = xy, l2 = yz
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let x = Word::from_bytes(l1[..l1.len() - k].to_vec());
                        let z = Word::from_bytes(l2[k..].to_vec());
                        let source = r1.lhs.concat(&z);
                        pairs.push((source, r1.rhs.concat(&z), x.concat(&r2.rhs)));
                    }
                }
                // l2 strictly inside l1
                if i != j && l2.len() <= l1.len() {
                    let mut start = 0;
                    while let Some(pos) = find_from(l1, l2, start) {
                        let replaced = r1.lhs.splice(pos, l2.len(), &r2.rhs);
                        pairs.push((r1.lhs.clone(), r1.rhs.clone(), replaced));
                        start = pos + 1;
                    }
                }
            }
        }
        pairs
    }

    /// Knuth-Bendix completion under the length-lexicographic order induced by
    /// `letter_order` (smallest letter first). Returns `None` if the system
    /// grows past `max_rules` rules.
    pub fn complete(&self, letter_order: &[u8], max_rules: usize) -> Option<RewriteSystem> {
        let rank = |w: &Word| -> (usize, Vec<usize>) {
            let ranks = w
                .letters()
                .iter()
                .map(|c| letter_order.iter().position(|x| x == c).unwrap_or(usize::MAX))
                .collect();
            (w.len(), ranks)
        };
        let orient = |x: Word, y: Word| -> Option<Rule> {
            match rank(&x).cmp(&rank(&y)) {
                std::cmp::Ordering::Greater => Some(Rule::new(x, y)),
                std::cmp::Ordering::Less => Some(Rule::new(y, x)),
                std::cmp::Ordering::Equal => None,
            }
        };
        let mut system = RewriteSystem::new(Vec::new());
        let mut pending: Vec<(Word, Word)> = self.rules.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect();
        loop {
            while let Some((x, y)) = pending.pop() {
                // shortlex is a well-order, so each normal form is reached in finitely many steps
                let x = system.normal_form(&x, usize::MAX).ok()?;
                let y = system.normal_form(&y, usize::MAX).ok()?;
                let Some(rule) = orient(x, y) else { continue };
                let mut kept = Vec::new();
                for old in system.rules.drain(..) {
                    if old.lhs.find(&rule.lhs).is_some() {
                        pending.push((old.lhs, old.rhs));
                    } else {
                        kept.push(old);
                    }
                }
                kept.push(rule);
                system.rules = kept;
                let snapshot = system.clone();
                for r in &mut system.rules {
                    r.rhs = snapshot.normal_form(&r.rhs, usize::MAX).ok()?;
                }
                if system.rules.len() > max_rules {
                    return None;
                }
            }
            for (_, left, right) in system.critical_pairs() {
                let l = system.normal_form(&left, usize::MAX).ok()?;
                let r = system.normal_form(&right, usize::MAX).ok()?;
                if l != r {
                    pending.push((l, r));
                }
            }
            if pending.is_empty() {
                return Some(system);
            }
        }
    }

    /// True iff every critical pair rewrites to a common normal form. Together
    /// with termination this is confluence.
    pub fn critical_pairs_join(&self, max_steps: usize) -> Result<bool> {
        for (_, left, right) in self.critical_pairs() {
            if self.normal_form(&left, max_steps)? != self.normal_form(&right, max_steps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::enumerate_words;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn sys(rules: &[(&str, &str)]) -> RewriteSystem {
        RewriteSystem::new(rules.iter().map(|(l, r)| Rule::new(w(l), w(r))).collect())
    }

    #[test]
    fn m6_k2() {
        let s = sys(&[("ab", "bb")]);
        assert_eq!(s.normal_form(&w("aab"), 100).unwrap(), w("bbb"));
    }

    #[test]
    fn bicyclic() {
        let s = sys(&[("ab", "1")]);
        assert_eq!(s.normal_form(&w("ab"), 100).unwrap(), Word::empty());
        assert_eq!(s.normal_form(&w("abba"), 100).unwrap(), w("ba"));
    }

    #[test]
    fn m2_completed() {
        let s = sys(&[("bb", "aa"), ("baa", "aab")]);
        assert_eq!(s.normal_form(&w("bbaa"), 100).unwrap(), w("aaaa"));
        assert!(s.critical_pairs_join(1000).unwrap());
    }

    #[test]
    fn uncompleted_m2_is_not_confluent() {
        let s = sys(&[("bb", "aa")]);
        assert!(!s.critical_pairs_join(1000).unwrap());
    }

    #[test]
    fn budget_trip() {
        let looping = sys(&[("a", "aa")]);
        assert_eq!(looping.normal_form(&w("a"), 50), Err(Error::StepBudgetExceeded(50)));
    }

    #[test]
    fn bicyclic_normal_forms_are_b_star_a_star() {
        let s = sys(&[("ab", "1")]);
        for word in enumerate_words(b"ab", 10) {
            let nf = s.normal_form(&word, 100).unwrap();
            let l = nf.letters();
            let bs = l.iter().take_while(|&&c| c == b'b').count();
            assert!(l[bs..].iter().all(|&c| c == b'a'), "{word} -> {nf}");
            assert_eq!(s.normal_form(&nf, 100).unwrap(), nf);
        }
    }

    #[test]
    fn critical_pairs_found() {
        let s = sys(&[("abaa", "ba")]);
        let pairs = s.critical_pairs();
        // overlaps of abaa with itself: "a" and none else proper ("aa" vs "ab" no)
        assert!(pairs.iter().any(|(src, _, _)| *src == w("abaabaa")));
    }
}
