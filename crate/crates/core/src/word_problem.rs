//! Exact equality of words in every catalog monoid.
//!
//! Monoids with a model compare model images. `M4` has no model, but adding
//! the generator `c = ba` turns it into `⟨a,b,c | aca = c, ba = c⟩`, whose
//! completion under the length-lexicographic order with `a < c < b` is the
//! finite system returned by [`m4_system`]. `M7` is handled by reversal.

use crate::error::Result;
use crate::model::Model;
use crate::monoid::MonoidId;
use crate::rewriting::{RewriteSystem, Rule, DEFAULT_STEP_BUDGET};
use crate::word::Word;

/// Letter order used to complete the extended `M4` presentation.
pub const M4_LETTER_ORDER: &[u8] = b"acb";

const M4_RULES: [(&str, &str); 9] = [
    ("aca", "c"),
    ("ba", "c"),
    ("cca", "bc"),
    ("acc", "bc"),
    ("bca", "abc"),
    ("acbc", "ccc"),
    ("bccc", "ccbc"),
    ("bbc", "ccc"),
    ("bccbc", "ccccc"),
];

/// Complete rewriting system for `M4` over `{a, b, c}` with `c = ba`.
pub fn m4_system() -> RewriteSystem {
    RewriteSystem::new(
        M4_RULES
            .iter()
            .map(|(l, r)| Rule::new(Word::parse(l).expect("static"), Word::parse(r).expect("static")))
            .collect(),
    )
}

fn expand_c(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &x in w.letters() {
        if x == b'c' {
            out.extend_from_slice(b"ba");
        } else {
            out.push(x);
        }
    }
    Word::from_bytes(out)
}

/// Decides `u = v` in one monoid.
#[derive(Debug, Clone)]
pub enum WordProblem {
    Model(Model),
    Rewriting { system: RewriteSystem, reversed: bool },
}

impl WordProblem {
    pub fn new(id: MonoidId) -> Result<Self> {
        Ok(match id.validate()? {
            MonoidId::M4 => WordProblem::Rewriting {
                system: m4_system(),
                reversed: false,
            },
            MonoidId::M7 => WordProblem::Rewriting {
                system: m4_system(),
                reversed: true,
            },
            other => WordProblem::Model(Model::new(other)?),
        })
    }

    /// A representative over `{a, b}` shared by exactly the words equal to `w`.
    ///
    /// For `M4` the irreducible word is mapped back with `c -> ba`. Irreducible
    /// words never contain `ba`, so every `ba` in the result marks a former `c`
    /// and distinct normal forms stay distinct.
    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        match self {
            WordProblem::Model(m) => m.canonical_word(&m.from_word(w)?),
            WordProblem::Rewriting { system, reversed } => {
                let input = if *reversed { w.reversed() } else { w.clone() };
                let nf = expand_c(&system.normal_form(&input, DEFAULT_STEP_BUDGET)?);
                Ok(if *reversed { nf.reversed() } else { nf })
            }
        }
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        match self {
            WordProblem::Model(m) => Ok(m.from_word(u)? == m.from_word(v)?),
            _ => Ok(self.normal_form(u)? == self.normal_form(v)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equality::{bounded_equality, Equality, SearchBudget};
    use crate::word::enumerate_words;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn m4_system_is_the_completion() {
        let start = RewriteSystem::new(vec![Rule::new(w("ba"), w("c")), Rule::new(w("aca"), w("c"))]);
        let completed = start.complete(M4_LETTER_ORDER, 50).unwrap();
        let mut got: Vec<_> = completed
            .rules()
            .iter()
            .map(|r| (r.lhs.to_string(), r.rhs.to_string()))
            .collect();
        let mut want: Vec<_> = M4_RULES.iter().map(|(l, r)| (l.to_string(), r.to_string())).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert!(m4_system().critical_pairs_join(1000).unwrap());
    }

    #[test]
    fn relations_hold() {
        for id in [MonoidId::M4, MonoidId::M7, MonoidId::M5, MonoidId::Klein] {
            let (u, v) = id.relation();
            assert!(WordProblem::new(id).unwrap().equal(&u, &v).unwrap(), "{id}");
        }
        let m4 = WordProblem::new(MonoidId::M4).unwrap();
        assert!(m4.equal(&w("bba"), &w("ababa")).unwrap());
        assert!(!m4.equal(&w("ab"), &w("ba")).unwrap());
        assert_eq!(m4.normal_form(&w("ababa")).unwrap(), w("bba"));
        let m7 = WordProblem::new(MonoidId::M7).unwrap();
        assert_eq!(m7.normal_form(&w("ababa")).unwrap(), w("abb"));
    }

    #[test]
    fn agrees_with_bounded_search() {
        for id in [MonoidId::M4, MonoidId::M7] {
            let wp = WordProblem::new(id).unwrap();
            let p = id.presentation();
            let words: Vec<Word> = enumerate_words(b"ab", 5).collect();
            for u in &words {
                for v in &words {
                    if bounded_equality(&p, u, v, SearchBudget::new(9, 6)) == Equality::Equal {
                        assert!(wp.equal(u, v).unwrap(), "{id}: {u} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn equal_normal_forms_are_connected() {
        let wp = WordProblem::new(MonoidId::M4).unwrap();
        let p = MonoidId::M4.presentation();
        let mut first: std::collections::HashMap<Word, Word> = std::collections::HashMap::new();
        for u in enumerate_words(b"ab", 7) {
            let nf = wp.normal_form(&u).unwrap();
            match first.get(&nf) {
                Some(rep) => {
                    assert_eq!(
                        bounded_equality(&p, rep, &u, SearchBudget::new(13, 14)),
                        Equality::Equal,
                        "{rep} {u}"
                    )
                }
                None => {
                    first.insert(nf, u);
                }
            }
        }
    }
}
