//! Checking identities against sampled matrices, model pools and free words.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::equality::{bounded_equality, Equality, SearchBudget};
use crate::error::{Error, Result};
use crate::identity::IdentityTerm;
use crate::matrix::Matrix;
use crate::model::{Model, ModelElement, TaggedElement};
use crate::monoid::MonoidId;
use crate::sample::{trial_rng, MatrixSampler, DEFAULT_ENTRY_BOUND, DEFAULT_NEG_INF_PROB};
use crate::word::{enumerate_words, Word};
use crate::word_problem::WordProblem;
use crate::TropMatrix;

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_TRIALS: u64 = 10_000;

/// A value substituted for a variable, or the value of one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Matrix(TropMatrix),
    Element { element: TaggedElement, word: Word },
    Word(Word),
}

pub type Assignment = BTreeMap<char, Value>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Both sides are the same word, so the identity holds everywhere.
    Holds,
    HoldsOnPool {
        substitutions: u64,
    },
    NoCounterexample {
        trials: u64,
    },
    Counterexample {
        assignment: Assignment,
        trial: Option<u64>,
        lhs: Value,
        rhs: Value,
    },
    Unknown {
        unresolved: u64,
        first: Option<Assignment>,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub identity: String,
    pub backend: String,
    #[serde(flatten)]
    pub status: Status,
    pub seed: Option<u64>,
}

impl CheckOutcome {
    pub fn is_counterexample(&self) -> bool {
        matches!(self.status, Status::Counterexample { .. })
    }

    pub fn status_name(&self) -> &'static str {
        match self.status {
            Status::Holds => "HOLDS",
            Status::HoldsOnPool { .. } => "HOLDS_ON_POOL",
            Status::NoCounterexample { .. } => "NO_COUNTEREXAMPLE",
            Status::Counterexample { .. } => "COUNTEREXAMPLE",
            Status::Unknown { .. } => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingConfig {
    pub n: usize,
    pub triangular: bool,
    pub trials: u64,
    pub seed: u64,
    pub entry_bound: i64,
    pub neg_inf_prob: f64,
    pub parallel: bool,
}

impl SamplingConfig {
    pub fn new(n: usize, triangular: bool) -> Self {
        SamplingConfig {
            n,
            triangular,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            entry_bound: DEFAULT_ENTRY_BOUND,
            neg_inf_prob: DEFAULT_NEG_INF_PROB,
            parallel: true,
        }
    }
}

fn eval_matrix_word(w: &Word, vars: &[u8], images: &[TropMatrix], n: usize) -> Result<TropMatrix> {
    w.letters().iter().try_fold(Matrix::identity(n), |acc, c| {
        let i = vars.iter().position(|v| v == c).expect("every letter is a variable");
        acc.mul(&images[i])
    })
}

/// Substitutes independently sampled matrices for the variables, `trials`
/// times, and reports the lowest-numbered trial whose sides differ.
///
/// Trial `t` draws from its own stream `trial_rng(seed, t)`, so serial and
/// parallel runs agree and any counterexample can be replayed from its index.
/// Trial index, variable images and both evaluated sides.
type Failure = (u64, Vec<TropMatrix>, TropMatrix, TropMatrix);

pub fn check_identity_matrices(id: &IdentityTerm, cfg: &SamplingConfig) -> Result<CheckOutcome> {
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("matrix dimension must be positive".into()));
    }
    if !(0.0..=1.0).contains(&cfg.neg_inf_prob) {
        return Err(Error::InvalidArgument(format!(
            "probability {} outside [0, 1]",
            cfg.neg_inf_prob
        )));
    }
    let vars = id.variables();
    let sampler = MatrixSampler {
        n: cfg.n,
        triangular: cfg.triangular,
        entry_bound: cfg.entry_bound,
        neg_inf_prob: cfg.neg_inf_prob,
    };
    let trial = |t: u64| -> Option<Result<Failure>> {
        let run = || -> Result<Option<Failure>> {
            let mut rng = trial_rng(cfg.seed, t);
            let images = vars
                .iter()
                .map(|_| sampler.sample(&mut rng))
                .collect::<Result<Vec<_>>>()?;
            let l = eval_matrix_word(id.lhs(), &vars, &images, cfg.n)?;
            let r = eval_matrix_word(id.rhs(), &vars, &images, cfg.n)?;
            Ok((l != r).then_some((t, images, l, r)))
        };
        run().transpose()
    };
    let found = if cfg.parallel {
        (0..cfg.trials).into_par_iter().find_map_first(trial)
    } else {
        (0..cfg.trials).find_map(trial)
    };
    let status = match found.transpose()? {
        None => Status::NoCounterexample { trials: cfg.trials },
        Some((t, images, l, r)) => Status::Counterexample {
            assignment: vars
                .iter()
                .map(|&v| v as char)
                .zip(images.into_iter().map(Value::Matrix))
                .collect(),
            trial: Some(t),
            lhs: Value::Matrix(l),
            rhs: Value::Matrix(r),
        },
    };
    let target = if cfg.triangular { "ut" } else { "mt" };
    Ok(CheckOutcome {
        identity: id.to_string(),
        backend: format!("{target}:{}", cfg.n),
        status,
        seed: Some(cfg.seed),
    })
}

/// Calls `visit` on every tuple of indices into a pool of size `size`, the
/// first position varying slowest. Stops early when `visit` returns true.
fn for_each_tuple(size: usize, arity: usize, mut visit: impl FnMut(&[usize]) -> Result<bool>) -> Result<u64> {
    let mut idx = vec![0usize; arity];
    let mut count = 0u64;
    if size == 0 {
        return Ok(0);
    }
    loop {
        count += 1;
        if visit(&idx)? {
            return Ok(count);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < size {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Exhaustively substitutes pool elements (every exponent field at most
/// `pool_bound`) for the variables.
///
/// `M4` and `M7` have no model; their pool is all words of length at most
/// `pool_bound`, compared exactly through [`WordProblem`].
pub fn check_identity_model(id: &IdentityTerm, monoid: MonoidId, pool_bound: u64) -> Result<CheckOutcome> {
    let monoid = monoid.validate()?;
    let vars = id.variables();
    let outcome = |status| CheckOutcome {
        identity: id.to_string(),
        backend: format!("model:{}", monoid.slug()),
        status,
        seed: None,
    };
    let model = match Model::new(monoid) {
        Ok(m) => m,
        Err(Error::UnsupportedModel(_)) => return Ok(outcome(check_on_words(id, monoid, pool_bound)?)),
        Err(e) => return Err(e),
    };

    let pool = model.pool(pool_bound);
    let eval = |w: &Word, chosen: &[usize]| -> Result<ModelElement> {
        w.letters().iter().try_fold(model.one(), |acc, c| {
            let i = vars.iter().position(|v| v == c).expect("every letter is a variable");
            model.mul(&acc, &pool[chosen[i]])
        })
    };
    let mut witness = None;
    let substitutions = for_each_tuple(pool.len(), vars.len(), |chosen| {
        let (l, r) = (eval(id.lhs(), chosen)?, eval(id.rhs(), chosen)?);
        if l != r {
            witness = Some((chosen.to_vec(), l, r));
            return Ok(true);
        }
        Ok(false)
    })?;
    let value = |x: &ModelElement| -> Result<Value> {
        Ok(Value::Element {
            element: model.tag(x),
            word: model.canonical_word(x)?,
        })
    };
    let status = match witness {
        None => Status::HoldsOnPool { substitutions },
        Some((chosen, l, r)) => Status::Counterexample {
            assignment: vars
                .iter()
                .zip(&chosen)
                .map(|(&v, &i)| Ok((v as char, value(&pool[i])?)))
                .collect::<Result<_>>()?,
            trial: None,
            lhs: value(&l)?,
            rhs: value(&r)?,
        },
    };
    Ok(outcome(status))
}

fn substitute_words(id: &IdentityTerm, vars: &[u8], pool: &[Word], chosen: &[usize]) -> (Word, Word) {
    id.substitute(|c| pool[chosen[vars.iter().position(|&v| v == c).expect("variable")]].clone())
}

fn word_assignment(vars: &[u8], pool: &[Word], chosen: &[usize]) -> Assignment {
    vars.iter()
        .zip(chosen)
        .map(|(&v, &i)| (v as char, Value::Word(pool[i].clone())))
        .collect()
}

fn check_on_words(id: &IdentityTerm, monoid: MonoidId, pool_bound: u64) -> Result<Status> {
    let wp = WordProblem::new(monoid)?;
    let pool: Vec<Word> = enumerate_words(monoid.alphabet(), pool_bound as usize).collect();
    let vars = id.variables();
    let mut witness = None;
    let substitutions = for_each_tuple(pool.len(), vars.len(), |chosen| {
        let (l, r) = substitute_words(id, &vars, &pool, chosen);
        let (nl, nr) = (wp.normal_form(&l)?, wp.normal_form(&r)?);
        if nl != nr {
            witness = Some((word_assignment(&vars, &pool, chosen), nl, nr));
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(match witness {
        None => Status::HoldsOnPool { substitutions },
        Some((assignment, l, r)) => Status::Counterexample {
            assignment,
            trial: None,
            lhs: Value::Word(l),
            rhs: Value::Word(r),
        },
    })
}

/// Budget for [`check_identity_by_search`]; `max_len` 0 means the longest
/// substituted side plus twice the longer relation side.
pub fn default_word_budget() -> SearchBudget {
    SearchBudget {
        max_len: 0,
        max_steps: 40,
        max_nodes: 2_000_000,
    }
}

/// Pool check over words of length at most `pool_bound` that only uses the
/// defining relation, through [`bounded_equality`]. Works for any monoid but
/// can only answer `HOLDS_ON_POOL` or `UNKNOWN`.
pub fn check_identity_by_search(
    id: &IdentityTerm,
    monoid: MonoidId,
    pool_bound: u64,
    budget: SearchBudget,
) -> Result<CheckOutcome> {
    let monoid = monoid.validate()?;
    Ok(CheckOutcome {
        identity: id.to_string(),
        backend: format!("search:{}", monoid.slug()),
        status: check_by_search(id, monoid, pool_bound, budget)?,
        seed: None,
    })
}

fn check_by_search(id: &IdentityTerm, monoid: MonoidId, pool_bound: u64, budget: SearchBudget) -> Result<Status> {
    let p = monoid.presentation();
    let pool: Vec<Word> = enumerate_words(p.alphabet(), pool_bound as usize).collect();
    let vars = id.variables();
    let mut unresolved = 0u64;
    let mut first = None;
    let substitutions = for_each_tuple(pool.len(), vars.len(), |chosen| {
        let (l, r) = substitute_words(id, &vars, &pool, chosen);
        let mut b = budget;
        if b.max_len == 0 {
            b.max_len = l.len().max(r.len()) + 2 * p.lhs().len().max(p.rhs().len());
        }
        if bounded_equality(&p, &l, &r, b) == Equality::Unknown {
            unresolved += 1;
            first.get_or_insert_with(|| word_assignment(&vars, &pool, chosen));
        }
        Ok(false)
    })?;
    Ok(if unresolved == 0 {
        Status::HoldsOnPool { substitutions }
    } else {
        Status::Unknown {
            unresolved,
            first,
            reason: "bounded search did not connect both sides".into(),
        }
    })
}

/// Substitutes distinct letters for distinct variables; the identity holds in
/// a free semigroup exactly when the two sides coincide.
pub fn free_word_check(id: &IdentityTerm) -> CheckOutcome {
    let vars = id.variables();
    let letter = |c: u8| b'a' + vars.iter().position(|&v| v == c).expect("variable") as u8;
    let image = |c: u8| Word::from_bytes(vec![letter(c)]);
    let (l, r) = id.substitute(image);
    let status = if l == r {
        Status::Holds
    } else {
        Status::Counterexample {
            assignment: vars.iter().map(|&v| (v as char, Value::Word(image(v)))).collect(),
            trial: None,
            lhs: Value::Word(l),
            rhs: Value::Word(r),
        }
    };
    CheckOutcome {
        identity: id.to_string(),
        backend: "free".into(),
        status,
        seed: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::identity_catalog;

    fn cat(name: &str) -> IdentityTerm {
        identity_catalog(name).unwrap()
    }

    #[test]
    fn adian_on_ut2() {
        let mut cfg = SamplingConfig::new(2, true);
        cfg.trials = 2000;
        let out = check_identity_matrices(&cat("adian"), &cfg).unwrap();
        assert_eq!(out.status, Status::NoCounterexample { trials: 2000 });
        assert_eq!(out.seed, Some(DEFAULT_SEED));
    }

    #[test]
    fn commutativity_fails_on_ut2() {
        let mut cfg = SamplingConfig::new(2, true);
        cfg.trials = 100;
        let par = check_identity_matrices(&cat("commutativity"), &cfg).unwrap();
        cfg.parallel = false;
        let ser = check_identity_matrices(&cat("commutativity"), &cfg).unwrap();
        assert_eq!(par, ser);
        let Status::Counterexample {
            assignment,
            trial: Some(t),
            lhs,
            rhs,
        } = par.status
        else {
            panic!("{par:?}")
        };
        // replay the reported trial
        let mut rng = trial_rng(DEFAULT_SEED, t);
        let s = MatrixSampler::<i64>::new(2, true, DEFAULT_ENTRY_BOUND);
        let (x, y) = (s.sample(&mut rng).unwrap(), s.sample(&mut rng).unwrap());
        assert_eq!(assignment[&'x'], Value::Matrix(x.clone()));
        assert_eq!(lhs, Value::Matrix(x.mul(&y).unwrap()));
        assert_eq!(rhs, Value::Matrix(y.mul(&x).unwrap()));
    }

    #[test]
    fn adian_fails_on_mt2() {
        let mut cfg = SamplingConfig::new(2, false);
        cfg.trials = 1000;
        assert!(check_identity_matrices(&cat("adian"), &cfg)
            .unwrap()
            .is_counterexample());
    }

    #[test]
    fn zero_trials_rejected() {
        let mut cfg = SamplingConfig::new(2, true);
        cfg.trials = 0;
        assert!(check_identity_matrices(&cat("adian"), &cfg).is_err());
    }

    #[test]
    fn shneerson_five_on_m5() {
        let out = check_identity_model(&cat("shneerson(5)"), MonoidId::M5, 3).unwrap();
        assert_eq!(out.status, Status::HoldsOnPool { substitutions: 4096 });
    }

    #[test]
    fn klein_squares_commute() {
        let out = check_identity_model(&cat("square_comm"), MonoidId::Klein, 4).unwrap();
        assert_eq!(out.status, Status::HoldsOnPool { substitutions: 81 * 81 });
    }

    #[test]
    fn m2_is_not_commutative() {
        let out = check_identity_model(&cat("commutativity"), MonoidId::M2, 2).unwrap();
        let Status::Counterexample { assignment, .. } = out.status else {
            panic!()
        };
        let word = |c: char| match &assignment[&c] {
            Value::Element { word, .. } => word.to_string(),
            other => panic!("{other:?}"),
        };
        assert_eq!((word('x'), word('y')), ("a".to_string(), "b".to_string()));
    }

    #[test]
    fn free_words() {
        let out = free_word_check(&cat("adian"));
        let Status::Counterexample { lhs, rhs, .. } = out.status else {
            panic!()
        };
        assert_eq!(lhs, Value::Word(Word::parse("abbaababba").unwrap()));
        assert_eq!(rhs, Value::Word(Word::parse("abbabaabba").unwrap()));
        let trivial = IdentityTerm::parse("xy=xy").unwrap();
        assert_eq!(free_word_check(&trivial).status, Status::Holds);
    }

    #[test]
    fn outcome_json() {
        let out = free_word_check(&cat("commutativity"));
        let v: serde_json::Value = serde_json::to_value(&out).unwrap();
        assert_eq!(v["status"], "COUNTEREXAMPLE");
        assert_eq!(v["assignment"]["x"], "a");
        assert_eq!(v["lhs"], "ab");
    }

    #[test]
    fn m4_and_m7_are_decided_exactly() {
        let four = check_identity_model(&cat("shneerson(4)"), MonoidId::M4, 2).unwrap();
        assert_eq!(four.status, Status::HoldsOnPool { substitutions: 49 });
        let comm = check_identity_model(&cat("commutativity"), MonoidId::M7, 2).unwrap();
        assert!(comm.is_counterexample());
    }

    #[test]
    fn search_route_never_refutes() {
        let out = check_identity_by_search(&cat("commutativity"), MonoidId::M4, 1, default_word_budget()).unwrap();
        assert_eq!(out.status_name(), "UNKNOWN");
        let out = check_identity_by_search(&cat("shneerson(5)"), MonoidId::M5, 1, default_word_budget()).unwrap();
        assert_eq!(out.status, Status::HoldsOnPool { substitutions: 9 });
    }

    #[test]
    fn tuples() {
        let mut seen = Vec::new();
        let n = for_each_tuple(3, 2, |t| {
            seen.push(t.to_vec());
            Ok(false)
        })
        .unwrap();
        assert_eq!(n, 9);
        assert_eq!(seen[1], vec![0, 1]);
    }
}
