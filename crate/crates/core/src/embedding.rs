//! Exhaustive faithfulness sweep of a representation against its model.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::model::{Model, ModelElement};
use crate::monoid::MonoidId;
use crate::representation::Representation;
use crate::word::Word;
use crate::TropMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub monoid: MonoidId,
    pub max_len: usize,
    pub relation_holds: bool,
    pub hom_checked_words: usize,
    pub classes: usize,
    /// Equal model elements always gave equal matrices.
    pub hom_consistent: bool,
    /// Distinct model elements always gave distinct matrices.
    pub injective: bool,
    pub witnesses: Option<(Word, Word)>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.relation_holds && self.hom_consistent && self.injective
    }
}

type Row = (Word, ModelElement, TropMatrix);

/// Extends every word of one length by each generator, keeping shortlex order.
fn next_layer(
    layer: &[Row],
    gens: &[(u8, ModelElement, TropMatrix)],
    model: &Model,
    parallel: bool,
) -> Result<Vec<Row>> {
    let extend = |(w, x, m): &Row| -> Result<Vec<Row>> {
        gens.iter()
            .map(|(c, gx, gm)| Ok((w.concat(&Word::from_bytes(vec![*c])), model.mul(x, gx)?, m.mul(gm)?)))
            .collect()
    };
    let chunks: Vec<Vec<Row>> = if parallel {
        layer.par_iter().map(extend).collect::<Result<_>>()?
    } else {
        layer.iter().map(extend).collect::<Result<_>>()?
    };
    Ok(chunks.into_iter().flatten().collect())
}

/// Sweeps every word up to `max_len` through both `model` and `rep`.
pub fn verify_embedding_with(
    rep: &Representation,
    model: &Model,
    max_len: usize,
    parallel: bool,
) -> Result<EmbeddingReport> {
    let gens = rep
        .alphabet()
        .into_iter()
        .map(|c| Ok((c, model.generator(c)?, rep.image(c)?.clone())))
        .collect::<Result<Vec<_>>>()?;

    let mut by_element: HashMap<ModelElement, (TropMatrix, Word)> = HashMap::new();
    let mut by_matrix: HashMap<TropMatrix, (ModelElement, Word)> = HashMap::new();
    let mut report = EmbeddingReport {
        monoid: rep.monoid(),
        max_len,
        relation_holds: rep.verify_relation(),
        hom_checked_words: 0,
        classes: 0,
        hom_consistent: true,
        injective: true,
        witnesses: None,
    };

    let mut layer: Vec<Row> = vec![(Word::empty(), model.one(), TropMatrix::identity(rep.dim()))];
    for len in 0..=max_len {
        if len > 0 {
            layer = next_layer(&layer, &gens, model, parallel)?;
        }
        if len == 0 && !rep.is_unital() {
            continue;
        }
        for (w, x, m) in &layer {
            report.hom_checked_words += 1;
            match by_element.entry(*x) {
                Entry::Occupied(seen) => {
                    if seen.get().0 != *m {
                        report.hom_consistent = false;
                        report
                            .witnesses
                            .get_or_insert_with(|| (seen.get().1.clone(), w.clone()));
                    }
                    continue;
                }
                Entry::Vacant(slot) => {
                    slot.insert((m.clone(), w.clone()));
                }
            }
            match by_matrix.entry(m.clone()) {
                Entry::Occupied(seen) => {
                    if seen.get().0 != *x {
                        report.injective = false;
                        report
                            .witnesses
                            .get_or_insert_with(|| (seen.get().1.clone(), w.clone()));
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert((*x, w.clone()));
                }
            }
        }
    }
    report.classes = by_element.len();
    Ok(report)
}

/// [`verify_embedding_with`] for the catalog representation and model of `id`.
pub fn verify_embedding(id: MonoidId, max_len: usize, parallel: bool) -> Result<EmbeddingReport> {
    let model = Model::new(id)?;
    let rep = Representation::for_monoid(id)?;
    verify_embedding_with(&rep, &model, max_len, parallel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::representation::Target;
    use crate::Error;

    #[test]
    fn bicyclic_classes() {
        let r = verify_embedding(MonoidId::Bicyclic, 6, false).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes, 28);
        assert_eq!(r.hom_checked_words, 126);
        assert_eq!(r.witnesses, None);
    }

    #[test]
    fn monogenic_classes() {
        let r = verify_embedding(MonoidId::Monogenic { k: 5, l: 2 }, 10, false).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes, 5);
    }

    #[test]
    fn m5_sweep() {
        assert!(verify_embedding(MonoidId::M5, 8, false).unwrap().passed());
    }

    #[test]
    fn parallel_matches_serial() {
        for id in [MonoidId::M3, MonoidId::M6(2)] {
            assert_eq!(
                verify_embedding(id, 7, true).unwrap(),
                verify_embedding(id, 7, false).unwrap()
            );
        }
    }

    #[test]
    fn non_faithful_images_get_a_witness() {
        // both generators sent to the same matrix: ab and ba collide in M1
        let a = Matrix::from_rows(vec![vec![crate::Trop::Finite(1)]]).unwrap();
        let rep = Representation::new(
            MonoidId::M1,
            Target::UpperTriangular,
            true,
            vec![(b'a', a.clone()), (b'b', a)],
        )
        .unwrap();
        let r = verify_embedding_with(&rep, &Model::new(MonoidId::M1).unwrap(), 3, false).unwrap();
        assert!(r.relation_holds);
        assert!(!r.injective);
        assert_eq!(
            r.witnesses,
            Some((Word::parse("a").unwrap(), Word::parse("b").unwrap()))
        );
    }

    #[test]
    fn m4_has_no_model() {
        assert_eq!(
            verify_embedding(MonoidId::M4, 3, false),
            Err(Error::UnsupportedModel(MonoidId::M4))
        );
    }
}
