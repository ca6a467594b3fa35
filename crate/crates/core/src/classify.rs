//! Classification of one-relation presentations against the catalog.
//!
//! A presentation is normalised first: a generator equal to a word that does
//! not mention it is eliminated, then relation sides and generator names are
//! permuted until a catalog template matches. The verdict columns are static
//! per catalog row.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::identity::{identity_catalog, IdentityTerm};
use crate::monoid::MonoidId;
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tropical {
    Yes,
    No,
    Unknown,
    Unsupported,
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tropical::Yes => "YES",
            Tropical::No => "NO",
            Tropical::Unknown => "UNKNOWN",
            Tropical::Unsupported => "UNSUPPORTED",
        })
    }
}

/// Rank information as stated in the table; `AtMost` is never tightened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankBound {
    Exact(u32),
    AtMost(u32),
    None,
}

impl fmt::Display for RankBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankBound::Exact(n) => write!(f, "{n}"),
            RankBound::AtMost(n) => write!(f, "<={n}"),
            RankBound::None => f.write_str("-"),
        }
    }
}

impl Serialize for RankBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RankBound::None => s.serialize_none(),
            other => s.collect_str(other),
        }
    }
}

/// What a presentation was recognised as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognized {
    Monoid(MonoidId),
    OutsideList,
    Unsupported,
}

impl Serialize for Recognized {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Recognized::Monoid(id) => s.collect_str(id),
            Recognized::OutsideList => s.serialize_str("OUTSIDE_LIST"),
            Recognized::Unsupported => s.serialize_str("UNSUPPORTED"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalized {
    /// The matched template, or the presentation after elimination.
    pub presentation: Presentation,
    /// Original generator to template letter.
    pub renaming: BTreeMap<char, char>,
    pub notes: Vec<String>,
    pub recognized: Recognized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub input: String,
    pub monoid: Recognized,
    /// `YES`, `NO` or `UNSUPPORTED`.
    pub satisfies_identity: Tropical,
    pub identity: Option<String>,
    pub ut_tropical: Tropical,
    pub ut_rank: RankBound,
    pub m_tropical: Tropical,
    pub m_rank: RankBound,
    pub renaming: BTreeMap<char, char>,
    pub notes: Vec<String>,
    pub reasons: Vec<String>,
}

impl ClassificationVerdict {
    /// False only for `UNSUPPORTED` inputs.
    pub fn is_definitive(&self) -> bool {
        self.monoid != Recognized::Unsupported
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTableRow {
    pub name: String,
    pub relation: String,
    pub identity: String,
    pub ut_tropical: Tropical,
    pub ut_rank: String,
    pub m_tropical: Tropical,
    pub m_rank: String,
    pub reasons: Vec<String>,
}

struct RowData {
    identity: &'static str,
    ut: (Tropical, RankBound),
    mt: (Tropical, RankBound),
    reasons: &'static [&'static str],
}

fn row_data(id: MonoidId) -> RowData {
    use RankBound::*;
    use Tropical::{No, Unknown, Yes};
    let (identity, ut, mt, reasons): (_, _, _, &'static [&'static str]) = match id {
        MonoidId::FreeMonogenic => (
            "commutativity",
            (Yes, Exact(1)),
            (Yes, Exact(1)),
            &["a maps to the 1x1 matrix (1)"],
        ),
        MonoidId::Monogenic { k, l } if k == l + 1 => (
            "commutativity",
            (Yes, AtMost(l.max(1))),
            (Yes, AtMost(l.max(1))),
            &["a maps to the strictly upper triangular matrix of ones, nilpotent of index l"],
        ),
        MonoidId::Monogenic { k, .. } => (
            "commutativity",
            (No, None),
            (Yes, AtMost(k)),
            &[
                "a non-aperiodic monogenic monoid contains a non-trivial cyclic group, which no UT_n contains",
                "every finite monoid embeds in MT_n through transformation matrices on k points",
            ],
        ),
        MonoidId::Bicyclic => (
            "adian",
            (Yes, Exact(2)),
            (Yes, Exact(2)),
            &["explicit 2x2 upper triangular pair with B^i A^j = [[0, j], [-inf, j-i]]"],
        ),
        MonoidId::Klein => (
            "square_comm",
            (No, None),
            (Yes, Exact(2)),
            &[
                "cancellative subsemigroups of UT_n are commutative",
                "explicit 2x2 pair with ABBA = I",
            ],
        ),
        MonoidId::M1 => (
            "shneerson(1)",
            (Yes, Exact(2)),
            (Yes, Exact(2)),
            &["diagonal images diag(1,0), diag(0,1)"],
        ),
        MonoidId::M2 => (
            "shneerson(2)",
            (No, None),
            (Yes, Exact(2)),
            &[
                "cancellative and not commutative, so not in any UT_n",
                "explicit 2x2 pair with A^2 = B^2",
            ],
        ),
        MonoidId::M3 => (
            "shneerson(3)",
            (No, None),
            (Yes, Exact(2)),
            &[
                "cancellative and not commutative, so not in any UT_n",
                "explicit 2x2 pair with ABA = B",
            ],
        ),
        MonoidId::M4 | MonoidId::M7 => (
            if id == MonoidId::M4 {
                "shneerson(4)"
            } else {
                "shneerson(7)"
            },
            (No, None),
            (Unknown, None),
            &[
                "contains a copy of M3, which is not UT-tropical",
                "MT-tropicality is open",
            ],
        ),
        MonoidId::M5 | MonoidId::M8 => (
            if id == MonoidId::M5 {
                "shneerson(5)"
            } else {
                "shneerson(8)"
            },
            (Yes, AtMost(4)),
            (Yes, AtMost(4)),
            &["explicit 4x4 upper triangular pair; the reversed monoid uses anti-transposed images"],
        ),
        MonoidId::M6(_) | MonoidId::M9(_) => (
            if matches!(id, MonoidId::M6(_)) {
                "shneerson(6)"
            } else {
                "shneerson(9)"
            },
            (Yes, Exact(2)),
            (Yes, Exact(2)),
            &["explicit 2x2 upper triangular pair"],
        ),
    };
    RowData {
        identity,
        ut,
        mt,
        reasons,
    }
}

/// The identity listed for `id`.
pub fn row_identity(id: MonoidId) -> IdentityTerm {
    identity_catalog(row_data(id).identity).expect("catalog names resolve")
}

/// The concrete table row for a valid `id`.
pub fn table_row(id: MonoidId) -> crate::Result<ClassTableRow> {
    let id = id.validate()?;
    let d = row_data(id);
    Ok(ClassTableRow {
        name: id.to_string(),
        relation: id.presentation().to_string(),
        identity: row_identity(id).to_string(),
        ut_tropical: d.ut.0,
        ut_rank: d.ut.1.to_string(),
        m_tropical: d.mt.0,
        m_rank: d.mt.1.to_string(),
        reasons: d.reasons.iter().map(|s| s.to_string()).collect(),
    })
}

/// The fourteen rows with symbolic parameters.
pub fn full_table() -> Vec<ClassTableRow> {
    let symbolic: [(MonoidId, &str, &str, Option<&str>); 14] = [
        (MonoidId::FreeMonogenic, "N", "a|(none)", None),
        (MonoidId::Monogenic { k: 3, l: 1 }, "C(k,l)", "a|a^k=a^l", Some("<=k")),
        (
            MonoidId::Monogenic { k: 3, l: 2 },
            "C(l+1,l)",
            "a|a^(l+1)=a^l",
            Some("<=l"),
        ),
        (MonoidId::Bicyclic, "B", "a,b|ab=1", None),
        (MonoidId::Klein, "K", "a,b|abba=1", None),
        (MonoidId::M1, "M1", "a,b|ab=ba", None),
        (MonoidId::M2, "M2", "a,b|aa=bb", None),
        (MonoidId::M3, "M3", "a,b|aba=b", None),
        (MonoidId::M4, "M4", "a,b|abaa=ba", None),
        (MonoidId::M5, "M5", "a,b|aba=ba", None),
        (MonoidId::M6(2), "M6(k)", "a,b|ab=b^k", None),
        (MonoidId::M7, "M7", "a,b|aaba=ab", None),
        (MonoidId::M8, "M8", "a,b|aba=ab", None),
        (MonoidId::M9(2), "M9(k)", "a,b|ba=b^k", None),
    ];
    symbolic
        .iter()
        .map(|&(id, name, relation, rank)| {
            let mut row = table_row(id).expect("representative ids are valid");
            row.name = name.into();
            row.relation = relation.into();
            if let Some(r) = rank {
                if row.ut_tropical == Tropical::Yes {
                    row.ut_rank = r.into();
                }
                row.m_rank = r.into();
            }
            row
        })
        .collect()
}

fn rename(w: &Word, map: &BTreeMap<u8, u8>) -> Word {
    w.substitute(|c| Word::from_bytes(vec![map[&c]]))
}

fn single_letter(w: &Word) -> Option<u8> {
    match w.letters() {
        [c] => Some(*c),
        _ => None,
    }
}

/// Eliminates one generator `x` from a relation `x = w` (or `w = x`) with
/// `x` not in `w`, when at least two generators exist.
fn eliminate(p: &Presentation) -> Option<(Presentation, String)> {
    if p.alphabet().len() < 2 {
        return None;
    }
    for (x, w) in [(p.lhs(), p.rhs()), (p.rhs(), p.lhs())] {
        if let Some(c) = single_letter(x) {
            if !w.contains_letter(c) {
                let alphabet: Vec<u8> = p.alphabet().iter().copied().filter(|&g| g != c).collect();
                let note = format!("eliminated generator {} = {}", c as char, w);
                let free =
                    Presentation::new(alphabet, Word::empty(), Word::empty()).expect("subset of a valid alphabet");
                return Some((free, note));
            }
        }
    }
    None
}

fn power_of(w: &Word, letter: u8) -> Option<usize> {
    w.letters().iter().all(|&c| c == letter).then_some(w.len())
}

/// Matches a two-letter relation already renamed onto `{a, b}`.
fn match_two_letter(u: &Word, v: &Word) -> Option<MonoidId> {
    let (us, vs) = (u.to_string(), v.to_string());
    let id = match (us.as_str(), vs.as_str()) {
        ("ab", "1") => MonoidId::Bicyclic,
        ("abba", "1") => MonoidId::Klein,
        ("ab", "ba") => MonoidId::M1,
        ("aa", "bb") => MonoidId::M2,
        ("aba", "b") => MonoidId::M3,
        ("abaa", "ba") => MonoidId::M4,
        ("aba", "ba") => MonoidId::M5,
        ("aaba", "ab") => MonoidId::M7,
        ("aba", "ab") => MonoidId::M8,
        ("ab", _) if !v.is_empty() => MonoidId::M6(u32::try_from(power_of(v, b'b')?).ok()?),
        ("ba", _) if !v.is_empty() => MonoidId::M9(u32::try_from(power_of(v, b'b')?).ok()?),
        _ => return None,
    };
    Some(id)
}

/// Normalises `p` and recognises it when possible.
pub fn normalize(p: &Presentation) -> Normalized {
    let mut notes = Vec::new();
    let mut current = p.clone();
    while let Some((next, note)) = eliminate(&current) {
        notes.push(note);
        current = next;
    }
    let alphabet = current.alphabet().to_vec();
    let unmatched = |current: Presentation, notes, recognized| Normalized {
        presentation: current,
        renaming: BTreeMap::new(),
        notes,
        recognized,
    };

    if alphabet.len() == 1 {
        let g = alphabet[0];
        let (Some(k), Some(l)) = (power_of(current.lhs(), g), power_of(current.rhs(), g)) else {
            return unmatched(current, notes, Recognized::OutsideList);
        };
        let (k, l) = (k.max(l) as u32, k.min(l) as u32);
        let id = if k == l {
            MonoidId::FreeMonogenic
        } else {
            MonoidId::Monogenic { k, l }
        };
        if g != b'a' {
            notes.push(format!("renamed {} to a", g as char));
        }
        return Normalized {
            presentation: id.presentation(),
            renaming: BTreeMap::from([(g as char, 'a')]),
            notes,
            recognized: Recognized::Monoid(id),
        };
    }

    if current.is_trivial_relation() {
        notes.push("trivial relation: free monoid of rank at least 2".into());
        return unmatched(current, notes, Recognized::OutsideList);
    }
    if let Some(&absent) = alphabet
        .iter()
        .find(|&&g| !current.lhs().contains_letter(g) && !current.rhs().contains_letter(g))
    {
        notes.push(format!("generator {} does not occur in the relation", absent as char));
        let verdict = if current.is_special() {
            Recognized::Unsupported
        } else {
            Recognized::OutsideList
        };
        return unmatched(current, notes, verdict);
    }
    if alphabet.len() == 2 {
        for (x, y) in [(alphabet[0], alphabet[1]), (alphabet[1], alphabet[0])] {
            let map = BTreeMap::from([(x, b'a'), (y, b'b')]);
            let (u, v) = (rename(current.lhs(), &map), rename(current.rhs(), &map));
            for (s, t) in [(&u, &v), (&v, &u)] {
                if let Some(id) = match_two_letter(s, t) {
                    if (x, y) != (b'a', b'b') {
                        notes.push(format!("renamed {} to a and {} to b", x as char, y as char));
                    }
                    if s != &u {
                        notes.push("exchanged relation sides".into());
                    }
                    return Normalized {
                        presentation: id.presentation(),
                        renaming: map.iter().map(|(&k, &v)| (k as char, v as char)).collect(),
                        notes,
                        recognized: Recognized::Monoid(id),
                    };
                }
            }
        }
    }
    let verdict = if current.is_special() {
        notes.push("special relation outside the catalog".into());
        Recognized::Unsupported
    } else {
        Recognized::OutsideList
    };
    unmatched(current, notes, verdict)
}

/// Normalises `p` and fills in the verdict columns.
pub fn classify(p: &Presentation) -> ClassificationVerdict {
    let n = normalize(p);
    let base = |monoid, t: Tropical, reasons: Vec<String>| ClassificationVerdict {
        input: p.to_string(),
        monoid,
        satisfies_identity: t,
        identity: None,
        ut_tropical: t,
        ut_rank: RankBound::None,
        m_tropical: t,
        m_rank: RankBound::None,
        renaming: n.renaming.clone(),
        notes: n.notes.clone(),
        reasons,
    };
    match n.recognized {
        Recognized::Monoid(id) => {
            let d = row_data(id);
            let mut v = base(n.recognized, Tropical::Yes, d.reasons.iter().map(|s| s.to_string()).collect());
            v.identity = Some(row_identity(id).to_string());
            (v.ut_tropical, v.ut_rank) = d.ut;
            (v.m_tropical, v.m_rank) = d.mt;
            v
        }
        Recognized::OutsideList => base(
            n.recognized,
            Tropical::No,
            vec!["outside the list of one-relation monoids with a non-trivial identity, which contains every tropical one".into()],
        ),
        Recognized::Unsupported => {
            base(n.recognized, Tropical::Unsupported, vec!["special relation not covered by the catalog".into()])
        }
    }
}
