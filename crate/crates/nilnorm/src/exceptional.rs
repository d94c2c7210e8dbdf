//! The catalogue of non-zero nilpotent orbits in the exceptional algebras:
//! Bala-Carter label, depth, representative (as negative-root data), normal
//! form, bush structure and embedding tags for every orbit of
//! `G2 F4 E6 E7 E8`.
//!
//! The dataset ships as a plain-text table (`data/exceptional_orbits.tsv`,
//! one record per line) embedded at compile time and parsed on load, so each
//! row stays auditable. Every root vector of every representative is checked
//! against the root system of its type when the catalogue is loaded.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::classical::{NormalForm, NormalFormComponent};
use crate::error::Error;
use crate::rootdata::{build_root_system, RootSystem, SimpleFamily, SimpleType};
use crate::weyl;

/// The embedded dataset.
pub const DATASET: &str = include_str!("../data/exceptional_orbits.tsv");

/// One signed negative-root vector `c * f_(digits)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepVector {
    pub coeffs: Vec<i64>,
    pub sign: i64,
}

/// An item inside a bracket group: a plain vector or a parenthesized bundle
/// (root vectors adding up to a single root vector of a non-regular
/// subalgebra).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepItem {
    Vector(RepVector),
    Paren(Vec<RepVector>),
}

/// A top-level summand of a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepGroup {
    /// A single root vector.
    Plain(RepVector),
    /// `[...]`: one irreducible summand of the normal form.
    Bracket(Vec<RepItem>),
    /// `(...)`: a single root vector of a non-regular subalgebra.
    Paren(Vec<RepVector>),
}

/// A structured representative, preserving the grouping of the catalogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub groups: Vec<RepGroup>,
}

impl Representative {
    /// All `(positive root coefficients, sign)` pairs, flattened.
    pub fn flatten(&self) -> Vec<(Vec<i64>, i64)> {
        let mut out = Vec::new();
        for g in &self.groups {
            match g {
                RepGroup::Plain(v) => out.push((v.coeffs.clone(), v.sign)),
                RepGroup::Paren(vs) => out.extend(vs.iter().map(|v| (v.coeffs.clone(), v.sign))),
                RepGroup::Bracket(items) => {
                    for item in items {
                        match item {
                            RepItem::Vector(v) => out.push((v.coeffs.clone(), v.sign)),
                            RepItem::Paren(vs) => {
                                out.extend(vs.iter().map(|v| (v.coeffs.clone(), v.sign)))
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Whether a row leads its bush or follows a leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BushRole {
    Leader,
    /// Member of the bush led by `leader`, adding `delta` to its normal form.
    Member {
        leader: String,
        delta: NormalForm,
    },
}

/// One orbit of an exceptional algebra.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub stype: SimpleType,
    pub label: String,
    pub aliases: Vec<String>,
    pub depth: i64,
    pub representative: Representative,
    pub normal_form: NormalForm,
    /// The normal-form column as printed (with embedding decorations).
    pub printed_normal_form: String,
    pub bush_role: BushRole,
    pub embedding: Vec<String>,
}

impl OrbitRecord {
    pub fn is_leader(&self) -> bool {
        matches!(self.bush_role, BushRole::Leader)
    }

    pub fn leader_label(&self) -> &str {
        match &self.bush_role {
            BushRole::Leader => &self.label,
            BushRole::Member { leader, .. } => leader,
        }
    }
}

/// A row of the irreducible-orbits table: the intrinsic data of one
/// normal-form component kind.
#[derive(Debug, Clone)]
pub struct IrreducibleRecord {
    pub component: NormalFormComponent,
    pub label: String,
    pub dynkin_labels: Vec<i64>,
    pub depth: i64,
    pub dim_gd: usize,
    pub zs_action: String,
}

/// Intrinsic record of one irreducible kind.
pub fn irreducible_record(c: NormalFormComponent) -> IrreducibleRecord {
    let ic = weyl::irreducible_class(c);
    IrreducibleRecord {
        component: c,
        label: c.to_string(),
        dynkin_labels: ic.dynkin_labels,
        depth: c.intrinsic_depth(),
        dim_gd: ic.dim_top,
        zs_action: ic.top_action.to_owned(),
    }
}

/// The loaded catalogue.
#[derive(Debug)]
pub struct Catalogue {
    records: Vec<OrbitRecord>,
    /// normalized label/alias -> record index
    index: BTreeMap<(SimpleType, String), usize>,
}

/// The five exceptional types in catalogue order.
pub fn exceptional_types() -> [SimpleType; 5] {
    [
        SimpleType::new(SimpleFamily::G, 2).unwrap(),
        SimpleType::new(SimpleFamily::F, 4).unwrap(),
        SimpleType::new(SimpleFamily::E, 6).unwrap(),
        SimpleType::new(SimpleFamily::E, 7).unwrap(),
        SimpleType::new(SimpleFamily::E, 8).unwrap(),
    ]
}

/// Normalize a label for lookup: drop underscores and spaces, unify prime
/// and tilde spellings.
pub fn normalize_label(label: &str) -> String {
    let mut out = String::new();
    for c in label.trim().chars() {
        match c {
            '_' | ' ' => {}
            '\u{2032}' => out.push('\''),
            '\u{2033}' => {
                out.push('\'');
                out.push('\'');
            }
            '\u{303}' => out.push('~'),
            'Ã' => {
                out.push('A');
                out.push('~');
            }
            _ => out.push(c),
        }
    }
    // "~A1" -> "A~1"
    if let Some(rest) = out.strip_prefix('~') {
        let mut chars = rest.chars();
        if let Some(first) = chars.next() {
            let tail: String = chars.collect();
            out = format!("{first}~{tail}");
        }
    }
    out
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, &ca) in a.iter().enumerate() {
        let mut cur = vec![i + 1];
        for (j, &cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            cur.push((prev[j] + cost).min(prev[j + 1] + 1).min(cur[j] + 1));
        }
        prev = cur;
    }
    prev[b.len()]
}

impl Catalogue {
    /// Parse and validate the embedded dataset.
    pub fn load() -> Result<Catalogue, Error> {
        Catalogue::parse(DATASET)
    }

    fn parse(text: &str) -> Result<Catalogue, Error> {
        let mut systems: BTreeMap<SimpleType, RootSystem> = BTreeMap::new();
        for t in exceptional_types() {
            systems.insert(t, build_root_system(t)?);
        }
        let mut records: Vec<OrbitRecord> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 9 {
                return Err(Error::CorruptDataset(format!(
                    "line {}: expected 9 fields, found {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let stype = SimpleType::parse(fields[0])?;
            let rs = &systems[&stype];
            let label = fields[1].to_owned();
            let aliases: Vec<String> = if fields[2] == "-" {
                Vec::new()
            } else {
                fields[2].split('|').map(|s| s.to_owned()).collect()
            };
            let depth: i64 = fields[3]
                .parse()
                .map_err(|_| Error::CorruptDataset(format!("line {}: bad depth", lineno + 1)))?;
            let leader = fields[4];
            let representative = parse_representative(fields[5], rs)
                .map_err(|e| Error::CorruptDataset(format!("{label}: {e}")))?;
            let printed_normal_form = fields[6].to_owned();
            let normal_form = NormalForm::parse(fields[6])
                .map_err(|e| Error::CorruptDataset(format!("{label}: {e}")))?;
            let bush_role = if leader == "." {
                BushRole::Leader
            } else {
                let delta = NormalForm::parse(fields[7])
                    .map_err(|e| Error::CorruptDataset(format!("{label}: {e}")))?;
                BushRole::Member {
                    leader: leader.to_owned(),
                    delta,
                }
            };
            let embedding: Vec<String> = fields[8].split('|').map(|s| s.to_owned()).collect();
            records.push(OrbitRecord {
                stype,
                label,
                aliases,
                depth,
                representative,
                normal_form,
                printed_normal_form,
                bush_role,
                embedding,
            });
        }

        let mut index = BTreeMap::new();
        for (i, rec) in records.iter().enumerate() {
            for name in core::iter::once(&rec.label).chain(&rec.aliases) {
                let key = (rec.stype, normalize_label(name));
                if index.insert(key, i).is_some() {
                    return Err(Error::CorruptDataset(format!(
                        "duplicate label `{name}` in {}",
                        rec.stype
                    )));
                }
            }
        }
        // leaders must resolve within their own type
        for rec in &records {
            if let BushRole::Member { leader, .. } = &rec.bush_role {
                let key = (rec.stype, normalize_label(leader));
                if !index.contains_key(&key) {
                    return Err(Error::CorruptDataset(format!(
                        "{}: unknown bush leader `{leader}`",
                        rec.label
                    )));
                }
            }
        }
        Ok(Catalogue { records, index })
    }

    pub fn records(&self) -> &[OrbitRecord] {
        &self.records
    }

    /// One record by label or alias (prime/tilde spellings normalized).
    pub fn lookup(&self, stype: SimpleType, label: &str) -> Result<&OrbitRecord, Error> {
        let key = normalize_label(label);
        if let Some(&i) = self.index.get(&(stype, key.clone())) {
            return Ok(&self.records[i]);
        }
        // nearest labels of this type by edit distance
        let mut near: Vec<(usize, &str)> = self
            .records
            .iter()
            .filter(|r| r.stype == stype)
            .map(|r| {
                (
                    levenshtein(&key, &normalize_label(&r.label)),
                    r.label.as_str(),
                )
            })
            .collect();
        near.sort();
        let nearest: Vec<&str> = near.iter().take(3).map(|&(_, l)| l).collect();
        Err(Error::UnknownLabel {
            algebra: stype.to_string(),
            label: label.to_owned(),
            nearest: nearest.join(", "),
        })
    }

    /// All orbits of one type, sorted by depth (catalogue order preserved
    /// within one depth).
    pub fn enumerate(&self, stype: SimpleType) -> Vec<&OrbitRecord> {
        let mut out: Vec<&OrbitRecord> = self.records.iter().filter(|r| r.stype == stype).collect();
        out.sort_by_key(|r| r.depth); // stable: catalogue order within depth
        out
    }

    /// The bush containing `label`: leader first, then members in catalogue
    /// order.
    pub fn bush(&self, stype: SimpleType, label: &str) -> Result<Vec<&OrbitRecord>, Error> {
        let rec = self.lookup(stype, label)?;
        let leader_label = rec.leader_label().to_owned();
        let leader = self.lookup(stype, &leader_label)?;
        let mut out = vec![leader];
        for r in &self.records {
            if r.stype == stype
                && !r.is_leader()
                && normalize_label(r.leader_label()) == normalize_label(&leader_label)
            {
                out.push(r);
            }
        }
        Ok(out)
    }
}

/// Parse a representative with the grammar
/// `rep := piece ('+' piece)*`, `piece := token | '[' ... ']' | '(' ... ')'`,
/// token a signed digit string or `f'`.
fn parse_representative(text: &str, rs: &RootSystem) -> Result<Representative, Error> {
    if text == "f'" {
        // sum of all negative simple root vectors
        let rank = rs.rank();
        let groups = (0..rank)
            .map(|i| {
                let mut coeffs = vec![0i64; rank];
                coeffs[i] = 1;
                RepGroup::Plain(RepVector { coeffs, sign: 1 })
            })
            .collect();
        return Ok(Representative { groups });
    }
    let mut groups = Vec::new();
    for piece in split_top_level(text) {
        if let Some(inner) = piece.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| bad_rep(text))?;
            let mut items = Vec::new();
            for sub in split_top_level(inner) {
                if let Some(p) = sub.strip_prefix('(') {
                    let p = p.strip_suffix(')').ok_or_else(|| bad_rep(text))?;
                    items.push(RepItem::Paren(parse_vector_list(p, rs)?));
                } else {
                    items.push(RepItem::Vector(parse_vector(sub, rs)?));
                }
            }
            groups.push(RepGroup::Bracket(items));
        } else if let Some(inner) = piece.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or_else(|| bad_rep(text))?;
            groups.push(RepGroup::Paren(parse_vector_list(inner, rs)?));
        } else {
            groups.push(RepGroup::Plain(parse_vector(piece, rs)?));
        }
    }
    Ok(Representative { groups })
}

fn bad_rep(text: &str) -> Error {
    Error::CorruptDataset(format!("malformed representative `{text}`"))
}

/// Split on `+` outside brackets and parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, b) in text.bytes().enumerate() {
        match b {
            b'[' | b'(' => depth += 1,
            b']' | b')' => depth -= 1,
            b'+' if depth == 0 && i > start => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            b'+' if depth == 0 => {
                start = i + 1; // leading '+' after a separator
            }
            _ => {}
        }
    }
    if start < text.len() {
        out.push(&text[start..]);
    }
    out
}

fn parse_vector_list(text: &str, rs: &RootSystem) -> Result<Vec<RepVector>, Error> {
    split_top_level(text)
        .into_iter()
        .map(|t| parse_vector(t, rs))
        .collect()
}

fn parse_vector(token: &str, rs: &RootSystem) -> Result<RepVector, Error> {
    let (sign, digits) = match token.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, token),
    };
    if digits.len() != rs.rank() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::CorruptDataset(format!(
            "token `{token}` is not a coefficient string of rank {}",
            rs.rank()
        )));
    }
    let coeffs: Vec<i64> = digits.bytes().map(|b| i64::from(b - b'0')).collect();
    if !rs.is_positive_root(&coeffs) {
        return Err(Error::CorruptDataset(format!(
            "`{token}` is not a positive root of {}",
            rs.simple_type()
        )));
    }
    Ok(RepVector { coeffs, sign })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> Catalogue {
        Catalogue::load().expect("embedded dataset parses")
    }

    fn et(name: &str) -> SimpleType {
        SimpleType::parse(name).unwrap()
    }

    #[test]
    fn record_counts() {
        let c = cat();
        let count = |t: &str| c.records().iter().filter(|r| r.stype == et(t)).count();
        assert_eq!(count("G2"), 4);
        assert_eq!(count("F4"), 15);
        assert_eq!(count("E6"), 20);
        assert_eq!(count("E7"), 44);
        assert_eq!(count("E8"), 69);
    }

    #[test]
    fn lookup_rows() {
        let c = cat();
        let r = c.lookup(et("E8"), "A_4+A_3").unwrap();
        assert_eq!(r.depth, 9);
        assert_eq!(r.normal_form, NormalForm::parse("A_4+C_2").unwrap());
        assert_eq!(r.embedding, vec!["regular", "folding of A_3"]);

        let r = c.lookup(et("F4"), "F_4(a_3)").unwrap();
        assert_eq!(r.depth, 6);
        assert_eq!(r.normal_form, NormalForm::parse("D_4(a_1)").unwrap());

        let r = c.lookup(et("E7"), "A_3+A_2").unwrap();
        assert_eq!(r.depth, 6);
        assert_eq!(r.normal_form, NormalForm::parse("D_4(a_1)+2C_1").unwrap());
    }

    #[test]
    fn lookup_aliases_and_spellings() {
        let c = cat();
        assert_eq!(c.lookup(et("E8"), "2A_4").unwrap().label, "E_8(a_7)");
        assert_eq!(c.lookup(et("E8"), "D_8").unwrap().label, "E_8(a_4)");
        assert_eq!(c.lookup(et("E7"), "(A_5+A_1)''").unwrap().label, "A_5+A_1");
        assert_eq!(c.lookup(et("E7"), "(A_5+A_1)'").unwrap().label, "E_6(a_3)");
        // spelling variants
        assert_eq!(c.lookup(et("F4"), "A~1").unwrap().label, "A~_1");
        assert_eq!(c.lookup(et("F4"), "~A_1").unwrap().label, "A~_1");
        assert_eq!(c.lookup(et("E8"), "E8(a7)").unwrap().label, "E_8(a_7)");
        // unknown labels name the nearest rows
        let err = c.lookup(et("G2"), "G_2(a_9)").unwrap_err();
        assert!(matches!(err, Error::UnknownLabel { .. }));
    }

    #[test]
    fn bushes() {
        let c = cat();
        let b = c.bush(et("E6"), "D_4").unwrap();
        let labels: Vec<&str> = b.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, vec!["D_4", "D_5(a_1)"]);

        let b = c.bush(et("F4"), "B_2").unwrap();
        let labels: Vec<&str> = b.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, vec!["B_2", "C_3(a_1)"]);

        let b = c.bush(et("G2"), "G_2(a_1)").unwrap();
        assert_eq!(b.len(), 1);

        // looking up a member resolves to the same bush
        let b = c.bush(et("F4"), "C_3(a_1)").unwrap();
        assert_eq!(b[0].label, "B_2");
    }

    #[test]
    fn bushes_partition_records() {
        let c = cat();
        for t in exceptional_types() {
            let all = c.enumerate(t);
            let mut seen = 0usize;
            let leaders: Vec<&OrbitRecord> =
                all.iter().copied().filter(|r| r.is_leader()).collect();
            for l in &leaders {
                seen += c.bush(t, &l.label).unwrap().len();
            }
            assert_eq!(seen, all.len(), "{t}");
        }
    }

    #[test]
    fn enumerate_depth_monotone() {
        let c = cat();
        for t in exceptional_types() {
            let rows = c.enumerate(t);
            for w in rows.windows(2) {
                assert!(w[0].depth <= w[1].depth, "{t}");
            }
        }
    }

    #[test]
    fn member_normal_forms_extend_leaders() {
        let c = cat();
        for rec in c.records() {
            if let BushRole::Member { leader, delta } = &rec.bush_role {
                let l = c.lookup(rec.stype, leader).unwrap();
                assert_eq!(
                    rec.normal_form,
                    l.normal_form.merge(delta),
                    "{}: {} + delta",
                    rec.label,
                    l.label
                );
                assert_eq!(rec.depth, l.depth, "{}: member depth", rec.label);
            }
        }
    }

    #[test]
    fn component_depths_bounded_by_reduced_depth() {
        let c = cat();
        for rec in c.records() {
            let reduced = if rec.depth % 2 != 0 {
                rec.depth - 1
            } else {
                rec.depth
            };
            let depths: Vec<i64> = rec
                .normal_form
                .components()
                .map(|comp| comp.intrinsic_depth())
                .collect();
            assert_eq!(
                depths.first().copied(),
                Some(reduced),
                "{} {}: top component vs reduced depth",
                rec.stype,
                rec.label
            );
            assert!(
                depths.iter().all(|&d| d <= reduced),
                "{} {}",
                rec.stype,
                rec.label
            );
        }
    }

    #[test]
    fn representative_structure() {
        let c = cat();
        // square brackets survive as separate summands
        let r = c.lookup(et("E8"), "A_4+A_3").unwrap();
        assert_eq!(r.representative.groups.len(), 2);
        assert!(matches!(r.representative.groups[0], RepGroup::Bracket(_)));
        // the signed rows carry their printed signs
        let r = c.lookup(et("E7"), "D_6(a_1)").unwrap();
        let signs: Vec<i64> = r.representative.flatten().iter().map(|&(_, s)| s).collect();
        assert!(signs.contains(&-1));
        // f' expands to the rank
        let r = c.lookup(et("E8"), "E_8").unwrap();
        assert_eq!(r.representative.flatten().len(), 8);
    }

    #[test]
    fn irreducible_records() {
        let rec = irreducible_record(NormalFormComponent::E8A7);
        assert_eq!(rec.depth, 10);
        assert_eq!(rec.dim_gd, 4);
        assert_eq!(rec.zs_action, "sigma_5");
        let rec = irreducible_record(NormalFormComponent::D(1));
        assert_eq!(rec.depth, 6);
        assert_eq!(rec.dim_gd, 2);
        assert_eq!(rec.dynkin_labels, vec![2, 0, 2, 2]);
    }
}
