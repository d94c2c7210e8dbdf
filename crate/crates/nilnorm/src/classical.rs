//! Partition-level theory of nilpotent orbits in `sl_N`, `sp_N`, `so_N`:
//! validation, depth, type classification, bush leaders and the normal-form
//! decomposition.
//!
//! Orbits are labelled by partitions of `N` (Jordan type); `sp` requires odd
//! parts to have even multiplicity, `so` requires even parts to have even
//! multiplicity. `so_N` is supported for `N >= 7`; below that the algebras
//! are not of type B/D proper (`so_3 = sp_2`, `so_4 = sp_2 + sp_2`,
//! `so_5 = sp_4`, `so_6 = sl_4`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// The three classical series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassicalSeries {
    Sl,
    Sp,
    So,
}

impl ClassicalSeries {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalSeries::Sl => "sl",
            ClassicalSeries::Sp => "sp",
            ClassicalSeries::So => "so",
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        match text.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(ClassicalSeries::Sl),
            "sp" => Ok(ClassicalSeries::Sp),
            "so" => Ok(ClassicalSeries::So),
            other => Err(Error::InadmissibleType(format!(
                "unknown classical series `{other}` (expected sl, sp or so)"
            ))),
        }
    }
}

/// A classical algebra `sl_N`, `sp_N` or `so_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalAlgebra {
    series: ClassicalSeries,
    n: usize,
}

impl ClassicalAlgebra {
    pub fn new(series: ClassicalSeries, n: usize) -> Result<Self, Error> {
        let reason = match series {
            ClassicalSeries::Sl if n < 2 => Some("sl_N needs N >= 2".to_string()),
            ClassicalSeries::Sp if n < 2 || n % 2 != 0 => {
                Some("sp_N needs N even and N >= 2".to_string())
            }
            ClassicalSeries::So if n < 7 => Some(
                "so_N is supported for N >= 7 (so_3 = sp_2, so_4 = sp_2+sp_2, \
                 so_5 = sp_4, so_6 = sl_4)"
                    .to_string(),
            ),
            _ => None,
        };
        match reason {
            Some(r) => Err(Error::InadmissibleType(r)),
            None => Ok(ClassicalAlgebra { series, n }),
        }
    }

    pub fn series(&self) -> ClassicalSeries {
        self.series
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the algebra (`sl_N`: N-1, `sp_N`/`so_N`: floor(N/2)).
    pub fn rank(&self) -> usize {
        match self.series {
            ClassicalSeries::Sl => self.n - 1,
            _ => self.n / 2,
        }
    }
}

impl core::fmt::Display for ClassicalAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}_{}", self.series.name(), self.n)
    }
}

/// A partition `(p_1^(r_1), ..., p_s^(r_s))`, parts strictly decreasing,
/// multiplicities >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<(usize, usize)>,
}

impl Partition {
    /// Normalize an arbitrary list of positive parts.
    pub fn from_parts(parts: &[usize]) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::MalformedPartition("empty partition".to_string()));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition("zero part".to_string()));
        }
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<(usize, usize)> = Vec::new();
        for p in sorted {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        Ok(Partition { parts: out })
    }

    /// From (part, multiplicity) pairs, any order.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut expanded = Vec::new();
        for &(p, r) in pairs {
            if r == 0 {
                return Err(Error::MalformedPartition("zero multiplicity".to_string()));
            }
            for _ in 0..r {
                expanded.push(p);
            }
        }
        Partition::from_parts(&expanded)
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|&(p, r)| p * r).sum()
    }

    pub fn largest(&self) -> usize {
        self.parts[0].0
    }

    pub fn largest_multiplicity(&self) -> usize {
        self.parts[0].1
    }

    /// Second-largest distinct part, 0 when absent.
    pub fn second(&self) -> usize {
        self.parts.get(1).map(|&(p, _)| p).unwrap_or(0)
    }

    /// The zero orbit `(1^N)`.
    pub fn is_zero_orbit(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].0 == 1
    }

    /// Parse `"24^3,23^4,18,1^5"`, `"[5,3,2,2]"` or `"5 3 2 2"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        if t.is_empty() {
            return Err(Error::MalformedPartition("empty partition".to_string()));
        }
        let mut expanded = Vec::new();
        for token in t.split([',', ' ']) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (part_s, mult_s) = match token.split_once('^') {
                Some((p, m)) => (p, m),
                None => (token, "1"),
            };
            let part: usize = part_s
                .trim()
                .parse()
                .map_err(|_| Error::MalformedPartition(format!("bad part `{token}`")))?;
            let mult: usize = mult_s
                .trim()
                .parse()
                .map_err(|_| Error::MalformedPartition(format!("bad multiplicity `{token}`")))?;
            if part == 0 || mult == 0 {
                return Err(Error::MalformedPartition(format!(
                    "part and multiplicity must be positive in `{token}`"
                )));
            }
            for _ in 0..mult {
                expanded.push(part);
            }
        }
        Partition::from_parts(&expanded)
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for &(p, r) in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if r == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{r}")?;
            }
        }
        Ok(())
    }
}

/// Orbit type: whether cyclic elements over it can be semisimple, are always
/// nilpotent, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotentType {
    Semisimple,
    Nilpotent,
    Mixed,
}

impl core::fmt::Display for NilpotentType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            NilpotentType::Semisimple => "semisimple",
            NilpotentType::Nilpotent => "nilpotent",
            NilpotentType::Mixed => "mixed",
        })
    }
}

/// One irreducible summand kind of a normal form, with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalFormComponent {
    /// `A_2k`, `k >= 1`.
    A(usize),
    /// `C_k`, `k >= 1`.
    C(usize),
    /// `B_k`, `k >= 2`, `k != 3` (`B_1 = C_1`, `B_3` is replaced by `G_2`).
    B(usize),
    /// `D_{2k+2}(a_k)`, `k >= 1`.
    D(usize),
    G2,
    F4,
    F4A2,
    E6A1,
    E7,
    E7A1,
    E7A5,
    E8,
    E8A1,
    E8A2,
    E8A4,
    E8A5,
    E8A6,
    E8A7,
}

impl NormalFormComponent {
    /// Depth of the component inside its own algebra.
    pub fn intrinsic_depth(&self) -> i64 {
        match *self {
            NormalFormComponent::A(k) => 4 * k as i64,
            NormalFormComponent::C(k) => 4 * k as i64 - 2,
            NormalFormComponent::B(k) => 4 * k as i64 - 2,
            NormalFormComponent::D(k) => 4 * k as i64 + 2,
            NormalFormComponent::G2 => 10,
            NormalFormComponent::F4 => 22,
            NormalFormComponent::F4A2 => 10,
            NormalFormComponent::E6A1 => 16,
            NormalFormComponent::E7 => 34,
            NormalFormComponent::E7A1 => 26,
            NormalFormComponent::E7A5 => 10,
            NormalFormComponent::E8 => 58,
            NormalFormComponent::E8A1 => 46,
            NormalFormComponent::E8A2 => 38,
            NormalFormComponent::E8A4 => 28,
            NormalFormComponent::E8A5 => 22,
            NormalFormComponent::E8A6 => 18,
            NormalFormComponent::E8A7 => 10,
        }
    }

    /// Rank of the algebra the component lives in.
    pub fn rank(&self) -> usize {
        match *self {
            NormalFormComponent::A(k) => 2 * k,
            NormalFormComponent::C(k) | NormalFormComponent::B(k) => k,
            NormalFormComponent::D(k) => 2 * k + 2,
            NormalFormComponent::G2 => 2,
            NormalFormComponent::F4 | NormalFormComponent::F4A2 => 4,
            NormalFormComponent::E6A1 => 6,
            NormalFormComponent::E7 | NormalFormComponent::E7A1 | NormalFormComponent::E7A5 => 7,
            _ => 8,
        }
    }

    /// Tie-breaking precedence inside one depth level.
    fn precedence(&self) -> u8 {
        match self {
            NormalFormComponent::C(_) => 0,
            NormalFormComponent::A(_) => 1,
            NormalFormComponent::B(_) => 2,
            NormalFormComponent::D(_) => 3,
            NormalFormComponent::G2 => 4,
            NormalFormComponent::F4A2 => 5,
            NormalFormComponent::E7A5 => 6,
            NormalFormComponent::E8A7 => 7,
            NormalFormComponent::E6A1 => 8,
            NormalFormComponent::E8A6 => 9,
            NormalFormComponent::F4 => 10,
            NormalFormComponent::E8A5 => 11,
            NormalFormComponent::E7A1 => 12,
            NormalFormComponent::E8A4 => 13,
            NormalFormComponent::E7 => 14,
            NormalFormComponent::E8A2 => 15,
            NormalFormComponent::E8A1 => 16,
            NormalFormComponent::E8 => 17,
        }
    }

    fn param(&self) -> usize {
        match *self {
            NormalFormComponent::A(k)
            | NormalFormComponent::C(k)
            | NormalFormComponent::B(k)
            | NormalFormComponent::D(k) => k,
            _ => 0,
        }
    }

    /// Canonical sort key: depth descending, then kind precedence, then
    /// parameter descending.
    fn sort_key(&self) -> (i64, u8, i64) {
        (
            -self.intrinsic_depth(),
            self.precedence(),
            -(self.param() as i64),
        )
    }
}

impl core::fmt::Display for NormalFormComponent {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            NormalFormComponent::A(k) => write!(f, "A_{}", 2 * k),
            NormalFormComponent::C(k) => write!(f, "C_{k}"),
            NormalFormComponent::B(k) => write!(f, "B_{k}"),
            NormalFormComponent::D(k) => write!(f, "D_{}(a_{k})", 2 * k + 2),
            NormalFormComponent::G2 => write!(f, "G_2"),
            NormalFormComponent::F4 => write!(f, "F_4"),
            NormalFormComponent::F4A2 => write!(f, "F_4(a_2)"),
            NormalFormComponent::E6A1 => write!(f, "E_6(a_1)"),
            NormalFormComponent::E7 => write!(f, "E_7"),
            NormalFormComponent::E7A1 => write!(f, "E_7(a_1)"),
            NormalFormComponent::E7A5 => write!(f, "E_7(a_5)"),
            NormalFormComponent::E8 => write!(f, "E_8"),
            NormalFormComponent::E8A1 => write!(f, "E_8(a_1)"),
            NormalFormComponent::E8A2 => write!(f, "E_8(a_2)"),
            NormalFormComponent::E8A4 => write!(f, "E_8(a_4)"),
            NormalFormComponent::E8A5 => write!(f, "E_8(a_5)"),
            NormalFormComponent::E8A6 => write!(f, "E_8(a_6)"),
            NormalFormComponent::E8A7 => write!(f, "E_8(a_7)"),
        }
    }
}

/// A normal form: components with multiplicities, canonically ordered by
/// intrinsic depth (descending). Equality is multiset equality; the order
/// inside one depth level is presentational only and fixed canonically, so
/// derived `Eq` compares multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    entries: Vec<(NormalFormComponent, usize)>,
}

impl NormalForm {
    pub fn empty() -> Self {
        NormalForm {
            entries: Vec::new(),
        }
    }

    pub fn from_components(components: &[NormalFormComponent]) -> Self {
        let mut sorted = components.to_vec();
        sorted.sort_by_key(|c| c.sort_key());
        let mut entries: Vec<(NormalFormComponent, usize)> = Vec::new();
        for c in sorted {
            match entries.last_mut() {
                Some((k, r)) if *k == c => *r += 1,
                _ => entries.push((c, 1)),
            }
        }
        NormalForm { entries }
    }

    /// Sum of two normal forms (multiset union, re-sorted).
    pub fn merge(&self, other: &NormalForm) -> NormalForm {
        let mut comps: Vec<NormalFormComponent> = self.components().collect();
        comps.extend(other.components());
        NormalForm::from_components(&comps)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(component, multiplicity)` entries in canonical order.
    pub fn entries(&self) -> &[(NormalFormComponent, usize)] {
        &self.entries
    }

    /// Every component, repeated per multiplicity.
    pub fn components(&self) -> impl Iterator<Item = NormalFormComponent> + '_ {
        self.entries
            .iter()
            .flat_map(|&(c, r)| core::iter::repeat(c).take(r))
    }

    /// Largest intrinsic depth; `None` for the empty form.
    pub fn max_depth(&self) -> Option<i64> {
        self.entries.first().map(|(c, _)| c.intrinsic_depth())
    }

    /// Parse the `+`-separated rendering, ignoring grouping parentheses and
    /// embedding decorations (tildes and primes). `"0"` is the empty form.
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.trim() == "0" {
            return Ok(NormalForm::empty());
        }
        let mut comps = Vec::new();
        parse_nf_into(text.trim(), &mut comps)?;
        if comps.is_empty() {
            return Err(Error::MalformedNormalForm(format!("`{text}`")));
        }
        Ok(NormalForm::from_components(&comps))
    }
}

impl core::fmt::Display for NormalForm {
    /// Components sorted by depth; several entries at one depth are grouped
    /// in parentheses, e.g. `...+(2C_2+D_4(a_1))+3A_2+...`.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut groups: Vec<Vec<&(NormalFormComponent, usize)>> = Vec::new();
        for entry in &self.entries {
            match groups.last_mut() {
                Some(g) if g[0].0.intrinsic_depth() == entry.0.intrinsic_depth() => g.push(entry),
                _ => groups.push(vec![entry]),
            }
        }
        let mut first = true;
        for group in groups {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let paren = group.len() > 1;
            if paren {
                write!(f, "(")?;
            }
            for (i, (c, r)) in group.iter().enumerate() {
                if i > 0 {
                    write!(f, "+")?;
                }
                if *r > 1 {
                    write!(f, "{r}")?;
                }
                write!(f, "{c}")?;
            }
            if paren {
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

/// Recursive descent over `+` at parenthesis depth 0.
fn parse_nf_into(text: &str, out: &mut Vec<NormalFormComponent>) -> Result<(), Error> {
    let mut depth = 0i32;
    let mut start = 0usize;
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                tokens.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    tokens.push(&text[start..]);
    for token in tokens {
        let t = token.trim().trim_matches('\'').trim();
        if t.is_empty() {
            return Err(Error::MalformedNormalForm(format!("`{text}`")));
        }
        if t.starts_with('(') {
            // grouping parens (equal-depth group or a primed bundle)
            let inner = t
                .trim_start_matches('(')
                .trim_end_matches(['\'', '\u{2032}', '\u{2033}'])
                .trim()
                .trim_end_matches(')');
            parse_nf_into(inner, out)?;
            continue;
        }
        let (mult, rest) = split_multiplicity(t);
        let comp = parse_component(rest)?;
        for _ in 0..mult {
            out.push(comp);
        }
    }
    Ok(())
}

fn split_multiplicity(t: &str) -> (usize, &str) {
    let digits = t.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 {
        (1, t)
    } else {
        (t[..digits].parse().unwrap_or(1), &t[digits..])
    }
}

/// Parse one component name; tildes and primes (embedding decorations) are
/// accepted anywhere and ignored.
fn parse_component(raw: &str) -> Result<NormalFormComponent, Error> {
    let cleaned: String = raw
        .chars()
        .filter(|&c| !matches!(c, '~' | '\'' | '\u{2032}' | '\u{2033}' | '\u{303}' | ' '))
        .collect();
    let bad = || Error::MalformedNormalForm(format!("component `{raw}`"));
    let mut chars = cleaned.chars();
    let family = chars.next().ok_or_else(bad)?;
    let rest: String = chars.collect();
    let rest = rest.trim_start_matches('_');
    // split "n(a_k)" into n and optional k
    let (n_str, a_param) = match rest.split_once('(') {
        Some((n, tail)) => {
            let inner = tail
                .trim_end_matches(')')
                .trim_start_matches('a')
                .trim_start_matches('_');
            (n, Some(inner.parse::<usize>().map_err(|_| bad())?))
        }
        None => (rest, None),
    };
    let n: usize = n_str.parse().map_err(|_| bad())?;
    match (family, a_param) {
        // A_1 = C_1 as a summand; higher odd A_n are not irreducible kinds
        ('A', None) if n == 1 => Ok(NormalFormComponent::C(1)),
        ('A', None) => {
            if n % 2 != 0 || n == 0 {
                return Err(bad());
            }
            Ok(NormalFormComponent::A(n / 2))
        }
        ('C', None) if n >= 1 => Ok(NormalFormComponent::C(n)),
        ('B', None) if n >= 2 && n != 3 => Ok(NormalFormComponent::B(n)),
        ('D', Some(k)) if n == 2 * k + 2 && k >= 1 => Ok(NormalFormComponent::D(k)),
        ('G', None) if n == 2 => Ok(NormalFormComponent::G2),
        ('F', None) if n == 4 => Ok(NormalFormComponent::F4),
        ('F', Some(2)) if n == 4 => Ok(NormalFormComponent::F4A2),
        ('E', Some(1)) if n == 6 => Ok(NormalFormComponent::E6A1),
        ('E', None) if n == 7 => Ok(NormalFormComponent::E7),
        ('E', Some(1)) if n == 7 => Ok(NormalFormComponent::E7A1),
        ('E', Some(5)) if n == 7 => Ok(NormalFormComponent::E7A5),
        ('E', None) if n == 8 => Ok(NormalFormComponent::E8),
        ('E', Some(1)) if n == 8 => Ok(NormalFormComponent::E8A1),
        ('E', Some(2)) if n == 8 => Ok(NormalFormComponent::E8A2),
        ('E', Some(4)) if n == 8 => Ok(NormalFormComponent::E8A4),
        ('E', Some(5)) if n == 8 => Ok(NormalFormComponent::E8A5),
        ('E', Some(6)) if n == 8 => Ok(NormalFormComponent::E8A6),
        ('E', Some(7)) if n == 8 => Ok(NormalFormComponent::E8A7),
        _ => Err(bad()),
    }
}

/// Check the partition against the series: total, and the parity rules
/// (`sp`: odd parts have even multiplicity; `so`: even parts have even
/// multiplicity).
pub fn validate(algebra: &ClassicalAlgebra, p: &Partition) -> Result<(), Error> {
    let total = p.total();
    if total != algebra.n() {
        return Err(Error::InvalidPartition {
            series: algebra.series().name(),
            n: algebra.n(),
            reason: format!("parts sum to {total}, not {}", algebra.n()),
        });
    }
    match algebra.series() {
        ClassicalSeries::Sl => Ok(()),
        ClassicalSeries::Sp => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 1 && mult % 2 == 1 {
                    return Err(Error::InvalidPartition {
                        series: "sp",
                        n: algebra.n(),
                        reason: format!("odd part {part} has odd multiplicity {mult}"),
                    });
                }
            }
            Ok(())
        }
        ClassicalSeries::So => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 0 && mult % 2 == 1 {
                    return Err(Error::InvalidPartition {
                        series: "so",
                        n: algebra.n(),
                        reason: format!("even part {part} has odd multiplicity {mult}"),
                    });
                }
            }
            Ok(())
        }
    }
}

fn validated_nonzero(algebra: &ClassicalAlgebra, p: &Partition) -> Result<(), Error> {
    validate(algebra, p)?;
    if p.is_zero_orbit() {
        return Err(Error::ZeroOrbit("no depth, type or bush"));
    }
    Ok(())
}

/// Depth of the orbit: `2 p_1 - 2` for `sl`/`sp` and for `so` with
/// `r_1 >= 2`; otherwise `max(2 p_1 - 4, p_1 + p_2 - 2)`.
pub fn depth(algebra: &ClassicalAlgebra, p: &Partition) -> Result<i64, Error> {
    validated_nonzero(algebra, p)?;
    let p1 = p.largest() as i64;
    let d = match algebra.series() {
        ClassicalSeries::Sl | ClassicalSeries::Sp => 2 * p1 - 2,
        ClassicalSeries::So => {
            if p.largest_multiplicity() >= 2 {
                2 * p1 - 2
            } else {
                let p2 = p.second() as i64;
                (2 * p1 - 4).max(p1 + p2 - 2)
            }
        }
    };
    Ok(d)
}

/// Semisimple / nilpotent / mixed classification. Consistency: the result is
/// `Nilpotent` exactly when the depth is odd.
pub fn classify_type(algebra: &ClassicalAlgebra, p: &Partition) -> Result<NilpotentType, Error> {
    validated_nonzero(algebra, p)?;
    let p1 = p.largest();
    let r1 = p.largest_multiplicity();
    // all parts below the largest are 1
    let rest_ones = p.pairs().iter().skip(1).all(|&(q, _)| q == 1);
    let t = match algebra.series() {
        ClassicalSeries::Sl | ClassicalSeries::Sp => {
            if rest_ones {
                NilpotentType::Semisimple
            } else {
                NilpotentType::Mixed
            }
        }
        ClassicalSeries::So => {
            let p2 = p.second();
            if p1 % 2 == 1 && r1 == 1 && p2 == p1 - 1 {
                NilpotentType::Nilpotent
            } else if is_so_semisimple_shape(p) {
                NilpotentType::Semisimple
            } else {
                NilpotentType::Mixed
            }
        }
    };
    debug_assert_eq!(
        matches!(t, NilpotentType::Nilpotent),
        depth(algebra, p)? % 2 != 0,
        "type/depth parity law"
    );
    Ok(t)
}

/// The five semisimple shapes in `so_N`:
/// (a) `(3, 1^r)`; (b) `(p_1, 1^r)`, `p_1 >= 5` odd;
/// (c) `(p_1, p_1-2, 1^r)`, `p_1 >= 5` odd;
/// (d) `(p_1^(r_1), 1^r)`, `p_1` even, `r_1 >= 2` even;
/// (e) `(p_1^(r_1), 1^r)`, `p_1 >= 3` odd, `r_1 >= 2` even.
fn is_so_semisimple_shape(p: &Partition) -> bool {
    let p1 = p.largest();
    let r1 = p.largest_multiplicity();
    let pairs = p.pairs();
    let tail_ones_from = |idx: usize| pairs.iter().skip(idx).all(|&(q, _)| q == 1);
    if p1 == 1 {
        return false; // zero orbit, rejected earlier
    }
    if p1 % 2 == 1 && r1 == 1 {
        if tail_ones_from(1) {
            return true; // (a) and (b)
        }
        // (c): exactly one part p_1 - 2, then ones
        if p1 >= 5 {
            if let Some(&(p2, r2)) = pairs.get(1) {
                return p2 == p1 - 2 && r2 == 1 && tail_ones_from(2);
            }
        }
        return false;
    }
    if r1 >= 2 && r1 % 2 == 0 && tail_ones_from(1) {
        return true; // (d) for even p_1, (e) for odd p_1 >= 3
    }
    false
}

/// Reduced depth: `d - 1` for nilpotent type, `d` otherwise.
pub fn reduced_depth(algebra: &ClassicalAlgebra, p: &Partition) -> Result<i64, Error> {
    let d = depth(algebra, p)?;
    let t = classify_type(algebra, p)?;
    Ok(match t {
        NilpotentType::Nilpotent => d - 1,
        _ => d,
    })
}

/// The unique semisimple-type partition in the same bush, padded with ones.
/// Nilpotent-type orbits (the odd `(p_1, p_1 - 1, ...)` shape in `so`) sit
/// alone and have no leader.
pub fn bush_leader(algebra: &ClassicalAlgebra, p: &Partition) -> Result<Partition, Error> {
    validated_nonzero(algebra, p)?;
    let n = algebra.n();
    let p1 = p.largest();
    let r1 = p.largest_multiplicity();
    let pad = |head: &[(usize, usize)]| -> Result<Partition, Error> {
        let used: usize = head.iter().map(|&(q, r)| q * r).sum();
        let mut pairs = head.to_vec();
        if n > used {
            pairs.push((1, n - used));
        }
        Partition::from_pairs(&pairs)
    };
    match algebra.series() {
        ClassicalSeries::Sl | ClassicalSeries::Sp => pad(&[(p1, r1)]),
        ClassicalSeries::So => {
            if p1 % 2 == 0 {
                // (d): same p_1, same (even) r_1
                pad(&[(p1, r1)])
            } else if r1 >= 2 {
                // (e): the leader carries the even multiplicity r_1 or r_1 - 1
                let m = if r1 % 2 == 0 { r1 } else { r1 - 1 };
                pad(&[(p1, m)])
            } else {
                let p2 = p.second();
                if p2 == p1 - 1 {
                    return Err(Error::NilpotentTypeBush(p.to_string()));
                }
                if p1 >= 5 && p2 == p1 - 2 {
                    pad(&[(p1, 1), (p1 - 2, 1)]) // (c)
                } else {
                    pad(&[(p1, 1)]) // (a), (b)
                }
            }
        }
    }
}

/// A box in the normal-form decomposition. Boxes partition the diagram; each
/// box carries 0, 1 or 2 irreducible components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BoxBlock {
    /// One Jordan block of size `n >= 2` in `sl`.
    SlPart(usize),
    /// Dropped parts 1 in `sl` (count).
    SlOnes(usize),
    /// One even part `n` in `sp`.
    SpEven(usize),
    /// A pair of odd parts `(p, p)` in `sp`.
    SpOddPair(usize),
    /// Dropped pairs `(1,1)` in `sp` (count of pairs).
    SpOnesPairs(usize),
    /// A pair of even parts `(p, p)` in `so`.
    SoEvenPair(usize),
    /// A pair of odd parts `(p, p)` in `so`.
    SoOddPair(usize),
    /// The box `(p, p-2)`, `p >= 5` odd, in `so`.
    SoDSplit(usize),
    /// The box `(3, 1)` in `so`.
    SoThreeOne,
    /// A bare odd part `p >= 3` in `so`.
    SoBare(usize),
    /// Leftover parts 1 in `so` (count).
    SoOnes(usize),
}

impl BoxBlock {
    /// Natural-representation dimension consumed by the box.
    pub(crate) fn dims(&self) -> usize {
        match *self {
            BoxBlock::SlPart(n) => n,
            BoxBlock::SlOnes(k) => k,
            BoxBlock::SpEven(n) => n,
            BoxBlock::SpOddPair(p) => 2 * p,
            BoxBlock::SpOnesPairs(k) => 2 * k,
            BoxBlock::SoEvenPair(p) => 2 * p,
            BoxBlock::SoOddPair(p) => 2 * p,
            BoxBlock::SoDSplit(p) => 2 * p - 2,
            BoxBlock::SoThreeOne => 4,
            BoxBlock::SoBare(p) => p,
            BoxBlock::SoOnes(k) => k,
        }
    }

    /// The irreducible components the box contributes.
    pub(crate) fn components(&self) -> Vec<NormalFormComponent> {
        match *self {
            BoxBlock::SlPart(n) => {
                if n % 2 == 1 {
                    vec![NormalFormComponent::A((n - 1) / 2)]
                } else {
                    vec![NormalFormComponent::C(n / 2)]
                }
            }
            BoxBlock::SpEven(n) => vec![NormalFormComponent::C(n / 2)],
            BoxBlock::SpOddPair(p) | BoxBlock::SoOddPair(p) => {
                vec![NormalFormComponent::A((p - 1) / 2)]
            }
            BoxBlock::SoEvenPair(p) => vec![NormalFormComponent::C(p / 2)],
            BoxBlock::SoDSplit(p) => vec![NormalFormComponent::D((p - 3) / 2)],
            BoxBlock::SoThreeOne => vec![NormalFormComponent::C(1), NormalFormComponent::C(1)],
            BoxBlock::SoBare(p) => match p {
                3 => vec![NormalFormComponent::C(1)],
                7 => vec![NormalFormComponent::G2],
                _ => vec![NormalFormComponent::B((p - 1) / 2)],
            },
            _ => Vec::new(),
        }
    }
}

/// Break a valid partition into boxes. For `so` the even and odd
/// subpartitions are treated separately, then the odd one is boxed greedily
/// from the largest part down.
pub(crate) fn boxes(algebra: &ClassicalAlgebra, p: &Partition) -> Result<Vec<BoxBlock>, Error> {
    validate(algebra, p)?;
    let mut out = Vec::new();
    match algebra.series() {
        ClassicalSeries::Sl => {
            for &(part, mult) in p.pairs() {
                if part == 1 {
                    out.push(BoxBlock::SlOnes(mult));
                } else {
                    for _ in 0..mult {
                        out.push(BoxBlock::SlPart(part));
                    }
                }
            }
        }
        ClassicalSeries::Sp => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 0 {
                    for _ in 0..mult {
                        out.push(BoxBlock::SpEven(part));
                    }
                } else if part == 1 {
                    out.push(BoxBlock::SpOnesPairs(mult / 2));
                } else {
                    for _ in 0..mult / 2 {
                        out.push(BoxBlock::SpOddPair(part));
                    }
                }
            }
        }
        ClassicalSeries::So => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 0 {
                    for _ in 0..mult / 2 {
                        out.push(BoxBlock::SoEvenPair(part));
                    }
                }
            }
            // greedy boxing of the odd subpartition
            let mut odd: Vec<(usize, usize)> = p
                .pairs()
                .iter()
                .copied()
                .filter(|&(q, _)| q % 2 == 1)
                .collect();
            let mut i = 0usize;
            while i < odd.len() {
                let (part, mut mult) = odd[i];
                if part == 1 {
                    if mult > 0 {
                        out.push(BoxBlock::SoOnes(mult));
                    }
                    break;
                }
                for _ in 0..mult / 2 {
                    out.push(BoxBlock::SoOddPair(part));
                }
                mult %= 2;
                if mult == 1 {
                    let companion = odd.get(i + 1).map(|&(q, _)| q);
                    if companion == Some(part - 2) {
                        odd[i + 1].1 -= 1;
                        if odd[i + 1].1 == 0 {
                            odd.remove(i + 1);
                        }
                        if part == 3 {
                            out.push(BoxBlock::SoThreeOne);
                        } else {
                            out.push(BoxBlock::SoDSplit(part));
                        }
                    } else {
                        out.push(BoxBlock::SoBare(part));
                    }
                }
                i += 1;
            }
        }
    }
    debug_assert_eq!(
        out.iter().map(BoxBlock::dims).sum::<usize>(),
        algebra.n(),
        "boxes must consume the whole diagram"
    );
    Ok(out)
}

/// The normal form of the orbit. The zero orbit yields the empty form.
pub fn normal_form(algebra: &ClassicalAlgebra, p: &Partition) -> Result<NormalForm, Error> {
    let blocks = boxes(algebra, p)?;
    let comps: Vec<NormalFormComponent> = blocks.iter().flat_map(|b| b.components()).collect();
    Ok(NormalForm::from_components(&comps))
}

/// All partitions of `n`, each in canonical descending order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(stack).expect("nonempty stack"));
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All non-zero orbits of the algebra: valid partitions of `N` other than
/// `(1^N)`, largest first.
pub fn orbits(algebra: &ClassicalAlgebra) -> Vec<Partition> {
    partitions_of(algebra.n())
        .into_iter()
        .filter(|p| !p.is_zero_orbit() && validate(algebra, p).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(series: ClassicalSeries, n: usize) -> ClassicalAlgebra {
        ClassicalAlgebra::new(series, n).unwrap()
    }

    fn part(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn partition_parse_and_display_round_trip() {
        let p = part("24^3,23^4,21^5,18,13^4,10^5,8^6,3^2,2,1^5");
        assert_eq!(p.total(), 72 + 92 + 105 + 18 + 52 + 50 + 48 + 6 + 2 + 5);
        assert_eq!(p.to_string(), "24^3,23^4,21^5,18,13^4,10^5,8^6,3^2,2,1^5");
        assert_eq!(part("[5,3,2,2]").to_string(), "5,3,2^2");
        assert_eq!(part("5 3 2 2"), part("2,2,3,5"));
        assert!(Partition::parse("").is_err());
        assert!(Partition::parse("0,3").is_err());
        assert!(Partition::parse("3^0").is_err());
    }

    #[test]
    fn validation_rules() {
        assert!(validate(&alg(ClassicalSeries::Sp, 4), &part("3,1")).is_err());
        assert!(validate(&alg(ClassicalSeries::So, 8), &part("4,4")).is_ok());
        assert!(validate(&alg(ClassicalSeries::Sl, 5), &part("3,2")).is_ok());
        assert!(validate(&alg(ClassicalSeries::Sl, 6), &part("3,2")).is_err());
        assert!(validate(&alg(ClassicalSeries::So, 7), &part("4,2,1")).is_err());
        assert!(ClassicalAlgebra::new(ClassicalSeries::So, 6).is_err());
        assert!(ClassicalAlgebra::new(ClassicalSeries::Sp, 7).is_err());
    }

    #[test]
    fn depth_values() {
        assert_eq!(
            depth(&alg(ClassicalSeries::So, 9), &part("5,1^4")).unwrap(),
            6
        );
        assert_eq!(
            depth(&alg(ClassicalSeries::So, 7), &part("3,2,2")).unwrap(),
            3
        );
        assert_eq!(
            depth(&alg(ClassicalSeries::Sl, 6), &part("3,2,1")).unwrap(),
            4
        );
        assert_eq!(
            depth(&alg(ClassicalSeries::So, 13), &part("5,4,4")).unwrap(),
            7
        );
        assert_eq!(depth(&alg(ClassicalSeries::Sp, 4), &part("4")).unwrap(), 6);
        assert!(matches!(
            depth(&alg(ClassicalSeries::Sl, 4), &part("1^4")),
            Err(Error::ZeroOrbit(_))
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_type(&alg(ClassicalSeries::Sp, 8), &part("3,3,1,1")).unwrap(),
            NilpotentType::Semisimple
        );
        assert_eq!(
            classify_type(&alg(ClassicalSeries::So, 13), &part("5,4,4")).unwrap(),
            NilpotentType::Nilpotent
        );
        assert_eq!(
            classify_type(&alg(ClassicalSeries::Sl, 5), &part("3,2")).unwrap(),
            NilpotentType::Mixed
        );
        for (n, s) in [
            (7, "3,1^4"),
            (9, "5,1^4"),
            (8, "5,3"),
            (8, "4,4"),
            (10, "3,3,1^4"),
        ] {
            assert_eq!(
                classify_type(&alg(ClassicalSeries::So, n), &part(s)).unwrap(),
                NilpotentType::Semisimple,
                "so_{n} {s}"
            );
        }
        assert_eq!(
            classify_type(&alg(ClassicalSeries::So, 11), &part("5,3,3")).unwrap(),
            NilpotentType::Mixed
        );
    }

    #[test]
    fn reduced_depth_values() {
        assert_eq!(
            reduced_depth(&alg(ClassicalSeries::So, 13), &part("5,4,4")).unwrap(),
            6
        );
        assert_eq!(
            reduced_depth(&alg(ClassicalSeries::Sl, 6), &part("3,2,1")).unwrap(),
            4
        );
        assert_eq!(
            reduced_depth(&alg(ClassicalSeries::So, 9), &part("5,1^4")).unwrap(),
            6
        );
    }

    #[test]
    fn bush_leaders() {
        assert_eq!(
            bush_leader(&alg(ClassicalSeries::Sl, 11), &part("5,3,2,1")).unwrap(),
            part("5,1^6")
        );
        assert_eq!(
            bush_leader(&alg(ClassicalSeries::So, 16), &part("7,5,3,1")).unwrap(),
            part("7,5,1^4")
        );
        assert_eq!(
            bush_leader(&alg(ClassicalSeries::So, 16), &part("9,3,3,1")).unwrap(),
            part("9,1^7")
        );
        // odd multiplicity in so goes down to the even-multiplicity leader
        assert_eq!(
            bush_leader(&alg(ClassicalSeries::So, 16), &part("3^5,1")).unwrap(),
            part("3^4,1^4")
        );
        // idempotent and (p_1, r_1)-preserving for sl/sp
        let a = alg(ClassicalSeries::Sp, 12);
        let leader = bush_leader(&a, &part("4,4,2,1,1")).unwrap();
        assert_eq!(leader, part("4,4,1^4"));
        assert_eq!(bush_leader(&a, &leader).unwrap(), leader);
        // nilpotent type has no leader
        assert!(matches!(
            bush_leader(&alg(ClassicalSeries::So, 13), &part("5,4,4")),
            Err(Error::NilpotentTypeBush(_))
        ));
    }

    #[test]
    fn normal_form_small_cases() {
        assert_eq!(
            normal_form(&alg(ClassicalSeries::Sl, 2), &part("2"))
                .unwrap()
                .to_string(),
            "C_1"
        );
        assert_eq!(
            normal_form(&alg(ClassicalSeries::So, 8), &part("7,1"))
                .unwrap()
                .to_string(),
            "G_2"
        );
        assert_eq!(
            normal_form(&alg(ClassicalSeries::So, 9), &part("5,3,1"))
                .unwrap()
                .to_string(),
            "D_4(a_1)"
        );
        // zero orbit: empty normal form, not an error
        let nf = normal_form(&alg(ClassicalSeries::Sl, 4), &part("1^4")).unwrap();
        assert!(nf.is_empty());
        assert_eq!(nf.to_string(), "0");
    }

    #[test]
    fn normal_form_bare_three() {
        // (3) alone in the odd subpartition, no 1 available
        assert_eq!(
            normal_form(&alg(ClassicalSeries::So, 7), &part("3,2,2"))
                .unwrap()
                .to_string(),
            "2C_1"
        );
        // (3,1): one box, two C_1
        assert_eq!(
            normal_form(&alg(ClassicalSeries::So, 8), &part("3,2,2,1"))
                .unwrap()
                .to_string(),
            "3C_1"
        );
    }

    #[test]
    fn normal_form_component_count_and_depth() {
        let a = alg(ClassicalSeries::So, 13);
        let p = part("5,4,4");
        let nf = normal_form(&a, &p).unwrap();
        assert_eq!(nf.to_string(), "(C_2+B_2)");
        assert_eq!(nf.max_depth(), Some(6));
        assert_eq!(nf.max_depth().unwrap(), reduced_depth(&a, &p).unwrap());
    }

    #[test]
    fn normal_form_parse_round_trip() {
        for s in [
            "C_1",
            "3C_1",
            "G_2",
            "D_4(a_1)",
            "2C_10+2A_16+D_16(a_7)",
            "(2C_2+D_4(a_1))+3A_2+6C_1",
            "F_4(a_2)",
            "E_8(a_7)",
            "B_4+2C_1",
        ] {
            let nf = NormalForm::parse(s).unwrap();
            let printed = nf.to_string();
            assert_eq!(NormalForm::parse(&printed).unwrap(), nf, "{s}");
        }
        // decorated variants map onto the same abstract components
        assert_eq!(
            NormalForm::parse("A~_2+C_1").unwrap(),
            NormalForm::parse("A_2+C_1").unwrap()
        );
        assert_eq!(
            NormalForm::parse("(3C_1)''").unwrap(),
            NormalForm::parse("3C_1").unwrap()
        );
        assert_eq!(
            NormalForm::parse("B_4+C_1'+C_1").unwrap(),
            NormalForm::parse("B_4+2C_1").unwrap()
        );
        assert!(NormalForm::parse("0").unwrap().is_empty());
        assert!(NormalForm::parse("A_3").is_err());
        assert!(NormalForm::parse("B_3").is_err());
        assert!(NormalForm::parse("D_5(a_1)").is_err());
    }

    /// The three large worked examples; the expected strings follow the
    /// per-parity derivation of each normal form (even parts giving C's, odd
    /// parts giving A/B/D/G blocks, merged by depth).
    #[test]
    fn worked_example_sl() {
        let p = part("24^3,23^4,21^5,18,13^4,10^5,8^6,3^2,2,1^5");
        let a = alg(ClassicalSeries::Sl, p.total());
        // even parts: 3C_12+C_9+5C_5+6C_4+C_1; odd: 4A_22+5A_20+4A_12+2A_2
        assert_eq!(
            normal_form(&a, &p).unwrap().to_string(),
            "3C_12+4A_22+5A_20+C_9+4A_12+5C_5+6C_4+2A_2+C_1"
        );
    }

    #[test]
    fn worked_example_sp() {
        let p = part("19^8,17^4,12^6,11^10,10^3,6,5^4,2^7,1^2");
        let a = alg(ClassicalSeries::Sp, p.total());
        assert_eq!(
            normal_form(&a, &p).unwrap().to_string(),
            "4A_18+2A_16+6C_6+5A_10+3C_5+C_3+2A_4+7C_1"
        );
    }

    #[test]
    fn worked_example_so() {
        let p = part("20^4,17^5,15^6,13^4,10^2,9^4,8^2,7^3,5^4,4^4,3^8,2^8,1^6");
        let a = alg(ClassicalSeries::So, p.total());
        assert_eq!(
            normal_form(&a, &p).unwrap().to_string(),
            "2C_10+2A_16+D_16(a_7)+2A_14+D_14(a_6)+A_12+B_6+C_5+2A_8+C_4+A_6+D_6(a_2)+A_4+(2C_2+D_4(a_1))+3A_2+6C_1"
        );
    }

    #[test]
    fn boxes_consume_everything() {
        let a = alg(ClassicalSeries::So, 30);
        let p = part("7,6,6,5,3,1^3");
        let blocks = boxes(&a, &p).unwrap();
        let dims: usize = blocks.iter().map(BoxBlock::dims).sum();
        assert_eq!(dims, 30);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_parts() -> impl Strategy<Value = Vec<usize>> {
            proptest::collection::vec(1usize..=15, 1..=12)
        }

        proptest! {
            #[test]
            fn partition_text_round_trip(parts in arb_parts()) {
                let p = Partition::from_parts(&parts).unwrap();
                let printed = p.to_string();
                prop_assert_eq!(Partition::parse(&printed).unwrap(), p);
            }

            /// Boxes consume the whole diagram and the top component depth
            /// is the reduced depth, for every valid partition of any
            /// series.
            #[test]
            fn normal_form_depth_and_dims(parts in arb_parts()) {
                let p = Partition::from_parts(&parts).unwrap();
                for series in [ClassicalSeries::Sl, ClassicalSeries::Sp, ClassicalSeries::So] {
                    let Ok(algebra) = ClassicalAlgebra::new(series, p.total()) else {
                        continue;
                    };
                    if validate(&algebra, &p).is_err() {
                        continue;
                    }
                    let blocks = boxes(&algebra, &p).unwrap();
                    let dims: usize = blocks.iter().map(BoxBlock::dims).sum();
                    prop_assert_eq!(dims, algebra.n());
                    let nf = normal_form(&algebra, &p).unwrap();
                    if !p.is_zero_orbit() {
                        prop_assert_eq!(
                            nf.max_depth().unwrap(),
                            reduced_depth(&algebra, &p).unwrap()
                        );
                    }
                    // printed form parses back to the same multiset
                    let printed = nf.to_string();
                    if !nf.is_empty() {
                        prop_assert_eq!(NormalForm::parse(&printed).unwrap(), nf);
                    }
                }
            }

            /// Bush leaders are semisimple type, idempotent, and keep
            /// (p_1, r_1) for sl/sp.
            #[test]
            fn bush_leader_properties(parts in arb_parts()) {
                let p = Partition::from_parts(&parts).unwrap();
                for series in [ClassicalSeries::Sl, ClassicalSeries::Sp, ClassicalSeries::So] {
                    let Ok(algebra) = ClassicalAlgebra::new(series, p.total()) else {
                        continue;
                    };
                    if validate(&algebra, &p).is_err() || p.is_zero_orbit() {
                        continue;
                    }
                    match bush_leader(&algebra, &p) {
                        Ok(leader) => {
                            prop_assert_eq!(
                                classify_type(&algebra, &leader).unwrap(),
                                NilpotentType::Semisimple
                            );
                            prop_assert_eq!(
                                bush_leader(&algebra, &leader).unwrap(),
                                leader.clone()
                            );
                            if series != ClassicalSeries::So {
                                prop_assert_eq!(leader.largest(), p.largest());
                                prop_assert_eq!(
                                    leader.largest_multiplicity(),
                                    p.largest_multiplicity()
                                );
                            }
                        }
                        Err(Error::NilpotentTypeBush(_)) => {
                            prop_assert_eq!(
                                classify_type(&algebra, &p).unwrap(),
                                NilpotentType::Nilpotent
                            );
                        }
                        Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
                    }
                }
            }
        }
    }
}
