//! Root-system combinatorics for the simple types up to rank 8.
//!
//! Node numbering follows Bourbaki throughout:
//!
//! * `A_n`, `B_n`, `C_n`: a chain `1 - 2 - ... - n`; for `B_n` the last node
//!   is short, for `C_n` the last node is long.
//! * `D_n`: a chain `1 - ... - (n-2)` with both `n-1` and `n` attached to
//!   node `n-2`.
//! * `E_6, E_7, E_8`: a chain `1 - 3 - 4 - 5 - 6 (- 7)(- 8)` with the branch
//!   node `2` attached to node `4`.
//! * `F_4`: a chain `1 - 2 => 3 - 4` (`1, 2` long, `3, 4` short).
//! * `G_2`: node `1` long, node `2` short, so the highest root is
//!   `2a_1 + 3a_2`.
//!
//! The Cartan matrix is stored as `cartan[i][j] = <a_i, a_j^v> = a_i(h_j)`,
//! rows indexed by roots and columns by coroots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// The seven families of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleFamily {
    pub fn letter(self) -> char {
        match self {
            SimpleFamily::A => 'A',
            SimpleFamily::B => 'B',
            SimpleFamily::C => 'C',
            SimpleFamily::D => 'D',
            SimpleFamily::E => 'E',
            SimpleFamily::F => 'F',
            SimpleFamily::G => 'G',
        }
    }
}

/// A simple type `X_r` with the rank admissibility rules enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: SimpleFamily,
    rank: usize,
}

impl SimpleType {
    /// Admissible ranks: `A >= 1`, `B >= 2`, `C >= 2`, `D >= 3`, `E in 6..=8`,
    /// `F = 4`, `G = 2`.
    pub fn new(family: SimpleFamily, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            SimpleFamily::A => rank >= 1,
            SimpleFamily::B => rank >= 2,
            SimpleFamily::C => rank >= 2,
            SimpleFamily::D => rank >= 3,
            SimpleFamily::E => (6..=8).contains(&rank),
            SimpleFamily::F => rank == 4,
            SimpleFamily::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InadmissibleType(format!(
                "{}_{rank} is not a simple type",
                family.letter()
            )))
        }
    }

    pub fn family(&self) -> SimpleFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Parse names like `E8`, `E_8`, `G2`, `D6`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        let mut chars = t.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => SimpleFamily::A,
            Some('B') => SimpleFamily::B,
            Some('C') => SimpleFamily::C,
            Some('D') => SimpleFamily::D,
            Some('E') => SimpleFamily::E,
            Some('F') => SimpleFamily::F,
            Some('G') => SimpleFamily::G,
            _ => return Err(Error::InadmissibleType(format!("unrecognized type `{t}`"))),
        };
        let rest: String = chars.collect();
        let digits = rest.trim_start_matches('_');
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::InadmissibleType(format!("unrecognized type `{t}`")))?;
        SimpleType::new(fam, rank)
    }
}

impl core::fmt::Display for SimpleType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root written in the simple-root basis, `sum k_i a_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Height = sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// A built root system: Cartan matrix, the positive roots ordered by height
/// (simple roots first, in node order), and the marks of the highest root.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    marks: Vec<i64>,
    symmetrizer: Vec<i64>,
    index: BTreeMap<Vec<i64>, usize>,
}

/// Cartan matrix of an admissible type, `cartan[i][j] = a_i(h_j)`.
pub fn cartan_matrix(stype: SimpleType) -> Vec<Vec<i64>> {
    let r = stype.rank();
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match stype.family() {
        SimpleFamily::A => {
            for i in 0..r - 1 {
                bond(&mut c, i, i + 1);
            }
        }
        SimpleFamily::B => {
            for i in 0..r - 1 {
                bond(&mut c, i, i + 1);
            }
            // a_{r-1} long, a_r short: <a_{r-1}, a_r^v> = -2
            c[r - 2][r - 1] = -2;
        }
        SimpleFamily::C => {
            for i in 0..r - 1 {
                bond(&mut c, i, i + 1);
            }
            // a_r long: <a_r, a_{r-1}^v> = -2
            c[r - 1][r - 2] = -2;
        }
        SimpleFamily::D => {
            for i in 0..r - 2 {
                bond(&mut c, i, i + 1);
            }
            bond(&mut c, r - 3, r - 1);
        }
        SimpleFamily::E => {
            // chain 1-3-4-5-..., branch node 2 attached to 4
            bond(&mut c, 0, 2);
            for i in 2..r - 1 {
                bond(&mut c, i, i + 1);
            }
            bond(&mut c, 1, 3);
        }
        SimpleFamily::F => {
            bond(&mut c, 0, 1);
            bond(&mut c, 1, 2);
            bond(&mut c, 2, 3);
            c[1][2] = -2; // a_2 long, a_3 short
        }
        SimpleFamily::G => {
            // node 1 long, node 2 short
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

/// Marks of the highest root in the simple-root basis, by closed formula.
/// Valid for any admissible rank (used for classical types beyond the
/// closure bound).
pub fn marks_of(stype: SimpleType) -> Vec<i64> {
    let r = stype.rank();
    match stype.family() {
        SimpleFamily::A => vec![1; r],
        SimpleFamily::B => {
            let mut m = vec![2; r];
            m[0] = 1;
            m
        }
        SimpleFamily::C => {
            let mut m = vec![2; r];
            m[r - 1] = 1;
            m
        }
        SimpleFamily::D => {
            let mut m = vec![2; r];
            m[0] = 1;
            m[r - 2] = 1;
            m[r - 1] = 1;
            m
        }
        SimpleFamily::E => match r {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        SimpleFamily::F => vec![2, 3, 4, 2],
        SimpleFamily::G => vec![2, 3],
    }
}

/// Enumerate the positive roots of `stype` by root-string closure from the
/// Cartan matrix. Supported up to rank 8.
pub fn build_root_system(stype: SimpleType) -> Result<RootSystem, Error> {
    if stype.rank() > 8 {
        return Err(Error::InadmissibleType(format!(
            "{stype}: root systems are built up to rank 8 only"
        )));
    }
    let r = stype.rank();
    let cartan = cartan_matrix(stype);

    let mut layers: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut first: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut v = vec![0i64; r];
        v[i] = 1;
        seen.insert(v.clone(), ());
        first.push(v);
    }
    layers.push(first);

    loop {
        let last = layers.last().unwrap();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in last {
            for i in 0..r {
                // p = largest k with beta - k a_i still a root
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&k| k == 0) || !seen.contains_key(&probe) {
                        break;
                    }
                    p += 1;
                }
                // <beta, a_i^v> = sum_j k_j cartan[j][i]
                let pairing: i64 = beta
                    .iter()
                    .enumerate()
                    .map(|(j, &k)| k * cartan[j][i])
                    .sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !seen.contains_key(&up) {
                        seen.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        // within a height layer: reverse-lex, so simple roots sit at
        // their own indices and the order is deterministic
        next.sort_by(|a, b| b.cmp(a));
        next.dedup();
        layers.push(next);
    }

    let mut positive_roots = Vec::new();
    for layer in layers {
        for v in layer {
            positive_roots.push(Root { coeffs: v });
        }
    }
    let highest = positive_roots
        .last()
        .expect("a simple type has at least one positive root");
    let marks = highest.coeffs.clone();
    debug_assert_eq!(
        positive_roots
            .iter()
            .filter(|b| b.height() == highest.height())
            .count(),
        1,
        "highest root must be unique"
    );

    let index = positive_roots
        .iter()
        .enumerate()
        .map(|(i, b)| (b.coeffs.clone(), i))
        .collect();

    let symmetrizer = symmetrizer(&cartan);

    Ok(RootSystem {
        stype,
        cartan,
        positive_roots,
        marks,
        symmetrizer,
        index,
    })
}

/// Minimal positive integers `d_i` with `d_i cartan[i][j] = d_j cartan[j][i]`,
/// i.e. `d_i = (a_i, a_i)/2` up to overall scale.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let r = cartan.len();
    // propagate ratios over the Dynkin graph, then clear denominators
    let mut num = vec![0i64; r];
    let mut den = vec![0i64; r];
    num[0] = 1;
    den[0] = 1;
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..r {
            if i != j && cartan[i][j] != 0 && den[j] == 0 {
                // (a_i, a_j) = c[i][j] d_j = c[j][i] d_i, so d_j = d_i c[j][i] / c[i][j]
                num[j] = num[i] * cartan[j][i];
                den[j] = den[i] * cartan[i][j];
                if num[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                queue.push(j);
            }
        }
    }
    let lcm_den = den.iter().fold(1i64, |a, &b| lcm(a, b.abs()));
    let mut d: Vec<i64> = (0..r).map(|i| num[i] * (lcm_den / den[i])).collect();
    let g = d.iter().fold(0i64, |a, &b| gcd(a, b));
    for x in &mut d {
        *x /= g;
    }
    d
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

impl RootSystem {
    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim g = rank + 2 |Phi+|`.
    pub fn algebra_dimension(&self) -> usize {
        self.rank() + 2 * self.num_positive_roots()
    }

    /// Marks `a_i` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// `d_i = (a_i, a_i)/2` as minimal positive integers.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Index of a positive root given by coefficients, if it is one.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// Is `coeffs` a root (positive or negative)?
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|&k| -k).collect();
        self.index.contains_key(&neg)
    }

    /// Squared length `(beta, beta)` in the symmetrizer scale.
    pub fn length_sq(&self, coeffs: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0i64;
        for i in 0..r {
            for j in 0..r {
                // (a_i, a_j) = cartan[i][j] * d_j
                s += coeffs[i] * coeffs[j] * self.cartan[i][j] * self.symmetrizer[j];
            }
        }
        s
    }

    /// `<beta, a_i^v> = beta(h_i)`.
    pub fn pairing_with_coroot(&self, coeffs: &[i64], i: usize) -> i64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(j, &k)| k * self.cartan[j][i])
            .sum()
    }

    /// Largest `k >= 0` with `beta - k alpha` still a root (or zero does not
    /// count). Both arguments are arbitrary roots.
    pub fn string_down(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let mut p = 0i64;
        let mut probe: Vec<i64> = beta.to_vec();
        loop {
            for (x, a) in probe.iter_mut().zip(alpha) {
                *x -= a;
            }
            if probe.iter().all(|&k| k == 0) || !self.is_root(&probe) {
                break;
            }
            p += 1;
        }
        p
    }

    /// Apply simple reflections until the weight vector
    /// `(a_1(h), ..., a_r(h))` is dominant. Returns the dominant weight and
    /// the word of simple reflections applied (left to right).
    pub fn to_dominant(&self, weight: &[BigRational]) -> (Vec<BigRational>, Vec<usize>) {
        let r = self.rank();
        assert_eq!(weight.len(), r, "weight vector must have length rank");
        let mut w: Vec<BigRational> = weight.to_vec();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..r).find(|&i| w[i].is_negative()) else {
                return (w, word);
            };
            // s_i: w_j -> w_j - w_i * cartan[j][i]
            let wi = w[i].clone();
            for (j, x) in w.iter_mut().enumerate() {
                *x -= &wi * BigRational::from(BigInt::from(self.cartan[j][i]));
            }
            word.push(i);
        }
    }

    /// Integer-label convenience wrapper around [`Self::to_dominant`].
    pub fn to_dominant_int(&self, weight: &[i64]) -> (Vec<i64>, Vec<usize>) {
        let wq: Vec<BigRational> = weight
            .iter()
            .map(|&x| BigRational::from(BigInt::from(x)))
            .collect();
        let (dom, word) = self.to_dominant(&wq);
        let out = dom
            .iter()
            .map(|q| {
                debug_assert!(q.is_integer());
                int_part(q)
            })
            .collect();
        (out, word)
    }
}

pub(crate) fn int_part(q: &BigRational) -> i64 {
    use num_traits::ToPrimitive;
    q.to_integer().to_i64().expect("value fits in i64")
}

#[allow(dead_code)]
pub(crate) fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}
