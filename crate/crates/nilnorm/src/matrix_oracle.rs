//! Independent exact-rational matrix verification for the classical types.
//!
//! Nilpotents are built from partitions as block matrices in a formed space,
//! completed to sl2 triples blockwise, and measured with `ad h` on an
//! explicit basis of the algebra. Jordan types come from fraction-free rank
//! sequences. Nothing here consults the partition formulas it certifies.
//!
//! Gram conventions, per block: a single Jordan block of size `n` carries the
//! alternating antidiagonal form (entry `(i, n-1-i)` equal to `(-1)^i`),
//! symmetric for `n` odd and skew for `n` even; a hyperbolic pair
//! `diag(J_n, -J_n^T)` carries identity off-blocks (`[[0, I], [I, 0]]`,
//! skew-signed for `sp`); the doubled block `diag(J_n, J_n)` used for paired
//! even parts in `so` carries the skew-by-skew product form. The global gram
//! is the block-diagonal sum.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classical::{
    self, BoxBlock, ClassicalAlgebra, ClassicalSeries, NormalFormComponent, Partition,
};
use crate::error::Error;

/// Which bilinear form the space carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// No form: `sl_N` (trace-zero matrices).
    None,
    /// Symmetric form: `so_N`.
    Symmetric,
    /// Skew-symmetric form: `sp_N`.
    Antisymmetric,
}

impl FormKind {
    pub fn of(series: ClassicalSeries) -> FormKind {
        match series {
            ClassicalSeries::Sl => FormKind::None,
            ClassicalSeries::So => FormKind::Symmetric,
            ClassicalSeries::Sp => FormKind::Antisymmetric,
        }
    }
}

/// A dense square matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n);
        for i in 0..n {
            m.set_int(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn set_int(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, BigRational::from(BigInt::from(v)));
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.n, other.n)));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.n, other.n)));
        }
        let n = self.n;
        let mut out = ExactMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = a * b + out.get(i, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn commutes_with(&self, other: &ExactMatrix) -> Result<bool, Error> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        Ok(ab == ba)
    }

    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Rank over the rationals via fraction-free (Bareiss) elimination on
    /// the denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let n = self.n;
        // clear denominators row by row
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                let d = self.get(i, j).denom();
                l = lcm_big(&l, d);
            }
            let row: Vec<BigInt> = (0..n)
                .map(|j| {
                    let q = self.get(i, j);
                    q.numer() * (&l / q.denom())
                })
                .collect();
            m.push(row);
        }
        bareiss_rank(&mut m)
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let d = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &d;
                inv[col][j] /= &d;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let s = &a[col][j] * &factor;
                        a[r][j] -= s;
                        let s = &inv[col][j] * &factor;
                        inv[r][j] -= s;
                    }
                }
            }
        }
        let mut out = ExactMatrix::zero(n);
        for (i, row) in inv.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Some(out)
    }
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let g = gcd_big(a.clone(), b.clone());
    (a / &g * b).abs()
}

fn gcd_big(mut a: BigInt, mut b: BigInt) -> BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Fraction-free Gaussian elimination; returns the rank and leaves `m`
/// mutated.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let v = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// An `N`-dimensional space with its (possibly absent) bilinear form.
#[derive(Debug, Clone)]
pub struct FormedSpace {
    n: usize,
    kind: FormKind,
    gram: Option<ExactMatrix>,
}

impl FormedSpace {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> Option<&ExactMatrix> {
        self.gram.as_ref()
    }

    /// Membership predicate of the algebra attached to the space: trace zero
    /// for `sl`; `M^T G + G M = 0` for `so`/`sp`.
    pub fn contains(&self, m: &ExactMatrix) -> Result<bool, Error> {
        if m.size() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "matrix size {} in space of dimension {}",
                m.size(),
                self.n
            )));
        }
        match (&self.kind, &self.gram) {
            (FormKind::None, _) => Ok(m.trace().is_zero()),
            (_, Some(g)) => {
                let lhs = m.transpose().mul(g)?.add(&g.mul(m)?)?;
                Ok(lhs.is_zero())
            }
            _ => Err(Error::ShapeMismatch(
                "formed space without gram".to_string(),
            )),
        }
    }

    /// Rank of the algebra: `N - 1` for `sl`, `floor(N/2)` otherwise.
    pub fn algebra_rank(&self) -> usize {
        match self.kind {
            FormKind::None => self.n - 1,
            _ => self.n / 2,
        }
    }
}

// ----- block construction -----

/// Subdiagonal Jordan block `J_n` (as `f` of the standard sl2 on n dims).
fn jordan_f(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    for i in 0..n.saturating_sub(1) {
        m.set_int(i + 1, i, 1);
    }
    m
}

/// Superdiagonal `e` with entries `i (n - i)`.
fn jordan_e(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    for i in 1..n {
        m.set_int(i - 1, i, (i as i64) * (n as i64 - i as i64));
    }
    m
}

/// Diagonal `h = diag(n-1, n-3, ..., 1-n)`.
fn jordan_h(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n);
    for i in 0..n {
        m.set_int(i, i, n as i64 - 1 - 2 * i as i64);
    }
    m
}

/// Alternating antidiagonal gram on `n` dims: entry `(i, n-1-i) = (-1)^i`.
/// Symmetric for odd `n`, skew for even `n`.
fn alt_gram(n: usize) -> ExactMatrix {
    let mut g = ExactMatrix::zero(n);
    for i in 0..n {
        g.set_int(i, n - 1 - i, if i % 2 == 0 { 1 } else { -1 });
    }
    g
}

/// One block of the canonical construction, with its own triple and gram.
struct Block {
    dim: usize,
    gram: Option<ExactMatrix>,
    f: ExactMatrix,
    e: ExactMatrix,
    h: ExactMatrix,
}

/// A single part with the alternating form (`so` odd parts, `sp` even
/// parts), or a bare `sl` Jordan block when `gram` is dropped by the caller.
fn single_block(n: usize, with_gram: bool) -> Block {
    Block {
        dim: n,
        gram: with_gram.then(|| alt_gram(n)),
        f: jordan_f(n),
        e: jordan_e(n),
        h: jordan_h(n),
    }
}

/// Hyperbolic pair `diag(a, -a^T)` on `2n` dims with identity off-blocks;
/// `sign = 1` builds the symmetric form, `-1` the skew one.
fn pair_block(n: usize, sign: i64) -> Block {
    let dim = 2 * n;
    let mut gram = ExactMatrix::zero(dim);
    for i in 0..n {
        gram.set_int(i, n + i, 1);
        gram.set_int(n + i, i, sign);
    }
    let embed = |a: &ExactMatrix| -> ExactMatrix {
        let mut m = ExactMatrix::zero(dim);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j).clone());
                m.set(n + i, n + j, -a.get(j, i).clone());
            }
        }
        m
    };
    Block {
        dim,
        gram: Some(gram),
        f: embed(&jordan_f(n)),
        e: embed(&jordan_e(n)),
        h: embed(&jordan_h(n)),
    }
}

/// `diag(a, a)` on `2n` dims (`n` even) with the product-of-skews symmetric
/// form `[[0, G], [G^T, 0]]`, `G` the alternating gram. Used for paired even
/// parts of `so`, where the pair is one `sp_n` block doubled.
fn doubled_block(n: usize) -> Block {
    let dim = 2 * n;
    let g = alt_gram(n);
    let mut gram = ExactMatrix::zero(dim);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, n + j, g.get(i, j).clone());
            gram.set(n + i, j, g.get(j, i).clone());
        }
    }
    let embed = |a: &ExactMatrix| -> ExactMatrix {
        let mut m = ExactMatrix::zero(dim);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j).clone());
                m.set(n + i, n + j, a.get(i, j).clone());
            }
        }
        m
    };
    Block {
        dim,
        gram: Some(gram),
        f: embed(&jordan_f(n)),
        e: embed(&jordan_e(n)),
        h: embed(&jordan_h(n)),
    }
}

/// The `(3,1)` box: `so_4` as a pair of commuting `sp_2`'s acting on
/// `C^2 (x) C^2` with the skew-by-skew symmetric form. Returns the block
/// (sum triple) together with the two commuting `C_1` pieces.
fn three_one_block() -> (Block, ExactMatrix, ExactMatrix) {
    let w = alt_gram(2); // [[0,1],[-1,0]]
    let kron = |a: &ExactMatrix, b: &ExactMatrix| -> ExactMatrix {
        let n = a.size() * b.size();
        let bs = b.size();
        let mut m = ExactMatrix::zero(n);
        for i in 0..a.size() {
            for j in 0..a.size() {
                if a.get(i, j).is_zero() {
                    continue;
                }
                for k in 0..bs {
                    for l in 0..bs {
                        let v = a.get(i, j) * b.get(k, l);
                        if !v.is_zero() {
                            m.set(i * bs + k, j * bs + l, v);
                        }
                    }
                }
            }
        }
        m
    };
    let id = ExactMatrix::identity(2);
    let gram = kron(&w, &w);
    let m1 = kron(&jordan_f(2), &id);
    let m2 = kron(&id, &jordan_f(2));
    let e1 = kron(&jordan_e(2), &id);
    let e2 = kron(&id, &jordan_e(2));
    let h1 = kron(&jordan_h(2), &id);
    let h2 = kron(&id, &jordan_h(2));
    let block = Block {
        dim: 4,
        gram: Some(gram),
        f: m1.add(&m2).unwrap(),
        e: e1.add(&e2).unwrap(),
        h: h1.add(&h2).unwrap(),
    };
    (block, m1, m2)
}

/// Zero block of `k` dims (leftover parts 1).
fn trivial_block(k: usize, kind: FormKind) -> Block {
    Block {
        dim: k,
        gram: match kind {
            FormKind::None => None,
            FormKind::Symmetric => Some(alt_gram_sym_ones(k)),
            FormKind::Antisymmetric => Some(pair_ones_gram(k)),
        },
        f: ExactMatrix::zero(k),
        e: ExactMatrix::zero(k),
        h: ExactMatrix::zero(k),
    }
}

/// Identity gram for leftover fixed dims in `so` (each a 1-dim `(1)` block
/// with the alternating gram, which is just `1`).
fn alt_gram_sym_ones(k: usize) -> ExactMatrix {
    ExactMatrix::identity(k)
}

/// Skew gram for leftover `(1,1)` pairs in `sp`: `k` must be even.
fn pair_ones_gram(k: usize) -> ExactMatrix {
    debug_assert_eq!(k % 2, 0);
    let mut g = ExactMatrix::zero(k);
    for i in 0..k / 2 {
        g.set_int(i, k / 2 + i, 1);
        g.set_int(k / 2 + i, i, -1);
    }
    g
}

/// Assemble blocks into one space plus the summed matrices.
struct Assembly {
    space: FormedSpace,
    f: ExactMatrix,
    e: ExactMatrix,
    h: ExactMatrix,
    /// offset of each block in order
    offsets: Vec<usize>,
}

fn assemble(kind: FormKind, blocks: Vec<Block>) -> Assembly {
    let n: usize = blocks.iter().map(|b| b.dim).sum();
    let mut gram = (kind != FormKind::None).then(|| ExactMatrix::zero(n));
    let mut f = ExactMatrix::zero(n);
    let mut e = ExactMatrix::zero(n);
    let mut h = ExactMatrix::zero(n);
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut at = 0usize;
    for b in blocks {
        offsets.push(at);
        for i in 0..b.dim {
            for j in 0..b.dim {
                if let (Some(g), Some(bg)) = (gram.as_mut(), b.gram.as_ref()) {
                    if !bg.get(i, j).is_zero() {
                        g.set(at + i, at + j, bg.get(i, j).clone());
                    }
                }
                if !b.f.get(i, j).is_zero() {
                    f.set(at + i, at + j, b.f.get(i, j).clone());
                }
                if !b.e.get(i, j).is_zero() {
                    e.set(at + i, at + j, b.e.get(i, j).clone());
                }
                if !b.h.get(i, j).is_zero() {
                    h.set(at + i, at + j, b.h.get(i, j).clone());
                }
            }
        }
        at += b.dim;
    }
    Assembly {
        space: FormedSpace { n, kind, gram },
        f,
        e,
        h,
        offsets,
    }
}

/// Embed a small matrix at a diagonal offset of an `n`-dim space.
fn embed_at(n: usize, offset: usize, m: &ExactMatrix) -> ExactMatrix {
    let mut out = ExactMatrix::zero(n);
    for i in 0..m.size() {
        for j in 0..m.size() {
            if !m.get(i, j).is_zero() {
                out.set(offset + i, offset + j, m.get(i, j).clone());
            }
        }
    }
    out
}

/// Canonical block decomposition of the partition in the given form kind:
/// single parts as alternating-form blocks, paired parts (odd for `sp`,
/// even for `so`) as hyperbolic pairs.
fn canonical_blocks(kind: FormKind, p: &Partition) -> Result<Vec<Block>, Error> {
    let mut blocks = Vec::new();
    match kind {
        FormKind::None => {
            for &(part, mult) in p.pairs() {
                for _ in 0..mult {
                    blocks.push(Block {
                        dim: part,
                        gram: None,
                        f: jordan_f(part),
                        e: jordan_e(part),
                        h: jordan_h(part),
                    });
                }
            }
        }
        FormKind::Antisymmetric => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 0 {
                    for _ in 0..mult {
                        blocks.push(single_block(part, true));
                    }
                } else {
                    if mult % 2 != 0 {
                        return Err(Error::InvalidPartition {
                            series: "sp",
                            n: p.total(),
                            reason: format!("odd part {part} has odd multiplicity {mult}"),
                        });
                    }
                    for _ in 0..mult / 2 {
                        blocks.push(pair_block(part, -1));
                    }
                }
            }
        }
        FormKind::Symmetric => {
            for &(part, mult) in p.pairs() {
                if part % 2 == 1 {
                    for _ in 0..mult {
                        blocks.push(single_block(part, true));
                    }
                } else {
                    if mult % 2 != 0 {
                        return Err(Error::InvalidPartition {
                            series: "so",
                            n: p.total(),
                            reason: format!("even part {part} has odd multiplicity {mult}"),
                        });
                    }
                    for _ in 0..mult / 2 {
                        blocks.push(pair_block(part, 1));
                    }
                }
            }
        }
    }
    Ok(blocks)
}

/// Build the formed space and the nilpotent matrix of Jordan type `p`.
pub fn nilpotent_from_partition(
    algebra: &ClassicalAlgebra,
    p: &Partition,
) -> Result<(FormedSpace, ExactMatrix), Error> {
    classical::validate(algebra, p)?;
    let asm = assemble(
        FormKind::of(algebra.series()),
        canonical_blocks(FormKind::of(algebra.series()), p)?,
    );
    debug_assert!(asm.space.contains(&asm.f)?);
    Ok((asm.space, asm.f))
}

/// Jordan type from the rank sequence: the number of parts `>= k` is
/// `rank M^(k-1) - rank M^k`.
pub fn jordan_type(m: &ExactMatrix) -> Result<Partition, Error> {
    let n = m.size();
    let mut counts: Vec<usize> = Vec::new(); // counts[k-1] = #parts >= k
    let mut power = ExactMatrix::identity(n);
    let mut prev_rank = n;
    loop {
        power = power.mul(m)?;
        let r = power.rank();
        let c = prev_rank - r;
        if c == 0 {
            // rank stopped dropping: nilpotent iff rank is now 0
            if r != 0 {
                return Err(Error::NotNilpotent);
            }
            break;
        }
        counts.push(c);
        prev_rank = r;
        if r == 0 {
            break;
        }
        if counts.len() > n {
            return Err(Error::NotNilpotent);
        }
    }
    // transpose the counts staircase into parts
    let mut parts = Vec::new();
    if let Some(&c1) = counts.first() {
        for i in 1..=c1 {
            let size = counts.iter().filter(|&&c| c >= i).count();
            parts.push(size);
        }
    }
    Partition::from_parts(&parts)
}

/// Complete a canonical block nilpotent to an sl2 triple `(e, h, f)`. The
/// matrix must be exactly the one produced by [`nilpotent_from_partition`]
/// on its own space; anything else is rejected as unstructured.
pub fn sl2_complete_matrix(
    f: &ExactMatrix,
    space: &FormedSpace,
) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix), Error> {
    let p = jordan_type(f)?;
    let blocks = canonical_blocks(space.kind, &p)?;
    let asm = assemble(space.kind, blocks);
    if asm.f != *f || asm.space.n != space.n {
        return Err(Error::ShapeMismatch(
            "unstructured input: not a canonical block nilpotent".to_string(),
        ));
    }
    // exact bracket relations, checked once per call
    let ef = asm.e.mul(f)?.add(&f.mul(&asm.e)?.neg())?;
    if ef != asm.h {
        return Err(Error::ShapeMismatch("[e,f] != h".to_string()));
    }
    Ok((asm.e, asm.h, asm.f))
}

/// Maximum `ad h` eigenvalue over an explicit basis of the algebra of the
/// space. `h` must be diagonal with integer entries; every basis element
/// must be an exact eigenvector.
pub fn ad_depth(space: &FormedSpace, h: &ExactMatrix) -> Result<i64, Error> {
    if !h.is_diagonal() {
        return Err(Error::NonDiagonalH);
    }
    let n = space.n;
    let mut lambda = Vec::with_capacity(n);
    for i in 0..n {
        let v = h.get(i, i);
        if !v.is_integer() {
            return Err(Error::NonIntegerEigenvalue(format!("{v}")));
        }
        lambda.push(crate::rootdata::int_part(v));
    }
    // sparse basis elements of the algebra
    let mut basis: Vec<Vec<(usize, usize, BigRational)>> = Vec::new();
    match space.kind {
        FormKind::None => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(vec![(i, j, BigRational::one())]);
                    }
                }
            }
            for i in 0..n - 1 {
                basis.push(vec![
                    (i, i, BigRational::one()),
                    (i + 1, i + 1, -BigRational::one()),
                ]);
            }
        }
        FormKind::Symmetric | FormKind::Antisymmetric => {
            let g = space
                .gram
                .as_ref()
                .ok_or_else(|| Error::ShapeMismatch("formed space without gram".to_string()))?;
            let ginv = g
                .inverse()
                .ok_or_else(|| Error::ShapeMismatch("degenerate gram".to_string()))?;
            let sign = if space.kind == FormKind::Symmetric {
                -1i64
            } else {
                1i64
            };
            // basis: G^{-1} (E_ij +- E_ji); for so i < j, for sp i <= j
            for i in 0..n {
                let j_start = if space.kind == FormKind::Symmetric {
                    i + 1
                } else {
                    i
                };
                for j in j_start..n {
                    let mut elt: Vec<(usize, usize, BigRational)> = Vec::new();
                    for r in 0..n {
                        // G^{-1} E_ij has column j equal to G^{-1} e_i
                        if !ginv.get(r, i).is_zero() {
                            elt.push((r, j, ginv.get(r, i).clone()));
                        }
                    }
                    for r in 0..n {
                        if !ginv.get(r, j).is_zero() {
                            let v = ginv.get(r, j) * BigRational::from(BigInt::from(sign));
                            elt.push((r, i, v));
                        }
                    }
                    // merge duplicate positions (i == j case for sp)
                    let mut merged: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
                    for (r, c, v) in elt {
                        *merged.entry((r, c)).or_insert_with(BigRational::zero) += v;
                    }
                    let elt: Vec<(usize, usize, BigRational)> = merged
                        .into_iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|((r, c), v)| (r, c, v))
                        .collect();
                    if !elt.is_empty() {
                        basis.push(elt);
                    }
                }
            }
        }
    }
    // apply ad h to each basis element and read off the eigenvalue
    let mut depth = 0i64;
    for elt in &basis {
        let mut eigen: Option<i64> = None;
        for &(r, c, _) in elt {
            let mu = lambda[r] - lambda[c];
            match eigen {
                None => eigen = Some(mu),
                Some(m) if m != mu => return Err(Error::NotAnEigenvector),
                _ => {}
            }
        }
        if let Some(mu) = eigen {
            depth = depth.max(mu);
        }
    }
    Ok(depth)
}

/// One realized component of a normal form inside the ambient space.
#[derive(Debug, Clone)]
pub struct ComponentRealization {
    pub component: NormalFormComponent,
    pub matrix: ExactMatrix,
}

/// The full realization: ambient formed space and the commuting component
/// matrices.
#[derive(Debug)]
pub struct NormalFormRealization {
    pub space: FormedSpace,
    pub components: Vec<ComponentRealization>,
}

/// Realize every normal-form component of the partition as a matrix on its
/// own coordinate block.
pub fn realize_normal_form(
    algebra: &ClassicalAlgebra,
    p: &Partition,
) -> Result<NormalFormRealization, Error> {
    let kind = FormKind::of(algebra.series());
    let boxes = classical::boxes(algebra, p)?;
    // blocks and, per block, the component matrices relative to the block
    let mut blocks: Vec<Block> = Vec::new();
    let mut local: Vec<Vec<(NormalFormComponent, ExactMatrix)>> = Vec::new();
    for bx in &boxes {
        match *bx {
            BoxBlock::SlPart(n) => {
                let b = Block {
                    dim: n,
                    gram: None,
                    f: jordan_f(n),
                    e: jordan_e(n),
                    h: jordan_h(n),
                };
                let comp = bx.components()[0];
                local.push(vec![(comp, b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SlOnes(k) => {
                blocks.push(trivial_block(k, FormKind::None));
                local.push(Vec::new());
            }
            BoxBlock::SpEven(n) => {
                let b = single_block(n, true);
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SpOddPair(n) => {
                let b = pair_block(n, -1);
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SpOnesPairs(k) => {
                blocks.push(trivial_block(2 * k, FormKind::Antisymmetric));
                local.push(Vec::new());
            }
            BoxBlock::SoEvenPair(n) => {
                let b = doubled_block(n);
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SoOddPair(n) => {
                let b = pair_block(n, 1);
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SoDSplit(pp) => {
                // one component on (p) + (p-2)
                let asm = assemble(
                    FormKind::Symmetric,
                    vec![single_block(pp, true), single_block(pp - 2, true)],
                );
                let b = Block {
                    dim: asm.space.n,
                    gram: asm.space.gram,
                    f: asm.f,
                    e: asm.e,
                    h: asm.h,
                };
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SoThreeOne => {
                let (b, m1, m2) = three_one_block();
                let comps = bx.components();
                local.push(vec![(comps[0], m1), (comps[1], m2)]);
                blocks.push(b);
            }
            BoxBlock::SoBare(pp) => {
                let b = single_block(pp, true);
                local.push(vec![(bx.components()[0], b.f.clone())]);
                blocks.push(b);
            }
            BoxBlock::SoOnes(k) => {
                blocks.push(trivial_block(k, FormKind::Symmetric));
                local.push(Vec::new());
            }
        }
    }
    let asm = assemble(kind, blocks);
    let n = asm.space.n;
    let mut components = Vec::new();
    for (bi, comps) in local.into_iter().enumerate() {
        for (component, m) in comps {
            components.push(ComponentRealization {
                component,
                matrix: embed_at(n, asm.offsets[bi], &m),
            });
        }
    }
    Ok(NormalFormRealization {
        space: asm.space,
        components,
    })
}

/// Flags of the normal-form certificate; every field must end up `true`
/// (`zero_orbit` reports the degenerate empty case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub partition: Partition,
    pub zero_orbit: bool,
    pub members_of_algebra: bool,
    pub components_commute: bool,
    pub jordan_type_matches: bool,
    pub max_depth_equals_reduced_depth: bool,
    pub component_depths_match: bool,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.members_of_algebra
            && self.components_commute
            && self.jordan_type_matches
            && self.max_depth_equals_reduced_depth
            && self.component_depths_match
    }
}

/// Canonical own-algebra realization of a single component kind; returns
/// (space, f) of its principal-block model.
fn own_model(c: NormalFormComponent) -> Option<(FormKind, Partition)> {
    let one = |n: usize| Partition::from_parts(&[n]).ok();
    match c {
        NormalFormComponent::A(k) => one(2 * k + 1).map(|p| (FormKind::None, p)),
        NormalFormComponent::C(k) => one(2 * k).map(|p| (FormKind::Antisymmetric, p)),
        NormalFormComponent::B(k) => one(2 * k + 1).map(|p| (FormKind::Symmetric, p)),
        NormalFormComponent::G2 => one(7).map(|p| (FormKind::Symmetric, p)),
        NormalFormComponent::D(k) => Partition::from_parts(&[2 * k + 3, 2 * k + 1])
            .ok()
            .map(|p| (FormKind::Symmetric, p)),
        _ => None,
    }
}

/// Depth of the component inside its own block algebra, computed from the
/// matrix model.
pub fn component_matrix_depth(c: NormalFormComponent) -> Result<i64, Error> {
    let (kind, p) = own_model(c).ok_or_else(|| {
        Error::ShapeMismatch(format!("component {c} has no classical matrix model"))
    })?;
    let asm = assemble(kind, canonical_blocks(kind, &p)?);
    ad_depth(&asm.space, &asm.h)
}

/// Run the full certificate on one partition.
pub fn verify_normal_form(
    algebra: &ClassicalAlgebra,
    p: &Partition,
) -> Result<VerifyReport, Error> {
    let real = realize_normal_form(algebra, p)?;
    let zero_orbit = real.components.is_empty();

    let mut members = true;
    for c in &real.components {
        members &= real.space.contains(&c.matrix)?;
    }

    let mut commute = true;
    for i in 0..real.components.len() {
        for j in i + 1..real.components.len() {
            commute &= real.components[i]
                .matrix
                .commutes_with(&real.components[j].matrix)?;
        }
    }

    let mut sum = ExactMatrix::zero(real.space.dimension());
    for c in &real.components {
        sum = sum.add(&c.matrix)?;
    }
    let jordan_ok = if zero_orbit {
        p.is_zero_orbit()
    } else {
        members &= real.space.contains(&sum)?;
        jordan_type(&sum)? == *p
    };

    let (depth_ok, comp_depths_ok) = if zero_orbit {
        (true, true)
    } else {
        let reduced = classical::reduced_depth(algebra, p)?;
        let max_intr = real
            .components
            .iter()
            .map(|c| c.component.intrinsic_depth())
            .max()
            .unwrap();
        let mut comp_ok = true;
        let mut cache: BTreeMap<NormalFormComponent, i64> = BTreeMap::new();
        for c in &real.components {
            let d = match cache.get(&c.component) {
                Some(&d) => d,
                None => {
                    let d = component_matrix_depth(c.component)?;
                    cache.insert(c.component, d);
                    d
                }
            };
            comp_ok &= d == c.component.intrinsic_depth();
        }
        (max_intr == reduced, comp_ok)
    };

    Ok(VerifyReport {
        partition: p.clone(),
        zero_orbit,
        members_of_algebra: members,
        components_commute: commute,
        jordan_type_matches: jordan_ok,
        max_depth_equals_reduced_depth: depth_ok,
        component_depths_match: comp_depths_ok,
    })
}

/// Depth of the orbit measured entirely on the matrix side: build the
/// canonical nilpotent with its triple and measure `ad h` on the explicit
/// algebra basis.
pub fn oracle_depth(algebra: &ClassicalAlgebra, p: &Partition) -> Result<i64, Error> {
    classical::validate(algebra, p)?;
    let kind = FormKind::of(algebra.series());
    let asm = assemble(kind, canonical_blocks(kind, p)?);
    ad_depth(&asm.space, &asm.h)
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
    fn jordan_of_blocks() {
        let a = alg(ClassicalSeries::Sl, 5);
        let p = part("3,2");
        let (space, f) = nilpotent_from_partition(&a, &p).unwrap();
        assert!(space.contains(&f).unwrap());
        assert_eq!(jordan_type(&f).unwrap(), p);
        // zero matrix: all parts 1
        assert_eq!(jordan_type(&ExactMatrix::zero(4)).unwrap(), part("1^4"));
        // non-nilpotent input
        assert!(matches!(
            jordan_type(&ExactMatrix::identity(3)),
            Err(Error::NotNilpotent)
        ));
    }

    #[test]
    fn sp_and_so_membership() {
        let a = alg(ClassicalSeries::Sp, 6);
        let p = part("3,3");
        let (space, f) = nilpotent_from_partition(&a, &p).unwrap();
        assert!(space.contains(&f).unwrap());
        assert_eq!(jordan_type(&f).unwrap(), p);

        let a = alg(ClassicalSeries::So, 7);
        let p = part("3,2,2");
        let (space, f) = nilpotent_from_partition(&a, &p).unwrap();
        assert!(space.contains(&f).unwrap());
        assert_eq!(jordan_type(&f).unwrap(), p);
    }

    #[test]
    fn triples_and_depths() {
        // J_2 in sl_2: h = diag(1,-1)
        let a = alg(ClassicalSeries::Sl, 2);
        let (space, f) = nilpotent_from_partition(&a, &part("2")).unwrap();
        let (e, h, _) = sl2_complete_matrix(&f, &space).unwrap();
        assert_eq!(h, {
            let mut m = ExactMatrix::zero(2);
            m.set_int(0, 0, 1);
            m.set_int(1, 1, -1);
            m
        });
        assert!(space.contains(&e).unwrap());

        // so_9, (9): B_4, ad-depth 14
        let a = alg(ClassicalSeries::So, 9);
        let (space, f) = nilpotent_from_partition(&a, &part("9")).unwrap();
        let (_, h, _) = sl2_complete_matrix(&f, &space).unwrap();
        assert_eq!(ad_depth(&space, &h).unwrap(), 14);

        // sp_4, (4): 2*4 - 2 = 6
        assert_eq!(
            oracle_depth(&alg(ClassicalSeries::Sp, 4), &part("4")).unwrap(),
            6
        );
        // sl_6, (3,2,1) -> 4; so_7, (3,2,2) -> 3
        assert_eq!(
            oracle_depth(&alg(ClassicalSeries::Sl, 6), &part("3,2,1")).unwrap(),
            4
        );
        assert_eq!(
            oracle_depth(&alg(ClassicalSeries::So, 7), &part("3,2,2")).unwrap(),
            3
        );
    }

    #[test]
    fn ad_depth_rejects_bad_h() {
        let a = alg(ClassicalSeries::Sl, 3);
        let (space, f) = nilpotent_from_partition(&a, &part("3")).unwrap();
        assert!(matches!(ad_depth(&space, &f), Err(Error::NonDiagonalH)));
    }

    #[test]
    fn unstructured_input_rejected() {
        let a = alg(ClassicalSeries::Sl, 4);
        let (space, _) = nilpotent_from_partition(&a, &part("2,2")).unwrap();
        // a conjugated nilpotent is not in canonical block form
        let mut m = ExactMatrix::zero(4);
        m.set_int(0, 1, 1);
        m.set_int(2, 3, 1); // superdiagonal instead of subdiagonal blocks
        assert!(sl2_complete_matrix(&m, &space).is_err());
    }

    #[test]
    fn jordan_type_is_conjugation_invariant() {
        // random-ish unimodular conjugation of J_4 + J_4 + J_1
        let a = alg(ClassicalSeries::Sl, 9);
        let p = part("4,4,1");
        let (_, f) = nilpotent_from_partition(&a, &p).unwrap();
        let n = 9;
        let mut t = ExactMatrix::identity(n);
        let mut tinv = ExactMatrix::identity(n);
        // apply elementary ops E_{ij}(c): t -> E t, tinv -> tinv E^{-1}
        let ops = [
            (0usize, 3usize, 2i64),
            (5, 1, -1),
            (7, 2, 3),
            (8, 0, 1),
            (2, 6, -2),
        ];
        for &(i, j, c) in &ops {
            let mut e = ExactMatrix::identity(n);
            e.set_int(i, j, c);
            let mut einv = ExactMatrix::identity(n);
            einv.set_int(i, j, -c);
            t = e.mul(&t).unwrap();
            tinv = tinv.mul(&einv).unwrap();
        }
        assert_eq!(t.mul(&tinv).unwrap(), ExactMatrix::identity(n));
        let conj = t.mul(&f).unwrap().mul(&tinv).unwrap();
        assert_eq!(jordan_type(&conj).unwrap(), p);
    }

    #[test]
    fn realize_small_normal_forms() {
        // sl_5 (3,2): two commuting blocks summing back to the partition
        let a = alg(ClassicalSeries::Sl, 5);
        let r = realize_normal_form(&a, &part("3,2")).unwrap();
        assert_eq!(r.components.len(), 2);
        let report = verify_normal_form(&a, &part("3,2")).unwrap();
        assert!(report.all_ok(), "{report:?}");

        // sp_8 (3,3,2)
        let report = verify_normal_form(&alg(ClassicalSeries::Sp, 8), &part("3,3,2")).unwrap();
        assert!(report.all_ok(), "{report:?}");

        // so_12 (5,3,2,2): D_4(a_1) block + C_1 block
        let report = verify_normal_form(&alg(ClassicalSeries::So, 12), &part("5,3,2,2")).unwrap();
        assert!(report.all_ok(), "{report:?}");

        // so_13 (5,4,4): nilpotent type, components C_2 + B_2 at depth 6 = d-1
        let report = verify_normal_form(&alg(ClassicalSeries::So, 13), &part("5,4,4")).unwrap();
        assert!(report.all_ok(), "{report:?}");

        // (3,1) box and bare (3)
        let report = verify_normal_form(&alg(ClassicalSeries::So, 8), &part("3,2,2,1")).unwrap();
        assert!(report.all_ok(), "{report:?}");
        let report = verify_normal_form(&alg(ClassicalSeries::So, 7), &part("3,2,2")).unwrap();
        assert!(report.all_ok(), "{report:?}");

        // G_2 block from (7,1)
        let report = verify_normal_form(&alg(ClassicalSeries::So, 8), &part("7,1")).unwrap();
        assert!(report.all_ok(), "{report:?}");
    }

    /// Randomized round trip partition -> block nilpotent -> rank sequence,
    /// up to N = 40.
    #[test]
    fn jordan_round_trip_randomized() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut done = 0usize;
        while done < 60 {
            let n = 2 + (next() % 39) as usize;
            let series = match next() % 3 {
                0 => ClassicalSeries::Sl,
                1 => ClassicalSeries::Sp,
                _ => ClassicalSeries::So,
            };
            let Ok(algebra) = ClassicalAlgebra::new(series, n) else {
                continue;
            };
            // random parts, then keep only series-valid draws
            let mut parts = Vec::new();
            let mut rem = n;
            while rem > 0 {
                let p = 1 + (next() % rem as u64) as usize;
                parts.push(p);
                rem -= p;
            }
            let p = Partition::from_parts(&parts).unwrap();
            if classical::validate(&algebra, &p).is_err() {
                continue;
            }
            let (space, f) = nilpotent_from_partition(&algebra, &p).unwrap();
            assert!(space.contains(&f).unwrap(), "{algebra} {p}");
            assert_eq!(jordan_type(&f).unwrap(), p, "{algebra} {p}");
            done += 1;
        }
    }

    #[test]
    fn component_models_have_table_depths() {
        let cases = [
            (NormalFormComponent::A(3), 12),
            (NormalFormComponent::C(4), 14),
            (NormalFormComponent::B(2), 6),
            (NormalFormComponent::G2, 10),
            (NormalFormComponent::D(1), 6),
            (NormalFormComponent::D(2), 10),
        ];
        for (c, d) in cases {
            assert_eq!(component_matrix_depth(c).unwrap(), d, "{c}");
            assert_eq!(c.intrinsic_depth(), d, "{c}");
        }
    }
}
