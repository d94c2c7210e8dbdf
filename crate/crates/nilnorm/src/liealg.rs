//! Exact Chevalley-basis model of the simple Lie algebras.
//!
//! The basis is `{e_b, f_b : b positive}` together with the simple coroots
//! `h_1 .. h_r`, and all structure constants are integers. Signs are fixed
//! deterministically: positive roots are ordered by (height, lex); for every
//! non-simple positive root the *extraspecial* pair (the decomposition with
//! the smallest first summand) gets a positive constant, and every other
//! constant follows from the standard two-, three- and four-root identities.
//! Everything downstream (sl2 completion, gradings, depths, Dynkin labels)
//! is sign-convention independent.
//!
//! All coefficients live in exact rational arithmetic; there is no floating
//! point in this module.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rootdata::{build_root_system, int_part, RootSystem, SimpleType};

/// A simple Lie algebra with computable exact brackets.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    /// `N_{a,b}` for special pairs, keyed by (index of a, index of b) with
    /// a preceding b in root order.
    special: BTreeMap<(usize, usize), i64>,
    /// Expansion of each positive coroot in the simple coroots.
    coroots: Vec<Vec<i64>>,
}

/// Sparse element: basis index -> rational coefficient. Basis layout:
/// `0..P` are `e_b`, `P..2P` are `f_b`, `2P..2P+r` are `h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    stype: SimpleType,
    terms: BTreeMap<usize, BigRational>,
}

/// An exact sl2 triple `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
#[derive(Debug, Clone)]
pub struct Sl2Triple {
    pub e: AlgebraElement,
    pub h: AlgebraElement,
    pub f: AlgebraElement,
}

/// The `ad h` eigenspace decomposition of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    /// Dimension of each eigenspace, keyed by the (integer) eigenvalue.
    pub eigen_dims: BTreeMap<i64, usize>,
    /// Largest eigenvalue with a nonzero eigenspace.
    pub depth: i64,
}

impl GradedDecomposition {
    pub fn dim_at(&self, j: i64) -> usize {
        self.eigen_dims.get(&j).copied().unwrap_or(0)
    }

    /// `dim g_d` at the depth.
    pub fn dim_top(&self) -> usize {
        self.dim_at(self.depth)
    }
}

/// Build the Chevalley model of `stype` (rank <= 8).
pub fn build_algebra(stype: SimpleType) -> Result<ChevalleyAlgebra, Error> {
    let roots = build_root_system(stype)?;
    let pos = roots.positive_roots();
    let p = pos.len();

    // coroot expansions: h_b = sum_i (2 k_i d_i / (b,b)) h_i
    let mut coroots = Vec::with_capacity(p);
    for b in pos {
        let len = roots.length_sq(b.coeffs());
        let cs: Vec<i64> = b
            .coeffs()
            .iter()
            .zip(roots.symmetrizer())
            .map(|(&k, &d)| {
                let num = 2 * k * d;
                debug_assert_eq!(num % len, 0, "coroot coefficients are integers");
                num / len
            })
            .collect();
        coroots.push(cs);
    }

    let mut algebra = ChevalleyAlgebra {
        roots,
        special: BTreeMap::new(),
        coroots,
    };
    algebra.fill_structure_constants()?;
    Ok(algebra)
}

impl ChevalleyAlgebra {
    pub fn simple_type(&self) -> SimpleType {
        self.roots.simple_type()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dimension(&self) -> usize {
        self.roots.algebra_dimension()
    }

    fn num_pos(&self) -> usize {
        self.roots.num_positive_roots()
    }

    /// Fill the special-pair table in increasing root order.
    fn fill_structure_constants(&mut self) -> Result<(), Error> {
        let p = self.num_pos();
        for g in 0..p {
            let gamma = self.roots.positive_roots()[g].coeffs().to_vec();
            if gamma.iter().sum::<i64>() < 2 {
                continue;
            }
            // all special pairs (a, b), a < b in root order, summing to gamma
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for a in 0..g {
                let alpha = self.roots.positive_roots()[a].coeffs();
                let rest: Vec<i64> = gamma.iter().zip(alpha).map(|(x, y)| x - y).collect();
                if let Some(b) = self.roots.index_of(&rest) {
                    if b > a {
                        pairs.push((a, b));
                    }
                }
            }
            debug_assert!(!pairs.is_empty(), "non-simple root must decompose");
            let (es_a, es_b) = pairs[0]; // minimal first summand: extraspecial
            let p_str = self.string_down_idx(es_b, es_a);
            self.special.insert((es_a, es_b), p_str + 1);

            for &(a, b) in pairs.iter().skip(1) {
                let n = self.special_from_identities(es_a, es_b, a, b)?;
                let p_ab = self.string_down_idx(b, a);
                if n.abs() != p_ab + 1 {
                    return Err(Error::InadmissibleType(format!(
                        "structure constant magnitude check failed at pair ({a},{b})"
                    )));
                }
                self.special.insert((a, b), n);
            }
        }
        Ok(())
    }

    fn string_down_idx(&self, beta: usize, alpha: usize) -> i64 {
        let b = self.roots.positive_roots()[beta].coeffs();
        let a = self.roots.positive_roots()[alpha].coeffs();
        self.roots.string_down(b, a)
    }

    /// Derive the constant of a non-extraspecial special pair from the
    /// extraspecial one via the four-root identity
    /// `sum_cyc N_{x,y} N_{z,w} / (x+y, x+y) = 0` applied to
    /// `(eps, eta, -alpha, -beta)`.
    fn special_from_identities(
        &self,
        es_a: usize,
        es_b: usize,
        a: usize,
        b: usize,
    ) -> Result<i64, Error> {
        let eps = self.roots.positive_roots()[es_a].coeffs().to_vec();
        let eta = self.roots.positive_roots()[es_b].coeffs().to_vec();
        let alpha = self.roots.positive_roots()[a].coeffs().to_vec();
        let beta = self.roots.positive_roots()[b].coeffs().to_vec();
        let gamma: Vec<i64> = eps.iter().zip(&eta).map(|(x, y)| x + y).collect();
        let neg_alpha: Vec<i64> = alpha.iter().map(|&k| -k).collect();
        let neg_beta: Vec<i64> = beta.iter().map(|&k| -k).collect();

        let mut total = Rational64::zero();
        // term with (eta, -alpha): present when eta - alpha is a root
        let em_a: Vec<i64> = eta.iter().zip(&alpha).map(|(x, y)| x - y).collect();
        if self.roots.is_root(&em_a) {
            let n1 = self.n_any(&eta, &neg_alpha);
            let n2 = self.n_any(&eps, &neg_beta);
            total += Rational64::new(n1 * n2, self.roots.length_sq(&em_a));
        }
        // term with (eps, -alpha)
        let sm_a: Vec<i64> = eps.iter().zip(&alpha).map(|(x, y)| x - y).collect();
        if self.roots.is_root(&sm_a) {
            let n1 = self.n_any(&neg_alpha, &eps);
            let n2 = self.n_any(&eta, &neg_beta);
            total += Rational64::new(n1 * n2, self.roots.length_sq(&sm_a));
        }
        let n_es = self.special[&(es_a, es_b)];
        let value = total * Rational64::new(self.roots.length_sq(&gamma), n_es);
        if !value.is_integer() || value.is_zero() {
            return Err(Error::InadmissibleType(
                "four-root identity produced a non-integer constant".to_string(),
            ));
        }
        Ok(value.to_integer())
    }

    /// `N_{x,y}` for arbitrary roots `x`, `y` with `x + y` a root.
    fn n_any(&self, x: &[i64], y: &[i64]) -> i64 {
        let x_pos = self.roots.is_positive_root(x);
        let y_pos = self.roots.is_positive_root(y);
        match (x_pos, y_pos) {
            (true, true) => {
                let a = self.roots.index_of(x).unwrap();
                let b = self.roots.index_of(y).unwrap();
                if a < b {
                    self.special[&(a, b)]
                } else {
                    -self.special[&(b, a)]
                }
            }
            (false, false) => {
                let nx: Vec<i64> = x.iter().map(|&k| -k).collect();
                let ny: Vec<i64> = y.iter().map(|&k| -k).collect();
                -self.n_any(&nx, &ny)
            }
            (true, false) => {
                // x = alpha > 0, y = -beta' with beta' > 0
                let alpha = x;
                let betap: Vec<i64> = y.iter().map(|&k| -k).collect();
                let mu: Vec<i64> = alpha.iter().zip(&betap).map(|(p, q)| p - q).collect();
                if self.roots.is_positive_root(&mu) {
                    // N_{a,-b} = (mu,mu) N_{mu,b} / (a,a)
                    let v = Rational64::new(
                        self.roots.length_sq(&mu) * self.n_any(&mu, &betap),
                        self.roots.length_sq(alpha),
                    );
                    debug_assert!(v.is_integer());
                    v.to_integer()
                } else {
                    let nu: Vec<i64> = mu.iter().map(|&k| -k).collect();
                    debug_assert!(self.roots.is_positive_root(&nu));
                    // N_{a,-b} = (nu,nu) N_{nu,a} / (b,b)
                    let v = Rational64::new(
                        self.roots.length_sq(&nu) * self.n_any(&nu, alpha),
                        self.roots.length_sq(&betap),
                    );
                    debug_assert!(v.is_integer());
                    v.to_integer()
                }
            }
            (false, true) => -self.n_any(y, x),
        }
    }

    // ----- basis elements -----

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            stype: self.simple_type(),
            terms: BTreeMap::new(),
        }
    }

    /// `e_b` for the `idx`-th positive root.
    pub fn e(&self, idx: usize) -> AlgebraElement {
        self.basis(idx)
    }

    /// `f_b` for the `idx`-th positive root.
    pub fn f(&self, idx: usize) -> AlgebraElement {
        self.basis(self.num_pos() + idx)
    }

    /// `h_i`, the `i`-th simple coroot.
    pub fn h(&self, i: usize) -> AlgebraElement {
        self.basis(2 * self.num_pos() + i)
    }

    /// The `k`-th basis vector in the `e / f / h` layout.
    pub fn basis(&self, k: usize) -> AlgebraElement {
        debug_assert!(k < self.dimension());
        let mut terms = BTreeMap::new();
        terms.insert(k, BigRational::one());
        AlgebraElement {
            stype: self.simple_type(),
            terms,
        }
    }

    /// Bracket of two basis vectors as an integer combination.
    fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let p = self.num_pos();
        if a == b {
            return Vec::new();
        }
        if a > b {
            return self
                .bracket_basis(b, a)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect();
        }
        // now a < b; layout: e's, then f's, then h's
        if b < p {
            // [e_a, e_b]
            let ra = self.roots.positive_roots()[a].coeffs();
            let rb = self.roots.positive_roots()[b].coeffs();
            let sum: Vec<i64> = ra.iter().zip(rb).map(|(x, y)| x + y).collect();
            return match self.roots.index_of(&sum) {
                Some(s) => vec![(s, self.n_any(ra, rb))],
                None => Vec::new(),
            };
        }
        if a < p && b < 2 * p {
            // [e_a, f_{b-p}]
            let ib = b - p;
            let ra = self.roots.positive_roots()[a].coeffs();
            let rb = self.roots.positive_roots()[ib].coeffs();
            if a == ib {
                return self.coroots[a]
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (2 * p + i, c))
                    .collect();
            }
            let diff: Vec<i64> = ra.iter().zip(rb).map(|(x, y)| x - y).collect();
            let neg: Vec<i64> = diff.iter().map(|&k| -k).collect();
            let nrb: Vec<i64> = rb.iter().map(|&k| -k).collect();
            return if let Some(s) = self.roots.index_of(&diff) {
                vec![(s, self.n_any(ra, &nrb))]
            } else if let Some(s) = self.roots.index_of(&neg) {
                vec![(p + s, self.n_any(ra, &nrb))]
            } else {
                Vec::new()
            };
        }
        if a < p {
            // [e_a, h_i] = -a(h_i) e_a
            let i = b - 2 * p;
            let ra = self.roots.positive_roots()[a].coeffs();
            let v = self.roots.pairing_with_coroot(ra, i);
            return if v == 0 { Vec::new() } else { vec![(a, -v)] };
        }
        if b < 2 * p {
            // [f_{a-p}, f_{b-p}]
            let ra = self.roots.positive_roots()[a - p].coeffs();
            let rb = self.roots.positive_roots()[b - p].coeffs();
            let sum: Vec<i64> = ra.iter().zip(rb).map(|(x, y)| x + y).collect();
            return match self.roots.index_of(&sum) {
                Some(s) => vec![(p + s, -self.n_any(ra, rb))],
                None => Vec::new(),
            };
        }
        if a < 2 * p {
            // [f_{a-p}, h_i] = a(h_i) f_{a-p}
            let i = b - 2 * p;
            let ra = self.roots.positive_roots()[a - p].coeffs();
            let v = self.roots.pairing_with_coroot(ra, i);
            return if v == 0 { Vec::new() } else { vec![(a, v)] };
        }
        Vec::new() // [h_i, h_j] = 0
    }

    /// Bilinear bracket of two sparse elements.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, Error> {
        if x.stype != self.simple_type() || y.stype != self.simple_type() {
            return Err(Error::MismatchedAlgebras);
        }
        let mut out: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&a, ca) in &x.terms {
            for (&b, cb) in &y.terms {
                let cab = ca * cb;
                for (k, n) in self.bracket_basis(a, b) {
                    let add = &cab * BigRational::from(BigInt::from(n));
                    let entry = out.entry(k).or_insert_with(BigRational::zero);
                    *entry += add;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(AlgebraElement {
            stype: self.simple_type(),
            terms: out,
        })
    }

    /// Build `sum_k coeff_k f_{root_k}` from (positive-root index,
    /// coefficient) pairs.
    pub fn neg_root_combination(&self, support: &[(usize, i64)]) -> AlgebraElement {
        let mut terms: BTreeMap<usize, BigRational> = BTreeMap::new();
        let p = self.num_pos();
        for &(idx, c) in support {
            if c != 0 {
                let entry = terms.entry(p + idx).or_insert_with(BigRational::zero);
                *entry += BigRational::from(BigInt::from(c));
            }
        }
        terms.retain(|_, v| !v.is_zero());
        AlgebraElement {
            stype: self.simple_type(),
            terms,
        }
    }

    /// Complete a nilpotent `f` supported on negative root vectors to an sl2
    /// triple, in exact rationals.
    ///
    /// The neutral element of any triple through `f` has Cartan part in the
    /// span of the support coroots, so first `b(h) = 2` is solved there for
    /// every support root `b`. When that pins `h` uniquely, `[e, f] = h` is
    /// solved for `e` over the degree-2 root vectors of `ad h`. When the
    /// support coroots are dependent (the linearly dependent catalogue rows)
    /// the combined system is solved over the whole algebra instead and the
    /// degree-2 part of the solution is extracted.
    pub fn sl2_complete(&self, f: &AlgebraElement) -> Result<Sl2Triple, Error> {
        if f.stype != self.simple_type() {
            return Err(Error::MismatchedAlgebras);
        }
        if f.terms.is_empty() {
            return Err(Error::Sl2OfZero);
        }
        let p = self.num_pos();
        let mut support: Vec<(usize, BigRational)> = Vec::new();
        for (&k, c) in &f.terms {
            if k < p || k >= 2 * p {
                return Err(Error::Sl2Inconsistent(
                    "element is not a sum of negative root vectors".to_string(),
                ));
            }
            support.push((k - p, c.clone()));
        }
        let s = support.len();

        // phase A: h = sum_i c_i a_i h_{b_i} with b_q(h) = 2 for all q
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for &(bq, _) in &support {
            let rq = self.roots.positive_roots()[bq].coeffs();
            let mut row = vec![BigRational::zero(); s];
            for (i, &(bi, ref ai)) in support.iter().enumerate() {
                let v: i64 = self.coroots[bi]
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| c * self.roots.pairing_with_coroot(rq, k))
                    .sum();
                row[i] = ai * BigRational::from(BigInt::from(v));
            }
            rows.push(row);
            rhs.push(BigRational::from(BigInt::from(2)));
        }
        let (sol, pivots) = solve_linear_with_rank(&rows, &rhs).ok_or_else(|| {
            Error::Sl2Inconsistent(format!("support of {s} negative root vectors"))
        })?;

        if pivots == s {
            // h is pinned; find e in the degree-2 subspace of ad h
            let mut h = self.zero();
            for (i, &(bi, ref ai)) in support.iter().enumerate() {
                let c = &sol[i] * ai;
                if c.is_zero() {
                    continue;
                }
                for (k, &cc) in self.coroots[bi].iter().enumerate() {
                    if cc != 0 {
                        let entry = h.terms.entry(2 * p + k).or_insert_with(BigRational::zero);
                        *entry += &c * BigRational::from(BigInt::from(cc));
                    }
                }
            }
            h.terms.retain(|_, v| !v.is_zero());
            self.sl2_solve_e(f, &h)
        } else {
            // dependent support: solve [x, f] = (pure Cartan) with
            // b((x,f)-Cartan) = 2 over the whole algebra, then take the
            // degree-2 part of x
            self.sl2_solve_full(f, &support)
        }
    }

    /// Root evaluation `g(h)` for `h` in the Cartan, as an exact rational.
    fn eval_root(&self, h: &AlgebraElement, root: &[i64]) -> BigRational {
        let p = self.num_pos();
        let mut v = BigRational::zero();
        for (&k, c) in &h.terms {
            if k >= 2 * p {
                let i = k - 2 * p;
                v += c * BigRational::from(BigInt::from(self.roots.pairing_with_coroot(root, i)));
            }
        }
        v
    }

    /// Solve `[e, f] = h` for `e` supported on the root vectors of
    /// `ad h`-eigenvalue 2, and verify the triple.
    fn sl2_solve_e(&self, f: &AlgebraElement, h: &AlgebraElement) -> Result<Sl2Triple, Error> {
        let p = self.num_pos();
        let two = BigRational::from(BigInt::from(2));
        // candidate support: all root vectors of eigenvalue +2
        let mut cand: Vec<usize> = Vec::new();
        for (idx, b) in self.roots.positive_roots().iter().enumerate() {
            let v = self.eval_root(h, b.coeffs());
            if v == two {
                cand.push(idx); // e_b
            } else if v == -two.clone() {
                cand.push(p + idx); // f_b has eigenvalue -b(h)
            }
        }
        // equations: [x, f] - h = 0, componentwise over the reachable basis
        let mut eq_rows: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
        for (col, &basis_idx) in cand.iter().enumerate() {
            for (&fk, fc) in &f.terms {
                for (target, n) in self.bracket_basis(basis_idx, fk) {
                    let row = eq_rows
                        .entry(target)
                        .or_insert_with(|| vec![BigRational::zero(); cand.len()]);
                    row[col] += fc * BigRational::from(BigInt::from(n));
                }
            }
        }
        for &hk in h.terms.keys() {
            eq_rows
                .entry(hk)
                .or_insert_with(|| vec![BigRational::zero(); cand.len()]);
        }
        let mut rows = Vec::with_capacity(eq_rows.len());
        let mut rhs = Vec::with_capacity(eq_rows.len());
        for (target, row) in eq_rows {
            rows.push(row);
            rhs.push(
                h.terms
                    .get(&target)
                    .cloned()
                    .unwrap_or_else(BigRational::zero),
            );
        }
        let sol = solve_linear(&rows, &rhs)
            .ok_or_else(|| Error::Sl2Inconsistent("no e in the degree-2 subspace".to_string()))?;
        let mut e = self.zero();
        for (col, &basis_idx) in cand.iter().enumerate() {
            if !sol[col].is_zero() {
                e.terms.insert(basis_idx, sol[col].clone());
            }
        }
        self.verified_triple(e, h.clone(), f)
    }

    /// Dependent-support fallback: unknown `x` over every root vector;
    /// require `[x, f]` to be pure Cartan with value 2 on the support.
    fn sl2_solve_full(
        &self,
        f: &AlgebraElement,
        support: &[(usize, BigRational)],
    ) -> Result<Sl2Triple, Error> {
        let p = self.num_pos();
        let n_unknowns = 2 * p;
        // row per target basis index: root targets must vanish; Cartan
        // targets define h and feed the support equations
        let mut root_rows: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
        let mut cartan_rows: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
        for col in 0..n_unknowns {
            for (&fk, fc) in &f.terms {
                for (target, n) in self.bracket_basis(col, fk) {
                    let map = if target < 2 * p {
                        &mut root_rows
                    } else {
                        &mut cartan_rows
                    };
                    let row = map
                        .entry(target)
                        .or_insert_with(|| vec![BigRational::zero(); n_unknowns]);
                    row[col] += fc * BigRational::from(BigInt::from(n));
                }
            }
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for (_, row) in root_rows {
            rows.push(row);
            rhs.push(BigRational::zero());
        }
        // support equations: b_q(H(x)) = 2, with H(x) read off cartan_rows
        for &(bq, _) in support {
            let rq = self.roots.positive_roots()[bq].coeffs().to_vec();
            let mut row = vec![BigRational::zero(); n_unknowns];
            for (target, crow) in &cartan_rows {
                let i = target - 2 * p;
                let w = BigRational::from(BigInt::from(self.roots.pairing_with_coroot(&rq, i)));
                if w.is_zero() {
                    continue;
                }
                for (col, v) in crow.iter().enumerate() {
                    if !v.is_zero() {
                        row[col] += v * &w;
                    }
                }
            }
            rows.push(row);
            rhs.push(BigRational::from(BigInt::from(2)));
        }
        let sol = solve_linear(&rows, &rhs).ok_or_else(|| {
            Error::Sl2Inconsistent("dependent support admits no triple".to_string())
        })?;
        // h = Cartan part of [x, f]
        let mut x = self.zero();
        for (col, v) in sol.iter().enumerate() {
            if !v.is_zero() {
                x.terms.insert(col, v.clone());
            }
        }
        let bracket = self.bracket(&x, f)?;
        let mut h = self.zero();
        for (&k, c) in &bracket.terms {
            if k >= 2 * p {
                h.terms.insert(k, c.clone());
            }
        }
        // degree-2 part of x with respect to h
        let two = BigRational::from(BigInt::from(2));
        let mut e = self.zero();
        for (&k, c) in &x.terms {
            if k >= 2 * p {
                continue;
            }
            let (root_idx, sign) = if k < p { (k, 1) } else { (k - p, -1) };
            let b = self.roots.positive_roots()[root_idx].coeffs();
            let v = self.eval_root(&h, b) * BigRational::from(BigInt::from(sign));
            if v == two {
                e.terms.insert(k, c.clone());
            }
        }
        self.verified_triple(e, h, f)
    }

    /// Exact verification of the bracket relations before handing a triple
    /// out.
    fn verified_triple(
        &self,
        e: AlgebraElement,
        h: AlgebraElement,
        f: &AlgebraElement,
    ) -> Result<Sl2Triple, Error> {
        let two = BigRational::from(BigInt::from(2));
        let ef = self.bracket(&e, f)?;
        let he = self.bracket(&h, &e)?;
        let hf = self.bracket(&h, f)?;
        if ef != h || he != e.scale(&two) || hf != f.scale(&-two.clone()) {
            return Err(Error::Sl2Inconsistent(
                "bracket relations failed".to_string(),
            ));
        }
        Ok(Sl2Triple { e, h, f: f.clone() })
    }

    /// Eigenspace decomposition of `ad h` for `h` in the Cartan with integer
    /// eigenvalues.
    pub fn grading(&self, h: &AlgebraElement) -> Result<GradedDecomposition, Error> {
        if h.stype != self.simple_type() {
            return Err(Error::MismatchedAlgebras);
        }
        let p = self.num_pos();
        if h.terms.keys().any(|&k| k < 2 * p) {
            return Err(Error::NonIntegerEigenvalue(
                "h is not in the Cartan".to_string(),
            ));
        }
        let hc = self.cartan_coordinates(h);
        let mut eigen_dims: BTreeMap<i64, usize> = BTreeMap::new();
        *eigen_dims.entry(0).or_insert(0) += self.rank();
        let mut depth = 0i64;
        for b in self.roots.positive_roots() {
            let mut v = BigRational::zero();
            for (i, c) in hc.iter().enumerate() {
                v += c * BigRational::from(BigInt::from(
                    self.roots.pairing_with_coroot(b.coeffs(), i),
                ));
            }
            if !v.is_integer() {
                return Err(Error::NonIntegerEigenvalue(format!("{v}")));
            }
            let v = int_part(&v);
            *eigen_dims.entry(v).or_insert(0) += 1;
            *eigen_dims.entry(-v).or_insert(0) += 1;
            depth = depth.max(v.abs());
        }
        if depth == 0 {
            return Err(Error::ZeroOrbit("ad h has the single eigenvalue 0"));
        }
        Ok(GradedDecomposition { eigen_dims, depth })
    }

    /// Cartan coordinates of an element supported on the `h_i`.
    fn cartan_coordinates(&self, h: &AlgebraElement) -> Vec<BigRational> {
        let p = self.num_pos();
        let mut out = vec![BigRational::zero(); self.rank()];
        for (&k, c) in &h.terms {
            if k >= 2 * p {
                out[k - 2 * p] = c.clone();
            }
        }
        out
    }

    /// Dynkin labels of the triple through `h`: the dominant representative
    /// of `(a_1(h), ..., a_r(h))`, which must land in `{0,1,2}`.
    pub fn dynkin_labels(&self, h: &AlgebraElement) -> Result<Vec<i64>, Error> {
        if h.stype != self.simple_type() {
            return Err(Error::MismatchedAlgebras);
        }
        let hc = self.cartan_coordinates(h);
        let r = self.rank();
        let mut weight = vec![BigRational::zero(); r];
        for (i, w) in weight.iter_mut().enumerate() {
            for (j, c) in hc.iter().enumerate() {
                *w += c * BigRational::from(BigInt::from(self.roots.cartan()[i][j]));
            }
        }
        let (dom, _) = self.roots.to_dominant(&weight);
        let mut labels = Vec::with_capacity(r);
        for q in &dom {
            if !q.is_integer() {
                return Err(Error::LabelOutOfRange(format!("{q}")));
            }
            let v = int_part(q);
            if !(0..=2).contains(&v) {
                return Err(Error::LabelOutOfRange(format!("{v}")));
            }
            labels.push(v);
        }
        Ok(labels)
    }
}

/// A catalogue representative realized in the Chevalley model: the element,
/// its triple, the grading data, and the coefficient assignment that worked.
#[derive(Debug, Clone)]
pub struct RealizedRepresentative {
    pub element: AlgebraElement,
    pub triple: Sl2Triple,
    pub coefficients: Vec<i64>,
    pub depth: i64,
    pub labels: Vec<i64>,
    pub decomposition: GradedDecomposition,
}

impl ChevalleyAlgebra {
    /// Realize a catalogue representative: build `sum c_k f_(root_k)`, complete
    /// the triple and check the depth against the record.
    ///
    /// The printed coefficients are tried first. When the support roots are
    /// linearly dependent the right signs depend on the basis convention, so
    /// on failure all sign patterns (then small integer coefficients) are
    /// searched until the triple exists with the recorded depth and labels
    /// in `{0,1,2}`.
    pub fn realize_representative(
        &self,
        record: &crate::exceptional::OrbitRecord,
    ) -> Result<RealizedRepresentative, Error> {
        if record.stype != self.simple_type() {
            return Err(Error::MismatchedAlgebras);
        }
        let flat = record.representative.flatten();
        let mut support = Vec::with_capacity(flat.len());
        let mut printed = Vec::with_capacity(flat.len());
        for (coeffs, sign) in &flat {
            let idx = self
                .roots
                .index_of(coeffs)
                .ok_or_else(|| Error::RepresentativeFailed(record.label.clone()))?;
            support.push(idx);
            printed.push(*sign);
        }
        let s = support.len();

        let attempt = |coeffs: &[i64]| -> Option<RealizedRepresentative> {
            let pairs: Vec<(usize, i64)> = support
                .iter()
                .copied()
                .zip(coeffs.iter().copied())
                .collect();
            let element = self.neg_root_combination(&pairs);
            let triple = self.sl2_complete(&element).ok()?;
            let decomposition = self.grading(&triple.h).ok()?;
            let labels = self.dynkin_labels(&triple.h).ok()?;
            (decomposition.depth == record.depth).then(|| RealizedRepresentative {
                element,
                triple,
                coefficients: coeffs.to_vec(),
                depth: decomposition.depth,
                labels,
                decomposition,
            })
        };

        if let Some(r) = attempt(&printed) {
            return Ok(r);
        }
        // sign search
        if s <= 16 {
            for mask in 0u32..(1 << s) {
                let coeffs: Vec<i64> = (0..s)
                    .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                    .collect();
                if coeffs == printed {
                    continue;
                }
                if let Some(r) = attempt(&coeffs) {
                    return Ok(r);
                }
            }
        }
        // small integer coefficients
        if s <= 7 {
            let choices = [1i64, -1, 2, -2];
            let total = 4usize.pow(s as u32);
            for pick in 0..total {
                let mut v = pick;
                let coeffs: Vec<i64> = (0..s)
                    .map(|_| {
                        let c = choices[v % 4];
                        v /= 4;
                        c
                    })
                    .collect();
                if let Some(r) = attempt(&coeffs) {
                    return Ok(r);
                }
            }
        }
        Err(Error::RepresentativeFailed(record.label.clone()))
    }
}

impl AlgebraElement {
    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<usize, BigRational> {
        &self.terms
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        debug_assert_eq!(self.stype, other.stype);
        let mut terms = self.terms.clone();
        for (&k, c) in &other.terms {
            let entry = terms.entry(k).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, v| !v.is_zero());
        AlgebraElement {
            stype: self.stype,
            terms,
        }
    }

    pub fn scale(&self, c: &BigRational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement {
                stype: self.stype,
                terms: BTreeMap::new(),
            };
        }
        AlgebraElement {
            stype: self.stype,
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }
}

/// Particular solution of `rows * x = rhs` by exact Gaussian elimination;
/// free variables are set to zero. `None` when inconsistent.
pub(crate) fn solve_linear(
    rows: &[Vec<BigRational>],
    rhs: &[BigRational],
) -> Option<Vec<BigRational>> {
    solve_linear_with_rank(rows, rhs).map(|(x, _)| x)
}

/// As [`solve_linear`], also reporting the rank (number of pivots).
pub(crate) fn solve_linear_with_rank(
    rows: &[Vec<BigRational>],
    rhs: &[BigRational],
) -> Option<(Vec<BigRational>, usize)> {
    let m = rows.len();
    if m == 0 {
        return Some((Vec::new(), 0));
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut b: Vec<BigRational> = rhs.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(pr) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        b.swap(row, pr);
        let inv = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x /= &inv;
        }
        b[row] /= &inv;
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[row].clone();
                for (x, pv) in a[r].iter_mut().zip(&pivot_row) {
                    let sub = pv * &factor;
                    *x -= sub;
                }
                let sub = &b[row] * &factor;
                b[r] -= sub;
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    // consistency: zero rows must have zero rhs
    if b[row..m].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = b[r].clone();
    }
    Some((x, pivot_cols.len()))
}

#[cfg(test)]
pub(crate) fn big(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}
