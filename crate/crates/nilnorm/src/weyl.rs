//! From nilpotent orbits to Weyl-group conjugacy classes: Kac coordinates of
//! the torsion automorphism attached to an orbit, the class data of
//! irreducible nilpotents (order and characteristic polynomial), and the
//! composite invariants of a normal form under `w_f = prod_j w_{f[j]}`.
//!
//! For classical ambient algebras the characteristic polynomial of `w_f` on
//! the full Cartan is produced by a signed-cycle model of the Weyl group
//! (symmetric group for `sl`, hyperoctahedral for `sp`/`so`): each box of
//! the normal form acts by an explicit product of signed cycles on its own
//! coordinates. For exceptional ambient algebras the embedded product runs
//! through foldings, and no ambient polynomial is produced.

use alloc::vec;
use alloc::vec::Vec;

use crate::classical::{
    self, BoxBlock, ClassicalAlgebra, ClassicalSeries, NormalForm, NormalFormComponent, Partition,
};
use crate::error::Error;
use crate::poly::{cyclotomic_factor, expand_factors, IntPoly};
use crate::rootdata::{lcm, marks_of, SimpleFamily, SimpleType};

/// Kac coordinates of the inner automorphism attached to Dynkin labels:
/// `s_0 = 2` and `m = sum_{i=0}^r a_i s_i` with `a_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacData {
    pub labels: Vec<i64>,
    pub s0: i64,
    pub modulus: i64,
    pub even: bool,
    /// `m` when the orbit is not even, `m/2` when it is.
    pub order: i64,
    /// For even orbits: `(s_0, s_1, ..., s_r)` with the labels halved and
    /// `s_0 = 1`.
    pub halved: Option<Vec<i64>>,
}

/// Compute the Kac data of a label vector (entries in `{0,1,2}`).
pub fn kac_data(stype: SimpleType, labels: &[i64]) -> Result<KacData, Error> {
    if labels.len() != stype.rank() {
        return Err(Error::LabelOutOfRange(alloc::format!(
            "expected {} labels for {stype}",
            stype.rank()
        )));
    }
    if let Some(&bad) = labels.iter().find(|&&s| !(0..=2).contains(&s)) {
        return Err(Error::LabelOutOfRange(alloc::format!("{bad}")));
    }
    let marks = marks_of(stype);
    let s0 = 2i64;
    let modulus = s0 + labels.iter().zip(&marks).map(|(&s, &a)| s * a).sum::<i64>();
    let even = labels.iter().all(|&s| s == 0 || s == 2);
    let order = if even { modulus / 2 } else { modulus };
    let halved = even.then(|| {
        let mut v = Vec::with_capacity(labels.len() + 1);
        v.push(1);
        v.extend(labels.iter().map(|&s| s / 2));
        v
    });
    Ok(KacData {
        labels: labels.to_vec(),
        s0,
        modulus,
        even,
        order,
        halved,
    })
}

/// Class data of one irreducible nilpotent: its own algebra, canonical
/// Dynkin labels, the order of the attached Weyl class and its
/// characteristic polynomial (as a cyclotomic multiset), plus the dimension
/// of the top graded piece and the centralizer action on it.
#[derive(Debug, Clone)]
pub struct IrreducibleClass {
    pub component: NormalFormComponent,
    pub algebra: SimpleType,
    pub dynkin_labels: Vec<i64>,
    pub order: i64,
    pub charpoly_factors: Vec<(usize, usize)>,
    pub dim_top: usize,
    pub top_action: &'static str,
}

impl IrreducibleClass {
    pub fn charpoly(&self) -> IntPoly {
        expand_factors(&self.charpoly_factors)
    }
}

/// Canonical Dynkin labels (Bourbaki node order) of the irreducible kinds.
pub fn catalogue_labels(c: NormalFormComponent) -> Vec<i64> {
    match c {
        NormalFormComponent::A(k) => vec![2; 2 * k],
        NormalFormComponent::C(k) => vec![2; k],
        NormalFormComponent::B(k) => vec![2; k],
        NormalFormComponent::D(k) => {
            // chain alternates 2,0 starting at node 1; both fork nodes are 2
            let mut v = Vec::with_capacity(2 * k + 2);
            for i in 0..2 * k {
                v.push(if i % 2 == 0 { 2 } else { 0 });
            }
            v.push(2);
            v.push(2);
            v
        }
        NormalFormComponent::G2 => vec![2, 2],
        NormalFormComponent::F4 => vec![2, 2, 2, 2],
        NormalFormComponent::F4A2 => vec![0, 2, 0, 2],
        NormalFormComponent::E6A1 => vec![2, 2, 2, 0, 2, 2],
        NormalFormComponent::E7 => vec![2; 7],
        NormalFormComponent::E7A1 => vec![2, 2, 2, 0, 2, 2, 2],
        NormalFormComponent::E7A5 => vec![0, 0, 0, 2, 0, 0, 2],
        NormalFormComponent::E8 => vec![2; 8],
        NormalFormComponent::E8A1 => vec![2, 2, 2, 0, 2, 2, 2, 2],
        NormalFormComponent::E8A2 => vec![2, 2, 2, 0, 2, 0, 2, 2],
        NormalFormComponent::E8A4 => vec![2, 0, 0, 2, 0, 2, 0, 2],
        NormalFormComponent::E8A5 => vec![2, 0, 0, 2, 0, 0, 2, 0],
        NormalFormComponent::E8A6 => vec![0, 0, 0, 2, 0, 0, 2, 0],
        NormalFormComponent::E8A7 => vec![0, 0, 0, 0, 2, 0, 0, 0],
    }
}

/// The algebra an irreducible kind lives in (`C_1` is `A_1`).
pub fn component_type(c: NormalFormComponent) -> SimpleType {
    let t = |f, r| SimpleType::new(f, r).expect("component types are admissible");
    match c {
        NormalFormComponent::A(k) => t(SimpleFamily::A, 2 * k),
        NormalFormComponent::C(1) => t(SimpleFamily::A, 1),
        NormalFormComponent::C(k) => t(SimpleFamily::C, k),
        NormalFormComponent::B(k) => t(SimpleFamily::B, k),
        NormalFormComponent::D(k) => t(SimpleFamily::D, 2 * k + 2),
        NormalFormComponent::G2 => t(SimpleFamily::G, 2),
        NormalFormComponent::F4 | NormalFormComponent::F4A2 => t(SimpleFamily::F, 4),
        NormalFormComponent::E6A1 => t(SimpleFamily::E, 6),
        NormalFormComponent::E7 | NormalFormComponent::E7A1 | NormalFormComponent::E7A5 => {
            t(SimpleFamily::E, 7)
        }
        _ => t(SimpleFamily::E, 8),
    }
}

/// Order and characteristic polynomial of the Weyl class of one irreducible
/// kind, together with the top graded data.
pub fn irreducible_class(c: NormalFormComponent) -> IrreducibleClass {
    let (order, charpoly_factors, dim_top, top_action): (i64, Vec<(usize, usize)>, usize, &str) =
        match c {
            NormalFormComponent::A(k) => {
                let p = IntPoly::x_pow_minus_one(2 * k + 1)
                    .exact_div(&IntPoly::from_coeffs(&[-1, 1]))
                    .expect("x - 1 divides x^n - 1");
                (
                    2 * k as i64 + 1,
                    cyclotomic_factor(&p).expect("quotient is cyclotomic"),
                    1,
                    "1",
                )
            }
            NormalFormComponent::C(k) | NormalFormComponent::B(k) => {
                let p = IntPoly::x_pow_plus_one(k);
                (
                    2 * k as i64,
                    cyclotomic_factor(&p).expect("x^k + 1 is cyclotomic"),
                    1,
                    "1",
                )
            }
            NormalFormComponent::D(k) => {
                let p = IntPoly::x_pow_plus_one(k + 1);
                let mut f = cyclotomic_factor(&p).expect("x^k + 1 is cyclotomic");
                for entry in &mut f {
                    entry.1 *= 2;
                }
                (2 * k as i64 + 2, f, 2, "1+1")
            }
            NormalFormComponent::G2 => (6, vec![(6, 1)], 1, "1"),
            NormalFormComponent::F4 => (12, vec![(12, 1)], 1, "1"),
            NormalFormComponent::F4A2 => (6, vec![(6, 2)], 2, "sigma_2+1"),
            NormalFormComponent::E6A1 => (9, vec![(9, 1)], 1, "1"),
            NormalFormComponent::E7 => (18, vec![(2, 1), (18, 1)], 1, "1"),
            NormalFormComponent::E7A1 => (14, vec![(2, 1), (14, 1)], 1, "1"),
            NormalFormComponent::E7A5 => (6, vec![(2, 1), (6, 3)], 3, "sigma_3+1"),
            NormalFormComponent::E8 => (30, vec![(30, 1)], 1, "1"),
            NormalFormComponent::E8A1 => (24, vec![(24, 1)], 1, "1"),
            NormalFormComponent::E8A2 => (20, vec![(20, 1)], 1, "1"),
            NormalFormComponent::E8A4 => (15, vec![(15, 1)], 1, "1"),
            NormalFormComponent::E8A5 => (12, vec![(12, 2)], 2, "sigma_2+1"),
            NormalFormComponent::E8A6 => (10, vec![(10, 2)], 2, "sigma_3"),
            NormalFormComponent::E8A7 => (6, vec![(6, 4)], 4, "sigma_5"),
        };
    IrreducibleClass {
        component: c,
        algebra: component_type(c),
        dynkin_labels: catalogue_labels(c),
        order,
        charpoly_factors,
        dim_top,
        top_action,
    }
}

/// All eighteen irreducible kinds with parameterized families instantiated
/// at `k`.
pub fn irreducible_kinds(max_k: usize) -> Vec<NormalFormComponent> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        out.push(NormalFormComponent::A(k));
        out.push(NormalFormComponent::C(k));
        if k >= 2 && k != 3 {
            out.push(NormalFormComponent::B(k));
        }
        out.push(NormalFormComponent::D(k));
    }
    out.extend([
        NormalFormComponent::G2,
        NormalFormComponent::F4,
        NormalFormComponent::F4A2,
        NormalFormComponent::E6A1,
        NormalFormComponent::E7,
        NormalFormComponent::E7A1,
        NormalFormComponent::E7A5,
        NormalFormComponent::E8,
        NormalFormComponent::E8A1,
        NormalFormComponent::E8A2,
        NormalFormComponent::E8A4,
        NormalFormComponent::E8A5,
        NormalFormComponent::E8A6,
        NormalFormComponent::E8A7,
    ]);
    out
}

/// One component occurrence of a class invariant: kind, class order, and
/// the charpoly as a cyclotomic multiset.
pub type ClassComponent = (NormalFormComponent, i64, Vec<(usize, usize)>);

/// Invariants of the Weyl class `w_f = prod_j w_{f[j]}` of a normal form.
#[derive(Debug, Clone)]
pub struct WeylClassInvariant {
    /// One entry per component occurrence: kind, class order, charpoly.
    pub components: Vec<ClassComponent>,
    /// `lcm` of the component orders (1 for the empty form).
    pub total_order: i64,
    /// Characteristic polynomial on the full Cartan of the ambient algebra;
    /// populated for classical ambients only.
    pub ambient_charpoly: Option<IntPoly>,
}

/// Component orders and charpolys plus their lcm; no ambient polynomial.
pub fn composite_invariant(nf: &NormalForm) -> WeylClassInvariant {
    let mut components = Vec::new();
    let mut total = 1i64;
    for c in nf.components() {
        let ic = irreducible_class(c);
        total = lcm(total, ic.order);
        components.push((c, ic.order, ic.charpoly_factors));
    }
    WeylClassInvariant {
        components,
        total_order: total,
        ambient_charpoly: None,
    }
}

/// Signed-cycle factor of one box on its own coordinates of the ambient
/// Cartan: positive `c`-cycles contribute `x^c - 1`, negative ones
/// `x^c + 1`.
fn box_cycle_factor(series: ClassicalSeries, b: &BoxBlock) -> IntPoly {
    match (series, *b) {
        (ClassicalSeries::Sl, BoxBlock::SlPart(n)) => IntPoly::x_pow_minus_one(n),
        (ClassicalSeries::Sl, BoxBlock::SlOnes(k)) => IntPoly::x_pow_minus_one(1).pow(k),
        (ClassicalSeries::Sp, BoxBlock::SpEven(n)) => IntPoly::x_pow_plus_one(n / 2),
        (ClassicalSeries::Sp, BoxBlock::SpOddPair(p)) => IntPoly::x_pow_minus_one(p),
        (ClassicalSeries::Sp, BoxBlock::SpOnesPairs(k)) => IntPoly::x_pow_minus_one(1).pow(k),
        (ClassicalSeries::So, BoxBlock::SoEvenPair(p)) => IntPoly::x_pow_plus_one(p / 2).pow(2),
        (ClassicalSeries::So, BoxBlock::SoOddPair(p)) => IntPoly::x_pow_minus_one(p),
        (ClassicalSeries::So, BoxBlock::SoDSplit(p)) => IntPoly::x_pow_plus_one((p - 1) / 2).pow(2),
        (ClassicalSeries::So, BoxBlock::SoThreeOne) => IntPoly::x_pow_plus_one(1).pow(2),
        // bare parts: negative (p-1)/2-cycle; covers B_k, the G_2 box
        // (negative 3-cycle) and the bare (3) box (negative 1-cycle)
        (ClassicalSeries::So, BoxBlock::SoBare(p)) => IntPoly::x_pow_plus_one((p - 1) / 2),
        (ClassicalSeries::So, BoxBlock::SoOnes(k)) => IntPoly::x_pow_minus_one(1).pow(k / 2),
        _ => unreachable!("box/series mismatch"),
    }
}

/// Characteristic polynomial of `w_f` on the full Cartan of the classical
/// ambient, from the signed-cycle model. Exact degree = rank; trivial
/// coordinates are padded with `x - 1`.
pub fn classical_ambient_charpoly(
    algebra: &ClassicalAlgebra,
    p: &Partition,
) -> Result<IntPoly, Error> {
    let blocks = classical::boxes(algebra, p)?;
    let mut poly = IntPoly::one();
    for b in &blocks {
        poly = poly.mul(&box_cycle_factor(algebra.series(), b));
    }
    if algebra.series() == ClassicalSeries::Sl {
        poly = poly
            .exact_div(&IntPoly::from_coeffs(&[-1, 1]))
            .expect("the reflection representation drops one trivial factor");
    }
    let rank = algebra.rank();
    let deg = poly.degree();
    debug_assert!(deg <= rank);
    for _ in deg..rank {
        poly = poly.mul(&IntPoly::from_coeffs(&[-1, 1]));
    }
    Ok(poly)
}

/// Full invariant for a classical orbit: components, lcm order, and the
/// ambient charpoly.
pub fn classical_composite_invariant(
    algebra: &ClassicalAlgebra,
    p: &Partition,
) -> Result<WeylClassInvariant, Error> {
    let nf = classical::normal_form(algebra, p)?;
    let mut inv = composite_invariant(&nf);
    inv.ambient_charpoly = Some(classical_ambient_charpoly(algebra, p)?);
    Ok(inv)
}

/// Re-exported for downstream use next to the other class invariants.
pub use crate::poly::cyclotomic_factor as factor_into_cyclotomics;
