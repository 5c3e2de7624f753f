//! Cyclic quotient singularity types, two-dimensional cones, and the crepant
//! decomposition into elementary T-singularities plus a residue.
//!
//! Orientation convention: a `Cone2` stores its primitive generators `(u, v)`
//! counterclockwise, `det(u, v) > 0`. The standard position of the type
//! `1/r(1,q)` is the cone with `u = (r, -q)`, `v = (0, 1)`; equivalently `v`
//! is the generator that a change of basis sends to `(0, 1)` while `u` lands
//! on `(r, -q)`. Decomposition sequences start at `v` and end at `u`; this is
//! the ordering under which the worked decomposition of 1/60(1,23) comes out
//! as 1/25(1,9), 1/10(1,3), 1/25(1,4).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{gcd, is_primitive, lattice_height, lattice_length, LatticePoint, UnimodularMap};

/// A cyclic quotient singularity `1/r(a,b)`, stored canonically.
///
/// The canonical representative is `1/r(1,q)` with `q` replaced by
/// `min(q, q^-1 mod r)`, so lattice-isomorphic types compare equal. The
/// smooth type is `1/1(1,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientSingularityType {
    r: BigInt,
    q: BigInt,
}

/// A strictly convex two-dimensional rational cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone2 {
    u: LatticePoint,
    v: LatticePoint,
}

/// Width, local index and the division `w = n*l + rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeProfile {
    pub w: BigInt,
    pub l: BigInt,
    pub n: BigInt,
    pub rho: BigInt,
}

/// Residue of a cone: empty exactly for T-singularities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Residue {
    Empty,
    Type(QuotientSingularityType),
}

/// Singularity content of a cone: the count of elementary T-pieces and the residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSingularityContent {
    pub n: BigInt,
    pub residue: Residue,
}

fn mod_reduce(a: &BigInt, r: &BigInt) -> BigInt {
    a.mod_floor(r)
}

/// Inverse of `a` modulo `r` (requires `gcd(a, r) = 1`, `r >= 1`).
pub(crate) fn mod_inverse(a: &BigInt, r: &BigInt) -> BigInt {
    if r.is_one() {
        return BigInt::zero();
    }
    let e = a.extended_gcd(r);
    debug_assert!(e.gcd.is_one());
    mod_reduce(&e.x, r)
}

impl QuotientSingularityType {
    /// Builds `1/r(a,b)` and normalizes to the canonical representative.
    pub fn new(r: impl Into<BigInt>, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let r = r.into();
        if r.sign() != num_bigint::Sign::Plus {
            return Err(Error::InvalidType(format!("group order {} must be positive", r)));
        }
        let a = mod_reduce(&a.into(), &r);
        let b = mod_reduce(&b.into(), &r);
        if !gcd(&r, &a).is_one() && !r.is_one() {
            return Err(Error::InvalidType(format!("gcd(r, a) = gcd({}, {}) != 1", r, a)));
        }
        if !gcd(&r, &b).is_one() && !r.is_one() {
            return Err(Error::InvalidType(format!("gcd(r, b) = gcd({}, {}) != 1", r, b)));
        }
        if r.is_one() {
            return Ok(QuotientSingularityType { r, q: BigInt::zero() });
        }
        // Scale weights by a^-1 to reach 1/r(1, q), then pick min(q, q^-1).
        let a_inv = mod_inverse(&a, &r);
        let q = mod_reduce(&(&a_inv * &b), &r);
        let q_bar = mod_inverse(&q, &r);
        let q = q.min(q_bar);
        Ok(QuotientSingularityType { r, q })
    }

    pub fn smooth() -> Self {
        QuotientSingularityType {
            r: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.r.is_one()
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    /// Second canonical weight: the type is `1/r(1, q)`.
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// Canonical weight pair `(a, b) = (1, q)`.
    pub fn weights(&self) -> (BigInt, BigInt) {
        (BigInt::one(), self.q.clone())
    }

    /// The other orientation of the second weight, `q^-1 mod r`.
    pub fn q_bar(&self) -> BigInt {
        if self.r.is_one() {
            BigInt::zero()
        } else {
            mod_inverse(&self.q, &self.r)
        }
    }

    /// Width and local index (`w = gcd(r, 1 + q)`, `l = r / w`) together with
    /// the division `w = n*l + rho`, `0 <= rho < l`.
    pub fn profile(&self) -> ConeProfile {
        let sum = &self.q + 1;
        let w = gcd(&self.r, &sum);
        let l = &self.r / &w;
        let (n, rho) = w.div_mod_floor(&l);
        ConeProfile { w, l, n, rho }
    }

    /// Residue after splitting off all elementary T-subcones.
    pub fn residue(&self) -> Residue {
        let p = self.profile();
        if p.rho.is_zero() {
            return Residue::Empty;
        }
        // Written as 1/r(1, a-1), the residue is 1/(rho*l)(1, rho*a/w - 1).
        let a = &self.q + 1;
        let prod: BigInt = &p.rho * &a;
        let (scaled, rem) = prod.div_mod_floor(&p.w);
        assert!(rem.is_zero(), "internal error: rho*a/w not integral for {}", self);
        let order = &p.rho * &p.l;
        let res = QuotientSingularityType::new(order, BigInt::one(), scaled - 1)
            .expect("internal error: residue is not a valid quotient singularity");
        Residue::Type(res)
    }

    /// Singularity content `(n, residue)`.
    pub fn singularity_content(&self) -> ConeSingularityContent {
        ConeSingularityContent {
            n: self.profile().n,
            residue: self.residue(),
        }
    }

    /// T-singularities are exactly the types with empty residue (`rho = 0`).
    pub fn is_t_singularity(&self) -> bool {
        self.profile().rho.is_zero()
    }

    /// Milnor number `n - 1` of a T-singularity.
    pub fn milnor_number(&self) -> Result<BigInt> {
        let p = self.profile();
        if !p.rho.is_zero() {
            return Err(Error::NotTSingularity(self.to_string()));
        }
        Ok(p.n - 1)
    }

    /// The standard-position cone `u = (r, -q)`, `v = (0, 1)`.
    pub fn standard_cone(&self) -> Cone2 {
        Cone2::new(
            LatticePoint::new(self.r.clone(), -self.q.clone()),
            LatticePoint::new(0, 1),
        )
        .expect("standard-position cone is always valid")
    }
}

impl fmt::Display for QuotientSingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_one() {
            write!(f, "1/1(1,0)")
        } else {
            write!(f, "1/{}(1,{})", self.r, self.q)
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Empty => write!(f, "\u{2205}"),
            Residue::Type(t) => write!(f, "{}", t),
        }
    }
}

impl Residue {
    pub fn is_empty(&self) -> bool {
        matches!(self, Residue::Empty)
    }

    pub fn as_type(&self) -> Option<&QuotientSingularityType> {
        match self {
            Residue::Empty => None,
            Residue::Type(t) => Some(t),
        }
    }
}

impl Cone2 {
    /// Builds a cone from counterclockwise primitive generators.
    pub fn new(u: LatticePoint, v: LatticePoint) -> Result<Self> {
        if !is_primitive(&u) {
            return Err(Error::NonPrimitiveVertex(u.to_string()));
        }
        if !is_primitive(&v) {
            return Err(Error::NonPrimitiveVertex(v.to_string()));
        }
        if u.det(&v).sign() != num_bigint::Sign::Plus {
            return Err(Error::DegenerateCone);
        }
        Ok(Cone2 { u, v })
    }

    pub fn u(&self) -> &LatticePoint {
        &self.u
    }

    pub fn v(&self) -> &LatticePoint {
        &self.v
    }

    /// Group order `r = det(u, v)`.
    pub fn order(&self) -> BigInt {
        self.u.det(&self.v)
    }

    pub fn width(&self) -> BigInt {
        lattice_length(&self.u, &self.v)
    }

    pub fn local_index(&self) -> BigInt {
        lattice_height(&self.u, &self.v).expect("cone generators are independent")
    }

    /// Oriented type parameters `(r, q)`: the change of basis fixing `v` at
    /// `(0,1)` puts `u` at `(r, -q)`. Unlike [`Cone2::singularity_type`] this
    /// does not canonicalize `q`.
    pub fn oriented_params(&self) -> (BigInt, BigInt) {
        let m = UnimodularMap::sending_to_e2(&self.v).expect("v is primitive");
        let img = m.apply(&self.u);
        let r = self.order();
        debug_assert_eq!(img.x, r);
        let q = mod_reduce(&-img.y, &r);
        (r, q)
    }

    /// Canonical singularity type of the cone.
    pub fn singularity_type(&self) -> QuotientSingularityType {
        let (r, q) = self.oriented_params();
        QuotientSingularityType::new(r, BigInt::one(), q)
            .expect("cone with primitive generators yields a valid type")
    }

    pub fn apply(&self, m: &UnimodularMap) -> Result<Cone2> {
        let u = m.apply(&self.u);
        let v = m.apply(&self.v);
        if m.det().is_one() {
            Cone2::new(u, v)
        } else {
            // Orientation-reversing maps swap the counterclockwise order.
            Cone2::new(v, u)
        }
    }
}

impl fmt::Display for Cone2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone[{}, {}]", self.u, self.v)
    }
}

/// Canonical type of a cone; inverse of [`type_to_cone`] up to lattice isomorphism.
pub fn cone_to_type(c: &Cone2) -> QuotientSingularityType {
    c.singularity_type()
}

/// Standard-position cone of a type; `cone_to_type(type_to_cone(s)) == s`.
pub fn type_to_cone(sigma: &QuotientSingularityType) -> Cone2 {
    sigma.standard_cone()
}

/// Crepant decomposition of `c` with the residual slot at position `m`.
///
/// Returns the subcones in order from the `v`-side of the cone to the
/// `u`-side, each with its singularity type. When `rho = 0` there is no
/// residual slot and `m` is ignored.
pub fn decompose(c: &Cone2, m: usize) -> Result<Vec<(Cone2, QuotientSingularityType)>> {
    let (r, q) = c.oriented_params();
    let a = &q + 1;
    let w = gcd(&r, &a);
    let l = &r / &w;
    let (n, rho) = w.div_mod_floor(&l);
    let n_usize = n.to_usize().expect("decomposition size fits in usize");

    if !rho.is_zero() && m > n_usize {
        return Err(Error::SlotOutOfRange { m, n: n_usize });
    }

    let step = (c.u() - c.v()).primitivize().expect("generators differ");
    debug_assert_eq!(&step.scale(&w) + c.v(), *c.u());

    let mut lengths: Vec<BigInt> = Vec::new();
    if rho.is_zero() {
        lengths.extend(std::iter::repeat_with(|| l.clone()).take(n_usize));
    } else {
        for i in 0..=n_usize {
            lengths.push(if i == m { rho.clone() } else { l.clone() });
        }
    }

    let mut out = Vec::with_capacity(lengths.len());
    let mut current = c.v().clone();
    for len in &lengths {
        let next = &current + &step.scale(len);
        assert!(is_primitive(&next), "internal error: subdivision point {} not primitive", next);
        let sub = Cone2::new(next.clone(), current.clone())?;
        let t = sub.singularity_type();
        out.push((sub, t));
        current = next;
    }
    debug_assert_eq!(&current, c.u());
    Ok(out)
}

impl fmt::Display for ConeSingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.residue)
    }
}
