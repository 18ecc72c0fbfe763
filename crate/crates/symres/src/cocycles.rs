//! Explicit low-dimensional cocycles with trivial and permutation-module coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group_ring::RingSpec;
use crate::module::{CoefficientModule, ModuleElem};
use crate::pcomplex::PCell;
use crate::perm::Perm;
use crate::resolution::{FreeComplex, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CocycleKind {
    Kappa0,
    Alpha0,
    Beta0,
    Kappa,
    KappaHat,
    Alpha,
    AlphaHat,
    Beta,
    BetaHat,
    BetaTilde,
}

impl CocycleKind {
    pub const ALL: [CocycleKind; 10] = [
        CocycleKind::Kappa0,
        CocycleKind::Alpha0,
        CocycleKind::Beta0,
        CocycleKind::Kappa,
        CocycleKind::KappaHat,
        CocycleKind::Alpha,
        CocycleKind::AlphaHat,
        CocycleKind::Beta,
        CocycleKind::BetaHat,
        CocycleKind::BetaTilde,
    ];

    pub fn dim(self) -> usize {
        use CocycleKind::*;
        match self {
            Kappa0 | Kappa | KappaHat => 1,
            _ => 2,
        }
    }

    /// Coefficients live in M^k rather than the trivial module.
    pub fn twisted(self) -> bool {
        use CocycleKind::*;
        !matches!(self, Kappa0 | Alpha0 | Beta0)
    }

    /// The parameter r must satisfy 2r = 0.
    pub fn needs_two_torsion(self) -> bool {
        use CocycleKind::*;
        !matches!(self, Alpha0 | Alpha | AlphaHat)
    }

    /// Smallest k for which the cochain is defined.
    pub fn min_k(self) -> usize {
        use CocycleKind::*;
        match self {
            KappaHat | AlphaHat | BetaHat => 2,
            BetaTilde => 4,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        use CocycleKind::*;
        match self {
            Kappa0 => "kappa0",
            Alpha0 => "alpha0",
            Beta0 => "beta0",
            Kappa => "kappa",
            KappaHat => "kappa-hat",
            Alpha => "alpha",
            AlphaHat => "alpha-hat",
            Beta => "beta",
            BetaHat => "beta-hat",
            BetaTilde => "beta-tilde",
        }
    }
}

impl fmt::Display for CocycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CocycleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CocycleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown cocycle {s:?}")))
    }
}

/// A cochain on the generators of one degree of a free complex, extended equivariantly.
#[derive(Clone, Debug)]
pub struct Cochain {
    pub dim: usize,
    pub module: CoefficientModule,
    pub values: Vec<ModuleElem>,
}

impl Cochain {
    pub fn from_fn(cx: &FreeComplex, dim: usize, module: &CoefficientModule, mut f: impl FnMut(&str) -> Result<ModuleElem>) -> Result<Self> {
        let values = cx.labels[dim].iter().map(|l| f(l)).collect::<Result<Vec<_>>>()?;
        Ok(Cochain { dim, module: module.clone(), values })
    }

    pub fn value(&self, cx: &FreeComplex, label: &str) -> Option<&ModuleElem> {
        cx.index_of(self.dim, label).map(|i| &self.values[i])
    }

    /// Coordinates in the Hom complex basis (generator, module basis vector).
    pub fn to_vector(&self) -> Vec<BigInt> {
        self.values.iter().flat_map(|v| v.coords.iter().map(|&c| BigInt::from(c))).collect()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Cochain { dim: self.dim, module: self.module.clone(), values }
    }
}

fn ring_ok(ring: RingSpec, r: i64, torsion: bool) -> bool {
    !torsion || ring.normalize(2 * r) == 0
}

/// Builds one of the named cochains on P_* for S_n.
pub fn build_cocycle(cx: &FreeComplex, kind: CocycleKind, r: i64, k: usize, ring: RingSpec) -> Result<Cochain> {
    let n = cx.n;
    if !ring_ok(ring, r, kind.needs_two_torsion()) {
        return Err(Error::Param(format!("{kind} needs 2r = 0, got r = {r} in {}", ring.name())));
    }
    if cx.top() < kind.dim() {
        return Err(Error::BoundExceeded { what: "cochain degree", value: kind.dim(), bound: cx.top() });
    }
    let module = if kind.twisted() {
        if k < kind.min_k() || 2 * k > n {
            return Err(Error::Param(format!("{kind} is defined for {} <= k <= n/2, got k = {k}, n = {n}", kind.min_k())));
        }
        CoefficientModule::permutation(n, k, ring)?
    } else {
        CoefficientModule::trivial(n, ring)
    };
    let sum_all = module.sum_where(r, |_| true);
    let zero = module.zero();
    let contains = |s: usize, xs: &[usize]| -> usize {
        let set = module.subset(s);
        xs.iter().filter(|x| set.contains(x)).count()
    };
    Cochain::from_fn(cx, kind.dim(), &module, |label| {
        let cell: PCell = label.parse()?;
        use CocycleKind::*;
        Ok(match (kind, cell) {
            (Kappa0 | Kappa, PCell::E(_)) | (Alpha0 | Alpha, PCell::C(_)) | (Beta0 | Beta, PCell::D(..)) => sum_all.clone(),
            (KappaHat, PCell::E(i)) | (AlphaHat, PCell::C(i)) => {
                let i = i as usize;
                module.sum_where(r, |s| contains(s, &[i, i + 1]) == 2)
            }
            (BetaHat, PCell::D(i, j)) => {
                let (i, j) = (i as usize, j as usize);
                module.sum_where(r, |s| contains(s, &[i, i + 1, j, j + 1]) == 2)
            }
            (BetaTilde, PCell::D(i, j)) => {
                let (i, j) = (i as usize, j as usize);
                module.sum_where(r, |s| contains(s, &[i, i + 1, j, j + 1]) == 4)
            }
            _ => zero.clone(),
        })
    })
}

/// δf as a vector in the next cochain group, reduced in the coefficient ring.
pub fn coboundary(cx: &FreeComplex, f: &Cochain) -> Result<Vec<BigInt>> {
    if f.dim + 1 > cx.top() {
        return Err(Error::BoundExceeded { what: "coboundary degree", value: f.dim + 1, bound: cx.top() });
    }
    let d = cx.hom_complex(&f.module).map(-(f.dim as i64));
    let ring = f.module.ring();
    Ok(d.apply(&f.to_vector())
        .into_iter()
        .map(|x| {
            if ring.modulus == 0 {
                x
            } else {
                let m = BigInt::from(ring.modulus);
                ((x % &m) + &m) % &m
            }
        })
        .collect())
}

/// δf = 0 on every generator one degree up.
pub fn verify_cocycle(cx: &FreeComplex, f: &Cochain) -> Result<bool> {
    Ok(coboundary(cx, f)?.iter().all(|x| x.is_zero()))
}

/// ⟨f, z⟩ for a coinvariant chain z of the same degree, using the self-duality of the permutation basis.
pub fn pairing(f: &Cochain, z: &[BigInt]) -> Result<i64> {
    let dm = f.module.dim();
    if z.len() != f.values.len() * dm {
        return Err(Error::Param(format!("chain of length {} does not match cochain of length {}", z.len(), f.values.len() * dm)));
    }
    let ring = f.module.ring();
    let mut acc = BigInt::zero();
    for (g, v) in f.values.iter().enumerate() {
        for (b, &c) in v.coords.iter().enumerate() {
            acc += &z[g * dm + b] * c;
        }
    }
    if ring.modulus != 0 {
        let m = BigInt::from(ring.modulus);
        acc = ((acc % &m) + &m) % &m;
    }
    acc.to_i64().ok_or_else(|| Error::Param("pairing overflow".into()))
}

/// Free resolution of (Z/2)² = ⟨s1, s3⟩ ≤ S_4: the tensor square of the periodic
/// resolution of Z/2, cell (a, b) in degree a + b.
pub fn klein_complex(top: usize) -> FreeComplex {
    let g = [Perm::s(4, 1), Perm::s(4, 3)];
    let id = Perm::identity(4);
    let mut labels = Vec::new();
    let mut boundaries = Vec::new();
    for d in 0..=top {
        labels.push((0..=d).rev().map(|a| format!("({a},{})", d - a)).collect::<Vec<_>>());
        let mut col = Vec::new();
        for a in (0..=d).rev() {
            let b = d - a;
            let mut terms = Vec::new();
            // index of (a', b') in degree d-1 is (d-1) - a'
            if a > 0 {
                let gen = (d - 1) - (a - 1);
                let sign = if a % 2 == 1 { -1 } else { 1 };
                terms.push(Term { gen, g: g[0], coeff: 1 });
                terms.push(Term { gen, g: id, coeff: sign });
            }
            if b > 0 {
                let gen = (d - 1) - a;
                let eps = if a % 2 == 0 { 1 } else { -1 };
                let sign = if b % 2 == 1 { -1 } else { 1 };
                terms.push(Term { gen, g: g[1], coeff: eps });
                terms.push(Term { gen, g: id, coeff: eps * sign });
            }
            col.push(terms);
        }
        boundaries.push(col);
    }
    FreeComplex { group: "(Z/2)^2".into(), n: 4, labels, boundaries }
}

/// The cochain on the (Z/2)² resolution with value r on the 2-cell (1,1) and 0 elsewhere.
pub fn beta_hat0(cx: &FreeComplex, r: i64, ring: RingSpec) -> Result<Cochain> {
    if !ring_ok(ring, r, true) {
        return Err(Error::Param(format!("beta-hat0 needs 2r = 0, got r = {r} in {}", ring.name())));
    }
    let module = CoefficientModule::trivial(cx.n, ring);
    Cochain::from_fn(cx, 2, &module, |l| Ok(if l == "(1,1)" { module.sum_where(r, |_| true) } else { module.zero() }))
}
