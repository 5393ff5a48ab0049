//! Mod-2 cochains, the degree (1,1) cup product and property A.
//!
//! Cup products use the front-face/back-face rule in the canonical vertex
//! order: for a triangle `v0 < v1 < v2`,
//! `(α ∪ β)(v0 v1 v2) = α(v0 v1) · β(v1 v2)`. Cochain values depend on that
//! order, cohomology classes do not. Classes in `H²` are identified with
//! functionals on `H₂` by evaluating against the cycle basis from
//! [`crate::chain`].

use crate::chain::{extend_basis, ChainData};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// A mod-2 cochain on the `degree`-simplices of a complex, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    pub degree: usize,
    pub values: Gf2Vector,
}

impl Cochain {
    pub fn new(k: &SimplicialComplex, degree: usize, values: Gf2Vector) -> Result<Self> {
        if values.len() != k.count(degree) {
            return Err(Error::Precondition(format!(
                "{}-cochain with {} values on a complex with {} {}-simplices",
                degree,
                values.len(),
                k.count(degree),
                degree
            )));
        }
        Ok(Self { degree, values })
    }

    pub fn zero(k: &SimplicialComplex, degree: usize) -> Self {
        Self {
            degree,
            values: Gf2Vector::zeros(k.count(degree)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    /// Value on a chain given in the same coordinates.
    pub fn evaluate(&self, chain: &Gf2Vector) -> bool {
        self.values.dot(chain)
    }
}

/// `δⁿ : Cⁿ → Cⁿ⁺¹`, the transpose of `d_{n+1}`.
pub fn coboundary_matrix(k: &SimplicialComplex, n: usize) -> Gf2Matrix {
    ChainData::new(k).boundary(n + 1).transpose()
}

pub fn coboundary(k: &SimplicialComplex, c: &Cochain) -> Result<Cochain> {
    let values = coboundary_matrix(k, c.degree).mul_vec(&c.values)?;
    Ok(Cochain {
        degree: c.degree + 1,
        values,
    })
}

/// Front-face/back-face cup product of two 1-cochains.
pub fn cup_1_1(k: &SimplicialComplex, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    for c in [alpha, beta] {
        if c.degree != 1 || c.values.len() != k.count(1) {
            return Err(Error::Precondition(format!(
                "cup product needs 1-cochains on {} edges",
                k.count(1)
            )));
        }
    }
    Ok(Cochain {
        degree: 2,
        values: cup_values(k, &alpha.values, &beta.values),
    })
}

fn cup_values(k: &SimplicialComplex, alpha: &Gf2Vector, beta: &Gf2Vector) -> Gf2Vector {
    let edge = |a: usize, b: usize| k.cell_index(&[a, b]).expect("triangle edges exist");
    Gf2Vector::from_bits(
        &k.cells(2)
            .iter()
            .map(|t| alpha.get(edge(t[0], t[1])) && beta.get(edge(t[1], t[2])))
            .collect::<Vec<_>>(),
    )
}

fn cocycle_basis_vectors(cd: &ChainData<'_>) -> Vec<Gf2Vector> {
    // ker δ¹ = ker d₂ᵀ, im δ⁰ = im d₁ᵀ
    let cocycles = cd.boundary(2).transpose().kernel_basis();
    let coboundaries = cd.boundary(1).transpose().image_basis();
    extend_basis(&coboundaries, &cocycles)
}

/// 1-cocycles whose classes form a basis of `H¹`.
pub fn h1_cocycle_basis(k: &SimplicialComplex) -> Vec<Cochain> {
    let cd = ChainData::new(k);
    cocycle_basis_vectors(&cd)
        .into_iter()
        .map(|values| Cochain { degree: 1, values })
        .collect()
}

/// `T[i][j][k]`: the class of `αᵢ ∪ αⱼ` evaluated on the `k`-th `H₂` cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTensor {
    pub b1: usize,
    pub b2: usize,
    entries: Vec<bool>,
    cocycles: Vec<Gf2Vector>,
}

impl PairingTensor {
    pub fn get(&self, i: usize, j: usize, k: usize) -> bool {
        self.entries[(i * self.b1 + j) * self.b2 + k]
    }

    /// The `b₁ × (b₁·b₂)` matrix of `α ↦ (β ↦ [α ∪ β])`.
    pub fn flatten(&self) -> Gf2Matrix {
        let cols = self.b1 * self.b2;
        let rows = (0..self.b1)
            .map(|i| Gf2Vector::from_bits(&self.entries[i * cols..(i + 1) * cols]))
            .collect();
        Gf2Matrix::from_rows(cols, rows).expect("row lengths match")
    }

    /// Every nonzero class pairs nontrivially with some class.
    pub fn is_regular(&self) -> bool {
        self.flatten().rank() == self.b1
    }

    /// Coefficients (in the `H¹` basis) of a nonzero class whose cup product
    /// with every class vanishes, if one exists.
    pub fn annihilated_class(&self) -> Option<Gf2Vector> {
        self.flatten().transpose().kernel_basis().into_iter().next()
    }

    pub fn cocycles(&self) -> &[Gf2Vector] {
        &self.cocycles
    }
}

pub fn pairing_tensor(k: &SimplicialComplex) -> PairingTensor {
    let cd = ChainData::new(k);
    let cocycles = cocycle_basis_vectors(&cd);
    let cycles = cd.homology_basis_vectors(2);
    let (b1, b2) = (cocycles.len(), cycles.len());
    let mut entries = Vec::with_capacity(b1 * b1 * b2);
    for a in &cocycles {
        for b in &cocycles {
            let cup = cup_values(k, a, b);
            entries.extend(cycles.iter().map(|z| cup.dot(z)));
        }
    }
    PairingTensor {
        b1,
        b2,
        entries,
        cocycles,
    }
}

/// Whether every nonzero class of `H¹` cups nontrivially with some class.
pub fn has_property_a(k: &SimplicialComplex) -> bool {
    pairing_tensor(k).is_regular()
}

/// A 1-cocycle representing a nonzero class that cups to zero with every
/// class, when property A fails.
pub fn property_a_witness(k: &SimplicialComplex) -> Option<Cochain> {
    let t = pairing_tensor(k);
    let coeffs = t.annihilated_class()?;
    let mut values = Gf2Vector::zeros(k.count(1));
    for i in coeffs.ones() {
        values.xor_assign(&t.cocycles[i]);
    }
    Some(Cochain { degree: 1, values })
}
