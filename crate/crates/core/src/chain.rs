//! Mod-2 chain complexes, Betti numbers and cycle representatives.

use std::fmt;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gf2::{echelon_basis, reduce_against, subspace_intersection, Gf2Matrix, Gf2Vector};

/// A mod-2 chain: a set of simplices of one dimension.
///
/// Chains name their simplices by label, so they can be carried between a
/// complex and its subcomplexes; coordinates are recomputed against each
/// complex's own index tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    dim: usize,
    simplices: Vec<Simplex>,
}

impl Chain {
    pub fn new(dim: usize, mut simplices: Vec<Simplex>) -> Result<Self> {
        if let Some(s) = simplices.iter().find(|s| s.dim() != dim) {
            return Err(Error::Precondition(format!(
                "{s} in a chain of dimension {dim}"
            )));
        }
        simplices.sort();
        // coefficients are mod 2: pairs cancel
        let mut out: Vec<Simplex> = Vec::with_capacity(simplices.len());
        for s in simplices {
            if out.last() == Some(&s) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        Ok(Self {
            dim,
            simplices: out,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            simplices: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn is_zero(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.dim != other.dim {
            return Err(Error::Precondition(format!(
                "adding chains of dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        Chain::new(
            self.dim,
            self.simplices
                .iter()
                .chain(&other.simplices)
                .cloned()
                .collect(),
        )
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simplices.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain[{}]({self})", self.dim)
    }
}

/// Boundary matrices of a complex in its canonical simplex order.
///
/// `boundary(n)` has one row per `(n-1)`-simplex and one column per
/// `n`-simplex; `boundary(0)` is the zero map to the trivial group.
pub struct ChainData<'a> {
    complex: &'a SimplicialComplex,
    boundaries: Vec<Gf2Matrix>,
}

impl<'a> ChainData<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        let top = complex.dim().map_or(0, |d| d + 1);
        let mut boundaries = Vec::with_capacity(top + 1);
        boundaries.push(Gf2Matrix::zeros(0, complex.count(0)));
        for n in 1..=top {
            let mut d = Gf2Matrix::zeros(complex.count(n - 1), complex.count(n));
            for (j, cell) in complex.cells(n).iter().enumerate() {
                for skip in 0..cell.len() {
                    let face: Vec<usize> = cell
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, v)| *v)
                        .collect();
                    let i = complex.cell_index(&face).expect("closed under faces");
                    d.set(i, j, true);
                }
            }
            boundaries.push(d);
        }
        for n in 2..boundaries.len() {
            let dd = boundaries[n - 1]
                .mul(&boundaries[n])
                .expect("boundary shapes compose");
            assert!(dd.is_zero(), "d{} o d{n} is not zero", n - 1);
        }
        Self {
            complex,
            boundaries,
        }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    /// `d_n : C_n -> C_{n-1}`; the zero matrix beyond the top dimension.
    pub fn boundary(&self, n: usize) -> Gf2Matrix {
        self.boundaries.get(n).cloned().unwrap_or_else(|| {
            Gf2Matrix::zeros(
                self.complex.count(n.saturating_sub(1)),
                self.complex.count(n),
            )
        })
    }

    pub fn rank(&self, n: usize) -> usize {
        self.boundaries.get(n).map_or(0, Gf2Matrix::rank)
    }

    pub fn to_vector(&self, chain: &Chain) -> Result<Gf2Vector> {
        let n = chain.dim();
        let len = self.complex.count(n);
        let indices = chain
            .simplices()
            .iter()
            .map(|s| {
                self.complex
                    .to_cell(s)
                    .and_then(|c| self.complex.cell_index(&c))
                    .ok_or_else(|| Error::Precondition(format!("{s} is not in the complex")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Gf2Vector::from_indices(len, indices))
    }

    pub fn to_chain(&self, n: usize, v: &Gf2Vector) -> Chain {
        let cells = self.complex.cells(n);
        Chain {
            dim: n,
            simplices: v
                .ones()
                .map(|i| self.complex.to_simplex(&cells[i]))
                .collect(),
        }
    }

    pub fn is_cycle(&self, chain: &Chain) -> Result<bool> {
        let v = self.to_vector(chain)?;
        Ok(self.boundary(chain.dim()).mul_vec(&v)?.is_zero())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let Some(top) = self.complex.dim() else {
            return Vec::new();
        };
        (0..=top)
            .map(|n| self.complex.count(n) - self.rank(n) - self.rank(n + 1))
            .collect()
    }

    /// Canonical bases of `ker d_n` and of `im d_{n+1}`.
    pub fn cycles_and_boundaries(&self, n: usize) -> (Vec<Gf2Vector>, Vec<Gf2Vector>) {
        let cycles = self.boundary(n).kernel_basis();
        let boundaries = self.boundary(n + 1).image_basis();
        (cycles, boundaries)
    }

    /// Cycles whose classes form a basis of `H_n`, as coordinate vectors.
    pub fn homology_basis_vectors(&self, n: usize) -> Vec<Gf2Vector> {
        let (cycles, boundaries) = self.cycles_and_boundaries(n);
        extend_basis(&boundaries, &cycles)
    }
}

/// Picks, in order, the vectors of `candidates` that are independent modulo
/// `span(base)` and the previously picked ones.
pub(crate) fn extend_basis(base: &[Gf2Vector], candidates: &[Gf2Vector]) -> Vec<Gf2Vector> {
    let mut span = echelon_basis(base);
    let mut picked = Vec::new();
    for c in candidates {
        if !reduce_against(&span, c).is_zero() {
            picked.push(c.clone());
            let mut next = span.clone();
            next.push(c.clone());
            span = echelon_basis(&next);
        }
    }
    picked
}

/// Mod-2 Betti numbers together with cycle representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub cycle_reps: Vec<Vec<Chain>>,
}

pub fn homology_profile(k: &SimplicialComplex) -> HomologyProfile {
    let cd = ChainData::new(k);
    let betti = cd.betti_numbers();
    let cycle_reps = (0..betti.len())
        .map(|n| {
            cd.homology_basis_vectors(n)
                .iter()
                .map(|v| cd.to_chain(n, v))
                .collect()
        })
        .collect();
    HomologyProfile { betti, cycle_reps }
}

/// `b_n = dim ker d_n − rank d_{n+1}` for `n = 0..=dim`.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    ChainData::new(k).betti_numbers()
}

pub fn homology_basis(k: &SimplicialComplex, n: usize) -> Vec<Chain> {
    let cd = ChainData::new(k);
    cd.homology_basis_vectors(n)
        .iter()
        .map(|v| cd.to_chain(n, v))
        .collect()
}

/// Betti vectors compared up to trailing zeros.
pub fn same_betti(a: &[usize], b: &[usize]) -> bool {
    let n = a.len().max(b.len());
    (0..n).all(|i| a.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0))
}

/// Columns of `d_2^K` restricted to the given triangles, as vectors over all
/// triangles of `K`.
fn restricted_cycles(cd: &ChainData<'_>, triangles: &[usize]) -> Vec<Gf2Vector> {
    let k = cd.complex();
    let full = cd.boundary(2);
    let cols: Vec<Gf2Vector> = triangles.iter().map(|&t| full.column(t)).collect();
    let restricted = Gf2Matrix::from_columns(k.count(1), &cols).expect("consistent shapes");
    restricted
        .kernel_basis()
        .iter()
        .map(|x| Gf2Vector::from_indices(k.count(2), x.ones().map(|i| triangles[i])))
        .collect()
}

fn triangle_positions(k: &SimplicialComplex, triangles: &[Simplex]) -> Result<Vec<usize>> {
    let mut idx = triangles
        .iter()
        .map(|s| {
            if s.dim() != 2 {
                return Err(Error::Precondition(format!("{s} is not a 2-simplex")));
            }
            k.to_cell(s)
                .and_then(|c| k.cell_index(&c))
                .ok_or_else(|| Error::Precondition(format!("{s} is not a 2-simplex of K")))
        })
        .collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}

/// A non-zero 2-cycle of the subcomplex spanned by `l_triangles` (plus the
/// 1-skeleton of `K`) that bounds in `K`, with the smallest triangle of its
/// support.
///
/// Removing that triangle from `L` lowers `b_2(L)` by one and leaves the
/// lower homology and the surjection onto `H_2(K)` intact.
pub fn surplus_cycle(
    k: &SimplicialComplex,
    l_triangles: &[Simplex],
) -> Result<Option<(Chain, Simplex)>> {
    let cd = ChainData::new(k);
    let positions = triangle_positions(k, l_triangles)?;
    let cycles = restricted_cycles(&cd, &positions);
    let bounding = cd.boundary(3).image_basis();
    let meet = subspace_intersection(&cycles, &bounding)?;
    Ok(meet.first().map(|b| {
        let chain = cd.to_chain(2, b);
        let sigma = chain.simplices()[0].clone();
        (chain, sigma)
    }))
}

/// A 2-cycle supported on `l` that is homologous to `z` in `k`, if any.
pub fn h2_epi_witness(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    z: &Chain,
) -> Result<Option<Chain>> {
    if z.dim() != 2 {
        return Err(Error::Precondition(
            "witness target must be a 2-chain".into(),
        ));
    }
    let cd = ChainData::new(k);
    if !cd.is_cycle(z)? {
        return Err(Error::Precondition(format!("{z} is not a cycle of K")));
    }
    let in_l = triangle_positions(k, &l.simplices(2))?;
    let mut in_l_mask = vec![false; k.count(2)];
    for &t in &in_l {
        in_l_mask[t] = true;
    }
    let outside: Vec<usize> = (0..k.count(2)).filter(|&t| !in_l_mask[t]).collect();
    let zv = cd.to_vector(z)?;
    let d3 = cd.boundary(3);
    // need y with (d3 y)_t = z_t for every triangle t outside L; then
    // C = z + d3 y vanishes outside L
    let rows: Vec<Gf2Vector> = outside.iter().map(|&t| d3.row(t).clone()).collect();
    let system = Gf2Matrix::from_rows(d3.cols(), rows)?;
    let rhs = Gf2Vector::from_bits(&outside.iter().map(|&t| zv.get(t)).collect::<Vec<_>>());
    let Some(y) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let c = &zv + &d3.mul_vec(&y)?;
    Ok(Some(cd.to_chain(2, &c)))
}
