//! Homotopy-preserving reduction of a complex to a pure 2-complex, and the
//! vertex lower bound certified by the result.
//!
//! Every move is checked at the level of mod-2 homology as it is applied:
//! collapses and contractions must leave all Betti numbers unchanged, each
//! excision must lower `b₂` by exactly one. Ties are always broken by the
//! lexicographically smallest eligible simplex, so runs are deterministic.

use std::fmt;

use crate::chain::{betti_numbers, h2_epi_witness, homology_basis, same_betti, surplus_cycle};
use crate::cohomology::has_property_a;
use crate::complex::{MoveKind, MoveRecord, SimplicialComplex};
use crate::error::{Error, Result, Stage};
use crate::surface::{rho, SurfaceClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub record: MoveRecord,
    /// Betti numbers after the move.
    pub betti: Vec<usize>,
}

/// The moves applied by a reduction, with enough data to replay and audit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial_f_vector: Vec<usize>,
    pub initial_betti: Vec<usize>,
    pub steps: Vec<TraceStep>,
    pub final_f_vector: Vec<usize>,
    pub final_property_a: Option<bool>,
}

fn padded(b: &[usize], i: usize) -> usize {
    b.get(i).copied().unwrap_or(0)
}

fn check_step(kind: &MoveKind, before: &[usize], after: &[usize]) -> Result<()> {
    let ok = match kind {
        MoveKind::SimplexExcision { .. } => {
            let n = before.len().max(after.len());
            padded(before, 2) == padded(after, 2) + 1
                && (0..n).all(|i| i == 2 || padded(before, i) == padded(after, i))
        }
        _ => same_betti(before, after),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistency(format!(
            "`{kind}` took Betti numbers {before:?} to {after:?}"
        )))
    }
}

impl ReductionTrace {
    fn start(k: &SimplicialComplex) -> Self {
        Self {
            initial_f_vector: k.f_vector(),
            initial_betti: betti_numbers(k),
            steps: Vec::new(),
            final_f_vector: k.f_vector(),
            final_property_a: None,
        }
    }

    fn current_betti(&self) -> &[usize] {
        self.steps.last().map_or(&self.initial_betti, |s| &s.betti)
    }

    fn push(&mut self, record: MoveRecord, next: &SimplicialComplex) -> Result<()> {
        let betti = betti_numbers(next);
        check_step(&record.kind, self.current_betti(), &betti)?;
        if record.after[0] > record.before[0] {
            return Err(Error::Inconsistency(format!(
                "`{}` increased the vertex count",
                record.kind
            )));
        }
        self.final_f_vector = next.f_vector();
        self.steps.push(TraceStep { record, betti });
        Ok(())
    }

    fn extend(&mut self, other: ReductionTrace) {
        self.final_f_vector = other.final_f_vector;
        self.steps.extend(other.steps);
    }

    /// Re-applies every move to `initial`.
    pub fn replay(&self, initial: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut k = initial.clone();
        for step in &self.steps {
            k = step.record.replay(&k)?;
        }
        if k.f_vector() != self.final_f_vector {
            return Err(Error::Inconsistency(format!(
                "replay ends at f-vector {:?}, recorded {:?}",
                k.f_vector(),
                self.final_f_vector
            )));
        }
        Ok(k)
    }

    /// Re-checks the recorded per-step Betti numbers and vertex counts.
    pub fn verify(&self) -> Result<()> {
        let mut before = self.initial_betti.as_slice();
        let mut vertices = self.initial_f_vector.first().copied().unwrap_or(0);
        for step in &self.steps {
            check_step(&step.record.kind, before, &step.betti)?;
            let v = step.record.after.first().copied().unwrap_or(0);
            if v > vertices {
                return Err(Error::Inconsistency(format!(
                    "`{}` increased the vertex count",
                    step.record.kind
                )));
            }
            if matches!(step.record.kind, MoveKind::SimplexExcision { .. })
                && step.record.after.get(2) >= step.record.before.get(2)
            {
                return Err(Error::Inconsistency(format!(
                    "`{}` did not remove a triangle",
                    step.record.kind
                )));
            }
            vertices = v;
            before = &step.betti;
        }
        Ok(())
    }

    /// Number of (excisions, collapses, contractions).
    pub fn move_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for s in &self.steps {
            match s.record.kind {
                MoveKind::SimplexExcision { .. } => counts.0 += 1,
                MoveKind::Collapse { .. } => counts.1 += 1,
                MoveKind::EdgeContraction { .. } => counts.2 += 1,
                MoveKind::VertexIdentification { .. } => {}
            }
        }
        counts
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "{:>4}  {}  betti={:?}", i + 1, s.record, s.betti)?;
        }
        Ok(())
    }
}

/// Collapses the lexicographically smallest free face until none is left.
pub fn collapse_all(k: &SimplicialComplex) -> (SimplicialComplex, ReductionTrace) {
    let mut trace = ReductionTrace::start(k);
    let mut current = k.clone();
    while let Some((face, coface)) = current.free_faces().into_iter().next() {
        let (next, record) = current
            .collapse(&face, &coface)
            .expect("free faces can be collapsed");
        trace
            .push(record, &next)
            .expect("elementary collapses preserve homology");
        current = next;
    }
    (current, trace)
}

fn smallest_maximal_edge(k: &SimplicialComplex) -> Option<crate::complex::Simplex> {
    k.maximal_simplices().into_iter().find(|s| s.dim() == 1)
}

/// Contracts maximal edges, smallest first, re-collapsing after each one.
///
/// Requires a complex without free faces that has property A; a maximal
/// edge whose endpoints are joined by another path is reported as a
/// property-A violation.
pub fn eliminate_maximal_edges(
    l: &SimplicialComplex,
) -> Result<(SimplicialComplex, ReductionTrace)> {
    if let Some((face, coface)) = l.free_faces().into_iter().next() {
        return Err(Error::Precondition(format!(
            "complex has free face {face} of {coface}"
        )));
    }
    if !has_property_a(l) {
        return Err(Error::PropertyAViolation(
            "complex does not have property A".into(),
        ));
    }
    let mut trace = ReductionTrace::start(l);
    let mut current = l.clone();
    while let Some(edge) = smallest_maximal_edge(&current) {
        let (next, record) = current.contract_edge(&edge)?;
        trace.push(record, &next)?;
        let (collapsed, more) = collapse_all(&next);
        trace.extend(more);
        current = collapsed;
    }
    trace.final_property_a = Some(has_property_a(&current));
    Ok((current, trace))
}

/// Removes triangles from the 2-skeleton of `k` until `b₂` drops to one,
/// keeping lower homology and the surjection onto `H₂(k)`.
pub fn excise_to_surface_homology(
    k: &SimplicialComplex,
) -> Result<(SimplicialComplex, ReductionTrace)> {
    let betti_k = betti_numbers(k);
    if padded(&betti_k, 2) != 1 {
        return Err(Error::Precondition(format!(
            "b2 = {}, expected 1",
            padded(&betti_k, 2)
        )));
    }
    let mut current = k.skeleton(2);
    let mut trace = ReductionTrace::start(&current);
    while padded(trace.current_betti(), 2) > 1 {
        let Some((_, sigma)) = surplus_cycle(k, &current.simplices(2))? else {
            return Err(Error::Inconsistency(format!(
                "b2 of the subcomplex is {} but no 2-cycle of it bounds in the input",
                padded(trace.current_betti(), 2)
            )));
        };
        let (next, record) = current.remove_two_simplex(&sigma)?;
        trace.push(record, &next)?;
        current = next;
    }
    let betti_t = trace.current_betti();
    if (0..3).any(|i| padded(betti_t, i) != padded(&betti_k, i)) {
        return Err(Error::Inconsistency(format!(
            "excision ended at Betti numbers {betti_t:?}, input has {betti_k:?}"
        )));
    }
    let z = homology_basis(k, 2)
        .into_iter()
        .next()
        .expect("b2 = 1 gives one basis cycle");
    if h2_epi_witness(k, &current, &z)?.is_none() {
        return Err(Error::Inconsistency(
            "H2 of the excised complex does not map onto H2 of the input".into(),
        ));
    }
    Ok((current, trace))
}

/// The counting inequalities satisfied by a pure 2-complex without free
/// faces, and the vertex bound they imply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub surface: SurfaceClass,
    pub euler_characteristic: i64,
    /// `(α₀, α₁, α₂)` of the reduced complex.
    pub f_vector: [u64; 3],
    pub initial_vertices: u64,
    pub rho: u64,
}

impl BoundCertificate {
    /// `3α₂ ≥ 2α₁`: every edge lies in at least two triangles.
    pub fn triangles_cover_edges(&self) -> bool {
        let [_, a1, a2] = self.f_vector;
        3 * a2 >= 2 * a1
    }

    /// `α₁ ≤ α₀(α₀−1)/2`.
    pub fn edges_bounded(&self) -> bool {
        let [a0, a1, _] = self.f_vector;
        a1 <= a0 * a0.saturating_sub(1) / 2
    }

    /// `6χ ≥ 6α₀ − α₀(α₀−1)`.
    pub fn euler_bound(&self) -> bool {
        let a0 = i128::from(self.f_vector[0]);
        6 * i128::from(self.euler_characteristic) >= 6 * a0 - a0 * (a0 - 1)
    }

    pub fn holds(&self) -> bool {
        self.triangles_cover_edges()
            && self.edges_bounded()
            && self.euler_bound()
            && self.f_vector[0] >= self.rho
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2] = self.f_vector;
        writeln!(
            f,
            "surface: {} (chi = {})",
            self.surface, self.euler_characteristic
        )?;
        writeln!(f, "reduced f-vector: ({a0}, {a1}, {a2})")?;
        writeln!(f, "3*a2 >= 2*a1: {}", self.triangles_cover_edges())?;
        writeln!(f, "a1 <= a0(a0-1)/2: {}", self.edges_bounded())?;
        writeln!(f, "6*chi >= 6*a0 - a0(a0-1): {}", self.euler_bound())?;
        write!(
            f,
            "vertices: {} >= rho = {} (input had {})",
            a0, self.rho, self.initial_vertices
        )
    }
}

/// Output of [`certify_lower_bound`].
#[derive(Clone, Debug)]
pub struct Certification {
    pub certificate: BoundCertificate,
    pub trace: ReductionTrace,
    pub reduced: SimplicialComplex,
}

/// Reduces `k` to a pure 2-complex without free faces and certifies that
/// it, and hence `k`, has at least `ρ(S)` vertices.
///
/// The trace starts from the 2-skeleton of `k`. Errors carry the stage they
/// arose in.
pub fn certify_lower_bound(k: &SimplicialComplex, s: &SurfaceClass) -> Result<Certification> {
    let betti = betti_numbers(k);
    if !same_betti(&betti, &s.betti()) {
        return Err(Error::Inconsistency(format!(
            "Betti numbers {betti:?} do not match {s}, which has {:?}",
            s.betti()
        ))
        .at(Stage::Input));
    }
    let (excised, mut trace) = excise_to_surface_homology(k).map_err(|e| e.at(Stage::Excision))?;
    let (collapsed, more) = collapse_all(&excised);
    trace.extend(more);
    if !same_betti(&betti_numbers(&collapsed), &betti) {
        return Err(Error::Inconsistency("collapsing changed homology".into()).at(Stage::Collapse));
    }
    let (reduced, more) =
        eliminate_maximal_edges(&collapsed).map_err(|e| e.at(Stage::Contraction))?;
    trace.final_property_a = more.final_property_a;
    trace.extend(more);

    let certify = || -> Result<BoundCertificate> {
        let pure2 =
            reduced.dim() == Some(2) && reduced.maximal_simplices().iter().all(|m| m.dim() == 2);
        if !pure2 {
            return Err(Error::Inconsistency(
                "reduced complex is not pure 2-dimensional".into(),
            ));
        }
        if !reduced.free_faces().is_empty() {
            return Err(Error::Inconsistency(
                "reduced complex has free faces".into(),
            ));
        }
        let chi = reduced.euler_characteristic();
        if chi != s.euler_characteristic() {
            return Err(Error::Inconsistency(format!(
                "reduced complex has chi = {chi}, {s} has {}",
                s.euler_characteristic()
            )));
        }
        let f = reduced.f_vector();
        let certificate = BoundCertificate {
            surface: *s,
            euler_characteristic: chi,
            f_vector: [f[0] as u64, f[1] as u64, f[2] as u64],
            initial_vertices: k.num_vertices() as u64,
            rho: rho(chi)?,
        };
        if !certificate.holds() {
            return Err(Error::Inconsistency(format!(
                "certificate inequalities fail:\n{certificate}"
            )));
        }
        if certificate.f_vector[0] > certificate.initial_vertices {
            return Err(Error::Inconsistency("reduction added vertices".into()));
        }
        Ok(certificate)
    };
    let certificate = certify().map_err(|e| e.at(Stage::Certificate))?;
    Ok(Certification {
        certificate,
        trace,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    fn cx(simplices: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(simplices.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn sx(labels: &[&str]) -> Simplex {
        Simplex::from_labels(labels.iter().copied()).unwrap()
    }

    fn sphere() -> SimplicialComplex {
        cx(&[
            &["1", "2", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["2", "3", "4"],
        ])
    }

    fn side_sphere() -> SimplicialComplex {
        cx(&[
            &["1", "2", "3", "4"],
            &["1", "2", "5"],
            &["1", "3", "5"],
            &["2", "3", "5"],
        ])
    }

    #[test]
    fn collapse_examples() {
        let (pt, trace) = collapse_all(&cx(&[&["a", "b", "c", "d"]]));
        assert_eq!(pt.f_vector(), vec![1]);
        assert_eq!(trace.replay(&cx(&[&["a", "b", "c", "d"]])).unwrap(), pt);
        trace.verify().unwrap();

        let (same, trace) = collapse_all(&sphere());
        assert_eq!(same, sphere());
        assert!(trace.steps.is_empty());

        let (pt, _) = collapse_all(&cx(&[&["a", "b", "c"], &["c", "d"]]));
        assert_eq!(pt.f_vector(), vec![1]);
    }

    #[test]
    fn eliminate_examples() {
        let (same, trace) = eliminate_maximal_edges(&sphere()).unwrap();
        assert_eq!(same, sphere());
        assert!(trace.steps.is_empty());
        assert_eq!(trace.final_property_a, Some(true));

        // two tetrahedron boundaries joined by a bridge edge
        let bridged = cx(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
            &["d", "e"],
            &["e", "f", "g"],
            &["e", "f", "h"],
            &["e", "g", "h"],
            &["f", "g", "h"],
        ]);
        let (wedge, trace) = eliminate_maximal_edges(&bridged).unwrap();
        assert_eq!(wedge.f_vector(), vec![7, 12, 8]);
        assert_eq!(betti_numbers(&wedge), betti_numbers(&bridged));
        assert_eq!(trace.move_counts(), (0, 0, 1));
        assert_eq!(trace.replay(&bridged).unwrap(), wedge);

        let hollows = cx(&[
            &["a", "b"],
            &["b", "c"],
            &["a", "c"],
            &["c", "d"],
            &["d", "e"],
            &["e", "f"],
            &["d", "f"],
        ]);
        assert!(matches!(
            eliminate_maximal_edges(&hollows),
            Err(Error::PropertyAViolation(_))
        ));

        let with_free = sphere().with_simplex(&sx(&["1", "5"]));
        assert!(matches!(
            eliminate_maximal_edges(&with_free),
            Err(Error::Precondition(_))
        ));
        let (collapsed, _) = collapse_all(&with_free);
        assert_eq!(collapsed, sphere());
    }

    #[test]
    fn excise_examples() {
        let (t, trace) = excise_to_surface_homology(&sphere()).unwrap();
        assert_eq!(t, sphere());
        assert!(trace.steps.is_empty());

        let (t, trace) = excise_to_surface_homology(&side_sphere()).unwrap();
        assert_eq!(trace.move_counts(), (1, 0, 0));
        assert_eq!(
            trace.steps[0].record.kind,
            MoveKind::SimplexExcision {
                simplex: sx(&["1", "2", "3"])
            }
        );
        assert_eq!(t.f_vector(), vec![5, 9, 6]);
        assert_eq!(betti_numbers(&t), vec![1, 0, 1]);
        trace.verify().unwrap();
        assert_eq!(trace.replay(&side_sphere().skeleton(2)).unwrap(), t);

        let simplex5 = cx(&[&["0", "1", "2", "3", "4", "5"]]).skeleton(2);
        assert_eq!(betti_numbers(&simplex5)[2], 10);
        assert!(matches!(
            excise_to_surface_homology(&simplex5),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn certify_examples() {
        let s2 = SurfaceClass::orientable(0);
        let c = certify_lower_bound(&sphere(), &s2).unwrap();
        assert_eq!(c.certificate.f_vector, [4, 6, 4]);
        assert_eq!(c.certificate.rho, 4);

        let c = certify_lower_bound(&side_sphere(), &s2).unwrap();
        assert_eq!(c.certificate.f_vector[0], 5);
        assert!(c.certificate.holds());
        c.trace.verify().unwrap();
        assert_eq!(
            c.trace.replay(&side_sphere().skeleton(2)).unwrap(),
            c.reduced
        );

        let err = certify_lower_bound(&sphere(), &SurfaceClass::orientable(1)).unwrap_err();
        assert_eq!(err.stage(), Some(Stage::Input));

        // b₂ = 2 with nothing to excise against
        let two = cx(&[
            &["1", "2", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["2", "3", "4"],
            &["1", "5", "6"],
            &["1", "5", "7"],
            &["1", "6", "7"],
            &["5", "6", "7"],
        ]);
        assert!(certify_lower_bound(&two, &s2).is_err());
    }

    #[test]
    fn certificate_arithmetic() {
        let c = BoundCertificate {
            surface: SurfaceClass::orientable(1),
            euler_characteristic: 0,
            f_vector: [7, 21, 14],
            initial_vertices: 7,
            rho: 7,
        };
        assert!(c.holds());
        let short = BoundCertificate {
            f_vector: [6, 15, 9],
            ..c.clone()
        };
        assert!(!short.euler_bound());
    }
}
