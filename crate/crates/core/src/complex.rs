//! Finite abstract simplicial complexes and the combinatorial moves used by
//! the reduction pipeline.
//!
//! Vertices are kept in lexicographic label order and every simplex is stored
//! as the ascending list of its vertex positions in that order. Comparing two
//! such position lists lexicographically is therefore the same as comparing
//! the label lists, and all iteration in this module follows that canonical
//! order. Complexes are immutable: every move returns a new complex together
//! with a [`MoveRecord`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A vertex name: a non-empty token of printable, non-whitespace characters.
///
/// `#` is excluded because it starts a comment in the complex file format.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(Arc<str>);

impl VertexLabel {
    pub fn new(label: impl AsRef<str>) -> Result<Self> {
        let label = label.as_ref();
        if label.is_empty() {
            return Err(Error::Malformed("empty vertex label".into()));
        }
        if let Some(c) = label
            .chars()
            .find(|c| c.is_whitespace() || c.is_control() || *c == '#')
        {
            return Err(Error::Malformed(format!(
                "vertex label {label:?} contains forbidden character {c:?}"
            )));
        }
        Ok(Self(Arc::from(label)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A simplex: a strictly ascending list of vertex labels.
///
/// Simplices order lexicographically by their vertex lists, so a face sorts
/// before every simplex it is a prefix of.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexLabel>);

impl Simplex {
    pub fn new(mut vertices: Vec<VertexLabel>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Malformed(
                "a simplex needs at least one vertex".into(),
            ));
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "vertex {} repeated within one simplex",
                w[0]
            )));
        }
        Ok(Self(vertices))
    }

    pub fn from_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::new(
            labels
                .into_iter()
                .map(VertexLabel::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simplex{self}")
    }
}

/// Ascending vertex positions within a complex's vertex table.
pub(crate) type Cell = Vec<usize>;

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    // cells[d] holds the d-simplices in canonical order; cells[0][i] == [i]
    cells: Vec<Vec<Cell>>,
}

/// What a [`MoveRecord`] did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// Elementary collapse: `face` and its unique proper coface removed.
    Collapse { face: Simplex, coface: Simplex },
    /// A maximal edge shrunk to its smaller endpoint.
    EdgeContraction { edge: Simplex },
    /// A 2-simplex removed, its faces kept.
    SimplexExcision { simplex: Simplex },
    /// `merged` glued onto `kept`, optionally followed by adding a simplex.
    VertexIdentification {
        kept: VertexLabel,
        merged: VertexLabel,
        added: Option<Simplex>,
    },
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Collapse { face, coface } => write!(f, "collapse {face} into {coface}"),
            MoveKind::EdgeContraction { edge } => write!(f, "contract {edge}"),
            MoveKind::SimplexExcision { simplex } => write!(f, "excise {simplex}"),
            MoveKind::VertexIdentification {
                kept,
                merged,
                added,
            } => {
                write!(f, "identify {merged} with {kept}")?;
                if let Some(s) = added {
                    write!(f, " and add {s}")?;
                }
                Ok(())
            }
        }
    }
}

/// One move applied to a complex, with the f-vectors on either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub before: Vec<usize>,
    pub after: Vec<usize>,
}

impl MoveRecord {
    /// Applies the recorded move to `complex` and checks both f-vectors.
    pub fn replay(&self, complex: &SimplicialComplex) -> Result<SimplicialComplex> {
        if complex.f_vector() != self.before {
            return Err(Error::Inconsistency(format!(
                "replaying `{}` on f-vector {:?}, recorded {:?}",
                self.kind,
                complex.f_vector(),
                self.before
            )));
        }
        let (next, _) = match &self.kind {
            MoveKind::Collapse { face, coface } => complex.collapse(face, coface)?,
            MoveKind::EdgeContraction { edge } => complex.contract_edge(edge)?,
            MoveKind::SimplexExcision { simplex } => complex.remove_two_simplex(simplex)?,
            MoveKind::VertexIdentification {
                kept,
                merged,
                added,
            } => {
                let (mut k, r) = complex.identify_vertices(kept, merged)?;
                if let Some(s) = added {
                    k = k.with_simplex(s);
                }
                (k, r)
            }
        };
        if next.f_vector() != self.after {
            return Err(Error::Inconsistency(format!(
                "replaying `{}` gave f-vector {:?}, recorded {:?}",
                self.kind,
                next.f_vector(),
                self.after
            )));
        }
        Ok(next)
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} -> {})",
            self.kind,
            join(&self.before),
            join(&self.after)
        )
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn facets(cell: &[usize]) -> impl Iterator<Item = Cell> + '_ {
    (0..cell.len()).map(move |skip| {
        cell.iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, v)| *v)
            .collect()
    })
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            cells: Vec::new(),
        }
    }

    /// The downward closure of the given simplices (`build_complex`).
    pub fn from_maximal<I, S, L>(maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let simplices = maximal
            .into_iter()
            .map(Simplex::from_labels)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(&simplices))
    }

    pub fn from_simplices(simplices: &[Simplex]) -> Self {
        let mut vertices: Vec<VertexLabel> =
            simplices.iter().flat_map(|s| s.0.iter().cloned()).collect();
        vertices.sort();
        vertices.dedup();
        let generators = simplices.iter().map(|s| {
            s.0.iter()
                .map(|v| vertices.binary_search(v).expect("collected above"))
                .collect::<Cell>()
        });
        let mut sets: Vec<BTreeSet<Cell>> = Vec::new();
        for g in generators {
            insert_closure(&mut sets, &g);
        }
        Self::assemble(vertices, sets)
    }

    /// Builds a complex from per-dimension cell sets over `vertices`
    /// (sorted), discarding vertices that no longer occur.
    fn assemble(vertices: Vec<VertexLabel>, mut sets: Vec<BTreeSet<Cell>>) -> Self {
        while sets.last().is_some_and(BTreeSet::is_empty) {
            sets.pop();
        }
        let used: Vec<usize> = sets
            .first()
            .map(|s| s.iter().map(|c| c[0]).collect())
            .unwrap_or_default();
        if used.len() == vertices.len() {
            return Self {
                vertices,
                cells: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            };
        }
        let mut remap = vec![usize::MAX; vertices.len()];
        for (new, &old) in used.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = used.iter().map(|&i| vertices[i].clone()).collect();
        // remap is monotone, so the per-dimension order is preserved
        let cells = sets
            .into_iter()
            .map(|s| {
                s.into_iter()
                    .map(|c| c.into_iter().map(|v| remap[v]).collect())
                    .collect()
            })
            .collect();
        Self { vertices, cells }
    }

    fn cell_sets(&self) -> Vec<BTreeSet<Cell>> {
        self.cells
            .iter()
            .map(|cs| cs.iter().cloned().collect())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Number of `d`-simplices.
    pub fn count(&self, d: usize) -> usize {
        self.cells.get(d).map_or(0, Vec::len)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn vertex(&self, label: &str) -> Option<&VertexLabel> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(label))
            .ok()
            .map(|i| &self.vertices[i])
    }

    /// The `d`-simplices in canonical order.
    pub fn simplices(&self, d: usize) -> Vec<Simplex> {
        self.cells
            .get(d)
            .map(|cs| cs.iter().map(|c| self.to_simplex(c)).collect())
            .unwrap_or_default()
    }

    pub fn all_simplices(&self) -> Vec<Simplex> {
        (0..self.cells.len())
            .flat_map(|d| self.simplices(d))
            .collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.to_cell(s).is_some()
    }

    /// Simplices not properly contained in another simplex, canonical order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let counts = self.cofacet_counts();
        let mut out: Vec<Simplex> = self
            .cells
            .iter()
            .enumerate()
            .flat_map(|(d, cs)| {
                let counts = &counts;
                cs.iter()
                    .enumerate()
                    .filter(move |(i, _)| counts[d][*i].0 == 0)
                    .map(|(_, c)| self.to_simplex(c))
            })
            .collect();
        out.sort();
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub(crate) fn cells(&self, d: usize) -> &[Cell] {
        self.cells.get(d).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn cell_index(&self, cell: &[usize]) -> Option<usize> {
        let d = cell.len().checked_sub(1)?;
        self.cells
            .get(d)?
            .binary_search_by(|c| c.as_slice().cmp(cell))
            .ok()
    }

    pub(crate) fn vertex_index(&self, v: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub(crate) fn to_cell(&self, s: &Simplex) -> Option<Cell> {
        let cell =
            s.0.iter()
                .map(|v| self.vertex_index(v))
                .collect::<Option<Cell>>()?;
        self.cell_index(&cell).map(|_| cell)
    }

    pub(crate) fn to_simplex(&self, cell: &[usize]) -> Simplex {
        Simplex(cell.iter().map(|&i| self.vertices[i].clone()).collect())
    }

    fn require_vertex(&self, v: &VertexLabel) -> Result<usize> {
        self.vertex_index(v)
            .ok_or_else(|| Error::NotFound(format!("vertex {v}")))
    }

    fn require_edge(&self, e: &Simplex) -> Result<Cell> {
        if e.dim() != 1 {
            return Err(Error::NotFound(format!("{e} is not an edge")));
        }
        self.to_cell(e)
            .ok_or_else(|| Error::NotFound(format!("edge {e}")))
    }

    /// For each cell: number of cofacets and the last cofacet seen.
    fn cofacet_counts(&self) -> Vec<Vec<(usize, usize)>> {
        let mut counts: Vec<Vec<(usize, usize)>> = self
            .cells
            .iter()
            .map(|cs| vec![(0, usize::MAX); cs.len()])
            .collect();
        for d in 1..self.cells.len() {
            for (j, c) in self.cells[d].iter().enumerate() {
                for f in facets(c) {
                    let i = self.cell_index(&f).expect("complex is closed under faces");
                    counts[d - 1][i].0 += 1;
                    counts[d - 1][i].1 = j;
                }
            }
        }
        counts
    }

    /// Sorted neighbour positions of every vertex.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in self.cells(1) {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, v: &VertexLabel) -> Result<Vec<VertexLabel>> {
        let i = self.require_vertex(v)?;
        Ok(self.adjacency()[i]
            .iter()
            .map(|&j| self.vertices[j].clone())
            .collect())
    }

    pub fn degree(&self, v: &VertexLabel) -> Result<usize> {
        let i = self.require_vertex(v)?;
        Ok(self.cells(1).iter().filter(|e| e.contains(&i)).count())
    }

    pub fn are_adjacent(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        match (self.vertex_index(a), self.vertex_index(b)) {
            (Some(i), Some(j)) if i != j => {
                let e = if i < j { [i, j] } else { [j, i] };
                self.cell_index(&e).is_some()
            }
            _ => false,
        }
    }

    /// All simplices of dimension at most `n`.
    pub fn skeleton(&self, n: usize) -> Self {
        Self {
            vertices: self.vertices.clone(),
            cells: self.cells.iter().take(n + 1).cloned().collect(),
        }
    }

    /// Simplices disjoint from `v` whose join with `v` is in the complex.
    pub fn link(&self, v: &VertexLabel) -> Result<Self> {
        let i = self.require_vertex(v)?;
        let mut sets: Vec<BTreeSet<Cell>> = Vec::new();
        for cs in self.cells.iter().skip(1) {
            for c in cs.iter().filter(|c| c.contains(&i)) {
                let rest: Cell = c.iter().copied().filter(|&x| x != i).collect();
                let d = rest.len() - 1;
                if sets.len() <= d {
                    sets.resize_with(d + 1, BTreeSet::new);
                }
                sets[d].insert(rest);
            }
        }
        Ok(Self::assemble(self.vertices.clone(), sets))
    }

    /// Pairs `(face, coface)` where `face` lies in exactly one strictly larger
    /// simplex `coface`, which is then necessarily maximal.
    pub fn free_faces(&self) -> Vec<(Simplex, Simplex)> {
        let counts = self.cofacet_counts();
        let mut out = Vec::new();
        for d in 0..self.cells.len().saturating_sub(1) {
            for (i, c) in self.cells[d].iter().enumerate() {
                let (n, up) = counts[d][i];
                if n == 1 && counts[d + 1][up].0 == 0 {
                    out.push((self.to_simplex(c), self.to_simplex(&self.cells[d + 1][up])));
                }
            }
        }
        out.sort();
        out
    }

    /// Number of 2-simplices containing the edge `e`.
    pub fn edge_triangle_count(&self, e: &Simplex) -> Result<usize> {
        let cell = self.require_edge(e)?;
        Ok(self
            .cells(2)
            .iter()
            .filter(|t| cell.iter().all(|v| t.contains(v)))
            .count())
    }

    /// Whether an edge path joins `a` to `b` without traversing `forbidden`.
    pub fn path_exists(
        &self,
        a: &VertexLabel,
        b: &VertexLabel,
        forbidden: Option<&Simplex>,
    ) -> Result<bool> {
        let start = self.require_vertex(a)?;
        let goal = self.require_vertex(b)?;
        let forbidden = forbidden.map(|e| self.require_edge(e)).transpose()?;
        if start == goal {
            return Ok(true);
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                let edge = if x < y { [x, y] } else { [y, x] };
                if seen[y] || forbidden.as_deref() == Some(&edge[..]) {
                    continue;
                }
                if y == goal {
                    return Ok(true);
                }
                seen[y] = true;
                queue.push_back(y);
            }
        }
        Ok(false)
    }

    /// Classes of 2-simplices under "shares an edge", each sorted, ordered by
    /// their smallest member.
    pub fn strongly_connected_components(&self) -> Vec<Vec<Simplex>> {
        let tris = self.cells(2);
        let mut parent: Vec<usize> = (0..tris.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut by_edge: BTreeMap<Cell, usize> = BTreeMap::new();
        for (t, cell) in tris.iter().enumerate() {
            for e in facets(cell) {
                if let Some(&other) = by_edge.get(&e) {
                    let (ra, rb) = (find(&mut parent, t), find(&mut parent, other));
                    parent[ra.max(rb)] = ra.min(rb);
                } else {
                    by_edge.insert(e, t);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
        for (t, cell) in tris.iter().enumerate() {
            let root = find(&mut parent, t);
            groups.entry(root).or_default().push(self.to_simplex(cell));
        }
        // roots are the smallest index of their class, so BTreeMap order is
        // already "by smallest member"
        groups.into_values().collect()
    }

    fn record(&self, kind: MoveKind, after: &SimplicialComplex) -> MoveRecord {
        MoveRecord {
            kind,
            before: self.f_vector(),
            after: after.f_vector(),
        }
    }

    /// Removes one 2-simplex that has no cofaces, keeping its faces.
    pub fn remove_two_simplex(&self, sigma: &Simplex) -> Result<(Self, MoveRecord)> {
        if sigma.dim() != 2 {
            return Err(Error::Precondition(format!("{sigma} is not a 2-simplex")));
        }
        let cell = self
            .to_cell(sigma)
            .ok_or_else(|| Error::Precondition(format!("{sigma} is not in the complex")))?;
        if self
            .cells(3)
            .iter()
            .any(|c| cell.iter().all(|v| c.contains(v)))
        {
            return Err(Error::Precondition(format!(
                "{sigma} is a face of a 3-simplex"
            )));
        }
        let mut sets = self.cell_sets();
        sets[2].remove(&cell);
        let next = Self::assemble(self.vertices.clone(), sets);
        let rec = self.record(
            MoveKind::SimplexExcision {
                simplex: sigma.clone(),
            },
            &next,
        );
        Ok((next, rec))
    }

    /// Elementary collapse of a free `face` through its unique `coface`.
    pub fn collapse(&self, face: &Simplex, coface: &Simplex) -> Result<(Self, MoveRecord)> {
        let f = self
            .to_cell(face)
            .ok_or_else(|| Error::Precondition(format!("{face} is not in the complex")))?;
        let c = self
            .to_cell(coface)
            .ok_or_else(|| Error::Precondition(format!("{coface} is not in the complex")))?;
        let cofaces: Vec<&Cell> = self
            .cells
            .iter()
            .skip(f.len())
            .flatten()
            .filter(|x| f.iter().all(|v| x.contains(v)))
            .collect();
        if cofaces.len() != 1 || *cofaces[0] != c {
            return Err(Error::Precondition(format!(
                "{face} is not a free face of {coface}"
            )));
        }
        let mut sets = self.cell_sets();
        sets[f.len() - 1].remove(&f);
        sets[c.len() - 1].remove(&c);
        let next = Self::assemble(self.vertices.clone(), sets);
        let rec = self.record(
            MoveKind::Collapse {
                face: face.clone(),
                coface: coface.clone(),
            },
            &next,
        );
        Ok((next, rec))
    }

    /// Relabels vertex position `from` as `to` (`to < from`) everywhere.
    fn merge_vertex(&self, to: usize, from: usize) -> Self {
        let mut sets: Vec<BTreeSet<Cell>> = vec![BTreeSet::new(); self.cells.len()];
        for cs in &self.cells {
            for c in cs {
                let mut m: Cell = c.iter().map(|&v| if v == from { to } else { v }).collect();
                m.sort_unstable();
                m.dedup();
                sets[m.len() - 1].insert(m);
            }
        }
        Self::assemble(self.vertices.clone(), sets)
    }

    /// Contracts a maximal edge `{a, b}` onto `min(a, b)`.
    ///
    /// Fails with [`Error::PropertyAViolation`] when another path joins the
    /// endpoints: the quotient would not be simplicial and the complex
    /// cannot have the cup-product property the contraction relies on.
    pub fn contract_edge(&self, sigma: &Simplex) -> Result<(Self, MoveRecord)> {
        let cell = self
            .require_edge(sigma)
            .map_err(|e| Error::Precondition(e.to_string()))?;
        if self
            .cells(2)
            .iter()
            .any(|t| cell.iter().all(|v| t.contains(v)))
        {
            return Err(Error::Precondition(format!(
                "{sigma} is not a maximal edge"
            )));
        }
        let (a, b) = (&sigma.0[0], &sigma.0[1]);
        if self.path_exists(a, b, Some(sigma))? {
            return Err(Error::PropertyAViolation(format!(
                "a path joins {a} and {b} avoiding the maximal edge {sigma}"
            )));
        }
        let next = self.merge_vertex(cell[0], cell[1]);
        let before = self.f_vector();
        let after = next.f_vector();
        debug_assert_eq!(after[0] + 1, before[0]);
        debug_assert_eq!(after.get(1).copied().unwrap_or(0) + 1, before[1]);
        debug_assert_eq!(
            after.iter().skip(2).collect::<Vec<_>>(),
            before.iter().skip(2).collect::<Vec<_>>()
        );
        let rec = self.record(
            MoveKind::EdgeContraction {
                edge: sigma.clone(),
            },
            &next,
        );
        Ok((next, rec))
    }

    /// Glues two non-adjacent vertices with vertex-disjoint links; the class
    /// keeps the smaller label. Only defined for complexes of dimension ≤ 2.
    pub fn identify_vertices(
        &self,
        v: &VertexLabel,
        v_prime: &VertexLabel,
    ) -> Result<(Self, MoveRecord)> {
        if self.dim().is_some_and(|d| d > 2) {
            return Err(Error::Precondition(
                "vertex identification needs a complex of dimension at most 2".into(),
            ));
        }
        let i = self
            .require_vertex(v)
            .map_err(|e| Error::Precondition(e.to_string()))?;
        let j = self
            .require_vertex(v_prime)
            .map_err(|e| Error::Precondition(e.to_string()))?;
        if i == j {
            return Err(Error::Precondition(format!(
                "cannot identify {v} with itself"
            )));
        }
        if self.are_adjacent(v, v_prime) {
            return Err(Error::Precondition(format!(
                "{v} and {v_prime} are connected by an edge"
            )));
        }
        let link_v: BTreeSet<VertexLabel> = self.link(v)?.vertices.into_iter().collect();
        let link_w: BTreeSet<VertexLabel> = self.link(v_prime)?.vertices.into_iter().collect();
        if let Some(shared) = link_v.intersection(&link_w).next() {
            return Err(Error::Precondition(format!(
                "links of {v} and {v_prime} share vertex {shared}"
            )));
        }
        let (keep, drop) = (i.min(j), i.max(j));
        let next = self.merge_vertex(keep, drop);
        let before = self.f_vector();
        let after = next.f_vector();
        debug_assert_eq!(after[0] + 1, before[0]);
        debug_assert_eq!(after[1..], before[1..]);
        let rec = self.record(
            MoveKind::VertexIdentification {
                kept: self.vertices[keep].clone(),
                merged: self.vertices[drop].clone(),
                added: None,
            },
            &next,
        );
        Ok((next, rec))
    }

    /// The complex with `s` and all its faces added.
    pub fn with_simplex(&self, s: &Simplex) -> Self {
        let mut all = self.maximal_simplices();
        all.push(s.clone());
        Self::from_simplices(&all)
    }

    /// Checks closure, ordering and the simple-graph bound; used by tests and
    /// after loading untrusted data.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Inconsistency(m));
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return bad("vertex table not strictly ascending".into());
        }
        for (d, cs) in self.cells.iter().enumerate() {
            if cs.is_empty() {
                return bad(format!("no simplices in dimension {d} below the top"));
            }
            if cs.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("dimension {d} not in canonical order"));
            }
            for c in cs {
                if c.len() != d + 1 || c.windows(2).any(|w| w[0] >= w[1]) {
                    return bad(format!("malformed {d}-cell {c:?}"));
                }
                if c.iter().any(|&v| v >= self.vertices.len()) {
                    return bad(format!("cell {c:?} refers to an unknown vertex"));
                }
                if d > 0 && facets(c).any(|f| self.cell_index(&f).is_none()) {
                    return bad(format!("a facet of {} is missing", self.to_simplex(c)));
                }
            }
        }
        if self.count(0) != self.vertices.len()
            || self.cells(0).iter().enumerate().any(|(i, c)| c[..] != [i])
        {
            return bad("vertex cells do not match the vertex table".into());
        }
        let n = self.vertices.len();
        if self.count(1) > n * n.saturating_sub(1) / 2 {
            return bad("more edges than vertex pairs".into());
        }
        Ok(())
    }
}

fn insert_closure(sets: &mut Vec<BTreeSet<Cell>>, cell: &[usize]) {
    let d = cell.len() - 1;
    if sets.len() <= d {
        sets.resize_with(d + 1, BTreeSet::new);
    }
    if sets[d].contains(cell) {
        return;
    }
    sets[d].insert(cell.to_vec());
    if d > 0 {
        for f in facets(cell) {
            insert_closure(sets, &f);
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(f={:?}, maximal=[", self.f_vector())?;
        for (i, s) in self.maximal_simplices().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("])")
    }
}
