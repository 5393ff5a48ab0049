//! Closed-surface recognition, classification, vertex bounds and the
//! nine-vertex complex with the homotopy type of the genus-2 surface.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::chain::betti_numbers;
use crate::cohomology::has_property_a;
use crate::complex::{MoveKind, MoveRecord, Simplex, SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

/// A closed surface up to homeomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceClass {
    orientable: bool,
    genus: u32,
}

impl SurfaceClass {
    /// `M_g`; genus 0 is the sphere, genus 1 the torus.
    pub fn orientable(genus: u32) -> Self {
        Self {
            orientable: true,
            genus,
        }
    }

    /// `N_k`, the connected sum of `k ≥ 1` projective planes.
    pub fn non_orientable(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Domain(
                "non-orientable genus must be at least 1".into(),
            ));
        }
        Ok(Self {
            orientable: false,
            genus,
        })
    }

    pub fn from_euler_characteristic(orientable: bool, chi: i64) -> Result<Self> {
        if orientable {
            if chi > 2 || chi % 2 != 0 {
                return Err(Error::Inconsistency(format!(
                    "no orientable surface has Euler characteristic {chi}"
                )));
            }
            Ok(Self::orientable(u32::try_from((2 - chi) / 2).map_err(
                |_| Error::Domain(format!("Euler characteristic {chi} out of range")),
            )?))
        } else {
            if chi > 1 {
                return Err(Error::Inconsistency(format!(
                    "no non-orientable surface has Euler characteristic {chi}"
                )));
            }
            Self::non_orientable(
                u32::try_from(2 - chi).map_err(|_| {
                    Error::Domain(format!("Euler characteristic {chi} out of range"))
                })?,
            )
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn euler_characteristic(&self) -> i64 {
        let g = i64::from(self.genus);
        if self.orientable {
            2 - 2 * g
        } else {
            2 - g
        }
    }

    /// Mod-2 Betti numbers `(1, b₁, 1)`.
    pub fn betti(&self) -> [usize; 3] {
        let g = self.genus as usize;
        [1, if self.orientable { 2 * g } else { g }, 1]
    }

    /// `M₂`, `N₂` and `N₃`: the surfaces whose minimal triangulations need
    /// one vertex more than the Euler-characteristic bound.
    pub fn is_exceptional(&self) -> bool {
        matches!(
            (self.orientable, self.genus),
            (true, 2) | (false, 2) | (false, 3)
        )
    }

    pub fn name(&self) -> String {
        match (self.orientable, self.genus) {
            (true, 0) => "S^2".into(),
            (true, 1) => "T^2".into(),
            (true, g) => format!("M_{g}"),
            (false, 1) => "RP^2".into(),
            (false, k) => format!("N_{k}"),
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SurfaceClass {
    type Err = Error;

    /// Accepts `S2`, `T2`, `RP2` (optionally with `^`), `M_g` and `N_k`
    /// (underscore optional).
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Domain(format!("unknown surface name {s:?}"));
        let compact: String = s.trim().chars().filter(|c| *c != '^').collect();
        match compact.as_str() {
            "S2" => return Ok(Self::orientable(0)),
            "T2" => return Ok(Self::orientable(1)),
            "RP2" => return Self::non_orientable(1),
            _ => {}
        }
        let (head, rest) = compact.split_at_checked(1).ok_or_else(unknown)?;
        let digits = rest.strip_prefix('_').unwrap_or(rest);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(unknown());
        }
        let genus: u32 = digits.parse().map_err(|_| unknown())?;
        match head {
            "M" => Ok(Self::orientable(genus)),
            "N" => Self::non_orientable(genus),
            _ => Err(unknown()),
        }
    }
}

/// Why a vertex link is not a single circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkDefect {
    Empty,
    NotAGraph,
    Degree { vertex: VertexLabel, degree: usize },
    Components(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceDefect {
    /// A maximal simplex that is not a triangle.
    NotPure(Simplex),
    EdgeDegree {
        edge: Simplex,
        triangles: usize,
    },
    Components(usize),
    Link {
        vertex: VertexLabel,
        defect: LinkDefect,
    },
}

impl fmt::Display for SurfaceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceDefect::NotPure(s) => write!(f, "maximal simplex {s} is not a triangle"),
            SurfaceDefect::EdgeDegree { edge, triangles } => {
                write!(f, "edge {edge} lies in {triangles} triangles")
            }
            SurfaceDefect::Components(n) => write!(f, "{n} strongly connected components"),
            SurfaceDefect::Link { vertex, defect } => match defect {
                LinkDefect::Empty => write!(f, "link of {vertex} is empty"),
                LinkDefect::NotAGraph => write!(f, "link of {vertex} is not a graph"),
                LinkDefect::Degree { vertex: w, degree } => {
                    write!(f, "link of {vertex} has vertex {w} of degree {degree}")
                }
                LinkDefect::Components(n) => write!(f, "link of {vertex} has {n} components"),
            },
        }
    }
}

/// Outcome of the closed-surface test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCheckReport {
    pub pure2: bool,
    pub every_edge_in_two_triangles: bool,
    pub strongly_connected: bool,
    pub all_links_single_circles: bool,
    pub verdict: bool,
    pub witnesses: Vec<SurfaceDefect>,
}

fn graph_components(g: &SimplicialComplex) -> usize {
    let mut seen = BTreeSet::new();
    let mut components = 0;
    for v in g.vertices() {
        if seen.contains(v) {
            continue;
        }
        components += 1;
        let mut stack = vec![v.clone()];
        seen.insert(v.clone());
        while let Some(x) = stack.pop() {
            for y in g.neighbors(&x).expect("vertex of g") {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    components
}

fn link_defect(k: &SimplicialComplex, v: &VertexLabel) -> Option<LinkDefect> {
    let link = k.link(v).expect("vertex of k");
    if link.is_empty() {
        return Some(LinkDefect::Empty);
    }
    if link.dim() != Some(1) {
        return Some(LinkDefect::NotAGraph);
    }
    for w in link.vertices() {
        let degree = link.degree(w).expect("vertex of link");
        if degree != 2 {
            return Some(LinkDefect::Degree {
                vertex: w.clone(),
                degree,
            });
        }
    }
    match graph_components(&link) {
        1 => None,
        n => Some(LinkDefect::Components(n)),
    }
}

/// Tests whether `k` is a closed connected surface: a pure 2-complex, every
/// edge in exactly two triangles, strongly connected, every vertex link a
/// single circle.
pub fn check_closed_surface(k: &SimplicialComplex) -> SurfaceCheckReport {
    let mut witnesses = Vec::new();

    let non_triangles: Vec<Simplex> = k
        .maximal_simplices()
        .into_iter()
        .filter(|s| s.dim() != 2)
        .collect();
    let pure2 = k.dim() == Some(2) && non_triangles.is_empty();
    witnesses.extend(non_triangles.into_iter().map(SurfaceDefect::NotPure));

    let mut every_edge_in_two_triangles = k.count(1) > 0;
    for e in k.simplices(1) {
        let n = k.edge_triangle_count(&e).expect("edge of k");
        if n != 2 {
            every_edge_in_two_triangles = false;
            witnesses.push(SurfaceDefect::EdgeDegree {
                edge: e,
                triangles: n,
            });
        }
    }

    let components = k.strongly_connected_components().len();
    let strongly_connected = components == 1;
    if !strongly_connected {
        witnesses.push(SurfaceDefect::Components(components));
    }

    let mut all_links_single_circles = !k.is_empty();
    for v in k.vertices() {
        if let Some(defect) = link_defect(k, v) {
            all_links_single_circles = false;
            witnesses.push(SurfaceDefect::Link {
                vertex: v.clone(),
                defect,
            });
        }
    }

    SurfaceCheckReport {
        pure2,
        every_edge_in_two_triangles,
        strongly_connected,
        all_links_single_circles,
        verdict: pure2
            && every_edge_in_two_triangles
            && strongly_connected
            && all_links_single_circles,
        witnesses,
    }
}

fn require_surface(k: &SimplicialComplex) -> Result<()> {
    let report = check_closed_surface(k);
    if report.verdict {
        return Ok(());
    }
    let first = report
        .witnesses
        .first()
        .map_or_else(|| "empty complex".to_string(), ToString::to_string);
    Err(Error::Precondition(format!(
        "not a closed surface: {first}"
    )))
}

/// Whether the triangles of a closed surface admit a coherent orientation.
pub fn orientable(k: &SimplicialComplex) -> Result<bool> {
    require_surface(k)?;
    let tris = k.cells(2);
    // sign of edge (i, j) of triangle t in ∂[t0 t1 t2] = [t1 t2] − [t0 t2] + [t0 t1]
    let induced = |t: &[usize], e: &[usize]| -> i8 {
        if e[0] == t[0] && e[1] == t[2] {
            -1
        } else {
            1
        }
    };
    let mut by_edge: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for (i, t) in tris.iter().enumerate() {
        for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
            by_edge.entry(e.to_vec()).or_default().push(i);
        }
    }
    let mut sign = vec![0i8; tris.len()];
    for seed in 0..tris.len() {
        if sign[seed] != 0 {
            continue;
        }
        sign[seed] = 1;
        let mut stack = vec![seed];
        while let Some(i) = stack.pop() {
            let t = &tris[i];
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                for &j in &by_edge[&e[..]] {
                    if j == i {
                        continue;
                    }
                    // neighbours must induce opposite orientations on the edge
                    let want = -sign[i] * induced(t, &e) * induced(&tris[j], &e);
                    if sign[j] == 0 {
                        sign[j] = want;
                        stack.push(j);
                    } else if sign[j] != want {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

pub fn classify_surface(k: &SimplicialComplex) -> Result<SurfaceClass> {
    let orientable = orientable(k)?;
    SurfaceClass::from_euler_characteristic(orientable, k.euler_characteristic())
}

/// Least integer `n` with `n ≥ (7 + √(49 − 24χ)) / 2`, in exact arithmetic.
pub fn rho(chi: i64) -> Result<u64> {
    if chi > 2 {
        return Err(Error::Domain(format!(
            "Euler characteristic {chi} exceeds 2, the maximum for a closed surface"
        )));
    }
    let disc = 49 - 24 * i128::from(chi);
    let disc = u128::try_from(disc).expect("non-negative for chi <= 2");
    let mut root = disc.isqrt();
    if root * root < disc {
        root += 1;
    }
    // 2n − 7 ≥ ⌈√disc⌉
    let n = (7 + root).div_ceil(2);
    u64::try_from(n).map_err(|_| Error::Domain(format!("bound for chi = {chi} overflows")))
}

/// Vertex count of a minimal triangulation of `s`.
pub fn delta(s: &SurfaceClass) -> u64 {
    let base = rho(s.euler_characteristic()).expect("surfaces have chi <= 2");
    if s.is_exceptional() {
        base + 1
    } else {
        base
    }
}

/// Minimal vertex count of a simplicial complex homotopy equivalent to `s`.
pub fn covering_type(s: &SurfaceClass) -> u64 {
    if *s == SurfaceClass::orientable(2) {
        9
    } else {
        delta(s)
    }
}

/// Identifies `v` with `v_prime` and fills the triangle `{[v], w, w_prime}`.
///
/// Requires a complex of dimension at most 2, `v` and `v_prime`
/// non-adjacent with vertex-disjoint links, `w` adjacent to `v`, `w_prime`
/// adjacent to `v_prime`, and `{w, w_prime}` an edge. The result has the
/// same mod-2 Betti numbers as `k`; this is checked.
pub fn identify_and_fill(
    k: &SimplicialComplex,
    v: &VertexLabel,
    v_prime: &VertexLabel,
    w: &VertexLabel,
    w_prime: &VertexLabel,
) -> Result<(SimplicialComplex, MoveRecord)> {
    let fail = |m: String| Err(Error::Precondition(m));
    if k.dim().is_some_and(|d| d > 2) {
        return fail("complex has dimension above 2".into());
    }
    for x in [v, v_prime, w, w_prime] {
        if k.vertex(x.as_str()).is_none() {
            return fail(format!("{x} is not a vertex"));
        }
    }
    if !k.are_adjacent(v, w) {
        return fail(format!("{w} is not in the link of {v}"));
    }
    if !k.are_adjacent(v_prime, w_prime) {
        return fail(format!("{w_prime} is not in the link of {v_prime}"));
    }
    if !k.are_adjacent(w, w_prime) {
        return fail(format!("{w} and {w_prime} are not joined by an edge"));
    }
    let (identified, ident) = k.identify_vertices(v, v_prime)?;
    let MoveKind::VertexIdentification { kept, merged, .. } = ident.kind else {
        unreachable!("identify_vertices records an identification");
    };
    let triangle = Simplex::new(vec![kept.clone(), w.clone(), w_prime.clone()])?;
    let result = identified.with_simplex(&triangle);
    let (before, after) = (betti_numbers(k), betti_numbers(&result));
    if before != after {
        return Err(Error::Inconsistency(format!(
            "identification changed Betti numbers from {before:?} to {after:?}"
        )));
    }
    let record = MoveRecord {
        kind: MoveKind::VertexIdentification {
            kept,
            merged,
            added: Some(triangle),
        },
        before: k.f_vector(),
        after: result.f_vector(),
    };
    Ok((result, record))
}

/// The result of [`build_nine_vertex_m2`] and the choices behind it.
#[derive(Clone, Debug)]
pub struct NineVertexM2 {
    pub complex: SimplicialComplex,
    pub v: VertexLabel,
    pub v_prime: VertexLabel,
    pub w: VertexLabel,
    pub w_prime: VertexLabel,
    pub record: MoveRecord,
}

/// Non-adjacent degree-4 pairs with disjoint links whose complement spans a
/// complete graph.
pub fn degree_four_pairs(t: &SimplicialComplex) -> Vec<(VertexLabel, VertexLabel)> {
    let verts = t.vertices();
    let mut out = Vec::new();
    for (i, v) in verts.iter().enumerate() {
        for v_prime in &verts[i + 1..] {
            let (Ok(dv), Ok(dw)) = (t.degree(v), t.degree(v_prime)) else {
                continue;
            };
            if dv != 4 || dw != 4 || t.are_adjacent(v, v_prime) {
                continue;
            }
            let lv: BTreeSet<_> = t.neighbors(v).unwrap_or_default().into_iter().collect();
            let lw: BTreeSet<_> = t
                .neighbors(v_prime)
                .unwrap_or_default()
                .into_iter()
                .collect();
            if !lv.is_disjoint(&lw) {
                continue;
            }
            let rest: Vec<&VertexLabel> =
                verts.iter().filter(|x| *x != v && *x != v_prime).collect();
            let complete = rest
                .iter()
                .enumerate()
                .all(|(a, x)| rest[a + 1..].iter().all(|y| t.are_adjacent(x, y)));
            if complete {
                out.push((v.clone(), v_prime.clone()));
            }
        }
    }
    out
}

/// Every `(w, w′)` with `w` adjacent to `v`, `w′` adjacent to `v′` and
/// `{w, w′}` an edge, in lexicographic order.
pub fn connecting_pairs(
    t: &SimplicialComplex,
    v: &VertexLabel,
    v_prime: &VertexLabel,
) -> Result<Vec<(VertexLabel, VertexLabel)>> {
    let lv = t.neighbors(v)?;
    let lw = t.neighbors(v_prime)?;
    Ok(lv
        .iter()
        .flat_map(|w| lw.iter().map(move |w2| (w.clone(), w2.clone())))
        .filter(|(w, w2)| t.are_adjacent(w, w2))
        .collect())
}

/// Builds a 9-vertex 2-complex with the homology and cup-product structure
/// of the genus-2 surface from a 10-vertex genus-2 triangulation whose
/// 1-skeleton has a distinguished pair of degree-4 vertices.
pub fn build_nine_vertex_m2(t: &SimplicialComplex) -> Result<NineVertexM2> {
    let reject = |m: String| Err(Error::UnexpectedTriangulation(m));
    let report = check_closed_surface(t);
    if !report.verdict {
        let why = report
            .witnesses
            .first()
            .map_or_else(|| "empty complex".to_string(), ToString::to_string);
        return reject(format!("input is not a closed surface ({why})"));
    }
    let class = classify_surface(t)?;
    if class != SurfaceClass::orientable(2) {
        return reject(format!("input is {class}, expected M_2"));
    }
    if t.num_vertices() != 10 {
        return reject(format!(
            "input has {} vertices, expected 10",
            t.num_vertices()
        ));
    }
    let pairs = degree_four_pairs(t);
    let (v, v_prime) = match pairs.as_slice() {
        [] => {
            return reject(
                "no non-adjacent pair of degree-4 vertices with disjoint links and a complete complement"
                    .into(),
            )
        }
        [p] => p.clone(),
        many => {
            let list: Vec<String> = many.iter().map(|(a, b)| format!("({a},{b})")).collect();
            return reject(format!(
                "degree-4 pair is not unique; candidates: {}",
                list.join(" ")
            ));
        }
    };
    let Some((w, w_prime)) = connecting_pairs(t, &v, &v_prime)?.into_iter().next() else {
        return reject(format!("no edge joins the links of {v} and {v_prime}"));
    };
    let (complex, record) = identify_and_fill(t, &v, &v_prime, &w, &w_prime)?;
    let betti = betti_numbers(&complex);
    if complex.num_vertices() != 9 || betti != [1, 4, 1] || !has_property_a(&complex) {
        return Err(Error::Inconsistency(format!(
            "constructed complex has {} vertices and Betti numbers {betti:?}",
            complex.num_vertices()
        )));
    }
    Ok(NineVertexM2 {
        complex,
        v,
        v_prime,
        w,
        w_prime,
        record,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(simplices: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(simplices.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn vl(s: &str) -> VertexLabel {
        VertexLabel::new(s).unwrap()
    }

    fn sphere() -> SimplicialComplex {
        cx(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ])
    }

    fn rho_by_scan(chi: i64) -> u64 {
        (1u64..)
            .find(|&n| {
                let lhs = 2 * n as i64 - 7;
                lhs >= 0 && lhs * lhs >= 49 - 24 * chi
            })
            .unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_by_scan(2), 4);
        assert_eq!(rho_by_scan(0), 7);
        assert_eq!(rho_by_scan(-2), 9);
        for chi in -400..=2 {
            assert_eq!(rho(chi).unwrap(), rho_by_scan(chi), "chi = {chi}");
        }
        assert!(matches!(rho(3), Err(Error::Domain(_))));
        assert!(rho(i64::MIN / 32).is_ok());
    }

    #[test]
    fn delta_and_covering_type() {
        let n2 = SurfaceClass::non_orientable(2).unwrap();
        let n3 = SurfaceClass::non_orientable(3).unwrap();
        let m2 = SurfaceClass::orientable(2);
        let t2 = SurfaceClass::orientable(1);
        assert_eq!(delta(&n2), 8);
        assert_eq!(delta(&n3), 9);
        assert_eq!(delta(&m2), 10);
        assert_eq!(covering_type(&t2), 7);
        assert_eq!(covering_type(&m2), 9);
        assert_eq!(covering_type(&n2), 8);
    }

    #[test]
    fn surface_names_parse() {
        for (name, class) in [
            ("S2", SurfaceClass::orientable(0)),
            ("S^2", SurfaceClass::orientable(0)),
            ("T^2", SurfaceClass::orientable(1)),
            ("RP2", SurfaceClass::non_orientable(1).unwrap()),
            ("M_2", SurfaceClass::orientable(2)),
            ("M3", SurfaceClass::orientable(3)),
            ("N_2", SurfaceClass::non_orientable(2).unwrap()),
        ] {
            assert_eq!(name.parse::<SurfaceClass>().unwrap(), class, "{name}");
            assert_eq!(class.name().parse::<SurfaceClass>().unwrap(), class);
        }
        for bad in ["", "X_2", "N_0", "M_", "M_-1", "S3"] {
            assert!(bad.parse::<SurfaceClass>().is_err(), "{bad}");
        }
    }

    #[test]
    fn class_invariants() {
        for g in 0..6 {
            let s = SurfaceClass::orientable(g);
            assert_eq!(s.euler_characteristic(), 2 - 2 * i64::from(g));
            let n = SurfaceClass::non_orientable(g + 1).unwrap();
            assert_eq!(n.euler_characteristic(), 1 - i64::from(g));
            assert_eq!(
                SurfaceClass::from_euler_characteristic(false, n.euler_characteristic()).unwrap(),
                n
            );
        }
        assert!(SurfaceClass::from_euler_characteristic(true, 1).is_err());
        assert!(SurfaceClass::from_euler_characteristic(false, 2).is_err());
    }

    #[test]
    fn surface_check_examples() {
        let r = check_closed_surface(&sphere());
        assert!(r.verdict && r.witnesses.is_empty());

        let pinched = cx(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
            &["a", "e", "f"],
            &["a", "e", "g"],
            &["a", "f", "g"],
            &["e", "f", "g"],
        ]);
        let r = check_closed_surface(&pinched);
        assert!(r.pure2 && r.every_edge_in_two_triangles);
        assert!(!r.strongly_connected);
        assert!(!r.verdict);
        assert!(r.witnesses.contains(&SurfaceDefect::Link {
            vertex: vl("a"),
            defect: LinkDefect::Components(2)
        }));

        let disk = cx(&[&["a", "b", "c"]]);
        let r = check_closed_surface(&disk);
        assert!(r.pure2 && !r.every_edge_in_two_triangles && !r.verdict);
        assert!(!check_closed_surface(&SimplicialComplex::empty()).verdict);
    }

    #[test]
    fn orientation_examples() {
        assert!(orientable(&sphere()).unwrap());
        assert_eq!(
            classify_surface(&sphere()).unwrap(),
            SurfaceClass::orientable(0)
        );
        assert!(orientable(&cx(&[&["a", "b", "c"]])).is_err());
    }

    #[test]
    fn identify_and_fill_examples() {
        let k = cx(&[&["v", "w", "x"], &["v2", "w2", "x2"], &["w", "w2"]]);
        let (out, rec) = identify_and_fill(&k, &vl("v"), &vl("v2"), &vl("w"), &vl("w2")).unwrap();
        assert_eq!(betti_numbers(&out), vec![1, 0, 0]);
        assert_eq!(out.f_vector(), vec![5, 7, 3]);
        assert_eq!(rec.replay(&k).unwrap(), out);

        let no_edge = cx(&[&["v", "w", "x"], &["v2", "w2", "x2"]]);
        assert!(matches!(
            identify_and_fill(&no_edge, &vl("v"), &vl("v2"), &vl("w"), &vl("w2")),
            Err(Error::Precondition(_))
        ));
        let adjacent = cx(&[
            &["v", "w", "x"],
            &["v2", "w2", "x2"],
            &["w", "w2"],
            &["v", "v2"],
        ]);
        assert!(matches!(
            identify_and_fill(&adjacent, &vl("v"), &vl("v2"), &vl("w"), &vl("w2")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn nine_vertex_rejects_wrong_surface() {
        assert!(matches!(
            build_nine_vertex_m2(&sphere()),
            Err(Error::UnexpectedTriangulation(_))
        ));
    }
}
