//! Oracles and complex generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use covering_type::bundled;
use covering_type::{Simplex, SimplicialComplex, SurfaceClass};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn labels(s: &Simplex) -> Vec<String> {
    s.vertices()
        .iter()
        .map(|v| v.as_str().to_string())
        .collect()
}

pub fn complex_of(maximal: &[Vec<String>]) -> SimplicialComplex {
    SimplicialComplex::from_maximal(maximal.iter().map(|m| m.iter().map(String::as_str)))
        .expect("generated simplices are valid")
}

fn maximal_labels(k: &SimplicialComplex) -> Vec<Vec<String>> {
    k.maximal_simplices().iter().map(labels).collect()
}

/// Mod-2 rank of a dense 0/1 integer matrix by textbook elimination.
pub fn dense_rank_mod2(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] % 2 != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] % 2 != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + y) % 2;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from scratch: every face of every maximal simplex is
/// enumerated as a vertex subset and boundary matrices are built densely.
pub fn oracle_betti(k: &SimplicialComplex) -> Vec<usize> {
    let mut faces: Vec<BTreeSet<Vec<String>>> = Vec::new();
    for m in maximal_labels(k) {
        let n = m.len();
        for mask in 1u32..(1 << n) {
            let face: Vec<String> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| m[i].clone())
                .collect();
            let d = face.len() - 1;
            if faces.len() <= d {
                faces.resize_with(d + 1, BTreeSet::new);
            }
            faces[d].insert(face);
        }
    }
    let index: Vec<BTreeMap<&Vec<String>, usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    let mut ranks = vec![0; faces.len() + 1];
    for d in 1..faces.len() {
        let mut m = vec![vec![0i64; faces[d].len()]; faces[d - 1].len()];
        for (j, f) in faces[d].iter().enumerate() {
            for skip in 0..f.len() {
                let mut g = f.clone();
                g.remove(skip);
                m[index[d - 1][&g]][j] += 1;
            }
        }
        ranks[d] = dense_rank_mod2(m);
    }
    (0..faces.len())
        .map(|d| faces[d].len() - ranks[d] - ranks[d + 1])
        .collect()
}

/// A random complex on `n` vertices built from up to `m` random simplices of
/// dimension at most `max_dim`.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_dim: usize,
) -> SimplicialComplex {
    let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let count = rng.gen_range(1..=m.max(1));
    let simplices: Vec<Vec<String>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n));
            verts.choose_multiple(rng, size).cloned().collect()
        })
        .collect();
    complex_of(&simplices)
}

/// The bundled closed surfaces with their classes.
pub fn bundled_surfaces() -> Vec<(&'static str, SimplicialComplex, SurfaceClass)> {
    vec![
        (
            "sphere",
            bundled::load(bundled::SPHERE),
            SurfaceClass::orientable(0),
        ),
        (
            "projective_plane",
            bundled::load(bundled::PROJECTIVE_PLANE),
            SurfaceClass::non_orientable(1).unwrap(),
        ),
        (
            "torus",
            bundled::load(bundled::TORUS),
            SurfaceClass::orientable(1),
        ),
        (
            "klein_bottle",
            bundled::load(bundled::KLEIN_BOTTLE),
            SurfaceClass::non_orientable(2).unwrap(),
        ),
        (
            "n3",
            bundled::load(bundled::N3),
            SurfaceClass::non_orientable(3).unwrap(),
        ),
        (
            "genus2",
            bundled::load(bundled::GENUS2),
            SurfaceClass::orientable(2),
        ),
    ]
}

fn fresh(k: &SimplicialComplex, next: &mut usize) -> String {
    loop {
        let name = format!("x{next}");
        *next += 1;
        if k.vertex(&name).is_none() {
            return name;
        }
    }
}

fn replace_maximal(
    k: &SimplicialComplex,
    remove: &[Vec<String>],
    add: Vec<Vec<String>>,
) -> SimplicialComplex {
    let mut maximal: Vec<Vec<String>> = maximal_labels(k)
        .into_iter()
        .filter(|m| !remove.contains(m))
        .collect();
    maximal.extend(add);
    complex_of(&maximal)
}

/// Moves that preserve the homotopy type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    /// New vertex inside a maximal triangle.
    SubdivideTriangle,
    /// New vertex on an edge whose cofaces are all maximal triangles.
    SubdivideEdge,
    /// Solid tetrahedron on an existing triangle.
    ConeTriangle,
    /// Cone over the closed star of a vertex.
    ConeStar,
    /// New triangle on an existing edge.
    Fin,
    /// New edge to a new vertex.
    Pendant,
}

pub const GROWTHS: [Growth; 6] = [
    Growth::SubdivideTriangle,
    Growth::SubdivideEdge,
    Growth::ConeTriangle,
    Growth::ConeStar,
    Growth::Fin,
    Growth::Pendant,
];

pub fn grow<R: Rng>(
    rng: &mut R,
    k: &SimplicialComplex,
    how: Growth,
    counter: &mut usize,
) -> SimplicialComplex {
    let x = fresh(k, counter);
    let maximal = maximal_labels(k);
    let triangles: Vec<Vec<String>> = maximal.iter().filter(|m| m.len() == 3).cloned().collect();
    let all_triangles: Vec<Vec<String>> = k.simplices(2).iter().map(labels).collect();
    let edges: Vec<Vec<String>> = k.simplices(1).iter().map(labels).collect();
    let with = |s: &[String], extra: &str| -> Vec<String> {
        let mut v = s.to_vec();
        v.push(extra.to_string());
        v
    };
    match how {
        Growth::SubdivideTriangle if !triangles.is_empty() => {
            let t = triangles.choose(rng).unwrap().clone();
            let add = (0..3)
                .map(|skip| {
                    let mut e = t.clone();
                    e.remove(skip);
                    with(&e, &x)
                })
                .collect();
            replace_maximal(k, &[t], add)
        }
        Growth::SubdivideEdge => {
            let candidates: Vec<&Vec<String>> = edges
                .iter()
                .filter(|e| {
                    let cofaces: Vec<&Vec<String>> = maximal
                        .iter()
                        .filter(|m| m.len() > 2 && e.iter().all(|v| m.contains(v)))
                        .collect();
                    !cofaces.is_empty()
                        && cofaces.iter().all(|m| m.len() == 3)
                        && all_triangles
                            .iter()
                            .filter(|t| e.iter().all(|v| t.contains(v)))
                            .all(|t| triangles.contains(t))
                })
                .collect();
            let Some(e) = candidates.choose(rng) else {
                return grow(rng, k, Growth::Fin, counter);
            };
            let cofaces: Vec<Vec<String>> = triangles
                .iter()
                .filter(|t| e.iter().all(|v| t.contains(v)))
                .cloned()
                .collect();
            let mut add = Vec::new();
            for t in &cofaces {
                let third: Vec<String> = t.iter().filter(|v| !e.contains(v)).cloned().collect();
                add.push(vec![e[0].clone(), third[0].clone(), x.clone()]);
                add.push(vec![e[1].clone(), third[0].clone(), x.clone()]);
            }
            replace_maximal(k, &cofaces, add)
        }
        Growth::ConeTriangle if !all_triangles.is_empty() => {
            let t = all_triangles.choose(rng).unwrap();
            replace_maximal(k, &[], vec![with(t, &x)])
        }
        Growth::ConeStar => {
            let v = k.vertices().choose(rng).unwrap().as_str().to_string();
            let star: Vec<Vec<String>> = maximal
                .iter()
                .filter(|m| m.contains(&v))
                .map(|m| with(m, &x))
                .collect();
            replace_maximal(k, &[], star)
        }
        Growth::Fin if !edges.is_empty() => {
            let e = edges.choose(rng).unwrap();
            replace_maximal(k, &[], vec![with(e, &x)])
        }
        _ => {
            let v = k.vertices().choose(rng).unwrap().as_str().to_string();
            replace_maximal(k, &[], vec![vec![v, x]])
        }
    }
}

/// Applies `steps` random growth moves.
pub fn grow_randomly<R: Rng>(
    rng: &mut R,
    k: &SimplicialComplex,
    steps: usize,
) -> SimplicialComplex {
    let mut counter = 0;
    let mut k = k.clone();
    for _ in 0..steps {
        let how = *GROWTHS.choose(rng).unwrap();
        k = grow(rng, &k, how, &mut counter);
    }
    k
}

/// Barycentric subdivision, vertices named by the simplices they replace.
pub fn barycentric(k: &SimplicialComplex) -> SimplicialComplex {
    fn chains(s: &[String], out: &mut Vec<Vec<String>>, prefix: &mut Vec<String>) {
        let name = format!("[{}]", s.join("."));
        prefix.push(name);
        if s.len() == 1 {
            out.push(prefix.clone());
        } else {
            for skip in 0..s.len() {
                let mut f = s.to_vec();
                f.remove(skip);
                chains(&f, out, prefix);
            }
        }
        prefix.pop();
    }
    let mut out = Vec::new();
    for m in maximal_labels(k) {
        chains(&m, &mut out, &mut Vec::new());
    }
    complex_of(&out)
}
