//! Generators for polygons, simplices and their skeleta, pyramids and
//! diminished trapezohedra, each with its self-dual structure where one
//! exists.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::complex::{CellComplex, ComplexFile};
use crate::error::{Error, Result};
use crate::linalg::Combinations;
use crate::selfdual::SelfDual;

/// A complex, with its self-dual structure when it has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Plain(CellComplex),
    SelfDual(SelfDual),
}

impl Structure {
    pub fn complex(&self) -> &CellComplex {
        match self {
            Structure::Plain(c) => c,
            Structure::SelfDual(s) => s.complex(),
        }
    }

    pub fn self_dual(&self) -> Option<&SelfDual> {
        match self {
            Structure::Plain(_) => None,
            Structure::SelfDual(s) => Some(s),
        }
    }

    pub fn to_file(&self) -> ComplexFile {
        match self {
            Structure::Plain(c) => ComplexFile::from_complex(c),
            Structure::SelfDual(s) => s.to_file(),
        }
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        Ok(match SelfDual::from_file(file)? {
            (_, Some(s)) => Structure::SelfDual(s),
            (c, None) => Structure::Plain(c),
        })
    }
}

/// `n`-gon with vertices `v1..vn`, edges `ei` from `vi` to `v(i+1)` with
/// `∂ei = v(i+1) − vi`, and face `f`.
///
/// `α(vi) = e(i+c)` and `α(ei) = v(i+c+1)` with `c = ⌊n/2⌋`. For odd `n` this
/// pairs each vertex with its opposite edge.
pub fn polygon(n: usize) -> Result<SelfDual> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("polygon needs n ≥ 3, got {n}")));
    }
    let v = |i: usize| format!("v{}", i % n + 1);
    let e = |i: usize| format!("e{}", i % n + 1);
    let mut b = CellComplex::builder().regular(true);
    for i in 0..n {
        b.cell(v(i), 0, &[]);
    }
    for i in 0..n {
        b.cell_owned(e(i), 1, vec![(v(i), -1), (v(i + 1), 1)]);
    }
    b.cell_owned("f".into(), 2, (0..n).map(|i| (e(i), 1)).collect());
    let complex = b.build()?;

    let c = n / 2;
    let mut map: Vec<(String, String)> = Vec::new();
    for i in 0..n {
        map.push((v(i), e(i + c)));
        map.push((e(i), v(i + c + 1)));
    }
    map.push(("f".into(), crate::complex::EMPTY_CELL.into()));
    SelfDual::from_ids(complex, &map.into_iter().collect(), 2)
}

fn subset_id(set: &[usize], n: usize) -> String {
    let labels: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    labels.join(if n <= 9 { "" } else { "." })
}

/// All nonempty subsets of `{1..n}` with at most `max_size` elements; the
/// subset `σ = {v₁ < … < v_r}` has `∂σ = Σⱼ (−1)^(j−1) (σ ∖ vⱼ)`.
fn simplicial(n: usize, max_size: usize) -> Result<CellComplex> {
    let mut b = CellComplex::builder().regular(true);
    for size in 1..=max_size.min(n) {
        for s in Combinations::new(n, size) {
            let s = s.as_slice();
            let boundary = if size == 1 {
                Vec::new()
            } else {
                (0..size)
                    .map(|j| {
                        let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect();
                        (subset_id(&face, n), if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            };
            b.cell_owned(subset_id(s, n), size as i32 - 1, boundary);
        }
    }
    b.build()
}

/// Full simplex on vertices `1..n` (a `(n−1)`-ball) with `α(σ) = [n] ∖ σ`.
/// Cell ids concatenate the vertex labels, e.g. `134`; for `n ≥ 10` they are
/// joined by dots.
pub fn simplex(n: usize) -> Result<SelfDual> {
    if n < 1 {
        return Err(Error::InvalidFamily("simplex needs at least one vertex".into()));
    }
    let complex = simplicial(n, n)?;
    let full: Vec<usize> = (0..n).collect();
    let mut alpha = vec![0; complex.len()];
    alpha[0] = complex.index_of(&subset_id(&full, n))?;
    for size in 1..=n {
        for s in Combinations::new(n, size) {
            let from = complex.index_of(&subset_id(s.as_slice(), n))?;
            let comp = s.complement(n);
            alpha[from] = if comp.is_empty() { 0 } else { complex.index_of(&subset_id(comp.as_slice(), n))? };
        }
    }
    SelfDual::new(complex, alpha, n as i32 - 1)
}

/// The `k`-skeleton of the simplex on `n` vertices.
pub fn simplex_skeleton(n: usize, k: usize) -> Result<CellComplex> {
    if n < 1 || k + 1 > n {
        return Err(Error::InvalidFamily(format!("skeleton dimension {k} needs k < n = {n}")));
    }
    simplicial(n, k + 1)
}

fn fresh_apex(c: &CellComplex) -> String {
    let mut name = "apex".to_string();
    let mut k = 1;
    while c.find(&name).is_some() {
        k += 1;
        name = format!("apex{k}");
    }
    name
}

/// Pyramid over a self-dual ball: every cell `σ` of the base (empty and top
/// cell included) gets a cone `σ⁺` with `∂σ⁺ = σ − (∂σ)⁺`, the cone over the
/// empty cell being the apex. The candidate `α′(σ) = α(σ)⁺`,
/// `α′(σ⁺) = α(σ)` is validated before returning.
pub fn pyramid(base: &SelfDual) -> Result<SelfDual> {
    let c = base.complex();
    let apex = fresh_apex(c);
    let cone = |i: usize| -> String {
        if i == 0 {
            apex.clone()
        } else {
            format!("{apex}+{}", c.cell(i).id())
        }
    };
    let mut b = CellComplex::builder().regular(c.is_regular());
    for cell in c.cells().iter().skip(1) {
        let boundary = cell
            .boundary()
            .iter()
            .filter(|&&(f, _)| !(cell.dim() == 0 && f == 0))
            .map(|&(f, k)| (c.cell(f).id().to_string(), k))
            .collect();
        b.cell_owned(cell.id().to_string(), cell.dim(), boundary);
    }
    for (i, cell) in c.cells().iter().enumerate() {
        let mut boundary = Vec::new();
        if i > 0 {
            boundary.push((cell.id().to_string(), 1));
            for &(f, k) in cell.boundary() {
                boundary.push((cone(f), -k));
            }
        }
        b.cell_owned(cone(i), cell.dim() + 1, boundary);
    }
    let complex = b.build()?;

    let mut alpha = vec![0; complex.len()];
    for i in 0..c.len() {
        let a = base.apply(i);
        let plain = complex.index_of(c.cell(i).id().to_string().as_str());
        let plain = if i == 0 { 0 } else { plain? };
        let coned = complex.index_of(&cone(i))?;
        let a_plain = if a == 0 { 0 } else { complex.index_of(c.cell(a).id())? };
        alpha[plain] = complex.index_of(&cone(a))?;
        alpha[coned] = a_plain;
    }
    SelfDual::new(complex, alpha, base.ball_dim() + 1)
}

/// Diminished trapezohedron over an `m`-gon, a 3-ball.
///
/// Vertices: `s`, `l0..`, `u0..`. Faces: the `m`-gon `P = u0 u1 …`, triangles
/// `ti = ui li u(i+1)` and quadrilaterals `ki = s li u(i+1) l(i+1)`. The
/// duality swaps `s ↔ P`, `li ↔ ti`, sends `ui ↦ k(i−1)`, `ki ↦ u(i+1)`, and
/// each edge to the edge joining the images of its two faces.
pub fn diminished_trapezohedron(m: usize) -> Result<SelfDual> {
    if m < 3 {
        return Err(Error::InvalidFamily(format!("trapezohedron needs m ≥ 3, got {m}")));
    }
    let l = |i: usize| format!("l{}", i % m);
    let u = |i: usize| format!("u{}", i % m);
    let k = |i: usize| format!("k{}", i % m);
    let t = |i: usize| format!("t{}", i % m);
    let edge_id = |a: &str, b: &str| format!("{a}-{b}");

    let mut vertices = vec!["s".to_string()];
    for i in 0..m {
        vertices.push(l(i));
        vertices.push(u(i));
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 0..m {
        edges.push(("s".into(), l(i)));
        edges.push((l(i), u(i)));
        edges.push((l(i), u(i + 1)));
        edges.push((u(i), u(i + 1)));
    }
    let mut faces: Vec<(String, Vec<String>)> = vec![("P".into(), (0..m).map(u).collect())];
    for i in 0..m {
        faces.push((t(i), vec![u(i), l(i), u(i + 1)]));
        faces.push((k(i), vec!["s".into(), l(i), u(i + 1), l(i + 1)]));
    }

    let mut by_ends: HashMap<(String, String), String> = HashMap::new();
    let mut b = CellComplex::builder().regular(true);
    for v in &vertices {
        b.cell(v.as_str(), 0, &[]);
    }
    for (a, z) in &edges {
        let id = edge_id(a, z);
        b.cell_owned(id.clone(), 1, vec![(a.clone(), -1), (z.clone(), 1)]);
        by_ends.insert((a.clone(), z.clone()), id.clone());
        by_ends.insert((z.clone(), a.clone()), id);
    }
    let mut face_boundaries: Vec<Vec<(String, i64)>> = Vec::new();
    for (_, cycle) in &faces {
        let r = cycle.len();
        let boundary = (0..r)
            .map(|j| {
                let (a, z) = (&cycle[j], &cycle[(j + 1) % r]);
                let id = by_ends[&(a.clone(), z.clone())].clone();
                let sign = if edges.iter().any(|(x, y)| x == a && y == z) { 1 } else { -1 };
                (id, sign)
            })
            .collect();
        face_boundaries.push(boundary);
    }
    let signs = orient_closed_surface(&face_boundaries)?;
    for ((id, _), boundary) in faces.iter().zip(&face_boundaries) {
        b.cell_owned(id.clone(), 2, boundary.clone());
    }
    b.cell_owned(
        "B".into(),
        3,
        faces.iter().zip(&signs).map(|((id, _), &s)| (id.clone(), s)).collect(),
    );
    let complex = b.build()?;

    let mut map: Vec<(String, String)> = vec![
        ("s".into(), "P".into()),
        ("P".into(), "s".into()),
        ("B".into(), crate::complex::EMPTY_CELL.into()),
    ];
    for i in 0..m {
        map.push((l(i), t(i)));
        map.push((t(i), l(i)));
        map.push((u(i), k(i + m - 1)));
        map.push((k(i), u(i + 1)));
    }
    let alpha_of: HashMap<String, String> = map.iter().cloned().collect();
    let up = complex.cofacets();
    for (a, z) in &edges {
        let e = complex.index_of(&edge_id(a, z))?;
        let ends: Vec<&String> = up[e]
            .iter()
            .map(|&f| &alpha_of[complex.cell(f).id()])
            .collect();
        if ends.len() != 2 {
            return Err(Error::InvalidFamily(format!("edge {a}-{z} lies on {} faces", ends.len())));
        }
        let image = by_ends
            .get(&(ends[0].clone(), ends[1].clone()))
            .ok_or_else(|| Error::InvalidFamily(format!("no edge joins {} and {}", ends[0], ends[1])))?;
        map.push((edge_id(a, z), image.clone()));
    }
    SelfDual::from_ids(complex, &map.into_iter().collect(), 3)
}

/// Signs `εF` with `Σ εF ∂F = 0` for a closed surface given by its face
/// boundaries, normalized so the first face gets +1.
fn orient_closed_surface(faces: &[Vec<(String, i64)>]) -> Result<Vec<i64>> {
    let mut on_edge: HashMap<&str, Vec<(usize, i64)>> = HashMap::new();
    for (f, boundary) in faces.iter().enumerate() {
        for (e, c) in boundary {
            on_edge.entry(e.as_str()).or_default().push((f, *c));
        }
    }
    let mut sign = vec![0i64; faces.len()];
    let mut queue = VecDeque::from([0]);
    sign[0] = 1;
    while let Some(f) = queue.pop_front() {
        for (e, c) in &faces[f] {
            for &(g, c2) in &on_edge[e.as_str()] {
                if g == f {
                    continue;
                }
                let want = -sign[f] * c * c2;
                if sign[g] == 0 {
                    sign[g] = want;
                    queue.push_back(g);
                } else if sign[g] != want {
                    return Err(Error::InvalidFamily("surface is not orientable".into()));
                }
            }
        }
    }
    if sign.contains(&0) {
        return Err(Error::InvalidFamily("surface is not connected".into()));
    }
    Ok(sign)
}

/// Shorthand names for generated complexes: `polygon5`, `simplex7`,
/// `simplex6-skel2`, `trapezohedron6`, `pyramid-<name>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Polygon(usize),
    Simplex(usize),
    SimplexSkeleton(usize, usize),
    Trapezohedron(usize),
    Pyramid(Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Structure> {
        Ok(match self {
            Family::Polygon(n) => Structure::SelfDual(polygon(*n)?),
            Family::Simplex(n) => Structure::SelfDual(simplex(*n)?),
            Family::SimplexSkeleton(n, k) => Structure::Plain(simplex_skeleton(*n, *k)?),
            Family::Trapezohedron(m) => Structure::SelfDual(diminished_trapezohedron(*m)?),
            Family::Pyramid(base) => match base.build()? {
                Structure::SelfDual(s) => Structure::SelfDual(pyramid(&s)?),
                Structure::Plain(_) => {
                    return Err(Error::InvalidFamily("pyramid needs a self-dual base".into()))
                }
            },
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Polygon(n) => write!(f, "polygon{n}"),
            Family::Simplex(n) => write!(f, "simplex{n}"),
            Family::SimplexSkeleton(n, k) => write!(f, "simplex{n}-skel{k}"),
            Family::Trapezohedron(m) => write!(f, "trapezohedron{m}"),
            Family::Pyramid(base) => write!(f, "pyramid-{base}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("unknown family `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("pyramid-") {
            return Ok(Family::Pyramid(Box::new(rest.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("polygon") {
            return Ok(Family::Polygon(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("trapezohedron") {
            return Ok(Family::Trapezohedron(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("simplex") {
            return Ok(match rest.split_once("-skel") {
                Some((n, k)) => Family::SimplexSkeleton(num(n)?, num(k)?),
                None => Family::Simplex(num(rest)?),
            });
        }
        Err(bad())
    }
}
