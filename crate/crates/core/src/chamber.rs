//! The planar subdivision induced by a nodal arrangement.
//!
//! The subdivision is built as a half-edge structure on the one-point
//! compactification of the plane: every ray gets a vertex "at infinity", so
//! each face is a closed half-edge cycle and the usual Euler count `V - E +
//! F = 2` holds on the sphere.  Bounded faces are the chambers the rest of
//! the crate cares about; unbounded faces are kept with reduced data (no
//! sign vector, no interior point) so edge incidences stay total.
//!
//! Rotation conventions, all exact:
//! * at a finite vertex the outgoing half-edges are ordered
//!   counterclockwise by direction;
//! * at infinity they are ordered counterclockwise as seen from infinity,
//!   which is clockwise by outward ray direction, with ties between
//!   parallel rays broken by the perpendicular offset of their lines;
//! * the successor of a half-edge is the outgoing edge one step clockwise
//!   from its twin around the target vertex.
//!
//! With these choices every bounded face is traversed counterclockwise
//! (interior on the left), which the builder asserts via the shoelace sign.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::geometry::{dir_cmp, intersect, sign, validate, Arrangement, LineId, Point, Rat};

/// Index of an arrangement vertex (a transverse intersection point).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// Index of a subdivision edge (segment, ray, or full line).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

/// Index of a face of the subdivision; bounded chambers come first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChamberId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl fmt::Display for ChamberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

/// An intersection point of exactly two lines (the arrangement is nodal).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub point: Point,
    /// The two incident lines, ascending.
    pub lines: (LineId, LineId),
}

/// A maximal piece of a line not crossing any vertex.
///
/// Endpoints are ordered along the canonical direction of the line; `None`
/// marks an unbounded end.  `sides` are the faces left and right of that
/// direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub line: LineId,
    pub endpoints: (Option<VertexId>, Option<VertexId>),
    pub sides: (ChamberId, ChamberId),
}

impl Edge {
    /// True when `v` is one of the finite endpoints.
    pub fn touches(&self, v: VertexId) -> bool {
        self.endpoints.0 == Some(v) || self.endpoints.1 == Some(v)
    }

    pub fn is_segment(&self) -> bool {
        self.endpoints.0.is_some() && self.endpoints.1.is_some()
    }
}

/// A face of the subdivision.
///
/// For a bounded chamber, `vertices` and `boundary` run counterclockwise and
/// are aligned so `boundary[k]` joins `vertices[k]` to `vertices[k + 1]`;
/// `sign_vector` holds the side of every line, and `interior_point` is the
/// vertex centroid (interior by convexity).  Unbounded faces keep only their
/// finite boundary data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chamber {
    pub id: ChamberId,
    pub bounded: bool,
    pub sign_vector: Vec<i8>,
    pub vertices: Vec<VertexId>,
    pub boundary: Vec<EdgeId>,
    pub interior_point: Option<Point>,
}

impl Chamber {
    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertex ids of the chamber, sorted ascending.
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs
    }
}

/// Relative position of two distinct bounded chambers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairClass {
    /// Closed chambers do not meet.
    Disjoint,
    /// Closed chambers meet in exactly one arrangement vertex.
    MeetAtPoint(VertexId),
    /// Closed chambers meet along a common boundary edge.
    SharedEdge(EdgeId),
}

/// Error building a chamber complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BuildError {
    /// Fewer than two lines induce no vertices and no bounded chambers.
    TooFewLines(usize),
    /// Three lines meet at a point; witness triple attached.
    NotNodal(LineId, LineId, LineId),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::TooFewLines(n) => {
                write!(f, "need at least 2 lines, got {}", n)
            }
            BuildError::NotNodal(i, j, k) => {
                write!(f, "lines {}, {}, {} meet at one point", i, j, k)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BuildError {}

/// Error classifying a chamber pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairError {
    SameChamber(ChamberId),
    NotBounded(ChamberId),
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::SameChamber(c) => write!(f, "chamber {} paired with itself", c),
            PairError::NotBounded(c) => write!(f, "chamber {} is unbounded", c),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PairError {}

/// Half-edge record used only during construction.
struct HalfEdge {
    origin: Option<VertexId>,
    target: Option<VertexId>,
    line: usize,
    /// Travel direction is the canonical line direction when true.
    forward: bool,
    twin: usize,
    edge: usize,
}

/// The planar subdivision of an arrangement, with bounded chambers indexed
/// first in a canonical order (ascending sorted vertex lists).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChamberComplex {
    arrangement: Arrangement,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    chambers: Vec<Chamber>,
    n_bounded: usize,
}

impl ChamberComplex {
    /// Builds the subdivision; the arrangement must be nodal.
    pub fn build(arrangement: Arrangement) -> Result<Self, BuildError> {
        if arrangement.len() < 2 {
            return Err(BuildError::TooFewLines(arrangement.len()));
        }
        let report = validate(&arrangement);
        if let Some(&(i, j, k)) = report.concurrent_triples.first() {
            return Err(BuildError::NotNodal(i, j, k));
        }

        let n_lines = arrangement.len();

        // Vertices in lexicographic line-pair order; per line, the incident
        // vertices keyed by an affine parameter along the canonical direction.
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut on_line: Vec<Vec<(Rat, VertexId)>> = vec![Vec::new(); n_lines];
        for i in 0..n_lines {
            for j in (i + 1)..n_lines {
                let p = match intersect(&arrangement.lines()[i], &arrangement.lines()[j]) {
                    Ok(Some(p)) => p,
                    Ok(None) => continue,
                    Err(_) => unreachable!("arrangement lines are distinct"),
                };
                let vid = VertexId(vertices.len());
                for &l in &[i, j] {
                    let (dx, dy) = arrangement.lines()[l].direction();
                    let t = &dx * &p.x + &dy * &p.y;
                    on_line[l].push((t, vid));
                }
                vertices.push(Vertex {
                    point: p,
                    lines: (LineId(i), LineId(j)),
                });
            }
        }
        for list in &mut on_line {
            list.sort_by(|a, b| a.0.cmp(&b.0));
            // Nodality was checked above; equal parameters would mean a
            // concurrent triple.
            debug_assert!(list.windows(2).all(|w| w[0].0 != w[1].0));
        }

        // Edges and their half-edge pairs, line by line.
        let mut edges: Vec<(usize, Option<VertexId>, Option<VertexId>)> = Vec::new();
        let mut hes: Vec<HalfEdge> = Vec::new();
        for (l, list) in on_line.iter().enumerate() {
            let mut stops: Vec<Option<VertexId>> = Vec::with_capacity(list.len() + 2);
            stops.push(None);
            stops.extend(list.iter().map(|&(_, v)| Some(v)));
            stops.push(None);
            for w in stops.windows(2) {
                let (s, t) = (w[0], w[1]);
                let e = edges.len();
                edges.push((l, s, t));
                let fwd = hes.len();
                hes.push(HalfEdge {
                    origin: s,
                    target: t,
                    line: l,
                    forward: true,
                    twin: fwd + 1,
                    edge: e,
                });
                hes.push(HalfEdge {
                    origin: t,
                    target: s,
                    line: l,
                    forward: false,
                    twin: fwd,
                    edge: e,
                });
            }
        }

        // Rotation at each vertex: outgoing half-edges in counterclockwise
        // order.  Index n_vertices stands for the vertex at infinity.
        let n_verts = vertices.len();
        let travel = |h: &HalfEdge| -> (Rat, Rat) {
            let (dx, dy) = arrangement.lines()[h.line].direction();
            if h.forward {
                (dx, dy)
            } else {
                (-dx, -dy)
            }
        };
        let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n_verts + 1];
        for (h, he) in hes.iter().enumerate() {
            match he.origin {
                Some(v) => rotations[v.0].push(h),
                None => rotations[n_verts].push(h),
            }
        }
        for (v, rot) in rotations.iter_mut().enumerate() {
            if v < n_verts {
                rot.sort_by(|&x, &y| dir_cmp(&travel(&hes[x]), &travel(&hes[y])));
            } else {
                // A half-edge leaving infinity emanates from the ray end
                // opposite its travel direction.  Sorting by that outward
                // direction (ties by perpendicular line offset) lists the ray
                // ends counterclockwise in the plane; seen from infinity the
                // cyclic order is the reverse.
                let key = |h: usize| -> ((Rat, Rat), Rat) {
                    let (tx, ty) = travel(&hes[h]);
                    let u = (-tx, -ty);
                    let p = arrangement.lines()[hes[h].line].point_on();
                    let offset = -&u.1 * &p.x + &u.0 * &p.y;
                    (u, offset)
                };
                rot.sort_by(|&x, &y| {
                    let (ux, ox) = key(x);
                    let (uy, oy) = key(y);
                    dir_cmp(&ux, &uy).then_with(|| ox.cmp(&oy))
                });
                rot.reverse();
            }
        }
        let mut pos = vec![0usize; hes.len()];
        for rot in &rotations {
            for (k, &h) in rot.iter().enumerate() {
                pos[h] = k;
            }
        }
        debug_assert!(rotations[..n_verts].iter().all(|r| r.len() == 4));

        // Face successor: one step clockwise from the twin around the target.
        let next: Vec<usize> = (0..hes.len())
            .map(|h| {
                let t = hes[h].target.map_or(n_verts, |v| v.0);
                let rot = &rotations[t];
                rot[(pos[hes[h].twin] + rot.len() - 1) % rot.len()]
            })
            .collect();

        // Face cycles, in half-edge index order.
        let mut face_of = vec![usize::MAX; hes.len()];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..hes.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = cycles.len();
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                debug_assert_eq!(face_of[h], usize::MAX, "face cycles must not cross");
                face_of[h] = f;
                cycle.push(h);
                h = next[h];
                if h == start {
                    break;
                }
            }
            cycles.push(cycle);
        }

        // Euler count on the sphere guards the rotation conventions.
        assert_eq!(
            (n_verts + 1) as i64 - edges.len() as i64 + cycles.len() as i64,
            2,
            "subdivision is not a sphere"
        );

        // Assemble chambers: bounded faces in canonical order, then the rest.
        let mut bounded_faces: Vec<(Vec<VertexId>, usize)> = Vec::new();
        let mut unbounded_faces: Vec<usize> = Vec::new();
        for (f, cycle) in cycles.iter().enumerate() {
            let touches_infinity = cycle
                .iter()
                .any(|&h| hes[h].origin.is_none() || hes[h].target.is_none());
            if touches_infinity {
                unbounded_faces.push(f);
            } else {
                let mut key: Vec<VertexId> =
                    cycle.iter().map(|&h| hes[h].origin.unwrap()).collect();
                key.sort_unstable();
                bounded_faces.push((key, f));
            }
        }
        bounded_faces.sort();
        debug_assert!(
            bounded_faces.windows(2).all(|w| w[0].0 != w[1].0),
            "bounded chambers have distinct vertex sets"
        );

        let mut face_to_chamber = vec![ChamberId(usize::MAX); cycles.len()];
        let mut chambers: Vec<Chamber> = Vec::new();
        for (_, f) in &bounded_faces {
            let id = ChamberId(chambers.len());
            face_to_chamber[*f] = id;
            let cycle = &cycles[*f];
            assert!(cycle.len() >= 3, "bounded face with fewer than 3 edges");

            // Start the stored cycle at the minimal vertex for determinism.
            let verts: Vec<VertexId> = cycle.iter().map(|&h| hes[h].origin.unwrap()).collect();
            let start = verts
                .iter()
                .enumerate()
                .min_by_key(|&(_, v)| v)
                .map(|(k, _)| k)
                .unwrap();
            let verts: Vec<VertexId> = (0..verts.len())
                .map(|k| verts[(start + k) % verts.len()])
                .collect();
            let bedges: Vec<EdgeId> = (0..cycle.len())
                .map(|k| EdgeId(hes[cycle[(start + k) % cycle.len()]].edge))
                .collect();

            // Shoelace sign validates the counterclockwise convention.
            let mut area2 = Rat::zero();
            for k in 0..verts.len() {
                let p = &vertices[verts[k].0].point;
                let q = &vertices[verts[(k + 1) % verts.len()].0].point;
                area2 += &p.x * &q.y - &q.x * &p.y;
            }
            assert!(sign(&area2) == 1, "bounded face traversed clockwise");

            let k = Rat::from_integer(verts.len().into());
            let mut cx = Rat::zero();
            let mut cy = Rat::zero();
            for v in &verts {
                cx += &vertices[v.0].point.x;
                cy += &vertices[v.0].point.y;
            }
            let centroid = Point::new(cx / &k, cy / &k);
            let sign_vector = arrangement.sign_vector(&centroid);
            assert!(
                sign_vector.iter().all(|&s| s != 0),
                "chamber centroid lies on a line"
            );

            chambers.push(Chamber {
                id,
                bounded: true,
                sign_vector,
                vertices: verts,
                boundary: bedges,
                interior_point: Some(centroid),
            });
        }
        let n_bounded = chambers.len();
        for &f in &unbounded_faces {
            let id = ChamberId(chambers.len());
            face_to_chamber[f] = id;
            let cycle = &cycles[f];
            let verts: Vec<VertexId> = cycle.iter().filter_map(|&h| hes[h].origin).collect();
            let bedges: Vec<EdgeId> = cycle.iter().map(|&h| EdgeId(hes[h].edge)).collect();
            chambers.push(Chamber {
                id,
                bounded: false,
                sign_vector: Vec::new(),
                vertices: verts,
                boundary: bedges,
                interior_point: None,
            });
        }

        // The forward half-edge keeps its face on the left of the canonical
        // direction.
        let out_edges: Vec<Edge> = edges
            .iter()
            .enumerate()
            .map(|(e, &(l, s, t))| {
                let fwd = 2 * e;
                let left = face_to_chamber[face_of[fwd]];
                let right = face_to_chamber[face_of[hes[fwd].twin]];
                debug_assert_eq!(hes[fwd].edge, e);
                Edge {
                    line: LineId(l),
                    endpoints: (s, t),
                    sides: (left, right),
                }
            })
            .collect();

        Ok(ChamberComplex {
            arrangement,
            vertices,
            edges: out_edges,
            chambers,
            n_bounded,
        })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    /// All faces, bounded first.
    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, c: ChamberId) -> &Chamber {
        &self.chambers[c.0]
    }

    pub fn bounded_count(&self) -> usize {
        self.n_bounded
    }

    pub fn bounded_chambers(&self) -> impl Iterator<Item = &Chamber> {
        self.chambers[..self.n_bounded].iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// How two distinct bounded chambers meet.
    ///
    /// The closures of two chambers intersect in nothing, one vertex, or one
    /// full edge; the three cases are told apart by the number of shared
    /// vertices (0, 1, or 2: a shared convex arc through two vertices is
    /// forced to be the connecting edge).
    pub fn classify_pair(&self, a: ChamberId, b: ChamberId) -> Result<PairClass, PairError> {
        if a == b {
            return Err(PairError::SameChamber(a));
        }
        for c in [a, b] {
            if c.0 >= self.n_bounded {
                return Err(PairError::NotBounded(c));
            }
        }
        let va = self.chambers[a.0].vertex_set();
        let vb = self.chambers[b.0].vertex_set();
        let mut shared = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < va.len() && j < vb.len() {
            match va[i].cmp(&vb[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    shared.push(va[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        match shared.len() {
            0 => Ok(PairClass::Disjoint),
            1 => Ok(PairClass::MeetAtPoint(shared[0])),
            2 => {
                let e = self.chambers[a.0]
                    .boundary
                    .iter()
                    .copied()
                    .find(|&e| {
                        self.edges[e.0].touches(shared[0]) && self.edges[e.0].touches(shared[1])
                    })
                    .expect("two shared vertices must join along a boundary edge");
                debug_assert!(self.chambers[b.0].boundary.contains(&e));
                debug_assert!({
                    let s = self.edges[e.0].sides;
                    (s.0 == a && s.1 == b) || (s.0 == b && s.1 == a)
                });
                Ok(PairClass::SharedEdge(e))
            }
            n => unreachable!("bounded chambers share {} vertices", n),
        }
    }

    /// Histogram of bounded chambers by boundary length.
    pub fn ngon_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for c in self.bounded_chambers() {
            *profile.entry(c.boundary.len()).or_insert(0) += 1;
        }
        profile
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{triangle, Line};

    fn complex(lines: Vec<Line>) -> ChamberComplex {
        ChamberComplex::build(Arrangement::new(lines).unwrap()).unwrap()
    }

    #[test]
    fn triangle_complex_counts() {
        let cc = ChamberComplex::build(triangle()).unwrap();
        assert_eq!(cc.vertex_count(), 3);
        assert_eq!(cc.edges().len(), 9);
        assert_eq!(cc.chambers().len(), 7);
        assert_eq!(cc.bounded_count(), 1);

        let c = cc.chamber(ChamberId(0));
        assert!(c.bounded);
        assert_eq!(c.vertices.len(), 3);
        assert_eq!(c.boundary.len(), 3);
        assert_eq!(c.vertices[0], VertexId(0));
        assert_eq!(
            c.interior_point.as_ref().unwrap(),
            &Point::new(crate::geometry::rat(1, 3), crate::geometry::rat(1, 3))
        );
        // Interior of the triangle: x > 0, y > 0, x + y < 1.
        assert_eq!(c.sign_vector, vec![1, 1, -1]);
        assert_eq!(cc.ngon_profile(), BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn triangle_edges_are_labelled() {
        let cc = ChamberComplex::build(triangle()).unwrap();
        let segments = cc.edges().iter().filter(|e| e.is_segment()).count();
        assert_eq!(segments, 3);
        // Every segment flanks the single bounded chamber.
        for e in cc.edges().iter().filter(|e| e.is_segment()) {
            assert!(e.sides.0 == ChamberId(0) || e.sides.1 == ChamberId(0));
        }
    }

    #[test]
    fn two_lines_give_no_bounded_chamber() {
        let cc = complex(vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
        ]);
        assert_eq!(cc.vertex_count(), 1);
        assert_eq!(cc.edges().len(), 4);
        assert_eq!(cc.chambers().len(), 4);
        assert_eq!(cc.bounded_count(), 0);
    }

    #[test]
    fn parallel_strip_with_transversal() {
        // Two horizontals and one slanted line: one vertex short of a
        // triangle, so still no bounded chamber.
        let cc = complex(vec![
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(0, 1, -1).unwrap(),
            Line::from_ints(1, -1, 0).unwrap(),
        ]);
        assert_eq!(cc.vertex_count(), 2);
        assert_eq!(cc.edges().len(), 7);
        assert_eq!(cc.chambers().len(), 6);
        assert_eq!(cc.bounded_count(), 0);
    }

    #[test]
    fn square_from_two_parallel_pairs() {
        let cc = complex(vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(1, 0, -1).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(0, 1, -1).unwrap(),
        ]);
        assert_eq!(cc.vertex_count(), 4);
        assert_eq!(cc.bounded_count(), 1);
        let c = cc.chamber(ChamberId(0));
        assert_eq!(c.boundary.len(), 4);
        assert_eq!(
            c.interior_point.as_ref().unwrap(),
            &Point::new(crate::geometry::rat(1, 2), crate::geometry::rat(1, 2))
        );
        assert_eq!(cc.ngon_profile(), BTreeMap::from([(4, 1)]));
    }

    #[test]
    fn rejects_concurrent_lines() {
        let arr = Arrangement::new(vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(1, 1, 0).unwrap(),
        ])
        .unwrap();
        assert_eq!(
            ChamberComplex::build(arr),
            Err(BuildError::NotNodal(LineId(0), LineId(1), LineId(2)))
        );
    }

    #[test]
    fn four_general_lines_classification() {
        // x = 0, y = 0, x + y = 1, and a fourth line cutting off more cells:
        // x - y = 1/2 is not concurrent with any vertex.
        let cc = complex(vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(1, 1, -1).unwrap(),
            Line::new(
                crate::geometry::rat(1, 1),
                crate::geometry::rat(-1, 1),
                crate::geometry::rat(-1, 2),
            )
            .unwrap(),
        ]);
        // Counts for N = 4 nodal lines, no parallels: 3 bounded chambers,
        // 6 vertices.
        assert_eq!(cc.vertex_count(), 6);
        assert_eq!(cc.bounded_count(), 3);

        // Every pair of distinct bounded chambers classifies cleanly, and
        // the relation is symmetric.
        for a in 0..cc.bounded_count() {
            for b in 0..cc.bounded_count() {
                let (a, b) = (ChamberId(a), ChamberId(b));
                if a == b {
                    assert!(cc.classify_pair(a, b).is_err());
                    continue;
                }
                let ab = cc.classify_pair(a, b).unwrap();
                let ba = cc.classify_pair(b, a).unwrap();
                assert_eq!(ab, ba);
            }
        }
        // The subdivision of the triangle by the fourth line yields at least
        // one shared edge.
        let mut shared = 0;
        for a in 0..cc.bounded_count() {
            for b in (a + 1)..cc.bounded_count() {
                if let PairClass::SharedEdge(_) =
                    cc.classify_pair(ChamberId(a), ChamberId(b)).unwrap()
                {
                    shared += 1;
                }
            }
        }
        assert!(shared >= 1);
    }

    #[test]
    fn unbounded_faces_carry_no_interior_data() {
        let cc = ChamberComplex::build(triangle()).unwrap();
        for c in cc.chambers().iter().skip(cc.bounded_count()) {
            assert!(!c.bounded);
            assert!(c.sign_vector.is_empty());
            assert!(c.interior_point.is_none());
        }
        assert!(cc.classify_pair(ChamberId(0), ChamberId(3)).is_err());
    }
}
