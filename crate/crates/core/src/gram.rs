//! The integer Gram matrix of the intersection form on the second homology
//! of the double plane branched along the (complexified) arrangement.
//!
//! Basis order: one class per bounded chamber (ascending [`ChamberId`]),
//! then one class per arrangement vertex (ascending [`VertexId`]).  The
//! chamber classes are the spheres described in [`crate::orientation`]; the
//! vertex classes are the exceptional curves resolving the nodes, and each
//! has self-intersection -2 and meets no other vertex class.
//!
//! Entry rules for a fixed orientation assignment:
//! * chamber diagonal: -2, independent of orientation;
//! * chamber vs chamber: 0 when the closed chambers are disjoint, -1 when
//!   they share an edge (any orientations), and at a single shared vertex 0
//!   or -1 according to whether the pair is coherent there;
//! * chamber vs vertex: -1 exactly when the vertex lies on the closed
//!   chamber, independent of orientation;
//! * vertex vs vertex: -2 on the diagonal, 0 off it.
//!
//! Reversing the orientation of one chamber replaces its class by the sum
//! of the vertex classes over its vertices minus itself.  That base change
//! is unimodular and gives a second, independent route to the Gram matrix
//! of any assignment from the standard one; see [`gram_via_flip_oracle`].

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chamber::{ChamberComplex, ChamberId, PairClass, VertexId};
use crate::mat::IntMat;
use crate::orientation::OrientationAssignment;

/// What a basis row stands for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisClass {
    Chamber(ChamberId),
    Vertex(VertexId),
}

impl fmt::Display for BasisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisClass::Chamber(c) => write!(f, "{}", c),
            BasisClass::Vertex(v) => write!(f, "{}", v),
        }
    }
}

/// Index mapping between basis rows and chamber/vertex classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisIndex {
    n_chambers: usize,
    n_vertices: usize,
}

impl BasisIndex {
    pub fn new(complex: &ChamberComplex) -> Self {
        BasisIndex {
            n_chambers: complex.bounded_count(),
            n_vertices: complex.vertex_count(),
        }
    }

    pub fn len(&self) -> usize {
        self.n_chambers + self.n_vertices
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn chamber_count(&self) -> usize {
        self.n_chambers
    }

    pub fn vertex_count(&self) -> usize {
        self.n_vertices
    }

    pub fn of_chamber(&self, c: ChamberId) -> usize {
        debug_assert!(c.0 < self.n_chambers);
        c.0
    }

    pub fn of_vertex(&self, v: VertexId) -> usize {
        debug_assert!(v.0 < self.n_vertices);
        self.n_chambers + v.0
    }

    pub fn class_of(&self, row: usize) -> BasisClass {
        assert!(row < self.len());
        if row < self.n_chambers {
            BasisClass::Chamber(ChamberId(row))
        } else {
            BasisClass::Vertex(VertexId(row - self.n_chambers))
        }
    }

    pub fn classes(&self) -> impl Iterator<Item = BasisClass> + '_ {
        (0..self.len()).map(|row| self.class_of(row))
    }
}

/// A Gram matrix together with its basis legend.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramMatrix {
    pub basis: BasisIndex,
    pub mat: IntMat,
}

/// A single intersection number in the chamber/vertex basis.
pub fn gram_entry(
    complex: &ChamberComplex,
    orientation: &OrientationAssignment,
    a: BasisClass,
    b: BasisClass,
) -> BigInt {
    let chamber_vertex = |c: ChamberId, v: VertexId| -> BigInt {
        if complex.chamber(c).has_vertex(v) {
            BigInt::from(-1)
        } else {
            BigInt::zero()
        }
    };
    match (a, b) {
        (BasisClass::Chamber(c1), BasisClass::Chamber(c2)) => {
            if c1 == c2 {
                return BigInt::from(-2);
            }
            match complex
                .classify_pair(c1, c2)
                .expect("gram entries index distinct bounded chambers")
            {
                PairClass::Disjoint => BigInt::zero(),
                PairClass::SharedEdge(_) => BigInt::from(-1),
                PairClass::MeetAtPoint(_) => {
                    if orientation.sign(c1) == orientation.sign(c2) {
                        BigInt::zero()
                    } else {
                        BigInt::from(-1)
                    }
                }
            }
        }
        (BasisClass::Chamber(c), BasisClass::Vertex(v))
        | (BasisClass::Vertex(v), BasisClass::Chamber(c)) => chamber_vertex(c, v),
        (BasisClass::Vertex(v1), BasisClass::Vertex(v2)) => {
            if v1 == v2 {
                BigInt::from(-2)
            } else {
                BigInt::zero()
            }
        }
    }
}

/// Assembles the full Gram matrix by the direct entry rules.
pub fn gram_matrix(complex: &ChamberComplex, orientation: &OrientationAssignment) -> GramMatrix {
    let basis = BasisIndex::new(complex);
    assert_eq!(orientation.len(), basis.chamber_count());
    let n = basis.len();
    let mut mat = IntMat::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let v = gram_entry(complex, orientation, basis.class_of(i), basis.class_of(j));
            mat[(i, j)] = v.clone();
            if i != j {
                mat[(j, i)] = v;
            }
        }
    }
    GramMatrix { basis, mat }
}

/// The unimodular base change from the standard orientation to `orientation`.
///
/// Rows of the returned matrix express the target basis in the standard
/// one: a kept chamber row is a unit row, a reversed chamber row has -1 in
/// its own column and +1 in the column of every vertex of the chamber, and
/// vertex rows are unit rows.  The matrix is an involution, hence
/// unimodular.
pub fn flip_base_change(complex: &ChamberComplex, orientation: &OrientationAssignment) -> IntMat {
    let basis = BasisIndex::new(complex);
    let mut t = IntMat::identity(basis.len());
    for c in orientation.flipped_chambers() {
        let row = basis.of_chamber(c);
        t[(row, row)] = BigInt::from(-1);
        for &v in &complex.chamber(c).vertices {
            t[(row, basis.of_vertex(v))] = BigInt::one();
        }
    }
    t
}

/// Recomputes the Gram matrix of `orientation` from the standard one by the
/// base change of [`flip_base_change`], bypassing the per-pair sign rules.
pub fn gram_via_flip_oracle(
    complex: &ChamberComplex,
    standard_gram: &GramMatrix,
    orientation: &OrientationAssignment,
) -> GramMatrix {
    let t = flip_base_change(complex, orientation);
    GramMatrix {
        basis: standard_gram.basis,
        mat: standard_gram.mat.congruence(&t),
    }
}
