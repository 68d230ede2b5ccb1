//! Orientation data for the vanishing cycles carried by bounded chambers.
//!
//! Each bounded chamber contributes a 2-sphere class in the double plane:
//! the two preimage sheets over the chamber, capped off over its boundary.
//! Orienting that class amounts to one sign per chamber, recorded here as
//! an [`OrientationAssignment`].
//!
//! Two cycles that meet at a single arrangement vertex intersect either in
//! 0 or in -1 depending on whether their orientations agree there.  The
//! reference ("standard") choice orients every cycle by the sign of the
//! defining product of the arrangement on the chamber interior, and that
//! collection is coherent: with standard orientations every point-meeting
//! pair contributes 0.  A general assignment is coherent at a vertex
//! exactly when the two chambers carry equal signs relative to standard.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chamber::{Chamber, ChamberComplex, ChamberId, PairClass};
use crate::geometry::Arrangement;

/// One sign per bounded chamber, indexed by [`ChamberId`] order.
///
/// The sign is relative to the standard orientation: `+1` keeps it, `-1`
/// reverses it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientationAssignment {
    eps: Vec<i8>,
}

/// Error constructing or querying orientation data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrientationError {
    /// Sign list length does not match the bounded chamber count.
    LengthMismatch { expected: usize, got: usize },
    /// A sign other than +1 or -1.
    BadSign { index: usize, value: i8 },
    /// Coherence is only defined for chambers meeting at a point.
    NotAPointPair,
}

impl fmt::Display for OrientationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationError::LengthMismatch { expected, got } => {
                write!(f, "expected {} signs, got {}", expected, got)
            }
            OrientationError::BadSign { index, value } => {
                write!(f, "sign at {} must be +1 or -1, got {}", index, value)
            }
            OrientationError::NotAPointPair => {
                write!(
                    f,
                    "coherence is defined only for chambers meeting at one point"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OrientationError {}

impl OrientationAssignment {
    /// The standard orientation on every bounded chamber.
    pub fn standard(complex: &ChamberComplex) -> Self {
        OrientationAssignment {
            eps: vec![1; complex.bounded_count()],
        }
    }

    /// Builds an assignment from explicit signs, one per bounded chamber.
    pub fn from_signs(complex: &ChamberComplex, signs: &[i8]) -> Result<Self, OrientationError> {
        if signs.len() != complex.bounded_count() {
            return Err(OrientationError::LengthMismatch {
                expected: complex.bounded_count(),
                got: signs.len(),
            });
        }
        for (index, &value) in signs.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(OrientationError::BadSign { index, value });
            }
        }
        Ok(OrientationAssignment {
            eps: signs.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    /// Sign of the chamber relative to the standard orientation.
    pub fn sign(&self, c: ChamberId) -> i8 {
        self.eps[c.0]
    }

    pub fn signs(&self) -> &[i8] {
        &self.eps
    }

    /// The assignment with the orientation of `c` reversed.
    pub fn with_flipped(&self, c: ChamberId) -> Self {
        let mut eps = self.eps.clone();
        eps[c.0] = -eps[c.0];
        OrientationAssignment { eps }
    }

    /// Chambers carrying the reversed orientation.
    pub fn flipped_chambers(&self) -> impl Iterator<Item = ChamberId> + '_ {
        self.eps
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == -1)
            .map(|(i, _)| ChamberId(i))
    }
}

/// Sign of the defining product of the arrangement on a chamber interior.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChamberSign {
    pub chamber: ChamberId,
    pub sign: i8,
}

/// The product of the per-line sides over a bounded chamber interior.
///
/// Edge-adjacent chambers have opposite signs (they differ on one line);
/// chambers meeting at a vertex have equal signs (they differ on two).
pub fn chamber_sign(arrangement: &Arrangement, chamber: &Chamber) -> i8 {
    assert!(chamber.bounded, "chamber sign requires a bounded chamber");
    debug_assert_eq!(chamber.sign_vector.len(), arrangement.len());
    let product: i32 = chamber.sign_vector.iter().map(|&s| s as i32).product();
    debug_assert!(product == 1 || product == -1);
    product as i8
}

/// Signs of all bounded chambers, in id order.
pub fn chamber_signs(complex: &ChamberComplex) -> Vec<ChamberSign> {
    complex
        .bounded_chambers()
        .map(|c| ChamberSign {
            chamber: c.id,
            sign: chamber_sign(complex.arrangement(), c),
        })
        .collect()
}

/// Whether two oriented cycles meeting at one point are coherent there.
///
/// `e1` and `e2` are the signs of the two chambers in the assignment under
/// test.  The standard collection is coherent, and reversing one chamber
/// breaks coherence exactly at its point-meeting partners, so the test is
/// sign equality.
pub fn coherent(pair: &PairClass, e1: i8, e2: i8) -> Result<bool, OrientationError> {
    match pair {
        PairClass::MeetAtPoint(_) => Ok(e1 == e2),
        _ => Err(OrientationError::NotAPointPair),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::VertexId;
    use crate::geometry::{triangle, Line};

    #[test]
    fn standard_assignment_is_all_plus() {
        let cc = ChamberComplex::build(triangle()).unwrap();
        let oa = OrientationAssignment::standard(&cc);
        assert_eq!(oa.len(), 1);
        assert_eq!(oa.sign(ChamberId(0)), 1);
        assert_eq!(oa.flipped_chambers().count(), 0);

        let flipped = oa.with_flipped(ChamberId(0));
        assert_eq!(flipped.sign(ChamberId(0)), -1);
        assert_eq!(flipped.flipped_chambers().count(), 1);
    }

    #[test]
    fn from_signs_validates() {
        let cc = ChamberComplex::build(triangle()).unwrap();
        assert!(OrientationAssignment::from_signs(&cc, &[-1]).is_ok());
        assert_eq!(
            OrientationAssignment::from_signs(&cc, &[1, 1]),
            Err(OrientationError::LengthMismatch {
                expected: 1,
                got: 2
            })
        );
        assert_eq!(
            OrientationAssignment::from_signs(&cc, &[0]),
            Err(OrientationError::BadSign { index: 0, value: 0 })
        );
    }

    #[test]
    fn adjacent_chambers_alternate_sign() {
        // Five lines in general position: adjacent chambers must disagree,
        // point-meeting chambers must agree.
        let lines = vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(1, 1, -1).unwrap(),
            Line::from_ints(1, -2, 3).unwrap(),
            Line::from_ints(3, 1, -5).unwrap(),
        ];
        let cc = ChamberComplex::build(Arrangement::new(lines).unwrap()).unwrap();
        assert!(cc.bounded_count() >= 3);
        let signs = chamber_signs(&cc);
        for a in 0..cc.bounded_count() {
            for b in (a + 1)..cc.bounded_count() {
                let pair = cc.classify_pair(ChamberId(a), ChamberId(b)).unwrap();
                match pair {
                    PairClass::SharedEdge(_) => {
                        assert_ne!(signs[a].sign, signs[b].sign);
                    }
                    PairClass::MeetAtPoint(_) => {
                        assert_eq!(signs[a].sign, signs[b].sign);
                    }
                    PairClass::Disjoint => {}
                }
            }
        }
    }

    #[test]
    fn coherence_is_sign_equality_at_points_only() {
        let meet = PairClass::MeetAtPoint(VertexId(0));
        assert_eq!(coherent(&meet, 1, 1), Ok(true));
        assert_eq!(coherent(&meet, -1, -1), Ok(true));
        assert_eq!(coherent(&meet, 1, -1), Ok(false));
        assert_eq!(
            coherent(&PairClass::Disjoint, 1, 1),
            Err(OrientationError::NotAPointPair)
        );
    }
}
