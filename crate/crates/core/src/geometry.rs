//! Rational points, lines, and the validation predicates for arrangements.
//!
//! All coordinates are arbitrary-precision rationals ([`Rat`]), so every
//! incidence test in the crate is exact.  A [`Line`] is stored in a canonical
//! scaling, which makes equality, parallelism, and deduplication plain
//! component comparisons.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rational scalar used for all coordinates and coefficients.
pub type Rat = num_rational::BigRational;

/// Index of a line within its [`Arrangement`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LineId(pub usize);

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

/// Sign of a rational number as -1, 0, or 1.
pub fn sign(r: &Rat) -> i8 {
    match r.numer().sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Convenience constructor for a rational from an integer pair.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// A point of the affine plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x, 1), rat(y, 1))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Error raised by line construction and arrangement validation helpers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeometryError {
    /// Both linear coefficients vanish; the equation does not define a line.
    ZeroLine,
    /// The same line (after canonical scaling) appears twice.
    DuplicateLine(LineId, LineId),
    /// An intersection was requested for two copies of one line.
    IdenticalLines,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::ZeroLine => write!(f, "a = b = 0 does not define a line"),
            GeometryError::DuplicateLine(i, j) => {
                write!(f, "lines {} and {} coincide", i, j)
            }
            GeometryError::IdenticalLines => {
                write!(f, "lines coincide; no transverse intersection")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GeometryError {}

/// An affine line `a*x + b*y + c = 0` with `(a, b) != (0, 0)`.
///
/// The triple is rescaled on construction so that the first nonzero entry of
/// `(a, b)` equals 1.  Two `Line` values are therefore equal exactly when
/// they describe the same line, and parallel exactly when their `(a, b)`
/// pairs coincide.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Line {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl Line {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, GeometryError> {
        let scale = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeometryError::ZeroLine);
        };
        Ok(Line {
            a: a / &scale,
            b: b / &scale,
            c: c / &scale,
        })
    }

    /// Line with integer coefficients.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, GeometryError> {
        Line::new(rat(a, 1), rat(b, 1), rat(c, 1))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    /// Value of the defining form at `p`; zero exactly on the line.
    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    /// Canonical direction vector `(-b, a)` of the line.
    pub fn direction(&self) -> (Rat, Rat) {
        (-self.b.clone(), self.a.clone())
    }

    /// Parallelism test, including equal lines.
    pub fn is_parallel_to(&self, other: &Line) -> bool {
        // Canonical scaling reduces proportionality of (a, b) to equality.
        self.a == other.a && self.b == other.b
    }

    /// An arbitrary point on the line.
    pub fn point_on(&self) -> Point {
        if !self.b.is_zero() {
            Point::new(Rat::zero(), -&self.c / &self.b)
        } else {
            Point::new(-&self.c / &self.a, Rat::zero())
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x + {}*y + {} = 0", self.a, self.b, self.c)
    }
}

/// Signed side of `line` on which `p` lies: the sign of the defining form.
pub fn side(line: &Line, p: &Point) -> i8 {
    sign(&line.eval(p))
}

/// Transverse intersection point of two distinct lines.
///
/// Returns `Ok(None)` for distinct parallel lines and an error if the two
/// arguments are the same line.
pub fn intersect(l1: &Line, l2: &Line) -> Result<Option<Point>, GeometryError> {
    if l1 == l2 {
        return Err(GeometryError::IdenticalLines);
    }
    let det = l1.a() * l2.b() - l2.a() * l1.b();
    if det.is_zero() {
        return Ok(None);
    }
    // Cramer's rule for a1*x + b1*y = -c1, a2*x + b2*y = -c2.
    let x = (l1.b() * l2.c() - l2.b() * l1.c()) / &det;
    let y = (l2.a() * l1.c() - l1.a() * l2.c()) / &det;
    Ok(Some(Point::new(x, y)))
}

/// A finite list of pairwise distinct lines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    lines: Vec<Line>,
}

impl Arrangement {
    /// Builds an arrangement, rejecting duplicate lines.
    pub fn new(lines: Vec<Line>) -> Result<Self, GeometryError> {
        // Canonical scaling makes duplicates literal equality; a sorted copy
        // finds them without the quadratic scan.
        let mut seen: Vec<(Line, usize)> = lines.iter().cloned().zip(0..lines.len()).collect();
        seen.sort();
        for w in seen.windows(2) {
            if w[0].0 == w[1].0 {
                let (i, j) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                return Err(GeometryError::DuplicateLine(LineId(i), LineId(j)));
            }
        }
        Ok(Arrangement { lines })
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn line(&self, id: LineId) -> &Line {
        &self.lines[id.0]
    }

    /// Sign vector of a point: the side of every line, in line order.
    pub fn sign_vector(&self, p: &Point) -> Vec<i8> {
        self.lines.iter().map(|l| side(l, p)).collect()
    }
}

/// Everything `validate` learns about an arrangement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    /// No three lines meet in a common point.
    pub nodal: bool,
    /// One witness triple per concurrent point (line indices, ascending).
    pub concurrent_triples: Vec<(LineId, LineId, LineId)>,
    /// Number of unordered pairs of distinct parallel lines.
    pub parallel_pairs: usize,
    /// Parallel classes with at least two members, each sorted ascending.
    pub parallel_classes: Vec<Vec<LineId>>,
    /// Every parallel class has at most two members.
    pub at_most_one_parallel: bool,
}

impl ValidationReport {
    /// True when the closed-form lattice predictions apply to the input.
    pub fn prediction_ready(&self) -> bool {
        self.nodal && self.at_most_one_parallel
    }
}

/// Checks nodality and computes the parallelism profile.
pub fn validate(arr: &Arrangement) -> ValidationReport {
    use alloc::collections::BTreeMap;

    // Group pairwise intersection points; a point owned by two or more pairs
    // witnesses a concurrency.
    let mut at_point: BTreeMap<Point, Vec<(usize, usize)>> = BTreeMap::new();
    let mut classes: BTreeMap<(Rat, Rat), Vec<LineId>> = BTreeMap::new();
    for (i, li) in arr.lines().iter().enumerate() {
        classes
            .entry((li.a().clone(), li.b().clone()))
            .or_default()
            .push(LineId(i));
        for (j, lj) in arr.lines().iter().enumerate().skip(i + 1) {
            if let Ok(Some(p)) = intersect(li, lj) {
                at_point.entry(p).or_default().push((i, j));
            }
        }
    }

    let mut concurrent_triples = Vec::new();
    for pairs in at_point.values() {
        if pairs.len() > 1 {
            let mut ids: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
            ids.sort_unstable();
            ids.dedup();
            concurrent_triples.push((LineId(ids[0]), LineId(ids[1]), LineId(ids[2])));
        }
    }

    let mut parallel_pairs = 0;
    let mut parallel_classes = Vec::new();
    let mut at_most_one_parallel = true;
    for class in classes.into_values() {
        let k = class.len();
        parallel_pairs += k * (k - 1) / 2;
        if k > 2 {
            at_most_one_parallel = false;
        }
        if k >= 2 {
            parallel_classes.push(class);
        }
    }
    parallel_classes.sort();

    ValidationReport {
        nodal: concurrent_triples.is_empty(),
        concurrent_triples,
        parallel_pairs,
        parallel_classes,
        at_most_one_parallel,
    }
}

/// Total order on nonzero direction vectors by counterclockwise angle,
/// starting just above the positive x-axis.
///
/// Vectors are compared by half-plane first (upper half, including the
/// positive x-axis, precedes lower), then by cross product within a
/// half-plane.  Equal directions compare equal even at different lengths.
pub fn dir_cmp(u: &(Rat, Rat), v: &(Rat, Rat)) -> Ordering {
    fn half(w: &(Rat, Rat)) -> u8 {
        debug_assert!(!w.0.is_zero() || !w.1.is_zero());
        if w.1.is_positive() || (w.1.is_zero() && w.0.is_positive()) {
            0
        } else {
            1
        }
    }
    half(u).cmp(&half(v)).then_with(|| {
        let cross = &u.0 * &v.1 - &u.1 * &v.0;
        // Within a half-plane, u precedes v exactly when v is counterclockwise
        // from u, i.e. the cross product is positive.
        match sign(&cross) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    })
}

/// The triangle fixture: `x = 0`, `y = 0`, `x + y = 1`.
pub fn triangle() -> Arrangement {
    let lines = vec![
        Line::from_ints(1, 0, 0).unwrap(),
        Line::from_ints(0, 1, 0).unwrap(),
        Line::from_ints(1, 1, -1).unwrap(),
    ];
    Arrangement::new(lines).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_normalization_is_canonical() {
        let l1 = Line::from_ints(2, 4, 6).unwrap();
        let l2 = Line::from_ints(1, 2, 3).unwrap();
        let l3 = Line::from_ints(-3, -6, -9).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1, l3);
        assert_eq!(*l1.a(), rat(1, 1));

        let v1 = Line::from_ints(0, 5, -10).unwrap();
        assert_eq!(*v1.b(), rat(1, 1));
        assert_eq!(*v1.c(), rat(-2, 1));

        assert_eq!(Line::from_ints(0, 0, 1), Err(GeometryError::ZeroLine));
    }

    #[test]
    fn intersect_examples() {
        let x_axis = Line::from_ints(0, 1, 0).unwrap();
        let y_axis = Line::from_ints(1, 0, 0).unwrap();
        let diag = Line::from_ints(1, 1, -1).unwrap();

        assert_eq!(
            intersect(&x_axis, &y_axis).unwrap(),
            Some(Point::from_ints(0, 0))
        );
        assert_eq!(
            intersect(&x_axis, &diag).unwrap(),
            Some(Point::from_ints(1, 0))
        );
        assert_eq!(
            intersect(&y_axis, &diag).unwrap(),
            Some(Point::from_ints(0, 1))
        );

        let parallel = Line::from_ints(1, 1, 5).unwrap();
        assert_eq!(intersect(&diag, &parallel).unwrap(), None);
        assert_eq!(intersect(&diag, &diag), Err(GeometryError::IdenticalLines));
    }

    #[test]
    fn side_examples() {
        let diag = Line::from_ints(1, 1, -1).unwrap();
        assert_eq!(side(&diag, &Point::from_ints(0, 0)), -1);
        assert_eq!(side(&diag, &Point::from_ints(1, 0)), 0);
        assert_eq!(side(&diag, &Point::from_ints(2, 3)), 1);
    }

    #[test]
    fn duplicate_lines_rejected() {
        let lines = vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(2, 0, 0).unwrap(),
        ];
        assert_eq!(
            Arrangement::new(lines),
            Err(GeometryError::DuplicateLine(LineId(0), LineId(2)))
        );
    }

    #[test]
    fn validate_triangle_is_nodal() {
        let report = validate(&triangle());
        assert!(report.nodal);
        assert_eq!(report.parallel_pairs, 0);
        assert!(report.parallel_classes.is_empty());
        assert!(report.at_most_one_parallel);
        assert!(report.prediction_ready());
    }

    #[test]
    fn validate_detects_concurrency() {
        // Three lines through the origin.
        let arr = Arrangement::new(vec![
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(1, -1, 0).unwrap(),
        ])
        .unwrap();
        let report = validate(&arr);
        assert!(!report.nodal);
        assert_eq!(
            report.concurrent_triples,
            vec![(LineId(0), LineId(1), LineId(2))]
        );
    }

    #[test]
    fn validate_counts_parallel_pairs() {
        // Two horizontal, two vertical, one diagonal: p = 2.
        let arr = Arrangement::new(vec![
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(0, 1, -1).unwrap(),
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(1, 0, -1).unwrap(),
            Line::from_ints(1, 1, -5).unwrap(),
        ])
        .unwrap();
        let report = validate(&arr);
        assert!(report.nodal);
        assert_eq!(report.parallel_pairs, 2);
        assert_eq!(report.parallel_classes.len(), 2);
        assert!(report.at_most_one_parallel);

        // A third horizontal breaks the pairing bound: p jumps to 4.
        let arr = Arrangement::new(vec![
            Line::from_ints(0, 1, 0).unwrap(),
            Line::from_ints(0, 1, -1).unwrap(),
            Line::from_ints(0, 1, -2).unwrap(),
            Line::from_ints(1, 0, 0).unwrap(),
            Line::from_ints(1, 0, -1).unwrap(),
        ])
        .unwrap();
        let report = validate(&arr);
        assert_eq!(report.parallel_pairs, 4);
        assert!(!report.at_most_one_parallel);
        assert!(!report.prediction_ready());
    }

    #[test]
    fn dir_cmp_orders_counterclockwise() {
        let dirs = [
            (rat(1, 1), rat(0, 1)),   // east
            (rat(2, 1), rat(1, 1)),   // east-north-east
            (rat(0, 1), rat(1, 1)),   // north
            (rat(-1, 1), rat(1, 1)),  // north-west
            (rat(-1, 1), rat(0, 1)),  // west
            (rat(-1, 1), rat(-2, 1)), // south-south-west
            (rat(0, 1), rat(-1, 1)),  // south
            (rat(1, 1), rat(-1, 1)),  // south-east
        ];
        for (i, u) in dirs.iter().enumerate() {
            for (j, v) in dirs.iter().enumerate() {
                assert_eq!(dir_cmp(u, v), i.cmp(&j), "dirs {} vs {}", i, j);
            }
        }
        // Length does not matter.
        let u = (rat(3, 1), rat(3, 1));
        let v = (rat(1, 2), rat(1, 2));
        assert_eq!(dir_cmp(&u, &v), Ordering::Equal);
    }
}
