//! Exact invariants of symmetric integer bilinear forms.
//!
//! Everything works over the integers, never floats:
//!
//! * [`kernel_saturation`] splits off the kernel of a form as a saturated
//!   direct summand of the ambient lattice, so the induced form on the
//!   quotient is again integral and nondegenerate;
//! * [`inertia`] computes the signature by fraction-free symmetric
//!   congruence reduction, reading signs off consecutive leading minors;
//! * [`smith_normal_form`] diagonalizes by unimodular row and column
//!   operations with centered Euclidean division and a minimal-pivot rule,
//!   optionally returning the transforms;
//! * [`discriminant_group`] reads the finite discriminant group of a
//!   nondegenerate form off the invariant factors;
//! * [`AbelianGroup`] is a finite abelian group in invariant-factor form,
//!   with [`is_subquotient`] deciding embeddability as a quotient of a
//!   subgroup.
//!
//! [`invariants`] chains these into the full pipeline used on Gram
//! matrices.  On large inputs it avoids both quotient construction and
//! entry growth: the congruence reduction stays integral because its
//! entries are minors, and the Smith reduction runs modulo a multiple of
//! the largest invariant factor supplied by the congruence pass.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::mat::IntMat;

/// Error from the lattice pipeline.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LatticeError {
    NotSymmetric,
    NotSquare,
    /// The form is degenerate where a nondegenerate one is required.
    Singular,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotSymmetric => write!(f, "matrix is not symmetric"),
            LatticeError::NotSquare => write!(f, "matrix is not square"),
            LatticeError::Singular => write!(f, "form is degenerate"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LatticeError {}

/// Quotient of centered Euclidean division: minimizes `|a - q*b|`, `b > 0`.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    ((a << 1u32) + b).div_floor(&(b << 1u32))
}

// --- Smith normal form ---------------------------------------------------

/// Diagonal of a Smith normal form: positive invariant factors, each
/// dividing the next.  Zero rows and columns are dropped, so
/// `factors.len()` is the rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Snf {
    pub factors: Vec<BigInt>,
}

/// Smith normal form together with the unimodular transforms
/// `left * m * right = smith`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfTransforms {
    pub left: IntMat,
    pub smith: IntMat,
    pub right: IntMat,
}

/// Minimal-magnitude nonzero entry of the trailing block, ties broken by
/// position; `None` when the block vanishes.
fn pivot_in_block(a: &IntMat, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if a[(b.0, b.1)].magnitude() <= a[(i, j)].magnitude() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn smith_reduce(m: &IntMat, track: bool) -> (IntMat, Option<(IntMat, IntMat)>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut left = if track {
        Some(IntMat::identity(rows))
    } else {
        None
    };
    let mut right = if track {
        Some(IntMat::identity(cols))
    } else {
        None
    };

    macro_rules! row_op {
        ($method:ident, $($arg:expr),*) => {
            a.$method($($arg),*);
            if let Some(u) = left.as_mut() {
                u.$method($($arg),*);
            }
        };
    }
    macro_rules! col_op {
        ($method:ident, $($arg:expr),*) => {
            a.$method($($arg),*);
            if let Some(v) = right.as_mut() {
                v.$method($($arg),*);
            }
        };
    }

    for k in 0..rows.min(cols) {
        'place: loop {
            let Some((pi, pj)) = pivot_in_block(&a, k) else {
                return (a, left.zip(right));
            };
            row_op!(swap_rows, k, pi);
            col_op!(swap_cols, k, pj);
            if a[(k, k)].is_negative() {
                row_op!(negate_row, k);
            }

            // Euclidean clearing of column k and row k.  A nonzero centered
            // remainder is strictly smaller than the pivot; promoting it and
            // restarting terminates by infinite descent.
            loop {
                let mut promoted = false;
                for r in (k + 1)..rows {
                    if a[(r, k)].is_zero() {
                        continue;
                    }
                    let q = -div_round(&a[(r, k)], &a[(k, k)]);
                    row_op!(add_row_multiple, r, k, &q);
                    if !a[(r, k)].is_zero() {
                        row_op!(swap_rows, k, r);
                        if a[(k, k)].is_negative() {
                            row_op!(negate_row, k);
                        }
                        promoted = true;
                        break;
                    }
                }
                if promoted {
                    continue;
                }
                for c in (k + 1)..cols {
                    if a[(k, c)].is_zero() {
                        continue;
                    }
                    let q = -div_round(&a[(k, c)], &a[(k, k)]);
                    col_op!(add_col_multiple, c, k, &q);
                    if !a[(k, c)].is_zero() {
                        col_op!(swap_cols, k, c);
                        if a[(k, k)].is_negative() {
                            col_op!(negate_col, k);
                        }
                        promoted = true;
                        break;
                    }
                }
                if !promoted {
                    break;
                }
            }

            // Divisibility sweep: fold a bad row into row k and redo, which
            // strictly shrinks the eventual pivot.
            let d = a[(k, k)].clone();
            if d.is_one() {
                break 'place;
            }
            let mut bad_row = None;
            'scan: for i in (k + 1)..rows {
                for j in (k + 1)..cols {
                    if !a[(i, j)].mod_floor(&d).is_zero() {
                        bad_row = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad_row {
                Some(i) => {
                    let one = BigInt::one();
                    row_op!(add_row_multiple, k, i, &one);
                }
                None => break 'place,
            }
        }
    }
    (a, left.zip(right))
}

/// Invariant factors of an arbitrary integer matrix.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let (d, _) = smith_reduce(m, false);
    let mut factors = Vec::new();
    for k in 0..d.rows().min(d.cols()) {
        if d[(k, k)].is_zero() {
            break;
        }
        factors.push(d[(k, k)].clone());
    }
    debug_assert!(factors.iter().all(|f| f.is_positive()));
    debug_assert!(factors.windows(2).all(|w| w[1].mod_floor(&w[0]).is_zero()));
    Snf { factors }
}

/// Smith normal form with the unimodular change-of-basis pair.
pub fn smith_normal_form_with_transforms(m: &IntMat) -> SnfTransforms {
    let (smith, uv) = smith_reduce(m, true);
    let (left, right) = uv.expect("transforms were requested");
    debug_assert_eq!(left.mul(m).mul(&right), smith);
    SnfTransforms { left, smith, right }
}

/// Centers `x` into the residue range `(-m/2, m/2]`.
fn center_mod(x: &mut BigInt, m: &BigInt) {
    let mut r = x.mod_floor(m);
    if &(&r << 1u32) > m {
        r -= m;
    }
    *x = r;
}

/// Canonical divisibility chain of a multiset of nonnegative integers:
/// repeatedly replaces a violating pair by (gcd, lcm).  Zeros absorb
/// everything and sort to the end.
fn divisibility_chain(mut v: Vec<BigInt>) -> Vec<BigInt> {
    v.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, false) => core::cmp::Ordering::Greater,
        (false, true) => core::cmp::Ordering::Less,
        _ => a.magnitude().cmp(b.magnitude()),
    });
    loop {
        let mut changed = false;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[j].is_zero() || (&v[j] % &v[i]).is_zero() {
                    continue;
                }
                let g = v[i].gcd(&v[j]);
                let l = (&v[i] / &g) * &v[j];
                v[i] = g;
                v[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    v
}

/// Invariant factors of a square matrix of known rank, all arithmetic
/// bounded by a modulus.
///
/// `modulus` must be a positive multiple of the largest invariant factor
/// (any nonzero `rank x rank` minor works).  Then the cokernel of
/// `[m | modulus * I]` is the cokernel of `m` with its free part collapsed
/// to `(Z/modulus)^(n - rank)`, so diagonalizing `m` while reducing every
/// entry into centered residues (implicitly adding the `modulus * I`
/// columns) yields diagonal entries `g_i` with invariant factor multiset
/// `{gcd(g_i, modulus)}`: the true chain padded by copies of `modulus`.
/// Entries never exceed the modulus in magnitude, which is what makes this
/// affordable on large matrices.
fn bounded_smith_factors(m: &IntMat, modulus: &BigInt, rank: usize) -> Vec<BigInt> {
    debug_assert!(modulus.is_positive());
    let n = m.rows();
    debug_assert!(m.is_square() && rank <= n);
    let mut a: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = m[(i, j)].clone();
            center_mod(&mut v, modulus);
            a.push(v);
        }
    }

    let mut diag: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        'place: loop {
            // Minimal-magnitude nonzero entry of the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if a[i * n + j].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj))
                            if a[bi * n + bj].magnitude() <= a[i * n + j].magnitude() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // Trailing block vanishes modulo the modulus.
                for _ in k..n {
                    diag.push(BigInt::zero());
                }
                return finish_factors(diag, modulus, rank, n);
            };
            if pi != k {
                for c in k..n {
                    a.swap(k * n + c, pi * n + c);
                }
            }
            if pj != k {
                for r in k..n {
                    a.swap(r * n + k, r * n + pj);
                }
            }
            if a[k * n + k].is_negative() {
                for c in k..n {
                    let v = -core::mem::take(&mut a[k * n + c]);
                    a[k * n + c] = v;
                }
            }

            let p = a[k * n + k].clone();
            let mut clean = true;
            for r in (k + 1)..n {
                if a[r * n + k].is_zero() {
                    continue;
                }
                let q = div_round(&a[r * n + k], &p);
                for c in k..n {
                    let v = &a[k * n + c] * &q;
                    let cell = &mut a[r * n + c];
                    *cell -= v;
                    center_mod(cell, modulus);
                }
                if !a[r * n + k].is_zero() {
                    clean = false;
                }
            }
            for c in (k + 1)..n {
                if a[k * n + c].is_zero() {
                    continue;
                }
                let q = div_round(&a[k * n + c], &p);
                for r in k..n {
                    let v = &a[r * n + k] * &q;
                    let cell = &mut a[r * n + c];
                    *cell -= v;
                    center_mod(cell, modulus);
                }
                if !a[k * n + c].is_zero() {
                    clean = false;
                }
            }
            // A nonzero centered remainder is strictly smaller than the
            // pivot, so re-pivoting descends and terminates.
            if clean {
                diag.push(p);
                break 'place;
            }
        }
    }
    finish_factors(diag, modulus, rank, n)
}

fn finish_factors(diag: Vec<BigInt>, modulus: &BigInt, rank: usize, n: usize) -> Vec<BigInt> {
    debug_assert_eq!(diag.len(), n);
    let gcds: Vec<BigInt> = diag.iter().map(|g| g.gcd(modulus)).collect();
    let chain = divisibility_chain(gcds);
    assert!(
        chain[rank..].iter().all(|c| c == modulus),
        "rank or modulus inconsistent with the reduced diagonal"
    );
    chain[..rank].to_vec()
}

// --- Kernel and saturation ------------------------------------------------

/// A unimodular splitting of the ambient lattice along the kernel of a
/// symmetric form: `kernel` rows span the (saturated) kernel, `complement`
/// rows descend to a basis of the quotient.  Stacked, the rows form a basis
/// of the ambient lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelSplit {
    pub kernel: IntMat,
    pub complement: IntMat,
}

impl KernelSplit {
    /// Gram matrix induced on the quotient by `g`.
    pub fn quotient_gram(&self, g: &IntMat) -> IntMat {
        g.congruence(&self.complement)
    }
}

/// Splits the kernel of a symmetric integer form off the ambient lattice.
///
/// Stage one row-reduces `[g | I]` over the integers; rows whose left half
/// vanishes carry kernel vectors in their right half.  Stage two
/// column-reduces those vectors while tracking the inverse transform, whose
/// first rows then form a basis of the saturated kernel and whose remaining
/// rows complete it to a basis of the ambient lattice.
pub fn kernel_saturation(g: &IntMat) -> Result<KernelSplit, LatticeError> {
    if !g.is_square() {
        return Err(LatticeError::NotSquare);
    }
    if !g.is_symmetric() {
        return Err(LatticeError::NotSymmetric);
    }
    let n = g.rows();

    let mut aug = IntMat::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = g[(i, j)].clone();
        }
        aug[(i, n + i)] = BigInt::one();
    }

    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == n {
            break;
        }
        loop {
            let best = (pivot_row..n)
                .filter(|&r| !aug[(r, col)].is_zero())
                .min_by(|&r, &s| aug[(r, col)].magnitude().cmp(aug[(s, col)].magnitude()));
            let Some(best) = best else { break };
            aug.swap_rows(pivot_row, best);
            if aug[(pivot_row, col)].is_negative() {
                aug.negate_row(pivot_row);
            }
            let mut dirty = false;
            for r in (pivot_row + 1)..n {
                if aug[(r, col)].is_zero() {
                    continue;
                }
                let q = -div_round(&aug[(r, col)], &aug[(pivot_row, col)]);
                aug.add_row_multiple(r, pivot_row, &q);
                if !aug[(r, col)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                pivot_row += 1;
                break;
            }
        }
    }
    let rank = pivot_row;
    let k = n - rank;

    // Kernel candidates: right halves of the null rows, primitivized.  By
    // symmetry of g, left kernel vectors are right kernel vectors.
    let mut kmat = IntMat::zero(k, n);
    for (t, r) in (rank..n).enumerate() {
        debug_assert!((0..n).all(|j| aug[(r, j)].is_zero()));
        let mut row: Vec<BigInt> = (0..n).map(|j| aug[(r, n + j)].clone()).collect();
        let mut gcd = BigInt::zero();
        for v in &row {
            gcd = gcd.gcd(v);
        }
        if !gcd.is_zero() && !gcd.is_one() {
            for v in &mut row {
                *v = &*v / &gcd;
            }
        }
        for (j, v) in row.into_iter().enumerate() {
            kmat[(t, j)] = v;
        }
    }

    // Column-reduce kmat to [lower-triangular | 0], mirroring each column
    // operation as the inverse row operation on vinv.
    let mut vinv = IntMat::identity(n);
    for t in 0..k {
        loop {
            let best = (t..n)
                .filter(|&j| !kmat[(t, j)].is_zero())
                .min_by(|&x, &y| kmat[(t, x)].magnitude().cmp(kmat[(t, y)].magnitude()))
                .expect("kernel rows stay independent");
            kmat.swap_cols(t, best);
            vinv.swap_rows(t, best);
            if kmat[(t, t)].is_negative() {
                kmat.negate_col(t);
                vinv.negate_row(t);
            }
            let mut dirty = false;
            for j in (t + 1)..n {
                if kmat[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&kmat[(t, j)], &kmat[(t, t)]);
                kmat.add_col_multiple(j, t, &(-&q));
                vinv.add_row_multiple(t, j, &q);
                if !kmat[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
    }

    let mut kernel = IntMat::zero(k, n);
    let mut complement = IntMat::zero(rank, n);
    for i in 0..k {
        for j in 0..n {
            kernel[(i, j)] = vinv[(i, j)].clone();
        }
    }
    for i in 0..rank {
        for j in 0..n {
            complement[(i, j)] = vinv[(k + i, j)].clone();
        }
    }

    // The saturated kernel must be annihilated exactly.
    debug_assert!(g.mul(&kernel.transpose()).is_zero());
    Ok(KernelSplit { kernel, complement })
}

// --- Signature ------------------------------------------------------------

/// Outcome of the fraction-free symmetric reduction.
struct Reduction {
    plus: usize,
    minus: usize,
    zero: usize,
    /// Last nonzero pivot: the determinant of the leading nondegenerate
    /// block of a congruent copy of the input.  Equals the determinant of
    /// the input when `zero == 0`, and is always a multiple of the largest
    /// invariant factor of the input.
    last_pivot: BigInt,
}

/// Inertia by fraction-free (Bareiss) symmetric congruence reduction.
///
/// Pivoting uses symmetric row-and-column swaps, plus a simultaneous
/// row-and-column addition when the whole trailing diagonal vanishes; both
/// are integral congruences, so every intermediate entry is a minor of a
/// congruent copy of the input and each division is exact.  The pivots are
/// the leading principal minors `d_1, d_2, ...` of that copy, and the sign
/// of the k-th rational elimination pivot `d_k / d_{k-1}` is read off the
/// consecutive pair, which is Jacobi's rule.  A trailing block that
/// vanishes identically is the radical.
fn inertia_impl(g: &IntMat) -> Result<Reduction, LatticeError> {
    if !g.is_square() {
        return Err(LatticeError::NotSquare);
    }
    if !g.is_symmetric() {
        return Err(LatticeError::NotSymmetric);
    }
    let n = g.rows();
    let mut a: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(g[(i, j)].clone());
        }
    }
    let swap_sym = |a: &mut Vec<BigInt>, k: usize, j: usize| {
        for c in 0..n {
            a.swap(k * n + c, j * n + c);
        }
        for r in 0..n {
            a.swap(r * n + k, r * n + j);
        }
    };

    let mut plus = 0usize;
    let mut minus = 0usize;
    let mut zero = 0usize;
    let mut prev = BigInt::one();
    let mut last_pivot = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            let diag = ((k + 1)..n).find(|&j| !a[j * n + j].is_zero());
            if let Some(j) = diag {
                swap_sym(&mut a, k, j);
            } else {
                let mut found = None;
                'search: for i in k..n {
                    for j in (i + 1)..n {
                        if !a[i * n + j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    // Trailing block is identically zero: the remaining
                    // directions span the radical.
                    zero = n - k;
                    break;
                };
                // row_i += row_j and col_i += col_j turn the zero diagonal
                // entry (i, i) into 2*a[i][j]; only the trailing block is
                // live, so the operation stays inside it.
                for c in k..n {
                    let v = a[j * n + c].clone();
                    a[i * n + c] += v;
                }
                for r in k..n {
                    let v = a[r * n + j].clone();
                    a[r * n + i] += v;
                }
                if i != k {
                    swap_sym(&mut a, k, i);
                }
            }
        }
        let p = a[k * n + k].clone();
        debug_assert!(!p.is_zero());
        if p.sign() == prev.sign() {
            plus += 1;
        } else {
            minus += 1;
        }
        // One-step Bareiss update of the trailing block; symmetry lets the
        // lower triangle be mirrored.
        for i in (k + 1)..n {
            for j in i..n {
                let num = &p * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free division must be exact");
                a[i * n + j] = q.clone();
                if i != j {
                    a[j * n + i] = q;
                }
            }
        }
        last_pivot = p.clone();
        prev = p;
    }
    Ok(Reduction {
        plus,
        minus,
        zero,
        last_pivot,
    })
}

/// Signature `(positive, negative)` of a nondegenerate symmetric form.
pub fn inertia(g: &IntMat) -> Result<(usize, usize), LatticeError> {
    let red = inertia_impl(g)?;
    if red.zero > 0 {
        return Err(LatticeError::Singular);
    }
    Ok((red.plus, red.minus))
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &IntMat) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..(n - 1) {
        if a[(k, k)].is_zero() {
            let Some(r) = ((k + 1)..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, r);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[(i, j)] = q;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

// --- Finite abelian groups ------------------------------------------------

/// A finite abelian group in invariant-factor form: factors are greater
/// than 1, ascending, each dividing the next; the empty list is trivial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            factors: Vec::new(),
        }
    }

    /// Group `Z/o_1 x ... x Z/o_k` from arbitrary positive cyclic orders,
    /// canonicalized into a divisibility chain.
    pub fn from_orders<I>(orders: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let mut fs: Vec<BigInt> = orders
            .into_iter()
            .inspect(|o| assert!(o.is_positive(), "cyclic order must be positive"))
            .filter(|o| !o.is_one())
            .collect();
        // Pairwise (gcd, lcm) replacement preserves the group and converges
        // to the invariant-factor chain.
        loop {
            fs.sort();
            let mut changed = false;
            for i in 0..fs.len() {
                for j in (i + 1)..fs.len() {
                    if fs[j].mod_floor(&fs[i]).is_zero() {
                        continue;
                    }
                    let g = fs[i].gcd(&fs[j]);
                    let l = &fs[i] / &g * &fs[j];
                    fs[i] = g;
                    fs[j] = l;
                    changed = true;
                }
            }
            fs.retain(|f| !f.is_one());
            if !changed {
                break;
            }
        }
        AbelianGroup { factors: fs }
    }

    pub fn from_u64_orders(orders: &[u64]) -> Self {
        AbelianGroup::from_orders(orders.iter().map(|&o| BigInt::from(o)))
    }

    /// The elementary group `(Z/p)^k`.
    pub fn elementary(p: u64, k: usize) -> Self {
        AbelianGroup::from_orders(core::iter::repeat_n(BigInt::from(p), k))
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{}", d)?;
        }
        Ok(())
    }
}

/// Prime factorization by trial division; factor sizes here are tiny.
fn factorize(n: &BigInt) -> Vec<(BigInt, usize)> {
    let mut n = n.clone();
    debug_assert!(n.is_positive());
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.mod_floor(&p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// Whether `a` is isomorphic to a subquotient (a quotient of a subgroup)
/// of `b`.
///
/// Per prime, with exponent sequences sorted descending and zero-padded,
/// the condition is pointwise domination; subgroups and quotients both
/// shrink the sequence pointwise, and pointwise domination already gives a
/// subgroup.
pub fn is_subquotient(a: &AbelianGroup, b: &AbelianGroup) -> bool {
    use alloc::collections::BTreeMap;

    let exponents = |g: &AbelianGroup| -> BTreeMap<BigInt, Vec<usize>> {
        let mut map: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
        for f in g.factors() {
            for (p, e) in factorize(f) {
                map.entry(p).or_default().push(e);
            }
        }
        for es in map.values_mut() {
            es.sort_unstable_by(|x, y| y.cmp(x));
        }
        map
    };

    let ea = exponents(a);
    let eb = exponents(b);
    for (p, la) in &ea {
        let empty = Vec::new();
        let lb = eb.get(p).unwrap_or(&empty);
        if la.len() > lb.len() {
            return false;
        }
        if la.iter().zip(lb.iter()).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// Discriminant group of a nondegenerate symmetric form: the cokernel of
/// its Gram matrix.
pub fn discriminant_group(g: &IntMat) -> Result<AbelianGroup, LatticeError> {
    if !g.is_square() {
        return Err(LatticeError::NotSquare);
    }
    if !g.is_symmetric() {
        return Err(LatticeError::NotSymmetric);
    }
    let snf = smith_normal_form(g);
    if snf.factors.len() < g.rows() {
        return Err(LatticeError::Singular);
    }
    Ok(AbelianGroup::from_orders(snf.factors))
}

// --- The full pipeline ----------------------------------------------------

/// Invariants of a symmetric integer bilinear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeInvariants {
    /// Size of the input Gram matrix.
    pub ambient_rank: usize,
    /// Rank of the (saturated) kernel.
    pub kernel_rank: usize,
    /// Rank of the nondegenerate quotient.
    pub nondeg_rank: usize,
    /// Signature `(positive, negative)` of the quotient.
    pub signature: (usize, usize),
    /// Invariant factors of the quotient Gram matrix, including 1s.
    pub invariant_factors: Vec<BigInt>,
    /// Discriminant group of the quotient.
    pub disc: AbelianGroup,
    /// Absolute determinant of the quotient Gram matrix.
    pub det_abs: BigInt,
}

/// Runs the full pipeline on a symmetric Gram matrix: kernel rank,
/// signature, Smith normal form, discriminant group.
///
/// Both reductions run on the input matrix itself, not on a quotient.  That
/// is sound and much cheaper: the cokernel of `g` is `Z^k` plus the
/// discriminant group of the quotient by the kernel, so the nonzero Smith
/// factors of `g` are exactly the quotient's invariant factors, and
/// congruence reduction reads off the quotient's signature directly.
///
/// Two independent reductions cross-check each other: the fraction-free
/// congruence reduction supplies rank, signature, and a modulus, the
/// modular Smith reduction the invariant factors; for nondegenerate input
/// the determinant is computed by both (pivot value, factor product) and
/// asserted equal.
pub fn invariants(g: &IntMat) -> Result<LatticeInvariants, LatticeError> {
    let n = g.rows();

    let red = inertia_impl(g)?;
    let nondeg_rank = red.plus + red.minus;
    let kernel_rank = red.zero;
    debug_assert_eq!(nondeg_rank + kernel_rank, n);

    let factors = if nondeg_rank == 0 {
        Vec::new()
    } else {
        bounded_smith_factors(g, &red.last_pivot.abs(), nondeg_rank)
    };
    let det_abs: BigInt = factors.iter().product();
    if kernel_rank == 0 {
        assert_eq!(red.last_pivot.abs(), det_abs, "determinant routes disagree");
    }
    let disc = AbelianGroup::from_orders(factors.clone());

    Ok(LatticeInvariants {
        ambient_rank: n,
        kernel_rank,
        nondeg_rank,
        signature: (red.plus, red.minus),
        invariant_factors: factors,
        disc,
        det_abs,
    })
}
