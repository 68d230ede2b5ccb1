//! Analysis report: one serializable struct covering the whole pipeline.
//!
//! JSON is the wire format (`--json`, schema in `schema/report.schema.json`);
//! the default output is a text rendering of the same data.  Integers that
//! can outgrow 64 bits (invariant factors, determinants, group orders) are
//! serialized as decimal strings.

use std::collections::BTreeMap;

use dplane_core::chamber::ChamberComplex;
use dplane_core::geometry::{Arrangement, ValidationReport};
use dplane_core::gram::GramMatrix;
use dplane_core::infinity::{CheckReport, Prediction};
use dplane_core::lattice::{AbelianGroup, LatticeInvariants};
use dplane_core::orientation::OrientationAssignment;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::format::format_rat;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
pub struct Report {
    pub schema_version: u32,
    pub arrangement: ArrangementBlock,
    pub validation: ValidationBlock,
    pub complex: ComplexBlock,
    /// Row labels of the Gram matrix: chambers first, then vertices.
    pub basis: Vec<String>,
    /// Orientation sign per bounded chamber, in basis order.
    pub orientation: Vec<i8>,
    pub gram: Vec<Vec<i64>>,
    pub invariants: InvariantsBlock,
    /// Null when the arrangement is outside the scope of the closed forms.
    pub prediction: Option<PredictionBlock>,
    /// Null exactly when `prediction` is.
    pub cross_check: Option<CrossCheckBlock>,
    /// Present with `--oracle`: direct rules vs base-change recomputation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

#[derive(Serialize, Debug)]
pub struct ArrangementBlock {
    pub line_count: usize,
    /// Canonically scaled coefficients, one `"a b c"` string per line.
    pub lines: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct ValidationBlock {
    pub nodal: bool,
    pub parallel_pairs: usize,
    pub parallel_classes: Vec<Vec<usize>>,
    pub at_most_one_parallel: bool,
    pub prediction_ready: bool,
}

#[derive(Serialize, Debug)]
pub struct ComplexBlock {
    pub bounded_chambers: usize,
    pub vertices: usize,
    /// Map from n-gon size to number of bounded chambers with that size.
    pub ngon_profile: BTreeMap<usize, usize>,
}

#[derive(Serialize, Debug)]
pub struct GroupBlock {
    /// Invariant-factor chain, nontrivial entries only, decimal strings.
    pub factors: Vec<String>,
    pub order: String,
    pub display: String,
}

impl GroupBlock {
    pub fn new(g: &AbelianGroup) -> Self {
        GroupBlock {
            factors: g.factors().iter().map(|f| f.to_string()).collect(),
            order: g.order().to_string(),
            display: g.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct InvariantsBlock {
    pub ambient_rank: usize,
    pub kernel_rank: usize,
    pub nondeg_rank: usize,
    pub signature: (usize, usize),
    /// Full Smith chain of the nondegenerate quotient, decimal strings.
    pub invariant_factors: Vec<String>,
    pub disc: GroupBlock,
    pub det_abs: String,
}

impl InvariantsBlock {
    pub fn new(inv: &LatticeInvariants) -> Self {
        InvariantsBlock {
            ambient_rank: inv.ambient_rank,
            kernel_rank: inv.kernel_rank,
            nondeg_rank: inv.nondeg_rank,
            signature: inv.signature,
            invariant_factors: inv
                .invariant_factors
                .iter()
                .map(|f| f.to_string())
                .collect(),
            disc: GroupBlock::new(&inv.disc),
            det_abs: inv.det_abs.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct PredictionBlock {
    pub n: usize,
    pub p: usize,
    pub n_effective: usize,
    pub bounded_chambers: usize,
    pub nodes: usize,
    pub ambient_rank: usize,
    pub ambient_signature: (usize, usize),
    pub fixed_part_rank: usize,
    pub fixed_part_signature: (usize, usize),
    pub fixed_part_disc: GroupBlock,
    pub perp_rank: usize,
    pub perp_signature: (usize, usize),
    pub gram_rank: usize,
    pub kernel_rank: usize,
}

impl PredictionBlock {
    pub fn new(p: &Prediction) -> Self {
        PredictionBlock {
            n: p.n,
            p: p.p,
            n_effective: p.n_tilde,
            bounded_chambers: p.cham_b_count,
            nodes: p.node_count,
            ambient_rank: p.ambient_rank,
            ambient_signature: p.ambient_signature,
            fixed_part_rank: p.h_inf_rank,
            fixed_part_signature: p.h_inf_signature,
            fixed_part_disc: GroupBlock::new(&p.h_inf_disc),
            perp_rank: p.perp_rank,
            perp_signature: p.perp_signature,
            gram_rank: p.gram_rank(),
            kernel_rank: p.kernel_rank(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct CrossCheckBlock {
    /// (a) Quotient rank and signature equal the predicted complement.
    pub rank_signature_match: bool,
    /// (b) Computed discriminant group embeds as a subquotient.
    pub disc_subquotient: bool,
    /// (c) Reported observation; never gates the exit code.
    pub disc_isomorphic: bool,
    pub passed: bool,
}

impl CrossCheckBlock {
    pub fn new(c: &CheckReport) -> Self {
        CrossCheckBlock {
            rank_signature_match: c.rank_signature_match,
            disc_subquotient: c.disc_subquotient,
            disc_isomorphic: c.disc_isomorphic,
            passed: c.passed(),
        }
    }
}

pub fn arrangement_block(arr: &Arrangement) -> ArrangementBlock {
    ArrangementBlock {
        line_count: arr.len(),
        lines: arr
            .lines()
            .iter()
            .map(|l| {
                format!(
                    "{} {} {}",
                    format_rat(l.a()),
                    format_rat(l.b()),
                    format_rat(l.c())
                )
            })
            .collect(),
    }
}

pub fn validation_block(v: &ValidationReport) -> ValidationBlock {
    ValidationBlock {
        nodal: v.nodal,
        parallel_pairs: v.parallel_pairs,
        parallel_classes: v
            .parallel_classes
            .iter()
            .map(|c| c.iter().map(|id| id.0).collect())
            .collect(),
        at_most_one_parallel: v.at_most_one_parallel,
        prediction_ready: v.prediction_ready(),
    }
}

pub fn complex_block(cc: &ChamberComplex) -> ComplexBlock {
    ComplexBlock {
        bounded_chambers: cc.bounded_count(),
        vertices: cc.vertex_count(),
        ngon_profile: cc.ngon_profile(),
    }
}

pub fn basis_legend(g: &GramMatrix) -> Vec<String> {
    (0..g.basis.len())
        .map(|i| g.basis.class_of(i).to_string())
        .collect()
}

pub fn gram_rows(g: &GramMatrix) -> Vec<Vec<i64>> {
    let n = g.mat.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    g.mat[(i, j)]
                        .to_i64()
                        .expect("gram entries lie in {-2, -1, 0}")
                })
                .collect()
        })
        .collect()
}

/// Assembles the full report from pipeline outputs.
#[allow(clippy::too_many_arguments)]
pub fn build_report(
    arr: &Arrangement,
    validation: &ValidationReport,
    cc: &ChamberComplex,
    orientation: &OrientationAssignment,
    gram: &GramMatrix,
    invariants: &LatticeInvariants,
    prediction: Option<&Prediction>,
    check: Option<&CheckReport>,
    oracle_match: Option<bool>,
) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        arrangement: arrangement_block(arr),
        validation: validation_block(validation),
        complex: complex_block(cc),
        basis: basis_legend(gram),
        orientation: orientation.signs().to_vec(),
        gram: gram_rows(gram),
        invariants: InvariantsBlock::new(invariants),
        prediction: prediction.map(PredictionBlock::new),
        cross_check: check.map(CrossCheckBlock::new),
        oracle_match,
    }
}

fn signature(s: (usize, usize)) -> String {
    format!("({}+, {}-)", s.0, s.1)
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable rendering of the same data.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };

        push(
            &mut out,
            format!("arrangement: {} lines", self.arrangement.line_count),
        );
        for (i, l) in self.arrangement.lines.iter().enumerate() {
            push(&mut out, format!("  L{i}: {l}"));
        }
        push(
            &mut out,
            format!(
                "validation: nodal={}, parallel pairs={}, at most one parallel per class={}, prediction ready={}",
                self.validation.nodal,
                self.validation.parallel_pairs,
                self.validation.at_most_one_parallel,
                self.validation.prediction_ready
            ),
        );
        let profile: Vec<String> = self
            .complex
            .ngon_profile
            .iter()
            .map(|(k, v)| format!("{v} {k}-gon{}", if *v == 1 { "" } else { "s" }))
            .collect();
        push(
            &mut out,
            format!(
                "complex: {} bounded chambers ({}), {} vertices",
                self.complex.bounded_chambers,
                profile.join(", "),
                self.complex.vertices
            ),
        );
        push(
            &mut out,
            format!(
                "basis: {} classes ({} chambers, then {} vertices)",
                self.basis.len(),
                self.complex.bounded_chambers,
                self.complex.vertices
            ),
        );
        push(
            &mut out,
            format!(
                "orientation: {}",
                self.orientation
                    .iter()
                    .map(|s| if *s >= 0 { "+" } else { "-" })
                    .collect::<String>()
            ),
        );
        push(&mut out, "gram matrix:".to_string());
        for (label, row) in self.basis.iter().zip(&self.gram) {
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>2}")).collect();
            push(&mut out, format!("  {:>4} [{}]", label, cells.join(" ")));
        }
        let inv = &self.invariants;
        push(
            &mut out,
            format!(
                "invariants: rank {}, kernel {}, quotient rank {}, signature {}",
                inv.ambient_rank,
                inv.kernel_rank,
                inv.nondeg_rank,
                signature(inv.signature)
            ),
        );
        push(
            &mut out,
            format!(
                "  invariant factors [{}], |det| {}, disc {} (order {})",
                inv.invariant_factors.join(", "),
                inv.det_abs,
                inv.disc.display,
                inv.disc.order
            ),
        );
        match &self.prediction {
            Some(p) => {
                push(
                    &mut out,
                    format!(
                        "prediction (N={}, p={}): {} bounded chambers, {} nodes, gram rank {}, kernel {}",
                        p.n, p.p, p.bounded_chambers, p.nodes, p.gram_rank, p.kernel_rank
                    ),
                );
                push(
                    &mut out,
                    format!(
                        "  complement: rank {}, signature {}; fixed part disc {}",
                        p.perp_rank,
                        signature(p.perp_signature),
                        p.fixed_part_disc.display
                    ),
                );
            }
            None => push(
                &mut out,
                "prediction: not applicable (arrangement outside the closed-form hypotheses)"
                    .to_string(),
            ),
        }
        if let Some(c) = &self.cross_check {
            push(
                &mut out,
                format!(
                    "cross-check: rank/signature match={}, disc subquotient={}, disc isomorphic={} => {}",
                    c.rank_signature_match,
                    c.disc_subquotient,
                    c.disc_isomorphic,
                    if c.passed { "PASS" } else { "FAIL" }
                ),
            );
        }
        if let Some(m) = self.oracle_match {
            push(
                &mut out,
                format!("oracle: base-change recomputation matches direct rules: {m}"),
            );
        }
        out
    }
}
