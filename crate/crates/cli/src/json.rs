//! JSON views of library values. Keys are sorted by `serde_json`'s default
//! map, so output is byte-stable for identical inputs.

use coxforge::singular::ChartReport;
use coxforge::vgit::{format_monomial, Chamber, WallCrossing};
use coxforge::{
    CoxPresentation, EndBehavior, Fan, IntMatrix, MonomialIdeal, Ray2, WellFormingCertificate, WellFormingStep,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Integers that fit in `i64` become numbers, larger ones decimal strings.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

pub fn ray(r: &Ray2) -> Value {
    json!([int(&r.0), int(&r.1)])
}

pub fn ideal(i: &MonomialIdeal, vars: &[String]) -> Value {
    Value::Array(
        i.components()
            .iter()
            .map(|c| json!(c.iter().map(|&v| vars[v].clone()).collect::<Vec<_>>()))
            .collect(),
    )
}

pub fn presentation(p: &CoxPresentation) -> Value {
    json!({
        "variables": p.variables(),
        "weights": matrix(p.weights()),
        "irrelevant": ideal(p.irrelevant(), p.variables()),
        "stacky": p.is_stacky(),
    })
}

pub fn certificate(c: &WellFormingCertificate) -> Value {
    Value::Array(
        c.steps
            .iter()
            .map(|s| match s {
                WellFormingStep::RowTransform(u) => json!({"step": "RowTransform", "matrix": matrix(u.matrix())}),
                WellFormingStep::ColumnScale { column, factor, row } => {
                    json!({"step": "ColumnScale", "column": column, "factor": int(factor), "row": row})
                }
                WellFormingStep::RowDivide { row, factor } => {
                    json!({"step": "RowDivide", "row": row, "factor": int(factor)})
                }
                WellFormingStep::RowRescaleRational(f) => json!({
                    "step": "RowRescaleRational",
                    "factors": f.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
            })
            .collect(),
    )
}

pub fn fan(f: &Fan) -> Value {
    json!({
        "dim": f.lattice_dim(),
        "rays": Value::Array(f.rays().iter().map(|r| ints(r)).collect()),
        "cones": f.max_cones().iter().map(|c| c.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn chart(c: &ChartReport) -> Value {
    json!({
        "chart": [c.chart.0, c.chart.1],
        "index": c.singularity.index,
        "weights": c.singularity.weights,
        "verdict": c.singularity.verdict(),
    })
}

pub fn chamber(c: &Chamber, model: &CoxPresentation) -> Value {
    json!({
        "index": c.index,
        "start": ray(&c.start),
        "end": ray(&c.end),
        "irrelevant": ideal(model.irrelevant(), model.variables()),
    })
}

pub fn crossing(c: &WallCrossing, vars: &[String]) -> Value {
    json!({
        "wall": ray(&c.wall),
        "type": ints(&c.type_vector),
        "off_wall": c.off_wall_vars.iter().map(|&v| vars[v].clone()).collect::<Vec<_>>(),
        "classification": c.classification.to_string(),
        "base": c.base_vars.iter().map(|&v| vars[v].clone()).collect::<Vec<_>>(),
        "base_weights": ints(&c.base_weights),
    })
}

pub fn monomials(gens: &[Vec<u64>], vars: &[String]) -> Value {
    json!(gens.iter().map(|m| format_monomial(m, vars)).collect::<Vec<_>>())
}

pub fn end(e: &EndBehavior, vars: &[String]) -> Value {
    match e {
        EndBehavior::Fibration { ray: r, target_generators } => json!({
            "kind": "Fibration",
            "ray": ray(r),
            "generators": monomials(target_generators, vars),
        }),
        EndBehavior::DivisorialContraction {
            ray: r,
            variable,
            target_generators,
        } => json!({
            "kind": "DivisorialContraction",
            "ray": ray(r),
            "variable": vars[*variable],
            "generators": monomials(target_generators, vars),
        }),
        EndBehavior::Unclassified { ray: r, beyond } => json!({
            "kind": "Unclassified",
            "ray": ray(r),
            "beyond": beyond,
        }),
    }
}
