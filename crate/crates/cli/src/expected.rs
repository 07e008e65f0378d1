//! Reference values the computed tables are compared against: the expected
//! deformation and vanishing statements and the regular-weight tables, written
//! out per type rather than derived from the engine.

use std::collections::{BTreeMap, BTreeSet};

use hessdeform_core::filtered::{CaseTag, RegularShiftTable};
use serde_json::{json, Value};
use hessdeform_core::rootsys::{CartanType, Family, RootSystem, RootVector};

/// `(h^0(TX), h^1(TX))`.
pub fn deform_x(t: CartanType) -> (i64, i64) {
    let r = t.rank() as i64;
    match (t.family(), t.rank()) {
        // two reduced points
        (Family::A, 1) => (0, 0),
        (Family::A, 2) => (2, 0),
        _ => (r, r - 1),
    }
}

/// Type `C_r` as a root system; `B2` has the same root system as `C2`.
pub fn is_c_type(t: CartanType) -> bool {
    t.family() == Family::C || (t.family() == Family::B && t.rank() == 2)
}

/// `(h^0(TY), h^1(TY))`, defined for rank at least 2.
pub fn deform_y(t: CartanType) -> Option<(i64, i64)> {
    let r = t.rank() as i64;
    if t.rank() < 2 {
        return None;
    }
    Some(if t.family() == Family::A {
        (r, r - 2)
    } else if is_c_type(t) {
        (r * (2 * r - 1), 0)
    } else {
        (r, r - 1)
    })
}

/// Nonzero `h^i` of the twisted tangent bundle of the full flag variety.
pub fn vanishing_borel(t: CartanType) -> BTreeMap<usize, i64> {
    match (t.family(), t.rank()) {
        (Family::A, 1) => [(0, 1)].into_iter().collect(),
        (Family::A, 2) => [(1, 1)].into_iter().collect(),
        _ => BTreeMap::new(),
    }
}

/// Nonzero `h^i` of the twisted tangent bundle of the partial flag variety.
pub fn vanishing_parabolic(t: CartanType) -> Option<BTreeMap<usize, i64>> {
    if t.rank() < 2 {
        return None;
    }
    Some(if t.family() == Family::A { [(1, 1)].into_iter().collect() } else { BTreeMap::new() })
}

/// `{theta, theta+, theta++} ∪ {-alpha_i}`; the short-root pair is absent with one root length.
pub fn regular_roots(rs: &RootSystem) -> BTreeSet<RootVector> {
    let d = rs.distinguished_roots();
    let mut out: BTreeSet<RootVector> = (0..rs.rank()).map(|i| -rs.simple_root(i)).collect();
    out.insert(d.theta);
    out.extend(d.theta_plus);
    out.extend(d.theta_plus_plus);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExpectedRow {
    pub case_tag: CaseTag,
    pub alpha: RootVector,
    pub degree: usize,
    pub ht_p: i64,
}

/// Rows of the shifted regular-weight table for one type.
#[derive(Clone, Debug)]
pub struct ExpectedTable {
    /// Every row of the enumeration must be one of these, and vice versa.
    pub asserted: Vec<ExpectedRow>,
    /// Listed rows compared by report only.
    pub report_only: Vec<ExpectedRow>,
}

fn root(r: usize, terms: &[(usize, i64)]) -> RootVector {
    let mut v = RootVector::zero(r);
    for &(i, c) in terms {
        v.0[i - 1] += c;
    }
    v
}

fn boundary_index(t: CartanType) -> usize {
    match (t.family(), t.rank()) {
        (Family::B, _) | (Family::D, _) | (Family::G, _) | (Family::E, 6) => 2,
        (Family::C, _) | (Family::F, _) | (Family::E, 7) => 1,
        (Family::E, 8) => 8,
        _ => unreachable!("type A has two boundary nodes"),
    }
}

/// The listed `theta_0` for `B_r` and `D_r`, a sum over two components of `Delta_0`.
fn theta0_bd(t: CartanType) -> RootVector {
    let r = t.rank();
    let mut terms = vec![(1, 1)];
    match t.family() {
        Family::B => {
            terms.push((3, 1));
            terms.extend((4..=r).map(|i| (i, 2)));
        }
        Family::D => {
            // D4: the second summand degenerates to a3 + a4
            if r == 4 {
                terms.extend([(3, 1), (4, 1)]);
            } else {
                terms.push((3, 1));
                terms.extend((4..=r - 2).map(|i| (i, 2)));
                terms.extend([(r - 1, 1), (r, 1)]);
            }
        }
        _ => unreachable!(),
    }
    root(r, &terms)
}

/// `None` in rank one.
pub fn shifted_table(t: CartanType, rs: &RootSystem) -> Option<ExpectedTable> {
    let r = t.rank();
    if r < 2 {
        return None;
    }
    let theta = rs.highest_root();
    let minus = |terms: &[(usize, i64)]| &theta - &root(r, terms);
    let row = |case_tag, alpha, degree, ht_p| ExpectedRow { case_tag, alpha, degree, ht_p };
    let mut asserted = vec![row(CaseTag::Case1, theta.clone(), 0, 2)];
    let mut report_only = Vec::new();
    if t.family() == Family::A {
        asserted.push(row(CaseTag::Case1, minus(&[(1, 1)]), 1, 1));
        asserted.push(row(CaseTag::Case1, minus(&[(r, 1)]), 1, 1));
    } else {
        asserted.push(row(CaseTag::Case1, minus(&[(boundary_index(t), 1)]), 1, 1));
    }
    match (t.family(), r) {
        (Family::A, 2) => {
            asserted.push(row(CaseTag::Case3, -root(2, &[(1, 1)]), 2, -1));
            asserted.push(row(CaseTag::Case3, -root(2, &[(2, 1)]), 2, -1));
            asserted.push(row(CaseTag::Case3, -theta.clone(), 3, -2));
        }
        (Family::A, _) => asserted.push(row(CaseTag::Case2, minus(&[(1, 1), (r, 1)]), 2, 0)),
        (Family::C, 2) => {
            asserted.push(row(CaseTag::Case3, -root(2, &[(1, 1)]), 2, -1));
            asserted.push(row(CaseTag::Case3, -theta.clone(), 3, -2));
        }
        // the short simple root of B2 is a2
        (Family::B, 2) => {
            asserted.push(row(CaseTag::Case3, -root(2, &[(2, 1)]), 2, -1));
            asserted.push(row(CaseTag::Case3, -theta.clone(), 3, -2));
        }
        (Family::C, _) => {
            let mut tp = vec![(2, 1)];
            tp.extend((3..r).map(|i| (i, 2)));
            tp.push((r, 1));
            let mut tpp: Vec<(usize, i64)> = (3..r).map(|i| (i, 2)).collect();
            tpp.push((r, 1));
            asserted.push(row(CaseTag::Case2, root(r, &tp), 2, 0));
            asserted.push(row(CaseTag::Case2, root(r, &tpp), 3, 0));
        }
        (Family::B, _) | (Family::D, _) if r >= 4 => report_only.push(row(CaseTag::Case2, theta0_bd(t), 2, 0)),
        _ => {}
    }
    asserted.sort();
    Some(ExpectedTable { asserted, report_only })
}

/// Whether case-(2) rows of this type are compared by report only.
pub fn case2_report_only(t: CartanType) -> bool {
    matches!(t.family(), Family::B | Family::D) && t.rank() >= 4
}

/// Enumerated shifted table against the listed rows.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub matches: bool,
    pub missing: Vec<ExpectedRow>,
    pub unexpected: Vec<ExpectedRow>,
    pub reports: Vec<String>,
}

fn row_json(r: &ExpectedRow) -> Value {
    let case = match r.case_tag {
        CaseTag::Case1 => "(1)",
        CaseTag::Case2 => "(2)",
        CaseTag::Case3 => "(3)",
    };
    json!({ "case": case, "alpha": crate::json::root(&r.alpha), "length": r.degree, "ht_p": r.ht_p })
}

impl Comparison {
    pub fn to_json(&self) -> Value {
        json!({
            "matches": self.matches,
            "missing": self.missing.iter().map(row_json).collect::<Vec<_>>(),
            "unexpected": self.unexpected.iter().map(row_json).collect::<Vec<_>>(),
            "reports": self.reports,
        })
    }
}

/// `None` in rank one. Rows must also have dominant weight 0.
pub fn compare_shifted(t: CartanType, rs: &RootSystem, table: &RegularShiftTable) -> Option<Comparison> {
    let exp = shifted_table(t, rs)?;
    let report_case2 = case2_report_only(t);
    let mut found = BTreeSet::new();
    let mut found_case2 = Vec::new();
    let mut nonzero_weight = Vec::new();
    for row in &table.rows {
        let e = ExpectedRow { case_tag: row.case_tag, alpha: row.alpha.clone(), degree: row.degree, ht_p: row.ht_p };
        if !row.dominant_weight.is_zero() {
            nonzero_weight.push(row.alpha.pretty());
        }
        if report_case2 && row.case_tag == CaseTag::Case2 {
            found_case2.push(e);
        } else {
            found.insert(e);
        }
    }
    let asserted: BTreeSet<ExpectedRow> = exp.asserted.into_iter().collect();
    let missing: Vec<ExpectedRow> = asserted.difference(&found).cloned().collect();
    let unexpected: Vec<ExpectedRow> = found.difference(&asserted).cloned().collect();
    let mut reports = Vec::new();
    for r in &exp.report_only {
        let kind = if rs.is_root(&r.alpha) { "a root" } else { "not a root" };
        let hit = found_case2.iter().any(|f| f.alpha == r.alpha);
        reports.push(format!(
            "listed case-(2) row {} is {kind}; {}",
            r.alpha.pretty(),
            if hit { "the enumeration agrees" } else { "the enumeration does not produce it" }
        ));
    }
    if report_case2 {
        let labels: Vec<String> = found_case2.iter().map(|f| f.alpha.pretty()).collect();
        reports.push(if labels.is_empty() {
            "enumeration finds no case-(2) rows".to_string()
        } else {
            format!("enumeration finds case-(2) rows {}", labels.join(", "))
        });
    }
    for a in &nonzero_weight {
        reports.push(format!("row {a} has nonzero dominant weight"));
    }
    let matches = missing.is_empty() && unexpected.is_empty() && nonzero_weight.is_empty();
    Some(Comparison { matches, missing, unexpected, reports })
}
