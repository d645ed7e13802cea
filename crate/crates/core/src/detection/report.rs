use serde::Serialize;

use super::bockstein::{bockstein_image, BocksteinImage};
use super::solver::{s_closed_form_degree1, s_solver};
use super::valuation::{alpha_valuation, beta_valuation, c_jk, BetaBound};
use crate::error::Result;
use crate::exactalg::GradedElem;

#[derive(Clone, Debug, Serialize)]
pub struct SEntry {
    pub subgroup: String,
    pub i: usize,
    pub value: GradedElem,
    pub pi_valuation: u32,
    pub unit: bool,
    pub expected_unit: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaBound {
    pub j: u32,
    pub value: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetectionReport {
    pub s_table: Vec<SEntry>,
    pub degree_one_closed_form: bool,
    /// Every `j ≥ 2`; only `j ≥ 3` counts toward the verdict, since the
    /// target group for `j = 2` is zero.
    pub bockstein: Vec<BocksteinImage>,
    pub beta_bounds: Vec<BetaBound>,
    pub alpha_bounds: Vec<AlphaBound>,
    pub verdict: String,
}

impl DetectionReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// `s_{H,i}` for `i = 2^k − 1 ≤ 2^{8/h} − 1`: only the last of each family is a unit.
fn s_table() -> Result<Vec<SEntry>> {
    let mut out = Vec::new();
    for h in [2u64, 4, 8] {
        let top = (1usize << (8 / h)) - 1;
        let values = s_solver(h, top)?;
        for v in values.into_iter().filter(|v| (v.i + 1).is_power_of_two()) {
            let val = v.pi_valuation.unwrap_or(u32::MAX);
            let expected_unit = v.i == top;
            let unit = val == 0;
            out.push(SEntry {
                subgroup: format!("C{h}"),
                i: v.i,
                value: v.value,
                pi_valuation: val,
                unit,
                expected_unit,
                pass: unit == expected_unit,
            });
        }
    }
    Ok(out)
}

pub fn detection_report(j_max: u32) -> Result<DetectionReport> {
    let s_table = s_table()?;
    let mut degree_one_closed_form = true;
    for h in [2u64, 4, 8] {
        degree_one_closed_form &= s_solver(h, 1)?[0].value == s_closed_form_degree1(h)?;
    }
    let bockstein: Vec<BocksteinImage> = (2..=j_max).map(bockstein_image).collect::<Result<_>>()?;
    let mut beta_bounds = Vec::new();
    for j in 6..=j_max {
        for k in 1..j.div_ceil(2) {
            let v = beta_valuation(j, k)?;
            let pass = v.value >= num_rational::BigRational::from_integer(5.into());
            beta_bounds.push(BetaBound { j, k, c: c_jk(j, k)?, value: v.value.to_string(), pass });
        }
    }
    let alpha_bounds: Vec<AlphaBound> = (3..=j_max)
        .map(|j| {
            let v = alpha_valuation(j).value;
            AlphaBound { j, pass: v > num_rational::BigRational::from_integer(4.into()), value: v.to_string() }
        })
        .collect();
    let ok = s_table.iter().all(|e| e.pass)
        && degree_one_closed_form
        && bockstein.iter().filter(|b| b.j >= 3).all(|b| b.nonzero && b.cobar_agrees)
        && beta_bounds.iter().all(|b| b.pass)
        && alpha_bounds.iter().all(|a| a.pass);
    Ok(DetectionReport {
        s_table,
        degree_one_closed_form,
        bockstein,
        beta_bounds,
        alpha_bounds,
        verdict: if ok { "pass" } else { "fail" }.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_passes() {
        let r = detection_report(10).unwrap();
        assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        let vals: Vec<(String, usize, u32)> = r.s_table.iter().map(|e| (e.subgroup.clone(), e.i, e.pi_valuation)).collect();
        assert_eq!(
            vals,
            vec![
                ("C2".into(), 1, 3),
                ("C2".into(), 3, 2),
                ("C2".into(), 7, 1),
                ("C2".into(), 15, 0),
                ("C4".into(), 1, 1),
                ("C4".into(), 3, 0),
                ("C8".into(), 1, 0),
            ]
        );
    }
}
