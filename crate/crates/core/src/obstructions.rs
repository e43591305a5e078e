//! Topological consequence predicates evaluated from computed invariants:
//! Thurston-norm lower bounds, fibering obstructions, ropelength bounds,
//! and the symplectic obstruction inequality.
//!
//! Verdicts never overclaim: whenever a hypothesis of the cited statement
//! is not verifiable from the computed data (closedness, irreducibility,
//! universally quantified classes) the verdict is marked inapplicable or
//! carries an explicit caveat.

use crate::alexander::InvariantReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    ThurstonLowerBound,
    FiberingObstruction,
    Ropelength,
    SymplecticObstruction,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum VerdictValue {
    /// An integer bound, e.g. a Thurston norm lower bound.
    Int(i64),
    /// A ropelength bound `2π(1 + sqrt(arg))` kept exact.
    TwoPiOnePlusSqrt { sqrt_arg: i64, exact: String, decimal: f64 },
    /// Obstruction predicates: fired or silent.
    Fired(bool),
}

/// Outcome of one theorem application.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundVerdict {
    pub kind: VerdictKind,
    pub applicable: bool,
    pub value: VerdictValue,
    pub citation: String,
    pub caveats: Vec<String>,
}

/// Externally supplied higher-order degree data (levels `n >= 1` are not
/// computed here).
#[derive(Clone, Debug, Default)]
pub struct HigherDegrees {
    /// Entries `(n, psi, delta_bar_n)` with `n >= 1`.
    pub delta_bars: Vec<(usize, Vec<i64>, i64)>,
    /// Entries `(n, psi, delta_n)` with `n >= 1`.
    pub deltas: Vec<(usize, Vec<i64>, i64)>,
}

impl HigherDegrees {
    pub fn is_empty(&self) -> bool {
        self.delta_bars.is_empty() && self.deltas.is_empty()
    }
}

fn ropelength_value(arg: i64) -> VerdictValue {
    let decimal = 2.0 * std::f64::consts::PI * (1.0 + (arg.max(0) as f64).sqrt());
    VerdictValue::TwoPiOnePlusSqrt {
        sqrt_arg: arg,
        exact: format!("2*pi*(1+sqrt({}))", arg),
        decimal,
    }
}

/// Lower bound for the Thurston norm of `psi` from the level-0 data.
///
/// With `beta1 >= 2` the unrefined degree bounds the norm directly.  With
/// `beta1 = 1` and `psi` primitive the bound carries the correction term
/// `1 + beta3`.  When the input is a link exterior and `psi` is one of the
/// meridian classes, the refined degree gives the sharper `delta0 - 1`
/// which applies even at positive rank.
pub fn thurston_lower_bound(
    report: &InvariantReport,
    beta3: i64,
    link_meridian: bool,
) -> BoundVerdict {
    let beta1 = report.beta1 as i64;
    let mut candidates: Vec<(i64, String)> = Vec::new();
    let mut caveats = Vec::new();
    if beta1 >= 2 {
        candidates.push((report.delta_bar0, "norm >= unrefined degree (beta1 >= 2)".to_string()));
    } else if beta1 == 1 {
        let prim = report.psi.iter().fold(0i64, |a, &b| num::integer::gcd(a, b)).abs() == 1;
        if prim {
            candidates.push((
                report.delta_bar0 - 1 - beta3,
                format!("norm >= unrefined degree - 1 - beta3 (beta1 = 1, beta3 = {})", beta3),
            ));
        } else {
            caveats.push("beta1 = 1 bound needs a generator class".to_string());
        }
    }
    if link_meridian {
        candidates.push((report.delta0 - 1, "norm >= delta0 - 1 for a link meridian class".to_string()));
    }
    match candidates.iter().max_by_key(|(v, _)| *v) {
        Some((v, citation)) => BoundVerdict {
            kind: VerdictKind::ThurstonLowerBound,
            applicable: true,
            value: VerdictValue::Int((*v).max(0)),
            citation: citation.clone(),
            caveats,
        },
        None => BoundVerdict {
            kind: VerdictKind::ThurstonLowerBound,
            applicable: false,
            value: VerdictValue::Int(0),
            citation: "no applicable lower bound".to_string(),
            caveats,
        },
    }
}

/// Fibering obstruction over the sampled classes.
///
/// Condition (1): positive rank at level 0.  Degree-gap conditions with a
/// level `n >= 1` fire only when the caller supplies externally computed
/// degrees; the verdict names the grid actually checked, never a
/// universal quantifier.
pub fn fibering_obstruction(
    reports: &[InvariantReport],
    beta3: i64,
    higher: &HigherDegrees,
) -> BoundVerdict {
    assert!(!reports.is_empty(), "at least one report required");
    let beta1 = reports[0].beta1 as i64;
    let mut caveats = vec![format!(
        "checked on {} sampled class(es); degree-gap conditions quantify over all classes",
        reports.len()
    )];
    if let Some(r) = reports.iter().find(|r| r.r0 != 0) {
        return BoundVerdict {
            kind: VerdictKind::FiberingObstruction,
            applicable: true,
            value: VerdictValue::Fired(true),
            citation: format!("condition (1): r0 = {} != 0", r.r0),
            caveats,
        };
    }
    // Condition (2): beta1 >= 2 and some gap d_ij(psi) != 0 for all sampled psi.
    if beta1 >= 2 && !higher.deltas.is_empty() {
        let all_gap = reports.iter().all(|r| {
            higher
                .deltas
                .iter()
                .any(|(n, psi, d)| *n >= 1 && *psi == r.psi && *d != r.delta0)
        });
        if all_gap {
            return BoundVerdict {
                kind: VerdictKind::FiberingObstruction,
                applicable: true,
                value: VerdictValue::Fired(true),
                citation: "condition (2): degree gap d_0n(psi) != 0 on every sampled class".to_string(),
                caveats,
            };
        }
    }
    // Condition (4): beta1 = 1, generator class, d_0n(psi) != 1 + beta3.
    if beta1 == 1 {
        for r in reports {
            let prim = r.psi.iter().fold(0i64, |a, &b| num::integer::gcd(a, b)).abs() == 1;
            if !prim {
                continue;
            }
            for (n, psi, d) in &higher.deltas {
                if *n >= 1 && *psi == r.psi && r.delta0 - d != 1 + beta3 {
                    return BoundVerdict {
                        kind: VerdictKind::FiberingObstruction,
                        applicable: true,
                        value: VerdictValue::Fired(true),
                        citation: format!(
                            "condition (4): d_0{}(psi) = {} != 1 + beta3",
                            n,
                            r.delta0 - d
                        ),
                        caveats,
                    };
                }
            }
        }
    }
    if higher.is_empty() {
        caveats.push("no higher-level degrees supplied; only condition (1) was checked".to_string());
    }
    BoundVerdict {
        kind: VerdictKind::FiberingObstruction,
        applicable: true,
        value: VerdictValue::Fired(false),
        citation: "no condition fired".to_string(),
        caveats,
    }
}

/// Ropelength lower bound for the component whose meridian class produced
/// `report`.  The refined form `2π(1+sqrt(delta0-1))` applies to link
/// meridian classes; the unrefined form `2π(1+sqrt(delta_bar0))` is also
/// reported when requested or when the rank is positive.
pub fn ropelength_bound(report: &InvariantReport, link_meridian: bool) -> BoundVerdict {
    if !link_meridian {
        return BoundVerdict {
            kind: VerdictKind::Ropelength,
            applicable: false,
            value: VerdictValue::Int(0),
            citation: "ropelength bounds need a link meridian class".to_string(),
            caveats: vec![],
        };
    }
    let mut caveats = Vec::new();
    let arg = report.delta0 - 1;
    if arg < 0 {
        caveats.push("delta0 = 0: bound degenerates to 2*pi".to_string());
    }
    if report.r0 >= 1 {
        caveats.push(format!(
            "unrefined form 2*pi*(1+sqrt(delta_bar0)) = 2*pi*(1+sqrt({})) is weaker here (r0 >= 1)",
            report.delta_bar0
        ));
    }
    BoundVerdict {
        kind: VerdictKind::Ropelength,
        applicable: true,
        value: ropelength_value(arg.max(0)),
        citation: "ropelength >= 2*pi*(1+sqrt(delta0 - 1)) for each component".to_string(),
        caveats,
    }
}

/// Symplectic obstruction for the product with a circle, from supplied
/// higher-level unrefined degrees.  Conditional on the manifold being
/// closed and irreducible, which a presentation cannot certify.
pub fn symplectic_obstruction(
    reports: &[InvariantReport],
    higher: &HigherDegrees,
) -> BoundVerdict {
    assert!(!reports.is_empty(), "at least one report required");
    let beta1 = reports[0].beta1 as i64;
    let caveats = vec![
        "conditional on: closed, irreducible".to_string(),
        format!("checked on {} sampled class(es)", reports.len()),
    ];
    if higher.delta_bars.is_empty() {
        return BoundVerdict {
            kind: VerdictKind::SymplecticObstruction,
            applicable: false,
            value: VerdictValue::Fired(false),
            citation: "no higher-level unrefined degrees supplied".to_string(),
            caveats,
        };
    }
    if beta1 >= 2 {
        // Condition (1): some n >= 1 with delta_bar_n > delta_bar_0 for all sampled psi.
        let mut levels: Vec<usize> = higher.delta_bars.iter().map(|(n, _, _)| *n).collect();
        levels.sort_unstable();
        levels.dedup();
        for n in levels {
            let all = reports.iter().all(|r| {
                higher
                    .delta_bars
                    .iter()
                    .any(|(m, psi, d)| *m == n && *psi == r.psi && *d > r.delta_bar0)
            });
            if all {
                return BoundVerdict {
                    kind: VerdictKind::SymplecticObstruction,
                    applicable: true,
                    value: VerdictValue::Fired(true),
                    citation: format!(
                        "condition (1): delta_bar_{}(psi) > delta_bar_0(psi) on every sampled class",
                        n
                    ),
                    caveats,
                };
            }
        }
    } else if beta1 == 1 {
        // Condition (2): generator psi with delta_bar_n > delta_bar_0 - 2.
        for r in reports {
            let prim = r.psi.iter().fold(0i64, |a, &b| num::integer::gcd(a, b)).abs() == 1;
            if !prim {
                continue;
            }
            for (n, psi, d) in &higher.delta_bars {
                if *n >= 1 && *psi == r.psi && *d > r.delta_bar0 - 2 {
                    return BoundVerdict {
                        kind: VerdictKind::SymplecticObstruction,
                        applicable: true,
                        value: VerdictValue::Fired(true),
                        citation: format!(
                            "condition (2): delta_bar_{}(psi) = {} > delta_bar_0(psi) - 2",
                            n, d
                        ),
                        caveats,
                    };
                }
            }
        }
    }
    BoundVerdict {
        kind: VerdictKind::SymplecticObstruction,
        applicable: true,
        value: VerdictValue::Fired(false),
        citation: "no condition fired".to_string(),
        caveats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(beta1: usize, psi: Vec<i64>, r0: usize, delta0: i64, delta_bar0: i64) -> InvariantReport {
        InvariantReport {
            schema: 1,
            beta1,
            torsion_h1: vec![],
            alexander_poly: String::new(),
            psi,
            alex_norm: delta_bar0,
            delta_bar0,
            r0,
            delta0,
            diagonal_degrees: vec![],
            flags: vec![],
            verdicts: vec![],
        }
    }

    #[test]
    fn trefoil_norm_bound() {
        // beta1 = 1, delta0 = delta_bar0 = 2, beta3 = 0: norm >= 1.
        let r = report(1, vec![1], 0, 2, 2);
        let v = thurston_lower_bound(&r, 0, true);
        assert!(v.applicable);
        assert_eq!(v.value, VerdictValue::Int(1));
    }

    #[test]
    fn link_meridian_bound_uses_refined_degree() {
        // beta1 = 2, r0 = 1: delta_bar0 = 0 but delta0 = 4 gives norm >= 3.
        let r = report(2, vec![1, 0], 1, 4, 0);
        let v = thurston_lower_bound(&r, 0, true);
        assert_eq!(v.value, VerdictValue::Int(3));
    }

    #[test]
    fn connect_sum_trivial_bound() {
        let r = report(2, vec![1, 0], 1, 0, 0);
        let v = thurston_lower_bound(&r, 1, false);
        assert_eq!(v.value, VerdictValue::Int(0));
    }

    #[test]
    fn fibering_fires_on_positive_rank() {
        let r = report(2, vec![1, 0], 1, 4, 0);
        let v = fibering_obstruction(&[r], 0, &HigherDegrees::default());
        assert_eq!(v.value, VerdictValue::Fired(true));
    }

    #[test]
    fn fibering_silent_for_fibered_examples() {
        // Trefoil fibers: r0 = 0, no higher data, silent.
        let r = report(1, vec![1], 0, 2, 2);
        let v = fibering_obstruction(&[r], 0, &HigherDegrees::default());
        assert_eq!(v.value, VerdictValue::Fired(false));
        // 3-torus: everything zero, silent.
        let r = report(3, vec![1, 0, 0], 0, 0, 0);
        let v = fibering_obstruction(&[r], 1, &HigherDegrees::default());
        assert_eq!(v.value, VerdictValue::Fired(false));
    }

    #[test]
    fn ropelength_values() {
        let r = report(2, vec![1, 0], 1, 4, 0);
        let v = ropelength_bound(&r, true);
        match v.value {
            VerdictValue::TwoPiOnePlusSqrt { sqrt_arg, decimal, .. } => {
                assert_eq!(sqrt_arg, 3);
                assert!((decimal - 2.0 * std::f64::consts::PI * (1.0 + 3f64.sqrt())).abs() < 1e-12);
            }
            _ => panic!("wrong value shape"),
        }
        // Degenerate delta0 = 0 case keeps the caveat.
        let r = report(1, vec![1], 0, 0, 0);
        let v = ropelength_bound(&r, true);
        match v.value {
            VerdictValue::TwoPiOnePlusSqrt { sqrt_arg, .. } => assert_eq!(sqrt_arg, 0),
            _ => panic!("wrong value shape"),
        }
        assert!(v.caveats.iter().any(|c| c.contains("degenerates")));
        // delta0 = 1 gives exactly 2*pi.
        let r = report(1, vec![1], 0, 1, 1);
        let v = ropelength_bound(&r, true);
        match v.value {
            VerdictValue::TwoPiOnePlusSqrt { sqrt_arg, decimal, .. } => {
                assert_eq!(sqrt_arg, 0);
                assert!((decimal - 2.0 * std::f64::consts::PI).abs() < 1e-12);
            }
            _ => panic!("wrong value shape"),
        }
    }

    #[test]
    fn symplectic_conditions() {
        // Supplied delta_bar_1 = 3 > delta_bar_0 = 2 for all sampled psi.
        let r1 = report(2, vec![1, 0], 0, 2, 2);
        let r2 = report(2, vec![0, 1], 0, 2, 2);
        let higher = HigherDegrees {
            delta_bars: vec![(1, vec![1, 0], 3), (1, vec![0, 1], 3)],
            deltas: vec![],
        };
        let v = symplectic_obstruction(&[r1.clone(), r2], &higher);
        assert_eq!(v.value, VerdictValue::Fired(true));
        // No higher data: inapplicable.
        let v = symplectic_obstruction(&[r1], &HigherDegrees::default());
        assert!(!v.applicable);
        // beta1 = 1, delta_bar_1 = delta_bar_0 - 2: not strict, silent.
        let r = report(1, vec![1], 0, 4, 4);
        let higher = HigherDegrees { delta_bars: vec![(1, vec![1], 2)], deltas: vec![] };
        let v = symplectic_obstruction(&[r], &higher);
        assert_eq!(v.value, VerdictValue::Fired(false));
    }

    #[test]
    fn monotone_in_hypotheses() {
        // Removing supplied higher data can only change fired -> silent/inapplicable.
        let r = report(2, vec![1, 0], 0, 2, 2);
        let higher = HigherDegrees { delta_bars: vec![(1, vec![1, 0], 3)], deltas: vec![(1, vec![1, 0], 3)] };
        let with = fibering_obstruction(&[r.clone()], 0, &higher);
        let without = fibering_obstruction(&[r], 0, &HigherDegrees::default());
        assert_eq!(with.value, VerdictValue::Fired(true));
        assert_eq!(without.value, VerdictValue::Fired(false));
    }
}
