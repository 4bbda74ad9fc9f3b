//! Named exact checks over every module, driven by a golden-value fixture.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{act_v, h_image};
use crate::check::{expect, expect_eq, Mismatch, Outcome};
use crate::equivariance;
use crate::error::{Error, Result};
use crate::lie;
use crate::linalg::Matrix;
use crate::pvs::{
    composite_matrix, cubic_form, delta, pfaffians, phi1, phi1_bar, phi1_double_sum, quadratic_form,
    span_dim, span_point, ternary_form, DualMatrix3, VElement,
};
use crate::rat::{self, Rat, RatText};
use crate::sample::{Sampler, DEFAULT_SEED};
use crate::search::construct_exact_value;
use crate::tensor::{factorial, multi_indices, SymForm, Variance};
use crate::wpoint::{build_w, f_h, q_form, s_generators, w_literal};

pub const GOLDEN_JSON: &str = include_str!("../fixtures/golden.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairingCase {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub value: RatText,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExactValueCase {
    pub r: RatText,
    pub lambda: RatText,
    pub t: RatText,
}

/// Expected values at the distinguished point and elsewhere.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Golden {
    #[serde(default)]
    pub notes: BTreeMap<String, String>,
    pub w: String,
    pub f_h: Vec<String>,
    pub pfaffians: Vec<String>,
    pub phi1_bar: DualMatrix3,
    pub ternary_n_star: Vec<RatText>,
    pub ternary_matrix: Vec<Vec<RatText>>,
    pub composite_matrix: DualMatrix3,
    pub quadratic_form: String,
    pub cubic_form: String,
    pub q_form: String,
    pub delta: RatText,
    pub s_span: Vec<String>,
    pub stabilizer_dim: usize,
    pub subalgebra_dims: Vec<usize>,
    pub alt2_weights: Vec<i64>,
    pub pairings: Vec<PairingCase>,
    pub exact_values: Vec<ExactValueCase>,
}

impl Golden {
    pub fn builtin() -> Golden {
        serde_json::from_str(GOLDEN_JSON).expect("bundled golden fixture parses")
    }

    pub fn from_json(text: &str) -> Result<Golden> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Glob over check names; `None` runs everything.
    pub filter: Option<String>,
    /// Random orbit points per equivariance law.
    pub samples: usize,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            filter: None,
            samples: 20,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    pub millis: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
    pub millis: f64,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

struct Ctx {
    golden: Golden,
    seed: u64,
    samples: usize,
}

type Run = Box<dyn Fn(&Ctx) -> Outcome + Send + Sync>;

pub struct Check {
    pub name: String,
    run: Run,
}

fn check(name: impl Into<String>, run: impl Fn(&Ctx) -> Outcome + Send + Sync + 'static) -> Check {
    Check {
        name: name.into(),
        run: Box::new(run),
    }
}

fn texts<T>(xs: &[T], f: impl Fn(&T) -> String) -> Vec<String> {
    xs.iter().map(f).collect()
}

fn failed(what: &str, e: impl std::fmt::Display) -> Mismatch {
    Mismatch {
        what: what.into(),
        expected: "success".into(),
        actual: e.to_string(),
    }
}

fn golden_checks() -> Vec<Check> {
    vec![
        check("w.golden", |c| expect_eq("w", &c.golden.w, &w_literal().to_tensor_text())),
        check("w.assembly", |_| expect_eq("w from f_H", &w_literal(), &build_w())),
        check("f_h.golden", |c| {
            let actual: Vec<String> = (0..3).map(|i| f_h(i).expect("index").to_text()).collect();
            expect_eq("f_H0, f_H1, f_H2", &c.golden.f_h, &actual)
        }),
        check("pfaffians.golden", |c| {
            let actual = texts(&pfaffians(&w_literal()), |f| f.to_text("l"));
            expect_eq("Pfaff_0..4(w)", &c.golden.pfaffians, &actual)
        }),
        check("pfaffians.double_sum", |c| {
            let mut s = Sampler::new(c.seed);
            for _ in 0..c.samples {
                let x = s.v_element();
                expect_eq("phi1 by double sum and by Pfaffians", &phi1(&x), &phi1_double_sum(&x))?;
            }
            Ok(())
        }),
        check("phi1_bar.golden", |c| {
            expect_eq("phi1_bar(w)", &c.golden.phi1_bar, &phi1_bar(&w_literal()))
        }),
        check("phi1.golden", |c| {
            let q = ternary_form(&w_literal());
            expect_eq(
                "Phi1(w) in n*",
                &rat::from_text_vec(c.golden.ternary_n_star.clone()),
                &q.n_star().to_vec(),
            )?;
            let m = Matrix::from_text(c.golden.ternary_matrix.clone()).map_err(|e| failed("fixture", e))?;
            expect_eq("matrix of Phi1(w)", &m, q.matrix())
        }),
        check("phi3.golden", |c| {
            expect_eq("phi3(w)", &c.golden.composite_matrix, &composite_matrix(&w_literal()))
        }),
        check("phi2.golden", |c| {
            expect_eq("Phi2(w)", &c.golden.quadratic_form, &quadratic_form(&w_literal()).to_text("a"))
        }),
        check("phi2.is_72q", |_| {
            expect_eq("Phi2(w) = 72 Q", &q_form().scale(&rat::int(72)), &quadratic_form(&w_literal()))
        }),
        check("cubic.golden", |c| {
            expect_eq("F_w", &c.golden.cubic_form, &cubic_form(&w_literal()).to_text("a"))
        }),
        check("q.golden", |c| expect_eq("Q", &c.golden.q_form, &q_form().to_text("a"))),
        check("delta.golden", |c| expect_eq("Delta(w)", &c.golden.delta.0, &delta(&w_literal()))),
        check("s.golden", |c| {
            let expected = texts(&s_generators(), |t| t.to_text());
            expect_eq("generators of S", &c.golden.s_span, &expected)?;
            let p = span_point(&w_literal()).map_err(|e| failed("Phi3(w)", e))?;
            expect("Phi3(w) satisfies the Pluecker relations", p.satisfies_relations())?;
            expect("Phi3(w) = [S]", p.span().same_as(&crate::wpoint::s_span()))
        }),
    ]
}

fn pairing_checks() -> Vec<Check> {
    vec![
        check("pairing.table", |c| {
            for case in &c.golden.pairings {
                let a = SymForm::monomial(Variance::Covariant, &case.left, Rat::one());
                let b = SymForm::monomial(Variance::Contravariant, &case.right, Rat::one());
                let v = SymForm::pairing(&a, &b).map_err(|e| failed("pairing", e))?;
                expect_eq(format!("({:?}, {:?})", case.left, case.right), &case.value.0, &v)?;
            }
            for n in 1..=5 {
                for d in 1..=4 {
                    let idx = multi_indices(n, d);
                    for i in &idx {
                        for j in &idx {
                            let a = SymForm::monomial(Variance::Covariant, i, Rat::one());
                            let b = SymForm::monomial(Variance::Contravariant, j, Rat::one());
                            let v = SymForm::pairing(&a, &b).map_err(|e| failed("pairing", e))?;
                            let expected = if i == j {
                                let num = i.iter().fold(num_bigint::BigInt::one(), |acc, &e| acc * factorial(e));
                                Rat::new(num, factorial(d))
                            } else {
                                Rat::zero()
                            };
                            expect_eq(format!("({i:?}, {j:?})"), &expected, &v)?;
                        }
                    }
                }
            }
            Ok(())
        }),
        check("pairing.evaluation", |c| {
            let mut s = Sampler::new(c.seed);
            for _ in 0..c.samples {
                let n = 3;
                let d = 3;
                let coeffs = s.vector(multi_indices(n, d).len());
                let f = SymForm::from_dense(n, d, Variance::Contravariant, &coeffs);
                let a = SymForm::linear(Variance::Covariant, &s.vector(n));
                let embedded = SymForm::power_embed(&a, d).map_err(|e| failed("power_embed", e))?;
                let paired = SymForm::pairing(&embedded, &f).map_err(|e| failed("pairing", e))?;
                let direct = f.eval(&a).map_err(|e| failed("eval", e))?;
                expect_eq("f(a) = (i_d(a), f)_d", &direct, &paired)?;
            }
            Ok(())
        }),
    ]
}

fn equivariance_checks() -> Vec<Check> {
    type Law = fn(&crate::GroupElement, &VElement) -> Outcome;
    let laws: [(&str, Law); 7] = [
        ("phi1", equivariance::phi1_law),
        ("phi1_ternary", equivariance::ternary_law),
        ("phi3", equivariance::composite_law),
        ("phi2", equivariance::quadratic_law),
        ("cubic", equivariance::cubic_law),
        ("span", equivariance::span_law),
        ("delta", equivariance::delta_law),
    ];
    laws.into_iter()
        .map(|(name, law)| {
            check(format!("equivariance.{name}"), move |c| {
                let mut s = Sampler::new(c.seed);
                for _ in 0..c.samples {
                    let (_, x) = s.orbit_point();
                    let g = s.group_element();
                    law(&g, &x)?;
                }
                Ok(())
            })
        })
        .collect()
}

fn fixed_point_checks() -> Vec<Check> {
    vec![
        check("fixed.pgl2", |c| {
            let mut s = Sampler::new(c.seed);
            let w = w_literal();
            for _ in 0..c.samples {
                let g = s.pgl2_element();
                expect_eq("pgl2 fixes w", &w, &act_v(&g, &w))?;
            }
            Ok(())
        }),
        check("stabilizer.dimension", |c| {
            let stab = lie::stabilizer_algebra(&w_literal());
            expect_eq("dim stabilizer of w", &c.golden.stabilizer_dim, &stab.len())?;
            let span = lie::span_of(&stab);
            for p in h_image() {
                expect("sl(2) image inside the stabilizer", span.contains(&p.to_vec()))?;
            }
            let torus = crate::LiePair {
                x: Matrix::identity(5),
                y: Matrix::scalar(3, &rat::int(-2)),
            };
            expect("(I5, -2 I3) inside the stabilizer", span.contains(&torus.to_vec()))
        }),
        check("invariants.unique", |_| {
            let on_v = lie::fixed_subspace(&h_image(), lie::Representation::V);
            expect_eq("dim of sl(2) invariants in V", &1, &on_v.dim())?;
            expect("w spans them", on_v.contains(&w_literal().coords()))?;
            lie::fixed_point_checks(&w_literal())
        }),
        check("alt2.weights", |c| {
            let expected: Vec<Rat> = c.golden.alt2_weights.iter().map(|&k| rat::int(k)).collect();
            expect_eq("A1 weights on the alternating square", &expected, &lie::alt2_weights())?;
            let mut union = lie::irreducible_weights(6);
            union.extend(lie::irreducible_weights(2));
            union.sort_by(|a, b| b.cmp(a));
            expect_eq("weights of 6L + 2L", &union, &lie::alt2_weights())
        }),
        check("alt2.submodule", |_| {
            let (highest, span) = lie::weight_two_submodule();
            expect_eq("highest-weight vectors of weight 2", &1, &highest)?;
            expect_eq("dim of the submodule", &3, &span.dim())?;
            expect("the submodule is S", span.same_as(&crate::wpoint::s_span()))
        }),
        check("semistable.orbit", |c| {
            expect_eq("Delta(w)", &rat::int(-4), &delta(&w_literal()))?;
            let mut s = Sampler::new(c.seed);
            for _ in 0..c.samples {
                let (_, x) = s.orbit_point();
                expect_eq("dim S_x", &3, &span_dim(&x))?;
                let m = quadratic_form(&x).quadratic_matrix().map_err(|e| failed("Phi2", e))?;
                expect("Phi2(x) non-degenerate", !m.det().is_zero())?;
                expect("Delta(x) nonzero", !delta(&x).is_zero())?;
            }
            Ok(())
        }),
    ]
}

fn lie_checks() -> Vec<Check> {
    let mut out: Vec<Check> = lie::builtin_bracket_table()
        .identities
        .into_iter()
        .map(|id| check(format!("brackets.{}", id.name), move |_| id.verify()))
        .collect();
    for (a, b, claimed) in lie::span_claims() {
        out.push(check(format!("spans.{a}.{b}"), move |_| {
            lie::verify_span_claim(a, b, &claimed)
        }));
    }
    out.push(check("subalgebras.dimensions", |c| {
        let dims: Vec<usize> = lie::enumerate_intermediate().iter().map(|a| a.dim()).collect();
        expect_eq("dimensions", &c.golden.subalgebra_dims, &dims)
    }));
    out.push(check("subalgebras.closed", |_| {
        for a in lie::enumerate_intermediate() {
            expect(format!("{} bracket-closed", a.name), lie::is_closed(&a.basis))?;
            expect_eq(format!("closure of {}", a.name), &a.dim(), &lie::closure(&a.basis).len())?;
            let span = lie::span_of(&a.basis);
            for p in h_image() {
                expect(format!("{} contains the sl(2) image", a.name), span.contains(&p.to_vec()))?;
            }
        }
        Ok(())
    }));
    out
}

fn exact_value_checks(golden: &Golden) -> Vec<Check> {
    golden
        .exact_values
        .iter()
        .enumerate()
        .map(|(k, case)| {
            let name = format!("exact_value.r={}", case.r.0);
            check(name, move |c| {
                let case = &c.golden.exact_values[k];
                let out = construct_exact_value(&case.r.0, &case.lambda.0).map_err(|e| failed("construction", e))?;
                expect_eq("t", &Some(case.t.0.clone()), &out.t)?;
                expect_eq("F at a", &Some(case.r.0.clone()), &out.value)
            })
        })
        .collect()
}

/// Every check, in report order.
pub fn all_checks(golden: &Golden) -> Vec<Check> {
    let mut out = pairing_checks();
    out.extend(golden_checks());
    out.extend(equivariance_checks());
    out.extend(fixed_point_checks());
    out.extend(lie_checks());
    out.extend(exact_value_checks(golden));
    out
}

pub fn check_names(golden: &Golden) -> Vec<String> {
    all_checks(golden).into_iter().map(|c| c.name).collect()
}

/// Runs the checks selected by `opts.filter` on `opts.workers` threads.
pub fn run(golden: Golden, opts: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let pattern = opts
        .filter
        .as_deref()
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::InvalidParameter(format!("bad filter: {e}")))?;
    let selected: Vec<Check> = all_checks(&golden)
        .into_iter()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(&c.name)))
        .collect();
    let mut warnings = Vec::new();
    if selected.is_empty() {
        warnings.push(format!(
            "filter {:?} matches no checks",
            opts.filter.as_deref().unwrap_or("")
        ));
    }
    let ctx = Ctx {
        golden,
        seed: opts.seed,
        samples: opts.samples,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let checks: Vec<CheckResult> = pool.install(|| {
        selected
            .par_iter()
            .map(|c| {
                let t = Instant::now();
                let outcome = (c.run)(&ctx);
                CheckResult {
                    name: c.name.clone(),
                    status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
                    mismatch: outcome.err(),
                    millis: t.elapsed().as_secs_f64() * 1e3,
                }
            })
            .collect()
    });
    Ok(VerifyReport {
        passed: checks.iter().all(|c| c.status == Status::Pass),
        seed: opts.seed,
        checks,
        warnings,
        millis: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names = check_names(&Golden::builtin());
        let set: std::collections::BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }
}
