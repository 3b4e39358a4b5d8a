//! The identity catalog: instance generators for every displayed commutation
//! identity, the appendix identities, and the power-commutation families,
//! plus the runner that certifies them against the rewriting engine.

use crate::coeff::{alpha_m, beta_m, rs_integer, IndexClass, RatFun};
use crate::freealg::{Element, Letter, Word};
use crate::qgroup::AlgebraInstance;
use crate::rewrite::{certify_identity, Certification, DEFAULT_BUDGET};
use crate::rootsys::group_pairing;

fn rf(a: i64, b: i64) -> RatFun {
    RatFun::mono(a, b)
}

fn one() -> RatFun {
    RatFun::one()
}

fn zeta() -> RatFun {
    rf(0, 2).sub(&rf(2, 0))
}

/// Build an element from (coefficient, letters) pairs.
fn el(parts: &[(RatFun, Vec<Letter>)]) -> Element<RatFun> {
    let mut out = Element::zero();
    for (c, ls) in parts {
        out.add_term(Word::from_letters(ls), c.clone());
    }
    out
}

fn e(i: u8) -> Letter {
    Letter::E(i, i)
}

fn f(i: u8) -> Letter {
    Letter::F(i, i)
}

/// E letter by paper indices: `ep(i, j, n)` is E_{i,j} for j <= n and
/// `epp(i, j, n)` is E_{i,j'}.
fn ep(i: u8, j: u8) -> Letter {
    Letter::E(i, j)
}

fn epp(i: u8, j: u8, n: u8) -> Letter {
    Letter::E(i, 2 * n - j + 1)
}

#[derive(Clone, Debug)]
pub struct IdentityInstance {
    pub tag: String,
    pub params: String,
    pub lhs: Element<RatFun>,
    pub rhs: Element<RatFun>,
}

impl IdentityInstance {
    fn new(tag: &str, params: String, lhs: Element<RatFun>, rhs: Element<RatFun>) -> Self {
        IdentityInstance { tag: tag.into(), params, lhs, rhs }
    }
}

/// Record emitted by suite runs.
#[derive(Clone, Debug)]
pub struct SuiteRecord {
    pub tag: String,
    pub params: String,
    pub status: SuiteStatus,
    pub steps: u64,
    pub millis: u128,
    pub residue: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    Inconclusive,
    Skipped(String),
}

impl SuiteStatus {
    pub fn as_str(&self) -> &str {
        match self {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Inconclusive => "INCONCLUSIVE",
            SuiteStatus::Skipped(_) => "SKIP",
        }
    }
}

pub fn run_instances(inst: &AlgebraInstance, items: &[IdentityInstance]) -> Vec<SuiteRecord> {
    use rayon::prelude::*;
    items
        .par_iter()
        .map(|it| {
            let start = std::time::Instant::now();
            let cert = certify_identity(&it.lhs, &it.rhs, &inst.pbw_rules, DEFAULT_BUDGET);
            let millis = start.elapsed().as_millis();
            let (status, steps, residue) = match cert {
                Certification::Zero { steps } => (SuiteStatus::Pass, steps, None),
                Certification::Counterexample { residue, steps } => (
                    SuiteStatus::Fail,
                    steps,
                    Some(crate::rewrite::element_string(&residue, inst.n)),
                ),
                Certification::Inconclusive { .. } => (SuiteStatus::Inconclusive, 0, None),
            };
            SuiteRecord { tag: it.tag.clone(), params: it.params.clone(), status, steps, millis, residue }
        })
        .collect()
}

/// `[X, Y]_bullet = X Y - <omega'_X, omega_Y>^{-1} Y X` as an element.
fn bullet_bracket(x: Letter, y: Letter, n: u8) -> Element<RatFun> {
    let t = group_pairing(&x.degree(n), &y.degree(n), n).inv().unwrap();
    el(&[(one(), vec![x, y]), (t.neg(), vec![y, x])])
}

/// All displayed items of the straightening catalog at rank n.
pub fn straightening_instances(n: u8) -> Vec<IdentityInstance> {
    let mut out: Vec<IdentityInstance> = Vec::new();
    let mut push = |tag: &str, params: String, lhs: Element<RatFun>, rhs: Element<RatFun>| {
        out.push(IdentityInstance::new(tag, params, lhs, rhs));
    };
    let c = |a: i64, b: i64| rf(a, b);

    // 3.1 (1): E_{i,j} E_{k,l} = E_{k,l} E_{i,j}, i<=j, j+1<k<=l<=n
    for i in 1..=n {
        for j in i..=n {
            for k in (j + 2)..=n {
                for l in k..=n {
                    push(
                        "3.1.1",
                        format!("n={n},i={i},j={j},k={k},l={l}"),
                        el(&[(one(), vec![ep(i, j), ep(k, l)])]),
                        el(&[(one(), vec![ep(k, l), ep(i, j)])]),
                    );
                }
            }
        }
    }
    // 3.1 (2): E_{i,j} E_{k,l'} = E_{k,l'} E_{i,j}, i<=j, j+1<k<l<=n
    for i in 1..=n {
        for j in i..=n {
            for k in (j + 2)..=n {
                for l in (k + 1)..=n {
                    push(
                        "3.1.2",
                        format!("n={n},i={i},j={j},k={k},l={l}"),
                        el(&[(one(), vec![ep(i, j), epp(k, l, n)])]),
                        el(&[(one(), vec![epp(k, l, n), ep(i, j)])]),
                    );
                }
            }
        }
    }
    // 3.1 (3): E_{i,j} = E_{i,l-1} E_{l,j} - r^2 E_{l,j} E_{i,l-1}, i<l<=j<=n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in l..=n {
                push(
                    "3.1.3",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![ep(i, j)])]),
                    el(&[
                        (one(), vec![ep(i, l - 1), ep(l, j)]),
                        (c(2, 0).neg(), vec![ep(l, j), ep(i, l - 1)]),
                    ]),
                );
            }
        }
    }
    // 3.1 (4): E_{i,j'} = E_{i,l-1} E_{l,j'} - r^2 E_{l,j'} E_{i,l-1}, i<l<j<=n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 1)..=n {
                push(
                    "3.1.4",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![epp(i, j, n)])]),
                    el(&[
                        (one(), vec![ep(i, l - 1), epp(l, j, n)]),
                        (c(2, 0).neg(), vec![epp(l, j, n), ep(i, l - 1)]),
                    ]),
                );
            }
        }
    }
    // 3.2 (1): e_i E_{i,j} = s^2 E_{i,j} e_i, i<j<=n
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(
                "3.2.1",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![e(i), ep(i, j)])]),
                el(&[(c(0, 2), vec![ep(i, j), e(i)])]),
            );
        }
    }
    // 3.2 (2): e_i E_{i,j'} = s^2 E_{i,j'} e_i, i+1<j<=n
    for i in 1..=n {
        for j in (i + 2)..=n {
            push(
                "3.2.2",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![e(i), epp(i, j, n)])]),
                el(&[(c(0, 2), vec![epp(i, j, n), e(i)])]),
            );
        }
    }
    // 3.2 (3): E_{i,j} e_j = s^2 e_j E_{i,j}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.2.3",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![ep(i, j), e(j)])]),
                el(&[(c(0, 2), vec![e(j), ep(i, j)])]),
            );
        }
    }
    // 3.2 (4): E_{i,n'} e_n = s^2 e_n E_{i,n'}, i<n
    for i in 1..n {
        push(
            "3.2.4",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n, n), e(n)])]),
            el(&[(c(0, 2), vec![e(n), epp(i, n, n)])]),
        );
    }
    // 3.2 (5) = 3.6 (2): E_{i,j'} e_j = r^{-2} e_j E_{i,j'}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.6.2",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, j, n), e(j)])]),
                el(&[(c(-2, 0), vec![e(j), epp(i, j, n)])]),
            );
        }
    }
    // 3.3 (1): e_l E_{i,j} = E_{i,j} e_l, i<l<j<=n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 1)..=n {
                push(
                    "3.3.1",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![e(l), ep(i, j)])]),
                    el(&[(one(), vec![ep(i, j), e(l)])]),
                );
            }
        }
    }
    // 3.3 (2): E_{i,l} E_{l,j} - (rs)^2 E_{l,j} E_{i,l} = (s^2 - r^2) e_l E_{i,j}
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 1)..=n {
                push(
                    "3.3.2",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[
                        (one(), vec![ep(i, l), ep(l, j)]),
                        (c(2, 2).neg(), vec![ep(l, j), ep(i, l)]),
                    ]),
                    el(&[(zeta(), vec![e(l), ep(i, j)])]),
                );
            }
        }
    }
    // 3.3 (3): E_{i,j} E_{k,l} = E_{k,l} E_{i,j}, i<k<=l<j<=n
    for i in 1..=n {
        for k in (i + 1)..=n {
            for l in k..=n {
                for j in (l + 1)..=n {
                    push(
                        "3.3.3",
                        format!("n={n},i={i},k={k},l={l},j={j}"),
                        el(&[(one(), vec![ep(i, j), ep(k, l)])]),
                        el(&[(one(), vec![ep(k, l), ep(i, j)])]),
                    );
                }
            }
        }
    }
    // 3.3 (4): E_{i,j} E_{l,j} = s^2 E_{l,j} E_{i,j}, i<l<=j<n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in l..n {
                push(
                    "3.3.4",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![ep(i, j), ep(l, j)])]),
                    el(&[(c(0, 2), vec![ep(l, j), ep(i, j)])]),
                );
            }
        }
    }
    // 3.3 (5): E_{i,l} E_{i,j} = s^2 E_{i,j} E_{i,l}, i<=l<j<=n
    for i in 1..=n {
        for l in i..=n {
            for j in (l + 1)..=n {
                push(
                    "3.3.5",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![ep(i, l), ep(i, j)])]),
                    el(&[(c(0, 2), vec![ep(i, j), ep(i, l)])]),
                );
            }
        }
    }
    // 3.3 (6): e_l E_{i,j'} = E_{i,j'} e_l, i<l, l+1<j<=n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 2)..=n {
                push(
                    "3.3.6",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![e(l), epp(i, j, n)])]),
                    el(&[(one(), vec![epp(i, j, n), e(l)])]),
                );
            }
        }
    }
    // 3.3 (7): E_{i,l} E_{l,j'} - (rs)^2 E_{l,j'} E_{i,l} = (s^2-r^2) e_l E_{i,j'}
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 2)..=n {
                push(
                    "3.3.7",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[
                        (one(), vec![ep(i, l), epp(l, j, n)]),
                        (c(2, 2).neg(), vec![epp(l, j, n), ep(i, l)]),
                    ]),
                    el(&[(zeta(), vec![e(l), epp(i, j, n)])]),
                );
            }
        }
    }
    // 3.3 (8): E_{i,j'} E_{k,l} = E_{k,l} E_{i,j'}, i<k<=l, l+1<j<=n
    for i in 1..=n {
        for k in (i + 1)..=n {
            for l in k..=n {
                for j in (l + 2)..=n {
                    push(
                        "3.3.8",
                        format!("n={n},i={i},k={k},l={l},j={j}"),
                        el(&[(one(), vec![epp(i, j, n), ep(k, l)])]),
                        el(&[(one(), vec![ep(k, l), epp(i, j, n)])]),
                    );
                }
            }
        }
    }
    // 3.3 (9): E_{i,l} E_{i,j'} = s^2 E_{i,j'} E_{i,l}, i<=l, l+1<j<=n
    for i in 1..=n {
        for l in i..=n {
            for j in (l + 2)..=n {
                push(
                    "3.3.9",
                    format!("n={n},i={i},l={l},j={j}"),
                    el(&[(one(), vec![ep(i, l), epp(i, j, n)])]),
                    el(&[(c(0, 2), vec![epp(i, j, n), ep(i, l)])]),
                );
            }
        }
    }
    // 3.4 (1): E_{i,n} E_{j,n} - rs E_{j,n} E_{i,n}
    //        = E_{j,n-1} E_{i,n'} - r^2 E_{i,n'} E_{j,n-1}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.4.1",
                format!("n={n},i={i},j={j}"),
                el(&[
                    (one(), vec![ep(i, n), ep(j, n)]),
                    (c(1, 1).neg(), vec![ep(j, n), ep(i, n)]),
                ]),
                el(&[
                    (one(), vec![ep(j, n - 1), epp(i, n, n)]),
                    (c(2, 0).neg(), vec![epp(i, n, n), ep(j, n - 1)]),
                ]),
            );
        }
    }
    // 3.4 (2): E_{j,k} E_{i,k+1'} - r^2 E_{i,k+1'} E_{j,k}
    //        = E_{i,k+2'} E_{j,k+1} - s^{-2} E_{j,k+1} E_{i,k+2'}, i<j<k<n-1
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..(n.saturating_sub(1)) {
                push(
                    "3.4.2",
                    format!("n={n},i={i},j={j},k={k}"),
                    el(&[
                        (one(), vec![ep(j, k), epp(i, k + 1, n)]),
                        (c(2, 0).neg(), vec![epp(i, k + 1, n), ep(j, k)]),
                    ]),
                    el(&[
                        (one(), vec![epp(i, k + 2, n), ep(j, k + 1)]),
                        (c(0, -2).neg(), vec![ep(j, k + 1), epp(i, k + 2, n)]),
                    ]),
                );
            }
        }
    }
    // 3.4 (3): E_{n-1,n} E_{n-1,n'} = s^2 E_{n-1,n'} E_{n-1,n}
    push(
        "3.4.3",
        format!("n={n}"),
        el(&[(one(), vec![ep(n - 1, n), epp(n - 1, n, n)])]),
        el(&[(c(0, 2), vec![epp(n - 1, n, n), ep(n - 1, n)])]),
    );
    // 3.4 (4): E_{i,j'} e_n = (rs)^2 e_n E_{i,j'}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.4.4",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, j, n), e(n)])]),
                el(&[(c(2, 2), vec![e(n), epp(i, j, n)])]),
            );
        }
    }
    // 3.4 (5): E_{i,n'} E_{n-1,n} = E_{n-1,n} E_{i,n'}, i<n-1
    for i in 1..(n - 1) {
        push(
            "3.4.5",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n, n), ep(n - 1, n)])]),
            el(&[(one(), vec![ep(n - 1, n), epp(i, n, n)])]),
        );
    }
    // 3.4 (6): E_{i,n'} E_{n-1,n'} = s^2 E_{n-1,n'} E_{i,n'}, i<n-1
    for i in 1..(n - 1) {
        push(
            "3.4.6",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n, n), epp(n - 1, n, n)])]),
            el(&[(c(0, 2), vec![epp(n - 1, n, n), epp(i, n, n)])]),
        );
    }
    // 3.4 (7): E_{i,n-1'} E_{n-1,n} = s^2 E_{n-1,n} E_{i,n-1'}, i<n-1
    for i in 1..(n - 1) {
        push(
            "3.4.7",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n - 1, n), ep(n - 1, n)])]),
            el(&[(c(0, 2), vec![ep(n - 1, n), epp(i, n - 1, n)])]),
        );
    }
    // 3.4 (8): E_{i,n-1'} E_{n-1,n'} = (rs^2)^2 E_{n-1,n'} E_{i,n-1'}, i<n-1
    for i in 1..(n - 1) {
        push(
            "3.4.8",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n - 1, n), epp(n - 1, n, n)])]),
            el(&[(c(2, 4), vec![epp(n - 1, n, n), epp(i, n - 1, n)])]),
        );
    }
    // 3.5 (1): E_{i,n'} E_{j,n} = E_{j,n} E_{i,n'}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.5.1",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, n, n), ep(j, n)])]),
                el(&[(one(), vec![ep(j, n), epp(i, n, n)])]),
            );
        }
    }
    // 3.5 (2): E_{i,n} E_{j,n'} - (rs)^2 E_{j,n'} E_{i,n} = (s^2-r^2) E_{i,n'} E_{j,n}
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.5.2",
                format!("n={n},i={i},j={j}"),
                el(&[
                    (one(), vec![ep(i, n), epp(j, n, n)]),
                    (c(2, 2).neg(), vec![epp(j, n, n), ep(i, n)]),
                ]),
                el(&[(zeta(), vec![epp(i, n, n), ep(j, n)])]),
            );
        }
    }
    // 3.5 (3): E_{i,n} E_{i,j'} = s^2 E_{i,j'} E_{i,n}, i<j<=n
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(
                "3.5.3",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![ep(i, n), epp(i, j, n)])]),
                el(&[(c(0, 2), vec![epp(i, j, n), ep(i, n)])]),
            );
        }
    }
    // 3.5 (4): E_{i,n'} E_{j,n'} = s^2 E_{j,n'} E_{i,n'}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "3.5.4",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, n, n), epp(j, n, n)])]),
                el(&[(c(0, 2), vec![epp(j, n, n), epp(i, n, n)])]),
            );
        }
    }
    // 3.5 (5): E_{i,l'} E_{j,n} = E_{j,n} E_{i,l'}, i<j<l<=n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..=n {
                push(
                    "3.5.5",
                    format!("n={n},i={i},j={j},l={l}"),
                    el(&[(one(), vec![epp(i, l, n), ep(j, n)])]),
                    el(&[(one(), vec![ep(j, n), epp(i, l, n)])]),
                );
            }
        }
    }
    // 3.5 (6): E_{i,l'} E_{j,n'} = (rs)^2 E_{j,n'} E_{i,l'}, i<j<l<n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..n {
                push(
                    "3.5.6",
                    format!("n={n},i={i},j={j},l={l}"),
                    el(&[(one(), vec![epp(i, l, n), epp(j, n, n)])]),
                    el(&[(c(2, 2), vec![epp(j, n, n), epp(i, l, n)])]),
                );
            }
        }
    }
    // 3.6 (1): [E_{i,j'}, e_{i+1}]_bullet = 0, i<j<=n, i != j-2
    for i in 1..=n {
        for j in (i + 1)..=n {
            if i + 2 == j || i + 1 > n {
                continue;
            }
            push(
                "3.6.1",
                format!("n={n},i={i},j={j}"),
                bullet_bracket(epp(i, j, n), e(i + 1), n),
                Element::zero(),
            );
        }
    }
    // 3.6 (3): [E_{i,i+1'}, e_{i+2}]_bullet = 0, i<n-1
    for i in 1..(n - 1) {
        push(
            "3.6.3",
            format!("n={n},i={i}"),
            bullet_bracket(epp(i, i + 1, n), e(i + 2), n),
            Element::zero(),
        );
    }
    // 3.6 (4): E_{i,j'} e_l = e_l E_{i,j'}, i<j<l<n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..n {
                push(
                    "3.6.4",
                    format!("n={n},i={i},j={j},l={l}"),
                    el(&[(one(), vec![epp(i, j, n), e(l)])]),
                    el(&[(one(), vec![e(l), epp(i, j, n)])]),
                );
            }
        }
    }
    // 3.6 (5): E_{i,l'} E_{i,j'} = r^{-2} E_{i,j'} E_{i,l'}, i<j<l<=n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..=n {
                push(
                    "3.6.5",
                    format!("n={n},i={i},j={j},l={l}"),
                    el(&[(one(), vec![epp(i, l, n), epp(i, j, n)])]),
                    el(&[(c(-2, 0), vec![epp(i, j, n), epp(i, l, n)])]),
                );
            }
        }
    }
    // 3.6 (6): E_{i,l'} E_{j,k'} = (rs)^2 E_{j,k'} E_{i,l'}, i<j<l<k<=n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..=n {
                for k in (l + 1)..=n {
                    push(
                        "3.6.6",
                        format!("n={n},i={i},j={j},l={l},k={k}"),
                        el(&[(one(), vec![epp(i, l, n), epp(j, k, n)])]),
                        el(&[(c(2, 2), vec![epp(j, k, n), epp(i, l, n)])]),
                    );
                }
            }
        }
    }
    // 3.6 (7): E_{i,l'} E_{j,l'} = s^2 E_{j,l'} E_{i,l'}, i<j<l<n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for l in (j + 1)..n {
                push(
                    "3.6.7",
                    format!("n={n},i={i},j={j},l={l}"),
                    el(&[(one(), vec![epp(i, l, n), epp(j, l, n)])]),
                    el(&[(c(0, 2), vec![epp(j, l, n), epp(i, l, n)])]),
                );
            }
        }
    }
    // 3.6 (8): E_{i,n-1} E_{i,n'} - (rs)^2 E_{i,n'} E_{i,n-1} = s(s-r) E_{i,n}^2, i<n
    for i in 1..n {
        let ssr = rf(0, 2).sub(&rf(1, 1)); // s(s-r) = s^2 - rs
        push(
            "3.6.8",
            format!("n={n},i={i}"),
            el(&[
                (one(), vec![ep(i, n - 1), epp(i, n, n)]),
                (c(2, 2).neg(), vec![epp(i, n, n), ep(i, n - 1)]),
            ]),
            el(&[(ssr, vec![ep(i, n), ep(i, n)])]),
        );
    }
    // 3.7 (1): E_{i,k} E_{i,k+1'} - (rs)^2 E_{i,k+1'} E_{i,k}
    //        = s^2 E_{i,k+2'} E_{i,k+1} - s^{-2} E_{i,k+1} E_{i,k+2'}, i<=k<n-1
    for i in 1..=n {
        for k in i..(n.saturating_sub(1)) {
            push(
                "3.7.1",
                format!("n={n},i={i},k={k}"),
                el(&[
                    (one(), vec![ep(i, k), epp(i, k + 1, n)]),
                    (c(2, 2).neg(), vec![epp(i, k + 1, n), ep(i, k)]),
                ]),
                el(&[
                    (c(0, 2), vec![epp(i, k + 2, n), ep(i, k + 1)]),
                    (c(0, -2).neg(), vec![ep(i, k + 1), epp(i, k + 2, n)]),
                ]),
            );
        }
    }
    // 3.7 (2): E_{j,j+1} E_{j,j+1'} = (rs^2)^2 E_{j,j+1'} E_{j,j+1}, j<n-1
    for j in 1..(n - 1) {
        push(
            "3.7.2",
            format!("n={n},j={j}"),
            el(&[(one(), vec![ep(j, j + 1), epp(j, j + 1, n)])]),
            el(&[(c(2, 4), vec![epp(j, j + 1, n), ep(j, j + 1)])]),
        );
    }
    // 3.7 (3): E_{j-1,j'} E_{j,j+1'} = (rs^2)^2 E_{j,j+1'} E_{j-1,j'}, 2<=j<n-1
    for j in 2..(n - 1) {
        push(
            "3.7.3",
            format!("n={n},j={j}"),
            el(&[(one(), vec![epp(j - 1, j, n), epp(j, j + 1, n)])]),
            el(&[(c(2, 4), vec![epp(j, j + 1, n), epp(j - 1, j, n)])]),
        );
    }
    // 3.7 (4): E_{i,j'} E_{j,j+1'} = (rs^2)^2 E_{j,j+1'} E_{i,j'}, i<j<n-1
    for i in 1..=n {
        for j in (i + 1)..(n.saturating_sub(1)) {
            push(
                "3.7.4",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, j, n), epp(j, j + 1, n)])]),
                el(&[(c(2, 4), vec![epp(j, j + 1, n), epp(i, j, n)])]),
            );
        }
    }
    // 3.7 (5): E_{j,k} E_{j,j+1'} = (rs^2)^2 E_{j,j+1'} E_{j,k}, j<k<n
    for j in 1..=n {
        for k in (j + 1)..n {
            if j + 1 > n {
                continue;
            }
            if j >= n {
                continue;
            }
            push(
                "3.7.5",
                format!("n={n},j={j},k={k}"),
                el(&[(one(), vec![ep(j, k), epp(j, j + 1, n)])]),
                el(&[(c(2, 4), vec![epp(j, j + 1, n), ep(j, k)])]),
            );
        }
    }
    // 3.7 (6): E_{j-1,j} E_{i,j'} = (rs)^2 E_{i,j'} E_{j-1,j}, i+1<j<n
    for i in 1..=n {
        for j in (i + 2)..n {
            push(
                "3.7.6",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![ep(j - 1, j), epp(i, j, n)])]),
                el(&[(c(2, 2), vec![epp(i, j, n), ep(j - 1, j)])]),
            );
        }
    }
    // 3.7 (7): E_{l,k} E_{i,j'} = (rs)^2 E_{i,j'} E_{l,k}, i<l<j<=k<n
    for i in 1..=n {
        for l in (i + 1)..=n {
            for j in (l + 1)..=n {
                for k in j..n {
                    push(
                        "3.7.7",
                        format!("n={n},i={i},l={l},j={j},k={k}"),
                        el(&[(one(), vec![ep(l, k), epp(i, j, n)])]),
                        el(&[(c(2, 2), vec![epp(i, j, n), ep(l, k)])]),
                    );
                }
            }
        }
    }
    // 3.7 (8): E_{i,k} E_{i,j'} = (rs^2)^2 E_{i,j'} E_{i,k}, i<j<=k<n
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in j..n {
                push(
                    "3.7.8",
                    format!("n={n},i={i},j={j},k={k}"),
                    el(&[(one(), vec![ep(i, k), epp(i, j, n)])]),
                    el(&[(c(2, 4), vec![epp(i, j, n), ep(i, k)])]),
                );
            }
        }
    }
    out
}

/// The intermediate identities established in the appendix argument.
pub fn appendix_instances(n: u8) -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let mut push = |tag: &str, params: String, lhs: Element<RatFun>, rhs: Element<RatFun>| {
        out.push(IdentityInstance::new(tag, params, lhs, rhs));
    };
    // (1)(i): E_{i,j'} e_{i+1} = e_{i+1} E_{i,j'} for j > i+3
    for i in 1..=n {
        for j in (i + 4)..=n {
            push(
                "A.1.i",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, j, n), e(i + 1)])]),
                el(&[(one(), vec![e(i + 1), epp(i, j, n)])]),
            );
        }
    }
    // (1)(ii): j = i+3
    for i in 1..=n {
        let j = i + 3;
        if j > n {
            continue;
        }
        push(
            "A.1.ii",
            format!("n={n},i={i},j={j}"),
            el(&[(one(), vec![epp(i, j, n), e(i + 1)])]),
            el(&[(one(), vec![e(i + 1), epp(i, j, n)])]),
        );
    }
    // (1)(iii): j = i+1, the bullet bracket vanishes
    for i in 1..n {
        let j = i + 1;
        push(
            "A.1.iii",
            format!("n={n},i={i},j={j}"),
            bullet_bracket(epp(i, j, n), e(i + 1), n),
            Element::zero(),
        );
    }
    // (3)-equivalent: E_{i+1,i+2} E_{i,i+2'} = (rs)^2 E_{i,i+2'} E_{i+1,i+2}, i+2<n
    for i in 1..=n {
        if i + 2 >= n {
            continue;
        }
        push(
            "A.3.eq",
            format!("n={n},i={i}"),
            el(&[(one(), vec![ep(i + 1, i + 2), epp(i, i + 2, n)])]),
            el(&[(c22(), vec![epp(i, i + 2, n), ep(i + 1, i + 2)])]),
        );
    }
    // (5) claim 1: E_{i,n'} E_{i,n-1'} = r^{-2} E_{i,n-1'} E_{i,n'}, i<n-1
    for i in 1..(n - 1) {
        push(
            "A.5.a",
            format!("n={n},i={i}"),
            el(&[(one(), vec![epp(i, n, n), epp(i, n - 1, n)])]),
            el(&[(rf(-2, 0), vec![epp(i, n - 1, n), epp(i, n, n)])]),
        );
    }
    // (5) claim 2: E_{i,n'} E_{i,j'} = r^{-2} E_{i,j'} E_{i,n'}, i<j<n
    for i in 1..=n {
        for j in (i + 1)..n {
            push(
                "A.5.b",
                format!("n={n},i={i},j={j}"),
                el(&[(one(), vec![epp(i, n, n), epp(i, j, n)])]),
                el(&[(rf(-2, 0), vec![epp(i, j, n), epp(i, n, n)])]),
            );
        }
    }
    // (8): as 3.6.8
    for i in 1..n {
        let ssr = rf(0, 2).sub(&rf(1, 1));
        push(
            "A.8",
            format!("n={n},i={i}"),
            el(&[
                (one(), vec![ep(i, n - 1), epp(i, n, n)]),
                (rf(2, 2).neg(), vec![epp(i, n, n), ep(i, n - 1)]),
            ]),
            el(&[(ssr, vec![ep(i, n), ep(i, n)])]),
        );
    }
    out
}

fn c22() -> RatFun {
    rf(2, 2)
}

/// The (r,s)-integer in the long class, written [m] in the displays.
fn qm(m: u32) -> RatFun {
    rs_integer(m, IndexClass::Long)
}

fn pow_word(l: Letter, k: u32) -> Vec<Letter> {
    vec![l; k as usize]
}

/// Power-commutation instances for a given rank and maximal exponent.
///
/// The closed forms follow the displayed identities; where the engine
/// disproves a displayed exponent the corrected value (derived through the
/// quasi-commutation recursion of the x/y/z lemma and re-certified
/// independently here) is used.
pub fn power_instances(n: u8, m_max: u32) -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let mut push = |tag: &str, params: String, lhs: Element<RatFun>, rhs: Element<RatFun>| {
        out.push(IdentityInstance::new(tag, params, lhs, rhs));
    };
    let word = |parts: &[&[Letter]]| -> Vec<Letter> {
        parts.iter().flat_map(|p| p.iter().copied()).collect()
    };
    for m in 1..=m_max {
        let mi = m as i64;
        // ---- 3.9 ----
        // (1): e_{i-1} E_{i,j}^m = r^{2m} E^m e_{i-1} + [m] E^{m-1} E_{i-1,j}
        for i in 2..=n {
            for j in i..n {
                let x = ep(i, j);
                push(
                    "3.9.1",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&[e(i - 1)], &pow_word(x, m)]))]),
                    el(&[
                        (rf(2 * mi, 0), word(&[&pow_word(x, m), &[e(i - 1)]])),
                        (qm(m), word(&[&pow_word(x, m - 1), &[ep(i - 1, j)]])),
                    ]),
                );
            }
        }
        // (2): E_{i,j}^m e_{j+1} = r^{2m} e_{j+1} E^m + [m] E_{i,j+1} E^{m-1}
        for i in 1..=n {
            for j in i..n {
                let x = ep(i, j);
                push(
                    "3.9.2",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[e(j + 1)]]))]),
                    el(&[
                        (rf(2 * mi, 0), word(&[&[e(j + 1)], &pow_word(x, m)])),
                        (qm(m), word(&[&[ep(i, j + 1)], &pow_word(x, m - 1)])),
                    ]),
                );
            }
        }
        // (3): e_{n-1} e_n^m = alpha_m e_n^{m-2} E_{n-1,n'}
        //      + r^{m-1} beta_m e_n^{m-1} E_{n-1,n} + r^{2m} e_n^m e_{n-1}
        {
            let mut rhs = el(&[(rf(2 * mi, 0), word(&[&pow_word(e(n), m), &[e(n - 1)]]))]);
            let bm = beta_m(m).mul(&rf(mi - 1, 0));
            rhs = rhs.add(&el(&[(bm, word(&[&pow_word(e(n), m - 1), &[ep(n - 1, n)]]))]));
            if m >= 2 {
                let am = alpha_m(m);
                rhs = rhs.add(&el(&[(am, word(&[&pow_word(e(n), m - 2), &[epp(n - 1, n, n)]]))]));
            }
            push(
                "3.9.3",
                format!("n={n},m={m}"),
                el(&[(one(), word(&[&[e(n - 1)], &pow_word(e(n), m)]))]),
                rhs,
            );
        }
        // (4): E_{i,n}^m e_n = (rs)^m e_n E^m + s^{m-1} beta_m E_{i,n'} E^{m-1}
        for i in 1..n {
            let x = ep(i, n);
            push(
                "3.9.4",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[e(n)]]))]),
                el(&[
                    (rf(mi, mi), word(&[&[e(n)], &pow_word(x, m)])),
                    (
                        beta_m(m).mul(&rf(0, mi - 1)),
                        word(&[&[epp(i, n, n)], &pow_word(x, m - 1)]),
                    ),
                ]),
            );
        }
        // (5): e_{i-1} E_{i,n}^m = r^{m-1} beta_m E^{m-1} E_{i-1,n}
        //      + alpha_m E^{m-2} E_{i,n-1} E_{i-1,n'}
        //      - r^2 alpha_m E^{m-2} E_{i-1,n'} E_{i,n-1} + r^{2m} E^m e_{i-1}
        for i in 2..n {
            let x = ep(i, n);
            let mut rhs = el(&[
                (rf(2 * mi, 0), word(&[&pow_word(x, m), &[e(i - 1)]])),
                (
                    beta_m(m).mul(&rf(mi - 1, 0)),
                    word(&[&pow_word(x, m - 1), &[ep(i - 1, n)]]),
                ),
            ]);
            if m >= 2 {
                let am = alpha_m(m);
                rhs = rhs.add(&el(&[
                    (am.clone(), word(&[&pow_word(x, m - 2), &[ep(i, n - 1), epp(i - 1, n, n)]])),
                    (
                        am.mul(&rf(2, 0)).neg(),
                        word(&[&pow_word(x, m - 2), &[epp(i - 1, n, n), ep(i, n - 1)]]),
                    ),
                ]));
            }
            push(
                "3.9.5",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&[e(i - 1)], &pow_word(x, m)]))]),
                rhs,
            );
        }
        // (6): e_{n-1} E_{n-1,n'}^m = s^{2m-1}(s-r)[m] E^{m-1} E_{n-1,n}^2
        //      + (rs)^{2m} E^m e_{n-1}
        {
            let x = epp(n - 1, n, n);
            let coef = qm(m).mul(&rf(0, 2 * mi - 1)).mul(&rf(0, 1).sub(&rf(1, 0)));
            push(
                "3.9.6",
                format!("n={n},m={m}"),
                el(&[(one(), word(&[&[e(n - 1)], &pow_word(x, m)]))]),
                el(&[
                    (rf(2 * mi, 2 * mi), word(&[&pow_word(x, m), &[e(n - 1)]])),
                    (coef, word(&[&pow_word(x, m - 1), &[ep(n - 1, n), ep(n - 1, n)]])),
                ]),
            );
        }
        // (7): E_{i,n'}^m e_{n-1} = s^{2(1-m)} [m] E^{m-1} E_{i,n-1'}
        //      + s^{-2m} e_{n-1} E^m, i<n-1
        for i in 1..(n - 1) {
            let x = epp(i, n, n);
            push(
                "3.9.7",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[e(n - 1)]]))]),
                el(&[
                    (rf(0, -2 * mi), word(&[&[e(n - 1)], &pow_word(x, m)])),
                    (
                        qm(m).mul(&rf(0, 2 - 2 * mi)),
                        word(&[&pow_word(x, m - 1), &[epp(i, n - 1, n)]]),
                    ),
                ]),
            );
        }
        // (8): e_{i-1} E_{i,n'}^m = [m] E^{m-1} E_{i-1,n'} + r^{2m} E^m e_{i-1}, i<n
        for i in 2..n {
            let x = epp(i, n, n);
            push(
                "3.9.8",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&[e(i - 1)], &pow_word(x, m)]))]),
                el(&[
                    (rf(2 * mi, 0), word(&[&pow_word(x, m), &[e(i - 1)]])),
                    (qm(m), word(&[&pow_word(x, m - 1), &[epp(i - 1, n, n)]])),
                ]),
            );
        }
        // ---- 3.10 ----
        // (1): e_{i-1} E_{i,j'}^m = r^{2m} E^m e_{i-1} + [m] E^{m-1} E_{i-1,j'}, i<j<=n
        for i in 2..=n {
            for j in (i + 1)..=n {
                let x = epp(i, j, n);
                push(
                    "3.10.1",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&[e(i - 1)], &pow_word(x, m)]))]),
                    el(&[
                        (rf(2 * mi, 0), word(&[&pow_word(x, m), &[e(i - 1)]])),
                        (qm(m), word(&[&pow_word(x, m - 1), &[epp(i - 1, j, n)]])),
                    ]),
                );
            }
        }
        // (2): e_{j-1} E_{j-1,j'}^m = (rs)^{2m} E^m e_{j-1}
        //      + s^{2(m-1)} [m] E^{m-1} (s^2 E_{j-1,j+1'} E_{j-1,j}
        //                                - s^{-2} E_{j-1,j} E_{j-1,j+1'}), j<n
        for j in 2..n {
            let x = epp(j - 1, j, n);
            let cm = qm(m).mul(&rf(0, 2 * (mi - 1)));
            push(
                "3.10.2",
                format!("n={n},m={m},j={j}"),
                el(&[(one(), word(&[&[e(j - 1)], &pow_word(x, m)]))]),
                el(&[
                    (rf(2 * mi, 2 * mi), word(&[&pow_word(x, m), &[e(j - 1)]])),
                    (
                        cm.mul(&rf(0, 2)),
                        word(&[&pow_word(x, m - 1), &[epp(j - 1, j + 1, n), ep(j - 1, j)]]),
                    ),
                    (
                        cm.mul(&rf(0, -2)).neg(),
                        word(&[&pow_word(x, m - 1), &[ep(j - 1, j), epp(j - 1, j + 1, n)]]),
                    ),
                ]),
            );
        }
        // (3): E_{i,j'}^m e_{j-1} = s^{-2m} e_{j-1} E^m
        //      + (rs)^{-2(m-1)} [m] E_{i,j-1'} E^{m-1}, i+1<j<=n
        for i in 1..=n {
            for j in (i + 2)..=n {
                let x = epp(i, j, n);
                push(
                    "3.10.3",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[e(j - 1)]]))]),
                    el(&[
                        (rf(0, -2 * mi), word(&[&[e(j - 1)], &pow_word(x, m)])),
                        (
                            qm(m).mul(&rf(-2 * (mi - 1), -2 * (mi - 1))),
                            word(&[&[epp(i, j - 1, n)], &pow_word(x, m - 1)]),
                        ),
                    ]),
                );
            }
        }
        // (4): the displayed two-term form holds only as a congruence; the
        // exact identity has the residue z = nf(E_{i,j+1'} E_{i,j}
        // - (rs)^{-2} E_{i,j} E_{i,j+1'}) computed by the engine and the
        // coefficient ladder of the x/y/z recursion:
        //   E_{i,j+1'}^m E_{i,j} = (rs)^{-2m} E_{i,j} E^m
        //                          + r^{2-2m} s^{4-4m} [m] z E^{m-1}
        // certified below through `corrected_3_10_4`.
        // (5): E_{i,n'}^m E_{i,n-1} = (rs)^{-2m}(E_{i,n-1} E^m
        //      + s^{3-2m}(r-s)[m] E_{i,n}^2 E^{m-1})
        for i in 1..(n - 1) {
            let x = epp(i, n, n);
            let coef = qm(m)
                .mul(&rf(-2 * mi, -2 * mi))
                .mul(&rf(0, 3 - 2 * mi))
                .mul(&rf(1, 0).sub(&rf(0, 1)));
            push(
                "3.10.5",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[ep(i, n - 1)]]))]),
                el(&[
                    (rf(-2 * mi, -2 * mi), word(&[&[ep(i, n - 1)], &pow_word(x, m)])),
                    (coef, word(&[&[ep(i, n), ep(i, n)], &pow_word(x, m - 1)])),
                ]),
            );
        }
        // (6): E_{i,j+2'} e_{j+1}^m = s^{-2m} e_{j+1}^m E_{i,j+2'}
        //      + (rs)^{2(1-m)} [m] e_{j+1}^{m-1} E_{i,j+1'}, i<=j<n-1
        for i in 1..=n {
            for j in i..(n.saturating_sub(1)) {
                if j + 2 > n {
                    continue;
                }
                let x = epp(i, j + 2, n);
                push(
                    "3.10.6",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&[x], &pow_word(e(j + 1), m)]))]),
                    el(&[
                        (rf(0, -2 * mi), word(&[&pow_word(e(j + 1), m), &[x]])),
                        (
                            qm(m).mul(&rf(2 - 2 * mi, 2 - 2 * mi)),
                            word(&[&pow_word(e(j + 1), m - 1), &[epp(i, j + 1, n)]]),
                        ),
                    ]),
                );
            }
        }
        // ---- 3.12 ----
        // (1): E_{i,j}^m f_i = f_i E^m - [m] E_{i+1,j} E^{m-1} omega_i, i<j<n
        for i in 1..=n {
            for j in (i + 1)..n {
                let x = ep(i, j);
                push(
                    "3.12.1",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[f(i)]]))]),
                    el(&[
                        (one(), word(&[&[f(i)], &pow_word(x, m)])),
                        (
                            qm(m).neg(),
                            word(&[&[ep(i + 1, j)], &pow_word(x, m - 1), &[Letter::W(i, 1)]]),
                        ),
                    ]),
                );
            }
        }
        // (2): E_{i,j}^m f_j = f_j E^m
        //      + s^{-2} (rs)^{-2(m-1)} [m] E_{i,j-1} E^{m-1} omega'_j, i<j<n
        // (the engine fixes the extra s^{-2} against the displayed
        // coefficient; equivalently the coefficient is s^{2(1-m)} [m] with
        // omega'_j moved to the front)
        for i in 1..=n {
            for j in (i + 1)..n {
                let x = ep(i, j);
                push(
                    "3.12.2",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[f(j)]]))]),
                    el(&[
                        (one(), word(&[&[f(j)], &pow_word(x, m)])),
                        (
                            qm(m).mul(&rf(0, 2 * (1 - mi))),
                            word(&[&[Letter::Wp(j, 1), ep(i, j - 1)], &pow_word(x, m - 1)]),
                        ),
                    ]),
                );
            }
        }
        // (3): e_i^m f_i = f_i e_i^m + (r_i - s_i)^{-1} [m]_i e_i^{m-1}
        //      (s_i^{-m+1} omega_i - r_i^{-m+1} omega'_i)
        for i in 1..=n {
            let cls = if i == n { IndexClass::Short } else { IndexClass::Long };
            let k = cls.r_pow();
            let denom = rf(k, 0).sub(&rf(0, k));
            let base = rs_integer(m, cls).div(&denom).unwrap();
            push(
                "3.12.3",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(e(i), m), &[f(i)]]))]),
                el(&[
                    (one(), word(&[&[f(i)], &pow_word(e(i), m)])),
                    (
                        base.mul(&rf(0, k * (1 - mi))),
                        word(&[&pow_word(e(i), m - 1), &[Letter::W(i, 1)]]),
                    ),
                    (
                        base.mul(&rf(k * (1 - mi), 0)).neg(),
                        word(&[&pow_word(e(i), m - 1), &[Letter::Wp(i, 1)]]),
                    ),
                ]),
            );
        }
        // (4): E_{i,n}^m f_i = f_i E^m - r^{m-1} beta_m E_{i+1,n} E^{m-1} omega_i
        //      - alpha_m E_{i+1,n-1} E_{i,n'} E^{m-2} omega_i
        //      + r^2 alpha_m E_{i,n'} E_{i+1,n-1} E^{m-2} omega_i, i<n-1
        for i in 1..(n.saturating_sub(1)) {
            let x = ep(i, n);
            let mut rhs = el(&[
                (one(), word(&[&[f(i)], &pow_word(x, m)])),
                (
                    beta_m(m).mul(&rf(mi - 1, 0)).neg(),
                    word(&[&[ep(i + 1, n)], &pow_word(x, m - 1), &[Letter::W(i, 1)]]),
                ),
            ]);
            if m >= 2 {
                let am = alpha_m(m);
                rhs = rhs.add(&el(&[
                    (
                        am.clone().neg(),
                        word(&[
                            &[ep(i + 1, n - 1), epp(i, n, n)],
                            &pow_word(x, m - 2),
                            &[Letter::W(i, 1)],
                        ]),
                    ),
                    (
                        am.mul(&rf(2, 0)),
                        word(&[
                            &[epp(i, n, n), ep(i + 1, n - 1)],
                            &pow_word(x, m - 2),
                            &[Letter::W(i, 1)],
                        ]),
                    ),
                ]));
            }
            push(
                "3.12.4",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(i)]]))]),
                rhs,
            );
        }
        // (5): E_{n-1,n}^m f_{n-1} = f_{n-1} E^m
        //      - r^{m-1} beta_m e_n E^{m-1} omega_{n-1}
        //      - alpha_m E_{n-1,n'} E^{m-2} omega_{n-1}
        {
            let x = ep(n - 1, n);
            let mut rhs = el(&[
                (one(), word(&[&[f(n - 1)], &pow_word(x, m)])),
                (
                    beta_m(m).mul(&rf(mi - 1, 0)).neg(),
                    word(&[&[e(n)], &pow_word(x, m - 1), &[Letter::W(n - 1, 1)]]),
                ),
            ]);
            if m >= 2 {
                rhs = rhs.add(&el(&[(
                    alpha_m(m).neg(),
                    word(&[&[epp(n - 1, n, n)], &pow_word(x, m - 2), &[Letter::W(n - 1, 1)]]),
                )]));
            }
            push(
                "3.12.5",
                format!("n={n},m={m}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(n - 1)]]))]),
                rhs,
            );
        }
        // (6): E_{i,n}^m f_n = f_n E^m
        //      + (r+s) s^{-m-1} beta_m E_{i,n-1} omega'_n E^{m-1}, i<n
        for i in 1..n {
            let x = ep(i, n);
            let coef = rf(1, 0).add(&rf(0, 1)).mul(&rf(0, -mi - 1)).mul(&beta_m(m));
            push(
                "3.12.6",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(n)]]))]),
                el(&[
                    (one(), word(&[&[f(n)], &pow_word(x, m)])),
                    (coef, word(&[&[ep(i, n - 1), Letter::Wp(n, 1)], &pow_word(x, m - 1)])),
                ]),
            );
        }
        // ---- 3.13 ----
        // (1): E_{i,n'}^m f_i = f_i E^m - [m] E_{i+1,n'} E^{m-1} omega_i, i<n-1
        for i in 1..(n.saturating_sub(1)) {
            let x = epp(i, n, n);
            push(
                "3.13.1",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(i)]]))]),
                el(&[
                    (one(), word(&[&[f(i)], &pow_word(x, m)])),
                    (
                        qm(m).neg(),
                        word(&[&[epp(i + 1, n, n)], &pow_word(x, m - 1), &[Letter::W(i, 1)]]),
                    ),
                ]),
            );
        }
        // (2): E_{n-1,n'}^m f_{n-1} = f_{n-1} E^m
        //      + (r-s) s^{2m-1} [m] e_n^2 E^{m-1} omega_{n-1}
        {
            let x = epp(n - 1, n, n);
            let coef = rf(1, 0).sub(&rf(0, 1)).mul(&rf(0, 2 * mi - 1)).mul(&qm(m));
            push(
                "3.13.2",
                format!("n={n},m={m}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(n - 1)]]))]),
                el(&[
                    (one(), word(&[&[f(n - 1)], &pow_word(x, m)])),
                    (
                        coef,
                        word(&[&[e(n), e(n)], &pow_word(x, m - 1), &[Letter::W(n - 1, 1)]]),
                    ),
                ]),
            );
        }
        // (3): E_{i,n'}^m f_n = f_n E^m
        //      + (rs)^{-2m+1} beta_{2m} E_{i,n} E^{m-1} omega'_n, i<=n-1
        // (the engine disproves the extra factor (r+s) in the display)
        for i in 1..n {
            let x = epp(i, n, n);
            let coef = beta_m(2 * m).mul(&rf(-2 * mi + 1, -2 * mi + 1));
            push(
                "3.13.3",
                format!("n={n},m={m},i={i}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(n)]]))]),
                el(&[
                    (one(), word(&[&[f(n)], &pow_word(x, m)])),
                    (
                        coef,
                        word(&[&[ep(i, n)], &pow_word(x, m - 1), &[Letter::Wp(n, 1)]]),
                    ),
                ]),
            );
        }
        // (4): E_{i,j'}^m f_i = f_i E^m - [m] E_{i+1,j'} E^{m-1} omega_i, i<j-1
        for j in 1..=n {
            for i in 1..=n {
                if i + 1 >= j || j > n {
                    continue;
                }
                let x = epp(i, j, n);
                push(
                    "3.13.4",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[f(i)]]))]),
                    el(&[
                        (one(), word(&[&[f(i)], &pow_word(x, m)])),
                        (
                            qm(m).neg(),
                            word(&[&[epp(i + 1, j, n)], &pow_word(x, m - 1), &[Letter::W(i, 1)]]),
                        ),
                    ]),
                );
            }
        }
        // (5): E_{j-1,j'}^m f_{j-1} = f_{j-1} E^m + s^{2(m-1)} [m]
        //      (s^{-2} e_j E_{j,j+1'} - s^2 E_{j,j+1'} e_j) E^{m-1} omega_{j-1},
        //      j <= n-1
        for j in 2..n {
            let x = epp(j - 1, j, n);
            let cm = qm(m).mul(&rf(0, 2 * (mi - 1)));
            push(
                "3.13.5",
                format!("n={n},m={m},j={j}"),
                el(&[(one(), word(&[&pow_word(x, m), &[f(j - 1)]]))]),
                el(&[
                    (one(), word(&[&[f(j - 1)], &pow_word(x, m)])),
                    (
                        cm.mul(&rf(0, -2)),
                        word(&[
                            &[e(j), epp(j, j + 1, n)],
                            &pow_word(x, m - 1),
                            &[Letter::W(j - 1, 1)],
                        ]),
                    ),
                    (
                        cm.mul(&rf(0, 2)).neg(),
                        word(&[
                            &[epp(j, j + 1, n), e(j)],
                            &pow_word(x, m - 1),
                            &[Letter::W(j - 1, 1)],
                        ]),
                    ),
                ]),
            );
        }
        // (6): E_{i,j'}^m f_j = f_j E^m
        //      + s^{-2} [m] E_{i,j+1'} E^{m-1} omega'_j, i<j<n
        for i in 1..=n {
            for j in (i + 1)..n {
                let x = epp(i, j, n);
                push(
                    "3.13.6",
                    format!("n={n},m={m},i={i},j={j}"),
                    el(&[(one(), word(&[&pow_word(x, m), &[f(j)]]))]),
                    el(&[
                        (one(), word(&[&[f(j)], &pow_word(x, m)])),
                        (
                            qm(m).mul(&rf(0, -2)),
                            word(&[&[epp(i, j + 1, n)], &pow_word(x, m - 1), &[Letter::Wp(j, 1)]]),
                        ),
                    ]),
                );
            }
        }
    }
    out
}

/// The corrected full form of the congruence item 3.10(4): the residue z of
/// the m=1 straightening is computed by the engine, checked to
/// quasi-commute, and the general-m identity is certified.
pub fn corrected_3_10_4(inst: &AlgebraInstance, m_max: u32) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..n.saturating_sub(1) {
            let y = epp(i, j + 1, n);
            let x = ep(i, j);
            let alpha = rf(-2, -2);
            // z = nf(y x - alpha x y)
            let z = inst.nf(&el(&[
                (one(), vec![y, x]),
                (alpha.clone().neg(), vec![x, y]),
            ]));
            // beta with y z = beta z y
            let yz = inst.nf(&Element::term(Word::one(y), one()).mul(&z));
            let beta = rf(0, -4);
            let zy = inst.nf(&z.mul(&Element::term(Word::one(y), one())));
            if yz != zy.scale(&beta) {
                out.push(SuiteRecord {
                    tag: "3.10.4".into(),
                    params: format!("n={n},i={i},j={j}"),
                    status: SuiteStatus::Fail,
                    steps: 0,
                    millis: 0,
                    residue: Some("z does not quasi-commute with the expected twist".into()),
                });
                continue;
            }
            for m in 1..=m_max {
                let mi = m as i64;
                let lhs = el(&[(one(), {
                    let mut w = pow_word(y, m);
                    w.push(x);
                    w
                })]);
                let mut rhs = el(&[(alpha.pow(mi), {
                    let mut w = vec![x];
                    w.extend(pow_word(y, m));
                    w
                })]);
                // coefficient ladder (alpha^m - beta^m)/(alpha - beta)
                let ladder = {
                    let mut acc = RatFun::zero();
                    for t in 0..mi {
                        acc = acc.add(&alpha.pow(t).mul(&beta.pow(mi - 1 - t)));
                    }
                    acc
                };
                let tail = z.mul(&Element::term(Word(pow_word(y, m - 1)), one()));
                rhs = rhs.add(&tail.scale(&ladder));
                let start = std::time::Instant::now();
                let cert = certify_identity(&lhs, &rhs, &inst.pbw_rules, DEFAULT_BUDGET);
                out.push(SuiteRecord {
                    tag: "3.10.4".into(),
                    params: format!("n={n},m={m},i={i},j={j}"),
                    status: if cert.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
                    steps: 0,
                    millis: start.elapsed().as_millis(),
                    residue: None,
                });
            }
        }
    }
    out
}

/// Lemma-level check of the abstract x/y/z power recursion: instantiate with
/// concrete algebra elements satisfying the hypotheses and verify the
/// conclusion for m up to m_max.
pub fn xyz_lemma_checks(inst: &AlgebraInstance, m_max: u32) -> Vec<SuiteRecord> {
    let n = inst.n;
    let mut out = Vec::new();
    // instance for part (1): y = e_{n-1}, x = e_n, z = the bracket
    // y x = alpha x y + z with alpha = r^2 hmm derived from the defining split:
    // E_{n-1,n} = e_{n-1} e_n - r^2 e_n e_{n-1}
    let y = e(n - 1);
    let x = e(n);
    let alpha = rf(2, 0);
    let z = Element::term(Word::one(ep(n - 1, n)), one());
    // z x = beta x z with beta = (rs)^{-1} s^2 ... computed: E_{n-1,n} e_n
    // = rs e_n E_{n-1,n} + E_{n-1,n'}; not a clean quasi-commutation, so use
    // part (2) shape instead: y z = beta z y with
    // e_{n-1} E_{n-1,n} = s^2 ... from the catalog: e_{n-1} E_{n-1,n}
    // = s^2 E_{n-1,n} e_{n-1} (3.2.1), so beta = s^2.
    let beta = rf(0, 2);
    for m in 1..=m_max {
        let mi = m as i64;
        // (2): y^m x = alpha^m x y^m + ((alpha^m - beta^m)/(alpha - beta)) z y^{m-1}
        let lhs = Element::term(Word(pow_word(y, m)), one())
            .mul(&Element::term(Word::one(x), one()));
        let ladder = {
            let mut acc = RatFun::zero();
            for t in 0..mi {
                acc = acc.add(&alpha.pow(t).mul(&beta.pow(mi - 1 - t)));
            }
            acc
        };
        let rhs = Element::term(Word::one(x), alpha.pow(mi))
            .mul(&Element::term(Word(pow_word(y, m)), one()))
            .add(&z.scale(&ladder).mul(&Element::term(Word(pow_word(y, m - 1)), one())));
        let cert = certify_identity(&lhs, &rhs, &inst.pbw_rules, DEFAULT_BUDGET);
        out.push(SuiteRecord {
            tag: "3.8.2".into(),
            params: format!("n={n},m={m},y=e{},x=e{}", n - 1, n),
            status: if cert.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
            steps: 0,
            millis: 0,
            residue: None,
        });
        // (1): y x^m = alpha^m x^m y + ((alpha^m - beta'^m)/(alpha - beta')) x^{m-1} z
        // with z x = beta' x z; here z = E_{n-1,n}, x = e_n:
        // E_{n-1,n} e_n = rs e_n E_{n-1,n} + E_{n-1,n'} is not quasi-commuting,
        // so take x = e_{n-2}, y = e_{n-1} instead when n >= 3 (long pair):
        if n >= 3 {
            let xx = e(n - 2);
            let yy = e(n - 1);
            let zz = Element::term(Word::one(ep(n - 2, n - 1)), one());
            let lhs = Element::term(Word::one(yy), one())
                .mul(&Element::term(Word(pow_word(xx, m)), one()));
            // y x = alpha x y + z with y = e_{n-1}, x = e_{n-2}:
            // e_{n-1} e_{n-2} = r^{-2}(e_{n-2} e_{n-1} - E_{n-2,n-1}),
            // so alpha = r^{-2} and z = -r^{-2} E_{n-2,n-1};
            // z x = beta x z with beta = s^{-2} since
            // e_{n-2} E_{n-2,n-1} = s^2 E_{n-2,n-1} e_{n-2}
            let aa2 = rf(-2, 0);
            let z2 = zz.scale(&rf(-2, 0).neg());
            let bb = rf(0, -2);
            let ladder = {
                let mut acc = RatFun::zero();
                for t in 0..mi {
                    acc = acc.add(&aa2.pow(t).mul(&bb.pow(mi - 1 - t)));
                }
                acc
            };
            let rhs = Element::term(Word(pow_word(xx, m)), aa2.pow(mi))
                .mul(&Element::term(Word::one(yy), one()))
                .add(
                    &Element::term(Word(pow_word(xx, m - 1)), one())
                        .mul(&z2)
                        .scale(&ladder),
                );
            let cert = certify_identity(&lhs, &rhs, &inst.pbw_rules, DEFAULT_BUDGET);
            out.push(SuiteRecord {
                tag: "3.8.1".into(),
                params: format!("n={n},m={m},y=e{},x=e{}", n - 1, n - 2),
                status: if cert.is_zero() { SuiteStatus::Pass } else { SuiteStatus::Fail },
                steps: 0,
                millis: 0,
                residue: None,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroup::Validation;

    #[test]
    fn straightening_suite_n2() {
        let inst = AlgebraInstance::build(2, Validation::Orientation).unwrap();
        let recs = run_instances(&inst, &straightening_instances(2));
        for r in &recs {
            assert_eq!(
                r.status,
                SuiteStatus::Pass,
                "{} [{}] residue {:?}",
                r.tag,
                r.params,
                r.residue
            );
        }
        assert!(!recs.is_empty());
    }

    #[test]
    fn straightening_suite_n3() {
        let inst = AlgebraInstance::build(3, Validation::Orientation).unwrap();
        let recs = run_instances(&inst, &straightening_instances(3));
        let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
        for r in fails.iter().take(10) {
            eprintln!("FAIL {} [{}] residue {:?}", r.tag, r.params, r.residue);
        }
        assert!(fails.is_empty(), "{} failures of {}", fails.len(), recs.len());
    }

    #[test]
    fn appendix_suite_n3() {
        let inst = AlgebraInstance::build(3, Validation::Orientation).unwrap();
        let recs = run_instances(&inst, &appendix_instances(3));
        for r in &recs {
            assert_eq!(r.status, SuiteStatus::Pass, "{} [{}]", r.tag, r.params);
        }
    }

    #[test]
    fn power_suite_small() {
        let inst = AlgebraInstance::build(2, Validation::Orientation).unwrap();
        let recs = run_instances(&inst, &power_instances(2, 2));
        let fails: Vec<_> = recs.iter().filter(|r| r.status != SuiteStatus::Pass).collect();
        for r in fails.iter().take(20) {
            eprintln!("FAIL {} [{}] residue {:?}", r.tag, r.params, r.residue);
        }
        assert!(fails.is_empty(), "{} failures of {}", fails.len(), recs.len());
    }

    #[test]
    fn xyz_and_corrected_forms() {
        let inst = AlgebraInstance::build(3, Validation::Orientation).unwrap();
        for r in xyz_lemma_checks(&inst, 3) {
            assert_eq!(r.status, SuiteStatus::Pass, "{} [{}]", r.tag, r.params);
        }
        for r in corrected_3_10_4(&inst, 2) {
            assert_eq!(r.status, SuiteStatus::Pass, "{} [{}] {:?}", r.tag, r.params, r.residue);
        }
    }
}
