//! Command-line front door: compute any object the library exposes, run any
//! named verification suite, and emit canonical JSON.
//!
//! Canonical polynomial JSON is {"vars":[...],"terms":[[[e,...],"p/q"],...]}
//! with terms in descending graded-lex order; identical invocations produce
//! byte-identical output. `--render` adds a human-readable line on stderr
//! (excluded from the determinism contract).

use clap::{Args, Parser, Subcommand};
use pfq::bcd::{bcd_q, weyl_oracle, RootType};
use pfq::partition::StrictPartition;
use pfq::pfunc::{hl_tminus1, nimmo_p, schur_form_p, x_vars};
use pfq::pieri::{pieri_det, pieri_direct};
use pfq::poly::SparsePoly;
use pfq::seq::{dual_solve, AdmissibleSeq};
use pfq::skew::skew_p;
use pfq::suites::{run_suite, SuiteOptions, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "pfq", version, about = "Exact-arithmetic generalized Schur P/Q-functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute P^F_lambda(x_1..x_n) by a chosen route.
    Compute {
        /// Sequence spec: monomial | factorial:symbolic | factorial:symbolic:K
        /// | factorial:a0,a1,.. | typeB | typeC | typeD
        #[arg(long)]
        seq: String,
        /// Strict partition, e.g. "3,1" (empty string for the empty partition).
        #[arg(long)]
        partition: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        /// Evaluation route: nimmo | hl | schur
        #[arg(long, default_value = "nimmo")]
        route: String,
        #[command(flatten)]
        render: Render,
    },
    /// Solve for the dual sequence fhat_0..fhat_N.
    Dual {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Compute the skew function P^F_{lambda/mu}(y_1..y_p) paired with n x's.
    Skew {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        partition: String,
        /// Inner partition mu.
        #[arg(long)]
        inner: String,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[command(flatten)]
        render: Render,
    },
    /// Modified Pieri coefficient c^lambda_{mu}(z|a) as a truncated z-series.
    Pieri {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Parity of n + l(mu): even | odd (given as the parity of n).
        #[arg(long, default_value = "even")]
        parity: String,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        render: Render,
    },
    /// Expand P^F_mu * q_r in the P^F basis over n variables.
    PieriExpand {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 4)]
        vars: usize,
    },
    /// Type B/C/D Q-function Q^X_lambda.
    Bcd {
        /// Root-system type: B | C | D
        #[arg(long = "type")]
        root: String,
        #[arg(long)]
        partition: String,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Output form: u (polynomial in u_i = x_i + x_i^{-1}) | laurent |
        /// weyl (the coset-sum oracle, Laurent form)
        #[arg(long, default_value = "u")]
        form: String,
        #[command(flatten)]
        render: Render,
    },
    /// Run named verification suites (all of them when none are given).
    Verify {
        /// Suite names; see `pfq list-suites`.
        suites: Vec<String>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Worker threads per suite (1 = serial). Report order is
        /// deterministic either way.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the authoritative registry of suite names.
    ListSuites,
}

#[derive(Args)]
struct Render {
    /// Also print a human-readable rendering on stderr.
    #[arg(long, default_value_t = false)]
    render: bool,
}

fn usage_error(msg: &str) -> ! {
    eprintln!("pfq: {msg}");
    std::process::exit(2);
}

fn parse_partition(s: &str) -> StrictPartition {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return StrictPartition::empty();
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .unwrap_or_else(|_| usage_error(&format!("bad partition part {t:?}")))
        })
        .collect();
    for w in parts.windows(2) {
        if w[0] <= w[1] {
            usage_error(&format!("partition {s:?} is not strictly decreasing"));
        }
    }
    if parts.last() == Some(&0) {
        usage_error(&format!("partition {s:?} has a zero part"));
    }
    StrictPartition::of(&parts)
}

fn parse_seq(spec: &str) -> AdmissibleSeq {
    AdmissibleSeq::parse(spec)
        .unwrap_or_else(|e| usage_error(&format!("bad sequence spec {spec:?}: {e}")))
}

/// Default truncation order: --order wins, then PFQ_DEFAULT_ORDER, then the
/// built-in fallback.
fn default_order(flag: Option<usize>, fallback: usize) -> usize {
    flag.or_else(|| {
        std::env::var("PFQ_DEFAULT_ORDER")
            .ok()
            .map(|v| v.parse().unwrap_or_else(|_| usage_error("bad PFQ_DEFAULT_ORDER")))
    })
    .unwrap_or(fallback)
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn emit_poly(p: &SparsePoly, vars: &[String], render: &Render) {
    emit(&p.to_json_over(vars));
    if render.render {
        eprintln!("{p}");
    }
}

fn main() {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Compute {
            seq,
            partition,
            vars,
            route,
            render,
        } => {
            let s = parse_seq(&seq);
            let lambda = parse_partition(&partition);
            let value = match route.as_str() {
                "nimmo" => nimmo_p(&s, &lambda, vars),
                "hl" => hl_tminus1(&s, &lambda, vars)
                    .unwrap_or_else(|e| usage_error(&format!("{e}"))),
                "schur" => schur_form_p(&s, &lambda, vars),
                other => usage_error(&format!("unknown route {other:?}")),
            };
            emit_poly(&value, &x_vars(vars), &render);
        }
        Cmd::Dual { seq, order } => {
            let s = parse_seq(&seq);
            let order = default_order(order, 8);
            let dual = dual_solve(&s, order);
            let fhats: Vec<serde_json::Value> =
                (0..=order).map(|d| dual.fhat(d).to_json()).collect();
            emit(&serde_json::json!({ "order": order, "fhat": fhats }));
        }
        Cmd::Skew {
            seq,
            partition,
            inner,
            p,
            vars,
            render,
        } => {
            let s = parse_seq(&seq);
            let lambda = parse_partition(&partition);
            let mu = parse_partition(&inner);
            if !lambda.contains(&mu) {
                usage_error("inner partition is not contained in the outer one");
            }
            let value = skew_p(&s, &lambda, &mu, p, vars);
            emit_poly(&value, &x_vars(vars), &render);
        }
        Cmd::Pieri {
            seq,
            lambda,
            mu,
            parity,
            order,
            render,
        } => {
            let s = parse_seq(&seq);
            let lambda = parse_partition(&lambda);
            let mu = parse_partition(&mu);
            let parity = match parity.as_str() {
                "even" => 0,
                "odd" => 1,
                other => usage_error(&format!("bad parity {other:?}")),
            };
            let fallback = (lambda.weight().saturating_sub(mu.weight())) as usize + 2;
            let order = default_order(order, fallback);
            let value = pieri_det(&s, &lambda, &mu, parity, order);
            emit_poly(&value, &[pfq::pieri::Z.to_string()], &render);
        }
        Cmd::PieriExpand { seq, mu, r, vars } => {
            let s = parse_seq(&seq);
            let mu = parse_partition(&mu);
            let expansion = pieri_direct(&s, &mu, r, vars)
                .unwrap_or_else(|e| usage_error(&format!("{e}")));
            let entries: Vec<serde_json::Value> = expansion
                .iter()
                .map(|(lam, coeff)| {
                    serde_json::json!({
                        "lambda": lam.parts(),
                        "coeff": coeff.to_json(),
                    })
                })
                .collect();
            emit(&serde_json::json!({ "expansion": entries }));
        }
        Cmd::Bcd {
            root,
            partition,
            vars,
            form,
            render,
        } => {
            let root = RootType::parse(&root)
                .unwrap_or_else(|| usage_error(&format!("unknown type {root:?}")));
            let lambda = parse_partition(&partition);
            if lambda.len() > vars {
                usage_error("partition longer than the number of variables");
            }
            let value = match form.as_str() {
                "u" | "laurent" => {
                    let q = bcd_q(root, &lambda, vars);
                    if form == "u" {
                        q.value_u
                    } else {
                        q.value_laurent
                    }
                }
                "weyl" => weyl_oracle(root, &lambda, vars)
                    .unwrap_or_else(|e| usage_error(&format!("{e}"))),
                other => usage_error(&format!("unknown form {other:?}")),
            };
            emit_poly(&value, &[], &render);
        }
        Cmd::Verify {
            suites,
            max_weight,
            vars,
            order,
            jobs,
        } => {
            let opts = SuiteOptions {
                max_weight,
                vars,
                order,
                jobs,
            };
            let names: Vec<String> = if suites.is_empty() {
                SUITE_NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                suites
            };
            let mut all_pass = true;
            for name in &names {
                let report = run_suite(name, &opts)
                    .unwrap_or_else(|| usage_error(&format!("unknown suite {name:?}")));
                all_pass &= report.passed();
                emit(&serde_json::to_value(&report).unwrap());
            }
            std::process::exit(if all_pass { 0 } else { 1 });
        }
        Cmd::ListSuites => {
            for name in SUITE_NAMES {
                println!("{name}");
            }
        }
    }
}
