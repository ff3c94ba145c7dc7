//! Q-functions attached to the classical root systems B/C/D: Laurent
//! symmetric polynomials in x obtained from the generalized P-functions of
//! the three special polynomial sequences, a signed-permutation coset-sum
//! oracle at t = -1, generating functions, and the x -> x + x^{-1}
//! analogues of the Schur Pfaffian evaluations.

use crate::partition::StrictPartition;
use crate::pfaffian::SkewMatrix;
use crate::pfunc::{nimmo_p, one_row_vars, two_row_vars, x_vars, y_vars, PFuncError};
use crate::poly::{rat_int, SparsePoly};
use crate::ratfn::RationalFn;
use crate::seq::AdmissibleSeq;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootType {
    B,
    C,
    D,
}

impl RootType {
    pub fn seq(&self) -> AdmissibleSeq {
        match self {
            RootType::B => AdmissibleSeq::type_b(),
            RootType::C => AdmissibleSeq::type_c(),
            RootType::D => AdmissibleSeq::type_d(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
        }
    }

    pub fn parse(s: &str) -> Option<RootType> {
        match s {
            "B" | "b" => Some(RootType::B),
            "C" | "c" => Some(RootType::C),
            "D" | "d" => Some(RootType::D),
            _ => None,
        }
    }

    pub fn all() -> [RootType; 3] {
        [RootType::B, RootType::C, RootType::D]
    }
}

/// x + x^{-1} for a named variable.
fn u_of(var: &str) -> SparsePoly {
    SparsePoly::var(var).add(&SparsePoly::var_pow(var, -1))
}

/// Substitute x_i -> x_i + x_i^{-1}: converts a polynomial in the
/// "u-coordinates" into a reciprocal Laurent polynomial in x.
pub fn to_laurent(p: &SparsePoly, n: usize) -> SparsePoly {
    let bindings: BTreeMap<String, SparsePoly> = x_vars(n)
        .into_iter()
        .map(|v| {
            let u = u_of(&v);
            (v, u)
        })
        .collect();
    p.substitute(&bindings)
}

/// A B/C/D Q-function in both coordinate systems: as a polynomial in
/// u_i = x_i + x_i^{-1}, and as a Laurent polynomial in x_i.
pub struct BCDQFunction {
    pub root: RootType,
    pub lambda: StrictPartition,
    pub n: usize,
    pub value_u: SparsePoly,
    pub value_laurent: SparsePoly,
}

/// Q^X_lambda = 2^{l(lambda)} P^{F^X}_lambda evaluated at x + x^{-1}.
pub fn bcd_q(root: RootType, lambda: &StrictPartition, n: usize) -> BCDQFunction {
    let value_u = nimmo_p(&root.seq(), lambda, n).scale(&rat_int(1 << lambda.len()));
    let value_laurent = to_laurent(&value_u, n);
    BCDQFunction {
        root,
        lambda: lambda.clone(),
        n,
        value_u,
        value_laurent,
    }
}

fn sign_vectors(l: usize, even_only: bool) -> Vec<Vec<bool>> {
    (0..1u32 << l)
        .filter(|m| !even_only || m.count_ones() % 2 == 0)
        .map(|m| (0..l).map(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn ordered_tuples(n: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for k in 0..n {
            if !cur.contains(&k) {
                cur.push(k);
                rec(n, l, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![];
    rec(n, l, &mut vec![], &mut out);
    out
}

/// The coset sum of the Hall-Littlewood function at t = -1 for an exponent
/// vector (entries may be negative for the even-orthogonal paired weight).
/// Signed permutations are realized as an ordered tuple of positions plus a
/// sign vector on those positions; the D-type length-n case restricts to
/// even sign vectors. All single-variable and pairwise factors are summed
/// over a common cleared denominator and the result is certified to be a
/// Laurent polynomial.
fn weyl_sum(root: RootType, exps: &[i64], n: usize) -> SparsePoly {
    let l = exps.len();
    assert!(l <= n, "exponent vector longer than the variable count");
    let vars = x_vars(n);
    let even_only = root == RootType::D && l == n;
    // Master denominator: the u-coordinate Vandermonde times the cleared
    // single-variable denominators (x - 1 for B, x^2 - 1 for C).
    let mut master = SparsePoly::one();
    for a in 0..n {
        for b in a + 1..n {
            master = master.mul(&u_of(&vars[a]).sub(&u_of(&vars[b])));
        }
        master = match root {
            RootType::B => master.mul(&SparsePoly::var(&vars[a]).sub(&SparsePoly::one())),
            RootType::C => {
                master.mul(&SparsePoly::var_pow(&vars[a], 2).sub(&SparsePoly::one()))
            }
            RootType::D => master,
        };
    }
    let mut acc = SparsePoly::zero();
    for head in ordered_tuples(n, l) {
        for signs in sign_vectors(l, even_only) {
            let mut num = SparsePoly::one();
            let mut den = SparsePoly::one();
            for (i, &ui) in head.iter().enumerate() {
                let e = if signs[i] { -exps[i] } else { exps[i] };
                num = num.mul(&SparsePoly::var_pow(&vars[ui], e));
                // (X+1)/(X-1) for B, (X^2+1)/(X^2-1) for C, at X = x or
                // x^{-1}; the inverted variants equal minus the plain ones.
                match root {
                    RootType::B => {
                        num = num.mul(&SparsePoly::var(&vars[ui]).add(&SparsePoly::one()));
                        den = den.mul(&SparsePoly::var(&vars[ui]).sub(&SparsePoly::one()));
                    }
                    RootType::C => {
                        num = num
                            .mul(&SparsePoly::var_pow(&vars[ui], 2).add(&SparsePoly::one()));
                        den = den
                            .mul(&SparsePoly::var_pow(&vars[ui], 2).sub(&SparsePoly::one()));
                    }
                    RootType::D => {}
                }
                if signs[i] && root != RootType::D {
                    num = num.neg();
                }
            }
            for i in 0..l {
                let ui = u_of(&vars[head[i]]);
                for j in i + 1..l {
                    let uj = u_of(&vars[head[j]]);
                    num = num.mul(&ui.add(&uj));
                    den = den.mul(&ui.sub(&uj));
                }
                for k in (0..n).filter(|k| !head.contains(k)) {
                    let uk = u_of(&vars[k]);
                    num = num.mul(&ui.add(&uk));
                    den = den.mul(&ui.sub(&uk));
                }
            }
            let comp = SparsePoly::exact_divide(&master, &den)
                .expect("coset denominator divides the master denominator");
            acc = acc.add(&num.mul(&comp));
        }
    }
    SparsePoly::exact_divide(&acc, &master).expect("coset sum must be a Laurent polynomial")
}

/// The Weyl-group coset sum at t = -1 for a strict partition (for D of
/// length n this is the single dominant weight lambda, not the pair).
pub fn weyl_oracle(
    root: RootType,
    lambda: &StrictPartition,
    n: usize,
) -> Result<SparsePoly, PFuncError> {
    if n > 3 {
        return Err(PFuncError::TooManyVariables(n));
    }
    let exps: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    Ok(weyl_sum(root, &exps, n))
}

/// The Hall-Littlewood-at-(-1) identification: the coset sum equals
/// P^{F^X}_lambda(x + x^{-1}), with the even-orthogonal length-n case
/// paired with the weight whose last coordinate is negated.
pub fn nhl_check(
    root: RootType,
    lambda: &StrictPartition,
    n: usize,
) -> Result<bool, PFuncError> {
    if n > 3 {
        return Err(PFuncError::TooManyVariables(n));
    }
    if lambda.len() > n {
        return Ok(true); // out of range for a dominant weight
    }
    let p = to_laurent(&nimmo_p(&root.seq(), lambda, n), n);
    let got = if root == RootType::D && lambda.len() == n {
        let exps: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        let mut paired = exps.clone();
        *paired.last_mut().unwrap() = -paired.last().unwrap();
        weyl_sum(root, &exps, n).add(&weyl_sum(root, &paired, n))
    } else {
        weyl_oracle(root, lambda, n)?
    };
    Ok(got == p)
}

/// Truncated inverse of a series with constant term 1 in `var`.
fn series_inv(p: &SparsePoly, var: &str, order: usize) -> SparsePoly {
    let vs = [var.to_string()];
    let q = SparsePoly::one().sub(p);
    assert!(
        q.coeff_of(var, 0).is_zero(),
        "series_inv: constant term must be 1"
    );
    let mut acc = SparsePoly::one();
    let mut pw = SparsePoly::one();
    for _ in 1..=order {
        pw = pw.mul_capped(&q, order, &vs);
        if pw.is_zero() {
            break;
        }
        acc = acc.add(&pw);
    }
    acc
}

/// phi^X(z) as a truncated series.
pub fn phi_series(root: RootType, var: &str, order: usize) -> SparsePoly {
    let z = SparsePoly::var(var);
    let z2 = SparsePoly::one().add(&z.mul(&z));
    let vs = [var.to_string()];
    match root {
        RootType::B => SparsePoly::one()
            .add(&z)
            .pow(2)
            .mul_capped(&series_inv(&z2, var, order), order, &vs),
        RootType::C => SparsePoly::one(),
        RootType::D => SparsePoly::one()
            .sub(&z.mul(&z))
            .mul_capped(&series_inv(&z2, var, order), order, &vs),
    }
}

/// psi^X(z) as a truncated series.
pub fn psi_series(root: RootType, var: &str, order: usize) -> SparsePoly {
    let z = SparsePoly::var(var);
    let z2 = SparsePoly::one().add(&z.mul(&z));
    let vs = [var.to_string()];
    match root {
        RootType::B => z
            .scale(&rat_int(2))
            .mul_capped(&series_inv(&z2, var, order), order, &vs),
        RootType::C => SparsePoly::zero(),
        RootType::D => z
            .mul(&z)
            .scale(&rat_int(-2))
            .mul_capped(&series_inv(&z2, var, order), order, &vs),
    }
}

/// The reciprocal product kernel
/// prod_i (1 + x_i z)(1 + x_i^{-1} z) / ((1 - x_i z)(1 - x_i^{-1} z))
/// truncated at z-order `order`.
pub fn pi_tilde_poly(vars: &[String], zvar: &str, order: usize) -> SparsePoly {
    let vs = [zvar.to_string()];
    let z = SparsePoly::var(zvar);
    let mut acc = SparsePoly::one();
    for v in vars {
        for x in [SparsePoly::var(v), SparsePoly::var_pow(v, -1)] {
            let xz = x.mul(&z);
            acc = acc
                .mul_capped(&SparsePoly::one().add(&xz), order, &vs)
                .mul_capped(
                    &series_inv(&SparsePoly::one().sub(&xz), zvar, order),
                    order,
                    &vs,
                );
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcdGfReport {
    /// One-row generating function sum Q^X_(r) z^r.
    pub one_row: bool,
    /// Two-row generating function, both sides multiplied by (z+w)(1+zw).
    pub two_row: bool,
    /// Single-variable generating function of 1 + 2 sum f^X_r z^r.
    pub f_gf: bool,
}

impl BcdGfReport {
    pub fn pass(&self) -> bool {
        self.one_row && self.two_row && self.f_gf
    }
}

/// Generating-function identities for the B/C/D one- and two-row
/// Q-functions, and for the defining sequence itself, as truncated-series
/// identities of the given z- (and w-) order.
pub fn bcd_gf_checks(root: RootType, n: usize, order: usize) -> BcdGfReport {
    let seq = root.seq();
    let xv = x_vars(n);
    let zc = ["z".to_string()];
    let wc = ["w".to_string()];
    let trunc = |p: &SparsePoly| p.truncate(order, &zc).truncate(order, &wc);
    let sign = if n % 2 == 0 { rat_int(-1) } else { rat_int(1) };

    // chi-scaled rows: Q_(r) = 2 P_(r) for r >= 1, Q_(0) = 1.
    let q_one: Vec<SparsePoly> = (0..=order)
        .map(|r| {
            let scale = if r == 0 { 1 } else { 2 };
            to_laurent(&one_row_vars(&seq, r as u32, &xv), n).scale(&rat_int(scale))
        })
        .collect();
    let mut lhs1 = SparsePoly::zero();
    for (r, q) in q_one.iter().enumerate() {
        lhs1 = lhs1.add(&q.mul(&SparsePoly::var_pow("z", r as i64)));
    }
    let phi_z = phi_series(root, "z", order);
    let psi_z = psi_series(root, "z", order);
    let pi_z = pi_tilde_poly(&xv, "z", order);
    let rhs1 = phi_z
        .mul_capped(&pi_z, order, &zc)
        .add(&psi_z.scale(&sign));
    let one_row = trunc(&lhs1) == trunc(&rhs1);

    // Two-row, multiplied through by (z+w)(1+zw).
    let z = SparsePoly::var("z");
    let w = SparsePoly::var("w");
    let zw_pos = z.add(&w).mul(&SparsePoly::one().add(&z.mul(&w)));
    let zw_neg = z.sub(&w).mul(&SparsePoly::one().sub(&z.mul(&w)));
    let mut lhs2 = SparsePoly::zero();
    for r in 0..=order {
        for s in 0..=order {
            let p = two_row_vars(&seq, r as u32, s as u32, &xv);
            if p.is_zero() {
                continue;
            }
            let chi = (if r == 0 { 1 } else { 2 }) * (if s == 0 { 1 } else { 2 });
            lhs2 = lhs2.add(
                &to_laurent(&p, n)
                    .scale(&rat_int(chi))
                    .mul(&SparsePoly::var_pow("z", r as i64))
                    .mul(&SparsePoly::var_pow("w", s as i64)),
            );
        }
    }
    let lhs2 = lhs2.mul(&zw_pos);
    let phi_w = phi_series(root, "w", order);
    let psi_w = psi_series(root, "w", order);
    let pi_w = pi_tilde_poly(&xv, "w", order);
    let term1 = zw_neg
        .mul(&phi_z.mul(&phi_w))
        .mul(&pi_z.mul(&pi_w).sub(&SparsePoly::one()));
    let term2 = phi_z
        .mul(&psi_w)
        .mul(&pi_z)
        .sub(&phi_w.mul(&psi_z).mul(&pi_w))
        .mul(&zw_pos)
        .scale(&(-sign.clone()));
    let term3 = psi_z.sub(&psi_w).mul(&zw_pos);
    let two_row = trunc(&lhs2) == trunc(&term1.add(&term2).add(&term3));

    // Single-variable sequence generating function: the sequence lives in
    // the variable u, evaluated at u = x + x^{-1}.
    let x1 = vec!["x1".to_string()];
    let mut u_binding = BTreeMap::new();
    u_binding.insert(crate::seq::U.to_string(), u_of("x1"));
    let mut lhs3 = SparsePoly::one();
    for r in 1..=order {
        lhs3 = lhs3.add(
            &seq.f(r)
                .substitute(&u_binding)
                .scale(&rat_int(2))
                .mul(&SparsePoly::var_pow("z", r as i64)),
        );
    }
    let rhs3 = phi_series(root, "z", order)
        .mul_capped(&pi_tilde_poly(&x1, "z", order), order, &zc)
        .add(&psi_series(root, "z", order));
    let f_gf = lhs3.truncate(order, &zc) == rhs3.truncate(order, &zc);

    BcdGfReport {
        one_row,
        two_row,
        f_gf,
    }
}

/// The skew kernel with entries
/// (u_j - u_i)/(u_j + u_i), u_i = x_i + x_i^{-1}.
pub fn tilde_a(vars: &[String]) -> SkewMatrix<RationalFn> {
    SkewMatrix::from_fn(vars.len(), |i, j| {
        let (ui, uj) = (u_of(&vars[i]), u_of(&vars[j]));
        RationalFn::new(uj.sub(&ui), uj.add(&ui))
    })
}

pub fn tilde_delta(vars: &[String]) -> RationalFn {
    let mut acc = RationalFn::one();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            let (ui, uj) = (u_of(&vars[i]), u_of(&vars[j]));
            acc = acc.mul(&RationalFn::new(uj.sub(&ui), uj.add(&ui)));
        }
    }
    acc
}

/// (1 + x y)(1 + x^{-1} y) / ((1 - x y)(1 - x^{-1} y)): the reciprocal
/// analogue of the classical (1+xy)/(1-xy) kernel. Note the orientation:
/// this equals -(u_x + u_y)/(u_x - u_y).
pub fn tilde_b_entry(xvar: &str, yvar: &str) -> RationalFn {
    let num = |s: i64| {
        SparsePoly::one().add(
            &SparsePoly::var_pow(xvar, s).mul(&SparsePoly::var(yvar)),
        )
    };
    let den = |s: i64| {
        SparsePoly::one().sub(
            &SparsePoly::var_pow(xvar, s).mul(&SparsePoly::var(yvar)),
        )
    };
    RationalFn::new(num(1).mul(&num(-1)), den(1).mul(&den(-1)))
}

#[cfg(test)]
fn pi_tilde_fn(xv: &[String], yv: &[String]) -> RationalFn {
    let mut acc = RationalFn::one();
    for x in xv {
        for y in yv {
            acc = acc.mul(&tilde_b_entry(x, y));
        }
    }
    acc
}

/// Cleared kernel Pfaffian. The matrix with entries (t_l - t_k)/(t_l + t_k)
/// has each row and column k scaled by d_k = prod_{m != k}(t_m + t_k), which
/// makes every entry polynomial and multiplies the Pfaffian by prod_k d_k.
/// `zeroed` lists pairs whose entry is forced to zero before clearing;
/// `ones_rows > 0` appends a border column of ones paired with the first
/// `ones_rows` value rows only (and zero against the rest).
pub(crate) fn cleared_kernel_pf(
    ts: &[SparsePoly],
    zeroed: &[(usize, usize)],
    ones_rows: usize,
) -> SparsePoly {
    let m = ts.len();
    let dim = if ones_rows > 0 { m + 1 } else { m };
    let mat = SkewMatrix::from_fn(dim, |k, l| {
        if l == m {
            if k < ones_rows {
                (0..m)
                    .filter(|&q| q != k)
                    .fold(SparsePoly::one(), |acc, q| acc.mul(&ts[q].add(&ts[k])))
            } else {
                SparsePoly::zero()
            }
        } else if zeroed.contains(&(k, l)) {
            SparsePoly::zero()
        } else {
            let mut e = ts[l].sub(&ts[k]).mul(&ts[l].add(&ts[k]));
            for q in (0..m).filter(|&q| q != k && q != l) {
                e = e.mul(&ts[q].add(&ts[k])).mul(&ts[q].add(&ts[l]));
            }
            e
        }
    });
    mat.pfaffian()
}

/// The clearing by prod_k d_k of a product of kernel factors over the
/// `antisym` pairs: prod over k < l of (t_l - t_k)(t_l + t_k) when
/// `antisym(k, l)`, and (t_l + t_k)^2 otherwise.
pub(crate) fn cleared_pair_product(
    ts: &[SparsePoly],
    antisym: impl Fn(usize, usize) -> bool,
) -> SparsePoly {
    let m = ts.len();
    let mut acc = SparsePoly::one();
    for k in 0..m {
        for l in k + 1..m {
            let plus = ts[l].add(&ts[k]);
            acc = if antisym(k, l) {
                acc.mul(&ts[l].sub(&ts[k])).mul(&plus)
            } else {
                acc.mul(&plus).mul(&plus)
            };
        }
    }
    acc
}

/// The x -> x + x^{-1} analogues of the Schur Pfaffian evaluations,
/// verified symbolically over Laurent polynomials after clearing all
/// denominators: the plain and ones-bordered kernel Pfaffians, the
/// two-alphabet block form (with the (1+xy)(1+x^{-1}y)-oriented kernel and
/// a +A~(y) corner block), and the z/w-bordered forms with the
/// (z-w)(1-zw)/((z+w)(1+zw)) prefactor.
///
/// All matrices are realized as the plain kernel (t_l - t_k)/(t_l + t_k)
/// at the values (x_1+x_1^{-1}, .., x_n+x_n^{-1}, -(z+z^{-1}), -(w+w^{-1})),
/// and the building blocks are identified with their product expressions in
/// x, z, w by direct rational-function comparisons.
pub fn tilde_kernel_checks(n: usize, p: usize) -> bool {
    let xv = x_vars(n);
    let yv = y_vars(p);
    let mut ok = true;

    // The heavy Pfaffian identities are verified at generic values
    // t_1, .., t_m (fresh polynomial variables); the Laurent statements are
    // their images under t_i -> x_i + x_i^{-1}, border values
    // -> -(z + z^{-1}) etc., which is a ring homomorphism.
    let gen: Vec<SparsePoly> = (1..=n + 2)
        .map(|i| SparsePoly::var(&format!("t{i}")))
        .collect();
    let us = &gen[..n];

    // Plain (n even) or ones-bordered (n odd) kernel Pfaffian = Delta~.
    ok &= cleared_kernel_pf(us, &[], if n % 2 == 0 { 0 } else { n })
        == cleared_pair_product(us, |_, _| true);

    // Two-alphabet block form (n + p even): the block matrix
    // [[A~(x), B(x;y)], [-B^t, A~(y)]] is the plain kernel at the values
    // above with -(y_j + y_j^{-1}) appended, so its Pfaffian is the full
    // pair product Delta~(x) Delta~(y) Pi(x;y).
    if (n + p) % 2 == 0 && p > 0 {
        let ts = &gen[..n + p];
        ok &= cleared_kernel_pf(ts, &[], 0) == cleared_pair_product(ts, |_, _| true);
        // Identify the blocks at the Laurent values: cross entries are the
        // reciprocal product kernel and the lower-right block is +A~(y)
        // (not -A~(y)).
        let vals: Vec<SparsePoly> = xv
            .iter()
            .map(|v| u_of(v))
            .chain(yv.iter().map(|v| u_of(v).neg()))
            .collect();
        let ay = tilde_a(&yv);
        for i in 0..n {
            for j in 0..p {
                ok &= RationalFn::new(vals[n + j].sub(&vals[i]), vals[n + j].add(&vals[i]))
                    == tilde_b_entry(&xv[i], &yv[j]);
            }
        }
        for j in 0..p {
            for j2 in j + 1..p {
                ok &= RationalFn::new(
                    vals[n + j2].sub(&vals[n + j]),
                    vals[n + j2].add(&vals[n + j]),
                ) == ay.get(j, j2);
            }
        }
    }

    // z/w-bordered forms: two extra generic values (specializing to
    // -(z+z^{-1}) and -(w+w^{-1})) with the corner entry between the two
    // border rows zeroed out. For odd n a ones column against the x-rows
    // only is appended as well.
    let ts = &gen[..n + 2];
    let corner = [(n, n + 1)];
    let full = cleared_pair_product(ts, |_, _| true);
    // Delta~(x) times the (z-w)(1-zw)/((z+w)(1+zw)) prefactor.
    let dx_c = cleared_pair_product(ts, |k, l| l < n || (k == n && l == n + 1));
    if n % 2 == 0 {
        ok &= cleared_kernel_pf(ts, &corner, 0) == full.sub(&dx_c);
    } else {
        let dx_piz = cleared_pair_product(ts, |_, l| l <= n);
        let dx_piw = cleared_pair_product(ts, |k, l| l < n || (l == n + 1 && k < n));
        ok &= cleared_kernel_pf(ts, &corner, n)
            == full.sub(&dx_c).sub(&dx_piz).add(&dx_piw);
    }
    // Identify the prefactor and a border entry with their z/w expressions.
    let ts: Vec<SparsePoly> = xv
        .iter()
        .map(|v| u_of(v))
        .chain(["z", "w"].iter().map(|v| u_of(v).neg()))
        .collect();
    let z = SparsePoly::var("z");
    let w = SparsePoly::var("w");
    let prefactor = RationalFn::new(
        z.sub(&w).mul(&SparsePoly::one().sub(&z.mul(&w))),
        z.add(&w).mul(&SparsePoly::one().add(&z.mul(&w))),
    );
    ok &= RationalFn::new(ts[n + 1].sub(&ts[n]), ts[n + 1].add(&ts[n])) == prefactor;
    if n > 0 {
        ok &= RationalFn::new(ts[n].sub(&ts[0]), ts[n].add(&ts[0]))
            == tilde_b_entry(&xv[0], "z");
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_examples() {
        // Type C, (1), n=1: 2u = 2(x + x^{-1}).
        let q = bcd_q(RootType::C, &StrictPartition::of(&[1]), 1);
        assert_eq!(q.value_u, SparsePoly::var("x1").scale(&rat_int(2)));
        assert_eq!(q.value_laurent, u_of("x1").scale(&rat_int(2)));
        // Type D, (2), n=1: 2(u^2 - 2) = 2(x^2 + x^{-2}).
        let q = bcd_q(RootType::D, &StrictPartition::of(&[2]), 1);
        let want = SparsePoly::var_pow("x1", 2)
            .add(&SparsePoly::var_pow("x1", -2))
            .scale(&rat_int(2));
        assert_eq!(q.value_laurent, want);
        // Empty partition.
        assert_eq!(
            bcd_q(RootType::B, &StrictPartition::empty(), 2).value_laurent,
            SparsePoly::one()
        );
    }

    #[test]
    fn laurent_palindrome() {
        let q = bcd_q(RootType::B, &StrictPartition::of(&[2, 1]), 2).value_laurent;
        let mut b = BTreeMap::new();
        b.insert("x1".to_string(), SparsePoly::var_pow("x1", -1));
        assert_eq!(q.substitute(&b), q);
        assert!(q.is_symmetric_in(&x_vars(2)));
    }

    #[test]
    fn weyl_oracle_small() {
        for root in RootType::all() {
            for (lam, n) in [
                (StrictPartition::empty(), 2),
                (StrictPartition::of(&[1]), 1),
                (StrictPartition::of(&[2]), 2),
                (StrictPartition::of(&[2, 1]), 2),
                (StrictPartition::of(&[3, 1]), 3),
            ] {
                assert!(
                    nhl_check(root, &lam, n).unwrap(),
                    "type {} lambda {lam} n {n}",
                    root.name()
                );
            }
        }
    }

    #[test]
    fn gf_checks_small() {
        for root in RootType::all() {
            for n in [1usize, 2] {
                let rep = bcd_gf_checks(root, n, 4);
                assert!(rep.pass(), "type {} n {n}: {rep:?}", root.name());
            }
        }
    }

    #[test]
    fn tilde_kernels() {
        assert!(tilde_kernel_checks(1, 1));
        assert!(tilde_kernel_checks(2, 2));
        assert!(tilde_kernel_checks(3, 1));
        assert!(tilde_kernel_checks(3, 2));
    }

    // n = 4 is supported but takes about two minutes; exercised on demand.
    #[test]
    #[ignore]
    fn tilde_kernels_n4() {
        assert!(tilde_kernel_checks(4, 2));
    }

    /// The corner block of the two-alphabet form must be +A~(y): with a
    /// -A~(y) corner the identity already fails at n = p = 2 (while it
    /// holds, vacuously in the corner, at p = 1).
    #[test]
    fn corner_sign_matters() {
        let (n, p) = (2usize, 2usize);
        let xv = x_vars(n);
        let yv = y_vars(p);
        let ax = tilde_a(&xv);
        let ay = tilde_a(&yv);
        let rhs = tilde_delta(&xv)
            .mul(&tilde_delta(&yv))
            .mul(&pi_tilde_fn(&xv, &yv));
        for flip in [false, true] {
            let big = SkewMatrix::from_fn(n + p, |i, j| {
                if j < n {
                    ax.get(i, j)
                } else if i < n {
                    tilde_b_entry(&xv[i], &yv[j - n])
                } else {
                    let e = ay.get(i - n, j - n);
                    if flip {
                        e.neg()
                    } else {
                        e
                    }
                }
            });
            assert_eq!(big.pfaffian() == rhs, !flip);
        }
    }
}
