//! Formula evaluation for every registry entry, plus the public `check` /
//! `check_all` entry points.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::inequalities::context::CheckContext;
use crate::inequalities::params::{CheckParams, Operands};
use crate::inequalities::registry::{applicable, grid_for, lookup, registry, ParamGrid};
use crate::inequalities::result::CheckResult;
use crate::linalg::matrix::{ComplexMatrix, Vector};
use crate::linalg::spectral::pow_conv;

/// Default relative verdict tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;

fn missing(id: &str, what: &str) -> Error {
    Error::PreconditionViolated {
        id: id.to_string(),
        violations: vec![format!("operand {what} missing")],
    }
}

/// Evaluate one registry entry on pre-validated operands. One `CheckResult`
/// per link, in link order.
pub fn evaluate(
    ctx: &mut CheckContext,
    id: &str,
    ops: &Operands,
    params: &CheckParams,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let def = lookup(id).ok_or_else(|| Error::UnknownChecker { id: id.into() })?;
    let id = def.id;
    let dg = ops.digest();
    let a = || ops.a.as_ref().ok_or_else(|| missing(id, "A"));
    let b = || ops.b.as_ref().ok_or_else(|| missing(id, "B"));
    let x = || ops.x.as_ref().ok_or_else(|| missing(id, "X"));
    let ux = || ops.unit_x.as_ref().ok_or_else(|| missing(id, "x"));
    let uy = || ops.unit_y.as_ref().ok_or_else(|| missing(id, "y"));
    let ue = || ops.unit_e.as_ref().ok_or_else(|| missing(id, "e"));
    let va = || ops.vec_a.as_ref().ok_or_else(|| missing(id, "a"));
    let vb = || ops.vec_b.as_ref().ok_or_else(|| missing(id, "b"));
    let build = |link: &str, lhs: f64, rhs: f64, extra: f64, notes: String| {
        CheckResult::build(id, link, *params, lhs, rhs, tol, extra, &dg, notes)
    };

    let mut out = Vec::new();
    match id {
        "R01" => {
            let a = a()?;
            let na = ctx.norm(a)?;
            let (w, err) = ctx.radius(a, tol)?;
            out.push(build("lower", 0.5 * na, w, err, String::new()));
            out.push(build("upper", w, na, err, String::new()));
        }
        "R02" => {
            let a = a()?;
            let k = params.n_power.unwrap_or(1);
            let mut power = a.clone();
            for _ in 1..k {
                power = power.matmul(a)?;
            }
            let (wk, ek) = ctx.radius(&power, tol)?;
            let (w1, e1) = ctx.radius(a, tol)?;
            let rhs = w1.powi(k as i32);
            let transfer = (w1 + e1).powi(k as i32) - rhs;
            out.push(build("", wk, rhs, ek + transfer, String::new()));
        }
        "R03" => {
            let a = a()?;
            let na = ctx.norm(a)?;
            let (l, tl) = ctx.radius_pow(a, 2.0, tol)?;
            let a2 = a.matmul(a)?;
            let (w2, e2) = ctx.radius(&a2, tol)?;
            out.push(build("", l, 0.5 * (w2 + na * na), tl + 0.5 * e2, String::new()));
        }
        "R04" => {
            let (a, b) = (a()?, b()?);
            let r = params.r.unwrap();
            let (l, tl) = ctx.radius_pow(&b.adjoint().matmul(a)?, r, tol)?;
            let pa = ctx.psd_pow(&a.adjoint().matmul(a)?, r)?;
            let pb = ctx.psd_pow(&b.adjoint().matmul(b)?, r)?;
            let rhs = 0.5 * ctx.norm(&pa.add(&pb)?)?;
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R05" => {
            let a = a()?;
            let r = params.r.unwrap();
            let na = ctx.norm(a)?;
            let (l, tl) = ctx.radius_pow(a, 2.0 * r, tol)?;
            let (w2r, t2) = ctx.radius_pow(&a.matmul(a)?, r, tol)?;
            out.push(build("", l, 0.5 * (w2r + na.powf(2.0 * r)), tl + 0.5 * t2, String::new()));
        }
        "R06" => {
            let a = a()?;
            let (r, p, q, s) = (
                params.r.unwrap(),
                params.p.unwrap(),
                params.q.unwrap(),
                params.s.unwrap(),
            );
            let na = ctx.norm(a)?;
            let (l, tl) = ctx.radius_pow(a, 2.0 * r, tol)?;
            let a2 = a.matmul(a)?;
            // f^{pr}(|A²|) = |A²|^{s·pr}, g^{qr}(|(A²)*|) = |(A²)*|^{(1−s)·qr}
            let fa = ctx.abs_pow(&a2, s * p * r)?.scale_re(1.0 / p);
            let gb = ctx.abs_pow(&a2.adjoint(), (1.0 - s) * q * r)?.scale_re(1.0 / q);
            let rhs = 0.5 * (na.powf(2.0 * r) + ctx.norm(&fa.add(&gb)?)?);
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R07" => {
            let a = a()?;
            let (r, alpha) = (params.r.unwrap(), params.alpha.unwrap());
            let na = ctx.norm(a)?;
            let (l, tl) = ctx.radius_pow(a, 2.0 * r, tol)?;
            let pa = ctx.abs_pow(a, 4.0 * alpha * r)?;
            let ps = ctx.abs_pow(&a.adjoint(), 4.0 * (1.0 - alpha) * r)?;
            let rhs = 0.5 * (na.powf(2.0 * r) + 0.5 * ctx.norm(&pa.add(&ps)?)?);
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R08" => {
            let a = a()?;
            let (r, p, q, s) = (
                params.r.unwrap(),
                params.p.unwrap(),
                params.q.unwrap(),
                params.s.unwrap(),
            );
            let na = ctx.norm(a)?;
            let (l, tl) = ctx.radius_pow(a, r, tol)?;
            let fa = ctx.abs_pow(a, s * p * r)?.scale_re(1.0 / p);
            let gb = ctx.abs_pow(&a.adjoint(), (1.0 - s) * q * r)?.scale_re(1.0 / q);
            let rhs = 0.5 * (na.powf(r) + ctx.norm(&fa.add(&gb)?)?);
            out.push(build(
                "",
                l,
                rhs,
                tl,
                "paranormal hypothesis certified via normality".to_string(),
            ));
        }
        "R09" => {
            let (a, xm, b) = (a()?, x()?, b()?);
            let (r, p, q, s) = (
                params.r.unwrap(),
                params.p.unwrap(),
                params.q.unwrap(),
                params.s.unwrap(),
            );
            let prod = a.matmul(xm)?.matmul(b)?;
            let (l, tl) = ctx.radius_pow(&prod, r, tol)?;
            // [A f²(|X*|) A*]^{pr/2} with f²(t) = t^{2s}
            let f2 = ctx.abs_pow(&xm.adjoint(), 2.0 * s)?;
            let m1 = a.matmul(&f2)?.matmul(&a.adjoint())?.symmetrize();
            let m1p = ctx.psd_pow(&m1, 0.5 * p * r)?;
            let g2 = ctx.abs_pow(xm, 2.0 * (1.0 - s))?;
            let m2 = b.adjoint().matmul(&g2)?.matmul(b)?.symmetrize();
            let m2p = ctx.psd_pow(&m2, 0.5 * q * r)?;
            let rhs = ctx.norm(&m1p.scale_re(1.0 / p).add(&m2p.scale_re(1.0 / q))?)?;
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R10" => {
            let (a, b) = (a()?, b()?);
            let (r, p, q) = (params.r.unwrap(), params.p.unwrap(), params.q.unwrap());
            let (l, tl) = ctx.radius_pow(&b.adjoint().matmul(a)?, r, tol)?;
            let pa = ctx.abs_pow(a, p * r)?.scale_re(1.0 / p);
            let pb = ctx.abs_pow(b, q * r)?.scale_re(1.0 / q);
            let rhs = ctx.norm(&pa.add(&pb)?)?;
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R11" | "R12" => {
            let (a, b) = (a()?, b()?);
            let r = params.r.unwrap();
            let paa = ctx.psd_pow(&a.matmul(&a.adjoint())?, r)?;
            let pbb = ctx.psd_pow(&b.matmul(&b.adjoint())?, r)?;
            let gram_norm = ctx.norm(&paa.add(&pbb)?)?;
            let (wab, tab) = ctx.radius_pow(&a.matmul(&b.adjoint())?, r, tol)?;
            if id == "R11" {
                let (l, tl) = ctx.radius_pow(&b.adjoint().matmul(a)?, r, tol)?;
                let rhs = 0.25 * gram_norm + 0.5 * wab;
                out.push(build("", l, rhs, tl + 0.5 * tab, String::new()));
            } else {
                let lhs = 0.25 * gram_norm + 0.5 * wab;
                out.push(build("", lhs, 0.5 * gram_norm, 0.5 * tab, String::new()));
            }
        }
        "R13" => {
            let t = a()?;
            let (r, alpha) = (params.r.unwrap(), params.alpha.unwrap());
            let (l, tl) = ctx.radius_pow(t, r, tol)?;
            let spec = ctx.abs_spec(t)?;
            let low = spec.recompose_with(|sg| pow_conv(sg, 2.0 * r * alpha));
            let high = spec.recompose_with(|sg| pow_conv(sg, 2.0 * r * (1.0 - alpha)));
            let tilde = ctx.aluthge_alpha(t, alpha)?;
            let (wt, tt) = ctx.radius_pow(&tilde, r, tol)?;
            let rhs = 0.25 * ctx.norm(&low.add(&high)?)? + 0.5 * wt;
            out.push(build("", l, rhs, tl + 0.5 * tt, String::new()));
        }
        "R14" => {
            let (am, xm, bm) = (a()?, x()?, b()?);
            let (r, p, q, alpha) = (
                params.r.unwrap(),
                params.p.unwrap(),
                params.q.unwrap(),
                params.alpha.unwrap(),
            );
            let left = ctx
                .psd_pow(am, alpha)?
                .matmul(xm)?
                .matmul(&ctx.psd_pow(bm, alpha)?)?;
            let (l, tl) = ctx.radius_pow(&left, r, tol)?;
            let inner = ctx
                .psd_pow(am, p * r)?
                .scale_re(1.0 / p)
                .add(&ctx.psd_pow(bm, q * r)?.scale_re(1.0 / q))?;
            let rhs = ctx.norm(xm)?.powf(r) * ctx.norm(&inner)?.powf(alpha);
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R15" => {
            let t = a()?;
            let tilde = ctx.aluthge_alpha(t, 0.5)?;
            let (l, err) = ctx.radius(&tilde, tol)?;
            out.push(build("", l, ctx.norm(t)?, err, String::new()));
        }
        "R16" => {
            let (am, xm, bm) = (a()?, x()?, b()?);
            let (r, alpha) = (params.r.unwrap(), params.alpha.unwrap());
            let left = ctx
                .psd_pow(am, alpha)?
                .matmul(xm)?
                .matmul(&ctx.psd_pow(bm, 1.0 - alpha)?)?;
            let (l, tl) = ctx.radius_pow(&left, r, tol)?;
            let inner = ctx
                .psd_pow(am, r)?
                .scale_re(alpha)
                .add(&ctx.psd_pow(bm, r)?.scale_re(1.0 - alpha))?;
            let rhs = ctx.norm(xm)?.powf(r) * ctx.norm(&inner)?;
            out.push(build("", l, rhs, tl, String::new()));
        }
        "R17" => {
            let (am, xm, bm) = (a()?, x()?, b()?);
            let (r, alpha) = (params.r.unwrap(), params.alpha.unwrap());
            let xr = ctx.norm(xm)?.powf(r);
            let a_r = ctx.psd_pow(am, r)?;
            let b_r = ctx.psd_pow(bm, r)?;
            let mean_pow = a_r.add(&b_r)?.scale_re(0.5);
            let (w_mean, e_mean) = ctx.radius(&mean_pow, tol)?;
            let geo = ctx
                .psd_pow(am, 0.5)?
                .matmul(xm)?
                .matmul(&ctx.psd_pow(bm, 0.5)?)?;
            let (wg, tg) = ctx.radius_pow(&geo, r, tol)?;
            let a_al = ctx.psd_pow(am, alpha)?;
            let a_cal = ctx.psd_pow(am, 1.0 - alpha)?;
            let b_al = ctx.psd_pow(bm, alpha)?;
            let b_cal = ctx.psd_pow(bm, 1.0 - alpha)?;
            let heinz = a_al
                .matmul(xm)?
                .matmul(&b_cal)?
                .add(&a_cal.matmul(xm)?.matmul(&b_al)?)?
                .scale_re(0.5);
            let (wh, th) = ctx.radius_pow(&heinz, r, tol)?;
            out.push(build(
                "geometric-vs-heinz",
                wg,
                wh,
                tg + th,
                "link refuted by counterexample; reported, not gated".to_string(),
            ));
            out.push(build(
                "heinz-vs-mean",
                wh,
                xr * w_mean,
                th + xr * e_mean,
                String::new(),
            ));
            let split = 0.5
                * xr
                * (ctx.norm(&a_r.scale_re(alpha).add(&b_r.scale_re(1.0 - alpha))?)?
                    + ctx.norm(&a_r.scale_re(1.0 - alpha).add(&b_r.scale_re(alpha))?)?);
            out.push(build(
                "mean-vs-split",
                xr * w_mean,
                split,
                xr * e_mean,
                String::new(),
            ));
        }
        "R18" => {
            let (am, bm, xm) = (a()?, b()?, x()?);
            let (l, el) = ctx.radius(xm, tol)?;
            let b_inv = ctx.herm_inverse(bm)?;
            let a_inv = ctx.herm_inverse(am)?;
            let mean = am
                .matmul(xm)?
                .matmul(&b_inv)?
                .add(&a_inv.matmul(xm)?.matmul(bm)?)?
                .scale_re(0.5);
            let (rhs, er) = ctx.radius(&mean, tol)?;
            out.push(build(
                "",
                l,
                rhs,
                el + er,
                "statement refuted on indefinite operands; reported, not gated".to_string(),
            ));
        }
        "R19" => {
            let (sa, sb) = (
                ops.scalar_a.ok_or_else(|| missing(id, "scalar a"))?,
                ops.scalar_b.ok_or_else(|| missing(id, "scalar b"))?,
            );
            let r = params.r.unwrap();
            if let Some(alpha) = params.alpha {
                let geo = sa.powf(alpha) * sb.powf(1.0 - alpha);
                let ari = alpha * sa + (1.0 - alpha) * sb;
                let pmean = (alpha * sa.powf(r) + (1.0 - alpha) * sb.powf(r)).powf(1.0 / r);
                out.push(build("mean-a1", geo, ari, 0.0, String::new()));
                out.push(build("mean-a2", ari, pmean, 0.0, String::new()));
            }
            if let (Some(p), Some(q)) = (params.p, params.q) {
                let prod = sa * sb;
                let young = sa.powf(p) / p + sb.powf(q) / q;
                let young_r = (sa.powf(p * r) / p + sb.powf(q * r) / q).powf(1.0 / r);
                out.push(build("young-b1", prod, young, 0.0, String::new()));
                out.push(build("young-b2", young, young_r, 0.0, String::new()));
                // The printed middle term repeats a in both summands; it is
                // evaluated and logged but never gated.
                let printed = sa.powf(p) / p + sa.powf(q) / q;
                let note = "as-printed middle term a^p/p + a^q/q; informational".to_string();
                out.push(build("young-b1-printed", prod, printed, 0.0, note.clone()));
                out.push(build("young-b2-printed", printed, young_r, 0.0, note));
            }
        }
        "R20" => {
            let am = a()?;
            let xv = ux()?;
            let r = params.r.unwrap();
            let u = rayleigh_re_clamped(am, xv)?;
            let ar = ctx.psd_pow(am, r)?;
            let ur = rayleigh_re_clamped(&ar, xv)?;
            if r >= 1.0 {
                out.push(build("power", u.powf(r), ur, 0.0, String::new()));
            }
            if r <= 1.0 {
                out.push(build("inverse-power", ur, u.powf(r), 0.0, String::new()));
            }
        }
        "R21" => {
            let am = a()?;
            let (xv, yv) = (ux()?, uy()?);
            let axy = am.apply(xv)?.inner(yv).norm();
            if let Some(alpha) = params.alpha {
                let pa = ctx.abs_pow(am, 2.0 * alpha)?;
                let ps = ctx.abs_pow(&am.adjoint(), 2.0 * (1.0 - alpha))?;
                let rhs = rayleigh_re_clamped(&pa, xv)? * rayleigh_re_clamped(&ps, yv)?;
                out.push(build("split", axy * axy, rhs, 0.0, String::new()));
            }
            if let Some(s) = params.s {
                let fa = ctx.abs_pow(am, s)?;
                let gs = ctx.abs_pow(&am.adjoint(), 1.0 - s)?;
                let rhs = fa.apply(xv)?.norm() * gs.apply(yv)?.norm();
                out.push(build("pair", axy, rhs, 0.0, String::new()));
            }
        }
        "R22" => {
            let (av, bv, ev) = (va()?, vb()?, ue()?);
            let ab = av.inner(bv);
            let ae = av.inner(ev);
            let eb = ev.inner(bv);
            let cross = ae * eb;
            let middle = (ab - cross).norm() + cross.norm();
            out.push(build("refine", middle, av.norm() * bv.norm(), 0.0, String::new()));
            out.push(build("dominate", ab.norm(), middle, 0.0, String::new()));
        }
        "R23" => {
            let (xv, yv) = (va()?, vb()?);
            let mut sum = Complex64::new(0.0, 0.0);
            let mut ik = Complex64::new(1.0, 0.0);
            for _ in 0..4 {
                let shifted = xv.add(&yv.scale(ik));
                sum += ik * shifted.norm().powi(2);
                ik *= Complex64::new(0.0, 1.0);
            }
            let residual = (xv.inner(yv) - sum * 0.25).norm();
            out.push(build("", residual, 0.0, 0.0, String::new()));
        }
        "R24" => {
            let am = a()?;
            let xv = ux()?;
            let r = params.r.unwrap();
            let axx = am.apply(xv)?.inner(xv).norm();
            let ax = am.apply(xv)?.norm();
            let asx = am.adjoint().apply(xv)?.norm();
            let a2xx = am.matmul(am)?.apply(xv)?.inner(xv).norm();
            let rhs = 0.5 * (ax.powf(r) * asx.powf(r) + a2xx.powf(r));
            out.push(build("", axx.powf(2.0 * r), rhs, 0.0, String::new()));
        }
        "R25" => {
            let (am, xm, bm) = (a()?, x()?, b()?);
            let xv = ux()?;
            let (r, alpha) = (params.r.unwrap(), params.alpha.unwrap());
            let prod = ctx
                .psd_pow(am, alpha)?
                .matmul(xm)?
                .matmul(&ctx.psd_pow(bm, 1.0 - alpha)?)?;
            let lhs = prod.apply(xv)?.inner(xv).norm().powf(r);
            let inner = ctx
                .psd_pow(am, r)?
                .scale_re(alpha)
                .add(&ctx.psd_pow(bm, r)?.scale_re(1.0 - alpha))?;
            let rhs = ctx.norm(xm)?.powf(r) * rayleigh_re_clamped(&inner, xv)?;
            out.push(build("", lhs, rhs, 0.0, String::new()));
        }
        "R26" => {
            let (am, xm) = (a()?, x()?);
            let note = "identity holds on the self-adjoint slice; for general X \
                        the dilation's radius is ‖X‖"
                .to_string();
            let hat_x = xm.block_off_diagonal();
            let (w_hat, e1) = ctx.radius(&hat_x, tol)?;
            let (w_x, e2) = ctx.radius(xm, tol)?;
            out.push(build("dilation", (w_hat - w_x).abs(), 0.0, e1 + e2, note.clone()));

            let a_inv = ctx.herm_inverse(am)?;
            let hat_a = ComplexMatrix::block_diagonal(am, am)?;
            let hat_a_inv = ComplexMatrix::block_diagonal(&a_inv, &a_inv)?;
            let hat_mean = hat_a
                .matmul(&hat_x)?
                .matmul(&hat_a_inv)?
                .add(&hat_a_inv.matmul(&hat_x)?.matmul(&hat_a)?)?
                .scale_re(0.5);
            let (w_block, e3) = ctx.radius(&hat_mean, tol)?;
            // the block mean reduces to ½·w(AXA⁻¹ + A⁻¹XA)
            let plain = am
                .matmul(xm)?
                .matmul(&a_inv)?
                .add(&a_inv.matmul(xm)?.matmul(am)?)?;
            let (w_plain, e4) = ctx.radius(&plain, tol)?;
            out.push(build(
                "similarity",
                (w_block - 0.5 * w_plain).abs(),
                0.0,
                e3 + 0.5 * e4,
                note,
            ));
        }
        other => {
            return Err(Error::UnknownChecker { id: other.into() });
        }
    }
    for r in &out {
        if !r.lhs.is_finite() || !r.rhs.is_finite() {
            return Err(Error::NonFinite {
                context: "check result",
            });
        }
    }
    Ok(out)
}

/// Re(⟨Mx, x⟩) clamped at zero; used where the operand is PSD so the true
/// value is nonnegative and the imaginary part is roundoff.
fn rayleigh_re_clamped(m: &ComplexMatrix, x: &Vector) -> Result<f64> {
    Ok(m.apply(x)?.inner(x).re.max(0.0))
}

/// Validate hypotheses, then evaluate. Multi-link entries return one result
/// per link.
pub fn check(id: &str, ops: &Operands, params: &CheckParams, tol: f64) -> Result<Vec<CheckResult>> {
    let mut ctx = CheckContext::new();
    check_with(&mut ctx, id, ops, params, tol)
}

/// `check` against a shared context (cache reuse across entries).
pub fn check_with(
    ctx: &mut CheckContext,
    id: &str,
    ops: &Operands,
    params: &CheckParams,
    tol: f64,
) -> Result<Vec<CheckResult>> {
    let violations = applicable(id, ops, params)?;
    if !violations.is_empty() {
        return Err(Error::PreconditionViolated {
            id: lookup(id).map(|d| d.id.to_string()).unwrap_or_else(|| id.to_string()),
            violations,
        });
    }
    evaluate(ctx, id, ops, params, tol)
}

/// Outcome of a full registry pass over one operand bundle.
#[derive(Debug, Default)]
pub struct CheckRun {
    pub results: Vec<CheckResult>,
    /// One line per skipped (entry, grid point): hypothesis not met.
    pub skipped: Vec<String>,
}

/// Run every registry entry whose preconditions the bundle satisfies over
/// the full parameter grid, in registry order then grid order. Inapplicable
/// combinations are skipped and recorded; evaluation errors are recorded the
/// same way rather than aborting the pass.
pub fn check_all(
    ops: &Operands,
    grid: &ParamGrid,
    tol: f64,
    filter: Option<&[String]>,
) -> CheckRun {
    let mut ctx = CheckContext::new();
    let mut run = CheckRun::default();
    for def in registry() {
        if let Some(allow) = filter {
            if !allow
                .iter()
                .any(|f| f.eq_ignore_ascii_case(def.id) || f == def.alias)
            {
                continue;
            }
        }
        for params in grid_for(def.id, grid) {
            match applicable(def.id, ops, &params) {
                Ok(v) if v.is_empty() => match evaluate(&mut ctx, def.id, ops, &params, tol) {
                    Ok(mut results) => run.results.append(&mut results),
                    Err(e) => run
                        .skipped
                        .push(format!("{}[{}]: evaluation error: {e}", def.id, params.label())),
                },
                Ok(v) => run.skipped.push(format!(
                    "{}[{}]: {}",
                    def.id,
                    params.label(),
                    v.join("; ")
                )),
                Err(e) => run
                    .skipped
                    .push(format!("{}[{}]: {e}", def.id, params.label())),
            }
        }
    }
    run
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng::{random_unit_vector, RngStream};
    use crate::harness::{generate, OperatorClass};

    fn jordan2() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn power_refinement_on_the_jordan_block() {
        // w(A) = 1/2 (dense oracle), A² = 0, ‖A‖ = 1: lhs 0.25, rhs 0.5
        let ops = Operands::with_a(jordan2());
        let res = check("R05", &ops, &CheckParams::with_r(1.0), DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 1);
        assert!((res[0].lhs - 0.25).abs() < 1e-7);
        assert!((res[0].rhs - 0.5).abs() < 1e-7);
        assert!(res[0].satisfied);
    }

    #[test]
    fn product_split_equality_at_identity() {
        let mut ops = Operands::with_a(ComplexMatrix::identity(2));
        ops.b = Some(ComplexMatrix::identity(2));
        let res = check("R11", &ops, &CheckParams::with_r(1.0), DEFAULT_TOL).unwrap();
        assert!((res[0].lhs - 1.0).abs() < 1e-10);
        assert!((res[0].rhs - 1.0).abs() < 1e-10);
        assert!(res[0].slack.abs() <= 1e-10);
        assert!(res[0].satisfied);
    }

    #[test]
    fn balanced_product_fixed_case() {
        // A = B = I, X = Jordan, α = 1, r = 2, p = q = 2: lhs = w²(X) = 1/4, rhs = 1
        let mut ops = Operands::with_a(ComplexMatrix::identity(2));
        ops.b = Some(ComplexMatrix::identity(2));
        ops.x = Some(jordan2());
        let params = CheckParams {
            r: Some(2.0),
            p: Some(2.0),
            q: Some(2.0),
            alpha: Some(1.0),
            ..CheckParams::default()
        };
        let res = check("R14", &ops, &params, DEFAULT_TOL).unwrap();
        assert!((res[0].lhs - 0.25).abs() < 1e-7);
        assert!((res[0].rhs - 1.0).abs() < 1e-10);
        assert!(res[0].satisfied);
    }

    #[test]
    fn heinz_chain_equalities_at_identity_with_hermitian_x() {
        let mut stream = RngStream::new(21);
        let x = generate(OperatorClass::Hermitian, 3, &mut stream).unwrap();
        let mut ops = Operands::with_a(ComplexMatrix::identity(3));
        ops.b = Some(ComplexMatrix::identity(3));
        ops.x = Some(x);
        let params = CheckParams {
            r: Some(2.0),
            alpha: Some(0.25),
            ..CheckParams::default()
        };
        let res = check("R17", &ops, &params, DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 3);
        for link in &res {
            assert!(link.satisfied, "{} violated", link.display_id());
            assert!(
                link.slack.abs() <= 1e-8 * link.rhs.abs().max(1.0),
                "{} slack {} not an equality",
                link.display_id(),
                link.slack
            );
        }
    }

    #[test]
    fn mccarthy_fixed_case() {
        // A = diag(1,4), x = (e1+e2)/√2, r = 2: ⟨Ax,x⟩ = 2.5 → lhs 6.25, rhs 8.5
        let mut ops = Operands::with_a(ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, 4.0]).unwrap());
        ops.unit_x = Some(Vector::from_real(&[
            std::f64::consts::FRAC_1_SQRT_2,
            std::f64::consts::FRAC_1_SQRT_2,
        ]));
        let res = check("R20", &ops, &CheckParams::with_r(2.0), DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].link, "power");
        assert!((res[0].lhs - 6.25).abs() < 1e-10);
        assert!((res[0].rhs - 8.5).abs() < 1e-10);
        // r = 1 produces both directions as equalities
        let res = check("R20", &ops, &CheckParams::with_r(1.0), DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 2);
        for r in res {
            assert!(r.slack.abs() < 1e-10);
        }
    }

    #[test]
    fn polarization_is_an_identity() {
        let ops = Operands {
            vec_a: Some(Vector::basis(2, 0)),
            vec_b: Some(Vector::basis(2, 1)),
            ..Operands::default()
        };
        let res = check("R23", &ops, &CheckParams::none(), DEFAULT_TOL).unwrap();
        assert!(res[0].lhs <= 1e-12);
        assert!(res[0].satisfied);
    }

    #[test]
    fn precondition_violation_reports_the_gate() {
        let mut ops = Operands::with_a(ComplexMatrix::identity(2));
        ops.b = Some(ComplexMatrix::identity(2));
        ops.x = Some(jordan2());
        let params = CheckParams {
            r: Some(1.5),
            alpha: Some(0.5),
            ..CheckParams::default()
        };
        match check("R16", &ops, &params, DEFAULT_TOL) {
            Err(Error::PreconditionViolated { id, violations }) => {
                assert_eq!(id, "R16");
                assert!(violations.iter().any(|m| m.contains("r ≥ 2")));
            }
            other => panic!("expected precondition violation, got {other:?}"),
        }
    }

    #[test]
    fn similarity_mean_counterexample() {
        // A = diag(1, −1), B = I, X = [[1,1],[1,1]]: w(X) = 2 but the
        // similarity mean is nilpotent with radius 1. The statement fails on
        // indefinite self-adjoint operands, which is why R18 is not gated.
        let mut ops = Operands::with_a(ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap());
        ops.b = Some(ComplexMatrix::identity(2));
        ops.x = Some(ComplexMatrix::from_real(2, &[1.0, 1.0, 1.0, 1.0]).unwrap());
        let res = check("R18", &ops, &CheckParams::none(), DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 1);
        assert!((res[0].lhs - 2.0).abs() < 1e-7, "w(X) = 2");
        assert!((res[0].rhs - 1.0).abs() < 1e-7, "w(mean) = 1");
        assert!(!res[0].satisfied, "the counterexample must register");
        assert!(!crate::inequalities::registry::is_gating("R18", ""));
    }

    /// Frozen 3×3 witness (α = 0.1) violating the Heinz chain's first link.
    /// Discovered by the stress falsifier and verified through three
    /// independent radius routes: the certified solver at 1e-10 tolerance,
    /// a 400 000-angle dense-grid sweep, and 20 000-sample Rayleigh probing.
    /// The certified lower bound of w(A^{1/2}XB^{1/2}) ≈ 59.1572 exceeds the
    /// certified upper bound of w(H_{0.1}) ≈ 58.9384 by ≈ 0.2188.
    fn heinz_witness() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
        let a = ComplexMatrix::from_json(
            r#"{"n":3,"entries":[[[3.1602539141526544,0.0],[-8.144900771409132,-1.8067062407157066],[1.6977386598143636,2.3817432243913874]],[[-8.144900771409132,1.8067062407157066],[26.25591007558023,0.0],[-5.484045184395326,-6.899289952992769]],[[1.6977386598143636,-2.3817432243913874],[-5.484045184395326,6.899289952992769],[3.4733972525881183,0.0]]]}"#,
        )
        .unwrap();
        let b = ComplexMatrix::from_json(
            r#"{"n":3,"entries":[[[12.120779446813057,0.0],[-13.553235915460679,-7.837730404406127],[17.733106834314682,1.641879612610296]],[[-13.553235915460679,7.837730404406127],[21.572094637883243,0.0],[-21.981795362407887,9.909686997805473]],[[17.733106834314682,-1.641879612610296],[-21.981795362407887,-9.909686997805473],[27.139355465301175,0.0]]]}"#,
        )
        .unwrap();
        let x = ComplexMatrix::from_json(
            r#"{"n":3,"entries":[[[0.0,0.0],[-0.6738266184154055,-0.40324495787552966],[-0.49685380583010735,0.7637409133434522]],[[0.0,0.0],[0.0,0.0],[-1.9842625091750836,1.7389528302068928]],[[0.0,0.0],[0.0,0.0],[0.0,0.0]]]}"#,
        )
        .unwrap();
        (a, b, x)
    }

    #[test]
    fn heinz_first_link_counterexample() {
        let (a, b, x) = heinz_witness();
        let mut ops = Operands::with_a(a);
        ops.b = Some(b);
        ops.x = Some(x);
        let params = CheckParams {
            r: Some(2.0),
            alpha: Some(0.1),
            ..CheckParams::default()
        };
        let res = check("R17", &ops, &params, DEFAULT_TOL).unwrap();
        let first = res.iter().find(|r| r.link == "geometric-vs-heinz").unwrap();
        assert!(
            !first.satisfied,
            "the witness must register: slack {}",
            first.slack
        );
        assert!((first.lhs.sqrt() - 59.157158).abs() < 1e-4);
        assert!((first.rhs.sqrt() - 58.938364).abs() < 1e-4);
        assert!(!crate::inequalities::registry::is_gating("R17", "geometric-vs-heinz"));
        // the two proven links of the chain still hold here
        for link in ["heinz-vs-mean", "mean-vs-split"] {
            let r = res.iter().find(|r| r.link == link).unwrap();
            assert!(r.satisfied, "{link} unexpectedly violated");
        }
    }

    #[test]
    fn similarity_mean_positive_definite_counterexample() {
        // Substituting Ã = A^{α−1/2}, B̃ = B^{α−1/2}, X̃ = A^{1/2}XB^{1/2}
        // maps the Heinz witness onto a violation of R18 with positive
        // definite operands: the mean becomes H_{0.1} and w(X̃) > w(H_{0.1}).
        let (a, b, x) = heinz_witness();
        let sa = crate::linalg::psd_spectrum(&a).unwrap();
        let sb = crate::linalg::psd_spectrum(&b).unwrap();
        let a_tilde = sa.recompose_with(|l| l.powf(-0.4));
        let b_tilde = sb.recompose_with(|l| l.powf(-0.4));
        let x_tilde = sa
            .recompose_with(|l| l.sqrt())
            .matmul(&x)
            .unwrap()
            .matmul(&sb.recompose_with(|l| l.sqrt()))
            .unwrap();
        let flags = crate::linalg::classify(&a_tilde, 1e-10).unwrap();
        assert!(flags.hermitian && flags.psd && flags.invertible);

        let mut ops = Operands::with_a(a_tilde);
        ops.b = Some(b_tilde);
        ops.x = Some(x_tilde);
        let res = check("R18", &ops, &CheckParams::none(), DEFAULT_TOL).unwrap();
        assert!(
            !res[0].satisfied,
            "positive-definite witness must register: lhs {} rhs {}",
            res[0].lhs, res[0].rhs
        );
        assert!(res[0].slack < -0.1, "gap should be macroscopic");
    }

    #[test]
    fn block_dilation_identities_on_self_adjoint_slice() {
        let mut stream = RngStream::new(33);
        let a = generate(OperatorClass::HermitianInvertible, 3, &mut stream).unwrap();
        let x = generate(OperatorClass::Hermitian, 3, &mut stream).unwrap();
        let mut ops = Operands::with_a(a);
        ops.x = Some(x);
        let res = check("R26", &ops, &CheckParams::none(), DEFAULT_TOL).unwrap();
        assert_eq!(res.len(), 2);
        for r in &res {
            assert!(r.satisfied, "{} residual {}", r.display_id(), r.lhs);
        }
    }

    #[test]
    fn chain_consistency_of_product_bounds() {
        // composing R11 and R12 on the same operands reproduces the product
        // verdict: lhs(R11) ≤ rhs(R12) within combined tolerance
        let mut stream = RngStream::new(61);
        let mut ctx = crate::inequalities::CheckContext::new();
        for trial in 0..30 {
            let n = 2 + trial % 6;
            let mut ops = Operands::with_a(generate(OperatorClass::Ginibre, n, &mut stream).unwrap());
            ops.b = Some(generate(OperatorClass::Ginibre, n, &mut stream).unwrap());
            for r in [1.0, 2.0] {
                let params = CheckParams::with_r(r);
                let r11 = check_with(&mut ctx, "R11", &ops, &params, DEFAULT_TOL).unwrap();
                let r12 = check_with(&mut ctx, "R12", &ops, &params, DEFAULT_TOL).unwrap();
                assert!((r11[0].rhs - r12[0].lhs).abs() <= 1e-12 * r11[0].rhs.abs().max(1.0));
                assert!(
                    r11[0].lhs <= r12[0].rhs + r11[0].tolerance + r12[0].tolerance,
                    "chain broken at trial {trial}, r = {r}"
                );
            }
        }
    }

    #[test]
    fn alpha_refinement_bound_tightest_at_half_on_normal_operands() {
        // on normal A the rhs of R07 at α = 1/2 never exceeds the boundary
        // values α ∈ {0, 1}
        let mut stream = RngStream::new(63);
        let mut ctx = crate::inequalities::CheckContext::new();
        for trial in 0..20 {
            let n = 2 + trial % 5;
            let ops = Operands::with_a(generate(OperatorClass::Normal, n, &mut stream).unwrap());
            for r in [1.0, 2.0] {
                let rhs_at = |ctx: &mut crate::inequalities::CheckContext, alpha: f64| {
                    let params = CheckParams {
                        r: Some(r),
                        alpha: Some(alpha),
                        ..CheckParams::default()
                    };
                    check_with(ctx, "R07", &ops, &params, DEFAULT_TOL).unwrap()[0].rhs
                };
                let mid = rhs_at(&mut ctx, 0.5);
                for boundary in [0.0, 1.0] {
                    let edge = rhs_at(&mut ctx, boundary);
                    assert!(
                        mid <= edge + 1e-8 * edge.max(1.0),
                        "rhs(1/2) = {mid} above rhs({boundary}) = {edge} at trial {trial}"
                    );
                }
            }
        }
    }

    #[test]
    fn check_all_on_a_bare_identity_bundle() {
        let ops = Operands::with_a(ComplexMatrix::identity(3));
        let run = check_all(&ops, &ParamGrid::default(), DEFAULT_TOL, None);
        let ids: std::collections::BTreeSet<_> =
            run.results.iter().map(|r| r.checker_id.clone()).collect();
        for want in ["R01", "R02", "R03", "R05"] {
            assert!(ids.contains(want), "{want} missing");
        }
        for r in &run.results {
            assert!(r.satisfied, "{} violated on the identity", r.display_id());
        }
    }

    #[test]
    fn scalar_young_printed_variant_is_informational() {
        let ops = Operands {
            scalar_a: Some(0.1),
            scalar_b: Some(10.0),
            ..Operands::default()
        };
        let params = CheckParams {
            r: Some(1.0),
            p: Some(2.0),
            q: Some(2.0),
            ..CheckParams::default()
        };
        let res = check("R19", &ops, &params, DEFAULT_TOL).unwrap();
        let printed: Vec<_> = res.iter().filter(|r| r.link.ends_with("-printed")).collect();
        assert_eq!(printed.len(), 2);
        // ab = 1 but a²/2 + a²/2 = 0.01: the printed reading fails here
        let b1p = printed.iter().find(|r| r.link == "young-b1-printed").unwrap();
        assert!(!b1p.satisfied);
        // the corrected reading holds
        let b1 = res.iter().find(|r| r.link == "young-b1").unwrap();
        assert!(b1.satisfied);
    }

    #[test]
    fn check_all_produces_expected_families() {
        let mut stream = RngStream::new(55);
        let n = 3;
        // rank-deficient PSD: keeps the positivity hypotheses while failing
        // the invertibility gate of R18/R26
        let mut ops =
            Operands::with_a(generate(OperatorClass::RankDeficient, n, &mut stream).unwrap());
        ops.b = Some(generate(OperatorClass::RankDeficient, n, &mut stream).unwrap());
        ops.x = Some(generate(OperatorClass::Ginibre, n, &mut stream).unwrap());
        ops.unit_x = Some(random_unit_vector(n, &mut stream));
        ops.unit_y = Some(random_unit_vector(n, &mut stream));
        ops.unit_e = Some(random_unit_vector(n, &mut stream));
        ops.vec_a = Some(random_unit_vector(n, &mut stream).scale(Complex64::new(2.0, 0.0)));
        ops.vec_b = Some(random_unit_vector(n, &mut stream));
        ops.scalar_a = Some(1.7);
        ops.scalar_b = Some(0.3);
        let run = check_all(&ops, &ParamGrid::default(), DEFAULT_TOL, None);
        let ids: std::collections::BTreeSet<_> =
            run.results.iter().map(|r| r.checker_id.clone()).collect();
        for want in ["R01", "R02", "R14", "R16", "R17", "R19", "R20", "R23", "R25"] {
            assert!(ids.contains(want), "{want} missing from {ids:?}");
        }
        // R18/R26 need invertible self-adjoint operands: skipped here
        assert!(!ids.contains("R18"));
        assert!(run.skipped.iter().any(|s| s.starts_with("R18")));
        // everything asserted must hold on PSD operands
        for r in &run.results {
            if crate::inequalities::registry::is_gating(&r.checker_id, &r.link) {
                assert!(r.satisfied, "{} violated: {:?}", r.display_id(), r);
            }
        }
        // empty grid produces nothing
        let empty = ParamGrid {
            rs: vec![],
            pqs: vec![],
            alphas: vec![],
            ss: vec![],
            n_powers: vec![],
            r_fractions: vec![],
        };
        let run = check_all(&ops, &empty, DEFAULT_TOL, Some(&["R02".to_string()]));
        assert!(run.results.is_empty());
    }
}
