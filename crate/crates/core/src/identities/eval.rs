//! Left- and right-hand sides of the catalog identities.

use super::{Identity, IdentityParams, Param, Variant, WeightRange};
use crate::error::{Error, ErrorTrap, Result};
use crate::kernel::{
    eval_auto, eval_auto_with_floor, kernel_scaled, kernel_scaled_with_floor, KernelParams, NESTED_REL_FLOOR,
};
use crate::quad::{convolve, integrate_finite, integrate_semi_infinite, QuadratureSpec};
use crate::specfun::{
    digamma, erf, gamma, mittag_leffler, recip_gamma, volterra_mu, volterra_nu, volterra_nu_alpha, EULER_GAMMA,
};

/// The weight g(u) of an identity, which fixes both of its sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Form {
    Moment,
    Indicator,
    Ramp,
    ShiftedPower,
    Exponential,
    ShiftedRamp,
    ShiftedExponential,
    Log,
    PowerLog,
    Sin,
    Sinh,
    Cos,
    Cosh,
    SinSinh,
    CosCosh,
    MittagLeffler,
    Erf,
    Volterra,
    VolterraAlpha,
    VolterraMu,
    VolterraRecurrence,
    SelfConvolution,
    MixedConvolution,
    ScaledConvolution,
}

/// t^{a-1}/Γ(a), zero at the poles of Γ(a).
fn pw(t: f64, a: f64) -> f64 {
    t.powf(a - 1.0) * recip_gamma(a)
}

fn kp(nu: f64, mu: f64) -> Result<KernelParams> {
    KernelParams::new(nu, mu)
}

/// E_{α,β}(z). The series sums in double-double, so it stays usable until
/// the cancellation loss nears 1e16.
fn ml(alpha: f64, beta: f64, z: f64) -> Result<f64> {
    let r = mittag_leffler(alpha, beta, z)?;
    if r.max_term > 1e14 * r.value.abs() {
        return Err(Error::Cancellation(format!(
            "mittag_leffler({alpha}, {beta}, {z}): terms reach {:e}",
            r.max_term
        )));
    }
    Ok(r.value)
}

/// (f ★ g)(t) for fallible factors with power behaviour x^{sf}, x^{sg} at
/// the origin.
fn conv(
    f: impl Fn(f64) -> Result<f64>,
    g: impl Fn(f64) -> Result<f64>,
    t: f64,
    sf: f64,
    sg: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let trap = ErrorTrap::new();
    let r = convolve(|x| trap.take(|| f(x)), |x| trap.take(|| g(x)), t, sf, sg, spec);
    Ok(trap.check(r)?.require("identity convolution")?.value)
}

/// K(x, u) as a convolution factor; nodes may round onto x = 0, where the
/// kernel vanishes.
fn scaled_factor(k: KernelParams, x: f64, u: f64, spec: &QuadratureSpec, floor: f64) -> Result<f64> {
    if x == 0.0 {
        Ok(0.0)
    } else if u == 1.0 {
        eval_auto_with_floor(k, x, spec, floor).map(|e| e.value)
    } else {
        kernel_scaled_with_floor(k, x, u, spec, floor)
    }
}

/// x^{a-1}/Γ(a) as a convolution factor with a > 0.
fn power(a: f64) -> Result<impl Fn(f64) -> Result<f64>> {
    if !(a > 0.0) {
        return Err(Error::domain(format!("power factor t^(a-1)/Gamma(a) needs a > 0, got {a}")));
    }
    let r = recip_gamma(a);
    Ok(move |x: f64| Ok(x.powf(a - 1.0) * r))
}

fn weight(identity: &Identity, p: &IdentityParams, u: f64) -> Result<f64> {
    let id = identity.id;
    let get = |q: Param| p.require(q, id);
    Ok(match identity.form {
        Form::Moment => u.powf(get(Param::Lambda)?),
        Form::Indicator => 1.0,
        Form::Ramp => 1.0 - u,
        Form::ShiftedPower => (u - get(Param::Lambda)?).powf(p.mu) * recip_gamma(p.mu + 1.0),
        Form::Exponential => (-get(Param::Alpha)? * u).exp(),
        Form::ShiftedRamp => -(-(u - get(Param::Lambda)?)).exp_m1(),
        Form::ShiftedExponential => (-(u - get(Param::Lambda)?)).exp(),
        Form::Log => u.ln(),
        Form::PowerLog => u.powf(get(Param::Lambda)? - 1.0) * u.ln(),
        Form::Sin => (get(Param::Lambda)? * u).sin(),
        Form::Sinh => (get(Param::Lambda)? * u).sinh(),
        Form::Cos => (get(Param::Lambda)? * u).cos(),
        Form::Cosh => (get(Param::Lambda)? * u).cosh(),
        Form::SinSinh => {
            let x = get(Param::Lambda)? * u;
            x.sin() * x.sinh()
        }
        Form::CosCosh => {
            let x = get(Param::Lambda)? * u;
            x.cos() * x.cosh()
        }
        Form::MittagLeffler => {
            let (a, b, l) = (get(Param::Alpha)?, get(Param::Beta)?, get(Param::Lambda)?);
            u.powf(b - 1.0) * ml(a, b, l * u.powf(a))?
        }
        Form::Erf => erf(get(Param::Lambda)? / (2.0 * u.sqrt())),
        Form::Volterra => volterra_nu(get(Param::Lambda)? * u)?,
        Form::VolterraAlpha => volterra_nu_alpha(get(Param::Lambda)? * u, get(Param::Rho)?)?,
        Form::VolterraMu => volterra_mu(get(Param::Lambda)? * u, get(Param::Xi)?, get(Param::Rho)?)?,
        Form::VolterraRecurrence | Form::SelfConvolution | Form::MixedConvolution | Form::ScaledConvolution => {
            return Err(Error::domain(format!("{id} has no Efros weight")))
        }
    })
}

/// ∫ g(u) K(t, u) du over the identity's range, or for the identities
/// without a weight, their left side as written.
pub fn efros_lhs(identity: &Identity, p: &IdentityParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    identity.check_domain(p, t)?;
    spec.validate()?;
    let tag = |e: Error| Error::Identity { id: identity.id.to_string(), source: Box::new(e) };
    if spec.rel_tol < NESTED_REL_FLOOR && identity.form != Form::VolterraRecurrence {
        return Err(tag(Error::BelowFloor {
            what: "a kernel inside an integral".into(),
            requested: spec.rel_tol,
            floor: NESTED_REL_FLOOR,
        }));
    }
    let floor = spec.abs_tol;
    match identity.form {
        Form::VolterraRecurrence => {
            let rho = p.require(Param::Rho, identity.id)?;
            return Ok(t * volterra_nu_alpha(t, rho).map_err(tag)?);
        }
        Form::SelfConvolution | Form::MixedConvolution | Form::ScaledConvolution => {
            let nu = p.nu;
            let (m2, a, b) = match identity.form {
                Form::SelfConvolution => (p.mu, 1.0, 1.0),
                Form::MixedConvolution => (p.require(Param::Rho, identity.id)?, 1.0, 1.0),
                _ => (
                    p.require(Param::Rho, identity.id)?,
                    p.require(Param::Alpha, identity.id)?,
                    p.require(Param::Beta, identity.id)?,
                ),
            };
            let (k1, k2) = (kp(nu, p.mu)?, kp(nu, m2)?);
            let factor = move |k: KernelParams, u: f64| {
                move |x: f64| scaled_factor(k, x, u, spec, floor)
            };
            return conv(factor(k1, a), factor(k2, b), t, 0.0, 0.0, spec).map_err(tag);
        }
        _ => {}
    }
    let k = kp(p.nu, p.mu)?;
    let trap = ErrorTrap::new();
    let integrand = |u: f64| -> f64 {
        let k0 = trap.take(|| kernel_scaled_with_floor(k, t, u, spec, floor));
        if k0 == 0.0 {
            return 0.0;
        }
        let g = trap.take(|| weight(identity, p, u));
        if g.abs() > 1.0 {
            // A large weight needs the kernel to a correspondingly finer floor.
            g * trap.take(|| kernel_scaled_with_floor(k, t, u, spec, floor / g.abs()))
        } else {
            g * k0
        }
    };
    let lambda = || p.require(Param::Lambda, identity.id);
    let r = match identity.range {
        WeightRange::Positive => integrate_semi_infinite(integrand, 0.0, spec),
        WeightRange::AboveLambda => integrate_semi_infinite(integrand, lambda()?, spec),
        WeightRange::BelowLambda => integrate_finite(integrand, 0.0, lambda()?, spec),
        WeightRange::Unit => integrate_finite(integrand, 0.0, 1.0, spec),
        WeightRange::None => unreachable!("forms without a weight returned above"),
    };
    let r = trap.check(r).map_err(tag)?;
    Ok(r.require(format!("{} left side", identity.id)).map_err(tag)?.value)
}

/// The identity's right side in its standard form.
pub fn rhs_value(identity: &Identity, p: &IdentityParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    rhs_variant(identity, Variant::Standard, p, t, spec)
}

/// The identity's right side in the requested form.
pub fn rhs_variant(
    identity: &Identity,
    variant: Variant,
    p: &IdentityParams,
    t: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    identity.check_domain(p, t)?;
    spec.validate()?;
    if !identity.variants.contains(&variant) {
        return Err(Error::domain(format!("{} has no {} variant", identity.id, variant.as_str())));
    }
    let id = identity.id;
    rhs_inner(identity.form, variant, p, t, spec, id)
        .map_err(|e| Error::Identity { id: id.to_string(), source: Box::new(e) })
}

fn rhs_inner(
    form: Form,
    variant: Variant,
    p: &IdentityParams,
    t: f64,
    spec: &QuadratureSpec,
    id: &str,
) -> Result<f64> {
    let (nu, mu) = (p.nu, p.mu);
    let get = |q: Param| p.require(q, id);
    let printed = variant == Variant::Printed;
    let floor = spec.abs_tol;
    let kernel = |m: f64, x: f64| -> Result<f64> { Ok(eval_auto(kp(nu, m)?, x, spec)?.value) };
    // E_ν(-x^ν), the Mittag-Leffler factor of the shifted weights.
    let ml_nu = move |x: f64| ml(nu, 1.0, -x.powf(nu));
    Ok(match form {
        Form::Moment => {
            let l = get(Param::Lambda)?;
            gamma(l + 1.0)? * pw(t, (l + 1.0) * nu + mu)
        }
        Form::Indicator => pw(t, nu + mu) - kernel_scaled(kp(nu, nu + mu)?, t, get(Param::Lambda)?, spec)?,
        Form::Ramp => {
            let sign = if printed { -1.0 } else { 1.0 };
            sign * (pw(t, nu + mu) - pw(t, 2.0 * nu + mu)) + kernel(2.0 * nu + mu, t)?
        }
        Form::ShiftedPower => {
            let v = kernel_scaled(kp(nu, nu + nu * mu + mu)?, t, get(Param::Lambda)?, spec)?;
            // Without 1/Γ(μ+1) in the weight.
            if printed {
                v * recip_gamma(mu + 1.0)
            } else {
                v
            }
        }
        Form::Exponential => {
            let a = get(Param::Alpha)?;
            conv(power(nu + mu - 1.0)?, |x| ml(nu, 1.0, -a * x.powf(nu)), t, nu + mu - 2.0, 0.0, spec)?
        }
        Form::ShiftedRamp => {
            let l = get(Param::Lambda)?;
            let k = kp(nu, 2.0 * nu + mu - 1.0)?;
            if printed {
                let a = l.powf(1.0 / nu);
                let inner = |x: f64| scaled_factor(k, x / a, 1.0, spec, floor);
                l.powf((nu + mu - 1.0) / nu) * conv(ml_nu, inner, t, 0.0, 0.0, spec)?
            } else {
                conv(ml_nu, |x| scaled_factor(k, x, l, spec, floor), t, 0.0, 0.0, spec)?
            }
        }
        Form::ShiftedExponential => {
            let l = get(Param::Lambda)?;
            let k = kp(nu, nu + mu - 1.0)?;
            conv(ml_nu, |x| scaled_factor(k, x, l, spec, floor), t, 0.0, 0.0, spec)?
        }
        Form::Log => {
            let a = nu + mu - 1.0;
            (nu - 1.0) * EULER_GAMMA * pw(t, nu + mu) + nu * conv(power(a)?, |x| Ok(x.ln()), t, a - 1.0, 0.0, spec)?
        }
        Form::PowerLog => {
            let l = get(Param::Lambda)?;
            let a = l * nu + mu - 1.0;
            let g = gamma(l)?;
            let log_factor = if printed { nu } else { 1.0 };
            g * (digamma(l)? + EULER_GAMMA * nu) * pw(t, l * nu + mu)
                + g * nu * log_factor * conv(power(a)?, |x| Ok(x.ln()), t, a - 1.0, 0.0, spec)?
        }
        Form::Sin | Form::Sinh => {
            let l = get(Param::Lambda)?;
            let s = if form == Form::Sin { -1.0 } else { 1.0 };
            let a = 2.0 * nu + mu - 1.0;
            l * conv(power(a)?, |x| ml(2.0 * nu, 1.0, s * l * l * x.powf(2.0 * nu)), t, a - 1.0, 0.0, spec)?
        }
        Form::Cos | Form::Cosh => {
            let l = get(Param::Lambda)?;
            let s = if form == Form::Cos { -1.0 } else { 1.0 };
            let a = nu + mu - 1.0;
            conv(power(a)?, |x| ml(2.0 * nu, 1.0, s * l * l * x.powf(2.0 * nu)), t, a - 1.0, 0.0, spec)?
        }
        Form::SinSinh | Form::CosCosh => {
            let l = get(Param::Lambda)?;
            let c = 4.0 * l.powi(4);
            let (a, pre) = if form == Form::SinSinh { (3.0 * nu + mu - 1.0, 2.0 * l * l) } else { (nu + mu - 1.0, 1.0) };
            pre * conv(power(a)?, |x| ml(4.0 * nu, 1.0, -c * x.powf(4.0 * nu)), t, a - 1.0, 0.0, spec)?
        }
        Form::MittagLeffler => {
            let (a, b, l) = (get(Param::Alpha)?, get(Param::Beta)?, get(Param::Lambda)?);
            let z = if printed { l * t.powf(a) } else { l * t.powf(a * nu) };
            t.powf(b * nu + mu - 1.0) * ml(a * nu, b * nu + mu, z)?
        }
        Form::Erf => {
            let l = get(Param::Lambda)?;
            let half = nu / 2.0;
            match variant {
                Variant::Standard => pw(t, nu + mu) - kernel_scaled(kp(half, nu + mu)?, t, l, spec)?,
                Variant::Alternate => pw(t, mu) - kernel_scaled(kp(half, mu)?, t, l, spec)?,
                Variant::Printed => {
                    let x = t.powf(half) / l.powf(2.0 / nu);
                    pw(t, mu) - l.powf(2.0 * (mu - 1.0) / nu) * eval_auto(kp(half, mu)?, x, spec)?.value
                }
            }
        }
        Form::Volterra => {
            let l = get(Param::Lambda)?;
            let a = nu + mu - 1.0;
            let s = l.powf(1.0 / nu);
            conv(power(a)?, |x| volterra_nu(s * x), t, a - 1.0, 0.0, spec)? / nu
        }
        Form::VolterraAlpha => {
            let (l, rho) = (get(Param::Lambda)?, get(Param::Rho)?);
            let a = mu - 1.0;
            let (s, order) = (l.powf(1.0 / nu), (rho + 1.0) * nu);
            conv(power(a)?, |x| volterra_nu_alpha(s * x, order), t, a - 1.0, order, spec)? / (nu * l)
        }
        Form::VolterraMu => {
            let (l, rho, xi) = (get(Param::Lambda)?, get(Param::Rho)?, get(Param::Xi)?);
            let a = mu - 1.0;
            let (s, order) = (l.powf(1.0 / nu), (rho + 1.0) * nu);
            conv(power(a)?, |x| volterra_mu(s * x, xi, order), t, a - 1.0, order, spec)? / (l * nu.powf(xi + 1.0))
        }
        Form::VolterraRecurrence => {
            let rho = get(Param::Rho)?;
            let second = if printed { (rho + 1.0) * nu } else { rho + 1.0 };
            (rho + 1.0) * volterra_nu_alpha(t, second)? + volterra_mu(t, 1.0, second)?
        }
        Form::SelfConvolution => kernel_scaled(kp(nu, 2.0 * mu)?, t, 2.0, spec)?,
        Form::MixedConvolution => kernel_scaled(kp(nu, mu + get(Param::Rho)?)?, t, 2.0, spec)?,
        Form::ScaledConvolution => {
            let u = get(Param::Alpha)? + get(Param::Beta)?;
            kernel_scaled(kp(nu, mu + get(Param::Rho)?)?, t, u, spec)?
        }
    })
}
