//! The 24 catalog identities.

use std::sync::OnceLock;

use serde_json::json;

use super::eval::Form;
use super::{Constraint, GridPoint, Identity, IdentityParams, Param, RhsKind, Variant, WeightRange};
use crate::error::{Error, Result};

pub const CATALOG_SIZE: usize = 24;

const STANDARD: &[Variant] = &[Variant::Standard];
const WITH_PRINTED: &[Variant] = &[Variant::Standard, Variant::Printed];
const ALL_VARIANTS: &[Variant] = &[Variant::Standard, Variant::Printed, Variant::Alternate];

fn at(params: IdentityParams, t: f64) -> GridPoint {
    GridPoint { params, t }
}

fn p(nu: f64, mu: f64) -> IdentityParams {
    IdentityParams::new(nu, mu)
}

fn val(v: Option<f64>) -> f64 {
    v.unwrap_or(f64::NAN)
}

const LAMBDA_POS: Constraint = Constraint::new("lambda > 0", |p| val(p.lambda) > 0.0);
const NU_MU_GT_1: Constraint = Constraint::new("nu + mu > 1", |p| p.nu + p.mu > 1.0);
const MU_GT_1: Constraint = Constraint::new("mu > 1", |p| p.mu > 1.0);
const RHO_NONNEG: Constraint = Constraint::new("rho >= 0", |p| val(p.rho) >= 0.0);

fn build() -> Vec<Identity> {
    use Param::*;
    vec![
        Identity {
            id: "ID-01",
            paper_eq: "∫₀^∞ u^λ K(t,u) du = Γ(λ+1) t^{(λ+1)ν+μ-1} / Γ((λ+1)ν+μ)",
            quote: "u^λ ↔ Γ(λ+1) s^{-λ-1}",
            weight_desc: "u^λ on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::ClosedForm,
            params: &[Lambda],
            param_domain: vec![
                Constraint::new("lambda > -1", |p| val(p.lambda) > -1.0),
                Constraint::new("(lambda+1) nu + mu > 0", |p| (val(p.lambda) + 1.0) * p.nu + p.mu > 0.0),
            ],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(0.0), 1.0),
                at(p(0.4, 0.0).lambda(1.0), 0.5),
                at(p(0.6, 0.5).lambda(0.5), 2.0),
                at(p(0.5, 1.0).lambda(2.0), 1.0),
            ],
            variants: STANDARD,
            form: Form::Moment,
        },
        Identity {
            id: "ID-02",
            paper_eq: "∫₀^λ K(t,u) du = t^{ν+μ-1}/Γ(ν+μ) - λ^{(ν+μ-1)/ν} f_{ν,ν+μ}(t λ^{-1/ν})",
            quote: "H(λ-u) ↔ (1 - e^{-λs}) / s",
            weight_desc: "1 on (0, λ)",
            range: WeightRange::BelowLambda,
            rhs_kind: RhsKind::KernelValue,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.0).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(2.0), 2.0),
                at(p(0.5, -0.3).lambda(1.0), 2.0),
            ],
            variants: STANDARD,
            form: Form::Indicator,
        },
        Identity {
            id: "ID-03",
            paper_eq: "∫₀^1 (1-u) K(t,u) du = t^{ν+μ-1}/Γ(ν+μ) - t^{2ν+μ-1}/Γ(2ν+μ) + f_{ν,2ν+μ}(t)",
            quote: "(1-u) H(1-u) ↔ 1/s - 1/s² + e^{-s}/s²",
            weight_desc: "1 - u on (0, 1)",
            range: WeightRange::Unit,
            rhs_kind: RhsKind::KernelValue,
            params: &[],
            param_domain: vec![],
            default_grid: vec![
                at(p(0.5, 0.5), 1.0),
                at(p(0.4, 0.0), 0.5),
                at(p(0.6, 0.5), 2.0),
                at(p(0.5, 1.0), 2.0),
            ],
            variants: WITH_PRINTED,
            form: Form::Ramp,
        },
        Identity {
            id: "ID-04",
            paper_eq: "∫_λ^∞ (u-λ)^μ/Γ(μ+1) K(t,u) du = λ^{(ν+νμ+μ-1)/ν} f_{ν,ν+νμ+μ}(t λ^{-1/ν})",
            quote: "(u-λ)^μ H(u-λ) / Γ(μ+1) ↔ e^{-λs} s^{-μ-1}",
            weight_desc: "(u - λ)^μ / Γ(μ+1) on (λ, ∞)",
            range: WeightRange::AboveLambda,
            rhs_kind: RhsKind::KernelValue,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, Constraint::new("mu > -1", |p| p.mu > -1.0)],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.0).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: WITH_PRINTED,
            form: Form::ShiftedPower,
        },
        Identity {
            id: "ID-05",
            paper_eq: "∫₀^∞ e^{-αu} K(t,u) du = t^{ν+μ-2}/Γ(ν+μ-1) ★ E_ν(-α t^ν)",
            quote: "e^{-αu} ↔ 1/(s+α)",
            weight_desc: "e^{-αu} on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Alpha],
            param_domain: vec![Constraint::new("alpha > 0", |p| val(p.alpha) > 0.0), NU_MU_GT_1],
            default_grid: vec![
                at(p(0.4, 0.7).alpha(1.0), 1.0),
                at(p(0.5, 0.6).alpha(0.5), 0.5),
                at(p(0.6, 0.5).alpha(1.0), 2.0),
                at(p(0.5, 0.8).alpha(1.0), 2.0),
            ],
            variants: STANDARD,
            form: Form::Exponential,
        },
        Identity {
            id: "ID-06",
            paper_eq: "∫_λ^∞ (1-e^{-(u-λ)}) K(t,u) du = E_ν(-t^ν) ★ λ^{(2ν+μ-2)/ν} f_{ν,2ν+μ-1}(t λ^{-1/ν})",
            quote: "(1 - e^{-(u-λ)}) H(u-λ) ↔ e^{-λs} / (s(s+1))",
            weight_desc: "1 - e^{-(u-λ)} on (λ, ∞)",
            range: WeightRange::AboveLambda,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.5).lambda(0.5), 2.0),
                at(p(0.6, 0.0).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 1.0),
            ],
            variants: WITH_PRINTED,
            form: Form::ShiftedRamp,
        },
        Identity {
            id: "ID-07",
            paper_eq: "∫_λ^∞ e^{-(u-λ)} K(t,u) du = E_ν(-t^ν) ★ λ^{(ν+μ-2)/ν} f_{ν,ν+μ-1}(t λ^{-1/ν})",
            quote: "e^{-(u-λ)} H(u-λ) ↔ e^{-λs} / (s+1)",
            weight_desc: "e^{-(u-λ)} on (λ, ∞)",
            range: WeightRange::AboveLambda,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.5).lambda(0.5), 2.0),
                at(p(0.6, 0.0).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 1.0),
            ],
            variants: STANDARD,
            form: Form::ShiftedExponential,
        },
        Identity {
            id: "ID-08",
            paper_eq: "∫₀^∞ ln u K(t,u) du = (ν-1)γ t^{ν+μ-1}/Γ(ν+μ) + ν t^{ν+μ-2}/Γ(ν+μ-1) ★ ln t",
            quote: "ln u ↔ -(γ + ln s)/s",
            weight_desc: "ln u on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[],
            param_domain: vec![NU_MU_GT_1],
            default_grid: vec![
                at(p(0.5, 0.6), 1.0),
                at(p(0.4, 0.8), 0.5),
                at(p(0.6, 0.5), 2.0),
                at(p(0.5, 1.0), 2.0),
            ],
            variants: STANDARD,
            form: Form::Log,
        },
        Identity {
            id: "ID-09",
            paper_eq: "∫₀^∞ u^{λ-1} ln u K(t,u) du = Γ(λ)(ψ(λ)+νγ) t^{λν+μ-1}/Γ(λν+μ) + Γ(λ) ν t^{λν+μ-2}/Γ(λν+μ-1) ★ ln t",
            quote: "u^{λ-1} ln u ↔ Γ(λ)(ψ(λ) - ln s) s^{-λ}",
            weight_desc: "u^{λ-1} ln u on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, Constraint::new("lambda nu + mu > 1", |p| val(p.lambda) * p.nu + p.mu > 1.0)],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(2.0), 1.0),
                at(p(0.4, 0.5).lambda(1.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: WITH_PRINTED,
            form: Form::PowerLog,
        },
        Identity {
            id: "ID-10",
            paper_eq: "∫₀^∞ sin λu K(t,u) du = λ t^{2ν+μ-2}/Γ(2ν+μ-1) ★ E_{2ν}(-λ² t^{2ν})",
            quote: "sin λu ↔ λ/(s² + λ²)",
            weight_desc: "sin λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, Constraint::new("2 nu + mu > 1", |p| 2.0 * p.nu + p.mu > 1.0)],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.5).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 0.2).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::Sin,
        },
        Identity {
            id: "ID-11",
            paper_eq: "∫₀^∞ sinh λu K(t,u) du = λ t^{2ν+μ-2}/Γ(2ν+μ-1) ★ E_{2ν}(λ² t^{2ν})",
            quote: "sinh λu ↔ λ/(s² - λ²)",
            weight_desc: "sinh λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, Constraint::new("2 nu + mu > 1", |p| 2.0 * p.nu + p.mu > 1.0)],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.5).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 0.2).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::Sinh,
        },
        Identity {
            id: "ID-12",
            paper_eq: "∫₀^∞ cos λu K(t,u) du = t^{ν+μ-2}/Γ(ν+μ-1) ★ E_{2ν}(-λ² t^{2ν})",
            quote: "cos λu ↔ s/(s² + λ²)",
            weight_desc: "cos λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, NU_MU_GT_1],
            default_grid: vec![
                at(p(0.5, 0.6).lambda(1.0), 1.0),
                at(p(0.4, 0.8).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::Cos,
        },
        Identity {
            id: "ID-13",
            paper_eq: "∫₀^∞ cosh λu K(t,u) du = t^{ν+μ-2}/Γ(ν+μ-1) ★ E_{2ν}(λ² t^{2ν})",
            quote: "cosh λu ↔ s/(s² - λ²)",
            weight_desc: "cosh λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, NU_MU_GT_1],
            default_grid: vec![
                at(p(0.5, 0.6).lambda(1.0), 1.0),
                at(p(0.4, 0.8).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::Cosh,
        },
        Identity {
            id: "ID-14",
            paper_eq: "∫₀^∞ sin λu sinh λu K(t,u) du = 2λ²/Γ(3ν+μ-1) t^{3ν+μ-2} ★ E_{4ν}(-4λ⁴ t^{4ν})",
            quote: "sin λu sinh λu ↔ 2λ² s/(s⁴ + 4λ⁴)",
            weight_desc: "sin λu sinh λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, Constraint::new("3 nu + mu > 1", |p| 3.0 * p.nu + p.mu > 1.0)],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.0).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::SinSinh,
        },
        Identity {
            id: "ID-15",
            paper_eq: "∫₀^∞ cos λu cosh λu K(t,u) du = t^{ν+μ-2}/Γ(ν+μ-1) ★ E_{4ν}(-4λ⁴ t^{4ν})",
            quote: "cos λu cosh λu ↔ s³/(s⁴ + 4λ⁴)",
            weight_desc: "cos λu cosh λu on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, NU_MU_GT_1],
            default_grid: vec![
                at(p(0.5, 0.6).lambda(1.0), 1.0),
                at(p(0.4, 0.8).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::CosCosh,
        },
        Identity {
            id: "ID-16",
            paper_eq: "∫₀^∞ u^{β-1} E_{α,β}(λu^α) K(t,u) du = t^{βν+μ-1} E_{αν,βν+μ}(λ t^{αν})",
            quote: "u^{β-1} E_{α,β}(λu^α) ↔ s^{α-β} / (s^α - λ)",
            weight_desc: "u^{β-1} E_{α,β}(λ u^α) on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::ClosedForm,
            params: &[Alpha, Beta, Lambda],
            param_domain: vec![
                Constraint::new("0 < alpha < 2", |p| val(p.alpha) > 0.0 && val(p.alpha) < 2.0),
                Constraint::new("beta > 0", |p| val(p.beta) > 0.0),
                Constraint::new("beta nu + mu > 0", |p| val(p.beta) * p.nu + p.mu > 0.0),
            ],
            default_grid: vec![
                at(p(0.5, 0.5).alpha(1.0).beta(1.0).lambda(-1.0), 0.5),
                at(p(0.4, 0.0).alpha(1.0).beta(1.0).lambda(0.5), 2.0),
                at(p(0.6, 0.5).alpha(0.5).beta(0.5).lambda(-1.0), 2.0),
                at(p(0.5, 0.0).alpha(0.5).beta(1.5).lambda(-0.5), 0.5),
                at(p(0.5, 0.5).alpha(1.0).beta(2.0).lambda(0.5), 2.0),
            ],
            variants: WITH_PRINTED,
            form: Form::MittagLeffler,
        },
        Identity {
            id: "ID-17",
            paper_eq: "∫₀^∞ erf(λ/(2√u)) K(t,u) du = t^{ν+μ-1}/Γ(ν+μ) - λ^{2(ν+μ-1)/ν} f_{ν/2,ν+μ}(t λ^{-2/ν})",
            quote: "erf(λ/(2√u)) ↔ (1 - e^{-λ√s}) / s",
            weight_desc: "erf(λ / (2 √u)) on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::KernelValue,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS],
            default_grid: vec![
                at(p(0.5, 0.5).lambda(1.0), 1.0),
                at(p(0.4, 0.5).lambda(0.5), 0.5),
                at(p(0.6, 1.0).lambda(1.0), 2.0),
                at(p(0.5, 0.0).lambda(0.5), 2.0),
            ],
            variants: ALL_VARIANTS,
            form: Form::Erf,
        },
        Identity {
            id: "ID-18",
            paper_eq: "∫₀^∞ ν(λu) K(t,u) du = t^{ν+μ-2}/(ν Γ(ν+μ-1)) ★ ν(λ^{1/ν} t)",
            quote: "ν(λu) ↔ 1/(s ln(s/λ))",
            weight_desc: "ν(λu) on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda],
            param_domain: vec![LAMBDA_POS, NU_MU_GT_1],
            default_grid: vec![
                at(p(0.5, 0.6).lambda(1.0), 1.0),
                at(p(0.4, 0.8).lambda(0.5), 0.5),
                at(p(0.6, 0.5).lambda(1.0), 2.0),
                at(p(0.5, 1.0).lambda(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::Volterra,
        },
        Identity {
            id: "ID-19",
            paper_eq: "∫₀^∞ ν(λu, ρ) K(t,u) du = t^{μ-2}/(Γ(μ-1) ν λ) ★ ν(λ^{1/ν} t, (ρ+1)ν)",
            quote: "ν(λu, ρ) ↔ 1/(λ^ρ s^{ρ+1} ln(s/λ))",
            weight_desc: "ν(λu, ρ) on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda, Rho],
            param_domain: vec![LAMBDA_POS, RHO_NONNEG, MU_GT_1],
            default_grid: vec![
                at(p(0.5, 1.2).lambda(1.0).rho(0.5), 1.0),
                at(p(0.4, 1.5).lambda(0.5).rho(1.0), 0.5),
                at(p(0.6, 1.2).lambda(1.0).rho(1.0), 2.0),
                at(p(0.5, 1.5).lambda(0.5).rho(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::VolterraAlpha,
        },
        Identity {
            id: "ID-20",
            paper_eq: "∫₀^∞ μ(λu, ξ, ρ) K(t,u) du = t^{μ-2}/(Γ(μ-1) λ ν^{ξ+1}) ★ μ(λ^{1/ν} t, ξ, (ρ+1)ν)",
            quote: "μ(λu, ξ, ρ) ↔ 1/(λ^ρ s^{ρ+1} ln^{ξ+1}(s/λ))",
            weight_desc: "μ(λu, ξ, ρ) on (0, ∞)",
            range: WeightRange::Positive,
            rhs_kind: RhsKind::Convolution,
            params: &[Lambda, Rho, Xi],
            param_domain: vec![LAMBDA_POS, RHO_NONNEG, MU_GT_1, Constraint::new("xi >= 0", |p| val(p.xi) >= 0.0)],
            default_grid: vec![
                at(p(0.5, 1.2).lambda(1.0).rho(0.5).xi(1.0), 1.0),
                at(p(0.4, 1.5).lambda(0.5).rho(1.0).xi(0.5), 0.5),
                at(p(0.6, 1.2).lambda(1.0).rho(1.0).xi(2.0), 2.0),
                at(p(0.5, 1.5).lambda(0.5).rho(0.5).xi(1.0), 2.0),
            ],
            variants: STANDARD,
            form: Form::VolterraMu,
        },
        Identity {
            id: "ID-21",
            paper_eq: "t ν(t, ρ) = (ρ+1) ν(t, ρ+1) + μ(t, 1, ρ+1)",
            quote: "ν(t, ρ) ↔ 1/(s^{ρ+1} ln s)",
            weight_desc: "none: recurrence in the Volterra order",
            range: WeightRange::None,
            rhs_kind: RhsKind::VolterraRecurrence,
            params: &[Rho],
            param_domain: vec![RHO_NONNEG],
            default_grid: vec![
                at(p(0.5, 0.0).rho(0.5), 1.0),
                at(p(0.5, 0.0).rho(1.0), 0.5),
                at(p(0.5, 0.0).rho(2.0), 2.0),
                at(p(0.5, 0.0).rho(0.0), 1.5),
            ],
            variants: WITH_PRINTED,
            form: Form::VolterraRecurrence,
        },
        Identity {
            id: "ID-22",
            paper_eq: "f_{ν,μ} ★ f_{ν,μ} = 2^{(2μ-1)/ν} f_{ν,2μ}(t 2^{-1/ν})",
            quote: "(s^{-μ} e^{-s^ν})² = s^{-2μ} e^{-2s^ν}",
            weight_desc: "none: self-convolution of the kernel",
            range: WeightRange::None,
            rhs_kind: RhsKind::KernelValue,
            params: &[],
            param_domain: vec![],
            default_grid: vec![
                at(p(0.5, 0.5), 1.0),
                at(p(0.4, 0.0), 0.5),
                at(p(0.6, 0.5), 2.0),
                at(p(0.5, 1.0), 2.0),
            ],
            variants: STANDARD,
            form: Form::SelfConvolution,
        },
        Identity {
            id: "ID-23",
            paper_eq: "f_{ν,μ} ★ f_{ν,ρ} = 2^{(μ+ρ-1)/ν} f_{ν,μ+ρ}(t 2^{-1/ν})",
            quote: "s^{-μ} e^{-s^ν} · s^{-ρ} e^{-s^ν} = s^{-μ-ρ} e^{-2s^ν}",
            weight_desc: "none: convolution of two kernels",
            range: WeightRange::None,
            rhs_kind: RhsKind::KernelValue,
            params: &[Rho],
            param_domain: vec![],
            default_grid: vec![
                at(p(0.5, 0.5).rho(1.0), 1.0),
                at(p(0.4, 0.0).rho(0.5), 0.5),
                at(p(0.6, 0.5).rho(0.0), 2.0),
                at(p(0.5, 1.0).rho(-0.3), 2.0),
            ],
            variants: STANDARD,
            form: Form::MixedConvolution,
        },
        Identity {
            id: "ID-24",
            paper_eq: "K_{ν,μ}(t,α) ★ K_{ν,ρ}(t,β) = K_{ν,μ+ρ}(t, α+β)",
            quote: "s^{-μ} e^{-αs^ν} · s^{-ρ} e^{-βs^ν} = s^{-μ-ρ} e^{-(α+β)s^ν}",
            weight_desc: "none: convolution of two scaled kernels",
            range: WeightRange::None,
            rhs_kind: RhsKind::KernelValue,
            params: &[Alpha, Beta, Rho],
            param_domain: vec![
                Constraint::new("alpha > 0", |p| val(p.alpha) > 0.0),
                Constraint::new("beta > 0", |p| val(p.beta) > 0.0),
            ],
            default_grid: vec![
                at(p(0.5, 0.5).alpha(1.0).beta(2.0).rho(1.0), 1.0),
                at(p(0.4, 0.0).alpha(0.5).beta(1.0).rho(0.5), 0.5),
                at(p(0.6, 0.5).alpha(2.0).beta(0.5).rho(0.0), 2.0),
                at(p(0.5, 1.0).alpha(1.0).beta(1.0).rho(0.5), 2.0),
            ],
            variants: STANDARD,
            form: Form::ScaledConvolution,
        },
    ]
}

/// All identities in catalog order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Looks an identity up by id, e.g. `"ID-07"`. Case-insensitive; `"id-7"`
/// and a bare number such as `"7"` are accepted too.
pub fn find(id: &str) -> Result<&'static Identity> {
    let key = id.trim().to_ascii_uppercase();
    let number = key.strip_prefix("ID-").unwrap_or(&key);
    let canonical = match number.parse::<u32>() {
        Ok(n) => format!("ID-{n:02}"),
        Err(_) => key.clone(),
    };
    catalog().iter().find(|i| i.id == canonical).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// The catalog as a JSON array.
pub fn catalog_json() -> String {
    let entries: Vec<_> = catalog()
        .iter()
        .map(|i| {
            json!({
                "id": i.id,
                "paper_eq": i.paper_eq,
                "quote": i.quote,
                "domain": i.param_domain.iter().map(|c| c.name).collect::<Vec<_>>(),
                "grid": i.default_grid,
                "weight": i.weight_desc,
                "range": i.range,
                "rhs_kind": i.rhs_kind,
                "params": i.params.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "variants": i.variants,
            })
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("catalog serializes")
}
