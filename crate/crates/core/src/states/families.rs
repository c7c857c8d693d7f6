use super::constants::PhysicalConstants;
use super::flow::{eps_node_default, FlowFields, VectorFn};
use super::labels::{Angular, Case, Family, QuantumLabels};
use super::wavefunction::{RadialProfile, Shape, WaveFunction};
use crate::error::{Error, Result};
use crate::numerics::fd::{gradient, Stencil};
use crate::numerics::grid::{Singular, SingularSet};
use crate::scalar::{from_usize, lit, to_f64, Primitive};
use crate::vec3::V3;
use std::sync::Arc;

fn flow_with_closed_v<T: Primitive>(wf: &WaveFunction<T>) -> FlowFields<T> {
    let w = wf.clone();
    let ff = FlowFields::from_wavefunction(wf, eps_node_default());
    let closed: VectorFn<T> = Arc::new(move |p, _t| {
        w.closed_form_v(p).ok_or_else(|| Error::InvalidInput("no closed form".into()))
    });
    ff.with_v(closed)
}

fn finish<T: Primitive>(wf: WaveFunction<T>) -> (WaveFunction<T>, FlowFields<T>) {
    let ff = flow_with_closed_v(&wf);
    (wf, ff)
}

/// Integer-μ eigenstates of the planar oscillator.
pub fn oscillator2d_standard<T: Primitive>(n: usize, mu: T, consts: PhysicalConstants<T>) -> Result<(WaveFunction<T>, FlowFields<T>)> {
    oscillator2d_standard_with(n, mu, Angular::Exp, consts)
}

pub fn oscillator2d_standard_with<T: Primitive>(
    n: usize,
    mu: T,
    variant: Angular,
    consts: PhysicalConstants<T>,
) -> Result<(WaveFunction<T>, FlowFields<T>)> {
    consts.validate()?;
    if !super::labels::is_integer(mu) {
        return Err(Error::NonIntegerMu { mu: to_f64(mu) });
    }
    let mut labels = QuantumLabels::standard(n, mu.to_i32().unwrap_or(0)).with_variant(variant);
    let mabs = mu.abs();
    labels.energy = Some(consts.hbar * consts.omega * (lit::<T>(2.0) * from_usize::<T>(n) + mabs + T::one()));
    let k = consts.k_osc();
    let singular = if mu == T::zero() { SingularSet::none() } else { SingularSet::planar_origin() };
    let shape = Shape::Osc2d { radial: RadialProfile::Laguerre { n, mu: mabs, k }, mu_phase: mu, variant };
    let tag = format!("osc2d:standard:n={n}:mu={}", to_f64(mu));
    Ok(finish(WaveFunction::build(labels, consts, 2, singular, false, shape, tag)?))
}

/// Non-integer-μ solutions on the plane cut along the positive x-axis.
pub fn oscillator2d_nonquantized<T: Primitive>(case: Case, labels: QuantumLabels<T>, consts: PhysicalConstants<T>) -> Result<(WaveFunction<T>, FlowFields<T>)> {
    consts.validate()?;
    let mut labels = labels;
    labels.family = match case {
        Case::U => Family::Oscillator2dU,
        Case::L => Family::Oscillator2dL,
    };
    labels.validate()?;
    let k = consts.k_osc();
    let mu = labels.mu;
    let hw = consts.hbar * consts.omega;
    let radial = match case {
        Case::L => {
            labels.energy = Some(hw * (lit::<T>(2.0) * from_usize::<T>(labels.n) + mu + T::one()));
            RadialProfile::Laguerre { n: labels.n, mu, k }
        }
        Case::U => {
            labels.energy = Some(hw * (-lit::<T>(2.0) * labels.a_param + mu + T::one()));
            RadialProfile::Tricomi { a: labels.a_param, mu, k }
        }
    };
    let mu_phase = mu * labels.branch.sign::<T>();
    let shape = Shape::Osc2d { radial, mu_phase, variant: labels.variant };
    let singular = SingularSet::planar_origin().with(Singular::PositiveXCut);
    let tag = match case {
        Case::L => format!("osc2d:L:n={}:mu={}", labels.n, to_f64(mu)),
        Case::U => format!("osc2d:U:a={}:mu={}", to_f64(labels.a_param), to_f64(mu)),
    };
    Ok(finish(WaveFunction::build(labels, consts, 2, singular, true, shape, tag)?))
}

fn hydrogen_energy<T: Primitive>(consts: &PhysicalConstants<T>, n: usize) -> T {
    let a0 = consts.a0();
    let nn = from_usize::<T>(n * n);
    -consts.hbar * consts.hbar / (lit::<T>(2.0) * consts.mass * a0 * a0 * nn)
}

/// Bound hydrogen eigenstates ψ_{nlμ}.
pub fn hydrogen_state<T: Primitive>(n: usize, l: usize, mu: T, consts: PhysicalConstants<T>) -> Result<(WaveFunction<T>, FlowFields<T>)> {
    consts.validate()?;
    if !super::labels::is_integer(mu) {
        return Err(Error::InvalidQuantumNumbers(format!("μ = {} is not an integer", to_f64(mu))));
    }
    let m = mu.to_i32().unwrap_or(i32::MAX);
    let mut labels = QuantumLabels::hydrogen(n, l, m);
    labels.validate()?;
    labels.energy = Some(hydrogen_energy(&consts, n));
    let singular = if m == 0 {
        SingularSet { items: vec![Singular::Point { center: [T::zero(); 3], planar: false }] }
    } else {
        SingularSet::z_axis()
    };
    let shape = Shape::Hydrogen { n, l, m, a0: consts.a0() };
    let tag = format!("hydrogen:n={n}:l={l}:mu={m}");
    Ok(finish(WaveFunction::build(labels, consts, 3, singular, false, shape, tag)?))
}

/// Φ_a ∝ R_{n1}[(1−a)Y₁⁻¹ + (1+a)Y₁¹].
pub fn phi_a_superposition<T: Primitive>(n: usize, a_mix: T, consts: PhysicalConstants<T>) -> Result<WaveFunction<T>> {
    consts.validate()?;
    let mut labels = QuantumLabels::phi_a(n, a_mix);
    labels.validate()?;
    labels.energy = Some(hydrogen_energy(&consts, n));
    let singular = if a_mix == T::zero() {
        SingularSet { items: vec![Singular::Plane { axis: 1, offset: T::zero() }] }
    } else {
        SingularSet::z_axis()
    };
    let shape = Shape::PhiA { n, a: a_mix, a0: consts.a0() };
    let tag = format!("phi_a:n={n}:a={}", to_f64(a_mix));
    WaveFunction::build(labels, consts, 3, singular, false, shape, tag)
}

pub fn phi_a_flow<T: Primitive>(wf: &WaveFunction<T>) -> FlowFields<T> {
    flow_with_closed_v(wf)
}

/// Gaussian e^{−α|r−c|²} e^{ik·r} in `dim` dimensions.
pub fn gaussian_state<T: Primitive>(dim: usize, alpha: T, center: V3<T>, k: V3<T>, consts: PhysicalConstants<T>) -> Result<(WaveFunction<T>, FlowFields<T>)> {
    consts.validate()?;
    if !(1..=3).contains(&dim) || !(alpha > T::zero()) {
        return Err(Error::InvalidInput("gaussian needs 1 ≤ dim ≤ 3 and α > 0".into()));
    }
    let mut labels = QuantumLabels::gaussian();
    let stationary_plain = k.iter().all(|&x| x == T::zero());
    // only the centred real oscillator ground state is an eigenstate here
    if stationary_plain && center.iter().all(|&x| x == T::zero()) && alpha == consts.k_osc() * lit(0.5) {
        labels.energy = Some(consts.hbar * consts.omega * from_usize::<T>(dim) * lit(0.5));
    }
    let shape = Shape::Gaussian { dim, alpha, center, k };
    let tag = format!("gaussian:dim={dim}:alpha={}", to_f64(alpha));
    Ok(finish(WaveFunction::build(labels, consts, dim, SingularSet::none(), false, shape, tag)?))
}

pub fn oscillator3d_ground<T: Primitive>(consts: PhysicalConstants<T>) -> Result<WaveFunction<T>> {
    let (mut wf, _) = gaussian_state(3, consts.k_osc() * lit(0.5), [T::zero(); 3], [T::zero(); 3], consts)?;
    wf.labels.family = Family::Oscillator3dGround;
    wf.labels.energy = Some(consts.hbar * consts.omega * lit(1.5));
    wf.tag = "osc3d:ground".into();
    Ok(wf)
}

/// Ground state of the isotropic 3-D oscillator as Nelson fields: u = −ωr, v = 0.
pub fn oscillator3d_ground_nelson<T: Primitive>(consts: PhysicalConstants<T>) -> Result<FlowFields<T>> {
    let wf = oscillator3d_ground(consts)?;
    let w = consts.omega;
    let ff = FlowFields::from_wavefunction(&wf, eps_node_default());
    let v: VectorFn<T> = Arc::new(|_p, _t| Ok([T::zero(); 3]));
    let u: VectorFn<T> = Arc::new(move |p, _t| Ok([-w * p[0], -w * p[1], -w * p[2]]));
    Ok(ff.with_v(v).with_u(u).tagged("osc3d:ground"))
}

/// Named potentials.
#[derive(Clone)]
pub enum Potential<T: Primitive> {
    Zero,
    Constant(T),
    /// ½mω²|r|² over the first `dim` coordinates.
    Harmonic { dim: usize, consts: PhysicalConstants<T> },
    /// −ħ²/(m a₀ r) = −e²/(4πε₀ r)
    Coulomb { consts: PhysicalConstants<T> },
    Custom(Arc<dyn Fn(&V3<T>) -> T + Send + Sync>),
}

impl<T: Primitive> std::fmt::Debug for Potential<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Potential::Zero => write!(f, "Zero"),
            Potential::Constant(c) => write!(f, "Constant({c:e})"),
            Potential::Harmonic { dim, .. } => write!(f, "Harmonic{{dim: {dim}}}"),
            Potential::Coulomb { .. } => write!(f, "Coulomb"),
            Potential::Custom(_) => write!(f, "Custom"),
        }
    }
}

impl<T: Primitive> Potential<T> {
    pub fn harmonic(dim: usize, consts: PhysicalConstants<T>) -> Self {
        Potential::Harmonic { dim, consts }
    }

    pub fn coulomb(consts: PhysicalConstants<T>) -> Self {
        Potential::Coulomb { consts }
    }

    pub fn value(&self, p: &V3<T>) -> T {
        match self {
            Potential::Zero => T::zero(),
            Potential::Constant(c) => *c,
            Potential::Harmonic { dim, consts } => {
                let r2 = p.iter().take(*dim).fold(T::zero(), |a, &x| a + x * x);
                lit::<T>(0.5) * consts.mass * consts.omega * consts.omega * r2
            }
            Potential::Coulomb { consts } => {
                let r = crate::vec3::norm(*p);
                -consts.hbar * consts.hbar / (consts.mass * consts.a0() * r)
            }
            Potential::Custom(f) => f(p),
        }
    }

    pub fn gradient(&self, p: &V3<T>) -> V3<T> {
        let z = T::zero();
        match self {
            Potential::Zero | Potential::Constant(_) => [z; 3],
            Potential::Harmonic { dim, consts } => {
                let c = consts.mass * consts.omega * consts.omega;
                [0, 1, 2].map(|i| if i < *dim { c * p[i] } else { z })
            }
            Potential::Coulomb { consts } => {
                let r = crate::vec3::norm(*p);
                let c = consts.hbar * consts.hbar / (consts.mass * consts.a0() * r * r * r);
                [c * p[0], c * p[1], c * p[2]]
            }
            Potential::Custom(f) => gradient(&|q: &V3<T>| f(q), p, lit(1e-3), 3, Stencil::Central4),
        }
    }

    /// Shift the potential by `d`: new(p) = old(p − d).
    pub fn translated(&self, d: V3<T>) -> Self {
        match self {
            Potential::Zero | Potential::Constant(_) => self.clone(),
            _ => {
                let me = self.clone();
                Potential::Custom(Arc::new(move |p| me.value(&crate::vec3::sub(*p, d))))
            }
        }
    }
}

/// A family addressed by string key, e.g. `osc2d:L:n=0:mu=0.5`.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKey {
    Standard { n: usize, mu: f64, variant: Angular },
    NonQuantized { case: Case, n: usize, a: f64, mu: f64, variant: Angular, minus: bool },
    Hydrogen { n: usize, l: usize, mu: f64 },
    PhiA { n: usize, a: f64 },
    Osc3dGround,
    Gaussian { dim: usize, alpha: f64, k: [f64; 3] },
}

fn parse_kv(parts: &[&str], allowed: &[&str]) -> Result<std::collections::HashMap<String, String>> {
    let mut m = std::collections::HashMap::new();
    for p in parts {
        let (k, v) = p.split_once('=').ok_or_else(|| Error::InvalidInput(format!("expected key=value, got '{p}'")))?;
        if !allowed.contains(&k) {
            return Err(Error::InvalidInput(format!("unknown key '{k}'")));
        }
        if m.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::InvalidInput(format!("duplicate key '{k}'")));
        }
    }
    Ok(m)
}

fn get<F: std::str::FromStr>(m: &std::collections::HashMap<String, String>, k: &str, default: Option<F>) -> Result<F> {
    match m.get(k) {
        Some(s) => s.parse().map_err(|_| Error::InvalidInput(format!("cannot parse {k}='{s}'"))),
        None => default.ok_or_else(|| Error::InvalidInput(format!("missing key '{k}'"))),
    }
}

fn variant_of(m: &std::collections::HashMap<String, String>) -> Result<Angular> {
    match m.get("variant").map(String::as_str) {
        None | Some("exp") => Ok(Angular::Exp),
        Some("cos") => Ok(Angular::Cos),
        Some("sin") => Ok(Angular::Sin),
        Some(o) => Err(Error::InvalidInput(format!("unknown variant '{o}'"))),
    }
}

impl std::str::FromStr for FamilyKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["osc2d", "standard", rest @ ..] => {
                let m = parse_kv(rest, &["n", "mu", "variant"])?;
                Ok(FamilyKey::Standard { n: get(&m, "n", Some(0))?, mu: get(&m, "mu", None)?, variant: variant_of(&m)? })
            }
            ["osc2d", c @ ("L" | "U"), rest @ ..] => {
                let m = parse_kv(rest, &["n", "a", "mu", "variant", "sign"])?;
                let case = if *c == "L" { Case::L } else { Case::U };
                let minus = match m.get("sign").map(String::as_str) {
                    None | Some("+") => false,
                    Some("-") => true,
                    Some(o) => return Err(Error::InvalidInput(format!("sign must be + or -, got '{o}'"))),
                };
                if case == Case::L && m.contains_key("a") {
                    return Err(Error::InvalidInput("key 'a' does not apply to case L".into()));
                }
                if case == Case::U && m.contains_key("n") {
                    return Err(Error::InvalidInput("key 'n' does not apply to case U".into()));
                }
                Ok(FamilyKey::NonQuantized {
                    case,
                    n: get(&m, "n", Some(0))?,
                    a: if case == Case::U { get(&m, "a", None)? } else { 0.0 },
                    mu: get(&m, "mu", None)?,
                    variant: variant_of(&m)?,
                    minus,
                })
            }
            ["hydrogen", rest @ ..] => {
                let m = parse_kv(rest, &["n", "l", "mu"])?;
                Ok(FamilyKey::Hydrogen { n: get(&m, "n", None)?, l: get(&m, "l", None)?, mu: get(&m, "mu", Some(0.0))? })
            }
            ["phi_a", rest @ ..] => {
                let m = parse_kv(rest, &["n", "a"])?;
                Ok(FamilyKey::PhiA { n: get(&m, "n", None)?, a: get(&m, "a", None)? })
            }
            ["osc3d", "ground"] => Ok(FamilyKey::Osc3dGround),
            ["gaussian", rest @ ..] => {
                let m = parse_kv(rest, &["dim", "alpha", "kx", "ky", "kz"])?;
                Ok(FamilyKey::Gaussian {
                    dim: get(&m, "dim", Some(3))?,
                    alpha: get(&m, "alpha", Some(0.5))?,
                    k: [get(&m, "kx", Some(0.0))?, get(&m, "ky", Some(0.0))?, get(&m, "kz", Some(0.0))?],
                })
            }
            _ => Err(Error::InvalidInput(format!("unknown family key '{s}'"))),
        }
    }
}

impl FamilyKey {
    pub fn build<T: Primitive>(&self, consts: PhysicalConstants<T>) -> Result<(WaveFunction<T>, FlowFields<T>)> {
        match *self {
            FamilyKey::Standard { n, mu, variant } => oscillator2d_standard_with(n, lit(mu), variant, consts),
            FamilyKey::NonQuantized { case, n, a, mu, variant, minus } => {
                let labels = match case {
                    Case::L => QuantumLabels::case_l(n, lit(mu)),
                    Case::U => QuantumLabels::case_u(lit(a), lit(mu)),
                };
                let branch = if minus { super::labels::Branch::Minus } else { super::labels::Branch::Plus };
                oscillator2d_nonquantized(case, labels.with_variant(variant).with_branch(branch), consts)
            }
            FamilyKey::Hydrogen { n, l, mu } => hydrogen_state(n, l, lit(mu), consts),
            FamilyKey::PhiA { n, a } => {
                let wf = phi_a_superposition(n, lit(a), consts)?;
                let ff = phi_a_flow(&wf);
                Ok((wf, ff))
            }
            FamilyKey::Osc3dGround => {
                let wf = oscillator3d_ground(consts)?;
                Ok((wf, oscillator3d_ground_nelson(consts)?))
            }
            FamilyKey::Gaussian { dim, alpha, k } => gaussian_state(dim, lit(alpha), [T::zero(); 3], k.map(lit), consts),
        }
    }

    /// The potential the family solves.
    pub fn potential<T: Primitive>(&self, consts: PhysicalConstants<T>) -> Potential<T> {
        match self {
            FamilyKey::Standard { .. } | FamilyKey::NonQuantized { .. } => Potential::harmonic(2, consts),
            FamilyKey::Hydrogen { .. } | FamilyKey::PhiA { .. } => Potential::coulomb(consts),
            FamilyKey::Osc3dGround => Potential::harmonic(3, consts),
            FamilyKey::Gaussian { .. } => Potential::Zero,
        }
    }
}
