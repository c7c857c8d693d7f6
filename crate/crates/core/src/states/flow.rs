use super::constants::PhysicalConstants;
use super::wavefunction::WaveFunction;
use crate::error::{Error, Result};
use crate::numerics::fd::{partial, Stencil};
use crate::numerics::grid::SingularSet;
use crate::numerics::taylor::Taylor;
use crate::scalar::{lit, Primitive};
use crate::vec3::{self, M3, V3};
use std::sync::Arc;

pub type ScalarFn<T> = Arc<dyn Fn(&V3<T>, T) -> Result<T> + Send + Sync>;
pub type VectorFn<T> = Arc<dyn Fn(&V3<T>, T) -> Result<V3<T>> + Send + Sync>;
pub type JetFn<T> = Arc<dyn Fn(&V3<T>, T) -> Result<FlowJet<T>> + Send + Sync>;

/// Pointwise derivative data of a flow. Jacobians are `J[i][k] = ∂_k f_i`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FlowJet<T> {
    pub rho: T,
    pub grad_rho: V3<T>,
    pub v: V3<T>,
    pub jac_v: M3<T>,
    pub grad_div_v: V3<T>,
    pub lap_v: V3<T>,
    pub u: V3<T>,
    pub jac_u: M3<T>,
    pub grad_div_u: V3<T>,
    pub lap_u: V3<T>,
    /// ∇(Δ√ρ/√ρ)
    pub grad_q: V3<T>,
    pub dt_rho: T,
    pub dt_v: V3<T>,
    pub dt_u: V3<T>,
}

impl<T: Primitive> FlowJet<T> {
    /// Build from the Taylor data of θ = arg ψ and σ = ln|ψ| (ψ normalized).
    pub fn from_phase_amp(th: &Taylor<T>, sg: &Taylor<T>, hm: T) -> Self {
        let rho = (sg.value * lit::<T>(2.0)).exp();
        let mut out = FlowJet { rho, ..Default::default() };
        for i in 0..3 {
            out.grad_rho[i] = lit::<T>(2.0) * rho * sg.grad[i];
            out.v[i] = hm * th.grad[i];
            out.u[i] = hm * sg.grad[i];
            out.grad_div_v[i] = hm * th.grad_lap[i];
            out.grad_div_u[i] = hm * sg.grad_lap[i];
            for k in 0..3 {
                out.jac_v[i][k] = hm * th.hess[i][k];
                out.jac_u[i][k] = hm * sg.hess[i][k];
            }
        }
        out.lap_v = out.grad_div_v;
        out.lap_u = out.grad_div_u;
        let hg = vec3::mat_vec(&sg.hess, sg.grad);
        for i in 0..3 {
            out.grad_q[i] = sg.grad_lap[i] + lit::<T>(2.0) * hg[i];
        }
        out
    }

    pub fn div_v(&self) -> T {
        vec3::trace(&self.jac_v)
    }

    pub fn div_u(&self) -> T {
        vec3::trace(&self.jac_u)
    }

    fn scaled(mut self, sr: T, sv: T, su: T) -> Self {
        let s3 = |a: &mut V3<T>, s: T| a.iter_mut().for_each(|x| *x = *x * s);
        let sm = |a: &mut M3<T>, s: T| a.iter_mut().flatten().for_each(|x| *x = *x * s);
        self.rho = self.rho * sr;
        s3(&mut self.grad_rho, sr);
        self.dt_rho = self.dt_rho * sr;
        for a in [&mut self.v, &mut self.grad_div_v, &mut self.lap_v, &mut self.dt_v] {
            s3(a, sv);
        }
        sm(&mut self.jac_v, sv);
        for a in [&mut self.u, &mut self.grad_div_u, &mut self.lap_u, &mut self.dt_u] {
            s3(a, su);
        }
        sm(&mut self.jac_u, su);
        self
    }
}

/// Hydrodynamic fields ρ, v, u, j on a shared domain.
#[derive(Clone)]
pub struct FlowFields<T: Primitive> {
    pub rho: ScalarFn<T>,
    pub v: VectorFn<T>,
    pub u: VectorFn<T>,
    pub j: VectorFn<T>,
    pub dim: usize,
    pub singular: SingularSet<T>,
    pub stationary: bool,
    pub consts: PhysicalConstants<T>,
    pub derivs: Option<JetFn<T>>,
    pub tag: String,
}

impl<T: Primitive> std::fmt::Debug for FlowFields<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlowFields")
            .field("tag", &self.tag)
            .field("dim", &self.dim)
            .field("stationary", &self.stationary)
            .field("analytic", &self.derivs.is_some())
            .finish()
    }
}

/// Default relative node threshold.
pub fn eps_node_default<T: Primitive>() -> T {
    lit(1e-12)
}

fn cgrad_fd<T: Primitive>(wf: &WaveFunction<T>, p: &V3<T>) -> Result<[num_complex::Complex<T>; 3]> {
    let h = lit::<T>(1e-3);
    let mut g = [num_complex::Complex::new(T::zero(), T::zero()); 3];
    let err = std::cell::RefCell::new(None);
    for (k, gk) in g.iter_mut().enumerate().take(wf.dim) {
        let f = |q: &V3<T>, part: bool| match wf.evaluate(q) {
            Ok(c) => {
                if part {
                    c.im
                } else {
                    c.re
                }
            }
            Err(e) => {
                err.borrow_mut().get_or_insert(e);
                T::nan()
            }
        };
        let re = partial(&|q: &V3<T>| f(q, false), p, k, h, Stencil::Central4);
        let im = partial(&|q: &V3<T>| f(q, true), p, k, h, Stencil::Central4);
        *gk = num_complex::Complex::new(re, im);
    }
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(g),
    }
}

impl<T: Primitive> FlowFields<T> {
    /// Fields from explicit closures; `j` is ρ·v.
    pub fn new(rho: ScalarFn<T>, v: VectorFn<T>, u: VectorFn<T>, dim: usize, consts: PhysicalConstants<T>, tag: &str) -> Self {
        let (r2, v2) = (rho.clone(), v.clone());
        let j: VectorFn<T> = Arc::new(move |p, t| {
            let r = r2(p, t)?;
            Ok(vec3::scale(r, v2(p, t)?))
        });
        FlowFields { rho, v, u, j, dim, singular: SingularSet::none(), stationary: false, consts, derivs: None, tag: tag.into() }
    }

    /// The Madelung fields of ψ with threshold ε_node = `eps_node_rel`·peak|ψ|.
    pub fn from_wavefunction(wf: &WaveFunction<T>, eps_node_rel: T) -> Self {
        let w = Arc::new(wf.clone());
        let eps = eps_node_rel * wf.peak_abs();
        let hm = wf.consts.hm();
        let analytic = wf.has_analytic();
        // (Im, Re) of conj(ψ)∇ψ / |ψ|²
        let log_grad = {
            let w = w.clone();
            move |p: &V3<T>| -> Result<(V3<T>, V3<T>)> {
                let psi = w.evaluate(p)?;
                if psi.norm() <= eps {
                    return Err(Error::NodeEncountered { at: vec3::to_f64(*p) });
                }
                let g = match w.gradient(p) {
                    Some(g) => g?,
                    None => cgrad_fd(&w, p)?,
                };
                let d = psi.norm_sqr();
                let (mut im, mut re) = ([T::zero(); 3], [T::zero(); 3]);
                for k in 0..3 {
                    let q = psi.conj() * g[k];
                    im[k] = q.im / d;
                    re[k] = q.re / d;
                }
                Ok((im, re))
            }
        };
        let lg = Arc::new(log_grad);
        let rho: ScalarFn<T> = {
            let w = w.clone();
            Arc::new(move |p, _t| w.density(p))
        };
        let v: VectorFn<T> = {
            let lg = lg.clone();
            Arc::new(move |p, _t| Ok(vec3::scale(hm, lg(p)?.0)))
        };
        let u: VectorFn<T> = {
            let lg = lg.clone();
            Arc::new(move |p, _t| Ok(vec3::scale(hm, lg(p)?.1)))
        };
        let mut ff = FlowFields::new(rho, v, u, wf.dim, wf.consts, &wf.tag);
        // j = (ħ/m) Im(ψ* ∇ψ) has no node restriction
        ff.j = {
            let w = w.clone();
            Arc::new(move |p, _t| {
                let psi = w.evaluate(p)?;
                let g = match w.gradient(p) {
                    Some(g) => g?,
                    None => cgrad_fd(&w, p)?,
                };
                Ok([0, 1, 2].map(|k| hm * (psi.conj() * g[k]).im))
            })
        };
        // ρ, v and u are continuous across the branch cut
        ff.singular = SingularSet { items: wf.singular.items.iter().filter(|s| !matches!(s, crate::numerics::grid::Singular::PositiveXCut)).cloned().collect() };
        ff.stationary = wf.is_stationary();
        if analytic {
            let w = w.clone();
            ff.derivs = Some(Arc::new(move |p, _t| {
                if w.evaluate(p)?.norm() <= eps {
                    return Err(Error::NodeEncountered { at: vec3::to_f64(*p) });
                }
                let [th, sg] = w.phase_amp_taylor(p)?;
                Ok(FlowJet::from_phase_amp(&th, &sg, hm))
            }));
        }
        ff
    }

    pub fn with_v(mut self, v: VectorFn<T>) -> Self {
        let (r2, v2) = (self.rho.clone(), v.clone());
        self.j = Arc::new(move |p, t| Ok(vec3::scale(r2(p, t)?, v2(p, t)?)));
        self.v = v;
        self
    }

    pub fn with_u(mut self, u: VectorFn<T>) -> Self {
        self.u = u;
        self
    }

    pub fn with_singular(mut self, s: SingularSet<T>) -> Self {
        self.singular = s;
        self
    }

    pub fn with_derivs(mut self, d: JetFn<T>) -> Self {
        self.derivs = Some(d);
        self
    }

    pub fn without_derivs(mut self) -> Self {
        self.derivs = None;
        self
    }

    pub fn stationary(mut self, s: bool) -> Self {
        self.stationary = s;
        self
    }

    pub fn tagged(mut self, tag: &str) -> Self {
        self.tag = tag.into();
        self
    }

    /// Multiply ρ, v and u by constant factors. `j` is left untouched, so
    /// scaling ρ alone breaks j = ρv.
    pub fn scaled(&self, sr: T, sv: T, su: T) -> Self {
        let (r, v, u) = (self.rho.clone(), self.v.clone(), self.u.clone());
        let mut out = self.clone();
        out.rho = Arc::new(move |p, t| Ok(r(p, t)? * sr));
        out.v = Arc::new(move |p, t| Ok(vec3::scale(sv, v(p, t)?)));
        out.u = Arc::new(move |p, t| Ok(vec3::scale(su, u(p, t)?)));
        if sv != T::one() {
            let j = self.j.clone();
            out.j = Arc::new(move |p, t| Ok(vec3::scale(sv, j(p, t)?)));
        }
        out.derivs = self.derivs.clone().map(|d| -> JetFn<T> { Arc::new(move |p, t| Ok(d(p, t)?.scaled(sr, sv, su))) });
        out.tag = format!("{}*scaled", self.tag);
        out
    }

    /// The flow translated by `d`: new(p) = old(p − d).
    pub fn translated(&self, d: V3<T>) -> Self {
        let back = move |p: &V3<T>| vec3::sub(*p, d);
        let (r, v, u, j) = (self.rho.clone(), self.v.clone(), self.u.clone(), self.j.clone());
        let mut out = self.clone();
        out.rho = Arc::new(move |p, t| r(&back(p), t));
        out.v = Arc::new(move |p, t| v(&back(p), t));
        out.u = Arc::new(move |p, t| u(&back(p), t));
        out.j = Arc::new(move |p, t| j(&back(p), t));
        out.derivs = self.derivs.clone().map(|f| -> JetFn<T> { Arc::new(move |p, t| f(&back(p), t)) });
        out.singular = self.singular.shifted(&d);
        out
    }

    pub fn has_analytic(&self) -> bool {
        self.derivs.is_some()
    }
}
