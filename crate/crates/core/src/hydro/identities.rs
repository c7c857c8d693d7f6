use super::catch::Catch;
use super::{report, ResidualReport};
use crate::error::{Error, Result};
use crate::numerics::fd::{gradient, jacobian, laplacian, vector_laplacian, Stencil};
use crate::numerics::grid::GridSpec;
use crate::numerics::quad::{integrate, QuadratureConfig};
use crate::numerics::testfn::VectorTest;
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::WaveFunction;
use crate::vec3::{cross, curl_of, dot, mat_t_vec, mat_vec, norm, V3};
use serde::{Deserialize, Serialize};

/// Both sides of (1/α)∇(Δφ^α/φ^α) = Δ(∇lnφ) + 2α((∇lnφ)·∇)(∇lnφ) at `p`,
/// by nested fourth-order differences.
pub fn nottale_sides<T: Primitive>(phi: &(dyn Fn(&V3<T>) -> T + Sync), alpha: T, p: &V3<T>, dim: usize, h: T) -> Result<(V3<T>, V3<T>)> {
    let s = Stencil::Central4;
    let c = Catch::new();
    let pos = |q: &V3<T>| {
        let v = phi(q);
        if !(v > T::zero()) {
            c.s::<T>(Err(Error::InvalidInput(format!("φ must be positive, got {} at {:?}", to_f64(v), crate::vec3::to_f64(*q)))))
        } else {
            v
        }
    };
    let pa = |q: &V3<T>| pos(q).powf(alpha);
    let ratio = |q: &V3<T>| laplacian(&pa, q, h, dim, s) / pa(q);
    let lhs = crate::vec3::scale(alpha.recip(), gradient(&ratio, p, h, dim, s));
    let glog = |q: &V3<T>| gradient(&|r: &V3<T>| pos(r).ln(), q, h, dim, s);
    let lap = vector_laplacian(&glog, p, h, dim, s);
    let adv = mat_vec(&jacobian(&glog, p, h, dim, s), glog(p));
    let two_a = lit::<T>(2.0) * alpha;
    let rhs = [0, 1, 2].map(|i| lap[i] + two_a * adv[i]);
    c.take((lhs, rhs))
}

pub fn nottale_identity_check<T: Primitive>(phi: &(dyn Fn(&V3<T>) -> T + Sync), alpha: T, grid: &GridSpec<T>, h: T) -> Result<ResidualReport> {
    if !(alpha > T::zero()) {
        return Err(Error::InvalidInput("α must be positive".into()));
    }
    report("nottale_identity", grid, false, |p| {
        let (l, r) = nottale_sides(phi, alpha, p, grid.dimension, h)?;
        Ok(norm(crate::vec3::sub(l, r)))
    })
}

/// |(w·∇)w − ∇(w²/2)| on the grid, derivatives by central differences.
pub fn weber_identity_check<T: Primitive>(w: &(dyn Fn(&V3<T>) -> V3<T> + Sync), grid: &GridSpec<T>, h: T) -> Result<ResidualReport> {
    report("weber_identity", grid, false, |p| {
        let j = jacobian(&|q: &V3<T>| w(q), p, h, grid.dimension, Stencil::Central4);
        let wv = w(p);
        // (w·∇)w = J w and ∇(w²/2) = Jᵀ w
        Ok(norm(crate::vec3::sub(mat_vec(&j, wv), mat_t_vec(&j, wv))))
    })
}

/// Weber check for w = ∇S.
pub fn weber_from_potential<T: Primitive>(s: &(dyn Fn(&V3<T>) -> T + Sync), grid: &GridSpec<T>, h: T) -> Result<ResidualReport> {
    let dim = grid.dimension;
    let w = move |q: &V3<T>| gradient(&|r: &V3<T>| s(r), q, h, dim, Stencil::Central4);
    weber_identity_check(&w, grid, h)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingRow {
    pub test: String,
    /// ⟨∇×j, φ⟩ = ∫ j·(∇×φ)
    pub lhs: f64,
    /// ∫ 2(∇√ρ × λ)·φ
    pub rhs: f64,
    pub residual: f64,
    pub quad_error: f64,
}

/// Distributional residual of ∇×j = 2(∇√ρ)×λ with λ = (ħ/m) Im(Q*∇ψ), Q = ψ/|ψ|,
/// paired with each compactly supported vector test function.
pub fn antonelli_irrotationality_residual<T: Primitive>(
    psi: &WaveFunction<T>,
    tests: &[VectorTest<T>],
    cfg: &QuadratureConfig<T>,
) -> Result<Vec<PairingRow>> {
    let hm = psi.consts.hm();
    let grad = |p: &V3<T>| -> Result<[num_complex::Complex<T>; 3]> {
        match psi.gradient(p) {
            Some(g) => g,
            None => {
                let s = Stencil::Central4;
                let h = lit::<T>(1e-3);
                let c = Catch::new();
                let re = gradient(&|q: &V3<T>| c.s(psi.evaluate(q).map(|z| z.re)), p, h, psi.dim, s);
                let im = gradient(&|q: &V3<T>| c.s(psi.evaluate(q).map(|z| z.im)), p, h, psi.dim, s);
                c.take([0, 1, 2].map(|k| num_complex::Complex::new(re[k], im[k])))
            }
        }
    };
    let mut rows = Vec::with_capacity(tests.len());
    for t in tests {
        let region = t
            .support_region(psi.dim)
            .ok_or_else(|| Error::InvalidInput(format!("test {} is not compactly supported", t.tag)))?
            .with_singular_breaks(&psi.singular);
        let err = std::sync::Mutex::new(None);
        let e = integrate(
            |p: &[T; 3]| -> [T; 2] {
                let r = (|| -> Result<[T; 2]> {
                    let z = psi.evaluate(p)?;
                    let g = grad(p)?;
                    let a: V3<T> = [0, 1, 2].map(|k| (z.conj() * g[k]).re);
                    let b: V3<T> = [0, 1, 2].map(|k| (z.conj() * g[k]).im);
                    let j = crate::vec3::scale(hm, b);
                    let lhs = dot(j, curl_of(&t.jacobian(p)));
                    let d = z.norm_sqr();
                    // 2∇√ρ × λ = 2(ħ/m) Re(ψ*∇ψ) × Im(ψ*∇ψ)/|ψ|², bounded by 2(ħ/m)|∇ψ|²
                    let rhs = if d == T::zero() { T::zero() } else { dot(crate::vec3::scale(lit::<T>(2.0) * hm / d, cross(a, b)), t.value(p)) };
                    Ok([lhs, rhs])
                })();
                r.unwrap_or_else(|e| {
                    err.lock().unwrap().get_or_insert(e);
                    [T::zero(); 2]
                })
            },
            &region,
            cfg,
        )?;
        if let Some(e) = err.into_inner().unwrap() {
            return Err(e);
        }
        let [l, r] = e.value;
        rows.push(PairingRow { test: t.tag.clone(), lhs: to_f64(l), rhs: to_f64(r), residual: to_f64(l - r), quad_error: to_f64(e.error) });
    }
    Ok(rows)
}
