//! Gradient, Hessian and ∇Δ of smooth scalar functions from order-3 jets
//! along coordinate and diagonal directions.

use crate::error::Result;
use crate::jet::Jet;
use crate::scalar::{lit, Primitive};
use crate::vec3::{M3, V3};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Taylor<T> {
    pub value: T,
    pub grad: V3<T>,
    pub hess: M3<T>,
    /// ∇(Δf)
    pub grad_lap: V3<T>,
}

impl<T: Primitive> Taylor<T> {
    pub fn lap(&self) -> T {
        self.hess[0][0] + self.hess[1][1] + self.hess[2][2]
    }
}

fn line<T: Primitive>(p: &V3<T>, d: &V3<T>) -> [Jet<T>; 3] {
    [0, 1, 2].map(|k| Jet::var(p[k], d[k]))
}

/// Evaluate `f` (returning K scalar jets) at `p` and assemble the derivative data
/// over the first `dim` coordinates. Costs `dim(dim+1)/2` evaluations.
pub fn taylor<T, const K: usize, F>(dim: usize, p: &V3<T>, f: F) -> Result<[Taylor<T>; K]>
where
    T: Primitive,
    F: Fn(&[Jet<T>; 3]) -> Result<[Jet<T>; K]>,
{
    let z = T::zero();
    let mut out = [Taylor::<T>::default(); K];
    // third derivatives along the axes, f_iii
    let mut diag3 = [[z; 3]; K];
    for i in 0..dim {
        let mut e = [z; 3];
        e[i] = T::one();
        let js = f(&line(p, &e))?;
        for (k, j) in js.iter().enumerate() {
            out[k].value = j.value();
            out[k].grad[i] = j.deriv(1);
            out[k].hess[i][i] = j.deriv(2);
            diag3[k][i] = j.deriv(3);
        }
    }
    if dim == 0 {
        let js = f(&line(p, &[z; 3]))?;
        for (k, j) in js.iter().enumerate() {
            out[k].value = j.value();
        }
    }
    // f_iij for i ≠ j, stored as mixed[k][i][j]
    let mut mixed = [[[z; 3]; 3]; K];
    let six = lit::<T>(6.0);
    let two = lit::<T>(2.0);
    let four = lit::<T>(4.0);
    for i in 0..dim {
        for j in i + 1..dim {
            let mut dp = [z; 3];
            dp[i] = T::one();
            dp[j] = T::one();
            let mut dm = dp;
            dm[j] = -T::one();
            let jp = f(&line(p, &dp))?;
            let jm = f(&line(p, &dm))?;
            for k in 0..K {
                let (p2, m2) = (jp[k].deriv(2), jm[k].deriv(2));
                let (p3, m3) = (jp[k].deriv(3), jm[k].deriv(3));
                let hij = (p2 - m2) / four;
                out[k].hess[i][j] = hij;
                out[k].hess[j][i] = hij;
                // D³(e_i ± e_j) = f_iii ± 3f_iij + 3f_ijj ± f_jjj
                mixed[k][j][i] = (p3 + m3 - two * diag3[k][i]) / six; // f_ijj
                mixed[k][i][j] = (p3 - m3 - two * diag3[k][j]) / six; // f_iij
            }
        }
    }
    for k in 0..K {
        for j in 0..dim {
            let mut s = diag3[k][j];
            for i in 0..dim {
                if i != j {
                    s += mixed[k][i][j];
                }
            }
            out[k].grad_lap[j] = s;
        }
    }
    Ok(out)
}
