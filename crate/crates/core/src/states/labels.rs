use crate::error::{Error, Result};
use crate::scalar::{to_f64, Primitive};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Oscillator2dStandard,
    #[serde(rename = "oscillator2d_U")]
    Oscillator2dU,
    #[serde(rename = "oscillator2d_L")]
    Oscillator2dL,
    Hydrogen,
    PhiASuperposition,
    Oscillator3dGround,
    Gaussian,
    Custom,
}

/// Angular factor of the planar families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Angular {
    #[default]
    Exp,
    Cos,
    Sin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign<T: Primitive>(self) -> T {
        match self {
            Branch::Plus => T::one(),
            Branch::Minus => -T::one(),
        }
    }
}

/// Which non-quantized radial solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    U,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumLabels<T> {
    pub family: Family,
    pub n: usize,
    pub l: usize,
    pub mu: T,
    pub a_param: T,
    pub a_mix: T,
    pub energy: Option<T>,
    pub variant: Angular,
    pub branch: Branch,
}

pub(crate) fn is_integer<T: Primitive>(x: T) -> bool {
    x.is_finite() && x == x.round()
}

impl<T: Primitive> QuantumLabels<T> {
    fn base(family: Family) -> Self {
        QuantumLabels {
            family,
            n: 0,
            l: 0,
            mu: T::zero(),
            a_param: T::zero(),
            a_mix: T::zero(),
            energy: None,
            variant: Angular::Exp,
            branch: Branch::Plus,
        }
    }

    pub fn custom() -> Self {
        Self::base(Family::Custom)
    }

    pub fn standard(n: usize, mu: i32) -> Self {
        QuantumLabels { n, mu: crate::scalar::from_i32(mu), ..Self::base(Family::Oscillator2dStandard) }
    }

    pub fn case_l(n: usize, mu: T) -> Self {
        QuantumLabels { n, mu, ..Self::base(Family::Oscillator2dL) }
    }

    pub fn case_u(a: T, mu: T) -> Self {
        QuantumLabels { a_param: a, mu, ..Self::base(Family::Oscillator2dU) }
    }

    pub fn hydrogen(n: usize, l: usize, mu: i32) -> Self {
        QuantumLabels { n, l, mu: crate::scalar::from_i32(mu), ..Self::base(Family::Hydrogen) }
    }

    pub fn phi_a(n: usize, a_mix: T) -> Self {
        QuantumLabels { n, l: 1, a_mix, ..Self::base(Family::PhiASuperposition) }
    }

    pub fn osc3d_ground() -> Self {
        Self::base(Family::Oscillator3dGround)
    }

    pub fn gaussian() -> Self {
        Self::base(Family::Gaussian)
    }

    pub fn with_variant(mut self, v: Angular) -> Self {
        self.variant = v;
        self
    }

    pub fn with_branch(mut self, b: Branch) -> Self {
        self.branch = b;
        self
    }

    /// Check the family constraints on the quantum numbers.
    pub fn validate(&self) -> Result<()> {
        let mu = self.mu;
        let muf = to_f64(mu);
        match self.family {
            Family::Oscillator2dStandard => {
                if !is_integer(mu) {
                    return Err(Error::NonIntegerMu { mu: muf });
                }
            }
            Family::Oscillator2dL => {
                if !(mu > -T::one()) || is_integer(mu) || !mu.is_finite() {
                    return Err(Error::OutOfRegime(format!("case L needs μ ∈ (−1, ∞) \\ ℤ, got {muf}")));
                }
            }
            Family::Oscillator2dU => {
                let a = self.a_param;
                let ok_mu = mu > -T::one() && mu < T::one() && mu != T::zero();
                if !ok_mu {
                    return Err(Error::OutOfRegime(format!("case U needs μ ∈ (−1,0) ∪ (0,1), got {muf}")));
                }
                if !a.is_finite() || (is_integer(a) && a <= T::zero()) {
                    return Err(Error::OutOfRegime(format!("case U needs a ∉ −ℕ₀, got {}", to_f64(a))));
                }
            }
            Family::Hydrogen => {
                if self.n < 1 || self.l >= self.n {
                    return Err(Error::InvalidQuantumNumbers(format!("need n ≥ 1 and l < n, got n={} l={}", self.n, self.l)));
                }
                if !is_integer(mu) || mu.abs() > crate::scalar::from_usize(self.l) {
                    return Err(Error::InvalidQuantumNumbers(format!("need integer |μ| ≤ l, got μ={muf} l={}", self.l)));
                }
            }
            Family::PhiASuperposition => {
                if self.n < 2 {
                    return Err(Error::InvalidQuantumNumbers(format!("Φ_a needs n > 1, got {}", self.n)));
                }
                if !(self.a_mix.abs() <= T::one()) {
                    return Err(Error::InvalidInput(format!("a_mix must lie in [−1, 1], got {}", to_f64(self.a_mix))));
                }
            }
            _ => {}
        }
        Ok(())
    }
}
