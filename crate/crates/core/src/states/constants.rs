use crate::error::{Error, Result};
use crate::scalar::{lit, Primitive};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants<T> {
    pub hbar: T,
    pub mass: T,
    pub omega: T,
    pub eps0: T,
    pub e_charge: T,
}

impl<T: Primitive> PhysicalConstants<T> {
    /// ħ = m = ω = e = 1 and 4πε₀ = 1, so a₀ = 1.
    pub fn natural() -> Self {
        PhysicalConstants {
            hbar: T::one(),
            mass: T::one(),
            omega: T::one(),
            eps0: (lit::<T>(4.0) * T::PI()).recip(),
            e_charge: T::one(),
        }
    }

    /// CODATA 2018 values with the electron mass; ω = 1 s⁻¹.
    pub fn si() -> Self {
        PhysicalConstants {
            hbar: lit(1.054_571_817e-34),
            mass: lit(9.109_383_701_5e-31),
            omega: T::one(),
            eps0: lit(8.854_187_812_8e-12),
            e_charge: lit(1.602_176_634e-19),
        }
    }

    /// Bohr radius 4πε₀ħ²/(m e²).
    pub fn a0(&self) -> T {
        lit::<T>(4.0) * T::PI() * self.eps0 * self.hbar * self.hbar / (self.mass * self.e_charge * self.e_charge)
    }

    /// ħ/m
    pub fn hm(&self) -> T {
        self.hbar / self.mass
    }

    /// mω/ħ, the inverse squared oscillator length.
    pub fn k_osc(&self) -> T {
        self.mass * self.omega / self.hbar
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.hbar, self.mass, self.omega, self.eps0, self.e_charge];
        if all.iter().all(|&c| c > T::zero() && c.is_finite()) {
            Ok(())
        } else {
            Err(Error::InvalidInput("physical constants must be strictly positive".into()))
        }
    }
}

impl<T: Primitive> Default for PhysicalConstants<T> {
    fn default() -> Self {
        Self::natural()
    }
}
