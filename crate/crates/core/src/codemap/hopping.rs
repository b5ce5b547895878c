//! Charges, their identification across the map, and elementary hoppers.

use std::fmt;

use serde::Serialize;

use crate::colex::{Colex, Color};
use crate::error::{Error, Result};
use crate::stabilizers::color_space;
use crate::symplectic::PauliOp;

/// Electric charges are created by Z errors, magnetic charges by X errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Charge {
    Electric,
    Magnetic,
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Charge::Electric => "ε",
            Charge::Magnetic => "μ",
        })
    }
}

/// A charge living on faces of one color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredCharge {
    pub charge: Charge,
    pub color: Color,
}

impl fmt::Display for ColoredCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.charge, self.color)
    }
}

/// Fixed pairing of color-code charges with surface-code charges for contraction color `c`:
/// `ε₁ ≡ ε_c`, `μ₁ ≡ μ_{c′}`, `ε₂ ≡ μ_c`, `μ₂ ≡ ε_{c′}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeAssignment {
    color: Color,
}

impl ChargeAssignment {
    pub fn new(color: Color) -> Self {
        Self { color }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    /// The color-code charge identified with `charge` on surface copy `copy`.
    pub fn color_charge(&self, copy: u8, charge: Charge) -> Option<ColoredCharge> {
        let (c, cp) = (self.color, self.color.next());
        let (charge, color) = match (copy, charge) {
            (1, Charge::Electric) => (Charge::Electric, c),
            (1, Charge::Magnetic) => (Charge::Magnetic, cp),
            (2, Charge::Electric) => (Charge::Magnetic, c),
            (2, Charge::Magnetic) => (Charge::Electric, cp),
            _ => return None,
        };
        Some(ColoredCharge { charge, color })
    }

    /// The surface copy and charge carrying `cc`; `None` for `c″` charges, which are composites.
    pub fn surface_charge(&self, cc: ColoredCharge) -> Option<(u8, Charge)> {
        [1u8, 2]
            .into_iter()
            .flat_map(|copy| [Charge::Electric, Charge::Magnetic].map(|ch| (copy, ch)))
            .find(|&(copy, ch)| self.color_charge(copy, ch) == Some(cc))
    }
}

/// Elementary hopper moving a `color` charge across the edge `(u, v)`.
///
/// A charge of color `c` sits on `c`-faces, and the edge joining two `c`-faces
/// is itself `c`-colored; electric charges move with `Z_u Z_v`, magnetic with `X_u X_v`.
pub fn hopping_operator(g: &Colex, u: usize, v: usize, charge: Charge, color: Color) -> Result<PauliOp> {
    let e = g.edge_between(u, v).ok_or_else(|| Error::WrongEdge(u, v, "no such edge".into()))?;
    let found = g.edge(e).color;
    if found != color {
        return Err(Error::WrongEdge(
            u,
            v,
            format!("edge is {found}-colored but a {color} charge was requested"),
        ));
    }
    let space = color_space(g);
    Ok(match charge {
        Charge::Electric => PauliOp::z_on(space, [u, v]),
        Charge::Magnetic => PauliOp::x_on(space, [u, v]),
    })
}
