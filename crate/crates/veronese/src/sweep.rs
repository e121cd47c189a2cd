//! Parallel sweeps over a window. Values are computed on the rayon pool and
//! assembled in window order, so the result does not depend on scheduling.

use rayon::prelude::*;
use veronese_core::{DominantWeight, Engine, Error, Result, VirtualCharacter, WeightWindow};

/// Which multiplicity a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `s_λ`, multiplicity in `Sym(Sym^d V)`.
    S,
    /// `a_λ = s_{λ−δ}`.
    APleth,
    /// `p_λ = s_λ − a_λ`.
    P,
    /// `ν_μ`; the window's `n` is the length of `μ`.
    Nu,
    M,
    E,
    /// `a_λ^j`, the character of `D_j`.
    Aj(u32),
}

impl Kind {
    pub fn name(self) -> String {
        match self {
            Kind::S => "s".into(),
            Kind::APleth => "a_pleth".into(),
            Kind::P => "p".into(),
            Kind::Nu => "nu".into(),
            Kind::M => "m".into(),
            Kind::E => "e".into(),
            Kind::Aj(j) => format!("D{j}"),
        }
    }

    pub fn j(self) -> Option<u32> {
        match self {
            Kind::Aj(j) => Some(j),
            _ => None,
        }
    }
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("multiplicity"))
}

fn value(engine: &Engine, kind: Kind, d: u32, lambda: &DominantWeight) -> Result<i64> {
    match kind {
        Kind::S => to_i64(engine.s_mult(lambda, d)?),
        Kind::APleth => to_i64(engine.a_pleth(lambda, d)?),
        Kind::P => {
            if lambda.is_partition() {
                to_i64(engine.p_mult(lambda, d)?)
            } else {
                Ok(0)
            }
        }
        Kind::Nu => to_i64(engine.nu_stable(lambda.parts(), d)?),
        Kind::M => engine.m_lambda(lambda, d),
        Kind::E => to_i64(engine.e_lambda(lambda, d)?),
        Kind::Aj(j) => engine.a_lambda_j(lambda, j, d),
    }
}

/// The table of `kind` over `window`. For [`Kind::Aj`] the window is
/// restricted to `|λ| ≡ j (mod d)`, and that restriction is part of the
/// returned character's window.
pub fn table(engine: &Engine, kind: Kind, d: u32, window: &WeightWindow) -> Result<VirtualCharacter> {
    let window = match kind {
        Kind::Aj(j) => match window.residue {
            Some(r) if r.j != j || r.d != d => {
                return Err(Error::InvalidParameter(format!(
                    "window already restricted to {} mod {}",
                    r.j, r.d
                )))
            }
            _ => window.with_residue(j, d)?,
        },
        _ => *window,
    };
    if matches!(kind, Kind::M | Kind::E | Kind::Aj(_)) {
        engine.prepare(d, &window)?;
    }
    let weights = window.weights()?;
    let values: Vec<Result<i64>> = weights.par_iter().map(|l| value(engine, kind, d, l)).collect();
    let mut out = VirtualCharacter::windowed(window);
    for (lambda, v) in weights.into_iter().zip(values) {
        out.add(lambda, v?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let engine = Engine::default();
        let win = WeightWindow::new(3, 6, -3).unwrap();
        for j in 0..2 {
            assert_eq!(
                table(&engine, Kind::Aj(j), 2, &win).unwrap(),
                engine.dj_character(j, 2, &win).unwrap()
            );
        }
        assert_eq!(
            table(&engine, Kind::E, 2, &win).unwrap(),
            engine.e_character(2, &win).unwrap()
        );
    }

    #[test]
    fn m_table_has_signs() {
        let engine = Engine::default();
        let win = WeightWindow::new(2, 4, 0).unwrap();
        let t = table(&engine, Kind::M, 2, &win).unwrap();
        let w = |p: &[i64]| DominantWeight::new(p.to_vec()).unwrap();
        assert_eq!(t.coefficient(&w(&[3, 3])), -1);
        assert_eq!(t.coefficient(&w(&[4, 2])), 1);
    }
}
