//! Configuration tuples of the Professor's cube and their validity
//! conditions.

use serde::Serialize;

use super::{PieceClass, StickerModel};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `(x, σ_c, y, σ_e, τ, ρ_c, ρ_e)`: corner twists and positions, central
/// edge flips and positions, and three permutations of 24 pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigTuple {
    pub x: Vec<u8>,
    pub sigma_c: Permutation,
    pub y: Vec<u8>,
    pub sigma_e: Permutation,
    pub tau: Permutation,
    pub rho_c: Permutation,
    pub rho_e: Permutation,
}

impl ConfigTuple {
    /// The initial configuration: identities and zero vectors.
    pub fn initial() -> Self {
        ConfigTuple {
            x: vec![0; 8],
            sigma_c: Permutation::identity(8),
            y: vec![0; 12],
            sigma_e: Permutation::identity(12),
            tau: Permutation::identity(24),
            rho_c: Permutation::identity(24),
            rho_e: Permutation::identity(24),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let ok = self.x.len() == 8
            && self.x.iter().all(|&v| v < 3)
            && self.sigma_c.degree() == 8
            && self.y.len() == 12
            && self.y.iter().all(|&v| v < 2)
            && self.sigma_e.degree() == 12
            && [&self.tau, &self.rho_c, &self.rho_e]
                .iter()
                .all(|p| p.degree() == 24);
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistent("tuple has the wrong shape".into()))
        }
    }
}

/// Which 24-piece class each of `τ`, `ρ_c`, `ρ_e` describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassAssignment {
    pub tau: PieceClass,
    pub rho_c: PieceClass,
    pub rho_e: PieceClass,
}

impl ClassAssignment {
    /// All six ways to name the wing, plus-centre and x-centre classes.
    pub fn all() -> Vec<ClassAssignment> {
        use PieceClass::*;
        let three = [Wing, PlusCenter, XCenter];
        let mut out = Vec::new();
        for &tau in &three {
            for &rho_c in &three {
                for &rho_e in &three {
                    if tau != rho_c && tau != rho_e && rho_c != rho_e {
                        out.push(ClassAssignment { tau, rho_c, rho_e });
                    }
                }
            }
        }
        out
    }
}

/// The four conditions evaluated literally, and optionally the verdict of
/// the sticker group on the encoded permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub twist_sum_zero: bool,
    pub flip_sum_zero: bool,
    pub corner_edge_tau_signs_agree: bool,
    pub tau_sign_is_rho_product: bool,
    pub valid: bool,
    pub member: Option<bool>,
}

impl StickerModel {
    fn require_professor(&self) -> Result<()> {
        if self.size != 5 {
            return Err(Error::Degenerate(
                "configuration tuples are defined for the 5x5x5 model",
            ));
        }
        Ok(())
    }

    /// Reads the configuration tuple off a facet permutation.
    pub fn read_config(&self, p: &Permutation, assign: ClassAssignment) -> Result<ConfigTuple> {
        self.require_professor()?;
        let oriented = |class: PieceClass, len: usize| -> Result<(Vec<u8>, Permutation)> {
            let images = self.piece_images(p, class)?;
            let mut twist = vec![0u8; len];
            let mut sigma = Vec::with_capacity(len);
            for &(target, k) in &images {
                twist[target] = k as u8;
                sigma.push(target + 1);
            }
            Ok((
                twist,
                Permutation::from_images(&sigma).map_err(|_| Error::BlockViolation)?,
            ))
        };
        let plain = |class: PieceClass| -> Result<Permutation> {
            let images = self.piece_images(p, class)?;
            if images.iter().any(|&(_, k)| k != 0) {
                return Err(Error::Inconsistent(format!(
                    "{class} pieces are reoriented"
                )));
            }
            Permutation::from_images(&images.iter().map(|&(t, _)| t + 1).collect::<Vec<_>>())
                .map_err(|_| Error::BlockViolation)
        };
        let (x, sigma_c) = oriented(PieceClass::Corner, 8)?;
        let (y, sigma_e) = oriented(PieceClass::CentralEdge, 12)?;
        Ok(ConfigTuple {
            x,
            sigma_c,
            y,
            sigma_e,
            tau: plain(assign.tau)?,
            rho_c: plain(assign.rho_c)?,
            rho_e: plain(assign.rho_e)?,
        })
    }

    /// Encodes a tuple as a facet permutation through the solved-state table.
    pub fn encode_config(
        &self,
        config: &ConfigTuple,
        assign: ClassAssignment,
    ) -> Result<Permutation> {
        self.require_professor()?;
        config.check_shape()?;
        let mut images: Vec<usize> = (1..=self.degree).collect();
        let mut place =
            |class: PieceClass, sigma: &Permutation, twist: Option<&[u8]>| -> Result<()> {
                let cls = self
                    .class(class)
                    .ok_or(Error::Degenerate("missing class"))?;
                if cls.pieces.len() != sigma.degree() {
                    return Err(Error::Inconsistent(format!(
                        "{class} permutation has the wrong degree"
                    )));
                }
                for (i, piece) in cls.pieces.iter().enumerate() {
                    let j = sigma.image(i + 1) - 1;
                    let shift = twist.map_or(0, |t| t[j] as usize);
                    let target = &cls.pieces[j];
                    for (k, &s) in piece.iter().enumerate() {
                        images[s - 1] = target[(k + shift) % piece.len()];
                    }
                }
                Ok(())
            };
        place(PieceClass::Corner, &config.sigma_c, Some(&config.x))?;
        place(PieceClass::CentralEdge, &config.sigma_e, Some(&config.y))?;
        place(assign.tau, &config.tau, None)?;
        place(assign.rho_c, &config.rho_c, None)?;
        place(assign.rho_e, &config.rho_e, None)?;
        Permutation::from_images(&images)
            .map_err(|_| Error::Inconsistent("class assignment does not cover all pieces".into()))
    }

    /// Evaluates the four validity conditions; with `cross_check`, also
    /// encodes the tuple and asks the sticker group.
    pub fn validity_check(
        &self,
        config: &ConfigTuple,
        assign: ClassAssignment,
        cross_check: bool,
    ) -> Result<ValidityReport> {
        self.require_professor()?;
        config.check_shape()?;
        let twist: u32 = config.x.iter().map(|&v| v as u32).sum();
        let flip: u32 = config.y.iter().map(|&v| v as u32).sum();
        let (sc, se, st) = (
            config.sigma_c.sign(),
            config.sigma_e.sign(),
            config.tau.sign(),
        );
        let c1 = twist.is_multiple_of(3);
        let c2 = flip.is_multiple_of(2);
        let c3 = sc == se && se == st;
        let c4 = st == config.rho_c.sign() * config.rho_e.sign();
        let member = if cross_check {
            let p = self.encode_config(config, assign)?;
            Some(self.group().contains(&p)?)
        } else {
            None
        };
        Ok(ValidityReport {
            twist_sum_zero: c1,
            flip_sum_zero: c2,
            corner_edge_tau_signs_agree: c3,
            tau_sign_is_rho_product: c4,
            valid: c1 && c2 && c3 && c4,
            member,
        })
    }

    /// Class assignments under which every generator, read as a tuple,
    /// satisfies the four conditions.
    pub fn consistent_assignments(&self) -> Result<Vec<ClassAssignment>> {
        self.require_professor()?;
        let mut out = Vec::new();
        'assign: for a in ClassAssignment::all() {
            for (_, g) in &self.generators {
                let t = self.read_config(g, a)?;
                if !self.validity_check(&t, a, false)?.valid {
                    continue 'assign;
                }
            }
            out.push(a);
        }
        Ok(out)
    }
}
