//! Monomial orders on graded free modules.
//!
//! The ring order is always graded reverse lexicographic with `x > y > z`.
//! Module orders refine it; among positions the lower index is larger.

use std::sync::Arc;

use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Compare twisted degree, then the monomial, then the position.
    TermOverPosition,
    /// Compare the position first, then the monomial.
    PositionOverTerm,
    /// Induced from a map to another free module: `m e_k` is compared through
    /// `m * lead(image_k)` in the target's term-over-position order, ties going
    /// to the lower index.
    Schreyer(Arc<SchreyerFrame>),
}

/// Leading terms of the images of the source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub target_twists: Vec<i32>,
    pub leads: Vec<(Monomial, usize)>,
}

const DEG_OFFSET: i64 = 1 << 15;

fn top_key(twists: &[i32], m: &Monomial, pos: usize) -> u128 {
    let tdeg = (m.degree() as i64 + twists[pos] as i64 + DEG_OFFSET) as u128;
    (tdeg << 80) | ((m.grevlex_key() as u128) << 16) | (0xFFFF - pos as u128)
}

impl MonomialOrder {
    /// An integer key whose natural order is this term order. Keys are
    /// injective on `(monomial, position)` pairs.
    pub(crate) fn key(&self, twists: &[i32], m: &Monomial, pos: usize) -> u128 {
        match self {
            MonomialOrder::TermOverPosition => top_key(twists, m, pos),
            MonomialOrder::PositionOverTerm => ((0xFFFF - pos as u128) << 64) | m.grevlex_key() as u128,
            MonomialOrder::Schreyer(frame) => {
                let (lm, lp) = frame.leads[pos];
                (top_key(&frame.target_twists, &m.mul(&lm), lp) << 16) | (0xFFFF - pos as u128)
            }
        }
    }
}
