use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::diagrams::ChordDiagram;
use crate::error::Error;
use crate::Rational;

/// A finite rational linear combination of degree-`m` chord diagrams.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagramSum {
    degree: usize,
    terms: BTreeMap<ChordDiagram, Rational>,
}

impl DiagramSum {
    pub fn zero(degree: usize) -> Self {
        DiagramSum { degree, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: ChordDiagram) -> Self {
        Self::term(d, Rational::one())
    }

    pub fn term(d: ChordDiagram, coeff: Rational) -> Self {
        let mut s = Self::zero(d.degree());
        s.add_term(d, coeff);
        s
    }

    /// The unit of the algebra, `1 * cd[]`.
    pub fn one() -> Self {
        Self::from_diagram(ChordDiagram::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&ChordDiagram, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &ChordDiagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff * d`; panics if `d` has the wrong degree.
    pub fn add_term(&mut self, d: ChordDiagram, coeff: Rational) {
        assert_eq!(d.degree(), self.degree, "diagram degree does not match sum degree");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, coeff);
            }
        }
    }

    /// `self += coeff * other`; panics on a degree mismatch.
    pub fn add_scaled(&mut self, coeff: &Rational, other: &DiagramSum) {
        assert_eq!(self.degree, other.degree, "degree mismatch in diagram sum");
        if coeff.is_zero() {
            return;
        }
        for (d, c) in &other.terms {
            self.add_term(d.clone(), coeff * c);
        }
    }

    pub fn checked_add(&self, other: &DiagramSum) -> Result<DiagramSum, Error> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &DiagramSum) -> Result<DiagramSum, Error> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        Ok(out)
    }

    pub(crate) fn check_degree(&self, other: &DiagramSum) -> Result<(), Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn scaled(&self, coeff: &Rational) -> DiagramSum {
        let mut out = DiagramSum::zero(self.degree);
        out.add_scaled(coeff, self);
        out
    }

    pub fn neg(&self) -> DiagramSum {
        self.scaled(&-Rational::one())
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Applies a linear map defined on single diagrams.
    pub fn map_linear(&self, target_degree: usize, mut f: impl FnMut(&ChordDiagram) -> DiagramSum) -> DiagramSum {
        let mut out = DiagramSum::zero(target_degree);
        for (d, c) in &self.terms {
            out.add_scaled(c, &f(d));
        }
        out
    }
}

impl fmt::Display for DiagramSum {
    /// Terms are printed in descending encoding order, e.g.
    /// `8*cd[0-2,1-3] + 8*cd[0-1,2-3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if mag.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "{mag}*{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}
