//! Arrow diagrams, Gauss diagram formulas, and their text format.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Sign requirement on one arrow of a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignConstraint {
    Plus,
    Minus,
    /// Summed over both signs, each weighted by the sign.
    Free,
}

impl SignConstraint {
    /// Weight contributed by an arrow of sign `s`.
    pub fn weight(self, s: i8) -> i8 {
        match self {
            SignConstraint::Free => s,
            SignConstraint::Plus => (s > 0) as i8,
            SignConstraint::Minus => (s < 0) as i8,
        }
    }
}

/// A weighted arrow diagram on a based, counterclockwise circle.
///
/// Arrows run from the over-passage (tail) to the under-passage (head).
/// Positions are `0..2*arity` in order from the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowTerm {
    arrows: Vec<(usize, usize)>,
    constraints: Vec<SignConstraint>,
    coefficient: Rational,
}

impl ArrowTerm {
    pub fn new(
        arrows: Vec<(usize, usize)>,
        constraints: Vec<SignConstraint>,
        coefficient: Rational,
    ) -> Result<Self> {
        let a = arrows.len();
        if a == 0 {
            return Err(Error::Formula("a term needs at least one arrow".into()));
        }
        if constraints.len() != a {
            return Err(Error::Formula(format!("{} constraints for {a} arrows", constraints.len())));
        }
        let mut seen = vec![false; 2 * a];
        for &(t, h) in &arrows {
            for p in [t, h] {
                if p >= 2 * a || std::mem::replace(&mut seen[p], true) {
                    return Err(Error::Formula(format!(
                        "arrow endpoints must be distinct positions in 0..{}",
                        2 * a
                    )));
                }
            }
        }
        Ok(ArrowTerm { arrows, constraints, coefficient })
    }

    /// Builds a term from endpoint angles in degrees on a circle whose base
    /// point sits at 90 degrees, read counterclockwise.
    pub fn from_angles(
        arrows: &[(i32, i32)],
        constraints: &[SignConstraint],
        coefficient: Rational,
    ) -> Result<Self> {
        let key = |deg: i32| (deg - 90).rem_euclid(360);
        let mut keys: Vec<i32> = arrows.iter().flat_map(|&(t, h)| [key(t), key(h)]).collect();
        keys.sort_unstable();
        keys.dedup();
        if keys.len() != 2 * arrows.len() {
            return Err(Error::Formula("coinciding arrow endpoints".into()));
        }
        let pos = |deg: i32| keys.binary_search(&key(deg)).expect("key present");
        ArrowTerm::new(
            arrows.iter().map(|&(t, h)| (pos(t), pos(h))).collect(),
            constraints.to_vec(),
            coefficient,
        )
    }

    pub fn arity(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn constraints(&self) -> &[SignConstraint] {
        &self.constraints
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn with_coefficient(&self, coefficient: Rational) -> ArrowTerm {
        ArrowTerm { coefficient, ..self.clone() }
    }

    /// Arrows sorted by first endpoint, as `(first, second, tail_first, constraint)`.
    pub(crate) fn normalized(&self) -> Vec<(usize, usize, bool, SignConstraint)> {
        let mut v: Vec<_> = self
            .arrows
            .iter()
            .zip(&self.constraints)
            .map(|(&(t, h), &c)| (t.min(h), t.max(h), t < h, c))
            .collect();
        v.sort_unstable_by_key(|x| x.0);
        v
    }

    /// Chord shape ignoring directions and signs: arrow index (by first
    /// endpoint) at each position.
    pub(crate) fn shape(&self) -> Vec<u8> {
        let norm = self.normalized();
        let mut word = vec![0u8; 2 * norm.len()];
        for (i, &(f, s, _, _)) in norm.iter().enumerate() {
            word[f] = i as u8;
            word[s] = i as u8;
        }
        word
    }
}

/// A linear combination of arrow diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussFormula {
    terms: Vec<ArrowTerm>,
}

impl GaussFormula {
    pub fn new(terms: Vec<ArrowTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Formula("a formula needs at least one term".into()));
        }
        Ok(GaussFormula { terms })
    }

    pub fn terms(&self) -> &[ArrowTerm] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.iter().map(|t| t.arity()).max().unwrap_or(0)
    }

    pub fn scaled(&self, q: &Rational) -> GaussFormula {
        GaussFormula {
            terms: self.terms.iter().map(|t| t.with_coefficient(t.coefficient() * q)).collect(),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient().is_integer())
    }
}

use SignConstraint::{Free, Minus, Plus};

/// The crossed two-arrow diagram whose first-met arrow is ascending and
/// second-met arrow is descending.
const C2_ANGLES: [(i32, i32); 2] = [(225, 45), (315, 135)];

/// The ten unsigned three-arrow diagrams of the `v3` formula, as
/// `(tail, head)` angle pairs.
const V3_THREE_ARROW: [[(i32, i32); 3]; 10] = [
    [(0, 180), (120, 300), (60, 240)],
    [(180, 0), (300, 120), (240, 60)],
    [(0, 180), (120, 300), (240, 60)],
    [(180, 0), (300, 120), (60, 240)],
    [(120, 300), (10, 230), (50, 190)],
    [(300, 120), (230, 10), (190, 50)],
    [(60, 240), (310, 170), (130, 350)],
    [(240, 60), (170, 310), (350, 130)],
    [(0, 180), (110, 250), (290, 70)],
    [(180, 0), (250, 110), (70, 290)],
];

/// Signed two-arrow terms of the `v3` formula: angles, signs, coefficient.
const V3_TWO_ARROW: [([(i32, i32); 2], [SignConstraint; 2], i64); 4] = [
    ([(45, 225), (135, 315)], [Plus, Plus], 1),
    ([(45, 225), (135, 315)], [Plus, Minus], -1),
    ([(225, 45), (315, 135)], [Minus, Plus], 1),
    ([(225, 45), (315, 135)], [Minus, Minus], -1),
];

/// `c2` as the single unsigned crossed-arrow diagram.
pub fn c2_formula() -> GaussFormula {
    GaussFormula::new(vec![
        ArrowTerm::from_angles(&C2_ANGLES, &[Free, Free], Rational::one()).expect("static table")
    ])
    .expect("nonempty")
}

/// The fourteen-term Goussarov-Polyak-Viro sum: ten unsigned three-arrow
/// diagrams and four signed two-arrow diagrams. Its value is `2 v3`.
pub fn gpv_formula() -> GaussFormula {
    let mut terms: Vec<ArrowTerm> = V3_THREE_ARROW
        .iter()
        .map(|a| ArrowTerm::from_angles(a, &[Free; 3], Rational::one()).expect("static table"))
        .collect();
    terms.extend(V3_TWO_ARROW.iter().map(|(a, s, c)| {
        ArrowTerm::from_angles(a, s, rational::int(*c)).expect("static table")
    }));
    GaussFormula::new(terms).expect("nonempty")
}

/// `v3` as half of [`gpv_formula`].
pub fn v3_formula() -> GaussFormula {
    gpv_formula().scaled(&rational::frac(1, 2))
}

/// The twelve distinct unsigned arrow diagrams appearing in the `v3` formula:
/// the ten three-arrow ones, then the two crossed two-arrow ones.
pub fn v3_arrow_diagrams() -> Vec<ArrowTerm> {
    let mut out: Vec<ArrowTerm> = V3_THREE_ARROW
        .iter()
        .map(|a| ArrowTerm::from_angles(a, &[Free; 3], Rational::one()).expect("static table"))
        .collect();
    out.push(ArrowTerm::from_angles(&V3_TWO_ARROW[0].0, &[Free; 2], Rational::one()).unwrap());
    out.push(ArrowTerm::from_angles(&V3_TWO_ARROW[2].0, &[Free; 2], Rational::one()).unwrap());
    out
}

// Text format, one term per line:
//
//     <coefficient> <tail>-><head>[+|-] ...
//
// Positions are 1-based around the circle from the base point; an arrow
// without a trailing sign is summed over both signs. `#` starts a comment.

impl FromStr for ArrowTerm {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut toks = line.split_whitespace();
        let coef = toks.next().ok_or_else(|| Error::Formula("empty term".into()))?;
        let coefficient = rational::parse(coef)
            .ok_or_else(|| Error::Formula(format!("bad coefficient {coef:?}")))?;
        let mut arrows = Vec::new();
        let mut constraints = Vec::new();
        for tok in toks {
            let bad = || Error::Formula(format!("bad arrow {tok:?}"));
            let (body, c) = match tok.strip_suffix('+') {
                Some(b) => (b, Plus),
                None => match tok.strip_suffix('-') {
                    Some(b) => (b, Minus),
                    None => (tok, Free),
                },
            };
            let (t, h) = body.split_once("->").ok_or_else(bad)?;
            let t: usize = t.parse().map_err(|_| bad())?;
            let h: usize = h.parse().map_err(|_| bad())?;
            if t == 0 || h == 0 {
                return Err(Error::Formula("positions are 1-based".into()));
            }
            arrows.push((t - 1, h - 1));
            constraints.push(c);
        }
        ArrowTerm::new(arrows, constraints, coefficient)
    }
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational::to_string(&self.coefficient))?;
        for (&(t, h), c) in self.arrows.iter().zip(&self.constraints) {
            let s = match c {
                Plus => "+",
                Minus => "-",
                Free => "",
            };
            write!(f, " {}->{}{s}", t + 1, h + 1)?;
        }
        Ok(())
    }
}

impl FromStr for GaussFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<ArrowTerm>>>()?;
        if terms.iter().any(|t| t.coefficient().is_zero()) {
            return Err(Error::Formula("zero coefficient".into()));
        }
        GaussFormula::new(terms)
    }
}

impl fmt::Display for GaussFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}
