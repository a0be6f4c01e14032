//! Germs of charts continued across walls, holonomy of loops as words in the
//! group generated by all four actions, and a light word calculus.
//!
//! A germ over region `R` is `frame ∘ φ_R` where `φ_R` is the region's base
//! chart. Crossing a wall from `a` to `b` with deck choice `r` (in the wall
//! chart) replaces the frame by `frame ∘ chart_a ∘ r ∘ chart_b⁻¹`, so frames
//! compose on the right and left multiplication commutes with continuation.

use std::fmt;

use crate::assembly::LieGeneratedStructure;
use crate::error::{Error, Result};
use crate::group_actions::{GroupElement, Tag};
use crate::model_space::UPoint;

/// Letters closer than this to a translation or the identity are snapped.
pub const SNAP_TOL: f64 = 1e-14;

/// A free word; evaluation applies the last letter first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Word {
    pub letters: Vec<GroupElement>,
}

impl Word {
    pub fn new(letters: Vec<GroupElement>) -> Self {
        Word { letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Appends on the right, skipping exact identities.
    fn push(&mut self, g: GroupElement) {
        if !g.is_identity(0.0) {
            self.letters.push(g);
        }
    }

    /// `self ∘ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(GroupElement::inverse).collect() }
    }

    pub fn evaluate(&self, p: &UPoint) -> Result<UPoint> {
        evaluate_word(self, p)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(identity)");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl From<GroupElement> for Word {
    fn from(g: GroupElement) -> Self {
        Word { letters: vec![g] }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Germ {
    pub region: usize,
    pub frame: Word,
}

impl Germ {
    /// The base chart of the structure's base region.
    pub fn base(s: &LieGeneratedStructure) -> Self {
        Germ { region: s.base_region, frame: Word::default() }
    }

    /// `h ∘ germ`.
    pub fn moved_by(&self, h: &Word) -> Germ {
        Germ { region: self.region, frame: h.concat(&self.frame) }
    }
}

/// The deck choice made when crossing a wall, in the wall chart.
#[derive(Debug, Clone, PartialEq)]
pub enum ReductionChoice {
    Identity,
    Generator { index: usize, inverse: bool },
    Explicit(GroupElement),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathStep {
    pub wall: usize,
    pub reduction: ReductionChoice,
}

impl PathStep {
    pub fn cross(wall: usize) -> Self {
        PathStep { wall, reduction: ReductionChoice::Identity }
    }

    pub fn with_generator(wall: usize, index: usize, inverse: bool) -> Self {
        PathStep { wall, reduction: ReductionChoice::Generator { index, inverse } }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PathSpec {
    pub steps: Vec<PathStep>,
}

impl PathSpec {
    pub fn new(steps: Vec<PathStep>) -> Self {
        PathSpec { steps }
    }
}

pub fn continue_germ(s: &LieGeneratedStructure, g: &Germ, p: &PathSpec) -> Result<Germ> {
    let mut region = g.region;
    let mut frame = g.frame.clone();
    for (i, step) in p.steps.iter().enumerate() {
        let w = s.intersections.get(step.wall).ok_or_else(|| {
            Error::Path(format!("step {i}: no wall w{} ({} walls)", step.wall, s.intersections.len()))
        })?;
        let from_a = if region == w.a {
            true
        } else if region == w.b {
            false
        } else {
            return Err(Error::Path(format!(
                "step {i}: wall w{} does not border region {} ({})",
                step.wall,
                region,
                s.region_name(region)
            )));
        };
        let (chart_from, chart_to) = if from_a { (w.chart_a, w.chart_b) } else { (w.chart_b, w.chart_a) };
        let deck = match &step.reduction {
            ReductionChoice::Identity => None,
            ReductionChoice::Generator { index, inverse } => {
                let r = w.reductions.get(*index).ok_or_else(|| {
                    Error::Index(format!(
                        "step {i}: wall w{} has {} reduction generators, no t{index}",
                        step.wall,
                        w.reductions.len()
                    ))
                })?;
                let rep = if from_a { r.in_a } else { r.in_b };
                Some(if *inverse { rep.inverse() } else { rep })
            }
            ReductionChoice::Explicit(e) => Some(*e),
        };
        frame.push(chart_from);
        if let Some(d) = deck {
            frame.push(d);
        }
        frame.push(chart_to.inverse());
        region = if from_a { w.b } else { w.a };
    }
    Ok(Germ { region, frame })
}

/// Holonomy word of a loop at the base region.
pub fn holonomy(s: &LieGeneratedStructure, lp: &PathSpec) -> Result<Word> {
    let end = continue_germ(s, &Germ::base(s), lp)?;
    if end.region != s.base_region {
        return Err(Error::Path(format!(
            "loop ends in region {} ({}), not at the base region {}",
            end.region,
            s.region_name(end.region),
            s.base_region
        )));
    }
    Ok(reduce_word(&end.frame))
}

pub fn evaluate_word(w: &Word, p: &UPoint) -> Result<UPoint> {
    w.letters.iter().rev().try_fold(*p, |q, g| g.act(&q))
}

/// Translations are written in the `H3` group so that they merge with each
/// other whatever their original tag.
fn canonical(g: GroupElement) -> Option<GroupElement> {
    if g.is_identity(SNAP_TOL) {
        return None;
    }
    Some(match g.as_translation(SNAP_TOL) {
        Some(v) => GroupElement::embed_translation(v, Tag::H3),
        None => g,
    })
}

fn is_translation(g: &GroupElement) -> bool {
    g.as_translation(0.0).is_some()
}

/// `a ∘ b` when the two letters can be written in one group.
fn merge(a: &GroupElement, b: &GroupElement) -> Option<GroupElement> {
    if a.tag() == b.tag() {
        return a.compose(b).ok();
    }
    if is_translation(a) {
        let v = a.as_translation(0.0)?;
        return GroupElement::embed_translation(v, b.tag()).compose(b).ok();
    }
    if is_translation(b) {
        let v = b.as_translation(0.0)?;
        return a.compose(&GroupElement::embed_translation(v, a.tag())).ok();
    }
    None
}

/// Merges adjacent letters that live in a common group and drops identities.
pub fn reduce_word(w: &Word) -> Word {
    let mut out: Vec<GroupElement> = Vec::with_capacity(w.len());
    for g in &w.letters {
        let mut cur = canonical(*g);
        while let (Some(c), Some(top)) = (cur, out.last()) {
            match merge(top, &c) {
                Some(m) => {
                    out.pop();
                    cur = canonical(m);
                }
                None => break,
            }
        }
        if let Some(c) = cur {
            out.push(c);
        }
    }
    Word { letters: out }
}
