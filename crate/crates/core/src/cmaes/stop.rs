use std::fmt;

/// One of the four termination tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StopCriterion {
    NoEffectAxis,
    NoEffectCoord,
    TolFunTolX,
    TolXUp,
}

impl StopCriterion {
    /// `TolXUp` signals divergence and asks for a restart; the others mean
    /// the run has converged as far as it can.
    pub fn is_exceptional(self) -> bool {
        matches!(self, StopCriterion::TolXUp)
    }
}

impl fmt::Display for StopCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StopCriterion::NoEffectAxis => "NoEffectAxis",
            StopCriterion::NoEffectCoord => "NoEffectCoord",
            StopCriterion::TolFunTolX => "TolFun&TolX",
            StopCriterion::TolXUp => "TolXUp",
        };
        f.write_str(s)
    }
}

/// The criteria that fired after one generation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopReport {
    pub triggered: Vec<StopCriterion>,
}

impl StopReport {
    pub fn none() -> Self {
        StopReport::default()
    }

    pub fn is_empty(&self) -> bool {
        self.triggered.is_empty()
    }

    pub fn contains(&self, c: StopCriterion) -> bool {
        self.triggered.contains(&c)
    }

    pub fn exceptional(&self) -> bool {
        self.triggered.iter().any(|c| c.is_exceptional())
    }

    pub fn conventional(&self) -> bool {
        self.triggered.iter().any(|c| !c.is_exceptional())
    }
}
