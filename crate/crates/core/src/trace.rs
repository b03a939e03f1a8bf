//! Records of applied moves.

use serde::{Deserialize, Serialize};

use crate::pattern::{GluingPattern, Pos};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Surgery,
    Simplify,
    Split,
    Sum,
}

/// One line of a trace: `{op, args, before, after}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub op: MoveKind,
    pub args: Vec<Pos>,
    pub before: Vec<i32>,
    pub after: Vec<i32>,
}

impl MoveRecord {
    pub fn new(op: MoveKind, args: Vec<Pos>, before: &GluingPattern, after: &GluingPattern) -> Self {
        MoveRecord {
            op,
            args,
            before: before.word().to_vec(),
            after: after.word().to_vec(),
        }
    }

    pub fn is_surgery(&self) -> bool {
        matches!(self.op, MoveKind::Surgery | MoveKind::Simplify)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    NonSimplifiable,
    AlmostToral,
    Toral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageMarker {
    pub stage: Stage,
    /// Number of steps already applied when the stage was first reached.
    pub step: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<MoveRecord>,
    pub stage_markers: Vec<StageMarker>,
    pub surgery_count: usize,
}

impl ReductionTrace {
    pub fn push(&mut self, rec: MoveRecord) {
        if rec.is_surgery() {
            self.surgery_count += 1;
        }
        self.steps.push(rec);
    }

    pub fn mark(&mut self, stage: Stage) {
        if !self.stage_markers.iter().any(|m| m.stage == stage) {
            self.stage_markers.push(StageMarker {
                stage,
                step: self.steps.len(),
            });
        }
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        let offset = self.steps.len();
        for m in other.stage_markers {
            if !self.stage_markers.iter().any(|x| x.stage == m.stage) {
                self.stage_markers.push(StageMarker {
                    stage: m.stage,
                    step: m.step + offset,
                });
            }
        }
        self.surgery_count += other.surgery_count;
        self.steps.extend(other.steps);
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// JSON lines, one move per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("move records serialize"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_json_shape() {
        let t = GluingPattern::torus();
        let r = MoveRecord::new(MoveKind::Split, vec![6], &t, &t);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"op":"split","args":[6],"before":[1,2,-1,-2],"after":[1,2,-1,-2]}"#);
        let back: MoveRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
