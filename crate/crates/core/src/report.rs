//! Results of identity checks.

use std::cmp::Ordering;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::scalar::Scalar;
use crate::space::{Element, SuperSpace};

/// Knobs shared by all checkers.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Counterexamples kept per report (at least one is always kept).
    pub max_counterexamples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_counterexamples: 16,
        }
    }
}

impl CheckOptions {
    pub fn with_cap(max_counterexamples: usize) -> Self {
        CheckOptions { max_counterexamples }
    }

    fn cap(&self) -> usize {
        self.max_counterexamples.max(1)
    }
}

/// One side of a checked equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Vector(Element),
    Scalar(Scalar),
}

impl Value {
    fn render(&self, space: &SuperSpace) -> String {
        match self {
            Value::Vector(e) => space.format_element(e),
            Value::Scalar(s) => s.to_string(),
        }
    }
}

impl From<Element> for Value {
    fn from(e: Element) -> Self {
        Value::Vector(e)
    }
}

impl From<Scalar> for Value {
    fn from(s: Scalar) -> Self {
        Value::Scalar(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    #[serde(skip)]
    pub tuple: Vec<usize>,
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    #[serde(rename = "lhs")]
    pub lhs_text: String,
    #[serde(rename = "rhs")]
    pub rhs_text: String,
    #[serde(skip)]
    pub lhs: Value,
    #[serde(skip)]
    pub rhs: Value,
}

/// Outcome of checking one identity (or a group of them) exhaustively.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub passed: bool,
    pub tuples_checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<CheckReport>,
}

impl CheckReport {
    /// A report that only aggregates `sections`; passes when all of them pass.
    pub fn composite(identity: impl Into<String>, sections: Vec<CheckReport>) -> Self {
        let passed = sections.iter().all(|s| s.passed);
        Self::summary(identity, passed, sections)
    }

    /// A report whose verdict is decided by the caller.
    pub fn summary(identity: impl Into<String>, passed: bool, sections: Vec<CheckReport>) -> Self {
        CheckReport {
            identity: identity.into(),
            passed,
            tuples_checked: sections.iter().map(|s| s.tuples_checked).sum(),
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            sections,
        }
    }

    /// A leaf report with no tuples, carrying a fixed verdict.
    pub fn verdict(identity: impl Into<String>, passed: bool, note: impl Into<String>) -> Self {
        CheckReport {
            identity: identity.into(),
            passed,
            tuples_checked: 0,
            failures: u64::from(!passed),
            counterexamples: Vec::new(),
            notes: vec![note.into()],
            sections: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn section(&self, identity: &str) -> Option<&CheckReport> {
        self.sections.iter().find(|s| s.identity == identity)
    }

    /// All failing tuples of this report, not including sections.
    pub fn witness_tuples(&self) -> Vec<Vec<usize>> {
        self.counterexamples.iter().map(|c| c.tuple.clone()).collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.sections.is_empty() || self.failures > 0 || self.tuples_checked > 0 && self.sections.is_empty() {
            let _ = writeln!(
                out,
                "{pad}[{tag}] {}: {} checked, {} failing",
                self.identity, self.tuples_checked, self.failures
            );
        } else {
            let _ = writeln!(out, "{pad}[{tag}] {}", self.identity);
        }
        for c in &self.counterexamples {
            let ctx = c.context.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default();
            let _ = writeln!(
                out,
                "{pad}    ({}){ctx}: lhs = {}, rhs = {}",
                c.args.join(", "),
                c.lhs_text,
                c.rhs_text
            );
        }
        if self.failures > self.counterexamples.len() as u64 {
            let _ = writeln!(
                out,
                "{pad}    ... {} more",
                self.failures - self.counterexamples.len() as u64
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "{pad}  note: {n}");
        }
        for s in &self.sections {
            s.render_into(out, depth + 1);
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug)]
pub(crate) struct RawExample {
    tuple: Vec<usize>,
    context: Option<String>,
    lhs: Value,
    rhs: Value,
}

impl RawExample {
    fn key_cmp(&self, other: &Self) -> Ordering {
        (&self.tuple, &self.context).cmp(&(&other.tuple, &other.context))
    }
}

/// Per-worker accumulator.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    checked: u64,
    failures: u64,
    examples: Vec<RawExample>,
    cap: usize,
}

impl Tally {
    pub(crate) fn new(cap: usize) -> Self {
        Tally {
            cap,
            ..Default::default()
        }
    }

    /// Records `lhs == rhs` for `tuple`.
    pub(crate) fn check(
        &mut self,
        tuple: &[usize],
        context: Option<String>,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        self.checked += 1;
        if lhs != rhs {
            self.fail(tuple, context, lhs, rhs);
        }
    }

    pub(crate) fn fail(&mut self, tuple: &[usize], context: Option<String>, lhs: Value, rhs: Value) {
        self.failures += 1;
        self.examples.push(RawExample {
            tuple: tuple.to_vec(),
            context,
            lhs,
            rhs,
        });
        if self.examples.len() > 4 * self.cap {
            self.trim();
        }
    }

    pub(crate) fn count(&mut self, n: u64) {
        self.checked += n;
    }

    fn trim(&mut self) {
        self.examples.sort_by(RawExample::key_cmp);
        self.examples.truncate(self.cap);
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.trim();
        self
    }

    pub(crate) fn finish(mut self, identity: impl Into<String>, space: &SuperSpace) -> CheckReport {
        self.trim();
        let counterexamples = self
            .examples
            .into_iter()
            .map(|e| Counterexample {
                args: space.labels_of(&e.tuple),
                lhs_text: e.lhs.render(space),
                rhs_text: e.rhs.render(space),
                tuple: e.tuple,
                context: e.context,
                lhs: e.lhs,
                rhs: e.rhs,
            })
            .collect();
        CheckReport {
            identity: identity.into(),
            passed: self.failures == 0,
            tuples_checked: self.checked,
            failures: self.failures,
            counterexamples,
            notes: Vec::new(),
            sections: Vec::new(),
        }
    }
}

/// Runs `body` over `items` in parallel and merges the tallies in a
/// deterministic way.
pub(crate) fn run<I, F>(
    identity: impl Into<String>,
    space: &SuperSpace,
    opts: &CheckOptions,
    items: Vec<I>,
    body: F,
) -> CheckReport
where
    I: Send + Sync,
    F: Fn(&I, &mut Tally) + Sync + Send,
{
    let cap = opts.cap();
    let tally = items
        .par_iter()
        .fold(
            || Tally::new(cap),
            |mut t, item| {
                body(item, &mut t);
                t
            },
        )
        .reduce(|| Tally::new(cap), Tally::merge);
    tally.finish(identity, space)
}

/// Result of testing "hypothesis ⇒ conclusion".
#[derive(Clone, Debug, Serialize)]
pub struct Implication {
    pub statement: String,
    pub hypothesis: CheckReport,
    pub conclusion: Option<CheckReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ImplicationVerdict {
    /// Hypothesis and conclusion both hold.
    Confirmed,
    /// Hypothesis fails; nothing is claimed.
    HypothesisFailed,
    /// Hypothesis holds but the conclusion fails.
    Refuted,
}

impl Implication {
    pub fn verdict(&self) -> ImplicationVerdict {
        match (&self.hypothesis.passed, &self.conclusion) {
            (false, _) => ImplicationVerdict::HypothesisFailed,
            (true, Some(c)) if c.passed => ImplicationVerdict::Confirmed,
            _ => ImplicationVerdict::Refuted,
        }
    }

    /// Holds unless refuted.
    pub fn holds(&self) -> bool {
        self.verdict() != ImplicationVerdict::Refuted
    }

    pub fn into_report(self) -> CheckReport {
        let verdict = self.verdict();
        let mut sections = vec![self.hypothesis];
        sections.extend(self.conclusion);
        let note = match verdict {
            ImplicationVerdict::Confirmed => "hypothesis and conclusion hold",
            ImplicationVerdict::HypothesisFailed => "hypothesis fails; no claim about the conclusion",
            ImplicationVerdict::Refuted => "hypothesis holds but the conclusion fails",
        };
        CheckReport::summary(self.statement, verdict != ImplicationVerdict::Refuted, sections).with_note(note)
    }
}

/// Result of testing "left ⇔ right".
#[derive(Clone, Debug, Serialize)]
pub struct Equivalence {
    pub statement: String,
    pub left: CheckReport,
    pub right: CheckReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Equivalence {
    pub fn agree(&self) -> bool {
        self.left.passed == self.right.passed
    }

    pub fn into_report(self) -> CheckReport {
        let agree = self.agree();
        let verdict = format!(
            "left {}, right {}: {}",
            if self.left.passed { "holds" } else { "fails" },
            if self.right.passed { "holds" } else { "fails" },
            if agree { "verdicts agree" } else { "verdicts disagree" }
        );
        let mut r = CheckReport::summary(self.statement, agree, vec![self.left, self.right]);
        r.notes = self.notes;
        r.with_note(verdict)
    }
}
