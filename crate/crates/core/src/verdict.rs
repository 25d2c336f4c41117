//! Law-check outcomes with reproducible counterexamples.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A concrete reason a law or property fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Witness {
    /// An equation whose two sides differ at `inputs`.
    Equation {
        equation: String,
        inputs: Vec<usize>,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    /// A map that should be injective sends two inputs to one output.
    Collision {
        map: String,
        first: Vec<usize>,
        second: Vec<usize>,
        image: Vec<usize>,
    },
    /// A value that should be attained is not.
    Uncovered { map: String, value: Vec<usize> },
    /// A proper non-empty subset satisfying a closure condition.
    Subset {
        condition: String,
        elements: Vec<usize>,
    },
    /// A required element does not exist.
    Missing { what: String },
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl Witness {
    /// The machine-readable `WITNESS ...` line printed by the command-line tool.
    ///
    /// Equations print `WITNESS x y [z] lhs rhs`, with tuple-valued sides
    /// joined by commas into a single token.
    pub fn machine_line(&self) -> String {
        match self {
            Witness::Equation {
                inputs, lhs, rhs, ..
            } => {
                let mut parts: Vec<String> = inputs.iter().map(|x| x.to_string()).collect();
                parts.push(join(lhs));
                parts.push(join(rhs));
                format!("WITNESS {}", parts.join(" "))
            }
            Witness::Collision {
                first,
                second,
                image,
                ..
            } => {
                format!(
                    "WITNESS {} {} {} {}",
                    join(first),
                    join(second),
                    join(image),
                    join(image)
                )
            }
            Witness::Uncovered { value, .. } => format!("WITNESS {}", join(value)),
            Witness::Subset { elements, .. } => format!("WITNESS {}", join(elements)),
            Witness::Missing { what } => format!("WITNESS {}", what.replace(' ', "_")),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Equation {
                equation,
                inputs,
                lhs,
                rhs,
            } => write!(
                f,
                "{equation} fails at ({}): lhs = ({}), rhs = ({})",
                join(inputs),
                join(lhs),
                join(rhs)
            ),
            Witness::Collision {
                map,
                first,
                second,
                image,
            } => write!(
                f,
                "{map} is not injective: ({}) and ({}) both map to ({})",
                join(first),
                join(second),
                join(image)
            ),
            Witness::Uncovered { map, value } => write!(f, "{map} misses ({})", join(value)),
            Witness::Subset {
                condition,
                elements,
            } => {
                write!(f, "{{{}}} is a proper {condition}", join(elements))
            }
            Witness::Missing { what } => write!(f, "no {what}"),
        }
    }
}

/// Outcome of a decidable check. A witness is present exactly when the check fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    holds: bool,
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }

    /// Runs `next` only if `self` holds.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            next()
        } else {
            self
        }
    }

    pub(crate) fn into_result(self, law: impl Into<String>) -> crate::Result<()> {
        match self.witness {
            None => Ok(()),
            Some(w) => Err(crate::Error::law(law, w)),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::pass(),
            Some(w) => Verdict::fail(w),
        }
    }
}
