use super::Check;
use crate::error::Result;
use crate::polyring::Polynomial;
use crate::scalar::Scalar;

/// Accumulates many instances of one identity into a single check that
/// remembers the first counterexample.
pub(crate) struct Tally {
    suite: &'static str,
    name: String,
    count: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    pub(crate) fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Tally {
            suite,
            name: name.into(),
            count: 0,
            failures: 0,
            first: None,
        }
    }

    pub(crate) fn fail(&mut self, detail: impl FnOnce() -> String) {
        self.count += 1;
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(detail());
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub(crate) fn pass(&mut self) {
        self.count += 1;
    }

    pub(crate) fn truth(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(detail)
        }
    }

    /// Record `lhs == rhs`.
    pub(crate) fn equal<C: Scalar>(
        &mut self,
        label: impl FnOnce() -> String,
        sides: Result<(Polynomial<C>, Polynomial<C>)>,
    ) {
        match sides {
            Ok((lhs, rhs)) if lhs == rhs => self.pass(),
            Ok((lhs, rhs)) => self.fail(|| format!("{}: {} != {}", label(), lhs, rhs)),
            Err(e) => self.fail(|| format!("{}: {}", label(), e)),
        }
    }

    pub(crate) fn finish(self) -> Check {
        let name = format!("{} [{} cases]", self.name, self.count);
        match self.first {
            None if self.count > 0 => Check::pass(self.suite, name),
            None => Check::fail(self.suite, name, "no cases were generated"),
            Some(first) => Check::fail(
                self.suite,
                name,
                format!("{} failures; first: {}", self.failures, first),
            ),
        }
    }
}
