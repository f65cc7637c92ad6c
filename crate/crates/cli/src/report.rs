use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A computed value with nothing to decide.
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Machine records only know pass and fail; a computed value is a
    /// successful computation.
    fn word(self) -> &'static str {
        match self {
            Verdict::Pass | Verdict::Info => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub check: String,
    pub verdict: Verdict,
    pub payload: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    /// Set for commands that sample.
    pub seed: Option<u64>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: &str, args: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            args,
            seed: None,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, check: impl Into<String>, verdict: Verdict, payload: impl Into<String>) {
        self.records.push(Record {
            check: check.into(),
            verdict,
            payload: payload.into(),
        });
    }

    pub fn info(&mut self, check: impl Into<String>, payload: impl Into<String>) {
        self.push(check, Verdict::Info, payload);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.verdict != Verdict::Fail)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "glacalc {} {}", self.command, self.args.join(" "));
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        for r in &self.records {
            let tag = match r.verdict {
                Verdict::Info => "      ".to_string(),
                v => format!("[{}]", v.word()),
            };
            if r.payload.is_empty() {
                let _ = writeln!(out, "{tag} {}", r.check);
            } else {
                let _ = writeln!(out, "{tag} {}: {}", r.check, r.payload);
            }
        }
        let _ = writeln!(out, "status: {}", self.status());
        out
    }

    /// One `key=value` record per line; the witness runs to end of line.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={} args={}", self.command, self.args.join(","));
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed={seed}");
        }
        for r in &self.records {
            let _ = writeln!(
                out,
                "check={} verdict={} witness={}",
                r.check,
                r.verdict.word(),
                r.payload
            );
        }
        let _ = writeln!(out, "status={}", self.status());
        out
    }
}
