use std::fmt;
use std::path::PathBuf;

/// Process exit status. The numeric values are a stable contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    CheckFailed = 1,
    Input = 2,
    Budget = 3,
    Domain = 4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        })
    }
}

/// Everything a command prints, collected so output order is fixed.
#[derive(Debug)]
pub struct RunReport {
    pub command: String,
    pub lines: Vec<String>,
    pub checks: Vec<(String, CheckStatus)>,
    pub artifacts: Vec<PathBuf>,
    pub exit: Exit,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), lines: Vec::new(), checks: Vec::new(), artifacts: Vec::new(), exit: Exit::Ok }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn check(&mut self, name: impl Into<String>, status: CheckStatus) {
        if status == CheckStatus::Fail && self.exit == Exit::Ok {
            self.exit = Exit::CheckFailed;
        }
        self.checks.push((name.into(), status));
    }

    pub fn artifact(&mut self, p: PathBuf) {
        self.artifacts.push(p);
    }

    pub fn fail(mut self, exit: Exit, msg: impl Into<String>) -> Self {
        self.lines.push(format!("error: {}", msg.into()));
        self.exit = exit;
        self
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "$ {}", self.command)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for (name, status) in &self.checks {
            writeln!(f, "check {name}: {status}")?;
        }
        for a in &self.artifacts {
            writeln!(f, "wrote {}", a.display())?;
        }
        write!(f, "exit {}", self.exit as i32)
    }
}
