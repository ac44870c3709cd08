use std::fmt;

/// Human-readable sections followed by a `key=value` block.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Report {
    pub header: Vec<String>,
    pub sections: Vec<(String, Vec<String>)>,
    pub machine: Vec<(String, String)>,
}

impl Report {
    pub fn section(&mut self, title: &str) -> &mut Vec<String> {
        self.sections.push((title.to_string(), Vec::new()));
        &mut self.sections.last_mut().unwrap().1
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.machine.push((machine_key(&key.into()), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.machine.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// Keys keep `[A-Za-z0-9_.]`; anything else becomes `_`.
pub fn machine_key(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '.' { c } else { '_' }).collect()
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.header {
            writeln!(f, "{line}")?;
        }
        for (title, lines) in &self.sections {
            writeln!(f, "\n== {title} ==")?;
            for line in lines {
                writeln!(f, "{line}")?;
            }
        }
        writeln!(f, "\n== machine ==")?;
        for (k, v) in &self.machine {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
