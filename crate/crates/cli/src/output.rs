use serde_json::Value;

/// Result of a command: structured data plus its human-readable rendering.
pub struct Outcome {
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    pub fn success(json: Value, text: impl Into<String>) -> Self {
        Self { ok: true, json, text: text.into() }
    }

    /// `ok = false` exits with code 1.
    pub fn verdict(ok: bool, json: Value, text: impl Into<String>) -> Self {
        Self { ok, json, text: text.into() }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", self.json);
        } else {
            println!("{}", self.text);
        }
    }
}
