use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

/// Plain-text key=value defaults. Keys use the long flag names (without the
/// leading dashes); blank lines and #-comments are ignored. Explicit flags
/// always win over file values.
#[derive(Debug, Default)]
pub struct ConfigMap {
    values: HashMap<String, String>,
}

impl ConfigMap {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut values = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(ConfigMap { values })
    }

    /// Flag value if given, else the parsed config value, else None.
    pub fn resolve<T: FromStr + Clone>(
        &self,
        flag: &Option<T>,
        key: &str,
    ) -> Result<Option<T>, String> {
        if let Some(v) = flag {
            return Ok(Some(v.clone()));
        }
        match self.values.get(key) {
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| format!("config value {key}={raw} does not parse")),
            None => Ok(None),
        }
    }

    pub fn require<T: FromStr + Clone>(&self, flag: &Option<T>, key: &str) -> Result<T, String> {
        self.resolve(flag, key)?
            .ok_or_else(|| format!("missing required argument --{key}"))
    }
}

/// start:stop:step, inclusive of the endpoint up to rounding.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid {spec} is not start:stop:step"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start in {spec}"))?;
    let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop in {spec}"))?;
    let step: f64 = parts[2].parse().map_err(|_| format!("bad grid step in {spec}"))?;
    if step <= 0.0 || stop < start {
        return Err(format!("grid {spec} must have step > 0 and stop >= start"));
    }
    let mut values = Vec::new();
    let mut i = 0u64;
    loop {
        // round away accumulation noise so grid points print cleanly
        let v = ((start + step * i as f64) * 1e10).round() / 1e10;
        if v > stop + step * 1e-9 {
            break;
        }
        values.push(v);
        i += 1;
    }
    Ok(values)
}
