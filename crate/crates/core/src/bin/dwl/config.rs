//! Flat key=value config files. Flags given on the command line always win;
//! config values fill the gaps before built-in defaults apply.

use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut values = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, val)) = line.split_once('=') else {
                return Err(format!(
                    "config {} line {}: expected key=value, got {line:?}",
                    path.display(),
                    lineno + 1
                ));
            };
            values.insert(key.trim().to_string(), val.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    pub fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| format!("config key {key}: cannot parse {raw:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_and_ignores_comments() {
        let dir = std::env::temp_dir().join("dwl-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.txt");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# comment\ngrid-points = 256\neps=1.5\n").unwrap();
        drop(f);
        let cfg = ConfigFile::load(&path).unwrap();
        assert_eq!(cfg.parse::<usize>("grid-points").unwrap(), Some(256));
        assert_eq!(cfg.get("eps"), Some("1.5"));
        assert_eq!(cfg.get("missing"), None);
    }
}
