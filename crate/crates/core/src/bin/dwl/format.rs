//! Deterministic output writers: %.15g-style floats, CSV, a minimal JSON
//! emitter with caller-controlled key order, and binary P6 heatmaps with a
//! fixed embedded colormap.

use std::io::Write;

/// C-style `%.15g`: 15 significant digits, decimal when the exponent is in
/// [-4, 15), scientific otherwise, trailing zeros stripped.
pub fn g15(x: f64) -> String {
    gfmt(x, 15)
}

fn gfmt(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let exp = x.abs().log10().floor() as i32;
    let use_decimal = exp >= -4 && exp < sig as i32;
    if use_decimal {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        Some(trim_zeros(&s))
            .filter(|t| !t.is_empty())
            .unwrap_or_else(|| "0".to_string())
    } else {
        let s = format!("{:.*e}", sig - 1, x);
        // normalize mantissa and exponent: strip mantissa zeros, keep e form
        let (mant, e) = s.split_once('e').expect("exponential format");
        let mant = trim_zeros(mant);
        format!("{mant}e{e}")
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0');
        t.trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// JSON value tree with insertion-ordered objects.
pub enum Json {
    Bool(bool),
    Num(f64),
    Int(i64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn write(&self, out: &mut impl Write, indent: usize) -> std::io::Result<()> {
        match self {
            Json::Bool(b) => write!(out, "{b}"),
            Json::Int(i) => write!(out, "{i}"),
            Json::Num(x) => {
                if x.is_finite() {
                    // shortest round-trip representation; deterministic
                    write!(out, "{x}")
                } else {
                    // JSON has no inf/nan; encode as strings
                    write!(out, "\"{}\"", gfmt(*x, 15))
                }
            }
            Json::Str(s) => write_json_string(out, s),
            Json::Arr(items) => {
                if items.is_empty() {
                    return write!(out, "[]");
                }
                writeln!(out, "[")?;
                for (i, item) in items.iter().enumerate() {
                    write!(out, "{:indent$}", "", indent = indent + 2)?;
                    item.write(out, indent + 2)?;
                    if i + 1 < items.len() {
                        write!(out, ",")?;
                    }
                    writeln!(out)?;
                }
                write!(out, "{:indent$}]", "", indent = indent)
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    return write!(out, "{{}}");
                }
                writeln!(out, "{{")?;
                for (i, (key, val)) in fields.iter().enumerate() {
                    write!(out, "{:indent$}", "", indent = indent + 2)?;
                    write_json_string(out, key)?;
                    write!(out, ": ")?;
                    val.write(out, indent + 2)?;
                    if i + 1 < fields.len() {
                        write!(out, ",")?;
                    }
                    writeln!(out)?;
                }
                write!(out, "{:indent$}}}", "", indent = indent)
            }
        }
    }

    pub fn to_string_pretty(&self) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf, 0).expect("in-memory write");
        buf.push(b'\n');
        String::from_utf8(buf).expect("valid utf8")
    }
}

fn write_json_string(out: &mut impl Write, s: &str) -> std::io::Result<()> {
    write!(out, "\"")?;
    for ch in s.chars() {
        match ch {
            '"' => write!(out, "\\\"")?,
            '\\' => write!(out, "\\\\")?,
            '\n' => write!(out, "\\n")?,
            '\t' => write!(out, "\\t")?,
            '\r' => write!(out, "\\r")?,
            c if (c as u32) < 0x20 => write!(out, "\\u{:04x}", c as u32)?,
            c => write!(out, "{c}")?,
        }
    }
    write!(out, "\"")
}

/// CSV with a header row, `\n` endings, `%.15g` floats.
pub struct CsvWriter {
    buf: String,
    columns: usize,
}

impl CsvWriter {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = header.join(",");
        buf.push('\n');
        CsvWriter {
            buf,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, values: &[f64]) {
        assert_eq!(values.len(), self.columns, "row width must match header");
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            self.buf.push_str(&g15(*v));
        }
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// Fixed viridis-style anchors expanded to a 256-entry colormap.
const COLORMAP_ANCHORS: [[u8; 3]; 9] = [
    [68, 1, 84],
    [71, 44, 122],
    [59, 81, 139],
    [44, 113, 142],
    [33, 144, 141],
    [39, 173, 129],
    [92, 200, 99],
    [170, 220, 50],
    [253, 231, 37],
];

pub fn colormap(t: f64) -> [u8; 3] {
    let t = t.clamp(0.0, 1.0);
    let pos = t * (COLORMAP_ANCHORS.len() as f64 - 1.0);
    let lo = pos.floor() as usize;
    let hi = (lo + 1).min(COLORMAP_ANCHORS.len() - 1);
    let frac = pos - lo as f64;
    let mut rgb = [0u8; 3];
    for c in 0..3 {
        let a = f64::from(COLORMAP_ANCHORS[lo][c]);
        let b = f64::from(COLORMAP_ANCHORS[hi][c]);
        rgb[c] = (a + (b - a) * frac).round() as u8;
    }
    rgb
}

/// Binary P6 heatmap of a row-major value grid (`height` rows of `width`),
/// first row rendered at the top. Values are min-max normalized.
pub fn ppm(values: &[f64], width: usize, height: usize) -> Vec<u8> {
    assert_eq!(values.len(), width * height);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let span = if hi > lo { hi - lo } else { 1.0 };
    let mut out = format!("P6\n{width} {height}\n255\n").into_bytes();
    out.reserve(values.len() * 3);
    for &v in values {
        let rgb = colormap((v - lo) / span);
        out.extend_from_slice(&rgb);
    }
    out
}
