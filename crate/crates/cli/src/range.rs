//! `--n` grid parsing: `A`, `A:B:S` (arithmetic), `A:B:geometric` (ratio 2),
//! `A:B:xR` (ratio R). The stop value is included when the grid lands on it.

// the negated comparison doubles as a NaN guard
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use partition_moments::error::{Error, Result};

pub fn parse_range(spec: &str) -> Result<Vec<u64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let n = parse_u64(single)?;
            Ok(vec![n])
        }
        [start, stop, step] => {
            let start = parse_u64(start)?;
            let stop = parse_u64(stop)?;
            if start == 0 || stop < start {
                return Err(Error::InvalidArgument(format!("bad range '{spec}'")));
            }
            if *step == "geometric" {
                return geometric(start, stop, 2.0);
            }
            if let Some(ratio) = step.strip_prefix('x') {
                let r: f64 = ratio
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad ratio in '{spec}': {e}")))?;
                if !(r > 1.0) {
                    return Err(Error::InvalidArgument(
                        "geometric ratio must exceed 1".into(),
                    ));
                }
                return geometric(start, stop, r);
            }
            let step = parse_u64(step)?;
            if step == 0 {
                return Err(Error::InvalidArgument("step must be positive".into()));
            }
            Ok((start..=stop).step_by(step as usize).collect())
        }
        _ => Err(Error::InvalidArgument(format!(
            "range '{spec}' must be N or START:STOP:STEP"
        ))),
    }
}

fn geometric(start: u64, stop: u64, ratio: f64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut x = start as f64;
    while x <= stop as f64 * (1.0 + 1e-12) {
        let v = x.round() as u64;
        if out.last() != Some(&v) {
            out.push(v);
        }
        x *= ratio;
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    Ok(out)
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse()
        .map_err(|e| Error::Parse(format!("bad integer '{s}': {e}")))
}
