use crate::developing::{PathSpec, PathStep, ReductionChoice};

pub const LOOP_GRAMMAR: &str = "loop grammar: comma-separated tokens; `w<n>` crosses wall n, \
    an optional following `+t<k>` / `t<k>` / `-t<k>` picks reduction generator k (or its \
    inverse) for that crossing; the empty string is the trivial loop. Example: \"w0,+t1,w0\"";

fn index(digits: &str, token: &str) -> Result<usize, String> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad token '{token}'"));
    }
    digits.parse().map_err(|_| format!("index out of range in '{token}'"))
}

pub fn parse_loop(s: &str) -> Result<PathSpec, String> {
    let mut steps: Vec<PathStep> = Vec::new();
    if s.trim().is_empty() {
        return Ok(PathSpec::default());
    }
    for raw in s.split(',') {
        let token = raw.trim();
        if let Some(rest) = token.strip_prefix('w') {
            steps.push(PathStep::cross(index(rest, token)?));
            continue;
        }
        let (inverse, rest) = match token.as_bytes().first() {
            Some(b'+') => (false, &token[1..]),
            Some(b'-') => (true, &token[1..]),
            _ => (false, token),
        };
        let Some(k) = rest.strip_prefix('t') else {
            return Err(format!("bad token '{token}'"));
        };
        let k = index(k, token)?;
        match steps.last_mut() {
            Some(step) if step.reduction == ReductionChoice::Identity => {
                step.reduction = ReductionChoice::Generator { index: k, inverse };
            }
            Some(_) => return Err(format!("'{token}': crossing already has a reduction generator")),
            None => return Err(format!("'{token}' must follow a wall crossing")),
        }
    }
    Ok(PathSpec::new(steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert!(parse_loop("").unwrap().steps.is_empty());
        let p = parse_loop("w3,+t1,w3").unwrap();
        assert_eq!(p.steps, [PathStep::with_generator(3, 1, false), PathStep::cross(3)]);
        let p = parse_loop(" w0 , -t0 , w12, t1").unwrap();
        assert_eq!(p.steps, [PathStep::with_generator(0, 0, true), PathStep::with_generator(12, 1, false)]);
        for bad in ["x", "w", "w-1", "+t1", "w0,,w0", "w0,+t1,-t0", "w0,+s1", "w0,+t"] {
            assert!(parse_loop(bad).is_err(), "{bad}");
        }
    }
}
