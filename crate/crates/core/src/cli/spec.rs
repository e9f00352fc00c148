use crate::combinatorics::{HessenbergFunction, JordanBlock, JordanData};
use crate::{Error, Result};

fn parse_usize(token: &str, what: &str) -> Result<usize> {
    token
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: {token:?} is not a nonnegative integer")))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| parse_usize(t, what)).collect()
}

/// Parses a Hessenberg function on `n` letters.
///
/// Accepted forms: an explicit 1-based list `2,3,3`; `full` (`h ≡ n`);
/// `id` (`h(i) = i`); `banded:b` (`h(i) = min(i + b, n)`).
pub fn parse_h_spec(s: &str, n: usize) -> Result<HessenbergFunction> {
    let s = s.trim();
    match s {
        "full" => return Ok(HessenbergFunction::full(n)),
        "id" => return Ok(HessenbergFunction::identity(n)),
        _ => {}
    }
    if let Some(b) = s.strip_prefix("banded:") {
        return Ok(HessenbergFunction::banded(n, parse_usize(b, "band width")?));
    }
    let values = parse_list(s, "h value")?;
    if values.len() != n {
        return Err(Error::Parse(format!(
            "h has {} values but n = {n}",
            values.len()
        )));
    }
    HessenbergFunction::new(&values)
}

/// Parses a Jordan type.
///
/// `label:parts;label:parts` lists eigenvalue blocks, e.g. `a:3,1;b:2,1`;
/// `regss:n` is `n` distinct eigenvalues with 1×1 blocks; a bare part list
/// such as `3,1` is a nilpotent operator.
pub fn parse_jordan_spec(s: &str) -> Result<JordanData> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("regss:") {
        let n = parse_usize(n, "regss size")?;
        if n == 0 {
            return Err(Error::InvalidJordan("regss:0 has no blocks".into()));
        }
        return Ok(JordanData::regular_semisimple(n));
    }
    if !s.contains(':') {
        return JordanData::nilpotent(parse_list(s, "block size")?);
    }
    let blocks = s
        .split(';')
        .map(|block| {
            let (label, parts) = block
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("block {block:?} is missing ':'")))?;
            let label = label.trim();
            if label.is_empty() {
                return Err(Error::Parse(format!("block {block:?} has an empty label")));
            }
            if parts.trim().is_empty() {
                return Err(Error::InvalidJordan(format!("block {label:?} is empty")));
            }
            JordanBlock::new(label, parse_list(parts, "block size")?)
        })
        .collect::<Result<Vec<_>>>()?;
    JordanData::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_specs() {
        assert_eq!(parse_h_spec("2,3,3", 3).unwrap().one_based(), vec![2, 3, 3]);
        assert_eq!(
            parse_h_spec("banded:1", 4).unwrap().one_based(),
            vec![2, 3, 4, 4]
        );
        assert_eq!(parse_h_spec("full", 2).unwrap().one_based(), vec![2, 2]);
        assert_eq!(parse_h_spec("id", 2).unwrap().one_based(), vec![1, 2]);
        let err = parse_h_spec("1,3,2", 3).unwrap_err();
        assert!(
            matches!(err, Error::InvalidHessenberg { index: 3, .. }),
            "{err}"
        );
        assert!(err.to_string().contains("nondecreasing"));
        assert!(parse_h_spec("2,3", 3).is_err());
        assert!(parse_h_spec("2,x,3", 3).is_err());
    }

    #[test]
    fn jordan_specs() {
        let j = parse_jordan_spec("a:3,1;b:2,1").unwrap();
        assert_eq!(j.blocks().len(), 2);
        assert_eq!(j.n(), 7);
        assert_eq!(j.blocks()[1].label(), "b");

        let j = parse_jordan_spec("nilpotent:4").unwrap();
        assert!(j.is_regular_nilpotent());
        assert_eq!(j.n(), 4);

        let j = parse_jordan_spec("regss:3").unwrap();
        assert!(j.is_semisimple());
        assert_eq!(j.blocks().len(), 3);

        assert_eq!(parse_jordan_spec("2,1").unwrap().n(), 3);

        let err = parse_jordan_spec("a:1,3").unwrap_err();
        assert!(err.to_string().contains("weakly decreasing"));
        assert!(parse_jordan_spec("a:1;a:2").is_err());
        assert!(parse_jordan_spec("a:").is_err());
        assert!(parse_jordan_spec("a:1;;b:1").is_err());
        assert!(parse_jordan_spec(":1").is_err());
        assert!(parse_jordan_spec("regss:0").is_err());
    }
}
