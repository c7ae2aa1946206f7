//! Line-oriented text grammars for snakes, multisegments and integer lists.

use crate::error::CliError;

fn int(field: &str, what: &str) -> Result<i64, CliError> {
    field
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("malformed {what} '{field}': expected an integer")))
}

/// `"i:k,i:k,…"`, e.g. `"1:4,1:8"`.
pub fn parse_snake(text: &str) -> Result<Vec<(usize, i64)>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        let (i, k) = item.split_once(':').ok_or_else(|| {
            CliError::Usage(format!("malformed snake point '{item}': expected i:k"))
        })?;
        let i = i.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "malformed snake point '{item}': index must be a nonnegative integer"
            ))
        })?;
        out.push((i, int(k, "snake point")?));
    }
    Ok(out)
}

/// `"l-r,l-r,…"`; negative ends are allowed, the separator is the first `-`
/// after the first character, e.g. `"-2--1,0-3"`.
pub fn parse_segments(text: &str) -> Result<Vec<(i64, i64)>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim) {
        let sep = item
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '-')
            .map(|(idx, _)| idx)
            .ok_or_else(|| CliError::Usage(format!("malformed segment '{item}': expected l-r")))?;
        out.push((
            int(&item[..sep], "segment")?,
            int(&item[sep + 1..], "segment")?,
        ));
    }
    Ok(out)
}

/// `"a,b,c"`.
pub fn parse_ints(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',').map(|f| int(f, "integer list")).collect()
}

/// `"1,3-5,9"` into a sorted list of positive integers.
pub fn parse_selection(text: &str) -> Result<Vec<u32>, CliError> {
    let mut out = Vec::new();
    for (l, r) in parse_segments_or_single(text)? {
        if l < 1 || r < l {
            return Err(CliError::Usage(format!("bad selection range {l}-{r}")));
        }
        out.extend((l..=r).map(|v| v as u32));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_segments_or_single(text: &str) -> Result<Vec<(i64, i64)>, CliError> {
    text.split(',')
        .map(str::trim)
        .map(|item| match item.contains('-') {
            true => parse_segments(item).map(|v| v[0]),
            false => int(item, "selection").map(|v| (v, v)),
        })
        .collect()
}
