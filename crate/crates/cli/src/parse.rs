//! Argument parsing that clap does not do for us.

use std::io::Read;

use anyhow::{bail, Context, Result};
use bruhatkit::weyl::{Family, GroupSpec};
use bruhatkit::ExactMatrix;

/// Inline JSON when the argument starts with `{`, stdin for `-`, otherwise a path.
pub fn matrix_arg(arg: &str) -> Result<ExactMatrix> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading matrix from stdin")?;
        s
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading matrix file {arg}"))?
    };
    Ok(ExactMatrix::from_json_str(&text)?)
}

pub fn spec(family: &str, rank: usize, rank_cap: usize) -> Result<GroupSpec> {
    let family: Family = family.parse()?;
    let spec = GroupSpec::new(family, rank)?;
    if rank > rank_cap {
        return Err(bruhatkit::Error::RankOverCap { rank, cap: rank_cap }.into());
    }
    Ok(spec)
}

/// A word in the simple generators. Separated forms (`"1 2"`, `"1,2"`,
/// `"1*2"`, `"s1 s2"`) allow indices above 9; an unseparated digit string
/// (`"121"`) is read one digit per generator. `""` and `"e"` are the empty word.
pub fn word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let separated = t.contains(|c: char| c.is_whitespace() || matches!(c, ',' | '*' | '·'));
    let tokens: Vec<&str> = if separated {
        t.split(|c: char| c.is_whitespace() || matches!(c, ',' | '*' | '·')).filter(|s| !s.is_empty()).collect()
    } else {
        vec![t]
    };
    let mut out = Vec::new();
    for tok in tokens {
        let digits = tok.strip_prefix('s').unwrap_or(tok);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            bail!("malformed word {text:?}: {tok:?} is not a generator index");
        }
        if separated {
            out.push(digits.parse()?);
        } else {
            out.extend(digits.chars().map(|c| c.to_digit(10).expect("checked digit") as usize));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(word("").unwrap(), Vec::<usize>::new());
        assert_eq!(word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(word("121").unwrap(), vec![1, 2, 1]);
        assert_eq!(word("1 2,10").unwrap(), vec![1, 2, 10]);
        assert_eq!(word("s1 s2").unwrap(), vec![1, 2]);
        assert!(word("1x").is_err());
        assert!(word("1,,a").is_err());
    }
}
