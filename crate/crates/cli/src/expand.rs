//! Expands exponent shorthand in command-line words: `a^3`, `a³`, `(xy)^2`.

use tropmon::Error;

fn superscript_digit(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|p| p as u32)
}

/// Reads an exponent at the front of `chars`, if any.
fn exponent(chars: &[char], pos: &mut usize) -> Result<Option<usize>, Error> {
    if chars.get(*pos) == Some(&'^') {
        let start = *pos + 1;
        let mut end = start;
        while chars.get(end).is_some_and(|c| c.is_ascii_digit()) {
            end += 1;
        }
        if end == start {
            return Err(Error::Parse("'^' must be followed by digits".into()));
        }
        *pos = end;
        let digits: String = chars[start..end].iter().collect();
        return digits
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("exponent {digits} too large")));
    }
    let mut value: Option<usize> = None;
    while let Some(d) = chars.get(*pos).and_then(|&c| superscript_digit(c)) {
        value = Some(
            value
                .unwrap_or(0)
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| Error::Parse("exponent too large".into()))?,
        );
        *pos += 1;
    }
    Ok(value)
}

fn expand_seq(chars: &[char], pos: &mut usize, nested: bool) -> Result<String, Error> {
    let mut out = String::new();
    while let Some(&c) = chars.get(*pos) {
        let atom = match c {
            '(' => {
                *pos += 1;
                let inner = expand_seq(chars, pos, true)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::Parse("unbalanced '('".into()));
                }
                *pos += 1;
                inner
            }
            ')' if nested => return Ok(out),
            ')' => return Err(Error::Parse("unbalanced ')'".into())),
            c if c.is_ascii_alphabetic() => {
                *pos += 1;
                c.to_string()
            }
            '^' => return Err(Error::Parse("exponent without a base".into())),
            c if superscript_digit(c).is_some() => return Err(Error::Parse("exponent without a base".into())),
            c => {
                *pos += 1;
                out.push(c);
                continue;
            }
        };
        match exponent(chars, pos)? {
            Some(k) => {
                if atom.len().saturating_mul(k) > 1 << 20 {
                    return Err(Error::WordTooLong((atom.len() as u128) * k as u128));
                }
                let repeated = atom.repeat(k);
                out.push_str(if repeated.is_empty() && !nested { "" } else { &repeated });
            }
            None => out.push_str(&atom),
        }
    }
    if nested {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    Ok(out)
}

/// Rewrites exponents into repeated letters; other characters pass through.
pub fn expand(text: &str) -> Result<String, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    expand_seq(&chars, &mut pos, false)
}

#[cfg(test)]
mod tests {
    use super::expand;

    #[test]
    fn exponents() {
        assert_eq!(expand("a²ba=ab").unwrap(), "aaba=ab");
        assert_eq!(expand("a,b|ab=b^3").unwrap(), "a,b|ab=bbb");
        assert_eq!(expand("b⁷a⁸b").unwrap(), "bbbbbbbaaaaaaaab");
        assert_eq!(expand("(xyx)^2(yx)^2=(yx)^2(xyx)^2").unwrap(), "xyxxyxyxyx=yxyxxyxxyx");
        assert_eq!(expand("a¹⁰").unwrap(), "aaaaaaaaaa");
        assert_eq!(expand("xyyx.xy.xyyx").unwrap(), "xyyx.xy.xyyx");
        assert_eq!(expand("1").unwrap(), "1");
    }

    #[test]
    fn malformed() {
        assert!(expand("(ab").is_err());
        assert!(expand("ab)").is_err());
        assert!(expand("^2").is_err());
        assert!(expand("a^").is_err());
    }
}
