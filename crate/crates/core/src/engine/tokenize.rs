/// Lowercases `text` and splits it on every maximal run of non-alphanumeric
/// characters. Empty pieces are dropped, order is preserved.
pub fn tokenize(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|piece| !piece.is_empty())
        .map(str::to_owned)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
        assert!(tokenize(" \t--!! ").is_empty());
    }

    #[test]
    fn punctuation_and_case() {
        assert_eq!(tokenize("Web-pages, indexed!"), ["web", "pages", "indexed"]);
        assert_eq!(tokenize("  A1b2  C3 "), ["a1b2", "c3"]);
    }

    #[test]
    fn unicode_letters_are_kept() {
        assert_eq!(tokenize("Café crème—brûlée"), ["café", "crème", "brûlée"]);
    }

    #[test]
    fn idempotent_on_joined_output() {
        let once = tokenize("The Quick, brown FOX; jumps... over 2 lazy-dogs.");
        let twice = tokenize(&once.join(" "));
        assert_eq!(once, twice);
    }
}
