//! Inputs shared by the benchmarks.

use uzlemma::{generate_forms, Lemmatizer};

/// Every `step`-th generated form (up to three suffixes), space separated.
pub fn corpus(lz: &Lemmatizer, step: usize) -> String {
    generate_forms(lz.lexicon(), lz.affixes(), 3)
        .into_iter()
        .step_by(step.max(1))
        .map(|f| f.word)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Words that miss the lexicon and exercise every stripping stage.
pub const HARD_WORDS: [&str; 6] = [
    "kitoblarimizdagina",
    "paxtakorlarga",
    "yozdirilgandingiz",
    "ishlamaganman",
    "gulzorlarimizdan",
    "xyzqwelarimiz",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_non_empty() {
        let lz = Lemmatizer::seed();
        let text = corpus(&lz, 50);
        assert!(lz.lemmatize_text(&text).len() > 100);
    }
}
