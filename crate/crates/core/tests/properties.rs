//! Property tests for the public operations and their stated invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;
use uzlemma::text::{TURNED_COMMA, TUTUQ};
use uzlemma::{
    filter_tokens, lemmatize_token, normalize_text, oracle_lemmatize, seed_affixes, seed_lexicon,
    tokenize, AffixClass, AffixStore, Lemmatizer, Lexicon, PosSet, PosTag, Position, Status,
    TokenKind, MIN_STEM_CHARS,
};

/// Characters that exercise the normalizer and tokenizer edge cases.
fn text_char() -> impl Strategy<Value = char> {
    prop::sample::select(vec![
        'a', 'b', 'g', 'i', 'k', 'o', 'q', 't', 'z', 'O', 'G', 'K', '\'', '`', '\u{2018}',
        '\u{2019}', '\u{02BB}', '\u{02BC}', '\u{00B4}', '\u{2032}', '\u{02B9}', '0', '1', '2', '.',
        ',', '-', '!', '?', ' ', '\n', '\t', 'д', 'Ж', 'ё', '\u{0130}', '\u{0301}', 'ß', '«', '»',
    ])
}

fn text() -> impl Strategy<Value = String> {
    prop::collection::vec(text_char(), 0..40).prop_map(|v| v.into_iter().collect())
}

fn seed_strippable() -> Vec<String> {
    seed_affixes()
        .entries()
        .iter()
        .filter(|e| e.position == Position::Suffix && e.strip)
        .flat_map(|e| e.surface_forms.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// A lemma base (verbs without `-moq`) followed by arbitrary seed allomorphs in any order.
fn agglutinated() -> impl Strategy<Value = String> {
    let bases: Vec<String> = seed_lexicon()
        .sorted_entries()
        .iter()
        .map(|e| e.lemma.strip_suffix("moq").unwrap_or(&e.lemma).to_string())
        .collect();
    (
        prop::sample::select(bases),
        prop::collection::vec(prop::sample::select(seed_strippable()), 0..5),
    )
        .prop_map(|(b, s)| format!("{b}{}", s.concat()))
}

fn word() -> impl Strategy<Value = String> {
    prop_oneof![
        agglutinated(),
        "[a-z]{1,12}".prop_map(String::from),
        prop::collection::vec(
            prop::sample::select(vec![
                "ki", "to", "b", "lar", "ga", "oʻ", "q", "i", "m", "da"
            ]),
            1..8
        )
        .prop_map(|v| v.concat()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn normalize_is_idempotent(s in text()) {
        let once = normalize_text(&s);
        prop_assert_eq!(normalize_text(&once), once);
    }

    #[test]
    fn tokens_partition_non_whitespace(s in text()) {
        let tokens = tokenize(&s);
        let mut at = 0;
        for t in &tokens {
            prop_assert!(t.span.start >= at && t.span.start < t.span.end);
            prop_assert!(s[at..t.span.start].chars().all(char::is_whitespace));
            prop_assert_eq!(&s[t.span.start..t.span.end], t.surface.as_str());
            prop_assert_eq!(normalize_text(&t.surface), t.normalized.clone());
            prop_assert!(!t.surface.chars().any(char::is_whitespace));
            at = t.span.end;
        }
        prop_assert!(s[at..].chars().all(char::is_whitespace));
    }

    #[test]
    fn tokenize_is_deterministic(s in text()) {
        prop_assert_eq!(tokenize(&s), tokenize(&s));
    }

    #[test]
    fn raw_and_normalized_text_tokenize_alike(s in text()) {
        let key = |t: &uzlemma::Token| (t.kind, t.normalized.clone());
        let raw: Vec<_> = tokenize(&s).iter().map(key).collect();
        let norm: Vec<_> = tokenize(&normalize_text(&s)).iter().map(key).collect();
        prop_assert_eq!(raw, norm);
    }

    #[test]
    fn filter_keeps_exactly_the_words(s in text()) {
        let all = tokenize(&s);
        let words: Vec<_> = all.iter().filter(|t| t.kind == TokenKind::Word).cloned().collect();
        prop_assert_eq!(filter_tokens(all), words);
    }

    #[test]
    fn word_tokens_have_letters_and_no_digits(s in text()) {
        for t in filter_tokens(tokenize(&s)) {
            prop_assert!(t
                .normalized
                .chars()
                .any(|c| c.is_alphabetic() && c != TURNED_COMMA && c != TUTUQ));
            prop_assert!(!t.normalized.chars().any(|c| c.is_ascii_digit()));
        }
    }

    #[test]
    fn suffix_matches_are_sound_and_totally_ordered(w in word(), class_ix in 0usize..3, hint_bits in 0u16..32) {
        let store = seed_affixes();
        let class = AffixClass::ALL[class_ix];
        let hint: Option<PosSet> = (hint_bits != 0).then(|| {
            PosTag::OPEN.iter().enumerate().filter(|(i, _)| hint_bits & (1 << i) != 0).map(|(_, p)| *p).collect()
        });
        let ms = store.match_suffixes(&w, class, hint);
        for m in &ms {
            prop_assert!(w.ends_with(m.allomorph));
            prop_assert!(m.stem(&w).chars().count() >= MIN_STEM_CHARS);
            prop_assert_eq!(m.entry.class, class);
            prop_assert!(m.entry.strip && m.entry.position == Position::Suffix);
            if let Some(h) = hint {
                prop_assert!(m.entry.applies_to.intersects(h));
            }
        }
        let keys: Vec<_> = ms.iter().map(|m| (std::cmp::Reverse(m.allomorph.len()), &m.entry.id, m.allomorph)).collect();
        prop_assert!(keys.windows(2).all(|p| p[0] < p[1]), "not strictly ordered: {:?}", keys);

        // nothing missed, compared with a naive scan
        let naive = store
            .entries()
            .iter()
            .filter(|e| e.class == class && e.strip && e.position == Position::Suffix)
            .filter(|e| hint.is_none_or(|h| e.applies_to.intersects(h)))
            .flat_map(|e| e.surface_forms.iter())
            .filter(|f| w.ends_with(f.as_str()) && w.chars().count() - f.chars().count() >= MIN_STEM_CHARS)
            .count();
        prop_assert_eq!(ms.len(), naive);
    }

    #[test]
    fn fsm_results_obey_invariants(w in word()) {
        let lz = Lemmatizer::seed();
        let results = lz.lemmatize_text(&w);
        prop_assume!(results.len() == 1);
        let r = &results[0];

        let mut rebuilt = r.stem().to_string();
        for step in r.trace.iter().rev() {
            rebuilt.push_str(&step.removed);
        }
        prop_assert_eq!(&rebuilt, &r.token.normalized);

        let ranks: Vec<u8> = r.trace.iter().map(|s| s.class.stripping_rank()).collect();
        prop_assert!(ranks.windows(2).all(|p| p[0] <= p[1]), "stage order {:?}", ranks);
        prop_assert!(r.trace.len() <= r.token.normalized.chars().count());
        for step in &r.trace {
            prop_assert!(step.stem_after.chars().count() >= MIN_STEM_CHARS);
        }

        match r.status {
            Status::Resolved => {
                let entries = lz.lexicon().lookup(&r.lemma);
                prop_assert!(!entries.is_empty(), "invented lemma {}", r.lemma);
                prop_assert_eq!(r.pos_candidates.clone(), entries.iter().filter(|e| r.trace.is_empty() || e.takes_affixes).map(|e| e.pos).collect::<Vec<_>>());
            }
            Status::Unresolved => prop_assert!(r.pos_candidates.is_empty()),
        }
    }

    #[test]
    fn oracle_miss_means_unresolved(w in word()) {
        let lex = seed_lexicon();
        let store = seed_affixes();
        let tokens = filter_tokens(tokenize(&w));
        prop_assume!(tokens.len() == 1);
        let r = lemmatize_token(&tokens[0], &lex, &store).unwrap();
        let oracle = oracle_lemmatize(&tokens[0].normalized, &lex, &store);
        if oracle.is_none() {
            prop_assert_eq!(r.status, Status::Unresolved);
        }
        if r.status == Status::Resolved {
            prop_assert!(oracle.is_some());
        }
    }

    #[test]
    fn lemmatize_text_is_deterministic(s in text()) {
        let lz = Lemmatizer::seed();
        prop_assert_eq!(lz.records(&s), lz.records(&s));
    }

    #[test]
    fn affix_dump_round_trips(rows in prop::collection::vec(("[a-d]{1,3}", "[a-z]{1,4}", 0usize..3, 0usize..5), 0..20)) {
        let mut text = String::new();
        for (id, form, class, pos) in &rows {
            let class = AffixClass::ALL[*class];
            let pos = PosTag::OPEN[*pos];
            // one class/pos per id keeps the rows consistent
            let id = format!("{id}_{}_{}", class.code(), pos.code());
            text.push_str(&format!("{id}\t{form}\t{}\tSUF\t{}\t1\n", class.code(), pos.code()));
        }
        let store = AffixStore::load(text.as_bytes()).unwrap();
        let mut dumped = Vec::new();
        store.write_tsv(&mut dumped).unwrap();
        let again = AffixStore::load(dumped.as_slice()).unwrap();
        prop_assert_eq!(store.entries(), again.entries());
    }
}

#[test]
fn seed_store_dump_round_trips() {
    let store = seed_affixes();
    let mut dumped = Vec::new();
    store.write_tsv(&mut dumped).unwrap();
    let again = AffixStore::load(dumped.as_slice()).unwrap();
    assert_eq!(store.entries(), again.entries());
    assert_eq!(store.counts(), again.counts());
}

#[test]
fn lexicon_entries_are_retrievable() {
    let lex: Lexicon = seed_lexicon();
    for e in lex.entries() {
        assert!(lex.lookup(&e.lemma).contains(e), "{}", e.lemma);
        if e.pos == PosTag::Verb {
            assert!(e.lemma.ends_with("moq"), "{}", e.lemma);
        }
        if !e.pos.is_open() {
            assert!(!e.takes_affixes, "{}", e.lemma);
        }
        assert_eq!(normalize_text(&e.lemma), e.lemma);
    }
}

proptest! {
    // suffixes in any order, not just well-formed words
    #[test]
    fn resolved_lemma_matches_oracle(w in agglutinated()) {
        let lex = seed_lexicon();
        let store = seed_affixes();
        let tokens = filter_tokens(tokenize(&w));
        prop_assume!(tokens.len() == 1);
        let r = lemmatize_token(&tokens[0], &lex, &store).unwrap();
        if r.status == Status::Resolved {
            prop_assert_eq!(Some(r.lemma.clone()), oracle_lemmatize(&tokens[0].normalized, &lex, &store));
        }
    }
}
