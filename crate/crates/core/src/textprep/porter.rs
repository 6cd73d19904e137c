//! Porter stemmer: the classic rule sequence, steps 1a through 5b.
//!
//! Operates on lowercase ASCII words. Words of one or two letters are
//! returned unchanged. Within a step the longest matching suffix wins and
//! ends the step whether or not its condition lets the rule fire.

/// Is the letter at `i` a consonant? `y` counts as a consonant at the
/// start of the word or after a vowel (TOY), as a vowel after a
/// consonant (SYZYGY).
fn is_consonant(word: &[u8], i: usize) -> bool {
    match word[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(word, i - 1),
        _ => true,
    }
}

/// The measure m of `word`: the number of VC sequences in [C](VC)^m[V].
fn measure(word: &[u8]) -> usize {
    let mut m = 0;
    let mut i = 0;
    let n = word.len();
    // leading consonants
    while i < n && is_consonant(word, i) {
        i += 1;
    }
    loop {
        // vowels
        while i < n && !is_consonant(word, i) {
            i += 1;
        }
        if i == n {
            return m;
        }
        // consonants
        while i < n && is_consonant(word, i) {
            i += 1;
        }
        m += 1;
        if i == n {
            return m;
        }
    }
}

fn contains_vowel(word: &[u8]) -> bool {
    (0..word.len()).any(|i| !is_consonant(word, i))
}

fn ends_double_consonant(word: &[u8]) -> bool {
    let n = word.len();
    n >= 2 && word[n - 1] == word[n - 2] && is_consonant(word, n - 1)
}

/// *o: ends consonant-vowel-consonant where the final consonant is not
/// w, x or y.
fn ends_cvc(word: &[u8]) -> bool {
    let n = word.len();
    if n < 3 {
        return false;
    }
    is_consonant(word, n - 3)
        && !is_consonant(word, n - 2)
        && is_consonant(word, n - 1)
        && !matches!(word[n - 1], b'w' | b'x' | b'y')
}

fn ends_with(word: &[u8], suffix: &str) -> bool {
    word.ends_with(suffix.as_bytes())
}

fn stem_part<'a>(word: &'a [u8], suffix: &str) -> &'a [u8] {
    &word[..word.len() - suffix.len()]
}

fn replace_suffix(word: &mut Vec<u8>, suffix: &str, replacement: &str) {
    word.truncate(word.len() - suffix.len());
    word.extend_from_slice(replacement.as_bytes());
}

fn step_1a(word: &mut Vec<u8>) {
    if ends_with(word, "sses") {
        replace_suffix(word, "sses", "ss");
    } else if ends_with(word, "ies") {
        replace_suffix(word, "ies", "i");
    } else if ends_with(word, "ss") {
        // unchanged
    } else if ends_with(word, "s") {
        word.pop();
    }
}

fn step_1b(word: &mut Vec<u8>) {
    if ends_with(word, "eed") {
        if measure(stem_part(word, "eed")) > 0 {
            word.pop();
        }
        return;
    }
    let removed = if ends_with(word, "ed") && contains_vowel(stem_part(word, "ed")) {
        word.truncate(word.len() - 2);
        true
    } else if ends_with(word, "ing") && contains_vowel(stem_part(word, "ing")) {
        word.truncate(word.len() - 3);
        true
    } else {
        false
    };
    if !removed {
        return;
    }
    if ends_with(word, "at") || ends_with(word, "bl") || ends_with(word, "iz") {
        word.push(b'e');
    } else if ends_double_consonant(word) && !matches!(word[word.len() - 1], b'l' | b's' | b'z') {
        word.pop();
    } else if measure(word) == 1 && ends_cvc(word) {
        word.push(b'e');
    }
}

fn step_1c(word: &mut Vec<u8>) {
    if ends_with(word, "y") && contains_vowel(stem_part(word, "y")) {
        let n = word.len();
        word[n - 1] = b'i';
    }
}

/// (suffix, replacement) rule tables for steps 2 and 3; condition m > 0.
const STEP_2: &[(&str, &str)] = &[
    ("ational", "ate"),
    ("tional", "tion"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("izer", "ize"),
    ("abli", "able"),
    ("alli", "al"),
    ("entli", "ent"),
    ("eli", "e"),
    ("ousli", "ous"),
    ("ization", "ize"),
    ("ation", "ate"),
    ("ator", "ate"),
    ("alism", "al"),
    ("iveness", "ive"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("biliti", "ble"),
];

const STEP_3: &[(&str, &str)] = &[
    ("icate", "ic"),
    ("ative", ""),
    ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"),
    ("ful", ""),
    ("ness", ""),
];

fn apply_table(word: &mut Vec<u8>, table: &[(&str, &str)]) {
    // longest matching suffix wins; the rule fires only if m > 0 on the stem
    let mut best: Option<(&str, &str)> = None;
    for &(suffix, replacement) in table {
        if ends_with(word, suffix) && best.map_or(true, |(s, _)| suffix.len() > s.len()) {
            best = Some((suffix, replacement));
        }
    }
    if let Some((suffix, replacement)) = best {
        if measure(stem_part(word, suffix)) > 0 {
            replace_suffix(word, suffix, replacement);
        }
    }
}

const STEP_4: &[&str] = &[
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment", "ent", "ion", "ou",
    "ism", "ate", "iti", "ous", "ive", "ize",
];

fn step_4(word: &mut Vec<u8>) {
    let mut best: Option<&str> = None;
    for &suffix in STEP_4 {
        if ends_with(word, suffix) && best.map_or(true, |s| suffix.len() > s.len()) {
            best = Some(suffix);
        }
    }
    if let Some(suffix) = best {
        let stem = stem_part(word, suffix);
        let fires = measure(stem) > 1
            && (suffix != "ion" || matches!(stem.last(), Some(b's') | Some(b't')));
        if fires {
            word.truncate(word.len() - suffix.len());
        }
    }
}

fn step_5a(word: &mut Vec<u8>) {
    if ends_with(word, "e") {
        let stem = stem_part(word, "e");
        let m = measure(stem);
        if m > 1 || (m == 1 && !ends_cvc(stem)) {
            word.pop();
        }
    }
}

fn step_5b(word: &mut Vec<u8>) {
    if measure(word) > 1 && ends_double_consonant(word) && word[word.len() - 1] == b'l' {
        word.pop();
    }
}

/// Stem a lowercase alphabetic token.
pub fn stem(token: &str) -> String {
    debug_assert!(
        token.bytes().all(|b| b.is_ascii_lowercase()),
        "stem() expects lowercase alphabetic input, got {token:?}"
    );
    if token.len() <= 2 {
        return token.to_string();
    }
    let mut word = token.as_bytes().to_vec();
    step_1a(&mut word);
    step_1b(&mut word);
    step_1c(&mut word);
    apply_table(&mut word, STEP_2);
    apply_table(&mut word, STEP_3);
    step_4(&mut word);
    step_5a(&mut word);
    step_5b(&mut word);
    String::from_utf8(word).expect("stemmer output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_words_unchanged() {
        assert_eq!(stem("a"), "a");
        assert_eq!(stem("is"), "is");
    }

    #[test]
    fn inflected_forms_share_a_root() {
        let root = stem("decide");
        assert_eq!(stem("decided"), root);
        assert_eq!(stem("deciding"), root);
    }

    #[test]
    fn classic_vectors() {
        // worked examples from the algorithm's published description
        assert_eq!(stem("caresses"), "caress");
        assert_eq!(stem("ponies"), "poni");
        assert_eq!(stem("caress"), "caress");
        assert_eq!(stem("cats"), "cat");
        assert_eq!(stem("feed"), "feed");
        assert_eq!(stem("agreed"), "agre");
        assert_eq!(stem("plastered"), "plaster");
        assert_eq!(stem("bled"), "bled");
        assert_eq!(stem("motoring"), "motor");
        assert_eq!(stem("sing"), "sing");
        assert_eq!(stem("conflated"), "conflat");
        assert_eq!(stem("troubled"), "troubl");
        assert_eq!(stem("sized"), "size");
        assert_eq!(stem("hopping"), "hop");
        assert_eq!(stem("tanned"), "tan");
        assert_eq!(stem("falling"), "fall");
        assert_eq!(stem("hissing"), "hiss");
        assert_eq!(stem("fizzed"), "fizz");
        assert_eq!(stem("failing"), "fail");
        assert_eq!(stem("filing"), "file");
        assert_eq!(stem("happy"), "happi");
        assert_eq!(stem("sky"), "sky");
        assert_eq!(stem("relational"), "relat");
        assert_eq!(stem("conditional"), "condit");
        assert_eq!(stem("rational"), "ration");
        assert_eq!(stem("valenci"), "valenc");
        assert_eq!(stem("digitizer"), "digit");
        assert_eq!(stem("operator"), "oper");
        assert_eq!(stem("feudalism"), "feudal");
        assert_eq!(stem("decisiveness"), "decis");
        assert_eq!(stem("hopefulness"), "hope");
        assert_eq!(stem("triplicate"), "triplic");
        assert_eq!(stem("formative"), "form");
        assert_eq!(stem("formalize"), "formal");
        assert_eq!(stem("electricity"), "electr");
        assert_eq!(stem("hopeful"), "hope");
        assert_eq!(stem("goodness"), "good");
        assert_eq!(stem("revival"), "reviv");
        assert_eq!(stem("allowance"), "allow");
        assert_eq!(stem("inference"), "infer");
        assert_eq!(stem("airliner"), "airlin");
        assert_eq!(stem("adoption"), "adopt");
        assert_eq!(stem("adjustable"), "adjust");
        assert_eq!(stem("irritant"), "irrit");
        assert_eq!(stem("replacement"), "replac");
        assert_eq!(stem("adjustment"), "adjust");
        assert_eq!(stem("dependent"), "depend");
        assert_eq!(stem("homologou"), "homolog");
        assert_eq!(stem("communism"), "commun");
        assert_eq!(stem("activate"), "activ");
        assert_eq!(stem("angulariti"), "angular");
        assert_eq!(stem("effective"), "effect");
        assert_eq!(stem("bowdlerize"), "bowdler");
        assert_eq!(stem("probate"), "probat");
        assert_eq!(stem("rate"), "rate");
        assert_eq!(stem("cease"), "ceas");
        assert_eq!(stem("controll"), "control");
        assert_eq!(stem("roll"), "roll");
    }

    #[test]
    fn stems_never_longer_than_input() {
        for w in ["running", "caresses", "authenticity", "nationalization", "by"] {
            assert!(stem(w).len() <= w.len());
        }
    }
}
