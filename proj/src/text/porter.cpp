#include "screenbench/text/porter.hpp"

#include <algorithm>
#include <array>

namespace screenbench::text {

namespace {

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Rule order within a step matters: when one suffix ends with another
// (ational/tional, ization/ation, ement/ment/ent) the longer one must be
// tried first, and the first matching suffix claims the word whether or not
// its measure condition then allows the rewrite.
constexpr std::array<Rule, 20> kStep2Rules{{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3Rules{{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<std::string_view, 19> kStep4Suffixes{
    "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
    "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
};

class Stemmer {
public:
    explicit Stemmer(std::string_view token) : w_(token) {}

    std::string run() {
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return w_;
    }

private:
    std::string w_;

    bool is_consonant(std::size_t i) const {
        char c = w_[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
        if (c == 'y') return i == 0 ? true : !is_consonant(i - 1);
        return true;
    }

    // Number of vowel-consonant sequences in w_[0..len).
    std::size_t measure(std::size_t len) const {
        std::size_t m = 0, i = 0;
        while (i < len && is_consonant(i)) ++i;
        while (i < len) {
            while (i < len && !is_consonant(i)) ++i;
            if (i >= len) break;
            ++m;
            while (i < len && is_consonant(i)) ++i;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool ends_double_consonant(std::size_t len) const {
        return len >= 2 && w_[len - 1] == w_[len - 2] && is_consonant(len - 1);
    }

    // w_[0..len) ends consonant-vowel-consonant and the final consonant is
    // not w, x or y.
    bool ends_cvc(std::size_t len) const {
        if (len < 3) return false;
        if (!is_consonant(len - 3) || is_consonant(len - 2) || !is_consonant(len - 1))
            return false;
        char c = w_[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends_with(std::string_view suffix) const {
        return w_.size() >= suffix.size() &&
               std::equal(suffix.rbegin(), suffix.rend(), w_.rbegin());
    }

    void chop(std::size_t n) { w_.resize(w_.size() - n); }

    void step1a() {
        if (ends_with("sses")) {
            chop(2);
        } else if (ends_with("ies")) {
            chop(2);
        } else if (ends_with("ss")) {
            // keep
        } else if (ends_with("s")) {
            chop(1);
        }
    }

    void step1b() {
        if (ends_with("eed")) {
            if (measure(w_.size() - 3) > 0) chop(1);
            return;
        }
        if (ends_with("ed")) {
            if (!has_vowel(w_.size() - 2)) return;
            chop(2);
        } else if (ends_with("ing")) {
            if (!has_vowel(w_.size() - 3)) return;
            chop(3);
        } else {
            return;
        }
        // Post-removal fixups.
        if (ends_with("at") || ends_with("bl") || ends_with("iz")) {
            w_.push_back('e');
        } else if (ends_double_consonant(w_.size())) {
            char c = w_.back();
            if (c != 'l' && c != 's' && c != 'z') chop(1);
        } else if (measure(w_.size()) == 1 && ends_cvc(w_.size())) {
            w_.push_back('e');
        }
    }

    void step1c() {
        if (ends_with("y") && has_vowel(w_.size() - 1))
            w_.back() = 'i';
    }

    void apply_rules(const Rule* rules, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            if (!ends_with(rules[i].suffix)) continue;
            std::size_t stem = w_.size() - rules[i].suffix.size();
            if (measure(stem) > 0) {
                w_.resize(stem);
                w_.append(rules[i].replacement);
            }
            return;
        }
    }

    void step2() { apply_rules(kStep2Rules.data(), kStep2Rules.size()); }

    void step3() { apply_rules(kStep3Rules.data(), kStep3Rules.size()); }

    void step4() {
        for (std::string_view suffix : kStep4Suffixes) {
            if (!ends_with(suffix)) continue;
            std::size_t stem = w_.size() - suffix.size();
            if (suffix == "ion") {
                // "ion" only counts as a match when the stem ends s or t.
                if (stem == 0 || (w_[stem - 1] != 's' && w_[stem - 1] != 't'))
                    continue;
            }
            if (measure(stem) > 1)
                w_.resize(stem);
            return;
        }
    }

    void step5a() {
        if (w_.empty() || w_.back() != 'e') return;
        std::size_t stem = w_.size() - 1;
        std::size_t m = measure(stem);
        if (m > 1 || (m == 1 && !ends_cvc(stem)))
            chop(1);
    }

    void step5b() {
        if (!w_.empty() && w_.back() == 'l' && ends_double_consonant(w_.size()) &&
            measure(w_.size()) > 1)
            chop(1);
    }
};

} // namespace

std::string porter_stem(std::string_view token) {
    if (token.empty()) return std::string(token);
    for (char c : token)
        if (c < 'a' || c > 'z') return std::string(token);
    return Stemmer(token).run();
}

} // namespace screenbench::text
