#include "versenet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

#include "versenet/errors.hpp"

namespace versenet {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int word_count(std::string_view s) {
    int n = 0;
    bool in_word = false;
    for (char c : s) {
        if (c == ' ') {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++n;
        }
    }
    return n;
}

bool parse_positive_int(const std::string& field, int& out) {
    if (field.empty()) return false;
    long value = 0;
    for (char c : field) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000L) return false;
    }
    if (value <= 0) return false;
    out = static_cast<int>(value);
    return true;
}

}  // namespace

Lexicon Lexicon::build(std::vector<std::string> entries,
                       std::vector<std::string> excluded,
                       std::vector<std::string>* warnings) {
    Lexicon lex;

    for (auto& name : excluded) {
        name = trim(name);
        if (name.empty()) throw_data("lexicon: empty exclusion entry");
        lex.excluded_index_.insert(name);
    }

    for (auto& name : entries) {
        name = trim(name);
        if (name.empty()) throw_data("lexicon: empty entry");
        int words = word_count(name);
        if (words < 1 || words > 4)
            throw_data("lexicon: entry \"" + name + "\" has " + std::to_string(words) +
                       " words; 1..4 allowed");
        if (lex.excluded_index_.count(name)) {
            if (warnings)
                warnings->push_back("lexicon: \"" + name + "\" listed as both entry and exclusion; exclusion wins");
            continue;
        }
        if (lex.entry_index_.insert(name).second) {
            lex.max_entry_words_ = std::max(lex.max_entry_words_, words);
        }
    }

    lex.entries_.assign(lex.entry_index_.begin(), lex.entry_index_.end());
    std::sort(lex.entries_.begin(), lex.entries_.end());
    lex.excluded_.assign(lex.excluded_index_.begin(), lex.excluded_index_.end());
    std::sort(lex.excluded_.begin(), lex.excluded_.end());
    return lex;
}

std::vector<Verse> parse_corpus(std::istream& in, const CorpusFormat& format) {
    std::vector<Verse> verses;
    std::map<std::tuple<std::string, int, int>, std::size_t> seen;  // key -> line

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == format.comment) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t pos = line.find(format.delimiter, start);
            if (pos == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (fields.size() != 4)
            throw_data("corpus: line " + std::to_string(line_no) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));

        Verse v;
        v.book = trim(fields[0]);
        if (v.book.empty())
            throw_data("corpus: line " + std::to_string(line_no) + ": empty book id");
        if (!parse_positive_int(fields[1], v.chapter))
            throw_data("corpus: line " + std::to_string(line_no) + ": bad chapter \"" + fields[1] + "\"");
        if (!parse_positive_int(fields[2], v.verse))
            throw_data("corpus: line " + std::to_string(line_no) + ": bad verse number \"" + fields[2] + "\"");
        v.text = fields[3];
        if (trim(v.text).empty())
            throw_data("corpus: line " + std::to_string(line_no) + ": empty verse text");

        auto key = std::make_tuple(v.book, v.chapter, v.verse);
        auto [it, inserted] = seen.emplace(key, line_no);
        if (!inserted)
            throw_data("corpus: line " + std::to_string(line_no) + ": duplicate verse " + v.book + " " +
                       std::to_string(v.chapter) + ":" + std::to_string(v.verse) +
                       " (first seen at line " + std::to_string(it->second) + ")");
        verses.push_back(std::move(v));
    }
    return verses;
}

std::vector<Verse> parse_corpus_file(const std::string& path, const CorpusFormat& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("corpus: cannot open \"" + path + "\"");
    return parse_corpus(in, format);
}

LexiconLoad load_lexicon(std::istream& in) {
    std::vector<std::string> entries;
    std::vector<std::string> excluded;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t[0] == '!') {
            excluded.push_back(trim(t.substr(1)));
        } else {
            entries.push_back(std::move(t));
        }
    }
    LexiconLoad result;
    result.lexicon = Lexicon::build(std::move(entries), std::move(excluded), &result.warnings);
    return result;
}

LexiconLoad load_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("lexicon: cannot open \"" + path + "\"");
    return load_lexicon(in);
}

namespace {

// U+2019 RIGHT SINGLE QUOTATION MARK, the apostrophe used by the bundled
// corpus ("Jesus’s").
constexpr std::string_view kCurlyApostrophe = "\xe2\x80\x99";

bool is_token_char_at(std::string_view s, std::size_t i, std::size_t& len) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isalnum(c) || c == '\'') {
        len = 1;
        return true;
    }
    if (s.compare(i, kCurlyApostrophe.size(), kCurlyApostrophe) == 0) {
        len = kCurlyApostrophe.size();
        return true;
    }
    // any other byte (including the rest of a multi-byte sequence) separates
    len = 1;
    return false;
}

// Number of bytes taken by an apostrophe ending at s[..end), 0 if none.
std::size_t trailing_apostrophe_len(std::string_view s) {
    if (s.empty()) return 0;
    if (s.back() == '\'') return 1;
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, kCurlyApostrophe) == 0) return 3;
    return 0;
}

std::string strip_possessive(std::string_view token) {
    std::string t(token);
    if (t.size() >= 2 && t.back() == 's') {
        std::string_view head(t.data(), t.size() - 1);
        std::size_t ap = trailing_apostrophe_len(head);
        if (ap > 0) t.resize(head.size() - ap);
    }
    while (std::size_t ap = trailing_apostrophe_len(t)) {
        t.resize(t.size() - ap);
    }
    return t;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t len = 0;
        if (!is_token_char_at(text, i, len)) {
            i += len;
            continue;
        }
        std::size_t begin = i;
        while (i < text.size() && is_token_char_at(text, i, len)) i += len;
        std::string token = strip_possessive(text.substr(begin, i - begin));
        if (!token.empty()) tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<MatchSpan> match_spans(std::string_view text, const Lexicon& lexicon) {
    std::vector<MatchSpan> spans;
    std::vector<std::string> tokens = tokenize(text);
    const std::size_t max_words = static_cast<std::size_t>(std::max(lexicon.max_entry_words(), 1));

    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t limit = std::min(max_words, tokens.size() - i);
        std::size_t matched = 0;
        std::string matched_name;
        // longest candidate first
        for (std::size_t len = limit; len >= 1; --len) {
            std::string candidate = tokens[i];
            for (std::size_t k = 1; k < len; ++k) {
                candidate += ' ';
                candidate += tokens[i + k];
            }
            if (lexicon.contains(candidate)) {
                matched = len;
                matched_name = std::move(candidate);
                break;
            }
        }
        if (matched > 0) {
            spans.push_back({std::move(matched_name), i, matched});
            i += matched;
        } else {
            ++i;
        }
    }
    return spans;
}

std::set<std::string> match_names(const Verse& verse, const Lexicon& lexicon) {
    std::set<std::string> names;
    for (auto& span : match_spans(verse.text, lexicon)) names.insert(std::move(span.name));
    return names;
}

std::vector<NameOccurrence> scan_occurrences(std::span<const Verse> verses, const Lexicon& lexicon) {
    std::vector<NameOccurrence> occurrences;
    for (const Verse& v : verses) {
        for (const std::string& name : match_names(v, lexicon)) {
            occurrences.push_back({name, v.book, v.chapter, v.verse});
        }
    }
    return occurrences;
}

}  // namespace versenet
