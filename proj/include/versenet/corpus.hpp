#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace versenet {

// One corpus record. (book, chapter, verse) is unique within a corpus and
// text is non-empty after trimming; parse_corpus enforces both.
struct Verse {
    std::string book;
    int chapter = 0;
    int verse = 0;
    std::string text;
};

// Canonical name list plus stop-name exclusions. Entries are unique,
// byte-exact strings of 1..4 space-separated words; the exclusion set is
// disjoint from the entries (an exclusion always wins).
class Lexicon {
public:
    Lexicon() = default;

    // Normalizes, validates and indexes the given names. An entry listed
    // both plain and excluded is dropped from the entries and a warning is
    // appended to `warnings` (if non-null).
    static Lexicon build(std::vector<std::string> entries,
                         std::vector<std::string> excluded,
                         std::vector<std::string>* warnings = nullptr);

    const std::vector<std::string>& entries() const { return entries_; }
    const std::vector<std::string>& excluded() const { return excluded_; }
    bool contains(const std::string& name) const { return entry_index_.count(name) > 0; }
    bool is_excluded(const std::string& name) const { return excluded_index_.count(name) > 0; }
    int max_entry_words() const { return max_entry_words_; }

private:
    std::vector<std::string> entries_;   // sorted
    std::vector<std::string> excluded_;  // sorted
    std::unordered_set<std::string> entry_index_;
    std::unordered_set<std::string> excluded_index_;
    int max_entry_words_ = 0;
};

// A lexicon match pinned to a corpus location; kept for diagnostics even
// when the name ends up isolated in the graph.
struct NameOccurrence {
    std::string name;
    std::string book;
    int chapter = 0;
    int verse = 0;
};

struct CorpusFormat {
    char delimiter = '\t';
    char comment = '#';
};

// Reads `book<TAB>chapter<TAB>verse<TAB>text` records in file order.
// Malformed records and duplicate (book, chapter, verse) keys raise a data
// error carrying the 1-based line number.
std::vector<Verse> parse_corpus(std::istream& in, const CorpusFormat& format = {});
std::vector<Verse> parse_corpus_file(const std::string& path, const CorpusFormat& format = {});

struct LexiconLoad {
    Lexicon lexicon;
    std::vector<std::string> warnings;
};

// One name per line; '#' starts a comment line, '!' declares an exclusion.
LexiconLoad load_lexicon(std::istream& in);
LexiconLoad load_lexicon_file(const std::string& path);

// Splits on any character that is not an ASCII letter, digit or
// apostrophe (' or U+2019), then strips trailing possessive markers
// ("'s" / "’s") and trailing bare apostrophes from each token.
std::vector<std::string> tokenize(std::string_view text);

// One consumed token range per matched name. Greedy longest match, left to
// right, non-overlapping; multi-word entries are compared against the
// space-joined token run.
struct MatchSpan {
    std::string name;
    std::size_t token_begin = 0;
    std::size_t token_count = 0;
};

std::vector<MatchSpan> match_spans(std::string_view text, const Lexicon& lexicon);

// The deduplicated set of lexicon entries present in the verse.
std::set<std::string> match_names(const Verse& verse, const Lexicon& lexicon);

// Every match across the corpus, in verse order. Diagnostic view; the graph
// builder does its own counting.
std::vector<NameOccurrence> scan_occurrences(std::span<const Verse> verses, const Lexicon& lexicon);

}  // namespace versenet
