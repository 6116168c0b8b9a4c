#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "versenet/corpus.hpp"
#include "versenet/errors.hpp"

using namespace versenet;

namespace {

Lexicon lex(std::initializer_list<std::string> entries,
            std::initializer_list<std::string> excluded = {}) {
    return Lexicon::build(entries, excluded);
}

Verse verse(const std::string& text) { return Verse{"Test", 1, 1, text}; }

}  // namespace

TEST_CASE("parse_corpus reads a single well-formed record") {
    std::istringstream in("John\t1\t1\tIn the beginning was the Word\n");
    auto verses = parse_corpus(in);
    REQUIRE(verses.size() == 1);
    CHECK(verses[0].book == "John");
    CHECK(verses[0].chapter == 1);
    CHECK(verses[0].verse == 1);
    CHECK(verses[0].text == "In the beginning was the Word");
}

TEST_CASE("parse_corpus skips comments and keeps file order") {
    std::istringstream in(
        "# header\n"
        "Mark\t1\t1\tfirst\n"
        "\n"
        "Mark\t1\t2\tsecond\n");
    auto verses = parse_corpus(in);
    REQUIRE(verses.size() == 2);
    CHECK(verses[0].verse == 1);
    CHECK(verses[1].verse == 2);
}

TEST_CASE("parse_corpus rejects malformed records with the line number") {
    std::istringstream in("Mark\t1\t1\tok\nMark\t2\tmissing text field\n");
    try {
        parse_corpus(in);
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::data);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parse_corpus rejects duplicate verse keys") {
    std::istringstream in("Mark\t1\t1\tfirst\nMark\t1\t1\tagain\n");
    CHECK_THROWS_AS(parse_corpus(in), Error);
}

TEST_CASE("parse_corpus rejects empty text and bad numbers") {
    {
        std::istringstream in("Mark\t1\t1\t   \n");
        CHECK_THROWS_AS(parse_corpus(in), Error);
    }
    {
        std::istringstream in("Mark\t0\t1\ttext\n");
        CHECK_THROWS_AS(parse_corpus(in), Error);
    }
    {
        std::istringstream in("Mark\tx\t1\ttext\n");
        CHECK_THROWS_AS(parse_corpus(in), Error);
    }
}

TEST_CASE("load_lexicon applies exclusions and deduplicates") {
    std::istringstream in("Jesus\nPaul\n!So\nJesus\n# comment\n");
    LexiconLoad load = load_lexicon(in);
    CHECK(load.lexicon.entries() == std::vector<std::string>{"Jesus", "Paul"});
    CHECK(load.lexicon.excluded() == std::vector<std::string>{"So"});
    CHECK(load.warnings.empty());
}

TEST_CASE("load_lexicon lets an exclusion win over a plain entry, with a warning") {
    std::istringstream in("So\n!So\nJesus\n");
    LexiconLoad load = load_lexicon(in);
    CHECK(load.lexicon.entries() == std::vector<std::string>{"Jesus"});
    CHECK(load.lexicon.is_excluded("So"));
    REQUIRE(load.warnings.size() == 1);
    CHECK(load.warnings[0].find("So") != std::string::npos);
}

TEST_CASE("lexicon rejects entries over four words") {
    std::istringstream in("one two three four five\n");
    CHECK_THROWS_AS(load_lexicon(in), Error);
}

TEST_CASE("tokenize splits on punctuation and strips possessives") {
    CHECK(tokenize("anointed Jesus’s feet") ==
          std::vector<std::string>{"anointed", "Jesus", "feet"});
    CHECK(tokenize("James's coat; the boys' room") ==
          std::vector<std::string>{"James", "coat", "the", "boys", "room"});
    CHECK(tokenize("Bethany, where Lazarus was") ==
          std::vector<std::string>{"Bethany", "where", "Lazarus", "was"});
    CHECK(tokenize("Martha’ served") == std::vector<std::string>{"Martha", "served"});
    CHECK(tokenize("don’t") == std::vector<std::string>{"don’t"});
    CHECK(tokenize("  “quoted”  ") == std::vector<std::string>{"quoted"});
}

TEST_CASE("match_names finds possessive forms") {
    // the worked example behind the anointing passage: Jesus’s must count as Jesus
    Verse v = verse("Therefore Mary took a pound of ointment and anointed Jesus’s feet.");
    auto names = match_names(v, lex({"Jesus", "Mary"}));
    CHECK(names == std::set<std::string>{"Jesus", "Mary"});
}

TEST_CASE("match_names prefers the longest entry and consumes its tokens") {
    auto lexicon = lex({"Jesus", "Christ", "Jesus Christ"});
    auto names = match_names(verse("Jesus Christ is Lord"), lexicon);
    CHECK(names == std::set<std::string>{"Jesus Christ"});

    // both single names match when not adjacent
    auto split = match_names(verse("Jesus spoke of Christ"), lexicon);
    CHECK(split == std::set<std::string>{"Christ", "Jesus"});
}

TEST_CASE("excluded stop-names never match") {
    auto lexicon = Lexicon::build({"Jesus"}, {"So"});
    CHECK(match_names(verse("so he went"), lexicon).empty());
    CHECK(match_names(verse("So he went"), lexicon).empty());
}

TEST_CASE("matching is case-sensitive") {
    auto lexicon = lex({"Jesus"});
    CHECK(match_names(verse("jesus wept"), lexicon).empty());
    CHECK(match_names(verse("Jesus wept"), lexicon) == std::set<std::string>{"Jesus"});
}

TEST_CASE("a name occurring twice counts once per verse") {
    auto names = match_names(verse("Jesus answered and Jesus departed"), lex({"Jesus"}));
    CHECK(names.size() == 1);
}

TEST_CASE("match result stays inside the lexicon and spans never overlap") {
    auto lexicon = lex({"Jesus", "Christ", "Jesus Christ", "Mary", "Simon Peter"});
    const std::string text =
        "Simon Peter said to Jesus Christ: Mary has gone; Christ replied, Simon Peter";
    auto spans = match_spans(text, lexicon);
    REQUIRE(!spans.empty());
    std::size_t prev_end = 0;
    bool first = true;
    for (const auto& s : spans) {
        CHECK(lexicon.contains(s.name));
        CHECK(!lexicon.is_excluded(s.name));
        if (!first) CHECK(s.token_begin >= prev_end);
        prev_end = s.token_begin + s.token_count;
        first = false;
    }
    // determinism: same inputs, same outputs
    auto again = match_spans(text, lexicon);
    REQUIRE(again.size() == spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
        CHECK(again[i].name == spans[i].name);
        CHECK(again[i].token_begin == spans[i].token_begin);
    }
}

TEST_CASE("lowercasing a verse only removes matches") {
    auto lexicon = lex({"Jesus", "Mary", "Bethany", "Jesus Christ", "Christ"});
    std::vector<std::string> texts = {
        "Jesus came to Bethany with Mary",
        "the words of Jesus Christ, and of Mary",
        "nothing relevant at all",
    };
    for (const auto& t : texts) {
        std::string lower = t;
        for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        auto upper_names = match_names(verse(t), lexicon);
        auto lower_names = match_names(verse(lower), lexicon);
        for (const auto& n : lower_names) CHECK(upper_names.count(n) == 1);
    }
}

TEST_CASE("scan_occurrences pins matches to verse locations") {
    std::vector<Verse> verses = {
        {"Mark", 1, 1, "Jesus came"},
        {"Mark", 1, 2, "Mary and Jesus left"},
    };
    auto occ = scan_occurrences(verses, lex({"Jesus", "Mary"}));
    REQUIRE(occ.size() == 3);
    CHECK(occ[0].name == "Jesus");
    CHECK(occ[0].verse == 1);
    CHECK(occ[1].name == "Jesus");
    CHECK(occ[2].name == "Mary");
    CHECK(occ[2].verse == 2);
}

TEST_CASE("bundled fixtures agree with the manifest line counts") {
    // the manifest records counts taken by an independent line-count pass
    std::ifstream mf(std::string(VERSENET_SOURCE_DIR) + "/data/manifest.json");
    REQUIRE(mf.good());
    nlohmann::json manifest = nlohmann::json::parse(mf);

    auto verses = parse_corpus_file(std::string(VERSENET_SOURCE_DIR) + "/data/web_corpus.tsv");
    std::map<std::string, int> per_book;
    for (const auto& v : verses) per_book[v.book]++;
    for (auto& [book, count] : manifest["corpus"]["verses_per_book"].items())
        CHECK(per_book[book] == count.get<int>());
    CHECK(verses.size() == manifest["corpus"]["verses_total"].get<std::size_t>());

    auto load = load_lexicon_file(std::string(VERSENET_SOURCE_DIR) + "/data/lexicon.txt");
    CHECK(load.lexicon.entries().size() == manifest["lexicon"]["entries"].get<std::size_t>());
    CHECK(load.lexicon.excluded().size() == manifest["lexicon"]["exclusions"].get<std::size_t>());
    CHECK(load.lexicon.is_excluded("So"));
    CHECK(load.lexicon.is_excluded("On"));
    CHECK(load.lexicon.is_excluded("No"));
}
