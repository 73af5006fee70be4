// Dictionary ordering for lemma headings.  The full Unicode collation
// algorithm is deliberately out of scope: ordering is driven by a small
// table file, one letter (or multi-character digraph, e.g. Cyrillic "оу")
// per line in rank order, with optional lines of the form
//
//   strip 0301 0313 0345
//
// listing combining code points (hex) removed before ranking.  Greek input
// is usually precomposed, so code points from the Greek and Greek Extended
// blocks are canonically decomposed first; stripping then reduces polytonic
// forms to their base letters.
//
// Letters absent from the table rank after all known ones, ordered by code
// point.  Headings that start with a Latin letter (grammatical pseudo-lemmas
// such as "pass.") collate in a trailing Latin section after the native
// alphabet.  Raw code points serve as the final tiebreak so that distinct
// spellings always order deterministically.
#ifndef CONCORD_COLLATION_HPP
#define CONCORD_COLLATION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "concord/unicode_data.hpp"

namespace concord {

namespace detail {

inline std::u32string decode_utf8(const std::string& text) {
    std::u32string out;
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        int extra = 0;
        if (c < 0x80) { cp = c; }
        else if ((c & 0xE0) == 0xC0) { cp = c & 0x1F; extra = 1; }
        else if ((c & 0xF0) == 0xE0) { cp = c & 0x0F; extra = 2; }
        else if ((c & 0xF8) == 0xF0) { cp = c & 0x07; extra = 3; }
        else { cp = 0xFFFD; }
        for (int k = 0; k < extra; ++k) {
            if (i + 1 + static_cast<size_t>(k) >= text.size()) { cp = 0xFFFD; extra = k; break; }
            unsigned char cc = static_cast<unsigned char>(text[i + 1 + static_cast<size_t>(k)]);
            if ((cc & 0xC0) != 0x80) { cp = 0xFFFD; extra = k; break; }
            cp = (cp << 6) | (cc & 0x3F);
        }
        out.push_back(cp);
        i += 1 + static_cast<size_t>(extra);
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) { out.push_back(static_cast<char>(cp)); return; }
    if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        return;
    }
    if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        return;
    }
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
}

// Canonical decomposition limited to the Greek blocks covered by the
// generated table; everything else passes through unchanged.
inline void decompose_greek(char32_t cp, std::u32string& out) {
    size_t lo = 0, hi = std::size(greek_decompositions);
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (greek_decompositions[mid].composed < cp) lo = mid + 1;
        else hi = mid;
    }
    if (lo < std::size(greek_decompositions) && greek_decompositions[lo].composed == cp) {
        const decomposition& d = greek_decompositions[lo];
        for (std::uint8_t k = 0; k < d.len; ++k) out.push_back(d.seq[k]);
    } else {
        out.push_back(cp);
    }
}

inline bool is_latin_letter(char32_t cp) {
    return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

} // namespace detail

struct CollationTable {
    std::vector<std::u32string> letters;        // rank order
    std::set<char32_t> strip;                   // combining marks to drop
    std::map<std::u32string, std::uint32_t> rank;  // derived
    size_t max_letter_length = 1;               // derived

    void finish() {
        rank.clear();
        max_letter_length = 1;
        for (size_t i = 0; i < letters.size(); ++i) {
            rank.emplace(letters[i], static_cast<std::uint32_t>(i));
            max_letter_length = std::max(max_letter_length, letters[i].size());
        }
    }
};

// One letter or digraph per non-comment line; "strip" lines list hex code
// points of combining marks removed before ranking.
inline CollationTable parse_collation_table(const std::string& text) {
    CollationTable table;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        size_t last = line.find_last_not_of(" \t");
        line = line.substr(begin, last - begin + 1);
        if (line.front() == '#') continue;
        if (line.rfind("strip", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
            std::istringstream points(line.substr(5));
            std::string hex;
            while (points >> hex) {
                char32_t cp = 0;
                for (char c : hex) {
                    int digit;
                    if (c >= '0' && c <= '9') digit = c - '0';
                    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
                    else throw std::runtime_error("collation table line " + std::to_string(lineno) +
                                                  ": bad code point '" + hex + "'");
                    cp = cp * 16 + static_cast<char32_t>(digit);
                }
                table.strip.insert(cp);
            }
            continue;
        }
        std::u32string letter = detail::decode_utf8(line);
        if (letter.empty())
            throw std::runtime_error("collation table line " + std::to_string(lineno) + ": empty letter");
        table.letters.push_back(letter);
    }
    table.finish();
    return table;
}

// Sort key: [section, letter ranks..., 0, raw code points...].  Section 0 is
// the native alphabet, section 1 the trailing Latin block.
inline std::vector<std::uint32_t> collate_key(const std::string& text, const CollationTable& table) {
    constexpr std::uint32_t rank_space = 1;
    constexpr std::uint32_t rank_known_base = 2;
    constexpr std::uint32_t rank_unknown_base = 0x40000000u;

    std::u32string decomposed;
    for (char32_t cp : detail::decode_utf8(text)) detail::decompose_greek(cp, decomposed);
    std::u32string letters;
    for (char32_t cp : decomposed)
        if (!table.strip.count(cp)) letters.push_back(cp);

    // A headword opening with a Latin letter that the table does not rank is
    // an abbreviation (a grammatical pseudo-lemma); those trail the native
    // alphabet as a section of their own.  Letters listed in the table are
    // native no matter what script they come from.
    std::vector<std::uint32_t> ranks;
    std::uint32_t section = 0;
    bool first_letter = true;
    size_t i = 0;
    while (i < letters.size()) {
        if (letters[i] == U' ') {
            ranks.push_back(rank_space);
            ++i;
            continue;
        }
        bool matched = false;
        size_t longest = std::min(table.max_letter_length, letters.size() - i);
        for (size_t len = longest; len >= 1; --len) {
            auto it = table.rank.find(letters.substr(i, len));
            if (it != table.rank.end()) {
                ranks.push_back(rank_known_base + it->second);
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            if (first_letter && detail::is_latin_letter(letters[i])) section = 1;
            ranks.push_back(rank_unknown_base + static_cast<std::uint32_t>(letters[i]));
            ++i;
        }
        first_letter = false;
    }

    std::vector<std::uint32_t> key;
    key.reserve(ranks.size() + letters.size() + 2);
    key.push_back(section);
    key.insert(key.end(), ranks.begin(), ranks.end());
    key.push_back(0);
    for (char32_t cp : detail::decode_utf8(text)) key.push_back(static_cast<std::uint32_t>(cp));
    return key;
}

inline int compare_collate(const std::string& a, const std::string& b, const CollationTable& table) {
    std::vector<std::uint32_t> ka = collate_key(a, table), kb = collate_key(b, table);
    if (ka < kb) return -1;
    if (kb < ka) return 1;
    return 0;
}

// Shareable comparator for ordered containers keyed by heading text.
struct Collator {
    std::shared_ptr<const CollationTable> table;

    std::vector<std::uint32_t> key(const std::string& text) const { return collate_key(text, *table); }
    bool operator()(const std::string& a, const std::string& b) const {
        return compare_collate(a, b, *table) < 0;
    }
};

inline std::string default_slavonic_collation_text() {
    return
        "# Old Church Slavonic dictionary order.  Superscripts and titla are\n"
        "# expected to be resolved upstream; common combining marks are still\n"
        "# stripped defensively.\n"
        "strip 0300 0301 0302 0306 0308 0311 0483 0484 0485 0486 0487\n"
        "\xD0\xB0\n"                 // а
        "\xD0\xB1\n"                 // б
        "\xD0\xB2\n"                 // в
        "\xD0\xB3\n"                 // г
        "\xD0\xB4\n"                 // д
        "\xD0\xB5\n"                 // е
        "\xD1\x94\n"                 // є
        "\xD0\xB6\n"                 // ж
        "\xD1\x95\n"                 // ѕ
        "\xD0\xB7\n"                 // з
        "\xEA\x99\x81\n"             // ꙁ
        "\xD0\xB8\n"                 // и
        "\xD1\x96\n"                 // і
        "\xD1\x97\n"                 // ї
        "\xD0\xB9\n"                 // й
        "\xD0\xBA\n"                 // к
        "\xD0\xBB\n"                 // л
        "\xD0\xBC\n"                 // м
        "\xD0\xBD\n"                 // н
        "\xD0\xBE\n"                 // о
        "\xD0\xBF\n"                 // п
        "\xD1\x80\n"                 // р
        "\xD1\x81\n"                 // с
        "\xD1\x82\n"                 // т
        "\xD1\xB9\n"                 // ѹ
        "\xD0\xBE\xD1\x83\n"         // оу (digraph spelling of the same letter)
        "\xD1\x83\n"                 // у
        "\xEA\x99\x8B\n"             // ꙋ
        "\xD1\x84\n"                 // ф
        "\xD1\x85\n"                 // х
        "\xD1\xA1\n"                 // ѡ
        "\xD1\xBF\n"                 // ѿ
        "\xD1\x86\n"                 // ц
        "\xD1\x87\n"                 // ч
        "\xD1\x88\n"                 // ш
        "\xD1\x89\n"                 // щ
        "\xD1\x8A\n"                 // ъ
        "\xEA\x99\x91\n"             // ꙑ
        "\xD1\x8B\n"                 // ы
        "\xD1\x8C\n"                 // ь
        "\xD1\xA3\n"                 // ѣ
        "\xD1\x8E\n"                 // ю
        "\xEA\x99\x97\n"             // ꙗ
        "\xD1\x8F\n"                 // я
        "\xD1\xA5\n"                 // ѥ
        "\xD1\xA7\n"                 // ѧ
        "\xD1\xA9\n"                 // ѩ
        "\xD1\xAB\n"                 // ѫ
        "\xD1\xAD\n"                 // ѭ
        "\xD1\xAF\n"                 // ѯ
        "\xD1\xB1\n"                 // ѱ
        "\xD1\xB3\n"                 // ѳ
        "\xD1\xB5\n";                // ѵ
}

inline std::string default_greek_collation_text() {
    return
        "# Greek alphabet; polytonic marks are stripped after canonical\n"
        "# decomposition, so accented and breathing-marked forms rank with\n"
        "# their base letters.  Final sigma ranks right after sigma.\n"
        "strip 0300 0301 0304 0306 0308 0313 0314 0342 0343 0344 0345\n"
        "\xCE\xB1\n"                 // α
        "\xCE\xB2\n"                 // β
        "\xCE\xB3\n"                 // γ
        "\xCE\xB4\n"                 // δ
        "\xCE\xB5\n"                 // ε
        "\xCE\xB6\n"                 // ζ
        "\xCE\xB7\n"                 // η
        "\xCE\xB8\n"                 // θ
        "\xCE\xB9\n"                 // ι
        "\xCE\xBA\n"                 // κ
        "\xCE\xBB\n"                 // λ
        "\xCE\xBC\n"                 // μ
        "\xCE\xBD\n"                 // ν
        "\xCE\xBE\n"                 // ξ
        "\xCE\xBF\n"                 // ο
        "\xCF\x80\n"                 // π
        "\xCF\x81\n"                 // ρ
        "\xCF\x83\n"                 // σ
        "\xCF\x82\n"                 // ς
        "\xCF\x84\n"                 // τ
        "\xCF\x85\n"                 // υ
        "\xCF\x86\n"                 // φ
        "\xCF\x87\n"                 // χ
        "\xCF\x88\n"                 // ψ
        "\xCF\x89\n";                // ω
}

} // namespace concord

#endif
