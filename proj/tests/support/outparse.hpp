// String-level parsers for the plain-text artifacts.  They rebuild, from the
// rendered documents alone, which counterpart blocks exist under which
// heading path, with which counts and addresses — so index and list can be
// checked against each other without touching the library internals.
#ifndef CONCORD_TESTS_OUTPARSE_HPP
#define CONCORD_TESTS_OUTPARSE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace testparse {

struct Counts {
    int main = 0;
    int variant = 0;
    int total() const { return main + variant; }
};

struct Block {
    Counts counts;                       // index bullets only
    std::vector<std::string> addresses;  // one per ref / list line, in order
};

// (heading path joined by '\x1f') + '\x1f' + counterpart label  ->  block
using Blocks = std::map<std::string, Block>;

inline size_t indent_of(const std::string& line) {
    size_t tabs = 0;
    while (tabs < line.size() && line[tabs] == '\t') ++tabs;
    return tabs;
}

inline bool starts_with(const std::string& text, const std::string& prefix) {
    return text.compare(0, prefix.size(), prefix) == 0;
}

// "(3)", "(1 + 2^{var})", "(2^{var})"  ->  {main, variant}
inline Counts parse_counts(const std::string& text) {
    Counts counts;
    std::string inner = text;
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
        throw std::runtime_error("not a count group: " + text);
    inner = inner.substr(1, inner.size() - 2);
    size_t plus = inner.find(" + ");
    auto read_one = [](const std::string& piece, Counts& into) {
        size_t mark = piece.find("^{var}");
        if (mark != std::string::npos) into.variant = std::stoi(piece.substr(0, mark));
        else into.main = std::stoi(piece);
    };
    if (plus == std::string::npos) {
        read_one(inner, counts);
    } else {
        read_one(inner.substr(0, plus), counts);
        read_one(inner.substr(plus + 3), counts);
    }
    return counts;
}

// The address is the ref text up to the attestation or the cross-reference
// trail, e.g. "1/7d1^{WGH-C} » оу + Gen. S" -> "1/7d1".
inline std::string address_of_ref(const std::string& ref) {
    size_t stop = ref.size();
    size_t sup = ref.find("^{");
    if (sup != std::string::npos) stop = std::min(stop, sup);
    size_t trail = ref.find(" \xC2\xBB");
    if (trail != std::string::npos) stop = std::min(stop, trail);
    std::string address = ref.substr(0, stop);
    // Quoted addresses are emphasised.
    while (starts_with(address, "**")) address = address.substr(2);
    while (address.size() >= 2 && address.compare(address.size() - 2, 2, "**") == 0)
        address = address.substr(0, address.size() - 2);
    return address;
}

inline std::string block_key(const std::vector<std::string>& path, const std::string& label) {
    std::string key;
    for (const std::string& element : path) key += element + '\x1f';
    return key + '\x1f' + label;
}

// Strip the trailing " (…)" count group from an index heading.
inline std::string heading_text(const std::string& body, Counts* counts = nullptr) {
    size_t open = body.rfind(" (");
    if (open == std::string::npos || body.back() != ')')
        throw std::runtime_error("index heading without counts: " + body);
    if (counts) *counts = parse_counts(body.substr(open + 1));
    return body.substr(0, open);
}

struct ParsedIndex {
    Blocks blocks;
    std::map<std::string, Counts> headings;  // path key (trailing '\x1f')
};

inline ParsedIndex parse_index(const std::vector<std::string>& lines) {
    ParsedIndex parsed;
    std::vector<std::string> path;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        size_t tabs = indent_of(line);
        std::string body = line.substr(tabs);
        if (starts_with(body, "\xE2\x80\xA2 ")) {  // bullet
            body = body.substr(4);
            size_t colon = body.find("): ");
            size_t open = body.rfind(" (", colon);
            if (colon == std::string::npos || open == std::string::npos)
                throw std::runtime_error("malformed bullet: " + line);
            std::string label = body.substr(0, open);
            Block block;
            block.counts = parse_counts(body.substr(open + 1, colon - open));
            std::string refs = body.substr(colon + 3);
            size_t begin = 0;
            while (begin <= refs.size()) {
                size_t semi = refs.find("; ", begin);
                std::string ref = refs.substr(
                    begin, semi == std::string::npos ? std::string::npos : semi - begin);
                block.addresses.push_back(address_of_ref(ref));
                if (semi == std::string::npos) break;
                begin = semi + 2;
            }
            parsed.blocks.emplace(block_key(path, label), std::move(block));
        } else {  // heading at depth = indent
            Counts counts;
            std::string text = heading_text(body, &counts);
            path.resize(tabs);
            path.push_back(text);
            std::string key;
            for (const std::string& element : path) key += element + '\x1f';
            parsed.headings.emplace(key, counts);
        }
    }
    return parsed;
}

inline Blocks parse_list(const std::vector<std::string>& lines) {
    Blocks blocks;
    std::vector<std::string> path;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        size_t tabs = indent_of(line);
        std::string body = line.substr(tabs);
        if (tabs == 0) {  // entry heading
            path.assign(1, body);
            continue;
        }
        if (body.front() == '|') {  // sublemma heading: pipes give the depth
            size_t pipes = 0;
            while (pipes < body.size() && body[pipes] == '|') ++pipes;
            std::string text = body.substr(pipes);
            if (!text.empty() && text.front() == ' ') text = text.substr(1);
            path.resize(pipes);
            path.push_back(text);
            continue;
        }
        size_t colon = body.find(": ");
        if (colon == std::string::npos) throw std::runtime_error("malformed list line: " + line);
        std::string label = body.substr(0, colon);
        size_t open = body.rfind(" (");
        if (open == std::string::npos || body.back() != ')')
            throw std::runtime_error("list line without an address: " + line);
        std::string ref = body.substr(open + 2, body.size() - open - 3);
        blocks[block_key(path, label)].addresses.push_back(address_of_ref(ref));
    }
    return blocks;
}

} // namespace testparse

#endif
