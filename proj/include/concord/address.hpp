// Word addresses: sermon/page-column-line references into the edition, with
// optional witness prefix (folia counted in a secondary copy), optional
// repetition counter for words that recur on one line, and optional spans.
//
// Grammar, informally:
//
//   address  = sermon "/" point [ "-" end ]
//   point    = [witness] page column line [ "[" repetition "]" ]
//   end      = [sermon "/"] [witness] [page] [column] line [ "[" repetition "]" ]
//
// where sermon/page/line are positive integers, column is a letter a-d and
// witness is a run of Latin letters.  A span end repeats only the components
// that differ from the start ("10/59a12-13" ends at line 13 of the same
// page and column).  Repetition counters start at 2: the first occurrence of
// a word on a line is unmarked.
#ifndef CONCORD_ADDRESS_HPP
#define CONCORD_ADDRESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace concord {

struct AddressPoint {
    int sermon = 0;
    std::string witness;   // empty when the address counts the main copy
    int page = 0;
    char column = 'a';
    int line = 0;
    int repetition = 0;    // 0 = unmarked, otherwise >= 2
};

struct Address {
    AddressPoint start;
    std::optional<AddressPoint> end;   // engaged for spans
};

struct AddressParse {
    std::optional<Address> address;
    std::string error;   // set when address is empty
};

namespace detail {

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_column_letter(char c) { return c >= 'a' && c <= 'd'; }

// Consumes a run of digits; fails on overflow or empty run.
inline bool take_number(std::string_view& s, int& out) {
    size_t i = 0;
    long value = 0;
    while (i < s.size() && is_ascii_digit(s[i])) {
        value = value * 10 + (s[i] - '0');
        if (value > 1000000) return false;
        ++i;
    }
    if (i == 0) return false;
    out = static_cast<int>(value);
    s.remove_prefix(i);
    return true;
}

inline bool take_repetition(std::string_view& s, int& out, std::string& error) {
    if (s.empty() || s.front() != '[') return true;   // absent is fine
    s.remove_prefix(1);
    int value = 0;
    if (!take_number(s, value) || s.empty() || s.front() != ']') {
        error = "malformed repetition counter";
        return false;
    }
    s.remove_prefix(1);
    if (value < 2) {
        error = "repetition counter must be 2 or greater";
        return false;
    }
    out = value;
    return true;
}

// page column line [rep]; witness handled by the caller.
inline bool take_pcl(std::string_view& s, AddressPoint& p, std::string& error) {
    if (!take_number(s, p.page) || p.page <= 0) {
        error = "missing or invalid page number";
        return false;
    }
    if (s.empty() || !is_column_letter(s.front())) {
        error = "missing column letter (expected a-d)";
        return false;
    }
    p.column = s.front();
    s.remove_prefix(1);
    if (!take_number(s, p.line) || p.line <= 0) {
        error = "missing or invalid line number";
        return false;
    }
    return take_repetition(s, p.repetition, error);
}

} // namespace detail

inline AddressParse parse_address(std::string_view text) {
    using namespace detail;
    AddressParse result;
    std::string_view s = text;
    Address addr;

    if (!take_number(s, addr.start.sermon) || addr.start.sermon <= 0) {
        result.error = "missing or invalid sermon number";
        return result;
    }
    if (s.empty() || s.front() != '/') {
        result.error = "expected '/' after the sermon number";
        return result;
    }
    s.remove_prefix(1);
    while (!s.empty() && is_ascii_letter(s.front()) && !is_ascii_digit(s.front())) {
        addr.start.witness += s.front();
        s.remove_prefix(1);
    }
    if (!take_pcl(s, addr.start, result.error)) return result;

    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
        AddressPoint end = addr.start;
        end.repetition = 0;
        // Optional "sermon/" prefix in the end part.
        size_t slash = s.find('/');
        if (slash != std::string_view::npos) {
            std::string_view head = s.substr(0, slash);
            int sermon = 0;
            std::string_view h = head;
            if (take_number(h, sermon) && h.empty() && sermon > 0) {
                end.sermon = sermon;
                s.remove_prefix(slash + 1);
            }
        }
        size_t letters = 0;
        while (letters < s.size() && is_ascii_letter(s[letters])) ++letters;
        // A single leading a-d followed by nothing but line digits (and an
        // optional repetition) is a column; any other letter run is a witness.
        bool column_like = letters == 1 && is_column_letter(s.front()) &&
                           s.size() > 1 && is_ascii_digit(s[1]) &&
                           s.find_first_not_of("0123456789[]", 1) == std::string_view::npos;
        if (letters > 0 && !column_like) {
            end.witness = std::string(s.substr(0, letters));
            s.remove_prefix(letters);
            if (!take_pcl(s, end, result.error)) return result;
        } else if (column_like) {
            end.column = s.front();
            s.remove_prefix(1);
            if (!take_number(s, end.line) || end.line <= 0) {
                result.error = "missing or invalid line number in span end";
                return result;
            }
            if (!take_repetition(s, end.repetition, result.error)) return result;
        } else {
            // Digits: either "page column line" or a bare line.
            int first = 0;
            if (!take_number(s, first) || first <= 0) {
                result.error = "malformed span end";
                return result;
            }
            if (!s.empty() && is_column_letter(s.front())) {
                end.page = first;
                end.column = s.front();
                s.remove_prefix(1);
                if (!take_number(s, end.line) || end.line <= 0) {
                    result.error = "missing or invalid line number in span end";
                    return result;
                }
            } else {
                end.line = first;
            }
            if (!take_repetition(s, end.repetition, result.error)) return result;
        }
        addr.end = end;
    }

    if (!s.empty()) {
        result.error = "unexpected trailing characters in address";
        return result;
    }
    result.address = addr;
    return result;
}

inline std::string format_point(const AddressPoint& p) {
    std::string out = std::to_string(p.sermon);
    out += '/';
    out += p.witness;
    out += std::to_string(p.page);
    out += p.column;
    out += std::to_string(p.line);
    if (p.repetition >= 2) {
        out += '[';
        out += std::to_string(p.repetition);
        out += ']';
    }
    return out;
}

// Canonical rendering: the span end repeats only the components that differ;
// a span that never leaves its start collapses to a point.
inline std::string format_address(const Address& a) {
    std::string out = format_point(a.start);
    if (!a.end) return out;
    const AddressPoint& s = a.start;
    const AddressPoint& e = *a.end;
    if (e.sermon == s.sermon && e.witness == s.witness && e.page == s.page &&
        e.column == s.column && e.line == s.line && e.repetition == s.repetition)
        return out;
    out += '-';
    if (e.sermon != s.sermon) {
        out += format_point(e);
        return out;
    }
    if (e.witness != s.witness) {
        out += e.witness;
        out += std::to_string(e.page);
        out += e.column;
    } else if (e.page != s.page) {
        out += std::to_string(e.page);
        out += e.column;
    } else if (e.column != s.column) {
        out += e.column;
    }
    out += std::to_string(e.line);
    if (e.repetition >= 2) {
        out += '[';
        out += std::to_string(e.repetition);
        out += ']';
    }
    return out;
}

// Total order over addresses.  Within a sermon, unprefixed addresses (main
// copy foliation) precede witness-prefixed ones; witnesses rank in the order
// they are configured, unknown sigla after the known ones by spelling.
inline int compare_points(const AddressPoint& a, const AddressPoint& b,
                          const std::vector<std::string>& witness_order) {
    if (a.sermon != b.sermon) return a.sermon < b.sermon ? -1 : 1;
    if (a.witness != b.witness) {
        if (a.witness.empty() != b.witness.empty()) return a.witness.empty() ? -1 : 1;
        auto rank = [&](const std::string& w) {
            for (size_t i = 0; i < witness_order.size(); ++i)
                if (witness_order[i] == w) return static_cast<int>(i);
            return static_cast<int>(witness_order.size());
        };
        int ra = rank(a.witness), rb = rank(b.witness);
        if (ra != rb) return ra < rb ? -1 : 1;
        return a.witness < b.witness ? -1 : 1;
    }
    if (a.page != b.page) return a.page < b.page ? -1 : 1;
    if (a.column != b.column) return a.column < b.column ? -1 : 1;
    if (a.line != b.line) return a.line < b.line ? -1 : 1;
    if (a.repetition != b.repetition) return a.repetition < b.repetition ? -1 : 1;
    return 0;
}

inline int compare_addresses(const Address& a, const Address& b,
                             const std::vector<std::string>& witness_order) {
    if (int c = compare_points(a.start, b.start, witness_order)) return c;
    // A point sorts before any span starting at the same place.
    if (a.end.has_value() != b.end.has_value()) return a.end ? 1 : -1;
    if (a.end) return compare_points(*a.end, *b.end, witness_order);
    return 0;
}

// Smallest span (or point) covering every given address.
inline Address cover_addresses(const std::vector<Address>& addrs,
                               const std::vector<std::string>& witness_order) {
    Address out = addrs.front();
    AddressPoint lo = addrs.front().start;
    AddressPoint hi = addrs.front().end ? *addrs.front().end : addrs.front().start;
    for (const Address& a : addrs) {
        if (compare_points(a.start, lo, witness_order) < 0) lo = a.start;
        const AddressPoint& e = a.end ? *a.end : a.start;
        if (compare_points(e, hi, witness_order) > 0) hi = e;
    }
    out.start = lo;
    if (compare_points(lo, hi, witness_order) != 0) out.end = hi;
    else out.end.reset();
    return out;
}

} // namespace concord

#endif
