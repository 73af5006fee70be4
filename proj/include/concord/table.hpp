// The alignment table: a tab-separated file with twenty fixed columns and an
// optional trailing flags column.
//
//   A        Slavonic variant reading(s)
//   B..D     lemma chain for the Slavonic variants (lemma, then sublemmas)
//   E        manuscript address of the Slavonic word
//   F        Slavonic word as it stands in the main witness ("om." when the
//            main text has no counterpart for the Greek)
//   G        free-form context; carried through untouched, never interpreted
//   H        Slavonic lemma
//   I..K     Slavonic sublemmas, most general first, no gaps
//   L        Greek word ("om." likewise)
//   M        Greek lemma
//   N..P     Greek sublemmas
//   Q        Greek variant reading(s)
//   R..T     lemma chain for the Greek variants
//   (21st)   semicolon-separated flags: sg / gg (the row belongs to a
//            multi-word unit on the Slavonic / Greek side), bq (quotation,
//            set in bold italic on output)
//
// Blank lines separate alignment groups.  Rows with the wrong number of
// fields are reported and act as group separators so that damage does not
// silently merge unrelated groups.
//
// Variant readings use a small grammar:
//
//   reading SIGLA ( "/" reading SIGLA )*
//
// where SIGLA is the last whitespace-separated token of each piece, read
// greedily as a run of the side's known non-main sigla ("WH" = W + H), and a
// reading of "Ø" records that the witnesses omit the word.  The lemma cells
// B..D (R..T) split on "/" in parallel: either one piece per reading, or one
// piece per non-omitted reading.
#ifndef CONCORD_TABLE_HPP
#define CONCORD_TABLE_HPP

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "concord/address.hpp"
#include "concord/config.hpp"
#include "concord/diagnostics.hpp"

namespace concord {

inline constexpr int column_count = 20;
inline constexpr const char* gramm_marker = "gramm.";
inline constexpr const char* omission_word = "om.";      // main text omits
inline constexpr const char* omission_reading = "\xC3\x98";  // Ø: witness omits

// The address column (E) is shared by both sides.
inline constexpr size_t col_address_index() { return 4; }

// Columns are reported to the user by their spreadsheet letter.
inline std::string column_name(int index) {
    if (index >= 0 && index < column_count) return std::string(1, static_cast<char>('A' + index));
    return "flags";
}

struct StyleFlags {
    bool slav_group = false;   // sg
    bool greek_group = false;  // gg
    bool quote = false;        // bq
};

struct Row {
    int line = 0;  // 1-based line in the source file
    std::array<std::string, column_count> cells;
    StyleFlags flags;
    bool separator = false;  // blank line in the source
    bool malformed = false;  // wrong field count; kept only as a boundary

    bool is_boundary() const { return separator || malformed; }
};

struct Table {
    std::vector<Row> rows;
};

// Column layout of one language side.
struct SideColumns {
    int variant_word;
    std::array<int, 3> variant_lemmas;
    int word;
    int lemma;
    std::array<int, 3> sublemmas;
};

inline const SideColumns& side_columns(Lang lang) {
    static const SideColumns slav{0, {1, 2, 3}, 5, 7, {8, 9, 10}};
    static const SideColumns greek{16, {17, 18, 19}, 11, 12, {13, 14, 15}};
    return lang == Lang::slavonic ? slav : greek;
}

inline bool group_flag(const Row& row, Lang lang) {
    return lang == Lang::slavonic ? row.flags.slav_group : row.flags.greek_group;
}

namespace detail {

inline std::string trim(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    size_t end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split(std::string_view text, char by) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(by, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            return out;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace detail

inline Table parse_table(const std::string& text, Diagnostics& diagnostics) {
    Table table;
    std::vector<std::string> lines = detail::split(text, '\n');
    // A trailing newline produces one empty phantom line; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Row row;
        row.line = static_cast<int>(i) + 1;
        std::vector<std::string> fields = detail::split(line, '\t');
        bool all_blank = true;
        for (const std::string& f : fields)
            if (!detail::trim(f).empty()) { all_blank = false; break; }
        if (all_blank) {
            row.separator = true;
            table.rows.push_back(std::move(row));
            continue;
        }
        if (fields.size() != column_count && fields.size() != column_count + 1) {
            diagnostics.push_back({Severity::error, row.line, "",
                                   "expected " + std::to_string(column_count) + " or " +
                                       std::to_string(column_count + 1) + " fields, found " +
                                       std::to_string(fields.size())});
            row.malformed = true;
            table.rows.push_back(std::move(row));
            continue;
        }
        for (int c = 0; c < column_count; ++c) row.cells[static_cast<size_t>(c)] = detail::trim(fields[static_cast<size_t>(c)]);
        if (fields.size() == column_count + 1) {
            for (const std::string& token : detail::split(fields[column_count], ';')) {
                std::string flag = detail::trim(token);
                if (flag.empty()) continue;
                if (flag == "sg") row.flags.slav_group = true;
                else if (flag == "gg") row.flags.greek_group = true;
                else if (flag == "bq") row.flags.quote = true;
                else
                    diagnostics.push_back({Severity::error, row.line, column_name(column_count),
                                           "unknown flag '" + flag + "' (expected sg, gg or bq)"});
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Variant readings

struct VariantReading {
    std::string surface;              // empty when the witnesses omit the word
    bool omitted = false;             // reading was Ø
    std::vector<std::string> sigla;   // non-main sigla, in written order
    std::vector<std::string> chain;   // lemma, then sublemmas
};

namespace detail {

// Greedily decompose "WH" / "CsM" into known sigla, longest first at each
// position.  On failure returns the offset of the first unreadable character.
inline bool decompose_sigla(const std::string& cluster, const std::vector<std::string>& known,
                            std::vector<std::string>& out, size_t& bad_offset) {
    std::vector<std::string> by_length = known;
    std::sort(by_length.begin(), by_length.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    size_t pos = 0;
    while (pos < cluster.size()) {
        bool matched = false;
        for (const std::string& siglum : by_length) {
            if (cluster.compare(pos, siglum.size(), siglum) == 0) {
                out.push_back(siglum);
                pos += siglum.size();
                matched = true;
                break;
            }
        }
        if (!matched) { bad_offset = pos; return false; }
    }
    return !out.empty();
}

} // namespace detail

// Parses the variant word cell and its lemma columns for one side of a row.
// Diagnostics carry the row's line number and the offending column.
inline std::vector<VariantReading> parse_variant_cell(const Row& row, Lang lang,
                                                      const SiglaConfig& sigla,
                                                      Diagnostics& diagnostics) {
    const SideColumns& cols = side_columns(lang);
    const std::string& cell = row.cells[static_cast<size_t>(cols.variant_word)];
    std::vector<VariantReading> readings;
    if (cell.empty()) return readings;

    const std::string word_col = column_name(cols.variant_word);
    const std::vector<std::string>& known = sigla.side(lang).others;
    bool cell_ok = true;

    for (const std::string& piece_raw : detail::split(cell, '/')) {
        std::string piece = detail::trim(piece_raw);
        VariantReading reading;
        if (piece.empty()) {
            diagnostics.push_back({Severity::error, row.line, word_col, "empty variant reading"});
            cell_ok = false;
            continue;
        }
        size_t cut = piece.find_last_of(" \t");
        std::string cluster = cut == std::string::npos ? piece : piece.substr(cut + 1);
        std::string surface = cut == std::string::npos ? std::string() : detail::trim(piece.substr(0, cut));
        size_t bad = 0;
        if (!detail::decompose_sigla(cluster, known, reading.sigla, bad)) {
            if (cut == std::string::npos)
                diagnostics.push_back({Severity::error, row.line, word_col,
                                       "variant reading '" + piece + "' has no witness sigla"});
            else
                diagnostics.push_back({Severity::error, row.line, word_col,
                                       "unknown siglum at '" + cluster.substr(bad) + "' in variant reading '" +
                                           piece + "'"});
            cell_ok = false;
            continue;
        }
        if (surface.empty()) {
            diagnostics.push_back({Severity::error, row.line, word_col,
                                   "variant reading '" + piece + "' has witness sigla but no text"});
            cell_ok = false;
            continue;
        }
        if (surface == omission_reading) {
            reading.omitted = true;
        } else {
            // Collapse internal runs of whitespace in multi-word readings.
            std::istringstream words(surface);
            std::string word, joined;
            while (words >> word) {
                if (!joined.empty()) joined += ' ';
                joined += word;
            }
            reading.surface = joined;
        }
        readings.push_back(std::move(reading));
    }

    // Duplicate sigla across readings usually means a typo in the cell.
    std::vector<std::string> seen;
    for (const VariantReading& reading : readings)
        for (const std::string& siglum : reading.sigla) {
            if (std::find(seen.begin(), seen.end(), siglum) != seen.end())
                diagnostics.push_back({Severity::warning, row.line, word_col,
                                       "siglum " + siglum + " attached to more than one variant reading"});
            seen.push_back(siglum);
        }

    if (!cell_ok) return readings;

    // Attach the lemma chain columns.  Each splits on "/" in step with the
    // readings; a count matching only the non-omitted readings is also
    // accepted, since omitted readings have nothing to lemmatise.
    size_t total = readings.size();
    size_t lemmatisable = 0;
    for (const VariantReading& reading : readings)
        if (!reading.omitted) ++lemmatisable;

    for (size_t depth = 0; depth < cols.variant_lemmas.size(); ++depth) {
        const std::string& lemma_cell = row.cells[static_cast<size_t>(cols.variant_lemmas[depth])];
        if (lemma_cell.empty()) continue;
        const std::string lemma_col = column_name(cols.variant_lemmas[depth]);
        std::vector<std::string> pieces = detail::split(lemma_cell, '/');
        for (std::string& piece : pieces) {
            piece = detail::trim(piece);
            // Tolerate sigla repeated after the lemma; they add nothing.
            size_t cut = piece.find_last_of(" \t");
            if (cut != std::string::npos) {
                std::vector<std::string> dummy;
                size_t bad = 0;
                if (detail::decompose_sigla(piece.substr(cut + 1), known, dummy, bad))
                    piece = detail::trim(piece.substr(0, cut));
            }
        }
        std::vector<VariantReading*> targets;
        if (pieces.size() == total) {
            for (VariantReading& reading : readings) targets.push_back(&reading);
        } else if (pieces.size() == lemmatisable) {
            for (VariantReading& reading : readings)
                if (!reading.omitted) targets.push_back(&reading);
        } else {
            diagnostics.push_back({Severity::error, row.line, lemma_col,
                                   "lemma cell splits into " + std::to_string(pieces.size()) +
                                       " pieces for " + std::to_string(total) + " variant readings"});
            continue;
        }
        for (size_t i = 0; i < targets.size(); ++i) {
            if (pieces[i].empty()) continue;
            if (targets[i]->omitted) {
                diagnostics.push_back({Severity::warning, row.line, lemma_col,
                                       "lemma '" + pieces[i] + "' attached to an omitted reading; ignored"});
                continue;
            }
            if (targets[i]->chain.size() < depth) {
                diagnostics.push_back({Severity::error, row.line, lemma_col,
                                       "sublemma '" + pieces[i] + "' without a lemma at the previous level"});
                continue;
            }
            targets[i]->chain.push_back(pieces[i]);
        }
    }

    for (const VariantReading& reading : readings)
        if (!reading.omitted && reading.chain.empty())
            diagnostics.push_back({Severity::error, row.line,
                                   column_name(cols.variant_lemmas[0]),
                                   "variant reading '" + reading.surface + "' has no lemma"});
    return readings;
}

// ---------------------------------------------------------------------------
// Whole-table validation

namespace detail {

inline bool witness_known(const SiglaConfig& sigla, const std::string& witness) {
    return witness.empty() || sigla.knows(Lang::slavonic, witness) || sigla.knows(Lang::greek, witness);
}

} // namespace detail

// Checks everything the later stages rely on.  Errors make the table
// unsuitable for publication output; warnings flag suspicious but
// processable data.
inline Diagnostics validate_table(const Table& table, const SiglaConfig& sigla) {
    Diagnostics diagnostics;
    for (const Row& row : table.rows) {
        if (row.is_boundary()) continue;

        // Address.
        const std::string& addr_cell = row.cells[col_address_index()];
        if (addr_cell.empty()) {
            diagnostics.push_back({Severity::error, row.line, column_name(col_address_index()), "missing address"});
        } else {
            AddressParse parsed = parse_address(addr_cell);
            if (!parsed.address) {
                diagnostics.push_back({Severity::error, row.line, column_name(col_address_index()),
                                       "bad address '" + addr_cell + "': " + parsed.error});
            } else {
                const Address& addr = *parsed.address;
                if (!detail::witness_known(sigla, addr.start.witness) ||
                    (addr.end && !detail::witness_known(sigla, addr.end->witness)))
                    diagnostics.push_back({Severity::warning, row.line, column_name(col_address_index()),
                                           "address names a witness outside the configured sigla"});
                if (addr.end && (addr.end->sermon != addr.start.sermon || addr.end->page != addr.start.page))
                    diagnostics.push_back({Severity::warning, row.line, column_name(col_address_index()),
                                           "single-row address spans more than one page"});
            }
        }

        for (Lang lang : {Lang::slavonic, Lang::greek}) {
            const SideColumns& cols = side_columns(lang);
            const std::string& word = row.cells[static_cast<size_t>(cols.word)];
            const std::string& lemma = row.cells[static_cast<size_t>(cols.lemma)];
            const std::string& sub1 = row.cells[static_cast<size_t>(cols.sublemmas[0])];
            const std::string& sub2 = row.cells[static_cast<size_t>(cols.sublemmas[1])];
            const std::string& sub3 = row.cells[static_cast<size_t>(cols.sublemmas[2])];
            const SideColumns& other = side_columns(lang == Lang::slavonic ? Lang::greek : Lang::slavonic);
            const std::string& other_sub1 = row.cells[static_cast<size_t>(other.sublemmas[0])];

            if (!word.empty() && word != omission_word && lemma.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(cols.lemma),
                                       "word '" + word + "' has no lemma"});
            if (word == omission_word && !lemma.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(cols.lemma),
                                       "omitted word must not carry a lemma"});
            // A lemma with no word is only meaningful as the grammatical
            // label of the other side's marked word.
            if (word.empty() && !lemma.empty() && other_sub1 != gramm_marker)
                diagnostics.push_back({Severity::error, row.line, column_name(cols.lemma),
                                       "lemma '" + lemma + "' has no word"});

            if (!sub2.empty() && sub1.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(cols.sublemmas[1]),
                                       "sublemma levels must be contiguous"});
            if (!sub3.empty() && sub2.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(cols.sublemmas[2]),
                                       "sublemma levels must be contiguous"});
            if (!sub1.empty() && lemma.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(cols.sublemmas[0]),
                                       "sublemma without a lemma"});

            if (sub1 == gramm_marker) {
                const std::string& label = row.cells[static_cast<size_t>(other.lemma)];
                const std::string& other_word = row.cells[static_cast<size_t>(other.word)];
                if (label.empty())
                    diagnostics.push_back({Severity::error, row.line, column_name(other.lemma),
                                           "grammatical row lacks a label in the counterpart lemma column"});
                if (!other_word.empty())
                    diagnostics.push_back({Severity::error, row.line, column_name(other.word),
                                           "grammatical row must not carry a counterpart word"});
            }
            if (sub2 == gramm_marker || sub3 == gramm_marker)
                diagnostics.push_back({Severity::error, row.line, column_name(cols.sublemmas[sub2 == gramm_marker ? 1 : 2]),
                                       "grammatical marker must stand in the first sublemma column"});

            const std::string& variant_word = row.cells[static_cast<size_t>(cols.variant_word)];
            bool variant_lemmas_present = false;
            for (int c : cols.variant_lemmas)
                if (!row.cells[static_cast<size_t>(c)].empty()) variant_lemmas_present = true;
            if (variant_word.empty() && variant_lemmas_present)
                diagnostics.push_back({Severity::error, row.line, column_name(cols.variant_lemmas[0]),
                                       "variant lemmas without a variant reading"});
            if (!variant_word.empty())
                parse_variant_cell(row, lang, sigla, diagnostics);

            if (group_flag(row, lang) && word.empty() && variant_word.empty() && lemma.empty())
                diagnostics.push_back({Severity::error, row.line, column_name(column_count),
                                       std::string("group flag on a row with no ") +
                                           (lang == Lang::slavonic ? "Slavonic" : "Greek") + " material"});
        }
    }

    // Single-row groups are legal but usually mean a forgotten flag on a
    // neighbouring row.
    for (Lang lang : {Lang::slavonic, Lang::greek}) {
        size_t i = 0;
        const std::vector<Row>& rows = table.rows;
        while (i < rows.size()) {
            if (rows[i].is_boundary() || !group_flag(rows[i], lang)) { ++i; continue; }
            size_t j = i;
            while (j + 1 < rows.size() && !rows[j + 1].is_boundary() && group_flag(rows[j + 1], lang)) ++j;
            if (j == i)
                diagnostics.push_back({Severity::warning, rows[i].line, column_name(column_count),
                                       std::string(lang == Lang::slavonic ? "Slavonic" : "Greek") +
                                           " group consists of a single row"});
            i = j + 1;
        }
    }

    sort_diagnostics(diagnostics);
    return diagnostics;
}

} // namespace concord

#endif
