// Adaptation: turns table rows into directed alignments.  "X" below is the
// indexed language of the chosen direction, "Y" its counterpart.
//
// Rows are first grouped into units:
//
//   * every maximal run of consecutive X-grouped rows (sg/gg flag for the
//     X side) seeds one unit — a multi-word expression;
//   * every remaining row that carries an X word, X variant readings, or a
//     grammatical label addressed to the Y side seeds a unit of its own;
//   * a unit absorbs the full extent of any Y-side group overlapping its
//     rows, so that phrase-to-phrase pairings of different lengths share
//     one address span and one pair of text surfaces.
//
// Each unit yields X usages — one per lemmatised main word (phrase members
// included), one per lemmatised variant reading, one per grammatical label —
// and a set of Y alternatives: the main counterpart (single word or phrase),
// one per lemmatised Y variant reading, or a standing "om." block when the
// counterpart side has nothing at all.  Every usage is paired with every
// alternative; grammatically marked words instead pair with their label, and
// labels pair back with the marked word's lemma.  The pairing is symmetric:
// running the opposite direction over the same rows mirrors it exactly.
#ifndef CONCORD_ADAPT_HPP
#define CONCORD_ADAPT_HPP

#include <optional>
#include <string>
#include <vector>

#include "concord/address.hpp"
#include "concord/config.hpp"
#include "concord/diagnostics.hpp"
#include "concord/table.hpp"

namespace concord {

// One entry of the "»" cross-reference trail: a reading of the same unit
// other than the two that form the alignment itself.
struct AltDisplay {
    std::string element;        // most specific lemma element; "Ø" for omissions
    std::string surface;        // text as written; "Ø" for omissions
    std::string sigla;          // witness cluster ("WH"), or the main siglum
    bool main = false;          // reading of the main text
    bool omitted = false;       // witnesses omit the word
};

// One directed alignment: an indexed usage paired with one counterpart
// alternative, plus everything needed to print it.
struct AlignedUse {
    // Indexed side.
    std::vector<std::string> x_chain;   // lemma, then sublemmas
    std::string x_surface;              // unit text, or the variant reading
    std::vector<std::string> x_sigla;   // non-empty for variant usages
    bool x_variant = false;
    bool x_label = false;               // pseudo-entry from a grammatical label
    int x_row = 0;                      // source row: usage identity
    int x_alt = 0;                      // 0 = main text, k = k-th variant reading

    // Counterpart side.
    std::vector<std::string> y_chain;
    std::string y_surface;
    std::vector<std::string> y_sigla;
    bool y_variant = false;
    bool y_phrase = false;              // render as a decomposition
    std::vector<std::string> y_members; // phrase member lemmas
    bool y_gramm = false;               // render with a trailing "gramm."
    bool y_om = false;                  // untranslated

    // Shared unit data.
    Address address;
    bool quote = false;
    std::vector<AltDisplay> alts;       // indexed side's others first
};

namespace detail {

inline std::vector<std::string> chain_of(const Row& row, const SideColumns& cols) {
    std::vector<std::string> chain;
    const std::string& lemma = row.cells[static_cast<size_t>(cols.lemma)];
    if (lemma.empty()) return chain;
    chain.push_back(lemma);
    for (int c : cols.sublemmas) {
        const std::string& sub = row.cells[static_cast<size_t>(c)];
        if (sub.empty()) break;
        chain.push_back(sub);
    }
    return chain;
}

inline std::string join_sigla(const std::vector<std::string>& sigla) {
    std::string out;
    for (const std::string& s : sigla) out += s;
    return out;
}

// One reading of the Y side that alignments can pair with.
struct YAlternative {
    std::vector<std::string> chain;
    std::string surface;
    std::vector<std::string> sigla;
    bool variant = false;
    bool phrase = false;
    std::vector<std::string> members;
    bool om = false;
};

struct UnitScratch {
    int seed_lo, seed_hi;           // X rows (group members / the single row)
    int lo, hi;                     // full unit extent
    bool group = false;
};

} // namespace detail

// Extracts the alignments of one direction.  The table should have been
// validated first; structurally broken material is skipped here without
// further diagnostics.
inline std::vector<AlignedUse> adapt(const Table& table, Direction direction,
                                     const SiglaConfig& sigla) {
    const Lang x_lang = source_lang(direction);
    const Lang y_lang = target_lang(direction);
    const SideColumns& xc = side_columns(x_lang);
    const SideColumns& yc = side_columns(y_lang);
    const std::vector<Row>& rows = table.rows;
    Diagnostics scratch;  // re-parse diagnostics are duplicates of validation's

    auto x_word = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(xc.word)]; };
    auto y_word = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(yc.word)]; };
    auto x_lemma = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(xc.lemma)]; };
    auto y_lemma = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(yc.lemma)]; };
    auto x_sub1 = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(xc.sublemmas[0])]; };
    auto y_sub1 = [&](int r) -> const std::string& { return rows[static_cast<size_t>(r)].cells[static_cast<size_t>(yc.sublemmas[0])]; };
    auto x_has_variants = [&](int r) { return !rows[static_cast<size_t>(r)].cells[static_cast<size_t>(xc.variant_word)].empty(); };
    // A grammatical label aimed at the Y side: the Y word carries "gramm.",
    // this side's lemma column holds the label.
    auto is_x_label = [&](int r) { return y_sub1(r) == gramm_marker && !x_lemma(r).empty() && x_word(r).empty(); };

    std::vector<AlignedUse> out;

    size_t scan = 0;
    while (scan < rows.size()) {
        if (rows[scan].is_boundary()) { ++scan; continue; }
        size_t seg_lo = scan;
        while (scan < rows.size() && !rows[scan].is_boundary()) ++scan;
        int lo = static_cast<int>(seg_lo), hi = static_cast<int>(scan) - 1;

        // Maximal Y-side runs within the segment, for unit extension.
        std::vector<std::pair<int, int>> y_runs;
        for (int r = lo; r <= hi;) {
            if (!group_flag(rows[static_cast<size_t>(r)], y_lang)) { ++r; continue; }
            int s = r;
            while (r + 1 <= hi && group_flag(rows[static_cast<size_t>(r + 1)], y_lang)) ++r;
            y_runs.emplace_back(s, r);
            ++r;
        }

        // Unit seeds: X runs first, then qualifying loose rows.
        std::vector<detail::UnitScratch> units;
        for (int r = lo; r <= hi;) {
            if (group_flag(rows[static_cast<size_t>(r)], x_lang)) {
                int s = r;
                while (r + 1 <= hi && group_flag(rows[static_cast<size_t>(r + 1)], x_lang)) ++r;
                units.push_back({s, r, s, r, true});
                ++r;
            } else {
                if ((!x_word(r).empty() && x_word(r) != omission_word && !x_lemma(r).empty()) ||
                    x_has_variants(r) || is_x_label(r))
                    units.push_back({r, r, r, r, false});
                ++r;
            }
        }
        for (detail::UnitScratch& unit : units)
            for (const auto& [ys, ye] : y_runs)
                if (ys <= unit.seed_hi && ye >= unit.seed_lo) {
                    unit.lo = std::min(unit.lo, ys);
                    unit.hi = std::max(unit.hi, ye);
                }

        for (const detail::UnitScratch& unit : units) {
            // Shared unit data: surfaces, address span, quotation flag.
            std::string x_surface, y_surface;
            std::vector<Address> addresses;
            bool quote = false;
            for (int r = unit.lo; r <= unit.hi; ++r) {
                const Row& row = rows[static_cast<size_t>(r)];
                if (!x_word(r).empty() && x_word(r) != omission_word) {
                    if (!x_surface.empty()) x_surface += ' ';
                    x_surface += x_word(r);
                }
                if (!y_word(r).empty() && y_word(r) != omission_word) {
                    if (!y_surface.empty()) y_surface += ' ';
                    y_surface += y_word(r);
                }
                quote = quote || row.flags.quote;
                AddressParse parsed = parse_address(row.cells[col_address_index()]);
                if (parsed.address) addresses.push_back(*parsed.address);
            }
            if (addresses.empty()) continue;  // already reported by validation
            Address address = cover_addresses(addresses, sigla.address_witness_order());

            // Y alternatives.
            std::vector<int> y_rows;
            for (int r = unit.lo; r <= unit.hi; ++r)
                if (!y_word(r).empty() && y_word(r) != omission_word && !y_lemma(r).empty() &&
                    y_sub1(r) != gramm_marker)
                    y_rows.push_back(r);
            std::vector<detail::YAlternative> y_alts;
            std::vector<AltDisplay> y_omissions;
            if (y_rows.size() >= 2) {
                detail::YAlternative phrase;
                phrase.phrase = true;
                phrase.surface = y_surface;
                for (int r : y_rows) {
                    phrase.members.push_back(y_lemma(r));
                    if (phrase.chain.empty() && !y_sub1(r).empty() && y_sub1(r) != gramm_marker)
                        phrase.chain.push_back(y_sub1(r));
                }
                if (phrase.chain.empty()) {
                    // No expression sublemma recorded; fall back to the joined lemmas.
                    std::string joined;
                    for (const std::string& m : phrase.members) {
                        if (!joined.empty()) joined += ' ';
                        joined += m;
                    }
                    phrase.chain.push_back(joined);
                }
                y_alts.push_back(std::move(phrase));
            } else if (y_rows.size() == 1) {
                detail::YAlternative single;
                single.chain = detail::chain_of(rows[static_cast<size_t>(y_rows[0])], yc);
                single.surface = y_surface;
                y_alts.push_back(std::move(single));
            }
            for (int r = unit.lo; r <= unit.hi; ++r) {
                for (const VariantReading& reading :
                     parse_variant_cell(rows[static_cast<size_t>(r)], y_lang, sigla, scratch)) {
                    if (reading.omitted) {
                        y_omissions.push_back({omission_reading, omission_reading,
                                               detail::join_sigla(reading.sigla), false, true});
                        continue;
                    }
                    if (reading.chain.empty()) continue;
                    detail::YAlternative alt;
                    alt.chain = reading.chain;
                    alt.surface = reading.surface;
                    alt.sigla = reading.sigla;
                    alt.variant = true;
                    y_alts.push_back(std::move(alt));
                }
            }
            bool y_empty = y_alts.empty();
            if (y_empty) {
                detail::YAlternative om;
                om.chain.push_back(omission_word);
                om.surface = omission_word;
                om.om = true;
                y_alts.push_back(std::move(om));
            }
            std::string y_main_siglum = sigla.main_siglum_at(y_lang, address.start.witness);
            std::string x_main_siglum = sigla.main_siglum_at(x_lang, address.start.witness);

            // X usages of the unit.
            struct XUsage {
                std::vector<std::string> chain;
                std::string surface;
                std::vector<std::string> sigla;
                bool variant = false;
                bool label = false;
                int row = 0;
                int alt = 0;
                std::optional<detail::YAlternative> fixed;  // label pairing
                std::vector<AltDisplay> own_alts;           // same-row other readings
            };
            std::vector<XUsage> usages;

            std::string phrase_expr;
            if (unit.group)
                for (int r = unit.seed_lo; r <= unit.seed_hi; ++r)
                    if (phrase_expr.empty() && !x_sub1(r).empty() && x_sub1(r) != gramm_marker)
                        phrase_expr = x_sub1(r);

            for (int r = unit.seed_lo; r <= unit.seed_hi; ++r) {
                const Row& row = rows[static_cast<size_t>(r)];
                std::vector<VariantReading> readings = parse_variant_cell(row, x_lang, sigla, scratch);

                if (is_x_label(r)) {
                    XUsage pseudo;
                    pseudo.chain = detail::chain_of(row, xc);
                    pseudo.surface = x_surface;
                    pseudo.label = true;
                    pseudo.row = r;
                    detail::YAlternative back;
                    back.chain.push_back(y_lemma(r));
                    back.surface = y_surface;
                    pseudo.fixed = std::move(back);
                    usages.push_back(std::move(pseudo));
                } else if (!x_word(r).empty() && x_word(r) != omission_word && !x_lemma(r).empty()) {
                    XUsage main;
                    main.chain = detail::chain_of(row, xc);
                    if (unit.group && main.chain.size() == 1 && !phrase_expr.empty())
                        main.chain.push_back(phrase_expr);
                    main.surface = x_surface;
                    main.row = r;
                    if (x_sub1(r) == gramm_marker && !y_lemma(r).empty()) {
                        detail::YAlternative label;
                        label.chain.push_back(y_lemma(r));
                        label.surface = y_surface;
                        main.fixed = std::move(label);
                    }
                    usages.push_back(std::move(main));
                }

                // Other readings of this row, shown after "»" on each line.
                std::vector<AltDisplay> row_alts_for_variant;  // includes the main text
                std::vector<AltDisplay> row_alts_for_main;     // variants only
                if (!x_word(r).empty() && x_word(r) != omission_word && !x_lemma(r).empty())
                    row_alts_for_variant.push_back({detail::chain_of(row, xc).back(), x_word(r),
                                                    x_main_siglum, true, false});
                for (const VariantReading& reading : readings) {
                    AltDisplay alt;
                    if (reading.omitted) {
                        alt = {omission_reading, omission_reading, detail::join_sigla(reading.sigla), false, true};
                    } else {
                        if (reading.chain.empty()) continue;
                        alt = {reading.chain.back(), reading.surface, detail::join_sigla(reading.sigla), false, false};
                    }
                    row_alts_for_variant.push_back(alt);
                    row_alts_for_main.push_back(alt);
                }
                if (!usages.empty() && usages.back().row == r && !usages.back().variant)
                    usages.back().own_alts = row_alts_for_main;

                int ordinal = 0;
                for (const VariantReading& reading : readings) {
                    ++ordinal;
                    if (reading.omitted || reading.chain.empty()) continue;
                    XUsage var;
                    var.chain = reading.chain;
                    var.surface = reading.surface;
                    var.sigla = reading.sigla;
                    var.variant = true;
                    var.row = r;
                    var.alt = ordinal;
                    // Everything in the cell except this reading, main first.
                    for (const AltDisplay& alt : row_alts_for_variant)
                        if (alt.main || alt.surface != reading.surface ||
                            alt.sigla != detail::join_sigla(reading.sigla))
                            var.own_alts.push_back(alt);
                    usages.push_back(std::move(var));
                }
            }

            // Cross product: every usage against every counterpart
            // alternative; label pairings stay one-to-one.
            for (const XUsage& usage : usages) {
                std::vector<const detail::YAlternative*> partners;
                if (usage.fixed) partners.push_back(&*usage.fixed);
                else
                    for (const detail::YAlternative& alt : y_alts) partners.push_back(&alt);
                for (const detail::YAlternative* partner : partners) {
                    AlignedUse use;
                    use.x_chain = usage.chain;
                    use.x_surface = usage.surface;
                    use.x_sigla = usage.sigla;
                    use.x_variant = usage.variant;
                    use.x_label = usage.label;
                    use.x_row = rows[static_cast<size_t>(usage.row)].line;
                    use.x_alt = usage.alt;
                    use.y_chain = partner->chain;
                    use.y_surface = partner->surface;
                    use.y_sigla = partner->sigla;
                    use.y_variant = partner->variant;
                    use.y_phrase = partner->phrase;
                    use.y_members = partner->members;
                    use.y_gramm = usage.label;  // the lemma of a marked word
                    use.y_om = partner->om;
                    use.address = address;
                    use.quote = quote;
                    use.alts = usage.own_alts;
                    if (!usage.fixed) {
                        // Counterpart side's other readings follow the
                        // indexed side's own.
                        for (const detail::YAlternative& other : y_alts) {
                            if (&other == partner) continue;
                            if (other.variant)
                                use.alts.push_back({other.chain.back(), other.surface,
                                                    detail::join_sigla(other.sigla), false, false});
                            else if (!other.om)
                                use.alts.push_back({other.chain.back(), other.surface, y_main_siglum,
                                                    true, false});
                        }
                        for (const AltDisplay& om : y_omissions) use.alts.push_back(om);
                    }
                    out.push_back(std::move(use));
                }
            }
        }
    }
    return out;
}

} // namespace concord

#endif
