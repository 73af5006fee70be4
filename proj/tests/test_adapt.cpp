#include <catch2/catch_amalgamated.hpp>

#include <concord/adapt.hpp>
#include <concord/table.hpp>

#include "support/testutil.hpp"

#include <algorithm>
#include <set>

using namespace concord;
using testutil::make_row;

namespace {

std::vector<AlignedUse> adapt_text(const std::string& text, Direction direction) {
    Diagnostics diagnostics;
    Table table = parse_table(text, diagnostics);
    REQUIRE(diagnostics.empty());
    return adapt(table, direction, SiglaConfig{});
}

std::vector<AlignedUse> adapt_fixture(const std::string& stem, Direction direction) {
    return adapt_text(testutil::fixture(stem + ".tsv"), direction);
}

using Chain = std::vector<std::string>;

const AlignedUse& use_with(const std::vector<AlignedUse>& uses, const Chain& x_chain,
                           int x_alt = 0) {
    for (const AlignedUse& use : uses)
        if (use.x_chain == x_chain && use.x_alt == x_alt) return use;
    INFO("no usage with x_alt " << x_alt << " under '"
                                << (x_chain.empty() ? "" : x_chain.front()) << "'");
    REQUIRE(false);
    static AlignedUse dummy;
    return dummy;
}

size_t distinct_usages(const std::vector<AlignedUse>& uses) {
    std::set<std::pair<int, int>> ids;
    for (const AlignedUse& use : uses) ids.insert({use.x_row, use.x_alt});
    return ids.size();
}

} // namespace

TEST_CASE("single row with variants on both sides") {
    auto uses = adapt_fixture("fig1", Direction::slavonic_to_greek);

    // The untranslated main counterpart ("om.") is not an alternative of its
    // own when a variant supplies a real one, so each usage aligns once.
    REQUIRE(uses.size() == 2);
    CHECK(distinct_usages(uses) == 2);

    const AlignedUse& main_use = use_with(uses, {"ѹ praep.", "оу + Gen."});
    CHECK(main_use.x_surface == "оу");
    CHECK_FALSE(main_use.x_variant);
    CHECK(main_use.x_sigla.empty());
    CHECK(main_use.y_variant);
    CHECK(main_use.y_chain == Chain{"παρά", "παρά + Acc."});
    CHECK(main_use.y_surface == "παρ'");
    CHECK(main_use.y_sigla == Chain{"C"});
    CHECK_FALSE(main_use.y_om);
    CHECK(format_address(main_use.address) == "1/7d1");
    REQUIRE(main_use.alts.size() == 1);
    CHECK(main_use.alts[0].element == "въ + Loc.");
    CHECK(main_use.alts[0].surface == "въ");
    CHECK(main_use.alts[0].sigla == "WGH");
    CHECK_FALSE(main_use.alts[0].main);

    const AlignedUse& variant_use = use_with(uses, {"въ", "въ + Loc."}, 1);
    CHECK(variant_use.x_variant);
    CHECK(variant_use.x_surface == "въ");
    CHECK(variant_use.x_sigla == Chain{"W", "G", "H"});
    REQUIRE(variant_use.alts.size() == 1);
    CHECK(variant_use.alts[0].element == "оу + Gen.");
    CHECK(variant_use.alts[0].surface == "оу");
    CHECK(variant_use.alts[0].sigla == "S");
    CHECK(variant_use.alts[0].main);

    auto reverse = adapt_fixture("fig1", Direction::greek_to_slavonic);
    // The omitted Greek main word indexes nothing; only the variant does.
    REQUIRE(reverse.size() == 2);
    CHECK(distinct_usages(reverse) == 1);
    for (const AlignedUse& use : reverse) {
        CHECK(use.x_variant);
        CHECK(use.x_chain == Chain{"παρά", "παρά + Acc."});
    }
    const AlignedUse& to_main = use_with(reverse, {"παρά", "παρά + Acc."}, 1);
    CHECK((to_main.y_chain == Chain{"ѹ praep.", "оу + Gen."} ||
           to_main.y_chain == Chain{"въ", "въ + Loc."}));
}

TEST_CASE("grouped rows form one unit whose surface joins the words") {
    auto uses = adapt_fixture("fig4", Direction::slavonic_to_greek);
    REQUIRE(uses.size() == 2);

    const AlignedUse& first = use_with(uses, {"законъ", "законъ дати"});
    const AlignedUse& second = use_with(uses, {"дати", "законъ дати"});
    for (const AlignedUse* use : {&first, &second}) {
        CHECK(use->x_surface == "закона дати");
        CHECK(use->y_surface == "νομοθετεῖν");
        CHECK(use->y_chain == Chain{"νομοθετέω"});
        CHECK_FALSE(use->y_phrase);
        CHECK(format_address(use->address) == "10/59a12-13");
        CHECK(use->alts.empty());
    }
    CHECK(first.x_row != second.x_row);

    auto reverse = adapt_fixture("fig4", Direction::greek_to_slavonic);
    REQUIRE(reverse.size() == 1);
    CHECK(reverse[0].x_chain == Chain{"νομοθετέω"});
    CHECK(reverse[0].x_surface == "νομοθετεῖν");
    CHECK(reverse[0].y_phrase);
    CHECK(reverse[0].y_chain.back() == "законъ дати");
    CHECK(reverse[0].y_members == Chain{"законъ", "дати"});
    CHECK(reverse[0].y_surface == "закона дати");
}

TEST_CASE("grammatical rows pair their member with the label, not crosswise") {
    auto uses = adapt_fixture("fig5", Direction::slavonic_to_greek);
    REQUIRE(uses.size() == 2);

    const AlignedUse& plain = use_with(uses, {"рещи"});
    CHECK(plain.y_chain == Chain{"λέγω"});
    CHECK(plain.x_surface == "речено ѥсть");
    CHECK(plain.y_surface == "εἴρηται");
    CHECK_FALSE(plain.y_gramm);

    const AlignedUse& member = use_with(uses, {"быти", "gramm."});
    CHECK(member.y_chain == Chain{"pass."});
    CHECK(member.y_surface == "εἴρηται");
    CHECK_FALSE(member.y_gramm);

    auto reverse = adapt_fixture("fig5", Direction::greek_to_slavonic);
    REQUIRE(reverse.size() == 2);

    const AlignedUse& greek = use_with(reverse, {"λέγω"});
    CHECK(greek.y_chain == Chain{"рещи"});
    CHECK_FALSE(greek.x_label);

    const AlignedUse& label = use_with(reverse, {"pass."});
    CHECK(label.x_label);
    CHECK(label.x_surface == "εἴρηται");
    CHECK(label.y_chain == Chain{"быти"});
    CHECK(label.y_gramm);
    CHECK(label.y_surface == "речено ѥсть");
}

TEST_CASE("overlapping groups on the two sides merge into one unit") {
    auto uses = adapt_fixture("fig6", Direction::slavonic_to_greek);
    REQUIRE(uses.size() == 3);

    // The phrase sublemma from the first row reaches every member, including
    // the third row, which the Greek group does not cover.
    for (std::string lemma : {"добро", "жизнь", "имѣти"}) {
        bool found = false;
        for (const AlignedUse& use : uses)
            if (use.x_chain == Chain{lemma, "добро жизнь имѣти"}) found = true;
        INFO("missing usage under " << lemma);
        CHECK(found);
    }
    for (const AlignedUse& use : uses) {
        CHECK(use.x_surface == "добро жизнь имоуща·");
        CHECK(use.y_phrase);
        CHECK(use.y_chain.back() == "ἀπολαύω εὐημερίας");
        CHECK(use.y_members == Chain{"ἀπολαύω", "εὐημερία"});
        CHECK(use.y_surface == "ἀπολαύοντας εὐημερίας");
        CHECK(format_address(use.address) == "4/18a11-12");
    }

    auto reverse = adapt_fixture("fig6", Direction::greek_to_slavonic);
    REQUIRE(reverse.size() == 2);
    for (const AlignedUse& use : reverse) {
        CHECK(use.y_members == Chain{"добро", "жизнь", "имѣти"});
        CHECK(use.y_surface == "добро жизнь имоуща·");
        CHECK(use.x_chain.back() == "ἀπολαύω εὐημερίας");
    }
}

TEST_CASE("variant readings become usages; omission signs never do") {
    auto uses = adapt_fixture("fig7", Direction::slavonic_to_greek);
    CHECK(uses.size() == 8);
    CHECK(distinct_usages(uses) == 8);

    int variant_usages = 0;
    for (const AlignedUse& use : uses)
        if (use.x_variant) ++variant_usages;
    CHECK(variant_usages == 4);

    // Row with "ѥдиночѧдꙑи WH / Ø G": the omission contributes no usage but
    // stays visible as an alternative of the others.
    const AlignedUse& at_5a4 = use_with(uses, {"ѥдиночѧдъ"}, 1);
    CHECK(at_5a4.x_sigla == Chain{"W", "H"});
    REQUIRE(at_5a4.alts.size() == 2);
    CHECK(at_5a4.alts[0].main);
    CHECK(at_5a4.alts[0].surface == "иночѧдꙑи");
    CHECK(at_5a4.alts[0].sigla == "S");
    CHECK(at_5a4.alts[1].omitted);
    CHECK(at_5a4.alts[1].element == "Ø");
    CHECK(at_5a4.alts[1].surface == "Ø");
    CHECK(at_5a4.alts[1].sigla == "G");

    // Witness-prefixed address: the main copy is cited under that witness.
    bool saw_witness_main = false;
    for (const AlignedUse& use : uses)
        if (use.x_variant && format_address(use.address) == "1/W168a25")
            for (const AltDisplay& alt : use.alts)
                if (alt.main && alt.sigla == "W" && alt.surface == "ѥдиночѧдꙑи")
                    saw_witness_main = true;
    CHECK(saw_witness_main);

    auto reverse = adapt_fixture("fig7", Direction::greek_to_slavonic);
    CHECK(reverse.size() == 8);
    CHECK(distinct_usages(reverse) == 4);
    for (const AlignedUse& use : reverse) CHECK_FALSE(use.x_variant);
}

TEST_CASE("a word with no counterpart at all aligns to an omission block") {
    std::string row = make_row({{'E', "1/1a1"}, {'F', "слово"}, {'H', "слово"}, {'L', "om."}});
    auto uses = adapt_text(row + "\n", Direction::slavonic_to_greek);
    REQUIRE(uses.size() == 1);
    CHECK(uses[0].y_om);
    CHECK(uses[0].y_chain == Chain{"om."});
    CHECK(uses[0].y_surface == "om.");
    CHECK(uses[0].alts.empty());

    // The omitted counterpart indexes nothing in the other direction.
    CHECK(adapt_text(row + "\n", Direction::greek_to_slavonic).empty());
}

TEST_CASE("quotation rows carry their marker through adaptation") {
    std::string row = make_row({{'E', "1/1a1"}, {'F', "слово"}, {'H', "слово"}, {'L', "λόγον"},
                                {'M', "λόγος"}},
                               "bq");
    auto uses = adapt_text(row + "\n", Direction::slavonic_to_greek);
    REQUIRE(uses.size() == 1);
    CHECK(uses[0].quote);

    std::string plain = make_row({{'E', "1/1a1"}, {'F', "слово"}, {'H', "слово"}, {'L', "λόγον"},
                                  {'M', "λόγος"}});
    CHECK_FALSE(adapt_text(plain + "\n", Direction::slavonic_to_greek)[0].quote);
}

TEST_CASE("every alignment keeps the conservation ledger balanced") {
    for (std::string stem : {"fig1", "fig4", "fig5", "fig6", "fig7"}) {
        std::string text = testutil::fixture(stem + ".tsv");
        Diagnostics diagnostics;
        Table table = parse_table(text, diagnostics);

        for (Direction direction :
             {Direction::slavonic_to_greek, Direction::greek_to_slavonic}) {
            Lang lang = source_lang(direction);
            const SideColumns& cols = side_columns(lang);

            size_t lemmatised_main_words = 0;
            size_t label_rows = 0;
            size_t variant_readings = 0;
            for (const Row& row : table.rows) {
                if (row.is_boundary()) continue;
                const std::string& word = row.cells[static_cast<size_t>(cols.word)];
                const std::string& lemma = row.cells[static_cast<size_t>(cols.lemma)];
                if (word != "om." && !word.empty() && !lemma.empty()) ++lemmatised_main_words;
                const SideColumns& other = side_columns(
                    lang == Lang::slavonic ? Lang::greek : Lang::slavonic);
                if (row.cells[static_cast<size_t>(other.sublemmas[0])] == gramm_marker)
                    ++label_rows;
                if (!row.cells[static_cast<size_t>(cols.variant_word)].empty()) {
                    Diagnostics scratch;
                    for (const VariantReading& reading :
                         parse_variant_cell(row, lang, SiglaConfig{}, scratch))
                        if (!reading.omitted) ++variant_readings;
                }
            }

            auto uses = adapt(table, direction, SiglaConfig{});
            std::set<std::pair<int, int>> main_ids, variant_ids;
            for (const AlignedUse& use : uses)
                (use.x_variant ? variant_ids : main_ids).insert({use.x_row, use.x_alt});
            INFO(stem << (direction == Direction::slavonic_to_greek ? " slgr" : " grsl"));
            CHECK(main_ids.size() == lemmatised_main_words + label_rows);
            CHECK(variant_ids.size() == variant_readings);
        }
    }
}
