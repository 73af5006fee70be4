// Witness configuration: which sigla exist on each side of the alignment
// table and which witness is the main copy whose text the edition follows.
//
// The sidecar file format is line oriented:
//
//   # comment
//   slavonic S W G H
//   greek Cr C Cs M Ch
//
// The first siglum after the side name is the main witness; the rest are the
// secondary copies that may appear in variant cells and, for the Slavonic
// side, as address prefixes.
#ifndef CONCORD_CONFIG_HPP
#define CONCORD_CONFIG_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace concord {

enum class Lang { slavonic, greek };

enum class Direction { slavonic_to_greek, greek_to_slavonic };

inline Lang source_lang(Direction d) {
    return d == Direction::slavonic_to_greek ? Lang::slavonic : Lang::greek;
}
inline Lang target_lang(Direction d) {
    return d == Direction::slavonic_to_greek ? Lang::greek : Lang::slavonic;
}
inline const char* direction_tag(Direction d) {
    return d == Direction::slavonic_to_greek ? "slgr" : "grsl";
}

struct SiglaSide {
    std::string main;                 // witness the edition text follows
    std::vector<std::string> others;  // secondary copies, in ranking order
};

struct SiglaConfig {
    SiglaSide slavonic{"S", {"W", "G", "H"}};
    SiglaSide greek{"Cr", {"C", "Cs", "M", "Ch"}};

    const SiglaSide& side(Lang lang) const {
        return lang == Lang::slavonic ? slavonic : greek;
    }

    // Witness ranking used when ordering addresses: each side's main copy
    // first, then its secondary copies, Slavonic side before Greek.
    std::vector<std::string> address_witness_order() const {
        std::vector<std::string> order{slavonic.main};
        order.insert(order.end(), slavonic.others.begin(), slavonic.others.end());
        order.push_back(greek.main);
        order.insert(order.end(), greek.others.begin(), greek.others.end());
        return order;
    }

    bool knows(Lang lang, const std::string& siglum) const {
        const SiglaSide& s = side(lang);
        if (siglum == s.main) return true;
        for (const std::string& o : s.others)
            if (o == siglum) return true;
        return false;
    }

    // The witness whose text serves as the main reading at a given address:
    // a witness prefix overrides the configured main copy for the side whose
    // witness set contains it (sermon snippets missing from the main copy are
    // published after a secondary one).
    std::string main_siglum_at(Lang lang, const std::string& address_witness) const {
        if (!address_witness.empty() && knows(lang, address_witness)) return address_witness;
        return side(lang).main;
    }
};

inline SiglaConfig parse_sigla_config(const std::string& text) {
    SiglaConfig config;
    bool saw_slavonic = false, saw_greek = false;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head) || head.front() == '#') continue;
        SiglaSide side;
        std::string siglum;
        while (fields >> siglum) {
            if (side.main.empty()) side.main = siglum;
            else side.others.push_back(siglum);
        }
        if (side.main.empty())
            throw std::runtime_error("sigla config line " + std::to_string(lineno) +
                                     ": no sigla listed for side '" + head + "'");
        if (head == "slavonic") { config.slavonic = side; saw_slavonic = true; }
        else if (head == "greek") { config.greek = side; saw_greek = true; }
        else throw std::runtime_error("sigla config line " + std::to_string(lineno) +
                                      ": unknown side '" + head + "' (expected slavonic or greek)");
    }
    if (!saw_slavonic || !saw_greek)
        throw std::runtime_error("sigla config must list both a slavonic and a greek side");
    return config;
}

inline std::string default_sigla_config_text() {
    return "# Witness sigla; the first entry per side is the main copy.\n"
           "slavonic S W G H\n"
           "greek Cr C Cs M Ch\n";
}

} // namespace concord

#endif
