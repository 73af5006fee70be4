// End-to-end plumbing shared by the command-line tool and the tests: load
// configuration, parse and validate the table, and produce the requested
// artifacts.
//
// Exit discipline: 0 on success (warnings allowed unless --strict), 1 when
// validation refuses the table (no artifacts are written), 2 for I/O or
// configuration trouble.
#ifndef CONCORD_PIPELINE_HPP
#define CONCORD_PIPELINE_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "concord/adapt.hpp"
#include "concord/aggregate.hpp"
#include "concord/collation.hpp"
#include "concord/config.hpp"
#include "concord/render.hpp"
#include "concord/table.hpp"

namespace concord {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_table = 1;
inline constexpr int exit_io = 2;

struct RunOptions {
    std::string input_path;
    bool make_list = true;    // --tool integrate
    bool make_index = true;   // --tool generate
    bool slav_to_greek = true;
    bool greek_to_slav = true;
    bool plain_text = true;
    bool word_xml = false;
    std::string out_dir = ".";
    std::string sigla_path;            // empty: built-in defaults
    std::string collation_slav_path;
    std::string collation_greek_path;
    bool strict = false;               // warnings also refuse the table
};

struct PipelineConfig {
    SiglaConfig sigla;
    std::shared_ptr<const CollationTable> slavonic;
    std::shared_ptr<const CollationTable> greek;
};

struct Artifacts {
    std::vector<std::pair<std::string, std::string>> files;  // name, content
    Diagnostics diagnostics;
    bool rejected = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace detail

inline PipelineConfig load_pipeline_config(const RunOptions& options) {
    PipelineConfig config;
    config.sigla = parse_sigla_config(options.sigla_path.empty() ? default_sigla_config_text()
                                                                 : detail::read_file(options.sigla_path));
    config.slavonic = std::make_shared<CollationTable>(parse_collation_table(
        options.collation_slav_path.empty() ? default_slavonic_collation_text()
                                            : detail::read_file(options.collation_slav_path)));
    config.greek = std::make_shared<CollationTable>(parse_collation_table(
        options.collation_greek_path.empty() ? default_greek_collation_text()
                                             : detail::read_file(options.collation_greek_path)));
    return config;
}

// Pure core: everything except the file system.
inline Artifacts build_artifacts(const std::string& input, const std::string& stem,
                                 const RunOptions& options, const PipelineConfig& config) {
    Artifacts artifacts;
    Table table = parse_table(input, artifacts.diagnostics);
    Diagnostics checks = validate_table(table, config.sigla);
    artifacts.diagnostics.insert(artifacts.diagnostics.end(), checks.begin(), checks.end());
    sort_diagnostics(artifacts.diagnostics);
    bool warnings = false;
    for (const Diagnostic& d : artifacts.diagnostics)
        if (d.severity == Severity::warning) warnings = true;
    if (has_errors(artifacts.diagnostics) || (options.strict && warnings)) {
        artifacts.rejected = true;
        return artifacts;
    }

    for (Direction direction : {Direction::slavonic_to_greek, Direction::greek_to_slavonic}) {
        if (direction == Direction::slavonic_to_greek && !options.slav_to_greek) continue;
        if (direction == Direction::greek_to_slavonic && !options.greek_to_slav) continue;
        Collator x{direction == Direction::slavonic_to_greek ? config.slavonic : config.greek};
        Collator y{direction == Direction::slavonic_to_greek ? config.greek : config.slavonic};
        std::vector<AlignedUse> uses = adapt(table, direction, config.sigla);
        Index index = aggregate_index(uses, x, y, config.sigla.address_witness_order());

        std::vector<std::pair<std::string, Document>> documents;
        if (options.make_list) documents.emplace_back("list", render_list(index));
        if (options.make_index) documents.emplace_back("index", render_index(index));

        for (const auto& [kind, doc] : documents) {
            std::string base = stem + "." + kind + "." + direction_tag(direction);
            if (options.plain_text) artifacts.files.emplace_back(base + ".txt", serialize_plain(doc));
            if (options.word_xml) artifacts.files.emplace_back(base + ".xml", serialize_wordxml(doc));
        }
    }
    return artifacts;
}

// Full run.  Diagnostics go to err, one per line, tab-separated.
inline int run_pipeline(const RunOptions& options, std::ostream& err) {
    PipelineConfig config;
    std::string input;
    try {
        config = load_pipeline_config(options);
        input = detail::read_file(options.input_path);
    } catch (const std::exception& e) {
        err << "error\t-\t-\t" << e.what() << "\n";
        return exit_io;
    }

    std::string stem = std::filesystem::path(options.input_path).stem().string();
    Artifacts artifacts = build_artifacts(input, stem, options, config);
    for (const Diagnostic& d : artifacts.diagnostics) err << format_diagnostic(d) << "\n";
    if (artifacts.rejected) return exit_invalid_table;

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    for (const auto& [name, content] : artifacts.files) {
        std::filesystem::path path = std::filesystem::path(options.out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            err << "error\t-\t-\tcannot write " << path.string() << "\n";
            return exit_io;
        }
        out << content;
        if (!out.flush()) {
            err << "error\t-\t-\tcannot write " << path.string() << "\n";
            return exit_io;
        }
    }
    return exit_ok;
}

} // namespace concord

#endif
