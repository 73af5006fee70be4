// concord: build dictionary artifacts from a bilingual word-alignment table.
//
//   concord --tool both --direction both --format plain input.tsv
//
// produces, next to the current directory (or under --out):
//
//   input.list.slgr.txt    verification list, Slavonic->Greek
//   input.list.grsl.txt    verification list, Greek->Slavonic
//   input.index.slgr.txt   publication index, Slavonic->Greek
//   input.index.grsl.txt   publication index, Greek->Slavonic
//
// Validation findings are written to stderr, one per line:
//
//   severity<TAB>row<TAB>column<TAB>message
//
// Exit code 0: artifacts written (warnings allowed unless --strict given);
// 1: the table failed validation and nothing was written; 2: input, output
// or configuration files could not be used.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "concord/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Bilingual concordance builder: verification lists and publication indices"};
    app.get_formatter()->column_width(34);

    concord::RunOptions options;
    std::string tool = "both", direction = "both", format = "plain";

    app.add_option("input", options.input_path, "Alignment table (tab-separated)")
        ->required();
    app.add_option("--tool", tool, "integrate (verification list), generate (publication index), or both")
        ->check(CLI::IsMember({"integrate", "generate", "both"}));
    app.add_option("--direction", direction, "slgr (Slavonic->Greek), grsl (Greek->Slavonic), or both")
        ->check(CLI::IsMember({"slgr", "grsl", "both"}));
    app.add_option("--format", format, "plain (text with ^{...} / **...** markup), wordxml, or both")
        ->check(CLI::IsMember({"plain", "wordxml", "both"}));
    app.add_option("--out", options.out_dir, "Output directory (default: current)");
    app.add_option("--sigla", options.sigla_path, "Witness sigla configuration file");
    app.add_option("--collation-slav", options.collation_slav_path, "Slavonic collation table file");
    app.add_option("--collation-greek", options.collation_greek_path, "Greek collation table file");
    app.add_flag("--strict", options.strict, "Treat warnings as fatal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints its own message; --help lands here with code 0.
        int code = app.exit(e);
        return code == 0 ? 0 : concord::exit_io;
    }

    options.make_list = tool != "generate";
    options.make_index = tool != "integrate";
    options.slav_to_greek = direction != "grsl";
    options.greek_to_slav = direction != "slgr";
    options.plain_text = format != "wordxml";
    options.word_xml = format != "plain";

    return concord::run_pipeline(options, std::cerr);
}
