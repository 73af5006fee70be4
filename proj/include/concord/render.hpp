// Rendering: both artifacts are built as a small run-styled document model
// and then serialized either as plain text (tabs for indents, **...** for
// bold italic, ^{...} for superscripts) or as a Word-processable XML file.
//
// Verification list, one line per alignment:
//
//   lemma | sublemma: text/counterpart-text (address^{sigla} » other readings)
//
// Publication index:
//
//   lemma (counts)
//       sublemma (counts)
//           • counterpart (counts): address^{sigla} » other readings; ...
//
// Counts give the main-text attestations and, superscripted, the variant
// ones: "(3)", "(2 + 1^{var})", "(1^{var})".  The attestation superscript on
// an address names the indexed side's witnesses first, then the counterpart
// side's after a dash.  Rows flagged as quotations set the two text runs of
// a list line, and the address of an index ref, in bold italic.
#ifndef CONCORD_RENDER_HPP
#define CONCORD_RENDER_HPP

#include <string>
#include <vector>

#include "concord/aggregate.hpp"

namespace concord {

struct Run {
    std::string text;
    bool bold_italic = false;
    bool superscript = false;
};

struct Line {
    int indent = 0;
    std::vector<Run> runs;
};

struct Document {
    std::vector<Line> lines;
};

namespace detail {

inline void plain(Line& line, std::string text) { line.runs.push_back({std::move(text), false, false}); }
inline void super(Line& line, std::string text) { line.runs.push_back({std::move(text), false, true}); }

inline std::string attestation(const AlignedUse& use) {
    std::string x = join_sigla(use.x_sigla), y = join_sigla(use.y_sigla);
    if (!x.empty() && !y.empty()) return x + "-" + y;
    return x + y;
}

// The "»" trail.  Main-text readings come unbracketed, with the witness
// siglum set plain; variant and omitted readings share one bracketed group.
// The index flavour names the most specific lemma element and superscripts
// the variant sigla; the list flavour shows the words themselves with plain
// sigla throughout.
inline void render_alts(Line& line, const std::vector<AltDisplay>& alts, bool index_style) {
    if (alts.empty()) return;
    plain(line, " \xC2\xBB");
    for (const AltDisplay& alt : alts)
        if (alt.main) plain(line, " " + (index_style ? alt.element : alt.surface) + " " + alt.sigla);
    bool open = false;
    for (const AltDisplay& alt : alts) {
        if (alt.main) continue;
        plain(line, open ? std::string(", ") : std::string(" ["));
        open = true;
        if (index_style) {
            plain(line, alt.element);
            super(line, alt.sigla);
        } else {
            plain(line, alt.surface + " " + alt.sigla);
        }
    }
    if (open) plain(line, "]");
}

inline void render_counts(Line& line, int main_count, int variant_count) {
    if (variant_count == 0) {
        plain(line, "(" + std::to_string(main_count) + ")");
        return;
    }
    if (main_count == 0) plain(line, "(" + std::to_string(variant_count));
    else plain(line, "(" + std::to_string(main_count) + " + " + std::to_string(variant_count));
    super(line, "var");
    plain(line, ")");
}

inline void render_ref(Line& line, const AlignedUse& use) {
    line.runs.push_back({format_address(use.address), use.quote, false});
    std::string sup = attestation(use);
    if (!sup.empty()) super(line, sup);
    render_alts(line, use.alts, true);
}

} // namespace detail

namespace detail {

// Heading line shared by both artifacts: the lemma stands alone at depth 0;
// each sublemma level is indented and, in the list flavour, prefixed with
// one "|" per level.  The index appends the usage counts.
inline void render_nodes(Document& doc, const std::map<std::string, IndexNode, Collator>& nodes,
                         int depth, bool index_style) {
    for (const auto& [element, node] : nodes) {
        Line heading;
        heading.indent = depth;
        std::string text;
        if (!index_style && depth > 0) text.append(static_cast<size_t>(depth), '|').append(" ");
        text += element;
        if (index_style) {
            plain(heading, text + " ");
            render_counts(heading, node.main_count(), node.variant_count());
        } else {
            plain(heading, text);
        }
        doc.lines.push_back(std::move(heading));

        for (const auto& [label, bullet] : node.bullets) {
            if (index_style) {
                Line line;
                line.indent = std::max(1, depth);
                plain(line, "\xE2\x80\xA2 " + label + " ");
                render_counts(line, bullet.main_count(), bullet.variant_count());
                plain(line, ": ");
                for (size_t i = 0; i < bullet.uses.size(); ++i) {
                    if (i) plain(line, "; ");
                    render_ref(line, *bullet.uses[i]);
                }
                doc.lines.push_back(std::move(line));
            } else {
                for (const AlignedUse* use : bullet.uses) {
                    Line line;
                    line.indent = std::max(1, depth);
                    plain(line, label + ": ");
                    std::string x_text = use->x_surface;
                    if (use->x_variant) x_text += " " + join_sigla(use->x_sigla);
                    line.runs.push_back({x_text, use->quote, false});
                    plain(line, "/");
                    std::string y_text = use->y_surface;
                    if (use->y_variant) y_text += " " + join_sigla(use->y_sigla);
                    line.runs.push_back({y_text, use->quote && !use->y_om, false});
                    plain(line, " (" + format_address(use->address));
                    std::string sup = attestation(*use);
                    if (!sup.empty()) super(line, sup);
                    render_alts(line, use->alts, false);
                    plain(line, ")");
                    doc.lines.push_back(std::move(line));
                }
            }
        }
        render_nodes(doc, node.children, depth + 1, index_style);
    }
}

} // namespace detail

inline Document render_list(const Index& index) {
    Document doc;
    detail::render_nodes(doc, index.roots, 0, false);
    return doc;
}

inline Document render_index(const Index& index) {
    Document doc;
    detail::render_nodes(doc, index.roots, 0, true);
    return doc;
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string serialize_plain(const Document& doc) {
    std::string out;
    for (const Line& line : doc.lines) {
        for (int i = 0; i < line.indent; ++i) out += '\t';
        for (const Run& run : line.runs) {
            if (run.superscript) out += "^{" + run.text + "}";
            else if (run.bold_italic) out += "**" + run.text + "**";
            else out += run.text;
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace detail

// WordprocessingML (the single-file XML dialect word processors accept
// directly); one paragraph per line, indents expressed in twentieths of a
// point (360 per level = quarter inch).
inline std::string serialize_wordxml(const Document& doc) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
    out += "<?mso-application progid=\"Word.Document\"?>\n";
    out += "<w:wordDocument xmlns:w=\"http://schemas.microsoft.com/office/word/2003/wordml\">\n";
    out += "<w:body>\n";
    for (const Line& line : doc.lines) {
        out += "<w:p>";
        if (line.indent > 0)
            out += "<w:pPr><w:ind w:left=\"" + std::to_string(line.indent * 360) + "\"/></w:pPr>";
        for (const Run& run : line.runs) {
            if (run.text.empty()) continue;
            out += "<w:r>";
            if (run.bold_italic || run.superscript) {
                out += "<w:rPr>";
                if (run.bold_italic) out += "<w:b/><w:i/>";
                if (run.superscript) out += "<w:vertAlign w:val=\"superscript\"/>";
                out += "</w:rPr>";
            }
            out += "<w:t xml:space=\"preserve\">" + detail::xml_escape(run.text) + "</w:t>";
            out += "</w:r>";
        }
        out += "</w:p>\n";
    }
    out += "</w:body>\n";
    out += "</w:wordDocument>\n";
    return out;
}

} // namespace concord

#endif
