// Diagnostics carried through parsing and validation.  Every message is
// attached to a 1-based input row and a spreadsheet-style column letter so a
// philologist can find the offending cell in the source table.
#ifndef CONCORD_DIAGNOSTICS_HPP
#define CONCORD_DIAGNOSTICS_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace concord {

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    int row = 0;             // 1-based physical line in the input, 0 = whole file
    std::string column;      // "A".."U" for cells, "-" for record-level issues
    std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

// Stable order by (row, column); ties keep insertion order so repeated runs
// print identical reports.
inline void sort_diagnostics(Diagnostics& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.column < b.column;
    });
}

inline std::string format_diagnostic(const Diagnostic& d) {
    std::string out = d.severity == Severity::error ? "error" : "warning";
    out += '\t';
    out += std::to_string(d.row);
    out += '\t';
    out += d.column.empty() ? "-" : d.column;
    out += '\t';
    out += d.message;
    return out;
}

} // namespace concord

#endif
