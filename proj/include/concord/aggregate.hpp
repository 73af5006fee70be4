// Aggregation: orders alignments for the verification list and folds them
// into the nested structure of the publication index.
//
// The index nests by the indexed side's lemma chain (lemma, sublemma, ...).
// Each node counts the distinct usages below it, main text and variant
// attestations separately.  At the node where a usage's chain ends, the
// usage's counterparts appear as bullet blocks, one per distinct counterpart
// heading, with the block's own main/variant split describing how the
// counterpart readings are attested.
#ifndef CONCORD_AGGREGATE_HPP
#define CONCORD_AGGREGATE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concord/adapt.hpp"
#include "concord/collation.hpp"

namespace concord {

// Heading text of a counterpart block: the most specific element first,
// phrases decomposed into their members.
inline std::string counterpart_label(const AlignedUse& use) {
    if (use.y_om) return omission_word;
    std::string label;
    if (use.y_phrase) {
        label = use.y_chain.front() + " \xE2\x86\x92 ";
        for (size_t i = 0; i < use.y_members.size(); ++i) {
            if (i) label += " & ";
            label += use.y_members[i];
        }
    } else if (use.y_chain.size() >= 2) {
        label = use.y_chain.back() + " \xE2\x86\x92 " + use.y_chain.front();
    } else {
        label = use.y_chain.front();
    }
    if (use.y_gramm) label += std::string(" ") + gramm_marker;
    return label;
}

struct IndexBullet {
    std::vector<const AlignedUse*> uses;  // in ref order

    int main_count() const {
        int n = 0;
        for (const AlignedUse* use : uses)
            if (!use->y_variant) ++n;
        return n;
    }
    int variant_count() const { return static_cast<int>(uses.size()) - main_count(); }
};

struct IndexNode {
    std::set<std::pair<int, int>> main_ids, variant_ids;  // distinct usages below
    std::map<std::string, IndexNode, Collator> children;
    std::map<std::string, IndexBullet, Collator> bullets;

    IndexNode(const Collator& x, const Collator& y) : children(x), bullets(y) {}

    int main_count() const { return static_cast<int>(main_ids.size()); }
    int variant_count() const { return static_cast<int>(variant_ids.size()); }
};

struct Index {
    std::map<std::string, IndexNode, Collator> roots;

    explicit Index(const Collator& x) : roots(x) {}
};

namespace detail {

// Refs inside a bullet run in address order; equal addresses fall back to
// the attestation, main text first.
inline bool ref_before(const AlignedUse& a, const AlignedUse& b,
                       const std::vector<std::string>& witness_order) {
    int by_address = compare_addresses(a.address, b.address, witness_order);
    if (by_address != 0) return by_address < 0;
    if (a.x_variant != b.x_variant) return !a.x_variant;
    if (a.x_sigla != b.x_sigla) return a.x_sigla < b.x_sigla;
    if (a.y_variant != b.y_variant) return !a.y_variant;
    return a.y_sigla < b.y_sigla;
}

} // namespace detail

inline Index aggregate_index(const std::vector<AlignedUse>& uses, const Collator& x_collator,
                             const Collator& y_collator, const std::vector<std::string>& witness_order) {
    Index index(x_collator);
    for (const AlignedUse& use : uses) {
        if (use.x_chain.empty()) continue;
        IndexNode* node = nullptr;
        for (const std::string& element : use.x_chain) {
            auto& slot = node ? node->children : index.roots;
            node = &slot.try_emplace(element, x_collator, y_collator).first->second;
            (use.x_variant ? node->variant_ids : node->main_ids).emplace(use.x_row, use.x_alt);
        }
        node->bullets.try_emplace(counterpart_label(use)).first->second.uses.push_back(&use);
    }
    auto sort_refs = [&](auto&& self, std::map<std::string, IndexNode, Collator>& nodes) -> void {
        for (auto& [element, node] : nodes) {
            for (auto& [label, bullet] : node.bullets)
                std::stable_sort(bullet.uses.begin(), bullet.uses.end(),
                                 [&](const AlignedUse* a, const AlignedUse* b) {
                                     return detail::ref_before(*a, *b, witness_order);
                                 });
            self(self, node.children);
        }
    };
    sort_refs(sort_refs, index.roots);
    return index;
}

} // namespace concord

#endif
