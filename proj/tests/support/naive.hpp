// An independently built index: linear scans over plain vectors plus one
// comparison sort per level, nothing shared with the nested-map construction
// under test.  Used to cross-check structure, counts, and ordering.
#ifndef CONCORD_TESTS_NAIVE_HPP
#define CONCORD_TESTS_NAIVE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <concord/concord.hpp>

namespace testnaive {

struct NaiveNode {
    std::string element;
    std::set<std::pair<int, int>> main_ids, variant_ids;
    std::vector<NaiveNode> children;
    std::vector<std::pair<std::string, std::vector<const concord::AlignedUse*>>> bullets;
};

inline NaiveNode* find_or_add(std::vector<NaiveNode>& nodes, const std::string& element) {
    for (NaiveNode& node : nodes)
        if (node.element == element) return &node;
    nodes.push_back(NaiveNode{element, {}, {}, {}, {}});
    return &nodes.back();
}

inline void sort_naive(std::vector<NaiveNode>& nodes, const concord::Collator& x_collator,
                       const concord::Collator& y_collator,
                       const std::vector<std::string>& witness_order) {
    std::sort(nodes.begin(), nodes.end(), [&](const NaiveNode& a, const NaiveNode& b) {
        return x_collator(a.element, b.element);
    });
    for (NaiveNode& node : nodes) {
        std::sort(node.bullets.begin(), node.bullets.end(),
                  [&](const auto& a, const auto& b) { return y_collator(a.first, b.first); });
        for (auto& [label, uses] : node.bullets)
            std::sort(uses.begin(), uses.end(),
                      [&](const concord::AlignedUse* a, const concord::AlignedUse* b) {
                          if (concord::detail::ref_before(*a, *b, witness_order)) return true;
                          if (concord::detail::ref_before(*b, *a, witness_order)) return false;
                          // ref_before ties: preserve adaptation order by identity.
                          return std::make_pair(a->x_row, a->x_alt) < std::make_pair(b->x_row, b->x_alt);
                      });
        sort_naive(node.children, x_collator, y_collator, witness_order);
    }
}

inline std::vector<NaiveNode> naive_index(const std::vector<concord::AlignedUse>& uses) {
    std::vector<NaiveNode> roots;
    for (const concord::AlignedUse& use : uses) {
        NaiveNode* node = nullptr;
        for (const std::string& element : use.x_chain) {
            node = find_or_add(node ? node->children : roots, element);
            (use.x_variant ? node->variant_ids : node->main_ids).emplace(use.x_row, use.x_alt);
        }
        if (!node) continue;
        std::vector<const concord::AlignedUse*>* refs = nullptr;
        std::string label = concord::counterpart_label(use);
        for (auto& [existing, uses_here] : node->bullets)
            if (existing == label) refs = &uses_here;
        if (!refs) {
            node->bullets.emplace_back(label, std::vector<const concord::AlignedUse*>{});
            refs = &node->bullets.back().second;
        }
        refs->push_back(&use);
    }
    return roots;
}

// Structural equality against the nested-map index; on mismatch, `where`
// names the first difference.
inline bool same_structure(const std::map<std::string, concord::IndexNode, concord::Collator>& map_nodes,
                           const std::vector<NaiveNode>& naive_nodes,
                           const std::vector<std::string>& witness_order, std::string& where) {
    if (map_nodes.size() != naive_nodes.size()) {
        where = "sibling count " + std::to_string(map_nodes.size()) + " vs " +
                std::to_string(naive_nodes.size());
        return false;
    }
    size_t i = 0;
    for (const auto& [element, node] : map_nodes) {
        const NaiveNode& naive = naive_nodes[i++];
        if (element != naive.element) {
            where = "element '" + element + "' vs '" + naive.element + "'";
            return false;
        }
        if (node.main_ids != naive.main_ids || node.variant_ids != naive.variant_ids) {
            where = "usage sets under '" + element + "'";
            return false;
        }
        if (node.bullets.size() != naive.bullets.size()) {
            where = "bullet count under '" + element + "'";
            return false;
        }
        size_t j = 0;
        for (const auto& [label, bullet] : node.bullets) {
            const auto& [naive_label, naive_uses] = naive.bullets[j++];
            if (label != naive_label) {
                where = "bullet '" + label + "' vs '" + naive_label + "' under '" + element + "'";
                return false;
            }
            if (bullet.uses.size() != naive_uses.size()) {
                where = "ref count in '" + element + "' / '" + label + "'";
                return false;
            }
            for (size_t k = 0; k < bullet.uses.size(); ++k) {
                const concord::AlignedUse* a = bullet.uses[k];
                const concord::AlignedUse* b = naive_uses[k];
                // Distinct objects are acceptable only when the ref order
                // genuinely ties (the sorts may then disagree on placement).
                bool tie = !concord::detail::ref_before(*a, *b, witness_order) &&
                           !concord::detail::ref_before(*b, *a, witness_order);
                if (a != b && !tie) {
                    where = "ref " + std::to_string(k) + " in '" + element + "' / '" + label + "'";
                    return false;
                }
            }
        }
        if (!same_structure(node.children, naive.children, witness_order, where)) {
            where = "'" + element + "' > " + where;
            return false;
        }
    }
    return true;
}

} // namespace testnaive

#endif
