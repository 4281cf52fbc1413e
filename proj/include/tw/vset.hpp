#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace tw {

// Vertex sets are sorted, duplicate-free vectors of ids. Small sets dominate
// every workload here, so a flat vector beats tree-based sets.
using VSet = std::vector<int>;

inline VSet make_set(VSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline VSet make_set(std::initializer_list<int> il) { return make_set(VSet(il)); }

inline bool contains(const VSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VSet set_union(const VSet& a, const VSet& b) {
    VSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet set_meet(const VSet& a, const VSet& b) {
    VSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet set_minus(const VSet& a, const VSet& b) {
    VSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool is_subset(const VSet& a, const VSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const VSet& a, const VSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

inline VSet with(VSet s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
    return s;
}

inline VSet without(VSet s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
    return s;
}

std::string to_string(const VSet& s);

}  // namespace tw
