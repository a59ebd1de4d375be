#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace distsem {

using FeatureId = std::uint32_t;

// Sparse feature -> weight map, the value type for counts, SPPMI weights and
// composed phrase vectors alike. Entries are sorted by feature id and zero
// weights are never stored.
class SparseVector {
public:
    using Entry = std::pair<FeatureId, double>;

    SparseVector() = default;

    // Sums duplicate ids, drops zero weights, sorts.
    static SparseVector from_unsorted(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVector v;
        v.entries_.reserve(entries.size());
        for (const Entry& e : entries) {
            if (!v.entries_.empty() && v.entries_.back().first == e.first)
                v.entries_.back().second += e.second;
            else
                v.entries_.push_back(e);
        }
        std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0.0; });
        return v;
    }

    // `entries` must already be sorted by id with no duplicates or zeros.
    static SparseVector from_sorted(std::vector<Entry> entries) {
        SparseVector v;
        v.entries_ = std::move(entries);
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    double get(FeatureId id) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), id,
            [](const Entry& e, FeatureId key) { return e.first < key; });
        return (it != entries_.end() && it->first == id) ? it->second : 0.0;
    }

    bool contains(FeatureId id) const { return get(id) != 0.0; }

    double l2_norm() const {
        double s = 0;
        for (const Entry& e : entries_) s += e.second * e.second;
        return std::sqrt(s);
    }

    double sum() const {
        double s = 0;
        for (const Entry& e : entries_) s += e.second;
        return s;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
    double s = 0;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else { s += ia->second * ib->second; ++ia; ++ib; }
    }
    return s;
}

// Featurewise sum over the union of supports.
inline SparseVector add(const SparseVector& a, const SparseVector& b) {
    std::vector<SparseVector::Entry> out;
    out.reserve(a.nnz() + b.nnz());
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) out.push_back(*ia++);
        else if (ia == ea || ib->first < ia->first) out.push_back(*ib++);
        else {
            double w = ia->second + ib->second;
            if (w != 0.0) out.emplace_back(ia->first, w);
            ++ia; ++ib;
        }
    }
    return SparseVector::from_sorted(std::move(out));
}

// Featurewise product over the intersection of supports.
inline SparseVector pointwise_mult(const SparseVector& a, const SparseVector& b) {
    std::vector<SparseVector::Entry> out;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            double w = ia->second * ib->second;
            if (w != 0.0) out.emplace_back(ia->first, w);
            ++ia; ++ib;
        }
    }
    return SparseVector::from_sorted(std::move(out));
}

inline SparseVector scaled(const SparseVector& a, double s) {
    if (s == 0.0) return {};
    std::vector<SparseVector::Entry> out = a.entries();
    for (auto& e : out) e.second *= s;
    return SparseVector::from_sorted(std::move(out));
}

// Unit L2 length; the zero vector stays zero.
inline SparseVector normalized(const SparseVector& a) {
    double n = a.l2_norm();
    if (n == 0.0) return a;
    return scaled(a, 1.0 / n);
}

} // namespace distsem
