#include "symwalk/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symwalk {

BoxSet normalized(BoxSet boxes) {
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    return boxes;
}

BoxSet shifted(const BoxSet& boxes, int dr, int dc) {
    BoxSet out;
    out.reserve(boxes.size());
    for (Box b : boxes) out.push_back({b.row + dr, b.col + dc});
    return out;  // a uniform shift preserves row-major order
}

bool subset_of(const BoxSet& inner, const BoxSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

BoxSet row_diagram(int len, int row, int col) {
    BoxSet out;
    out.reserve(static_cast<std::size_t>(std::max(len, 0)));
    for (int j = 0; j < len; ++j) out.push_back({row, col + j});
    return out;
}

BoxSet column_diagram(int len, int row, int col) {
    BoxSet out;
    out.reserve(static_cast<std::size_t>(std::max(len, 0)));
    for (int i = 0; i < len; ++i) out.push_back({row + i, col});
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& comma_separated) {
    std::vector<int> parts;
    std::stringstream ss(comma_separated);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<std::size_t>(part(1)));
    for (int c = 1; c <= part(1); ++c) {
        int count = 0;
        for (int r = 1; r <= rows(); ++r)
            if (part(r) >= c) ++count;
        conj.push_back(count);
    }
    return Partition(conj);
}

int Partition::diagonal_length() const {
    int d = 0;
    while (part(d + 1) >= d + 1) ++d;
    return d;
}

int Partition::r_sym() const {
    const int longest = std::max(part(1), rows());
    return n_ - longest;
}

BoxSet Partition::boxes() const {
    BoxSet out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

void emit_subdiagrams(const Partition& lambda, int row, int prev, std::vector<int>& stack,
                      std::optional<int> target, std::vector<Partition>& out) {
    const int current = [&] {
        int s = 0;
        for (int v : stack) s += v;
        return s;
    }();
    if (!target || current == *target) out.emplace_back(stack);
    if (row > lambda.rows()) return;
    const int cap = std::min(prev, lambda.part(row));
    for (int p = cap; p >= 1; --p) {
        if (target && current + p > *target) continue;
        stack.push_back(p);
        emit_subdiagrams(lambda, row + 1, p, stack, target, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n == 0 ? 1 : n, stack, out);
    return out;
}

std::vector<Partition> subdiagrams_of(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_subdiagrams(lambda, 1, lambda.part(1), stack, std::nullopt, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

std::vector<Partition> subdiagrams_of(const Partition& lambda, int size) {
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_subdiagrams(lambda, 1, lambda.part(1), stack, size, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

int hook_length(const Partition& lambda, Box b) {
    if (!lambda.contains(b)) throw std::invalid_argument("hook_length: box outside diagram");
    const Partition conj = lambda.conjugate();
    return lambda.part(b.row) - b.col + conj.part(b.col) - b.row + 1;
}

int hook_length_in_set(const BoxSet& set, Box u) {
    int count = 0;
    for (Box b : set) {
        if (b.row == u.row && b.col >= u.col) ++count;
        else if (b.col == u.col && b.row >= u.row) ++count;
    }
    return count;
}

Int hook_product(const Partition& lambda, const BoxSet& boxes) {
    const Partition conj = lambda.conjugate();
    Int product = 1;
    for (Box b : boxes) {
        if (!lambda.contains(b)) throw std::invalid_argument("hook_product: box outside diagram");
        product *= lambda.part(b.row) - b.col + conj.part(b.col) - b.row + 1;
    }
    return product;
}

Slicing::Slicing(const Partition& lambda, SlicingKind kind, std::vector<BoxSet> parts)
    : kind_(kind), parts_(std::move(parts)) {
    std::erase_if(parts_, [](const BoxSet& p) { return p.empty(); });
    BoxSet all;
    for (const BoxSet& p : parts_) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("Slicing: parts overlap");
    if (all != lambda.boxes())
        throw std::invalid_argument("Slicing: parts do not cover the diagram");
}

Slicing Slicing::stairs(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<BoxSet> parts;
    for (int k = 1; k <= lambda.diagonal_length(); ++k) {
        parts.push_back(row_diagram(lambda.part(k) - k + 1, k, k));   // a_k^+ with diagonal box
        parts.push_back(column_diagram(conj.part(k) - k, k + 1, k));  // b_k
    }
    return Slicing(lambda, SlicingKind::stairs, std::move(parts));
}

Slicing Slicing::first_row(const Partition& lambda) {
    BoxSet rest;
    for (int r = 2; r <= lambda.rows(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) rest.push_back({r, c});
    return Slicing(lambda, SlicingKind::first_row, {lambda.first_row_boxes(), rest});
}

Slicing Slicing::triple(const Partition& lambda, int depth) {
    TripleSlices t = triple_slices(lambda, depth);
    return Slicing(lambda, SlicingKind::triple, {t.first_row, t.shallow, t.deep});
}

Int sliced_hook_product(const Partition& lambda, const Slicing& slicing, const BoxSet& boxes) {
    for (Box b : boxes)
        if (!lambda.contains(b))
            throw std::invalid_argument("sliced_hook_product: box outside diagram");
    Int product = 1;
    for (const BoxSet& slice : slicing.parts()) {
        for (Box u : slice) {
            if (std::binary_search(boxes.begin(), boxes.end(), u))
                product *= hook_length_in_set(slice, u);
        }
    }
    return product;
}

TripleSlices triple_slices(const Partition& lambda, int depth) {
    if (depth < 1) throw std::invalid_argument("triple_slices: depth must be >= 1");
    TripleSlices t;
    for (int r = 1; r <= lambda.rows(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) {
            if (r == 1) t.first_row.push_back({r, c});
            else if (std::min(r, c) <= depth) t.shallow.push_back({r, c});
            else t.deep.push_back({r, c});
        }
    }
    return t;
}

Partition deep_partition(const Partition& lambda, int depth) {
    std::vector<int> parts;
    for (int r = depth + 1; r <= lambda.rows(); ++r) {
        const int len = lambda.part(r) - depth;
        if (len <= 0) break;
        parts.push_back(len);
    }
    return Partition(parts);
}

std::vector<int> u_profile(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<int> u;
    u.reserve(static_cast<std::size_t>(lambda.part(1)));
    for (int c = 1; c <= lambda.part(1); ++c) u.push_back(conj.part(c) - 1);
    return u;
}

std::vector<FrobeniusCoordinate> frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<FrobeniusCoordinate> coords;
    for (int k = 1; k <= lambda.diagonal_length(); ++k)
        coords.push_back({lambda.part(k) - k, conj.part(k) - k});
    return coords;
}

}  // namespace symwalk
