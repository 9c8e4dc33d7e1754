#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symwalk/numeric.hpp"

namespace symwalk {

// Boxes use (row, col), both 1-based: row 1 is the first (longest) row, col 1
// the leftmost column. An excitation moves (r,c) -> (r+1,c+1). A unit test
// pins this convention via the hook lengths 5,3 of the first two boxes of
// (3,3,1).
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

// Canonical box sets are sorted row-major (lexicographic on (row, col)) and
// duplicate-free; every function in this library returns them that way.
using BoxSet = std::vector<Box>;

BoxSet normalized(BoxSet boxes);
BoxSet shifted(const BoxSet& boxes, int dr, int dc);
bool subset_of(const BoxSet& inner, const BoxSet& outer);

// A row diagram [len] anchored at (row, col), and its column counterpart.
BoxSet row_diagram(int len, int row = 1, int col = 1);
BoxSet column_diagram(int len, int row = 1, int col = 1);

// Integer partition; doubles as a Young diagram and as the label of an
// irreducible representation. The empty partition is valid (size 0).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& comma_separated);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // part(i) is 1-based and 0 beyond the last row.
    int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }

    bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
    bool contains(const Partition& inner) const;

    Partition conjugate() const;
    int diagonal_length() const;
    // n - max(lambda_1, lambda'_1), the symmetrized level.
    int r_sym() const;

    BoxSet boxes() const;
    BoxSet first_row_boxes() const { return row_diagram(part(1)); }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// All sub Young diagrams mu of lambda (mu_i <= lambda_i), optionally of fixed
// size; canonical (reverse-lexicographic) order.
std::vector<Partition> subdiagrams_of(const Partition& lambda);
std::vector<Partition> subdiagrams_of(const Partition& lambda, int size);

Partition conjugate(const Partition& lambda);

// Hook length of b in lambda: arm + leg + 1. Throws if b lies outside lambda.
int hook_length(const Partition& lambda, Box b);

// |E ∩ h_u| for an arbitrary finite box set E: boxes of E in u's row at
// columns >= u.col plus boxes in u's column at rows >= u.row (u counted once).
int hook_length_in_set(const BoxSet& set, Box u);

// Product of hook lengths of E's boxes, computed in lambda. H(lambda, {}) = 1.
Int hook_product(const Partition& lambda, const BoxSet& boxes);

enum class SlicingKind { stairs, first_row, triple };

// A set partition of lambda's boxes into non-empty slices; disjointness and
// exact cover are checked on construction.
class Slicing {
public:
    Slicing(const Partition& lambda, SlicingKind kind, std::vector<BoxSet> parts);

    static Slicing stairs(const Partition& lambda);
    static Slicing first_row(const Partition& lambda);
    static Slicing triple(const Partition& lambda, int depth);

    SlicingKind kind() const { return kind_; }
    const std::vector<BoxSet>& parts() const { return parts_; }

private:
    SlicingKind kind_;
    std::vector<BoxSet> parts_;
};

// Product over E of hook lengths computed inside each box's own slice.
Int sliced_hook_product(const Partition& lambda, const Slicing& slicing, const BoxSet& boxes);

// Depth-M decomposition (first row, shallow remainder, deep center). The
// three sets are disjoint and cover lambda; any of them may be empty.
struct TripleSlices {
    BoxSet first_row;
    BoxSet shallow;  // hooks <= M, minus the first row
    BoxSet deep;     // hooks > M (both coordinates > M)
};
TripleSlices triple_slices(const Partition& lambda, int depth);

// The deep center lambda^{>M} as an unshifted partition.
Partition deep_partition(const Partition& lambda, int depth);

// u_i = number of boxes strictly above the first row in column i, i = 1..lambda_1.
std::vector<int> u_profile(const Partition& lambda);

struct FrobeniusCoordinate {
    int arm = 0;
    int leg = 0;
    auto operator<=>(const FrobeniusCoordinate&) const = default;
};
// Arm/leg lengths of the diagonal boxes; sum of (arm + leg + 1) equals n.
std::vector<FrobeniusCoordinate> frobenius(const Partition& lambda);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ULL;
        for (int v : p.parts()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace symwalk
