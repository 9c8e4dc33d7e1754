#include "symwalk/excited.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace symwalk {

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("SkewShape: inner diagram not contained in outer");
}

Int dim(const Partition& lambda) {
    return factorial(static_cast<unsigned long>(lambda.size())) / hook_product(lambda, lambda.boxes());
}

BoxSet free_boxes(const Partition& lambda, const BoxSet& seed) {
    BoxSet out;
    for (Box b : seed) {
        if (!lambda.contains({b.row + 1, b.col + 1})) continue;
        const bool blocked =
            std::binary_search(seed.begin(), seed.end(), Box{b.row + 1, b.col}) ||
            std::binary_search(seed.begin(), seed.end(), Box{b.row, b.col + 1}) ||
            std::binary_search(seed.begin(), seed.end(), Box{b.row + 1, b.col + 1});
        if (!blocked) out.push_back(b);
    }
    return out;
}

std::vector<BoxSet> excited_diagrams(const Partition& lambda, const BoxSet& seed) {
    for (Box b : seed)
        if (!lambda.contains(b)) return {};
    std::set<BoxSet> closure;
    std::vector<BoxSet> stack{seed};
    closure.insert(seed);
    while (!stack.empty()) {
        BoxSet current = std::move(stack.back());
        stack.pop_back();
        for (Box b : free_boxes(lambda, current)) {
            BoxSet next = current;
            next.erase(std::find(next.begin(), next.end(), b));
            next.insert(std::upper_bound(next.begin(), next.end(), Box{b.row + 1, b.col + 1}),
                        Box{b.row + 1, b.col + 1});
            if (closure.insert(next).second) stack.push_back(std::move(next));
        }
    }
    return {closure.begin(), closure.end()};
}

std::vector<BoxSet> excited_diagrams(const Partition& lambda, const Partition& seed) {
    return excited_diagrams(lambda, seed.boxes());
}

Int excited_sum(const Partition& lambda, const BoxSet& seed) {
    Int total = 0;
    for (const BoxSet& diagram : excited_diagrams(lambda, seed)) total += hook_product(lambda, diagram);
    return total;
}

Int excited_sum(const Partition& lambda, const Partition& seed) {
    return excited_sum(lambda, seed.boxes());
}

Int skew_dim_naruse(const SkewShape& shape) {
    const Int numerator = dim(shape.outer) * excited_sum(shape.outer, shape.inner);
    const Int denominator =
        falling_factorial(shape.outer.size(), shape.inner.size());
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                denominator.get_mpz_t());
    if (remainder != 0)
        throw std::logic_error("skew_dim_naruse: non-integral result (internal inconsistency)");
    return quotient;
}

Int skew_dim_oracle(const SkewShape& shape, int limit) {
    if (shape.box_count() > limit)
        throw std::invalid_argument("skew_dim_oracle: " + std::to_string(shape.box_count()) +
                                    " boxes exceed the oracle limit of " + std::to_string(limit));
    // Standard tableaux of outer\inner are chains inner = nu_0 < nu_1 < ... < outer
    // adding one box at a time through partitions; count chains layer by layer.
    std::map<std::vector<int>, Int> layer{{shape.inner.parts(), Int(1)}};
    for (int step = 0; step < shape.box_count(); ++step) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [parts, ways] : layer) {
            const Partition nu(parts);
            const int rows = nu.rows();
            for (int r = 1; r <= rows + 1; ++r) {
                Box addable{r, nu.part(r) + 1};
                if (!shape.outer.contains(addable)) continue;
                if (r > 1 && nu.part(r - 1) < addable.col) continue;
                std::vector<int> grown = parts;
                if (r > rows) grown.push_back(1);
                else ++grown[r - 1];
                next[grown] += ways;
            }
        }
        layer = std::move(next);
    }
    const auto it = layer.find(shape.outer.parts());
    return it == layer.end() ? Int(0) : it->second;
}

Int standard_fillings(const BoxSet& boxes, int limit) {
    const int count = static_cast<int>(boxes.size());
    if (count > limit)
        throw std::invalid_argument("standard_fillings: " + std::to_string(count) +
                                    " boxes exceed the limit of " + std::to_string(limit));
    if (count == 0) return 1;
    // Predecessors are the boxes immediately left and immediately above, when
    // present in the set. Linear extensions are counted by a DP over downsets.
    std::vector<std::uint32_t> preds(boxes.size(), 0);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (std::size_t j = 0; j < boxes.size(); ++j) {
            const Box b = boxes[i], p = boxes[j];
            if ((p.row == b.row && p.col == b.col - 1) || (p.col == b.col && p.row == b.row - 1))
                preds[i] |= (1u << j);
        }
    }
    std::map<std::uint32_t, Int> layer{{0u, Int(1)}};
    for (int step = 0; step < count; ++step) {
        std::map<std::uint32_t, Int> next;
        for (const auto& [mask, ways] : layer) {
            for (int i = 0; i < count; ++i) {
                if (mask & (1u << i)) continue;
                if ((preds[i] & ~mask) != 0) continue;
                next[mask | (1u << i)] += ways;
            }
        }
        layer = std::move(next);
    }
    return layer.begin()->second;
}

}  // namespace symwalk
