#pragma once

// Test-only reference for sentence meanings: sums the product of word
// entries over every joint index assignment, keeping only assignments where
// each cup's two wires carry the same index. Shares no code with contract().

#include "discocat/functor.hpp"
#include "discocat/pregroup.hpp"

#include <vector>

namespace discocat::testing {

inline std::vector<double> naive_meaning(const std::vector<const Tensor*>& states,
                                         const std::vector<Cup>& cups,
                                         const std::vector<std::size_t>& residual_positions) {
    std::vector<std::size_t> dims;
    for (const Tensor* t : states)
        for (auto d : t->dims())
            dims.push_back(d);

    std::size_t out_size = 1;
    for (auto p : residual_positions)
        out_size *= dims[p];
    std::vector<double> out(out_size, 0.0);

    std::vector<std::size_t> idx(dims.size(), 0);
    for (;;) {
        bool consistent = true;
        for (const auto& c : cups)
            consistent = consistent && idx[c.left] == idx[c.right];
        if (consistent) {
            double prod = 1.0;
            std::size_t wire = 0;
            for (const Tensor* t : states) {
                std::vector<std::size_t> local(idx.begin() + static_cast<long>(wire),
                                               idx.begin() + static_cast<long>(wire + t->order()));
                prod *= t->at(std::span<const std::size_t>(local));
                wire += t->order();
            }
            std::size_t o = 0;
            for (auto p : residual_positions)
                o = o * dims[p] + idx[p];
            out[o] += prod;
        }
        std::size_t k = idx.size();
        while (k > 0 && ++idx[k - 1] == dims[k - 1])
            idx[--k] = 0;
        if (k == 0)
            break;
    }
    return out;
}

} // namespace discocat::testing
